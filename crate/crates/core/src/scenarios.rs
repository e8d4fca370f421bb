//! The worked examples: the flag variety M1, the toric manifold M2, Tolman's
//! M3 and the generalized Hirzebruch family H_n.

use crate::cutting::{cut_u2, ChamberCut, CutSpec};
use crate::document::{Document, Payload};
use crate::error::{Error, Result};
use crate::geometry::{
    faces3, hull2, ratio, DelzantCheck, LatticeVector, Point2, Point3, Polytope3, Rational,
};
use crate::group::Lambda;
use crate::obstruction::{tolman_check, Verdict};
use crate::xray::{chamber_to_xray, flag_xray, toric_xray, ChamberData, XRay};

const TOLMAN_FIXTURE: &str = include_str!("../fixtures/tolman_m3.json");

/// The Gelfand–Cetlin rectangle `[λ2, λ1] × [λ3, λ2]` of a generic coadjoint
/// orbit of U(3), seen by U(2). The corner `(λ2, λ2)` sits on the wall.
pub fn gelfand_cetlin(lambda: &Lambda) -> Result<ChamberData> {
    let [l1, l2, l3] = lambda.values();
    let polygon = hull2(&[
        Point2::new(l2, l3),
        Point2::new(l1, l3),
        Point2::new(l1, l2),
        Point2::new(l2, l2),
    ])?;
    ChamberData::new(
        polygon,
        vec![
            Point2::new(l2, l3),
            Point2::new(l1, l3),
            Point2::new(l1, l2),
        ],
    )
}

pub fn m1_flag(lambda: &Lambda) -> Result<XRay> {
    flag_xray(lambda)
}

/// Blow-up of a weighted projective space at a fixed point: the frustum over
/// the triangle with vertices `(0,0)`, `(8,0)`, `(0,8)` capped at height 1.
pub fn m2_polytope() -> Result<Polytope3> {
    let p = faces3(&[
        Point3::int(0, 0, 0),
        Point3::int(8, 0, 0),
        Point3::int(0, 8, 0),
        Point3::int(2, 2, 1),
        Point3::int(4, 2, 1),
        Point3::int(2, 4, 1),
    ])?;
    if let Some(bad) = p.delzant_check().first_failure() {
        return Err(Error::NotDelzant {
            vertex: p.vertices()[bad.vertex].to_string(),
        });
    }
    Ok(p)
}

pub fn m2_toric() -> Result<(Polytope3, XRay)> {
    let p = m2_polytope()?;
    let x = toric_xray(&p)?;
    Ok((p, x))
}

/// Tolman's X-ray, transcribed by hand rather than computed.
pub fn tolman_fixture() -> XRay {
    match Document::decode(TOLMAN_FIXTURE)
        .expect("shipped fixture decodes")
        .payload
    {
        Payload::XRay(x) => x,
        _ => unreachable!("fixture is an X-ray document"),
    }
}

/// Parameters of `H_n`: the flag data for `λ` cut along `Φ1 + nΦ2 <= a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HnParams {
    pub n: i64,
    pub lambda: Lambda,
    pub level: Rational,
}

impl HnParams {
    /// `λ = (n+3, 1, 0)` and `a = n+2` for `n >= 1`; `λ = (5, 1, 0)` and
    /// `a = (6+n)/2` for `n <= -1`; `λ = (3, 1, 0)` uncut for `n = 0`.
    pub fn defaults(n: i64) -> Result<Self> {
        let (lambda, level) = match n {
            0 => (Lambda::int(3, 1, 0)?, Rational::from(0)),
            n if n >= 1 => (Lambda::int(n + 3, 1, 0)?, Rational::from(n + 2)),
            n => (Lambda::int(5, 1, 0)?, ratio(6 + n, 2)),
        };
        let params = Self { n, lambda, level };
        params.check()?;
        Ok(params)
    }

    pub fn circle(&self) -> LatticeVector {
        LatticeVector::new(1, self.n)
    }

    /// The cut line must cross both horizontal edges of the rectangle strictly
    /// between their endpoints.
    pub fn check(&self) -> Result<()> {
        if self.n == 0 {
            return Ok(());
        }
        let [l1, l2, l3] = self.lambda.values();
        let n = Rational::from(self.n);
        for y in [l3, l2] {
            let x = self.level - n * y;
            if !(l2 < x && x < l1) {
                return Err(Error::InvalidParameter(format!(
                    "cut x + {}y = {} leaves the rectangle edge y = {y} at x = {x}",
                    self.n, self.level
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hirzebruch {
    pub params: HnParams,
    pub chamber: ChamberData,
    /// Absent for `n = 0`.
    pub cut: Option<ChamberCut>,
    pub xray: XRay,
    pub verdict: Verdict,
}

pub fn hirzebruch(params: &HnParams) -> Result<Hirzebruch> {
    params.check()?;
    let flag = gelfand_cetlin(&params.lambda)?;
    let (chamber, cut) = if params.n == 0 {
        (flag, None)
    } else {
        let cut = cut_u2(&flag, &CutSpec::new(params.circle(), params.level)?)?;
        (cut.chamber.clone(), Some(cut))
    };
    let xray = chamber_to_xray(&chamber)?;
    let verdict = tolman_check(&xray)?;
    Ok(Hirzebruch {
        params: *params,
        chamber,
        cut,
        xray,
        verdict,
    })
}

/// `H_2` with the default parameters.
pub fn tolman_m3() -> Result<Hirzebruch> {
    hirzebruch(&HnParams::defaults(2)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub params: HnParams,
    pub verdict: Verdict,
}

/// Runs `H_n` with default parameters for every `n` in `from..=to`.
pub fn hn_sweep(from: i64, to: i64) -> Result<Vec<SweepRow>> {
    if from > to {
        return Err(Error::InvalidParameter(format!(
            "empty sweep range {from}..={to}"
        )));
    }
    (from..=to)
        .map(|n| {
            let h = hirzebruch(&HnParams::defaults(n)?)?;
            Ok(SweepRow {
                params: h.params,
                verdict: h.verdict,
            })
        })
        .collect()
}
