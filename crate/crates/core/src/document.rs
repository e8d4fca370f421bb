//! JSON documents for polytopes, chamber data, X-rays, verdicts and sweeps.
//!
//! Every document is an object `{"kind", "payload", "meta"}`. Rationals are
//! strings `"p/q"` in lowest terms (`"p"` for integers), points are arrays,
//! and edges refer to fixed points by index. Unknown fields are rejected.
//! Decoding rebuilds the typed value through the library's own constructors,
//! so a decoded document satisfies the same invariants as a computed one.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, DeserializeOwned, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::{
    faces3, hull2, LatticeVector, LatticeVector3, Point2, Point3, Polygon, Polytope3, Rational,
    Segment,
};
use crate::group::Lambda;
use crate::obstruction::{ConeCandidate, ObstructionCertificate, Verdict};
use crate::scenarios::{HnParams, SweepRow};
use crate::xray::{ChamberData, Weight, WeightedFixedPoint, XRay, XRayEdge};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "polytope3")]
    Polytope3,
    #[serde(rename = "chamber")]
    Chamber,
    #[serde(rename = "xray")]
    XRay,
    #[serde(rename = "verdict")]
    Verdict,
    #[serde(rename = "sweep")]
    Sweep,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Polytope3 => "polytope3",
            Kind::Chamber => "chamber",
            Kind::XRay => "xray",
            Kind::Verdict => "verdict",
            Kind::Sweep => "sweep",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    pub tool_version: String,
    /// Where the payload came from, e.g. `scenario hn --n 2`.
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Polytope3(Polytope3),
    Chamber(ChamberData),
    XRay(XRay),
    Verdict(Verdict),
    Sweep(Vec<SweepRow>),
}

impl Payload {
    pub fn kind(&self) -> Kind {
        match self {
            Payload::Polytope3(_) => Kind::Polytope3,
            Payload::Chamber(_) => Kind::Chamber,
            Payload::XRay(_) => Kind::XRay,
            Payload::Verdict(_) => Kind::Verdict,
            Payload::Sweep(_) => Kind::Sweep,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub payload: Payload,
    pub meta: Meta,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    kind: Kind,
    payload: serde_json::Value,
    meta: Meta,
}

fn doc_err(path: impl Into<String>, message: impl fmt::Display) -> Error {
    Error::Document {
        path: path.into(),
        message: message.to_string(),
    }
}

fn wrong_kind(want: Kind, got: Kind) -> Error {
    doc_err("kind", format!("expected a {want} document, found {got}"))
}

impl Document {
    pub fn new(payload: Payload, provenance: impl Into<String>) -> Self {
        Self {
            payload,
            meta: Meta {
                tool_version: TOOL_VERSION.to_string(),
                provenance: provenance.into(),
            },
        }
    }

    pub fn kind(&self) -> Kind {
        self.payload.kind()
    }

    pub fn encode(&self) -> String {
        let payload = match &self.payload {
            Payload::Polytope3(p) => serde_json::to_value(PolytopeDto::from(p)),
            Payload::Chamber(c) => serde_json::to_value(ChamberDto::from(c)),
            Payload::XRay(x) => serde_json::to_value(XRayDto::from(x)),
            Payload::Verdict(v) => serde_json::to_value(VerdictDto::from(v)),
            Payload::Sweep(rows) => serde_json::to_value(SweepDto {
                rows: rows.iter().map(SweepRowDto::from).collect(),
            }),
        }
        .expect("payload serializes");
        let env = Envelope {
            kind: self.kind(),
            payload,
            meta: self.meta.clone(),
        };
        let mut text = serde_json::to_string_pretty(&env).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn decode(text: &str) -> Result<Self> {
        let mut de = serde_json::Deserializer::from_str(text);
        let env: Envelope = serde_path_to_error::deserialize(&mut de)
            .map_err(|e| doc_err(e.path().to_string(), e.inner()))?;
        de.end().map_err(|e| doc_err(".", e))?;
        let payload = match env.kind {
            Kind::Polytope3 => Payload::Polytope3(payload::<PolytopeDto>(env.payload)?.build()?),
            Kind::Chamber => Payload::Chamber(payload::<ChamberDto>(env.payload)?.build()?),
            Kind::XRay => Payload::XRay(payload::<XRayDto>(env.payload)?.build()?),
            Kind::Verdict => {
                Payload::Verdict(payload::<VerdictDto>(env.payload)?.build("payload")?)
            }
            Kind::Sweep => Payload::Sweep(payload::<SweepDto>(env.payload)?.build()?),
        };
        Ok(Self {
            payload,
            meta: env.meta,
        })
    }

    pub fn into_xray(self) -> Result<XRay> {
        match self.payload {
            Payload::XRay(x) => Ok(x),
            p => Err(wrong_kind(Kind::XRay, p.kind())),
        }
    }

    pub fn into_chamber(self) -> Result<ChamberData> {
        match self.payload {
            Payload::Chamber(c) => Ok(c),
            p => Err(wrong_kind(Kind::Chamber, p.kind())),
        }
    }

    pub fn into_polytope(self) -> Result<Polytope3> {
        match self.payload {
            Payload::Polytope3(p) => Ok(p),
            p => Err(wrong_kind(Kind::Polytope3, p.kind())),
        }
    }

    pub fn into_verdict(self) -> Result<Verdict> {
        match self.payload {
            Payload::Verdict(v) => Ok(v),
            p => Err(wrong_kind(Kind::Verdict, p.kind())),
        }
    }
}

fn payload<T: DeserializeOwned>(value: serde_json::Value) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let inner = e.path().to_string();
        let path = if inner == "." {
            "payload".to_string()
        } else {
            format!("payload.{inner}")
        };
        doc_err(path, e.inner())
    })
}

/// A rational in its string form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct R(Rational);

impl Serialize for R {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for R {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct RVisitor;
        impl Visitor<'_> for RVisitor {
            type Value = R;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<R, E> {
                Rational::from_str(v.trim())
                    .map(R)
                    .map_err(|e| E::custom(format!("bad rational {v:?}: {e}")))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<R, E> {
                Ok(R(v.into()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<R, E> {
                i64::try_from(v).map(|v| R(v.into())).map_err(E::custom)
            }
        }
        d.deserialize_any(RVisitor)
    }
}

type P2 = [R; 2];
type P3 = [R; 3];

fn p2(p: &Point2) -> P2 {
    [R(p.x), R(p.y)]
}

fn from_p2(p: &P2) -> Point2 {
    Point2::new(p[0].0, p[1].0)
}

fn p3(p: &Point3) -> P3 {
    [R(p.x), R(p.y), R(p.z)]
}

fn from_p3(p: &P3) -> Point3 {
    Point3::new(p[0].0, p[1].0, p[2].0)
}

fn v2(v: &LatticeVector) -> [i64; 2] {
    [v.x, v.y]
}

fn primitive2(v: [i64; 2], path: String) -> Result<LatticeVector> {
    let lv = LatticeVector::new(v[0], v[1]);
    if lv.is_primitive() {
        Ok(lv)
    } else {
        Err(doc_err(path, format!("direction {lv} is not primitive")))
    }
}

fn polygon(points: &[P2], path: &str) -> Result<Polygon> {
    Polygon::new(points.iter().map(from_p2).collect()).map_err(|e| doc_err(path, e))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FacetDto {
    normal: [i64; 3],
    level: R,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeDto {
    vertices: Vec<P3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    facets: Option<Vec<FacetDto>>,
}

impl From<&Polytope3> for PolytopeDto {
    fn from(p: &Polytope3) -> Self {
        Self {
            vertices: p.vertices().iter().map(p3).collect(),
            edges: Some(p.edges().iter().map(|e| [e.ends.0, e.ends.1]).collect()),
            facets: Some(
                p.facets()
                    .iter()
                    .map(|f| FacetDto {
                        normal: [f.normal.x, f.normal.y, f.normal.z],
                        level: R(f.level),
                    })
                    .collect(),
            ),
        }
    }
}

impl PolytopeDto {
    fn build(self) -> Result<Polytope3> {
        let points: Vec<Point3> = self.vertices.iter().map(from_p3).collect();
        let p = faces3(&points)?;
        if p.vertices().len() != points.len() {
            let k = points
                .iter()
                .position(|q| !p.vertices().contains(q))
                .unwrap_or(0);
            return Err(doc_err(
                format!("payload.vertices[{k}]"),
                "not a vertex of the hull",
            ));
        }
        if let Some(edges) = self.edges {
            let given: BTreeSet<(usize, usize)> = edges
                .iter()
                .map(|e| (e[0].min(e[1]), e[0].max(e[1])))
                .collect();
            let actual: BTreeSet<(usize, usize)> = p.edges().iter().map(|e| e.ends).collect();
            if given != actual || given.len() != edges.len() {
                return Err(doc_err(
                    "payload.edges",
                    "edges disagree with the hull of the vertices",
                ));
            }
        }
        if let Some(facets) = self.facets {
            let given: BTreeSet<(LatticeVector3, Rational)> = facets
                .iter()
                .map(|f| {
                    (
                        LatticeVector3::new(f.normal[0], f.normal[1], f.normal[2]),
                        f.level.0,
                    )
                })
                .collect();
            let actual: BTreeSet<(LatticeVector3, Rational)> =
                p.facets().iter().map(|f| (f.normal, f.level)).collect();
            if given != actual || given.len() != facets.len() {
                return Err(doc_err(
                    "payload.facets",
                    "facets disagree with the hull of the vertices",
                ));
            }
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChamberDto {
    polygon: Vec<P2>,
    fixed_vertices: Vec<P2>,
}

impl From<&ChamberData> for ChamberDto {
    fn from(c: &ChamberData) -> Self {
        Self {
            polygon: c.polygon().vertices().iter().map(p2).collect(),
            fixed_vertices: c.fixed_vertices().iter().map(p2).collect(),
        }
    }
}

impl ChamberDto {
    fn build(self) -> Result<ChamberData> {
        ChamberData::new(
            polygon(&self.polygon, "payload.polygon")?,
            self.fixed_vertices.iter().map(from_p2).collect(),
        )
    }
}

fn one() -> u32 {
    1
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightDto {
    direction: [i64; 2],
    #[serde(default = "one")]
    multiplicity: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FixedPointDto {
    position: P2,
    weights: Vec<WeightDto>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDto {
    ends: [usize; 2],
    direction: [i64; 2],
    rank: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct XRayDto {
    fixed_points: Vec<FixedPointDto>,
    edges: Vec<EdgeDto>,
    /// `[fixed point, edge]` pairs where the point's image lies on the edge.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    incidence: Option<Vec<[usize; 2]>>,
}

impl From<&XRay> for XRayDto {
    fn from(x: &XRay) -> Self {
        Self {
            fixed_points: x
                .fixed_points()
                .iter()
                .map(|fp| FixedPointDto {
                    position: p2(&fp.position()),
                    weights: fp
                        .weights()
                        .iter()
                        .map(|w| WeightDto {
                            direction: v2(&w.direction),
                            multiplicity: w.multiplicity,
                        })
                        .collect(),
                })
                .collect(),
            edges: x
                .edges()
                .iter()
                .map(|e| EdgeDto {
                    ends: [e.ends.0, e.ends.1],
                    direction: v2(&e.direction),
                    rank: e.rank,
                })
                .collect(),
            incidence: Some(x.incidence().into_iter().map(|(i, k)| [i, k]).collect()),
        }
    }
}

impl XRayDto {
    fn build(self) -> Result<XRay> {
        let mut fixed_points = Vec::with_capacity(self.fixed_points.len());
        for (i, fp) in self.fixed_points.iter().enumerate() {
            let mut weights = Vec::with_capacity(fp.weights.len());
            for (j, w) in fp.weights.iter().enumerate() {
                let path = format!("payload.fixed_points[{i}].weights[{j}].direction");
                weights.push(Weight {
                    direction: primitive2(w.direction, path)?,
                    multiplicity: w.multiplicity,
                });
            }
            fixed_points.push(WeightedFixedPoint::from_weights(
                from_p2(&fp.position),
                weights,
            )?);
        }
        let mut edges = Vec::with_capacity(self.edges.len());
        for (k, e) in self.edges.iter().enumerate() {
            let direction = primitive2(e.direction, format!("payload.edges[{k}].direction"))?;
            edges.push(XRayEdge {
                ends: (e.ends[0], e.ends[1]),
                direction,
                rank: e.rank,
            });
        }
        let x = XRay::new(fixed_points, edges)?;
        if let Some(given) = self.incidence {
            let mut given: Vec<(usize, usize)> = given.iter().map(|p| (p[0], p[1])).collect();
            given.sort();
            if given != x.incidence() {
                return Err(doc_err(
                    "payload.incidence",
                    "incidence disagrees with the edge geometry",
                ));
            }
        }
        Ok(x)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDto {
    fixed_point: usize,
    apex: P2,
    alpha: [i64; 2],
    beta: [i64; 2],
    others: Vec<[i64; 2]>,
    rays_supported: bool,
    contained_points: Vec<P2>,
    delta_cand: Vec<P2>,
    uncovered_face: [P2; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VerdictDto {
    obstructed: bool,
    certificates: Vec<CertificateDto>,
}

impl From<&Verdict> for VerdictDto {
    fn from(v: &Verdict) -> Self {
        Self {
            obstructed: v.is_obstructed(),
            certificates: v
                .certificates()
                .iter()
                .map(|c| CertificateDto {
                    fixed_point: c.candidate.fixed_point,
                    apex: p2(&c.candidate.apex),
                    alpha: v2(&c.candidate.alpha),
                    beta: v2(&c.candidate.beta),
                    others: c.candidate.others.iter().map(v2).collect(),
                    rays_supported: c.candidate.rays_supported,
                    contained_points: c.contained_points.iter().map(p2).collect(),
                    delta_cand: c.delta_cand.vertices().iter().map(p2).collect(),
                    uncovered_face: [p2(&c.uncovered_face.a), p2(&c.uncovered_face.b)],
                })
                .collect(),
        }
    }
}

impl VerdictDto {
    fn build(self, at: &str) -> Result<Verdict> {
        if self.obstructed == self.certificates.is_empty() {
            return Err(doc_err(
                format!("{at}.obstructed"),
                "must be true exactly when certificates are present",
            ));
        }
        let mut certs = Vec::with_capacity(self.certificates.len());
        for (k, c) in self.certificates.into_iter().enumerate() {
            let path = format!("{at}.certificates[{k}]");
            let alpha = primitive2(c.alpha, format!("{path}.alpha"))?;
            let beta = primitive2(c.beta, format!("{path}.beta"))?;
            if alpha.is_parallel(&beta) {
                return Err(doc_err(
                    format!("{path}.beta"),
                    "cone generators are dependent",
                ));
            }
            let others = c
                .others
                .iter()
                .enumerate()
                .map(|(j, o)| primitive2(*o, format!("{path}.others[{j}]")))
                .collect::<Result<Vec<_>>>()?;
            let contained_points: Vec<Point2> = c.contained_points.iter().map(from_p2).collect();
            let delta_cand = polygon(&c.delta_cand, &format!("{path}.delta_cand"))?;
            if hull2(&contained_points).ok().as_ref() != Some(&delta_cand) {
                return Err(doc_err(
                    format!("{path}.delta_cand"),
                    "not the hull of the contained points",
                ));
            }
            let uncovered_face =
                Segment::new(from_p2(&c.uncovered_face[0]), from_p2(&c.uncovered_face[1]));
            if !delta_cand
                .edges()
                .iter()
                .any(|e| e.sorted() == uncovered_face.sorted())
            {
                return Err(doc_err(
                    format!("{path}.uncovered_face"),
                    "not an edge of delta_cand",
                ));
            }
            certs.push(ObstructionCertificate {
                candidate: ConeCandidate {
                    fixed_point: c.fixed_point,
                    apex: from_p2(&c.apex),
                    alpha,
                    beta,
                    others,
                    rays_supported: c.rays_supported,
                },
                contained_points,
                delta_cand,
                uncovered_face,
            });
        }
        Ok(if certs.is_empty() {
            Verdict::NoObstructionFound
        } else {
            Verdict::ObstructionFound(certs)
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepRowDto {
    n: i64,
    lambda: P3,
    level: R,
    verdict: VerdictDto,
}

impl From<&SweepRow> for SweepRowDto {
    fn from(r: &SweepRow) -> Self {
        let [a, b, c] = r.params.lambda.values();
        Self {
            n: r.params.n,
            lambda: [R(a), R(b), R(c)],
            level: R(r.params.level),
            verdict: VerdictDto::from(&r.verdict),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepDto {
    rows: Vec<SweepRowDto>,
}

impl SweepDto {
    fn build(self) -> Result<Vec<SweepRow>> {
        self.rows
            .into_iter()
            .enumerate()
            .map(|(k, r)| {
                let at = format!("payload.rows[{k}]");
                let lambda = Lambda::new(r.lambda[0].0, r.lambda[1].0, r.lambda[2].0)
                    .map_err(|e| doc_err(format!("{at}.lambda"), e))?;
                let params = HnParams {
                    n: r.n,
                    lambda,
                    level: r.level.0,
                };
                Ok(SweepRow {
                    params,
                    verdict: r.verdict.build(&format!("{at}.verdict"))?,
                })
            })
            .collect()
    }
}
