//! Drawings of X-rays: a dot per fixed-point image and a segment per stratum
//! image.
//!
//! Output is a pure function of the input. Coordinates are scaled from the
//! exact values and printed with a fixed number of decimals.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::cutting::CutSpec;
use crate::geometry::{Point2, Rational, Segment};
use crate::xray::XRay;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Ascii,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Overlays {
    /// Dashed line `<X, p> = a`.
    pub cut: Option<CutSpec>,
    /// The Weyl wall `x = y`.
    pub wall: bool,
    /// Faces to highlight, typically uncovered faces of certificates.
    pub highlight: Vec<Segment>,
}

pub fn render(x: &XRay, format: Format, overlays: &Overlays) -> String {
    match format {
        Format::Svg => render_svg(x, overlays),
        Format::Ascii => render_ascii(x, overlays),
    }
}

const UNIT: f64 = 40.0;
const MARGIN: f64 = 20.0;

struct Frame {
    min: (Rational, Rational),
    max: (Rational, Rational),
}

impl Frame {
    fn of(x: &XRay) -> Frame {
        let pts = x.positions();
        let zero = Rational::from(0);
        let mut min = pts.first().map_or((zero, zero), |p| (p.x, p.y));
        let mut max = min;
        for p in &pts {
            min = (min.0.min(p.x), min.1.min(p.y));
            max = (max.0.max(p.x), max.1.max(p.y));
        }
        Frame { min, max }
    }

    fn width(&self) -> f64 {
        f(self.max.0 - self.min.0)
    }

    fn height(&self) -> f64 {
        f(self.max.1 - self.min.1)
    }

    fn svg(&self, p: &Point2) -> (f64, f64) {
        (
            MARGIN + UNIT * f(p.x - self.min.0),
            MARGIN + UNIT * f(self.max.1 - p.y),
        )
    }

    /// The part of a line inside the frame, or `None` if it misses.
    fn clip_line(&self, spec: &CutSpec) -> Option<(Point2, Point2)> {
        let d = spec.direction();
        let (x0, y0, x1, y1) = (self.min.0, self.min.1, self.max.0, self.max.1);
        let (dx, dy) = (Rational::from(d.x), Rational::from(d.y));
        let a = spec.level();
        let mut hits: Vec<Point2> = Vec::new();
        if dy != Rational::from(0) {
            for x in [x0, x1] {
                let y = (a - dx * x) / dy;
                if y0 <= y && y <= y1 {
                    hits.push(Point2::new(x, y));
                }
            }
        }
        if dx != Rational::from(0) {
            for y in [y0, y1] {
                let x = (a - dy * y) / dx;
                if x0 <= x && x <= x1 {
                    hits.push(Point2::new(x, y));
                }
            }
        }
        hits.sort();
        hits.dedup();
        Some((*hits.first()?, *hits.last()?))
    }

    fn wall(&self) -> Option<(Point2, Point2)> {
        let lo = self.min.0.max(self.min.1);
        let hi = self.max.0.min(self.max.1);
        (lo <= hi).then(|| (Point2::new(lo, lo), Point2::new(hi, hi)))
    }
}

fn f(r: Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

pub fn render_svg(x: &XRay, overlays: &Overlays) -> String {
    let frame = Frame::of(x);
    let (w, h) = (
        2.0 * MARGIN + UNIT * frame.width(),
        2.0 * MARGIN + UNIT * frame.height(),
    );
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#
    );
    let path = |out: &mut String, class: &str, style: &str, a: &Point2, b: &Point2| {
        let (p, q) = (frame.svg(a), frame.svg(b));
        let _ = writeln!(
            out,
            r#"  <path class="{class}" d="M {:.2} {:.2} L {:.2} {:.2}" {style}/>"#,
            p.0, p.1, q.0, q.1
        );
    };
    if overlays.wall {
        if let Some((a, b)) = frame.wall() {
            path(
                &mut out,
                "wall",
                r#"stroke="gray" stroke-width="1""#,
                &a,
                &b,
            );
        }
    }
    if let Some(spec) = &overlays.cut {
        if let Some((a, b)) = frame.clip_line(spec) {
            path(
                &mut out,
                "cut",
                r#"stroke="black" stroke-width="1" stroke-dasharray="6 4""#,
                &a,
                &b,
            );
        }
    }
    for s in &overlays.highlight {
        path(
            &mut out,
            "uncovered",
            r#"stroke="red" stroke-width="6" stroke-opacity="0.5""#,
            &s.a,
            &s.b,
        );
    }
    for e in x.edges() {
        let s = x.segment(e);
        let (p, q) = (frame.svg(&s.a), frame.svg(&s.b));
        let _ = writeln!(
            out,
            r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="{}"/>"#,
            p.0,
            p.1,
            q.0,
            q.1,
            e.rank.min(4) * 2
        );
    }
    for fp in x.fixed_points() {
        let (cx, cy) = frame.svg(&fp.position());
        let _ = writeln!(
            out,
            r#"  <circle cx="{cx:.2}" cy="{cy:.2}" r="4" fill="black"/>"#
        );
    }
    out.push_str("</svg>\n");
    out
}

/// A character grid, `y` up, with a legend of fixed points underneath.
pub fn render_ascii(x: &XRay, overlays: &Overlays) -> String {
    let frame = Frame::of(x);
    let (w, h) = (frame.width(), frame.height());
    let sx = if w > 0.0 {
        (60.0 / w).clamp(1.0, 6.0)
    } else {
        1.0
    };
    let sy = if h > 0.0 {
        (30.0 / h).clamp(1.0, 3.0)
    } else {
        1.0
    };
    let cols = (w * sx).round() as usize + 1;
    let rows = (h * sy).round() as usize + 1;
    let mut grid = vec![vec![' '; cols]; rows];
    let cell = |p: &Point2| {
        let c = (f(p.x - frame.min.0) * sx).round() as usize;
        let r = (f(frame.max.1 - p.y) * sy).round() as usize;
        (r.min(rows - 1), c.min(cols - 1))
    };
    let draw = |grid: &mut [Vec<char>], a: &Point2, b: &Point2, ink: Option<char>| {
        let (ra, ca) = cell(a);
        let (rb, cb) = cell(b);
        let (dr, dc) = (rb as f64 - ra as f64, cb as f64 - ca as f64);
        let ch = ink.unwrap_or(if dr == 0.0 {
            '-'
        } else if dc == 0.0 {
            '|'
        } else if (dr < 0.0) == (dc > 0.0) {
            '/'
        } else {
            '\\'
        });
        let steps = (dr.abs().max(dc.abs()) * 2.0) as usize;
        for k in 0..=steps {
            let t = if steps == 0 {
                0.0
            } else {
                k as f64 / steps as f64
            };
            let r = (ra as f64 + t * dr).round() as usize;
            let c = (ca as f64 + t * dc).round() as usize;
            grid[r][c] = ch;
        }
    };
    if overlays.wall {
        if let Some((a, b)) = frame.wall() {
            draw(&mut grid, &a, &b, Some(':'));
        }
    }
    if let Some(spec) = &overlays.cut {
        if let Some((a, b)) = frame.clip_line(spec) {
            draw(&mut grid, &a, &b, Some('~'));
        }
    }
    for s in x.segments() {
        draw(&mut grid, &s.a, &s.b, None);
    }
    for s in &overlays.highlight {
        draw(&mut grid, &s.a, &s.b, Some('#'));
    }
    for p in x.positions() {
        let (r, c) = cell(&p);
        grid[r][c] = 'o';
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "{} fixed points, {} edges",
        x.fixed_points().len(),
        x.edges().len()
    );
    for (i, p) in x.positions().iter().enumerate() {
        let _ = writeln!(out, "  [{i}] {p}");
    }
    out
}
