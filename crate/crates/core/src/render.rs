//! SVG pictures of `W_{3,e,w}` in the `A_2` weight lattice.
//!
//! `a_1 Lambda_1 + a_2 Lambda_2` is drawn at `(a_1 + a_2 / 2, a_2 sqrt(3) / 2)`
//! with 24 user units per lattice unit and the y axis pointing up.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use itertools::Itertools;

use crate::alcove_index::{enumerate_labels, label_interior_points};
use crate::error::{Error, Result};
use crate::partitions::Composition;
use crate::patterns::{cell_points, classify_pairs, stingray, BlockWeightSet, PairKind};
use crate::weights::DominantWeight;

const SCALE: f64 = 24.0;
const PAD: f64 = 12.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Highlight {
    Vertices,
    Pairs,
    Stingray,
    Regular,
}

impl std::str::FromStr for Highlight {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "vertices" => Ok(Highlight::Vertices),
            "pairs" => Ok(Highlight::Pairs),
            "stingray" => Ok(Highlight::Stingray),
            "regular" => Ok(Highlight::Regular),
            other => Err(format!("unknown highlight {other:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub show_hyperplanes: bool,
    pub show_alcove_labels: bool,
    pub highlight: Option<Highlight>,
    pub point_radius: f64,
    /// Fill colour per composition of 3, keyed by its parts.
    pub palette: BTreeMap<Vec<u64>, String>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        let palette = [
            (vec![1, 1, 1], "#2e9e44"),
            (vec![3], "#d62728"),
            (vec![2, 1], "#ff8c00"),
            (vec![1, 2], "#1f5fbf"),
        ]
        .into_iter()
        .map(|(k, v)| (k, v.to_string()))
        .collect();
        RenderOptions {
            show_hyperplanes: true,
            show_alcove_labels: false,
            highlight: None,
            point_radius: 3.0,
            palette,
        }
    }
}

impl RenderOptions {
    fn validate(&self) -> Result<()> {
        for mu in Composition::all_of(3) {
            if !self.palette.contains_key(mu.parts()) {
                return Err(Error::IncompletePalette(mu.to_string()));
            }
        }
        Ok(())
    }
}

fn check_rank(w: &DominantWeight) -> Result<()> {
    if w.rank() != 3 {
        return Err(Error::RankMismatch {
            expected: 3,
            found: w.rank(),
        });
    }
    Ok(())
}

/// Lattice coordinates of a rank-3 weight in the plane.
pub fn project(w: &DominantWeight) -> Result<(f64, f64)> {
    check_rank(w)?;
    Ok(project_xy(w.coeffs()[0] as f64, w.coeffs()[1] as f64))
}

fn project_xy(a1: f64, a2: f64) -> (f64, f64) {
    (a1 + a2 / 2.0, a2 * 3f64.sqrt() / 2.0)
}

/// Maps lattice coordinates to SVG user units.
struct Frame {
    min_x: f64,
    max_y: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn new(lo: (f64, f64), hi: (f64, f64)) -> Self {
        let corners = [
            project_xy(lo.0, lo.1),
            project_xy(hi.0, lo.1),
            project_xy(lo.0, hi.1),
            project_xy(hi.0, hi.1),
        ];
        let min_x = corners.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
        let max_x = corners.iter().map(|c| c.0).fold(f64::NEG_INFINITY, f64::max);
        let min_y = corners.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
        let max_y = corners.iter().map(|c| c.1).fold(f64::NEG_INFINITY, f64::max);
        Frame {
            min_x,
            max_y,
            width: (max_x - min_x) * SCALE + 2.0 * PAD,
            height: (max_y - min_y) * SCALE + 2.0 * PAD,
        }
    }

    fn at(&self, a1: f64, a2: f64) -> (f64, f64) {
        let (x, y) = project_xy(a1, a2);
        ((x - self.min_x) * SCALE + PAD, (self.max_y - y) * SCALE + PAD)
    }

    fn at_weight(&self, w: &DominantWeight) -> (f64, f64) {
        self.at(w.coeffs()[0] as f64, w.coeffs()[1] as f64)
    }
}

fn line(out: &mut String, frame: &Frame, from: (f64, f64), to: (f64, f64), class: &str) {
    let (x1, y1) = frame.at(from.0, from.1);
    let (x2, y2) = frame.at(to.0, to.1);
    let _ = writeln!(
        out,
        r#"<line class="{class}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#
    );
}

fn marker(out: &mut String, frame: &Frame, w: &DominantWeight, class: &str, half: f64) {
    let (x, y) = frame.at_weight(w);
    let side = 2.0 * half;
    let _ = writeln!(
        out,
        r#"<rect class="{class}" x="{:.3}" y="{:.3}" width="{side:.3}" height="{side:.3}"/>"#,
        x - half,
        y - half
    );
}

/// Renders the weights of `data` with one circle per weight, coloured by
/// composition, over the level-e hyperplanes. Output depends only on the
/// inputs.
pub fn render_svg(data: &BlockWeightSet, opts: &RenderOptions) -> Result<String> {
    opts.validate()?;
    let t = data.triple();
    if t.r() != 3 {
        return Err(Error::RankMismatch {
            expected: 3,
            found: t.r(),
        });
    }
    let e = t.e() as f64;

    let (lo, hi) = if data.is_empty() {
        ((0.0, 0.0), (e, e))
    } else {
        let (lo0, hi0) = data
            .weights()
            .map(|w| w.coeffs()[0])
            .minmax()
            .into_option()
            .expect("nonempty");
        let (lo1, hi1) = data
            .weights()
            .map(|w| w.coeffs()[1])
            .minmax()
            .into_option()
            .expect("nonempty");
        (
            ((lo0 as f64 - e).max(0.0), (lo1 as f64 - e).max(0.0)),
            (hi0 as f64 + e, hi1 as f64 + e),
        )
    };
    let frame = Frame::new(lo, hi);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {:.3} {:.3}" width="{:.3}" height="{:.3}">"#,
        frame.width, frame.height, frame.width, frame.height
    );
    let _ = writeln!(
        out,
        "<title>W({},{},{}): {} weights</title>",
        t.r(),
        t.e(),
        t.w(),
        data.len()
    );
    out.push_str(
        "<style>\
line.wall{stroke:#b0b0b0;stroke-width:0.8}\
line.pair-bad{stroke:#8b0000;stroke-width:2}\
line.pair-good{stroke:#00008b;stroke-width:2}\
rect.vertex-boundary{fill:none;stroke:#000;stroke-width:1.2}\
rect.vertex-interior{fill:none;stroke:#777;stroke-width:1.2}\
rect.tail{fill:none;stroke:#8b0000;stroke-width:1.2}\
rect.body{fill:none;stroke:#ff6f6f;stroke-width:1.2}\
rect.regular{fill:none;stroke:#1f5fbf;stroke-width:1.2}\
text.label{font-family:sans-serif;font-size:9px;text-anchor:middle;fill:#114411}\
</style>\n",
    );
    let _ = writeln!(
        out,
        r##"<rect x="0" y="0" width="{:.3}" height="{:.3}" fill="#ffffff"/>"##,
        frame.width, frame.height
    );

    if opts.show_hyperplanes {
        out.push_str("<g id=\"hyperplanes\">\n");
        let k_lo = (lo.0.min(lo.1) / e).ceil() as u64;
        for k in k_lo..=((hi.0 / e).floor() as u64) {
            let c = k as f64 * e;
            if c >= lo.0 {
                line(&mut out, &frame, (c, lo.1), (c, hi.1), "wall");
            }
        }
        for k in k_lo..=((hi.1 / e).floor() as u64) {
            let c = k as f64 * e;
            if c >= lo.1 {
                line(&mut out, &frame, (lo.0, c), (hi.0, c), "wall");
            }
        }
        let s_lo = ((lo.0 + lo.1) / e).ceil() as u64;
        let s_hi = ((hi.0 + hi.1) / e).floor() as u64;
        for k in s_lo..=s_hi {
            let c = k as f64 * e;
            let a_from = lo.0.max(c - hi.1);
            let a_to = hi.0.min(c - lo.1);
            if a_from < a_to {
                line(&mut out, &frame, (a_from, c - a_from), (a_to, c - a_to), "wall");
            }
        }
        out.push_str("</g>\n");
    }

    out.push_str("<g id=\"weights\">\n");
    for (w, key) in data.iter() {
        let (x, y) = frame.at_weight(w);
        let fill = &opts.palette[key.mu.parts()];
        let mu_class: Vec<String> = key.mu.parts().iter().map(u64::to_string).collect();
        let _ = writeln!(
            out,
            r#"<circle class="mu-{}" cx="{x:.3}" cy="{y:.3}" r="{:.3}" fill="{fill}"/>"#,
            mu_class.join("-"),
            opts.point_radius
        );
    }
    out.push_str("</g>\n");

    if let Some(h) = opts.highlight {
        out.push_str("<g id=\"highlight\">\n");
        let half = opts.point_radius + 2.0;
        let e_int = t.e();
        match h {
            Highlight::Vertices => {
                for v in crate::patterns::interior_affine_vertices(t) {
                    marker(&mut out, &frame, &v, "vertex-interior", half);
                }
                for v in crate::patterns::boundary_affine_vertices(t) {
                    marker(&mut out, &frame, &v, "vertex-boundary", half);
                }
            }
            Highlight::Pairs => {
                for pair in classify_pairs(t) {
                    let class = match pair.kind {
                        PairKind::Bad => "pair-bad",
                        PairKind::Good => "pair-good",
                    };
                    let a = &pair.v1;
                    let b = &pair.v2;
                    line(
                        &mut out,
                        &frame,
                        (a.coeffs()[0] as f64, a.coeffs()[1] as f64),
                        (b.coeffs()[0] as f64, b.coeffs()[1] as f64),
                        class,
                    );
                }
            }
            Highlight::Stingray => {
                for pair in classify_pairs(t).iter().filter(|p| p.kind == PairKind::Bad) {
                    let s = stingray(data, &pair.v1, &pair.v2)?;
                    for w in &s.body {
                        marker(&mut out, &frame, w, "body", half);
                    }
                    for w in &s.tail {
                        marker(&mut out, &frame, w, "tail", half);
                    }
                }
            }
            Highlight::Regular => {
                for pair in classify_pairs(t).iter().filter(|p| p.kind == PairKind::Good) {
                    for w in cell_points(&pair.v1, e_int, true) {
                        if data.contains(&w) {
                            marker(&mut out, &frame, &w, "regular", half);
                        }
                    }
                }
            }
        }
        out.push_str("</g>\n");
    }

    if opts.show_alcove_labels && t.e() > 3 {
        out.push_str("<g id=\"labels\">\n");
        for label in enumerate_labels(3, t.w()) {
            let points = label_interior_points(&label, t.e())?;
            let n = points.len() as f64;
            let a1 = points.iter().map(|p| p.coeffs()[0] as f64).sum::<f64>() / n;
            let a2 = points.iter().map(|p| p.coeffs()[1] as f64).sum::<f64>() / n;
            let (x, y) = frame.at(a1, a2);
            let _ = writeln!(
                out,
                r#"<text class="label" x="{x:.3}" y="{:.3}">{label}</text>"#,
                y + 3.0
            );
        }
        out.push_str("</g>\n");
    }

    out.push_str("</svg>\n");
    Ok(out)
}
