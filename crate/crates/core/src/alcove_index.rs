//! Labels of the dominant e-alcoves meeting `W_{r,e,w}` by weak
//! compositions of `w` with `r` entries, and the partial right action of the
//! affine Weyl group generators on those labels.
//!
//! Entries are 1-based in the docs (`mu_1, ..., mu_r`) and 0-based in
//! storage.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::abacus::BetaSequence;
use crate::error::{Error, Result};
use crate::partitions::{Composition, MultiPartition, Partition, WeakComposition};
use crate::patterns::{key_betas, ComponentKey};
use crate::report::Report;
use crate::weights::{omega_of_betas, shi_vector, DominantWeight, ShiVector};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlcoveLabel {
    comp: WeakComposition,
}

impl AlcoveLabel {
    pub fn new(parts: Vec<u64>) -> Self {
        AlcoveLabel {
            comp: WeakComposition::new(parts),
        }
    }

    pub fn parts(&self) -> &[u64] {
        self.comp.parts()
    }

    pub fn rank(&self) -> usize {
        self.comp.len()
    }

    pub fn size(&self) -> u64 {
        self.comp.size()
    }
}

impl fmt::Display for AlcoveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.comp)
    }
}

impl fmt::Debug for AlcoveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlcoveLabel({})", self.comp)
    }
}

impl FromStr for AlcoveLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(AlcoveLabel {
            comp: s.parse()?,
        })
    }
}

/// `sigma_i` for `0 <= i < r`; `sigma_0` is the affine generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct GeneratorIndex(usize);

impl GeneratorIndex {
    pub fn new(i: usize, r: usize) -> Result<Self> {
        if i >= r {
            return Err(Error::GeneratorOutOfRange { index: i, rank: r });
        }
        Ok(GeneratorIndex(i))
    }

    pub fn index(&self) -> usize {
        self.0
    }

    pub fn all(r: usize) -> impl Iterator<Item = GeneratorIndex> {
        (0..r).map(GeneratorIndex)
    }
}

/// `Gamma_r(w)` in lexicographic order.
pub fn enumerate_labels(r: usize, w: u64) -> Vec<AlcoveLabel> {
    WeakComposition::all_of(w, r)
        .into_iter()
        .map(|comp| AlcoveLabel { comp })
        .collect()
}

/// With `w = r m + n`, `0 <= n < r`: `n` copies of `m + 1`, then `r - n`
/// copies of `m`.
pub fn fundamental_label(r: usize, w: u64) -> AlcoveLabel {
    let (m, n) = (w / r as u64, (w % r as u64) as usize);
    let parts = (0..r).map(|i| if i < n { m + 1 } else { m }).collect();
    AlcoveLabel::new(parts)
}

fn check_generic(r: usize, e: u64) -> Result<()> {
    if e <= r as u64 {
        return Err(Error::NotGeneric { r, e });
    }
    Ok(())
}

/// One bead per runner: bead `t` on runner `e - r + t - 1`, row `mu_t`.
pub fn label_betas(label: &AlcoveLabel, e: u64) -> Result<BetaSequence> {
    let r = label.rank();
    check_generic(r, e)?;
    let positions = label
        .parts()
        .iter()
        .enumerate()
        .map(|(t, &row)| row * e + (e - r as u64 + t as u64))
        .collect();
    BetaSequence::from_unsorted(positions)
}

/// A lattice point strictly inside the labelled alcove.
pub fn label_weight(label: &AlcoveLabel, e: u64) -> Result<DominantWeight> {
    Ok(omega_of_betas(&label_betas(label, e)?))
}

pub fn label_to_shi(label: &AlcoveLabel, e: u64) -> Result<ShiVector> {
    Ok(shi_vector(&label_weight(label, e)?, e))
}

/// All dominant lattice points inside the labelled alcove: the `(1^r)`
/// simplex copy whose quotient puts one bead at row `mu_t` on the `t`-th
/// occupied runner.
pub fn label_interior_points(label: &AlcoveLabel, e: u64) -> Result<Vec<DominantWeight>> {
    let r = label.rank();
    check_generic(r, e)?;
    let mu = Composition::new(vec![1; r])?;
    let quotient = MultiPartition::new(
        label
            .parts()
            .iter()
            .map(|&row| Partition::new(vec![row]))
            .collect::<Result<Vec<_>>>()?,
    );
    let mut out: Vec<DominantWeight> = WeakComposition::all_of(e - r as u64, r)
        .into_iter()
        .map(|gaps| {
            let key = ComponentKey {
                mu: mu.clone(),
                gaps: gaps.parts().to_vec(),
                quotient: quotient.clone(),
            };
            omega_of_betas(&key_betas(&key, e))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Right action `mu sigma_i`. For `i >= 1` swaps entries `i` and `i + 1`;
/// `sigma_0` sends `mu` to `(mu_r + 1, mu_2, ..., mu_{r-1}, mu_1 - 1)` and is
/// undefined when `mu_1 = 0`.
pub fn apply_generator(label: &AlcoveLabel, g: GeneratorIndex) -> Result<Option<AlcoveLabel>> {
    let r = label.rank();
    if g.0 >= r {
        return Err(Error::GeneratorOutOfRange { index: g.0, rank: r });
    }
    let mut parts = label.parts().to_vec();
    if g.0 == 0 {
        if parts[0] == 0 {
            return Ok(None);
        }
        let first = parts[0];
        parts[0] = parts[r - 1] + 1;
        parts[r - 1] = first - 1;
    } else {
        parts.swap(g.0 - 1, g.0);
    }
    Ok(Some(AlcoveLabel::new(parts)))
}

/// The crossing `label -> label sigma_g` either fixes the label and keeps
/// the Shi vector, or moves it and changes exactly one Shi coefficient by
/// one. The Shi comparison is authoritative; the label arithmetic must
/// agree with it.
pub fn verify_wall_crossing(label: &AlcoveLabel, g: GeneratorIndex, e: u64) -> Result<Report> {
    check_generic(label.rank(), e)?;
    let image = apply_generator(label, g)?.ok_or_else(|| Error::UndefinedAction {
        label: label.to_string(),
        generator: g.0,
    })?;
    let before = label_to_shi(label, e)?;
    let after = label_to_shi(&image, e)?;
    let diffs: Vec<(usize, i64)> = before
        .entries()
        .iter()
        .zip(after.entries())
        .enumerate()
        .filter(|(_, (a, b))| a != b)
        .map(|(idx, (a, b))| (idx, b - a))
        .collect();
    let fixed = &image == label;
    let ok = if fixed {
        diffs.is_empty()
    } else {
        diffs.len() == 1 && diffs[0].1.abs() == 1
    };
    let mut report = Report::new(format!("wall-crossing {label} sigma_{}", g.0));
    report.expect(ok, || {
        json!({
            "label": label.parts(),
            "generator": g.0,
            "image": image.parts(),
            "fixed_by_label": fixed,
            "shi_before": before,
            "shi_after": after,
        })
    });
    Ok(report)
}

/// [`verify_wall_crossing`] for every label of `Gamma_r(w)` and every
/// generator whose action is defined.
pub fn verify_wall_crossings(r: usize, w: u64, e: u64, parallel: bool) -> Result<Report> {
    check_generic(r, e)?;
    let labels = enumerate_labels(r, w);
    let one = |label: &AlcoveLabel| -> Result<Report> {
        let mut acc = Report::new("");
        for g in GeneratorIndex::all(r) {
            if apply_generator(label, g)?.is_some() {
                acc.absorb(verify_wall_crossing(label, g, e)?);
            }
        }
        Ok(acc)
    };
    let parts: Vec<Report> = if parallel {
        labels.par_iter().map(one).collect::<Result<_>>()?
    } else {
        labels.iter().map(one).collect::<Result<_>>()?
    };
    let mut report = Report::new(format!("wall-crossing r={r} w={w} e={e}"));
    for p in parts {
        report.absorb(p);
    }
    Ok(report)
}
