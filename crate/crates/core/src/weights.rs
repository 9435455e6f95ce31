//! Type `A_{r-1}` weights in the fundamental-weight basis, the map from
//! partitions to dominant weights, root pairings, and level-e Shi vectors.
//!
//! Every pairing `<alpha^vee, x>` with a positive root `eps_i - eps_j` is a
//! sum of consecutive coefficients, so roots are just index pairs.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};

use crate::abacus::{beta_numbers, BetaSequence};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// `eps_i - eps_j` with `1 <= i < j <= r` (1-based, as usually written).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct PositiveRoot {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Positive roots of `A_{r-1}` in lexicographic `(i, j)` order.
pub fn positive_roots(r: usize) -> Vec<PositiveRoot> {
    (1..=r)
        .flat_map(|i| (i + 1..=r).map(move |j| PositiveRoot { i, j }))
        .collect()
}

/// Coefficients `(a_1, ..., a_{r-1})` of `sum a_i Lambda_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DominantWeight {
    coeffs: Vec<u64>,
}

impl DominantWeight {
    pub fn new(coeffs: Vec<u64>) -> Self {
        DominantWeight { coeffs }
    }

    /// `rho = Lambda_1 + ... + Lambda_{r-1}`.
    pub fn rho(r: usize) -> Self {
        DominantWeight {
            coeffs: vec![1; r.saturating_sub(1)],
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len() + 1
    }

    /// Pairings with every positive root, in [`positive_roots`] order.
    pub fn pairings(&self) -> Vec<u64> {
        let r = self.rank();
        let mut out = Vec::with_capacity(r * (r - 1) / 2);
        for i in 0..r - 1 {
            let mut acc = 0;
            for &c in &self.coeffs[i..] {
                acc += c;
                out.push(acc);
            }
        }
        out
    }

    /// Dominance in the coordinatewise order.
    pub fn le(&self, other: &DominantWeight) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DominantWeight{self}")
    }
}

/// Consecutive differences of the beta numbers.
pub fn omega_of_betas(bs: &BetaSequence) -> DominantWeight {
    DominantWeight {
        coeffs: bs.betas().windows(2).map(|w| w[0] - w[1]).collect(),
    }
}

/// `Omega(lambda) = sum (lambda_i - lambda_{i+1} + 1) Lambda_i`, i.e.
/// `lambda + rho`.
pub fn omega(lam: &Partition, r: usize) -> Result<DominantWeight> {
    Ok(omega_of_betas(&beta_numbers(lam, r)?))
}

pub fn pairing(w: &DominantWeight, root: PositiveRoot) -> Result<u64> {
    let r = w.rank();
    if root.i < 1 || root.i >= root.j || root.j > r {
        return Err(Error::RankMismatch {
            expected: r,
            found: root.j,
        });
    }
    Ok(w.coeffs[root.i - 1..root.j - 1].iter().sum())
}

/// Shi coefficient of the alcove assigned to a point with pairing `p`.
/// Off the walls this is `floor(p / e)`; on a wall `p = ke` the point is
/// assigned to the alcove on the origin side, giving `k - 1`.
pub fn shi_entry(p: u64, e: u64) -> i64 {
    if p == 0 {
        0
    } else {
        ((p - 1) / e) as i64
    }
}

/// Level-e Shi coefficients indexed by positive roots in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ShiVector {
    e: u64,
    r: usize,
    entries: Vec<i64>,
}

impl ShiVector {
    pub fn new(e: u64, r: usize, entries: Vec<i64>) -> Result<Self> {
        let expected = r * r.saturating_sub(1) / 2;
        if entries.len() != expected {
            return Err(Error::RankMismatch {
                expected,
                found: entries.len(),
            });
        }
        Ok(ShiVector { e, r, entries })
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, root: PositiveRoot) -> Option<i64> {
        positive_roots(self.r)
            .iter()
            .position(|&a| a == root)
            .map(|idx| self.entries[idx])
    }

    /// Same entries, ignoring the level. Used to compare alcoves across
    /// levels.
    pub fn same_entries(&self, other: &ShiVector) -> bool {
        self.r == other.r && self.entries == other.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&k| k == 0)
    }
}

impl Serialize for ShiVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<[i64; 3]> = positive_roots(self.r)
            .iter()
            .zip(&self.entries)
            .map(|(a, &k)| [a.i as i64, a.j as i64, k])
            .collect();
        let mut st = s.serialize_struct("ShiVector", 2)?;
        st.serialize_field("e", &self.e)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

impl fmt::Display for ShiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = positive_roots(self.r)
            .iter()
            .zip(&self.entries)
            .map(|(a, k)| format!("{a}:{k}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Shi vector of the alcove assigned to `w` at level `e`.
pub fn shi_vector(w: &DominantWeight, e: u64) -> ShiVector {
    ShiVector {
        e,
        r: w.rank(),
        entries: w.pairings().into_iter().map(|p| shi_entry(p, e)).collect(),
    }
}

/// True iff no pairing is divisible by `e`, i.e. `w` lies on no wall.
pub fn is_strictly_inside(w: &DominantWeight, e: u64) -> bool {
    w.pairings().iter().all(|p| p % e != 0)
}

pub fn same_e_alcove(w1: &DominantWeight, w2: &DominantWeight, e: u64) -> Result<bool> {
    if w1.rank() != w2.rank() {
        return Err(Error::RankMismatch {
            expected: w1.rank(),
            found: w2.rank(),
        });
    }
    Ok(shi_vector(w1, e) == shi_vector(w2, e))
}

/// Every coefficient is a positive multiple of `e`.
pub fn is_affine_vertex(w: &DominantWeight, e: u64) -> bool {
    w.coeffs.iter().all(|&a| a > 0 && a % e == 0)
}
