//! Beta numbers, the e-abacus, and the core / weight / quotient calculus.
//!
//! Positions on the abacus are `row * e + runner`. A configuration at rank
//! `r` carries exactly `r` beads, one per beta number.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A strictly decreasing sequence of nonnegative integers; its length is the
/// rank.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct BetaSequence {
    betas: Vec<u64>,
}

impl BetaSequence {
    pub fn new(betas: Vec<u64>) -> Result<Self> {
        if betas.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing(betas));
        }
        Ok(BetaSequence { betas })
    }

    /// Sorts and checks distinctness instead of requiring the caller to.
    pub fn from_unsorted(mut betas: Vec<u64>) -> Result<Self> {
        betas.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(betas)
    }

    pub fn betas(&self) -> &[u64] {
        &self.betas
    }

    pub fn rank(&self) -> usize {
        self.betas.len()
    }

    /// Beta numbers of the e-core at the same rank: on each runner the beads
    /// are pushed up to rows `0..count`.
    pub fn core_betas(&self, e: u64) -> BetaSequence {
        let mut counts = vec![0u64; e as usize];
        for &b in &self.betas {
            counts[(b % e) as usize] += 1;
        }
        let mut out: Vec<u64> = counts
            .iter()
            .enumerate()
            .flat_map(|(runner, &c)| (0..c).map(move |row| row * e + runner as u64))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        BetaSequence { betas: out }
    }

    /// Total number of single-row upward slides needed to reach the core.
    pub fn e_weight(&self, e: u64) -> u64 {
        let moved: u64 = self.betas.iter().sum::<u64>() - self.core_betas(e).betas.iter().sum::<u64>();
        moved / e
    }
}

impl From<BetaSequence> for Vec<u64> {
    fn from(bs: BetaSequence) -> Self {
        bs.betas
    }
}

impl TryFrom<Vec<u64>> for BetaSequence {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        BetaSequence::new(v)
    }
}

impl fmt::Display for BetaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.betas.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `beta_i = lambda_i + r - i`.
pub fn beta_numbers(lam: &Partition, r: usize) -> Result<BetaSequence> {
    if r < lam.len() {
        return Err(Error::Rank {
            rank: r,
            needed: lam.len(),
        });
    }
    let betas = (0..r)
        .map(|i| lam.part(i) + (r - 1 - i) as u64)
        .collect();
    Ok(BetaSequence { betas })
}

pub fn partition_of_beta(bs: &BetaSequence) -> Partition {
    let r = bs.rank();
    let parts = bs
        .betas
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (r - 1 - i) as u64)
        .collect();
    Partition::new(parts).expect("strictly decreasing betas give a partition")
}

fn check_level(e: u64) -> Result<()> {
    if e < 2 {
        return Err(Error::InvalidLevel(e));
    }
    Ok(())
}

/// The four atomic bead moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    Up,
    Down,
    Left,
    Right,
}

/// A finite set of beads on `e` runners.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbacusConfig {
    e: u64,
    positions: BTreeSet<u64>,
}

#[derive(Serialize, Deserialize)]
struct AbacusJson {
    e: u64,
    positions: Vec<u64>,
}

impl Serialize for AbacusConfig {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AbacusJson {
            e: self.e,
            positions: self.positions.iter().rev().copied().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AbacusConfig {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = AbacusJson::deserialize(d)?;
        let count = raw.positions.len();
        let positions: BTreeSet<u64> = raw.positions.into_iter().collect();
        if raw.e < 2 || positions.len() != count {
            return Err(serde::de::Error::custom("invalid abacus configuration"));
        }
        Ok(AbacusConfig { e: raw.e, positions })
    }
}

impl AbacusConfig {
    pub fn new(e: u64, positions: impl IntoIterator<Item = u64>) -> Result<Self> {
        check_level(e)?;
        let mut set = BTreeSet::new();
        for p in positions {
            if !set.insert(p) {
                return Err(Error::OccupiedTarget(p));
            }
        }
        Ok(AbacusConfig { e, positions: set })
    }

    pub fn from_betas(bs: &BetaSequence, e: u64) -> Result<Self> {
        check_level(e)?;
        Ok(AbacusConfig {
            e,
            positions: bs.betas.iter().copied().collect(),
        })
    }

    pub fn of_partition(lam: &Partition, e: u64, r: usize) -> Result<Self> {
        Self::from_betas(&beta_numbers(lam, r)?, e)
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn positions(&self) -> &BTreeSet<u64> {
        &self.positions
    }

    pub fn bead_count(&self) -> usize {
        self.positions.len()
    }

    pub fn contains(&self, pos: u64) -> bool {
        self.positions.contains(&pos)
    }

    pub fn to_betas(&self) -> BetaSequence {
        BetaSequence {
            betas: self.positions.iter().rev().copied().collect(),
        }
    }

    /// Bead rows on runner `j`, largest first.
    pub fn runner_rows(&self, j: u64) -> Vec<u64> {
        self.positions
            .iter()
            .rev()
            .filter(|&&p| p % self.e == j)
            .map(|&p| p / self.e)
            .collect()
    }

    /// Moves the bead at `pos` one step. Fails if there is no bead there, the
    /// target is occupied, or the move would leave the abacus.
    pub fn shift_bead(&self, pos: u64, mv: Move) -> Result<AbacusConfig> {
        if !self.contains(pos) {
            return Err(Error::NoBead(pos));
        }
        let target = match mv {
            Move::Up => pos.checked_sub(self.e),
            Move::Down => Some(pos + self.e),
            Move::Left => pos.checked_sub(1),
            Move::Right => Some(pos + 1),
        }
        .ok_or(Error::Underflow(pos))?;
        if self.contains(target) {
            return Err(Error::OccupiedTarget(target));
        }
        let mut positions = self.positions.clone();
        positions.remove(&pos);
        positions.insert(target);
        Ok(AbacusConfig { e: self.e, positions })
    }
}

impl fmt::Display for AbacusConfig {
    /// One line per row, `●` for a bead and `·` for a gap.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max_row = self.positions.iter().next_back().map_or(0, |p| p / self.e);
        for row in 0..=max_row {
            let cells: Vec<&str> = (0..self.e)
                .map(|b| if self.contains(row * self.e + b) { "●" } else { "·" })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The e-quotient: one partition per runner.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EQuotient {
    components: Vec<Partition>,
}

impl EQuotient {
    pub fn new(components: Vec<Partition>) -> Self {
        EQuotient { components }
    }

    pub fn empty(e: u64) -> Self {
        EQuotient {
            components: vec![Partition::empty(); e as usize],
        }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(Partition::size).sum()
    }
}

impl fmt::Display for EQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(Partition::to_string).collect();
        write!(f, "({})", parts.join("|"))
    }
}

impl fmt::Debug for EQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EQuotient{self}")
    }
}

pub fn e_core(lam: &Partition, e: u64, r: usize) -> Result<Partition> {
    check_level(e)?;
    Ok(partition_of_beta(&beta_numbers(lam, r)?.core_betas(e)))
}

/// `(|lambda| - |core|) / e`.
pub fn e_weight(lam: &Partition, e: u64, r: usize) -> Result<u64> {
    let core = e_core(lam, e, r)?;
    Ok((lam.size() - core.size()) / e)
}

pub fn is_e_core(lam: &Partition, e: u64) -> Result<bool> {
    Ok(e_weight(lam, e, lam.len())? == 0)
}

pub fn e_quotient(lam: &Partition, e: u64, r: usize) -> Result<EQuotient> {
    let ab = AbacusConfig::of_partition(lam, e, r)?;
    let components = (0..e)
        .map(|j| {
            let rows = ab.runner_rows(j);
            partition_of_beta(&BetaSequence { betas: rows })
        })
        .collect();
    Ok(EQuotient { components })
}

/// Rebuilds the partition with the given e-core and e-quotient at rank `r`.
/// Runner `j` of the core abacus holds `c_j` beads; the quotient component
/// on that runner is placed with `c_j` beta numbers, so it must have at most
/// `c_j` parts.
pub fn from_core_and_quotient(
    core: &Partition,
    q: &EQuotient,
    e: u64,
    r: usize,
) -> Result<Partition> {
    check_level(e)?;
    if q.components.len() != e as usize {
        return Err(Error::QuotientLength {
            expected: e as usize,
            found: q.components.len(),
        });
    }
    if !is_e_core(core, e)? {
        return Err(Error::NotACore(core.to_string()));
    }
    let ab = AbacusConfig::of_partition(core, e, r)?;
    let mut positions = Vec::with_capacity(r);
    for (j, comp) in q.components.iter().enumerate() {
        let available = ab.runner_rows(j as u64).len();
        if comp.len() > available {
            return Err(Error::RankOverflow {
                runner: j,
                needed: comp.len(),
                available,
            });
        }
        let rows = beta_numbers(comp, available)?;
        positions.extend(rows.betas.iter().map(|row| row * e + j as u64));
    }
    Ok(partition_of_beta(&BetaSequence::from_unsorted(positions)?))
}

/// `sum floor(beta_i / e)` when every runner carries at most one bead, and
/// `None` otherwise. In that situation each bead slides straight to row 0.
pub fn weight_if_single_bead_runners(bs: &BetaSequence, e: u64) -> Option<u64> {
    let mut seen = vec![false; e as usize];
    for &b in &bs.betas {
        let slot = &mut seen[(b % e) as usize];
        if *slot {
            return None;
        }
        *slot = true;
    }
    Some(bs.betas.iter().map(|b| b / e).sum())
}

/// `sum_i i * (ceil((beta_i - beta_{i+1}) / e) - 1)`, a lower bound for the
/// e-weight.
pub fn weight_lower_bound(bs: &BetaSequence, e: u64) -> u64 {
    bs.betas
        .windows(2)
        .enumerate()
        .map(|(i, w)| (i as u64 + 1) * ((w[0] - w[1]).div_ceil(e) - 1))
        .sum()
}
