//! Partitions, compositions, multipartitions and the counting function
//! `A(mu; w)` (number of multipartitions of total size `w` whose `i`-th
//! component has at most `mu_i` parts).
//!
//! Textual format used throughout the crate and the CLI: comma-separated
//! integers (`"4,3,2,2"`), with the empty partition written as `""` or `"-"`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so `(4,2)` and `(4,2,0)` are the same value.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !is_partition(&parts) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// `|lambda|`
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// `l(lambda)`, the number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True iff no value occurs `e` or more times among the parts.
    pub fn is_e_regular(&self, e: u64) -> bool {
        is_e_regular(self, e)
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        write_list(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "-" {
            return Ok(Partition::empty());
        }
        Partition::new(parse_int_list(s)?)
    }
}

/// A sequence of positive integers of length at least one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All compositions of `n` in lexicographic order; empty for `n = 0`.
    pub fn all_of(n: u64) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        compositions_rec(n, &mut current, &mut out);
        out
    }
}

fn compositions_rec(remaining: u64, current: &mut Vec<u64>, out: &mut Vec<Composition>) {
    if remaining == 0 {
        if !current.is_empty() {
            out.push(Composition {
                parts: current.clone(),
            });
        }
        return;
    }
    for first in 1..=remaining {
        current.push(first);
        compositions_rec(remaining - first, current, out);
        current.pop();
    }
}

impl TryFrom<Vec<u64>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<u64> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_list(f, &self.parts)?;
        write!(f, ")")
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition{self}")
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_int_list(s)?)
    }
}

/// A fixed-length sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition {
    parts: Vec<u64>,
}

impl WeakComposition {
    pub fn new(parts: Vec<u64>) -> Self {
        WeakComposition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All weak compositions of `n` with exactly `len` entries, in
    /// lexicographic order. There are `binomial(n + len - 1, len - 1)` of them.
    pub fn all_of(n: u64, len: usize) -> Vec<WeakComposition> {
        let mut out = Vec::new();
        if len == 0 {
            if n == 0 {
                out.push(WeakComposition::new(Vec::new()));
            }
            return out;
        }
        let mut current = Vec::with_capacity(len);
        weak_compositions_rec(n, len, &mut current, &mut out);
        out
    }
}

fn weak_compositions_rec(
    remaining: u64,
    len: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<WeakComposition>,
) {
    if current.len() + 1 == len {
        current.push(remaining);
        out.push(WeakComposition::new(current.clone()));
        current.pop();
        return;
    }
    for first in 0..=remaining {
        current.push(first);
        weak_compositions_rec(remaining - first, len, current, out);
        current.pop();
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeakComposition({self})")
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(WeakComposition::new(parse_int_list(s)?))
    }
}

/// A tuple of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition { components }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(Partition::size).sum()
    }

    /// True iff `l(lambda^(i)) <= mu_i` for every component.
    pub fn is_of_type(&self, mu: &Composition) -> bool {
        self.components.len() == mu.len()
            && self
                .components
                .iter()
                .zip(mu.parts())
                .all(|(p, &m)| p.len() as u64 <= m)
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPartition{self}")
    }
}

/// True iff `seq` is weakly decreasing with every entry positive (the empty
/// sequence included).
pub fn is_partition(seq: &[u64]) -> bool {
    seq.iter().all(|&p| p > 0) && seq.windows(2).all(|w| w[0] >= w[1])
}

pub fn is_e_regular(lam: &Partition, e: u64) -> bool {
    lam.parts
        .chunk_by(|a, b| a == b)
        .all(|run| (run.len() as u64) < e)
}

/// Partitions of `n` with at most `max_parts` parts, in decreasing
/// lexicographic order (so `(2)` precedes `(1,1)`).
pub fn partitions_with_at_most(n: u64, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    partitions_rec(n, n, max_parts, &mut current, &mut out);
    out
}

fn partitions_rec(
    remaining: u64,
    max_part: u64,
    parts_left: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if parts_left == 0 {
        return;
    }
    for first in (1..=max_part.min(remaining)).rev() {
        // the remaining parts_left - 1 parts are each at most `first`
        if (remaining - first) > first * (parts_left as u64 - 1) {
            break;
        }
        current.push(first);
        partitions_rec(remaining - first, first, parts_left - 1, current, out);
        current.pop();
    }
}

/// `counts[n]` = number of partitions of `n` into at most `max_parts` parts,
/// for `n = 0..=max_n`.
fn counts_at_most(max_n: u64, max_parts: u64) -> Result<Vec<u64>> {
    // Adding the allowed part sizes 1..=max_parts one at a time is the usual
    // coin-change recurrence; by conjugation "parts <= m" and "at most m
    // parts" are equinumerous.
    let len = max_n as usize + 1;
    let mut counts = vec![0u64; len];
    counts[0] = 1;
    for part in 1..=max_parts.min(max_n) {
        let part = part as usize;
        for n in part..len {
            counts[n] = counts[n]
                .checked_add(counts[n - part])
                .ok_or(Error::Overflow)?;
        }
    }
    Ok(counts)
}

/// `A(mu; w)`: the number of `l(mu)`-tuples of partitions of total size `w`
/// whose `i`-th component has at most `mu_i` parts.
pub fn count_multipartitions(mu: &Composition, w: u64) -> Result<u64> {
    let len = w as usize + 1;
    let mut acc = vec![0u64; len];
    acc[0] = 1;
    for &m in mu.parts() {
        let counts = counts_at_most(w, m)?;
        let mut next = vec![0u64; len];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &c) in counts.iter().enumerate().take(len - i) {
                let term = a.checked_mul(c).ok_or(Error::Overflow)?;
                next[i + j] = next[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        acc = next;
    }
    Ok(acc[w as usize])
}

/// Every multipartition of type `mu` and total size `w`. Order: the first
/// component's size descends, each component's partitions are listed in
/// decreasing lexicographic order, and later components vary fastest.
///
/// Intended for desk-scale use (`w <= 64`); the output grows like `A(mu; w)`.
pub fn enumerate_multipartitions(mu: &Composition, w: u64) -> Vec<MultiPartition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(mu.len());
    multipartitions_rec(mu.parts(), w, &mut current, &mut out);
    out
}

fn multipartitions_rec(
    bounds: &[u64],
    remaining: u64,
    current: &mut Vec<Partition>,
    out: &mut Vec<MultiPartition>,
) {
    let Some((&bound, rest)) = bounds.split_first() else {
        if remaining == 0 {
            out.push(MultiPartition::new(current.clone()));
        }
        return;
    };
    let sizes: Box<dyn Iterator<Item = u64>> = if rest.is_empty() {
        Box::new(std::iter::once(remaining))
    } else {
        Box::new((0..=remaining).rev())
    };
    for size in sizes {
        for p in partitions_with_at_most(size, bound as usize) {
            current.push(p);
            multipartitions_rec(rest, remaining - size, current, out);
            current.pop();
        }
    }
}

/// `binomial(n, k)`, `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Parses a comma-separated list of nonnegative integers. Whitespace around
/// entries is ignored; an empty input gives an empty list.
pub fn parse_int_list(s: &str) -> Result<Vec<u64>> {
    let body = s.trim();
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let offset = s.len() - s.trim_start().len();
    let mut out = Vec::new();
    let mut position = offset;
    for token in body.split(',') {
        let lead = token.len() - token.trim_start().len();
        let value = token.trim();
        let parsed = value.parse::<u64>().map_err(|_| Error::Parse {
            input: s.to_string(),
            position: position + lead,
            message: if value.is_empty() {
                "expected an integer".to_string()
            } else {
                format!("expected a nonnegative integer, found {value:?}")
            },
        })?;
        out.push(parsed);
        position += token.len() + 1;
    }
    Ok(out)
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[u64]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}
