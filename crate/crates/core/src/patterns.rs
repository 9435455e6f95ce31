//! The set `W_{r,e,w}` of dominant weights of partitions with at most `r`
//! parts and e-weight `w`: constructive enumeration as a disjoint union of
//! simplex copies, the counting formula, affine vertices, good and bad
//! pairs, stingray and regular patterns.
//!
//! Affine vertices are written in pairing scale: the vertex
//! `sum a_i e Lambda_i` is the [`DominantWeight`] with coefficients `a_i e`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::abacus::{beta_numbers, BetaSequence};
use crate::error::{Error, Result};
use crate::partitions::{
    binomial, count_multipartitions, enumerate_multipartitions, Composition, MultiPartition,
    WeakComposition,
};
use crate::report::Report;
use crate::weights::{is_strictly_inside, omega_of_betas, shi_vector, DominantWeight, ShiVector};

/// `(r, e, w)` with `e > r >= 3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct GenericTriple {
    r: usize,
    e: u64,
    w: u64,
}

impl GenericTriple {
    pub fn new(r: usize, e: u64, w: u64) -> Result<Self> {
        if r < 3 || e <= r as u64 {
            return Err(Error::NotGeneric { r, e });
        }
        Ok(GenericTriple { r, e, w })
    }

    /// Skips the genericity check. Enumeration still works for any `r >= 1`
    /// and `e >= 2`; the structural results do not.
    pub fn unchecked(r: usize, e: u64, w: u64) -> Self {
        GenericTriple { r, e, w }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn w(&self) -> u64 {
        self.w
    }

    pub fn with_w(&self, w: u64) -> Self {
        GenericTriple { w, ..*self }
    }
}

impl fmt::Display for GenericTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.e, self.w)
    }
}

/// Which simplex copy a weight comes from: the composition recording bead
/// counts on the occupied runners, the gaps between those runners, and the
/// quotient read on the occupied runners.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct ComponentKey {
    pub mu: Composition,
    pub gaps: Vec<u64>,
    pub quotient: MultiPartition,
}

impl fmt::Display for ComponentKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gaps = self.gaps.iter().map(u64::to_string).join(",");
        write!(f, "mu={} gaps=({}) q={}", self.mu, gaps, self.quotient)
    }
}

/// Occupied runners `s_1 = 0, s_{k+1} = s_k + g_k + 1`.
pub fn runner_positions(gaps: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(gaps.len());
    let mut s = 0;
    for &g in gaps {
        out.push(s);
        s += g + 1;
    }
    out
}

/// Beta numbers of the abacus described by a component key at level `e`.
pub fn key_betas(key: &ComponentKey, e: u64) -> BetaSequence {
    let runners = runner_positions(&key.gaps);
    let mut positions = Vec::with_capacity(key.mu.size() as usize);
    for ((&count, comp), &s) in key.mu.parts().iter().zip(key.quotient.components()).zip(&runners) {
        let rows = beta_numbers(comp, count as usize).expect("quotient respects the type bound");
        positions.extend(rows.betas().iter().map(|row| row * e + s));
    }
    BetaSequence::from_unsorted(positions).expect("distinct abacus positions")
}

/// `W_{r,e,w}` together with the component each weight came from.
#[derive(Clone, Debug)]
pub struct BlockWeightSet {
    triple: GenericTriple,
    entries: BTreeMap<DominantWeight, ComponentKey>,
}

#[derive(Serialize)]
struct EntryJson<'a> {
    weight: &'a DominantWeight,
    mu: &'a Composition,
    gaps: &'a [u64],
    quotient: &'a MultiPartition,
}

impl BlockWeightSet {
    /// A set with no weights, for drawing a bare grid.
    pub fn empty(t: GenericTriple) -> Self {
        BlockWeightSet {
            triple: t,
            entries: BTreeMap::new(),
        }
    }

    pub fn triple(&self) -> GenericTriple {
        self.triple
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, w: &DominantWeight) -> bool {
        self.entries.contains_key(w)
    }

    pub fn key(&self, w: &DominantWeight) -> Option<&ComponentKey> {
        self.entries.get(w)
    }

    /// Weights in lexicographic order with their keys.
    pub fn iter(&self) -> impl Iterator<Item = (&DominantWeight, &ComponentKey)> {
        self.entries.iter()
    }

    pub fn weights(&self) -> impl Iterator<Item = &DominantWeight> {
        self.entries.keys()
    }

    pub fn weight_set(&self) -> BTreeSet<DominantWeight> {
        self.entries.keys().cloned().collect()
    }

    /// One JSON object per weight, in lexicographic weight order.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(w, k)| {
                serde_json::to_value(EntryJson {
                    weight: w,
                    mu: &k.mu,
                    gaps: &k.gaps,
                    quotient: &k.quotient,
                })
                .expect("entries serialize")
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

fn component_entries(t: GenericTriple, mu: &Composition) -> Vec<(DominantWeight, ComponentKey)> {
    let j = mu.len() as u64;
    if j > t.e {
        return Vec::new();
    }
    let quotients = enumerate_multipartitions(mu, t.w);
    let mut out = Vec::new();
    for gaps in WeakComposition::all_of(t.e - j, mu.len()) {
        for q in &quotients {
            let key = ComponentKey {
                mu: mu.clone(),
                gaps: gaps.parts().to_vec(),
                quotient: q.clone(),
            };
            let weight = omega_of_betas(&key_betas(&key, t.e));
            out.push((weight, key));
        }
    }
    out
}

fn merge(
    t: GenericTriple,
    parts: impl IntoIterator<Item = Vec<(DominantWeight, ComponentKey)>>,
) -> Result<BlockWeightSet> {
    let mut entries = BTreeMap::new();
    for part in parts {
        for (weight, key) in part {
            if let Some(previous) = entries.get(&weight) {
                return Err(Error::NotDisjoint {
                    weight: weight.into_coeffs(),
                    first: format!("{previous}"),
                    second: format!("{key}"),
                });
            }
            entries.insert(weight, key);
        }
    }
    Ok(BlockWeightSet { triple: t, entries })
}

fn check_triple(t: GenericTriple) -> Result<()> {
    if t.e < 2 {
        return Err(Error::InvalidLevel(t.e));
    }
    if t.r == 0 {
        return Err(Error::Rank { rank: 0, needed: 1 });
    }
    Ok(())
}

/// Builds `W_{r,e,w}` component by component: for each composition `mu` of
/// `r`, each gap tuple and each multipartition of type `mu` and size `w`,
/// places the quotient on the occupied runners and applies `Omega`. Fails if
/// two keys produce the same weight.
pub fn enumerate_block_weights(t: GenericTriple) -> Result<BlockWeightSet> {
    check_triple(t)?;
    merge(
        t,
        Composition::all_of(t.r as u64)
            .iter()
            .map(|mu| component_entries(t, mu)),
    )
}

/// Same result as [`enumerate_block_weights`], with the components built on
/// the rayon pool.
pub fn enumerate_block_weights_par(t: GenericTriple) -> Result<BlockWeightSet> {
    check_triple(t)?;
    let parts: Vec<_> = Composition::all_of(t.r as u64)
        .par_iter()
        .map(|mu| component_entries(t, mu))
        .collect();
    merge(t, parts)
}

/// `sum_{mu |= r} A(mu; w) * binomial(e - 1, l(mu) - 1)`.
pub fn count_block_weights(t: GenericTriple) -> Result<u64> {
    let mut total: u64 = 0;
    for mu in Composition::all_of(t.r as u64) {
        let simplex = binomial(t.e - 1, mu.len() as u64 - 1).ok_or(Error::Overflow)?;
        let term = count_multipartitions(&mu, t.w)?
            .checked_mul(simplex)
            .ok_or(Error::Overflow)?;
        total = total.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Direct membership test for `W_{r,e,w}`, independent of the enumeration.
/// A weight fixes the beta numbers up to a common shift `t`; shifting by `e`
/// moves every bead one row down and adds `r` to the weight, so only
/// `t < e` needs checking.
pub fn is_block_weight(u: &DominantWeight, e: u64, w: u64) -> bool {
    let r = u.rank() as u64;
    if u.coeffs().contains(&0) {
        return false;
    }
    let mut offsets = Vec::with_capacity(u.rank());
    let mut acc = 0;
    offsets.push(0);
    for &c in u.coeffs().iter().rev() {
        acc += c;
        offsets.push(acc);
    }
    (0..e).any(|t| {
        let bs = BetaSequence::from_unsorted(offsets.iter().map(|o| o + t).collect())
            .expect("positive coefficients give distinct betas");
        let base = bs.e_weight(e);
        base <= w && (w - base).is_multiple_of(r)
    })
}

/// `sum_i i (a_i - 1)` for a vertex written as `a` (not pairing scale).
fn vertex_level(a: &[u64]) -> u64 {
    a.iter()
        .enumerate()
        .map(|(i, &x)| (i as u64 + 1) * (x - 1))
        .sum()
}

/// `sum a_i e Lambda_i` lies in `W_{r,e,w}` iff `w >= sum i(a_i - 1)` and the
/// difference is a multiple of `r`. All `a_i` must be positive.
pub fn affine_vertex_membership(t: GenericTriple, a: &[u64]) -> bool {
    if a.len() + 1 != t.r || a.contains(&0) {
        return false;
    }
    let s = vertex_level(a);
    t.w >= s && (t.w - s).is_multiple_of(t.r as u64)
}

/// Every `a` with `1 <= a_i` and `sum i(a_i - 1) <= bound`, in lexicographic
/// order.
fn vertex_box(len: usize, bound: u64) -> Vec<Vec<u64>> {
    fn rec(i: usize, len: usize, budget: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == len {
            out.push(cur.clone());
            return;
        }
        let weight = i as u64 + 1;
        for extra in 0..=budget / weight {
            cur.push(extra + 1);
            rec(i + 1, len, budget - extra * weight, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, len, bound, &mut Vec::with_capacity(len), &mut out);
    out
}

fn scaled(a: &[u64], e: u64) -> DominantWeight {
    DominantWeight::new(a.iter().map(|x| x * e).collect())
}

fn unscaled(v: &DominantWeight, e: u64) -> Vec<u64> {
    v.coeffs().iter().map(|x| x / e).collect()
}

/// Vertices with `sum i(a_i - 1) = w`, in pairing scale.
pub fn boundary_affine_vertices(t: GenericTriple) -> Vec<DominantWeight> {
    vertex_box(t.r - 1, t.w)
        .into_iter()
        .filter(|a| vertex_level(a) == t.w)
        .map(|a| scaled(&a, t.e))
        .collect()
}

/// Vertices strictly dominated by some boundary vertex, in pairing scale.
/// Raising `a_1` changes `sum i(a_i - 1)` by one per step, so these are
/// exactly the vertices with `sum i(a_i - 1) < w`.
pub fn interior_affine_vertices(t: GenericTriple) -> Vec<DominantWeight> {
    vertex_box(t.r - 1, t.w)
        .into_iter()
        .filter(|a| vertex_level(a) < t.w)
        .map(|a| scaled(&a, t.e))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairKind {
    Good,
    Bad,
}

/// Adjacent vertices `v2 = v1 + e Lambda_{r-1}` (pairing scale).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct VertexPair {
    pub v1: DominantWeight,
    pub v2: DominantWeight,
    pub kind: PairKind,
}

/// All good and bad pairs, ordered by `v1`.
pub fn classify_pairs(t: GenericTriple) -> Vec<VertexPair> {
    let mut out = Vec::new();
    for a in vertex_box(t.r - 1, t.w) {
        let s1 = vertex_level(&a);
        if s1 >= t.w {
            continue;
        }
        let mut b = a.clone();
        *b.last_mut().expect("r >= 2") += 1;
        let s2 = vertex_level(&b);
        let kind = if s2 == t.w {
            PairKind::Bad
        } else if s2 < t.w && !affine_vertex_membership(t, &a) && affine_vertex_membership(t, &b) {
            PairKind::Good
        } else {
            continue;
        };
        out.push(VertexPair {
            v1: scaled(&a, t.e),
            v2: scaled(&b, t.e),
            kind,
        });
    }
    out
}

/// Dominant lattice points `u` with `|<u - v, alpha>| <= e` for every
/// positive root (`< e` when `open`).
pub fn cell_points(v: &DominantWeight, e: u64, open: bool) -> Vec<DominantWeight> {
    let centre = v.pairings();
    let ranges: Vec<std::ops::RangeInclusive<u64>> = v
        .coeffs()
        .iter()
        .map(|&c| c.saturating_sub(e)..=c + e)
        .collect();
    ranges
        .into_iter()
        .multi_cartesian_product()
        .map(DominantWeight::new)
        .filter(|u| {
            u.pairings().iter().zip(&centre).all(|(&p, &q)| {
                let d = p.abs_diff(q);
                if open {
                    d < e
                } else {
                    d <= e
                }
            })
        })
        .collect()
}

/// The `r!` alcoves whose closure contains the affine vertex `v`, each with
/// a lattice point strictly inside it. Perturbing `v` by a permutation `x`
/// of `0..r` in epsilon coordinates changes the pairing with
/// `eps_i - eps_j` by `x_i - x_j`, which has absolute value below `e`.
pub fn alcoves_at_vertex(v: &DominantWeight, e: u64) -> Vec<(ShiVector, DominantWeight)> {
    let r = v.rank();
    let levels: Vec<i64> = v.pairings().iter().map(|p| (p / e) as i64).collect();
    (0..r as u64)
        .permutations(r)
        .map(|x| {
            let coeffs: Vec<u64> = (0..r - 1)
                .map(|i| (v.coeffs()[i] + x[i]) - x[i + 1])
                .collect();
            let mut entries = Vec::with_capacity(levels.len());
            let mut idx = 0;
            for i in 0..r {
                for j in i + 1..r {
                    entries.push(levels[idx] - i64::from(x[i] < x[j]));
                    idx += 1;
                }
            }
            let shi = ShiVector::new(e, r, entries).expect("one entry per root");
            (shi, DominantWeight::new(coeffs))
        })
        .collect()
}

/// The stingray of a bad pair split into body and tail.
#[derive(Clone, Debug, Serialize)]
pub struct Stingray {
    pub pair: VertexPair,
    pub pattern: BTreeSet<DominantWeight>,
    pub body: BTreeSet<DominantWeight>,
    pub tail: BTreeSet<DominantWeight>,
}

/// `{v1 + k Lambda_{r-1} : 1 <= k <= e}`.
pub fn tail_points(v1: &DominantWeight, e: u64) -> Vec<DominantWeight> {
    (1..=e)
        .map(|k| {
            let mut c = v1.coeffs().to_vec();
            *c.last_mut().expect("rank >= 2") += k;
            DominantWeight::new(c)
        })
        .collect()
}

fn is_bad_pair(t: GenericTriple, v1: &DominantWeight, v2: &DominantWeight) -> bool {
    use crate::weights::is_affine_vertex;
    if v1.rank() != t.r || v2.rank() != t.r || !is_affine_vertex(v1, t.e) || !is_affine_vertex(v2, t.e) {
        return false;
    }
    let a = unscaled(v1, t.e);
    let b = unscaled(v2, t.e);
    let adjacent = a[..a.len() - 1] == b[..b.len() - 1] && a[a.len() - 1] + 1 == b[b.len() - 1];
    adjacent && vertex_level(&a) < t.w && vertex_level(&b) == t.w
}

/// Pattern `(open cell of v1 ∩ W) ∪ {v2}`, with the tail split off.
pub fn stingray(data: &BlockWeightSet, v1: &DominantWeight, v2: &DominantWeight) -> Result<Stingray> {
    let t = data.triple;
    if !is_bad_pair(t, v1, v2) {
        return Err(Error::NotABadPair {
            v1: v1.coeffs().to_vec(),
            v2: v2.coeffs().to_vec(),
        });
    }
    let mut pattern: BTreeSet<DominantWeight> = cell_points(v1, t.e, true)
        .into_iter()
        .filter(|u| data.contains(u))
        .collect();
    pattern.insert(v2.clone());
    let tail: BTreeSet<DominantWeight> = tail_points(v1, t.e).into_iter().collect();
    let body = pattern.difference(&tail).cloned().collect();
    Ok(Stingray {
        pair: VertexPair {
            v1: v1.clone(),
            v2: v2.clone(),
            kind: PairKind::Bad,
        },
        pattern,
        body,
        tail,
    })
}

fn weight_json(w: &DominantWeight) -> serde_json::Value {
    json!(w.coeffs())
}

/// Every tail point of every bad pair lies in `W`.
pub fn verify_tail_containment(data: &BlockWeightSet) -> Report {
    let t = data.triple;
    let mut report = Report::new(format!("tail-containment {t}"));
    for pair in classify_pairs(t).iter().filter(|p| p.kind == PairKind::Bad) {
        for point in tail_points(&pair.v1, t.e) {
            report.expect(data.contains(&point), || {
                json!({"v1": weight_json(&pair.v1), "v2": weight_json(&pair.v2), "missing": weight_json(&point)})
            });
        }
    }
    report
}

/// No weight of `W` lies inside an alcove whose closure contains a whole
/// tail, i.e. an alcove around both `v1` and `v2` of a bad pair. Weights on
/// walls belong to no open alcove and are skipped.
pub fn verify_tail_separation(data: &BlockWeightSet) -> Report {
    let t = data.triple;
    let mut report = Report::new(format!("tail-separation {t}"));
    let mut forbidden: HashMap<ShiVector, &VertexPair> = HashMap::new();
    let pairs = classify_pairs(t);
    for pair in pairs.iter().filter(|p| p.kind == PairKind::Bad) {
        let around_v2: BTreeSet<ShiVector> = alcoves_at_vertex(&pair.v2, t.e)
            .into_iter()
            .map(|(s, _)| s)
            .collect();
        for (shi, _) in alcoves_at_vertex(&pair.v1, t.e) {
            if around_v2.contains(&shi) {
                forbidden.insert(shi, pair);
            }
        }
    }
    for u in data.weights().filter(|u| is_strictly_inside(u, t.e)) {
        let shi = shi_vector(u, t.e);
        report.expect(!forbidden.contains_key(&shi), || {
            let pair = forbidden[&shi];
            json!({"v1": weight_json(&pair.v1), "v2": weight_json(&pair.v2), "point": weight_json(u), "alcove": shi})
        });
    }
    report.note(format!("{} tail alcoves checked", forbidden.len()));
    report
}

/// Witness points `P_1..P_6` around a rank-3 vertex `(a_1 e, a_2 e)`.
pub fn hexagon_witnesses(v: &DominantWeight) -> Vec<DominantWeight> {
    let (x, y) = (v.coeffs()[0], v.coeffs()[1]);
    [
        (x + 1, y + 1),
        (x + 2, y - 1),
        (x + 1, y - 2),
        (x - 1, y - 1),
        (x - 2, y + 1),
        (x - 1, y + 2),
    ]
    .into_iter()
    .map(|(a, b)| DominantWeight::new(vec![a, b]))
    .collect()
}

/// Every lattice point strictly inside an alcove around `pair.v1` lies in
/// `W`, and each such alcove has `binomial(e - 1, r - 1)` interior points.
/// Works in any rank.
pub fn verify_regular_pattern_at(data: &BlockWeightSet, pair: &VertexPair) -> Report {
    let t = data.triple;
    let mut report = Report::new(format!("regular-pattern {t} at {}", pair.v1));
    let expected_size = binomial(t.e - 1, t.r as u64 - 1).unwrap_or(u64::MAX);
    let around: BTreeSet<ShiVector> = alcoves_at_vertex(&pair.v1, t.e)
        .into_iter()
        .map(|(s, _)| s)
        .collect();
    let mut buckets: BTreeMap<ShiVector, Vec<DominantWeight>> = BTreeMap::new();
    for u in cell_points(&pair.v1, t.e, true) {
        if is_strictly_inside(&u, t.e) {
            buckets.entry(shi_vector(&u, t.e)).or_default().push(u);
        }
    }
    report.expect(buckets.keys().eq(around.iter()), || {
        json!({"v1": weight_json(&pair.v1), "problem": "alcoves in the open cell do not match the vertex star"})
    });
    for (shi, points) in &buckets {
        report.expect(points.len() as u64 == expected_size, || {
            json!({"v1": weight_json(&pair.v1), "alcove": shi, "interior_points": points.len()})
        });
        let missing: Vec<&DominantWeight> = points.iter().filter(|u| !data.contains(u)).collect();
        report.expect(missing.is_empty(), || {
            json!({
                "v1": weight_json(&pair.v1),
                "v2": weight_json(&pair.v2),
                "alcove": shi,
                "missing": missing.iter().map(|u| weight_json(u)).collect::<Vec<_>>(),
            })
        });
    }
    report
}

/// [`verify_regular_pattern_at`] for every good pair.
pub fn verify_regular_pattern_general(data: &BlockWeightSet) -> Report {
    let t = data.triple;
    let mut report = Report::new(format!("regular-pattern {t}"));
    for pair in classify_pairs(t).iter().filter(|p| p.kind == PairKind::Good) {
        report.absorb(verify_regular_pattern_at(data, pair));
    }
    report
}

/// Rank-3 form: the six witnesses around `v1` of every good pair lie in the
/// six alcoves of its star and in `W`; then the full interior check of
/// [`verify_regular_pattern_general`].
pub fn verify_regular_pattern(data: &BlockWeightSet) -> Result<Report> {
    let t = data.triple;
    if t.r != 3 {
        return Err(Error::RankMismatch {
            expected: 3,
            found: t.r,
        });
    }
    let mut report = Report::new(format!("regular-pattern {t}"));
    for pair in classify_pairs(t).iter().filter(|p| p.kind == PairKind::Good) {
        let star: BTreeSet<ShiVector> = alcoves_at_vertex(&pair.v1, t.e)
            .into_iter()
            .map(|(s, _)| s)
            .collect();
        let witnesses = hexagon_witnesses(&pair.v1);
        let hit: BTreeSet<ShiVector> = witnesses.iter().map(|p| shi_vector(p, t.e)).collect();
        report.expect(hit == star && witnesses.iter().all(|p| is_strictly_inside(p, t.e)), || {
            json!({"v1": weight_json(&pair.v1), "problem": "witnesses do not cover the six alcoves"})
        });
        for p in &witnesses {
            report.expect(data.contains(p), || {
                json!({"v1": weight_json(&pair.v1), "missing": weight_json(p)})
            });
        }
    }
    report.absorb(verify_regular_pattern_general(data));
    Ok(report)
}

/// `{a + e Lambda_1 : a in W_w}` equals `{b in W_{w+1} : b_1 > e}`.
pub fn verify_embedding_sets(lower: &BlockWeightSet, upper: &BlockWeightSet) -> Report {
    let e = lower.triple.e;
    let mut report = Report::new(format!("embedding {} -> {}", lower.triple, upper.triple));
    let image: BTreeSet<DominantWeight> = lower
        .weights()
        .map(|a| {
            let mut c = a.coeffs().to_vec();
            c[0] += e;
            DominantWeight::new(c)
        })
        .collect();
    let target: BTreeSet<DominantWeight> = upper
        .weights()
        .filter(|b| b.coeffs()[0] > e)
        .cloned()
        .collect();
    for u in image.symmetric_difference(&target) {
        report.fail(json!({
            "point": weight_json(u),
            "side": if image.contains(u) { "image only" } else { "target only" },
        }));
    }
    report.cases = (image.len() + target.len()) as u64;
    report
}

pub fn verify_embedding(t: GenericTriple) -> Result<Report> {
    let lower = enumerate_block_weights(t)?;
    let upper = enumerate_block_weights(t.with_w(t.w + 1))?;
    Ok(verify_embedding_sets(&lower, &upper))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dw(c: &[u64]) -> DominantWeight {
        DominantWeight::new(c.to_vec())
    }

    fn triple(r: usize, e: u64, w: u64) -> GenericTriple {
        GenericTriple::new(r, e, w).unwrap()
    }

    #[test]
    fn genericity() {
        assert!(GenericTriple::new(3, 3, 0).is_err());
        assert!(GenericTriple::new(2, 8, 0).is_err());
        assert!(GenericTriple::new(3, 4, 0).is_ok());
    }

    #[test]
    fn degenerate_three_two() {
        let data = enumerate_block_weights(GenericTriple::unchecked(3, 2, 0)).unwrap();
        let mut per_mu: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
        for (_, k) in data.iter() {
            *per_mu.entry(k.mu.parts().to_vec()).or_default() += 1;
        }
        assert_eq!(per_mu.get(&vec![2, 1]), Some(&1));
        assert_eq!(per_mu.get(&vec![1, 2]), Some(&1));
        assert_eq!(per_mu.get(&vec![1, 1, 1]), None);
        assert_eq!(data.weight_set(), [dw(&[1, 1]), dw(&[2, 1]), dw(&[2, 2])].into());
    }

    #[test]
    fn core_counts() {
        assert_eq!(count_block_weights(triple(3, 8, 0)).unwrap(), 36);
        assert_eq!(count_block_weights(triple(3, 4, 1)).unwrap(), 22);
        assert_eq!(enumerate_block_weights(triple(3, 8, 0)).unwrap().len(), 36);
        assert_eq!(enumerate_block_weights(triple(3, 4, 1)).unwrap().len(), 22);
    }

    #[test]
    fn fundamental_alcove_interior_at_weight_zero() {
        let t = triple(4, 9, 0);
        let data = enumerate_block_weights(t).unwrap();
        let ones: Vec<&DominantWeight> = data
            .iter()
            .filter(|(_, k)| k.mu.len() == 4)
            .map(|(w, _)| w)
            .collect();
        assert_eq!(ones.len() as u64, binomial(8, 3).unwrap());
        for w in ones {
            assert!(is_strictly_inside(w, 9));
            assert!(shi_vector(w, 9).is_zero());
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let t = triple(4, 7, 3);
        let a = enumerate_block_weights(t).unwrap();
        let b = enumerate_block_weights_par(t).unwrap();
        assert!(a.iter().eq(b.iter()));
    }

    #[test]
    fn membership_matches_enumeration() {
        let t = triple(3, 8, 4);
        let data = enumerate_block_weights(t).unwrap();
        for a1 in 0..60 {
            for a2 in 0..60 {
                let u = dw(&[a1, a2]);
                assert_eq!(is_block_weight(&u, 8, 4), data.contains(&u), "{u}");
            }
        }
    }

    #[test]
    fn vertex_examples() {
        let e = 8;
        let t = triple(3, e, 3);
        assert!(affine_vertex_membership(t, &[1, 1]));
        assert!(!affine_vertex_membership(triple(3, e, 5), &[1, 1]));
        assert_eq!(
            boundary_affine_vertices(t),
            vec![dw(&[2 * e, 2 * e]), dw(&[4 * e, e])]
        );
        assert_eq!(
            interior_affine_vertices(t),
            vec![dw(&[e, e]), dw(&[e, 2 * e]), dw(&[2 * e, e]), dw(&[3 * e, e])]
        );
        assert_eq!(
            boundary_affine_vertices(triple(3, e, 5)),
            vec![dw(&[2 * e, 3 * e]), dw(&[4 * e, 2 * e]), dw(&[6 * e, e])]
        );
        assert_eq!(boundary_affine_vertices(triple(4, 6, 0)), vec![dw(&[6, 6, 6])]);
        assert!(interior_affine_vertices(triple(4, 6, 0)).is_empty());
    }

    #[test]
    fn interior_matches_domination_definition() {
        for (r, w) in [(3, 5), (4, 4), (5, 3)] {
            let t = triple(r, r as u64 + 2, w);
            let boundary = boundary_affine_vertices(t);
            let e = t.e();
            let mut by_definition = Vec::new();
            for a in (0..r - 1).map(|_| 1..=w + 1).multi_cartesian_product() {
                let u = scaled(&a, e);
                if boundary.iter().any(|b| u.le(b) && &u != b) {
                    by_definition.push(u);
                }
            }
            by_definition.sort();
            let mut closed_form = interior_affine_vertices(t);
            closed_form.sort();
            assert_eq!(closed_form, by_definition);
        }
    }

    #[test]
    fn pair_examples() {
        let e = 8;
        let bad = |t| {
            classify_pairs(t)
                .into_iter()
                .filter(|p| p.kind == PairKind::Bad)
                .map(|p| (p.v1, p.v2))
                .collect::<Vec<_>>()
        };
        let good = |t| {
            classify_pairs(t)
                .into_iter()
                .filter(|p| p.kind == PairKind::Good)
                .map(|p| (p.v1, p.v2))
                .collect::<Vec<_>>()
        };
        assert_eq!(bad(triple(3, e, 3)), vec![(dw(&[2 * e, e]), dw(&[2 * e, 2 * e]))]);
        assert!(good(triple(3, e, 3)).is_empty());
        assert_eq!(
            bad(triple(3, e, 5)),
            vec![
                (dw(&[2 * e, 2 * e]), dw(&[2 * e, 3 * e])),
                (dw(&[4 * e, e]), dw(&[4 * e, 2 * e]))
            ]
        );
        assert_eq!(good(triple(3, e, 5)), vec![(dw(&[e, e]), dw(&[e, 2 * e]))]);
        assert!(classify_pairs(triple(3, e, 0)).is_empty());
    }

    #[test]
    fn open_cell() {
        let cell = cell_points(&dw(&[8, 8]), 8, true);
        assert!(cell.contains(&dw(&[9, 9])));
        assert!(cell.contains(&dw(&[8, 8])));
        assert!(!cell.contains(&dw(&[16, 8])));
        assert_eq!(cell.len(), 169);
        let closed = cell_points(&dw(&[8, 8]), 8, false);
        assert!(closed.contains(&dw(&[16, 8])));
    }

    #[test]
    fn star_of_a_vertex() {
        let v = dw(&[16, 8]);
        let star = alcoves_at_vertex(&v, 8);
        assert_eq!(star.len(), 6);
        let distinct: BTreeSet<_> = star.iter().map(|(s, _)| s.clone()).collect();
        assert_eq!(distinct.len(), 6);
        for (shi, point) in &star {
            assert!(is_strictly_inside(point, 8));
            assert_eq!(&shi_vector(point, 8), shi);
        }
        assert_eq!(alcoves_at_vertex(&dw(&[6, 6, 6, 6]), 6).len(), 120);
    }

    #[test]
    fn stingray_split() {
        let e = 8;
        let data = enumerate_block_weights(triple(3, e, 5)).unwrap();
        let s = stingray(&data, &dw(&[2 * e, 2 * e]), &dw(&[2 * e, 3 * e])).unwrap();
        assert_eq!(s.tail.len(), e as usize);
        assert!(s.tail.contains(&dw(&[2 * e, 3 * e])));
        assert!(!s.tail.contains(&dw(&[2 * e, 2 * e])));
        assert!(s.tail.is_subset(&s.pattern));
        assert!(s.body.is_disjoint(&s.tail));
        let closed: BTreeSet<_> = cell_points(&dw(&[2 * e, 2 * e]), e, false).into_iter().collect();
        assert!(s.pattern.is_subset(&closed));
        assert!(matches!(
            stingray(&data, &dw(&[e, e]), &dw(&[e, 2 * e])),
            Err(Error::NotABadPair { .. })
        ));
    }

    #[test]
    fn tails() {
        for w in 0..=6 {
            let data = enumerate_block_weights(triple(3, 8, w)).unwrap();
            assert!(verify_tail_containment(&data).passed(), "w={w}");
            assert!(verify_tail_separation(&data).passed(), "w={w}");
        }
    }

    #[test]
    fn regular_pattern_rank_three() {
        let data = enumerate_block_weights(triple(3, 8, 5)).unwrap();
        let report = verify_regular_pattern(&data).unwrap();
        assert!(report.passed(), "{:?}", report.witnesses);
        assert!(report.cases > 0);
        let data4 = enumerate_block_weights(triple(4, 6, 2)).unwrap();
        assert!(verify_regular_pattern(&data4).is_err());
    }

    #[test]
    fn hexagon_witnesses_sit_in_the_star() {
        let v = dw(&[8, 8]);
        let star: BTreeSet<ShiVector> = alcoves_at_vertex(&v, 8).into_iter().map(|(s, _)| s).collect();
        let hit: BTreeSet<ShiVector> = hexagon_witnesses(&v).iter().map(|p| shi_vector(p, 8)).collect();
        assert_eq!(star, hit);
    }

    #[test]
    fn embedding() {
        assert!(verify_embedding(triple(3, 8, 0)).unwrap().passed());
        assert!(verify_embedding(triple(3, 8, 3)).unwrap().passed());
    }

    #[test]
    fn entry_json() {
        let data = enumerate_block_weights(triple(3, 4, 0)).unwrap();
        let rows = data.to_json();
        let first = &rows.as_array().unwrap()[0];
        assert!(first.get("weight").is_some());
        assert!(first.get("mu").is_some());
        assert!(first.get("gaps").is_some());
        assert!(first.get("quotient").is_some());
    }
}
