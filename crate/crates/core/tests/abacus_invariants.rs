use proptest::prelude::*;

use stingray_core::abacus::{
    beta_numbers, e_core, e_quotient, e_weight, from_core_and_quotient, partition_of_beta,
    weight_if_single_bead_runners, weight_lower_bound, AbacusConfig, BetaSequence, Move,
};
use stingray_core::partitions::Partition;

/// Partitions with at most `max_len` parts, each at most `max_part`.
fn boxed_partitions(max_len: usize, max_part: u64) -> Vec<Partition> {
    fn rec(max_len: usize, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).unwrap());
        if cur.len() == max_len {
            return;
        }
        for p in 1..=cap {
            cur.push(p);
            rec(max_len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_len, max_part, &mut Vec::new(), &mut out);
    out
}

/// e-weight by literally sliding beads up one row at a time.
fn weight_by_sliding(lam: &Partition, e: u64, r: usize) -> u64 {
    let mut ab = AbacusConfig::of_partition(lam, e, r).unwrap();
    let mut moves = 0;
    loop {
        let movable = ab
            .positions()
            .iter()
            .copied()
            .find(|&p| p >= e && !ab.contains(p - e));
        match movable {
            Some(p) => {
                ab = ab.shift_bead(p, Move::Up).unwrap();
                moves += 1;
            }
            None => return moves,
        }
    }
}

fn partition_strategy(max_len: usize, max_part: u64) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

#[test]
fn beta_roundtrip_exhaustive() {
    for lam in boxed_partitions(8, 20).iter().step_by(7) {
        for r in lam.len()..=lam.len() + 2 {
            let bs = beta_numbers(lam, r).unwrap();
            assert_eq!(&partition_of_beta(&bs), lam);
        }
    }
}

#[test]
fn core_weight_quotient_identities() {
    for lam in boxed_partitions(5, 9) {
        for e in 2..=5 {
            let r = lam.len();
            let core = e_core(&lam, e, r).unwrap();
            let w = e_weight(&lam, e, r).unwrap();
            let q = e_quotient(&lam, e, r).unwrap();
            assert_eq!(lam.size(), core.size() + e * q.size(), "{lam} e={e}");
            assert_eq!(w, q.size());
            assert_eq!(w, weight_by_sliding(&lam, e, r));
            assert_eq!(e_core(&core, e, r).unwrap(), core);
            for extra in 1..=3 {
                assert_eq!(e_core(&lam, e, r + extra).unwrap(), core);
                assert_eq!(e_weight(&lam, e, r + extra).unwrap(), w);
            }
            assert_eq!(from_core_and_quotient(&core, &q, e, r).unwrap(), lam);
        }
    }
}

#[test]
fn weight_lower_bound_never_exceeds_weight() {
    for lam in boxed_partitions(4, 12) {
        for e in 3..=5 {
            let bs = beta_numbers(&lam, 4).unwrap();
            assert!(weight_lower_bound(&bs, e) <= bs.e_weight(e), "{lam} e={e}");
        }
    }
}

#[test]
fn cores_have_trivial_lower_bound() {
    for lam in boxed_partitions(4, 8) {
        for e in 3..=5 {
            if e_weight(&lam, e, 4).unwrap() == 0 {
                let bs = beta_numbers(&lam, 4).unwrap();
                assert_eq!(weight_lower_bound(&bs, e), 0);
                assert!(bs.betas().windows(2).all(|w| w[0] - w[1] <= e));
            }
        }
    }
}

#[test]
fn nine_six_one_weight_two_ways() {
    let lam = Partition::new(vec![9, 6, 1]).unwrap();
    let core = e_core(&lam, 3, 3).unwrap();
    assert_eq!(e_weight(&lam, 3, 3).unwrap(), (lam.size() - core.size()) / 3);
    assert_eq!(weight_by_sliding(&lam, 3, 3), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn core_quotient_roundtrip(lam in partition_strategy(6, 15), e in 2u64..=7, extra in 0usize..3) {
        let r = lam.len() + extra;
        let core = e_core(&lam, e, r).unwrap();
        let q = e_quotient(&lam, e, r).unwrap();
        prop_assert_eq!(from_core_and_quotient(&core, &q, e, r).unwrap(), lam);
    }

    #[test]
    fn reconstruction_then_decomposition(
        core_src in partition_strategy(5, 10),
        e in 2u64..=6,
        rows in prop::collection::vec(0u64..4, 6),
    ) {
        // a core, and a quotient that fits its runners at this rank
        let r = 6usize;
        let core = e_core(&core_src, e, r).unwrap();
        let ab = AbacusConfig::of_partition(&core, e, r).unwrap();
        let mut comps = Vec::new();
        for j in 0..e {
            let avail = ab.runner_rows(j).len();
            let mut parts: Vec<u64> = rows.iter().take(avail).copied().collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            comps.push(Partition::new(parts).unwrap());
        }
        let q = stingray_core::EQuotient::new(comps);
        let lam = from_core_and_quotient(&core, &q, e, r).unwrap();
        prop_assert_eq!(e_core(&lam, e, r).unwrap(), core);
        prop_assert_eq!(e_quotient(&lam, e, r).unwrap(), q);
    }

    #[test]
    fn single_bead_runner_weight_matches(
        rows in prop::collection::vec(0u64..6, 4),
        runners in Just(()).prop_perturb(|_, mut rng| {
            let mut all: Vec<u64> = (0..7).collect();
            for i in (1..all.len()).rev() {
                let j = (rng.next_u32() as usize) % (i + 1);
                all.swap(i, j);
            }
            all.truncate(4);
            all
        }),
    ) {
        let e = 7;
        let positions: Vec<u64> = rows.iter().zip(&runners).map(|(row, b)| row * e + b).collect();
        let bs = BetaSequence::from_unsorted(positions).unwrap();
        let lam = partition_of_beta(&bs);
        prop_assert_eq!(weight_if_single_bead_runners(&bs, e), Some(e_weight(&lam, e, 4).unwrap()));
    }
}
