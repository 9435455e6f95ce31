use proptest::prelude::*;

use stingray_core::abacus::{beta_numbers, e_core, e_weight, from_core_and_quotient, is_e_core};
use stingray_core::partitions::{partitions_with_at_most, Partition};
use stingray_core::runner_removal::{
    insert_empty_runner, inserted_betas, verify_shi_stability, verify_theorem_pair,
};
use stingray_core::{EQuotient, RunnerInsertion};

fn small_partitions(max_size: u64, r: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|n| partitions_with_at_most(n, r)).collect()
}

#[test]
fn shi_stability_sweep() {
    for e in 3..=5u64 {
        for r in 3..=4usize {
            for lam in small_partitions(10, r) {
                for k in 0..e {
                    let ins = RunnerInsertion::new(e, r, k).unwrap();
                    let report = verify_shi_stability(&lam, ins).unwrap();
                    assert!(report.passed(), "{lam} e={e} k={k}: {:?}", report.witnesses);
                }
            }
        }
    }
}

#[test]
fn insertion_keeps_weight_and_quotient() {
    for e in 3..=5u64 {
        for lam in small_partitions(9, 3) {
            let w = e_weight(&lam, e, 3).unwrap();
            for k in 0..e {
                let plus = insert_empty_runner(&lam, RunnerInsertion::new(e, 3, k).unwrap()).unwrap();
                assert_eq!(e_weight(&plus, e + 1, 3).unwrap(), w, "{lam} e={e} k={k}");
                let bs = beta_numbers(&lam, 3).unwrap();
                assert_eq!(inserted_betas(&bs, e, k).rank(), 3);
            }
        }
    }
}

#[test]
fn inserted_runner_is_empty() {
    for lam in small_partitions(8, 4) {
        for k in 0..4u64 {
            let bs = beta_numbers(&lam, 4).unwrap();
            let plus = inserted_betas(&bs, 4, k);
            assert!(plus.betas().iter().all(|b| b % 5 != k));
        }
    }
}

#[test]
fn pairs_in_a_block_pass() {
    // every pair in the 3-block of core (2) and weight 2 at rank 4, with mu 3-regular
    let (e, r) = (3u64, 4usize);
    let core = Partition::new(vec![2]).unwrap();
    assert!(is_e_core(&core, e).unwrap());
    let block: Vec<Partition> = small_partitions(core.size() + 2 * e, r)
        .into_iter()
        .filter(|p| e_core(p, e, r).unwrap() == core && e_weight(p, e, r).unwrap() == 2)
        .collect();
    assert!(block.len() > 3);
    for lam in &block {
        for mu in block.iter().filter(|m| m.is_e_regular(e)) {
            for k in 0..e {
                let report = verify_theorem_pair(lam, mu, RunnerInsertion::new(e, r, k).unwrap()).unwrap();
                assert!(report.passed(), "{lam} {mu} k={k}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn stability_on_reconstructed_partitions(
        e in 3u64..=6,
        k_seed in 0u64..100,
        rows in prop::collection::vec(0u64..3, 6),
    ) {
        // empty core at rank 6 and a random quotient with one-part components
        let r = 6usize;
        let core = Partition::empty();
        let comps: Vec<Partition> = (0..e as usize)
            .map(|j| Partition::new(vec![rows.get(j).copied().unwrap_or(0)]).unwrap())
            .collect();
        let q = EQuotient::new(comps);
        let lam = match from_core_and_quotient(&core, &q, e, r) {
            Ok(lam) => lam,
            Err(_) => return Ok(()),
        };
        let ins = RunnerInsertion::new(e, r, k_seed % e).unwrap();
        prop_assert!(verify_shi_stability(&lam, ins).unwrap().passed());
    }
}
