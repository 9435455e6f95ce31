//! Inserting an empty runner into the e-abacus, and the check that the Shi
//! vector of `Omega(lambda)` at level `e` equals that of `Omega(lambda^+)`
//! at level `e + 1`.

use serde::Serialize;
use serde_json::json;

use crate::abacus::{beta_numbers, e_core, e_weight, partition_of_beta, BetaSequence};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::report::Report;
use crate::weights::{omega_of_betas, positive_roots, shi_vector};

/// Insert an empty runner immediately left of runner `k` of an `e`-abacus
/// with `r` beads.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct RunnerInsertion {
    e: u64,
    r: usize,
    k: u64,
}

impl RunnerInsertion {
    pub fn new(e: u64, r: usize, k: u64) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidLevel(e));
        }
        if k >= e {
            return Err(Error::RunnerOutOfRange { k, e });
        }
        Ok(RunnerInsertion { e, r, k })
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> u64 {
        self.k
    }
}

/// `beta = a e + b  ->  a (e + 1) + b + [b >= k]`.
pub fn inserted_betas(bs: &BetaSequence, e: u64, k: u64) -> BetaSequence {
    let betas = bs
        .betas()
        .iter()
        .map(|&beta| {
            let (a, b) = (beta / e, beta % e);
            a * (e + 1) + b + u64::from(b >= k)
        })
        .collect();
    BetaSequence::new(betas).expect("the map is strictly increasing")
}

pub fn insert_empty_runner(lam: &Partition, ins: RunnerInsertion) -> Result<Partition> {
    let bs = beta_numbers(lam, ins.r)?;
    Ok(partition_of_beta(&inserted_betas(&bs, ins.e, ins.k)))
}

/// Compares `k_alpha^(e)(Omega(lambda))` with `k_alpha^(e+1)(Omega(lambda^+))`
/// root by root.
pub fn verify_shi_stability(lam: &Partition, ins: RunnerInsertion) -> Result<Report> {
    let bs = beta_numbers(lam, ins.r)?;
    let plus = inserted_betas(&bs, ins.e, ins.k);
    let before = shi_vector(&omega_of_betas(&bs), ins.e);
    let after = shi_vector(&omega_of_betas(&plus), ins.e + 1);
    let mut report = Report::new(format!("shi-stability {lam} e={} k={}", ins.e, ins.k));
    for ((root, &x), &y) in positive_roots(ins.r)
        .iter()
        .zip(before.entries())
        .zip(after.entries())
    {
        report.expect(x == y, || {
            json!({
                "partition": lam,
                "e": ins.e,
                "k": ins.k,
                "root": [root.i, root.j],
                "level_e": x,
                "level_e_plus_1": y,
            })
        });
    }
    Ok(report)
}

/// Outcome of checking a pair `(lambda, mu)` against the hypotheses and the
/// alcove-level conclusions of empty runner removal.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremPairReport {
    pub same_block: bool,
    pub mu_e_regular: bool,
    pub lambda_plus: Partition,
    pub mu_plus: Partition,
    pub checks: Vec<Report>,
    pub note: String,
}

impl TheoremPairReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.same_block && self.mu_e_regular
    }

    pub fn passed(&self) -> bool {
        self.hypotheses_hold() && self.checks.iter().all(Report::passed)
    }
}

const CONCLUSION_NOTE: &str = "machine-checked: equal Shi vectors for lambda and mu across levels e and e+1, \
(e+1)-regularity of mu^+, and lambda^+, mu^+ in one (e+1)-block. Equality of graded decomposition numbers \
follows from the identification of decomposition numbers with alcove-geometric KL polynomials, which is not \
computed here.";

pub fn verify_theorem_pair(
    lam: &Partition,
    mu: &Partition,
    ins: RunnerInsertion,
) -> Result<TheoremPairReport> {
    let (e, r) = (ins.e, ins.r);
    let same_block = e_core(lam, e, r)? == e_core(mu, e, r)? && e_weight(lam, e, r)? == e_weight(mu, e, r)?;
    let mu_e_regular = mu.is_e_regular(e);
    let lambda_plus = insert_empty_runner(lam, ins)?;
    let mu_plus = insert_empty_runner(mu, ins)?;
    let mut checks = Vec::new();
    if same_block && mu_e_regular {
        checks.push(verify_shi_stability(lam, ins)?);
        checks.push(verify_shi_stability(mu, ins)?);

        let mut regular = Report::new("mu-plus-regular");
        regular.expect(mu_plus.is_e_regular(e + 1), || json!({"mu_plus": &mu_plus}));
        checks.push(regular);

        let mut block = Report::new("plus-same-block");
        let ok = e_core(&lambda_plus, e + 1, r)? == e_core(&mu_plus, e + 1, r)?
            && e_weight(&lambda_plus, e + 1, r)? == e_weight(&mu_plus, e + 1, r)?;
        block.expect(ok, || json!({"lambda_plus": &lambda_plus, "mu_plus": &mu_plus}));
        checks.push(block);
    }
    Ok(TheoremPairReport {
        same_block,
        mu_e_regular,
        lambda_plus,
        mu_plus,
        checks,
        note: CONCLUSION_NOTE.to_string(),
    })
}
