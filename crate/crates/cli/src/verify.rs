use std::collections::BTreeMap;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use stingray_core::alcove_index::verify_wall_crossings;
use stingray_core::partitions::partitions_with_at_most;
use stingray_core::patterns::{
    enumerate_block_weights, enumerate_block_weights_par, verify_embedding, verify_regular_pattern,
    verify_regular_pattern_general, verify_tail_containment, verify_tail_separation, BlockWeightSet,
};
use stingray_core::runner_removal::verify_shi_stability;
use stingray_core::{GenericTriple, Partition, Report, Result, RunnerInsertion};

/// Largest part of the partitions swept by the Shi-stability check.
const SHI_PART_MAX: u64 = 10;

/// Witnesses printed per failing check in text mode.
const TEXT_WITNESSES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    All,
    Embedding,
    Tails,
    Regular,
    Walls,
    Shi,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    #[arg(short = 'r', long = "rank", default_value_t = 3)]
    r: usize,
    #[arg(short = 'e', long = "level", default_value_t = 8)]
    e: u64,
    /// Sweep w = 0..=wmax.
    #[arg(long, default_value_t = 6)]
    wmax: u64,
    /// Check a single weight instead of the sweep.
    #[arg(short = 'w', long = "eweight")]
    w: Option<u64>,
    /// Shi stability sweeps levels 3..=emax.
    #[arg(long, default_value_t = 5)]
    emax: u64,
    #[arg(long)]
    parallel: bool,
}

impl VerifyArgs {
    fn weights(&self) -> Vec<u64> {
        match self.w {
            Some(w) => vec![w],
            None => (0..=self.wmax).collect(),
        }
    }

    fn wants(&self, c: Check) -> bool {
        self.check == Check::All || self.check == c
    }
}

pub struct Suite {
    reports: Vec<Report>,
}

impl Suite {
    pub fn run(args: &VerifyArgs) -> Result<Suite> {
        let mut reports = Vec::new();
        let mut cache: BTreeMap<u64, BlockWeightSet> = BTreeMap::new();
        let mut data = |w: u64| -> Result<BlockWeightSet> {
            if let Some(d) = cache.get(&w) {
                return Ok(d.clone());
            }
            let t = GenericTriple::new(args.r, args.e, w)?;
            let d = if args.parallel {
                enumerate_block_weights_par(t)?
            } else {
                enumerate_block_weights(t)?
            };
            cache.insert(w, d.clone());
            Ok(d)
        };

        if args.wants(Check::Embedding) {
            for w in args.weights() {
                reports.push(verify_embedding(GenericTriple::new(args.r, args.e, w)?)?);
            }
        }
        if args.wants(Check::Tails) {
            for w in args.weights() {
                let d = data(w)?;
                reports.push(verify_tail_containment(&d));
                reports.push(verify_tail_separation(&d));
            }
        }
        if args.wants(Check::Regular) {
            for w in args.weights() {
                let d = data(w)?;
                reports.push(if args.r == 3 {
                    verify_regular_pattern(&d)?
                } else {
                    verify_regular_pattern_general(&d)
                });
            }
        }
        if args.wants(Check::Walls) {
            for w in args.weights() {
                reports.push(verify_wall_crossings(args.r, w, args.e, args.parallel)?);
            }
        }
        if args.wants(Check::Shi) {
            let partitions: Vec<Partition> = (0..=SHI_PART_MAX * args.r as u64)
                .flat_map(|n| partitions_with_at_most(n, args.r))
                .filter(|p| p.part(0) <= SHI_PART_MAX)
                .collect();
            for e in 3..=args.emax {
                let mut report = Report::new(format!(
                    "shi-stability r={} e={e} parts<={SHI_PART_MAX}",
                    args.r
                ));
                for lam in &partitions {
                    for k in 0..e {
                        report.absorb(verify_shi_stability(lam, RunnerInsertion::new(e, args.r, k)?)?);
                    }
                }
                reports.push(report);
            }
        }
        Ok(Suite { reports })
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    fn failures(&self) -> usize {
        self.reports.iter().filter(|r| !r.passed()).count()
    }

    pub fn to_text(&self) -> String {
        let mut text = String::new();
        for report in &self.reports {
            text.push_str(&format!("{report}\n"));
            for w in report.witnesses.iter().take(TEXT_WITNESSES) {
                text.push_str(&format!("  {w}\n"));
            }
            if report.witnesses.len() > TEXT_WITNESSES {
                text.push_str(&format!("  ... {} more\n", report.witnesses.len() - TEXT_WITNESSES));
            }
        }
        text.push_str(&format!(
            "summary: {} checks, {} passed, {} failed\n",
            self.reports.len(),
            self.reports.len() - self.failures(),
            self.failures()
        ));
        text
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "failed": self.failures(),
            "reports": self.reports,
        })
    }
}
