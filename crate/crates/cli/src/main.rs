//! `stingray`: command-line access to the block-weight computations.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 precondition error.

mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use stingray_core::abacus::{beta_numbers, e_core, e_quotient, e_weight};
use stingray_core::alcove_index::{apply_generator, enumerate_labels, fundamental_label, label_to_shi};
use stingray_core::partitions::parse_int_list;
use stingray_core::patterns::{
    boundary_affine_vertices, classify_pairs, count_block_weights, enumerate_block_weights,
    enumerate_block_weights_par, interior_affine_vertices, stingray, PairKind,
};
use stingray_core::render::{render_svg, Highlight};
use stingray_core::runner_removal::{insert_empty_runner, verify_theorem_pair};
use stingray_core::weights::{omega_of_betas, shi_vector};
use stingray_core::{
    AlcoveLabel, DominantWeight, GeneratorIndex, GenericTriple, Partition, RenderOptions, RunnerInsertion,
};

use verify::{Suite, VerifyArgs};

#[derive(Parser, Debug)]
#[command(name = "stingray", version, about = "Block weights of symmetric groups in the dominant chamber")]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct PartitionArgs {
    #[arg(short = 'e', long = "level")]
    e: u64,
    /// Number of beads; defaults to the number of parts.
    #[arg(short = 'r', long = "rank")]
    r: Option<usize>,
    #[arg(value_parser = parse_partition)]
    partition: Partition,
}

#[derive(Args, Debug)]
struct TripleArgs {
    #[arg(short = 'r', long = "rank")]
    r: usize,
    #[arg(short = 'e', long = "level")]
    e: u64,
    #[arg(short = 'w', long = "eweight")]
    w: u64,
}

impl TripleArgs {
    fn triple(&self) -> stingray_core::Result<GenericTriple> {
        GenericTriple::new(self.r, self.e, self.w)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// e-core of a partition.
    Core(PartitionArgs),
    /// e-weight of a partition.
    Weight(PartitionArgs),
    /// e-quotient of a partition.
    Quotient(PartitionArgs),
    /// Dominant weight Omega(lambda) from consecutive beta-number gaps.
    Omega {
        #[arg(short = 'r', long = "rank")]
        r: Option<usize>,
        #[arg(value_parser = parse_partition)]
        partition: Partition,
    },
    /// Shi vector of a dominant weight given by its coefficients.
    Shi {
        #[arg(short = 'e', long = "level")]
        e: u64,
        #[arg(value_parser = parse_weight)]
        weight: DominantWeight,
    },
    /// All weights of W_{r,e,w} with their components.
    Enumerate {
        #[command(flatten)]
        t: TripleArgs,
        #[arg(long)]
        parallel: bool,
    },
    /// |W_{r,e,w}| from the composition sum.
    Count(TripleArgs),
    /// Boundary and interior affine vertices.
    Vertices(TripleArgs),
    /// Good and bad pairs of adjacent affine vertices.
    Pairs(TripleArgs),
    /// Stingray patterns at the bad pairs.
    Patterns(TripleArgs),
    /// Alcove labels: weak compositions of w with r parts.
    Alcoves {
        #[arg(short = 'r', long = "rank")]
        r: usize,
        #[arg(short = 'w', long = "eweight")]
        w: u64,
        /// Also print the Shi vector of each labelled alcove at this level.
        #[arg(short = 'e', long = "level")]
        e: Option<u64>,
    },
    /// Apply the generator s_gen to an alcove label.
    Act {
        #[arg(long, value_parser = parse_label)]
        label: AlcoveLabel,
        #[arg(long)]
        gen: usize,
    },
    /// Property battery over a sweep of weights.
    Verify(VerifyArgs),
    /// Insert an empty runner left of runner k.
    InsertRunner {
        #[arg(short = 'e', long = "level")]
        e: u64,
        /// Number of beads; the result depends on it.
        #[arg(short = 'r', long = "rank")]
        r: usize,
        #[arg(short = 'k')]
        k: u64,
        #[arg(value_parser = parse_partition)]
        partition: Partition,
        /// Check the pair (partition, MU) against the runner-removal hypotheses.
        #[arg(long, value_parser = parse_partition)]
        mu: Option<Partition>,
    },
    /// SVG picture of W_{3,e,w}.
    Plot {
        #[command(flatten)]
        t: TripleArgs,
        /// Label alcoves by weak compositions.
        #[arg(long)]
        labels: bool,
        #[arg(long, value_parser = parse_highlight)]
        highlight: Option<Highlight>,
        #[arg(long)]
        no_hyperplanes: bool,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: stingray_core::Error| e.to_string())
}

fn parse_weight(s: &str) -> Result<DominantWeight, String> {
    parse_int_list(s)
        .map(DominantWeight::new)
        .map_err(|e| e.to_string())
}

fn parse_label(s: &str) -> Result<AlcoveLabel, String> {
    s.parse().map_err(|e: stingray_core::Error| e.to_string())
}

fn parse_highlight(s: &str) -> Result<Highlight, String> {
    s.parse()
}

/// Rendered output and whether any verification inside it failed.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn document(verb: &str, body: Value) -> String {
    let mut doc = json!({ "schema": format!("stingray/{verb}/v1") });
    if let (Value::Object(doc), Value::Object(body)) = (&mut doc, body) {
        doc.extend(body);
    }
    serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n"
}

fn rank_of(lam: &Partition, r: Option<usize>) -> usize {
    r.unwrap_or(lam.len())
}

fn weights_line(ws: &[DominantWeight]) -> String {
    ws.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    let json = cli.json;
    let out = match &cli.command {
        Command::Core(a) => {
            let core = e_core(&a.partition, a.e, rank_of(&a.partition, a.r))?;
            if json {
                Output::ok(document("core", json!({"partition": a.partition, "e": a.e, "core": core})))
            } else {
                Output::ok(format!("{core}\n"))
            }
        }
        Command::Weight(a) => {
            let w = e_weight(&a.partition, a.e, rank_of(&a.partition, a.r))?;
            if json {
                Output::ok(document("weight", json!({"partition": a.partition, "e": a.e, "weight": w})))
            } else {
                Output::ok(format!("{w}\n"))
            }
        }
        Command::Quotient(a) => {
            let r = rank_of(&a.partition, a.r);
            let q = e_quotient(&a.partition, a.e, r)?;
            if json {
                Output::ok(document(
                    "quotient",
                    json!({"partition": a.partition, "e": a.e, "r": r, "quotient": q.components()}),
                ))
            } else {
                Output::ok(format!("{q}\n"))
            }
        }
        Command::Omega { r, partition } => {
            let r = rank_of(partition, *r);
            let bs = beta_numbers(partition, r)?;
            let w = omega_of_betas(&bs);
            if json {
                Output::ok(document(
                    "omega",
                    json!({"partition": partition, "r": r, "betas": bs.betas(), "weight": w}),
                ))
            } else {
                Output::ok(format!("{w}\n"))
            }
        }
        Command::Shi { e, weight } => {
            if *e < 2 {
                return Err(stingray_core::Error::InvalidLevel(*e).into());
            }
            let shi = shi_vector(weight, *e);
            if json {
                Output::ok(document("shi", json!({"weight": weight, "shi": shi})))
            } else {
                Output::ok(format!("{shi}\n"))
            }
        }
        Command::Enumerate { t, parallel } => {
            let t = t.triple()?;
            let data = if *parallel {
                enumerate_block_weights_par(t)?
            } else {
                enumerate_block_weights(t)?
            };
            if json {
                Output::ok(document(
                    "enumerate",
                    json!({"r": t.r(), "e": t.e(), "w": t.w(), "count": data.len(), "weights": data.to_json()}),
                ))
            } else {
                let mut text = String::new();
                for (u, key) in data.iter() {
                    text.push_str(&format!("{u} {key}\n"));
                }
                Output::ok(text)
            }
        }
        Command::Count(t) => {
            let t = t.triple()?;
            let n = count_block_weights(t)?;
            if json {
                Output::ok(document("count", json!({"r": t.r(), "e": t.e(), "w": t.w(), "count": n})))
            } else {
                Output::ok(format!("{n}\n"))
            }
        }
        Command::Vertices(t) => {
            let t = t.triple()?;
            let boundary = boundary_affine_vertices(t);
            let interior = interior_affine_vertices(t);
            if json {
                Output::ok(document(
                    "vertices",
                    json!({"r": t.r(), "e": t.e(), "w": t.w(), "boundary": boundary, "interior": interior}),
                ))
            } else {
                Output::ok(format!(
                    "boundary: {}\ninterior: {}\n",
                    weights_line(&boundary),
                    weights_line(&interior)
                ))
            }
        }
        Command::Pairs(t) => {
            let t = t.triple()?;
            let pairs = classify_pairs(t);
            if json {
                Output::ok(document("pairs", json!({"r": t.r(), "e": t.e(), "w": t.w(), "pairs": pairs})))
            } else {
                let mut text = String::new();
                for p in &pairs {
                    let kind = match p.kind {
                        PairKind::Good => "good",
                        PairKind::Bad => "bad",
                    };
                    text.push_str(&format!("{kind} {} {}\n", p.v1, p.v2));
                }
                Output::ok(text)
            }
        }
        Command::Patterns(t) => {
            let t = t.triple()?;
            let data = enumerate_block_weights(t)?;
            let mut rays = Vec::new();
            for p in classify_pairs(t).iter().filter(|p| p.kind == PairKind::Bad) {
                rays.push(stingray(&data, &p.v1, &p.v2)?);
            }
            if json {
                Output::ok(document("patterns", json!({"r": t.r(), "e": t.e(), "w": t.w(), "stingrays": rays})))
            } else {
                let mut text = String::new();
                for s in &rays {
                    text.push_str(&format!(
                        "stingray {} {}: {} points, body {}, tail {}\n",
                        s.pair.v1,
                        s.pair.v2,
                        s.pattern.len(),
                        s.body.len(),
                        s.tail.len()
                    ));
                    let tail: Vec<DominantWeight> = s.tail.iter().cloned().collect();
                    text.push_str(&format!("  tail: {}\n", weights_line(&tail)));
                }
                Output::ok(text)
            }
        }
        Command::Alcoves { r, w, e } => {
            let labels = enumerate_labels(*r, *w);
            let fundamental = fundamental_label(*r, *w);
            let mut rows = Vec::new();
            let mut text = String::new();
            for label in &labels {
                let shi = e.map(|e| label_to_shi(label, e)).transpose()?;
                let mark = if *label == fundamental { " *" } else { "" };
                match &shi {
                    Some(s) => text.push_str(&format!("{label} {s}{mark}\n")),
                    None => text.push_str(&format!("{label}{mark}\n")),
                }
                rows.push(json!({"label": label, "shi": shi, "fundamental": *label == fundamental}));
            }
            if json {
                Output::ok(document("alcoves", json!({"r": r, "w": w, "e": e, "labels": rows})))
            } else {
                Output::ok(text)
            }
        }
        Command::Act { label, gen } => {
            let g = GeneratorIndex::new(*gen, label.rank())?;
            let image = apply_generator(label, g)?.ok_or_else(|| stingray_core::Error::UndefinedAction {
                label: label.to_string(),
                generator: *gen,
            })?;
            if json {
                Output::ok(document("act", json!({"label": label, "generator": gen, "image": image})))
            } else {
                Output::ok(format!("{image}\n"))
            }
        }
        Command::Verify(args) => {
            let suite = Suite::run(args)?;
            let failed = !suite.passed();
            let text = if json {
                document("verify", suite.to_json())
            } else {
                suite.to_text()
            };
            Output { text, failed }
        }
        Command::InsertRunner {
            e,
            r,
            k,
            partition,
            mu,
        } => {
            let r = *r;
            let ins = RunnerInsertion::new(*e, r, *k)?;
            match mu {
                None => {
                    let plus = insert_empty_runner(partition, ins)?;
                    if json {
                        Output::ok(document(
                            "insert-runner",
                            json!({"partition": partition, "e": e, "r": r, "k": k, "result": plus}),
                        ))
                    } else {
                        Output::ok(format!("{plus}\n"))
                    }
                }
                Some(mu) => {
                    let report = verify_theorem_pair(partition, mu, ins)?;
                    if !report.hypotheses_hold() {
                        anyhow::bail!(Precondition(format!(
                            "hypotheses fail: same block {}, {mu} {e}-regular {}",
                            report.same_block, report.mu_e_regular
                        )));
                    }
                    let failed = !report.passed();
                    let text = if json {
                        document("insert-runner", json!({"e": e, "r": r, "k": k, "lambda": partition, "mu": mu, "report": report}))
                    } else {
                        let mut text = format!("lambda+ {}\nmu+ {}\n", report.lambda_plus, report.mu_plus);
                        for c in &report.checks {
                            text.push_str(&format!("{c}\n"));
                        }
                        text.push_str(&format!("note: {}\n", report.note));
                        text
                    };
                    Output { text, failed }
                }
            }
        }
        Command::Plot {
            t,
            labels,
            highlight,
            no_hyperplanes,
        } => {
            let t = t.triple()?;
            let data = enumerate_block_weights(t)?;
            let opts = RenderOptions {
                show_hyperplanes: !no_hyperplanes,
                show_alcove_labels: *labels,
                highlight: *highlight,
                ..RenderOptions::default()
            };
            let svg = render_svg(&data, &opts)?;
            if json {
                Output::ok(document(
                    "plot",
                    json!({"r": t.r(), "e": t.e(), "w": t.w(), "circles": data.len(), "svg": svg}),
                ))
            } else {
                Output::ok(svg)
            }
        }
    };
    Ok(out)
}

/// A failed precondition that is not a library error.
#[derive(Debug)]
struct Precondition(String);

impl std::fmt::Display for Precondition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Precondition {}

fn exit_code(err: &anyhow::Error) -> u8 {
    use stingray_core::Error as E;
    match err.downcast_ref::<E>() {
        Some(E::Parse { .. } | E::NotAPartition(_) | E::InvalidComposition(_) | E::NotStrictlyDecreasing(_)) => 2,
        Some(_) => 3,
        None if err.is::<Precondition>() => 3,
        None => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => std::fs::write(path, &out.text).with_context(|| format!("writing {}", path.display()))?,
            None => print!("{}", out.text),
        }
        Ok(out.failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
