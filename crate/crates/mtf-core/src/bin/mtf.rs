//! Command-line front end for the maximal triangle-free laboratory.
//!
//! Conventions shared by every subcommand:
//! - stdout carries only deterministic data: graph6 lines, JSON-line
//!   records, and a final summary object with no timing fields. Identical
//!   config and seed give byte-identical stdout, regardless of MTF_WORKERS.
//! - timing and progress go to stderr (or to --report files).
//! - exit 0: success. exit 1: reserved for falsified claims and internal
//!   assertion failures, always accompanied by a machine-readable witness.
//!   exit 2: configuration or input errors.

use clap::{Parser, Subcommand};
use mtf_core::construction::{
    maximal_completion_krfree, seed_graph_general, verify_distinct_completions, SeedChoice,
};
use mtf_core::enumeration::{
    all_graphs, brute_force_mtf, canonical_form, enumerate_mtf, for_each_triangle_free,
    maximal_completion,
};
use mtf_core::error::Error;
use mtf_core::graph::Graph;
use mtf_core::graph6;
use mtf_core::link::{
    count_maximal_extensions, for_each_edge_disjoint_tf_pair, verify_claim_triangle_free,
    verify_product_identity,
};
use mtf_core::mis::{min_constant_for_family, verify_mis_bound};
use mtf_core::random::{random_edge_disjoint_tf_pair, random_graph, random_triangle_free};
use mtf_core::structure::{find_structure_partition, closeness_to_bipartite, graph_stats, graph_stats_all_cuts};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "mtf",
    about = "Exact experiments on maximal triangle-free graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate all labeled maximal triangle-free graphs on [n] (n <= 10)
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Write the graph6 stream here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the full report (with elapsed_ms) here
        #[arg(long)]
        report: Option<PathBuf>,
        /// Cross-check the stream against the brute-force oracle (n <= 6)
        #[arg(long)]
        oracle_check: bool,
        /// Also count isomorphism classes (full-permutation canonical forms)
        #[arg(long)]
        iso: bool,
    },
    /// Check a claim on exhaustive and/or seeded random instances
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Generate lower-bound seed graphs (and optionally their completions)
    Construct {
        #[arg(long)]
        n: usize,
        /// Number of classes (r = 2 is the triangle-free construction)
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Emit every choice (r = 2, at most 2^20 seeds)
        #[arg(long)]
        all: bool,
        /// Emit this many random choices
        #[arg(long)]
        samples: Option<u64>,
        /// Emit the single seed for this hex choice vector
        #[arg(long)]
        choice: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extend each seed to a maximal K_{r+1}-free graph
        #[arg(long)]
        complete: bool,
        /// Run the distinct-completions experiment (r = 2, n in {4, 8})
        #[arg(long)]
        verify_distinct: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structure witnesses and per-cut statistics
    Structure {
        /// Enumerate M3(n) and report the structured fraction
        #[arg(long, conflicts_with = "input")]
        n: Option<usize>,
        /// Read a newline-separated graph6 stream instead
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Quantify stats over every max-cut (n <= 16)
        #[arg(long)]
        all_cuts: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// MIS(G) <= 2^(n/2 - k/25) for triangle-free G with k disjoint P3's
    LemmaMisBound {
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Verify each graph in this graph6 stream instead
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Emit a record for every instance, not only violations
        #[arg(long)]
        emit_all: bool,
    },
    /// The link of triangle-free edge-disjoint graphs is triangle-free
    LinkTriangleFree {
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// JSON-line instances {"n":, "S":, "A":}
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// L_{S u T}[A] equals the Cartesian product S x T on bipartite hosts
    LinkProduct {
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Maximal extensions of S in S u A number at most MIS(L_S[A])
    ExtensionCount {
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// The constant in the MIS bound cannot drop below 1/(5/2 - log2 5)
    RemarkConstant,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(w) = std::env::var("MTF_WORKERS") {
        match w.parse::<usize>() {
            Ok(w) if w >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
            }
            _ => {
                eprintln!("error: MTF_WORKERS must be a positive integer, got {w:?}");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                // a violated internal invariant means a claim check failed
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Enumerate {
            n,
            out,
            report,
            oracle_check,
            iso,
        } => cmd_enumerate(n, out, report, oracle_check, iso),
        Cmd::Verify { target } => cmd_verify(target),
        Cmd::Construct {
            n,
            r,
            all,
            samples,
            choice,
            seed,
            complete,
            verify_distinct,
            out,
        } => cmd_construct(n, r, all, samples, choice, seed, complete, verify_distinct, out),
        Cmd::Structure {
            n,
            input,
            all_cuts,
            out,
        } => cmd_structure(n, input, all_cuts, out),
    }
}

/// Either a buffered file or stdout.
fn sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Error> {
    match path {
        Some(p) => Ok(Box::new(BufWriter::new(File::create(p).map_err(io_err)?))),
        None => Ok(Box::new(BufWriter::new(std::io::stdout()))),
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parameter(format!("io: {e}"))
}

fn read_graph6_stream(path: &Path) -> Result<Vec<Graph>, Error> {
    let file = File::open(path).map_err(io_err)?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io_err)?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(
            graph6::decode(line)
                .map_err(|e| Error::Parameter(format!("line {}: {e}", i + 1)))?,
        );
    }
    Ok(out)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

// ============================================================================
// enumerate
// ============================================================================

#[derive(Serialize)]
struct EnumerateSummary {
    n: usize,
    total: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    iso_classes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_check: Option<bool>,
}

fn cmd_enumerate(
    n: usize,
    out: Option<PathBuf>,
    report: Option<PathBuf>,
    oracle_check: bool,
    iso: bool,
) -> Result<ExitCode, Error> {
    let start = Instant::now();
    let graphs = enumerate_mtf(n)?;
    let total = graphs.len() as u64;

    let mut stream = sink(&out)?;
    for g in &graphs {
        writeln!(stream, "{}", graph6::encode(g)?).map_err(io_err)?;
    }
    stream.flush().map_err(io_err)?;

    let iso_classes = if iso {
        let classes: BTreeSet<Graph> = graphs
            .par_iter()
            .map(canonical_form)
            .collect::<Result<_, _>>()?;
        Some(classes.len() as u64)
    } else {
        None
    };

    let oracle_ok = if oracle_check {
        let mut oracle = brute_force_mtf(n)?;
        let mut ours = graphs.clone();
        oracle.sort();
        ours.sort();
        Some(oracle == ours)
    } else {
        None
    };

    let summary = EnumerateSummary {
        n,
        total,
        iso_classes,
        oracle_check: oracle_ok,
    };
    // graph6 text never starts with '{', so the trailing summary line stays
    // machine-separable even when both share stdout
    println!("{}", json(&summary));

    let elapsed_ms = start.elapsed().as_millis() as u64;
    eprintln!("enumerate --n {n}: {total} graphs in {elapsed_ms} ms");
    if let Some(path) = report {
        let full = serde_json::json!({
            "n": n,
            "total": total,
            "iso_classes": iso_classes,
            "oracle_check": oracle_ok,
            "elapsed_ms": elapsed_ms,
        });
        std::fs::write(path, format!("{full}\n")).map_err(io_err)?;
    }

    if oracle_ok == Some(false) {
        eprintln!("error: enumeration disagrees with the brute-force oracle");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

// ============================================================================
// verify
// ============================================================================

#[derive(Serialize)]
struct VerifySummary {
    target: &'static str,
    mode: &'static str,
    instances: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<u64>,
    violations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_n: Option<usize>,
}

fn finish_verify(summary: &VerifySummary) -> Result<ExitCode, Error> {
    println!("{}", json(summary));
    Ok(if summary.violations > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Serialize)]
struct BoundRecord {
    graph6: String,
    n: usize,
    k: usize,
    mis: u64,
    slack: f64,
    exact_holds: bool,
    ok: bool,
}

fn bound_record(g: &Graph) -> Result<BoundRecord, Error> {
    let check = verify_mis_bound(g)?;
    // the inequality is judged in exact integer form; the float slack is
    // reported for reading, not for the verdict
    let ok = check.exact_holds;
    Ok(BoundRecord {
        graph6: graph6::encode(g)?,
        n: check.n,
        k: check.k,
        mis: check.mis.to_u64(),
        slack: check.slack,
        exact_holds: check.exact_holds,
        ok,
    })
}

fn verify_lemma_mis_bound(
    exhaustive: bool,
    max_n: Option<usize>,
    trials: Option<u64>,
    seed: u64,
    input: Option<PathBuf>,
    emit_all: bool,
) -> Result<ExitCode, Error> {
    let mut instances = 0u64;
    let mut violations = 0u64;

    if let Some(path) = input {
        let graphs = read_graph6_stream(&path)?;
        let records: Vec<BoundRecord> = graphs
            .par_iter()
            .map(bound_record)
            .collect::<Result<_, _>>()?;
        for r in &records {
            instances += 1;
            if !r.ok {
                violations += 1;
            }
            if emit_all || !r.ok {
                println!("{}", json(r));
            }
        }
        return finish_verify(&VerifySummary {
            target: "lemma-mis-bound",
            mode: "stream",
            instances,
            skipped: None,
            violations,
            seed: None,
            max_n: None,
        });
    }

    if exhaustive {
        let max_n = max_n.unwrap_or(7);
        if max_n > 8 {
            return Err(Error::Parameter(
                "exhaustive lemma-mis-bound supports --max-n <= 8".into(),
            ));
        }
        for n in 1..=max_n {
            let mut err = None;
            for_each_triangle_free(n, &mut |g| {
                if err.is_some() {
                    return;
                }
                match bound_record(g) {
                    Ok(r) => {
                        instances += 1;
                        if !r.ok {
                            violations += 1;
                        }
                        if emit_all || !r.ok {
                            println!("{}", json(&r));
                        }
                    }
                    Err(e) => err = Some(e),
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
        return finish_verify(&VerifySummary {
            target: "lemma-mis-bound",
            mode: "exhaustive",
            instances,
            skipped: None,
            violations,
            seed: None,
            max_n: Some(max_n),
        });
    }

    let trials = trials.unwrap_or(10_000);
    let max_n = max_n.unwrap_or(20);
    if max_n > 30 {
        return Err(Error::Parameter(
            "random lemma-mis-bound supports --max-n <= 30".into(),
        ));
    }
    let records: Vec<BoundRecord> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, i);
            let n = rng.random_range(4..=max_n);
            let p = rng.random_range(0.2..=1.0);
            let g = random_triangle_free(n, p, &mut rng);
            bound_record(&g)
        })
        .collect::<Result<_, _>>()?;
    for r in &records {
        instances += 1;
        if !r.ok {
            violations += 1;
        }
        if emit_all || !r.ok {
            println!("{}", json(r));
        }
    }
    finish_verify(&VerifySummary {
        target: "lemma-mis-bound",
        mode: "random",
        instances,
        skipped: None,
        violations,
        seed: Some(seed),
        max_n: Some(max_n),
    })
}

/// Per-instance RNG independent of thread scheduling: one ChaCha stream per
/// instance index.
fn trial_rng(seed: u64, instance: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(instance.wrapping_add(1));
    rng
}

#[derive(Serialize)]
struct PairViolation {
    instance: u64,
    n: usize,
    s: String,
    a: String,
    detail: String,
}

fn verify_link_triangle_free(
    exhaustive: bool,
    max_n: Option<usize>,
    trials: Option<u64>,
    seed: u64,
    input: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let mut instances = 0u64;
    let mut violations = 0u64;

    if let Some(path) = input {
        for (i, (s, a)) in read_instances(&path)?.iter().enumerate() {
            instances += 1;
            if !verify_claim_triangle_free(s, a)? {
                violations += 1;
                println!(
                    "{}",
                    json(&PairViolation {
                        instance: i as u64,
                        n: s.n(),
                        s: graph6::encode(s)?,
                        a: graph6::encode(a)?,
                        detail: "link graph contains a triangle".into(),
                    })
                );
            }
        }
        return finish_verify(&VerifySummary {
            target: "link-triangle-free",
            mode: "stream",
            instances,
            skipped: None,
            violations,
            seed: None,
            max_n: None,
        });
    }

    if exhaustive {
        let max_n = max_n.unwrap_or(5);
        if max_n > 5 {
            return Err(Error::Parameter(
                "exhaustive link-triangle-free supports --max-n <= 5".into(),
            ));
        }
        let mut err = None;
        for n in 1..=max_n {
            for_each_edge_disjoint_tf_pair(n, &mut |s, a| {
                if err.is_some() {
                    return;
                }
                instances += 1;
                match verify_claim_triangle_free(s, a) {
                    Ok(true) => {}
                    Ok(false) => {
                        violations += 1;
                        let rec = PairViolation {
                            instance: instances - 1,
                            n,
                            s: graph6::encode(s).unwrap_or_default(),
                            a: graph6::encode(a).unwrap_or_default(),
                            detail: "link graph contains a triangle".into(),
                        };
                        println!("{}", json(&rec));
                    }
                    Err(e) => err = Some(e),
                }
            });
        }
        if let Some(e) = err {
            return Err(e);
        }
        return finish_verify(&VerifySummary {
            target: "link-triangle-free",
            mode: "exhaustive",
            instances,
            skipped: None,
            violations,
            seed: None,
            max_n: Some(max_n),
        });
    }

    let trials = trials.unwrap_or(10_000);
    let max_n = max_n.unwrap_or(12);
    let results: Vec<Option<PairViolation>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, i);
            let n = rng.random_range(2..=max_n);
            let p_s = rng.random_range(0.1..=0.5);
            let p_a = rng.random_range(0.1..=0.5);
            let (s, a) = random_edge_disjoint_tf_pair(n, p_s, p_a, &mut rng);
            match verify_claim_triangle_free(&s, &a) {
                Ok(true) => Ok(None),
                Ok(false) => Ok(Some(PairViolation {
                    instance: i,
                    n,
                    s: graph6::encode(&s)?,
                    a: graph6::encode(&a)?,
                    detail: "link graph contains a triangle".into(),
                })),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_, _>>()?;
    instances = trials;
    for v in results.into_iter().flatten() {
        violations += 1;
        println!("{}", json(&v));
    }
    finish_verify(&VerifySummary {
        target: "link-triangle-free",
        mode: "random",
        instances,
        skipped: None,
        violations,
        seed: Some(seed),
        max_n: Some(max_n),
    })
}

#[derive(serde::Deserialize)]
struct InstanceIn {
    #[serde(default)]
    n: Option<usize>,
    #[serde(rename = "S")]
    s: String,
    #[serde(rename = "A")]
    a: String,
}

fn read_instances(path: &Path) -> Result<Vec<(Graph, Graph)>, Error> {
    let file = File::open(path).map_err(io_err)?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io_err)?;
        if line.trim().is_empty() {
            continue;
        }
        let inst: InstanceIn = serde_json::from_str(&line)
            .map_err(|e| Error::Parameter(format!("line {}: {e}", i + 1)))?;
        let s = graph6::decode(&inst.s)
            .map_err(|e| Error::Parameter(format!("line {}: S: {e}", i + 1)))?;
        let a = graph6::decode(&inst.a)
            .map_err(|e| Error::Parameter(format!("line {}: A: {e}", i + 1)))?;
        if let Some(n) = inst.n {
            if n != s.n() || n != a.n() {
                return Err(Error::Parameter(format!(
                    "line {}: stated n = {n} does not match graphs",
                    i + 1
                )));
            }
        }
        out.push((s, a));
    }
    Ok(out)
}

#[derive(Serialize)]
struct ProductViolation {
    instance: u64,
    s: String,
    t: String,
    detail: String,
}

fn verify_link_product(
    exhaustive: bool,
    max_n: Option<usize>,
    trials: Option<u64>,
    seed: u64,
) -> Result<ExitCode, Error> {
    let mut instances = 0u64;
    let mut violations = 0u64;

    if exhaustive {
        let max_n = max_n.unwrap_or(3);
        if max_n > 4 {
            return Err(Error::Parameter(
                "exhaustive link-product supports --max-n <= 4".into(),
            ));
        }
        for nx in 1..=max_n {
            for ny in 1..=max_n {
                for s in all_graphs(nx)? {
                    for t in all_graphs(ny)? {
                        instances += 1;
                        if !verify_product_identity(&s, &t)? {
                            violations += 1;
                            println!(
                                "{}",
                                json(&ProductViolation {
                                    instance: instances - 1,
                                    s: graph6::encode(&s)?,
                                    t: graph6::encode(&t)?,
                                    detail: "link differs from Cartesian product".into(),
                                })
                            );
                        }
                    }
                }
            }
        }
        return finish_verify(&VerifySummary {
            target: "link-product",
            mode: "exhaustive",
            instances,
            skipped: None,
            violations,
            seed: None,
            max_n: Some(max_n),
        });
    }

    let trials = trials.unwrap_or(10_000);
    let max_n = max_n.unwrap_or(6);
    if max_n > 8 {
        return Err(Error::Parameter(
            "random link-product supports --max-n <= 8 (|X||Y| <= 64)".into(),
        ));
    }
    let results: Vec<Option<ProductViolation>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, i);
            let nx = rng.random_range(1..=max_n);
            let ny = rng.random_range(1..=max_n);
            let p = rng.random_range(0.0..=1.0);
            let s = random_graph(nx, p, &mut rng);
            let t = random_graph(ny, p, &mut rng);
            match verify_product_identity(&s, &t) {
                Ok(true) => Ok(None),
                Ok(false) => Ok(Some(ProductViolation {
                    instance: i,
                    s: graph6::encode(&s)?,
                    t: graph6::encode(&t)?,
                    detail: "link differs from Cartesian product".into(),
                })),
                Err(e) => Err(e),
            }
        })
        .collect::<Result<_, _>>()?;
    instances = trials;
    for v in results.into_iter().flatten() {
        violations += 1;
        println!("{}", json(&v));
    }
    finish_verify(&VerifySummary {
        target: "link-product",
        mode: "random",
        instances,
        skipped: None,
        violations,
        seed: Some(seed),
        max_n: Some(max_n),
    })
}

#[derive(Serialize)]
struct ExtensionViolation {
    instance: u64,
    s: String,
    a: String,
    extensions: u64,
    link_mis: u64,
}

fn verify_extension_count(
    exhaustive: bool,
    max_n: Option<usize>,
    trials: Option<u64>,
    seed: u64,
    input: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    const MAX_A_EDGES: usize = 12;
    let mut instances = 0u64;
    let mut skipped = 0u64;
    let mut violations = 0u64;

    let check = |i: u64,
                     s: &Graph,
                     a: &Graph,
                     skipped: &mut u64|
     -> Result<Option<ExtensionViolation>, Error> {
        match count_maximal_extensions(s, a) {
            Ok(res) => {
                if res.extensions > res.link_mis {
                    return Ok(Some(ExtensionViolation {
                        instance: i,
                        s: graph6::encode(s)?,
                        a: graph6::encode(a)?,
                        extensions: res.extensions,
                        link_mis: res.link_mis,
                    }));
                }
                Ok(None)
            }
            // instances violating the no-mixed-triangle hypothesis are
            // filtered, not failed
            Err(Error::MixedTriangle { .. }) => {
                *skipped += 1;
                Ok(None)
            }
            Err(e) => Err(e),
        }
    };

    if let Some(path) = input {
        for (i, (s, a)) in read_instances(&path)?.iter().enumerate() {
            instances += 1;
            if let Some(v) = check(i as u64, s, a, &mut skipped)? {
                violations += 1;
                println!("{}", json(&v));
            }
        }
        return finish_verify(&VerifySummary {
            target: "extension-count",
            mode: "stream",
            instances,
            skipped: Some(skipped),
            violations,
            seed: None,
            max_n: None,
        });
    }

    if exhaustive || trials.is_none() {
        let max_n = max_n.unwrap_or(5);
        if max_n > 5 {
            return Err(Error::Parameter(
                "exhaustive extension-count supports --max-n <= 5".into(),
            ));
        }
        let mut err = None;
        for n in 1..=max_n {
            for_each_edge_disjoint_tf_pair(n, &mut |s, a| {
                if err.is_some() || a.edge_count() > MAX_A_EDGES {
                    return;
                }
                instances += 1;
                match check(instances - 1, s, a, &mut skipped) {
                    Ok(Some(v)) => {
                        violations += 1;
                        println!("{}", json(&v));
                    }
                    Ok(None) => {}
                    Err(e) => err = Some(e),
                }
            });
        }
        if let Some(e) = err {
            return Err(e);
        }
        return finish_verify(&VerifySummary {
            target: "extension-count",
            mode: "exhaustive",
            instances,
            skipped: Some(skipped),
            violations,
            seed: None,
            max_n: Some(max_n),
        });
    }

    let trials = trials.unwrap_or(1_000);
    let max_n = max_n.unwrap_or(8);
    for i in 0..trials {
        let mut rng = trial_rng(seed, i);
        let n = rng.random_range(2..=max_n);
        let p_s = rng.random_range(0.1..=0.4);
        let p_a = rng.random_range(0.1..=0.5);
        let (s, a) = random_edge_disjoint_tf_pair(n, p_s, p_a, &mut rng);
        if a.edge_count() > MAX_A_EDGES {
            skipped += 1;
            continue;
        }
        instances += 1;
        if let Some(v) = check(i, &s, &a, &mut skipped)? {
            violations += 1;
            println!("{}", json(&v));
        }
    }
    finish_verify(&VerifySummary {
        target: "extension-count",
        mode: "random",
        instances,
        skipped: Some(skipped),
        violations,
        seed: Some(seed),
        max_n: Some(max_n),
    })
}

#[derive(Serialize)]
struct RemarkReport {
    constant: f64,
    closed_form: f64,
    lower_bound: f64,
    family_values: Vec<f64>,
    consistent: bool,
}

fn verify_remark_constant() -> Result<ExitCode, Error> {
    let closed_form = 1.0 / (2.5 - 5f64.log2());
    let family_values = vec![
        min_constant_for_family(1, 0)?,
        min_constant_for_family(2, 0)?,
        min_constant_for_family(1, 3)?,
        min_constant_for_family(5, 7)?,
    ];
    let constant = family_values[0];
    let consistent = family_values
        .iter()
        .all(|v| (v - closed_form).abs() < 1e-9)
        && constant >= 5.6;
    let report = RemarkReport {
        constant,
        closed_form,
        lower_bound: 5.6,
        family_values,
        consistent,
    };
    println!("{}", json(&report));
    Ok(if consistent {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify(target: VerifyTarget) -> Result<ExitCode, Error> {
    match target {
        VerifyTarget::LemmaMisBound {
            exhaustive,
            max_n,
            trials,
            seed,
            input,
            emit_all,
        } => verify_lemma_mis_bound(exhaustive, max_n, trials, seed, input, emit_all),
        VerifyTarget::LinkTriangleFree {
            exhaustive,
            max_n,
            trials,
            seed,
            input,
        } => verify_link_triangle_free(exhaustive, max_n, trials, seed, input),
        VerifyTarget::LinkProduct {
            exhaustive,
            max_n,
            trials,
            seed,
        } => verify_link_product(exhaustive, max_n, trials, seed),
        VerifyTarget::ExtensionCount {
            exhaustive,
            max_n,
            trials,
            seed,
            input,
        } => verify_extension_count(exhaustive, max_n, trials, seed, input),
        VerifyTarget::RemarkConstant => verify_remark_constant(),
    }
}

// ============================================================================
// construct
// ============================================================================

#[derive(Serialize)]
struct DistinctSummary {
    n: usize,
    seed_count: u64,
    distinct_seeds: u64,
    distinct_completions: u64,
    all_seeds_triangle_free: bool,
    all_completions_maximal: bool,
    cross_nonedges_all_blocked: bool,
    cross_edges_preserved: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    colliding_pair: Option<(String, String)>,
    ok: bool,
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    n: usize,
    r: usize,
    all: bool,
    samples: Option<u64>,
    choice_hex: Option<String>,
    seed: u64,
    complete: bool,
    verify_distinct: bool,
    out: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let choices: Vec<SeedChoice> = if let Some(hex) = &choice_hex {
        vec![SeedChoice::from_hex(n, r, hex)?]
    } else if all {
        if r != 2 {
            return Err(Error::Parameter("--all is supported for r = 2".into()));
        }
        let fam = mtf_core::construction::ConstructionFamily::new(n, 2)?;
        let (_, nbits) = fam.choice_shape();
        if nbits > 20 {
            return Err(Error::Parameter(format!(
                "--all would emit 2^{nbits} seeds; use --samples"
            )));
        }
        (0..1u64 << nbits)
            .map(|i| SeedChoice::from_index_r2(n, i))
            .collect::<Result<_, _>>()?
    } else if let Some(k) = samples {
        let mut out = Vec::with_capacity(k as usize);
        for i in 0..k {
            let mut rng = trial_rng(seed, i);
            out.push(SeedChoice::random(n, r, &mut rng)?);
        }
        out
    } else {
        vec![SeedChoice::zeros(n, r)?]
    };

    let mut stream = sink(&out)?;
    for choice in &choices {
        let g = seed_graph_general(n, r, choice)?;
        let g = if complete {
            if r == 2 {
                maximal_completion(&g, None)?
            } else {
                maximal_completion_krfree(&g, r)?
            }
        } else {
            g
        };
        writeln!(stream, "{}", graph6::encode(&g)?).map_err(io_err)?;
    }
    stream.flush().map_err(io_err)?;

    if verify_distinct {
        if r != 2 {
            return Err(Error::Parameter("--verify-distinct applies to r = 2".into()));
        }
        let rep = verify_distinct_completions(n)?;
        let ok = rep.all_hold();
        let summary = DistinctSummary {
            n: rep.n,
            seed_count: rep.seed_count,
            distinct_seeds: rep.distinct_seeds,
            distinct_completions: rep.distinct_completions,
            all_seeds_triangle_free: rep.all_seeds_triangle_free,
            all_completions_maximal: rep.all_completions_maximal,
            cross_nonedges_all_blocked: rep.cross_nonedges_all_blocked,
            cross_edges_preserved: rep.cross_edges_preserved,
            colliding_pair: rep.colliding_pair,
            ok,
        };
        println!("{}", json(&summary));
        if !ok {
            return Ok(ExitCode::from(1));
        }
    }
    Ok(ExitCode::SUCCESS)
}

// ============================================================================
// structure
// ============================================================================

#[derive(Serialize)]
struct StructureRecord {
    graph6: String,
    structured: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_x_mask: Option<u64>,
    s: usize,
    t: usize,
    r: usize,
    closeness: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_cuts: Option<Vec<CutStats>>,
}

#[derive(Serialize)]
struct CutStats {
    x_mask: u64,
    s: usize,
    t: usize,
    r: usize,
}

#[derive(Serialize)]
struct StructureSummary {
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    total: u64,
    by_structure: u64,
}

fn structure_record(g: &Graph, all_cuts: bool) -> Result<StructureRecord, Error> {
    let witness = find_structure_partition(g)?;
    let stats = graph_stats(g)?;
    let cuts = if all_cuts {
        Some(
            graph_stats_all_cuts(g)?
                .into_iter()
                .map(|c| CutStats {
                    x_mask: c.cut.x_mask,
                    s: c.s,
                    t: c.t,
                    r: c.r,
                })
                .collect(),
        )
    } else {
        None
    };
    Ok(StructureRecord {
        graph6: graph6::encode(g)?,
        structured: witness.is_some(),
        witness_x_mask: witness.map(|w| w.partition.x_mask),
        s: stats.s,
        t: stats.t,
        r: stats.r,
        closeness: closeness_to_bipartite(g)?,
        all_cuts: cuts,
    })
}

fn cmd_structure(
    n: Option<usize>,
    input: Option<PathBuf>,
    all_cuts: bool,
    out: Option<PathBuf>,
) -> Result<ExitCode, Error> {
    let start = Instant::now();
    let graphs = match (&n, &input) {
        (Some(n), None) => enumerate_mtf(*n)?,
        (None, Some(path)) => read_graph6_stream(path)?,
        _ => {
            return Err(Error::Parameter(
                "structure needs exactly one of --n or --in".into(),
            ))
        }
    };
    let records: Vec<StructureRecord> = graphs
        .par_iter()
        .map(|g| structure_record(g, all_cuts))
        .collect::<Result<_, _>>()?;

    let mut stream = sink(&out)?;
    let mut structured = 0u64;
    for r in &records {
        if r.structured {
            structured += 1;
        }
        writeln!(stream, "{}", json(r)).map_err(io_err)?;
    }
    stream.flush().map_err(io_err)?;

    let summary = StructureSummary {
        n,
        total: records.len() as u64,
        by_structure: structured,
    };
    println!("{}", json(&summary));
    eprintln!(
        "structure: {} graphs, {} structured, {} ms",
        summary.total,
        summary.by_structure,
        start.elapsed().as_millis()
    );
    Ok(ExitCode::SUCCESS)
}
