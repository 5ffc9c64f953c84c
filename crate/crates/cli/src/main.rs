use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use planecount::analytics;
use planecount::constructions::{ConstructionName, ConstructionSpec};
use planecount::counting;
use planecount::error::Error;
use planecount::exec::Execution;
use planecount::geom::{format_rational, parse_rational, Point, Vec2};
use planecount::oracle::{self, Oracle};
use planecount::pslg::Pslg;
use planecount::transform;
use planecount::verify::{self, Suite, VerifyOptions};

/// Exact counts of monotone paths, star-shaped and convex polygons and
/// directed paths in plane straight-line graphs.
#[derive(Parser, Debug)]
#[command(name = "planecount", version)]
struct Cli {
    /// Emit a JSON run report instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Largest instance handed to brute-force enumeration.
    #[arg(long, global = true, default_value_t = oracle::DEFAULT_LIMIT)]
    max_n: usize,
    /// Bits of certified precision for real-valued results.
    #[arg(long, global = true, default_value_t = 64)]
    precision: u32,
    /// Run on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named construction and write it as JSON.
    Generate {
        #[arg(value_parser = parse_name)]
        name: ConstructionName,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Count a configuration with the fast algorithms.
    Count(CountArgs),
    /// Count a configuration by brute-force enumeration.
    Oracle(CountArgs),
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        max_l: u32,
    },
    /// Closed-form quantities, bounds and the reduction pipeline.
    Analyze(AnalyzeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Metric {
    Xmonotone,
    MonotoneDir,
    MonotoneAll,
    MaximalMonotoneDir,
    DirectedPaths,
    StarCenter,
    StarTotal,
    Convex,
    ConvexPairs,
    HullEndpoints,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(value_enum)]
    metric: Metric,
    input: PathBuf,
    /// Direction as two rationals.
    #[arg(long, num_args = 2, value_names = ["DX", "DY"], allow_hyphen_values = true)]
    dir: Option<Vec<String>>,
    /// Star center as two rationals.
    #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true)]
    at: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    TransferMatrix,
    Eigenvalue,
    GrowthRate,
    TribonacciRoot,
    TribonacciBound,
    Fibonacci,
    StarBound,
    DirectedBound,
    Pipeline,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[arg(value_enum)]
    what: Quantity,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    l: Option<u64>,
    /// Input graph for `pipeline`.
    #[arg(long)]
    input: Option<PathBuf>,
}

fn parse_name(s: &str) -> Result<ConstructionName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Serialize, Default)]
struct RunReport {
    command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    input_hash: Option<String>,
    results: BTreeMap<String, String>,
    verdicts: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    witnesses: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    log: Vec<String>,
    timings_ms: BTreeMap<String, f64>,
}

enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e.to_string())
    }
}

type Outcome = Result<(RunReport, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::auto()
    };
    let started = Instant::now();
    let outcome = match &cli.command {
        Command::Generate { name, n, l, k, out } => generate(*name, *n, *l, *k, out),
        Command::Count(a) => count(&cli, a, exec),
        Command::Oracle(a) => run_oracle(&cli, a),
        Command::Verify {
            suite,
            trials,
            max_l,
        } => run_verify(&cli, *suite, *trials, *max_l, exec),
        Command::Analyze(a) => analyze(&cli, a),
    };
    match outcome {
        Ok((mut report, ok)) => {
            report.command = std::env::args().skip(1).collect();
            report
                .timings_ms
                .insert("total".into(), started.elapsed().as_secs_f64() * 1e3);
            emit(&cli, &report);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Run(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}

fn emit(cli: &Cli, r: &RunReport) {
    if cli.json {
        println!(
            "{}",
            serde_json::to_string_pretty(r).expect("report serializes")
        );
        return;
    }
    for line in r.log.iter().chain(&r.witnesses) {
        println!("{line}");
    }
    if r.results.len() == 1 && r.verdicts.is_empty() {
        println!("{}", r.results.values().next().unwrap());
        return;
    }
    for (k, v) in &r.results {
        println!("{k}: {v}");
    }
    for (k, v) in &r.verdicts {
        println!("{v} {k}");
    }
}

fn generate(
    name: ConstructionName,
    n: Option<u64>,
    l: Option<u64>,
    k: Option<u64>,
    out: &Path,
) -> Outcome {
    let mut spec = ConstructionSpec::new(name);
    for (key, v) in [("n", n), ("l", l), ("k", k)] {
        if let Some(v) = v {
            spec = spec.with(key, v);
        }
    }
    let g = spec.build().map_err(|e| Failure::Usage(e.to_string()))?;
    g.write(out)?;
    let valid = g.validate().is_ok();
    let mut r = RunReport::default();
    r.results.insert("n".into(), g.n().to_string());
    r.results.insert("edges".into(), g.m().to_string());
    r.results.insert("output".into(), out.display().to_string());
    r.verdicts.insert("validate".into(), verdict(valid));
    Ok((r, valid))
}

fn verdict(ok: bool) -> String {
    if ok { "PASS" } else { "FAIL" }.to_string()
}

fn load(path: &Path) -> Result<(Pslg, String), Failure> {
    let bytes =
        std::fs::read(path).map_err(|e| Failure::Run(format!("{}: {e}", path.display())))?;
    let hash = Sha256::digest(&bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    let text = String::from_utf8(bytes).map_err(|e| Failure::Run(e.to_string()))?;
    Ok((Pslg::from_json(&text)?, hash))
}

fn pair(
    v: &Option<Vec<String>>,
    flag: &str,
) -> Result<(planecount::geom::Rational, planecount::geom::Rational), Failure> {
    let v = v
        .as_ref()
        .ok_or_else(|| Failure::Usage(format!("this metric needs --{flag} A B")))?;
    let a = parse_rational(&v[0]).map_err(|e| Failure::Usage(e.to_string()))?;
    let b = parse_rational(&v[1]).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok((a, b))
}

fn direction(a: &CountArgs) -> Result<Vec2, Failure> {
    match a.metric {
        Metric::Xmonotone => Ok(Vec2::from_ints(1, 0)),
        _ => {
            let (x, y) = pair(&a.dir, "dir")?;
            Ok(Vec2::new(x, y))
        }
    }
}

fn center(a: &CountArgs) -> Result<Point, Failure> {
    let (x, y) = pair(&a.at, "at")?;
    Ok(Point::new(x, y))
}

fn metric_name(a: &CountArgs) -> String {
    a.metric
        .to_possible_value()
        .expect("named")
        .get_name()
        .to_string()
}

fn count(cli: &Cli, a: &CountArgs, exec: Execution) -> Outcome {
    let (g, hash) = load(&a.input)?;
    let t = Instant::now();
    let value = match a.metric {
        Metric::Xmonotone | Metric::MonotoneDir => {
            counting::count_monotone_paths_in_direction(&g, &direction(a)?)?
        }
        Metric::MaximalMonotoneDir => {
            counting::count_maximal_monotone_in_direction(&g, &direction(a)?)?
        }
        Metric::MonotoneAll => counting::count_monotone_paths_all_directions_with(&g, exec),
        Metric::DirectedPaths => counting::count_directed_paths_total_with_limit(&g, cli.max_n)?,
        Metric::StarCenter => counting::count_star_at_center_with(&g, &center(a)?, exec)?,
        Metric::Convex => counting::count_convex_polygons_with(&g, exec),
        Metric::ConvexPairs => counting::count_convex_pairs(&g)?,
        Metric::StarTotal | Metric::HullEndpoints => {
            return Err(Failure::Usage(
                "this metric is only available through `oracle`".into(),
            ))
        }
    };
    let mut r = RunReport {
        input_hash: Some(hash),
        ..Default::default()
    };
    r.timings_ms
        .insert(metric_name(a), t.elapsed().as_secs_f64() * 1e3);
    r.results.insert(metric_name(a), value.to_string());
    Ok((r, true))
}

fn run_oracle(cli: &Cli, a: &CountArgs) -> Outcome {
    let (g, hash) = load(&a.input)?;
    let o = Oracle::new(cli.max_n);
    let mut r = RunReport {
        input_hash: Some(hash),
        ..Default::default()
    };
    let t = Instant::now();
    let mut ok = true;
    let value = match a.metric {
        Metric::Xmonotone | Metric::MonotoneDir => o.monotone_in_direction(&g, &direction(a)?)?,
        Metric::MaximalMonotoneDir => o.maximal_monotone_in_direction(&g, &direction(a)?)?,
        Metric::MonotoneAll => {
            let ws = o.monotone_paths_all_directions(&g)?;
            for w in ws.iter().take(3) {
                let u = w
                    .valid_direction
                    .as_ref()
                    .map(|u| u.to_string())
                    .unwrap_or_default();
                r.witnesses
                    .push(format!("path {:?} direction {u}", w.vertices));
            }
            ws.len().into()
        }
        Metric::DirectedPaths => o.directed_total(&g)?,
        Metric::StarCenter => o.star_at_center(&g, &center(a)?)?,
        Metric::StarTotal => {
            let mut n = 0usize;
            for c in o.enumerate_simple_cycles(&g)? {
                let w = oracle::CycleWitness {
                    vertices: c.vertices.clone(),
                    kernel_point: None,
                };
                if let Some(p) = oracle::is_star_shaped(&w, &g) {
                    if n < 3 {
                        r.witnesses.push(format!(
                            "cycle {:?} kernel point ({}, {})",
                            c.vertices,
                            format_rational(&p.x),
                            format_rational(&p.y)
                        ));
                    }
                    n += 1;
                }
            }
            n.into()
        }
        Metric::Convex => o.convex_polygons(&g)?,
        Metric::ConvexPairs => o.convex_pairs(&g)?,
        Metric::HullEndpoints => {
            let bad = o.check_maximal_endpoints_on_hull(&g)?;
            if let Some(w) = &bad {
                r.witnesses
                    .push(format!("path {:?} ends inside the hull", w.vertices));
            }
            ok = bad.is_none();
            r.verdicts.insert("hull-endpoints".into(), verdict(ok));
            r.timings_ms
                .insert(metric_name(a), t.elapsed().as_secs_f64() * 1e3);
            return Ok((r, ok));
        }
    };
    r.timings_ms
        .insert(metric_name(a), t.elapsed().as_secs_f64() * 1e3);
    r.results.insert(metric_name(a), value.to_string());
    Ok((r, ok))
}

fn run_verify(cli: &Cli, suite: Suite, trials: usize, max_l: u32, exec: Execution) -> Outcome {
    let opts = VerifyOptions {
        seed: cli.seed,
        trials,
        max_n: cli.max_n.min(10),
        max_l,
        precision: cli.precision,
        exec,
    };
    let t = Instant::now();
    let checks = verify::run_suite(suite, &opts);
    let mut r = RunReport::default();
    for c in &checks {
        r.verdicts.insert(c.name.clone(), verdict(c.passed));
        r.results.insert(c.name.clone(), c.detail.clone());
        if !cli.json {
            r.log.push(c.to_string());
        }
    }
    r.results.insert("seed".into(), cli.seed.to_string());
    r.timings_ms
        .insert(suite.to_string(), t.elapsed().as_secs_f64() * 1e3);
    let ok = verify::all_passed(&checks);
    if !cli.json {
        // the log already carries every verdict
        r.verdicts.clear();
        r.results.clear();
        r.results
            .insert("suite".into(), format!("{suite} {}", verdict(ok)));
    }
    Ok((r, ok))
}

fn need(v: Option<u64>, flag: &str) -> Result<u64, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn usage<T>(r: planecount::error::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(e.to_string()))
}

fn analyze(cli: &Cli, a: &AnalyzeArgs) -> Outcome {
    let mut r = RunReport::default();
    let res = &mut r.results;
    let digits = ((cli.precision as f64) * std::f64::consts::LOG10_2).floor() as usize;
    match a.what {
        Quantity::TransferMatrix | Quantity::Eigenvalue | Quantity::GrowthRate => {
            let k = need(a.k, "k")?;
            let k32 = u32::try_from(k).map_err(|_| Failure::Usage("k too large".into()))?;
            let m = usage(analytics::transfer_matrix(k32))?;
            res.insert("k".into(), k.to_string());
            match a.what {
                Quantity::TransferMatrix => {
                    res.insert("matrix".into(), m.to_string());
                }
                Quantity::Eigenvalue => {
                    res.insert(
                        "lambda".into(),
                        analytics::dominant_eigenvalue(&m)?.to_string(),
                    );
                }
                _ => {
                    let e = analytics::growth_rate(k32, cli.precision)?;
                    let shown = e.certified_digits().min(digits).max(1);
                    res.insert("growth_rate".into(), e.to_decimal(shown));
                    if cli.json {
                        res.insert(
                            "lambda".into(),
                            analytics::dominant_eigenvalue(&m)?.to_string(),
                        );
                    } else {
                        res.remove("k");
                    }
                }
            }
            if !cli.json && a.what != Quantity::GrowthRate {
                res.remove("k");
            }
        }
        Quantity::TribonacciRoot => {
            let e = analytics::tribonacci_root(cli.precision);
            res.insert(
                "alpha".into(),
                e.to_decimal(e.certified_digits().min(digits).max(1)),
            );
        }
        Quantity::TribonacciBound => {
            let n = need(a.n, "n")? as usize;
            res.insert(
                "tribonacci".into(),
                usage(analytics::tribonacci_bound(n))?.to_string(),
            );
        }
        Quantity::Fibonacci => {
            res.insert(
                "fibonacci".into(),
                usage(analytics::fibonacci(need(a.n, "n")?))?.to_string(),
            );
        }
        Quantity::StarBound => {
            let b = usage(analytics::star_lb_bound(need(a.n, "n")?, need(a.k, "k")?))?;
            res.insert("star_bound".into(), format_rational(&b));
        }
        Quantity::DirectedBound => {
            let b = usage(analytics::directed_path_bound(
                need(a.n, "n")?,
                need(a.l, "l")?,
            ))?;
            res.insert("product_bound".into(), b.product_bound.to_string());
            res.insert("global_cap".into(), b.global_cap.to_string());
        }
        Quantity::Pipeline => {
            let path = a
                .input
                .as_ref()
                .ok_or_else(|| Failure::Usage("missing --input".into()))?;
            let (g, hash) = load(path)?;
            let p = transform::run_pipeline(&g)?;
            r.input_hash = Some(hash);
            r.log = p.audit_lines();
            let res = &mut r.results;
            res.insert("original_count".into(), p.original_count.to_string());
            res.insert("ordered_count".into(), p.ordered_count.to_string());
            res.insert("final_count".into(), p.final_count.to_string());
            res.insert("tribonacci_sum".into(), p.tribonacci_sum.to_string());
            res.insert("reduced_bound".into(), p.reduced_bound.to_string());
            res.insert(
                "max_outdegree".into(),
                p.reduction.graph.max_outdegree().to_string(),
            );
            r.verdicts
                .insert("monotone-steps".into(), verdict(p.all_steps_monotone()));
            r.verdicts.insert(
                "reduced-bound".into(),
                verdict(p.final_count <= p.reduced_bound),
            );
            let ok = p.all_steps_monotone();
            return Ok((r, ok));
        }
    }
    Ok((r, true))
}
