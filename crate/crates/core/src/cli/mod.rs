//! The `kn` command line: product tables, verification reports and run manifests.
//!
//! [`run`] does all the work and returns the exit code with the text that
//! would be printed, so the binary is a thin wrapper and tests can call it
//! directly.

mod render;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

pub use render::{key_tex, vector_tex, Format, Report, Table};

use crate::algebra::SuperAlgebra;
use crate::axioms::{verify_axioms, Coverage};
use crate::crosscheck::cross_check_geometry;
use crate::doubling::{cross_check_doubling, doubling_for, leibniz_violations, RingSpec};
use crate::error::{Error, Result};
use crate::geometry::GeometryConfig;
use crate::kernel::Rational;
use crate::morphisms::{check_all_r_maps, check_embedding_iso_witt, check_homomorphism, window_derivations, HomSpecFile};
use crate::ovs::check_three_point_isomorphism;
use crate::presentations::{AlgebraHandle, Params};
use crate::representations::{classify_lambda_jordan, RepMode};
use crate::simplicity::{parse_ring_elem, seed_sweep, simplicity_witness, verify_witness};

#[derive(Parser, Debug)]
#[command(name = "kn", version, about = "Exact tables and checks for Krichever-Novikov superalgebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write a JSON run manifest (with timing) to this path.
    #[arg(long, global = true)]
    pub manifest: Option<PathBuf>,
    /// Repeat the command over seven parameter values.
    #[arg(long, global = true)]
    pub params_sweep: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    /// Square root of the puncture parameter (three punctures at 0-free ±α, ∞ with α = s²).
    #[arg(long = "sqrt-alpha", default_value = "1", allow_hyphen_values = true)]
    pub s: Rational,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub theta: Rational,
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    pub p: i64,
    #[arg(long, default_value = "1/2")]
    pub sigma: Rational,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub theta1: Rational,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub theta2: Rational,
}

impl ParamArgs {
    fn params(&self) -> Params {
        Params {
            s: self.s.clone(),
            theta: self.theta.clone(),
            p: self.p,
            sigma: self.sigma.clone(),
            theta1: self.theta1.clone(),
            theta2: self.theta2.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Auto,
    Geometry,
    Doubling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LambdaMode {
    Geometric,
    Algebraic,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the product table on a window.
    Table {
        algebra: String,
        #[arg(long, default_value_t = 5)]
        window: i64,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check the identities of the algebra's kind on every basis tuple.
    VerifyAxioms {
        algebra: String,
        #[arg(long, default_value_t = 5)]
        window: i64,
        /// Visit every n-th tuple instead of all of them.
        #[arg(long)]
        stride: Option<u64>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Compare the table with the geometric or doubling construction.
    CrossCheck {
        algebra: String,
        #[arg(long, default_value_t = 5)]
        window: i64,
        #[arg(long, value_enum, default_value_t = Oracle::Auto)]
        against: Oracle,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check the map from vector fields and half-densities onto the adjoint superalgebra.
    Ovs {
        #[arg(long, default_value_t = 5)]
        window: i64,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Decide for which weights the density module is a Jordan representation.
    ClassifyLambda {
        #[arg(long, value_enum, default_value_t = LambdaMode::Geometric)]
        mode: LambdaMode,
        /// Comma-separated weights, e.g. `0,1/2,1`.
        #[arg(long, allow_hyphen_values = true)]
        lambdas: Option<String>,
        /// Weights expected to close; the command fails if the result differs.
        #[arg(long, allow_hyphen_values = true)]
        expect: Option<String>,
        #[arg(long, default_value_t = 5)]
        window: i64,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check a homomorphism given as JSON.
    CheckHom {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 5)]
        window: i64,
    },
    /// Produce and verify a simplicity witness for the hyperelliptic ring.
    Simplicity {
        /// Seed such as `y^2+x*y`; without it, the standard seed sweep runs.
        #[arg(long, allow_hyphen_values = true)]
        seed: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Pull the two-puncture algebras back along a Möbius map.
    EmbedWitt {
        #[arg(long, default_value_t = 5)]
        window: i64,
        /// Use the Lie superalgebra instead of the antialgebra.
        #[arg(long)]
        lie: bool,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check the Leibniz rule of the ring and the doubled tables.
    DoublingCheck {
        algebra: String,
        #[arg(long, default_value_t = 5)]
        window: i64,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check the derivations attached to vector fields and half-densities.
    Derivations {
        #[arg(long, default_value_t = 5)]
        window: i64,
        /// How far derivations may shift indices in the window solve.
        #[arg(long, default_value_t = 4)]
        margin: i64,
        #[command(flatten)]
        params: ParamArgs,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Reproducibility record written by `--manifest`.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: Vec<String>,
    pub params: Params,
    pub window: Option<i64>,
    pub elapsed_ms: u128,
    pub passed: bool,
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub label: String,
    pub passed: bool,
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("kn".to_string()).chain(argv.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok((report, params, window)) => {
            let mut out = Outcome {
                code: if report.passed { 0 } else { 1 },
                stdout: report.render(cli.format),
                stderr: String::new(),
            };
            if let Some(path) = &cli.manifest {
                let manifest = RunManifest {
                    command: argv,
                    params,
                    window,
                    elapsed_ms: start.elapsed().as_millis(),
                    passed: report.passed,
                    verdicts: verdicts(&report),
                };
                let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
                if let Err(e) = std::fs::write(path, text + "\n") {
                    out.stderr = format!("error: cannot write manifest {}: {e}\n", path.display());
                    out.code = 2;
                }
            }
            out
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn verdicts(report: &Report) -> Vec<Verdict> {
    match report.body.get("runs").and_then(Value::as_array) {
        Some(runs) => runs
            .iter()
            .map(|r| Verdict {
                label: r["params"].as_str().unwrap_or_default().to_string(),
                passed: r["passed"].as_bool().unwrap_or(false),
            })
            .collect(),
        None => vec![Verdict {
            label: report.command.clone(),
            passed: report.passed,
        }],
    }
}

type Executed = (Report, Params, Option<i64>);

fn execute(cli: &Cli) -> Result<Executed> {
    let sweep = cli.params_sweep;
    match &cli.command {
        Command::Table { algebra, window, params } => {
            let base = params.params();
            let r = over_params(algebra, &base, sweep, |p| table(algebra, p, *window))?;
            Ok((r, base, Some(*window)))
        }
        Command::VerifyAxioms {
            algebra,
            window,
            stride,
            params,
        } => {
            let base = params.params();
            let coverage = match stride {
                Some(n) if *n > 1 => Coverage::Stride(*n),
                _ => Coverage::Exhaustive,
            };
            let r = over_params(algebra, &base, sweep, |p| axioms(algebra, p, *window, coverage))?;
            Ok((r, base, Some(*window)))
        }
        Command::CrossCheck {
            algebra,
            window,
            against,
            params,
        } => {
            let base = params.params();
            let r = over_params(algebra, &base, sweep, |p| cross_check(algebra, p, *window, *against))?;
            Ok((r, base, Some(*window)))
        }
        Command::Ovs { window, params } => {
            let base = params.params();
            let r = over_params("L03", &base, sweep, |p| ovs(p, *window))?;
            Ok((r, base, Some(*window)))
        }
        Command::ClassifyLambda {
            mode,
            lambdas,
            expect,
            window,
            params,
        } => {
            let base = params.params();
            let key = if *mode == LambdaMode::Geometric { "L03" } else { "Lthetap" };
            let r = over_params(key, &base, sweep, |p| {
                classify(*mode, lambdas.as_deref(), expect.as_deref(), p, *window)
            })?;
            Ok((r, base, Some(*window)))
        }
        Command::CheckHom { spec, window } => {
            let text = std::fs::read_to_string(spec)
                .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", spec.display())))?;
            let file: HomSpecFile =
                serde_json::from_str(&text).map_err(|e| Error::InvalidParameter(format!("bad spec file: {e}")))?;
            Ok((check_hom(&file, *window)?, Params::default(), Some(*window)))
        }
        Command::Simplicity { seed, params } => {
            let base = params.params();
            let r = if sweep {
                let runs = SIMPLICITY_SWEEP
                    .iter()
                    .map(|(t, p)| {
                        let mut q = base.clone();
                        q.theta = Rational::new(t.0, t.1);
                        q.p = *p;
                        Ok((format!("theta={}, p={}", q.theta, q.p), simplicity(seed.as_deref(), &q)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                merge("simplicity", runs)
            } else {
                simplicity(seed.as_deref(), &base)?
            };
            Ok((r, base, None))
        }
        Command::EmbedWitt { window, lie, params } => {
            let base = params.params();
            let r = over_params("L03", &base, sweep, |p| embed_witt(p, *window, *lie))?;
            Ok((r, base, Some(*window)))
        }
        Command::DoublingCheck { algebra, window, params } => {
            let base = params.params();
            let r = over_params(algebra, &base, sweep, |p| doubling_check(algebra, p, *window))?;
            Ok((r, base, Some(*window)))
        }
        Command::Derivations { window, margin, params } => {
            let base = params.params();
            let r = over_params("L03", &base, sweep, |p| derivations(p, *window, *margin))?;
            Ok((r, base, Some(*window)))
        }
    }
}

const S_SWEEP: [(i64, i64); 7] = [(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (-1, 1), (2, 3)];
const THETA_SWEEP: [(i64, i64); 7] = [(1, 1), (2, 1), (-1, 1), (1, 2), (3, 1), (-2, 3), (5, 4)];
const TORUS_SWEEP: [((i64, i64), (i64, i64)); 7] = [
    ((1, 1), (1, 1)),
    ((0, 1), (1, 1)),
    ((1, 1), (0, 1)),
    ((2, 1), (-1, 1)),
    ((1, 2), (3, 1)),
    ((-1, 1), (2, 1)),
    ((3, 2), (1, 3)),
];
const SIMPLICITY_SWEEP: [((i64, i64), i64); 7] = [
    ((1, 1), 1),
    ((1, 1), -1),
    ((2, 1), 2),
    ((-1, 1), 1),
    ((1, 2), 3),
    ((-2, 1), -2),
    ((3, 1), -1),
];

/// The seven parameter sets used by `--params-sweep` for an algebra.
pub fn sweep_params(algebra: &str, base: &Params) -> Result<Vec<Params>> {
    let h = AlgebraHandle::by_name(algebra, base)?;
    let names: Vec<&str> = h.params().iter().map(|(k, _)| k.as_str()).collect();
    let with = |f: &dyn Fn(&mut Params, usize)| -> Vec<Params> {
        (0..7)
            .map(|i| {
                let mut p = base.clone();
                f(&mut p, i);
                p
            })
            .collect()
    };
    Ok(if names.contains(&"s") {
        with(&|p, i| p.s = Rational::new(S_SWEEP[i].0, S_SWEEP[i].1))
    } else if names.contains(&"theta") {
        with(&|p, i| p.theta = Rational::new(THETA_SWEEP[i].0, THETA_SWEEP[i].1))
    } else if names.contains(&"theta1") {
        with(&|p, i| {
            let ((a, b), (c, d)) = TORUS_SWEEP[i];
            p.theta1 = Rational::new(a, b);
            p.theta2 = Rational::new(c, d);
        })
    } else {
        vec![base.clone()]
    })
}

fn param_label(algebra: &str, p: &Params) -> String {
    match AlgebraHandle::by_name(algebra, p) {
        Ok(h) if !h.params().is_empty() => h
            .params()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", "),
        _ => "none".into(),
    }
}

fn over_params(algebra: &str, base: &Params, sweep: bool, f: impl Fn(&Params) -> Result<Report>) -> Result<Report> {
    if !sweep {
        return f(base);
    }
    let runs = sweep_params(algebra, base)?
        .iter()
        .map(|p| Ok((param_label(algebra, p), f(p)?)))
        .collect::<Result<Vec<_>>>()?;
    let command = runs.first().map(|(_, r)| r.command.clone()).unwrap_or_default();
    Ok(merge(&command, runs))
}

fn merge(command: &str, runs: Vec<(String, Report)>) -> Report {
    let passed = runs.iter().all(|(_, r)| r.passed);
    let mut table = Table::default();
    let mut lines = Vec::new();
    let mut latex_columns = Vec::new();
    if let Some((_, first)) = runs.first() {
        table.headers = std::iter::once("params".to_string()).chain(first.table.headers.iter().cloned()).collect();
        latex_columns = first.latex_columns.iter().map(|c| c + 1).collect();
    }
    let mut bodies = Vec::new();
    for (label, r) in runs {
        lines.push(format!("[{label}] {}", r.verdict()));
        lines.extend(r.lines.iter().map(|l| format!("  {l}")));
        for row in &r.table.rows {
            table.push(std::iter::once(label.clone()).chain(row.iter().cloned()).collect());
        }
        bodies.push(json!({ "params": label, "passed": r.passed, "report": r.body }));
    }
    let mut out = Report::new(command, passed, json!({ "runs": bodies }), table);
    out.lines = lines;
    out.latex_columns = latex_columns;
    out
}

fn params_json(h: &AlgebraHandle) -> Value {
    let m: BTreeMap<&str, &str> = h.params().iter().map(|(k, v)| (k.as_str(), v.as_str())).collect();
    json!(m)
}

fn table(algebra: &str, p: &Params, window: i64) -> Result<Report> {
    let h = AlgebraHandle::by_name(algebra, p)?;
    let entries = h.table(window)?;
    let mut t = Table::new(&["left", "right", "result"]);
    let mut lines = Vec::new();
    for e in &entries {
        t.push(vec![e.left.to_string(), e.right.to_string(), e.result.to_string()]);
        lines.push(format!("{} * {} = {}", e.left, e.right, e.result));
    }
    let body = json!({
        "algebra": h.name(),
        "kind": h.kind().to_string(),
        "params": params_json(&h),
        "window": window,
        "entries": entries,
    });
    let mut r = Report::new("table", true, body, t);
    r.lines = lines;
    r.latex_columns = vec![0, 1, 2];
    Ok(r)
}

fn axioms(algebra: &str, p: &Params, window: i64, coverage: Coverage) -> Result<Report> {
    let h = AlgebraHandle::by_name(algebra, p)?;
    let rep = verify_axioms(&h, window, coverage)?;
    let mut t = Table::new(&["identity", "tuples_total", "tuples_checked", "violations", "witness"]);
    let mut lines = vec![format!("{} ({}) on {} basis elements", h.name(), h.kind(), rep.basis_size)];
    for o in &rep.outcomes {
        let witness = o
            .witness
            .as_ref()
            .map(|w| format!("{} -> {}", w.args.join(", "), w.residual))
            .unwrap_or_default();
        t.push(vec![
            format!("{:?}", o.identity),
            o.tuples_total.to_string(),
            o.tuples_checked.to_string(),
            o.violations.to_string(),
            witness.clone(),
        ]);
        let mut l = format!(
            "{:?}: {} of {} tuples, {} violations",
            o.identity, o.tuples_checked, o.tuples_total, o.violations
        );
        if !witness.is_empty() {
            l.push_str(&format!(" (first: {witness})"));
        }
        lines.push(l);
    }
    let body = json!({
        "algebra": h.name(),
        "kind": h.kind().to_string(),
        "params": params_json(&h),
        "window": window,
        "coverage": match coverage { Coverage::Exhaustive => "exhaustive".to_string(), Coverage::Stride(n) => format!("stride {n}") },
        "basis_size": rep.basis_size,
        "outcomes": rep.outcomes,
    });
    let mut r = Report::new("verify-axioms", rep.passed(), body, t);
    r.lines = lines;
    Ok(r)
}

const GEOMETRIC: [&str; 8] = ["A03", "g03", "L03", "J03", "J03u", "AK1", "K1", "Witt"];

fn cross_check(algebra: &str, p: &Params, window: i64, against: Oracle) -> Result<Report> {
    let h = AlgebraHandle::by_name(algebra, p)?;
    let geometric = match against {
        Oracle::Auto => GEOMETRIC.contains(&h.name()),
        Oracle::Geometry => true,
        Oracle::Doubling => false,
    };
    let rep = if geometric {
        cross_check_geometry(&h, window)?
    } else {
        cross_check_doubling(&h, window)?
    };
    let first = rep
        .first_mismatch
        .as_ref()
        .map(|m| format!("{} * {}: table {} vs {}", m.left, m.right, m.table, m.oracle))
        .unwrap_or_default();
    let mut t = Table::new(&["algebra", "oracle", "pairs_checked", "mismatches", "first_mismatch"]);
    t.push(vec![
        rep.algebra.clone(),
        rep.oracle.clone(),
        rep.pairs_checked.to_string(),
        rep.mismatches.to_string(),
        first.clone(),
    ]);
    let mut r = Report::new(
        "cross-check",
        rep.passed(),
        json!({ "params": params_json(&h), "result": rep }),
        t,
    )
    .line(format!(
        "{} vs {}: {} pairs, {} mismatches",
        rep.algebra, rep.oracle, rep.pairs_checked, rep.mismatches
    ));
    if !first.is_empty() {
        r = r.line(format!("first mismatch: {first}"));
    }
    Ok(r)
}

fn ovs(p: &Params, window: i64) -> Result<Report> {
    let rep = check_three_point_isomorphism(&p.s, window)?;
    let mut t = Table::new(&[
        "sqrt_alpha",
        "window",
        "quotient_window",
        "brackets_checked",
        "violations",
        "image_rank",
        "even_dimension",
        "pairs_outside_image",
    ]);
    t.push(vec![
        rep.sqrt_alpha.to_string(),
        rep.window.to_string(),
        rep.quotient_window.to_string(),
        rep.brackets_checked.to_string(),
        rep.bracket_violations.to_string(),
        rep.image_rank.to_string(),
        rep.even_dimension.to_string(),
        rep.pairs_outside_image.to_string(),
    ]);
    let mut r = Report::new("ovs", rep.passed(), json!(rep), t)
        .line(format!(
            "{} brackets checked, {} violations",
            rep.brackets_checked, rep.bracket_violations
        ))
        .line(format!(
            "image rank {} of {}, {} pairs outside the image",
            rep.image_rank, rep.even_dimension, rep.pairs_outside_image
        ));
    if let Some(v) = &rep.first_violation {
        r = r.line(format!("first violation: {v}"));
    }
    Ok(r)
}

fn parse_list(s: &str) -> Result<Vec<Rational>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Rational>()
                .map_err(|_| Error::InvalidParameter(format!("bad weight {t:?}")))
        })
        .collect()
}

fn classify(mode: LambdaMode, lambdas: Option<&str>, expect: Option<&str>, p: &Params, window: i64) -> Result<Report> {
    let (m, default) = match mode {
        LambdaMode::Geometric => (RepMode::Geometric(GeometryConfig::three(p.s.clone())?), "-1,-1/2,0,1/2,1"),
        LambdaMode::Algebraic => (
            RepMode::Algebraic {
                theta: p.theta.clone(),
                p: p.p,
            },
            "0,1/8,1/4,1/3,1/2,1",
        ),
    };
    let lams = parse_list(lambdas.unwrap_or(default))?;
    let verdicts = classify_lambda_jordan(&m, &lams, window)?;
    let mut t = Table::new(&["lambda", "closed", "violations", "matches", "la_representation", "witness"]);
    let mut lines = Vec::new();
    for v in &verdicts {
        t.push(vec![
            v.lambda.to_string(),
            v.closed.to_string(),
            v.violations.to_string(),
            v.matches.clone().unwrap_or_default(),
            v.la_representation.to_string(),
            v.witness.clone().unwrap_or_default(),
        ]);
        lines.push(if v.closed {
            format!(
                "lambda={}: closed{}",
                v.lambda,
                v.matches.as_ref().map(|m| format!(", matches {m}")).unwrap_or_default()
            )
        } else {
            format!(
                "lambda={}: fails ({} violations; {})",
                v.lambda,
                v.violations,
                v.witness.clone().unwrap_or_default()
            )
        });
    }
    let closed: Vec<Rational> = verdicts.iter().filter(|v| v.closed).map(|v| v.lambda.clone()).collect();
    let passed = match expect {
        None => true,
        Some(e) => {
            let mut want = parse_list(e)?;
            want.sort();
            let mut got = closed.clone();
            got.sort();
            want == got
        }
    };
    let mode_name = match mode {
        LambdaMode::Geometric => "geometric",
        LambdaMode::Algebraic => "algebraic",
    };
    let body = json!({
        "mode": mode_name,
        "window": window,
        "verdicts": verdicts,
        "closed": closed.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    let mut r = Report::new("classify-lambda", passed, body, t);
    r.lines = lines;
    Ok(r)
}

fn check_hom(file: &HomSpecFile, window: i64) -> Result<Report> {
    let (spec, target) = file.resolve()?;
    let rep = check_homomorphism(&spec, &target, window)?;
    let mut t = Table::new(&["source", "target", "pairs_checked", "violations", "image_rank", "domain_dimension"]);
    t.push(vec![
        rep.source.clone(),
        rep.target.clone(),
        rep.pairs_checked.to_string(),
        rep.violations.to_string(),
        rep.image_rank.to_string(),
        rep.domain_dimension.to_string(),
    ]);
    let mut r = Report::new("check-hom", rep.passed(), json!(rep), t)
        .line(format!(
            "{} -> {}: {} pairs, {} violations, {} parity violations",
            rep.source, rep.target, rep.pairs_checked, rep.violations, rep.parity_violations
        ))
        .line(format!("rank {} of {}", rep.image_rank, rep.domain_dimension));
    if let Some(v) = &rep.first_violation {
        r = r.line(format!("first violation: {v}"));
    }
    Ok(r)
}

fn simplicity(seed: Option<&str>, p: &Params) -> Result<Report> {
    let spec = RingSpec::hyperelliptic(p.theta.clone(), p.p)?;
    match seed {
        Some(text) => {
            let s = parse_ring_elem(&spec, text)?;
            let w = simplicity_witness(&spec, &s)?;
            let ok = verify_witness(&w);
            let mut t = Table::new(&["step", "rule", "from", "element"]);
            let steps = serde_json::to_value(&w).expect("witness serializes");
            let mut lines = vec![format!("ring {spec}, seed {s}, {} steps", w.len())];
            for (i, st) in steps["steps"].as_array().expect("steps").iter().enumerate() {
                let from = st["from"].as_array().expect("from").iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
                let rule = st["rule"].as_str().unwrap_or_default();
                let el = st["element"].as_str().unwrap_or_default();
                t.push(vec![i.to_string(), rule.to_string(), from.clone(), el.to_string()]);
                lines.push(format!("{i}: {rule} [{from}] {el}"));
            }
            lines.push(format!("verified: {ok}"));
            let mut r = Report::new("simplicity", ok, json!({ "witness": steps, "verified": ok }), t);
            r.lines = lines;
            Ok(r)
        }
        None => {
            let mut t = Table::new(&["seed", "length", "verified"]);
            let mut all = true;
            let mut rows = Vec::new();
            let mut longest = 0;
            for s in seed_sweep(&spec, 4)? {
                let w = simplicity_witness(&spec, &s)?;
                let ok = verify_witness(&w);
                all &= ok;
                longest = longest.max(w.len());
                t.push(vec![s.to_string(), w.len().to_string(), ok.to_string()]);
                rows.push(json!({ "seed": s.to_string(), "length": w.len(), "verified": ok }));
            }
            let n = rows.len();
            let r = Report::new("simplicity", all, json!({ "ring": spec.to_string(), "seeds": rows }), t)
                .line(format!("ring {spec}: {n} seeds, longest witness {longest} steps, all verified: {all}"));
            Ok(r)
        }
    }
}

fn embed_witt(p: &Params, window: i64, lie: bool) -> Result<Report> {
    let rep = check_embedding_iso_witt(&p.s, window, lie)?;
    let mut t = Table::new(&["source", "expected", "computed", "matches"]);
    for im in &rep.printed {
        t.push(vec![im.source.clone(), im.expected.clone(), im.computed.clone(), im.matches.to_string()]);
    }
    let mut r = Report::new("embed-witt", rep.passed(), json!(rep), t);
    r.latex_columns = vec![0, 2];
    r = r
        .line(format!(
            "{} -> {}: {} images outside the subalgebra, {} relation violations over {} pairs, rank {} of {}",
            rep.source,
            rep.target,
            rep.outside_subalgebra,
            rep.relations.violations,
            rep.relations.pairs_checked,
            rep.relations.image_rank,
            rep.relations.domain_dimension
        ));
    for im in &rep.printed {
        r = r.line(format!("{} -> {} (expected {}): {}", im.source, im.computed, im.expected, im.matches));
    }
    Ok(r)
}

fn doubling_check(algebra: &str, p: &Params, window: i64) -> Result<Report> {
    let h = AlgebraHandle::by_name(algebra, p)?;
    let d = doubling_for(&h)?;
    let leibniz = leibniz_violations(&d.spec, window)?;
    let rep = cross_check_doubling(&h, window)?;
    let mut t = Table::new(&["check", "count"]);
    t.push(vec!["leibniz_violations".into(), leibniz.to_string()]);
    t.push(vec!["pairs_checked".into(), rep.pairs_checked.to_string()]);
    t.push(vec!["mismatches".into(), rep.mismatches.to_string()]);
    let r = Report::new(
        "doubling-check",
        leibniz == 0 && rep.passed(),
        json!({ "params": params_json(&h), "ring": d.spec.to_string(), "leibniz_violations": leibniz, "cross_check": rep }),
        t,
    )
    .line(format!("ring {}: {leibniz} Leibniz violations", d.spec))
    .line(format!("{} vs {}: {} pairs, {} mismatches", rep.algebra, rep.oracle, rep.pairs_checked, rep.mismatches));
    Ok(r)
}

fn derivations(p: &Params, window: i64, margin: i64) -> Result<Report> {
    let maps = check_all_r_maps(&p.s, window)?;
    let space = window_derivations(&p.s, window, margin)?;
    let mut t = Table::new(&["map", "pairs_checked", "violations"]);
    for m in &maps {
        t.push(vec![m.map.clone(), m.pairs_checked.to_string(), m.violations.to_string()]);
    }
    let bad = maps.iter().filter(|m| !m.passed()).count();
    let passed = bad == 0 && space.matches();
    let body = json!({
        "sqrt_alpha": p.s.to_string(),
        "maps": maps,
        "window_derivations": {
            "window": space.window,
            "margin": space.margin,
            "even_dimension": space.even_dimension,
            "odd_dimension": space.odd_dimension,
            "dimension": space.dimension(),
            "lie_window_dimension": space.lie_window_dimension(),
            "r_span_rank": space.r_span_rank,
            "fitting": space.fitting,
        },
    });
    let r = Report::new("derivations", passed, body, t)
        .line(format!("{} maps checked, {} fail the Leibniz rule", maps.len(), bad))
        .line(format!(
            "window derivations: {} even + {} odd = {}; vector fields and half-densities fitting the window: {}; their rank: {}",
            space.even_dimension,
            space.odd_dimension,
            space.dimension(),
            space.lie_window_dimension(),
            space.r_span_rank
        ));
    Ok(r)
}
