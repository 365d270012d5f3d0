//! Command-line front end. Every subcommand prints one JSON document.
//!
//! Exit codes: 0 on success, 1 for mathematical failures (failed relations,
//! reducible input, failed audit trials), 2 for usage and input-format errors.

use std::ffi::OsString;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Pow;
use serde_json::{json, Value};

use crate::analysis::{
    burnside_dimension, burnside_dimension_generic, central_scalar, common_eigenvector, corank, corank_generic,
    invariant_subspace_search, jordan_projection, rank_conclusion_check, subgroup_invariance_check,
    subgroup_line_witness, theta_cycle_audit, AnalysisError, Field,
};
use crate::classify::{audit_theorem, classify, ClassifyError};
use crate::io::{default_tol, error_report, rep_to_json, report, AnyRep, IoError, JsonScalar};
use crate::laurent::LaurentPoly;
use crate::linalg::exact::rational_eigenvalues;
use crate::linalg::numeric::{complexify, jordan_structure};
use crate::linalg::{charpoly_exact, minpoly_exact};
use crate::rep::{burau_rep, specialize, standard_rep, Rep, RepError};
use crate::scalar::{Complex, Domain, FieldScalar, Rational, DEFAULT_TOL};

#[derive(Parser, Debug)]
#[command(name = "braidrep", version, about = "Braid group representations: construction, analysis, classification")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a representation file.
    Gen(GenArgs),
    /// Check every braid relation.
    Relations(InputArgs),
    /// Minimum over eigenvalues y of rank(s1 - yI).
    Corank(SeededArgs),
    /// Burnside closure dimension, with reducibility witnesses when reducible.
    Irreducible(IrreducibleArgs),
    /// Recognize the input as a twisted specialization of the standard representation.
    Classify(InputArgs),
    /// Randomized round-trip audit of the classification.
    Audit(AuditArgs),
    /// Image of f/(x - lambda) applied to a generator, f its minimal polynomial.
    Jordan(JordanArgs),
    /// Line witness and eigenvector-table audit under conjugation by theta.
    ThetaCycle(InputArgs),
    /// Eigenvalues, Jordan blocks and characteristic data of a generator.
    Spectrum(SpectrumArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Standard,
    Burau,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DomainArg {
    Laurent,
    Rational,
    Complex,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum, default_value = "standard")]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Specialize t = u. Rational `p/q` or decimal, or complex `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    /// Twist by the character sending every generator to y.
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Force the output domain (complex promotes rational values).
    #[arg(long, value_enum)]
    domain: Option<DomainArg>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Representation file (`-` for standard input).
    #[arg(long)]
    input: PathBuf,
    /// Tolerance; defaults to BRAIDREP_TOL or 1e-9.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args, Debug)]
struct SeededArgs {
    #[command(flatten)]
    io: InputArgs,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args, Debug)]
struct IrreducibleArgs {
    #[command(flatten)]
    io: InputArgs,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Random algebra elements tried by the invariant subspace search.
    #[arg(long, default_value_t = 20)]
    attempts: usize,
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    tol: Option<f64>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args, Debug)]
struct JordanArgs {
    #[command(flatten)]
    io: InputArgs,
    /// Generator index k of s_k (default: the last generator).
    #[arg(long)]
    generator: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Generators to test for invariance of the image, comma separated
    /// (default: those commuting with s_k, and s_k itself).
    #[arg(long, value_delimiter = ',')]
    subset: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[command(flatten)]
    io: InputArgs,
    #[arg(long, default_value_t = 1)]
    generator: usize,
}

/// Result of one invocation: exit code and the JSON document.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

struct Failure {
    code: i32,
    name: String,
    message: String,
}

impl Failure {
    fn usage(name: &str, message: impl Into<String>) -> Self {
        Failure { code: 2, name: name.into(), message: message.into() }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        let code = match e {
            IoError::Rep(_) => 1,
            _ => 2,
        };
        Failure { code, name: e.name().into(), message: e.to_string() }
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        Failure { code: 1, name: e.name().into(), message: e.to_string() }
    }
}

impl From<crate::linalg::LinalgError> for Failure {
    fn from(e: crate::linalg::LinalgError) -> Self {
        Failure { code: 1, name: e.name().into(), message: e.to_string() }
    }
}

impl From<RepError> for Failure {
    fn from(e: RepError) -> Self {
        Failure { code: 1, name: e.name().into(), message: e.to_string() }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        let code = match e {
            ClassifyError::DegreeMismatch { .. } | ClassifyError::DegreeTooSmall(_) => 2,
            _ => 1,
        };
        Failure { code, name: e.name().into(), message: e.to_string() }
    }
}

/// A scalar given on the command line.
#[derive(Debug, Clone, PartialEq)]
enum ScalarArg {
    Rational(Rational),
    Complex(Complex),
}

impl ScalarArg {
    fn to_complex(&self) -> Complex {
        match self {
            ScalarArg::Rational(q) => q.to_complex(),
            ScalarArg::Complex(z) => *z,
        }
    }
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.')?;
    if int.is_empty() && frac.is_empty() || !(int.chars().chain(frac.chars())).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    let q = Rational::new(digits, BigInt::from(10).pow(frac.len() as u32));
    Some(if neg { -q } else { q })
}

fn parse_scalar(s: &str) -> Result<ScalarArg, Failure> {
    let s = s.trim();
    if let Some((re, im)) = s.split_once(',') {
        return match (re.trim().parse::<f64>(), im.trim().parse::<f64>()) {
            (Ok(re), Ok(im)) if re.is_finite() && im.is_finite() => Ok(ScalarArg::Complex(Complex::new(re, im))),
            _ => Err(Failure::usage("UsageError", format!("bad complex value `{s}` (expected re,im)"))),
        };
    }
    if let Ok(q) = s.parse::<Rational>() {
        return Ok(ScalarArg::Rational(q));
    }
    if let Some(q) = parse_decimal(s) {
        return Ok(ScalarArg::Rational(q));
    }
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(ScalarArg::Rational(Rational::from_float(x).expect("finite"))),
        _ => Err(Failure::usage("UsageError", format!("bad scalar `{s}`"))),
    }
}

fn resolve_tol(flag: Option<f64>) -> Result<f64, Failure> {
    let tol = flag.unwrap_or_else(default_tol);
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(Failure::usage("UsageError", format!("--tol must be positive, got {tol}")))
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| IoError::Read { path: path.display().to_string(), message: e.to_string() })?;
    Ok(text)
}

fn load(args: &InputArgs, check: bool) -> Result<(AnyRep, f64), Failure> {
    let tol = resolve_tol(args.tol)?;
    let rep = AnyRep::from_str(&read_input(&args.input)?, check, tol)?;
    Ok((rep, tol))
}

fn needs_field(cmd: &str) -> Failure {
    Failure::usage(
        "DomainError",
        format!("`{cmd}` needs a rational or complex representation; specialize with `gen --u`"),
    )
}

fn scalars<T: JsonScalar>(v: &[T]) -> Value {
    Value::Array(v.iter().map(JsonScalar::to_json).collect())
}

fn gen(args: &GenArgs) -> Result<Outcome, Failure> {
    let Format::Json = args.format;
    if args.n < 2 {
        return Err(Failure::usage("UsageError", "--n must be at least 2"));
    }
    let base = match args.family {
        Family::Standard => standard_rep(args.n)?,
        Family::Burau => burau_rep(args.n)?,
    };
    let u = args.u.as_deref().map(parse_scalar).transpose()?;
    let y = args.y.as_deref().map(parse_scalar).transpose()?;
    let complex = args.domain == Some(DomainArg::Complex)
        || matches!(u, Some(ScalarArg::Complex(_)))
        || matches!(y, Some(ScalarArg::Complex(_)));
    let y_text = args.y.clone().unwrap_or_default();
    let rep = match (&u, complex) {
        (None, false) => {
            if args.domain == Some(DomainArg::Rational) {
                return Err(Failure::usage("UsageError", "--domain rational needs --u"));
            }
            let rho = match &y {
                Some(ScalarArg::Rational(q)) => base.character_twist(&LaurentPoly::constant(q.clone()), &y_text)?,
                _ => base,
            };
            rep_to_json(&rho)
        }
        (None, true) => return Err(Failure::usage("UsageError", "the complex domain needs --u")),
        (Some(u), false) => {
            let ScalarArg::Rational(q) = u else { unreachable!("complex values force the complex domain") };
            let mut rho = specialize(&base, q, 0.0)?;
            if let Some(ScalarArg::Rational(yq)) = &y {
                rho = rho.character_twist(yq, &y_text)?;
            }
            rep_to_json(&rho)
        }
        (Some(u), true) => {
            let mut rho = specialize(&base, &u.to_complex(), DEFAULT_TOL)?;
            if let Some(y) = &y {
                rho = rho.character_twist(&y.to_complex(), &y_text)?;
            }
            rep_to_json(&rho)
        }
    };
    Ok(Outcome { code: 0, report: rep })
}

fn relations(args: &InputArgs) -> Result<Outcome, Failure> {
    let (rep, tol) = load(args, false)?;
    let r = match &rep {
        AnyRep::Rational(r) => r.check_braid_relations(tol),
        AnyRep::Laurent(r) => r.check_braid_relations(tol),
        AnyRep::Complex(r) => r.check_braid_relations(tol),
    };
    let code = if r.all_hold { 0 } else { 1 };
    let mut body = serde_json::to_value(&r).expect("plain report");
    body["ok"] = json!(r.all_hold);
    body["strands"] = json!(rep.strands());
    body["domain"] = json!(rep.domain());
    if !r.all_hold {
        body["error"] = json!("RelationFailure");
    }
    Ok(Outcome { code, report: report("relations", body) })
}

fn corank_cmd(args: &SeededArgs) -> Result<Outcome, Failure> {
    let (rep, tol) = load(&args.io, true)?;
    let r = match &rep {
        AnyRep::Rational(r) => corank(r, tol)?,
        AnyRep::Complex(r) => corank(r, tol)?,
        AnyRep::Laurent(r) => corank_generic(r, tol, args.seed)?,
    };
    let mut body = serde_json::to_value(&r).expect("plain report");
    body["ok"] = json!(true);
    body["corank"] = json!(r.rank_at_best);
    body["tolerance"] = json!(tol);
    body["domain"] = json!(rep.domain());
    if rep.domain() == Domain::Laurent {
        body["seed"] = json!(args.seed);
        body["sample_points"] = json!(crate::analysis::generic_points(args.seed).iter().map(|q| q.to_string()).collect::<Vec<_>>());
    }
    Ok(Outcome { code: 0, report: report("corank", body) })
}

fn irreducible_field<T: Field + JsonScalar>(rho: &Rep<T>, tol: f64, args: &IrreducibleArgs) -> Result<Value, Failure> {
    let t = if T::is_exact() { 0.0 } else { tol };
    let b = burnside_dimension(rho, t)?;
    let mut body = serde_json::to_value(&b).expect("plain report");
    if !b.irreducible {
        body["common_eigenvector"] = match common_eigenvector(rho, t)? {
            Some(c) => json!({"vector": scalars(&c.vector), "eigenvalues": scalars(&c.eigenvalues)}),
            None => Value::Null,
        };
        body["invariant_subspace"] = match invariant_subspace_search(rho, t, args.attempts, args.seed)? {
            Some(basis) => json!({"dimension": basis.len(), "basis": basis.iter().map(|v| scalars(v)).collect::<Vec<_>>()}),
            None => Value::Null,
        };
    }
    Ok(body)
}

fn irreducible(args: &IrreducibleArgs) -> Result<Outcome, Failure> {
    let (rep, tol) = load(&args.io, true)?;
    let mut body = match &rep {
        AnyRep::Rational(r) => irreducible_field(r, tol, args)?,
        AnyRep::Complex(r) => irreducible_field(r, tol, args)?,
        AnyRep::Laurent(r) => {
            let b = burnside_dimension_generic(r, args.seed)?;
            let mut v = serde_json::to_value(&b).expect("plain report");
            v["seed"] = json!(args.seed);
            v
        }
    };
    let irreducible = body["irreducible"].as_bool().unwrap_or(false);
    body["ok"] = json!(irreducible);
    body["tolerance"] = json!(tol);
    body["seed"] = json!(args.seed);
    body["attempts"] = json!(args.attempts);
    if !irreducible {
        body["error"] = json!("NotIrreducible");
    }
    Ok(Outcome { code: if irreducible { 0 } else { 1 }, report: report("irreducible", body) })
}

fn classify_cmd(args: &InputArgs) -> Result<Outcome, Failure> {
    let (rep, tol) = load(args, true)?;
    let rho = match rep {
        AnyRep::Complex(r) => r,
        AnyRep::Rational(r) => r.to_complex(),
        AnyRep::Laurent(_) => return Err(needs_field("classify")),
    };
    let res = classify(&rho, tol)?;
    let mut body = serde_json::to_value(&res).expect("plain report");
    let ok = res.verdict == crate::classify::Verdict::Equivalent && !res.theorem_contradiction();
    body["ok"] = json!(ok);
    body["relative_residual"] = json!(res.relative_residual());
    body["tolerance"] = json!(tol);
    body["degree"] = json!(rho.degree());
    Ok(Outcome { code: if ok { 0 } else { 1 }, report: report("classify", body) })
}

fn audit(args: &AuditArgs) -> Result<Outcome, Failure> {
    let tol = resolve_tol(args.tol)?;
    if args.jobs == 0 {
        return Err(Failure::usage("UsageError", "--jobs must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Failure::usage("UsageError", e.to_string()))?;
    let summary = pool.install(|| audit_theorem(args.n, args.trials, args.seed, tol))?;
    let mut body = serde_json::to_value(&summary).expect("plain report");
    let ok = summary.all_passed();
    body["ok"] = json!(ok);
    Ok(Outcome { code: if ok { 0 } else { 1 }, report: report("audit", body) })
}

fn jordan_field<T: Field + JsonScalar>(rho: &Rep<T>, lambda: &T, k: usize, subset: &[usize], tol: f64) -> Result<Value, Failure> {
    let t = if T::is_exact() { 0.0 } else { tol };
    let m = rho.generator(k);
    let p = jordan_projection(m, lambda, t)?;
    let invariant = subgroup_invariance_check(rho, &p.basis, subset, t)?;
    let blocks = jordan_structure(&complexify(m), tol)?;
    let cross = blocks.find(lambda.to_complex(), 1e-6).map(|e| e.largest_block_count());
    Ok(json!({
        "generator": k,
        "lambda": lambda.to_json(),
        "d": p.d,
        "basis": p.basis.iter().map(|v| scalars(v)).collect::<Vec<_>>(),
        "minpoly": scalars(p.minpoly.coeffs()),
        "cofactor": scalars(p.cofactor.coeffs()),
        "subset": subset,
        "invariant": invariant,
        "jordan_blocks": blocks.find(lambda.to_complex(), 1e-6),
        "largest_block_count": cross,
        "consistent": cross == Some(p.d),
        "ok": invariant && cross == Some(p.d),
    }))
}

fn jordan(args: &JordanArgs) -> Result<Outcome, Failure> {
    let (rep, tol) = load(&args.io, true)?;
    let m = rep.strands();
    let k = args.generator.unwrap_or(m - 1);
    if k == 0 || k >= m {
        return Err(Failure::usage("UsageError", format!("--generator must be in 1..{}", m - 1)));
    }
    let subset = args.subset.clone().unwrap_or_else(|| (1..m).filter(|&i| i == k || i.abs_diff(k) >= 2).collect());
    if let Some(bad) = subset.iter().find(|&&i| i == 0 || i >= m) {
        return Err(Failure::usage("UsageError", format!("subset index {bad} out of range")));
    }
    let lambda = parse_scalar(&args.lambda)?;
    let mut body = match (&rep, &lambda) {
        (AnyRep::Rational(r), ScalarArg::Rational(q)) => jordan_field(r, q, k, &subset, tol)?,
        (AnyRep::Rational(r), ScalarArg::Complex(z)) => jordan_field(&r.to_complex(), z, k, &subset, tol)?,
        (AnyRep::Complex(r), l) => jordan_field(r, &l.to_complex(), k, &subset, tol)?,
        (AnyRep::Laurent(_), _) => return Err(needs_field("jordan")),
    };
    let ok = body["ok"].as_bool().unwrap_or(false);
    body["tolerance"] = json!(tol);
    Ok(Outcome { code: if ok { 0 } else { 1 }, report: report("jordan", body) })
}

fn theta_field<T: Field + JsonScalar>(rho: &Rep<T>, tol: f64) -> Result<Option<Value>, Failure> {
    let t = if T::is_exact() { 0.0 } else { tol };
    let witness = match subgroup_line_witness(rho, t) {
        Err(AnalysisError::NeedsComplexDomain { .. }) => return Ok(None),
        other => other?,
    };
    let Some(w) = witness else {
        return Ok(Some(json!({"ok": false, "error": "NoWitness", "witness": null})));
    };
    let audit = theta_cycle_audit(rho, &w.vector, &w.x, &w.y, tol)?;
    let rank = rank_conclusion_check(rho, &w.y, t);
    let independence_ok = audit.independence + 2 >= audit.m;
    let ok = audit.passed && independence_ok && rank == 2;
    let mut body = serde_json::to_value(&audit).expect("plain report");
    body["witness"] = json!({"vector": scalars(&w.vector), "x": w.x.to_json(), "y": w.y.to_json()});
    body["rank_conclusion"] = json!(rank);
    body["independence_ok"] = json!(independence_ok);
    body["ok"] = json!(ok);
    Ok(Some(body))
}

fn theta_cycle(args: &InputArgs) -> Result<Outcome, Failure> {
    let (rep, tol) = load(args, true)?;
    let body = match &rep {
        AnyRep::Rational(r) => match theta_field(r, tol)? {
            Some(b) => b,
            None => {
                let mut b = theta_field(&r.to_complex(), tol)?.expect("complex domain has no fallback");
                b["note"] = json!("witness eigenvalue is irrational; audited over the complex numbers");
                b
            }
        },
        AnyRep::Complex(r) => theta_field(r, tol)?.expect("complex domain has no fallback"),
        AnyRep::Laurent(_) => return Err(needs_field("theta-cycle")),
    };
    let ok = body["ok"].as_bool().unwrap_or(false);
    let mut body = body;
    body["tolerance"] = json!(tol);
    Ok(Outcome { code: if ok { 0 } else { 1 }, report: report("theta-cycle", body) })
}

fn spectrum(args: &SpectrumArgs) -> Result<Outcome, Failure> {
    let (rep, tol) = load(&args.io, true)?;
    let k = args.generator;
    if k == 0 || k >= rep.strands() {
        return Err(Failure::usage("UsageError", format!("--generator must be in 1..{}", rep.strands() - 1)));
    }
    let body = match &rep {
        AnyRep::Laurent(r) => {
            let m = r.generator(k);
            json!({
                "generator": k,
                "charpoly": scalars(charpoly_exact(m).coeffs()),
                "minpoly": scalars(minpoly_exact(m).coeffs()),
                "central_scalar": central_scalar(r, tol).ok().map(|c| c.d.to_json()),
            })
        }
        AnyRep::Rational(r) => {
            let m = r.generator(k);
            let exact: Vec<Value> = rational_eigenvalues(m, 0.0)
                ?
                .into_iter()
                .map(|(q, mult)| json!({"value": q.to_json(), "multiplicity": mult}))
                .collect();
            json!({
                "generator": k,
                "charpoly": scalars(charpoly_exact(m).coeffs()),
                "minpoly": scalars(minpoly_exact(m).coeffs()),
                "rational_eigenvalues": exact,
                "jordan": jordan_structure(&complexify(m), tol)?,
                "central_scalar": central_scalar(r, tol).ok().map(|c| c.d.to_json()),
            })
        }
        AnyRep::Complex(r) => {
            let m = r.generator(k);
            json!({
                "generator": k,
                "jordan": jordan_structure(m, tol)?,
                "central_scalar": central_scalar(r, tol).ok().map(|c| c.d.to_json()),
            })
        }
    };
    let mut body = body;
    body["ok"] = json!(true);
    body["tolerance"] = json!(tol);
    body["domain"] = json!(rep.domain());
    Ok(Outcome { code: 0, report: report("spectrum", body) })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gen(_) => "gen",
        Command::Relations(_) => "relations",
        Command::Corank(_) => "corank",
        Command::Irreducible(_) => "irreducible",
        Command::Classify(_) => "classify",
        Command::Audit(_) => "audit",
        Command::Jordan(_) => "jordan",
        Command::ThetaCycle(_) => "theta-cycle",
        Command::Spectrum(_) => "spectrum",
    }
}

/// Parses arguments and runs one subcommand without touching the process
/// state beyond reading input files and writing `--output`.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let report = if code == 0 {
                json!({"help": e.to_string()})
            } else {
                error_report("usage", "UsageError", &e.to_string())
            };
            return Outcome { code, report };
        }
    };
    let name = command_name(&cli.command);
    let result = match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Relations(a) => relations(a),
        Command::Corank(a) => corank_cmd(a),
        Command::Irreducible(a) => irreducible(a),
        Command::Classify(a) => classify_cmd(a),
        Command::Audit(a) => audit(a),
        Command::Jordan(a) => jordan(a),
        Command::ThetaCycle(a) => theta_cycle(a),
        Command::Spectrum(a) => spectrum(a),
    };
    let mut outcome = result.unwrap_or_else(|f| Outcome { code: f.code, report: error_report(name, &f.name, &f.message) });
    if let Some(path) = &cli.output {
        let text = render(&outcome.report);
        if let Err(e) = std::fs::write(path, text) {
            outcome = Outcome {
                code: 2,
                report: error_report(name, "WriteError", &format!("cannot write {}: {e}", path.display())),
            };
        }
    }
    outcome
}

/// Pretty-printed JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Entry point for the binary: prints the report (unless `--output` was
/// given and succeeded) and returns the exit code.
pub fn main_with_args<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let args: Vec<S> = args.into_iter().collect();
    let wrote_file = args.windows(2).any(|w| w[0].clone().into() == "--output")
        || args.iter().any(|a| a.clone().into().to_string_lossy().starts_with("--output="));
    let outcome = run(args);
    if outcome.code != 0 || !wrote_file {
        if let Some(help) = outcome.report.get("help").and_then(Value::as_str) {
            print!("{help}");
        } else {
            print!("{}", render(&outcome.report));
        }
    }
    outcome.code
}
