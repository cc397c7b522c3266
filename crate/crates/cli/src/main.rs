use std::io::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use rrcodes::classify::{run_suite, SUITE_FAMILIES};
use rrcodes::decomp::{
    decompose, decompose_in, distance_of, verify_equivalence, DistanceCache, EXHAUSTIVE_CHECK_LIMIT,
};
use rrcodes::lincode::DEFAULT_BUDGET;
use rrcodes::matprod::is_nsc;
use rrcodes::{
    classify, ClassifyError, CodeError, ConstacyclicCode, ConstacyclicFamily, DecompError, Field,
    FieldElement, FieldSpec, MatprodError, Polynomial,
};

mod parse;

const SCHEMA_VERSION: u32 = 1;

macro_rules! emit {
    ($out:expr) => {
        $out.push('\n')
    };
    ($out:expr, $($arg:tt)*) => {{
        $out.push_str(&format!($($arg)*));
        $out.push('\n');
    }};
}

#[derive(Parser)]
#[command(
    name = "rrcodes",
    version,
    about = "Repeated-root constacyclic codes as matrix-product codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor x^n - λ0 and x^(p^k n) - λ.
    Factor(CodeArgs),
    /// Decompose one code and verify the equivalence.
    Decompose(DecomposeArgs),
    /// Minimum distance of every code in a family.
    Classify(ClassifyArgs),
    /// Run the built-in self-check suites.
    VerifySuite(SuiteArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args)]
struct CodeArgs {
    /// Field characteristic.
    #[arg(long)]
    p: u64,
    /// Extension degree.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Defining modulus digits, constant term first, comma separated.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u64>>,
    /// Length of the simple-root part, coprime to p.
    #[arg(long)]
    n: usize,
    /// Code length is p^k n.
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// λ for length p^k n: digits (constant first, comma separated) or -1.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Seed for the randomized factorization.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args)]
#[command(group(ArgGroup::new("code").required(true).args(["exponents", "generator"])))]
struct DecomposeArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Exponent vector over the canonical factors of x^n - λ0.
    #[arg(long, value_delimiter = ',')]
    exponents: Option<Vec<u32>>,
    /// Generator polynomial, coefficients constant first; digits within a
    /// coefficient separated by ':'.
    #[arg(long)]
    generator: Option<String>,
    /// Maximum number of codewords to enumerate per component.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    code: CodeArgs,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
}

#[derive(Args)]
struct SuiteArgs {
    /// Suite to run; repeatable. Defaults to all of them. An empty value
    /// selects nothing.
    #[arg(long)]
    family: Vec<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("enumeration budget exceeded: {0}")]
    Budget(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

fn is_budget(e: &DecompError) -> bool {
    matches!(
        e,
        DecompError::Code(CodeError::BudgetExceeded { .. })
            | DecompError::Matprod(MatprodError::DistanceUnknown(_))
            | DecompError::Matprod(MatprodError::Code(CodeError::BudgetExceeded { .. }))
    )
}

impl From<DecompError> for CliError {
    fn from(e: DecompError) -> Self {
        if is_budget(&e) {
            CliError::Budget(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Decomp(d) => d.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

struct Setup {
    spec: Field,
    lambda: FieldElement,
    family: ConstacyclicFamily,
}

impl CodeArgs {
    fn setup(&self) -> Result<Setup, CliError> {
        let spec = FieldSpec::new(self.p, self.m, self.modulus.clone()).map_err(input)?;
        if self.n == 0 || (self.n as u64).is_multiple_of(self.p) {
            return Err(CliError::Input(format!(
                "n = {} must be positive and coprime to p = {}",
                self.n, self.p
            )));
        }
        let lambda = parse::element(&spec, &self.lambda).map_err(CliError::Input)?;
        let length = (self.p as usize)
            .checked_pow(self.k)
            .and_then(|pk| pk.checked_mul(self.n))
            .ok_or_else(|| CliError::Input("code length overflows".into()))?;
        let family = ConstacyclicFamily::new(&lambda, length, self.seed).map_err(input)?;
        Ok(Setup {
            spec,
            lambda,
            family,
        })
    }
}

fn header(command: &str, s: &Setup) -> serde_json::Map<String, Value> {
    let f = &s.family;
    let mut m = serde_json::Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    m.insert("field".into(), json!(&*s.spec));
    m.insert("lambda".into(), json!(s.lambda));
    m.insert("lambda0".into(), json!(f.lambda0()));
    m.insert("n".into(), json!(f.n()));
    m.insert("k".into(), json!(f.k()));
    m.insert("length".into(), json!(f.length()));
    m
}

fn print_json(out: &mut String, v: &Value) {
    emit!(
        out,
        "{}",
        serde_json::to_string(v).expect("JSON values serialize")
    );
}

fn cmd_factor(args: &CodeArgs, out: &mut String) -> Result<(), CliError> {
    let s = args.setup()?;
    let f = &s.family;
    let base_target = Polynomial::x_pow_minus(f.n(), f.lambda0());
    let full_target = Polynomial::x_pow_minus(f.length(), &s.lambda);
    match args.format {
        Format::Json => {
            let mut m = header("factor", &s);
            m.insert(
                "base".into(),
                json!({"target": base_target.to_string(), "factorization": f.base_factorization()}),
            );
            m.insert(
                "full".into(),
                json!({"target": full_target.to_string(), "factorization": f.factorization()}),
            );
            print_json(out, &Value::Object(m));
        }
        Format::Tsv => {
            emit!(out, "target\tfactor\tdegree\tmultiplicity");
            for (target, fact) in [
                (&base_target, f.base_factorization().clone()),
                (&full_target, f.factorization()),
            ] {
                for (g, e) in fact.factors() {
                    emit!(out, "{target}\t{g}\t{}\t{e}", g.degree().unwrap_or(0));
                }
            }
        }
    }
    Ok(())
}

fn cmd_decompose(args: &DecomposeArgs, out: &mut String) -> Result<bool, CliError> {
    let s = args.code.setup()?;
    let family = &s.family;
    let (code, r) = match (&args.exponents, &args.generator) {
        (Some(e), _) => (family.code(e).map_err(input)?, decompose_in(family, e)?),
        (None, Some(g)) => {
            let g = parse::polynomial(&s.spec, g).map_err(CliError::Input)?;
            let code = ConstacyclicCode::new(&s.lambda, family.length(), g).map_err(input)?;
            let r = decompose(&code, args.code.seed)?;
            (code, r)
        }
        (None, None) => unreachable!("clap requires one of the two"),
    };
    let rep = verify_equivalence(&code, &r, args.budget.min(EXHAUSTIVE_CHECK_LIMIT));
    let nsc = is_nsc(r.matrix()).map_err(input)?;
    let cache = DistanceCache::new();
    let distance = match distance_of(&r, &cache, args.budget) {
        Ok(b) => Some((b.bound, b.exact)),
        Err(DecompError::Matprod(MatprodError::ZeroCode)) => Some((0, true)),
        Err(e) if is_budget(&e) => None,
        Err(e) => return Err(e.into()),
    };
    match args.code.format {
        Format::Json => {
            let mut m = header("decompose", &s);
            m.insert("generator".into(), json!(code.generator()));
            m.insert("dimension".into(), json!(code.dimension()));
            m.insert("decomposition".into(), json!(r));
            m.insert("nsc".into(), json!(nsc));
            m.insert(
                "verification".into(),
                json!({
                    "row_space": rep.row_space,
                    "exhaustive": rep.exhaustive,
                    "passed": rep.passed(),
                }),
            );
            m.insert(
                "distance".into(),
                match distance {
                    Some((d, exact)) => json!({"d": d, "exact": exact}),
                    None => Value::Null,
                },
            );
            print_json(out, &Value::Object(m));
        }
        Format::Tsv => {
            emit!(out, "lambda0\t{}", r.lambda0());
            emit!(out, "n_prime\t{}", r.n_prime());
            emit!(out, "exponents\t{}", join(r.exponents()));
            emit!(out, "dimension\t{}", code.dimension());
            emit!(out, "nsc\t{nsc}");
            emit!(out, "row_space\t{}", rep.row_space);
            emit!(
                out,
                "exhaustive\t{}",
                rep.exhaustive
                    .map_or("skipped".to_string(), |b| b.to_string())
            );
            match distance {
                Some((d, exact)) => emit!(out, "distance\t{d}\nexact\t{exact}"),
                None => emit!(out, "distance\tunknown"),
            }
            for s in (0..r.pk()).rev() {
                let c = r.component(s);
                emit!(out, "C_{s}\t{}\t{}", c.generator(), c.dimension());
            }
        }
    }
    if !rep.passed() {
        return Ok(false);
    }
    if distance.is_none() {
        return Err(CliError::Budget("component distance not computed".into()));
    }
    Ok(true)
}

fn join(xs: &[u32]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_classify(args: &ClassifyArgs, out: &mut String) -> Result<(), CliError> {
    let s = args.code.setup()?;
    let c = classify(&s.family, args.budget)?;
    match args.code.format {
        Format::Json => {
            let mut m = header("classify", &s);
            m.insert("factors".into(), json!(s.family.factors()));
            m.insert("total".into(), json!(c.rows.len()));
            m.insert("nontrivial".into(), json!(c.nontrivial()));
            if let Value::Object(body) = json!(c) {
                m.extend(body);
            }
            print_json(out, &Value::Object(m));
        }
        Format::Tsv => {
            emit!(out, "exponents\tdim\td\texact");
            for row in &c.rows {
                emit!(
                    out,
                    "{}\t{}\t{}\t{}",
                    join(&row.exponents),
                    row.dimension,
                    row.distance,
                    row.exact
                );
            }
            emit!(out);
            emit!(out, "d\tN_d");
            for (d, count) in &c.by_distance {
                emit!(out, "{d}\t{count}");
            }
            emit!(out);
            emit!(out, "d\tk\tcount");
            for ((d, k), count) in &c.by_distance_and_dimension {
                emit!(out, "{d}\t{k}\t{count}");
            }
        }
    }
    Ok(())
}

fn cmd_verify_suite(args: &SuiteArgs, out: &mut String) -> Result<bool, CliError> {
    let families: Vec<String> = if args.family.is_empty() {
        SUITE_FAMILIES.iter().map(|s| s.to_string()).collect()
    } else {
        args.family
            .iter()
            .filter(|f| !f.trim().is_empty())
            .cloned()
            .collect()
    };
    let summary = run_suite(&families, args.seed)?;
    for w in &summary.warnings {
        eprintln!("warning: {w}");
    }
    match args.format {
        Format::Json => print_json(
            out,
            &json!({
                "schema_version": SCHEMA_VERSION,
                "command": "verify-suite",
                "passed": summary.passed(),
                "results": summary.results.iter().map(|r| json!({
                    "family": r.family,
                    "checked": r.checked,
                    "passed": r.passed(),
                    "failures": r.failures,
                })).collect::<Vec<_>>(),
                "warnings": summary.warnings,
            }),
        ),
        Format::Tsv => {
            emit!(out, "family\tchecked\tpassed");
            for r in &summary.results {
                emit!(out, "{}\t{}\t{}", r.family, r.checked, r.passed());
                for f in &r.failures {
                    eprintln!("{}: {f}", r.family);
                }
            }
        }
    }
    Ok(summary.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = match &cli.command {
        Command::Factor(a) => cmd_factor(a, &mut out).map(|_| true),
        Command::Decompose(a) => cmd_decompose(a, &mut out),
        Command::Classify(a) => cmd_classify(a, &mut out).map(|_| true),
        Command::VerifySuite(a) => cmd_verify_suite(a, &mut out),
    };
    // a closed pipe downstream is not an error worth reporting
    let _ = std::io::stdout().write_all(out.as_bytes());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
