//! `mirabolic`: batch front end for the mirabolic-core engine.

mod json;
mod verify;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mirabolic_core::decorated::{count_xi_tensor, enumerate_xi};
use mirabolic_core::oracle::{is_prime, structure_constants, CountRecord};
use mirabolic_core::pbw::{multiply, project_to_schur, PbwElement};
use mirabolic_core::rep::{build, casimir_scalar, decompose_weight_table, weight_table, ModuleSpec, Sign, Weight, WeightTable};
use mirabolic_core::schur::{SchurAlgebra, SchurElement};
use mirabolic_core::tensor::{check_left_module, weight_multiplicities};
use mirabolic_core::word::{GeneratorWord, Letter};
use serde_json::{json, Value};

#[derive(Debug)]
pub enum CliError {
    /// Bad input; exit status 2.
    Usage(String),
    /// A check ran and failed; exit status 1.
    Failed,
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser)]
#[command(name = "mirabolic", version, about = "Exact computations in mirabolic quantum Schur algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two elements of MU_v(2,d) read from JSON files, or two words
    /// in MU_v(2) with --pbw.
    Mul {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// Treat --lhs and --rhs as generator words and multiply in PBW form.
        #[arg(long)]
        pbw: bool,
    },
    /// PBW normal form of a generator word.
    Normalize {
        #[arg(long)]
        word: String,
        /// Also print the image in MU_v(2,D).
        #[arg(long, value_name = "D")]
        project: Option<u32>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: String,
        #[arg(long)]
        d: u32,
        /// Pair sample size for the oracle suite.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Matrices, Casimir scalar and weights of a simple module, or the
    /// decomposition of a weight table read from a JSON file.
    Rep {
        #[arg(long, required_unless_present = "decompose", conflicts_with = "decompose")]
        module: Option<String>,
        /// Also print the matrix of this word.
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        decompose: Option<String>,
    },
    /// Weight table of a simple module or of the tensor space MT_v(2,d).
    Weights {
        #[arg(long, required_unless_present = "d", conflicts_with = "d")]
        module: Option<String>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decompose MT_v(2,d) as a left module and compare with the predicted table.
    SwCheck {
        #[arg(long)]
        d: usize,
    },
    /// Structure constants by point counting over finite fields.
    Oracle {
        #[arg(long)]
        d: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        /// Where to write the per-prime count log (CSV); standard error if absent.
        #[arg(long)]
        log: Option<String>,
    },
    /// Size of Ξ_{n,d}, or of Ξ_{n,1^d} with --tensor.
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        tensor: bool,
    },
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read_json(path: &str) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("malformed JSON in {path}: {e}")))
}

fn parse_word(s: &str) -> Result<GeneratorWord> {
    s.parse().map_err(|e| usage(format!("{e}")))
}

fn parse_module(s: &str) -> Result<ModuleSpec> {
    s.parse().map_err(|e| usage(format!("{e}")))
}

fn pbw_of(w: &GeneratorWord) -> PbwElement {
    PbwElement::from_words(std::slice::from_ref(w))
}

fn mul(lhs: &str, rhs: &str, pbw: bool) -> Result<Value> {
    if pbw {
        let (x, y) = (pbw_of(&parse_word(lhs)?), pbw_of(&parse_word(rhs)?));
        return Ok(json::pbw(&multiply(&x, &y)));
    }
    let x = json::parse_element(&read_json(lhs)?)?;
    let y = json::parse_element(&read_json(rhs)?)?;
    if x.d() != y.d() {
        return Err(usage(format!("elements have different degrees {} and {}", x.d(), y.d())));
    }
    Ok(json::element(&SchurAlgebra::new(x.d()).mul(&x, &y)))
}

fn normalize(word: &str, project: Option<u32>) -> Result<Value> {
    let x = pbw_of(&parse_word(word)?);
    let mut out = json::pbw(&x);
    if let Some(d) = project {
        out["projection"] = json::element(&project_to_schur(d, &x));
    }
    Ok(out)
}

fn run_verify(suite: &str, d: u32, samples: usize) -> Result<(Value, bool)> {
    let checks = verify::run(suite, d, samples).ok_or_else(|| usage(format!("unknown suite {suite}")))?;
    let failures: Vec<&str> = checks.iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect();
    let passed = checks.len() - failures.len();
    let ok = failures.is_empty();
    Ok((json!({ "suite": suite, "d": d, "passed": passed, "failed": failures.len(), "failures": failures }), ok))
}

fn rep(module: Option<&str>, word: Option<&str>, decompose: Option<&str>) -> Result<Value> {
    if let Some(path) = decompose {
        let table = json::parse_weight_rows(&read_json(path)?)?;
        let parts = decompose_weight_table(&table).map_err(|e| usage(format!("{e}")))?;
        return Ok(json!({ "decomposition": json::decomposition(&parts) }));
    }
    let spec = parse_module(module.expect("clap requires --module or --decompose"))?;
    let m = build(spec);
    let basis: Vec<Value> = m.basis.iter().map(|&(i, eps)| json!([i, eps])).collect();
    let mut gens = serde_json::Map::new();
    for g in Letter::ALL {
        gens.insert(g.symbol().to_string(), json::matrix(m.generator(g)));
    }
    let casimir = casimir_scalar(&m).map_err(|e| usage(format!("{e}")))?;
    let weights = weight_table(&m).map_err(|e| usage(format!("{e}")))?;
    let mut out = json!({
        "module": spec.to_string(),
        "dim": m.dim(),
        "basis": basis,
        "generators": gens,
        "casimir": json::coeff(&casimir),
        "weights": json::weight_rows(&weights),
    });
    if let Some(w) = word {
        out["word"] = json::matrix(&m.word_matrix(&parse_word(w)?));
    }
    Ok(out)
}

fn tensor_weight_table(d: usize) -> WeightTable {
    weight_multiplicities(d)
        .into_iter()
        .filter(|&(_, m)| m > 0)
        .map(|((a, eps), m)| (Weight { sign: Sign::Plus, a, eps }, m))
        .collect()
}

fn weights(module: Option<&str>, d: Option<usize>) -> Result<WeightTable> {
    match (module, d) {
        (Some(s), _) => weight_table(&build(parse_module(s)?)).map_err(|e| usage(format!("{e}"))),
        (None, Some(d)) => Ok(tensor_weight_table(d)),
        (None, None) => Err(usage("weights needs --module or --d")),
    }
}

fn sw_check(d: usize) -> (Value, bool) {
    let report = check_left_module(d);
    let weights: Vec<Value> = report
        .weights
        .iter()
        .map(|w| json!({ "sign": "+", "a": w.a, "eps": w.eps, "mult": w.computed, "closed_form": w.closed_form }))
        .collect();
    let out = json!({
        "d": d,
        "weights": weights,
        "decomposition": json::decomposition(&report.decomposition),
        "predicted": json::decomposition(&report.predicted),
        "total_dim": report.total_dim,
        "conjecture_match": report.conjecture_match,
        "status": report.status(),
        "mismatches": report.mismatches,
    });
    (out, report.conjecture_match)
}

fn oracle(d: u32, primes: &[u64], lhs: &str, rhs: &str) -> Result<(Value, String)> {
    if let Some(p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(usage(format!("{p} is not prime")));
    }
    let x = json::parse_element(&read_json(lhs)?)?;
    let y = json::parse_element(&read_json(rhs)?)?;
    if x.d() != d || y.d() != d {
        return Err(usage(format!("elements must lie in degree {d}")));
    }
    let mut product = SchurElement::zero(d);
    let mut log: Vec<CountRecord> = Vec::new();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let (z, records) = structure_constants(a, b, primes).map_err(|e| usage(format!("{e}")))?;
            product.add_scaled(&z, &(ca * cb));
            log.extend(records);
        }
    }
    let mut csv = String::from("label,p,count\n");
    for r in &log {
        let _ = writeln!(csv, "\"{}\",{},{}", r.label, r.p, r.count);
    }
    Ok((json::element(&product), csv))
}

fn count(n: u64, d: u64, tensor: bool) -> Result<Value> {
    if n == 0 {
        return Err(usage("n must be positive"));
    }
    if tensor {
        let c = u64::try_from(count_xi_tensor(n, d)).map_err(|_| usage("count does not fit in 64 bits"))?;
        return Ok(Value::from(c));
    }
    Ok(Value::from(enumerate_xi(n as usize, d).len() as u64))
}

fn emit(v: &Value) {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    let _ = io::stdout().write_all(s.as_bytes());
}

fn dispatch(cmd: Command) -> Result<()> {
    match cmd {
        Command::Mul { lhs, rhs, pbw } => emit(&mul(&lhs, &rhs, pbw)?),
        Command::Normalize { word, project } => emit(&normalize(&word, project)?),
        Command::Verify { suite, d, samples } => {
            let (v, ok) = run_verify(&suite, d, samples)?;
            emit(&v);
            if !ok {
                return Err(CliError::Failed);
            }
        }
        Command::Rep { module, word, decompose } => emit(&rep(module.as_deref(), word.as_deref(), decompose.as_deref())?),
        Command::Weights { module, d, format } => {
            let t = weights(module.as_deref(), d)?;
            match format {
                Format::Json => emit(&json::weight_rows(&t)),
                Format::Csv => print!("{}", json::weight_csv(&t)),
            }
        }
        Command::SwCheck { d } => {
            let (v, ok) = sw_check(d);
            emit(&v);
            if !ok {
                return Err(CliError::Failed);
            }
        }
        Command::Oracle { d, primes, lhs, rhs, log } => {
            let (v, csv) = oracle(d, &primes, &lhs, &rhs)?;
            match log {
                Some(path) => fs::write(&path, csv).map_err(|e| usage(format!("cannot write {path}: {e}")))?,
                None => eprint!("{csv}"),
            }
            emit(&v);
        }
        Command::Count { n, d, tensor } => emit(&count(n, d, tensor)?),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
