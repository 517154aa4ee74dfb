mod literal;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::Value;

use syssig_core::interchange::{ser_counts, Normalization, SignatureDoc, SystemDoc, VerdictDoc};
use syssig_core::realizability::{
    candidate_from_counts, check_candidate, enumerate_achievable_with_witnesses,
    fvector_from_candidate, RealizabilityVerdict,
};
use syssig_core::signature::{signature, CountVector, Method};
use syssig_core::system::System;
use syssig_core::Error;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;

/// Signatures of coherent systems: compute them, and decide which vectors are signatures.
#[derive(Parser)]
#[command(name = "syssig", version)]
struct Cli {
    /// Print human-readable summaries to standard error.
    #[arg(long, short, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct VectorArgs {
    /// Comma-separated entries: integers, p/q fractions or terminating decimals.
    vector: String,

    /// Read the vector as ordering counts N_1..N_n summing to n! instead of probabilities.
    #[arg(long)]
    counts: bool,

    /// Expected number of components; checked against the vector length.
    #[arg(long, requires = "counts")]
    n: Option<usize>,
}

#[derive(Args)]
struct SystemArgs {
    /// System JSON file, or "-" for standard input.
    file: PathBuf,

    /// Reject families that are not antichains instead of minimizing them.
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Count,
    Ie,
    Perm,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Count => Method::Counting,
            MethodArg::Ie => Method::InclusionExclusion,
            MethodArg::Perm => Method::Permutations,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a vector is the signature of some coherent system.
    Check(VectorArgs),
    /// Print a system realizing the vector.
    Synthesize(VectorArgs),
    /// Compute the signature of a system.
    Signature {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value = "count")]
        method: MethodArg,
    },
    /// Compute the dual system.
    Dual(SystemArgs),
    /// Test whether a system (or the witness of a verdict) has the given signature.
    Verify {
        /// System or verdict JSON file, or "-" for standard input.
        file: PathBuf,
        #[command(flatten)]
        vector: VectorArgs,
    },
    /// List every achievable signature on n components with a witness.
    Enumerate { n: usize },
}

enum Failure {
    Usage(String),
    Capacity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_capacity() {
            Failure::Capacity(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<literal::LiteralError> for Failure {
    fn from(e: literal::LiteralError) -> Self {
        Failure::Usage(e.0)
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let verbose = cli.verbose;
    let result = match cli.command {
        Command::Check(v) => cmd_check(&v, verbose),
        Command::Synthesize(v) => cmd_synthesize(&v, verbose),
        Command::Signature { system, method } => cmd_signature(&system, method.into(), verbose),
        Command::Dual(s) => cmd_dual(&s, verbose),
        Command::Verify { file, vector } => cmd_verify(&file, &vector, verbose),
        Command::Enumerate { n } => cmd_enumerate(n, verbose),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_NEGATIVE),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CAPACITY)
        }
    }
}

fn emit<T: Serialize>(doc: &T) -> Result<(), Failure> {
    let text = serde_json::to_string(doc).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            Err(Failure::Usage(format!("writing standard output: {e}")))
        }
        _ => Ok(()),
    }
}

/// The candidate as probabilities, whatever form it was given in.
fn read_candidate(v: &VectorArgs) -> Result<Vec<BigRational>, Failure> {
    if !v.counts {
        return Ok(literal::parse_rationals(&v.vector)?);
    }
    let counts = literal::parse_counts(&v.vector)?;
    if let Some(n) = v.n {
        if n != counts.len() {
            return Err(Failure::Usage(format!(
                "--n {n} but the vector has {} entries",
                counts.len()
            )));
        }
    }
    Ok(candidate_from_counts(&CountVector::new(counts)?))
}

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_system(args: &SystemArgs, verbose: bool) -> Result<System, Failure> {
    let text = read_text(&args.file)?;
    let doc: SystemDoc = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", args.file.display())))?;
    system_from_doc(&doc, args.strict, verbose)
}

fn system_from_doc(doc: &SystemDoc, strict: bool, verbose: bool) -> Result<System, Failure> {
    let (system, how) = doc.to_system(strict)?;
    if how == Normalization::Minimized {
        eprintln!("warning: family was not an antichain; using its minimal sets");
    }
    if verbose {
        eprintln!("system on {} components: {}", system.n(), system);
    }
    Ok(system)
}

fn cmd_check(v: &VectorArgs, verbose: bool) -> Outcome {
    let candidate = read_candidate(v)?;
    let verdict = check_candidate(&candidate)?;
    if verbose {
        report_verdict(&candidate, &verdict);
    }
    emit(&VerdictDoc::from(&verdict))?;
    Ok(verdict.is_realizable())
}

fn cmd_synthesize(v: &VectorArgs, verbose: bool) -> Outcome {
    let candidate = read_candidate(v)?;
    let verdict = check_candidate(&candidate)?;
    if verbose {
        report_verdict(&candidate, &verdict);
    }
    match &verdict {
        RealizabilityVerdict::Realizable { witness } => {
            emit(&SystemDoc::from_family(witness))?;
            Ok(true)
        }
        RealizabilityVerdict::NotRealizable(_) => {
            emit(&VerdictDoc::from(&verdict))?;
            Ok(false)
        }
    }
}

fn report_verdict(candidate: &[BigRational], verdict: &RealizabilityVerdict) {
    if let Ok(f) = fvector_from_candidate(candidate) {
        eprintln!("f-vector: {f}");
    }
    match verdict {
        RealizabilityVerdict::Realizable { witness } => eprintln!("realizable by {witness}"),
        RealizabilityVerdict::NotRealizable(r) => eprintln!("not realizable: {r}"),
    }
}

fn cmd_signature(args: &SystemArgs, method: Method, verbose: bool) -> Outcome {
    let system = load_system(args, verbose)?;
    let counts = signature(&system, method)?;
    if verbose {
        eprintln!("counts {counts}, signature {}", counts.to_signature());
    }
    emit(&SignatureDoc::from_counts(&counts))?;
    Ok(true)
}

fn cmd_dual(args: &SystemArgs, verbose: bool) -> Outcome {
    let system = load_system(args, verbose)?;
    let dual = system.dual()?;
    if verbose {
        eprintln!("dual: {dual}");
    }
    emit(&SystemDoc::from_system(&dual))?;
    Ok(true)
}

/// Accepts a system document or a verdict document carrying a witness.
fn system_doc_from_value(value: Value) -> Result<SystemDoc, Failure> {
    let parse = |v: Value| {
        serde_json::from_value::<SystemDoc>(v).map_err(|e| Failure::Usage(e.to_string()))
    };
    if value.get("min_cut_sets").is_some() {
        return parse(value);
    }
    if value.get("realizable").is_some() {
        let verdict: VerdictDoc =
            serde_json::from_value(value).map_err(|e| Failure::Usage(e.to_string()))?;
        return verdict
            .witness
            .ok_or_else(|| Failure::Usage("verdict carries no witness".into()));
    }
    Err(Failure::Usage(
        "expected a system or verdict document".into(),
    ))
}

#[derive(Serialize)]
struct VerifyReport {
    matches: bool,
    signature: SignatureDoc,
}

fn cmd_verify(file: &PathBuf, v: &VectorArgs, verbose: bool) -> Outcome {
    let text = read_text(file)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
    let doc = system_doc_from_value(value)?;
    let system = system_from_doc(&doc, false, verbose)?;
    let candidate = read_candidate(v)?;
    let counts = signature(&system, Method::Counting)?;
    let actual = counts.to_signature();
    let matches = actual.entries() == candidate.as_slice();
    if verbose {
        eprintln!(
            "system signature {actual}: {}",
            if matches { "matches" } else { "differs" }
        );
    }
    emit(&VerifyReport {
        matches,
        signature: SignatureDoc::from_counts(&counts),
    })?;
    Ok(matches)
}

#[derive(Serialize)]
struct EnumerationRecord {
    #[serde(serialize_with = "ser_counts")]
    counts: Vec<BigUint>,
    signature: Vec<String>,
    witness: SystemDoc,
}

fn cmd_enumerate(n: usize, verbose: bool) -> Outcome {
    let table = enumerate_achievable_with_witnesses(n)?;
    if verbose {
        eprintln!("{} achievable signatures on {n} components", table.len());
    }
    let records: Vec<EnumerationRecord> = table
        .iter()
        .map(|(counts, witness)| {
            let sig = SignatureDoc::from_counts(counts);
            EnumerationRecord {
                counts: sig.counts,
                signature: sig.signature,
                witness: SystemDoc::from_family(witness),
            }
        })
        .collect();
    emit(&records)?;
    Ok(true)
}
