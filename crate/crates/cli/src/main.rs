//! `kleinscc`: simple closed curves on the punctured Klein bottle.
//!
//! Mapping class words are whitespace-separated tokens `tb`, `tb-`, `y`, `w1`.
//! The leftmost token is outermost, so `"y tb-"` means y ∘ t_b⁻¹ and `tb-`
//! acts first.

mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kleinscc::checks::{
    canonicalization_check, closure_check, generator_table_check, oracle_check, reduced_words_up_to,
    twist_induction_check,
};
use kleinscc::rep::parse_rational;
use kleinscc::{
    a5_image, canonicalize, classify, enumerate_classes, kernel_witness, rho, rho_at, verify_theorem41, McgWord,
    Params, Word,
};
use num_rational::BigRational;
use serde::Serialize;

use crate::output::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Parser)]
#[command(name = "kleinscc", version, about = "Simple closed curves on the punctured Klein bottle")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a word represents a simple closed curve.
    Classify { word: String },
    /// Apply a mapping class word (leftmost token applied last).
    Act { mcg: String, word: String },
    /// Find generators taking a curve word to a, b, a^2 or ab^-1a^-1b^-1.
    Canonicalize { word: String },
    /// Image of a word under the upper-triangular representation.
    Rep {
        word: String,
        #[arg(long, allow_hyphen_values = true, default_value = "2")]
        alpha: String,
        #[arg(long, allow_hyphen_values = true, default_value = "3")]
        beta: String,
        /// Include the Laurent polynomial entries; the identity test is then symbolic.
        #[arg(long)]
        symbolic: bool,
    },
    /// Classify every cyclic class up to a given length.
    Enumerate {
        #[arg(long)]
        max_len: usize,
    },
    /// A nontrivial word in the kernel of the representation.
    KernelWitness,
    /// Run the verification suites.
    Verify {
        #[arg(long)]
        max_n: u32,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        max_power: u32,
        #[arg(long, allow_hyphen_values = true, default_value = "2")]
        alpha: String,
        #[arg(long, allow_hyphen_values = true, default_value = "3")]
        beta: String,
    },
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl std::fmt::Display) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

fn parse_word(text: &str) -> Result<Word, Failure> {
    text.parse().map_err(|e| usage(format!("invalid word '{text}': {e}")))
}

fn parse_params(alpha: &str, beta: &str) -> Result<Params, Failure> {
    let alpha: BigRational = parse_rational(alpha).map_err(usage)?;
    let beta: BigRational = parse_rational(beta).map_err(usage)?;
    Params::new(alpha, beta).map_err(usage)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable record");
    s.push('\n');
    s
}

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => json(value),
        Format::Table => table(value),
    }
}

/// Runs a parsed command, returning stdout text and the exit code.
fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let format = cli.format;
    let out = match cli.command {
        Command::Classify { word } => {
            let w = parse_word(&word)?;
            let rec = ClassifyRecord::new(&word, &w, classify(&w));
            emit(format, &rec, ClassifyRecord::table)
        }
        Command::Act { mcg, word } => {
            let phi: McgWord = mcg.parse().map_err(|e| usage(format!("invalid mapping class word '{mcg}': {e}")))?;
            let w = parse_word(&word)?;
            let rec = ActRecord { input: w.to_string(), mcg: phi.tokens(), output: phi.apply(&w).to_string() };
            emit(format, &rec, |r| format!("{}\n", r.output))
        }
        Command::Canonicalize { word } => {
            let w = parse_word(&word)?;
            let r = canonicalize(&w);
            let rec = CanonicalizeRecord::new(&word, r.as_ref());
            emit(format, &rec, CanonicalizeRecord::table)
        }
        Command::Rep { word, alpha, beta, symbolic } => {
            let w = parse_word(&word)?;
            let p = parse_params(&alpha, &beta)?;
            let sym = symbolic.then(|| rho(&w));
            let numeric = rho_at(&w, &p);
            let rec = RepRecord::new(&w, sym.as_ref(), &numeric, &p);
            emit(format, &rec, |r| rep_table(&w, sym.as_ref(), r))
        }
        Command::Enumerate { max_len } => {
            let entries = enumerate_classes(max_len).map_err(usage)?;
            let records: Vec<EnumerateRecord> = entries.iter().map(EnumerateRecord::from).collect();
            emit(format, &records, |r| enumerate_table(r))
        }
        Command::KernelWitness => {
            let w = kernel_witness();
            let rec = KernelWitnessRecord {
                word: w.to_string(),
                a5_nontrivial: !a5_image(&w).is_identity(),
                rho_identity: rho(&w).is_identity(),
            };
            emit(format, &rec, |r| {
                format!("{:<14} {}\n{:<14} {}\n{:<14} {}\n", "word", r.word, "a5_nontrivial", r.a5_nontrivial, "rho_identity", r.rho_identity)
            })
        }
        Command::Verify { max_n, max_len, max_power, alpha, beta } => {
            let p = parse_params(&alpha, &beta)?;
            let rec = verify(max_n, max_len, max_power, &p)?;
            let code = if rec.passed { 0 } else { 1 };
            return Ok((emit(format, &rec, VerifyRecord::table), code));
        }
    };
    Ok((out, 0))
}

fn verify(max_n: u32, max_len: usize, max_power: u32, p: &Params) -> Result<VerifyRecord, Failure> {
    let generator_tables = generator_table_check();
    let twist_induction = twist_induction_check(max_n);
    let closure = closure_check(max_n);
    let canonicalization = canonicalization_check(max_n, &reduced_words_up_to(2));
    let oracle = oracle_check(max_len).map_err(usage)?;
    let report = verify_theorem41(max_n, max_power, p).map_err(usage)?;
    let w = kernel_witness();
    let kernel = KernelWitnessRecord {
        word: w.to_string(),
        a5_nontrivial: !a5_image(&w).is_identity(),
        rho_identity: rho(&w).is_identity(),
    };
    let passed = generator_tables.passed()
        && twist_induction.passed()
        && closure.passed()
        && canonicalization.passed()
        && oracle.disagreements.is_empty()
        && report.passed()
        && kernel.a5_nontrivial
        && kernel.rho_identity;
    Ok(VerifyRecord {
        generator_tables: generator_tables.into(),
        twist_induction: twist_induction.into(),
        closure: closure.into(),
        canonicalization: canonicalization.into(),
        oracle: oracle.into(),
        representation: RepresentationRecord::new(&report, p),
        kernel_witness: kernel,
        passed,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
