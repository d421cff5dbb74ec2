//! `braidkex`: braid-group key exchange and cryptanalysis from the
//! command line.
//!
//! Every subcommand is deterministic under fixed flags; all randomness
//! flows from `--seed`. Exit codes are a stable contract: 0 on success,
//! 1 for domain errors (validation, degenerate configurations, failed
//! verdicts), 2 for I/O and format errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use aag_protocol::{exchange_with_keys, supports_interact, ProtocolError, TranscriptFile};
use braid_core::{normalize, BraidError, BraidWord};
use cryptanalysis::{
    attack_benchmark, attacker_key_recovery_digest, length_based_attack, sss_attack,
    AttackError, AttackInstance, AttackMethod, BenchConfig,
};
use mihailova::{load_key, sample_key, save_key, MihailovaError, RelatorSet};

#[derive(Parser)]
#[command(name = "braidkex", version, about = "Braid-group key exchange toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the left-weighted normal form of a braid word
    Normalize {
        /// Strand count
        #[arg(long)]
        n: usize,
        /// Word text: whitespace-separated signed generator indices, e.g. "1 -2 3"
        word: String,
    },
    /// Sample a private key and write it as a key file
    Keygen {
        #[arg(long, default_value_t = mihailova::defaults::N)]
        n: usize,
        /// Subgroup index (1 <= index <= n-5)
        #[arg(long, default_value_t = mihailova::defaults::ALICE_INDEX)]
        index: usize,
        /// Key length in subgroup generators
        #[arg(long = "len", default_value_t = mihailova::defaults::KEY_LENGTH)]
        length: usize,
        #[arg(long, default_value_t = mihailova::defaults::SEED)]
        seed: u64,
        /// Relator file; omit for diagonal-only mode
        #[arg(long)]
        relators: Option<PathBuf>,
        /// Output key file path
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the key exchange between two key files and write a transcript
    Exchange {
        #[arg(long = "key-a")]
        key_a: PathBuf,
        #[arg(long = "key-b")]
        key_b: PathBuf,
        /// Relator file the keys were generated with
        #[arg(long)]
        relators: Option<PathBuf>,
        /// Transcript output path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Attack a recorded transcript
    Attack {
        /// Attack method: length or sss
        #[arg(long)]
        method: String,
        #[arg(long)]
        transcript: PathBuf,
        /// Iteration budget for the length-based descent
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        /// Element cap for super-summit-set enumeration
        #[arg(long, default_value_t = braid_core::DEFAULT_SSS_CAP)]
        cap: usize,
        /// Accepted for interface stability; the implemented attacks are
        /// deterministic and draw no randomness
        #[arg(long, default_value_t = mihailova::defaults::SEED)]
        seed: u64,
    },
    /// Run the attack benchmark and emit CSV
    Bench {
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Planted conjugator lengths, comma separated
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        lens: Vec<usize>,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Attack methods, comma separated
        #[arg(long, value_delimiter = ',', default_value = "length")]
        methods: Vec<String>,
        #[arg(long, default_value_t = mihailova::defaults::SEED)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = braid_core::DEFAULT_SSS_CAP)]
        cap: usize,
        /// CSV output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Domain errors exit 1, I/O and format errors exit 2.
enum CliError {
    Domain(String),
    Format(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Format(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Domain(m) | CliError::Format(m) => m,
        }
    }
}

impl From<BraidError> for CliError {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::WordParse(_) => CliError::Format(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<MihailovaError> for CliError {
    fn from(e: MihailovaError) -> Self {
        match e {
            MihailovaError::Io(_)
            | MihailovaError::Malformed(_)
            | MihailovaError::FreeWordParse(_)
            | MihailovaError::UnsupportedVersion(_)
            | MihailovaError::CheckMismatch { .. } => CliError::Format(e.to_string()),
            MihailovaError::Braid(b) => b.into(),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<ProtocolError> for CliError {
    fn from(e: ProtocolError) -> Self {
        match e {
            ProtocolError::Io(_)
            | ProtocolError::Malformed(_)
            | ProtocolError::UnsupportedVersion(_)
            | ProtocolError::WrongConjugateCount { .. } => CliError::Format(e.to_string()),
            ProtocolError::Key(k) => k.into(),
            ProtocolError::Braid(b) => b.into(),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<AttackError> for CliError {
    fn from(e: AttackError) -> Self {
        match e {
            AttackError::UnknownMethod(_) => CliError::Domain(e.to_string()),
            AttackError::Braid(b) => b.into(),
            AttackError::Protocol(p) => p.into(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Format(format!("io error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Normalize { n, word } => cmd_normalize(n, &word),
        Command::Keygen {
            n,
            index,
            length,
            seed,
            relators,
            out,
        } => cmd_keygen(n, index, length, seed, relators.as_deref(), &out),
        Command::Exchange {
            key_a,
            key_b,
            relators,
            out,
        } => cmd_exchange(&key_a, &key_b, relators.as_deref(), out.as_deref()),
        Command::Attack {
            method,
            transcript,
            budget,
            cap,
            seed: _,
        } => cmd_attack(&method, &transcript, budget, cap),
        Command::Bench {
            n,
            lens,
            trials,
            methods,
            seed,
            budget,
            cap,
            out,
        } => cmd_bench(n, lens, trials, &methods, seed, budget, cap, out.as_deref()),
    }
}

fn cmd_normalize(n: usize, word: &str) -> Result<(), CliError> {
    let w = BraidWord::parse(n, word)?;
    let nf = normalize(&w);
    println!("{}", nf.render());
    println!("(inf, len, sup) = ({}, {}, {})", nf.inf(), nf.len(), nf.sup());
    Ok(())
}

fn cmd_keygen(
    n: usize,
    index: usize,
    length: usize,
    seed: u64,
    relators: Option<&Path>,
    out: &Path,
) -> Result<(), CliError> {
    let relators = RelatorSet::load(relators)?;
    let key = sample_key(n, index, length, seed, &relators)?;
    save_key(&key, seed, out)?;
    println!("digest={}", key.check_digest());
    Ok(())
}

fn cmd_exchange(
    key_a: &Path,
    key_b: &Path,
    relators: Option<&Path>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let relators = RelatorSet::load(relators)?;
    let x = load_key(key_a, &relators)?;
    let y = load_key(key_b, &relators)?;
    if x.n != y.n {
        return Err(CliError::Domain(format!(
            "strand count mismatch: {} vs {}",
            x.n, y.n
        )));
    }
    if !supports_interact(x.i, y.i) {
        return Err(ProtocolError::CommutingConfiguration { i: x.i, j: y.i }.into());
    }
    let transcript = exchange_with_keys(&x, &y)?;
    if let Some(path) = out {
        transcript.write(path)?;
    }
    println!("digest={}", transcript.key_a.digest_hex());
    println!("match={}", transcript.matched());
    Ok(())
}

fn cmd_attack(method: &str, transcript: &Path, budget: u64, cap: usize) -> Result<(), CliError> {
    let method = AttackMethod::from_str(method)?;
    let file = TranscriptFile::read(transcript)?;
    let inst = AttackInstance::from_transcript(&file)?;
    let report = match method {
        AttackMethod::LengthBased => length_based_attack(&inst, budget),
        AttackMethod::SuperSummit => sss_attack(&inst, cap),
    };

    let key_match = match &report.candidate {
        Some(candidate) if report.success => {
            attacker_key_recovery_digest(candidate, &file.msg_a, &file.msg_b, &file.digest_hex)?
                .key_match
        }
        _ => None,
    };

    println!("method={}", report.method);
    println!("success={}", report.success);
    println!("iterations={}", report.iterations);
    if let Some(c) = &report.candidate {
        println!("candidate={:?}", c.render());
    }
    if let Some(m) = key_match {
        println!("key_match={m}");
    }
    if !report.detail.is_empty() {
        println!("detail={}", report.detail);
    }
    println!(
        "{{\"method\":\"{}\",\"success\":{},\"iterations\":{},\"candidate\":{},\"key_match\":{}}}",
        report.method,
        report.success,
        report.iterations,
        report
            .candidate
            .as_ref()
            .map_or("null".to_string(), |c| format!("{:?}", c.render())),
        key_match.map_or("null".to_string(), |m| m.to_string()),
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_bench(
    n: usize,
    lens: Vec<usize>,
    trials: usize,
    methods: &[String],
    seed: u64,
    budget: u64,
    cap: usize,
    out: Option<&Path>,
) -> Result<(), CliError> {
    if trials == 0 {
        return Err(CliError::Domain("trials must be at least 1".to_string()));
    }
    let methods: Vec<AttackMethod> = methods
        .iter()
        .map(|m| AttackMethod::from_str(m))
        .collect::<Result<_, _>>()?;
    let cfg = BenchConfig {
        n,
        key_lens: lens,
        trials,
        methods,
        seed,
        budget,
        sss_cap: cap,
    };
    let report = attack_benchmark(&cfg)?;
    let csv = report.to_csv();
    match out {
        Some(path) => std::fs::write(path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}
