mod query;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::Value;

use query::{execute, CliError, Query, EXIT_FAILURE, EXIT_PARSE};

/// Exact multisegment calculus from the command line.
///
/// Multisegments are written `[b,e]+[b,e]+...`, with `0` for the empty one
/// and `line(label,p/q):` headers for other cuspidal lines, parts separated
/// by `;`. Inputs and outputs are Zelevinsky parameters unless stated.
#[derive(Debug, Parser)]
#[command(name = "multiseg", version)]
struct Cli {
    /// Emit one JSON object per query.
    #[arg(long, global = true)]
    json: bool,
    /// Include the matching or recursion trace behind each answer.
    #[arg(long, global = true)]
    explain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The Moeglin-Waldspurger involution m -> m^t.
    Involution { m: String },
    /// Socle of Z(seg) x Z(with), Z(ladder) x Z(with), or rho^power x Z(with).
    Socle(SocleArgs),
    /// Cosocle of Z(ladder) x Z(with).
    Cosocle {
        #[arg(long, allow_hyphen_values = true)]
        ladder: String,
        #[arg(long, allow_hyphen_values = true)]
        with: String,
    },
    /// Irreducibility of Z(m) x Z(n).
    Irreducible(IrreducibleArgs),
    /// LC(seg, with), or the pair condition LC(m, with).
    Lc(LcArgs),
    /// RC(seg, with).
    Rc {
        #[arg(long, allow_hyphen_values = true)]
        seg: String,
        #[arg(long, allow_hyphen_values = true)]
        with: String,
    },
    /// The sigma with Z(m) = soc(Z(seg) x sigma), or `none`.
    Divide {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        seg: String,
    },
    /// The largest power of rho that Z(m) embeds into, and the remainder.
    Extract {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        rho: String,
    },
    /// Ladder, Speh, saturated and totally-unlinked flags.
    Classify {
        #[arg(allow_hyphen_values = true)]
        m: String,
    },
    /// The Speh multisegment m_{n,d}; symmetric unless --center is given.
    SpehBuild {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// End of the top segment.
        #[arg(long, allow_negative_numbers = true)]
        center: Option<i64>,
        #[arg(long)]
        label: Option<String>,
        /// A real twist p/q.
        #[arg(long, allow_hyphen_values = true)]
        twist: Option<String>,
    },
    /// Langlands parameter and irreducibility of a product of B elements,
    /// each written N,D[@CENTER][~ALPHA].
    TadicProduct {
        #[arg(allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Run a differential suite, or `all`.
    Sweep {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_coord: Option<i64>,
        #[arg(long)]
        max_segs: Option<usize>,
        #[arg(long)]
        random: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Answer JSON queries from stdin, one per line.
    Batch,
}

#[derive(Debug, Args)]
struct SocleArgs {
    #[arg(long, allow_hyphen_values = true)]
    seg: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    ladder: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<String>,
    #[arg(long, requires = "rho")]
    power: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    with: String,
}

#[derive(Debug, Args)]
struct IrreducibleArgs {
    #[arg(allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "m")]
    seg: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "n")]
    with: Option<String>,
}

#[derive(Debug, Args)]
struct LcArgs {
    #[arg(long, allow_hyphen_values = true)]
    seg: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    with: String,
    /// base, prime or double-prime.
    #[arg(long)]
    variant: Option<String>,
}

fn to_query(command: Command) -> Result<Query, CliError> {
    Ok(match command {
        Command::Involution { m } => Query::Involution { m },
        Command::Socle(a) => Query::Socle {
            seg: a.seg,
            ladder: a.ladder,
            rho: a.rho,
            power: a.power,
            with: a.with,
        },
        Command::Cosocle { ladder, with } => Query::Cosocle { ladder, with },
        Command::Irreducible(a) => {
            let missing = || CliError::new(EXIT_PARSE, "irreducible: give M N or --seg and --with");
            Query::Irreducible {
                m: a.seg.or(a.m).ok_or_else(missing)?,
                n: a.with.or(a.n).ok_or_else(missing)?,
            }
        }
        Command::Lc(a) => Query::Lc {
            seg: a.seg,
            m: a.m,
            with: a.with,
            variant: a.variant,
        },
        Command::Rc { seg, with } => Query::Rc { seg, with },
        Command::Divide { m, seg } => Query::Divide { m, seg },
        Command::Extract { m, rho } => Query::Extract { m, rho },
        Command::Classify { m } => Query::Classify { m },
        Command::SpehBuild {
            n,
            d,
            center,
            label,
            twist,
        } => Query::SpehBuild {
            n,
            d,
            center,
            label,
            twist,
        },
        Command::TadicProduct { elements } => Query::TadicProduct { elements },
        Command::Sweep {
            suite,
            max_coord,
            max_segs,
            random,
            seed,
        } => Query::Sweep {
            suite,
            max_coord,
            max_segs,
            random,
            seed,
        },
        Command::Batch => unreachable!("batch is handled before dispatch"),
    })
}

#[derive(Debug, Deserialize)]
struct BatchLine {
    #[serde(flatten)]
    query: Query,
    #[serde(default)]
    explain: bool,
}

fn answer_line(line: &str, explain: bool) -> Value {
    let op = serde_json::from_str::<Value>(line)
        .ok()
        .and_then(|v| v.get("op").and_then(Value::as_str).map(String::from));
    match serde_json::from_str::<BatchLine>(line) {
        Ok(b) => match execute(&b.query) {
            Ok(r) => r.to_json(explain || b.explain),
            Err(e) => e.to_json(Some(b.query.op())),
        },
        Err(e) => CliError::new(EXIT_PARSE, format!("query `{line}`: {e}")).to_json(op.as_deref()),
    }
}

fn batch(explain: bool) -> ExitCode {
    let lines: Vec<String> = match io::stdin().lock().lines().collect() {
        Ok(lines) => lines,
        Err(e) => {
            eprintln!("error: reading stdin: {e}");
            return ExitCode::from(EXIT_FAILURE as u8);
        }
    };
    let answers: Vec<Value> = lines
        .par_iter()
        .filter(|l| !l.trim().is_empty())
        .map(|l| answer_line(l, explain))
        .collect();
    let mut out = io::stdout().lock();
    for a in answers {
        if writeln!(out, "{a}").is_err() {
            return ExitCode::from(EXIT_FAILURE as u8);
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if matches!(cli.command, Command::Batch) {
        return batch(cli.explain);
    }
    let outcome = to_query(cli.command).and_then(|q| execute(&q).map(|r| (q, r)));
    match outcome {
        Ok((_, r)) => {
            if cli.json {
                println!("{}", r.to_json(cli.explain));
            } else {
                println!("{}", r.to_text(cli.explain));
            }
            ExitCode::from(r.status as u8)
        }
        Err(e) => {
            if cli.json {
                println!("{}", e.to_json(None));
            } else {
                eprintln!("error: {}", e.message);
            }
            ExitCode::from(e.code as u8)
        }
    }
}
