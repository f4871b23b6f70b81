use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use lcd_codes::bounds::{plotkin_average_bound, singleton_bound, stated_upper_bound};
use lcd_codes::constructions::{between, ConstructionSpec, Family, Mod9Case};
use lcd_codes::search::{
    build_table, lcd_max_exhaustive, lcd_max_random, LcdTableEntry, SearchConfig, TableConfig,
};
use lcd_codes::verify::{verify_paper, VerifyConfig};
use lcd_codes::{LinearCode, MatGF, Prime};

#[derive(Parser, Debug)]
#[command(
    name = "lcd",
    version,
    about = "LCD codes over GF(2), GF(3), GF(5) and GF(7)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum BoundFormula {
    Stated,
    Plotkin,
    Singleton,
}

#[derive(Args, Debug)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct Input {
    /// Matrix file ("p n k" header, then k rows of n digits); `-` reads stdin.
    input: String,
}

#[derive(Args, Debug)]
struct SearchFlags {
    /// Work budget in generator evaluations (forms x q^k).
    #[arg(long, default_value_t = 500_000_000)]
    budget: u128,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Random trials when exhaustive search is refused.
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    /// Seed for random sampling; drawn and recorded when absent.
    #[arg(long)]
    seed: Option<u64>,
    /// Restrict GF(3) columns to zero or leading digit 1.
    #[arg(long)]
    sign_reduction: bool,
    /// Record wall-clock time; off by default so reruns compare byte for byte.
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a code: LCD status, hull dimension, Gram matrix.
    Check {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Print a generator matrix of the dual code.
    Dual {
        #[command(flatten)]
        input: Input,
    },
    /// Print the minimum distance.
    Mindist {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Print the weight distribution and error capabilities.
    Weights {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Print a generator matrix of a named family.
    Construct {
        /// repetition, zero-rep, mod9-3, mod9-4 or between.
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        m: Option<usize>,
        /// Residue class (3 or 4) for the mod9 families.
        #[arg(long = "case")]
        case: Option<u32>,
        /// Operand matrix files for `between`.
        operands: Vec<String>,
    },
    /// Combine two ternary codes as {(c1 + c2, c1 - c2)}.
    Between { first: String, second: String },
    /// Evaluate an upper bound on the distance of an [n, k]_q code.
    Bound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, value_enum, default_value_t = BoundFormula::Stated)]
        formula: BoundFormula,
    },
    /// Largest distance of an [n, k]_q LCD code.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        flags: SearchFlags,
        #[command(flatten)]
        out: Output,
    },
    /// Table of largest LCD distances over ranges of n and k.
    Table {
        /// Range of lengths, e.g. 2..10 (inclusive).
        #[arg(long)]
        n: CellRange,
        /// Range of dimensions, e.g. 1..3 (inclusive).
        #[arg(long)]
        k: CellRange,
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        flags: SearchFlags,
        #[command(flatten)]
        out: Output,
    },
    /// Check the claim catalog and report each verdict with evidence.
    VerifyPaper {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        budget: Option<u128>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Exit with status 2 when any claim is refuted.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        out: Output,
    },
}

/// Inclusive range written `a..b`, `a..=b` or a single value.
#[derive(Clone, Debug)]
struct CellRange(RangeInclusive<usize>);

impl FromStr for CellRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad bound `{t}`: {e}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(CellRange(lo..=hi))
    }
}

fn read_source(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_code(path: &str) -> anyhow::Result<LinearCode> {
    let text = read_source(path)?;
    let name = if path == "-" { "<stdin>" } else { path };
    LinearCode::parse(&text).with_context(|| format!("in {name}"))
}

fn prime(q: u32) -> anyhow::Result<Prime> {
    Ok(Prime::new(q)?)
}

fn fresh_seed() -> u64 {
    rand::random()
}

fn rows_text(m: &MatGF) -> Vec<String> {
    m.row_iter()
        .map(|r| r.iter().map(|x| char::from(b'0' + x)).collect())
        .collect()
}

fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Check { input, out: fmt } => {
            let code = read_code(&input.input)?;
            let (lcd, hull) = (code.is_lcd(), code.hull_dim());
            let gram = code.gram();
            match fmt.format {
                Format::Text => {
                    writeln!(
                        out,
                        "[n, k]_q: [{}, {}]_{}",
                        code.n(),
                        code.k(),
                        code.prime()
                    )?;
                    writeln!(out, "LCD: {lcd}")?;
                    writeln!(out, "hull_dim {hull}")?;
                    writeln!(out, "Gram rank {}", gram.rank())?;
                    write!(out, "Gram matrix:\n{gram}")?;
                }
                Format::Structured => writeln!(
                    out,
                    "{}",
                    json!({
                        "version": 1, "n": code.n(), "k": code.k(), "q": code.prime().get(),
                        "is_lcd": lcd, "hull_dim": hull, "gram_rows": rows_text(&gram),
                    })
                )?,
            }
        }
        Command::Dual { input } => {
            let code = read_code(&input.input)?;
            write!(out, "{}", code.dual()?)?;
        }
        Command::Mindist { input, out: fmt } => {
            let code = read_code(&input.input)?;
            let d = code.min_distance()?;
            match fmt.format {
                Format::Text => writeln!(out, "{d}")?,
                Format::Structured => writeln!(
                    out,
                    "{}",
                    json!({"version": 1, "n": code.n(), "k": code.k(), "q": code.prime().get(), "d": d})
                )?,
            }
        }
        Command::Weights { input, out: fmt } => {
            let code = read_code(&input.input)?;
            let m = code.metrics()?;
            match fmt.format {
                Format::Text => {
                    writeln!(out, "d {}", m.d)?;
                    writeln!(out, "corrects {} errors, detects {}", m.t, m.detect)?;
                    for (w, a) in m.weight_distribution.iter().enumerate() {
                        if *a > 0 {
                            writeln!(out, "A_{w} = {a}")?;
                        }
                    }
                }
                Format::Structured => {
                    let dist: Vec<String> = m
                        .weight_distribution
                        .iter()
                        .map(|a| a.to_string())
                        .collect();
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "version": 1, "n": code.n(), "k": code.k(), "q": code.prime().get(),
                            "d": m.d, "t": m.t, "detect": m.detect, "weight_distribution": dist,
                        })
                    )?
                }
            }
        }
        Command::Construct {
            family,
            n,
            q,
            m,
            case,
            operands,
        } => {
            let need_n = || n.ok_or_else(|| anyhow!("{family} requires --n"));
            let p = || prime(q.unwrap_or(3));
            let spec = match family {
                Family::Repetition => ConstructionSpec::Repetition {
                    n: need_n()?,
                    p: p()?,
                },
                Family::ZeroRepetition => ConstructionSpec::ZeroRepetition {
                    n: need_n()?,
                    p: p()?,
                },
                Family::Mod9Case3 | Family::Mod9Case4 => {
                    let implied = if family == Family::Mod9Case3 { 3 } else { 4 };
                    if let Some(c) = case {
                        if c != implied {
                            bail!("--case {c} contradicts family {family}");
                        }
                    }
                    if q.is_some_and(|q| q != 3) {
                        bail!("{family} is defined over GF(3) only");
                    }
                    let m = m.ok_or_else(|| anyhow!("{family} requires --m"))?;
                    ConstructionSpec::Mod9 {
                        case: Mod9Case::try_from(implied)?,
                        m,
                    }
                }
                Family::Between => {
                    let [a, b] = operands.as_slice() else {
                        bail!("between requires two operand matrix files");
                    };
                    ConstructionSpec::Between(Box::new(read_code(a)?), Box::new(read_code(b)?))
                }
            };
            if family != Family::Between && !operands.is_empty() {
                bail!("{family} takes no operand files");
            }
            let built = spec.build()?;
            for w in &built.warnings {
                eprintln!("warning: {w}");
            }
            write!(out, "{}", built.code)?;
        }
        Command::Between { first, second } => {
            let c = between(&read_code(&first)?, &read_code(&second)?)?;
            write!(out, "{c}")?;
        }
        Command::Bound { n, k, q, formula } => {
            let v = match formula {
                BoundFormula::Stated => stated_upper_bound(n, k, q)?,
                BoundFormula::Plotkin => plotkin_average_bound(n, k, q)?,
                BoundFormula::Singleton => singleton_bound(n, k as u64)?,
            };
            writeln!(out, "{v}")?;
        }
        Command::Search {
            n,
            k,
            q,
            flags,
            out: fmt,
        } => {
            let p = prime(q)?;
            let cfg = search_config(&flags);
            let entry = match lcd_max_exhaustive(n, k, p, &cfg) {
                Ok(e) => e,
                Err(lcd_codes::Error::BudgetExceeded { required, cap, .. }) => {
                    let seed = flags.seed.unwrap_or_else(fresh_seed);
                    eprintln!(
                        "cell (n={n}, k={k}, q={q}) needs {required} evaluations, budget {cap}; sampling {} codes with seed {seed}",
                        flags.trials
                    );
                    lcd_max_random(n, k, p, flags.trials, seed)?
                }
                Err(e) => return Err(e.into()),
            };
            write_entry(out, &entry, fmt.format, flags.timing)?;
        }
        Command::Table {
            n,
            k,
            q,
            flags,
            out: fmt,
        } => {
            let p = prime(q)?;
            let seed = flags.seed.unwrap_or_else(fresh_seed);
            let cfg = TableConfig {
                search: search_config(&flags),
                random_trials: flags.trials,
                seed,
            };
            let table = build_table(n.0, k.0, p, &cfg)?;
            if fmt.format == Format::Text {
                writeln!(out, "# q = {q}, seed {seed}")?;
            }
            for e in &table {
                write_entry(out, e, fmt.format, flags.timing)?;
            }
        }
        Command::VerifyPaper {
            seed,
            budget,
            jobs,
            strict,
            out: fmt,
        } => {
            let mut cfg = VerifyConfig::default();
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(b) = budget {
                cfg.search.budget = b;
            }
            cfg.search.jobs = jobs.max(1);
            let report = verify_paper(&cfg)?;
            match fmt.format {
                Format::Text => write!(out, "{}", report.render_text())?,
                Format::Structured => write!(out, "{}", report.render_records())?,
            }
            if strict && report.has_refutations() {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn search_config(flags: &SearchFlags) -> SearchConfig {
    SearchConfig {
        budget: flags.budget,
        jobs: flags.jobs.max(1),
        sign_reduction: flags.sign_reduction,
        ..SearchConfig::default()
    }
}

fn write_entry(
    out: &mut dyn Write,
    e: &LcdTableEntry,
    format: Format,
    timing: bool,
) -> io::Result<()> {
    match format {
        Format::Structured => writeln!(out, "{}", e.to_record_line(timing)),
        Format::Text => {
            let witness = e
                .witness
                .as_ref()
                .map(|w| rows_text(w).join(" "))
                .unwrap_or_else(|| "-".into());
            write!(
                out,
                "n={:<3} k={:<3} q={} d_lcd={:<3} method={:<10} explored={:<10} witness={witness}",
                e.n, e.k, e.q, e.d_lcd, e.method, e.explored_count
            )?;
            if let Some(s) = e.seed {
                write!(out, " seed={s}")?;
            }
            if timing {
                write!(out, " elapsed_ms={}", e.elapsed_ms)?;
            }
            if let Some(n) = &e.note {
                write!(out, " note=\"{n}\"")?;
            }
            writeln!(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
