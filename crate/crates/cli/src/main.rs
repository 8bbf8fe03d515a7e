mod cache;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use bihook::arith::Characteristic;
use bihook::crystal::{braces, f_ab, mullineux};
use bihook::fock::{Convention, DecompositionMatrix};
use bihook::schur::{self, TwoColumn};
use bihook::structure::{predict, Query};
use bihook::tableaux::{graded_dimension, word_graded_dimension};
use bihook::verify::{self, Bounds, SUITES};
use bihook::{Bipartition, Partition, QuantumCharacteristic};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "bihook", version, about = "Structure of bihook Specht modules in level two")]
struct Cli {
    /// Output format; not every command supports every format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for cached canonical-basis matrices.
    #[arg(long, global = true, env = "BIHOOK_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Clone, Copy)]
struct QueryArgs {
    #[arg(long)]
    e: u32,
    #[arg(long, default_value_t = 0)]
    p: u64,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    j: u32,
    #[arg(long, default_value_t = 0)]
    a: u32,
    #[arg(long, default_value_t = 0)]
    b: u32,
    #[arg(long)]
    transpose: bool,
}

impl QueryArgs {
    fn query(self) -> Query {
        Query { e: self.e, p: self.p, k: self.k, j: self.j, a: self.a, b: self.b, transpose: self.transpose }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rows {
    Bihooks,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Predicted module structure of a bihook Specht module.
    Structure(QueryArgs),
    /// Decomposability verdict only.
    Decomposable(QueryArgs),
    /// Canonical basis (graded decomposition numbers in characteristic 0).
    Llt {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Rows::All)]
        rows: Rows,
        #[arg(long, default_value_t = Convention::Codegree)]
        convention: Convention,
    },
    /// Graded dimension, optionally restricted to one residue word.
    Qdim {
        #[arg(long)]
        shape: Bipartition,
        #[arg(long)]
        e: u32,
        #[arg(long, value_delimiter = ',')]
        word: Option<Vec<u32>>,
    },
    /// Mullineux image of a regular bipartition.
    Mullineux {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        shape: Bipartition,
    },
    /// The induction map F_{a,b}, or -F_{a,b} with --negate.
    Induce {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        negate: bool,
        #[arg(long)]
        shape: Bipartition,
    },
    /// The braces map on labels.
    Braces {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        shape: Bipartition,
    },
    /// [Δ(2^m,1^(n-2m)) : L(2^j,1^(n-2j))].
    Decompnum {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        p: u64,
    },
    /// Young modules in the permutation module M^(n-j,j).
    Henke {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        p: u64,
    },
    /// Number of indecomposable summands of S((ke),(je)).
    Summands {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        p: u64,
    },
    /// Composition factors of the two-column tensor product.
    Factors {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        p: u64,
    },
    /// Run cross-check suites; exits nonzero on any failure.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long, default_value_t = 4)]
        max_kj: u32,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        e: Vec<u32>,
        #[arg(long, value_delimiter = ',', default_value = "0,2,3,5,7")]
        primes: Vec<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn unsupported(cmd: &str, format: Format) -> anyhow::Error {
    let name = format.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    bihook::Error::Unsupported(format!("{cmd} has no {name} output")).into()
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let f = cli.format;
    match &cli.command {
        Command::Structure(q) => {
            let v = predict(&q.query())?;
            match f {
                Format::Text => print!("{v}"),
                Format::Json => print_json(&v)?,
                Format::Csv => return Err(unsupported("structure", f)),
            }
        }
        Command::Decomposable(q) => {
            let v = predict(&q.query())?;
            match f {
                Format::Text => println!("{}", v.verdict),
                Format::Json => print_json(&json!({ "specht": v.specht, "verdict": v.verdict, "notes": v.notes }))?,
                Format::Csv => return Err(unsupported("decomposable", f)),
            }
        }
        Command::Llt { e, n, rows, convention } => {
            let m = cache::canonical_basis(cli.cache_dir.as_deref(), *e, *n, *convention)?;
            let m = if *rows == Rows::Bihooks { bihook_rows(&m)? } else { m };
            emit_matrix(&m, f)?;
        }
        Command::Qdim { shape, e, word } => {
            let qe = QuantumCharacteristic::new(*e)?;
            let d = match word {
                Some(w) => word_graded_dimension(shape, w, qe)?,
                None => graded_dimension(shape, qe),
            };
            match f {
                Format::Text => println!("{d}"),
                Format::Json => print_json(&json!({ "shape": shape, "e": e, "word": word, "qdim": d }))?,
                Format::Csv => return Err(unsupported("qdim", f)),
            }
        }
        Command::Mullineux { e, shape } => {
            let out = mullineux(shape, QuantumCharacteristic::new(*e)?)?;
            emit_label("mullineux", shape, &out, f)?;
        }
        Command::Induce { e, a, b, negate, shape } => {
            let out = f_ab(shape, *a, *b, QuantumCharacteristic::new(*e)?, *negate)?;
            emit_label("induce", shape, &out, f)?;
        }
        Command::Braces { e, shape } => {
            let out = braces(shape, QuantumCharacteristic::new(*e)?)?;
            emit_label("braces", shape, &out, f)?;
        }
        Command::Decompnum { n, m, j, p } => {
            let d = schur::decomp_number(*m, *j, *n, Characteristic::new(*p)?);
            emit_number("decompnum", d as usize, f)?;
        }
        Command::Henke { n, j, p } => {
            let p = Characteristic::new(*p)?;
            let mut young = Vec::new();
            for m in 0..=*j {
                if schur::henke_summand(*n, *j, m, p)? {
                    young.push(Partition::new(vec![n - m, m])?.to_string());
                }
            }
            match f {
                Format::Text => println!("{}", young.iter().map(|y| format!("Y({y})")).collect::<Vec<_>>().join(" + ")),
                Format::Json => print_json(&json!({ "n": n, "j": j, "young": young }))?,
                Format::Csv => return Err(unsupported("henke", f)),
            }
        }
        Command::Summands { k, j, p } => {
            let s = schur::num_summands(*k, *j, Characteristic::new(*p)?)?;
            emit_number("summands", s, f)?;
        }
        Command::Factors { k, j, p } => {
            let c = schur::composition_multiset(*k, *j, Characteristic::new(*p)?)?;
            emit_factors(&c, f)?;
        }
        Command::Verify { suite, max_n, max_kj, e, primes } => {
            let bounds = Bounds { max_n: *max_n, max_kj: *max_kj, es: e.clone(), primes: primes.clone() };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            for name in names {
                let r = verify::run_suite(name, &bounds)?;
                if f == Format::Text {
                    print!("{r}");
                    for x in &r.failures {
                        println!("  reproduce: bihook verify --suite {name} # {}", x.case);
                    }
                }
                reports.push(r);
            }
            match f {
                Format::Text => {}
                Format::Json => print_json(&reports)?,
                Format::Csv => return Err(unsupported("verify", f)),
            }
            if reports.iter().any(|r| !r.passed()) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn bihook_rows(m: &DecompositionMatrix) -> Result<DecompositionMatrix> {
    let rows: Vec<Bipartition> = m.rows.iter().filter(|la| la.is_bihook()).cloned().collect();
    let entries = m.entries().into_iter().filter(|(la, _, _)| la.is_bihook());
    Ok(DecompositionMatrix::from_entries(m.e, m.n, m.convention, rows, m.columns.clone(), entries)?)
}

fn emit_matrix(m: &DecompositionMatrix, f: Format) -> Result<()> {
    match f {
        Format::Json => print_json(m)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout().lock());
            w.write_record(["lambda", "mu", "entry"])?;
            for (la, mu, c) in m.entries() {
                w.write_record([la.to_string(), mu.to_string(), c.to_string()])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let mut out = io::stdout().lock();
            writeln!(out, "e={} n={} convention={}", m.e, m.n, m.convention)?;
            for (la, mu, c) in m.entries() {
                writeln!(out, "{la:>16}  {mu:>16}  {c}")?;
            }
        }
    }
    Ok(())
}

fn emit_label(cmd: &str, input: &Bipartition, out: &Bipartition, f: Format) -> Result<()> {
    match f {
        Format::Text => println!("{out}"),
        Format::Json => print_json(&json!({ "input": input, "output": out }))?,
        Format::Csv => return Err(unsupported(cmd, f)),
    }
    Ok(())
}

fn emit_number(cmd: &str, x: usize, f: Format) -> Result<()> {
    match f {
        Format::Text => println!("{x}"),
        Format::Json => println!("{x}"),
        Format::Csv => return Err(unsupported(cmd, f)),
    }
    Ok(())
}

fn emit_factors(c: &std::collections::BTreeMap<TwoColumn, u32>, f: Format) -> Result<()> {
    match f {
        Format::Text => {
            for (t, m) in c {
                println!("L{t} x{m}");
            }
        }
        Format::Json => {
            let v: Vec<_> = c.iter().map(|(t, m)| json!({ "shape": t.partition(), "m": t.m, "n": t.n, "multiplicity": m })).collect();
            print_json(&v)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout().lock());
            w.write_record(["shape", "multiplicity"])?;
            for (t, m) in c {
                w.write_record([t.partition().to_string(), m.to_string()])?;
            }
            w.flush()?;
        }
    }
    if c.is_empty() {
        bail!("no composition factors");
    }
    Ok(())
}
