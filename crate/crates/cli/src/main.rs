//! Command-line front end: chromatic numbers, ball-carving decompositions,
//! the recursive coloring, bound calculators, graph generators, the
//! exhaustive micro-scale oracle, and the structural verifiers.
//!
//! Exit codes: 0 on success or a passing check, 1 when a verifier reports a
//! failing check (or a coloring precondition is witnessed false), 2 on usage
//! or input parse errors. Output is a pure function of arguments and input
//! files.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ballcarve::bounds::{self, format_rational};
use ballcarve::chromatic;
use ballcarve::decomposition::{self, DecompositionError};
use ballcarve::generators;
use ballcarve::graph::Graph;
use ballcarve::oracle::{self, OracleMode};

#[derive(Parser)]
#[command(name = "ballcarve", version, about = "Ball-carving decompositions and locally bounded graph coloring")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact chromatic number of a DIMACS graph
    Chi { file: PathBuf },
    /// Largest chromatic number over all radius-r balls
    Lchi {
        #[arg(short, long)]
        r: usize,
        file: PathBuf,
    },
    /// Carve the graph into radius-r parts plus a separator (JSON)
    Decompose {
        #[arg(short, long)]
        r: usize,
        file: PathBuf,
    },
    /// Color by carving level by level, c fresh colors per level
    Color {
        #[arg(short, long)]
        r: usize,
        #[arg(short, long)]
        c: usize,
        file: PathBuf,
    },
    /// Evaluate a bound formula in exact rationals
    Bound {
        #[command(subcommand)]
        formula: BoundCmd,
    },
    /// Emit a generated graph as DIMACS on standard output
    Gen {
        #[command(subcommand)]
        family: GenCmd,
    },
    /// Exhaustively find the exact crossover order f (or a lower bound)
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        vmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check the carving level recurrence against the general lower bound
    VerifyTheorem {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        json: bool,
    },
    /// Re-derive every promise a carve makes and report each check
    VerifyDecomp {
        #[arg(short, long)]
        r: usize,
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct NrcArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    c: u64,
}

#[derive(Subcommand)]
enum BoundCmd {
    /// (n/c + r/2)^(r+1 rising) / (r+1)^(r+1), requires c > 1
    Gen {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        c: u64,
    },
    /// floor(r/2k)^k at order n = k(c-1) + 1
    Kst {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        r: u64,
    },
    /// (n+r+1)...(n+2r+1) / (2^r (r+1)^(r+1)), two-colorable-balls case
    Bb {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u32,
    },
    /// ((2rc+1)^k - 1) / 2r at order n = k(c-1)
    UpperBogd {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        r: u64,
    },
    /// n^(4r+5); only valid beyond an unspecified order threshold
    UpperErdos {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u32,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    Cycle { n: usize },
    Complete { n: usize },
    Mycielski { file: PathBuf },
    Gmyc { file: PathBuf, levels: usize },
    Kneser { n: usize, k: usize },
    Gnp { n: usize, p: f64, seed: u64 },
}

fn read_graph(path: &PathBuf) -> Result<Graph, String> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?
    };
    Graph::parse_dimacs(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// 2 = usage/parse error, 1 = a check failed, 0 = success.
fn run(cli: Cli) -> Result<u8, String> {
    match cli.cmd {
        Command::Chi { file } => {
            println!("{}", chromatic::chromatic_number(&read_graph(&file)?));
            Ok(0)
        }
        Command::Lchi { r, file } => {
            if r < 1 {
                return Err("radius must be at least 1".into());
            }
            println!("{}", chromatic::local_chromatic(&read_graph(&file)?, r));
            Ok(0)
        }
        Command::Decompose { r, file } => {
            let g = read_graph(&file)?;
            let d = decomposition::carve(&g, r).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&d.to_json()).unwrap());
            Ok(0)
        }
        Command::Color { r, c, file } => {
            let g = read_graph(&file)?;
            match decomposition::recursive_color(&g, r, c) {
                Ok(rc) => {
                    print!("{}", rc.coloring.to_lines());
                    println!("levels: {}", rc.levels);
                    Ok(0)
                }
                Err(e @ DecompositionError::PartNotColorable { .. }) => {
                    eprintln!("{e}");
                    Ok(1)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Bound { formula } => {
            run_bound(formula)?;
            Ok(0)
        }
        Command::Gen { family } => {
            let g = match family {
                GenCmd::Cycle { n } => generators::cycle(n).map_err(|e| e.to_string())?,
                GenCmd::Complete { n } => generators::complete(n).map_err(|e| e.to_string())?,
                GenCmd::Mycielski { file } => generators::mycielski(&read_graph(&file)?),
                GenCmd::Gmyc { file, levels } => {
                    generators::generalized_mycielski(&read_graph(&file)?, levels)
                        .map_err(|e| e.to_string())?
                }
                GenCmd::Kneser { n, k } => generators::kneser(n, k).map_err(|e| e.to_string())?,
                GenCmd::Gnp { n, p, seed } => {
                    generators::gnp(n, p, seed).map_err(|e| e.to_string())?
                }
            };
            print!("{}", g.to_dimacs());
            Ok(0)
        }
        Command::Oracle { n, r, c, vmax, json } => {
            let res = oracle::f_oracle(n, r, c, vmax).map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&res.to_json()).unwrap());
            } else {
                match res.mode {
                    OracleMode::Exact => {
                        println!("f_{c}({n}, {r}) = {} (EXACT)", res.value);
                        println!("graphs examined: {}", res.graphs_examined);
                        let witness = res.witness.as_ref().expect("exact result has a witness");
                        println!("witness ({} vertices):", witness.n());
                        print!("{}", witness.to_dimacs());
                    }
                    OracleMode::LowerBound => {
                        println!("f_{c}({n}, {r}) >= {} (LOWER_BOUND at search cap)", res.value);
                        println!("graphs examined: {}", res.graphs_examined);
                    }
                }
            }
            Ok(0)
        }
        Command::VerifyTheorem { n, r, c, json } => {
            let report = bounds::theorem_consistency(n, r, c).map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                print!("{report}");
            }
            Ok(if report.pass() { 0 } else { 1 })
        }
        Command::VerifyDecomp { r, file, json } => {
            let g = read_graph(&file)?;
            let d = decomposition::carve(&g, r).map_err(|e| e.to_string())?;
            let report = decomposition::verify_decomposition(&g, r, &d);
            if json {
                println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
            } else {
                print!("{report}");
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
    }
}

fn run_bound(cmd: BoundCmd) -> Result<(), String> {
    match cmd {
        BoundCmd::Gen { n, r, c } => {
            let v = bounds::bound_gen(n, r, c).map_err(|e| e.to_string())?;
            println!("{}", format_rational(&v));
        }
        BoundCmd::Kst { k, c, r } => {
            if k < 1 || c < 1 || r < 1 {
                return Err("k, c, r must be positive".into());
            }
            let b = bounds::bound_kst(k, c, r);
            println!("{}", bounds::format_biguint(&b.value));
            println!("n = {}", b.n);
        }
        BoundCmd::Bb { n, r } => {
            if n < 1 || r < 1 {
                return Err("n and r must be positive".into());
            }
            println!("{}", format_rational(&bounds::bound_bb(n, r)));
        }
        BoundCmd::UpperBogd { k, c, r } => {
            if k < 1 || c < 1 || r < 1 {
                return Err("k, c, r must be positive".into());
            }
            let b = bounds::bound_upper_bogdnrv(k, c, r);
            println!("{}", format_rational(&b.value));
            println!("n = {}", b.n);
        }
        BoundCmd::UpperErdos { n, r } => {
            if n < 1 || r < 1 {
                return Err("n and r must be positive".into());
            }
            let b = bounds::bound_upper_erdos(n, r);
            println!("{}", bounds::format_biguint(&b.value));
            println!("note: valid only for sufficiently large n (threshold unspecified)");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
