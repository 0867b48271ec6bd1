//! Command-line front end. `run` returns the process exit code: 0 on
//! success, 1 when a verification fails, 2 on usage or input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::census;
use crate::homology::{expand_rational_framings, h1_of_surgery, h1_torus_bundle, linking_matrix, PlumbingGraph};
use crate::invariant;
use crate::open_book::{family_book, serialize_book, torus_bundle_monodromy};
use crate::slope::{self, Slope, UnimodularMatrix};
use crate::verify::{self, Suite};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "tight-brieskorn", about = "Tight contact structures on -Sigma(2,3,6n-1)", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    Yn,
    Yinf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Monodromy,
    Word,
    Serialize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The index triangle P_n with stabilization data.
    Census {
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Contact invariants of every structure in P_n.
    Invariants {
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Attaching maps, slope anchors and solid-torus counts.
    Slopes {
        #[arg(long)]
        n: i64,
    },
    /// First homology of a builtin or user-supplied surgery diagram.
    Homology {
        #[arg(long, value_enum, conflicts_with = "file", required_unless_present = "file")]
        builtin: Option<Builtin>,
        #[arg(long, required_if_eq("builtin", "yn"))]
        n: Option<i64>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Genus-one open books of the torus family.
    Openbook {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        with_surgery: bool,
        #[arg(long, value_enum)]
        emit: Emit,
    },
    /// Run the property suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 30)]
        max_n: i64,
    },
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    // a closed reader (`| head`) is not a failure
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    Error::InvalidInput(format!("write failed: {e}"))
}

fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Census { n, format } => {
            let records = census::census(*n)?;
            match format {
                Format::Json => writeln!(out, "{}", to_json(&records)?).map_err(io)?,
                Format::Table => {
                    write!(out, "{}", census::render_triangle(*n)?).map_err(io)?;
                    writeln!(out).map_err(io)?;
                    writeln!(out, "{:>4} {:>4} {:>4} {:>4} {:>4} {:>5} {:>4}", "n", "i", "j", "l", "r", "tb", "rot")
                        .map_err(io)?;
                    for c in &records {
                        writeln!(
                            out,
                            "{:>4} {:>4} {:>4} {:>4} {:>4} {:>5} {:>4}",
                            c.n, c.i, c.j, c.l, c.r, c.twisting, c.rotation
                        )
                        .map_err(io)?;
                    }
                }
            }
        }
        Command::Invariants { n, format } => {
            let records = invariant::invariant_table(*n)?;
            match format {
                Format::Json => writeln!(out, "{}", to_json(&records)?).map_err(io)?,
                Format::Table => {
                    for r in &records {
                        writeln!(out, "{:<10} {}", format!("({},{})", r.i, r.j), ascii(&r.polynomial().to_string()))
                            .map_err(io)?;
                    }
                }
            }
        }
        Command::Slopes { n } => slopes(*n, out)?,
        Command::Homology { builtin, n, file } => homology(*builtin, *n, file.as_ref(), out)?,
        Command::Openbook { i, l, r, with_surgery, emit } => {
            let book = family_book(*i, *l, *r, *with_surgery);
            match emit {
                Emit::Word => writeln!(out, "{}", book.word).map_err(io)?,
                Emit::Serialize => write!(out, "{}", serialize_book(&book)).map_err(io)?,
                Emit::Monodromy => {
                    if *with_surgery {
                        return Err(Error::NotApplicable(
                            "the torus-bundle walk needs the book without the surgery twist".into(),
                        ));
                    }
                    let rep = torus_bundle_monodromy(&book)?;
                    writeln!(out, "product    {}", rep.product).map_err(io)?;
                    writeln!(out, "target     {}", rep.target).map_err(io)?;
                    match &rep.conjugator {
                        Some(c) => writeln!(out, "conjugator {c}").map_err(io)?,
                        None => writeln!(out, "conjugator none").map_err(io)?,
                    }
                    for (name, m) in &rep.regions {
                        writeln!(out, "region {name:<14} {m}").map_err(io)?;
                    }
                }
            }
        }
        Command::Verify { suite, max_n } => {
            if *max_n < 2 {
                return Err(Error::InvalidInput(format!("--max-n {max_n} must be at least 2")));
            }
            let report = verify::run(*suite, *max_n);
            for s in suite.members() {
                let (ok, total) = report.count(s.name());
                let tag = if ok == total { "PASS" } else { "FAIL" };
                writeln!(out, "{tag} {:<10} {ok}/{total}", s.name()).map_err(io)?;
            }
            if let Some(f) = report.first_failure() {
                writeln!(out, "first counterexample: {}", ascii(&f.to_string())).map_err(io)?;
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn to_json<T: serde::Serialize>(x: &T) -> Result<String> {
    serde_json::to_string_pretty(x).map_err(|e| Error::Inconsistent(e.to_string()))
}

fn slopes(n: i64, out: &mut dyn Write) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n = {n} must be at least 2")));
    }
    let w = |out: &mut dyn Write, s: String| writeln!(out, "{s}").map_err(io);
    w(out, format!("A1    {}", UnimodularMatrix::a1()))?;
    w(out, format!("A2    {}", UnimodularMatrix::a2()))?;
    let a3 = UnimodularMatrix::a3(n);
    w(out, format!("A3    {a3}"))?;
    w(out, format!("A3: -{n} -> {}", slope::mobius_apply(&a3, &Slope::integer(-n))))?;
    w(out, format!("A3: -{n}+1/6 -> {}", slope::mobius_apply(&a3, &Slope::from_ratio(-6 * n + 1, 6)?)))?;
    let tw: Vec<String> = slope::max_twisting_values(n)?.iter().map(i64::to_string).collect();
    w(out, format!("max twisting: {}", tw.join(" ")))?;
    w(out, format!("{:>4} {:>8} {:>6}", "k", "slope", "count"))?;
    for k in 1..n {
        let s = Slope::integer(-(n - k));
        w(out, format!("{k:>4} {:>8} {:>6}", s.to_string(), slope::tight_count_solid_torus(&s)?))?;
    }
    w(out, format!("total {} = n(n-1)/2", slope::upper_bound_count(n)?))
}

fn homology(builtin: Option<Builtin>, n: Option<i64>, file: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    let graph = match (builtin, file) {
        (Some(Builtin::Yinf), _) => {
            let m = UnimodularMatrix::trefoil_monodromy();
            writeln!(out, "torus bundle, monodromy {m}").map_err(io)?;
            writeln!(out, "H_1 = {}", h1_torus_bundle(&m)?).map_err(io)?;
            return Ok(());
        }
        (Some(Builtin::Yn), _) => {
            let n = n.ok_or_else(|| Error::InvalidInput("--builtin yn needs --n".into()))?;
            PlumbingGraph::brieskorn(n)?
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
            PlumbingGraph::parse(&text)?
        }
        (None, None) => return Err(Error::InvalidInput("give --builtin or --file".into())),
    };
    write!(out, "{}", ascii(&graph.to_string())).map_err(io)?;
    let expanded = expand_rational_framings(&graph)?;
    writeln!(out, "linking matrix:\n{}", linking_matrix(&expanded)?).map_err(io)?;
    writeln!(out, "H_1 = {}", h1_of_surgery(&graph)?).map_err(io)?;
    Ok(())
}

/// Table output stays ASCII.
fn ascii(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii() { c.to_string() } else { format!("\\u{{{:x}}}", c as u32) }).collect()
}
