//! Command-line front end. [`run`] takes the argument list and the three
//! standard streams and returns the process exit code: 0 on success, 1 when
//! a check fails, 2 on usage, parse or capacity errors.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analysis::{poly_roots, sokal_minimize};
use crate::checks::{run_suite, Suite};
use crate::error::{Error, Result};
use crate::family::{family_poly, FamilyKind};
use crate::graph::{complete, complete_bipartite, parse_graph6, parse_graph6_lines, MultiGraph, NamedGraph, SimpleGraph};
use crate::oracles::{partition_function_bivariate, zigzag_numbers};
use crate::poly::{BiPoly, IntPoly};
use crate::series::egf_reconstruct;
use crate::tutte::tutte_dc;

/// Largest `n` accepted by `table kn`.
pub const TABLE_MAX_COMPLETE: usize = 10;
/// Largest `n` accepted by `table knn`.
pub const TABLE_MAX_BIPARTITE: usize = 5;

#[derive(Debug, Parser)]
#[command(name = "coadjoint", version, about = "Co-adjoint, adjoint, chromatic and matching polynomials of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Polynomial of one graph, or of each graph6 line on standard input.
    #[command(group(ArgGroup::new("input").required(true).args(["graph", "graph6", "stdin"])))]
    Poly {
        #[arg(long, value_enum)]
        kind: PolyKind,
        /// K<n>, K<m>,<n>, P<n>, C<n> or E<n>.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        graph6: Option<String>,
        #[arg(long)]
        stdin: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Co-adjoint polynomials of K_1..K_max or K_{1,1}..K_{max,max}.
    Table {
        #[arg(value_enum)]
        family: TableFamily,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run identity suites over all labeled graphs up to a vertex count.
    Check {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// 6 is exhaustive and slow.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
    /// Euler zigzag numbers E_0..E_max.
    Zigzag {
        #[arg(long)]
        max: usize,
    },
    /// p_0..p_order read off exp(xF(z)).
    Egf {
        #[arg(long)]
        order: usize,
    },
    /// The root-bound constant K.
    SokalK {
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Complex roots of the co-adjoint polynomial of a named graph.
    Roots {
        #[arg(long)]
        graph: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    Coadjoint,
    Adjoint,
    Chromatic,
    Matching,
    Tutte,
    Z,
}

impl PolyKind {
    fn family(self) -> Option<FamilyKind> {
        match self {
            PolyKind::Coadjoint => Some(FamilyKind::CoAdjoint),
            PolyKind::Adjoint => Some(FamilyKind::Adjoint),
            PolyKind::Chromatic => Some(FamilyKind::Chromatic),
            PolyKind::Matching => Some(FamilyKind::Matching),
            PolyKind::Tutte | PolyKind::Z => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            PolyKind::Tutte => "tutte",
            PolyKind::Z => "z",
            other => other.family().expect("family kind").name(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFamily {
    Kn,
    Knn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Recursion,
    ExpType,
    Tutte,
    Merino,
    Eulerian,
    Sokal,
    Egf,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Recursion => Suite::Recursion,
            SuiteArg::ExpType => Suite::ExpType,
            SuiteArg::Tutte => Suite::Tutte,
            SuiteArg::Merino => Suite::Merino,
            SuiteArg::Eulerian => Suite::Eulerian,
            SuiteArg::Sokal => Suite::Sokal,
            SuiteArg::Egf => Suite::Egf,
            SuiteArg::All => Suite::All,
        }
    }
}

enum Computed {
    Uni(IntPoly),
    Bi(BiPoly),
}

fn compute(g: &SimpleGraph, kind: PolyKind) -> Result<Computed> {
    Ok(match kind {
        PolyKind::Tutte => Computed::Bi(tutte_dc(&MultiGraph::from_simple(g))?),
        PolyKind::Z => Computed::Bi(partition_function_bivariate(g)?),
        other => Computed::Uni(family_poly(g, other.family().expect("family kind"))?),
    })
}

fn decimal_rows(p: &BiPoly) -> Vec<Vec<String>> {
    p.rows()
        .iter()
        .map(|row| row.iter().map(|c| c.to_string()).collect())
        .collect()
}

fn vars(kind: PolyKind) -> (&'static str, &'static str) {
    match kind {
        PolyKind::Z => ("q", "v"),
        _ => ("x", "y"),
    }
}

fn emit(out: &mut dyn Write, g: &SimpleGraph, kind: PolyKind, value: &Computed, format: Format) -> std::io::Result<()> {
    let g6 = g.to_graph6();
    let (xv, yv) = vars(kind);
    match (format, value) {
        (Format::Text, Computed::Uni(p)) => writeln!(out, "{}", p.render(xv)),
        (Format::Text, Computed::Bi(p)) => writeln!(out, "{}", p.render(xv, yv)),
        (Format::Json, Computed::Uni(p)) => {
            let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", json!({"graph": g6, "kind": kind.name(), "coeffs": coeffs}))
        }
        (Format::Json, Computed::Bi(p)) => {
            writeln!(out, "{}", json!({"graph": g6, "kind": kind.name(), "coeffs": decimal_rows(p)}))
        }
        (Format::Csv, Computed::Uni(p)) => {
            for (k, c) in p.coeffs().iter().enumerate() {
                writeln!(out, "{g6},{},{k},{c}", kind.name())?;
            }
            Ok(())
        }
        (Format::Csv, Computed::Bi(p)) => {
            for (i, row) in p.rows().iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    writeln!(out, "{g6},{},{i},{j},{c}", kind.name())?;
                }
            }
            Ok(())
        }
    }
}

fn csv_header(format: Format, kind: PolyKind, out: &mut dyn Write) -> std::io::Result<()> {
    if format != Format::Csv {
        return Ok(());
    }
    match kind {
        PolyKind::Tutte | PolyKind::Z => writeln!(out, "graph,kind,power_x,power_y,coeff"),
        _ => writeln!(out, "graph,kind,power,coeff"),
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn named(name: &str) -> Result<SimpleGraph> {
    NamedGraph::parse(name)?.build()
}

fn subscript(n: usize) -> String {
    if n < 10 {
        n.to_string()
    } else {
        format!("{{{n}}}")
    }
}

fn table(family: TableFamily, max: usize, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let limit = match family {
        TableFamily::Kn => TABLE_MAX_COMPLETE,
        TableFamily::Knn => TABLE_MAX_BIPARTITE,
    };
    if max > limit {
        return Err(Error::capacity("table size", max, limit).into());
    }
    if format == Format::Csv {
        writeln!(out, "name,graph,power,coeff")?;
    }
    for n in 1..=max {
        let (label, g) = match family {
            TableFamily::Kn => (format!("K_{}", subscript(n)), complete(n)?),
            TableFamily::Knn => (format!("K_{{{n},{n}}}"), complete_bipartite(n, n)?),
        };
        let p = family_poly(&g, FamilyKind::CoAdjoint)?;
        match format {
            Format::Text => writeln!(out, "P({label},x)={p}")?,
            Format::Json => emit(out, &g, PolyKind::Coadjoint, &Computed::Uni(p), format)?,
            Format::Csv => {
                for (k, c) in p.coeffs().iter().enumerate() {
                    writeln!(out, "{label},{},{k},{c}", g.to_graph6())?;
                }
            }
        }
    }
    Ok(())
}

fn dispatch(cli: Cli, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match cli.command {
        Command::Poly {
            kind,
            graph,
            graph6,
            stdin,
            format,
        } => {
            let graphs = if let Some(name) = graph {
                vec![named(&name)?]
            } else if let Some(text) = graph6 {
                vec![parse_graph6(&text)?]
            } else {
                debug_assert!(stdin);
                let mut text = String::new();
                input.read_to_string(&mut text)?;
                parse_graph6_lines(&text)?
            };
            csv_header(format, kind, out)?;
            for g in &graphs {
                emit(out, g, kind, &compute(g, kind)?, format)?;
            }
            Ok(0)
        }
        Command::Table { family, max, format } => {
            table(family, max, format, out)?;
            Ok(0)
        }
        Command::Check { suite, max_n } => {
            let report = run_suite(suite.into(), max_n)?;
            out.write_all(report.render().as_bytes())?;
            if report.passed() {
                Ok(0)
            } else {
                writeln!(err, "{} check(s) failed", report.failures())?;
                Ok(1)
            }
        }
        Command::Zigzag { max } => {
            for (n, e) in zigzag_numbers(max)?.iter().enumerate() {
                writeln!(out, "{n} {e}")?;
            }
            Ok(0)
        }
        Command::Egf { order } => {
            for (n, p) in egf_reconstruct(order)?.iter().enumerate() {
                writeln!(out, "p_{n}(x)={p}")?;
            }
            Ok(0)
        }
        Command::SokalK { tol } => {
            let m = sokal_minimize(tol)?;
            writeln!(out, "K = {:.9}", m.value)?;
            writeln!(out, "a* = {:.9}", m.minimizer)?;
            Ok(0)
        }
        Command::Roots { graph } => {
            let g = named(&graph)?;
            let p = family_poly(&g, FamilyKind::CoAdjoint)?;
            writeln!(out, "P(x)={p}")?;
            let roots = poly_roots(&p)?;
            for (r, res) in roots.roots.iter().zip(&roots.residuals) {
                writeln!(out, "{:+.12} {:+.12}i  |r|={:.12}  residual={res:.2e}", r.re, r.im, r.norm())?;
            }
            writeln!(out, "max |r| = {:.12}", roots.max_modulus())?;
            Ok(0)
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    2
                }
            };
        }
    };
    match dispatch(cli, input, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("coadjoint").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn poly_by_name() {
        let (code, out, _) = call(&["poly", "--kind", "coadjoint", "--graph", "K4"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "x^4-6x^3+7x^2-2x\n");
    }

    #[test]
    fn poly_kinds_and_formats() {
        let (_, out, _) = call(&["poly", "--kind", "tutte", "--graph", "K3"], "");
        assert_eq!(out, "x^2+x+y\n");
        let (_, out, _) = call(&["poly", "--kind", "chromatic", "--graph6", "Bw"], "");
        assert_eq!(out, "x^3-3x^2+2x\n");
        let (_, out, _) = call(&["poly", "--kind", "coadjoint", "--graph", "K2", "--format", "json"], "");
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["coeffs"], json!(["0", "-1", "1"]));
        assert_eq!(v["kind"], "coadjoint");
        assert_eq!(v["graph"], "A_");
        let (_, out, _) = call(&["poly", "--kind", "matching", "--stdin", "--format", "csv"], "A?\nA_\n");
        assert_eq!(out, "graph,kind,power,coeff\nA?,matching,0,0\nA?,matching,1,0\nA?,matching,2,1\nA_,matching,0,0\nA_,matching,1,-1\nA_,matching,2,1\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["poly", "--kind", "coadjoint", "--graph", "Q7"], "").0, 2);
        assert_eq!(call(&["poly", "--kind", "coadjoint", "--graph6", "~~"], "").0, 2);
        assert_eq!(call(&["poly", "--kind", "coadjoint"], "").0, 2);
        assert_eq!(call(&["table", "kn", "--max", "99"], "").0, 2);
        assert_eq!(call(&["bogus"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn table_labels() {
        let (_, out, _) = call(&["table", "knn", "--max", "2"], "");
        assert_eq!(out, "P(K_{1,1},x)=x^2-x\nP(K_{2,2},x)=x^4-4x^3+6x^2-2x\n");
    }
}
