//! The `catalan` command line.
//!
//! Exit codes: 0 on success, 1 when verification fails, 2 on usage or input errors.

use std::io::{self, BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::bijection::{decompose, enumerate, universal_convert};
use crate::family::{family, Element, FamilyDescriptor, FamilyId};
use crate::magma_lab::{self, Decomposition, FiniteMagmaTable, TableError, Variant};
use crate::stats::narayana_histogram;
use crate::term::Notation;
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "catalan", version, about = "Catalan families as free magmas")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the registered families.
    Families,
    /// All elements of one norm, in canonical order.
    Enumerate {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        norm: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Universal bijection; reads one element per line from stdin without ELEMENT.
    Convert {
        #[arg(long)]
        from: FamilyId,
        #[arg(long)]
        to: FamilyId,
        element: Option<String>,
    },
    /// Product of two elements of one family.
    Product {
        #[arg(long)]
        family: FamilyId,
        left: String,
        right: String,
    },
    /// Split an element into its unique factor pair.
    Factor {
        #[arg(long)]
        family: FamilyId,
        element: String,
    },
    /// Decomposition of an element as a term.
    Term {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        notation: Notation,
        element: String,
    },
    /// Histogram of right multiplications by the generator.
    Narayana {
        #[arg(long)]
        family: FamilyId,
        #[arg(long)]
        norm: usize,
    },
    /// Exhaustive property suite.
    Verify {
        /// Family id or `all`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        max_norm: usize,
    },
    /// Classify a product table on positive integers.
    MagmaLab {
        /// Diagonal-fill table with the a, b or c corner
        #[arg(long, required_unless_present = "table")]
        variant: Option<Variant>,
        #[arg(long, default_value_t = 6)]
        size: usize,
        #[arg(long, default_value_t = 27)]
        bound: u64,
        /// Table file: first line N, then N rows.
        #[arg(long, conflicts_with = "variant")]
        table: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
    #[error("table: {0}")]
    Table(#[from] TableError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) if !e.is_input_error() && !matches!(e, crate::Error::Cap(_)) => EXIT_FAILED,
            CliError::Io(_) => EXIT_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, S>(argv: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, stdin, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn record(f: &dyn FamilyDescriptor, e: &Element) -> Result<Value, crate::Error> {
    Ok(json!({ "family": f.id().to_string(), "norm": f.norm(e)?, "repr": f.render(e)? }))
}

fn emit(out: &mut dyn Write, format: Format, f: &dyn FamilyDescriptor, e: &Element) -> Result<(), CliError> {
    match format {
        Format::Text => writeln!(out, "{}", f.render(e)?)?,
        Format::Json => writeln!(out, "{}", record(f, e)?)?,
    }
    Ok(())
}

fn dispatch(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Families => {
            for id in FamilyId::ALL {
                match format {
                    Format::Text => writeln!(out, "{id}\t{}\t{}", id.alias(), id.title())?,
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({ "family": id.to_string(), "alias": id.alias(), "title": id.title() })
                    )?,
                }
            }
        }
        Command::Enumerate { family: id, norm, count_only } => {
            let f = family(*id);
            if *norm == 0 {
                return Err(CliError::Usage("norm must be at least 1".into()));
            }
            let all = enumerate(f, *norm)?;
            if *count_only {
                match format {
                    Format::Text => writeln!(out, "{}", all.len())?,
                    Format::Json => {
                        writeln!(out, "{}", json!({ "family": id.to_string(), "norm": norm, "count": all.len() }))?
                    }
                }
            } else {
                for e in &all {
                    emit(out, format, f, e)?;
                }
            }
        }
        Command::Convert { from, to, element } => {
            let (src, dst) = (family(*from), family(*to));
            let convert = |s: &str| -> Result<Element, crate::Error> {
                universal_convert(src, dst, &src.parse(s)?)
            };
            match element {
                Some(s) => emit(out, format, dst, &convert(s)?)?,
                None => {
                    let mut failed = false;
                    for (n, line) in stdin.lines().enumerate() {
                        let line = line?;
                        let text = line.trim();
                        if text.is_empty() {
                            continue;
                        }
                        match convert(text) {
                            Ok(e) => emit(out, format, dst, &e)?,
                            Err(e) => {
                                failed = true;
                                writeln!(err, "error: line {}: {e}", n + 1)?;
                            }
                        }
                    }
                    if failed {
                        return Ok(EXIT_USAGE);
                    }
                }
            }
        }
        Command::Product { family: id, left, right } => {
            let f = family(*id);
            let c = f.product(&f.parse(left)?, &f.parse(right)?)?;
            emit(out, format, f, &c)?;
        }
        Command::Factor { family: id, element } => {
            let f = family(*id);
            let e = f.parse(element)?;
            let factors = f.factorize(&e)?;
            match (format, &factors) {
                (Format::Text, None) => writeln!(out, "IRREDUCIBLE")?,
                (Format::Text, Some((a, b))) => writeln!(out, "{}\t{}", f.render(a)?, f.render(b)?)?,
                (Format::Json, _) => {
                    let mut v = record(f, &e)?;
                    match factors {
                        None => v["irreducible"] = json!(true),
                        Some((a, b)) => {
                            v["irreducible"] = json!(false);
                            v["left"] = record(f, &a)?;
                            v["right"] = record(f, &b)?;
                        }
                    }
                    writeln!(out, "{v}")?;
                }
            }
        }
        Command::Term { family: id, notation, element } => {
            let f = family(*id);
            let e = f.parse(element)?;
            let t = decompose(f, &e)?.render(*notation);
            match format {
                Format::Text => writeln!(out, "{t}")?,
                Format::Json => {
                    let mut v = record(f, &e)?;
                    v["term"] = json!(t);
                    writeln!(out, "{v}")?;
                }
            }
        }
        Command::Narayana { family: id, norm } => {
            if *norm < 2 {
                return Err(CliError::Usage("narayana needs norm at least 2".into()));
            }
            let h = narayana_histogram(family(*id), *norm)?;
            for (k, count) in &h.counts {
                match format {
                    Format::Text => writeln!(out, "{k} {count}")?,
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({ "family": id.to_string(), "norm": norm, "k": k, "count": count })
                    )?,
                }
            }
        }
        Command::Verify { family: target, max_norm } => {
            let target = match target.as_str() {
                "all" => None,
                s => Some(s.parse::<FamilyId>()?),
            };
            if *max_norm == 0 {
                return Err(CliError::Usage("max-norm must be at least 1".into()));
            }
            let report = verify::run(target, *max_norm)?;
            for o in &report.outcomes {
                match format {
                    Format::Text => writeln!(out, "{o}")?,
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({
                            "scope": o.scope,
                            "check": o.check,
                            "cases": o.cases,
                            "passed": o.passed(),
                            "failures": o.failures,
                        })
                    )?,
                }
            }
            if !report.passed() {
                return Ok(EXIT_FAILED);
            }
        }
        Command::MagmaLab { variant, size, bound, table } => {
            let t = match (variant, table) {
                (_, Some(path)) => FiniteMagmaTable::parse(&std::fs::read_to_string(path)?)?,
                (Some(v), None) => FiniteMagmaTable::diagonal(*v, *size),
                (None, None) => unreachable!("clap requires --variant or --table"),
            };
            let label = match variant {
                Some(v) => format!("variant {v}"),
                None => "table".to_string(),
            };
            magma_lab_report(out, format, &label, &t, *bound)?;
        }
    }
    Ok(EXIT_OK)
}

fn magma_lab_report(
    out: &mut dyn Write,
    format: Format,
    label: &str,
    t: &FiniteMagmaTable,
    bound: u64,
) -> Result<(), CliError> {
    let class = magma_lab::classify(t, bound);
    let duplicate = magma_lab::check_unique_factorization(t).err();
    let norm = magma_lab::derive_norm(t, bound).ok();
    if format == Format::Json {
        let v = json!({
            "table": label,
            "size": t.size(),
            "bound": bound,
            "unique_factorization": class.unique_factorization,
            "finite_decomposition": class.finite_decomposition.verdict(),
            "irreducibles": class.irreducibles,
            "norm": norm.as_ref().map(|n| n.norms.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>()),
            "norm_well_defined": norm.as_ref().map(|n| n.is_additive()),
            "super_additive": norm.as_ref().map(|n| n.is_super_additive()),
        });
        writeln!(out, "{v}")?;
        return Ok(());
    }
    writeln!(out, "{label}, {0}x{0} window, bound {bound}", t.size())?;
    for row in t.render().lines().skip(1) {
        writeln!(out, "  {row}")?;
    }
    match duplicate {
        None => writeln!(out, "unique factorization: yes")?,
        Some((a, b)) => writeln!(out, "unique factorization: no ({a}, {b})")?,
    }
    match &class.finite_decomposition {
        Decomposition::Yes => writeln!(out, "finite decomposition: yes")?,
        Decomposition::No { cycle } => {
            let cells: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            writeln!(out, "finite decomposition: no (cycle {})", cells.join(", "))?;
        }
        Decomposition::Unknown { escape } => {
            writeln!(out, "finite decomposition: unknown (chain leaves the bound at {escape})")?
        }
    }
    let irr: Vec<String> = class.irreducibles.iter().map(ToString::to_string).collect();
    writeln!(out, "irreducibles: {{{}}}", irr.join(", "))?;
    match norm {
        None => writeln!(out, "norm: undefined")?,
        Some(n) => {
            let pairs: Vec<String> = n.norms.iter().map(|(m, v)| format!("{m}:{v}")).collect();
            writeln!(out, "norm: {}", pairs.join(" "))?;
            for c in &n.conflicts {
                let sums: Vec<String> = c.sums.iter().map(|(cell, s)| format!("{cell} gives {s}")).collect();
                writeln!(out, "norm conflict at {}: {}", c.element, sums.join(", "))?;
            }
            let sa = if n.is_super_additive() { "yes" } else { "no" };
            writeln!(out, "super-additive: {sa}")?;
        }
    }
    Ok(())
}

/// Entry point for the binary.
pub fn main_with_std() -> i32 {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    run(std::env::args_os(), &mut input, &mut out, &mut err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("catalan").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn documented_examples() {
        assert_eq!(call(&["convert", "--from", "dyck", "--to", "brackets", "uduudd"], ""), (0, "{}{{}}\n".into(), String::new()));
        assert_eq!(call(&["narayana", "--family", "dyck", "--norm", "4"], "").1, "1 1\n2 3\n3 1\n");
        assert_eq!(call(&["enumerate", "--family", "dyck", "--norm", "4", "--count-only"], "").1, "5\n");
    }

    #[test]
    fn factor_and_term() {
        assert_eq!(call(&["factor", "--family", "F8", "uduududdud"], "").1, "uduududd\t_\n");
        assert_eq!(call(&["factor", "--family", "dyck", "_"], "").1, "IRREDUCIBLE\n");
        assert_eq!(call(&["term", "--family", "avoid321", "--notation", "infix", "1,3,4,2"], "").1, "((e*e)*(e*(e*e)))\n");
        assert_eq!(call(&["term", "--family", "8", "--notation", "postfix", "uduudd"], "").1, "ee*ee**\n");
        assert_eq!(call(&["product", "--family", "frieze", "1,1,1", "1,1,1"], "").1, "2,1,3,1,2\n");
    }

    #[test]
    fn json_records() {
        let (code, out, _) = call(&["--format", "json", "enumerate", "--family", "dyck", "--norm", "2"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "{\"family\":\"F8\",\"norm\":2,\"repr\":\"ud\"}\n");
    }

    #[test]
    fn batch_conversion() {
        let (code, out, err) = call(&["convert", "--from", "dyck", "--to", "tableau"], "ud\n\nuudd\nxx\n");
        assert_eq!(out, "1/2\n1,2/3,4\n");
        assert_eq!(code, 2);
        assert!(err.contains("line 4"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["convert", "--from", "dyck", "--to", "brackets", "udd"], "").0, 2);
        assert_eq!(call(&["enumerate", "--family", "walk", "--norm", "3"], "").0, 2);
        assert_eq!(call(&["enumerate", "--family", "dyck", "--norm", "40"], "").0, 2);
        assert_eq!(call(&["bogus"], "").0, 2);
        assert_eq!(call(&["magma-lab", "--variant", "z"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn magma_lab_text() {
        let (code, out, _) = call(&["magma-lab", "--variant", "a", "--size", "6"], "");
        assert_eq!(code, 0);
        assert!(out.contains("unique factorization: no (4 = 2*3, 4 = 3*2)"), "{out}");
        assert!(out.contains("finite decomposition: no (cycle 3 = 1*4, 4 = 2*3)"));
        assert!(out.contains("irreducibles: {1, 2}"));
        let (_, out, _) = call(&["magma-lab", "--variant", "c", "--size", "6"], "");
        assert!(out.contains("norm: 1:2 2:1 3:4"), "{out}");
    }
}
