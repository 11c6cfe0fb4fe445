//! Command-line surface of the `ciq` binary.
//!
//! Exit codes: `0` success (for `check`, every table is CI), `1` well-formed
//! input that is not left CI or a failed theorem check, `2` input or usage
//! error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{Element, TotalMap};
use crate::ci::{
    check_left_ci, check_right_ci, classify, derive_left_j, derive_right_j, solve_left,
};
use crate::error::Error;
use crate::io::report::CiReportJson;
use crate::io::{
    parse_documents, render_document, render_report_with, Format, RenderOptions, Report,
    TableDocument,
};
use crate::search::{
    enumerate, group_classes, random_quasigroup, verify_theorem, Mode, SearchConfig,
    DEFAULT_CANON_MAX_ORDER,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ciq",
    version,
    about = "CI-groupoid workbench: checks, J derivation, enumeration"
)]
pub struct Cli {
    /// Worker threads for enumeration.
    #[arg(long, env = "WORKERS", global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify every table in a file; compares against a supplied J line.
    Check {
        file: PathBuf,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Derive J_r and J_l from a table.
    DeriveJ {
        file: PathBuf,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Solve a * x = b with the derived J_r.
    Solve {
        file: PathBuf,
        #[arg(long)]
        a: Element,
        #[arg(long)]
        b: Element,
    },
    /// Enumerate every left CI-groupoid of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "propagate")]
        mode: Mode,
        /// One representative per isomorphism class.
        #[arg(long)]
        classes: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Enumerate orders 1..=N and check each structure is a CI-quasigroup.
    VerifyTheorem {
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value = "propagate")]
        mode: Mode,
        #[arg(long, default_value = "text")]
        format: Format,
        /// Leave out elapsed time so repeated runs are byte-identical.
        #[arg(long)]
        no_timing: bool,
    },
    /// Random Latin squares, one document per seed S, S+1, ...
    Random {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

type Outcome = Result<i32, String>;

fn error_code(e: &Error) -> i32 {
    match e {
        Error::AmbiguousJ { .. } | Error::DerivedPropertyViolated(_) => EXIT_NEGATIVE,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let workers = cli.workers.unwrap_or_else(|| {
        std::thread::available_parallelism().map_or(1, std::num::NonZeroUsize::get)
    });
    let mut io = Io { out, err };
    let result = match cli.command {
        Command::Check { file, format } => check(&mut io, &file, format),
        Command::DeriveJ { file, format } => derive(&mut io, &file, format),
        Command::Solve { file, a, b } => solve(&mut io, &file, a, b),
        Command::Enumerate {
            order,
            mode,
            classes,
            out,
            node_limit,
        } => {
            let mut config = SearchConfig::new(order, mode)
                .workers(workers)
                .classes(classes);
            config.node_limit = node_limit;
            enumerate_cmd(&mut io, &config, out.as_deref())
        }
        Command::VerifyTheorem {
            max_order,
            mode,
            format,
            no_timing,
        } => verify(&mut io, max_order, mode, workers, format, !no_timing),
        Command::Random { order, seed, count } => random(&mut io, order, seed, count),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(io.err, "error: {message}");
            EXIT_INPUT
        }
    }
}

fn read_documents(path: &Path) -> Result<Vec<TableDocument>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_documents(&path.display().to_string(), &text)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn read_single(path: &Path) -> Result<TableDocument, String> {
    let mut docs = read_documents(path)?;
    if docs.len() != 1 {
        return Err(format!(
            "{}: expected one table, found {}",
            path.display(),
            docs.len()
        ));
    }
    Ok(docs.remove(0))
}

fn write_out(io: &mut Io<'_>, text: &str) -> Result<(), String> {
    io.out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct CheckJson<'a> {
    #[serde(flatten)]
    report: CiReportJson<'a>,
    #[serde(skip_serializing_if = "Option::is_none")]
    supplied_j: Option<&'a [Element]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    supplied_j_left_ci: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    supplied_j_right_ci: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    supplied_j_equals_jr: Option<bool>,
}

fn check(io: &mut Io<'_>, file: &Path, format: Format) -> Outcome {
    let docs = read_documents(file)?;
    let multi = docs.len() > 1;
    let mut code = EXIT_OK;
    for (i, doc) in docs.iter().enumerate() {
        let report = match classify(&doc.table) {
            Ok(r) => r,
            Err(e) => {
                writeln!(io.err, "{} #{}: {e}", doc.source_name, i + 1)
                    .map_err(|e| e.to_string())?;
                code = code.max(error_code(&e));
                continue;
            }
        };
        if !report.classification.is_ci() {
            code = code.max(EXIT_NEGATIVE);
        }
        let supplied = doc.j.as_ref().map(|j| {
            let left = check_left_ci(&doc.table, j).expect("orders match");
            let right = check_right_ci(&doc.table, j).expect("orders match");
            (j, left, right, report.jr.as_ref() == Some(j))
        });
        let text = match format {
            Format::Json => {
                let json = CheckJson {
                    report: CiReportJson::from(&report),
                    supplied_j: supplied.map(|s| s.0.image()),
                    supplied_j_left_ci: supplied.map(|s| s.1),
                    supplied_j_right_ci: supplied.map(|s| s.2),
                    supplied_j_equals_jr: supplied.map(|s| s.3),
                };
                serde_json::to_string(&json).expect("serializable") + "\n"
            }
            Format::Text => {
                let mut text = String::new();
                if multi {
                    text.push_str(&format!("== {} #{} ==\n", doc.source_name, i + 1));
                }
                text.push_str(&render_report_with(
                    Report::Ci(&report),
                    Format::Text,
                    RenderOptions::default(),
                ));
                if let Some((j, left, right, equal)) = supplied {
                    text.push_str(&format!("supplied J: {:?}\n", j.image()));
                    text.push_str(&format!("supplied J left CI: {left}\n"));
                    text.push_str(&format!("supplied J right CI: {right}\n"));
                    text.push_str(&format!("supplied J equals J_r: {equal}\n"));
                }
                if multi {
                    text.push('\n');
                }
                text
            }
        };
        write_out(io, &text)?;
    }
    Ok(code)
}

#[derive(Serialize)]
struct DeriveJson<'a> {
    jr: Option<&'a [Element]>,
    jl: Option<&'a [Element]>,
}

fn derive(io: &mut Io<'_>, file: &Path, format: Format) -> Outcome {
    let doc = read_single(file)?;
    let (jr, jl) = match (derive_right_j(&doc.table), derive_left_j(&doc.table)) {
        (Ok(jr), Ok(jl)) => (jr, jl),
        (Err(e), _) | (_, Err(e)) => {
            writeln!(io.err, "{e}").map_err(|e| e.to_string())?;
            return Ok(error_code(&e));
        }
    };
    let text = match format {
        Format::Json => {
            let json = DeriveJson {
                jr: jr.as_ref().map(TotalMap::image),
                jl: jl.as_ref().map(TotalMap::image),
            };
            serde_json::to_string(&json).expect("serializable") + "\n"
        }
        Format::Text => {
            let show = |m: &Option<TotalMap>| {
                m.as_ref()
                    .map_or_else(|| "none".to_string(), |m| join(m.image()))
            };
            format!("J_r: {}\nJ_l: {}\n", show(&jr), show(&jl))
        }
    };
    write_out(io, &text)?;
    Ok(if jr.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn solve(io: &mut Io<'_>, file: &Path, a: Element, b: Element) -> Outcome {
    let doc = read_single(file)?;
    let jr = match derive_right_j(&doc.table) {
        Ok(Some(jr)) => jr,
        Ok(None) => {
            writeln!(io.err, "table is not left CI").map_err(|e| e.to_string())?;
            return Ok(EXIT_NEGATIVE);
        }
        Err(e) => return Err(e.to_string()),
    };
    let x = solve_left(&doc.table, &jr, a, b).map_err(|e| e.to_string())?;
    write_out(io, &format!("{x}\n"))?;
    Ok(EXIT_OK)
}

fn join(values: &[Element]) -> String {
    values
        .iter()
        .map(Element::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn enumerate_cmd(io: &mut Io<'_>, config: &SearchConfig, out: Option<&Path>) -> Outcome {
    let structures = enumerate(config).map_err(|e| e.to_string())?;
    let classes = if config.order <= DEFAULT_CANON_MAX_ORDER {
        Some(group_classes(&structures).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let summary = format!(
        "order {} mode {} pairs {} classes {}",
        config.order,
        config.mode,
        structures.len(),
        classes
            .as_ref()
            .map_or_else(|| "n/a".to_string(), |c| c.len().to_string())
    );
    let mut text = format!("# {summary}\n");
    let name = format!("order-{}", config.order);
    if config.up_to_isomorphism {
        for class in classes.iter().flatten() {
            text.push_str(&format!("\n# class size {}\n", class.size));
            text.push_str(&render_document(&TableDocument::from_structure(
                &class.representative,
                &name,
            )));
        }
    } else {
        for s in &structures {
            text.push('\n');
            text.push_str(&render_document(&TableDocument::from_structure(s, &name)));
        }
    }
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            write_out(io, &format!("{summary}\n"))?;
        }
        None => write_out(io, &text)?,
    }
    Ok(EXIT_OK)
}

fn verify(
    io: &mut Io<'_>,
    max_order: usize,
    mode: Mode,
    workers: usize,
    format: Format,
    timing: bool,
) -> Outcome {
    let mut code = EXIT_OK;
    for order in 1..=max_order {
        let config = SearchConfig::new(order, mode).workers(workers);
        let report = verify_theorem(&config).map_err(|e| e.to_string())?;
        if !report.verified() {
            code = EXIT_NEGATIVE;
        }
        let mut text =
            render_report_with(Report::Theorem(&report), format, RenderOptions { timing });
        if format == Format::Json {
            text.push('\n');
        }
        write_out(io, &text)?;
    }
    Ok(code)
}

fn random(io: &mut Io<'_>, order: usize, seed: u64, count: u64) -> Outcome {
    let mut text = String::new();
    for i in 0..count {
        let s = seed.wrapping_add(i);
        let table = random_quasigroup(order, s).map_err(|e| e.to_string())?;
        if i > 0 {
            text.push('\n');
        }
        text.push_str(&format!("# seed {s}\n"));
        text.push_str(&render_document(&TableDocument::new(table, None, "random")));
    }
    write_out(io, &text)?;
    Ok(EXIT_OK)
}
