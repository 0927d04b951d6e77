//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 bad input,
//! 3 a resource bound was hit (field too small for a forced degree, field
//! too large, product degree over the guardrail).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::{AlgebraError, ParseError, PbwAlgebra};
use crate::reps::export::{load_representations, relations_json, report_json, ExportError};
use crate::reps::{classify_all, irreducibility, verify_relations, Representation};
use crate::setup::{resolve, Setup, SetupError, SetupSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cherednik",
    version,
    about = "Irreducible representations of rank-1 rational Cherednik algebras over GF(p^k)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every irreducible representation with central character (a, b).
    Enumerate {
        #[command(flatten)]
        common: Common,
        /// Eigenvalue of x^N; omitting both a and b selects the W family.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Eigenvalue of y^N.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Re-check a representation or an enumerate document.
    Verify {
        #[command(flatten)]
        common: Common,
        /// JSON file written by `enumerate --format json` or an export.
        input: PathBuf,
    },
    /// Print the PBW normal form of an element.
    NormalForm {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Decide whether an element is central.
    CenterCheck {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Characteristic.
    #[arg(long)]
    pub p: Option<u64>,
    /// Order of the cyclic group.
    #[arg(long, default_value_t = 1)]
    pub r: u32,
    /// 0 or 1.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub t: i64,
    /// c_1..c_{r-1} as field literals separated by ';'.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    pub c: String,
    /// Force the working field GF(p^k).
    #[arg(long)]
    pub ext_degree: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<SetupError> for Failure {
    fn from(e: SetupError) -> Failure {
        match e {
            SetupError::Input(m) => Failure::input(m),
            SetupError::Resource(m) => Failure {
                code: EXIT_RESOURCE,
                message: m,
            },
        }
    }
}

impl From<ExportError> for Failure {
    fn from(e: ExportError) -> Failure {
        Failure::input(e.to_string())
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Failure {
        let code = match e {
            AlgebraError::DegreeBound { .. } => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        match e {
            ParseError::Algebra(a) => a.into(),
            other => Failure::input(other.to_string()),
        }
    }
}

/// What a command produced: the rendered text and its exit code.
struct Outcome {
    text: String,
    code: i32,
    diagnostic: Option<String>,
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
                EXIT_INPUT
            } else {
                let _ = out.write_all(rendered.as_bytes());
                EXIT_OK
            };
        }
    };
    let common = match &cli.command {
        Command::Enumerate { common, .. }
        | Command::Verify { common, .. }
        | Command::NormalForm { common, .. }
        | Command::CenterCheck { common, .. } => common,
    };
    let result = match &cli.command {
        Command::Enumerate { common, a, b } => enumerate(common, a.clone(), b.clone()),
        Command::Verify { common, input } => verify(common, input),
        Command::NormalForm { common, element } => normal_form(common, element),
        Command::CenterCheck { common, element } => center_check(common, element),
    };
    match result {
        Ok(outcome) => {
            if let Some(d) = &outcome.diagnostic {
                let _ = writeln!(err, "{d}");
            }
            let written = match &common.out {
                Some(path) => std::fs::write(path, &outcome.text),
                None => out.write_all(outcome.text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_INPUT;
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn split_c(c: &str) -> Vec<String> {
    if c.trim().is_empty() {
        Vec::new()
    } else {
        c.split(';').map(|s| s.trim().to_string()).collect()
    }
}

fn setup(common: &Common, a: Option<String>, b: Option<String>) -> Result<Setup, Failure> {
    let p = common
        .p
        .ok_or_else(|| Failure::input("--p is required"))?;
    Ok(resolve(&SetupSpec {
        p,
        r: common.r,
        t: common.t,
        c: split_c(&common.c),
        a,
        b,
        ext_degree: common.ext_degree,
    })?)
}

fn join<I: IntoIterator<Item = String>>(items: I, sep: &str) -> String {
    items.into_iter().collect::<Vec<_>>().join(sep)
}

fn json_text(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn enumerate(common: &Common, a: Option<String>, b: Option<String>) -> Result<Outcome, Failure> {
    let setup = setup(common, a, b)?;
    let report = classify_all(&setup.params, setup.a, setup.b).map_err(|e| Failure::input(e.to_string()))?;
    let code = if report.all_verified() { EXIT_OK } else { EXIT_MATH };
    let text = match common.format {
        Format::Json => json_text(&report_json(&report)),
        Format::Table => {
            let params = &report.params;
            let ctx = params.ctx();
            let mut s = String::new();
            let _ = writeln!(
                s,
                "field GF({}^{}) modulus [{}]",
                ctx.p(),
                ctx.k(),
                join(ctx.modulus().iter().map(u32::to_string), ", ")
            );
            let _ = writeln!(
                s,
                "r={} t={} c=[{}] epsilon={}",
                params.r(),
                params.t(),
                join(params.c().iter().map(|&e| ctx.format(e)), "; "),
                ctx.format(params.epsilon())
            );
            let _ = writeln!(
                s,
                "a={} b={} classes={} complete={}",
                ctx.format(report.a),
                ctx.format(report.b),
                report.classes.len(),
                if report.complete { "yes" } else { "no" }
            );
            for c in &report.classes {
                let rel = match c.relations.first_failure() {
                    None => "ok".to_string(),
                    Some(f) => format!("FAILED {}", f.name),
                };
                let mult = c
                    .root_multiplicity
                    .map(|m| format!("\tmultiplicity={m}"))
                    .unwrap_or_default();
                let _ = writeln!(
                    s,
                    "{}\tdim={}\tmu=[{}]\trelations={}\tirreducible={}{}",
                    c.label,
                    c.rep.dim(),
                    join(c.rep.mu().iter().map(|&e| ctx.format(e)), "; "),
                    rel,
                    if c.irreducible { "yes" } else { "no" },
                    mult
                );
            }
            s
        }
    };
    let diagnostic = (code != EXIT_OK).then(|| "error: a constructed class failed verification".to_string());
    Ok(Outcome {
        text,
        code,
        diagnostic,
    })
}

fn verify(common: &Common, input: &PathBuf) -> Result<Outcome, Failure> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", input.display())))?;
    let fallback = match common.p {
        Some(_) => Some(setup(common, None, None)?.params),
        None => None,
    };
    let reps: Vec<Representation> = load_representations(&text, fallback.as_ref())?;
    let mut code = EXIT_OK;
    let mut diagnostic = None;
    let mut rows = Vec::new();
    let mut table = String::new();
    for rep in &reps {
        let relations = verify_relations(rep);
        let irreducible = irreducibility(rep).is_irreducible();
        if let Some(f) = relations.first_failure() {
            code = EXIT_MATH;
            let at = f
                .first_failure
                .map(|(r, c)| format!(" at entry ({r}, {c})"))
                .unwrap_or_default();
            diagnostic.get_or_insert_with(|| {
                format!("error: {}: relation {} fails{at}", rep.label(), f.name)
            });
        } else if !irreducible {
            code = EXIT_MATH;
            diagnostic.get_or_insert_with(|| format!("error: {}: not irreducible", rep.label()));
        }
        let rel = match relations.first_failure() {
            None => "ok".to_string(),
            Some(f) => format!("FAILED {}", f.name),
        };
        let _ = writeln!(
            table,
            "{}\tdim={}\trelations={}\tirreducible={}",
            rep.label(),
            rep.dim(),
            rel,
            if irreducible { "yes" } else { "no" }
        );
        rows.push(json!({
            "label": rep.label(),
            "dim": rep.dim(),
            "relations": relations_json(&relations),
            "irreducible": irreducible,
        }));
    }
    let text = match common.format {
        Format::Table => table,
        Format::Json => json_text(&json!({ "ok": code == EXIT_OK, "representations": rows })),
    };
    Ok(Outcome {
        text,
        code,
        diagnostic,
    })
}

fn algebra(common: &Common) -> Result<PbwAlgebra, Failure> {
    Ok(PbwAlgebra::new(setup(common, None, None)?.params))
}

fn normal_form(common: &Common, element: &str) -> Result<Outcome, Failure> {
    let alg = algebra(common)?;
    let e = alg.parse(element)?;
    let nf = alg.format(&e);
    let text = match common.format {
        Format::Table => format!("{nf}\n"),
        Format::Json => json_text(&json!({ "input": element, "normal_form": nf })),
    };
    Ok(Outcome {
        text,
        code: EXIT_OK,
        diagnostic: None,
    })
}

fn center_check(common: &Common, element: &str) -> Result<Outcome, Failure> {
    let alg = algebra(common)?;
    let e = alg.parse(element)?;
    let check = alg.check_central(&e)?;
    let text = match (common.format, &check.witness) {
        (Format::Table, None) => "true\n".to_string(),
        (Format::Table, Some((g, comm))) => {
            format!("false\nwitness: [e, {g}] = {}\n", alg.format(comm))
        }
        (Format::Json, w) => json_text(&json!({
            "element": element,
            "central": check.central,
            "witness": w.as_ref().map(|(g, comm)| json!({
                "generator": g.to_string(),
                "commutator": alg.format(comm),
            })),
        })),
    };
    Ok(Outcome {
        text,
        code: EXIT_OK,
        diagnostic: None,
    })
}
