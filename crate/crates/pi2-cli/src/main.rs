//! Command-line interface: evaluate programs, print their permutations,
//! canonicalize boolean programs with proof witnesses, decide
//! equivalence, replay derivation files, and run the round-trip suite.
//!
//! Exit codes: 0 on success, 1 on a domain failure (ill-typed program,
//! inequivalent programs, failing derivation), 2 on usage or parse
//! errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pi2::library::{self, Library};
use pi2::parse;
use pi2::pretty::pretty_with_names;
use pi2::rewrite::{check_derivation, notopt, Derivation};
use pi2::semantics::{enumerate, eval, eval_rev, to_perm};
use pi2::sexpr::comb2_to_sexpr;
use pi2::suite::{run_roundtrip_suite, SuiteConfig};
use pi2::syntax::Comb;
use pi2::theory::{canonical, check2, complete1, Comb1};

#[derive(Parser)]
#[command(
    name = "pi2",
    version,
    about = "Reversible combinator toolkit over finite types"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct ProgramSource {
    /// Program file (.pi); its `main` is used
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
    /// Inline program text instead of a file
    #[arg(short = 'e', long = "expr", value_name = "COMB", conflicts_with = "file")]
    expr: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a program on a value (optionally backwards)
    Run {
        /// Input value, e.g. '(1b,(1b,0b))'
        #[arg(value_name = "VALUE")]
        value: String,
        #[command(flatten)]
        source: ProgramSource,
        /// Run the inverse bijection
        #[arg(long)]
        backward: bool,
    },
    /// Print the permutation a program denotes
    Perm {
        #[command(flatten)]
        source: ProgramSource,
    },
    /// Canonicalize a boolean program, with a checked proof witness
    Canon {
        #[command(flatten)]
        source: ProgramSource,
    },
    /// Decide extensional equivalence of two programs
    Equiv {
        /// Program files; combine with -e to supply programs inline
        #[arg(value_name = "FILE")]
        files: Vec<PathBuf>,
        /// Inline program text (repeatable); inline programs come first
        #[arg(short = 'e', long = "expr", value_name = "COMB")]
        exprs: Vec<String>,
    },
    /// Replay-check a derivation file (.pid)
    Check {
        #[arg(value_name = "FILE")]
        file: PathBuf,
    },
    /// Run the syntax/model round-trip verification suite
    Roundtrip {
        /// Exhaustive bound on term size
        #[arg(long = "max-size", default_value_t = 7)]
        max_size: usize,
    },
    /// Deterministic tour: toffoli table, canonicalization, derivation replay
    Demo,
}

enum CliError {
    /// Usage or parse failure: exit 2.
    Usage(String),
    /// Domain failure (ill-typed, mismatch, failing check): exit 1.
    Domain(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_program(source: &ProgramSource) -> Result<Comb, CliError> {
    match (&source.expr, &source.file) {
        (Some(text), None) => {
            parse::parse_comb(text).map_err(|e| CliError::Usage(format!("parse error: {e}")))
        }
        (None, Some(path)) => {
            let text = read_file(path)?;
            let program = parse::parse_program(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            program.main.ok_or_else(|| {
                CliError::Usage(format!("{}: file defines no main program", path.display()))
            })
        }
        _ => Err(CliError::Usage(
            "provide exactly one program: a file or -e <COMB>".to_string(),
        )),
    }
}

/// The name table used when printing derivation traces: just the gates,
/// so rewritten structure stays visible while `not` prints compactly.
fn gate_names() -> Library {
    let mut lib = Library::default();
    for name in ["not", "cnot", "toffoli"] {
        let def = library::builtin_library().get(name).cloned().expect("builtin");
        lib.define(name, def).expect("distinct names");
    }
    lib
}

fn cmd_run(value: &str, source: &ProgramSource, backward: bool) -> Result<String, CliError> {
    let program = load_program(source)?;
    let input =
        parse::parse_value(value).map_err(|e| CliError::Usage(format!("value error: {e}")))?;
    let result = if backward {
        eval_rev(&program, &input)
    } else {
        eval(&program, &input)
    };
    let out = result.map_err(|e| CliError::Domain(e.to_string()))?;
    Ok(format!("{out}\n"))
}

fn cmd_perm(source: &ProgramSource) -> Result<String, CliError> {
    let program = load_program(source)?;
    let perm = to_perm(&program).map_err(|e| CliError::Domain(e.to_string()))?;
    let mut out = String::new();
    for i in 0..perm.len() {
        out.push_str(&format!("{i} -> {}\n", perm.image(i)));
    }
    out.push_str(&format!("cycles: {}\n", perm.cycles()));
    Ok(out)
}

fn cmd_canon(source: &ProgramSource) -> Result<String, CliError> {
    let program = load_program(source)?;
    let term = Comb1::from_extended(&program).map_err(|e| CliError::Domain(e.to_string()))?;
    let form = canonical(&term);
    check2(&form.witness)
        .map_err(|e| CliError::Domain(format!("internal error: witness fails: {e}")))?;
    Ok(format!(
        "{}\n{}\nchecked: ok\n",
        form.which,
        comb2_to_sexpr(&form.witness)
    ))
}

fn cmd_equiv(files: &[PathBuf], exprs: &[String]) -> Result<(String, bool), CliError> {
    let mut programs = Vec::new();
    for text in exprs {
        programs
            .push(parse::parse_comb(text).map_err(|e| CliError::Usage(format!("parse error: {e}")))?);
    }
    for path in files {
        programs.push(load_program(&ProgramSource {
            file: Some(path.clone()),
            expr: None,
        })?);
    }
    if programs.len() != 2 {
        return Err(CliError::Usage(format!(
            "equiv takes exactly two programs, got {}",
            programs.len()
        )));
    }
    let equal = pi2::semantics::semantically_equal(&programs[0], &programs[1])
        .map_err(|e| CliError::Domain(e.to_string()))?;
    let mut out = format!("equivalent: {equal}\n");
    if let (Ok(p), Ok(q)) = (
        Comb1::from_extended(&programs[0]),
        Comb1::from_extended(&programs[1]),
    ) {
        match complete1(&p, &q) {
            Ok(witness) => {
                check2(&witness)
                    .map_err(|e| CliError::Domain(format!("internal error: {e}")))?;
                out.push_str(&format!("witness: {}\n", comb2_to_sexpr(&witness)));
            }
            Err(_) => out.push_str("no witness exists (classes differ)\n"),
        }
    }
    Ok((out, equal))
}

fn render_derivation(name: &str, d: &Derivation) -> Result<String, CliError> {
    let full = library::builtin_library();
    let gates = gate_names();
    let mut out = format!(
        "derivation {name} : {} => {}\n",
        pretty_with_names(&d.start, &full),
        pretty_with_names(&d.claimed_end, &full)
    );
    match check_derivation(d) {
        Ok(trace) => {
            out.push_str(&format!("  [0] {}\n", pretty_with_names(&trace[0], &gates)));
            for (i, step) in d.steps.iter().enumerate() {
                out.push_str(&format!(
                    "  [{}] {step} -> {}\n",
                    i + 1,
                    pretty_with_names(&trace[i + 1], &gates)
                ));
            }
            out.push_str("ok\n");
            Ok(out)
        }
        Err(e) => Err(CliError::Domain(format!("{out}failed: {e}"))),
    }
}

fn cmd_check(path: &Path) -> Result<String, CliError> {
    let text = read_file(path)?;
    let (name, derivation) = parse::parse_derivation(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    render_derivation(&name, &derivation)
}

fn cmd_roundtrip(max_size: usize) -> Result<(String, bool), CliError> {
    let cfg = SuiteConfig {
        max_size,
        ..SuiteConfig::default()
    };
    let report = run_roundtrip_suite(&cfg);
    let mut out = format!(
        "round-trip suite (max size {}, {} random samples, seed {})\n",
        cfg.max_size, cfg.random_samples, cfg.seed
    );
    for s in &report.sections {
        out.push_str(&format!(
            "  {}: {} checked, {} failures\n",
            s.name, s.checked, s.failures
        ));
        for f in &s.sample_failures {
            out.push_str(&format!("    {f}\n"));
        }
    }
    if report.passed() {
        out.push_str(&format!(
            "all sections passed ({} checks)\n",
            report.total_checked()
        ));
    } else {
        out.push_str("FAILED\n");
    }
    Ok((out, report.passed()))
}

fn cmd_demo() -> Result<String, CliError> {
    let mut out = String::new();
    out.push_str("== toffoli truth table ==\n");
    let toffoli = library::toffoli();
    let (dom, _) = pi2::infer::infer(&toffoli).map_err(|e| CliError::Domain(e.to_string()))?;
    for v in enumerate(&dom) {
        let w = eval(&toffoli, &v).map_err(|e| CliError::Domain(e.to_string()))?;
        out.push_str(&format!("{v} -> {w}\n"));
    }
    out.push_str("\n== canonical form of not ; not ==\n");
    out.push_str(&cmd_canon(&ProgramSource {
        file: None,
        expr: Some("not ; not".to_string()),
    })?);
    out.push_str("\n== derivation notOpt ==\n");
    out.push_str(&render_derivation("notOpt", &notopt())?);
    Ok(out)
}

fn dispatch(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Cmd::Run {
            value,
            source,
            backward,
        } => cmd_run(&value, &source, backward).map(|s| (s, true)),
        Cmd::Perm { source } => cmd_perm(&source).map(|s| (s, true)),
        Cmd::Canon { source } => cmd_canon(&source).map(|s| (s, true)),
        Cmd::Equiv { files, exprs } => cmd_equiv(&files, &exprs),
        Cmd::Check { file } => cmd_check(&file).map(|s| (s, true)),
        Cmd::Roundtrip { max_size } => cmd_roundtrip(max_size),
        Cmd::Demo => cmd_demo().map(|s| (s, true)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok((output, success)) => {
            print!("{output}");
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
