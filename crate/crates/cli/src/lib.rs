//! The `bomi` command line: check, lint, stats, export and init.
//!
//! Exit codes: 0 clean, 1 findings at or above the configured fail
//! severity, 2 invalid input (parse, resolution, conformance or schema
//! errors, unreadable files), 3 usage or configuration errors. A 2 always
//! wins over a 1.

pub mod questionnaire;

use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use bomi::analysis::{evaluate, AnalysisConfig, Finding, FindingSeverity};
use bomi::diagnostic::{render_diagnostic, Diagnostic};
use bomi::export::{from_json, stats_report, to_dot, to_json, DotStyle, JsonError, StatsFormat};
use bomi::model::{conformance, resolve, BomiModel};
use bomi::syntax::{has_errors, parse_bytes};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    Clean = 0,
    Findings = 1,
    Invalid = 2,
    Usage = 3,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Parser)]
#[command(name = "bomi", version, about = "Model boundary objects and methodological islands, and detect coordination smells")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LintFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StatsOutput {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportTarget {
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse, resolve and check a model against the metamodel.
    Check { file: PathBuf },
    /// Check a model and report coordination smells.
    Lint {
        file: PathBuf,
        /// TOML rule configuration.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: LintFormat,
    },
    /// Print the element census of a model.
    Stats {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "table")]
        format: StatsOutput,
        /// Also print size and coupling metrics.
        #[arg(long)]
        metrics: bool,
    },
    /// Convert a model to Graphviz DOT or canonical JSON.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: ExportTarget,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Fill color of boundary objects (DOT only).
        #[arg(long)]
        bo_fill: Option<String>,
        /// Fill color of methodological islands (DOT only).
        #[arg(long)]
        mi_fill: Option<String>,
        /// Show only element ids (DOT only).
        #[arg(long)]
        no_attributes: bool,
        /// Include attribute notes (DOT only).
        #[arg(long)]
        notes: bool,
        /// Draw usages and governs links as nodes (DOT only).
        #[arg(long)]
        association_nodes: bool,
    },
    /// Build a new model by answering questions about one boundary object.
    Init {
        /// Write the model here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Standard streams plus terminal capabilities.
pub struct Streams<'a> {
    pub stdin: &'a mut dyn BufRead,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
    /// Colorize diagnostics on the error stream.
    pub color: bool,
}

fn paint(d: &Diagnostic, text: String, color: bool) -> String {
    if !color {
        return text;
    }
    let (label, code) = if d.is_error() { ("error:", "31") } else { ("warning:", "33") };
    text.replacen(&format!(" {label} "), &format!(" \x1b[1;{code}m{label}\x1b[0m "), 1)
}

fn report(io: &mut Streams, diags: &[Diagnostic], source: &str) {
    for d in diags {
        let text = paint(d, render_diagnostic(d, source), io.color);
        let _ = writeln!(io.stderr, "{text}");
    }
}

/// Reads and validates a `.bomi` or `.json` model, reporting problems on
/// the error stream.
fn load(io: &mut Streams, path: &Path) -> Result<BomiModel, Exit> {
    let name = path.display().to_string();
    let bytes = fs::read(path).map_err(|e| {
        let _ = writeln!(io.stderr, "error: cannot read {name}: {e}");
        Exit::Invalid
    })?;
    let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let (model, source) = if is_json {
        let text = String::from_utf8_lossy(&bytes).into_owned();
        match from_json(&text, &name) {
            Ok(m) => (m, text),
            Err(JsonError::Resolution(errors)) => {
                for e in errors {
                    let _ = writeln!(io.stderr, "{name}: error: {e}");
                }
                return Err(Exit::Invalid);
            }
            Err(e) => {
                let _ = writeln!(io.stderr, "{name}: error: {e}");
                return Err(Exit::Invalid);
            }
        }
    } else {
        let source = String::from_utf8_lossy(&bytes).into_owned();
        let (ast, diags) = parse_bytes(&bytes, &name);
        report(io, &diags, &source);
        if has_errors(&diags) {
            return Err(Exit::Invalid);
        }
        match resolve(&ast) {
            Ok(m) => (m, source),
            Err(errors) => {
                let diags: Vec<Diagnostic> = errors.iter().map(|e| e.to_diagnostic()).collect();
                report(io, &diags, &source);
                return Err(Exit::Invalid);
            }
        }
    };
    let violations = conformance(&model);
    if !violations.is_empty() {
        let diags: Vec<Diagnostic> = violations.iter().map(|v| v.to_diagnostic()).collect();
        if is_json {
            for d in &diags {
                let _ = writeln!(io.stderr, "{name}: error: {}", d.message);
            }
        } else {
            report(io, &diags, &source);
        }
        return Err(Exit::Invalid);
    }
    Ok(model)
}

fn emit(io: &mut Streams, out: Option<&Path>, text: &str) -> Exit {
    match out {
        None => {
            let _ = io.stdout.write_all(text.as_bytes());
            Exit::Clean
        }
        Some(path) => match fs::write(path, text) {
            Ok(()) => Exit::Clean,
            Err(e) => {
                let _ = writeln!(io.stderr, "error: cannot write {}: {e}", path.display());
                Exit::Invalid
            }
        },
    }
}

fn findings_json(findings: &[Finding]) -> String {
    let list = findings
        .iter()
        .map(|f| {
            let mut m = Map::new();
            m.insert("column".into(), Value::from(f.span.start.col));
            m.insert("file".into(), Value::from(&*f.span.file));
            m.insert("line".into(), Value::from(f.span.start.line));
            m.insert("message".into(), Value::from(f.message.as_str()));
            m.insert("ruleId".into(), Value::from(f.rule_id));
            m.insert("severity".into(), Value::from(f.severity.as_str()));
            m.insert("subject".into(), Value::from(f.subject.as_str()));
            m.insert("subjectId".into(), Value::from(f.subject_id.as_str()));
            Value::Object(m)
        })
        .collect::<Vec<_>>();
    let count = |s| findings.iter().filter(|f| f.severity == s).count();
    let mut summary = Map::new();
    summary.insert("info".into(), Value::from(count(FindingSeverity::Info)));
    summary.insert("warning".into(), Value::from(count(FindingSeverity::Warning)));
    let mut root = Map::new();
    root.insert("findings".into(), Value::Array(list));
    root.insert("summary".into(), Value::Object(summary));
    let mut text = serde_json::to_string_pretty(&Value::Object(root)).expect("JSON values serialize");
    text.push('\n');
    text
}

fn findings_text(findings: &[Finding]) -> String {
    let mut out = String::new();
    for f in findings {
        out.push_str(&format!("{}: {}[{}]: {}\n", f.span, f.severity.as_str(), f.rule_id, f.message));
    }
    let warnings = findings.iter().filter(|f| f.severity == FindingSeverity::Warning).count();
    out.push_str(&format!(
        "{warnings} warning(s), {} info finding(s)\n",
        findings.len() - warnings
    ));
    out
}

fn lint(io: &mut Streams, file: &Path, config: Option<&Path>, format: LintFormat) -> Exit {
    let config = match config {
        None => AnalysisConfig::default(),
        Some(path) => match AnalysisConfig::load(path) {
            Ok(c) => c,
            Err(e) => {
                let _ = writeln!(io.stderr, "error: {}: {e}", path.display());
                return Exit::Usage;
            }
        },
    };
    let model = match load(io, file) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let findings = match evaluate(&model, &config) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            return Exit::Usage;
        }
    };
    let text = match format {
        LintFormat::Text => findings_text(&findings),
        LintFormat::Json => findings_json(&findings),
    };
    let _ = io.stdout.write_all(text.as_bytes());
    if findings.iter().any(|f| f.severity >= config.fail_severity) {
        Exit::Findings
    } else {
        Exit::Clean
    }
}

fn dot_style(
    bo_fill: Option<&str>,
    mi_fill: Option<&str>,
    no_attributes: bool,
    notes: bool,
    association_nodes: bool,
) -> Result<DotStyle, bomi::export::InvalidColor> {
    let mut style = DotStyle::default();
    if let Some(c) = bo_fill {
        style = style.with_bo_fill(c)?;
    }
    if let Some(c) = mi_fill {
        style = style.with_mi_fill(c)?;
    }
    style.show_attributes = !no_attributes;
    style.show_notes = notes;
    style.association_nodes = association_nodes;
    Ok(style)
}

fn init(io: &mut Streams, out: Option<&Path>) -> Exit {
    let ast = {
        let mut prompts = questionnaire::LineIo::new(&mut *io.stdin, &mut *io.stderr);
        questionnaire::run_questionnaire(&mut prompts)
    };
    match ast {
        Ok(ast) => {
            let code = emit(io, out, &questionnaire::render(&ast));
            if let (Exit::Clean, Some(path)) = (code, out) {
                let _ = writeln!(io.stderr, "\nwrote {}", path.display());
            }
            code
        }
        Err(questionnaire::Aborted) => {
            let _ = writeln!(io.stderr, "\naborted, no file written");
            Exit::Usage
        }
    }
}

/// Runs the command line. `args` includes the program name.
pub fn run<I, T>(args: I, io: &mut Streams) -> Exit
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(io.stdout, "{e}");
                    Exit::Clean
                }
                _ => {
                    let _ = write!(io.stderr, "{}", e.render());
                    Exit::Usage
                }
            };
        }
    };
    match cli.command {
        Command::Check { file } => match load(io, &file) {
            Ok(model) => {
                let _ = writeln!(io.stdout, "{}: ok ({} elements)", file.display(), model.census().total());
                Exit::Clean
            }
            Err(code) => code,
        },
        Command::Lint { file, config, format } => lint(io, &file, config.as_deref(), format),
        Command::Stats { file, format, metrics } => match load(io, &file) {
            Ok(model) => {
                let format = match format {
                    StatsOutput::Table => StatsFormat::Table,
                    StatsOutput::Json => StatsFormat::Json,
                };
                let _ = io.stdout.write_all(stats_report(&model, format, metrics).as_bytes());
                Exit::Clean
            }
            Err(code) => code,
        },
        Command::Export {
            file,
            to,
            out,
            bo_fill,
            mi_fill,
            no_attributes,
            notes,
            association_nodes,
        } => {
            let style = match dot_style(bo_fill.as_deref(), mi_fill.as_deref(), no_attributes, notes, association_nodes) {
                Ok(s) => s,
                Err(e) => {
                    let _ = writeln!(io.stderr, "error: {e}");
                    return Exit::Usage;
                }
            };
            let model = match load(io, &file) {
                Ok(m) => m,
                Err(code) => return code,
            };
            let text = match to {
                ExportTarget::Dot => to_dot(&model, &style),
                ExportTarget::Json => to_json(&model),
            };
            emit(io, out.as_deref(), &text)
        }
        Command::Init { out } => init(io, out.as_deref()),
    }
}
