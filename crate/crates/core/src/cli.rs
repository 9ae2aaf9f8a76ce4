//! The `unaware` command line.
//!
//! Exit codes: `0` success (all properties hold, chain preserved or
//! trivially consistent, counterexample found for `fuzz`), `1` a property
//! fails or a chain breaks, `2` usage or input errors, `3` no
//! counterexample found by `fuzz`.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::fuzz::{fuzz, Finding, FuzzConfig, FuzzTarget};
use crate::io::render::{event_json, fixpoint_json, report_json, witness_text};
use crate::io::{
    generate_model, parse_event, parse_model, render_fixpoint, render_model, render_reports,
    render_trace, Diagnostic, Family, Format, GeneratorParams,
};
use crate::model::Model;
use crate::operators::{know, not_know, unaware, OperatorKind};
use crate::properties::{check_property, Budget, PropertyId, DEFAULT_SAMPLES};
use crate::space::Event;
use crate::trace::{trace_revised_chain, trace_standard_chain, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_NOT_FOUND: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "unaware",
    version,
    about = "Model checker for knowledge and unawareness operators"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Structured => Format::Structured,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Std,
    Rev,
}

impl From<KindArg> for OperatorKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Std => OperatorKind::Standard,
            KindArg::Rev => OperatorKind::Revised,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ChainArg {
    Dlr,
    Rdlr,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Know,
    NotKnow,
    Unaware,
}

fn parse_op(s: &str) -> Result<(Op, OperatorKind), String> {
    use OperatorKind::*;
    Ok(match s {
        "K" => (Op::Know, Standard),
        "K'" | "Krev" => (Op::Know, Revised),
        "negK" => (Op::NotKnow, Standard),
        "negK'" | "negKrev" => (Op::NotKnow, Revised),
        "U" => (Op::Unaware, Standard),
        "U'" | "Urev" => (Op::Unaware, Revised),
        _ => {
            return Err(format!(
                "unknown operator {s:?} (expected K, K', negK, negK', U or U')"
            ))
        }
    })
}

fn parse_property(s: &str) -> Result<PropertyId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

#[derive(Debug, Args)]
struct ModelArg {
    /// Model file, or `-` for standard input.
    model: PathBuf,
}

#[derive(Debug, Args)]
struct SampleArgs {
    /// Events sampled when a space is too large for exhaustive checks.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Seed for sampled checks.
    #[arg(long = "sample-seed", default_value_t = 0)]
    sample_seed: u64,
}

impl SampleArgs {
    fn budget(&self) -> Budget {
        Budget::Auto {
            samples: self.samples,
            seed: self.sample_seed,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply one operator to an event.
    Eval {
        #[command(flatten)]
        model: ModelArg,
        /// K, K', negK, negK', U or U' (Krev, negKrev, Urev also accepted).
        #[arg(long, value_parser = parse_op)]
        op: (Op, OperatorKind),
        /// Event literal, e.g. "{a,b}".
        #[arg(long)]
        event: String,
        /// Print the fixpoint iterates for U and U'.
        #[arg(long)]
        verbose: bool,
    },
    /// Check catalog properties.
    Check {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Property to check; repeatable. Defaults to the whole catalog.
        #[arg(long = "property", value_parser = parse_property)]
        properties: Vec<PropertyId>,
        #[command(flatten)]
        sampling: SampleArgs,
    },
    /// Trace the impossibility chain (dlr) or its revised form (rdlr).
    Trace {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_enum)]
        chain: ChainArg,
        /// Starting event; required for dlr, rejected for rdlr.
        #[arg(long)]
        event: Option<String>,
    },
    /// Print a random model.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long)]
        seed: u64,
    },
    /// Search random models for a counterexample.
    Fuzz {
        #[arg(long)]
        models: usize,
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Property that must hold; repeatable.
        #[arg(long = "property", value_parser = parse_property, required_unless_present = "dlr", conflicts_with = "dlr")]
        properties: Vec<PropertyId>,
        /// Look for a model satisfying necessitation, KU introspection and
        /// AU introspection that still has nonempty unawareness.
        #[arg(long)]
        dlr: bool,
        #[command(flatten)]
        sampling: SampleArgs,
    },
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    states: usize,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long = "p-empty", default_value_t = 0.0)]
    p_empty: f64,
    #[arg(long, value_parser = parse_family, default_value = "general")]
    family: Family,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Failure already reported to standard error.
struct Reported;

type Outcome = Result<i32, Reported>;

impl Io<'_> {
    fn fail(&mut self, message: impl std::fmt::Display) -> Reported {
        let _ = writeln!(self.err, "error: {message}");
        Reported
    }

    fn emit(&mut self, text: &str) -> Result<(), Reported> {
        self.out.write_all(text.as_bytes()).map_err(|e| {
            let _ = writeln!(self.err, "error: writing output: {e}");
            Reported
        })
    }

    fn diagnostics(&mut self, source: &str, diags: &[Diagnostic]) -> Reported {
        for d in diags {
            let _ = writeln!(self.err, "{source}:{d}");
        }
        Reported
    }

    fn load(&mut self, path: &PathBuf) -> Result<Model, Reported> {
        let (name, text) = if path.as_os_str() == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| self.fail(format!("reading standard input: {e}")))?;
            ("<stdin>".to_string(), s)
        } else {
            let s = std::fs::read_to_string(path)
                .map_err(|e| self.fail(format!("reading {}: {e}", path.display())))?;
            (path.display().to_string(), s)
        };
        parse_model(&text).map_err(|d| self.diagnostics(&name, &d))
    }

    fn event(&mut self, model: &Model, text: &str) -> Result<Event, Reported> {
        parse_event(model.space(), text).map_err(|d| self.diagnostics("--event", &d))
    }
}

/// Runs the command line with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_ERROR
                }
            };
        }
    };
    let mut io = Io { stdin, out, err };
    dispatch(cli, &mut io).unwrap_or(EXIT_ERROR)
}

fn dispatch(cli: Cli, io: &mut Io) -> Outcome {
    let format = Format::from(cli.format);
    match cli.command {
        Command::Eval {
            model,
            op,
            event,
            verbose,
        } => eval(io, format, &model.model, op, &event, verbose),
        Command::Check {
            model,
            kind,
            properties,
            sampling,
        } => check(
            io,
            format,
            &model.model,
            kind.into(),
            properties,
            sampling.budget(),
        ),
        Command::Trace {
            model,
            chain,
            event,
        } => trace(io, format, &model.model, chain, event),
        Command::Gen { gen, seed } => {
            let params = gen_params(&gen, seed);
            let model = generate_model(&params).map_err(|e| io.fail(e))?;
            io.emit(&render_model(&model))?;
            Ok(EXIT_OK)
        }
        Command::Fuzz {
            models,
            gen,
            seed,
            kind,
            properties,
            dlr,
            sampling,
        } => {
            let target = if dlr {
                FuzzTarget::Dlr
            } else {
                FuzzTarget::Violation(properties)
            };
            let config = FuzzConfig {
                models,
                n_states: gen.states,
                seed,
                kind: kind.into(),
                target,
                family: gen.family,
                density: gen.density,
                p_empty: gen.p_empty,
                budget: sampling.budget(),
            };
            run_fuzz(io, format, &config)
        }
    }
}

fn gen_params(gen: &GenArgs, seed: u64) -> GeneratorParams {
    GeneratorParams {
        n_states: gen.states,
        density: gen.density,
        p_empty: gen.p_empty,
        family: gen.family,
        seed,
    }
}

fn eval(
    io: &mut Io,
    format: Format,
    path: &PathBuf,
    (op, kind): (Op, OperatorKind),
    event: &str,
    verbose: bool,
) -> Outcome {
    let model = io.load(path)?;
    let e = io.event(&model, event)?;
    let space = model.space();
    let (result, trace) = match op {
        Op::Know => (know(&model, kind, e), None),
        Op::NotKnow => (not_know(&model, kind, e), None),
        Op::Unaware => match unaware(&model, kind, e) {
            Ok((u, t)) => (Ok(u), Some(t)),
            Err(err) => (Err(err), None),
        },
    };
    let result = result.map_err(|err| io.fail(err))?;
    let text = match format {
        Format::Text => {
            let mut s = format!("{}\n", space.format_event(result));
            if let (true, Some(t)) = (verbose, &trace) {
                s.push_str(&render_fixpoint(space, t));
            }
            s
        }
        Format::Structured => {
            let mut doc = json!({
                "format": crate::io::render::FORMAT_VERSION,
                "kind": kind.as_str(),
                "event": event_json(space, e),
                "result": event_json(space, result),
            });
            if let (true, Some(t)) = (verbose, &trace) {
                doc["trace"] = fixpoint_json(space, t);
            }
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    };
    io.emit(&text)?;
    Ok(EXIT_OK)
}

fn check(
    io: &mut Io,
    format: Format,
    path: &PathBuf,
    kind: OperatorKind,
    mut properties: Vec<PropertyId>,
    budget: Budget,
) -> Outcome {
    let model = io.load(path)?;
    if properties.is_empty() {
        properties = PropertyId::ALL.to_vec();
    }
    let reports = properties
        .iter()
        .map(|&p| check_property(&model, kind, p, budget))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| io.fail(e))?;
    io.emit(&render_reports(model.space(), &reports, format))?;
    Ok(if reports.iter().all(|r| r.holds) {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}

fn trace(
    io: &mut Io,
    format: Format,
    path: &PathBuf,
    chain: ChainArg,
    event: Option<String>,
) -> Outcome {
    let model = io.load(path)?;
    let t = match (chain, event) {
        (ChainArg::Dlr, Some(text)) => {
            let e = io.event(&model, &text)?;
            trace_standard_chain(&model, e).map_err(|err| io.fail(err))?
        }
        (ChainArg::Dlr, None) => return Err(io.fail("--chain dlr requires --event")),
        (ChainArg::Rdlr, None) => trace_revised_chain(&model),
        (ChainArg::Rdlr, Some(_)) => return Err(io.fail("--chain rdlr takes no --event")),
    };
    io.emit(&render_trace(model.space(), &t, format))?;
    Ok(match t.verdict {
        Verdict::Preserved | Verdict::TriviallyConsistent => EXIT_OK,
        Verdict::Contradiction | Verdict::BrokenAt { .. } => EXIT_FAIL,
    })
}

fn run_fuzz(io: &mut Io, format: Format, config: &FuzzConfig) -> Outcome {
    let found = fuzz(config).map_err(|e| io.fail(e))?;
    let Some(cx) = found else {
        let _ = writeln!(io.err, "no counterexample in {} models", config.models);
        if format == Format::Structured {
            io.emit(&format!(
                "{}\n",
                serde_json::to_string_pretty(&json!({
                    "format": crate::io::render::FORMAT_VERSION,
                    "found": false,
                    "models": config.models,
                }))
                .unwrap()
            ))?;
        }
        return Ok(EXIT_NOT_FOUND);
    };
    let space = cx.model.space();
    let text = match format {
        Format::Text => {
            let mut s = format!("# counterexample: model {} (seed {})\n", cx.index, cx.seed);
            match &cx.finding {
                Finding::Violation(r) => {
                    let w = r.witness.as_ref().expect("failed report has a witness");
                    s.push_str(&format!(
                        "# {} ({}) fails: {}\n",
                        r.property,
                        r.kind,
                        witness_text(space, w)
                    ));
                }
                Finding::NontrivialUnawareness { event, value, .. } => {
                    s.push_str(&format!(
                        "# premises hold, yet U({}) = {}\n",
                        space.format_event(*event),
                        space.format_event(*value)
                    ));
                }
            }
            s.push_str(&render_model(&cx.model));
            s
        }
        Format::Structured => {
            let mut doc = json!({
                "format": crate::io::render::FORMAT_VERSION,
                "found": true,
                "index": cx.index,
                "seed": cx.seed,
                "model": render_model(&cx.model),
            });
            match &cx.finding {
                Finding::Violation(r) => doc["report"] = report_json(space, r),
                Finding::NontrivialUnawareness {
                    premises,
                    event,
                    value,
                    ..
                } => {
                    doc["premises"] = premises.iter().map(|r| report_json(space, r)).collect();
                    doc["event"] = event_json(space, *event);
                    doc["unawareness"] = event_json(space, *value);
                }
            }
            format!("{}\n", serde_json::to_string_pretty(&doc).unwrap())
        }
    };
    io.emit(&text)?;
    Ok(EXIT_OK)
}
