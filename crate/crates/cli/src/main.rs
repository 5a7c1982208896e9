//! `bihomega`: check, construct and search BiHom-Ω-algebras from `.bho` files.
//!
//! Exit status is 0 when everything checked passes, 1 when a checker found
//! violations (witnesses go to standard output) and 2 on usage, parse or
//! resolution errors.

mod params;
mod render;

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bihomega_core::algebra::{AlgebraInstance, LinearFamily, RotaBaxterFamily};
use bihomega_core::checkers::{check_instance, check_rota_baxter};
use bihomega_core::constructions::{self as cons, ConstructOptions, Constructed, ConstructionError, CONSTRUCTIONS};
use bihomega_core::dsl::{parse_workspace, serialize_workspace, Workspace, WorkspaceError};
use bihomega_core::forge::{
    brute_force_rb_search, describe_params, two_dim_instance, validate_two_dim_params, ForgeError, QReading,
    SearchConfig, TwoDimExampleParams, DEFAULT_BUDGET,
};
use bihomega_core::linalg::{format_rational, parse_rational, Rational};
use bihomega_core::report::{CheckConfig, Verdict, DEFAULT_MAX_WITNESSES};
use bihomega_core::semigroup::validate_semigroup;
use clap::builder::RangedU64ValueParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use render::Subject;

#[derive(Parser)]
#[command(name = "bihomega", version, about = "Exact checks and constructions for BiHom-Omega-algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every semigroup and algebra in a workspace.
    Check(CheckArgs),
    /// Apply a construction to an algebra and write the result.
    Construct(ConstructArgs),
    /// Enumerate Rota-Baxter families with small entries.
    SearchRb(SearchArgs),
    /// Build a shipped example.
    Example {
        #[command(subcommand)]
        which: ExampleCommand,
    },
    /// Rewrite a workspace in canonical form.
    Fmt(FmtArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    /// Workspace file (`-` for standard input).
    workspace: PathBuf,
    /// Only report axioms whose name contains this text.
    #[arg(long, value_name = "NAME")]
    axiom: Option<String>,
    /// Only check this algebra.
    #[arg(long, value_name = "NAME")]
    algebra: Option<String>,
    /// Also check this Rota-Baxter family against the selected algebra.
    #[arg(long, value_name = "NAME", requires = "algebra")]
    rb: Option<String>,
    #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_WITNESSES, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    max_witnesses: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ConstructArgs {
    /// yau_twist, rb_star_associative, dendriform_total, rb_split_dendriform,
    /// dendriform_to_prelie, assoc_as_prelie, prelie_to_lie, assoc_to_lie,
    /// rb_bracket_lie, rb_lie_to_prelie, postlie_to_lie or lie_rb_to_postlie.
    #[arg(value_name = "CONSTRUCTION")]
    construction: String,
    /// Workspace holding the input algebra and any families.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,
    /// Input algebra; optional when the workspace has exactly one.
    #[arg(long, value_name = "NAME")]
    select: Option<String>,
    /// Rota-Baxter family from the input workspace.
    #[arg(long, value_name = "NAME")]
    rb: Option<String>,
    /// First twisting family for `yau_twist` (identity when omitted).
    #[arg(long, value_name = "NAME")]
    p2: Option<String>,
    /// Second twisting family for `yau_twist` (identity when omitted).
    #[arg(long, value_name = "NAME")]
    q2: Option<String>,
    /// Name of the output algebra.
    #[arg(long = "as", value_name = "NAME")]
    output_name: Option<String>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Skip the post-check of the output.
    #[arg(long)]
    unchecked: bool,
    #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_WITNESSES, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    max_witnesses: usize,
}

#[derive(Args)]
struct SearchArgs {
    /// Workspace holding the algebra.
    #[arg(long, value_name = "FILE")]
    algebra: PathBuf,
    /// Algebra to search over; optional when the workspace has exactly one.
    #[arg(long, value_name = "NAME")]
    select: Option<String>,
    /// Comma-separated matrix entries to try.
    #[arg(long, value_name = "LIST", default_value = "-1,0,1", allow_hyphen_values = true)]
    entries: String,
    #[arg(long, value_name = "RATIONAL", default_value = "0", allow_hyphen_values = true)]
    weight: String,
    /// Keep only the first N families found.
    #[arg(long, value_name = "N")]
    limit: Option<usize>,
    /// Largest candidate space to enumerate.
    #[arg(long, value_name = "N", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ExampleCommand {
    /// The two-dimensional BiHom-Omega-associative example, in both readings of q(e2).
    TwoDim(TwoDimArgs),
}

#[derive(Args)]
struct TwoDimArgs {
    /// JSON parameter file; all parameters one over C2 when omitted.
    #[arg(long, value_name = "FILE")]
    params: Option<PathBuf>,
    /// Build and check even when a side condition fails.
    #[arg(long)]
    unchecked: bool,
    #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_WITNESSES, value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    max_witnesses: usize,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FmtArgs {
    /// Workspace file (`-` for standard input).
    workspace: PathBuf,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

/// Exit status of a command that ran to completion; errors exit 2.
type Outcome = Result<u8, String>;

fn read_input(path: &Path) -> Result<String, String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("cannot read standard input: {e}"))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| format!("cannot read `{}`: {e}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write `{}`: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// `file:line:col: message` with the offending source line and a caret.
fn located(path: &Path, text: &str, line: usize, col: usize, msg: &str) -> String {
    let src = text.lines().nth(line.saturating_sub(1)).unwrap_or("");
    let caret: String = src
        .chars()
        .take(col.saturating_sub(1))
        .map(|c| if c == '\t' { '\t' } else { ' ' })
        .collect();
    let pad = " ".repeat(line.to_string().len());
    format!(
        "{}:{line}:{col}: {msg}\n{pad} |\n{line} | {src}\n{pad} | {caret}^",
        path.display()
    )
}

fn load(path: &Path) -> Result<Workspace, String> {
    let text = read_input(path)?;
    parse_workspace(&text).map_err(|e| match e {
        WorkspaceError::Parse(p) => located(
            path,
            &text,
            p.line,
            p.column,
            &format!("expected {}, found {}", p.expected, p.found),
        ),
        WorkspaceError::Resolution(r) => located(path, &text, r.line, r.column, &r.message),
        other => other.to_string(),
    })
}

fn select<'a>(ws: &'a Workspace, name: Option<&str>) -> Result<(&'a str, &'a AlgebraInstance), String> {
    match name {
        Some(n) => ws
            .algebras
            .get_key_value(n)
            .map(|(k, a)| (k.as_str(), a))
            .ok_or_else(|| format!("no algebra named `{n}`")),
        None => match ws.algebras.len() {
            1 => {
                let (k, a) = ws.algebras.iter().next().expect("one entry");
                Ok((k.as_str(), a))
            }
            0 => Err("the workspace has no algebra".into()),
            _ => Err(format!(
                "the workspace has several algebras; pick one with --select ({})",
                ws.algebras.keys().cloned().collect::<Vec<_>>().join(", ")
            )),
        },
    }
}

fn algebra_title(name: &str, a: &AlgebraInstance) -> String {
    format!("algebra {name} ({} over {}, dim {})", a.kind(), a.omega().name(), a.dim())
}

fn cmd_check(args: CheckArgs) -> Outcome {
    let ws = load(&args.workspace)?;
    let cfg = CheckConfig::with_max_witnesses(args.max_witnesses);
    let mut subjects = Vec::new();
    match &args.algebra {
        Some(name) => {
            let a = ws.algebra(name).map_err(|e| e.to_string())?;
            subjects.push(Subject {
                title: algebra_title(name, a),
                omega: a.omega(),
                elementwise: false,
                outcome: check_instance(a, &cfg).map_err(|e| e.to_string()),
            });
            if let Some(rb) = &args.rb {
                let r = ws.rb_family(rb).map_err(|e| e.to_string())?;
                if !r.maps.same_shape(a.p()) {
                    return Err(format!("family `{rb}` does not match the shape of algebra `{name}`"));
                }
                subjects.push(Subject {
                    title: format!(
                        "rota-baxter {rb} (weight {}) on {name}",
                        format_rational(&r.weight)
                    ),
                    omega: a.omega(),
                    elementwise: false,
                    outcome: check_rota_baxter(a, r, &cfg).map_err(|e| e.to_string()),
                });
            }
        }
        None => {
            for t in ws.semigroups.values() {
                subjects.push(Subject {
                    title: format!("semigroup {}", t.name()),
                    omega: t,
                    elementwise: true,
                    outcome: Ok(validate_semigroup(t, &cfg)),
                });
            }
            let verdicts: Vec<_> = ws
                .algebras
                .par_iter()
                .map(|(name, a)| (name, a, check_instance(a, &cfg).map_err(|e| e.to_string())))
                .collect();
            for (name, a, outcome) in verdicts {
                subjects.push(Subject {
                    title: algebra_title(name, a),
                    omega: a.omega(),
                    elementwise: false,
                    outcome,
                });
            }
        }
    }
    if let Some(needle) = &args.axiom {
        for s in &mut subjects {
            if let Ok(v) = &s.outcome {
                s.outcome = Ok(v.filter_axiom(needle));
            }
        }
        subjects.retain(|s| s.outcome.as_ref().map_or(true, |v| !v.reports.is_empty()));
        if subjects.is_empty() {
            return Err(format!("no axiom matches `{needle}`"));
        }
    }
    let out = match args.format {
        Format::Text => render::text(&subjects),
        Format::Json => render::json(&subjects),
    };
    print!("{out}");
    Ok(if subjects.iter().all(Subject::passed) { 0 } else { 1 })
}

fn verdict_text(title: &str, a: &AlgebraInstance, v: &Verdict) -> String {
    let mut out = String::new();
    render::subject_text(
        &mut out,
        &Subject {
            title: title.into(),
            omega: a.omega(),
            elementwise: false,
            outcome: Ok(v.clone()),
        },
    );
    out
}

const NEEDS_RB: [&str; 5] = [
    "rb_star_associative",
    "rb_split_dendriform",
    "rb_bracket_lie",
    "rb_lie_to_prelie",
    "lie_rb_to_postlie",
];

fn run_construction(
    name: &str,
    a: &AlgebraInstance,
    rb: Option<&RotaBaxterFamily>,
    p2: &LinearFamily,
    q2: &LinearFamily,
    opts: &ConstructOptions,
) -> Result<Constructed, ConstructionError> {
    let r = || rb.expect("checked by caller");
    match name {
        "yau_twist" => cons::yau_twist(a, p2, q2, opts),
        "rb_star_associative" => cons::rb_star_associative(a, r(), opts),
        "dendriform_total" => cons::dendriform_total(a, opts),
        "rb_split_dendriform" => cons::rb_split_dendriform(a, r(), opts),
        "dendriform_to_prelie" => cons::dendriform_to_prelie(a, opts),
        "assoc_as_prelie" => cons::assoc_as_prelie(a, opts),
        "prelie_to_lie" => cons::prelie_to_lie(a, opts),
        "assoc_to_lie" => cons::assoc_to_lie(a, opts),
        "rb_bracket_lie" => cons::rb_bracket_lie(a, r(), opts),
        "rb_lie_to_prelie" => cons::rb_lie_to_prelie(a, r(), opts),
        "postlie_to_lie" => cons::postlie_to_lie(a, opts),
        "lie_rb_to_postlie" => cons::lie_rb_to_postlie(a, r(), opts),
        _ => unreachable!("validated by caller"),
    }
}

fn cmd_construct(args: ConstructArgs) -> Outcome {
    let name = args.construction.as_str();
    if !CONSTRUCTIONS.contains(&name) {
        return Err(format!(
            "unknown construction `{name}` (expected one of: {})",
            CONSTRUCTIONS.join(", ")
        ));
    }
    let needs_rb = NEEDS_RB.contains(&name);
    match (&args.rb, needs_rb) {
        (None, true) => return Err(format!("`{name}` needs --rb")),
        (Some(_), false) => return Err(format!("`{name}` takes no --rb")),
        _ => {}
    }
    if name != "yau_twist" && (args.p2.is_some() || args.q2.is_some()) {
        return Err(format!("`{name}` takes no --p2/--q2"));
    }
    let ws = load(&args.input)?;
    let (input_name, a) = select(&ws, args.select.as_deref())?;
    let rb = match &args.rb {
        Some(n) => {
            let r = ws.rb_family(n).map_err(|e| e.to_string())?;
            if !r.maps.same_shape(a.p()) {
                return Err(format!("family `{n}` does not match the shape of algebra `{input_name}`"));
            }
            Some(r)
        }
        None => None,
    };
    let family = |n: &Option<String>| -> Result<LinearFamily, String> {
        match n {
            Some(n) => ws.linear_family(n).cloned().map_err(|e| e.to_string()),
            None => Ok(LinearFamily::identity(a.omega().clone(), a.dim())),
        }
    };
    let (p2, q2) = (family(&args.p2)?, family(&args.q2)?);
    let opts = ConstructOptions {
        unchecked: args.unchecked,
        cfg: CheckConfig::with_max_witnesses(args.max_witnesses),
    };
    let built = match run_construction(name, a, rb, &p2, &q2, &opts) {
        Ok(c) => c,
        Err(e) => {
            let verdict = match &e {
                ConstructionError::PreconditionCheckFailed { verdict, .. }
                | ConstructionError::PostconditionFailed { verdict, .. }
                | ConstructionError::MorphismCheckFailed { verdict, .. } => verdict,
                _ => return Err(e.to_string()),
            };
            print!("{e}\n{}", verdict_text(&verdict.subject, a, verdict));
            return Ok(1);
        }
    };
    let out_name = args.output_name.unwrap_or_else(|| format!("{input_name}_{name}"));
    let mut out_ws = Workspace::new();
    out_ws.add_algebra(&out_name, built.instance).map_err(|e| e.to_string())?;
    let prov = &built.provenance;
    let mut text = format!("# construction: {}\n", prov.construction);
    for d in &prov.inputs {
        let _ = writeln!(text, "# input: sha256:{d}");
    }
    if let Some(w) = &prov.weight {
        let _ = writeln!(text, "# weight: {}", format_rational(w));
    }
    let _ = writeln!(text, "# post-check: {}", if args.unchecked { "skipped" } else { "passed" });
    text.push_str(&serialize_workspace(&out_ws));
    emit(args.out.as_deref(), &text)?;
    if let Some(p) = &args.out {
        println!("wrote algebra {out_name} to {}", p.display());
    }
    Ok(0)
}

fn parse_scalar(s: &str, what: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("{what}: `{s}` is not a rational number"))
}

fn cmd_search(args: SearchArgs) -> Outcome {
    let entries = args
        .entries
        .split(',')
        .map(|s| parse_scalar(s, "--entries"))
        .collect::<Result<Vec<_>, _>>()?;
    let weight = parse_scalar(&args.weight, "--weight")?;
    let ws = load(&args.algebra)?;
    let (name, a) = select(&ws, args.select.as_deref())?;
    let pre = check_instance(a, &CheckConfig::default()).map_err(|e| e.to_string())?;
    if !pre.passed() {
        print!("search-rb: input fails its checker\n{}", verdict_text(&algebra_title(name, a), a, &pre));
        return Ok(1);
    }
    let cfg = SearchConfig {
        entries: entries.clone(),
        weight: weight.clone(),
        target: args.limit,
        budget: args.budget,
        ..SearchConfig::default()
    };
    let found = brute_force_rb_search(a, &cfg).map_err(|e| match e {
        ForgeError::BudgetExceeded { space, budget } => {
            format!("search space has {space} candidates, over the budget of {budget} (raise --budget)")
        }
        other => other.to_string(),
    })?;
    let width = found.len().saturating_sub(1).to_string().len();
    let mut out_ws = Workspace::new();
    out_ws.add_algebra(name, a.clone()).map_err(|e| e.to_string())?;
    for (k, r) in found.iter().enumerate() {
        out_ws
            .add_rota_baxter(&format!("{name}_rb{k:0width$}"), r.clone())
            .map_err(|e| e.to_string())?;
    }
    let list: Vec<_> = entries.iter().map(format_rational).collect();
    let mut text = format!(
        "# search-rb: algebra {name}, weight {}, entries {}\n# found: {}\n",
        format_rational(&weight),
        list.join(","),
        found.len()
    );
    text.push_str(&serialize_workspace(&out_ws));
    emit(args.out.as_deref(), &text)?;
    if let Some(p) = &args.out {
        println!("found {} families; wrote {}", found.len(), p.display());
    }
    Ok(0)
}

fn cmd_two_dim(args: TwoDimArgs) -> Outcome {
    let params = match &args.params {
        Some(p) => params::parse(&read_input(p)?).map_err(|e| format!("{}: {e}", p.display()))?,
        None => TwoDimExampleParams::ones(bihomega_core::forge::semigroups::c2()),
    };
    let mut text = format!("# two-dim example over {}: {}\n", params.omega.name(), describe_params(&params));
    match validate_two_dim_params(&params) {
        Ok(()) => text.push_str("# side conditions: hold\n"),
        Err(ForgeError::ConditionViolated { condition, indices }) => {
            let line = format!("side condition `{condition}` fails at ({})", indices.join(","));
            if !args.unchecked {
                println!("rejected: {line}");
                return Ok(1);
            }
            let _ = writeln!(text, "# side conditions: {line}");
        }
        Err(e) => return Err(e.to_string()),
    }
    let cfg = CheckConfig::with_max_witnesses(args.max_witnesses);
    let mut ws = Workspace::new();
    let mut all_pass = true;
    let mut failures = String::new();
    for reading in QReading::BOTH {
        let a = two_dim_instance(&params, reading).map_err(|e| e.to_string())?;
        let v = check_instance(&a, &cfg).map_err(|e| e.to_string())?;
        let name = format!("two_dim_{}", reading.short());
        let _ = writeln!(
            text,
            "# reading {}: {}",
            reading.label(),
            if v.passed() { "pass" } else { "FAIL" }
        );
        if !v.passed() {
            all_pass = false;
            failures.push_str(&verdict_text(&algebra_title(&name, &a), &a, &v));
        }
        ws.add_algebra(&name, a).map_err(|e| e.to_string())?;
    }
    text.push_str(&serialize_workspace(&ws));
    emit(args.out.as_deref(), &text)?;
    if let Some(p) = &args.out {
        println!("wrote {}", p.display());
    }
    print!("{failures}");
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_fmt(args: FmtArgs) -> Outcome {
    let ws = load(&args.workspace)?;
    emit(args.out.as_deref(), &serialize_workspace(&ws))?;
    Ok(0)
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("BIHOMEGA_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("BIHOMEGA_THREADS must be a positive integer, got `{v}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Construct(a) => cmd_construct(a),
        Command::SearchRb(a) => cmd_search(a),
        Command::Example {
            which: ExampleCommand::TwoDim(a),
        } => cmd_two_dim(a),
        Command::Fmt(a) => cmd_fmt(a),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
