//! `polclass`: command-line front end for the classifiers and the
//! verification harness.
//!
//! Exit codes: 0 on success, 1 on a REJECT outcome under `--strict` or a
//! failed verification run, 2 on malformed input.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use polclass_core::{
    canonical_class, class_group, classify_pair, classify_polarized, delta_genus,
    hirzebruch_case_table, hypothesis_high_nefvalue, make_model, nef_cone, nefvalue, pseff_cone,
    slc_classify, verify_theorems, BoundaryComponent, BoundarySpec, CaseLabel, DivisorClass,
    ModelDescriptor, PairLabel, Rational, SlcLabel, UniverseBounds, VarietyModel,
};

#[derive(Parser)]
#[command(
    name = "polclass",
    version,
    about = "Classify polarized varieties with high nefvalue"
)]
struct Cli {
    /// Print machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when the outcome is REJECT.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a polarized variety (model JSON, optionally with "L").
    Classify {
        /// Inline JSON, a file path, or `-` for stdin.
        input: String,
    },
    /// Classify a log pair: {"model", "boundary", optional "L"}.
    ClassifyPair { input: String },
    /// Glue a split bundle along fibers: {"model", "conductor", optional "pairing"}.
    Slc { input: String },
    /// Canonical class, cones, class group, nefvalue and Δ-genus of a model.
    Inspect { input: String },
    /// Run the verification harness over a bounded universe.
    Verify {
        /// `n_min,n_max,degree_max,coeff_max`.
        #[arg(long, default_value_t = UniverseBounds::default())]
        bounds: UniverseBounds,
    },
    /// Print a reference table.
    Table {
        #[command(subcommand)]
        table: Table,
    },
}

#[derive(Subcommand)]
enum Table {
    /// Prime classes on `P(O(a) ⊕ O(b))` and whether `K + L + D` is pseudo-effective.
    Hirzebruch {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
}

/// Malformed input: reported on stderr with exit status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(err: E) -> Self {
        InputError(err.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

struct Outcome {
    json: Value,
    human: String,
    failed: bool,
}

fn read_input(arg: &str) -> CliResult<Value> {
    let text = if arg == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| InputError(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| InputError(format!("malformed JSON: {e}")))
}

/// Accepts either a bare model descriptor or an object with a `model` key.
fn parse_model(input: &Value) -> CliResult<VarietyModel> {
    let raw = match input.get("model") {
        Some(model) => model.clone(),
        None => input.clone(),
    };
    let descriptor: ModelDescriptor =
        serde_json::from_value(raw).map_err(|e| InputError(format!("malformed model: {e}")))?;
    Ok(make_model(&descriptor)?)
}

/// `L` as a tagged class, a list of integers or `"p/q"` strings in the
/// model's basis, or absent (the tautological polarization).
fn parse_polarization(input: &Value, model: &VarietyModel) -> CliResult<DivisorClass> {
    let Some(raw) = input.get("L") else {
        return Ok(model.tautological());
    };
    match raw {
        Value::Array(items) => {
            let coeffs = items
                .iter()
                .map(|item| match item {
                    Value::Number(n) => n
                        .as_i64()
                        .map(Rational::from_integer)
                        .ok_or_else(|| InputError(format!("non-integral coefficient {n}"))),
                    Value::String(s) => s.parse::<Rational>().map_err(InputError::from),
                    other => Err(InputError(format!("bad coefficient {other}"))),
                })
                .collect::<CliResult<Vec<_>>>()?;
            Ok(model.class(coeffs)?)
        }
        _ => {
            let class: DivisorClass = serde_json::from_value(raw.clone())
                .map_err(|e| InputError(format!("malformed L: {e}")))?;
            Ok(model.to_model_basis(&class)?)
        }
    }
}

fn parse_components(raw: &Value, key: &str) -> CliResult<BoundarySpec> {
    match raw {
        Value::Number(n) => {
            let count = n
                .as_u64()
                .ok_or_else(|| InputError(format!("{key} count must be a non-negative integer")))?;
            Ok(BoundarySpec::fibers(count as usize))
        }
        Value::Array(_) => {
            let components: Vec<BoundaryComponent> = serde_json::from_value(raw.clone())
                .map_err(|e| InputError(format!("malformed {key}: {e}")))?;
            Ok(BoundarySpec::new(components))
        }
        _ => serde_json::from_value(raw.clone())
            .map_err(|e| InputError(format!("malformed {key}: {e}"))),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("reports serialize")
}

fn opt<T: std::fmt::Display>(value: &Option<T>) -> String {
    value.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn classify(input: &Value) -> CliResult<Outcome> {
    let model = parse_model(input)?;
    let l = parse_polarization(input, &model)?;
    let report = classify_polarized(&model, &l)?;
    let mut human = format!(
        "model      {model}\nL          {l}\nlabel      {} {}\nnefvalue   {}\ndelta      {}\nKO         {}\nreason     {}\n",
        report.label,
        report.label.case_number(),
        report.nefvalue,
        opt(&report.delta),
        report.kobayashi_ochiai.map_or("-", |k| k.as_str()),
        opt(&report.reject_reason),
    );
    if let Some(norm) = &report.normalization {
        human.push_str(&format!(
            "normalized twist {} degrees {:?} fiber degree {} residue {}{}\n",
            norm.twist,
            norm.degrees,
            norm.fiber_degree,
            norm.residue,
            if norm.ruling_swapped {
                " (rulings swapped)"
            } else {
                ""
            },
        ));
    }
    if let Some(id) = &report.identified_as {
        human.push_str(&format!("identified {id}\n"));
    }
    Ok(Outcome {
        json: to_json(&report),
        human,
        failed: report.label == CaseLabel::Reject,
    })
}

fn classify_pair_cmd(input: &Value) -> CliResult<Outcome> {
    let model = parse_model(input)?;
    let l = parse_polarization(input, &model)?;
    let boundary = match input.get("boundary") {
        Some(raw) => parse_components(raw, "boundary")?,
        None => BoundarySpec::default(),
    };
    let report = classify_pair(&model, &boundary, &l)?;
    let mut human = format!(
        "model      {model}\nL          {l}\nlabel      {} {}\nboundary   {}\nadjoint    {}\nslope m    {}\nlambda     {}\nreason     {}\n",
        report.label,
        report.label.case_number(),
        opt(&report.boundary_class),
        opt(&report.adjoint_class),
        opt(&report.m_slope),
        opt(&report.lambda),
        opt(&report.reject_reason),
    );
    if let Some(id) = &report.identified_as {
        human.push_str(&format!("identified {id}\n"));
    }
    Ok(Outcome {
        json: to_json(&report),
        human,
        failed: report.label == PairLabel::Reject,
    })
}

fn slc_cmd(input: &Value) -> CliResult<Outcome> {
    let model = parse_model(input)?;
    let conductor = match input.get("conductor") {
        Some(raw) => parse_components(raw, "conductor")?,
        None => return Err(InputError("missing \"conductor\"".into())),
    };
    let pairing: Option<Vec<(usize, usize)>> = match input.get("pairing") {
        Some(raw) => Some(
            serde_json::from_value(raw.clone())
                .map_err(|e| InputError(format!("malformed pairing: {e}")))?,
        ),
        None => None,
    };
    let report = slc_classify(&model, &conductor, pairing.as_deref())?;
    let mut human = format!(
        "model      {model}\nlabel      {}\nconductor  {} fibers, L-degree {}\nreason     {}\n",
        report.label,
        conductor.components.len(),
        report.conductor_degree,
        opt(&report.reject_reason),
    );
    if let Some(glued) = &report.glued {
        human.push_str(&format!(
            "nodes      {}\npairing    {:?}\n",
            glued.node_count, glued.base.pairings
        ));
    }
    Ok(Outcome {
        json: to_json(&report),
        human,
        failed: report.label == SlcLabel::Reject,
    })
}

fn inspect(input: &Value) -> CliResult<Outcome> {
    let model = parse_model(input)?;
    let l = parse_polarization(input, &model)?;
    let k = canonical_class(&model);
    let group = class_group(&model);
    let nef = nef_cone(&model);
    let pseff = pseff_cone(&model);
    let tau = nefvalue(&model, &l)?;
    let hypothesis = hypothesis_high_nefvalue(&model, &l)?;
    // Δ-genus is not defined for every class (e.g. non-Cartier classes)
    let delta = delta_genus(&model, &l).ok();
    let json = json!({
        "model": to_json(&model.descriptor()),
        "dim": model.dim(),
        "L": to_json(&l),
        "canonical_class": to_json(&k),
        "class_group": to_json(&group),
        "nef_cone": to_json(&nef),
        "pseff_cone": to_json(&pseff),
        "nefvalue": to_json(&tau.value),
        "nefvalue_witness": to_json(&tau.witness_ray),
        "hypothesis": hypothesis,
        "delta_genus": delta.as_ref().map(to_json),
    });
    let list = |classes: &[DivisorClass]| {
        classes
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    let human = format!(
        "model      {model}\ndim        {}\nL          {l}\nK          {k}\nclass grp  rank {} [{}]\nnef cone   [{}]\npseff cone [{}]\nnefvalue   {}\nhypothesis {hypothesis}\ndelta      {}\n",
        model.dim(),
        group.rank,
        list(&group.generators),
        list(&nef.generators),
        list(&pseff.generators),
        tau.value,
        delta.map_or_else(|| "-".to_string(), |d| d.delta.to_string()),
    );
    Ok(Outcome {
        json,
        human,
        failed: false,
    })
}

fn verify(bounds: &UniverseBounds) -> CliResult<Outcome> {
    let report = verify_theorems(bounds)?;
    let mut human = format!(
        "bounds     {}\nmodels     {}\nhypothesis {}\n",
        report.bounds, report.total_models, report.hypothesis_count
    );
    for (label, count) in &report.label_histogram {
        human.push_str(&format!("  {label:<8} {count}\n"));
    }
    human.push_str(&format!("failures   {}\n", report.failures.len()));
    for failure in &report.failures {
        human.push_str(&format!(
            "  [{}] {}: expected {}, got {}\n",
            failure.check, failure.input, failure.expected, failure.actual
        ));
    }
    human.push_str(&format!(
        "elapsed    {:.3}s\n",
        report.elapsed.as_secs_f64()
    ));
    Ok(Outcome {
        json: to_json(&report),
        human,
        failed: !report.passed(),
    })
}

fn hirzebruch(a: i64, b: i64) -> CliResult<Outcome> {
    let rows = hirzebruch_case_table(a, b)?;
    let mut human = format!(
        "P(O({a}) ⊕ O({b})), e = {}\ncase  x  d'  K+L+D        non-pseff\n",
        a - b
    );
    for row in &rows {
        human.push_str(&format!(
            "{:<5} {:<2} {:<3} {:<12} {}\n",
            format!("({})", row.case_tag.tag()),
            row.x,
            row.d,
            row.k_plus_l_plus_d.to_string(),
            row.non_pseff
        ));
    }
    Ok(Outcome {
        json: to_json(&rows),
        human,
        failed: false,
    })
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Classify { input } => classify(&read_input(input)?),
        Command::ClassifyPair { input } => classify_pair_cmd(&read_input(input)?),
        Command::Slc { input } => slc_cmd(&read_input(input)?),
        Command::Inspect { input } => inspect(&read_input(input)?),
        Command::Verify { bounds } => verify(bounds),
        Command::Table {
            table: Table::Hirzebruch { a, b },
        } => hirzebruch(*a, *b),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if err.use_stderr() => {
            let _ = err.print();
            return ExitCode::from(2);
        }
        Err(err) => {
            let _ = err.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("json")
                );
            } else {
                print!("{}", outcome.human);
            }
            let verify = matches!(cli.command, Command::Verify { .. });
            if outcome.failed && (cli.strict || verify) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {}", msg.replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
