//! Command implementations behind the `skewpos` binary.

use std::collections::BTreeMap;
use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use skewpos::braid::beta;
use skewpos::cluster::{box_labels, quiver, seed_at};
use skewpos::linalg::format_rat;
use skewpos::permutations::{baf, necklace};
use skewpos::plabic::{render_ascii, source_labels, trip_permutation, trips};
use skewpos::splicing::{a_factors, column_is_frozen, in_u_a, phi, verify_all};
use skewpos::variety::{membership, necklace_of_point, omega, sample, xi, PointJson, DEFAULT_BOUND};
use skewpos::{BoxRef, PointV, SkewDiagram};

pub mod suite;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Property(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Property(_) => EXIT_PROPERTY,
        }
    }
}

impl From<skewpos::Error> for CliError {
    fn from(e: skewpos::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "skewpos", version, about = "Skew shaped positroid varieties: invariants, points, splicing")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Diagram as a JSON file, inline JSON, or one of `running`, `intro`, `ex38`.
    #[arg(long, global = true)]
    pub diagram: Option<String>,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Coefficient bound for sampling.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    pub bound: i64,
    #[arg(long, global = true, default_value_t = 50)]
    pub trials: usize,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Labels, necklace, permutation, braid, ribbon and quiver summary.
    Inspect,
    /// Random exact point of the variety.
    Sample {
        /// Scale so that the top-of-column minors equal 1.
        #[arg(long)]
        normalize_r1: bool,
    },
    /// Split a point along a column.
    Splice {
        #[arg(long)]
        column: usize,
        /// Point JSON file; sampled from `--seed` when absent.
        #[arg(long)]
        point: Option<String>,
    },
    /// Randomized property suite.
    Verify {
        #[arg(long, value_enum)]
        only: Option<suite::Property>,
        #[arg(long)]
        column: Option<usize>,
        /// Perturb one matrix entry of every sampled point.
        #[arg(long)]
        inject_fault: bool,
    },
    /// Initial quiver as JSON or DOT.
    Quiver,
    /// Trips, trip permutation and source labels.
    Plabic,
    /// Mutate the initial seed of a point at a sequence of boxes `a,i`.
    Mutate {
        #[arg(long = "box", value_parser = parse_box, required = true)]
        boxes: Vec<BoxRef>,
        #[arg(long)]
        point: Option<String>,
    },
}

fn parse_box(s: &str) -> Result<BoxRef, String> {
    let (a, i) = s.split_once(',').ok_or_else(|| format!("expected a,i, got {s}"))?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x}: {e}"));
    Ok(BoxRef::new(p(a)?, p(i)?))
}

pub fn preset(name: &str) -> Option<SkewDiagram> {
    let (n, k, l, m): (usize, usize, Vec<usize>, Vec<usize>) = match name {
        "running" => (12, 5, vec![7, 7, 5, 3, 1], vec![3, 3, 2]),
        "intro" => (12, 5, vec![7, 7, 5, 3, 1], vec![3, 1]),
        "ex38" => (9, 4, vec![5, 5, 2, 2], vec![3, 3]),
        _ => return None,
    };
    SkewDiagram::from_parts(n, k, l, m).ok()
}

pub fn load_diagram(arg: &str) -> Result<SkewDiagram, CliError> {
    if let Some(d) = preset(arg) {
        return Ok(d);
    }
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| CliError::Input(format!("{arg}: {e}")))?
    };
    Ok(SkewDiagram::from_json(&text)?)
}

fn require_diagram(g: &Global) -> Result<SkewDiagram, CliError> {
    let arg = g.diagram.as_deref().ok_or_else(|| CliError::Input("--diagram is required".into()))?;
    load_diagram(arg)
}

/// Loads a point and re-checks membership.
pub fn load_point(path: &str) -> Result<PointV, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let raw: PointJson = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    let p = PointV::from_json(&raw)?;
    if !membership(p.matrix(), p.diagram()) {
        return Err(CliError::Input(format!("{path}: point does not lie on {}", p.diagram())));
    }
    Ok(p)
}

fn point_or_sample(g: &Global, path: Option<&str>) -> Result<PointV, CliError> {
    match path {
        Some(p) => load_point(p),
        None => Ok(sample(&require_diagram(g)?, g.seed, g.bound, false)?),
    }
}

fn check_config(g: &Global) -> Result<(), CliError> {
    if g.trials < 1 {
        return Err(CliError::Input("--trials must be at least 1".into()));
    }
    if g.bound < 2 {
        return Err(CliError::Input("--bound must be at least 2".into()));
    }
    Ok(())
}

pub fn point_json(p: &PointV) -> Value {
    serde_json::to_value(p.to_json()).expect("point serializes")
}

fn set_json(s: &[usize]) -> Value {
    json!(s)
}

pub fn inspect(d: &SkewDiagram) -> Result<Value, CliError> {
    let mut labels = BTreeMap::new();
    for b in d.boxes() {
        labels.insert(
            b.to_string(),
            json!({"long": d.long_label(b)?, "short": d.short_label(b)?, "frozen": d.is_frozen(b)}),
        );
    }
    let neck = necklace(d);
    let (word, crossings) = beta(d);
    let rib = d.ribbon();
    let boxes = |s: &std::collections::BTreeSet<BoxRef>| -> Vec<String> { s.iter().map(|b| b.to_string()).collect() };
    let q = quiver(d);
    Ok(json!({
        "diagram": d.to_json(),
        "i_mu": set_json(&d.i_mu()),
        "i_lambda": set_json(&d.i_lambda()),
        "labels": labels,
        "necklace": neck.entries(),
        "f": baf(d).window(),
        "braid": {
            "k": word.k,
            "letters": word.letters,
            "columns": word.columns,
            "text": word.to_string(),
            "crossings": crossings.boxes.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        },
        "ribbon": {"r": boxes(&rib.r), "rbar": boxes(&rib.rbar), "r1": boxes(&rib.r1)},
        "quiver": {
            "vertices": q.vertices().len(),
            "frozen": q.frozen().len(),
            "mutable": q.mutable().iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "arrows": q.arrows().len(),
        },
    }))
}

pub fn splice(p: &PointV, a: usize) -> Result<Value, CliError> {
    let d = p.diagram();
    d.check_column(a)?;
    if !in_u_a(p, a)? {
        // Reproduce the library error, which names the vanishing minor.
        skewpos::splicing::require_u_a(p, a)?;
    }
    let (vl, vr) = phi(p, a)?;
    let factors: BTreeMap<String, String> =
        a_factors(p, a)?.iter().map(|(t, x)| (t.to_string(), format_rat(x))).collect();
    Ok(json!({
        "column": a,
        "column_in_ribbon": column_is_frozen(d, a),
        "left": point_json(&vl),
        "right": point_json(&vr),
        "a_factors": factors,
        "left_member": membership(vl.matrix(), vl.diagram()),
        "right_member": membership(vr.matrix(), vr.diagram()),
    }))
}

pub fn plabic(d: &SkewDiagram) -> Result<Value, CliError> {
    let ts = trips(d)?;
    let tp = trip_permutation(d)?;
    let sl = source_labels(d)?;
    let labels: BTreeMap<String, &Vec<usize>> = sl.boxes.iter().map(|(b, l)| (b.to_string(), l)).collect();
    Ok(json!({
        "trips": ts.iter().map(|t| json!({
            "source": t.source,
            "target": t.target,
            "orientation": t.orientation,
            "points": t.points,
            "labeled": t.labeled.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "labels_mu_region": t.labels_mu_region,
        })).collect::<Vec<_>>(),
        "permutation": tp,
        "labels": labels,
        "mu_region": sl.mu_region,
    }))
}

pub fn mutate(p: &PointV, boxes: &[BoxRef]) -> Result<Value, CliError> {
    let mut s = seed_at(p)?;
    for &b in boxes {
        s = s.mutate(b)?;
    }
    let labels = box_labels(p.diagram());
    Ok(json!({
        "sequence": boxes.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
        "values": s.values_json(),
        "quiver": s.quiver.to_json(&labels),
    }))
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

/// Runs a parsed command; returns the text to emit and the exit code.
pub fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let g = &cli.global;
    check_config(g)?;
    let text = match &cli.command {
        Command::Inspect => render(&inspect(&require_diagram(g)?)?),
        Command::Sample { normalize_r1 } => {
            let d = require_diagram(g)?;
            let p = sample(&d, g.seed, g.bound, *normalize_r1)?;
            render(&point_json(&p))
        }
        Command::Splice { column, point } => render(&splice(&point_or_sample(g, point.as_deref())?, *column)?),
        Command::Quiver => {
            let d = require_diagram(g)?;
            let q = quiver(&d);
            let labels = box_labels(&d);
            match g.format {
                Format::Dot => q.to_dot(&labels),
                _ => render(&q.to_json(&labels)),
            }
        }
        Command::Plabic => {
            let d = require_diagram(g)?;
            match g.format {
                Format::Text => render_ascii(&d, &source_labels(&d)?),
                _ => render(&plabic(&d)?),
            }
        }
        Command::Mutate { boxes, point } => render(&mutate(&point_or_sample(g, point.as_deref())?, boxes)?),
        Command::Verify { only, column, inject_fault } => {
            let fixed = g.diagram.as_deref().map(load_diagram).transpose()?;
            let cfg = suite::SuiteConfig {
                seed: g.seed,
                bound: g.bound,
                trials: g.trials,
                diagram: fixed,
                column: *column,
                only: *only,
                inject_fault: *inject_fault,
            };
            let rep = suite::run(&cfg);
            let code = if rep.passed() { EXIT_PASS } else { EXIT_PROPERTY };
            return Ok((render(&rep.to_json()), code));
        }
    };
    Ok((text, EXIT_PASS))
}

/// Shared by the binary and the unit tests.
pub fn main_with(args: impl IntoIterator<Item = String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    match run(&cli) {
        Ok((text, code)) => {
            if let Some(path) = &cli.global.out {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: {path}: {e}");
                    return EXIT_INPUT;
                }
            } else {
                print!("{text}");
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Greedy and exhaustive necklaces of a point agree.
pub fn necklace_oracle_agrees(p: &PointV) -> bool {
    let greedy = match necklace_of_point(p.matrix()) {
        Ok(n) => n,
        Err(_) => return false,
    };
    suite::exhaustive_necklace(p).as_deref() == Some(greedy.entries())
}

/// Derives an independent stream for trial `t`.
pub fn trial_rng(seed: u64, t: usize) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(t as u64 + 1);
    r
}

pub fn trial_seed(seed: u64, t: usize) -> u64 {
    trial_rng(seed, t).gen()
}

#[doc(hidden)]
pub fn roundtrip_ok(p: &PointV) -> bool {
    omega(p).and_then(|l| xi(&l, p.diagram())).map(|q| q.matrix() == p.matrix()).unwrap_or(false)
}

#[doc(hidden)]
pub fn splice_reports(p: &PointV, a: usize) -> skewpos::Result<BTreeMap<&'static str, skewpos::splicing::Report>> {
    verify_all(p, a)
}
