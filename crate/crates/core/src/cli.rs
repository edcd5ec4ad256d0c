//! `wanas` command-line interface. Parsing and printing only; all
//! computation lives in the library modules.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog::{Catalog, GroupId};
use crate::exactalg::{Polynomial, Rational};
use crate::geometry::{
    matrix_json, render_connection_text, render_matrix_text, render_torsion_text, render_trilinear_text, table3_json,
    table4_json, Components, ConnectionKind, Pipeline, ProductStructure,
};
use crate::liealg::{evaluate_spec, validate_assignment, LieAlgebraSpec, LieError, ParameterAssignment, SpecFile};
use crate::soliton::{soliton_decide, SolitonKind};
use crate::verify::{check_jacobi, classify_grid, verify_paper, GridSpec, Verdict, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "wanas", version, about = "Canonical-connection Wanas tensors and algebraic Wanas solitons on 3-dimensional Lorentzian Lie groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a tensor, symbolically or at a parameter point.
    Tensors(TensorsArgs),
    /// Decide solitonhood at a parameter point.
    Check(CheckArgs),
    /// Compare computed verdicts with the theorem over a parameter grid.
    Classify(ClassifyArgs),
    /// Reproduce every display and theorem for the catalog groups.
    VerifyPaper(VerifyArgs),
    /// Check the Jacobi identity of a bracket table.
    Jacobi(JacobiArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Catalog group, g1 .. g7.
    #[arg(long, value_parser = parse_group)]
    group: Option<GroupId>,
    /// JSON bracket table for an algebra outside the catalog.
    #[arg(long, value_name = "PATH")]
    spec_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TensorsArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum, default_value = "canonical")]
    connection: ConnectionArg,
    #[arg(long, value_enum, default_value = "all")]
    tensor: TensorArg,
    /// Parameter point, e.g. alpha=1,beta=-1/2.
    #[arg(long, value_name = "ASSIGNMENT")]
    at: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long, value_name = "ASSIGNMENT")]
    at: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long, value_parser = parse_group)]
    group: GroupId,
    #[arg(long, value_enum, default_value = "both")]
    kind: KindsArg,
    /// Comma-separated rationals replacing the default ladder.
    #[arg(long, value_name = "LIST", value_parser = parse_ladder)]
    grid_ladder: Option<Ladder>,
    #[arg(long)]
    json: bool,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Restrict to these groups (repeatable).
    #[arg(long, value_parser = parse_group)]
    group: Vec<GroupId>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_name = "LIST", value_parser = parse_ladder)]
    grid_ladder: Option<Ladder>,
    /// Print the JSON report instead of the text summary.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct JacobiArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ConnectionArg {
    Canonical,
    LeviCivita,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TensorArg {
    Connection,
    Torsion,
    Curvature,
    ATensor,
    Wanas,
    Abar,
    Ric,
    Wan,
    WanTilde,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    First,
    Second,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindsArg {
    First,
    Second,
    Both,
}

impl From<KindArg> for SolitonKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::First => SolitonKind::First,
            KindArg::Second => SolitonKind::Second,
        }
    }
}

fn parse_group(s: &str) -> Result<GroupId, String> {
    s.parse().map_err(|e: crate::catalog::CatalogError| e.to_string())
}

#[derive(Clone, Debug)]
struct Ladder(Vec<Rational>);

fn parse_ladder(s: &str) -> Result<Ladder, String> {
    let v: Vec<Rational> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Rational>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    if v.is_empty() {
        return Err("empty ladder".into());
    }
    Ok(Ladder(v))
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type Outcome = Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn print(&mut self, s: &str) -> Result<(), Failure> {
        self.out.write_all(s.as_bytes()).map_err(|e| Failure { code: EXIT_FAIL, message: e.to_string() })
    }

    fn json(&mut self, v: &serde_json::Value) -> Result<(), Failure> {
        let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
        s.push('\n');
        self.print(&s)
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let catalog = match Catalog::load() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut io = Io { out };
    let result = match cli.command {
        Command::Tensors(a) => cmd_tensors(&catalog, a, &mut io),
        Command::Check(a) => cmd_check(&catalog, a, &mut io),
        Command::Classify(a) => cmd_classify(&catalog, a, &mut io),
        Command::VerifyPaper(a) => cmd_verify_paper(&catalog, a, &mut io),
        Command::Jacobi(a) => cmd_jacobi(&catalog, a, &mut io),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load_spec(catalog: &Catalog, source: &Source) -> Result<(String, LieAlgebraSpec), Failure> {
    match (&source.group, &source.spec_file) {
        (Some(id), _) => Ok((id.to_string(), catalog.get_group(*id).spec.clone())),
        (None, Some(path)) => Ok((path.display().to_string(), read_spec_file(path)?)),
        (None, None) => Err(usage("one of --group or --spec-file is required")),
    }
}

fn read_spec_file(path: &Path) -> Result<LieAlgebraSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let file: SpecFile =
        serde_json::from_str(&text).map_err(|e| usage(format!("invalid spec file {}: {e}", path.display())))?;
    file.to_spec(&|_| None).map_err(|e| usage(format!("invalid spec file {}: {e}", path.display())))
}

fn parse_point(spec: &LieAlgebraSpec, at: &str) -> Result<ParameterAssignment, Failure> {
    let sigma = ParameterAssignment::parse(at).map_err(|e| usage(format!("--at: {e}")))?;
    let violations = validate_assignment(spec, &sigma).map_err(|e| usage(format!("--at: {e}")))?;
    if !violations.is_empty() {
        return Err(usage(format!("--at: {}", LieError::InvalidAssignment(violations))));
    }
    Ok(sigma)
}

fn cmd_tensors(catalog: &Catalog, a: TensorsArgs, io: &mut Io) -> Outcome {
    let (label, spec) = load_spec(catalog, &a.source)?;
    let sigma = a.at.as_deref().map(|s| parse_point(&spec, s)).transpose()?;
    let kind = match a.connection {
        ConnectionArg::Canonical => ConnectionKind::Canonical,
        ConnectionArg::LeviCivita => ConnectionKind::LeviCivita,
    };
    let mut pipe = Pipeline::compute(&spec, &ProductStructure::standard(), kind);
    if let Some(s) = &sigma {
        let v = s.values();
        pipe = Pipeline {
            connection: pipe.connection.substitute_values(v),
            torsion: pipe.torsion.substitute_values(v),
            curvature: pipe.curvature.substitute_values(v),
            a_tensor: pipe.a_tensor.substitute_values(v),
            wanas: pipe.wanas.substitute_values(v),
            ric: pipe.ric.substitute_values(v),
            abar: pipe.abar.substitute_values(v),
            wan: pipe.wan.substitute_values(v),
            wan_tilde: pipe.wan_tilde.substitute_values(v),
        };
    }

    let all = [
        TensorArg::Connection,
        TensorArg::Torsion,
        TensorArg::Curvature,
        TensorArg::ATensor,
        TensorArg::Wanas,
        TensorArg::Abar,
        TensorArg::Ric,
        TensorArg::Wan,
        TensorArg::WanTilde,
    ];
    let which: Vec<TensorArg> = if a.tensor == TensorArg::All { all.to_vec() } else { vec![a.tensor] };
    let name = |t: TensorArg| t.to_possible_value().expect("no skipped variants").get_name().to_string();

    if a.json {
        let mut tensors = serde_json::Map::new();
        for t in &which {
            let v = match t {
                TensorArg::Connection => table3_json(&pipe.connection.gamma),
                TensorArg::Torsion => table3_json(&pipe.torsion.t),
                TensorArg::Curvature => table4_json(&pipe.curvature.r),
                TensorArg::ATensor => table4_json(&pipe.a_tensor.k),
                TensorArg::Wanas => table4_json(&pipe.wanas.k),
                TensorArg::Abar => matrix_json(&pipe.abar),
                TensorArg::Ric => matrix_json(&pipe.ric),
                TensorArg::Wan => matrix_json(&pipe.wan),
                TensorArg::WanTilde => matrix_json(&pipe.wan_tilde),
                TensorArg::All => unreachable!(),
            };
            tensors.insert(name(*t), v);
        }
        io.json(&json!({
            "algebra": label,
            "connection": name_of_connection(a.connection),
            "at": sigma,
            "tensors": tensors,
        }))?;
        return Ok(EXIT_OK);
    }

    let mut text = String::new();
    for (n, t) in which.iter().enumerate() {
        if which.len() > 1 {
            if n > 0 {
                text.push('\n');
            }
            text.push_str(&format!("# {}\n", name(*t)));
        }
        text.push_str(&match t {
            TensorArg::Connection => render_connection_text(&pipe.connection),
            TensorArg::Torsion => render_torsion_text(&pipe.torsion),
            TensorArg::Curvature => render_trilinear_text("R", &pipe.curvature.clone().into()),
            TensorArg::ATensor => render_trilinear_text("A", &pipe.a_tensor),
            TensorArg::Wanas => render_trilinear_text("W", &pipe.wanas),
            TensorArg::Abar => render_matrix_text(&pipe.abar),
            TensorArg::Ric => render_matrix_text(&pipe.ric),
            TensorArg::Wan => render_matrix_text(&pipe.wan),
            TensorArg::WanTilde => render_matrix_text(&pipe.wan_tilde),
            TensorArg::All => unreachable!(),
        });
    }
    io.print(&text)?;
    Ok(EXIT_OK)
}

fn name_of_connection(c: ConnectionArg) -> &'static str {
    match c {
        ConnectionArg::Canonical => "canonical",
        ConnectionArg::LeviCivita => "levi-civita",
    }
}

fn cmd_check(catalog: &Catalog, a: CheckArgs, io: &mut Io) -> Outcome {
    let (label, spec) = load_spec(catalog, &a.source)?;
    let sigma = parse_point(&spec, &a.at)?;
    let numeric = evaluate_spec(&spec, &sigma).map_err(|e| usage(e.to_string()))?;
    let kind: SolitonKind = a.kind.into();
    let verdict = soliton_decide(&numeric, kind, &Pipeline::canonical(&numeric))
        .map_err(|e| Failure { code: EXIT_FAIL, message: e.to_string() })?;
    if a.json {
        io.json(&json!({ "algebra": label, "kind": kind, "at": sigma, "verdict": verdict }))?;
    } else {
        io.print(&format!("{label} {kind} kind at {sigma}\n{}", verdict.to_text()))?;
    }
    Ok(EXIT_OK)
}

fn grid_from(ladder: Option<Ladder>) -> GridSpec {
    ladder.map(|l| GridSpec::with_ladder(l.0)).unwrap_or_default()
}

fn write_out(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn cmd_classify(catalog: &Catalog, a: ClassifyArgs, io: &mut Io) -> Outcome {
    let grid = grid_from(a.grid_ladder);
    let kinds: Vec<SolitonKind> = match a.kind {
        KindsArg::First => vec![SolitonKind::First],
        KindsArg::Second => vec![SolitonKind::Second],
        KindsArg::Both => SolitonKind::BOTH.to_vec(),
    };
    let reports: Vec<_> = kinds.iter().map(|&k| classify_grid(catalog, a.group, k, &grid)).collect();
    let disagree: usize = reports.iter().map(|r| r.disagree).sum();
    let doc = serde_json::to_value(&reports).expect("report serializes");
    if let Some(path) = &a.out {
        let mut s = serde_json::to_string_pretty(&doc).expect("json value serializes");
        s.push('\n');
        write_out(path, &s)?;
    }
    if a.json {
        io.json(&doc)?;
    } else {
        let mut text = String::new();
        for r in &reports {
            let outcomes: Vec<String> = r.outcomes.iter().map(|(k, v)| format!("{k} {v}")).collect();
            text.push_str(&format!(
                "{} {} kind: {} points, {} agree, {} disagree ({})\n",
                r.group,
                r.kind,
                r.total,
                r.agree,
                r.disagree,
                outcomes.join(", ")
            ));
            for p in r.points.iter().filter(|p| !p.agree) {
                let show = |v: &Option<crate::soliton::SolitonVerdict>| {
                    v.as_ref().map_or("error".to_string(), |v| v.outcome().to_string())
                };
                text.push_str(&format!(
                    "  disagree at {}: computed {}, expected {}{}\n",
                    p.sigma,
                    show(&p.computed),
                    show(&p.expected),
                    p.error.as_ref().map(|e| format!(" ({e})")).unwrap_or_default()
                ));
            }
        }
        io.print(&text)?;
    }
    Ok(if disagree == 0 { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_verify_paper(catalog: &Catalog, a: VerifyArgs, io: &mut Io) -> Outcome {
    let opts = VerifyOptions {
        groups: if a.group.is_empty() { GroupId::ALL.to_vec() } else { a.group },
        grid: grid_from(a.grid_ladder),
    };
    let report = verify_paper(catalog, &opts);
    if let Some(path) = &a.out {
        write_out(path, &report.to_json())?;
    }
    if a.json {
        io.print(&report.to_json())?;
    } else {
        io.print(&report.to_text())?;
    }
    Ok(report.exit_code())
}

fn cmd_jacobi(catalog: &Catalog, a: JacobiArgs, io: &mut Io) -> Outcome {
    let (label, spec) = load_spec(catalog, &a.source)?;
    let check = check_jacobi(&spec);
    if a.json {
        io.json(&json!({ "algebra": label, "jacobi": check }))?;
    } else {
        let residual: Vec<String> = check.residual.iter().map(Polynomial::to_string).collect();
        let verdict = match check.verdict {
            Verdict::Match => "holds identically",
            Verdict::MatchOnVariety => "holds on the constraint variety",
            Verdict::Mismatch => "FAILS",
        };
        io.print(&format!("{label}: Jacobi identity {verdict}\nresidual = ({})\n", residual.join(", ")))?;
    }
    Ok(if check.verdict == Verdict::Mismatch { EXIT_FAIL } else { EXIT_OK })
}
