//! Command-line front end. Every command is a thin wrapper over library calls.
//!
//! Exit codes: 0 success, 1 a verified claim failed, 2 usage or parameter
//! error, 3 I/O or malformed input, 4 enumeration guard exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::code::{CodeError, DistanceMode};
use crate::gf::{Elem, Field, GfError};
use crate::recipe::{self, CodeFile, Recipe, RecipeError, RecipeFamily};
use crate::search::{self, EtaRange, ExampleId, ExampleReport, SearchError, SearchSpec};
use crate::trs::{Family, TrsError};

#[derive(Debug, Parser)]
#[command(name = "trs-hull", version, about = "Twisted Reed-Solomon codes with one-dimensional hull")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a code from a recipe and write it as JSON.
    Construct(ConstructArgs),
    /// Report hull dimension, MDS status, distance and Schur certificate of a code file.
    Analyze(AnalyzeArgs),
    /// Sweep η for a one-hull family and write `<out>.json` and `<out>.csv`.
    Sweep(SweepArgs),
    /// Re-derive the claims of the worked examples.
    VerifyPaper(VerifyArgs),
    /// Describe a field: modulus, primitive element and subfields.
    FieldInfo(FieldInfoArgs),
}

#[derive(Debug, clap::Args)]
struct ConstructArgs {
    #[arg(long, value_parser = parse_recipe_family)]
    family: RecipeFamily,
    #[arg(long)]
    field: String,
    /// Order of the subfield holding the evaluation points (lemma families).
    #[arg(long)]
    subfield: Option<u64>,
    #[arg(long)]
    k: usize,
    #[arg(long, required_if_eq_any([("family", "lemma31"), ("family", "lemma32"), ("family", "trs")]))]
    t: Option<usize>,
    #[arg(long, required_if_eq_any([("family", "lemma31"), ("family", "lemma32"), ("family", "trs")]))]
    h: Option<usize>,
    /// Element as `0`, `g^i`, `poly:d0,..` or an integer encoding.
    #[arg(long, required_if_eq_any([("family", "lemma31"), ("family", "lemma32"), ("family", "trs")]))]
    eta: Option<String>,
    /// Comma-separated evaluation points.
    #[arg(long)]
    alpha: Option<String>,
    /// Comma-separated column multipliers (grs).
    #[arg(long)]
    v: Option<String>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, clap::Args)]
struct AnalyzeArgs {
    path: PathBuf,
    /// Enumerate codewords even when the MDS certificate applies.
    #[arg(long)]
    min_distance: bool,
    #[arg(long, conflicts_with_all = ["csv", "format"])]
    json: bool,
    #[arg(long, conflicts_with = "format")]
    csv: bool,
    #[arg(long, value_enum)]
    format: Option<ReportFormat>,
}

#[derive(Debug, clap::Args)]
struct SweepArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    field: String,
    #[arg(long)]
    subfield: Option<u64>,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    h: usize,
    /// `all`, `outside` (F_q \ F_s) or `list:e1,e2,...`; defaults to `outside` with a subfield.
    #[arg(long)]
    eta_range: Option<String>,
    /// Output stem; `.json` and `.csv` are appended.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    /// E351, E352, E361, E362 or all.
    #[arg(long, default_value = "all")]
    example: String,
    /// Field representation to use instead of the default modulus.
    #[arg(long)]
    field: Option<String>,
    /// Also write the per-claim reports as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct FieldInfoArgs {
    #[arg(long)]
    field: String,
    #[arg(long)]
    json: bool,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: TrsError| e.to_string())
}

fn parse_recipe_family(s: &str) -> Result<RecipeFamily, String> {
    s.parse().map_err(|e: RecipeError| e.to_string())
}

enum Failure {
    Claims,
    Usage(String),
    Input(String),
    Guard(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Claims => 1,
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
            Failure::Guard(_) => 4,
        }
    }
}

impl From<TrsError> for Failure {
    fn from(e: TrsError) -> Self {
        match e {
            TrsError::Code(c) => c.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<CodeError> for Failure {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::TooLargeToEnumerate { .. } => Failure::Guard(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<GfError> for Failure {
    fn from(e: GfError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<RecipeError> for Failure {
    fn from(e: RecipeError) -> Self {
        match e {
            RecipeError::Trs(t) => t.into(),
            RecipeError::Code(c) => c.into(),
            RecipeError::Gf(g) => g.into(),
            RecipeError::Malformed(m) => Failure::Input(m),
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Trs(t) => t.into(),
            SearchError::Code(c) => c.into(),
            SearchError::Gf(g) => g.into(),
            SearchError::Recipe(r) => r.into(),
            other @ SearchError::AtEta { .. } => Failure::Usage(other.to_string()),
            other @ SearchError::Pool(_) => Failure::Input(other.to_string()),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Construct(a) => construct(a, out),
        Command::Analyze(a) => analyze(a, out),
        Command::Sweep(a) => sweep(a, out),
        Command::VerifyPaper(a) => verify(a, out),
        Command::FieldInfo(a) => field_info(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            match &f {
                Failure::Claims => {}
                Failure::Usage(m) | Failure::Input(m) | Failure::Guard(m) => {
                    let _ = writeln!(err, "error: {m}");
                }
            }
            f.code()
        }
    }
}

fn parse_elements(field: &Field, list: &str) -> Result<Vec<Elem>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| field.parse_element(s).map_err(Failure::from))
        .collect()
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Input(format!("stdout: {e}")))
}

fn construct(a: ConstructArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let field = Field::parse(&a.field)?;
    let eta = a.eta.as_deref().map(|s| field.parse_element(s)).transpose()?;
    let recipe = Recipe {
        family: a.family,
        field: field.spec(),
        subfield: a.subfield,
        k: a.k,
        t: a.t,
        h: a.h,
        eta,
        alpha: a.alpha.as_deref().map(|s| parse_elements(&field, s)).transpose()?,
        v: a.v.as_deref().map(|s| parse_elements(&field, s)).transpose()?,
    };
    let built = recipe.build()?;
    let file = CodeFile::new(&built.code, Some(built.recipe));
    std::fs::write(&a.out, file.to_json() + "\n").map_err(|e| io_failure(&a.out, e))?;
    emit(out, &format!("wrote [{}, {}] code over {} to {}\n", file.n, file.k, file.field, a.out.display()))
}

fn analyze(a: AnalyzeArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let text = std::fs::read_to_string(&a.path).map_err(|e| io_failure(&a.path, e))?;
    let file = CodeFile::from_json(&text)?;
    let mode = if a.min_distance { DistanceMode::Force } else { DistanceMode::Auto };
    let analysis = recipe::analyze_file(&file, mode)?;
    let format = match (a.format, a.json, a.csv) {
        (Some(f), _, _) => f,
        (None, true, _) => ReportFormat::Json,
        (None, _, true) => ReportFormat::Csv,
        _ => ReportFormat::Text,
    };
    let r = &analysis.report;
    let distance = r.min_distance.map_or("unknown".to_string(), |d| d.to_string());
    let text = match format {
        ReportFormat::Json => serde_json::to_string_pretty(&analysis).expect("reports serialize") + "\n",
        ReportFormat::Csv => format!(
            "field,n,k,hull_dim,is_mds,min_distance,schur_dim,certificate\n{},{},{},{},{},{},{},{}\n",
            r.field,
            r.n,
            r.k,
            r.hull_dimension,
            r.is_mds,
            r.min_distance.map_or(String::new(), |d| d.to_string()),
            r.schur_dimension,
            r.non_rs_certificate
        ),
        ReportFormat::Text => format!(
            "field            {}\nparameters       [{}, {}]\nhull dimension   {}\nMDS              {}\nminimum distance {}\nSchur dimension  {}\ncertificate      {}\n",
            r.field, r.n, r.k, r.hull_dimension, r.is_mds, distance, r.schur_dimension, r.non_rs_certificate
        ),
    };
    emit(out, &text)
}

fn sweep(a: SweepArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let field = Field::parse(&a.field)?;
    let range = match a.eta_range.as_deref() {
        None if a.subfield.is_some() => EtaRange::OutsideSubfield,
        None | Some("all") => EtaRange::AllNonzero,
        Some("outside") => EtaRange::OutsideSubfield,
        Some(s) => match s.strip_prefix("list:") {
            Some(list) => EtaRange::Explicit(parse_elements(&field, list)?),
            None => return Err(Failure::Usage(format!("bad --eta-range {s:?} (use all, outside or list:...)"))),
        },
    };
    let spec = SearchSpec::new(&field, a.subfield, a.family, a.k, a.t, a.h, range)?;
    let result = search::sweep_eta(&spec)?;
    let (json, csv) = result.write_files(&a.out).map_err(|e| io_failure(&a.out, e))?;
    let s = &result.summary;
    let mut text = format!(
        "tried {} η: {} MDS, {} with hull dimension 1, {} certified non-RS\n",
        s.total, s.mds, s.one_hull, s.certified_non_rs
    );
    if let Some(w) = result.first_witness() {
        text += &format!(
            "first witness: η = g^{} (hull {}, MDS, Schur dimension {}, CertifiedNonGRS)\n",
            w.exponent, w.report.hull_dimension, w.report.schur_dimension
        );
    }
    text += &format!("wrote {} and {}\n", json.display(), csv.display());
    emit(out, &text)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let ids: Vec<ExampleId> = if a.example.eq_ignore_ascii_case("all") {
        ExampleId::ALL.to_vec()
    } else {
        vec![a.example.parse().map_err(Failure::Usage)?]
    };
    let field = a.field.as_deref().map(Field::parse).transpose()?;
    let reports: Vec<ExampleReport> = ids
        .iter()
        .map(|&id| match &field {
            Some(f) => search::verify_example_with(id, f),
            None => search::verify_example(id),
        })
        .collect();
    let mut text = String::new();
    for r in &reports {
        for c in &r.claims {
            text += &format!("{:<5} {:<24} {:<10} {}\n", r.example, c.name, c.status, c.detail);
        }
    }
    emit(out, &text)?;
    if let Some(path) = &a.json {
        let json = serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n";
        std::fs::write(path, json).map_err(|e| io_failure(path, e))?;
    }
    if reports.iter().all(ExampleReport::passed) {
        Ok(())
    } else {
        Err(Failure::Claims)
    }
}

#[derive(serde::Serialize)]
struct FieldInfo {
    spec: String,
    characteristic: u32,
    degree: u32,
    order: u32,
    modulus: Vec<u32>,
    conway: bool,
    subfield_orders: Vec<u32>,
}

fn field_info(a: FieldInfoArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let f = Field::parse(&a.field)?;
    let info = FieldInfo {
        spec: f.spec().to_string(),
        characteristic: f.characteristic(),
        degree: f.degree(),
        order: f.order(),
        modulus: f.modulus().to_vec(),
        conway: f.is_conway(),
        subfield_orders: f.subfield_orders(),
    };
    let text = if a.json {
        serde_json::to_string_pretty(&info).expect("field info serializes") + "\n"
    } else {
        format!(
            "field      {}\norder      {} = {}^{}\nmodulus    {} (constant term first{})\nγ          {} = x mod the modulus\nsubfields  {:?}\n",
            info.spec,
            info.order,
            info.characteristic,
            info.degree,
            info.modulus.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
            if info.conway { ", Conway" } else { "" },
            f.gamma().value(),
            info.subfield_orders
        )
    };
    emit(out, &text)
}
