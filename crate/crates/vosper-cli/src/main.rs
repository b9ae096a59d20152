//! `vosper`: connectivity, vosperianity and superconnectivity analysis of
//! digraphs and Cayley digraphs, with exhaustive audit and verification
//! runs. Exit codes: 0 success, 1 failed verification or audit
//! disagreement, 2 parse/usage errors, 3 precondition violations.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::process::ExitCode;

use vosper_core::classify::{
    classify_superconnected_cayley, classify_vosperian_cayley, enumerate_and_audit, AuditRecord,
    ClassifyError,
};
use vosper_core::connectivity::{connectivity_profile, ConnectivityError};
use vosper_core::digraph::{Digraph, DigraphError};
use vosper_core::group::{parse_group_spec, parse_subset, FiniteGroup, GroupError};
use vosper_core::oracle::{
    connectivity_bruteforce, kappa_k_bruteforce, superconnected_by_definition,
    vosperian_by_definition, OracleBudget, OracleError,
};
use vosper_core::suites::{run_suite, SuiteError};
use vosper_core::symmetry::{is_irreducible, twin_classes};
use vosper_core::GroupSubset;

mod report;
use report::{
    AnalyzeReport, AtomsReport, CayleySection, InputSummary, OracleSection, VerifyReport,
    SCHEMA_VERSION,
};

#[derive(Parser)]
#[command(
    name = "vosper",
    version,
    about = "Vosperianity and superconnectivity analysis of finite digraphs and Cayley digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one digraph: connectivity profile, twin structure and, for
    /// Cayley inputs, the algebraic verdicts with witnesses.
    Analyze(AnalyzeArgs),
    /// Audit every generating connection set over the small-group catalog.
    Enumerate(EnumerateArgs),
    /// Run a quantified verification suite.
    Verify(VerifyArgs),
    /// List the k-atoms of a digraph in both directions.
    Atoms(AtomsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct InputArgs {
    /// Group spec such as Z7, D4, Q8, A4, Dic3 or products like Z2xZ4.
    #[arg(long, requires = "subset", conflicts_with = "edges")]
    group: Option<String>,
    /// Connection set as comma-separated element indices, e.g. 1,2,3.
    #[arg(long, requires = "group")]
    subset: Option<String>,
    /// Path to an edge-list file ("n m" header, one "u v" arc per line).
    #[arg(long, required_unless_present = "group")]
    edges: Option<String>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Also run the definition-level brute-force oracles.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Largest group order to include (catalog covers 1 through 12).
    #[arg(long, default_value_t = 12)]
    max_order: usize,
    /// Compare every verdict against the brute-force oracles.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name: duality, bounds, lemma1, lemma4, lemma5, lemmaAP, thm4,
    /// thm6, thm7 or exercise-kappa2.
    #[arg(long)]
    suite: String,
    /// Seed for the randomized corpora; fixed seed, identical output.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct AtomsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Separation grade.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn precondition(message: impl Into<String>) -> Self {
        CliError {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::BadGroupSpec(_)
            | GroupError::BadSubsetSpec(_)
            | GroupError::SubsetOutOfRange { .. }
            | GroupError::CatalogCapExceeded { .. } => CliError::usage(e.to_string()),
            _ => CliError::precondition(e.to_string()),
        }
    }
}

impl From<DigraphError> for CliError {
    fn from(e: DigraphError) -> Self {
        match e {
            DigraphError::IdentityInConnectionSet => CliError::precondition(e.to_string()),
            _ => CliError::usage(e.to_string()),
        }
    }
}

impl From<ConnectivityError> for CliError {
    fn from(e: ConnectivityError) -> Self {
        CliError::precondition(e.to_string())
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Group(g) => g.into(),
            other => CliError::precondition(other.to_string()),
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::precondition(e.to_string())
    }
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::UnknownSuite(_) => CliError::usage(e.to_string()),
            SuiteError::Classify(c) => c.into(),
        }
    }
}

fn main() -> ExitCode {
    if let Ok(value) = std::env::var("VOSPER_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Atoms(args) => cmd_atoms(args),
    }
}

enum LoadedInput {
    Cayley {
        group: FiniteGroup,
        subset: GroupSubset,
        digraph: Digraph,
    },
    Edges {
        digraph: Digraph,
    },
}

impl LoadedInput {
    fn digraph(&self) -> &Digraph {
        match self {
            LoadedInput::Cayley { digraph, .. } | LoadedInput::Edges { digraph } => digraph,
        }
    }

    fn summary(&self, source: String) -> InputSummary {
        let d = self.digraph();
        let (kind, group, subset) = match self {
            LoadedInput::Cayley { group, subset, .. } => (
                "cayley",
                Some(group.label().to_string()),
                Some(subset.to_vec()),
            ),
            LoadedInput::Edges { .. } => ("edges", None, None),
        };
        InputSummary {
            kind,
            source,
            group,
            subset,
            vertices: d.vertex_count(),
            arcs: d.arc_count(),
        }
    }
}

fn load_input(input: &InputArgs) -> Result<(LoadedInput, String), CliError> {
    if let (Some(group_spec), Some(subset_spec)) = (&input.group, &input.subset) {
        let group = parse_group_spec(group_spec)?;
        let subset = parse_subset(subset_spec, group.order())?;
        let digraph = Digraph::cayley(&group, &subset)?;
        let source = digraph.label().to_string();
        Ok((
            LoadedInput::Cayley {
                group,
                subset,
                digraph,
            },
            source,
        ))
    } else if let Some(path) = &input.edges {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))?;
        let digraph = Digraph::parse_edge_list(&text)?;
        Ok((LoadedInput::Edges { digraph }, path.clone()))
    } else {
        Err(CliError::usage(
            "provide either --group with --subset, or --edges",
        ))
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode, CliError> {
    let (input, source) = load_input(&args.input)?;
    let d = input.digraph();
    if let LoadedInput::Cayley { group, subset, .. } = &input {
        if !group.is_generating(subset) {
            return Err(ClassifyError::NotGenerating.into());
        }
    }
    let profile = connectivity_profile(d)?;
    let twins = twin_classes(d);
    let irreducible = is_irreducible(d);

    let cayley = match &input {
        LoadedInput::Cayley { group, subset, .. } => {
            let vosperian = classify_vosperian_cayley(group, subset)?;
            let aperiodic = group.is_aperiodic(subset);
            let superconn = if aperiodic {
                Some(classify_superconnected_cayley(group, subset)?)
            } else {
                None
            };
            Some(CayleySection::build(
                aperiodic,
                &vosperian,
                superconn.as_ref(),
                profile.superconnected,
            ))
        }
        LoadedInput::Edges { .. } => None,
    };

    let oracle = if args.oracle {
        let budget = OracleBudget::default();
        Some(OracleSection {
            vosperian: vosperian_by_definition(d, budget)?,
            superconnected: superconnected_by_definition(d, budget)?,
            kappa: connectivity_bruteforce(d, budget)?,
            kappa2: kappa_k_bruteforce(d, 2, budget)?,
        })
    } else {
        None
    };

    let report = AnalyzeReport::build(
        input.summary(source),
        &profile,
        &twins,
        irreducible,
        cayley,
        oracle,
    );
    match args.format {
        Format::Json => println!("{}", to_json(&report)?),
        Format::Text => print!("{}", report.to_text()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            write_csv_row(&mut w, &AnalyzeReport::csv_header(), &report.csv_fields())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode, CliError> {
    let records = enumerate_and_audit(args.max_order, args.oracle)?;
    let stdout = std::io::stdout();
    match args.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(stdout.lock());
            w.write_record(AuditRecord::CSV_HEADER)
                .and_then(|_| {
                    for r in &records {
                        w.write_record(r.csv_fields())?;
                    }
                    w.flush().map_err(csv::Error::from)
                })
                .map_err(|e| CliError::usage(format!("cannot write output: {e}")))?;
        }
        Format::Json => {
            let mut out = stdout.lock();
            for r in &records {
                writeln!(out, "{}", to_json_compact(r)?)
                    .map_err(|e| CliError::usage(format!("cannot write output: {e}")))?;
            }
        }
        Format::Text => {
            for r in &records {
                println!(
                    "Cay({},{:?}): degree={} kappa={} kappa2={} vosperian={} condition={} agreement={}",
                    r.group,
                    r.subset,
                    r.degree,
                    r.kappa,
                    r.kappa2.map_or("-".to_string(), |k| k.to_string()),
                    r.vosperian_thm,
                    r.condition,
                    r.agreement
                );
            }
        }
    }
    if records.iter().all(|r| r.agreement) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let suite = run_suite(&args.suite, args.seed)?;
    let report = VerifyReport {
        schema_version: SCHEMA_VERSION,
        suite: suite.suite.clone(),
        seed: suite.seed,
        instances: suite.instances,
        passed: suite.passed,
        violations: suite.violations.clone(),
        findings: suite.findings.clone(),
    };
    match args.format {
        Format::Json => println!("{}", to_json(&report)?),
        Format::Text | Format::Csv => print!("{}", report.to_text()),
    }
    if report.passed {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn cmd_atoms(args: AtomsArgs) -> Result<ExitCode, CliError> {
    use vosper_core::connectivity::{isoperimetric_connectivity, k_atoms};
    use vosper_core::Sign;

    let (input, source) = load_input(&args.input)?;
    let d = input.digraph();
    if args.k < 1 {
        return Err(CliError::usage("k must be at least 1"));
    }
    let kappa_k = isoperimetric_connectivity(d, args.k)?
        .ok_or_else(|| CliError::precondition(format!("digraph is not {}-separable", args.k)))?;
    let positive = k_atoms(d, args.k, Sign::Positive)?;
    let negative = k_atoms(d, args.k, Sign::Negative)?;
    let report = AtomsReport {
        schema_version: SCHEMA_VERSION,
        input: input.summary(source),
        k: args.k,
        kappa_k,
        positive_atoms: positive.iter().map(|f| f.vertices.to_vec()).collect(),
        negative_atoms: negative.iter().map(|f| f.vertices.to_vec()).collect(),
    };
    match args.format {
        Format::Json => println!("{}", to_json(&report)?),
        Format::Text | Format::Csv => print!("{}", report.to_text()),
    }
    Ok(ExitCode::SUCCESS)
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value)
        .map_err(|e| CliError::usage(format!("cannot serialize report: {e}")))
}

fn to_json_compact<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value)
        .map_err(|e| CliError::usage(format!("cannot serialize report: {e}")))
}

fn write_csv_row<W: std::io::Write>(
    w: &mut csv::Writer<W>,
    header: &[&str],
    fields: &[String],
) -> Result<(), CliError> {
    w.write_record(header)
        .and_then(|_| w.write_record(fields))
        .and_then(|_| w.flush().map_err(csv::Error::from))
        .map_err(|e| CliError::usage(format!("cannot write output: {e}")))
}
