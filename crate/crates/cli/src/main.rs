//! Decision procedures for monomial ideals and multicomplexes.
//!
//! Exit codes: 0 affirmative or constructed, 1 decided negative, 2 input
//! error, 3 search cap exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Read;

use multishell::{
    build_maximal_shelling_filtration, check_maximal_shelling,
    check_shelling_order, dimension_filtration, find_maximal_shelling,
    find_pretty_clean_filtration, find_shelling, is_borel_type, pret_criterion,
    primary_decomposition, simplicial_clean_filtration, verify_filtration, Error, Face,
    SearchOptions, Strategy,
};
use multishell_cli::document::{
    self, face_from_entries, filtration_from_document, ideal_from_document,
    multicomplex_from_document, parse_input, simplicial_from_document, FaceEntry,
};
use multishell_cli::render;

#[derive(Parser)]
#[command(
    name = "multishell",
    version,
    about = "Shellability, decompositions and pretty clean filtrations for monomial ideals and multicomplexes",
    after_help = "Input is read from --input ('-' for stdin): either ideal text such as\n\
                  'x1^2, x1*x2' or a JSON document with a 'kind' discriminator\n\
                  (ideal | multicomplex | simplicial | filtration)."
)]
struct Cli {
    /// Input file, or '-' for standard input.
    #[arg(short, long, default_value = "-", global = true)]
    input: String,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Override the inferred variable count of ideal text.
    #[arg(long, global = true)]
    vars: Option<usize>,

    /// Largest facet count the shelling search will attempt.
    #[arg(long, default_value_t = 9, global = true)]
    max_facets: usize,

    /// Largest maximal-facet count the maximal-shelling search will attempt.
    #[arg(long, default_value_t = 9, global = true)]
    max_perms: usize,

    /// Worker threads for the searches (1 = sequential).
    #[arg(long, env = "MULTISHELL_THREADS", default_value_t = 1, global = true)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    #[default]
    Exhaustive,
    Dimension,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum FiltrationVia {
    #[default]
    Search,
    Maxshell,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible and primary decomposition with associated primes.
    Decompose,
    /// Associated primes only.
    Ass,
    /// The dimension filtration.
    Dimfilt,
    /// Decide whether the ideal is of Borel type.
    Borel,
    /// Check the per-dimension bound sufficient for pretty cleanness.
    Pret,
    /// Enumerate the facets of the multicomplex.
    Facets,
    /// List the maximal facets of the multicomplex.
    Maxfacets,
    /// Facet counts per prime; the total is the arithmetic degree.
    Arithdeg,
    /// Check a given facet order against the shelling conditions.
    CheckShelling {
        /// The order as a JSON list of faces, e.g. '[[0,"inf"],[1,0]]'.
        #[arg(long)]
        order: String,
    },
    /// Search for a shelling order.
    Shell {
        #[arg(long, value_enum, default_value_t)]
        strategy: StrategyArg,
    },
    /// Check a maximal-facet order and split index.
    CheckMaxshelling {
        /// The order as a JSON list of faces.
        #[arg(long)]
        order: String,
        /// Length of the initial segment with common infinite part.
        #[arg(long)]
        split: usize,
    },
    /// Search for a maximal shelling.
    Maxshell,
    /// Construct a pretty clean filtration.
    Filtration {
        #[arg(long, value_enum, default_value_t)]
        via: FiltrationVia,
    },
    /// Re-check a serialized filtration and classify it.
    VerifyFiltration,
    /// Build the clean filtration attached to a shelling of a simplicial
    /// complex.
    SimplicialClean {
        /// Facet order as a JSON list of vertex lists, e.g. '[[1,2],[2,3]]';
        /// defaults to the document order.
        #[arg(long)]
        order: Option<String>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<document::InputError> for Failure {
    fn from(e: document::InputError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            Error::NotAShelling
            | Error::NotAMaximalShelling
            | Error::NotStanleySet { .. }
            | Error::NotPrimary
            | Error::WitnessSearchFailed { .. }
            | Error::ShiftDegreeMismatch { .. } => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
    } else {
        print!("{text}");
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::input(format!("cannot read standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {path}: {e}")))
    }
}

fn parse_order_faces(text: &str) -> Result<Vec<Face>, Failure> {
    let entries: Vec<Vec<FaceEntry>> = serde_json::from_str(text)
        .map_err(|e| Failure::input(format!("invalid --order: {e}")))?;
    entries
        .iter()
        .map(|f| face_from_entries(f).map_err(Failure::from))
        .collect()
}

fn run(cli: &Cli) -> Result<i32, Failure> {
    let text = read_input(&cli.input)?;
    let doc = parse_input(&text, cli.vars)?;
    let opts = SearchOptions {
        max_facets: cli.max_facets,
        max_perms: cli.max_perms,
        threads: cli.threads.max(1),
    };

    match &cli.command {
        Command::Decompose => {
            let ideal = ideal_from_document(&doc)?;
            let report = primary_decomposition(&ideal)?;
            emit(
                cli.json,
                &render::DecomposeOut::new(&ideal, &report),
                render::decompose_text(&ideal, &report),
            );
            Ok(0)
        }
        Command::Ass => {
            let ideal = ideal_from_document(&doc)?;
            let report = primary_decomposition(&ideal)?;
            emit(
                cli.json,
                &render::AssOut {
                    ass: report.ass.iter().map(document::prime_to_vars).collect(),
                },
                render::ass_text(&report),
            );
            Ok(0)
        }
        Command::Dimfilt => {
            let ideal = ideal_from_document(&doc)?;
            let filt = dimension_filtration(&ideal)?;
            emit(cli.json, &render::DimFiltOut::new(&filt), render::dimfilt_text(&filt));
            Ok(0)
        }
        Command::Borel => {
            let ideal = ideal_from_document(&doc)?;
            let borel = is_borel_type(&ideal)?;
            emit(
                cli.json,
                &render::BorelOut { borel },
                format!("{}of Borel type\n", if borel { "" } else { "not " }),
            );
            Ok(if borel { 0 } else { 1 })
        }
        Command::Pret => {
            let ideal = ideal_from_document(&doc)?;
            let report = pret_criterion(&ideal)?;
            emit(cli.json, &render::PretOut::new(&report), render::pret_text(&report));
            Ok(if report.holds { 0 } else { 1 })
        }
        Command::Facets => {
            let gamma = multicomplex_from_document(&doc)?;
            let facet_set = gamma.enumerate_facets();
            emit(
                cli.json,
                &render::FacetsOut::new(&gamma, &facet_set),
                render::facets_text(&gamma, &facet_set),
            );
            Ok(0)
        }
        Command::Maxfacets => {
            let gamma = multicomplex_from_document(&doc)?;
            emit(
                cli.json,
                &render::MaxFacetsOut {
                    maximal_facets: render::faces_json(gamma.maximal_facets()),
                },
                format!("maximal facets: {gamma}\n"),
            );
            Ok(0)
        }
        Command::Arithdeg => {
            let gamma = multicomplex_from_document(&doc)?;
            let report = gamma.arithmetic_degree_report();
            emit(cli.json, &render::ArithDegOut::new(&report), render::arithdeg_text(&report));
            Ok(0)
        }
        Command::CheckShelling { order } => {
            let gamma = multicomplex_from_document(&doc)?;
            let order = parse_order_faces(order)?;
            let verdict = check_shelling_order(&gamma, &order)?;
            emit(
                cli.json,
                &render::ShellingVerdictOut::new(&verdict),
                render::shelling_verdict_text(&verdict),
            );
            Ok(if verdict.overall { 0 } else { 1 })
        }
        Command::Shell { strategy } => {
            let gamma = multicomplex_from_document(&doc)?;
            let strategy = match strategy {
                StrategyArg::Exhaustive => Strategy::Exhaustive,
                StrategyArg::Dimension => Strategy::Dimension,
            };
            let result = find_shelling(&gamma, strategy, &opts)?;
            let out = match &result {
                Some((order, verdict)) => render::ShellOut {
                    found: true,
                    order: Some(render::faces_json(order)),
                    verdict: Some(render::ShellingVerdictOut::new(verdict)),
                },
                None => render::ShellOut {
                    found: false,
                    order: None,
                    verdict: None,
                },
            };
            emit(cli.json, &out, render::shell_text(result.as_ref()));
            Ok(if result.is_some() { 0 } else { 1 })
        }
        Command::CheckMaxshelling { order, split } => {
            let gamma = multicomplex_from_document(&doc)?;
            let order = parse_order_faces(order)?;
            let verdict = check_maximal_shelling(&gamma, &order, *split)?;
            emit(
                cli.json,
                &render::MaximalVerdictOut::new(&verdict),
                render::maximal_verdict_text(&verdict),
            );
            Ok(if verdict.overall { 0 } else { 1 })
        }
        Command::Maxshell => {
            let gamma = multicomplex_from_document(&doc)?;
            let result = find_maximal_shelling(&gamma, &opts)?;
            let out = match &result {
                Some((order, split, verdict)) => render::MaxShellOut {
                    found: true,
                    order: Some(render::faces_json(order)),
                    split: Some(*split),
                    verdict: Some(render::MaximalVerdictOut::new(verdict)),
                },
                None => render::MaxShellOut {
                    found: false,
                    order: None,
                    split: None,
                    verdict: None,
                },
            };
            emit(cli.json, &out, render::maxshell_text(result.as_ref()));
            Ok(if result.is_some() { 0 } else { 1 })
        }
        Command::Filtration { via } => {
            let ideal = ideal_from_document(&doc)?;
            let result = match via {
                FiltrationVia::Search => find_pretty_clean_filtration(&ideal, &opts)?,
                FiltrationVia::Maxshell => {
                    let gamma = multishell::Multicomplex::from_ideal(&ideal)?;
                    match find_maximal_shelling(&gamma, &opts)? {
                        None => None,
                        Some((order, split, _)) => Some(
                            build_maximal_shelling_filtration(&gamma, &order, split)?
                                .refine()?,
                        ),
                    }
                }
            };
            let out = match &result {
                Some(f) => render::FiltrationOut::found(f),
                None => render::FiltrationOut::not_found(),
            };
            emit(cli.json, &out, render::filtration_text(result.as_ref()));
            Ok(if result.is_some() { 0 } else { 1 })
        }
        Command::VerifyFiltration => {
            let filtration = filtration_from_document(&doc)?;
            let report = verify_filtration(&filtration);
            emit(cli.json, &render::VerifyOut::new(&report), render::verify_text(&report));
            Ok(if report.is_valid() { 0 } else { 1 })
        }
        Command::SimplicialClean { order } => {
            let complex = simplicial_from_document(&doc)?;
            let order = match order {
                None => complex.facets().to_vec(),
                Some(text) => {
                    let lists: Vec<Vec<usize>> = serde_json::from_str(text)
                        .map_err(|e| Failure::input(format!("invalid --order: {e}")))?;
                    if lists.iter().flatten().any(|&v| v == 0) {
                        return Err(Failure::input("vertices are 1-based; 0 is not a vertex"));
                    }
                    lists
                        .iter()
                        .map(|f| f.iter().map(|&v| v - 1).collect())
                        .collect()
                }
            };
            let filtration = simplicial_clean_filtration(&complex, &order)?;
            emit(
                cli.json,
                &render::FiltrationOut::found(&filtration),
                render::filtration_text(Some(&filtration)),
            );
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}
