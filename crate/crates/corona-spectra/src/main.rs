//! Command-line front end. All structured output is deterministic JSON so
//! runs can be diffed byte for byte; exit codes distinguish bad input (2),
//! inapplicable closed forms (3), and cross-check failures (4).

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use corona_spectra::error::{Error, Result};
use corona_spectra::invariants::{
    invariant_report_for_corona, invariant_report_for_graph, is_cospectral,
};
use corona_spectra::method::{method_names, spectrum_method, SpectrumMethod};
use corona_spectra::report::{
    cospectral_report, invariant_report_json, spectrum_report, Json,
};
use corona_spectra::sampling::{random_operand_triple, rng_from_seed};
use corona_spectra::{
    predicted_counts, CoronaKind, CoronaOperands, Graph, GraphFamily, Spectrum,
};

const DEFAULT_VERIFY_SEED: u64 = 20260825;

#[derive(Parser)]
#[command(
    name = "corona-spectra",
    version,
    about = "Corona constructions on subdivision graphs: spectra and invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named graph (path, cycle, complete, empty) as an edge list.
    Gen {
        /// Family name: path, cycle, complete, or empty.
        family: String,
        /// Number of vertices.
        k: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a corona from three operand edge lists and write its edge list.
    Corona {
        /// Construction kind: svev or svee.
        #[arg(long)]
        kind: String,
        /// First operand (connected, at least two vertices and one edge).
        #[arg(long)]
        g1: PathBuf,
        /// Second operand.
        #[arg(long)]
        g2: PathBuf,
        /// Third operand.
        #[arg(long)]
        g3: PathBuf,
        /// Output file; stdout when omitted. Must not be an input file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a normalized Laplacian spectrum.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        /// Strategy: closed, oracle, or both (cross-checked).
        #[arg(long, default_value = "both")]
        method: String,
        /// Largest allowed closed-vs-oracle deviation when method is both.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// One "value multiplicity" line per eigenvalue group instead of
        /// JSON (single-strategy runs only).
        #[arg(long)]
        plain: bool,
    },
    /// Compute spanning trees, the degree-weighted Kirchhoff index, and
    /// Kemeny's constant along every applicable route.
    Invariants {
        #[command(flatten)]
        input: GraphInput,
        /// Largest allowed relative deviation between routes.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the normalized Laplacian spectra of two graphs.
    Cospectral {
        /// First edge-list file.
        #[arg(long)]
        a: PathBuf,
        /// Second edge-list file.
        #[arg(long)]
        b: PathBuf,
        /// Entrywise tolerance for the sorted spectra.
        #[arg(long, default_value_t = 1e-7)]
        tol: f64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check closed forms against the eigensolver on seeded random
    /// operand triples.
    Verify {
        /// Construction kind: svev, svee, or both.
        #[arg(long, default_value = "both")]
        kind: String,
        /// Number of random operand triples.
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Largest allowed closed-vs-oracle deviation.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Random seed; falls back to CORONA_SPECTRA_SEED, then a fixed
        /// default.
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Either a bare graph or a corona described by its operands.
#[derive(Args)]
struct GraphInput {
    /// Edge-list file for a plain graph.
    #[arg(long, conflicts_with_all = ["kind", "g1", "g2", "g3"])]
    graph: Option<PathBuf>,
    /// Construction kind (svev or svee); requires --g1/--g2/--g3.
    #[arg(long, requires = "g1", requires = "g2", requires = "g3")]
    kind: Option<String>,
    /// First operand edge list.
    #[arg(long, requires = "kind")]
    g1: Option<PathBuf>,
    /// Second operand edge list.
    #[arg(long, requires = "kind")]
    g2: Option<PathBuf>,
    /// Third operand edge list.
    #[arg(long, requires = "kind")]
    g3: Option<PathBuf>,
}

enum LoadedInput {
    Plain(Graph),
    Corona(CoronaKind, CoronaOperands),
}

impl GraphInput {
    fn load(&self) -> Result<LoadedInput> {
        if let Some(path) = &self.graph {
            return Ok(LoadedInput::Plain(Graph::read_edge_list_file(path)?));
        }
        match (&self.kind, &self.g1, &self.g2, &self.g3) {
            (Some(kind), Some(g1), Some(g2), Some(g3)) => {
                let kind: CoronaKind = kind.parse()?;
                let ops = CoronaOperands::new(
                    Graph::read_edge_list_file(g1)?,
                    Graph::read_edge_list_file(g2)?,
                    Graph::read_edge_list_file(g3)?,
                )?;
                Ok(LoadedInput::Corona(kind, ops))
            }
            _ => Err(Error::InvalidOperands(
                "pass either --graph FILE or --kind KIND with --g1/--g2/--g3".into(),
            )),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(match e {
            Error::ClosedFormInapplicable(_) | Error::NotRegular(_) => 3,
            Error::Inconsistent(_) | Error::NonrealRoot { .. } => 4,
            _ => 2,
        });
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { family, k, out } => {
            let family: GraphFamily = family.parse()?;
            let g = corona_spectra::make_named_graph(family, k)?;
            emit_text(g.to_edge_list_string(), out.as_deref())
        }
        Command::Corona {
            kind,
            g1,
            g2,
            g3,
            out,
        } => {
            let kind: CoronaKind = kind.parse()?;
            if let Some(out) = &out {
                refuse_overlap(out, &[&g1, &g2, &g3])?;
            }
            let ops = CoronaOperands::new(
                Graph::read_edge_list_file(&g1)?,
                Graph::read_edge_list_file(&g2)?,
                Graph::read_edge_list_file(&g3)?,
            )?;
            let g = corona_spectra::build_corona(kind, &ops);
            let counts = predicted_counts(kind, &ops);
            debug_assert_eq!((g.n(), g.m()), (counts.n, counts.m));
            emit_text(g.to_edge_list_string(), out.as_deref())
        }
        Command::Spectrum {
            input,
            method,
            tol,
            out,
            plain,
        } => run_spectrum(input, &method, tol, out.as_deref(), plain),
        Command::Invariants { input, tol, out } => run_invariants(input, tol, out.as_deref()),
        Command::Cospectral { a, b, tol, out } => run_cospectral(&a, &b, tol, out.as_deref()),
        Command::Verify {
            kind,
            count,
            tol,
            seed,
        } => run_verify(&kind, count, tol, seed),
    }
}

fn lookup_method(name: &str) -> Result<&'static dyn SpectrumMethod> {
    spectrum_method(name).ok_or_else(|| {
        Error::InvalidOperands(format!(
            "unknown method {name:?}; available: {}, both",
            method_names().join(", ")
        ))
    })
}

fn spectrum_for(method: &dyn SpectrumMethod, input: &LoadedInput, tol_grouping: f64) -> Result<Spectrum> {
    match input {
        LoadedInput::Plain(g) => method.graph_spectrum(g, tol_grouping),
        LoadedInput::Corona(kind, ops) => method.corona_spectrum(*kind, ops, tol_grouping),
    }
}

fn run_spectrum(
    input: GraphInput,
    method: &str,
    tol: f64,
    out: Option<&Path>,
    plain: bool,
) -> Result<()> {
    let input = input.load()?;
    let grouping = corona_spectra::DEFAULT_GROUPING_TOL;

    if method == "both" {
        if plain {
            return Err(Error::InvalidOperands(
                "--plain needs a single strategy; pass --method closed or --method oracle".into(),
            ));
        }
        let oracle = lookup_method("oracle")?;
        let closed = lookup_method("closed")?;
        let reference = spectrum_for(oracle, &input, grouping)?;
        let candidate = spectrum_for(closed, &input, grouping)?;
        let deviation = candidate.max_sorted_deviation(&reference).ok_or_else(|| {
            Error::Inconsistent(format!(
                "strategy outputs have different orders: closed {} vs oracle {}",
                candidate.order(),
                reference.order()
            ))
        })?;
        let doc = Json::Object(vec![
            (
                "oracle".into(),
                spectrum_report(oracle.report_label(), &reference, None),
            ),
            (
                "closed".into(),
                spectrum_report(closed.report_label(), &candidate, Some(deviation)),
            ),
            ("tolerance".into(), Json::Float(tol)),
        ]);
        emit_text(doc.render(), out)?;
        if deviation > tol {
            return Err(Error::Inconsistent(format!(
                "closed-form spectrum deviates from the eigensolver by {deviation:.3e} (tolerance {tol:.3e})"
            )));
        }
        return Ok(());
    }

    let strategy = lookup_method(method)?;
    let spectrum = spectrum_for(strategy, &input, grouping)?;
    if plain {
        let mut body = String::new();
        for e in spectrum.entries() {
            body.push_str(&format!("{:.16e} {}\n", e.value, e.multiplicity));
        }
        body.pop();
        emit_text(body, out)
    } else {
        emit_text(spectrum_report(strategy.report_label(), &spectrum, None).render(), out)
    }
}

fn run_invariants(input: GraphInput, tol: f64, out: Option<&Path>) -> Result<()> {
    let grouping = corona_spectra::DEFAULT_GROUPING_TOL;
    let report = match input.load()? {
        LoadedInput::Plain(g) => invariant_report_for_graph(&g, grouping)?,
        LoadedInput::Corona(kind, ops) => invariant_report_for_corona(kind, &ops, grouping)?,
    };
    emit_text(invariant_report_json(&report).render(), out)?;
    if report.max_rel_dev > tol {
        return Err(Error::Inconsistent(format!(
            "invariant routes disagree by a relative {:.3e} (tolerance {tol:.3e})",
            report.max_rel_dev
        )));
    }
    Ok(())
}

fn run_cospectral(a: &Path, b: &Path, tol: f64, out: Option<&Path>) -> Result<()> {
    let oracle = lookup_method("oracle")?;
    let grouping = corona_spectra::DEFAULT_GROUPING_TOL;
    let spec_a = oracle.graph_spectrum(&Graph::read_edge_list_file(a)?, grouping)?;
    let spec_b = oracle.graph_spectrum(&Graph::read_edge_list_file(b)?, grouping)?;
    let verdict = is_cospectral(&spec_a, &spec_b, tol);
    emit_text(cospectral_report(&spec_a, &spec_b, tol, verdict).render(), out)
}

fn run_verify(kind: &str, count: usize, tol: f64, seed: Option<u64>) -> Result<()> {
    let kinds: Vec<CoronaKind> = match kind {
        "both" => vec![CoronaKind::Svev, CoronaKind::Svee],
        other => vec![other.parse()?],
    };
    let seed = match seed {
        Some(s) => s,
        None => match std::env::var("CORONA_SPECTRA_SEED") {
            Ok(text) => text.parse().map_err(|_| {
                Error::InvalidOperands(format!(
                    "CORONA_SPECTRA_SEED must be an unsigned integer, got {text:?}"
                ))
            })?,
            Err(_) => DEFAULT_VERIFY_SEED,
        },
    };

    let oracle = lookup_method("oracle")?;
    let closed = lookup_method("closed")?;
    let grouping = corona_spectra::DEFAULT_GROUPING_TOL;
    let mut rng = rng_from_seed(seed);
    let mut max_deviation = 0.0_f64;
    let mut worst: Option<(usize, CoronaKind)> = None;

    for index in 0..count {
        let ops = random_operand_triple(&mut rng)?;
        for &k in &kinds {
            let reference = oracle.corona_spectrum(k, &ops, grouping)?;
            let candidate = closed.corona_spectrum(k, &ops, grouping)?;
            let deviation = candidate.max_sorted_deviation(&reference).ok_or_else(|| {
                Error::Inconsistent(format!(
                    "triple {index} ({k}): strategy outputs have different orders"
                ))
            })?;
            if deviation > max_deviation {
                max_deviation = deviation;
                worst = Some((index, k));
            }
        }
    }

    let mut pairs = vec![
        ("count".into(), Json::Int(count as i64)),
        (
            "kinds".into(),
            Json::Array(kinds.iter().map(|k| Json::Str(k.to_string())).collect()),
        ),
        ("seed".into(), Json::Big(BigUint::from(seed))),
        ("tolerance".into(), Json::Float(tol)),
        ("max_deviation".into(), Json::Float(max_deviation)),
    ];
    if let Some((index, k)) = worst {
        pairs.push((
            "worst".into(),
            Json::Object(vec![
                ("index".into(), Json::Int(index as i64)),
                ("kind".into(), Json::Str(k.to_string())),
            ]),
        ));
    }
    emit_text(Json::Object(pairs).render(), None)?;
    if max_deviation > tol {
        return Err(Error::Inconsistent(format!(
            "closed-form spectra deviate from the eigensolver by up to {max_deviation:.3e} (tolerance {tol:.3e})"
        )));
    }
    Ok(())
}

/// Prints `body` with a trailing newline, or writes it to `out`.
fn emit_text(body: String, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, body + "\n")?,
        None => println!("{body}"),
    }
    Ok(())
}

/// Resolves a path far enough to compare it with others even when the file
/// does not exist yet.
fn resolve_for_comparison(path: &Path) -> PathBuf {
    if let Ok(found) = path.canonicalize() {
        return found;
    }
    let parent = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    match parent.canonicalize() {
        Ok(base) => match path.file_name() {
            Some(name) => base.join(name),
            None => base,
        },
        Err(_) => path.to_path_buf(),
    }
}

fn refuse_overlap(out: &Path, inputs: &[&PathBuf]) -> Result<()> {
    let target = resolve_for_comparison(out);
    for input in inputs {
        if resolve_for_comparison(input) == target {
            return Err(Error::InvalidOperands(format!(
                "output path {} is also an input; refusing to overwrite it",
                out.display()
            )));
        }
    }
    Ok(())
}
