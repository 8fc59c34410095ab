use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use realspace::dimensions::{dimension_report, naive_dimension, Family, DEFAULT_SUBSET_CAP};
use realspace::io::{error_json, parse_json, MatroidDoc};
use realspace::orderings::{
    find_inductive_ordering_with, ordering_type, Ordering, SearchMode,
};
use realspace::poly::PolyJson;
use realspace::realization::{
    basis_nonvanishing, build_realization, circuit_ideal_generators, generic_matrix_vars,
    verify_realization, ParamMatrix, ParamMatrixJson, SamplingOptions, DEFAULT_GENERATOR_CAP,
};
use realspace::rigidity::{is_inductively_rigid, rigidity_report};
use realspace::{Error, Matroid};

const SCHEMAS: &str = r#"Matroid documents (--matroid), elements labelled 1..d:
  circuits:     {"d": 6, "circuits": [[1,2,3], [1,4,5,6], ...]}
  paving:       {"d": 6, "n": 3, "hyperplanes": [[1,2,3], [1,5,6], ...]}
  split:        {"d": 6, "n": 4, "edges": [{"set": [1,2,3,6], "rank": 3}, ...]}
  vectors:      {"n": 3, "vectors": [[1, 0, "1/2"], ...]}   (column i is element i)

Polynomials:
  {"vars": ["c_5_1", ...], "terms": [{"coef": "p/q", "exps": [1, ...]}, ...]}
  terms in graded-lex order, exponents aligned with vars.

Parametrized matrices (realize output, verify --pm input):
  {"n": 4, "d": 8, "order": [1,2,...], "params": ["c_5_1", ...],
   "columns": {"1": [Poly, ...], ...}, "nonvanishing": [Poly, ...]}
  parameter c_i_j is the j-th parameter introduced at ordering position i.

Errors are printed to stdout as {"error": kind, "message": text, ...} with
exit status 1; usage errors exit with status 2. Summaries go to stderr."#;

#[derive(Parser)]
#[command(
    name = "realspace",
    version,
    about = "Realization spaces of matroids: dimensions, orderings, parametrizations, rigidity",
    after_long_help = SCHEMAS
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct MatroidArg {
    /// Matroid JSON document
    #[arg(long, value_name = "FILE")]
    matroid: PathBuf,
}

/// Comma-separated permutation such as `1,2,5,3,4`.
#[derive(Clone, Debug)]
struct OrderArg(Vec<usize>);

fn parse_order(s: &str) -> Result<OrderArg, String> {
    Ordering::parse_list(s).map(OrderArg).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Check a matroid document: circuit axioms or split conditions
    Validate(MatroidArg),
    /// List the subspaces with their ranks
    Subspaces(MatroidArg),
    /// Naive dimension of the realization space
    NaiveDim(MatroidArg),
    /// Expected codimension over a family of subsets
    ExpectedCodim {
        #[command(flatten)]
        m: MatroidArg,
        #[arg(long, default_value = "powerset", value_parser = ["powerset", "connected", "hypergraph"])]
        family: String,
        /// Largest ground set for subset enumeration
        #[arg(long, default_value_t = DEFAULT_SUBSET_CAP)]
        cap: usize,
    },
    /// Type vector (tau and tau-tilde) of an ordering
    Type {
        #[command(flatten)]
        m: MatroidArg,
        /// Comma-separated permutation of 1..d
        #[arg(long, value_parser = parse_order)]
        order: OrderArg,
    },
    /// Search for an inductive ordering
    FindOrder {
        #[command(flatten)]
        m: MatroidArg,
        /// Reverse peeling without backtracking
        #[arg(long)]
        greedy: bool,
    },
    /// Decide inductive connectivity, with a witness ordering
    InductivelyConnected(MatroidArg),
    /// Build the parametrized realization matrix
    Realize {
        #[command(flatten)]
        m: MatroidArg,
        /// Inductive ordering; searched for when omitted
        #[arg(long, value_parser = parse_order)]
        order: Option<OrderArg>,
        /// Write the matrix here instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Check a parametrized matrix at seeded random rational points
    Verify {
        #[command(flatten)]
        m: MatroidArg,
        /// Output of `realize`
        #[arg(long, value_name = "FILE")]
        pm: PathBuf,
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Bound on sampled numerators and denominators
        #[arg(long, default_value_t = 1000)]
        height: u64,
        /// Draws per sample before giving up
        #[arg(long, default_value_t = 100)]
        max_attempts: usize,
    },
    /// Circuit-ideal generators and basis minors of the generic matrix
    Ideal {
        #[command(flatten)]
        m: MatroidArg,
        /// Largest number of generators to emit
        #[arg(long, default_value_t = DEFAULT_GENERATOR_CAP)]
        cap: usize,
    },
    /// Rigidity criterion along an inductive ordering
    Rigid {
        #[command(flatten)]
        m: MatroidArg,
        /// Inductive ordering; searched for when omitted
        #[arg(long, value_parser = parse_order)]
        order: Option<OrderArg>,
    },
    /// Search for an inductive-rigidity witness
    InductivelyRigid(MatroidArg),
}

fn read(path: &Path) -> Result<String, Value> {
    fs::read_to_string(path).map_err(|e| {
        json!({
            "error": if e.kind() == std::io::ErrorKind::NotFound { "FileNotFound" } else { "IoError" },
            "message": format!("{}: {e}", path.display()),
        })
    })
}

fn load(arg: &MatroidArg) -> Result<Matroid, Value> {
    let text = read(&arg.matroid)?;
    MatroidDoc::parse(&text)
        .and_then(|doc| doc.to_matroid())
        .map_err(|e| error_json(&e))
}

fn ordering(m: &Matroid, order: OrderArg) -> Result<Ordering, Value> {
    Ordering::for_matroid(order.0, m).map_err(|e| error_json(&e))
}

fn search(m: &Matroid, order: Option<OrderArg>) -> Result<Ordering, Value> {
    match order {
        Some(o) => ordering(m, o),
        None => find_inductive_ordering_with(m, SearchMode::Exhaustive)
            .ok_or_else(|| error_json(&Error::NotInductivelyConnected)),
    }
}

fn domain<T>(r: realspace::Result<T>) -> Result<T, Value> {
    r.map_err(|e| error_json(&e))
}

fn run(cmd: Command) -> Result<Value, Value> {
    match cmd {
        Command::Validate(arg) => {
            let text = read(&arg.matroid)?;
            let doc = domain(MatroidDoc::parse(&text))?;
            if let MatroidDoc::Split(s) = &doc {
                let report = domain(s.to_hypergraph())?.validate();
                if !report.is_valid() {
                    return Err(error_json(&Error::InvalidHypergraph(report)));
                }
            }
            let m = domain(doc.to_matroid())?;
            eprintln!("valid matroid of rank {} on {} elements", m.rank(), m.size());
            Ok(json!({
                "valid": true,
                "d": m.size(),
                "n": m.rank(),
                "backend": m.backend_kind(),
                "circuits": m.circuits().len(),
                "paving": m.is_paving(),
                "connected": m.is_connected(),
            }))
        }
        Command::Subspaces(arg) => {
            let m = load(&arg)?;
            let subspaces = m.subspaces();
            eprintln!("{} subspaces", subspaces.len());
            Ok(json!({ "subspaces": subspaces }))
        }
        Command::NaiveDim(arg) => {
            let m = load(&arg)?;
            let nd = naive_dimension(&m);
            eprintln!("naive dimension {nd}");
            Ok(json!({ "naive_dim": nd }))
        }
        Command::ExpectedCodim { m, family, cap } => {
            let m = load(&m)?;
            let family: Family = family.parse().map_err(|e: Error| error_json(&e))?;
            let report = domain(dimension_report(&m, family, cap))?;
            match report.expected_codim {
                Some(ec) => eprintln!("expected codimension {ec} ({})", family.name()),
                None => eprintln!("family {} does not apply", family.name()),
            }
            Ok(json!(report))
        }
        Command::Type { m, order } => {
            let m = load(&m)?;
            let w = ordering(&m, order)?;
            let t = domain(ordering_type(&m, &w))?;
            eprintln!("sum of tau {}", t.tau_sum());
            Ok(json!(t))
        }
        Command::FindOrder { m, greedy } => {
            let m = load(&m)?;
            let mode = if greedy { SearchMode::Greedy } else { SearchMode::Exhaustive };
            let w = find_inductive_ordering_with(&m, mode);
            match &w {
                Some(w) => eprintln!("inductive ordering {w}"),
                None => eprintln!("no inductive ordering found"),
            }
            Ok(json!({ "order": w }))
        }
        Command::InductivelyConnected(arg) => {
            let m = load(&arg)?;
            let w = find_inductive_ordering_with(&m, SearchMode::Exhaustive);
            eprintln!("inductively connected: {}", w.is_some());
            Ok(json!({ "inductively_connected": w.is_some(), "witness": w }))
        }
        Command::Realize { m, order, out } => {
            let m = load(&m)?;
            let w = search(&m, order)?;
            let pm = domain(build_realization(&m, &w))?;
            eprintln!(
                "{} parameters, {} non-vanishing conditions along {w}",
                pm.dimension(),
                pm.nonvanishing.len()
            );
            let value = json!(pm.to_json());
            match out {
                Some(path) => {
                    let text = format!("{value}\n");
                    fs::write(&path, text).map_err(|e| {
                        json!({ "error": "IoError", "message": format!("{}: {e}", path.display()) })
                    })?;
                    Ok(json!({ "written": path.display().to_string(), "params": pm.dimension() }))
                }
                None => Ok(value),
            }
        }
        Command::Verify {
            m,
            pm,
            samples,
            seed,
            height,
            max_attempts,
        } => {
            let m = load(&m)?;
            let doc: ParamMatrixJson = domain(parse_json(&read(&pm)?))?;
            let pm = domain(ParamMatrix::from_json(&doc))?;
            let opts = SamplingOptions {
                samples,
                seed,
                height,
                max_attempts,
            };
            let report = domain(verify_realization(&pm, &m, &opts))?;
            eprintln!(
                "{}/{} samples pass, {} draws rejected",
                report.passed, report.samples, report.rejected
            );
            let mut value = json!(report);
            value["all_passed"] = json!(report.all_passed());
            Ok(value)
        }
        Command::Ideal { m, cap } => {
            let m = load(&m)?;
            let vars = generic_matrix_vars(m.rank(), m.size());
            let generators = domain(circuit_ideal_generators(&m, cap))?;
            let minors = basis_nonvanishing(&m);
            eprintln!("{} generators, {} basis minors", generators.len(), minors.len());
            let enc = |ps: &[realspace::poly::Poly]| -> Vec<PolyJson> {
                ps.iter().map(|p| PolyJson::compact(p, &vars)).collect()
            };
            Ok(json!({
                "vars": vars,
                "generators": enc(&generators),
                "basis_minors": enc(&minors),
            }))
        }
        Command::Rigid { m, order } => {
            let m = load(&m)?;
            let w = match order {
                Some(o) => Some(ordering(&m, o)?),
                None => None,
            };
            let report = domain(rigidity_report(&m, w.as_ref()))?;
            eprintln!(
                "sum of tau-tilde {} against threshold {}",
                report.sum_tau_tilde, report.threshold
            );
            Ok(json!(report))
        }
        Command::InductivelyRigid(arg) => {
            let m = load(&arg)?;
            let report = domain(is_inductively_rigid(&m))?;
            match &report.inductively_rigid_witness {
                Some(w) => eprintln!("inductively rigid along {w}"),
                None => eprintln!("no inductive-rigidity witness"),
            }
            Ok(json!(report))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(value) => {
            println!("{value}");
            ExitCode::SUCCESS
        }
        Err(value) => {
            println!("{value}");
            if let Some(msg) = value.get("message").and_then(Value::as_str) {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
    }
}
