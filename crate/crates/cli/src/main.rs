mod json;
mod tables;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use inull_core::catalog::{self, CatalogError};
use inull_core::cecohom::{self, Coefficients, CohomError};
use inull_core::gcm::{self, GcmError};
use inull_core::koszul;
use inull_core::leibniz::{self, LeibnizError};
use inull_core::rootkit::{self, PropertyP, RootError, RootSystem, RootType};
use inull_core::{LieAlgebra, LieError};

#[derive(Parser)]
#[command(name = "inull", version, about = "Exact invariant-form, cohomology and Kac-Moody computations for Lie algebras")]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffArg {
    Trivial,
    Adjoint,
}

impl From<CoeffArg> for Coefficients {
    fn from(c: CoeffArg) -> Self {
        match c {
            CoeffArg::Trivial => Coefficients::Trivial,
            CoeffArg::Adjoint => Coefficients::Adjoint,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Koszul analysis of a relations file or catalog algebra.
    Analyze {
        /// File path or catalog name.
        source: String,
        /// Also print Betti numbers with these coefficients.
        #[arg(long, value_enum)]
        betti: Option<CoeffArg>,
        /// Also print ZL²₀, the coupled dimension and dim HL².
        #[arg(long)]
        leibniz: bool,
    },
    /// Positive roots of a simple root system.
    Roots {
        /// Type letter, or a full name such as E6.
        kind: String,
        rank: Option<usize>,
        /// Check property (P).
        #[arg(long = "check-P")]
        check_p: bool,
        /// Print every positive root as a coordinate vector.
        #[arg(long)]
        list: bool,
    },
    /// Nilradical of the Borel subalgebra.
    Nilradical {
        kind: String,
        rank: Option<usize>,
        /// Run the Koszul analysis and report I-nullity.
        #[arg(long = "check-inull")]
        check_inull: bool,
        /// Print the structure constants in the relations format.
        #[arg(long)]
        relations: bool,
    },
    /// Borel subalgebra (torus plus nilradical).
    Borel {
        kind: String,
        rank: Option<usize>,
        #[arg(long = "check-inull")]
        check_inull: bool,
        #[arg(long)]
        relations: bool,
    },
    /// Generalized Cartan matrix of a nilpotent algebra, or classify a given matrix.
    Gcm {
        /// File path or catalog name.
        source: Option<String>,
        /// 1-based generator indices; defaults to a complement of C²g.
        #[arg(long, value_delimiter = ',')]
        generators: Option<Vec<usize>>,
        /// Classify this matrix, e.g. "2,-1;-1,2".
        #[arg(long, conflicts_with_all = ["source", "generators"])]
        matrix: Option<String>,
    },
    /// Chevalley–Eilenberg cohomology dimensions.
    Cohomology {
        source: String,
        #[arg(long, value_enum, default_value = "trivial")]
        coefficients: CoeffArg,
        /// Only this degree (no size cap).
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Catalog names, dimensions and stated facts.
    List,
    /// Recompute the published tables and compare cell by cell.
    ReportTables {
        /// Directory of extra relations files, checked against the table rows they name.
        #[arg(long)]
        extra: Option<PathBuf>,
        /// Include the E7 and E8 nilradicals.
        #[arg(long)]
        slow: bool,
    },
}

/// An error with its exit code.
pub struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn new(code: u8, msg: impl Into<String>) -> Self {
        Failure { code, msg: msg.into() }
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        Failure::new(1, e.to_string())
    }
}

impl From<RootError> for Failure {
    fn from(e: RootError) -> Self {
        match e {
            RootError::InvalidType(_) | RootError::InvalidRank { .. } => Failure::new(2, e.to_string()),
            other => Failure::new(1, other.to_string()),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Root(r) => r.into(),
            other => Failure::new(1, other.to_string()),
        }
    }
}

impl From<GcmError> for Failure {
    fn from(e: GcmError) -> Self {
        let code = if matches!(e, GcmError::DegenerateWeights { .. }) { 3 } else { 1 };
        Failure::new(code, e.to_string())
    }
}

impl From<CohomError> for Failure {
    fn from(e: CohomError) -> Self {
        Failure::new(1, e.to_string())
    }
}

impl From<LeibnizError> for Failure {
    fn from(e: LeibnizError) -> Self {
        Failure::new(1, e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn emit(as_json: bool, doc: &Value, text: impl FnOnce(&Value) -> String) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(doc).expect("JSON serializes"));
    } else {
        print!("{}", text(doc));
    }
}

fn run(cli: &Cli) -> Res<u8> {
    let as_json = cli.json;
    match &cli.command {
        Command::Analyze { source, betti, leibniz } => {
            let alg = load(source)?;
            let doc = analyze_doc(source, &alg, betti.map(Into::into), *leibniz)?;
            emit(as_json, &doc, json::analyze_text);
        }
        Command::Roots { kind, rank, check_p, list } => {
            let (t, r) = root_type(kind, *rank)?;
            let rs = RootSystem::new(t, r)?;
            let doc = roots_doc(&rs, *check_p, *list);
            emit(as_json, &doc, json::roots_text);
        }
        Command::Nilradical {
            kind,
            rank,
            check_inull,
            relations,
        } => {
            let (t, r) = root_type(kind, *rank)?;
            let alg = rootkit::nilradical(t, r)?.into_algebra();
            let doc = construction_doc(&format!("nil:{}{}", t.letter(), r), &alg, *check_inull, *relations);
            emit(as_json, &doc, json::construction_text);
        }
        Command::Borel {
            kind,
            rank,
            check_inull,
            relations,
        } => {
            let (t, r) = root_type(kind, *rank)?;
            let alg = rootkit::borel(t, r)?;
            let doc = construction_doc(&format!("borel:{}{}", t.letter(), r), &alg, *check_inull, *relations);
            emit(as_json, &doc, json::construction_text);
        }
        Command::Gcm {
            source,
            generators,
            matrix,
        } => {
            let doc = gcm_doc(source.as_deref(), generators.as_deref(), matrix.as_deref())?;
            emit(as_json, &doc, json::gcm_text);
        }
        Command::Cohomology {
            source,
            coefficients,
            degree,
        } => {
            let alg = load(source)?;
            let doc = cohomology_doc(source, &alg, (*coefficients).into(), *degree)?;
            emit(as_json, &doc, json::cohomology_text);
        }
        Command::List => {
            let doc = list_doc();
            emit(as_json, &doc, json::list_text);
        }
        Command::ReportTables { extra, slow } => {
            let report = tables::run(extra.as_deref(), *slow)?;
            let doc = report.to_json();
            emit(as_json, &doc, |_| report.to_text());
            return Ok(if report.failures() > 0 { 1 } else { 0 });
        }
    }
    Ok(0)
}

/// Reads a relations file if `source` names one, else resolves a catalog name.
pub fn load(source: &str) -> Res<LieAlgebra> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::new(1, format!("{source}: {e}")))?;
        return LieAlgebra::from_relations(&text).map_err(|e| Failure::new(1, format!("{source}: {e}")));
    }
    catalog::get(source).map_err(|e| match e {
        CatalogError::UnknownName(_) => Failure::new(1, format!("'{source}' is neither a file nor a catalog name")),
        other => other.into(),
    })
}

fn root_type(kind: &str, rank: Option<usize>) -> Res<(RootType, usize)> {
    let name = match rank {
        Some(r) => format!("{}{}", kind.trim(), r),
        None => kind.trim().to_string(),
    };
    Ok(RootType::parse(&name)?)
}


pub fn analyze_doc(source: &str, alg: &LieAlgebra, betti: Option<Coefficients>, with_leibniz: bool) -> Res<Value> {
    let report = koszul::analyze(alg);
    let mut doc = json::koszul_report(&report);
    let obj = doc.as_object_mut().expect("report is an object");
    let mut head = serde_json::Map::new();
    head.insert("input".into(), json!(source));
    head.insert("name".into(), json!(alg.name()));
    for (k, v) in std::mem::take(obj) {
        head.insert(k, v);
    }
    if let Some(c) = betti {
        let numbers = cecohom::betti(alg, c)?;
        head.insert("betti".into(), json!({ "coefficients": json::coeff_name(c), "numbers": numbers }));
    }
    if with_leibniz {
        let zl = leibniz::zl2_0(alg).len();
        let coupled = leibniz::coupled_dim(alg)?;
        let hl2 = leibniz::hl2_dim(alg)?;
        head.insert(
            "leibniz".into(),
            json!({
                "ZL2_0": zl,
                "coupled": coupled,
                "uncoupling": coupled == 0,
                "HL2": hl2,
            }),
        );
    }
    Ok(Value::Object(head))
}

fn roots_doc(rs: &RootSystem, check_p: bool, list: bool) -> Value {
    let mut doc = json!({
        "type": rs.name(),
        "positive_roots": rs.len(),
    });
    if check_p {
        doc["property_P"] = match rootkit::property_p(rs) {
            PropertyP::Holds => json!({ "holds": true }),
            PropertyP::Fails { alpha, beta, gamma } => {
                let witness: Vec<Value> = [alpha, beta, gamma]
                    .iter()
                    .map(|&i| {
                        json!({
                            "index": i + 1,
                            "coefficients": rs.coefficients(i),
                            "vector": json::rat_list(rs.root(i)),
                        })
                    })
                    .collect();
                json!({ "holds": false, "witness": witness })
            }
        };
    }
    if list {
        doc["roots"] = Value::Array((0..rs.len()).map(|i| json::rat_list(rs.root(i))).collect());
    }
    doc
}

fn construction_doc(name: &str, alg: &LieAlgebra, check_inull: bool, relations: bool) -> Value {
    let alg = &alg.clone().with_name(name);
    let mut doc = json!({ "name": name, "dim": alg.dim() });
    if check_inull {
        let report = koszul::analyze(alg);
        doc["I_null"] = json!(report.i_null);
        doc["analysis"] = json::koszul_report(&report);
    }
    if relations {
        doc["relations"] = json!(alg.to_relations_text());
    }
    doc
}

fn gcm_doc(source: Option<&str>, generators: Option<&[usize]>, matrix: Option<&str>) -> Res<Value> {
    let (a, gens) = match (source, matrix) {
        (_, Some(m)) => (gcm::Gcm::parse(m)?, None),
        (Some(s), None) => {
            let alg = load(s)?;
            let gens: Vec<usize> = match generators {
                Some(g) => {
                    if let Some(&bad) = g.iter().find(|&&i| i == 0 || i > alg.dim()) {
                        return Err(Failure::new(1, format!("generator index {bad} out of range 1..={}", alg.dim())));
                    }
                    g.iter().map(|i| i - 1).collect()
                }
                None => gcm::default_generators(&alg),
            };
            (gcm::compute_gcm(&alg, &gens)?, Some(gens))
        }
        (None, None) => return Err(Failure::new(1, "give a source or --matrix")),
    };
    let ty = gcm::classify(&a);
    let mut doc = json!({
        "matrix": a.rows(),
        "type": ty.to_string(),
    });
    if let Some(g) = gens {
        doc["generators"] = json!(g.iter().map(|i| i + 1).collect::<Vec<_>>());
    }
    doc["display"] = json!(a.to_string());
    Ok(doc)
}

fn cohomology_doc(source: &str, alg: &LieAlgebra, c: Coefficients, degree: Option<usize>) -> Res<Value> {
    let mut doc = json!({
        "input": source,
        "dim": alg.dim(),
        "coefficients": json::coeff_name(c),
    });
    match degree {
        Some(k) => {
            if k > alg.dim() {
                return Err(Failure::new(1, format!("degree {k} exceeds dim {}", alg.dim())));
            }
            doc["degree"] = json!(k);
            doc["dim_H"] = json!(cecohom::cohomology_dim(alg, k, c));
        }
        None => doc["betti"] = json!(cecohom::betti(alg, c)?),
    }
    Ok(doc)
}

fn list_doc() -> Value {
    let entries: Vec<Value> = catalog::builtin_entries()
        .iter()
        .map(|name| match catalog::expected(name) {
            Ok(e) => json!({ "name": name, "dim": e.dim, "facts": e.fact_labels() }),
            Err(err) => json!({ "name": name, "error": err.to_string() }),
        })
        .collect();
    json!({ "entries": entries, "families": catalog::FAMILIES })
}
