use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use mixedline::generate::{random_graph, GraphKind};
use mixedline::graph::MixedGraph;
use mixedline::io::{from_json, to_dot, to_json, GraphDoc};
use mixedline::matrix::{char_poly, check_factorizations, hermitian_adjacency};
use mixedline::monograph::{check_clique_cycle_condition, compute_store, general_root_recovery, tree_root_recovery, walk_value, GeneralRecovery};
use mixedline::oracle::{oracle_roots, DEFAULT_MAX_ORACLE_EDGES};
use mixedline::roots::mixed_roots;
use mixedline::linegraph::mixed_line_graph;
use mixedline::scalar::{UnitRoot, Variant};
use mixedline::Error;

/// Exact mixed-graph algebra: line graphs, roots, monographs and the
/// identities connecting them.
#[derive(Parser)]
#[command(name = "mixedline", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mixed line graph of a root graph
    LineGraph {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[arg(long, default_value = "gamma")]
        variant: String,
    },
    /// All verified mixed roots of a target graph
    Roots {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Store and witness report
    Monograph {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[arg(long, default_value = "gamma")]
        variant: String,
    },
    /// Verify the incidence factorizations on a graph
    Check {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        /// all, bstarb or bbstar
        #[arg(long, default_value = "all")]
        identity: String,
        #[arg(long, default_value = "gamma")]
        variant: String,
    },
    /// Exact characteristic polynomial of the Hermitian adjacency matrix
    Charpoly {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[arg(long, default_value = "gamma")]
        variant: String,
    },
    /// Recover a root orientation over a tree (or a graph with a spanning tree)
    Recover {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(long)]
        tree: PathBuf,
        /// Optional host graph; the tree must span it
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Seed exponent: 0, 1 or 2
        #[arg(long, default_value_t = 0)]
        seed: u8,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Brute-force enumeration of the mixed roots over a given undirected graph
    OracleRoots {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Seeded random mixed graph
    Random {
        /// tree, bipartite, connected or cycle
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// DOT rendering of a graph
    ExportDot {
        #[arg(short = 'i', long)]
        input: PathBuf,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    pub fn code(&self) -> u8 {
        self.code
    }

    pub fn to_json(&self) -> String {
        json!({"error": {"code": self.code, "message": self.message}}).to_string()
    }

    fn validation(message: impl Into<String>) -> CliError {
        CliError { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> CliError {
        let code = match &err {
            Error::Json(_) => 1,
            Error::Invalid(_)
            | Error::Schema(_)
            | Error::UnknownVertex(_)
            | Error::UnknownEdge(_)
            | Error::DimensionMismatch(_)
            | Error::NotSquare
            | Error::NotHermitian
            | Error::PatternMismatch(_)
            | Error::MissingDiagonalEntry(_) => 2,
            Error::SizeBound { .. } => 3,
            Error::Disconnected
            | Error::NotAllDigon(_)
            | Error::NotATree
            | Error::NotAWalk(_, _)
            | Error::NotACycle(_)
            | Error::NotMonograph
            | Error::LabelingMismatch(_)
            | Error::NotALineGraph
            | Error::NoRelatingDiagonal
            | Error::NotAnOrientationMatrix(_, _) => 4,
        };
        CliError { code, message: err.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> CliError {
        CliError { code: 1, message: err.to_string() }
    }
}

fn load_graph(path: &Path) -> Result<MixedGraph, CliError> {
    let text = fs::read_to_string(path)?;
    Ok(from_json(&text)?)
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn parse_variant(s: &str) -> Result<Variant, CliError> {
    Variant::parse(s).ok_or_else(|| CliError::validation(format!("unknown variant {s:?}")))
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::LineGraph { input, output, variant } => {
            let g = load_graph(&input)?;
            let variant = parse_variant(&variant)?;
            let lg = mixed_line_graph(&g, variant);
            emit(output.as_deref(), &to_json(&lg))
        }
        Command::Roots { input, output } => {
            let y = load_graph(&input)?;
            let outcome = mixed_roots(&y)?;
            let reason = match &outcome.reason {
                Some(r) => Some(r.clone()),
                None if outcome.count() == 0 => {
                    let report = check_clique_cycle_condition(&y)?;
                    Some(if report.ok {
                        "no orientation verified".to_owned()
                    } else {
                        "clique-cycle condition violated".to_owned()
                    })
                }
                None => None,
            };
            #[derive(Serialize)]
            struct FamilyOut {
                root: GraphDoc,
                bipartite: bool,
                count: usize,
            }
            #[derive(Serialize)]
            struct RootsOut {
                roots: Vec<GraphDoc>,
                count: usize,
                families: Vec<FamilyOut>,
                #[serde(skip_serializing_if = "Option::is_none")]
                reason: Option<String>,
            }
            let out = RootsOut {
                roots: outcome
                    .roots()
                    .iter()
                    .map(|c| GraphDoc::from_graph(&c.graph))
                    .collect(),
                count: outcome.count(),
                families: outcome
                    .families
                    .iter()
                    .map(|f| FamilyOut {
                        root: GraphDoc::from_graph(&f.root),
                        bipartite: f.bipartite,
                        count: f.candidates.len(),
                    })
                    .collect(),
                reason,
            };
            emit(output.as_deref(), &serde_json::to_string_pretty(&out).expect("serializable"))
        }
        Command::Monograph { input, output, variant } => {
            let g = load_graph(&input)?;
            let variant = parse_variant(&variant)?;
            if g.vertex_count() == 0 {
                return Err(Error::Disconnected.into());
            }
            let sr = compute_store(&g, &g.vertices()[0], UnitRoot::ONE, variant)?;
            let witness = match &sr.witness_cycle {
                None => Value::Null,
                Some(w) => {
                    let weight = walk_value(&g, w, variant)?;
                    json!({"vertices": w.vertices, "weight": weight.as_str()})
                }
            };
            let out = json!({
                "monograph": sr.store.is_trivial(),
                "store": sr.store.elements().iter().map(|u| u.as_str()).collect::<Vec<_>>(),
                "witness": witness,
            });
            emit(output.as_deref(), &serde_json::to_string_pretty(&out).expect("serializable"))
        }
        Command::Check { input, output, identity, variant } => {
            let g = load_graph(&input)?;
            let variant = parse_variant(&variant)?;
            let report = check_factorizations(&g, variant);
            let out = match identity.as_str() {
                "all" => serde_json::to_value(&report).expect("serializable"),
                "bstarb" => json!({"bstarb_ok": report.bstarb_ok}),
                "bbstar" => json!({"bbstar_ok": report.bbstar_ok}),
                other => {
                    return Err(CliError::validation(format!("unknown identity {other:?}")))
                }
            };
            emit(output.as_deref(), &serde_json::to_string_pretty(&out).expect("serializable"))
        }
        Command::Charpoly { input, output, variant } => {
            let g = load_graph(&input)?;
            let variant = parse_variant(&variant)?;
            let poly = char_poly(&hermitian_adjacency(&g, variant))?;
            let coefficients: Vec<Value> = poly
                .coeffs
                .iter()
                .map(|c| match i64::try_from(c) {
                    Ok(small) => json!(small),
                    Err(_) => json!(c.to_string()),
                })
                .collect();
            let out = json!({
                "degree": poly.degree(),
                "coefficients": coefficients,
                "pretty": poly.to_string(),
            });
            emit(output.as_deref(), &serde_json::to_string_pretty(&out).expect("serializable"))
        }
        Command::Recover { input, tree, graph, seed, output } => {
            if seed > 2 {
                return Err(CliError::validation("seed must be 0, 1 or 2"));
            }
            let y = load_graph(&input)?;
            let t = load_graph(&tree)?;
            let seed = UnitRoot::new(seed as i64);
            let out = match graph {
                None => {
                    let candidate = tree_root_recovery(&y, &t, seed)?;
                    json!({
                        "root": GraphDoc::from_graph(&candidate.graph),
                        "verified": candidate.verified,
                        "seed": seed.exp(),
                    })
                }
                Some(gpath) => {
                    let g = load_graph(&gpath)?;
                    match general_root_recovery(&y, &g, &t, seed)? {
                        GeneralRecovery::Root(candidate) => json!({
                            "root": GraphDoc::from_graph(&candidate.graph),
                            "verified": candidate.verified,
                            "seed": seed.exp(),
                        }),
                        GeneralRecovery::Violation { edge } => json!({
                            "violation_edge": edge,
                            "seed": seed.exp(),
                        }),
                    }
                }
            };
            emit(output.as_deref(), &serde_json::to_string_pretty(&out).expect("serializable"))
        }
        Command::OracleRoots { input, graph, output } => {
            let y = load_graph(&input)?;
            let g = load_graph(&graph)?;
            let bound = std::env::var("MIXEDLINE_MAX_EDGES")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(DEFAULT_MAX_ORACLE_EDGES);
            let roots = oracle_roots(&y, &g, bound)?;
            let out = json!({
                "count": roots.len(),
                "roots": roots.iter().map(GraphDoc::from_graph).collect::<Vec<_>>(),
            });
            emit(output.as_deref(), &serde_json::to_string_pretty(&out).expect("serializable"))
        }
        Command::Random { kind, n, seed, output } => {
            let kind = GraphKind::parse(&kind)
                .ok_or_else(|| CliError::validation(format!("unknown kind {kind:?}")))?;
            if n == 0 {
                return Err(CliError::validation("n must be at least 1"));
            }
            let g = random_graph(kind, n, seed)?;
            emit(output.as_deref(), &to_json(&g))
        }
        Command::ExportDot { input, output } => {
            let g = load_graph(&input)?;
            emit(output.as_deref(), &to_dot(&g))
        }
    }
}
