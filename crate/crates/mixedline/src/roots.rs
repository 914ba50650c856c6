//! Mixed-root recovery.
//!
//! Given a mixed orientation `y` of a line graph, a root is a mixed graph
//! whose mixed line graph equals `y`. Undirected roots are enumerated from
//! complete clique systems; each is then oriented by propagating incidence
//! entries from one seeded initial edge along the edge-adjacency structure,
//! and the result is kept only when the full factorization `B* B = H(y) + 2I`
//! holds exactly.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::cliques::{clique_systems, root_from_cliques};
use crate::error::{Error, Result};
use crate::graph::{EdgeInput, EdgeKindInput, MixedGraph};
use crate::matrix::{degree_diagonal, hermitian_adjacency, incidence_matrix, ExactMatrix};
use crate::monograph::UnitDiagonal;
use crate::scalar::{Eisenstein, UnitRoot, Variant};

/// A candidate mixed orientation of an undirected root, together with its
/// incidence matrix and the outcome of the algebraic verification.
#[derive(Clone, Debug)]
pub struct RootCandidate {
    pub graph: MixedGraph,
    pub incidence: ExactMatrix,
    pub verified: bool,
}

/// The verified roots of a mixed graph, grouped by undirected root.
#[derive(Clone, Debug)]
pub struct MixedRootsOutcome {
    pub families: Vec<RootFamily>,
    /// Set when recognition already fails, e.g. "no clique system".
    pub reason: Option<String>,
}

#[derive(Clone, Debug)]
pub struct RootFamily {
    pub root: MixedGraph,
    pub bipartite: bool,
    pub candidates: Vec<RootCandidate>,
}

impl MixedRootsOutcome {
    pub fn roots(&self) -> Vec<&RootCandidate> {
        self.families.iter().flat_map(|f| f.candidates.iter()).collect()
    }

    pub fn count(&self) -> usize {
        self.families.iter().map(|f| f.candidates.len()).sum()
    }
}

/// Map each edge of `g` to the vertex of `y` carrying the same id, verifying
/// that edge adjacency in `g` matches vertex adjacency in `y`.
pub(crate) fn check_line_labeling(g: &MixedGraph, y: &MixedGraph) -> Result<Vec<usize>> {
    if g.edge_count() != y.vertex_count() {
        return Err(Error::LabelingMismatch(format!(
            "{} root edges vs {} target vertices",
            g.edge_count(),
            y.vertex_count()
        )));
    }
    let to_y: Vec<usize> = g
        .edges()
        .iter()
        .map(|e| {
            y.vertex_index(&e.id)
                .map_err(|_| Error::LabelingMismatch(format!("edge {:?} has no target vertex", e.id)))
        })
        .collect::<Result<_>>()?;
    for i in 0..g.edge_count() {
        for j in (i + 1)..g.edge_count() {
            let (ei, ej) = (&g.edges()[i], &g.edges()[j]);
            let share = ei.u == ej.u || ei.u == ej.v || ei.v == ej.u || ei.v == ej.v;
            let adjacent = y.edge_between(to_y[i], to_y[j]).is_some();
            if share != adjacent {
                return Err(Error::LabelingMismatch(format!(
                    "edges {:?} and {:?} {} in the root but their vertices {} in the target",
                    ei.id,
                    ej.id,
                    if share { "meet" } else { "do not meet" },
                    if adjacent { "are adjacent" } else { "are not adjacent" },
                )));
            }
        }
    }
    Ok(to_y)
}

/// Incidence entries assigned to both endpoints of every edge, in the edge
/// order of the graph they belong to.
pub(crate) type IncidencePairs = Vec<(UnitRoot, UnitRoot)>;

/// Decode a mixed orientation from per-edge incidence entry pairs: `1` at
/// both ends is a digon, the head carries the variant unit and the tail its
/// conjugate.
pub(crate) fn decode_orientation(g: &MixedGraph, pairs: &IncidencePairs) -> MixedGraph {
    let edges = g
        .edges()
        .iter()
        .zip(pairs)
        .map(|(e, &(at_u, at_v))| {
            debug_assert_eq!(at_v, at_u.conj());
            let (u_id, v_id) = (g.vertex_id(e.u).to_owned(), g.vertex_id(e.v).to_owned());
            let kind = match at_u {
                UnitRoot::ONE => EdgeKindInput::Digon,
                // head carries gamma
                UnitRoot::OMEGA => EdgeKindInput::Arc { tail: v_id.clone(), head: u_id.clone() },
                _ => EdgeKindInput::Arc { tail: u_id.clone(), head: v_id.clone() },
            };
            EdgeInput { id: Some(e.id.clone()), ends: (u_id, v_id), kind }
        })
        .collect();
    MixedGraph::new(g.vertices().to_vec(), edges).expect("reorienting a valid graph stays valid")
}

pub(crate) fn incidence_from_pairs(g: &MixedGraph, pairs: &IncidencePairs) -> ExactMatrix {
    let rows: Vec<String> = g.vertices().to_vec();
    let cols: Vec<String> = g.edges().iter().map(|e| e.id.clone()).collect();
    let mut m = ExactMatrix::zeros(rows, cols);
    for (j, (e, &(at_u, at_v))) in g.edges().iter().zip(pairs).enumerate() {
        m.set(e.u, j, at_u.to_scalar());
        m.set(e.v, j, at_v.to_scalar());
    }
    m
}

/// Exact check of `B* B = H(y) + 2I`, indexing rows and columns of the
/// product by edge id against the vertices of `y`.
pub(crate) fn bstarb_matches(b: &ExactMatrix, y: &MixedGraph) -> bool {
    let bstarb = b.conj_transpose().mul(b).expect("labels align");
    let two = Eisenstein::new(2, 0);
    let zero = Eisenstein::zero();
    let ids: Vec<usize> = bstarb
        .row_labels()
        .iter()
        .map(|id| y.vertex_index(id).expect("labeling checked"))
        .collect();
    for i in 0..bstarb.rows() {
        for j in 0..bstarb.cols() {
            let expected = if i == j {
                two.clone()
            } else {
                y.unit_entry(ids[i], ids[j], Variant::Gamma)
                    .map(UnitRoot::to_scalar)
                    .unwrap_or_else(|| zero.clone())
            };
            if bstarb.get(i, j) != &expected {
                return false;
            }
        }
    }
    true
}

/// Orient an undirected root `g` of `y` by fixing the incidence entry of
/// `init_edge` at its first stored endpoint to `init_value` and propagating
/// along a breadth-first tree of the edge-adjacency structure. The candidate
/// is verified with the full factorization afterwards.
pub fn construct_root_candidate(
    y: &MixedGraph,
    g: &MixedGraph,
    init_edge: &str,
    init_value: UnitRoot,
) -> Result<RootCandidate> {
    if let Some(e) = g.first_arc() {
        return Err(Error::NotAllDigon(e.id.clone()));
    }
    let to_y = check_line_labeling(g, y)?;
    let e0 = g.edge_index(init_edge)?;
    let mut pairs: Vec<Option<(UnitRoot, UnitRoot)>> = vec![None; g.edge_count()];
    pairs[e0] = Some((init_value, init_value.conj()));
    let mut queue = VecDeque::from([e0]);
    while let Some(e1) = queue.pop_front() {
        let (at_u, at_v) = pairs[e1].expect("queued edges are decided");
        let edge1 = &g.edges()[e1];
        for (s, here) in [(edge1.u, at_u), (edge1.v, at_v)] {
            for &(e2, _) in g.incident_edges(s) {
                if e2 == e1 || pairs[e2].is_some() {
                    continue;
                }
                let h = y
                    .unit_entry(to_y[e1], to_y[e2], Variant::Gamma)
                    .expect("adjacent edges map to adjacent vertices");
                let val = here.mul(h);
                let edge2 = &g.edges()[e2];
                pairs[e2] = Some(if edge2.u == s {
                    (val, val.conj())
                } else {
                    (val.conj(), val)
                });
                queue.push_back(e2);
            }
        }
    }
    let pairs: IncidencePairs = pairs
        .into_iter()
        .collect::<Option<_>>()
        .ok_or(Error::Disconnected)?;
    let graph = decode_orientation(g, &pairs);
    let incidence = incidence_from_pairs(g, &pairs);
    debug_assert_eq!(incidence, incidence_matrix(&graph, Variant::Gamma));
    let verified = bstarb_matches(&incidence, y);
    Ok(RootCandidate { graph, incidence, verified })
}

/// All verified mixed roots of `y`: undirected roots come from clique
/// systems of the underlying graph, and each is tried with the three
/// possible orientations of its first edge.
pub fn mixed_roots(y: &MixedGraph) -> Result<MixedRootsOutcome> {
    if !y.is_connected() {
        return Err(Error::Disconnected);
    }
    let gamma = y.underlying();
    let systems = clique_systems(&gamma)?;
    if systems.is_empty() {
        return Ok(MixedRootsOutcome {
            families: Vec::new(),
            reason: Some("no clique system".to_owned()),
        });
    }
    let mut seen = HashSet::new();
    let mut families = Vec::new();
    for system in &systems {
        let root = root_from_cliques(system, &gamma)?;
        if !seen.insert(root_key(&root)) {
            continue;
        }
        let init = root.edges()[0].id.clone();
        let mut candidates = Vec::new();
        for seed in UnitRoot::ALL {
            let candidate = construct_root_candidate(y, &root, &init, seed)?;
            if candidate.verified {
                candidates.push(candidate);
            }
        }
        debug_assert!(candidates.len() <= 3);
        families.push(RootFamily { bipartite: root.is_bipartite(), root, candidates });
    }
    Ok(MixedRootsOutcome { families, reason: None })
}

/// Canonical description of a labeled root modulo its synthetic vertex
/// names: each edge keyed by the sorted incident-edge stars of its endpoints.
fn root_key(root: &MixedGraph) -> String {
    let star = |v: usize| -> String {
        let mut ids: Vec<&str> = root
            .incident_edges(v)
            .iter()
            .map(|&(e, _)| root.edges()[e].id.as_str())
            .collect();
        ids.sort_unstable();
        ids.join(",")
    };
    let mut lines: Vec<String> = root
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (star(e.u), star(e.v));
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            format!("{}|{}|{}", e.id, lo, hi)
        })
        .collect();
    lines.sort_unstable();
    lines.join(";")
}

/// Check whether a unit-entry matrix with the incidence pattern of `x` is in
/// fact the incidence matrix of `x`: the product `R R* = H(x) + D` is tested
/// exactly, and a positive answer is cross-checked cell-wise.
pub fn verify_incidence(r: &ExactMatrix, x: &MixedGraph) -> Result<bool> {
    if r.row_labels() != x.vertices() {
        return Err(Error::PatternMismatch("row labels differ from the vertex order".into()));
    }
    let edge_ids: Vec<String> = x.edges().iter().map(|e| e.id.clone()).collect();
    if r.col_labels() != edge_ids {
        return Err(Error::PatternMismatch("column labels differ from the edge order".into()));
    }
    for (j, e) in x.edges().iter().enumerate() {
        for i in 0..x.vertex_count() {
            let incident = i == e.u || i == e.v;
            let entry = r.get(i, j);
            if incident && entry.as_unit_root().is_none() {
                return Err(Error::PatternMismatch(format!(
                    "entry ({:?}, {:?}) should be a unit",
                    x.vertex_id(i),
                    e.id
                )));
            }
            if !incident && !entry.is_zero() {
                return Err(Error::PatternMismatch(format!(
                    "entry ({:?}, {:?}) should be zero",
                    x.vertex_id(i),
                    e.id
                )));
            }
        }
    }
    let rrstar = r.mul(&r.conj_transpose()).expect("labels align");
    let expected = hermitian_adjacency(x, Variant::Gamma)
        .add(&degree_diagonal(x))
        .expect("same labels");
    let ok = rrstar.first_difference(&expected).is_none();
    if ok {
        // the product identity pins down every entry
        assert_eq!(r, &incidence_matrix(x, Variant::Gamma));
    }
    Ok(ok)
}

/// The unit diagonal `D` with `D B1 = B2` relating two verified roots of the
/// same target over the same underlying graph.
pub fn relate_roots(x1: &RootCandidate, x2: &RootCandidate) -> Result<UnitDiagonal> {
    if x1.graph.underlying() != x2.graph.underlying() {
        return Err(Error::LabelingMismatch("candidates have different underlying roots".into()));
    }
    let g = &x1.graph;
    let mut values = BTreeMap::new();
    for v in 0..g.vertex_count() {
        let d = match g.incident_edges(v).first() {
            None => UnitRoot::ONE,
            Some(&(e, _)) => {
                let b1 = x1.incidence.get(v, e).as_unit_root().ok_or_else(|| {
                    Error::PatternMismatch("candidate incidence entry is not a unit".into())
                })?;
                let b2 = x2.incidence.get(v, e).as_unit_root().ok_or_else(|| {
                    Error::PatternMismatch("candidate incidence entry is not a unit".into())
                })?;
                b2.mul(b1.conj())
            }
        };
        values.insert(g.vertex_id(v).to_owned(), d);
    }
    // row scaling must reproduce the second incidence matrix everywhere
    for v in 0..g.vertex_count() {
        let d = values[g.vertex_id(v)].to_scalar();
        for j in 0..g.edge_count() {
            if &(&d * x1.incidence.get(v, j)) != x2.incidence.get(v, j) {
                return Err(Error::NoRelatingDiagonal);
            }
        }
    }
    Ok(UnitDiagonal::new(values))
}
