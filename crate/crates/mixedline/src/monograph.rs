//! Walk values, stores, switching and orientation matrices.
//!
//! The value of a walk is the product of the Hermitian adjacency entries
//! along it. A connected mixed graph whose cycles all have value one is a
//! monograph; transporting a seed value along a spanning tree then yields a
//! unit diagonal that switches the graph onto its undirected shadow, and the
//! same transport drives root recovery for line graphs of trees.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cliques::clique_systems;
use crate::error::{Error, Result};
use crate::graph::{EndKind, MixedGraph, Walk};
use crate::linegraph::mixed_line_graph;
use crate::matrix::{incidence_matrix, ExactMatrix};
use crate::roots::{
    bstarb_matches, check_line_labeling, decode_orientation, incidence_from_pairs, IncidencePairs,
    RootCandidate,
};
use crate::scalar::{UnitRoot, Variant};

/// A diagonal matrix with entries in `{1, w, w^2}`, indexed by vertex or
/// edge ids.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct UnitDiagonal {
    values: BTreeMap<String, UnitRoot>,
}

impl UnitDiagonal {
    pub fn new(values: BTreeMap<String, UnitRoot>) -> Self {
        UnitDiagonal { values }
    }

    pub fn identity(ids: impl IntoIterator<Item = String>) -> Self {
        UnitDiagonal { values: ids.into_iter().map(|id| (id, UnitRoot::ONE)).collect() }
    }

    pub fn values(&self) -> &BTreeMap<String, UnitRoot> {
        &self.values
    }

    pub fn get(&self, id: &str) -> Result<UnitRoot> {
        self.values
            .get(id)
            .copied()
            .ok_or_else(|| Error::MissingDiagonalEntry(id.to_owned()))
    }

    /// Dense matrix with the given label order.
    pub fn to_matrix(&self, order: &[String]) -> Result<ExactMatrix> {
        let values = order
            .iter()
            .map(|id| self.get(id).map(UnitRoot::to_scalar))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix::diagonal(order.to_vec(), values))
    }
}

/// The store of a connected mixed graph: the subgroup of `{1, w, w^2}`
/// spanned by the values of its closed walks. Being a subgroup of a cyclic
/// group of prime order it is trivial or everything.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Store {
    Trivial,
    Full,
}

impl Store {
    pub fn is_trivial(self) -> bool {
        self == Store::Trivial
    }

    pub fn elements(self) -> Vec<UnitRoot> {
        match self {
            Store::Trivial => vec![UnitRoot::ONE],
            Store::Full => UnitRoot::ALL.to_vec(),
        }
    }
}

/// Outcome of transporting a seed value over a spanning tree.
#[derive(Clone, Debug)]
pub struct StoreResult {
    pub base_vertex: String,
    /// Transported value at every vertex.
    pub potentials: BTreeMap<String, UnitRoot>,
    pub store: Store,
    /// A fundamental cycle of value different from one, present iff the
    /// store is nontrivial.
    pub witness_cycle: Option<Walk>,
}

/// Product of the Hermitian adjacency entries along a walk.
pub fn walk_value(d: &MixedGraph, w: &Walk, variant: Variant) -> Result<UnitRoot> {
    let mut value = UnitRoot::ONE;
    for pair in w.vertices.windows(2) {
        let a = d.vertex_index(&pair[0])?;
        let b = d.vertex_index(&pair[1])?;
        let h = d
            .unit_entry(a, b, variant)
            .ok_or_else(|| Error::NotAWalk(pair[0].clone(), pair[1].clone()))?;
        value = value.mul(h);
    }
    Ok(value)
}

/// Transport `seed` from `base` over a breadth-first spanning tree and
/// evaluate every non-tree edge's fundamental cycle.
pub fn compute_store(
    d: &MixedGraph,
    base: &str,
    seed: UnitRoot,
    variant: Variant,
) -> Result<StoreResult> {
    let root = d.vertex_index(base)?;
    let tree = d.bfs(root);
    if tree.order.len() != d.vertex_count() {
        return Err(Error::Disconnected);
    }
    let mut p = vec![UnitRoot::ONE; d.vertex_count()];
    p[root] = seed;
    for &v in &tree.order[1..] {
        let (parent, _) = tree.parent[v].expect("non-root vertices have parents");
        let h = d.unit_entry(parent, v, variant).expect("tree edges join adjacent vertices");
        p[v] = p[parent].mul(h);
    }

    let mut store = Store::Trivial;
    let mut witness_cycle = None;
    for (e, edge) in d.edges().iter().enumerate() {
        if tree.tree_edge[e] {
            continue;
        }
        let (x, y) = (edge.u, edge.v);
        let h = d.unit_entry(x, y, variant).expect("edge endpoints are adjacent");
        let value = p[x].mul(h).mul(p[y].conj());
        if !value.is_one() {
            store = Store::Full;
            if witness_cycle.is_none() {
                let walk = fundamental_cycle(d, &tree, x, y);
                debug_assert_eq!(walk_value(d, &walk, variant).unwrap(), value);
                witness_cycle = Some(walk);
            }
        }
    }

    Ok(StoreResult {
        base_vertex: base.to_owned(),
        potentials: d
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, id)| (id.clone(), p[i]))
            .collect(),
        store,
        witness_cycle,
    })
}

/// The cycle formed by the tree paths to both ends of a chord, trimmed at
/// their deepest common ancestor: `a .. x, y .. a`.
fn fundamental_cycle(d: &MixedGraph, tree: &crate::graph::BfsTree, x: usize, y: usize) -> Walk {
    let px = tree.path_from_root(x);
    let py = tree.path_from_root(y);
    let mut common = 0;
    while common < px.len() && common < py.len() && px[common] == py[common] {
        common += 1;
    }
    let mut vertices: Vec<String> = px[common - 1..]
        .iter()
        .map(|&v| d.vertex_id(v).to_owned())
        .collect();
    for &v in py[common - 1..].iter().rev() {
        vertices.push(d.vertex_id(v).to_owned());
    }
    Walk::new(vertices)
}

/// Whether every cycle has value one, together with a violating cycle if
/// not.
pub fn is_monograph(d: &MixedGraph, variant: Variant) -> Result<(bool, Option<Walk>)> {
    if d.vertex_count() == 0 {
        return Err(Error::Disconnected);
    }
    let sr = compute_store(d, &d.vertices()[0], UnitRoot::ONE, variant)?;
    Ok((sr.store.is_trivial(), sr.witness_cycle))
}

/// The store potentials of a monograph as a unit diagonal `O` satisfying
/// `O H O* = A` with `A` the underlying adjacency matrix.
pub fn orientation_matrix(x: &MixedGraph, base: &str, seed: UnitRoot) -> Result<UnitDiagonal> {
    let sr = compute_store(x, base, seed, Variant::Gamma)?;
    if !sr.store.is_trivial() {
        return Err(Error::NotMonograph);
    }
    Ok(UnitDiagonal::new(sr.potentials))
}

/// Orient an undirected graph by conjugation: the result has
/// `H = O* A(g) O`, shares the underlying graph, and is always a monograph.
pub fn switch_with_diagonal(g: &MixedGraph, o: &UnitDiagonal) -> Result<MixedGraph> {
    if let Some(e) = g.first_arc() {
        return Err(Error::NotAllDigon(e.id.clone()));
    }
    let pairs: IncidencePairs = g
        .edges()
        .iter()
        .map(|e| {
            let (oa, ob) = (o.get(g.vertex_id(e.u))?, o.get(g.vertex_id(e.v))?);
            // H_{u,v} = conj(O_u) O_v; entry w means an arc u -> v
            let h = oa.conj().mul(ob);
            Ok(match h {
                UnitRoot::ONE => (UnitRoot::ONE, UnitRoot::ONE),
                // arc u -> v: tail u carries w^2, head v carries w
                UnitRoot::OMEGA => (UnitRoot::OMEGA_SQ, UnitRoot::OMEGA),
                _ => (UnitRoot::OMEGA, UnitRoot::OMEGA_SQ),
            })
        })
        .collect::<Result<_>>()?;
    Ok(decode_orientation(g, &pairs))
}

/// Conjugate by the diagonal that is `factor` at one vertex and one
/// elsewhere. Locally permutes out-arc, in-arc and digon at that vertex.
pub fn switch_at_vertex(d: &MixedGraph, vertex: &str, factor: UnitRoot) -> Result<MixedGraph> {
    let v = d.vertex_index(vertex)?;
    let pairs: IncidencePairs = d
        .edges()
        .iter()
        .enumerate()
        .map(|(e, edge)| {
            let at_u = incidence_unit(d, e, edge.u);
            if edge.u != v && edge.v != v {
                return (at_u, at_u.conj());
            }
            let other = edge.other_end(v);
            // new H_{v, other} = factor * old H_{v, other}
            let h = factor.mul(d.unit_entry(v, other, Variant::Gamma).expect("incident"));
            let (tail_like, head_like) = match h {
                UnitRoot::ONE => (UnitRoot::ONE, UnitRoot::ONE),
                UnitRoot::OMEGA => (UnitRoot::OMEGA_SQ, UnitRoot::OMEGA),
                _ => (UnitRoot::OMEGA, UnitRoot::OMEGA_SQ),
            };
            if edge.u == v {
                (tail_like, head_like)
            } else {
                (head_like, tail_like)
            }
        })
        .collect();
    Ok(decode_orientation(d, &pairs))
}

fn incidence_unit(d: &MixedGraph, e: usize, at: usize) -> UnitRoot {
    match d.end_kind(e, at) {
        EndKind::Digon => UnitRoot::ONE,
        EndKind::Head => UnitRoot::OMEGA,
        EndKind::Tail => UnitRoot::OMEGA_SQ,
    }
}

/// Push an orientation matrix of `x` to one of its line graph:
/// `O'_{uv} = O_u B_{u,uv}` (the same value from either end).
pub fn edge_orientation_matrix(x: &MixedGraph, o: &UnitDiagonal) -> Result<UnitDiagonal> {
    // o must actually switch x onto its underlying graph
    for edge in x.edges() {
        let (u, v) = (edge.u, edge.v);
        let h = x.unit_entry(u, v, Variant::Gamma).expect("incident");
        let ou = o.get(x.vertex_id(u))?;
        let ov = o.get(x.vertex_id(v))?;
        if !ou.mul(h).mul(ov.conj()).is_one() {
            return Err(Error::NotAnOrientationMatrix(
                x.vertex_id(u).to_owned(),
                x.vertex_id(v).to_owned(),
            ));
        }
    }
    let mut values = BTreeMap::new();
    for (e, edge) in x.edges().iter().enumerate() {
        let from_u = o.get(x.vertex_id(edge.u))?.mul(incidence_unit(x, e, edge.u));
        let from_v = o.get(x.vertex_id(edge.v))?.mul(incidence_unit(x, e, edge.v));
        debug_assert_eq!(from_u, from_v);
        values.insert(edge.id.clone(), from_u);
    }
    Ok(UnitDiagonal::new(values))
}

/// Per-clique cycle condition: in a mixed orientation of a line graph, every
/// cycle inside a clique of a complete clique system must have value one.
#[derive(Clone, Debug, Serialize)]
pub struct CliqueCycleReport {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violating_clique: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_cycle: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<UnitRoot>,
}

pub fn check_clique_cycle_condition(y: &MixedGraph) -> Result<CliqueCycleReport> {
    let gamma = y.underlying();
    let systems = clique_systems(&gamma)?;
    let Some(system) = systems.first() else {
        return Err(Error::NotALineGraph);
    };
    for clique in &system.cliques {
        if clique.len() < 3 {
            continue;
        }
        let induced = y.induced(clique);
        let (mono, witness) = is_monograph(&induced, Variant::Gamma)?;
        if !mono {
            let witness = witness.expect("nontrivial store carries a witness");
            let weight = walk_value(&induced, &witness, Variant::Gamma)?;
            return Ok(CliqueCycleReport {
                ok: false,
                violating_clique: Some(
                    clique.iter().map(|&v| y.vertex_id(v).to_owned()).collect(),
                ),
                witness_cycle: Some(witness.vertices),
                weight: Some(weight),
            });
        }
    }
    Ok(CliqueCycleReport { ok: true, violating_clique: None, witness_cycle: None, weight: None })
}

/// Value of a cycle in `x` paired with the value of the corresponding cycle
/// in the mixed line graph; the two are always equal.
pub fn cycle_weight_pair(x: &MixedGraph, c: &Walk) -> Result<(UnitRoot, UnitRoot)> {
    if !c.is_closed() || c.vertices.len() < 4 {
        return Err(Error::NotACycle("need a closed walk on at least three vertices".into()));
    }
    let interior = &c.vertices[..c.vertices.len() - 1];
    let mut seen = std::collections::HashSet::new();
    if !interior.iter().all(|v| seen.insert(v)) {
        return Err(Error::NotACycle("vertices repeat".into()));
    }
    let value_root = walk_value(x, c, Variant::Gamma)?;
    let lg = mixed_line_graph(x, Variant::Gamma);
    let mut line_vertices = Vec::with_capacity(c.vertices.len());
    for pair in c.vertices.windows(2) {
        let a = x.vertex_index(&pair[0])?;
        let b = x.vertex_index(&pair[1])?;
        let e = x
            .edge_between(a, b)
            .ok_or_else(|| Error::NotAWalk(pair[0].clone(), pair[1].clone()))?;
        line_vertices.push(x.edges()[e].id.clone());
    }
    line_vertices.push(line_vertices[0].clone());
    let value_line = walk_value(&lg, &Walk::new(line_vertices), Variant::Gamma)?;
    Ok((value_root, value_line))
}

/// Shared transport step of the recovery procedures: walk the tree from its
/// first vertex, deriving the incidence entries of the sought root and the
/// vertex potentials from the edge potentials of the target.
///
/// For a tree edge from a decided vertex `a` to `b` over edge `e`:
/// entry at `a` is `O'_e * conj(O_a)`, the far entry its conjugate, and
/// `O_b = conj(O'_e) * conj(O_a)`.
fn propagate_root_orientation(
    t: &MixedGraph,
    oprime_per_edge: &[UnitRoot],
    seed: UnitRoot,
) -> Result<(Vec<UnitRoot>, IncidencePairs)> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let tree = t.bfs(0);
    let mut o = vec![UnitRoot::ONE; t.vertex_count()];
    let mut pairs: Vec<Option<(UnitRoot, UnitRoot)>> = vec![None; t.edge_count()];
    o[tree.order[0]] = seed;
    for &v in &tree.order[1..] {
        let (a, e) = tree.parent[v].expect("non-root vertices have parents");
        let op = oprime_per_edge[e];
        let near = op.mul(o[a].conj());
        let edge = &t.edges()[e];
        pairs[e] = Some(if edge.u == a { (near, near.conj()) } else { (near.conj(), near) });
        o[v] = op.conj().mul(o[a].conj());
    }
    let pairs = pairs.into_iter().collect::<Option<_>>().expect("tree is connected");
    Ok((o, pairs))
}

/// Recover a mixed orientation of the tree `t` whose line graph is `y`,
/// one candidate per seed value. Succeeds for every seed when `y` is a
/// connected monograph over the line graph of `t`.
pub fn tree_root_recovery(y: &MixedGraph, t: &MixedGraph, seed: UnitRoot) -> Result<RootCandidate> {
    if let Some(e) = t.first_arc() {
        return Err(Error::NotAllDigon(e.id.clone()));
    }
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let to_y = check_line_labeling(t, y)?;
    if t.edge_count() == 0 {
        let incidence = incidence_matrix(t, Variant::Gamma);
        return Ok(RootCandidate { graph: t.clone(), incidence, verified: true });
    }
    let sr = compute_store(y, &y.vertices()[0], UnitRoot::ONE, Variant::Gamma)?;
    if !sr.store.is_trivial() {
        return Err(Error::NotMonograph);
    }
    let oprime: Vec<UnitRoot> = to_y
        .iter()
        .map(|&yi| sr.potentials[y.vertex_id(yi)])
        .collect();
    let (_, pairs) = propagate_root_orientation(t, &oprime, seed)?;
    let graph = decode_orientation(t, &pairs);
    let incidence = incidence_from_pairs(t, &pairs);
    debug_assert_eq!(incidence, incidence_matrix(&graph, Variant::Gamma));
    let verified = bstarb_matches(&incidence, y);
    Ok(RootCandidate { graph, incidence, verified })
}

/// Outcome of the spanning-tree recovery over a graph with extra edges.
#[derive(Clone, Debug)]
pub enum GeneralRecovery {
    Root(RootCandidate),
    /// First non-tree edge whose endpoint potentials are inconsistent with
    /// the target's edge potential.
    Violation { edge: String },
}

/// Recover a root over an arbitrary connected undirected graph `g` from the
/// transport along a spanning tree `t`; every non-tree edge `xy` must
/// satisfy `O_x O_y = (O'_{xy})^2`.
pub fn general_root_recovery(
    y: &MixedGraph,
    g: &MixedGraph,
    t: &MixedGraph,
    seed: UnitRoot,
) -> Result<GeneralRecovery> {
    if let Some(e) = g.first_arc() {
        return Err(Error::NotAllDigon(e.id.clone()));
    }
    let to_y = check_line_labeling(g, y)?;
    // t must be a spanning tree of g, edge ids included
    let mut spanning_ids = std::collections::HashSet::new();
    for e in t.edges() {
        let ge = g
            .edge_index(&e.id)
            .map_err(|_| Error::LabelingMismatch(format!("tree edge {:?} is not in the graph", e.id)))?;
        let (a, b) = (t.vertex_id(e.u), t.vertex_id(e.v));
        let gedge = &g.edges()[ge];
        let (ga, gb) = (g.vertex_id(gedge.u), g.vertex_id(gedge.v));
        if !((a == ga && b == gb) || (a == gb && b == ga)) {
            return Err(Error::LabelingMismatch(format!(
                "tree edge {:?} joins different vertices in the graph",
                e.id
            )));
        }
        spanning_ids.insert(e.id.clone());
    }
    if t.vertex_count() != g.vertex_count() || t.vertices().iter().any(|v| g.vertex_index(v).is_err()) {
        return Err(Error::LabelingMismatch("tree does not span the graph's vertices".into()));
    }

    if g.edge_count() == 0 {
        return tree_root_recovery(y, t, seed).map(GeneralRecovery::Root);
    }
    let sr = compute_store(y, &y.vertices()[0], UnitRoot::ONE, Variant::Gamma)?;
    if !sr.store.is_trivial() {
        return Err(Error::NotMonograph);
    }
    let oprime_t: Vec<UnitRoot> = t
        .edges()
        .iter()
        .map(|e| {
            let yi = to_y[g.edge_index(&e.id).expect("checked above")];
            sr.potentials[y.vertex_id(yi)]
        })
        .collect();
    let (o_t, _) = propagate_root_orientation(t, &oprime_t, seed)?;
    // potentials on g's vertex order
    let o: Vec<UnitRoot> = g
        .vertices()
        .iter()
        .map(|id| o_t[t.vertex_index(id).expect("t spans g")])
        .collect();

    for (e, edge) in g.edges().iter().enumerate() {
        if spanning_ids.contains(&edge.id) {
            continue;
        }
        let op = sr.potentials[y.vertex_id(to_y[e])];
        if o[edge.u].mul(o[edge.v]) != op.pow(2) {
            return Ok(GeneralRecovery::Violation { edge: edge.id.clone() });
        }
    }

    // H(X) = O* A(g) O
    let pairs: IncidencePairs = g
        .edges()
        .iter()
        .map(|edge| {
            let h = o[edge.u].conj().mul(o[edge.v]);
            match h {
                UnitRoot::ONE => (UnitRoot::ONE, UnitRoot::ONE),
                UnitRoot::OMEGA => (UnitRoot::OMEGA_SQ, UnitRoot::OMEGA),
                _ => (UnitRoot::OMEGA, UnitRoot::OMEGA_SQ),
            }
        })
        .collect();
    let graph = decode_orientation(g, &pairs);
    let incidence = incidence_from_pairs(g, &pairs);
    let verified = bstarb_matches(&incidence, y);
    Ok(GeneralRecovery::Root(RootCandidate { graph, incidence, verified }))
}
