//! The mixed-graph data model.
//!
//! A mixed graph is a simple graph in which every edge is either a digon
//! (undirected) or an arc with a tail and a head. Vertex and edge order are
//! fixed at construction time and define all matrix row/column indexing.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{UnitRoot, Variant};

/// Orientation of an edge relative to its stored endpoint order.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Orientation {
    Digon,
    /// Arc from the first stored endpoint to the second.
    Forward,
    /// Arc from the second stored endpoint to the first.
    Backward,
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub id: String,
    /// Endpoint vertex indices in stored order.
    pub u: usize,
    pub v: usize,
    pub orient: Orientation,
}

/// Equality ignores endpoint storage order: the same arc may be stored as
/// `(u, v)` forward or `(v, u)` backward.
impl PartialEq for Edge {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
            && ((self.u == other.u && self.v == other.v)
                || (self.u == other.v && self.v == other.u))
            && self.arc_ends() == other.arc_ends()
    }
}

impl Eq for Edge {}

impl Edge {
    pub fn is_digon(&self) -> bool {
        self.orient == Orientation::Digon
    }

    /// `(tail, head)` vertex indices for an arc.
    pub fn arc_ends(&self) -> Option<(usize, usize)> {
        match self.orient {
            Orientation::Digon => None,
            Orientation::Forward => Some((self.u, self.v)),
            Orientation::Backward => Some((self.v, self.u)),
        }
    }

    pub fn other_end(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    fn reversed(&self) -> Edge {
        let orient = match self.orient {
            Orientation::Digon => Orientation::Digon,
            Orientation::Forward => Orientation::Backward,
            Orientation::Backward => Orientation::Forward,
        };
        Edge { orient, ..self.clone() }
    }
}

/// How an edge meets a given endpoint.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EndKind {
    Digon,
    /// The vertex is the head of the arc.
    Head,
    /// The vertex is the tail of the arc.
    Tail,
}

/// Edge description used when building a graph.
#[derive(Clone, Debug)]
pub struct EdgeInput {
    /// Explicit id; defaults to `"u-v"` with endpoints in vertex order.
    pub id: Option<String>,
    pub ends: (String, String),
    pub kind: EdgeKindInput,
}

#[derive(Clone, Debug)]
pub enum EdgeKindInput {
    Digon,
    Arc { tail: String, head: String },
}

/// A digon between `a` and `b`.
pub fn digon(a: &str, b: &str) -> EdgeInput {
    EdgeInput {
        id: None,
        ends: (a.to_owned(), b.to_owned()),
        kind: EdgeKindInput::Digon,
    }
}

/// An arc from `tail` to `head`.
pub fn arc(tail: &str, head: &str) -> EdgeInput {
    EdgeInput {
        id: None,
        ends: (tail.to_owned(), head.to_owned()),
        kind: EdgeKindInput::Arc { tail: tail.to_owned(), head: head.to_owned() },
    }
}

/// A well-formedness defect reported by [`validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    DuplicateVertexId { id: String },
    DuplicateEdgeId { id: String },
    UnknownEndpoint { edge: String, vertex: String },
    Loop { edge: String },
    ParallelEdges { first: String, second: String },
    ArcEndpointMismatch { edge: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertexId { id } => write!(f, "duplicate vertex id {id:?}"),
            Violation::DuplicateEdgeId { id } => write!(f, "duplicate edge id {id:?}"),
            Violation::UnknownEndpoint { edge, vertex } => {
                write!(f, "edge {edge:?} references unknown vertex {vertex:?}")
            }
            Violation::Loop { edge } => write!(f, "loop at edge {edge:?}"),
            Violation::ParallelEdges { first, second } => {
                write!(f, "parallel edges {first:?} and {second:?}")
            }
            Violation::ArcEndpointMismatch { edge } => {
                write!(f, "arc {edge:?} has tail/head outside its endpoint pair")
            }
        }
    }
}

/// Check a vertex list and edge list for the simple-mixed-graph invariants
/// without building a graph. Returns every defect found.
pub fn validate(vertices: &[String], edges: &[EdgeInput]) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut vindex: HashMap<&str, usize> = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        if vindex.insert(v.as_str(), i).is_some() {
            violations.push(Violation::DuplicateVertexId { id: v.clone() });
        }
    }
    let mut seen_ids: HashMap<String, ()> = HashMap::new();
    let mut seen_pairs: HashMap<(usize, usize), String> = HashMap::new();
    for e in edges {
        let id = edge_id(e, &vindex);
        if seen_ids.insert(id.clone(), ()).is_some() {
            violations.push(Violation::DuplicateEdgeId { id: id.clone() });
        }
        let mut resolved = true;
        for end in [&e.ends.0, &e.ends.1] {
            if !vindex.contains_key(end.as_str()) {
                violations.push(Violation::UnknownEndpoint { edge: id.clone(), vertex: end.clone() });
                resolved = false;
            }
        }
        if !resolved {
            continue;
        }
        let (iu, iv) = (vindex[e.ends.0.as_str()], vindex[e.ends.1.as_str()]);
        if iu == iv {
            violations.push(Violation::Loop { edge: id.clone() });
            continue;
        }
        let key = (iu.min(iv), iu.max(iv));
        if let Some(first) = seen_pairs.get(&key) {
            violations.push(Violation::ParallelEdges { first: first.clone(), second: id.clone() });
        } else {
            seen_pairs.insert(key, id.clone());
        }
        if let EdgeKindInput::Arc { tail, head } = &e.kind {
            let pair: HashSet<&str> = [e.ends.0.as_str(), e.ends.1.as_str()].into();
            if !pair.contains(tail.as_str()) || !pair.contains(head.as_str()) || tail == head {
                violations.push(Violation::ArcEndpointMismatch { edge: id.clone() });
            }
        }
    }
    violations
}

fn edge_id(e: &EdgeInput, vindex: &HashMap<&str, usize>) -> String {
    if let Some(id) = &e.id {
        return id.clone();
    }
    let (a, b) = (&e.ends.0, &e.ends.1);
    match (vindex.get(a.as_str()), vindex.get(b.as_str())) {
        (Some(&ia), Some(&ib)) if ib < ia => format!("{b}-{a}"),
        _ => format!("{a}-{b}"),
    }
}

/// An immutable mixed graph. All derived objects (matrices, line graphs,
/// walks) index by the stored vertex and edge order.
#[derive(Clone)]
pub struct MixedGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vindex: HashMap<String, usize>,
    eindex: HashMap<String, usize>,
    /// Per vertex: incident `(edge index, other endpoint)` in edge order.
    adj: Vec<Vec<(usize, usize)>>,
}

impl PartialEq for MixedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for MixedGraph {}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MixedGraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .finish()
    }
}

impl MixedGraph {
    pub fn new(vertices: Vec<String>, edge_inputs: Vec<EdgeInput>) -> Result<Self> {
        let violations = validate(&vertices, &edge_inputs);
        if !violations.is_empty() {
            return Err(Error::Invalid(violations));
        }
        let vindex: HashMap<String, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let borrow: HashMap<&str, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut edges = Vec::with_capacity(edge_inputs.len());
        let mut eindex = HashMap::new();
        for e in &edge_inputs {
            let id = edge_id(e, &borrow);
            let u = vindex[&e.ends.0];
            let v = vindex[&e.ends.1];
            let orient = match &e.kind {
                EdgeKindInput::Digon => Orientation::Digon,
                EdgeKindInput::Arc { tail, .. } => {
                    if vindex[tail] == u {
                        Orientation::Forward
                    } else {
                        Orientation::Backward
                    }
                }
            };
            eindex.insert(id.clone(), edges.len());
            edges.push(Edge { id, u, v, orient });
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            adj[e.u].push((i, e.v));
            adj[e.v].push((i, e.u));
        }
        Ok(MixedGraph { vertices, edges, vindex, eindex, adj })
    }

    /// Convenience constructor for literal graphs.
    pub fn build(vertices: &[&str], edges: Vec<EdgeInput>) -> Result<Self> {
        MixedGraph::new(vertices.iter().map(|s| s.to_string()).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_id(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vindex.get(id).copied().ok_or_else(|| Error::UnknownVertex(id.to_owned()))
    }

    pub fn edge_index(&self, id: &str) -> Result<usize> {
        self.eindex.get(id).copied().ok_or_else(|| Error::UnknownEdge(id.to_owned()))
    }

    pub fn incident_edges(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Index of the edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adj[u].iter().find(|&&(_, w)| w == v).map(|&(e, _)| e)
    }

    /// How edge `e` meets vertex `w`; `w` must be an endpoint.
    pub fn end_kind(&self, e: usize, w: usize) -> EndKind {
        let edge = &self.edges[e];
        debug_assert!(w == edge.u || w == edge.v);
        match edge.arc_ends() {
            None => EndKind::Digon,
            Some((_, head)) if head == w => EndKind::Head,
            Some(_) => EndKind::Tail,
        }
    }

    /// Hermitian adjacency entry `H_{u,v}` as a unit root, or `None` when
    /// `u` and `v` are not adjacent (or equal).
    pub fn unit_entry(&self, u: usize, v: usize, variant: Variant) -> Option<UnitRoot> {
        let e = self.edge_between(u, v)?;
        Some(match self.end_kind(e, u) {
            EndKind::Digon => UnitRoot::ONE,
            // arc u -> v: entry alpha
            EndKind::Tail => variant.unit(),
            EndKind::Head => variant.unit().conj(),
        })
    }

    /// Replace every arc by a digon; ids and order are preserved.
    pub fn underlying(&self) -> MixedGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.orient = Orientation::Digon;
        }
        g
    }

    /// Reverse every arc; digons are unchanged.
    pub fn reverse_arcs(&self) -> MixedGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            *e = e.reversed();
        }
        g
    }

    pub fn is_all_digon(&self) -> bool {
        self.edges.iter().all(Edge::is_digon)
    }

    pub fn first_arc(&self) -> Option<&Edge> {
        self.edges.iter().find(|e| !e.is_digon())
    }

    /// Underlying-graph degree of each vertex, in vertex order. Arcs and
    /// digons both contribute one.
    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn degree_map(&self) -> BTreeMap<String, usize> {
        self.vertices
            .iter()
            .zip(self.degrees())
            .map(|(v, d)| (v.clone(), d))
            .collect()
    }

    /// Connectivity of the underlying graph. The empty graph counts as
    /// disconnected.
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let tree = self.bfs(0);
        tree.order.len() == self.vertices.len()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.vertices.len()
    }

    /// Two-coloring of the underlying graph if it is bipartite. Assumes a
    /// connected graph for a meaningful answer on every component.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.vertices.len()];
        for start in 0..self.vertices.len() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let cx = color[x].unwrap();
                for &(_, y) in &self.adj[x] {
                    match color[y] {
                        None => {
                            color[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Sub-mixed-graph induced on the given vertex indices; vertex ids,
    /// edge ids and relative orders are preserved.
    pub fn induced(&self, keep: &[usize]) -> MixedGraph {
        let keep_set: HashSet<usize> = keep.iter().copied().collect();
        let vertices: Vec<String> = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| keep_set.contains(&e.u) && keep_set.contains(&e.v))
            .map(|e| EdgeInput {
                id: Some(e.id.clone()),
                ends: (self.vertices[e.u].clone(), self.vertices[e.v].clone()),
                kind: match e.arc_ends() {
                    None => EdgeKindInput::Digon,
                    Some((t, h)) => EdgeKindInput::Arc {
                        tail: self.vertices[t].clone(),
                        head: self.vertices[h].clone(),
                    },
                },
            })
            .collect();
        MixedGraph::new(vertices, edges).expect("induced subgraph of a valid graph is valid")
    }

    /// Breadth-first spanning forest rooted at `start` (single component).
    pub(crate) fn bfs(&self, start: usize) -> BfsTree {
        let n = self.vertices.len();
        let mut parent = vec![None; n];
        let mut visited = vec![false; n];
        let mut tree_edge = vec![false; self.edges.len()];
        let mut order = Vec::with_capacity(n);
        visited[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &(e, y) in &self.adj[x] {
                if !visited[y] {
                    visited[y] = true;
                    parent[y] = Some((x, e));
                    tree_edge[e] = true;
                    queue.push_back(y);
                }
            }
        }
        BfsTree { order, parent, tree_edge }
    }
}

pub(crate) struct BfsTree {
    /// Visit order; first entry is the root.
    pub order: Vec<usize>,
    /// `parent[v] = (parent vertex, connecting edge)` for non-roots.
    pub parent: Vec<Option<(usize, usize)>>,
    pub tree_edge: Vec<bool>,
}

impl BfsTree {
    /// Vertex path from the root down to `v` (inclusive).
    pub fn path_from_root(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some((p, _)) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }
}

/// A walk given by its vertex sequence; closed iff first equals last.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Walk {
    pub vertices: Vec<String>,
}

impl Walk {
    pub fn new(vertices: Vec<String>) -> Self {
        Walk { vertices }
    }

    pub fn of(vertices: &[&str]) -> Self {
        Walk { vertices: vertices.iter().map(|s| s.to_string()).collect() }
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.len() >= 2 && self.vertices.first() == self.vertices.last()
    }

    pub fn reversed(&self) -> Walk {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Walk { vertices }
    }
}

/// Labeled equality irrespective of storage order: same vertex set, and the
/// same edges by id, endpoint pair and arc direction.
pub fn labeled_eq(a: &MixedGraph, b: &MixedGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let va: HashSet<&str> = a.vertices.iter().map(String::as_str).collect();
    let vb: HashSet<&str> = b.vertices.iter().map(String::as_str).collect();
    if va != vb {
        return false;
    }
    a.edges.iter().all(|ea| {
        let Ok(ib) = b.edge_index(&ea.id) else { return false };
        let eb = &b.edges[ib];
        let ends_a: HashSet<&str> = [a.vertex_id(ea.u), a.vertex_id(ea.v)].into();
        let ends_b: HashSet<&str> = [b.vertex_id(eb.u), b.vertex_id(eb.v)].into();
        if ends_a != ends_b {
            return false;
        }
        match (ea.arc_ends(), eb.arc_ends()) {
            (None, None) => true,
            (Some((ta, ha)), Some((tb, hb))) => {
                a.vertex_id(ta) == b.vertex_id(tb) && a.vertex_id(ha) == b.vertex_id(hb)
            }
            _ => false,
        }
    })
}

/// Decide whether `a` and `b` are the same mixed graph up to a renaming of
/// vertices that fixes every edge id, endpoint incidence and arc direction.
///
/// Both graphs must use the same edge id set. Candidate images are matched by
/// the set of incident edge ids, with backtracking for the rare symmetric
/// cases.
pub fn matches_up_to_vertex_names(a: &MixedGraph, b: &MixedGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let ids_a: HashSet<&str> = a.edges.iter().map(|e| e.id.as_str()).collect();
    let ids_b: HashSet<&str> = b.edges.iter().map(|e| e.id.as_str()).collect();
    if ids_a != ids_b {
        return false;
    }
    let star = |g: &MixedGraph, v: usize| -> Vec<String> {
        let mut s: Vec<String> = g.adj[v].iter().map(|&(e, _)| g.edges[e].id.clone()).collect();
        s.sort();
        s
    };
    let stars_b: Vec<Vec<String>> = (0..b.vertex_count()).map(|v| star(b, v)).collect();
    let candidates: Vec<Vec<usize>> = (0..a.vertex_count())
        .map(|v| {
            let sa = star(a, v);
            (0..b.vertex_count()).filter(|&w| stars_b[w] == sa).collect()
        })
        .collect();

    fn assign(
        v: usize,
        a: &MixedGraph,
        b: &MixedGraph,
        candidates: &[Vec<usize>],
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if v == a.vertex_count() {
            return edges_match(a, b, map);
        }
        for &w in &candidates[v] {
            if used[w] {
                continue;
            }
            map[v] = Some(w);
            used[w] = true;
            if assign(v + 1, a, b, candidates, map, used) {
                return true;
            }
            map[v] = None;
            used[w] = false;
        }
        false
    }

    fn edges_match(a: &MixedGraph, b: &MixedGraph, map: &[Option<usize>]) -> bool {
        a.edges.iter().all(|ea| {
            let Ok(ib) = b.edge_index(&ea.id) else { return false };
            let eb = &b.edges[ib];
            let (mu, mv) = (map[ea.u].unwrap(), map[ea.v].unwrap());
            if !((mu == eb.u && mv == eb.v) || (mu == eb.v && mv == eb.u)) {
                return false;
            }
            match (ea.arc_ends(), eb.arc_ends()) {
                (None, None) => true,
                (Some((ta, ha)), Some((tb, hb))) => map[ta] == Some(tb) && map[ha] == Some(hb),
                _ => false,
            }
        })
    }

    let mut map = vec![None; a.vertex_count()];
    let mut used = vec![false; b.vertex_count()];
    assign(0, a, b, &candidates, &mut map, &mut used)
}
