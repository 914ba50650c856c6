//! Complete clique systems of undirected graphs.
//!
//! A complete system of cliques partitions the edge set into cliques that
//! pairwise share at most one vertex, padded with trivial one-vertex cliques
//! so that every vertex lies in exactly two members. A graph admits such a
//! system exactly when it is a line graph, and each system reconstructs an
//! undirected root.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{EdgeInput, EdgeKindInput, MixedGraph};

/// Default cap on the vertex count accepted by [`clique_systems`].
pub const DEFAULT_CLIQUE_BOUND: usize = 64;

/// A complete system of cliques, stored as vertex-index sets of the host
/// graph. The list is a multiset: two equal trivial cliques are legal (and
/// required for an isolated vertex).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliqueSystem {
    pub cliques: Vec<Vec<usize>>,
}

impl CliqueSystem {
    /// Member cliques as vertex-id lists.
    pub fn clique_ids(&self, g: &MixedGraph) -> Vec<Vec<String>> {
        self.cliques
            .iter()
            .map(|q| q.iter().map(|&v| g.vertex_id(v).to_owned()).collect())
            .collect()
    }

    /// Check the defining conditions against the host graph: pairwise
    /// intersections of size at most one, every vertex in exactly two
    /// members, the degree condition at shared vertices, and every edge
    /// inside some member.
    pub fn verify(&self, g: &MixedGraph) -> bool {
        let n = g.vertex_count();
        let mut membership = vec![0usize; n];
        for q in &self.cliques {
            for &v in q {
                membership[v] += 1;
            }
        }
        if membership.iter().any(|&c| c != 2) {
            return false;
        }
        for (i, qi) in self.cliques.iter().enumerate() {
            for qj in &self.cliques[i + 1..] {
                let inter: Vec<usize> =
                    qi.iter().filter(|v| qj.contains(v)).copied().collect();
                if inter.len() > 1 {
                    return false;
                }
                if let [u] = inter[..] {
                    if qi.len() + qj.len() != g.degrees()[u] + 2 {
                        return false;
                    }
                }
            }
        }
        // cliques are actual cliques and cover every edge
        for q in &self.cliques {
            for (a, &u) in q.iter().enumerate() {
                for &v in &q[a + 1..] {
                    if g.edge_between(u, v).is_none() {
                        return false;
                    }
                }
            }
        }
        g.edges().iter().all(|e| {
            self.cliques
                .iter()
                .any(|q| q.contains(&e.u) && q.contains(&e.v))
        })
    }
}

/// All complete clique systems of a connected undirected graph, up to
/// multiset equality. The list is empty exactly when the graph is not a
/// line graph.
pub fn clique_systems(g: &MixedGraph) -> Result<Vec<CliqueSystem>> {
    clique_systems_bounded(g, DEFAULT_CLIQUE_BOUND)
}

pub fn clique_systems_bounded(g: &MixedGraph, bound: usize) -> Result<Vec<CliqueSystem>> {
    if let Some(e) = g.first_arc() {
        return Err(Error::NotAllDigon(e.id.clone()));
    }
    let n = g.vertex_count();
    if n > bound.min(64) {
        return Err(Error::SizeBound { what: "vertices", actual: n, bound: bound.min(64) });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let adj: Vec<u64> = (0..n)
        .map(|v| {
            g.incident_edges(v)
                .iter()
                .fold(0u64, |m, &(_, w)| m | (1 << w))
        })
        .collect();

    let mut search = Search {
        g,
        adj,
        // per vertex: still-uncovered neighbors
        uncovered: (0..n)
            .map(|v| {
                g.incident_edges(v)
                    .iter()
                    .fold(0u64, |m, &(_, w)| m | (1 << w))
            })
            .collect(),
        membership: vec![0; n],
        chosen: Vec::new(),
        out: BTreeSet::new(),
    };
    search.run();

    let systems: Vec<CliqueSystem> = search
        .out
        .into_iter()
        .map(|cliques| CliqueSystem { cliques })
        .collect();
    debug_assert!(systems.iter().all(|s| s.verify(g)));
    Ok(systems)
}

struct Search<'a> {
    g: &'a MixedGraph,
    adj: Vec<u64>,
    uncovered: Vec<u64>,
    membership: Vec<usize>,
    chosen: Vec<u64>,
    out: BTreeSet<Vec<Vec<usize>>>,
}

impl Search<'_> {
    fn run(&mut self) {
        let Some((u, v)) = self.first_uncovered_edge() else {
            self.emit();
            return;
        };
        if self.membership[u] == 2 || self.membership[v] == 2 {
            return;
        }
        // every clique covering edge uv, grown inside the common
        // still-uncovered neighborhood of all chosen members
        let base = (1u64 << u) | (1 << v);
        let mut extensions = Vec::new();
        let candidates = self.extension_candidates(base, u, v);
        self.collect_extensions(base, candidates, &mut extensions);
        for clique in extensions {
            self.apply(clique);
            self.run();
            self.unapply(clique);
        }
    }

    fn first_uncovered_edge(&self) -> Option<(usize, usize)> {
        self.g
            .edges()
            .iter()
            .find(|e| self.uncovered[e.u] & (1 << e.v) != 0)
            .map(|e| (e.u, e.v))
    }

    fn extension_candidates(&self, base: u64, u: usize, v: usize) -> u64 {
        let mut cand = self.uncovered[u] & self.uncovered[v] & self.adj[u] & self.adj[v];
        cand &= !base;
        // a vertex already in two cliques cannot join another
        for w in bits(cand) {
            if self.membership[w] >= 2 {
                cand &= !(1 << w);
            }
        }
        cand
    }

    fn collect_extensions(&self, clique: u64, candidates: u64, out: &mut Vec<u64>) {
        out.push(clique);
        for w in bits(candidates) {
            // only extend upward to enumerate each clique once
            let higher = if w + 1 >= 64 {
                0
            } else {
                candidates & !((1u64 << (w + 1)) - 1)
            };
            let next = higher & self.adj[w] & self.uncovered[w];
            self.collect_extensions(clique | (1 << w), next, out);
        }
    }

    fn apply(&mut self, clique: u64) {
        for w in bits(clique) {
            self.membership[w] += 1;
            let others = clique & !(1 << w);
            self.uncovered[w] &= !others;
        }
        self.chosen.push(clique);
    }

    fn unapply(&mut self, clique: u64) {
        self.chosen.pop();
        for w in bits(clique) {
            self.membership[w] -= 1;
            let others = clique & !(1 << w);
            self.uncovered[w] |= others & self.adj[w];
        }
    }

    fn emit(&mut self) {
        let mut cliques: Vec<Vec<usize>> = self.chosen.iter().map(|&m| bits(m).collect()).collect();
        for v in 0..self.g.vertex_count() {
            for _ in self.membership[v]..2 {
                cliques.push(vec![v]);
            }
        }
        cliques.sort();
        self.out.insert(cliques);
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1 << i) != 0)
}

/// Reconstruct the undirected root from a clique system: one root vertex per
/// clique, and for each host vertex one root edge (named after it) joining
/// the two cliques that contain it.
pub fn root_from_cliques(system: &CliqueSystem, g: &MixedGraph) -> Result<MixedGraph> {
    let vertices: Vec<String> = (0..system.cliques.len()).map(|i| format!("q{i}")).collect();
    let mut edges = Vec::with_capacity(g.vertex_count());
    for (v, id) in g.vertices().iter().enumerate() {
        let homes: Vec<usize> = system
            .cliques
            .iter()
            .enumerate()
            .filter(|(_, q)| q.contains(&v))
            .map(|(i, _)| i)
            .collect();
        let [i, j] = homes[..] else {
            return Err(Error::NotALineGraph);
        };
        edges.push(EdgeInput {
            id: Some(id.clone()),
            ends: (vertices[i].clone(), vertices[j].clone()),
            kind: EdgeKindInput::Digon,
        });
    }
    MixedGraph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::digon;
    use crate::linegraph::undirected_line_graph;
    use crate::graph::matches_up_to_vertex_names;

    fn triangle() -> MixedGraph {
        MixedGraph::build(
            &["a", "b", "c"],
            vec![digon("a", "b"), digon("b", "c"), digon("a", "c")],
        )
        .unwrap()
    }

    #[test]
    fn triangle_has_two_systems() {
        let systems = clique_systems(&triangle()).unwrap();
        assert_eq!(systems.len(), 2);
        let sizes: BTreeSet<Vec<usize>> = systems
            .iter()
            .map(|s| {
                let mut v: Vec<usize> = s.cliques.iter().map(Vec::len).collect();
                v.sort();
                v
            })
            .collect();
        assert!(sizes.contains(&vec![1, 1, 1, 3]));
        assert!(sizes.contains(&vec![2, 2, 2]));
    }

    #[test]
    fn triangle_roots_are_triangle_and_star() {
        let g = triangle();
        let systems = clique_systems(&g).unwrap();
        let roots: Vec<MixedGraph> =
            systems.iter().map(|s| root_from_cliques(s, &g).unwrap()).collect();
        let degree_profiles: BTreeSet<Vec<usize>> = roots
            .iter()
            .map(|r| {
                let mut d = r.degrees();
                d.sort();
                d
            })
            .collect();
        // K3 and K_{1,3}
        assert!(degree_profiles.contains(&vec![2, 2, 2]));
        assert!(degree_profiles.contains(&vec![1, 1, 1, 3]));
        for (s, r) in systems.iter().zip(&roots) {
            assert!(s.verify(&g));
            let back = undirected_line_graph(r).unwrap();
            assert!(matches_up_to_vertex_names(&back.underlying(), &g));
        }
    }

    #[test]
    fn claw_is_not_a_line_graph() {
        let claw = MixedGraph::build(
            &["c", "1", "2", "3"],
            vec![digon("c", "1"), digon("c", "2"), digon("c", "3")],
        )
        .unwrap();
        assert!(clique_systems(&claw).unwrap().is_empty());
    }

    #[test]
    fn single_edge_has_one_system_with_root_p3() {
        let k2 = MixedGraph::build(&["u", "v"], vec![digon("u", "v")]).unwrap();
        let systems = clique_systems(&k2).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].cliques, vec![vec![0], vec![0, 1], vec![1]]);
        let root = root_from_cliques(&systems[0], &k2).unwrap();
        assert_eq!(root.vertex_count(), 3);
        assert_eq!(root.edge_count(), 2);
        let mut degrees = root.degrees();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 2]);
    }

    #[test]
    fn single_vertex_root_is_single_edge() {
        let k1 = MixedGraph::build(&["x"], vec![]).unwrap();
        let systems = clique_systems(&k1).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].cliques, vec![vec![0], vec![0]]);
        let root = root_from_cliques(&systems[0], &k1).unwrap();
        assert_eq!((root.vertex_count(), root.edge_count()), (2, 1));
    }

    #[test]
    fn k4_root_is_star() {
        let k4 = MixedGraph::build(
            &["a", "b", "c", "d"],
            vec![
                digon("a", "b"),
                digon("a", "c"),
                digon("a", "d"),
                digon("b", "c"),
                digon("b", "d"),
                digon("c", "d"),
            ],
        )
        .unwrap();
        let systems = clique_systems(&k4).unwrap();
        assert_eq!(systems.len(), 1);
        let root = root_from_cliques(&systems[0], &k4).unwrap();
        let mut degrees = root.degrees();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 1, 1, 4]);
    }

    #[test]
    fn size_bound_is_enforced() {
        let g = triangle();
        assert!(matches!(
            clique_systems_bounded(&g, 2),
            Err(Error::SizeBound { .. })
        ));
    }
}
