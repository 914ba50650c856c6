//! Line graphs of mixed graphs.
//!
//! The mixed line graph has one vertex per edge of the root. For each pair of
//! adjacent root edges the connecting line-graph edge is chosen by a local
//! rule on how the two edges meet their shared vertex; the rule is the
//! table-driven counterpart of reading `B* B - 2I` as a Hermitian adjacency
//! matrix, and the two routes are checked against each other in the tests.

use crate::error::{Error, Result};
use crate::graph::{EdgeInput, EdgeKindInput, EndKind, MixedGraph};
use crate::scalar::Variant;

/// Orientation of one line-graph edge relative to the ordered pair of root
/// edges that induce it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum PairRule {
    Digon,
    FirstToSecond,
    SecondToFirst,
}

impl PairRule {
    fn reversed(self) -> PairRule {
        match self {
            PairRule::Digon => PairRule::Digon,
            PairRule::FirstToSecond => PairRule::SecondToFirst,
            PairRule::SecondToFirst => PairRule::FirstToSecond,
        }
    }
}

/// The local rule for two root edges meeting at a shared vertex, given how
/// each edge meets that vertex.
pub(crate) fn pair_rule(first: EndKind, second: EndKind) -> PairRule {
    use EndKind::*;
    match (first, second) {
        // in-arc followed by out-arc points along the traversal
        (Head, Tail) => PairRule::FirstToSecond,
        (Tail, Head) => PairRule::SecondToFirst,
        // two out-arcs or two in-arcs cancel
        (Tail, Tail) | (Head, Head) => PairRule::Digon,
        // arc against digon: the digon side wins the arrow
        (Head, Digon) => PairRule::SecondToFirst,
        (Digon, Head) => PairRule::FirstToSecond,
        (Tail, Digon) => PairRule::FirstToSecond,
        (Digon, Tail) => PairRule::SecondToFirst,
        (Digon, Digon) => PairRule::Digon,
    }
}

/// The mixed line graph of `d`. Vertices are the edge ids of `d`, in edge
/// order; for the `gamma2` variant every produced arc is reversed.
pub fn mixed_line_graph(d: &MixedGraph, variant: Variant) -> MixedGraph {
    let vertices: Vec<String> = d.edges().iter().map(|e| e.id.clone()).collect();
    let mut edges = Vec::new();
    for i in 0..d.edge_count() {
        for j in (i + 1)..d.edge_count() {
            let (ei, ej) = (&d.edges()[i], &d.edges()[j]);
            let shared = [ei.u, ei.v]
                .into_iter()
                .find(|&w| w == ej.u || w == ej.v);
            let Some(s) = shared else { continue };
            let mut rule = pair_rule(d.end_kind(i, s), d.end_kind(j, s));
            if variant == Variant::GammaSquared {
                rule = rule.reversed();
            }
            let kind = match rule {
                PairRule::Digon => EdgeKindInput::Digon,
                PairRule::FirstToSecond => {
                    EdgeKindInput::Arc { tail: ei.id.clone(), head: ej.id.clone() }
                }
                PairRule::SecondToFirst => {
                    EdgeKindInput::Arc { tail: ej.id.clone(), head: ei.id.clone() }
                }
            };
            edges.push(EdgeInput { id: None, ends: (ei.id.clone(), ej.id.clone()), kind });
        }
    }
    MixedGraph::new(vertices, edges).expect("line graph of a simple graph is simple")
}

/// The classical line graph of an undirected graph; input must be all-digon.
pub fn undirected_line_graph(g: &MixedGraph) -> Result<MixedGraph> {
    if let Some(e) = g.first_arc() {
        return Err(Error::NotAllDigon(e.id.clone()));
    }
    Ok(mixed_line_graph(g, Variant::Gamma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{arc, digon, matches_up_to_vertex_names, Orientation};
    use crate::matrix::{hermitian_adjacency, incidence_matrix, ExactMatrix};
    use crate::scalar::Eisenstein;

    fn two_edge_root(e1: EdgeInput, e2: EdgeInput) -> MixedGraph {
        MixedGraph::build(&["u", "v", "w"], vec![e1, e2]).unwrap()
    }

    fn single_line_edge(d: &MixedGraph) -> (String, Orientation) {
        let lg = mixed_line_graph(d, Variant::Gamma);
        assert_eq!(lg.edge_count(), 1);
        let e = &lg.edges()[0];
        (lg.vertex_id(e.u).to_owned(), e.orient)
    }

    // The six local patterns, first endpoints (u-v) then (v-w).
    #[test]
    fn local_rule_in_then_out_gives_forward_arc() {
        let d = two_edge_root(arc("u", "v"), arc("v", "w"));
        assert_eq!(single_line_edge(&d), ("u-v".into(), Orientation::Forward));
    }

    #[test]
    fn local_rule_two_out_arcs_gives_digon() {
        let d = two_edge_root(arc("v", "u"), arc("v", "w"));
        assert_eq!(single_line_edge(&d).1, Orientation::Digon);
    }

    #[test]
    fn local_rule_two_in_arcs_gives_digon() {
        let d = two_edge_root(arc("u", "v"), arc("w", "v"));
        assert_eq!(single_line_edge(&d).1, Orientation::Digon);
    }

    #[test]
    fn local_rule_in_arc_then_digon_points_back() {
        let d = two_edge_root(arc("u", "v"), digon("v", "w"));
        assert_eq!(single_line_edge(&d), ("u-v".into(), Orientation::Backward));
    }

    #[test]
    fn local_rule_out_arc_then_digon_points_forward() {
        let d = two_edge_root(arc("v", "u"), digon("v", "w"));
        assert_eq!(single_line_edge(&d), ("u-v".into(), Orientation::Forward));
    }

    #[test]
    fn local_rule_two_digons_give_digon() {
        let d = two_edge_root(digon("u", "v"), digon("v", "w"));
        assert_eq!(single_line_edge(&d).1, Orientation::Digon);
    }

    #[test]
    fn gamma2_variant_reverses_all_arcs() {
        let d = two_edge_root(arc("u", "v"), arc("v", "w"));
        let lg = mixed_line_graph(&d, Variant::Gamma);
        let lg2 = mixed_line_graph(&d, Variant::GammaSquared);
        assert_eq!(lg2, lg.reverse_arcs());
    }

    #[test]
    fn gamma2_line_graph_equals_gamma_line_graph_of_reversal() {
        let d = MixedGraph::build(
            &["0", "1", "2", "3"],
            vec![arc("0", "1"), digon("1", "2"), arc("3", "2"), arc("0", "3"), digon("0", "2")],
        )
        .unwrap();
        assert_eq!(mixed_line_graph(&d, Variant::GammaSquared), mixed_line_graph(&d.reverse_arcs(), Variant::Gamma));
    }

    /// Both variants against the algebraic route: `H(LG) = B* B - 2I`, where
    /// `B` is the gamma incidence matrix of the root.
    #[test]
    fn table_agrees_with_incidence_product() {
        let d = MixedGraph::build(
            &["0", "1", "2", "3"],
            vec![arc("0", "1"), digon("1", "2"), arc("3", "2"), arc("0", "3"), digon("0", "2")],
        )
        .unwrap();
        let b = incidence_matrix(&d, Variant::Gamma);
        let bstarb = b.conj_transpose().mul(&b).unwrap();
        let two_i = ExactMatrix::scalar(bstarb.row_labels().to_vec(), Eisenstein::new(2, 0));
        let product = bstarb.sub(&two_i).unwrap();
        for variant in [Variant::Gamma, Variant::GammaSquared] {
            let lg = mixed_line_graph(&d, variant);
            assert_eq!(hermitian_adjacency(&lg, variant), product, "variant {variant}");
        }
    }

    #[test]
    fn underlying_commutes_with_line_graph() {
        let d = MixedGraph::build(
            &["0", "1", "2", "3"],
            vec![arc("0", "1"), digon("1", "2"), arc("3", "1"), arc("0", "3")],
        )
        .unwrap();
        let lhs = mixed_line_graph(&d, Variant::Gamma).underlying();
        let rhs = undirected_line_graph(&d.underlying()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn line_graph_of_p3_is_single_digon() {
        let p3 = MixedGraph::build(&["a", "b", "c"], vec![digon("a", "b"), digon("b", "c")]).unwrap();
        let lg = undirected_line_graph(&p3).unwrap();
        assert_eq!(lg.vertex_count(), 2);
        assert_eq!(lg.edge_count(), 1);
        assert!(lg.is_all_digon());
    }

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let claw = MixedGraph::build(
            &["c", "1", "2", "3"],
            vec![digon("c", "1"), digon("c", "2"), digon("c", "3")],
        )
        .unwrap();
        let lg = undirected_line_graph(&claw).unwrap();
        assert_eq!(lg.vertex_count(), 3);
        assert_eq!(lg.edge_count(), 3);
        assert!(lg.is_all_digon());
        assert!(lg.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn undirected_line_graph_rejects_arcs() {
        let d = MixedGraph::build(&["u", "v"], vec![arc("u", "v")]).unwrap();
        assert!(matches!(undirected_line_graph(&d), Err(Error::NotAllDigon(_))));
    }

    #[test]
    fn line_graph_of_mixed_cycle_is_mixed_cycle() {
        let c4 = MixedGraph::build(
            &["0", "1", "2", "3"],
            vec![arc("0", "1"), digon("1", "2"), arc("3", "2"), digon("0", "3")],
        )
        .unwrap();
        let lg = mixed_line_graph(&c4, Variant::Gamma);
        assert_eq!(lg.vertex_count(), 4);
        assert_eq!(lg.edge_count(), 4);
        assert!(lg.degrees().iter().all(|&d| d == 2));
        assert!(matches_up_to_vertex_names(&lg.underlying(), &mixed_line_graph(&c4.underlying(), Variant::Gamma)));
    }
}
