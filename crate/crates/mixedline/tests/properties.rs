//! Seeded invariant sweeps across random instances, plus proptest round
//! trips for the serialization layer.

use proptest::prelude::*;

use mixedline::generate::{random_graph, GraphKind};
use mixedline::graph::{labeled_eq, matches_up_to_vertex_names, MixedGraph, Walk};
use mixedline::io::{from_json, to_json};
use mixedline::linegraph::{mixed_line_graph, undirected_line_graph};
use mixedline::matrix::{
    char_poly, check_factorizations, degree_diagonal, hermitian_adjacency, incidence_matrix,
    ExactMatrix,
};
use mixedline::monograph::{
    compute_store, cycle_weight_pair, edge_orientation_matrix, is_monograph, orientation_matrix,
    switch_at_vertex, switch_with_diagonal, tree_root_recovery, UnitDiagonal,
};
use mixedline::oracle::{char_poly_by_determinant, oracle_roots};
use mixedline::roots::{mixed_roots, relate_roots, verify_incidence};
use mixedline::scalar::{Eisenstein, UnitRoot, Variant};

fn sample_graphs(count: usize, max_n: usize) -> Vec<MixedGraph> {
    (0..count)
        .map(|seed| {
            let kinds = [GraphKind::Tree, GraphKind::Connected, GraphKind::Cycle, GraphKind::Bipartite];
            let kind = kinds[seed % kinds.len()];
            let n = 2 + seed % (max_n - 1);
            random_graph(kind, n, seed as u64).unwrap()
        })
        .collect()
}

#[test]
fn incidence_columns_are_conjugate_unit_pairs() {
    for g in sample_graphs(24, 8) {
        let b = incidence_matrix(&g, Variant::Gamma);
        for j in 0..b.cols() {
            let nonzero: Vec<_> =
                (0..b.rows()).map(|i| b.get(i, j)).filter(|x| !x.is_zero()).collect();
            assert_eq!(nonzero.len(), 2);
            assert_eq!(nonzero[0], &nonzero[1].conj());
            assert!(nonzero[0].as_unit_root().is_some());
        }
    }
}

#[test]
fn factorizations_hold_for_both_variants() {
    for g in sample_graphs(40, 9) {
        for variant in [Variant::Gamma, Variant::GammaSquared] {
            let report = check_factorizations(&g, variant);
            assert!(report.all_ok(), "graph {g:?} variant {variant}: {:?}", report.witness);
        }
    }
}

#[test]
fn bstarb_pattern_matches_the_classical_line_graph() {
    for g in sample_graphs(20, 8) {
        let b = incidence_matrix(&g, Variant::Gamma);
        let bstarb = b.conj_transpose().mul(&b).unwrap();
        let two_i = ExactMatrix::scalar(bstarb.row_labels().to_vec(), Eisenstein::new(2, 0));
        let m = bstarb.sub(&two_i).unwrap();
        let classical = undirected_line_graph(&g.underlying()).unwrap();
        let a = hermitian_adjacency(&classical, Variant::Gamma);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                assert_eq!(m.get(i, j).is_zero(), a.get(i, j).is_zero());
            }
            assert!(m.get(i, i).is_zero());
        }
    }
}

#[test]
fn both_line_graph_variants_decode_the_gamma_incidence_product() {
    for g in sample_graphs(24, 8) {
        let b = incidence_matrix(&g, Variant::Gamma);
        let bstarb = b.conj_transpose().mul(&b).unwrap();
        let two_i = ExactMatrix::scalar(bstarb.row_labels().to_vec(), Eisenstein::new(2, 0));
        let product = bstarb.sub(&two_i).unwrap();
        for variant in [Variant::Gamma, Variant::GammaSquared] {
            let lg = mixed_line_graph(&g, variant);
            assert_eq!(hermitian_adjacency(&lg, variant), product);
        }
        let lg = mixed_line_graph(&g, Variant::Gamma);
        let lg2 = mixed_line_graph(&g, Variant::GammaSquared);
        assert_eq!(lg2, lg.reverse_arcs());
        assert_eq!(lg2, mixed_line_graph(&g.reverse_arcs(), Variant::Gamma));
        assert_eq!(lg.underlying(), undirected_line_graph(&g.underlying()).unwrap());
    }
}

#[test]
fn char_poly_agrees_with_the_determinant_expansion() {
    for g in sample_graphs(18, 6) {
        let h = hermitian_adjacency(&g, Variant::Gamma);
        assert_eq!(char_poly(&h).unwrap(), char_poly_by_determinant(&h).unwrap());
    }
}

#[test]
fn cayley_hamilton_vanishes_exactly() {
    for g in sample_graphs(12, 5) {
        let h = hermitian_adjacency(&g, Variant::Gamma);
        let p = char_poly(&h).unwrap();
        let evaluated = p.eval_matrix(&h).unwrap();
        let zero = ExactMatrix::zeros(h.row_labels().to_vec(), h.col_labels().to_vec());
        assert_eq!(evaluated, zero);
    }
}

#[test]
fn walk_reversal_conjugates_and_concatenation_multiplies() {
    for g in sample_graphs(16, 8) {
        if g.edge_count() == 0 {
            continue;
        }
        // random-ish walk: follow incident edges greedily
        let mut walk = vec![0usize];
        for _ in 0..5 {
            let v = *walk.last().unwrap();
            let Some(&(_, next)) = g.incident_edges(v).first() else { break };
            walk.push(next);
        }
        let ids: Vec<String> = walk.iter().map(|&v| g.vertex_id(v).to_owned()).collect();
        let w = Walk::new(ids.clone());
        let v1 = mixedline::monograph::walk_value(&g, &w, Variant::Gamma).unwrap();
        let rev = mixedline::monograph::walk_value(&g, &w.reversed(), Variant::Gamma).unwrap();
        assert_eq!(rev, v1.conj());
        // concatenation with itself reversed closes up to value one
        assert_eq!(v1.mul(rev), UnitRoot::ONE);
    }
}

#[test]
fn store_is_independent_of_base_and_seed() {
    for g in sample_graphs(20, 8) {
        let stores: Vec<_> = g
            .vertices()
            .iter()
            .flat_map(|base| {
                UnitRoot::ALL
                    .into_iter()
                    .map(|seed| compute_store(&g, base, seed, Variant::Gamma).unwrap().store)
            })
            .collect();
        assert!(stores.windows(2).all(|w| w[0] == w[1]), "graph {g:?}");
    }
}

#[test]
fn monograph_status_is_preserved_by_the_line_graph() {
    for g in sample_graphs(30, 8) {
        let (mono_root, _) = is_monograph(&g, Variant::Gamma).unwrap();
        let lg = mixed_line_graph(&g, Variant::Gamma);
        if lg.vertex_count() == 0 {
            continue;
        }
        let (mono_lg, _) = is_monograph(&lg, Variant::Gamma).unwrap();
        assert_eq!(mono_root, mono_lg, "graph {g:?}");
    }
}

#[test]
fn switched_graphs_are_monographs_with_working_orientation_matrices() {
    for (i, g) in sample_graphs(20, 8).into_iter().enumerate() {
        let under = g.underlying();
        let o = UnitDiagonal::new(
            under
                .vertices()
                .iter()
                .enumerate()
                .map(|(k, id)| (id.clone(), UnitRoot::new((k as i64) + (i as i64))))
                .collect(),
        );
        let x = switch_with_diagonal(&under, &o).unwrap();
        assert_eq!(x.underlying(), under);
        let (mono, _) = is_monograph(&x, Variant::Gamma).unwrap();
        assert!(mono, "switched graph must be a monograph");

        let om = orientation_matrix(&x, &x.vertices()[0], UnitRoot::ONE).unwrap();
        let m = om.to_matrix(&x.vertices().to_vec()).unwrap();
        let conjugated = m
            .mul(&hermitian_adjacency(&x, Variant::Gamma))
            .unwrap()
            .mul(&m.conj_transpose())
            .unwrap();
        assert_eq!(conjugated, hermitian_adjacency(&under, Variant::Gamma));

        // pushing the orientation to the line graph keeps both identities
        let op = edge_orientation_matrix(&x, &om).unwrap();
        let b = incidence_matrix(&x, Variant::Gamma);
        let opm = op.to_matrix(&b.col_labels().to_vec()).unwrap();
        let obop = m.mul(&b).unwrap().mul(&opm.conj_transpose()).unwrap();
        assert_eq!(obop, incidence_matrix(&under, Variant::Gamma));
        let lg = mixed_line_graph(&x, Variant::Gamma);
        if lg.vertex_count() > 0 {
            let hlg = hermitian_adjacency(&lg, Variant::Gamma);
            let oplg = op.to_matrix(&hlg.row_labels().to_vec()).unwrap();
            let conj_lg = oplg.mul(&hlg).unwrap().mul(&oplg.conj_transpose()).unwrap();
            assert_eq!(
                conj_lg,
                hermitian_adjacency(&lg.underlying(), Variant::Gamma)
            );
        }
    }
}

#[test]
fn vertex_switching_round_trips_and_undirects_monographs() {
    for g in sample_graphs(20, 8) {
        let v = g.vertices()[0].clone();
        let once = switch_at_vertex(&g, &v, UnitRoot::OMEGA).unwrap();
        let back = switch_at_vertex(&once, &v, UnitRoot::OMEGA_SQ).unwrap();
        assert_eq!(back, g);
    }
}

#[test]
fn cycle_weights_agree_between_root_and_line_graph() {
    for seed in 0..30u64 {
        let n = 3 + (seed as usize) % 6;
        let c = random_graph(GraphKind::Cycle, n, seed).unwrap();
        let ids: Vec<&str> = c.vertices().iter().map(String::as_str).collect();
        let mut forward: Vec<&str> = ids.clone();
        forward.push(ids[0]);
        let walk = Walk::of(&forward);
        let (a, b) = cycle_weight_pair(&c, &walk).unwrap();
        assert_eq!(a, b, "cycle {c:?}");
        let (ar, br) = cycle_weight_pair(&c, &walk.reversed()).unwrap();
        assert_eq!(ar, br);
        assert_eq!(ar, a.conj());
    }
}

#[test]
fn incidence_verification_accepts_only_the_incidence_matrix() {
    for g in sample_graphs(12, 7) {
        if g.edge_count() == 0 {
            continue;
        }
        let b = incidence_matrix(&g, Variant::Gamma);
        assert!(verify_incidence(&b, &g).unwrap());
        let mut wrong = b.clone();
        let e = &g.edges()[0];
        let bumped = &UnitRoot::OMEGA.to_scalar() * wrong.get(e.u, 0);
        wrong.set(e.u, 0, bumped);
        assert!(!verify_incidence(&wrong, &g).unwrap());
    }
}

#[test]
fn roots_match_the_oracle_on_small_graphs() {
    for seed in 0..12u64 {
        let kinds = [GraphKind::Tree, GraphKind::Connected, GraphKind::Cycle];
        let x = random_graph(kinds[(seed as usize) % 3], 2 + (seed as usize) % 4, seed).unwrap();
        if x.edge_count() > 8 {
            continue;
        }
        let y = mixed_line_graph(&x, Variant::Gamma);
        if y.vertex_count() == 0 {
            continue;
        }
        let outcome = mixed_roots(&y).unwrap();
        let family = outcome
            .families
            .iter()
            .find(|f| matches_up_to_vertex_names(&f.root, &x.underlying()))
            .expect("the true root's family is present");
        let expected = if x.underlying().is_bipartite() { 3 } else { 1 };
        assert_eq!(family.candidates.len(), expected, "x = {x:?}");
        let oracle = oracle_roots(&y, &x.underlying(), 9).unwrap();
        assert_eq!(oracle.len(), expected);
        assert!(oracle.iter().any(|r| labeled_eq(r, &x)));
        for candidate in &family.candidates {
            assert!(
                oracle.iter().any(|r| matches_up_to_vertex_names(&candidate.graph, r)),
                "candidate {:?} not in oracle set",
                candidate.graph
            );
        }
    }
}

#[test]
fn tree_recovery_round_trips_random_trees() {
    for seed in 0..15u64 {
        let x = random_graph(GraphKind::Tree, 2 + (seed as usize) % 8, seed).unwrap();
        let y = mixed_line_graph(&x, Variant::Gamma);
        let t = x.underlying();
        let mut hits = 0;
        for s in UnitRoot::ALL {
            let candidate = tree_root_recovery(&y, &t, s).unwrap();
            assert!(candidate.verified);
            assert_eq!(mixed_line_graph(&candidate.graph, Variant::Gamma), y);
            if candidate.graph == x {
                hits += 1;
            }
        }
        assert_eq!(hits, 1, "exactly one seed reproduces the original");
    }
}

#[test]
fn relating_diagonal_alternates_on_a_path_bipartition() {
    // two of the three roots of a path target differ by a diagonal that
    // alternates between w and w^2 along the path
    let path = MixedGraph::build(
        &["0", "1", "2", "3"],
        vec![
            mixedline::graph::arc("0", "1"),
            mixedline::graph::digon("1", "2"),
            mixedline::graph::arc("3", "2"),
        ],
    )
    .unwrap();
    let y = mixed_line_graph(&path, Variant::Gamma);
    let outcome = mixed_roots(&y).unwrap();
    let family = &outcome.families[0];
    assert_eq!(family.candidates.len(), 3);
    let d = relate_roots(&family.candidates[1], &family.candidates[2]).unwrap();
    let root = &family.candidates[1].graph;
    let coloring = root.bipartition().expect("paths are bipartite");
    for e in root.edges() {
        let du = d.get(root.vertex_id(e.u)).unwrap();
        let dv = d.get(root.vertex_id(e.v)).unwrap();
        assert!(!du.is_one() && !dv.is_one());
        assert_ne!(du, dv);
        assert_ne!(coloring[e.u], coloring[e.v]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip(kind_idx in 0usize..4, n in 1usize..10, seed in 0u64..10_000) {
        let kinds = [GraphKind::Tree, GraphKind::Bipartite, GraphKind::Connected, GraphKind::Cycle];
        let g = random_graph(kinds[kind_idx], n, seed).unwrap();
        let text = to_json(&g);
        let back = from_json(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn degree_diagonal_matches_adjacency_row_sums(n in 2usize..9, seed in 0u64..5_000) {
        let g = random_graph(GraphKind::Connected, n, seed).unwrap();
        let d = degree_diagonal(&g);
        let h = hermitian_adjacency(&g, Variant::Gamma);
        for i in 0..g.vertex_count() {
            let row_nonzero = (0..g.vertex_count()).filter(|&j| !h.get(i, j).is_zero()).count();
            prop_assert_eq!(d.get(i, i), &Eisenstein::new(row_nonzero as i64, 0));
        }
    }
}
