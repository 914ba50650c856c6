//! Browser bindings: a thin JSON-in/JSON-out layer over the core crate plus
//! an SVG renderer, kept free of DOM dependencies so the same code compiles
//! and tests on native targets.

mod render;

use wasm_bindgen::prelude::*;

use mixedline::generate::{random_graph, GraphKind};
use mixedline::graph::MixedGraph;
use mixedline::io::{from_json, to_json, GraphDoc};
use mixedline::linegraph::mixed_line_graph;
use mixedline::monograph::{compute_store, switch_at_vertex, walk_value};
use mixedline::roots::mixed_roots;
use mixedline::scalar::{UnitRoot, Variant};

fn err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

fn parse(graph_json: &str) -> Result<MixedGraph, JsValue> {
    from_json(graph_json).map_err(err)
}

/// Seeded random mixed graph as canonical JSON.
#[wasm_bindgen]
pub fn wasm_random_graph(kind: &str, n: usize, seed: u64) -> Result<String, JsValue> {
    let kind = GraphKind::parse(kind).ok_or_else(|| err(format!("unknown kind {kind:?}")))?;
    if n == 0 || n > 16 {
        return Err(err("n must be between 1 and 16"));
    }
    let g = random_graph(kind, n, seed).map_err(err)?;
    Ok(to_json(&g))
}

/// Mixed line graph of the given graph JSON.
#[wasm_bindgen]
pub fn wasm_line_graph(graph_json: &str, variant: &str) -> Result<String, JsValue> {
    let g = parse(graph_json)?;
    let variant = Variant::parse(variant).ok_or_else(|| err("variant must be gamma or gamma2"))?;
    Ok(to_json(&mixed_line_graph(&g, variant)))
}

/// Monograph report: store, witness cycle and per-vertex potentials.
#[wasm_bindgen]
pub fn wasm_monograph_report(graph_json: &str) -> Result<String, JsValue> {
    let g = parse(graph_json)?;
    if g.vertex_count() == 0 {
        return Err(err("empty graph"));
    }
    let sr = compute_store(&g, &g.vertices()[0], UnitRoot::ONE, Variant::Gamma).map_err(err)?;
    let witness = match &sr.witness_cycle {
        None => serde_json::Value::Null,
        Some(w) => {
            let weight = walk_value(&g, w, Variant::Gamma).map_err(err)?;
            serde_json::json!({"vertices": w.vertices, "weight": weight.as_str()})
        }
    };
    let out = serde_json::json!({
        "monograph": sr.store.is_trivial(),
        "store": sr.store.elements().iter().map(|u| u.as_str()).collect::<Vec<_>>(),
        "witness": witness,
        "potentials": sr.potentials,
    });
    Ok(out.to_string())
}

/// Switch the graph at one vertex by `w` or `w^2`.
#[wasm_bindgen]
pub fn wasm_switch_vertex(graph_json: &str, vertex: &str, factor: &str) -> Result<String, JsValue> {
    let g = parse(graph_json)?;
    let factor = UnitRoot::parse(factor).ok_or_else(|| err("factor must be 1, gamma or gamma2"))?;
    Ok(to_json(&switch_at_vertex(&g, vertex, factor).map_err(err)?))
}

/// Verified mixed roots of the given graph.
#[wasm_bindgen]
pub fn wasm_mixed_roots(graph_json: &str) -> Result<String, JsValue> {
    let y = parse(graph_json)?;
    let outcome = mixed_roots(&y).map_err(err)?;
    let out = serde_json::json!({
        "count": outcome.count(),
        "reason": outcome.reason,
        "families": outcome.families.iter().map(|f| serde_json::json!({
            "bipartite": f.bipartite,
            "roots": f.candidates.iter().map(|c| GraphDoc::from_graph(&c.graph)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Ok(out.to_string())
}

/// Render a graph as a standalone SVG element. `highlight_json` is an
/// optional JSON array of vertex ids; edges along that closed walk are
/// emphasized.
#[wasm_bindgen]
pub fn wasm_render_svg(graph_json: &str, width: u32, height: u32, highlight_json: &str) -> Result<String, JsValue> {
    let g = parse(graph_json)?;
    let highlight: Vec<String> = if highlight_json.trim().is_empty() {
        Vec::new()
    } else {
        serde_json::from_str(highlight_json).map_err(err)?
    };
    Ok(render::render_svg(&g, width, height, &highlight))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_then_line_graph_round_trip() {
        let g = wasm_random_graph("connected", 6, 42).unwrap();
        let lg = wasm_line_graph(&g, "gamma").unwrap();
        assert!(from_json(&lg).is_ok());
    }

    #[test]
    fn monograph_report_has_expected_fields() {
        let g = wasm_random_graph("tree", 5, 1).unwrap();
        let report: serde_json::Value =
            serde_json::from_str(&wasm_monograph_report(&g).unwrap()).unwrap();
        assert_eq!(report["monograph"], serde_json::json!(true));
        assert!(report["witness"].is_null());
    }

    #[test]
    fn switching_is_invertible_through_the_api() {
        let g = wasm_random_graph("cycle", 5, 3).unwrap();
        let once = wasm_switch_vertex(&g, "2", "gamma").unwrap();
        let back = wasm_switch_vertex(&once, "2", "gamma2").unwrap();
        assert_eq!(from_json(&back).unwrap(), from_json(&g).unwrap());
    }

    #[test]
    fn roots_of_a_line_graph_are_found() {
        let x = wasm_random_graph("tree", 5, 9).unwrap();
        let y = wasm_line_graph(&x, "gamma").unwrap();
        let out: serde_json::Value = serde_json::from_str(&wasm_mixed_roots(&y).unwrap()).unwrap();
        assert_eq!(out["count"], serde_json::json!(3));
    }

    #[test]
    fn svg_contains_vertices_and_edges() {
        let g = wasm_random_graph("cycle", 4, 0).unwrap();
        let svg = wasm_render_svg(&g, 400, 300, "").unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains("circle"));
        assert!(svg.contains("line") || svg.contains("path"));
    }
}
