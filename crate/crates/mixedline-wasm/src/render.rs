//! Minimal SVG rendering with a deterministic circular layout.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::fmt::Write as _;

use mixedline::graph::MixedGraph;

const VERTEX_RADIUS: f64 = 14.0;

/// Lay the vertices on a circle in storage order and draw digons as plain
/// segments, arcs as arrows. Edges whose endpoints appear consecutively in
/// `highlight` are stroked in accent color.
pub fn render_svg(g: &MixedGraph, width: u32, height: u32, highlight: &[String]) -> String {
    let n = g.vertex_count();
    let (w, h) = (width as f64, height as f64);
    let cx = w / 2.0;
    let cy = h / 2.0;
    let r = (w.min(h) / 2.0 - 2.5 * VERTEX_RADIUS).max(10.0);
    let pos: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let angle = TAU * (i as f64) / (n.max(1) as f64) - TAU / 4.0;
            (cx + r * angle.cos(), cy + r * angle.sin())
        })
        .collect();

    let mut hot: HashMap<(usize, usize), bool> = HashMap::new();
    for pair in highlight.windows(2) {
        if let (Ok(a), Ok(b)) = (g.vertex_index(&pair[0]), g.vertex_index(&pair[1])) {
            hot.insert((a.min(b), a.max(b)), true);
        }
    }

    let mut svg = String::new();
    let _ = write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    svg.push_str(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" \
         markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\
         <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#355\"/></marker>\
         <marker id=\"arrowhot\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" \
         markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\
         <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#c0392b\"/></marker></defs>",
    );

    for e in g.edges() {
        let (a, b) = match e.arc_ends() {
            Some((tail, head)) => (tail, head),
            None => (e.u, e.v),
        };
        let (x1, y1) = pos[a];
        let (x2, y2) = pos[b];
        // trim the segment so arrowheads sit on the vertex boundary
        let len = ((x2 - x1).powi(2) + (y2 - y1).powi(2)).sqrt().max(1.0);
        let (ux, uy) = ((x2 - x1) / len, (y2 - y1) / len);
        let (sx, sy) = (x1 + ux * VERTEX_RADIUS, y1 + uy * VERTEX_RADIUS);
        let (tx, ty) = (x2 - ux * VERTEX_RADIUS, y2 - uy * VERTEX_RADIUS);
        let is_hot = *hot.get(&(a.min(b), a.max(b))).unwrap_or(&false);
        let stroke = if is_hot { "#c0392b" } else { "#355" };
        let marker = if e.is_digon() {
            String::new()
        } else if is_hot {
            " marker-end=\"url(#arrowhot)\"".to_owned()
        } else {
            " marker-end=\"url(#arrow)\"".to_owned()
        };
        let _ = write!(
            svg,
            "<line x1=\"{sx:.1}\" y1=\"{sy:.1}\" x2=\"{tx:.1}\" y2=\"{ty:.1}\" \
             stroke=\"{stroke}\" stroke-width=\"{}\"{marker}/>",
            if is_hot { 3.2 } else { 1.8 },
        );
    }

    for (i, id) in g.vertices().iter().enumerate() {
        let (x, y) = pos[i];
        let _ = write!(
            svg,
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{VERTEX_RADIUS}\" \
             fill=\"#f7f9fa\" stroke=\"#355\" stroke-width=\"1.5\"/>\
             <text x=\"{x:.1}\" y=\"{y:.1}\" font-size=\"10\" font-family=\"monospace\" \
             text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#123\">{}</text>",
            xml_escape(id),
        );
    }
    svg.push_str("</svg>");
    svg
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
