//! Regenerate the bundled example graphs under `fixtures/`.
//!
//! Usage: `cargo run -p mixedline --example make_fixtures [dir]`

use std::env;
use std::fs;
use std::path::PathBuf;

use mixedline::graph::{arc, digon, MixedGraph};
use mixedline::io::to_json;
use mixedline::linegraph::mixed_line_graph;
use mixedline::scalar::Variant;

/// Seven vertices, three digons, six arcs; its mixed line graph is the
/// nine-vertex example used throughout the test suite.
pub fn fig2_root() -> MixedGraph {
    MixedGraph::build(
        &["0", "1", "2", "3", "4", "5", "6"],
        vec![
            arc("0", "1"),
            arc("2", "0"),
            arc("0", "4"),
            digon("1", "2"),
            arc("3", "2"),
            arc("4", "2"),
            arc("5", "2"),
            digon("3", "5"),
            digon("5", "6"),
        ],
    )
    .expect("fixture is well formed")
}

/// The underlying undirected root of `fig2_root`.
pub fn fig3a() -> MixedGraph {
    MixedGraph::build(
        &["0", "1", "2", "3", "4", "5", "6"],
        vec![
            digon("0", "1"),
            digon("0", "2"),
            digon("0", "4"),
            digon("1", "2"),
            digon("2", "3"),
            digon("2", "4"),
            digon("2", "5"),
            digon("3", "5"),
            digon("5", "6"),
        ],
    )
    .expect("fixture is well formed")
}

/// A mixed orientation of the line graph of `fig3a` that is not a mixed
/// line graph: the triangle 0-1, 0-4, 0-2 has cycle value w^2.
pub fn fig3b() -> MixedGraph {
    MixedGraph::build(
        &["0-1", "0-4", "1-2", "0-2", "2-3", "3-5", "2-4", "2-5", "5-6"],
        vec![
            arc("0-1", "0-4"),
            arc("1-2", "0-1"),
            arc("0-2", "0-1"),
            digon("0-4", "0-2"),
            arc("0-4", "2-4"),
            digon("1-2", "0-2"),
            arc("1-2", "2-3"),
            arc("2-4", "1-2"),
            arc("1-2", "2-5"),
            arc("0-2", "2-3"),
            arc("2-4", "0-2"),
            arc("0-2", "2-5"),
            arc("3-5", "2-3"),
            arc("2-4", "2-3"),
            digon("2-3", "2-5"),
            arc("2-5", "3-5"),
            digon("3-5", "5-6"),
            arc("2-5", "2-4"),
            arc("2-5", "5-6"),
        ],
    )
    .expect("fixture is well formed")
}

pub fn c3_digons() -> MixedGraph {
    MixedGraph::build(
        &["0", "1", "2"],
        vec![digon("0", "1"), digon("1", "2"), digon("0", "2")],
    )
    .expect("fixture is well formed")
}

fn main() {
    let dir: PathBuf = env::args().nth(1).unwrap_or_else(|| "fixtures".to_owned()).into();
    fs::create_dir_all(&dir).expect("create fixture dir");
    let write = |name: &str, g: &MixedGraph| {
        let path = dir.join(name);
        fs::write(&path, to_json(g)).expect("write fixture");
        println!("wrote {}", path.display());
    };
    write("fig2_root.json", &fig2_root());
    write("fig2_lg.json", &mixed_line_graph(&fig2_root(), Variant::Gamma));
    write("fig3a.json", &fig3a());
    write("fig3b.json", &fig3b());
    write("c3_digons.json", &c3_digons());
}
