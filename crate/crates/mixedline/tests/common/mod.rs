use std::fs;
use std::path::PathBuf;

use mixedline::graph::MixedGraph;
use mixedline::io::from_json;

pub fn fixture(name: &str) -> MixedGraph {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    let text =
        fs::read_to_string(path).unwrap_or_else(|e| panic!("reading fixture {name}: {e}"));
    from_json(&text).unwrap_or_else(|e| panic!("parsing fixture {name}: {e}"))
}
