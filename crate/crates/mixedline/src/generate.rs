//! Seeded random instance generation.
//!
//! All randomness flows through a ChaCha stream keyed by the caller's seed,
//! so every `(kind, n, seed)` triple names one reproducible graph.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{EdgeInput, EdgeKindInput, MixedGraph};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphKind {
    Tree,
    Bipartite,
    Connected,
    Cycle,
}

impl GraphKind {
    pub fn parse(s: &str) -> Option<GraphKind> {
        match s {
            "tree" => Some(GraphKind::Tree),
            "bipartite" => Some(GraphKind::Bipartite),
            "connected" => Some(GraphKind::Connected),
            "cycle" => Some(GraphKind::Cycle),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            GraphKind::Tree => "tree",
            GraphKind::Bipartite => "bipartite",
            GraphKind::Connected => "connected",
            GraphKind::Cycle => "cycle",
        }
    }
}

/// A pseudo-random mixed graph with `n` vertices named `0..n-1`. Edge kinds
/// are drawn uniformly from digon and the two arc directions.
pub fn random_graph(kind: GraphKind, n: usize, seed: u64) -> Result<MixedGraph> {
    assert!(n >= 1, "need at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    match kind {
        GraphKind::Tree => {
            for i in 1..n {
                pairs.push((rng.gen_range(0..i), i));
            }
        }
        GraphKind::Cycle => {
            if n == 2 {
                pairs.push((0, 1));
            } else if n >= 3 {
                for i in 0..n {
                    pairs.push((i.min((i + 1) % n), i.max((i + 1) % n)));
                }
            }
        }
        GraphKind::Connected | GraphKind::Bipartite => {
            let mut side = vec![false; n];
            for i in 1..n {
                let p = rng.gen_range(0..i);
                pairs.push((p, i));
                side[i] = !side[p];
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    if pairs.contains(&(i, j)) {
                        continue;
                    }
                    if kind == GraphKind::Bipartite && side[i] == side[j] {
                        continue;
                    }
                    if rng.gen_bool(0.25) {
                        pairs.push((i, j));
                    }
                }
            }
        }
    }
    let edges = pairs
        .into_iter()
        .map(|(i, j)| {
            let (u, v) = (vertices[i].clone(), vertices[j].clone());
            let kind = match rng.gen_range(0..3u8) {
                0 => EdgeKindInput::Digon,
                1 => EdgeKindInput::Arc { tail: u.clone(), head: v.clone() },
                _ => EdgeKindInput::Arc { tail: v.clone(), head: u.clone() },
            };
            EdgeInput { id: None, ends: (u, v), kind }
        })
        .collect();
    MixedGraph::new(vertices, edges)
}
