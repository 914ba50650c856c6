//! Brute-force references for the constructive procedures.
//!
//! `oracle_roots` enumerates every mixed orientation of an undirected graph
//! and keeps those whose mixed line graph equals the target; it is the
//! ground truth for the root-recovery suites. `char_poly_by_determinant`
//! expands `det(tI - H)` literally and backs the characteristic-polynomial
//! checks.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{EdgeInput, EdgeKindInput, EndKind, MixedGraph};
use crate::linegraph::{pair_rule, PairRule};
use crate::matrix::{CharPoly, ExactMatrix};
use crate::roots::check_line_labeling;
use crate::scalar::Eisenstein;

/// Default cap on `3^m` enumeration.
pub const DEFAULT_MAX_ORACLE_EDGES: usize = 12;

/// All mixed orientations `X` of the all-digon graph `g` with
/// `LG(X) = y`, by exhaustive enumeration of the `3^m` orientations.
///
/// Equality is labeled: the vertices of the line graph are the edge ids of
/// `g`, and every induced line-graph edge must carry the same kind and
/// direction as in `y`.
pub fn oracle_roots(y: &MixedGraph, g: &MixedGraph, max_edges: usize) -> Result<Vec<MixedGraph>> {
    if let Some(e) = g.first_arc() {
        return Err(Error::NotAllDigon(e.id.clone()));
    }
    let m = g.edge_count();
    if m > max_edges {
        return Err(Error::SizeBound { what: "edges", actual: m, bound: max_edges });
    }
    // if the ids or the adjacency pattern disagree no orientation can match
    let Ok(to_y) = check_line_labeling(g, y) else {
        return Ok(Vec::new());
    };

    // adjacent edge pairs with their shared vertex and the target's rule
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let (ei, ej) = (&g.edges()[i], &g.edges()[j]);
            let Some(s) = [ei.u, ei.v].into_iter().find(|&w| w == ej.u || w == ej.v) else {
                continue;
            };
            let ye = y
                .edge_between(to_y[i], to_y[j])
                .expect("labeling guarantees adjacency");
            let expected = match y.edges()[ye].arc_ends() {
                None => PairRule::Digon,
                Some((tail, _)) if tail == to_y[i] => PairRule::FirstToSecond,
                Some(_) => PairRule::SecondToFirst,
            };
            pairs.push((i, j, s, expected));
        }
    }

    let end_kind = |edge: usize, s: usize, trit: u8| -> EndKind {
        let e = &g.edges()[edge];
        match trit {
            0 => EndKind::Digon,
            1 => {
                if s == e.u {
                    EndKind::Tail
                } else {
                    EndKind::Head
                }
            }
            _ => {
                if s == e.u {
                    EndKind::Head
                } else {
                    EndKind::Tail
                }
            }
        }
    };

    let mut trits = vec![0u8; m];
    let mut found = Vec::new();
    loop {
        let ok = pairs
            .iter()
            .all(|&(i, j, s, expected)| {
                pair_rule(end_kind(i, s, trits[i]), end_kind(j, s, trits[j])) == expected
            });
        if ok {
            found.push(orient(g, &trits));
        }
        // next vector in base three
        let mut pos = 0;
        loop {
            if pos == m {
                return Ok(found);
            }
            trits[pos] += 1;
            if trits[pos] < 3 {
                break;
            }
            trits[pos] = 0;
            pos += 1;
        }
    }
}

fn orient(g: &MixedGraph, trits: &[u8]) -> MixedGraph {
    let edges = g
        .edges()
        .iter()
        .zip(trits)
        .map(|(e, &t)| {
            let (u, v) = (g.vertex_id(e.u).to_owned(), g.vertex_id(e.v).to_owned());
            let kind = match t {
                0 => EdgeKindInput::Digon,
                1 => EdgeKindInput::Arc { tail: u.clone(), head: v.clone() },
                _ => EdgeKindInput::Arc { tail: v.clone(), head: u.clone() },
            };
            EdgeInput { id: Some(e.id.clone()), ends: (u, v), kind }
        })
        .collect();
    MixedGraph::new(g.vertices().to_vec(), edges).expect("reorientation stays valid")
}

type Poly = Vec<Eisenstein>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Eisenstein::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

fn poly_add_scaled(acc: &mut Poly, p: &Poly, negate: bool) {
    if acc.len() < p.len() {
        acc.resize(p.len(), Eisenstein::zero());
    }
    for (i, x) in p.iter().enumerate() {
        acc[i] = if negate { &acc[i] - x } else { &acc[i] + x };
    }
}

fn determinant(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: Poly = vec![Eisenstein::zero()];
    for (col, cell) in m[0].iter().enumerate() {
        if cell.iter().all(Eisenstein::is_zero) {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = poly_mul(cell, &determinant(&minor));
        poly_add_scaled(&mut acc, &term, col % 2 == 1);
    }
    acc
}

/// Characteristic polynomial by literal cofactor expansion of `det(tI - H)`.
/// Exponential; intended for cross-checks on small matrices.
pub fn char_poly_by_determinant(h: &ExactMatrix) -> Result<CharPoly> {
    if !h.is_square() {
        return Err(Error::NotSquare);
    }
    if !h.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let n = h.rows();
    if n == 0 {
        return Ok(CharPoly { coeffs: vec![BigInt::one()] });
    }
    let entries: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        vec![-h.get(i, j), Eisenstein::one()]
                    } else {
                        vec![-h.get(i, j)]
                    }
                })
                .collect()
        })
        .collect();
    let mut det = determinant(&entries);
    det.resize(n + 1, Eisenstein::zero());
    let coeffs: Vec<BigInt> = det
        .into_iter()
        .rev()
        .map(|c| {
            assert!(c.is_rational_integer(), "char poly coefficients must be real integers");
            c.a
        })
        .collect();
    assert!(coeffs[0].is_one(), "det(tI - H) is monic");
    Ok(CharPoly { coeffs })
}
