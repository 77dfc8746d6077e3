#![allow(dead_code)]

use hfroots_core::AlgebraicKnot;
use num_integer::gcd;

/// Newton pairs of every knot with at most two pairs and all entries <= 7.
pub fn corpus_knots() -> Vec<Vec<(i64, i64)>> {
    let mut out = Vec::new();
    for p1 in 2..=7 {
        for q1 in p1 + 1..=7 {
            if gcd(p1, q1) != 1 {
                continue;
            }
            out.push(vec![(p1, q1)]);
            for p2 in 2..=7 {
                for q2 in 1..=7 {
                    if gcd(p2, q2) == 1 {
                        out.push(vec![(p1, q1), (p2, q2)]);
                    }
                }
            }
        }
    }
    out
}

/// Coprime `(p, q)` with `1 <= p, q <= max`.
pub fn surgeries(max: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in 1..=max {
        for q in 1..=max {
            if gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

pub fn knot(pairs: &[(i64, i64)]) -> AlgebraicKnot {
    AlgebraicKnot::from_newton_pairs(pairs).unwrap()
}
