//! Exact linear algebra for intersection forms.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{PlumbingGraph, RationalCycle};
use crate::numtheory::{int, Rational};
use crate::{Error, Result};

/// Leading principal minors of an integer matrix by Bareiss fraction-free
/// elimination. A zero pivot ends the computation early; the returned list
/// is then shorter than the matrix.
pub fn leading_minors(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    let n = matrix.len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = m[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&pivot * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = pivot;
    }
    minors
}

pub fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    let minors = leading_minors(matrix);
    if minors.len() < matrix.len() {
        BigInt::zero()
    } else {
        minors.last().cloned().unwrap_or_else(BigInt::one)
    }
}

/// Gaussian elimination along a tree: leaves are eliminated first, so no
/// fill-in occurs and a solve costs `O(n)` rational operations. Construction
/// fails unless every pivot is negative, i.e. unless the form is negative
/// definite.
#[derive(Debug, Clone)]
pub struct TreeSolver {
    euler: Vec<i64>,
    // elimination order; the last entry is the root
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    pivots: Vec<Rational>,
}

impl TreeSolver {
    pub fn new(graph: &PlumbingGraph) -> Result<Self> {
        let n = graph.len();
        let mut parent = vec![None; n];
        let mut order = Vec::with_capacity(n);
        let mut visited = vec![false; n];
        let mut stack = vec![0usize];
        visited[0] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in graph.neighbours(v) {
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some(v);
                    stack.push(w);
                }
            }
        }
        order.reverse();

        let mut pivots: Vec<Rational> = graph.eulers().iter().map(|&e| int(e)).collect();
        for &v in &order {
            if !pivots[v].is_negative() {
                return Err(Error::NotNegativeDefinite);
            }
            if let Some(p) = parent[v] {
                let correction = pivots[v].recip();
                pivots[p] -= correction;
            }
        }
        Ok(TreeSolver {
            euler: graph.eulers().to_vec(),
            order,
            parent,
            pivots,
        })
    }

    pub fn len(&self) -> usize {
        self.euler.len()
    }

    pub fn is_empty(&self) -> bool {
        self.euler.is_empty()
    }

    pub fn pivots(&self) -> &[Rational] {
        &self.pivots
    }

    /// `det B`.
    pub fn determinant(&self) -> Rational {
        self.pivots.iter().fold(int(1), |acc, p| acc * p)
    }

    /// Solves `B x = rhs`.
    pub fn solve(&self, rhs: &[Rational]) -> RationalCycle {
        let mut r: Vec<Rational> = rhs.to_vec();
        for &v in &self.order {
            if let Some(p) = self.parent[v] {
                let moved = &r[v] / &self.pivots[v];
                r[p] -= moved;
            }
        }
        let mut x = vec![Rational::zero(); self.len()];
        for &v in self.order.iter().rev() {
            let mut value = r[v].clone();
            if let Some(p) = self.parent[v] {
                value -= &x[p];
            }
            x[v] = value / &self.pivots[v];
        }
        x
    }

    /// Solves `B x = rhs` for integral right-hand sides.
    pub fn solve_int(&self, rhs: &[i64]) -> RationalCycle {
        self.solve(&rhs.iter().map(|&v| int(v)).collect::<Vec<_>>())
    }

    /// The dual basis vector `g_j = B^{-1} e_j`, so `(g_j, b_i) = delta_ij`.
    pub fn dual(&self, j: usize) -> RationalCycle {
        let mut e = vec![0i64; self.len()];
        e[j] = 1;
        self.solve_int(&e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn gauss_solve(matrix: &[Vec<i64>], rhs: &[Rational]) -> Vec<Rational> {
        let n = matrix.len();
        let mut a: Vec<Vec<Rational>> = matrix
            .iter()
            .zip(rhs)
            .map(|(row, b)| {
                let mut r: Vec<Rational> = row.iter().map(|&x| int(x)).collect();
                r.push(b.clone());
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).unwrap();
            a.swap(c, p);
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = &a[r][c] / &a[c][c];
                    let pivot_row = a[c].clone();
                    for (x, y) in a[r][c..].iter_mut().zip(&pivot_row[c..]) {
                        *x -= &f * y;
                    }
                }
            }
        }
        (0..n).map(|r| &a[r][n] / &a[r][r]).collect()
    }

    fn random_tree() -> impl Strategy<Value = PlumbingGraph> {
        (1usize..9)
            .prop_flat_map(|n| {
                (
                    prop::collection::vec(-6i64..=-2, n),
                    prop::collection::vec(any::<prop::sample::Index>(), n - 1),
                )
            })
            .prop_map(|(euler, attach)| {
                let edges = attach
                    .iter()
                    .enumerate()
                    .map(|(k, ix)| (ix.index(k + 1), k + 1))
                    .collect();
                PlumbingGraph::new(euler, edges, None, None).unwrap()
            })
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(determinant(&[vec![2, 1], vec![1, 2]]), BigInt::from(3));
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
        let m = leading_minors(&[vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -2]]);
        assert_eq!(m, vec![BigInt::from(-2), BigInt::from(3), BigInt::from(-4)]);
    }

    #[test]
    fn rejects_indefinite() {
        let g = PlumbingGraph::new(vec![-1, -1], vec![(0, 1)], None, None).unwrap();
        assert!(matches!(
            TreeSolver::new(&g),
            Err(Error::NotNegativeDefinite)
        ));
    }

    proptest! {
        // e_j <= -2 keeps every such tree negative definite
        #[test]
        fn tree_solver_matches_dense(g in random_tree(), rhs in prop::collection::vec(-5i64..5, 9)) {
            let solver = TreeSolver::new(&g).unwrap();
            let rhs: Vec<Rational> = rhs[..g.len()].iter().map(|&v| int(v)).collect();
            prop_assert_eq!(solver.solve(&rhs), gauss_solve(&g.form_matrix(), &rhs));
            let det = determinant(&g.form_matrix());
            prop_assert_eq!(solver.determinant(), Rational::from_integer(det));
            prop_assert!(g.is_negative_definite());
        }
    }
}
