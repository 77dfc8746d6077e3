//! Plumbing graphs and the lattice side of the computation.
//!
//! Everything here is an independent route to the numbers produced by
//! [`crate::hfcore`]: the plumbing graph of `M` is built by blowing up the
//! plane curve, its intersection lattice is solved exactly, and the graded
//! root is recovered from generalized Laufer sequences or, for tiny graphs,
//! by enumerating sublevel sets directly.

pub mod lattice;
pub mod laufer;
pub mod lens;
pub mod resolution;
pub mod spinc;
pub mod sublevel;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::numtheory::Rational;
use crate::{Error, Result};

pub use lattice::TreeSolver;
pub use laufer::{laufer_tau, reduce_tau, y_cycles, z_cycle_coeffs, LauferSequence, LauferWalk};
pub use lens::{lens_d_invariants, lens_d_recursive};
pub use resolution::{divisorial_cycle, embedded_resolution, surgery_graph};
pub use spinc::{
    a_coefficients, canonical_class, krsq_formula, CharacteristicVector, SpincClass, SurgeryLattice,
};
pub use sublevel::{sublevel_root, SublevelBox, SublevelRoot};

/// Integral cycle `sum n_j b_j`, indexed like the graph's vertices.
pub type Cycle = Vec<i64>;

/// Element of `L (x) Q`, e.g. a member of the dual lattice `L'`.
pub type RationalCycle = Vec<Rational>;

/// A plumbing tree: vertices with Euler numbers and edges, optionally a
/// distinguished vertex and a vertex carrying an arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    euler: Vec<i64>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    distinguished: Option<usize>,
    arrow: Option<usize>,
}

impl PlumbingGraph {
    pub fn new(
        euler: Vec<i64>,
        edges: Vec<(usize, usize)>,
        distinguished: Option<usize>,
        arrow: Option<usize>,
    ) -> Result<Self> {
        let n = euler.len();
        if n == 0 {
            return Err(Error::Graph("no vertices".into()));
        }
        if edges.len() + 1 != n {
            return Err(Error::Graph(format!(
                "{} edges on {n} vertices is not a tree",
                edges.len()
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::Graph(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::Graph(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Graph(format!("repeated edge ({u}, {v})")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for a in &mut adjacency {
            a.sort_unstable();
        }
        let mut reached = vec![false; n];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adjacency[v] {
                if !reached[w] {
                    reached[w] = true;
                    stack.push(w);
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Err(Error::Graph("graph is not connected".into()));
        }
        for (what, v) in [("distinguished", distinguished), ("arrow", arrow)] {
            if let Some(v) = v {
                if v >= n {
                    return Err(Error::Graph(format!("{what} vertex {v} out of range")));
                }
            }
        }
        Ok(PlumbingGraph {
            euler,
            edges,
            adjacency,
            distinguished,
            arrow,
        })
    }

    pub fn len(&self) -> usize {
        self.euler.len()
    }

    pub fn is_empty(&self) -> bool {
        self.euler.is_empty()
    }

    pub fn euler(&self, j: usize) -> i64 {
        self.euler[j]
    }

    pub fn eulers(&self) -> &[i64] {
        &self.euler
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, j: usize) -> &[usize] {
        &self.adjacency[j]
    }

    /// Number of adjacent vertices, not counting an arrow.
    pub fn degree(&self, j: usize) -> usize {
        self.adjacency[j].len()
    }

    pub fn distinguished(&self) -> Option<usize> {
        self.distinguished
    }

    pub fn arrow(&self) -> Option<usize> {
        self.arrow
    }

    /// `(b_i, b_j)`.
    pub fn form_entry(&self, i: usize, j: usize) -> i64 {
        if i == j {
            self.euler[i]
        } else if self.adjacency[i].binary_search(&j).is_ok() {
            1
        } else {
            0
        }
    }

    pub fn form_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.len())
            .map(|i| (0..self.len()).map(|j| self.form_entry(i, j)).collect())
            .collect()
    }

    /// `((x, b_j))_j` for an integral cycle.
    pub fn intersections(&self, x: &[i64]) -> Vec<i64> {
        (0..self.len())
            .map(|j| self.euler[j] * x[j] + self.adjacency[j].iter().map(|&k| x[k]).sum::<i64>())
            .collect()
    }

    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        self.intersections(x)
            .iter()
            .zip(y)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `((x, b_j))_j` for a rational cycle.
    pub fn intersections_q(&self, x: &[Rational]) -> RationalCycle {
        (0..self.len())
            .map(|j| {
                let mut s = &x[j] * Rational::from_integer(self.euler[j].into());
                for &k in &self.adjacency[j] {
                    s += &x[k];
                }
                s
            })
            .collect()
    }

    pub fn pair_q(&self, x: &[Rational], y: &[Rational]) -> Rational {
        self.intersections_q(x)
            .iter()
            .zip(y)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn is_negative_definite(&self) -> bool {
        lattice::leading_minors(&self.form_matrix())
            .iter()
            .enumerate()
            .all(|(k, m)| {
                if k % 2 == 0 {
                    m.sign() == num_bigint::Sign::Minus
                } else {
                    m.sign() == num_bigint::Sign::Plus
                }
            })
    }

    /// The subgraph on `keep` (which must induce a tree), renumbered in the
    /// given order.
    pub fn induced(&self, keep: &[usize]) -> Result<PlumbingGraph> {
        let mut index = vec![usize::MAX; self.len()];
        for (new, &old) in keep.iter().enumerate() {
            index[old] = new;
        }
        let euler = keep.iter().map(|&v| self.euler[v]).collect();
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        let remap = |v: Option<usize>| v.and_then(|v| (index[v] != usize::MAX).then(|| index[v]));
        PlumbingGraph::new(euler, edges, remap(self.distinguished), remap(self.arrow))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(PlumbingGraph::new(vec![-2, -2], vec![(0, 1)], None, None).is_ok());
        for (e, edges) in [
            (vec![], vec![]),
            (vec![-2, -2], vec![]),
            (vec![-2, -2], vec![(0, 2)]),
            (vec![-2, -2, -2], vec![(0, 1), (1, 0)]),
            (vec![-2], vec![(0, 0)]),
        ] {
            let err = PlumbingGraph::new(e, edges, None, None).unwrap_err();
            assert!(err.is_input_error());
        }
        assert!(PlumbingGraph::new(vec![-2], vec![], Some(1), None).is_err());
    }

    #[test]
    fn definiteness() {
        let e8 = PlumbingGraph::new(
            vec![-2; 8],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)],
            None,
            None,
        )
        .unwrap();
        assert!(e8.is_negative_definite());
        let indefinite = PlumbingGraph::new(vec![-1, -1], vec![(0, 1)], None, None).unwrap();
        assert!(!indefinite.is_negative_definite());
        let induced = e8.induced(&[2, 3, 7]).unwrap();
        assert_eq!(induced.edges(), &[(0, 1), (0, 2)]);
    }
}
