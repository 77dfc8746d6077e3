//! The graded root of a lattice read directly off its sublevel sets
//! `{x : chi_k(x) <= n}`. Only feasible for very small graphs.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive};

use super::lattice::TreeSolver;
use super::spinc::CharacteristicVector;
use super::{Cycle, PlumbingGraph};
use crate::error::invariant;
use crate::numtheory::{as_integer, int, Rational};
use crate::root::{GradedRoot, RootNode};
use crate::{Error, Result};

/// Largest number of lattice points [`sublevel_root`] will enumerate.
pub const VOLUME_LIMIT: u128 = 10_000_000;

/// An axis-parallel box `lo[j] <= x_j <= hi[j]` in the lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SublevelBox {
    pub lo: Cycle,
    pub hi: Cycle,
}

impl SublevelBox {
    /// A box containing the whole sublevel set `chi_k <= n` strictly inside.
    ///
    /// With `y = x + k/2` and `Q = -B`, `chi_k(x) <= n` reads
    /// `Q(y) <= 2n - k^2/4 =: R`, and on that ellipsoid
    /// `|y_j| <= sqrt(R (Q^{-1})_{jj})`.
    pub fn certified(graph: &PlumbingGraph, k: &CharacteristicVector, n: i64) -> Result<Self> {
        let solver = TreeSolver::new(graph)?;
        let radius = int(2 * n) - k.square(graph) / int(4);
        let mut lo = Vec::with_capacity(graph.len());
        let mut hi = Vec::with_capacity(graph.len());
        for j in 0..graph.len() {
            let qinv = -solver.dual(j)[j].clone();
            let r2 = (&radius * qinv).max(int(0));
            let s = r2.ceil().to_integer().sqrt() + 1u32;
            let s = Rational::from_integer(s);
            let centre = -&k.coeffs()[j] / int(2);
            lo.push(to_i64(&(&centre - &s).floor())? - 1);
            hi.push(to_i64(&(&centre + &s).ceil())? + 1);
        }
        Ok(SublevelBox { lo, hi })
    }

    /// The bounding box of `points`, widened by `margin` on every side.
    pub fn around(lo: &[i64], hi: &[i64], margin: i64) -> Self {
        SublevelBox {
            lo: lo.iter().map(|v| v - margin).collect(),
            hi: hi.iter().map(|v| v + margin).collect(),
        }
    }

    pub fn volume(&self) -> u128 {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| (h - l + 1).max(0) as u128)
            .fold(1u128, |acc, w| acc.saturating_mul(w))
    }
}

fn to_i64(x: &Rational) -> Result<i64> {
    x.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Invariant("box coordinate overflows i64".into()))
}

/// Outcome of a sublevel enumeration.
#[derive(Debug, Clone)]
pub struct SublevelRoot {
    /// `None` when the sublevel set at `n_max` is empty.
    pub root: Option<GradedRoot>,
    /// Lattice points with `chi_k <= n_max`.
    pub points: usize,
    pub volume: u128,
}

/// Enumerates `{x in box : chi_k(x) <= n_max}` and builds the graded root of
/// its sublevel sets, where `x` and `x + b_j` are joined whenever both are
/// present. Fails with [`Error::BoxBoundaryContact`] if a point of the set
/// lies on the boundary of the box, since the set may then continue outside.
/// The set must be connected at `n_max`.
pub fn sublevel_root(
    graph: &PlumbingGraph,
    k: &CharacteristicVector,
    n_max: i64,
    bx: &SublevelBox,
) -> Result<SublevelRoot> {
    let n = graph.len();
    let volume = bx.volume();
    if volume > VOLUME_LIMIT {
        return Err(Error::BoxTooLarge {
            volume,
            limit: VOLUME_LIMIT,
        });
    }
    let kb: Vec<i64> = graph
        .intersections_q(k.coeffs())
        .iter()
        .map(as_integer)
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Invariant("(k, b_j) is not integral".into()))?;
    let width: Vec<usize> = (0..n).map(|j| (bx.hi[j] - bx.lo[j] + 1) as usize).collect();
    let mut stride = vec![1usize; n];
    for j in 1..n {
        stride[j] = stride[j - 1] * width[j - 1];
    }
    let volume = volume as usize;

    // 2 chi(x) = -((k, x) + (x, x))
    let chi_of = |x: &[i64]| -> Result<i64> {
        let mut s: i64 = 0;
        for j in 0..n {
            s += kb[j] * x[j] + graph.euler(j) * x[j] * x[j];
        }
        for &(u, v) in graph.edges() {
            s += 2 * x[u] * x[v];
        }
        invariant!(s % 2 == 0, "odd value of 2 chi; k is not characteristic");
        Ok(-s / 2)
    };

    let mut members: Vec<(i64, usize)> = Vec::new();
    let mut x = bx.lo.clone();
    for idx in 0..volume {
        let chi = chi_of(&x)?;
        if chi <= n_max {
            if (0..n).any(|j| x[j] == bx.lo[j] || x[j] == bx.hi[j]) {
                return Err(Error::BoxBoundaryContact);
            }
            members.push((chi, idx));
        }
        for (j, xj) in x.iter_mut().enumerate() {
            if *xj < bx.hi[j] {
                *xj += 1;
                break;
            }
            *xj = bx.lo[j];
        }
    }
    members.sort_unstable();
    let points = members.len();
    if points == 0 {
        return Ok(SublevelRoot {
            root: None,
            points,
            volume: volume as u128,
        });
    }

    let mut position = vec![u32::MAX; volume];
    for (pos, &(_, idx)) in members.iter().enumerate() {
        position[idx] = pos as u32;
    }
    let mut dsu: Vec<u32> = (0..points as u32).collect();
    fn find(dsu: &mut [u32], mut a: u32) -> u32 {
        while dsu[a as usize] != a {
            dsu[a as usize] = dsu[dsu[a as usize] as usize];
            a = dsu[a as usize];
        }
        a
    }
    let mut head = vec![usize::MAX; points];
    let mut nodes: Vec<RootNode> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut heads: Vec<u32> = Vec::new();

    for (pos, &(level, idx)) in members.iter().enumerate() {
        heads.clear();
        let mut rem = idx;
        for j in 0..n {
            let coord = rem % width[j];
            rem /= width[j];
            let mut visit = |other: usize| {
                let op = position[other];
                if op != u32::MAX && (op as usize) < pos {
                    let r = find(&mut dsu, op);
                    if !heads.contains(&r) {
                        heads.push(r);
                    }
                }
            };
            if coord > 0 {
                visit(idx - stride[j]);
            }
            if coord + 1 < width[j] {
                visit(idx + stride[j]);
            }
        }
        let mut children = Vec::new();
        for &r in &heads {
            let h = head[r as usize];
            if nodes[h].chi == level {
                children.append(&mut nodes[h].children);
                alive[h] = false;
            } else {
                children.push(h);
            }
        }
        let new_head = if children.len() == 1 {
            children[0]
        } else {
            nodes.push(RootNode {
                chi: level,
                parent: None,
                children,
            });
            alive.push(true);
            nodes.len() - 1
        };
        for &r in &heads {
            dsu[r as usize] = pos as u32;
        }
        head[pos] = new_head;
    }

    let tops: Vec<u32> = {
        let mut t: Vec<u32> = (0..points as u32).map(|p| find(&mut dsu, p)).collect();
        t.sort_unstable();
        t.dedup();
        t
    };
    invariant!(
        tops.len() == 1,
        "sublevel set at n = {n_max} has {} components",
        tops.len()
    );
    let top = head[tops[0] as usize];

    let mut remap = vec![usize::MAX; nodes.len()];
    let mut kept = Vec::new();
    for (old, node) in nodes.into_iter().enumerate() {
        if alive[old] {
            remap[old] = kept.len();
            kept.push(node);
        }
    }
    for node in kept.iter_mut() {
        for c in node.children.iter_mut() {
            *c = remap[*c];
        }
    }
    Ok(SublevelRoot {
        root: Some(GradedRoot::from_nodes(kept, remap[top])),
        points,
        volume: volume as u128,
    })
}

/// `max(|x|)` helper used in diagnostics.
pub fn box_extent(bx: &SublevelBox) -> i64 {
    bx.lo
        .iter()
        .chain(&bx.hi)
        .map(|v| v.abs())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plumbing::{canonical_class, SurgeryLattice};
    use crate::root::{isomorphic, TauFunction};
    use crate::SurgerySpec;
    use alloc::vec;

    #[test]
    fn lens_space_is_a_stem() {
        let g = PlumbingGraph::new(vec![-3], vec![], Some(0), None).unwrap();
        let k = canonical_class(&g).unwrap();
        let bx = SublevelBox::certified(&g, &k, 5).unwrap();
        let out = sublevel_root(&g, &k, 5, &bx).unwrap();
        let root = out.root.unwrap();
        assert_eq!(root.nodes().len(), 1);
        assert_eq!(root.module().reduced_rank(), 0);
        // empty below the minimum
        let min = root.min_chi();
        let out = sublevel_root(&g, &k, min - 1, &bx).unwrap();
        assert!(out.root.is_none());
    }

    #[test]
    fn brieskorn_2_3_7() {
        let spec = SurgerySpec::from_newton_pairs(&[(2, 3)], 1, 1).unwrap();
        let l = SurgeryLattice::new(&spec).unwrap();
        let class = l.spinc_class(0).unwrap();
        let n_max = 2;
        let bx = SublevelBox::certified(l.graph(), &class.kr, n_max).unwrap();
        let out = sublevel_root(l.graph(), &class.kr, n_max, &bx).unwrap();
        let root = out.root.unwrap();
        let mut leaves: Vec<i64> = root.leaves().iter().map(|&v| root.chi(v)).collect();
        leaves.sort();
        assert_eq!(leaves, vec![0, 0]);
        assert_eq!(root.chi(root.top()), 1);
        assert!(isomorphic(
            &root,
            &GradedRoot::from_tau(&TauFunction::new(vec![0, 1, 0]))
        ));
    }

    #[test]
    fn boundary_contact_is_reported() {
        let g = PlumbingGraph::new(vec![-2], vec![], Some(0), None).unwrap();
        let k = canonical_class(&g).unwrap();
        let bx = SublevelBox {
            lo: vec![-1],
            hi: vec![1],
        };
        assert!(matches!(
            sublevel_root(&g, &k, 3, &bx),
            Err(Error::BoxBoundaryContact)
        ));
        let big = SublevelBox {
            lo: vec![0; 8],
            hi: vec![20; 8],
        };
        let g8 = PlumbingGraph::new(
            vec![-2; 8],
            (1..8).map(|i| (i - 1, i)).collect(),
            Some(0),
            None,
        )
        .unwrap();
        let k8 = canonical_class(&g8).unwrap();
        assert!(matches!(
            sublevel_root(&g8, &k8, 0, &big),
            Err(Error::BoxTooLarge { .. })
        ));
        assert!(box_extent(&big) == 20);
    }
}
