//! The embedded resolution graph `G(f)` of a plane curve and the surgery
//! graph `G(M)`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::Signed;

use super::lattice::TreeSolver;
use super::{Cycle, PlumbingGraph};
use crate::error::invariant;
use crate::knot::AlgebraicKnot;
use crate::numtheory::{as_integer, int, NegContinuedFraction};
use crate::poly::IntPoly;
use crate::Result;

#[derive(Debug, Default)]
struct Blowups {
    euler: Vec<i64>,
    edges: BTreeSet<(usize, usize)>,
}

impl Blowups {
    /// Blows up the intersection point of the divisors `a` and `b` (either may
    /// be absent) and returns the new exceptional divisor.
    fn blow_up(&mut self, a: Option<usize>, b: Option<usize>) -> Result<usize> {
        let e = self.euler.len();
        self.euler.push(-1);
        for d in [a, b].into_iter().flatten() {
            self.euler[d] -= 1;
            self.edges.insert((d, e));
        }
        if let (Some(a), Some(b)) = (a, b) {
            invariant!(
                self.edges.remove(&(a.min(b), a.max(b))),
                "divisors {a} and {b} do not meet"
            );
        }
        Ok(e)
    }
}

/// `G(f)`: the minimal embedded good resolution graph, with the `(-1)`-vertex
/// `v_0` both distinguished and carrying the arrow.
///
/// The curve is followed through blow-ups in local coordinates `v^p = u^q`,
/// where `{u = 0}` and `{v = 0}` are (possibly absent) exceptional divisors.
/// Before returning, the graph is checked against the knot: `det = +-1`,
/// multiplicity `m_f` at `v_0`, A'Campo's formula for the Alexander
/// polynomial, and `sum (2 - s_j) m_j = 1 - 2 delta`.
pub fn embedded_resolution(knot: &AlgebraicKnot) -> Result<PlumbingGraph> {
    let mut bl = Blowups::default();
    let mut last = None;
    for &(p0, q0) in knot.newton_pairs() {
        let (mut p, mut q, mut a, mut b) = (p0, q0, last, None);
        loop {
            let e = bl.blow_up(a, b)?;
            if p == q {
                invariant!(p == 1, "stage ended at ({p}, {q})");
                last = Some(e);
                break;
            }
            if p < q {
                q -= p;
                a = Some(e);
            } else {
                p -= q;
                b = Some(e);
            }
        }
    }
    let v0 = last.unwrap();
    let graph = PlumbingGraph::new(bl.euler, bl.edges.into_iter().collect(), Some(v0), Some(v0))?;
    check_resolution(knot, &graph)?;
    Ok(graph)
}

fn check_resolution(knot: &AlgebraicKnot, graph: &PlumbingGraph) -> Result<()> {
    let v0 = graph.distinguished().unwrap();
    let solver = TreeSolver::new(graph)?;
    invariant!(
        solver.determinant().abs() == int(1),
        "det of G(f) is {}",
        solver.determinant()
    );
    invariant!(
        graph
            .eulers()
            .iter()
            .enumerate()
            .all(|(j, &e)| (e == -1) == (j == v0)),
        "v_0 is not the unique (-1)-vertex"
    );
    let zf = divisorial_cycle(graph)?;
    invariant!(
        zf[v0] == knot.mf(),
        "m_0 = {} but m_f = {}",
        zf[v0],
        knot.mf()
    );

    let degree = |j: usize| graph.degree(j) as i64 + i64::from(j == v0);
    let nodes = (0..graph.len()).filter(|&j| degree(j) >= 3).count();
    invariant!(
        nodes == knot.genus_count(),
        "{nodes} nodes for {} Newton pairs",
        knot.genus_count()
    );

    let euler_sum: i64 = (0..graph.len()).map(|j| (2 - degree(j)) * zf[j]).sum();
    invariant!(
        euler_sum == 1 - 2 * knot.delta(),
        "sum (2 - s_j) m_j = {euler_sum}"
    );

    let mut num = alloc::vec![IntPoly::binomial(1)];
    let mut den = Vec::new();
    for (j, &m) in zf.iter().enumerate() {
        let s = degree(j);
        let f = IntPoly::binomial(m as usize);
        for _ in 2..s {
            num.push(f.clone());
        }
        for _ in s..2 {
            den.push(f.clone());
        }
    }
    let acampo = IntPoly::quotient_of_products(&num, &den)?;
    invariant!(
        &acampo == knot.alexander(),
        "A'Campo gives {acampo}, expected {}",
        knot.alexander()
    );
    Ok(())
}

/// The multiplicities `Z_f = sum m_j b_j` of `G(f)`: the solution of
/// `(Z_f, b_j) = 0` for `j != v_0` and `(Z_f, b_{v_0}) = -1`.
pub fn divisorial_cycle(gf: &PlumbingGraph) -> Result<Cycle> {
    let v0 = gf
        .distinguished()
        .ok_or_else(|| crate::Error::Graph("no distinguished vertex".into()))?;
    let mut rhs = alloc::vec![0i64; gf.len()];
    rhs[v0] = -1;
    let solution = TreeSolver::new(gf)?.solve_int(&rhs);
    let mut zf = Vec::with_capacity(gf.len());
    for (j, m) in solution.iter().enumerate() {
        let m = as_integer(m);
        invariant!(
            m.is_some_and(|m| m > 0),
            "multiplicity at vertex {j} is not a positive integer"
        );
        zf.push(m.unwrap());
    }
    Ok(zf)
}

/// `G(M)` for `M = S^3_{-p/q}(K)`: `G(f)` with its arrow replaced by the
/// string `-k_1 - m_f, -k_2, ..., -k_s`. Vertices of `G(f)` keep their
/// indices; the string follows in order.
pub fn surgery_graph(knot: &AlgebraicKnot, cfrac: &NegContinuedFraction) -> Result<PlumbingGraph> {
    let gf = embedded_resolution(knot)?;
    attach_chain(&gf, knot.mf(), cfrac)
}

pub(crate) fn attach_chain(
    gf: &PlumbingGraph,
    mf: i64,
    cfrac: &NegContinuedFraction,
) -> Result<PlumbingGraph> {
    let v0 = gf.distinguished().unwrap();
    let n = gf.len();
    let mut euler = gf.eulers().to_vec();
    let mut edges = gf.edges().to_vec();
    for (i, &k) in cfrac.terms().iter().enumerate() {
        euler.push(if i == 0 { -k - mf } else { -k });
        edges.push((if i == 0 { v0 } else { n + i - 1 }, n + i));
    }
    let gm = PlumbingGraph::new(euler, edges, Some(v0), None)?;
    TreeSolver::new(&gm)?;
    Ok(gm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn knot(pairs: &[(i64, i64)]) -> AlgebraicKnot {
        AlgebraicKnot::from_newton_pairs(pairs).unwrap()
    }

    #[test]
    fn cusp() {
        let g = embedded_resolution(&knot(&[(2, 3)])).unwrap();
        assert_eq!(g.eulers(), &[-3, -2, -1]);
        assert_eq!(g.distinguished(), Some(2));
        assert_eq!(divisorial_cycle(&g).unwrap(), vec![2, 3, 6]);
    }

    #[test]
    fn torus_4_5() {
        let k = knot(&[(4, 5)]);
        let g = embedded_resolution(&k).unwrap();
        let v0 = g.distinguished().unwrap();
        assert_eq!(divisorial_cycle(&g).unwrap()[v0], 20);
        assert_eq!(
            (0..g.len())
                .filter(|&j| g.degree(j) + usize::from(j == v0) == 3)
                .count(),
            1
        );
    }

    #[test]
    fn two_pairs() {
        let k = knot(&[(2, 3), (2, 1)]);
        let g = embedded_resolution(&k).unwrap();
        let zf = divisorial_cycle(&g).unwrap();
        let mut m = zf.clone();
        m.sort();
        assert_eq!(m, vec![4, 6, 12, 13, 26]);
        assert_eq!(zf[g.distinguished().unwrap()], 26);
        let v0 = g.distinguished().unwrap();
        assert_eq!(
            (0..g.len())
                .filter(|&j| g.degree(j) + usize::from(j == v0) == 3)
                .count(),
            2
        );
    }

    #[test]
    fn surgery_chains() {
        let chain = |pairs: &[(i64, i64)], p, q| {
            let k = knot(pairs);
            let gm = surgery_graph(&k, &NegContinuedFraction::new(p, q).unwrap()).unwrap();
            let n = embedded_resolution(&k).unwrap().len();
            gm.eulers()[n..].to_vec()
        };
        assert_eq!(chain(&[(2, 3)], 1, 1), vec![-7]);
        assert_eq!(chain(&[(4, 5)], 2, 1), vec![-22]);
        assert_eq!(chain(&[(4, 5)], 7, 5), vec![-22, -2, -3]);
    }

    #[test]
    fn many_knots_pass_self_checks() {
        for p1 in 2..=7 {
            for q1 in p1 + 1..=9 {
                if num_integer::gcd(p1, q1) != 1 {
                    continue;
                }
                embedded_resolution(&knot(&[(p1, q1)])).unwrap();
                for p2 in 2..=4 {
                    for q2 in 1..=5 {
                        if num_integer::gcd(p2, q2) == 1 {
                            embedded_resolution(&knot(&[(p1, q1), (p2, q2)])).unwrap();
                        }
                    }
                }
            }
        }
    }
}
