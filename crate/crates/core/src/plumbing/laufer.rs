//! Generalized Laufer sequences: the cycles `x(i)`, `y(i)` and `z(i)`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::spinc::{a_coefficients, SpincClass};
use super::{Cycle, PlumbingGraph};
use crate::error::invariant;
use crate::numtheory::{as_integer, div_ceil};
use crate::root::TauFunction;
use crate::{Error, Result, SurgerySpec};

/// Upper bound on base-vector additions in a single relaxation.
const RELAX_LIMIT: usize = 1 << 28;

/// Walks through `x(0), x(1), ...`: `x(i)` has coefficient `i` at the
/// distinguished vertex `v_0` and is the smallest such cycle with
/// `(x + l', b_j) <= 0` for every `j != v_0`. Each step adds `b_0` and then
/// repeatedly adds the lowest-indexed `b_j` with `(x + l', b_j) > 0`.
#[derive(Debug, Clone)]
pub struct LauferWalk<'g> {
    graph: &'g PlumbingGraph,
    v0: usize,
    x: Cycle,
    // (x, b_j)
    inter: Vec<i64>,
    // (l', b_j)
    offset: Vec<i64>,
    // chi_k(b_j) = 1 - (l', b_j)
    chi_b: Vec<i64>,
    chi: i64,
    max_chi: i64,
    // coordinatewise maximum of every cycle visited (the minimum is x(0))
    reach: Cycle,
    pending: BTreeSet<usize>,
    additions: usize,
}

impl<'g> LauferWalk<'g> {
    /// `offset[j] = (l', b_j)`; `None` means `l' = 0`, i.e. `k = K`.
    pub fn new(graph: &'g PlumbingGraph, offset: Option<Vec<i64>>) -> Result<Self> {
        let v0 = graph
            .distinguished()
            .ok_or_else(|| Error::Graph("no distinguished vertex".into()))?;
        let offset = offset.unwrap_or_else(|| vec![0; graph.len()]);
        invariant!(offset.len() == graph.len(), "offset has the wrong length");
        let chi_b = offset.iter().map(|o| 1 - o).collect();
        let mut walk = LauferWalk {
            graph,
            v0,
            x: vec![0; graph.len()],
            inter: vec![0; graph.len()],
            offset,
            chi_b,
            chi: 0,
            max_chi: 0,
            reach: vec![0; graph.len()],
            pending: BTreeSet::new(),
            additions: 0,
        };
        for j in 0..graph.len() {
            walk.refresh(j);
        }
        walk.relax()?;
        Ok(walk)
    }

    /// Walk for the class `k_r = K + 2 l'`.
    pub fn for_class(graph: &'g PlumbingGraph, class: &SpincClass) -> Result<Self> {
        let offset = graph
            .intersections_q(&class.l_prime)
            .iter()
            .map(as_integer)
            .collect::<Option<Vec<i64>>>()
            .ok_or_else(|| Error::Invariant("(l', b_j) is not integral".into()))?;
        Self::new(graph, Some(offset))
    }

    fn refresh(&mut self, j: usize) {
        if j != self.v0 && self.inter[j] + self.offset[j] > 0 {
            self.pending.insert(j);
        } else {
            self.pending.remove(&j);
        }
    }

    fn add(&mut self, j: usize) {
        self.chi += self.chi_b[j] - self.inter[j];
        self.max_chi = self.max_chi.max(self.chi);
        self.x[j] += 1;
        self.reach[j] = self.reach[j].max(self.x[j]);
        self.inter[j] += self.graph.euler(j);
        self.refresh(j);
        for &k in self.graph.neighbours(j) {
            self.inter[k] += 1;
            self.refresh(k);
        }
        self.additions += 1;
    }

    fn relax(&mut self) -> Result<()> {
        let mut count = 0usize;
        while let Some(j) = self.pending.pop_first() {
            self.add(j);
            count += 1;
            if count > RELAX_LIMIT {
                return Err(Error::StepBound(RELAX_LIMIT));
            }
        }
        Ok(())
    }

    /// Moves from `x(i)` to `x(i + 1)`.
    pub fn advance(&mut self) -> Result<()> {
        self.add(self.v0);
        self.relax()
    }

    /// `pr_0(x)`.
    pub fn index(&self) -> i64 {
        self.x[self.v0]
    }

    pub fn cycle(&self) -> &[i64] {
        &self.x
    }

    /// `chi_{k_r}(x)`.
    pub fn chi(&self) -> i64 {
        self.chi
    }

    /// `(x, b_0)`.
    pub fn b0_intersection(&self) -> i64 {
        self.inter[self.v0]
    }

    /// Largest `chi` met so far, including the intermediate cycles of each
    /// relaxation. The whole walk lies in the sublevel set of this value.
    pub fn max_chi(&self) -> i64 {
        self.max_chi
    }

    /// Coordinatewise maximum of all cycles visited so far.
    pub fn reach(&self) -> &[i64] {
        &self.reach
    }

    /// Total number of base vectors added so far.
    pub fn additions(&self) -> usize {
        self.additions
    }
}

/// `chi_{k_r}(x(i))` and `(x(i), b_0)` for `i = 0..=i_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LauferSequence {
    pub tau: Vec<i64>,
    pub b0_intersections: Vec<i64>,
    pub additions: usize,
}

/// The unreduced tau function `i -> chi_{k_r}(x(i))` on `0..=i_max`.
pub fn laufer_tau(gm: &PlumbingGraph, class: &SpincClass, i_max: usize) -> Result<LauferSequence> {
    let mut walk = LauferWalk::for_class(gm, class)?;
    let mut tau = Vec::with_capacity(i_max + 1);
    let mut b0 = Vec::with_capacity(i_max + 1);
    for i in 0..=i_max {
        if i > 0 {
            walk.advance()?;
        }
        tau.push(walk.chi());
        b0.push(walk.b0_intersection());
    }
    Ok(LauferSequence {
        tau,
        b0_intersections: b0,
        additions: walk.additions(),
    })
}

/// Keeps `tau(t m_f)` and the maximum over each period:
/// `tau(0), M_0, tau(m_f), M_1, ..., M_{t_a}, tau((t_a + 1) m_f)`.
pub fn reduce_tau(full: &[i64], mf: usize, t_a: i64) -> Result<TauFunction> {
    let periods = (t_a + 1) as usize;
    invariant!(full.len() > periods * mf, "sequence too short to reduce");
    let mut values = Vec::with_capacity(2 * periods + 1);
    for t in 0..periods {
        values.push(full[t * mf]);
        values.push(*full[t * mf..(t + 1) * mf].iter().max().unwrap());
    }
    values.push(full[periods * mf]);
    Ok(TauFunction::new(values))
}

/// `y(0), ..., y(i_max)` on `G(f)` together with `(y(i), b_0)`.
pub fn y_cycles(gf: &PlumbingGraph, i_max: usize) -> Result<Vec<(Cycle, i64)>> {
    let mut walk = LauferWalk::new(gf, None)?;
    let mut out = Vec::with_capacity(i_max + 1);
    for i in 0..=i_max {
        if i > 0 {
            walk.advance()?;
        }
        out.push((walk.cycle().to_vec(), walk.b0_intersection()));
    }
    Ok(out)
}

/// Coefficients `u_1, ..., u_s` of `z(i)` on the string `v_1, ..., v_s`:
/// `u_1 = ceil((iq - a)/(p + q m_f))` and
/// `u_j = ceil((u_{j-1} n_{j+1,s} - a'_j) / n_{js})`.
pub fn z_cycle_coeffs(spec: &SurgerySpec, a: i64, i: i64) -> Result<Vec<i64>> {
    let cf = spec.cfrac();
    let (p, q, mf) = (spec.p(), spec.q(), spec.knot().mf());
    let coeffs = a_coefficients(cf, a)?;
    let s = cf.len();
    let a_prime = |j: usize| -> i64 { (j..=s).map(|t| cf.tail(t + 1) * coeffs[t - 1]).sum() };
    let mut u = Vec::with_capacity(s);
    u.push(div_ceil(i * q - a, p + q * mf));
    for j in 2..=s {
        let prev = u[j - 2];
        u.push(div_ceil(prev * cf.tail(j + 1) - a_prime(j), cf.tail(j)));
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plumbing::{embedded_resolution, SurgeryLattice};
    use crate::root::{isomorphic, GradedRoot};
    use alloc::vec;

    fn lattice(pairs: &[(i64, i64)], p: i64, q: i64) -> SurgeryLattice {
        SurgeryLattice::new(&SurgerySpec::from_newton_pairs(pairs, p, q).unwrap()).unwrap()
    }

    #[test]
    fn torus_4_5_reduces_to_tau() {
        let l = lattice(&[(4, 5)], 2, 1);
        let spec = l.spec();
        for a in 0..2 {
            let class = l.spinc_class(a).unwrap();
            let t_a = spec.t_a(a).unwrap();
            let mf = spec.knot().mf() as usize;
            let seq = laufer_tau(l.graph(), &class, (t_a as usize + 2) * mf).unwrap();
            assert_eq!(seq.tau[0], 0);
            let reduced = reduce_tau(&seq.tau, mf, t_a).unwrap();
            assert_eq!(reduced, spec.tau_a(a).unwrap());
            assert!(isomorphic(
                &GradedRoot::from_tau(&TauFunction::new(seq.tau.clone())),
                &GradedRoot::from_tau(&reduced)
            ));
        }
    }

    #[test]
    fn y_cycle_laws() {
        for pairs in [
            vec![(2, 3)],
            vec![(3, 5)],
            vec![(4, 5)],
            vec![(2, 3), (2, 1)],
            vec![(2, 3), (3, 2)],
        ] {
            let knot = crate::AlgebraicKnot::from_newton_pairs(&pairs).unwrap();
            let gf = embedded_resolution(&knot).unwrap();
            let zf = crate::plumbing::divisorial_cycle(&gf).unwrap();
            let mf = knot.mf() as usize;
            let ys = y_cycles(&gf, 3 * mf).unwrap();
            assert!(ys[0].0.iter().all(|&c| c == 0));
            for (i, (y, b0)) in ys.iter().enumerate() {
                assert!(*b0 <= 1);
                let (t, i0) = (i / mf, i % mf);
                let expected: Vec<i64> = ys[i0]
                    .0
                    .iter()
                    .zip(&zf)
                    .map(|(y0, z)| y0 + t as i64 * z)
                    .collect();
                assert_eq!(y, &expected, "{pairs:?} i={i}");
                if i < mf {
                    assert_eq!(*b0, i64::from(!knot.semigroup().contains(i as i64)));
                }
            }
        }
    }

    #[test]
    fn chain_part_and_increments() {
        for (pairs, p, q) in [
            (vec![(2, 3)], 7, 5),
            (vec![(2, 3)], 3, 4),
            (vec![(3, 4)], 5, 2),
            (vec![(4, 5)], 2, 1),
            (vec![(2, 3), (2, 1)], 4, 3),
        ] {
            let l = lattice(&pairs, p, q);
            let spec = l.spec().clone();
            let mf = spec.knot().mf();
            let start = l.chain_start();
            let gf = l.resolution_graph();
            for class in l.spinc_classes().unwrap() {
                let a = class.a;
                let i_max = (spec.t_a(a).unwrap() + 2).max(1) * mf;
                let ys = y_cycles(gf, mf as usize).unwrap();
                let mut walk = LauferWalk::for_class(l.graph(), &class).unwrap();
                let mut prev_chi = walk.chi();
                for i in 0..=i_max {
                    if i > 0 {
                        walk.advance().unwrap();
                        // increment from x(i - 1) to x(i)
                        let j = i - 1;
                        let (t, i0) = (j / mf, j % mf);
                        let expected = t + 1
                            - div_ceil(j * q - a, q * mf + p)
                            - i64::from(!spec.knot().semigroup().contains(i0));
                        assert_eq!(
                            walk.chi() - prev_chi,
                            expected,
                            "{pairs:?} {p}/{q} a={a} i={i}"
                        );
                        prev_chi = walk.chi();
                    }
                    assert_eq!(walk.index(), i);
                    let x = walk.cycle();
                    assert_eq!(&x[start..], z_cycle_coeffs(&spec, a, i).unwrap().as_slice());
                    let (t, i0) = ((i / mf) as usize, (i % mf) as usize);
                    for (k, &m) in l.zf().iter().enumerate() {
                        assert_eq!(x[k], t as i64 * m + ys[i0].0[k]);
                    }
                }
            }
        }
    }

    #[test]
    fn z_coeffs_at_zero() {
        let spec = SurgerySpec::from_newton_pairs(&[(2, 3)], 7, 5).unwrap();
        for a in 0..7 {
            let u = z_cycle_coeffs(&spec, a, 0).unwrap();
            assert!(u.iter().all(|&c| c == 0), "a={a} {u:?}");
        }
    }
}
