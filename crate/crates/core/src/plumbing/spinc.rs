//! Characteristic elements and spin^c structures of `G(M)`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::lattice::TreeSolver;
use super::resolution::{attach_chain, divisorial_cycle, embedded_resolution};
use super::{Cycle, PlumbingGraph, RationalCycle};
use crate::error::invariant;
use crate::hfcore::SurgerySpec;
use crate::numtheory::{dedekind_sum, frac_sum, int, rat, NegContinuedFraction, Rational};
use crate::{Error, Result};

/// A characteristic element of `L'`, in rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicVector {
    coeffs: RationalCycle,
}

impl CharacteristicVector {
    pub fn new(coeffs: RationalCycle) -> Self {
        CharacteristicVector { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `(k, b_j) + (b_j, b_j)` is an even integer for every vertex.
    pub fn is_characteristic(&self, graph: &PlumbingGraph) -> bool {
        graph
            .intersections_q(&self.coeffs)
            .iter()
            .enumerate()
            .all(|(j, v)| {
                let s = v + int(graph.euler(j));
                s.is_integer() && (s.to_integer() % 2u32).is_zero()
            })
    }

    /// `k^2`.
    pub fn square(&self, graph: &PlumbingGraph) -> Rational {
        graph.pair_q(&self.coeffs, &self.coeffs)
    }
}

/// The canonical class: `(K, b_j) = -e_j - 2` for every vertex.
pub fn canonical_class(graph: &PlumbingGraph) -> Result<CharacteristicVector> {
    let rhs: Vec<i64> = graph.eulers().iter().map(|e| -e - 2).collect();
    Ok(CharacteristicVector::new(
        TreeSolver::new(graph)?.solve_int(&rhs),
    ))
}

/// The spin^c structure `sigma_a` of `M`, with its distinguished
/// representative `k_r = K + 2 l'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpincClass {
    pub a: i64,
    /// `a_1, ..., a_s` with `l~' = -(a_1 g~_1 + ... + a_s g~_s)`.
    pub a_coeffs: Vec<i64>,
    pub l_prime: RationalCycle,
    pub kr: CharacteristicVector,
}

/// The lattice of `G(M)` together with the data needed to compare it with
/// the string `-k_1, ..., -k_s` of the lens space `L(p, q)`.
#[derive(Debug, Clone)]
pub struct SurgeryLattice {
    spec: SurgerySpec,
    gf: PlumbingGraph,
    gm: PlumbingGraph,
    zf: Cycle,
    solver: TreeSolver,
    chain: PlumbingGraph,
    chain_solver: TreeSolver,
    canonical: CharacteristicVector,
}

impl SurgeryLattice {
    pub fn new(spec: &SurgerySpec) -> Result<Self> {
        let gf = embedded_resolution(spec.knot())?;
        let zf = divisorial_cycle(&gf)?;
        let gm = attach_chain(&gf, spec.knot().mf(), spec.cfrac())?;
        let solver = TreeSolver::new(&gm)?;
        let s = spec.cfrac().len();
        let chain = PlumbingGraph::new(
            spec.cfrac().terms().iter().map(|k| -k).collect(),
            (1..s).map(|i| (i - 1, i)).collect(),
            Some(0),
            None,
        )?;
        let chain_solver = TreeSolver::new(&chain)?;
        let canonical = canonical_class(&gm)?;
        let lattice = SurgeryLattice {
            spec: spec.clone(),
            gf,
            gm,
            zf,
            solver,
            chain,
            chain_solver,
            canonical,
        };
        invariant!(
            lattice.canonical.is_characteristic(&lattice.gm),
            "K is not characteristic"
        );
        let lhs = lattice.canonical.square(&lattice.gm) + int(lattice.gm.len() as i64);
        let rhs = {
            let dk = lattice.delta_canonical_chain();
            lattice.chain.pair_q(&dk, &dk) + int(s as i64)
        };
        invariant!(lhs == rhs, "K^2 + #J = {lhs} but the string gives {rhs}");
        Ok(lattice)
    }

    pub fn spec(&self) -> &SurgerySpec {
        &self.spec
    }

    /// `G(M)`.
    pub fn graph(&self) -> &PlumbingGraph {
        &self.gm
    }

    /// `G(f)`.
    pub fn resolution_graph(&self) -> &PlumbingGraph {
        &self.gf
    }

    /// The string `-k_1, ..., -k_s` without the `delta` decoration.
    pub fn chain_graph(&self) -> &PlumbingGraph {
        &self.chain
    }

    pub fn solver(&self) -> &TreeSolver {
        &self.solver
    }

    pub fn chain_solver(&self) -> &TreeSolver {
        &self.chain_solver
    }

    pub fn zf(&self) -> &[i64] {
        &self.zf
    }

    /// Index of `v_1` in `G(M)`; the string occupies the indices from here on.
    pub fn chain_start(&self) -> usize {
        self.gf.len()
    }

    pub fn v0(&self) -> usize {
        self.gm.distinguished().unwrap()
    }

    pub fn canonical(&self) -> &CharacteristicVector {
        &self.canonical
    }

    /// `K~`, the canonical class of the string.
    pub fn chain_canonical(&self) -> RationalCycle {
        canonical_class(&self.chain).unwrap().coeffs
    }

    /// `K~ + 2 delta g~_1`, the canonical class of the string whose first
    /// vertex carries a singular point with delta invariant `delta`.
    pub fn delta_canonical_chain(&self) -> RationalCycle {
        let mut k = self.chain_canonical();
        let g1 = self.chain_solver.dual(0);
        let two_delta = int(2 * self.spec.knot().delta());
        for (x, g) in k.iter_mut().zip(&g1) {
            *x += &two_delta * g;
        }
        k
    }

    /// `pi^*`: `b~_1 -> Z_f + b_1`, `b~_j -> b_j` for `j >= 2`.
    pub fn pull_back(&self, x: &[Rational]) -> RationalCycle {
        let start = self.chain_start();
        let mut out = vec![Rational::zero(); self.gm.len()];
        for (j, m) in self.zf.iter().enumerate() {
            out[j] = &x[0] * int(*m);
        }
        for (i, c) in x.iter().enumerate() {
            out[start + i] = c.clone();
        }
        out
    }

    /// `pi_*`: forgets the coefficients on `G(f)`.
    pub fn push_forward(&self, x: &[Rational]) -> RationalCycle {
        x[self.chain_start()..].to_vec()
    }

    pub fn a_coeffs(&self, a: i64) -> Result<Vec<i64>> {
        a_coefficients(self.spec.cfrac(), a)
    }

    pub fn spinc_class(&self, a: i64) -> Result<SpincClass> {
        let a_coeffs = self.a_coeffs(a)?;
        let s = a_coeffs.len();
        let mut l_chain = vec![Rational::zero(); s];
        for (i, &ai) in a_coeffs.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (x, g) in l_chain.iter_mut().zip(self.chain_solver.dual(i)) {
                *x -= int(ai) * g;
            }
        }
        let l_prime = self.pull_back(&l_chain);
        let kr = CharacteristicVector::new(
            self.canonical
                .coeffs()
                .iter()
                .zip(&l_prime)
                .map(|(k, l)| k + int(2) * l)
                .collect(),
        );
        Ok(SpincClass {
            a,
            a_coeffs,
            l_prime,
            kr,
        })
    }

    pub fn spinc_classes(&self) -> Result<Vec<SpincClass>> {
        (0..self.spec.p()).map(|a| self.spinc_class(a)).collect()
    }

    /// `-(k_r^2 + #J) / 4`, the grading shift read off the lattice.
    pub fn shift(&self, class: &SpincClass) -> Rational {
        -(class.kr.square(&self.gm) + int(self.gm.len() as i64)) / int(4)
    }
}

/// `a_1, ..., a_s` for the class `a` by the greedy recursion
/// `a_i = floor((a - sum_{t<i} n_{t+1,s} a_t) / n_{i+1,s})`, checked against (SI).
pub fn a_coefficients(cf: &NegContinuedFraction, a: i64) -> Result<Vec<i64>> {
    let s = cf.len();
    if !(0..cf.p()).contains(&a) {
        return Err(Error::SpincOutOfRange { a, p: cf.p() });
    }
    let mut coeffs = Vec::with_capacity(s);
    let mut rest = a;
    for i in 1..=s {
        let ai = rest.div_euclid(cf.tail(i + 1));
        rest -= cf.tail(i + 1) * ai;
        coeffs.push(ai);
    }
    for i in 1..=s {
        invariant!(coeffs[i - 1] >= 0, "a_{i} < 0");
        let partial: i64 = (i..=s).map(|t| cf.tail(t + 1) * coeffs[t - 1]).sum();
        invariant!(partial < cf.tail(i), "(SI) fails at i = {i} for a = {a}");
    }
    let back: i64 = (1..=s).map(|t| cf.tail(t + 1) * coeffs[t - 1]).sum();
    invariant!(back == a, "a_i reconstruct {back}, not {a}");
    Ok(coeffs)
}

/// `-(k_r^2 + #J)/4` assembled from the string data alone: Dedekind sum,
/// fractional parts and `delta`, without building a graph.
pub fn krsq_formula(spec: &SurgerySpec, a: i64) -> Result<Rational> {
    let (p, q) = (spec.p(), spec.q());
    if !(0..p).contains(&a) {
        return Err(Error::SpincOutOfRange { a, p });
    }
    let delta = spec.knot().delta();
    let q_prime = spec.cfrac().q_prime();
    let k_tilde_sq = rat(2 * (p - 1), p) - int(12) * dedekind_sum(q, p)?;
    let dk_sq =
        k_tilde_sq - int(4 * delta) * (int(1) - rat(q + 1, p)) - int(4 * delta * delta) * rat(q, p);
    let cross = rat(a * (p - 1), p) - int(2) * frac_sum(a, q_prime, p);
    let kr_sq = dk_sq + int(4) * cross + int(8 * delta) * rat(a, p);
    Ok(-kr_sq / int(4))
}
