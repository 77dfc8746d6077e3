//! Heegaard Floer data of negative surgeries along algebraic knots.
//!
//! For `M = S^3_{-p/q}(K)` and each spin^c label `a` in `0..p` this computes
//! the tau function, the graded root, `HF+_even(-M, a)` as a graded module,
//! the d-invariant, the Seiberg-Witten invariant and the graded pieces of
//! `ker U` and `coker U`. The odd part always vanishes.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::invariant;
use crate::knot::AlgebraicKnot;
use crate::numtheory::{
    check_coprime, check_positive, dedekind_sum, frac_sum, int, mod_inverse, rat, Rational,
};
use crate::root::{module_from_root, FiniteTower, GradedRoot, TauFunction, UModuleDecomposition};
use crate::{Error, NegContinuedFraction, Result};

/// `-p/q` surgery along an algebraic knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgerySpec {
    knot: AlgebraicKnot,
    p: i64,
    q: i64,
    cfrac: NegContinuedFraction,
}

impl SurgerySpec {
    pub fn new(knot: AlgebraicKnot, p: i64, q: i64) -> Result<Self> {
        check_positive("p", p)?;
        check_positive("q", q)?;
        check_coprime(p, q)?;
        check_positive("delta", knot.delta())?;
        let cfrac = NegContinuedFraction::new(p, q)?;
        Ok(SurgerySpec { knot, p, q, cfrac })
    }

    pub fn from_newton_pairs(pairs: &[(i64, i64)], p: i64, q: i64) -> Result<Self> {
        Self::new(AlgebraicKnot::from_newton_pairs(pairs)?, p, q)
    }

    pub fn knot(&self) -> &AlgebraicKnot {
        &self.knot
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn cfrac(&self) -> &NegContinuedFraction {
        &self.cfrac
    }

    /// The surgery coefficient `-p/q`.
    pub fn coefficient(&self) -> Rational {
        rat(-self.p, self.q)
    }

    fn check_spinc(&self, a: i64) -> Result<()> {
        if (0..self.p).contains(&a) {
            Ok(())
        } else {
            Err(Error::SpincOutOfRange { a, p: self.p })
        }
    }

    /// `t_a = floor(((2 delta - 1) q - a - 1) / p)`, possibly `-1`.
    pub fn t_a(&self, a: i64) -> Result<i64> {
        self.check_spinc(a)?;
        Ok(t_value(self.p, self.q, a, self.knot.delta()))
    }

    /// The grading shift `r_a`. For integral surgery (`q = 1`) it equals
    /// `((p + 2 delta - 2 - 2a)^2 - p) / 4p`.
    pub fn r_a(&self, a: i64) -> Result<Rational> {
        self.check_spinc(a)?;
        r_value(self.p, self.q, a, self.knot.delta())
    }

    pub fn tau_a(&self, a: i64) -> Result<TauFunction> {
        let t_a = self.t_a(a)?;
        if t_a < 0 {
            return Ok(TauFunction::new(alloc::vec![0]));
        }
        let (p, q, delta) = (self.p, self.q, self.knot.delta());
        let mut values = alloc::vec![0i64; (2 * t_a + 3) as usize];
        let mut floors = 0i64;
        for t in 0..=t_a + 1 {
            values[(2 * t) as usize] = t * (1 - delta) + floors;
            floors += (t * p + a).div_euclid(q);
        }
        for t in 0..=t_a {
            let i = (t * p + a).div_euclid(q);
            invariant!(
                i < self.knot.mu() - 1,
                "alpha index {i} out of range at t = {t}"
            );
            values[(2 * t + 1) as usize] = values[(2 * t + 2) as usize] + self.knot.alpha_ext(i);
        }
        Ok(TauFunction::new(values))
    }

    /// `sw(M, a) = r_a / 2 - sum_{t >= 0} alpha_{[(tp + a)/q]}`.
    pub fn sw_invariant(&self, a: i64) -> Result<Rational> {
        let r = self.r_a(a)?;
        let mut sum = 0i64;
        let mut t = 0i64;
        loop {
            let i = (t * self.p + a).div_euclid(self.q);
            if i >= self.knot.mu() - 1 {
                break;
            }
            sum += self.knot.alpha_ext(i);
            t += 1;
        }
        Ok(r / int(2) - int(sum))
    }

    pub fn compute_spinc(&self, a: i64) -> Result<SpincResult> {
        let t_a = self.t_a(a)?;
        let r_a = self.r_a(a)?;
        let tau = self.tau_a(a)?;
        let v = tau.values();
        if t_a >= 0 {
            invariant!(
                v[0] == 0 && v[1] > 0,
                "tau_{a} violates tau(1) > tau(0) = 0"
            );
            for t in 0..=t_a as usize {
                invariant!(
                    v[2 * t + 1] > v[2 * t + 2],
                    "tau_{a} not strictly decreasing at {}",
                    2 * t + 1
                );
            }
        }
        let root = GradedRoot::from_tau(&tau);
        let module = module_from_root(&root).shifted(&r_a);
        let d_invariant = int(2 * tau.min()) + &r_a;
        invariant!(
            module.tower_grade() == &d_invariant,
            "tower grade {} differs from d = {}",
            module.tower_grade(),
            d_invariant
        );
        let ker_u: Vec<Rational> = (0..=(t_a + 1) as usize)
            .map(|t| int(2 * v[2 * t]) + &r_a)
            .collect();
        let coker_u: Vec<Rational> = (0..=t_a)
            .map(|t| int(2 * v[(2 * t + 1) as usize] - 2) + &r_a)
            .collect();
        let sw_invariant = self.sw_invariant(a)?;
        Ok(SpincResult {
            a,
            t_a,
            r_a,
            tau,
            root,
            module,
            d_invariant,
            sw_invariant,
            ker_u,
            coker_u,
        })
    }

    /// Results for every `a` in `0..p`, checking `sum (t_a + 2) = p + (2 delta - 1) q`.
    pub fn compute_all(&self) -> Result<Vec<SpincResult>> {
        let results: Vec<SpincResult> = (0..self.p)
            .map(|a| self.compute_spinc(a))
            .collect::<Result<_>>()?;
        let total: i64 = results.iter().map(|r| r.t_a + 2).sum();
        let expected = self.p + (2 * self.knot.delta() - 1) * self.q;
        invariant!(
            total == expected,
            "rank of ker U is {total}, expected {expected}"
        );
        Ok(results)
    }
}

/// Everything computed for one spin^c structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpincResult {
    pub a: i64,
    pub t_a: i64,
    pub r_a: Rational,
    pub tau: TauFunction,
    pub root: GradedRoot,
    /// `HF+_even(-M, a)`, already shifted by `r_a`.
    pub module: UModuleDecomposition,
    pub d_invariant: Rational,
    /// `sw(M, a)`; the value for `-M` is its negative.
    pub sw_invariant: Rational,
    pub ker_u: Vec<Rational>,
    pub coker_u: Vec<Rational>,
}

pub(crate) fn t_value(p: i64, q: i64, a: i64, delta: i64) -> i64 {
    ((2 * delta - 1) * q - a - 1).div_euclid(p)
}

/// `r_a` as a function of `(p, q, a, delta)`. Also meaningful at `delta = 0`,
/// where it gives the d-invariants of lens spaces.
pub(crate) fn r_value(p: i64, q: i64, a: i64, delta: i64) -> Result<Rational> {
    let q_prime = mod_inverse(q, p)?;
    let mut r = int(3) * dedekind_sum(q, p)?;
    r += int(2) * frac_sum(a, q_prime, p);
    r -= rat((1 + 2 * a) * (p - 1), 2 * p);
    r += int(delta) * (int(1) - rat(q + 1, p));
    r += rat(delta * delta * q, p);
    r -= rat(2 * delta * a, p);
    Ok(r)
}

/// The module `HF+_even(-M, 0)` for `p = q = 1` written directly in terms of
/// the gap counts `alpha_i`.
pub fn closed_form_p1q1(knot: &AlgebraicKnot) -> UModuleDecomposition {
    let delta = knot.delta();
    let mut finite = Vec::new();
    let push = |finite: &mut Vec<FiniteTower>, grade: i64, length: i64| {
        if length > 0 {
            finite.push(FiniteTower {
                grade: int(grade),
                length: length as u64,
            });
        }
    };
    push(&mut finite, 0, knot.alpha_ext(delta - 1));
    for i in 1..delta {
        for _ in 0..2 {
            push(&mut finite, i * (i + 1), knot.alpha_ext(i - 1 + delta));
        }
    }
    UModuleDecomposition::new(Rational::zero(), finite)
}
