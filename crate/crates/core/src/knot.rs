//! Classical invariants of algebraic knots, computed from Newton pairs.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::invariant;
use crate::poly::IntPoly;
use crate::{Error, Result};

/// Extra room kept in the membership table above `max(mu, m_f)`.
const TABLE_MARGIN: usize = 16;

/// A numerical semigroup given by generators, with membership materialized
/// on `0..=bound`. Everything above the bound is a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    membership: Vec<bool>,
}

impl NumericalSemigroup {
    /// Builds the membership table on `0..=bound` by dynamic programming.
    pub fn new(generators: Vec<i64>, bound: usize) -> Self {
        let mut membership = vec![false; bound + 1];
        membership[0] = true;
        for n in 1..=bound {
            membership[n] = generators
                .iter()
                .any(|&g| g as usize <= n && membership[n - g as usize]);
        }
        NumericalSemigroup {
            generators,
            membership,
        }
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn bound(&self) -> usize {
        self.membership.len() - 1
    }

    pub fn contains(&self, k: i64) -> bool {
        if k < 0 {
            return false;
        }
        self.membership.get(k as usize).copied().unwrap_or(true)
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..self.membership.len() as i64)
            .filter(|&k| !self.contains(k))
            .collect()
    }

    /// `#{gamma in Gamma : gamma <= x}` for `x` within the table.
    pub fn count_up_to(&self, x: i64) -> i64 {
        if x < 0 {
            return 0;
        }
        (0..=x).filter(|&k| self.contains(k)).count() as i64
    }
}

/// An algebraic knot together with all invariants derived from its Newton pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicKnot {
    newton_pairs: Vec<(i64, i64)>,
    linking_pairs: Vec<(i64, i64)>,
    semigroup: NumericalSemigroup,
    gaps: Vec<i64>,
    delta: i64,
    mu: i64,
    alexander: IntPoly,
    alpha: Vec<i64>,
    mf: i64,
}

impl AlgebraicKnot {
    /// Validates `pairs` (`p_i >= 2`, `q_i >= 1`, `q_1 > p_1`, `gcd = 1`) and
    /// computes every invariant.
    pub fn from_newton_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyNewtonPairs);
        }
        for (index, &(p, q)) in pairs.iter().enumerate() {
            let bad = |reason| Error::InvalidNewtonPair {
                index: index + 1,
                p,
                q,
                reason,
            };
            if p < 2 {
                return Err(bad("p_i must be at least 2"));
            }
            if q < 1 {
                return Err(bad("q_i must be at least 1"));
            }
            if p.gcd(&q) != 1 {
                return Err(bad("p_i and q_i must be coprime"));
            }
            if index == 0 && q <= p {
                return Err(bad("q_1 must exceed p_1"));
            }
        }

        let mut linking_pairs: Vec<(i64, i64)> = Vec::with_capacity(pairs.len());
        for (i, &(p, q)) in pairs.iter().enumerate() {
            let a = match i {
                0 => q,
                _ => {
                    let (p_prev, a_prev) = linking_pairs[i - 1];
                    q + p * p_prev * a_prev
                }
            };
            linking_pairs.push((p, a));
        }

        let alexander = alexander_from_linking_pairs(&linking_pairs)?;
        let mu = alexander.degree().unwrap_or(0) as i64;
        let (p_g, a_g) = *linking_pairs.last().unwrap();
        let mf = a_g * p_g;

        let g = linking_pairs.len();
        let mut generators = Vec::with_capacity(g + 1);
        generators.push(linking_pairs.iter().map(|&(p, _)| p).product());
        for k in 1..g {
            let tail: i64 = linking_pairs[k..].iter().map(|&(p, _)| p).product();
            generators.push(linking_pairs[k - 1].1 * tail);
        }
        generators.push(a_g);

        let bound = (mu.max(mf) as usize) + TABLE_MARGIN;
        let semigroup = NumericalSemigroup::new(generators, bound);
        let gaps = semigroup.gaps();
        let delta = gaps.len() as i64;

        invariant!(mu == 2 * delta, "mu = {mu} but delta = {delta}");
        invariant!(
            gaps.last() == Some(&(mu - 1)),
            "largest gap {:?} differs from mu - 1 = {}",
            gaps.last(),
            mu - 1
        );

        let alpha = (0..(mu - 1).max(0))
            .map(|i| gaps.iter().filter(|&&k| k > i).count() as i64)
            .collect();

        Ok(AlgebraicKnot {
            newton_pairs: pairs.to_vec(),
            linking_pairs,
            semigroup,
            gaps,
            delta,
            mu,
            alexander,
            alpha,
            mf,
        })
    }

    pub fn newton_pairs(&self) -> &[(i64, i64)] {
        &self.newton_pairs
    }

    /// Linking pairs `(p_i, a_i)` with `a_1 = q_1`, `a_{i+1} = q_{i+1} + p_{i+1} p_i a_i`.
    pub fn linking_pairs(&self) -> &[(i64, i64)] {
        &self.linking_pairs
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn gaps(&self) -> &[i64] {
        &self.gaps
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    /// `m_f = a_g p_g`.
    pub fn mf(&self) -> i64 {
        self.mf
    }

    pub fn alexander(&self) -> &IntPoly {
        &self.alexander
    }

    /// Number of Newton pairs `g`.
    pub fn genus_count(&self) -> usize {
        self.newton_pairs.len()
    }

    /// `alpha_0, ..., alpha_{mu-2}`.
    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    /// `alpha_i`, extended by `0` for `i >= mu - 1`.
    pub fn alpha_ext(&self, i: i64) -> i64 {
        if i < 0 {
            return self.delta;
        }
        self.alpha.get(i as usize).copied().unwrap_or(0)
    }

    /// The polynomial `Q(t) = sum alpha_i t^i`.
    pub fn q_polynomial(&self) -> IntPoly {
        IntPoly::new(self.alpha.clone())
    }
}

/// Alexander polynomial of the algebraic knot with the given linking pairs.
pub fn alexander_from_linking_pairs(linking: &[(i64, i64)]) -> Result<IntPoly> {
    let g = linking.len();
    let p_tail = |k: usize| -> i64 { linking[k..].iter().map(|&(p, _)| p).product() };
    let mut num = Vec::with_capacity(g + 1);
    let mut den = Vec::with_capacity(g + 1);
    for (i, &(_, a)) in linking.iter().enumerate() {
        num.push(IntPoly::binomial((a * p_tail(i)) as usize));
        den.push(IntPoly::binomial((a * p_tail(i + 1)) as usize));
    }
    num.push(IntPoly::binomial(1));
    den.push(IntPoly::binomial(p_tail(0) as usize));
    let delta = IntPoly::quotient_of_products(&num, &den)?;
    invariant!(
        delta.eval_at_one() == 1,
        "Alexander polynomial not normalized"
    );
    Ok(delta)
}

/// Alias kept for callers that think in terms of knots rather than pairs.
pub fn alexander_polynomial(knot: &AlgebraicKnot) -> &IntPoly {
    knot.alexander()
}

pub fn q_coefficients(knot: &AlgebraicKnot) -> &[i64] {
    knot.alpha()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn knot(pairs: &[(i64, i64)]) -> AlgebraicKnot {
        AlgebraicKnot::from_newton_pairs(pairs).unwrap()
    }

    #[test]
    fn trefoil() {
        let k = knot(&[(2, 3)]);
        assert_eq!(k.delta(), 1);
        assert_eq!(k.mu(), 2);
        assert_eq!(k.gaps(), &[1]);
        assert_eq!(k.mf(), 6);
        assert_eq!(k.alexander().coeffs(), &[1, -1, 1]);
        assert_eq!(k.alpha(), &[1]);
    }

    #[test]
    fn torus_4_5() {
        let k = knot(&[(4, 5)]);
        assert_eq!(k.delta(), 6);
        assert_eq!(k.mu(), 12);
        assert_eq!(k.gaps(), &[1, 2, 3, 6, 7, 11]);
        assert_eq!(k.alpha(), &[6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1]);
        assert_eq!(k.alexander().eval_at_one(), 1);
        assert_eq!(k.alexander().derivative_at_one(), 6);
        assert_eq!(k.semigroup().generators(), &[4, 5]);
        assert_eq!(k.mf(), 20);
    }

    #[test]
    fn two_pairs() {
        let k = knot(&[(2, 3), (2, 1)]);
        assert_eq!(k.linking_pairs(), &[(2, 3), (2, 13)]);
        assert_eq!(k.semigroup().generators(), &[4, 6, 13]);
        assert_eq!(k.delta(), 8);
        assert_eq!(k.mf(), 26);
    }

    #[test]
    fn rejects_invalid_pairs() {
        assert!(matches!(
            AlgebraicKnot::from_newton_pairs(&[]),
            Err(Error::EmptyNewtonPairs)
        ));
        for bad in [
            vec![(2, 2)],
            vec![(3, 2)],
            vec![(1, 3)],
            vec![(2, 3), (2, 0)],
            vec![(2, 3), (4, 6)],
        ] {
            let err = AlgebraicKnot::from_newton_pairs(&bad).unwrap_err();
            assert!(err.is_input_error(), "{bad:?}");
        }
    }

    #[test]
    fn q_identity_small_cases() {
        for pairs in [
            vec![(2, 3)],
            vec![(2, 5)],
            vec![(3, 7)],
            vec![(2, 3), (3, 2)],
        ] {
            let k = knot(&pairs);
            let t_minus_1 = IntPoly::new(vec![-1, 1]);
            let rebuilt = IntPoly::one()
                .add(&IntPoly::new(vec![-k.delta(), k.delta()]))
                .add(&t_minus_1.mul(&t_minus_1).mul(&k.q_polynomial()));
            assert_eq!(&rebuilt, k.alexander(), "{pairs:?}");
        }
    }
}
