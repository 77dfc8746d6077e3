//! Dense univariate integer polynomials, just enough for Alexander polynomials.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::invariant;
use crate::Result;

/// Coefficients stored from degree 0 upward, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    /// `t^n - 1`.
    pub fn binomial(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = -1;
        c[n] += 1;
        IntPoly::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `P'(1)`.
    pub fn derivative_at_one(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, c)| i as i64 * c).sum()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    /// Exact division; fails if the divisor does not divide `self` over `Z[t]`.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        invariant!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.0.len() - 1;
        let lead = divisor.0[dd];
        let mut rem = self.0.clone();
        if rem.len() < divisor.0.len() {
            invariant!(self.is_zero(), "inexact polynomial division");
            return Ok(IntPoly::default());
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd];
            invariant!(top % lead == 0, "inexact polynomial division");
            let c = top / lead;
            quot[k] = c;
            if c != 0 {
                for (j, d) in divisor.0.iter().enumerate() {
                    rem[k + j] -= c * d;
                }
            }
        }
        invariant!(rem.iter().all(|&r| r == 0), "inexact polynomial division");
        Ok(IntPoly::new(quot))
    }

    /// Product of `factors` divided exactly by the product of `divisors`.
    pub fn quotient_of_products(factors: &[IntPoly], divisors: &[IntPoly]) -> Result<IntPoly> {
        let num = factors.iter().fold(IntPoly::one(), |acc, f| acc.mul(f));
        divisors.iter().try_fold(num, |acc, d| acc.div_exact(d))
    }

    /// `t^d P(1/t)`, the reversal with respect to degree `d >= deg P`.
    pub fn reversed(&self, d: usize) -> IntPoly {
        let mut c = vec![0i64; d + 1];
        for (i, a) in self.0.iter().enumerate() {
            c[d - i] = *a;
        }
        IntPoly::new(c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{a}t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn cusp_quotient() {
        let d = IntPoly::quotient_of_products(
            &[IntPoly::binomial(6), IntPoly::binomial(1)],
            &[IntPoly::binomial(2), IntPoly::binomial(3)],
        )
        .unwrap();
        assert_eq!(d.coeffs(), &[1, -1, 1]);
        assert_eq!(d.to_string(), "t^2 - t + 1");
    }

    #[test]
    fn inexact_division_is_reported() {
        assert!(IntPoly::binomial(5)
            .div_exact(&IntPoly::binomial(2))
            .is_err());
        assert!(IntPoly::new(vec![1, 1])
            .div_exact(&IntPoly::new(vec![0, 2]))
            .is_err());
    }
}
