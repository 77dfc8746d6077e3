//! Exact integer and rational helpers: negative continued fractions with their
//! numerator table, modular inverses and Dedekind sums.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fractional part `{x} = x - floor(x)`, in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

/// The sawtooth `((x))`: `{x} - 1/2` off the integers, `0` on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        frac(x) - rat(1, 2)
    }
}

pub fn check_positive(what: &'static str, value: i64) -> Result<()> {
    if value >= 1 {
        Ok(())
    } else {
        Err(Error::NonPositive { what, value })
    }
}

pub fn check_coprime(a: i64, b: i64) -> Result<()> {
    let gcd = a.gcd(&b);
    if gcd == 1 {
        Ok(())
    } else {
        Err(Error::NotCoprime { a, b, gcd })
    }
}

/// `ceil(a / b)` for `b > 0`.
pub fn div_ceil(a: i64, b: i64) -> i64 {
    -Integer::div_floor(&-a, &b)
}

/// The Hirzebruch-Jung expansion `p/q = [k_1, ..., k_s]` with
/// `[k_1, ..., k_s] = k_1 - 1/(k_2 - 1/(... - 1/k_s))`, together with the
/// numerators `n_{ij}` of the partial fractions `[k_i, ..., k_j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegContinuedFraction {
    p: i64,
    q: i64,
    terms: Vec<i64>,
    // table[i-1][j-1] = n_{ij} for 1 <= i <= j <= s
    table: Vec<Vec<i64>>,
}

impl NegContinuedFraction {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        check_positive("p", p)?;
        check_positive("q", q)?;
        check_coprime(p, q)?;

        let mut terms = Vec::new();
        let (mut num, mut den) = (p, q);
        while den != 0 {
            let k = div_ceil(num, den);
            terms.push(k);
            (num, den) = (den, k * den - num);
        }

        let s = terms.len();
        let mut table = vec![vec![0i64; s]; s];
        for j in 1..=s {
            // n_{j+1,j} = 1, n_{j+2,j} = 0
            let (mut next, mut next2) = (1i64, 0i64);
            for i in (1..=j).rev() {
                let value = terms[i - 1] * next - next2;
                table[i - 1][j - 1] = value;
                next2 = next;
                next = value;
            }
        }

        Ok(NegContinuedFraction { p, q, terms, table })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    /// Number of terms `s`.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `n_{ij}` with 1-based indices: `n_{i,i-1} = 1` and `n_{ij} = 0` for
    /// `j < i - 1`.
    pub fn n(&self, i: usize, j: usize) -> i64 {
        if j + 1 == i {
            1
        } else if j + 1 < i {
            0
        } else {
            self.table[i - 1][j - 1]
        }
    }

    /// `n_{is}`, the numerator of the tail `[k_i, ..., k_s]`.
    pub fn tail(&self, i: usize) -> i64 {
        self.n(i, self.len())
    }

    /// `q' = n_{1,s-1}`, the inverse of `q` modulo `p` taken in `[1, p]`.
    pub fn q_prime(&self) -> i64 {
        self.n(1, self.len() - 1)
    }

    /// Evaluates the expansion back to a rational number.
    pub fn evaluate(&self) -> Rational {
        let mut value: Option<Rational> = None;
        for &k in self.terms.iter().rev() {
            value = Some(match value {
                None => int(k),
                Some(v) => int(k) - v.recip(),
            });
        }
        value.unwrap_or_else(Rational::zero)
    }
}

/// Inverse of `q` modulo `p`, normalized to `[1, p]` (so `p = 1` gives `1`).
pub fn mod_inverse(q: i64, p: i64) -> Result<i64> {
    check_positive("p", p)?;
    let e = q.extended_gcd(&p);
    if e.gcd.abs() != 1 {
        return Err(Error::NotCoprime {
            a: q,
            b: p,
            gcd: e.gcd.abs(),
        });
    }
    let inv = (e.x * e.gcd).mod_floor(&p);
    Ok(if inv == 0 { p } else { inv })
}

/// Dedekind sum `s(q, p) = sum_{l=0}^{p-1} ((l/p)) ((q l / p))`, by direct
/// summation.
pub fn dedekind_sum(q: i64, p: i64) -> Result<Rational> {
    check_positive("p", p)?;
    let mut sum = Rational::zero();
    for l in 0..p {
        let a = sawtooth(&rat(l, p));
        if a.is_zero() {
            continue;
        }
        sum += a * sawtooth(&rat(q * l, p));
    }
    Ok(sum)
}

/// `sum_{j=1}^{a} {j q' / p}`.
pub fn frac_sum(a: i64, q_prime: i64, p: i64) -> Rational {
    let mut sum = Rational::zero();
    for j in 1..=a {
        sum += rat((j * q_prime).mod_floor(&p), p);
    }
    sum
}

/// Convenience for tests and reports: `x` as an `i64` when it is an integer.
pub fn as_integer(x: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

pub fn is_unit(x: &BigInt) -> bool {
    x.abs().is_one()
}
