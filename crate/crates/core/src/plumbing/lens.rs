//! d-invariants of lens spaces: surgery on the unknot, i.e. `delta = 0`.

use alloc::vec::Vec;

use crate::hfcore::r_value;
use crate::numtheory::{check_coprime, check_positive, int, rat, Rational};
use crate::Result;

/// `r_a(p, q)` at `delta = 0` for `a = 0..p`. Every class has a trivial
/// reduced module, so these are the d-invariants of `-S^3_{-p/q}(U)`.
pub fn lens_d_invariants(p: i64, q: i64) -> Result<Vec<Rational>> {
    check_positive("p", p)?;
    check_positive("q", q)?;
    check_coprime(p, q)?;
    (0..p).map(|a| r_value(p, q, a, 0)).collect()
}

/// Independent check for [`lens_d_invariants`], kept off every computation
/// path: the recursive formula
/// `d(p, q, i) = (2i + 1 - p - q)^2 / 4pq - 1/4 - d(q, p mod q, i mod q)`
/// with `d(1, 0, 0) = 0`, for `p > q >= 0` coprime and `0 <= i < p + q`.
pub fn lens_d_recursive(p: i64, q: i64, i: i64) -> Rational {
    if p == 1 && q == 0 {
        return int(0);
    }
    if q == 0 {
        return lens_d_recursive(1, 0, 0);
    }
    let num = (2 * i + 1 - p - q) * (2 * i + 1 - p - q);
    rat(num, 4 * p * q) - rat(1, 4) - lens_d_recursive(q, p % q, i % q)
}
