//! Exact rational scalars.
//!
//! Every value in this crate is a [`Rational`] (arbitrary-precision, always
//! in lowest terms with positive denominator) or an integer. There is no
//! floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, stored in lowest terms.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from two machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Least common multiple of the denominators of `values`.
///
/// Returns 1 for an empty iterator. All inputs are in lowest terms, so this
/// is the smallest positive integer `m` with `m * v` integral for all `v`.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    let mut acc = BigInt::one();
    for v in values {
        acc = acc.lcm(v.denom());
    }
    acc
}

/// Greatest common divisor of the numerators of `values`, as a nonnegative integer.
pub fn numerator_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    let mut acc = BigInt::zero();
    for v in values {
        acc = acc.gcd(v.numer());
    }
    acc.abs()
}

/// Parse a rational written as `p/q` or as a plain integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(p))
        }
    }
}
