//! Exact arithmetic: rationals, dense polynomials, interpolation, linear
//! solving over the rationals and over GF(2), and recovery of the unknowns
//! of a falling-factorial expansion from its polynomial samples.

mod gf2;
mod linalg;
mod poly;
mod recover;

pub use gf2::{gf2_solution_count, Gf2System};
pub use linalg::solve_rational;
pub use poly::{falling_factorial, falling_factorial_poly, interpolate, sigma_expand, sigma_leading, Polynomial};
pub use recover::{forward_samples, recover_unknowns, required_samples};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_from_count(c: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(c.clone()))
}

/// Converts an integral, nonnegative rational back to a count.
pub fn to_count(r: &Rational) -> Option<BigUint> {
    if r.is_integer() {
        r.to_integer().to_biguint()
    } else {
        None
    }
}

/// Binomial coefficient `C(n, k)` for `n >= 0`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Multinomial coefficient `(Σ parts)! / Π parts!`.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let mut total = 0u64;
    let mut acc = BigUint::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(2, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(multinomial(&[2, 1, 1]), BigUint::from(12u32));
        assert_eq!(multinomial(&[]), BigUint::one());
    }
}
