use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{binomial, rat, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Polynomial {
        Polynomial::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Polynomial {
        Polynomial::from_ints(&[0, 1])
    }

    /// `x + c`.
    pub fn linear(c: Rational) -> Polynomial {
        Polynomial::new(vec![c, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: &Rational) -> Polynomial {
        let lin = Polynomial::linear(c.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, a| &(&acc * &lin) + &Polynomial::constant(a.clone()))
    }

    /// `p(q(x))`.
    pub fn compose(&self, q: &Polynomial) -> Polynomial {
        self.coeffs
            .iter()
            .rev()
            .fold(Polynomial::zero(), |acc, a| &(&acc * q) + &Polynomial::constant(a.clone()))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `(x)_t = x (x-1) ... (x-t+1)`.
pub fn falling_factorial(x: &Rational, t: usize) -> Rational {
    (0..t).fold(Rational::one(), |acc, j| acc * (x - rat(j as i64)))
}

/// `(p)_t` for a polynomial argument.
pub fn falling_factorial_poly(p: &Polynomial, t: usize) -> Polynomial {
    (0..t).fold(Polynomial::one(), |acc, j| &acc * &(p - &Polynomial::constant(rat(j as i64))))
}

/// Newton-form interpolation through points with distinct `x`.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Polynomial> {
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i].0 == points[j].0 {
                return Err(Error::Precondition(format!("duplicate interpolation node {}", points[i].0)));
            }
        }
    }
    let n = points.len();
    let mut dd: Vec<Rational> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&points[i].0 - &points[i - level].0);
        }
    }
    let mut result = Polynomial::zero();
    for i in (0..n).rev() {
        result = &(&result * &Polynomial::linear(-points[i].0.clone())) + &Polynomial::constant(dd[i].clone());
    }
    Ok(result)
}

/// Expansion `(y - t)_{2(r-k)} = Σ_i σ_i(t) y^{2(r-k)-i}`; returns
/// `σ_0, .., σ_{2(r-k)}` as polynomials in `t`.
pub fn sigma_expand(r: usize, k: usize) -> Result<Vec<Polynomial>> {
    if k > r {
        return Err(Error::Precondition(format!("sigma expansion needs r >= k, got r={r}, k={k}")));
    }
    let d = 2 * (r - k);
    // by_power[p] = coefficient of y^p, a polynomial in t
    let mut by_power = vec![Polynomial::one()];
    for j in 0..d {
        // multiply by (y - t - j)
        let shift = Polynomial::from_ints(&[-(j as i64), -1]);
        let mut next = vec![Polynomial::zero(); by_power.len() + 1];
        for (p, c) in by_power.iter().enumerate() {
            next[p + 1] = &next[p + 1] + c;
            next[p] = &next[p] + &(c * &shift);
        }
        by_power = next;
    }
    Ok((0..=d).map(|i| by_power[d - i].clone()).collect())
}

/// Leading coefficient of `σ_i` predicted in closed form:
/// `(-1)^i C(2(r-k), i)`.
pub fn sigma_leading(r: usize, k: usize, i: usize) -> Rational {
    let b = Rational::from_integer(binomial(2 * (r - k) as u64, i as u64).into());
    if i % 2 == 1 {
        -b
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        rat(n)
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(&r(5), 2), r(20));
        assert_eq!(falling_factorial(&r(5), 0), r(1));
        let y1 = Polynomial::from_ints(&[-1, 1]);
        assert_eq!(falling_factorial_poly(&y1, 2), Polynomial::from_ints(&[2, -3, 1]));
        assert_eq!(falling_factorial_poly(&Polynomial::x(), 0), Polynomial::one());
    }

    #[test]
    fn interpolation_examples() {
        let p = interpolate(&[(r(0), r(1)), (r(1), r(1))]).unwrap();
        assert_eq!(p, Polynomial::one());
        let p = interpolate(&[(r(0), r(0)), (r(1), r(1)), (r(2), r(4))]).unwrap();
        assert_eq!(p, Polynomial::from_ints(&[0, 0, 1]));
        assert!(interpolate(&[(r(1), r(0)), (r(1), r(2))]).is_err());
        assert_eq!(interpolate(&[]).unwrap(), Polynomial::zero());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_expand(3, 3).unwrap(), vec![Polynomial::one()]);
        let s = sigma_expand(2, 1).unwrap();
        assert_eq!(s[0], Polynomial::one());
        assert_eq!(s[1], Polynomial::from_ints(&[-1, -2]));
        assert_eq!(s[2], Polynomial::from_ints(&[0, 1, 1]));
        assert!(sigma_expand(1, 2).is_err());
    }

    #[test]
    fn sigma_leading_coefficients() {
        for d in 0..=4 {
            let s = sigma_expand(d + 1, 1).unwrap();
            for (i, poly) in s.iter().enumerate() {
                assert_eq!(poly.degree().unwrap_or(0), i);
                assert_eq!(poly.coeff(i), sigma_leading(d + 1, 1, i));
            }
        }
    }

    #[test]
    fn shift_and_compose() {
        let p = Polynomial::from_ints(&[1, 2, 3]);
        let shifted = p.shift(&r(2));
        for x in -3..4 {
            assert_eq!(shifted.eval(&r(x)), p.eval(&r(x + 2)));
        }
        assert_eq!(p.compose(&Polynomial::linear(r(2))), shifted);
    }

    proptest! {
        #[test]
        fn interpolate_inverts_evaluation(coeffs in prop::collection::vec(-50i64..50, 1..11), offset in -5i64..5) {
            let p = Polynomial::from_ints(&coeffs);
            let pts: Vec<_> = (0..coeffs.len() as i64).map(|i| (r(i + offset), p.eval(&r(i + offset)))).collect();
            prop_assert_eq!(interpolate(&pts).unwrap(), p);
        }
    }
}
