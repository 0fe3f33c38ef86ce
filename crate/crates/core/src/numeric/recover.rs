//! Recovery of `a_{t,k-t}` from the polynomials
//!
//! ```text
//! P_r(y) = Σ_{K=0..r} Σ_{t=0..K} a_{t,K-t} · C(r,K) · (y - t)_{2(r-K)}
//! ```
//!
//! via the moments `I_{K,i} = Σ_t a_{t,K-t} t^i`. Phase `m` determines every
//! moment with `2K + i = m + 1` from the coefficient of `y^{2r-(m+1)}` in
//! `P_r` at `⌊(m+1)/2⌋ + 1` consecutive nodes `r`. Reaching `I_{k,k}` takes
//! phases `m = 0 .. 3k-1`, so the inputs `P_0 ..= P_{3k}` suffice unless a
//! node system is singular and the nodes have to be shifted.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{falling_factorial_poly, sigma_expand};
use super::{binomial, linalg::solve_rational, rat, Polynomial, Rational};
use crate::error::{Error, Result};

const MAX_NODE_SHIFTS: usize = 8;

/// Number of polynomials `P_0, .., P_{R}` (that is, `R + 1`) that
/// [`recover_unknowns`] reads for target index `k` when no node shift is
/// needed: `R = 3k`.
pub fn required_samples(k: usize) -> usize {
    3 * k + 1
}

fn big_rat(b: num_bigint::BigUint) -> Rational {
    Rational::from_integer(BigInt::from(b))
}

/// Builds `P_0 ..= P_{r_max}` from the unknowns; `levels[K][t]` is
/// `a_{t,K-t}` and must be given for every `K <= r_max`.
pub fn forward_samples(levels: &[Vec<Rational>], r_max: usize) -> Result<Vec<Polynomial>> {
    if levels.len() <= r_max {
        return Err(Error::Precondition(format!(
            "forward evaluation up to r={r_max} needs {} levels, got {}",
            r_max + 1,
            levels.len()
        )));
    }
    let mut out = Vec::with_capacity(r_max + 1);
    for r in 0..=r_max {
        let mut p = Polynomial::zero();
        for (kk, level) in levels.iter().enumerate().take(r + 1) {
            if level.len() != kk + 1 {
                return Err(Error::Precondition(format!("level {kk} needs {} entries", kk + 1)));
            }
            let choose = big_rat(binomial(r as u64, kk as u64));
            for (t, a) in level.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let base = Polynomial::linear(-rat(t as i64));
                let ff = falling_factorial_poly(&base, 2 * (r - kk));
                p = &p + &ff.scale(&(a * &choose));
            }
        }
        out.push(p);
    }
    Ok(out)
}

fn pow_usize(t: usize, i: usize) -> Rational {
    rat(t as i64).pow(i as i32)
}

/// Solves the Vandermonde system `Σ_t t^i a_t = I_i` (`i, t = 0..=k`).
fn unknowns_from_moments(moments: &[Rational]) -> Result<Vec<Rational>> {
    let k = moments.len() - 1;
    let b: Vec<Vec<Rational>> = (0..=k)
        .map(|i| (0..=k).map(|t| if i == 0 { Rational::one() } else { pow_usize(t, i) }).collect())
        .collect();
    solve_rational(&b, moments)
}

/// Returns `[a_{0,k}, a_{1,k-1}, .., a_{k,0}]` given the coefficient
/// polynomials `p[r] = P_r` for `r = 0 ..`; see [`required_samples`].
pub fn recover_unknowns(k: usize, p: &[Polynomial]) -> Result<Vec<Rational>> {
    if p.is_empty() {
        return Err(Error::Precondition("no samples given".into()));
    }
    for (r, poly) in p.iter().enumerate() {
        if poly.degree().is_some_and(|d| d > 2 * r) {
            return Err(Error::Inconsistent(format!("P_{r} has degree above {}", 2 * r)));
        }
    }
    let phases = 3 * k;
    // moments[K][i] = I_{K,i}
    let mut moments: Vec<Vec<Option<Rational>>> = (0..=phases / 2 + 1).map(|_| vec![None; phases + 2]).collect();
    moments[0][0] = Some(p[0].coeff(0));
    let mut sigma_cache: HashMap<usize, Vec<Polynomial>> = HashMap::new();
    let mut sigma = |d: usize| -> Vec<Polynomial> {
        sigma_cache
            .entry(d)
            .or_insert_with(|| sigma_expand(d, 0).expect("d >= 0"))
            .clone()
    };
    for m in 0..phases {
        let target = m + 1;
        let kmax = target / 2;
        let mut solved = None;
        for shift in 0..=MAX_NODE_SHIFTS {
            let base = target.div_ceil(2) + shift;
            let nodes: Vec<usize> = (0..=kmax).map(|j| base + j).collect();
            let last = *nodes.last().unwrap();
            if last >= p.len() {
                return Err(Error::Precondition(format!(
                    "phase {m} needs P_r up to r = {last}, only {} given",
                    p.len()
                )));
            }
            let mut a = Vec::with_capacity(nodes.len());
            let mut rhs = Vec::with_capacity(nodes.len());
            for &r in &nodes {
                let mut known = Rational::zero();
                let mut row = Vec::with_capacity(kmax + 1);
                for kk in 0..=kmax {
                    let choose = big_rat(binomial(r as u64, kk as u64));
                    let deg = target - 2 * kk;
                    let lead = big_rat(binomial(2 * (r - kk) as u64, deg as u64));
                    row.push(if target % 2 == 1 { -&lead * &choose } else { &lead * &choose });
                    let s = &sigma(r - kk)[deg];
                    for j in 0..deg {
                        let c = s.coeff(j);
                        if c.is_zero() {
                            continue;
                        }
                        let moment = moments[kk][j].as_ref().expect("lower moments computed in earlier phases");
                        known += &choose * c * moment;
                    }
                }
                a.push(row);
                rhs.push(p[r].coeff(2 * r - target) - known);
            }
            match solve_rational(&a, &rhs) {
                Ok(x) => {
                    solved = Some(x);
                    break;
                }
                Err(Error::Singular) => continue,
                Err(e) => return Err(e),
            }
        }
        let x = solved.ok_or(Error::Singular)?;
        for (kk, value) in x.into_iter().enumerate() {
            moments[kk][target - 2 * kk] = Some(value);
        }
    }
    let level = |kk: usize| -> Result<Vec<Rational>> {
        let ms: Vec<Rational> = (0..=kk).map(|i| moments[kk][i].clone().expect("moment available")).collect();
        unknowns_from_moments(&ms)
    };
    let levels: Vec<Vec<Rational>> = (0..=k).map(level).collect::<Result<_>>()?;
    let check_upto = k.min(p.len() - 1);
    let rebuilt = forward_samples(&levels, check_upto)?;
    for (r, q) in rebuilt.iter().enumerate() {
        if q != &p[r] {
            return Err(Error::Inconsistent(format!("recovered unknowns do not reproduce P_{r}")));
        }
    }
    Ok(levels.into_iter().nth(k).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn planted(levels: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Rational>> {
        (0..levels)
            .map(|kk| (0..=kk).map(|_| rat(rng.gen_range(0..=50))).collect())
            .collect()
    }

    #[test]
    fn level_zero() {
        let p = vec![Polynomial::constant(rat(7))];
        assert_eq!(recover_unknowns(0, &p).unwrap(), vec![rat(7)]);
    }

    #[test]
    fn planted_level_one() {
        // a_{0,0}=4, a_{0,1}=2, a_{1,0}=3, higher levels arbitrary
        let mut levels = vec![vec![rat(4)], vec![rat(2), rat(3)]];
        levels.push(vec![rat(1), rat(0), rat(5)]);
        levels.push(vec![rat(0), rat(9), rat(1), rat(2)]);
        let p = forward_samples(&levels, required_samples(1) - 1).unwrap();
        assert_eq!(recover_unknowns(1, &p).unwrap(), vec![rat(2), rat(3)]);
    }

    #[test]
    fn planted_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for k in 0..=4 {
            for _ in 0..5 {
                let r = required_samples(k) - 1;
                let levels = planted(r + 1, &mut rng);
                let p = forward_samples(&levels, r).unwrap();
                assert_eq!(recover_unknowns(k, &p).unwrap(), levels[k]);
            }
        }
    }

    #[test]
    fn too_few_samples() {
        let p = vec![Polynomial::constant(rat(1)), Polynomial::one()];
        assert!(matches!(recover_unknowns(1, &p), Err(Error::Precondition(_))));
    }

    #[test]
    fn inconsistent_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let levels = planted(4, &mut rng);
        let mut p = forward_samples(&levels, 3).unwrap();
        p[0] = &p[0] + &Polynomial::one();
        assert!(recover_unknowns(1, &p).is_err());
    }
}
