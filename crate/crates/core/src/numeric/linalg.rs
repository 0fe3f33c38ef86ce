use num_traits::Zero;

use super::Rational;
use crate::error::{Error, Result};

/// Solves the square system `a x = b` exactly by Gaussian elimination.
pub fn solve_rational(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::Precondition("solve_rational needs a square system".into()));
    }
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::Singular)?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for c in col..=n {
            m[col][c] = &m[col][c] * &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..=n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    Ok(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use proptest::prelude::*;

    #[test]
    fn identity_and_vandermonde() {
        let id = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        assert_eq!(solve_rational(&id, &[rat(3), rat(-4)]).unwrap(), vec![rat(3), rat(-4)]);
        // rows (1, t) at t = 0, 1
        let v = vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)]];
        assert_eq!(solve_rational(&v, &[rat(2), rat(5)]).unwrap(), vec![rat(2), rat(3)]);
        let sing = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(solve_rational(&sing, &[rat(1), rat(2)]), Err(Error::Singular));
    }

    proptest! {
        #[test]
        fn solution_satisfies_system(entries in prop::collection::vec(-9i64..10, 25), rhs in prop::collection::vec(-9i64..10, 5)) {
            let a: Vec<Vec<Rational>> = entries.chunks(5).map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
            let b: Vec<Rational> = rhs.iter().map(|&x| rat(x)).collect();
            match solve_rational(&a, &b) {
                Ok(x) => {
                    for (row, bi) in a.iter().zip(&b) {
                        let lhs: Rational = row.iter().zip(&x).map(|(p, q)| p * q).sum();
                        prop_assert_eq!(&lhs, bi);
                    }
                }
                Err(e) => prop_assert_eq!(e, Error::Singular),
            }
        }
    }
}
