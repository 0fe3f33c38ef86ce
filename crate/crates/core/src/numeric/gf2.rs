use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Linear system over GF(2) with rows packed into 64-bit words.
#[derive(Clone, Debug, Default)]
pub struct Gf2System {
    cols: usize,
    rows: Vec<Vec<u64>>,
    rhs: Vec<bool>,
}

impl Gf2System {
    pub fn new(cols: usize) -> Gf2System {
        Gf2System {
            cols,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Dense rows; every row must have `cols` entries.
    pub fn from_dense(cols: usize, rows: &[Vec<bool>], rhs: &[bool]) -> Gf2System {
        assert_eq!(rows.len(), rhs.len(), "one right-hand side per row");
        let mut sys = Gf2System::new(cols);
        for (row, &b) in rows.iter().zip(rhs) {
            assert_eq!(row.len(), cols, "row width");
            let ones: Vec<usize> = row.iter().enumerate().filter(|(_, &x)| x).map(|(i, _)| i).collect();
            sys.push_row(&ones, b);
        }
        sys
    }

    /// Adds the equation `Σ_{i ∈ ones} x_i = rhs`.
    pub fn push_row(&mut self, ones: &[usize], rhs: bool) {
        let mut row = vec![0u64; self.cols.div_ceil(64)];
        for &i in ones {
            assert!(i < self.cols, "column {i} out of range");
            row[i / 64] ^= 1 << (i % 64);
        }
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Rank of the coefficient matrix, or `None` if the system is
    /// inconsistent.
    pub fn rank_if_consistent(&self) -> Option<usize> {
        let mut rows = self.rows.clone();
        let mut rhs = self.rhs.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let (w, bit) = (col / 64, 1u64 << (col % 64));
            let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & bit != 0) else {
                continue;
            };
            rows.swap(rank, p);
            rhs.swap(rank, p);
            let pivot = rows[rank].clone();
            let pb = rhs[rank];
            for r in 0..rows.len() {
                if r != rank && rows[r][w] & bit != 0 {
                    for (x, y) in rows[r].iter_mut().zip(&pivot) {
                        *x ^= y;
                    }
                    rhs[r] ^= pb;
                }
            }
            rank += 1;
        }
        if rhs[rank..].iter().any(|&b| b) {
            None
        } else {
            Some(rank)
        }
    }
}

/// Number of solutions: 0 if inconsistent, else `2^(cols - rank)`.
pub fn gf2_solution_count(sys: &Gf2System) -> BigUint {
    match sys.rank_if_consistent() {
        None => BigUint::zero(),
        Some(rank) => BigUint::one() << (sys.cols - rank),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_systems() {
        assert_eq!(gf2_solution_count(&Gf2System::new(5)), BigUint::from(32u32));
        let zero_row = Gf2System::from_dense(3, &[vec![false; 3]], &[true]);
        assert_eq!(gf2_solution_count(&zero_row), BigUint::zero());
        let k4 = crate::patterns::pattern_graph(crate::patterns::PatternKind::Clique, &[4]);
        let mut sys = Gf2System::new(k4.m());
        for v in 0..k4.n() {
            sys.push_row(&k4.incident_edges(v), true);
        }
        assert_eq!(gf2_solution_count(&sys), BigUint::from(8u32));
    }

    #[test]
    fn wide_rows() {
        // x_0 + x_100 = 1 over 130 columns
        let mut sys = Gf2System::new(130);
        sys.push_row(&[0, 100], true);
        sys.push_row(&[0, 100], false);
        assert_eq!(gf2_solution_count(&sys), BigUint::zero());
        let mut sys = Gf2System::new(130);
        sys.push_row(&[0, 100], true);
        assert_eq!(gf2_solution_count(&sys), BigUint::one() << 129);
    }
}
