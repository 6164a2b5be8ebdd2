use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Dense square matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(dim: usize) -> Self {
        RationalMatrix { dim, data: vec![BigRational::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.dim + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &BigRational) {
        self.data[i * self.dim + j] += v;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Principal submatrix on `idx` (in the given order).
    pub fn principal(&self, idx: &[usize]) -> RationalMatrix {
        let mut m = Self::zeros(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Deletes row and column `i`.
    pub fn minor(&self, i: usize) -> RationalMatrix {
        let idx: Vec<usize> = (0..self.dim).filter(|&k| k != i).collect();
        self.principal(&idx)
    }

    /// Determinant by fraction-free (Bareiss) elimination after scaling each
    /// row to integers.
    pub fn determinant(&self) -> BigRational {
        let n = self.dim;
        if n == 0 {
            return BigRational::one();
        }
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let row = &self.data[i * n..(i + 1) * n];
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                scale *= &l;
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect();
        let mut negate = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        negate = !negate;
                    }
                    None => return BigRational::zero(),
                }
            }
            let (top, rest) = m.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in rest.iter_mut() {
                for j in k + 1..n {
                    let v = &row[j] * &pivot_row[k] - &row[k] * &pivot_row[j];
                    row[j] = v / &prev;
                }
                row[k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let d = BigRational::new(m[n - 1][n - 1].clone(), scale);
        if negate {
            -d
        } else {
            d
        }
    }

    /// Schur complement `M/M_ee` onto `keep`, eliminating `elim` exactly.
    pub fn schur_complement(&self, elim: &[usize], keep: &[usize]) -> Result<RationalMatrix> {
        let order: Vec<usize> = elim.iter().chain(keep).copied().collect();
        let mut m: Vec<Vec<BigRational>> =
            order.iter().map(|&i| order.iter().map(|&j| self.get(i, j).clone()).collect()).collect();
        let (e, n) = (elim.len(), order.len());
        for k in 0..e {
            if m[k][k].is_zero() {
                let i = (k + 1..e)
                    .find(|&i| !m[i][k].is_zero())
                    .ok_or_else(|| Error::Domain("eliminated block is singular".into()))?;
                // a row swap inside the eliminated block leaves the complement unchanged
                m.swap(i, k);
            }
            let (top, rest) = m.split_at_mut(k + 1);
            let piv = &top[k];
            for row in rest.iter_mut() {
                if row[k].is_zero() {
                    continue;
                }
                let f = &row[k] / &piv[k];
                for j in k..n {
                    let v = &f * &piv[j];
                    row[j] -= v;
                }
            }
        }
        let mut out = RationalMatrix::zeros(keep.len());
        for a in 0..keep.len() {
            for b in 0..keep.len() {
                out.set(a, b, m[e + a][e + b].clone());
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn from_rows(rows: &[&[BigRational]]) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(rows.len());
        for (i, r) in rows.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    #[test]
    fn small_determinants() {
        let m = from_rows(&[&[q(1, 2), q(1, 3)], &[q(1, 4), q(1, 5)]]);
        assert_eq!(m.determinant(), q(1, 10) - q(1, 12));
        let p = from_rows(&[&[q(0, 1), q(1, 1), q(0, 1)], &[q(1, 1), q(0, 1), q(0, 1)], &[q(0, 1), q(0, 1), q(1, 1)]]);
        assert_eq!(p.determinant(), q(-1, 1));
        assert_eq!(RationalMatrix::zeros(0).determinant(), q(1, 1));
        assert_eq!(RationalMatrix::zeros(3).determinant(), q(0, 1));
    }

    #[test]
    fn schur_complement_determinant_identity() {
        // det M = det M_ee * det(M / M_ee)
        let mut m = RationalMatrix::zeros(4);
        let vals = [[4, 1, 0, 2], [1, 3, 1, 0], [0, 1, 5, 1], [2, 0, 1, 6]];
        for i in 0..4 {
            for j in 0..4 {
                m.set(i, j, q(vals[i][j], (i + j + 1) as i64));
            }
        }
        let s = m.schur_complement(&[0, 2], &[1, 3]).unwrap();
        assert_eq!(m.determinant(), m.principal(&[0, 2]).determinant() * s.determinant());
    }
}
