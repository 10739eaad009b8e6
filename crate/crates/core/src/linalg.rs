//! Exact integer matrix algebra: Smith normal form invariants and kernel
//! sizes over `Z/nZ` and `Z`.
//!
//! All elimination runs over arbitrary-precision integers; entry growth during
//! Euclidean reduction is unbounded in general.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on `n^cols` for [`brute_force_kernel_count`].
pub const DEFAULT_BRUTE_FORCE_BOUND: u64 = 10_000_000;

/// Coefficient ring of a quandle module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    /// `Z/nZ` with `n >= 2`.
    Mod(u64),
    Integers,
}

impl Ring {
    pub fn modulo(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadModulus(n));
        }
        Ok(Ring::Mod(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Ring::Mod(_))
    }

    /// Canonical representative: `[0, n)` for `Z/nZ`, identity for `Z`.
    pub fn reduce(&self, v: i64) -> i64 {
        match *self {
            Ring::Mod(n) => v.rem_euclid(n as i64),
            Ring::Integers => v,
        }
    }

    pub fn is_unit(&self, v: i64) -> bool {
        match *self {
            Ring::Mod(n) => (self.reduce(v) as u64).gcd(&n) == 1,
            Ring::Integers => v == 1 || v == -1,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Mod(n) => write!(f, "Z_{n}"),
            Ring::Integers => write!(f, "Z"),
        }
    }
}

/// Dense integer matrix in row-major order. Zero rows or columns are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::MatrixShape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        Self::new(
            rows,
            cols,
            entries.iter().map(|&v| BigInt::from(v)).collect(),
        )
    }

    /// Builds from row vectors; all rows must share a length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::MatrixShape {
                    rows: rows.len(),
                    cols,
                    len: r.len(),
                });
            }
            entries.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Entries as `i64`, panicking if any does not fit. Intended for small
    /// matrices built from reduced ring elements.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|v| v.to_i64().expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }

    fn to_nested(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", line.join(", "))?;
        }
        Ok(())
    }
}

/// Invariant factors `d_1 | d_2 | ... ` of an integer matrix, padded with
/// zeros to the row count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfInvariants {
    pub diagonal: Vec<BigInt>,
}

impl SnfInvariants {
    pub fn nonzero(&self) -> impl Iterator<Item = &BigInt> {
        self.diagonal.iter().filter(|d| !d.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.nonzero().count()
    }
}

/// Position of the nonzero entry of least absolute value in the trailing
/// submatrix starting at `(t, t)`.
fn min_abs_position(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], j: usize, k: usize) {
    if j != k {
        for row in a.iter_mut() {
            row.swap(j, k);
        }
    }
}

/// Smith normal form invariant factors.
///
/// Pivot on the least nonzero entry, clear its row and column by Euclidean
/// steps, and when the pivot fails to divide the remaining block add the
/// offending row into the pivot row and reduce again.
#[allow(clippy::needless_range_loop)]
pub fn snf_invariants(m: &IntMatrix) -> SnfInvariants {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.to_nested();
    let mut diagonal = Vec::with_capacity(rows);
    let mut t = 0;

    while t < rows.min(cols) {
        let Some((pi, pj)) = min_abs_position(&a, t) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);

        loop {
            let mut clean = true;

            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                for j in t..cols {
                    let delta = &q * &a[t][j];
                    a[i][j] -= delta;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                for i in t..rows {
                    let delta = &q * &a[i][t];
                    a[i][j] -= delta;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }

            if !clean {
                // a remainder smaller than the pivot survived; make it the pivot
                let mut best = (t, t);
                for i in t..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t..cols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                a.swap(t, best.0);
                swap_cols(&mut a, t, best.1);
                continue;
            }

            let pivot = a[t][t].clone();
            let violator = (t + 1..rows)
                .find(|&i| a[i][t + 1..cols].iter().any(|v| !v.is_multiple_of(&pivot)));
            match violator {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }

        diagonal.push(a[t][t].abs());
        t += 1;
    }

    diagonal.resize(rows, BigInt::zero());
    SnfInvariants { diagonal }
}

/// Number of `x in (Z/nZ)^cols` with `Mx = 0`.
pub fn kernel_count_mod_n(m: &IntMatrix, n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::BadModulus(n));
    }
    let snf = snf_invariants(m);
    let modulus = BigInt::from(n);
    let square = m.rows().min(m.cols());
    let mut count = BigUint::from(n).pow((m.cols() - square) as u32);
    for d in snf.diagonal.iter().take(square) {
        let g = d.gcd(&modulus);
        count *= g.magnitude();
    }
    Ok(count)
}

/// Rank of the (free) kernel of `M` over the integers.
pub fn kernel_rank_over_z(m: &IntMatrix) -> usize {
    m.cols() - snf_invariants(m).rank()
}

/// Exhaustive count of solutions to `Mx = 0 (mod n)`; refuses when
/// `n^cols > bound`.
pub fn brute_force_kernel_count(m: &IntMatrix, n: u64, bound: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::BadModulus(n));
    }
    let too_large = Error::SearchSpaceTooLarge {
        modulus: n,
        cols: m.cols(),
        bound,
    };
    let space = (n as u128)
        .checked_pow(m.cols() as u32)
        .ok_or(too_large.clone())?;
    if space > bound as u128 {
        return Err(too_large);
    }

    let modulus = BigInt::from(n);
    let reduced: Vec<Vec<u64>> = (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|v| v.mod_floor(&modulus).to_u64().expect("reduced entry"))
                .collect()
        })
        .collect();

    let mut x = vec![0u64; m.cols()];
    let mut count = 0u64;
    loop {
        let in_kernel = reduced.iter().all(|row| {
            row.iter()
                .zip(&x)
                .fold(0u64, |acc, (a, b)| (acc + a * b) % n)
                == 0
        });
        if in_kernel {
            count += 1;
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == x.len() {
                return Ok(count);
            }
            x[k] += 1;
            if x[k] < n {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

pub(crate) fn biguint_to_u64(v: &BigUint) -> Result<u64> {
    v.to_u64().ok_or(Error::WeightOverflow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn diag(m: &IntMatrix) -> Vec<i64> {
        snf_invariants(m)
            .diagonal
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn snf_of_diag_2_3() {
        let m = IntMatrix::from_rows(&[[2, 0], [0, 3]]).unwrap();
        assert_eq!(diag(&m), vec![1, 6]);
    }

    #[test]
    fn snf_of_identity() {
        let m = IntMatrix::from_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(diag(&m), vec![1, 1, 1]);
    }

    #[test]
    fn snf_trefoil_bead_matrix() {
        let m = IntMatrix::from_rows(&[[5, 2, 5], [5, 5, 2], [2, 5, 5]]).unwrap();
        let d = diag(&m);
        assert_eq!(d.iter().product::<i64>(), 108);
        let reduced: i64 = d.iter().map(|&x| x.gcd(&6)).product();
        assert_eq!(reduced, 18);
        assert_eq!(kernel_count_mod_n(&m, 6).unwrap(), BigUint::from(18u32));
        assert_eq!(
            brute_force_kernel_count(&m, 6, DEFAULT_BRUTE_FORCE_BOUND).unwrap(),
            18
        );
    }

    #[test]
    fn figure_eight_bead_matrix_mod_5() {
        let m = IntMatrix::from_rows(&[[4, 3, 4, 0], [1, 3, 0, 4], [2, 0, 1, 4], [0, 1, 4, 4]])
            .unwrap();
        assert_eq!(kernel_count_mod_n(&m, 5).unwrap(), BigUint::from(25u32));
    }

    #[test]
    fn empty_matrices() {
        let m = IntMatrix::zeros(0, 1);
        assert_eq!(kernel_count_mod_n(&m, 6).unwrap(), BigUint::from(6u32));
        assert_eq!(brute_force_kernel_count(&m, 6, 100).unwrap(), 6);
        assert_eq!(kernel_rank_over_z(&m), 1);
        assert!(snf_invariants(&m).diagonal.is_empty());

        let m = IntMatrix::zeros(2, 0);
        assert_eq!(diag(&m), vec![0, 0]);
        assert_eq!(kernel_count_mod_n(&m, 5).unwrap(), BigUint::one());
    }

    #[test]
    fn tall_matrix_padding() {
        let m = IntMatrix::from_rows(&[[2], [4], [0]]).unwrap();
        assert_eq!(diag(&m), vec![2, 0, 0]);
        assert_eq!(kernel_count_mod_n(&m, 4).unwrap(), BigUint::from(2u32));
        assert_eq!(brute_force_kernel_count(&m, 4, 100).unwrap(), 2);
    }

    #[test]
    fn single_entry_mod_4() {
        let m = IntMatrix::from_rows(&[[2]]).unwrap();
        assert_eq!(brute_force_kernel_count(&m, 4, 100).unwrap(), 2);
        assert_eq!(kernel_count_mod_n(&m, 4).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn rank_over_z() {
        assert_eq!(kernel_rank_over_z(&IntMatrix::zeros(2, 2)), 2);
        let id = IntMatrix::from_rows(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(kernel_rank_over_z(&id), 0);
    }

    #[test]
    fn bad_modulus_and_bound() {
        let m = IntMatrix::from_rows(&[[1]]).unwrap();
        assert_eq!(kernel_count_mod_n(&m, 1), Err(Error::BadModulus(1)));
        assert!(matches!(
            brute_force_kernel_count(&IntMatrix::zeros(1, 30), 8, DEFAULT_BRUTE_FORCE_BOUND),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
        assert!(Ring::modulo(1).is_err());
        assert!(IntMatrix::from_i64(2, 2, &[1, 2, 3]).is_err());
    }

    #[test]
    fn ring_units() {
        let r = Ring::modulo(6).unwrap();
        assert!(r.is_unit(5));
        assert!(!r.is_unit(3));
        assert_eq!(r.reduce(-1), 5);
        assert!(Ring::Integers.is_unit(-1));
        assert!(!Ring::Integers.is_unit(2));
    }
}
