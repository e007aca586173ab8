//! Exact dense linear algebra.
//!
//! Rational input is cleared of denominators row by row and eliminated with
//! fraction-free (Bareiss) steps, so every intermediate entry is an integer
//! minor of the input and coefficient growth stays polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Reduced row-echelon form of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// The nonzero rows; row `i` has a 1 in column `pivots[i]`.
    pub rows: Vec<Vec<BigRational>>,
    /// Pivot columns, strictly increasing.
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Scales each row by the lcm of its denominators and divides out the gcd of
/// the resulting integers. Returns the integer rows and the factor applied to
/// each row (integer row = factor * rational row).
pub fn integer_rows(rows: &[Vec<BigRational>]) -> (Vec<Vec<BigInt>>, Vec<BigRational>) {
    let mut out = Vec::with_capacity(rows.len());
    let mut factors = Vec::with_capacity(rows.len());
    for row in rows {
        let den = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = row.iter().map(|x| x.numer() * (&den / x.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() || g.is_one() {
            factors.push(BigRational::from_integer(den));
            out.push(ints);
        } else {
            factors.push(BigRational::new(den, g.clone()));
            out.push(ints.into_iter().map(|x| x / &g).collect());
        }
    }
    (out, factors)
}

/// Fraction-free Gauss-Jordan elimination on an integer matrix, in place.
/// Returns the pivot columns and the common pivot value. After the call, row
/// `i < rank` has the common pivot value in column `pivots[i]` and zeros in
/// every other pivot column; rows `rank..` are zero.
pub fn bareiss_jordan(a: &mut [Vec<BigInt>], ncols: usize) -> (Vec<usize>, BigInt) {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let piv = a[r][c].clone();
        let (head, rest) = a.split_at_mut(r);
        let (pivot_row, tail) = rest.split_first_mut().expect("row r exists");
        for row in head.iter_mut().chain(tail.iter_mut()) {
            let factor = row[c].clone();
            for j in 0..ncols {
                let v = &piv * &row[j] - &factor * &pivot_row[j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact Bareiss division");
                row[j] = q;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    (pivots, prev)
}

/// Reduced row-echelon form with pivots on the leftmost possible columns.
pub fn rref(rows: &[Vec<BigRational>], ncols: usize) -> Rref {
    let (mut a, _) = integer_rows(rows);
    let (pivots, piv) = bareiss_jordan(&mut a, ncols);
    let rows = a
        .into_iter()
        .take(pivots.len())
        .map(|row| {
            row.into_iter()
                .map(|x| BigRational::new(x, piv.clone()))
                .collect()
        })
        .collect();
    Rref { rows, pivots }
}

pub fn rank(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    let (mut a, _) = integer_rows(rows);
    bareiss_jordan(&mut a, ncols).0.len()
}

/// Bareiss determinant of a square integer matrix.
pub fn determinant_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

pub fn determinant(mat: &[Vec<BigRational>]) -> BigRational {
    let (a, factors) = integer_rows(mat);
    let scale = factors.iter().fold(BigRational::one(), |acc, f| acc * f);
    BigRational::from_integer(determinant_int(a)) / scale
}

/// A basis of `{ v : M v = 0 }`.
pub fn null_space(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let r = rref(rows, ncols);
    let mut is_pivot = vec![None; ncols];
    for (i, &p) in r.pivots.iter().enumerate() {
        is_pivot[p] = Some(i);
    }
    (0..ncols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = vec![BigRational::zero(); ncols];
            v[free] = BigRational::one();
            for (i, &p) in r.pivots.iter().enumerate() {
                v[p] = -r.rows[i][free].clone();
            }
            v
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j])
                })
                .collect()
        })
        .collect()
}
