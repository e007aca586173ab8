use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Polynomial, RingContext};
use crate::linalg::{determinant, mat_mul};
use crate::{Error, Result};

/// Shape tag of a coordinate change.
///
/// Triangularity refers to the variable index order `x0 > x1 > ... > xn`.
/// `UpperTriangular` (`g[i][j] = 0` for `j < i`) is the Borel subgroup `B`:
/// each `x_i` maps to a multiple of itself plus smaller variables, so the
/// leading monomial of any polynomial is preserved. `LowerTriangular` is the
/// opposite Borel subgroup. `Unipotent` is upper triangular with unit diagonal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChangeKind {
    General,
    UpperTriangular,
    LowerTriangular,
    Unipotent,
    Diagonal,
}

impl fmt::Display for ChangeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ChangeKind::General => "general",
            ChangeKind::UpperTriangular => "upper-triangular",
            ChangeKind::LowerTriangular => "lower-triangular",
            ChangeKind::Unipotent => "unipotent",
            ChangeKind::Diagonal => "diagonal",
        };
        f.write_str(s)
    }
}

/// An invertible substitution `x_i -> sum_j g[i][j] x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    matrix: Vec<Vec<BigRational>>,
    kind: ChangeKind,
}

impl LinearChange {
    pub fn new(matrix: Vec<Vec<BigRational>>, kind: ChangeKind) -> Result<Self> {
        let size = matrix.len();
        if let Some(row) = matrix.iter().find(|r| r.len() != size) {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: row.len(),
            });
        }
        let shape_ok = (0..size).all(|i| {
            (0..size).all(|j| {
                let z = matrix[i][j].is_zero();
                match kind {
                    ChangeKind::General => true,
                    ChangeKind::UpperTriangular => j >= i || z,
                    ChangeKind::LowerTriangular => j <= i || z,
                    ChangeKind::Unipotent => {
                        if i == j {
                            matrix[i][j].is_one()
                        } else {
                            j > i || z
                        }
                    }
                    ChangeKind::Diagonal => i == j || z,
                }
            })
        });
        if !shape_ok {
            return Err(Error::ShapeMismatch(kind.to_string()));
        }
        if determinant(&matrix).is_zero() {
            return Err(Error::Singular);
        }
        Ok(Self { matrix, kind })
    }

    pub fn identity(nvars: usize) -> Self {
        let matrix = (0..nvars)
            .map(|i| {
                (0..nvars)
                    .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        Self {
            matrix,
            kind: ChangeKind::Diagonal,
        }
    }

    /// Builds a change from integer entries.
    pub fn from_integers(rows: &[Vec<i64>], kind: ChangeKind) -> Result<Self> {
        let matrix = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        Self::new(matrix, kind)
    }

    pub fn matrix(&self) -> &[Vec<BigRational>] {
        &self.matrix
    }

    pub fn kind(&self) -> ChangeKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.matrix.len()
    }

    pub fn determinant(&self) -> BigRational {
        determinant(&self.matrix)
    }

    /// The change `g o h` with `apply(g o h, f) = apply(g, apply(h, f))`.
    ///
    /// Substitution composes contravariantly: the matrix is `H * G`.
    pub fn compose(g: &LinearChange, h: &LinearChange) -> LinearChange {
        LinearChange {
            matrix: mat_mul(&h.matrix, &g.matrix),
            kind: ChangeKind::General,
        }
    }

    /// Image of the variable `x_i`.
    pub fn image_of_var(&self, i: usize) -> Polynomial {
        let nvars = self.nvars();
        Polynomial::from_terms(
            nvars,
            self.matrix[i]
                .iter()
                .enumerate()
                .map(|(j, c)| (super::Monomial::var(nvars, j), c.clone())),
        )
    }

    /// Substitutes `x_i -> g.x_i` in `f` and expands.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let nvars = self.nvars();
        let maxdeg = f
            .monomials()
            .flat_map(|m| m.exps().iter().copied())
            .max()
            .unwrap_or(0) as usize;
        // powers[i][e] = (g.x_i)^e
        let powers: Vec<Vec<Polynomial>> = (0..nvars)
            .map(|i| {
                let lin = self.image_of_var(i);
                let mut v = vec![Polynomial::constant(nvars, BigRational::one())];
                for e in 1..=maxdeg {
                    let next = &v[e - 1] * &lin;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Polynomial::zero(nvars);
        for (m, c) in f.terms() {
            let mut prod = Polynomial::constant(nvars, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    prod = &prod * &powers[i][e as usize];
                }
            }
            out = &out + &prod;
        }
        out
    }
}

/// Applies `g` to `f` after checking dimensions against `ctx`.
pub fn apply_change(ctx: &RingContext, g: &LinearChange, f: &Polynomial) -> Result<Polynomial> {
    for found in [g.nvars(), f.nvars()] {
        if found != ctx.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ctx.nvars(),
                found,
            });
        }
    }
    Ok(g.apply(f))
}
