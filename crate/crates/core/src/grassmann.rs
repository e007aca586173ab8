//! Hilbert points as exact subspaces of `S_m`, Schubert indices and Plücker
//! coordinates.
//!
//! A [`SubspaceBasis`] stores its rows in reduced row-echelon form over the
//! degree-`m` monomials listed in descending order, so the pivot columns are
//! exactly the initial subspace and name the Schubert cell.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::groebner::{graded_piece_matrix, Ideal};
use crate::linalg::{determinant, rref};
use crate::poly::{Monomial, Polynomial, RingContext};
use crate::{Error, Result};

/// A strictly descending tuple of degree-`m` monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchubertIndex {
    monomials: Vec<Monomial>,
}

impl SchubertIndex {
    /// Checks that the monomials share one degree and strictly descend.
    pub fn new(ctx: &RingContext, monomials: Vec<Monomial>) -> Result<Self> {
        for u in &monomials {
            ctx.check(u)?;
        }
        if monomials.iter().map(Monomial::degree).dedup().count() > 1 {
            return Err(Error::ShapeMismatch("index monomials differ in degree".into()));
        }
        if monomials
            .windows(2)
            .any(|w| ctx.cmp(&w[0], &w[1]) != Ordering::Greater)
        {
            return Err(Error::ShapeMismatch("index monomials are not strictly descending".into()));
        }
        Ok(Self { monomials })
    }

    pub fn empty() -> Self {
        Self { monomials: Vec::new() }
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.monomials.first().map(Monomial::degree)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.monomials.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Serialize for SchubertIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.monomials.iter().map(ToString::to_string))
    }
}

/// A `d`-dimensional subspace of `S_m` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    m: u32,
    columns: Vec<Monomial>,
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    /// Canonicalizes the span of `rows`, given as coordinates on the
    /// descending degree-`m` monomials.
    pub fn from_rows(ctx: &RingContext, m: u32, rows: &[Vec<BigRational>]) -> Result<Self> {
        let columns = ctx.monomials_desc(m);
        if let Some(bad) = rows.iter().find(|r| r.len() != columns.len()) {
            return Err(Error::DimensionMismatch {
                expected: columns.len(),
                found: bad.len(),
            });
        }
        let r = rref(rows, columns.len());
        Ok(Self {
            m,
            columns,
            rows: r.rows,
            pivots: r.pivots,
        })
    }

    /// The span of degree-`m` forms.
    pub fn from_polynomials(ctx: &RingContext, m: u32, polys: &[Polynomial]) -> Result<Self> {
        let columns = ctx.monomials_desc(m);
        let mut rows = Vec::with_capacity(polys.len());
        for f in polys {
            if f.nvars() != ctx.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: ctx.nvars(),
                    found: f.nvars(),
                });
            }
            if !f.is_zero() && (!f.is_homogeneous() || f.degree() != Some(m)) {
                return Err(Error::NotHomogeneous(format!("expected a form of degree {m}")));
            }
            rows.push(columns.iter().map(|u| f.coefficient(u)).collect());
        }
        Self::from_rows(ctx, m, &rows)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Subspace dimension `d`.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `N = dim S_m`.
    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn row_polynomials(&self) -> Vec<Polynomial> {
        let nvars = self.columns.first().map_or(0, Monomial::nvars);
        self.rows
            .iter()
            .map(|r| Polynomial::from_terms(nvars, self.columns.iter().cloned().zip(r.iter().cloned())))
            .collect()
    }

    /// Column positions of the monomials of `idx`.
    pub fn positions(&self, idx: &SchubertIndex) -> Result<Vec<usize>> {
        idx.monomials
            .iter()
            .map(|u| {
                self.columns
                    .iter()
                    .position(|c| c == u)
                    .ok_or_else(|| Error::ShapeMismatch(format!("{u} is not a monomial of degree {}", self.m)))
            })
            .collect()
    }

    /// The index naming the given column positions (which must be increasing).
    pub fn index_at(&self, positions: &[usize]) -> SchubertIndex {
        SchubertIndex {
            monomials: positions.iter().map(|&p| self.columns[p].clone()).collect(),
        }
    }

    /// Determinant of the `d x d` minor on the given columns.
    pub fn minor(&self, positions: &[usize]) -> BigRational {
        let sub: Vec<Vec<BigRational>> = self
            .rows
            .iter()
            .map(|r| positions.iter().map(|&p| r[p].clone()).collect())
            .collect();
        determinant(&sub)
    }
}

/// The `m`-th Hilbert point `[I]_m`.
pub fn hilbert_point(ctx: &RingContext, ideal: &Ideal, m: u32) -> Result<SubspaceBasis> {
    let (columns, r) = graded_piece_matrix(ctx, ideal, m)?;
    Ok(SubspaceBasis {
        m,
        columns,
        rows: r.rows,
        pivots: r.pivots,
    })
}

/// The pivot monomials of the canonical form.
pub fn initial_subspace(f: &SubspaceBasis) -> SchubertIndex {
    f.index_at(&f.pivots)
}

/// The lex-largest index with nonzero Plücker coordinate, found by scanning
/// columns from the top and keeping each one that is independent of the
/// columns kept so far. Lex-greedy selection in a linear matroid yields the
/// lex-maximal basis, and it does not look at the stored pivots.
pub fn schubert_cell_index(f: &SubspaceBasis) -> SchubertIndex {
    let d = f.dim();
    // Echelon basis of the kept column vectors, each with its leading row.
    let mut kept: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut chosen = Vec::with_capacity(d);
    for c in 0..f.ncols() {
        if chosen.len() == d {
            break;
        }
        let mut v: Vec<BigRational> = f.rows.iter().map(|r| r[c].clone()).collect();
        for (lead, b) in &kept {
            if !v[*lead].is_zero() {
                let factor = v[*lead].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &factor * y;
                }
            }
        }
        if let Some(lead) = v.iter().position(|x| !x.is_zero()) {
            let inv = BigRational::one() / &v[lead];
            for x in v.iter_mut() {
                *x *= &inv;
            }
            kept.push((lead, v));
            chosen.push(c);
        }
    }
    f.index_at(&chosen)
}

/// The Schubert cell index straight from the Plücker definition: enumerate
/// indices in descending lex order and return the first with a nonzero
/// coordinate. Costs up to `C(N, d)` determinants.
pub fn schubert_cell_index_exhaustive(f: &SubspaceBasis) -> Option<SchubertIndex> {
    (0..f.ncols())
        .combinations(f.dim())
        .find(|cols| !f.minor(cols).is_zero())
        .map(|cols| f.index_at(&cols))
}

/// The Plücker coordinate `p_idx(F)` of the canonical basis.
pub fn pluecker_coordinate(f: &SubspaceBasis, idx: &SchubertIndex) -> Result<BigRational> {
    if idx.len() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: idx.len(),
        });
    }
    Ok(f.minor(&f.positions(idx)?))
}

/// Outcome of the componentwise comparison `a` versus `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PartialOrderResult {
    Below,
    Above,
    Incomparable,
    Equal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexComparison {
    pub lex: Ordering,
    pub partial: PartialOrderResult,
}

/// Lexicographic and componentwise comparison of two indices of equal size.
pub fn compare_indices(ctx: &RingContext, a: &SchubertIndex, b: &SchubertIndex) -> Result<IndexComparison> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    if a.degree().is_some() && a.degree() != b.degree() {
        return Err(Error::ShapeMismatch("indices of different degrees".into()));
    }
    let cmps: Vec<Ordering> = a
        .monomials
        .iter()
        .zip(&b.monomials)
        .map(|(x, y)| ctx.cmp(x, y))
        .collect();
    let lex = cmps
        .iter()
        .copied()
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal);
    let up = cmps.iter().all(|o| *o != Ordering::Less);
    let down = cmps.iter().all(|o| *o != Ordering::Greater);
    let partial = match (up, down) {
        (true, true) => PartialOrderResult::Equal,
        (true, false) => PartialOrderResult::Above,
        (false, true) => PartialOrderResult::Below,
        (false, false) => PartialOrderResult::Incomparable,
    };
    Ok(IndexComparison { lex, partial })
}

/// `sum over u in idx of omega . exponent(u)`.
pub fn index_weight(idx: &SchubertIndex, omega: &[u64]) -> Result<u64> {
    if let Some(u) = idx.monomials.iter().find(|u| u.nvars() != omega.len()) {
        return Err(Error::DimensionMismatch {
            expected: u.nvars(),
            found: omega.len(),
        });
    }
    Ok(idx.monomials.iter().map(|u| u.weight(omega)).sum())
}

/// The top `d` degree-`m` monomials.
pub fn max_index(ctx: &RingContext, m: u32, d: usize) -> Result<SchubertIndex> {
    let all = ctx.monomials_desc(m);
    if d > all.len() {
        return Err(Error::OutOfRange(format!("d = {d} exceeds dim S_{m} = {}", all.len())));
    }
    Ok(SchubertIndex {
        monomials: all.into_iter().take(d).collect(),
    })
}
