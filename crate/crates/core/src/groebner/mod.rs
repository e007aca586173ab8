//! Division, Buchberger's algorithm, initial ideals and graded pieces.

mod buchberger;
mod monomial_ideal;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::Zero;

use crate::linalg::{rref, Rref};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial, RingContext};
use crate::{Error, Result};

pub use buchberger::{buchberger, reduce, GroebnerBasis};
pub use monomial_ideal::{colon_by_variable, saturate, MonomialIdeal};

/// A polynomial ideal given by generators, with a per-order cache of reduced
/// Gröbner bases.
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
    homogeneous: bool,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Self {
            nvars: self.nvars,
            generators: self.generators.clone(),
            homogeneous: self.homogeneous,
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.generators).finish()
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Self {
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = generators.iter().all(|g| g.is_homogeneous());
        Self {
            nvars,
            generators,
            homogeneous,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Like [`Ideal::new`] but rejects inhomogeneous generators.
    pub fn homogeneous(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(bad.to_string()));
        }
        Ok(Self::new(nvars, generators))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.generators.iter().filter_map(|g| g.degree()).max()
    }

    /// The reduced Gröbner basis for `ctx`'s order, computed at most once per
    /// order. Concurrent first calls may both compute; the results are equal.
    pub fn groebner_basis(&self, ctx: &RingContext) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.lock().expect("cache lock").get(ctx.order()) {
            return gb.clone();
        }
        let gb = Arc::new(buchberger(ctx, &self.generators));
        self.cache
            .lock()
            .expect("cache lock")
            .entry(ctx.order().clone())
            .or_insert(gb)
            .clone()
    }

    fn check(&self, ctx: &RingContext) -> Result<()> {
        if self.nvars != ctx.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ctx.nvars(),
                found: self.nvars,
            });
        }
        Ok(())
    }
}

/// The monomial ideal generated by the leading monomials of the reduced
/// Gröbner basis.
pub fn initial_ideal(ctx: &RingContext, ideal: &Ideal) -> Result<MonomialIdeal> {
    ideal.check(ctx)?;
    let gb = ideal.groebner_basis(ctx);
    Ok(MonomialIdeal::new(ctx.nvars(), gb.leading_monomials().iter().cloned()))
}

/// The degree-`m` part `I_m` as a canonical matrix: columns are the degree-`m`
/// monomials in descending order and the rows are the RREF of all products
/// `u * g` of generators with monomials.
pub fn graded_piece_matrix(ctx: &RingContext, ideal: &Ideal, m: u32) -> Result<(Vec<Monomial>, Rref)> {
    ideal.check(ctx)?;
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous("ideal".into()));
    }
    let columns = ctx.monomials_desc(m);
    let position: HashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let e = g.degree().expect("nonzero generator");
        if e > m {
            continue;
        }
        for u in monomials_of_degree(ctx.nvars(), m - e) {
            let mut row = vec![BigRational::zero(); columns.len()];
            for (mono, c) in g.terms() {
                row[position[&mono.mul(&u)]] = c.clone();
            }
            rows.push(row);
        }
    }
    let r = rref(&rows, columns.len());
    Ok((columns, r))
}

/// A basis of `I_m`, one polynomial per RREF row.
pub fn graded_piece(ctx: &RingContext, ideal: &Ideal, m: u32) -> Result<Vec<Polynomial>> {
    let (columns, r) = graded_piece_matrix(ctx, ideal, m)?;
    Ok(r.rows
        .iter()
        .map(|row| {
            Polynomial::from_terms(
                ctx.nvars(),
                columns.iter().cloned().zip(row.iter().cloned()),
            )
        })
        .collect())
}

/// `dim_k I_m`.
pub fn graded_dimension(ctx: &RingContext, ideal: &Ideal, m: u32) -> Result<usize> {
    Ok(graded_piece_matrix(ctx, ideal, m)?.1.rank())
}
