use std::fmt;

use crate::poly::{monomials_of_degree, Monomial, Polynomial, RingContext};

use super::Ideal;

/// A monomial ideal stored by its minimal generators.
///
/// Generators are pairwise non-dividing and kept in descending lexicographic
/// order, so structural equality is ideal equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        Self {
            nvars,
            gens: minimalize(gens),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            gens: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        Self {
            nvars,
            gens: vec![Monomial::one(nvars)],
        }
    }

    /// The ideal `(x0, ..., xn)^k`.
    pub fn irrelevant_power(nvars: usize, k: u32) -> Self {
        Self::new(nvars, monomials_of_degree(nvars, k))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal generators in descending order under `ctx`.
    pub fn generators_desc(&self, ctx: &RingContext) -> Vec<Monomial> {
        let mut g = self.gens.clone();
        ctx.order().sort_desc(&mut g);
        g
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn max_generator_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    /// Monomials of degree `m` lying in the ideal, in descending order.
    pub fn degree_part(&self, ctx: &RingContext, m: u32) -> Vec<Monomial> {
        ctx.monomials_desc(m)
            .into_iter()
            .filter(|u| self.contains(u))
            .collect()
    }

    /// `(M : x_i)`.
    pub fn colon_by_variable(&self, i: usize) -> MonomialIdeal {
        MonomialIdeal::new(
            self.nvars,
            self.gens.iter().map(|g| g.div_var(i).unwrap_or_else(|| g.clone())),
        )
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.nvars, lcms)
    }

    /// `(M : (x0, ..., xn))`, the intersection of the colons by each variable.
    pub fn colon_by_irrelevant(&self) -> MonomialIdeal {
        (1..self.nvars).fold(self.colon_by_variable(0), |acc, i| {
            acc.intersect(&self.colon_by_variable(i))
        })
    }

    /// `(M : (x0, ..., xn)^inf)`, iterating the irrelevant colon to a fixed point.
    pub fn saturate(&self) -> MonomialIdeal {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_by_irrelevant();
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_saturated(&self) -> bool {
        self.colon_by_irrelevant() == *self
    }

    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(
            self.nvars,
            self.gens.iter().cloned().map(Polynomial::from_monomial).collect(),
        )
    }

    /// Generators rendered in descending order under `ctx`.
    /// Minimal generators by increasing degree, descending under `ctx` within
    /// a degree.
    pub fn generator_strings(&self, ctx: &RingContext) -> Vec<String> {
        let mut g = self.generators_desc(ctx);
        g.sort_by_key(Monomial::degree);
        g.iter().map(|m| m.to_string()).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(M : x_i)` with minimal generators recomputed.
pub fn colon_by_variable(m: &MonomialIdeal, i: usize) -> MonomialIdeal {
    m.colon_by_variable(i)
}

/// `(M : (x0, ..., xn)^inf)`.
pub fn saturate(m: &MonomialIdeal) -> MonomialIdeal {
    m.saturate()
}
