use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::Monomial;
use crate::{Error, Result};

/// Order used to break ties between monomials of equal weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TieBreak {
    Lex,
    GrevLex,
}

/// A monomial order on `k[x0, ..., xn]` with `x0 > x1 > ... > xn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Compare `w . a` first, then fall back on `tiebreak`.
    Weight { weights: Vec<u64>, tiebreak: TieBreak },
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    // Smaller exponent at the last differing variable wins.
    for (x, y) in a.exps().iter().zip(b.exps()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn weight(weights: Vec<u64>) -> Self {
        MonomialOrder::Weight {
            weights,
            tiebreak: TieBreak::GrevLex,
        }
    }

    /// Compares two monomials with the same number of variables.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a.exps(), b.exps()),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Weight { weights, tiebreak } => {
                match a.weight(weights).cmp(&b.weight(weights)) {
                    Ordering::Equal => match tiebreak {
                        TieBreak::Lex => lex(a.exps(), b.exps()),
                        TieBreak::GrevLex => grevlex(a, b),
                    },
                    o => o,
                }
            }
        }
    }

    /// Sorts monomials into descending order.
    pub fn sort_desc(&self, monomials: &mut [Monomial]) {
        monomials.sort_by(|a, b| self.compare(b, a));
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Weight { weights, tiebreak } => {
                let w: Vec<String> = weights.iter().map(|x| x.to_string()).collect();
                write!(f, "weight:{}", w.join(","))?;
                if *tiebreak == TieBreak::Lex {
                    write!(f, ":lex")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    /// Accepts `lex`, `grevlex`, `weight:w0,..,wn` and `weight:w0,..,wn:lex`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        match s {
            "lex" => return Ok(MonomialOrder::Lex),
            "grevlex" | "revlex" | "degrevlex" => return Ok(MonomialOrder::GrevLex),
            _ => {}
        }
        let Some(rest) = s.strip_prefix("weight:") else {
            return Err(format!("unknown monomial order `{s}`"));
        };
        let (ws, tiebreak) = match rest.split_once(':') {
            None => (rest, TieBreak::GrevLex),
            Some((ws, "lex")) => (ws, TieBreak::Lex),
            Some((ws, "grevlex")) => (ws, TieBreak::GrevLex),
            Some((_, t)) => return Err(format!("unknown tiebreak `{t}`")),
        };
        let weights = ws
            .split(',')
            .map(|w| w.trim().parse::<u64>().map_err(|e| format!("bad weight `{w}`: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(MonomialOrder::Weight { weights, tiebreak })
    }
}

/// The polynomial ring `Q[x0, ..., xn]` together with a monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    n: usize,
    order: MonomialOrder,
}

impl RingContext {
    pub fn new(n: usize, order: MonomialOrder) -> Result<Self> {
        if n < 1 {
            return Err(Error::AmbientTooSmall);
        }
        if let MonomialOrder::Weight { weights, .. } = &order {
            if weights.len() != n + 1 {
                return Err(Error::DimensionMismatch {
                    expected: n + 1,
                    found: weights.len(),
                });
            }
        }
        Ok(Self { n, order })
    }

    pub fn grevlex(n: usize) -> Self {
        Self::new(n, MonomialOrder::GrevLex).expect("n >= 1")
    }

    pub fn lex(n: usize) -> Self {
        Self::new(n, MonomialOrder::Lex).expect("n >= 1")
    }

    /// The projective dimension `n`; the ring has `n + 1` variables.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        Self::new(self.n, order)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    /// Degree-`m` monomials in descending order.
    pub fn monomials_desc(&self, m: u32) -> Vec<Monomial> {
        let mut v = super::monomials_of_degree(self.nvars(), m);
        self.order.sort_desc(&mut v);
        v
    }

    pub(crate) fn check(&self, mono: &Monomial) -> Result<()> {
        if mono.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: mono.nvars(),
            });
        }
        Ok(())
    }
}

pub fn cmp_monomials(ctx: &RingContext, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    ctx.check(a)?;
    ctx.check(b)?;
    Ok(ctx.cmp(a, b))
}
