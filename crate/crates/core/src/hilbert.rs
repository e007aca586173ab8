//! Hilbert functions and polynomials, Gotzmann expansions, lex segment ideals
//! and reverse-lexicographic segment checks.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::groebner::{initial_ideal, Ideal, MonomialIdeal};
use crate::poly::{monomials_of_degree, parse_expr, Expr, Monomial, RingContext};
use crate::{Error, ParseError, Result};

/// A polynomial in one variable `m` with rational coefficients in the power
/// basis: `coeffs[k]` multiplies `m^k`. Trailing zeros are trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HilbertPolynomial {
    coeffs: Vec<BigRational>,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl HilbertPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![q(c)])
    }

    /// The polynomial `m`.
    pub fn m() -> Self {
        Self::new(vec![q(0), q(1)])
    }

    /// `C(m + shift, k)` as a polynomial in `m`.
    pub fn binomial(shift: i64, k: u32) -> Self {
        Self::binomial_of(&(&Self::m() + &Self::constant(shift)), k)
    }

    /// `C(p, k) = p (p - 1) ... (p - k + 1) / k!`.
    pub fn binomial_of(p: &HilbertPolynomial, k: u32) -> Self {
        let mut acc = Self::constant(1);
        let mut fact = BigInt::one();
        for j in 0..k {
            acc = &acc * &(p - &Self::constant(j as i64));
            fact *= BigInt::from(j + 1);
        }
        acc.scale(&BigRational::new(BigInt::one(), fact))
    }

    /// Hilbert polynomial `C(n+m, n) - C(n+m-d, n)` of a degree-`d` hypersurface in `P^n`.
    pub fn hypersurface(n: usize, d: u32) -> Self {
        &Self::binomial(n as i64, n as u32) - &Self::binomial(n as i64 - d as i64, n as u32)
    }

    /// `C(n+m, n)`, the Hilbert polynomial of the whole ring.
    pub fn ambient(n: usize) -> Self {
        Self::binomial(n as i64, n as u32)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, m: i64) -> BigRational {
        let x = q(m);
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// Value at `m` as an integer, if it is one.
    pub fn eval_integer(&self, m: i64) -> Option<BigInt> {
        let v = self.eval(m);
        v.is_integer().then(|| v.to_integer())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Interpolates through `values[j] = P(start + j)` using forward
    /// differences.
    pub fn interpolate(start: i64, values: &[BigRational]) -> Self {
        let mut diffs = values.to_vec();
        let mut out = Self::zero();
        for j in 0..values.len() {
            let term = Self::binomial(-start, j as u32).scale(&diffs[0]);
            out = &out + &term;
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        out
    }

    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        from_expr(&parse_expr(text)?)
    }
}

fn from_expr(e: &Expr) -> std::result::Result<HilbertPolynomial, ParseError> {
    Ok(match e {
        Expr::Num(c) => HilbertPolynomial::new(vec![c.clone()]),
        Expr::Ident(name, at) => {
            if name == "m" {
                HilbertPolynomial::m()
            } else {
                return Err(ParseError::new(*at, format!("unknown identifier `{name}`, expected `m`")));
            }
        }
        Expr::Call(name, args, at) => {
            if !(name == "C" || name == "binomial") || args.len() != 2 {
                return Err(ParseError::new(*at, format!("expected C(expr, k), found `{name}`")));
            }
            let top = from_expr(&args[0])?;
            let k = from_expr(&args[1])?;
            let k = match k.degree() {
                None => 0,
                Some(0) if k.coeffs[0].is_integer() && !k.coeffs[0].is_negative() => {
                    k.coeffs[0].to_integer().to_u32().ok_or_else(|| ParseError::new(*at, "k too large"))?
                }
                _ => return Err(ParseError::new(*at, "second argument of C must be a nonnegative integer")),
            };
            HilbertPolynomial::binomial_of(&top, k)
        }
        Expr::Neg(a) => &HilbertPolynomial::zero() - &from_expr(a)?,
        Expr::Add(a, b) => &from_expr(a)? + &from_expr(b)?,
        Expr::Sub(a, b) => &from_expr(a)? - &from_expr(b)?,
        Expr::Mul(a, b) => &from_expr(a)? * &from_expr(b)?,
        Expr::Pow(a, k) => {
            let base = from_expr(a)?;
            (0..*k).fold(HilbertPolynomial::constant(1), |acc, _| &acc * &base)
        }
    })
}

impl std::ops::Add for &HilbertPolynomial {
    type Output = HilbertPolynomial;
    fn add(self, rhs: &HilbertPolynomial) -> HilbertPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        HilbertPolynomial::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
                        + rhs.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
                })
                .collect(),
        )
    }
}

impl std::ops::Sub for &HilbertPolynomial {
    type Output = HilbertPolynomial;
    fn sub(self, rhs: &HilbertPolynomial) -> HilbertPolynomial {
        self + &rhs.scale(&q(-1))
    }
}

impl std::ops::Mul for &HilbertPolynomial {
    type Output = HilbertPolynomial;
    fn mul(self, rhs: &HilbertPolynomial) -> HilbertPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return HilbertPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        HilbertPolynomial::new(out)
    }
}

impl fmt::Display for HilbertPolynomial {
    /// Power basis, highest degree first, e.g. `2*m + 1` or `1/2*m^2 + 3/2*m + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "m".to_string(),
                _ => format!("m^{k}"),
            };
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "{var}")?,
                _ => write!(f, "{a}*{var}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The Gotzmann expansion `P(m) = sum_i C(m + a_i - i + 1, a_i)` with
/// `a_1 >= a_2 >= ... >= a_s >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayRep {
    pub a: Vec<u32>,
}

impl MacaulayRep {
    /// The number of terms `s`, which is the Gotzmann number.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn to_polynomial(&self) -> HilbertPolynomial {
        self.a
            .iter()
            .enumerate()
            .fold(HilbertPolynomial::zero(), |acc, (i, &a)| {
                &acc + &HilbertPolynomial::binomial(a as i64 - i as i64, a)
            })
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .a
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let shift = a as i64 - i as i64;
                match shift.signum() {
                    0 => format!("C(m,{a})"),
                    1 => format!("C(m+{shift},{a})"),
                    _ => format!("C(m{shift},{a})"),
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Upper bound on the number of binomial terms peeled before giving up.
const MAX_EXPANSION: usize = 1_000_000;

/// Greedy symbolic Gotzmann expansion: repeatedly subtract the binomial
/// `C(m + a - i + 1, a)` whose degree `a` matches the remainder.
pub fn macaulay_expansion(p: &HilbertPolynomial) -> Result<MacaulayRep> {
    let mut rem = p.clone();
    let mut a = Vec::new();
    while let Some(deg) = rem.degree() {
        if !rem.leading_coefficient().is_positive() || a.len() >= MAX_EXPANSION {
            return Err(Error::NotAdmissible(p.to_string()));
        }
        let i = a.len() as i64 + 1;
        rem = &rem - &HilbertPolynomial::binomial(deg as i64 - i + 1, deg as u32);
        a.push(deg as u32);
    }
    Ok(MacaulayRep { a })
}

pub fn gotzmann_number(p: &HilbertPolynomial) -> Result<usize> {
    Ok(macaulay_expansion(p)?.len())
}

pub fn is_admissible(p: &HilbertPolynomial) -> bool {
    macaulay_expansion(p).is_ok()
}

/// `dim_k (S/M)_m`: degree-`m` monomials outside `M`.
pub fn hilbert_function(m_ideal: &MonomialIdeal, m: u32) -> u64 {
    if m_ideal.is_zero() {
        return monomial_count(m_ideal.nvars(), m);
    }
    monomials_of_degree(m_ideal.nvars(), m)
        .iter()
        .filter(|u| !m_ideal.contains(u))
        .count() as u64
}

/// `C(nvars - 1 + m, m)`, the number of degree-`m` monomials.
pub fn monomial_count(nvars: usize, m: u32) -> u64 {
    let mut acc: u128 = 1;
    for j in 1..nvars as u128 {
        acc = acc * (m as u128 + j) / j;
    }
    acc as u64
}

/// Hilbert polynomial of `S/M` by interpolating the Hilbert function on a
/// window where it is already polynomial, validated on two extra points.
pub fn hilbert_polynomial_of_monomial(m_ideal: &MonomialIdeal) -> Result<HilbertPolynomial> {
    let nvars = m_ideal.nvars();
    let n = nvars as i64 - 1;
    let max_deg = m_ideal.max_generator_degree().unwrap_or(0) as i64;
    // Degree of the lcm of all generators; past lcm - n the inclusion-exclusion
    // count is polynomial.
    let lcm_deg: i64 = (0..nvars)
        .map(|i| m_ideal.generators().iter().map(|g| g.exp(i)).max().unwrap_or(0) as i64)
        .sum();
    let mut start = (max_deg + n + 1).max(lcm_deg - n).max(0);
    let points = (n + 1) as usize;
    for _ in 0..8 {
        let values: Vec<BigRational> = (0..points + 2)
            .map(|j| q(hilbert_function(m_ideal, (start + j as i64) as u32) as i64))
            .collect();
        let p = HilbertPolynomial::interpolate(start, &values[..points]);
        if (points..points + 2).all(|j| p.eval(start + j as i64) == values[j]) {
            return Ok(p);
        }
        start += n + 3;
    }
    Err(Error::InterpolationUnstable)
}

/// Hilbert polynomial of `S/I`, computed from the initial ideal.
pub fn hilbert_polynomial(ctx: &RingContext, ideal: &Ideal) -> Result<HilbertPolynomial> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous("ideal".into()));
    }
    hilbert_polynomial_of_monomial(&initial_ideal(ctx, ideal)?)
}

/// The saturated lex-segment ideal with Hilbert polynomial `p`, built from the
/// lex-initial segment in degree equal to the Gotzmann number.
pub fn lex_segment_ideal(ctx: &RingContext, p: &HilbertPolynomial) -> Result<MonomialIdeal> {
    let s = gotzmann_number(p)? as u32;
    let nvars = ctx.nvars();
    let too_big = || Error::NotEnoughVariables {
        poly: p.to_string(),
        n: ctx.n(),
    };
    let total = monomial_count(nvars, s);
    let value = p.eval_integer(s as i64).ok_or_else(|| Error::NotAdmissible(p.to_string()))?;
    let count = BigInt::from(total) - value;
    if count.is_negative() {
        return Err(too_big());
    }
    let count = count.to_usize().ok_or_else(too_big)?;
    // monomials_of_degree is already in descending lex order.
    let segment = monomials_of_degree(nvars, s).into_iter().take(count);
    let lex = MonomialIdeal::new(nvars, segment).saturate();
    if hilbert_polynomial_of_monomial(&lex)? != *p {
        return Err(too_big());
    }
    Ok(lex)
}

/// The first `count` degree-`m` monomials of `k[x0..xn]` in descending grevlex.
pub fn revlex_segment(n: usize, m: u32, count: usize) -> Result<Vec<Monomial>> {
    let all = RingContext::grevlex(n).monomials_desc(m);
    if count > all.len() {
        return Err(Error::OutOfRange(format!(
            "segment size {count} exceeds dim S_{m} = {}",
            all.len()
        )));
    }
    Ok(all.into_iter().take(count).collect())
}

/// Outcome of checking the reverse-lexicographic segment lemma on one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RevlexLemmaReport {
    pub n: usize,
    pub m: u32,
    pub count: usize,
    pub l: u32,
    /// `S_l * I_m` is again an initial grevlex segment.
    pub is_segment_after: bool,
    /// `I_m` contains `x_{n-1}^m`.
    pub contains_pivot: bool,
    /// `dim S_m - dim I_m`.
    pub codim_before: u64,
    /// `dim S_{m+l} - dim S_l I_m`.
    pub codim_after: u64,
    pub lemma_consistent: bool,
}

/// `S_l * W` as a set of monomials.
pub fn multiply_segment(n: usize, segment: &[Monomial], l: u32) -> HashSet<Monomial> {
    let shifts = monomials_of_degree(n + 1, l);
    segment
        .iter()
        .flat_map(|u| shifts.iter().map(move |v| u.mul(v)))
        .collect()
}

fn is_initial_segment(n: usize, degree: u32, set: &HashSet<Monomial>) -> bool {
    RingContext::grevlex(n)
        .monomials_desc(degree)
        .iter()
        .take(set.len())
        .all(|u| set.contains(u))
}

/// Checks both parts of the segment lemma for `I_m` = the top `count`
/// grevlex monomials: `S_l I_m` is a segment iff `x_{n-1}^m` is in `I_m`
/// (equivalently `count >= C(n+m-1, m)`), and in that case the codimension
/// is unchanged. The empty segment is excluded from the statement and is
/// reported as consistent.
pub fn revlex_lemma_check(n: usize, m: u32, count: usize, l: u32) -> Result<RevlexLemmaReport> {
    if l == 0 {
        return Err(Error::OutOfRange("l must be at least 1".into()));
    }
    let segment = revlex_segment(n, m, count)?;
    let product = multiply_segment(n, &segment, l);
    let is_segment_after = is_initial_segment(n, m + l, &product);
    let pivot = {
        let mut e = vec![0; n + 1];
        e[n - 1] = m;
        Monomial::new(e)
    };
    let contains_pivot = segment.contains(&pivot);
    let threshold = monomial_count(n, m) as usize;
    let codim_before = monomial_count(n + 1, m) - count as u64;
    let codim_after = monomial_count(n + 1, m + l) - product.len() as u64;
    let lemma_consistent = if count == 0 {
        true
    } else {
        (contains_pivot == (count >= threshold))
            && (is_segment_after == contains_pivot)
            && (!contains_pivot || codim_before == codim_after)
    };
    Ok(RevlexLemmaReport {
        n,
        m,
        count,
        l,
        is_segment_after,
        contains_pivot,
        codim_before,
        codim_after,
        lemma_consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_ideal;

    fn hp(s: &str) -> HilbertPolynomial {
        HilbertPolynomial::parse(s).unwrap()
    }

    fn mono_ideal(text: &str, n: usize) -> MonomialIdeal {
        let (_, gens) = parse_ideal(text, Some(n)).unwrap();
        MonomialIdeal::new(n + 1, gens.iter().map(|g| g.monomials().next().unwrap().clone()))
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(hp("2*m + 1").to_string(), "2*m + 1");
        assert_eq!(hp("C(m+2,2) - C(m,2)"), hp("2*m + 1"));
        assert_eq!(hp("-m").to_string(), "-m");
        assert_eq!(hp("1/2*m^2 + 3/2*m + 1").to_string(), "1/2*m^2 + 3/2*m + 1");
        assert_eq!(hp("0").to_string(), "0");
        assert!(HilbertPolynomial::parse("x + 1").is_err());
        assert!(HilbertPolynomial::parse("C(m, m)").is_err());
    }

    #[test]
    fn hilbert_function_examples() {
        let m = mono_ideal("x1^2", 2);
        for d in 0..8 {
            assert_eq!(hilbert_function(&m, d), 2 * d as u64 + 1);
        }
        for d in 0..6 {
            assert_eq!(hilbert_function(&MonomialIdeal::zero(4), d), monomial_count(4, d));
            assert_eq!(hilbert_function(&MonomialIdeal::unit(4), d), 0);
        }
        assert_eq!(monomial_count(4, 4), 35);
    }

    #[test]
    fn hilbert_polynomials() {
        let ctx = RingContext::grevlex(2);
        let (_, gens) = parse_ideal("x0*x2 - x1^2", Some(2)).unwrap();
        let conic = Ideal::new(3, gens);
        assert_eq!(hilbert_polynomial(&ctx, &conic).unwrap(), hp("2*m+1"));
        let point = mono_ideal("x0; x1", 2);
        assert_eq!(hilbert_polynomial_of_monomial(&point).unwrap(), hp("1"));
        for n in 1..4 {
            for d in 1..5 {
                let ctx = RingContext::grevlex(n);
                let f = crate::poly::Polynomial::from_monomial(ctx.monomials_desc(d).pop().unwrap());
                let i = Ideal::new(n + 1, vec![f]);
                assert_eq!(hilbert_polynomial(&ctx, &i).unwrap(), HilbertPolynomial::hypersurface(n, d));
            }
        }
        assert_eq!(HilbertPolynomial::hypersurface(2, 2), hp("2*m + 1"));
    }

    #[test]
    fn gotzmann_numbers() {
        for n in 1..5 {
            for d in 1..5 {
                assert_eq!(gotzmann_number(&HilbertPolynomial::hypersurface(n, d)).unwrap(), d as usize);
            }
        }
        for c in 0..7 {
            let rep = macaulay_expansion(&HilbertPolynomial::constant(c)).unwrap();
            assert_eq!(rep.a, vec![0; c as usize]);
        }
        assert_eq!(gotzmann_number(&hp("2*m+1")).unwrap(), 2);
        assert_eq!(macaulay_expansion(&hp("3*m+1")).unwrap().a, vec![1, 1, 1, 0]);
        assert_eq!(macaulay_expansion(&hp("3*m+1")).unwrap().to_string(), "C(m+1,1) + C(m,1) + C(m-1,1) + C(m-3,0)");
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&hp("2*m+1")));
        assert!(is_admissible(&hp("3*m+1")));
        assert!(is_admissible(&hp("0")));
        assert!(!is_admissible(&hp("-m")));
        assert!(!is_admissible(&hp("1/2*m")));
        assert!(!is_admissible(&hp("1/2")));
        assert!(!is_admissible(&hp("-3")));
    }

    #[test]
    fn macaulay_round_trip() {
        for s in ["2*m+1", "3*m+1", "4", "m+5", "C(m+3,3)", "1/2*m^2 + 3/2*m + 1", "6*m - 3"] {
            let p = hp(s);
            assert_eq!(macaulay_expansion(&p).unwrap().to_polynomial(), p, "{s}");
        }
    }

    #[test]
    fn lex_segment_examples() {
        let ctx = RingContext::grevlex(2);
        assert_eq!(lex_segment_ideal(&ctx, &hp("2*m+1")).unwrap().to_string(), "(x0^2)");
        assert_eq!(lex_segment_ideal(&ctx, &hp("1")).unwrap().to_string(), "(x0, x1)");
        for n in 1..4 {
            let ctx = RingContext::grevlex(n);
            let plane = HilbertPolynomial::hypersurface(n, 1);
            assert_eq!(lex_segment_ideal(&ctx, &plane).unwrap().to_string(), "(x0)");
        }
        assert!(matches!(
            lex_segment_ideal(&RingContext::grevlex(1), &hp("2*m+1")),
            Err(Error::NotEnoughVariables { .. })
        ));
        assert!(lex_segment_ideal(&ctx, &hp("-m")).is_err());
        assert!(lex_segment_ideal(&ctx, &hp("0")).unwrap().is_unit());
        assert!(lex_segment_ideal(&ctx, &HilbertPolynomial::ambient(2)).unwrap().is_zero());
    }

    #[test]
    fn lex_segment_round_trip_catalog() {
        let mut catalog: Vec<(usize, HilbertPolynomial)> = Vec::new();
        for n in 1..4 {
            for d in 1..5 {
                catalog.push((n, HilbertPolynomial::hypersurface(n, d)));
            }
        }
        for c in 1..7 {
            catalog.push((2, HilbertPolynomial::constant(c)));
        }
        catalog.push((3, hp("3*m+1")));
        for (n, p) in catalog {
            let ctx = RingContext::grevlex(n);
            let lex = lex_segment_ideal(&ctx, &p).unwrap();
            assert_eq!(hilbert_polynomial_of_monomial(&lex).unwrap(), p);
            assert!(lex.is_saturated());
        }
    }

    #[test]
    fn revlex_segments() {
        let s: Vec<String> = revlex_segment(2, 2, 3).unwrap().iter().map(|m| m.to_string()).collect();
        assert_eq!(s, ["x0^2", "x0*x1", "x1^2"]);
        assert!(revlex_segment(2, 2, 0).unwrap().is_empty());
        assert_eq!(revlex_segment(2, 2, 6).unwrap().len(), 6);
        assert!(revlex_segment(2, 2, 7).is_err());
    }

    #[test]
    fn revlex_lemma_examples() {
        let r = revlex_lemma_check(2, 2, 3, 1).unwrap();
        assert!(r.is_segment_after && r.contains_pivot && r.lemma_consistent);
        assert_eq!((r.codim_before, r.codim_after), (3, 3));

        let r = revlex_lemma_check(2, 2, 2, 1).unwrap();
        assert!(!r.is_segment_after && !r.contains_pivot && r.lemma_consistent);

        let r = revlex_lemma_check(2, 2, 6, 1).unwrap();
        assert!(r.is_segment_after && r.lemma_consistent);
        assert!(revlex_lemma_check(2, 2, 2, 0).is_err());
    }

    #[test]
    fn revlex_lemma_exhaustive_small() {
        for n in 1..4 {
            for m in 1..5 {
                for count in 0..=monomial_count(n + 1, m) as usize {
                    for l in 1..3 {
                        let r = revlex_lemma_check(n, m, count, l).unwrap();
                        assert!(r.lemma_consistent, "{r:?}");
                    }
                }
            }
        }
    }

    /// A segment containing `x_{n-1}^m` keeps its codimension in every degree
    /// above, so the ideal it generates has constant Hilbert polynomial.
    #[test]
    fn segments_through_pivot_have_constant_codimension() {
        for n in 1..4 {
            for m in 1..5 {
                let threshold = monomial_count(n, m) as usize;
                for count in threshold..=monomial_count(n + 1, m) as usize {
                    let seg = revlex_segment(n, m, count).unwrap();
                    let codims: Vec<u64> = (0..3)
                        .map(|l| monomial_count(n + 1, m + l) - multiply_segment(n, &seg, l).len() as u64)
                        .collect();
                    assert!(codims.iter().all(|&c| c == codims[0]), "n={n} m={m} count={count}");
                    let ideal = MonomialIdeal::new(n + 1, seg);
                    let p = hilbert_polynomial_of_monomial(&ideal).unwrap();
                    assert!(p.is_constant());
                }
            }
        }
    }
}
