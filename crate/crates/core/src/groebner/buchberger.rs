use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{Monomial, Polynomial, RingContext};

type Term = (Monomial, BigRational);

/// Terms in strictly descending order under the ring's monomial order.
type Sorted = Vec<Term>;

fn to_sorted(ctx: &RingContext, f: &Polynomial) -> Sorted {
    f.terms_desc(ctx)
}

fn from_sorted(nvars: usize, f: Sorted) -> Polynomial {
    Polynomial::from_terms(nvars, f)
}

fn make_monic(f: &mut Sorted) {
    let Some(lc) = f.first().map(|t| t.1.clone()) else {
        return;
    };
    if lc.is_one() {
        return;
    }
    let inv = lc.recip();
    for t in f.iter_mut() {
        t.1 = &t.1 * &inv;
    }
}

/// `p - c * t * g` by merging; both inputs are sorted.
fn sub_mul(ctx: &RingContext, p: &[Term], c: &BigRational, t: &Monomial, g: &[Term]) -> Sorted {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut shifted: Option<Monomial> = g.first().map(|x| x.0.mul(t));
    while i < p.len() || j < g.len() {
        let ord = match (p.get(i), &shifted) {
            (Some(a), Some(b)) => ctx.cmp(&a.0, b),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => unreachable!(),
        };
        match ord {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let m = shifted.take().expect("g term");
                out.push((m, -(c * &g[j].1)));
                j += 1;
                shifted = g.get(j).map(|x| x.0.mul(t));
            }
            Ordering::Equal => {
                let v = &p[i].1 - c * &g[j].1;
                if !v.is_zero() {
                    out.push((p[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                shifted = g.get(j).map(|x| x.0.mul(t));
            }
        }
    }
    out
}

/// Full reduction of `f` by monic sorted divisors.
fn normal_form(ctx: &RingContext, f: Sorted, divisors: &[Sorted]) -> Sorted {
    let mut rem = Vec::new();
    let mut p = f;
    // p is consumed from the front; `start` avoids shifting the vector.
    let mut start = 0;
    while start < p.len() {
        let (lm, lc) = &p[start];
        match divisors.iter().find(|g| g[0].0.divides(lm)) {
            Some(g) => {
                let t = lm.div(&g[0].0).expect("divides");
                let c = lc.clone();
                p = sub_mul(ctx, &p[start..], &c, &t, g);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

/// A reduced Gröbner basis: monic, sorted by descending leading monomial, no
/// leading monomial divides any term of another element.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ctx: RingContext,
    polys: Vec<Polynomial>,
    sorted: Vec<Sorted>,
}

impl GroebnerBasis {
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|g| g[0].0.clone()).collect()
    }

    /// Normal form of `f` with respect to the basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        from_sorted(self.ctx.nvars(), normal_form(&self.ctx, to_sorted(&self.ctx, f), &self.sorted))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Non-leading exponents of each basis element, paired with the leading one.
    pub fn exponent_differences(&self) -> Vec<(Monomial, Vec<Monomial>)> {
        self.sorted
            .iter()
            .map(|g| (g[0].0.clone(), g[1..].iter().map(|t| t.0.clone()).collect()))
            .collect()
    }
}

/// Normal form of `f` modulo `basis` (elements need not be monic or a
/// Gröbner basis). No monomial of the result is divisible by a leading
/// monomial of `basis`.
pub fn reduce(ctx: &RingContext, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let divisors: Vec<Sorted> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut s = to_sorted(ctx, g);
            make_monic(&mut s);
            s
        })
        .collect();
    from_sorted(ctx.nvars(), normal_form(ctx, to_sorted(ctx, f), &divisors))
}

fn s_polynomial(ctx: &RingContext, f: &Sorted, g: &Sorted) -> Sorted {
    let lcm = f[0].0.lcm(&g[0].0);
    let tf = lcm.div(&f[0].0).expect("lcm");
    let tg = lcm.div(&g[0].0).expect("lcm");
    let scaled: Sorted = f.iter().map(|(m, c)| (m.mul(&tf), c.clone())).collect();
    sub_mul(ctx, &scaled, &BigRational::one(), &tg, g)
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first) and the coprime and chain criteria. Returns the unique
/// reduced Gröbner basis; the zero ideal gives an empty basis.
pub fn buchberger(ctx: &RingContext, generators: &[Polynomial]) -> GroebnerBasis {
    let mut basis: Vec<Sorted> = Vec::new();
    // (lcm degree, j, i) with i < j
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let push = |f: Sorted,
                basis: &mut Vec<Sorted>,
                queue: &mut BTreeSet<(u32, usize, usize)>,
                pending: &mut HashSet<(usize, usize)>| {
        let j = basis.len();
        for (i, g) in basis.iter().enumerate() {
            queue.insert((g[0].0.lcm(&f[0].0).degree(), j, i));
            pending.insert((i, j));
        }
        basis.push(f);
    };

    for g in generators.iter().filter(|g| !g.is_zero()) {
        let mut s = to_sorted(ctx, g);
        make_monic(&mut s);
        push(s, &mut basis, &mut queue, &mut pending);
    }

    while let Some((_, j, i)) = queue.pop_first() {
        pending.remove(&(i, j));
        let (lmi, lmj) = (&basis[i][0].0, &basis[j][0].0);
        if lmi.is_coprime(lmj) {
            continue;
        }
        let lcm = lmi.lcm(lmj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(ctx, &basis[i], &basis[j]);
        let mut h = normal_form(ctx, s, &basis);
        if !h.is_empty() {
            make_monic(&mut h);
            push(h, &mut basis, &mut queue, &mut pending);
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by another's.
    let mut keep: Vec<Sorted> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx && h[0].0.divides(&g[0].0) && (h[0].0 != g[0].0 || k < idx)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // Interreduce tails.
    let mut reduced = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<Sorted> = keep
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, g)| g.clone())
            .collect();
        let mut g = normal_form(ctx, keep[idx].clone(), &others);
        make_monic(&mut g);
        reduced.push(g);
    }
    reduced.sort_by(|a, b| ctx.cmp(&b[0].0, &a[0].0));
    let polys = reduced.iter().map(|g| from_sorted(ctx.nvars(), g.clone())).collect();
    GroebnerBasis {
        ctx: ctx.clone(),
        polys,
        sorted: reduced,
    }
}
