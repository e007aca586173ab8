//! Seeded random ideals: generic forms, twisted-cubic nets and point sets.
//!
//! Every member of a family draws from its own ChaCha8 stream, selected by
//! `(family seed, member index)`, so members are reproducible individually
//! and independent of evaluation order.

use ginlab_core::grassmann::SubspaceBasis;
use ginlab_core::groebner::Ideal;
use ginlab_core::hilbert::{hilbert_polynomial, HilbertPolynomial};
use ginlab_core::linalg::null_space;
use ginlab_core::poly::{monomials_of_degree, Monomial, Polynomial, RingContext};
use ginlab_core::{BigRational, Result};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The random stream of member `index` of a family seeded by `seed`.
pub fn member_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A seed for downstream randomized routines, read from the member's stream
/// at an offset far beyond anything member generation consumes.
pub fn member_seed(seed: u64, index: u64) -> u64 {
    let mut rng = member_rng(seed, index);
    rng.set_word_pos(1 << 40);
    rng.next_u64()
}

fn nonzero(rng: &mut ChaCha8Rng, bound: u32) -> BigRational {
    let b = bound.max(1) as i64;
    let x = rng.gen_range(1..=b);
    BigRational::from_integer(if rng.gen() { x } else { -x }.into())
}

/// A degree-`d` form in which every monomial has a nonzero coefficient in
/// `[-bound, bound]`.
pub fn random_form(nvars: usize, degree: u32, bound: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    Polynomial::from_terms(
        nvars,
        monomials_of_degree(nvars, degree)
            .into_iter()
            .map(|m| (m, nonzero(rng, bound))),
    )
}

/// Random forms of the given degrees in `k[x0..xn]`.
pub fn random_forms_ideal(n: usize, degrees: &[u32], bound: u32, rng: &mut ChaCha8Rng) -> Ideal {
    Ideal::new(
        n + 1,
        degrees.iter().map(|&d| random_form(n + 1, d, bound, rng)).collect(),
    )
}

/// The 2x2 minors of a random 2x3 matrix of linear forms in `P^3`,
/// resampled until the ideal has the Hilbert polynomial `3m + 1` of a twisted
/// cubic.
pub fn twisted_cubic_net(bound: u32, rng: &mut ChaCha8Rng) -> Result<Ideal> {
    let ctx = RingContext::grevlex(3);
    let target = HilbertPolynomial::parse("3*m + 1").expect("valid");
    loop {
        let a: Vec<Vec<Polynomial>> = (0..2)
            .map(|_| (0..3).map(|_| random_form(4, 1, bound, rng)).collect())
            .collect();
        let minor = |i: usize, j: usize| &(&a[0][i] * &a[1][j]) - &(&a[0][j] * &a[1][i]);
        let ideal = Ideal::new(4, vec![minor(0, 1), minor(0, 2), minor(1, 2)]);
        if hilbert_polynomial(&ctx, &ideal)? == target {
            return Ok(ideal);
        }
    }
}

/// `count` points of `P^n` with nonzero integer coordinates in `[-bound, bound]`.
pub fn random_points(n: usize, count: usize, bound: u32, rng: &mut ChaCha8Rng) -> Vec<Vec<BigRational>> {
    (0..count)
        .map(|_| (0..=n).map(|_| nonzero(rng, bound)).collect())
        .collect()
}

fn evaluate(m: &Monomial, point: &[BigRational]) -> BigRational {
    let mut acc = BigRational::from_integer(1.into());
    for (i, &e) in m.exps().iter().enumerate() {
        for _ in 0..e {
            acc *= &point[i];
        }
    }
    acc
}

/// The degree-`m` forms vanishing at every point, as a canonical subspace.
pub fn vanishing_space(ctx: &RingContext, points: &[Vec<BigRational>], m: u32) -> Result<SubspaceBasis> {
    let columns = ctx.monomials_desc(m);
    let conditions: Vec<Vec<BigRational>> = points
        .iter()
        .map(|p| columns.iter().map(|u| evaluate(u, p)).collect())
        .collect();
    SubspaceBasis::from_rows(ctx, m, &null_space(&conditions, columns.len()))
}

/// The ideal generated by the vanishing forms of degrees `1..=max_degree`.
pub fn points_ideal(ctx: &RingContext, points: &[Vec<BigRational>], max_degree: u32) -> Result<Ideal> {
    let mut gens = Vec::new();
    for d in 1..=max_degree {
        gens.extend(vanishing_space(ctx, points, d)?.row_polynomials());
    }
    Ok(Ideal::new(ctx.nvars(), gens))
}
