//! Generic initial ideals, Borel-fixedness, secondary gins, weight vectors
//! realizing a monomial order, and one-parameter-subgroup limit checks.

use std::cmp::Ordering;

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::grassmann::{
    compare_indices, hilbert_point, index_weight, schubert_cell_index, SchubertIndex, SubspaceBasis,
};
use crate::groebner::{initial_ideal, GroebnerBasis, Ideal, MonomialIdeal};
use crate::hilbert::{gotzmann_number, hilbert_polynomial, HilbertPolynomial};
use crate::poly::{ChangeKind, LinearChange, Monomial, RingContext};
use crate::{Error, Result};

/// A random invertible integer matrix with entries uniform in
/// `[-bound, bound]`, drawn from a ChaCha8 stream seeded by `seed`.
/// Singular draws are discarded and the stream continues.
pub fn random_linear_change(seed: u64, bound: u32, nvars: usize) -> Result<LinearChange> {
    if bound < 2 {
        return Err(Error::OutOfRange("coefficient bound must be at least 2".into()));
    }
    let b = bound as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<i64>> = (0..nvars)
            .map(|_| (0..nvars).map(|_| rng.gen_range(-b..=b)).collect())
            .collect();
        match LinearChange::from_integers(&rows, ChangeKind::General) {
            Ok(g) => return Ok(g),
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinOptions {
    pub trials: usize,
    pub seed: u64,
    pub bound: u32,
}

impl Default for GinOptions {
    fn default() -> Self {
        Self {
            trials: 5,
            seed: 0,
            bound: 100,
        }
    }
}

/// One sampled coordinate change and what it produced.
#[derive(Clone, Debug)]
pub struct GinTrial {
    pub seed: u64,
    pub change: LinearChange,
    pub initial_ideal: MonomialIdeal,
    pub index: SchubertIndex,
}

#[derive(Clone, Debug)]
pub struct GinResult {
    /// Saturation of the ideal generated by `index`.
    pub gin: MonomialIdeal,
    pub index: SchubertIndex,
    pub witness: LinearChange,
    pub trials: usize,
    /// Every trial produced the same index.
    pub stable: bool,
    pub certification_degree: u32,
    pub hilbert_polynomial: HilbertPolynomial,
    pub gotzmann: usize,
    /// Position of the winning trial in `records`.
    pub winner: usize,
    pub records: Vec<GinTrial>,
}

/// The degree at which a Schubert index pins down the initial ideal: at
/// least the Gotzmann number and at least every generator degree.
fn certification_degree(gotzmann: usize, ideals: &[&MonomialIdeal]) -> u32 {
    ideals
        .iter()
        .filter_map(|m| m.max_generator_degree())
        .max()
        .unwrap_or(0)
        .max(gotzmann as u32)
}

fn index_of(ctx: &RingContext, m_ideal: &MonomialIdeal, m: u32) -> SchubertIndex {
    SchubertIndex::new(ctx, m_ideal.degree_part(ctx, m)).expect("degree part is descending")
}

fn transform(ctx: &RingContext, ideal: &Ideal, g: &LinearChange) -> Ideal {
    Ideal::new(ctx.nvars(), ideal.generators().iter().map(|f| g.apply(f)).collect())
}

/// `Gin(I)` by sampling `trials` coordinate changes (seeds `seed + t`),
/// keeping the lex-largest Schubert index. Trials run in parallel; ties go to
/// the earliest trial, so the result does not depend on scheduling.
pub fn generic_initial_ideal(ctx: &RingContext, ideal: &Ideal, opts: &GinOptions) -> Result<GinResult> {
    if opts.trials < 2 {
        return Err(Error::OutOfRange("at least two trials are required".into()));
    }
    let hp = hilbert_polynomial(ctx, ideal)?;
    let gotzmann = gotzmann_number(&hp)?;
    let sampled: Vec<(u64, LinearChange, MonomialIdeal)> = (0..opts.trials)
        .into_par_iter()
        .map(|t| {
            let seed = opts.seed.wrapping_add(t as u64);
            let g = random_linear_change(seed, opts.bound, ctx.nvars())?;
            let init = initial_ideal(ctx, &transform(ctx, ideal, &g))?;
            Ok((seed, g, init))
        })
        .collect::<Result<_>>()?;
    let m = certification_degree(gotzmann, &sampled.iter().map(|s| &s.2).collect::<Vec<_>>());
    let records: Vec<GinTrial> = sampled
        .into_iter()
        .map(|(seed, change, init)| GinTrial {
            seed,
            index: index_of(ctx, &init, m),
            change,
            initial_ideal: init,
        })
        .collect();
    let mut winner = 0;
    for (t, r) in records.iter().enumerate().skip(1) {
        if compare_indices(ctx, &r.index, &records[winner].index)?.lex == Ordering::Greater {
            winner = t;
        }
    }
    let best = &records[winner];
    let stable = records.iter().all(|r| r.index == best.index);
    Ok(GinResult {
        gin: MonomialIdeal::new(ctx.nvars(), best.index.monomials().iter().cloned()).saturate(),
        index: best.index.clone(),
        witness: best.change.clone(),
        trials: opts.trials,
        stable,
        certification_degree: m,
        hilbert_polynomial: hp,
        gotzmann,
        winner,
        records,
    })
}

/// Strong stability: for every minimal generator `u`, every `x_j | u` and
/// every variable `x_i` larger than `x_j` under `ctx`, `x_i u / x_j` stays in
/// the ideal. In characteristic zero this is equivalent to being fixed by the
/// Borel subgroup attached to that ordering of the variables.
pub fn is_borel_fixed(ctx: &RingContext, m_ideal: &MonomialIdeal) -> bool {
    let nvars = m_ideal.nvars();
    let vars: Vec<Monomial> = (0..nvars).map(|i| Monomial::var(nvars, i)).collect();
    m_ideal.generators().iter().all(|u| {
        (0..nvars).filter(|&j| u.exp(j) > 0).all(|j| {
            let v = u.div_var(j).expect("x_j divides u");
            (0..nvars)
                .filter(|&i| ctx.cmp(&vars[i], &vars[j]) == Ordering::Greater)
                .all(|i| m_ideal.contains(&v.mul_var(i)))
        })
    })
}

#[derive(Clone, Debug)]
pub struct SecondaryGin {
    pub initial_ideal: MonomialIdeal,
    pub index: SchubertIndex,
    pub degree: u32,
}

/// `in(g.I)` together with its Schubert index at the certification degree.
pub fn secondary_gin(ctx: &RingContext, ideal: &Ideal, g: &LinearChange) -> Result<SecondaryGin> {
    if g.nvars() != ctx.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ctx.nvars(),
            found: g.nvars(),
        });
    }
    let gotzmann = gotzmann_number(&hilbert_polynomial(ctx, ideal)?)?;
    let init = initial_ideal(ctx, &transform(ctx, ideal, g))?;
    let degree = certification_degree(gotzmann, &[&init]);
    Ok(SecondaryGin {
        index: index_of(ctx, &init, degree),
        initial_ideal: init,
        degree,
    })
}

/// A nonnegative integer weight vector.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct WeightVector {
    pub omega: Vec<u64>,
}

fn differences(gb: &GroebnerBasis) -> Vec<Vec<i64>> {
    let diff = |a: &Monomial, b: &Monomial| -> Vec<i64> {
        a.exps().iter().zip(b.exps()).map(|(&x, &y)| x as i64 - y as i64).collect()
    };
    gb.exponent_differences()
        .iter()
        .flat_map(|(lead, tail)| tail.iter().map(move |b| diff(lead, b)).collect::<Vec<_>>())
        .collect()
}

fn dot(w: &[i64], v: &[i64]) -> i128 {
    w.iter().zip(v).map(|(&a, &b)| a as i128 * b as i128).sum()
}

impl WeightVector {
    /// Checks `omega . (lead - beta) > 0` for every basis element and every
    /// non-leading exponent `beta`, in exact integer arithmetic.
    pub fn realizes(&self, gb: &GroebnerBasis) -> bool {
        let w: Vec<i64> = self.omega.iter().map(|&x| x as i64).collect();
        differences(gb).iter().all(|v| dot(&w, v) > 0)
    }
}

const PERCEPTRON_UPDATES: usize = 1_000_000;

/// Perceptron updates until `w . v > 0` for every constraint.
fn perceptron(constraints: &[Vec<i64>], dim: usize) -> Option<Vec<i64>> {
    let mut w = vec![0i64; dim];
    let mut updates = 0;
    loop {
        let mut clean = true;
        for v in constraints {
            if dot(&w, v) <= 0 {
                for (x, y) in w.iter_mut().zip(v) {
                    *x += y;
                }
                clean = false;
                updates += 1;
                if updates > PERCEPTRON_UPDATES {
                    return None;
                }
            }
        }
        if clean {
            return Some(w);
        }
    }
}

/// A weight `omega >= 0` whose initial forms agree with the leading terms of
/// the reduced Gröbner basis. When every constraint vector has coordinate
/// sum zero (homogeneous input) the perceptron solution is shifted to be
/// nonnegative; otherwise positivity of each coordinate is imposed directly.
pub fn weight_vector_for_order(gb: &GroebnerBasis) -> Result<WeightVector> {
    let dim = gb.context().nvars();
    let mut constraints = differences(gb);
    let balanced = constraints.iter().all(|v| v.iter().sum::<i64>() == 0);
    if !balanced {
        constraints.extend((0..dim).map(|i| {
            let mut e = vec![0; dim];
            e[i] = 1;
            e
        }));
    }
    let w = perceptron(&constraints, dim)
        .ok_or_else(|| Error::Internal("no weight vector found for the Gröbner basis".into()))?;
    let shift = if balanced { w.iter().copied().min().unwrap_or(0) } else { 0 };
    let omega = WeightVector {
        omega: w.iter().map(|&x| (x - shift) as u64).collect(),
    };
    if !omega.realizes(gb) {
        return Err(Error::Internal("weight vector failed verification".into()));
    }
    Ok(omega)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePsOptions {
    /// Enumerate every index when `C(N, d)` is at most this.
    pub exhaustive_limit: u128,
    /// Maximal number of pivot columns exchanged in the neighborhood search.
    pub radius: usize,
    /// Random indices examined beyond the neighborhood.
    pub samples: usize,
    pub seed: u64,
}

impl Default for OnePsOptions {
    fn default() -> Self {
        Self {
            exhaustive_limit: 100_000,
            radius: 2,
            samples: 200,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OnePsReport {
    pub holds: bool,
    pub exhaustive: bool,
    /// Indices whose coordinate was evaluated.
    pub examined: u64,
    /// Of those, how many had a nonzero coordinate.
    pub nonzero: u64,
    pub cell_weight: u64,
    /// The heaviest competing index with a nonzero coordinate.
    pub runner_up: Option<u64>,
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

struct Tally {
    cell_weight: u64,
    examined: u64,
    nonzero: u64,
    runner_up: Option<u64>,
}

impl Tally {
    fn record(&mut self, nonzero: bool, weight: impl FnOnce() -> u64) {
        self.examined += 1;
        if nonzero {
            self.nonzero += 1;
            let w = weight();
            self.runner_up = Some(self.runner_up.map_or(w, |r| r.max(w)));
        }
    }
}

/// Checks that the Schubert cell index of `[I]_m` strictly outweighs every
/// other index with a nonzero Plücker coordinate under `omega`, which is what
/// makes the `t -> 0` limit of the one-parameter subgroup for `-omega` equal to
/// `[in(I)]_m`. All `C(N, d)` indices are examined when that is at most
/// `exhaustive_limit`; otherwise pivot exchanges up to `radius` columns and a
/// seeded random sample are examined.
pub fn one_ps_limit_check(
    ctx: &RingContext,
    ideal: &Ideal,
    m: u32,
    omega: &WeightVector,
    opts: &OnePsOptions,
) -> Result<OnePsReport> {
    let f = hilbert_point(ctx, ideal, m)?;
    let cell = schubert_cell_index(&f);
    let weight_at = |cols: &[usize]| index_weight(&f.index_at(cols), &omega.omega);
    let mut tally = Tally {
        cell_weight: index_weight(&cell, &omega.omega)?,
        examined: 0,
        nonzero: 0,
        runner_up: None,
    };
    let cell_cols = f.positions(&cell)?;
    let (n, d) = (f.ncols(), f.dim());
    let exhaustive = binomial_u128(n, d) <= opts.exhaustive_limit;
    if exhaustive {
        for cols in (0..n).combinations(d) {
            if cols != cell_cols {
                let nz = !f.minor(&cols).is_zero();
                tally.record(nz, || weight_at(&cols).expect("weights sized"));
            }
        }
    } else {
        exchange_neighborhood(&f, opts.radius, &mut tally, &weight_at);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.samples {
            let mut cols = sample(&mut rng, n, d).into_vec();
            cols.sort_unstable();
            if cols != cell_cols {
                let nz = !f.minor(&cols).is_zero();
                tally.record(nz, || weight_at(&cols).expect("weights sized"));
            }
        }
    }
    Ok(OnePsReport {
        holds: tally.runner_up.is_none_or(|w| w < tally.cell_weight),
        exhaustive,
        examined: tally.examined,
        nonzero: tally.nonzero,
        cell_weight: tally.cell_weight,
        runner_up: tally.runner_up,
    })
}

/// For a basis in reduced row-echelon form with pivot set `P`, the Plücker
/// coordinate at `(P \ S) + T` is, up to sign, the minor of the rows of `S`
/// on the columns `T`. Enumerates all such exchanges with `|S| = |T| <= radius`.
fn exchange_neighborhood(
    f: &SubspaceBasis,
    radius: usize,
    tally: &mut Tally,
    weight_at: &dyn Fn(&[usize]) -> Result<u64>,
) {
    let pivots = f.pivots();
    let free: Vec<usize> = (0..f.ncols()).filter(|c| !pivots.contains(c)).collect();
    for r in 1..=radius.min(pivots.len()).min(free.len()) {
        for rows in (0..pivots.len()).combinations(r) {
            for cols in free.iter().copied().combinations(r) {
                let sub: Vec<Vec<BigRational>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&c| f.rows()[i][c].clone()).collect())
                    .collect();
                let nz = !crate::linalg::determinant(&sub).is_zero();
                tally.record(nz, || {
                    let mut idx: Vec<usize> = pivots
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !rows.contains(i))
                        .map(|(_, &p)| p)
                        .chain(cols.iter().copied())
                        .collect();
                    idx.sort_unstable();
                    weight_at(&idx).expect("weights sized")
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_ideal, MonomialOrder};

    fn ideal(text: &str, n: usize) -> Ideal {
        let (_, gens) = parse_ideal(text, Some(n)).unwrap();
        Ideal::new(n + 1, gens)
    }

    fn mono(text: &str, n: usize) -> MonomialIdeal {
        crate::groebner::initial_ideal(&RingContext::grevlex(n), &ideal(text, n)).unwrap()
    }

    #[test]
    fn random_changes_are_deterministic_and_invertible() {
        let a = random_linear_change(7, 100, 4).unwrap();
        let b = random_linear_change(7, 100, 4).unwrap();
        assert_eq!(a.matrix(), b.matrix());
        let mut seen = std::collections::HashSet::new();
        for seed in 0..100 {
            let g = random_linear_change(seed, 2, 3).unwrap();
            assert!(!g.determinant().is_zero());
            assert!(g.matrix().iter().flatten().all(|x| x.to_integer().magnitude() <= &2u32.into()));
            seen.insert(format!("{:?}", random_linear_change(seed, 100, 3).unwrap().matrix()));
        }
        assert_eq!(seen.len(), 100);
        assert!(random_linear_change(0, 1, 3).is_err());
    }

    #[test]
    fn gin_examples() {
        let ctx = RingContext::grevlex(2);
        let opts = GinOptions::default();
        for text in ["x0*x2 - x1^2", "x0^2", "x1^2"] {
            let r = generic_initial_ideal(&ctx, &ideal(text, 2), &opts).unwrap();
            assert_eq!(r.gin.to_string(), "(x0^2)", "{text}");
            assert!(r.stable);
            assert_eq!(r.certification_degree, 2);
            assert_eq!(r.hilbert_polynomial.to_string(), "2*m + 1");
        }
        let r = generic_initial_ideal(&ctx, &Ideal::new(3, vec![]), &opts).unwrap();
        assert!(r.gin.is_zero());
        assert!(generic_initial_ideal(&ctx, &ideal("x0", 2), &GinOptions { trials: 1, ..opts }).is_err());
    }

    #[test]
    fn gin_of_two_quadrics_is_borel_fixed() {
        let ctx = RingContext::grevlex(2);
        let r = generic_initial_ideal(&ctx, &ideal("x0^2 - x1*x2; x1^2 - x0*x2", 2), &GinOptions::default()).unwrap();
        assert_eq!(r.gin.to_string(), "(x0^2, x0*x1, x1^3)");
        assert!(is_borel_fixed(&ctx, &r.gin));
        assert_eq!(r.hilbert_polynomial.to_string(), "4");
    }

    #[test]
    fn borel_fixedness() {
        let g2 = RingContext::grevlex(2);
        let g3 = RingContext::grevlex(3);
        assert!(is_borel_fixed(&g2, &mono("x0^2; x0*x1; x1^2", 2)));
        assert!(!is_borel_fixed(&g2, &mono("x1^2", 2)));
        assert!(is_borel_fixed(&g3, &mono("x0^5", 3)));
        assert!(is_borel_fixed(&g3, &MonomialIdeal::zero(4)));
        assert!(is_borel_fixed(&g3, &MonomialIdeal::unit(4)));
        assert!(is_borel_fixed(&g2, &mono("x0^2; x0*x1; x0^2*x2", 2)));
        assert!(!is_borel_fixed(&g2, &mono("x0^2; x1*x2", 2)));
        // Redundant generators do not change the verdict.
        assert!(is_borel_fixed(&g2, &mono("x0^2; x0*x1; x1^2; x0^3; x0*x1*x2", 2)));
    }

    #[test]
    fn borel_fixedness_follows_the_variable_order() {
        let reversed = RingContext::new(2, MonomialOrder::weight(vec![1, 2, 3])).unwrap();
        assert!(is_borel_fixed(&reversed, &mono("x2^2", 2)));
        assert!(!is_borel_fixed(&reversed, &mono("x0^2", 2)));
        let r = generic_initial_ideal(&reversed, &ideal("x0*x2 - x1^2", 2), &GinOptions::default()).unwrap();
        assert_eq!(r.gin.to_string(), "(x2^2)");
        assert!(is_borel_fixed(&reversed, &r.gin));
    }

    #[test]
    fn secondary_gins() {
        let ctx = RingContext::grevlex(2);
        let conic = ideal("x0*x2 - x1^2", 2);
        let id = secondary_gin(&ctx, &conic, &LinearChange::identity(3)).unwrap();
        assert_eq!(id.initial_ideal.to_string(), "(x1^2)");
        let primary = generic_initial_ideal(&ctx, &conic, &GinOptions::default()).unwrap();
        assert_eq!(compare_indices(&ctx, &id.index, &primary.index).unwrap().lex, Ordering::Less);
        let generic = secondary_gin(&ctx, &conic, &primary.witness).unwrap();
        assert_eq!(generic.index, primary.index);

        let borel = ideal("x0^2; x0*x1; x1^3", 2);
        let u = LinearChange::from_integers(&[vec![1, 0, 0], vec![3, 1, 0], vec![-2, 5, 1]], ChangeKind::LowerTriangular).unwrap();
        let s = secondary_gin(&ctx, &borel, &u).unwrap();
        assert_eq!(s.initial_ideal.to_string(), "(x0^2, x0*x1, x1^3)");
    }

    #[test]
    fn weight_vectors() {
        let ctx = RingContext::grevlex(2);
        let conic = ideal("x0*x2 - x1^2", 2);
        let w = weight_vector_for_order(&conic.groebner_basis(&ctx)).unwrap();
        let o = &w.omega;
        assert!(2 * o[1] > o[0] + o[2]);

        let lex1 = RingContext::lex(1);
        let w = weight_vector_for_order(&ideal("x0 + x1", 1).groebner_basis(&lex1)).unwrap();
        assert!(w.omega[0] > w.omega[1]);
        let w = weight_vector_for_order(&ideal("x0^2; x1*x2", 2).groebner_basis(&ctx)).unwrap();
        assert!(w.omega.iter().all(|&x| x == 0));

        let cubic = ideal("x0*x2 - x1^2; x1*x3 - x2^2; x0*x3 - x1*x2", 3);
        for order in [RingContext::grevlex(3), RingContext::lex(3)] {
            let gb = cubic.groebner_basis(&order);
            assert!(weight_vector_for_order(&gb).unwrap().realizes(&gb));
        }
        let affine = ideal("x0^3 - x1; x1^2 - x2", 2);
        let gb = affine.groebner_basis(&RingContext::lex(2));
        assert!(weight_vector_for_order(&gb).unwrap().realizes(&gb));
    }

    #[test]
    fn one_ps_examples() {
        let ctx = RingContext::grevlex(2);
        let conic = ideal("x0*x2 - x1^2", 2);
        let omega = WeightVector { omega: vec![1, 1, 0] };
        let opts = OnePsOptions::default();
        let r = one_ps_limit_check(&ctx, &conic, 2, &omega, &opts).unwrap();
        assert!(r.holds && r.exhaustive);
        assert_eq!((r.cell_weight, r.runner_up, r.nonzero), (2, Some(1), 1));
        let r = one_ps_limit_check(&ctx, &conic, 3, &omega, &opts).unwrap();
        assert!(r.holds && r.exhaustive);
        assert_eq!(r.examined, 119);

        let r = one_ps_limit_check(&ctx, &ideal("x1^2", 2), 3, &omega, &opts).unwrap();
        assert!(r.holds && r.nonzero == 0);

        // A weight that favors x0*x2 over x1^2 picks the wrong limit.
        let bad = WeightVector { omega: vec![2, 0, 1] };
        assert!(!one_ps_limit_check(&ctx, &conic, 2, &bad, &opts).unwrap().holds);
    }

    #[test]
    fn neighborhood_mode_finds_competitors() {
        let ctx = RingContext::grevlex(2);
        let conic = ideal("x0*x2 - x1^2", 2);
        let opts = OnePsOptions { exhaustive_limit: 0, radius: 1, samples: 50, seed: 3 };
        let good = one_ps_limit_check(&ctx, &conic, 3, &WeightVector { omega: vec![1, 1, 0] }, &opts).unwrap();
        assert!(good.holds && !good.exhaustive && good.nonzero > 0);
        let bad = one_ps_limit_check(&ctx, &conic, 3, &WeightVector { omega: vec![2, 0, 1] }, &opts).unwrap();
        assert!(!bad.holds);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_u128(35, 22), 1_476_337_800);
        assert_eq!(binomial_u128(10, 3), 120);
        assert_eq!(binomial_u128(3, 5), 0);
        assert_eq!(binomial_u128(500, 250), u128::MAX);
    }
}
