//! The experiments behind each subcommand, as plain functions returning reports.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use ginlab_core::gin::{generic_initial_ideal, is_borel_fixed, GinOptions};
use ginlab_core::grassmann::{
    compare_indices, hilbert_point, max_index, pluecker_coordinate, SchubertIndex, SubspaceBasis,
};
use ginlab_core::groebner::{initial_ideal, Ideal, MonomialIdeal};
use ginlab_core::hilbert::{
    gotzmann_number, hilbert_polynomial, hilbert_polynomial_of_monomial, lex_segment_ideal,
    macaulay_expansion, monomial_count, revlex_lemma_check, HilbertPolynomial,
};
use ginlab_core::poly::{parse_ideal, Monomial, MonomialOrder, Polynomial, RingContext};
use ginlab_core::{Error, ParseError};
use num_traits::Zero;
use rayon::prelude::*;

use crate::family::{member_rng, member_seed, random_form, random_forms_ideal, random_points, vanishing_space};
use crate::report::*;

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] Error),
}

pub type CommandResult<T> = Result<T, CommandError>;

fn invalid<T>(msg: impl Into<String>) -> CommandResult<T> {
    Err(CommandError::Invalid(msg.into()))
}

/// Parses `text` into a homogeneous ideal, inferring `n` when not given.
pub fn parse_homogeneous(text: &str, n: Option<usize>) -> CommandResult<(usize, Ideal)> {
    let (n, gens) = parse_ideal(text, n)?;
    if let Some(bad) = gens.iter().find(|g| !g.is_homogeneous()) {
        return invalid(format!("`{bad}` is not homogeneous"));
    }
    Ok((n, Ideal::new(n + 1, gens)))
}

pub fn context(n: usize, order: &MonomialOrder) -> CommandResult<RingContext> {
    Ok(RingContext::new(n, order.clone())?)
}

fn poly_strings(ctx: &RingContext, polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(|p| p.to_string_in(ctx)).collect()
}

fn index_at(ctx: &RingContext, m_ideal: &MonomialIdeal, m: u32) -> SchubertIndex {
    SchubertIndex::new(ctx, m_ideal.degree_part(ctx, m)).expect("degree part is descending")
}

#[derive(Clone, Debug)]
pub struct GinParams {
    pub n: usize,
    pub order: MonomialOrder,
    pub seed: u64,
    pub trials: usize,
    pub bound: u32,
}

pub fn cmd_gin(ideal: &Ideal, p: &GinParams) -> CommandResult<GinReport> {
    let ctx = context(p.n, &p.order)?;
    let r = generic_initial_ideal(
        &ctx,
        ideal,
        &GinOptions {
            trials: p.trials,
            seed: p.seed,
            bound: p.bound,
        },
    )?;
    Ok(GinReport {
        schema: SCHEMA,
        command: "gin",
        n: p.n,
        order: p.order.to_string(),
        seed: p.seed,
        bound: p.bound,
        trials: p.trials,
        input: poly_strings(&ctx, ideal.generators()),
        gin_generators: r.gin.generator_strings(&ctx),
        borel_fixed: is_borel_fixed(&ctx, &r.gin),
        index: r.index,
        certification_degree: r.certification_degree,
        stable: r.stable,
        hilbert_polynomial: r.hilbert_polynomial.to_string(),
        gotzmann: r.gotzmann,
        witness: r
            .witness
            .matrix()
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect(),
        trial_records: r
            .records
            .iter()
            .map(|t| TrialRecord {
                seed: t.seed,
                initial_generators: t.initial_ideal.generator_strings(&ctx),
                index: t.index.clone(),
            })
            .collect(),
    })
}

/// Where the members of a stratification experiment come from.
#[derive(Clone, Debug)]
pub enum Family {
    /// Explicit ideals, each a list of polynomial strings.
    Inline(Vec<String>),
    /// `count` ideals generated by random forms of the given degrees.
    RandomForms { degrees: Vec<u32>, count: usize, bound: u32 },
}

#[derive(Clone, Debug)]
pub struct StrataParams {
    pub n: Option<usize>,
    pub order: MonomialOrder,
    pub seed: u64,
    pub trials: usize,
    pub bound: u32,
    pub mode: StrataMode,
}

fn family_members(family: &Family, n: Option<usize>, seed: u64) -> CommandResult<(usize, Vec<Ideal>, String)> {
    match family {
        Family::Inline(texts) => {
            if texts.is_empty() {
                return invalid("the family is empty");
            }
            let parsed = texts
                .iter()
                .map(|t| parse_ideal(t, n))
                .collect::<Result<Vec<_>, _>>()?;
            let n = n.unwrap_or_else(|| parsed.iter().map(|p| p.0).max().unwrap_or(1));
            let mut members = Vec::new();
            for text in texts {
                members.push(parse_homogeneous(text, Some(n))?.1);
            }
            Ok((n, members, format!("inline list of {} ideals", texts.len())))
        }
        Family::RandomForms { degrees, count, bound } => {
            let Some(n) = n else {
                return invalid("random families need --n");
            };
            if *count == 0 || degrees.is_empty() {
                return invalid("the family is empty");
            }
            let members = (0..*count)
                .map(|i| random_forms_ideal(n, degrees, *bound, &mut member_rng(seed, i as u64)))
                .collect();
            let degs: Vec<String> = degrees.iter().map(u32::to_string).collect();
            Ok((
                n,
                members,
                format!("{count} random ideals of forms of degrees {{{}}} with coefficients in [-{bound}, {bound}]", degs.join(",")),
            ))
        }
    }
}

pub fn cmd_strata(family: &Family, p: &StrataParams) -> CommandResult<StratumReport> {
    let (n, members, description) = family_members(family, p.n, p.seed)?;
    let ctx = context(n, &p.order)?;
    // Per member: the monomial ideal that names its stratum, its Hilbert
    // polynomial and the least degree at which its index is faithful.
    let classified: Vec<(MonomialIdeal, HilbertPolynomial, u32)> = members
        .par_iter()
        .enumerate()
        .map(|(i, ideal)| -> CommandResult<_> {
            match p.mode {
                StrataMode::ByGin => {
                    let opts = GinOptions {
                        trials: p.trials,
                        seed: member_seed(p.seed, i as u64),
                        bound: p.bound,
                    };
                    let r = generic_initial_ideal(&ctx, ideal, &opts)?;
                    Ok((r.gin, r.hilbert_polynomial, r.certification_degree))
                }
                StrataMode::ByInitialIdeal => {
                    let hp = hilbert_polynomial(&ctx, ideal)?;
                    let init = initial_ideal(&ctx, ideal)?;
                    let m = (gotzmann_number(&hp)? as u32).max(init.max_generator_degree().unwrap_or(0));
                    Ok((init, hp, m))
                }
            }
        })
        .collect::<CommandResult<_>>()?;
    let degree = classified.iter().map(|c| c.2).max().unwrap_or(0);
    let mut groups: BTreeMap<Vec<String>, Vec<usize>> = BTreeMap::new();
    for (i, (m_ideal, _, _)) in classified.iter().enumerate() {
        groups.entry(m_ideal.generator_strings(&ctx)).or_default().push(i);
    }
    let total = members.len();
    let mut strata: Vec<Stratum> = groups
        .into_values()
        .map(|ids| {
            let (m_ideal, hp, _) = &classified[ids[0]];
            Stratum {
                index: index_at(&ctx, m_ideal, degree),
                gin_generators: m_ideal.generator_strings(&ctx),
                hilbert_polynomial: hp.to_string(),
                borel_fixed: is_borel_fixed(&ctx, m_ideal),
                count: ids.len(),
                share: ids.len() as f64 / total as f64,
                member_ids: ids,
            }
        })
        .collect();
    strata.sort_by(|a, b| {
        a.index.len().cmp(&b.index.len()).then_with(|| {
            compare_indices(&ctx, &b.index, &a.index)
                .map(|c| c.lex)
                .unwrap_or(Ordering::Equal)
                .then_with(|| a.gin_generators.cmp(&b.gin_generators))
        })
    });
    let uniform = strata.windows(2).all(|w| w[0].index.len() == w[1].index.len());
    let dominant = (uniform && !strata.is_empty()).then_some(0);
    Ok(StratumReport {
        schema: SCHEMA,
        command: "strata",
        mode: p.mode,
        family: description,
        n,
        order: p.order.to_string(),
        seed: p.seed,
        members: total,
        degree,
        dominant_share: dominant.map(|i| strata[i].share),
        dominant,
        strata,
    })
}

pub const REVLEX_MAX_N: usize = 4;
pub const REVLEX_MAX_M: u32 = 6;

pub fn cmd_revlex_lemma(n: usize, m_max: u32, l_max: u32) -> CommandResult<RevlexReport> {
    if n == 0 || n > REVLEX_MAX_N {
        return invalid(format!("n must be in 1..={REVLEX_MAX_N}"));
    }
    if m_max > REVLEX_MAX_M {
        return invalid(format!("m must be at most {REVLEX_MAX_M}"));
    }
    if l_max > REVLEX_MAX_M {
        return invalid(format!("l must be at most {REVLEX_MAX_M}"));
    }
    let per_degree: Vec<(usize, usize, Vec<RevlexCase>)> = (1..=m_max)
        .into_par_iter()
        .map(|m| {
            let mut cases = 0;
            let mut segments = 0;
            let mut bad = Vec::new();
            for count in 0..=monomial_count(n + 1, m) as usize {
                for l in 1..=l_max {
                    let r = revlex_lemma_check(n, m, count, l).expect("parameters in range");
                    cases += 1;
                    segments += r.is_segment_after as usize;
                    if !r.lemma_consistent {
                        bad.push(RevlexCase {
                            m,
                            count,
                            l,
                            is_segment_after: r.is_segment_after,
                            contains_pivot: r.contains_pivot,
                            codim_before: r.codim_before,
                            codim_after: r.codim_after,
                        });
                    }
                }
            }
            (cases, segments, bad)
        })
        .collect();
    let counterexamples = per_degree.iter().map(|p| p.2.len()).sum();
    Ok(RevlexReport {
        schema: SCHEMA,
        command: "revlex-lemma",
        n,
        m_max,
        l_max,
        cases: per_degree.iter().map(|p| p.0).sum(),
        segment_cases: per_degree.iter().map(|p| p.1).sum(),
        counterexamples,
        examples: per_degree.into_iter().flat_map(|p| p.2).take(10).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegeneracyKind {
    Hypersurface { n: usize, d: u32 },
    Points { n: usize, count: usize },
}

impl DegeneracyKind {
    fn n(&self) -> usize {
        match *self {
            DegeneracyKind::Hypersurface { n, .. } | DegeneracyKind::Points { n, .. } => n,
        }
    }

    fn hilbert_polynomial(&self) -> HilbertPolynomial {
        match *self {
            DegeneracyKind::Hypersurface { n, d } => HilbertPolynomial::hypersurface(n, d),
            DegeneracyKind::Points { count, .. } => HilbertPolynomial::constant(count as i64),
        }
    }

    fn describe(&self) -> String {
        match *self {
            DegeneracyKind::Hypersurface { n, d } => format!("hypersurface(n={n}, d={d})"),
            DegeneracyKind::Points { n, count } => format!("points(n={n}, count={count})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DegeneracyParams {
    pub kind: DegeneracyKind,
    pub m: u32,
    pub samples: usize,
    pub seed: u64,
    pub bound: u32,
}

/// The top `n + 1` degree-`m` monomials not involving `x_n`, if there are that many.
fn explicit_index(ctx: &RingContext, m: u32) -> Option<SchubertIndex> {
    let n = ctx.n();
    let free: Vec<Monomial> = ctx
        .monomials_desc(m)
        .into_iter()
        .filter(|u| u.exp(n) == 0)
        .take(n + 1)
        .collect();
    (free.len() == n + 1).then(|| SchubertIndex::new(ctx, free).expect("descending"))
}

fn sample_subspace(ctx: &RingContext, p: &DegeneracyParams, s: usize) -> CommandResult<SubspaceBasis> {
    let mut rng = member_rng(p.seed, s as u64);
    match p.kind {
        DegeneracyKind::Hypersurface { n, d } => {
            let f = random_form(n + 1, d, p.bound, &mut rng);
            Ok(hilbert_point(ctx, &Ideal::new(n + 1, vec![f]), p.m)?)
        }
        DegeneracyKind::Points { n, count } => {
            let expected = monomial_count(n + 1, p.m) as usize;
            // Redraw until the points impose independent conditions in degree m.
            loop {
                let pts = random_points(n, count, p.bound, &mut rng);
                let space = vanishing_space(ctx, &pts, p.m)?;
                if space.dim() + count.min(expected) == expected {
                    return Ok(space);
                }
            }
        }
    }
}

pub fn cmd_degeneracy(p: &DegeneracyParams) -> CommandResult<DegeneracyReport> {
    let n = p.kind.n();
    if n == 0 {
        return invalid("n must be at least 1");
    }
    match p.kind {
        DegeneracyKind::Hypersurface { d: 0, .. } => return invalid("d must be at least 1"),
        DegeneracyKind::Points { count: 0, .. } => return invalid("count must be at least 1"),
        _ => {}
    }
    if p.samples == 0 {
        return invalid("samples must be at least 1");
    }
    if p.bound < 1 {
        return invalid("bound must be at least 1");
    }
    let ctx = RingContext::grevlex(n);
    let hp = p.kind.hilbert_polynomial();
    let gotzmann = gotzmann_number(&hp)?;
    let subspaces: Vec<SubspaceBasis> = (0..p.samples)
        .into_par_iter()
        .map(|s| sample_subspace(&ctx, p, s))
        .collect::<CommandResult<_>>()?;
    let d = subspaces[0].dim();
    if subspaces.iter().any(|f| f.dim() != d) {
        return Err(Error::Internal("samples have different dimensions".into()).into());
    }
    let alpha_star = max_index(&ctx, p.m, d)?;
    let nonzero: Vec<bool> = subspaces
        .par_iter()
        .map(|f| pluecker_coordinate(f, &alpha_star).map(|x| !x.is_zero()))
        .collect::<Result<_, _>>()?;
    let vanished = nonzero.iter().filter(|&&x| !x).count();
    let theorem_applicable = !hp.is_constant() && p.m as usize > gotzmann;
    let warning = if hp.is_constant() {
        Some("constant Hilbert polynomial: the degeneracy statement does not apply; the vanishing pattern is recorded without a verdict".to_string())
    } else if !theorem_applicable {
        Some(format!("m = {} does not exceed the Gotzmann number {gotzmann}; no verdict", p.m))
    } else {
        None
    };
    let explicit = match p.kind {
        DegeneracyKind::Hypersurface { d: deg, .. } if p.m == deg + 1 => explicit_index(&ctx, p.m),
        _ => None,
    };
    let explicit_all_vanished = match &explicit {
        Some(idx) if idx.len() == d => Some(
            subspaces
                .par_iter()
                .map(|f| pluecker_coordinate(f, idx).map(|x| x.is_zero()))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .all(|z| z),
        ),
        _ => None,
    };
    let all_vanished = vanished == p.samples;
    Ok(DegeneracyReport {
        schema: SCHEMA,
        command: "degeneracy",
        kind: p.kind.describe(),
        n,
        hilbert_polynomial: hp.to_string(),
        gotzmann,
        m: p.m,
        d,
        order: MonomialOrder::GrevLex.to_string(),
        seed: p.seed,
        bound: p.bound,
        alpha_star,
        samples: p.samples,
        vanished,
        all_vanished,
        witness: nonzero.iter().position(|&x| x),
        theorem_applicable,
        verdict: theorem_applicable.then_some(all_vanished),
        warning,
        explicit_index: explicit,
        explicit_all_vanished,
    })
}

pub fn cmd_hilb_info(text: &str, n: usize) -> CommandResult<HilbInfoReport> {
    if n == 0 {
        return invalid("n must be at least 1");
    }
    let hp = HilbertPolynomial::parse(text)?;
    let mut report = HilbInfoReport {
        schema: SCHEMA,
        command: "hilb-info",
        input: text.to_string(),
        polynomial: hp.to_string(),
        n,
        admissible: false,
        gotzmann: None,
        macaulay_rep: None,
        macaulay_binomials: None,
        lex_ideal: None,
        round_trip: None,
        note: None,
    };
    let rep = match macaulay_expansion(&hp) {
        Ok(rep) => rep,
        Err(_) => {
            report.note = Some("no Gotzmann expansion exists".into());
            return Ok(report);
        }
    };
    report.admissible = true;
    report.gotzmann = Some(rep.len());
    report.macaulay_binomials = Some(rep.to_string());
    report.macaulay_rep = Some(rep.a);
    let ctx = RingContext::grevlex(n);
    match lex_segment_ideal(&ctx, &hp) {
        Ok(lex) => {
            report.round_trip = Some(hilbert_polynomial_of_monomial(&lex)? == hp);
            report.lex_ideal = Some(lex.generator_strings(&RingContext::lex(n)));
        }
        Err(Error::NotEnoughVariables { .. }) => {
            report.note = Some(format!("P^{n} is too small for a subscheme with this Hilbert polynomial"));
        }
        Err(e) => return Err(e.into()),
    }
    Ok(report)
}
