//! JSON report types. Every report carries `schema: 1` and a `command` tag;
//! collections are sorted before serialization so output is reproducible.

use ginlab_core::grassmann::SchubertIndex;
use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// Implemented by every report: whether the property checks it embeds held.
pub trait Verdict {
    fn property_holds(&self) -> bool;
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialRecord {
    pub seed: u64,
    pub initial_generators: Vec<String>,
    pub index: SchubertIndex,
}

#[derive(Clone, Debug, Serialize)]
pub struct GinReport {
    pub schema: u32,
    pub command: &'static str,
    pub n: usize,
    pub order: String,
    pub seed: u64,
    pub bound: u32,
    pub trials: usize,
    pub input: Vec<String>,
    pub gin_generators: Vec<String>,
    pub index: SchubertIndex,
    pub certification_degree: u32,
    pub stable: bool,
    pub borel_fixed: bool,
    pub hilbert_polynomial: String,
    pub gotzmann: usize,
    pub witness: Vec<Vec<String>>,
    pub trial_records: Vec<TrialRecord>,
}

impl Verdict for GinReport {
    fn property_holds(&self) -> bool {
        self.borel_fixed
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
pub enum StrataMode {
    #[serde(rename = "byGin")]
    #[value(name = "gin")]
    ByGin,
    #[serde(rename = "byInitialIdeal")]
    #[value(name = "initial")]
    ByInitialIdeal,
}

#[derive(Clone, Debug, Serialize)]
pub struct Stratum {
    pub index: SchubertIndex,
    pub gin_generators: Vec<String>,
    pub hilbert_polynomial: String,
    pub borel_fixed: bool,
    pub member_ids: Vec<usize>,
    pub count: usize,
    pub share: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct StratumReport {
    pub schema: u32,
    pub command: &'static str,
    pub mode: StrataMode,
    pub family: String,
    pub n: usize,
    pub order: String,
    pub seed: u64,
    pub members: usize,
    /// The common degree of every stratum index.
    pub degree: u32,
    /// Strata sorted by index size, then lex-descending index.
    pub strata: Vec<Stratum>,
    /// Position in `strata` of the lex-maximal index, when all indices have
    /// the same size.
    pub dominant: Option<usize>,
    pub dominant_share: Option<f64>,
}

impl Verdict for StratumReport {
    fn property_holds(&self) -> bool {
        let partition = self.strata.iter().map(|s| s.count).sum::<usize>() == self.members;
        let borel = self.mode != StrataMode::ByGin || self.strata.iter().all(|s| s.borel_fixed);
        partition && borel
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RevlexCase {
    pub m: u32,
    pub count: usize,
    pub l: u32,
    pub is_segment_after: bool,
    pub contains_pivot: bool,
    pub codim_before: u64,
    pub codim_after: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RevlexReport {
    pub schema: u32,
    pub command: &'static str,
    pub n: usize,
    pub m_max: u32,
    pub l_max: u32,
    pub cases: usize,
    pub segment_cases: usize,
    pub counterexamples: usize,
    /// The first few counterexamples, if any.
    pub examples: Vec<RevlexCase>,
}

impl Verdict for RevlexReport {
    fn property_holds(&self) -> bool {
        self.counterexamples == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegeneracyReport {
    pub schema: u32,
    pub command: &'static str,
    pub kind: String,
    pub n: usize,
    pub hilbert_polynomial: String,
    pub gotzmann: usize,
    pub m: u32,
    /// `dim I_m`.
    pub d: usize,
    pub order: String,
    pub seed: u64,
    pub bound: u32,
    pub alpha_star: SchubertIndex,
    pub samples: usize,
    pub vanished: usize,
    pub all_vanished: bool,
    /// The first sample whose coordinate at `alpha_star` was nonzero.
    pub witness: Option<usize>,
    pub theorem_applicable: bool,
    /// `Some(all_vanished)` when the degeneracy statement applies.
    pub verdict: Option<bool>,
    pub warning: Option<String>,
    /// For hypersurfaces at `m = d + 1`: the top `n + 1` monomials of degree
    /// `d + 1` not involving the last variable.
    pub explicit_index: Option<SchubertIndex>,
    pub explicit_all_vanished: Option<bool>,
}

impl Verdict for DegeneracyReport {
    fn property_holds(&self) -> bool {
        self.verdict != Some(false) && self.explicit_all_vanished != Some(false)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbInfoReport {
    pub schema: u32,
    pub command: &'static str,
    pub input: String,
    pub polynomial: String,
    pub n: usize,
    pub admissible: bool,
    pub gotzmann: Option<usize>,
    pub macaulay_rep: Option<Vec<u32>>,
    pub macaulay_binomials: Option<String>,
    pub lex_ideal: Option<Vec<String>>,
    /// The Hilbert polynomial of `lex_ideal` equals the input.
    pub round_trip: Option<bool>,
    pub note: Option<String>,
}

impl Verdict for HilbInfoReport {
    fn property_holds(&self) -> bool {
        self.round_trip != Some(false)
    }
}
