//! The fixed corpus of ideals used by the acceptance suite.

use ginlab_core::groebner::Ideal;
use ginlab_core::hilbert::{lex_segment_ideal, HilbertPolynomial};
use ginlab_core::poly::RingContext;
use ginlab_core::Result;

use crate::family::{member_rng, random_forms_ideal, twisted_cubic_net};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub n: usize,
    pub ideal: Ideal,
}

impl CorpusEntry {
    pub fn context(&self) -> RingContext {
        RingContext::grevlex(self.n)
    }
}

pub const CORPUS_SEED: u64 = 20_240_917;
pub const CORPUS_BOUND: u32 = 20;

/// Random complete intersections in `P^2` of degrees `{2}`, `{2,2}`, `{2,3}`,
/// random twisted-cubic nets in `P^3`, and the lex ideals of `2m+1`, `3m+1`
/// and the constants 1 to 4. Thirty ideals in total.
pub fn acceptance_corpus() -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    let mut member = 0u64;
    let mut next_rng = || {
        member += 1;
        member_rng(CORPUS_SEED, member)
    };
    for (degrees, copies) in [(vec![2], 6), (vec![2, 2], 6), (vec![2, 3], 5)] {
        for k in 0..copies {
            let label = degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
            out.push(CorpusEntry {
                name: format!("forms{{{label}}}#{k}"),
                n: 2,
                ideal: random_forms_ideal(2, &degrees, CORPUS_BOUND, &mut next_rng()),
            });
        }
    }
    for k in 0..7 {
        out.push(CorpusEntry {
            name: format!("twisted-cubic#{k}"),
            n: 3,
            ideal: twisted_cubic_net(CORPUS_BOUND, &mut next_rng())?,
        });
    }
    let lex = ["2*m + 1", "3*m + 1", "1", "2", "3", "4"];
    for p in lex {
        let n = if p == "3*m + 1" { 3 } else { 2 };
        let hp = HilbertPolynomial::parse(p).expect("valid");
        out.push(CorpusEntry {
            name: format!("lex[{p}]"),
            n,
            ideal: lex_segment_ideal(&RingContext::grevlex(n), &hp)?.to_ideal(),
        });
    }
    Ok(out)
}
