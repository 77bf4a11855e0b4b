//! Rational 2-connectivity of homomorphisms and what it implies.
//!
//! [`check_rational_two_connected`] combines the induced map on `H_1(-;Q)`
//! with a chain-level certificate that `H_2` of the target vanishes. The
//! epimorphism condition on `H_2` is never tested directly, so a failed
//! certificate yields [`H2Epi::Unknown`] rather than a negative answer.
//! [`consequence_report`] turns a certified verdict into symbolic
//! embedding claims and recomputes `r_1`, `r_2` on both sides.

mod audit;
mod consequences;

pub use audit::{free_subgroup_criterion, rank_inequality_audit, FreeSubgroupVerdict, InconclusiveReason};
pub use consequences::{consequence_report, Claim, ConsequenceReport, RankComparison};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::laurent::{abelianization, is_unimodular, snf_int, AbelianizationData, IntMatrix, QMatrix};
use crate::presentations::{GroupHom, Presentation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error(
        "not a homomorphism on H_1: relator {relator} maps to {image}, which is nontrivial in the abelianized target"
    )]
    NotHomomorphismOnH1 { relator: usize, image: String },
}

/// The induced map `H_1(A;Q) -> H_1(B;Q)` in the bases of the free parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H1Map {
    /// `b_1(B) x b_1(A)`; column `j` is the image of the `j`-th source basis vector.
    #[serde(serialize_with = "crate::laurent::serialize_display_matrix")]
    pub matrix: QMatrix,
    pub mono: bool,
    pub iso: bool,
    /// The matrix is integral and unimodular, so the free parts of `H_1(-;Z)` also match.
    pub integral_free_part_iso: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum H2Epi {
    CertifiedByTargetVanishing,
    Unknown,
}

impl H2Epi {
    pub fn code(self) -> &'static str {
        match self {
            H2Epi::CertifiedByTargetVanishing => "certified-by-target-vanishing",
            H2Epi::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Surjectivity {
    NotAsserted,
    /// Asserted and every target generator is a generator image.
    Certified,
    /// Asserted but not visible from the generator images.
    AssertedUnverified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FinitenessNotes {
    pub source_finitely_generated: bool,
    pub target_finitely_related: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub h1: H1Map,
    pub h1_mono: bool,
    pub h1_iso: bool,
    pub h2_epi: H2Epi,
    pub finiteness: FinitenessNotes,
    pub surjectivity: Surjectivity,
}

impl Verdict {
    /// Both hypotheses of rational 2-connectivity are certified.
    pub fn certified(&self) -> bool {
        self.h1_mono
            && self.h2_epi == H2Epi::CertifiedByTargetVanishing
            && self.finiteness.source_finitely_generated
            && self.finiteness.target_finitely_related
    }

    /// Records a user assertion that the map is onto.
    pub fn with_onto_assertion(mut self, h: &GroupHom) -> Self {
        self.surjectivity =
            if h.images_visibly_generate() { Surjectivity::Certified } else { Surjectivity::AssertedUnverified };
        self
    }
}

/// Checks that every source relator dies in `H_1(B;Z)`.
pub fn check_abelianized(h: &GroupHom) -> Result<(), HomError> {
    let target = h.target();
    let gb = target.num_generators();
    let exps = target.exponent_matrix();
    let snf = snf_int(&IntMatrix::from_i64(&exps, gb));
    let diag = snf.diagonal();
    for (j, r) in h.source().relators().iter().enumerate() {
        let image = h.apply(r);
        let v: Vec<BigInt> = image.exponent_sums(gb).into_iter().map(BigInt::from).collect();
        let w: Vec<BigInt> =
            (0..gb).map(|c| (0..gb).fold(BigInt::zero(), |acc, i| acc + &v[i] * snf.v.get(i, c))).collect();
        let in_lattice = w.iter().enumerate().all(|(c, x)| match diag.get(c) {
            Some(d) if !d.is_zero() => (x % d).is_zero(),
            _ => x.is_zero(),
        });
        if !in_lattice {
            return Err(HomError::NotHomomorphismOnH1 { relator: j, image: target.display_word(&image) });
        }
    }
    Ok(())
}

fn rational_columns(ab: &AbelianizationData) -> QMatrix {
    let g = ab.projection.len();
    QMatrix::from_fn(ab.b, g, |k, i| BigRational::from_integer(ab.projection[i][k].into()))
}

/// Matrix of `H_1(A;Q) -> H_1(B;Q)`. The map must already pass
/// [`check_abelianized`].
pub fn h1q_matrix(h: &GroupHom) -> H1Map {
    let (ab_a, ab_b) = (abelianization(h.source()), abelianization(h.target()));
    let (ba, bb) = (ab_a.b, ab_b.b);
    let pt = rational_columns(&ab_a);
    let images: Vec<Vec<i64>> = h.images().iter().map(|w| ab_b.project_word(w)).collect();
    let mut matrix = QMatrix::zeros(bb, ba);
    for k in 0..bb {
        let col: Vec<BigRational> = images.iter().map(|v| BigRational::from_integer(v[k].into())).collect();
        let x = pt.solve_left(&col).expect("generator images factor through H_1 of the source");
        for (j, c) in x.into_iter().enumerate() {
            matrix.set(k, j, c);
        }
    }
    let rank = matrix.rank();
    let mono = rank == ba;
    let iso = mono && ba == bb;
    let integral_free_part_iso = iso && matrix.is_integral() && {
        let m = matrix.map(|x| x.to_integer());
        is_unimodular(&m)
    };
    H1Map { matrix, mono, iso, integral_free_part_iso }
}

/// True when the relator exponent matrix is injective over `Q`, which
/// forces `H_2` of the presentation complex and of the group to vanish
/// rationally. False means unknown.
pub fn h2_vanish_cert(p: &Presentation) -> bool {
    let r = p.num_relators();
    if r == 0 {
        return true;
    }
    let m = IntMatrix::from_i64(&p.exponent_matrix(), p.num_generators()).to_rational();
    m.rank() == r
}

pub fn check_rational_two_connected(h: &GroupHom) -> Verdict {
    let h1 = h1q_matrix(h);
    let h2_epi = if h2_vanish_cert(h.target()) { H2Epi::CertifiedByTargetVanishing } else { H2Epi::Unknown };
    Verdict {
        h1_mono: h1.mono,
        h1_iso: h1.iso,
        h1,
        h2_epi,
        finiteness: FinitenessNotes { source_finitely_generated: true, target_finitely_related: true },
        surjectivity: Surjectivity::NotAsserted,
    }
}

#[cfg(test)]
mod tests;
