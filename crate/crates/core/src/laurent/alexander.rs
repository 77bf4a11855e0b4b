use serde::Serialize;

use super::abelian::{abelianization, specialize_jacobian, AbelianizationData};
use super::poly::LaurentPoly;
use super::snf::{snf_laurent, EuclideanDomain, UniLaurent};
use super::LaurentError;
use crate::presentations::{fox_jacobian, Presentation};

/// Alexander polynomial and the torsion decomposition of `H_1(G; Q[t^{+-1}])`
/// for a group with first Betti number one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlexanderData {
    /// Normalized: lowest exponent 0, primitive, positive leading coefficient.
    /// Zero when the module has positive rank.
    #[serde(serialize_with = "crate::laurent::serialize_display")]
    pub delta: LaurentPoly,
    /// Nonunit invariant factors, each normalized like `delta`.
    #[serde(serialize_with = "crate::laurent::serialize_display_vec")]
    pub torsion: Vec<LaurentPoly>,
    /// Rank of `H_1(G; Q[t^{+-1}])` over the PID.
    pub free_rank: usize,
}

pub fn alexander_data(p: &Presentation) -> Result<AlexanderData, LaurentError> {
    let ab = abelianization(p);
    alexander_data_with(p, &ab)
}

pub fn alexander_data_with(p: &Presentation, ab: &AbelianizationData) -> Result<AlexanderData, LaurentError> {
    if ab.b != 1 {
        return Err(LaurentError::RankMismatch { expected: 1, got: ab.b });
    }
    let g = p.num_generators();
    let j = specialize_jacobian(&fox_jacobian(p), ab, g);
    let snf = snf_laurent(&j);
    let diag: Vec<UniLaurent> = snf.diagonal().into_iter().filter(|d| !d.is_zero()).collect();
    let k = diag.len();
    // coker J = H_1(G; Q[t^{+-1}]) plus one free summand.
    let free_rank = g - k - 1;
    let torsion: Vec<LaurentPoly> = diag.iter().filter(|d| d.norm() > 0).map(|d| d.0.normalize_unit()).collect();
    let delta = if free_rank == 0 {
        diag.iter().fold(UniLaurent::one(), |acc, d| acc.mul(d)).0.normalize_unit()
    } else {
        LaurentPoly::zero(1)
    };
    Ok(AlexanderData { delta, torsion, free_rank })
}
