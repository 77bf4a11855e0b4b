use num_rational::BigRational;
use serde::Serialize;

use super::h2_vanish_cert;
use crate::laurent::{abelianization, boundary_column, rational_rank, specialize_jacobian};
use crate::presentations::{fox_jacobian, Presentation, Word};
use crate::series::{level_rank, strebel_check, strebel_check_skew, MagnusEmbedding, Method, Unsupported};

/// Checks the augmentation lower bound for both boundary maps at level `n`.
/// A `false` result is an internal inconsistency, not a property of `p`.
pub fn rank_inequality_audit(p: &Presentation, n: usize) -> Result<bool, Unsupported> {
    let level = level_rank(p, n)?;
    let ab = abelianization(p);
    if n == 0 || ab.b == 0 {
        return Ok(true);
    }
    let j = specialize_jacobian(&fox_jacobian(p), &ab, p.num_generators());
    if n == 1 || level.method == Method::StabilizedBelow {
        let m1 = boundary_column(p, &ab).transpose();
        return Ok(strebel_check(&m1).holds && strebel_check(&j).holds);
    }
    let magnus = MagnusEmbedding::new(&ab, &j);
    let tower = magnus.tower();
    let checks = [magnus.boundary_column().transpose(), magnus.jacobian(p)].map(|m| strebel_check_skew(tower, &m));
    Ok(checks.iter().all(|c| c.is_some_and(|c| c.holds)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InconclusiveReason {
    H2CertificateFailed,
    DependentImages,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum FreeSubgroupVerdict {
    FreeModuloOmega,
    Inconclusive { reasons: Vec<InconclusiveReason> },
}

/// Elements of `G` independent in `H_1(G;Q)`, in a group with a vanishing
/// `H_2` certificate, generate a free subgroup modulo `G^(omega)_H`.
pub fn free_subgroup_criterion(p: &Presentation, ws: &[Word]) -> FreeSubgroupVerdict {
    let ab = abelianization(p);
    let rows: Vec<Vec<BigRational>> = ws
        .iter()
        .map(|w| ab.project_word(w).into_iter().map(|x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut reasons = Vec::new();
    if !h2_vanish_cert(p) {
        reasons.push(InconclusiveReason::H2CertificateFailed);
    }
    if rational_rank(&rows, ab.b) != ws.len() {
        reasons.push(InconclusiveReason::DependentImages);
    }
    if reasons.is_empty() {
        FreeSubgroupVerdict::FreeModuloOmega
    } else {
        FreeSubgroupVerdict::Inconclusive { reasons }
    }
}
