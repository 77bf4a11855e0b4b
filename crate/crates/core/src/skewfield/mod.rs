//! Iterated Ore fraction fields of split metabelian groups `M x| Z^b`.
//!
//! The group algebra of `M` is [`GAElt`]; its fraction field is level 0.
//! Level `k` is the left Ore fraction field of the skew Laurent ring in
//! `s_k` over level `k - 1`, with `s_k a = sigma_k(a) s_k`. Fractions are
//! written `den^-1 * num`.

mod algebra;
mod field;
mod rank;
mod tower;

pub use algebra::{BaseFrac, GAElt, MElt};
pub use field::{LayerFrac, SkewFieldElt, SkewPoly};
pub use rank::{skew_matrix_rank, skew_rank_witness, PivotOrder, SkewRankWitness};
pub use tower::ExtensionTower;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkewError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid tower: {0}")]
    InvalidTower(String),
}

pub fn ga_mul(a: &GAElt, b: &GAElt) -> GAElt {
    a.mul(b)
}

/// `sigma_k(x)` for `x` below layer `k` (layers are numbered from 1).
pub fn sigma_apply(tower: &ExtensionTower, k: usize, x: &SkewFieldElt) -> SkewFieldElt {
    tower.sigma(k, 1, x)
}

pub fn skew_mul(tower: &ExtensionTower, p: &SkewPoly, q: &SkewPoly) -> SkewPoly {
    tower.poly_mul(p, q)
}

/// `p = q * quot + rem` with `rem` of smaller span than `q`.
pub fn skew_left_divmod(tower: &ExtensionTower, p: &SkewPoly, q: &SkewPoly) -> Result<(SkewPoly, SkewPoly), SkewError> {
    tower.left_divmod(p, q)
}

/// `(a', b')` with `a' b = b' a`, `b' != 0`.
pub fn ore_pair(tower: &ExtensionTower, a: &SkewPoly, b: &SkewPoly) -> Result<(SkewPoly, SkewPoly), SkewError> {
    tower.ore_pair(a, b)
}

pub fn frac_add(tower: &ExtensionTower, x: &SkewFieldElt, y: &SkewFieldElt) -> SkewFieldElt {
    tower.add(x, y)
}

pub fn frac_mul(tower: &ExtensionTower, x: &SkewFieldElt, y: &SkewFieldElt) -> SkewFieldElt {
    tower.mul(x, y)
}

pub fn frac_inv(tower: &ExtensionTower, x: &SkewFieldElt) -> Result<SkewFieldElt, SkewError> {
    tower.inv(x)
}

#[cfg(test)]
mod tests;
