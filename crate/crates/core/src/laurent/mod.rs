//! Exact commutative algebra: integer and rational matrices, Smith normal
//! form, multivariable Laurent polynomials and their fraction field,
//! fraction-free rank, abelianization and Alexander data.

mod abelian;
mod alexander;
mod matrix;
mod mpoly;
mod poly;
mod rank;
mod ratfunc;
mod snf;

pub use abelian::{abelianization, boundary_column, specialize, specialize_jacobian, AbelianizationData};
pub use alexander::{alexander_data, alexander_data_with, AlexanderData};
pub use matrix::{is_unimodular, IntMatrix, Matrix, QMatrix};
pub(crate) use mpoly::{gcd_limited as mpoly_gcd_limited, MPoly};
pub use poly::{default_var_names, laurent_gcd, LaurentPoly};
pub use rank::{
    laurent_det, laurent_mat_mul, laurent_rank, laurent_rank_witness, right_null_space, RankWitness, FILTER_PRIME,
};
pub use ratfunc::{ratfunc_rank, RatFunc};
pub use snf::{smith_normal_form, snf_int, snf_laurent, EuclideanDomain, Snf, UniLaurent};

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("expected first Betti number {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Rank over Q of the augmentation (every monomial sent to 1).
pub fn augmentation_rank(m: &Matrix<LaurentPoly>) -> usize {
    m.map(|p| p.augmentation()).rank()
}

/// Rank over Q of a rational matrix given by rows.
pub fn rational_rank(rows: &[Vec<BigRational>], cols: usize) -> usize {
    if rows.iter().all(|r| r.iter().all(Zero::is_zero)) {
        return 0;
    }
    QMatrix::from_rows(rows.to_vec(), cols).rank()
}

pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn serialize_display_vec<T: std::fmt::Display, S: serde::Serializer>(
    v: &[T],
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub(crate) fn serialize_display_matrix<T: std::fmt::Display + Clone, S: serde::Serializer>(
    m: &Matrix<T>,
    s: S,
) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.rows()))?;
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}
