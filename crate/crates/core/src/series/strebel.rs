use num_rational::BigRational;
use serde::Serialize;

use crate::laurent::{augmentation_rank, laurent_rank, rational_rank, LaurentPoly, Matrix};
use crate::skewfield::{skew_matrix_rank, ExtensionTower, SkewFieldElt};

/// A lower bound and the exact rank it bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StrebelCheck {
    pub bound: usize,
    pub exact: usize,
    pub holds: bool,
}

impl StrebelCheck {
    fn new(bound: usize, exact: usize) -> Self {
        StrebelCheck { bound, exact, holds: bound <= exact }
    }
}

/// Rank over `Q` of the augmented matrix: a lower bound for the rank over
/// the fraction field of any torsion-free elementary amenable quotient.
pub fn strebel_lower_bound(m: &Matrix<LaurentPoly>) -> usize {
    augmentation_rank(m)
}

/// Same bound for a matrix over the top level of a tower. `None` when an
/// entry is a genuine fraction rather than a group-ring element.
pub fn strebel_lower_bound_skew(tower: &ExtensionTower, m: &Matrix<SkewFieldElt>) -> Option<usize> {
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let row = (0..m.cols()).map(|j| tower.augmentation(m.get(i, j))).collect::<Option<Vec<_>>>()?;
        rows.push(row);
    }
    Some(rational_rank(&rows, m.cols()))
}

pub fn strebel_check(m: &Matrix<LaurentPoly>) -> StrebelCheck {
    StrebelCheck::new(strebel_lower_bound(m), laurent_rank(m))
}

pub fn strebel_check_skew(tower: &ExtensionTower, m: &Matrix<SkewFieldElt>) -> Option<StrebelCheck> {
    let bound = strebel_lower_bound_skew(tower, m)?;
    Some(StrebelCheck::new(bound, skew_matrix_rank(tower, m)))
}
