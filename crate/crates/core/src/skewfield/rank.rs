use serde::Serialize;

use super::field::SkewFieldElt;
use super::tower::ExtensionTower;
use crate::laurent::Matrix;

/// Tie-breaking order for pivot search; the rank does not depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PivotOrder {
    #[default]
    Forward,
    Reversed,
}

/// Rank together with the pivot positions `(row, column)` in elimination order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewRankWitness {
    pub rank: usize,
    pub pivots: Vec<(usize, usize)>,
}

/// Rank over the skew field: dimension of the left span of the rows.
pub fn skew_matrix_rank(tower: &ExtensionTower, m: &Matrix<SkewFieldElt>) -> usize {
    skew_rank_witness(tower, m, PivotOrder::Forward).rank
}

/// Gaussian elimination with complete pivoting: each step takes the smallest
/// remaining entry, so unit (monomial) entries are used first and keep the
/// remaining entries polynomial.
pub fn skew_rank_witness(tower: &ExtensionTower, m: &Matrix<SkewFieldElt>, order: PivotOrder) -> SkewRankWitness {
    let mut a = m.to_rows();
    let mut rows: Vec<usize> = (0..m.rows()).collect();
    let mut cols: Vec<usize> = (0..m.cols()).collect();
    if order == PivotOrder::Reversed {
        rows.reverse();
        cols.reverse();
    }
    let mut pivots = Vec::new();
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (pi, &i) in rows.iter().enumerate() {
            for (pj, &j) in cols.iter().enumerate() {
                if a[i][j].is_zero() {
                    continue;
                }
                let s = a[i][j].size();
                if best.is_none_or(|(bs, _, _)| s < bs) {
                    best = Some((s, pi, pj));
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        let (i, j) = (rows.remove(pi), cols.remove(pj));
        let inv = tower.inv(&a[i][j]).expect("nonzero pivot");
        let prow = a[i].clone();
        for &r in &rows {
            if a[r][j].is_zero() {
                continue;
            }
            let f = tower.mul(&a[r][j], &inv);
            for &c in &cols {
                if prow[c].is_zero() {
                    continue;
                }
                a[r][c] = tower.sub(&a[r][c], &tower.mul(&f, &prow[c]));
            }
            a[r][j] = tower.zero(a[r][j].level());
        }
        pivots.push((i, j));
    }
    SkewRankWitness { rank: pivots.len(), pivots }
}
