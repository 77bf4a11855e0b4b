use num_traits::{One, Signed};

use super::SkewError;
use crate::laurent::{laurent_det, laurent_mat_mul, LaurentPoly, Matrix};

/// The data of a split metabelian group `M x| Z^b` with `M` a free
/// `Z[Z^b]`-module of rank `r`.
///
/// Its rational group algebra is the iterated skew Laurent ring
/// `Q[M][s_1^{+-1}; sigma_1]...[s_b^{+-1}; sigma_b]`, where `sigma_k` acts on a
/// monomial `E[v]` of `Q[M]` by the action matrix of `t_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionTower {
    b: usize,
    r: usize,
    actions: Vec<Matrix<LaurentPoly>>,
    inverses: Vec<Matrix<LaurentPoly>>,
    /// `Some(e)` when the action of `t_k` is the scalar monomial `t^e`.
    scalar: Vec<Option<Vec<i64>>>,
}

fn identity(r: usize, b: usize) -> Matrix<LaurentPoly> {
    Matrix::from_fn(r, r, |i, j| if i == j { LaurentPoly::one(b) } else { LaurentPoly::zero(b) })
}

fn adjugate_inverse(a: &Matrix<LaurentPoly>) -> Result<Matrix<LaurentPoly>, SkewError> {
    let r = a.rows();
    let det = laurent_det(a);
    let det_inv = match det.monomial_inverse() {
        Some(inv) if det.terms().all(|(_, c)| c.abs().is_one()) => inv,
        _ => return Err(SkewError::InvalidTower(format!("action determinant {det} is not a unit"))),
    };
    if r == 1 {
        return Ok(Matrix::from_rows(vec![vec![det_inv]], 1));
    }
    let others = |skip: usize| (0..r).filter(move |&x| x != skip).collect::<Vec<_>>();
    Ok(Matrix::from_fn(r, r, |i, j| {
        let minor = a.select_rows(&others(j)).select_cols(&others(i));
        let c = laurent_det(&minor);
        let c = if (i + j) % 2 == 1 { -&c } else { c };
        &c * &det_inv
    }))
}

fn scalar_monomial(a: &Matrix<LaurentPoly>) -> Option<Vec<i64>> {
    let r = a.rows();
    if r == 0 {
        return None;
    }
    let d = a.get(0, 0);
    let (e, c) = d.leading_term()?;
    if !d.is_monomial() || !c.is_one() {
        return None;
    }
    for i in 0..r {
        for j in 0..r {
            let ok = if i == j { a.get(i, j) == d } else { a.get(i, j).is_zero() };
            if !ok {
                return None;
            }
        }
    }
    Some(e.clone())
}

impl ExtensionTower {
    /// Validates that each action is square, invertible over `Z[Z^b]` and
    /// that the actions commute.
    pub fn new(b: usize, r: usize, actions: Vec<Matrix<LaurentPoly>>) -> Result<Self, SkewError> {
        if actions.len() != b {
            return Err(SkewError::InvalidTower(format!("{} actions for {b} skew variables", actions.len())));
        }
        for a in &actions {
            if a.rows() != r || a.cols() != r {
                return Err(SkewError::InvalidTower("action matrix has the wrong size".into()));
            }
            if (0..r).any(|i| (0..r).any(|j| a.get(i, j).nvars() != b)) {
                return Err(SkewError::InvalidTower("action entries have the wrong variable count".into()));
            }
        }
        for k in 0..b {
            for l in k + 1..b {
                if laurent_mat_mul(&actions[k], &actions[l]) != laurent_mat_mul(&actions[l], &actions[k]) {
                    return Err(SkewError::InvalidTower(format!("actions {} and {} do not commute", k + 1, l + 1)));
                }
            }
        }
        let inverses = actions.iter().map(adjugate_inverse).collect::<Result<Vec<_>, _>>()?;
        let scalar = actions.iter().map(scalar_monomial).collect();
        Ok(ExtensionTower { b, r, actions, inverses, scalar })
    }

    /// `Z[Z^b]^r x| Z^b` with `t_k` acting by multiplication.
    pub fn standard(b: usize, r: usize) -> Self {
        let actions = (0..b)
            .map(|k| {
                let tk = LaurentPoly::var(b, k);
                Matrix::from_fn(r, r, |i, j| if i == j { tk.clone() } else { LaurentPoly::zero(b) })
            })
            .collect();
        ExtensionTower::new(b, r, actions).expect("standard tower is valid")
    }

    /// The free abelian group `Z^b`; every layer is commutative.
    pub fn commutative(b: usize) -> Self {
        ExtensionTower::standard(b, 0)
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn module_rank(&self) -> usize {
        self.r
    }

    pub fn actions(&self) -> &[Matrix<LaurentPoly>] {
        &self.actions
    }

    pub fn identity_action(&self) -> Matrix<LaurentPoly> {
        identity(self.r, self.b)
    }

    /// Applies `t_k^n` to a module vector.
    pub(crate) fn act(&self, k: usize, n: i64, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
        if n == 0 {
            return v.to_vec();
        }
        if let Some(e) = &self.scalar[k] {
            let shift: Vec<i64> = e.iter().map(|x| x * n).collect();
            return v.iter().map(|p| p.shift(&shift)).collect();
        }
        let m = if n > 0 { &self.actions[k] } else { &self.inverses[k] };
        let mut cur = v.to_vec();
        for _ in 0..n.unsigned_abs() {
            cur = (0..self.r)
                .map(|i| {
                    let mut acc = LaurentPoly::zero(self.b);
                    for (j, x) in cur.iter().enumerate() {
                        acc = &acc + &(m.get(i, j) * x);
                    }
                    acc
                })
                .collect();
        }
        cur
    }
}
