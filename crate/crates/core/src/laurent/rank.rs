use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::matrix::Matrix;
use super::poly::{invmod, mulmod, LaurentPoly};

/// A prime above 2^31 used for the modular pre-check.
pub const FILTER_PRIME: u64 = 4_294_967_291;

/// Outcome of an exact rank computation, with enough data to re-check it:
/// the pivot positions of the fraction-free elimination (original row and
/// column indices) and the rank at a random point mod [`FILTER_PRIME`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankWitness {
    pub rank: usize,
    pub pivots: Vec<(usize, usize)>,
    pub modular_rank: Option<usize>,
}

/// Deterministic pseudo-random evaluation point, derived from the matrix shape.
fn filter_point(nvars: usize, salt: u64) -> Vec<u64> {
    let mut state = 0x9E37_79B9_7F4A_7C15u64 ^ salt;
    (0..nvars)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            2 + state % (FILTER_PRIME - 3)
        })
        .collect()
}

fn modular_rank(m: &Matrix<LaurentPoly>, nvars: usize) -> Option<usize> {
    let p = FILTER_PRIME;
    let point = filter_point(nvars, (m.rows() as u64) << 32 | m.cols() as u64);
    let mut a: Vec<Vec<u64>> = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for j in 0..m.cols() {
            row.push(m.get(i, j).eval_mod(&point, p)?);
        }
        a.push(row);
    }
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(piv, rank);
        let inv = invmod(a[rank][col], p)?;
        for i in rank + 1..a.len() {
            if a[i][col] == 0 {
                continue;
            }
            let f = mulmod(a[i][col], inv, p);
            for j in col..m.cols() {
                let sub = mulmod(f, a[rank][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn nvars_of(m: &Matrix<LaurentPoly>) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        0
    } else {
        m.get(0, 0).nvars()
    }
}

/// Fraction-free (Bareiss) forward elimination. Pivots are chosen per
/// column by fewest terms. Returns the eliminated matrix and pivots, the
/// latter as `(original row, column)`.
fn bareiss(m: &Matrix<LaurentPoly>) -> (Matrix<LaurentPoly>, Vec<(usize, usize)>) {
    let nv = nvars_of(m);
    let mut a = m.clone();
    let mut order: Vec<usize> = (0..m.rows()).collect();
    let mut prev = LaurentPoly::one(nv);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..a.cols() {
        if rank == a.rows() {
            break;
        }
        let piv =
            (rank..a.rows()).filter(|&i| !a.get(i, col).is_zero()).min_by_key(|&i| (a.get(i, col).num_terms(), i));
        let Some(piv) = piv else { continue };
        a.swap_rows(piv, rank);
        order.swap(piv, rank);
        let pv = a.get(rank, col).clone();
        for i in rank + 1..a.rows() {
            let lead = a.get(i, col).clone();
            for j in col + 1..a.cols() {
                let num = &(&pv * a.get(i, j)) - &(&lead * a.get(rank, j));
                let v = num.exact_div(&prev).expect("Bareiss step must divide exactly");
                a.set(i, j, v);
            }
            a.set(i, col, LaurentPoly::zero(nv));
        }
        prev = pv;
        pivots.push((order[rank], col));
        rank += 1;
    }
    (a, pivots)
}

/// Exact rank over the fraction field `Q(t_1, ..., t_b)`, with witness.
pub fn laurent_rank_witness(m: &Matrix<LaurentPoly>) -> RankWitness {
    let modular = modular_rank(m, nvars_of(m));
    let (_, pivots) = bareiss(m);
    let rank = pivots.len();
    if let Some(r) = modular {
        assert!(r <= rank, "specialization cannot raise rank ({r} > {rank})");
    }
    RankWitness { rank, pivots, modular_rank: modular }
}

/// Rank over the fraction field of the Laurent polynomial ring.
pub fn laurent_rank(m: &Matrix<LaurentPoly>) -> usize {
    laurent_rank_witness(m).rank
}

/// Determinant of a square matrix by fraction-free elimination.
pub fn laurent_det(m: &Matrix<LaurentPoly>) -> LaurentPoly {
    assert_eq!(m.rows(), m.cols(), "determinant of non-square matrix");
    let n = m.rows();
    let nv = nvars_of(m);
    if n == 0 {
        return LaurentPoly::one(nv);
    }
    let mut a = m.clone();
    let mut prev = LaurentPoly::one(nv);
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
            return LaurentPoly::zero(nv);
        };
        if p != k {
            a.swap_rows(p, k);
            negate = !negate;
        }
        let pv = a.get(k, k).clone();
        for i in k + 1..n {
            let lead = a.get(i, k).clone();
            for j in k + 1..n {
                let num = &(&pv * a.get(i, j)) - &(&lead * a.get(k, j));
                a.set(i, j, num.exact_div(&prev).expect("Bareiss step must divide exactly"));
            }
            a.set(i, k, LaurentPoly::zero(nv));
        }
        prev = pv;
    }
    let d = a.get(n - 1, n - 1).clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// A basis of the right null space `{x : M x = 0}` over the fraction field,
/// returned as the columns of an `cols x (cols - rank)` polynomial matrix
/// (Cramer's rule on the pivot block, so no fractions appear).
pub fn right_null_space(m: &Matrix<LaurentPoly>, nvars: usize) -> Matrix<LaurentPoly> {
    let n = m.cols();
    let (_, pivots) = bareiss(m);
    let rows: Vec<usize> = pivots.iter().map(|p| p.0).collect();
    let pcols: Vec<usize> = pivots.iter().map(|p| p.1).collect();
    let free: Vec<usize> = (0..n).filter(|c| !pcols.contains(c)).collect();
    let block = m.select_rows(&rows).select_cols(&pcols);
    let det = laurent_det(&block);
    let mut basis = Matrix::from_fn(n, free.len(), |_, _| LaurentPoly::zero(nvars));
    for (k, &f) in free.iter().enumerate() {
        basis.set(f, k, det.clone());
        let col_f: Vec<LaurentPoly> = rows.iter().map(|&r| m.get(r, f).clone()).collect();
        for (idx, &pc) in pcols.iter().enumerate() {
            let mut replaced = block.clone();
            for (i, v) in col_f.iter().enumerate() {
                replaced.set(i, idx, v.clone());
            }
            basis.set(pc, k, -&laurent_det(&replaced));
        }
        // Strip rational content so coefficients stay small.
        let content: Vec<LaurentPoly> = (0..n).map(|i| basis.get(i, k).clone()).collect();
        let mut g = BigRational::zero();
        for p in &content {
            for (_, c) in p.terms() {
                g = if g.is_zero() { c.clone() } else { gcd_q(&g, c) };
            }
        }
        if !g.is_zero() {
            let inv = g.abs().recip();
            for i in 0..n {
                let v = basis.get(i, k).scale(&inv);
                basis.set(i, k, v);
            }
        }
    }
    basis
}

/// Matrix product over the Laurent ring.
pub fn laurent_mat_mul(a: &Matrix<LaurentPoly>, b: &Matrix<LaurentPoly>) -> Matrix<LaurentPoly> {
    assert_eq!(a.cols(), b.rows(), "dimension mismatch");
    let nv = nvars_of(a).max(nvars_of(b));
    Matrix::from_fn(a.rows(), b.cols(), |i, j| {
        let mut acc = LaurentPoly::zero(nv);
        for k in 0..a.cols() {
            acc = &acc + &(a.get(i, k) * b.get(k, j));
        }
        acc
    })
}

fn gcd_q(a: &BigRational, b: &BigRational) -> BigRational {
    let n = a.numer().gcd(b.numer());
    let d = a.denom().lcm(b.denom());
    BigRational::new(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    #[test]
    fn basic_ranks() {
        let m = Matrix::from_rows(vec![vec![lp("t1 - 1", 2), lp("t2 - 1", 2)]], 2);
        assert_eq!(laurent_rank(&m), 1);
        let z = Matrix::from_rows(vec![vec![LaurentPoly::zero(2); 3]; 2], 3);
        assert_eq!(laurent_rank(&z), 0);
        let e: Matrix<LaurentPoly> = Matrix::from_rows(vec![], 4);
        assert_eq!(laurent_rank(&e), 0);
    }

    #[test]
    fn dependent_rows() {
        let a = lp("t1 - 1", 2);
        let b = lp("t2 - 1", 2);
        let c = lp("t1*t2 + 3", 2);
        let m =
            Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![&a * &c, &b * &c], vec![b.clone(), a.clone()]], 2);
        let w = laurent_rank_witness(&m);
        assert_eq!(w.rank, 2);
        assert_eq!(w.modular_rank, Some(2));
        let m2 = m.select_rows(&[0, 1]);
        assert_eq!(laurent_rank(&m2), 1);
    }

    #[test]
    fn determinant() {
        let m = Matrix::from_rows(vec![vec![lp("t", 1), lp("1", 1)], vec![lp("1", 1), lp("t", 1)]], 2);
        assert_eq!(laurent_det(&m).to_string(), "-1 + t^2");
    }

    #[test]
    fn null_space_annihilates() {
        let m = Matrix::from_rows(vec![vec![lp("1 - t1", 2), lp("t2 + 2", 2), lp("t1*t2", 2)]], 3);
        let ns = right_null_space(&m, 2);
        assert_eq!(ns.cols(), 2);
        let prod = laurent_mat_mul(&m, &ns);
        for j in 0..2 {
            assert!(prod.get(0, j).is_zero());
        }
        let rank = laurent_rank(&ns);
        assert_eq!(rank, 2);
    }
}
