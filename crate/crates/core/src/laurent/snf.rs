use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, Matrix};
use super::poly::LaurentPoly;

/// The operations Smith normal form needs from a Euclidean domain.
pub trait EuclideanDomain: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// `self = d * q + r` with `norm(r) < norm(d)` or `r = 0`.
    fn div_rem(&self, d: &Self) -> (Self, Self);
    fn norm(&self) -> u64;
    /// Returns `(u, u^-1)` with `u * self` in normal form.
    fn normalizing_unit(&self) -> (Self, Self);

    fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }
}

impl EuclideanDomain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        self.div_mod_floor(d)
    }
    fn norm(&self) -> u64 {
        self.abs().try_into().unwrap_or(u64::MAX)
    }
    fn normalizing_unit(&self) -> (Self, Self) {
        if self.is_negative() {
            (BigInt::from(-1), BigInt::from(-1))
        } else {
            (BigInt::from(1), BigInt::from(1))
        }
    }
}

/// An element of `Q[t, t^-1]`, the principal ideal domain used for the
/// single-variable Alexander module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniLaurent(pub LaurentPoly);

impl UniLaurent {
    pub fn new(p: LaurentPoly) -> Self {
        assert_eq!(p.nvars(), 1, "UniLaurent needs one variable");
        UniLaurent(p)
    }

    fn lo(&self) -> i64 {
        self.0.min_exponents()[0]
    }

    fn hi(&self) -> i64 {
        self.0.max_exponents()[0]
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !EuclideanDomain::is_zero(&b) {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        let (u, _) = a.normalizing_unit();
        EuclideanDomain::mul(&u, &a)
    }
}

impl EuclideanDomain for UniLaurent {
    fn zero() -> Self {
        UniLaurent(LaurentPoly::zero(1))
    }
    fn one() -> Self {
        UniLaurent(LaurentPoly::one(1))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        UniLaurent(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        UniLaurent(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        UniLaurent(&self.0 * &o.0)
    }
    fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.0.is_zero(), "division by zero");
        if self.0.is_zero() {
            return (Self::zero(), Self::zero());
        }
        // Work with d' = d t^-lo(d), whose constant term is nonzero, and
        // reduce until the remainder lies in degrees [lo(d), hi(d)).
        let (dlo, dhi) = (d.lo(), d.hi());
        let lead = d.0.leading_term().map(|(_, c)| c.clone()).unwrap();
        let trail = d.0.trailing_term().map(|(_, c)| c.clone()).unwrap();
        let mut quot = LaurentPoly::zero(1);
        let mut rem = self.0.clone();
        while let Some((e, c)) = rem.leading_term().map(|(e, c)| (e[0], c.clone())) {
            if e < dhi {
                break;
            }
            let m = LaurentPoly::monomial(1, vec![e - dhi], &c / &lead);
            rem = &rem - &(&d.0 * &m);
            quot = &quot + &m;
        }
        while let Some((e, c)) = rem.trailing_term().map(|(e, c)| (e[0], c.clone())) {
            if e >= dlo {
                break;
            }
            let m = LaurentPoly::monomial(1, vec![e - dlo], &c / &trail);
            rem = &rem - &(&d.0 * &m);
            quot = &quot + &m;
        }
        (UniLaurent(quot), UniLaurent(rem))
    }
    fn norm(&self) -> u64 {
        if self.0.is_zero() {
            0
        } else {
            (self.hi() - self.lo()) as u64
        }
    }
    fn normalizing_unit(&self) -> (Self, Self) {
        if self.0.is_zero() {
            return (Self::one(), Self::one());
        }
        let lo = self.lo();
        let lead = self.0.leading_term().map(|(_, c)| c.clone()).unwrap();
        let u = LaurentPoly::monomial(1, vec![-lo], lead.recip());
        let ui = LaurentPoly::monomial(1, vec![lo], lead);
        (UniLaurent(u), UniLaurent(ui))
    }
}

/// `U * M * V = D` with `U`, `V` invertible over the ring and `D` diagonal,
/// each diagonal entry dividing the next.
#[derive(Clone, Debug)]
pub struct Snf<R> {
    pub u: Matrix<R>,
    pub d: Matrix<R>,
    pub v: Matrix<R>,
}

impl<R: EuclideanDomain> Snf<R> {
    pub fn diagonal(&self) -> Vec<R> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

fn ident<R: EuclideanDomain>(n: usize) -> Matrix<R> {
    Matrix::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
}

/// row_a <- row_a - q * row_b
fn row_axpy<R: EuclideanDomain>(m: &mut Matrix<R>, a: usize, b: usize, q: &R) {
    for j in 0..m.cols() {
        let v = m.get(a, j).sub(&q.mul(m.get(b, j)));
        m.set(a, j, v);
    }
}

/// col_a <- col_a - col_b * q
fn col_axpy<R: EuclideanDomain>(m: &mut Matrix<R>, a: usize, b: usize, q: &R) {
    for i in 0..m.rows() {
        let v = m.get(i, a).sub(&m.get(i, b).mul(q));
        m.set(i, a, v);
    }
}

fn scale_row<R: EuclideanDomain>(m: &mut Matrix<R>, a: usize, u: &R) {
    for j in 0..m.cols() {
        let v = u.mul(m.get(a, j));
        m.set(a, j, v);
    }
}

/// Smith normal form over any Euclidean domain.
pub fn smith_normal_form<R: EuclideanDomain>(m: &Matrix<R>) -> Snf<R> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = ident::<R>(rows);
    let mut v = ident::<R>(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize, u64)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = d.get(i, j);
                if !x.is_zero() {
                    let n = x.norm();
                    if best.map(|b| n < b.2).unwrap_or(true) {
                        best = Some((i, j, n));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        let mut dirty = false;
        for i in t + 1..rows {
            if d.get(i, t).is_zero() {
                continue;
            }
            let (qt, r) = d.get(i, t).div_rem(d.get(t, t));
            row_axpy(&mut d, i, t, &qt);
            row_axpy(&mut u, i, t, &qt);
            if !r.is_zero() {
                dirty = true;
            }
        }
        for j in t + 1..cols {
            if d.get(t, j).is_zero() {
                continue;
            }
            let (qt, r) = d.get(t, j).div_rem(d.get(t, t));
            col_axpy(&mut d, j, t, &qt);
            col_axpy(&mut v, j, t, &qt);
            if !r.is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }
        // Divisibility: fold any row whose entries the pivot does not divide.
        let pivot = d.get(t, t).clone();
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !pivot.divides(d.get(i, j))));
        if let Some(i) = bad {
            let neg_one = R::zero().sub(&R::one());
            row_axpy(&mut d, t, i, &neg_one);
            row_axpy(&mut u, t, i, &neg_one);
            continue;
        }
        let (unit, _) = pivot.normalizing_unit();
        scale_row(&mut d, t, &unit);
        scale_row(&mut u, t, &unit);
        t += 1;
    }
    Snf { u, d, v }
}

/// Integer Smith normal form: `U * M * V = D`, `U`, `V` unimodular,
/// nonnegative divisor chain on the diagonal.
pub fn snf_int(m: &IntMatrix) -> Snf<BigInt> {
    smith_normal_form(m)
}

/// Smith normal form over `Q[t, t^-1]`; diagonal entries are normalized
/// (lowest exponent 0, monic).
pub fn snf_laurent(m: &Matrix<LaurentPoly>) -> Snf<UniLaurent> {
    smith_normal_form(&m.map(|p| UniLaurent::new(p.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::matrix::is_unimodular;

    fn check(m: &IntMatrix) -> Snf<BigInt> {
        let s = snf_int(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert!(is_unimodular(&s.u) && is_unimodular(&s.v));
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(EuclideanDomain::divides(&w[0], &w[1]), "{diag:?}");
        }
        assert!(diag.iter().all(|x| !x.is_negative()));
        s
    }

    #[test]
    fn small_cases() {
        let s = check(&IntMatrix::from_i64(&[vec![2, 4], vec![6, 8]], 2));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        let s = check(&IntMatrix::identity(2));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(1)]);
        let s = check(&IntMatrix::zeros(2, 3));
        assert_eq!(s.rank(), 0);
        let s = check(&IntMatrix::zeros(0, 3));
        assert!(s.diagonal().is_empty());
        let s = check(&IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]], 2));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn laurent_division() {
        let p = UniLaurent::new(LaurentPoly::parse("t^-2 + 3*t + t^4", 1).unwrap());
        let d = UniLaurent::new(LaurentPoly::parse("t^-1 - 2 + t", 1).unwrap());
        let (qq, r) = p.div_rem(&d);
        assert_eq!(d.mul(&qq).add(&r), p);
        assert!(r.norm() < d.norm() || r.is_zero());
    }

    #[test]
    fn laurent_gcd() {
        let a = UniLaurent::new(LaurentPoly::parse("t^2 - 1", 1).unwrap());
        let b = UniLaurent::new(LaurentPoly::parse("t^-1 - 1", 1).unwrap());
        assert_eq!(a.gcd(&b).0.to_string(), "-1 + t");
    }
}
