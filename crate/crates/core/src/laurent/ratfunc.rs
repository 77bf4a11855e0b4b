use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;

use super::poly::{laurent_gcd, LaurentPoly};
use super::snf::UniLaurent;
use super::LaurentError;

/// An element of the fraction field `Q(t_1, ..., t_b)`.
///
/// Normalized after every operation: the denominator's leading coefficient
/// is positive, rational content and monomial factors of the denominator are
/// moved into the numerator, and numerator and denominator are made coprime.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Ok(RatFunc { num, den }.normalized())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let n = p.nvars();
        RatFunc { num: p, den: LaurentPoly::one(n) }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(LaurentPoly::one(nvars))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self, LaurentError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    fn normalized(self) -> Self {
        let nv = self.num.nvars().max(self.den.nvars());
        if self.num.is_zero() {
            return RatFunc::zero(nv);
        }
        let (mut num, mut den) = (self.num, self.den);
        if let Some(q) = num.exact_div(&den) {
            return RatFunc::from_poly(q);
        }
        let g = if nv == 1 {
            UniLaurent::new(num.clone()).gcd(&UniLaurent::new(den.clone())).0
        } else {
            laurent_gcd(&num, &den)
        };
        if !g.is_one() {
            num = num.exact_div(&g).expect("gcd divides");
            den = den.exact_div(&g).expect("gcd divides");
        }
        // Move the unit part of the denominator (c * t^k) to the numerator.
        let lo: Vec<i64> = den.min_exponents().iter().map(|x| -x).collect();
        let mut c = den.content();
        if den.leading_term().map(|(_, x)| x.is_negative()).unwrap_or(false) {
            c = -c;
        }
        let ci = c.recip();
        den = den.shift(&lo).scale(&ci);
        num = num.shift(&lo).scale(&ci);
        RatFunc { num, den }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc { num: &self.num + &rhs.num, den: self.den.clone() }.normalized();
        }
        RatFunc { num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den), den: &self.den * &rhs.den }.normalized()
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc { num: &self.num * &rhs.num, den: &self.den * &rhs.den }.normalized()
    }
}

impl Div for &RatFunc {
    type Output = Result<RatFunc, LaurentError>;
    fn div(self, rhs: &RatFunc) -> Result<RatFunc, LaurentError> {
        Ok(self * &rhs.inv()?)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Rank over `Q(t_1, ..., t_b)` by ordinary Gaussian elimination on
/// fractions; an independent route to [`super::laurent_rank`].
pub fn ratfunc_rank(rows: &[Vec<RatFunc>]) -> usize {
    let mut a: Vec<Vec<RatFunc>> = rows.to_vec();
    let cols = a.first().map(Vec::len).unwrap_or(0);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let inv = a[rank][col].inv().expect("nonzero pivot");
        for i in rank + 1..a.len() {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] * &inv;
            for j in col..cols {
                let v = &a[i][j] - &(&f * &a[rank][j]);
                a[i][j] = v;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: &str, d: &str, v: usize) -> RatFunc {
        RatFunc::new(LaurentPoly::parse(n, v).unwrap(), LaurentPoly::parse(d, v).unwrap()).unwrap()
    }

    #[test]
    fn univariate_reduction() {
        let x = rf("t^2 - 1", "2*t - 2", 1);
        assert_eq!(x.den().to_string(), "1");
        assert_eq!(x.num().to_string(), "1/2 + 1/2*t");
        let y = rf("t", "t^2 - 3*t", 1);
        assert_eq!(y.to_string(), "(1) / (-3 + t)");
    }

    #[test]
    fn field_laws() {
        let a = rf("t1 + t2", "t1 - 1", 2);
        let b = rf("3", "t2", 2);
        let one = RatFunc::one(2);
        assert_eq!(&a * &a.inv().unwrap(), one);
        assert_eq!(&(&a + &b) - &b, a);
        assert!(RatFunc::new(LaurentPoly::one(1), LaurentPoly::zero(1)).is_err());
        assert!(RatFunc::zero(2).inv().is_err());
    }
}
