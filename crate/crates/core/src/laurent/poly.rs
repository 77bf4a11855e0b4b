use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::mpoly::{gcd as mpoly_gcd, MPoly};
use super::LaurentError;

/// A Laurent polynomial in `nvars` commuting variables with rational
/// coefficients. Terms are keyed by exponent vector; zero coefficients are
/// never stored, and iteration is in lexicographic exponent order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigRational>,
}

pub(crate) fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, q(c))
    }

    pub fn monomial(nvars: usize, exps: Vec<i64>, c: BigRational) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { nvars, terms }
    }

    /// The variable `t_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigRational::one())
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, BigRational)>,
    {
        let mut p = LaurentPoly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: &BigRational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Vec<i64>, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Lexicographically smallest term.
    pub fn trailing_term(&self) -> Option<(&Vec<i64>, &BigRational)> {
        self.terms.iter().next()
    }

    pub fn min_exponents(&self) -> Vec<i64> {
        let mut m = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (a, &b) in m.iter_mut().zip(e) {
                *a = (*a).min(b);
            }
        }
        if self.is_zero() {
            vec![0; self.nvars]
        } else {
            m
        }
    }

    pub fn max_exponents(&self) -> Vec<i64> {
        let mut m = vec![i64::MIN; self.nvars];
        for e in self.terms.keys() {
            for (a, &b) in m.iter_mut().zip(e) {
                *a = (*a).max(b);
            }
        }
        if self.is_zero() {
            vec![0; self.nvars]
        } else {
            m
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Multiplies by the monomial `t^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Sum of coefficients: the image under every `t_i -> 1`.
    pub fn augmentation(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// Substitutes monomials: `t_i -> t^{images[i]}` in a ring with
    /// `target_vars` variables.
    pub fn substitute_monomials(&self, images: &[Vec<i64>], target_vars: usize) -> Self {
        let mut out = LaurentPoly::zero(target_vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0i64; target_vars];
            for (k, &x) in e.iter().enumerate() {
                for (j, v) in images[k].iter().enumerate() {
                    ne[j] += x * v;
                }
            }
            out.add_term(ne, c);
        }
        out
    }

    /// Integer power; negative exponents only for monomials.
    pub fn pow(&self, k: i64) -> Option<Self> {
        if k < 0 {
            let inv = self.monomial_inverse()?;
            return inv.pow(-k);
        }
        let mut acc = LaurentPoly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        Some(acc)
    }

    pub fn monomial_inverse(&self) -> Option<Self> {
        if !self.is_monomial() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(LaurentPoly::monomial(self.nvars, e.iter().map(|x| -x).collect(), c.recip()))
    }

    /// Exact division in the Laurent ring; `None` when `d` does not divide.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero(self.nvars));
        }
        if let Some(inv) = d.monomial_inverse() {
            return Some(self * &inv);
        }
        let (lo_s, hi_s) = (self.min_exponents(), self.max_exponents());
        let (lo_d, hi_d) = (d.min_exponents(), d.max_exponents());
        let lo: Vec<i64> = lo_s.iter().zip(&lo_d).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = hi_s.iter().zip(&hi_d).map(|(a, b)| a - b).collect();
        let (de, dc) = d.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.nvars);
        while let Some((re, rc)) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            let e: Vec<i64> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            if e.iter().zip(lo.iter().zip(&hi)).any(|(x, (l, h))| x < l || x > h) {
                return None;
            }
            let c = &rc / &dc;
            let t = LaurentPoly::monomial(self.nvars, e, c);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Some(quot)
    }

    /// Content (positive rational gcd of coefficients).
    pub fn content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return BigRational::one();
        }
        BigRational::new(num, den)
    }

    /// Integer-coefficient primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_term().map(|(_, x)| x.is_negative()).unwrap_or(false) {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Normalizes a unit ambiguity `c * t^k`: lowest exponent in every
    /// variable becomes 0, coefficients integral and primitive, leading
    /// coefficient positive.
    pub fn normalize_unit(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lo: Vec<i64> = self.min_exponents().iter().map(|x| -x).collect();
        self.shift(&lo).primitive_part()
    }

    /// Evaluation at a point modulo a prime; `None` if a denominator vanishes.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> Option<u64> {
        let mut acc: u64 = 0;
        let pb = BigInt::from(p);
        for (e, c) in &self.terms {
            let num = c.numer().mod_floor(&pb);
            let den = c.denom().mod_floor(&pb);
            let num: u64 = num.try_into().ok()?;
            let den: u64 = den.try_into().ok()?;
            if den == 0 {
                return None;
            }
            let mut v = mulmod(num, invmod(den, p)?, p);
            for (k, &x) in e.iter().enumerate() {
                let base = if x >= 0 { point[k] } else { invmod(point[k], p)? };
                v = mulmod(v, powmod(base, x.unsigned_abs(), p), p);
            }
            acc = (acc + v) % p;
        }
        Some(acc)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { names[i].clone() } else { format!("{}^{}", names[i], x) })
                .collect();
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    out.push_str(&a.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    /// Parses the text form produced by `Display`.
    pub fn parse(text: &str, nvars: usize) -> Result<LaurentPoly, LaurentError> {
        Parser::new(text, nvars).parse()
    }
}

/// Greatest common divisor in the Laurent ring, normalized like
/// [`LaurentPoly::normalize_unit`]. `gcd(0, 0) = 0`.
pub fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let n = a.nvars.max(b.nvars);
    if a.is_zero() && b.is_zero() {
        return LaurentPoly::zero(n);
    }
    let lo: Vec<i64> = (0..n).map(|i| a.terms.keys().chain(b.terms.keys()).map(|e| e[i]).min().unwrap_or(0)).collect();
    let to_m = |p: &LaurentPoly| {
        MPoly::from_terms(
            n,
            p.terms.iter().map(|(e, c)| (e.iter().zip(&lo).map(|(x, l)| (x - l) as u32).collect(), c.clone())),
        )
    };
    let g = mpoly_gcd(&to_m(a), &to_m(b));
    LaurentPoly::from_terms(n, g.terms().map(|(e, c)| (e.iter().map(|&x| x as i64).collect(), c.clone())))
        .normalize_unit()
}

pub fn default_var_names(nvars: usize) -> Vec<String> {
    if nvars == 1 {
        vec!["t".to_string()]
    } else {
        (1..=nvars).map(|i| format!("t{i}")).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&default_var_names(self.nvars)))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut big, small) =
            if self.terms.len() >= rhs.terms.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (e, c) in &small.terms {
            big.add_term(e.clone(), c);
        }
        big
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), &-c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars.max(rhs.nvars));
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, &(ca * cb));
            }
        }
        out
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn invmod(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        None
    } else {
        Some(powmod(a, p - 2, p))
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    nvars: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, nvars: usize) -> Self {
        Parser { chars: text.chars().collect(), pos: 0, nvars, text }
    }

    fn err(&self, msg: &str) -> LaurentError {
        LaurentError::Parse(format!("{msg} at position {} in `{}`", self.pos + 1, self.text))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        if matches!(self.peek(), Some('-')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        match s.parse::<BigInt>() {
            Ok(v) => Some(v),
            Err(_) => {
                self.pos = start;
                None
            }
        }
    }

    fn variable(&mut self) -> Result<usize, LaurentError> {
        if self.peek() != Some('t') {
            return Err(self.err("expected variable"));
        }
        self.pos += 1;
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let idx = if digits.is_empty() {
            if self.nvars != 1 {
                return Err(self.err("bare `t` needs exactly one variable"));
            }
            0
        } else {
            let k: usize = digits.parse().map_err(|_| self.err("bad variable index"))?;
            if k == 0 || k > self.nvars {
                return Err(self.err("variable index out of range"));
            }
            k - 1
        };
        Ok(idx)
    }

    fn term(&mut self) -> Result<(Vec<i64>, BigRational), LaurentError> {
        self.skip_ws();
        let mut coeff = BigRational::one();
        let mut exps = vec![0i64; self.nvars];
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let n = self.integer().ok_or_else(|| self.err("bad integer"))?;
            let mut c = BigRational::from_integer(n);
            if self.peek() == Some('/') {
                self.pos += 1;
                let d = self.integer().ok_or_else(|| self.err("bad denominator"))?;
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                c /= BigRational::from_integer(d);
            }
            coeff = c;
            self.skip_ws();
            if self.peek() != Some('*') {
                return Ok((exps, coeff));
            }
            self.pos += 1;
            self.skip_ws();
        }
        loop {
            let v = self.variable()?;
            let mut e = 1i64;
            if self.peek() == Some('^') {
                self.pos += 1;
                let k = self.integer().ok_or_else(|| self.err("bad exponent"))?;
                e = i64::try_from(k).map_err(|_| self.err("exponent too large"))?;
            }
            exps[v] += e;
            self.skip_ws();
            if self.peek() != Some('*') {
                break;
            }
            self.pos += 1;
            self.skip_ws();
        }
        Ok((exps, coeff))
    }

    fn parse(mut self) -> Result<LaurentPoly, LaurentError> {
        let mut p = LaurentPoly::zero(self.nvars);
        self.skip_ws();
        let mut sign = BigRational::one();
        if self.peek() == Some('-') {
            self.pos += 1;
            sign = -sign;
        }
        loop {
            let (e, c) = self.term()?;
            p.add_term(e, &(c * &sign));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some('+') => sign = BigRational::one(),
                Some('-') => sign = -BigRational::one(),
                Some(_) => return Err(self.err("unexpected character")),
            }
            self.pos += 1;
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> LaurentPoly {
        LaurentPoly::var(1, 0)
    }

    #[test]
    fn display_forms() {
        let one = LaurentPoly::one(1);
        let p = &(&one - &t()) + &(&t() * &t());
        assert_eq!(p.to_string(), "1 - t + t^2");
        let p = LaurentPoly::parse("t1^-1*t2 + 3", 2).unwrap();
        assert_eq!(p.to_string(), "t1^-1*t2 + 3");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        let p = LaurentPoly::parse("-3/2*t^-2 + 5", 1).unwrap();
        assert_eq!(p.to_string(), "-3/2*t^-2 + 5");
    }

    #[test]
    fn parse_errors() {
        assert!(LaurentPoly::parse("t3", 2).is_err());
        assert!(LaurentPoly::parse("t", 2).is_err());
        assert!(LaurentPoly::parse("1/0", 1).is_err());
        assert!(LaurentPoly::parse("t^", 1).is_err());
        assert!(LaurentPoly::parse("2 x", 1).is_err());
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::parse("1 - t + t^2", 1).unwrap();
        let b = LaurentPoly::parse("t^-1 + 2", 1).unwrap();
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!(prod.exact_div(&a), Some(b));
        let c = LaurentPoly::parse("t - 1", 1).unwrap();
        assert_eq!(a.exact_div(&c), None);
        let x = LaurentPoly::parse("t1 - t2", 2).unwrap();
        let y = LaurentPoly::parse("t1*t2 + t2^-1 - 4", 2).unwrap();
        assert_eq!((&x * &y).exact_div(&x), Some(y.clone()));
        assert_eq!(y.exact_div(&x), None);
    }

    #[test]
    fn unit_normalization() {
        let p = LaurentPoly::parse("-2*t^-1 + 6 - 2*t", 1).unwrap();
        assert_eq!(p.normalize_unit().to_string(), "1 - 3*t + t^2");
    }

    #[test]
    fn modular_evaluation() {
        let p = LaurentPoly::parse("1/2*t^-1 + 3", 1).unwrap();
        let pr = 101;
        let v = p.eval_mod(&[5], pr).unwrap();
        // 1/(2*5) + 3 mod 101
        let expect = (invmod(10, pr).unwrap() + 3) % pr;
        assert_eq!(v, expect);
    }
}
