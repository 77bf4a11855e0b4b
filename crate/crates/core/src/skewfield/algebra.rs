use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::tower::ExtensionTower;
use crate::laurent::{default_var_names, mpoly_gcd_limited, LaurentPoly, MPoly};

/// An element of the module `M = Z[Z^b]^r`, written additively.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MElt(pub Vec<LaurentPoly>);

impl MElt {
    pub fn zero(r: usize, b: usize) -> Self {
        MElt(vec![LaurentPoly::zero(b); r])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(LaurentPoly::is_zero)
    }

    pub fn add(&self, o: &MElt) -> MElt {
        MElt(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &MElt) -> MElt {
        MElt(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> MElt {
        MElt(self.0.iter().map(|a| -a).collect())
    }

    /// Flattened coordinates `((component, exponent), coefficient)`.
    fn coords(&self) -> impl Iterator<Item = ((usize, &Vec<i64>), &BigRational)> {
        self.0.iter().enumerate().flat_map(|(j, p)| p.terms().map(move |(e, c)| ((j, e), c)))
    }

    /// A translation-invariant total order on `M`: the sign of the first
    /// nonzero flattened coordinate of the difference.
    pub fn group_cmp(&self, o: &MElt) -> Ordering {
        let d = self.sub(o);
        let first = d.coords().next().map(|(_, c)| c.cmp(&BigRational::zero()));
        first.unwrap_or(Ordering::Equal)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string_with(names)).collect();
        format!("E[{}]", parts.join(", "))
    }
}

/// An element of the group algebra `Q[M]`: a finite combination of
/// monomials `E[v]`, multiplied by adding exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GAElt {
    r: usize,
    b: usize,
    terms: BTreeMap<MElt, BigRational>,
}

impl GAElt {
    pub fn zero(r: usize, b: usize) -> Self {
        GAElt { r, b, terms: BTreeMap::new() }
    }

    pub fn one(r: usize, b: usize) -> Self {
        Self::monomial(MElt::zero(r, b), BigRational::one(), b)
    }

    pub fn constant(r: usize, b: usize, c: BigRational) -> Self {
        Self::monomial(MElt::zero(r, b), c, b)
    }

    pub fn monomial(v: MElt, c: BigRational, b: usize) -> Self {
        let mut g = GAElt::zero(v.0.len(), b);
        g.add_term(v, &c);
        g
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.r, self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(k, c)| k.is_zero() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MElt, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, v: MElt, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(v) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &GAElt) -> GAElt {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> GAElt {
        GAElt { r: self.r, b: self.b, terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &GAElt) -> GAElt {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), &-c);
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> GAElt {
        if c.is_zero() {
            return GAElt::zero(self.r, self.b);
        }
        GAElt { r: self.r, b: self.b, terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    pub fn mul(&self, o: &GAElt) -> GAElt {
        let mut out = GAElt::zero(self.r, self.b);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                out.add_term(k1.add(k2), &(c1 * c2));
            }
        }
        out
    }

    /// Multiplication by the monomial `E[v]`.
    pub fn shift(&self, v: &MElt) -> GAElt {
        GAElt { r: self.r, b: self.b, terms: self.terms.iter().map(|(k, c)| (k.add(v), c.clone())).collect() }
    }

    /// Sum of coefficients (every monomial sent to 1).
    pub fn augmentation(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// Leading term under [`MElt::group_cmp`].
    pub fn leading_term(&self) -> Option<(&MElt, &BigRational)> {
        self.terms.iter().max_by(|a, b| a.0.group_cmp(b.0))
    }

    /// Applies `sigma_k^n`.
    pub fn sigma(&self, tower: &ExtensionTower, k: usize, n: i64) -> GAElt {
        if n == 0 || self.r == 0 {
            return self.clone();
        }
        let mut out = GAElt::zero(self.r, self.b);
        for (v, c) in &self.terms {
            out.add_term(MElt(tower.act(k, n, &v.0)), c);
        }
        out
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide.
    pub fn exact_div(&self, d: &GAElt) -> Option<GAElt> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if d.terms.len() == 1 {
            let (v, c) = d.terms.iter().next().unwrap();
            return Some(self.shift(&v.neg()).scale(&c.recip()));
        }
        // Box bounds on every flattened coordinate of a quotient monomial.
        let mut bounds: BTreeMap<(usize, Vec<i64>), [BigRational; 2]> = BTreeMap::new();
        let zero = BigRational::zero();
        let keys = |g: &GAElt| -> Vec<(usize, Vec<i64>)> {
            g.terms.keys().flat_map(|m| m.coords().map(|((j, e), _)| (j, e.clone())).collect::<Vec<_>>()).collect()
        };
        for idx in keys(self).into_iter().chain(keys(d)) {
            bounds.entry(idx).or_insert_with(|| [zero.clone(), zero.clone()]);
        }
        let coord = |m: &MElt, idx: &(usize, Vec<i64>)| -> BigRational {
            m.0[idx.0].terms().find(|(e, _)| **e == idx.1).map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
        };
        for (idx, bd) in bounds.iter_mut() {
            let range = |g: &GAElt| {
                let vals: Vec<BigRational> = g.terms.keys().map(|m| coord(m, idx)).collect();
                let lo = vals.iter().min().cloned().unwrap();
                let hi = vals.iter().max().cloned().unwrap();
                (lo, hi)
            };
            let (ls, hs) = range(self);
            let (ld, hd) = range(d);
            *bd = [&ls - &ld, &hs - &hd];
        }
        let (dv, dc) = d.leading_term().map(|(v, c)| (v.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = GAElt::zero(self.r, self.b);
        while let Some((rv, rc)) = rem.leading_term().map(|(v, c)| (v.clone(), c.clone())) {
            let m = rv.sub(&dv);
            for ((j, e), c) in m.coords() {
                if !bounds.contains_key(&(j, e.clone())) && !c.is_zero() {
                    return None;
                }
            }
            for (idx, bd) in &bounds {
                let x = coord(&m, idx);
                if x < bd[0] || x > bd[1] {
                    return None;
                }
            }
            let c = &rc / &dc;
            rem = rem.sub(&d.shift(&m).scale(&c));
            quot.add_term(m, &c);
        }
        Some(quot)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (v, c)) in self.terms.iter().enumerate() {
            let neg = c < &BigRational::zero();
            let a = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if v.is_zero() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&v.to_string_with(names));
            } else {
                s.push_str(&format!("{a}*{}", v.to_string_with(names)));
            }
        }
        s
    }
}

impl fmt::Display for GAElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&default_var_names(self.b)))
    }
}

/// An element `num / den` of the fraction field of `Q[M]`, kept coprime with
/// the denominator's leading term equal to `1`.
#[derive(Clone, Debug)]
pub struct BaseFrac {
    pub(crate) num: GAElt,
    pub(crate) den: GAElt,
}

/// Above this many terms a nontrivial-looking gcd is not pursued; fractions
/// then stay unreduced, which affects size but not value.
const GCD_TERM_LIMIT: usize = 400;

/// Divides `num` and `den` by their gcd, computed after identifying `Q[M]`
/// restricted to the occurring monomials with a polynomial ring.
fn cancel_gcd(num: &GAElt, den: &GAElt) -> (GAElt, GAElt) {
    let mut index: BTreeMap<(usize, Vec<i64>), (BigRational, BigInt)> = BTreeMap::new();
    for v in num.terms.keys().chain(den.terms.keys()) {
        for ((j, e), _) in v.coords() {
            index.entry((j, e.clone())).or_insert((BigRational::zero(), BigInt::one()));
        }
    }
    let coord = |v: &MElt, j: usize, e: &Vec<i64>| -> BigRational {
        v.0[j].terms().find(|(x, _)| *x == e).map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
    };
    for ((j, e), (lo, scale)) in index.iter_mut() {
        let vals: Vec<BigRational> = num.terms.keys().chain(den.terms.keys()).map(|v| coord(v, *j, e)).collect();
        *lo = vals.iter().min().cloned().unwrap();
        for x in &vals {
            *scale = scale.lcm(x.denom());
        }
    }
    let n = index.len();
    let to_m = |g: &GAElt| {
        MPoly::from_terms(
            n,
            g.terms.iter().map(|(v, c)| {
                let e: Vec<u32> = index
                    .iter()
                    .map(|((j, e), (lo, scale))| {
                        let x = (coord(v, *j, e) - lo) * BigRational::from_integer(scale.clone());
                        x.to_integer().to_u32().expect("exponent fits")
                    })
                    .collect();
                (e, c.clone())
            }),
        )
    };
    let (mn, md) = (to_m(num), to_m(den));
    let Some(g) = mpoly_gcd_limited(&mn, &md, GCD_TERM_LIMIT) else {
        return (num.clone(), den.clone());
    };
    if g == MPoly::one(n) {
        return (num.clone(), den.clone());
    }
    let (r, b) = num.dims();
    let from_m = |p: &MPoly| {
        let mut out = GAElt::zero(r, b);
        for (e, c) in p.terms() {
            let mut v = MElt::zero(r, b);
            for (((j, ex), (lo, scale)), k) in index.iter().zip(e) {
                let x = BigRational::from_integer((*k).into()) / BigRational::from_integer(scale.clone()) + lo;
                v.0[*j].add_term(ex.clone(), &x);
            }
            out.add_term(v, c);
        }
        out
    };
    (from_m(&mn.exact_div(&g).expect("gcd divides")), from_m(&md.exact_div(&g).expect("gcd divides")))
}

impl BaseFrac {
    pub fn from_ga(g: GAElt) -> Self {
        let (r, b) = g.dims();
        BaseFrac { num: g, den: GAElt::one(r, b) }
    }

    pub fn zero(r: usize, b: usize) -> Self {
        Self::from_ga(GAElt::zero(r, b))
    }

    pub fn one(r: usize, b: usize) -> Self {
        Self::from_ga(GAElt::one(r, b))
    }

    pub fn new(num: GAElt, den: GAElt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(BaseFrac { num, den }.normalized())
    }

    pub fn num(&self) -> &GAElt {
        &self.num
    }

    pub fn den(&self) -> &GAElt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn size(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    fn normalized(self) -> Self {
        let (r, b) = self.num.dims();
        if self.num.is_zero() {
            return BaseFrac::zero(r, b);
        }
        if let Some(q) = self.num.exact_div(&self.den) {
            return BaseFrac::from_ga(q);
        }
        let (num, den) = match self.den.exact_div(&self.num) {
            Some(q) => (GAElt::one(r, b), q),
            None => cancel_gcd(&self.num, &self.den),
        };
        let (v, c) = den.leading_term().map(|(v, c)| (v.neg(), c.recip())).unwrap();
        BaseFrac { num: num.shift(&v).scale(&c), den: den.shift(&v).scale(&c) }
    }

    pub fn add(&self, o: &BaseFrac) -> BaseFrac {
        if self.den == o.den {
            return BaseFrac { num: self.num.add(&o.num), den: self.den.clone() }.normalized();
        }
        BaseFrac { num: self.num.mul(&o.den).add(&o.num.mul(&self.den)), den: self.den.mul(&o.den) }.normalized()
    }

    pub fn neg(&self) -> BaseFrac {
        BaseFrac { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &BaseFrac) -> BaseFrac {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &BaseFrac) -> BaseFrac {
        if self.is_zero() || o.is_zero() {
            let (r, b) = self.num.dims();
            return BaseFrac::zero(r, b);
        }
        BaseFrac { num: self.num.mul(&o.num), den: self.den.mul(&o.den) }.normalized()
    }

    pub fn inv(&self) -> Option<BaseFrac> {
        BaseFrac::new(self.den.clone(), self.num.clone())
    }

    pub fn sigma(&self, tower: &ExtensionTower, k: usize, n: i64) -> BaseFrac {
        BaseFrac { num: self.num.sigma(tower, k, n), den: self.den.sigma(tower, k, n) }.normalized()
    }

    pub fn semantic_eq(&self, o: &BaseFrac) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        format!("({})^-1 * ({})", self.den.to_string_with(names), self.num.to_string_with(names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &[&str], b: usize) -> MElt {
        MElt(s.iter().map(|x| LaurentPoly::parse(x, b).unwrap()).collect())
    }

    fn one() -> BigRational {
        BigRational::one()
    }

    #[test]
    fn group_algebra_products() {
        let e = GAElt::monomial(m(&["t1", "0"], 2), one(), 2);
        let e_inv = GAElt::monomial(m(&["-t1", "0"], 2), one(), 2);
        assert!(e.mul(&e_inv).is_one());
        let p = e.add(&GAElt::one(2, 2));
        let q = e.sub(&GAElt::one(2, 2));
        let sq = GAElt::monomial(m(&["2*t1", "0"], 2), one(), 2).sub(&GAElt::one(2, 2));
        assert_eq!(p.mul(&q), sq);
        assert_eq!(GAElt::one(2, 2).mul(&p), p);
    }

    #[test]
    fn order_is_translation_invariant() {
        let a = m(&["t1 - 2", "t2"], 2);
        let b = m(&["3", "-t2^2"], 2);
        let c = m(&["t1*t2", "5"], 2);
        assert_eq!(a.group_cmp(&b), a.add(&c).group_cmp(&b.add(&c)));
        assert_eq!(a.group_cmp(&b), b.group_cmp(&a).reverse());
    }

    #[test]
    fn exact_division() {
        let x = GAElt::monomial(m(&["1"], 1), one(), 1);
        let y = GAElt::monomial(m(&["t"], 1), one(), 1);
        let a = x.add(&y.scale(&BigRational::from_integer(3.into())));
        let c = x.sub(&GAElt::one(1, 1));
        let prod = a.mul(&c);
        assert_eq!(prod.exact_div(&c), Some(a.clone()));
        assert_eq!(prod.exact_div(&a), Some(c.clone()));
        assert_eq!(a.exact_div(&c), None);
    }

    #[test]
    fn fractions() {
        let x = GAElt::monomial(m(&["1"], 1), one(), 1);
        let f = BaseFrac::new(x.clone(), x.sub(&GAElt::one(1, 1))).unwrap();
        let g = f.inv().unwrap();
        assert!(f.mul(&g).is_one());
        let s = f.add(&g).sub(&g);
        assert!(s.semantic_eq(&f));
        assert!(BaseFrac::new(x, GAElt::zero(1, 1)).is_none());
    }
}
