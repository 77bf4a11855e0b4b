use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use super::algebra::{BaseFrac, GAElt, MElt};
use super::tower::ExtensionTower;
use super::SkewError;
use crate::laurent::{default_var_names, LaurentPoly};

/// A skew Laurent polynomial `sum c_i s_k^i` in the layer-`k` variable, with
/// coefficients in the layer-`(k-1)` fraction field written on the left.
#[derive(Clone, Debug)]
pub struct SkewPoly {
    layer: usize,
    coeffs: BTreeMap<i64, SkewFieldElt>,
}

/// An element of the iterated Ore fraction field. Level 0 is the fraction
/// field of `Q[M]`; level `k` holds left fractions `den^-1 * num` of layer-`k`
/// skew polynomials, with `den` monic of lowest exponent 0 and no common left
/// factor.
#[derive(Clone, Debug)]
pub enum SkewFieldElt {
    Base(BaseFrac),
    Frac(Box<LayerFrac>),
}

#[derive(Clone, Debug)]
pub struct LayerFrac {
    den: SkewPoly,
    num: SkewPoly,
}

impl SkewPoly {
    pub fn zero(layer: usize) -> Self {
        assert!(layer >= 1, "skew polynomials live in layers 1..=b");
        SkewPoly { layer, coeffs: BTreeMap::new() }
    }

    pub fn layer(&self) -> usize {
        self.layer
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, SkewFieldElt> {
        &self.coeffs
    }

    pub fn lo(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn hi(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Euclidean size: `hi - lo` (0 for monomials).
    pub fn span(&self) -> i64 {
        match (self.lo(), self.hi()) {
            (Some(l), Some(h)) => h - l,
            _ => 0,
        }
    }

    fn top(&self) -> (i64, &SkewFieldElt) {
        let (e, c) = self.coeffs.iter().next_back().expect("nonzero polynomial");
        (*e, c)
    }

    pub fn size(&self) -> usize {
        self.coeffs.values().map(SkewFieldElt::size).sum()
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let c = c.compact_string(names);
                let var = match *e {
                    0 => return c,
                    1 => format!("s{}", self.layer),
                    e => format!("s{}^{e}", self.layer),
                };
                if c == "1" {
                    var
                } else {
                    format!("({c})*{var}")
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl LayerFrac {
    pub fn den(&self) -> &SkewPoly {
        &self.den
    }

    pub fn num(&self) -> &SkewPoly {
        &self.num
    }
}

impl SkewFieldElt {
    pub fn level(&self) -> usize {
        match self {
            SkewFieldElt::Base(_) => 0,
            SkewFieldElt::Frac(f) => f.den.layer,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            SkewFieldElt::Base(f) => f.is_zero(),
            SkewFieldElt::Frac(f) => f.num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            SkewFieldElt::Base(f) => f.is_one(),
            SkewFieldElt::Frac(f) => is_one_poly(&f.den) && is_one_poly(&f.num),
        }
    }

    /// Total number of base-field terms, used for pivot choice.
    pub fn size(&self) -> usize {
        match self {
            SkewFieldElt::Base(f) => f.size(),
            SkewFieldElt::Frac(f) => f.den.size() + f.num.size(),
        }
    }

    pub fn as_frac(&self) -> Option<&LayerFrac> {
        match self {
            SkewFieldElt::Frac(f) => Some(f),
            SkewFieldElt::Base(_) => None,
        }
    }

    fn base_vars(&self) -> usize {
        match self {
            SkewFieldElt::Base(f) => f.num().dims().1,
            SkewFieldElt::Frac(f) => f.den.coeffs.values().next().map(SkewFieldElt::base_vars).unwrap_or(0),
        }
    }

    /// Like [`Self::to_string_with`] but omits a denominator equal to 1.
    fn compact_string(&self, names: &[String]) -> String {
        match self {
            SkewFieldElt::Base(f) if f.den().is_one() => f.num().to_string_with(names),
            SkewFieldElt::Frac(f) if is_one_poly(&f.den) => f.num.to_string_with(names),
            _ => self.to_string_with(names),
        }
    }

    /// Debug form `(den)^-1 * (num)`.
    pub fn to_string_with(&self, names: &[String]) -> String {
        match self {
            SkewFieldElt::Base(f) => f.to_string_with(names),
            SkewFieldElt::Frac(f) => {
                format!("({})^-1 * ({})", f.den.to_string_with(names), f.num.to_string_with(names))
            }
        }
    }
}

fn is_one_poly(p: &SkewPoly) -> bool {
    p.coeffs.len() == 1 && p.coeffs.get(&0).is_some_and(SkewFieldElt::is_one)
}

impl fmt::Display for SkewFieldElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&default_var_names(self.base_vars())))
    }
}

impl ExtensionTower {
    pub fn zero(&self, level: usize) -> SkewFieldElt {
        if level == 0 {
            SkewFieldElt::Base(BaseFrac::zero(self.module_rank(), self.b()))
        } else {
            SkewFieldElt::Frac(Box::new(LayerFrac { den: self.poly_one(level), num: SkewPoly::zero(level) }))
        }
    }

    pub fn one(&self, level: usize) -> SkewFieldElt {
        if level == 0 {
            SkewFieldElt::Base(BaseFrac::one(self.module_rank(), self.b()))
        } else {
            let one = self.poly_one(level);
            SkewFieldElt::Frac(Box::new(LayerFrac { den: one.clone(), num: one }))
        }
    }

    pub fn poly_one(&self, layer: usize) -> SkewPoly {
        self.poly_monomial(layer, 0, self.one(layer - 1))
    }

    /// `c * s_layer^e`.
    pub fn poly_monomial(&self, layer: usize, e: i64, c: SkewFieldElt) -> SkewPoly {
        let mut p = SkewPoly::zero(layer);
        if !c.is_zero() {
            p.coeffs.insert(e, c);
        }
        p
    }

    /// The polynomial `p` as the fraction `1^-1 * p`.
    pub fn from_poly(&self, p: SkewPoly) -> SkewFieldElt {
        let den = self.poly_one(p.layer);
        SkewFieldElt::Frac(Box::new(LayerFrac { den, num: p }))
    }

    /// The variable `s_k` as an element of level `level >= k`.
    pub fn skew_var(&self, k: usize, level: usize) -> SkewFieldElt {
        let v = self.from_poly(self.poly_monomial(k, 1, self.one(k - 1)));
        self.embed(v, level)
    }

    /// Lifts an element to a higher level as a constant polynomial.
    pub fn embed(&self, x: SkewFieldElt, level: usize) -> SkewFieldElt {
        let mut x = x;
        while x.level() < level {
            let l = x.level() + 1;
            x = self.from_poly(self.poly_monomial(l, 0, x));
        }
        x
    }

    pub fn base(&self, g: GAElt) -> SkewFieldElt {
        SkewFieldElt::Base(BaseFrac::from_ga(g))
    }

    /// The group-ring element `sum c E[v] s_1^{g_1} ... s_b^{g_b}` at the top level.
    pub fn group_ring_element(&self, terms: &[(MElt, Vec<i64>, BigRational)]) -> SkewFieldElt {
        let refs: Vec<(&MElt, &[i64], &BigRational)> = terms.iter().map(|(v, g, c)| (v, g.as_slice(), c)).collect();
        self.group_ring_at(self.b(), &refs)
    }

    fn group_ring_at(&self, level: usize, terms: &[(&MElt, &[i64], &BigRational)]) -> SkewFieldElt {
        if level == 0 {
            let mut g = GAElt::zero(self.module_rank(), self.b());
            for (v, _, c) in terms {
                g.add_term((*v).clone(), c);
            }
            return self.base(g);
        }
        let mut groups: BTreeMap<i64, Vec<(&MElt, &[i64], &BigRational)>> = BTreeMap::new();
        for &t in terms {
            groups.entry(t.1[level - 1]).or_default().push(t);
        }
        let mut p = SkewPoly::zero(level);
        for (e, ts) in groups {
            let c = self.group_ring_at(level - 1, &ts);
            self.poly_add_term(&mut p, e, c);
        }
        self.from_poly(p)
    }

    /// A Laurent polynomial in `t_1..t_b` read as a polynomial in `s_1..s_b`.
    pub fn from_laurent(&self, p: &LaurentPoly) -> SkewFieldElt {
        let zero = MElt::zero(self.module_rank(), self.b());
        let terms: Vec<(MElt, Vec<i64>, BigRational)> =
            p.terms().map(|(e, c)| (zero.clone(), e.clone(), c.clone())).collect();
        self.group_ring_element(&terms)
    }

    // ---- automorphisms ----

    /// `sigma_k^n(x)` for `x` below layer `k`.
    pub fn sigma(&self, k: usize, n: i64, x: &SkewFieldElt) -> SkewFieldElt {
        assert!(x.level() < k, "sigma_{k} applied at level {}", x.level());
        if n == 0 {
            return x.clone();
        }
        match x {
            SkewFieldElt::Base(f) => SkewFieldElt::Base(f.sigma(self, k - 1, n)),
            SkewFieldElt::Frac(f) => SkewFieldElt::Frac(Box::new(LayerFrac {
                den: self.poly_sigma(k, n, &f.den),
                num: self.poly_sigma(k, n, &f.num),
            })),
        }
    }

    fn poly_sigma(&self, k: usize, n: i64, p: &SkewPoly) -> SkewPoly {
        SkewPoly { layer: p.layer, coeffs: p.coeffs.iter().map(|(e, c)| (*e, self.sigma(k, n, c))).collect() }
    }

    // ---- polynomial arithmetic ----

    fn poly_add_term(&self, p: &mut SkewPoly, e: i64, c: SkewFieldElt) {
        if c.is_zero() {
            return;
        }
        match p.coeffs.remove(&e) {
            None => {
                p.coeffs.insert(e, c);
            }
            Some(old) => {
                let s = self.add(&old, &c);
                if !s.is_zero() {
                    p.coeffs.insert(e, s);
                }
            }
        }
    }

    pub fn poly_add(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        let mut out = a.clone();
        for (e, c) in &b.coeffs {
            self.poly_add_term(&mut out, *e, c.clone());
        }
        out
    }

    pub fn poly_neg(&self, a: &SkewPoly) -> SkewPoly {
        SkewPoly { layer: a.layer, coeffs: a.coeffs.iter().map(|(e, c)| (*e, self.neg(c))).collect() }
    }

    pub fn poly_sub(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        self.poly_add(a, &self.poly_neg(b))
    }

    /// `c * s^e * p`.
    pub fn poly_left_term(&self, c: &SkewFieldElt, e: i64, p: &SkewPoly) -> SkewPoly {
        let k = p.layer;
        let mut out = SkewPoly::zero(k);
        for (i, x) in &p.coeffs {
            let y = self.mul(c, &self.sigma(k, e, x));
            self.poly_add_term(&mut out, i + e, y);
        }
        out
    }

    /// Skew multiplication using `s * a = sigma(a) * s`.
    pub fn poly_mul(&self, p: &SkewPoly, q: &SkewPoly) -> SkewPoly {
        assert_eq!(p.layer, q.layer, "layer mismatch");
        let mut out = SkewPoly::zero(p.layer);
        for (i, a) in &p.coeffs {
            for (j, b) in &q.coeffs {
                let y = self.mul(a, &self.sigma(p.layer, *i, b));
                self.poly_add_term(&mut out, i + j, y);
            }
        }
        out
    }

    pub fn poly_eq(&self, a: &SkewPoly, b: &SkewPoly) -> bool {
        self.poly_sub(a, b).is_zero()
    }

    /// `p = q * quot + rem` with `span(rem) < span(q)` or `rem = 0`.
    pub fn left_divmod(&self, p: &SkewPoly, q: &SkewPoly) -> Result<(SkewPoly, SkewPoly), SkewError> {
        if q.is_zero() {
            return Err(SkewError::DivisionByZero);
        }
        let k = q.layer;
        let (hq, cq) = q.top();
        let cq_inv = self.inv(cq)?;
        let mut quot = SkewPoly::zero(k);
        let mut rem = p.clone();
        while !rem.is_zero() && rem.span() >= q.span() {
            let (m, cm) = rem.top();
            let c = self.sigma(k, -hq, &self.mul(&cq_inv, cm));
            let n = m - hq;
            let t = self.poly_monomial(k, n, c.clone());
            rem = self.poly_sub(&rem, &self.poly_mul(q, &t));
            self.poly_add_term(&mut quot, n, c);
        }
        Ok((quot, rem))
    }

    /// `p = quot * q + rem` with `span(rem) < span(q)` or `rem = 0`.
    pub fn right_divmod(&self, p: &SkewPoly, q: &SkewPoly) -> Result<(SkewPoly, SkewPoly), SkewError> {
        if q.is_zero() {
            return Err(SkewError::DivisionByZero);
        }
        let k = q.layer;
        let (hq, cq) = q.top();
        let mut quot = SkewPoly::zero(k);
        let mut rem = p.clone();
        while !rem.is_zero() && rem.span() >= q.span() {
            let (m, cm) = rem.top();
            let n = m - hq;
            let c = self.mul(cm, &self.inv(&self.sigma(k, n, cq))?);
            rem = self.poly_sub(&rem, &self.poly_left_term(&c, n, q));
            self.poly_add_term(&mut quot, n, c);
        }
        Ok((quot, rem))
    }

    /// A greatest common left divisor.
    pub fn left_gcd(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.left_divmod(&a, &b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a
    }

    /// Returns `(a', b')` with `a' * b = b' * a` and `b' != 0`, from the
    /// extended Euclidean algorithm for right division.
    pub fn ore_pair(&self, a: &SkewPoly, b: &SkewPoly) -> Result<(SkewPoly, SkewPoly), SkewError> {
        if b.is_zero() {
            return Err(SkewError::DivisionByZero);
        }
        let k = b.layer;
        if a.is_zero() {
            return Ok((SkewPoly::zero(k), self.poly_one(k)));
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut u0, mut v0) = (self.poly_one(k), SkewPoly::zero(k));
        let (mut u1, mut v1) = (SkewPoly::zero(k), self.poly_one(k));
        let (u, v) = loop {
            let (q, r) = self.right_divmod(&r0, &r1)?;
            let u2 = self.poly_sub(&u0, &self.poly_mul(&q, &u1));
            let v2 = self.poly_sub(&v0, &self.poly_mul(&q, &v1));
            if r.is_zero() {
                break (u2, v2);
            }
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u2);
            (v0, v1) = (v1, v2);
        };
        // u a + v b = 0, so (-v) b = u a.
        let (mut a2, mut b2) = (self.poly_neg(&v), u);
        let lo = [a2.lo(), b2.lo()].into_iter().flatten().min().unwrap_or(0);
        let (_, lc) = b2.top();
        let shift = -lo;
        let lc_inv = self.sigma(k, shift, &self.inv(lc)?);
        let unit = self.one(k - 1);
        a2 = self.poly_left_term(&unit, shift, &a2);
        b2 = self.poly_left_term(&unit, shift, &b2);
        a2 = self.poly_left_term(&lc_inv, 0, &a2);
        b2 = self.poly_left_term(&lc_inv, 0, &b2);
        assert!(self.poly_eq(&self.poly_mul(&a2, b), &self.poly_mul(&b2, a)), "Ore identity failed");
        Ok((a2, b2))
    }

    /// Canonical fraction `den^-1 * num`.
    fn make_frac(&self, den: SkewPoly, num: SkewPoly) -> SkewFieldElt {
        let k = den.layer;
        if num.is_zero() {
            return self.zero(k);
        }
        let (den, num) = if den.coeffs.len() > 1 && num.coeffs.len() > 1 {
            let g = self.left_gcd(&den, &num);
            if g.span() > 0 {
                let d = self.left_divmod(&den, &g).expect("nonzero gcd");
                let n = self.left_divmod(&num, &g).expect("nonzero gcd");
                debug_assert!(d.1.is_zero() && n.1.is_zero());
                (d.0, n.0)
            } else {
                (den, num)
            }
        } else {
            (den, num)
        };
        let lo = den.lo().expect("nonzero denominator");
        let (_, lc) = den.top();
        let u = self.sigma(k, -lo, &self.inv(lc).expect("nonzero coefficient"));
        let den = self.poly_left_term(&u, -lo, &den);
        let num = self.poly_left_term(&u, -lo, &num);
        SkewFieldElt::Frac(Box::new(LayerFrac { den, num }))
    }

    // ---- field arithmetic ----

    pub fn add(&self, x: &SkewFieldElt, y: &SkewFieldElt) -> SkewFieldElt {
        match (x, y) {
            (SkewFieldElt::Base(a), SkewFieldElt::Base(b)) => SkewFieldElt::Base(a.add(b)),
            (SkewFieldElt::Frac(a), SkewFieldElt::Frac(b)) => {
                assert_eq!(a.den.layer, b.den.layer, "level mismatch");
                if a.num.is_zero() {
                    return y.clone();
                }
                if b.num.is_zero() {
                    return x.clone();
                }
                if is_one_poly(&a.den) && is_one_poly(&b.den) {
                    return self.make_frac(a.den.clone(), self.poly_add(&a.num, &b.num));
                }
                let (a2, b2) = self.ore_pair(&a.den, &b.den).expect("nonzero denominators");
                let den = self.poly_mul(&b2, &a.den);
                let num = self.poly_add(&self.poly_mul(&b2, &a.num), &self.poly_mul(&a2, &b.num));
                self.make_frac(den, num)
            }
            _ => panic!("level mismatch"),
        }
    }

    pub fn neg(&self, x: &SkewFieldElt) -> SkewFieldElt {
        match x {
            SkewFieldElt::Base(a) => SkewFieldElt::Base(a.neg()),
            SkewFieldElt::Frac(a) => {
                SkewFieldElt::Frac(Box::new(LayerFrac { den: a.den.clone(), num: self.poly_neg(&a.num) }))
            }
        }
    }

    pub fn sub(&self, x: &SkewFieldElt, y: &SkewFieldElt) -> SkewFieldElt {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &SkewFieldElt, y: &SkewFieldElt) -> SkewFieldElt {
        match (x, y) {
            (SkewFieldElt::Base(a), SkewFieldElt::Base(b)) => SkewFieldElt::Base(a.mul(b)),
            (SkewFieldElt::Frac(a), SkewFieldElt::Frac(b)) => {
                let k = a.den.layer;
                assert_eq!(k, b.den.layer, "level mismatch");
                if a.num.is_zero() || b.num.is_zero() {
                    return self.zero(k);
                }
                if x.is_one() {
                    return y.clone();
                }
                if y.is_one() {
                    return x.clone();
                }
                if is_one_poly(&b.den) {
                    return self.make_frac(a.den.clone(), self.poly_mul(&a.num, &b.num));
                }
                let (a2, b2) = self.ore_pair(&a.num, &b.den).expect("nonzero denominator");
                self.make_frac(self.poly_mul(&b2, &a.den), self.poly_mul(&a2, &b.num))
            }
            _ => panic!("level mismatch"),
        }
    }

    pub fn inv(&self, x: &SkewFieldElt) -> Result<SkewFieldElt, SkewError> {
        if x.is_zero() {
            return Err(SkewError::DivisionByZero);
        }
        match x {
            SkewFieldElt::Base(a) => Ok(SkewFieldElt::Base(a.inv().ok_or(SkewError::DivisionByZero)?)),
            SkewFieldElt::Frac(a) => Ok(self.make_frac(a.num.clone(), a.den.clone())),
        }
    }

    /// Semantic equality.
    pub fn eq(&self, x: &SkewFieldElt, y: &SkewFieldElt) -> bool {
        match (x, y) {
            (SkewFieldElt::Base(a), SkewFieldElt::Base(b)) => a.semantic_eq(b),
            _ => self.sub(x, y).is_zero(),
        }
    }

    /// Image under every group element going to 1.
    pub fn augmentation_of_poly(&self, p: &SkewPoly) -> Option<BigRational> {
        let mut acc = BigRational::from_integer(0.into());
        for c in p.coeffs.values() {
            acc += self.augmentation(c)?;
        }
        Some(acc)
    }

    /// Augmentation of a group-ring element (denominator 1 at every level);
    /// `None` for genuine fractions.
    pub fn augmentation(&self, x: &SkewFieldElt) -> Option<BigRational> {
        match x {
            SkewFieldElt::Base(f) => f.den().is_one().then(|| f.num().augmentation()),
            SkewFieldElt::Frac(f) => {
                if is_one_poly(&f.den) {
                    self.augmentation_of_poly(&f.num)
                } else {
                    None
                }
            }
        }
    }
}
