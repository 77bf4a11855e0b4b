use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{invmod, mulmod, powmod};
use super::rank::FILTER_PRIME;

/// Sparse polynomial with nonnegative exponents in `n` variables over `Q`.
/// Only used for gcd computations; callers translate Laurent data in and out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MPoly {
    pub fn zero(n: usize) -> Self {
        MPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut p = MPoly::zero(n);
        p.terms.insert(vec![0; n], BigRational::one());
        p
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>) -> Self {
        let mut p = MPoly::zero(n);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn sub(&self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    fn mul(&self, o: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    fn shift_var(&self, v: usize, k: u32) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[v] += k;
                (e, c.clone())
            })
            .collect();
        MPoly { n: self.n, terms }
    }

    fn scale(&self, c: &BigRational) -> MPoly {
        MPoly { n: self.n, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    fn leading(&self) -> Option<(&Vec<u32>, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Scales so the lexicographically leading coefficient is 1.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    fn min_exponents(&self) -> Vec<u32> {
        let mut m: Option<Vec<u32>> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(m) => m.iter().zip(e).map(|(x, y)| *x.min(y)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.n])
    }

    fn unshift(&self, m: &[u32]) -> MPoly {
        let terms =
            self.terms.iter().map(|(e, c)| (e.iter().zip(m).map(|(x, y)| x - y).collect(), c.clone())).collect();
        MPoly { n: self.n, terms }
    }

    fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    /// Coefficients with respect to `x_v`, keyed by degree.
    fn coeffs_in(&self, v: usize) -> BTreeMap<u32, MPoly> {
        let mut out: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[v] = 0;
            out.entry(e[v]).or_insert_with(|| MPoly::zero(self.n)).add_term(e2, c.clone());
        }
        out
    }

    fn lc_in(&self, v: usize) -> MPoly {
        self.coeffs_in(v).into_iter().next_back().map(|(_, c)| c).unwrap_or_else(|| MPoly::zero(self.n))
    }

    /// Exact quotient, `None` when `d` does not divide.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        let (de, dc) = d.leading().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.n);
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let t = MPoly::from_terms(self.n, [(e, &rc / &dc)]);
            rem = rem.sub(&t.mul(d));
            quot = MPoly::from_terms(self.n, quot.terms.into_iter().chain(t.terms));
        }
        Some(quot)
    }

    fn pseudo_rem(&self, d: &MPoly, v: usize) -> MPoly {
        let dd = d.degree_in(v);
        let ld = d.lc_in(v);
        let mut a = self.clone();
        while !a.is_zero() && a.degree_in(v) >= dd {
            let da = a.degree_in(v);
            let la = a.lc_in(v);
            a = ld.mul(&a).sub(&la.mul(&d.shift_var(v, da - dd)));
        }
        a
    }

    fn content_in(&self, v: usize) -> MPoly {
        let mut g = MPoly::zero(self.n);
        for c in self.coeffs_in(v).into_values() {
            g = gcd(&g, &c);
            if g.is_constant() {
                break;
            }
        }
        g
    }
}

fn rat_mod(c: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n: u64 = c.numer().mod_floor(&pb).try_into().ok()?;
    let d: u64 = c.denom().mod_floor(&pb).try_into().ok()?;
    Some(mulmod(n, invmod(d, p)?, p))
}

fn point_value(v: usize) -> u64 {
    let mut s = 0x2545_F491_4F6C_DD1Du64 ^ (v as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    2 + s % (FILTER_PRIME - 3)
}

/// Image in `F_p[x_v]` after substituting fixed points for the other variables.
fn univariate_image(a: &MPoly, v: usize, p: u64) -> Option<Vec<u64>> {
    let mut out = vec![0u64; a.degree_in(v) as usize + 1];
    for (e, c) in &a.terms {
        let mut x = rat_mod(c, p)?;
        for (w, &k) in e.iter().enumerate() {
            if w != v && k > 0 {
                x = mulmod(x, powmod(point_value(w), k as u64, p), p);
            }
        }
        let slot = &mut out[e[v] as usize];
        *slot = (*slot + x) % p;
    }
    Some(out)
}

fn uni_degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&x| x != 0)
}

fn uni_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    loop {
        let Some(db) = uni_degree(&b) else {
            return uni_degree(&a).unwrap_or(0);
        };
        let inv = invmod(b[db], p).expect("nonzero leading coefficient");
        while let Some(da) = uni_degree(&a) {
            if da < db {
                break;
            }
            let f = mulmod(a[da], inv, p);
            for i in 0..=db {
                let s = mulmod(f, b[i], p);
                a[da - db + i] = (a[da - db + i] + p - s) % p;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// Sound test for `gcd(a, b) = 1`: if the gcd involved `x_v`, its image under
/// a degree-preserving specialization would divide both images. `false`
/// means inconclusive.
fn certainly_coprime(a: &MPoly, b: &MPoly) -> bool {
    let p = FILTER_PRIME;
    for v in 0..a.n {
        let (da, db) = (a.degree_in(v), b.degree_in(v));
        if da == 0 || db == 0 {
            continue;
        }
        let (Some(ia), Some(ib)) = (univariate_image(a, v, p), univariate_image(b, v, p)) else {
            return false;
        };
        if uni_degree(&ia) != Some(da as usize) || uni_degree(&ib) != Some(db as usize) {
            return false;
        }
        if uni_gcd_degree(ia, ib, p) > 0 {
            return false;
        }
    }
    true
}

/// Monic greatest common divisor (primitive remainder sequences, recursive
/// in the variables).
pub(crate) fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    gcd_limited(a, b, usize::MAX).expect("unlimited gcd")
}

/// Like [`gcd`], but gives up (`None`) when the cheap paths fail and the
/// inputs together have more than `limit` terms.
pub(crate) fn gcd_limited(a: &MPoly, b: &MPoly, limit: usize) -> Option<MPoly> {
    if a.is_zero() {
        return Some(b.monic());
    }
    if b.is_zero() {
        return Some(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Some(MPoly::one(a.n));
    }
    let (ma, mb) = (a.min_exponents(), b.min_exponents());
    if ma.iter().chain(&mb).any(|&x| x > 0) {
        let m: Vec<u32> = ma.iter().zip(&mb).map(|(x, y)| *x.min(y)).collect();
        let (a1, b1) = (a.unshift(&ma), b.unshift(&mb));
        let g = gcd_limited(&a1, &b1, limit)?;
        return Some(g.mul(&MPoly::from_terms(a.n, [(m, BigRational::one())])));
    }
    if a.terms.len() == 1 || b.terms.len() == 1 || certainly_coprime(a, b) {
        return Some(MPoly::one(a.n));
    }
    if a.terms.len() + b.terms.len() > limit {
        return None;
    }
    let v = (0..a.n)
        .filter(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
        .min_by_key(|&v| (a.degree_in(v).max(b.degree_in(v)), v))
        .expect("non-constant polynomial has a variable");
    let (ca, cb) = (a.content_in(v), b.content_in(v));
    let gc = gcd(&ca, &cb);
    if a.degree_in(v) == 0 || b.degree_in(v) == 0 {
        return Some(gc);
    }
    let mut r0 = a.exact_div(&ca).expect("content divides");
    let mut r1 = b.exact_div(&cb).expect("content divides");
    if r0.degree_in(v) < r1.degree_in(v) {
        std::mem::swap(&mut r0, &mut r1);
    }
    loop {
        let r = r0.pseudo_rem(&r1, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            return Some(gc);
        }
        let c = r.content_in(v);
        r0 = r1;
        r1 = r.exact_div(&c).expect("content divides");
    }
    Some(gc.mul(&r1).monic())
}
