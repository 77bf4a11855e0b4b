use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::word::Word;
use super::Presentation;

/// An element of the rational group ring of a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeRingElt {
    terms: BTreeMap<Word, BigRational>,
}

impl FreeRingElt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        Self::monomial(w, BigRational::one())
    }

    pub fn monomial(w: Word, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        FreeRingElt { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, w: Word, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    /// Left multiplication by a group element.
    pub fn left_mul_word(&self, w: &Word) -> Self {
        let mut out = FreeRingElt::zero();
        for (k, c) in &self.terms {
            out.add_term(w.mul(k), c);
        }
        out
    }

    /// Sum of coefficients (augmentation to the rationals).
    pub fn augmentation(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    /// Applies a function to every group element, summing the results linearly.
    pub fn map_words<T, F>(&self, mut f: F) -> Vec<(T, BigRational)>
    where
        F: FnMut(&Word) -> T,
    {
        self.terms.iter().map(|(w, c)| (f(w), c.clone())).collect()
    }
}

impl Add for &FreeRingElt {
    type Output = FreeRingElt;
    fn add(self, rhs: &FreeRingElt) -> FreeRingElt {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Neg for &FreeRingElt {
    type Output = FreeRingElt;
    fn neg(self) -> FreeRingElt {
        FreeRingElt { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Sub for &FreeRingElt {
    type Output = FreeRingElt;
    fn sub(self, rhs: &FreeRingElt) -> FreeRingElt {
        self + &(-rhs)
    }
}

impl Mul for &FreeRingElt {
    type Output = FreeRingElt;
    fn mul(self, rhs: &FreeRingElt) -> FreeRingElt {
        let mut out = FreeRingElt::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), &(ca * cb));
            }
        }
        out
    }
}

impl fmt::Display for FreeRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}*[{w}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Fox derivative of `w` with respect to generator `i`.
pub fn fox_derivative(w: &Word, i: usize) -> FreeRingElt {
    let mut out = FreeRingElt::zero();
    let one = BigRational::one();
    let minus_one = -BigRational::one();
    let mut prefix = Word::identity();
    for &(g, e) in w.letters() {
        if g == i {
            if e > 0 {
                for k in 0..e {
                    out.add_term(prefix.mul(&Word::power_of(g, k)), &one);
                }
            } else {
                for k in 1..=(-e) {
                    out.add_term(prefix.mul(&Word::power_of(g, -k)), &minus_one);
                }
            }
        }
        prefix = prefix.mul(&Word::power_of(g, e));
    }
    out
}

/// Relators-by-generators matrix of Fox derivatives.
pub fn fox_jacobian(p: &Presentation) -> Vec<Vec<FreeRingElt>> {
    p.relators().iter().map(|r| (0..p.num_generators()).map(|i| fox_derivative(r, i)).collect()).collect()
}

/// Evaluates `sum_i (dw/dx_i)(x_i - 1) - (w - 1)`; zero for every word.
pub fn fundamental_identity_defect(w: &Word, ngens: usize) -> FreeRingElt {
    let mut lhs = FreeRingElt::zero();
    for i in 0..ngens {
        let d = fox_derivative(w, i);
        let xi_minus_one = &FreeRingElt::from_word(Word::generator(i)) - &FreeRingElt::one();
        lhs = &lhs + &(&d * &xi_minus_one);
    }
    let rhs = &FreeRingElt::from_word(w.clone()) - &FreeRingElt::one();
    &lhs - &rhs
}
