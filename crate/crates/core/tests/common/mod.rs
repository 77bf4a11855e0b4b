//! Seeded random inputs shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tfds::laurent::{IntMatrix, LaurentPoly, Matrix};
use tfds::presentations::{free_reduce, Word};
use tfds::skewfield::{ExtensionTower, MElt, SkewFieldElt, SkewPoly};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn random_word(rng: &mut ChaCha8Rng, ngens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    free_reduce((0..len).map(|_| (rng.gen_range(0..ngens), if rng.gen_bool(0.5) { 1 } else { -1 })))
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, max_dim: usize, bound: i64) -> IntMatrix {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    Matrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// Up to `max_terms` integer terms with exponents in `-span..=span`.
pub fn random_laurent(rng: &mut ChaCha8Rng, nvars: usize, max_terms: usize, span: i64) -> LaurentPoly {
    let n = rng.gen_range(0..=max_terms);
    LaurentPoly::from_terms(
        nvars,
        (0..n).map(|_| ((0..nvars).map(|_| rng.gen_range(-span..=span)).collect(), q(rng.gen_range(-3..=3)))),
    )
}

pub fn random_laurent_matrix(rng: &mut ChaCha8Rng, nvars: usize, max_dim: usize) -> Matrix<LaurentPoly> {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    Matrix::from_fn(rows, cols, |_, _| random_laurent(rng, nvars, 3, 1))
}

fn random_module_elt(t: &ExtensionTower, rng: &mut ChaCha8Rng) -> MElt {
    let (r, b) = (t.module_rank(), t.b());
    MElt(
        (0..r)
            .map(|_| {
                let mut e = vec![0; b];
                e[rng.gen_range(0..b)] = rng.gen_range(-1..=1);
                LaurentPoly::monomial(b, e, q(rng.gen_range(-1..=1)))
            })
            .collect(),
    )
}

fn random_coeff(rng: &mut ChaCha8Rng) -> BigRational {
    q(rng.gen_range(1..=3)) * if rng.gen_bool(0.5) { q(1) } else { q(-1) }
}

/// A top-layer polynomial with one or two group-element terms.
pub fn random_skew_poly(t: &ExtensionTower, rng: &mut ChaCha8Rng) -> SkewPoly {
    let b = t.b();
    let terms: Vec<(MElt, Vec<i64>, BigRational)> = (0..rng.gen_range(1..=2))
        .map(|_| (random_module_elt(t, rng), (0..b).map(|_| rng.gen_range(0..=1)).collect(), random_coeff(rng)))
        .collect();
    let x = t.group_ring_element(&terms);
    match x.as_frac() {
        Some(f) => f.num().clone(),
        None => SkewPoly::zero(b),
    }
}

/// `u^-1 p` with `u` a group element, or the inverse of such an element.
pub fn random_skew_element(t: &ExtensionTower, rng: &mut ChaCha8Rng) -> SkewFieldElt {
    let b = t.b();
    let g: Vec<i64> = (0..b).map(|_| rng.gen_range(-1..=1)).collect();
    let unit = t.group_ring_element(&[(random_module_elt(t, rng), g, random_coeff(rng))]);
    let p = t.from_poly(random_skew_poly(t, rng));
    let x = t.mul(&t.inv(&unit).expect("units are invertible"), &p);
    if rng.gen_bool(0.5) && !x.is_zero() {
        t.inv(&x).expect("nonzero")
    } else {
        x
    }
}
