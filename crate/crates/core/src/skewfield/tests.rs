use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::laurent::{LaurentPoly, Matrix};

fn lp(s: &str, b: usize) -> LaurentPoly {
    LaurentPoly::parse(s, b).unwrap()
}

fn melt(s: &[&str], b: usize) -> MElt {
    MElt(s.iter().map(|x| lp(x, b)).collect())
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Polynomial in the top layer with monomial coefficients `c E[v] s_1^g`.
fn random_poly(t: &ExtensionTower, rng: &mut ChaCha8Rng) -> SkewPoly {
    let (r, b) = (t.module_rank(), t.b());
    let mut p = SkewPoly::zero(b);
    let nterms = rng.gen_range(1..=2);
    for _ in 0..nterms {
        let v = MElt(
            (0..r)
                .map(|_| {
                    let mut e = vec![0; b];
                    e[rng.gen_range(0..b)] = rng.gen_range(-1..=1);
                    LaurentPoly::monomial(b, e, q(rng.gen_range(-1..=1)))
                })
                .collect(),
        );
        let g: Vec<i64> = (0..b).map(|_| rng.gen_range(0..=1)).collect();
        let c = q(rng.gen_range(1..=3)) * if rng.gen_bool(0.5) { q(1) } else { q(-1) };
        let x = t.group_ring_element(&[(v, g, c)]);
        p = t.poly_add(&p, x.as_frac().unwrap().num());
    }
    p
}

/// A unit `c E[v] s^g`.
fn random_unit(t: &ExtensionTower, rng: &mut ChaCha8Rng) -> SkewFieldElt {
    let (r, b) = (t.module_rank(), t.b());
    let v = MElt(
        (0..r)
            .map(|_| {
                let mut e = vec![0; b];
                e[rng.gen_range(0..b)] = rng.gen_range(-1..=1);
                LaurentPoly::monomial(b, e, q(rng.gen_range(-1..=1)))
            })
            .collect(),
    );
    let c = q(rng.gen_range(1..=3)) * if rng.gen_bool(0.5) { q(1) } else { q(-1) };
    let g: Vec<i64> = (0..b).map(|_| rng.gen_range(-1..=1)).collect();
    t.group_ring_element(&[(v, g, c)])
}

#[test]
fn sigma_examples() {
    let t = ExtensionTower::standard(2, 1);
    let one = t.one(0);
    assert!(sigma_apply(&t, 1, &one).is_one());
    let e = t.base(GAElt::monomial(melt(&["t2 + 1"], 2), BigRational::one(), 2));
    let se = sigma_apply(&t, 1, &e);
    let expect = t.base(GAElt::monomial(melt(&["t1*t2 + t1"], 2), BigRational::one(), 2));
    assert!(t.eq(&se, &expect));
    assert!(t.eq(&t.sigma(1, -1, &se), &e));
    // sigma_2 fixes s_1 and commutes with sigma_1 on the base.
    let s1 = t.skew_var(1, 1);
    assert!(t.eq(&t.sigma(2, 1, &s1), &s1));
    assert!(t.eq(&t.sigma(2, 1, &se), &t.sigma(1, 1, &t.sigma(2, 1, &e))));
}

#[test]
fn defining_relation() {
    let t = ExtensionTower::standard(1, 1);
    let a = t.embed(t.base(GAElt::monomial(melt(&["1"], 1), q(2), 1)), 1);
    let s = t.skew_var(1, 1);
    let lhs = t.mul(&s, &a);
    let sa = t.embed(t.sigma(1, 1, &t.base(GAElt::monomial(melt(&["1"], 1), q(2), 1))), 1);
    assert!(t.eq(&lhs, &t.mul(&sa, &s)));
    assert!(!t.eq(&lhs, &t.mul(&a, &s)));
}

#[test]
fn central_product() {
    let t = ExtensionTower::standard(1, 1);
    let one = t.one(0);
    let s_plus = t.poly_add(&t.poly_monomial(1, 1, one.clone()), &t.poly_one(1));
    let s_minus = t.poly_sub(&t.poly_monomial(1, 1, one.clone()), &t.poly_one(1));
    let prod = skew_mul(&t, &s_plus, &s_minus);
    let expect = t.poly_sub(&t.poly_monomial(1, 2, one), &t.poly_one(1));
    assert!(t.poly_eq(&prod, &expect));
}

#[test]
fn division_examples() {
    let t = ExtensionTower::standard(2, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let p = random_poly(&t, &mut rng);
    let (quot, rem) = skew_left_divmod(&t, &p, &p).unwrap();
    assert!(t.poly_eq(&quot, &t.poly_one(2)) && rem.is_zero());
    assert_eq!(skew_left_divmod(&t, &p, &SkewPoly::zero(2)).unwrap_err(), SkewError::DivisionByZero);
    for _ in 0..200 {
        let p = random_poly(&t, &mut rng);
        let q = random_poly(&t, &mut rng);
        if q.is_zero() {
            continue;
        }
        let (quot, rem) = skew_left_divmod(&t, &p, &q).unwrap();
        assert!(rem.is_zero() || rem.span() < q.span());
        assert!(t.poly_eq(&p, &t.poly_add(&t.poly_mul(&q, &quot), &rem)));
    }
}

#[test]
fn small_span_divisor_leaves_remainder() {
    let t = ExtensionTower::standard(1, 1);
    let one = t.one(0);
    let p = t.poly_monomial(1, 0, one.clone());
    let q = t.poly_add(&t.poly_monomial(1, 1, one.clone()), &t.poly_one(1));
    let (quot, rem) = skew_left_divmod(&t, &p, &q).unwrap();
    assert!(quot.is_zero());
    assert!(t.poly_eq(&rem, &p));
}

#[test]
fn ore_examples() {
    let t = ExtensionTower::standard(1, 1);
    let a0 = t.base(GAElt::monomial(melt(&["t"], 1), q(3), 1));
    let a = t.poly_monomial(1, 0, a0.clone());
    let s = t.poly_monomial(1, 1, t.one(0));
    let (a2, b2) = ore_pair(&t, &a, &s).unwrap();
    assert!(t.poly_eq(&a2, &t.poly_monomial(1, 0, t.sigma(1, 1, &a0))));
    assert!(t.poly_eq(&b2, &s));

    let c = ExtensionTower::commutative(2);
    let x = c.from_laurent(&lp("t1 + 2", 2));
    let y = c.from_laurent(&lp("t2 - t1^2", 2));
    let (xa, ya) = (x.as_frac().unwrap().num(), y.as_frac().unwrap().num());
    let (a2, b2) = ore_pair(&c, xa, ya).unwrap();
    assert!(c.poly_eq(&c.poly_mul(&a2, ya), &c.poly_mul(&b2, xa)));
    assert!(ore_pair(&c, xa, &SkewPoly::zero(2)).is_err());
}

#[test]
fn random_ore_pairs() {
    let t = ExtensionTower::standard(2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let a = random_poly(&t, &mut rng);
        let b = random_poly(&t, &mut rng);
        let (a2, b2) = ore_pair(&t, &a, &b).unwrap();
        assert!(!b2.is_zero());
        assert!(t.poly_eq(&t.poly_mul(&a2, &b), &t.poly_mul(&b2, &a)));
    }
}

#[test]
fn fraction_examples() {
    let t = ExtensionTower::standard(2, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let x = t.from_poly(random_poly(&t, &mut rng));
    assert!(t.eq(&frac_add(&t, &x, &t.zero(2)), &x));
    let xi = frac_inv(&t, &x).unwrap();
    assert!(frac_mul(&t, &x, &xi).is_one());
    assert!(frac_inv(&t, &t.zero(2)).is_err());
    let a = t.from_poly(random_poly(&t, &mut rng));
    let b = t.from_poly(random_poly(&t, &mut rng));
    let c = t.from_poly(random_poly(&t, &mut rng));
    let ai = t.inv(&a).unwrap();
    let lhs = t.add(&t.mul(&ai, &b), &t.mul(&ai, &c));
    let rhs = t.mul(&ai, &t.add(&b, &c));
    assert!(t.eq(&lhs, &rhs));
}

#[test]
fn rank_examples() {
    let t = ExtensionTower::standard(2, 2);
    let id = Matrix::from_fn(3, 3, |i, j| if i == j { t.one(2) } else { t.zero(2) });
    assert_eq!(skew_matrix_rank(&t, &id), 3);
    let z = Matrix::from_fn(2, 2, |_, _| t.zero(2));
    assert_eq!(skew_matrix_rank(&t, &z), 0);
    // x -> E[1, 0] s1, y -> E[0, 1] s2
    let one = BigRational::one();
    let x = t.group_ring_element(&[
        (melt(&["1", "0"], 2), vec![1, 0], one.clone()),
        (MElt::zero(2, 2), vec![0, 0], -one.clone()),
    ]);
    let y = t.group_ring_element(&[
        (melt(&["0", "1"], 2), vec![0, 1], one.clone()),
        (MElt::zero(2, 2), vec![0, 0], -one.clone()),
    ]);
    let row = Matrix::from_rows(vec![vec![x.clone(), y.clone()]], 2);
    assert_eq!(skew_matrix_rank(&t, &row), 1);
    let two = Matrix::from_rows(vec![vec![x.clone(), y.clone()], vec![t.mul(&y, &x), t.mul(&y, &y)]], 2);
    assert_eq!(skew_matrix_rank(&t, &two), 1);
    let swapped = Matrix::from_rows(vec![vec![x.clone(), y.clone()], vec![t.mul(&x, &y), t.mul(&y, &x)]], 2);
    assert_eq!(skew_matrix_rank(&t, &swapped), 2);
}

#[test]
fn debug_serialization() {
    let t = ExtensionTower::standard(1, 1);
    let x = t.group_ring_element(&[(melt(&["t"], 1), vec![1], BigRational::one())]);
    assert_eq!(x.to_string(), "(1)^-1 * ((E[t])*s1)");
    let y = t.inv(&t.add(&x, &t.one(1))).unwrap();
    assert_eq!(y.to_string(), "(E[-t] + s1)^-1 * (E[-t])");
}

/// `d^-1 n` with `d` a unit, or its inverse.
fn random_element(t: &ExtensionTower, rng: &mut ChaCha8Rng) -> SkewFieldElt {
    let n = t.from_poly(random_poly(t, rng));
    let x = t.mul(&t.inv(&random_unit(t, rng)).unwrap(), &n);
    if rng.gen_bool(0.5) && !x.is_zero() {
        t.inv(&x).unwrap()
    } else {
        x
    }
}

#[test]
fn field_axioms() {
    let t = ExtensionTower::standard(1, 1);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let (x, y, z) = (random_element(&t, &mut rng), random_element(&t, &mut rng), random_element(&t, &mut rng));
        let xy = t.mul(&x, &y);
        assert!(t.eq(&t.mul(&xy, &z), &t.mul(&x, &t.mul(&y, &z))));
        assert!(t.eq(&t.mul(&x, &t.add(&y, &z)), &t.add(&xy, &t.mul(&x, &z))));
        assert!(x.is_zero() || t.mul(&x, &t.inv(&x).unwrap()).is_one());
    }
}
