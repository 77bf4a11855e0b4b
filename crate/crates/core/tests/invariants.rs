mod common;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use common::q;
use tfds::laurent::{laurent_gcd, laurent_rank, snf_int, IntMatrix, LaurentPoly, Matrix};
use tfds::presentations::{free_reduce, fundamental_identity_defect, Word};
use tfds::series::strebel_check;

fn word(ngens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..ngens, prop_oneof![Just(1i64), Just(-1i64)]), 0..=max_len).prop_map(free_reduce)
}

fn poly(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, nvars), -3i64..=3), 0..4)
        .prop_map(move |ts| LaurentPoly::from_terms(nvars, ts.into_iter().map(|(e, c)| (e, q(c)))))
}

fn poly_matrix(nvars: usize) -> impl Strategy<Value = Matrix<LaurentPoly>> {
    (1usize..=3, 1usize..=3).prop_flat_map(move |(r, c)| {
        prop::collection::vec(poly(nvars), r * c).prop_map(move |es| {
            let mut it = es.into_iter();
            Matrix::from_fn(r, c, |_, _| it.next().unwrap())
        })
    })
}

fn int_matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        prop::collection::vec(-6i64..=6, r * c).prop_map(move |es| {
            let mut it = es.into_iter();
            Matrix::from_fn(r, c, |_, _| BigInt::from(it.next().unwrap()))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn word_inverse_cancels(w in word(4, 40), v in word(4, 40)) {
        prop_assert!(w.mul(&w.inverse()).is_identity());
        prop_assert_eq!(w.mul(&v).inverse(), v.inverse().mul(&w.inverse()));
    }

    #[test]
    fn exponent_sums_are_additive(w in word(3, 30), v in word(3, 30)) {
        let s: Vec<i64> = w.exponent_sums(3).iter().zip(v.exponent_sums(3)).map(|(a, b)| a + b).collect();
        prop_assert_eq!(w.mul(&v).exponent_sums(3), s);
    }

    #[test]
    fn fox_identity(w in word(4, 64)) {
        prop_assert!(fundamental_identity_defect(&w, 4).is_zero());
    }

    #[test]
    fn laurent_text_round_trip(p in poly(2)) {
        prop_assert_eq!(LaurentPoly::parse(&p.to_string(), 2).unwrap(), p);
    }

    #[test]
    fn laurent_ring_axioms(a in poly(2), b in poly(2), c in poly(2)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn gcd_divides(a in poly(1), b in poly(1)) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = laurent_gcd(&a, &b);
        prop_assert!(a.exact_div(&g).is_some());
        prop_assert!(b.exact_div(&g).is_some());
    }

    #[test]
    fn rank_is_transpose_invariant(m in poly_matrix(2)) {
        let r = laurent_rank(&m);
        prop_assert!(r <= m.rows().min(m.cols()));
        prop_assert_eq!(r, laurent_rank(&m.transpose()));
    }

    #[test]
    fn augmentation_bound(m in poly_matrix(2)) {
        let c = strebel_check(&m);
        prop_assert!(c.holds && c.bound <= c.exact);
    }

    #[test]
    fn snf_contract(m in int_matrix(6)) {
        let s = snf_int(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        let diag = s.diagonal();
        prop_assert_eq!(diag.iter().filter(|d| !d.is_zero()).count(), m.to_rational().rank());
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
        if m.rows() == m.cols() {
            let prod: BigInt = diag.iter().product();
            prop_assert_eq!(prod, m.determinant().abs());
        }
    }
}
