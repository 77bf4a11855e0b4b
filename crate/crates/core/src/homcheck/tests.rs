use super::*;
use crate::cli::corpus;
use crate::laurent::{abelianization, laurent_rank, specialize_jacobian};
use crate::presentations::{fox_jacobian, parse_presentation, parse_word, Word};

fn pres(name: &str) -> Presentation {
    corpus::presentation(name).unwrap()
}

fn hom(name: &str) -> GroupHom {
    corpus::map(name).unwrap().0
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[test]
fn h1_matrices() {
    let t = h1q_matrix(&hom("trefoil-ab"));
    assert_eq!(t.matrix.to_rows(), vec![vec![q(1)]]);
    assert!(t.iso && t.integral_free_part_iso);
    let n = h1q_matrix(&hom("noniso"));
    assert_eq!(n.matrix.to_rows(), vec![vec![q(1), q(0)], vec![q(0), q(1)]]);
    assert!(n.iso);
    let d = h1q_matrix(&hom("doubling"));
    assert_eq!(d.matrix.to_rows(), vec![vec![q(2)]]);
    assert!(d.mono && d.iso && !d.integral_free_part_iso);
}

#[test]
fn h2_certificates() {
    assert!(h2_vanish_cert(&pres("free2")));
    assert!(h2_vanish_cert(&pres("noniso-E")));
    let dup = parse_presentation("gens x y\nrel x y X Y\nrel x y X Y").unwrap();
    assert!(!h2_vanish_cert(&dup));
    assert!(!h2_vanish_cert(&pres("heisenberg")));
}

#[test]
fn verdicts() {
    let v = check_rational_two_connected(&hom("trefoil-ab"));
    assert!(v.h1_iso && v.h2_epi == H2Epi::CertifiedByTargetVanishing && v.certified());
    let v = check_rational_two_connected(&hom("noniso"));
    assert!(v.h1_iso && v.certified());
    let x = parse_presentation("gens x").unwrap();
    let f2 = pres("free2");
    let incl = GroupHom::new(x, f2, vec![Word::generator(0)]).unwrap();
    let v = check_rational_two_connected(&incl);
    assert!(v.h1_mono && !v.h1_iso && v.h2_epi == H2Epi::CertifiedByTargetVanishing);
}

#[test]
fn broken_map_is_rejected() {
    assert!(matches!(check_abelianized(&hom("broken")), Err(HomError::NotHomomorphismOnH1 { relator: 0, .. })));
    assert!(check_abelianized(&hom("noniso")).is_ok());
    // a^3 -> (t^2)^3 is still nontrivial; a^3 -> 1 is fine.
    let c3 = pres("cyclic3");
    let target = parse_presentation("gens s\nrel s^3").unwrap();
    let h = GroupHom::new(c3, target, vec![Word::generator(0)]).unwrap();
    assert!(check_abelianized(&h).is_ok());
}

#[test]
fn audits_hold_on_corpus() {
    for name in corpus::ENTRY_NAMES {
        let p = pres(name);
        for n in 0..=2 {
            assert!(rank_inequality_audit(&p, n).unwrap(), "{name} level {n}");
        }
    }
    assert!(rank_inequality_audit(&pres("free2"), 3).is_err());
}

#[test]
fn h2_certificate_keeps_jacobian_injective() {
    for name in corpus::ENTRY_NAMES {
        let p = pres(name);
        let ab = abelianization(&p);
        if !h2_vanish_cert(&p) || ab.b == 0 {
            continue;
        }
        let j = specialize_jacobian(&fox_jacobian(&p), &ab, p.num_generators());
        assert_eq!(laurent_rank(&j), p.num_relators(), "{name}");
    }
}

#[test]
fn free_subgroups() {
    let f2 = pres("free2");
    let w = |p: &Presentation, s: &str| parse_word(s, p.generators()).unwrap();
    assert_eq!(free_subgroup_criterion(&f2, &[w(&f2, "x"), w(&f2, "y")]), FreeSubgroupVerdict::FreeModuloOmega);
    assert_eq!(
        free_subgroup_criterion(&f2, &[w(&f2, "x"), w(&f2, "x^2")]),
        FreeSubgroupVerdict::Inconclusive { reasons: vec![InconclusiveReason::DependentImages] }
    );
    let e = pres("noniso-E");
    assert_eq!(free_subgroup_criterion(&e, &[w(&e, "t"), w(&e, "z")]), FreeSubgroupVerdict::FreeModuloOmega);
    assert_eq!(
        free_subgroup_criterion(&e, &[w(&e, "t"), w(&e, "w")]),
        FreeSubgroupVerdict::Inconclusive { reasons: vec![InconclusiveReason::DependentImages] }
    );
    let h = pres("heisenberg");
    assert_eq!(
        free_subgroup_criterion(&h, &[w(&h, "x")]),
        FreeSubgroupVerdict::Inconclusive { reasons: vec![InconclusiveReason::H2CertificateFailed] }
    );
}

#[test]
fn consequences() {
    let h = hom("noniso");
    let r = consequence_report(&h, &check_rational_two_connected(&h));
    assert!(r.hypotheses_certified);
    assert_eq!(r.ranks[0].source, Some(1));
    assert_eq!(r.ranks[0].target, Some(1));
    assert!(r.ranks.iter().all(|c| c.equality_required && c.equal == Some(true)));

    let (h, onto) = corpus::map("trefoil-ab").unwrap();
    assert!(onto);
    let v = check_rational_two_connected(&h).with_onto_assertion(&h);
    assert_eq!(v.surjectivity, Surjectivity::Certified);
    let r = consequence_report(&h, &v);
    assert!(r.claims.iter().any(|c| c.statement == "trefoil/trefoil^(n)_H = Z"));

    let heis = pres("heisenberg");
    let id = GroupHom::identity(&heis);
    let v = check_rational_two_connected(&id);
    assert_eq!(v.h2_epi, H2Epi::Unknown);
    let r = consequence_report(&id, &v);
    assert!(!r.hypotheses_certified && r.claims.is_empty());
    assert!(r.ranks.iter().all(|c| !c.equality_required));
}
