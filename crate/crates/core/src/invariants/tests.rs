use super::*;
use crate::algebra::Algebra;
use crate::corpus::builtin_ring;
use crate::homology::stable_hom;
use crate::modules::direct_sum;

fn ring(name: &str) -> Arc<Algebra> {
    builtin_ring(name, 101).unwrap()
}

fn k(r: &Arc<Algebra>) -> Arc<Module> {
    Module::residue_field(r)
}

fn b_mod_x() -> Arc<Module> {
    let b = ring("B");
    let xb = Subspace::span(b.field(), 3, [&[0u32, 1, 0][..]]);
    Module::ring_quotient(&b, &xb)
}

#[test]
fn v_zero_is_projective_factoring() {
    for name in ["A", "B", "C", "D"] {
        let r = ring(name);
        let mods = [k(&r), Module::maximal_ideal(&r), Module::ring_mod_power(&r, 2), Module::regular(&r)];
        for x in &mods {
            for y in &mods {
                assert_eq!(v_subspace(x, y, 0).dim(), stable_hom(x, y).projective_factoring.dim());
            }
        }
    }
}

#[test]
fn v_subspace_examples() {
    let b = ring("B");
    let r = Module::regular(&b);
    let m = Module::maximal_ideal(&b);
    for n in 1..4 {
        assert_eq!(v_subspace(&r, &m, n).dim(), m.dim());
    }
    assert_eq!(v_subspace(&k(&b), &k(&b), 1).dim(), 0);
}

#[test]
fn xi_examples() {
    let a = ring("A");
    let r = Module::regular(&a);
    for n in 0..5 {
        assert_eq!(xi_n(&r, n), 1);
        assert_eq!(xi_n(&k(&a), n), 0);
    }
    let s = direct_sum(&r, &k(&a)).unwrap().module;
    assert_eq!(xi_n(&s, 0), 1);
}

#[test]
fn xi_sequence_examples() {
    let b = ring("B");
    let f2 = Module::free(&b, 2);
    let rep = xi_sequence(&f2, 6).unwrap();
    assert_eq!(rep.values, vec![2; 7]);
    assert_eq!(rep.certificate, Certificate::PdFinite);
    let a = ring("A");
    let rep = xi_sequence(&k(&a), 6).unwrap();
    assert_eq!(rep.values, vec![0; 7]);
    assert_eq!((rep.limit, rep.certificate), (0, Certificate::SelfInjective));
    let rep = xi_sequence(&b_mod_x(), 6).unwrap();
    assert_eq!(rep.values, vec![0; 7]);
    assert_eq!(rep.certificate, Certificate::HeuristicPlateau(4));
    assert!(!rep.limit_is_exact());
}

#[test]
fn certificate_strings_round_trip() {
    for c in [
        Certificate::PdFinite,
        Certificate::FullSpace,
        Certificate::SelfInjective,
        Certificate::ExtWindowToHorizon,
        Certificate::HeuristicPlateau(4),
        Certificate::Unresolved,
    ] {
        assert_eq!(c.to_string().parse::<Certificate>().unwrap(), c);
    }
}

#[test]
fn budget_is_enforced() {
    let b = ring("B");
    let err = xi_sequence(&k(&b), 20).unwrap_err();
    assert!(matches!(err, Error::Budget { .. }), "{err}");
}

#[test]
fn window_examples() {
    let a = ring("A");
    assert!(xi_window_check(&Module::ring_mod_power(&a, 2), 1, 5).unwrap().holds());
    let b = ring("B");
    assert!(xi_window_check(&Module::regular(&b), 1, 4).unwrap().holds());
    assert!(matches!(xi_window_check(&k(&b), 1, 1), Err(Error::Precondition(_))));
}

#[test]
fn delta_examples() {
    let a = ring("A");
    let s = direct_sum(&Module::regular(&a), &k(&a)).unwrap().module;
    assert_eq!(delta(&s).unwrap(), 1);
    assert_eq!(delta(&k(&a)).unwrap(), 0);
    assert!(matches!(delta(&k(&ring("B"))), Err(Error::Precondition(_))));
}

#[test]
fn index_examples() {
    assert_eq!(index(&ring("A")).unwrap().index, 3);
    assert_eq!(index(&ring("E")).unwrap().index, 2);
    let c = index(&ring("C")).unwrap();
    assert_eq!((c.index, c.variant), (3, IndexVariant::Delta));
    assert_eq!(c.values, vec![(1, 0), (2, 0), (3, 1)]);
}
