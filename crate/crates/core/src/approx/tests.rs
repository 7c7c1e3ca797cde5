use super::*;
use crate::algebra::Algebra;
use crate::corpus::builtin_ring;
use crate::homology::{hom_basis, stable_hom};
use crate::invariants::xi_n;

fn ring(name: &str) -> Arc<Algebra> {
    builtin_ring(name, 101).unwrap()
}

fn k(r: &Arc<Algebra>) -> Arc<Module> {
    Module::residue_field(r)
}

fn assert_valid(seq: &ShortExactSeq) {
    let rep = verify_ses(seq);
    assert!(rep.all_pass(), "{:?}", rep.failures().collect::<Vec<_>>());
}

#[test]
fn counit_of_k_over_a_is_stable_iso() {
    let a = ring("A");
    let psi = counit_psi(&k(&a), 0).unwrap();
    assert_eq!(psi.source().dim(), 1);
    assert!(psi.is_isomorphism());
}

#[test]
fn counit_of_free_is_stably_zero() {
    for name in ["A", "B"] {
        let r = ring(name);
        let f = Module::free(&r, 2);
        for n in 0..3 {
            let psi = counit_psi(&f, n).unwrap();
            assert!(stable_hom(psi.source(), &f).is_stably_zero(&psi), "{name} n={n}");
        }
    }
}

#[test]
fn transpose_morphism_of_identity() {
    let d = ring("D");
    let m = Module::ring_mod_power(&d, 2);
    let t = transpose_morphism(&Morphism::identity(&m));
    assert!(t.is_equivariant());
    assert!(t.is_isomorphism());
}

#[test]
fn counit_is_natural() {
    for name in ["B", "C", "D"] {
        let r = ring(name);
        let (m, n) = (Module::maximal_ideal(&r), Module::ring_mod_power(&r, 2));
        for deg in 0..2 {
            let (pm, pn) = (counit_psi(&m, deg).unwrap(), counit_psi(&n, deg).unwrap());
            for f in hom_basis(&m, &n).basis {
                let of = crate::homology::syzygy_morphism(&f, deg);
                let t = transpose_morphism(&of);
                let ot = crate::homology::syzygy_morphism(&t, deg);
                let tt = transpose_morphism(&ot).with_endpoints(pm.source().clone(), pn.source().clone());
                assert!(tt.is_equivariant());
                let lhs = pn.compose(&tt);
                let rhs = f.compose(&pm);
                let diff = lhs.sub(&rhs);
                assert!(stable_hom(pm.source(), &n).is_stably_zero(&diff), "{name} n={deg}");
            }
        }
    }
}

#[test]
fn ab_over_self_injective_is_identity() {
    let a = ring("A");
    for m in [k(&a), Module::ring_mod_power(&a, 2)] {
        for n in 0..4 {
            let seq = ab_approximation(&m, n, true).unwrap();
            assert_valid(&seq);
            assert!(seq.left.is_zero());
            assert_eq!(seq.mid.dim(), m.dim());
            assert!(seq.surj.is_isomorphism());
        }
    }
}

#[test]
fn ab_of_free_module() {
    let b = ring("B");
    let r = Module::regular(&b);
    for n in 0..3 {
        let seq = ab_approximation(&r, n, true).unwrap();
        assert_valid(&seq);
        assert!(seq.left.is_zero());
        assert_eq!(seq.mid.dim(), 3);
    }
}

#[test]
fn ab_n1_always_exists_and_rank_is_xi() {
    for name in ["B", "C", "D"] {
        let r = ring(name);
        for m in [k(&r), Module::maximal_ideal(&r), Module::ring_mod_power(&r, 2)] {
            let raw = ab_approximation(&m, 1, false).unwrap();
            assert_valid(&raw);
            let seq = ab_approximation(&m, 1, true).unwrap();
            assert_valid(&seq);
            assert!(is_minimal_approximation(&seq));
            assert_eq!(seq.mid.free_rank(), xi_n(&m, 1), "{name}");
        }
    }
}

#[test]
fn minimality_detects_padding() {
    let b = ring("B");
    let seq = ab_approximation(&Module::maximal_ideal(&b), 1, true).unwrap();
    assert!(is_minimal_approximation(&seq));
    let padded = pad_approximation(&seq, 2).unwrap();
    assert_valid(&padded);
    assert!(!is_minimal_approximation(&padded));
    let id = ab_approximation(&k(&ring("A")), 0, false).unwrap();
    assert!(is_minimal_approximation(&id));
}

#[test]
fn randomized_minimal_approximations_are_isomorphic() {
    let c = ring("C");
    let m = Module::maximal_ideal(&c);
    let a = ab_approximation_randomized(&m, 2, 1).unwrap();
    let b = ab_approximation_randomized(&m, 2, 2).unwrap();
    assert!(crate::modules::is_isomorphic(&a.mid, &b.mid, 3).is_isomorphic());
    assert!(crate::modules::is_isomorphic(&a.left, &b.left, 3).is_isomorphic());
}

#[test]
fn not_in_a_reports_degree() {
    let b = ring("B");
    let err = ab_approximation(&k(&b), 2, true).unwrap_err();
    assert!(matches!(err, Error::NotInCategory(_)), "{err}");
}

#[test]
fn origin_examples() {
    let a = ring("A");
    let r = Module::regular(&a);
    for n in 0..3 {
        let seq = origin_extension(&r, n).unwrap();
        assert_valid(&seq);
        assert_eq!((seq.left.dim(), seq.mid.dim(), seq.right.dim()), (3, 3, 0));
    }
    let seq = origin_extension(&k(&a), 2).unwrap();
    assert_valid(&seq);
    assert!(seq.right.syzygy(1).is_zero());
    let b = ring("B");
    let err = origin_extension(&k(&b), 1).unwrap_err();
    assert!(err.to_string().contains("Ext^1(M, R)"), "{err}");
}

#[test]
fn represented_by_monomorphisms_examples() {
    let b = ring("B");
    let kb = k(&b);
    let m = Module::maximal_ideal(&b);
    let incl = hom_basis(&kb, &m).basis[0].clone();
    assert!(represented_by_monomorphisms(&incl).0);
    let z = Module::zero(&b);
    assert!(represented_by_monomorphisms(&Morphism::zero(&kb, &z)).0);
    // Tr k over B is not torsionless.
    let t = kb.transpose();
    assert!(!t.evaluation_map().torsionless);
    let (ok, s) = represented_by_monomorphisms(&Morphism::zero(&t, &z));
    assert!(!ok);
    assert_eq!(s.source().dim(), t.dim());
}

#[test]
fn hull_examples() {
    let a = ring("A");
    let seq = fpd_hull(&k(&a), 0, true).unwrap();
    assert_valid(&seq);
    assert_eq!((seq.mid.mu(), seq.right.mu()), (1, 1));
    assert_eq!(seq.mid.dim(), 3);
    let b = ring("B");
    let r = Module::regular(&b);
    for n in 0..3 {
        let seq = fpd_hull(&r, n, true).unwrap();
        assert_valid(&seq);
        assert_eq!((seq.mid.dim(), seq.right.dim()), (3, 0));
    }
    assert!(matches!(fpd_hull(&k(&b), 1, true), Err(Error::NotInCategory(_))));
}

#[test]
fn hull_mu_difference_is_xi() {
    for name in ["A", "C", "B", "D"] {
        let r = ring(name);
        for m in [k(&r), Module::maximal_ideal(&r), Module::ring_mod_power(&r, 2), Module::regular(&r)] {
            for n in 0..3 {
                if !membership(&m, n).unwrap().in_h {
                    continue;
                }
                let xi = xi_n(&m, n);
                for seq in [fpd_hull(&m, n, true).unwrap(), fpd_hull(&m, n, false).unwrap()] {
                    assert_valid(&seq);
                    assert_eq!(seq.mid.mu() - seq.right.mu(), xi, "{name} n={n}");
                    let padded = pad_hull(&seq, 1).unwrap();
                    assert_valid(&padded);
                    assert_eq!(padded.mid.mu() - padded.right.mu(), xi);
                }
            }
        }
    }
}

#[test]
fn membership_examples() {
    let a = ring("A");
    for n in 0..4 {
        let r = membership(&k(&a), n).unwrap();
        assert!(r.in_a && r.in_e && r.in_h);
    }
    let b = ring("B");
    let r = membership(&k(&b), 1).unwrap();
    assert!(r.in_a && !r.in_e && !r.in_h);
    let r = membership(&Module::regular(&b), 2).unwrap();
    assert!(r.in_a && r.in_e && r.in_h);
}

#[test]
fn witness_examples() {
    let a = ring("A");
    let sum = direct_sum(&Module::regular(&a), &k(&a)).unwrap().module;
    match witness_map(&sum, 1).unwrap() {
        Witness::Map { residue_nonzero, .. } => assert!(residue_nonzero),
        Witness::None => panic!("expected a witness"),
    }
    assert!(matches!(witness_map(&k(&a), 1).unwrap(), Witness::None));
    match witness_map(&Module::regular(&a), 2).unwrap() {
        Witness::Map { f, residue_nonzero } => assert!(residue_nonzero && f.is_isomorphism()),
        Witness::None => panic!("expected a witness"),
    }
}

#[test]
fn verify_reports_failures() {
    let b = ring("B");
    let kb = k(&b);
    // 0 → 0 → k → k → 0 claimed as AB(2): k has Ext¹(k, B) ≠ 0.
    let z = Module::zero(&b);
    let seq = ShortExactSeq::new(Morphism::zero(&z, &kb), Morphism::identity(&kb), SeqKind::Ab(2), kb.clone()).unwrap();
    let rep = verify_ses(&seq);
    let failed: Vec<_> = rep.failures().map(|c| c.name.clone()).collect();
    assert_eq!(failed, vec!["ext-vanishing(mid, 1)", "ext-vanishing(mid, 2)"]);
    // Non-exact middle.
    let seq = ShortExactSeq::new(Morphism::zero(&z, &kb), Morphism::zero(&kb, &kb), SeqKind::Ab(0), kb.clone()).unwrap();
    let rep = verify_ses(&seq);
    assert!(rep.failures().any(|c| c.name == "exact-at-mid"));
}
