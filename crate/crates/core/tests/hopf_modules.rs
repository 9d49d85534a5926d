use modcoalg::bialgebra::Bialgebra;
use modcoalg::coalgebra::wedge;
use modcoalg::engine::{
    equivalence_family, equivalence_report, EquivalenceVerdict, SearchOptions, Verdict,
};
use modcoalg::hopf_module::*;
use modcoalg::linalg::{apply_tensor, unit_vector, Quotient, Subspace};
use modcoalg::module_coalgebra::{overline_coalgebra, ModuleCoalgebra};
use modcoalg::{zoo, Q};
use num_traits::Zero;

fn h4() -> Bialgebra<Q> {
    zoo::sweedler_h4::<Q>().unwrap().into_bialgebra()
}

#[test]
fn cofree_counit_is_iso() {
    let reg = ModuleCoalgebra::regular(&h4());
    let (cbar, _) = overline_coalgebra(&reg).unwrap();
    for v in 1..=3 {
        assert!(
            counit_theta(&cofree_comodule(v, &cbar), &reg)
                .unwrap()
                .is_iso
        );
        assert!(cofree_cotensor_iso(v, &reg).unwrap());
    }
}

#[test]
fn family_of_cocleft_coalgebra_is_acyclic() {
    let b = h4();
    let gh = zoo::grouplike_orbit(&ModuleCoalgebra::regular(&b), &unit_vector(4, 1));
    let k = Bialgebra::<Q>::trivial();
    let over_k = ModuleCoalgebra::trivial(b.coalgebra(), &k);
    for c in [ModuleCoalgebra::regular(&b), gh.unwrap(), over_k] {
        let rep = equivalence_report(&c, &SearchOptions::default()).unwrap();
        assert_eq!(rep.cocleft, Verdict::Yes);
        assert!(rep.members.len() > 2);
        for m in &rep.members {
            assert_eq!(m.tor1, 0, "{}", m.name);
            assert!(m.xi_iso && m.theta_iso && m.triangle, "{}", m.name);
        }
        assert!(matches!(rep.verdict, EquivalenceVerdict::Consistent { .. }));
    }
}

#[test]
fn triangle_identity_on_every_family_member() {
    let b = h4();
    for c in [ModuleCoalgebra::k_triv(&b), ModuleCoalgebra::regular(&b)] {
        for f in equivalence_family(&c, 3).unwrap() {
            assert!(triangle_identity(&f.module).unwrap(), "{}", f.name);
        }
    }
}

#[test]
fn trivial_module_family_has_vanishing_overline_witness() {
    let rep =
        equivalence_report(&ModuleCoalgebra::k_triv(&h4()), &SearchOptions::default()).unwrap();
    let EquivalenceVerdict::Refuted { member, reasons } = &rep.verdict else {
        panic!("{rep:?}");
    };
    assert_eq!(member, "G(C)");
    assert_eq!(reasons, &vec!["Ξ_M is not an isomorphism".to_string()]);
    assert!(rep.members.iter().any(|m| m.overline_dim == 0 && m.dim > 0));
}

#[test]
fn wedge_of_zero_is_a_relative_hopf_module() {
    // C = H4 with B = k, C₁ = k1, C₂ = kg, M = C₁ ∧ C₂
    let k = Bialgebra::<Q>::trivial();
    let h = zoo::sweedler_h4::<Q>().unwrap();
    let full = ModuleCoalgebra::trivial(h.coalgebra(), &k);
    let c1 = Subspace::basis_vector(4, 0);
    let c2 = Subspace::basis_vector(4, 1);
    let d = wedge(h.coalgebra(), &c1, &c2).unwrap();
    assert_eq!(d.dim(), 3);
    let over = full.restrict(&d).unwrap();
    let m = HopfModule::from_coalgebra(&over);
    let x1 = Subspace::span(3, [d.coordinates(&c1.basis_vectors()[0]).unwrap()]);
    let x2 = Subspace::span(3, [d.coordinates(&c2.basis_vectors()[0]).unwrap()]);
    let n = wedge_in_module(&m, &Subspace::zero(3), &x1).unwrap();
    assert!(!n.is_zero());
    for v in n.basis_vectors() {
        assert!(n.tensor(&x1).contains(&m.coaction().apply(&v)));
    }
    let q = Quotient::new(n.clone());
    let pi = q.projection();
    let px2 = Quotient::new(x2).projection();
    for j in 0..q.dim() {
        let rho = m.coaction().apply(&q.lift(&unit_vector(q.dim(), j)));
        let through = apply_tensor(&pi, &px2, &rho);
        assert!(
            through.iter().all(|x| x.is_zero()),
            "quotient coacts through C₂"
        );
    }
}

#[test]
fn tor_vanishes_on_free_modules() {
    let b = h4();
    let kt = HopfModule::from_coalgebra(&ModuleCoalgebra::k_triv(&b));
    let (g, _) = free_hopf_module(&kt).unwrap();
    assert!(tor1(g.module()).unwrap().is_zero());
    let (g2, _) =
        free_hopf_module(&HopfModule::from_coalgebra(&ModuleCoalgebra::regular(&b))).unwrap();
    assert!(tor1(g2.module()).unwrap().is_zero());
}
