use modcoalg::bialgebra::{convolution, convolution_unit, unflatten};
use modcoalg::coalgebra::{generated_subcoalgebra, is_subcoalgebra, wedge};
use modcoalg::engine::{membership_cocleft, SearchOptions, Verdict};
use modcoalg::linalg::{Quotient, Subspace};
use modcoalg::module_coalgebra::ModuleCoalgebra;
use modcoalg::{zoo, Scalar, F5, F7};
use proptest::prelude::*;

fn vectors(n: usize, count: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..4, n), 0..=count)
}

fn span<S: Scalar>(n: usize, vs: &[Vec<i64>]) -> Subspace<S> {
    Subspace::span(
        n,
        vs.iter()
            .map(|v| v.iter().map(|&x| S::from_i64(x)).collect::<Vec<_>>()),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn modular_dimension_law(a in vectors(5, 4), b in vectors(5, 4)) {
        let (x, y) = (span::<F5>(5, &a), span::<F5>(5, &b));
        let s = x.sum(&y).unwrap();
        let i = x.intersection(&y).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), x.dim() + y.dim());
        prop_assert!(i.is_subspace_of(&x) && x.is_subspace_of(&s));
    }

    #[test]
    fn annihilator_is_an_involution(a in vectors(6, 5)) {
        let x = span::<modcoalg::Q>(6, &a);
        prop_assert_eq!(x.annihilator().dim() + x.dim(), 6);
        prop_assert_eq!(x.annihilator().annihilator(), x);
    }

    #[test]
    fn quotient_lift_projects_back(a in vectors(5, 3), c in prop::collection::vec(-3i64..4, 5)) {
        let q = Quotient::new(span::<F7>(5, &a));
        let coords: Vec<F7> = c.iter().take(q.dim()).map(|&x| F7::from_i64(x)).collect();
        prop_assert_eq!(q.project(&q.lift(&coords)), coords);
    }

    #[test]
    fn convolution_is_associative(f in prop::collection::vec(-2i64..3, 16), g in prop::collection::vec(-2i64..3, 16), h in prop::collection::vec(-2i64..3, 16)) {
        let hopf = zoo::sweedler_h4::<F5>().unwrap();
        let (c, a) = (hopf.coalgebra(), hopf.algebra());
        let m = |v: &[i64]| unflatten(&v.iter().map(|&x| F5::from_i64(x)).collect::<Vec<_>>(), 4, 4);
        let (f, g, h) = (m(&f), m(&g), m(&h));
        let left = convolution(&convolution(&f, &g, c, a).unwrap(), &h, c, a).unwrap();
        let right = convolution(&f, &convolution(&g, &h, c, a).unwrap(), c, a).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(convolution(&f, &convolution_unit(c, a), c, a).unwrap(), f);
    }

    #[test]
    fn wedges_contain_their_factors(u in prop::collection::vec(-3i64..4, 9), v in prop::collection::vec(-3i64..4, 9)) {
        let t = zoo::taft_algebra::<F7>(3).unwrap();
        let c = t.coalgebra();
        let x = generated_subcoalgebra(c, &span::<F7>(9, &[u])).unwrap();
        let y = generated_subcoalgebra(c, &span::<F7>(9, &[v])).unwrap();
        let w = wedge(c, &x, &y).unwrap();
        prop_assert!(is_subcoalgebra(c, &w));
        prop_assert!(x.sum(&y).unwrap().is_subspace_of(&w));
    }

    #[test]
    fn cocleft_verdict_is_seed_independent(seed in any::<u64>()) {
        let b = zoo::sweedler_h4::<F5>().unwrap().into_bialgebra();
        let opts = SearchOptions { seed, trials: 4, ..SearchOptions::default() };
        prop_assert_eq!(membership_cocleft(&ModuleCoalgebra::regular(&b), &opts, 0).unwrap().verdict, Verdict::Yes);
        prop_assert_eq!(membership_cocleft(&ModuleCoalgebra::k_triv(&b), &opts, 1).unwrap().verdict, Verdict::No);
    }
}
