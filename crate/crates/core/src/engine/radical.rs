use rayon::prelude::*;

use super::membership::{membership, MembershipVerdict, RadicalClass, SearchOptions, Verdict};
use crate::coalgebra::{simple_components, wedge};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::module_coalgebra::{orbit_subcoalgebra, ModuleCoalgebra};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport<S> {
    pub simple: Subspace<S>,
    pub orbit: Subspace<S>,
    pub verdict: MembershipVerdict<S>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalResult<S> {
    pub class: RadicalClass,
    pub radical: Subspace<S>,
    pub components: Vec<ComponentReport<S>>,
    /// Sum of the member orbits, before saturation.
    pub seed_sum: Subspace<S>,
    /// `T₀ ⊆ T₁ ⊆ ...` under `T ↦ T ∧ T`.
    pub chain: Vec<Subspace<S>>,
    pub radical_verdict: Verdict,
    pub exact: bool,
}

pub fn radical_compute<S: Scalar>(
    m: &ModuleCoalgebra<S>,
    class: RadicalClass,
    opts: &SearchOptions,
) -> Result<RadicalResult<S>> {
    let c = m.coalgebra();
    let n = m.dim();
    let simples = simple_components(c)?;
    let components = simples
        .into_par_iter()
        .enumerate()
        .map(|(i, d)| {
            let orbit = orbit_subcoalgebra(m, &d)?;
            let verdict = membership(&m.restrict(&orbit)?, class, opts, i as u64)?;
            Ok(ComponentReport {
                simple: d,
                orbit,
                verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut seed_sum = Subspace::zero(n);
    for comp in components.iter().filter(|r| r.verdict.is_yes()) {
        seed_sum = seed_sum.sum(&comp.orbit)?;
    }
    let mut chain = vec![seed_sum.clone()];
    let mut t = seed_sum.clone();
    if class.is_idempotent() {
        loop {
            let next = wedge(c, &t, &t)?;
            if next == t {
                break;
            }
            t = next;
            chain.push(t.clone());
        }
    }
    if !m.is_submodule_coalgebra(&t) {
        return Err(Error::Internal(
            "radical is not a submodule coalgebra".into(),
        ));
    }
    let radical_verdict = membership(&m.restrict(&t)?, class, opts, u64::MAX)?.verdict;
    let exact = radical_verdict != Verdict::Unknown
        && components
            .iter()
            .all(|r| r.verdict.verdict != Verdict::Unknown);
    Ok(RadicalResult {
        class,
        radical: t,
        components,
        seed_sum,
        chain,
        radical_verdict,
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::Bialgebra;
    use crate::module_coalgebra::direct_sum;
    use crate::{zoo, Q};

    #[test]
    fn sweedler_with_trivial_summand() {
        let b = zoo::sweedler_h4::<Q>().unwrap().into_bialgebra();
        let m = direct_sum(&[ModuleCoalgebra::regular(&b), ModuleCoalgebra::k_triv(&b)]).unwrap();
        for class in [RadicalClass::Projective, RadicalClass::Cocleft] {
            let r = radical_compute(&m, class, &SearchOptions::default()).unwrap();
            assert_eq!(r.radical, Subspace::coordinate(5, 0..4));
            assert_eq!(r.radical_verdict, Verdict::Yes);
            assert!(r.exact);
        }
    }

    #[test]
    fn semisimple_radical_is_coradical() {
        let k = Bialgebra::<Q>::trivial();
        let h = zoo::sweedler_h4::<Q>().unwrap();
        let m = ModuleCoalgebra::trivial(h.coalgebra(), &k);
        let r = radical_compute(&m, RadicalClass::Semisimple, &SearchOptions::default()).unwrap();
        assert_eq!(r.radical, Subspace::coordinate(4, 0..2));
        assert_eq!(r.chain.len(), 1);
    }

    #[test]
    fn zero_radical() {
        let b = zoo::sweedler_h4::<Q>().unwrap().into_bialgebra();
        let r = radical_compute(
            &ModuleCoalgebra::k_triv(&b),
            RadicalClass::Projective,
            &SearchOptions::default(),
        )
        .unwrap();
        assert!(r.radical.is_zero());
        assert_eq!(r.radical_verdict, Verdict::Yes);
    }
}
