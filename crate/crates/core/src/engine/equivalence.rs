use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::membership::{membership_cocleft, SearchOptions, Verdict};
use crate::coalgebra::{coradical, simple_components};
use crate::error::{Error, Result};
use crate::hopf_module::{
    cotensor, counit_theta, free_hopf_module, tor1, triangle_identity, unit_xi, wedge_in_module,
    Comodule, HopfModule,
};
use crate::linalg::{unit_vector, Subspace};
use crate::module_coalgebra::{orbit_subcoalgebra, overline_coalgebra, ModuleCoalgebra};
use crate::scalar::Scalar;

const MAX_QUOTIENTS: usize = 16;
const MAX_SUMS: usize = 6;
const RANDOM_GENERATORS: usize = 4;

#[derive(Clone, Debug)]
pub struct FamilyMember<S> {
    pub name: String,
    pub module: HopfModule<S>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MemberReport {
    pub name: String,
    pub dim: usize,
    pub overline_dim: usize,
    pub tor1: usize,
    pub xi_iso: bool,
    pub theta_iso: bool,
    pub triangle: bool,
}

impl MemberReport {
    /// Failures of the necessary conditions for membership in ℰ.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.tor1 != 0 {
            out.push(format!("Tor₁ has dimension {}", self.tor1));
        }
        if self.overline_dim == 0 && self.dim > 0 {
            out.push(format!("M̄ = 0 but dim M = {}", self.dim));
        }
        if !self.xi_iso {
            out.push("Ξ_M is not an isomorphism".into());
        }
        if !self.theta_iso {
            out.push("Θ_M̄ is not an isomorphism".into());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    Refuted {
        member: String,
        reasons: Vec<String>,
    },
    Consistent {
        family_size: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub members: Vec<MemberReport>,
    pub verdict: EquivalenceVerdict,
    pub cocleft: Verdict,
    /// Cocleft but refuted; never expected.
    pub contradiction: bool,
    pub seed: u64,
}

fn push_distinct<S: Scalar>(subs: &mut Vec<Subspace<S>>, w: Subspace<S>) -> bool {
    if w.is_zero() || w.is_full() || subs.contains(&w) {
        return false;
    }
    subs.push(w);
    true
}

fn quotient_generators<S: Scalar>(n: usize, seed: u64) -> Vec<Vec<S>> {
    let mut gens: Vec<Vec<S>> = (0..n).map(|i| unit_vector(n, i)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            for sign in [S::one(), -S::one()] {
                let mut v = unit_vector::<S>(n, i);
                v[j] = sign;
                gens.push(v);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_GENERATORS {
        let mut v = vec![S::zero(); n];
        for _ in 0..3.min(n) {
            let i = rng.random_range(0..n);
            v[i] = S::sample(&mut rng, 3);
        }
        gens.push(v);
    }
    gens
}

/// The Hopf modules used to probe membership in ℰ: `C`, `𝒢(C)`, quotients
/// of `𝒢(C)` by generated Hopf submodules and their sums, the wedges
/// `{0} ∧ X` for `X = DB` and `X = C₀B`, and cotensors `N □ C` of minimal
/// comodules `N` over the simple components of `C̄`.
pub fn equivalence_family<S: Scalar>(
    c: &ModuleCoalgebra<S>,
    seed: u64,
) -> Result<Vec<FamilyMember<S>>> {
    let mut family = Vec::new();
    let base = HopfModule::from_coalgebra(c);
    let (g, _) = free_hopf_module(&base)?;
    family.push(FamilyMember {
        name: "C".into(),
        module: base.clone(),
    });
    family.push(FamilyMember {
        name: "G(C)".into(),
        module: g.clone(),
    });

    let gd = g.dim();
    let mut subs: Vec<Subspace<S>> = Vec::new();
    let mut labels = Vec::new();
    for (i, v) in quotient_generators::<S>(gd, seed).into_iter().enumerate() {
        if subs.len() >= MAX_QUOTIENTS {
            break;
        }
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        if push_distinct(&mut subs, g.generated(&Subspace::span(gd, [v]))) {
            labels.push(format!("G(C)/<g{i}>"));
        }
    }
    let singles = subs.len();
    for i in 0..singles.min(MAX_SUMS) {
        for j in (i + 1)..singles.min(MAX_SUMS) {
            let w = subs[i].sum(&subs[j])?;
            if push_distinct(&mut subs, w) {
                labels.push(format!(
                    "G(C)/({} + {})",
                    labels[i].trim_start_matches("G(C)/"),
                    labels[j].trim_start_matches("G(C)/")
                ));
            }
        }
    }
    for (w, name) in subs.iter().zip(labels) {
        family.push(FamilyMember {
            name,
            module: g.quotient(w)?.0,
        });
    }

    let cc = c.coalgebra();
    let mut xs = Vec::new();
    for d in simple_components(cc)? {
        let db = orbit_subcoalgebra(c, &d)?;
        if !xs.contains(&db) {
            xs.push(db);
        }
    }
    let c0b = orbit_subcoalgebra(c, &coradical(cc)?)?;
    if !xs.contains(&c0b) {
        xs.push(c0b);
    }
    for (mi, m) in [(0usize, &base), (1, &g)] {
        let zero = Subspace::zero(m.dim());
        for (xi, x) in xs.iter().enumerate() {
            let w = wedge_in_module(m, &zero, x)?;
            if !w.is_zero() {
                let owner = if mi == 0 { "C" } else { "G(C)" };
                family.push(FamilyMember {
                    name: format!("{{0}}∧X{xi} in {owner}"),
                    module: m.restrict(&w)?,
                });
            }
        }
    }

    let (cbar, _) = overline_coalgebra(c)?;
    let reg = Comodule::regular(&cbar);
    let comps = match simple_components(&cbar) {
        Ok(comps) => comps,
        Err(Error::NonSplitCoradical { .. }) => Vec::new(),
        Err(e) => return Err(e),
    };
    for (ci, d) in comps.iter().enumerate() {
        let minimal = d
            .basis_vectors()
            .into_iter()
            .map(|v| reg.generated(&Subspace::span(cbar.dim(), [v])))
            .min_by_key(|w| w.dim())
            .expect("simple components are nonzero");
        let n = reg.restrict(&minimal)?;
        let (h, _) = cotensor(&n, c)?;
        family.push(FamilyMember {
            name: format!("N{ci} □ C"),
            module: h,
        });
    }
    Ok(family)
}

pub fn member_report<S: Scalar>(name: &str, m: &HopfModule<S>) -> Result<MemberReport> {
    let xi = unit_xi(m)?;
    let theta = counit_theta(&xi.overline.comodule, m.over())?;
    Ok(MemberReport {
        name: name.to_string(),
        dim: m.dim(),
        overline_dim: xi.overline.quotient.dim(),
        tor1: tor1(m.module())?.dim(),
        xi_iso: xi.is_iso,
        theta_iso: theta.is_iso,
        triangle: triangle_identity(m)?,
    })
}

/// Probe membership in ℰ: refutation by the family, sufficiency via cocleftness.
pub fn equivalence_report<S: Scalar>(
    c: &ModuleCoalgebra<S>,
    opts: &SearchOptions,
) -> Result<EquivalenceReport> {
    let family = equivalence_family(c, opts.seed)?;
    let members = family
        .iter()
        .map(|f| member_report(&f.name, &f.module))
        .collect::<Result<Vec<_>>>()?;
    let verdict = match members.iter().find(|r| !r.failures().is_empty()) {
        Some(r) => EquivalenceVerdict::Refuted {
            member: r.name.clone(),
            reasons: r.failures(),
        },
        None => EquivalenceVerdict::Consistent {
            family_size: members.len(),
        },
    };
    let cocleft = membership_cocleft(c, opts, 0)?.verdict;
    let contradiction =
        cocleft == Verdict::Yes && matches!(verdict, EquivalenceVerdict::Refuted { .. });
    Ok(EquivalenceReport {
        members,
        verdict,
        cocleft,
        contradiction,
        seed: opts.seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::Bialgebra;
    use crate::{zoo, Q};

    fn h4() -> Bialgebra<Q> {
        zoo::sweedler_h4::<Q>().unwrap().into_bialgebra()
    }

    #[test]
    fn regular_is_consistent_member() {
        let rep = equivalence_report(&ModuleCoalgebra::regular(&h4()), &SearchOptions::default())
            .unwrap();
        assert!(
            matches!(rep.verdict, EquivalenceVerdict::Consistent { .. }),
            "{rep:?}"
        );
        assert_eq!(rep.cocleft, Verdict::Yes);
        assert!(rep
            .members
            .iter()
            .all(|m| m.tor1 == 0 && m.xi_iso && m.triangle));
    }

    #[test]
    fn trivial_module_is_refuted() {
        let rep =
            equivalence_report(&ModuleCoalgebra::k_triv(&h4()), &SearchOptions::default()).unwrap();
        assert!(matches!(rep.verdict, EquivalenceVerdict::Refuted { .. }));
        assert_eq!(rep.cocleft, Verdict::No);
        assert!(!rep.contradiction);
        assert!(rep.members.iter().all(|m| m.triangle));
    }

    #[test]
    fn trivial_bialgebra_member() {
        let k = Bialgebra::<Q>::trivial();
        let c = zoo::sweedler_h4::<Q>().unwrap();
        let rep = equivalence_report(
            &ModuleCoalgebra::trivial(c.coalgebra(), &k),
            &SearchOptions::default(),
        )
        .unwrap();
        assert_eq!(rep.cocleft, Verdict::Yes);
        assert!(matches!(rep.verdict, EquivalenceVerdict::Consistent { .. }));
    }

    #[test]
    fn family_is_deterministic() {
        let c = ModuleCoalgebra::k_triv(&h4());
        let a = equivalence_report(&c, &SearchOptions::default()).unwrap();
        let b = equivalence_report(&c, &SearchOptions::default()).unwrap();
        assert_eq!(a, b);
    }
}
