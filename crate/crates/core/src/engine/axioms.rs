use std::collections::HashMap;

use super::membership::{membership, RadicalClass, SearchOptions, Verdict};
use super::oracle::submodule_coalgebras;
use super::radical::radical_compute;
use crate::coalgebra::{coradical, generated_subcoalgebra, simple_components, wedge};
use crate::error::Result;
use crate::linalg::Subspace;
use crate::module_coalgebra::{orbit_subcoalgebra, ModuleCoalgebra};
use crate::scalar::{FieldKind, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub holds: bool,
    pub witness: Option<String>,
}

impl AxiomCheck {
    fn pass() -> Self {
        AxiomCheck {
            holds: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        AxiomCheck {
            holds: false,
            witness: Some(witness),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub instance: String,
    pub class: RadicalClass,
    pub exhaustive: bool,
    pub candidates: usize,
    pub members: usize,
    /// Submodule coalgebras of members are members.
    pub r1: AxiomCheck,
    /// Sums of members are members.
    pub r2: AxiomCheck,
    /// Wedges of members are members.
    pub r3: AxiomCheck,
    /// The computed radical is a member containing every member.
    pub maximal: AxiomCheck,
}

impl AxiomReport {
    pub fn failures(&self) -> Vec<&'static str> {
        [
            ("R1", &self.r1),
            ("R2", &self.r2),
            ("R3", &self.r3),
            ("maximality", &self.maximal),
        ]
        .into_iter()
        .filter(|(_, c)| !c.holds)
        .map(|(n, _)| n)
        .collect()
    }
}

struct Oracle<'a, S> {
    m: &'a ModuleCoalgebra<S>,
    class: RadicalClass,
    opts: SearchOptions,
    memo: HashMap<Subspace<S>, Verdict>,
}

impl<S: Scalar> Oracle<'_, S> {
    fn verdict(&mut self, d: &Subspace<S>) -> Result<Verdict> {
        if let Some(v) = self.memo.get(d) {
            return Ok(*v);
        }
        let v = membership(
            &self.m.restrict(d)?,
            self.class,
            &self.opts,
            self.memo.len() as u64,
        )?
        .verdict;
        self.memo.insert(d.clone(), v);
        Ok(v)
    }
}

fn describe<S: Scalar>(d: &Subspace<S>) -> String {
    let vs: Vec<String> = d
        .basis_vectors()
        .iter()
        .map(|v| {
            format!(
                "({})",
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    format!("span{{{}}}", vs.join(", "))
}

fn structured_family<S: Scalar>(
    m: &ModuleCoalgebra<S>,
    radical: &Subspace<S>,
) -> Result<Vec<Subspace<S>>> {
    let c = m.coalgebra();
    let n = m.dim();
    let mut base = vec![Subspace::zero(n), Subspace::full(n), radical.clone()];
    for i in 0..n {
        base.push(orbit_subcoalgebra(
            m,
            &generated_subcoalgebra(c, &Subspace::basis_vector(n, i))?,
        )?);
    }
    for d in simple_components(c)? {
        base.push(orbit_subcoalgebra(m, &d)?);
    }
    base.push(orbit_subcoalgebra(m, &coradical(c)?)?);
    let mut out: Vec<Subspace<S>> = Vec::new();
    let push = |d: Subspace<S>, out: &mut Vec<Subspace<S>>| {
        if !out.contains(&d) {
            out.push(d);
        }
    };
    for d in &base {
        push(d.clone(), &mut out);
    }
    for (i, x) in base.iter().enumerate() {
        for y in &base[i..] {
            push(x.sum(y)?, &mut out);
            push(wedge(c, x, y)?, &mut out);
        }
    }
    Ok(out)
}

/// Check the radical axioms for one class on one module coalgebra. Over
/// `F_2` or `F_3` in dimension at most 6 every submodule coalgebra is
/// examined; otherwise a family built from orbits, sums and wedges.
pub fn verify_radical_axioms<S: Scalar>(
    instance: &str,
    m: &ModuleCoalgebra<S>,
    class: RadicalClass,
    opts: &SearchOptions,
) -> Result<AxiomReport> {
    let c = m.coalgebra();
    let result = radical_compute(m, class, opts)?;
    let exhaustive = matches!(S::field(), FieldKind::Prime(p) if p <= 3) && m.dim() <= 6;
    let candidates = if exhaustive {
        submodule_coalgebras(m)?
    } else {
        structured_family(m, &result.radical)?
    };
    let mut oracle = Oracle {
        m,
        class,
        opts: *opts,
        memo: HashMap::new(),
    };
    let mut members = Vec::new();
    for d in &candidates {
        if oracle.verdict(d)? == Verdict::Yes {
            members.push(d.clone());
        }
    }

    let mut r1 = AxiomCheck::pass();
    'r1: for x in &members {
        for y in &candidates {
            if y.is_subspace_of(x) && oracle.verdict(y)? != Verdict::Yes {
                r1 = AxiomCheck::fail(format!(
                    "{} ⊆ member {} is not a member",
                    describe(y),
                    describe(x)
                ));
                break 'r1;
            }
        }
    }

    let mut r2 = AxiomCheck::pass();
    'r2: for (i, x) in members.iter().enumerate() {
        for y in &members[i..] {
            let s = x.sum(y)?;
            if oracle.verdict(&s)? != Verdict::Yes {
                r2 = AxiomCheck::fail(format!("{} + {} is not a member", describe(x), describe(y)));
                break 'r2;
            }
        }
    }

    let mut r3 = AxiomCheck::pass();
    'r3: for x in &members {
        for y in &members {
            let w = wedge(c, x, y)?;
            if oracle.verdict(&w)? != Verdict::Yes {
                r3 = AxiomCheck::fail(format!(
                    "{} ∧ {} = {} is not a member",
                    describe(x),
                    describe(y),
                    describe(&w)
                ));
                break 'r3;
            }
        }
    }

    let mut maximal = AxiomCheck::pass();
    if result.radical_verdict != Verdict::Yes {
        maximal = AxiomCheck::fail(format!(
            "computed radical {} is not a member",
            describe(&result.radical)
        ));
    } else if let Some(x) = members.iter().find(|x| !x.is_subspace_of(&result.radical)) {
        maximal = AxiomCheck::fail(format!(
            "member {} not contained in radical {}",
            describe(x),
            describe(&result.radical)
        ));
    }

    Ok(AxiomReport {
        instance: instance.to_string(),
        class,
        exhaustive,
        candidates: candidates.len(),
        members: members.len(),
        r1,
        r2,
        r3,
        maximal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::Bialgebra;
    use crate::{zoo, F3, Q};

    #[test]
    fn semisimple_class_fails_only_wedges() {
        let k = Bialgebra::<Q>::trivial();
        let h = zoo::sweedler_h4::<Q>().unwrap();
        let m = ModuleCoalgebra::trivial(h.coalgebra(), &k);
        let rep = verify_radical_axioms(
            "H4",
            &m,
            RadicalClass::Semisimple,
            &SearchOptions::default(),
        )
        .unwrap();
        assert_eq!(rep.failures(), vec!["R3"]);
        assert!(!rep.exhaustive);

        let k = Bialgebra::<F3>::trivial();
        let h = zoo::sweedler_h4::<F3>().unwrap();
        let m = ModuleCoalgebra::trivial(h.coalgebra(), &k);
        let rep = verify_radical_axioms(
            "H4",
            &m,
            RadicalClass::Semisimple,
            &SearchOptions::default(),
        )
        .unwrap();
        assert!(rep.exhaustive);
        assert_eq!(rep.failures(), vec!["R3"]);
    }

    #[test]
    fn idempotent_classes_pass() {
        let b = zoo::sweedler_h4::<F3>().unwrap().into_bialgebra();
        let m = crate::module_coalgebra::direct_sum(&[
            ModuleCoalgebra::regular(&b),
            ModuleCoalgebra::k_triv(&b),
        ])
        .unwrap();
        for class in [RadicalClass::Projective, RadicalClass::Cocleft] {
            let rep = verify_radical_axioms("H4+k", &m, class, &SearchOptions::default()).unwrap();
            assert!(rep.failures().is_empty(), "{rep:?}");
        }
    }
}
