//! Grouplike orbits `gH`, their cointegrals, and the hypotheses under which
//! a module coalgebra is forced to be projective and cocleft.

use rayon::prelude::*;

use crate::bialgebra::{antipode, convolution, convolution_unit, HopfAlgebra};
use crate::coalgebra::{coradical, grouplikes};
use crate::engine::{
    membership_cocleft, membership_projective, verify_doi, SearchOptions, Verdict,
};
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, LinearMap, Subspace};
use crate::module_coalgebra::{can_map, ModuleCoalgebra};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrouplikeCertificate<S> {
    pub grouplike: Vec<S>,
    /// `gH` inside `C`.
    pub orbit: Subspace<S>,
    /// `h ↦ g·h` is injective.
    pub phi_iso: bool,
    /// `ψ = φ⁻¹: gH -> H`, in the coordinates of `orbit`.
    pub psi: Option<LinearMap<S>>,
    /// `ψ̄ = S ∘ ψ`.
    pub psi_bar: Option<LinearMap<S>>,
    /// `ψ ∗ ψ̄ = ψ̄ ∗ ψ = η ∘ ε` on `gH`.
    pub inverse_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchneiderReport<S> {
    pub grouplikes: Vec<GrouplikeCertificate<S>>,
    pub g_c_h: Subspace<S>,
    pub coradical: Subspace<S>,
    pub coradical_in_gch: bool,
    pub can_injective: bool,
    pub hypotheses: bool,
    pub predicted_projective: Option<bool>,
    pub predicted_cocleft: Option<bool>,
    pub direct_projective: Verdict,
    pub direct_cocleft: Verdict,
    pub agreement: bool,
}

fn certificate<S: Scalar>(
    m: &ModuleCoalgebra<S>,
    h: &HopfAlgebra<S>,
    g: Vec<S>,
) -> Result<GrouplikeCertificate<S>> {
    let k = h.dim();
    let images: Vec<Vec<S>> = (0..k).map(|j| m.act(&g, &unit_vector(k, j))).collect();
    let orbit = Subspace::span(m.dim(), images.iter().cloned());
    let phi_iso = orbit.dim() == k;
    if !phi_iso {
        return Ok(GrouplikeCertificate {
            grouplike: g,
            orbit,
            phi_iso,
            psi: None,
            psi_bar: None,
            inverse_verified: false,
        });
    }
    let restricted = m.restrict(&orbit)?;
    let phi = LinearMap::from_columns(k, k, |j| orbit.coordinates(&images[j]).expect("g·h ∈ gH"));
    let inv = phi
        .matrix()
        .inverse()
        .ok_or(Error::Internal("φ is not invertible".into()))?;
    let psi = LinearMap::from_matrix(inv);
    verify_doi(&restricted, &psi)?;
    let psi_bar = h.antipode().compose(&psi)?;
    let (c, a) = (restricted.coalgebra(), h.algebra());
    let unit = convolution_unit(c, a);
    let inverse_verified =
        convolution(&psi, &psi_bar, c, a)? == unit && convolution(&psi_bar, &psi, c, a)? == unit;
    Ok(GrouplikeCertificate {
        grouplike: g,
        orbit,
        phi_iso,
        psi: Some(psi),
        psi_bar: Some(psi_bar),
        inverse_verified,
    })
}

pub fn schneider_pipeline<S: Scalar>(
    m: &ModuleCoalgebra<S>,
    opts: &SearchOptions,
) -> Result<SchneiderReport<S>> {
    let h = antipode(m.bialgebra()).ok_or(Error::NotHopf)?;
    let c = m.coalgebra();
    let certs = grouplikes(c)?
        .into_par_iter()
        .map(|g| certificate(m, &h, g))
        .collect::<Result<Vec<_>>>()?;
    let mut g_c_h = Subspace::zero(m.dim());
    for cert in &certs {
        g_c_h = g_c_h.sum(&cert.orbit)?;
    }
    let c0 = coradical(c)?;
    let coradical_in_gch = c0.is_subspace_of(&g_c_h);
    let can_injective = can_map(m)?.is_injective;
    let hypotheses = coradical_in_gch && can_injective;
    let predicted = hypotheses.then_some(true);
    let direct_projective = membership_projective(m)?.verdict;
    let direct_cocleft = membership_cocleft(m, opts, 0)?.verdict;
    let agreement =
        !hypotheses || (direct_projective == Verdict::Yes && direct_cocleft == Verdict::Yes);
    Ok(SchneiderReport {
        grouplikes: certs,
        g_c_h,
        coradical: c0,
        coradical_in_gch,
        can_injective,
        hypotheses,
        predicted_projective: predicted,
        predicted_cocleft: predicted,
        direct_projective,
        direct_cocleft,
        agreement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{zoo, F7, Q};

    #[test]
    fn sweedler_regular() {
        let b = zoo::sweedler_h4::<Q>().unwrap().into_bialgebra();
        let rep =
            schneider_pipeline(&ModuleCoalgebra::regular(&b), &SearchOptions::default()).unwrap();
        assert!(rep.hypotheses && rep.agreement);
        assert_eq!(rep.grouplikes.len(), 2);
        assert!(rep
            .grouplikes
            .iter()
            .all(|g| g.phi_iso && g.inverse_verified));
        assert_eq!(rep.direct_cocleft, Verdict::Yes);
    }

    #[test]
    fn sweedler_trivial() {
        let b = zoo::sweedler_h4::<Q>().unwrap().into_bialgebra();
        let rep =
            schneider_pipeline(&ModuleCoalgebra::k_triv(&b), &SearchOptions::default()).unwrap();
        assert!(!rep.can_injective && !rep.hypotheses && rep.agreement);
        assert_eq!(
            (rep.direct_projective, rep.direct_cocleft),
            (Verdict::No, Verdict::No)
        );
        assert_eq!(rep.predicted_projective, None);
    }

    #[test]
    fn taft_regular() {
        let b = zoo::taft_algebra::<F7>(3).unwrap().into_bialgebra();
        let rep =
            schneider_pipeline(&ModuleCoalgebra::regular(&b), &SearchOptions::default()).unwrap();
        assert!(rep.hypotheses && rep.agreement);
        assert_eq!(rep.grouplikes.len(), 3);
    }
}
