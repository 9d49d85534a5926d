//! Right module coalgebras over a bialgebra.

use crate::bialgebra::Bialgebra;
use crate::coalgebra::{is_subcoalgebra, quotient_by_coideal, Coalgebra};
use crate::error::{Error, Result};
use crate::linalg::{apply_tensor, kron_vec, support, unit_vector, LinearMap, Matrix, Subspace};
use crate::scalar::Scalar;

/// A coalgebra `C` with a right `B`-action; `e_i · b_j` is column
/// `i * dim B + j` of `action`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCoalgebra<S> {
    coalgebra: Coalgebra<S>,
    bialgebra: Bialgebra<S>,
    action: LinearMap<S>,
}

/// `Σ (u₁ · v₁) ⊗ (u₂ · v₂)` for `u ∈ M ⊗ M`, `v ∈ B ⊗ B`, where `act`
/// is a right action `M ⊗ B -> M`.
pub fn diagonal_action<S: Scalar>(act: &LinearMap<S>, dim_b: usize, u: &[S], v: &[S]) -> Vec<S> {
    let n = act.codomain_dim();
    let mut out = vec![S::zero(); n * n];
    for (i, x) in support(u) {
        let (ua, ub) = (i / n, i % n);
        for (j, y) in support(v) {
            let (va, vb) = (j / dim_b, j % dim_b);
            let left = act.image_of_basis(ua * dim_b + va);
            let right = act.image_of_basis(ub * dim_b + vb);
            let xy = x.clone() * y.clone();
            for (k, l) in support(&left) {
                let s = xy.clone() * l.clone();
                for (m, r) in support(&right) {
                    out[k * n + m].add_mul(&s, r);
                }
            }
        }
    }
    out
}

/// Check the right module laws for `act: M ⊗ B -> M`.
pub(crate) fn check_right_module<S: Scalar>(
    act: &LinearMap<S>,
    dim: usize,
    b: &Bialgebra<S>,
) -> Result<()> {
    let m = b.dim();
    if act.domain_dim() != dim * m || act.codomain_dim() != dim {
        return Err(Error::ShapeMismatch {
            what: "action",
            expected: vec![dim, dim * m],
            got: vec![act.codomain_dim(), act.domain_dim()],
        });
    }
    let right = |v: &[S], bv: &[S]| act.apply(&kron_vec(v, bv));
    for i in 0..dim {
        let e = unit_vector(dim, i);
        if right(&e, b.unit()) != e {
            return Err(Error::ModuleLawViolation {
                law: "c·1 = c",
                i,
                j: 0,
            });
        }
        for j in 0..m {
            let ej = unit_vector(m, j);
            let ij = act.image_of_basis(i * m + j);
            for k in 0..m {
                let ek = unit_vector(m, k);
                if right(&ij, &ek) != right(&e, &b.multiply(&ej, &ek)) {
                    return Err(Error::ModuleLawViolation {
                        law: "(c·b)·b' = c·(bb')",
                        i,
                        j,
                    });
                }
            }
        }
    }
    Ok(())
}

pub fn check_module_coalgebra<S: Scalar>(
    coalgebra: Coalgebra<S>,
    bialgebra: Bialgebra<S>,
    action: LinearMap<S>,
) -> Result<ModuleCoalgebra<S>> {
    let n = coalgebra.dim();
    let m = bialgebra.dim();
    check_right_module(&action, n, &bialgebra)?;
    let bdeltas: Vec<Vec<S>> = (0..m)
        .map(|j| bialgebra.coalgebra().delta().image_of_basis(j))
        .collect();
    for i in 0..n {
        let di = coalgebra.delta().image_of_basis(i);
        for (j, bd) in bdeltas.iter().enumerate() {
            let ij = action.image_of_basis(i * m + j);
            if coalgebra.comultiply(&ij) != diagonal_action(&action, m, &di, bd) {
                return Err(Error::ComoduleCompatibilityViolation { i, j });
            }
            if coalgebra.epsilon(&ij)
                != coalgebra.counit()[i].clone() * bialgebra.coalgebra().counit()[j].clone()
            {
                return Err(Error::ModuleLawViolation {
                    law: "ε(c·b) = ε(c)ε(b)",
                    i,
                    j,
                });
            }
        }
    }
    Ok(ModuleCoalgebra {
        coalgebra,
        bialgebra,
        action,
    })
}

impl<S: Scalar> ModuleCoalgebra<S> {
    pub fn new(
        coalgebra: Coalgebra<S>,
        bialgebra: Bialgebra<S>,
        action: LinearMap<S>,
    ) -> Result<Self> {
        check_module_coalgebra(coalgebra, bialgebra, action)
    }

    /// `B` acting on itself by right multiplication.
    pub fn regular(b: &Bialgebra<S>) -> Self {
        Self::new(b.coalgebra().clone(), b.clone(), b.algebra().mul().clone())
            .expect("regular module coalgebra")
    }

    /// `c · b = ε(b) c`.
    pub fn trivial(c: &Coalgebra<S>, b: &Bialgebra<S>) -> Self {
        let (n, m) = (c.dim(), b.dim());
        let eps = b.coalgebra().counit();
        let action = LinearMap::from_columns(n * m, n, |idx| {
            let mut v = vec![S::zero(); n];
            v[idx / m] = eps[idx % m].clone();
            v
        });
        Self::new(c.clone(), b.clone(), action).expect("trivial action")
    }

    /// The one-dimensional coalgebra `k` with the trivial action.
    pub fn k_triv(b: &Bialgebra<S>) -> Self {
        Self::trivial(&Coalgebra::grouplike(1), b)
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn coalgebra(&self) -> &Coalgebra<S> {
        &self.coalgebra
    }

    pub fn bialgebra(&self) -> &Bialgebra<S> {
        &self.bialgebra
    }

    pub fn action(&self) -> &LinearMap<S> {
        &self.action
    }

    pub fn act(&self, c: &[S], b: &[S]) -> Vec<S> {
        self.action.apply(&kron_vec(c, b))
    }

    /// Matrix of `c ↦ c · b`.
    pub fn right_mult(&self, b: &[S]) -> Matrix<S> {
        let n = self.dim();
        let cols: Vec<Vec<S>> = (0..n).map(|i| self.act(&unit_vector(n, i), b)).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn is_submodule(&self, v: &Subspace<S>) -> bool {
        let m = self.bialgebra.dim();
        v.ambient_dim() == self.dim()
            && v.basis_vectors()
                .iter()
                .all(|x| (0..m).all(|j| v.contains(&self.act(x, &unit_vector(m, j)))))
    }

    pub fn is_submodule_coalgebra(&self, d: &Subspace<S>) -> bool {
        is_subcoalgebra(&self.coalgebra, d) && self.is_submodule(d)
    }

    /// `V · B`
    pub fn span_times_b(&self, v: &Subspace<S>) -> Subspace<S> {
        let m = self.bialgebra.dim();
        let mut out = Vec::new();
        for x in v.basis_vectors() {
            for j in 0..m {
                out.push(self.act(&x, &unit_vector(m, j)));
            }
        }
        Subspace::span(self.dim(), out)
    }

    /// The module coalgebra structure on a submodule coalgebra, in its
    /// canonical basis.
    pub fn restrict(&self, d: &Subspace<S>) -> Result<Self> {
        if !self.is_submodule_coalgebra(d) {
            return Err(if is_subcoalgebra(&self.coalgebra, d) {
                Error::NotASubmodule
            } else {
                Error::NotASubcoalgebra
            });
        }
        let c = self.coalgebra.restrict(d)?;
        let m = self.bialgebra.dim();
        let k = d.dim();
        let basis = d.basis_vectors();
        let action = LinearMap::from_columns(k * m, k, |idx| {
            let v = self.act(&basis[idx / m], &unit_vector(m, idx % m));
            d.coordinates(&v).expect("stable subspace")
        });
        Self::new(c, self.bialgebra.clone(), action)
    }

    /// Transport the structure along the basis change whose columns are the
    /// new basis vectors.
    pub fn change_basis(&self, p: &Matrix<S>) -> Result<Self> {
        let n = self.dim();
        let m = self.bialgebra.dim();
        let pinv = LinearMap::from_matrix(
            p.inverse()
                .ok_or(Error::Internal("singular basis change".into()))?,
        );
        let pm = LinearMap::from_matrix(p.clone());
        let delta = LinearMap::from_columns(n, n * n, |j| {
            apply_tensor(&pinv, &pinv, &self.coalgebra.comultiply(&p.col(j)))
        });
        let counit = (0..n).map(|j| self.coalgebra.epsilon(&p.col(j))).collect();
        let c = Coalgebra::new(delta, counit, self.coalgebra.labels().to_vec())?;
        let action = LinearMap::from_columns(n * m, n, |idx| {
            pinv.apply(&self.act(&pm.image_of_basis(idx / m), &unit_vector(m, idx % m)))
        });
        Self::new(c, self.bialgebra.clone(), action)
    }
}

/// `DB` for a subcoalgebra `D`.
pub fn orbit_subcoalgebra<S: Scalar>(
    m: &ModuleCoalgebra<S>,
    d: &Subspace<S>,
) -> Result<Subspace<S>> {
    if !is_subcoalgebra(m.coalgebra(), d) {
        return Err(Error::NotASubcoalgebra);
    }
    let db = m.span_times_b(d);
    if !m.is_submodule_coalgebra(&db) {
        return Err(Error::Internal("DB is not a submodule coalgebra".into()));
    }
    Ok(db)
}

/// `B⁺ = ker ε_B`
pub fn b_plus<S: Scalar>(b: &Bialgebra<S>) -> Subspace<S> {
    b.coalgebra().counit_map().kernel()
}

/// `CB⁺`
pub fn c_b_plus<S: Scalar>(m: &ModuleCoalgebra<S>) -> Subspace<S> {
    let n = m.dim();
    let mut out = Vec::new();
    for h in b_plus(m.bialgebra()).basis_vectors() {
        for i in 0..n {
            out.push(m.act(&unit_vector(n, i), &h));
        }
    }
    Subspace::span(n, out)
}

/// `C̄ = C / CB⁺` and the projection `η_C`.
pub fn overline_coalgebra<S: Scalar>(
    m: &ModuleCoalgebra<S>,
) -> Result<(Coalgebra<S>, LinearMap<S>)> {
    quotient_by_coideal(m.coalgebra(), &c_b_plus(m))
        .map_err(|e| Error::Internal(format!("CB⁺ is not a coideal: {e}")))
}

#[derive(Clone, Debug)]
pub struct CanMap<S> {
    pub map: LinearMap<S>,
    pub is_injective: bool,
    pub lands_in_cotensor: bool,
}

/// The map `C -> C ⊗ C̄ ⊗ C`, `x ⊗ y ↦ x₁ ⊗ η(x₂) ⊗ y − x ⊗ η(y₁) ⊗ y₂`,
/// whose kernel is `C □_{C̄} C`.
fn cotensor_defect<S: Scalar>(c: &Coalgebra<S>, eta: &LinearMap<S>) -> LinearMap<S> {
    let n = c.dim();
    let q = eta.codomain_dim();
    let id = LinearMap::identity(n);
    let right: Vec<Vec<S>> = (0..n)
        .map(|a| apply_tensor(&id, eta, &c.delta().image_of_basis(a)))
        .collect();
    let left: Vec<Vec<S>> = (0..n)
        .map(|b| apply_tensor(eta, &id, &c.delta().image_of_basis(b)))
        .collect();
    LinearMap::from_columns(n * n, n * q * n, |idx| {
        let (a, b) = (idx / n, idx % n);
        let mut v = kron_vec(&right[a], &unit_vector(n, b));
        let w = kron_vec(&unit_vector(n, a), &left[b]);
        for (x, y) in v.iter_mut().zip(w) {
            *x -= y;
        }
        v
    })
}

/// `C □_{C̄} C` inside `C ⊗ C`.
pub fn cotensor_square<S: Scalar>(m: &ModuleCoalgebra<S>) -> Result<Subspace<S>> {
    let (_, eta) = overline_coalgebra(m)?;
    Ok(cotensor_defect(m.coalgebra(), &eta).kernel())
}

/// `can(c ⊗ b) = Σ c₁ ⊗ c₂ b`
pub fn can_map<S: Scalar>(m: &ModuleCoalgebra<S>) -> Result<CanMap<S>> {
    let n = m.dim();
    let k = m.bialgebra().dim();
    let id = LinearMap::identity(n);
    let map = LinearMap::from_columns(n * k, n * n, |idx| {
        let (i, j) = (idx / k, idx % k);
        let right = LinearMap::from_matrix(m.right_mult(&unit_vector(k, j)));
        apply_tensor(&id, &right, &m.coalgebra().delta().image_of_basis(i))
    });
    let (_, eta) = overline_coalgebra(m)?;
    let defect = cotensor_defect(m.coalgebra(), &eta);
    let lands_in_cotensor = defect.compose(&map)?.is_zero();
    if !lands_in_cotensor {
        return Err(Error::Internal(
            "can does not land in the cotensor product".into(),
        ));
    }
    Ok(CanMap {
        is_injective: map.is_injective(),
        map,
        lands_in_cotensor,
    })
}

/// Block-diagonal direct sum over a common bialgebra.
pub fn direct_sum<S: Scalar>(ms: &[ModuleCoalgebra<S>]) -> Result<ModuleCoalgebra<S>> {
    let first = ms
        .first()
        .ok_or(Error::Internal("empty direct sum".into()))?;
    if ms.iter().any(|x| x.bialgebra() != first.bialgebra()) {
        return Err(Error::MixedBialgebra);
    }
    let b = first.bialgebra().clone();
    let k = b.dim();
    let mut c = first.coalgebra().clone();
    for x in &ms[1..] {
        c = c.direct_sum(x.coalgebra());
    }
    let n = c.dim();
    let mut offsets = Vec::new();
    let mut off = 0;
    for x in ms {
        offsets.push((off, x));
        off += x.dim();
    }
    let action = LinearMap::from_columns(n * k, n, |idx| {
        let (i, j) = (idx / k, idx % k);
        let &(o, x) = offsets.iter().rev().find(|(o, _)| *o <= i).expect("offset");
        let local = x.action().image_of_basis((i - o) * k + j);
        let mut v = vec![S::zero(); n];
        for (t, val) in local.into_iter().enumerate() {
            v[o + t] = val;
        }
        v
    });
    ModuleCoalgebra::new(c, b, action)
}

/// The summand embeddings of a direct sum, as subspaces.
pub fn summand_subspaces<S: Scalar>(ms: &[ModuleCoalgebra<S>]) -> Vec<Subspace<S>> {
    let total: usize = ms.iter().map(|m| m.dim()).sum();
    let mut off = 0;
    ms.iter()
        .map(|m| {
            let s = Subspace::coordinate(total, off..off + m.dim());
            off += m.dim();
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{zoo, F3, Q};

    fn h4() -> Bialgebra<Q> {
        zoo::sweedler_h4::<Q>().unwrap().into_bialgebra()
    }

    #[test]
    fn regular_and_trivial_validate() {
        let b = h4();
        assert_eq!(ModuleCoalgebra::regular(&b).dim(), 4);
        assert_eq!(ModuleCoalgebra::trivial(b.coalgebra(), &b).dim(), 4);
    }

    #[test]
    fn transposed_action_rejected() {
        let b = h4();
        let mul = b.algebra().mul();
        // e_i · e_j := e_j e_i
        let act = LinearMap::from_columns(16, 4, |idx| mul.image_of_basis((idx % 4) * 4 + idx / 4));
        assert!(ModuleCoalgebra::new(b.coalgebra().clone(), b.clone(), act).is_err());
    }

    #[test]
    fn orbits_in_sweedler() {
        let b = h4();
        let reg = ModuleCoalgebra::regular(&b);
        assert!(orbit_subcoalgebra(&reg, &Subspace::basis_vector(4, 0))
            .unwrap()
            .is_full());
        assert!(orbit_subcoalgebra(&reg, &Subspace::basis_vector(4, 1))
            .unwrap()
            .is_full());
        let triv = ModuleCoalgebra::trivial(b.coalgebra(), &b);
        assert_eq!(
            orbit_subcoalgebra(&triv, &Subspace::basis_vector(4, 1)).unwrap(),
            Subspace::basis_vector(4, 1)
        );
        assert_eq!(
            orbit_subcoalgebra(&reg, &Subspace::basis_vector(4, 2)),
            Err(Error::NotASubcoalgebra)
        );
    }

    #[test]
    fn augmentation_ideals() {
        let b = h4();
        let q = |x: i64| Q::from_i64(x);
        assert_eq!(
            b_plus(&b),
            Subspace::span(
                4,
                [
                    vec![q(1), q(-1), q(0), q(0)],
                    vec![q(0), q(0), q(1), q(0)],
                    vec![q(0), q(0), q(0), q(1)]
                ]
            )
        );
        assert!(b_plus(&Bialgebra::<Q>::trivial()).is_zero());
        let c2 = zoo::group_algebra::<Q>(&zoo::CayleyTable::cyclic(2))
            .unwrap()
            .into_bialgebra();
        assert_eq!(b_plus(&c2), Subspace::span(2, [vec![q(1), q(-1)]]));
    }

    #[test]
    fn overlines() {
        let b = h4();
        let (cbar, _) = overline_coalgebra(&ModuleCoalgebra::regular(&b)).unwrap();
        assert_eq!(cbar.dim(), 1);
        let (cbar, eta) = overline_coalgebra(&ModuleCoalgebra::trivial(b.coalgebra(), &b)).unwrap();
        assert_eq!(cbar.dim(), 4);
        assert_eq!(eta, LinearMap::identity(4));
    }

    #[test]
    fn can_injectivity() {
        let b = h4();
        assert!(can_map(&ModuleCoalgebra::regular(&b)).unwrap().is_injective);
        assert!(!can_map(&ModuleCoalgebra::k_triv(&b)).unwrap().is_injective);
        let k = Bialgebra::<Q>::trivial();
        assert!(can_map(&ModuleCoalgebra::k_triv(&k)).unwrap().is_injective);
    }

    #[test]
    fn can_injectivity_survives_basis_change() {
        let b = zoo::sweedler_h4::<F3>().unwrap().into_bialgebra();
        let reg = ModuleCoalgebra::regular(&b);
        let p = Matrix::from_fn(4, 4, |i, j| {
            F3::from_i64(if i == j {
                1
            } else if i < j {
                (i + j) as i64
            } else {
                0
            })
        });
        let moved = reg.change_basis(&p).unwrap();
        assert!(can_map(&moved).unwrap().is_injective);
        let triv = ModuleCoalgebra::trivial(b.coalgebra(), &b)
            .change_basis(&p)
            .unwrap();
        assert!(!can_map(&triv).unwrap().is_injective);
    }

    #[test]
    fn direct_sums() {
        let b = h4();
        let s = direct_sum(&[ModuleCoalgebra::regular(&b), ModuleCoalgebra::k_triv(&b)]).unwrap();
        assert_eq!(s.dim(), 5);
        let parts = summand_subspaces(&[ModuleCoalgebra::regular(&b), ModuleCoalgebra::k_triv(&b)]);
        assert!(parts.iter().all(|p| s.is_submodule_coalgebra(p)));
        let single = direct_sum(&[ModuleCoalgebra::regular(&b)]).unwrap();
        assert_eq!(single, ModuleCoalgebra::regular(&b));
        let k = Bialgebra::<Q>::trivial();
        assert_eq!(
            direct_sum(&[ModuleCoalgebra::k_triv(&k), ModuleCoalgebra::k_triv(&b)]),
            Err(Error::MixedBialgebra)
        );
    }
}
