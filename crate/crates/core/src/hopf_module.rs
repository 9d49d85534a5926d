//! Right modules, right comodules and `(C, B)`-Hopf modules, with the
//! functors `M ↦ M̄` and `N ↦ N □_{C̄} C`, their unit and counit, wedges
//! inside Hopf modules and `Tor₁ᴮ(M, k)`.

use crate::bialgebra::Bialgebra;
use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::linalg::{apply_tensor, kron_vec, support, unit_vector, LinearMap, Quotient, Subspace};
use crate::module_coalgebra::{b_plus, check_right_module, overline_coalgebra, ModuleCoalgebra};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule<S> {
    dim: usize,
    bialgebra: Bialgebra<S>,
    action: LinearMap<S>,
}

impl<S: Scalar> RightModule<S> {
    pub fn new(dim: usize, bialgebra: Bialgebra<S>, action: LinearMap<S>) -> Result<Self> {
        check_right_module(&action, dim, &bialgebra)?;
        Ok(RightModule {
            dim,
            bialgebra,
            action,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bialgebra(&self) -> &Bialgebra<S> {
        &self.bialgebra
    }

    pub fn action(&self) -> &LinearMap<S> {
        &self.action
    }

    pub fn act(&self, m: &[S], b: &[S]) -> Vec<S> {
        self.action.apply(&kron_vec(m, b))
    }

    /// `W · B`, closed.
    pub fn span_times_b(&self, w: &Subspace<S>) -> Subspace<S> {
        let k = self.bialgebra.dim();
        let mut out = w.basis_vectors();
        for x in w.basis_vectors() {
            for j in 0..k {
                out.push(self.act(&x, &unit_vector(k, j)));
            }
        }
        Subspace::span(self.dim, out)
    }

    pub fn is_submodule(&self, w: &Subspace<S>) -> bool {
        w.ambient_dim() == self.dim && self.span_times_b(w) == *w
    }

    /// `W · B⁺`
    pub fn times_b_plus(&self, w: &Subspace<S>) -> Subspace<S> {
        let mut out = Vec::new();
        for h in b_plus(&self.bialgebra).basis_vectors() {
            for x in w.basis_vectors() {
                out.push(self.act(&x, &h));
            }
        }
        Subspace::span(self.dim, out)
    }

    /// Structure on a submodule, in its canonical coordinates.
    pub fn restrict(&self, w: &Subspace<S>) -> Result<Self> {
        let k = self.bialgebra.dim();
        let basis = w.basis_vectors();
        let mut cols = Vec::with_capacity(basis.len() * k);
        for x in &basis {
            for j in 0..k {
                cols.push(
                    w.coordinates(&self.act(x, &unit_vector(k, j)))
                        .ok_or(Error::NotASubmodule)?,
                );
            }
        }
        let action = LinearMap::from_columns(basis.len() * k, basis.len(), |idx| cols[idx].clone());
        Self::new(basis.len(), self.bialgebra.clone(), action)
    }

    /// `M / W`, on the quotient's complement basis.
    pub fn quotient(&self, w: &Subspace<S>) -> Result<(Self, Quotient<S>)> {
        if !self.is_submodule(w) {
            return Err(Error::NotASubmodule);
        }
        let q = Quotient::new(w.clone());
        let k = self.bialgebra.dim();
        let d = q.dim();
        let action = LinearMap::from_columns(d * k, d, |idx| {
            q.project(&self.act(&q.lift(&unit_vector(d, idx / k)), &unit_vector(k, idx % k)))
        });
        Ok((Self::new(d, self.bialgebra.clone(), action)?, q))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule<S> {
    dim: usize,
    coalgebra: Coalgebra<S>,
    coaction: LinearMap<S>,
}

fn check_comodule<S: Scalar>(dim: usize, c: &Coalgebra<S>, rho: &LinearMap<S>) -> Result<()> {
    let n = c.dim();
    if rho.domain_dim() != dim || rho.codomain_dim() != dim * n {
        return Err(Error::ShapeMismatch {
            what: "coaction",
            expected: vec![dim * n, dim],
            got: vec![rho.codomain_dim(), rho.domain_dim()],
        });
    }
    let idm = LinearMap::identity(dim);
    let idc = LinearMap::identity(n);
    for i in 0..dim {
        let r = rho.image_of_basis(i);
        let lhs = apply_tensor(rho, &idc, &r);
        let rhs = apply_tensor(&idm, c.delta(), &r);
        if lhs != rhs {
            return Err(Error::ComoduleLawViolation {
                law: "(ρ⊗id)ρ = (id⊗Δ)ρ",
                i,
            });
        }
        if apply_tensor(&idm, &c.counit_map(), &r) != unit_vector(dim, i) {
            return Err(Error::ComoduleLawViolation {
                law: "(id⊗ε)ρ = id",
                i,
            });
        }
    }
    Ok(())
}

/// Left tensor legs of `w ∈ k^d ⊗ k^n`.
fn left_legs<S: Scalar>(d: usize, n: usize, w: &[S]) -> Vec<Vec<S>> {
    let mut legs = vec![vec![S::zero(); d]; n];
    for (idx, x) in support(w) {
        legs[idx % n][idx / n] = x.clone();
    }
    legs
}

impl<S: Scalar> Comodule<S> {
    pub fn new(dim: usize, coalgebra: Coalgebra<S>, coaction: LinearMap<S>) -> Result<Self> {
        check_comodule(dim, &coalgebra, &coaction)?;
        Ok(Comodule {
            dim,
            coalgebra,
            coaction,
        })
    }

    /// `C` coacting on itself by `Δ`.
    pub fn regular(c: &Coalgebra<S>) -> Self {
        Self::new(c.dim(), c.clone(), c.delta().clone()).expect("regular comodule")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coalgebra(&self) -> &Coalgebra<S> {
        &self.coalgebra
    }

    pub fn coaction(&self) -> &LinearMap<S> {
        &self.coaction
    }

    pub fn is_subcomodule(&self, w: &Subspace<S>) -> bool {
        let n = self.coalgebra.dim();
        w.basis_vectors().iter().all(|x| {
            left_legs(self.dim, n, &self.coaction.apply(x))
                .iter()
                .all(|l| w.contains(l))
        })
    }

    /// The subcomodule generated by `v`.
    pub fn generated(&self, v: &Subspace<S>) -> Subspace<S> {
        let n = self.coalgebra.dim();
        let mut out = Vec::new();
        for x in v.basis_vectors() {
            out.extend(left_legs(self.dim, n, &self.coaction.apply(&x)));
        }
        Subspace::span(self.dim, out)
    }

    pub fn restrict(&self, w: &Subspace<S>) -> Result<Self> {
        let n = self.coalgebra.dim();
        let basis = w.basis_vectors();
        let k = basis.len();
        let mut cols = Vec::with_capacity(k);
        for x in &basis {
            let r = self.coaction.apply(x);
            let mut col = vec![S::zero(); k * n];
            for (c, leg) in left_legs(self.dim, n, &r).iter().enumerate() {
                let coords = w
                    .coordinates(leg)
                    .ok_or(Error::NotInvariant { what: "coaction" })?;
                for (a, y) in coords.into_iter().enumerate() {
                    col[a * n + c] = y;
                }
            }
            cols.push(col);
        }
        Self::new(
            k,
            self.coalgebra.clone(),
            LinearMap::from_columns(k, k * n, |i| cols[i].clone()),
        )
    }
}

/// `ℱ(V) = V ⊗ C̄` with coaction `id ⊗ Δ̄`.
pub fn cofree_comodule<S: Scalar>(v_dim: usize, cbar: &Coalgebra<S>) -> Comodule<S> {
    let n = cbar.dim();
    let rho = LinearMap::identity(v_dim).tensor(cbar.delta());
    Comodule::new(v_dim * n, cbar.clone(), rho).expect("cofree comodule")
}

/// A right `B`-module and right `C`-comodule with `ρ(m·b) = Σ m₀b₁ ⊗ m₁b₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModule<S> {
    module: RightModule<S>,
    over: ModuleCoalgebra<S>,
    coaction: LinearMap<S>,
}

/// `Σ (u_M · v₁) ⊗ (u_C · v₂)` for `u ∈ M ⊗ C`, `v ∈ B ⊗ B`.
fn mixed_action<S: Scalar>(m: &RightModule<S>, c: &ModuleCoalgebra<S>, u: &[S], v: &[S]) -> Vec<S> {
    let (d, n, k) = (m.dim(), c.dim(), m.bialgebra().dim());
    let mut out = vec![S::zero(); d * n];
    for (i, x) in support(u) {
        let (ua, uc) = (i / n, i % n);
        for (j, y) in support(v) {
            let (va, vb) = (j / k, j % k);
            let left = m.action().image_of_basis(ua * k + va);
            let right = c.action().image_of_basis(uc * k + vb);
            let xy = x.clone() * y.clone();
            for (p, l) in support(&left) {
                let s = xy.clone() * l.clone();
                for (q, r) in support(&right) {
                    out[p * n + q].add_mul(&s, r);
                }
            }
        }
    }
    out
}

impl<S: Scalar> HopfModule<S> {
    pub fn new(
        module: RightModule<S>,
        over: ModuleCoalgebra<S>,
        coaction: LinearMap<S>,
    ) -> Result<Self> {
        if module.bialgebra() != over.bialgebra() {
            return Err(Error::MixedBialgebra);
        }
        check_comodule(module.dim(), over.coalgebra(), &coaction)?;
        let k = module.bialgebra().dim();
        let bdeltas: Vec<Vec<S>> = (0..k)
            .map(|j| module.bialgebra().coalgebra().delta().image_of_basis(j))
            .collect();
        for i in 0..module.dim() {
            let r = coaction.image_of_basis(i);
            for (j, bd) in bdeltas.iter().enumerate() {
                let lhs = coaction.apply(&module.action().image_of_basis(i * k + j));
                if lhs != mixed_action(&module, &over, &r, bd) {
                    return Err(Error::HopfModuleViolation { i, j });
                }
            }
        }
        Ok(HopfModule {
            module,
            over,
            coaction,
        })
    }

    /// `C` as a Hopf module over itself.
    pub fn from_coalgebra(c: &ModuleCoalgebra<S>) -> Self {
        let module = RightModule::new(c.dim(), c.bialgebra().clone(), c.action().clone())
            .expect("module coalgebra action");
        Self::new(module, c.clone(), c.coalgebra().delta().clone()).expect("C is a Hopf module")
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn module(&self) -> &RightModule<S> {
        &self.module
    }

    pub fn over(&self) -> &ModuleCoalgebra<S> {
        &self.over
    }

    pub fn coaction(&self) -> &LinearMap<S> {
        &self.coaction
    }

    pub fn comodule(&self) -> Comodule<S> {
        Comodule {
            dim: self.dim(),
            coalgebra: self.over.coalgebra().clone(),
            coaction: self.coaction.clone(),
        }
    }

    pub fn is_hopf_submodule(&self, w: &Subspace<S>) -> bool {
        self.module.is_submodule(w) && self.comodule().is_subcomodule(w)
    }

    /// The Hopf submodule generated by `v`.
    pub fn generated(&self, v: &Subspace<S>) -> Subspace<S> {
        let mut w = v.clone();
        loop {
            let next = self
                .module
                .span_times_b(&self.comodule().generated(&w).sum(&w).expect("same ambient"));
            if next == w {
                return w;
            }
            w = next;
        }
    }

    pub fn restrict(&self, w: &Subspace<S>) -> Result<Self> {
        if !self.is_hopf_submodule(w) {
            return Err(Error::NotAHopfSubmodule);
        }
        let module = self.module.restrict(w)?;
        let co = self.comodule().restrict(w)?;
        Self::new(module, self.over.clone(), co.coaction)
    }

    pub fn quotient(&self, w: &Subspace<S>) -> Result<(Self, Quotient<S>)> {
        if !self.is_hopf_submodule(w) {
            return Err(Error::NotAHopfSubmodule);
        }
        let (module, q) = self.module.quotient(w)?;
        let pi = q.projection();
        let id = LinearMap::identity(self.over.dim());
        let d = q.dim();
        let coaction = LinearMap::from_columns(d, d * self.over.dim(), |j| {
            apply_tensor(&pi, &id, &self.coaction.apply(&q.lift(&unit_vector(d, j))))
        });
        Ok((Self::new(module, self.over.clone(), coaction)?, q))
    }
}

/// `f` commutes with the actions and the coactions.
pub fn is_morphism<S: Scalar>(f: &LinearMap<S>, m: &HopfModule<S>, n: &HopfModule<S>) -> bool {
    if f.domain_dim() != m.dim() || f.codomain_dim() != n.dim() || m.over != n.over {
        return false;
    }
    let k = m.module.bialgebra().dim();
    let idc = LinearMap::identity(m.over.dim());
    (0..m.dim()).all(|i| {
        let e = unit_vector(m.dim(), i);
        let fe = f.apply(&e);
        (0..k).all(|j| {
            let b = unit_vector(k, j);
            f.apply(&m.module.act(&e, &b)) == n.module.act(&fe, &b)
        }) && n.coaction.apply(&fe) == apply_tensor(f, &idc, &m.coaction.apply(&e))
    })
}

/// `𝒢(M) = M ⊗ B` with `(m⊗b)·h = m⊗bh` and `ρ(m⊗b) = Σ m₀⊗b₁ ⊗ m₁b₂`,
/// together with the action map `μ: 𝒢(M) -> M`.
pub fn free_hopf_module<S: Scalar>(m: &HopfModule<S>) -> Result<(HopfModule<S>, LinearMap<S>)> {
    let b = m.module.bialgebra();
    let (d, k, n) = (m.dim(), b.dim(), m.over.dim());
    let g = d * k;
    let action = LinearMap::from_columns(g * k, g, |idx| {
        let (mb, h) = (idx / k, idx % k);
        let (mi, bi) = (mb / k, mb % k);
        kron_vec(
            &unit_vector(d, mi),
            &b.multiply(&unit_vector(k, bi), &unit_vector(k, h)),
        )
    });
    let module = RightModule::new(g, b.clone(), action)?;
    let coaction = LinearMap::from_columns(g, g * n, |idx| {
        let (mi, bi) = (idx / k, idx % k);
        let mut out = vec![S::zero(); g * n];
        let rho = m.coaction.image_of_basis(mi);
        let db = b.coalgebra().delta().image_of_basis(bi);
        for (ri, x) in support(&rho) {
            let (m0, m1) = (ri / n, ri % n);
            for (di, y) in support(&db) {
                let (b1, b2) = (di / k, di % k);
                let c = m.over.act(&unit_vector(n, m1), &unit_vector(k, b2));
                let xy = x.clone() * y.clone();
                for (ci, z) in support(&c) {
                    out[(m0 * k + b1) * n + ci].add_mul(&xy, z);
                }
            }
        }
        out
    });
    let free = HopfModule::new(module, m.over.clone(), coaction)?;
    let mu = LinearMap::from_columns(g, d, |idx| {
        m.module
            .act(&unit_vector(d, idx / k), &unit_vector(k, idx % k))
    });
    if !is_morphism(&mu, &free, m) {
        return Err(Error::Internal(
            "action map is not a Hopf module morphism".into(),
        ));
    }
    Ok((free, mu))
}

/// `M̄ = M / MB⁺` as a comodule over `C̄`, with both projections.
#[derive(Clone, Debug)]
pub struct Overline<S> {
    pub comodule: Comodule<S>,
    pub quotient: Quotient<S>,
    pub eta_m: LinearMap<S>,
    pub eta_c: LinearMap<S>,
}

pub fn overline_module<S: Scalar>(m: &HopfModule<S>) -> Result<Overline<S>> {
    let (cbar, eta_c) = overline_coalgebra(&m.over)?;
    let mbplus = m.module.times_b_plus(&Subspace::full(m.dim()));
    let q = Quotient::new(mbplus);
    let eta_m = q.projection();
    let d = q.dim();
    let rho = LinearMap::from_columns(d, d * cbar.dim(), |j| {
        apply_tensor(
            &eta_m,
            &eta_c,
            &m.coaction.apply(&q.lift(&unit_vector(d, j))),
        )
    });
    let comodule = Comodule::new(d, cbar, rho)?;
    Ok(Overline {
        comodule,
        quotient: q,
        eta_m,
        eta_c,
    })
}

/// The induced map `M̄ -> N̄` of a morphism `f: M -> N`.
pub fn overline_morphism<S: Scalar>(
    f: &LinearMap<S>,
    m: &Overline<S>,
    n: &Overline<S>,
) -> LinearMap<S> {
    let d = m.quotient.dim();
    LinearMap::from_columns(d, n.quotient.dim(), |j| {
        n.eta_m
            .apply(&f.apply(&m.quotient.lift(&unit_vector(d, j))))
    })
}

/// `N □_{C̄} C` as a Hopf module, with its carrier inside `N ⊗ C`.
pub fn cotensor<S: Scalar>(
    n: &Comodule<S>,
    c: &ModuleCoalgebra<S>,
) -> Result<(HopfModule<S>, Subspace<S>)> {
    let (cbar, eta_c) = overline_coalgebra(c)?;
    if n.coalgebra != cbar {
        return Err(Error::MismatchedCoalgebra);
    }
    let (nd, cd, qd) = (n.dim, c.dim(), cbar.dim());
    let idc = LinearMap::identity(cd);
    let idn = LinearMap::identity(nd);
    let left: Vec<Vec<S>> = (0..cd)
        .map(|j| apply_tensor(&eta_c, &idc, &c.coalgebra().delta().image_of_basis(j)))
        .collect();
    let defect = LinearMap::from_columns(nd * cd, nd * qd * cd, |idx| {
        let (a, j) = (idx / cd, idx % cd);
        let mut v = kron_vec(&n.coaction.image_of_basis(a), &unit_vector(cd, j));
        for (x, y) in v.iter_mut().zip(kron_vec(&unit_vector(nd, a), &left[j])) {
            *x -= y;
        }
        v
    });
    let carrier = defect.kernel();
    let k = c.bialgebra().dim();
    let ambient_action = LinearMap::from_columns(nd * cd * k, nd * cd, |idx| {
        let (nc, h) = (idx / k, idx % k);
        let (a, j) = (nc / cd, nc % cd);
        kron_vec(
            &unit_vector(nd, a),
            &c.act(&unit_vector(cd, j), &unit_vector(k, h)),
        )
    });
    let ambient_coaction = idn.tensor(c.coalgebra().delta());
    let ambient = HopfModule {
        module: RightModule {
            dim: nd * cd,
            bialgebra: c.bialgebra().clone(),
            action: ambient_action,
        },
        over: c.clone(),
        coaction: ambient_coaction,
    };
    let h = ambient.restrict(&carrier)?;
    Ok((h, carrier))
}

/// `Ξ_M: M -> M̄ □_{C̄} C`, `m ↦ Σ m̄₀ ⊗ m₁`, in the cotensor's coordinates.
#[derive(Clone, Debug)]
pub struct UnitXi<S> {
    pub map: LinearMap<S>,
    pub target: HopfModule<S>,
    pub carrier: Subspace<S>,
    pub overline: Overline<S>,
    pub is_iso: bool,
}

pub fn unit_xi<S: Scalar>(m: &HopfModule<S>) -> Result<UnitXi<S>> {
    let ov = overline_module(m)?;
    let (target, carrier) = cotensor(&ov.comodule, &m.over)?;
    let idc = LinearMap::identity(m.over.dim());
    let mut cols = Vec::with_capacity(m.dim());
    for i in 0..m.dim() {
        let v = apply_tensor(&ov.eta_m, &idc, &m.coaction.image_of_basis(i));
        cols.push(
            carrier
                .coordinates(&v)
                .ok_or(Error::Internal("Ξ leaves the cotensor product".into()))?,
        );
    }
    let map = LinearMap::from_columns(m.dim(), carrier.dim(), |i| cols[i].clone());
    if !is_morphism(&map, m, &target) {
        return Err(Error::Internal("Ξ is not a Hopf module morphism".into()));
    }
    let is_iso = map.is_bijective();
    Ok(UnitXi {
        map,
        target,
        carrier,
        overline: ov,
        is_iso,
    })
}

/// `Θ_N: (N □_{C̄} C)‾ -> N`, `Σ nᵢ ⊗ cᵢ ↦ Σ nᵢ ε(cᵢ)`.
#[derive(Clone, Debug)]
pub struct CounitTheta<S> {
    pub map: LinearMap<S>,
    pub cotensor: HopfModule<S>,
    pub carrier: Subspace<S>,
    pub overline: Overline<S>,
    pub is_iso: bool,
}

pub fn counit_theta<S: Scalar>(n: &Comodule<S>, c: &ModuleCoalgebra<S>) -> Result<CounitTheta<S>> {
    let (h, carrier) = cotensor(n, c)?;
    let ov = overline_module(&h)?;
    let eps = LinearMap::identity(n.dim).tensor(&c.coalgebra().counit_map());
    let d = ov.quotient.dim();
    let map = LinearMap::from_columns(d, n.dim, |j| {
        eps.apply(&carrier.from_coordinates(&ov.quotient.lift(&unit_vector(d, j))))
    });
    // well defined: Θ kills the image of KB⁺
    let kill = eps.compose(&LinearMap::from_columns(
        ov.quotient.kernel().dim(),
        carrier.ambient_dim(),
        |r| carrier.from_coordinates(ov.quotient.kernel().basis().row(r)),
    ))?;
    if !kill.is_zero() {
        return Err(Error::Internal(
            "Θ does not factor through the overline".into(),
        ));
    }
    let is_iso = map.is_bijective();
    Ok(CounitTheta {
        map,
        cotensor: h,
        carrier,
        overline: ov,
        is_iso,
    })
}

/// `Θ_{M̄} ∘ Ξ̄_M = id_{M̄}`
pub fn triangle_identity<S: Scalar>(m: &HopfModule<S>) -> Result<bool> {
    let xi = unit_xi(m)?;
    let theta = counit_theta(&xi.overline.comodule, &m.over)?;
    let xibar = overline_morphism(&xi.map, &xi.overline, &theta.overline);
    Ok(theta.map.compose(&xibar)? == LinearMap::identity(xi.overline.quotient.dim()))
}

/// Whether `id_V ⊗ ε ⊗ id_C` maps `ℱ(V) □_{C̄} C` isomorphically onto `V ⊗ C`.
pub fn cofree_cotensor_iso<S: Scalar>(v_dim: usize, c: &ModuleCoalgebra<S>) -> Result<bool> {
    let (cbar, _) = overline_coalgebra(c)?;
    let f = cofree_comodule(v_dim, &cbar);
    let (h, carrier) = cotensor(&f, c)?;
    let cd = c.dim();
    let collapse = LinearMap::identity(v_dim)
        .tensor(&cbar.counit_map())
        .tensor(&LinearMap::identity(cd));
    let iso = LinearMap::from_columns(carrier.dim(), v_dim * cd, |j| {
        collapse.apply(&carrier.from_coordinates(&unit_vector(carrier.dim(), j)))
    });
    Ok(iso.is_bijective() && h.dim() == v_dim * cd)
}

/// `N ∧ X = ker(M -> M ⊗ C -> M/N ⊗ C/X)`.
pub fn wedge_in_module<S: Scalar>(
    m: &HopfModule<S>,
    n: &Subspace<S>,
    x: &Subspace<S>,
) -> Result<Subspace<S>> {
    if !m.module.is_submodule(n) {
        return Err(Error::NotASubmodule);
    }
    let c = HopfModule::from_coalgebra(&m.over);
    if !c.is_hopf_submodule(x) {
        return Err(Error::NotAHopfSubmodule);
    }
    let pn = Quotient::new(n.clone()).projection();
    let px = Quotient::new(x.clone()).projection();
    let f = LinearMap::from_columns(m.dim(), pn.codomain_dim() * px.codomain_dim(), |i| {
        apply_tensor(&pn, &px, &m.coaction.image_of_basis(i))
    });
    let w = f.kernel();
    if !m.is_hopf_submodule(&w) {
        return Err(Error::Internal("wedge is not a Hopf submodule".into()));
    }
    Ok(w)
}

/// `Tor₁ᴮ(M, k)` from `0 -> K -> M ⊗ B -> M -> 0`: the kernel of
/// `K/KB⁺ -> (M ⊗ B)/(M ⊗ B)B⁺`, as a subspace of `K/KB⁺`.
pub fn tor1<S: Scalar>(m: &RightModule<S>) -> Result<Subspace<S>> {
    let b = m.bialgebra();
    let (d, k) = (m.dim(), b.dim());
    let g = d * k;
    let action = LinearMap::from_columns(g * k, g, |idx| {
        let (mb, h) = (idx / k, idx % k);
        kron_vec(
            &unit_vector(d, mb / k),
            &b.multiply(&unit_vector(k, mb % k), &unit_vector(k, h)),
        )
    });
    let free = RightModule::new(g, b.clone(), action)?;
    let mu = LinearMap::from_columns(g, d, |idx| {
        m.act(&unit_vector(d, idx / k), &unit_vector(k, idx % k))
    });
    let kk = mu.kernel();
    let kbplus = free.times_b_plus(&kk);
    let fbplus = free.times_b_plus(&Subspace::full(g));
    let kb_coords = Subspace::span(
        kk.dim(),
        kbplus
            .basis_vectors()
            .iter()
            .map(|v| kk.coordinates(v).expect("KB⁺ ⊆ K")),
    );
    let kbar = Quotient::new(kb_coords);
    let target = Quotient::new(fbplus).projection();
    let map = LinearMap::from_columns(kbar.dim(), target.codomain_dim(), |j| {
        target.apply(&kk.from_coordinates(&kbar.lift(&unit_vector(kbar.dim(), j))))
    });
    Ok(map.kernel())
}
