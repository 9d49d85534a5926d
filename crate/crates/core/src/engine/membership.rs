use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bialgebra::{
    antipode, convolution, convolution_inverse, convolution_operator, convolution_unit, flatten,
    unflatten,
};
use crate::coalgebra::coradical;
use crate::error::{Error, Result};
use crate::linalg::{solve_affine, unit_vector, LinearMap, Matrix, Subspace};
use crate::module_coalgebra::ModuleCoalgebra;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RadicalClass {
    Projective,
    Cocleft,
    Semisimple,
}

impl RadicalClass {
    pub fn name(self) -> &'static str {
        match self {
            RadicalClass::Projective => "projective",
            RadicalClass::Cocleft => "cocleft",
            RadicalClass::Semisimple => "semisimple",
        }
    }

    /// Closed under wedges.
    pub fn is_idempotent(self) -> bool {
        !matches!(self, RadicalClass::Semisimple)
    }
}

impl std::str::FromStr for RadicalClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "projective" => Ok(RadicalClass::Projective),
            "cocleft" => Ok(RadicalClass::Cocleft),
            "semisimple" => Ok(RadicalClass::Semisimple),
            other => Err(format!("unknown class `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate<S> {
    /// A right module map `ψ: C -> H` with `ε ∘ ψ = ε`.
    Doi { psi: LinearMap<S> },
    /// A cointegral `γ` and its convolution inverse.
    Cointegral {
        gamma: LinearMap<S>,
        gamma_inv: LinearMap<S>,
    },
    /// `C₀ = C`.
    Coradical { coradical: Subspace<S> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict<S> {
    pub verdict: Verdict,
    pub certificate: Option<Certificate<S>>,
    pub witness: Option<String>,
    pub trials: usize,
    pub seed: u64,
    pub stream: u64,
}

impl<S> MembershipVerdict<S> {
    fn decided(
        verdict: Verdict,
        certificate: Option<Certificate<S>>,
        witness: Option<String>,
    ) -> Self {
        MembershipVerdict {
            verdict,
            certificate,
            witness,
            trials: 0,
            seed: 0,
            stream: 0,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }
}

/// Knobs for the cointegral search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub seed: u64,
    pub trials: usize,
    /// Largest `dim Hom_B(C, B)` decided by exhaustive evaluation.
    pub v_max: usize,
    /// Largest number of evaluation points.
    pub grid_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            seed: 0,
            trials: 64,
            v_max: 4,
            grid_cap: 20_000,
        }
    }
}

/// Rows expressing `ψ(e_i · b_j) = ψ(e_i) b_j` for `ψ: C -> B` flattened as
/// in [`flatten`].
fn module_map_equations<S: Scalar>(m: &ModuleCoalgebra<S>) -> Matrix<S> {
    let (n, k) = (m.dim(), m.bialgebra().dim());
    let b = m.bialgebra();
    let mut rows = Vec::new();
    // products[kk][j] = b_kk b_j
    let products: Vec<Vec<Vec<S>>> = (0..k)
        .map(|kk| {
            (0..k)
                .map(|j| b.multiply(&unit_vector(k, kk), &unit_vector(k, j)))
                .collect()
        })
        .collect();
    for i in 0..n {
        for j in 0..k {
            let image = m.action().image_of_basis(i * k + j);
            for r in 0..k {
                let mut row = vec![S::zero(); k * n];
                for (l, x) in image.iter().enumerate() {
                    if !x.is_zero() {
                        row[r * n + l] += x.clone();
                    }
                }
                for (kk, prod) in products.iter().enumerate() {
                    let y = &prod[j][r];
                    if !y.is_zero() {
                        row[kk * n + i] -= y.clone();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(k * n, rows)
}

/// A basis of `Hom_B(C, B)`.
pub fn module_maps_to_b<S: Scalar>(m: &ModuleCoalgebra<S>) -> Vec<LinearMap<S>> {
    let (n, k) = (m.dim(), m.bialgebra().dim());
    let eqs = module_map_equations(m);
    let eqs = if eqs.rows() == 0 {
        Matrix::zeros(1, k * n)
    } else {
        eqs
    };
    eqs.nullspace().iter().map(|v| unflatten(v, n, k)).collect()
}

fn is_module_map<S: Scalar>(m: &ModuleCoalgebra<S>, f: &LinearMap<S>) -> bool {
    module_map_equations(m)
        .mul_vec(&flatten(f))
        .iter()
        .all(|x| x.is_zero())
}

/// Doi's criterion: a right `H`-module map `ψ: C -> H` with `ε ∘ ψ = ε`.
pub fn membership_projective<S: Scalar>(m: &ModuleCoalgebra<S>) -> Result<MembershipVerdict<S>> {
    if antipode(m.bialgebra()).is_none() {
        return Err(Error::NotHopf);
    }
    let (n, k) = (m.dim(), m.bialgebra().dim());
    if n == 0 {
        return Ok(MembershipVerdict::decided(
            Verdict::Yes,
            Some(Certificate::Doi {
                psi: LinearMap::zero(0, k),
            }),
            None,
        ));
    }
    let eqs = module_map_equations(m);
    let eps_b = m.bialgebra().coalgebra().counit();
    let mut rows = eqs.row_vecs();
    let mut rhs = vec![S::zero(); rows.len()];
    for i in 0..n {
        let mut row = vec![S::zero(); k * n];
        for (kk, e) in eps_b.iter().enumerate() {
            row[kk * n + i] = e.clone();
        }
        rows.push(row);
        rhs.push(m.coalgebra().counit()[i].clone());
    }
    let system = LinearMap::from_matrix(Matrix::from_rows(k * n, rows));
    match solve_affine(&system, &rhs) {
        Some(sol) => {
            let psi = unflatten(&sol, n, k);
            verify_doi(m, &psi)?;
            Ok(MembershipVerdict::decided(
                Verdict::Yes,
                Some(Certificate::Doi { psi }),
                None,
            ))
        }
        None => Ok(MembershipVerdict::decided(
            Verdict::No,
            None,
            Some("no right module map ψ: C -> H with ε∘ψ = ε (linear system inconsistent)".into()),
        )),
    }
}

/// Re-check a Doi certificate exactly.
pub fn verify_doi<S: Scalar>(m: &ModuleCoalgebra<S>, psi: &LinearMap<S>) -> Result<()> {
    let eps = m.bialgebra().coalgebra().counit_map().compose(psi)?;
    if !is_module_map(m, psi) || eps != m.coalgebra().counit_map() {
        return Err(Error::Internal("Doi certificate does not verify".into()));
    }
    Ok(())
}

/// Re-check a cointegral certificate exactly.
pub fn verify_cointegral<S: Scalar>(
    m: &ModuleCoalgebra<S>,
    gamma: &LinearMap<S>,
    gamma_inv: &LinearMap<S>,
) -> Result<()> {
    let (c, a) = (m.coalgebra(), m.bialgebra().algebra());
    let unit = convolution_unit(c, a);
    if !is_module_map(m, gamma)
        || convolution(gamma, gamma_inv, c, a)? != unit
        || convolution(gamma_inv, gamma, c, a)? != unit
    {
        return Err(Error::Internal(
            "cointegral certificate does not verify".into(),
        ));
    }
    Ok(())
}

fn combine<S: Scalar>(ops: &[Matrix<S>], t: &[S]) -> Matrix<S> {
    let mut acc = Matrix::zeros(ops[0].rows(), ops[0].cols());
    for (op, x) in ops.iter().zip(t) {
        if !x.is_zero() {
            acc = acc.add(&op.scale(x));
        }
    }
    acc
}

fn combine_maps<S: Scalar>(maps: &[LinearMap<S>], t: &[S]) -> LinearMap<S> {
    let mut acc = LinearMap::zero(maps[0].domain_dim(), maps[0].codomain_dim());
    for (f, x) in maps.iter().zip(t) {
        if !x.is_zero() {
            acc = acc.add(&f.scale(x)).expect("same shape");
        }
    }
    acc
}

/// Search `Hom_B(C, B)` for a convolution-invertible element.
pub fn membership_cocleft<S: Scalar>(
    m: &ModuleCoalgebra<S>,
    opts: &SearchOptions,
    stream: u64,
) -> Result<MembershipVerdict<S>> {
    let (n, k) = (m.dim(), m.bialgebra().dim());
    let (c, a) = (m.coalgebra(), m.bialgebra().algebra());
    let mut out = MembershipVerdict {
        verdict: Verdict::Unknown,
        certificate: None,
        witness: None,
        trials: 0,
        seed: opts.seed,
        stream,
    };
    if n == 0 {
        out.verdict = Verdict::Yes;
        out.certificate = Some(Certificate::Cointegral {
            gamma: LinearMap::zero(0, k),
            gamma_inv: LinearMap::zero(0, k),
        });
        return Ok(out);
    }
    let basis = module_maps_to_b(m);
    let v = basis.len();
    if v == 0 {
        out.verdict = Verdict::No;
        out.witness = Some("Hom_B(C, B) = 0".into());
        return Ok(out);
    }
    let ops: Vec<Matrix<S>> = basis
        .iter()
        .map(|g| convolution_operator(g, c, a, false))
        .collect();
    let size = n * k;
    let try_point = |t: &[S]| -> Option<Certificate<S>> {
        if combine(&ops, t).rank() < size {
            return None;
        }
        let gamma = combine_maps(&basis, t);
        let gamma_inv = convolution_inverse(&gamma, c, a)?;
        Some(Certificate::Cointegral { gamma, gamma_inv })
    };
    let mut candidates: Vec<Vec<S>> = (0..v).map(|i| unit_vector(v, i)).collect();
    candidates.push(vec![S::one(); v]);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(stream);
    let spread = size.max(1) as u32;
    for _ in 0..opts.trials {
        candidates.push((0..v).map(|_| S::sample(&mut rng, spread)).collect());
    }
    for t in &candidates {
        out.trials += 1;
        if let Some(cert) = try_point(t) {
            if let Certificate::Cointegral { gamma, gamma_inv } = &cert {
                verify_cointegral(m, gamma, gamma_inv)?;
            }
            out.verdict = Verdict::Yes;
            out.certificate = Some(cert);
            return Ok(out);
        }
    }
    // exhaustive evaluation: all of F_p^v when p ≤ deg, otherwise a grid of
    // deg + 1 points per variable
    let values: Vec<S> = match S::elements() {
        Some(all) if all.len() <= size => all,
        _ => (0..=size as i64).map(S::from_i64).collect(),
    };
    let points = (values.len() as u128)
        .checked_pow(v as u32)
        .unwrap_or(u128::MAX);
    if v > opts.v_max || points > opts.grid_cap as u128 {
        out.witness = Some(format!(
            "no invertible element among {} samples; exhaustive check skipped (dim Hom_B(C,B) = {v}, {points} points)",
            out.trials
        ));
        return Ok(out);
    }
    let mut idx = vec![0usize; v];
    loop {
        let t: Vec<S> = idx.iter().map(|&i| values[i].clone()).collect();
        out.trials += 1;
        if let Some(cert) = try_point(&t) {
            if let Certificate::Cointegral { gamma, gamma_inv } = &cert {
                verify_cointegral(m, gamma, gamma_inv)?;
            }
            out.verdict = Verdict::Yes;
            out.certificate = Some(cert);
            return Ok(out);
        }
        let mut pos = 0;
        loop {
            if pos == v {
                out.verdict = Verdict::No;
                out.witness = Some(format!(
                    "det L_γ vanishes on all {points} evaluation points of Hom_B(C,B) (dim {v})"
                ));
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// `C` is semisimple, i.e. equal to its coradical.
pub fn membership_semisimple<S: Scalar>(m: &ModuleCoalgebra<S>) -> Result<MembershipVerdict<S>> {
    if !m.bialgebra().is_trivial() {
        return Err(Error::ClassRequiresTrivialBialgebra);
    }
    if m.dim() == 0 {
        return Ok(MembershipVerdict::decided(
            Verdict::Yes,
            Some(Certificate::Coradical {
                coradical: Subspace::zero(0),
            }),
            None,
        ));
    }
    let c0 = coradical(m.coalgebra())?;
    if c0.is_full() {
        Ok(MembershipVerdict::decided(
            Verdict::Yes,
            Some(Certificate::Coradical { coradical: c0 }),
            None,
        ))
    } else {
        let witness = format!("coradical has dimension {} < {}", c0.dim(), m.dim());
        Ok(MembershipVerdict::decided(
            Verdict::No,
            Some(Certificate::Coradical { coradical: c0 }),
            Some(witness),
        ))
    }
}

pub fn membership<S: Scalar>(
    m: &ModuleCoalgebra<S>,
    class: RadicalClass,
    opts: &SearchOptions,
    stream: u64,
) -> Result<MembershipVerdict<S>> {
    match class {
        RadicalClass::Projective => membership_projective(m),
        RadicalClass::Cocleft => membership_cocleft(m, opts, stream),
        RadicalClass::Semisimple => membership_semisimple(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::Bialgebra;
    use crate::{zoo, F3, Q};

    fn h4() -> Bialgebra<Q> {
        zoo::sweedler_h4::<Q>().unwrap().into_bialgebra()
    }

    #[test]
    fn projective_regular_and_trivial() {
        let b = h4();
        let v = membership_projective(&ModuleCoalgebra::regular(&b)).unwrap();
        assert!(v.is_yes());
        let v = membership_projective(&ModuleCoalgebra::k_triv(&b)).unwrap();
        assert_eq!(v.verdict, Verdict::No);
        assert_eq!(
            v,
            membership_projective(&ModuleCoalgebra::k_triv(&b)).unwrap()
        );
    }

    #[test]
    fn cocleft_regular_and_trivial() {
        let b = h4();
        let opts = SearchOptions::default();
        let v = membership_cocleft(&ModuleCoalgebra::regular(&b), &opts, 0).unwrap();
        assert!(v.is_yes());
        let v = membership_cocleft(&ModuleCoalgebra::k_triv(&b), &opts, 0).unwrap();
        assert_eq!(v.verdict, Verdict::No);
        let k = Bialgebra::<Q>::trivial();
        let c = ModuleCoalgebra::trivial(b.coalgebra(), &k);
        assert!(membership_cocleft(&c, &opts, 0).unwrap().is_yes());
    }

    #[test]
    fn cocleft_over_small_field_enumerates() {
        let b = zoo::sweedler_h4::<F3>().unwrap().into_bialgebra();
        let opts = SearchOptions {
            trials: 0,
            ..SearchOptions::default()
        };
        let v = membership_cocleft(&ModuleCoalgebra::k_triv(&b), &opts, 3).unwrap();
        assert_eq!(v.verdict, Verdict::No);
        assert!(membership_cocleft(&ModuleCoalgebra::regular(&b), &opts, 3)
            .unwrap()
            .is_yes());
    }

    #[test]
    fn semisimple_membership() {
        let k = Bialgebra::<Q>::trivial();
        let h = zoo::sweedler_h4::<Q>().unwrap();
        let v = membership_semisimple(&ModuleCoalgebra::trivial(h.coalgebra(), &k)).unwrap();
        assert_eq!(v.verdict, Verdict::No);
        let m2 = zoo::comatrix_coalgebra::<Q>(2);
        assert!(membership_semisimple(&ModuleCoalgebra::trivial(&m2, &k))
            .unwrap()
            .is_yes());
        assert!(membership_semisimple(&ModuleCoalgebra::trivial(
            &crate::coalgebra::Coalgebra::grouplike(3),
            &k
        ))
        .unwrap()
        .is_yes());
        assert_eq!(
            membership_semisimple(&ModuleCoalgebra::regular(&h4())).unwrap_err(),
            Error::ClassRequiresTrivialBialgebra
        );
    }
}
