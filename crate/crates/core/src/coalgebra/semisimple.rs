use crate::coalgebra::{
    dual_algebra, generated_subcoalgebra, is_subcoalgebra, radical_of_algebra, Algebra, Coalgebra,
};
use crate::error::{Error, Result};
use crate::linalg::{axpy, solve_system, support, unit_vector, LinearMap, Matrix, Subspace};
use crate::scalar::Scalar;

/// The center, in the algebra's basis coordinates.
pub fn center<S: Scalar>(a: &Algebra<S>) -> Subspace<S> {
    let n = a.dim();
    let commutators = LinearMap::from_columns(n, n * n, |i| {
        let ei = unit_vector(n, i);
        let mut out = Vec::with_capacity(n * n);
        for j in 0..n {
            let ej = unit_vector(n, j);
            let l = a.multiply(&ei, &ej);
            let r = a.multiply(&ej, &ei);
            out.extend(l.into_iter().zip(r).map(|(x, y)| x - y));
        }
        out
    });
    commutators.kernel()
}

/// `C₀ = J(C*)^⊥`.
pub fn coradical<S: Scalar>(c: &Coalgebra<S>) -> Result<Subspace<S>> {
    let j = radical_of_algebra(&dual_algebra(c))?;
    let c0 = j.annihilator();
    if !is_subcoalgebra(c, &c0) || (c.dim() > 0 && c0.is_zero()) {
        return Err(Error::Internal(
            "coradical is not a nonzero subcoalgebra".into(),
        ));
    }
    Ok(c0)
}

/// Minimal polynomial of `w` inside the unital algebra `eAe` with unit `e`,
/// as coefficients `[c_0, .., c_d]` with `c_d = 1`.
fn minimal_polynomial<S: Scalar>(a: &Algebra<S>, e: &[S], w: &[S]) -> Vec<S> {
    let n = a.dim();
    let mut powers = vec![e.to_vec()];
    loop {
        let next = a.multiply(powers.last().expect("nonempty"), w);
        let m = Matrix::from_columns(n, &powers);
        if let Some(c) = solve_system(&m, &next) {
            let mut poly: Vec<S> = c.into_iter().map(|x| -x).collect();
            poly.push(S::one());
            return poly;
        }
        powers.push(next);
    }
}

/// Central primitive idempotents of a split semisimple algebra.
fn central_idempotents<S: Scalar>(a: &Algebra<S>) -> Result<Vec<Vec<S>>> {
    let z = center(a);
    let mut ids = vec![a.unit().to_vec()];
    for zb in z.basis_vectors() {
        let mut refined = Vec::new();
        for e in ids {
            let w = a.multiply(&zb, &e);
            let poly = minimal_polynomial(a, &e, &w);
            let degree = poly.len() - 1;
            let roots = S::roots(&poly);
            if roots.len() < degree {
                return Err(Error::NonSplitCoradical {
                    degree,
                    roots: roots.len(),
                });
            }
            if degree == 1 {
                refined.push(e);
                continue;
            }
            for (j, lj) in roots.iter().enumerate() {
                let mut acc = e.clone();
                for (k, lk) in roots.iter().enumerate() {
                    if k == j {
                        continue;
                    }
                    let mut factor = w.clone();
                    axpy(&mut factor, &-lk.clone(), &e);
                    let inv = (lj.clone() - lk.clone()).inv().expect("distinct roots");
                    acc = a
                        .multiply(&acc, &factor)
                        .into_iter()
                        .map(|x| x * inv.clone())
                        .collect();
                }
                refined.push(acc);
            }
        }
        ids = refined;
    }
    if ids.len() != z.dim() {
        return Err(Error::NonSplitCoradical {
            degree: z.dim(),
            roots: ids.len(),
        });
    }
    Ok(ids)
}

/// The simple subcoalgebras of `C`, ordered by their first pivot column.
pub fn simple_components<S: Scalar>(c: &Coalgebra<S>) -> Result<Vec<Subspace<S>>> {
    if c.dim() == 0 {
        return Ok(Vec::new());
    }
    let c0 = coradical(c)?;
    let d0 = c.restrict(&c0)?;
    let a0 = dual_algebra(&d0);
    let m = d0.dim();
    let mut comps = Vec::new();
    for e in central_idempotents(&a0)? {
        // image of d ↦ Σ d₁ e(d₂)
        let images = (0..m).map(|k| {
            let mut v = vec![S::zero(); m];
            for (idx, x) in support(&d0.delta().image_of_basis(k)) {
                v[idx / m].add_mul(x, &e[idx % m]);
            }
            c0.from_coordinates(&v)
        });
        comps.push(Subspace::span(c.dim(), images));
    }
    comps.sort_by_key(|s| s.pivots().first().copied());

    let total: usize = comps.iter().map(|s| s.dim()).sum();
    let mut sum = Subspace::zero(c.dim());
    for s in &comps {
        sum = sum.sum(s)?;
    }
    if total != c0.dim() || sum != c0 || !comps.iter().all(|s| is_subcoalgebra(c, s)) {
        return Err(Error::Internal(
            "simple components do not decompose the coradical".into(),
        ));
    }
    if c.dim() <= 16 {
        for s in &comps {
            for b in s.basis_vectors() {
                if generated_subcoalgebra(c, &Subspace::span(c.dim(), [b]))? != *s {
                    return Err(Error::Internal("component is not simple".into()));
                }
            }
        }
    }
    Ok(comps)
}

/// Group-like elements, one per one-dimensional simple component.
pub fn grouplikes<S: Scalar>(c: &Coalgebra<S>) -> Result<Vec<Vec<S>>> {
    let mut out = Vec::new();
    for s in simple_components(c)? {
        if s.dim() != 1 {
            continue;
        }
        let d = s.basis().row(0).to_vec();
        let inv = c
            .epsilon(&d)
            .inv()
            .ok_or_else(|| Error::Internal("grouplike with zero counit".into()))?;
        let g: Vec<S> = d.into_iter().map(|x| x * inv.clone()).collect();
        if c.comultiply(&g) != crate::linalg::kron_vec(&g, &g) || !c.epsilon(&g).is_one() {
            return Err(Error::Internal(
                "normalized component is not group-like".into(),
            ));
        }
        out.push(g);
    }
    Ok(out)
}
