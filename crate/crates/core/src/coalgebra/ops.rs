use crate::coalgebra::Coalgebra;
use crate::error::{Error, Result};
use crate::linalg::{apply_tensor, kernel, support, LinearMap, Quotient, Subspace};
use crate::scalar::Scalar;

fn check_ambient<S: Scalar>(c: &Coalgebra<S>, x: &Subspace<S>) -> Result<()> {
    if x.ambient_dim() != c.dim() {
        return Err(Error::DimensionMismatch {
            expected: c.dim(),
            got: x.ambient_dim(),
        });
    }
    Ok(())
}

/// View `w ∈ k^n ⊗ k^n` as an `n × n` array and return its columns (the
/// left tensor legs) and rows (the right legs).
fn legs<S: Scalar>(n: usize, w: &[S]) -> (Vec<Vec<S>>, Vec<Vec<S>>) {
    let mut left = vec![vec![S::zero(); n]; n];
    let mut right = vec![vec![S::zero(); n]; n];
    for (idx, c) in support(w) {
        let (a, b) = (idx / n, idx % n);
        left[b][a] = c.clone();
        right[a][b] = c.clone();
    }
    (left, right)
}

pub fn is_subcoalgebra<S: Scalar>(c: &Coalgebra<S>, d: &Subspace<S>) -> bool {
    if d.ambient_dim() != c.dim() {
        return false;
    }
    d.basis_vectors().iter().all(|v| {
        let (left, right) = legs(c.dim(), &c.comultiply(v));
        left.iter().chain(&right).all(|u| d.contains(u))
    })
}

/// `ε(I) = 0` and `Δ(I) ⊆ I ⊗ C + C ⊗ I`.
pub fn is_coideal<S: Scalar>(c: &Coalgebra<S>, i: &Subspace<S>) -> bool {
    coideal_witness(c, i).is_none()
}

fn coideal_witness<S: Scalar>(c: &Coalgebra<S>, i: &Subspace<S>) -> Option<Vec<S>> {
    let q = Quotient::new(i.clone());
    let pi = q.projection();
    i.basis_vectors().into_iter().find(|v| {
        !c.epsilon(v).is_zero()
            || apply_tensor(&pi, &pi, &c.comultiply(v))
                .iter()
                .any(|x| !x.is_zero())
    })
}

/// The smallest subcoalgebra containing `V`: the span of the middle legs of
/// `Δ²(v)` for `v ∈ V`.
pub fn generated_subcoalgebra<S: Scalar>(c: &Coalgebra<S>, v: &Subspace<S>) -> Result<Subspace<S>> {
    check_ambient(c, v)?;
    let n = c.dim();
    let mut vectors = Vec::new();
    for b in v.basis_vectors() {
        let w = c.comultiply_twice(&b);
        let mut slices = vec![vec![S::zero(); n]; n * n];
        for (idx, x) in support(&w) {
            let (a, mid, last) = (idx / (n * n), (idx / n) % n, idx % n);
            slices[a * n + last][mid] = x.clone();
        }
        vectors.extend(
            slices
                .into_iter()
                .filter(|s| s.iter().any(|x| !x.is_zero())),
        );
    }
    let d = Subspace::span(n, vectors);
    if !is_subcoalgebra(c, &d) {
        return Err(Error::Internal(
            "generated span is not a subcoalgebra".into(),
        ));
    }
    Ok(d)
}

/// `X ∧ Y = Δ⁻¹(X ⊗ C + C ⊗ Y)`, computed as the kernel of
/// `(π_X ⊗ π_Y) ∘ Δ`.
pub fn wedge<S: Scalar>(c: &Coalgebra<S>, x: &Subspace<S>, y: &Subspace<S>) -> Result<Subspace<S>> {
    check_ambient(c, x)?;
    check_ambient(c, y)?;
    let px = Quotient::new(x.clone()).projection();
    let py = Quotient::new(y.clone()).projection();
    let n = c.dim();
    let f = LinearMap::from_columns(n, px.codomain_dim() * py.codomain_dim(), |i| {
        apply_tensor(&px, &py, &c.delta().image_of_basis(i))
    });
    Ok(kernel(&f))
}

/// `X ⊆ X∧X ⊆ X∧(X∧X) ⊆ ...`, stopping at the first repeat. The last entry
/// is the stable value.
pub fn wedge_filtration<S: Scalar>(c: &Coalgebra<S>, x: &Subspace<S>) -> Result<Vec<Subspace<S>>> {
    check_ambient(c, x)?;
    let mut chain = vec![x.clone()];
    loop {
        let last = chain.last().expect("nonempty chain");
        let next = wedge(c, x, last)?;
        if next.dim() == last.dim() {
            return Ok(chain);
        }
        chain.push(next);
    }
}

/// The quotient coalgebra `C / I` together with the projection `C -> C / I`.
pub fn quotient_by_coideal<S: Scalar>(
    c: &Coalgebra<S>,
    i: &Subspace<S>,
) -> Result<(Coalgebra<S>, LinearMap<S>)> {
    check_ambient(c, i)?;
    if let Some(w) = coideal_witness(c, i) {
        return Err(Error::NotACoideal {
            witness: w.iter().map(|x| x.encode()).collect(),
        });
    }
    let q = Quotient::new(i.clone());
    let pi = q.projection();
    let m = q.dim();
    let delta = LinearMap::from_columns(m, m * m, |j| {
        apply_tensor(
            &pi,
            &pi,
            &c.comultiply(&q.lift(&crate::linalg::unit_vector(m, j))),
        )
    });
    let counit = q
        .complement()
        .iter()
        .map(|&k| c.counit()[k].clone())
        .collect();
    let labels = q
        .complement()
        .iter()
        .map(|&k| c.labels()[k].clone())
        .collect();
    let quotient = Coalgebra::new(delta, counit, labels)?;
    Ok((quotient, pi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;
    use crate::{Scalar, F3, Q};

    fn span_labels<S: Scalar>(c: &Coalgebra<S>, names: &[&str]) -> Subspace<S> {
        let idx = names
            .iter()
            .map(|n| c.labels().iter().position(|l| l == n).unwrap());
        Subspace::coordinate(c.dim(), idx)
    }

    #[test]
    fn sweedler_wedges() {
        let h = zoo::sweedler_h4::<Q>().unwrap();
        let c = h.coalgebra();
        let one = span_labels(c, &["1"]);
        let g = span_labels(c, &["g"]);
        let c0 = span_labels(c, &["1", "g"]);
        assert!(wedge(c, &c0, &c0).unwrap().is_full());
        assert_eq!(
            wedge(c, &one, &g).unwrap(),
            span_labels(c, &["1", "g", "gx"])
        );
        assert_eq!(
            wedge(c, &g, &one).unwrap(),
            span_labels(c, &["1", "g", "x"])
        );
        let chain = wedge_filtration(c, &c0).unwrap();
        assert_eq!(
            chain.iter().map(|s| s.dim()).collect::<Vec<_>>(),
            vec![2, 4]
        );
    }

    #[test]
    fn wedge_with_zero_on_grouplike_coalgebra() {
        let c = Coalgebra::<F3>::grouplike(3);
        let z = Subspace::zero(3);
        assert!(wedge(&c, &z, &z).unwrap().is_zero());
    }

    #[test]
    fn generated_subcoalgebra_of_skew_primitive() {
        let h = zoo::sweedler_h4::<Q>().unwrap();
        let c = h.coalgebra();
        let x = span_labels(c, &["x"]);
        assert_eq!(
            generated_subcoalgebra(c, &x).unwrap(),
            span_labels(c, &["1", "g", "x"])
        );
        let restricted = c.restrict(&span_labels(c, &["1", "g", "x"])).unwrap();
        assert_eq!(restricted.dim(), 3);
        assert!(c.restrict(&x).is_err());
    }

    #[test]
    fn quotient_by_coideal_of_skew_primitives() {
        let h = zoo::sweedler_h4::<Q>().unwrap();
        let c = h.coalgebra();
        let i = span_labels(c, &["x", "gx"]);
        let (q, pi) = quotient_by_coideal(c, &i).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(pi.codomain_dim(), 2);
        let bad = span_labels(c, &["g"]);
        assert!(matches!(
            quotient_by_coideal(c, &bad),
            Err(Error::NotACoideal { .. })
        ));
    }
}
