//! Bialgebras, Hopf algebras and the convolution algebra `Hom(C, A)`.

use crate::coalgebra::{Algebra, Coalgebra};
use crate::error::{Error, Result};
use crate::linalg::{
    apply_tensor, kron_vec, solve_affine, support, unit_vector, LinearMap, Matrix,
};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra<S> {
    coalgebra: Coalgebra<S>,
    algebra: Algebra<S>,
}

/// Product in `A ⊗ A`: `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
pub fn tensor_algebra_multiply<S: Scalar>(a: &Algebra<S>, u: &[S], v: &[S]) -> Vec<S> {
    let n = a.dim();
    let mut out = vec![S::zero(); n * n];
    for (i, x) in support(u) {
        let (ua, ub) = (i / n, i % n);
        for (j, y) in support(v) {
            let (va, vb) = (j / n, j % n);
            let left = a.multiply(&unit_vector(n, ua), &unit_vector(n, va));
            let right = a.multiply(&unit_vector(n, ub), &unit_vector(n, vb));
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

/// Validate that `Δ` and `ε` are algebra maps.
pub fn check_bialgebra<S: Scalar>(
    coalgebra: Coalgebra<S>,
    algebra: Algebra<S>,
) -> Result<Bialgebra<S>> {
    let n = coalgebra.dim();
    if algebra.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: algebra.dim(),
        });
    }
    let unit = algebra.unit().to_vec();
    if coalgebra.comultiply(&unit) != kron_vec(&unit, &unit) {
        return Err(Error::CompatibilityViolation {
            law: "Δ(1) = 1⊗1",
            i: 0,
            j: 0,
        });
    }
    if !coalgebra.epsilon(&unit).is_one() {
        return Err(Error::CompatibilityViolation {
            law: "ε(1) = 1",
            i: 0,
            j: 0,
        });
    }
    let deltas: Vec<Vec<S>> = (0..n)
        .map(|i| coalgebra.delta().image_of_basis(i))
        .collect();
    for i in 0..n {
        for j in 0..n {
            let ij = algebra.multiply(&unit_vector(n, i), &unit_vector(n, j));
            if coalgebra.comultiply(&ij)
                != tensor_algebra_multiply(&algebra, &deltas[i], &deltas[j])
            {
                return Err(Error::CompatibilityViolation {
                    law: "Δ(ab) = Δ(a)Δ(b)",
                    i,
                    j,
                });
            }
            if coalgebra.epsilon(&ij)
                != coalgebra.counit()[i].clone() * coalgebra.counit()[j].clone()
            {
                return Err(Error::CompatibilityViolation {
                    law: "ε(ab) = ε(a)ε(b)",
                    i,
                    j,
                });
            }
        }
    }
    Ok(Bialgebra { coalgebra, algebra })
}

impl<S: Scalar> Bialgebra<S> {
    pub fn new(coalgebra: Coalgebra<S>, algebra: Algebra<S>) -> Result<Self> {
        check_bialgebra(coalgebra, algebra)
    }

    /// The ground field as a one-dimensional bialgebra.
    pub fn trivial() -> Self {
        let c = Coalgebra::grouplike(1);
        let a = Algebra::from_fn(1, |_, _, _| S::one(), vec![S::one()]).expect("k is an algebra");
        check_bialgebra(c, a).expect("k is a bialgebra")
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn coalgebra(&self) -> &Coalgebra<S> {
        &self.coalgebra
    }

    pub fn algebra(&self) -> &Algebra<S> {
        &self.algebra
    }

    pub fn multiply(&self, a: &[S], b: &[S]) -> Vec<S> {
        self.algebra.multiply(a, b)
    }

    pub fn unit(&self) -> &[S] {
        self.algebra.unit()
    }

    pub fn labels(&self) -> &[String] {
        self.coalgebra.labels()
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra<S> {
    bialgebra: Bialgebra<S>,
    antipode: LinearMap<S>,
}

impl<S: Scalar> HopfAlgebra<S> {
    /// Accepts a candidate antipode only after checking `S∗id = id∗S = η∘ε`.
    pub fn new(bialgebra: Bialgebra<S>, antipode: LinearMap<S>) -> Result<Self> {
        let n = bialgebra.dim();
        if antipode.domain_dim() != n || antipode.codomain_dim() != n {
            return Err(Error::ShapeMismatch {
                what: "antipode",
                expected: vec![n, n],
                got: vec![antipode.codomain_dim(), antipode.domain_dim()],
            });
        }
        let (c, a) = (bialgebra.coalgebra(), bialgebra.algebra());
        let id = LinearMap::identity(n);
        let unit = convolution_unit(c, a);
        if convolution(&antipode, &id, c, a)? != unit || convolution(&id, &antipode, c, a)? != unit
        {
            return Err(Error::AntipodeViolation);
        }
        Ok(HopfAlgebra {
            bialgebra,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn bialgebra(&self) -> &Bialgebra<S> {
        &self.bialgebra
    }

    pub fn coalgebra(&self) -> &Coalgebra<S> {
        self.bialgebra.coalgebra()
    }

    pub fn algebra(&self) -> &Algebra<S> {
        self.bialgebra.algebra()
    }

    pub fn antipode(&self) -> &LinearMap<S> {
        &self.antipode
    }

    pub fn into_bialgebra(self) -> Bialgebra<S> {
        self.bialgebra
    }
}

/// Compute the antipode as the convolution inverse of the identity.
pub fn antipode<S: Scalar>(b: &Bialgebra<S>) -> Option<HopfAlgebra<S>> {
    let s = convolution_inverse(&LinearMap::identity(b.dim()), b.coalgebra(), b.algebra())?;
    HopfAlgebra::new(b.clone(), s).ok()
}

fn check_hom<S: Scalar>(f: &LinearMap<S>, c: &Coalgebra<S>, a: &Algebra<S>) -> Result<()> {
    if f.domain_dim() != c.dim() || f.codomain_dim() != a.dim() {
        return Err(Error::ShapeMismatch {
            what: "convolution operand",
            expected: vec![a.dim(), c.dim()],
            got: vec![f.codomain_dim(), f.domain_dim()],
        });
    }
    Ok(())
}

/// `η_A ∘ ε_C`
pub fn convolution_unit<S: Scalar>(c: &Coalgebra<S>, a: &Algebra<S>) -> LinearMap<S> {
    LinearMap::from_columns(c.dim(), a.dim(), |i| {
        a.unit()
            .iter()
            .map(|u| u.clone() * c.counit()[i].clone())
            .collect()
    })
}

/// `(f ∗ g)(c) = Σ f(c₁) g(c₂)`
pub fn convolution<S: Scalar>(
    f: &LinearMap<S>,
    g: &LinearMap<S>,
    c: &Coalgebra<S>,
    a: &Algebra<S>,
) -> Result<LinearMap<S>> {
    check_hom(f, c, a)?;
    check_hom(g, c, a)?;
    Ok(LinearMap::from_columns(c.dim(), a.dim(), |i| {
        a.multiply_tensor(&apply_tensor(f, g, &c.delta().image_of_basis(i)))
    }))
}

/// Matrix of `g ↦ f ∗ g` (or `g ↦ g ∗ f` when `right`) on `Hom(C, A)`,
/// with `g` flattened row-major: entry `(k, i)` at `k * dim C + i`.
pub fn convolution_operator<S: Scalar>(
    f: &LinearMap<S>,
    c: &Coalgebra<S>,
    a: &Algebra<S>,
    right: bool,
) -> Matrix<S> {
    let (nc, na) = (c.dim(), a.dim());
    let fcols: Vec<Vec<S>> = (0..nc).map(|j| f.image_of_basis(j)).collect();
    // products[j][r] = f(e_j) e_r, or e_r f(e_j)
    let products: Vec<Vec<Vec<S>>> = fcols
        .iter()
        .map(|fj| {
            (0..na)
                .map(|r| {
                    let er = unit_vector(na, r);
                    if right {
                        a.multiply(&er, fj)
                    } else {
                        a.multiply(fj, &er)
                    }
                })
                .collect()
        })
        .collect();
    let mut m = Matrix::<S>::zeros(na * nc, na * nc);
    for i in 0..nc {
        for (idx, x) in support(&c.delta().image_of_basis(i)) {
            let (l, r) = (idx / nc, idx % nc);
            // the unknown map is applied to one leg, f to the other
            let (fleg, gleg) = if right { (r, l) } else { (l, r) };
            for (rr, prod) in products[fleg].iter().enumerate() {
                for (k, y) in support(prod) {
                    m.entry_mut(k * nc + i, rr * nc + gleg).add_mul(x, y);
                }
            }
        }
    }
    m
}

pub fn flatten<S: Scalar>(f: &LinearMap<S>) -> Vec<S> {
    f.matrix().row_vecs().into_iter().flatten().collect()
}

pub fn unflatten<S: Scalar>(v: &[S], domain: usize, codomain: usize) -> LinearMap<S> {
    LinearMap::from_matrix(Matrix::from_rows(
        domain,
        v.chunks(domain.max(1))
            .take(codomain)
            .map(|r| r.to_vec())
            .collect(),
    ))
}

/// Solve `f ∗ g = η∘ε` and keep `g` only if `g ∗ f = η∘ε` as well.
pub fn convolution_inverse<S: Scalar>(
    f: &LinearMap<S>,
    c: &Coalgebra<S>,
    a: &Algebra<S>,
) -> Option<LinearMap<S>> {
    check_hom(f, c, a).ok()?;
    let unit = convolution_unit(c, a);
    let op = LinearMap::from_matrix(convolution_operator(f, c, a, false));
    let g = unflatten(&solve_affine(&op, &flatten(&unit))?, c.dim(), a.dim());
    let left = convolution(f, &g, c, a).ok()?;
    let right = convolution(&g, f, c, a).ok()?;
    (left == unit && right == unit).then_some(g)
}
