//! Coalgebras and algebras given by structure constants.
//!
//! A coalgebra on the basis `e_0..e_{n-1}` is stored as its comultiplication
//! `Δ: k^n -> k^n ⊗ k^n` (with the lexicographic tensor basis) and its counit
//! vector. Both axioms are checked exactly whenever a value is built.

mod ops;
mod radical;
mod semisimple;

pub use ops::{
    generated_subcoalgebra, is_coideal, is_subcoalgebra, quotient_by_coideal, wedge,
    wedge_filtration,
};
pub use radical::{dual_algebra, radical_of_algebra};
pub use semisimple::{center, coradical, grouplikes, simple_components};

use crate::error::{Error, Result};
use crate::linalg::{apply_tensor, kron_vec, support, unit_vector, LinearMap, Matrix, Subspace};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra<S> {
    delta: LinearMap<S>,
    counit: Vec<S>,
    labels: Vec<String>,
}

/// Validate raw coalgebra data: coassociativity and both counit laws.
pub fn check_coalgebra<S: Scalar>(
    delta: LinearMap<S>,
    counit: Vec<S>,
    labels: Vec<String>,
) -> Result<Coalgebra<S>> {
    let n = counit.len();
    if delta.domain_dim() != n || delta.codomain_dim() != n * n {
        return Err(Error::ShapeMismatch {
            what: "comultiplication",
            expected: vec![n * n, n],
            got: vec![delta.codomain_dim(), delta.domain_dim()],
        });
    }
    if labels.len() != n {
        return Err(Error::ShapeMismatch {
            what: "basis labels",
            expected: vec![n],
            got: vec![labels.len()],
        });
    }
    let id = LinearMap::identity(n);
    for i in 0..n {
        let d = delta.image_of_basis(i);
        if apply_tensor(&delta, &id, &d) != apply_tensor(&id, &delta, &d) {
            return Err(Error::CoassociativityViolation(i));
        }
        let mut left = vec![S::zero(); n];
        let mut right = vec![S::zero(); n];
        for (idx, c) in support(&d) {
            let (a, b) = (idx / n, idx % n);
            left[b].add_mul(c, &counit[a]);
            right[a].add_mul(c, &counit[b]);
        }
        let e = unit_vector(n, i);
        if left != e || right != e {
            return Err(Error::CounitViolation(i));
        }
    }
    Ok(Coalgebra {
        delta,
        counit,
        labels,
    })
}

impl<S: Scalar> Coalgebra<S> {
    pub fn new(delta: LinearMap<S>, counit: Vec<S>, labels: Vec<String>) -> Result<Self> {
        check_coalgebra(delta, counit, labels)
    }

    /// Build from a closure giving `δ_i^{jk}`, the coefficient of
    /// `e_j ⊗ e_k` in `Δ(e_i)`.
    pub fn from_fn(
        n: usize,
        mut delta: impl FnMut(usize, usize, usize) -> S,
        counit: Vec<S>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let map = LinearMap::from_columns(n, n * n, |i| {
            let mut v = Vec::with_capacity(n * n);
            for j in 0..n {
                for k in 0..n {
                    v.push(delta(i, j, k));
                }
            }
            v
        });
        check_coalgebra(map, counit, labels)
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn delta(&self) -> &LinearMap<S> {
        &self.delta
    }

    pub fn counit(&self) -> &[S] {
        &self.counit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn counit_map(&self) -> LinearMap<S> {
        LinearMap::from_matrix(Matrix::from_rows(self.dim(), vec![self.counit.clone()]))
    }

    pub fn comultiply(&self, v: &[S]) -> Vec<S> {
        self.delta.apply(v)
    }

    pub fn epsilon(&self, v: &[S]) -> S {
        let mut acc = S::zero();
        for (i, x) in support(v) {
            acc.add_mul(x, &self.counit[i]);
        }
        acc
    }

    /// `(Δ ⊗ id) Δ (v)`
    pub fn comultiply_twice(&self, v: &[S]) -> Vec<S> {
        apply_tensor(
            &self.delta,
            &LinearMap::identity(self.dim()),
            &self.comultiply(v),
        )
    }

    /// The group-like coalgebra on `n` points, `Δe_i = e_i ⊗ e_i`.
    pub fn grouplike(n: usize) -> Self {
        Self::from_fn(
            n,
            |i, j, k| {
                if i == j && j == k {
                    S::one()
                } else {
                    S::zero()
                }
            },
            vec![S::one(); n],
            (0..n).map(|i| format!("e{i}")).collect(),
        )
        .expect("group-like coalgebra is valid")
    }

    /// The coalgebra structure on a subcoalgebra `D`, in `D`'s canonical basis.
    pub fn restrict(&self, d: &Subspace<S>) -> Result<Self> {
        if d.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: d.ambient_dim(),
            });
        }
        if !is_subcoalgebra(self, d) {
            return Err(Error::NotASubcoalgebra);
        }
        let n = self.dim();
        let piv = d.pivots();
        let m = d.dim();
        let delta = LinearMap::from_columns(m, m * m, |k| {
            let w = self.comultiply(d.basis().row(k));
            let mut out = Vec::with_capacity(m * m);
            for &a in piv {
                for &b in piv {
                    out.push(w[a * n + b].clone());
                }
            }
            out
        });
        let counit = d.basis_vectors().iter().map(|v| self.epsilon(v)).collect();
        let labels = piv.iter().map(|&p| self.labels[p].clone()).collect();
        check_coalgebra(delta, counit, labels)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let t = n + m;
        let delta = LinearMap::from_columns(t, t * t, |i| {
            let mut out = vec![S::zero(); t * t];
            let (src, off, sz) = if i < n { (self, 0, n) } else { (other, n, m) };
            let w = src.delta.image_of_basis(i - off);
            for (idx, c) in support(&w) {
                let (a, b) = (idx / sz, idx % sz);
                out[(a + off) * t + b + off] = c.clone();
            }
            out
        });
        let mut counit = self.counit.clone();
        counit.extend(other.counit.iter().cloned());
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        check_coalgebra(delta, counit, labels).expect("direct sum of coalgebras is a coalgebra")
    }
}

/// A unital associative algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<S> {
    mul: LinearMap<S>,
    unit: Vec<S>,
}

pub fn check_algebra<S: Scalar>(mul: LinearMap<S>, unit: Vec<S>) -> Result<Algebra<S>> {
    let n = unit.len();
    if mul.domain_dim() != n * n || mul.codomain_dim() != n {
        return Err(Error::ShapeMismatch {
            what: "multiplication",
            expected: vec![n, n * n],
            got: vec![mul.codomain_dim(), mul.domain_dim()],
        });
    }
    let a = Algebra { mul, unit };
    let products: Vec<Vec<S>> = (0..n * n).map(|idx| a.mul.image_of_basis(idx)).collect();
    for i in 0..n {
        for j in 0..n {
            let ij = &products[i * n + j];
            for k in 0..n {
                let left = a.multiply(ij, &unit_vector(n, k));
                let right = a.multiply(&unit_vector(n, i), &products[j * n + k]);
                if left != right {
                    return Err(Error::AssociativityViolation(i, j, k));
                }
            }
        }
    }
    for i in 0..n {
        let e = unit_vector(n, i);
        if a.multiply(&a.unit, &e) != e || a.multiply(&e, &a.unit) != e {
            return Err(Error::UnitViolation(i));
        }
    }
    Ok(a)
}

impl<S: Scalar> Algebra<S> {
    pub fn new(mul: LinearMap<S>, unit: Vec<S>) -> Result<Self> {
        check_algebra(mul, unit)
    }

    /// `m_{ij}^k` is the coefficient of `e_k` in `e_i e_j`.
    pub fn from_fn(
        n: usize,
        mut mul: impl FnMut(usize, usize, usize) -> S,
        unit: Vec<S>,
    ) -> Result<Self> {
        let map = LinearMap::from_columns(n * n, n, |idx| {
            (0..n).map(|k| mul(idx / n, idx % n, k)).collect()
        });
        check_algebra(map, unit)
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn mul(&self) -> &LinearMap<S> {
        &self.mul
    }

    pub fn unit(&self) -> &[S] {
        &self.unit
    }

    pub fn multiply(&self, a: &[S], b: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        for (i, x) in support(a) {
            for (j, y) in support(b) {
                let xy = x.clone() * y.clone();
                for (k, m) in support(&self.mul.image_of_basis(i * n + j)) {
                    out[k].add_mul(&xy, m);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ a y`.
    pub fn left_mult(&self, a: &[S]) -> Matrix<S> {
        let n = self.dim();
        let cols: Vec<Vec<S>> = (0..n)
            .map(|j| self.multiply(a, &unit_vector(n, j)))
            .collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn power(&self, a: &[S], e: usize) -> Vec<S> {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.multiply(&acc, a);
        }
        acc
    }

    /// Apply the multiplication to an element of `A ⊗ A`.
    pub fn multiply_tensor(&self, w: &[S]) -> Vec<S> {
        self.mul.apply(w)
    }

    pub fn tensor_square_product(&self, a: &[S], b: &[S]) -> Vec<S> {
        self.mul.apply(&kron_vec(a, b))
    }
}
