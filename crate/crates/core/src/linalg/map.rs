use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// A linear map `k^domain -> k^codomain`.
///
/// The matrix has `codomain` rows and `domain` columns; column `j` is the
/// image of the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearMap<S> {
    matrix: Matrix<S>,
}

impl<S: Scalar> LinearMap<S> {
    pub fn new(domain: usize, codomain: usize, matrix: Matrix<S>) -> Result<Self> {
        if matrix.rows() != codomain || matrix.cols() != domain {
            return Err(Error::ShapeMismatch {
                what: "linear map",
                expected: vec![codomain, domain],
                got: vec![matrix.rows(), matrix.cols()],
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn from_matrix(matrix: Matrix<S>) -> Self {
        LinearMap { matrix }
    }

    /// Build a map from the images of the basis vectors.
    pub fn from_columns(
        domain: usize,
        codomain: usize,
        mut image: impl FnMut(usize) -> Vec<S>,
    ) -> Self {
        let cols: Vec<Vec<S>> = (0..domain).map(&mut image).collect();
        LinearMap {
            matrix: Matrix::from_columns(codomain, &cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            matrix: Matrix::identity(n),
        }
    }

    pub fn zero(domain: usize, codomain: usize) -> Self {
        LinearMap {
            matrix: Matrix::zeros(codomain, domain),
        }
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn image_of_basis(&self, j: usize) -> Vec<S> {
        self.matrix.col(j)
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.codomain_dim() != self.domain_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.domain_dim(),
                got: inner.codomain_dim(),
            });
        }
        Ok(LinearMap {
            matrix: self.matrix.mul(&inner.matrix),
        })
    }

    /// `self ⊗ other`, lexicographic basis on both sides.
    pub fn tensor(&self, other: &Self) -> Self {
        LinearMap {
            matrix: self.matrix.kron(&other.matrix),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(LinearMap {
            matrix: self.matrix.add(&other.matrix),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(LinearMap {
            matrix: self.matrix.sub(&other.matrix),
        })
    }

    pub fn scale(&self, s: &S) -> Self {
        LinearMap {
            matrix: self.matrix.scale(s),
        }
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.domain_dim() != other.domain_dim() || self.codomain_dim() != other.codomain_dim() {
            return Err(Error::ShapeMismatch {
                what: "linear map",
                expected: vec![self.codomain_dim(), self.domain_dim()],
                got: vec![other.codomain_dim(), other.domain_dim()],
            });
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel(&self) -> Subspace<S> {
        kernel(self)
    }

    pub fn image(&self) -> Subspace<S> {
        Subspace::from_matrix(&self.matrix.transpose())
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain_dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.domain_dim() == self.codomain_dim() && self.is_injective()
    }

    /// Image of a subspace.
    pub fn image_of(&self, x: &Subspace<S>) -> Subspace<S> {
        Subspace::span(
            self.codomain_dim(),
            x.basis_vectors().iter().map(|v| self.apply(v)),
        )
    }

    /// Restriction to a subspace `U` of the domain whose image lies in a
    /// subspace `W` of the codomain, in canonical coordinates on both sides.
    pub fn restrict(&self, u: &Subspace<S>, w: &Subspace<S>) -> Result<Self> {
        let mut cols = Vec::with_capacity(u.dim());
        for b in u.basis_vectors() {
            let img = self.apply(&b);
            let c = w.coordinates(&img).ok_or(Error::NotInvariant {
                what: "restricted map image",
            })?;
            cols.push(c);
        }
        Ok(LinearMap {
            matrix: Matrix::from_columns(w.dim(), &cols),
        })
    }
}

/// `{v : f(v) = 0}`.
pub fn kernel<S: Scalar>(f: &LinearMap<S>) -> Subspace<S> {
    Subspace::span(f.domain_dim(), f.matrix().nullspace())
}

/// `f⁻¹(W)`.
pub fn preimage<S: Scalar>(f: &LinearMap<S>, w: &Subspace<S>) -> Result<Subspace<S>> {
    if w.ambient_dim() != f.codomain_dim() {
        return Err(Error::DimensionMismatch {
            expected: f.codomain_dim(),
            got: w.ambient_dim(),
        });
    }
    let eqs = w.equations();
    Ok(Subspace::span(
        f.domain_dim(),
        eqs.mul(f.matrix()).nullspace(),
    ))
}

/// `(X + Y, X ∩ Y)`.
pub fn sum_intersect<S: Scalar>(
    x: &Subspace<S>,
    y: &Subspace<S>,
) -> Result<(Subspace<S>, Subspace<S>)> {
    Ok((x.sum(y)?, x.intersection(y)?))
}

/// One solution of `A v = b`, free variables set to zero, or `None` when
/// the system is inconsistent.
pub fn solve_affine<S: Scalar>(a: &LinearMap<S>, b: &[S]) -> Option<Vec<S>> {
    solve_system(a.matrix(), b)
}

pub(crate) fn solve_system<S: Scalar>(a: &Matrix<S>, b: &[S]) -> Option<Vec<S>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let n = a.cols();
    let aug = a.hstack(&Matrix::from_columns(b.len(), &[b.to_vec()]));
    let r = aug.rref();
    if r.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![S::zero(); n];
    for (row, &p) in r.pivots.iter().enumerate() {
        x[p] = r.matrix.get(row, n).clone();
    }
    Some(x)
}
