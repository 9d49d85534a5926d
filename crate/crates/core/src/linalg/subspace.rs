use crate::error::{Error, Result};
use crate::linalg::{kron_vec, Matrix};
use crate::scalar::Scalar;

/// A subspace of `k^n`, stored by its reduced row-echelon basis.
///
/// The basis is canonical, so structural equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Matrix<S>,
    pivots: Vec<usize>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_matrix(m: &Matrix<S>) -> Self {
        let r = m.rref();
        Subspace {
            ambient: m.cols(),
            basis: r.matrix,
            pivots: r.pivots,
        }
    }

    /// Span of the given vectors; panics on length mismatch.
    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<S>>,
    {
        let rows: Vec<Vec<S>> = vectors
            .into_iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        Self::from_matrix(&Matrix::from_rows(ambient, rows))
    }

    pub fn basis_vector(ambient: usize, i: usize) -> Self {
        let mut v = vec![S::zero(); ambient];
        v[i] = S::one();
        Self::span(ambient, [v])
    }

    /// Subspace spanned by the coordinate vectors `e_i` for `i` in `indices`.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::span(
            ambient,
            indices.into_iter().map(|i| {
                let mut v = vec![S::zero(); ambient];
                v[i] = S::one();
                v
            }),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix<S> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<S>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its component along the basis; the result vanishes at
    /// every pivot column.
    pub fn reduce(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *o -= f.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    /// These are simply the entries of `v` at the pivot columns.
    pub fn coordinates(&self, v: &[S]) -> Option<Vec<S>> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
        } else {
            None
        }
    }

    /// Inverse of [`Subspace::coordinates`].
    pub fn from_coordinates(&self, c: &[S]) -> Vec<S> {
        assert_eq!(c.len(), self.dim());
        let mut out = vec![S::zero(); self.ambient];
        for (r, x) in c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    o.add_mul(x, b);
                }
            }
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis_vectors().iter().all(|v| other.contains(v))
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)))
    }

    /// `{u : <u, v> = 0 for all v}` in the dual coordinates.
    pub fn annihilator(&self) -> Self {
        Self::span(self.ambient, self.basis.nullspace())
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// `span{x ⊗ y}` inside `k^{n·m}`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut rows = Vec::with_capacity(self.dim() * other.dim());
        for x in self.basis_vectors() {
            for y in other.basis_vectors() {
                rows.push(kron_vec(&x, &y));
            }
        }
        Self::span(self.ambient * other.ambient, rows)
    }

    /// Matrix whose rows span the annihilator: `v ∈ self` iff `A v = 0`.
    pub fn equations(&self) -> Matrix<S> {
        let rows = self.basis.nullspace();
        Matrix::from_rows(self.ambient, rows)
    }
}

/// Quotient `k^n / W`, with the non-pivot coordinates of `W`'s canonical
/// basis as a complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient<S> {
    sub: Subspace<S>,
    complement: Vec<usize>,
}

impl<S: Scalar> Quotient<S> {
    pub fn new(sub: Subspace<S>) -> Self {
        let mut is_pivot = vec![false; sub.ambient_dim()];
        for &p in sub.pivots() {
            is_pivot[p] = true;
        }
        let complement = (0..sub.ambient_dim()).filter(|&i| !is_pivot[i]).collect();
        Quotient { sub, complement }
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.sub.ambient_dim()
    }

    pub fn kernel(&self) -> &Subspace<S> {
        &self.sub
    }

    /// Ambient indices whose images form the quotient basis.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn project(&self, v: &[S]) -> Vec<S> {
        let r = self.sub.reduce(v);
        self.complement.iter().map(|&i| r[i].clone()).collect()
    }

    /// Representative of a quotient vector supported on the complement.
    pub fn lift(&self, c: &[S]) -> Vec<S> {
        assert_eq!(c.len(), self.dim());
        let mut out = vec![S::zero(); self.ambient_dim()];
        for (&i, x) in self.complement.iter().zip(c) {
            out[i] = x.clone();
        }
        out
    }

    pub fn projection(&self) -> crate::linalg::LinearMap<S> {
        crate::linalg::LinearMap::from_columns(self.ambient_dim(), self.dim(), |j| {
            let mut e = vec![S::zero(); self.ambient_dim()];
            e[j] = S::one();
            self.project(&e)
        })
    }
}
