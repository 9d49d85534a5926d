//! Exact dense linear algebra: matrices, linear maps, canonical subspaces.
//!
//! Tensor products use one fixed convention everywhere: the basis vector
//! `e_i ⊗ f_j` of `V ⊗ W` has index `i * dim W + j`.

mod map;
mod matrix;
mod subspace;

#[allow(unused_imports)]
pub(crate) use map::solve_system;
pub use map::{kernel, preimage, solve_affine, sum_intersect, LinearMap};
pub use matrix::{Matrix, Rref};
pub use subspace::{Quotient, Subspace};

use crate::scalar::Scalar;

pub fn kron_vec<S: Scalar>(u: &[S], v: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); u.len() * v.len()];
    for (i, a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.iter().enumerate() {
            if !b.is_zero() {
                out[i * v.len() + j] = a.clone() * b.clone();
            }
        }
    }
    out
}

pub fn unit_vector<S: Scalar>(n: usize, i: usize) -> Vec<S> {
    let mut v = vec![S::zero(); n];
    v[i] = S::one();
    v
}

/// `acc += s * v`
pub fn axpy<S: Scalar>(acc: &mut [S], s: &S, v: &[S]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            a.add_mul(s, x);
        }
    }
}

/// Apply `f ⊗ g` to a vector of `V ⊗ W` without forming the Kronecker matrix.
pub fn apply_tensor<S: Scalar>(f: &LinearMap<S>, g: &LinearMap<S>, w: &[S]) -> Vec<S> {
    let (n, m) = (f.domain_dim(), g.domain_dim());
    assert_eq!(w.len(), n * m, "tensor vector length mismatch");
    let (p, q) = (f.codomain_dim(), g.codomain_dim());
    let mut out = vec![S::zero(); p * q];
    let fcols: Vec<Vec<S>> = (0..n).map(|i| f.image_of_basis(i)).collect();
    let gcols: Vec<Vec<S>> = (0..m).map(|j| g.image_of_basis(j)).collect();
    for (idx, c) in support(w) {
        let (fi, gj) = (&fcols[idx / m], &gcols[idx % m]);
        for (a, x) in support(fi) {
            let cx = c.clone() * x.clone();
            for (b, y) in support(gj) {
                out[a * q + b].add_mul(&cx, y);
            }
        }
    }
    out
}

/// Nonzero entries of a vector as `(index, value)`.
pub fn support<S: Scalar>(v: &[S]) -> impl Iterator<Item = (usize, &S)> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

/// The flip `V ⊗ W -> W ⊗ V`.
pub fn swap_map<S: Scalar>(n: usize, m: usize) -> LinearMap<S> {
    LinearMap::from_columns(n * m, n * m, |idx| {
        let (i, j) = (idx / m, idx % m);
        unit_vector(n * m, j * n + i)
    })
}
