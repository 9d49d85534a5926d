use crate::coalgebra::{check_algebra, Algebra, Coalgebra};
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, LinearMap, Matrix, Subspace};
use crate::scalar::{FieldKind, Scalar};

/// The dual algebra `C*` on the dual basis: `e^a e^b = Σ_i δ_i^{ab} e^i`,
/// unit `ε`.
pub fn dual_algebra<S: Scalar>(c: &Coalgebra<S>) -> Algebra<S> {
    let mul = LinearMap::from_matrix(c.delta().matrix().transpose());
    check_algebra(mul, c.counit().to_vec()).expect("dual of a coalgebra is an algebra")
}

/// The Jacobson radical.
///
/// Over `Q` and over `F_p` with `p > dim A` this is the radical of the trace
/// form. For small primes the trace form is refined by the power-trace
/// functionals `a ↦ (Tr(ã^{p^i}) mod p^{i+1}) / p^i`, where `ã` is an integer
/// lift of the regular representation.
pub fn radical_of_algebra<S: Scalar>(a: &Algebra<S>) -> Result<Subspace<S>> {
    let n = a.dim();
    let j = match S::field() {
        FieldKind::Prime(p) if p as usize <= n => modular_radical(a, p)?,
        _ => trace_form_radical(a),
    };
    assert_nilpotent(a, &j)?;
    Ok(j)
}

fn trace_form_radical<S: Scalar>(a: &Algebra<S>) -> Subspace<S> {
    let n = a.dim();
    // Tr(L_{e_k}) = Σ_i m_{ki}^i
    let traces: Vec<S> = (0..n)
        .map(|k| {
            let mut t = S::zero();
            for i in 0..n {
                t += a.mul().matrix().get(i, k * n + i).clone();
            }
            t
        })
        .collect();
    let gram = Matrix::from_fn(n, n, |x, y| {
        let mut acc = S::zero();
        for (k, t) in traces.iter().enumerate() {
            acc.add_mul(a.mul().matrix().get(k, x * n + y), t);
        }
        acc
    });
    Subspace::span(n, gram.nullspace())
}

fn modular_radical<S: Scalar>(a: &Algebra<S>, p: u64) -> Result<Subspace<S>> {
    let n = a.dim();
    let mut ideal = Subspace::full(n);
    let mut level = 0u32;
    loop {
        let basis = ideal.basis_vectors();
        if basis.is_empty() {
            return Ok(ideal);
        }
        let mut rows = Vec::with_capacity(n);
        for j in 0..n {
            let e = unit_vector(n, j);
            let row = basis
                .iter()
                .map(|x| power_trace(a, &a.multiply(x, &e), p, level))
                .collect::<Result<Vec<S>>>()?;
            rows.push(row);
        }
        let coeffs = Matrix::from_rows(basis.len(), rows).nullspace();
        ideal = Subspace::span(
            n,
            coeffs.iter().map(|c| {
                let mut v = vec![S::zero(); n];
                for (ci, x) in c.iter().zip(&basis) {
                    crate::linalg::axpy(&mut v, ci, x);
                }
                v
            }),
        );
        // levels run up to floor(log_p n)
        if (p as u128).pow(level + 1) > n as u128 {
            return Ok(ideal);
        }
        level += 1;
    }
}

/// `(Tr(ã^{p^level}) mod p^{level+1}) / p^level`, as a field element.
fn power_trace<S: Scalar>(a: &Algebra<S>, z: &[S], p: u64, level: u32) -> Result<S> {
    let n = a.dim();
    let scale = (p as u128).pow(level);
    let m = scale * p as u128;
    let lm = a.left_mult(z);
    let mut base: Vec<u128> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            base.push(lm.get(i, j).residue().expect("prime field residue") as u128);
        }
    }
    let mut acc = base;
    for _ in 0..level {
        acc = mat_pow_mod(&acc, n, p, m);
    }
    let tr = (0..n).fold(0u128, |t, i| (t + acc[i * n + i]) % m);
    if tr % scale != 0 {
        return Err(Error::Internal("power trace not divisible".into()));
    }
    Ok(S::from_i64(((tr / scale) % p as u128) as i64))
}

fn mat_pow_mod(x: &[u128], n: usize, mut e: u64, m: u128) -> Vec<u128> {
    let mut result: Vec<u128> = (0..n * n)
        .map(|k| if k / n == k % n { 1 % m } else { 0 })
        .collect();
    let mut base = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul_mod(&result, &base, n, m);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul_mod(&base, &base, n, m);
        }
    }
    result
}

fn mat_mul_mod(x: &[u128], y: &[u128], n: usize, m: u128) -> Vec<u128> {
    let mut out = vec![0u128; n * n];
    for i in 0..n {
        for k in 0..n {
            let a = x[i * n + k];
            if a == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = (out[i * n + j] + a * y[k * n + j]) % m;
            }
        }
    }
    out
}

fn assert_nilpotent<S: Scalar>(a: &Algebra<S>, j: &Subspace<S>) -> Result<()> {
    let n = a.dim();
    let gens = j.basis_vectors();
    let mut power = j.clone();
    for _ in 0..=n {
        if power.is_zero() {
            return Ok(());
        }
        let mut products = Vec::new();
        for x in power.basis_vectors() {
            for y in &gens {
                products.push(a.multiply(&x, y));
            }
        }
        power = Subspace::span(n, products);
    }
    Err(Error::Internal("computed radical is not nilpotent".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{zoo, Fp, F2, F3, Q};
    use num_traits::Zero;

    /// `x ∈ J(A)` iff `xy` is nilpotent for every `y`; checked over all `y`
    /// in a finite field.
    fn brute_force_radical<const P: u64>(a: &Algebra<Fp<P>>) -> Subspace<Fp<P>> {
        let n = a.dim();
        let all = all_vectors::<P>(n);
        let members = all.iter().filter(|x| {
            all.iter().all(|y| {
                let xy = a.multiply(x, y);
                a.power(&xy, n).iter().all(|c| c.is_zero())
            })
        });
        Subspace::span(n, members.cloned())
    }

    fn all_vectors<const P: u64>(n: usize) -> Vec<Vec<Fp<P>>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<Fp<P>>| {
                    (0..P).map(move |c| {
                        let mut w = v.clone();
                        w.push(Fp::new(c));
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn group_algebra<S: Scalar>(t: &[&[usize]]) -> Algebra<S> {
        let g = zoo::group_algebra::<S>(
            &zoo::CayleyTable::new(t.iter().map(|r| r.to_vec()).collect()).unwrap(),
        )
        .unwrap();
        g.algebra().clone()
    }

    const C3: &[&[usize]] = &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]];
    const S3: &[&[usize]] = &[
        &[0, 1, 2, 3, 4, 5],
        &[1, 2, 0, 5, 3, 4],
        &[2, 0, 1, 4, 5, 3],
        &[3, 4, 5, 0, 1, 2],
        &[4, 5, 3, 2, 0, 1],
        &[5, 3, 4, 1, 2, 0],
    ];

    #[test]
    fn field_and_dual_numbers() {
        let k = Algebra::<Q>::from_fn(1, |_, _, _| Q::from_i64(1), vec![Q::from_i64(1)]).unwrap();
        assert!(radical_of_algebra(&k).unwrap().is_zero());
        // k[t]/(t²)
        let dual = Algebra::<Q>::from_fn(
            2,
            |i, j, k| {
                if i + j == k {
                    Q::from_i64(1)
                } else {
                    Q::from_i64(0)
                }
            },
            vec![Q::from_i64(1), Q::from_i64(0)],
        )
        .unwrap();
        assert_eq!(
            radical_of_algebra(&dual).unwrap(),
            Subspace::basis_vector(2, 1)
        );
    }

    #[test]
    fn modular_group_algebras_match_brute_force() {
        let a = group_algebra::<F3>(C3);
        let j = radical_of_algebra(&a).unwrap();
        assert_eq!(j.dim(), 2);
        assert_eq!(j, brute_force_radical(&a));

        let a = group_algebra::<F2>(S3);
        let j = radical_of_algebra(&a).unwrap();
        assert_eq!(j.dim(), 1);

        let a = group_algebra::<F3>(S3);
        assert_eq!(radical_of_algebra(&a).unwrap().dim(), 4);
    }

    #[test]
    fn semisimple_group_algebra_over_q() {
        assert!(radical_of_algebra(&group_algebra::<Q>(S3))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn sweedler_dual_radical() {
        let h = zoo::sweedler_h4::<Q>().unwrap();
        let a = dual_algebra(h.coalgebra());
        let j = radical_of_algebra(&a).unwrap();
        assert_eq!(j.dim(), 2);
        let h3 = zoo::sweedler_h4::<F3>().unwrap();
        let a3 = dual_algebra(h3.coalgebra());
        let j3 = radical_of_algebra(&a3).unwrap();
        assert_eq!(j3, brute_force_radical(&a3));
        assert_eq!(j3.dim(), 2);
    }

    #[test]
    fn taft_dual_radical() {
        let t = zoo::taft_algebra::<crate::F7>(3).unwrap();
        assert_eq!(
            radical_of_algebra(&dual_algebra(t.coalgebra()))
                .unwrap()
                .dim(),
            6
        );
    }
}
