//! Built-in examples: group algebras, Sweedler's four-dimensional Hopf
//! algebra, Taft algebras and comatrix coalgebras.

use crate::bialgebra::{antipode, tensor_algebra_multiply, Bialgebra, HopfAlgebra};
use crate::coalgebra::{Algebra, Coalgebra};
use crate::error::{Error, Result};
use crate::linalg::{kron_vec, unit_vector, LinearMap, Matrix, Subspace};
use crate::module_coalgebra::ModuleCoalgebra;
use crate::scalar::{FieldKind, Scalar};

/// Multiplication table of a finite group, identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidCayleyTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCayleyTable(format!(
                    "row {i} has length {}",
                    row.len()
                )));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidCayleyTable(format!(
                        "row {i} is not a permutation"
                    )));
                }
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if std::mem::replace(&mut seen[row[j]], true) {
                    return Err(Error::InvalidCayleyTable(format!(
                        "column {j} is not a permutation"
                    )));
                }
            }
        }
        if (0..n).any(|i| table[0][i] != i || table[i][0] != i) {
            return Err(Error::InvalidCayleyTable(
                "index 0 is not the identity".into(),
            ));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidCayleyTable(format!(
                            "({a} {b}) {c} != {a} ({b} {c})"
                        )));
                    }
                }
            }
        }
        Ok(CayleyTable { table })
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new(
            (0..n)
                .map(|i| (0..n).map(|j| (i + j) % n).collect())
                .collect(),
        )
        .expect("cyclic group")
    }

    /// `S₃` as permutations of `{0,1,2}`, with `0..3` the rotations.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
            [0, 2, 1],
            [2, 1, 0],
            [1, 0, 2],
        ];
        let index = |p: [usize; 3]| {
            perms
                .iter()
                .position(|q| *q == p)
                .expect("closed under composition")
        };
        let table = (0..6)
            .map(|a| {
                (0..6)
                    .map(|b| {
                        let (pa, pb) = (perms[a], perms[b]);
                        index([pa[pb[0]], pa[pb[1]], pa[pb[2]]])
                    })
                    .collect()
            })
            .collect();
        Self::new(table).expect("S3")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.table[a]
            .iter()
            .position(|&x| x == 0)
            .expect("Latin square")
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

/// The group algebra `kG`: `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra<S: Scalar>(t: &CayleyTable) -> Result<HopfAlgebra<S>> {
    let n = t.order();
    let labels = (0..n)
        .map(|i| {
            if i == 0 {
                "1".to_string()
            } else {
                format!("g{i}")
            }
        })
        .collect();
    let c = Coalgebra::from_fn(
        n,
        |i, j, k| {
            if i == j && j == k {
                S::one()
            } else {
                S::zero()
            }
        },
        vec![S::one(); n],
        labels,
    )?;
    let a = Algebra::from_fn(
        n,
        |i, j, k| {
            if t.mul(i, j) == k {
                S::one()
            } else {
                S::zero()
            }
        },
        unit_vector(n, 0),
    )?;
    let b = Bialgebra::new(c, a)?;
    let s = LinearMap::from_columns(n, n, |i| unit_vector(n, t.inverse(i)));
    HopfAlgebra::new(b, s)
}

/// Sweedler's Hopf algebra on `1, g, x, gx`.
pub fn sweedler_h4<S: Scalar>() -> Result<HopfAlgebra<S>> {
    if S::characteristic() == 2 {
        return Err(Error::BadCharacteristic(2));
    }
    pointed_rank_one(2, -S::one())
}

/// Smallest generator of `F_p^×`.
fn smallest_generator(p: u64) -> u64 {
    let phi = p - 1;
    let mut factors = Vec::new();
    let mut m = phi;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow(g, phi / q) != 1))
        .unwrap_or(1)
}

/// The Taft algebra of dimension `n²` over `F_p`, `n | p - 1`. The basis
/// element `g^a x^b` has index `b·n + a`.
pub fn taft_algebra<S: Scalar>(n: usize) -> Result<HopfAlgebra<S>> {
    let p = match S::field() {
        FieldKind::Prime(p) => p,
        FieldKind::Rational => {
            return Err(Error::UnsupportedField(
                "Taft algebras are built over F_p".into(),
            ))
        }
    };
    if n < 2 || (p - 1) % n as u64 != 0 {
        return Err(Error::NoRootOfUnity { n: n as u64, p });
    }
    let gen = smallest_generator(p);
    let mut omega = S::one();
    for _ in 0..(p - 1) / n as u64 {
        omega *= S::from_i64(gen as i64);
    }
    pointed_rank_one(n, omega)
}

/// `g^n = 1`, `x^n = 0`, `xg = ω gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
fn pointed_rank_one<S: Scalar>(n: usize, omega: S) -> Result<HopfAlgebra<S>> {
    let d = n * n;
    let idx = |a: usize, b: usize| b * n + a;
    let mut omega_pow = vec![S::one()];
    for k in 1..n {
        omega_pow.push(omega_pow[k - 1].clone() * omega.clone());
    }
    let a = Algebra::from_fn(
        d,
        |i, j, k| {
            let (a1, b1, a2, b2) = (i % n, i / n, j % n, j / n);
            if b1 + b2 >= n || idx((a1 + a2) % n, b1 + b2) != k {
                return S::zero();
            }
            omega_pow[(b1 * a2) % n].clone()
        },
        unit_vector(d, 0),
    )?;
    let g = unit_vector(d, idx(1, 0));
    let x = unit_vector(d, idx(0, 1));
    let one = unit_vector(d, 0);
    let dg = kron_vec(&g, &g);
    let mut dx = kron_vec(&x, &one);
    for (t, s) in dx.iter_mut().zip(kron_vec(&g, &x)) {
        *t += s;
    }
    let mut deltas = vec![Vec::new(); d];
    for b in 0..n {
        for a_ in 0..n {
            let mut v = kron_vec(&one, &one);
            for _ in 0..a_ {
                v = tensor_algebra_multiply(&a, &v, &dg);
            }
            for _ in 0..b {
                v = tensor_algebra_multiply(&a, &v, &dx);
            }
            deltas[idx(a_, b)] = v;
        }
    }
    let labels = (0..d)
        .map(|i| {
            let (ga, xb) = (i % n, i / n);
            let gpart = match ga {
                0 => String::new(),
                1 => "g".to_string(),
                e => format!("g^{e}"),
            };
            let xpart = match xb {
                0 => String::new(),
                1 => "x".to_string(),
                e => format!("x^{e}"),
            };
            if ga == 0 && xb == 0 {
                "1".to_string()
            } else {
                gpart + &xpart
            }
        })
        .collect();
    let counit = (0..d)
        .map(|i| if i / n == 0 { S::one() } else { S::zero() })
        .collect();
    let c = Coalgebra::new(
        LinearMap::from_columns(d, d * d, |i| deltas[i].clone()),
        counit,
        labels,
    )?;
    let b = Bialgebra::new(c, a)?;
    antipode(&b).ok_or(Error::NotHopf)
}

/// The comatrix coalgebra on `e_{ij}`, index `i·n + j`.
pub fn comatrix_coalgebra<S: Scalar>(n: usize) -> Coalgebra<S> {
    let d = n * n;
    let labels = (0..d)
        .map(|k| format!("e{}{}", k / n + 1, k % n + 1))
        .collect();
    Coalgebra::from_fn(
        d,
        |ij, ab, cd| {
            let (i, j) = (ij / n, ij % n);
            let (a, b, c, e) = (ab / n, ab % n, cd / n, cd % n);
            if a == i && e == j && b == c {
                S::one()
            } else {
                S::zero()
            }
        },
        (0..d)
            .map(|k| if k / n == k % n { S::one() } else { S::zero() })
            .collect(),
        labels,
    )
    .expect("comatrix coalgebra is valid")
}

/// `gH` for a grouplike `g` of `m`, on the basis `g·b_j`.
pub fn grouplike_orbit<S: Scalar>(m: &ModuleCoalgebra<S>, g: &[S]) -> Result<ModuleCoalgebra<S>> {
    let k = m.bialgebra().dim();
    let images: Vec<Vec<S>> = (0..k).map(|j| m.act(g, &unit_vector(k, j))).collect();
    let orbit = Subspace::span(m.dim(), images.iter().cloned());
    if orbit.dim() != k {
        return Err(Error::NotInvariant {
            what: "gH is not free of rank one",
        });
    }
    let restricted = m.restrict(&orbit)?;
    let cols: Vec<Vec<S>> = images
        .iter()
        .map(|v| orbit.coordinates(v).expect("g·b ∈ gH"))
        .collect();
    restricted.change_basis(&Matrix::from_columns(k, &cols))
}
