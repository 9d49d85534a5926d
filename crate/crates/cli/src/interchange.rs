//! The JSON interchange format for structure constants.
//!
//! Scalars are strings in the grammar `-?[0-9]+(/[1-9][0-9]*)?`. Tensor
//! conventions, with `e` the basis of the carrier and `b` that of the
//! bialgebra:
//!
//! * `delta[i][j][k]`: coefficient of `e_j ⊗ e_k` in `Δ(e_i)`
//! * `epsilon[i]`: `ε(e_i)`
//! * `mu[i][j][k]`: coefficient of `e_k` in `e_i e_j`
//! * `unit[k]`: coefficient of `e_k` in `1`
//! * `antipode[i][j]`: coefficient of `e_j` in `S(e_i)`
//! * `action[i][j][k]`: coefficient of `e_k` in `e_i · b_j`
//! * `coaction[m][n][c]`: coefficient of `m_n ⊗ c_c` in `ρ(m_m)`
//! * `basis[r]`: the `r`-th basis vector of a subspace

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use modcoalg::bialgebra::{Bialgebra, HopfAlgebra};
use modcoalg::coalgebra::{Algebra, Coalgebra};
use modcoalg::hopf_module::{HopfModule, RightModule};
use modcoalg::linalg::{LinearMap, Matrix, Subspace};
use modcoalg::module_coalgebra::ModuleCoalgebra;
use modcoalg::{FieldKind, Scalar};

use crate::error::{CliError, DocError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

impl FieldSpec {
    pub fn of<S: Scalar>() -> Self {
        match S::field() {
            FieldKind::Rational => FieldSpec::Q,
            FieldKind::Prime(p) => FieldSpec::Fp { p },
        }
    }

    pub fn name(self) -> String {
        match self {
            FieldSpec::Q => "Q".into(),
            FieldSpec::Fp { p } => format!("F{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "Q" {
            return Ok(FieldSpec::Q);
        }
        let digits = s.strip_prefix('F').unwrap_or(s);
        digits
            .parse()
            .map(|p| FieldSpec::Fp { p })
            .map_err(|_| format!("bad field `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Coalgebra,
    Bialgebra,
    Hopf,
    ModuleCoalgebra,
    HopfModule,
    Subspace,
}

type T1 = Vec<String>;
type T2 = Vec<Vec<String>>;
type T3 = Vec<Vec<Vec<String>>>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tensors {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<T3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<T1>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<T3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<T1>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<T2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<T3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<T3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<T2>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub field: FieldSpec,
    pub kind: Kind,
    pub dims: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis_labels: Vec<String>,
    pub tensors: Tensors,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bialgebra: Option<Box<Document>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module_coalgebra: Option<Box<Document>>,
}

/// Parse and shape-check a document.
pub fn parse_document(text: &str) -> Result<Document, DocError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| DocError::Parse {
        line: e.line(),
        col: e.column(),
        message: e.to_string(),
    })?;
    validate_shapes(&doc)?;
    Ok(doc)
}

pub fn emit_document(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

fn dim(doc: &Document, key: &str) -> Result<usize, DocError> {
    doc.dims.get(key).copied().ok_or_else(|| DocError::Shape {
        tensor: format!("dims.{key}"),
        expected: "present".into(),
        got: "missing".into(),
    })
}

fn require<'a, T>(t: &'a Option<T>, name: &str) -> Result<&'a T, DocError> {
    t.as_ref().ok_or_else(|| DocError::Shape {
        tensor: name.into(),
        expected: "present".into(),
        got: "missing".into(),
    })
}

fn shape_error(tensor: &str, expected: &[usize], got: Vec<usize>) -> DocError {
    DocError::Shape {
        tensor: tensor.into(),
        expected: format!("{expected:?}"),
        got: format!("{got:?}"),
    }
}

fn check1(t: &T1, name: &str, n: usize) -> Result<(), DocError> {
    if t.len() != n {
        return Err(shape_error(name, &[n], vec![t.len()]));
    }
    Ok(())
}

fn check2(t: &T2, name: &str, a: usize, b: usize) -> Result<(), DocError> {
    if t.len() != a {
        return Err(shape_error(name, &[a, b], vec![t.len()]));
    }
    for row in t {
        if row.len() != b {
            return Err(shape_error(name, &[a, b], vec![t.len(), row.len()]));
        }
    }
    Ok(())
}

fn check3(t: &T3, name: &str, a: usize, b: usize, c: usize) -> Result<(), DocError> {
    if t.len() != a {
        return Err(shape_error(name, &[a, b, c], vec![t.len()]));
    }
    for m in t {
        if m.len() != b {
            return Err(shape_error(name, &[a, b, c], vec![t.len(), m.len()]));
        }
        for row in m {
            if row.len() != c {
                return Err(shape_error(
                    name,
                    &[a, b, c],
                    vec![t.len(), m.len(), row.len()],
                ));
            }
        }
    }
    Ok(())
}

fn check_labels(doc: &Document, n: usize) -> Result<(), DocError> {
    if !doc.basis_labels.is_empty() && doc.basis_labels.len() != n {
        return Err(shape_error(
            "basis_labels",
            &[n],
            vec![doc.basis_labels.len()],
        ));
    }
    Ok(())
}

/// Every tensor the kind requires is present with a consistent shape.
pub fn is_prime(p: u64) -> bool {
    p >= 2 && !(2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d))
}

pub fn validate_shapes(doc: &Document) -> Result<(), DocError> {
    if let FieldSpec::Fp { p } = doc.field {
        if !is_prime(p) {
            return Err(DocError::Field(format!("{p} is not prime")));
        }
    }
    for nested in [&doc.bialgebra, &doc.module_coalgebra]
        .into_iter()
        .flatten()
    {
        if nested.field != doc.field {
            return Err(DocError::Field(
                "nested document over a different field".into(),
            ));
        }
        validate_shapes(nested)?;
    }
    let t = &doc.tensors;
    match doc.kind {
        Kind::Coalgebra => {
            let n = dim(doc, "C")?;
            check3(require(&t.delta, "delta")?, "delta", n, n, n)?;
            check1(require(&t.epsilon, "epsilon")?, "epsilon", n)?;
            check_labels(doc, n)
        }
        Kind::Bialgebra | Kind::Hopf => {
            let n = dim(doc, "B")?;
            check3(require(&t.delta, "delta")?, "delta", n, n, n)?;
            check1(require(&t.epsilon, "epsilon")?, "epsilon", n)?;
            check3(require(&t.mu, "mu")?, "mu", n, n, n)?;
            check1(require(&t.unit, "unit")?, "unit", n)?;
            if doc.kind == Kind::Hopf {
                check2(require(&t.antipode, "antipode")?, "antipode", n, n)?;
            } else if let Some(s) = &t.antipode {
                check2(s, "antipode", n, n)?;
            }
            check_labels(doc, n)
        }
        Kind::ModuleCoalgebra => {
            let (n, k) = (dim(doc, "C")?, dim(doc, "B")?);
            check3(require(&t.delta, "delta")?, "delta", n, n, n)?;
            check1(require(&t.epsilon, "epsilon")?, "epsilon", n)?;
            check3(require(&t.action, "action")?, "action", n, k, n)?;
            if let Some(b) = &doc.bialgebra {
                if b.dims.get("B") != Some(&k) {
                    return Err(shape_error(
                        "bialgebra",
                        &[k],
                        vec![b.dims.get("B").copied().unwrap_or(0)],
                    ));
                }
            }
            check_labels(doc, n)
        }
        Kind::HopfModule => {
            let (d, n, k) = (dim(doc, "M")?, dim(doc, "C")?, dim(doc, "B")?);
            check3(require(&t.action, "action")?, "action", d, k, d)?;
            check3(require(&t.coaction, "coaction")?, "coaction", d, d, n)?;
            let mc = require(&doc.module_coalgebra, "module_coalgebra")?;
            if mc.kind != Kind::ModuleCoalgebra
                || mc.dims.get("C") != Some(&n)
                || mc.dims.get("B") != Some(&k)
            {
                return Err(DocError::Shape {
                    tensor: "module_coalgebra".into(),
                    expected: format!("module_coalgebra with C = {n}, B = {k}"),
                    got: format!("{:?} with dims {:?}", mc.kind, mc.dims),
                });
            }
            check_labels(doc, d)
        }
        Kind::Subspace => {
            let (n, r) = (dim(doc, "ambient")?, dim(doc, "dim")?);
            check2(require(&t.basis, "basis")?, "basis", r, n)
        }
    }
}

fn scalar<S: Scalar>(token: &str) -> Result<S, DocError> {
    S::parse_token(token).map_err(|e| DocError::BadScalar(e.0))
}

fn vector<S: Scalar>(t: &T1) -> Result<Vec<S>, DocError> {
    t.iter().map(|x| scalar(x)).collect()
}

/// The map `k^a -> k^(b·c)` whose column `i` is `t[i]` flattened row-major.
fn tensor_map<S: Scalar>(t: &T3) -> Result<LinearMap<S>, DocError> {
    let a = t.len();
    let cols: Vec<Vec<S>> = t
        .iter()
        .map(|m| {
            m.iter()
                .flatten()
                .map(|x| scalar(x))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let rows = cols.first().map_or(0, |c| c.len());
    Ok(LinearMap::from_columns(a, rows, |i| cols[i].clone()))
}

/// The map `k^(a·b) -> k^c` with `e_i ⊗ e_j ↦ t[i][j]`.
fn bilinear_map<S: Scalar>(t: &T3, b: usize, c: usize) -> Result<LinearMap<S>, DocError> {
    let cols: Vec<Vec<S>> = t
        .iter()
        .flatten()
        .map(|row| vector(row))
        .collect::<Result<_, _>>()?;
    Ok(LinearMap::from_columns(t.len() * b, c, |i| cols[i].clone()))
}

fn labels(doc: &Document, n: usize) -> Vec<String> {
    if doc.basis_labels.is_empty() {
        (0..n).map(|i| format!("e{i}")).collect()
    } else {
        doc.basis_labels.clone()
    }
}

pub fn load_coalgebra<S: Scalar>(doc: &Document) -> Result<Coalgebra<S>, CliError> {
    let n = doc.tensors.delta.as_ref().map_or(0, |d| d.len());
    let delta = tensor_map(require(&doc.tensors.delta, "delta")?)?;
    let eps = vector(require(&doc.tensors.epsilon, "epsilon")?)?;
    Ok(Coalgebra::new(delta, eps, labels(doc, n))?)
}

pub fn load_bialgebra<S: Scalar>(
    doc: &Document,
) -> Result<(Bialgebra<S>, Option<HopfAlgebra<S>>), CliError> {
    if !matches!(doc.kind, Kind::Bialgebra | Kind::Hopf) {
        return Err(DocError::Kind {
            expected: "bialgebra or hopf".into(),
            got: doc.kind,
        }
        .into());
    }
    let c = load_coalgebra(doc)?;
    let n = c.dim();
    let mu = bilinear_map(require(&doc.tensors.mu, "mu")?, n, n)?;
    let unit = vector(require(&doc.tensors.unit, "unit")?)?;
    let b = Bialgebra::new(c, Algebra::new(mu, unit)?)?;
    let hopf = match &doc.tensors.antipode {
        Some(s) => {
            let rows: Vec<Vec<S>> = s.iter().map(|r| vector(r)).collect::<Result<_, _>>()?;
            Some(HopfAlgebra::new(
                b.clone(),
                LinearMap::from_columns(n, n, |i| rows[i].clone()),
            )?)
        }
        None => None,
    };
    Ok((b, hopf))
}

pub fn load_module_coalgebra<S: Scalar>(
    doc: &Document,
    hopf: Option<&Document>,
) -> Result<ModuleCoalgebra<S>, CliError> {
    if doc.kind != Kind::ModuleCoalgebra {
        return Err(DocError::Kind {
            expected: "module_coalgebra".into(),
            got: doc.kind,
        }
        .into());
    }
    let bdoc = match (hopf, &doc.bialgebra) {
        (Some(h), _) => h,
        (None, Some(b)) => b.as_ref(),
        (None, None) => {
            return Err(DocError::Shape {
                tensor: "bialgebra".into(),
                expected: "nested document or --hopf".into(),
                got: "missing".into(),
            }
            .into())
        }
    };
    if bdoc.field != doc.field {
        return Err(DocError::Field("--hopf document is over a different field".into()).into());
    }
    let (b, _) = load_bialgebra(bdoc)?;
    let c = load_coalgebra(doc)?;
    let action = bilinear_map(require(&doc.tensors.action, "action")?, b.dim(), c.dim())?;
    Ok(ModuleCoalgebra::new(c, b, action)?)
}

pub fn load_hopf_module<S: Scalar>(
    doc: &Document,
    hopf: Option<&Document>,
) -> Result<HopfModule<S>, CliError> {
    let over = load_module_coalgebra(require(&doc.module_coalgebra, "module_coalgebra")?, hopf)?;
    let d = dim(doc, "M")?;
    let action = bilinear_map(
        require(&doc.tensors.action, "action")?,
        over.bialgebra().dim(),
        d,
    )?;
    let module = RightModule::new(d, over.bialgebra().clone(), action)?;
    let coaction = tensor_map(require(&doc.tensors.coaction, "coaction")?)?;
    Ok(HopfModule::new(module, over, coaction)?)
}

pub fn load_subspace<S: Scalar>(doc: &Document) -> Result<Subspace<S>, CliError> {
    if doc.kind != Kind::Subspace {
        return Err(DocError::Kind {
            expected: "subspace".into(),
            got: doc.kind,
        }
        .into());
    }
    let n = dim(doc, "ambient")?;
    let rows: Vec<Vec<S>> = require(&doc.tensors.basis, "basis")?
        .iter()
        .map(|r| vector(r))
        .collect::<Result<_, _>>()?;
    Ok(Subspace::span(n, rows))
}

fn enc<S: Scalar>(v: &[S]) -> T1 {
    v.iter().map(|x| x.encode()).collect()
}

fn enc_tensor<S: Scalar>(f: &LinearMap<S>, b: usize) -> T3 {
    (0..f.domain_dim())
        .map(|i| f.image_of_basis(i).chunks(b.max(1)).map(enc).collect())
        .collect()
}

fn enc_bilinear<S: Scalar>(f: &LinearMap<S>, a: usize, b: usize) -> T3 {
    (0..a)
        .map(|i| (0..b).map(|j| enc(&f.image_of_basis(i * b + j))).collect())
        .collect()
}

fn document(
    field: FieldSpec,
    kind: Kind,
    dims: &[(&str, usize)],
    labels: &[String],
    tensors: Tensors,
) -> Document {
    Document {
        field,
        kind,
        dims: dims.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        basis_labels: labels.to_vec(),
        tensors,
        bialgebra: None,
        module_coalgebra: None,
    }
}

pub fn emit_coalgebra<S: Scalar>(c: &Coalgebra<S>) -> Document {
    let n = c.dim();
    let tensors = Tensors {
        delta: Some(enc_tensor(c.delta(), n)),
        epsilon: Some(enc(c.counit())),
        ..Tensors::default()
    };
    document(
        FieldSpec::of::<S>(),
        Kind::Coalgebra,
        &[("C", n)],
        c.labels(),
        tensors,
    )
}

pub fn emit_bialgebra<S: Scalar>(b: &Bialgebra<S>, antipode: Option<&LinearMap<S>>) -> Document {
    let n = b.dim();
    let tensors = Tensors {
        delta: Some(enc_tensor(b.coalgebra().delta(), n)),
        epsilon: Some(enc(b.coalgebra().counit())),
        mu: Some(enc_bilinear(b.algebra().mul(), n, n)),
        unit: Some(enc(b.unit())),
        antipode: antipode.map(|s| (0..n).map(|i| enc(&s.image_of_basis(i))).collect()),
        ..Tensors::default()
    };
    let kind = if antipode.is_some() {
        Kind::Hopf
    } else {
        Kind::Bialgebra
    };
    document(FieldSpec::of::<S>(), kind, &[("B", n)], b.labels(), tensors)
}

pub fn emit_hopf<S: Scalar>(h: &HopfAlgebra<S>) -> Document {
    emit_bialgebra(h.bialgebra(), Some(h.antipode()))
}

/// With `nested`, the bialgebra is embedded; otherwise it is supplied by `--hopf`.
pub fn emit_module_coalgebra<S: Scalar>(m: &ModuleCoalgebra<S>, nested: bool) -> Document {
    let (n, k) = (m.dim(), m.bialgebra().dim());
    let c = m.coalgebra();
    let tensors = Tensors {
        delta: Some(enc_tensor(c.delta(), n)),
        epsilon: Some(enc(c.counit())),
        action: Some(enc_bilinear(m.action(), n, k)),
        ..Tensors::default()
    };
    let mut doc = document(
        FieldSpec::of::<S>(),
        Kind::ModuleCoalgebra,
        &[("C", n), ("B", k)],
        c.labels(),
        tensors,
    );
    if nested {
        let b = m.bialgebra();
        let hopf = modcoalg::bialgebra::antipode(b);
        doc.bialgebra = Some(Box::new(emit_bialgebra(
            b,
            hopf.as_ref().map(|h| h.antipode()),
        )));
    }
    doc
}

pub fn emit_hopf_module<S: Scalar>(m: &HopfModule<S>) -> Document {
    let (d, n, k) = (m.dim(), m.over().dim(), m.module().bialgebra().dim());
    let tensors = Tensors {
        action: Some(enc_bilinear(m.module().action(), d, k)),
        coaction: Some(enc_tensor(m.coaction(), n)),
        ..Tensors::default()
    };
    let labels: Vec<String> = (0..d).map(|i| format!("m{i}")).collect();
    let mut doc = document(
        FieldSpec::of::<S>(),
        Kind::HopfModule,
        &[("M", d), ("C", n), ("B", k)],
        &labels,
        tensors,
    );
    doc.module_coalgebra = Some(Box::new(emit_module_coalgebra(m.over(), true)));
    doc
}

pub fn emit_subspace<S: Scalar>(s: &Subspace<S>) -> Document {
    let tensors = Tensors {
        basis: Some(s.basis_vectors().iter().map(|v| enc(v)).collect()),
        ..Tensors::default()
    };
    document(
        FieldSpec::of::<S>(),
        Kind::Subspace,
        &[("ambient", s.ambient_dim()), ("dim", s.dim())],
        &[],
        tensors,
    )
}

pub fn encode_vector<S: Scalar>(v: &[S]) -> Vec<String> {
    enc(v)
}

pub fn encode_matrix<S: Scalar>(m: &Matrix<S>) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| enc(r)).collect()
}
