use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use modcoalg::engine::{Certificate, MembershipVerdict};
use modcoalg::linalg::{LinearMap, Subspace};
use modcoalg::Scalar;

use crate::interchange::{encode_matrix, encode_vector};

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn subspace<S: Scalar>(s: &Subspace<S>) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis_vectors().iter().map(|v| encode_vector(v)).collect::<Vec<_>>(),
    })
}

pub fn vector<S: Scalar>(v: &[S]) -> Value {
    json!(encode_vector(v))
}

pub fn map<S: Scalar>(f: &LinearMap<S>) -> Value {
    json!({
        "domain": f.domain_dim(),
        "codomain": f.codomain_dim(),
        "matrix": encode_matrix(f.matrix()),
    })
}

pub fn certificate<S: Scalar>(c: &Certificate<S>) -> Value {
    match c {
        Certificate::Doi { psi } => json!({ "type": "doi", "psi": map(psi) }),
        Certificate::Cointegral { gamma, gamma_inv } => {
            json!({ "type": "cointegral", "gamma": map(gamma), "gamma_inv": map(gamma_inv) })
        }
        Certificate::Coradical { coradical } => {
            json!({ "type": "coradical", "coradical": subspace(coradical) })
        }
    }
}

pub fn verdict<S: Scalar>(v: &MembershipVerdict<S>) -> Value {
    let mut out = Map::new();
    out.insert("verdict".into(), json!(v.verdict.name()));
    out.insert(
        "certificate".into(),
        v.certificate.as_ref().map_or(Value::Null, certificate),
    );
    out.insert("witness".into(), json!(v.witness));
    out.insert("trials".into(), json!(v.trials));
    out.insert("seed".into(), json!(v.seed));
    out.insert("stream".into(), json!(v.stream));
    Value::Object(out)
}

/// `key: value` lines; nested objects use dotted keys.
pub fn render_text(value: &Value) -> String {
    let mut out = String::new();
    walk(value, "", &mut out);
    out
}

fn walk(value: &Value, prefix: &str, out: &mut String) {
    match value {
        Value::Object(m) => {
            for (k, v) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                walk(v, &key, out);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object()) => {
            for (i, v) in items.iter().enumerate() {
                walk(v, &format!("{prefix}[{i}]"), out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rendering_flattens() {
        let v = json!({"a": {"b": 1, "c": [1, 2]}, "d": [{"e": "x"}]});
        assert_eq!(render_text(&v), "a.b: 1\na.c: [1,2]\nd[0].e: x\n");
    }

    #[test]
    fn digests_are_hex_sha256() {
        assert_eq!(digest(b"").len(), 64);
        assert!(digest(b"abc").starts_with("ba7816bf"));
    }
}
