//! JSON forms of labels, elements, modules and weight tables.

use mirabolic_core::decorated::{DecoratedMatrix, Label2};
use mirabolic_core::field::RationalFunction as Rf;
use mirabolic_core::pbw::{PbwClass, PbwElement};
use mirabolic_core::rep::{Matrix, ModuleSpec, Sign, Weight, WeightTable};
use mirabolic_core::schur::SchurElement;
use serde_json::{json, Value};

use crate::CliError;

pub fn coeff(c: &Rf) -> Value {
    Value::String(c.to_string())
}

pub fn label(l: &Label2) -> Value {
    let m = l.to_matrix();
    let delta: Vec<Value> = m.delta().iter().map(|&(i, j)| json!([i, j])).collect();
    json!({ "A": m.matrix_rows(), "delta": delta })
}

pub fn element(x: &SchurElement) -> Value {
    let terms: Vec<Value> = x.terms().map(|(l, c)| json!({ "label": label(l), "coeff": coeff(c) })).collect();
    json!({ "d": x.d(), "terms": terms })
}

fn class_name(c: PbwClass) -> &'static str {
    ["B0", "B1", "B2", "B3", "B4", "B5"][c.index()]
}

pub fn pbw(x: &PbwElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(m, c)| {
            json!({
                "class": class_name(m.class),
                "r": m.r,
                "s": m.s,
                "t": m.t,
                "monomial": m.to_string(),
                "coeff": coeff(c),
            })
        })
        .collect();
    json!({ "terms": terms })
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array(m.rows().iter().map(|row| Value::Array(row.iter().map(coeff).collect())).collect())
}

fn sign_str(s: Sign) -> String {
    s.symbol().to_string()
}

pub fn weight_rows(t: &WeightTable) -> Value {
    Value::Array(
        t.iter()
            .map(|(w, m)| json!({ "sign": sign_str(w.sign), "a": w.a, "eps": w.eps, "mult": m }))
            .collect(),
    )
}

pub fn weight_csv(t: &WeightTable) -> String {
    let mut out = String::from("sign,a,eps,mult\n");
    for (w, m) in t.iter() {
        out.push_str(&format!("{},{},{},{}\n", sign_str(w.sign), w.a, w.eps, m));
    }
    out
}

pub fn decomposition(parts: &[(ModuleSpec, u64)]) -> Value {
    Value::Array(parts.iter().map(|(s, m)| json!({ "module": s.to_string(), "dim": s.dim(), "mult": m })).collect())
}

fn bad(what: &str) -> CliError {
    CliError::Usage(format!("malformed {what} JSON"))
}

fn as_u64(v: &Value, what: &str) -> Result<u64, CliError> {
    v.as_u64().ok_or_else(|| bad(what))
}

pub fn parse_label(v: &Value) -> Result<Label2, CliError> {
    let rows = v.get("A").and_then(Value::as_array).ok_or_else(|| bad("label"))?;
    let a = rows
        .iter()
        .map(|r| r.as_array().ok_or_else(|| bad("label"))?.iter().map(|x| as_u64(x, "label")).collect())
        .collect::<Result<Vec<Vec<u64>>, CliError>>()?;
    let delta = match v.get("delta") {
        None => Vec::new(),
        Some(d) => d
            .as_array()
            .ok_or_else(|| bad("label"))?
            .iter()
            .map(|p| match p.as_array().map(Vec::as_slice) {
                Some([i, j]) => Ok((as_u64(i, "label")? as usize, as_u64(j, "label")? as usize)),
                _ => Err(bad("label")),
            })
            .collect::<Result<Vec<_>, CliError>>()?,
    };
    let m = DecoratedMatrix::from_rows(&a, delta).map_err(|e| CliError::Usage(format!("invalid label: {e}")))?;
    Label2::from_matrix(&m).map_err(|e| CliError::Usage(format!("invalid label: {e}")))
}

pub fn parse_element(v: &Value) -> Result<SchurElement, CliError> {
    let d = as_u64(v.get("d").ok_or_else(|| bad("element"))?, "element")? as u32;
    let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("element"))?;
    let mut out = SchurElement::zero(d);
    for t in terms {
        let l = parse_label(t.get("label").ok_or_else(|| bad("element"))?)?;
        if l.d() != d {
            return Err(CliError::Usage(format!("label {l} does not lie in degree {d}")));
        }
        let c = match t.get("coeff") {
            None => Rf::one(),
            Some(Value::String(s)) => s.parse().map_err(|e| CliError::Usage(format!("bad coefficient {s:?}: {e}")))?,
            Some(Value::Number(n)) => n.to_string().parse().map_err(|_| bad("element"))?,
            Some(_) => return Err(bad("element")),
        };
        out.add_term(l, c);
    }
    Ok(out)
}

pub fn parse_weight_rows(v: &Value) -> Result<WeightTable, CliError> {
    let rows = v.as_array().ok_or_else(|| bad("weight table"))?;
    let mut t = WeightTable::new();
    for r in rows {
        let sign = match r.get("sign").and_then(Value::as_str) {
            Some("+") => Sign::Plus,
            Some("-") => Sign::Minus,
            _ => return Err(bad("weight table")),
        };
        let a = r.get("a").and_then(Value::as_i64).ok_or_else(|| bad("weight table"))?;
        let eps = match r.get("eps").and_then(Value::as_u64) {
            Some(e @ (0 | 1)) => e as u8,
            _ => return Err(bad("weight table")),
        };
        let mult = as_u64(r.get("mult").ok_or_else(|| bad("weight table"))?, "weight table")?;
        t.add(Weight { sign, a, eps }, mult);
    }
    Ok(t)
}
