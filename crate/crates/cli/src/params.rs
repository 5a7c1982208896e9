//! Parameter files for `example two-dim`.
//!
//! ```json
//! { "semigroup": "C2", "c": [[1, 2], [2, 4]], "r": [1, 2], "l": ["1", "1/2"] }
//! ```
//!
//! `semigroup` is a shipped name (T, C2, C3, S2, L2, N2, R2) or an inline
//! table `{ "name", "elements", "table": [[label, ...], ...], "commutative" }`.
//! Omitted scalars default to one.

use std::sync::Arc;

use bihomega_core::forge::{semigroups, TwoDimExampleParams};
use bihomega_core::linalg::{parse_rational, Rational};
use bihomega_core::semigroup::SemigroupTable;
use serde::Deserialize;

#[derive(Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InlineTable {
    name: String,
    elements: Vec<String>,
    table: Vec<Vec<String>>,
    #[serde(default)]
    commutative: bool,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SemigroupSpec {
    Builtin(String),
    Inline(InlineTable),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsFile {
    semigroup: SemigroupSpec,
    c: Option<Vec<Vec<Scalar>>>,
    r: Option<Vec<Scalar>>,
    l: Option<Vec<Scalar>>,
}

fn scalar(s: &Scalar) -> Result<Rational, String> {
    match s {
        Scalar::Int(i) => Ok(Rational::from_integer((*i).into())),
        Scalar::Text(t) => parse_rational(t).ok_or_else(|| format!("`{t}` is not a rational number")),
    }
}

fn builtin(name: &str) -> Option<Arc<SemigroupTable>> {
    Some(match name {
        "T" => semigroups::trivial(),
        "C2" => semigroups::c2(),
        "C3" => semigroups::c3(),
        "S2" => semigroups::chain2(),
        "L2" => semigroups::left_zero2(),
        "N2" => semigroups::null2(),
        "R2" => semigroups::right_zero2(),
        _ => return None,
    })
}

fn inline(t: InlineTable) -> Result<Arc<SemigroupTable>, String> {
    let n = t.elements.len();
    if t.table.len() != n || t.table.iter().any(|r| r.len() != n) {
        return Err(format!("table of `{}` must be {n}x{n}", t.name));
    }
    let mut flat = Vec::with_capacity(n * n);
    for row in &t.table {
        for cell in row {
            match t.elements.iter().position(|e| e == cell) {
                Some(i) => flat.push(i),
                None => return Err(format!("`{cell}` is not an element of `{}`", t.name)),
            }
        }
    }
    SemigroupTable::new(t.name, t.elements, flat, t.commutative)
        .map(Arc::new)
        .map_err(|e| e.to_string())
}

pub fn parse(text: &str) -> Result<TwoDimExampleParams, String> {
    let file: ParamsFile = serde_json::from_str(text).map_err(|e| format!("invalid parameter file: {e}"))?;
    let omega = match file.semigroup {
        SemigroupSpec::Builtin(name) => builtin(&name).ok_or_else(|| format!("unknown semigroup `{name}`"))?,
        SemigroupSpec::Inline(t) => inline(t)?,
    };
    let n = omega.order();
    let mut params = TwoDimExampleParams::ones(omega);
    if let Some(rows) = file.c {
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(format!("`c` must be {n}x{n}"));
        }
        params.c = rows.iter().flatten().map(scalar).collect::<Result<_, _>>()?;
    }
    for (key, src, dst) in [("r", file.r, &mut params.rthree), ("l", file.l, &mut params.lthree)] {
        if let Some(v) = src {
            if v.len() != n {
                return Err(format!("`{key}` must have {n} entries"));
            }
            *dst = v.iter().map(scalar).collect::<Result<_, _>>()?;
        }
    }
    Ok(params)
}
