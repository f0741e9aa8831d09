//! The datum file: flat TOML with integer-vector literals.
//!
//! ```toml
//! group = [3, 3]
//! g = [[1, 0], [0, 1]]          # or g1 = [1, 0], g2 = [0, 1]
//! chi = [[1, 2], [0, 1]]        # or chi1 = ..., chi2 = ...
//! cartan = [[2, -1], [-1, 2]]
//! lambda = [[0, 0], [0, 0]]     # optional, must vanish
//! mu = [0, 0]                   # optional, must vanish
//! ```
//!
//! or, instead of the explicit keys,
//!
//! ```toml
//! [two_param]
//! type = "A2"
//! N = 3
//! r_exp = 1
//! s_exp = 2
//! d = [1, 1]                    # optional, defaults to the symmetrizer
//! rank = 2                      # optional, checked against the type
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::cartan::{cartan_of_type, two_param_datum, validate_datum, CartanDatum, RawDatum};
use crate::Error;

#[derive(Debug, Deserialize)]
struct DatumFile {
    group: Option<Vec<u32>>,
    g: Option<Vec<Vec<i64>>>,
    chi: Option<Vec<Vec<i64>>>,
    cartan: Option<Vec<Vec<i32>>>,
    lambda: Option<Vec<Vec<i64>>>,
    mu: Option<Vec<i64>>,
    two_param: Option<TwoParamBlock>,
    /// `g1`, `chi1`, ...
    #[serde(flatten)]
    indexed: BTreeMap<String, toml::Value>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TwoParamBlock {
    #[serde(rename = "type")]
    kind: String,
    #[serde(rename = "N", alias = "n")]
    n: u32,
    r_exp: i64,
    s_exp: i64,
    d: Option<Vec<i64>>,
    rank: Option<usize>,
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, col)
}

fn syntax_error(text: &str, e: toml::de::Error) -> Error {
    let msg = e.message().trim().to_string();
    match e.span() {
        Some(span) => {
            let (line, col) = line_col(text, span.start);
            Error::Parse(format!("line {line}, column {col}: {msg}"))
        }
        None => Error::Parse(msg),
    }
}

fn int_vector(key: &str, v: &toml::Value) -> Result<Vec<i64>, Error> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("`{key}` must be an integer array")))?;
    arr.iter()
        .map(|x| x.as_integer().ok_or_else(|| Error::Parse(format!("`{key}` must be an integer array"))))
        .collect()
}

/// Collects `prefix1, prefix2, ...` into a list; the indices must be `1..=k` without gaps.
fn indexed(keys: &BTreeMap<String, toml::Value>, prefix: &str) -> Result<Option<Vec<Vec<i64>>>, Error> {
    let mut found = BTreeMap::new();
    for (k, v) in keys {
        if let Some(idx) = k.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok()) {
            found.insert(idx, int_vector(k, v)?);
        }
    }
    if found.is_empty() {
        return Ok(None);
    }
    if found.keys().copied().ne(1..=found.len()) {
        return Err(Error::Parse(format!("`{prefix}<i>` keys must be numbered 1..{} without gaps", found.len())));
    }
    Ok(Some(found.into_values().collect()))
}

fn pick(list: Option<Vec<Vec<i64>>>, idx: Option<Vec<Vec<i64>>>, name: &str) -> Result<Vec<Vec<i64>>, Error> {
    match (list, idx) {
        (Some(_), Some(_)) => Err(Error::Parse(format!("both `{name}` and `{name}<i>` given"))),
        (Some(v), None) | (None, Some(v)) => Ok(v),
        (None, None) => Ok(Vec::new()),
    }
}

/// Parses and validates a datum from its text.
pub fn parse_datum_text(text: &str) -> Result<CartanDatum, Error> {
    let file: DatumFile = toml::from_str(text).map_err(|e| syntax_error(text, e))?;
    for k in file.indexed.keys() {
        let known = ["g", "chi"]
            .iter()
            .any(|p| k.strip_prefix(p).is_some_and(|s| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())));
        if !known {
            return Err(Error::Parse(format!("unknown key `{k}`")));
        }
    }
    let g_idx = indexed(&file.indexed, "g")?;
    let chi_idx = indexed(&file.indexed, "chi")?;

    if let Some(tp) = file.two_param {
        if file.group.is_some() || file.g.is_some() || file.chi.is_some() || file.cartan.is_some() || g_idx.is_some() || chi_idx.is_some() {
            return Err(Error::Parse("[two_param] replaces group, g, chi and cartan; give one or the other".into()));
        }
        let cartan = cartan_of_type(&tp.kind).ok_or_else(|| Error::Parse(format!("unknown Cartan type `{}`", tp.kind)))?;
        if let Some(r) = tp.rank {
            if r != cartan.rank() {
                return Err(Error::Parse(format!("type {} has rank {}, not {r}", tp.kind, cartan.rank())));
            }
        }
        let d = match tp.d {
            Some(d) => d,
            None => cartan.symmetrizer()?,
        };
        return Ok(two_param_datum(&cartan, &d, tp.n, tp.r_exp, tp.s_exp)?);
    }

    let raw = RawDatum {
        group: file.group.ok_or_else(|| Error::Parse("missing key `group`".into()))?,
        g: pick(file.g, g_idx, "g")?,
        chi: pick(file.chi, chi_idx, "chi")?,
        cartan: file.cartan.unwrap_or_default(),
        lambda: file.lambda,
        mu: file.mu,
    };
    Ok(validate_datum(&raw)?)
}

pub fn parse_datum(path: &Path) -> Result<CartanDatum, Error> {
    let text = std::fs::read_to_string(path)?;
    parse_datum_text(&text)
}
