//! Function files: JSON documents describing an (n,m)-function.
//!
//! ```json
//! {"n": 3, "m": 1, "repr": "tt", "data": "e8", "field": {"n": 3, "poly_bits": "b", "alpha_bits": "2"}}
//! ```
//!
//! * `tt`: for `m = 1` a hex truth table (bit `x` = `f(x)`); for `m > 1` a
//!   list of `2^n` hex output values.
//! * `anf`: for `m = 1` a hex ANF vector (bit `u` = coefficient of `x^u`);
//!   for `m > 1` a list of `m` such strings, one per coordinate.
//! * `uni`: a list of at most `2^n` hex field elements, coefficient `i`
//!   first; the values must lie in GF(2^m).
//!
//! `field` is optional and defaults to the built-in table.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{make_field, Field, FieldElement, FieldSpec};
use crate::funcrep::{bits_to_hex, hex_to_bits, tt_from_anf, BooleanFunction, VectorialFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Repr {
    Tt,
    Anf,
    Uni,
}

/// The on-disk form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FunctionFile {
    pub n: u32,
    pub m: u32,
    pub repr: Repr,
    pub data: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
}

fn hex_str<'a>(v: &'a Value, at: &str) -> Result<&'a str> {
    v.as_str()
        .ok_or_else(|| Error::parse(at, "expected a hex string"))
}

fn hex_list<'a>(v: &'a Value, len: Option<usize>, at: &str) -> Result<Vec<&'a str>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::parse(at, "expected a list of hex strings"))?;
    if let Some(l) = len {
        if arr.len() != l {
            return Err(Error::parse(at, format!("expected {l} entries, found {}", arr.len())));
        }
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| hex_str(x, &format!("{at}[{i}]")))
        .collect()
}

fn parse_value(s: &str, bits: u32, at: &str) -> Result<u16> {
    let v = u32::from_str_radix(s.trim(), 16).map_err(|e| Error::parse(at, e.to_string()))?;
    if v >> bits != 0 {
        return Err(Error::parse(at, format!("value {s} exceeds {bits} bits")));
    }
    Ok(v as u16)
}

impl FunctionFile {
    pub fn from_json(text: &str) -> Result<FunctionFile> {
        serde_json::from_str(text).map_err(|e| {
            Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string())
        })
    }

    pub fn read(path: &Path) -> Result<FunctionFile> {
        FunctionFile::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("function files serialize")
    }

    pub fn field(&self) -> Result<Field> {
        match &self.field {
            Some(spec) => {
                if spec.n != self.n {
                    return Err(Error::parse("field.n", format!("{} differs from n = {}", spec.n, self.n)));
                }
                spec.to_field()
            }
            None => make_field(self.n),
        }
    }

    /// Decodes into a vectorial function (a Boolean function has `m = 1`).
    pub fn to_function(&self) -> Result<VectorialFunction> {
        let field = self.field()?;
        let n = self.n;
        let m = self.m;
        if m == 0 || m > 16 {
            return Err(Error::parse("m", format!("output width {m} outside 1..=16")));
        }
        let size = 1usize << n;
        match (self.repr, m) {
            (Repr::Tt, 1) => {
                let bits = hex_to_bits(n, hex_str(&self.data, "data")?)?;
                VectorialFunction::new(field, 1, bits.iter().map(|&b| b as u16).collect())
            }
            (Repr::Tt, _) => {
                let table = hex_list(&self.data, Some(size), "data")?
                    .iter()
                    .enumerate()
                    .map(|(i, s)| parse_value(s, m, &format!("data[{i}]")))
                    .collect::<Result<Vec<u16>>>()?;
                VectorialFunction::new(field, m, table)
            }
            (Repr::Anf, 1) => {
                let f = BooleanFunction::from_anf(hex_to_bits(n, hex_str(&self.data, "data")?)?)?;
                VectorialFunction::from_boolean(field, &f)
            }
            (Repr::Anf, _) => {
                let coords = hex_list(&self.data, Some(m as usize), "data")?
                    .iter()
                    .map(|s| tt_from_anf(&hex_to_bits(n, s)?))
                    .collect::<Result<Vec<Vec<u8>>>>()?;
                VectorialFunction::from_fn(field, m, |x| {
                    coords
                        .iter()
                        .enumerate()
                        .fold(0u16, |acc, (i, c)| acc | ((c[x] as u16) << i))
                })
            }
            (Repr::Uni, _) => {
                let coeffs = hex_list(&self.data, None, "data")?
                    .iter()
                    .enumerate()
                    .map(|(i, s)| parse_value(s, n, &format!("data[{i}]")).map(FieldElement))
                    .collect::<Result<Vec<FieldElement>>>()?;
                VectorialFunction::from_univariate(field, m, &coeffs)
            }
        }
    }

    /// Encodes a function in the requested representation. The field spec is
    /// always written out.
    pub fn from_function(f: &VectorialFunction, repr: Repr) -> Result<FunctionFile> {
        let data = match (repr, f.m()) {
            (Repr::Tt, 1) => Value::String(f.coordinate(0).to_hex()),
            (Repr::Tt, _) => Value::Array(f.table_hex().into_iter().map(Value::String).collect()),
            (Repr::Anf, 1) => Value::String(bits_to_hex(f.coordinate(0).anf())),
            (Repr::Anf, _) => Value::Array(
                f.coordinates()
                    .iter()
                    .map(|c| Value::String(bits_to_hex(c.anf())))
                    .collect(),
            ),
            (Repr::Uni, _) => Value::Array(
                f.univariate()?
                    .iter()
                    .map(|c| Value::String(format!("{:x}", c.0)))
                    .collect(),
            ),
        };
        Ok(FunctionFile {
            n: f.n(),
            m: f.m(),
            repr,
            data,
            field: Some(f.field().spec()),
        })
    }
}

/// Reads and decodes a function file.
pub fn read_function(path: &Path) -> Result<VectorialFunction> {
    FunctionFile::read(path)?.to_function()
}
