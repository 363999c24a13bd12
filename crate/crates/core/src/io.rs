//! The two JSON formats: algebra files and split reports.
//!
//! Scalars travel as strings (`"3"`, `"-1/2"`, residues as `"0".."p-1"`),
//! subspaces as the rows of their reduced row echelon basis. Emission is
//! canonical: sorted keys, sorted `mul` entries, zero entries omitted, two
//! space indentation and a trailing newline.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{Algebra, Element, Side, SidedIdeal};
use crate::arith::{FieldSpec, Scalar, Subspace};
use crate::error::{Error, Result};
use crate::splitting::SplitReport;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const REPORT_FORMAT: &str = "malcev-report/1";

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Canonical text of any serializable value: sorted keys, two-space
/// indent, scalar arrays on one line, trailing newline.
pub fn emit_json<T: Serialize>(value: &T) -> String {
    // round-trip through Value so that object keys come out sorted
    let v = serde_json::to_value(value).expect("serializable");
    let mut out = String::new();
    write_value(&v, 0, &mut out);
    out.push('\n');
    out
}

/// Pretty printing with arrays of scalars kept on one line, so that
/// vectors and `mul` entries read as rows.
fn write_value(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, val)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(val, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealEntry {
    pub name: String,
    pub side: Side,
    pub generators: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    /// `[i, j, k, c]` meaning `c_{ij}^k = c`.
    pub mul: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub ideals: Vec<IdealEntry>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: AlgebraFile = parse_json(text)?;
        file.check()?;
        Ok(file)
    }

    fn check(&self) -> Result<()> {
        let n = self.dim;
        let mut seen = BTreeSet::new();
        for (pos, (i, j, k, c)) in self.mul.iter().enumerate() {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::Format(format!(
                    "mul[{pos}]: index ({i}, {j}, {k}) out of range for dim {n}"
                )));
            }
            if !seen.insert((*i, *j, *k)) {
                return Err(Error::Format(format!("mul[{pos}]: duplicate entry ({i}, {j}, {k})")));
            }
            self.field
                .parse(c)
                .map_err(|e| Error::Format(format!("mul[{pos}]: {e}")))?;
        }
        if let Some(names) = &self.basis_names {
            if names.len() != n {
                return Err(Error::Format(format!(
                    "basis_names has {} entries, expected {n}",
                    names.len()
                )));
            }
        }
        let mut names = BTreeSet::new();
        for ideal in &self.ideals {
            if !names.insert(ideal.name.as_str()) {
                return Err(Error::Format(format!("duplicate ideal name {:?}", ideal.name)));
            }
            for g in &ideal.generators {
                parse_vector(self.field, n, g)
                    .map_err(|e| Error::Format(format!("ideal {:?}: {e}", ideal.name)))?;
            }
        }
        Ok(())
    }

    pub fn emit(&self) -> String {
        let mut sorted = self.clone();
        sorted.mul.sort_by_key(|&(i, j, k, _)| (i, j, k));
        emit_json(&sorted)
    }

    /// The algebra without the associativity check.
    pub fn unvalidated_algebra(&self) -> Result<Algebra> {
        self.check()?;
        let n = self.dim;
        let mut tensor = vec![self.field.zero(); n * n * n];
        for (i, j, k, c) in &self.mul {
            tensor[(i * n + j) * n + k] = self.field.parse(c)?;
        }
        let a = Algebra::unvalidated(self.field, n, tensor)?;
        Ok(match &self.basis_names {
            Some(names) => a.with_basis_names(names.clone()),
            None => a,
        })
    }

    /// The algebra, rejected with a witness triple if not associative.
    pub fn algebra(&self) -> Result<Algebra> {
        let a = self.unvalidated_algebra()?;
        Algebra::new(a.field(), a.dim(), a.tensor().to_vec()).map(|v| match a.basis_names() {
            Some(names) => v.with_basis_names(names.to_vec()),
            None => v,
        })
    }

    /// Canonical encoding of an algebra.
    pub fn from_algebra(algebra: &Algebra) -> Self {
        let n = algebra.dim();
        let mut mul = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in algebra.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        mul.push((i, j, k, c.to_string()));
                    }
                }
            }
        }
        AlgebraFile {
            field: algebra.field(),
            dim: n,
            mul,
            basis_names: algebra.basis_names().map(<[String]>::to_vec),
            ideals: Vec::new(),
        }
    }

    pub fn ideal_entry(&self, name: &str) -> Option<&IdealEntry> {
        self.ideals.iter().find(|i| i.name == name)
    }
}

/// Parses one coordinate vector of length `dim`.
pub fn parse_vector(field: FieldSpec, dim: usize, entries: &[String]) -> Result<Vec<Scalar>> {
    if entries.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: entries.len(),
        });
    }
    entries.iter().map(|s| field.parse(s.trim())).collect()
}

/// Generators written as `1,0,0;0,1,0`.
pub fn parse_generator_list(field: FieldSpec, dim: usize, text: &str) -> Result<Vec<Element>> {
    text.split(';')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            let entries: Vec<String> = part.split(',').map(|s| s.trim().to_string()).collect();
            parse_vector(field, dim, &entries).map(Element::new)
        })
        .collect()
}

/// The ideal of the given side generated by `generators`.
pub fn ideal_from_generators(algebra: &Algebra, side: Side, generators: &[Element]) -> SidedIdeal {
    algebra.ideal_generated(side, generators)
}

impl IdealEntry {
    pub fn build(&self, algebra: &Algebra) -> Result<SidedIdeal> {
        let gens = self
            .generators
            .iter()
            .map(|g| parse_vector(algebra.field(), algebra.dim(), g).map(Element::new))
            .collect::<Result<Vec<_>>>()?;
        Ok(ideal_from_generators(algebra, self.side, &gens))
    }
}

/// SHA-256 of the canonical compact encoding of the structure constants.
pub fn algebra_id(algebra: &Algebra) -> String {
    let mut file = AlgebraFile::from_algebra(algebra);
    file.basis_names = None;
    sha256_hex(serde_json::to_string(&file).expect("serializable").as_bytes())
}

/// Hash of everything a split depends on: algebra, side and ideal.
pub fn input_hash(algebra: &Algebra, side: Side, ideal: &Subspace) -> String {
    let payload = serde_json::json!({
        "algebra": algebra_id(algebra),
        "side": side,
        "ideal": subspace_rows(ideal),
    });
    sha256_hex(payload.to_string().as_bytes())
}

pub fn vector_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

pub fn subspace_rows(space: &Subspace) -> Vec<Vec<String>> {
    space.basis_vectors().map(vector_strings).collect()
}

pub fn subspace_from_rows(field: FieldSpec, dim: usize, rows: &[Vec<String>]) -> Result<Subspace> {
    let vectors = rows
        .iter()
        .map(|r| parse_vector(field, dim, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(field, dim, vectors))
}

/// On-disk form of a [`SplitReport`]. Field order is alphabetical so that
/// the struct and the sorted-key emission agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub algebra_id: String,
    pub checks: BTreeMap<String, bool>,
    pub dim: usize,
    pub e: Vec<String>,
    pub field: FieldSpec,
    pub format: String,
    pub i_r: Vec<Vec<String>>,
    pub i_s: Vec<Vec<String>>,
    pub ideal: Vec<Vec<String>>,
    pub input_hash: String,
    pub j: Vec<Vec<String>>,
    pub radical: Vec<Vec<String>>,
    pub s: Vec<Vec<String>>,
    pub side: Side,
    pub tool_version: String,
}

impl ReportFile {
    pub fn from_report(algebra: &Algebra, report: &SplitReport) -> Self {
        ReportFile {
            algebra_id: report.algebra_id.clone(),
            checks: report.checks.clone(),
            dim: algebra.dim(),
            e: vector_strings(report.e.coords()),
            field: algebra.field(),
            format: REPORT_FORMAT.to_string(),
            i_r: subspace_rows(&report.i_r),
            i_s: subspace_rows(&report.i_s),
            ideal: subspace_rows(&report.ideal),
            input_hash: input_hash(algebra, report.side, &report.ideal),
            j: subspace_rows(&report.j),
            radical: subspace_rows(&report.radical),
            s: subspace_rows(&report.s),
            side: report.side,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: ReportFile = parse_json(text)?;
        if file.format != REPORT_FORMAT {
            return Err(Error::Format(format!("unknown report format {:?}", file.format)));
        }
        Ok(file)
    }

    pub fn emit(&self) -> String {
        emit_json(self)
    }

    pub fn to_report(&self) -> Result<SplitReport> {
        let (f, n) = (self.field, self.dim);
        let sub = |rows: &[Vec<String>]| subspace_from_rows(f, n, rows);
        Ok(SplitReport {
            algebra_id: self.algebra_id.clone(),
            side: self.side,
            ideal: sub(&self.ideal)?,
            radical: sub(&self.radical)?,
            s: sub(&self.s)?,
            e: Element::new(parse_vector(f, n, &self.e)?),
            j: sub(&self.j)?,
            i_s: sub(&self.i_s)?,
            i_r: sub(&self.i_r)?,
            checks: self.checks.clone(),
        })
    }
}
