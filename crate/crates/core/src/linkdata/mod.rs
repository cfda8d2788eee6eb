//! The link-record data model: invariant dossiers for links, their on-disk
//! JSON format, validation, and derived data.
//!
//! A [`LinkRecord`] collects everything the bound rules consume. All
//! invariant data beyond the linking matrix is optional; each rule degrades
//! to an "unavailable" result when its inputs are missing.

mod matrix;
mod parse;
mod validate;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

pub use matrix::IntMatrix;
pub use parse::{
    parse_link_record, parse_link_record_lenient, serialize_record, ParseError,
};
pub use validate::{validate_record, Violation};

use crate::jfloer::JTable;

/// One link's full invariant dossier.
#[derive(Debug, Clone, PartialEq)]
pub struct LinkRecord {
    pub name: String,
    /// Number of components.
    pub ell: usize,
    /// Symmetric integer matrix with `lk(K_i, K_j)` off the diagonal and
    /// zeros on it.
    pub linking_matrix: IntMatrix,
    /// Diagram-derived upper bound on `wsp(L)`, when known.
    pub upper_bound: Option<i64>,
    /// Component-index subsets flagged non-split by the data source.
    pub nonsplit_sublinks: Vec<BTreeSet<usize>>,
    /// The splitting number `sp(L)` (mixed crossing changes only), when known.
    pub splitting_number: Option<i64>,
    /// Whether the link is link-homotopic to an unlink, when known.
    pub nullhomotopic: Option<bool>,
    pub ccomplex: Option<CComplexData>,
    /// Whether the multivariable Alexander polynomial is nonzero, when known.
    pub alexander_nonzero: Option<bool>,
    pub slice_torus: Option<SliceTorus>,
    /// Per-component data; always exactly `ell` entries.
    pub components_data: Vec<KnotRecord>,
    pub j_table: Option<JTable>,
}

impl LinkRecord {
    /// Sum of `|lk(K_i, K_j)|` over pairs `i < j`.
    pub fn linking_abs_sum(&self) -> i64 {
        let m = &self.linking_matrix;
        let mut s = 0;
        for i in 0..m.dim() {
            for j in (i + 1)..m.dim() {
                s += m.get(i, j).abs();
            }
        }
        s
    }

    /// Signed sum of `lk(K_i, K_j)` over pairs `i < j`.
    pub fn linking_sum(&self) -> i64 {
        let m = &self.linking_matrix;
        let mut s = 0;
        for i in 0..m.dim() {
            for j in (i + 1)..m.dim() {
                s += m.get(i, j);
            }
        }
        s
    }

    /// Pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.ell {
            for j in (i + 1)..self.ell {
                out.push((i, j));
            }
        }
        out
    }

    /// True when the linking submatrix on `indices` vanishes identically.
    pub fn zero_linking_on(&self, indices: &BTreeSet<usize>) -> bool {
        indices.iter().all(|&i| {
            indices
                .iter()
                .all(|&j| i == j || self.linking_matrix.get(i, j) == 0)
        })
    }
}

/// Per-component knot data.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotRecord {
    pub name: String,
    /// Seifert matrix of the component, when known. The unknot is the empty
    /// `0x0` matrix.
    pub seifert: Option<IntMatrix>,
    /// Slice-torus value of the component, when known.
    pub nu: Option<Rational64>,
    /// The invariant `nu^+(K)`: minimal `m >= 0` with `J_K(m) = 0`.
    pub nu_plus: Option<u64>,
}

impl KnotRecord {
    pub fn unknot() -> Self {
        KnotRecord {
            name: "unknot".to_owned(),
            seifert: Some(IntMatrix::empty()),
            nu: Some(Rational64::from_integer(0)),
            nu_plus: Some(0),
        }
    }

    /// A component about which nothing is known.
    pub fn unknown(name: &str) -> Self {
        KnotRecord {
            name: name.to_owned(),
            seifert: None,
            nu: None,
            nu_plus: None,
        }
    }
}

/// Slice-torus data for the whole link.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceTorus {
    pub nu_l: Rational64,
    /// Classical signature for non-split alternating links, when recorded;
    /// relates to `nu_l` by `nu = (-sigma + ell - 1) / 2`.
    pub alternating_sigma: Option<i64>,
}

/// A sign vector `epsilon` in `{+, -}^ell`, used to key generalized Seifert
/// matrices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(pub Vec<bool>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> SignVector {
        SignVector(self.0.iter().map(|s| !s).collect())
    }

    /// All `2^ell` sign vectors, those starting with `+` first.
    pub fn all(ell: usize) -> Vec<SignVector> {
        let mut out = Vec::with_capacity(1 << ell);
        for bits in 0..(1u32 << ell) {
            out.push(SignVector(
                (0..ell).map(|i| bits & (1 << i) == 0).collect(),
            ));
        }
        out.sort();
        out.reverse(); // '+' (true) keys first
        out
    }

    pub fn parse(s: &str) -> Option<SignVector> {
        let mut v = Vec::new();
        for ch in s.chars() {
            match ch {
                '+' => v.push(true),
                '-' | '\u{2212}' => v.push(false),
                _ => return None,
            }
        }
        Some(SignVector(v))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            write!(f, "{}", if s { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// C-complex data: `beta_0` of the complex, plus the generalized Seifert
/// matrices indexed by sign vectors with first entry `+`. The other half of
/// the family is derived via `A^{-eps} = (A^eps)^T`.
#[derive(Debug, Clone, PartialEq)]
pub struct CComplexData {
    pub beta0: u32,
    pub rank: usize,
    pub matrices: BTreeMap<SignVector, IntMatrix>,
}

impl CComplexData {
    pub fn ell(&self) -> Option<usize> {
        self.matrices.keys().next().map(|k| k.len())
    }
}

/// Returns the full family `{A^eps}` over all `2^ell` sign vectors: stored
/// matrices where `eps_1 = +`, transposes for the rest.
pub fn complete_ccomplex(c: &CComplexData) -> BTreeMap<SignVector, IntMatrix> {
    let mut out = BTreeMap::new();
    for (eps, a) in &c.matrices {
        out.insert(eps.clone(), a.clone());
        out.insert(eps.negated(), a.transpose());
    }
    out
}

/// A point of the torus `(S^1 \ {1})^ell`, encoded as fractions of a full
/// turn: component `i` is `omega_i = exp(2 pi i p_i/q_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusPoint {
    turns: Vec<Rational64>,
}

/// Error building or parsing a [`TorusPoint`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorusPointError {
    #[error("fraction `{0}` is not strictly between 0 and 1")]
    OutOfRange(String),
    #[error("malformed fraction `{0}`: expected `p/q`")]
    Malformed(String),
}

impl TorusPoint {
    pub fn new(turns: Vec<Rational64>) -> Result<Self, TorusPointError> {
        for t in &turns {
            if *t <= Rational64::from_integer(0) || *t >= Rational64::from_integer(1) {
                return Err(TorusPointError::OutOfRange(t.to_string()));
            }
        }
        Ok(TorusPoint { turns })
    }

    /// The diagonal point `(omega, ..., omega)` with `ell` copies.
    pub fn diagonal(turn: Rational64, ell: usize) -> Result<Self, TorusPointError> {
        TorusPoint::new(vec![turn; ell])
    }

    /// Parses a comma-separated list of `p/q` fractions.
    pub fn parse(s: &str) -> Result<Self, TorusPointError> {
        let mut turns = Vec::new();
        for part in s.split(',') {
            turns.push(parse_rational(part.trim()).ok_or_else(|| {
                TorusPointError::Malformed(part.trim().to_owned())
            })?);
        }
        TorusPoint::new(turns)
    }

    pub fn turns(&self) -> &[Rational64] {
        &self.turns
    }

    pub fn len(&self) -> usize {
        self.turns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.turns.is_empty()
    }

    /// The entrywise conjugate point (each turn `t` replaced by `1 - t`).
    pub fn conjugate(&self) -> TorusPoint {
        TorusPoint {
            turns: self
                .turns
                .iter()
                .map(|t| Rational64::from_integer(1) - t)
                .collect(),
        }
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.turns.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses `p/q` or a bare integer `p`.
pub(crate) fn parse_rational(s: &str) -> Option<Rational64> {
    if let Some((num, den)) = s.split_once('/') {
        let p: i64 = num.trim().parse().ok()?;
        let q: i64 = den.trim().parse().ok()?;
        if q == 0 {
            return None;
        }
        Some(Rational64::new(p, q))
    } else {
        let p: i64 = s.trim().parse().ok()?;
        Some(Rational64::from_integer(p))
    }
}

pub(crate) fn format_rational(r: &Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Result of loading a corpus directory: parsed records plus per-file
/// failures. A corrupt file never aborts the batch.
#[derive(Debug)]
pub struct CorpusLoad {
    pub records: Vec<LinkRecord>,
    pub failures: Vec<(PathBuf, ParseError)>,
}

/// Loads every `*.json` record under `path`, sorted by record name.
pub fn load_corpus(path: &Path) -> std::io::Result<CorpusLoad> {
    let mut records = Vec::new();
    let mut failures = Vec::new();
    let mut files: Vec<PathBuf> = std::fs::read_dir(path)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    for file in files {
        let text = match std::fs::read_to_string(&file) {
            Ok(t) => t,
            Err(e) => {
                failures.push((file, ParseError::Io(e.to_string())));
                continue;
            }
        };
        match parse_link_record(&text) {
            Ok(r) => records.push(r),
            Err(e) => failures.push((file, e)),
        }
    }
    records.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(CorpusLoad { records, failures })
}

/// Serialization helper for rationals in the JSON record format.
pub(crate) mod rational_string {
    use super::*;

    pub fn serialize<S: serde::Serializer>(
        r: &Rational64,
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(
        de: D,
    ) -> Result<Rational64, D::Error> {
        let s = String::deserialize(de)?;
        parse_rational(&s)
            .ok_or_else(|| serde::de::Error::custom(format!("malformed rational `{s}`")))
    }
}

/// Serialization wrapper so reports can carry exact rationals as `p/q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalValue(pub Rational64);

impl Serialize for RationalValue {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.0.to_string())
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_vector_roundtrip() {
        let v = SignVector::parse("+-+").unwrap();
        assert_eq!(v.to_string(), "+-+");
        assert_eq!(v.negated().to_string(), "-+-");
        assert_eq!(SignVector::all(2).len(), 4);
        assert!(SignVector::all(3)[0].0.iter().all(|&s| s));
    }

    #[test]
    fn complete_ccomplex_transpose_rule() {
        // ell = 1, trefoil: A^- is the transpose of A^+.
        let a = IntMatrix::from_rows(vec![vec![-1, 1], vec![0, -1]]).unwrap();
        let mut matrices = BTreeMap::new();
        matrices.insert(SignVector::parse("+").unwrap(), a.clone());
        let c = CComplexData {
            beta0: 1,
            rank: 2,
            matrices,
        };
        let full = complete_ccomplex(&c);
        assert_eq!(full.len(), 2);
        assert_eq!(full[&SignVector::parse("-").unwrap()], a.transpose());
        for (eps, m) in &full {
            assert_eq!(full[&eps.negated()], m.transpose());
        }
    }

    #[test]
    fn complete_ccomplex_rank_zero() {
        let mut matrices = BTreeMap::new();
        matrices.insert(SignVector::parse("++").unwrap(), IntMatrix::empty());
        matrices.insert(SignVector::parse("+-").unwrap(), IntMatrix::empty());
        let c = CComplexData {
            beta0: 1,
            rank: 0,
            matrices,
        };
        let full = complete_ccomplex(&c);
        assert_eq!(full.len(), 4);
        assert!(full.values().all(|m| m.dim() == 0));
    }

    #[test]
    fn complete_ccomplex_two_variables() {
        let app = IntMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
        let apm = IntMatrix::from_rows(vec![vec![0, 5], vec![6, 0]]).unwrap();
        let mut matrices = BTreeMap::new();
        matrices.insert(SignVector::parse("++").unwrap(), app.clone());
        matrices.insert(SignVector::parse("+-").unwrap(), apm.clone());
        let c = CComplexData {
            beta0: 1,
            rank: 2,
            matrices,
        };
        let full = complete_ccomplex(&c);
        assert_eq!(full[&SignVector::parse("--").unwrap()], app.transpose());
        assert_eq!(full[&SignVector::parse("-+").unwrap()], apm.transpose());
    }

    #[test]
    fn torus_point_parsing() {
        let p = TorusPoint::parse("1/8,1/8,1/8").unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.turns()[0], Rational64::new(1, 8));
        assert!(TorusPoint::parse("0/1").is_err());
        assert!(TorusPoint::parse("9/8").is_err());
        assert!(TorusPoint::parse("x").is_err());
        assert_eq!(p.to_string(), "1/8,1/8,1/8");
    }
}
