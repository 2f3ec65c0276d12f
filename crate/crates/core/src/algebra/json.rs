//! JSON form of [`SymMatrix`].
//!
//! ```text
//! {"rows":R,"cols":C,"entries":[[{"exp":[μm,μω,μħ],"re":["a","b","c","d"],"im":[..]}, ..], ..]}
//! ```
//!
//! `entries` holds the `R*C` cells in row-major order; each cell is the list
//! of its nonzero Laurent terms (an empty list is zero). `re` and `im` are
//! the coefficients of (1, √2, √3, √6) written as `"p/q"`.

use serde::{Deserialize, Serialize};

use super::ext::ExtScalar;
use super::matrix::SymMatrix;
use super::rational;
use super::sym::{Exponents, SymScalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: Exponents,
    pub re: [String; 4],
    pub im: [String; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<TermDoc>>,
}

pub fn scalar_to_doc(s: &SymScalar) -> Vec<TermDoc> {
    s.terms()
        .map(|(exp, c)| TermDoc {
            exp: *exp,
            re: c.re_coeffs().clone().map(|r| rational::to_fraction_string(&r)),
            im: c.im_coeffs().clone().map(|r| rational::to_fraction_string(&r)),
        })
        .collect()
}

pub fn scalar_from_doc(terms: &[TermDoc]) -> Result<SymScalar> {
    let mut out = SymScalar::zero();
    for t in terms {
        let parse4 = |v: &[String; 4]| -> Result<[rational::Rational; 4]> {
            Ok([
                rational::parse(&v[0])?,
                rational::parse(&v[1])?,
                rational::parse(&v[2])?,
                rational::parse(&v[3])?,
            ])
        };
        let c = ExtScalar::new(parse4(&t.re)?, parse4(&t.im)?);
        out += &SymScalar::monomial(t.exp, c);
    }
    Ok(out)
}

impl From<&SymMatrix> for MatrixDoc {
    fn from(m: &SymMatrix) -> Self {
        MatrixDoc {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(scalar_to_doc).collect(),
        }
    }
}

impl TryFrom<&MatrixDoc> for SymMatrix {
    type Error = Error;

    fn try_from(doc: &MatrixDoc) -> Result<Self> {
        if doc.entries.len() != doc.rows * doc.cols {
            return Err(Error::MalformedMatrix(format!(
                "{} cells for a {}x{} matrix",
                doc.entries.len(),
                doc.rows,
                doc.cols
            )));
        }
        let cells = doc
            .entries
            .iter()
            .map(|t| scalar_from_doc(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymMatrix::from_fn(doc.rows, doc.cols, |r, c| cells[r * doc.cols + c].clone()))
    }
}

impl Serialize for SymMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixDoc::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = MatrixDoc::deserialize(deserializer)?;
        SymMatrix::try_from(&doc).map_err(serde::de::Error::custom)
    }
}

pub fn to_json(m: &SymMatrix) -> String {
    serde_json::to_string(m).expect("matrix serialization cannot fail")
}

pub fn from_json(text: &str) -> Result<SymMatrix> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| Error::MalformedMatrix(e.to_string()))?;
    SymMatrix::try_from(&doc)
}
