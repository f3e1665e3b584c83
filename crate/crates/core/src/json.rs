//! JSON forms of rings, matrices and quadruples.
//!
//! A matrix is `{"ring": R, "rows": [[s, ...], ...]}` where `R` is `"Q"`,
//! `"Z"`, `{"GF": p}` or `{"Zmod": n}` and every scalar `s` is a string in
//! rational syntax (`"p"` or `"p/q"`). Over `GF(p)` and `Z/n` scalars must be
//! canonical residues, i.e. nonnegative integers below the modulus.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::Rational;
use crate::drazin::Quadruple;
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::ring::{RingKind, RingSpec};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RingRepr {
    Name(String),
    Prime {
        #[serde(rename = "GF")]
        p: u64,
    },
    Residue {
        #[serde(rename = "Zmod")]
        n: u64,
    },
}

impl Serialize for RingSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.kind() {
            RingKind::Rationals => RingRepr::Name("Q".into()),
            RingKind::Integers => RingRepr::Name("Z".into()),
            RingKind::PrimeField(p) => RingRepr::Prime { p },
            RingKind::ResidueRing(n) => RingRepr::Residue { n },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let ring = match RingRepr::deserialize(d)? {
            RingRepr::Name(name) => match name.as_str() {
                "Q" => Ok(RingSpec::rationals()),
                "Z" => Ok(RingSpec::integers()),
                other => Err(Error::InvalidRing(format!("unknown ring name {other:?}"))),
            },
            RingRepr::Prime { p } => RingSpec::prime_field(p),
            RingRepr::Residue { n } => RingSpec::residue(n),
        };
        ring.map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixRepr {
    ring: RingSpec,
    rows: Vec<Vec<String>>,
}

impl Serialize for SquareMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows = self
            .rows()
            .into_iter()
            .map(|r| r.iter().map(Rational::to_string).collect())
            .collect();
        MatrixRepr { ring: self.ring(), rows }.serialize(s)
    }
}

fn matrix_from_repr(repr: MatrixRepr) -> Result<SquareMatrix> {
    let ring = repr.ring;
    let mut rows = Vec::with_capacity(repr.rows.len());
    for row in repr.rows {
        let mut out = Vec::with_capacity(row.len());
        for text in row {
            let value: Rational = text.parse()?;
            if let Some(m) = ring.modulus() {
                let canonical = value.is_integer() && !value.is_negative() && value < m as i64;
                if !canonical {
                    return Err(Error::Parse(format!(
                        "scalar {text:?} is not a residue in 0..{m} for {ring}"
                    )));
                }
            }
            out.push(value);
        }
        rows.push(out);
    }
    SquareMatrix::from_rows(ring, rows)
}

impl<'de> Deserialize<'de> for SquareMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        matrix_from_repr(MatrixRepr::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// Four matrices as read from input, before the relations are checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawQuadruple {
    pub a: SquareMatrix,
    pub b: SquareMatrix,
    pub c: SquareMatrix,
    pub d: SquareMatrix,
}

impl RawQuadruple {
    /// Validates the relations; see [`Quadruple::new`].
    pub fn into_quadruple(self) -> Result<Quadruple> {
        Quadruple::new(self.a, self.b, self.c, self.d)
    }
}

impl From<&Quadruple> for RawQuadruple {
    fn from(q: &Quadruple) -> Self {
        let [a, b, c, d] = q.parts();
        RawQuadruple { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone() }
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn parse_matrix(text: &str) -> Result<SquareMatrix> {
    serde_json::from_str(text).map_err(parse_error)
}

pub fn parse_raw_quadruple(text: &str) -> Result<RawQuadruple> {
    serde_json::from_str(text).map_err(parse_error)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}
