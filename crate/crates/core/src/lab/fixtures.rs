//! The three worked quadruples and the reports replaying them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::drazin::{
    certify, check_relations, cline_with_inverse, drazin_inverse, group_inverse, ClineReport,
    DrazinCertificate, InverseFlavor, Quadruple, RelationReport,
};
use crate::error::{Error, Result};
use crate::json::RawQuadruple;
use crate::matrix::SquareMatrix;
use crate::ring::RingSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    /// 2x2 over Q where `bdb != bac`.
    Mismatch,
    /// 2x2 over Q with `ac` idempotent and `bd` nilpotent.
    Idempotent,
    /// 2x2 over Z with `ac = 0` and `bd` nilpotent of index two.
    IntegerNilpotent,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::Mismatch, Fixture::Idempotent, Fixture::IntegerNilpotent];

    /// The label accepted by `demo --example`.
    pub fn label(self) -> &'static str {
        match self {
            Fixture::Mismatch => "2.4",
            Fixture::Idempotent => "2.5",
            Fixture::IntegerNilpotent => "3.6",
        }
    }

    pub fn ring(self) -> RingSpec {
        match self {
            Fixture::IntegerNilpotent => RingSpec::integers(),
            _ => RingSpec::rationals(),
        }
    }

    /// The four matrices `a, b, c, d`, unvalidated.
    pub fn matrices(self) -> [SquareMatrix; 4] {
        let r = self.ring();
        let m = |rows| SquareMatrix::from_ints(r, rows);
        match self {
            Fixture::Mismatch => [
                m([[0, 1], [0, 0]]),
                m([[1, 0], [0, 0]]),
                m([[1, 0], [1, 1]]),
                m([[1, 1], [0, 0]]),
            ],
            Fixture::Idempotent => [
                m([[0, 1], [0, 0]]),
                m([[0, 0], [0, 1]]),
                m([[1, 0], [1, 1]]),
                m([[1, 0], [-1, 0]]),
            ],
            Fixture::IntegerNilpotent => [
                m([[0, 1], [0, 1]]),
                m([[1, 1], [0, 0]]),
                m([[1, -1], [0, 0]]),
                m([[0, 1], [0, 1]]),
            ],
        }
    }

    pub fn quadruple(self) -> Result<Quadruple> {
        let [a, b, c, d] = self.matrices();
        Quadruple::new(a, b, c, d)
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Fixture {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.label() == s)
            .ok_or_else(|| Error::Parse(format!("unknown example {s:?}; expected 2.4, 2.5 or 3.6")))
    }
}

/// Everything the demo prints for one fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub example: String,
    pub quadruple: RawQuadruple,
    pub relations: RelationReport,
    /// Both relations hold.
    pub accepted: bool,
    pub ac: SquareMatrix,
    pub bd: SquareMatrix,
    /// Inverse of `ac`: group inverse when it exists, Drazin otherwise.
    pub ac_inverse: Option<DrazinCertificate>,
    /// Drazin inverse of `bd`, as produced by the transfer formula.
    pub bd_inverse: Option<DrazinCertificate>,
    /// Why `bd` has no group inverse, if it has none.
    pub bd_group_inverse_error: Option<String>,
    pub cline: Option<ClineReport>,
}

/// Replays a fixture. Over Z the inverses are constructed through the
/// embedding into Q and then re-verified as matrices over Z.
pub fn fixture_report(fixture: Fixture) -> Result<FixtureReport> {
    let [a, b, c, d] = fixture.matrices();
    let relations = check_relations(&a, &b, &c, &d)?;
    let accepted = relations.holds();
    let raw = RawQuadruple { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone() };
    let (ac, bd) = (&a * &c, &b * &d);
    let mut report = FixtureReport {
        example: fixture.label().to_string(),
        quadruple: raw,
        relations,
        accepted,
        ac: ac.clone(),
        bd: bd.clone(),
        ac_inverse: None,
        bd_inverse: None,
        bd_group_inverse_error: None,
        cline: None,
    };
    if !accepted {
        return Ok(report);
    }
    let q = Quadruple::new_unchecked(a, b, c, d);
    let rationals = RingSpec::rationals();
    let (ac_q, bd_q) = (ac.to_ring(rationals)?, bd.to_ring(rationals)?);
    let ac_flavor = match group_inverse(&ac_q) {
        Ok(_) => InverseFlavor::Group,
        Err(Error::NoGroupInverse { .. }) => InverseFlavor::Drazin,
        Err(e) => return Err(e),
    };
    let h = drazin_inverse(&ac_q)?.inverse.to_ring(q.ring())?;
    let cline = cline_with_inverse(&q, &h, ac_flavor)?;
    report.ac_inverse = Some(certify(&ac, &h, ac_flavor)?);
    report.bd_inverse = Some(cline.bd.clone());
    report.bd_group_inverse_error = match group_inverse(&bd_q) {
        Ok(_) => None,
        Err(Error::NoGroupInverse { index }) => Some(format!("NoGroupInverse: index {index}")),
        Err(e) => return Err(e),
    };
    report.cline = Some(cline);
    Ok(report)
}
