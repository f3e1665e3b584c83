//! Drazin-type inverses: index computation, construction over fields, and
//! axiom verification for every flavor.
//!
//! For an element `a` and candidate `x` the three shared axioms are
//!
//! * `a x = x a` (the commuting form of the double-commutant condition),
//! * `x a x = x`,
//! * a "core" condition on `a - a^2 x`, which depends on the flavor:
//!   nilpotent (Drazin), quasinilpotent (g-Drazin), or `a^k - a^(k+1) x`
//!   in the Jacobson radical for some `k` (p-Drazin).
//!
//! A group inverse is a Drazin inverse of index at most one.
//!
//! Over matrix rings of a field every element is Drazin invertible, and
//! quasinilpotent means nilpotent, so the g-Drazin flavor coincides with the
//! Drazin one there. Over finite rings quasinilpotence is decided from its
//! definition by enumerating the commutant (see [`crate::lab`]).

mod cline;
mod jacobson;
mod quadruple;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lab::{is_qnil_by_definition, DEFAULT_BUDGET};
use crate::matrix::SquareMatrix;

pub use cline::{cline_classical, cline_generalized, cline_with_inverse, ClineReport, GroupCase};
pub use jacobson::jacobson_inverse;
pub use quadruple::{check_relations, verify_intertwining, EntryDiff, Quadruple, RelationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InverseFlavor {
    Drazin,
    PDrazin,
    GDrazin,
    Group,
}

impl fmt::Display for InverseFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InverseFlavor::Drazin => "drazin",
            InverseFlavor::PDrazin => "pdrazin",
            InverseFlavor::GDrazin => "gdrazin",
            InverseFlavor::Group => "group",
        })
    }
}

impl FromStr for InverseFlavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "drazin" => Ok(InverseFlavor::Drazin),
            "pdrazin" => Ok(InverseFlavor::PDrazin),
            "gdrazin" => Ok(InverseFlavor::GDrazin),
            "group" => Ok(InverseFlavor::Group),
            _ => Err(Error::Parse(format!("unknown inverse flavor {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// `a x = x a`
    Commutes,
    /// `x a x = x`
    Reflexive,
    /// `a - a^2 x` nilpotent
    CoreNilpotent,
    /// `a^k - a^(k+1) x` in the radical for some `k`
    CoreRadical,
    /// `a - a^2 x` quasinilpotent
    CoreQuasinilpotent,
    IndexAtMostOne,
    /// `x` commutes with every element commuting with `a`
    DoubleCommutant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub check: CheckKind,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Check {
    fn new(check: CheckKind, pass: bool, witness: Option<String>) -> Self {
        Check { check, pass, witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub checks: Vec<Check>,
    /// Drazin index (smallest `k >= 0` with `a^k = a^(k+1) x`), or the
    /// p-Drazin index for the p-Drazin flavor.
    pub index: Option<u32>,
}

impl Transcript {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, kind: CheckKind) -> Option<&Check> {
        self.checks.iter().find(|c| c.check == kind)
    }
}

/// A candidate inverse together with the record of every axiom check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrazinCertificate {
    pub element: SquareMatrix,
    pub inverse: SquareMatrix,
    pub flavor: InverseFlavor,
    pub index: Option<u32>,
    pub transcript: Vec<Check>,
    pub valid: bool,
}

impl DrazinCertificate {
    /// Re-labels a certificate under another flavor by re-running the checks.
    pub fn reverify(&self, flavor: InverseFlavor) -> Result<DrazinCertificate> {
        certify(&self.element, &self.inverse, flavor)
    }
}

/// Smallest `k` in `0..=bound` such that `a^k - a^(k+1) x` satisfies `pred`.
fn core_index(
    a: &SquareMatrix,
    x: &SquareMatrix,
    bound: u32,
    pred: impl Fn(&SquareMatrix) -> bool,
) -> Option<u32> {
    let id = SquareMatrix::identity(a.ring(), a.dim());
    let mut d = &id - &(a * x);
    for k in 0..=bound {
        if pred(&d) {
            return Some(k);
        }
        d = a * &d;
    }
    None
}

/// Checks `x` against the axioms of `flavor` for the element `a`.
///
/// Failures are recorded in the transcript, not returned as errors. The only
/// errors are shape mismatches and, for the g-Drazin flavor over a finite
/// ring, a commutant too large to enumerate.
pub fn verify_axioms(
    a: &SquareMatrix,
    x: &SquareMatrix,
    flavor: InverseFlavor,
) -> Result<Transcript> {
    let ax = a.checked_mul(x)?;
    let xa = x * a;
    let mut checks = Vec::with_capacity(4);
    checks.push(Check::new(
        CheckKind::Commutes,
        ax == xa,
        (ax != xa).then(|| format!("ax={ax}, xa={xa}")),
    ));
    let xax = &xa * x;
    checks.push(Check::new(
        CheckKind::Reflexive,
        xax == *x,
        (xax != *x).then(|| format!("xax={xax}")),
    ));

    let bound = a.ring().nilpotency_bound(a.dim());
    let core = a - &(&(a * a) * x);
    let drazin_index = || core_index(a, x, bound, SquareMatrix::is_zero);
    let index = match flavor {
        InverseFlavor::Drazin | InverseFlavor::Group => {
            let degree = core.nilpotency_degree();
            checks.push(Check::new(
                CheckKind::CoreNilpotent,
                degree.is_some(),
                Some(match degree {
                    Some(k) => format!("(a-a^2x)^{k}=0"),
                    None => format!("a-a^2x={core} is not nilpotent"),
                }),
            ));
            let index = drazin_index();
            if flavor == InverseFlavor::Group {
                checks.push(Check::new(
                    CheckKind::IndexAtMostOne,
                    index.is_some_and(|k| k <= 1),
                    Some(match index {
                        Some(k) => format!("index={k}"),
                        None => "index undefined".to_string(),
                    }),
                ));
            }
            index
        }
        InverseFlavor::PDrazin => {
            let k = core_index(a, x, bound, SquareMatrix::in_radical);
            checks.push(Check::new(
                CheckKind::CoreRadical,
                k.is_some(),
                Some(match k {
                    Some(k) => format!("a^{k}-a^{}x in radical", k + 1),
                    None => format!("no k<={bound} with a^k-a^(k+1)x in radical"),
                }),
            ));
            k
        }
        InverseFlavor::GDrazin => {
            let qnil = if a.ring().is_finite() {
                is_qnil_by_definition(&core, DEFAULT_BUDGET)?
            } else {
                core.is_nilpotent()
            };
            checks.push(Check::new(
                CheckKind::CoreQuasinilpotent,
                qnil,
                (!qnil).then(|| format!("a-a^2x={core} is not quasinilpotent")),
            ));
            drazin_index()
        }
    };
    Ok(Transcript { checks, index })
}

/// Runs [`verify_axioms`] and packages the result as a certificate.
pub fn certify(
    a: &SquareMatrix,
    x: &SquareMatrix,
    flavor: InverseFlavor,
) -> Result<DrazinCertificate> {
    let t = verify_axioms(a, x, flavor)?;
    Ok(DrazinCertificate {
        element: a.clone(),
        inverse: x.clone(),
        flavor,
        index: t.index,
        valid: t.passed(),
        transcript: t.checks,
    })
}

/// Smallest `k >= 0` with `rank(A^k) = rank(A^(k+1))`. Fields only.
pub fn index_of(a: &SquareMatrix) -> Result<u32> {
    let mut power = SquareMatrix::identity(a.ring(), a.dim());
    let mut rank = power.rank()?;
    for k in 0..=a.dim() as u32 {
        let next = &power * a;
        let next_rank = next.rank()?;
        if next_rank == rank {
            return Ok(k);
        }
        power = next;
        rank = next_rank;
    }
    unreachable!("rank sequence stabilises within n steps")
}

/// Drazin inverse over a field as `A^k (A^(2k+1))^- A^k`, where `k` is the
/// index and `(.)^-` is any inner inverse. The result is re-verified against
/// all axioms before it is returned.
pub fn drazin_inverse(a: &SquareMatrix) -> Result<DrazinCertificate> {
    if !a.ring().is_field() {
        return Err(Error::NotAField { ring: a.ring().to_string() });
    }
    let k = index_of(a)?;
    let ak = a.pow(k);
    let inner = a.pow(2 * k + 1).inner_inverse()?;
    let x = &(&ak * &inner) * &ak;
    let cert = certify(a, &x, InverseFlavor::Drazin)?;
    if !cert.valid || cert.index != Some(k) {
        return Err(Error::FormulaViolation(format!(
            "Drazin construction for {a} produced {x}, which fails verification"
        )));
    }
    Ok(cert)
}

/// Group inverse over a field: the Drazin inverse when the index is at most one.
pub fn group_inverse(a: &SquareMatrix) -> Result<DrazinCertificate> {
    let d = drazin_inverse(a)?;
    match d.index {
        Some(k) if k <= 1 => d.reverify(InverseFlavor::Group),
        Some(k) => Err(Error::NoGroupInverse { index: k }),
        None => unreachable!("verified Drazin certificates carry an index"),
    }
}

#[cfg(test)]
mod tests;
