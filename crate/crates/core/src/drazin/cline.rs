use serde::{Deserialize, Serialize};

use super::{certify, drazin_inverse, group_inverse, DrazinCertificate, InverseFlavor, Quadruple};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// Where `bd` lands when `ac` has a group inverse: the index of `bd` is then
/// at most two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupCase {
    /// `bd` is a unit (index 0).
    Invertible,
    /// `bd` has a group inverse (index 1).
    Group,
    /// `bd` has only a Drazin inverse, of index 2.
    IndexTwo,
}

/// Outcome of transferring an inverse of `ac` to `bd` via `e = b h^2 d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClineReport {
    pub flavor: InverseFlavor,
    /// `h` checked as the `flavor`-inverse of `ac`.
    pub ac: DrazinCertificate,
    /// `e = b h^2 d` checked as an inverse of `bd` (Drazin flavor when the
    /// requested flavor is `group`).
    pub bd: DrazinCertificate,
    /// `index(bd) <= index(ac) + 1`.
    pub index_bound_holds: bool,
    /// Present when `index(ac) <= 1`.
    pub classification: Option<GroupCase>,
}

impl ClineReport {
    pub fn holds(&self) -> bool {
        self.ac.valid && self.bd.valid && self.index_bound_holds
    }

    pub fn formula_inverse(&self) -> &SquareMatrix {
        &self.bd.inverse
    }
}

/// Transfers a supplied inverse `h` of `ac` to `bd`. Works over every ring,
/// so finite-ring callers can pass a brute-forced `h`.
pub fn cline_with_inverse(
    q: &Quadruple,
    h: &SquareMatrix,
    flavor: InverseFlavor,
) -> Result<ClineReport> {
    let ac = q.ac();
    let ac_cert = certify(&ac, h, flavor)?;
    let e = &(&(q.b() * h) * h) * q.d();
    let bd_flavor = match flavor {
        InverseFlavor::Group => InverseFlavor::Drazin,
        f => f,
    };
    let bd_cert = certify(&q.bd(), &e, bd_flavor)?;
    let index_bound_holds = match (ac_cert.index, bd_cert.index) {
        (Some(i), Some(j)) => j <= i + 1,
        _ => false,
    };
    let classification = match (ac_cert.index, bd_cert.index) {
        (Some(i), Some(j)) if i <= 1 && bd_cert.valid => match j {
            0 => Some(GroupCase::Invertible),
            1 => Some(GroupCase::Group),
            2 => Some(GroupCase::IndexTwo),
            _ => None,
        },
        _ => None,
    };
    Ok(ClineReport { flavor, ac: ac_cert, bd: bd_cert, index_bound_holds, classification })
}

/// Constructs the `flavor`-inverse `h` of `ac` over a field and transfers it
/// to `bd` as `b h^2 d`.
pub fn cline_generalized(q: &Quadruple, flavor: InverseFlavor) -> Result<ClineReport> {
    if !q.ring().is_field() {
        return Err(Error::NotAField { ring: q.ring().to_string() });
    }
    let ac = q.ac();
    let h = match flavor {
        InverseFlavor::Group => group_inverse(&ac)?,
        _ => drazin_inverse(&ac)?,
    };
    cline_with_inverse(q, &h.inverse, flavor)
}

/// The classical specialization `c = b`, `d = a`: `(ba)^D = b ((ab)^D)^2 a`.
pub fn cline_classical(a: &SquareMatrix, b: &SquareMatrix) -> Result<DrazinCertificate> {
    let q = Quadruple::classical(a.clone(), b.clone())?;
    let report = cline_generalized(&q, InverseFlavor::Drazin)?;
    if !report.holds() {
        return Err(Error::FormulaViolation(format!(
            "b((ab)^D)^2 a failed verification for a={a}, b={b}"
        )));
    }
    Ok(report.bd)
}
