use super::Quadruple;
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// `(1 - bd)^-1 = 1 + b (1 - ac)^-1 d`, checked as a two-sided inverse of
/// `1 - bd` before it is returned.
///
/// Fails with `NotInvertible` when `1 - ac` is not a unit of the matrix ring.
/// `FormulaViolation` means the identity itself failed, which is a bug.
pub fn jacobson_inverse(q: &Quadruple) -> Result<SquareMatrix> {
    let id = SquareMatrix::identity(q.ring(), q.dim());
    let inv = (&id - &q.ac()).inverse()?;
    let candidate = &id + &(&(q.b() * &inv) * q.d());
    let target = &id - &q.bd();
    if &target * &candidate != id || &candidate * &target != id {
        return Err(Error::FormulaViolation(format!(
            "1 + b(1-ac)^-1 d = {candidate} does not invert 1 - bd = {target}"
        )));
    }
    Ok(candidate)
}
