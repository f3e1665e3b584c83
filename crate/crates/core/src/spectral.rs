//! Exact characteristic polynomials and comparison of nonzero spectra.
//!
//! Eigenvalues are never computed as algebraic numbers. Two matrices have the
//! same set of nonzero eigenvalues exactly when the monic squarefree parts of
//! their characteristic polynomials, with the factor `λ^m` removed, agree.

use serde::{Deserialize, Serialize};

use crate::arith::{squarefree_part, Poly, Rational};
use crate::drazin::{drazin_inverse, jacobson_inverse, Quadruple};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::ring::{RingKind, RingSpec};

/// Sample points used when no λ list is given.
pub fn default_lambdas() -> Vec<Rational> {
    [(1, 1), (-1, 1), (2, 1), (1, 2), (3, 1), (-3, 1), (5, 7)]
        .iter()
        .map(|&(p, q)| Rational::new(p, q).expect("nonzero denominator"))
        .collect()
}

/// Entries of a matrix over Q or Z as a matrix over Q.
fn over_q(a: &SquareMatrix, operation: &'static str) -> Result<SquareMatrix> {
    match a.ring().kind() {
        RingKind::Rationals => Ok(a.clone()),
        RingKind::Integers => a.to_ring(RingSpec::rationals()),
        _ => Err(Error::UnsupportedRing { ring: a.ring().to_string(), operation }),
    }
}

/// `det(λI - A)` by the Faddeev-LeVerrier recurrence.
pub fn char_poly(a: &SquareMatrix) -> Result<Poly> {
    let a = over_q(a, "char_poly")?;
    let n = a.dim();
    let id = SquareMatrix::identity(a.ring(), n);
    // coeffs[n - k] = c_k with c_0 = 1
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = SquareMatrix::zero(a.ring(), n);
    for k in 1..=n {
        m = &(&a * &m) + &id.scalar_mul(&coeffs[n - k + 1])?;
        let am = &a * &m;
        let trace = (0..n).fold(Rational::zero(), |acc, i| acc + am.entry(i, i));
        coeffs[n - k] = -(trace.checked_div(&Rational::from(k as i64))?);
    }
    Ok(Poly::new(coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumSummary {
    pub char_poly: Poly,
    /// Power of λ dividing the characteristic polynomial.
    pub zero_multiplicity: usize,
    /// Monic squarefree part of `char_poly / λ^zero_multiplicity`.
    pub nonzero_part_squarefree: Poly,
}

impl SpectrumSummary {
    pub fn of(a: &SquareMatrix) -> Result<Self> {
        let p = char_poly(a)?;
        let zero_multiplicity = p.x_adic_valuation();
        let nonzero_part_squarefree = squarefree_part(&p.shift_down(zero_multiplicity))?;
        Ok(SpectrumSummary { char_poly: p, zero_multiplicity, nonzero_part_squarefree })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumComparison {
    pub left: SpectrumSummary,
    pub right: SpectrumSummary,
    /// Same nonzero eigenvalues, as sets.
    pub equal: bool,
    /// Every nonzero eigenvalue of the right matrix is one of the left.
    pub right_within_left: bool,
    /// `char_poly` quotients by `λ^m` coincide, i.e. nonzero eigenvalues
    /// also agree with algebraic multiplicity. Informational only.
    pub multiplicities_equal: bool,
}

pub fn nonzero_spectrum_equal(p: &SquareMatrix, q: &SquareMatrix) -> Result<SpectrumComparison> {
    let left = SpectrumSummary::of(p)?;
    let right = SpectrumSummary::of(q)?;
    let equal = left.nonzero_part_squarefree == right.nonzero_part_squarefree;
    let (_, rem) = left.nonzero_part_squarefree.div_rem(&right.nonzero_part_squarefree)?;
    let right_within_left = rem.is_zero();
    let multiplicities_equal = left.char_poly.shift_down(left.zero_multiplicity)
        == right.char_poly.shift_down(right.zero_multiplicity);
    Ok(SpectrumComparison { left, right, equal, right_within_left, multiplicities_equal })
}

fn divisors(n: &num_bigint::BigInt, cap: u64) -> Option<Vec<u64>> {
    use num_traits::{Signed, ToPrimitive};
    let n = n.abs().to_u64()?;
    if n > cap {
        return None;
    }
    Some((1..=n).filter(|d| n % d == 0).collect())
}

/// Rational roots of `p` by the rational root test, in increasing order.
/// Returns `None` when the candidate set would be too large to try.
pub fn rational_roots(p: &Poly) -> Option<Vec<Rational>> {
    const CAP: u64 = 1 << 16;
    if p.is_zero() {
        return None;
    }
    let mut roots = Vec::new();
    let v = p.x_adic_valuation();
    if v > 0 {
        roots.push(Rational::zero());
    }
    let q = p.shift_down(v);
    if q.degree() == Some(0) {
        return Some(roots);
    }
    // Clear denominators so that all coefficients are integers.
    let lcm = q
        .coeffs()
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let scaled = q.scale(&Rational::from_integer(lcm));
    let lead = scaled.leading().expect("nonzero").numer().clone();
    let constant = scaled.coeff(0).numer().clone();
    let (ps, qs) = (divisors(&constant, CAP)?, divisors(&lead, CAP)?);
    let mut seen = std::collections::BTreeSet::new();
    for &num in &ps {
        for &den in &qs {
            for sign in [1i64, -1] {
                let cand = Rational::new(sign * num as i64, den as i64).expect("den >= 1");
                if q.eval(&cand).is_zero() {
                    seen.insert(cand);
                }
            }
        }
    }
    roots.extend(seen);
    roots.sort();
    Some(roots)
}

/// Verdicts for one λ of the scaled quadruple `(a/λ, b, c, d/λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaVerdict {
    pub lambda: Rational,
    /// `1 - (a/λ)c` is invertible.
    pub ac_side_invertible: bool,
    /// `1 - b(d/λ)` is invertible.
    pub bd_side_invertible: bool,
    /// The inverse `1 + b(1 - (a/λ)c)^-1 (d/λ)`, when the ac side is invertible.
    pub formula_inverse: Option<SquareMatrix>,
    /// The formula output is an exact two-sided inverse of `1 - b(d/λ)`.
    pub formula_verified: bool,
    /// ac side invertible implies bd side invertible.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferReport {
    pub verdicts: Vec<LambdaVerdict>,
    pub holds: bool,
}

/// Pointwise invertibility transfer from `1 - ac` to `1 - bd` at the scaled
/// quadruples `(a/λ, b, c, d/λ)`.
pub fn invertibility_transfer(q: &Quadruple, lambdas: &[Rational]) -> Result<TransferReport> {
    if !q.ring().is_field() || q.ring().is_finite() {
        return Err(Error::UnsupportedRing {
            ring: q.ring().to_string(),
            operation: "invertibility_transfer",
        });
    }
    if lambdas.iter().any(Rational::is_zero) {
        return Err(Error::ZeroLambda);
    }
    let id = SquareMatrix::identity(q.ring(), q.dim());
    let mut verdicts = Vec::with_capacity(lambdas.len());
    for lambda in lambdas {
        let s = q.scaled(lambda)?;
        let ac_side_invertible = (&id - &s.ac()).is_invertible();
        let bd_side_invertible = (&id - &s.bd()).is_invertible();
        let (formula_inverse, formula_verified) = if ac_side_invertible {
            match jacobson_inverse(&s) {
                Ok(inv) => (Some(inv), true),
                Err(Error::FormulaViolation(_)) => (None, false),
                Err(e) => return Err(e),
            }
        } else {
            (None, false)
        };
        let holds = !ac_side_invertible || (bd_side_invertible && formula_verified);
        verdicts.push(LambdaVerdict {
            lambda: lambda.clone(),
            ac_side_invertible,
            bd_side_invertible,
            formula_inverse,
            formula_verified,
            holds,
        });
    }
    let holds = verdicts.iter().all(|v| v.holds);
    Ok(TransferReport { verdicts, holds })
}

/// The default λ list followed by the nonzero rational roots of both
/// characteristic polynomials, without repeats.
pub fn sample_lambdas(q: &Quadruple) -> Result<Vec<Rational>> {
    let mut out = default_lambdas();
    for m in [q.ac(), q.bd()] {
        for r in rational_roots(&char_poly(&m)?).unwrap_or_default() {
            if !r.is_zero() && !out.contains(&r) {
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// Whether `λI - A` has a Drazin inverse for every sampled λ. For a matrix
/// over a field this always holds, so the Drazin spectrum is empty.
pub fn drazin_spectrum_empty(a: &SquareMatrix, lambdas: &[Rational]) -> Result<bool> {
    let a = over_q(a, "drazin_spectrum_empty")?;
    for lambda in lambdas.iter().chain(std::iter::once(&Rational::zero())) {
        let shifted = &SquareMatrix::scalar(a.ring(), a.dim(), lambda)? - &a;
        if !drazin_inverse(&shifted)?.valid {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub nonzero_spectrum: SpectrumComparison,
    pub transfer: TransferReport,
    /// Drazin spectra of `ac` and `bd` are both empty at the sampled points.
    pub drazin_spectra_empty: bool,
}

impl SpectralReport {
    pub fn holds(&self) -> bool {
        self.nonzero_spectrum.equal && self.transfer.holds && self.drazin_spectra_empty
    }
}

/// Nonzero spectra of `ac` and `bd`, invertibility transfer at `lambdas`
/// (or [`sample_lambdas`] when `None`), and Drazin-spectrum emptiness.
pub fn spectral_report(q: &Quadruple, lambdas: Option<&[Rational]>) -> Result<SpectralReport> {
    let q = match q.ring().kind() {
        RingKind::Integers => q.to_ring(RingSpec::rationals())?,
        _ => q.clone(),
    };
    let lambdas = match lambdas {
        Some(l) => l.to_vec(),
        None => sample_lambdas(&q)?,
    };
    let (ac, bd) = (q.ac(), q.bd());
    Ok(SpectralReport {
        nonzero_spectrum: nonzero_spectrum_equal(&ac, &bd)?,
        transfer: invertibility_transfer(&q, &lambdas)?,
        drazin_spectra_empty: drazin_spectrum_empty(&ac, &lambdas)?
            && drazin_spectrum_empty(&bd, &lambdas)?,
    })
}
