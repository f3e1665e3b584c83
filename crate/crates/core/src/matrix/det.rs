use super::field::det_field;
use super::SquareMatrix;
use crate::arith::Rational;
use crate::error::{Error, Result, SingularReason};
use crate::ring::{gcd_u64, inv_mod, RingKind};

/// Fraction-free (Bareiss) determinant over the rationals.
///
/// For integer input every intermediate value is an integer. Over finite
/// rings the entries are lifted to their integer representatives and the
/// result is reduced back into `0..modulus`.
pub fn det_bareiss(m: &SquareMatrix) -> Rational {
    let n = m.dim();
    let mut a = m.to_rationals();
    let mut sign = false;
    let mut prev = Rational::one();
    let mut det = None;
    for k in 0..n {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                Some(p) => {
                    for j in 0..n {
                        a.swap(k * n + j, p * n + j);
                    }
                    sign = !sign;
                }
                None => {
                    det = Some(Rational::zero());
                    break;
                }
            }
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i * n + j] * &pivot - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = &v / &prev;
            }
        }
        prev = pivot;
    }
    let mut d = det.unwrap_or_else(|| a[n * n - 1].clone());
    if sign {
        d = -d;
    }
    match m.ring().modulus() {
        Some(modulus) => Rational::from(d.reduce_mod(modulus).expect("integer determinant")),
        None => d,
    }
}

impl SquareMatrix {
    /// Exact determinant: elimination over fields, Bareiss over Z and Z/n.
    pub fn det(&self) -> Rational {
        match self.ring().kind() {
            RingKind::Rationals | RingKind::PrimeField(_) => {
                det_field(self).expect("field determinant")
            }
            RingKind::Integers | RingKind::ResidueRing(_) => det_bareiss(self),
        }
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> SquareMatrix {
        let n = self.dim();
        let rows = (0..n)
            .filter(|&i| i != skip_row)
            .map(|i| (0..n).filter(|&j| j != skip_col).map(|j| self.entry(i, j)).collect())
            .collect();
        SquareMatrix::from_rows(self.ring(), rows).expect("entries already lie in the ring")
    }

    /// Classical adjugate: `adj(A)[j][i] = (-1)^(i+j) det(minor(i, j))`.
    pub fn adjugate(&self) -> SquareMatrix {
        let n = self.dim();
        if n == 1 {
            return SquareMatrix::identity(self.ring(), 1);
        }
        let mut rows = vec![vec![Rational::zero(); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let c = self.minor(j, i).det();
                *slot = if (i + j) % 2 == 0 { c } else { -c };
            }
        }
        SquareMatrix::from_rows(self.ring(), rows).expect("cofactors lie in the ring")
    }

    /// Two-sided inverse in the matrix ring.
    ///
    /// Over a field this exists iff the rank is full; over `Z/n` iff
    /// `gcd(det, n) = 1`; over Z iff `det = ±1`.
    pub fn inverse(&self) -> Result<SquareMatrix> {
        match self.ring().kind() {
            RingKind::Rationals | RingKind::PrimeField(_) => self.inverse_field(),
            RingKind::Integers => {
                let d = self.det();
                if d == 1 || d == -1 {
                    self.adjugate().scalar_mul(&d)
                } else {
                    Err(Error::NotInvertible(SingularReason::DetNotUnit { det: d.to_string() }))
                }
            }
            RingKind::ResidueRing(m) => {
                let d = self.det().to_i64().expect("residue determinant") as u64;
                if gcd_u64(d, m) != 1 {
                    return Err(Error::NotInvertible(SingularReason::DetNotUnit {
                        det: d.to_string(),
                    }));
                }
                let inv = inv_mod(d, m).expect("unit");
                self.adjugate().scalar_mul(&Rational::from(inv))
            }
        }
    }
}
