use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::{Error, Result};

/// Univariate polynomial over the rationals, coefficients lowest degree first.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial is
/// the empty coefficient vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl From<Vec<Rational>> for Poly {
    fn from(coeffs: Vec<Rational>) -> Self {
        Poly::new(coeffs)
    }
}

impl From<Poly> for Vec<Rational> {
    fn from(p: Poly) -> Self {
        p.coeffs
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rational::is_one)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rational::from(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip().expect("leading coefficient is nonzero")),
        }
    }

    /// Largest `k` such that `x^k` divides `self` (0 for the zero polynomial).
    pub fn x_adic_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `self / x^k`, dropping the `k` lowest coefficients.
    pub fn shift_down(&self, k: usize) -> Poly {
        Poly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, exp: u32) -> Poly {
        (0..exp).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dlead = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        let dlead_inv = dlead.recip()?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] * &dlead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[k + j] -= &t;
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact quotient; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::FormulaViolation(format!(
                "{divisor} does not divide {self}"
            )));
        }
        Ok(q)
    }
}

/// Monic greatest common divisor by Euclid's algorithm, with every remainder
/// normalized to monic to keep coefficients small.
///
/// `gcd(p, 0) = monic(p)` and `gcd(0, 0) = 0`.
pub fn poly_gcd(p: &Poly, q: &Poly) -> Poly {
    let mut a = p.monic();
    let mut b = q.monic();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
        a = b;
        b = r.monic();
    }
    a
}

/// Monic product of the distinct irreducible factors of `p`, i.e.
/// `p / gcd(p, p')` normalized.
pub fn squarefree_part(p: &Poly) -> Result<Poly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = poly_gcd(p, &p.derivative());
    Ok(p.div_exact(&g)?.monic())
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Poly {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    Poly::new(
        (0..n)
            .map(|k| {
                let x = a.get(k).unwrap_or(&zero);
                let y = b.get(k).unwrap_or(&zero);
                if negate_b {
                    x - y
                } else {
                    x + y
                }
            })
            .collect(),
    )
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    /// Human-readable form in the variable `x`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let coef = if mag.is_one() && k > 0 { String::new() } else { mag.to_string() };
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn zero_is_canonical() {
        assert_eq!(Poly::new(vec![Rational::zero(); 3]), Poly::zero());
        assert!(Poly::zero().coeffs().is_empty());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn gcd_examples() {
        // x^2 - 1, x - 1
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        // x^2, x^3
        assert_eq!(poly_gcd(&p(&[0, 0, 1]), &p(&[0, 0, 0, 1])), p(&[0, 0, 1]));
        // (x-1)^2 and (x-1)(x+1)
        assert_eq!(poly_gcd(&p(&[1, -2, 1]), &p(&[-1, 0, 1])), p(&[-1, 1]));
        assert_eq!(poly_gcd(&p(&[2, 4]), &Poly::zero()), Poly::new(vec![Rational::from(1i64) / Rational::from(2i64), Rational::one()]));
        assert_eq!(poly_gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&p(&[1, -2, 1])).unwrap(), p(&[-1, 1]));
        // x^2 (x - 1)
        assert_eq!(squarefree_part(&p(&[0, 0, -1, 1])).unwrap(), p(&[0, -1, 1]));
        // x^3 - 3x^2 + 3x - 1
        assert_eq!(squarefree_part(&p(&[-1, 3, -3, 1])).unwrap(), p(&[-1, 1]));
        assert!(matches!(squarefree_part(&Poly::zero()), Err(Error::ZeroPolynomial)));
        assert_eq!(squarefree_part(&p(&[5])).unwrap(), Poly::one());
    }

    #[test]
    fn division() {
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[2]));
        assert!(matches!(p(&[1]).div_rem(&Poly::zero()), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 1]).to_string(), "x^2 - 2x + 1");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-4i64..5, 1..5).prop_map(|c| Poly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn squarefree_of_square(q in arb_poly()) {
            prop_assume!(!q.is_zero());
            let sq = &q * &q;
            prop_assert_eq!(squarefree_part(&sq).unwrap(), squarefree_part(&q).unwrap());
        }

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly()) {
            let g = poly_gcd(&a, &b);
            if !g.is_zero() {
                prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
                prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
                prop_assert!(g.is_monic());
            }
        }
    }
}
