//! Square matrices over a [`RingSpec`].
//!
//! Entries over Q and Z are stored as exact [`Rational`]s (integers for Z);
//! entries over `GF(p)` and `Z/n` are stored as canonical residues in
//! `0..modulus`. Every accessor exposes entries as `Rational`, so a residue
//! `r` reads back as the integer `r`.
//!
//! The arithmetic operators (`&a * &b`, ...) panic when ring or dimension
//! differ; the `checked_*` methods report the mismatch instead.

mod det;
mod field;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::ring::{RingKind, RingSpec};

pub use det::det_bareiss;
pub(crate) use field::solve_linear;

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) enum Entries {
    Exact(Vec<Rational>),
    Residue(Vec<u64>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    ring: RingSpec,
    n: usize,
    data: Entries,
}

/// Maps a rational into the ring, or explains why it is not an element.
fn embed(ring: RingSpec, value: &Rational) -> Result<Option<u64>> {
    let not_in = || Error::NotInRing { value: value.to_string(), ring: ring.to_string() };
    match ring.kind() {
        RingKind::Rationals => Ok(None),
        RingKind::Integers => {
            if value.is_integer() {
                Ok(None)
            } else {
                Err(not_in())
            }
        }
        RingKind::PrimeField(m) | RingKind::ResidueRing(m) => {
            value.reduce_mod(m).map(Some).ok_or_else(not_in)
        }
    }
}

impl SquareMatrix {
    /// Builds a matrix from rows of rationals, reducing each entry into the
    /// ring. Over `Z` entries must be integers; over `GF(p)`/`Z/n` a fraction
    /// is accepted when its denominator is a unit.
    pub fn from_rows(ring: RingSpec, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Parse("matrix must have at least one row".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { left: n, right: bad.len() });
        }
        let flat = rows.into_iter().flatten();
        let data = if ring.is_exact() {
            let v: Vec<Rational> = flat.collect();
            for x in &v {
                embed(ring, x)?;
            }
            Entries::Exact(v)
        } else {
            Entries::Residue(
                flat.map(|x| embed(ring, &x).map(|r| r.expect("finite ring")))
                    .collect::<Result<_>>()?,
            )
        };
        Ok(SquareMatrix { ring, n, data })
    }

    /// Builds a matrix from integer literals; integers lie in every ring.
    pub fn from_ints<const N: usize>(ring: RingSpec, rows: [[i64; N]; N]) -> Self {
        assert!(N > 0, "matrix dimension must be positive");
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
            .collect();
        Self::from_rows(ring, rows).expect("integers embed in every ring")
    }

    pub(crate) fn from_residues(ring: RingSpec, n: usize, data: Vec<u64>) -> Self {
        debug_assert!(ring.is_finite() && data.len() == n * n);
        SquareMatrix { ring, n, data: Entries::Residue(data) }
    }

    pub(crate) fn from_exact(ring: RingSpec, n: usize, data: Vec<Rational>) -> Self {
        debug_assert!(ring.is_exact() && data.len() == n * n);
        SquareMatrix { ring, n, data: Entries::Exact(data) }
    }

    pub fn zero(ring: RingSpec, n: usize) -> Self {
        assert!(n > 0, "matrix dimension must be positive");
        let data = match ring.modulus() {
            Some(_) => Entries::Residue(vec![0; n * n]),
            None => Entries::Exact(vec![Rational::zero(); n * n]),
        };
        SquareMatrix { ring, n, data }
    }

    pub fn identity(ring: RingSpec, n: usize) -> Self {
        let mut m = Self::zero(ring, n);
        for i in 0..n {
            match &mut m.data {
                Entries::Exact(v) => v[i * n + i] = Rational::one(),
                Entries::Residue(v) => v[i * n + i] = 1,
            }
        }
        m
    }

    /// `value * I`.
    pub fn scalar(ring: RingSpec, n: usize, value: &Rational) -> Result<Self> {
        Self::identity(ring, n).scalar_mul(value)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub(crate) fn entries(&self) -> &Entries {
        &self.data
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        match &self.data {
            Entries::Exact(v) => v[i * self.n + j].clone(),
            Entries::Residue(v) => Rational::from(v[i * self.n + j]),
        }
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Entries in row-major order as rationals.
    pub fn to_rationals(&self) -> Vec<Rational> {
        match &self.data {
            Entries::Exact(v) => v.clone(),
            Entries::Residue(v) => v.iter().map(|&x| Rational::from(x)).collect(),
        }
    }

    /// Canonical residues in row-major order, for finite rings.
    pub fn residues(&self) -> Option<&[u64]> {
        match &self.data {
            Entries::Residue(v) => Some(v),
            Entries::Exact(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Entries::Exact(v) => v.iter().all(Rational::is_zero),
            Entries::Residue(v) => v.iter().all(|&x| x == 0),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.ring, self.n)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &Self,
        exact: impl Fn(&Rational, &Rational) -> Rational,
        residue: impl Fn(u64, u64, u64) -> u64,
    ) -> Result<Self> {
        self.check_compatible(other)?;
        let data = match (&self.data, &other.data) {
            (Entries::Exact(a), Entries::Exact(b)) => {
                Entries::Exact(a.iter().zip(b).map(|(x, y)| exact(x, y)).collect())
            }
            (Entries::Residue(a), Entries::Residue(b)) => {
                let m = self.ring.modulus().expect("finite ring");
                Entries::Residue(a.iter().zip(b).map(|(&x, &y)| residue(x, y, m)).collect())
            }
            _ => unreachable!("storage follows the ring"),
        };
        Ok(SquareMatrix { ring: self.ring, n: self.n, data })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |x, y| x + y, |x, y, m| (x + y) % m)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |x, y| x - y, |x, y, m| (x + m - y) % m)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.n;
        let data = match (&self.data, &other.data) {
            (Entries::Exact(a), Entries::Exact(b)) => {
                let mut out = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = Rational::zero();
                        for k in 0..n {
                            let (x, y) = (&a[i * n + k], &b[k * n + j]);
                            if !x.is_zero() && !y.is_zero() {
                                acc += &(x * y);
                            }
                        }
                        out.push(acc);
                    }
                }
                Entries::Exact(out)
            }
            (Entries::Residue(a), Entries::Residue(b)) => {
                let m = self.ring.modulus().expect("finite ring");
                let mut out = vec![0u64; n * n];
                for i in 0..n {
                    for k in 0..n {
                        let x = a[i * n + k];
                        if x == 0 {
                            continue;
                        }
                        for j in 0..n {
                            out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % m;
                        }
                    }
                }
                Entries::Residue(out)
            }
            _ => unreachable!("storage follows the ring"),
        };
        Ok(SquareMatrix { ring: self.ring, n, data })
    }

    /// Multiplies every entry by `c`, which must be an element of the ring.
    pub fn scalar_mul(&self, c: &Rational) -> Result<Self> {
        let data = match (&self.data, embed(self.ring, c)?) {
            (Entries::Exact(v), None) => Entries::Exact(v.iter().map(|x| x * c).collect()),
            (Entries::Residue(v), Some(r)) => {
                let m = self.ring.modulus().expect("finite ring");
                Entries::Residue(v.iter().map(|&x| x * r % m).collect())
            }
            _ => unreachable!("storage follows the ring"),
        };
        Ok(SquareMatrix { ring: self.ring, n: self.n, data })
    }

    /// `self^k` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.ring, self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let data = match &self.data {
            Entries::Exact(v) => {
                Entries::Exact((0..n * n).map(|t| v[(t % n) * n + t / n].clone()).collect())
            }
            Entries::Residue(v) => {
                Entries::Residue((0..n * n).map(|t| v[(t % n) * n + t / n]).collect())
            }
        };
        SquareMatrix { ring: self.ring, n, data }
    }

    /// Reinterprets the entries in another ring (e.g. the embedding Z -> Q or
    /// the reduction Z -> Z/n).
    pub fn to_ring(&self, target: RingSpec) -> Result<Self> {
        Self::from_rows(target, self.rows())
    }

    /// The matrix with index `idx` in the row-major lexicographic enumeration
    /// of `M_n(R)` for a finite ring (entry `(0,0)` is the most significant digit).
    pub fn from_index(ring: RingSpec, n: usize, mut idx: u64) -> Self {
        let m = ring.order().expect("enumeration needs a finite ring");
        let mut data = vec![0u64; n * n];
        for slot in data.iter_mut().rev() {
            *slot = idx % m;
            idx /= m;
        }
        Self::from_residues(ring, n, data)
    }

    /// Inverse of [`SquareMatrix::from_index`].
    pub fn lex_index(&self) -> Option<u64> {
        let m = self.ring.order()?;
        self.residues().map(|v| v.iter().fold(0, |acc, &x| acc * m + x))
    }

    /// Whether the matrix is nilpotent; returns the smallest `k >= 1` with
    /// `A^k = 0`. Powers are tested up to [`RingSpec::nilpotency_bound`].
    pub fn nilpotency_degree(&self) -> Option<u32> {
        let bound = self.ring.nilpotency_bound(self.n);
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_zero() {
                return Some(k);
            }
            p = &p * self;
        }
        None
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_degree().is_some()
    }

    /// Membership in the Jacobson radical of the matrix ring: `M_k(m Z/n)`
    /// over `Z/n`, and `{0}` over fields and Z.
    pub fn in_radical(&self) -> bool {
        match (self.ring.kind(), &self.data) {
            (RingKind::ResidueRing(_), Entries::Residue(v)) => {
                let m = self.ring.radical_modulus().expect("residue ring");
                v.iter().all(|&x| x % m == 0)
            }
            _ => self.is_zero(),
        }
    }

    /// Unit test in the matrix ring without producing the inverse.
    pub fn is_invertible(&self) -> bool {
        match self.ring.kind() {
            RingKind::Rationals | RingKind::PrimeField(_) => self.rank().expect("field") == self.n,
            RingKind::Integers => {
                let d = self.det();
                d == 1 || d == -1
            }
            RingKind::ResidueRing(m) => {
                let d = self.det().to_i64().expect("residue") as u64;
                crate::ring::gcd_u64(d, m) == 1
            }
        }
    }
}

impl fmt::Display for SquareMatrix {
    /// `[[a,b],[c,d]]` with entries in exact rational syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.ring, self)
    }
}

impl Add for &SquareMatrix {
    type Output = SquareMatrix;
    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.checked_add(rhs).expect("matrix addition")
    }
}

impl Sub for &SquareMatrix {
    type Output = SquareMatrix;
    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.checked_sub(rhs).expect("matrix subtraction")
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;
    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        self.checked_mul(rhs).expect("matrix multiplication")
    }
}

impl Neg for &SquareMatrix {
    type Output = SquareMatrix;
    fn neg(self) -> SquareMatrix {
        self.scalar_mul(&Rational::from(-1i64)).expect("-1 lies in every ring")
    }
}
