//! Coefficient rings.
//!
//! Four kinds are supported: the rationals, the integers, prime fields
//! `GF(p)` and residue rings `Z/n`. The ring descriptor decides how units,
//! nilpotents and the Jacobson radical are tested for matrices over it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Moduli must stay below this so that residue products fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Rationals,
    Integers,
    PrimeField(u64),
    ResidueRing(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    kind: RingKind,
}

impl RingSpec {
    pub const fn rationals() -> Self {
        RingSpec { kind: RingKind::Rationals }
    }

    pub const fn integers() -> Self {
        RingSpec { kind: RingKind::Integers }
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::InvalidRing(format!("modulus {p} too large")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("GF({p}): {p} is not prime")));
        }
        Ok(RingSpec { kind: RingKind::PrimeField(p) })
    }

    pub fn residue(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Z/{n}: modulus must be at least 2")));
        }
        if n >= MAX_MODULUS {
            return Err(Error::InvalidRing(format!("modulus {n} too large")));
        }
        Ok(RingSpec { kind: RingKind::ResidueRing(n) })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn is_field(&self) -> bool {
        matches!(self.kind, RingKind::Rationals | RingKind::PrimeField(_))
    }

    pub fn is_finite(&self) -> bool {
        self.modulus().is_some()
    }

    /// Whether entries are stored as exact rationals (Q and Z) rather than residues.
    pub fn is_exact(&self) -> bool {
        !self.is_finite()
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.kind {
            RingKind::PrimeField(p) | RingKind::ResidueRing(p) => Some(p),
            _ => None,
        }
    }

    /// Number of ring elements, for finite rings.
    pub fn order(&self) -> Option<u64> {
        self.modulus()
    }

    /// For `Z/n`: the product of the distinct primes dividing `n`, so that
    /// the radical of `Z/n` is `m Z/n`. Prime fields report `p` (radical zero).
    pub fn radical_modulus(&self) -> Option<u64> {
        match self.kind {
            RingKind::ResidueRing(n) => Some(factorize(n).iter().map(|&(p, _)| p).product()),
            RingKind::PrimeField(p) => Some(p),
            _ => None,
        }
    }

    /// Largest prime exponent in the modulus (1 for fields and Z).
    pub fn max_prime_exponent(&self) -> u32 {
        match self.kind {
            RingKind::ResidueRing(n) => factorize(n).iter().map(|&(_, e)| e).max().unwrap_or(1),
            _ => 1,
        }
    }

    /// Upper bound on the nilpotency degree of an `n x n` nilpotent matrix.
    pub fn nilpotency_bound(&self, n: usize) -> u32 {
        n as u32 * self.max_prime_exponent()
    }

    /// Canonical elements `0..order` of a finite ring.
    pub fn elements(&self) -> Option<std::ops::Range<u64>> {
        self.order().map(|m| 0..m)
    }

    /// Short names used on the command line: `q`, `z`, `gf<p>`, `zmod<n>`.
    pub fn short_name(&self) -> String {
        match self.kind {
            RingKind::Rationals => "q".into(),
            RingKind::Integers => "z".into(),
            RingKind::PrimeField(p) => format!("gf{p}"),
            RingKind::ResidueRing(n) => format!("zmod{n}"),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::Rationals => write!(f, "Q"),
            RingKind::Integers => write!(f, "Z"),
            RingKind::PrimeField(p) => write!(f, "GF({p})"),
            RingKind::ResidueRing(n) => write!(f, "Z/{n}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Accepts the short names (`gf2`, `zmod4`, `q`, `z`) as well as `Q`, `Z`,
    /// `GF(p)` and `Z/n`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let num = |x: &str| -> Result<u64> {
            x.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("invalid ring {s:?}")))
        };
        if t == "q" {
            Ok(RingSpec::rationals())
        } else if t == "z" {
            Ok(RingSpec::integers())
        } else if let Some(rest) = t.strip_prefix("zmod").or_else(|| t.strip_prefix("z/")) {
            RingSpec::residue(num(rest)?)
        } else if let Some(rest) = t.strip_prefix("gf") {
            let rest = rest.trim_start_matches('(').trim_end_matches(')');
            RingSpec::prime_field(num(rest)?)
        } else {
            Err(Error::Parse(format!("invalid ring {s:?}")))
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    a * b % m
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return if m == 1 { Some(0) } else { None };
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}
