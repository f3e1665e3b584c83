//! Seeded random matrices and quadruples.
//!
//! Random matrices over Q are drawn from a mixture of shapes (dense, sparse,
//! low rank, nilpotent-heavy, small fractions) so that singular matrices and
//! higher indices turn up often.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Rational;
use crate::drazin::Quadruple;
use crate::error::Result;
use crate::matrix::SquareMatrix;
use crate::ring::{RingKind, RingSpec};

use super::solve::{from_vec, joint_nullspace, solve_for_d_limited};

/// Default seed of every sampler.
pub const DEFAULT_SEED: u64 = 0x5EED;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_int(rng: &mut impl Rng, r: i64) -> Rational {
    Rational::from(rng.random_range(-r..=r))
}

fn exact_matrix(ring: RingSpec, n: usize, f: impl FnMut(usize, usize) -> Rational) -> SquareMatrix {
    let mut f = f;
    let rows = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
    SquareMatrix::from_rows(ring, rows).expect("entries lie in the ring")
}

/// A random `n x n` matrix: uniform over finite rings, a mixture of shapes
/// with small entries over Q and Z.
pub fn random_matrix(rng: &mut impl Rng, ring: RingSpec, n: usize) -> SquareMatrix {
    if let Some(m) = ring.modulus() {
        let data = (0..n * n).map(|_| rng.random_range(0..m)).collect();
        return SquareMatrix::from_residues(ring, n, data);
    }
    let styles = if ring.kind() == RingKind::Rationals { 5 } else { 4 };
    match rng.random_range(0..styles) {
        0 => exact_matrix(ring, n, |_, _| small_int(rng, 3)),
        1 => exact_matrix(ring, n, |_, _| {
            if rng.random_bool(0.4) {
                small_int(rng, 1)
            } else {
                Rational::zero()
            }
        }),
        2 => {
            let r = rng.random_range(0..n.max(1));
            let u = exact_matrix(ring, n, |_, j| if j < r { small_int(rng, 2) } else { Rational::zero() });
            let v = exact_matrix(ring, n, |i, _| if i < r { small_int(rng, 2) } else { Rational::zero() });
            &u * &v
        }
        3 => {
            // upper triangular with some zero diagonal entries
            exact_matrix(ring, n, |i, j| match i.cmp(&j) {
                std::cmp::Ordering::Less => small_int(rng, 2),
                std::cmp::Ordering::Equal if rng.random_bool(0.5) => small_int(rng, 2),
                _ => Rational::zero(),
            })
        }
        _ => exact_matrix(ring, n, |_, _| {
            let den = rng.random_range(1..=3i64);
            Rational::new(rng.random_range(-3..=3i64), den).expect("nonzero denominator")
        }),
    }
}

/// Ways of drawing a quadruple over Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `(a, b, b, a)`.
    Classical,
    /// Unit `b`: `d = a c b^-1` is the only solution.
    InvertibleB,
    /// `d` from [`super::solve_for_d`] for random `a, b, c`.
    SolveForD,
    /// `c = b + k`, `d = a + m` with `mb = 0`, `bak = 0`, `aka = 0`, `akm = 0`.
    Perturbed,
}

impl Family {
    pub const ALL: [Family; 4] =
        [Family::Classical, Family::InvertibleB, Family::SolveForD, Family::Perturbed];
}

fn random_combination(rng: &mut impl Rng, ring: RingSpec, n: usize, basis: &[Vec<Rational>]) -> SquareMatrix {
    let mut v = vec![Rational::zero(); n * n];
    for b in basis {
        let t = small_int(rng, 2);
        for (slot, x) in v.iter_mut().zip(b) {
            *slot += &(&t * x);
        }
    }
    from_vec(ring, n, &v)
}

fn perturbed(rng: &mut impl Rng, ring: RingSpec, n: usize) -> Result<Quadruple> {
    let a = random_matrix(rng, ring, n);
    let b = random_matrix(rng, ring, n);
    let id = SquareMatrix::identity(ring, n);
    let ba = &b * &a;
    let k_basis = joint_nullspace(ring, n, &[(&ba, &id), (&a, &a)])?;
    let k = random_combination(rng, ring, n, &k_basis);
    let ak = &a * &k;
    let m_basis = joint_nullspace(ring, n, &[(&id, &b), (&ak, &id)])?;
    let m = random_combination(rng, ring, n, &m_basis);
    let c = &b + &k;
    let d = &a + &m;
    Quadruple::new(a, b, c, d)
}

/// Draws one quadruple of the given family over `ring` (Q or another field).
pub fn random_quadruple(
    rng: &mut impl Rng,
    ring: RingSpec,
    n: usize,
    family: Family,
) -> Result<Quadruple> {
    match family {
        Family::Classical => {
            let a = random_matrix(rng, ring, n);
            let b = random_matrix(rng, ring, n);
            Quadruple::classical(a, b)
        }
        Family::InvertibleB => {
            let b = loop {
                let b = random_matrix(rng, ring, n);
                if b.is_invertible() {
                    break b;
                }
            };
            let a = random_matrix(rng, ring, n);
            let c = random_matrix(rng, ring, n);
            let d = &(&a * &c) * &b.inverse()?;
            Quadruple::new(a, b, c, d)
        }
        Family::SolveForD => {
            for _ in 0..8 {
                let a = random_matrix(rng, ring, n);
                let b = random_matrix(rng, ring, n);
                let c = random_matrix(rng, ring, n);
                let sols = match solve_for_d_limited(&a, &b, &c, 4, 256) {
                    Ok(s) => s,
                    Err(crate::error::Error::NoSolution) => continue,
                    Err(e) => return Err(e),
                };
                if !sols.is_empty() {
                    let d = sols[rng.random_range(0..sols.len())].clone();
                    return Quadruple::new(a, b, c, d);
                }
            }
            perturbed(rng, ring, n)
        }
        Family::Perturbed => perturbed(rng, ring, n),
    }
}

/// `count` quadruples over Q with `1 <= n <= 4`, cycling through every
/// [`Family`]. Deterministic in `seed`.
pub fn seeded_suite(seed: u64, count: usize) -> Result<Vec<Quadruple>> {
    let mut rng = rng(seed);
    let ring = RingSpec::rationals();
    (0..count)
        .map(|i| {
            let n = rng.random_range(1..=4usize);
            random_quadruple(&mut rng, ring, n, Family::ALL[i % Family::ALL.len()])
        })
        .collect()
}

/// `count` pairs `(a, b)` over Q with `1 <= n <= 4`.
pub fn seeded_pairs(seed: u64, count: usize) -> Vec<(SquareMatrix, SquareMatrix)> {
    let mut rng = rng(seed);
    let ring = RingSpec::rationals();
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=4usize);
            (random_matrix(&mut rng, ring, n), random_matrix(&mut rng, ring, n))
        })
        .collect()
}
