//! Solving for the fourth matrix of a quadruple.
//!
//! Given `a, b, c`, the relation `b X b = b a c` is linear in `X`; the
//! relation `X b X = a c X` is quadratic and is applied as a filter on the
//! affine solution set of the first.

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::matrix::{solve_linear, SquareMatrix};
use crate::ring::{RingKind, RingSpec};

use super::oracle::all_matrices;

/// Upper limit on candidates visited when scanning a finite solution set.
pub const SCAN_LIMIT: u64 = 1 << 20;

/// Upper limit on integer parameter vectors tried over Q.
pub const RATIONAL_SCAN_LIMIT: u64 = 1 << 12;

/// Coefficients of the linear map `X -> P X Q` on row-major `vec(X)`:
/// entry `((i,j),(k,l)) = P[i][k] * Q[l][j]`.
pub(crate) fn sandwich_coeffs(p: &SquareMatrix, q: &SquareMatrix) -> Vec<Rational> {
    let n = p.dim();
    let (pr, qr) = (p.to_rationals(), q.to_rationals());
    let mut out = Vec::with_capacity(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    out.push(&pr[i * n + k] * &qr[l * n + j]);
                }
            }
        }
    }
    out
}

pub(crate) fn from_vec(ring: RingSpec, n: usize, v: &[Rational]) -> SquareMatrix {
    SquareMatrix::from_rows(ring, v.chunks(n).map(<[Rational]>::to_vec).collect())
        .expect("solution entries lie in the ring")
}

fn combine(particular: &[Rational], basis: &[Vec<Rational>], t: &[i64]) -> Vec<Rational> {
    let mut v = particular.to_vec();
    for (coef, b) in t.iter().zip(basis) {
        if *coef == 0 {
            continue;
        }
        let c = Rational::from(*coef);
        for (slot, x) in v.iter_mut().zip(b) {
            *slot += &(&c * x);
        }
    }
    v
}

/// Advances an odometer over `lo..=hi` per digit; false when it wraps.
fn odometer_step(t: &mut [i64], lo: i64, hi: i64) -> bool {
    for digit in t.iter_mut().rev() {
        if *digit < hi {
            *digit += 1;
            return true;
        }
        *digit = lo;
    }
    false
}

/// Solutions `d` of `b d b = b a c` and `d b d = a c d`, at most `budget` of
/// them, in deterministic order.
///
/// * GF(p): the affine solution set of the linear relation is walked in
///   lexicographic order of its free parameters.
/// * Q: the solution set is infinite; free parameters range over integer
///   vectors in shells of increasing max-norm.
/// * Z/n: the whole ring `M_n(Z/n)` is scanned.
///
/// At most [`SCAN_LIMIT`] candidates are visited ([`RATIONAL_SCAN_LIMIT`]
/// over Q). `NoSolution` means the
/// linear relation alone is inconsistent.
pub fn solve_for_d(
    a: &SquareMatrix,
    b: &SquareMatrix,
    c: &SquareMatrix,
    budget: usize,
) -> Result<Vec<SquareMatrix>> {
    let limit = if a.ring().is_finite() { SCAN_LIMIT } else { RATIONAL_SCAN_LIMIT };
    solve_for_d_limited(a, b, c, budget, limit)
}

/// [`solve_for_d`] visiting at most `limit` candidates over fields.
pub(crate) fn solve_for_d_limited(
    a: &SquareMatrix,
    b: &SquareMatrix,
    c: &SquareMatrix,
    budget: usize,
    limit: u64,
) -> Result<Vec<SquareMatrix>> {
    let ring = a.ring();
    let n = a.dim();
    let ac = a.checked_mul(c)?;
    let bac = b.checked_mul(&ac)?;
    let quadratic = |x: &SquareMatrix| &(x * b) * x == &ac * x;

    if let RingKind::ResidueRing(_) = ring.kind() {
        let all = all_matrices(ring, n, SCAN_LIMIT)?;
        let mut linear_ok = false;
        let mut out = Vec::new();
        for x in all.iter() {
            if &(b * x) * b != bac {
                continue;
            }
            linear_ok = true;
            if quadratic(x) {
                out.push(x.clone());
                if out.len() >= budget {
                    break;
                }
            }
        }
        return if linear_ok { Ok(out) } else { Err(Error::NoSolution) };
    }
    if !ring.is_field() {
        return Err(Error::UnsupportedRing { ring: ring.to_string(), operation: "solve_for_d" });
    }

    let m = n * n;
    let coeffs = sandwich_coeffs(b, b);
    let rhs = bac.to_rationals();
    let (particular, basis) = solve_linear(ring, m, m, &coeffs, &rhs)?.ok_or(Error::NoSolution)?;
    let k = basis.len();
    let mut out = Vec::new();
    let mut visited = 0u64;
    let mut consider = |t: &[i64], out: &mut Vec<SquareMatrix>| -> bool {
        visited += 1;
        let x = from_vec(ring, n, &combine(&particular, &basis, t));
        if quadratic(&x) && !out.contains(&x) {
            out.push(x);
        }
        out.len() < budget && visited < limit
    };

    match ring.modulus() {
        Some(p) => {
            let mut t = vec![0i64; k];
            loop {
                if !consider(&t, &mut out) || !odometer_step(&mut t, 0, p as i64 - 1) {
                    break;
                }
            }
        }
        None => {
            'shells: for r in 0i64.. {
                let mut t = vec![-r; k];
                loop {
                    let on_shell = t.iter().map(|x| x.abs()).max().unwrap_or(0) == r;
                    if on_shell && !consider(&t, &mut out) {
                        break 'shells;
                    }
                    if !odometer_step(&mut t, -r, r) {
                        break;
                    }
                }
                if k == 0 {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Basis of `{ X : X -> P X Q maps to zero for every (P, Q) pair }`.
pub(crate) fn joint_nullspace(
    ring: RingSpec,
    n: usize,
    maps: &[(&SquareMatrix, &SquareMatrix)],
) -> Result<Vec<Vec<Rational>>> {
    let m = n * n;
    let mut coeffs = Vec::with_capacity(maps.len() * m * m);
    for (p, q) in maps {
        coeffs.extend(sandwich_coeffs(p, q));
    }
    let rows = maps.len() * m;
    let rhs = vec![Rational::zero(); rows];
    let (_, basis) = solve_linear(ring, rows, m, &coeffs, &rhs)?.expect("homogeneous system");
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drazin::verify_intertwining;

    #[test]
    fn recovers_the_intertwined_fixture() {
        let q = RingSpec::rationals();
        let a = SquareMatrix::from_ints(q, [[0, 1], [0, 0]]);
        let b = SquareMatrix::from_ints(q, [[0, 0], [0, 1]]);
        let c = SquareMatrix::from_ints(q, [[1, 0], [1, 1]]);
        let d = SquareMatrix::from_ints(q, [[1, 0], [-1, 0]]);
        let sols = solve_for_d(&a, &b, &c, 64).unwrap();
        assert!(sols.contains(&d), "{sols:?}");
        for s in &sols {
            verify_intertwining(&a, &b, &c, s).unwrap();
        }
    }

    #[test]
    fn identity_forces_identity() {
        let q = RingSpec::rationals();
        let i = SquareMatrix::identity(q, 3);
        assert_eq!(solve_for_d(&i, &i, &i, 10).unwrap(), vec![i]);
    }

    #[test]
    fn zero_b_over_gf2() {
        // With b = 0 the linear relation is vacuous and the quadratic one is
        // ac X = 0. Brute force over all 16 matrices for comparison.
        let r = RingSpec::prime_field(2).unwrap();
        let a = SquareMatrix::from_ints(r, [[1, 1], [0, 0]]);
        let c = SquareMatrix::from_ints(r, [[1, 0], [0, 1]]);
        let b = SquareMatrix::zero(r, 2);
        let mut sols = solve_for_d(&a, &b, &c, 100).unwrap();
        let ac = &a * &c;
        let mut expected: Vec<_> = (0..16)
            .map(|i| SquareMatrix::from_index(r, 2, i))
            .filter(|x| (&ac * x).is_zero())
            .collect();
        let key = |m: &SquareMatrix| m.lex_index().unwrap();
        sols.sort_by_key(key);
        expected.sort_by_key(key);
        assert_eq!(sols, expected);
        assert_eq!(sols.len(), 4);
    }

    #[test]
    fn inconsistent_linear_relation() {
        let q = RingSpec::rationals();
        // b = e11: b X b = X11 e11, but b a c = e12 can never match.
        let b = SquareMatrix::from_ints(q, [[1, 0], [0, 0]]);
        let a = SquareMatrix::from_ints(q, [[1, 0], [0, 0]]);
        let c = SquareMatrix::from_ints(q, [[0, 1], [0, 0]]);
        assert!(matches!(solve_for_d(&a, &b, &c, 4), Err(Error::NoSolution)));
    }

    #[test]
    fn residue_ring_scan() {
        let r = RingSpec::residue(4).unwrap();
        let a = SquareMatrix::from_ints(r, [[1, 2], [0, 3]]);
        let b = SquareMatrix::from_ints(r, [[2, 0], [1, 1]]);
        let c = SquareMatrix::from_ints(r, [[0, 1], [1, 0]]);
        match solve_for_d(&a, &b, &c, 300) {
            Ok(sols) => {
                for s in &sols {
                    verify_intertwining(&a, &b, &c, s).unwrap();
                }
            }
            Err(Error::NoSolution) => {}
            Err(e) => panic!("{e}"),
        }
        assert!(solve_for_d(
            &SquareMatrix::identity(RingSpec::integers(), 2),
            &SquareMatrix::identity(RingSpec::integers(), 2),
            &SquareMatrix::identity(RingSpec::integers(), 2),
            1
        )
        .is_err());
    }
}
