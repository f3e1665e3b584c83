//! Gauss-Jordan elimination over the two supported field kinds, written once
//! against a small `Field` trait and instantiated for Q and GF(p).

use super::{Entries, SquareMatrix};
use crate::arith::Rational;
use crate::error::{Error, Result, SingularReason};
use crate::ring::{inv_mod, RingKind, RingSpec};

pub(crate) trait Field {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, x: &Self::E) -> bool;
    fn add(&self, x: &Self::E, y: &Self::E) -> Self::E;
    fn sub(&self, x: &Self::E, y: &Self::E) -> Self::E;
    fn mul(&self, x: &Self::E, y: &Self::E) -> Self::E;
    fn neg(&self, x: &Self::E) -> Self::E;
    fn inv(&self, x: &Self::E) -> Self::E;
    fn load(&self, m: &SquareMatrix) -> Vec<Self::E>;
    fn store(&self, ring: RingSpec, n: usize, v: Vec<Self::E>) -> SquareMatrix;
    fn embed(&self, x: &Rational) -> Self::E;
    fn to_rational(&self, x: &Self::E) -> Rational;
}

pub(crate) struct QField;

impl Field for QField {
    type E = Rational;
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, x: &Rational) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &Rational, y: &Rational) -> Rational {
        x + y
    }
    fn sub(&self, x: &Rational, y: &Rational) -> Rational {
        x - y
    }
    fn mul(&self, x: &Rational, y: &Rational) -> Rational {
        x * y
    }
    fn neg(&self, x: &Rational) -> Rational {
        -x
    }
    fn inv(&self, x: &Rational) -> Rational {
        x.recip().expect("pivot is nonzero")
    }
    fn load(&self, m: &SquareMatrix) -> Vec<Rational> {
        m.to_rationals()
    }
    fn store(&self, ring: RingSpec, n: usize, v: Vec<Rational>) -> SquareMatrix {
        SquareMatrix::from_exact(ring, n, v)
    }
    fn embed(&self, x: &Rational) -> Rational {
        x.clone()
    }
    fn to_rational(&self, x: &Rational) -> Rational {
        x.clone()
    }
}

pub(crate) struct Fp(pub u64);

impl Field for Fp {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn add(&self, x: &u64, y: &u64) -> u64 {
        (x + y) % self.0
    }
    fn sub(&self, x: &u64, y: &u64) -> u64 {
        (x + self.0 - y) % self.0
    }
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        x * y % self.0
    }
    fn neg(&self, x: &u64) -> u64 {
        (self.0 - x) % self.0
    }
    fn inv(&self, x: &u64) -> u64 {
        inv_mod(*x, self.0).expect("nonzero element of a prime field")
    }
    fn load(&self, m: &SquareMatrix) -> Vec<u64> {
        match m.entries() {
            Entries::Residue(v) => v.clone(),
            Entries::Exact(_) => unreachable!("GF(p) stores residues"),
        }
    }
    fn store(&self, ring: RingSpec, n: usize, v: Vec<u64>) -> SquareMatrix {
        SquareMatrix::from_residues(ring, n, v)
    }
    fn embed(&self, x: &Rational) -> u64 {
        x.reduce_mod(self.0).expect("element of GF(p)")
    }
    fn to_rational(&self, x: &u64) -> Rational {
        Rational::from(*x)
    }
}

/// Runs `$body` with `$f` bound to the field backend of `$ring`, or returns
/// `NotAField`.
macro_rules! with_field {
    ($ring:expr, |$f:ident| $body:expr) => {{
        let ring: RingSpec = $ring;
        match ring.kind() {
            RingKind::Rationals => {
                let $f = &QField;
                $body
            }
            RingKind::PrimeField(p) => {
                let $f = &Fp(p);
                $body
            }
            _ => return Err(Error::NotAField { ring: ring.to_string() }),
        }
    }};
}

/// Dense row-major `rows x cols` buffer.
pub(crate) struct Dense<E> {
    pub rows: usize,
    pub cols: usize,
    pub v: Vec<E>,
}

impl<E: Clone> Dense<E> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.v.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

fn identity_dense<F: Field>(f: &F, n: usize) -> Dense<F::E> {
    let mut v = vec![f.zero(); n * n];
    for i in 0..n {
        v[i * n + i] = f.one();
    }
    Dense { rows: n, cols: n, v }
}

/// Reduces `a` to reduced row echelon form, replaying every row operation
/// on `tracker` (which must have as many rows as `a`). Returns pivot columns.
fn rref<F: Field>(f: &F, a: &mut Dense<F::E>, mut tracker: Option<&mut Dense<F::E>>) -> Vec<usize> {
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&a.v[i * cols + c])) else {
            continue;
        };
        a.swap_rows(r, p);
        if let Some(t) = tracker.as_deref_mut() {
            t.swap_rows(r, p);
        }
        let inv = f.inv(&a.v[r * cols + c]);
        for j in 0..cols {
            a.v[r * cols + j] = f.mul(&a.v[r * cols + j], &inv);
        }
        if let Some(t) = tracker.as_deref_mut() {
            for j in 0..t.cols {
                t.v[r * t.cols + j] = f.mul(&t.v[r * t.cols + j], &inv);
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.v[i * cols + c].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for j in 0..cols {
                let t = f.mul(&factor, &a.v[r * cols + j]);
                a.v[i * cols + j] = f.sub(&a.v[i * cols + j], &t);
            }
            if let Some(t) = tracker.as_deref_mut() {
                for j in 0..t.cols {
                    let s = f.mul(&factor, &t.v[r * t.cols + j]);
                    t.v[i * t.cols + j] = f.sub(&t.v[i * t.cols + j], &s);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Determinant by elimination with partial pivoting.
fn det_in<F: Field>(f: &F, m: &SquareMatrix) -> F::E {
    let n = m.dim();
    let mut a = f.load(m);
    let mut det = f.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !f.is_zero(&a[i * n + c])) else {
            return f.zero();
        };
        if p != c {
            for j in 0..n {
                a.swap(c * n + j, p * n + j);
            }
            det = f.neg(&det);
        }
        let pivot = a[c * n + c].clone();
        det = f.mul(&det, &pivot);
        let inv = f.inv(&pivot);
        for i in c + 1..n {
            let factor = f.mul(&a[i * n + c], &inv);
            if f.is_zero(&factor) {
                continue;
            }
            for j in c..n {
                let t = f.mul(&factor, &a[c * n + j]);
                a[i * n + j] = f.sub(&a[i * n + j], &t);
            }
        }
    }
    det
}

/// Invertible `P`, `Q` and rank `r` with `P A Q = diag(I_r, 0)`.
fn rank_normal_form_in<F: Field>(
    f: &F,
    m: &SquareMatrix,
) -> (Dense<F::E>, Dense<F::E>, usize) {
    let n = m.dim();
    let mut a = Dense { rows: n, cols: n, v: f.load(m) };
    let mut p = identity_dense(f, n);
    let pivots = rref(f, &mut a, Some(&mut p));
    let r = pivots.len();
    // Columns of Q: pivot unit vectors first, then one null vector per free
    // column, so that R Q = diag(I_r, 0) for the echelon form R = P A.
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut q = vec![f.zero(); n * n];
    for (k, &pc) in pivots.iter().enumerate() {
        q[pc * n + k] = f.one();
    }
    for (t, &fc) in free.iter().enumerate() {
        let col = r + t;
        q[fc * n + col] = f.one();
        for (i, &pc) in pivots.iter().enumerate() {
            q[pc * n + col] = f.neg(&a.v[i * n + fc]);
        }
    }
    (p, Dense { rows: n, cols: n, v: q }, r)
}

pub(crate) fn det_field(m: &SquareMatrix) -> Result<Rational> {
    with_field!(m.ring(), |f| Ok(f.to_rational(&det_in(f, m))))
}

/// A particular solution and a nullspace basis of `A x = b`, or `None` if
/// the system is inconsistent. Values are returned as rationals (residues
/// read as integers for GF(p)).
pub(crate) type LinearSolution = (Vec<Rational>, Vec<Vec<Rational>>);

pub(crate) fn solve_linear(
    ring: RingSpec,
    rows: usize,
    cols: usize,
    coeffs: &[Rational],
    rhs: &[Rational],
) -> Result<Option<LinearSolution>> {
    with_field!(ring, |f| {
        let w = cols + 1;
        let mut v = Vec::with_capacity(rows * w);
        for i in 0..rows {
            v.extend(coeffs[i * cols..(i + 1) * cols].iter().map(|x| f.embed(x)));
            v.push(f.embed(&rhs[i]));
        }
        let mut aug = Dense { rows, cols: w, v };
        let pivots = rref(f, &mut aug, None);
        if pivots.last() == Some(&cols) {
            return Ok(None);
        }
        let mut particular = vec![Rational::zero(); cols];
        for (i, &pc) in pivots.iter().enumerate() {
            particular[pc] = f.to_rational(&aug.v[i * w + cols]);
        }
        let basis = (0..cols)
            .filter(|c| !pivots.contains(c))
            .map(|fc| {
                let mut vec = vec![Rational::zero(); cols];
                vec[fc] = Rational::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    vec[pc] = f.to_rational(&f.neg(&aug.v[i * w + fc]));
                }
                vec
            })
            .collect();
        Ok(Some((particular, basis)))
    })
}

fn dense_mul<F: Field>(f: &F, a: &Dense<F::E>, b: &Dense<F::E>) -> Dense<F::E> {
    let (n, k, m) = (a.rows, a.cols, b.cols);
    let mut v = vec![f.zero(); n * m];
    for i in 0..n {
        for t in 0..k {
            let x = &a.v[i * k + t];
            if f.is_zero(x) {
                continue;
            }
            for j in 0..m {
                let prod = f.mul(x, &b.v[t * m + j]);
                v[i * m + j] = f.add(&v[i * m + j], &prod);
            }
        }
    }
    Dense { rows: n, cols: m, v }
}

impl SquareMatrix {
    /// Row rank by exact Gaussian elimination. Fields only.
    pub fn rank(&self) -> Result<usize> {
        with_field!(self.ring(), |f| {
            let n = self.dim();
            let mut a = Dense { rows: n, cols: n, v: f.load(self) };
            Ok(rref(f, &mut a, None).len())
        })
    }

    pub(crate) fn inverse_field(&self) -> Result<SquareMatrix> {
        with_field!(self.ring(), |f| {
            let n = self.dim();
            let mut a = Dense { rows: n, cols: n, v: f.load(self) };
            let mut t = identity_dense(f, n);
            let rank = rref(f, &mut a, Some(&mut t)).len();
            if rank < n {
                return Err(Error::NotInvertible(SingularReason::RankDeficient { rank, dim: n }));
            }
            Ok(f.store(self.ring(), n, t.v))
        })
    }

    /// Invertible `P`, `Q` and the rank `r` with `P A Q = [[I_r, 0], [0, 0]]`.
    pub fn rank_normal_form(&self) -> Result<(SquareMatrix, SquareMatrix, usize)> {
        with_field!(self.ring(), |f| {
            let n = self.dim();
            let (p, q, r) = rank_normal_form_in(f, self);
            Ok((f.store(self.ring(), n, p.v), f.store(self.ring(), n, q.v), r))
        })
    }

    /// An inner (`{1}`-) inverse: some `X` with `A X A = A`.
    ///
    /// Built as `Q diag(I_r, 0) P` from the rank normal form, so it exists
    /// over every field, GF(2) included.
    pub fn inner_inverse(&self) -> Result<SquareMatrix> {
        with_field!(self.ring(), |f| {
            let n = self.dim();
            let (p, q, r) = rank_normal_form_in(f, self);
            let mut proj = Dense { rows: n, cols: n, v: vec![f.zero(); n * n] };
            for i in 0..r {
                proj.v[i * n + i] = f.one();
            }
            let x = dense_mul(f, &dense_mul(f, &q, &proj), &p);
            Ok(f.store(self.ring(), n, x.v))
        })
    }
}
