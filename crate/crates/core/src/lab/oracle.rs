//! Brute-force oracles over finite matrix rings.
//!
//! Everything here works straight from the definitions by enumerating
//! `M_n(R)`: commutants, the literal double-commutant condition,
//! quasinilpotence (`1 + a x` a unit for every `x` commuting with `a`), and
//! every candidate inverse of a given flavor. None of it shares code paths
//! with the constructive routines in [`crate::drazin`] beyond matrix
//! multiplication and the determinant-based unit test.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::drazin::{certify, Check, CheckKind, DrazinCertificate, InverseFlavor, Quadruple};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::ring::RingSpec;

/// Default cap on the number of candidates any enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 16;

/// `|R|^(n^2)`, saturating.
pub fn universe_size(ring: RingSpec, n: usize) -> Option<u128> {
    let order = ring.order()? as u128;
    let mut total: u128 = 1;
    for _ in 0..n * n {
        total = total.saturating_mul(order);
    }
    Some(total)
}

fn require_finite(ring: RingSpec, operation: &'static str) -> Result<()> {
    if ring.is_finite() {
        Ok(())
    } else {
        Err(Error::UnsupportedRing { ring: ring.to_string(), operation })
    }
}

type UniverseCache = Mutex<HashMap<(RingSpec, usize), Arc<Vec<SquareMatrix>>>>;

/// Every matrix of `M_n(R)` in row-major lexicographic order, cached per
/// `(ring, n)`.
pub fn all_matrices(ring: RingSpec, n: usize, budget: u64) -> Result<Arc<Vec<SquareMatrix>>> {
    require_finite(ring, "enumeration")?;
    let size = universe_size(ring, n).expect("finite ring");
    if size > budget as u128 {
        return Err(Error::BudgetExceeded { required: size, budget });
    }
    static CACHE: OnceLock<UniverseCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&(ring, n)) {
        return Ok(hit.clone());
    }
    let all: Arc<Vec<SquareMatrix>> =
        Arc::new((0..size as u64).map(|i| SquareMatrix::from_index(ring, n, i)).collect());
    cache.lock().expect("cache lock").insert((ring, n), all.clone());
    Ok(all)
}

fn commutant_in(universe: &[SquareMatrix], a: &SquareMatrix) -> Vec<SquareMatrix> {
    universe.iter().filter(|x| (*x * a) == (a * *x)).cloned().collect()
}

/// `comm(a) = { x : x a = a x }`, in enumeration order.
pub fn commutant(a: &SquareMatrix, budget: u64) -> Result<Vec<SquareMatrix>> {
    let all = all_matrices(a.ring(), a.dim(), budget)?;
    Ok(commutant_in(&all, a))
}

fn commutes_with_all(x: &SquareMatrix, set: &[SquareMatrix]) -> bool {
    set.iter().all(|y| (x * y) == (y * x))
}

/// Whether `x` lies in `comm²(a)`, i.e. commutes with all of `comm(a)`.
pub fn double_commutant_check(a: &SquareMatrix, x: &SquareMatrix, budget: u64) -> Result<bool> {
    Ok(commutes_with_all(x, &commutant(a, budget)?))
}

/// Some `x` in `comm(a)` with `1 + a x` not a unit, or `None` if `a` is
/// quasinilpotent.
pub fn qnil_witness(a: &SquareMatrix, budget: u64) -> Result<Option<SquareMatrix>> {
    let id = SquareMatrix::identity(a.ring(), a.dim());
    Ok(commutant(a, budget)?
        .into_iter()
        .find(|x| !(&id + &(a * x)).is_invertible()))
}

/// Quasinilpotence from the definition: `1 + a x` is a unit for every `x`
/// commuting with `a`.
pub fn is_qnil_by_definition(a: &SquareMatrix, budget: u64) -> Result<bool> {
    Ok(qnil_witness(a, budget)?.is_none())
}

/// Every `x` in `M_n(R)` that satisfies the axioms of `flavor` for `a`, with
/// the double-commutant condition checked literally. For the Drazin and
/// g-Drazin flavors the result has at most one element.
pub fn brute_force_inverse(
    a: &SquareMatrix,
    flavor: InverseFlavor,
    budget: u64,
) -> Result<Vec<DrazinCertificate>> {
    let all = all_matrices(a.ring(), a.dim(), budget)?;
    let comm = commutant_in(&all, a);
    let mut found = Vec::new();
    for x in all.iter() {
        let xa = x * a;
        if xa != a * x || &xa * x != *x || !commutes_with_all(x, &comm) {
            continue;
        }
        let mut cert = certify(a, x, flavor)?;
        if !cert.valid {
            continue;
        }
        cert.transcript.push(Check {
            check: CheckKind::DoubleCommutant,
            pass: true,
            witness: Some(format!("|comm(a)|={}", comm.len())),
        });
        found.push(cert);
    }
    Ok(found)
}

/// Brute-forced inverses of one flavor for every matrix of `M_n(R)`,
/// computed in parallel and indexed by lexicographic position.
pub struct InverseTable {
    ring: RingSpec,
    n: usize,
    flavor: InverseFlavor,
    entries: Vec<Vec<DrazinCertificate>>,
}

impl InverseTable {
    pub fn build(ring: RingSpec, n: usize, flavor: InverseFlavor, budget: u64) -> Result<Self> {
        let all = all_matrices(ring, n, budget)?;
        let entries = all
            .par_iter()
            .map(|a| brute_force_inverse(a, flavor, budget))
            .collect::<Result<Vec<_>>>()?;
        Ok(InverseTable { ring, n, flavor, entries })
    }

    pub fn flavor(&self) -> InverseFlavor {
        self.flavor
    }

    pub fn get(&self, a: &SquareMatrix) -> &[DrazinCertificate] {
        assert!(a.ring() == self.ring && a.dim() == self.n, "matrix outside the table");
        &self.entries[a.lex_index().expect("finite ring") as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[DrazinCertificate]> {
        self.entries.iter().map(Vec::as_slice)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QnilTransferReport {
    /// `definition` over finite rings, `nilpotency` otherwise.
    pub method: String,
    pub ac_qnil: bool,
    pub bd_qnil: bool,
    /// `ac` qnil implies `bd` qnil.
    pub holds: bool,
    /// On violation: some `x` commuting with `bd` for which `1 + bd x` is singular.
    pub witness: Option<SquareMatrix>,
}

/// If `ac` is quasinilpotent, `bd` must be too.
pub fn qnil_transfer_check(q: &Quadruple) -> Result<QnilTransferReport> {
    let (ac, bd) = (q.ac(), q.bd());
    if q.ring().is_finite() {
        let ac_qnil = is_qnil_by_definition(&ac, DEFAULT_BUDGET)?;
        let bd_witness = qnil_witness(&bd, DEFAULT_BUDGET)?;
        let bd_qnil = bd_witness.is_none();
        Ok(QnilTransferReport {
            method: "definition".into(),
            ac_qnil,
            bd_qnil,
            holds: !ac_qnil || bd_qnil,
            witness: if ac_qnil { bd_witness } else { None },
        })
    } else {
        let ac_qnil = ac.is_nilpotent();
        let bd_qnil = bd.is_nilpotent();
        Ok(QnilTransferReport {
            method: "nilpotency".into(),
            ac_qnil,
            bd_qnil,
            holds: !ac_qnil || bd_qnil,
            witness: None,
        })
    }
}
