use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::ring::RingSpec;

/// One entry where the two sides of a relation disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDiff {
    pub relation: String,
    pub row: usize,
    pub col: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Both sides of `bdb = bac` and `dbd = acd`, with every differing entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub bdb: SquareMatrix,
    pub bac: SquareMatrix,
    pub dbd: SquareMatrix,
    pub acd: SquareMatrix,
    pub first_holds: bool,
    pub second_holds: bool,
    pub differences: Vec<EntryDiff>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.first_holds && self.second_holds
    }
}

fn diffs(relation: &str, lhs: &SquareMatrix, rhs: &SquareMatrix, out: &mut Vec<EntryDiff>) {
    let n = lhs.dim();
    for row in 0..n {
        for col in 0..n {
            let (l, r) = (lhs.entry(row, col), rhs.entry(row, col));
            if l != r {
                out.push(EntryDiff { relation: relation.to_string(), row, col, lhs: l, rhs: r });
            }
        }
    }
}

/// Evaluates both intertwining relations without judging them.
pub fn check_relations(
    a: &SquareMatrix,
    b: &SquareMatrix,
    c: &SquareMatrix,
    d: &SquareMatrix,
) -> Result<RelationReport> {
    let bd = b.checked_mul(d)?;
    let ac = a.checked_mul(c)?;
    let bdb = bd.checked_mul(b)?;
    let bac = b.checked_mul(&ac)?;
    let dbd = d.checked_mul(&bd)?;
    let acd = ac.checked_mul(d)?;
    let mut differences = Vec::new();
    diffs("bdb=bac", &bdb, &bac, &mut differences);
    diffs("dbd=acd", &dbd, &acd, &mut differences);
    Ok(RelationReport {
        first_holds: bdb == bac,
        second_holds: dbd == acd,
        bdb,
        bac,
        dbd,
        acd,
        differences,
    })
}

/// Four matrices over one ring satisfying `bdb = bac` and `dbd = acd`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Quadruple {
    a: SquareMatrix,
    b: SquareMatrix,
    c: SquareMatrix,
    d: SquareMatrix,
}

impl Quadruple {
    /// Validates the relations; the error carries the full [`RelationReport`].
    pub fn new(a: SquareMatrix, b: SquareMatrix, c: SquareMatrix, d: SquareMatrix) -> Result<Self> {
        let report = check_relations(&a, &b, &c, &d)?;
        if !report.holds() {
            return Err(Error::RelationViolation(Box::new(report)));
        }
        Ok(Quadruple { a, b, c, d })
    }

    /// `(a, b, b, a)`: both relations hold for any `a`, `b`.
    pub fn classical(a: SquareMatrix, b: SquareMatrix) -> Result<Self> {
        Self::new(a.clone(), b.clone(), b, a)
    }

    pub(crate) fn new_unchecked(
        a: SquareMatrix,
        b: SquareMatrix,
        c: SquareMatrix,
        d: SquareMatrix,
    ) -> Self {
        debug_assert!(check_relations(&a, &b, &c, &d).unwrap().holds());
        Quadruple { a, b, c, d }
    }

    pub fn a(&self) -> &SquareMatrix {
        &self.a
    }
    pub fn b(&self) -> &SquareMatrix {
        &self.b
    }
    pub fn c(&self) -> &SquareMatrix {
        &self.c
    }
    pub fn d(&self) -> &SquareMatrix {
        &self.d
    }

    pub fn parts(&self) -> [&SquareMatrix; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn ring(&self) -> RingSpec {
        self.a.ring()
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn ac(&self) -> SquareMatrix {
        &self.a * &self.c
    }

    pub fn bd(&self) -> SquareMatrix {
        &self.b * &self.d
    }

    /// `(a/λ, b, c, d/λ)`, which satisfies both relations again: each side of
    /// `bdb = bac` scales by `1/λ` and each side of `dbd = acd` by `1/λ²`.
    pub fn scaled(&self, lambda: &Rational) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        let inv = lambda.recip()?;
        let a = self.a.scalar_mul(&inv)?;
        let d = self.d.scalar_mul(&inv)?;
        Quadruple::new(a, self.b.clone(), self.c.clone(), d)
    }

    /// The same quadruple read in another ring (e.g. Z embedded in Q).
    pub fn to_ring(&self, ring: RingSpec) -> Result<Self> {
        Quadruple::new(
            self.a.to_ring(ring)?,
            self.b.to_ring(ring)?,
            self.c.to_ring(ring)?,
            self.d.to_ring(ring)?,
        )
    }
}

/// Accepts `(a, b, c, d)` as a [`Quadruple`] or rejects it with a report of
/// which relation fails and where.
pub fn verify_intertwining(
    a: &SquareMatrix,
    b: &SquareMatrix,
    c: &SquareMatrix,
    d: &SquareMatrix,
) -> Result<Quadruple> {
    Quadruple::new(a.clone(), b.clone(), c.clone(), d.clone())
}
