//! Producing quadruples and checking them against brute-force oracles.
//!
//! Quadruples come from exhaustive enumeration over tiny finite rings, from
//! solving the relations for `d` given random `a, b, c`, from the classical
//! family `(a, b, b, a)`, and from the worked fixtures.

mod fixtures;
mod oracle;
mod sample;
mod solve;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::drazin::Quadruple;
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::ring::{RingKind, RingSpec};

pub use fixtures::{fixture_report, Fixture, FixtureReport};
pub use oracle::{
    all_matrices, brute_force_inverse, commutant, double_commutant_check, is_qnil_by_definition,
    qnil_transfer_check, qnil_witness, universe_size, InverseTable, QnilTransferReport,
    DEFAULT_BUDGET,
};
pub use sample::{
    random_matrix, random_quadruple, rng, seeded_pairs, seeded_suite, Family, DEFAULT_SEED,
};
pub use solve::{solve_for_d, RATIONAL_SCAN_LIMIT, SCAN_LIMIT};

/// Solutions kept per draw by the linear-solve strategy.
pub const SOLUTIONS_PER_DRAW: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStrategy {
    /// Every quadruple of `M_n(R)^4` satisfying both relations.
    Exhaustive,
    /// Random `a, b, c` completed by [`solve_for_d`].
    LinearSolve,
    /// Random `(a, b, b, a)`.
    Classical,
    /// The worked fixtures that satisfy the relations.
    PaperFixtures,
}

impl fmt::Display for SearchStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchStrategy::Exhaustive => "exhaustive",
            SearchStrategy::LinearSolve => "linear-solve",
            SearchStrategy::Classical => "classical",
            SearchStrategy::PaperFixtures => "paper-fixtures",
        })
    }
}

impl FromStr for SearchStrategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(SearchStrategy::Exhaustive),
            "linear-solve" => Ok(SearchStrategy::LinearSolve),
            "classical" => Ok(SearchStrategy::Classical),
            "paper-fixtures" => Ok(SearchStrategy::PaperFixtures),
            _ => Err(Error::Parse(format!("unknown search strategy {s:?}"))),
        }
    }
}

/// Where and how to look for quadruples.
///
/// `budget` caps the number of candidate quadruples for the exhaustive
/// strategy and is the number of random draws for the sampling strategies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpace {
    pub ring: RingSpec,
    pub n: usize,
    pub strategy: SearchStrategy,
    pub budget: u64,
    pub seed: u64,
}

impl SearchSpace {
    pub fn new(ring: RingSpec, n: usize, strategy: SearchStrategy, budget: u64, seed: u64) -> Result<Self> {
        let space = SearchSpace { ring, n, strategy, budget, seed };
        space.validate()?;
        Ok(space)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Parse("dimension must be positive".into()));
        }
        match self.strategy {
            SearchStrategy::Exhaustive => {
                let required = self.quadruple_count().ok_or(Error::UnsupportedRing {
                    ring: self.ring.to_string(),
                    operation: "exhaustive enumeration",
                })?;
                if required > self.budget as u128 {
                    return Err(Error::BudgetExceeded { required, budget: self.budget });
                }
            }
            SearchStrategy::LinearSolve => {
                let ok = self.ring.is_field() || matches!(self.ring.kind(), RingKind::ResidueRing(_));
                if !ok {
                    return Err(Error::UnsupportedRing {
                        ring: self.ring.to_string(),
                        operation: "linear-solve search",
                    });
                }
            }
            SearchStrategy::Classical | SearchStrategy::PaperFixtures => {}
        }
        Ok(())
    }

    /// `|R|^(4 n^2)`, saturating; `None` over infinite rings.
    pub fn quadruple_count(&self) -> Option<u128> {
        let single = universe_size(self.ring, self.n)?;
        Some((0..4).fold(1u128, |acc, _| acc.saturating_mul(single)))
    }
}

fn exhaustive(ring: RingSpec, n: usize, budget: u64) -> Result<Vec<Quadruple>> {
    let all = all_matrices(ring, n, budget)?;
    let size = all.len();
    let found = (0..size * size)
        .into_par_iter()
        .flat_map_iter(|ab| {
            let (a, b) = (&all[ab / size], &all[ab % size]);
            let ba = b * a;
            let mut out = Vec::new();
            for c in all.iter() {
                let bac = &ba * c;
                let ac = a * c;
                for d in all.iter() {
                    let bd = b * d;
                    if &bd * b == bac && d * &bd == &ac * d {
                        out.push(Quadruple::new_unchecked(a.clone(), b.clone(), c.clone(), d.clone()));
                    }
                }
            }
            out
        })
        .collect();
    Ok(found)
}

fn linear_solve(space: &SearchSpace) -> Result<Vec<Quadruple>> {
    let mut rng = rng(space.seed);
    let draws: Vec<[SquareMatrix; 3]> = (0..space.budget)
        .map(|_| std::array::from_fn(|_| random_matrix(&mut rng, space.ring, space.n)))
        .collect();
    let per_draw = draws
        .par_iter()
        .map(|[a, b, c]| match solve_for_d(a, b, c, SOLUTIONS_PER_DRAW) {
            Ok(sols) => Ok(sols
                .into_iter()
                .map(|d| Quadruple::new_unchecked(a.clone(), b.clone(), c.clone(), d))
                .collect()),
            Err(Error::NoSolution) => Ok(Vec::new()),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<Vec<Quadruple>>>>()?;
    Ok(per_draw.into_iter().flatten().collect())
}

/// All quadruples the strategy produces, in deterministic order.
pub fn enumerate_quadruples(space: &SearchSpace) -> Result<Vec<Quadruple>> {
    space.validate()?;
    match space.strategy {
        SearchStrategy::Exhaustive => exhaustive(space.ring, space.n, space.budget),
        SearchStrategy::LinearSolve => linear_solve(space),
        SearchStrategy::Classical => {
            let mut rng = rng(space.seed);
            (0..space.budget)
                .map(|_| {
                    let a = random_matrix(&mut rng, space.ring, space.n);
                    let b = random_matrix(&mut rng, space.ring, space.n);
                    Quadruple::classical(a, b)
                })
                .collect()
        }
        SearchStrategy::PaperFixtures => [Fixture::Idempotent, Fixture::IntegerNilpotent]
            .into_iter()
            .map(Fixture::quadruple)
            .collect(),
    }
}
