//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::Value;

use drazinkit::drazin::{
    certify, cline_classical, cline_generalized, cline_with_inverse, drazin_inverse, index_of,
    InverseFlavor, Quadruple,
};
use drazinkit::lab::{
    all_matrices, brute_force_inverse, enumerate_quadruples, qnil_transfer_check, random_matrix,
    rng, seeded_pairs, seeded_suite, solve_for_d, InverseTable, SearchSpace, SearchStrategy,
    DEFAULT_BUDGET, DEFAULT_SEED,
};
use drazinkit::spectral::{char_poly, default_lambdas, invertibility_transfer, nonzero_spectrum_equal};
use drazinkit::{RingSpec, SquareMatrix};

/// Number of quadruples over M2(GF(2)) satisfying both relations, counted by
/// the naive bit-level enumeration below.
const GF2_QUADRUPLE_COUNT: usize = 9_412;

const SUITE_SIZE: usize = 1000;
const Z4_DRAWS: usize = 100_000;
const CLASSICAL_PAIRS: usize = 500;

struct Outcome {
    violations: Vec<String>,
    notes: Vec<String>,
    checked: usize,
}

impl Outcome {
    fn new() -> Self {
        Outcome { violations: Vec::new(), notes: Vec::new(), checked: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

fn run_criterion(
    failures: &mut Vec<String>,
    id: u32,
    name: &str,
    limit: Option<Duration>,
    body: impl FnOnce() -> Outcome,
) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let over_time = limit.is_some_and(|l| elapsed >= l);
    let pass = outcome.violations.is_empty() && !over_time;
    let limit_text = limit.map(|l| format!(" (limit {}s)", l.as_secs())).unwrap_or_default();
    println!(
        "{} criterion {id}: {name}: {} checks, {} violations, {:.2}s{limit_text}",
        if pass { "PASS" } else { "FAIL" },
        outcome.checked,
        outcome.violations.len(),
        elapsed.as_secs_f64(),
    );
    for n in &outcome.notes {
        println!("    {n}");
    }
    for v in outcome.violations.iter().take(5) {
        println!("    {v}");
    }
    if !pass {
        failures.push(format!("criterion {id}"));
    }
}

fn demo(example: &str) -> (Option<i32>, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_drazinkit"))
        .args(["demo", "--example", example])
        .output()
        .expect("binary runs");
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code(), report)
}

fn rows(m: &Value) -> Value {
    m["rows"].clone()
}

fn rows_of(r: &[[&str; 2]; 2]) -> Value {
    serde_json::json!(r)
}

fn fixtures() -> Outcome {
    let mut o = Outcome::new();
    let zero = rows_of(&[["0", "0"], ["0", "0"]]);

    let (code, r) = demo("2.4");
    o.check(code == Some(1), || format!("2.4 exit code {code:?}"));
    o.check(r["accepted"] == false, || "2.4 accepted".into());
    o.check(rows(&r["relations"]["bdb"]) == rows_of(&[["1", "0"], ["0", "0"]]), || {
        format!("2.4 bdb = {}", r["relations"]["bdb"])
    });
    o.check(rows(&r["relations"]["bac"]) == rows_of(&[["1", "1"], ["0", "0"]]), || {
        format!("2.4 bac = {}", r["relations"]["bac"])
    });
    o.check(r["relations"]["first_holds"] == false, || "2.4 first relation holds".into());
    let diffs = r["relations"]["differences"].as_array().cloned().unwrap_or_default();
    o.check(
        diffs.iter().any(|d| d["relation"] == "bdb=bac" && d["row"] == 0 && d["col"] == 1),
        || format!("2.4 differences {diffs:?}"),
    );

    let (code, r) = demo("2.5");
    o.check(code == Some(0), || format!("2.5 exit code {code:?}"));
    o.check(r["accepted"] == true, || "2.5 rejected".into());
    for key in ["bdb", "bac", "dbd", "acd"] {
        o.check(rows(&r["relations"][key]) == zero, || format!("2.5 {key} = {}", r["relations"][key]));
    }
    o.check(r["ac_inverse"]["valid"] == true, || "2.5 ac not Drazin invertible".into());

    let (code, r) = demo("3.6");
    o.check(code == Some(0), || format!("3.6 exit code {code:?}"));
    o.check(r["accepted"] == true, || "3.6 rejected".into());
    o.check(rows(&r["ac"]) == zero, || format!("3.6 ac = {}", r["ac"]));
    o.check(
        r["ac_inverse"]["flavor"] == "group"
            && r["ac_inverse"]["valid"] == true
            && rows(&r["ac_inverse"]["inverse"]) == zero,
        || format!("3.6 ac inverse {}", r["ac_inverse"]),
    );
    o.check(rows(&r["bd"]) == rows_of(&[["0", "2"], ["0", "0"]]), || format!("3.6 bd = {}", r["bd"]));
    o.check(
        r["bd_inverse"]["valid"] == true
            && rows(&r["bd_inverse"]["inverse"]) == zero
            && r["bd_inverse"]["index"] == 2,
        || format!("3.6 bd inverse {}", r["bd_inverse"]),
    );
    o.check(r["bd_group_inverse_error"] == "NoGroupInverse: index 2", || {
        format!("3.6 group inverse of bd: {}", r["bd_group_inverse_error"])
    });
    o
}

/// 2x2 matrices over GF(2) as four bits `[m00, m01, m10, m11]`.
fn gf2_mul(x: [u8; 4], y: [u8; 4]) -> [u8; 4] {
    [
        (x[0] & y[0]) ^ (x[1] & y[2]),
        (x[0] & y[1]) ^ (x[1] & y[3]),
        (x[2] & y[0]) ^ (x[3] & y[2]),
        (x[2] & y[1]) ^ (x[3] & y[3]),
    ]
}

fn naive_gf2_count() -> usize {
    let all: Vec<[u8; 4]> =
        (0u8..16).map(|i| [(i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1]).collect();
    let mut count = 0;
    for &a in &all {
        for &b in &all {
            for &c in &all {
                for &d in &all {
                    let bd = gf2_mul(b, d);
                    let ac = gf2_mul(a, c);
                    if gf2_mul(bd, b) == gf2_mul(b, ac) && gf2_mul(d, bd) == gf2_mul(ac, d) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

fn gf2_sweep() -> Vec<Quadruple> {
    let space = SearchSpace::new(
        RingSpec::prime_field(2).unwrap(),
        2,
        SearchStrategy::Exhaustive,
        DEFAULT_BUDGET,
        DEFAULT_SEED,
    )
    .unwrap();
    enumerate_quadruples(&space).unwrap()
}

fn transfer_sweep(sweep: &[Quadruple]) -> Outcome {
    let mut o = Outcome::new();
    let naive = naive_gf2_count();
    o.check(sweep.len() == naive, || format!("library count {} != naive count {naive}", sweep.len()));
    o.check(naive == GF2_QUADRUPLE_COUNT, || {
        format!("count {naive} differs from recorded {GF2_QUADRUPLE_COUNT}")
    });
    let table =
        InverseTable::build(RingSpec::prime_field(2).unwrap(), 2, InverseFlavor::GDrazin, DEFAULT_BUDGET)
            .unwrap();
    for q in sweep {
        let hs = table.get(&q.ac());
        o.check(hs.len() == 1, || format!("ac = {} has {} g-Drazin inverses", q.ac(), hs.len()));
        let Some(h) = hs.first() else { continue };
        let e = &(&(q.b() * &h.inverse) * &h.inverse) * q.d();
        let cert = certify(&q.bd(), &e, InverseFlavor::GDrazin).unwrap();
        o.check(cert.valid, || format!("b h^2 d = {e} fails for bd = {}", q.bd()));
        let oracle = table.get(&q.bd());
        o.check(oracle.len() == 1 && oracle[0].inverse == e, || {
            format!("bd = {}: oracle {:?} vs formula {e}", q.bd(), oracle.iter().map(|c| c.inverse.to_string()).collect::<Vec<_>>())
        });
    }
    o
}

fn qnil_sweep(sweep: &[Quadruple]) -> Outcome {
    let mut o = Outcome::new();
    let z4 = RingSpec::residue(4).unwrap();
    let scalar = SearchSpace::new(z4, 1, SearchStrategy::Exhaustive, 256, DEFAULT_SEED).unwrap();
    let scalars = enumerate_quadruples(&scalar).unwrap();
    let mut naive = 0;
    for a in 0u64..4 {
        for b in 0u64..4 {
            for c in 0u64..4 {
                for d in 0u64..4 {
                    if (b * d * b + 4 * 16 - b * a * c) % 4 == 0 && (d * b * d + 4 * 16 - a * c * d) % 4 == 0 {
                        naive += 1;
                    }
                }
            }
        }
    }
    o.check(scalars.len() == naive, || format!("M1(Z/4) count {} != {naive}", scalars.len()));
    let reports: Vec<_> = sweep
        .par_iter()
        .chain(scalars.par_iter())
        .map(|q| (q, qnil_transfer_check(q).unwrap()))
        .collect();
    for (q, r) in reports {
        o.check(r.method == "definition" && r.holds, || {
            format!("ac = {} qnil but bd = {} is not (witness {:?})", q.ac(), q.bd(), r.witness)
        });
    }
    o
}

fn index_bound(suite: &[Quadruple]) -> Outcome {
    let mut o = Outcome::new();
    let results: Vec<_> = suite.par_iter().map(|q| (q, cline_generalized(q, InverseFlavor::Drazin))).collect();
    for (q, r) in results {
        match r {
            Ok(r) => {
                o.check(r.bd.valid, || format!("b h^2 d fails the Drazin axioms for bd = {}", q.bd()));
                o.check(r.index_bound_holds, || {
                    format!("index(bd) = {:?} > index(ac) + 1 = {:?} + 1", r.bd.index, r.ac.index)
                });
                let rank_index = index_of(&q.bd()).unwrap();
                o.check(r.bd.index == Some(rank_index), || {
                    format!("certified index {:?} != rank index {rank_index}", r.bd.index)
                });
            }
            Err(e) => o.check(false, || format!("cline failed on {:?}: {e}", q.parts())),
        }
    }
    o
}

fn z4_transfer() -> Outcome {
    let mut o = Outcome::new();
    let z4 = RingSpec::residue(4).unwrap();
    let ptable = InverseTable::build(z4, 2, InverseFlavor::PDrazin, DEFAULT_BUDGET).unwrap();
    let gtable = InverseTable::build(z4, 2, InverseFlavor::GDrazin, DEFAULT_BUDGET).unwrap();
    let mut r = rng(DEFAULT_SEED);
    let draws: Vec<[SquareMatrix; 3]> = (0..Z4_DRAWS)
        .map(|_| std::array::from_fn(|_| random_matrix(&mut r, z4, 2)))
        .collect();
    let quads: Vec<Quadruple> = draws
        .par_iter()
        .flat_map_iter(|[a, b, c]| {
            let sols = solve_for_d(a, b, c, 4).unwrap_or_default();
            sols.into_iter().map(|d| Quadruple::new(a.clone(), b.clone(), c.clone(), d).unwrap())
        })
        .collect();
    let consistent = |x: &SquareMatrix, o: &mut Outcome| {
        for p in ptable.get(x) {
            let g = gtable.get(x);
            o.check(g.len() == 1 && g[0].inverse == p.inverse, || {
                format!("p-Drazin inverse {} of {x} is not its g-Drazin inverse", p.inverse)
            });
        }
    };
    for ac in all_matrices(z4, 2, DEFAULT_BUDGET).unwrap().iter() {
        consistent(ac, &mut o);
    }
    let results: Vec<_> = quads
        .par_iter()
        .map(|q| {
            let reports: Vec<_> = ptable
                .get(&q.ac())
                .iter()
                .map(|h| cline_with_inverse(q, &h.inverse, InverseFlavor::PDrazin).unwrap())
                .collect();
            (q, reports)
        })
        .collect();
    let mut with_inverse = 0;
    for (q, reports) in results {
        with_inverse += usize::from(!reports.is_empty());
        for r in reports {
            o.check(r.bd.valid, || format!("b h^2 d = {} is not a p-Drazin inverse of {}", r.bd.inverse, q.bd()));
            o.check(r.index_bound_holds, || {
                format!("i(bd) = {:?} > i(ac) + 1 = {:?} + 1 for {:?}", r.bd.index, r.ac.index, q.parts())
            });
            o.check(ptable.get(&q.bd()).iter().any(|c| c.inverse == r.bd.inverse), || {
                format!("b h^2 d = {} missing from the oracle list of {}", r.bd.inverse, q.bd())
            });
        }
    }
    o.check(quads.len() > Z4_DRAWS / 100 && with_inverse > 0, || {
        format!("only {} quadruples ({with_inverse} with a p-Drazin ac) sampled", quads.len())
    });
    o.notes.push(format!("{} quadruples from {Z4_DRAWS} draws, {with_inverse} with p-Drazin invertible ac", quads.len()));
    o
}

fn jacobson_suite(suite: &[Quadruple]) -> Outcome {
    let mut o = Outcome::new();
    let lambdas = default_lambdas();
    let results: Vec<_> = suite.par_iter().map(|q| (q, invertibility_transfer(q, &lambdas).unwrap())).collect();
    for (q, report) in results {
        for v in report.verdicts {
            if v.ac_side_invertible {
                o.check(v.formula_verified && v.bd_side_invertible, || {
                    format!("λ = {}: formula fails for {:?}", v.lambda, q.parts())
                });
            }
        }
    }
    o
}

fn spectrum_suite(suite: &[Quadruple]) -> Outcome {
    let mut o = Outcome::new();
    let results: Vec<_> =
        suite.par_iter().map(|q| (q, nonzero_spectrum_equal(&q.ac(), &q.bd()).unwrap())).collect();
    let mut within = 0;
    for (q, cmp) in results {
        within += usize::from(cmp.right_within_left);
        o.check(cmp.equal, || {
            format!(
                "nonzero parts {} vs {} for ac = {}, bd = {}",
                cmp.left.nonzero_part_squarefree,
                cmp.right.nonzero_part_squarefree,
                q.ac(),
                q.bd()
            )
        });
    }
    o.notes.push(format!("nonzero eigenvalues of bd contained in those of ac: {within} of {}", suite.len()));
    o
}

fn oracle_agreement() -> Outcome {
    let mut o = Outcome::new();
    let gf2 = RingSpec::prime_field(2).unwrap();
    let gf3 = RingSpec::prime_field(3).unwrap();
    let spaces = [(gf2, 2), (gf3, 2), (gf3, 1)];
    for (ring, n) in spaces {
        for a in all_matrices(ring, n, DEFAULT_BUDGET).unwrap().iter() {
            let found = brute_force_inverse(a, InverseFlavor::Drazin, DEFAULT_BUDGET).unwrap();
            let built = drazin_inverse(a).unwrap();
            o.check(found.len() == 1 && found[0].inverse == built.inverse && found[0].index == built.index, || {
                format!("{a} over {ring}: oracle {:?} vs constructed {}", found.iter().map(|c| c.inverse.to_string()).collect::<Vec<_>>(), built.inverse)
            });
        }
    }
    o
}

fn classical_regression() -> Outcome {
    let mut o = Outcome::new();
    let pairs = seeded_pairs(DEFAULT_SEED, CLASSICAL_PAIRS);
    let results: Vec<_> = pairs
        .par_iter()
        .map(|(a, b)| {
            let cert = cline_classical(a, b);
            let same_char = char_poly(&(a * b)).unwrap() == char_poly(&(b * a)).unwrap();
            (a, b, cert, same_char)
        })
        .collect();
    for (a, b, cert, same_char) in results {
        o.check(cert.as_ref().is_ok_and(|c| c.valid), || format!("classical transfer fails for a = {a}, b = {b}"));
        o.check(same_char, || format!("char(ab) != char(ba) for a = {a}, b = {b}"));
    }
    o
}

fn main() {
    let mut failures = Vec::new();
    let secs = Duration::from_secs;

    run_criterion(&mut failures, 1, "worked quadruples via the CLI", Some(secs(1)), fixtures);

    let sweep = gf2_sweep();
    run_criterion(&mut failures, 2, "g-Drazin transfer over all of M2(GF(2))^4", Some(secs(60)), || {
        transfer_sweep(&sweep)
    });
    run_criterion(&mut failures, 3, "quasinilpotence transfer, M2(GF(2)) and M1(Z/4)", Some(secs(60)), || {
        qnil_sweep(&sweep)
    });

    let suite_start = Instant::now();
    let suite = seeded_suite(DEFAULT_SEED, SUITE_SIZE).expect("suite generation");
    let suite_time = suite_start.elapsed();
    run_criterion(&mut failures, 4, "index bound and Drazin transfer over Q", Some(secs(120) - suite_time), || {
        index_bound(&suite)
    });
    run_criterion(&mut failures, 5, "p-Drazin transfer over M2(Z/4)", Some(secs(300)), z4_transfer);
    run_criterion(&mut failures, 6, "inverse of 1 - bd from 1 - ac at sampled λ", None, || {
        jacobson_suite(&suite)
    });
    run_criterion(&mut failures, 7, "nonzero spectra of ac and bd agree", None, || spectrum_suite(&suite));
    run_criterion(&mut failures, 8, "brute-force oracle agrees with construction", Some(secs(10)), oracle_agreement);
    run_criterion(&mut failures, 9, "classical case regression", None, classical_regression);

    if !failures.is_empty() {
        eprintln!("acceptance failed: {}", failures.join(", "));
        std::process::exit(1);
    }
}
