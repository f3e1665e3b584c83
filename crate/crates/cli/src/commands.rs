use std::io::Read;

use serde::Serialize;
use serde_json::{json, Value};

use drazinkit::drazin::{
    certify, check_relations, cline_generalized, cline_with_inverse, drazin_inverse,
    group_inverse, jacobson_inverse, ClineReport, DrazinCertificate, InverseFlavor, Quadruple,
};
use drazinkit::json::{parse_matrix, parse_raw_quadruple, RawQuadruple};
use drazinkit::lab::{
    brute_force_inverse, enumerate_quadruples, fixture_report, Fixture, SearchSpace,
    SearchStrategy, DEFAULT_BUDGET,
};
use drazinkit::ring::RingKind;
use drazinkit::spectral::spectral_report;
use drazinkit::{Error, Rational, RingSpec, SquareMatrix};

/// A finished report and whether the checked property holds.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn report(value: &impl Serialize, ok: bool) -> Result<Self, CliError> {
        let mut text = serde_json::to_string(value).expect("reports serialize");
        text.push('\n');
        Ok(Outcome { text, ok })
    }
}

#[derive(Debug)]
pub struct CliError {
    kind: String,
    message: String,
    details: Option<Value>,
    code: u8,
}

impl CliError {
    pub fn usage(message: String) -> Self {
        CliError { kind: "Usage".into(), message, details: None, code: 2 }
    }

    fn rejected(kind: &str, message: String, details: Option<Value>) -> Self {
        CliError { kind: kind.into(), message, details, code: 1 }
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }

    pub fn to_json(&self) -> String {
        let mut v = json!({ "error": self.kind, "message": self.message });
        if let Some(d) = &self.details {
            v["details"] = d.clone();
        }
        v.to_string()
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let malformed = matches!(
            e,
            Error::Parse(_)
                | Error::InvalidRing(_)
                | Error::DimensionMismatch { .. }
                | Error::RingMismatch { .. }
                | Error::NotInRing { .. }
                | Error::ZeroLambda
                | Error::UnsupportedRing { .. }
                | Error::NotAField { .. }
                | Error::BudgetExceeded { .. }
        );
        let details = match &e {
            Error::RelationViolation(report) => serde_json::to_value(report).ok(),
            _ => None,
        };
        CliError { kind: e.kind().into(), message: e.to_string(), details, code: if malformed { 2 } else { 1 } }
    }
}

/// Reads `-` from stdin, text starting with `{` as inline JSON, and
/// anything else as a file path.
fn read_input(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::usage(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::usage(format!("cannot read {arg}: {e}")))
}

fn read_quadruple(arg: &str) -> Result<Quadruple, CliError> {
    Ok(parse_raw_quadruple(&read_input(arg)?)?.into_quadruple()?)
}

fn parse_ring(name: &str) -> Result<RingSpec, CliError> {
    Ok(name.parse::<RingSpec>()?)
}

pub fn demo(example: &str) -> Result<Outcome, CliError> {
    let fixture: Fixture = example.parse()?;
    let report = fixture_report(fixture)?;
    Outcome::report(&report, report.accepted)
}

pub fn verify(input: &str) -> Result<Outcome, CliError> {
    let raw = parse_raw_quadruple(&read_input(input)?)?;
    let report = check_relations(&raw.a, &raw.b, &raw.c, &raw.d)?;
    Outcome::report(&report, report.holds())
}

/// Constructs over a field; over Z constructs in Q and re-verifies in Z;
/// over Z/n asks the brute-force oracle.
fn inverse_of(a: &SquareMatrix, flavor: InverseFlavor) -> Result<DrazinCertificate, CliError> {
    match a.ring().kind() {
        RingKind::Rationals | RingKind::PrimeField(_) => {
            let cert = match flavor {
                InverseFlavor::Group => group_inverse(a)?,
                _ => drazin_inverse(a)?,
            };
            Ok(if cert.flavor == flavor { cert } else { cert.reverify(flavor)? })
        }
        RingKind::Integers => {
            let over_q = inverse_of(&a.to_ring(RingSpec::rationals())?, flavor)?;
            let x = over_q.inverse.to_ring(a.ring()).map_err(|_| {
                CliError::rejected(
                    "NoInverseInRing",
                    format!("the {flavor} inverse over Q has non-integer entries: {}", over_q.inverse),
                    serde_json::to_value(&over_q).ok(),
                )
            })?;
            Ok(certify(a, &x, flavor)?)
        }
        RingKind::ResidueRing(_) => brute_force_inverse(a, flavor, DEFAULT_BUDGET)?
            .into_iter()
            .next()
            .ok_or_else(|| {
                CliError::rejected("NoInverse", format!("{a} has no {flavor} inverse in {}", a.ring()), None)
            }),
    }
}

pub fn drazin(input: &str, flavor: InverseFlavor) -> Result<Outcome, CliError> {
    let a = parse_matrix(&read_input(input)?)?;
    let cert = inverse_of(&a, flavor)?;
    Outcome::report(&cert, cert.valid)
}

#[derive(Serialize)]
struct ClineOutput {
    #[serde(flatten)]
    report: ClineReport,
    /// Over a finite ring: the formula output matches the brute-forced
    /// inverse of `bd`.
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

pub fn cline(input: &str, flavor: InverseFlavor) -> Result<Outcome, CliError> {
    let q = read_quadruple(input)?;
    let ac = q.ac();
    let (report, oracle_agrees) = match q.ring().kind() {
        RingKind::Rationals | RingKind::PrimeField(_) => (cline_generalized(&q, flavor)?, None),
        RingKind::Integers | RingKind::ResidueRing(_) => {
            let h = inverse_of(&ac, flavor)?;
            let report = cline_with_inverse(&q, &h.inverse, flavor)?;
            let oracle = if q.ring().is_finite() {
                let bd_flavor = report.bd.flavor;
                let found = brute_force_inverse(&q.bd(), bd_flavor, DEFAULT_BUDGET)?;
                Some(found.iter().any(|c| c.inverse == report.bd.inverse))
            } else {
                None
            };
            (report, oracle)
        }
    };
    let ok = report.holds() && oracle_agrees.unwrap_or(true);
    Outcome::report(&ClineOutput { report, oracle_agrees }, ok)
}

fn parse_rational(text: &str) -> Result<Rational, CliError> {
    Ok(text.trim().parse::<Rational>()?)
}

#[derive(Serialize)]
struct JacobsonOutput {
    lambda: Rational,
    quadruple: RawQuadruple,
    one_minus_ac: SquareMatrix,
    one_minus_bd: SquareMatrix,
    ac_side_invertible: bool,
    bd_side_invertible: bool,
    /// `1 + b(1 - ac)^-1 d` for the scaled quadruple, checked as a two-sided
    /// inverse of `1 - bd`.
    inverse: Option<SquareMatrix>,
}

pub fn jacobson(input: &str, lambda: &str) -> Result<Outcome, CliError> {
    let mut q = read_quadruple(input)?;
    let lambda = parse_rational(lambda)?;
    if lambda.is_zero() {
        return Err(Error::ZeroLambda.into());
    }
    if q.ring().kind() == RingKind::Integers && !lambda.is_one() {
        q = q.to_ring(RingSpec::rationals())?;
    }
    let s = q.scaled(&lambda)?;
    let id = SquareMatrix::identity(s.ring(), s.dim());
    let (one_minus_ac, one_minus_bd) = (&id - &s.ac(), &id - &s.bd());
    let inverse = match jacobson_inverse(&s) {
        Ok(inv) => Some(inv),
        Err(Error::NotInvertible(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let out = JacobsonOutput {
        lambda,
        quadruple: RawQuadruple::from(&s),
        ac_side_invertible: one_minus_ac.is_invertible(),
        bd_side_invertible: one_minus_bd.is_invertible(),
        one_minus_ac,
        one_minus_bd,
        inverse,
    };
    let ok = out.inverse.is_some();
    Outcome::report(&out, ok)
}

pub fn spectrum(input: &str, lambdas: Option<&str>) -> Result<Outcome, CliError> {
    let q = read_quadruple(input)?;
    let lambdas = lambdas
        .map(|list| list.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    let report = spectral_report(&q, lambdas.as_deref())?;
    Outcome::report(&report, report.holds())
}

pub fn search(
    ring: &str,
    dim: usize,
    strategy: SearchStrategy,
    budget: u64,
    seed: u64,
) -> Result<Outcome, CliError> {
    let space = SearchSpace::new(parse_ring(ring)?, dim, strategy, budget, seed)?;
    let mut text = String::new();
    for q in enumerate_quadruples(&space)? {
        text.push_str(&serde_json::to_string(&RawQuadruple::from(&q)).expect("quadruples serialize"));
        text.push('\n');
    }
    Ok(Outcome { text, ok: true })
}

#[derive(Serialize)]
struct OracleOutput {
    element: SquareMatrix,
    flavor: InverseFlavor,
    count: usize,
    inverses: Vec<DrazinCertificate>,
}

pub fn oracle(input: &str, ring: Option<&str>, flavor: InverseFlavor) -> Result<Outcome, CliError> {
    let mut a = parse_matrix(&read_input(input)?)?;
    if let Some(name) = ring {
        a = a.to_ring(parse_ring(name)?)?;
    }
    let inverses = brute_force_inverse(&a, flavor, DEFAULT_BUDGET)?;
    let out = OracleOutput { element: a, flavor, count: inverses.len(), inverses };
    let ok = out.count > 0;
    Outcome::report(&out, ok)
}
