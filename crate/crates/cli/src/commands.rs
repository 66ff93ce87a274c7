//! The subcommands as plain functions from parsed arguments to tables.

use std::fmt;

use horokit_core::classifier::{
    ball_pairs, classify_one, classify_pair, emit_kirby, lens_boundary, BallFamily,
    ClassificationResult, RationalBall,
};
use horokit_core::diophantine::{descend, enumerate_box, SolParams, Solution};
use horokit_core::families::{fib, is_markov};
use horokit_core::hurwitz::{hurwitz_equivalent, Factorization, HorizontalDatum};
use horokit_core::torus::{CurveClass, Sign};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::Value;

use crate::output::{int_value, Table};
use crate::verify::{self, VerifyConfig};

/// Process exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const MALFORMED: u8 = 1;
    pub const INVALID_DATUM: u8 = 2;
    pub const VERIFY_FAILED: u8 = 3;
}

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn malformed(message: impl Into<String>) -> CliError {
        CliError {
            code: exit::MALFORMED,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<horokit_core::Error> for CliError {
    fn from(e: horokit_core::Error) -> CliError {
        CliError {
            code: exit::INVALID_DATUM,
            message: e.to_string(),
        }
    }
}

/// A table plus the exit status it should produce.
pub struct Outcome {
    pub table: Table,
    pub code: u8,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Outcome {
        Outcome { table, code: exit::OK }
    }
}

fn text(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn opt_text<T: ToString>(v: Option<T>) -> Value {
    v.map_or(Value::Null, text)
}

const CLASSIFY_COLUMNS: &[&str] = &[
    "kind",
    "orientation",
    "epsilon",
    "n",
    "ball",
    "lens_boundary",
    "ball_pair",
    "decomposition",
];

fn classification_row(r: &ClassificationResult, n: Option<BigInt>) -> Vec<Value> {
    let lens = r.ball.as_ref().map(lens_boundary);
    let pair = r.ball_pair.as_ref().map(|(a, b)| format!("{a} ⊔ {b}"));
    vec![
        text(r.kind),
        Value::from(r.orientation.value()),
        r.epsilon.map_or(Value::Null, |e| Value::from(e.value())),
        n.as_ref().map_or(Value::Null, int_value),
        opt_text(r.ball.as_ref()),
        opt_text(lens),
        opt_text(pair),
        text(r.decomposition),
    ]
}

/// One curve gives the single-handle classification; two give the
/// two-handle one.
pub fn classify(g1: &CurveClass, d1: Sign, second: Option<(CurveClass, Sign)>) -> Result<Outcome, CliError> {
    let mut t = Table::new("classify", CLASSIFY_COLUMNS);
    match second {
        None => t.push(classification_row(&classify_one(g1, d1), None)),
        Some((g2, d2)) => {
            let d = HorizontalDatum::new(g1.clone(), d1, g2, d2);
            let r = classify_pair(&d)?;
            t.push(classification_row(&r, Some(d.n())));
        }
    }
    Ok(t.into())
}

pub fn enumerate(p: &SolParams, bound: u64) -> Result<Outcome, CliError> {
    let mut t = Table::new("enumerate", &["x", "y"]);
    for s in enumerate_box(p, bound)? {
        t.push(vec![int_value(&s.x), int_value(&s.y)]);
    }
    Ok(t.into())
}

pub fn descend_cmd(p: &SolParams, start: &Solution) -> Result<Outcome, CliError> {
    let d = descend(p, start)?;
    let mut t = Table::new("descend", &["step", "move", "x", "y"]);
    for (i, s) in d.path.iter().enumerate() {
        let m = if i == 0 { Value::Null } else { text(d.moves[i - 1]) };
        t.push(vec![Value::from(i), m, int_value(&s.x), int_value(&s.y)]);
    }
    Ok(t.into())
}

pub fn hurwitz(from: &Factorization, to: &Factorization, depth: usize) -> Result<Outcome, CliError> {
    let found = hurwitz_equivalent(from, to, depth)?;
    let mut t = Table::new("hurwitz", &["found", "length", "moves", "monodromy"]);
    let moves = found.as_ref().map(|ms| {
        ms.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    });
    t.push(vec![
        Value::from(found.is_some()),
        found.as_ref().map_or(Value::Null, |ms| Value::from(ms.len())),
        opt_text(moves),
        text(from.monodromy()),
    ]);
    Ok(t.into())
}

fn family_label(f: BallFamily) -> &'static str {
    match f {
        BallFamily::B => "B",
        BallFamily::BPrime => "BPRIME",
    }
}

/// Two rows per `(m, family)`: the balls at index `m + 1` and `m`.
pub fn families(m_max: u32) -> Result<Outcome, CliError> {
    let mut t = Table::new(
        "families",
        &[
            "m", "family", "index", "ball", "p", "q", "orientation", "lens_a", "lens_b", "markov",
        ],
    );
    for m in 0..=m_max {
        let mi = i64::from(m);
        let markov = is_markov(&BigInt::one(), &fib(2 * mi - 1), &fib(2 * mi + 1));
        for family in [BallFamily::B, BallFamily::BPrime] {
            let (hi, lo) = ball_pairs(m, family);
            for (index, b) in [(m + 1, &hi), (m, &lo)] {
                t.push(ball_row(m, family, index, b, markov));
            }
        }
    }
    Ok(t.into())
}

fn ball_row(m: u32, family: BallFamily, index: u32, b: &RationalBall, markov: bool) -> Vec<Value> {
    let l = lens_boundary(b);
    vec![
        Value::from(m),
        text(family_label(family)),
        Value::from(index),
        text(b),
        int_value(b.p()),
        int_value(b.q()),
        Value::from(b.orientation().value()),
        int_value(l.a()),
        int_value(l.b()),
        Value::from(markov),
    ]
}

pub fn emit_kirby_cmd(f: &Factorization, dotted: bool) -> Result<Outcome, CliError> {
    let k = emit_kirby(f.twists(), dotted);
    let mut t = Table::new("emit-kirby", &["level", "p", "q", "sign", "framing", "dotted_unknot"]);
    for (i, c) in k.components.iter().enumerate() {
        t.push(vec![
            Value::from(i + 1),
            int_value(&c.p),
            int_value(&c.q),
            Value::from(c.sign.value()),
            int_value(&c.framing),
            Value::from(k.dotted_unknot),
        ]);
    }
    Ok(t.into())
}

pub fn verify_cmd(cfg: &VerifyConfig) -> Result<Outcome, CliError> {
    let reports = verify::run(cfg);
    let mut t = Table::new("verify", &["suite", "checked", "failed", "status", "example"]);
    let mut code = exit::OK;
    for r in &reports {
        if !r.passed() {
            code = exit::VERIFY_FAILED;
        }
        t.push(vec![
            text(r.name),
            Value::from(r.checked),
            Value::from(r.failed),
            text(if r.passed() { "PASS" } else { "FAIL" }),
            opt_text(r.example.as_ref()),
        ]);
    }
    Ok(Outcome { table: t, code })
}
