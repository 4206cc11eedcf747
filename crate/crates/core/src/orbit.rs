//! The orbit partition of a simple highest weight module in types B, C, D,
//! Springer pairs, the corank estimate, and convention calibration.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::partition::{
    angle_join, bcd_compose, lusztig_split_with, ClassicalType, EoConvention, LengthParity, Partition,
};
use crate::rs::rs_shape;
use crate::weight::{decompose, rho_shift, ClassDecomposition, WeightValue, WeightVector};

/// Largest allowed gap between the number of Jordan blocks and the corank
/// estimate.
pub const CORANK_TOLERANCE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitResult {
    #[serde(rename = "type")]
    pub lie_type: ClassicalType,
    pub n: usize,
    /// Jordan block sizes.
    pub partition: Partition,
    /// RS shape of each class, in class order.
    pub per_class: Vec<Partition>,
    pub corank_estimate: usize,
    pub warnings: Vec<String>,
}

/// Intermediate data of one run, kept for error reports.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitTrace {
    pub decomposition: ClassDecomposition,
    pub per_class: Vec<Partition>,
    pub p1: Partition,
    pub p2: Partition,
    pub p_rest: Partition,
    pub partition: Partition,
}

/// Steps 1–5 without the post-condition checks.
pub fn trace(f: &WeightVector, conv: &EoConvention) -> Result<OrbitTrace> {
    let decomposition = decompose(f)?;
    let per_class: Vec<Partition> = decomposition.classes.iter().map(|c| rs_shape(&c.ranks)).collect();
    let p_rest =
        per_class.iter().enumerate().skip(3).step_by(2).fold(Partition::empty(), |acc, (_, p)| acc.hat_plus(p));
    let (p1, p2) = (per_class[0].clone(), per_class[1].clone());
    let partition = bcd_compose(&p1, &p2, &p_rest, f.lie_type, conv);
    Ok(OrbitTrace { decomposition, per_class, p1, p2, p_rest, partition })
}

/// Orbit partition of `f`, with the size and corank checks enforced.
pub fn rs_bcd(f: &WeightVector, conv: &EoConvention) -> Result<OrbitResult> {
    let t = trace(f, conv)?;
    let n = f.n();
    let l = corank_estimate(f);
    let expected = f.lie_type.natural_dim(n);
    let dump = |t: &OrbitTrace| {
        json!({
            "input": f,
            "convention": conv.fingerprint(),
            "corank_estimate": l,
            "trace": t,
        })
    };
    if t.partition.weight() != expected {
        return Err(Error::Invariant {
            what: format!("partition size {} differs from {expected}", t.partition.weight()),
            state: dump(&t),
        });
    }
    if t.partition.len().abs_diff(l) > CORANK_TOLERANCE {
        return Err(Error::Invariant {
            what: format!("{} parts against corank estimate {l}", t.partition.len()),
            state: dump(&t),
        });
    }
    let mut warnings = Vec::new();
    if f.lie_type == ClassicalType::D && n <= 2 {
        warnings.push(format!("so({}) is not simple; result is outside the calibrated range", 2 * n));
    }
    Ok(OrbitResult {
        lie_type: f.lie_type,
        n,
        partition: t.partition,
        per_class: t.per_class,
        corank_estimate: l,
        warnings,
    })
}

/// Length of a longest chain `i_1 ≺ … ≺ i_l` along which `f^+` drops by
/// positive integers.
pub fn corank_estimate(f: &WeightVector) -> usize {
    let fp = rho_shift(f);
    let vals = &fp.values;
    let mut best = vec![1usize; vals.len()];
    for j in 0..vals.len() {
        for i in 0..j {
            if matches!(vals[i].integer_difference(&vals[j]), Some(d) if d > 0) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Encoding length parity at which the Lusztig halves of an orbit partition
/// of the given type recover its Springer pair.
fn springer_parity(t: ClassicalType) -> LengthParity {
    match t {
        ClassicalType::B | ClassicalType::C => LengthParity::Odd,
        ClassicalType::D => LengthParity::Even,
    }
}

/// `(α, β)` with `p = ⟨β, α⟩_{−1}` (B), `⟨α, β⟩_1` (C), `⟨β, α⟩_0` (D).
pub fn springer_pair(p: &Partition, t: ClassicalType) -> (Partition, Partition) {
    let (le, lo) = lusztig_split_with(p, springer_parity(t));
    match t {
        ClassicalType::B | ClassicalType::D => (lo, le),
        ClassicalType::C => (le, lo),
    }
}

pub fn springer_reconstruct(pair: &(Partition, Partition), t: ClassicalType) -> Partition {
    let (alpha, beta) = pair;
    match t {
        ClassicalType::B => angle_join(beta, alpha, -1),
        ClassicalType::C => angle_join(alpha, beta, 1),
        ClassicalType::D => angle_join(beta, alpha, 0),
    }
}

/// Whether `p` is the Jordan type of a nilpotent element of the given type:
/// even parts of even multiplicity in B and D, odd parts in C.
pub fn is_jordan_type(p: &Partition, t: ClassicalType) -> bool {
    let restricted_parity = match t {
        ClassicalType::B | ClassicalType::D => 0,
        ClassicalType::C => 1,
    };
    let mut parts = p.parts().to_vec();
    parts.dedup();
    parts.into_iter().filter(|k| k % 2 == restricted_parity).all(|k| p.multiplicity(k).is_multiple_of(2))
}

/// A weight whose orbit partition is known independently of the pipeline.
#[derive(Debug, Clone, Serialize)]
pub struct Anchor {
    pub name: String,
    pub weight: WeightVector,
    pub expected: Partition,
}

/// The calibration anchors: zero weights give the zero orbit, generic weights
/// the regular orbit, and constant one-half weights the orbits of the
/// oscillator-type modules.
pub fn anchors() -> Vec<Anchor> {
    use ClassicalType::*;
    let mut out = Vec::new();
    let ranks = |t: ClassicalType| if t == D { vec![3, 4] } else { vec![1, 2, 3, 4] };
    for t in [B, C, D] {
        for n in ranks(t) {
            out.push(Anchor {
                name: format!("{t} n={n} zero"),
                weight: WeightVector::zero(t, n),
                expected: Partition::ones(t.natural_dim(n)),
            });
        }
        for n in ranks(t) {
            let expected = match t {
                B => Partition::new([2 * n + 1]),
                C => Partition::new([2 * n]),
                D => Partition::new([1, 2 * n - 1]),
            };
            out.push(Anchor { name: format!("{t} n={n} generic"), weight: WeightVector::generic(t, n), expected });
        }
    }
    let half = WeightValue::halves(1);
    out.push(Anchor {
        name: "C n=1 half".into(),
        weight: WeightVector::constant(C, 1, half),
        expected: Partition::new([2]),
    });
    out.push(Anchor {
        name: "C n=2 half".into(),
        weight: WeightVector::constant(C, 2, half),
        expected: Partition::new([1, 1, 2]),
    });
    out.push(Anchor {
        name: "B n=1 half".into(),
        weight: WeightVector::constant(B, 1, half),
        expected: Partition::new([1, 1, 1]),
    });
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct AnchorOutcome {
    pub anchor: String,
    pub expected: Partition,
    /// `None` when the pipeline raised an error.
    pub got: Option<Partition>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConventionOutcome {
    pub convention: String,
    pub passed: usize,
    pub failed: usize,
    pub anchors: Vec<AnchorOutcome>,
}

/// The full anchor matrix: every anchor under every convention.
#[derive(Debug, Clone, Serialize)]
pub struct CalibrationReport {
    pub conventions: Vec<ConventionOutcome>,
    /// Passing conventions, with readings of types that never meet an
    /// even-length merge reset to the default.
    pub passing: Vec<String>,
}

impl CalibrationReport {
    /// One line per convention, then the failing anchors of each.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.conventions {
            s.push_str(&format!("{:<22} {:>2} pass {:>2} fail\n", c.convention, c.passed, c.failed));
            for a in c.anchors.iter().filter(|a| !a.pass) {
                let got = a.got.as_ref().map_or("error".to_string(), |p| p.to_string());
                s.push_str(&format!("    {:<16} expected {} got {}\n", a.anchor, a.expected, got));
            }
        }
        s.push_str(&format!("passing: {}\n", self.passing.join(" | ")));
        s
    }
}

pub fn calibration_report() -> CalibrationReport {
    let anchors = anchors();
    let mut conventions = Vec::new();
    let mut passing: Vec<EoConvention> = Vec::new();
    for conv in EoConvention::all() {
        let outcomes: Vec<AnchorOutcome> = anchors
            .iter()
            .map(|a| {
                let got = rs_bcd(&a.weight, &conv).ok().map(|r| r.partition);
                AnchorOutcome {
                    anchor: a.name.clone(),
                    expected: a.expected.clone(),
                    pass: got.as_ref() == Some(&a.expected),
                    got,
                }
            })
            .collect();
        let passed = outcomes.iter().filter(|o| o.pass).count();
        if passed == outcomes.len() && !passing.contains(&conv.canonical()) {
            passing.push(conv.canonical());
        }
        conventions.push(ConventionOutcome {
            convention: conv.fingerprint(),
            passed,
            failed: outcomes.len() - passed,
            anchors: outcomes,
        });
    }
    CalibrationReport { conventions, passing: passing.iter().map(EoConvention::fingerprint).collect() }
}

/// The unique convention, up to inert readings, under which every anchor
/// holds.
pub fn calibrate() -> Result<EoConvention> {
    let report = calibration_report();
    match report.passing.as_slice() {
        [one] => one.parse(),
        [] => Err(Error::Calibration {
            reason: "no convention satisfies every anchor".into(),
            report: serde_json::to_value(&report).expect("report serializes"),
        }),
        _ => Err(Error::Calibration {
            reason: format!("{} conventions satisfy every anchor", report.passing.len()),
            report: serde_json::to_value(&report).expect("report serializes"),
        }),
    }
}
