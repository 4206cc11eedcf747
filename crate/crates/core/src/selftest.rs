//! Randomized invariant sweep behind the `selftest` command.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::borel::{osp_dual, sl_involution, Algebra};
use crate::orbit::{calibrate, is_jordan_type, rs_bcd, springer_pair, springer_reconstruct};
use crate::partition::{
    angle_join, join_lengths, join_parity, lusztig_split_with, star, ClassicalType, EoConvention, Half, ZSeq,
};
use crate::random;
use crate::rs::{longest_decreasing, rs_shape};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub cases: usize,
    pub checks: Vec<Check>,
    pub ok: bool,
}

struct Tally {
    check: Check,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { check: Check { name, cases: 0, violations: 0, first_failure: None } }
    }

    fn record(&mut self, ok: bool, state: impl FnOnce() -> Value) {
        self.check.cases += 1;
        if !ok {
            self.check.violations += 1;
            if self.check.first_failure.is_none() {
                self.check.first_failure = Some(state());
            }
        }
    }
}

fn longest_weakly_increasing(w: &[usize]) -> usize {
    let mut best = vec![1usize; w.len()];
    for j in 0..w.len() {
        for i in 0..j {
            if w[i] <= w[j] {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

pub fn run(seed: u64, cases: usize, conv: &EoConvention) -> SelftestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let mut conj = Tally::new("conjugate_involution");
    let mut row1 = Tally::new("parity_split_length");
    let mut row2 = Tally::new("join_length");
    let mut row3 = Tally::new("star_length");
    let mut row4 = Tally::new("hatplus_length");
    let mut pad = Tally::new("padding_invariance");
    let mut trip = Tally::new("lusztig_roundtrip");
    for _ in 0..cases {
        let p = random::partition(&mut rng, 12);
        let q = random::partition(&mut rng, 12);
        let dm: i64 = rng.gen_range(-3..=3);
        conj.record(p.conjugate().conjugate() == p && p.conjugate().weight() == p.weight(), || json!({ "p": p }));
        let (e, o) = p.parity_split();
        let want = if p.is_empty() { 0 } else { (2 * e.len()).saturating_sub(1).max(2 * o.len()) };
        row1.record(p.len() == want, || json!({ "p": p }));
        let j = angle_join(&p, &q, dm);
        let want = (2 * p.len() as i64 - dm).max(2 * q.len() as i64 + dm - 1);
        row2.record(j.len() as i64 == want, || json!({ "p": p, "q": q, "dm": dm }));
        let lhs = (p.len() as i64).max(q.len() as i64 + dm);
        let ok = [conv.d, conv.c].iter().all(|&r| {
            let se = star(&p, &q, dm, Half::E, r).len() as i64;
            let so = star(&p, &q, dm, Half::O, r).len() as i64;
            lhs == (se + dm.div_euclid(2)).max(so + (dm + 1).div_euclid(2))
        });
        row3.record(ok, || json!({ "p": p, "q": q, "dm": dm }));
        row4.record(p.hat_plus(&q).len() == p.len().max(q.len()), || json!({ "p": p, "q": q }));
        trip.record(
            lusztig_split_with(&j, join_parity(dm)) == (p.clone(), q.clone()),
            || json!({ "p": p, "q": q, "dm": dm }),
        );
        let k = rng.gen_range(1..=3usize);
        let (lp, lq) = join_lengths(&p, &q, dm);
        let z = ZSeq::encode(&p, lp + k).expect("long enough");
        let w = ZSeq::encode(&q, lq + k).expect("long enough");
        let padded_join = ZSeq::interleave(&z, &w).decode();
        let padded_star = ZSeq::merge_halves(&z, &w, conv.d);
        let unpadded_star = (star(&p, &q, dm, Half::E, conv.d), star(&p, &q, dm, Half::O, conv.d));
        pad.record(
            padded_join == j && (padded_star.0.decode(), padded_star.1.decode()) == unpadded_star,
            || json!({ "p": p, "q": q, "dm": dm, "pad": k }),
        );
    }
    checks.extend([conj, row1, row2, row3, row4, pad, trip].map(|t| t.check));

    let mut rs = Tally::new("rs_greene");
    for _ in 0..cases {
        let len = rng.gen_range(0..=10);
        let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..4)).collect();
        let shape = rs_shape(&w);
        let first_row = shape.largest();
        rs.record(
            shape.len() == longest_decreasing(&w)
                && first_row == longest_weakly_increasing(&w)
                && shape.weight() == len,
            || json!({ "word": w }),
        );
    }
    checks.push(rs.check);

    let mut orbit = Tally::new("orbit_validators");
    for _ in 0..cases {
        let t = ClassicalType::ALL[rng.gen_range(0..3)];
        let n = rng.gen_range(1..=8);
        let f = random::weight(&mut rng, t, n);
        let ok = match rs_bcd(&f, conv) {
            Ok(r) => {
                let pair = springer_pair(&r.partition, t);
                is_jordan_type(&r.partition, t) && springer_reconstruct(&pair, t) == r.partition
            }
            Err(_) => false,
        };
        orbit.record(ok, || json!({ "f": f }));
    }
    checks.push(orbit.check);

    let mut dual = Tally::new("duality_involution");
    for _ in 0..cases {
        let l = random::label(&mut rng);
        let back = match l.algebra {
            Algebra::Sl => sl_involution(&l).and_then(|d| sl_involution(&d)),
            _ => osp_dual(&l).and_then(|d| osp_dual(&d)),
        };
        dual.record(back.as_ref().ok() == Some(&l), || json!({ "label": l }));
    }
    checks.push(dual.check);

    let mut cal = Tally::new("calibration_unique");
    let got = calibrate();
    cal.record(got.is_ok(), || json!({ "error": got.as_ref().err().map(|e| e.to_string()) }));
    checks.push(cal.check);

    let ok = checks.iter().all(|c| c.violations == 0);
    SelftestReport { seed, cases, checks, ok }
}
