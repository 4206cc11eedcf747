//! Acceptance criteria 1 to 10. Each prints one `criterion N: PASS|FAIL` line;
//! the process fails when any criterion does.

use std::process::Command;
use std::time::{Duration, Instant};

use nilorbit::borel::{
    annihilator_label, annihilator_nonzero, is_dominant, osp_dual, rank, sl_involution, synthesize_profile, Algebra,
    BorelProfile, IdealLabel, LieType, OrderType, Special, YoungDiagram,
};
use nilorbit::orbit::{calibrate, corank_estimate, is_jordan_type, rs_bcd, springer_pair, springer_reconstruct};
use nilorbit::partition::{
    angle_join, bcd_compose, is_bv, join_lengths, join_parity, lusztig_split, lusztig_split_with, star, ClassicalType,
    EoConvention, Half, MergeReading, Partition, ZSeq,
};
use nilorbit::random;
use nilorbit::rs::rs_shape;
use nilorbit::weight::{WeightValue, WeightVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const RANDOM_CASES: usize = 10_000;
const EXHAUSTIVE_WEIGHT: usize = 12;
const RANDOM_MAX_WEIGHT: usize = 12;
const DELTA_M: std::ops::RangeInclusive<i64> = -4..=4;
const C1_LIMIT: Duration = Duration::from_secs(30);
const C5_LIMIT: Duration = Duration::from_secs(60);
const C5_MAX_LEN: usize = 10;
const C5_ALPHABET: usize = 4;
const C7_LIMIT: Duration = Duration::from_secs(120);
const C7_MAX_N: usize = 8;
const CORANK_BOUND: usize = 6;
const BC1_BOUND: usize = 3;
const D1_BOUND: usize = 1;
const B2_BOUND: usize = 5;
const C2_BOUND: usize = 4;
const D2_BOUND: usize = 2;
const C9_RANDOM_LABELS: usize = 1_000;
const C10_RUNS: usize = 3;

/// Violations of one criterion, with the first few kept for the report.
#[derive(Default)]
struct Outcome {
    cases: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < 1000 {
            self.failures.push(what());
        }
    }

    fn within(&mut self, started: Instant, limit: Duration) {
        let took = started.elapsed();
        self.check(took <= limit, || format!("took {took:?}, limit {limit:?}"));
    }

    fn report(&self, n: usize, started: Instant) -> bool {
        let ok = self.failures.is_empty();
        println!(
            "criterion {n}: {} ({} checks, {} violations, {:.2?})",
            if ok { "PASS" } else { "FAIL" },
            self.cases,
            self.failures.len(),
            started.elapsed()
        );
        for f in self.failures.iter().take(5) {
            println!("    {f}");
        }
        ok
    }
}

fn len(p: &Partition) -> i64 {
    p.len() as i64
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn all_small_partitions() -> Vec<Partition> {
    (0..=EXHAUSTIVE_WEIGHT).flat_map(Partition::all_of_weight).collect()
}

fn star_readings() -> [MergeReading; 2] {
    [EoConvention::CALIBRATED.c, EoConvention::CALIBRATED.d]
}

fn row1(p: &Partition) -> bool {
    let (e, o) = p.parity_split();
    p.is_empty() || len(p) == (2 * len(&e) - 1).max(2 * len(&o))
}

fn row2(p: &Partition, q: &Partition, dm: i64) -> bool {
    len(&angle_join(p, q, dm)) == (2 * len(p) - dm).max(2 * len(q) + dm - 1)
}

fn row3(p: &Partition, q: &Partition, dm: i64, r: MergeReading) -> bool {
    let e = len(&star(p, q, dm, Half::E, r));
    let o = len(&star(p, q, dm, Half::O, r));
    len(p).max(len(q) + dm) == (e + dm.div_euclid(2)).max(o + (dm + 1).div_euclid(2))
}

fn row4(p: &Partition, q: &Partition) -> bool {
    p.hat_plus(q).len() == p.len().max(q.len())
}

fn criterion_1() -> bool {
    let started = Instant::now();
    let mut out = Outcome::default();
    let small = all_small_partitions();
    for p in &small {
        out.check(row1(p), || format!("row 1 at {p}"));
    }
    for p in &small {
        for q in &small {
            out.check(row4(p, q), || format!("row 4 at {p}, {q}"));
            for dm in DELTA_M {
                out.check(row2(p, q, dm), || format!("row 2 at {p}, {q}, {dm}"));
                for r in star_readings() {
                    out.check(row3(p, q, dm, r), || format!("row 3 at {p}, {q}, {dm}, {r:?}"));
                }
            }
        }
    }
    let mut rng = rng(1);
    for _ in 0..RANDOM_CASES {
        let p = random::partition(&mut rng, 3 * RANDOM_MAX_WEIGHT);
        let q = random::partition(&mut rng, 3 * RANDOM_MAX_WEIGHT);
        let dm = rng.gen_range(DELTA_M);
        out.check(row1(&p) && row2(&p, &q, dm) && row4(&p, &q), || format!("rows 1, 2, 4 at {p}, {q}, {dm}"));
        for r in star_readings() {
            out.check(row3(&p, &q, dm, r), || format!("row 3 at {p}, {q}, {dm}, {r:?}"));
        }
    }
    out.within(started, C1_LIMIT);
    out.report(1, started)
}

fn random_bv<R: Rng>(rng: &mut R) -> Partition {
    loop {
        let p = random::partition(rng, RANDOM_MAX_WEIGHT);
        if is_bv(&p) {
            return p;
        }
    }
}

fn criterion_2() -> bool {
    let started = Instant::now();
    let mut out = Outcome::default();
    let mut rng = rng(2);
    for _ in 0..RANDOM_CASES {
        let p = random::partition(&mut rng, RANDOM_MAX_WEIGHT);
        let q = random::partition(&mut rng, RANDOM_MAX_WEIGHT);
        let dm = rng.gen_range(DELTA_M);
        let (e, o) = p.parity_split();
        out.check((len(&p) - (2 * len(&e)).max(2 * len(&o))).abs() <= 1, || format!("row 1 at {p}"));
        let j = len(&angle_join(&p, &q, dm));
        let bound = (dm - 1).abs().max(dm.abs());
        out.check((j - (2 * len(&p)).max(2 * len(&q))).abs() <= bound, || format!("row 2 at {p}, {q}, {dm}"));
        let shifted = len(&p).max(len(&q) + dm);
        out.check((shifted - len(&p).max(len(&q))).abs() <= dm.abs(), || format!("row 3.1 at {p}, {q}, {dm}"));
        for r in star_readings() {
            let se = len(&star(&p, &q, dm, Half::E, r));
            let so = len(&star(&p, &q, dm, Half::O, r));
            let (lo, hi) = (dm.div_euclid(2), (dm + 1).div_euclid(2));
            let lhs = ((se + lo).max(so + hi) - se.max(so)).abs();
            out.check(lhs <= lo.abs().max(hi.abs()), || format!("row 3.2 at {p}, {q}, {dm}, {r:?}"));
        }
    }
    let conv = EoConvention::CALIBRATED;
    for _ in 0..RANDOM_CASES {
        let p = random_bv(&mut rng);
        let (le, lo) = lusztig_split(&p);
        let sharp =
            |dm: i64, r: MergeReading| len(&star(&le, &lo, dm, Half::O, r)).max(len(&star(&le, &lo, dm, Half::E, r)));
        let bc1 = (len(&p) - 2 * sharp(1, conv.c)).unsigned_abs() as usize;
        out.check(bc1 <= BC1_BOUND, || format!("BC1 at {p}: {bc1}"));
        let d1 = (len(&p) - 2 * sharp(0, conv.d)).unsigned_abs() as usize;
        out.check(d1 <= D1_BOUND, || format!("D1 at {p}: {d1}"));

        let p1 = random_bv(&mut rng);
        let p2 = random_bv(&mut rng);
        let p3 = random::partition(&mut rng, RANDOM_MAX_WEIGHT);
        let longest = p1.len().max(p2.len()).max(p3.len());
        for (t, bound) in [(ClassicalType::B, B2_BOUND), (ClassicalType::C, C2_BOUND), (ClassicalType::D, D2_BOUND)] {
            let got = bcd_compose(&p1, &p2, &p3, t, &conv).len().abs_diff(longest);
            out.check(got <= bound, || format!("{t}2 at {p1}, {p2}, {p3}: {got}"));
        }
    }
    out.report(2, started)
}

fn criterion_3() -> bool {
    let started = Instant::now();
    let mut out = Outcome::default();
    let mut rng = rng(3);
    for _ in 0..RANDOM_CASES {
        let p = random::partition(&mut rng, RANDOM_MAX_WEIGHT);
        let q = random::partition(&mut rng, RANDOM_MAX_WEIGHT);
        let dm = rng.gen_range(DELTA_M);
        let pad = rng.gen_range(1..=4);
        let (lp, lq) = join_lengths(&p, &q, dm);
        let z = ZSeq::encode(&p, lp + pad).expect("padded length fits");
        let w = ZSeq::encode(&q, lq + pad).expect("padded length fits");
        out.check(ZSeq::interleave(&z, &w).decode() == angle_join(&p, &q, dm), || {
            format!("join at {p}, {q}, {dm}, pad {pad}")
        });
        for r in star_readings() {
            let (e, o) = ZSeq::merge_halves(&z, &w, r);
            let same = e.decode() == star(&p, &q, dm, Half::E, r) && o.decode() == star(&p, &q, dm, Half::O, r);
            out.check(same, || format!("star at {p}, {q}, {dm}, pad {pad}, {r:?}"));
        }
        let (e, o) = ZSeq::encode(&p, 2 * p.len() + 1 + 2 * pad).expect("long enough").lusztig_halves();
        out.check((e.decode(), o.decode()) == lusztig_split(&p), || format!("split at {p}, pad {pad}"));
    }
    out.report(3, started)
}

fn criterion_4() -> bool {
    let started = Instant::now();
    let mut out = Outcome::default();
    let mut rng = rng(4);
    for _ in 0..RANDOM_CASES {
        let p = random::partition(&mut rng, RANDOM_MAX_WEIGHT);
        let q = random::partition(&mut rng, RANDOM_MAX_WEIGHT);
        let dm = rng.gen_range(DELTA_M);
        let back = lusztig_split_with(&angle_join(&p, &q, dm), join_parity(dm));
        out.check(back == (p.clone(), q.clone()), || format!("{p}, {q}, {dm} came back as {back:?}"));
    }
    out.report(4, started)
}

/// Longest subsequence along which `keep(earlier, later)` holds pairwise.
fn longest_chain(w: &[u8], keep: impl Fn(u8, u8) -> bool) -> usize {
    let mut best = vec![1usize; w.len()];
    for j in 0..w.len() {
        for i in 0..j {
            if keep(w[i], w[j]) {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

fn criterion_5() -> bool {
    let started = Instant::now();
    let mut out = Outcome::default();
    let mut word = Vec::with_capacity(C5_MAX_LEN);
    for n in 0..=C5_MAX_LEN {
        for code in 0..C5_ALPHABET.pow(n as u32) {
            word.clear();
            let mut c = code;
            for _ in 0..n {
                word.push((c % C5_ALPHABET) as u8);
                c /= C5_ALPHABET;
            }
            let shape = rs_shape(&word);
            let ok = shape.weight() == n
                && shape.largest() == longest_chain(&word, |a, b| a <= b)
                && shape.len() == longest_chain(&word, |a, b| a > b);
            out.check(ok, || format!("word {word:?} gave {shape}"));
        }
    }
    for (w, want) in [(vec![4, 2, 3, 1], vec![1, 1, 2]), (vec![6, 5, 3, 4, 2, 1], vec![1, 1, 1, 1, 2])] {
        out.check(rs_shape(&w) == Partition::new(want), || format!("word {w:?}"));
    }
    out.within(started, C5_LIMIT);
    out.report(5, started)
}

fn criterion_6() -> bool {
    use ClassicalType::*;
    let started = Instant::now();
    let mut out = Outcome::default();
    let conv = match calibrate() {
        Ok(c) => c,
        Err(e) => {
            out.check(false, || format!("calibrate: {e}"));
            return out.report(6, started);
        }
    };
    out.check(conv == EoConvention::CALIBRATED.canonical(), || format!("calibrated to {}", conv.fingerprint()));
    let mut anchors: Vec<(WeightVector, Partition)> = Vec::new();
    for (t, ns) in [(B, 1..=4), (C, 1..=4), (D, 3..=4)] {
        for n in ns {
            let dim = t.natural_dim(n);
            anchors.push((WeightVector::zero(t, n), Partition::new(vec![1; dim])));
            let regular = match t {
                D => Partition::new([1, dim - 1]),
                _ => Partition::new([dim]),
            };
            let generic = (1..=n as i64).map(|k| WeightValue::generic(k, 0.into())).collect();
            anchors.push((WeightVector::new(t, generic).expect("nonempty"), regular));
        }
    }
    let half = "1/2".parse::<WeightValue>().expect("literal");
    anchors.push((WeightVector::constant(C, 1, half), Partition::new([2])));
    anchors.push((WeightVector::constant(C, 2, half), Partition::new([1, 1, 2])));
    anchors.push((WeightVector::constant(B, 1, half), Partition::new([1, 1, 1])));
    for (f, want) in &anchors {
        let got = rs_bcd(f, &conv).map(|r| r.partition);
        out.check(got.as_ref().ok() == Some(want), || format!("{f:?}: expected {want}, got {got:?}"));
    }
    out.report(6, started)
}

fn criterion_7() -> bool {
    let started = Instant::now();
    let mut out = Outcome::default();
    let conv = EoConvention::CALIBRATED;
    let mut rng = rng(7);
    for t in ClassicalType::ALL {
        for _ in 0..RANDOM_CASES {
            let n = rng.gen_range(1..=C7_MAX_N);
            let f = random::weight(&mut rng, t, n);
            let r = match rs_bcd(&f, &conv) {
                Ok(r) => r,
                Err(e) => {
                    out.check(false, || format!("{f:?}: {e}"));
                    continue;
                }
            };
            let p = &r.partition;
            out.check(p.weight() == t.natural_dim(n), || format!("{f:?}: size of {p}"));
            let l = corank_estimate(&f);
            out.check(p.len().abs_diff(l) <= CORANK_BOUND, || format!("{f:?}: {p} against corank {l}"));
            out.check(is_jordan_type(p, t), || format!("{f:?}: {p} is not a {t} Jordan type"));
            let back = springer_reconstruct(&springer_pair(p, t), t);
            out.check(&back == p, || format!("{f:?}: Springer roundtrip {p} -> {back}"));
        }
    }
    out.within(started, C7_LIMIT);
    out.report(7, started)
}

fn profile(json: &str) -> BorelProfile {
    serde_json::from_str(json).unwrap_or_else(|e| panic!("{json}: {e}"))
}

fn criterion_8() -> bool {
    let started = Instant::now();
    let mut out = Outcome::default();
    let omega = |v: &str| format!(r#"{{"order":"omega","pattern":{{"constant":"{v}"}}}}"#);
    let star = |v: &str| format!(r#"{{"order":"omega_star","pattern":{{"constant":"{v}"}}}}"#);
    let rising = |s: i64| format!(r#"{{"order":"omega","pattern":{{"strictly_increasing_integers":{s}}}}}"#);
    let generic_omega = r#"{"order":"omega","pattern":"generic_distinct"}"#.to_string();
    let generic_star = r#"{"order":"omega_star","pattern":"generic_distinct"}"#.to_string();
    let finite = |vs: &[&str]| {
        let vs: Vec<String> = vs.iter().map(|v| format!("\"{v}\"")).collect();
        format!(r#"{{"order":"finite","size":{},"values":[{}]}}"#, vs.len(), vs.join(","))
    };
    let generic_finite = |k: usize| format!(r#"{{"order":"finite","size":{k},"pattern":"generic_distinct"}}"#);

    let mut cases: Vec<(&str, Vec<String>, bool)> = Vec::new();
    for t in ["B", "C", "D"] {
        cases.extend([
            (t, vec![omega("0")], true),
            (t, vec![omega("1/2")], true),
            (t, vec![finite(&["3", "2", "1"]), omega("0")], true),
            (t, vec![finite(&["s1", "s2"]), omega("2")], true),
            (t, vec![generic_finite(4), omega("3/2"), star("-1/2")], true),
            (t, vec![omega("2"), star("5")], true),
            (t, vec![rising(1)], false),
            (t, vec![omega("1"), rising(-2)], false),
            (t, vec![generic_omega.clone()], false),
            (t, vec![omega("s1")], false),
            (t, vec![omega("0"), star("1/2")], false),
            (t, vec![omega("1/3")], false),
        ]);
    }
    cases.extend([
        ("A", vec![omega("0"), star("0")], true),
        ("A", vec![omega("s1"), star("s1-2")], true),
        ("A", vec![finite(&["s2", "7/3"]), omega("1/2"), star("3/2")], true),
        ("A", vec![omega("1/3"), finite(&["s1"]), star("-5/3")], true),
        ("A", vec![omega("s1+1/2"), star("s1+5/2"), finite(&["4"])], true),
        ("A", vec![omega("s1"), star("s2")], false),
        ("A", vec![omega("1/2"), star("1")], false),
        ("A", vec![rising(0), star("0")], false),
        ("A", vec![omega("0"), generic_star.clone()], false),
        ("A", vec![generic_omega.clone(), star("0")], false),
        ("A", vec![omega("0"), omega("s3"), star("0")], false),
        ("A", vec![omega("2"), omega("5"), star("-1")], true),
        ("A", vec![finite(&["0"]), omega("0"), star("1/4")], false),
        ("A", vec![omega("s1"), star("s1")], true),
    ]);
    out.check(cases.len() == 50, || format!("{} profiles instead of 50", cases.len()));
    for (t, blocks, want) in &cases {
        let json = format!(r#"{{"type":"{t}","blocks":[{}]}}"#, blocks.join(","));
        let p = profile(&json);
        out.check(annihilator_nonzero(&p) == *want, || format!("{json}: expected {want}"));
        if is_dominant(&p) {
            out.check(annihilator_nonzero(&p), || format!("{json}: dominant with zero annihilator"));
        }
    }
    out.report(8, started)
}

fn diagram(rows: &[usize]) -> YoungDiagram {
    YoungDiagram::from_rows(rows.to_vec()).expect("valid rows")
}

/// Type, blocks, `Y_l`, `Y_r`, `v`, half flag.
type LabelCase = (&'static str, Vec<String>, Vec<usize>, Option<Vec<usize>>, usize, bool);

fn criterion_9() -> bool {
    let started = Instant::now();
    let mut out = Outcome::default();
    let f = |vs: &[&str]| {
        let vs: Vec<String> = vs.iter().map(|v| format!("\"{v}\"")).collect();
        format!(r#"{{"order":"finite","size":{},"values":[{}]}}"#, vs.len(), vs.join(","))
    };
    let omega = |v: &str| format!(r#"{{"order":"omega","pattern":{{"constant":"{v}"}}}}"#);
    let star = |v: &str| format!(r#"{{"order":"omega_star","pattern":{{"constant":"{v}"}}}}"#);
    let cases: Vec<LabelCase> = vec![
        ("A", vec![omega("0"), star("0")], vec![], Some(vec![]), 0, false),
        ("A", vec![f(&["s1+2", "s1+1"]), omega("s1"), star("s1")], vec![2, 1], Some(vec![]), 0, false),
        ("A", vec![omega("s1+3"), star("s1+1"), f(&["s1", "s1"])], vec![], Some(vec![2]), 2, false),
        ("B", vec![f(&["1", "1", "1"]), omega("0")], vec![3], None, 0, false),
        ("B", vec![omega("1/2")], vec![], None, 0, true),
        ("B", vec![f(&["7/2", "5/2"]), omega("3/2")], vec![2, 1], None, 1, true),
        ("C", vec![f(&["2"]), omega("1")], vec![1], None, 1, false),
        ("C", vec![f(&["3", "2", "1"]), omega("0")], vec![3, 2, 1], None, 0, false),
        ("C", vec![f(&["2", "2"]), omega("2"), star("0")], vec![], None, 2, false),
        ("D", vec![f(&["2", "1"]), omega("1"), f(&["-1"])], vec![1], None, 1, false),
        ("D", vec![omega("1/2")], vec![], None, 0, true),
        ("D", vec![f(&["5/2", "3/2"]), omega("1/2")], vec![2, 1], None, 0, true),
    ];
    for (t, blocks, y_l, y_r, v, half) in &cases {
        let json = format!(r#"{{"type":"{t}","blocks":[{}]}}"#, blocks.join(","));
        let p = profile(&json);
        let got = match annihilator_label(&p) {
            Ok(l) => l,
            Err(e) => {
                out.check(false, || format!("{json}: {e}"));
                continue;
            }
        };
        let same = got.y_l == diagram(y_l)
            && got.y_r == y_r.as_deref().map(diagram)
            && got.v == *v
            && got.w == 0
            && got.half_flag == *half;
        out.check(same, || format!("{json}: got {got}"));
        let expected_rank = match got.special {
            Special::Proper => Some(0),
            _ => None,
        };
        out.check(rank(&got).ok() == expected_rank, || format!("{json}: rank of {got}"));
    }

    let mut rng = rng(9);
    for _ in 0..C9_RANDOM_LABELS {
        let l = random::label(&mut rng);
        let dual = match l.algebra {
            Algebra::Sl => sl_involution(&l),
            _ => osp_dual(&l),
        }
        .expect("proper labels dualize");
        let back = match l.algebra {
            Algebra::Sl => sl_involution(&dual),
            _ => osp_dual(&dual),
        };
        out.check(back.as_ref().ok() == Some(&l), || format!("{l} came back as {back:?}"));
        if l.special == Special::Proper {
            let factor = if l.algebra == Algebra::Sl { 1 } else { 2 };
            out.check(rank(&l).ok() == Some(factor * l.w), || format!("rank of {l}"));
            if dual.special == Special::Proper {
                out.check(rank(&dual).ok() == Some(factor * l.v), || format!("rank of the dual of {l}"));
            }
        }
    }

    let spin = IdealLabel::new(Algebra::O, YoungDiagram::empty(), None, 0, 0, true).expect("valid label");
    let sw = IdealLabel::new(Algebra::Sp, YoungDiagram::empty(), None, 0, 0, true).expect("valid label");
    let got = osp_dual(&spin);
    out.check(got.as_ref().ok() == Some(&sw), || format!("Spin went to {got:?}"));
    out.check(got.map(|l| l.to_string().ends_with("+SW")).unwrap_or(false), || "dual of Spin is not SW".into());
    let b_spin =
        annihilator_label(&profile(r#"{"type":"B","blocks":[{"order":"omega","pattern":{"constant":"1/2"}}]}"#));
    out.check(b_spin.and_then(|l| osp_dual(&l)).as_ref().ok() == Some(&sw), || {
        "B half profile does not dualize to SW".into()
    });

    for l in [spin, diagram_label(&[2, 1], 1)] {
        let order = [OrderType::Finite(2), OrderType::Omega];
        let back = synthesize_profile(&l, LieType::B, &order).and_then(|p| annihilator_label(&p));
        out.check(back.as_ref().ok() == Some(&l), || format!("{l} synthesized back as {back:?}"));
    }
    out.report(9, started)
}

fn diagram_label(rows: &[usize], v: usize) -> IdealLabel {
    IdealLabel::new(Algebra::O, diagram(rows), None, v, 0, false).expect("valid label")
}

fn run_cli(args: &[&str], stdin: Option<&str>) -> (Vec<u8>, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nilorbit"));
    cmd.args(args);
    let out = match stdin {
        None => cmd.output().expect("binary runs"),
        Some(text) => {
            use std::io::Write;
            use std::process::Stdio;
            let mut child =
                cmd.stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().expect("spawn");
            child.stdin.take().expect("piped").write_all(text.as_bytes()).expect("write stdin");
            child.wait_with_output().expect("binary runs")
        }
    };
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn criterion_10() -> bool {
    let started = Instant::now();
    let mut out = Outcome::default();
    let profile = r#"{"type":"C","blocks":[{"order":"finite","size":3,"values":["3","2","1"]},{"order":"omega","pattern":{"constant":"0"}}]}"#;
    let batch = r#"[{"type":"B","f":["1","s1","-1/2"]},{"type":"D","f":["0","0","0"]},{"type":"X","f":[]}]"#;
    let invocations: Vec<(Vec<&str>, Option<&str>)> = vec![
        (vec!["orbit", "--type", "C", "--f", "1/2,1/2"], None),
        (vec!["orbit", "--type", "D", "--f", "s1,3,-s1+1/2,2"], None),
        (vec!["corank", "--type", "B", "--f", "1,0,-1"], None),
        (vec!["springer", "--type", "C", "--partition", "1,1,2,4"], None),
        (vec!["orbit", "--batch", "-"], Some(batch)),
        (vec!["label", "-"], Some(profile)),
        (vec!["criterion", "-"], Some(profile)),
        (vec!["dominant", "-"], Some(profile)),
        (vec!["calibrate"], None),
        (vec!["selftest", "--seed", "5", "--cases", "300"], None),
        (vec!["orbit", "--type", "C", "--f", "bogus"], None),
    ];
    for (args, stdin) in &invocations {
        let first = run_cli(args, *stdin);
        out.check(!first.0.is_empty(), || format!("{args:?} printed nothing"));
        for _ in 1..C10_RUNS {
            let again = run_cli(args, *stdin);
            out.check(again == first, || format!("{args:?} differs between runs"));
        }
    }
    out.report(10, started)
}

fn main() {
    let results = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    if failed.is_empty() {
        println!("acceptance: all 10 criteria pass");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
