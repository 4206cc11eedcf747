//! Seeded generators for partitions, weights and labels.

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::borel::{Algebra, IdealLabel, YoungDiagram};
use crate::partition::{ClassicalType, Partition};
use crate::weight::{WeightValue, WeightVector};

/// A partition of a uniformly chosen weight `≤ max_weight`, built from random
/// parts.
pub fn partition<R: Rng + ?Sized>(rng: &mut R, max_weight: usize) -> Partition {
    let mut rest = rng.gen_range(0..=max_weight);
    let mut parts = Vec::new();
    while rest > 0 {
        // favour small parts so long partitions show up too
        let cap = if rng.gen_bool(0.5) { rest.min(2) } else { rest };
        let k = rng.gen_range(1..=cap);
        parts.push(k);
        rest -= k;
    }
    Partition::new(parts)
}

/// A value that is integral, half-integral, or generic over a small pool of
/// symbols, so that classes of every kind and size occur.
pub fn value<R: Rng + ?Sized>(rng: &mut R) -> WeightValue {
    let k = rng.gen_range(-4i64..=4);
    match rng.gen_range(0..10) {
        0..=3 => WeightValue::int(k),
        4..=6 => WeightValue::rational(Rational64::new(2 * k + 1, 2)),
        _ => {
            let sym = *[1i64, 2, 3, -1, -2].choose(rng).expect("nonempty");
            let q = if rng.gen_bool(0.7) { Rational64::from_integer(k) } else { Rational64::new(2 * k + 1, 2) };
            WeightValue::generic(sym, q)
        }
    }
}

pub fn weight<R: Rng + ?Sized>(rng: &mut R, t: ClassicalType, n: usize) -> WeightVector {
    let uniform = rng.gen_bool(0.15);
    let first = value(rng);
    let values = (0..n.max(1)).map(|_| if uniform { first } else { value(rng) }).collect();
    WeightVector::new(t, values).expect("nonempty")
}

pub fn young_diagram<R: Rng + ?Sized>(rng: &mut R, max_size: usize) -> YoungDiagram {
    YoungDiagram::from(&partition(rng, max_size))
}

pub fn label<R: Rng + ?Sized>(rng: &mut R) -> IdealLabel {
    let algebra = *[Algebra::Sl, Algebra::O, Algebra::Sp].choose(rng).expect("nonempty");
    let y_l = young_diagram(rng, 6);
    let y_r = (algebra == Algebra::Sl).then(|| young_diagram(rng, 6));
    let half = algebra != Algebra::Sl && rng.gen_bool(0.3);
    IdealLabel::new(algebra, y_l, y_r, rng.gen_range(0..=3), rng.gen_range(0..=3), half).expect("consistent fields")
}
