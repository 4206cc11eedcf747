//! Partition calculus: sums, conjugation, parity splits, Lusztig sequences,
//! the interleaving join, star products and the B/C/D composition functions.
//!
//! Partitions are stored without zero parts. Every operation that needs
//! positional information goes through a [`ZSeq`] at an explicit length, and
//! the partition-level wrappers pick the shortest admissible length. All
//! results are independent of that choice as long as lengths are padded in
//! the steps each operation tolerates (two for Lusztig splits, one for joins
//! and star products applied to both operands at once).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Lie type of a classical simple Lie algebra handled by the orbit pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassicalType {
    B,
    C,
    D,
}

impl ClassicalType {
    pub const ALL: [ClassicalType; 3] = [ClassicalType::B, ClassicalType::C, ClassicalType::D];

    /// Dimension of the natural representation for rank `n`.
    pub fn natural_dim(self, n: usize) -> usize {
        match self {
            ClassicalType::B => 2 * n + 1,
            ClassicalType::C | ClassicalType::D => 2 * n,
        }
    }

    /// Whether the composition function of this type ever performs a star
    /// product whose merged sequence has even length. Only subscript-0 star
    /// products do; type B uses subscript 1 throughout.
    pub fn uses_even_merges(self) -> bool {
        !matches!(self, ClassicalType::B)
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassicalType::B => "B",
            ClassicalType::C => "C",
            ClassicalType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for ClassicalType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(ClassicalType::B),
            "C" | "c" => Ok(ClassicalType::C),
            "D" | "d" => Ok(ClassicalType::D),
            other => Err(Error::Schema(format!("unknown classical type {other:?}"))),
        }
    }
}

/// A partition: positive parts in nondecreasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds the partition defined by any finite sequence of nonnegative
    /// integers: zeros are dropped and the rest sorted.
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = parts.into_iter().filter(|&x| x > 0).collect();
        v.sort_unstable();
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `1^k`
    pub fn ones(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|p|`, the sum of the parts.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `♯p`, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    /// Multiplicity of the part `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.0.iter().filter(|&&x| x == k).count()
    }

    pub fn conjugate(&self) -> Partition {
        let max = self.largest();
        Partition::new((1..=max).map(|i| self.0.iter().filter(|&&x| x >= i).count()))
    }

    /// Multiset union of the parts.
    pub fn plus(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Column-wise sum: the conjugate of the sum of the conjugates.
    pub fn hat_plus(&self, other: &Partition) -> Partition {
        self.conjugate().plus(&other.conjugate()).conjugate()
    }

    /// `(p^e, p^o)`: pad to odd length `2♯p − 1` with leading zeros and split
    /// by position parity.
    pub fn parity_split(&self) -> (Partition, Partition) {
        if self.is_empty() {
            return (Partition::empty(), Partition::empty());
        }
        let padded: Vec<usize> = std::iter::repeat_n(0, self.len() - 1).chain(self.0.iter().copied()).collect();
        let even = Partition::new(padded.iter().step_by(2).copied());
        let odd = Partition::new(padded.iter().skip(1).step_by(2).copied());
        (even, odd)
    }

    /// All partitions of `n`, in lexicographic order of their part lists.
    pub fn all_of_weight(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for k in min..=rest {
                if rest - k != 0 && rest - k < k {
                    continue;
                }
                cur.push(k);
                rec(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 1, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Partition::new(Vec::<usize>::deserialize(d)?))
    }
}

/// A Lusztig sequence: a strictly increasing finite sequence of nonnegative
/// integers. The empty sequence is allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ZSeq(Vec<usize>);

impl ZSeq {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadZSeq(format!("{entries:?} is not strictly increasing")));
        }
        Ok(ZSeq(entries))
    }

    fn from_sorted(entries: Vec<usize>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        ZSeq(entries)
    }

    /// Encodes `p` with exactly `length` entries: `z_i = part_i + i` after
    /// padding `p` with leading zeros.
    pub fn encode(p: &Partition, length: usize) -> Result<Self> {
        if length < p.len() {
            return Err(Error::EncodingTooShort { length, parts: p.len() });
        }
        let zeros = length - p.len();
        let entries = (0..length).map(|i| if i < zeros { i } else { p.0[i - zeros] + i }).collect();
        Ok(ZSeq(entries))
    }

    /// `p(z)`: parts `z_i − i`, zeros dropped.
    pub fn decode(&self) -> Partition {
        Partition::new(self.0.iter().enumerate().map(|(i, &z)| z - i))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The equivalent sequence `k` entries longer: `{0,…,k−1} ∪ (z + k)`.
    pub fn padded(&self, k: usize) -> ZSeq {
        ZSeq((0..k).chain(self.0.iter().map(|&z| z + k)).collect())
    }

    /// `(z^Le, z^Lo)`: even entries halved, odd entries `(z − 1)/2`.
    pub fn lusztig_halves(&self) -> (ZSeq, ZSeq) {
        let even = self.0.iter().filter(|&&z| z % 2 == 0).map(|&z| z / 2).collect();
        let odd = self.0.iter().filter(|&&z| z % 2 == 1).map(|&z| (z - 1) / 2).collect();
        (ZSeq::from_sorted(even), ZSeq::from_sorted(odd))
    }

    /// `⟨z, z'⟩ = {2z_i} ⊔ {2z'_j + 1}`.
    pub fn interleave(z: &ZSeq, w: &ZSeq) -> ZSeq {
        let mut all: Vec<usize> = z.0.iter().map(|&x| 2 * x).chain(w.0.iter().map(|&x| 2 * x + 1)).collect();
        all.sort_unstable();
        ZSeq::from_sorted(all)
    }

    /// Sorted merge of two sequences split into its alternating halves,
    /// returned as `(e, o)`. For odd total length the half holding the
    /// smallest entry is `e`; for even total length `reading` decides.
    pub fn merge_halves(z: &ZSeq, w: &ZSeq, reading: MergeReading) -> (ZSeq, ZSeq) {
        let mut all: Vec<usize> = z.0.iter().chain(w.0.iter()).copied().collect();
        all.sort_unstable();
        let at_even: Vec<usize> = all.iter().step_by(2).copied().collect();
        let at_odd: Vec<usize> = all.iter().skip(1).step_by(2).copied().collect();
        let (e, o) = if all.len() % 2 == 1 || reading == MergeReading::EvenPositions {
            (at_even, at_odd)
        } else {
            (at_odd, at_even)
        };
        (ZSeq::from_sorted(e), ZSeq::from_sorted(o))
    }
}

impl Serialize for ZSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ZSeq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ZSeq::new(Vec::<usize>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Which positional class of an even-length sorted merge is labeled `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MergeReading {
    /// Entries at ascending positions 0, 2, 4, … form `e`.
    #[default]
    EvenPositions,
    /// Entries at ascending positions 1, 3, 5, … form `e`.
    OddPositions,
}

impl MergeReading {
    pub const BOTH: [MergeReading; 2] = [MergeReading::EvenPositions, MergeReading::OddPositions];

    fn tag(self) -> &'static str {
        match self {
            MergeReading::EvenPositions => "even",
            MergeReading::OddPositions => "odd",
        }
    }
}

/// Per-type choice of [`MergeReading`] used by the star products inside the
/// B/C/D composition functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EoConvention {
    pub b: MergeReading,
    pub c: MergeReading,
    pub d: MergeReading,
}

impl EoConvention {
    /// The assignment singled out by the calibration anchors; see
    /// [`crate::orbit::calibrate`].
    pub const CALIBRATED: EoConvention =
        EoConvention { b: MergeReading::EvenPositions, c: MergeReading::OddPositions, d: MergeReading::EvenPositions };

    pub fn reading(&self, t: ClassicalType) -> MergeReading {
        match t {
            ClassicalType::B => self.b,
            ClassicalType::C => self.c,
            ClassicalType::D => self.d,
        }
    }

    pub fn with_reading(mut self, t: ClassicalType, r: MergeReading) -> Self {
        match t {
            ClassicalType::B => self.b = r,
            ClassicalType::C => self.c = r,
            ClassicalType::D => self.d = r,
        }
        self
    }

    /// All eight assignments.
    pub fn all() -> Vec<EoConvention> {
        let mut out = Vec::with_capacity(8);
        for b in MergeReading::BOTH {
            for c in MergeReading::BOTH {
                for d in MergeReading::BOTH {
                    out.push(EoConvention { b, c, d });
                }
            }
        }
        out
    }

    /// Resets readings of types that never see an even-length merge, so that
    /// assignments differing only in inert flags compare equal.
    pub fn canonical(self) -> Self {
        let mut out = self;
        for t in ClassicalType::ALL {
            if !t.uses_even_merges() {
                out = out.with_reading(t, MergeReading::default());
            }
        }
        out
    }

    /// Short stable identifier, e.g. `B:even,C:odd,D:even`.
    pub fn fingerprint(&self) -> String {
        format!("B:{},C:{},D:{}", self.b.tag(), self.c.tag(), self.d.tag())
    }
}

impl Default for EoConvention {
    fn default() -> Self {
        EoConvention::CALIBRATED
    }
}

impl FromStr for EoConvention {
    type Err = Error;

    /// Parses a fingerprint. Types may be omitted; they keep the calibrated
    /// reading.
    fn from_str(s: &str) -> Result<Self> {
        let mut conv = EoConvention::CALIBRATED;
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (t, r) = item.split_once(':').ok_or_else(|| Error::Schema(format!("bad convention item {item:?}")))?;
            let t: ClassicalType = t.parse()?;
            let r = match r.trim() {
                "even" => MergeReading::EvenPositions,
                "odd" => MergeReading::OddPositions,
                other => return Err(Error::Schema(format!("bad merge reading {other:?}"))),
            };
            conv = conv.with_reading(t, r);
        }
        Ok(conv)
    }
}

/// Which half of a star product to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Half {
    E,
    O,
}

/// Parity of an encoding length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthParity {
    Odd,
    Even,
}

/// Parity of the merged length of a join or star product with subscript
/// `delta_m`.
pub fn join_parity(delta_m: i64) -> LengthParity {
    if delta_m.rem_euclid(2) == 1 {
        LengthParity::Odd
    } else {
        LengthParity::Even
    }
}

/// Shortest encoding length `≥ ♯p` with the requested parity.
pub fn min_length_with_parity(p: &Partition, parity: LengthParity) -> usize {
    let l = p.len();
    let is_odd = l % 2 == 1;
    match (parity, is_odd) {
        (LengthParity::Odd, true) | (LengthParity::Even, false) => l,
        _ => l + 1,
    }
}

/// Shortest pair of encoding lengths `(L, L')` with `L − L' = delta_m` that
/// accommodates both partitions.
pub fn join_lengths(p: &Partition, q: &Partition, delta_m: i64) -> (usize, usize) {
    let lp = (p.len() as i64).max(q.len() as i64 + delta_m).max(0);
    let lq = lp - delta_m;
    (lp as usize, lq as usize)
}

/// `(p^{Le}, p^{Lo})` computed from an odd-length encoding.
pub fn lusztig_split(p: &Partition) -> (Partition, Partition) {
    lusztig_split_with(p, LengthParity::Odd)
}

/// Lusztig halves read off an encoding of the given length parity. The odd
/// reading is the standard one; the even reading inverts subscript-0 joins.
pub fn lusztig_split_with(p: &Partition, parity: LengthParity) -> (Partition, Partition) {
    let len = min_length_with_parity(p, parity);
    let z = ZSeq::encode(p, len).expect("length chosen to fit");
    let (e, o) = z.lusztig_halves();
    (e.decode(), o.decode())
}

/// `⟨p, q⟩_{Δm}`. Defined for every `Δm`: the shorter operand is padded.
pub fn angle_join(p: &Partition, q: &Partition, delta_m: i64) -> Partition {
    let (lp, lq) = join_lengths(p, q, delta_m);
    let z = ZSeq::encode(p, lp).expect("length chosen to fit");
    let w = ZSeq::encode(q, lq).expect("length chosen to fit");
    ZSeq::interleave(&z, &w).decode()
}

/// BV-partitions are those rebuilt from their Lusztig halves by the
/// subscript-1 join.
pub fn is_bv(p: &Partition) -> bool {
    let (le, lo) = lusztig_split(p);
    angle_join(&le, &lo, 1) == *p
}

/// `p ⋆^{e|o}_{Δm} q`.
pub fn star(p: &Partition, q: &Partition, delta_m: i64, half: Half, reading: MergeReading) -> Partition {
    let (lp, lq) = join_lengths(p, q, delta_m);
    let z = ZSeq::encode(p, lp).expect("length chosen to fit");
    let w = ZSeq::encode(q, lq).expect("length chosen to fit");
    let (e, o) = ZSeq::merge_halves(&z, &w, reading);
    match half {
        Half::E => e.decode(),
        Half::O => o.decode(),
    }
}

/// Star product of the Lusztig halves of `p` with itself.
fn lusztig_star(p: &Partition, delta_m: i64, half: Half, reading: MergeReading) -> Partition {
    let (le, lo) = lusztig_split(p);
    star(&le, &lo, delta_m, half, reading)
}

/// The B, C and D composition functions of three partitions.
pub fn bcd_compose(
    p1: &Partition,
    p2: &Partition,
    p3: &Partition,
    lie_type: ClassicalType,
    conv: &EoConvention,
) -> Partition {
    let r = conv.reading(lie_type);
    let (p3e, p3o) = p3.parity_split();
    // (subscript for p1, subscript for p2, half in left slot, left p3 half,
    //  right p3 half, outer subscript)
    let (s1, s2, left, left3, right3, outer) = match lie_type {
        ClassicalType::B => (1, 1, Half::O, &p3o, &p3e, -1),
        ClassicalType::C => (1, 0, Half::E, &p3e, &p3o, 1),
        ClassicalType::D => (0, 0, Half::O, &p3e, &p3o, 0),
    };
    let right = match left {
        Half::E => Half::O,
        Half::O => Half::E,
    };
    let first = lusztig_star(p1, s1, left, r).hat_plus(&lusztig_star(p2, s2, left, r)).hat_plus(left3);
    let second = lusztig_star(p1, s1, right, r).hat_plus(&lusztig_star(p2, s2, right, r)).hat_plus(right3);
    angle_join(&first, &second, outer)
}
