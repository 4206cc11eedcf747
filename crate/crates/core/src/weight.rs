//! Exact weight values, the ρ-shift, and the class decomposition with its
//! ▷ orders.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::ClassicalType;

/// `σ_sym + q`, where `σ_0 = 0`, `σ_{−k} = −σ_k`, and the `σ_k` for `k > 0`
/// are algebraically independent over ℚ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeightValue {
    pub sym: i64,
    pub q: Rational64,
}

impl WeightValue {
    pub fn rational(q: Rational64) -> Self {
        WeightValue { sym: 0, q }
    }

    pub fn int(k: i64) -> Self {
        WeightValue::rational(Rational64::from_integer(k))
    }

    /// `k/2`
    pub fn halves(k: i64) -> Self {
        WeightValue::rational(Rational64::new(k, 2))
    }

    pub fn generic(sym: i64, q: Rational64) -> Self {
        WeightValue { sym, q }
    }

    /// `self + r`
    pub fn offset_by(self, r: Rational64) -> Self {
        WeightValue { sym: self.sym, q: self.q + r }
    }

    pub fn is_rational(&self) -> bool {
        self.sym == 0
    }

    /// `self − other` if it is an integer.
    pub fn integer_difference(&self, other: &WeightValue) -> Option<i64> {
        let d = self.q - other.q;
        (self.sym == other.sym && d.is_integer()).then(|| d.to_integer())
    }

    pub fn is_integral(&self) -> bool {
        self.sym == 0 && self.q.is_integer()
    }

    pub fn is_half_integral(&self) -> bool {
        self.sym == 0 && !self.q.is_integer() && (self.q * 2).is_integer()
    }

    /// The value as a rational number, when it has no symbolic part.
    pub fn as_rational(&self) -> Option<Rational64> {
        self.is_rational().then_some(self.q)
    }
}

impl std::ops::Neg for WeightValue {
    type Output = WeightValue;

    fn neg(self) -> Self {
        WeightValue { sym: -self.sym, q: -self.q }
    }
}

impl From<i64> for WeightValue {
    fn from(k: i64) -> Self {
        WeightValue::int(k)
    }
}

impl fmt::Display for WeightValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.sym, self.q.is_zero()) {
            (0, _) => write!(f, "{}", self.q),
            (s, true) if s < 0 => write!(f, "-s{}", -s),
            (s, true) => write!(f, "s{s}"),
            (s, false) => {
                let head = if s < 0 { format!("-s{}", -s) } else { format!("s{s}") };
                if self.q.is_negative() {
                    write!(f, "{head}-{}", -self.q)
                } else {
                    write!(f, "{head}+{}", self.q)
                }
            }
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational64> {
    let s = s.trim();
    let bad = || Error::Schema(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().map_err(|_| bad())?;
            let b: i64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(a, b))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for WeightValue {
    type Err = Error;

    /// Accepts `3`, `-1/2`, `s1`, `-s2`, `s1+1/2`, `s3-2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) if rest.trim_start().starts_with('s') => (true, rest.trim_start()),
            _ => (false, t),
        };
        let Some(rest) = body.strip_prefix('s') else {
            return Ok(WeightValue::rational(parse_rational(t)?));
        };
        let cut = rest.find(['+', '-']).unwrap_or(rest.len());
        let sym: i64 = rest[..cut].trim().parse().map_err(|_| Error::Schema(format!("bad symbol in {t:?}")))?;
        if sym <= 0 {
            return Err(Error::Schema(format!("symbol ids start at 1: {t:?}")));
        }
        let q = if cut == rest.len() {
            Rational64::zero()
        } else {
            let sign = if &rest[cut..cut + 1] == "-" { -1 } else { 1 };
            parse_rational(&rest[cut + 1..])? * sign
        };
        let sym = if neg { -sym } else { sym };
        Ok(WeightValue { sym, q })
    }
}

#[derive(Serialize, Deserialize)]
struct RawValue {
    sym: i64,
    q: String,
}

impl Serialize for WeightValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawValue { sym: self.sym, q: self.q.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Any {
            Int(i64),
            Str(String),
            Obj(RawValue),
        }
        match Any::deserialize(d)? {
            Any::Int(k) => Ok(WeightValue::int(k)),
            Any::Str(s) => s.parse().map_err(D::Error::custom),
            Any::Obj(raw) => {
                let q = parse_rational(&raw.q).map_err(D::Error::custom)?;
                Ok(WeightValue { sym: raw.sym, q })
            }
        }
    }
}

/// `f = (f(1), …, f(n))` together with the type it is read in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawWeightVector")]
pub struct WeightVector {
    #[serde(rename = "type")]
    pub lie_type: ClassicalType,
    #[serde(rename = "f")]
    values: Vec<WeightValue>,
}

#[derive(Deserialize)]
struct RawWeightVector {
    #[serde(rename = "type")]
    lie_type: ClassicalType,
    f: Vec<WeightValue>,
}

impl TryFrom<RawWeightVector> for WeightVector {
    type Error = Error;

    fn try_from(raw: RawWeightVector) -> Result<Self> {
        WeightVector::new(raw.lie_type, raw.f)
    }
}

impl WeightVector {
    pub fn new(lie_type: ClassicalType, values: Vec<WeightValue>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Schema("a weight needs at least one coordinate".into()));
        }
        Ok(WeightVector { lie_type, values })
    }

    /// Parses a comma-separated list of values.
    pub fn parse(lie_type: ClassicalType, list: &str) -> Result<Self> {
        let values = list.split(',').map(str::parse).collect::<Result<Vec<_>>>()?;
        WeightVector::new(lie_type, values)
    }

    pub fn zero(lie_type: ClassicalType, n: usize) -> Self {
        WeightVector::new(lie_type, vec![WeightValue::int(0); n.max(1)]).expect("nonempty")
    }

    /// `(σ_1, …, σ_n)`
    pub fn generic(lie_type: ClassicalType, n: usize) -> Self {
        let values = (1..=n.max(1) as i64).map(|s| WeightValue::generic(s, Rational64::zero())).collect();
        WeightVector::new(lie_type, values).expect("nonempty")
    }

    pub fn constant(lie_type: ClassicalType, n: usize, v: WeightValue) -> Self {
        WeightVector::new(lie_type, vec![v; n.max(1)]).expect("nonempty")
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[WeightValue] {
        &self.values
    }

    /// Appends one coordinate.
    pub fn pushed(&self, v: WeightValue) -> Self {
        let mut values = self.values.clone();
        values.push(v);
        WeightVector { lie_type: self.lie_type, values }
    }
}

/// Signed index `i ∈ {±1, …, ±n}` at position `pos` of the order
/// `1 ≺ 2 ≺ … ≺ n ≺ −n ≺ … ≺ −1`.
pub fn index_at(n: usize, pos: usize) -> i64 {
    if pos < n {
        pos as i64 + 1
    } else {
        -((2 * n - pos) as i64)
    }
}

/// Position of the signed index `i` in the order above.
pub fn position_of(n: usize, i: i64) -> usize {
    if i > 0 {
        i as usize - 1
    } else {
        2 * n - (-i) as usize
    }
}

/// A function on `{±1, …, ±n}` stored in ≺-position order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extended {
    pub n: usize,
    pub values: Vec<WeightValue>,
}

impl Extended {
    /// Antisymmetric extension `g(−i) = −g(i)`.
    pub fn antisymmetric(values: &[WeightValue]) -> Self {
        let n = values.len();
        let all = (0..2 * n)
            .map(|pos| {
                let i = index_at(n, pos);
                let v = values[i.unsigned_abs() as usize - 1];
                if i > 0 {
                    v
                } else {
                    -v
                }
            })
            .collect();
        Extended { n, values: all }
    }

    pub fn at(&self, i: i64) -> WeightValue {
        self.values[position_of(self.n, i)]
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> + '_ {
        (0..2 * self.n).map(|pos| index_at(self.n, pos))
    }
}

/// Shift added to `f(i)` by the ρ-shift of the given type.
pub fn rho(lie_type: ClassicalType, n: usize, i: usize) -> Rational64 {
    let (n, i) = (n as i64, i as i64);
    match lie_type {
        ClassicalType::B => Rational64::new(2 * n - 2 * i + 1, 2),
        ClassicalType::C => Rational64::from_integer(n - i + 1),
        ClassicalType::D => Rational64::from_integer(n - i),
    }
}

/// `f^+` on `{±1, …, ±n}`.
pub fn rho_shift(f: &WeightVector) -> Extended {
    let n = f.n();
    let shifted: Vec<WeightValue> =
        f.values().iter().enumerate().map(|(k, v)| v.offset_by(rho(f.lie_type, n, k + 1))).collect();
    Extended::antisymmetric(&shifted)
}

/// What a class is made of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Integral,
    HalfIntegral,
    Generic,
}

/// One equivalence class with its ▷ order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightClass {
    pub kind: ClassKind,
    /// Members in ≺ order.
    pub members: Vec<i64>,
    /// `ranks[k]` is the number of members beaten under ▷ by `members[k]`.
    pub ranks: Vec<usize>,
    /// The pair `(m, −m)` on which the exception rule fired, if it did.
    pub exception: Option<(i64, i64)>,
}

impl WeightClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// `a ▷ b`
    pub fn beats(&self, a: i64, b: i64) -> bool {
        let ra = self.members.iter().position(|&x| x == a).map(|k| self.ranks[k]);
        let rb = self.members.iter().position(|&x| x == b).map(|k| self.ranks[k]);
        matches!((ra, rb), (Some(x), Some(y)) if x > y)
    }
}

/// The classes `[∼]_1, [∼]_2, …`: integral, half-integral, then generic
/// classes in negation pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassDecomposition {
    pub lie_type: ClassicalType,
    pub n: usize,
    pub classes: Vec<WeightClass>,
}

impl ClassDecomposition {
    /// `n_i` for class `i` (1-based).
    pub fn class_size(&self, i: usize) -> usize {
        self.classes.get(i - 1).map_or(0, WeightClass::size)
    }
}

fn base_beats(fp: &Extended, m: i64, k: i64) -> bool {
    let (first, second) = if position_of(fp.n, m) < position_of(fp.n, k) { (m, k) } else { (k, m) };
    let first_wins = matches!(fp.at(first).integer_difference(&fp.at(second)), Some(d) if d > 0);
    (first == m) == first_wins
}

fn has_exception(lie_type: ClassicalType, class_number: usize) -> bool {
    matches!((lie_type, class_number), (ClassicalType::C, 2) | (ClassicalType::D, 1) | (ClassicalType::D, 2))
}

fn order_class(
    fp: &Extended,
    kind: ClassKind,
    members: Vec<i64>,
    exc_rule: bool,
    number: usize,
) -> Result<WeightClass> {
    let malformed = |detail: String| Error::MalformedOrder { class: number, detail };
    let exception = if exc_rule && !members.is_empty() {
        let abs = |i: i64| {
            fp.at(i).as_rational().map(|q| q.abs()).ok_or_else(|| malformed(format!("non-rational value at {i}")))
        };
        let mut v = abs(members[0])?;
        for &i in &members[1..] {
            v = v.min(abs(i)?);
        }
        let mut m = None;
        for &i in &members {
            if abs(i)? == v {
                m = Some(i);
            }
        }
        let m = m.expect("minimum is attained");
        Some((m, -m))
    } else {
        None
    };
    let beats = |a: i64, b: i64| match exception {
        Some((x, y)) if (a, b) == (x, y) => true,
        Some((x, y)) if (a, b) == (y, x) => false,
        _ => base_beats(fp, a, b),
    };
    for &a in &members {
        for &b in &members {
            if a != b && fp.at(a).integer_difference(&fp.at(b)).is_none() {
                return Err(malformed(format!("{a} and {b} differ by a non-integer")));
            }
        }
    }
    let ranks: Vec<usize> =
        members.iter().map(|&a| members.iter().filter(|&&b| a != b && beats(a, b)).count()).collect();
    for (x, &a) in members.iter().enumerate() {
        for (y, &b) in members.iter().enumerate() {
            if x != y && beats(a, b) != (ranks[x] > ranks[y]) {
                return Err(malformed(format!("{a} and {b} are ranked against the relation")));
            }
        }
    }
    Ok(WeightClass { kind, members, ranks, exception })
}

/// Splits `{±1, …, ±n}` into classes of integer differences of `f` and
/// builds the ▷ order on each.
pub fn decompose(f: &WeightVector) -> Result<ClassDecomposition> {
    let n = f.n();
    let plain = Extended::antisymmetric(f.values());
    let fp = rho_shift(f);
    let mut integral = Vec::new();
    let mut half = Vec::new();
    let mut generic: Vec<Vec<i64>> = Vec::new();
    for i in plain.indices() {
        let v = plain.at(i);
        if v.is_integral() {
            integral.push(i);
        } else if v.is_half_integral() {
            half.push(i);
        } else if let Some(c) = generic.iter_mut().find(|c| plain.at(c[0]).integer_difference(&v).is_some()) {
            c.push(i);
        } else {
            generic.push(vec![i]);
        }
    }
    // pair each generic class with its negative, leading with the class that
    // holds the smaller positive index
    let min_pos = |c: &Vec<i64>| c.iter().filter(|&&i| i > 0).min().copied().unwrap_or(i64::MAX);
    generic.sort_by_key(min_pos);
    let mut pairs: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    let mut taken = vec![false; generic.len()];
    for a in 0..generic.len() {
        if taken[a] {
            continue;
        }
        let mut negated: Vec<i64> = generic[a].iter().map(|i| -i).collect();
        negated.sort_by_key(|&i| position_of(n, i));
        let b = (0..generic.len()).find(|&b| !taken[b] && b != a && generic[b] == negated).ok_or_else(|| {
            Error::Invariant {
                what: "generic class without a negated partner".into(),
                state: serde_json::json!({ "class": generic[a] }),
            }
        })?;
        taken[a] = true;
        taken[b] = true;
        pairs.push((generic[a].clone(), generic[b].clone()));
    }
    let t = f.lie_type;
    let mut classes = vec![
        order_class(&fp, ClassKind::Integral, integral, has_exception(t, 1), 1)?,
        order_class(&fp, ClassKind::HalfIntegral, half, has_exception(t, 2), 2)?,
    ];
    for (a, b) in pairs {
        let k = classes.len();
        classes.push(order_class(&fp, ClassKind::Generic, a, false, k + 1)?);
        classes.push(order_class(&fp, ClassKind::Generic, b, false, k + 2)?);
    }
    Ok(ClassDecomposition { lie_type: t, n, classes })
}

/// Coarse integrality verdict of a finite weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Integrality {
    Integral,
    HalfIntegral,
    AlmostIntegral,
    AlmostHalfIntegral,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValueClassification {
    pub verdict: Integrality,
    /// 1-based indices outside the integral (or half-integral) lattice.
    pub exceptions: Vec<usize>,
}

/// Classifies `f` as integral, half-integral, or one of them away from a
/// proper subset of indices. When both lattices leave exceptions the smaller
/// exception set wins, ties going to the integral lattice.
pub fn classify_values(f: &WeightVector) -> ValueClassification {
    let off = |pred: fn(&WeightValue) -> bool| -> Vec<usize> {
        f.values().iter().enumerate().filter(|(_, v)| !pred(v)).map(|(k, _)| k + 1).collect()
    };
    let off_int = off(WeightValue::is_integral);
    let off_half = off(WeightValue::is_half_integral);
    let n = f.n();
    let (verdict, exceptions) = if off_int.is_empty() {
        (Integrality::Integral, off_int)
    } else if off_half.is_empty() {
        (Integrality::HalfIntegral, off_half)
    } else if off_int.len() < n && off_int.len() <= off_half.len() {
        (Integrality::AlmostIntegral, off_int)
    } else if off_half.len() < n {
        (Integrality::AlmostHalfIntegral, off_half)
    } else {
        (Integrality::Neither, (1..=n).collect())
    };
    ValueClassification { verdict, exceptions }
}
