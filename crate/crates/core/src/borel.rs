//! Splitting Borel orders on the positive integers described by finitely many
//! blocks, weight functions on them, and the labels of the resulting
//! annihilators.

use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::weight::{Integrality, WeightValue};

/// Type of the infinite-rank algebra: `sl(∞)` is A, `o(∞)` is B or D,
/// `sp(∞)` is C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl LieType {
    pub const ALL: [LieType; 4] = [LieType::A, LieType::B, LieType::C, LieType::D];

    pub fn algebra(self) -> Algebra {
        match self {
            LieType::A => Algebra::Sl,
            LieType::B | LieType::D => Algebra::O,
            LieType::C => Algebra::Sp,
        }
    }
}

impl std::str::FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::Schema(format!("unknown type {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algebra {
    Sl,
    O,
    Sp,
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::Sl => "sl",
            Algebra::O => "o",
            Algebra::Sp => "sp",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderType {
    Finite(usize),
    /// `1 < 2 < 3 < …`
    Omega,
    /// `… < −3 < −2 < −1`
    OmegaStar,
}

impl OrderType {
    pub fn is_infinite(self) -> bool {
        !matches!(self, OrderType::Finite(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValuePattern {
    Constant(WeightValue),
    /// Listed along the order; finite blocks only.
    #[serde(skip)]
    Explicit(Vec<WeightValue>),
    /// `s, s+1, s+2, …`; ω blocks only.
    StrictlyIncreasingIntegers(i64),
    /// Pairwise unrelated generic values.
    GenericDistinct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBlock", into = "RawBlock")]
pub struct Block {
    pub order: OrderType,
    pub pattern: ValuePattern,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum RawOrder {
    Finite,
    Omega,
    OmegaStar,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBlock {
    order: RawOrder,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    values: Option<Vec<WeightValue>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pattern: Option<ValuePattern>,
}

impl TryFrom<RawBlock> for Block {
    type Error = Error;

    fn try_from(raw: RawBlock) -> Result<Self> {
        let order = match (raw.order, raw.size) {
            (RawOrder::Finite, Some(k)) => OrderType::Finite(k),
            (RawOrder::Finite, None) => return Err(Error::Schema("finite block without size".into())),
            (RawOrder::Omega, None) => OrderType::Omega,
            (RawOrder::OmegaStar, None) => OrderType::OmegaStar,
            (_, Some(_)) => return Err(Error::Schema("only finite blocks carry a size".into())),
        };
        let pattern = match (raw.values, raw.pattern) {
            (Some(v), None) => ValuePattern::Explicit(v),
            (None, Some(p)) => p,
            _ => return Err(Error::Schema("a block needs exactly one of values and pattern".into())),
        };
        Block::new(order, pattern)
    }
}

impl From<Block> for RawBlock {
    fn from(b: Block) -> Self {
        let (order, size) = match b.order {
            OrderType::Finite(k) => (RawOrder::Finite, Some(k)),
            OrderType::Omega => (RawOrder::Omega, None),
            OrderType::OmegaStar => (RawOrder::OmegaStar, None),
        };
        let (values, pattern) = match b.pattern {
            ValuePattern::Explicit(v) => (Some(v), None),
            p => (None, Some(p)),
        };
        RawBlock { order, size, values, pattern }
    }
}

impl Block {
    pub fn new(order: OrderType, pattern: ValuePattern) -> Result<Self> {
        match (&order, &pattern) {
            (OrderType::Finite(0), _) => return Err(Error::Schema("empty finite block".into())),
            (OrderType::Finite(k), ValuePattern::Explicit(v)) if v.len() != *k => {
                return Err(Error::Schema(format!("{} values for a block of size {k}", v.len())))
            }
            (o, ValuePattern::Explicit(_)) if o.is_infinite() => {
                return Err(Error::Schema("explicit values need a finite block".into()))
            }
            (o, ValuePattern::StrictlyIncreasingIntegers(_)) if *o != OrderType::Omega => {
                return Err(Error::Schema("increasing integers need an omega block".into()))
            }
            _ => {}
        }
        Ok(Block { order, pattern })
    }

    pub fn constant(order: OrderType, v: WeightValue) -> Self {
        Block::new(order, ValuePattern::Constant(v)).expect("constant pattern fits any block")
    }

    pub fn explicit(values: Vec<WeightValue>) -> Result<Self> {
        Block::new(OrderType::Finite(values.len()), ValuePattern::Explicit(values))
    }

    fn is_constant(&self) -> bool {
        matches!(self.pattern, ValuePattern::Constant(_))
    }
}

/// Number of elements carrying a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Count {
    Finite(usize),
    Infinite,
}

impl Count {
    fn add(self, other: Count) -> Count {
        match (self, other) {
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a + b),
            _ => Count::Infinite,
        }
    }
}

/// A linear order on the positive integers as a finite sum of blocks, with a
/// weight function described blockwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawProfile")]
pub struct BorelProfile {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    blocks: Vec<Block>,
}

#[derive(Deserialize)]
struct RawProfile {
    #[serde(rename = "type")]
    lie_type: LieType,
    blocks: Vec<Block>,
}

impl TryFrom<RawProfile> for BorelProfile {
    type Error = Error;

    fn try_from(raw: RawProfile) -> Result<Self> {
        BorelProfile::new(raw.lie_type, raw.blocks)
    }
}

impl BorelProfile {
    pub fn new(lie_type: LieType, blocks: Vec<Block>) -> Result<Self> {
        if !blocks.iter().any(|b| b.order.is_infinite()) {
            return Err(Error::Schema("a profile needs an infinite block".into()));
        }
        Ok(BorelProfile { lie_type, blocks })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn order(&self) -> Vec<OrderType> {
        self.blocks.iter().map(|b| b.order).collect()
    }

    /// Values along the order as runs of equal values, or `None` when an
    /// infinite block is not constant (then the image is infinite).
    /// Generic entries of finite blocks get fresh symbols.
    pub fn runs(&self) -> Option<Vec<(WeightValue, Count)>> {
        let mut fresh = 1 + self
            .blocks
            .iter()
            .flat_map(|b| match &b.pattern {
                ValuePattern::Constant(v) => vec![v.sym.abs()],
                ValuePattern::Explicit(vs) => vs.iter().map(|v| v.sym.abs()).collect(),
                _ => vec![],
            })
            .max()
            .unwrap_or(0);
        let mut out = Vec::new();
        for b in &self.blocks {
            match (&b.pattern, b.order) {
                (ValuePattern::Constant(v), OrderType::Finite(k)) => out.push((*v, Count::Finite(k))),
                (ValuePattern::Constant(v), _) => out.push((*v, Count::Infinite)),
                (ValuePattern::Explicit(vs), _) => out.extend(vs.iter().map(|v| (*v, Count::Finite(1)))),
                (ValuePattern::GenericDistinct, OrderType::Finite(k)) => {
                    for _ in 0..k {
                        out.push((WeightValue::generic(fresh, Rational64::zero()), Count::Finite(1)));
                        fresh += 1;
                    }
                }
                _ => return None,
            }
        }
        Some(out)
    }

    /// Whether `|f| < ∞`.
    pub fn has_finite_image(&self) -> bool {
        self.blocks.iter().filter(|b| b.order.is_infinite()).all(Block::is_constant)
    }

    fn has_maximum(&self) -> bool {
        !matches!(self.blocks.last().map(|b| b.order), Some(OrderType::Omega))
    }
}

fn first_infinite(order: &[OrderType]) -> Option<OrderType> {
    order.iter().copied().find(|o| o.is_infinite())
}

fn last_infinite(order: &[OrderType]) -> Option<OrderType> {
    order.iter().rev().copied().find(|o| o.is_infinite())
}

/// Whether the order starts with a segment isomorphic to `ℤ_{>0}` (and, in
/// type A, also ends with one isomorphic to `ℤ_{<0}`).
pub fn is_ideal_order(lie_type: LieType, order: &[OrderType]) -> bool {
    let starts = first_infinite(order) == Some(OrderType::Omega);
    match lie_type {
        LieType::A => starts && last_infinite(order) == Some(OrderType::OmegaStar),
        _ => starts,
    }
}

pub fn is_ideal_borel(p: &BorelProfile) -> bool {
    is_ideal_order(p.lie_type, &p.order())
}

/// Canonical form of a block sum up to order isomorphism: adjacent finite
/// blocks merge, a finite block before `ω` or after `ω*` is absorbed.
pub fn normalize_order(order: &[OrderType]) -> Vec<OrderType> {
    let mut out: Vec<OrderType> = Vec::new();
    for &o in order {
        match (out.last().copied(), o) {
            (_, OrderType::Finite(0)) => {}
            (Some(OrderType::Finite(a)), OrderType::Finite(b)) => {
                out.pop();
                out.push(OrderType::Finite(a + b));
            }
            (Some(OrderType::OmegaStar), OrderType::Finite(_)) => {}
            (_, OrderType::Omega) => {
                if let Some(OrderType::Finite(_)) = out.last() {
                    out.pop();
                }
                out.push(o);
            }
            _ => out.push(o),
        }
    }
    out
}

pub fn order_isomorphic(a: &[OrderType], b: &[OrderType]) -> bool {
    normalize_order(a) == normalize_order(b)
}

fn ge(a: &WeightValue, b: &WeightValue) -> bool {
    matches!(a.integer_difference(b), Some(d) if d >= 0)
        || matches!((a.as_rational(), b.as_rational()), (Some(x), Some(y)) if x >= y)
}

fn abs_value(v: &WeightValue) -> Option<Rational64> {
    v.as_rational().map(|q| q.abs())
}

/// Integrality of every value, if uniform: integral or half-integral.
fn uniform_lattice(values: &[WeightValue]) -> Option<Integrality> {
    if values.iter().all(WeightValue::is_integral) {
        Some(Integrality::Integral)
    } else if values.iter().all(WeightValue::is_half_integral) {
        Some(Integrality::HalfIntegral)
    } else {
        None
    }
}

/// Dominance of the weight function for the order of the profile.
pub fn is_dominant(p: &BorelProfile) -> bool {
    let Some(runs) = p.runs() else {
        return false;
    };
    let values: Vec<WeightValue> = runs.iter().map(|r| r.0).collect();
    let nonneg = |v: &WeightValue| v.as_rational().is_some_and(|q| !q.is_negative());
    let pairs = || values.windows(2);
    match p.lie_type {
        LieType::A => pairs().all(|w| matches!(w[0].integer_difference(&w[1]), Some(d) if d >= 0)),
        LieType::B => {
            uniform_lattice(&values).is_some() && values.iter().all(nonneg) && pairs().all(|w| ge(&w[0], &w[1]))
        }
        LieType::C => {
            uniform_lattice(&values) == Some(Integrality::Integral)
                && values.iter().all(nonneg)
                && pairs().all(|w| ge(&w[0], &w[1]))
        }
        LieType::D => {
            let exempt = p.has_maximum() && runs.last().is_some_and(|r| r.1 == Count::Finite(1));
            let checked = if exempt { &values[..values.len() - 1] } else { &values[..] };
            uniform_lattice(&values).is_some()
                && checked.iter().all(nonneg)
                && pairs().all(|w| matches!((abs_value(&w[0]), abs_value(&w[1])), (Some(x), Some(y)) if x >= y))
        }
    }
}

/// The two conditions of the nonzero-annihilator criterion, evaluated
/// separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    /// `almost_integral` / `almost_half_integral` when the condition holds.
    pub almost: Option<Integrality>,
    pub locally_constant: bool,
    pub nonzero: bool,
}

pub fn criterion(p: &BorelProfile) -> CriterionReport {
    let mut tail: Vec<WeightValue> = Vec::new();
    let mut generic_tail = false;
    for b in p.blocks.iter().filter(|b| b.order.is_infinite()) {
        match &b.pattern {
            ValuePattern::Constant(v) => tail.push(*v),
            ValuePattern::StrictlyIncreasingIntegers(s) => tail.push(WeightValue::int(*s)),
            _ => generic_tail = true,
        }
    }
    let almost = if generic_tail {
        None
    } else {
        match p.lie_type {
            LieType::A => {
                tail.windows(2).all(|w| w[0].integer_difference(&w[1]).is_some()).then_some(Integrality::AlmostIntegral)
            }
            _ => uniform_lattice(&tail).map(|k| match k {
                Integrality::HalfIntegral => Integrality::AlmostHalfIntegral,
                _ => Integrality::AlmostIntegral,
            }),
        }
    };
    let locally_constant = p.has_finite_image();
    CriterionReport { almost, locally_constant, nonzero: almost.is_some() && locally_constant }
}

pub fn annihilator_nonzero(p: &BorelProfile) -> bool {
    criterion(p).nonzero
}

/// A Young diagram as nonincreasing row lengths.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungDiagram(Vec<usize>);

impl TryFrom<Vec<usize>> for YoungDiagram {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        YoungDiagram::from_rows(rows)
    }
}

impl From<YoungDiagram> for Vec<usize> {
    fn from(y: YoungDiagram) -> Self {
        y.0
    }
}

impl YoungDiagram {
    pub fn from_rows(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Schema(format!("row lengths {rows:?} are not a Young diagram")));
        }
        Ok(YoungDiagram(rows))
    }

    pub fn empty() -> Self {
        YoungDiagram(Vec::new())
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> YoungDiagram {
        YoungDiagram::from(&self.to_partition().conjugate())
    }

    pub fn to_partition(&self) -> Partition {
        Partition::new(self.0.iter().copied())
    }
}

impl From<&Partition> for YoungDiagram {
    fn from(p: &Partition) -> Self {
        YoungDiagram(p.parts().iter().rev().copied().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Special {
    ZeroIdeal,
    /// The annihilator of the trivial module.
    Augmentation,
    Proper,
}

/// Name of a prime integrable ideal, or of a semiintegrable one through the
/// half flag: `V^{Y_l} ⊗ (Λ)^{⊗v} ⊗ (S)^{⊗w} [⊗ V_*^{Y_r}]`, tensored with
/// Spin on the orthogonal side or a Shale–Weil module on the symplectic side
/// when `half_flag` is set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLabel")]
pub struct IdealLabel {
    pub algebra: Algebra,
    pub y_l: YoungDiagram,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y_r: Option<YoungDiagram>,
    pub v: usize,
    pub w: usize,
    pub half_flag: bool,
    pub special: Special,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLabel {
    algebra: Algebra,
    #[serde(default)]
    y_l: YoungDiagram,
    #[serde(default)]
    y_r: Option<YoungDiagram>,
    #[serde(default)]
    v: usize,
    #[serde(default)]
    w: usize,
    #[serde(default)]
    half_flag: bool,
    #[serde(default)]
    special: Option<Special>,
}

impl TryFrom<RawLabel> for IdealLabel {
    type Error = Error;

    fn try_from(raw: RawLabel) -> Result<Self> {
        if raw.special == Some(Special::ZeroIdeal) {
            return Ok(IdealLabel::zero_ideal(raw.algebra));
        }
        let y_r = match (raw.algebra, raw.y_r) {
            (Algebra::Sl, None) => Some(YoungDiagram::empty()),
            (_, y) => y,
        };
        let label = IdealLabel::new(raw.algebra, raw.y_l, y_r, raw.v, raw.w, raw.half_flag)?;
        match raw.special {
            Some(s) if s != label.special => Err(Error::Schema(format!("label is {:?}, not {s:?}", label.special))),
            _ => Ok(label),
        }
    }
}

impl IdealLabel {
    pub fn new(
        algebra: Algebra,
        y_l: YoungDiagram,
        y_r: Option<YoungDiagram>,
        v: usize,
        w: usize,
        half_flag: bool,
    ) -> Result<Self> {
        if (algebra == Algebra::Sl) != y_r.is_some() {
            return Err(Error::Schema("a right diagram is present exactly for sl".into()));
        }
        if algebra == Algebra::Sl && half_flag {
            return Err(Error::Schema("sl labels carry no half factor".into()));
        }
        let trivial =
            y_l.is_empty() && y_r.as_ref().is_none_or(YoungDiagram::is_empty) && v == 0 && w == 0 && !half_flag;
        let special = if trivial { Special::Augmentation } else { Special::Proper };
        Ok(IdealLabel { algebra, y_l, y_r, v, w, half_flag, special })
    }

    pub fn zero_ideal(algebra: Algebra) -> Self {
        IdealLabel {
            algebra,
            y_l: YoungDiagram::empty(),
            y_r: (algebra == Algebra::Sl).then(YoungDiagram::empty),
            v: 0,
            w: 0,
            half_flag: false,
            special: Special::ZeroIdeal,
        }
    }
}

impl fmt::Display for IdealLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.special == Special::ZeroIdeal {
            return write!(f, "{}: zero ideal", self.algebra);
        }
        write!(f, "{}: Y={:?} v={} w={}", self.algebra, self.y_l.rows(), self.v, self.w)?;
        if let Some(y) = &self.y_r {
            write!(f, " Y_r={:?}", y.rows())?;
        }
        if self.half_flag {
            f.write_str(if self.algebra == Algebra::Sp { " +SW" } else { " +Spin" })?;
        }
        Ok(())
    }
}

/// Rank of the ideal: `w` for sl, `2w` otherwise.
pub fn rank(label: &IdealLabel) -> Result<usize> {
    match label.special {
        Special::Proper => Ok(match label.algebra {
            Algebra::Sl => label.w,
            _ => 2 * label.w,
        }),
        Special::ZeroIdeal => Err(Error::NoRank("the zero ideal".into())),
        Special::Augmentation => Err(Error::NoRank("the augmentation ideal".into())),
    }
}

/// The duality between `o(∞)` and `sp(∞)` on labels.
pub fn osp_dual(label: &IdealLabel) -> Result<IdealLabel> {
    let algebra = match label.algebra {
        Algebra::O => Algebra::Sp,
        Algebra::Sp => Algebra::O,
        Algebra::Sl => return Err(Error::Unsupported("sl labels; use the sl involution".into())),
    };
    if label.special == Special::ZeroIdeal {
        return Ok(IdealLabel::zero_ideal(algebra));
    }
    IdealLabel::new(algebra, label.y_l.conjugate(), None, label.w, label.v, label.half_flag)
}

/// The involution of `sl(∞)` exchanging symmetric and exterior powers.
pub fn sl_involution(label: &IdealLabel) -> Result<IdealLabel> {
    if label.algebra != Algebra::Sl {
        return Err(Error::Unsupported(format!("{} labels; use the osp duality", label.algebra)));
    }
    if label.special == Special::ZeroIdeal {
        return Ok(label.clone());
    }
    let y_r = label.y_r.as_ref().map(YoungDiagram::conjugate);
    IdealLabel::new(Algebra::Sl, label.y_l.conjugate(), y_r, label.w, label.v, false)
}

fn to_usize(q: Rational64) -> usize {
    debug_assert!(q.is_integer() && !q.is_negative());
    q.to_integer() as usize
}

/// Label of the annihilator of the simple highest weight module of a
/// dominant profile.
pub fn annihilator_label(p: &BorelProfile) -> Result<IdealLabel> {
    let algebra = p.lie_type.algebra();
    if p.lie_type != LieType::A {
        let seen: Vec<WeightValue> = p
            .blocks
            .iter()
            .flat_map(|b| match &b.pattern {
                ValuePattern::Constant(v) => vec![*v],
                ValuePattern::Explicit(vs) => vs.clone(),
                _ => vec![],
            })
            .collect();
        if seen.iter().any(WeightValue::is_integral) && seen.iter().any(WeightValue::is_half_integral) {
            return Err(Error::MixedIntegrality);
        }
    }
    if !is_dominant(p) {
        return Err(Error::NotDominant);
    }
    let Some(runs) = p.runs() else {
        return Ok(IdealLabel::zero_ideal(algebra));
    };
    // dominance leaves only rational values (A: after shifting by the minimum)
    let base = match p.lie_type {
        LieType::A => runs.iter().map(|r| r.0).min_by(|a, b| a.q.cmp(&b.q)).expect("nonempty"),
        _ => WeightValue::int(0),
    };
    let runs: Vec<(Rational64, Count)> = runs
        .iter()
        .map(|(v, c)| {
            let d = v.offset_by(-base.q);
            let q = if p.lie_type == LieType::A { d.q } else { d.as_rational().expect("dominant values are rational") };
            let q = if p.lie_type == LieType::D { q.abs() } else { q };
            (q, *c)
        })
        .collect();
    let infinite = || runs.iter().filter(|r| r.1 == Count::Infinite).map(|r| r.0);
    let q = infinite().max().expect("a profile has an infinite block");
    let lo = infinite().min().expect("a profile has an infinite block");
    let a = runs.iter().map(|r| r.0).max().expect("nonempty");
    let b = runs.iter().map(|r| r.0).min().expect("nonempty");
    let count = |pred: &dyn Fn(Rational64) -> bool| {
        runs.iter().filter(|r| pred(r.0)).fold(Count::Finite(0), |acc, r| acc.add(r.1))
    };
    let one = Rational64::from_integer(1);
    let mut left = Vec::new();
    let mut c = q + one;
    while c <= a {
        match count(&|x| x >= c) {
            Count::Finite(k) => left.push(k),
            Count::Infinite => unreachable!("values above q have finite fibers"),
        }
        c += one;
    }
    let y_l = YoungDiagram::from_rows(left)?;
    let half = Rational64::new(1, 2);
    match p.lie_type {
        LieType::A => {
            let mut right = Vec::new();
            let mut c = lo - one;
            while c >= b {
                match count(&|x| x <= c) {
                    Count::Finite(k) => right.push(k),
                    Count::Infinite => unreachable!("values below p have finite fibers"),
                }
                c -= one;
            }
            IdealLabel::new(algebra, y_l, Some(YoungDiagram::from_rows(right)?), to_usize(q - lo), 0, false)
        }
        _ if q.is_integer() => IdealLabel::new(algebra, y_l, None, to_usize(q), 0, false),
        LieType::B | LieType::D => IdealLabel::new(algebra, y_l, None, to_usize(q - half), 0, true),
        LieType::C => Err(Error::Invariant {
            what: "half-integral dominant profile in type C".into(),
            state: serde_json::to_value(p).unwrap_or_default(),
        }),
    }
}

/// Values `base + j` with `|≥ base + j| = rows[j − 1]`, largest first.
fn values_above(base: Rational64, rows: &[usize]) -> Vec<WeightValue> {
    let mut out = Vec::new();
    for j in (1..=rows.len()).rev() {
        let next = rows.get(j).copied().unwrap_or(0);
        let v = WeightValue::rational(base + Rational64::from_integer(j as i64));
        out.extend(std::iter::repeat_n(v, rows[j - 1] - next));
    }
    out
}

/// Values `base − j` with `|≤ base − j| = rows[j − 1]`, largest first.
fn values_below(base: Rational64, rows: &[usize]) -> Vec<WeightValue> {
    let mut out = Vec::new();
    for j in 1..=rows.len() {
        let next = rows.get(j).copied().unwrap_or(0);
        let v = WeightValue::rational(base - Rational64::from_integer(j as i64));
        out.extend(std::iter::repeat_n(v, rows[j - 1] - next));
    }
    out
}

/// A dominant profile on an order isomorphic to `order` whose annihilator
/// has the given label. The order must be ideal for `lie_type`.
pub fn synthesize_profile(label: &IdealLabel, lie_type: LieType, order: &[OrderType]) -> Result<BorelProfile> {
    if label.algebra != lie_type.algebra() {
        return Err(Error::Schema(format!("{} label for type {lie_type:?}", label.algebra)));
    }
    if !is_ideal_order(lie_type, order) {
        return Err(Error::Unsupported("orders that are not ideal".into()));
    }
    if label.special == Special::ZeroIdeal || (lie_type == LieType::C && label.half_flag) {
        return Err(Error::Unsupported("labels of non-integrable ideals".into()));
    }
    let order = normalize_order(order);
    let first = order.iter().position(|o| *o == OrderType::Omega).expect("ideal order");
    let last = order.iter().rposition(|o| *o == OrderType::OmegaStar);
    let half = if label.half_flag { Rational64::new(1, 2) } else { Rational64::zero() };
    let q = Rational64::from_integer(label.v as i64) + half;
    let p = Rational64::zero();
    let mut blocks = Vec::new();
    let top = values_above(q, label.y_l.rows());
    if !top.is_empty() {
        blocks.push(Block::explicit(top)?);
    }
    for (k, &o) in order.iter().enumerate() {
        if k < first {
            continue;
        }
        let is_last_star = lie_type == LieType::A && Some(k) == last;
        let v = if is_last_star { p } else { q };
        blocks.push(Block::constant(o, WeightValue::rational(v)));
        if is_last_star {
            let bottom = values_below(p, label.y_r.as_ref().map_or(&[][..], |y| y.rows()));
            if !bottom.is_empty() {
                blocks.push(Block::explicit(bottom)?);
            }
        }
    }
    BorelProfile::new(lie_type, blocks)
}
