//! Mixed open/closed intervals and the interval orders they induce.
//!
//! Endpoints are exact [`Rational`]s. Two intervals that share an endpoint
//! intersect exactly when both of them contain it, so `[0,1]` and `[1,2]`
//! are incomparable while `(0,1)` lies to the left of `[1,2]`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances;
use crate::poset::Poset;
use crate::rational::Rational;

/// A bounded, nonempty interval with independent closure flags.
///
/// Written `[a,b]`, `(a,b)`, `[a,b)` or `(a,b]`; a point is `[c,c]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawInterval")]
pub struct MixedInterval {
    left: Rational,
    right: Rational,
    left_closed: bool,
    right_closed: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInterval {
    left: Rational,
    right: Rational,
    left_closed: bool,
    right_closed: bool,
}

impl TryFrom<RawInterval> for MixedInterval {
    type Error = Error;

    fn try_from(raw: RawInterval) -> Result<Self> {
        MixedInterval::new(raw.left, raw.right, raw.left_closed, raw.right_closed)
    }
}

impl MixedInterval {
    /// Fails with [`Error::EmptyInterval`] when `left > right`, or when
    /// `left == right` and either end is open.
    pub fn new(left: Rational, right: Rational, left_closed: bool, right_closed: bool) -> Result<Self> {
        let interval = MixedInterval { left, right, left_closed, right_closed };
        if left > right || (left == right && !(left_closed && right_closed)) {
            return Err(Error::EmptyInterval(interval.to_string()));
        }
        Ok(interval)
    }

    pub fn closed(left: impl Into<Rational>, right: impl Into<Rational>) -> Result<Self> {
        Self::new(left.into(), right.into(), true, true)
    }

    pub fn open(left: impl Into<Rational>, right: impl Into<Rational>) -> Result<Self> {
        Self::new(left.into(), right.into(), false, false)
    }

    pub fn point(at: impl Into<Rational>) -> Self {
        let at = at.into();
        MixedInterval { left: at, right: at, left_closed: true, right_closed: true }
    }

    pub fn left(&self) -> Rational {
        self.left
    }

    pub fn right(&self) -> Rational {
        self.right
    }

    pub fn left_closed(&self) -> bool {
        self.left_closed
    }

    pub fn right_closed(&self) -> bool {
        self.right_closed
    }

    pub fn length(&self) -> Rational {
        self.right - self.left
    }

    pub fn is_closed(&self) -> bool {
        self.left_closed && self.right_closed
    }

    pub fn is_open(&self) -> bool {
        !self.left_closed && !self.right_closed
    }

    pub fn is_point(&self) -> bool {
        self.left == self.right
    }

    /// Entirely to the left of `other`.
    pub fn precedes(&self, other: &MixedInterval) -> bool {
        self.right < other.left || (self.right == other.left && !(self.right_closed && other.left_closed))
    }

    pub fn intersects(&self, other: &MixedInterval) -> bool {
        !self.precedes(other) && !other.precedes(self)
    }

    /// Same endpoints, both ends open.
    pub fn opened(&self) -> Result<Self> {
        if self.is_point() {
            return Err(Error::DegenerateInterval(self.to_string()));
        }
        Ok(MixedInterval { left_closed: false, right_closed: false, ..*self })
    }

    /// Endpoints multiplied by a positive factor.
    pub fn scaled(&self, factor: Rational) -> Self {
        MixedInterval { left: self.left * factor, right: self.right * factor, ..*self }
    }
}

impl fmt::Display for MixedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.left_closed { '[' } else { '(' };
        let close = if self.right_closed { ']' } else { ')' };
        write!(f, "{open}{},{}{close}", self.left, self.right)
    }
}

impl fmt::Debug for MixedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MixedInterval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("`{s}` is not an interval like [0,1) or (1/2,3/2]"));
        let s = s.trim();
        let left_closed = match s.chars().next() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(bad()),
        };
        let right_closed = match s.chars().last() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(bad()),
        };
        let inner = s.get(1..s.len() - 1).ok_or_else(bad)?;
        let (left, right) = inner.split_once(',').ok_or_else(bad)?;
        MixedInterval::new(left.parse()?, right.parse()?, left_closed, right_closed)
    }
}

/// Assignment of an interval to every element, in a fixed element order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Representation {
    pub intervals: IndexMap<String, MixedInterval>,
}

impl Representation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a representation from `(name, "[a,b)")` notation.
    pub fn parse<N: AsRef<str>, I: AsRef<str>>(entries: &[(N, I)]) -> Result<Self> {
        let mut rep = Representation::new();
        for (name, interval) in entries {
            let name = name.as_ref();
            if rep.intervals.insert(name.to_owned(), interval.as_ref().parse()?).is_some() {
                return Err(Error::DuplicateElement(name.to_owned()));
            }
        }
        Ok(rep)
    }

    pub fn insert(&mut self, name: impl Into<String>, interval: MixedInterval) -> Option<MixedInterval> {
        self.intervals.insert(name.into(), interval)
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&MixedInterval> {
        self.intervals.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &MixedInterval)> {
        self.intervals.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Intervals listed in the element order of `poset`.
    pub fn aligned_to(&self, poset: &Poset) -> Result<Vec<MixedInterval>> {
        if self.len() != poset.len() {
            return Err(Error::GroundSetMismatch);
        }
        poset
            .names()
            .iter()
            .map(|n| self.intervals.get(n).copied().ok_or(Error::GroundSetMismatch))
            .collect()
    }

    /// Keeps only `names`, in the order given.
    pub fn restrict<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        let mut out = Representation::new();
        for name in names {
            let name = name.as_ref();
            let interval = self.get(name).ok_or_else(|| Error::UnknownElement(name.to_owned()))?;
            out.insert(name, *interval);
        }
        Ok(out)
    }

    fn map(&self, f: impl Fn(&MixedInterval) -> Result<MixedInterval>) -> Result<Self> {
        let intervals = self
            .intervals
            .iter()
            .map(|(k, v)| Ok((k.clone(), f(v)?)))
            .collect::<Result<_>>()?;
        Ok(Representation { intervals })
    }
}

/// Flags describing a representation, computed from its endpoints alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReprClass {
    pub all_closed: bool,
    pub all_unit: bool,
    /// Unit length, each interval entirely open or entirely closed.
    pub unit_oc: bool,
    /// Unit length, half-open intervals allowed.
    pub unit_mixed: bool,
    /// Closed intervals of lengths 0 and 1 only.
    pub lengths_01: bool,
    pub length_set: BTreeSet<Rational>,
}

/// See [`MixedInterval::precedes`].
pub fn precedes(first: &MixedInterval, second: &MixedInterval) -> bool {
    first.precedes(second)
}

/// The interval order induced by `rep`, over its element order.
pub fn poset_from_representation(rep: &Representation) -> Poset {
    let names: Vec<&str> = rep.intervals.keys().map(String::as_str).collect();
    let intervals: Vec<&MixedInterval> = rep.intervals.values().collect();
    Poset::from_fn(&names, |x, y| intervals[x].precedes(intervals[y]))
        .expect("precedence of nonempty intervals is a strict partial order")
}

/// True iff `rep` induces exactly `poset`.
pub fn is_consistent(rep: &Representation, poset: &Poset) -> Result<bool> {
    poset_from_representation(rep).same_order_as(poset)
}

pub fn classify(rep: &Representation) -> ReprClass {
    let intervals: Vec<&MixedInterval> = rep.intervals.values().collect();
    let length_set: BTreeSet<Rational> = intervals.iter().map(|i| i.length()).collect();
    let all_closed = intervals.iter().all(|i| i.is_closed());
    let all_unit = length_set.iter().all(|&l| l == Rational::ONE);
    let unit_oc = all_unit && intervals.iter().all(|i| i.is_closed() || i.is_open());
    let lengths_01 = all_closed && length_set.iter().all(|&l| l == Rational::ZERO || l == Rational::ONE);
    ReprClass { all_closed, all_unit, unit_oc, unit_mixed: all_unit, lengths_01, length_set }
}

/// Every interval opened. Fails on points, which would become empty.
pub fn open_all(rep: &Representation) -> Result<Representation> {
    rep.map(MixedInterval::opened)
}

/// Every endpoint multiplied by `factor > 0`; the induced poset is unchanged.
pub fn scale(rep: &Representation, factor: Rational) -> Result<Representation> {
    if !factor.is_positive() {
        return Err(Error::InvalidScale(factor.to_string()));
    }
    rep.map(|i| Ok(i.scaled(factor)))
}

/// Distinct down sets totally ordered by inclusion.
pub fn is_interval_order(poset: &Poset) -> bool {
    let n = poset.len();
    let down: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|z| poset.lt(z, x)).collect()).collect();
    let subset = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(&p, &q)| !p || q);
    (0..n).all(|x| (x + 1..n).all(|y| subset(&down[x], &down[y]) || subset(&down[y], &down[x])))
}

/// Interval order test by searching for an induced 2+2.
pub fn is_interval_order_by_pattern(poset: &Poset) -> bool {
    poset.find_embedding(&instances::two_plus_two()).is_none()
}

/// Interval order with no induced 1+3.
pub fn is_unit_interval_order(poset: &Poset) -> bool {
    is_interval_order(poset) && poset.find_embedding(&instances::one_plus_three()).is_none()
}

/// Integer closed representation indexed by down sets and up sets.
///
/// Element `x` gets `[i, j]` where `i` is the rank of `D(x)` among the
/// distinct down sets ordered by inclusion and `j` is the rank of `U(x)`
/// among the distinct up sets ordered by reverse inclusion, both from 1.
pub fn canonical_closed_representation(poset: &Poset) -> Result<Representation> {
    if !is_interval_order(poset) {
        let witness = poset
            .find_embedding(&instances::two_plus_two())
            .expect("a poset whose down sets are not a chain contains 2+2");
        return Err(Error::NotIntervalOrder(witness.iter().map(|&x| poset.name(x).to_owned()).collect()));
    }
    let n = poset.len();
    let down: Vec<Vec<usize>> = (0..n).map(|x| poset.down_set(x)).collect();
    let up: Vec<Vec<usize>> = (0..n).map(|x| poset.up_set(x)).collect();
    // down sets form a chain, so size order is inclusion order; up sets likewise
    let mut down_sizes: Vec<usize> = down.iter().map(Vec::len).collect();
    down_sizes.sort_unstable();
    down_sizes.dedup();
    let mut up_sizes: Vec<usize> = up.iter().map(Vec::len).collect();
    up_sizes.sort_unstable_by(|a, b| b.cmp(a));
    up_sizes.dedup();

    let mut rep = Representation::new();
    for x in 0..n {
        let left = down_sizes.iter().position(|&s| s == down[x].len()).unwrap() + 1;
        let right = up_sizes.iter().position(|&s| s == up[x].len()).unwrap() + 1;
        let interval = MixedInterval::closed(left as i64, right as i64)
            .map_err(|e| Error::SelfCheckFailed(format!("canonical interval for `{}`: {e}", poset.name(x))))?;
        rep.insert(poset.name(x), interval);
    }
    if !is_consistent(&rep, poset)? {
        return Err(Error::SelfCheckFailed("canonical representation does not induce the poset".into()));
    }
    Ok(rep)
}
