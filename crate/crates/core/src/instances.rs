//! Named fixtures and seeded generators.
//!
//! Fixtures are transcribed from Hasse diagrams: an edge joins
//! two elements and the lower one on the page is the smaller one. Random
//! generators are driven by an explicit seed and stream index (ChaCha8), so
//! parallel test shards reproduce the same instances.

use std::fmt;
use std::str::FromStr;

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::interval::{poset_from_representation, MixedInterval, Representation};
use crate::poset::Poset;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceName {
    TwoPlusTwo,
    OnePlusThree,
    Fx2,
    H0,
    G0,
    Figure2,
}

impl InstanceName {
    pub const ALL: [InstanceName; 6] = [
        InstanceName::TwoPlusTwo,
        InstanceName::OnePlusThree,
        InstanceName::Fx2,
        InstanceName::H0,
        InstanceName::G0,
        InstanceName::Figure2,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            InstanceName::TwoPlusTwo => "two_plus_two",
            InstanceName::OnePlusThree => "one_plus_three",
            InstanceName::Fx2 => "FX2",
            InstanceName::H0 => "H0",
            InstanceName::G0 => "G0",
            InstanceName::Figure2 => "figure2",
        }
    }
}

impl fmt::Display for InstanceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InstanceName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InstanceName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_owned()))
    }
}

#[derive(Clone, Debug)]
pub struct NamedInstance {
    pub name: InstanceName,
    pub poset: Poset,
    pub representation: Option<Representation>,
}

pub fn named(name: &str) -> Result<NamedInstance> {
    Ok(instance(name.parse()?))
}

pub fn instance(name: InstanceName) -> NamedInstance {
    let (poset, representation) = match name {
        InstanceName::TwoPlusTwo => (two_plus_two(), None),
        InstanceName::OnePlusThree => {
            let rep = one_plus_three_representation();
            (poset_from_representation(&rep), Some(rep))
        }
        InstanceName::Fx2 => (fx2(), None),
        InstanceName::H0 => (h0(), None),
        InstanceName::G0 => (g0(), None),
        InstanceName::Figure2 => (figure2(), Some(figure2_representation())),
    };
    NamedInstance { name, poset, representation }
}

fn from_covers(elements: &[&str], covers: &[(&str, &str)]) -> Poset {
    Poset::new(elements, covers).expect("fixture covers are acyclic")
}

/// Two disjoint two-element chains `a < b`, `c < d`.
pub fn two_plus_two() -> Poset {
    from_covers(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")])
}

/// A three-element chain `x1 < x2 < x3` and an isolated `y`.
pub fn one_plus_three() -> Poset {
    from_covers(&["x1", "x2", "x3", "y"], &[("x1", "x2"), ("x2", "x3")])
}

/// Unit representation of 1+3 using one open interval.
pub fn one_plus_three_representation() -> Representation {
    Representation::parse(&[("x1", "[0,1]"), ("x2", "(1,2)"), ("x3", "[2,3]"), ("y", "[1,2]")])
        .expect("valid intervals")
}

pub fn fx2() -> Poset {
    from_covers(
        &["a1", "b1", "a2", "b2", "c", "a3", "b3"],
        &[
            ("a1", "b1"),
            ("a2", "b1"),
            ("a2", "b2"),
            ("a2", "b3"),
            ("a1", "b3"),
            ("a3", "b3"),
            ("a1", "c"),
            ("a3", "c"),
            ("b2", "c"),
        ],
    )
}

pub fn h0() -> Poset {
    from_covers(
        &["a1", "a2", "b1", "b2", "b3", "c", "d"],
        &[
            ("b1", "c"),
            ("b1", "b2"),
            ("b2", "b3"),
            ("d", "b3"),
            ("b1", "a2"),
            ("a1", "a2"),
            ("a1", "b3"),
        ],
    )
}

pub fn g0() -> Poset {
    from_covers(
        &["a1", "a2", "a3", "b1", "b2", "b3", "c"],
        &[
            ("a1", "a2"),
            ("a2", "a3"),
            ("b1", "a3"),
            ("b1", "b2"),
            ("b2", "b3"),
            ("c", "b3"),
            ("a1", "c"),
            ("a1", "b2"),
            ("a2", "b3"),
        ],
    )
}

/// Six-element poset with a unit representation that needs a half-open
/// interval.
pub fn figure2() -> Poset {
    from_covers(
        &["x1", "x2", "x3", "x4", "y", "z"],
        &[("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x2", "z"), ("y", "x4")],
    )
}

pub fn figure2_representation() -> Representation {
    Representation::parse(&[
        ("x1", "[0,1]"),
        ("x2", "(1,2)"),
        ("x3", "[2,3)"),
        ("x4", "[3,4]"),
        ("y", "[1,2]"),
        ("z", "[2,3]"),
    ])
    .expect("valid intervals")
}

/// All closed intervals `[i, j]` with `1 <= i <= j <= n`, named `"[i,j]"`.
pub fn canonical_interval_order(n: usize) -> (Poset, Representation) {
    let mut rep = Representation::new();
    for i in 1..=n as i64 {
        for j in i..=n as i64 {
            let interval = MixedInterval::closed(i, j).expect("i <= j");
            rep.insert(interval.to_string(), interval);
        }
    }
    (poset_from_representation(&rep), rep)
}

/// How closure flags are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagPolicy {
    AllClosed,
    /// Each interval entirely open or entirely closed.
    OpenOrClosed,
    /// Each end independently open or closed.
    Mixed,
}

impl FromStr for FlagPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all_closed" | "closed" => Ok(FlagPolicy::AllClosed),
            "oc" => Ok(FlagPolicy::OpenOrClosed),
            "mixed" => Ok(FlagPolicy::Mixed),
            other => Err(Error::InvalidPolicy(format!("unknown flag policy `{other}`"))),
        }
    }
}

/// Parameters of [`random_representation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub n: usize,
    /// Candidate lengths, drawn uniformly unless `weights` is set.
    pub lengths: Vec<Rational>,
    pub weights: Option<Vec<u32>>,
    pub policy: FlagPolicy,
    /// Left endpoints are multiples of `1 / grid`.
    pub grid: u32,
    /// Left endpoints range over `[0, span]`; defaults to `max(2, n / 3)`.
    pub span: Option<u32>,
}

impl RandomSpec {
    pub fn new(n: usize, lengths: Vec<Rational>, policy: FlagPolicy) -> Self {
        RandomSpec { n, lengths, weights: None, policy, grid: 4, span: None }
    }

    pub fn with_grid(mut self, grid: u32) -> Self {
        self.grid = grid;
        self
    }

    pub fn with_weights(mut self, weights: Vec<u32>) -> Self {
        self.weights = Some(weights);
        self
    }

    pub fn with_span(mut self, span: u32) -> Self {
        self.span = Some(span);
        self
    }
}

/// The generator for draw `stream` under `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `random_representation_stream(spec, seed, 0)`.
pub fn random_representation(spec: &RandomSpec, seed: u64) -> Result<Representation> {
    random_representation_stream(spec, seed, 0)
}

/// Random representation with elements `e0, e1, ...`; identical arguments
/// give identical output.
pub fn random_representation_stream(spec: &RandomSpec, seed: u64, stream: u64) -> Result<Representation> {
    if spec.lengths.is_empty() {
        return Err(Error::InvalidPolicy("no lengths given".into()));
    }
    if spec.grid == 0 {
        return Err(Error::InvalidPolicy("grid must be at least 1".into()));
    }
    if spec.lengths.iter().any(|l| *l < Rational::ZERO) {
        return Err(Error::InvalidPolicy("negative length".into()));
    }
    if spec.policy != FlagPolicy::AllClosed && spec.lengths.iter().any(Rational::is_zero) {
        return Err(Error::InvalidPolicy("zero-length intervals must be closed".into()));
    }
    let weights = spec.weights.clone().unwrap_or_else(|| vec![1; spec.lengths.len()]);
    let pick = WeightedIndex::new(&weights)
        .ok()
        .filter(|_| weights.len() == spec.lengths.len())
        .ok_or_else(|| Error::InvalidPolicy("weights must match lengths and not all be zero".into()))?;

    let span = spec.span.unwrap_or_else(|| (spec.n as u32 / 3).max(2));
    let steps = span as i64 * spec.grid as i64;
    let mut rng = stream_rng(seed, stream);
    let mut rep = Representation::new();
    for i in 0..spec.n {
        let left = Rational::new(rng.gen_range(0..=steps), spec.grid as i64).expect("grid >= 1");
        let length = spec.lengths[pick.sample(&mut rng)];
        let (left_closed, right_closed) = match spec.policy {
            _ if length.is_zero() => (true, true),
            FlagPolicy::AllClosed => (true, true),
            FlagPolicy::OpenOrClosed => {
                let closed = rng.gen_bool(0.5);
                (closed, closed)
            }
            FlagPolicy::Mixed => (rng.gen_bool(0.5), rng.gen_bool(0.5)),
        };
        let interval = MixedInterval::new(left, left + length, left_closed, right_closed)?;
        rep.insert(format!("e{i}"), interval);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::{classify, is_consistent};

    #[test]
    fn name_lookup() {
        assert_eq!("fx2".parse::<InstanceName>().unwrap(), InstanceName::Fx2);
        assert!(matches!(named("K4"), Err(Error::UnknownName(_))));
        let inst = named("two_plus_two").unwrap();
        assert_eq!(inst.poset.len(), 4);
        assert_eq!(inst.poset.relations().count(), 2);
    }

    #[test]
    fn stored_representations_are_consistent() {
        for name in InstanceName::ALL {
            let inst = instance(name);
            if let Some(rep) = &inst.representation {
                assert!(is_consistent(rep, &inst.poset).unwrap(), "{name}");
            }
        }
        assert_eq!(instance(InstanceName::Figure2).representation.unwrap().len(), 6);
    }

    #[test]
    fn canonical_orders() {
        let (p, _) = canonical_interval_order(1);
        assert_eq!(p.len(), 1);
        let (p, _) = canonical_interval_order(2);
        assert_eq!(p.len(), 3);
        assert_eq!(p.relations().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(p.name(0), "[1,1]");
        assert_eq!(canonical_interval_order(5).0.len(), 15);
    }

    #[test]
    fn generator_policies() {
        let empty = RandomSpec::new(0, vec![Rational::ONE], FlagPolicy::AllClosed);
        assert!(random_representation(&empty, 1).unwrap().is_empty());

        let oc = RandomSpec::new(20, vec![Rational::ONE], FlagPolicy::OpenOrClosed);
        assert!(classify(&random_representation(&oc, 7).unwrap()).unit_oc);

        let zero_one = RandomSpec::new(20, vec![Rational::ZERO, Rational::ONE], FlagPolicy::AllClosed);
        assert!(classify(&random_representation(&zero_one, 7).unwrap()).lengths_01);

        let bad = RandomSpec::new(5, vec![Rational::ZERO], FlagPolicy::Mixed);
        assert!(matches!(random_representation(&bad, 1), Err(Error::InvalidPolicy(_))));
        let bad = RandomSpec::new(5, vec![Rational::ONE], FlagPolicy::Mixed).with_weights(vec![1, 2]);
        assert!(matches!(random_representation(&bad, 1), Err(Error::InvalidPolicy(_))));
    }

    #[test]
    fn generator_is_reproducible() {
        let spec = RandomSpec::new(15, vec![Rational::ONE], FlagPolicy::Mixed);
        let a = serde_json::to_string(&random_representation_stream(&spec, 42, 3).unwrap()).unwrap();
        let b = serde_json::to_string(&random_representation_stream(&spec, 42, 3).unwrap()).unwrap();
        let c = serde_json::to_string(&random_representation_stream(&spec, 42, 4).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
