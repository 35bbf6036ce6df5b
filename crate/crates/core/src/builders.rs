//! Explicit realizers for interval orders with restricted representations.
//!
//! * [`realizer_unit_oc`]: three extensions for any unit-length
//!   representation, open, closed or half-open intervals alike.
//! * [`realizer_zero_one`]: three extensions for closed representations
//!   whose lengths are `0` and one positive value `r`.
//! * [`realizer_multi_length`]: at most `3r + r(r-1)` extensions for closed
//!   representations using `r` distinct lengths.
//!
//! Every builder checks its own output with [`verify_realizer`] and reports
//! [`Error::SelfCheckFailed`] instead of returning a bad realizer.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::interval::{classify, poset_from_representation, MixedInterval, Representation};
use crate::poset::{quotient_duplicates, verify_realizer, IncPair, LinearExtension, Poset, Quotient, Realizer, RealizerCheck};
use crate::rational::Rational;
use crate::reversal::{extension_separating, linear_extension_reversing, Reversal};

/// Antichains obtained by repeatedly removing the minimal elements.
///
/// `blocks[0]` holds the minimal elements; every element of `blocks[i + 1]`
/// lies above some element of `blocks[i]`. Each block is sorted by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntichainPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl AntichainPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `block_of()[x]` is the block index of `x`.
    pub fn block_of(&self, size: usize) -> Vec<usize> {
        let mut of = vec![usize::MAX; size];
        for (i, block) in self.blocks.iter().enumerate() {
            for &x in block {
                of[x] = i;
            }
        }
        of
    }
}

pub fn antichain_partition_minima(poset: &Poset) -> AntichainPartition {
    let n = poset.len();
    let mut level = vec![0usize; n];
    // a linear extension visits every element after all of its predecessors
    for &y in &poset.default_extension().order {
        level[y] = (0..n).filter(|&x| poset.lt(x, y)).map(|x| level[x] + 1).max().unwrap_or(0);
    }
    let height = level.iter().map(|&l| l + 1).max().unwrap_or(0);
    let mut blocks = vec![Vec::new(); height];
    for x in 0..n {
        blocks[level[x]].push(x);
    }
    AntichainPartition { blocks }
}

/// Intermediate data of the unit-length construction, on the twin-free
/// quotient of the input.
#[derive(Clone, Debug)]
pub struct UnitOcConstruction {
    pub quotient: Quotient,
    /// Blocks of the all-open version of the representation.
    pub blocks: AntichainPartition,
    /// Realizer `[L1, L2, L3]` of `quotient.poset`.
    pub realizer: Realizer,
}

/// Builds `L1`, `L2`, `L3` for a unit-length representation.
///
/// The partition comes from the poset `Q` of the all-open intervals, which
/// keeps every comparability of `P`. `L1` puts the even blocks (counting
/// from one) above the odd blocks wherever `P` allows, `L2` does the
/// opposite, and `L3` stacks the blocks bottom to top, each in the reverse
/// of its `L1` order.
pub fn unit_oc_construction(poset: &Poset, rep: &Representation) -> Result<UnitOcConstruction> {
    let intervals = consistent_intervals(poset, rep)?;
    let class = classify(rep);
    let intervals = if class.unit_mixed {
        intervals
    } else {
        match single_length(&intervals) {
            Some(r) if r.is_positive() => rescale(&intervals, r),
            _ => return Err(Error::NotUnitMixed),
        }
    };

    let quotient = quotient_duplicates(poset);
    let qp = &quotient.poset;
    let opened = quotient
        .representatives()
        .into_iter()
        .map(|x| intervals[x].opened())
        .collect::<Result<Vec<_>>>()?;
    let open_order = Poset::from_fn(qp.names(), |x, y| opened[x].precedes(&opened[y]))?;
    let blocks = antichain_partition_minima(&open_order);

    let (even, odd) = split_by_parity(&blocks.blocks);
    let l1 = extension_separating(qp, &even, &odd)?;
    let l2 = extension_separating(qp, &odd, &even)?;
    let l3 = stack_reversed(&blocks.blocks, &l1, |_| Vec::new());
    let realizer = Realizer::new(vec![l1, l2, l3]);
    self_check(qp, &realizer)?;
    Ok(UnitOcConstruction { quotient, blocks, realizer })
}

/// Three-extension realizer for a poset with a unit-length representation.
///
/// Closed, open and half-open unit intervals may be mixed freely. A
/// representation whose intervals all share one positive length `r` is
/// accepted as well and treated as scaled by `1/r`.
pub fn realizer_unit_oc(poset: &Poset, rep: &Representation) -> Result<Realizer> {
    let construction = unit_oc_construction(poset, rep)?;
    let realizer = construction.quotient.reinflate(&construction.realizer)?;
    self_check(poset, &realizer)?;
    Ok(realizer)
}

/// Blocks, thresholds, point buckets and the two pair sets used for
/// representations with lengths `0` and `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroOneDecomposition {
    /// Antichain partition `A_1..A_t` of the unit-length elements.
    pub unit_blocks: AntichainPartition,
    /// `thresholds[i]` is the smallest right endpoint in `A_{i+1}`.
    pub thresholds: Vec<Rational>,
    /// `D_0..D_t`, each ascending by point value.
    pub zero_buckets: Vec<Vec<usize>>,
    /// Pairs reversed by `L1`: pairs of `A_k x A_{k+1}`, `D_k x A_{k+1}`
    /// and `A_k x D_k` for odd `k`.
    pub first_pairs: Vec<IncPair>,
    /// The same for even `k`, starting at `k = 0`.
    pub second_pairs: Vec<IncPair>,
}

/// Decomposes `poset` according to closed `intervals` (in poset order) of
/// lengths `0` and `1`.
///
/// Point `c` goes to `D_i` where `i` counts the thresholds strictly below
/// `c`; so `D_0` holds `c <= p_1`, `D_i` holds `p_i < c <= p_{i+1}` and
/// `D_t` holds `c > p_t`.
pub fn zero_one_decomposition(poset: &Poset, intervals: &[MixedInterval]) -> Result<ZeroOneDecomposition> {
    if intervals.len() != poset.len() {
        return Err(Error::GroundSetMismatch);
    }
    if !intervals.iter().all(|i| i.is_closed() && (i.is_point() || i.length() == Rational::ONE)) {
        return Err(Error::NotZeroOne);
    }
    let n = poset.len();
    let unit: Vec<usize> = (0..n).filter(|&x| !intervals[x].is_point()).collect();
    let local = antichain_partition_minima(&poset.subposet(&unit));
    let blocks: Vec<Vec<usize>> =
        local.blocks.iter().map(|b| b.iter().map(|&i| unit[i]).collect()).collect();
    let thresholds: Vec<Rational> = blocks
        .iter()
        .map(|b| b.iter().map(|&x| intervals[x].right()).min().expect("blocks are nonempty"))
        .collect();
    let t = blocks.len();

    let mut points: Vec<usize> = (0..n).filter(|&x| intervals[x].is_point()).collect();
    points.sort_by_key(|&x| (intervals[x].left(), x));
    let mut zero_buckets = vec![Vec::new(); t + 1];
    for x in points {
        let c = intervals[x].left();
        let bucket = thresholds.iter().filter(|&&p| p < c).count();
        zero_buckets[bucket].push(x);
    }

    let empty = Vec::new();
    // 1-based block access with A_0 = A_{t+1} = {}
    let block = |k: usize| if k >= 1 && k <= t { &blocks[k - 1] } else { &empty };
    let mut first_pairs = Vec::new();
    let mut second_pairs = Vec::new();
    for k in 0..=t {
        let target = if k % 2 == 1 { &mut first_pairs } else { &mut second_pairs };
        let groups = [(block(k), block(k + 1)), (&zero_buckets[k], block(k + 1)), (block(k), &zero_buckets[k])];
        for (uppers, lowers) in groups {
            for &u in uppers {
                for &v in lowers {
                    if poset.incomparable(u, v) {
                        target.push(IncPair::new(u, v));
                    }
                }
            }
        }
    }

    Ok(ZeroOneDecomposition {
        unit_blocks: AntichainPartition { blocks },
        thresholds,
        zero_buckets,
        first_pairs,
        second_pairs,
    })
}

/// Intermediate data of the lengths-`{0,1}` construction, on the twin-free
/// quotient of the input.
#[derive(Clone, Debug)]
pub struct ZeroOneConstruction {
    pub quotient: Quotient,
    pub decomposition: ZeroOneDecomposition,
    /// Realizer `[L1, L2, L3]` of `quotient.poset`.
    pub realizer: Realizer,
}

pub fn zero_one_construction(poset: &Poset, rep: &Representation) -> Result<ZeroOneConstruction> {
    let intervals = consistent_intervals(poset, rep)?;
    if !intervals.iter().all(MixedInterval::is_closed) {
        return Err(Error::NotZeroOne);
    }
    let positive: Vec<Rational> = {
        let mut lengths: Vec<Rational> =
            intervals.iter().map(MixedInterval::length).filter(Rational::is_positive).collect();
        lengths.sort();
        lengths.dedup();
        lengths
    };
    let intervals = match positive.as_slice() {
        [] => intervals,
        [r] if *r == Rational::ONE => intervals,
        [r] => rescale(&intervals, *r),
        _ => return Err(Error::NotZeroOne),
    };

    let quotient = quotient_duplicates(poset);
    let qp = &quotient.poset;
    let q_intervals: Vec<MixedInterval> = quotient.representatives().into_iter().map(|x| intervals[x]).collect();
    let decomposition = zero_one_decomposition(qp, &q_intervals)?;

    let reverse = |pairs: &[IncPair], which: &str| -> Result<LinearExtension> {
        match linear_extension_reversing(qp, pairs)? {
            Reversal::Extension(ext) => Ok(ext),
            Reversal::Cycle(_) => Err(Error::SelfCheckFailed(format!("{which} pair set is not reversible"))),
        }
    };
    let l1 = reverse(&decomposition.first_pairs, "first")?;
    let l2 = reverse(&decomposition.second_pairs, "second")?;
    let buckets = &decomposition.zero_buckets;
    let mut l3 = stack_reversed(&decomposition.unit_blocks.blocks, &l1, |i| buckets[i + 1].clone());
    l3.order.splice(0..0, buckets[0].iter().copied());
    let realizer = Realizer::new(vec![l1, l2, l3]);
    self_check(qp, &realizer)?;
    Ok(ZeroOneConstruction { quotient, decomposition, realizer })
}

/// Three-extension realizer for a closed representation with lengths in
/// `{0, r}` for a single `r > 0`.
pub fn realizer_zero_one(poset: &Poset, rep: &Representation) -> Result<Realizer> {
    let construction = zero_one_construction(poset, rep)?;
    let realizer = construction.quotient.reinflate(&construction.realizer)?;
    self_check(poset, &realizer)?;
    Ok(realizer)
}

/// Realizer for a closed representation with `r` distinct lengths.
///
/// Each length class gets a realizer of its own (three extensions for a
/// positive length, at most two for points), lifted to extensions of the
/// whole poset; each ordered pair of classes `(i, j)` adds one extension
/// putting class `i` above class `j` wherever possible. At most
/// `3r + r(r-1)` extensions in total.
pub fn realizer_multi_length(poset: &Poset, rep: &Representation) -> Result<Realizer> {
    let intervals = consistent_intervals(poset, rep)?;
    if !intervals.iter().all(MixedInterval::is_closed) {
        return Err(Error::NotClosed);
    }
    let mut classes: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
    for (x, interval) in intervals.iter().enumerate() {
        classes.entry(interval.length()).or_default().push(x);
    }
    if classes.len() == 1 && classes.keys().all(Rational::is_positive) {
        return realizer_unit_oc(poset, rep);
    }

    let mut extensions = Vec::new();
    for (length, members) in &classes {
        let sub = poset.subposet(members);
        let sub_realizer = if length.is_positive() {
            realizer_unit_oc(&sub, &rep.restrict(sub.names())?)?
        } else {
            points_realizer(&sub, members.iter().map(|&x| intervals[x].left()).collect())
        };
        for ext in &sub_realizer.extensions {
            let pos = ext.positions();
            let pairs: Vec<IncPair> = sub
                .incomparable_pairs()
                .into_iter()
                .filter(|p| pos[p.above] > pos[p.below])
                .map(|p| IncPair::new(members[p.above], members[p.below]))
                .collect();
            match linear_extension_reversing(poset, &pairs)? {
                Reversal::Extension(lifted) => extensions.push(lifted),
                Reversal::Cycle(_) => {
                    return Err(Error::SelfCheckFailed("class extension does not lift".into()));
                }
            }
        }
    }
    for (i, upper) in classes.values().enumerate() {
        for (j, lower) in classes.values().enumerate() {
            if i != j {
                extensions.push(extension_separating(poset, upper, lower)?);
            }
        }
    }
    let realizer = Realizer::new(extensions);
    self_check(poset, &realizer)?;
    Ok(realizer)
}

/// Points ordered by value; equal points appear in both index orders.
fn points_realizer(sub: &Poset, values: Vec<Rational>) -> Realizer {
    let mut ascending: Vec<usize> = (0..sub.len()).collect();
    ascending.sort_by_key(|&x| (values[x], x));
    let mut descending = ascending.clone();
    descending.sort_by_key(|&x| (values[x], std::cmp::Reverse(x)));
    let mut extensions = vec![LinearExtension::new(ascending)];
    if extensions[0].order != descending {
        extensions.push(LinearExtension::new(descending));
    }
    Realizer::new(extensions)
}

fn consistent_intervals(poset: &Poset, rep: &Representation) -> Result<Vec<MixedInterval>> {
    let intervals = rep.aligned_to(poset).map_err(|_| Error::Inconsistent)?;
    if !poset_from_representation(rep).same_order_as(poset)? {
        return Err(Error::Inconsistent);
    }
    Ok(intervals)
}

fn single_length(intervals: &[MixedInterval]) -> Option<Rational> {
    let first = intervals.first()?.length();
    intervals.iter().all(|i| i.length() == first).then_some(first)
}

fn rescale(intervals: &[MixedInterval], length: Rational) -> Vec<MixedInterval> {
    let factor = length.recip().expect("positive length");
    intervals.iter().map(|i| i.scaled(factor)).collect()
}

/// Union of the blocks with even and odd one-based index.
fn split_by_parity(blocks: &[Vec<usize>]) -> (Vec<usize>, Vec<usize>) {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (i, block) in blocks.iter().enumerate() {
        if (i + 1) % 2 == 0 {
            even.extend(block);
        } else {
            odd.extend(block);
        }
    }
    (even, odd)
}

/// Blocks bottom to top, each in the reverse of its order in `reference`,
/// with `after(i)` inserted right after block `i`.
fn stack_reversed(
    blocks: &[Vec<usize>],
    reference: &LinearExtension,
    after: impl Fn(usize) -> Vec<usize>,
) -> LinearExtension {
    let pos = reference.positions();
    let mut order = Vec::with_capacity(reference.order.len());
    for (i, block) in blocks.iter().enumerate() {
        let mut block = block.clone();
        block.sort_by_key(|&x| std::cmp::Reverse(pos[x]));
        order.extend(block);
        order.extend(after(i));
    }
    LinearExtension::new(order)
}

fn self_check(poset: &Poset, realizer: &Realizer) -> Result<()> {
    match verify_realizer(poset, realizer) {
        Ok(RealizerCheck::Valid) => Ok(()),
        Ok(RealizerCheck::Uncovered(p)) => Err(Error::SelfCheckFailed(format!(
            "pair ({}, {}) is not reversed",
            poset.name(p.above),
            poset.name(p.below)
        ))),
        Err(e) => Err(Error::SelfCheckFailed(e.to_string())),
    }
}
