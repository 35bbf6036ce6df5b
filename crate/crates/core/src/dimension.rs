//! Exact order dimension of small posets.
//!
//! The dimension is the least `t` such that the incomparable pairs split
//! into `t` sets, each reversible by a single linear extension. The search
//! deepens `t` from 2 and assigns pairs to `t` buckets by backtracking. A
//! bucket is kept as the transitive closure of the poset plus the pairs it
//! reverses (bitset rows), so a pair is rejected the moment it would close a
//! cycle, and a pair that a bucket already reverses costs nothing.
//!
//! Each round first tries to cover one orientation of every unordered pair,
//! which is necessary and usually much cheaper. If that fails, `t` is too
//! small. Otherwise the buckets are completed greedily with the mirror
//! pairs, falling back to a search over all ordered pairs.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::instances;
use crate::interval::is_unit_interval_order;
use crate::poset::{verify_realizer, IncPair, Poset, Realizer};
use crate::reversal::{linear_extension_reversing, Reversal};

/// Default bound on the number of elements accepted by [`exact_dimension`].
pub const DEFAULT_MAX_ELEMENTS: usize = 14;

const HARD_MAX_ELEMENTS: usize = 64;

#[derive(Clone, Debug)]
pub struct DimensionOptions {
    /// Give up with [`Error::LimitExceeded`] above this dimension.
    pub limit: Option<usize>,
    /// Refuse larger posets with [`Error::SizeBound`] (at most 64).
    pub max_elements: usize,
    /// Worker threads for the search; results do not depend on it.
    pub jobs: usize,
}

impl Default for DimensionOptions {
    fn default() -> Self {
        DimensionOptions { limit: None, max_elements: DEFAULT_MAX_ELEMENTS, jobs: 1 }
    }
}

/// Proof summary that `dimension - 1` extensions do not suffice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LowerBound {
    /// The refuted realizer size (0 when the dimension is 1).
    pub refuted_size: usize,
    /// Search nodes explored by the exhaustive refutation.
    pub nodes_explored: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionResult {
    pub dimension: usize,
    /// Exactly `dimension` extensions.
    pub realizer: Realizer,
    pub certificate: LowerBound,
}

/// Exact dimension with default options and an optional limit.
pub fn exact_dimension(poset: &Poset, limit: Option<usize>) -> Result<DimensionResult> {
    exact_dimension_with(poset, &DimensionOptions { limit, ..Default::default() })
}

pub fn exact_dimension_with(poset: &Poset, options: &DimensionOptions) -> Result<DimensionResult> {
    let n = poset.len();
    let bound = options.max_elements.min(HARD_MAX_ELEMENTS);
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    if poset.is_chain() {
        let realizer = Realizer::new(vec![poset.default_extension()]);
        return Ok(DimensionResult { dimension: 1, realizer, certificate: LowerBound::default() });
    }
    if options.limit.is_some_and(|l| l < 2) {
        return Err(Error::LimitExceeded(options.limit.unwrap()));
    }

    let all = poset.incomparable_pairs();
    let half: Vec<IncPair> = all.iter().copied().filter(|p| p.above < p.below).collect();
    let all = order_by_conflicts(poset, all);
    let half = order_by_conflicts(poset, half);
    let base = closure_rows(poset);
    let jobs = options.jobs.max(1);

    let mut certificate = LowerBound { refuted_size: 1, nodes_explored: 0 };
    let mut t = 2;
    loop {
        if options.limit.is_some_and(|l| t > l) {
            return Err(Error::LimitExceeded(options.limit.unwrap()));
        }
        let (found, nodes) = search(&base, &half, t, jobs);
        let mut refutation_nodes = nodes;
        if let Some(buckets) = found {
            if let Some(realizer) = complete_greedily(poset, &base, t, buckets, &all) {
                return Ok(DimensionResult { dimension: t, realizer, certificate });
            }
            let (found, nodes) = search(&base, &all, t, jobs);
            if let Some(mut buckets) = found {
                buckets.resize_with(t, || Bucket::new(&base));
                let realizer = realizer_from_buckets(poset, &buckets);
                return Ok(DimensionResult { dimension: t, realizer, certificate });
            }
            refutation_nodes = nodes;
        }
        certificate = LowerBound { refuted_size: t, nodes_explored: refutation_nodes };
        t += 1;
    }
}

/// Pairs `p`, `q` conflict when no extension reverses both; ordering pairs
/// by the number of conflicts puts the most constrained first.
fn order_by_conflicts(poset: &Poset, pairs: Vec<IncPair>) -> Vec<IncPair> {
    let degree: Vec<usize> = pairs
        .iter()
        .map(|p| pairs.iter().filter(|q| poset.le(p.above, q.below) && poset.le(q.above, p.below)).count())
        .collect();
    let mut indexed: Vec<(usize, IncPair)> = degree.into_iter().zip(pairs).collect();
    indexed.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    indexed.into_iter().map(|(_, p)| p).collect()
}

/// `rows[x]` has bit `y` set iff `x < y`.
fn closure_rows(poset: &Poset) -> Vec<u64> {
    let n = poset.len();
    (0..n)
        .map(|x| (0..n).filter(|&y| poset.lt(x, y)).fold(0u64, |row, y| row | (1 << y)))
        .collect()
}

#[derive(Clone)]
struct Bucket {
    rows: Vec<u64>,
    pairs: Vec<IncPair>,
}

impl Bucket {
    fn new(base: &[u64]) -> Self {
        Bucket { rows: base.to_vec(), pairs: Vec::new() }
    }

    /// Already forces `below` under `above`.
    fn reverses(&self, p: IncPair) -> bool {
        self.rows[p.below] >> p.above & 1 == 1
    }

    /// Adding `p` closes a cycle.
    fn blocks(&self, p: IncPair) -> bool {
        self.rows[p.above] >> p.below & 1 == 1
    }

    /// Adds the edge `below -> above` and re-closes.
    fn add(&mut self, p: IncPair) {
        let gain = (1u64 << p.above) | self.rows[p.above];
        let below_bit = 1u64 << p.below;
        for x in 0..self.rows.len() {
            if x == p.below || self.rows[x] & below_bit != 0 {
                self.rows[x] |= gain;
            }
        }
        self.pairs.push(p);
    }
}

#[derive(Clone)]
struct State {
    buckets: Vec<Bucket>,
    next: usize,
}

struct Shared<'a> {
    base: &'a [u64],
    pairs: &'a [IncPair],
    t: usize,
    nodes: AtomicU64,
    stop: AtomicBool,
}

/// Partition of `pairs` into at most `t` reversible buckets, and the number
/// of search nodes visited.
fn search(base: &[u64], pairs: &[IncPair], t: usize, jobs: usize) -> (Option<Vec<Bucket>>, u64) {
    let shared = Shared { base, pairs, t, nodes: AtomicU64::new(0), stop: AtomicBool::new(false) };
    let root = State { buckets: Vec::new(), next: 0 };
    if jobs <= 1 {
        let found = descend(&shared, root);
        return (found, shared.nodes.load(Ordering::Relaxed));
    }

    // expand breadth-first into enough independent subtrees
    let mut frontier = vec![root];
    let mut solved = None;
    while frontier.len() < jobs * 8 {
        let mut next = Vec::new();
        let mut expanded = false;
        for state in frontier {
            if state.next == pairs.len() {
                solved.get_or_insert(state.buckets);
                continue;
            }
            shared.nodes.fetch_add(1, Ordering::Relaxed);
            expanded = true;
            next.extend(children(&shared, &state));
        }
        frontier = next;
        if solved.is_some() || !expanded || frontier.is_empty() {
            break;
        }
    }
    if solved.is_some() {
        return (solved, shared.nodes.load(Ordering::Relaxed));
    }

    let cursor = AtomicUsize::new(0);
    let result: Mutex<Option<(usize, Vec<Bucket>)>> = Mutex::new(None);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = cursor.fetch_add(1, Ordering::Relaxed);
                if i >= frontier.len() || shared.stop.load(Ordering::Relaxed) {
                    break;
                }
                if let Some(buckets) = descend(&shared, frontier[i].clone()) {
                    let mut slot = result.lock().unwrap();
                    if slot.as_ref().is_none_or(|(j, _)| i < *j) {
                        *slot = Some((i, buckets));
                    }
                    shared.stop.store(true, Ordering::Relaxed);
                }
            });
        }
    });
    let found = result.into_inner().unwrap().map(|(_, b)| b);
    (found, shared.nodes.load(Ordering::Relaxed))
}

fn children(shared: &Shared<'_>, state: &State) -> Vec<State> {
    let p = shared.pairs[state.next];
    if state.buckets.iter().any(|b| b.reverses(p)) {
        return vec![State { buckets: state.buckets.clone(), next: state.next + 1 }];
    }
    let mut out = Vec::new();
    for b in 0..state.buckets.len() {
        if state.buckets[b].blocks(p) {
            continue;
        }
        let mut child = state.clone();
        child.buckets[b].add(p);
        child.next += 1;
        out.push(child);
    }
    // opening a fresh bucket: all empty buckets are interchangeable
    if state.buckets.len() < shared.t {
        let mut child = state.clone();
        let mut fresh = Bucket::new(shared.base);
        fresh.add(p);
        child.buckets.push(fresh);
        child.next += 1;
        out.push(child);
    }
    out
}

fn descend(shared: &Shared<'_>, state: State) -> Option<Vec<Bucket>> {
    if shared.stop.load(Ordering::Relaxed) {
        return None;
    }
    if state.next == shared.pairs.len() {
        return Some(state.buckets);
    }
    shared.nodes.fetch_add(1, Ordering::Relaxed);
    children(shared, &state).into_iter().find_map(|child| descend(shared, child))
}

/// Completes the buckets with mirror pairs that no bucket reverses yet.
/// Buckets left unused by the search start out empty.
fn complete_greedily(poset: &Poset, base: &[u64], t: usize, mut buckets: Vec<Bucket>, all: &[IncPair]) -> Option<Realizer> {
    buckets.resize_with(t, || Bucket::new(base));
    for &p in all {
        if buckets.iter().any(|b| b.reverses(p)) {
            continue;
        }
        let slot = buckets.iter().position(|b| !b.blocks(p))?;
        buckets[slot].add(p);
    }
    Some(realizer_from_buckets(poset, &buckets))
}

fn realizer_from_buckets(poset: &Poset, buckets: &[Bucket]) -> Realizer {
    let extensions = buckets
        .iter()
        .map(|b| match linear_extension_reversing(poset, &b.pairs) {
            Ok(Reversal::Extension(ext)) => ext,
            _ => unreachable!("bucket closures are acyclic"),
        })
        .collect();
    let realizer = Realizer::new(extensions);
    debug_assert!(verify_realizer(poset, &realizer).is_ok_and(|c| c.is_valid()));
    realizer
}

/// Dimension-3 test for unit interval orders by searching for the three
/// seven-element obstructions `FX2`, `H0` and `G0`.
pub fn unit_dim3_by_pattern(poset: &Poset) -> Result<bool> {
    if !is_unit_interval_order(poset) {
        return Err(Error::NotUnitInterval);
    }
    if poset.is_chain() {
        return Err(Error::IsChain);
    }
    Ok([instances::fx2(), instances::h0(), instances::g0()]
        .iter()
        .any(|pattern| poset.find_embedding(pattern).is_some()))
}
