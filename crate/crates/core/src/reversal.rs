//! Reversing sets of incomparable pairs with a single linear extension.
//!
//! A set `S` of incomparable pairs is reversible by one linear extension
//! exactly when it contains no strict alternating cycle. The search here is
//! a topological sort of the poset augmented with one edge per pair; when
//! the sort gets stuck, the directed cycle it leaves behind is turned into
//! an alternating cycle and shortened until it is strict.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::interval::is_interval_order;
use crate::instances;
use crate::poset::{IncPair, LinearExtension, Poset};

/// A strict alternating cycle `(x_1,y_1), ..., (x_k,y_k)` of incomparable
/// pairs, where pair `i` is `IncPair { above: x_i, below: y_i }`.
///
/// Invariants: `x_i <= y_{i+1}` cyclically, and `x_i` is incomparable to
/// `y_j` whenever `j != i+1`. No single linear extension reverses all of
/// the pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub pairs: Vec<IncPair>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Number of links `x_i <= y_{i+1}` that are strict, i.e. `x_i != y_{i+1}`.
    pub fn strict_links(&self) -> usize {
        let k = self.pairs.len();
        (0..k).filter(|&i| self.pairs[i].above != self.pairs[(i + 1) % k].below).count()
    }

    /// Checks the strict alternating cycle conditions against `poset`, and
    /// membership in `within` when given. Independent of how the witness was
    /// found.
    pub fn validate(&self, poset: &Poset, within: Option<&[IncPair]>) -> std::result::Result<(), String> {
        let k = self.pairs.len();
        if k < 2 {
            return Err(format!("cycle of length {k}"));
        }
        for (i, p) in self.pairs.iter().enumerate() {
            if !poset.incomparable(p.above, p.below) {
                return Err(format!("pair {i} is not incomparable"));
            }
            if let Some(set) = within {
                if !set.contains(p) {
                    return Err(format!("pair {i} is not in the pair set"));
                }
            }
        }
        for i in 0..k {
            let x = self.pairs[i].above;
            for j in 0..k {
                let y = self.pairs[j].below;
                if j == (i + 1) % k {
                    if !poset.le(x, y) {
                        return Err(format!("x_{i} is not below y_{j}"));
                    }
                } else if !poset.incomparable(x, y) {
                    return Err(format!("x_{i} and y_{j} are comparable"));
                }
            }
        }
        Ok(())
    }
}

/// Result of [`linear_extension_reversing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reversal {
    Extension(LinearExtension),
    Cycle(CycleWitness),
}

impl Reversal {
    pub fn extension(self) -> Option<LinearExtension> {
        match self {
            Reversal::Extension(ext) => Some(ext),
            Reversal::Cycle(_) => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Edge {
    Order,
    Pair(IncPair),
}

/// A linear extension putting `above` over `below` for every pair in `pairs`,
/// or a strict alternating cycle inside `pairs` showing none exists.
///
/// Among the available elements the lowest index is always placed first.
pub fn linear_extension_reversing(poset: &Poset, pairs: &[IncPair]) -> Result<Reversal> {
    let n = poset.len();
    for p in pairs {
        if p.above >= n || p.below >= n {
            return Err(Error::UnknownElement(format!("#{}", p.above.max(p.below))));
        }
        if !poset.incomparable(p.above, p.below) {
            return Err(Error::PairNotIncomparable(
                poset.name(p.above).to_owned(),
                poset.name(p.below).to_owned(),
            ));
        }
    }

    // edges point upwards: u -> v means u must come before v
    let mut preds: Vec<Vec<(usize, Edge)>> = vec![Vec::new(); n];
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (x, y) in poset.relations() {
        preds[y].push((x, Edge::Order));
        succs[x].push(y);
    }
    for &p in pairs {
        preds[p.above].push((p.below, Edge::Pair(p)));
        succs[p.below].push(p.above);
    }

    let mut indegree: Vec<usize> = preds.iter().map(Vec::len).collect();
    let mut ready: BinaryHeap<Reverse<usize>> = (0..n).filter(|&x| indegree[x] == 0).map(Reverse).collect();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(x)) = ready.pop() {
        placed[x] = true;
        order.push(x);
        for &y in &succs[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                ready.push(Reverse(y));
            }
        }
    }
    if order.len() == n {
        return Ok(Reversal::Extension(LinearExtension::new(order)));
    }

    let edges = stuck_cycle(&preds, &placed);
    let cycle = alternating_from_edges(&edges);
    Ok(Reversal::Cycle(make_strict(poset, cycle)))
}

/// Every unplaced vertex has an unplaced predecessor; walking predecessors
/// must revisit a vertex. Returns the cycle's edges in forward order.
fn stuck_cycle(preds: &[Vec<(usize, Edge)>], placed: &[bool]) -> Vec<Edge> {
    let start = placed.iter().position(|&p| !p).expect("some vertex is unplaced");
    let mut seen_at = vec![usize::MAX; placed.len()];
    // walk[i] = (vertex, edge entering it from walk[i + 1].0)
    let mut walk: Vec<(usize, Edge)> = Vec::new();
    let mut v = start;
    loop {
        if seen_at[v] != usize::MAX {
            let from = seen_at[v];
            // walk[from..] runs backwards from v around to v again
            let mut edges: Vec<Edge> = walk[from..].iter().map(|&(_, e)| e).collect();
            edges.reverse();
            return edges;
        }
        seen_at[v] = walk.len();
        let &(u, e) = preds[v]
            .iter()
            .find(|(u, _)| !placed[*u])
            .expect("an unplaced vertex keeps an unplaced predecessor");
        walk.push((v, e));
        v = u;
    }
}

fn alternating_from_edges(edges: &[Edge]) -> Vec<IncPair> {
    // the poset is acyclic, so every directed cycle uses at least one pair edge;
    // order edges between consecutive pair edges compose to x_i <= y_{i+1}
    edges
        .iter()
        .filter_map(|e| match e {
            Edge::Pair(p) => Some(*p),
            Edge::Order => None,
        })
        .collect()
}

/// Shortcuts `x_i <= y_j` with `j != i+1` until none remain, then rotates
/// the smallest pair to the front.
fn make_strict(poset: &Poset, mut pairs: Vec<IncPair>) -> CycleWitness {
    'shorten: loop {
        let k = pairs.len();
        for i in 0..k {
            for j in 0..k {
                if j == (i + 1) % k || !poset.le(pairs[i].above, pairs[j].below) {
                    continue;
                }
                // keep j, j+1, ..., i; close with x_i <= y_j
                let mut shorter = Vec::new();
                let mut t = j;
                loop {
                    shorter.push(pairs[t]);
                    if t == i {
                        break;
                    }
                    t = (t + 1) % k;
                }
                pairs = shorter;
                continue 'shorten;
            }
        }
        break;
    }
    let first = (0..pairs.len()).min_by_key(|&i| pairs[i]).unwrap_or(0);
    pairs.rotate_left(first);
    CycleWitness { pairs }
}

/// Some strict alternating cycle in `pairs`, if any exists.
pub fn find_strict_alternating_cycle(poset: &Poset, pairs: &[IncPair]) -> Result<Option<CycleWitness>> {
    Ok(match linear_extension_reversing(poset, pairs)? {
        Reversal::Extension(_) => None,
        Reversal::Cycle(c) => Some(c),
    })
}

/// A linear extension of the interval order `poset` with every element of
/// `upper` above every incomparable element of `lower`.
///
/// In an interval order any strict alternating cycle of length at least two
/// has an element acting as both an `x` and a `y`, which cannot happen for
/// disjoint sets, so this never fails on valid input.
pub fn extension_separating(poset: &Poset, upper: &[usize], lower: &[usize]) -> Result<LinearExtension> {
    let mut in_upper = vec![false; poset.len()];
    for &a in upper {
        in_upper[a] = true;
    }
    if let Some(&shared) = lower.iter().find(|&&b| in_upper[b]) {
        return Err(Error::NotDisjoint(poset.name(shared).to_owned()));
    }
    if !is_interval_order(poset) {
        let witness = poset.find_embedding(&instances::two_plus_two()).unwrap_or_default();
        return Err(Error::NotIntervalOrder(witness.iter().map(|&x| poset.name(x).to_owned()).collect()));
    }
    let pairs: Vec<IncPair> = upper
        .iter()
        .flat_map(|&a| lower.iter().map(move |&b| IncPair::new(a, b)))
        .filter(|p| poset.incomparable(p.above, p.below))
        .collect();
    match linear_extension_reversing(poset, &pairs)? {
        Reversal::Extension(ext) => Ok(ext),
        Reversal::Cycle(_) => Err(Error::InternalCycle),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn antichain2() -> Poset {
        Poset::new::<_, &str>(&["x", "y"], &[]).unwrap()
    }

    fn one_plus_three() -> Poset {
        Poset::new(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn single_pair_on_antichain() {
        let p = antichain2();
        let r = linear_extension_reversing(&p, &[p.pair("x", "y").unwrap()]).unwrap();
        assert_eq!(r, Reversal::Extension(LinearExtension::new(vec![1, 0])));
    }

    #[test]
    fn both_orientations_form_a_two_cycle() {
        let p = antichain2();
        let pairs = p.incomparable_pairs();
        let Reversal::Cycle(c) = linear_extension_reversing(&p, &pairs).unwrap() else {
            panic!("expected a cycle");
        };
        assert_eq!(c.pairs, vec![IncPair::new(0, 1), IncPair::new(1, 0)]);
        assert_eq!(c.strict_links(), 0);
        c.validate(&p, Some(&pairs)).unwrap();
    }

    #[test]
    fn two_cycle_with_one_strict_comparability() {
        // x2 < y1, x1 incomparable to both
        let p = Poset::new(&["x1", "y1", "x2"], &[("x2", "y1")]).unwrap();
        let s = [p.pair("x1", "y1").unwrap(), p.pair("x2", "x1").unwrap()];
        let c = find_strict_alternating_cycle(&p, &s).unwrap().unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.strict_links(), 1);
        c.validate(&p, Some(&s)).unwrap();
    }

    #[test]
    fn empty_pair_set_is_reversible() {
        let p = one_plus_three();
        assert_eq!(find_strict_alternating_cycle(&p, &[]).unwrap(), None);
    }

    #[test]
    fn comparable_pairs_are_rejected() {
        let p = one_plus_three();
        let err = linear_extension_reversing(&p, &[p.pair("c", "a").unwrap()]).unwrap_err();
        assert_eq!(err, Error::PairNotIncomparable("c".into(), "a".into()));
        let err = linear_extension_reversing(&p, &[p.pair("a", "a").unwrap()]).unwrap_err();
        assert!(matches!(err, Error::PairNotIncomparable(..)));
    }

    #[test]
    fn separating_extensions() {
        let p = antichain2();
        assert_eq!(extension_separating(&p, &[0], &[1]).unwrap().order, vec![1, 0]);

        let p = one_plus_three();
        assert_eq!(extension_separating(&p, &[3], &[0, 1, 2]).unwrap().names(&p), ["a", "b", "c", "d"]);
        assert_eq!(extension_separating(&p, &[0, 1, 2], &[3]).unwrap().names(&p), ["d", "a", "b", "c"]);
        assert_eq!(extension_separating(&p, &[0, 1], &[1]), Err(Error::NotDisjoint("b".into())));

        let two_two = instances::two_plus_two();
        assert!(matches!(extension_separating(&two_two, &[0], &[2]), Err(Error::NotIntervalOrder(_))));
    }

    #[test]
    fn validator_rejects_non_strict_cycles() {
        // chain-free 3-antichain: (a,b),(b,c),(c,a) is alternating via equalities
        let p = Poset::new::<_, &str>(&["a", "b", "c"], &[]).unwrap();
        let three = CycleWitness { pairs: vec![IncPair::new(0, 1), IncPair::new(1, 2), IncPair::new(2, 0)] };
        assert!(three.validate(&p, None).is_err());
        let one = CycleWitness { pairs: vec![IncPair::new(0, 1)] };
        assert!(one.validate(&p, None).is_err());
    }
}
