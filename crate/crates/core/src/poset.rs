//! Finite posets, incomparable pairs, linear extensions and realizers.
//!
//! A [`Poset`] stores only its strict relation; `x <= y` is derived as
//! `x == y || x < y`. Elements carry opaque string names, but every
//! operation works on dense indices assigned in input order, so iteration
//! order and tie-breaking are deterministic.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};

/// A finite strict partial order over named elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    // below[x * n + y] iff x < y
    below: Vec<bool>,
}

/// An ordered incomparable pair. A linear extension *reverses* the pair
/// when it puts `above` above `below`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IncPair {
    pub above: usize,
    pub below: usize,
}

impl IncPair {
    pub fn new(above: usize, below: usize) -> Self {
        IncPair { above, below }
    }

    pub fn mirror(self) -> Self {
        IncPair { above: self.below, below: self.above }
    }
}

/// A total order on the ground set, listed from bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearExtension {
    pub order: Vec<usize>,
}

impl LinearExtension {
    pub fn new(order: Vec<usize>) -> Self {
        LinearExtension { order }
    }

    /// Builds an extension from element names, bottom first.
    pub fn from_names<S: AsRef<str>>(poset: &Poset, names: &[S]) -> Result<Self> {
        let order = names
            .iter()
            .map(|n| poset.index_of(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearExtension { order })
    }

    /// `positions()[x]` is the height of `x` in this order.
    ///
    /// Panics if the order is not a permutation of `0..len`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.order.len()];
        for (rank, &x) in self.order.iter().enumerate() {
            pos[x] = rank;
        }
        pos
    }

    /// True if `pair.above` comes after `pair.below`.
    pub fn reverses(&self, pair: IncPair) -> bool {
        let pos = self.positions();
        pos[pair.above] > pos[pair.below]
    }

    pub fn names<'a>(&self, poset: &'a Poset) -> Vec<&'a str> {
        self.order.iter().map(|&x| poset.name(x)).collect()
    }
}

/// A list of linear extensions meant to realize a poset.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Realizer {
    pub extensions: Vec<LinearExtension>,
}

impl Realizer {
    pub fn new(extensions: Vec<LinearExtension>) -> Self {
        Realizer { extensions }
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }
}

/// Outcome of [`verify_realizer`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealizerCheck {
    Valid,
    /// The first incomparable pair (in index order) that no extension reverses.
    Uncovered(IncPair),
}

impl RealizerCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, RealizerCheck::Valid)
    }
}

/// Elements sharing the same down set and up set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoldingsClass {
    /// Lowest index in the class.
    pub representative: usize,
    /// Remaining members, ascending.
    pub duplicates: Vec<usize>,
}

impl HoldingsClass {
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.representative).chain(self.duplicates.iter().copied())
    }

    pub fn len(&self) -> usize {
        1 + self.duplicates.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A poset with duplicated holdings collapsed to one representative each.
///
/// `classes[i]` lists the members of the original poset that quotient
/// element `i` stands for.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub poset: Poset,
    pub classes: Vec<HoldingsClass>,
    original_len: usize,
}

impl Quotient {
    /// True when no element had a duplicate.
    pub fn is_trivial(&self) -> bool {
        self.classes.iter().all(|c| c.duplicates.is_empty())
    }

    /// Original indices of the representatives, in quotient order.
    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.representative).collect()
    }

    /// Expands a realizer of the quotient into one of the original poset.
    ///
    /// Each class is laid out consecutively: ascending in the first
    /// extension, descending in the second, ascending elsewhere.
    pub fn reinflate(&self, quotient_realizer: &Realizer) -> Result<Realizer> {
        let has_duplicates = !self.is_trivial();
        if has_duplicates && quotient_realizer.len() < 2 {
            return Err(Error::NeedTwoExtensions);
        }
        let extensions = quotient_realizer
            .extensions
            .iter()
            .enumerate()
            .map(|(k, ext)| {
                let mut order = Vec::with_capacity(self.original_len);
                for &q in &ext.order {
                    let class = &self.classes[q];
                    if k == 1 {
                        order.extend(class.duplicates.iter().rev().copied());
                        order.push(class.representative);
                    } else {
                        order.extend(class.members());
                    }
                }
                LinearExtension::new(order)
            })
            .collect();
        Ok(Realizer::new(extensions))
    }
}

impl Poset {
    /// Builds the transitive closure of `relations` over `elements`.
    ///
    /// Relation pairs are `(lower, upper)` and need not be cover relations.
    pub fn new<S, R>(elements: &[S], relations: &[(R, R)]) -> Result<Self>
    where
        S: AsRef<str>,
        R: AsRef<str>,
    {
        let names: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = index_names(&names)?;
        let n = names.len();
        let mut below = vec![false; n * n];
        for (lo, hi) in relations {
            let lo = lookup(&index, lo.as_ref())?;
            let hi = lookup(&index, hi.as_ref())?;
            below[lo * n + hi] = true;
        }
        Self::close(names, index, below)
    }

    /// Builds a poset over `names` whose strict relation is the transitive
    /// closure of `lt`.
    pub fn from_fn<S, F>(names: &[S], mut lt: F) -> Result<Self>
    where
        S: AsRef<str>,
        F: FnMut(usize, usize) -> bool,
    {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = index_names(&names)?;
        let n = names.len();
        let mut below = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                below[x * n + y] = lt(x, y);
            }
        }
        Self::close(names, index, below)
    }

    fn close(names: Vec<String>, index: HashMap<String, usize>, mut below: Vec<bool>) -> Result<Self> {
        let n = names.len();
        for k in 0..n {
            for i in 0..n {
                if !below[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if below[k * n + j] {
                        below[i * n + j] = true;
                    }
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| below[x * n + x]) {
            return Err(Error::Cycle(names[x].clone()));
        }
        Ok(Poset { names, index, below })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        lookup(&self.index, name)
    }

    /// Strict order `x < y`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.below[x * self.len() + y]
    }

    /// Reflexive order `x <= y`.
    pub fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.lt(y, x)
    }

    /// Distinct and unrelated.
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        !self.comparable(x, y)
    }

    /// The incomparable pair reversed by putting `above` above `below`.
    pub fn pair(&self, above: &str, below: &str) -> Result<IncPair> {
        Ok(IncPair::new(self.index_of(above)?, self.index_of(below)?))
    }

    /// Named lookup of `lt`.
    pub fn lt_by_name(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.lt(self.index_of(x)?, self.index_of(y)?))
    }

    /// `D(x)`: elements strictly below `x`, ascending by index.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&z| self.lt(z, x)).collect()
    }

    /// `U(x)`: elements strictly above `x`, ascending by index.
    pub fn up_set(&self, x: usize) -> Vec<usize> {
        (0..self.len()).filter(|&z| self.lt(x, z)).collect()
    }

    /// All strict relations `(lower, upper)` in index order.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |x| (0..n).filter(move |&y| self.lt(x, y)).map(move |y| (x, y)))
    }

    /// Cover relations of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        self.relations()
            .filter(|&(x, y)| !(0..n).any(|z| self.lt(x, z) && self.lt(z, y)))
            .collect()
    }

    /// `inc(P)` in lexicographic index order; symmetric by construction.
    pub fn incomparable_pairs(&self) -> Vec<IncPair> {
        let n = self.len();
        let mut pairs = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.incomparable(x, y) {
                    pairs.push(IncPair::new(x, y));
                }
            }
        }
        pairs
    }

    pub fn is_chain(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (x + 1..n).all(|y| self.comparable(x, y)))
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        (0..self.len()).all(|z| !self.lt(z, x))
    }

    /// Induced subposet on `members` (which keeps the order given).
    pub fn subposet(&self, members: &[usize]) -> Poset {
        let names: Vec<String> = members.iter().map(|&x| self.names[x].clone()).collect();
        let index = names.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let m = members.len();
        let mut below = vec![false; m * m];
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                below[i * m + j] = self.lt(x, y);
            }
        }
        Poset { names, index, below }
    }

    /// Compares with `other` element by element name, ignoring listing order.
    pub fn same_order_as(&self, other: &Poset) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::GroundSetMismatch);
        }
        let map = self
            .names
            .iter()
            .map(|n| other.index.get(n).copied().ok_or(Error::GroundSetMismatch))
            .collect::<Result<Vec<_>>>()?;
        let n = self.len();
        Ok((0..n).all(|x| (0..n).all(|y| self.lt(x, y) == other.lt(map[x], map[y]))))
    }

    /// A linear extension taking the lowest available index first.
    pub fn default_extension(&self) -> LinearExtension {
        let n = self.len();
        let mut indegree: Vec<usize> = (0..n).map(|y| (0..n).filter(|&x| self.lt(x, y)).count()).collect();
        let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
            (0..n).filter(|&x| indegree[x] == 0).map(std::cmp::Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(std::cmp::Reverse(x)) = ready.pop() {
            order.push(x);
            for y in 0..n {
                if self.lt(x, y) {
                    indegree[y] -= 1;
                    if indegree[y] == 0 {
                        ready.push(std::cmp::Reverse(y));
                    }
                }
            }
        }
        LinearExtension::new(order)
    }

    /// Some induced copy of `pattern` in `self`: `embedding[i]` is the image
    /// of pattern element `i`. The first embedding in lexicographic order of
    /// images is returned.
    pub fn find_embedding(&self, pattern: &Poset) -> Option<Vec<usize>> {
        let mut found = None;
        search_embeddings(self, pattern, &mut |emb| {
            found = Some(emb.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    /// Every induced copy of `pattern`, in lexicographic order of images.
    pub fn embeddings(&self, pattern: &Poset) -> Vec<Vec<usize>> {
        let mut all = Vec::new();
        search_embeddings(self, pattern, &mut |emb| {
            all.push(emb.to_vec());
            ControlFlow::Continue(())
        });
        all
    }

    /// `D(x) = D(y)` and `U(x) = U(y)`.
    pub fn same_holdings(&self, x: usize, y: usize) -> bool {
        (0..self.len()).all(|z| self.lt(z, x) == self.lt(z, y) && self.lt(x, z) == self.lt(y, z))
    }
}

fn index_names(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateElement(name.clone()));
        }
    }
    Ok(index)
}

fn lookup(index: &HashMap<String, usize>, name: &str) -> Result<usize> {
    index.get(name).copied().ok_or_else(|| Error::UnknownElement(name.to_owned()))
}

fn search_embeddings(
    host: &Poset,
    pattern: &Poset,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) {
    if pattern.len() > host.len() {
        return;
    }
    let mut image = Vec::with_capacity(pattern.len());
    let mut used = vec![false; host.len()];
    let _ = extend_embedding(host, pattern, &mut image, &mut used, visit);
}

fn extend_embedding(
    host: &Poset,
    pattern: &Poset,
    image: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let i = image.len();
    if i == pattern.len() {
        return visit(image);
    }
    for candidate in 0..host.len() {
        if used[candidate] {
            continue;
        }
        let fits = image.iter().enumerate().all(|(j, &img)| {
            pattern.lt(j, i) == host.lt(img, candidate) && pattern.lt(i, j) == host.lt(candidate, img)
        });
        if !fits {
            continue;
        }
        used[candidate] = true;
        image.push(candidate);
        let flow = extend_embedding(host, pattern, image, used, visit);
        image.pop();
        used[candidate] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Transitive closure of `relations`; see [`Poset::new`].
pub fn build_poset<S: AsRef<str>, R: AsRef<str>>(elements: &[S], relations: &[(R, R)]) -> Result<Poset> {
    Poset::new(elements, relations)
}

/// True iff `order` lists every element once and respects every strict relation.
pub fn is_linear_extension(poset: &Poset, order: &[usize]) -> Result<bool> {
    let n = poset.len();
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    for (rank, &x) in order.iter().enumerate() {
        if x >= n || pos[x] != usize::MAX {
            return Err(Error::NotAPermutation);
        }
        pos[x] = rank;
    }
    Ok(poset.relations().all(|(x, y)| pos[x] < pos[y]))
}

/// Checks that every member is a linear extension and that every incomparable
/// pair is reversed by some member.
pub fn verify_realizer(poset: &Poset, realizer: &Realizer) -> Result<RealizerCheck> {
    let mut positions = Vec::with_capacity(realizer.len());
    for (k, ext) in realizer.extensions.iter().enumerate() {
        match is_linear_extension(poset, &ext.order) {
            Ok(true) => positions.push(ext.positions()),
            Ok(false) | Err(Error::NotAPermutation) => return Err(Error::InvalidExtension(k)),
            Err(e) => return Err(e),
        }
    }
    if realizer.is_empty() && !poset.is_empty() {
        return Err(Error::InvalidExtension(0));
    }
    for pair in poset.incomparable_pairs() {
        if !positions.iter().any(|pos| pos[pair.above] > pos[pair.below]) {
            return Ok(RealizerCheck::Uncovered(pair));
        }
    }
    Ok(RealizerCheck::Valid)
}

/// Classes of duplicated holdings, ordered by representative.
pub fn holdings_classes(poset: &Poset) -> Vec<HoldingsClass> {
    let n = poset.len();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        assigned[x] = true;
        let mut duplicates = Vec::new();
        for y in x + 1..n {
            if !assigned[y] && poset.same_holdings(x, y) {
                assigned[y] = true;
                duplicates.push(y);
            }
        }
        classes.push(HoldingsClass { representative: x, duplicates });
    }
    classes
}

/// Keeps one representative per class of duplicated holdings.
pub fn quotient_duplicates(poset: &Poset) -> Quotient {
    let classes = holdings_classes(poset);
    let reps: Vec<usize> = classes.iter().map(|c| c.representative).collect();
    Quotient { poset: poset.subposet(&reps), classes, original_len: poset.len() }
}

/// See [`Quotient::reinflate`].
pub fn reinflate_realizer(quotient: &Quotient, realizer: &Realizer) -> Result<Realizer> {
    quotient.reinflate(realizer)
}

/// Induced-subposet search; see [`Poset::find_embedding`].
pub fn contains_subposet(poset: &Poset, pattern: &Poset) -> Option<Vec<usize>> {
    poset.find_embedding(pattern)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> Poset {
        Poset::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn antichain2() -> Poset {
        Poset::new::<_, &str>(&["x", "y"], &[]).unwrap()
    }

    fn one_plus_three() -> Poset {
        Poset::new(&["a", "b", "c", "d"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn two_plus_two() -> Poset {
        Poset::new(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap()
    }

    #[test]
    fn closure_adds_transitive_relations() {
        let p = chain3();
        assert!(p.lt_by_name("a", "c").unwrap());
        assert_eq!(p.relations().count(), 3);
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn cycles_and_unknown_elements_are_rejected() {
        assert!(matches!(Poset::new(&["a", "b"], &[("a", "b"), ("b", "a")]), Err(Error::Cycle(_))));
        assert!(matches!(Poset::new(&["a"], &[("a", "a")]), Err(Error::Cycle(_))));
        assert_eq!(Poset::new(&["a"], &[("a", "q")]), Err(Error::UnknownElement("q".into())));
        assert_eq!(Poset::new::<_, &str>(&["a", "a"], &[]), Err(Error::DuplicateElement("a".into())));
    }

    #[test]
    fn down_and_up_sets() {
        let p = one_plus_three();
        assert_eq!(p.down_set(2), vec![0, 1]);
        assert!(p.up_set(3).is_empty());
        assert_eq!(p.up_set(0), vec![1, 2]);
    }

    #[test]
    fn incomparable_pairs_small_cases() {
        assert!(Poset::new(&["a", "b"], &[("a", "b")]).unwrap().incomparable_pairs().is_empty());
        assert_eq!(antichain2().incomparable_pairs(), vec![IncPair::new(0, 1), IncPair::new(1, 0)]);
        let pairs = two_plus_two().incomparable_pairs();
        assert_eq!(pairs.len(), 8);
        for &x in &[0, 1] {
            for &y in &[2, 3] {
                assert!(pairs.contains(&IncPair::new(x, y)));
                assert!(pairs.contains(&IncPair::new(y, x)));
            }
        }
    }

    #[test]
    fn linear_extension_checks() {
        let p = chain3();
        assert!(is_linear_extension(&p, &[0, 1, 2]).unwrap());
        assert!(!is_linear_extension(&p, &[1, 0, 2]).unwrap());
        assert!(is_linear_extension(&antichain2(), &[1, 0]).unwrap());
        assert_eq!(is_linear_extension(&p, &[0, 0, 2]), Err(Error::NotAPermutation));
        assert_eq!(is_linear_extension(&p, &[0, 1]), Err(Error::NotAPermutation));
    }

    #[test]
    fn realizer_verification() {
        let p = chain3();
        let r = Realizer::new(vec![LinearExtension::new(vec![0, 1, 2])]);
        assert_eq!(verify_realizer(&p, &r).unwrap(), RealizerCheck::Valid);

        let a = antichain2();
        let both = Realizer::new(vec![LinearExtension::new(vec![0, 1]), LinearExtension::new(vec![1, 0])]);
        assert!(verify_realizer(&a, &both).unwrap().is_valid());

        let one = Realizer::new(vec![LinearExtension::new(vec![0, 1])]);
        assert_eq!(verify_realizer(&a, &one).unwrap(), RealizerCheck::Uncovered(IncPair::new(0, 1)));

        let bad = Realizer::new(vec![LinearExtension::new(vec![1, 0, 2])]);
        assert_eq!(verify_realizer(&p, &bad), Err(Error::InvalidExtension(0)));
    }

    #[test]
    fn duplicated_holdings_collapse_and_reinflate() {
        let a = antichain2();
        let q = quotient_duplicates(&a);
        assert_eq!(q.poset.len(), 1);
        assert_eq!(q.classes, vec![HoldingsClass { representative: 0, duplicates: vec![1] }]);
        let single = Realizer::new(vec![LinearExtension::new(vec![0])]);
        assert_eq!(q.reinflate(&single), Err(Error::NeedTwoExtensions));
        let two = Realizer::new(vec![LinearExtension::new(vec![0]); 2]);
        let r = q.reinflate(&two).unwrap();
        assert_eq!(r.extensions[0].order, vec![0, 1]);
        assert_eq!(r.extensions[1].order, vec![1, 0]);
        assert!(verify_realizer(&a, &r).unwrap().is_valid());
    }

    #[test]
    fn twin_free_posets_have_singleton_classes() {
        let p = one_plus_three();
        let q = quotient_duplicates(&p);
        assert!(q.is_trivial());
        assert_eq!(q.poset, p);
    }

    #[test]
    fn embedding_search() {
        let p = two_plus_two();
        assert_eq!(p.find_embedding(&p), Some(vec![0, 1, 2, 3]));
        assert_eq!(one_plus_three().find_embedding(&two_plus_two()), None);
        // swapping the two chains is the only non-trivial automorphism
        assert_eq!(p.embeddings(&p).len(), 2);
        // pattern larger than host
        assert_eq!(chain3().find_embedding(&one_plus_three()), None);
    }

    #[test]
    fn same_order_ignores_listing_order() {
        let p = chain3();
        let q = Poset::new(&["c", "a", "b"], &[("b", "c"), ("a", "b")]).unwrap();
        assert!(p.same_order_as(&q).unwrap());
        let r = Poset::new::<_, &str>(&["a", "b", "z"], &[]).unwrap();
        assert_eq!(p.same_order_as(&r), Err(Error::GroundSetMismatch));
    }
}
