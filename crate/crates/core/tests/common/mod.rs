//! Brute-force references used by the integration tests. Nothing here calls
//! into the algorithms under test; posets are read through `lt` only.

#![allow(dead_code)]

use std::collections::HashSet;

use intorder::instances::stream_rng;
use intorder::{IncPair, Poset};
use rand::seq::SliceRandom;
use rand::Rng;

/// Strict relation matrix of `poset`.
pub fn matrix(poset: &Poset) -> Vec<Vec<bool>> {
    let n = poset.len();
    (0..n).map(|x| (0..n).map(|y| poset.lt(x, y)).collect()).collect()
}

pub fn from_matrix(lt: &[Vec<bool>]) -> Poset {
    let names: Vec<String> = (0..lt.len()).map(|i| format!("p{i}")).collect();
    Poset::from_fn(&names, |x, y| lt[x][y]).expect("matrix is a strict order")
}

/// Every linear extension, bottom first.
pub fn all_extensions(poset: &Poset) -> Vec<Vec<usize>> {
    fn go(lt: &[Vec<bool>], placed: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = lt.len();
        if placed.len() == n {
            out.push(placed.clone());
            return;
        }
        for x in 0..n {
            if !used[x] && (0..n).all(|y| !lt[y][x] || used[y]) {
                used[x] = true;
                placed.push(x);
                go(lt, placed, used, out);
                placed.pop();
                used[x] = false;
            }
        }
    }
    let lt = matrix(poset);
    let mut out = Vec::new();
    go(&lt, &mut Vec::new(), &mut vec![false; lt.len()], &mut out);
    out
}

fn incomparable(lt: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = lt.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && !lt[x][y] && !lt[y][x] {
                out.push((x, y));
            }
        }
    }
    out
}

/// Least number of linear extensions whose intersection is the poset,
/// by trying every subset of extensions in increasing size.
pub fn naive_dimension(poset: &Poset) -> usize {
    let lt = matrix(poset);
    let inc = incomparable(&lt);
    if inc.is_empty() {
        return 1;
    }
    assert!(inc.len() <= 128);
    let masks: Vec<u128> = all_extensions(poset)
        .iter()
        .map(|ext| {
            let mut pos = vec![0; ext.len()];
            for (i, &x) in ext.iter().enumerate() {
                pos[x] = i;
            }
            inc.iter()
                .enumerate()
                .filter(|(_, &(a, b))| pos[a] > pos[b])
                .fold(0u128, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let full = if inc.len() == 128 { u128::MAX } else { (1u128 << inc.len()) - 1 };
    fn covers(masks: &[u128], start: usize, left: usize, acc: u128, full: u128) -> bool {
        if acc == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        (start..masks.len()).any(|i| covers(masks, i + 1, left - 1, acc | masks[i], full))
    }
    (2..).find(|&t| covers(&masks, 0, t, 0, full)).unwrap()
}

/// Whether one linear extension puts every `above` over its `below`.
pub fn brute_reversible(poset: &Poset, pairs: &[IncPair]) -> bool {
    all_extensions(poset).iter().any(|ext| {
        let mut pos = vec![0; ext.len()];
        for (i, &x) in ext.iter().enumerate() {
            pos[x] = i;
        }
        pairs.iter().all(|p| pos[p.above] > pos[p.below])
    })
}

/// Checks the strict alternating cycle conditions written out directly.
pub fn is_strict_alternating_cycle(poset: &Poset, pairs: &[IncPair]) -> bool {
    let lt = matrix(poset);
    let le = |a: usize, b: usize| a == b || lt[a][b];
    let inc = |a: usize, b: usize| a != b && !lt[a][b] && !lt[b][a];
    let k = pairs.len();
    k >= 2
        && pairs.iter().all(|p| inc(p.above, p.below))
        && (0..k).all(|i| {
            (0..k).all(|j| {
                let (x, y) = (pairs[i].above, pairs[j].below);
                if j == (i + 1) % k {
                    le(x, y)
                } else {
                    inc(x, y)
                }
            })
        })
}

/// Whether some four elements form 2+2, by checking every quadruple.
pub fn has_two_plus_two(poset: &Poset) -> bool {
    let lt = matrix(poset);
    let n = lt.len();
    let inc = |a: usize, b: usize| a != b && !lt[a][b] && !lt[b][a];
    (0..n).any(|a| {
        (0..n).any(|b| {
            lt[a][b]
                && (0..n).any(|c| {
                    (0..n).any(|d| {
                        lt[c][d] && inc(a, c) && inc(a, d) && inc(b, c) && inc(b, d)
                    })
                })
        })
    })
}

/// Whether some element is incomparable to all three members of a chain.
pub fn has_one_plus_three(poset: &Poset) -> bool {
    let lt = matrix(poset);
    let n = lt.len();
    let inc = |a: usize, b: usize| a != b && !lt[a][b] && !lt[b][a];
    (0..n).any(|y| {
        (0..n).any(|a| {
            (0..n).any(|b| (0..n).any(|c| lt[a][b] && lt[b][c] && inc(y, a) && inc(y, b) && inc(y, c)))
        })
    })
}

/// Transitively closed relations `i < j` that only use `i < j` as indices.
/// Every finite poset is isomorphic to one of these.
pub fn naturally_labelled(n: usize) -> Vec<Vec<Vec<bool>>> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << slots.len() {
        let mut lt = vec![vec![false; n]; n];
        for (k, &(i, j)) in slots.iter().enumerate() {
            lt[i][j] = mask >> k & 1 == 1;
        }
        let closed = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(lt[a][b] && lt[b][c]) || lt[a][c])));
        if closed {
            out.push(lt);
        }
    }
    out
}

/// Every strict partial order on `n` labelled points.
pub fn all_labelled(n: usize) -> Vec<Vec<Vec<bool>>> {
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for k in 0..n {
        perms = perms
            .into_iter()
            .flat_map(|p| (0..=k).map(move |at| {
                let mut q = p.clone();
                q.insert(at, k);
                q
            }))
            .collect();
    }
    let mut seen = HashSet::new();
    for lt in naturally_labelled(n) {
        for perm in &perms {
            let mut img = vec![vec![false; n]; n];
            for i in 0..n {
                for j in 0..n {
                    img[perm[i]][perm[j]] = lt[i][j];
                }
            }
            seen.insert(img);
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

/// A random poset on `n` points: a random upper-triangular relation,
/// closed, then relabelled.
pub fn random_poset(seed: u64, stream: u64, n: usize, density: f64) -> Poset {
    let mut rng = stream_rng(seed, stream);
    let mut lt = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            lt[i][j] = rng.gen_bool(density);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if lt[i][k] && lt[k][j] {
                    lt[i][j] = true;
                }
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut img = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            img[perm[i]][perm[j]] = lt[i][j];
        }
    }
    from_matrix(&img)
}

/// Whether `order` is a linear extension of the relation.
pub fn is_extension(poset: &Poset, order: &[usize]) -> bool {
    let n = poset.len();
    let mut pos = vec![usize::MAX; n];
    for (i, &x) in order.iter().enumerate() {
        if x >= n || pos[x] != usize::MAX {
            return false;
        }
        pos[x] = i;
    }
    order.len() == n && (0..n).all(|x| (0..n).all(|y| !poset.lt(x, y) || pos[x] < pos[y]))
}

/// Whether the orders are linear extensions whose intersection is the poset.
pub fn realizes(poset: &Poset, orders: &[Vec<usize>]) -> bool {
    let n = poset.len();
    if n > 0 && orders.is_empty() || !orders.iter().all(|o| is_extension(poset, o)) {
        return false;
    }
    let positions: Vec<Vec<usize>> = orders
        .iter()
        .map(|o| {
            let mut pos = vec![0; n];
            for (i, &x) in o.iter().enumerate() {
                pos[x] = i;
            }
            pos
        })
        .collect();
    (0..n).all(|x| {
        (0..n).all(|y| x == y || poset.lt(x, y) || positions.iter().any(|pos| pos[x] > pos[y]))
    })
}
