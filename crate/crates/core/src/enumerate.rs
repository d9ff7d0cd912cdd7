//! Free trees and isolate-free forests up to isomorphism.
//!
//! Trees come from the Wright–Richmond–Odlyzko–McKay successor on canonical
//! level sequences, which visits every free tree exactly once in constant
//! amortized time per tree. [`trees`] re-sorts a whole order by canonical
//! code so emission order does not depend on generator internals.

use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`trees`].
pub const MAX_TREE_ORDER: usize = 20;
/// Largest order accepted by [`forests`].
pub const MAX_FOREST_ORDER: usize = 16;

/// Raw WROM stream over the level sequences of all free trees of one order.
///
/// Order of emission is the generator's own (starting from the path); use
/// [`trees`] for the canonical-code order.
pub struct LevelSequences {
    order: usize,
    layout: Option<Vec<usize>>,
    started: bool,
}

impl LevelSequences {
    pub fn new(order: usize) -> LevelSequences {
        let layout = match order {
            0 => None,
            1 => Some(vec![0]),
            n => {
                // path rooted at its center
                let mut l: Vec<usize> = (0..=n / 2).collect();
                l.extend(1..n.div_ceil(2));
                Some(l)
            }
        };
        LevelSequences { order, layout, started: false }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.order == 1 {
            return if std::mem::replace(&mut self.started, true) { None } else { self.layout.clone() };
        }
        if self.started {
            let cur = self.layout.take()?;
            self.layout = next_rooted_tree(&cur, None);
        }
        self.started = true;
        let cur = self.layout.take()?;
        self.layout = next_free_tree(cur);
        self.layout.clone()
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] + 1 != pred[p] {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into the first subtree of the root and the rest.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut ones = layout.iter().enumerate().filter(|&(_, &d)| d == 1).map(|(i, _)| i);
    ones.next();
    let m = ones.next().unwrap_or(layout.len());
    let left = layout[1..m].iter().map(|&d| d - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

fn next_free_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let tie_lost = rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest));
    if rest_height >= left_height && !tie_lost {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (i, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
            *slot = i + 1;
        }
    }
    Some(next)
}

/// Builds the tree whose vertex `i` sits at depth `levels[i]` below the
/// most recent shallower vertex.
pub fn level_sequence_to_graph(levels: &[usize]) -> Result<Graph> {
    let mut g = Graph::empty(levels.len())?;
    let mut stack: Vec<usize> = Vec::new();
    for (i, &d) in levels.iter().enumerate() {
        while let Some(&top) = stack.last() {
            if levels[top] >= d {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&parent) = stack.last() {
            g.add_edge(parent, i)?;
        } else if i != 0 {
            return Err(Error::Malformed { line: 0, reason: "level sequence has two roots".into() });
        }
        stack.push(i);
    }
    Ok(g)
}

/// All free trees of one order, each paired with its canonical code, in
/// increasing code order.
pub struct TreeIterator {
    order: usize,
    inner: std::vec::IntoIter<(CanonicalCode, Graph)>,
}

impl TreeIterator {
    pub fn order(&self) -> usize {
        self.order
    }
}

impl Iterator for TreeIterator {
    type Item = (CanonicalCode, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        self.inner.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for TreeIterator {}

/// Free trees on `n` vertices, one per isomorphism class, sorted by
/// canonical code.
pub fn trees(n: usize) -> Result<TreeIterator> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::OutOfBounds(format!("tree order {n} outside 1..={MAX_TREE_ORDER}")));
    }
    let mut all = LevelSequences::new(n)
        .map(|levels| {
            let g = level_sequence_to_graph(&levels)?;
            Ok((canonical_form(&g)?, g))
        })
        .collect::<Result<Vec<_>>>()?;
    all.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(TreeIterator { order: n, inner: all.into_iter() })
}

pub fn count_trees(n: usize) -> Result<usize> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::OutOfBounds(format!("tree order {n} outside 1..={MAX_TREE_ORDER}")));
    }
    Ok(LevelSequences::new(n).count())
}

/// Isolate-free forests on exactly `n` vertices, one per isomorphism class.
///
/// Components are listed by non-increasing order and, within one order, by
/// non-increasing position in that order's tree list, so each multiset of
/// trees appears once. Emission order is deterministic.
pub fn forests(n: usize) -> Result<Vec<Graph>> {
    if !(2..=MAX_FOREST_ORDER).contains(&n) {
        return Err(Error::OutOfBounds(format!("forest order {n} outside 2..={MAX_FOREST_ORDER}")));
    }
    let catalog: Vec<Vec<Graph>> = (0..=n)
        .map(|k| if k < 2 { Ok(Vec::new()) } else { Ok(trees(k)?.map(|(_, g)| g).collect()) })
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut parts = Vec::new();
    extend_forests(n, n, usize::MAX, &catalog, &mut parts, &mut out)?;
    Ok(out)
}

/// `parts` holds `(order, index)` pairs in non-increasing lexicographic order.
fn extend_forests(
    remaining: usize,
    max_order: usize,
    max_index: usize,
    catalog: &[Vec<Graph>],
    parts: &mut Vec<(usize, usize)>,
    out: &mut Vec<Graph>,
) -> Result<()> {
    if remaining == 0 {
        let mut iter = parts.iter();
        let &(k0, i0) = iter.next().expect("forest has a component");
        let mut g = catalog[k0][i0].clone();
        for &(k, i) in iter {
            g = g.disjoint_union(&catalog[k][i])?;
        }
        out.push(g);
        return Ok(());
    }
    for k in (2..=max_order.min(remaining)).rev() {
        let cap = if k == max_order { max_index } else { usize::MAX };
        let count = catalog[k].len();
        for i in (0..count.min(cap.saturating_add(1))).rev() {
            parts.push((k, i));
            extend_forests(remaining - k, k, i, catalog, parts, out)?;
            parts.pop();
        }
    }
    Ok(())
}
