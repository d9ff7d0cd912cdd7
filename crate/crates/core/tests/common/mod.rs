//! Independent reference implementations. Nothing here calls the solver,
//! the canonical-code module or the enumerator.

#![allow(dead_code)]

use std::collections::BTreeSet;

use tdgame_core::Graph;

fn closed_neighborhoods(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbors(v).0).collect()
}

/// Total domination number by trying every vertex subset in order of size.
pub fn gamma_t_bruteforce(g: &Graph) -> usize {
    let n = g.order();
    let nbrs = closed_neighborhoods(g);
    let full = (1u64 << n) - 1;
    let mut best = n;
    for mask in 1..=full {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut covered = 0u64;
        let mut m = mask;
        while m != 0 {
            covered |= nbrs[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        if covered == full {
            best = size;
        }
    }
    best
}

/// Game length by plain recursion over every move sequence, no memo.
pub fn minimax(g: &Graph, dominated: u64, dominator_to_move: bool) -> usize {
    let nbrs = closed_neighborhoods(g);
    let full = (1u64 << g.order()) - 1;
    fn go(nbrs: &[u64], full: u64, dominated: u64, dom: bool) -> usize {
        if dominated == full {
            return 0;
        }
        let values = nbrs
            .iter()
            .filter(|&&nb| nb & !dominated != 0)
            .map(|&nb| 1 + go(nbrs, full, dominated | nb, !dom));
        if dom {
            values.min().expect("a legal move exists")
        } else {
            values.max().expect("a legal move exists")
        }
    }
    go(&nbrs, full, dominated, dominator_to_move)
}

pub fn pruefer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Minimum over all roots of the AHU string; a different normal form from
/// the library's center-rooted code.
pub fn any_root_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    fn code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v].iter().filter(|&&c| c != parent).map(|&c| code(adj, c, v)).collect();
        kids.sort();
        format!("[{}]", kids.concat())
    }
    (0..n).map(|r| code(&adj, r, usize::MAX)).min().unwrap()
}

/// Isomorphism classes of labeled trees on `n` vertices, via every Prüfer
/// sequence.
pub fn pruefer_classes(n: usize) -> BTreeSet<String> {
    if n == 1 {
        return BTreeSet::from(["[]".to_string()]);
    }
    let mut out = BTreeSet::new();
    let len = n - 2;
    let mut seq = vec![0usize; len];
    loop {
        out.insert(any_root_code(n, &pruefer_decode(&seq, n)));
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Rooted tree counts r(1..=max) by the classical recurrence.
pub fn rooted_tree_counts(max: usize) -> Vec<u128> {
    let mut r = vec![0u128; max + 1];
    if max >= 1 {
        r[1] = 1;
    }
    for n in 1..max {
        let mut total = 0u128;
        for k in 1..=n {
            let s: u128 = (1..=k).filter(|d| k % d == 0).map(|d| d as u128 * r[d]).sum();
            total += s * r[n - k + 1];
        }
        r[n + 1] = total / n as u128;
    }
    r
}

/// Free tree counts t(1..=max) from rooted counts (Otter's dissimilarity
/// formula).
pub fn free_tree_counts(max: usize) -> Vec<u128> {
    let r = rooted_tree_counts(max);
    let mut t = vec![0u128; max + 1];
    for n in 1..=max {
        let mut v = r[n] as i128;
        for i in 1..=n / 2 {
            v -= (r[i] * r[n - i]) as i128;
        }
        if n % 2 == 0 {
            let h = r[n / 2];
            v += (h * (h + 1) / 2) as i128;
        }
        t[n] = v as u128;
    }
    t
}

/// Isolate-free forest counts: multisets of trees of order at least 2.
pub fn forest_counts(max: usize) -> Vec<u128> {
    let t = free_tree_counts(max);
    let mut f = vec![0u128; max + 1];
    f[0] = 1;
    for k in 2..=max {
        for _ in 0..t[k] {
            for m in k..=max {
                f[m] += f[m - k];
            }
        }
    }
    f
}
