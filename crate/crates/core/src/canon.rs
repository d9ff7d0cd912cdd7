//! Isomorphism-invariant codes for trees and forests.
//!
//! A tree is rooted at its center (both centers when there are two, keeping
//! the smaller result) and encoded bottom-up: a vertex is `(` followed by the
//! sorted codes of its children and `)`. Two trees get equal codes iff they
//! are isomorphic, and byte order on codes is a total order on classes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, RootedTree, Vertex, VertexSet};

/// Nested-parenthesis encoding of an unrooted tree or a forest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("codes are ASCII")
    }

    /// Number of vertices described by the code.
    pub fn order(&self) -> usize {
        self.0.iter().filter(|&&b| b == b'(').count()
    }

    /// Rebuilds a graph from a code. Vertices are numbered in preorder; forest
    /// codes are concatenated tree codes.
    pub fn to_graph(&self) -> Result<Graph> {
        let n = self.order();
        let mut g = Graph::empty(n)?;
        let mut stack: Vec<Vertex> = Vec::new();
        let mut next = 0;
        for (i, &b) in self.0.iter().enumerate() {
            match b {
                b'(' => {
                    if let Some(&p) = stack.last() {
                        g.add_edge(p, next)?;
                    }
                    stack.push(next);
                    next += 1;
                }
                b')' => {
                    stack.pop().ok_or(Error::Malformed { line: 0, reason: format!("unbalanced `)` at {i}") })?;
                }
                _ => return Err(Error::Malformed { line: 0, reason: format!("unexpected byte at {i}") }),
            }
        }
        if !stack.is_empty() {
            return Err(Error::Malformed { line: 0, reason: "unbalanced `(`".into() });
        }
        Ok(g)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.as_str())
    }
}

impl From<CanonicalCode> for String {
    fn from(c: CanonicalCode) -> String {
        String::from_utf8(c.0).expect("codes are ASCII")
    }
}

impl TryFrom<String> for CanonicalCode {
    type Error = Error;

    fn try_from(s: String) -> Result<CanonicalCode> {
        let code = CanonicalCode(s.into_bytes());
        code.to_graph()?;
        Ok(code)
    }
}

/// The one or two central vertices of a tree.
pub fn centers(tree: &Graph) -> Result<Vec<Vertex>> {
    tree.require_tree()?;
    let n = tree.order();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut remaining = n;
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut removed = VertexSet::EMPTY;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            removed.insert(leaf);
            for w in tree.neighbors(leaf).difference(removed) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    let mut out = tree.vertices().difference(removed).to_vec();
    out.sort_unstable();
    Ok(out)
}

/// Code of the subtree hanging at `root` when the tree is rooted there.
pub fn rooted_code(tree: &Graph, root: Vertex) -> Result<Vec<u8>> {
    let rooted = RootedTree::new(tree.clone(), root)?;
    Ok(rooted_code_of(&rooted, root))
}

/// Code of the subtree below `v` in a rooted tree.
pub fn rooted_code_of(rooted: &RootedTree, v: Vertex) -> Vec<u8> {
    let n = rooted.tree().order();
    let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
    let subtree = rooted.descendants(v).with(v);
    for &u in rooted.bfs_order().iter().rev() {
        if !subtree.contains(u) {
            continue;
        }
        let mut kids: Vec<Vec<u8>> = rooted.children(u).iter().map(|c| std::mem::take(&mut codes[c])).collect();
        kids.sort_unstable();
        let mut code = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        code.push(b'(');
        for k in kids {
            code.extend(k);
        }
        code.push(b')');
        codes[u] = code;
    }
    std::mem::take(&mut codes[v])
}

/// Canonical code of a tree.
pub fn canonical_form(tree: &Graph) -> Result<CanonicalCode> {
    let cs = centers(tree)?;
    let best = cs
        .iter()
        .map(|&c| rooted_code(tree, c))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .expect("a tree has a center");
    Ok(CanonicalCode(best))
}

/// Canonical code of a forest: sorted component codes, concatenated.
pub fn forest_code(forest: &Graph) -> Result<CanonicalCode> {
    if !forest.is_forest() {
        return Err(Error::NotATree);
    }
    let mut parts = Vec::new();
    for comp in forest.components() {
        let (sub, _) = forest.induced(comp);
        parts.push(canonical_form(&sub)?.0);
    }
    parts.sort_unstable();
    Ok(CanonicalCode(parts.concat()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn relabeled_paths_agree() {
        let a = path(4);
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&star(3)).unwrap());
    }

    #[test]
    fn star_code_is_label_free() {
        let s = star(5);
        let perm = [3, 0, 5, 1, 4, 2];
        assert_eq!(canonical_form(&s).unwrap(), canonical_form(&s.relabel(&perm)).unwrap());
        assert_eq!(canonical_form(&s).unwrap().as_str(), "(()()()()())");
    }

    #[test]
    fn centers_of_paths() {
        assert_eq!(centers(&path(5)).unwrap(), vec![2]);
        assert_eq!(centers(&path(4)).unwrap(), vec![1, 2]);
        assert_eq!(centers(&path(1)).unwrap(), vec![0]);
        assert_eq!(centers(&path(2)).unwrap(), vec![0, 1]);
        assert!(centers(&cycle(5)).is_err());
    }

    #[test]
    fn code_round_trip() {
        let code = canonical_form(&f10()).unwrap();
        let back = code.to_graph().unwrap();
        assert_eq!(canonical_form(&back).unwrap(), code);
        let s: String = code.clone().into();
        assert_eq!(CanonicalCode::try_from(s).unwrap(), code);
        assert!(CanonicalCode::try_from("(()".to_string()).is_err());
    }

    #[test]
    fn forest_codes_ignore_component_order() {
        let a = path(2).disjoint_union(&path(3)).unwrap();
        let b = path(3).disjoint_union(&path(2)).unwrap();
        assert_eq!(forest_code(&a).unwrap(), forest_code(&b).unwrap());
        assert_eq!(forest_code(&a).unwrap().to_graph().unwrap().order(), 5);
    }
}
