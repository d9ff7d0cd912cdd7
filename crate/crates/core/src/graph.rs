//! Graphs on at most 63 vertices and partially totally dominated states.
//!
//! Vertex sets are single-word bitmasks, so a [`DominationState`] is a graph
//! reference plus one `u64`. Every game operation in the crate works on these
//! masks directly.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported vertex count. The dominated set must fit one word.
pub const MAX_VERTICES: usize = 63;

/// Vertex identifier, always in `0..n`.
pub type Vertex = usize;

/// A set of vertices stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Vertex>", from = "Vec<Vertex>")]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet((1u64 << n) - 1)
    }

    pub fn singleton(v: Vertex) -> VertexSet {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: Vertex) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: Vertex) -> VertexSet {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: Vertex) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Vertex)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = VertexSetIter;
    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = Vertex;

    #[inline]
    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as Vertex;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexSetIter {}

/// An undirected simple graph on vertices `0..n`.
///
/// Construction guarantees symmetry, no loops and no parallel edges. Isolated
/// vertices are allowed by [`Graph::from_edges`] so that intermediate trees
/// (for instance during enumeration) can be represented; the game entry points
/// check [`Graph::min_degree`] themselves.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { adjacency: vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph on `n` vertices, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adjacency[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn size(&self) -> usize {
        self.adjacency.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.order())
            .flat_map(|u| self.adjacency[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn leaves(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to at least one leaf.
    pub fn support_vertices(&self) -> VertexSet {
        let leaves = self.leaves();
        (0..self.order()).filter(|&v| !self.neighbors(v).intersection(leaves).is_empty()).collect()
    }

    /// Fails with [`Error::IsolatedVertex`] unless every vertex has degree at least one.
    pub fn require_no_isolated(&self) -> Result<()> {
        match (0..self.order()).find(|&v| self.degree(v) == 0) {
            Some(v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    /// BFS distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, source: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.order() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for u in frontier {
                    next = next.union(self.neighbors(u));
                }
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.components().len() == 1
    }

    pub fn require_tree(&self) -> Result<()> {
        if self.is_tree() {
            Ok(())
        } else {
            Err(Error::NotATree)
        }
    }

    /// Image of the graph under the vertex map `v -> perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut adjacency = vec![VertexSet::EMPTY; self.order()];
        for (u, &pu) in perm.iter().enumerate() {
            adjacency[pu] = self.adjacency[u].iter().map(|v| perm[v]).collect();
        }
        Graph { adjacency }
    }

    /// Induced subgraph on `keep`, with vertices renumbered in increasing order.
    /// Returns the graph and the old id of each new vertex.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = keep.to_vec();
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let adjacency = old
            .iter()
            .map(|&v| self.adjacency[v].intersection(keep).iter().map(|w| new_id[w]).collect())
            .collect();
        (Graph { adjacency }, old)
    }

    /// Copy with one extra vertex `n` joined to `at`.
    pub fn with_pendant(&self, at: Vertex) -> Result<Graph> {
        let n = self.order();
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(n + 1));
        }
        let mut g = self.clone();
        g.adjacency.push(VertexSet::EMPTY);
        g.add_edge(at, n)?;
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.order();
        if shift + other.order() > MAX_VERTICES {
            return Err(Error::TooManyVertices(shift + other.order()));
        }
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(other.adjacency.iter().map(|s| VertexSet(s.0 << shift)));
        Ok(Graph { adjacency })
    }

    /// Edge-list text, one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// Parses the edge-list format: whitespace separated id pairs, one edge per
/// line, `#` comment lines, blank lines ignored. The vertex count is one more
/// than the largest id and every id must be used by some edge.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_id = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Malformed {
                line: line_no,
                reason: format!("expected two vertex ids, found {} tokens", tokens.len()),
            });
        }
        let mut ids = [0usize; 2];
        for (slot, tok) in ids.iter_mut().zip(&tokens) {
            let id: usize = tok.parse().map_err(|_| Error::Malformed {
                line: line_no,
                reason: format!("`{tok}` is not a vertex id"),
            })?;
            if id >= MAX_VERTICES {
                return Err(Error::Malformed {
                    line: line_no,
                    reason: format!("vertex id {id} exceeds the limit of {}", MAX_VERTICES - 1),
                });
            }
            *slot = id;
        }
        if ids[0] == ids[1] {
            return Err(Error::Malformed { line: line_no, reason: format!("self-loop at {}", ids[0]) });
        }
        max_id = max_id.max(Some(ids[0].max(ids[1])));
        edges.push((line_no, ids[0], ids[1]));
    }
    let n = match max_id {
        Some(m) => m + 1,
        None => return Err(Error::Malformed { line: 0, reason: "no edges".into() }),
    };
    let mut g = Graph::empty(n)?;
    for (line, u, v) in edges {
        g.add_edge(u, v).map_err(|e| match e {
            Error::DuplicateEdge(a, b) => Error::Malformed { line, reason: format!("duplicate edge {a} {b}") },
            other => other,
        })?;
    }
    g.require_no_isolated()?;
    Ok(g)
}

/// A graph together with the set of vertices already totally dominated.
///
/// Values are cheap to copy; every operation returns a new state.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DominationState<'g> {
    graph: &'g Graph,
    dominated: VertexSet,
}

impl<'g> DominationState<'g> {
    /// Fresh game: nothing dominated.
    pub fn new(graph: &'g Graph) -> Self {
        DominationState { graph, dominated: VertexSet::EMPTY }
    }

    pub fn with_dominated(graph: &'g Graph, dominated: VertexSet) -> Result<Self> {
        if let Some(v) = dominated.difference(graph.vertices()).first() {
            return Err(Error::VertexOutOfRange { vertex: v, n: graph.order() });
        }
        Ok(DominationState { graph, dominated })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn dominated(&self) -> VertexSet {
        self.dominated
    }

    pub fn undominated(&self) -> VertexSet {
        self.graph.vertices().difference(self.dominated)
    }

    pub fn is_terminal(&self) -> bool {
        self.dominated == self.graph.vertices()
    }

    /// Vertices whose neighborhood still contains an undominated vertex.
    pub fn legal_moves(&self) -> VertexSet {
        legal_moves_mask(self.graph, self.dominated)
    }

    pub fn is_legal(&self, v: Vertex) -> bool {
        v < self.graph.order() && !self.graph.neighbors(v).is_subset(self.dominated)
    }

    /// Plays `v`, totally dominating `N(v)`.
    pub fn apply_move(&self, v: Vertex) -> Result<Self> {
        if !self.is_legal(v) {
            return Err(Error::IllegalMove(v));
        }
        Ok(DominationState { graph: self.graph, dominated: self.dominated.union(self.graph.neighbors(v)) })
    }

    /// Declares `x` not yet totally dominated.
    pub fn undominate(&self, x: Vertex) -> Result<Self> {
        if x >= self.graph.order() || !self.dominated.contains(x) {
            return Err(Error::NotDominated(x));
        }
        Ok(DominationState { graph: self.graph, dominated: self.dominated.without(x) })
    }
}

impl fmt::Debug for DominationState<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}|{:?}", self.graph, self.dominated)
    }
}

#[inline]
pub(crate) fn legal_moves_mask(graph: &Graph, dominated: VertexSet) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for v in 0..graph.order() {
        if !graph.neighbors(v).is_subset(dominated) {
            out.insert(v);
        }
    }
    out
}

/// True iff every vertex has a neighbor in `s`.
pub fn is_td_set(graph: &Graph, s: VertexSet) -> bool {
    (0..graph.order()).all(|v| !graph.neighbors(v).intersection(s).is_empty())
}

/// A tree with a distinguished root and parent links.
#[derive(Clone, Debug)]
pub struct RootedTree {
    tree: Graph,
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    depth: Vec<usize>,
    /// Vertices in BFS order from the root.
    order: Vec<Vertex>,
}

impl RootedTree {
    pub fn new(tree: Graph, root: Vertex) -> Result<RootedTree> {
        tree.require_tree()?;
        if root >= tree.order() {
            return Err(Error::VertexOutOfRange { vertex: root, n: tree.order() });
        }
        let n = tree.order();
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        let mut seen = VertexSet::singleton(root);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in tree.neighbors(u).difference(seen) {
                seen.insert(w);
                parent[w] = Some(u);
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            }
        }
        Ok(RootedTree { tree, root, parent, depth, order })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v]
    }

    pub fn children(&self, v: Vertex) -> VertexSet {
        match self.parent[v] {
            Some(p) => self.tree.neighbors(v).without(p),
            None => self.tree.neighbors(v),
        }
    }

    /// Vertices in breadth-first order from the root.
    pub fn bfs_order(&self) -> &[Vertex] {
        &self.order
    }

    /// Proper ancestors of `v`, nearest first.
    pub fn ancestors(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut cur = self.parent[v];
        while let Some(p) = cur {
            out.push(p);
            cur = self.parent[p];
        }
        out
    }

    /// Proper descendants of `v`.
    pub fn descendants(&self, v: Vertex) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        let mut stack: Vec<Vertex> = self.children(v).to_vec();
        while let Some(u) = stack.pop() {
            out.insert(u);
            stack.extend(self.children(u));
        }
        out
    }
}

/// Common small graphs used throughout tests and examples.
pub mod named {
    use super::{Graph, Vertex};

    fn build(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::from_edges(n, edges).expect("named graph is valid")
    }

    /// Path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        build(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        build(n, &edges)
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        build(leaves + 1, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        build(n, &edges)
    }

    /// The 10-vertex tree built from `K_{1,3}` by subdividing two of its
    /// edges three times: the path `0 - 1 - .. - 8` with the pendant edge
    /// `4 - 9`. Vertices 1 and 7 are the supports of the two long legs.
    pub fn f10() -> Graph {
        let mut edges: Vec<_> = (1..9).map(|i| (i - 1, i)).collect();
        edges.push((4, 9));
        build(10, &edges)
    }

    /// Two adjacent centers carrying `left` and `right` leaves.
    pub fn double_star(left: usize, right: usize) -> Graph {
        let mut edges = vec![(0, 1)];
        for i in 0..left {
            edges.push((0, 2 + i));
        }
        for i in 0..right {
            edges.push((1, 2 + left + i));
        }
        build(2 + left + right, &edges)
    }
}
