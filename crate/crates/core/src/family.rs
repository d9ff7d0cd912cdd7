//! Structural recognition of the tree families with equal total domination
//! and game total domination number.
//!
//! Attachments at a vertex `x` (the first added vertex is the *link*):
//!
//! * Type-1, Type-2, Type-3: a pendant path on 2, 3 or 4 vertices.
//! * Type-A: a Type-1 whose link receives one or more Type-2 chains.
//! * Type-B: a Type-A where a nonempty set of the vertices at distance 3
//!   from `x` each receive one Type-3 chain.
//!
//! `F1` is every tree grown from a single center by Type-1, Type-2, Type-A
//! and Type-B attachments with at least one Type-1. `F` adds `K2` and the
//! 10-vertex tree `F10`; `F*` adds all stars and closes members of order at
//! least 3 under extra pendant edges at support vertices.

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{named, Graph, RootedTree, Vertex, VertexSet};

/// Shape of one branch hanging at the center of an `F1` tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum AttachmentKind {
    Type1,
    Type2,
    /// A bare pendant path on four vertices. Never valid at the center; it
    /// only occurs inside Type-B attachments.
    Type3,
    TypeA {
        type2_chains: usize,
    },
    /// `type3_chains` of the `type2_chains` distance-3 vertices carry one
    /// Type-3 chain each. A second chain at the same vertex breaks the
    /// equality (order 16: total domination 9, game value 10).
    TypeB {
        type2_chains: usize,
        type3_chains: usize,
    },
}

impl AttachmentKind {
    /// Vertices the attachment adds.
    pub fn order(&self) -> usize {
        match self {
            AttachmentKind::Type1 => 2,
            AttachmentKind::Type2 => 3,
            AttachmentKind::Type3 => 4,
            AttachmentKind::TypeA { type2_chains } => 2 + 3 * type2_chains,
            AttachmentKind::TypeB { type2_chains, type3_chains } => {
                2 + 3 * type2_chains + 4 * type3_chains
            }
        }
    }

    /// One Type-2 per Type-A/Type-B and one Type-3 per Type-B.
    pub fn is_base(&self) -> bool {
        match self {
            AttachmentKind::TypeA { type2_chains } => *type2_chains == 1,
            AttachmentKind::TypeB { type2_chains, type3_chains } => *type2_chains == 1 && *type3_chains == 1,
            _ => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub link: Vertex,
    pub kind: AttachmentKind,
}

/// Certificate that a tree belongs to `F1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDecomposition {
    pub center: Vertex,
    pub branches: Vec<Branch>,
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
    pub k4: usize,
}

impl FamilyDecomposition {
    fn from_branches(center: Vertex, branches: Vec<Branch>) -> FamilyDecomposition {
        let count = |f: fn(&AttachmentKind) -> bool| branches.iter().filter(|b| f(&b.kind)).count();
        FamilyDecomposition {
            center,
            k1: count(|k| matches!(k, AttachmentKind::Type1)),
            k2: count(|k| matches!(k, AttachmentKind::Type2)),
            k3: count(|k| matches!(k, AttachmentKind::TypeA { .. })),
            k4: count(|k| matches!(k, AttachmentKind::TypeB { .. })),
            branches,
        }
    }

    pub fn counts(&self) -> [usize; 4] {
        [self.k1, self.k2, self.k3, self.k4]
    }

    pub fn is_base_shape(&self) -> bool {
        self.branches.iter().all(|b| b.kind.is_base())
    }

    /// `k1 + 2 k2 + 3 k3 + 5 k4 + 1`, the total domination number of the
    /// base shapes.
    pub fn base_gamma_t(&self) -> usize {
        base_gamma_t(self.k1, self.k2, self.k3, self.k4)
    }

    /// Rebuilds a tree from the attachment kinds alone. The center is vertex 0.
    pub fn rebuild(&self) -> Result<Graph> {
        let kinds: Vec<AttachmentKind> = self.branches.iter().map(|b| b.kind.clone()).collect();
        build_f1(&kinds)
    }
}

pub fn base_gamma_t(k1: usize, k2: usize, k3: usize, k4: usize) -> usize {
    k1 + 2 * k2 + 3 * k3 + 5 * k4 + 1
}

/// Pendant paths from a pivot that realize an `(l1, .., lr)`-structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureWitness {
    pub pivot: Vertex,
    /// Each path starts at the pivot; `paths[i]` has `lengths[i] + 1` vertices.
    pub paths: Vec<Vec<Vertex>>,
}

/// Which member of `F` a tree is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "decomposition")]
pub enum FamilyMember {
    K2,
    F10,
    F1(FamilyDecomposition),
}

/// Why a tree belongs to `F*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "via")]
pub enum FStarCertificate {
    Star,
    /// After removing extra leaves at strong supports the tree is `base`.
    Reduced { removed_leaves: usize, base: FamilyMember },
}

/// The pendant path leaving `pivot` through `first`, if every vertex after the
/// pivot has degree 2 except a final leaf.
fn pendant_path(tree: &Graph, pivot: Vertex, first: Vertex) -> Option<Vec<Vertex>> {
    let mut path = vec![pivot, first];
    let (mut prev, mut cur) = (pivot, first);
    loop {
        match tree.degree(cur) {
            1 => return Some(path),
            2 => {
                let next = tree.neighbors(cur).without(prev).first()?;
                if next == pivot {
                    return None;
                }
                path.push(next);
                prev = cur;
                cur = next;
            }
            _ => return None,
        }
    }
}

/// Finds vertex-disjoint pendant paths of the requested lengths (in edges)
/// leaving `pivot`.
pub fn find_structure(tree: &Graph, lengths: &[usize], pivot: Vertex) -> Result<Option<StructureWitness>> {
    tree.require_tree()?;
    if pivot >= tree.order() {
        return Err(Error::VertexOutOfRange { vertex: pivot, n: tree.order() });
    }
    let mut available: Vec<Vec<Vertex>> =
        tree.neighbors(pivot).iter().filter_map(|c| pendant_path(tree, pivot, c)).collect();
    let mut paths = Vec::with_capacity(lengths.len());
    for &len in lengths {
        match available.iter().position(|p| p.len() == len + 1) {
            Some(i) => paths.push(available.remove(i)),
            None => return Ok(None),
        }
    }
    Ok(Some(StructureWitness { pivot, paths }))
}

/// A structure with the given lengths at any pivot.
pub fn has_structure(tree: &Graph, lengths: &[usize]) -> Result<Option<StructureWitness>> {
    for pivot in 0..tree.order() {
        if let Some(w) = find_structure(tree, lengths, pivot)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Length of the downward pendant path starting at `v` (vertex count), when
/// the subtree of `v` is a bare path.
fn chain_len(rooted: &RootedTree, v: Vertex) -> Option<usize> {
    let mut len = 1;
    let mut cur = v;
    loop {
        let kids = rooted.children(cur);
        match kids.len() {
            0 => return Some(len),
            1 => {
                cur = kids.first().expect("one child");
                len += 1;
            }
            _ => return None,
        }
    }
}

/// Classifies the branch rooted at `link` (a child of the root).
fn classify_branch(rooted: &RootedTree, link: Vertex) -> Option<AttachmentKind> {
    if let Some(len) = chain_len(rooted, link) {
        return match len {
            2 => Some(AttachmentKind::Type1),
            3 => Some(AttachmentKind::Type2),
            4 => Some(AttachmentKind::Type3),
            _ => None,
        };
    }
    let tree = rooted.tree();
    let kids = rooted.children(link);
    let leaves: Vec<Vertex> = kids.iter().filter(|&c| tree.degree(c) == 1).collect();
    if leaves.len() != 1 {
        return None;
    }
    let mut type2_chains = 0;
    let mut type3_chains = 0;
    for p in kids.without(leaves[0]) {
        // p - q - r with r a leaf; q may also carry Type-3 chains
        let p_kids = rooted.children(p);
        if p_kids.len() != 1 {
            return None;
        }
        let q = p_kids.first().expect("one child");
        let q_kids = rooted.children(q);
        let mut q_leaves = 0;
        let mut q_type3 = 0;
        for c in q_kids {
            match chain_len(rooted, c) {
                Some(1) => q_leaves += 1,
                Some(4) => q_type3 += 1,
                _ => return None,
            }
        }
        if q_leaves != 1 || q_type3 > 1 {
            return None;
        }
        type2_chains += 1;
        type3_chains += q_type3;
    }
    if type2_chains == 0 {
        return None;
    }
    if type3_chains == 0 {
        Some(AttachmentKind::TypeA { type2_chains })
    } else {
        Some(AttachmentKind::TypeB { type2_chains, type3_chains })
    }
}

/// Tries `center` as the vertex the tree was grown from.
pub fn decompose_at(tree: &Graph, center: Vertex) -> Result<Option<FamilyDecomposition>> {
    let rooted = RootedTree::new(tree.clone(), center)?;
    let mut branches = Vec::new();
    for link in rooted.children(center) {
        match classify_branch(&rooted, link) {
            Some(AttachmentKind::Type3) | None => return Ok(None),
            Some(kind) => branches.push(Branch { link, kind }),
        }
    }
    let d = FamilyDecomposition::from_branches(center, branches);
    Ok((d.k1 >= 1).then_some(d))
}

/// An `F1` decomposition using the smallest workable center, if any.
pub fn recognize_f1(tree: &Graph) -> Result<Option<FamilyDecomposition>> {
    tree.require_tree()?;
    for center in 0..tree.order() {
        if let Some(d) = decompose_at(tree, center)? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

pub fn is_f10(tree: &Graph) -> Result<bool> {
    tree.require_tree()?;
    if tree.order() != 10 {
        return Ok(false);
    }
    Ok(canonical_form(tree)? == canonical_form(&named::f10())?)
}

/// Deletes all but the smallest-id leaf at every vertex with two or more leaf
/// neighbors. Remaining vertices are renumbered in increasing order.
pub fn reduce_strong_supports(tree: &Graph) -> Result<Graph> {
    Ok(reduce_with_count(tree)?.0)
}

/// The reduced tree plus, for each of its vertices, the original id.
pub fn strong_support_reduction(tree: &Graph) -> Result<(Graph, Vec<Vertex>)> {
    tree.require_tree()?;
    let (g, kept, _) = reduce_inner(tree);
    Ok((g, kept))
}

fn reduce_with_count(tree: &Graph) -> Result<(Graph, usize)> {
    tree.require_tree()?;
    let (g, _, removed) = reduce_inner(tree);
    Ok((g, removed))
}

fn reduce_inner(tree: &Graph) -> (Graph, Vec<Vertex>, usize) {
    let leaves = tree.leaves();
    let mut drop = VertexSet::EMPTY;
    for v in 0..tree.order() {
        let leaf_nbrs = tree.neighbors(v).intersection(leaves);
        if leaf_nbrs.len() >= 2 {
            let keep = leaf_nbrs.first().expect("nonempty");
            drop = drop.union(leaf_nbrs.without(keep));
        }
    }
    let (g, kept) = tree.induced(tree.vertices().difference(drop));
    (g, kept, drop.len())
}

pub fn recognize_f(tree: &Graph) -> Result<Option<FamilyMember>> {
    tree.require_tree()?;
    if tree.order() == 2 {
        return Ok(Some(FamilyMember::K2));
    }
    if is_f10(tree)? {
        return Ok(Some(FamilyMember::F10));
    }
    Ok(recognize_f1(tree)?.map(FamilyMember::F1))
}

/// A star: a tree with at most one vertex of degree 2 or more.
pub fn is_star(tree: &Graph) -> bool {
    tree.is_tree() && (0..tree.order()).filter(|&v| tree.degree(v) >= 2).count() <= 1
}

pub fn recognize_fstar(tree: &Graph) -> Result<Option<FStarCertificate>> {
    tree.require_tree()?;
    if tree.order() < 2 {
        return Err(Error::OutOfBounds("F* membership needs a nontrivial tree".into()));
    }
    if is_star(tree) {
        return Ok(Some(FStarCertificate::Star));
    }
    let (base, removed_leaves) = reduce_with_count(tree)?;
    if base.order() < 3 {
        return Ok(None);
    }
    Ok(recognize_f(&base)?.map(|base| FStarCertificate::Reduced { removed_leaves, base }))
}

pub fn in_fstar(tree: &Graph) -> Result<bool> {
    Ok(recognize_fstar(tree)?.is_some())
}

/// Builds an `F1` tree from its branch kinds. The center is vertex 0.
pub fn build_f1(kinds: &[AttachmentKind]) -> Result<Graph> {
    let n = 1 + kinds.iter().map(AttachmentKind::order).sum::<usize>();
    let mut g = Graph::empty(n)?;
    let mut next = 1;
    let mut path = |g: &mut Graph, from: Vertex, len: usize| -> Result<Vertex> {
        let mut prev = from;
        let start = next;
        for _ in 0..len {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
        Ok(start)
    };
    for kind in kinds {
        match kind {
            AttachmentKind::Type1 => {
                path(&mut g, 0, 2)?;
            }
            AttachmentKind::Type2 => {
                path(&mut g, 0, 3)?;
            }
            AttachmentKind::Type3 => {
                path(&mut g, 0, 4)?;
            }
            AttachmentKind::TypeA { type2_chains } | AttachmentKind::TypeB { type2_chains, .. } => {
                let link = path(&mut g, 0, 2)?;
                let mut far = Vec::new();
                for _ in 0..*type2_chains {
                    let p = path(&mut g, link, 3)?;
                    far.push(p + 1);
                }
                if let AttachmentKind::TypeB { type3_chains, .. } = kind {
                    if *type3_chains == 0 || *type3_chains > far.len() {
                        return Err(Error::OutOfBounds(
                            "Type-B needs between one and type2_chains Type-3 chains".into(),
                        ));
                    }
                    for &q in &far[..*type3_chains] {
                        path(&mut g, q, 4)?;
                    }
                }
            }
        }
    }
    Ok(g)
}

/// The base-shape tree with `k1` Type-1, `k2` Type-2, `k3` Type-A and `k4`
/// Type-B attachments.
pub fn base_tree(k1: usize, k2: usize, k3: usize, k4: usize) -> Result<Graph> {
    let mut kinds = vec![AttachmentKind::Type1; k1];
    kinds.extend(std::iter::repeat_n(AttachmentKind::Type2, k2));
    kinds.extend(std::iter::repeat_n(AttachmentKind::TypeA { type2_chains: 1 }, k3));
    kinds.extend(std::iter::repeat_n(AttachmentKind::TypeB { type2_chains: 1, type3_chains: 1 }, k4));
    build_f1(&kinds)
}

/// Order of [`base_tree`].
pub fn base_order(k1: usize, k2: usize, k3: usize, k4: usize) -> usize {
    1 + 2 * k1 + 3 * k2 + 5 * k3 + 9 * k4
}

/// All `(k1, k2, k3, k4)` with `k1 >= 1` whose base tree has at most
/// `max_order` vertices.
pub fn base_shapes(max_order: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for k1 in 1..=max_order / 2 {
        for k2 in 0..=max_order / 3 {
            for k3 in 0..=max_order / 5 {
                for k4 in 0..=max_order / 9 {
                    if base_order(k1, k2, k3, k4) <= max_order {
                        out.push([k1, k2, k3, k4]);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::graph::named::*;

    fn iso(a: &Graph, b: &Graph) -> bool {
        canonical_form(a).unwrap() == canonical_form(b).unwrap()
    }

    #[test]
    fn structures() {
        let w = find_structure(&path(4), &[2, 1], 1).unwrap().unwrap();
        assert_eq!(w.paths, vec![vec![1, 2, 3], vec![1, 0]]);
        let w = find_structure(&f10(), &[4, 4], 4).unwrap().unwrap();
        assert_eq!(w.paths, vec![vec![4, 3, 2, 1, 0], vec![4, 5, 6, 7, 8]]);
        for pivot in 0..5 {
            assert!(find_structure(&path(5), &[2, 1], pivot).unwrap().is_none());
        }
        assert!(has_structure(&path(5), &[2, 1]).unwrap().is_none());
        assert!(has_structure(&star(3), &[1, 1]).unwrap().is_some());
        assert!(find_structure(&cycle(5), &[1], 0).is_err());
    }

    #[test]
    fn f1_examples() {
        let d = recognize_f1(&path(5)).unwrap().unwrap();
        assert_eq!(d.center, 2);
        assert_eq!(d.counts(), [2, 0, 0, 0]);
        assert!(recognize_f1(&path(4)).unwrap().is_none());
        assert!(recognize_f1(&f10()).unwrap().is_none());
        let d = recognize_f1(&path(3)).unwrap().unwrap();
        assert_eq!(d.counts(), [1, 0, 0, 0]);
    }

    #[test]
    fn type_b_branch_is_classified() {
        let t = base_tree(1, 0, 0, 1).unwrap();
        assert_eq!(t.order(), 12);
        let d = recognize_f1(&t).unwrap().unwrap();
        assert_eq!(d.counts(), [1, 0, 0, 1]);
        assert!(d.is_base_shape());
        assert_eq!(d.base_gamma_t(), 7);
        assert!(iso(&d.rebuild().unwrap(), &t));
    }

    #[test]
    fn extra_type2_chains_at_type_a_links() {
        let kinds = [AttachmentKind::Type1, AttachmentKind::TypeA { type2_chains: 3 }];
        let t = build_f1(&kinds).unwrap();
        let d = recognize_f1(&t).unwrap().unwrap();
        assert_eq!(d.counts(), [1, 0, 1, 0]);
        assert!(!d.is_base_shape());
        assert!(iso(&d.rebuild().unwrap(), &t));
    }

    #[test]
    fn f10_recognition() {
        assert!(is_f10(&f10()).unwrap());
        let perm = [9, 3, 0, 1, 8, 2, 7, 6, 5, 4];
        assert!(is_f10(&f10().relabel(&perm)).unwrap());
        assert!(!is_f10(&path(10)).unwrap());
        // K_{1,3} with two edges subdivided twice has order 8
        let short = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)]).unwrap();
        assert!(!is_f10(&short).unwrap());
        assert_eq!(recognize_f(&f10()).unwrap(), Some(FamilyMember::F10));
        assert_eq!(recognize_f(&path(2)).unwrap(), Some(FamilyMember::K2));
        assert_eq!(recognize_f(&path(4)).unwrap(), None);
    }

    #[test]
    fn reduction() {
        assert!(iso(&reduce_strong_supports(&star(4)).unwrap(), &path(2)));
        let t = f10().with_pendant(1).unwrap();
        assert!(iso(&reduce_strong_supports(&t).unwrap(), &f10()));
        assert_eq!(reduce_strong_supports(&path(6)).unwrap(), path(6));
    }

    #[test]
    fn fstar_examples() {
        assert_eq!(recognize_fstar(&path(3)).unwrap(), Some(FStarCertificate::Star));
        assert!(!in_fstar(&path(4)).unwrap());
        assert!(in_fstar(&f10().with_pendant(1).unwrap()).unwrap());
        assert!(in_fstar(&f10().with_pendant(7).unwrap()).unwrap());
        assert!(!in_fstar(&double_star(1, 1)).unwrap());
        assert!(!in_fstar(&double_star(2, 3)).unwrap());
        assert!(in_fstar(&star(5)).unwrap());
        assert!(recognize_fstar(&path(1)).is_err());
    }

    #[test]
    fn base_shape_orders() {
        for [k1, k2, k3, k4] in base_shapes(16) {
            let t = base_tree(k1, k2, k3, k4).unwrap();
            assert_eq!(t.order(), base_order(k1, k2, k3, k4));
            assert!(t.is_tree());
            assert!(t.order() <= 16);
        }
        assert!(base_shapes(16).contains(&[1, 1, 0, 0]));
        assert_eq!(base_order(1, 1, 0, 0), 6);
    }
}
