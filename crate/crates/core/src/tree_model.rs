//! Trees, rooted trees, AHU canonical codes and rooted isomorphism,
//! caterpillar decomposition, sparse leaf sets and generators.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TreeError {
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("trees are not isomorphic")]
    NotIsomorphic,
    #[error("not a caterpillar: {0}")]
    NotACaterpillar(String),
    #[error("invalid leaf set: {0}")]
    InvalidLeafSet(String),
    #[error("leaf set is not sparse: {0}")]
    SparseViolation(String),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, TreeError>;

/// An unrooted tree on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
}

impl Tree {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(TreeError::NotATree(
                "a tree needs at least one vertex".into(),
            ));
        }
        if edges.len() != n - 1 {
            return Err(TreeError::NotATree(format!(
                "{} edges for {} vertices",
                edges.len(),
                n
            )));
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(TreeError::NotATree(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(TreeError::NotATree(format!("self loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(TreeError::NotATree(format!("duplicate edge ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let t = Tree { adj };
        if t.bfs_order(0).len() != n {
            return Err(TreeError::NotATree("graph is disconnected".into()));
        }
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (0..self.len())
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&&v| u < v)
                    .map(move |&v| (u, v))
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut order = vec![root];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
            i += 1;
        }
        order
    }

    fn distances(&self, from: usize) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.len()];
        d[from] = 0;
        let mut q = VecDeque::from([from]);
        while let Some(u) = q.pop_front() {
            for &v in &self.adj[u] {
                if d[v] == usize::MAX {
                    d[v] = d[u] + 1;
                    q.push_back(v);
                }
            }
        }
        d
    }

    /// A center vertex (minimum eccentricity, smallest id on ties).
    pub fn center(&self) -> usize {
        (0..self.len())
            .min_by_key(|&v| (self.distances(v).into_iter().max().unwrap_or(0), v))
            .unwrap_or(0)
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Tree {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Tree::from_edges(self.len(), &edges).expect("relabeling preserves tree structure")
    }
}

/// A tree with a root and ordered children lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    /// Root `tree` at `root`; children keep adjacency-list order.
    pub fn new(tree: Tree, root: usize) -> Result<RootedTree> {
        if root >= tree.len() {
            return Err(TreeError::NotATree(format!("root {root} out of range")));
        }
        let n = tree.len();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        for u in tree.bfs_order(root) {
            for &v in tree.neighbors(u) {
                if Some(v) != parent[u] {
                    parent[v] = Some(u);
                    children[u].push(v);
                }
            }
        }
        Ok(RootedTree {
            tree,
            root,
            parent,
            children,
        })
    }

    /// Root `tree` at `root` with an explicit child order per vertex.
    pub fn with_children(tree: Tree, root: usize, children: Vec<Vec<usize>>) -> Result<RootedTree> {
        let base = RootedTree::new(tree, root)?;
        if children.len() != base.len() {
            return Err(TreeError::NotATree(
                "children lists do not cover every vertex".into(),
            ));
        }
        for (v, ch) in children.iter().enumerate() {
            let a: BTreeSet<usize> = ch.iter().copied().collect();
            let b: BTreeSet<usize> = base.children[v].iter().copied().collect();
            if a != b || a.len() != ch.len() {
                return Err(TreeError::NotATree(format!(
                    "children of {v} inconsistent with the tree"
                )));
            }
        }
        Ok(RootedTree { children, ..base })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.tree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tree.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn all_children(&self) -> &[Vec<usize>] {
        &self.children
    }

    /// No children. The root of a single-vertex tree counts as a leaf.
    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.is_leaf(v)).collect()
    }

    /// Height of the subtree rooted at `v`.
    pub fn height_of(&self, v: usize) -> usize {
        self.children[v]
            .iter()
            .map(|&c| 1 + self.height_of(c))
            .max()
            .unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.height_of(self.root)
    }

    /// Vertices of the subtree at `v` in preorder.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend(self.children[u].iter().rev());
        }
        out
    }

    pub fn siblings(&self, v: usize) -> Vec<usize> {
        match self.parent[v] {
            Some(p) => self.children[p]
                .iter()
                .copied()
                .filter(|&s| s != v)
                .collect(),
            None => Vec::new(),
        }
    }

    /// Vertices sharing a grandparent with `v` but not its parent.
    pub fn cousins(&self, v: usize) -> Vec<usize> {
        let Some(p) = self.parent[v] else {
            return Vec::new();
        };
        let Some(g) = self.parent[p] else {
            return Vec::new();
        };
        self.children[g]
            .iter()
            .filter(|&&pp| pp != p)
            .flat_map(|&pp| self.children[pp].iter().copied())
            .collect()
    }
}

/// Integer AHU codes for every vertex of `rt`, interned in `table` so codes
/// are comparable across trees sharing the table.
fn ahu_codes(rt: &RootedTree, table: &mut BTreeMap<Vec<u32>, u32>) -> Vec<u32> {
    let order = rt.tree.bfs_order(rt.root);
    let mut code = vec![0u32; rt.len()];
    for &v in order.iter().rev() {
        let mut key: Vec<u32> = rt.children[v].iter().map(|&c| code[c]).collect();
        key.sort_unstable();
        let next = table.len() as u32;
        code[v] = *table.entry(key).or_insert(next);
    }
    code
}

/// Canonical code of every rooted subtree; equal codes mean isomorphic
/// rooted subtrees.
pub fn canonical_codes(rt: &RootedTree) -> Vec<u32> {
    ahu_codes(rt, &mut BTreeMap::new())
}

/// Rooted isomorphism `rt0 → rt1`, `mapping[v0] = v1`.
pub fn rooted_isomorphism(rt0: &RootedTree, rt1: &RootedTree) -> Result<Vec<usize>> {
    if rt0.len() != rt1.len() {
        return Err(TreeError::NotIsomorphic);
    }
    let mut table = BTreeMap::new();
    let c0 = ahu_codes(rt0, &mut table);
    let c1 = ahu_codes(rt1, &mut table);
    if c0[rt0.root] != c1[rt1.root] {
        return Err(TreeError::NotIsomorphic);
    }
    let mut mapping = vec![usize::MAX; rt0.len()];
    let mut stack = vec![(rt0.root, rt1.root)];
    while let Some((u0, u1)) = stack.pop() {
        mapping[u0] = u1;
        let mut pool: Vec<usize> = rt1.children[u1].clone();
        for &ch0 in &rt0.children[u0] {
            let pos = pool
                .iter()
                .position(|&ch1| c1[ch1] == c0[ch0])
                .ok_or(TreeError::NotIsomorphic)?;
            stack.push((ch0, pool.remove(pos)));
        }
    }
    Ok(mapping)
}

/// Root `t1` at the image of `r0` under some isomorphism `t0 → t1`.
pub fn isomorphism_map(t0: &Tree, t1: &Tree, r0: usize) -> Result<(usize, Vec<usize>)> {
    if t0.len() != t1.len() || r0 >= t0.len() {
        return Err(TreeError::NotIsomorphic);
    }
    let mut d0: Vec<usize> = (0..t0.len()).map(|v| t0.degree(v)).collect();
    let mut d1: Vec<usize> = (0..t1.len()).map(|v| t1.degree(v)).collect();
    d0.sort_unstable();
    d1.sort_unstable();
    if d0 != d1 {
        return Err(TreeError::NotIsomorphic);
    }
    let rt0 = RootedTree::new(t0.clone(), r0)?;
    let ecc = |t: &Tree, v: usize| t.distances(v).into_iter().max().unwrap_or(0);
    let e0 = ecc(t0, r0);
    for r1 in 0..t1.len() {
        if t1.degree(r1) != t0.degree(r0) || ecc(t1, r1) != e0 {
            continue;
        }
        let rt1 = RootedTree::new(t1.clone(), r1)?;
        if let Ok(m) = rooted_isomorphism(&rt0, &rt1) {
            return Ok((r1, m));
        }
    }
    Err(TreeError::NotIsomorphic)
}

/// Spine path plus the leaves hanging off each spine vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarDecomposition {
    pub tree: Tree,
    pub spine: Vec<usize>,
    pub leaves: Vec<Vec<usize>>,
    pub is_path: bool,
}

impl CaterpillarDecomposition {
    pub fn leaf_count(&self, j: usize) -> usize {
        self.leaves[j].len()
    }
}

pub fn caterpillar_decompose(t: &Tree) -> Result<CaterpillarDecomposition> {
    let n = t.len();
    let is_path = (0..n).all(|v| t.degree(v) <= 2);
    if n <= 2 {
        return Ok(CaterpillarDecomposition {
            tree: t.clone(),
            spine: (0..n).collect(),
            leaves: vec![Vec::new(); n],
            is_path: true,
        });
    }
    let inner: Vec<bool> = (0..n).map(|v| t.degree(v) >= 2).collect();
    let inner_deg = |v: usize| t.neighbors(v).iter().filter(|&&u| inner[u]).count();
    let mut start = None;
    for v in (0..n).filter(|&v| inner[v]) {
        match inner_deg(v) {
            0 | 1 => {
                if start.is_none() {
                    start = Some(v);
                }
            }
            2 => {}
            d => {
                return Err(TreeError::NotACaterpillar(format!(
                    "vertex {v} keeps {d} neighbours after leaf removal"
                )))
            }
        }
    }
    // Removing the leaves of a tree leaves a tree, so max inner degree <= 2
    // already forces a path; walk it from an endpoint.
    let start =
        start.ok_or_else(|| TreeError::NotACaterpillar("leaf removal leaves a cycle".into()))?;
    let mut spine = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = t.neighbors(cur).iter().find(|&&u| inner[u] && u != prev) {
        spine.push(next);
        prev = cur;
        cur = next;
    }
    let leaves = spine
        .iter()
        .map(|&s| {
            t.neighbors(s)
                .iter()
                .copied()
                .filter(|&u| !inner[u])
                .collect()
        })
        .collect();
    Ok(CaterpillarDecomposition {
        tree: t.clone(),
        spine,
        leaves,
        is_path,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIssue {
    pub vertex: Option<usize>,
    pub clause: &'static str,
}

/// Check sparseness of `leaf_set` in `rt`. Returns the verdict and every
/// failing (vertex, clause) pair.
pub fn is_sparse(rt: &RootedTree, leaf_set: &[usize]) -> Result<(bool, Vec<SparseIssue>)> {
    for &v in leaf_set {
        if v >= rt.len() || !rt.is_leaf(v) || rt.parent(v).is_none() {
            return Err(TreeError::InvalidLeafSet(format!("{v} is not a leaf")));
        }
    }
    if leaf_set.is_empty() {
        return Ok((
            false,
            vec![SparseIssue {
                vertex: None,
                clause: "empty",
            }],
        ));
    }
    let set: BTreeSet<usize> = leaf_set.iter().copied().collect();
    let mut issues = Vec::new();
    for &v in &set {
        let sibs = rt.siblings(v);
        if sibs.is_empty() {
            issues.push(SparseIssue {
                vertex: Some(v),
                clause: "(i) no sibling",
            });
        }
        if sibs.iter().any(|&s| !rt.is_leaf(s) || set.contains(&s)) {
            issues.push(SparseIssue {
                vertex: Some(v),
                clause: "(ii) sibling is not a leaf outside the set",
            });
        }
        let ok_cousin = rt
            .cousins(v)
            .into_iter()
            .any(|w| !set.contains(&w) && rt.siblings(w).iter().all(|s| !set.contains(s)));
        if !ok_cousin {
            issues.push(SparseIssue {
                vertex: Some(v),
                clause: "(iii) no cousin family outside the set",
            });
        }
    }
    Ok((issues.is_empty(), issues))
}

/// Subtree type used by the pruning construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SubtreeType {
    /// A leaf outside the set.
    A,
    /// Height 1 with exactly one leaf in the set.
    B,
    /// Height 1 with no leaf in the set.
    C,
    /// Height at least 2.
    D,
}

pub fn subtree_type(rt: &RootedTree, v: usize, set: &BTreeSet<usize>) -> Result<SubtreeType> {
    match rt.height_of(v) {
        0 if set.contains(&v) => Err(TreeError::SparseViolation(format!(
            "leaf {v} of the set sits beside non-leaves"
        ))),
        0 => Ok(SubtreeType::A),
        1 => match rt.children(v).iter().filter(|c| set.contains(c)).count() {
            0 => Ok(SubtreeType::C),
            1 => Ok(SubtreeType::B),
            k => Err(TreeError::SparseViolation(format!(
                "{k} leaves of the set below {v}"
            ))),
        },
        _ => Ok(SubtreeType::D),
    }
}

/// Order children A, B, C, D (stable) at every vertex of height >= 2 and put
/// the set leaf last below each type-B vertex.
pub fn reorder_children_for_pruning(rt: &RootedTree, leaf_set: &[usize]) -> Result<RootedTree> {
    let set: BTreeSet<usize> = leaf_set.iter().copied().collect();
    let mut children = rt.children.clone();
    for (v, kids) in children.iter_mut().enumerate() {
        let h = rt.height_of(v);
        if h >= 2 {
            let mut typed = Vec::with_capacity(kids.len());
            for &c in kids.iter() {
                typed.push((subtree_type(rt, c, &set)?, c));
            }
            typed.sort_by_key(|&(t, _)| t);
            *kids = typed.into_iter().map(|(_, c)| c).collect();
        } else if h == 1 {
            let in_set = kids.iter().filter(|c| set.contains(c)).count();
            if in_set > 1 {
                return Err(TreeError::SparseViolation(format!(
                    "{in_set} leaves of the set below {v}"
                )));
            }
            kids.sort_by_key(|c| set.contains(c));
        }
    }
    Ok(RootedTree {
        children,
        ..rt.clone()
    })
}

/// The family behind the linear-pruning bound: a root with `m` subtrees,
/// each `r_j -> {u_j -> v_j, u'_j -> {w_j, w'_j}}`, with every `w'_j` in the
/// returned leaf set.
pub fn gen_corollary_family(m: usize) -> Result<(RootedTree, Vec<usize>)> {
    if m == 0 {
        return Err(TreeError::InvalidSpec("m must be positive".into()));
    }
    let n = 6 * m + 1;
    let mut edges = Vec::with_capacity(n - 1);
    let mut children = vec![Vec::new(); n];
    let mut set = Vec::with_capacity(m);
    for j in 0..m {
        let base = 1 + 6 * j;
        let (r, u, u2, v, w, w2) = (base, base + 1, base + 2, base + 3, base + 4, base + 5);
        edges.extend([(0, r), (r, u), (r, u2), (u, v), (u2, w), (u2, w2)]);
        children[0].push(r);
        children[r] = vec![u, u2];
        children[u] = vec![v];
        children[u2] = vec![w, w2];
        set.push(w2);
    }
    let tree = Tree::from_edges(n, &edges)?;
    Ok((RootedTree::with_children(tree, 0, children)?, set))
}

/// Random recursive tree: vertex `i > 0` attaches to a uniform earlier vertex.
pub fn gen_random_tree(n: usize, seed: u64) -> Result<Tree> {
    if n == 0 {
        return Err(TreeError::InvalidSpec("n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Tree::from_edges(n, &edges)
}

/// Caterpillar with a spine of `spine_len` vertices, `leaf_counts[j]` leaves
/// on spine vertex `j`; the seed shuffles vertex labels.
pub fn gen_random_caterpillar(spine_len: usize, leaf_counts: &[usize], seed: u64) -> Result<Tree> {
    if spine_len == 0 || leaf_counts.len() != spine_len {
        return Err(TreeError::InvalidSpec(format!(
            "spine length {spine_len} with {} leaf counts",
            leaf_counts.len()
        )));
    }
    let n = spine_len + leaf_counts.iter().sum::<usize>();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut edges = Vec::with_capacity(n - 1);
    for j in 1..spine_len {
        edges.push((perm[j - 1], perm[j]));
    }
    let mut next = spine_len;
    for (j, &c) in leaf_counts.iter().enumerate() {
        for _ in 0..c {
            edges.push((perm[j], perm[next]));
            next += 1;
        }
    }
    Tree::from_edges(n, &edges)
}

/// Caterpillar on `n` vertices: a spine of uniform length in `1..=ceil(n/2)`
/// with every other vertex a leaf on a uniform spine vertex.
pub fn gen_caterpillar_of_size(n: usize, seed: u64) -> Result<Tree> {
    if n == 0 {
        return Err(TreeError::InvalidSpec("n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spine = rng.gen_range(1..=n.div_ceil(2));
    let mut counts = vec![0; spine];
    for _ in spine..n {
        counts[rng.gen_range(0..spine)] += 1;
    }
    gen_random_caterpillar(spine, &counts, rng.gen())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Tree {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_edges(n, &e).unwrap()
    }

    fn star(leaves: usize) -> Tree {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Tree::from_edges(leaves + 1, &e).unwrap()
    }

    #[test]
    fn sized_caterpillars() {
        for n in 1..30 {
            for seed in 0..5 {
                let t = gen_caterpillar_of_size(n, seed).unwrap();
                assert_eq!(t.len(), n);
                assert!(caterpillar_decompose(&t).is_ok());
            }
        }
        assert_eq!(
            gen_caterpillar_of_size(12, 3).unwrap(),
            gen_caterpillar_of_size(12, 3).unwrap()
        );
    }

    #[test]
    fn rejects_non_trees() {
        assert!(Tree::from_edges(0, &[]).is_err());
        assert!(Tree::from_edges(3, &[(0, 1), (0, 1)]).is_err());
        assert!(Tree::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(Tree::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let (r1, m) = isomorphism_map(&path(3), &path(3), 1).unwrap();
        assert_eq!(r1, 1);
        assert_eq!(m[1], 1);
        assert_eq!(
            isomorphism_map(&star(3), &path(4), 0),
            Err(TreeError::NotIsomorphic)
        );
    }

    #[test]
    fn random_relabel_isomorphism_preserves_edges() {
        let t = gen_random_tree(20, 7).unwrap();
        let mut perm: Vec<usize> = (0..20).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(99));
        let t1 = t.relabeled(&perm);
        let (_, m) = isomorphism_map(&t, &t1, 3).unwrap();
        let mapped: BTreeSet<(usize, usize)> = t
            .edges()
            .into_iter()
            .map(|(u, v)| (m[u].min(m[v]), m[u].max(m[v])))
            .collect();
        let expected: BTreeSet<(usize, usize)> = t1.edges().into_iter().collect();
        assert_eq!(mapped, expected);
    }

    #[test]
    fn caterpillar_examples() {
        let d = caterpillar_decompose(&path(5)).unwrap();
        assert_eq!(d.spine, vec![1, 2, 3]);
        assert!(d.is_path);
        let d = caterpillar_decompose(&star(4)).unwrap();
        assert_eq!(d.spine, vec![0]);
        assert_eq!(d.leaves[0].len(), 4);
        assert!(!d.is_path);
        // spider with three legs of length two
        let spider =
            Tree::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(matches!(
            caterpillar_decompose(&spider),
            Err(TreeError::NotACaterpillar(_))
        ));
        let k2 = caterpillar_decompose(&path(2)).unwrap();
        assert_eq!(k2.spine, vec![0, 1]);
        assert!(k2.is_path);
        assert!(caterpillar_decompose(&path(1)).unwrap().is_path);
    }

    #[test]
    fn generated_caterpillar_round_trip() {
        let t = gen_random_caterpillar(3, &[2, 0, 1], 5).unwrap();
        assert_eq!(t.len(), 6);
        let d = caterpillar_decompose(&t).unwrap();
        assert_eq!(d.spine.len(), 3);
        let mut counts: Vec<usize> = d.leaves.iter().map(Vec::len).collect();
        if counts[0] == 1 {
            counts.reverse();
        }
        assert_eq!(counts, vec![2, 0, 1]);
        assert!(gen_random_caterpillar(0, &[], 1).is_err());
        assert!(gen_random_caterpillar(2, &[1], 1).is_err());
    }

    #[test]
    fn random_tree_determinism() {
        assert_eq!(gen_random_tree(1, 3).unwrap().len(), 1);
        assert_eq!(
            gen_random_tree(30, 11).unwrap(),
            gen_random_tree(30, 11).unwrap()
        );
        assert!(gen_random_tree(0, 1).is_err());
    }

    #[test]
    fn sparse_examples() {
        let (rt, l) = gen_corollary_family(1).unwrap();
        assert_eq!(rt.len(), 7);
        assert!(is_sparse(&rt, &l).unwrap().0);
        let st = RootedTree::new(star(3), 0).unwrap();
        let (ok, issues) = is_sparse(&st, &[2]).unwrap();
        assert!(!ok);
        assert!(issues.iter().any(|i| i.clause.starts_with("(iii)")));
        assert!(!is_sparse(&rt, &[]).unwrap().0);
        assert!(matches!(
            is_sparse(&rt, &[0]),
            Err(TreeError::InvalidLeafSet(_))
        ));
        for m in 1..=10 {
            let (rt, l) = gen_corollary_family(m).unwrap();
            assert_eq!(rt.len(), 6 * m + 1);
            assert!(is_sparse(&rt, &l).unwrap().0);
        }
    }

    #[test]
    fn reorder_corollary_subtree() {
        let (rt, l) = gen_corollary_family(2).unwrap();
        let re = reorder_children_for_pruning(&rt, &l).unwrap();
        // r_j: [u'_j (type B), u_j (type C)]; below u'_j the set leaf goes last
        assert_eq!(re.children(1), &[3, 2]);
        assert_eq!(re.children(3), &[5, 6]);
        assert_eq!(re.children(0), rt.children(0));
        let codes0 = canonical_codes(&rt);
        let codes1 = canonical_codes(&re);
        assert_eq!(codes0, codes1);
    }

    #[test]
    fn reorder_rejects_double_set_leaves() {
        // 0 -> {1 -> {3, 4}, 2 -> {5}}, with both 3 and 4 in the set
        let t = Tree::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        let rt = RootedTree::new(t, 0).unwrap();
        assert!(matches!(
            reorder_children_for_pruning(&rt, &[3, 4]),
            Err(TreeError::SparseViolation(_))
        ));
    }

    #[test]
    fn reorder_keeps_all_c_children() {
        let t = Tree::from_edges(5, &[(0, 1), (0, 2), (1, 3), (2, 4)]).unwrap();
        let rt = RootedTree::new(t, 0).unwrap();
        let re = reorder_children_for_pruning(&rt, &[]).unwrap();
        assert_eq!(re.children(0), rt.children(0));
    }

    #[test]
    fn rooted_iso_respects_roots() {
        let a = RootedTree::new(path(3), 0).unwrap();
        let b = RootedTree::new(path(3), 1).unwrap();
        assert!(rooted_isomorphism(&a, &b).is_err());
        let c = RootedTree::new(path(3), 2).unwrap();
        assert_eq!(rooted_isomorphism(&a, &c).unwrap(), vec![2, 1, 0]);
    }
}
