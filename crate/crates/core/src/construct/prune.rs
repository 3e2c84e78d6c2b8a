use std::collections::BTreeSet;

use crate::proximity::DrawingPair;
use crate::tree_model::{is_sparse, reorder_children_for_pruning, RootedTree, TreeError};

use super::tree::build_pieces;
use super::{ConstructError, Result};

/// An MW-β drawing, for every β in `[1, ∞]`, of `T` on side 0 and
/// `T \ L` on side 1, where `L` is a sparse set of leaves.
///
/// Children are ordered by type (plain leaves, height-1 subtrees holding a
/// leaf of `L`, other height-1 subtrees, deeper subtrees) and the pair is
/// drawn like an isomorphic one, except that the leaves of `L` never count
/// as side-1 points: no witness comes from them and no edge reaches them.
pub fn draw_pruned_tree_pair(rt: &RootedTree, leaf_set: &[usize]) -> Result<DrawingPair> {
    let height = rt.height();
    if height < 2 {
        return Err(ConstructError::HeightTooSmall(height));
    }
    let (sparse, issues) = is_sparse(rt, leaf_set)?;
    if !sparse {
        let why: Vec<String> = issues
            .iter()
            .map(|i| match i.vertex {
                Some(v) => format!("{v}: {}", i.clause),
                None => i.clause.to_string(),
            })
            .collect();
        return Err(TreeError::SparseViolation(why.join("; ")).into());
    }
    let ordered = reorder_children_for_pruning(rt, leaf_set)?;
    let ghosts: BTreeSet<usize> = leaf_set.iter().copied().collect();
    let ids: Vec<usize> = (0..rt.len()).collect();
    let (piece, trace) = build_pieces(&ordered, &ids, &ghosts)?;
    let mut d = piece.to_drawing(|v| v)?;
    d.annotations.trace = Some(trace);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Beta;
    use crate::proximity::{check_parallelogram_drawing, verify_universal};
    use crate::tree_model::{gen_corollary_family, Tree};

    fn check(rt: &RootedTree, set: &[usize]) -> DrawingPair {
        let d = draw_pruned_tree_pair(rt, set).unwrap();
        for r in verify_universal(&d, &Beta::default_sample()) {
            assert!(r.is_valid(), "beta {:?}: {:?}", r.beta, r.violations);
        }
        assert!(check_parallelogram_drawing(&d).unwrap().all());
        let kept: Vec<(usize, usize)> = rt
            .tree()
            .edges()
            .into_iter()
            .filter(|(u, v)| !set.contains(u) && !set.contains(v))
            .collect();
        assert_eq!(d.sides[0].id_edges(), rt.tree().edges());
        assert_eq!(d.sides[1].id_edges(), kept);
        d
    }

    #[test]
    fn corollary_sizes() {
        for m in 1..=10 {
            let (rt, set) = gen_corollary_family(m).unwrap();
            let d = check(&rt, &set);
            assert_eq!(d.sides[0].len(), 6 * m + 1);
            assert_eq!(d.sides[1].len(), 5 * m + 1);
        }
    }

    #[test]
    fn deeper_tree() {
        // root -> two copies of the family subtree, one level lower
        let (inner, _) = gen_corollary_family(2).unwrap();
        let n = inner.len();
        let mut edges = vec![(0, 1), (0, 1 + n)];
        for (u, v) in inner.tree().edges() {
            edges.push((1 + u, 1 + v));
            edges.push((1 + n + u, 1 + n + v));
        }
        let t = Tree::from_edges(1 + 2 * n, &edges).unwrap();
        let rt = RootedTree::new(t, 0).unwrap();
        // w' leaves of the first copy only
        let set: Vec<usize> = (0..2).map(|j| 1 + 6 * j + 6).collect();
        assert!(is_sparse(&rt, &set).unwrap().0);
        check(&rt, &set);
    }

    #[test]
    fn star_is_too_shallow() {
        let t = Tree::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let rt = RootedTree::new(t, 0).unwrap();
        assert_eq!(
            draw_pruned_tree_pair(&rt, &[1]),
            Err(ConstructError::HeightTooSmall(1))
        );
    }

    #[test]
    fn non_sparse_set_is_rejected() {
        let (rt, set) = gen_corollary_family(1).unwrap();
        // w and w' together break clause (ii)
        let both = [set[0] - 1, set[0]];
        assert!(matches!(
            draw_pruned_tree_pair(&rt, &both),
            Err(ConstructError::Tree(TreeError::SparseViolation(_)))
        ));
    }

    #[test]
    fn random_sparse_sets() {
        use crate::tree_model::gen_random_tree;
        let mut drawn = 0;
        for seed in 0..400 {
            let t = gen_random_tree(6 + seed as usize % 35, seed).unwrap();
            let rt = RootedTree::new(t.clone(), t.center()).unwrap();
            if rt.height() < 2 || rt.height() > 4 {
                continue;
            }
            // grow a sparse set greedily, leaves in label order
            let mut set = Vec::new();
            for v in rt.leaves() {
                set.push(v);
                if !is_sparse(&rt, &set).unwrap().0 {
                    set.pop();
                }
            }
            if set.is_empty() {
                continue;
            }
            drawn += 1;
            check(&rt, &set);
        }
        assert!(drawn > 20, "{drawn}");
    }
}
