use crate::geometry::{Line, Point};
use crate::proximity::{DrawingPair, Side};
use crate::tree_model::CaterpillarDecomposition;

use super::perturb::{compute_safe_perturbation, Block};
use super::star::{draw_contained_star_pair, redraw_pruned_stars};
use super::{ConstructionTrace, Result};

/// Vertices of a path in order, starting from an end.
fn path_order(cat: &CaterpillarDecomposition) -> Vec<usize> {
    let t = &cat.tree;
    let start = (0..t.len()).find(|&v| t.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = t.neighbors(cur).iter().find(|&&u| u != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

fn draw_paths(cat: &CaterpillarDecomposition) -> Result<DrawingPair> {
    let order = path_order(cat);
    let mk = |y: f64| {
        let points = (0..order.len()).map(|l| Point::new(l as f64, y)).collect();
        let edges = (1..order.len()).map(|l| (l - 1, l)).collect();
        Side {
            ids: order.clone(),
            points,
            edges,
        }
    };
    let mut d = DrawingPair::new(mk(0.0), mk(-0.5))?;
    d.annotations.separating_line = Some(Line::horizontal(-0.25));
    Ok(d)
}

/// Per-side accumulator of points, labels and edges.
#[derive(Default)]
struct Builder {
    ids: Vec<usize>,
    points: Vec<Point>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn push(&mut self, id: usize, p: Point) -> usize {
        self.ids.push(id);
        self.points.push(p);
        self.points.len() - 1
    }

    fn into_side(self) -> Side {
        Side {
            ids: self.ids,
            points: self.points,
            edges: self.edges,
        }
    }
}

/// Placement before the spine perturbation.
struct Layout {
    drawing: DrawingPair,
    /// Point index of `r_{i,j}`.
    roots: Vec<[usize; 2]>,
    /// First point index of the block of spine vertex `j`.
    first_index: Vec<[usize; 2]>,
    north: f64,
    south: f64,
    h: usize,
}

fn layout(cat: &CaterpillarDecomposition) -> Result<Layout> {
    let counts: Vec<usize> = cat.leaves.iter().map(Vec::len).collect();
    let max_leaves = counts.iter().copied().max().unwrap_or(0);
    let h = counts.iter().position(|&c| c == max_leaves).unwrap_or(0);
    let base = draw_contained_star_pair(max_leaves - 1)?;
    let wp = base.wp;
    let (a0, a1, p0, p1) = (wp.a[0], wp.a[1], wp.p[0], wp.p[1]);
    let (north, south) = (a0.y, a1.y);
    // leafless spine pairs are joined perpendicular to a_1 p_0
    let mut n = (p0 - a1).perp();
    if n.y > 0.0 {
        n = -n;
    }
    let delta = n * ((south - north) / n.y);

    let k = cat.spine.len();
    let mut sides = [Builder::default(), Builder::default()];
    let mut roots = vec![[0usize; 2]; k];
    let mut first_index = vec![[0usize; 2]; k];
    let mut r0: Vec<Point> = Vec::with_capacity(k);
    let mut r1: Vec<Point> = Vec::with_capacity(k);
    for j in 0..k {
        // position of r_{0,j}
        let pos = if j == 0 {
            a0
        } else if counts[j - 1] > 0 {
            p0 + (r0[j - 1] - a0)
        } else if counts[j] > 0 {
            // r_{1,j-1} lands on the port p_{1,j}
            a0 + (r1[j - 1] - p1)
        } else {
            let (u, w) = (r0[j - 1], r1[j - 1]);
            let dir = (w - u).perp();
            w + dir * ((north - w.y) / dir.y)
        };
        let pos = Point::new(pos.x, north);
        let spine_id = cat.spine[j];
        first_index[j] = [sides[0].points.len(), sides[1].points.len()];
        if counts[j] > 0 {
            let keep: Vec<usize> = (0..counts[j]).collect();
            let star = if j == h {
                base.clone()
            } else {
                redraw_pruned_stars(&base, &keep, &keep)?
            };
            let star = star.translated(pos - a0);
            for i in 0..2 {
                let s = &star.drawing.sides[i];
                let root = sides[i].push(spine_id, s.points[0]);
                roots[j][i] = root;
                for (l, &pt) in s.points[1..].iter().enumerate() {
                    let leaf = sides[i].push(cat.leaves[j][l], pt);
                    sides[i].edges.push((root, leaf));
                }
            }
            r0.push(star.drawing.sides[0].points[0]);
            r1.push(star.drawing.sides[1].points[0]);
        } else {
            roots[j] = [
                sides[0].push(spine_id, pos),
                sides[1].push(spine_id, pos + delta),
            ];
            r0.push(pos);
            r1.push(pos + delta);
        }
        if j > 0 {
            for i in 0..2 {
                sides[i].edges.push((roots[j - 1][i], roots[j][i]));
            }
        }
    }
    let [s0, s1] = sides;
    let drawing = DrawingPair::new(s0.into_side(), s1.into_side())?;
    Ok(Layout {
        drawing,
        roots,
        first_index,
        north,
        south,
        h,
    })
}

/// A linearly separable closed-Gabriel drawing of two copies of the
/// caterpillar: spine vertices on two horizontal lines, each leafed spine
/// vertex drawn as a translate of one winged-parallelogram star drawing.
pub fn draw_caterpillar_pair(cat: &CaterpillarDecomposition) -> Result<DrawingPair> {
    if cat.is_path {
        return draw_paths(cat);
    }
    let Layout {
        drawing: mut d,
        roots,
        first_index,
        north,
        south,
        h,
    } = layout(cat)?;
    let k = roots.len();

    // realize the spine edges right to left by nudging suffix blocks left
    let mut trace = ConstructionTrace::default();
    for j in (0..k.saturating_sub(1)).rev() {
        let block = Block {
            sides: [0, 1].map(|i| (first_index[j + 1][i]..d.sides[i].len()).collect()),
        };
        let targets = [
            (0, (roots[j][0], roots[j + 1][0])),
            (1, (roots[j][1], roots[j + 1][1])),
        ];
        let eps = compute_safe_perturbation(&d, &block, Point::new(-1.0, 0.0), &targets)?;
        trace.push("spine-perturbation", j, [("eps", eps)]);
        for i in 0..2 {
            for &b in &block.sides[i] {
                d.sides[i].points[b].x -= eps;
            }
        }
    }
    trace.push(
        "caterpillar",
        0,
        [("N", north), ("S", south), ("h", h as f64)],
    );
    d.annotations.separating_line = Some(Line::horizontal((north + south) / 2.0));
    d.annotations.trace = Some(trace);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{linearly_separable, Beta, TAU};
    use crate::proximity::{extract_mw_graphs, verify, Mode};
    use crate::tree_model::{caterpillar_decompose, gen_random_caterpillar, Tree};

    fn check(t: &Tree) -> DrawingPair {
        let cat = caterpillar_decompose(t).unwrap();
        let d = draw_caterpillar_pair(&cat).unwrap();
        let r = verify(&d, Beta::GABRIEL, Mode::Closed, TAU);
        assert!(r.is_valid(), "{:?}", r.violations);
        let (e0, e1) =
            extract_mw_graphs(&d.sides[0].points, &d.sides[1].points, Beta::GABRIEL, true).unwrap();
        assert_eq!(e0, d.sides[0].normalized_edges());
        assert_eq!(e1, d.sides[1].normalized_edges());
        assert_eq!(d.sides[0].id_edges(), t.edges());
        assert_eq!(d.sides[1].id_edges(), t.edges());
        let line = d.annotations.separating_line.unwrap();
        assert!(line
            .separation_margin(&d.sides[0].points, &d.sides[1].points)
            .is_some());
        assert!(linearly_separable(&d.sides[0].points, &d.sides[1].points).is_some());
        d
    }

    #[test]
    fn path_p4_is_strict() {
        let t = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = check(&t);
        assert!(verify(&d, Beta::GABRIEL, Mode::Strict, TAU).is_valid());
    }

    #[test]
    fn single_star() {
        let t = Tree::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let d = check(&t);
        assert_eq!(d.sides[0].points[0].y, 24.5);
    }

    #[test]
    fn small_profiles() {
        for (profile, seed) in [
            (vec![1, 0], 1),
            (vec![0, 1], 2),
            (vec![2, 0, 0, 1], 3),
            (vec![0, 0, 3, 0, 0], 4),
            (vec![1, 1, 1], 5),
            (vec![3, 0, 2, 0, 1, 4], 6),
        ] {
            let t = gen_random_caterpillar(profile.len(), &profile, seed).unwrap();
            check(&t);
        }
    }

    #[test]
    fn random_caterpillars() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for seed in 0..60 {
            let k = rng.gen_range(1..7);
            let profile: Vec<usize> = (0..k).map(|_| rng.gen_range(0..4)).collect();
            let t = gen_random_caterpillar(k, &profile, seed).unwrap();
            check(&t);
        }
    }
}
