use crate::geometry::{build_winged_parallelogram, Line, Point, WingedParallelogram};
use crate::proximity::{Annotations, Corners, DrawingPair, Side};

use super::{ConstructError, Result};

/// A star pair drawn on a winged parallelogram.
///
/// On each side point 0 is the root `r_i` (at `a_i`) and point `1 + j` is leaf
/// `v_{i,j}`; `v_{i,0}` sits at `b_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct WpDrawing {
    pub drawing: DrawingPair,
    pub wp: WingedParallelogram,
    /// Number of leaves per side minus one.
    pub k: usize,
}

impl WpDrawing {
    pub fn leaf_count(&self) -> usize {
        self.drawing.sides[0].len() - 1
    }

    pub fn translated(&self, by: Point) -> WpDrawing {
        WpDrawing {
            drawing: self.drawing.map_points(|p| p + by),
            wp: self.wp.translated(by),
            k: self.k,
        }
    }
}

fn star_side(root: Point, leaves: Vec<Point>) -> Side {
    let mut points = vec![root];
    points.extend(leaves);
    let edges = (1..points.len()).map(|j| (0, j)).collect();
    Side::new(points, edges)
}

/// Anchors inside `P` on the horizontal chords through `b_0` and `b_1`.
/// The common offset from `b_i` must exceed half the width of `P` (so that
/// `x(q1) < x(q0)`) and stay short of the opposite side; take the middle.
fn inner_anchors(a0: Point, b0: Point, b1: Point) -> (Point, Point) {
    let t = (b0.y - b1.y) / (a0.y - b1.y);
    let chord = b1.x + (a0.x - b1.x) * t - b0.x;
    let off = ((b1.x - b0.x) / 2.0 + chord) / 2.0;
    (Point::new(b0.x + off, b0.y), Point::new(b1.x - off, b1.y))
}

fn wp_drawing(side0: Side, side1: Side, wp: WingedParallelogram, k: usize) -> Result<WpDrawing> {
    let mut drawing = DrawingPair::new(side0, side1)?;
    drawing.annotations = Annotations {
        corners: Some(Corners {
            a0: wp.a[0],
            b0: wp.b[0],
            a1: wp.a[1],
            b1: wp.b[1],
        }),
        roots: Some([0, 0]),
        b_vertices: Some([Some(1), Some(1)]),
        anchors: Some(wp.q),
        separating_line: Some(Line::horizontal((wp.b[0].y + wp.b[1].y) / 2.0)),
        trace: None,
    };
    Ok(WpDrawing { drawing, wp, k })
}

/// Two stars with `k + 1` leaves each, drawn on a winged parallelogram.
pub fn draw_star_pair(k: usize) -> Result<WpDrawing> {
    if k == 0 {
        let (a0, b0, a1, b1) = (
            Point::new(0.0, 5.0),
            Point::new(0.0, 3.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 2.0),
        );
        let wp =
            build_winged_parallelogram(a0, b0, a1, b1, Point::new(1.1, 3.0), Point::new(0.9, 2.0))?;
        return wp_drawing(star_side(a0, vec![b0]), star_side(a1, vec![b1]), wp, 0);
    }
    let kf = k as f64;
    let leaves0: Vec<Point> = (0..=k)
        .map(|i| Point::new(2.0 * i as f64 - kf + 0.5, 0.5))
        .collect();
    let r0 = Point::new(leaves0[0].x, 2.0 * kf * kf + 0.5);
    let leaves1: Vec<Point> = leaves0.iter().map(|&p| -p).collect();
    let r1 = -r0;
    let (a0, b0, a1, b1) = (r0, leaves0[0], r1, leaves1[0]);
    let (q0, q1) = inner_anchors(a0, b0, b1);
    let wp = build_winged_parallelogram(a0, b0, a1, b1, q0, q1)?;
    wp_drawing(star_side(r0, leaves0), star_side(r1, leaves1), wp, k)
}

/// A star pair whose leaves all lie inside the parallelogram, on the
/// segments `b_i q_i`.
///
/// Leaves alternate between the two rows (`v_{0,0}` at `b_0` leftmost,
/// `v_{1,0}` at `b_1` rightmost, unit gaps, spacing 2 per row), so each pair
/// of consecutive leaves sees a leaf of the other row at a right angle. The
/// roots sit at height `2k^2 + 2k + 0.5`, high enough for the rightmost
/// row-0 leaf to stay left of the side `b_1 a_0`. Anchors are offset 0.1
/// beyond the extreme leaves. The drawing is point-symmetric in the origin.
pub fn draw_contained_star_pair(k: usize) -> Result<WpDrawing> {
    if k == 0 {
        return draw_star_pair(0);
    }
    let kf = k as f64;
    let leaves0: Vec<Point> = (0..=k)
        .map(|i| Point::new(2.0 * i as f64 - kf - 0.5, 0.5))
        .collect();
    let r0 = Point::new(leaves0[0].x, 2.0 * kf * kf + 2.0 * kf + 0.5);
    let leaves1: Vec<Point> = leaves0.iter().map(|&p| -p).collect();
    let r1 = -r0;
    let q0 = leaves0[k] + Point::new(0.1, 0.0);
    let q1 = leaves1[k] - Point::new(0.1, 0.0);
    let wp = build_winged_parallelogram(r0, leaves0[0], r1, leaves1[0], q0, q1)?;
    wp_drawing(star_side(r0, leaves0), star_side(r1, leaves1), wp, k)
}

/// Keep only the listed leaves (indices `j` of `v_{i,j}`) and spread them
/// uniformly over the original leaf segment of the same parallelogram; the
/// first kept leaf takes the place of `v_{i,0}` at `b_i`.
pub fn redraw_pruned_stars(wp: &WpDrawing, keep0: &[usize], keep1: &[usize]) -> Result<WpDrawing> {
    if keep0.is_empty() || keep1.is_empty() {
        return Err(ConstructError::EmptyKeepSet);
    }
    if keep0.len() != keep1.len() {
        return Err(ConstructError::KeepSetMismatch(format!(
            "{} vs {} kept leaves",
            keep0.len(),
            keep1.len()
        )));
    }
    let n_leaves = wp.leaf_count();
    let mut sides = Vec::with_capacity(2);
    for (i, keep) in [keep0, keep1].into_iter().enumerate() {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.len() != keep0.len() || keep.iter().any(|&j| j >= n_leaves) {
            return Err(ConstructError::KeepSetMismatch(format!(
                "side {i}: leaves must be distinct and in 0..{n_leaves}"
            )));
        }
        let old = &wp.drawing.sides[i];
        let start = old.points[1];
        let end = old.points[n_leaves];
        let pts: Vec<Point> = if keep.len() == 1 {
            vec![start]
        } else {
            let m = (keep.len() - 1) as f64;
            (0..keep.len())
                .map(|l| {
                    let l = l as f64;
                    Point::new(
                        start.x + (end.x - start.x) * l / m,
                        start.y + (end.y - start.y) * l / m,
                    )
                })
                .collect()
        };
        let mut side = star_side(old.points[0], pts);
        side.ids = std::iter::once(old.ids[0])
            .chain(keep.iter().map(|&j| old.ids[1 + j]))
            .collect();
        sides.push(side);
    }
    let side1 = sides.pop().expect("two sides");
    let side0 = sides.pop().expect("two sides");
    let k = keep0.len() - 1;
    let mut out = wp_drawing(side0, side1, wp.wp, k)?;
    out.drawing.annotations.trace = wp.drawing.annotations.trace.clone();
    Ok(out)
}
