use std::collections::BTreeSet;

use crate::geometry::{rotate_about, scale_of, Beta, Point, TAU};
use crate::proximity::{verify, Annotations, Corners, DrawingPair, Mode, Side};
use crate::tree_model::{rooted_isomorphism, RootedTree};

use super::{ConstructError, ConstructionTrace, Result};

/// Largest ratio between the coordinate magnitude and the smallest vertex
/// gap that a construction may produce.
const MAX_DYNAMIC_RANGE: f64 = 1e12;
const MAX_DOUBLINGS: usize = 60;
/// Lifted children keep their side-0 vertices below this fraction of the
/// highest side-1 vertex of the row.
const LIFT_TARGET: f64 = 0.9;

/// A parallelogram drawing of one rooted subtree pair, in local indices.
/// Vertex `k` is drawn at `pts[0][k]` and `pts[1][k]`; index 0 is the root.
#[derive(Debug, Clone)]
pub(crate) struct Piece {
    /// Vertices of the side-0 tree in preorder.
    pub verts: Vec<usize>,
    pub pts: [Vec<Point>; 2],
    pub edges: Vec<(usize, usize)>,
    pub corners: Corners,
    /// Local index drawn at `b_i`.
    pub b: [Option<usize>; 2],
    /// Vertices present on side 0 only.
    pub ghost: Vec<bool>,
}

impl Piece {
    fn leaf(v: usize, ghost: bool) -> Piece {
        let corners = Corners {
            a0: Point::new(0.0, 3.0),
            b0: Point::new(1.0, 1.0),
            a1: Point::new(3.0, 0.0),
            b1: Point::new(2.0, 2.0),
        };
        Piece {
            verts: vec![v],
            pts: [vec![corners.a0], vec![corners.a1]],
            edges: vec![],
            corners,
            b: [None, None],
            ghost: vec![ghost],
        }
    }

    fn is_live(&self, i: usize, k: usize) -> bool {
        i == 0 || !self.ghost[k]
    }

    /// Points drawn on side `i`.
    fn live(&self, i: usize) -> impl Iterator<Item = Point> + '_ {
        (0..self.pts[i].len())
            .filter(move |&k| self.is_live(i, k))
            .map(move |k| self.pts[i][k])
    }

    /// Edges drawn on side `i`.
    fn live_edges(&self, i: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges
            .iter()
            .copied()
            .filter(move |&(u, v)| self.is_live(i, u) && self.is_live(i, v))
    }

    fn map(&mut self, f: impl Fn(Point) -> Point) {
        for side in &mut self.pts {
            for p in side.iter_mut() {
                *p = f(*p);
            }
        }
        self.corners = self.corners.map(f);
    }

    /// Scale and translate so that `r_0` sits at `(0, 1)` and `r_1` at height 0.
    fn normalize(&mut self) {
        let (a0, a1) = (self.corners.a0, self.corners.a1);
        let s = 1.0 / (a0.y - a1.y);
        self.map(|p| Point::new((p.x - a0.x) * s, (p.y - a1.y) * s));
    }

    fn width(&self) -> f64 {
        self.corners.a1.x - self.corners.a0.x
    }

    pub(crate) fn to_drawing(&self, ids1: impl Fn(usize) -> usize) -> Result<DrawingPair> {
        let side0 = Side {
            ids: self.verts.clone(),
            points: self.pts[0].clone(),
            edges: self.edges.clone(),
        };
        // side-1 index of each local vertex
        let mut index = vec![None; self.verts.len()];
        let kept: Vec<usize> = (0..self.verts.len())
            .filter(|&k| self.is_live(1, k))
            .collect();
        for (j, &k) in kept.iter().enumerate() {
            index[k] = Some(j);
        }
        let side1 = Side {
            ids: kept.iter().map(|&k| ids1(self.verts[k])).collect(),
            points: kept.iter().map(|&k| self.pts[1][k]).collect(),
            edges: self
                .live_edges(1)
                .map(|(u, v)| (index[u].unwrap(), index[v].unwrap()))
                .collect(),
        };
        let mut d = DrawingPair::new(side0, side1)?;
        d.annotations = Annotations {
            corners: Some(self.corners),
            roots: Some([0, 0]),
            b_vertices: Some([self.b[0], self.b[1].and_then(|k| index[k])]),
            ..Annotations::default()
        };
        Ok(d)
    }
}

/// Edge `(u, v)` of a side as a pair of points with `x(u) < x(v)`.
fn oriented(pts: &[Point], (u, v): (usize, usize)) -> (Point, Point) {
    let (p, q) = (pts[u], pts[v]);
    if p.x <= q.x {
        (p, q)
    } else {
        (q, p)
    }
}

/// Smallest shift `X` (exclusive) such that no point of `moving` lies in
/// the closed strip of any edge of `fixed_pts`, and no point of
/// `fixed_other` lies in the strip of any edge of the moved piece.
fn strip_bound(fixed: &Piece, moving: &Piece, i: usize) -> f64 {
    let mut x = f64::NEG_INFINITY;
    for e in fixed.live_edges(i) {
        let (u, v) = oriented(&fixed.pts[i], e);
        let d = v - u;
        for w in moving.live(1 - i) {
            x = x.max((v - w).dot(d) / d.x);
        }
    }
    for e in moving.live_edges(i) {
        let (u, v) = oriented(&moving.pts[i], e);
        let d = v - u;
        for w in fixed.live(1 - i) {
            x = x.max((w - u).dot(d) / d.x);
        }
    }
    x
}

/// Smallest shift after which every pair across `fixed` and `moving` on
/// side `i` has a witness strictly inside its Gabriel disk, each pair using
/// whichever witness of the other side demands the least.
fn witness_bound(fixed: &[Piece], moving: &Piece, i: usize) -> f64 {
    let mut x = f64::NEG_INFINITY;
    for v in moving.live(i) {
        for w in fixed.iter().flat_map(|c| c.live(i)) {
            let mut need = f64::INFINITY;
            // witnesses travelling with v
            for z in moving.live(1 - i) {
                let a = v - z;
                if a.x > 0.0 {
                    need = need.min(a.dot(w - z) / a.x);
                }
            }
            // fixed witnesses
            for z in fixed.iter().flat_map(|c| c.live(1 - i)) {
                let b = w - z;
                if b.x < 0.0 {
                    need = need.min((v - z).dot(b) / -b.x);
                }
            }
            x = x.max(need);
        }
    }
    x
}

/// Lower bound on the root offset `E` for `r_0 = (p_0, 1 + E)` and
/// `r_1 = (p_1, -E)`, or infinity when no height works. `row` holds the
/// placed children behind a placeholder root at index 0.
fn root_bound(children: &[Piece], row: &Piece, p: [f64; 2]) -> f64 {
    let mut e = 0.0f64;
    let roots: Vec<[Point; 2]> = children
        .iter()
        .map(|c| [c.pts[0][0], c.pts[1][0]])
        .collect();
    let below = |i: usize| row.live(i).skip(1);
    // root edges see no witness beyond the child roots
    for (c, r) in children.iter().zip(&roots) {
        for w in below(1) {
            e = e.max((w.x - r[0].x) * (p[0] - r[0].x) / (1.0 - w.y));
        }
        if c.is_live(1, 0) {
            for w in below(0) {
                e = e.max((w.x - r[1].x) * (p[1] - r[1].x) / w.y);
            }
        }
    }
    // every other vertex sees some witness of the other side at an obtuse angle
    for v in below(0).filter(|v| !roots.iter().any(|r| r[0] == *v)) {
        let need = below(1)
            .filter(|w| w.y > v.y)
            .map(|w| w.y - 1.0 + (p[0] - w.x) * (v.x - w.x) / (w.y - v.y))
            .fold(f64::INFINITY, f64::min);
        e = e.max(need);
    }
    for v in below(1).filter(|v| !roots.iter().any(|r| r[1] == *v)) {
        let need = below(0)
            .filter(|w| w.y < v.y)
            .map(|w| -w.y + (p[1] - w.x) * (v.x - w.x) / (v.y - w.y))
            .fold(f64::INFINITY, f64::min);
        e = e.max(need);
    }
    // the new roots stay out of the strips of the other side's edges
    for (u, v) in row.live_edges(1).filter(|&(a, _)| a != 0) {
        let (u0, v0) = oriented(&row.pts[1], (u, v));
        let d = v0 - u0;
        let t = (p[0] - u0.x) * d.x;
        if d.y > 0.0 {
            e = e.max((d.dot(d) - t) / d.y - 1.0 + u0.y);
        } else if d.y < 0.0 {
            e = e.max(t / -d.y - 1.0 + u0.y);
        } else if t >= 0.0 && t <= d.dot(d) {
            return f64::INFINITY;
        }
    }
    for (u, v) in row.live_edges(0).filter(|&(a, _)| a != 0) {
        let (u1, v1) = oriented(&row.pts[0], (u, v));
        let d = v1 - u1;
        let t = (p[1] - u1.x) * d.x;
        if d.y < 0.0 {
            e = e.max((d.dot(d) - t + u1.y * d.y) / -d.y);
        } else if d.y > 0.0 {
            e = e.max((t - u1.y * d.y) / d.y);
        } else if t >= 0.0 && t <= d.dot(d) {
            return f64::INFINITY;
        }
    }
    e
}

/// Every point lies inside the parallelogram, with a little room.
fn contained(piece: &Piece) -> bool {
    let c = piece.corners;
    let cycle = [c.a0, c.b0, c.a1, c.b1];
    let inner: Vec<Point> = piece
        .live(0)
        .chain(piece.live(1))
        .filter(|q| !cycle.contains(q))
        .collect();
    let s = scale_of(&inner);
    inner.iter().all(|&q| {
        (0..4).all(|k| {
            let (s0, s1) = (cycle[k], cycle[(k + 1) % 4]);
            (s1 - s0).cross(q - s0) > 1e-7 * s * (s1 - s0).norm()
        })
    })
}

/// Both sides are MW-β for every β: edges clean in their closed strips,
/// non-edges witnessed in their open Gabriel disks.
fn is_universal(d: &DrawingPair) -> bool {
    verify(d, Beta::Infinite, Mode::Strict, TAU).is_valid()
        && verify(d, Beta::GABRIEL, Mode::Strict, TAU).is_valid()
}

fn dynamic_range(pts: &[Vec<Point>; 2]) -> f64 {
    let all: Vec<Point> = pts.iter().flatten().copied().collect();
    let c = centroid(&all);
    let span = all.iter().fold(0.0f64, |m, p| m.max((*p - c).max_abs()));
    let mut gap = f64::INFINITY;
    for (k, p) in all.iter().enumerate() {
        for q in &all[k + 1..] {
            gap = gap.min(p.dist(*q));
        }
    }
    if gap > 0.0 {
        span / gap
    } else {
        f64::INFINITY
    }
}

fn centroid(pts: &[Point]) -> Point {
    let n = pts.len().max(1) as f64;
    let s = pts.iter().fold(Point::new(0.0, 0.0), |a, &p| a + p);
    Point::new(s.x / n, s.y / n)
}

/// Shape of a piece rotated counterclockwise by `theta`, if it is then
/// nicely oriented with every non-corner vertex strictly inside the strip
/// of `b_0`, `b_1` and no edge vertical. Lower cost is better.
fn rotated_cost(piece: &Piece, theta: f64) -> Option<f64> {
    let (s, c) = theta.sin_cos();
    let rot = |p: Point| Point::new(c * p.x - s * p.y, s * p.x + c * p.y);
    let k = piece.corners.map(rot);
    let h = k.a0.y - k.a1.y;
    if !(k.a0.y > k.b1.y && k.b1.y > k.b0.y && k.b0.y > k.a1.y) {
        return None;
    }
    if !(k.a0.x < k.b0.x && k.b0.x < k.b1.x && k.b1.x < k.a1.x) {
        return None;
    }
    let room = 1e-6 * h;
    for (i, side) in piece.pts.iter().enumerate() {
        for (j, &p) in side.iter().enumerate() {
            if j == 0 || Some(j) == piece.b[i] || !piece.is_live(i, j) {
                continue;
            }
            let y = rot(p).y;
            if !(y > k.b0.y + room && y < k.b1.y - room) {
                return None;
            }
        }
    }
    let mut steep = f64::INFINITY;
    for (i, side) in piece.pts.iter().enumerate() {
        for (u, v) in piece.live_edges(i) {
            let d = rot(side[v] - side[u]);
            steep = steep.min(d.x.abs() / d.norm());
        }
    }
    if steep < 1e-6 {
        return None;
    }
    let g = ((k.b0.y - k.a1.y) / h).min((k.a0.y - k.b1.y) / h);
    let sigma = (k.b1.y - k.b0.y) / h;
    let w = (k.a1.x - k.a0.x) / h;
    Some(h * (1.0 + w).powi(2) / (g * sigma.min(steep)))
}

struct Builder<'a> {
    rt: &'a RootedTree,
    ids1: &'a [usize],
    /// Vertices left out of side 1.
    ghosts: &'a BTreeSet<usize>,
    trace: ConstructionTrace,
}

/// Translate children `1..` right, in order, far enough that the row is an
/// MW-β drawing of the forest. Returns the shifts.
fn place_children(children: &mut [Piece]) -> Vec<f64> {
    let mut shifts = Vec::with_capacity(children.len().saturating_sub(1));
    let mut right = children[0].width();
    for k in 1..children.len() {
        let (done, rest) = children.split_at_mut(k);
        let cur = &mut rest[0];
        let mut x = done[k - 1].corners.a0.x;
        for c in done.iter() {
            x = x.max(strip_bound(c, cur, 0)).max(strip_bound(c, cur, 1));
        }
        x = x
            .max(witness_bound(done, cur, 0))
            .max(witness_bound(done, cur, 1));
        x = x.max(right - cur.width());
        let slack = 0.1 * done.iter().map(Piece::width).fold(cur.width(), f64::max);
        let shift = x + slack;
        cur.map(|p| Point::new(p.x + shift, p.y));
        right = cur.corners.a1.x;
        shifts.push(shift);
    }
    shifts
}

/// Root placement for one row of children, before the final rotation.
struct Joined {
    piece: Piece,
    cost: f64,
    f: f64,
    e: f64,
    theta: f64,
}

impl Builder<'_> {
    fn build(&mut self, v: usize, depth: usize) -> Result<Piece> {
        let kids = self.rt.children(v);
        if kids.is_empty() {
            return Ok(Piece::leaf(v, self.ghosts.contains(&v)));
        }
        let mut children = Vec::with_capacity(kids.len());
        for &c in kids {
            let mut p = self.build(c, depth + 1)?;
            p.normalize();
            children.push(p);
        }
        self.lift_open_tops(&mut children, depth)?;
        let shifts = place_children(&mut children);
        let Some(joined) = self.join(v, &children)? else {
            return Err(ConstructError::DegenerateGeometry(format!(
                "no root placement found at depth {depth}"
            )));
        };
        for (k, x) in shifts.into_iter().enumerate() {
            self.trace
                .push("child", depth, [("index", (k + 1) as f64), ("X", x)]);
        }
        let Joined {
            mut piece,
            cost,
            f,
            e,
            theta,
        } = joined;
        let all: Vec<Point> = piece.pts.iter().flatten().copied().collect();
        let center = centroid(&all);
        piece.map(|p| rotate_about(&[p], center, theta)[0]);
        let range = dynamic_range(&piece.pts);
        if range > MAX_DYNAMIC_RANGE {
            return Err(ConstructError::DegenerateGeometry(format!(
                "coordinate dynamic range {range:e} exceeds {MAX_DYNAMIC_RANGE:e}"
            )));
        }
        self.trace.push(
            "roots",
            depth,
            [
                ("f", f),
                ("E", e),
                ("theta", theta),
                ("cost", cost),
                ("range", range),
            ],
        );
        Ok(piece)
    }

    /// A child whose `b_1` vertex is a ghost has no side-1 vertex above its
    /// side-0 vertices, so their root non-edges need a witness from another
    /// child. Raise its side-0 root along `b_0 a_0` until, renormalized, all
    /// its side-0 vertices sit below the highest side-1 vertex of the row.
    fn lift_open_tops(&mut self, children: &mut [Piece], depth: usize) -> Result<()> {
        let open = |c: &Piece| c.b[1].is_some_and(|k| c.ghost[k]);
        let top1 = children
            .iter()
            .filter(|c| !open(c))
            .flat_map(|c| c.live(1).skip(1))
            .fold(f64::NEG_INFINITY, |m, p| m.max(p.y));
        for (j, c) in children.iter_mut().enumerate() {
            if !open(c) {
                continue;
            }
            let top0 = c.pts[0][1..]
                .iter()
                .fold(f64::NEG_INFINITY, |m, p| m.max(p.y));
            if !(top1 > 0.0) {
                return Err(ConstructError::DegenerateGeometry(format!(
                    "no side-1 vertex to witness child {j}"
                )));
            }
            if top0 < LIFT_TARGET * top1 {
                continue;
            }
            // after a_0' = b_0 + λ(a_0 - b_0) the height is b0.y + λ(1 - b0.y)
            let b0 = c.corners.b0;
            let mut lambda = (top0 / (LIFT_TARGET * top1) - b0.y) / (1.0 - b0.y);
            let mut lifted = None;
            for _ in 0..MAX_DOUBLINGS {
                let mut t = c.clone();
                t.pts[0][0] = b0 + (c.corners.a0 - b0) * lambda;
                t.corners.a0 = t.pts[0][0];
                t.normalize();
                if contained(&t) && is_universal(&t.to_drawing(|v| self.ids1[v])?) {
                    lifted = Some(t);
                    break;
                }
                lambda *= 2.0;
            }
            let Some(t) = lifted else {
                return Err(ConstructError::DegenerateGeometry(format!(
                    "cannot lift child {j} at depth {depth}"
                )));
            };
            *c = t;
            self.trace
                .push("lift", depth, [("index", j as f64), ("lambda", lambda)]);
        }
        Ok(())
    }

    /// Add the two roots above and below the row of children.
    /// The roots sit at `r_{0,0} + V` and `r_{1,m} - V` for `V = (f·D, E)`;
    /// several `f` are tried and the best-shaped result kept.
    fn join(&self, v: usize, children: &[Piece]) -> Result<Option<Joined>> {
        let m = children.len() - 1;
        let xl = [children[0].pts[0][0].x, children[m].pts[1][0].x];
        let width = xl[1] - xl[0];
        let mut verts = vec![v];
        let mut pts: [Vec<Point>; 2] = [vec![Point::new(0.0, 0.0)], vec![Point::new(0.0, 0.0)]];
        let mut edges = Vec::new();
        let mut ghost = vec![false];
        let mut starts = Vec::with_capacity(children.len());
        for c in children {
            let off = verts.len();
            starts.push(off);
            verts.extend(&c.verts);
            ghost.extend(&c.ghost);
            for (dst, src) in pts.iter_mut().zip(&c.pts) {
                dst.extend(src);
            }
            edges.push((0, off));
            edges.extend(c.edges.iter().map(|&(a, b)| (a + off, b + off)));
        }
        let b = [Some(starts[0]), Some(starts[m])];
        let corners = children[0].corners;
        let mut piece = Piece {
            verts,
            pts,
            edges,
            corners,
            b,
            ghost,
        };

        let mut best: Option<Joined> = None;
        for f in [0.0, 0.125, 0.25, 0.375, 0.5] {
            let vx = f * width;
            let bound = root_bound(children, &piece, [xl[0] + vx, xl[1] - vx]);
            if !bound.is_finite() {
                continue;
            }
            let mut e = bound.max(0.0) * 1.25 + 1.0;
            for _ in 0..MAX_DOUBLINGS {
                piece.pts[0][0] = Point::new(xl[0] + vx, 1.0 + e);
                piece.pts[1][0] = Point::new(xl[1] - vx, -e);
                piece.corners = Corners {
                    a0: piece.pts[0][0],
                    b0: piece.pts[0][starts[0]],
                    a1: piece.pts[1][0],
                    b1: piece.pts[1][starts[m]],
                };
                let found =
                    if contained(&piece) && is_universal(&piece.to_drawing(|v| self.ids1[v])?) {
                        best_rotation(&piece)
                    } else {
                        None
                    };
                if let Some((cost, theta)) = found {
                    if best.as_ref().is_none_or(|j| cost < j.cost) {
                        best = Some(Joined {
                            piece: piece.clone(),
                            cost,
                            f,
                            e,
                            theta,
                        });
                    }
                    break;
                }
                e *= 2.0;
            }
        }
        Ok(best)
    }
}

/// Open interval of angles in `(0, π/2)` for which a counterclockwise
/// rotation keeps `a·sin θ + b·cos θ > 0`; the sinusoid changes sign at most
/// once there.
fn angle_window(a: f64, b: f64) -> (f64, f64) {
    use std::f64::consts::FRAC_PI_2;
    match (a > 0.0, b > 0.0) {
        (true, true) => (0.0, FRAC_PI_2),
        (false, true) => (0.0, b.atan2(-a)),
        (true, false) => ((-b).atan2(a), FRAC_PI_2),
        (false, false) => (FRAC_PI_2, 0.0),
    }
}

/// The admissible rotation angle of least cost, if any.
fn best_rotation(piece: &Piece) -> Option<(f64, f64)> {
    let k = piece.corners;
    // y'(p) - y'(q) = dx sin + dy cos; x'(q) - x'(p) = -dy sin + dx cos
    let higher = |p: Point, q: Point| (p.x - q.x, p.y - q.y);
    let righter = |p: Point, q: Point| (-(p.y - q.y), p.x - q.x);
    let mut conds = vec![
        higher(k.a0, k.b1),
        higher(k.b1, k.b0),
        higher(k.b0, k.a1),
        righter(k.b0, k.a0),
        righter(k.b1, k.b0),
        righter(k.a1, k.b1),
    ];
    for (i, side) in piece.pts.iter().enumerate() {
        for (j, &p) in side.iter().enumerate() {
            if j != 0 && Some(j) != piece.b[i] && piece.is_live(i, j) {
                conds.push(higher(p, k.b0));
                conds.push(higher(k.b1, p));
            }
        }
    }
    let (lo, hi) = conds
        .into_iter()
        .map(|(a, b)| angle_window(a, b))
        .fold((0.0f64, std::f64::consts::FRAC_PI_2), |(l, h), (a, b)| {
            (l.max(a), h.min(b))
        });
    if lo >= hi {
        return None;
    }
    const STEPS: usize = 200;
    (1..STEPS)
        .map(|j| lo + (hi - lo) * j as f64 / STEPS as f64)
        .filter_map(|t| rotated_cost(piece, t).map(|c| (c, t)))
        .min_by(|a, b| a.0.total_cmp(&b.0))
}

/// Draw `rt0` on both sides, leaving `ghosts` out of side 1.
pub(crate) fn build_pieces(
    rt0: &RootedTree,
    ids1: &[usize],
    ghosts: &BTreeSet<usize>,
) -> Result<(Piece, ConstructionTrace)> {
    let mut b = Builder {
        rt: rt0,
        ids1,
        ghosts,
        trace: ConstructionTrace::default(),
    };
    let piece = b.build(rt0.root(), 0)?;
    Ok((piece, b.trace))
}

/// A parallelogram drawing of two isomorphic rooted trees that is an
/// MW-β drawing for every β in `[1, ∞]`.
///
/// Children are drawn recursively, normalized to a common horizontal strip
/// and placed left to right. The roots go high above and far below the
/// outermost child roots, and the result is rotated into a nicely oriented
/// parallelogram.
pub fn draw_tree_pair(rt0: &RootedTree, rt1: &RootedTree) -> Result<DrawingPair> {
    let map = rooted_isomorphism(rt0, rt1)?;
    let (piece, trace) = build_pieces(rt0, &map, &BTreeSet::new())?;
    let mut d = piece.to_drawing(|v| map[v])?;
    d.annotations.trace = Some(trace);
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proximity::{check_parallelogram_drawing, verify_universal};
    use crate::tree_model::{gen_random_tree, Tree};

    fn check(rt0: &RootedTree, rt1: &RootedTree) -> DrawingPair {
        let d = draw_tree_pair(rt0, rt1).unwrap();
        let c = check_parallelogram_drawing(&d).unwrap();
        assert!(c.all(), "{c:?}");
        for r in verify_universal(&d, &Beta::default_sample()) {
            assert!(r.is_valid(), "beta {:?}: {:?}", r.beta, r.violations);
        }
        assert_eq!(d.sides[0].id_edges(), rt0.tree().edges());
        assert_eq!(d.sides[1].id_edges(), rt1.tree().edges());
        d
    }

    #[test]
    fn single_vertices_use_the_canonical_parallelogram() {
        let t = Tree::from_edges(1, &[]).unwrap();
        let rt = RootedTree::new(t, 0).unwrap();
        let d = check(&rt, &rt);
        assert_eq!(d.sides[0].points, vec![Point::new(0.0, 3.0)]);
        assert_eq!(d.sides[1].points, vec![Point::new(3.0, 0.0)]);
    }

    #[test]
    fn cherry() {
        let t = Tree::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let rt = RootedTree::new(t, 0).unwrap();
        check(&rt, &rt);
    }

    #[test]
    fn relabeled_path() {
        let t0 = Tree::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let t1 = t0.relabeled(&[2, 0, 3, 1]);
        let rt0 = RootedTree::new(t0, 1).unwrap();
        let rt1 = RootedTree::new(t1, 0).unwrap();
        check(&rt0, &rt1);
    }

    #[test]
    fn random_trees() {
        for seed in 0..20 {
            let t = gen_random_tree(2 + seed as usize, seed).unwrap();
            let rt = RootedTree::new(t.clone(), t.center()).unwrap();
            check(&rt, &rt);
        }
    }
}
