//! Planar primitives and the β-region, wedge and angle predicates shared by
//! the constructions and the verifier.
//!
//! All predicates work in `f64` with a single relative tolerance [`TAU`]
//! scaled by the magnitude of the coordinates involved. A membership test
//! returns a signed margin (positive inside); "strict" means the margin
//! exceeds `TAU * scale`, "closed" accepts margins down to `-TAU * scale`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default relative tolerance.
pub const TAU: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid winged parallelogram: {0}")]
    InvalidParallelogram(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the 3d cross product.
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    /// Counterclockwise quarter turn.
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn normalized(self) -> Point {
        let n = self.norm();
        Point::new(self.x / n, self.y / n)
    }

    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn lerp(self, o: Point, t: f64) -> Point {
        self + (o - self) * t
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Magnitude used to scale the tolerance for a predicate over `pts`.
pub fn scale_of(pts: &[Point]) -> f64 {
    pts.iter()
        .fold(0.0f64, |m, p| m.max(p.max_abs()))
        .max(f64::MIN_POSITIVE)
}

/// The β parameter; `Infinite` is kept distinct so no arithmetic ever
/// touches an infinite value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Beta {
    Finite(f64),
    Infinite,
}

impl Beta {
    pub fn new(b: f64) -> Result<Beta> {
        if b.is_infinite() && b > 0.0 {
            Ok(Beta::Infinite)
        } else if b.is_finite() && b >= 1.0 {
            Ok(Beta::Finite(b))
        } else {
            Err(GeometryError::DegenerateInput(format!(
                "beta must be >= 1, got {b}"
            )))
        }
    }

    pub const GABRIEL: Beta = Beta::Finite(1.0);

    /// Ordering key; `Infinite` sorts last.
    pub fn as_f64(self) -> f64 {
        match self {
            Beta::Finite(b) => b,
            Beta::Infinite => f64::INFINITY,
        }
    }

    /// The sample used when a drawing must hold "for all β".
    pub fn default_sample() -> Vec<Beta> {
        vec![
            Beta::Finite(1.0),
            Beta::Finite(1.5),
            Beta::Finite(2.0),
            Beta::Finite(5.0),
            Beta::Finite(10.0),
            Beta::Infinite,
        ]
    }
}

impl fmt::Display for Beta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Beta::Finite(b) => write!(f, "{b}"),
            Beta::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Beta {
    type Err = GeometryError;
    fn from_str(s: &str) -> Result<Beta> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Beta::Infinite);
        }
        let b: f64 = s
            .parse()
            .map_err(|_| GeometryError::DegenerateInput(format!("cannot parse beta {s:?}")))?;
        if b.is_infinite() {
            return Err(GeometryError::DegenerateInput(
                "use \"inf\" for an infinite beta".into(),
            ));
        }
        Beta::new(b)
    }
}

impl Serialize for Beta {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Beta::Finite(b) => s.serialize_f64(*b),
            Beta::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Beta {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(b) => Beta::new(b).map_err(serde::de::Error::custom),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Centers and common radius of the two disks bounding the finite β-region.
pub fn beta_disks(p: Point, q: Point, beta: f64) -> Result<(Point, Point, f64)> {
    if p == q {
        return Err(GeometryError::DegenerateInput("p and q coincide".into()));
    }
    if !(beta >= 1.0 && beta.is_finite()) {
        return Err(GeometryError::DegenerateInput(format!(
            "beta must be finite and >= 1, got {beta}"
        )));
    }
    let h = beta / 2.0;
    let c1 = p * (1.0 - h) + q * h;
    let c2 = p * h + q * (1.0 - h);
    Ok((c1, c2, beta * p.dist(q) / 2.0))
}

/// Signed membership margin of `w` in the β-region of `p`, `q`: positive
/// inside, zero on the boundary, in length units.
///
/// The caller guarantees `p != q`.
pub fn region_margin(p: Point, q: Point, beta: Beta, w: Point) -> f64 {
    match beta {
        Beta::Finite(1.0) => {
            let mid = p.lerp(q, 0.5);
            p.dist(q) / 2.0 - w.dist(mid)
        }
        Beta::Finite(b) => {
            let h = b / 2.0;
            let c1 = p * (1.0 - h) + q * h;
            let c2 = p * h + q * (1.0 - h);
            let r = b * p.dist(q) / 2.0;
            (r - w.dist(c1)).min(r - w.dist(c2))
        }
        Beta::Infinite => {
            let d = q - p;
            let len = d.norm();
            let t = (w - p).dot(d) / len;
            t.min(len - t)
        }
    }
}

/// The open region R(p,q,β) or the closed region R[p,q,β].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaRegion {
    p: Point,
    q: Point,
    beta: Beta,
    closed: bool,
}

impl BetaRegion {
    pub fn new(p: Point, q: Point, beta: Beta, closed: bool) -> Result<Self> {
        if p == q {
            return Err(GeometryError::DegenerateInput(
                "region on coincident points".into(),
            ));
        }
        if let Beta::Finite(b) = beta {
            if !(b >= 1.0) {
                return Err(GeometryError::DegenerateInput(format!("beta {b} < 1")));
            }
        }
        Ok(BetaRegion { p, q, beta, closed })
    }

    pub fn open(p: Point, q: Point, beta: Beta) -> Result<Self> {
        Self::new(p, q, beta, false)
    }

    pub fn closed(p: Point, q: Point, beta: Beta) -> Result<Self> {
        Self::new(p, q, beta, true)
    }

    pub fn p(&self) -> Point {
        self.p
    }

    pub fn q(&self) -> Point {
        self.q
    }

    pub fn beta(&self) -> Beta {
        self.beta
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn margin(&self, w: Point) -> f64 {
        region_margin(self.p, self.q, self.beta, w)
    }

    pub fn scale(&self, w: Point) -> f64 {
        scale_of(&[self.p, self.q, w])
    }

    pub fn contains(&self, w: Point) -> bool {
        self.contains_with(w, TAU)
    }

    pub fn contains_with(&self, w: Point, tau: f64) -> bool {
        let slack = tau * self.scale(w);
        let m = self.margin(w);
        if self.closed {
            m >= -slack
        } else {
            m > slack
        }
    }
}

/// ∠(u, apex, v) in `[0, π]`.
pub fn angle_at(u: Point, apex: Point, v: Point) -> Result<f64> {
    if u == apex || v == apex {
        return Err(GeometryError::DegenerateInput(
            "angle with coincident points".into(),
        ));
    }
    let a = u - apex;
    let b = v - apex;
    Ok(a.cross(b).abs().atan2(a.dot(b)))
}

/// Rigid counterclockwise rotation of `points` about `center`.
pub fn rotate_about(points: &[Point], center: Point, angle: f64) -> Vec<Point> {
    let (s, c) = angle.sin_cos();
    points
        .iter()
        .map(|&p| {
            let d = p - center;
            center + Point::new(c * d.x - s * d.y, s * d.x + c * d.y)
        })
        .collect()
}

/// An infinite line through `point` with direction `dir`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    pub point: Point,
    pub dir: Point,
}

impl Line {
    pub fn new(point: Point, dir: Point) -> Result<Self> {
        if dir.norm() == 0.0 || !dir.is_finite() {
            return Err(GeometryError::DegenerateInput(
                "line direction is zero".into(),
            ));
        }
        Ok(Line { point, dir })
    }

    pub fn through(a: Point, b: Point) -> Result<Self> {
        Self::new(a, b - a)
    }

    pub fn horizontal(y: f64) -> Self {
        Line {
            point: Point::new(0.0, y),
            dir: Point::new(1.0, 0.0),
        }
    }

    /// Signed distance, positive to the left of `dir`.
    pub fn signed_distance(&self, w: Point) -> f64 {
        self.dir.cross(w - self.point) / self.dir.norm()
    }

    /// Intersection with another line, `None` when parallel.
    pub fn intersect(&self, o: &Line) -> Option<Point> {
        let den = self.dir.cross(o.dir);
        if den == 0.0 {
            return None;
        }
        let t = (o.point - self.point).cross(o.dir) / den;
        Some(self.point + self.dir * t)
    }

    /// Smallest distance of any point to the line if `a` and `b` lie in
    /// opposite open half-planes (`a` on either side), else `None`.
    pub fn separation_margin(&self, a: &[Point], b: &[Point]) -> Option<f64> {
        let da: Vec<f64> = a.iter().map(|&p| self.signed_distance(p)).collect();
        let db: Vec<f64> = b.iter().map(|&p| self.signed_distance(p)).collect();
        let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
        let max = |v: &[f64]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let m = if min(&da) > 0.0 && max(&db) < 0.0 {
            min(&da).min(-max(&db))
        } else if max(&da) < 0.0 && min(&db) > 0.0 {
            (-max(&da)).min(min(&db))
        } else {
            return None;
        };
        Some(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ray {
    pub origin: Point,
    pub dir: Point,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn intersects(&self, o: &Segment) -> bool {
        let d1 = (self.b - self.a).cross(o.a - self.a);
        let d2 = (self.b - self.a).cross(o.b - self.a);
        let d3 = (o.b - o.a).cross(self.a - o.a);
        let d4 = (o.b - o.a).cross(self.b - o.a);
        if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
            && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
        {
            return true;
        }
        let on = |p: Point, q: Point, r: Point, d: f64| {
            d == 0.0
                && r.x >= p.x.min(q.x)
                && r.x <= p.x.max(q.x)
                && r.y >= p.y.min(q.y)
                && r.y <= p.y.max(q.y)
        };
        on(self.a, self.b, o.a, d1)
            || on(self.a, self.b, o.b, d2)
            || on(o.a, o.b, self.a, d3)
            || on(o.a, o.b, self.b, d4)
    }
}

/// An open wedge bounded by two non-parallel rays from `apex`; the wedge is
/// the convex sector between them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Wedge {
    pub apex: Point,
    pub ray1: Point,
    pub ray2: Point,
}

impl Wedge {
    pub fn new(apex: Point, ray1: Point, ray2: Point) -> Result<Self> {
        let (r1, r2) = (ray1.normalized(), ray2.normalized());
        if !r1.is_finite() || !r2.is_finite() || r1.cross(r2).abs() < 1e-15 {
            return Err(GeometryError::DegenerateInput(
                "wedge rays are parallel or zero".into(),
            ));
        }
        Ok(Wedge {
            apex,
            ray1: r1,
            ray2: r2,
        })
    }

    /// Signed margin: positive strictly inside, measured as the distance to
    /// the nearer bounding line.
    pub fn margin(&self, pt: Point) -> f64 {
        let d = pt - self.apex;
        let orient = self.ray1.cross(self.ray2).signum();
        let s1 = orient * self.ray1.cross(d);
        let s2 = -orient * self.ray2.cross(d);
        s1.min(s2)
    }

    pub fn contains(&self, pt: Point) -> bool {
        self.margin(pt) > TAU * scale_of(&[self.apex, pt])
    }
}

/// Parallelogram a0 b0 a1 b1 with anchors, safe wedges and ports.
///
/// Wedge `w[i]` has its apex at `b[1-i]`; its ray `rho_i` is perpendicular to
/// `a_i b_{1-i}` and carries the port `p_i` at height `y(a_i)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WingedParallelogram {
    pub a: [Point; 2],
    pub b: [Point; 2],
    pub q: [Point; 2],
    pub w: [Wedge; 2],
    pub p: [Point; 2],
}

pub fn build_winged_parallelogram(
    a0: Point,
    b0: Point,
    a1: Point,
    b1: Point,
    q0: Point,
    q1: Point,
) -> Result<WingedParallelogram> {
    let bad = |m: &str| Err(GeometryError::InvalidParallelogram(m.to_string()));
    if !(a0.y > b0.y && b0.y > b1.y && b1.y > a1.y) {
        return bad("need y(a0) > y(b0) > y(b1) > y(a1)");
    }
    if !(a0.x == b0.x && a1.x == b1.x && b0.x < b1.x) {
        return bad("need x(a0) = x(b0) < x(a1) = x(b1)");
    }
    if (a0 - b0 - (b1 - a1)).max_abs() > TAU * scale_of(&[a0, b0, a1, b1]) {
        return bad("corners do not form a parallelogram");
    }
    if q0.y != b0.y || q1.y != b1.y {
        return bad("anchors must share the height of b_i");
    }
    if !(q1.x < q0.x) {
        return bad("need x(q1) < x(q0)");
    }
    let s = scale_of(&[b0, b1, q0, q1]);
    if ((q0.x - b0.x) - (b1.x - q1.x)).abs() > TAU * s {
        return bad("need x(q0) - x(b0) = x(b1) - x(q1)");
    }
    let a = [a0, a1];
    let b = [b0, b1];
    let q = [q0, q1];
    let mut w = [Wedge {
        apex: b1,
        ray1: Point::default(),
        ray2: Point::default(),
    }; 2];
    let mut p = [Point::default(); 2];
    for i in 0..2 {
        let apex = b[1 - i];
        let corners: Vec<Point> = [a0, b0, a1, b1]
            .into_iter()
            .filter(|&c| c != apex)
            .collect();
        let n_a = (a[i] - apex).perp();
        let n_q = (q[i] - apex).perp();
        // rho_i must head towards the height of a_i
        let up = if a[i].y > apex.y { 1.0 } else { -1.0 };
        let rho = if n_a.y * up > 0.0 { n_a } else { -n_a };
        let chosen = [n_q, -n_q]
            .into_iter()
            .filter_map(|r2| Wedge::new(apex, rho, r2).ok())
            .find(|wedge| corners.iter().all(|&c| wedge.margin(c) <= 0.0));
        let wedge = match chosen {
            Some(wg) => wg,
            None => return bad("no safe wedge excludes the other corners"),
        };
        // rho_i is the ray of the wedge perpendicular to a_i b_{1-i}.
        let rho = wedge.ray1;
        if rho.y == 0.0 || (a[i].y - apex.y) / rho.y <= 0.0 {
            return bad("port ray never reaches the height of a_i");
        }
        let t = (a[i].y - apex.y) / rho.y;
        p[i] = Point::new(apex.x + rho.x * t, a[i].y);
        w[i] = wedge;
    }
    Ok(WingedParallelogram { a, b, q, w, p })
}

impl WingedParallelogram {
    /// Interior angle of the parallelogram at `a_i`.
    pub fn angle_at_a(&self, i: usize) -> f64 {
        angle_at(self.b[i], self.a[i], self.b[1 - i]).unwrap_or(0.0)
    }

    /// Ray `rho_i` as (origin, unit direction).
    pub fn rho(&self, i: usize) -> Ray {
        Ray {
            origin: self.w[i].apex,
            dir: self.w[i].ray1,
        }
    }

    pub fn translated(&self, by: Point) -> Self {
        let mut out = *self;
        for i in 0..2 {
            out.a[i] = self.a[i] + by;
            out.b[i] = self.b[i] + by;
            out.q[i] = self.q[i] + by;
            out.p[i] = self.p[i] + by;
            out.w[i].apex = self.w[i].apex + by;
        }
        out
    }
}

fn convex_hull(pts: &[Point]) -> Vec<Point> {
    let mut v: Vec<Point> = pts.to_vec();
    v.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    v.dedup();
    if v.len() < 3 {
        return v;
    }
    let mut lower: Vec<Point> = Vec::new();
    for &p in &v {
        while lower.len() >= 2
            && (lower[lower.len() - 1] - lower[lower.len() - 2]).cross(p - lower[lower.len() - 2])
                <= 0.0
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in v.iter().rev() {
        while upper.len() >= 2
            && (upper[upper.len() - 1] - upper[upper.len() - 2]).cross(p - upper[upper.len() - 2])
                <= 0.0
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// A line strictly separating the two point sets, if their convex hulls are
/// disjoint.
///
/// Candidate normals are the hull edge normals and edge directions of both
/// sets plus the centroid difference; for disjoint convex sets one of the
/// edge normals is a separating axis.
pub fn linearly_separable(pts0: &[Point], pts1: &[Point]) -> Option<Line> {
    if pts0.is_empty() || pts1.is_empty() {
        return None;
    }
    let h0 = convex_hull(pts0);
    let h1 = convex_hull(pts1);
    let mut normals = Vec::new();
    for h in [&h0, &h1] {
        for i in 0..h.len() {
            let e = h[(i + 1) % h.len()] - h[i];
            if e.norm() > 0.0 {
                normals.push(e.perp());
                normals.push(e);
            }
        }
    }
    let centroid =
        |h: &[Point]| h.iter().fold(Point::default(), |a, &p| a + p) * (1.0 / h.len() as f64);
    let dc = centroid(&h1) - centroid(&h0);
    if dc.norm() > 0.0 {
        normals.push(dc);
    }
    let s = scale_of(pts0).max(scale_of(pts1));
    let mut best: Option<(f64, Line)> = None;
    for n in normals {
        let n = n.normalized();
        let proj = |h: &[Point]| {
            h.iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
                    let t = p.dot(n);
                    (lo.min(t), hi.max(t))
                })
        };
        let (lo0, hi0) = proj(&h0);
        let (lo1, hi1) = proj(&h1);
        let (gap, mid) = if hi0 < lo1 {
            (lo1 - hi0, (hi0 + lo1) / 2.0)
        } else if hi1 < lo0 {
            (lo0 - hi1, (hi1 + lo0) / 2.0)
        } else {
            continue;
        };
        if gap <= TAU * s {
            continue;
        }
        let line = Line {
            point: n * mid,
            dir: n.perp(),
        };
        if best.as_ref().is_none_or(|(g, _)| gap > *g) {
            best = Some((gap, line));
        }
    }
    best.map(|(_, l)| l)
}
