//! The witness oracle and the drawing verifier.
//!
//! Every decision reduces to one number per vertex pair: the best normalized
//! margin `ν = margin / scale` over all witnesses of the other side. A pair
//! is witnessed in the closed region iff `ν ≥ -τ`, in the open region iff
//! `ν > τ`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::ConstructionTrace;
use crate::geometry::{region_margin, scale_of, Beta, Line, Point, TAU};
use crate::par::{pairs, Exec};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ProximityError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
    #[error("missing annotation: {0}")]
    MissingAnnotation(String),
}

pub type Result<T> = std::result::Result<T, ProximityError>;

/// One drawing: points, the tree vertex each point represents, and edges as
/// index pairs into `points`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Side {
    pub ids: Vec<usize>,
    pub points: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
}

impl Side {
    pub fn new(points: Vec<Point>, edges: Vec<(usize, usize)>) -> Self {
        Side {
            ids: (0..points.len()).collect(),
            points,
            edges,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of the point representing tree vertex `id`.
    pub fn index_of(&self, id: usize) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    /// Edges with `u < v`, sorted.
    pub fn normalized_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        e.sort_unstable();
        e
    }

    /// Edges as sorted pairs of tree vertex ids.
    pub fn id_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.ids[u], self.ids[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        e
    }
}

/// Corners of the supporting parallelogram.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Corners {
    pub a0: Point,
    pub b0: Point,
    pub a1: Point,
    pub b1: Point,
}

impl Corners {
    pub fn a(&self, i: usize) -> Point {
        if i == 0 {
            self.a0
        } else {
            self.a1
        }
    }

    pub fn b(&self, i: usize) -> Point {
        if i == 0 {
            self.b0
        } else {
            self.b1
        }
    }

    pub fn to_array(&self) -> [Point; 4] {
        [self.a0, self.b0, self.a1, self.b1]
    }

    pub fn map(&self, f: impl Fn(Point) -> Point) -> Corners {
        Corners {
            a0: f(self.a0),
            b0: f(self.b0),
            a1: f(self.a1),
            b1: f(self.b1),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Annotations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corners: Option<Corners>,
    /// Point indices of the roots, one per side.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<[usize; 2]>,
    /// Point index drawn at `b_i`, when occupied.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_vertices: Option<[Option<usize>; 2]>,
    /// Anchors of a winged parallelogram.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anchors: Option<[Point; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separating_line: Option<Line>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<ConstructionTrace>,
}

/// A pair of drawings ⟨Γ0, Γ1⟩.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DrawingPair {
    pub sides: [Side; 2],
    #[serde(default)]
    pub annotations: Annotations,
}

impl DrawingPair {
    pub fn new(side0: Side, side1: Side) -> Result<Self> {
        let d = DrawingPair {
            sides: [side0, side1],
            annotations: Annotations::default(),
        };
        d.validate()?;
        Ok(d)
    }

    pub fn from_points(
        points0: Vec<Point>,
        edges0: Vec<(usize, usize)>,
        points1: Vec<Point>,
        edges1: Vec<(usize, usize)>,
    ) -> Result<Self> {
        Self::new(Side::new(points0, edges0), Side::new(points1, edges1))
    }

    pub fn side(&self, i: usize) -> &Side {
        &self.sides[i]
    }

    pub fn all_points(&self) -> Vec<Point> {
        self.sides[0]
            .points
            .iter()
            .chain(&self.sides[1].points)
            .copied()
            .collect()
    }

    pub fn validate(&self) -> Result<()> {
        for (i, s) in self.sides.iter().enumerate() {
            if s.ids.len() != s.points.len() {
                return Err(ProximityError::InvalidDrawing(format!(
                    "side {i}: ids and points differ in length"
                )));
            }
            if let Some(p) = s.points.iter().find(|p| !p.is_finite()) {
                return Err(ProximityError::InvalidDrawing(format!(
                    "side {i}: non-finite point {p}"
                )));
            }
            let mut seen = std::collections::BTreeSet::new();
            for &(u, v) in &s.edges {
                if u >= s.len() || v >= s.len() {
                    return Err(ProximityError::InvalidDrawing(format!(
                        "side {i}: edge ({u}, {v}) out of range"
                    )));
                }
                if u == v {
                    return Err(ProximityError::InvalidDrawing(format!(
                        "side {i}: self edge at {u}"
                    )));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(ProximityError::InvalidDrawing(format!(
                        "side {i}: duplicate edge ({u}, {v})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Apply `f` to every point and annotation point.
    pub fn map_points(&self, f: impl Fn(Point) -> Point) -> DrawingPair {
        let mut out = self.clone();
        for s in &mut out.sides {
            for p in &mut s.points {
                *p = f(*p);
            }
        }
        let a = &mut out.annotations;
        a.corners = a.corners.map(|c| c.map(&f));
        a.anchors = a.anchors.map(|[p, q]| [f(p), f(q)]);
        a.separating_line = a.separating_line.map(|l| {
            let p = f(l.point);
            Line {
                point: p,
                dir: f(l.point + l.dir) - p,
            }
        });
        out
    }
}

/// Witness statistics of one pair against the other side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairScore {
    /// Best normalized margin `margin / scale` over all witnesses.
    pub nu: f64,
    /// Raw margin of that witness.
    pub margin: f64,
    pub witness: Option<usize>,
    /// Largest raw margin over all witnesses.
    pub max_margin: f64,
}

pub fn pair_score(u: Point, v: Point, witnesses: &[Point], beta: Beta) -> PairScore {
    let mut best = PairScore {
        nu: f64::NEG_INFINITY,
        margin: f64::NEG_INFINITY,
        witness: None,
        max_margin: f64::NEG_INFINITY,
    };
    for (k, &w) in witnesses.iter().enumerate() {
        let m = region_margin(u, v, beta, w);
        let nu = m / scale_of(&[u, v, w]).max(f64::MIN_POSITIVE);
        best.max_margin = best.max_margin.max(m);
        if nu > best.nu {
            best.nu = nu;
            best.margin = m;
            best.witness = Some(k);
        }
    }
    best
}

fn check_distinct(points: &[Point], side: usize) -> Result<()> {
    let mut sorted: Vec<Point> = points.to_vec();
    sorted.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(ProximityError::DegenerateInput(format!(
            "coincident points on side {side}"
        )));
    }
    Ok(())
}

pub(crate) fn side_scores(
    points: &[Point],
    witnesses: &[Point],
    beta: Beta,
    exec: Exec,
) -> Vec<((usize, usize), PairScore)> {
    let ps = pairs(points.len());
    let scores = exec.map_slice(&ps, |&(u, v)| {
        pair_score(points[u], points[v], witnesses, beta)
    });
    ps.into_iter().zip(scores).collect()
}

/// Edge lists of the two mutual-witness graphs, as point-index pairs.
pub type GraphPair = (Vec<(usize, usize)>, Vec<(usize, usize)>);

/// Both mutual-witness graphs of the point sets at `beta`: an edge exists iff
/// no point of the other side lies in the (closed or open) region.
pub fn extract_mw_graphs(
    points0: &[Point],
    points1: &[Point],
    beta: Beta,
    closed: bool,
) -> Result<GraphPair> {
    extract_mw_graphs_with(points0, points1, beta, closed, TAU, Exec::default())
}

pub fn extract_mw_graphs_with(
    points0: &[Point],
    points1: &[Point],
    beta: Beta,
    closed: bool,
    tau: f64,
    exec: Exec,
) -> Result<GraphPair> {
    check_distinct(points0, 0)?;
    check_distinct(points1, 1)?;
    let one = |pts: &[Point], wit: &[Point]| {
        side_scores(pts, wit, beta, exec)
            .into_iter()
            .filter(|(_, s)| if closed { s.nu < -tau } else { s.nu <= tau })
            .map(|(e, _)| e)
            .collect::<Vec<_>>()
    };
    Ok((one(points0, points1), one(points1, points0)))
}

/// Drawing semantics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Edges iff the open region is witness-free.
    Open,
    /// Edges iff the closed region is witness-free.
    Closed,
    /// Edges have witness-free closed regions, non-edges witnessed open regions.
    Strict,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "open" => Ok(Mode::Open),
            "closed" => Ok(Mode::Closed),
            "strict" => Ok(Mode::Strict),
            _ => Err(format!(
                "unknown mode '{s}' (expected open, closed or strict)"
            )),
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Open => "open",
            Mode::Closed => "closed",
            Mode::Strict => "strict",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationKind {
    /// A non-adjacent pair has no witness.
    MissingWitness,
    /// An adjacent pair has a witness.
    ForbiddenWitness,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub side: usize,
    pub pair: (usize, usize),
    pub kind: ViolationKind,
    /// Closest witness for missing ones, deepest intruder for forbidden ones.
    pub witness: Option<usize>,
    /// Region margin of that witness, positive inside.
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Borderline {
    pub side: usize,
    pub pair: (usize, usize),
    pub witness: Option<usize>,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub mode: Mode,
    pub beta: Beta,
    pub violations: Vec<Violation>,
    /// Verdicts whose best witness sits within the tolerance of the boundary.
    pub borderline: Vec<Borderline>,
    /// Smallest normalized slack over all verdicts that passed.
    pub min_slack: f64,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check `d` against the drawing semantics `mode` at `beta`. `tau` is the
/// relative tolerance.
pub fn verify(d: &DrawingPair, beta: Beta, mode: Mode, tau: f64) -> VerificationReport {
    verify_with(d, beta, mode, tau, Exec::default())
}

pub fn verify_with(
    d: &DrawingPair,
    beta: Beta,
    mode: Mode,
    tau: f64,
    exec: Exec,
) -> VerificationReport {
    let mut violations = Vec::new();
    let mut borderline = Vec::new();
    let mut min_slack = f64::INFINITY;
    for i in 0..2 {
        let side = &d.sides[i];
        let edges: std::collections::BTreeSet<(usize, usize)> =
            side.normalized_edges().into_iter().collect();
        for ((u, v), s) in side_scores(&side.points, &d.sides[1 - i].points, beta, exec) {
            let adjacent = edges.contains(&(u, v));
            if s.witness.is_some() && s.nu.abs() <= tau {
                borderline.push(Borderline {
                    side: i,
                    pair: (u, v),
                    witness: s.witness,
                    margin: s.margin,
                });
            }
            // slack > 0 means the verdict holds
            let slack = match (mode, adjacent) {
                (Mode::Closed | Mode::Strict, true) => -tau - s.nu,
                (Mode::Open, true) => tau - s.nu,
                (Mode::Closed, false) => s.nu + tau,
                (Mode::Open | Mode::Strict, false) => s.nu - tau,
            };
            let ok = match (mode, adjacent) {
                (Mode::Closed | Mode::Strict, true) => s.nu < -tau,
                (Mode::Open, true) => s.nu <= tau,
                (Mode::Closed, false) => s.nu >= -tau,
                (Mode::Open | Mode::Strict, false) => s.nu > tau,
            };
            if ok {
                min_slack = min_slack.min(slack);
            } else {
                violations.push(Violation {
                    side: i,
                    pair: (u, v),
                    kind: if adjacent {
                        ViolationKind::ForbiddenWitness
                    } else {
                        ViolationKind::MissingWitness
                    },
                    witness: s.witness,
                    margin: s.margin,
                });
            }
        }
    }
    VerificationReport {
        mode,
        beta,
        violations,
        borderline,
        min_slack,
    }
}

/// Strict verification at every β in `betas`.
pub fn verify_universal(d: &DrawingPair, betas: &[Beta]) -> Vec<VerificationReport> {
    betas
        .iter()
        .map(|&b| verify(d, b, Mode::Strict, TAU))
        .collect()
}

/// Shape conditions of a parallelogram drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParallelogramDrawingCheck {
    pub is_parallelogram: bool,
    pub nicely_oriented_y: bool,
    pub nicely_oriented_x: bool,
    pub long_diagonal: bool,
    pub no_right_angle: bool,
    /// (i) roots at `a_i`.
    pub roots_at_a: bool,
    /// (ii) a root neighbour at `b_i`.
    pub b_adjacent: bool,
    /// (iii) other vertices strictly inside the strip.
    pub others_in_strip: bool,
    /// (iv) no vertical edge.
    pub no_vertical_edge: bool,
    pub contained: bool,
}

impl ParallelogramDrawingCheck {
    pub fn all(&self) -> bool {
        self.is_parallelogram
            && self.nicely_oriented_y
            && self.nicely_oriented_x
            && self.long_diagonal
            && self.no_right_angle
            && self.roots_at_a
            && self.b_adjacent
            && self.others_in_strip
            && self.no_vertical_edge
            && self.contained
    }
}

fn corners_of(d: &DrawingPair) -> Result<Corners> {
    d.annotations
        .corners
        .ok_or_else(|| ProximityError::MissingAnnotation("parallelogram corners".into()))
}

pub fn check_parallelogram_drawing(d: &DrawingPair) -> Result<ParallelogramDrawingCheck> {
    let c = corners_of(d)?;
    let roots = d
        .annotations
        .roots
        .ok_or_else(|| ProximityError::MissingAnnotation("roots".into()))?;
    let bv = d.annotations.b_vertices.unwrap_or([None, None]);
    let pts = d.all_points();
    // tolerances scale with the coordinates each predicate compares
    let eps = |q: &[Point]| TAU * scale_of(q);
    let close = |p: Point, q: Point| p.dist(q) <= eps(&[p, q]);
    let ck = c.to_array();

    let is_parallelogram = (c.a0 + c.a1).dist(c.b0 + c.b1) <= eps(&ck);
    let nicely_oriented_y = c.a0.y > c.b1.y && c.b1.y > c.b0.y && c.b0.y > c.a1.y;
    let nicely_oriented_x = c.a0.x < c.b0.x && c.b0.x < c.b1.x && c.b1.x < c.a1.x;
    let long_diagonal = c.a0.dist(c.a1) > c.b0.dist(c.b1);
    let no_right_angle =
        (c.b0 - c.a0).dot(c.b1 - c.a0).abs() > eps(&ck) * c.a0.dist(c.b0).max(c.a0.dist(c.b1));

    let mut roots_at_a = true;
    let mut b_adjacent = true;
    let mut others_in_strip = true;
    let mut no_vertical_edge = true;
    for i in 0..2 {
        let side = &d.sides[i];
        roots_at_a &= roots[i] < side.len() && close(side.points[roots[i]], c.a(i));
        if side.len() > 1 {
            b_adjacent &= match bv[i] {
                Some(b) => {
                    b < side.len()
                        && close(side.points[b], c.b(i))
                        && side
                            .normalized_edges()
                            .contains(&(roots[i].min(b), roots[i].max(b)))
                }
                None => false,
            };
        }
        for (k, &p) in side.points.iter().enumerate() {
            if k == roots[i] || Some(k) == bv[i] {
                continue;
            }
            let e = eps(&[p, c.b0, c.b1]);
            others_in_strip &= p.y < c.b1.y - e && p.y > c.b0.y + e;
        }
        for &(u, v) in &side.edges {
            let (p, q) = (side.points[u], side.points[v]);
            no_vertical_edge &= (p.x - q.x).abs() > eps(&[p, q]);
        }
    }
    // inside the parallelogram: left of every directed side of the
    // counterclockwise cycle a0 -> b0 -> a1 -> b1
    let cycle = [c.a0, c.b0, c.a1, c.b1];
    let contained = pts.iter().all(|&p| {
        (0..4).all(|k| {
            let (s0, s1) = (cycle[k], cycle[(k + 1) % 4]);
            (s1 - s0).cross(p - s0) >= -eps(&[p, s0, s1]) * (s1 - s0).norm()
        })
    });
    Ok(ParallelogramDrawingCheck {
        is_parallelogram,
        nicely_oriented_y,
        nicely_oriented_x,
        long_diagonal,
        no_right_angle,
        roots_at_a,
        b_adjacent,
        others_in_strip,
        no_vertical_edge,
        contained,
    })
}

/// `|y(b1) - y(b0)| / |y(a0) - y(a1)|`.
pub fn strip_ratio(d: &DrawingPair) -> Result<f64> {
    let c = corners_of(d)?;
    let h = (c.a0.y - c.a1.y).abs();
    if h == 0.0 {
        return Err(ProximityError::DegenerateInput("y(a0) = y(a1)".into()));
    }
    Ok((c.b1.y - c.b0.y).abs() / h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn path_pair(gap: f64) -> (Vec<Point>, Vec<Point>) {
        (
            vec![p(0.0, 0.0), p(1.0, 0.0), p(2.0, 0.0)],
            vec![p(0.0, -gap), p(1.0, -gap), p(2.0, -gap)],
        )
    }

    #[test]
    fn star_k0_extraction() {
        let g0 = [p(0.0, 5.0), p(0.0, 3.0)];
        let g1 = [p(2.0, 0.0), p(2.0, 2.0)];
        let (e0, e1) = extract_mw_graphs(&g0, &g1, Beta::GABRIEL, true).unwrap();
        assert_eq!(e0, vec![(0, 1)]);
        assert_eq!(e1, vec![(0, 1)]);
    }

    #[test]
    fn far_cliques_are_complete() {
        let g0 = [p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.8)];
        let g1 = [p(100.0, 0.0), p(101.0, 0.0), p(100.5, 0.8)];
        for beta in Beta::default_sample() {
            let (e0, e1) = extract_mw_graphs(&g0, &g1, beta, true).unwrap();
            assert_eq!(e0.len(), 3);
            assert_eq!(e1.len(), 3);
        }
    }

    #[test]
    fn path_pair_extraction_and_strict() {
        let (g0, g1) = path_pair(0.5);
        for closed in [false, true] {
            let (e0, e1) = extract_mw_graphs(&g0, &g1, Beta::GABRIEL, closed).unwrap();
            assert_eq!(e0, vec![(0, 1), (1, 2)]);
            assert_eq!(e1, vec![(0, 1), (1, 2)]);
        }
        let d =
            DrawingPair::from_points(g0, vec![(0, 1), (1, 2)], g1, vec![(0, 1), (1, 2)]).unwrap();
        assert!(verify(&d, Beta::GABRIEL, Mode::Strict, TAU).is_valid());
    }

    #[test]
    fn far_path_pair_misses_witnesses() {
        let (g0, g1) = path_pair(2.0);
        let d =
            DrawingPair::from_points(g0, vec![(0, 1), (1, 2)], g1, vec![(0, 1), (1, 2)]).unwrap();
        let r = verify(&d, Beta::GABRIEL, Mode::Strict, TAU);
        assert_eq!(r.violations.len(), 2);
        assert!(r
            .violations
            .iter()
            .all(|v| v.kind == ViolationKind::MissingWitness && v.pair == (0, 2)));
    }

    #[test]
    fn coincident_points_rejected() {
        let g = [p(0.0, 0.0), p(0.0, 0.0)];
        assert!(matches!(
            extract_mw_graphs(&g, &[p(1.0, 1.0)], Beta::GABRIEL, true),
            Err(ProximityError::DegenerateInput(_))
        ));
    }

    #[test]
    fn extraction_round_trips_through_verify() {
        let g0 = [p(0.0, 0.0), p(1.0, 0.3), p(2.0, -0.2), p(0.7, 1.5)];
        let g1 = [p(0.5, 0.1), p(1.4, 1.0), p(3.0, 0.0)];
        for beta in Beta::default_sample() {
            for (closed, mode) in [(true, Mode::Closed), (false, Mode::Open)] {
                let (e0, e1) = extract_mw_graphs(&g0, &g1, beta, closed).unwrap();
                let d = DrawingPair::from_points(g0.to_vec(), e0, g1.to_vec(), e1).unwrap();
                assert!(verify(&d, beta, mode, TAU).is_valid());
            }
        }
    }

    #[test]
    fn invalid_drawings_rejected() {
        assert!(DrawingPair::from_points(vec![p(0.0, 0.0)], vec![(0, 1)], vec![], vec![]).is_err());
        assert!(DrawingPair::from_points(
            vec![p(0.0, 0.0), p(1.0, 0.0)],
            vec![(0, 1), (1, 0)],
            vec![],
            vec![]
        )
        .is_err());
        assert!(DrawingPair::from_points(vec![p(f64::NAN, 0.0)], vec![], vec![], vec![]).is_err());
    }

    fn base_case() -> DrawingPair {
        let mut d =
            DrawingPair::from_points(vec![p(0.0, 3.0)], vec![], vec![p(3.0, 0.0)], vec![]).unwrap();
        d.annotations.corners = Some(Corners {
            a0: p(0.0, 3.0),
            b0: p(1.0, 1.0),
            a1: p(3.0, 0.0),
            b1: p(2.0, 2.0),
        });
        d.annotations.roots = Some([0, 0]);
        d
    }

    #[test]
    fn strip_ratio_examples() {
        let mut d = base_case();
        assert!((strip_ratio(&d).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        d.annotations.corners = Some(Corners {
            a0: p(0.0, 1.0),
            b0: p(1.0, 1.0),
            a1: p(3.0, 1.0),
            b1: p(2.0, 1.0),
        });
        assert!(strip_ratio(&d).is_err());
        d.annotations.corners = None;
        assert!(matches!(
            strip_ratio(&d),
            Err(ProximityError::MissingAnnotation(_))
        ));
    }

    #[test]
    fn base_case_parallelogram_check() {
        let c = check_parallelogram_drawing(&base_case()).unwrap();
        assert!(c.all(), "{c:?}");
    }

    #[test]
    fn vertical_edge_detected() {
        let mut d = DrawingPair::from_points(
            vec![p(0.0, 3.0), p(1.0, 1.0), p(1.0, 1.5)],
            vec![(0, 1), (1, 2)],
            vec![p(3.0, 0.0), p(2.0, 2.0), p(1.5, 1.2)],
            vec![(0, 1), (1, 2)],
        )
        .unwrap();
        d.annotations = base_case().annotations;
        d.annotations.b_vertices = Some([Some(1), Some(1)]);
        let c = check_parallelogram_drawing(&d).unwrap();
        assert!(!c.no_vertical_edge);
    }
}
