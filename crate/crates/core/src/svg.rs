//! Deterministic SVG 1.1 rendering of drawing pairs.

use std::fmt::Write;

use crate::geometry::{Beta, Point};
use crate::proximity::DrawingPair;

const WIDTH: f64 = 800.0;
const PAD: f64 = 0.05;
const COLORS: [&str; 2] = ["#1f5fbf", "#c8442a"];

/// Which pairs get a β-region overlay.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum RegionPairs {
    /// Every edge of both sides.
    #[default]
    Edges,
    /// Explicit `(side, i, j)` point-index pairs.
    Pairs(Vec<(usize, usize, usize)>),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SvgOptions {
    pub regions: Option<(Beta, RegionPairs)>,
    pub separating_line: bool,
    pub parallelogram: bool,
}

struct View {
    min: Point,
    max: Point,
    k: f64,
    height: f64,
}

impl View {
    fn fit(points: &[Point]) -> View {
        let (mut min, mut max) = (
            Point::new(f64::INFINITY, f64::INFINITY),
            Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        );
        for p in points {
            min = Point::new(min.x.min(p.x), min.y.min(p.y));
            max = Point::new(max.x.max(p.x), max.y.max(p.y));
        }
        if points.is_empty() {
            min = Point::new(0.0, 0.0);
            max = Point::new(1.0, 1.0);
        }
        let span = (max.x - min.x).max(max.y - min.y).max(1e-12);
        let pad = PAD * span;
        min = Point::new(min.x - pad, min.y - pad);
        max = Point::new(max.x + pad, max.y + pad);
        let w = (max.x - min.x).max(1e-12);
        let k = WIDTH / w;
        View {
            min,
            max,
            k,
            height: ((max.y - min.y) * k).max(1.0),
        }
    }

    fn map(&self, p: Point) -> Point {
        Point::new((p.x - self.min.x) * self.k, (self.max.y - p.y) * self.k)
    }

    fn diagonal(&self) -> f64 {
        self.min.dist(self.max)
    }
}

fn f(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn line(out: &mut String, a: Point, b: Point, class: &str) {
    let _ = writeln!(
        out,
        r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        f(a.x),
        f(a.y),
        f(b.x),
        f(b.y)
    );
}

fn polygon(out: &mut String, pts: &[Point], class: &str) {
    let list: Vec<String> = pts
        .iter()
        .map(|p| format!("{},{}", f(p.x), f(p.y)))
        .collect();
    let _ = writeln!(
        out,
        r#"<polygon class="{class}" points="{}"/>"#,
        list.join(" ")
    );
}

/// Region outline in screen coordinates.
fn region(out: &mut String, v: &View, p: Point, q: Point, beta: Beta, class: &str) {
    if p == q {
        return;
    }
    match beta {
        Beta::Finite(1.0) => {
            let c = v.map(p.lerp(q, 0.5));
            let r = p.dist(q) / 2.0 * v.k;
            let _ = writeln!(
                out,
                r#"<circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
                f(c.x),
                f(c.y),
                f(r)
            );
        }
        Beta::Finite(b) => {
            let (sp, sq) = (v.map(p), v.map(q));
            let len = sp.dist(sq);
            let r = b * len / 2.0;
            let d = (b - 1.0) * len;
            let a = (r * r - d * d / 4.0).max(0.0).sqrt();
            let m = sp.lerp(sq, 0.5);
            let u = (sq - sp) * (1.0 / len);
            let n = Point::new(-u.y, u.x);
            let (top, bottom) = (m + n * a, m - n * a);
            // each arc is the minor arc of the disk through the opposite end
            let c_p = sp + (sq - sp) * (b / 2.0);
            let c_q = sp + (sq - sp) * (1.0 - b / 2.0);
            let sweep = |from: Point, to: Point, c: Point| u8::from((from - c).cross(to - c) > 0.0);
            let _ = writeln!(
                out,
                r#"<path class="{class}" d="M {} {} A {} {} 0 0 {} {} {} A {} {} 0 0 {} {} {} Z"/>"#,
                f(top.x),
                f(top.y),
                f(r),
                f(r),
                sweep(top, bottom, c_p),
                f(bottom.x),
                f(bottom.y),
                f(r),
                f(r),
                sweep(bottom, top, c_q),
                f(top.x),
                f(top.y),
            );
        }
        Beta::Infinite => {
            let u = (q - p) * (1.0 / p.dist(q));
            let n = Point::new(-u.y, u.x) * (2.0 * v.diagonal());
            let pts = [p + n, q + n, q - n, p - n].map(|x| v.map(x));
            polygon(out, &pts, class);
        }
    }
}

/// Render `d` as a standalone SVG document. Identical inputs give
/// byte-identical output.
pub fn render_svg(d: &DrawingPair, options: &SvgOptions) -> String {
    let a = &d.annotations;
    let mut extent = d.all_points();
    if options.parallelogram {
        if let Some(c) = a.corners {
            extent.extend(c.to_array());
        }
    }
    let v = View::fit(&extent);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = f(WIDTH),
        h = f(v.height)
    );
    let _ = writeln!(out, "<style>");
    for (i, c) in COLORS.iter().enumerate() {
        let _ = writeln!(out, ".edge{i} {{ stroke: {c}; stroke-width: 1.5; }}");
        let _ = writeln!(out, ".vertex{i} {{ fill: {c}; }}");
        let _ = writeln!(out, ".region{i} {{ fill: {c}; fill-opacity: 0.08; stroke: {c}; stroke-opacity: 0.4; stroke-width: 0.5; }}");
    }
    let _ = writeln!(
        out,
        ".sep {{ stroke: #444; stroke-dasharray: 6 4; stroke-width: 1; }}"
    );
    let _ = writeln!(
        out,
        ".outline {{ fill: none; stroke: #888; stroke-width: 1; }}"
    );
    let _ = writeln!(out, "</style>");
    let _ = writeln!(
        out,
        r#"<clipPath id="view"><rect x="0" y="0" width="{}" height="{}"/></clipPath>"#,
        f(WIDTH),
        f(v.height)
    );

    if let Some((beta, pairs)) = &options.regions {
        let _ = writeln!(out, r#"<g id="regions" clip-path="url(#view)">"#);
        let list: Vec<(usize, usize, usize)> = match pairs {
            RegionPairs::Edges => (0..2)
                .flat_map(|i| d.sides[i].edges.iter().map(move |&(u, w)| (i, u, w)))
                .collect(),
            RegionPairs::Pairs(p) => p.clone(),
        };
        for (i, u, w) in list {
            let pts = d.sides.get(i).map(|s| &s.points);
            if let Some((&p, &q)) = pts.and_then(|s| s.get(u).zip(s.get(w))) {
                region(&mut out, &v, p, q, *beta, &format!("region{i}"));
            }
        }
        let _ = writeln!(out, "</g>");
    }
    if options.parallelogram {
        if let Some(c) = a.corners {
            polygon(
                &mut out,
                &[c.a0, c.b1, c.a1, c.b0].map(|p| v.map(p)),
                "outline",
            );
        }
    }
    if options.separating_line {
        if let Some(l) = a.separating_line {
            let dir = l.dir * (2.0 * v.diagonal() / l.dir.norm());
            let _ = writeln!(out, r#"<g clip-path="url(#view)">"#);
            line(&mut out, v.map(l.point - dir), v.map(l.point + dir), "sep");
            let _ = writeln!(out, "</g>");
        }
    }
    for (i, s) in d.sides.iter().enumerate() {
        let _ = writeln!(out, r#"<g id="side{i}">"#);
        for &(u, w) in &s.edges {
            line(
                &mut out,
                v.map(s.points[u]),
                v.map(s.points[w]),
                &format!("edge{i}"),
            );
        }
        for (p, id) in s.points.iter().zip(&s.ids) {
            let sp = v.map(*p);
            let _ = writeln!(
                out,
                r#"<circle class="vertex{i}" cx="{}" cy="{}" r="3"><title>{i}:{id}</title></circle>"#,
                f(sp.x),
                f(sp.y)
            );
        }
        let _ = writeln!(out, "</g>");
    }
    let _ = writeln!(out, "</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{draw_caterpillar_pair, draw_star_pair};
    use crate::tree_model::{caterpillar_decompose, gen_random_caterpillar};

    fn caterpillar(seed: u64) -> DrawingPair {
        let t = gen_random_caterpillar(4, &[2, 0, 3, 1], seed).unwrap();
        draw_caterpillar_pair(&caterpillar_decompose(&t).unwrap()).unwrap()
    }

    fn count(s: &str, pat: &str) -> usize {
        s.matches(pat).count()
    }

    #[test]
    fn two_color_classes() {
        let d = draw_star_pair(3).unwrap().drawing;
        let s = render_svg(&d, &SvgOptions::default());
        assert!(s.starts_with("<?xml"));
        assert!(s.trim_end().ends_with("</svg>"));
        assert_eq!(count(&s, r#"class="vertex0""#), d.sides[0].len());
        assert_eq!(count(&s, r#"class="vertex1""#), d.sides[1].len());
        assert_eq!(count(&s, r#"class="edge0""#), d.sides[0].edges.len());
        assert_eq!(count(&s, r#"class="edge1""#), d.sides[1].edges.len());
    }

    #[test]
    fn deterministic() {
        let d = caterpillar(4);
        let o = SvgOptions {
            regions: Some((Beta::GABRIEL, RegionPairs::Edges)),
            separating_line: true,
            parallelogram: true,
        };
        assert_eq!(render_svg(&d, &o), render_svg(&d.clone(), &o));
    }

    #[test]
    fn gabriel_overlay_is_one_circle_per_pair() {
        let d = draw_star_pair(2).unwrap().drawing;
        let pairs = vec![(0, 0, 1), (1, 0, 2), (0, 1, 2)];
        let o = SvgOptions {
            regions: Some((Beta::GABRIEL, RegionPairs::Pairs(pairs))),
            ..Default::default()
        };
        let s = render_svg(&d, &o);
        assert_eq!(count(&s, r#"<circle class="region"#), 3);
    }

    #[test]
    fn lens_and_slab_overlays() {
        let d = draw_star_pair(2).unwrap().drawing;
        let edges = d.sides[0].edges.len() + d.sides[1].edges.len();
        let lens = render_svg(
            &d,
            &SvgOptions {
                regions: Some((Beta::Finite(2.0), RegionPairs::Edges)),
                ..Default::default()
            },
        );
        assert_eq!(count(&lens, r#"<path class="region"#), edges);
        let slab = render_svg(
            &d,
            &SvgOptions {
                regions: Some((Beta::Infinite, RegionPairs::Edges)),
                ..Default::default()
            },
        );
        assert_eq!(count(&slab, r#"<polygon class="region"#), edges);
    }

    #[test]
    fn outline_and_separating_line() {
        let d = caterpillar(1);
        let o = SvgOptions {
            separating_line: true,
            parallelogram: true,
            ..Default::default()
        };
        let s = render_svg(&d, &o);
        assert_eq!(
            count(&s, r#"class="outline""#),
            usize::from(d.annotations.corners.is_some())
        );
        assert_eq!(
            count(&s, r#"class="sep""#),
            usize::from(d.annotations.separating_line.is_some())
        );
    }

    #[test]
    fn empty_drawing() {
        let d = DrawingPair::from_points(vec![], vec![], vec![], vec![]).unwrap();
        assert!(render_svg(&d, &SvgOptions::default()).contains("</svg>"));
    }
}
