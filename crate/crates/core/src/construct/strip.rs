use crate::geometry::{Beta, TAU};
use crate::proximity::{strip_ratio, verify, DrawingPair, Mode, ProximityError};

use super::{ConstructError, Result};

/// Room left below `eps` so that the new ratio is strictly smaller.
const UNDERSHOOT: f64 = 0.9;
const MAX_DOUBLINGS: usize = 60;

/// Strict violations at the two extreme regions; together they decide every
/// β in between.
fn verdicts(d: &DrawingPair) -> Vec<(Beta, usize, (usize, usize))> {
    [Beta::GABRIEL, Beta::Infinite]
        .into_iter()
        .flat_map(|b| {
            verify(d, b, Mode::Strict, TAU)
                .violations
                .into_iter()
                .map(move |v| (b, v.side, v.pair))
        })
        .collect()
}

/// Move both roots outward along the rays `b_i a_i`, by the same factor,
/// until the strip ratio drops below `eps`. Drawings that already satisfy
/// the bound come back unchanged.
///
/// The witness of a root non-edge can change hands while the roots travel,
/// so the factor is doubled until the verdicts match the input again.
pub fn lower_strip_ratio(d: &DrawingPair, eps: f64) -> Result<DrawingPair> {
    if !(eps > 0.0) {
        return Err(ConstructError::InvalidEps(eps));
    }
    if strip_ratio(d)? < eps {
        return Ok(d.clone());
    }
    let c = d
        .annotations
        .corners
        .expect("strip_ratio checked the corners");
    let roots = d
        .annotations
        .roots
        .ok_or_else(|| ProximityError::MissingAnnotation("roots".into()))?;
    // with a_i' = b_i + λ(a_i - b_i) the height becomes λ(h + s) - s
    let h = c.a0.y - c.a1.y;
    let s = c.b1.y - c.b0.y;
    let mut lambda = (s / (UNDERSHOOT * eps) + s) / (h + s);
    let before = verdicts(d);
    for _ in 0..MAX_DOUBLINGS {
        let mut out = d.clone();
        let mut corners = c;
        corners.a0 = c.b0 + (c.a0 - c.b0) * lambda;
        corners.a1 = c.b1 + (c.a1 - c.b1) * lambda;
        out.sides[0].points[roots[0]] = corners.a0;
        out.sides[1].points[roots[1]] = corners.a1;
        out.annotations.corners = Some(corners);
        if verdicts(&out) == before {
            return Ok(out);
        }
        lambda *= 2.0;
    }
    Err(ConstructError::DegenerateGeometry(format!(
        "no root distance keeps the verdicts below strip ratio {eps}"
    )))
}
