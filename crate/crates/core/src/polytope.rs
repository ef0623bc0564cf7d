//! Convex polygons in the `(α₁, α₂)` plane given as half-plane intersections.

use crate::mpa::FEASIBILITY_EPS;

/// `a · x ≤ b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    pub a: [f64; 2],
    pub b: f64,
}

impl HalfPlane {
    pub fn new(a1: f64, a2: f64, b: f64) -> Self {
        Self { a: [a1, a2], b }
    }

    fn slack(&self, p: [f64; 2]) -> f64 {
        self.b - (self.a[0] * p[0] + self.a[1] * p[1])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    constraints: Vec<HalfPlane>,
    vertices: Vec<[f64; 2]>,
}

impl Polytope {
    pub fn new(constraints: Vec<HalfPlane>) -> Self {
        let vertices = enumerate_vertices(&constraints);
        Self { constraints, vertices }
    }

    /// Feasible power fractions of a pair given the MPA quantities:
    /// `α₁ ≥ η + κα₂`, `α₂ ≥ α₂^lb`, `0 ≤ α₁, α₂ ≤ 1`.
    pub fn allocation(eta: f64, kappa: f64, alpha2_lb: f64) -> Self {
        Self::new(vec![
            HalfPlane::new(-1.0, kappa, -eta),
            HalfPlane::new(0.0, -1.0, -alpha2_lb),
            HalfPlane::new(1.0, 0.0, 1.0),
            HalfPlane::new(0.0, 1.0, 1.0),
            HalfPlane::new(-1.0, 0.0, 0.0),
            HalfPlane::new(0.0, -1.0, 0.0),
        ])
    }

    pub fn constraints(&self) -> &[HalfPlane] {
        &self.constraints
    }

    /// Vertices in counter-clockwise order.
    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Boundary segments between consecutive vertices. A polygon collapsed to
    /// a segment yields that single segment; a single point yields none.
    pub fn edges(&self) -> Vec<([f64; 2], [f64; 2])> {
        match self.vertices.len() {
            0 | 1 => Vec::new(),
            2 => vec![(self.vertices[0], self.vertices[1])],
            n => (0..n).map(|i| (self.vertices[i], self.vertices[(i + 1) % n])).collect(),
        }
    }

    pub fn contains(&self, p: [f64; 2], eps: f64) -> bool {
        self.constraints.iter().all(|h| h.slack(p) >= -eps)
    }
}

fn enumerate_vertices(constraints: &[HalfPlane]) -> Vec<[f64; 2]> {
    let mut points: Vec<[f64; 2]> = Vec::new();
    for (i, h) in constraints.iter().enumerate() {
        for g in &constraints[i + 1..] {
            let det = h.a[0] * g.a[1] - h.a[1] * g.a[0];
            if det.abs() < 1e-14 {
                continue;
            }
            let x = (h.b * g.a[1] - h.a[1] * g.b) / det;
            let y = (h.a[0] * g.b - h.b * g.a[0]) / det;
            let p = [x, y];
            if !x.is_finite() || !y.is_finite() {
                continue;
            }
            if constraints.iter().all(|c| c.slack(p) >= -FEASIBILITY_EPS)
                && !points.iter().any(|q| (q[0] - x).abs() < 1e-12 && (q[1] - y).abs() < 1e-12)
            {
                points.push(p);
            }
        }
    }
    if points.len() > 2 {
        let n = points.len() as f64;
        let cx = points.iter().map(|p| p[0]).sum::<f64>() / n;
        let cy = points.iter().map(|p| p[1]).sum::<f64>() / n;
        points.sort_by(|p, q| {
            let ap = (p[1] - cy).atan2(p[0] - cx);
            let aq = (q[1] - cy).atan2(q[0] - cx);
            ap.total_cmp(&aq)
        });
    }
    points
}
