use nalgebra::{Matrix3, Vector3};

use crate::tessellation::Tessellation;

/// Barycentric interpolation data for one query direction: the containing
/// triangle and a convex weight for each of its three vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpolationWeights {
    /// Index of the containing triangle.
    pub triangle: usize,
    /// `(vertex index, weight)` pairs; weights are ≥ 0 and sum to 1.
    pub entries: [(usize, f64); 3],
}

impl InterpolationWeights {
    /// Applies the weights to a per-vertex value array.
    pub fn apply(&self, values: &[f64]) -> f64 {
        self.entries.iter().map(|&(k, w)| w * values[k]).sum()
    }
}

/// Sign tolerance for the containment test: a point on a shared edge must be
/// accepted by both incident triangles so the scan can pick the first.
const CONTAINMENT_SLACK: f64 = 1e-12;

/// Locates the spherical triangle containing the unit direction `n` and
/// returns normalized barycentric weights of its radial projection onto the
/// triangle plane.
///
/// Triangles are scanned in storage order and the first containing one wins,
/// which assigns boundary directions deterministically to the lowest-index
/// incident triangle. Weights reproduce constants exactly (they sum to 1) and
/// are exact for functions linear in `n` on the planar triangle.
pub fn interpolate(t: &Tessellation, n: &Vector3<f64>) -> InterpolationWeights {
    let vertices = t.vertices();
    let mut best = (f64::NEG_INFINITY, 0);
    let mut hit = None;
    for (idx, tri) in t.triangles().iter().enumerate() {
        let a = &vertices[tri[0]];
        let b = &vertices[tri[1]];
        let c = &vertices[tri[2]];
        // n lies in the spherical triangle when it is on the positive side of
        // the three great-circle planes spanned by consecutive corners.
        let d0 = a.cross(b).dot(n);
        let d1 = b.cross(c).dot(n);
        let d2 = c.cross(a).dot(n);
        let worst = d0.min(d1).min(d2);
        if worst >= -CONTAINMENT_SLACK {
            hit = Some(idx);
            break;
        }
        if worst > best.0 {
            best = (worst, idx);
        }
    }
    // Fall back to the least-violating triangle; only reachable through
    // accumulated rounding on triangle borders.
    let idx = hit.unwrap_or(best.1);
    let tri = t.triangles()[idx];
    let m = Matrix3::from_columns(&[
        vertices[tri[0]],
        vertices[tri[1]],
        vertices[tri[2]],
    ]);
    let raw = m
        .lu()
        .solve(n)
        .expect("tessellation triangle corners are linearly independent");
    let clamped = Vector3::new(raw.x.max(0.0), raw.y.max(0.0), raw.z.max(0.0));
    let sum = clamped.x + clamped.y + clamped.z;
    let w = clamped / sum;
    InterpolationWeights {
        triangle: idx,
        entries: [(tri[0], w.x), (tri[1], w.y), (tri[2], w.z)],
    }
}
