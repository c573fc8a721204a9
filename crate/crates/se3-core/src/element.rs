use nalgebra::{Matrix4, Vector3};

use crate::Rotation;

/// A rigid body motion g = (x, R): the rotation R followed by the translation x.
///
/// The group product is `(x, R)(x′, R′) = (x + R x′, R R′)` and the inverse is
/// `(−Rᵀx, Rᵀ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SE3Element {
    /// Translation part, in length units.
    pub x: Vector3<f64>,
    /// Rotation part.
    pub r: Rotation,
}

impl SE3Element {
    /// Builds an element from its translation and rotation parts.
    pub fn new(x: Vector3<f64>, r: Rotation) -> Self {
        Self { x, r }
    }

    /// The group identity e = (0, I).
    pub fn identity() -> Self {
        Self {
            x: Vector3::zeros(),
            r: Rotation::identity(),
        }
    }

    /// A pure translation (x, I).
    pub fn from_translation(x: Vector3<f64>) -> Self {
        Self {
            x,
            r: Rotation::identity(),
        }
    }

    /// A pure rotation (0, R).
    pub fn from_rotation(r: Rotation) -> Self {
        Self {
            x: Vector3::zeros(),
            r,
        }
    }

    /// Two-sided group inverse (−Rᵀx, Rᵀ).
    pub fn inverse(&self) -> Self {
        let rt = self.r.inverse();
        Self {
            x: -(rt * self.x),
            r: rt,
        }
    }

    /// Action on a point: g · y = x + R y.
    pub fn act(&self, y: &Vector3<f64>) -> Vector3<f64> {
        self.x + self.r * y
    }

    /// The element as a 4×4 homogeneous transformation matrix.
    pub fn to_homogeneous(&self) -> Matrix4<f64> {
        let mut h = Matrix4::identity();
        h.fixed_view_mut::<3, 3>(0, 0).copy_from(self.r.matrix());
        h.fixed_view_mut::<3, 1>(0, 3).copy_from(&self.x);
        h
    }
}

/// Group product: the concatenation of two rigid body motions,
/// `(x, R)(x′, R′) = (x + R x′, R R′)`.
pub fn compose(g: &SE3Element, g_prime: &SE3Element) -> SE3Element {
    SE3Element {
        x: g.x + g.r * g_prime.x,
        r: g.r * g_prime.r,
    }
}
