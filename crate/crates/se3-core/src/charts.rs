use nalgebra::{Matrix3, Vector3};

use crate::{Rotation, Se3Error};

/// Below this squared norm of the (n¹, n²) components a normal counts as axial
/// (n = ±e_z) for [`rotation_onto`].
const AXIAL_THRESHOLD: f64 = 1e-18;

/// Norm of (n², n³) below which a normal sits on the second chart's singular locus
/// (n ≈ ±e_x).
const NORMAL_SINGULARITY: f64 = 1e-9;

/// Margin used when the first chart's extraction detects sin β ≈ 0.
const CHART1_SINGULARITY: f64 = 1e-9;

fn rot_x(angle: f64) -> Rotation {
    Rotation::from_axis_angle(&Vector3::x_axis(), angle)
}

fn rot_y(angle: f64) -> Rotation {
    Rotation::from_axis_angle(&Vector3::y_axis(), angle)
}

fn rot_z(angle: f64) -> Rotation {
    Rotation::from_axis_angle(&Vector3::z_axis(), angle)
}

/// First Euler chart (ZYZ order): R = R_{e_z,γ} · R_{e_y,β} · R_{e_z,α} with
/// β ∈ [0, π], singular at β ∈ {0, π}.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EulerAngles1 {
    /// Innermost rotation angle α about e_z, in radians.
    pub alpha: f64,
    /// Middle rotation angle β about e_y, in [0, π].
    pub beta: f64,
    /// Outermost rotation angle γ about e_z, in radians.
    pub gamma: f64,
}

impl EulerAngles1 {
    /// Extracts the chart angles from a rotation matrix.
    ///
    /// In this order the matrix has third column (cos γ sin β, sin γ sin β, cos β)
    /// and third row (−sin β cos α, sin β sin α, cos β), which yields all three
    /// angles by atan2. Errors with [`Se3Error::ChartSingularity`] when sin β ≈ 0
    /// (α and γ are then not separately defined).
    pub fn from_rotation(r: &Rotation) -> Result<Self, Se3Error> {
        let m = r.matrix();
        let sin_beta = (m[(0, 2)] * m[(0, 2)] + m[(1, 2)] * m[(1, 2)]).sqrt();
        if sin_beta < CHART1_SINGULARITY {
            return Err(Se3Error::ChartSingularity {
                context: "first chart at β ∈ {0, π}",
            });
        }
        Ok(Self {
            alpha: m[(2, 1)].atan2(-m[(2, 0)]),
            beta: sin_beta.atan2(m[(2, 2)]),
            gamma: m[(1, 2)].atan2(m[(0, 2)]),
        })
    }

    /// Reconstructs the rotation R = R_{e_z,γ} · R_{e_y,β} · R_{e_z,α}.
    pub fn to_rotation(&self) -> Rotation {
        rot_z(self.gamma) * rot_y(self.beta) * rot_z(self.alpha)
    }
}

/// Second Euler chart (XYZ order): R = R_{e_x,γ̃} · R_{e_y,β̃} · R_{e_z,α̃} with
/// β̃ ∈ [−π, π), γ̃ ∈ (−π/2, π/2); singular at β̃ = ±π/2.
///
/// The third column of R equals the normal ñ(β̃, γ̃) =
/// (sin β̃, −cos β̃ sin γ̃, cos β̃ cos γ̃), independent of α̃; this is the chart used
/// for orientation coordinates on the sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EulerAngles2 {
    /// Fiber angle α̃ about e_z (innermost), in radians.
    pub alpha: f64,
    /// Angle β̃ about e_y, in [−π, π).
    pub beta: f64,
    /// Angle γ̃ about e_x (outermost), in (−π/2, π/2].
    pub gamma: f64,
}

impl EulerAngles2 {
    /// Extracts the chart angles from a rotation matrix.
    ///
    /// (β̃, γ̃) come from [`angles_from_normal`] applied to the third column; α̃ is
    /// then read off R_{e_z,α̃} = R_{e_y,−β̃} R_{e_x,−γ̃} R. Errors with
    /// [`Se3Error::ChartSingularity`] for normals with (n², n³) ≈ (0, 0).
    pub fn from_rotation(r: &Rotation) -> Result<Self, Se3Error> {
        let m = r.matrix();
        let n = Vector3::new(m[(0, 2)], m[(1, 2)], m[(2, 2)]);
        let partial = angles_from_normal(&n)?;
        let residual = rot_y(-partial.beta) * rot_x(-partial.gamma) * r;
        let rm = residual.matrix();
        Ok(Self {
            alpha: rm[(1, 0)].atan2(rm[(0, 0)]),
            beta: partial.beta,
            gamma: partial.gamma,
        })
    }

    /// Reconstructs the rotation R = R_{e_x,γ̃} · R_{e_y,β̃} · R_{e_z,α̃}.
    pub fn to_rotation(&self) -> Rotation {
        rot_x(self.gamma) * rot_y(self.beta) * rot_z(self.alpha)
    }
}

/// The unit normal ñ(β̃, γ̃) = (sin β̃, −cos β̃ sin γ̃, cos β̃ cos γ̃) of the second
/// chart (the third column of its rotations, independent of α̃).
pub fn normal_from_angles(beta: f64, gamma: f64) -> Vector3<f64> {
    let (sb, cb) = beta.sin_cos();
    let (sg, cg) = gamma.sin_cos();
    Vector3::new(sb, -cb * sg, cb * cg)
}

/// Recovers the second-chart angles (β̃, γ̃) of a unit normal, with the fiber angle
/// α̃ fixed to 0.
///
/// The inversion sets σ = +1 for n³ ≥ 0 and −1 otherwise, so that
/// cos β̃ = σ·√((n²)² + (n³)²) carries the sign required by γ̃ ∈ (−π/2, π/2]; then
/// β̃ = atan2(n¹, σ√((n²)²+(n³)²)) and γ̃ = atan2(−σn², σn³). This reconstructs
/// ñ(β̃, γ̃) = n exactly on both hemispheres.
///
/// Errors with [`Se3Error::ChartSingularity`] for n ≈ ±e_x, where the chart
/// degenerates ((n², n³) ≈ 0).
pub fn angles_from_normal(n: &Vector3<f64>) -> Result<EulerAngles2, Se3Error> {
    let r = (n.y * n.y + n.z * n.z).sqrt();
    if r < NORMAL_SINGULARITY {
        return Err(Se3Error::ChartSingularity {
            context: "second chart at n = ±e_x",
        });
    }
    let sigma = if n.z >= 0.0 { 1.0 } else { -1.0 };
    let mut beta = n.x.atan2(sigma * r);
    if beta >= std::f64::consts::PI {
        beta -= 2.0 * std::f64::consts::PI;
    }
    let gamma = (-sigma * n.y).atan2(sigma * n.z);
    Ok(EulerAngles2 {
        alpha: 0.0,
        beta,
        gamma,
    })
}

/// The rotation R_n with R_n e_z = n, built without trigonometric functions.
///
/// For (n¹, n²) ≠ (0, 0) this is the rational closed form (the rotation about
/// e_z × n by the angle between e_z and n), with s = (n¹)² + (n²)²:
///
/// ```text
///        ( ((n²)² + (n¹)²n³)/s   n¹n²(n³−1)/s          n¹ )
/// R_n =  ( n¹n²(n³−1)/s          ((n¹)² + (n²)²n³)/s   n² )
///        ( −n¹                   −n²                   n³ )
/// ```
///
/// The axial cases return I for n = e_z and the proper rotation
/// R_{e_x,π} = diag(1, −1, −1) for n = −e_z (any rotation mapping e_z to −e_z is
/// admissible for quotient operations; a reflection is not).
pub fn rotation_onto(n: &Vector3<f64>) -> Rotation {
    let n = n.normalize();
    let s = n.x * n.x + n.y * n.y;
    if s <= AXIAL_THRESHOLD {
        if n.z >= 0.0 {
            return Rotation::identity();
        }
        return Rotation::from_matrix_unchecked(Matrix3::new(
            1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, -1.0,
        ));
    }
    let m = Matrix3::new(
        (n.y * n.y + n.x * n.x * n.z) / s,
        n.x * n.y * (n.z - 1.0) / s,
        n.x,
        n.x * n.y * (n.z - 1.0) / s,
        (n.x * n.x + n.y * n.y * n.z) / s,
        n.y,
        -n.x,
        -n.y,
        n.z,
    );
    Rotation::from_matrix_unchecked(m)
}
