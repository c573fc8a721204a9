use crate::{log_se3, SE3Element, Se3Error};

/// The squared weighted modulus |g|² of a rigid motion, an anisotropic homogeneous
/// norm built from the logarithm coefficients c = log g:
///
/// ```text
/// |g|² = √( (|c¹|²+|c²|²)/(D³³D⁴⁴) + |c⁶|²/D⁴⁴ + ( (c³)²/D³³ + (|c⁴|²+|c⁵|²)/D⁴⁴ )² )
/// ```
///
/// The lateral (c¹, c²) and fiber-twist (c⁶) coefficients enter with twice the
/// homogeneity degree of the along-fiber (c³) and tilt (c⁴, c⁵) coefficients,
/// reflecting that the former are only reachable via commutators. Propagates the
/// logarithm's branch error.
pub fn weighted_modulus_squared(g: &SE3Element, d33: f64, d44: f64) -> Result<f64, Se3Error> {
    let c = log_se3(g)?;
    let sq = |a: f64| a * a;
    let principal = sq(c[2]) / d33 + (sq(c[3]) + sq(c[4])) / d44;
    Ok(
        ((sq(c[0]) + sq(c[1])) / (d33 * d44) + sq(c[5]) / d44 + principal * principal)
            .sqrt(),
    )
}

/// The weighted modulus |g| = √(|g|²); see [`weighted_modulus_squared`].
pub fn weighted_modulus(g: &SE3Element, d33: f64, d44: f64) -> Result<f64, Se3Error> {
    Ok(weighted_modulus_squared(g, d33, d44)?.sqrt())
}
