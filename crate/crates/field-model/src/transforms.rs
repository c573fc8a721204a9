use crate::error::FieldError;
use crate::field::OrientationField;

/// Per-voxel min–max normalization followed by squaring:
/// `V(y, n) = ((U(y,n) − min_n U(y,·)) / (max_n U(y,·) − min_n U(y,·)))²`.
///
/// A voxel whose values are all equal carries no orientation contrast and is
/// mapped to zero. The output lies in [0, 1] and the per-voxel argmax over
/// directions is preserved.
pub fn minmax_sharpen(field: &OrientationField) -> OrientationField {
    let mut out = field.clone();
    let n = field.direction_count();
    for chunk in out.data_mut().chunks_exact_mut(n) {
        let lo = chunk.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = chunk.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if hi > lo {
            let scale = 1.0 / (hi - lo);
            for v in chunk.iter_mut() {
                let t = (*v - lo) * scale;
                *v = t * t;
            }
        } else {
            chunk.fill(0.0);
        }
    }
    out
}

/// Pointwise power `U ↦ Uᵖ` for `p ≥ 1` on a non-negative field.
///
/// Raising to a power ≥ 1 sharpens the orientation profile while preserving
/// the ordering of values.
pub fn power_transform(field: &OrientationField, p: f64) -> Result<OrientationField, FieldError> {
    if !(p >= 1.0) {
        return Err(FieldError::InvalidExponent { exponent: p });
    }
    if let Some((index, &value)) = field.data().iter().enumerate().find(|&(_, &v)| v < 0.0) {
        return Err(FieldError::NegativeInput { index, value });
    }
    let mut out = field.clone();
    for v in out.data_mut() {
        *v = v.powf(p);
    }
    Ok(out)
}
