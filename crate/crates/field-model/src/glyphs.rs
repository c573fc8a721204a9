use std::io::Write;

use crate::error::FieldError;
use crate::field::OrientationField;

/// Exports glyph geometry for the requested voxels as CSV text.
///
/// Each direction sample of each voxel yields one record
/// `voxel,l,x,y,z` with the point `y_c + μ·U(y_c, n_l)·n_l`, where `y_c` is
/// the voxel center (grid index times spacing) and `voxel` is the flat voxel
/// index `(x·Ny + y)·Nz + z`. Triangle connectivity is shared by all glyphs
/// and available from the tessellation.
pub fn export_glyphs<W: Write>(
    field: &OrientationField,
    mu: f64,
    voxels: &[(usize, usize, usize)],
    out: &mut W,
) -> Result<(), FieldError> {
    assert!(mu > 0.0, "glyph scale must be positive");
    let (_, ny, nz) = field.dims();
    let h = field.spacing();
    let dirs = field.tessellation().vertices();
    writeln!(out, "voxel,l,x,y,z")?;
    for &(x, y, z) in voxels {
        let flat = (x * ny + y) * nz + z;
        let center = [x as f64 * h, y as f64 * h, z as f64 * h];
        for (l, n) in dirs.iter().enumerate() {
            let r = mu * field.get(x, y, z, l);
            writeln!(
                out,
                "{flat},{l},{},{},{}",
                center[0] + r * n.x,
                center[1] + r * n.y,
                center[2] + r * n.z
            )?;
        }
    }
    Ok(())
}
