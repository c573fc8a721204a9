use std::io::{Read, Write};
use std::sync::Arc;

use byteorder::{LittleEndian, ReadBytesExt, WriteBytesExt};
use nalgebra::Vector3;
use sphere_grid::{build_tessellation, Tessellation};

use crate::error::FieldError;
use crate::field::OrientationField;

/// File magic: format name plus a one-byte version.
pub const MAGIC: &[u8; 6] = b"R3S2F\x01";

/// Sentinel in the tessellation-order slot marking an explicit direction list.
const EXPLICIT_DIRECTIONS: u32 = 0xFFFF_FFFF;

/// Writes a field: magic, little-endian `u32` dims `Nx, Ny, Nz, N_o`, `u32`
/// tessellation order, `f64` spacing, then the values as `f32` in layout
/// order. Double-precision values are rounded to single precision; files
/// round-trip bit-exactly.
pub fn write_field<W: Write>(field: &OrientationField, out: &mut W) -> Result<(), FieldError> {
    write_header(out, field, field.tessellation().order() as u32)?;
    write_tail(out, field)
}

/// Writes the same payload but with the direction vectors spelled out instead
/// of a tessellation order: the order slot holds `0xFFFFFFFF` and `3·N_o`
/// `f64` components follow it. This is the interchange form for direction
/// sets that are not described by a subdivision order.
pub fn write_field_with_explicit_directions<W: Write>(
    field: &OrientationField,
    out: &mut W,
) -> Result<(), FieldError> {
    write_header(out, field, EXPLICIT_DIRECTIONS)?;
    for v in field.tessellation().vertices() {
        out.write_f64::<LittleEndian>(v.x)?;
        out.write_f64::<LittleEndian>(v.y)?;
        out.write_f64::<LittleEndian>(v.z)?;
    }
    write_tail(out, field)
}

fn write_header<W: Write>(
    out: &mut W,
    field: &OrientationField,
    order_slot: u32,
) -> Result<(), FieldError> {
    let dims = field.dims();
    out.write_all(MAGIC)?;
    out.write_u32::<LittleEndian>(dims.0 as u32)?;
    out.write_u32::<LittleEndian>(dims.1 as u32)?;
    out.write_u32::<LittleEndian>(dims.2 as u32)?;
    out.write_u32::<LittleEndian>(field.direction_count() as u32)?;
    out.write_u32::<LittleEndian>(order_slot)?;
    Ok(())
}

fn write_tail<W: Write>(out: &mut W, field: &OrientationField) -> Result<(), FieldError> {
    out.write_f64::<LittleEndian>(field.spacing())?;
    for &v in field.data() {
        out.write_f32::<LittleEndian>(v as f32)?;
    }
    Ok(())
}

/// Reads a field written by [`write_field`] or
/// [`write_field_with_explicit_directions`].
///
/// Explicit direction lists are accepted only when they coincide (to 1e-9,
/// index by index) with a subdivided icosahedron, which restores the
/// triangulation needed by all processing steps.
pub fn read_field<R: Read>(input: &mut R) -> Result<OrientationField, FieldError> {
    let mut magic = [0u8; 6];
    input.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(FieldError::Format(format!(
            "bad magic {magic:?}; expected {MAGIC:?}"
        )));
    }
    let nx = input.read_u32::<LittleEndian>()? as usize;
    let ny = input.read_u32::<LittleEndian>()? as usize;
    let nz = input.read_u32::<LittleEndian>()? as usize;
    let n_dirs = input.read_u32::<LittleEndian>()? as usize;
    let order_slot = input.read_u32::<LittleEndian>()?;

    let tessellation: Arc<Tessellation> = if order_slot == EXPLICIT_DIRECTIONS {
        let mut dirs = Vec::with_capacity(n_dirs);
        for _ in 0..n_dirs {
            let x = input.read_f64::<LittleEndian>()?;
            let y = input.read_f64::<LittleEndian>()?;
            let z = input.read_f64::<LittleEndian>()?;
            dirs.push(Vector3::new(x, y, z));
        }
        Arc::new(match_tessellation(&dirs)?)
    } else {
        let t = build_tessellation(order_slot as usize)
            .map_err(|e| FieldError::Format(e.to_string()))?;
        if t.vertex_count() != n_dirs {
            return Err(FieldError::Format(format!(
                "direction count {n_dirs} does not match order {order_slot} ({} vertices)",
                t.vertex_count()
            )));
        }
        Arc::new(t)
    };

    let h = input.read_f64::<LittleEndian>()?;
    if !(h > 0.0) || nx == 0 || ny == 0 || nz == 0 {
        return Err(FieldError::Format(format!(
            "degenerate grid {nx}×{ny}×{nz}, spacing {h}"
        )));
    }
    let len = nx * ny * nz * n_dirs;
    let mut data = Vec::with_capacity(len);
    for _ in 0..len {
        data.push(input.read_f32::<LittleEndian>()? as f64);
    }
    Ok(OrientationField::from_data((nx, ny, nz), h, tessellation, data))
}

/// Finds the icosahedral tessellation whose vertex list matches `dirs`.
fn match_tessellation(dirs: &[Vector3<f64>]) -> Result<Tessellation, FieldError> {
    for order in 0..=6 {
        let t = build_tessellation(order).expect("orders ≤ 6 are valid");
        if t.vertex_count() != dirs.len() {
            continue;
        }
        let matches = t
            .vertices()
            .iter()
            .zip(dirs)
            .all(|(v, d)| (v - d).norm() <= 1e-9);
        if matches {
            return Ok(t);
        }
    }
    Err(FieldError::Format(
        "explicit direction list does not match a supported tessellation".into(),
    ))
}
