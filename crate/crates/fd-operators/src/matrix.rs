use std::collections::HashMap;

use field_model::{exec, OrientationField};

use crate::boundary::{trilinear_footprint, Boundary};
use crate::stencils::{angular_stencils_for, spatial_axes_for};

/// Nonnegative diffusivities of the generator: `d11` across the orientation
/// axis, `d33` along it, `d44` for in-place rotation of the orientation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorCoefficients {
    pub d11: f64,
    pub d33: f64,
    pub d44: f64,
}

/// Sparse linear operator on the flattened field vector, compressed by rows.
/// Row and column indices follow the field layout `((x·Ny + y)·Nz + z)·N_o + l`.
#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    n: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<f64>,
}

impl OperatorMatrix {
    /// Dimension of the (square) operator.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored entries.
    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    /// Entries of one row as `(column, value)` pairs, sorted by column.
    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.row_ptr[r]..self.row_ptr[r + 1];
        self.cols[range.clone()]
            .iter()
            .copied()
            .zip(self.vals[range].iter().copied())
    }

    /// Sum of one row's values; zero rows certify that constants are in the
    /// operator's kernel.
    pub fn row_sum(&self, r: usize) -> f64 {
        self.row(r).map(|(_, v)| v).sum()
    }

    /// Matrix–vector product, parallelized over rows with a fixed per-row
    /// summation order, so results are identical in both execution modes.
    pub fn apply(&self, u: &[f64]) -> Vec<f64> {
        assert_eq!(u.len(), self.n, "vector length must match the operator");
        exec::map_indices(self.n, |r| self.row(r).map(|(c, v)| v * u[c]).sum())
    }

    /// Largest absolute row sum, `max_r Σ_c |J_rc|`. Every Gerschgorin disc
    /// lies within that radius of the origin, so it bounds the spectral
    /// radius and hence the stable explicit step `Δt ≤ 2/bound`.
    pub fn gerschgorin_bound(&self) -> f64 {
        (0..self.n)
            .map(|r| self.row(r).map(|(_, v)| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

/// Assembles the diffusion generator
/// `D³³A₃ᶠA₃ᵇ + D¹¹(A₁ᶠA₁ᵇ + A₂ᶠA₂ᵇ) + D⁴⁴Δ_{S²}`
/// as a sparse matrix on fields shaped like `template`.
///
/// Spatial blocks compose the forward difference with the backward one,
/// `(S₊ − I)(I − S₋)/h²`; the spherical block composes each forward angular
/// difference with its measure-weighted adjoint. Under periodic boundaries
/// both choices make the operator negative semi-definite with vanishing row
/// sums, and the spherical block conserves the surface-measure mass exactly.
///
/// Applying the result equals composing the corresponding [`crate::apply_a`]
/// and [`crate::angular_adjoint_backward`] calls up to rounding. Assembly is
/// single-threaded; the matrix form is meant for analysis and moderate grid
/// sizes, while evolutions apply the same composition matrix-free.
pub fn assemble_generator(
    template: &OrientationField,
    coefficients: &GeneratorCoefficients,
    h: f64,
    h_a: f64,
    boundary: Boundary,
) -> OperatorMatrix {
    assert!(
        coefficients.d11 >= 0.0 && coefficients.d33 >= 0.0 && coefficients.d44 >= 0.0,
        "diffusivities must be nonnegative"
    );
    assert!(h > 0.0, "spatial step must be positive");
    assert!(h_a > 0.0, "angular step must be positive");

    let dims = template.dims();
    let (_, ny, nz) = dims;
    let n_o = template.direction_count();
    let n = template.voxel_count() * n_o;
    let axes = spatial_axes_for(template.tessellation());
    let stencils = angular_stencils_for(template.tessellation(), h_a);
    let measures = template.tessellation().measures();
    let step = h / template.spacing();

    // One shifted-identity row (S± u)(r): the trilinear footprint of the
    // position moved by ±step along the frame axis, at the same direction l.
    let shift_row = |r: usize, axis_index: usize, sign: f64, out: &mut Vec<(usize, f64)>| {
        let l = r % n_o;
        let v = r / n_o;
        let axis = axes[l].column(axis_index);
        let pos = [
            (v / (nz * ny)) as f64 + sign * step * axis[0],
            ((v / nz) % ny) as f64 + sign * step * axis[1],
            (v % nz) as f64 + sign * step * axis[2],
        ];
        trilinear_footprint(pos, dims, boundary, |idx, w| {
            out.push((((idx[0] * ny + idx[1]) * nz + idx[2]) * n_o + l, w));
        });
    };

    let mut row_ptr = Vec::with_capacity(n + 1);
    row_ptr.push(0);
    let mut cols = Vec::new();
    let mut vals = Vec::new();
    let mut acc: HashMap<usize, f64> = HashMap::new();
    let mut outer: Vec<(usize, f64)> = Vec::new();
    let mut inner: Vec<(usize, f64)> = Vec::new();
    let mut entries: Vec<(usize, f64)> = Vec::new();

    for r in 0..n {
        acc.clear();

        let spatial = [
            (0, coefficients.d11),
            (1, coefficients.d11),
            (2, coefficients.d33),
        ];
        for (axis_index, d) in spatial {
            if d == 0.0 {
                continue;
            }
            let scale = d / (h * h);
            outer.clear();
            shift_row(r, axis_index, 1.0, &mut outer);
            // (S₊ − I) applied to each backward-difference row (I − S₋).
            let mut add_backward_row = |k: usize, a: f64| {
                *acc.entry(k).or_insert(0.0) += a;
                inner.clear();
                shift_row(k, axis_index, -1.0, &mut inner);
                for &(c, w) in &inner {
                    *acc.entry(c).or_insert(0.0) -= a * w;
                }
            };
            for &(k, w) in &outer {
                add_backward_row(k, scale * w);
            }
            add_backward_row(r, -scale);
        }

        if coefficients.d44 > 0.0 {
            let l = r % n_o;
            let voxel_base = r - l;
            let scale = coefficients.d44 / (h_a * h_a);
            for p in 0..2 {
                // Adjoint row (δ_l I − P₊ᵀΔ)/δ_l applied to forward rows (P₊ − I).
                let mut add_forward_row = |k: usize, a: f64| {
                    for &(j, w) in &stencils.pairs[k][p].plus.entries {
                        if w != 0.0 {
                            *acc.entry(voxel_base + j).or_insert(0.0) += a * w;
                        }
                    }
                    *acc.entry(voxel_base + k).or_insert(0.0) -= a;
                };
                add_forward_row(l, scale);
                for &(src, w) in &stencils.transpose[p][l] {
                    add_forward_row(src, -scale * w * measures[src] / measures[l]);
                }
            }
        }

        entries.clear();
        entries.extend(acc.iter().map(|(&c, &v)| (c, v)));
        entries.sort_unstable_by_key(|&(c, _)| c);
        for &(c, v) in &entries {
            cols.push(c);
            vals.push(v);
        }
        row_ptr.push(cols.len());
    }

    OperatorMatrix {
        n,
        row_ptr,
        cols,
        vals,
    }
}
