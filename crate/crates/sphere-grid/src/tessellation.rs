use std::collections::BTreeMap;
use std::f64::consts::PI;

use nalgebra::Vector3;

use crate::error::SphereGridError;

/// Maximum supported subdivision order (memory guard).
pub const MAX_ORDER: usize = 6;

/// A subdivided icosahedral triangulation of the unit sphere.
///
/// Vertices are stored in a deterministic canonical order: the 12 icosahedron
/// vertices first (north pole, upper ring, lower ring, south pole), then the
/// points subdividing each of the 30 edges, then the interior points of each
/// of the 20 faces.
#[derive(Debug, Clone)]
pub struct Tessellation {
    order: usize,
    vertices: Vec<Vector3<f64>>,
    triangles: Vec<[usize; 3]>,
    /// Triangles incident to each vertex.
    vertex_triangles: Vec<Vec<usize>>,
    /// Per-vertex surface measure in steradians; sums to 4π.
    measures: Vec<f64>,
    mean_edge_length: f64,
}

impl Tessellation {
    /// Subdivision order `o`; the triangulation has `2 + 10(o+1)²` vertices.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Unit direction vectors, one per sampling point.
    pub fn vertices(&self) -> &[Vector3<f64>] {
        &self.vertices
    }

    /// Number of sampling directions.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Oriented vertex-index triples; `det[a, b, c] > 0` for every triangle.
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Indices of the triangles incident to vertex `k`.
    pub fn triangles_at(&self, k: usize) -> &[usize] {
        &self.vertex_triangles[k]
    }

    /// Surface measure δ(n_k) of each vertex: one third of the total
    /// spherical area of its incident triangles.
    pub fn measures(&self) -> &[f64] {
        &self.measures
    }

    /// Mean great-circle length of the triangulation edges, in radians.
    /// This is the natural angular step for finite differences on the grid.
    pub fn mean_edge_length(&self) -> f64 {
        self.mean_edge_length
    }

    /// Index of the vertex closest (in angle) to `n`.
    pub fn nearest_vertex(&self, n: &Vector3<f64>) -> usize {
        let mut best = 0;
        let mut best_dot = f64::NEG_INFINITY;
        for (k, v) in self.vertices.iter().enumerate() {
            let d = v.dot(n);
            if d > best_dot {
                best_dot = d;
                best = k;
            }
        }
        best
    }

    /// Writes one `index,x,y,z` line per vertex.
    pub fn write_vertices_csv<W: std::io::Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "index,x,y,z")?;
        for (k, v) in self.vertices.iter().enumerate() {
            writeln!(out, "{k},{},{},{}", v.x, v.y, v.z)?;
        }
        Ok(())
    }

    /// Writes one `index,a,b,c` line per triangle.
    pub fn write_triangles_csv<W: std::io::Write>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "index,a,b,c")?;
        for (k, t) in self.triangles.iter().enumerate() {
            writeln!(out, "{k},{},{},{}", t[0], t[1], t[2])?;
        }
        Ok(())
    }
}

/// Barycentric lattice point on a face, projected to the sphere.
///
/// The linear barycentric fractions are passed through `sin(frac · Ω)`, with
/// Ω the icosahedron edge arc, before weighting the corners. Along edges this
/// reproduces exact equal-arc spacing (spherical linear interpolation), and it
/// keeps triangle areas noticeably more uniform than projecting the flat
/// lattice. The weighting is symmetric in the corners, so the vertex set
/// keeps the full symmetry group of the base solid.
fn lattice_point(
    fracs: [f64; 3],
    corners: [&Vector3<f64>; 3],
) -> Vector3<f64> {
    let omega = 2.0_f64.atan(); // arccos(1/√5), the icosahedron edge arc
    let mut p = Vector3::zeros();
    for (frac, corner) in fracs.iter().zip(corners) {
        p += *corner * (frac * omega).sin();
    }
    p.normalize()
}

/// Builds the order-`o` subdivided icosahedral tessellation.
///
/// Every icosahedron face is split into `(o+1)²` triangles by placing
/// `o` evenly spaced points on each edge arc and filling the interior on the
/// matching barycentric lattice; all points lie on the unit sphere.
pub fn build_tessellation(order: usize) -> Result<Tessellation, SphereGridError> {
    if order > MAX_ORDER {
        return Err(SphereGridError::OrderTooLarge { order });
    }
    let f = order + 1;
    let base = icosahedron_vertices();
    let faces = icosahedron_faces(&base);
    let edges = collect_edges(&faces);

    let mut vertices: Vec<Vector3<f64>> = base.to_vec();

    // Points subdividing each base edge, keyed by the (low, high) vertex pair
    // so that both faces sharing an edge reuse the same coordinates.
    let mut edge_offset: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(lo, hi) in &edges {
        edge_offset.insert((lo, hi), vertices.len());
        for k in 1..f {
            let fk = k as f64 / f as f64;
            vertices.push(lattice_point([1.0 - fk, fk, 0.0], [&base[lo], &base[hi], &base[lo]]));
        }
    }

    let mut triangles: Vec<[usize; 3]> = Vec::with_capacity(20 * f * f);
    for &[ia, ib, ic] in &faces {
        // Global index of the barycentric lattice point (i, j) on this face,
        // where the point is the projection of ((f-i-j)·A + i·B + j·C)/f.
        let mut local = vec![usize::MAX; (f + 1) * (f + 1)];
        let set = |local: &mut Vec<usize>, i: usize, j: usize, g: usize| {
            local[i * (f + 1) + j] = g;
        };
        set(&mut local, 0, 0, ia);
        set(&mut local, f, 0, ib);
        set(&mut local, 0, f, ic);
        for k in 1..f {
            // Edge A-B (j = 0): stored from the lower-index endpoint.
            let g = if ia < ib {
                edge_offset[&(ia, ib)] + k - 1
            } else {
                edge_offset[&(ib, ia)] + (f - k) - 1
            };
            set(&mut local, k, 0, g);
            // Edge A-C (i = 0).
            let g = if ia < ic {
                edge_offset[&(ia, ic)] + k - 1
            } else {
                edge_offset[&(ic, ia)] + (f - k) - 1
            };
            set(&mut local, 0, k, g);
            // Edge B-C (i + j = f); the weight of B is (f - k)/f along it.
            let g = if ib < ic {
                edge_offset[&(ib, ic)] + k - 1
            } else {
                edge_offset[&(ic, ib)] + (f - k) - 1
            };
            set(&mut local, f - k, k, g);
        }
        for i in 1..f {
            for j in 1..f - i {
                set(&mut local, i, j, vertices.len());
                let (fi, fj) = (i as f64 / f as f64, j as f64 / f as f64);
                vertices.push(lattice_point(
                    [1.0 - fi - fj, fi, fj],
                    [&base[ia], &base[ib], &base[ic]],
                ));
            }
        }
        let at = |i: usize, j: usize| local[i * (f + 1) + j];
        for i in 0..f {
            for j in 0..f - i {
                triangles.push([at(i, j), at(i + 1, j), at(i, j + 1)]);
                if i + j < f - 1 {
                    triangles.push([at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)]);
                }
            }
        }
    }

    debug_assert_eq!(vertices.len(), 2 + 10 * f * f);
    debug_assert_eq!(triangles.len(), 20 * f * f);

    let mut vertex_triangles = vec![Vec::new(); vertices.len()];
    for (t, tri) in triangles.iter().enumerate() {
        for &v in tri {
            vertex_triangles[v].push(t);
        }
    }

    let mut measures = vec![0.0; vertices.len()];
    for tri in &triangles {
        let area = spherical_triangle_area(
            &vertices[tri[0]],
            &vertices[tri[1]],
            &vertices[tri[2]],
        );
        for &v in tri {
            measures[v] += area / 3.0;
        }
    }

    let mut edge_sum = 0.0;
    let mut edge_count = 0usize;
    let mut seen: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for tri in &triangles {
        for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])] {
            let key = (a.min(b), a.max(b));
            if seen.insert(key, ()).is_none() {
                edge_sum += arc_length(&vertices[key.0], &vertices[key.1]);
                edge_count += 1;
            }
        }
    }

    Ok(Tessellation {
        order,
        vertices,
        triangles,
        vertex_triangles,
        measures,
        mean_edge_length: edge_sum / edge_count as f64,
    })
}

/// The 12 icosahedron vertices in polar orientation: north pole, the upper
/// ring at latitude atan(1/2) with longitudes 0°, 72°, …, the lower ring at
/// latitude −atan(1/2) with longitudes 36°, 108°, …, then the south pole.
fn icosahedron_vertices() -> [Vector3<f64>; 12] {
    let lat = 0.5_f64.atan();
    let (sin_lat, cos_lat) = lat.sin_cos();
    let mut v = [Vector3::zeros(); 12];
    v[0] = Vector3::new(0.0, 0.0, 1.0);
    v[11] = Vector3::new(0.0, 0.0, -1.0);
    for k in 0..5 {
        let upper = 2.0 * PI * k as f64 / 5.0;
        let lower = upper + PI / 5.0;
        v[1 + k] = Vector3::new(cos_lat * upper.cos(), cos_lat * upper.sin(), sin_lat);
        v[6 + k] = Vector3::new(cos_lat * lower.cos(), cos_lat * lower.sin(), -sin_lat);
    }
    v
}

/// Recovers the 20 faces from vertex adjacency: two vertices are joined by an
/// edge exactly when their dot product is 1/√5, and every pairwise-adjacent
/// triple is a face. Triples are oriented outward (positive determinant).
fn icosahedron_faces(v: &[Vector3<f64>; 12]) -> Vec<[usize; 3]> {
    let adjacent = |a: usize, b: usize| (v[a].dot(&v[b]) - 1.0 / 5.0_f64.sqrt()).abs() < 1e-9;
    let mut faces = Vec::with_capacity(20);
    for a in 0..12 {
        for b in a + 1..12 {
            if !adjacent(a, b) {
                continue;
            }
            for c in b + 1..12 {
                if adjacent(a, c) && adjacent(b, c) {
                    let det = v[a].dot(&v[b].cross(&v[c]));
                    faces.push(if det > 0.0 { [a, b, c] } else { [a, c, b] });
                }
            }
        }
    }
    debug_assert_eq!(faces.len(), 20);
    faces
}

fn collect_edges(faces: &[[usize; 3]]) -> Vec<(usize, usize)> {
    let mut edges: BTreeMap<(usize, usize), ()> = BTreeMap::new();
    for tri in faces {
        for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[2], tri[0])] {
            edges.insert((a.min(b), a.max(b)), ());
        }
    }
    edges.into_keys().collect()
}

fn arc_length(a: &Vector3<f64>, b: &Vector3<f64>) -> f64 {
    a.dot(b).clamp(-1.0, 1.0).acos()
}

/// Spherical excess of the triangle with unit-vector corners, via the
/// numerically stable half-angle (L'Huilier) formula.
fn spherical_triangle_area(a: &Vector3<f64>, b: &Vector3<f64>, c: &Vector3<f64>) -> f64 {
    let sa = arc_length(b, c);
    let sb = arc_length(c, a);
    let sc = arc_length(a, b);
    let s = 0.5 * (sa + sb + sc);
    let t = (0.5 * s).tan()
        * (0.5 * (s - sa)).tan()
        * (0.5 * (s - sb)).tan()
        * (0.5 * (s - sc)).tan();
    4.0 * t.max(0.0).sqrt().atan()
}
