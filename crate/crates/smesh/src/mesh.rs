//! Simplicial mesh storage and per-mesh uniformity constants.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{
    self, bounding_box, jung_constant, max_pairwise_distance, Ball, CompensatedSum, Point,
    SimplexPoints,
};

/// Relative measure floor below which a cell is rejected at load time.
/// Every downstream bound divides by the uniformity constant, so degenerate
/// cells must never enter a mesh.
pub const MIN_CELL_MEASURE_REL: f64 = 1e-14;

/// A simplicial mesh in 2D or 3D: a vertex table plus flat cell connectivity
/// (stride `dim + 1`).
#[derive(Clone, Debug, PartialEq)]
pub struct Mesh {
    dim: usize,
    vertices: Vec<Point>,
    cells: Vec<u32>,
}

impl Mesh {
    /// Builds a mesh and validates it: at least one cell, indices in range and
    /// distinct, no degenerate cells. Interior disjointness is not checked per
    /// cell; `coverage_check` probes it statistically.
    pub fn new(dim: usize, vertices: Vec<Point>, cells: Vec<u32>) -> Result<Self> {
        Self::with_min_measure(dim, vertices, cells, None)
    }

    /// As `new`, with an explicit absolute floor on cell measures. Supermesh
    /// cells are exact clippings and may be far thinner than any parent cell,
    /// so their loader passes a floor of zero (still rejecting measure 0).
    pub fn with_min_measure(
        dim: usize,
        vertices: Vec<Point>,
        cells: Vec<u32>,
        min_measure: Option<f64>,
    ) -> Result<Self> {
        if dim != 2 && dim != 3 {
            return Err(Error::InvalidMesh(format!("dimension must be 2 or 3, got {dim}")));
        }
        if vertices.is_empty() {
            return Err(Error::InvalidMesh("mesh has no vertices".into()));
        }
        if !vertices.iter().all(Point::is_finite) {
            return Err(Error::InvalidMesh("non-finite vertex coordinate".into()));
        }
        if dim == 2 && vertices.iter().any(|v| v.z != 0.0) {
            return Err(Error::InvalidMesh("2D mesh has nonzero z coordinates".into()));
        }
        let stride = dim + 1;
        if cells.is_empty() || cells.len() % stride != 0 {
            return Err(Error::InvalidMesh(format!(
                "cell list length {} is not a positive multiple of {stride}",
                cells.len()
            )));
        }
        let mesh = Mesh { dim, vertices, cells };
        let floor = match min_measure {
            Some(f) => f,
            None => {
                let diam = mesh.diameter();
                MIN_CELL_MEASURE_REL * diam.powi(dim as i32)
            }
        };
        for i in 0..mesh.n_cells() {
            let c = mesh.cell(i);
            for &v in c {
                if v as usize >= mesh.vertices.len() {
                    return Err(Error::InvalidCell {
                        cell: i,
                        reason: format!("vertex index {v} out of range ({} vertices)", mesh.vertices.len()),
                    });
                }
            }
            for a in 0..stride {
                for b in a + 1..stride {
                    if c[a] == c[b] {
                        return Err(Error::InvalidCell {
                            cell: i,
                            reason: format!("repeated vertex index {}", c[a]),
                        });
                    }
                }
            }
            let m = mesh.simplex_measure(i);
            if m <= floor {
                return Err(Error::InvalidCell {
                    cell: i,
                    reason: format!("degenerate cell: measure {m:.3e} <= floor {floor:.3e}"),
                });
            }
        }
        Ok(mesh)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_cells(&self) -> usize {
        self.cells.len() / (self.dim + 1)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i]
    }

    pub fn cell(&self, i: usize) -> &[u32] {
        let s = self.dim + 1;
        &self.cells[i * s..(i + 1) * s]
    }

    pub fn cells_flat(&self) -> &[u32] {
        &self.cells
    }

    pub fn cell_points(&self, i: usize) -> SimplexPoints {
        let c = self.cell(i);
        let mut pts = [Point::ZERO; 4];
        for (k, &v) in c.iter().enumerate() {
            pts[k] = self.vertices[v as usize];
        }
        SimplexPoints::new(&pts[..c.len()])
    }

    /// d-measure of one cell.
    pub fn simplex_measure(&self, i: usize) -> f64 {
        geometry::simplex_measure(self.dim, &self.cell_points(i))
    }

    /// Longest edge of one cell.
    pub fn simplex_diameter(&self, i: usize) -> f64 {
        geometry::simplex_diameter(&self.cell_points(i))
    }

    /// Smallest ball containing the cell.
    pub fn min_enclosing_ball(&self, i: usize) -> Ball {
        geometry::min_enclosing_ball(self.dim, &self.cell_points(i))
    }

    /// Largest ball inscribed in the cell.
    pub fn inscribed_ball(&self, i: usize) -> Ball {
        geometry::inscribed_ball(self.dim, &self.cell_points(i))
    }

    /// Sum of all cell measures (compensated).
    pub fn total_measure(&self) -> f64 {
        let mut s = CompensatedSum::default();
        for i in 0..self.n_cells() {
            s.add(self.simplex_measure(i));
        }
        s.value()
    }

    /// Exact maximum pairwise vertex distance; the domain diameter for
    /// polytopal domains whose hull vertices are mesh vertices.
    pub fn diameter(&self) -> f64 {
        max_pairwise_distance(&self.vertices)
    }

    pub fn bounding_box(&self) -> (Point, Point) {
        bounding_box(&self.vertices)
    }

    pub fn cell_bounding_box(&self, i: usize) -> (Point, Point) {
        bounding_box(&self.cell_points(i))
    }
}

/// Mesh-size and uniformity constants of one mesh.
///
/// `h` is the largest enclosing-ball diameter over cells, relative to the
/// domain diameter; `rho` is the smallest inscribed-ball diameter relative to
/// `h * diam`. Both are tight: the defining max/min are attained.
#[derive(Clone, Copy, Debug)]
pub struct QuasiUniformityReport {
    pub h: f64,
    pub rho: f64,
    pub diam_domain: f64,
    pub volume_domain: f64,
    pub n_cells: usize,
    pub dim: usize,
}

/// Computes the tight uniformity constants of a mesh.
pub fn quasi_uniformity_constants(mesh: &Mesh) -> QuasiUniformityReport {
    let diam = mesh.diameter();
    let n = mesh.n_cells();
    let (max_outer, min_inner) = (0..n)
        .into_par_iter()
        .map(|i| {
            let outer = mesh.min_enclosing_ball(i).diameter;
            let inner = mesh.inscribed_ball(i).diameter;
            (outer, inner)
        })
        .reduce(
            || (0.0f64, f64::INFINITY),
            |a, b| (a.0.max(b.0), a.1.min(b.1)),
        );
    let h = max_outer / diam;
    let rho = min_inner / (h * diam);
    let report = QuasiUniformityReport {
        h,
        rho,
        diam_domain: diam,
        volume_domain: mesh.total_measure(),
        n_cells: n,
        dim: mesh.dim(),
    };
    debug_assert!(report.h > 0.0 && report.h <= jung_constant(mesh.dim()) * (1.0 + 1e-12));
    debug_assert!(report.rho > 0.0 && report.rho <= 1.0 + 1e-12);
    report
}

/// Statistical tessellation check: total cell measure against the measure
/// implied by point-location hits of uniform samples in the bounding box.
#[derive(Clone, Copy, Debug)]
pub struct CoverageReport {
    pub n_samples: usize,
    pub hits_in_domain: usize,
    pub hit_fraction_of_box: f64,
    pub volume_total: f64,
    pub box_volume: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    pub(crate) fn right_triangle_mesh() -> Mesh {
        Mesh::new(
            2,
            vec![Point::new2(0.0, 0.0), Point::new2(1.0, 0.0), Point::new2(0.0, 1.0)],
            vec![0, 1, 2],
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_meshes() {
        let verts = vec![Point::new2(0.0, 0.0), Point::new2(1.0, 0.0), Point::new2(0.0, 1.0)];
        assert!(Mesh::new(2, verts.clone(), vec![]).is_err());
        assert!(Mesh::new(2, verts.clone(), vec![0, 1, 3]).is_err());
        assert!(Mesh::new(2, verts.clone(), vec![0, 1, 1]).is_err());
        assert!(Mesh::new(4, verts.clone(), vec![0, 1, 2]).is_err());
        // collinear cell
        let flat = vec![Point::new2(0.0, 0.0), Point::new2(1.0, 1.0), Point::new2(2.0, 2.0)];
        let err = Mesh::new(2, flat, vec![0, 1, 2]).unwrap_err();
        assert!(err.to_string().contains("cell 0"));
    }

    #[test]
    fn single_right_triangle_constants() {
        // diam D = sqrt(2); enclosing ball spans the hypotenuse so h = 1;
        // rho = (2 - sqrt(2)) / sqrt(2).
        let m = right_triangle_mesh();
        let r = quasi_uniformity_constants(&m);
        assert_relative_eq!(r.diam_domain, 2f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(r.h, 1.0, epsilon = 1e-13);
        assert_relative_eq!(r.rho, (2.0 - 2f64.sqrt()) / 2f64.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(r.volume_domain, 0.5);
        assert_eq!(r.n_cells, 1);
    }

    #[test]
    fn cell_accessors() {
        let m = right_triangle_mesh();
        assert_eq!(m.n_cells(), 1);
        assert_eq!(m.cell(0), &[0, 1, 2]);
        assert_relative_eq!(m.simplex_measure(0), 0.5);
        assert_relative_eq!(m.simplex_diameter(0), 2f64.sqrt());
    }
}
