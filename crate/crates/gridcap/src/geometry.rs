//! Voxel grid construction and boundary-panel enumeration.
//!
//! A structure is a set of voxels labeled as conductor or dielectric region on
//! a uniform grid. Boundary panels are the voxel faces across which the
//! material changes: conductor faces carry the potential rows of the system,
//! dielectric faces the normal-field rows.

use crate::Axis;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("structure contains no voxels")]
    EmptyStructure,
    #[error("voxel ({0}, {1}, {2}) claimed by conductors {3} and {4}")]
    DuplicateConductorClaim(i64, i64, i64, u32, u32),
    #[error("conductors {0} and {1} touch at a shared face; merge them or separate them")]
    TouchingConductors(u32, u32),
    #[error("degenerate primitive: {0}")]
    DegeneratePrimitive(String),
    #[error("invalid structure: {0}")]
    InvalidInput(String),
}

/// Per-voxel material label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Occupancy {
    Background,
    /// Conductor id (dense index into `VoxelGrid::conductor_ids`).
    Conductor(u16),
    /// Dielectric region index into `VoxelGrid::region_eps`.
    Dielectric(u16),
}

/// Uniform voxel grid with material occupancy.
#[derive(Debug, Clone)]
pub struct VoxelGrid {
    dims: [usize; 3],
    voxel_edge: f64,
    /// Physical coordinate of the low corner of voxel (0, 0, 0).
    origin: [f64; 3],
    occupancy: Vec<Occupancy>,
    /// External conductor ids in column order of the capacitance matrix.
    conductor_ids: Vec<u32>,
    /// Absolute permittivity per dielectric region [F/m].
    region_eps: Vec<f64>,
    /// Absolute background permittivity [F/m].
    background_eps: f64,
}

/// Resolved structure input: explicit voxel index triples per material.
#[derive(Debug, Clone)]
pub struct ResolvedStructure {
    pub voxel_edge: f64,
    /// Relative background permittivity.
    pub background_eps_r: f64,
    /// (conductor id, voxel indices)
    pub conductors: Vec<(u32, Vec<[i64; 3]>)>,
    /// (relative permittivity, voxel indices); later entries override earlier
    /// dielectric claims, conductors always win.
    pub dielectrics: Vec<(f64, Vec<[i64; 3]>)>,
}

impl VoxelGrid {
    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn voxel_count(&self) -> usize {
        self.dims[0] * self.dims[1] * self.dims[2]
    }

    pub fn voxel_edge(&self) -> f64 {
        self.voxel_edge
    }

    pub fn origin(&self) -> [f64; 3] {
        self.origin
    }

    pub fn conductor_ids(&self) -> &[u32] {
        &self.conductor_ids
    }

    pub fn conductor_count(&self) -> usize {
        self.conductor_ids.len()
    }

    pub fn background_eps(&self) -> f64 {
        self.background_eps
    }

    pub fn region_eps(&self) -> &[f64] {
        &self.region_eps
    }

    #[inline]
    fn idx(&self, v: [usize; 3]) -> usize {
        (v[0] * self.dims[1] + v[1]) * self.dims[2] + v[2]
    }

    #[inline]
    pub fn occupancy_at(&self, v: [usize; 3]) -> Occupancy {
        self.occupancy[self.idx(v)]
    }

    /// Occupancy of the voxel at signed index, background outside the grid.
    #[inline]
    fn occupancy_signed(&self, v: [i64; 3]) -> Occupancy {
        for a in 0..3 {
            if v[a] < 0 || v[a] >= self.dims[a] as i64 {
                return Occupancy::Background;
            }
        }
        self.occupancy[self.idx([v[0] as usize, v[1] as usize, v[2] as usize])]
    }

    /// Absolute permittivity of the medium represented by a non-conductor label.
    fn eps_of(&self, occ: Occupancy) -> f64 {
        match occ {
            Occupancy::Background => self.background_eps,
            Occupancy::Dielectric(r) => self.region_eps[r as usize],
            Occupancy::Conductor(_) => panic!("conductor voxel has no medium permittivity"),
        }
    }
}

/// Classification of a boundary panel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PanelKind {
    Conductor {
        /// Dense conductor index (column in the capacitance matrix).
        conductor: u16,
        /// Absolute permittivity of the medium on the outward side; used for
        /// the free-charge scaling of embedded conductor surfaces.
        outside_eps: f64,
    },
    Dielectric {
        /// Absolute permittivity on the region side the normal points away from.
        eps_d: f64,
        /// Absolute permittivity on the side the normal points into.
        eps_b: f64,
    },
}

/// A boundary panel: one voxel face with orientation and material data.
#[derive(Debug, Clone, Copy)]
pub struct Panel {
    pub direction: Axis,
    /// +1 if the outward normal points along +axis, -1 otherwise.
    pub sign: i8,
    /// 0-based slot in the voxel-panel grid of `direction`:
    /// x-panels index (Nx+1, Ny, Nz), y-panels (Nx, Ny+1, Nz),
    /// z-panels (Nx, Ny, Nz+1).
    pub grid_index: [usize; 3],
    pub center: [f64; 3],
    pub kind: PanelKind,
}

/// Enumerated boundary panels: conductor panels first, then dielectric panels,
/// each direction-major and (z, y, x)-lexicographic within a direction.
#[derive(Debug, Clone)]
pub struct PanelSet {
    panels: Vec<Panel>,
    n_conductor: usize,
    voxel_edge: f64,
}

impl PanelSet {
    pub fn panels(&self) -> &[Panel] {
        &self.panels
    }

    pub fn len(&self) -> usize {
        self.panels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.panels.is_empty()
    }

    pub fn conductor_count(&self) -> usize {
        self.n_conductor
    }

    pub fn dielectric_count(&self) -> usize {
        self.panels.len() - self.n_conductor
    }

    pub fn conductor_panels(&self) -> &[Panel] {
        &self.panels[..self.n_conductor]
    }

    pub fn dielectric_panels(&self) -> &[Panel] {
        &self.panels[self.n_conductor..]
    }

    pub fn panel_area(&self) -> f64 {
        self.voxel_edge * self.voxel_edge
    }

    pub fn voxel_edge(&self) -> f64 {
        self.voxel_edge
    }

    /// Panel counts per direction (x, y, z).
    pub fn counts_by_direction(&self) -> [usize; 3] {
        let mut c = [0; 3];
        for p in &self.panels {
            c[p.direction.index()] += 1;
        }
        c
    }
}

/// Build the voxel grid from explicit voxel claims. The bounding box is the
/// tight box around all claimed voxels.
pub fn build_grid(desc: &ResolvedStructure) -> Result<VoxelGrid, GeometryError> {
    if desc.voxel_edge <= 0.0 || !desc.voxel_edge.is_finite() {
        return Err(GeometryError::InvalidInput(format!(
            "voxel edge must be positive, got {}",
            desc.voxel_edge
        )));
    }
    if desc.background_eps_r <= 0.0 {
        return Err(GeometryError::InvalidInput(
            "background permittivity must be positive".into(),
        ));
    }
    let mut lo = [i64::MAX; 3];
    let mut hi = [i64::MIN; 3];
    let mut any = false;
    for (_, voxels) in &desc.conductors {
        for v in voxels {
            any = true;
            for a in 0..3 {
                lo[a] = lo[a].min(v[a]);
                hi[a] = hi[a].max(v[a]);
            }
        }
    }
    for (_, voxels) in &desc.dielectrics {
        for v in voxels {
            any = true;
            for a in 0..3 {
                lo[a] = lo[a].min(v[a]);
                hi[a] = hi[a].max(v[a]);
            }
        }
    }
    if !any {
        return Err(GeometryError::EmptyStructure);
    }
    for (_, voxels) in &desc.conductors {
        for v in voxels {
            if v.iter().any(|&c| c < 0) {
                return Err(GeometryError::InvalidInput(format!(
                    "negative voxel index {v:?}"
                )));
            }
        }
    }
    let dims = [
        (hi[0] - lo[0] + 1) as usize,
        (hi[1] - lo[1] + 1) as usize,
        (hi[2] - lo[2] + 1) as usize,
    ];
    let eps0 = crate::kernel::EPS0;
    let mut grid = VoxelGrid {
        dims,
        voxel_edge: desc.voxel_edge,
        origin: [
            lo[0] as f64 * desc.voxel_edge,
            lo[1] as f64 * desc.voxel_edge,
            lo[2] as f64 * desc.voxel_edge,
        ],
        occupancy: vec![Occupancy::Background; dims[0] * dims[1] * dims[2]],
        conductor_ids: Vec::new(),
        region_eps: Vec::new(),
        background_eps: desc.background_eps_r * eps0,
    };
    // dielectrics first; later regions override earlier ones
    for (eps_r, voxels) in &desc.dielectrics {
        if *eps_r <= 0.0 {
            return Err(GeometryError::InvalidInput(
                "dielectric permittivity must be positive".into(),
            ));
        }
        let region = grid.region_eps.len() as u16;
        grid.region_eps.push(eps_r * eps0);
        for v in voxels {
            let local = [
                (v[0] - lo[0]) as usize,
                (v[1] - lo[1]) as usize,
                (v[2] - lo[2]) as usize,
            ];
            let idx = grid.idx(local);
            grid.occupancy[idx] = Occupancy::Dielectric(region);
        }
    }
    // conductors win over dielectric claims; two conductors on one voxel is an error
    for (id, voxels) in &desc.conductors {
        let dense = match grid.conductor_ids.iter().position(|&c| c == *id) {
            Some(i) => i as u16,
            None => {
                grid.conductor_ids.push(*id);
                (grid.conductor_ids.len() - 1) as u16
            }
        };
        for v in voxels {
            let local = [
                (v[0] - lo[0]) as usize,
                (v[1] - lo[1]) as usize,
                (v[2] - lo[2]) as usize,
            ];
            let idx = grid.idx(local);
            if let Occupancy::Conductor(prev) = grid.occupancy[idx] {
                if prev != dense {
                    return Err(GeometryError::DuplicateConductorClaim(
                        v[0],
                        v[1],
                        v[2],
                        grid.conductor_ids[prev as usize],
                        *id,
                    ));
                }
            }
            grid.occupancy[idx] = Occupancy::Conductor(dense);
        }
    }
    Ok(grid)
}

/// Enumerate all boundary panels of the grid with deterministic ordering.
pub fn enumerate_panels(grid: &VoxelGrid) -> Result<PanelSet, GeometryError> {
    let mut conductors = Vec::new();
    let mut dielectrics = Vec::new();
    let dv = grid.voxel_edge();
    let dims = grid.dims();
    for axis in Axis::ALL {
        let a = axis.index();
        let mut slot_dims = dims;
        slot_dims[a] += 1;
        // (z, y, x) lexicographic sweep within the direction
        for gz in 0..slot_dims[2] {
            for gy in 0..slot_dims[1] {
                for gx in 0..slot_dims[0] {
                    let g = [gx, gy, gz];
                    let mut below = [g[0] as i64, g[1] as i64, g[2] as i64];
                    below[a] -= 1;
                    let above = [g[0] as i64, g[1] as i64, g[2] as i64];
                    let occ_b = grid.occupancy_signed(below);
                    let occ_a = grid.occupancy_signed(above);
                    if occ_b == occ_a {
                        continue;
                    }
                    let mut center = [0.0; 3];
                    for ax in 0..3 {
                        center[ax] = grid.origin[ax]
                            + if ax == a {
                                g[ax] as f64 * dv
                            } else {
                                (g[ax] as f64 + 0.5) * dv
                            };
                    }
                    match (occ_b, occ_a) {
                        (Occupancy::Conductor(c1), Occupancy::Conductor(c2)) => {
                            return Err(GeometryError::TouchingConductors(
                                grid.conductor_ids[c1 as usize],
                                grid.conductor_ids[c2 as usize],
                            ));
                        }
                        (Occupancy::Conductor(c), other) => {
                            conductors.push(Panel {
                                direction: axis,
                                sign: 1,
                                grid_index: g,
                                center,
                                kind: PanelKind::Conductor {
                                    conductor: c,
                                    outside_eps: grid.eps_of(other),
                                },
                            });
                        }
                        (other, Occupancy::Conductor(c)) => {
                            conductors.push(Panel {
                                direction: axis,
                                sign: -1,
                                grid_index: g,
                                center,
                                kind: PanelKind::Conductor {
                                    conductor: c,
                                    outside_eps: grid.eps_of(other),
                                },
                            });
                        }
                        (b, t) => {
                            // dielectric interface; the lower-index region (or
                            // the only region) is the d-side
                            let (eps_b_side, eps_t_side) = (grid.eps_of(b), grid.eps_of(t));
                            if eps_b_side == eps_t_side {
                                continue; // equal permittivity, no interface
                            }
                            let d_side_is_below = match (b, t) {
                                (Occupancy::Dielectric(r1), Occupancy::Dielectric(r2)) => r1 < r2,
                                (Occupancy::Dielectric(_), _) => true,
                                _ => false,
                            };
                            let (sign, eps_d, eps_b) = if d_side_is_below {
                                (1, eps_b_side, eps_t_side)
                            } else {
                                (-1, eps_t_side, eps_b_side)
                            };
                            dielectrics.push(Panel {
                                direction: axis,
                                sign,
                                grid_index: g,
                                center,
                                kind: PanelKind::Dielectric { eps_d, eps_b },
                            });
                        }
                    }
                }
            }
        }
    }
    let n_conductor = conductors.len();
    if n_conductor + dielectrics.len() == 0 {
        return Err(GeometryError::EmptyStructure);
    }
    conductors.extend(dielectrics);
    Ok(PanelSet {
        panels: conductors,
        n_conductor,
        voxel_edge: dv,
    })
}

/// Geometric primitives voxelized by the voxel-center membership test.
#[derive(Debug, Clone)]
pub enum Primitive {
    /// Axis-aligned box [min, max) in physical coordinates.
    Box { min: [f64; 3], max: [f64; 3] },
    Sphere { center: [f64; 3], radius: f64 },
    /// Spherical shell: inner_radius <= |c - center| < outer_radius.
    Shell {
        center: [f64; 3],
        inner_radius: f64,
        outer_radius: f64,
    },
}

/// Voxel index triples whose centers lie inside the primitive.
///
/// Voxel (i, j, k) occupies [i*dv, (i+1)*dv) per axis; its center is at
/// (i + 0.5) * dv. Indices are clamped to be non-negative, so primitives must
/// lie in the positive octant.
pub fn voxelize_primitive(shape: &Primitive, dv: f64) -> Result<Vec<[i64; 3]>, GeometryError> {
    if dv <= 0.0 {
        return Err(GeometryError::DegeneratePrimitive(
            "voxel edge must be positive".into(),
        ));
    }
    let inside = |c: [f64; 3]| -> bool {
        match shape {
            Primitive::Box { min, max } => {
                (0..3).all(|a| c[a] >= min[a] && c[a] < max[a])
            }
            Primitive::Sphere { center, radius } => {
                let d2: f64 = (0..3).map(|a| (c[a] - center[a]).powi(2)).sum();
                d2 < radius * radius
            }
            Primitive::Shell {
                center,
                inner_radius,
                outer_radius,
            } => {
                let d2: f64 = (0..3).map(|a| (c[a] - center[a]).powi(2)).sum();
                d2 >= inner_radius * inner_radius && d2 < outer_radius * outer_radius
            }
        }
    };
    let bounds = match shape {
        Primitive::Box { min, max } => {
            if (0..3).any(|a| max[a] <= min[a]) {
                return Err(GeometryError::DegeneratePrimitive("empty box".into()));
            }
            (*min, *max)
        }
        Primitive::Sphere { center, radius } => {
            if *radius <= 0.0 {
                return Err(GeometryError::DegeneratePrimitive("zero radius".into()));
            }
            (
                [center[0] - radius, center[1] - radius, center[2] - radius],
                [center[0] + radius, center[1] + radius, center[2] + radius],
            )
        }
        Primitive::Shell {
            center,
            inner_radius,
            outer_radius,
        } => {
            if *outer_radius <= 0.0 || *inner_radius < 0.0 || outer_radius <= inner_radius {
                return Err(GeometryError::DegeneratePrimitive(
                    "shell radii must satisfy 0 <= inner < outer".into(),
                ));
            }
            (
                [
                    center[0] - outer_radius,
                    center[1] - outer_radius,
                    center[2] - outer_radius,
                ],
                [
                    center[0] + outer_radius,
                    center[1] + outer_radius,
                    center[2] + outer_radius,
                ],
            )
        }
    };
    let lo = bounds.0.map(|c| ((c / dv).floor() as i64).max(0));
    let hi = bounds.1.map(|c| (c / dv).ceil() as i64);
    let mut out = Vec::new();
    for i in lo[0]..=hi[0] {
        for j in lo[1]..=hi[1] {
            for k in lo[2]..=hi[2] {
                let c = [
                    (i as f64 + 0.5) * dv,
                    (j as f64 + 0.5) * dv,
                    (k as f64 + 0.5) * dv,
                ];
                if inside(c) {
                    out.push([i, j, k]);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_conductor(voxels: Vec<[i64; 3]>) -> ResolvedStructure {
        ResolvedStructure {
            voxel_edge: 1.0,
            background_eps_r: 1.0,
            conductors: vec![(1, voxels)],
            dielectrics: vec![],
        }
    }

    #[test]
    fn one_voxel_conductor() {
        let grid = build_grid(&single_conductor(vec![[0, 0, 0]])).unwrap();
        assert_eq!(grid.dims(), [1, 1, 1]);
        assert_eq!(grid.voxel_count(), 1);
        let panels = enumerate_panels(&grid).unwrap();
        assert_eq!(panels.len(), 6);
        assert_eq!(panels.conductor_count(), 6);
        assert_eq!(panels.counts_by_direction(), [2, 2, 2]);
    }

    #[test]
    fn conductor_cube_2x2x2() {
        let mut voxels = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    voxels.push([i, j, k]);
                }
            }
        }
        let grid = build_grid(&single_conductor(voxels)).unwrap();
        assert_eq!(grid.dims(), [2, 2, 2]);
        assert_eq!(grid.voxel_count(), 8);
        let panels = enumerate_panels(&grid).unwrap();
        assert_eq!(panels.len(), 24);
    }

    #[test]
    fn bar_2x1x1_shares_internal_face() {
        let grid = build_grid(&single_conductor(vec![[0, 0, 0], [1, 0, 0]])).unwrap();
        let panels = enumerate_panels(&grid).unwrap();
        assert_eq!(panels.len(), 10);
    }

    #[test]
    fn dielectric_cube_panels_point_outward() {
        let mut voxels = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    voxels.push([i, j, k]);
                }
            }
        }
        let grid = build_grid(&ResolvedStructure {
            voxel_edge: 1.0,
            background_eps_r: 1.0,
            conductors: vec![],
            dielectrics: vec![(2.0, voxels)],
        })
        .unwrap();
        let panels = enumerate_panels(&grid).unwrap();
        assert_eq!(panels.len(), 24);
        assert_eq!(panels.conductor_count(), 0);
        for p in panels.panels() {
            // outward normal: low faces -, high faces +
            let a = p.direction.index();
            let low = p.grid_index[a] == 0;
            assert_eq!(p.sign, if low { -1 } else { 1 }, "panel {p:?}");
            match p.kind {
                PanelKind::Dielectric { eps_d, eps_b } => {
                    assert!(eps_d > eps_b);
                }
                _ => panic!("expected dielectric panel"),
            }
        }
    }

    #[test]
    fn panel_parity_closed_surface() {
        // L-shaped conductor: still a closed surface
        let grid =
            build_grid(&single_conductor(vec![[0, 0, 0], [1, 0, 0], [1, 1, 0]])).unwrap();
        let panels = enumerate_panels(&grid).unwrap();
        for axis in Axis::ALL {
            let sum: i64 = panels
                .panels()
                .iter()
                .filter(|p| p.direction == axis)
                .map(|p| p.sign as i64)
                .sum();
            assert_eq!(sum, 0, "axis {axis:?} not balanced");
        }
    }

    #[test]
    fn translation_preserves_panels() {
        let voxels = vec![[0, 0, 0], [1, 0, 0], [1, 1, 0]];
        let shifted: Vec<[i64; 3]> = voxels.iter().map(|v| [v[0] + 3, v[1] + 5, v[2] + 2]).collect();
        let p1 = enumerate_panels(&build_grid(&single_conductor(voxels)).unwrap()).unwrap();
        let p2 = enumerate_panels(&build_grid(&single_conductor(shifted)).unwrap()).unwrap();
        assert_eq!(p1.len(), p2.len());
        for (a, b) in p1.panels().iter().zip(p2.panels()) {
            assert_eq!(a.grid_index, b.grid_index, "relative indices must match");
            assert_eq!(a.direction, b.direction);
            assert_eq!(a.sign, b.sign);
        }
    }

    #[test]
    fn centers_match_grid_indices() {
        let grid = build_grid(&single_conductor(vec![[2, 3, 4]])).unwrap();
        let panels = enumerate_panels(&grid).unwrap();
        let dv = grid.voxel_edge();
        for p in panels.panels() {
            let a = p.direction.index();
            for ax in 0..3 {
                let expect = grid.origin()[ax]
                    + if ax == a {
                        p.grid_index[ax] as f64 * dv
                    } else {
                        (p.grid_index[ax] as f64 + 0.5) * dv
                    };
                assert!((p.center[ax] - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn duplicate_conductor_claim_rejected() {
        let desc = ResolvedStructure {
            voxel_edge: 1.0,
            background_eps_r: 1.0,
            conductors: vec![(1, vec![[0, 0, 0]]), (2, vec![[0, 0, 0]])],
            dielectrics: vec![],
        };
        assert!(matches!(
            build_grid(&desc),
            Err(GeometryError::DuplicateConductorClaim(..))
        ));
    }

    #[test]
    fn touching_conductors_rejected() {
        let desc = ResolvedStructure {
            voxel_edge: 1.0,
            background_eps_r: 1.0,
            conductors: vec![(1, vec![[0, 0, 0]]), (2, vec![[1, 0, 0]])],
            dielectrics: vec![],
        };
        let grid = build_grid(&desc).unwrap();
        assert!(matches!(
            enumerate_panels(&grid),
            Err(GeometryError::TouchingConductors(1, 2))
        ));
    }

    #[test]
    fn empty_structure_rejected() {
        let desc = ResolvedStructure {
            voxel_edge: 1.0,
            background_eps_r: 1.0,
            conductors: vec![],
            dielectrics: vec![],
        };
        assert!(matches!(build_grid(&desc), Err(GeometryError::EmptyStructure)));
    }

    #[test]
    fn box_primitive_two_voxels() {
        let v = voxelize_primitive(
            &Primitive::Box {
                min: [0.0, 0.0, 0.0],
                max: [2.0, 1.0, 1.0],
            },
            1.0,
        )
        .unwrap();
        assert_eq!(v.len(), 2);
    }

    #[test]
    fn sphere_on_corner_has_eight_voxels() {
        // sphere r = 0.25 centered on the lattice corner (0.5, 0.5, 0.5)
        let v = voxelize_primitive(
            &Primitive::Sphere {
                center: [0.5, 0.5, 0.5],
                radius: 0.25,
            },
            0.25,
        )
        .unwrap();
        assert_eq!(v.len(), 8);
    }

    #[test]
    fn coated_sphere_domain_matches_expected_size() {
        let dv = 0.05;
        let c = [0.5, 0.5, 0.5];
        let cond = voxelize_primitive(&Primitive::Sphere { center: c, radius: 0.25 }, dv).unwrap();
        let shell = voxelize_primitive(
            &Primitive::Shell {
                center: c,
                inner_radius: 0.25,
                outer_radius: 0.5,
            },
            dv,
        )
        .unwrap();
        let grid = build_grid(&ResolvedStructure {
            voxel_edge: dv,
            background_eps_r: 1.0,
            conductors: vec![(1, cond)],
            dielectrics: vec![(2.0, shell)],
        })
        .unwrap();
        assert_eq!(grid.dims(), [20, 20, 20]);
        assert_eq!(grid.voxel_count(), 8000);
        let panels = enumerate_panels(&grid).unwrap();
        // count tied to the voxel-center membership convention
        assert_eq!(panels.len(), 2376);
        assert_eq!(panels.conductor_count(), 480);
    }

    #[test]
    fn degenerate_primitives_rejected() {
        assert!(voxelize_primitive(
            &Primitive::Sphere {
                center: [0.0; 3],
                radius: 0.0
            },
            1.0
        )
        .is_err());
        assert!(voxelize_primitive(
            &Primitive::Shell {
                center: [0.0; 3],
                inner_radius: 0.5,
                outer_radius: 0.5
            },
            1.0
        )
        .is_err());
    }
}
