//! Galerkin panel-panel interaction integrals for axis-aligned square panels:
//! the double surface integral of the free-space Green's function (potential),
//! its observer-normal derivative (normal E-field), and the local jump term
//! for overlapping dielectric panels.
//!
//! Near interactions use exact closed forms built from corner-difference
//! primitives; far interactions switch to tensor-product Gauss quadrature.
//! All values are SI and include the 1/(4*pi*eps0) prefactor.

use crate::Axis;

/// Vacuum permittivity [F/m].
pub const EPS0: f64 = 8.854_187_812_8e-12;

/// Regularizer used inside the normal-field closed forms to resolve the
/// coplanar limit. Fixed, not configurable.
pub const EPS_REG: f64 = 1e-37;

const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;

/// 4-point Gauss-Legendre nodes/weights on [-1, 1].
const GAUSS_X: [f64; 4] = [
    -0.861_136_311_594_052_6,
    -0.339_981_043_584_856_3,
    0.339_981_043_584_856_3,
    0.861_136_311_594_052_6,
];
const GAUSS_W: [f64; 4] = [
    0.347_854_845_137_453_85,
    0.652_145_154_862_546_1,
    0.652_145_154_862_546_1,
    0.347_854_845_137_453_85,
];

/// Evaluation policy for the integrals.
#[derive(Debug, Clone, Copy)]
pub struct KernelConfig {
    /// Center separation (in units of the panel edge) beyond which Gauss
    /// quadrature replaces the closed forms.
    pub near_threshold: f64,
}

impl Default for KernelConfig {
    fn default() -> Self {
        Self { near_threshold: 5.0 }
    }
}

/// Relative configuration of two axis-aligned panels, mapped to canonical
/// coordinates.
///
/// Parallel pairs: both panels span (x, y) at heights `z1` (observer) and
/// `z2` (source). Orthogonal pairs: the observer spans (x, y) at `z1` and the
/// source spans (x, z) at `y2`; the shared axis is x.
#[derive(Debug, Clone, Copy)]
pub enum PanelPairGeometry {
    Parallel {
        xs1: f64,
        xe1: f64,
        ys1: f64,
        ye1: f64,
        z1: f64,
        xs2: f64,
        xe2: f64,
        ys2: f64,
        ye2: f64,
        z2: f64,
    },
    Orthogonal {
        xs1: f64,
        xe1: f64,
        ys1: f64,
        ye1: f64,
        z1: f64,
        xs2: f64,
        xe2: f64,
        y2: f64,
        zs2: f64,
        ze2: f64,
    },
}

impl PanelPairGeometry {
    /// Canonical geometry for an observer panel with normal `obs_axis` centered
    /// at `obs` and a source panel with normal `src_axis` centered at `src`,
    /// both squares of side `2*half`.
    ///
    /// The observer normal maps to +z; for orthogonal pairs the source normal
    /// maps to +y and the shared axis to x.
    pub fn from_panels(obs_axis: Axis, obs: [f64; 3], src_axis: Axis, src: [f64; 3], half: f64) -> Self {
        let a = obs_axis.index();
        let b = src_axis.index();
        if a == b {
            let (u, v) = match a {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            PanelPairGeometry::Parallel {
                xs1: obs[u] - half,
                xe1: obs[u] + half,
                ys1: obs[v] - half,
                ye1: obs[v] + half,
                z1: obs[a],
                xs2: src[u] - half,
                xe2: src[u] + half,
                ys2: src[v] - half,
                ye2: src[v] + half,
                z2: src[a],
            }
        } else {
            let g = 3 - a - b; // shared in-plane axis
            PanelPairGeometry::Orthogonal {
                xs1: obs[g] - half,
                xe1: obs[g] + half,
                ys1: obs[b] - half,
                ye1: obs[b] + half,
                z1: obs[a],
                xs2: src[g] - half,
                xe2: src[g] + half,
                y2: src[b],
                zs2: src[a] - half,
                ze2: src[a] + half,
            }
        }
    }

    pub fn is_parallel(&self) -> bool {
        matches!(self, PanelPairGeometry::Parallel { .. })
    }

    /// Identical panels (the overlapping self configuration).
    pub fn is_identical(&self) -> bool {
        match *self {
            PanelPairGeometry::Parallel {
                xs1,
                xe1,
                ys1,
                ye1,
                z1,
                xs2,
                xe2,
                ys2,
                ye2,
                z2,
            } => xs1 == xs2 && xe1 == xe2 && ys1 == ys2 && ye1 == ye2 && z1 == z2,
            _ => false,
        }
    }

    /// Panel centers in canonical coordinates (observer, source).
    pub fn centers(&self) -> ([f64; 3], [f64; 3]) {
        match *self {
            PanelPairGeometry::Parallel {
                xs1,
                xe1,
                ys1,
                ye1,
                z1,
                xs2,
                xe2,
                ys2,
                ye2,
                z2,
            } => (
                [0.5 * (xs1 + xe1), 0.5 * (ys1 + ye1), z1],
                [0.5 * (xs2 + xe2), 0.5 * (ys2 + ye2), z2],
            ),
            PanelPairGeometry::Orthogonal {
                xs1,
                xe1,
                ys1,
                ye1,
                z1,
                xs2,
                xe2,
                y2,
                zs2,
                ze2,
            } => (
                [0.5 * (xs1 + xe1), 0.5 * (ys1 + ye1), z1],
                [0.5 * (xs2 + xe2), y2, 0.5 * (zs2 + ze2)],
            ),
        }
    }

    fn edge(&self) -> f64 {
        match *self {
            PanelPairGeometry::Parallel { xs1, xe1, xs2, xe2, .. } => (xe1 - xs1).max(xe2 - xs2),
            PanelPairGeometry::Orthogonal { xs1, xe1, xs2, xe2, .. } => (xe1 - xs1).max(xe2 - xs2),
        }
    }

    fn center_distance(&self) -> f64 {
        let (o, s) = self.centers();
        let d = [o[0] - s[0], o[1] - s[1], o[2] - s[2]];
        (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt()
    }

    fn is_near(&self, config: &KernelConfig) -> bool {
        self.center_distance() <= config.near_threshold * self.edge()
    }
}

/// Permittivity jump across a dielectric panel, SI permittivities (already
/// multiplied by eps0).
#[derive(Debug, Clone, Copy)]
pub struct DielectricJump {
    pub eps_d: f64,
    pub eps_b: f64,
    pub area: f64,
}

/// Local term for the overlapping dielectric panel:
/// `A (eps_d + eps_b) / (2 eps0 (eps_d - eps_b))`.
pub fn diagonal_entry(jump: DielectricJump) -> f64 {
    assert!(
        jump.eps_d != jump.eps_b,
        "dielectric panel requires a permittivity contrast"
    );
    assert!(jump.eps_d > 0.0 && jump.eps_b > 0.0);
    jump.area * (jump.eps_d + jump.eps_b) / (2.0 * EPS0 * (jump.eps_d - jump.eps_b))
}

// ---------------------------------------------------------------------------
// Potential integral: corner-difference primitives
// ---------------------------------------------------------------------------

/// x*ln(x+r) with the x+r -> 0 limit resolved; `t2` is the sum of the squares
/// of the two transverse coordinates (r^2 - x^2).
#[inline]
fn ln_term(x: f64, r: f64, t2: f64) -> f64 {
    if x > 0.0 {
        (x + r).ln()
    } else if t2 > 0.0 {
        t2.ln() - (r - x).ln()
    } else {
        0.0 // the multiplying coefficient vanishes in this limit
    }
}

/// Primitive F(x,y,z) with d2/dx2 d2/dy2 F = 1/sqrt(x^2+y^2+z^2).
#[inline]
fn prim_parallel(x: f64, y: f64, z: f64) -> f64 {
    let r = (x * x + y * y + z * z).sqrt();
    let mut out = 0.0;
    out += 0.5 * (y * y - z * z) * x * ln_term(x, r, y * y + z * z);
    out += 0.5 * (x * x - z * z) * y * ln_term(y, r, x * x + z * z);
    if z != 0.0 && r > 0.0 {
        out -= x * y * z * (x * y / (z * r)).atan();
    }
    out -= r / 6.0 * (x * x + y * y - 2.0 * z * z);
    out
}

/// Primitive H(x,y,z) with d2/dx2 d/dy d/dz H = 1/sqrt(x^2+y^2+z^2).
#[inline]
fn prim_orthogonal(x: f64, y: f64, z: f64) -> f64 {
    let r = (x * x + y * y + z * z).sqrt();
    let mut out = 0.0;
    if x != 0.0 && y * y + z * z > 0.0 {
        out += x * y * z * (x / (y * y + z * z).sqrt()).asinh();
    }
    if y != 0.0 && x * x + z * z > 0.0 {
        out += (x * x * z / 2.0 - z * z * z / 6.0) * (y / (x * x + z * z).sqrt()).asinh();
    }
    if z != 0.0 && x * x + y * y > 0.0 {
        out += (x * x * y / 2.0 - y * y * y / 6.0) * (z / (x * x + y * y).sqrt()).asinh();
    }
    if y != 0.0 && r > 0.0 {
        out -= x * y * y / 2.0 * (x * z / (y * r)).atan();
    }
    if x != 0.0 && r > 0.0 {
        out -= x * x * x / 6.0 * (y * z / (x * r)).atan();
    }
    if z != 0.0 && r > 0.0 {
        out -= x * z * z / 2.0 * (x * y / (z * r)).atan();
    }
    out - y * z * r / 3.0
}

fn corners_parallel(p: &PanelPairGeometry) -> ([f64; 4], [f64; 4], f64) {
    match *p {
        PanelPairGeometry::Parallel {
            xs1,
            xe1,
            ys1,
            ye1,
            z1,
            xs2,
            xe2,
            ys2,
            ye2,
            z2,
        } => (
            [xs2 - xe1, xe2 - xe1, xe2 - xs1, xs2 - xs1],
            [ys2 - ye1, ye2 - ye1, ye2 - ys1, ys2 - ys1],
            z2 - z1,
        ),
        _ => unreachable!("parallel corners requested for orthogonal pair"),
    }
}

fn corners_orthogonal(p: &PanelPairGeometry) -> ([f64; 4], [f64; 2], [f64; 2]) {
    match *p {
        PanelPairGeometry::Orthogonal {
            xs1,
            xe1,
            ys1,
            ye1,
            z1,
            xs2,
            xe2,
            y2,
            zs2,
            ze2,
        } => (
            [xs2 - xe1, xe2 - xe1, xe2 - xs1, xs2 - xs1],
            [y2 - ys1, y2 - ye1],
            [ze2 - z1, zs2 - z1],
        ),
        _ => unreachable!("orthogonal corners requested for parallel pair"),
    }
}

/// Galerkin potential integral over the pair, closed form (valid at any
/// separation, including touching and identical panels).
pub fn potential_closed(pair: &PanelPairGeometry) -> f64 {
    let reduced = match pair {
        PanelPairGeometry::Parallel { .. } => {
            let (a, b, z) = corners_parallel(pair);
            let mut sum = 0.0;
            for (k, &ak) in a.iter().enumerate() {
                for (m, &bm) in b.iter().enumerate() {
                    let sgn = if (k + m) % 2 == 0 { 1.0 } else { -1.0 };
                    sum += sgn * prim_parallel(ak, bm, z);
                }
            }
            sum
        }
        PanelPairGeometry::Orthogonal { .. } => {
            let (a, b, c) = corners_orthogonal(pair);
            let mut sum = 0.0;
            for (k, &ak) in a.iter().enumerate() {
                for (m, &bm) in b.iter().enumerate() {
                    for (l, &cl) in c.iter().enumerate() {
                        let sgn = if (k + m + l) % 2 == 0 { 1.0 } else { -1.0 };
                        sum += sgn * prim_orthogonal(ak, bm, cl);
                    }
                }
            }
            sum
        }
    };
    reduced / (FOUR_PI * EPS0)
}

// ---------------------------------------------------------------------------
// Normal E-field integrals (observer-normal derivative of the potential)
// ---------------------------------------------------------------------------

/// dF/dz of the parallel primitive, z being the panel separation z2 - z1.
#[inline]
fn dprim_parallel_dz(x: f64, y: f64, z: f64) -> f64 {
    let r = (x * x + y * y + z * z).sqrt();
    let mut t = 0.0;
    t += 0.5 * x * z * (y * y - z * z) / ((x + r) * r + EPS_REG);
    t -= x * z * (x + r + EPS_REG).ln();
    t += 0.5 * y * z * (x * x - z * z) / ((y + r) * r + EPS_REG);
    t -= y * z * (y + r + EPS_REG).ln();
    t += 2.0 * z * r / 3.0;
    t -= z * (x * x + y * y - 2.0 * z * z) / (6.0 * r + EPS_REG);
    t -= x * y * (x * y / (z * r + EPS_REG)).atan();
    t += x * x * y * y * z * (z * z + r * r) / (r * (z * z * r * r + x * x * y * y) + EPS_REG);
    t
}

/// Normal-field integral for parallel panels: the derivative of the potential
/// integral along the observer normal (+z in canonical coordinates).
///
/// Matches the central finite difference of `potential_closed` with respect to
/// the observer height.
pub fn efield_parallel_closed(pair: &PanelPairGeometry) -> f64 {
    let (a, b, z) = corners_parallel(pair);
    let z = z + EPS_REG;
    let mut sum = 0.0;
    for (k, &ak) in a.iter().enumerate() {
        for (m, &bm) in b.iter().enumerate() {
            let sgn = if (k + m) % 2 == 0 { 1.0 } else { -1.0 };
            sum += sgn * dprim_parallel_dz(ak, bm, z);
        }
    }
    -sum / (FOUR_PI * EPS0)
}

/// dH/dz of the orthogonal primitive.
#[inline]
fn dprim_orthogonal_dz(x: f64, y: f64, z: f64) -> f64 {
    let r = (x * x + y * y + z * z).sqrt();
    let mut t = 0.0;
    if x != 0.0 && y * y + z * z > 0.0 {
        t += x * y * (x / (y * y + z * z).sqrt()).asinh();
    }
    if y != 0.0 && x * x + z * z > 0.0 {
        t += 0.5 * (x * x - z * z) * (y / (x * x + z * z).sqrt()).asinh();
    }
    if z != 0.0 && r > 0.0 {
        t -= x * z * (x * y / (z * r + EPS_REG)).atan();
    }
    t - 0.5 * y * r
}

/// Normal-field integral for orthogonal panels: derivative of the potential
/// integral along the observer normal (+z in canonical coordinates).
pub fn efield_orthogonal_closed(pair: &PanelPairGeometry) -> f64 {
    let (a, b, c) = corners_orthogonal(pair);
    let mut sum = 0.0;
    for (k, &ak) in a.iter().enumerate() {
        for (m, &bm) in b.iter().enumerate() {
            for (l, &cl) in c.iter().enumerate() {
                let sgn = if (k + m + l) % 2 == 0 { 1.0 } else { -1.0 };
                sum += sgn * dprim_orthogonal_dz(ak, bm, cl);
            }
        }
    }
    -sum / (FOUR_PI * EPS0)
}

// ---------------------------------------------------------------------------
// Far-field Gauss quadrature
// ---------------------------------------------------------------------------

struct QuadPanel {
    pts: [[f64; 3]; 16],
    wts: [f64; 16],
}

fn quad_points(pair: &PanelPairGeometry, observer: bool) -> QuadPanel {
    let (u_lo, u_hi, v_lo, v_hi, fixed, axes) = match (*pair, observer) {
        (PanelPairGeometry::Parallel { xs1, xe1, ys1, ye1, z1, .. }, true) => {
            (xs1, xe1, ys1, ye1, z1, [0usize, 1, 2])
        }
        (PanelPairGeometry::Parallel { xs2, xe2, ys2, ye2, z2, .. }, false) => {
            (xs2, xe2, ys2, ye2, z2, [0usize, 1, 2])
        }
        (PanelPairGeometry::Orthogonal { xs1, xe1, ys1, ye1, z1, .. }, true) => {
            (xs1, xe1, ys1, ye1, z1, [0usize, 1, 2])
        }
        (PanelPairGeometry::Orthogonal { xs2, xe2, zs2, ze2, y2, .. }, false) => {
            // source spans (x, z) at fixed y
            (xs2, xe2, zs2, ze2, y2, [0usize, 2, 1])
        }
    };
    let (cu, hu) = (0.5 * (u_lo + u_hi), 0.5 * (u_hi - u_lo));
    let (cv, hv) = (0.5 * (v_lo + v_hi), 0.5 * (v_hi - v_lo));
    let mut pts = [[0.0; 3]; 16];
    let mut wts = [0.0; 16];
    let mut n = 0;
    for i in 0..4 {
        for j in 0..4 {
            let mut p = [0.0; 3];
            p[axes[0]] = cu + hu * GAUSS_X[i];
            p[axes[1]] = cv + hv * GAUSS_X[j];
            p[axes[2]] = fixed;
            pts[n] = p;
            wts[n] = GAUSS_W[i] * GAUSS_W[j] * hu * hv;
            n += 1;
        }
    }
    QuadPanel { pts, wts }
}

/// 4x4-per-panel tensor Gauss evaluation of the potential integral.
pub fn potential_gauss(pair: &PanelPairGeometry) -> f64 {
    let obs = quad_points(pair, true);
    let src = quad_points(pair, false);
    let mut sum = 0.0;
    for i in 0..16 {
        for j in 0..16 {
            let dx = obs.pts[i][0] - src.pts[j][0];
            let dy = obs.pts[i][1] - src.pts[j][1];
            let dz = obs.pts[i][2] - src.pts[j][2];
            let r = (dx * dx + dy * dy + dz * dz).sqrt();
            sum += obs.wts[i] * src.wts[j] / r;
        }
    }
    sum / (FOUR_PI * EPS0)
}

/// 4x4-per-panel tensor Gauss evaluation of the observer-normal derivative,
/// via the analytic gradient of the Green's function (the observer normal is
/// +z in canonical coordinates).
pub fn efield_gauss(pair: &PanelPairGeometry) -> f64 {
    let obs = quad_points(pair, true);
    let src = quad_points(pair, false);
    let mut sum = 0.0;
    for i in 0..16 {
        for j in 0..16 {
            let dx = obs.pts[i][0] - src.pts[j][0];
            let dy = obs.pts[i][1] - src.pts[j][1];
            let dz = obs.pts[i][2] - src.pts[j][2];
            let r2 = dx * dx + dy * dy + dz * dz;
            let r = r2.sqrt();
            sum -= obs.wts[i] * src.wts[j] * dz / (r2 * r);
        }
    }
    sum / (FOUR_PI * EPS0)
}

// ---------------------------------------------------------------------------
// Dispatching entry points
// ---------------------------------------------------------------------------

/// Galerkin potential integral with the near/far policy applied.
pub fn potential_integral(pair: &PanelPairGeometry, config: &KernelConfig) -> f64 {
    if pair.is_near(config) {
        potential_closed(pair)
    } else {
        potential_gauss(pair)
    }
}

/// Normal E-field integral with the near/far policy applied. The result is
/// the derivative along the observer's +normal in canonical coordinates.
pub fn efield_integral(pair: &PanelPairGeometry, config: &KernelConfig) -> f64 {
    if pair.is_near(config) {
        match pair {
            PanelPairGeometry::Parallel { .. } => efield_parallel_closed(pair),
            PanelPairGeometry::Orthogonal { .. } => efield_orthogonal_closed(pair),
        }
    } else {
        efield_gauss(pair)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_pair_parallel(dz: f64) -> PanelPairGeometry {
        PanelPairGeometry::from_panels(Axis::Z, [0.5, 0.5, 0.0], Axis::Z, [0.5, 0.5, dz], 0.5)
    }

    #[test]
    fn self_term_matches_frozen_oracle_value() {
        // Independent oracle value for the coincident unit-square pair
        // (reduced units), frozen from the polar-analytic quadrature route.
        let reduced_self = 2.973_209_598_247_38;
        let pair = unit_pair_parallel(0.0);
        assert!(pair.is_identical());
        let v = potential_closed(&pair) * FOUR_PI * EPS0;
        assert!(
            (v - reduced_self).abs() < 1e-12 * reduced_self,
            "self term {v}"
        );
    }

    #[test]
    fn far_field_approaches_point_charge() {
        let pair = unit_pair_parallel(100.0);
        let v = potential_integral(&pair, &KernelConfig::default());
        let point = 1.0 / (FOUR_PI * EPS0 * 100.0);
        assert!((v - point).abs() / point < 1e-4, "far field {v} vs {point}");
    }

    #[test]
    fn potential_reciprocity_exact() {
        let p1 = PanelPairGeometry::from_panels(
            Axis::X,
            [0.0, 0.3, 0.7],
            Axis::Y,
            [1.2, 0.5, -0.4],
            0.5,
        );
        let p2 = PanelPairGeometry::from_panels(
            Axis::Y,
            [1.2, 0.5, -0.4],
            Axis::X,
            [0.0, 0.3, 0.7],
            0.5,
        );
        let cfg = KernelConfig::default();
        let a = potential_integral(&p1, &cfg);
        let b = potential_integral(&p2, &cfg);
        assert!((a - b).abs() <= 1e-13 * a.abs(), "{a} vs {b}");
    }

    #[test]
    fn closed_matches_gauss_at_moderate_separation() {
        for dz in [3.0, 4.0, 6.0] {
            let pair = unit_pair_parallel(dz);
            let c = potential_closed(&pair);
            let g = potential_gauss(&pair);
            assert!((c - g).abs() / c.abs() < 1e-8, "dz={dz}: {c} vs {g}");
        }
    }

    #[test]
    fn efield_coplanar_parallel_vanishes() {
        let pair = PanelPairGeometry::from_panels(
            Axis::Z,
            [0.5, 0.5, 0.0],
            Axis::Z,
            [3.5, 0.5, 0.0],
            0.5,
        );
        let e = efield_parallel_closed(&pair);
        let scale = 1.0 / (FOUR_PI * EPS0);
        assert!(e.abs() < 1e-20 * scale, "coplanar efield {e}");
    }

    #[test]
    fn efield_odd_in_observer_offset() {
        let up = unit_pair_parallel(3.0);
        let down = unit_pair_parallel(-3.0);
        let eu = efield_parallel_closed(&up);
        let ed = efield_parallel_closed(&down);
        assert!((eu + ed).abs() < 1e-12 * eu.abs());
        // source above the observer pulls the derivative positive
        assert!(eu > 0.0);
    }

    #[test]
    fn efield_matches_finite_difference_of_potential() {
        let cfg = KernelConfig { near_threshold: 1e9 };
        let h = 1e-4 * 1.0;
        // parallel, offset purely in z by 3 panel edges
        let pair = unit_pair_parallel(3.0);
        let e = efield_parallel_closed(&pair);
        let up = unit_pair_parallel(3.0 - h); // moving the observer +h == source -h
        let dn = unit_pair_parallel(3.0 + h);
        let fd = (potential_integral(&up, &cfg) - potential_integral(&dn, &cfg)) / (2.0 * h);
        assert!((e - fd).abs() / fd.abs() < 1e-5, "parallel fd {e} vs {fd}");

        // orthogonal pair
        let obs = [0.2, -0.1, 0.4];
        let src = [1.3, 2.2, -0.8];
        let e = efield_integral(
            &PanelPairGeometry::from_panels(Axis::Z, obs, Axis::Y, src, 0.5),
            &cfg,
        );
        let mut op = obs;
        op[2] += h;
        let mut om = obs;
        om[2] -= h;
        let fp = potential_integral(
            &PanelPairGeometry::from_panels(Axis::Z, op, Axis::Y, src, 0.5),
            &cfg,
        );
        let fm = potential_integral(
            &PanelPairGeometry::from_panels(Axis::Z, om, Axis::Y, src, 0.5),
            &cfg,
        );
        let fd = (fp - fm) / (2.0 * h);
        assert!((e - fd).abs() / fd.abs() < 1e-4, "orthogonal fd {e} vs {fd}");
    }

    #[test]
    fn efield_orthogonal_touching_is_finite() {
        // edge-sharing orthogonal pair
        let pair = PanelPairGeometry::from_panels(
            Axis::Z,
            [0.5, 0.5, 0.0],
            Axis::Y,
            [0.5, 1.0, 0.5],
            0.5,
        );
        let e = efield_orthogonal_closed(&pair);
        assert!(e.is_finite());
        let p = potential_closed(&pair);
        assert!(p.is_finite() && p > 0.0);
    }

    #[test]
    fn scale_covariance() {
        let cfg = KernelConfig::default();
        let s = 2.5;
        let obs = [0.1, 0.4, 0.0];
        let src = [1.1, -0.2, 1.4];
        let p1 = PanelPairGeometry::from_panels(Axis::Z, obs, Axis::Z, src, 0.5);
        let p2 = PanelPairGeometry::from_panels(
            Axis::Z,
            [obs[0] * s, obs[1] * s, obs[2] * s],
            Axis::Z,
            [src[0] * s, src[1] * s, src[2] * s],
            0.5 * s,
        );
        let v1 = potential_integral(&p1, &cfg);
        let v2 = potential_integral(&p2, &cfg);
        assert!((v2 - v1 * s.powi(3)).abs() < 1e-12 * v2.abs());
        let e1 = efield_integral(&p1, &cfg);
        let e2 = efield_integral(&p2, &cfg);
        assert!((e2 - e1 * s.powi(2)).abs() < 1e-11 * e2.abs());
    }

    #[test]
    fn diagonal_entry_examples() {
        let v = diagonal_entry(DielectricJump {
            eps_d: 2.0 * EPS0,
            eps_b: EPS0,
            area: 1.0,
        });
        assert!((v - 3.0 / (2.0 * EPS0)).abs() < 1e-3);

        let dv = 0.25f64;
        let v = diagonal_entry(DielectricJump {
            eps_d: 3.0 * EPS0,
            eps_b: EPS0,
            area: dv * dv,
        });
        assert!((v - dv * dv / EPS0).abs() < 1e-12 * v);

        // conductor limit eps_d -> infinity
        let v = diagonal_entry(DielectricJump {
            eps_d: 1e12 * EPS0,
            eps_b: EPS0,
            area: 1.0,
        });
        let limit = 1.0 / (2.0 * EPS0);
        assert!((v - limit).abs() / limit < 1e-9);
    }
}
