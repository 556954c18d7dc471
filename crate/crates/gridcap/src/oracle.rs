//! Independent quadrature references for the panel integrals, used by the
//! verification suites and tests. These deliberately avoid the
//! corner-difference primitives of [`crate::kernel`]: the parallel reference
//! reduces the four-fold integral to a two-dimensional correlation-kernel
//! integral (with an analytic polar treatment of the singular cell), and the
//! orthogonal reference reduces one axis analytically and integrates the rest
//! adaptively.

use crate::kernel::{PanelPairGeometry, EPS0};

const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;

/// Gauss-Legendre nodes and weights on [-1, 1] via Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev initial guess
        let mut t = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        loop {
            // Legendre P_n(t) and derivative by recurrence
            let (mut p0, mut p1) = (1.0, t);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * t * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (t * p1 - p0) / (t * t - 1.0);
            let dt = p1 / dp;
            t -= dt;
            if dt.abs() < 1e-15 {
                let (mut p0, mut p1) = (1.0, t);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * t * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                let dp = n as f64 * (t * p1 - p0) / (t * t - 1.0);
                x[i] = -t;
                x[n - 1 - i] = t;
                let wi = 2.0 / ((1.0 - t * t) * dp * dp);
                w[i] = wi;
                w[n - 1 - i] = wi;
                break;
            }
        }
    }
    (x, w)
}

/// Correlation kernel of two intervals: K(u) = |[s1,e1] ∩ ([s2,e2] - u)|.
#[derive(Clone, Copy)]
struct Tent {
    s1: f64,
    e1: f64,
    s2: f64,
    e2: f64,
}

impl Tent {
    fn breaks(&self) -> [f64; 4] {
        let mut b = [
            self.s2 - self.e1,
            self.e2 - self.e1,
            self.s2 - self.s1,
            self.e2 - self.s1,
        ];
        b.sort_by(|a, c| a.partial_cmp(c).unwrap());
        b
    }

    fn eval(&self, u: f64) -> f64 {
        let lo = self.s1.max(self.s2 - u);
        let hi = self.e1.min(self.e2 - u);
        (hi - lo).max(0.0)
    }
}

fn quad_cell_2d<F: Fn(f64, f64) -> f64>(
    f: &F,
    u0: f64,
    u1: f64,
    v0: f64,
    v1: f64,
    gx: &[f64],
    gw: &[f64],
) -> f64 {
    let (cu, hu) = (0.5 * (u0 + u1), 0.5 * (u1 - u0));
    let (cv, hv) = (0.5 * (v0 + v1), 0.5 * (v1 - v0));
    let mut sum = 0.0;
    for (i, &xi) in gx.iter().enumerate() {
        for (j, &xj) in gx.iter().enumerate() {
            sum += gw[i] * gw[j] * f(cu + hu * xi, cv + hv * xj);
        }
    }
    sum * hu * hv
}

#[allow(clippy::too_many_arguments)]
fn adapt_cell_2d<F: Fn(f64, f64) -> f64>(
    f: &F,
    u0: f64,
    u1: f64,
    v0: f64,
    v1: f64,
    tol: f64,
    depth: usize,
    g8: (&[f64], &[f64]),
    g16: (&[f64], &[f64]),
) -> f64 {
    let coarse = quad_cell_2d(f, u0, u1, v0, v1, g8.0, g8.1);
    let fine = quad_cell_2d(f, u0, u1, v0, v1, g16.0, g16.1);
    if (fine - coarse).abs() <= tol || depth >= 14 {
        return fine;
    }
    let um = 0.5 * (u0 + u1);
    let vm = 0.5 * (v0 + v1);
    let t = tol / 4.0;
    adapt_cell_2d(f, u0, um, v0, vm, t, depth + 1, g8, g16)
        + adapt_cell_2d(f, um, u1, v0, vm, t, depth + 1, g8, g16)
        + adapt_cell_2d(f, u0, um, vm, v1, t, depth + 1, g8, g16)
        + adapt_cell_2d(f, um, u1, vm, v1, t, depth + 1, g8, g16)
}

/// Reference value of the parallel-pair Galerkin potential integral, valid for
/// every configuration including identical panels.
pub fn potential_parallel_reference(pair: &PanelPairGeometry, tol: f64) -> f64 {
    let (xs1, xe1, ys1, ye1, z1, xs2, xe2, ys2, ye2, z2) = match *pair {
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
        } => (xs1, xe1, ys1, ye1, z1, xs2, xe2, ys2, ye2, z2),
        _ => panic!("parallel reference requested for orthogonal pair"),
    };
    let z = z2 - z1;
    let tx = Tent { s1: xs1, e1: xe1, s2: xs2, e2: xe2 };
    let ty = Tent { s1: ys1, e1: ye1, s2: ys2, e2: ye2 };
    let ub = tx.breaks();
    let vb = ty.breaks();
    let g8 = gauss_legendre(8);
    let g16 = gauss_legendre(16);
    let g48 = gauss_legendre(48);
    let scale: f64 = ub
        .iter()
        .chain(vb.iter())
        .fold(z.abs(), |acc, &p| acc.max(p.abs()));
    let mut total = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let (u0, u1) = (ub[i], ub[i + 1]);
            let (v0, v1) = (vb[j], vb[j + 1]);
            if u1 - u0 <= 0.0 || v1 - v0 <= 0.0 {
                continue;
            }
            if z == 0.0 && u0 <= 0.0 && 0.0 <= u1 && v0 <= 0.0 && 0.0 <= v1 {
                total += polar_cell(&tx, &ty, u0, u1, v0, v1, (&g48.0, &g48.1), (&g16.0, &g16.1));
            } else {
                let f = |u: f64, v: f64| tx.eval(u) * ty.eval(v) / (u * u + v * v + z * z).sqrt();
                total += adapt_cell_2d(
                    &f,
                    u0,
                    u1,
                    v0,
                    v1,
                    tol * scale * scale,
                    0,
                    (&g8.0, &g8.1),
                    (&g16.0, &g16.1),
                );
            }
        }
    }
    total / (FOUR_PI * EPS0)
}

/// Singular cell (z = 0, contains the origin): polar coordinates make the
/// integrand a piecewise-smooth polynomial along each ray.
#[allow(clippy::too_many_arguments)]
fn polar_cell(
    tx: &Tent,
    ty: &Tent,
    u0: f64,
    u1: f64,
    v0: f64,
    v1: f64,
    gth: (&[f64], &[f64]),
    grho: (&[f64], &[f64]),
) -> f64 {
    let mut total = 0.0;
    for (a1, sgu) in [(-u0, -1.0), (u1, 1.0)] {
        if a1 <= 0.0 {
            continue;
        }
        for (b1, sgv) in [(-v0, -1.0), (v1, 1.0)] {
            if b1 <= 0.0 {
                continue;
            }
            let ray = |th: f64| -> f64 {
                let (c, s) = (th.cos(), th.sin());
                let rc = if c > 1e-300 { a1 / c } else { f64::INFINITY };
                let rs = if s > 1e-300 { b1 / s } else { f64::INFINITY };
                let rmax = rc.min(rs);
                let mut acc = 0.0;
                for (k, &xk) in grho.0.iter().enumerate() {
                    let p = 0.5 * rmax * (xk + 1.0);
                    acc += grho.1[k] * tx.eval(sgu * p * c) * ty.eval(sgv * p * s);
                }
                acc * 0.5 * rmax
            };
            let th_split = b1.atan2(a1);
            for (t0, t1) in [(0.0, th_split), (th_split, std::f64::consts::FRAC_PI_2)] {
                let (ct, ht) = (0.5 * (t0 + t1), 0.5 * (t1 - t0));
                for (k, &xk) in gth.0.iter().enumerate() {
                    total += gth.1[k] * ht * ray(ct + ht * xk);
                }
            }
        }
    }
    total
}

/// Reference value of the orthogonal-pair Galerkin potential integral.
pub fn potential_orthogonal_reference(pair: &PanelPairGeometry, tol: f64) -> f64 {
    let (xs1, xe1, ys1, ye1, z1, xs2, xe2, y2, zs2, ze2) = match *pair {
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
        } => (xs1, xe1, ys1, ye1, z1, xs2, xe2, y2, zs2, ze2),
        _ => panic!("orthogonal reference requested for parallel pair"),
    };
    let tx = Tent { s1: xs1, e1: xe1, s2: xs2, e2: xe2 };
    let ub = tx.breaks();
    // F(s) = ∫ Kx(u)/sqrt(u^2+s^2) du, analytic per linear piece of Kx
    let f_of_s = move |s: f64| -> f64 {
        let mut tot = 0.0;
        for i in 0..3 {
            let (u0, u1) = (ub[i], ub[i + 1]);
            if u1 - u0 <= 0.0 {
                continue;
            }
            let (k0, k1) = (tx.eval(u0), tx.eval(u1));
            let q = (k1 - k0) / (u1 - u0);
            let p = k0 - q * u0;
            let r0 = (u0 * u0 + s * s).sqrt();
            let r1 = (u1 * u1 + s * s).sqrt();
            if p != 0.0 {
                if s > 0.0 {
                    tot += p * ((u1 / s).asinh() - (u0 / s).asinh());
                } else {
                    // log-singular parts cancel across pieces of a continuous Kx
                    let lo = if u1 != 0.0 { u1.abs().ln() } else { -745.0 };
                    let hi = if u0 != 0.0 { u0.abs().ln() } else { -745.0 };
                    tot += p * (u1.signum() * lo - u0.signum() * hi);
                }
            }
            tot += q * (r1 - r0);
        }
        tot
    };
    let (b0, b1) = (y2 - ye1, y2 - ys1);
    let (c0, c1) = (zs2 - z1, ze2 - z1);
    let mut bs = vec![b0, b1];
    if b0 < 0.0 && 0.0 < b1 {
        bs.insert(1, 0.0);
    }
    let mut cs = vec![c0, c1];
    if c0 < 0.0 && 0.0 < c1 {
        cs.insert(1, 0.0);
    }
    let g8 = gauss_legendre(8);
    let g16 = gauss_legendre(16);
    let scale = b0
        .abs()
        .max(b1.abs())
        .max(c0.abs())
        .max(c1.abs())
        .max(ub.iter().fold(0.0f64, |a, &p| a.max(p.abs())));
    let f = |b: f64, c: f64| f_of_s((b * b + c * c).sqrt());
    let mut total = 0.0;
    for i in 0..bs.len() - 1 {
        for j in 0..cs.len() - 1 {
            total += adapt_cell_2d(
                &f,
                bs[i],
                bs[i + 1],
                cs[j],
                cs[j + 1],
                tol * scale * scale * scale,
                0,
                (&g8.0, &g8.1),
                (&g16.0, &g16.1),
            );
        }
    }
    total / (FOUR_PI * EPS0)
}

/// Reference potential for either configuration.
pub fn potential_reference(pair: &PanelPairGeometry, tol: f64) -> f64 {
    match pair {
        PanelPairGeometry::Parallel { .. } => potential_parallel_reference(pair, tol),
        PanelPairGeometry::Orthogonal { .. } => potential_orthogonal_reference(pair, tol),
    }
}

/// Plain high-order tensor Gauss potential (separated pairs only).
pub fn potential_gauss_highorder(pair: &PanelPairGeometry, n: usize) -> f64 {
    let (gx, gw) = gauss_legendre(n);
    let (rects, fixed_axis_obs, fixed_axis_src);
    match *pair {
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
        } => {
            rects = ((xs1, xe1, ys1, ye1, z1), (xs2, xe2, ys2, ye2, z2));
            fixed_axis_obs = [0usize, 1, 2];
            fixed_axis_src = [0usize, 1, 2];
        }
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
        } => {
            rects = ((xs1, xe1, ys1, ye1, z1), (xs2, xe2, zs2, ze2, y2));
            fixed_axis_obs = [0usize, 1, 2];
            fixed_axis_src = [0usize, 2, 1];
        }
    }
    let eval_pts = |rect: (f64, f64, f64, f64, f64), axes: [usize; 3]| {
        let (u0, u1, v0, v1, fx) = rect;
        let (cu, hu) = (0.5 * (u0 + u1), 0.5 * (u1 - u0));
        let (cv, hv) = (0.5 * (v0 + v1), 0.5 * (v1 - v0));
        let mut pts = Vec::with_capacity(n * n);
        for (i, &xi) in gx.iter().enumerate() {
            for (j, &xj) in gx.iter().enumerate() {
                let mut p = [0.0; 3];
                p[axes[0]] = cu + hu * xi;
                p[axes[1]] = cv + hv * xj;
                p[axes[2]] = fx;
                pts.push((p, gw[i] * gw[j] * hu * hv));
            }
        }
        pts
    };
    let obs = eval_pts(rects.0, fixed_axis_obs);
    let src = eval_pts(rects.1, fixed_axis_src);
    let mut sum = 0.0;
    for (po, wo) in &obs {
        for (ps, ws) in &src {
            let dx = po[0] - ps[0];
            let dy = po[1] - ps[1];
            let dz = po[2] - ps[2];
            sum += wo * ws / (dx * dx + dy * dy + dz * dz).sqrt();
        }
    }
    sum / (FOUR_PI * EPS0)
}

/// Central finite difference of the high-order Gauss potential with respect to
/// the observer height: the independent reference for the normal-field
/// integrals on separated pairs.
pub fn efield_fd_reference(pair: &PanelPairGeometry, h: f64, n: usize) -> f64 {
    let shift = |pair: &PanelPairGeometry, dz: f64| -> PanelPairGeometry {
        match *pair {
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
            } => PanelPairGeometry::Parallel {
                xs1,
                xe1,
                ys1,
                ye1,
                z1: z1 + dz,
                xs2,
                xe2,
                ys2,
                ye2,
                z2,
            },
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
            } => PanelPairGeometry::Orthogonal {
                xs1,
                xe1,
                ys1,
                ye1,
                z1: z1 + dz,
                xs2,
                xe2,
                y2,
                zs2,
                ze2,
            },
        }
    };
    let up = potential_gauss_highorder(&shift(pair, h), n);
    let dn = potential_gauss_highorder(&shift(pair, -h), n);
    (up - dn) / (2.0 * h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{efield_integral, potential_closed, KernelConfig};
    use crate::Axis;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let (x, w) = gauss_legendre(8);
        // degree-15 polynomial integrated exactly
        let int: f64 = x.iter().zip(&w).map(|(&xi, &wi)| wi * xi.powi(14)).sum();
        assert!((int - 2.0 / 15.0).abs() < 1e-14);
        let total: f64 = w.iter().sum();
        assert!((total - 2.0).abs() < 1e-14);
    }

    #[test]
    fn reference_matches_closed_forms() {
        let configs = [
            // identical
            PanelPairGeometry::from_panels(Axis::Z, [0.5, 0.5, 0.0], Axis::Z, [0.5, 0.5, 0.0], 0.5),
            // coplanar edge-sharing
            PanelPairGeometry::from_panels(Axis::Z, [0.5, 0.5, 0.0], Axis::Z, [1.5, 0.5, 0.0], 0.5),
            // offset parallel
            PanelPairGeometry::from_panels(Axis::Z, [0.5, 0.5, 0.0], Axis::Z, [1.7, -0.4, 2.0], 0.5),
            // orthogonal edge-sharing
            PanelPairGeometry::from_panels(Axis::Z, [0.5, 0.5, 0.0], Axis::Y, [0.5, 1.0, 0.5], 0.5),
            // orthogonal separated
            PanelPairGeometry::from_panels(Axis::Z, [0.5, 0.5, 0.0], Axis::X, [3.0, 1.5, 1.0], 0.5),
        ];
        for (i, pair) in configs.iter().enumerate() {
            let c = potential_closed(pair);
            let o = potential_reference(pair, 1e-12);
            assert!(
                (c - o).abs() / o.abs() < 1e-8,
                "config {i}: closed {c} vs reference {o}"
            );
        }
    }

    #[test]
    fn fd_reference_matches_efield() {
        let cfg = KernelConfig { near_threshold: 1e9 };
        let pair =
            PanelPairGeometry::from_panels(Axis::Z, [0.5, 0.5, 0.0], Axis::Z, [1.0, 0.3, 2.5], 0.5);
        let e = efield_integral(&pair, &cfg);
        let fd = efield_fd_reference(&pair, 1e-4, 24);
        assert!((e - fd).abs() / fd.abs() < 1e-6, "{e} vs {fd}");
    }
}
