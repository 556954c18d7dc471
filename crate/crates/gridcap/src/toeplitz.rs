//! Block Toeplitz interaction tensors over the voxel-panel grids, their
//! circulant embedding, and the Fourier-domain kernel set used by the FFT
//! matrix-vector product.
//!
//! For a domain of `Nx x Ny x Nz` voxels, the voxel panels with normals along
//! x, y, z live on grids of `(Nx+1) x Ny x Nz`, `Nx x (Ny+1) x Nz` and
//! `Nx x Ny x (Nz+1)` slots. Panel-panel interactions depend only on the slot
//! offset, so each (observer-normal, source-normal) pair is described by one
//! tensor swept over offsets: `A` tensors hold potential integrals (six
//! unordered pairs, the rest follow by reciprocity), `B` tensors hold
//! normal-field integrals (all nine ordered pairs).

use crate::kernel::{efield_integral, potential_integral, KernelConfig, PanelPairGeometry};
use crate::tensor::{FftContext, Tensor3};
use crate::Axis;
use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ToeplitzError {
    #[error("set was generated at voxel edge {0}, expected unit voxels")]
    NotUnitVoxel(f64),
    #[error("target voxel edge must be positive, got {0}")]
    BadVoxelEdge(f64),
    #[error("target dims {target:?} exceed cached dims {cached:?}; regenerate the cache at a larger dims class")]
    TargetExceedsCache {
        target: [usize; 3],
        cached: [usize; 3],
    },
}

/// Which integral family a tensor holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Which {
    /// Potential integrals (the P blocks).
    A,
    /// Normal-field integrals (the E blocks).
    B,
}

/// The six unordered pairs stored for A tensors.
pub const A_PAIRS: [(Axis, Axis); 6] = [
    (Axis::X, Axis::X),
    (Axis::Y, Axis::Y),
    (Axis::Z, Axis::Z),
    (Axis::X, Axis::Y),
    (Axis::X, Axis::Z),
    (Axis::Y, Axis::Z),
];

/// All nine ordered pairs stored for B tensors.
pub const B_PAIRS: [(Axis, Axis); 9] = [
    (Axis::X, Axis::X),
    (Axis::X, Axis::Y),
    (Axis::X, Axis::Z),
    (Axis::Y, Axis::X),
    (Axis::Y, Axis::Y),
    (Axis::Y, Axis::Z),
    (Axis::Z, Axis::X),
    (Axis::Z, Axis::Y),
    (Axis::Z, Axis::Z),
];

pub fn a_pair_index(alpha: Axis, beta: Axis) -> Option<usize> {
    A_PAIRS.iter().position(|&p| p == (alpha, beta))
}

pub fn b_pair_index(alpha: Axis, beta: Axis) -> usize {
    3 * alpha.index() + beta.index()
}

/// Tensor extents for a given pair over domain dims (Table-driven).
pub fn pair_dims(alpha: Axis, beta: Axis, dims: [usize; 3]) -> (usize, usize, usize) {
    let a = alpha.index();
    let b = beta.index();
    let mut d = dims;
    if a == b {
        d[a] += 1;
    } else {
        d[a] += 2;
        d[b] += 2;
    }
    (d[0], d[1], d[2])
}

/// Source-panel center offset for a given pair, in units of the voxel edge.
pub fn source_offset(alpha: Axis, beta: Axis) -> [f64; 3] {
    let mut s = [0.0; 3];
    if alpha != beta {
        s[alpha.index()] = 0.5;
        s[beta.index()] = -0.5;
    }
    s
}

/// Sweep the testing panel over the offset grid and evaluate the pair integral
/// at each slot. For B tensors the coincident slot is zeroed: the overlapping
/// term lives in the system diagonal instead.
pub fn generate_toeplitz(
    alpha: Axis,
    beta: Axis,
    dims: [usize; 3],
    dv: f64,
    which: Which,
    config: &KernelConfig,
) -> Tensor3<f64> {
    if which == Which::A {
        assert!(
            a_pair_index(alpha, beta).is_some(),
            "A tensors are generated for unordered-unique pairs only"
        );
    }
    let p = pair_dims(alpha, beta, dims);
    let src_off = source_offset(alpha, beta);
    let src = [src_off[0] * dv, src_off[1] * dv, src_off[2] * dv];
    let half = dv / 2.0;
    let mut out = Tensor3::zeros(p);
    let slab = p.1 * p.2;
    out.data_mut()
        .par_chunks_mut(slab)
        .enumerate()
        .for_each(|(mx, chunk)| {
            for my in 0..p.1 {
                for mz in 0..p.2 {
                    if which == Which::B && alpha == beta && mx == 0 && my == 0 && mz == 0 {
                        continue;
                    }
                    let obs = [mx as f64 * dv, my as f64 * dv, mz as f64 * dv];
                    let pair = PanelPairGeometry::from_panels(alpha, obs, beta, src, half);
                    chunk[my * p.2 + mz] = match which {
                        Which::A => potential_integral(&pair, config),
                        Which::B => efield_integral(&pair, config),
                    };
                }
            }
        });
    out
}

/// The full set of Toeplitz interaction tensors for one domain size.
#[derive(Debug, Clone)]
pub struct ToeplitzKernelSet {
    pub dims: [usize; 3],
    pub voxel_edge: f64,
    /// Six A tensors in `A_PAIRS` order.
    pub a: Vec<Tensor3<f64>>,
    /// Nine B tensors in `B_PAIRS` order.
    pub b: Vec<Tensor3<f64>>,
}

impl ToeplitzKernelSet {
    pub fn generate(dims: [usize; 3], dv: f64, config: &KernelConfig) -> Self {
        let a = A_PAIRS
            .iter()
            .map(|&(al, be)| generate_toeplitz(al, be, dims, dv, Which::A, config))
            .collect();
        let b = B_PAIRS
            .iter()
            .map(|&(al, be)| generate_toeplitz(al, be, dims, dv, Which::B, config))
            .collect();
        Self {
            dims,
            voxel_edge: dv,
            a,
            b,
        }
    }

    pub fn a_tensor(&self, alpha: Axis, beta: Axis) -> &Tensor3<f64> {
        &self.a[a_pair_index(alpha, beta)
            .or_else(|| a_pair_index(beta, alpha))
            .expect("invalid A pair")]
    }

    pub fn b_tensor(&self, alpha: Axis, beta: Axis) -> &Tensor3<f64> {
        &self.b[b_pair_index(alpha, beta)]
    }

    /// Total bytes of all stored tensors.
    pub fn total_bytes(&self) -> usize {
        self.a
            .iter()
            .chain(self.b.iter())
            .map(|t| t.len() * std::mem::size_of::<f64>())
            .sum()
    }

    /// Interaction value for an observer slot minus source slot offset
    /// `offset` (per-axis integers in voxel-panel grid slots), observer normal
    /// `alpha`, source normal `beta`.
    ///
    /// Handles the per-axis reflections: potential kernels are even along
    /// every axis, normal-field kernels are odd along the observer-normal
    /// axis. For unordered A pairs the transposed tensor is read with the
    /// offset negated (reciprocity).
    pub fn lookup(&self, which: Which, alpha: Axis, beta: Axis, offset: [i64; 3]) -> f64 {
        let (alpha, beta, offset, tensor) = match which {
            Which::A => match a_pair_index(alpha, beta) {
                Some(i) => (alpha, beta, offset, &self.a[i]),
                None => {
                    let flipped = [-offset[0], -offset[1], -offset[2]];
                    let i = a_pair_index(beta, alpha).expect("invalid A pair");
                    (beta, alpha, flipped, &self.a[i])
                }
            },
            Which::B => (alpha, beta, offset, &self.b[b_pair_index(alpha, beta)]),
        };
        let p = tensor.dims();
        let pd = [p.0, p.1, p.2];
        let mut idx = [0usize; 3];
        let mut sign = 1.0;
        for ax in 0..3 {
            let d = offset[ax];
            let q: i64;
            if alpha == beta {
                q = d.abs();
                if which == Which::B && ax == alpha.index() && d < 0 {
                    sign = -sign;
                }
            } else if d >= 0 && (d as usize) < pd[ax] {
                q = d;
            } else {
                q = if ax == alpha.index() {
                    1 - d
                } else if ax == beta.index() {
                    -d - 1
                } else {
                    -d
                };
                if which == Which::B && ax == alpha.index() {
                    sign = -sign;
                }
            }
            assert!(
                q >= 0 && (q as usize) < pd[ax],
                "offset {offset:?} out of range for pair ({alpha:?},{beta:?}) dims {pd:?}"
            );
            idx[ax] = q as usize;
        }
        sign * tensor.get(idx[0], idx[1], idx[2])
    }
}

/// Multiply a unit-voxel set onto a target voxel edge: A entries scale with
/// the cube of the edge, B entries with the square.
pub fn scale_toeplitz(set: &ToeplitzKernelSet, dv_target: f64) -> Result<ToeplitzKernelSet, ToeplitzError> {
    if set.voxel_edge != 1.0 {
        return Err(ToeplitzError::NotUnitVoxel(set.voxel_edge));
    }
    if dv_target <= 0.0 || !dv_target.is_finite() {
        return Err(ToeplitzError::BadVoxelEdge(dv_target));
    }
    let mut out = set.clone();
    let fa = dv_target.powi(3);
    let fb = dv_target.powi(2);
    for t in &mut out.a {
        t.scale(fa);
    }
    for t in &mut out.b {
        t.scale(fb);
    }
    out.voxel_edge = dv_target;
    Ok(out)
}

/// Truncate a cached set to a smaller domain. Toeplitz entries depend only on
/// slot offsets, so the leading sub-tensor is exact.
pub fn resize_toeplitz(
    cached: &ToeplitzKernelSet,
    target_dims: [usize; 3],
) -> Result<ToeplitzKernelSet, ToeplitzError> {
    if (0..3).any(|i| target_dims[i] > cached.dims[i]) {
        return Err(ToeplitzError::TargetExceedsCache {
            target: target_dims,
            cached: cached.dims,
        });
    }
    if target_dims == cached.dims {
        return Ok(cached.clone());
    }
    let a = A_PAIRS
        .iter()
        .zip(&cached.a)
        .map(|(&(al, be), t)| {
            let d = pair_dims(al, be, target_dims);
            t.truncated(d)
        })
        .collect();
    let b = B_PAIRS
        .iter()
        .zip(&cached.b)
        .map(|(&(al, be), t)| {
            let d = pair_dims(al, be, target_dims);
            t.truncated(d)
        })
        .collect();
    Ok(ToeplitzKernelSet {
        dims: target_dims,
        voxel_edge: cached.voxel_edge,
        a,
        b,
    })
}

/// Real-valued block circulant tensors, all of the uniform padded dimensions
/// `2(Nx+1) x 2(Ny+1) x 2(Nz+1)`.
#[derive(Debug, Clone)]
pub struct EmbeddedCirculantSet {
    pub dims: [usize; 3],
    pub voxel_edge: f64,
    pub p: Vec<Tensor3<f64>>,
    pub e: Vec<Tensor3<f64>>,
}

/// Fourier-transformed circulant kernels: six stored potential tensors (the
/// transposed mixed pairs follow by conjugation) and nine field tensors.
#[derive(Debug, Clone)]
pub struct CirculantKernelSet {
    pub dims: [usize; 3],
    pub voxel_edge: f64,
    pub p: Vec<Tensor3<Complex64>>,
    pub e: Vec<Tensor3<Complex64>>,
}

impl CirculantKernelSet {
    pub fn padded_dims(&self) -> (usize, usize, usize) {
        circulant_dims(self.dims)
    }

    pub fn stored_p_count(&self) -> usize {
        self.p.len()
    }

    pub fn total_bytes(&self) -> usize {
        self.p
            .iter()
            .chain(self.e.iter())
            .map(|t| t.len() * std::mem::size_of::<Complex64>())
            .sum()
    }
}

pub fn circulant_dims(dims: [usize; 3]) -> (usize, usize, usize) {
    (
        2 * (dims[0] + 1),
        2 * (dims[1] + 1),
        2 * (dims[2] + 1),
    )
}

/// Embed one Toeplitz tensor into its zero-padded circulant form.
///
/// Every circulant position is filled with the kernel value of the wrapped
/// offset with the smaller magnitude, reconstructed from the stored
/// non-negative offsets via the per-axis reflection parity; positions whose
/// offsets fall outside the stored range stay zero. This reproduces the
/// dimension tables and reflection sign rules of the block-circulant
/// construction, and keeps the elementwise conjugation identity between
/// transposed mixed pairs exact.
pub fn embed_one(
    t: &Tensor3<f64>,
    alpha: Axis,
    beta: Axis,
    which: Which,
    dims: [usize; 3],
) -> Tensor3<f64> {
    let l = circulant_dims(dims);
    let larr = [l.0, l.1, l.2];
    let p = t.dims();
    let pd = [p.0, p.1, p.2];
    let src = source_offset(alpha, beta);
    // per-axis map: position -> (stored index, sign) or None
    let mut maps: [Vec<Option<(usize, f64)>>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for ax in 0..3 {
        let gamma = if src[ax] > 0.0 {
            -0.5
        } else if src[ax] < 0.0 {
            0.5
        } else {
            0.0
        };
        let parity = if which == Which::B && ax == alpha.index() {
            -1.0
        } else {
            1.0
        };
        let lax = larr[ax] as i64;
        maps[ax] = (0..larr[ax] as i64)
            .map(|pos| {
                let direct = pos as f64 + gamma;
                let wrapped = (pos - lax) as f64 + gamma;
                let mut candidates = [direct, wrapped];
                if wrapped.abs() < direct.abs() {
                    candidates = [wrapped, direct];
                }
                for v in candidates {
                    let q = v - gamma;
                    let qi = q.round();
                    if (q - qi).abs() < 1e-9 && qi >= 0.0 && (qi as usize) < pd[ax] {
                        return Some((qi as usize, 1.0));
                    }
                    let qr = -v - gamma;
                    let qi = qr.round();
                    if (qr - qi).abs() < 1e-9 && qi >= 0.0 && (qi as usize) < pd[ax] {
                        return Some((qi as usize, parity));
                    }
                }
                None
            })
            .collect();
    }
    let mut out = Tensor3::zeros(l);
    for (px, mx) in maps[0].iter().enumerate() {
        let Some((qx, sx)) = mx else { continue };
        for (py, my) in maps[1].iter().enumerate() {
            let Some((qy, sy)) = my else { continue };
            for (pz, mz) in maps[2].iter().enumerate() {
                let Some((qz, sz)) = mz else { continue };
                out.set(px, py, pz, sx * sy * sz * t.get(*qx, *qy, *qz));
            }
        }
    }
    out
}

/// Embed the full set into block circulant tensors (pre-FFT).
pub fn embed_circulant(set: &ToeplitzKernelSet) -> EmbeddedCirculantSet {
    let p = A_PAIRS
        .iter()
        .zip(&set.a)
        .map(|(&(al, be), t)| embed_one(t, al, be, Which::A, set.dims))
        .collect();
    let e = B_PAIRS
        .iter()
        .zip(&set.b)
        .map(|(&(al, be), t)| embed_one(t, al, be, Which::B, set.dims))
        .collect();
    EmbeddedCirculantSet {
        dims: set.dims,
        voxel_edge: set.voxel_edge,
        p,
        e,
    }
}

/// Fourier transform the embedded circulants.
pub fn fft_circulants(set: &EmbeddedCirculantSet, ctx: &FftContext) -> CirculantKernelSet {
    let transform = |t: &Tensor3<f64>| {
        let mut c = t.to_complex();
        ctx.forward(&mut c);
        c
    };
    CirculantKernelSet {
        dims: set.dims,
        voxel_edge: set.voxel_edge,
        p: set.p.iter().map(transform).collect(),
        e: set.e.iter().map(transform).collect(),
    }
}
