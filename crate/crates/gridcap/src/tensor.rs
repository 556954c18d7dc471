//! Dense 3-D tensors in row-major (last index fastest) layout, plus 3-D FFT
//! helpers built on `rustfft`.

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Dense 3-D tensor with shape `(d0, d1, d2)`, stored so that the last index
/// is contiguous.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3<T> {
    dims: (usize, usize, usize),
    data: Vec<T>,
}

impl<T: Copy + Default> Tensor3<T> {
    pub fn zeros(dims: (usize, usize, usize)) -> Self {
        Self {
            dims,
            data: vec![T::default(); dims.0 * dims.1 * dims.2],
        }
    }

    pub fn from_vec(dims: (usize, usize, usize), data: Vec<T>) -> Self {
        assert_eq!(data.len(), dims.0 * dims.1 * dims.2, "tensor size mismatch");
        Self { dims, data }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        debug_assert!(i < self.dims.0 && j < self.dims.1 && k < self.dims.2);
        (i * self.dims.1 + j) * self.dims.2 + k
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> T {
        self.data[self.index(i, j, k)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        let idx = self.index(i, j, k);
        self.data[idx] = v;
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    /// Leading sub-tensor of shape `sub`, element-wise copy.
    pub fn truncated(&self, sub: (usize, usize, usize)) -> Tensor3<T> {
        assert!(
            sub.0 <= self.dims.0 && sub.1 <= self.dims.1 && sub.2 <= self.dims.2,
            "truncation exceeds tensor dims"
        );
        let mut out = Tensor3::zeros(sub);
        for i in 0..sub.0 {
            for j in 0..sub.1 {
                let src = self.index(i, j, 0);
                let dst = out.index(i, j, 0);
                out.data[dst..dst + sub.2].copy_from_slice(&self.data[src..src + sub.2]);
            }
        }
        out
    }
}

impl Tensor3<f64> {
    pub fn scale(&mut self, factor: f64) {
        for v in &mut self.data {
            *v *= factor;
        }
    }

    pub fn norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn to_complex(&self) -> Tensor3<Complex64> {
        Tensor3 {
            dims: self.dims,
            data: self.data.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }
}

impl Tensor3<Complex64> {
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// Cached FFT plans shared across transforms of equal length.
pub struct FftContext {
    planner: Mutex<FftPlanner<f64>>,
    plans: Mutex<HashMap<(usize, bool), Arc<dyn Fft<f64>>>>,
}

impl Default for FftContext {
    fn default() -> Self {
        Self::new()
    }
}

impl FftContext {
    pub fn new() -> Self {
        Self {
            planner: Mutex::new(FftPlanner::new()),
            plans: Mutex::new(HashMap::new()),
        }
    }

    fn plan(&self, len: usize, forward: bool) -> Arc<dyn Fft<f64>> {
        let mut plans = self.plans.lock().unwrap();
        plans
            .entry((len, forward))
            .or_insert_with(|| {
                let dir = if forward {
                    FftDirection::Forward
                } else {
                    FftDirection::Inverse
                };
                self.planner.lock().unwrap().plan_fft(len, dir)
            })
            .clone()
    }

    /// In-place forward 3-D DFT (unnormalized).
    pub fn forward(&self, t: &mut Tensor3<Complex64>) {
        self.transform(t, true);
        // forward is unnormalized by convention
    }

    /// In-place inverse 3-D DFT, normalized by the total element count.
    pub fn inverse(&self, t: &mut Tensor3<Complex64>) {
        self.transform(t, false);
        let scale = 1.0 / t.len() as f64;
        for v in t.data_mut() {
            *v *= scale;
        }
    }

    fn transform(&self, t: &mut Tensor3<Complex64>, forward: bool) {
        let (d0, d1, d2) = t.dims();

        // axis 2: contiguous lines
        let plan2 = self.plan(d2, forward);
        let mut scratch = vec![Complex64::default(); plan2.get_inplace_scratch_len()];
        for line in t.data_mut().chunks_exact_mut(d2) {
            plan2.process_with_scratch(line, &mut scratch);
        }

        // axis 1: stride d2 within each i-slab
        let plan1 = self.plan(d1, forward);
        let mut scratch = vec![Complex64::default(); plan1.get_inplace_scratch_len()];
        let mut line = vec![Complex64::default(); d1];
        for i in 0..d0 {
            for k in 0..d2 {
                let base = i * d1 * d2 + k;
                for (j, v) in line.iter_mut().enumerate() {
                    *v = t.data()[base + j * d2];
                }
                plan1.process_with_scratch(&mut line, &mut scratch);
                for (j, v) in line.iter().enumerate() {
                    t.data_mut()[base + j * d2] = *v;
                }
            }
        }

        // axis 0: stride d1*d2
        let plan0 = self.plan(d0, forward);
        let mut scratch = vec![Complex64::default(); plan0.get_inplace_scratch_len()];
        let mut line = vec![Complex64::default(); d0];
        let s0 = d1 * d2;
        for j in 0..d1 {
            for k in 0..d2 {
                let base = j * d2 + k;
                for (i, v) in line.iter_mut().enumerate() {
                    *v = t.data()[base + i * s0];
                }
                plan0.process_with_scratch(&mut line, &mut scratch);
                for (i, v) in line.iter().enumerate() {
                    t.data_mut()[base + i * s0] = *v;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_is_leading_subtensor() {
        let mut t = Tensor3::zeros((3, 4, 5));
        for i in 0..3 {
            for j in 0..4 {
                for k in 0..5 {
                    t.set(i, j, k, (100 * i + 10 * j + k) as f64);
                }
            }
        }
        let s = t.truncated((2, 2, 3));
        assert_eq!(s.dims(), (2, 2, 3));
        assert_eq!(s.get(1, 1, 2), 112.0);
    }

    #[test]
    fn fft_roundtrip_recovers_input() {
        let ctx = FftContext::new();
        let dims = (4, 6, 5);
        let mut t = Tensor3::zeros(dims);
        for (idx, v) in t.data_mut().iter_mut().enumerate() {
            *v = Complex64::new(idx as f64 * 0.37 - 3.0, (idx % 7) as f64);
        }
        let orig = t.clone();
        ctx.forward(&mut t);
        ctx.inverse(&mut t);
        let err: f64 = t
            .data()
            .iter()
            .zip(orig.data())
            .map(|(a, b)| (a - b).norm())
            .sum();
        assert!(err < 1e-10, "roundtrip error {err}");
    }

    #[test]
    fn fft_parseval_energy() {
        let ctx = FftContext::new();
        let mut t = Tensor3::zeros((3, 3, 3));
        for (idx, v) in t.data_mut().iter_mut().enumerate() {
            *v = Complex64::new((idx as f64).sin(), 0.0);
        }
        let e_time: f64 = t.data().iter().map(|v| v.norm_sqr()).sum();
        ctx.forward(&mut t);
        let e_freq: f64 = t.data().iter().map(|v| v.norm_sqr()).sum();
        assert!((e_freq - e_time * 27.0).abs() < 1e-9 * e_freq);
    }
}
