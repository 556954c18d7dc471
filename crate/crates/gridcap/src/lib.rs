//! Capacitance extraction for voxelized conductor/dielectric structures.
//!
//! The solver discretizes the surface integral equations for electrostatics on
//! the faces of a uniform voxel grid, accelerates the dense matrix-vector
//! products with FFT convolutions over block Toeplitz/circulant kernel
//! tensors, compresses those tensors with truncated higher-order SVD, and runs
//! restarted GMRES behind a block-diagonal/diagonal preconditioner.
//!
//! The pipeline, end to end:
//!
//! 1. [`geometry`] builds the voxel grid and enumerates boundary panels.
//! 2. [`toeplitz`] generates the translation-invariant interaction tensors
//!    (or loads them from the unit-voxel [`cache`]), embeds them into
//!    circulant form, and Fourier transforms them.
//! 3. [`tucker`] compresses kernel tensors at a configurable tolerance.
//! 4. [`fft_engine`] scatters panel charges onto the voxel-panel grids and
//!    applies the convolution kernels.
//! 5. [`precond`] builds the deduplicated block preconditioner.
//! 6. [`solver`] runs GMRES per excitation and assembles the capacitance
//!    matrix.
//!
//! See the `examples/` directory for runnable demonstrations of each stage,
//! and the `gridcap` binary for the `install-cache` / `extract` / `verify`
//! command-line workflow.

pub mod cache;
pub mod cli;
pub mod fft_engine;
pub mod geometry;
pub mod kernel;
pub mod oracle;
pub mod precond;
pub mod solver;
pub mod structure;
pub mod tensor;
pub mod toeplitz;
pub mod tucker;
pub mod verify;

/// Coordinate axis of a panel normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    #[inline]
    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    pub fn from_index(i: usize) -> Axis {
        match i {
            0 => Axis::X,
            1 => Axis::Y,
            2 => Axis::Z,
            _ => panic!("axis index {i} out of range"),
        }
    }

    pub fn label(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }
}
