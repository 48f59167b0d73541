//! Liouville-space machinery: density matrices as supervectors, channels as
//! superoperator matrices, and n-cycle propagation by matrix powers.
//!
//! Vectorization is row-stacking, under which a Kraus list {E_k} becomes the
//! matrix sum_k E_k (x) conj(E_k) acting on vec(rho) from the left. The
//! vec-identity tests pin this convention.

use num_complex::Complex64 as C64;

use crate::channels::{
    compression_channel, extended_damping_channel, reduced_compression_channel, refresh_channel,
    CompressionVariant, KrausChannel,
};
use crate::error::{Error, Result};
use crate::qmat::{kron, ComplexMatrix, DensityMatrix};

/// A vectorized density matrix: `entries.len()` is the square of the
/// underlying matrix dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperVector {
    dim: usize,
    entries: Vec<C64>,
}

impl SuperVector {
    /// Build from raw entries; the length must be a perfect square.
    pub fn from_entries(entries: Vec<C64>) -> Result<Self> {
        let len = entries.len();
        let dim = (len as f64).sqrt().round() as usize;
        if dim * dim != len {
            return Err(Error::BadSuperVectorLength { len });
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }
}

/// Row-stack a matrix into a supervector.
pub fn vectorize_matrix(m: &ComplexMatrix) -> SuperVector {
    assert_eq!(m.rows(), m.cols(), "vectorize expects a square matrix");
    SuperVector {
        dim: m.rows(),
        entries: m.entries().to_vec(),
    }
}

/// Inverse of [`vectorize_matrix`]. Rejects lengths that are not perfect squares.
pub fn unvectorize_matrix(v: &SuperVector) -> Result<ComplexMatrix> {
    let len = v.entries.len();
    let dim = v.dim;
    if dim * dim != len {
        return Err(Error::BadSuperVectorLength { len });
    }
    Ok(ComplexMatrix::from_fn(dim, dim, |i, j| {
        v.entries[i * dim + j]
    }))
}

pub fn vectorize(rho: &DensityMatrix) -> SuperVector {
    vectorize_matrix(rho.matrix())
}

pub fn unvectorize(v: &SuperVector) -> Result<DensityMatrix> {
    DensityMatrix::new(unvectorize_matrix(v)?)
}

/// A channel as a D^2 x D^2 matrix over supervectors.
#[derive(Debug, Clone)]
pub struct Superoperator {
    dim: usize,
    matrix: ComplexMatrix,
    label: String,
}

impl Superoperator {
    pub fn new(dim: usize, matrix: ComplexMatrix, label: impl Into<String>) -> Self {
        assert_eq!(matrix.rows(), dim * dim);
        assert_eq!(matrix.cols(), dim * dim);
        Self {
            dim,
            matrix,
            label: label.into(),
        }
    }

    /// Hilbert-space dimension D (the matrix is D^2 x D^2).
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(dim, ComplexMatrix::identity(dim * dim), "identity")
    }

    /// Composition self . other (apply `other` first).
    pub fn compose(&self, other: &Superoperator) -> Superoperator {
        assert_eq!(self.dim, other.dim);
        Superoperator::new(
            self.dim,
            self.matrix.matmul(&other.matrix),
            format!("{} . {}", self.label, other.label),
        )
    }

    /// Matrix power by repeated squaring.
    pub fn pow(&self, n: usize) -> Superoperator {
        let mut result = ComplexMatrix::identity(self.dim * self.dim);
        let mut base = self.matrix.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = result.matmul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.matmul(&base);
            }
        }
        Superoperator::new(self.dim, result, format!("{}^{}", self.label, n))
    }

    /// Apply to a raw matrix: unvec(Phi vec(m)).
    pub fn apply_matrix(&self, m: &ComplexMatrix) -> Result<ComplexMatrix> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "superoperator application",
                expected: self.dim,
                got: m.rows(),
            });
        }
        let v = vectorize_matrix(m);
        let out = self.matrix.matvec(v.entries());
        unvectorize_matrix(&SuperVector {
            dim: self.dim,
            entries: out,
        })
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        DensityMatrix::new(self.apply_matrix(rho.matrix())?)
    }
}

/// Superoperator of a Kraus channel: sum_k E_k (x) conj(E_k).
pub fn superoperator_of(ch: &KrausChannel) -> Superoperator {
    let d2 = ch.dim() * ch.dim();
    let mut acc = ComplexMatrix::zeros(d2, d2);
    for op in ch.operators() {
        acc = acc.add(&kron(op, &op.conjugate()));
    }
    Superoperator::new(ch.dim(), acc, ch.label().to_string())
}

/// Which state space a cycle superoperator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleScope {
    /// 4x4: damping then reduced compression on the target qubit alone.
    TargetOnly,
    /// 64x64: extended damping, compression, then refresh on all three qubits.
    Full,
}

/// One full refrigeration cycle as a single superoperator.
pub fn cycle_superoperator(
    gamma: f64,
    theta: f64,
    eps2: f64,
    eps3: f64,
    variant: CompressionVariant,
    scope: CycleScope,
) -> Result<Superoperator> {
    match scope {
        CycleScope::TargetOnly => {
            let damp = superoperator_of(&crate::channels::damping_channel(gamma)?);
            let comp =
                superoperator_of(&reduced_compression_channel(theta, eps2, eps3, variant)?);
            Ok(comp.compose(&damp))
        }
        CycleScope::Full => {
            let damp = superoperator_of(&extended_damping_channel(gamma)?);
            let comp = superoperator_of(&compression_channel(theta, variant)?);
            let refresh = superoperator_of(&refresh_channel(eps2, eps3)?);
            Ok(refresh.compose(&comp).compose(&damp))
        }
    }
}

/// n-fold application by matrix power: unvec(Phi^n vec(rho0)).
///
/// The result is a valid density matrix whenever Phi is trace preserving and
/// completely positive; otherwise the validation error propagates.
pub fn propagate(phi: &Superoperator, rho0: &DensityMatrix, n: usize) -> Result<DensityMatrix> {
    if rho0.dim() != phi.dim() {
        return Err(Error::DimensionMismatch {
            context: "propagate",
            expected: phi.dim(),
            got: rho0.dim(),
        });
    }
    phi.pow(n).apply(rho0)
}
