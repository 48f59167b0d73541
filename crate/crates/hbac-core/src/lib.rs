//! Simulator and analytic toolkit for a minimal three-qubit heat-bath
//! algorithmic cooling refrigerator.
//!
//! One target qubit is cooled by two fast-relaxing reset qubits through
//! repeated damping / compression / refresh cycles. The crate provides:
//!
//! - [`qmat`]: dense complex linear algebra (Kronecker products, partial
//!   traces, Hermitian eigenvalues) for dimensions up to 64;
//! - [`channels`]: the amplitude-damping, compression and refresh channels as
//!   explicit Kraus lists, including the reduced target-only compression;
//! - [`liouville`]: vectorization and superoperator propagation of n cycles;
//! - [`engine`]: the cycle simulator with per-cycle heat, work, cooling
//!   power, COP, effective temperatures and the Carnot comparison, plus
//!   stochastic trajectory sampling;
//! - [`closedform`]: closed-form expressions for every figure of merit, the
//!   optimal compression angle, and alternate printed transcriptions kept
//!   for cross-checking;
//! - [`expdata`]: measured-series analysis with linear error propagation;
//! - [`audit`]: systematic closed-form vs brute-force comparison tables.

pub mod audit;
pub mod channels;
pub mod closedform;
pub mod engine;
pub mod error;
pub mod expdata;
pub mod liouville;
pub mod qmat;

pub use channels::{CompressionVariant, KrausChannel};
pub use engine::{carnot_cop, run_cycles, sample_trajectory, temperature_of, CycleRecord,
    RefrigeratorConfig};
pub use error::{Error, Result};
pub use qmat::{ComplexMatrix, DensityMatrix};
