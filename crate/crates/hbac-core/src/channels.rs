//! Quantum channels of the cooling cycle as explicit Kraus operator lists:
//! target amplitude damping, the compression stroke in its three variants,
//! the reduced (target-only) compression channel, and the reset refresh map.
//!
//! Basis conventions: single-qubit states are diag(1-eps, 1+eps)/2 over
//! (|0>, |1>), so damping drives eps -> -1. Three-qubit basis indices are
//! |q1 q2 q3> with the target q1 most significant; the compression subspace
//! is spanned by |011> (index 3) and |100> (index 4).

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::qmat::{kron, partial_trace, ComplexMatrix, DensityMatrix};

/// Index of |011> in the three-qubit basis.
pub const IDX_011: usize = 3;
/// Index of |100> in the three-qubit basis.
pub const IDX_100: usize = 4;

/// Which transcription of the compression stroke to construct.
///
/// `RandomUnitary` mixes the ideal swap and the identity with weights
/// sin^2(theta) / cos^2(theta); it is trace preserving by construction.
/// `VerbatimKraus` is the two-operator form with the sign that breaks
/// trace preservation away from theta = pi/4 (kept for the audit).
/// `CorrectedKraus` restores the sign so that sum K^dag K = I.
/// All trace-preserving variants act identically on diagonal states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompressionVariant {
    RandomUnitary,
    VerbatimKraus,
    CorrectedKraus,
}

impl CompressionVariant {
    pub fn is_trace_preserving(self) -> bool {
        !matches!(self, CompressionVariant::VerbatimKraus)
    }

    pub fn name(self) -> &'static str {
        match self {
            CompressionVariant::RandomUnitary => "random-unitary",
            CompressionVariant::VerbatimKraus => "verbatim-kraus",
            CompressionVariant::CorrectedKraus => "corrected-kraus",
        }
    }
}

impl std::str::FromStr for CompressionVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random-unitary" => Ok(CompressionVariant::RandomUnitary),
            "verbatim-kraus" => Ok(CompressionVariant::VerbatimKraus),
            "corrected-kraus" => Ok(CompressionVariant::CorrectedKraus),
            _ => Err(Error::Parse {
                line: 0,
                msg: format!(
                    "unknown compression variant `{s}` (expected random-unitary, \
                     verbatim-kraus or corrected-kraus)"
                ),
            }),
        }
    }
}

/// A completely positive map as a finite list of Kraus operators.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    dim: usize,
    ops: Vec<ComplexMatrix>,
    label: String,
}

impl KrausChannel {
    pub fn new(dim: usize, ops: Vec<ComplexMatrix>, label: impl Into<String>) -> Self {
        for op in &ops {
            assert_eq!(op.rows(), dim, "Kraus operator dimension mismatch");
            assert_eq!(op.cols(), dim, "Kraus operator dimension mismatch");
        }
        Self {
            dim,
            ops,
            label: label.into(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Channel action sum_k E_k rho E_k^dag on a raw matrix.
    pub fn apply_matrix(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.dim, self.dim);
        for op in &self.ops {
            out = out.add(&op.matmul(rho).matmul(&op.adjoint()));
        }
        out
    }

    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        DensityMatrix::new(self.apply_matrix(rho.matrix()))
    }
}

/// Frobenius norm of sum E^dag E - I: zero exactly when trace preserving.
pub fn completeness_defect(ch: &KrausChannel) -> f64 {
    let mut acc = ComplexMatrix::zeros(ch.dim(), ch.dim());
    for op in ch.operators() {
        acc = acc.add(&op.adjoint().matmul(op));
    }
    acc.frobenius_distance(&ComplexMatrix::identity(ch.dim()))
}

/// Single-qubit amplitude damping with decay rate gamma: population flows
/// from |1> to |0>, i.e. eps -> eps - gamma(1 + eps) on diagonal states.
pub fn damping_channel(gamma: f64) -> Result<KrausChannel> {
    check_range("gamma", gamma, 0.0, 1.0)?;
    let mut g1 = ComplexMatrix::zeros(2, 2);
    g1.set(0, 0, C64::ONE);
    g1.set(1, 1, C64::new((1.0 - gamma).sqrt(), 0.0));
    let mut g2 = ComplexMatrix::zeros(2, 2);
    g2.set(0, 1, C64::new(gamma.sqrt(), 0.0));
    Ok(KrausChannel::new(2, vec![g1, g2], format!("damping(gamma={gamma})")))
}

/// Amplitude damping on the target qubit, extended by the identity on the
/// two reset qubits (dimension 8).
pub fn extended_damping_channel(gamma: f64) -> Result<KrausChannel> {
    let base = damping_channel(gamma)?;
    let i4 = ComplexMatrix::identity(4);
    let ops = base.operators().iter().map(|g| kron(g, &i4)).collect();
    Ok(KrausChannel::new(
        8,
        ops,
        format!("damping-ext(gamma={gamma})"),
    ))
}

/// The ideal compression unitary exp(-i pi V / 2) with
/// V = |100><011| + |011><100|: identity on the six-dimensional complement,
/// -i times the population swap on the (|011>, |100>) subspace.
pub fn ideal_swap_unitary() -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(8);
    u.set(IDX_011, IDX_011, C64::ZERO);
    u.set(IDX_100, IDX_100, C64::ZERO);
    u.set(IDX_011, IDX_100, C64::new(0.0, -1.0));
    u.set(IDX_100, IDX_011, C64::new(0.0, -1.0));
    u
}

/// Full-space compression channel for the requested variant.
///
/// On diagonal states every trace-preserving variant mixes the two subspace
/// populations: p'_011 = cos^2 p_011 + sin^2 p_100 and symmetrically, with
/// everything else untouched.
pub fn compression_channel(theta: f64, variant: CompressionVariant) -> Result<KrausChannel> {
    check_range("theta", theta, 0.0, std::f64::consts::PI)?;
    let (s, c) = theta.sin_cos();
    let label = format!("compression[{}](theta={theta})", variant.name());
    let ops = match variant {
        CompressionVariant::RandomUnitary => {
            vec![
                ideal_swap_unitary().scale(C64::new(s, 0.0)),
                ComplexMatrix::identity(8).scale(C64::new(c, 0.0)),
            ]
        }
        CompressionVariant::VerbatimKraus | CompressionVariant::CorrectedKraus => {
            let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
            // K1 = P_comp / sqrt(2) - i sin(theta) (|011><100| + |100><011|)
            let mut k1 = ComplexMatrix::identity(8).scale(C64::new(inv_sqrt2, 0.0));
            k1.set(IDX_011, IDX_011, C64::ZERO);
            k1.set(IDX_100, IDX_100, C64::ZERO);
            k1.set(IDX_011, IDX_100, C64::new(0.0, -s));
            k1.set(IDX_100, IDX_011, C64::new(0.0, -s));
            // K2 = P_comp / sqrt(2) + cos(theta) |011><011| +/- cos(theta) |100><100|
            let mut k2 = ComplexMatrix::identity(8).scale(C64::new(inv_sqrt2, 0.0));
            k2.set(IDX_011, IDX_011, C64::new(c, 0.0));
            let on_100 = match variant {
                // The sign as printed: diagonal action sqrt(2) - cos(theta),
                // which breaks sum K^dag K = I away from theta = pi/4.
                CompressionVariant::VerbatimKraus => 2.0 * inv_sqrt2 - c,
                _ => c,
            };
            k2.set(IDX_100, IDX_100, C64::new(on_100, 0.0));
            vec![k1, k2]
        }
    };
    Ok(KrausChannel::new(8, ops, label))
}

/// Reduced compression channel acting on the target qubit alone, for fixed
/// reset polarizations. The operators are the partial matrix elements
/// <r i'j'| K_k |c i j> sqrt(p2_i p3_j); at most ten are nonzero.
#[allow(clippy::needless_range_loop)] // i, j, i_out, j_out are basis bit labels
pub fn reduced_compression_channel(
    theta: f64,
    eps2: f64,
    eps3: f64,
    variant: CompressionVariant,
) -> Result<KrausChannel> {
    check_range("eps2", eps2, -1.0, 1.0)?;
    check_range("eps3", eps3, -1.0, 1.0)?;
    let full = compression_channel(theta, variant)?;
    let p2 = [(1.0 - eps2) / 2.0, (1.0 + eps2) / 2.0];
    let p3 = [(1.0 - eps3) / 2.0, (1.0 + eps3) / 2.0];

    let mut ops = Vec::new();
    for k in full.operators() {
        for i in 0..2 {
            for j in 0..2 {
                let weight = (p2[i] * p3[j]).sqrt();
                for i_out in 0..2 {
                    for j_out in 0..2 {
                        let mut op = ComplexMatrix::zeros(2, 2);
                        let mut nonzero = false;
                        for r in 0..2 {
                            for col in 0..2 {
                                let v = k.get(4 * r + 2 * i_out + j_out, 4 * col + 2 * i + j)
                                    * weight;
                                if v != C64::ZERO {
                                    nonzero = true;
                                }
                                op.set(r, col, v);
                            }
                        }
                        if nonzero {
                            ops.push(op);
                        }
                    }
                }
            }
        }
    }
    Ok(KrausChannel::new(
        2,
        ops,
        format!(
            "compression-reduced[{}](theta={theta}, eps2={eps2}, eps3={eps3})",
            variant.name()
        ),
    ))
}

/// Refresh stroke: keep the target marginal, re-tensor the reset qubits in
/// their initial states. rho -> tr_23(rho) (x) rho2(0) (x) rho3(0).
pub fn refresh(rho: &DensityMatrix, eps2: f64, eps3: f64) -> Result<DensityMatrix> {
    if rho.dim() != 8 {
        return Err(Error::DimensionMismatch {
            context: "refresh input",
            expected: 8,
            got: rho.dim(),
        });
    }
    let target = partial_trace(rho.matrix(), &[1])?;
    let r2 = DensityMatrix::from_polarization(eps2)?;
    let r3 = DensityMatrix::from_polarization(eps3)?;
    DensityMatrix::new(kron(&kron(&target, r2.matrix()), r3.matrix()))
}

/// The refresh stroke as an explicit 16-operator Kraus channel:
/// A_{s,m} = sqrt(p_s) (I_2 (x) |s><m|) over the four reset basis states,
/// with p_s the populations of rho2(0) (x) rho3(0).
pub fn refresh_channel(eps2: f64, eps3: f64) -> Result<KrausChannel> {
    check_range("eps2", eps2, -1.0, 1.0)?;
    check_range("eps3", eps3, -1.0, 1.0)?;
    let p2 = [(1.0 - eps2) / 2.0, (1.0 + eps2) / 2.0];
    let p3 = [(1.0 - eps3) / 2.0, (1.0 + eps3) / 2.0];
    let i2 = ComplexMatrix::identity(2);
    let mut ops = Vec::with_capacity(16);
    for s in 0..4usize {
        let weight = (p2[s >> 1] * p3[s & 1]).sqrt();
        for m in 0..4usize {
            let mut sm = ComplexMatrix::zeros(4, 4);
            sm.set(s, m, C64::new(weight, 0.0));
            ops.push(kron(&i2, &sm));
        }
    }
    Ok(KrausChannel::new(
        8,
        ops,
        format!("refresh(eps2={eps2}, eps3={eps3})"),
    ))
}

fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
    if !value.is_finite() || value < min || value > max {
        return Err(Error::OutOfRange {
            name,
            value,
            min,
            max,
        });
    }
    Ok(())
}
