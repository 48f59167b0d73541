//! Dense complex linear algebra for small dimensions (<= 64).
//!
//! Everything here operates on row-major [`ComplexMatrix`] values: products,
//! adjoints, Kronecker products, partial traces over the three-qubit space,
//! and Hermitian eigenvalues via cyclic Jacobi rotations.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Frobenius-norm tolerance for the Hermiticity of a density matrix.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Tolerance on |tr(rho) - 1|.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalue floor for positive semidefiniteness. Damping plus compression
/// at gamma near 1 can round eigenvalues negative at machine-epsilon scale.
pub const EIGENVALUE_FLOOR: f64 = -1e-10;

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C64::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, C64::ONE);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Diagonal matrix from real entries.
    pub fn diag_real(entries: &[f64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &x) in entries.iter().enumerate() {
            m.set(i, i, C64::new(x, 0.0));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn is_finite(&self) -> Result<()> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::NonFiniteEntry { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == C64::ZERO {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len(), "matvec dimension mismatch");
        self.data
            .chunks_exact(self.cols)
            .map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum())
            .collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.conj()).collect(),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius distance ||a - b||_F.
    pub fn frobenius_distance(&self, other: &Self) -> f64 {
        self.sub(other).frobenius_norm()
    }

    pub fn hermiticity_defect(&self) -> f64 {
        self.frobenius_distance(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.rows == self.cols && self.hermiticity_defect() <= tol
    }
}

/// Kronecker product a (x) b, block structure `a[i,j] * b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for ia in 0..a.rows() {
        for ja in 0..a.cols() {
            let f = a.get(ia, ja);
            if f == C64::ZERO {
                continue;
            }
            for ib in 0..b.rows() {
                for jb in 0..b.cols() {
                    out.set(ia * b.rows() + ib, ja * b.cols() + jb, f * b.get(ib, jb));
                }
            }
        }
    }
    out
}

/// Partial trace of an 8x8 matrix over the three-qubit space.
///
/// Subsystem order is (target = 1, reset = 2, reset = 3) with qubit 1 the most
/// significant index of the basis |q1 q2 q3>. `keep` lists the subsystems of
/// the reduced output in ascending subsystem order; the trace runs over the
/// rest. The result has dimension 2^keep.len() and the same trace.
pub fn partial_trace(m: &ComplexMatrix, keep: &[usize]) -> Result<ComplexMatrix> {
    if m.rows() != 8 || m.cols() != 8 {
        return Err(Error::DimensionMismatch {
            context: "partial_trace input",
            expected: 8,
            got: m.rows().max(m.cols()),
        });
    }
    if keep.is_empty() {
        return Err(Error::EmptyKeepSet);
    }
    let mut kept: Vec<usize> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    for &q in &kept {
        if !(1..=3).contains(&q) {
            return Err(Error::BadSubsystem { index: q });
        }
    }
    let traced: Vec<usize> = (1..=3).filter(|q| !kept.contains(q)).collect();
    // Bit position of qubit q inside a 3-bit basis index (qubit 1 most significant).
    let bit = |q: usize| 3 - q;

    let dim_out = 1 << kept.len();
    let mut out = ComplexMatrix::zeros(dim_out, dim_out);
    for rk in 0..dim_out {
        for ck in 0..dim_out {
            let mut acc = C64::ZERO;
            for s in 0..(1usize << traced.len()) {
                let mut row = 0usize;
                let mut col = 0usize;
                for (pos, &q) in kept.iter().enumerate() {
                    let rbit = (rk >> (kept.len() - 1 - pos)) & 1;
                    let cbit = (ck >> (kept.len() - 1 - pos)) & 1;
                    row |= rbit << bit(q);
                    col |= cbit << bit(q);
                }
                for (pos, &q) in traced.iter().enumerate() {
                    let sbit = (s >> (traced.len() - 1 - pos)) & 1;
                    row |= sbit << bit(q);
                    col |= sbit << bit(q);
                }
                acc += m.get(row, col);
            }
            out.set(rk, ck, acc);
        }
    }
    Ok(out)
}

/// Eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi rotations.
///
/// Rejects inputs whose Hermiticity defect exceeds 1e-10.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if m.rows() != m.cols() {
        return Err(Error::DimensionMismatch {
            context: "hermitian_eigenvalues input",
            expected: m.rows(),
            got: m.cols(),
        });
    }
    let defect = m.hermiticity_defect();
    if defect > 1e-10 {
        return Err(Error::NotHermitian { defect });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Vec::new());
    }

    // Work on the exactly Hermitian part (A + A^dag)/2.
    let mut a = m.add(&m.adjoint()).scale(C64::new(0.5, 0.0));
    let scale = a.frobenius_norm().max(1.0);
    let tol = 1e-15 * scale;

    let off = |a: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a.get(i, j).norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    for _sweep in 0..60 {
        if off(&a) <= tol {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                let r = apq.norm();
                if r <= tol / (n as f64) {
                    continue;
                }
                let phase = apq / r; // e^{i phi}
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                let tau = (app - aqq) / (2.0 * r);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let cs = C64::new(c, 0.0);
                let s_phase = phase.conj() * s; // s e^{-i phi}

                // Column rotation: new col p = c*colp + s e^{-iphi} colq,
                // new col q = -s e^{iphi} colp + c colq.
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, cs * akp + s_phase * akq);
                    a.set(k, q, cs * akq - s_phase.conj() * akp);
                }
                // Row rotation: new row p = c*rowp + s e^{iphi} rowq,
                // new row q = -s e^{-iphi} rowp + c rowq.
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, cs * apk + s_phase.conj() * aqk);
                    a.set(q, k, cs * aqk - s_phase * apk);
                }
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(eig)
}

/// Validated density matrix: Hermitian, unit trace, positive semidefinite
/// within the tolerances above. Dimension is a power of two.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dim: usize,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let dim = matrix.rows();
        if matrix.cols() != dim || !dim.is_power_of_two() {
            return Err(Error::DimensionMismatch {
                context: "density matrix",
                expected: dim,
                got: matrix.cols(),
            });
        }
        matrix.is_finite()?;
        let herm = matrix.hermiticity_defect();
        if herm > HERMITICITY_TOL {
            return Err(Error::InvalidDensityMatrix {
                reason: "hermiticity defect",
                value: herm,
            });
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidDensityMatrix {
                reason: "trace deviates from 1",
                value: (tr - C64::ONE).norm(),
            });
        }
        let eig = hermitian_eigenvalues(&matrix)?;
        if let Some(&min) = eig.first() {
            if min < EIGENVALUE_FLOOR {
                return Err(Error::InvalidDensityMatrix {
                    reason: "negative eigenvalue",
                    value: min,
                });
            }
        }
        Ok(Self { dim, matrix })
    }

    /// Single-qubit diagonal state diag(1-eps, 1+eps)/2.
    pub fn from_polarization(eps: f64) -> Result<Self> {
        if !(-1.0..=1.0).contains(&eps) || !eps.is_finite() {
            return Err(Error::OutOfRange {
                name: "polarization",
                value: eps,
                min: -1.0,
                max: 1.0,
            });
        }
        Self::new(ComplexMatrix::diag_real(&[
            (1.0 - eps) / 2.0,
            (1.0 + eps) / 2.0,
        ]))
    }

    /// Separable three-qubit product state from the three polarizations.
    pub fn product_state(eps1: f64, eps2: f64, eps3: f64) -> Result<Self> {
        let r1 = Self::from_polarization(eps1)?;
        let r2 = Self::from_polarization(eps2)?;
        let r3 = Self::from_polarization(eps3)?;
        Self::new(kron(&kron(r1.matrix(), r2.matrix()), r3.matrix()))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// Reduced state on the kept subsystems (8-dimensional states only).
    pub fn marginal(&self, keep: &[usize]) -> Result<Self> {
        Self::new(partial_trace(&self.matrix, keep)?)
    }

    /// Polarization of a single-qubit state: tr(rho * diag(-1, 1)).
    pub fn polarization(&self) -> f64 {
        assert_eq!(self.dim, 2, "polarization is defined for qubit states");
        (self.matrix.get(1, 1) - self.matrix.get(0, 0)).re
    }

    /// Real diagonal of the matrix (basis populations).
    pub fn populations(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.matrix.get(i, i).re).collect()
    }
}
