//! Dense 2^n x 2^n Hermitian matrices and the maps to and from Pauli
//! coordinates.
//!
//! Every Pauli tensor has exactly one nonzero entry per column: column `r`
//! holds a unit-modulus phase at row `r ^ m`, where the flip mask `m` has a
//! bit for every x or y slot. Decomposition, reconstruction, and
//! `sigma_tensor` all walk that sparse column structure instead of forming
//! Kronecker products.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::{check_dense_qubit_count, MultiIndex, PauliDecomposition};
use crate::error::{Error, Result};

/// Entrywise tolerance for accepting a matrix as Hermitian.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Imaginary parts of Pauli coefficients above this are a hard error.
const DECOMPOSE_IMAG_TOL: f64 = 1e-8;

/// A dense Hermitian operator on `n` qubits. Qubit 0 is the most significant
/// bit of the row/column index.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianOperator {
    n: usize,
    matrix: DMatrix<Complex64>,
}

impl HermitianOperator {
    /// Wrap a matrix, validating the dimension and Hermiticity.
    pub fn new(n: usize, matrix: DMatrix<Complex64>) -> Result<Self> {
        check_dense_qubit_count(n)?;
        let dim = 1usize << n;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::InvalidArgument(format!(
                "expected a {dim}x{dim} matrix for {n} qubits, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let h = HermitianOperator { n, matrix };
        let err = h.hermiticity_error();
        if err > HERMITICITY_TOL {
            return Err(Error::NotHermitian(format!(
                "max |H - H^dagger| entry is {err:.3e} (tolerance {HERMITICITY_TOL:.0e})"
            )));
        }
        Ok(h)
    }

    /// The identity matrix on `n` qubits.
    pub fn identity(n: usize) -> Result<Self> {
        check_dense_qubit_count(n)?;
        let dim = 1usize << n;
        Ok(HermitianOperator { n, matrix: DMatrix::identity(dim, dim) })
    }

    /// Projector onto the (normalized) span of `amplitudes`.
    pub fn from_ket(n: usize, amplitudes: &[Complex64]) -> Result<Self> {
        check_dense_qubit_count(n)?;
        let dim = 1usize << n;
        if amplitudes.len() != dim {
            return Err(Error::InvalidArgument(format!(
                "ket has {} amplitudes, expected {dim}",
                amplitudes.len()
            )));
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm_sq < 1e-300 {
            return Err(Error::InvalidArgument("ket must be nonzero".into()));
        }
        let mut matrix = DMatrix::zeros(dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                matrix[(r, c)] = amplitudes[r] * amplitudes[c].conj() / norm_sq;
            }
        }
        Ok(HermitianOperator { n, matrix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1usize << self.n
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.diagonal().iter().map(|z| z.re).sum()
    }

    /// Max entrywise deviation from `H = H^dagger`.
    pub fn hermiticity_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.dim() {
            for c in r..self.dim() {
                worst = worst.max((self.matrix[(r, c)] - self.matrix[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "cannot add operators on {} and {} qubits",
                self.n, other.n
            )));
        }
        Ok(HermitianOperator { n: self.n, matrix: &self.matrix + &other.matrix })
    }

    /// Scale by a real factor (keeps Hermiticity).
    pub fn scaled(&self, alpha: f64) -> Self {
        HermitianOperator {
            n: self.n,
            matrix: self.matrix.map(|z| z * alpha),
        }
    }

    /// Kronecker product, with `self` as the leading (most significant) factor.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        check_dense_qubit_count(self.n + other.n)?;
        Ok(HermitianOperator {
            n: self.n + other.n,
            matrix: self.matrix.kronecker(&other.matrix),
        })
    }

    /// Conjugation `U H U^dagger` by a unitary of matching dimension.
    pub fn conjugated(&self, u: &DMatrix<Complex64>) -> Result<Self> {
        if u.nrows() != self.dim() || u.ncols() != self.dim() {
            return Err(Error::InvalidArgument(format!(
                "conjugating unitary must be {0}x{0}",
                self.dim()
            )));
        }
        let matrix = u * &self.matrix * u.adjoint();
        HermitianOperator::new(self.n, matrix)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for (a, b) in self.matrix.iter().zip(other.matrix.iter()) {
            worst = worst.max((a - b).norm());
        }
        worst
    }

    /// Expand over the Pauli tensor basis: `s_I = tr(H sigma_I) / 2^n`.
    /// Residual imaginary parts are discarded below 1e-10 and rejected above
    /// 1e-8.
    pub fn decompose(&self) -> Result<PauliDecomposition> {
        let mut d = PauliDecomposition::zero(self.n)?;
        let dim = self.dim();
        let scale = 1.0 / dim as f64;
        let mut labels = vec![0u8; self.n];
        loop {
            let (mask, phases) = column_structure(&labels);
            let mut t = Complex64::new(0.0, 0.0);
            for r in 0..dim {
                // tr(H sigma_I) = sum_r H[r, r ^ m] * sigma_I[r ^ m, r]
                t += self.matrix[(r, r ^ mask)] * column_phase(&labels, &phases, r);
            }
            let s = t * scale;
            if s.im.abs() > DECOMPOSE_IMAG_TOL {
                return Err(Error::NotHermitian(format!(
                    "coefficient at {} has imaginary part {:.3e}",
                    MultiIndex::new(labels.clone())?,
                    s.im
                )));
            }
            if s.re.abs() >= super::PRUNE_EPS {
                d.accumulate(MultiIndex::new(labels.clone())?, s.re);
            }
            if !advance_labels(&mut labels) {
                break;
            }
        }
        Ok(d)
    }
}

impl PauliDecomposition {
    /// Dense sum `sum_I s_I sigma_I`. Exactly Hermitian by construction.
    pub fn reconstruct(&self) -> Result<HermitianOperator> {
        check_dense_qubit_count(self.n())?;
        let dim = 1usize << self.n();
        let mut matrix = DMatrix::zeros(dim, dim);
        for (idx, c) in self.terms() {
            let (mask, phases) = column_structure(idx.entries());
            for r in 0..dim {
                matrix[(r ^ mask, r)] += column_phase(idx.entries(), &phases, r) * c;
            }
        }
        HermitianOperator::new(self.n(), matrix)
    }
}

/// Single-qubit Pauli matrix: `sigma(0)` is the identity, then x, y, z.
pub fn sigma(i: usize) -> Result<HermitianOperator> {
    if i > 3 {
        return Err(Error::InvalidArgument(format!("Pauli index {i} out of range 0..=3")));
    }
    sigma_tensor(&MultiIndex::new(vec![i as u8])?)
}

/// Tensor product of Pauli matrices in qubit order (qubit 0 leftmost).
pub fn sigma_tensor(idx: &MultiIndex) -> Result<HermitianOperator> {
    check_dense_qubit_count(idx.len())?;
    let n = idx.len();
    let dim = 1usize << n;
    let (mask, phases) = column_structure(idx.entries());
    let mut matrix = DMatrix::zeros(dim, dim);
    for r in 0..dim {
        matrix[(r ^ mask, r)] = column_phase(idx.entries(), &phases, r);
    }
    HermitianOperator::new(n, matrix)
}

/// Per-slot column phases for the four Pauli labels, indexed by the slot bit.
/// `sigma_I` maps basis column `r` to row `r ^ mask` with the product of
/// these phases.
fn column_structure(labels: &[u8]) -> (usize, [[Complex64; 2]; 4]) {
    let n = labels.len();
    let mut mask = 0usize;
    for (q, &l) in labels.iter().enumerate() {
        if l == 1 || l == 2 {
            mask |= 1 << (n - 1 - q);
        }
    }
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let phases = [
        [one, one],   // identity
        [one, one],   // x
        [i, -i],      // y: |0> -> i|1>, |1> -> -i|0>
        [one, -one],  // z
    ];
    (mask, phases)
}

fn column_phase(labels: &[u8], phases: &[[Complex64; 2]; 4], r: usize) -> Complex64 {
    let n = labels.len();
    let mut p = Complex64::new(1.0, 0.0);
    for (q, &l) in labels.iter().enumerate() {
        if l == 0 {
            continue;
        }
        let bit = (r >> (n - 1 - q)) & 1;
        p *= phases[l as usize][bit];
    }
    p
}

/// Odometer over multi-index labels in lexicographic order.
fn advance_labels(labels: &mut [u8]) -> bool {
    for slot in labels.iter_mut().rev() {
        if *slot < 3 {
            *slot += 1;
            return true;
        }
        *slot = 0;
    }
    false
}
