//! Dense oracles and random generators shared by the integration tests.
//!
//! Everything here recomputes results through explicit dense matrix
//! manipulation, independent of the sparse Pauli-coordinate paths it is used
//! to check.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use wernerpoly::pauli::{HermitianOperator, PauliDecomposition};

/// All permutations of `0..n` in some fixed order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute_rec(&mut items, 0, &mut out);
    out
}

fn permute_rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_rec(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Dense matrix of the qubit permutation: basis ket bits move from slot `q`
/// to slot `perm[q]` (qubit 0 is the most significant bit).
pub fn permutation_matrix(n: usize, perm: &[usize]) -> DMatrix<Complex64> {
    let dim = 1usize << n;
    let mut m = DMatrix::zeros(dim, dim);
    for v in 0..dim {
        let mut w = 0usize;
        for q in 0..n {
            let bit = (v >> (n - 1 - q)) & 1;
            w |= bit << (n - 1 - perm[q]);
        }
        m[(w, v)] = Complex64::new(1.0, 0.0);
    }
    m
}

/// Average of `P H P^{-1}` over all n! qubit permutations, densely.
pub fn dense_symmetrize(h: &HermitianOperator) -> HermitianOperator {
    let n = h.n();
    let perms = permutations(n);
    let dim = h.dim();
    let mut acc: DMatrix<Complex64> = DMatrix::zeros(dim, dim);
    for p in &perms {
        let pm = permutation_matrix(n, p);
        acc += &pm * h.matrix() * pm.transpose();
    }
    let weight = Complex64::new(1.0 / perms.len() as f64, 0.0);
    HermitianOperator::new(n, acc.map(|z| z * weight)).expect("average of conjugates is Hermitian")
}

fn insert_bit(v: usize, reduced_qubits: usize, k: usize, bit: usize) -> usize {
    let low_bits = reduced_qubits - k;
    let high = v >> low_bits;
    let low = v & ((1 << low_bits) - 1);
    (((high << 1) | bit) << low_bits) | low
}

/// Dense partial trace over qubit `k` (0-based).
pub fn dense_partial_trace(h: &HermitianOperator, k: usize) -> HermitianOperator {
    let n = h.n();
    assert!(n >= 2 && k < n);
    let m = n - 1;
    let dim = 1usize << m;
    let mut out = DMatrix::zeros(dim, dim);
    for r in 0..dim {
        for c in 0..dim {
            let mut sum = Complex64::new(0.0, 0.0);
            for b in 0..2 {
                sum += h.matrix()[(insert_bit(r, m, k, b), insert_bit(c, m, k, b))];
            }
            out[(r, c)] = sum;
        }
    }
    HermitianOperator::new(m, out).expect("partial trace of Hermitian is Hermitian")
}

/// Random Hermitian matrix with Gaussian entries, scaled to O(1) norm.
pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> HermitianOperator {
    let dim = 1usize << n;
    let a = DMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let h = (&a + a.adjoint()).map(|z| z * 0.5 / (dim as f64).sqrt());
    HermitianOperator::new(n, h).expect("symmetrized matrix is Hermitian")
}

/// Random density matrix: normalized Gram matrix of a Gaussian square root.
pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> HermitianOperator {
    let dim = 1usize << n;
    let a = DMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let g = &a * a.adjoint();
    let tr: f64 = g.diagonal().iter().map(|z| z.re).sum();
    HermitianOperator::new(n, g.map(|z| z / tr)).expect("Gram matrix is Hermitian")
}

/// Random permutation-symmetric decomposition.
pub fn random_symmetric_decomposition<R: Rng>(rng: &mut R, n: usize) -> PauliDecomposition {
    random_hermitian(rng, n)
        .decompose()
        .expect("random Hermitian decomposes")
        .symmetrize()
}
