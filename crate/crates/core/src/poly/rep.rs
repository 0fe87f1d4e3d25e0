//! Infinitesimal rotation generators on polynomial spaces and the SO(3)
//! representation-theory checks built on them: the dimension of the
//! rotation-invariant subspace of degree-bounded polynomials and the Casimir
//! block structure of homogeneous components.
//!
//! The generators are the first-order differential operators
//! `L_z = x d/dy - y d/dx` and its cyclic images, oriented so that
//! `exp(t L_axis)` agrees with substitution by
//! [`Rotation3::about_axis`](crate::rotation::Rotation3::about_axis)`(axis, t)`.

use std::collections::BTreeMap;

use nalgebra::linalg::SymmetricEigen;
use nalgebra::{DMatrix, DVector};

use super::{homogeneous_basis, monomial_basis, Monomial, TriPolynomial, POLY_PRUNE_EPS};
use crate::error::{Error, Result};
use crate::rotation::Axis;

/// Relative singular-value threshold for null-space dimension counting.
const KERNEL_SV_THRESHOLD: f64 = 1e-9;
/// Absolute clustering tolerance for Casimir eigenvalues; exact values are
/// the integers l(l+1), separated by at least 4.
const CASIMIR_CLUSTER_TOL: f64 = 1e-6;

/// The matrix of an angular generator on the monomial basis of polynomials
/// of degree at most `n`, in canonical basis order.
#[derive(Clone, Debug)]
pub struct GeneratorMatrix {
    n: usize,
    axis: Axis,
    basis: Vec<Monomial>,
    matrix: DMatrix<f64>,
}

/// Build the generator for `axis` on polynomials of degree at most `n`.
pub fn angular_generator(axis: Axis, n: usize) -> GeneratorMatrix {
    let basis = monomial_basis(n);
    let matrix = generator_on_basis(axis, &basis);
    GeneratorMatrix { n, axis, basis, matrix }
}

impl GeneratorMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Apply the generator to a polynomial of matching degree bound.
    pub fn apply(&self, f: &TriPolynomial) -> Result<TriPolynomial> {
        let v = self.to_vector(f)?;
        self.from_vector(&(&self.matrix * v))
    }

    /// Apply `exp(t L)`, the one-parameter rotation flow.
    pub fn exp_apply(&self, t: f64, f: &TriPolynomial) -> Result<TriPolynomial> {
        let v = self.to_vector(f)?;
        let e = expm(&self.matrix.scale(t));
        self.from_vector(&(e * v))
    }

    fn to_vector(&self, f: &TriPolynomial) -> Result<DVector<f64>> {
        if f.n() != self.n {
            return Err(Error::InvalidArgument(format!(
                "polynomial degree bound {} does not match generator bound {}",
                f.n(),
                self.n
            )));
        }
        Ok(DVector::from_iterator(
            self.basis.len(),
            self.basis.iter().map(|m| f.coefficient(m)),
        ))
    }

    fn from_vector(&self, v: &DVector<f64>) -> Result<TriPolynomial> {
        TriPolynomial::from_terms(
            self.n,
            self.basis
                .iter()
                .zip(v.iter())
                .filter(|(_, &c)| c.abs() >= POLY_PRUNE_EPS)
                .map(|(&m, &c)| (m, c)),
        )
    }
}

/// Action of a generator on a single monomial as (image monomial, weight)
/// pairs; e.g. `L_z (x^a y^b z^c) = b x^{a+1} y^{b-1} z^c - a x^{a-1} y^{b+1} z^c`.
fn generator_action(axis: Axis, m: &Monomial) -> Vec<(Monomial, f64)> {
    let mut out = Vec::with_capacity(2);
    let (a, b, c) = (m.x, m.y, m.z);
    match axis {
        Axis::Z => {
            if b > 0 {
                out.push((Monomial::new(a + 1, b - 1, c), b as f64));
            }
            if a > 0 {
                out.push((Monomial::new(a - 1, b + 1, c), -(a as f64)));
            }
        }
        Axis::X => {
            if c > 0 {
                out.push((Monomial::new(a, b + 1, c - 1), c as f64));
            }
            if b > 0 {
                out.push((Monomial::new(a, b - 1, c + 1), -(b as f64)));
            }
        }
        Axis::Y => {
            if a > 0 {
                out.push((Monomial::new(a - 1, b, c + 1), a as f64));
            }
            if c > 0 {
                out.push((Monomial::new(a + 1, b, c - 1), -(c as f64)));
            }
        }
    }
    out
}

fn generator_on_basis(axis: Axis, basis: &[Monomial]) -> DMatrix<f64> {
    let pos: BTreeMap<Monomial, usize> =
        basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut matrix = DMatrix::zeros(basis.len(), basis.len());
    for (j, m) in basis.iter().enumerate() {
        for (target, weight) in generator_action(axis, m) {
            let i = pos[&target]; // generators preserve total degree
            matrix[(i, j)] += weight;
        }
    }
    matrix
}

/// Matrix exponential by scaling and squaring of the truncated series.
fn expm(a: &DMatrix<f64>) -> DMatrix<f64> {
    let dim = a.nrows();
    let norm = (0..dim)
        .map(|j| a.column(j).iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0f64, f64::max);
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let b = a.scale(0.5f64.powi(squarings as i32));
    let mut term = DMatrix::<f64>::identity(dim, dim);
    let mut sum = DMatrix::<f64>::identity(dim, dim);
    for k in 1..200 {
        term = (&term * &b).scale(1.0 / k as f64);
        let t_norm = term.iter().map(|v| v.abs()).fold(0.0f64, f64::max);
        sum += &term;
        if t_norm < 1e-18 {
            break;
        }
    }
    let mut result = sum;
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// Dimension of the subspace of degree-at-most-`n` polynomials killed by all
/// three generators, i.e. fixed by every rotation. Computed as the null
/// space of the three generators stacked, with a relative singular-value
/// threshold. Equals `n/2 + 1`, spanned by the powers of `x^2+y^2+z^2`.
pub fn invariant_dimension(n: usize) -> usize {
    let basis = monomial_basis(n);
    let dim = basis.len();
    let mut stacked = DMatrix::zeros(3 * dim, dim);
    for (block, axis) in [Axis::X, Axis::Y, Axis::Z].into_iter().enumerate() {
        let g = generator_on_basis(axis, &basis);
        stacked.view_mut((block * dim, 0), (dim, dim)).copy_from(&g);
    }
    let svd = stacked.svd(false, false);
    let smax = svd.singular_values.iter().copied().fold(0.0f64, f64::max);
    if smax == 0.0 {
        return dim;
    }
    svd.singular_values
        .iter()
        .filter(|&&s| s <= KERNEL_SV_THRESHOLD * smax)
        .count()
}

/// Casimir block structure of the homogeneous degree-`p` polynomials:
/// eigenvalue clusters of `L^2` as `(l, multiplicity)` pairs with
/// `l(l+1)` the cluster value, sorted by descending `l`. The homogeneous
/// component decomposes into one (2l+1)-dimensional block for each
/// `l = p, p-2, ...` down to 1 or 0.
pub fn casimir_spectrum(p: usize) -> Result<Vec<(u32, usize)>> {
    let basis = homogeneous_basis(p);
    let dim = basis.len();
    // Rescaling each monomial by sqrt(x! y! z!) makes the generators
    // antisymmetric (the rotation-invariant inner product on polynomials is
    // diagonal with those weights), so the Casimir is symmetric and a
    // symmetric eigensolver applies.
    let weights: Vec<f64> = basis
        .iter()
        .map(|m| (factorial(m.x) * factorial(m.y) * factorial(m.z)).sqrt())
        .collect();
    let mut casimir = DMatrix::<f64>::zeros(dim, dim);
    for axis in [Axis::X, Axis::Y, Axis::Z] {
        let g = generator_on_basis(axis, &basis);
        let mut gw = g;
        for i in 0..dim {
            for j in 0..dim {
                gw[(i, j)] *= weights[i] / weights[j];
            }
        }
        casimir -= &gw * &gw;
    }
    let casimir = (&casimir + casimir.transpose()).scale(0.5);
    let eigen = SymmetricEigen::new(casimir);
    let mut values: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| a.partial_cmp(b).expect("real eigenvalues"));

    let mut blocks: Vec<(u32, usize)> = Vec::new();
    let mut cluster: Vec<f64> = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        cluster.push(v);
        let last = i + 1 == values.len();
        if last || values[i + 1] - v > CASIMIR_CLUSTER_TOL {
            let mean = cluster.iter().sum::<f64>() / cluster.len() as f64;
            let l = ((-1.0 + (1.0 + 4.0 * mean.max(0.0)).sqrt()) / 2.0).round();
            let target = l * (l + 1.0);
            if (mean - target).abs() > CASIMIR_CLUSTER_TOL {
                return Err(Error::Numerical(format!(
                    "unresolved Casimir cluster at {mean}; nearest l(l+1) is {target}"
                )));
            }
            if blocks.iter().any(|&(bl, _)| bl == l as u32) {
                return Err(Error::Numerical(format!(
                    "eigenvalue cluster for l = {l} split by a gap below tolerance"
                )));
            }
            blocks.push((l as u32, cluster.len()));
            cluster.clear();
        }
    }
    blocks.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(blocks)
}

fn factorial(k: u32) -> f64 {
    (1..=k as u64).map(|v| v as f64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::Rotation3;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn poly(n: usize, terms: &[(u32, u32, u32, f64)]) -> TriPolynomial {
        TriPolynomial::from_terms(
            n,
            terms.iter().map(|&(a, b, c, v)| (Monomial::new(a, b, c), v)),
        )
        .unwrap()
    }

    #[test]
    fn z_generator_on_linear_monomials() {
        let gen = angular_generator(Axis::Z, 1);
        let x = poly(1, &[(1, 0, 0, 1.0)]);
        let y = poly(1, &[(0, 1, 0, 1.0)]);
        let z = poly(1, &[(0, 0, 1, 1.0)]);

        let lx = gen.apply(&x).unwrap();
        assert!((lx.coefficient(&Monomial::new(0, 1, 0)) + 1.0).abs() < 1e-15);
        assert_eq!(lx.term_count(), 1);

        let ly = gen.apply(&y).unwrap();
        assert!((ly.coefficient(&Monomial::new(1, 0, 0)) - 1.0).abs() < 1e-15);

        let lz = gen.apply(&z).unwrap();
        assert_eq!(lz.term_count(), 0);
    }

    #[test]
    fn radius_squared_is_in_every_kernel() {
        let r2 = poly(2, &[(2, 0, 0, 1.0), (0, 2, 0, 1.0), (0, 0, 2, 1.0)]);
        for axis in [Axis::X, Axis::Y, Axis::Z] {
            let gen = angular_generator(axis, 2);
            assert_eq!(gen.apply(&r2).unwrap().term_count(), 0, "axis {axis:?}");
        }
    }

    #[test]
    fn exp_of_generator_matches_rotation() {
        let mut rng = ChaCha12Rng::seed_from_u64(21);
        for n in [2usize, 4] {
            let basis = monomial_basis(n);
            for axis in [Axis::X, Axis::Y, Axis::Z] {
                let gen = angular_generator(axis, n);
                for &t in &[0.1, 0.5, 1.0] {
                    let f = TriPolynomial::from_terms(
                        n,
                        basis.iter().map(|&m| (m, rng.random_range(-1.0..1.0))),
                    )
                    .unwrap();
                    let via_exp = gen.exp_apply(t, &f).unwrap();
                    let via_rot = f.rotated(&Rotation3::about_axis(axis, t));
                    let err = via_exp.max_abs_diff(&via_rot);
                    assert!(err < 1e-7, "axis {axis:?}, t {t}, n {n}: err {err} (seed 21)");
                }
            }
        }
    }

    #[test]
    fn generator_requires_matching_bound() {
        let gen = angular_generator(Axis::Z, 2);
        let f = TriPolynomial::constant(3, 1.0);
        assert!(gen.apply(&f).is_err());
    }

    #[test]
    fn invariant_dimension_matches_formula() {
        for n in 0..=8 {
            assert_eq!(invariant_dimension(n), n / 2 + 1, "n = {n}");
        }
    }

    #[test]
    fn casimir_blocks_for_small_degrees() {
        assert_eq!(casimir_spectrum(0).unwrap(), vec![(0, 1)]);
        assert_eq!(casimir_spectrum(1).unwrap(), vec![(1, 3)]);
        assert_eq!(casimir_spectrum(2).unwrap(), vec![(2, 5), (0, 1)]);
        assert_eq!(casimir_spectrum(3).unwrap(), vec![(3, 7), (1, 3)]);
    }

    #[test]
    fn expm_of_zero_is_identity() {
        let z = DMatrix::<f64>::zeros(4, 4);
        let e = expm(&z);
        assert!((e - DMatrix::<f64>::identity(4, 4)).iter().all(|v| v.abs() < 1e-15));
    }
}
