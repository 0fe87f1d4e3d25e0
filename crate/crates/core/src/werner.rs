//! Werner-state classification and invariants.
//!
//! A symmetric state is Werner exactly when its polynomial is radial, and
//! equivalently when it is fixed by every collective single-qubit rotation.
//! Both characterizations are computed — the radial residual exactly, the
//! invariance residual by Haar sampling — and must agree; the radial
//! coefficient vector is then a complete local-unitary invariant.

use nalgebra::linalg::SymmetricEigen;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::pauli::{HermitianOperator, PauliDecomposition};
use crate::poly::symmetric_to_poly;
use crate::render::format_f64;
use crate::rotation::{haar_random_su2, tg_action};
use crate::states::{werner_from_b, werner_rho_a, WernerCoefficients};

/// Default tolerance for both Werner residuals.
pub const DEFAULT_WERNER_TOL: f64 = 1e-8;
/// Default number of Haar samples for the invariance test.
pub const DEFAULT_WERNER_SAMPLES: usize = 50;
/// Fixed default seed so unseeded runs are reproducible.
pub const DEFAULT_SEED: u64 = 7;
/// A state counts as positive semidefinite down to this eigenvalue floor,
/// which absorbs eigensolver noise on boundary states.
pub const POSITIVITY_EIGENVALUE_FLOOR: f64 = -1e-10;
/// Accuracy contract for the eigensolver, per eigenpair.
const EIGEN_RESIDUAL_TOL: f64 = 1e-8;

/// Outcome of the two-sided Werner test.
#[derive(Clone, Debug)]
pub struct WernerReport {
    pub is_werner: bool,
    /// Radial coefficients extracted from the polynomial (meaningful when
    /// `is_werner`; the best radial approximation otherwise).
    pub b: WernerCoefficients,
    pub radial_residual: f64,
    pub max_invariance_residual: f64,
    pub samples: usize,
    pub seed: u64,
}

impl WernerReport {
    /// Flat key-value block for CLI output and golden files.
    pub fn to_text(&self) -> String {
        format!(
            "is_werner {}\nb {}\nradial_residual {}\ninvariance_residual {}\nsamples {}\nseed {}\n",
            self.is_werner,
            self.b,
            format_f64(self.radial_residual),
            format_f64(self.max_invariance_residual),
            self.samples,
            self.seed
        )
    }
}

/// Decide whether a symmetric decomposition is a Werner state by running
/// both characterizations: the radial residual of its polynomial, and the
/// worst coefficientwise deviation under `samples` Haar-random collective
/// rotations. The two must land on the same side of `tol`; a split verdict
/// is reported as an error rather than silently picking one.
pub fn is_werner(
    d: &PauliDecomposition,
    tol: f64,
    samples: usize,
    seed: u64,
) -> Result<WernerReport> {
    let poly = symmetric_to_poly(d, true)?;
    let (b, radial_residual) = poly.radial_extract();

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut max_invariance_residual: f64 = 0.0;
    for _ in 0..samples {
        let g = haar_random_su2(&mut rng);
        let moved = tg_action(&g, d);
        max_invariance_residual = max_invariance_residual.max(moved.max_abs_diff(d));
    }

    let radial_ok = radial_residual < tol;
    let invariance_ok = max_invariance_residual < tol;
    if radial_ok != invariance_ok {
        return Err(Error::Disagreement(format!(
            "radial residual {:.3e} and invariance residual {:.3e} straddle tolerance {:.0e} \
             ({} samples, seed {})",
            radial_residual, max_invariance_residual, tol, samples, seed
        )));
    }
    Ok(WernerReport {
        is_werner: radial_ok,
        b,
        radial_residual,
        max_invariance_residual,
        samples,
        seed,
    })
}

/// All eigenvalues of a Hermitian operator, ascending. Each eigenpair is
/// verified to satisfy `|H v - lambda v| < 1e-8`.
pub fn spectrum(h: &HermitianOperator) -> Result<Vec<f64>> {
    let eigen = SymmetricEigen::new(h.matrix().clone());
    let residual = h.matrix() * &eigen.eigenvectors;
    for (k, lambda) in eigen.eigenvalues.iter().enumerate() {
        let col = residual.column(k) - eigen.eigenvectors.column(k).map(|z| z * *lambda);
        let err = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if err > EIGEN_RESIDUAL_TOL {
            return Err(Error::Numerical(format!(
                "eigenpair {k} has residual {err:.3e} above {EIGEN_RESIDUAL_TOL:.0e}"
            )));
        }
    }
    let mut values: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    values.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are real"));
    Ok(values)
}

/// The elementary symmetric polynomials e2 and e3 of the spectrum of a
/// two-qubit operator. These are the quantities read off the characteristic
/// polynomial `det(rho - lambda Id)`: its lambda^2 coefficient is e2 and its
/// lambda coefficient is -e3, so e2/e3 carry the same information without
/// the sign convention. For the family `rho(a)` they equal `(3 - 3a^2)/8`
/// and `(1 - 3a^2 - 2a^3)/16`.
pub fn elementary_symmetric_invariants(h: &HermitianOperator) -> Result<(f64, f64)> {
    if h.n() != 2 {
        return Err(Error::InvalidArgument(format!(
            "characteristic-polynomial invariants are defined on 2 qubits, got {}",
            h.n()
        )));
    }
    let ev = spectrum(h)?;
    let mut e2 = 0.0;
    let mut e3 = 0.0;
    for i in 0..4 {
        for j in (i + 1)..4 {
            e2 += ev[i] * ev[j];
            for k in (j + 1)..4 {
                e3 += ev[i] * ev[j] * ev[k];
            }
        }
    }
    Ok((e2, e3))
}

/// Decide local-unitary equivalence of two symmetric Werner states by
/// comparing their radial coefficient vectors, which classify these states
/// completely. Both inputs must pass the Werner test.
pub fn lu_invariant_compare(
    rho1: &HermitianOperator,
    rho2: &HermitianOperator,
    tol: f64,
) -> Result<bool> {
    if rho1.n() != rho2.n() {
        return Err(Error::InvalidArgument(format!(
            "cannot compare states on {} and {} qubits",
            rho1.n(),
            rho2.n()
        )));
    }
    let mut reports = Vec::with_capacity(2);
    for (label, rho) in [("first", rho1), ("second", rho2)] {
        let report = is_werner(
            &rho.decompose()?,
            DEFAULT_WERNER_TOL,
            DEFAULT_WERNER_SAMPLES,
            DEFAULT_SEED,
        )?;
        if !report.is_werner {
            return Err(Error::InvalidArgument(format!(
                "{label} state is not a Werner state (radial residual {:.3e})",
                report.radial_residual
            )));
        }
        reports.push(report);
    }
    Ok(reports[0].b.max_abs_diff(&reports[1].b) <= tol)
}

/// Result of the two-qubit positivity scan over the family `rho(a)`.
#[derive(Clone, Debug)]
pub struct ScanResult {
    pub grid: usize,
    pub step: f64,
    /// Endpoints of the contiguous feasible interval, to grid resolution;
    /// `None` when no grid point was feasible.
    pub interval: Option<(f64, f64)>,
}

/// Scan `a` over `[-2, 2]` on a uniform grid and report the contiguous
/// interval where `rho(a)` is positive semidefinite. The exact answer is
/// `[-1, 1/3]`, from the eigenvalues `(1+a)/4` and `(1-3a)/4`.
pub fn positivity_scan_2q(grid: usize) -> Result<ScanResult> {
    if grid < 2 {
        return Err(Error::InvalidArgument("scan needs at least 2 grid points".into()));
    }
    let step = 4.0 / (grid - 1) as f64;
    let feasible: Vec<bool> = (0..grid)
        .map(|i| {
            let a = -2.0 + step * i as f64;
            let ev = spectrum(&werner_rho_a(a)?)?;
            Ok(ev[0] >= POSITIVITY_EIGENVALUE_FLOOR)
        })
        .collect::<Result<_>>()?;

    // longest contiguous feasible run; the family has exactly one
    let mut best: Option<(usize, usize)> = None;
    let mut start: Option<usize> = None;
    for (i, &ok) in feasible.iter().enumerate() {
        match (ok, start) {
            (true, None) => start = Some(i),
            (false, Some(s)) => {
                if best.map_or(true, |(bs, be)| i - s > be - bs + 1) {
                    best = Some((s, i - 1));
                }
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        if best.map_or(true, |(bs, be)| grid - s > be - bs + 1) {
            best = Some((s, grid - 1));
        }
    }
    let interval = best.map(|(s, e)| (-2.0 + step * s as f64, -2.0 + step * e as f64));
    Ok(ScanResult { grid, step, interval })
}

/// Positivity of the state described by radial coefficients.
#[derive(Clone, Debug)]
pub struct PositivityCheck {
    pub feasible: bool,
    pub min_eigenvalue: f64,
}

/// Build the symmetric operator for `b` and report its minimum eigenvalue
/// against the positivity floor.
pub fn positivity_check(b: &WernerCoefficients) -> Result<PositivityCheck> {
    let h = werner_from_b(b)?;
    let ev = spectrum(&h)?;
    Ok(PositivityCheck {
        feasible: ev[0] >= POSITIVITY_EIGENVALUE_FLOOR,
        min_eigenvalue: ev[0],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{uniform_dicke_mixture, StateSpec};

    #[test]
    fn spectrum_of_mixed_state() {
        let h = StateSpec::Mixed.build(Some(2)).unwrap();
        let ev = spectrum(&h).unwrap();
        for v in ev {
            assert!((v - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn spectrum_of_singlet_projector() {
        let h = StateSpec::Singlet.build(None).unwrap();
        let ev = spectrum(&h).unwrap();
        for v in &ev[..3] {
            assert!(v.abs() < 1e-12);
        }
        assert!((ev[3] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spectrum_of_werner_family_is_analytic() {
        for a in [-1.0, -0.3, 0.0, 0.2, 1.0] {
            let ev = spectrum(&werner_rho_a(a).unwrap()).unwrap();
            let mut expect = vec![(1.0 - 3.0 * a) / 4.0, (1.0 + a) / 4.0, (1.0 + a) / 4.0, (1.0 + a) / 4.0];
            expect.sort_by(|x, y| x.partial_cmp(y).unwrap());
            for (got, want) in ev.iter().zip(&expect) {
                assert!((got - want).abs() < 1e-12, "a = {a}");
            }
        }
    }

    #[test]
    fn werner_test_accepts_singlet() {
        let d = StateSpec::Singlet.build(None).unwrap().decompose().unwrap();
        let report = is_werner(&d, DEFAULT_WERNER_TOL, DEFAULT_WERNER_SAMPLES, DEFAULT_SEED).unwrap();
        assert!(report.is_werner);
        assert!(report.radial_residual < 1e-12);
        assert!(report.max_invariance_residual < 1e-12);
        assert!((report.b.values()[0] - 1.0).abs() < 1e-12);
        assert!((report.b.values()[1] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn werner_test_rejects_ghz() {
        let d = StateSpec::Ghz.build(Some(3)).unwrap().decompose().unwrap();
        let report = is_werner(&d, DEFAULT_WERNER_TOL, DEFAULT_WERNER_SAMPLES, DEFAULT_SEED).unwrap();
        assert!(!report.is_werner);
        assert!(report.radial_residual > 0.1);
    }

    #[test]
    fn werner_test_requires_symmetry() {
        let h = StateSpec::Basis0.build(Some(1)).unwrap();
        let half_mixed = h
            .tensor(&StateSpec::Mixed.build(Some(1)).unwrap())
            .unwrap()
            .decompose()
            .unwrap();
        assert!(matches!(
            is_werner(&half_mixed, 1e-8, 10, 0),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn uniform_dicke_mixtures_are_werner() {
        let expected: [(usize, &[f64]); 3] = [
            (2, &[1.0, 1.0 / 3.0]),
            (3, &[1.0, 1.0]),
            (4, &[1.0, 2.0, 0.2]),
        ];
        for (n, b) in expected {
            let d = uniform_dicke_mixture(n).unwrap().decompose().unwrap();
            let report =
                is_werner(&d, DEFAULT_WERNER_TOL, DEFAULT_WERNER_SAMPLES, DEFAULT_SEED).unwrap();
            assert!(report.is_werner, "n = {n}");
            for (got, want) in report.b.values().iter().zip(b) {
                assert!((got - want).abs() < 1e-10, "n = {n}");
            }
        }
    }

    #[test]
    fn invariants_match_closed_forms() {
        for a in [-1.0, -0.5, 0.0, 0.2, 1.0 / 3.0] {
            let (e2, e3) = elementary_symmetric_invariants(&werner_rho_a(a).unwrap()).unwrap();
            let want_e2 = (3.0 - 3.0 * a * a) / 8.0;
            let want_e3 = (1.0 - 3.0 * a * a - 2.0 * a * a * a) / 16.0;
            assert!((e2 - want_e2).abs() < 1e-10, "e2 at a = {a}");
            assert!((e3 - want_e3).abs() < 1e-10, "e3 at a = {a}");
        }
    }

    #[test]
    fn invariants_reject_wrong_size() {
        let h = StateSpec::Mixed.build(Some(1)).unwrap();
        assert!(elementary_symmetric_invariants(&h).is_err());
    }

    #[test]
    fn lu_compare_distinguishes_parameters() {
        let r1 = werner_rho_a(0.2).unwrap();
        let r2 = werner_rho_a(0.3).unwrap();
        assert!(lu_invariant_compare(&r1, &r1, 1e-9).unwrap());
        assert!(!lu_invariant_compare(&r1, &r2, 1e-9).unwrap());
    }

    #[test]
    fn lu_compare_rejects_non_werner() {
        let ghz = StateSpec::Ghz.build(Some(3)).unwrap();
        let err = lu_invariant_compare(&ghz, &ghz, 1e-9);
        assert!(matches!(err, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn scan_finds_the_feasible_interval() {
        let result = positivity_scan_2q(401).unwrap();
        let (lo, hi) = result.interval.unwrap();
        assert!((lo + 1.0).abs() <= result.step + 1e-12);
        assert!((hi - 1.0 / 3.0).abs() <= result.step + 1e-12);
    }

    #[test]
    fn scan_degenerate_grid() {
        assert!(positivity_scan_2q(1).is_err());
        // endpoints -2 and 2 are both infeasible
        let result = positivity_scan_2q(2).unwrap();
        assert!(result.interval.is_none());
    }

    #[test]
    fn positivity_check_examples() {
        let ok = positivity_check(&WernerCoefficients::new(2, vec![1.0, -1.0]).unwrap()).unwrap();
        assert!(ok.feasible);
        assert!(ok.min_eigenvalue.abs() < 1e-10);

        let bad = positivity_check(&WernerCoefficients::new(2, vec![1.0, -2.0]).unwrap()).unwrap();
        assert!(!bad.feasible);
        assert!((bad.min_eigenvalue + 0.25).abs() < 1e-10);

        let dicke4 = positivity_check(&WernerCoefficients::new(4, vec![1.0, 2.0, 0.2]).unwrap()).unwrap();
        assert!(dicke4.feasible);
    }
}
