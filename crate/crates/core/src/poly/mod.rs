//! Real trivariate polynomials of bounded degree and their correspondence
//! with symmetric Pauli decompositions.
//!
//! A symmetric n-qubit decomposition maps invertibly onto a polynomial of
//! degree at most n in x, y, z: each permutation orbit of Pauli indices with
//! n1 x-labels, n2 y-labels and n3 z-labels contributes the monomial
//! `x^n1 y^n2 z^n3` with coefficient `2^n * M * s`, where `M` is the orbit
//! size and `s` the common coefficient on the orbit. Mixing states adds
//! polynomials; symmetrized tensor products multiply them; conjugating every
//! qubit by the same SU(2) element rotates the variables.

pub mod rep;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::pauli::{IndexType, PauliDecomposition, SYMMETRY_TOL};
use crate::render::format_f64;
use crate::rotation::Rotation3;
use crate::states::WernerCoefficients;

/// Coefficients below this magnitude are pruned.
pub const POLY_PRUNE_EPS: f64 = 1e-14;

/// A power product `x^x y^y z^z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial { x, y, z }
    }

    pub fn constant() -> Self {
        Monomial { x: 0, y: 0, z: 0 }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y + self.z
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { x: self.x + other.x, y: self.y + other.y, z: self.z + other.z }
    }
}

/// Canonical term order: ascending total degree, then descending powers of
/// (x, y, z), so `x^3` precedes `x y^2`. Printing follows this order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then((other.x, other.y, other.z).cmp(&(self.x, self.y, self.z)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (var, p) in [("x", self.x), ("y", self.y), ("z", self.z)] {
            match p {
                0 => {}
                1 => parts.push(var.to_string()),
                _ => parts.push(format!("{var}^{p}")),
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// All monomials of total degree at most `n`, in canonical order.
pub fn monomial_basis(n: usize) -> Vec<Monomial> {
    let n = n as u32;
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for c in 0..=n - a - b {
                out.push(Monomial::new(a, b, c));
            }
        }
    }
    out.sort();
    out
}

/// All monomials of total degree exactly `p`, in canonical order.
pub fn homogeneous_basis(p: usize) -> Vec<Monomial> {
    let p = p as u32;
    let mut out = Vec::new();
    for a in 0..=p {
        for b in 0..=p - a {
            out.push(Monomial::new(a, b, p - a - b));
        }
    }
    out.sort();
    out
}

/// A sparse real polynomial in x, y, z of degree at most `n`, where `n` is
/// the qubit count of the states it represents.
#[derive(Clone, Debug, PartialEq)]
pub struct TriPolynomial {
    n: usize,
    coeffs: BTreeMap<Monomial, f64>,
}

impl TriPolynomial {
    pub fn zero(n: usize) -> Self {
        TriPolynomial { n, coeffs: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: f64) -> Self {
        let mut p = Self::zero(n);
        p.accumulate(Monomial::constant(), c);
        p
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, f64)>,
    {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            if m.degree() as usize > n {
                return Err(Error::InvalidArgument(format!(
                    "monomial {m} has degree {} above the bound {n}",
                    m.degree()
                )));
            }
            p.accumulate(m, c);
        }
        Ok(p)
    }

    /// The radial polynomial `sum_m b[m] (x^2+y^2+z^2)^m`; requires
    /// `2 (len(b) - 1) <= n`.
    pub fn radial(n: usize, b: &[f64]) -> Result<Self> {
        if b.is_empty() {
            return Ok(Self::zero(n));
        }
        if 2 * (b.len() - 1) > n {
            return Err(Error::InvalidArgument(format!(
                "radial coefficients up to r^{} exceed degree bound {n}",
                2 * (b.len() - 1)
            )));
        }
        let r2 = radial_square_map();
        let mut power: BTreeMap<Monomial, f64> = BTreeMap::new();
        power.insert(Monomial::constant(), 1.0);
        let mut out = Self::zero(n);
        for (m, &bm) in b.iter().enumerate() {
            if m > 0 {
                power = mul_maps(&power, &r2);
            }
            for (&mono, &c) in &power {
                out.accumulate(mono, bm * c);
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest total degree with a nonzero coefficient (0 for the zero
    /// polynomial).
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> f64 {
        self.coeffs.get(m).copied().unwrap_or(0.0)
    }

    /// Iterate stored terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, f64)> {
        self.coeffs.iter().map(|(m, &c)| (m, c))
    }

    fn accumulate(&mut self, m: Monomial, c: f64) {
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(m) {
            Entry::Vacant(e) => {
                if c.abs() >= POLY_PRUNE_EPS {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                let v = e.get_mut();
                *v += c;
                if v.abs() < POLY_PRUNE_EPS {
                    e.remove();
                }
            }
        }
    }

    /// Coefficientwise sum; the degree bounds must match.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "cannot add polynomials with degree bounds {} and {}",
                self.n, other.n
            )));
        }
        let mut out = self.clone();
        for (&m, &c) in &other.coeffs {
            out.accumulate(m, c);
        }
        Ok(out)
    }

    pub fn scaled(&self, alpha: f64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&m, &c)| (m, c * alpha))
            .filter(|(_, c)| c.abs() >= POLY_PRUNE_EPS)
            .collect();
        TriPolynomial { n: self.n, coeffs }
    }

    /// Product; degree bounds add, mirroring the symmetrized tensor product
    /// of states.
    pub fn mul(&self, other: &Self) -> Self {
        TriPolynomial {
            n: self.n + other.n,
            coeffs: mul_maps(&self.coeffs, &other.coeffs),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for (m, c) in self.terms() {
            worst = worst.max((c - other.coefficient(m)).abs());
        }
        for (m, c) in other.terms() {
            worst = worst.max((c - self.coefficient(m)).abs());
        }
        worst
    }

    /// Substitute `(x, y, z) -> (x, y, z) R` (row vector times matrix) and
    /// re-expand. Homogeneous components keep their degree.
    pub fn rotated(&self, r: &Rotation3) -> Self {
        let m = r.matrix();
        // image of variable j is the linear form with coefficients column j
        let images: Vec<BTreeMap<Monomial, f64>> = (0..3)
            .map(|j| {
                let mut lin = BTreeMap::new();
                for (i, var) in
                    [Monomial::new(1, 0, 0), Monomial::new(0, 1, 0), Monomial::new(0, 0, 1)]
                        .into_iter()
                        .enumerate()
                {
                    let c = m[(i, j)];
                    if c.abs() >= POLY_PRUNE_EPS {
                        lin.insert(var, c);
                    }
                }
                lin
            })
            .collect();

        let mx = self.coeffs.keys().map(|mo| mo.x).max().unwrap_or(0) as usize;
        let my = self.coeffs.keys().map(|mo| mo.y).max().unwrap_or(0) as usize;
        let mz = self.coeffs.keys().map(|mo| mo.z).max().unwrap_or(0) as usize;
        let px = power_table(&images[0], mx);
        let py = power_table(&images[1], my);
        let pz = power_table(&images[2], mz);

        let mut out = Self::zero(self.n);
        for (&mono, &c) in &self.coeffs {
            let prod = mul_maps(
                &mul_maps(&px[mono.x as usize], &py[mono.y as usize]),
                &pz[mono.z as usize],
            );
            for (&m, &v) in &prod {
                out.accumulate(m, c * v);
            }
        }
        out
    }

    /// Peel off the radial part `sum_m b_m (x^2+y^2+z^2)^m`, highest even
    /// degree first: the coefficient of `x^{2m}` determines `b_m` because
    /// `r^{2m}` is the only radial term reaching that monomial at that degree.
    /// Returns the radial coefficients (length `n/2 + 1`) and the Euclidean
    /// norm of the non-radial remainder, which is zero exactly when the
    /// polynomial is radial.
    pub fn radial_extract(&self) -> (WernerCoefficients, f64) {
        let cap = self.n / 2;
        let mut b = vec![0.0; cap + 1];
        let mut work = self.clone();
        for m in (0..=cap).rev() {
            let c = work.coefficient(&Monomial::new(2 * m as u32, 0, 0));
            if c != 0.0 {
                b[m] = c;
                let radial_term = Self::radial(self.n, &pad_to(m, c)).expect("degree fits");
                for (&mono, &v) in &radial_term.coeffs {
                    work.accumulate(mono, -v);
                }
            }
        }
        let residual = work.coeffs.values().map(|c| c * c).sum::<f64>().sqrt();
        let coeffs = WernerCoefficients::new(self.n, b).expect("length n/2 + 1 by construction");
        (coeffs, residual)
    }
}

fn pad_to(m: usize, c: f64) -> Vec<f64> {
    let mut v = vec![0.0; m + 1];
    v[m] = c;
    v
}

fn radial_square_map() -> BTreeMap<Monomial, f64> {
    let mut r2 = BTreeMap::new();
    r2.insert(Monomial::new(2, 0, 0), 1.0);
    r2.insert(Monomial::new(0, 2, 0), 1.0);
    r2.insert(Monomial::new(0, 0, 2), 1.0);
    r2
}

fn mul_maps(a: &BTreeMap<Monomial, f64>, b: &BTreeMap<Monomial, f64>) -> BTreeMap<Monomial, f64> {
    let mut out: BTreeMap<Monomial, f64> = BTreeMap::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let c = ca * cb;
            let entry = out.entry(ma.mul(mb)).or_insert(0.0);
            *entry += c;
        }
    }
    out.retain(|_, c| c.abs() >= POLY_PRUNE_EPS);
    out
}

fn power_table(base: &BTreeMap<Monomial, f64>, max: usize) -> Vec<BTreeMap<Monomial, f64>> {
    let mut table = Vec::with_capacity(max + 1);
    let mut one = BTreeMap::new();
    one.insert(Monomial::constant(), 1.0);
    table.push(one);
    for k in 1..=max {
        table.push(mul_maps(&table[k - 1], base));
    }
    table
}

/// Canonical text form: terms in canonical order, coefficients always
/// printed except that the bare constant `1` stays `1`, e.g.
/// `1 - 1 x^2 - 1 y^2 - 1 z^2`.
impl fmt::Display for TriPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.coeffs {
            let body = if m.degree() == 0 {
                format_f64(c.abs())
            } else {
                format!("{} {}", format_f64(c.abs()), m)
            };
            if first {
                if *c < 0.0 {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if *c < 0.0 {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

/// Map a permutation-symmetric decomposition to its polynomial: the orbit of
/// index type `(n0, n1, n2, n3)` contributes `2^n * (orbit coefficient sum)`
/// to the monomial `x^n1 y^n2 z^n3`. With `require_symmetric` set, inputs
/// whose worst orbit spread exceeds the symmetry tolerance are rejected;
/// otherwise the orbit mean is used, which composes this map with the
/// symmetrization projector.
pub fn symmetric_to_poly(d: &PauliDecomposition, require_symmetric: bool) -> Result<TriPolynomial> {
    if require_symmetric {
        let spread = d.symmetry_spread();
        if spread > SYMMETRY_TOL {
            return Err(Error::NotSymmetric(format!(
                "worst orbit spread {spread:.3e} exceeds tolerance {SYMMETRY_TOL:.0e}"
            )));
        }
    }
    let scale = (1u64 << d.n()) as f64;
    let mut sums: BTreeMap<IndexType, f64> = BTreeMap::new();
    for (idx, c) in d.terms() {
        *sums.entry(idx.index_type()).or_insert(0.0) += c;
    }
    let mut poly = TriPolynomial::zero(d.n());
    for (ty, sum) in sums {
        let [_, n1, n2, n3] = ty.counts();
        poly.accumulate(Monomial::new(n1 as u32, n2 as u32, n3 as u32), scale * sum);
    }
    Ok(poly)
}

/// Inverse map: each monomial coefficient is spread uniformly over its index
/// orbit, `s_J = c / (2^n * M)`.
pub fn poly_to_symmetric(f: &TriPolynomial) -> Result<PauliDecomposition> {
    let n = f.n();
    let mut d = PauliDecomposition::zero(n)?;
    let scale = (1u64 << n) as f64;
    for (m, c) in f.terms() {
        let deg = m.degree() as usize;
        debug_assert!(deg <= n);
        let ty = IndexType::new(n - deg, m.x as usize, m.y as usize, m.z as usize);
        let s = c / (scale * ty.orbit_size() as f64);
        for idx in ty.orbit() {
            d.accumulate(idx, s);
        }
    }
    Ok(d)
}
