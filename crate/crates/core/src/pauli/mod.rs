//! Pauli-tensor representation of n-qubit Hermitian operators.
//!
//! Every Hermitian operator on n qubits expands uniquely over the tensor
//! products of the four Pauli matrices with real coefficients. This module
//! provides the sparse coefficient representation ([`PauliDecomposition`]),
//! the dense matrix representation ([`HermitianOperator`]), and the maps
//! between them, together with the qubit-permutation action, symmetrization
//! by orbit averaging, tensor products, and the partial trace — all computed
//! directly in Pauli coordinates.
//!
//! Conventions: qubit 0 is the leftmost tensor factor and the most
//! significant bit of a computational-basis index, so that a permutation
//! swapping qubits 1 and 2 maps `|11000⟩` to `|10100⟩`.

mod dense;
mod format;

pub use dense::{sigma, sigma_tensor, HermitianOperator, HERMITICITY_TOL};
pub use format::{from_pauli_str, read_pauli_file, to_pauli_string, write_pauli_file};

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest qubit count for which dense 2^n x 2^n matrices are constructed.
pub const MAX_DENSE_QUBITS: usize = 10;
/// Largest qubit count for sparse Pauli-coordinate work.
pub const MAX_PAULI_QUBITS: usize = 12;
/// Coefficients below this magnitude are pruned after every operation.
pub const PRUNE_EPS: f64 = 1e-14;
/// Orbit-spread tolerance used when an operation requires symmetric input.
pub const SYMMETRY_TOL: f64 = 1e-10;

/// A string of Pauli labels, one per qubit, with values in `{0,1,2,3}`
/// (identity, x, y, z).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u8>);

impl MultiIndex {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("multi-index must have length >= 1".into()));
        }
        if entries.len() > MAX_PAULI_QUBITS {
            return Err(Error::Capacity(format!(
                "multi-index length {} exceeds the supported {} qubits",
                entries.len(),
                MAX_PAULI_QUBITS
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e > 3) {
            return Err(Error::InvalidArgument(format!(
                "multi-index entries must lie in 0..=3, got {bad}"
            )));
        }
        Ok(MultiIndex(entries))
    }

    /// The all-identity index on `n` qubits.
    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn index_type(&self) -> IndexType {
        let mut counts = [0usize; 4];
        for &e in &self.0 {
            counts[e as usize] += 1;
        }
        IndexType { counts }
    }

    /// Concatenation, for tensor products of decompositions.
    fn concat(&self, other: &MultiIndex) -> Result<Self> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::new(v)
    }

    /// Copy with slot `k` removed (for the partial trace).
    fn removed(&self, k: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(k);
        MultiIndex(v)
    }

    /// Copy with slot `k` replaced by label `v`.
    pub(crate) fn with_slot(&self, k: usize, v: u8) -> Self {
        let mut entries = self.0.clone();
        entries[k] = v;
        MultiIndex(entries)
    }

    /// Image under a qubit permutation: entry at slot `i` moves to slot `perm[i]`.
    fn permuted(&self, perm: &[usize]) -> Self {
        let mut v = vec![0u8; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            v[perm[i]] = e;
        }
        MultiIndex(v)
    }

    /// Parse from a digit string such as `"03"`.
    pub fn parse(s: &str) -> Result<Self> {
        let entries: Vec<u8> = s
            .chars()
            .map(|c| match c {
                '0'..='3' => Ok(c as u8 - b'0'),
                _ => Err(Error::Parse(format!("invalid Pauli index character '{c}'"))),
            })
            .collect::<Result<_>>()?;
        Self::new(entries)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &e in &self.0 {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// The multiset signature of a [`MultiIndex`]: how many slots carry each of
/// the four Pauli labels. Indices with the same type form one permutation
/// orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexType {
    counts: [usize; 4],
}

impl IndexType {
    pub fn new(n0: usize, n1: usize, n2: usize, n3: usize) -> Self {
        IndexType { counts: [n0, n1, n2, n3] }
    }

    pub fn counts(&self) -> [usize; 4] {
        self.counts
    }

    pub fn n(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Orbit size n!/(n0! n1! n2! n3!), exact in u64 for n <= MAX_PAULI_QUBITS.
    pub fn orbit_size(&self) -> u64 {
        let mut size = 1u64;
        let mut placed = 0usize;
        for &c in &self.counts {
            for j in 1..=c {
                // running product of binomial coefficients, each division exact
                size = size * (placed + j) as u64 / j as u64;
            }
            placed += c;
        }
        size
    }

    /// Canonical orbit representative: labels in nondecreasing order.
    pub fn representative(&self) -> MultiIndex {
        let mut v = Vec::with_capacity(self.n());
        for (label, &c) in self.counts.iter().enumerate() {
            v.extend(std::iter::repeat(label as u8).take(c));
        }
        MultiIndex(v)
    }

    /// All distinct arrangements of the multiset, in lexicographic order.
    pub fn orbit(&self) -> Vec<MultiIndex> {
        let mut cur = self.representative().0;
        let mut out = Vec::with_capacity(self.orbit_size() as usize);
        loop {
            out.push(MultiIndex(cur.clone()));
            if !next_permutation(&mut cur) {
                return out;
            }
        }
    }
}

/// Advance to the next lexicographic permutation; false once exhausted.
fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidArgument(format!(
            "permutation has length {}, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidArgument(format!(
                "permutation {perm:?} is not a bijection on 0..{n}"
            )));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Sparse real expansion of an n-qubit Hermitian operator over the Pauli
/// tensor basis. Zero coefficients are never stored; anything below
/// [`PRUNE_EPS`] in magnitude is pruned by every constructor and operation.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliDecomposition {
    n: usize,
    coeffs: BTreeMap<MultiIndex, f64>,
}

impl PauliDecomposition {
    /// The zero element on `n` qubits.
    pub fn zero(n: usize) -> Result<Self> {
        check_qubit_count(n)?;
        Ok(PauliDecomposition { n, coeffs: BTreeMap::new() })
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, f64)>,
    {
        let mut d = Self::zero(n)?;
        for (idx, c) in terms {
            if idx.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "index {idx} has length {}, expected {n}",
                    idx.len()
                )));
            }
            d.accumulate(idx, c);
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, idx: &MultiIndex) -> f64 {
        self.coeffs.get(idx).copied().unwrap_or(0.0)
    }

    /// Iterate stored terms in lexicographic index order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, f64)> {
        self.coeffs.iter().map(|(i, &c)| (i, c))
    }

    pub(crate) fn accumulate(&mut self, idx: MultiIndex, c: f64) {
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(idx) {
            Entry::Vacant(e) => {
                if c.abs() >= PRUNE_EPS {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                let v = e.get_mut();
                *v += c;
                if v.abs() < PRUNE_EPS {
                    e.remove();
                }
            }
        }
    }

    /// Trace of the represented operator, `2^n * s_{0...0}`.
    pub fn trace(&self) -> f64 {
        let zeros = MultiIndex(vec![0; self.n]);
        self.coefficient(&zeros) * (1u64 << self.n) as f64
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::InvalidArgument(format!(
                "cannot add decompositions on {} and {} qubits",
                self.n, other.n
            )));
        }
        let mut out = self.clone();
        for (idx, c) in other.terms() {
            out.accumulate(idx.clone(), c);
        }
        Ok(out)
    }

    pub fn scaled(&self, alpha: f64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(i, &c)| (i.clone(), c * alpha))
            .filter(|(_, c)| c.abs() >= PRUNE_EPS)
            .collect();
        PauliDecomposition { n: self.n, coeffs }
    }

    /// Maximum absolute coefficient difference, over the union of supports.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst: f64 = 0.0;
        for (idx, c) in self.terms() {
            worst = worst.max((c - other.coefficient(idx)).abs());
        }
        for (idx, c) in other.terms() {
            worst = worst.max((c - self.coefficient(idx)).abs());
        }
        worst
    }

    /// Apply a qubit permutation: the coefficient at index I moves to the
    /// index whose slot `perm[i]` holds the label previously at slot `i`.
    /// Agrees with dense conjugation by the corresponding basis-permutation
    /// matrix.
    pub fn permute_qubits(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|(i, &c)| (i.permuted(perm), c))
            .collect();
        Ok(PauliDecomposition { n: self.n, coeffs })
    }

    /// Project onto the permutation-symmetric subspace by orbit averaging:
    /// every index of an orbit receives the orbit mean. Idempotent, and never
    /// enumerates the n! group elements — only the orbits that are present.
    pub fn symmetrize(&self) -> Self {
        let mut sums: BTreeMap<IndexType, f64> = BTreeMap::new();
        for (idx, c) in self.terms() {
            *sums.entry(idx.index_type()).or_insert(0.0) += c;
        }
        let mut coeffs = BTreeMap::new();
        for (ty, sum) in sums {
            let mean = sum / ty.orbit_size() as f64;
            if mean.abs() < PRUNE_EPS {
                continue;
            }
            for idx in ty.orbit() {
                coeffs.insert(idx, mean);
            }
        }
        PauliDecomposition { n: self.n, coeffs }
    }

    /// Worst orbit spread (max minus min coefficient over any full orbit,
    /// counting absent indices as zero). Zero exactly when symmetric.
    pub fn symmetry_spread(&self) -> f64 {
        #[derive(Clone, Copy)]
        struct Stat {
            min: f64,
            max: f64,
            seen: u64,
        }
        let mut stats: BTreeMap<IndexType, Stat> = BTreeMap::new();
        for (idx, c) in self.terms() {
            let s = stats
                .entry(idx.index_type())
                .or_insert(Stat { min: f64::INFINITY, max: f64::NEG_INFINITY, seen: 0 });
            s.min = s.min.min(c);
            s.max = s.max.max(c);
            s.seen += 1;
        }
        let mut worst: f64 = 0.0;
        for (ty, s) in stats {
            let (mut lo, mut hi) = (s.min, s.max);
            if s.seen < ty.orbit_size() {
                lo = lo.min(0.0);
                hi = hi.max(0.0);
            }
            worst = worst.max(hi - lo);
        }
        worst
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.symmetry_spread() <= tol
    }

    /// Tensor product: coefficients multiply over concatenated indices.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        check_qubit_count(n)?;
        let mut out = PauliDecomposition { n, coeffs: BTreeMap::new() };
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                let c = a * b;
                if c.abs() >= PRUNE_EPS {
                    out.coeffs.insert(i.concat(j)?, c);
                }
            }
        }
        Ok(out)
    }

    /// Partial trace over qubit `k` (0-based): terms whose k-th label is not
    /// the identity vanish; the rest keep their coefficient times 2 with the
    /// k-th slot deleted.
    pub fn partial_trace(&self, k: usize) -> Result<Self> {
        if self.n < 2 {
            return Err(Error::InvalidArgument(
                "partial trace needs at least 2 qubits; the result would be a scalar".into(),
            ));
        }
        if k >= self.n {
            return Err(Error::InvalidArgument(format!(
                "qubit index {k} out of range for {} qubits",
                self.n
            )));
        }
        let mut coeffs = BTreeMap::new();
        for (idx, c) in self.terms() {
            if idx.entries()[k] == 0 {
                coeffs.insert(idx.removed(k), 2.0 * c);
            }
        }
        Ok(PauliDecomposition { n: self.n - 1, coeffs })
    }
}

fn check_qubit_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("qubit count must be >= 1".into()));
    }
    if n > MAX_PAULI_QUBITS {
        return Err(Error::Capacity(format!(
            "{n} qubits exceeds the supported {MAX_PAULI_QUBITS} for Pauli-coordinate work"
        )));
    }
    Ok(())
}

fn check_dense_qubit_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("qubit count must be >= 1".into()));
    }
    if n > MAX_DENSE_QUBITS {
        return Err(Error::Capacity(format!(
            "{n} qubits exceeds the supported {MAX_DENSE_QUBITS} for dense operators"
        )));
    }
    Ok(())
}
