//! Constructors for the named symmetric states, the two-qubit family
//! `rho(a)`, and general symmetric Werner states from radial coefficients.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{sigma_tensor, HermitianOperator, MultiIndex};
use crate::poly::{poly_to_symmetric, TriPolynomial};

/// Radial coefficients `(b_0, ..., b_{n/2})` of a symmetric Werner state's
/// polynomial `sum_m b_m (x^2+y^2+z^2)^m`. This vector is the complete
/// local-unitary invariant for symmetric Werner states; `b_0 = 1` exactly
/// when the state has unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct WernerCoefficients {
    n: usize,
    b: Vec<f64>,
}

impl WernerCoefficients {
    pub fn new(n: usize, b: Vec<f64>) -> Result<Self> {
        let expect = n / 2 + 1;
        if b.len() != expect {
            return Err(Error::InvalidArgument(format!(
                "{n} qubits need {expect} radial coefficients, got {}",
                b.len()
            )));
        }
        Ok(WernerCoefficients { n, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.b
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.b
            .iter()
            .zip(&other.b)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// The radial polynomial these coefficients describe.
    pub fn polynomial(&self) -> TriPolynomial {
        TriPolynomial::radial(self.n, &self.b).expect("length checked at construction")
    }
}

impl fmt::Display for WernerCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.b.iter().map(|&v| crate::render::format_f64(v)).collect();
        write!(f, "{}", rendered.join(", "))
    }
}

/// A parsed state specification, matching the CLI naming scheme.
#[derive(Clone, Debug, PartialEq)]
pub enum StateSpec {
    Basis0,
    Basis1,
    Plus,
    Mixed,
    Dicke(usize),
    UniformDicke,
    Ghz,
    W,
    Singlet,
    BellPhiMinus,
    BellPhiPlus,
    BellPsiPlus,
    WernerA(f64),
    WernerB(Vec<f64>),
}

impl FromStr for StateSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basis0" => return Ok(StateSpec::Basis0),
            "basis1" => return Ok(StateSpec::Basis1),
            "plus" => return Ok(StateSpec::Plus),
            "mixed" => return Ok(StateSpec::Mixed),
            "uniform-dicke" => return Ok(StateSpec::UniformDicke),
            "ghz" => return Ok(StateSpec::Ghz),
            "w" => return Ok(StateSpec::W),
            "singlet" => return Ok(StateSpec::Singlet),
            "bell-phi-minus" => return Ok(StateSpec::BellPhiMinus),
            "bell-phi-plus" => return Ok(StateSpec::BellPhiPlus),
            "bell-psi-plus" => return Ok(StateSpec::BellPsiPlus),
            _ => {}
        }
        if let Some(arg) = s.strip_prefix("dicke:") {
            let k = arg
                .parse()
                .map_err(|_| Error::Parse(format!("invalid excitation count '{arg}'")))?;
            return Ok(StateSpec::Dicke(k));
        }
        if let Some(arg) = s.strip_prefix("werner-a:") {
            let a = arg
                .parse()
                .map_err(|_| Error::Parse(format!("invalid Werner parameter '{arg}'")))?;
            return Ok(StateSpec::WernerA(a));
        }
        if let Some(arg) = s.strip_prefix("werner-b:") {
            let b: Vec<f64> = arg
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("invalid radial coefficient '{v}'")))
                })
                .collect::<Result<_>>()?;
            if b.is_empty() {
                return Err(Error::Parse("werner-b needs at least one coefficient".into()));
            }
            return Ok(StateSpec::WernerB(b));
        }
        Err(Error::Parse(format!("unknown state name '{s}'")))
    }
}

impl StateSpec {
    /// Qubit count assumed when the caller does not supply one; `None` means
    /// the name requires an explicit count.
    pub fn default_qubits(&self) -> Option<usize> {
        match self {
            StateSpec::Basis0 | StateSpec::Basis1 | StateSpec::Plus | StateSpec::Mixed => Some(1),
            StateSpec::Ghz | StateSpec::W => Some(3),
            StateSpec::Singlet
            | StateSpec::BellPhiMinus
            | StateSpec::BellPhiPlus
            | StateSpec::BellPsiPlus
            | StateSpec::WernerA(_) => Some(2),
            StateSpec::Dicke(_) | StateSpec::UniformDicke | StateSpec::WernerB(_) => None,
        }
    }

    /// Build the density matrix, using `n` qubits when given.
    pub fn build(&self, n: Option<usize>) -> Result<HermitianOperator> {
        let n = match n.or_else(|| self.default_qubits()) {
            Some(n) => n,
            None => {
                return Err(Error::InvalidArgument(format!(
                    "state '{self:?}' needs an explicit qubit count"
                )))
            }
        };
        match self {
            StateSpec::Basis0 => basis_state(n, 0),
            StateSpec::Basis1 => basis_state(n, usize::MAX),
            StateSpec::Plus => plus_state(n),
            StateSpec::Mixed => mixed_state(n),
            StateSpec::Dicke(k) => dicke_state(n, *k),
            StateSpec::UniformDicke => uniform_dicke_mixture(n),
            StateSpec::Ghz => ghz_state(n),
            StateSpec::W => w_state(n),
            StateSpec::Singlet => fixed_two_qubits(n, "singlet").and_then(|_| singlet_state()),
            StateSpec::BellPhiMinus => fixed_two_qubits(n, "bell-phi-minus").and_then(|_| bell_state(1.0, -1.0)),
            StateSpec::BellPhiPlus => fixed_two_qubits(n, "bell-phi-plus").and_then(|_| bell_state(1.0, 1.0)),
            StateSpec::BellPsiPlus => fixed_two_qubits(n, "bell-psi-plus").and_then(|_| psi_plus_state()),
            StateSpec::WernerA(a) => fixed_two_qubits(n, "werner-a").and_then(|_| werner_rho_a(*a)),
            StateSpec::WernerB(b) => {
                let coeffs = WernerCoefficients::new(n, b.clone())?;
                werner_from_b(&coeffs)
            }
        }
    }
}

fn fixed_two_qubits(n: usize, name: &str) -> Result<()> {
    if n != 2 {
        return Err(Error::InvalidArgument(format!("state '{name}' is defined on 2 qubits, not {n}")));
    }
    Ok(())
}

fn real_ket(dim: usize, entries: &[(usize, f64)]) -> Vec<Complex64> {
    let mut ket = vec![Complex64::new(0.0, 0.0); dim];
    for &(i, v) in entries {
        ket[i] = Complex64::new(v, 0.0);
    }
    ket
}

/// `|0...0><0...0|` for label 0, `|1...1><1...1|` for label `usize::MAX`.
fn basis_state(n: usize, which: usize) -> Result<HermitianOperator> {
    let dim = 1usize << n;
    let pos = if which == 0 { 0 } else { dim - 1 };
    HermitianOperator::from_ket(n, &real_ket(dim, &[(pos, 1.0)]))
}

fn plus_state(n: usize) -> Result<HermitianOperator> {
    let dim = 1usize << n;
    let amp = 1.0 / (dim as f64).sqrt();
    let ket: Vec<Complex64> = (0..dim).map(|_| Complex64::new(amp, 0.0)).collect();
    HermitianOperator::from_ket(n, &ket)
}

fn mixed_state(n: usize) -> Result<HermitianOperator> {
    Ok(HermitianOperator::identity(n)?.scaled(1.0 / (1u64 << n) as f64))
}

/// The Dicke state `|D^n_k>`: normalized equal superposition of all
/// computational kets of Hamming weight `k`.
pub fn dicke_state(n: usize, k: usize) -> Result<HermitianOperator> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "Dicke excitation count {k} exceeds qubit count {n}"
        )));
    }
    let dim = 1usize << n;
    let kets: Vec<usize> = (0..dim).filter(|v| v.count_ones() as usize == k).collect();
    let amp = 1.0 / (kets.len() as f64).sqrt();
    let entries: Vec<(usize, f64)> = kets.into_iter().map(|i| (i, amp)).collect();
    HermitianOperator::from_ket(n, &real_ket(dim, &entries))
}

/// The uniform Dicke mixture `(1/(n+1)) sum_k |D^n_k><D^n_k|`.
pub fn uniform_dicke_mixture(n: usize) -> Result<HermitianOperator> {
    let weight = 1.0 / (n + 1) as f64;
    let mut acc = dicke_state(n, 0)?.scaled(weight);
    for k in 1..=n {
        acc = acc.add(&dicke_state(n, k)?.scaled(weight))?;
    }
    Ok(acc)
}

pub fn ghz_state(n: usize) -> Result<HermitianOperator> {
    if n < 2 {
        return Err(Error::InvalidArgument("GHZ needs at least 2 qubits".into()));
    }
    let dim = 1usize << n;
    let amp = std::f64::consts::FRAC_1_SQRT_2;
    HermitianOperator::from_ket(n, &real_ket(dim, &[(0, amp), (dim - 1, amp)]))
}

pub fn w_state(n: usize) -> Result<HermitianOperator> {
    if n < 2 {
        return Err(Error::InvalidArgument("W needs at least 2 qubits".into()));
    }
    dicke_state(n, 1)
}

pub fn singlet_state() -> Result<HermitianOperator> {
    let amp = std::f64::consts::FRAC_1_SQRT_2;
    HermitianOperator::from_ket(2, &real_ket(4, &[(0b01, amp), (0b10, -amp)]))
}

/// `(|00> + s |11>)/sqrt(2)` for the phi-type Bell states.
fn bell_state(c00: f64, c11: f64) -> Result<HermitianOperator> {
    let amp = std::f64::consts::FRAC_1_SQRT_2;
    HermitianOperator::from_ket(2, &real_ket(4, &[(0b00, c00 * amp), (0b11, c11 * amp)]))
}

fn psi_plus_state() -> Result<HermitianOperator> {
    let amp = std::f64::consts::FRAC_1_SQRT_2;
    HermitianOperator::from_ket(2, &real_ket(4, &[(0b01, amp), (0b10, amp)]))
}

/// The two-qubit Werner family
/// `rho(a) = Id/4 + (a/4)(sigma_x x sigma_x + sigma_y x sigma_y + sigma_z x sigma_z)`,
/// whose polynomial is `1 + a (x^2 + y^2 + z^2)`. Positive semidefinite
/// exactly for `-1 <= a <= 1/3`.
pub fn werner_rho_a(a: f64) -> Result<HermitianOperator> {
    let mut acc = HermitianOperator::identity(2)?.scaled(0.25);
    for pair in ["11", "22", "33"] {
        let term = sigma_tensor(&MultiIndex::parse(pair)?)?.scaled(a / 4.0);
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// The symmetric operator whose polynomial is `sum_m b_m (x^2+y^2+z^2)^m`.
/// Unit trace requires `b_0 = 1`; positivity is not guaranteed and must be
/// checked by the caller.
pub fn werner_from_b(b: &WernerCoefficients) -> Result<HermitianOperator> {
    if (b.values()[0] - 1.0).abs() > 1e-12 {
        return Err(Error::Normalization(format!(
            "b_0 must be 1 for a unit-trace state, got {}",
            b.values()[0]
        )));
    }
    poly_to_symmetric(&b.polynomial())?.reconstruct()
}
