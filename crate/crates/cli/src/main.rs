//! Command-line front end: polynomial display, Werner testing, reduction,
//! spectra, state construction, and positivity scans.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 negative analytic
//! result (e.g. the state is not Werner).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use wernerpoly::pauli::{
    read_pauli_file, to_pauli_string, HermitianOperator, PauliDecomposition,
};
use wernerpoly::poly::{symmetric_to_poly, TriPolynomial};
use wernerpoly::render::format_f64;
use wernerpoly::states::{uniform_dicke_mixture, StateSpec};
use wernerpoly::werner::{
    is_werner, positivity_scan_2q, spectrum, DEFAULT_SEED, DEFAULT_WERNER_SAMPLES,
    DEFAULT_WERNER_TOL,
};

#[derive(Parser)]
#[command(
    name = "wernerpoly",
    version,
    about = "Symmetric multiqubit states as polynomials in x, y, z",
    after_help = "STATE specifications: basis0 basis1 plus mixed dicke:<k> uniform-dicke ghz w \
                  singlet bell-phi-minus bell-phi-plus bell-psi-plus werner-a:<a> \
                  werner-b:<b0,b1,...>, or a path to a .pauli file. Qubit indices on the command \
                  line are 1-based."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct StateArgs {
    /// State name or path to a .pauli file
    #[arg(long)]
    state: Option<String>,
    /// Qubit count, for names that need one
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the polynomial of a symmetric state
    Poly {
        #[command(flatten)]
        state: StateArgs,
        /// Print the built-in table of example states instead
        #[arg(long)]
        table: bool,
        /// Also write the output to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test whether a symmetric state is a Werner state
    WernerTest {
        #[command(flatten)]
        state: StateArgs,
        /// Tolerance for both residuals
        #[arg(long, default_value_t = DEFAULT_WERNER_TOL)]
        tol: f64,
        /// Number of Haar-random rotations to sample
        #[arg(long, default_value_t = DEFAULT_WERNER_SAMPLES)]
        samples: usize,
        /// RNG seed for the invariance test
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Trace out one qubit and emit the reduced state as .pauli text
    Reduce {
        #[command(flatten)]
        state: StateArgs,
        /// Qubit to trace out (1-based)
        #[arg(long = "trace-out")]
        trace_out: usize,
        /// Write to this path instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the eigenvalues of a state, ascending
    Spectrum {
        #[command(flatten)]
        state: StateArgs,
    },
    /// Scan the two-qubit family rho(a) over [-2, 2] for positivity
    Scan {
        /// Qubit count (only 2 is supported)
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Number of grid points
        #[arg(long, default_value_t = 4001)]
        grid: usize,
    },
    /// Write a state to a .pauli file
    Make {
        #[command(flatten)]
        state: StateArgs,
        /// Output path
        #[arg(long)]
        out: PathBuf,
    },
}

enum CliError {
    Usage(String),
    Input(String),
}

impl From<wernerpoly::Error> for CliError {
    fn from(e: wernerpoly::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Poly { state, table, out } => cmd_poly(state, table, out),
        Command::WernerTest { state, tol, samples, seed } => {
            cmd_werner_test(state, tol, samples, seed)
        }
        Command::Reduce { state, trace_out, out } => cmd_reduce(state, trace_out, out),
        Command::Spectrum { state } => cmd_spectrum(state),
        Command::Scan { n, grid } => cmd_scan(n, grid),
        Command::Make { state, out } => cmd_make(state, out),
    }
}

/// A state argument resolves either to a named constructor or a file.
enum StateInput {
    Spec(StateSpec),
    File(PathBuf),
}

fn parse_state_input(raw: &str) -> Result<StateInput, CliError> {
    if raw.ends_with(".pauli") || raw.contains('/') {
        return Ok(StateInput::File(PathBuf::from(raw)));
    }
    match raw.parse::<StateSpec>() {
        Ok(spec) => Ok(StateInput::Spec(spec)),
        Err(e) => Err(CliError::Input(format!("cannot interpret state '{raw}': {e}"))),
    }
}

fn require_state(args: &StateArgs) -> Result<StateInput, CliError> {
    match &args.state {
        Some(raw) => parse_state_input(raw),
        None => Err(CliError::Usage("--state is required".into())),
    }
}

fn load_decomposition(args: &StateArgs) -> Result<PauliDecomposition, CliError> {
    match require_state(args)? {
        StateInput::Spec(spec) => Ok(spec.build(args.n)?.decompose()?),
        StateInput::File(path) => {
            let d = read_pauli_file(&path)?;
            if let Some(n) = args.n {
                if n != d.n() {
                    return Err(CliError::Input(format!(
                        "--n {n} conflicts with the {} qubits declared in {}",
                        d.n(),
                        path.display()
                    )));
                }
            }
            Ok(d)
        }
    }
}

fn load_operator(args: &StateArgs) -> Result<HermitianOperator, CliError> {
    match require_state(args)? {
        StateInput::Spec(spec) => Ok(spec.build(args.n)?),
        StateInput::File(path) => {
            let d = read_pauli_file(&path)?;
            if let Some(n) = args.n {
                if n != d.n() {
                    return Err(CliError::Input(format!(
                        "--n {n} conflicts with the {} qubits declared in {}",
                        d.n(),
                        path.display()
                    )));
                }
            }
            Ok(d.reconstruct()?)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_poly(state: StateArgs, table: bool, out: Option<PathBuf>) -> Result<u8, CliError> {
    if table {
        if state.state.is_some() {
            return Err(CliError::Usage("--table and --state are mutually exclusive".into()));
        }
        let text = render_table()?;
        emit(&text, out.as_deref())?;
        return Ok(0);
    }
    let d = load_decomposition(&state)?;
    let poly = symmetric_to_poly(&d, true)?;
    emit(&format!("{poly}\n"), out.as_deref())?;
    Ok(0)
}

/// The example states with their polynomials, reproduced at runtime.
fn table_rows() -> Result<Vec<(String, usize, TriPolynomial)>, CliError> {
    let build = |spec: StateSpec, n: usize| -> Result<TriPolynomial, CliError> {
        Ok(symmetric_to_poly(&spec.build(Some(n))?.decompose()?, true)?)
    };
    let of_operator = |h: &HermitianOperator| -> Result<TriPolynomial, CliError> {
        Ok(symmetric_to_poly(&h.decompose()?, true)?)
    };

    let basis0_2 = StateSpec::Basis0.build(Some(2))?;
    let basis1_2 = StateSpec::Basis1.build(Some(2))?;
    let zeros_ones = basis0_2.scaled(0.5).add(&basis1_2.scaled(0.5))?;
    let up = StateSpec::Basis0.build(Some(1))?;
    let mixed1 = StateSpec::Mixed.build(Some(1))?;
    let half_up = up.tensor(&mixed1)?.scaled(0.5).add(&mixed1.tensor(&up)?.scaled(0.5))?;

    Ok(vec![
        ("basis0".into(), 1, build(StateSpec::Basis0, 1)?),
        ("basis1".into(), 1, build(StateSpec::Basis1, 1)?),
        ("plus".into(), 1, build(StateSpec::Plus, 1)?),
        ("mixed".into(), 1, build(StateSpec::Mixed, 1)?),
        ("basis0".into(), 2, build(StateSpec::Basis0, 2)?),
        ("mixed".into(), 2, build(StateSpec::Mixed, 2)?),
        ("mix of |00>, |11>".into(), 2, of_operator(&zeros_ones)?),
        ("mix of |0>x(I/2), (I/2)x|0>".into(), 2, of_operator(&half_up)?),
        ("singlet".into(), 2, build(StateSpec::Singlet, 2)?),
        ("bell-phi-minus".into(), 2, build(StateSpec::BellPhiMinus, 2)?),
        ("bell-phi-plus".into(), 2, build(StateSpec::BellPhiPlus, 2)?),
        ("bell-psi-plus".into(), 2, build(StateSpec::BellPsiPlus, 2)?),
        ("uniform-dicke".into(), 2, build(StateSpec::UniformDicke, 2)?),
        ("basis0".into(), 3, build(StateSpec::Basis0, 3)?),
        ("ghz".into(), 3, build(StateSpec::Ghz, 3)?),
        ("w".into(), 3, build(StateSpec::W, 3)?),
        ("uniform-dicke".into(), 3, build(StateSpec::UniformDicke, 3)?),
        ("uniform-dicke".into(), 4, of_operator(&uniform_dicke_mixture(4)?)?),
    ])
}

fn render_table() -> Result<String, CliError> {
    let rows = table_rows()?;
    let width = rows.iter().map(|(name, _, _)| name.len()).max().unwrap_or(0);
    let mut text = String::new();
    for (name, n, poly) in rows {
        text.push_str(&format!("{name:<width$}  {n}  {poly}\n"));
    }
    Ok(text)
}

fn cmd_werner_test(state: StateArgs, tol: f64, samples: usize, seed: u64) -> Result<u8, CliError> {
    let d = load_decomposition(&state)?;
    let report = is_werner(&d, tol, samples, seed)?;
    print!("{}", report.to_text());
    Ok(if report.is_werner { 0 } else { 3 })
}

fn cmd_reduce(state: StateArgs, trace_out: usize, out: Option<PathBuf>) -> Result<u8, CliError> {
    let d = load_decomposition(&state)?;
    if trace_out == 0 || trace_out > d.n() {
        return Err(CliError::Input(format!(
            "--trace-out {trace_out} out of range 1..={}",
            d.n()
        )));
    }
    let reduced = d.partial_trace(trace_out - 1)?;
    emit(&to_pauli_string(&reduced), out.as_deref())?;
    Ok(0)
}

fn cmd_spectrum(state: StateArgs) -> Result<u8, CliError> {
    let h = load_operator(&state)?;
    let values = spectrum(&h)?;
    println!("{}", render_spectrum(&values));
    Ok(0)
}

/// Eigenvalues ascending, with equal values (within 1e-9) grouped as
/// `value (xk)`.
fn render_spectrum(values: &[f64]) -> String {
    let mut groups: Vec<(f64, usize)> = Vec::new();
    for &v in values {
        match groups.last_mut() {
            Some((rep, count)) if (v - *rep).abs() <= 1e-9 => *count += 1,
            _ => groups.push((v, 1)),
        }
    }
    groups
        .into_iter()
        .map(|(v, count)| {
            // snap display noise on repeated eigenvalues to the group head
            let rendered = format_f64(if v.abs() < 5e-13 { 0.0 } else { v });
            if count > 1 {
                format!("{rendered} (\u{00d7}{count})")
            } else {
                rendered
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn cmd_scan(n: usize, grid: usize) -> Result<u8, CliError> {
    if n != 2 {
        return Err(CliError::Input(format!(
            "only the two-qubit family rho(a) is supported, got --n {n}"
        )));
    }
    let result = positivity_scan_2q(grid)?;
    if result.step > 0.1 {
        eprintln!(
            "warning: grid step {} is coarse; endpoints are only resolved to that step",
            format_f64(result.step)
        );
    }
    match result.interval {
        Some((lo, hi)) => {
            let decimals = (-result.step.log10()).ceil().max(0.0) as usize;
            println!("feasible a in [{lo:.decimals$}, {hi:.decimals$}]");
            Ok(0)
        }
        None => {
            println!("no feasible points at this grid resolution");
            Ok(3)
        }
    }
}

fn cmd_make(state: StateArgs, out: PathBuf) -> Result<u8, CliError> {
    let d = load_decomposition(&state)?;
    let text = to_pauli_string(&d);
    std::fs::write(&out, &text)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", out.display())))?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use wernerpoly::pauli::from_pauli_str;

    #[test]
    fn spectrum_rendering_groups_repeats() {
        assert_eq!(render_spectrum(&[0.25, 0.25, 0.25, 0.25]), "0.25 (\u{00d7}4)");
        assert_eq!(render_spectrum(&[0.0, 0.0, 0.0, 1.0]), "0 (\u{00d7}3), 1");
        assert_eq!(render_spectrum(&[0.1, 0.3, 0.3, 0.3]), "0.1, 0.3 (\u{00d7}3)");
    }

    #[test]
    fn state_inputs_with_paths_are_detected() {
        assert!(matches!(parse_state_input("out/state.pauli"), Ok(StateInput::File(_))));
        assert!(matches!(parse_state_input("singlet"), Ok(StateInput::Spec(_))));
        assert!(parse_state_input("nonsense").is_err());
    }

    #[test]
    fn the_pauli_text_round_trips_through_parse() {
        let d = StateSpec::Singlet.build(None).unwrap().decompose().unwrap();
        let text = to_pauli_string(&d);
        let back = from_pauli_str(&text).unwrap();
        assert!(d.max_abs_diff(&back) < 1e-12);
    }
}
