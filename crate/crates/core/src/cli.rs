//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a check or computation fails, 2 on a
//! usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::json::MatrixDoc;
use crate::algebra::{rational, Rational, SymMatrix, SymScalar};
use crate::error::Error;
use crate::heisenberg::{reduce_to_second_order, spin_orbit_decompose, Coupling, Monomial, OperatorPolynomial};
use crate::identities::{run_all, CheckReport};
use crate::spectrum::{compare_spectra, FdConfig, SpectrumComparison, Window};
use crate::spin_models::{build_model, Spin};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "linwave", version, about = "First-order spin wave equations: exact checks, oscillator reduction, spectra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OmegaArg {
    /// ω = 0, the free system
    #[value(name = "0")]
    Zero,
    /// symbolic ω
    Sym,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every exact identity check for one spin
    Verify {
        #[arg(long, value_parser = parse_spin)]
        spin: Spin,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reduce the oscillator-coupled system to its second-order Hamiltonian
    Reduce {
        #[arg(long, value_parser = parse_spin)]
        spin: Spin,
        #[arg(long, value_enum, default_value = "sym")]
        omega: OmegaArg,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exact levels against the finite-difference radial solver
    Spectrum {
        #[arg(long, value_parser = parse_spin)]
        spin: Spin,
        #[arg(long, default_value = "6", value_parser = parse_nonnegative_rational)]
        emax: Rational,
        #[arg(long, default_value_t = 6)]
        lmax: u32,
        #[arg(long = "grid-n", default_value_t = 4000, value_parser = clap::value_parser!(u64).range(10..))]
        grid_n: u64,
        #[arg(long, default_value_t = 12.0, value_parser = parse_positive_f64)]
        radius: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Export model matrices as JSON
    Matrices {
        #[arg(long, value_parser = parse_spin)]
        spin: Spin,
        /// Single field (s1, N2, K3, A, B1, C, eta, A_adj, C_adj, ...); all when omitted
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_spin(s: &str) -> Result<Spin, String> {
    s.parse::<Spin>().map_err(|e| e.to_string())
}

fn parse_nonnegative_rational(s: &str) -> Result<Rational, String> {
    let r = rational::parse(s).map_err(|e| e.to_string())?;
    if r < rational::int(0) {
        return Err(format!("expected a nonnegative value, got {s}"));
    }
    Ok(r)
}

fn parse_positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("expected a positive value, got {s}"))
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let (output, result) = match &cli.command {
        Command::Verify { spin, json, output } => (output, verify(*spin, *json)),
        Command::Reduce { spin, omega, json, output } => (output, reduce(*spin, *omega, *json)),
        Command::Spectrum { spin, emax, lmax, grid_n, radius, format, output } => {
            let cfg = FdConfig { radius: *radius, points: *grid_n as usize, count: 1 };
            (output, spectrum(*spin, emax, *lmax, &cfg, *format))
        }
        Command::Matrices { spin, field, output } => (output, matrices(*spin, field.as_deref())),
    };
    match result {
        Ok(Outcome { text, ok }) => {
            if let Err(e) = emit(output.as_ref(), stdout, &text) {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_FAILED;
            }
            if ok {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Failed(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_FAILED
        }
    }
}

fn emit(path: Option<&PathBuf>, stdout: &mut dyn Write, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => stdout.write_all(text.as_bytes()),
    }
}

struct Outcome {
    text: String,
    ok: bool,
}

enum CliError {
    Usage(String),
    Failed(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Failed(e)
    }
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

fn verify(spin: Spin, as_json: bool) -> Result<Outcome, CliError> {
    let model = build_model(spin);
    let reports = run_all(&model)?;
    let ok = reports.iter().all(|r| r.passed);
    let text = if as_json {
        to_json_line(&json!({ "spin": spin, "all_passed": ok, "checks": reports }))
    } else {
        verify_text(spin, &reports)
    };
    Ok(Outcome { text, ok })
}

fn verify_text(spin: Spin, reports: &[CheckReport]) -> String {
    let mut s = format!("spin {spin}\n");
    for r in reports {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        s.push_str(&format!("  {tag}  {}\n", r.check_name));
        if let Some(w) = &r.witness {
            s.push_str(&format!("        at {}\n", w.location));
            for line in w.difference.to_string().lines() {
                s.push_str(&format!("        {line}\n"));
            }
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    s.push_str(&format!("{passed}/{} checks passed\n", reports.len()));
    s
}

#[derive(Serialize)]
struct TermOut {
    monomial: String,
    x: [u32; 3],
    p: [u32; 3],
    coefficient: MatrixDoc,
}

fn free_hamiltonian(n: usize) -> OperatorPolynomial {
    let inv_two_m = SymScalar::frac(1, 2) * SymScalar::symbols(-1, 0, 0);
    let mut out = OperatorPolynomial::zero(n, n);
    for i in 0..3 {
        let mut m = Monomial::ONE;
        m.p[i] = 2;
        out = &out + &OperatorPolynomial::scalar(m, inv_two_m.clone(), n);
    }
    out
}

fn reduce(spin: Spin, omega: OmegaArg, as_json: bool) -> Result<Outcome, CliError> {
    let model = build_model(spin);
    let coupling = match omega {
        OmegaArg::Zero => Coupling::Free,
        OmegaArg::Sym => Coupling::Standard,
    };
    let h = reduce_to_second_order(&model, coupling)?;
    let (decomposition, free_ok, ok) = match omega {
        OmegaArg::Sym => {
            let d = spin_orbit_decompose(&h, &model)?;
            (Some(d), None, true)
        }
        OmegaArg::Zero => {
            let free = h == free_hamiltonian(model.physical_dim());
            (None, Some(free), free)
        }
    };
    let text = if as_json {
        let terms: Vec<TermOut> = h
            .terms()
            .map(|(m, c)| TermOut { monomial: m.to_string(), x: m.x, p: m.p, coefficient: MatrixDoc::from(c) })
            .collect();
        to_json_line(&json!({
            "spin": spin,
            "omega": if omega == OmegaArg::Zero { "0" } else { "sym" },
            "dimension": model.physical_dim(),
            "terms": terms,
            "decomposition": decomposition,
            "kappa": decomposition.as_ref().map(|d| rational::to_short_string(&d.kappa)),
            "free_particle": free_ok,
        }))
    } else {
        let mut s = format!("spin {spin}, {}\n", match omega {
            OmegaArg::Zero => "ω = 0",
            OmegaArg::Sym => "p → p − imωηr",
        });
        s.push_str("E φ = H φ with H =\n");
        for (m, c) in h.terms() {
            s.push_str(&format!("{m}:\n"));
            for line in c.to_string().lines() {
                s.push_str(&format!("  {line}\n"));
            }
        }
        if let Some(d) = &decomposition {
            s.push_str(&format!(
                "H = p²/2m + ½mω²r² + ({})ħω − ({})(ω/ħ) L·s\n",
                rational::to_short_string(&d.c),
                rational::to_short_string(&d.kappa)
            ));
            s.push_str(&format!("c = {}\nκ = {}\n", rational::to_short_string(&d.c), rational::to_short_string(&d.kappa)));
        }
        if let Some(free) = free_ok {
            s.push_str(&format!("free particle p²/2m: {}\n", if free { "yes" } else { "no" }));
        }
        s
    };
    Ok(Outcome { text, ok })
}

/// κ obtained from the symbolic reduction.
pub fn derived_kappa(spin: Spin) -> crate::error::Result<Rational> {
    let model = build_model(spin);
    let h = reduce_to_second_order(&model, Coupling::Standard)?;
    Ok(spin_orbit_decompose(&h, &model)?.kappa)
}

fn spectrum(spin: Spin, emax: &Rational, lmax: u32, cfg: &FdConfig, format: TableFormat) -> Result<Outcome, CliError> {
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let kappa = derived_kappa(spin)?;
    let window = Window::Energy { e_max: emax.clone(), l_max: lmax };
    let cmp = compare_spectra(spin, &kappa, &window, cfg)?;
    let text = match format {
        TableFormat::Json => to_json_line(&cmp),
        TableFormat::Csv => spectrum_csv(&cmp),
    };
    Ok(Outcome { text, ok: true })
}

pub fn spectrum_csv(cmp: &SpectrumComparison) -> String {
    let mut s = String::from("spin,n_r,l,j,E_analytic,E_numeric,deviation,degeneracy\n");
    for row in &cmp.levels {
        let lv = &row.level;
        s.push_str(&format!(
            "{},{},{},{},{},{:.10},{:.3e},{}\n",
            cmp.spin,
            lv.n_r,
            lv.l,
            lv.j_label(),
            rational::to_short_string(&lv.energy),
            row.numeric,
            row.deviation,
            lv.degeneracy
        ));
    }
    s
}

fn matrices(spin: Spin, field: Option<&str>) -> Result<Outcome, CliError> {
    let model = build_model(spin);
    let named = model.named_matrices();
    let text = match field {
        Some(name) => {
            let m: &SymMatrix = named
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, m)| m)
                .ok_or_else(|| {
                    let known: Vec<&str> = named.iter().map(|(n, _)| n.as_str()).collect();
                    CliError::Usage(format!("unknown field `{name}` for spin {spin}; known: {}", known.join(", ")))
                })?;
            let mut s = crate::algebra::json::to_json(m);
            s.push('\n');
            s
        }
        None => {
            let mut fields = serde_json::Map::new();
            for (name, m) in &named {
                fields.insert(name.clone(), serde_json::to_value(MatrixDoc::from(m)).expect("matrix document"));
            }
            let mut s = serde_json::to_string(&json!({ "spin": spin, "fields": fields })).expect("matrix export");
            s.push('\n');
            s
        }
    };
    Ok(Outcome { text, ok: true })
}
