//! Oscillator spectra with spin-orbit coupling: the exact level formula and
//! a finite-difference radial solver to check it against.
//!
//! All numbers here are in natural units `ħ = m = ω = 1`; energies are in
//! units of `ħω`. For a reduced Hamiltonian
//! `p²/2m + ½mω²r² − (3/2)ħω − κ(ω/ħ) L·s`, each `(l, j)` channel is an
//! ordinary radial oscillator shifted by `−3/2 − κλ(j, l, s)`.

mod tridiag;

use std::collections::BTreeMap;

use serde::Serialize;

pub use tridiag::{gershgorin_bounds, lowest_eigenvalues, sturm_count};

use crate::algebra::{rational, Rational};
use crate::error::{Error, Result};
use crate::spin_models::Spin;

fn half_int(twice: u32) -> String {
    if twice.is_multiple_of(2) {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

/// `λ = ½[j(j+1) − l(l+1) − s(s+1)]`, the `L·s` eigenvalue in units of ħ².
pub fn ls_eigenvalue(twice_j: u32, l: u32, twice_s: u32) -> Result<Rational> {
    let twice_l = 2 * l;
    let valid = twice_j + twice_l >= twice_s
        && twice_j + twice_s >= twice_l
        && twice_j <= twice_l + twice_s
        && (twice_j + twice_l + twice_s).is_multiple_of(2);
    if !valid {
        return Err(Error::InvalidCoupling { j: half_int(twice_j), l, s: half_int(twice_s) });
    }
    // with J = 2j, S = 2s: λ = [J(J+2) − 4l(l+1) − S(S+2)] / 8
    let (j, s, l) = (i64::from(twice_j), i64::from(twice_s), i64::from(l));
    Ok(rational::frac(j * (j + 2) - 4 * l * (l + 1) - s * (s + 2), 8))
}

/// `2j` for `j = |l − s|, …, l + s`.
pub fn allowed_twice_j(l: u32, twice_s: u32) -> impl Iterator<Item = u32> {
    let twice_l = 2 * l;
    let lo = twice_l.abs_diff(twice_s);
    (lo..=twice_l + twice_s).step_by(2)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub n_r: u32,
    pub l: u32,
    pub twice_j: u32,
    /// In units of ħω.
    pub energy: Rational,
    pub degeneracy: u32,
}

impl Level {
    pub fn j_label(&self) -> String {
        half_int(self.twice_j)
    }

    /// Oscillator quanta `2n_r + l`.
    pub fn quanta(&self) -> u32 {
        2 * self.n_r + self.l
    }
}

impl Serialize for Level {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Level", 5)?;
        st.serialize_field("n_r", &self.n_r)?;
        st.serialize_field("l", &self.l)?;
        st.serialize_field("j", &self.j_label())?;
        st.serialize_field("energy", &rational::to_short_string(&self.energy))?;
        st.serialize_field("degeneracy", &self.degeneracy)?;
        st.end()
    }
}

/// Which levels to enumerate.
#[derive(Debug, Clone, PartialEq)]
pub enum Window {
    /// `E ≤ e_max` and `l ≤ l_max`.
    Energy { e_max: Rational, l_max: u32 },
    /// `2n_r + l ≤ max_quanta` and `l ≤ l_max`.
    Shell { max_quanta: u32, l_max: u32 },
}

impl Window {
    fn l_max(&self) -> u32 {
        match self {
            Window::Energy { l_max, .. } | Window::Shell { l_max, .. } => *l_max,
        }
    }
}

fn level(n_r: u32, l: u32, twice_j: u32, shift: &Rational) -> Level {
    Level {
        n_r,
        l,
        twice_j,
        energy: rational::int(i64::from(2 * n_r + l)) + shift,
        degeneracy: twice_j + 1,
    }
}

/// `E = 2n_r + l − κλ(j, l, s)` over the window, sorted by `(n_r, l, j)`.
pub fn levels(spin: Spin, kappa: &Rational, window: &Window) -> Vec<Level> {
    let twice_s = spin.twice();
    let mut out = Vec::new();
    for l in 0..=window.l_max() {
        for twice_j in allowed_twice_j(l, twice_s) {
            let lambda = ls_eigenvalue(twice_j, l, twice_s).expect("allowed coupling");
            let shift = -(kappa * &lambda);
            for n_r in 0.. {
                let lv = level(n_r, l, twice_j, &shift);
                let inside = match window {
                    Window::Energy { e_max, .. } => lv.energy <= *e_max,
                    Window::Shell { max_quanta, .. } => lv.quanta() <= *max_quanta,
                };
                if !inside {
                    break;
                }
                out.push(lv);
            }
        }
    }
    out.sort_by_key(|lv| (lv.n_r, lv.l, lv.twice_j));
    out
}

pub fn analytic_spectrum(spin: Spin, kappa: &Rational, e_max: &Rational, l_max: u32) -> Vec<Level> {
    levels(spin, kappa, &Window::Energy { e_max: e_max.clone(), l_max })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FdConfig {
    /// Box radius in oscillator lengths.
    pub radius: f64,
    /// Interior grid points.
    pub points: usize,
    /// Eigenvalues requested per channel.
    pub count: usize,
}

impl Default for FdConfig {
    fn default() -> Self {
        Self { radius: 12.0, points: 4000, count: 5 }
    }
}

impl FdConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return Err(Error::InvalidConfig(format!("radius must be positive, got {}", self.radius)));
        }
        if self.points < 10 {
            return Err(Error::InvalidConfig(format!("need at least 10 grid points, got {}", self.points)));
        }
        if self.count < 1 {
            return Err(Error::InvalidConfig("at least one eigenvalue must be requested".into()));
        }
        if self.count > self.points {
            return Err(Error::InvalidConfig(format!("{} eigenvalues from {} points", self.count, self.points)));
        }
        Ok(())
    }
}

/// Lowest eigenvalues of `−½u″ + [l(l+1)/2r² + r²/2]u = εu` on `(0, R)` with
/// `u(0) = u(R) = 0`, each reported as `ε + shift`.
pub fn fd_radial_solve(l: u32, shift: f64, cfg: &FdConfig) -> Result<Vec<f64>> {
    cfg.validate()?;
    let n = cfg.points;
    let h = cfg.radius / (n as f64 + 1.0);
    let kinetic = 1.0 / (h * h);
    let centrifugal = f64::from(l * (l + 1)) / 2.0;
    let diag: Vec<f64> = (1..=n)
        .map(|k| {
            let r = k as f64 * h;
            kinetic + centrifugal / (r * r) + 0.5 * r * r
        })
        .collect();
    let off = vec![-0.5 * kinetic; n - 1];
    let vals = lowest_eigenvalues(&diag, &off, cfg.count)?;
    Ok(vals.into_iter().map(|e| e + shift).collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparedLevel {
    #[serde(flatten)]
    pub level: Level,
    pub numeric: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumComparison {
    pub spin: Spin,
    #[serde(serialize_with = "serialize_rational")]
    pub kappa: Rational,
    pub max_abs_dev: f64,
    pub levels: Vec<ComparedLevel>,
}

fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational::to_short_string(r))
}

/// Solves every radial channel in the window and matches the numerical
/// levels against the exact formula.
pub fn compare_spectra(spin: Spin, kappa: &Rational, window: &Window, cfg: &FdConfig) -> Result<SpectrumComparison> {
    cfg.validate()?;
    let exact = levels(spin, kappa, window);
    // the radial problem depends on l only; j enters through the shift
    let mut needed: BTreeMap<u32, usize> = BTreeMap::new();
    for lv in &exact {
        let slot = needed.entry(lv.l).or_default();
        *slot = (*slot).max(lv.n_r as usize + 1);
    }
    let solved: Vec<(u32, Result<Vec<f64>>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = needed
            .iter()
            .map(|(&l, &count)| {
                let channel_cfg = FdConfig { count: count.max(1).min(cfg.points), ..cfg.clone() };
                scope.spawn(move || (l, fd_radial_solve(l, -1.5, &channel_cfg)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("channel solver panicked")).collect()
    });
    let mut radial = BTreeMap::new();
    for (l, vals) in solved {
        let vals = vals?;
        let want = needed[&l];
        if vals.len() < want {
            return Err(Error::UnmatchedLevels { l, found: vals.len(), needed: want });
        }
        radial.insert(l, vals);
    }

    let twice_s = spin.twice();
    let mut out = Vec::with_capacity(exact.len());
    let mut max_abs_dev: f64 = 0.0;
    for lv in exact {
        let lambda = ls_eigenvalue(lv.twice_j, lv.l, twice_s)?;
        let so = -rational::to_f64(&(kappa * &lambda));
        let numeric = radial[&lv.l][lv.n_r as usize] + so;
        let deviation = numeric - rational::to_f64(&lv.energy);
        max_abs_dev = max_abs_dev.max(deviation.abs());
        out.push(ComparedLevel { level: lv, numeric, deviation });
    }
    Ok(SpectrumComparison { spin, kappa: kappa.clone(), max_abs_dev, levels: out })
}
