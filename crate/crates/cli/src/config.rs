//! TOML run configuration. Every key is optional; `--print-config` shows the
//! fully defaulted form.

use anharmonic_core::oracles::{SeriesTruncation, MIN_SAMPLES};
use anharmonic_core::quantum::{CutoffConvention, EnergyDensityOptions, PerturbationMode};
use anharmonic_core::{OscillatorParams, UnitSystem};
use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Temperatures, in the units of `unit_system`.
    pub thermal_grid: Vec<f64>,
    pub unit_system: UnitsConfig,
    pub oscillator: OscillatorConfig,
    pub options: Options,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            thermal_grid: vec![1.0],
            unit_system: UnitsConfig::default(),
            oscillator: OscillatorConfig::default(),
            options: Options::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct UnitsConfig {
    pub hbar: f64,
    pub c: f64,
    pub k_b: f64,
}

impl Default for UnitsConfig {
    fn default() -> Self {
        let u = UnitSystem::NATURAL;
        UnitsConfig { hbar: u.hbar, c: u.c, k_b: u.k_b }
    }
}

impl From<UnitsConfig> for UnitSystem {
    fn from(u: UnitsConfig) -> Self {
        UnitSystem { hbar: u.hbar, c: u.c, k_b: u.k_b }
    }
}

/// Defaults put the reduced couplings at `a_A = -a_B / 3` for `T = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OscillatorConfig {
    pub mass: f64,
    pub omega: f64,
    pub quartic: f64,
    pub cubic: f64,
    pub amplitude: f64,
}

impl Default for OscillatorConfig {
    fn default() -> Self {
        OscillatorConfig {
            mass: 1.0,
            omega: 1.0,
            quartic: 1e-3,
            cubic: 0.004f64.sqrt(),
            amplitude: 2.0,
        }
    }
}

impl From<OscillatorConfig> for OscillatorParams {
    fn from(o: OscillatorConfig) -> Self {
        OscillatorParams {
            mass: o.mass,
            omega: o.omega,
            quartic: o.quartic,
            cubic: o.cubic,
            amplitude: o.amplitude,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TruncationBox {
    pub n_max: usize,
    pub i_max: usize,
    pub j_max: usize,
}

impl Default for TruncationBox {
    fn default() -> Self {
        TruncationBox { n_max: 50, i_max: 3, j_max: 3 }
    }
}

impl From<TruncationBox> for SeriesTruncation {
    fn from(b: TruncationBox) -> Self {
        SeriesTruncation::for_box(b.n_max, b.i_max, b.j_max)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Options {
    pub cutoff: CutoffConvention,
    pub g1_includes_y: bool,
    /// Spectrum column compared against diagonalization.
    pub perturbation_mode: PerturbationMode,
    /// Highest level in the spectrum table.
    pub n_max: usize,
    pub quad_rel_tol: f64,
    pub series_rel_tol: f64,
    pub seed: u64,
    pub mc_samples: usize,
    /// Gas-particle mass `M` of the massive energy density.
    pub massive_mass: f64,
    pub spectral_samples: usize,
    pub spectral_y_max: f64,
    pub truncation_box: TruncationBox,
    /// Threshold overrides keyed by quantity-name prefix; `"*"` matches every
    /// row. The longest matching prefix wins.
    pub thresholds: BTreeMap<String, f64>,
}

impl Default for Options {
    fn default() -> Self {
        let e = EnergyDensityOptions::default();
        Options {
            cutoff: e.cutoff,
            g1_includes_y: e.g1_includes_y,
            perturbation_mode: PerturbationMode::PaperLiteral,
            n_max: 5,
            quad_rel_tol: e.quad_rel_tol,
            series_rel_tol: e.series_rel_tol,
            seed: 0,
            mc_samples: 100_000,
            massive_mass: 1.0,
            spectral_samples: 200,
            spectral_y_max: 20.0,
            truncation_box: TruncationBox::default(),
            thresholds: BTreeMap::new(),
        }
    }
}

impl Options {
    pub fn energy_density(&self) -> EnergyDensityOptions {
        EnergyDensityOptions {
            cutoff: self.cutoff,
            g1_includes_y: self.g1_includes_y,
            quad_rel_tol: self.quad_rel_tol,
            series_rel_tol: self.series_rel_tol,
        }
    }

    pub fn threshold_for(&self, quantity: &str) -> Option<f64> {
        self.thresholds
            .iter()
            .filter(|(k, _)| k.as_str() == "*" || quantity.starts_with(k.as_str()))
            .max_by_key(|(k, _)| if k.as_str() == "*" { 0 } else { k.len() + 1 })
            .map(|(_, v)| *v)
    }
}

/// Largest supported spectrum table; the basis grows with it.
pub const MAX_LEVELS: usize = 60;

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let de = toml::Deserializer::parse(text).context("config is not valid TOML")?;
        let cfg: RunConfig = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            anyhow::anyhow!("config key `{path}`: {}", e.into_inner().message())
        })?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn to_toml(&self) -> Result<String> {
        Ok(toml::to_string_pretty(self)?)
    }

    pub fn units(&self) -> UnitSystem {
        self.unit_system.into()
    }

    pub fn oscillator(&self) -> OscillatorParams {
        self.oscillator.into()
    }

    /// Checks value ranges; errors name the offending key.
    pub fn validate(&self) -> Result<()> {
        if self.thermal_grid.is_empty() {
            bail!("config key `thermal_grid`: at least one temperature is required");
        }
        for (i, t) in self.thermal_grid.iter().enumerate() {
            if !(*t > 0.0 && t.is_finite()) {
                bail!("config key `thermal_grid[{i}]`: temperature must be finite and > 0, got {t}");
            }
        }
        self.units()
            .validate()
            .map_err(|e| anyhow::anyhow!("config key `unit_system`: {e}"))?;
        self.oscillator()
            .validate()
            .map_err(|e| anyhow::anyhow!("config key `oscillator`: {e}"))?;
        let o = &self.options;
        let positive = [
            ("options.quad_rel_tol", o.quad_rel_tol),
            ("options.series_rel_tol", o.series_rel_tol),
            ("options.massive_mass", o.massive_mass),
            ("options.spectral_y_max", o.spectral_y_max),
        ];
        for (key, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                bail!("config key `{key}`: must be finite and > 0, got {v}");
            }
        }
        if o.n_max >= MAX_LEVELS {
            bail!("config key `options.n_max`: must be < {MAX_LEVELS}, got {}", o.n_max);
        }
        if o.mc_samples < MIN_SAMPLES {
            bail!("config key `options.mc_samples`: need at least {MIN_SAMPLES}, got {}", o.mc_samples);
        }
        if o.spectral_samples == 0 {
            bail!("config key `options.spectral_samples`: must be > 0");
        }
        if o.truncation_box.n_max == 0 {
            bail!("config key `options.truncation_box.n_max`: must be > 0");
        }
        for (k, v) in &o.thresholds {
            if !(*v >= 0.0) {
                bail!("config key `options.thresholds.{k}`: must be >= 0, got {v}");
            }
        }
        Ok(())
    }
}
