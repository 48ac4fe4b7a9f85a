//! Physical inputs shared by the classical and quantum modules.

use crate::error::{Error, Result};
use alloc::format;

/// Values of `hbar`, `c` and `k_B`. Defaults to natural units.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct UnitSystem {
    pub hbar: f64,
    pub c: f64,
    pub k_b: f64,
}

impl Default for UnitSystem {
    fn default() -> Self {
        UnitSystem::NATURAL
    }
}

impl UnitSystem {
    pub const NATURAL: UnitSystem = UnitSystem {
        hbar: 1.0,
        c: 1.0,
        k_b: 1.0,
    };

    /// CODATA 2018 exact SI values.
    pub const SI: UnitSystem = UnitSystem {
        hbar: 1.054_571_817e-34,
        c: 299_792_458.0,
        k_b: 1.380_649e-23,
    };

    pub fn validate(&self) -> Result<()> {
        positive("hbar", self.hbar)?;
        positive("c", self.c)?;
        positive("k_b", self.k_b)
    }
}

/// One oscillator species: `H_vib = m w^2 r^2 / 2 + mu x^3 + lambda x^4`.
///
/// `cubic` only enters the quantum spectrum; `amplitude` only enters the
/// momentum-sphere volume.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OscillatorParams {
    pub mass: f64,
    pub omega: f64,
    pub quartic: f64,
    pub cubic: f64,
    pub amplitude: f64,
}

impl Default for OscillatorParams {
    fn default() -> Self {
        OscillatorParams {
            mass: 1.0,
            omega: 1.0,
            quartic: 1.0,
            cubic: 0.0,
            amplitude: 2.0,
        }
    }
}

impl OscillatorParams {
    pub fn harmonic(mass: f64, omega: f64) -> Self {
        OscillatorParams {
            mass,
            omega,
            quartic: 0.0,
            cubic: 0.0,
            ..Default::default()
        }
    }

    pub fn with_quartic(mut self, quartic: f64) -> Self {
        self.quartic = quartic;
        self
    }

    pub fn with_cubic(mut self, cubic: f64) -> Self {
        self.cubic = cubic;
        self
    }

    pub fn validate(&self) -> Result<()> {
        positive("mass", self.mass)?;
        positive("omega", self.omega)?;
        if !(self.quartic >= 0.0) || !self.quartic.is_finite() {
            return Err(Error::param("quartic", format!("must be >= 0, got {}", self.quartic)));
        }
        if !self.cubic.is_finite() {
            return Err(Error::param("cubic", "must be finite"));
        }
        if !(self.amplitude > 0.0) {
            return Err(Error::param("amplitude", format!("must be > 0, got {}", self.amplitude)));
        }
        Ok(())
    }

    /// Anharmonic operations need a confining quartic term.
    pub fn require_anharmonic(&self) -> Result<()> {
        self.validate()?;
        if self.quartic > 0.0 {
            Ok(())
        } else {
            Err(Error::param("quartic", "an anharmonic minimum requires quartic > 0"))
        }
    }
}

/// Temperature together with `beta = 1 / (k_B T)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ThermalState {
    temperature: f64,
    beta: f64,
}

impl ThermalState {
    pub fn new(temperature: f64, units: &UnitSystem) -> Result<Self> {
        positive("temperature", temperature)?;
        units.validate()?;
        Ok(ThermalState {
            temperature,
            beta: 1.0 / (units.k_b * temperature),
        })
    }

    /// State with the given inverse temperature.
    pub fn from_beta(beta: f64, units: &UnitSystem) -> Result<Self> {
        positive("beta", beta)?;
        units.validate()?;
        Ok(ThermalState {
            temperature: 1.0 / (units.k_b * beta),
            beta,
        })
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `k_B T`.
    pub fn thermal_energy(&self) -> f64 {
        1.0 / self.beta
    }
}

/// Formally infinite volumes, carried as multiplicative constants.
///
/// Intensive quantities never depend on these.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FormalVolumes {
    pub volume: f64,
    pub momentum_volume: f64,
    pub sphere_volume: f64,
}

impl Default for FormalVolumes {
    fn default() -> Self {
        FormalVolumes {
            volume: 1.0,
            momentum_volume: 1.0,
            sphere_volume: 1.0,
        }
    }
}

impl FormalVolumes {
    pub fn scaled(self, factor: f64) -> Self {
        FormalVolumes {
            volume: self.volume * factor,
            momentum_volume: self.momentum_volume * factor,
            sphere_volume: self.sphere_volume * factor,
        }
    }
}

pub(crate) fn positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::param(name, format!("must be finite and > 0, got {value}")))
    }
}
