//! Universal constants in Gaussian CGS units.
//!
//! Values are CODATA 2018. The elementary charge is the exact SI value
//! converted with `e[statC] = e[C] * c[m/s] * 10`.

use std::f64::consts::TAU;

/// Speed of light (cm/s), exact.
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e10;

/// Reduced Planck constant (erg s).
pub const HBAR: f64 = 1.054_571_817e-27;

/// Elementary charge (statC).
pub const ELEMENTARY_CHARGE: f64 = 4.803_204_712_570_263e-10;

/// Electron mass (g).
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-28;

/// Fine-structure constant.
pub const FINE_STRUCTURE: f64 = 7.297_352_569_3e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// cm/s
    pub c: f64,
    /// erg s
    pub hbar: f64,
    /// erg s
    pub h: f64,
    /// statC
    pub e: f64,
    /// g
    pub m_e: f64,
    pub alpha_exp: f64,
}

pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
    c: SPEED_OF_LIGHT,
    hbar: HBAR,
    h: TAU * HBAR,
    e: ELEMENTARY_CHARGE,
    m_e: ELECTRON_MASS,
    alpha_exp: FINE_STRUCTURE,
};

pub fn codata_constants() -> PhysicalConstants {
    CODATA_2018
}

impl PhysicalConstants {
    /// `e^2 / (hbar c)` recomputed from the stored charge, Planck constant and c.
    pub fn fine_structure_from_charge(&self) -> f64 {
        self.e * self.e / (self.hbar * self.c)
    }

    /// Rest energy `m_e c^2` (erg).
    pub fn electron_rest_energy(&self) -> f64 {
        self.m_e * self.c * self.c
    }
}

/// Electron length scales (cm).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElectronScales {
    /// Classical electron radius `e^2 / (m_e c^2)`.
    pub r_0: f64,
    /// Reduced Compton wavelength `hbar / (m_e c)`.
    pub lambda_bar_c: f64,
    /// Compton length as used by the bare-radius relation; equal to `lambda_bar_c`.
    pub r_c: f64,
}

pub fn electron_scales(k: &PhysicalConstants) -> ElectronScales {
    let lambda_bar_c = k.hbar / (k.m_e * k.c);
    ElectronScales {
        r_0: k.e * k.e / k.electron_rest_energy(),
        lambda_bar_c,
        r_c: lambda_bar_c,
    }
}
