//! Vacuum polarization between bare and measured charge.
//!
//! A finite bare charge is screened by the vacuum's dielectric constant
//! `eps_v`: `q_exp = q_bare / sqrt(eps_v)` and `alpha_exp = alpha_bare / eps_v`.
//! The bare radius `q_bare^2 / (alpha_bare m c^2)` then reduces to the
//! Compton length `r_0 / alpha_exp`.

use crate::constants::{electron_scales, PhysicalConstants};
use crate::error::{domain, Error, Result};
use crate::rel_diff;

/// Coulomb energy `q1 q2 / (eps r)` (erg).
pub fn coulomb_energy(q1: f64, q2: f64, r: f64, eps: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(domain(format!("separation must be positive, got {r}")));
    }
    if !(eps > 0.0) {
        return Err(domain(format!(
            "dielectric constant must be positive, got {eps}"
        )));
    }
    Ok(q1 * q2 / (eps * r))
}

/// `q / sqrt(eps)`: the charge that reproduces the vacuum Coulomb energy.
pub fn screened_charge(q: f64, eps: f64) -> f64 {
    q / eps.sqrt()
}

/// Measured charge as the difference of bare and screening charge.
pub fn charge_difference(q_bare: f64, q_scr: f64) -> f64 {
    q_bare - q_scr
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VacuumPolarization {
    /// Vacuum dielectric constant.
    pub eps_v: f64,
    pub alpha_bare: f64,
    pub alpha_exp: f64,
    /// statC
    pub q_bare: f64,
    /// statC
    pub q_exp: f64,
    /// cm
    pub r_bare: f64,
    /// cm
    pub r_0: f64,
}

impl VacuumPolarization {
    pub fn recovered_alpha_bare(&self) -> f64 {
        self.eps_v * self.alpha_exp
    }

    /// Screening charge `q_bare - q_exp`.
    pub fn q_screening(&self) -> f64 {
        self.q_bare - self.q_exp
    }
}

/// `q_bare^2 / (alpha_bare m c^2)`.
pub fn bare_radius(q_bare: f64, alpha_bare: f64, mass: f64, c: f64) -> f64 {
    q_bare * q_bare / (alpha_bare * mass * c * c)
}

pub fn vacuum_polarization(alpha_bare: f64, k: &PhysicalConstants) -> Result<VacuumPolarization> {
    if !(alpha_bare > k.alpha_exp && alpha_bare.is_finite()) {
        return Err(domain(format!(
            "bare coupling {alpha_bare} must exceed the measured {}; screening only reduces charge",
            k.alpha_exp
        )));
    }
    let eps_v = alpha_bare / k.alpha_exp;
    let q_bare = k.e * eps_v.sqrt();
    let r_0 = electron_scales(k).r_0;
    let r_bare = r_0 / k.alpha_exp;

    let via_charge = bare_radius(q_bare, alpha_bare, k.m_e, k.c);
    if rel_diff(via_charge, r_bare) > 1e-9 {
        return Err(Error::Consistency(format!(
            "bare radius from charge {via_charge:e} differs from r_0/alpha {r_bare:e}"
        )));
    }
    Ok(VacuumPolarization {
        eps_v,
        alpha_bare,
        alpha_exp: k.alpha_exp,
        q_bare,
        q_exp: k.e,
        r_bare,
        r_0,
    })
}
