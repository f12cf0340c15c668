//! Photon and semi-photon parameter chain.
//!
//! The pair-threshold photon (`energy = 2 m_e c^2`) fixes the ring radius
//! `r = hbar / (2 m_e c)` and frequency `omega = c / r`. Dividing the twirled
//! photon into two half periods gives a pair of semi-photons sharing that
//! radius and frequency. For a semi-photon of cross-section ratio `zeta`
//! and field amplitude `E_o`:
//!
//! ```text
//! q = zeta^2 E_o r^2
//! m = pi zeta^2 E_o^2 r^2 / (4 omega c)
//! alpha = q^2 / (hbar c) = (2/pi) zeta^2
//! ```
//!
//! The last line holds for every amplitude once the radius is tied to the
//! mass through `r = hbar / (2 m c)`.

use std::f64::consts::PI;

use crate::constants::PhysicalConstants;
use crate::error::{domain, Error, Result};
use crate::quadrature::angular_momentum;
use crate::rel_diff;

/// Multiplier applied to the magnetic moment for the Thomas precession.
pub const THOMAS_FACTOR: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotonModel {
    /// erg
    pub energy: f64,
    /// g cm/s
    pub momentum: f64,
    /// rad/s
    pub omega: f64,
    /// cm
    pub wavelength: f64,
    /// cm
    pub radius: f64,
    /// cm^2
    pub section_area: f64,
    /// cm^3
    pub volume: f64,
    /// erg s
    pub spin: f64,
    /// g
    pub mass_equivalent: f64,
    pub count: f64,
    /// 1/s
    pub frequency: f64,
}

/// The photon at the electron-positron pair production threshold.
pub fn pair_threshold_photon(k: &PhysicalConstants) -> PhotonModel {
    let mass_equivalent = 2.0 * k.m_e;
    let energy = mass_equivalent * k.c * k.c;
    let omega = energy / k.hbar;
    let wavelength = PI * k.hbar / (k.m_e * k.c);
    let radius = k.hbar / (2.0 * k.m_e * k.c);
    let section_area = PI * radius * radius;
    PhotonModel {
        energy,
        momentum: 2.0 * (k.m_e * k.c),
        omega,
        wavelength,
        radius,
        section_area,
        volume: wavelength * section_area,
        spin: mass_equivalent * radius * radius * omega,
        mass_equivalent,
        count: 1.0,
        frequency: omega / (2.0 * PI),
    }
}

impl PhotonModel {
    /// `p r`, the angular momentum of the twirled photon.
    pub fn orbital_spin(&self) -> f64 {
        angular_momentum(self.momentum, self.radius)
    }
}

/// Ratios that stay fixed under boosts of a plane-wave packet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantConstants {
    /// `E_o / omega` ((statV/cm) s).
    pub c1: f64,
    /// `energy / omega` (erg s).
    pub c2: f64,
    /// `volume * omega` (cm^3/s).
    pub c3: f64,
}

pub fn invariant_constants(
    amplitude: f64,
    omega: f64,
    energy: f64,
    volume: f64,
) -> Result<InvariantConstants> {
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(domain(format!("omega must be positive, got {omega}")));
    }
    Ok(InvariantConstants {
        c1: amplitude / omega,
        c2: energy / omega,
        c3: volume * omega,
    })
}

impl InvariantConstants {
    pub fn amplitude_at(&self, omega: f64) -> f64 {
        self.c1 * omega
    }

    pub fn energy_at(&self, omega: f64) -> f64 {
        self.c2 * omega
    }

    pub fn volume_at(&self, omega: f64) -> f64 {
        self.c3 / omega
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyBound {
    /// `2 pi hbar c / energy` (cm).
    pub lambda_min: f64,
    /// `(2 pi / alpha) e^2 / energy` (cm).
    pub lambda_min_alt: f64,
}

/// Shortest wave train compatible with `lambda p >= 2 pi hbar`.
pub fn uncertainty_min_length(energy: f64, k: &PhysicalConstants) -> Result<UncertaintyBound> {
    if !(energy > 0.0 && energy.is_finite()) {
        return Err(domain(format!("energy must be positive, got {energy}")));
    }
    let lambda_min = 2.0 * PI * k.hbar * k.c / energy;
    let lambda_min_alt = 2.0 * PI / k.alpha_exp * (k.e * k.e / energy);
    if rel_diff(lambda_min, lambda_min_alt) > 1e-9 {
        return Err(Error::Consistency(format!(
            "uncertainty bound forms disagree: {lambda_min:e} vs {lambda_min_alt:e}"
        )));
    }
    Ok(UncertaintyBound {
        lambda_min,
        lambda_min_alt,
    })
}

/// Plane-wave dispersion `omega = sqrt(c^2 k^2 + m^2 c^4 / hbar^2)`.
pub fn dispersion_omega(k_wave: f64, mass: f64, k: &PhysicalConstants) -> f64 {
    let rest = mass * k.c * k.c / k.hbar;
    (k.c * k_wave).hypot(rest)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChargeSign {
    Plus,
    Minus,
}

impl ChargeSign {
    pub fn factor(self) -> f64 {
        match self {
            ChargeSign::Plus => 1.0,
            ChargeSign::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiPhotonModel {
    pub zeta: f64,
    /// `E_o` (statV/cm).
    pub amplitude: f64,
    /// `r_s` (cm).
    pub radius: f64,
    /// `omega_s` (rad/s).
    pub omega: f64,
    /// `q_s` (statC).
    pub charge: f64,
    /// `m_s` (g).
    pub mass: f64,
    /// `q_s^2 / (hbar c)`.
    pub alpha: f64,
    /// `sigma_s` (erg s).
    pub spin: f64,
    /// `mu_s` (statC cm, i.e. erg/G).
    pub magnetic_moment: f64,
    pub sign: ChargeSign,
    /// `S_c = pi zeta^2 r_s^2` (cm^2).
    pub section_area: f64,
    /// Torus volume `2 pi^2 r_s r_c^2` (cm^3).
    pub volume: f64,
    /// Whether `magnetic_moment` includes the Thomas factor.
    pub thomas: bool,
}

/// `q = zeta^2 E_o r^2`.
pub fn charge_from_amplitude(zeta: f64, amplitude: f64, radius: f64) -> f64 {
    zeta * zeta * amplitude * radius * radius
}

/// `m = pi zeta^2 E_o^2 r^2 / (4 omega c)`.
pub fn mass_from_amplitude(zeta: f64, amplitude: f64, radius: f64, omega: f64, c: f64) -> f64 {
    PI * zeta * zeta * amplitude * amplitude * radius * radius / (4.0 * omega * c)
}

/// Inverse of [`mass_from_amplitude`].
pub fn amplitude_for_mass(zeta: f64, mass: f64, radius: f64, omega: f64, c: f64) -> f64 {
    (4.0 * mass * omega * c / (PI * zeta * zeta * radius * radius)).sqrt()
}

/// Radius implied by charge and mass, `r = pi q^2 / (4 zeta^2 m c^2)`.
pub fn radius_from_charge(charge: f64, zeta: f64, mass: f64, c: f64) -> f64 {
    PI * charge * charge / (4.0 * zeta * zeta * mass * c * c)
}

/// Magnetic moment `I S / c` of charge `q` circulating at `omega` on a ring of
/// radius `r`, with `I = q omega / 2pi` and `S = pi r^2`.
pub fn ring_magnetic_moment(charge: f64, omega: f64, radius: f64, c: f64) -> f64 {
    let current = charge * omega / (2.0 * PI);
    let area = PI * radius * radius;
    current * area / c
}

fn check_zeta(zeta: f64) -> Result<()> {
    if zeta > 0.0 && zeta <= 1.0 {
        Ok(())
    } else {
        Err(domain(format!("zeta must lie in (0, 1], got {zeta}")))
    }
}

fn build_semi_photon(
    zeta: f64,
    mass: f64,
    amplitude: f64,
    k: &PhysicalConstants,
) -> SemiPhotonModel {
    let momentum = mass * k.c;
    let radius = k.hbar / (2.0 * momentum);
    let omega = k.c / radius;
    let charge = charge_from_amplitude(zeta, amplitude, radius);
    let section_area = PI * zeta * zeta * radius * radius;
    SemiPhotonModel {
        zeta,
        amplitude,
        radius,
        omega,
        charge,
        mass,
        alpha: charge * charge / (k.hbar * k.c),
        spin: angular_momentum(momentum, radius),
        magnetic_moment: ring_magnetic_moment(charge, omega, radius, k.c),
        sign: ChargeSign::Plus,
        section_area,
        volume: 2.0 * PI * radius * section_area,
        thomas: false,
    }
}

/// The semi-photon whose mass is the electron mass.
pub fn semi_photon_model(zeta: f64, k: &PhysicalConstants) -> Result<SemiPhotonModel> {
    semi_photon_for_mass(zeta, k.m_e, k)
}

/// Semi-photon of arbitrary mass; the radius follows from `r = hbar / (2 m c)`
/// and the amplitude from the mass integral.
pub fn semi_photon_for_mass(
    zeta: f64,
    mass: f64,
    k: &PhysicalConstants,
) -> Result<SemiPhotonModel> {
    check_zeta(zeta)?;
    if !(mass > 0.0 && mass.is_finite()) {
        return Err(domain(format!("mass must be positive, got {mass}")));
    }
    let radius = k.hbar / (2.0 * mass * k.c);
    let omega = k.c / radius;
    let amplitude = amplitude_for_mass(zeta, mass, radius, omega, k.c);
    Ok(build_semi_photon(zeta, mass, amplitude, k))
}

/// Semi-photon of a given field amplitude. The mass is whatever closes
/// `m = pi zeta^2 E_o^2 r^3 / (4 c^2)` together with `r = hbar / (2 m c)`.
pub fn semi_photon_for_amplitude(
    zeta: f64,
    amplitude: f64,
    k: &PhysicalConstants,
) -> Result<SemiPhotonModel> {
    check_zeta(zeta)?;
    if !(amplitude > 0.0 && amplitude.is_finite()) {
        return Err(domain(format!(
            "amplitude must be positive, got {amplitude}"
        )));
    }
    // r^4 = 2 hbar c / (pi zeta^2 E_o^2)
    let radius = (2.0 * k.hbar * k.c / (PI * zeta * zeta * amplitude * amplitude)).powf(0.25);
    let mass = k.hbar / (2.0 * radius * k.c);
    Ok(build_semi_photon(zeta, mass, amplitude, k))
}

impl SemiPhotonModel {
    /// The same particle with opposite field orientation.
    pub fn conjugate(mut self) -> Self {
        self.sign = match self.sign {
            ChargeSign::Plus => ChargeSign::Minus,
            ChargeSign::Minus => ChargeSign::Plus,
        };
        self.charge = -self.charge;
        self.magnetic_moment = -self.magnetic_moment;
        self
    }

    /// Applies the Thomas factor to the magnetic moment once.
    pub fn with_thomas(mut self) -> Self {
        if !self.thomas {
            self.magnetic_moment *= THOMAS_FACTOR;
            self.thomas = true;
        }
        self
    }

    /// `p_s = m_s c`.
    pub fn momentum(&self, k: &PhysicalConstants) -> f64 {
        self.mass * k.c
    }
}

/// Splits the pair-threshold photon into its plus and minus halves (`zeta = 1`).
pub fn split_photon(
    p: &PhotonModel,
    k: &PhysicalConstants,
) -> Result<(SemiPhotonModel, SemiPhotonModel)> {
    let threshold = 2.0 * k.electron_rest_energy();
    if rel_diff(p.energy, threshold) > 1e-12 {
        return Err(domain(format!(
            "photon energy {:e} erg is not the pair threshold {:e} erg",
            p.energy, threshold
        )));
    }
    let mut plus = semi_photon_for_mass(1.0, 0.5 * p.mass_equivalent, k)?;
    // The halves keep the photon's ring: same radius, frequency and torus.
    plus.radius = p.radius;
    plus.omega = p.omega;
    plus.section_area = p.section_area;
    plus.volume = p.volume;
    plus.spin = 0.5 * p.orbital_spin();
    let minus = plus.conjugate();
    Ok((plus, minus))
}
