//! Plane and twirled wave configurations and their pointwise densities.
//!
//! A twirled configuration wraps one plane-polarized wave around a ring whose
//! circumference equals the wavelength. At arc length `l` the field is
//!
//! ```text
//! E(l) = s E_o cos(k l + phase) * u        u = -n  (radially outward)
//! H(l) = T x E(l)                           (along the ring axis)
//! ```
//!
//! with `s = -1` for the minus semi-photon and `+1` otherwise. The pattern
//! travels along `+T` at the ring speed, so lab time enters through
//! `l -> l - c t`.
//!
//! The displacement current `(1/4pi) dE/dt` of a field element carried
//! around the ring splits into a normal part driven by the scalar
//! oscillation and a tangential part driven by the rotation of `u`:
//!
//! ```text
//! j_n   = -(1/4pi) (dE/dt) n
//! j_tau =  (1/4pi) omega_K E T
//! ```

use std::f64::consts::PI;

use nalgebra::Vector3;
use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::geometry::{frenet_at, RingGeometry};

const FOUR_PI: f64 = 4.0 * PI;
const EIGHT_PI: f64 = 8.0 * PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Plane,
    TwirledPhoton,
    SemiPhotonPlus,
    SemiPhotonMinus,
}

impl FieldKind {
    pub fn is_twirled(self) -> bool {
        !matches!(self, FieldKind::Plane)
    }

    pub fn is_semi_photon(self) -> bool {
        matches!(self, FieldKind::SemiPhotonPlus | FieldKind::SemiPhotonMinus)
    }

    /// Field orientation: `-1` reverses E and H.
    pub fn orientation(self) -> f64 {
        match self {
            FieldKind::SemiPhotonMinus => -1.0,
            _ => 1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldKind::Plane => "plane",
            FieldKind::TwirledPhoton => "twirled_photon",
            FieldKind::SemiPhotonPlus => "semi_photon_plus",
            FieldKind::SemiPhotonMinus => "semi_photon_minus",
        }
    }
}

/// What the wave propagates along.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Carrier {
    /// Straight line through the origin along `direction`, E along `polarization`.
    Line {
        direction: Vector3<f64>,
        polarization: Vector3<f64>,
    },
    Ring(RingGeometry),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldConfiguration {
    pub kind: FieldKind,
    /// `E_o` (statV/cm).
    pub amplitude: f64,
    /// rad/s
    pub omega: f64,
    /// `omega / c` (1/cm).
    pub wave_number: f64,
    /// Propagation speed (cm/s).
    pub speed: f64,
    pub carrier: Carrier,
    /// Arc-length interval `(start, end)`.
    ///
    /// A full period `[0, lambda]` for the twirled photon and the plane wave.
    /// A semi-photon is the half period centred on the crest at `l = 0`,
    /// `[-lambda/4, lambda/4]`, which carries a single sign of E.
    pub support: (f64, f64),
    /// Phase offset in radians, zero by default.
    pub phase: f64,
}

pub fn twirled_field(
    kind: FieldKind,
    amplitude: f64,
    ring: &RingGeometry,
) -> Result<FieldConfiguration> {
    if !kind.is_twirled() {
        return Err(Error::Unsupported(
            "a plane wave has no ring geometry; use plane_wave".into(),
        ));
    }
    check_amplitude(amplitude)?;
    let wavelength = ring.circumference;
    let support = if kind.is_semi_photon() {
        (-0.25 * wavelength, 0.25 * wavelength)
    } else {
        (0.0, wavelength)
    };
    Ok(FieldConfiguration {
        kind,
        amplitude,
        omega: ring.omega_k,
        wave_number: ring.curvature,
        speed: ring.speed,
        carrier: Carrier::Ring(*ring),
        support,
        phase: 0.0,
    })
}

/// A linearly polarized plane wave; H is `direction x E`.
pub fn plane_wave(
    amplitude: f64,
    omega: f64,
    c: f64,
    direction: Vector3<f64>,
    polarization: Vector3<f64>,
) -> Result<FieldConfiguration> {
    check_amplitude(amplitude)?;
    if !(omega > 0.0 && omega.is_finite()) {
        return Err(domain(format!("omega must be positive, got {omega}")));
    }
    if (direction.norm() - 1.0).abs() > 1e-12 || (polarization.norm() - 1.0).abs() > 1e-12 {
        return Err(domain("direction and polarization must be unit vectors"));
    }
    if direction.dot(&polarization).abs() > 1e-12 {
        return Err(domain("polarization must be transverse to the direction"));
    }
    let wave_number = omega / c;
    Ok(FieldConfiguration {
        kind: FieldKind::Plane,
        amplitude,
        omega,
        wave_number,
        speed: c,
        carrier: Carrier::Line {
            direction,
            polarization,
        },
        support: (0.0, 2.0 * PI / wave_number),
        phase: 0.0,
    })
}

fn check_amplitude(amplitude: f64) -> Result<()> {
    if amplitude > 0.0 && amplitude.is_finite() {
        Ok(())
    } else {
        Err(domain(format!(
            "field amplitude must be positive and finite, got {amplitude}"
        )))
    }
}

impl FieldConfiguration {
    pub fn with_phase(mut self, phase: f64) -> Self {
        self.phase = phase;
        self
    }

    pub fn wavelength(&self) -> f64 {
        2.0 * PI / self.wave_number
    }

    pub fn ring(&self) -> Option<&RingGeometry> {
        match &self.carrier {
            Carrier::Ring(ring) => Some(ring),
            Carrier::Line { .. } => None,
        }
    }

    fn require_ring(&self) -> Result<&RingGeometry> {
        self.ring().ok_or_else(|| {
            Error::Unsupported(format!(
                "{} configuration has no curvature",
                self.kind.name()
            ))
        })
    }

    /// Signed scalar field `s E_o cos(k l + phase)`.
    pub fn scalar_field(&self, l: f64) -> f64 {
        self.kind.orientation() * self.amplitude * (self.wave_number * l + self.phase).cos()
    }

    /// Lab-frame time derivative of the scalar field at `t = 0` for a wave
    /// travelling toward increasing `l`.
    pub fn scalar_rate(&self, l: f64) -> f64 {
        self.kind.orientation()
            * self.amplitude
            * self.omega
            * (self.wave_number * l + self.phase).sin()
    }

    pub fn sample(&self, l: f64) -> FieldSample {
        let e_scalar = self.scalar_field(l);
        match &self.carrier {
            Carrier::Line {
                direction,
                polarization,
            } => {
                let e = e_scalar * polarization;
                FieldSample {
                    l,
                    position: l * direction,
                    e,
                    h: direction.cross(&e),
                }
            }
            Carrier::Ring(ring) => {
                let frame = frenet_at(ring, l);
                let e = -e_scalar * frame.normal;
                FieldSample {
                    l,
                    position: frame.position,
                    e,
                    h: frame.tangent.cross(&e),
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    /// Arc length (cm).
    pub l: f64,
    /// cm
    pub position: Vector3<f64>,
    /// statV/cm
    pub e: Vector3<f64>,
    /// G
    pub h: Vector3<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurrentDecomposition {
    /// Normal displacement current (statA/cm^2).
    pub normal: Vector3<f64>,
    /// Tangential displacement current (statA/cm^2).
    pub tangential: Vector3<f64>,
    /// Signed component of `normal` along the centripetal normal.
    pub j_n: f64,
    /// Signed component of `tangential` along the tangent.
    pub j_tau: f64,
}

impl CurrentDecomposition {
    /// `j_n + i j_tau`.
    pub fn complex_form(&self) -> Complex64 {
        Complex64::new(self.j_n, self.j_tau)
    }

    pub fn total(&self) -> Vector3<f64> {
        self.normal + self.tangential
    }
}

pub fn displacement_current(cfg: &FieldConfiguration, l: f64) -> Result<CurrentDecomposition> {
    let ring = cfg.require_ring()?;
    let frame = frenet_at(ring, l);
    let j_n = -cfg.scalar_rate(l) / FOUR_PI;
    let j_tau = ring.omega_k * cfg.scalar_field(l) / FOUR_PI;
    Ok(CurrentDecomposition {
        normal: j_n * frame.normal,
        tangential: j_tau * frame.tangent,
        j_n,
        j_tau,
    })
}

/// Magnitude `(omega / 4pi) E` of the current equivalent to the mass term.
///
/// It is the imaginary (tangential) part of the complex current, the factor
/// `i` standing for a quarter-turn rotation of E into the tangent.
pub fn mass_current(e: f64, omega: f64) -> f64 {
    omega / FOUR_PI * e
}

/// Charge density `(1/4pi)(omega/c) E(l)` (statC/cm^3).
pub fn charge_density(cfg: &FieldConfiguration, l: f64) -> Result<f64> {
    cfg.require_ring()?;
    Ok(cfg.wave_number * cfg.scalar_field(l) / FOUR_PI)
}

/// `(E^2 + H^2) / 8pi` (erg/cm^3).
pub fn energy_density(s: &FieldSample) -> f64 {
    (s.e.norm_squared() + s.h.norm_squared()) / EIGHT_PI
}

/// `energy_density / c^2` (g/cm^3).
pub fn mass_density(s: &FieldSample, c: f64) -> f64 {
    energy_density(s) / (c * c)
}

/// `n` equally spaced samples over the support, endpoints included.
pub fn sample_grid(cfg: &FieldConfiguration, n: usize) -> Result<Vec<FieldSample>> {
    if n < 2 {
        return Err(domain(format!("sample count must be at least 2, got {n}")));
    }
    let (a, b) = cfg.support;
    let step = (b - a) / (n - 1) as f64;
    Ok((0..n)
        .map(|i| {
            let l = if i == n - 1 { b } else { a + step * i as f64 };
            cfg.sample(l)
        })
        .collect())
}
