//! Circular trajectories, Frenet frames and torus metrics.
//!
//! The ring lies in the `z = 0` plane, centred at the origin. Arc length `l`
//! is the canonical coordinate; the angular position is `phi = +-l / r_k`
//! depending on [`Handedness`]. The normal `n` points toward the centre, so
//! for either orientation
//!
//! ```text
//! dT/dl = K n        dn/dl = -K T
//! ```
//!
//! and a point moving along the ring at speed `v` sees `dn/dt = -v K T`.

use std::f64::consts::PI;

use nalgebra::Vector3;

use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Handedness {
    /// Counterclockwise when viewed from `+z`.
    #[default]
    Ccw,
    Cw,
}

impl Handedness {
    pub fn sign(self) -> f64 {
        match self {
            Handedness::Ccw => 1.0,
            Handedness::Cw => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingGeometry {
    /// Curvature radius `r_k` (cm).
    pub radius: f64,
    /// `K = 1 / r_k` (1/cm).
    pub curvature: f64,
    /// Curvature angular velocity `c K` (rad/s).
    pub omega_k: f64,
    /// `2 pi r_k` (cm).
    pub circumference: f64,
    /// Propagation speed along the ring (cm/s).
    pub speed: f64,
    pub handedness: Handedness,
}

pub fn ring_from_radius(r_k: f64, c: f64) -> Result<RingGeometry> {
    if !(r_k > 0.0 && r_k.is_finite()) {
        return Err(domain(format!(
            "ring radius must be positive and finite, got {r_k}"
        )));
    }
    if !(c > 0.0 && c.is_finite()) {
        return Err(domain(format!(
            "speed must be positive and finite, got {c}"
        )));
    }
    Ok(RingGeometry {
        radius: r_k,
        curvature: 1.0 / r_k,
        omega_k: c / r_k,
        circumference: 2.0 * PI * r_k,
        speed: c,
        handedness: Handedness::Ccw,
    })
}

impl RingGeometry {
    pub fn with_handedness(mut self, handedness: Handedness) -> Self {
        self.handedness = handedness;
        self
    }

    /// Angular position of arc length `l`.
    pub fn angle_at(&self, l: f64) -> f64 {
        self.handedness.sign() * l / self.radius
    }

    pub fn frame_at(&self, l: f64) -> FrenetFrame {
        frenet_at(self, l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrenetFrame {
    pub position: Vector3<f64>,
    pub tangent: Vector3<f64>,
    /// Centripetal unit normal.
    pub normal: Vector3<f64>,
    /// `tangent x normal`; `+z` for a counterclockwise ring.
    pub binormal: Vector3<f64>,
}

pub fn frenet_at(ring: &RingGeometry, l: f64) -> FrenetFrame {
    let s = ring.handedness.sign();
    let (sin, cos) = ring.angle_at(l).sin_cos();
    FrenetFrame {
        position: Vector3::new(ring.radius * cos, ring.radius * sin, 0.0),
        tangent: Vector3::new(-s * sin, s * cos, 0.0),
        normal: Vector3::new(-cos, -sin, 0.0),
        binormal: Vector3::new(0.0, 0.0, s),
    }
}

/// Time derivative of the centripetal normal for a point moving along the
/// ring at speed `v`: `-v K T(l)`.
pub fn normal_rate(ring: &RingGeometry, v: f64, l: f64) -> Vector3<f64> {
    -v * ring.curvature * frenet_at(ring, l).tangent
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusShape {
    /// Ring (large) radius (cm).
    pub r_s: f64,
    /// Cross-section (small) radius (cm).
    pub r_c: f64,
    /// `r_c / r_s`, in `(0, 1]`.
    pub zeta: f64,
}

impl TorusShape {
    pub fn new(r_s: f64, zeta: f64) -> Result<Self> {
        if !(r_s > 0.0 && r_s.is_finite()) {
            return Err(domain(format!(
                "torus radius must be positive and finite, got {r_s}"
            )));
        }
        if !(zeta > 0.0 && zeta <= 1.0) {
            return Err(domain(format!("zeta must lie in (0, 1], got {zeta}")));
        }
        Ok(Self {
            r_s,
            r_c: zeta * r_s,
            zeta,
        })
    }

    pub fn from_radii(r_s: f64, r_c: f64) -> Result<Self> {
        if !(r_s > 0.0 && r_s.is_finite()) {
            return Err(domain(format!(
                "torus radius must be positive and finite, got {r_s}"
            )));
        }
        let zeta = r_c / r_s;
        if !(zeta > 0.0 && zeta <= 1.0) {
            return Err(domain(format!("r_c / r_s must lie in (0, 1], got {zeta}")));
        }
        Ok(Self { r_s, r_c, zeta })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusMetrics {
    /// `2 pi^2 r_s r_c^2` (cm^3).
    pub volume: f64,
    /// `pi r_c^2` (cm^2).
    pub section_area: f64,
    /// `2 pi r_s` (cm).
    pub ring_length: f64,
}

pub fn torus_metrics(shape: &TorusShape) -> TorusMetrics {
    let section_area = PI * shape.r_c * shape.r_c;
    let ring_length = 2.0 * PI * shape.r_s;
    TorusMetrics {
        volume: ring_length * section_area,
        section_area,
        ring_length,
    }
}
