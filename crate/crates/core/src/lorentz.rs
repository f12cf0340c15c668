//! Boosts of plane-wave packets.
//!
//! Each boosted quantity comes from its own transformation law:
//!
//! - frequency from the wave four-vector `(omega/c, k)`,
//! - amplitude from the field transformation of `(E, H)`,
//! - energy from photon-count conservation, `energy = N hbar omega`,
//! - volume from the wavelength at fixed cross-section and wave count.
//!
//! The ratios `E_o/omega`, `energy/omega` and `volume*omega` are then compared
//! across frames. Only boosts along the propagation axis are supported.

use nalgebra::Vector3;

use crate::constants::{HBAR, SPEED_OF_LIGHT};
use crate::error::{domain, Error, Result};
use crate::model::{invariant_constants, InvariantConstants, PhotonModel};
use crate::rel_diff;

use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavePacket {
    /// `E_o` (statV/cm).
    pub amplitude: f64,
    /// rad/s
    pub omega: f64,
    /// erg
    pub energy: f64,
    /// cm^3
    pub volume: f64,
    /// Unit propagation direction.
    pub direction: Vector3<f64>,
    /// Unit direction of E, transverse to `direction`.
    pub polarization: Vector3<f64>,
}

impl WavePacket {
    pub fn new(
        amplitude: f64,
        omega: f64,
        energy: f64,
        volume: f64,
        direction: Vector3<f64>,
        polarization: Vector3<f64>,
    ) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(domain(format!("omega must be positive, got {omega}")));
        }
        if !(volume > 0.0 && volume.is_finite()) {
            return Err(domain(format!("volume must be positive, got {volume}")));
        }
        if !(amplitude >= 0.0 && energy >= 0.0) {
            return Err(domain("amplitude and energy must be non-negative"));
        }
        if (direction.norm() - 1.0).abs() > 1e-12 || (polarization.norm() - 1.0).abs() > 1e-12 {
            return Err(domain("direction and polarization must be unit vectors"));
        }
        if direction.dot(&polarization).abs() > 1e-12 {
            return Err(domain("polarization must be transverse to the direction"));
        }
        Ok(Self {
            amplitude,
            omega,
            energy,
            volume,
            direction,
            polarization,
        })
    }

    /// A single photon filling its own volume. The amplitude follows from the
    /// cycle-averaged energy density `E_o^2 / 8pi`. The wave runs along `-y`
    /// with E along `x` and H along `z`.
    pub fn from_photon(p: &PhotonModel) -> Self {
        Self {
            amplitude: (8.0 * PI * p.energy / p.volume).sqrt(),
            omega: p.omega,
            energy: p.energy,
            volume: p.volume,
            direction: -Vector3::y(),
            polarization: Vector3::x(),
        }
    }

    /// Peak `(E, H)` with `H = direction x E`.
    pub fn fields(&self) -> (Vector3<f64>, Vector3<f64>) {
        let e = self.amplitude * self.polarization;
        (e, self.direction.cross(&e))
    }

    pub fn wavelength(&self) -> f64 {
        2.0 * PI * SPEED_OF_LIGHT / self.omega
    }

    pub fn photon_count(&self) -> f64 {
        self.energy / (HBAR * self.omega)
    }

    pub fn invariants(&self) -> InvariantConstants {
        invariant_constants(self.amplitude, self.omega, self.energy, self.volume)
            .expect("packet frequency is positive by construction")
    }
}

pub fn lorentz_factor(beta: f64) -> f64 {
    1.0 / (1.0 - beta * beta).sqrt()
}

/// Boosts the four-vector `(time, space)` into a frame moving with velocity
/// `beta c`.
pub fn boost_four_vector(
    time: f64,
    space: Vector3<f64>,
    beta: Vector3<f64>,
) -> (f64, Vector3<f64>) {
    let b2 = beta.norm_squared();
    if b2 == 0.0 {
        return (time, space);
    }
    let gamma = 1.0 / (1.0 - b2).sqrt();
    let bx = beta.dot(&space);
    let time_p = gamma * (time - bx);
    let space_p = space + ((gamma - 1.0) * bx / b2 - gamma * time) * beta;
    (time_p, space_p)
}

/// Field transformation in Gaussian units into a frame moving with velocity
/// `beta c`:
///
/// ```text
/// E' = g (E + b x H) - g^2/(g+1) b (b.E)
/// H' = g (H - b x E) - g^2/(g+1) b (b.H)
/// ```
pub fn field_transform(
    e: Vector3<f64>,
    h: Vector3<f64>,
    beta: Vector3<f64>,
) -> (Vector3<f64>, Vector3<f64>) {
    let gamma = lorentz_factor(beta.norm());
    let k = gamma * gamma / (gamma + 1.0);
    let e_p = gamma * (e + beta.cross(&h)) - k * beta.dot(&e) * beta;
    let h_p = gamma * (h - beta.cross(&e)) - k * beta.dot(&h) * beta;
    (e_p, h_p)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostReport {
    pub beta: f64,
    pub primed: WavePacket,
    /// Peak fields in the boosted frame.
    pub e_field: Vector3<f64>,
    pub h_field: Vector3<f64>,
    /// Largest relative change of `E_o/omega`, `energy/omega`, `volume*omega`.
    pub ratio_deviations: f64,
}

/// Boosts `p` into a frame moving with speed `beta c` along the unit `axis`,
/// which must be parallel or antiparallel to the propagation direction.
pub fn boost_packet(p: &WavePacket, beta: f64, axis: Vector3<f64>) -> Result<BoostReport> {
    if !(beta.abs() < 1.0) {
        return Err(domain(format!("|beta| must be below 1, got {beta}")));
    }
    if (axis.norm() - 1.0).abs() > 1e-12 {
        return Err(domain("boost axis must be a unit vector"));
    }
    if axis.cross(&p.direction).norm() > 1e-12 {
        return Err(Error::Unsupported(
            "only boosts along the propagation axis are supported".into(),
        ));
    }
    let velocity = beta * axis;

    let k_time = p.omega / SPEED_OF_LIGHT;
    let (k_time_p, k_space_p) = boost_four_vector(k_time, k_time * p.direction, velocity);
    let omega_p = k_time_p * SPEED_OF_LIGHT;
    let direction_p = k_space_p.normalize();

    let (e, h) = p.fields();
    let (e_p, h_p) = field_transform(e, h, velocity);
    let amplitude_p = p.amplitude * (e_p.norm() / e.norm());
    let polarization_p = e_p.normalize();

    // N = energy / (hbar omega) is frame independent.
    let energy_p = p.energy * (omega_p / p.omega);

    // volume = S * N_lambda * lambda with S and N_lambda frame independent.
    let lambda = p.wavelength();
    let lambda_p = 2.0 * PI * SPEED_OF_LIGHT / omega_p;
    let volume_p = p.volume / lambda * lambda_p;

    let primed = WavePacket {
        amplitude: amplitude_p,
        omega: omega_p,
        energy: energy_p,
        volume: volume_p,
        direction: direction_p,
        polarization: polarization_p,
    };
    let before = p.invariants();
    let after = primed.invariants();
    let ratio_deviations = rel_diff(before.c1, after.c1)
        .max(rel_diff(before.c2, after.c2))
        .max(rel_diff(before.c3, after.c3));
    Ok(BoostReport {
        beta,
        primed,
        e_field: e_p,
        h_field: h_p,
        ratio_deviations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameInvariants {
    pub beta: f64,
    pub omega: f64,
    pub amplitude: f64,
    pub energy: f64,
    pub volume: f64,
    pub constants: InvariantConstants,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub frames: Vec<FrameInvariants>,
    /// The frame with the largest ratio deviation.
    pub worst: BoostReport,
    pub max_deviation: f64,
    /// Largest relative spread of `energy/omega` against the rest frame.
    pub c2_spread: f64,
}

/// Boosts `p` along its own direction for each `beta` and collects the
/// invariant constants per frame.
pub fn invariant_sweep(p: &WavePacket, betas: &[f64]) -> Result<SweepReport> {
    if betas.is_empty() {
        return Err(domain("beta sweep is empty"));
    }
    let rest = p.invariants();
    let mut frames = Vec::with_capacity(betas.len());
    let mut worst: Option<BoostReport> = None;
    let mut c2_spread: f64 = 0.0;
    for &beta in betas {
        let report = boost_packet(p, beta, p.direction)?;
        let q = report.primed;
        let constants = q.invariants();
        c2_spread = c2_spread.max(rel_diff(constants.c2, rest.c2));
        frames.push(FrameInvariants {
            beta,
            omega: q.omega,
            amplitude: q.amplitude,
            energy: q.energy,
            volume: q.volume,
            constants,
        });
        if worst.is_none_or(|w| report.ratio_deviations > w.ratio_deviations) {
            worst = Some(report);
        }
    }
    let worst = worst.expect("sweep is non-empty");
    Ok(SweepReport {
        frames,
        max_deviation: worst.ratio_deviations,
        worst,
        c2_spread,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::CODATA_2018;
    use crate::model::pair_threshold_photon;

    const SWEEP: [f64; 8] = [-0.99, -0.9, -0.5, -0.1, 0.1, 0.5, 0.9, 0.99];

    fn packet() -> WavePacket {
        WavePacket::new(3.0e4, 2.0e15, 5.0e-7, 1.0e-9, Vector3::z(), Vector3::x()).unwrap()
    }

    #[test]
    fn identity_boost_is_exact() {
        let p = packet();
        let r = boost_packet(&p, 0.0, p.direction).unwrap();
        assert_eq!(r.primed, p);
        assert_eq!(r.ratio_deviations, 0.0);
    }

    #[test]
    fn receding_doppler_factor() {
        let p = packet();
        let r = boost_packet(&p, 0.6, p.direction).unwrap();
        assert!(rel_diff(r.primed.omega / p.omega, 0.5) < 1e-15);
        let r = boost_packet(&p, 0.6, -p.direction).unwrap();
        assert!(rel_diff(r.primed.omega / p.omega, 2.0) < 1e-15);
    }

    #[test]
    fn sweep_keeps_ratios() {
        let p = packet();
        for beta in SWEEP {
            let r = boost_packet(&p, beta, p.direction).unwrap();
            assert!(
                r.ratio_deviations < 1e-12,
                "beta {beta}: {}",
                r.ratio_deviations
            );
            let expected = ((1.0 - beta) / (1.0 + beta)).sqrt();
            assert!(rel_diff(r.primed.omega / p.omega, expected) < 1e-13);
        }
    }

    #[test]
    fn boosted_fields_remain_a_plane_wave() {
        let p = packet();
        for beta in SWEEP {
            let r = boost_packet(&p, beta, p.direction).unwrap();
            assert!(rel_diff(r.e_field.norm(), r.h_field.norm()) < 1e-12);
            assert!(r.e_field.dot(&r.h_field).abs() < 1e-12 * r.e_field.norm_squared());
            assert!((r.primed.direction - p.direction).norm() < 1e-15);
            assert!(r.e_field.dot(&r.primed.direction).abs() < 1e-12 * r.e_field.norm());
        }
    }

    #[test]
    fn rejects_bad_boosts() {
        let p = packet();
        assert!(matches!(
            boost_packet(&p, 1.0, p.direction),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            boost_packet(&p, -1.5, p.direction),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            boost_packet(&p, 0.3, Vector3::x()),
            Err(Error::Unsupported(_))
        ));
        assert!(invariant_sweep(&p, &[]).is_err());
    }

    #[test]
    fn threshold_photon_sweep() {
        let photon = pair_threshold_photon(&CODATA_2018);
        let p = WavePacket::from_photon(&photon);
        let betas = [-0.99, -0.5, -0.1, 0.0, 0.1, 0.5, 0.99];
        let sweep = invariant_sweep(&p, &betas).unwrap();
        assert_eq!(sweep.frames.len(), 7);
        for f in &sweep.frames {
            assert!(rel_diff(f.constants.c2, CODATA_2018.hbar) < 1e-14);
        }
        assert!(sweep.max_deviation < 1e-12);
        assert!(rel_diff(p.photon_count(), 1.0) < 1e-14);

        let zero = invariant_sweep(&p, &[0.0]).unwrap();
        assert_eq!(zero.max_deviation, 0.0);
    }

    #[test]
    fn four_vector_boost_preserves_interval() {
        let (t, x) = (2.0, Vector3::new(0.3, -1.2, 0.7));
        let beta = Vector3::new(0.2, 0.5, -0.1);
        let (tp, xp) = boost_four_vector(t, x, beta);
        assert!(rel_diff(t * t - x.norm_squared(), tp * tp - xp.norm_squared()) < 1e-14);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn rel(a: &WavePacket, b: &WavePacket) -> f64 {
            rel_diff(a.amplitude, b.amplitude)
                .max(rel_diff(a.omega, b.omega))
                .max(rel_diff(a.energy, b.energy))
                .max(rel_diff(a.volume, b.volume))
        }

        proptest! {
            #[test]
            fn collinear_boosts_compose(b1 in -0.9f64..0.9, b2 in -0.9f64..0.9) {
                let p = packet();
                let step = boost_packet(&p, b1, p.direction).unwrap().primed;
                let two = boost_packet(&step, b2, step.direction).unwrap().primed;
                let one = boost_packet(&p, (b1 + b2) / (1.0 + b1 * b2), p.direction).unwrap().primed;
                prop_assert!(rel(&two, &one) < 1e-12);
            }

            #[test]
            fn ratios_are_invariant(beta in -0.99f64..0.99, flip in any::<bool>()) {
                let p = packet();
                let axis = if flip { -p.direction } else { p.direction };
                let r = boost_packet(&p, beta, axis).unwrap();
                prop_assert!(r.ratio_deviations < 1e-12);
            }
        }
    }
}
