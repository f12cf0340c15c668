//! Composite quadrature of charge, mass and angular momentum.
//!
//! Panels are summed strictly left to right so results are bit-reproducible.
//!
//! The default integrals factor into a line integral along the ring times the
//! constant cross-section area `S_c = pi r_c^2`. Setting
//! [`QuadratureSpec::include_toroidal_jacobian`] instead integrates over the
//! solid torus with the exact volume element
//! `dV = (1 + (rho / r_s) cos theta) rho d rho d theta dl`, and the report
//! carries the ratio of the two results.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::fields::{charge_density, mass_density, FieldConfiguration, FieldKind};
use crate::geometry::TorusShape;
use crate::rel_diff;

/// Five-point Gauss-Legendre nodes on `[-1, 1]`.
const GL5_NODES: [f64; 5] = [
    -0.906_179_845_938_664,
    -0.538_469_310_105_683_1,
    0.0,
    0.538_469_310_105_683_1,
    0.906_179_845_938_664,
];

const GL5_WEIGHTS: [f64; 5] = [
    0.236_926_885_056_189_1,
    0.478_628_670_499_366_5,
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_5,
    0.236_926_885_056_189_1,
];

/// Panels per cross-section coordinate when the toroidal Jacobian is on.
/// The radial integrand is a quadratic polynomial and the angular one a
/// trigonometric polynomial of degree one, so this is already exact to
/// rounding.
const SECTION_PANELS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rule {
    #[default]
    GaussLegendre5,
    Midpoint,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::GaussLegendre5 => "gauss_legendre_5",
            Rule::Midpoint => "midpoint",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureSpec {
    pub panels: usize,
    pub rule: Rule,
    pub include_toroidal_jacobian: bool,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            panels: 64,
            rule: Rule::GaussLegendre5,
            include_toroidal_jacobian: false,
        }
    }
}

impl QuadratureSpec {
    pub fn new(panels: usize, rule: Rule) -> Result<Self> {
        if panels == 0 {
            return Err(domain("quadrature needs at least one panel"));
        }
        Ok(Self {
            panels,
            rule,
            include_toroidal_jacobian: false,
        })
    }

    pub fn with_toroidal_jacobian(mut self, on: bool) -> Self {
        self.include_toroidal_jacobian = on;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralReport {
    /// As-integrated value.
    pub value: f64,
    /// The closed form the model states for this quantity.
    pub closed_form: f64,
    pub abs_error: f64,
    /// `value / closed_form`; `None` when the closed form is zero.
    pub discrepancy_factor: Option<f64>,
    /// Solid-torus result over the factorized one, present only when the
    /// toroidal Jacobian was requested and the factorized value is non-zero.
    pub jacobian_factor: Option<f64>,
}

impl IntegralReport {
    fn new(value: f64, closed_form: f64, jacobian_factor: Option<f64>) -> Self {
        Self {
            value,
            closed_form,
            abs_error: (value - closed_form).abs(),
            discrepancy_factor: (closed_form != 0.0).then(|| value / closed_form),
            jacobian_factor,
        }
    }
}

/// Composite quadrature of `f` over `[a, b]`.
pub fn integrate_line<F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(a < b) {
        return Err(domain(format!(
            "integration bounds must satisfy a < b, got [{a}, {b}]"
        )));
    }
    if spec.panels == 0 {
        return Err(domain("quadrature needs at least one panel"));
    }
    let eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::Evaluation { at: x, value: y })
        }
    };

    let width = (b - a) / spec.panels as f64;
    let mut total = 0.0;
    for i in 0..spec.panels {
        let lo = a + width * i as f64;
        let hi = if i + 1 == spec.panels {
            b
        } else {
            a + width * (i + 1) as f64
        };
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        let panel = match spec.rule {
            Rule::Midpoint => eval(mid)? * (hi - lo),
            Rule::GaussLegendre5 => {
                let mut acc = 0.0;
                for (x, w) in GL5_NODES.iter().zip(GL5_WEIGHTS.iter()) {
                    acc += w * eval(mid + half * x)?;
                }
                acc * half
            }
        };
        total += panel;
    }
    Ok(total)
}

fn check_shape(cfg: &FieldConfiguration, shape: &TorusShape) -> Result<()> {
    let ring = cfg.ring().ok_or_else(|| {
        Error::Unsupported(format!(
            "{} configuration has no torus support",
            cfg.kind.name()
        ))
    })?;
    if rel_diff(ring.radius, shape.r_s) > 1e-12 {
        return Err(domain(format!(
            "torus ring radius {} does not match the field ring radius {}",
            shape.r_s, ring.radius
        )));
    }
    Ok(())
}

/// Integrates `density(l)` over the support and the torus cross-section.
///
/// Returns the factorized value and, when requested, the ratio of the solid
/// torus integral to it.
fn torus_integral<F>(
    density: F,
    cfg: &FieldConfiguration,
    shape: &TorusShape,
    spec: &QuadratureSpec,
) -> Result<(f64, Option<f64>)>
where
    F: Fn(f64) -> f64,
{
    let (a, b) = cfg.support;
    let section_area = PI * shape.r_c * shape.r_c;
    let line = integrate_line(&density, a, b, spec)?;
    let factorized = section_area * line;
    if !spec.include_toroidal_jacobian {
        return Ok((factorized, None));
    }

    let section_spec = QuadratureSpec {
        panels: SECTION_PANELS,
        ..*spec
    };
    // Cross-section weight: integral of (1 + rho cos(theta) / r_s) rho.
    let section = integrate_line(
        |theta| {
            integrate_line(
                |rho| (1.0 + rho * theta.cos() / shape.r_s) * rho,
                0.0,
                shape.r_c,
                &section_spec,
            )
            .unwrap_or(f64::NAN)
        },
        0.0,
        2.0 * PI,
        &section_spec,
    )?;
    // The field is uniform over the section, so the solid integral factors as
    // (line integral) x (weighted section area).
    let solid = section * line;
    let factor = (factorized != 0.0).then(|| solid / factorized);
    Ok((solid, factor))
}

/// Total charge of a twirled configuration.
///
/// The closed form is zero for the full photon and `+-(1/pi) E_o S_c` for
/// the semi-photons.
pub fn total_charge(
    cfg: &FieldConfiguration,
    shape: &TorusShape,
    spec: &QuadratureSpec,
) -> Result<IntegralReport> {
    check_shape(cfg, shape)?;
    let (value, jacobian_factor) = torus_integral(
        |l| charge_density(cfg, l).unwrap_or(f64::NAN),
        cfg,
        shape,
        spec,
    )?;
    let section_area = PI * shape.r_c * shape.r_c;
    let closed_form = match cfg.kind {
        FieldKind::TwirledPhoton => 0.0,
        kind => kind.orientation() * cfg.amplitude * section_area / PI,
    };
    let jacobian_factor = if closed_form == 0.0 {
        None
    } else {
        jacobian_factor
    };
    Ok(IntegralReport::new(value, closed_form, jacobian_factor))
}

/// Total mass of a semi-photon; closed form `E_o^2 S_c / (4 omega c)`.
pub fn total_mass(
    cfg: &FieldConfiguration,
    shape: &TorusShape,
    spec: &QuadratureSpec,
) -> Result<IntegralReport> {
    if !cfg.kind.is_semi_photon() {
        return Err(Error::Unsupported(format!(
            "mass integral is defined for semi-photons, not {}",
            cfg.kind.name()
        )));
    }
    check_shape(cfg, shape)?;
    let c = cfg.speed;
    let (value, jacobian_factor) =
        torus_integral(|l| mass_density(&cfg.sample(l), c), cfg, shape, spec)?;
    let section_area = PI * shape.r_c * shape.r_c;
    let closed_form = cfg.amplitude * cfg.amplitude * section_area / (4.0 * cfg.omega * c);
    Ok(IntegralReport::new(value, closed_form, jacobian_factor))
}

/// Angular momentum `p r` of momentum `p` circulating at radius `r` (erg s).
pub fn angular_momentum(p: f64, r: f64) -> f64 {
    p * r
}
