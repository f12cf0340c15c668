//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a computed check fails, 2 on usage
//! errors, 3 when `--out` cannot be written.

use std::f64::consts::PI;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constants::{electron_scales, PhysicalConstants, CODATA_2018};
use crate::error::Result;
use crate::fields::{displacement_current, sample_grid, twirled_field, FieldKind};
use crate::geometry::{ring_from_radius, TorusShape};
use crate::lorentz::{invariant_sweep, WavePacket};
use crate::model::{
    dispersion_omega, pair_threshold_photon, ring_magnetic_moment, semi_photon_model,
    uncertainty_min_length, THOMAS_FACTOR,
};
use crate::quadrature::{total_charge, total_mass, QuadratureSpec, Rule};
use crate::rel_diff;
use crate::renorm::vacuum_polarization;
use crate::report::{render, Cell, Format, Report, Section};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Largest invariant-ratio deviation `invariants` accepts.
pub const INVARIANT_TOLERANCE: f64 = 1e-9;

pub const DEFAULT_BETA_GRID: &str = "-0.99,-0.9,-0.5,-0.1,0,0.1,0.5,0.9,0.99";

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Constants,
    Photon,
    SemiPhoton,
    Invariants { betas: Vec<f64> },
    Fields { kind: FieldKind, samples: usize },
    Consistency,
    Dispersion { k_wave: f64, mass: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub zeta: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub quadrature: QuadratureSpec,
    pub thomas: bool,
}

#[derive(Parser, Debug)]
#[command(
    name = "twirl",
    version,
    about = "Toroidal photon and electron-positron pair model in Gaussian CGS units",
    arg_required_else_help = true
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Output format [default: csv for `fields`, table otherwise]
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Cross-section ratio r_c / r_s, in (0, 1]
    #[arg(long, global = true, default_value_t = 1.0, value_parser = parse_zeta)]
    zeta: f64,
    /// Quadrature panel count
    #[arg(long, global = true, default_value_t = 64, value_parser = parse_panels)]
    panels: usize,
    /// Quadrature rule
    #[arg(long, global = true, value_enum, default_value_t = RuleArg::Gl5)]
    rule: RuleArg,
    /// Integrate over the solid torus with its Jacobian
    #[arg(long, global = true)]
    jacobian: bool,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Physical constants and electron length scales
    Constants,
    /// The pair-threshold photon
    Photon,
    /// Semi-photon record with its renormalization block
    Semiphoton {
        /// Double the magnetic moment for the Thomas precession
        #[arg(long)]
        thomas: bool,
    },
    /// Invariant ratios of the photon packet across collinear boosts
    Invariants {
        /// Comma-separated boost speeds, each |beta| < 1
        #[arg(long, default_value = DEFAULT_BETA_GRID, value_parser = parse_beta_grid, allow_hyphen_values = true)]
        beta_grid: BetaGrid,
    },
    /// Sample E, H and the displacement current along the ring
    Fields {
        #[arg(long, value_enum, default_value_t = KindArg::Photon)]
        kind: KindArg,
        /// Number of samples over the support, endpoints included
        #[arg(long, default_value_t = 65, value_parser = parse_samples)]
        samples: usize,
    },
    /// Integrated charge and mass against their closed forms
    Consistency,
    /// Plane-wave dispersion omega(k, m)
    Dispersion {
        /// Wave number (1/cm)
        #[arg(long, default_value_t = 0.0, value_parser = parse_k_wave, allow_hyphen_values = true)]
        k_wave: f64,
        /// Rest mass (g) [default: electron mass]
        #[arg(long, value_parser = parse_mass)]
        mass: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RuleArg {
    /// Composite five-point Gauss-Legendre
    Gl5,
    /// Composite midpoint
    Midpoint,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Photon,
    Semiplus,
    Semiminus,
}

#[derive(Debug, Clone, PartialEq)]
struct BetaGrid(Vec<f64>);

fn parse_f64(s: &str) -> std::result::Result<f64, String> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not a number"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

fn parse_zeta(s: &str) -> std::result::Result<f64, String> {
    let z = parse_f64(s)?;
    if z > 0.0 && z <= 1.0 {
        Ok(z)
    } else {
        Err(format!("zeta must lie in (0, 1], got {z}"))
    }
}

fn parse_panels(s: &str) -> std::result::Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("panels must be an integer >= 1, got `{s}`")),
    }
}

fn parse_samples(s: &str) -> std::result::Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(n) if n >= 2 => Ok(n),
        _ => Err(format!("samples must be an integer >= 2, got `{s}`")),
    }
}

fn parse_beta_grid(s: &str) -> std::result::Result<BetaGrid, String> {
    let betas = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let b = parse_f64(t)?;
            if b.abs() < 1.0 {
                Ok(b)
            } else {
                Err(format!("beta must satisfy |beta| < 1, got {b}"))
            }
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if betas.is_empty() {
        return Err("beta grid is empty".into());
    }
    Ok(BetaGrid(betas))
}

fn parse_k_wave(s: &str) -> std::result::Result<f64, String> {
    let k = parse_f64(s)?;
    if k >= 0.0 {
        Ok(k)
    } else {
        Err(format!("wave number must be non-negative, got {k}"))
    }
}

fn parse_mass(s: &str) -> std::result::Result<f64, String> {
    let m = parse_f64(s)?;
    if m >= 0.0 {
        Ok(m)
    } else {
        Err(format!("mass must be non-negative, got {m}"))
    }
}

/// Parses `argv` (including the program name) into a validated config.
pub fn parse_args<I, T>(argv: I) -> std::result::Result<RunConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let g = cli.global;
    let mut thomas = false;
    let command = match cli.command {
        Sub::Constants => Command::Constants,
        Sub::Photon => Command::Photon,
        Sub::Semiphoton { thomas: t } => {
            thomas = t;
            Command::SemiPhoton
        }
        Sub::Invariants { beta_grid } => Command::Invariants { betas: beta_grid.0 },
        Sub::Fields { kind, samples } => Command::Fields {
            kind: match kind {
                KindArg::Photon => FieldKind::TwirledPhoton,
                KindArg::Semiplus => FieldKind::SemiPhotonPlus,
                KindArg::Semiminus => FieldKind::SemiPhotonMinus,
            },
            samples,
        },
        Sub::Consistency => Command::Consistency,
        Sub::Dispersion { k_wave, mass } => Command::Dispersion {
            k_wave,
            mass: mass.unwrap_or(CODATA_2018.m_e),
        },
    };
    let format = match g.format {
        Some(FormatArg::Table) => Format::Table,
        Some(FormatArg::Json) => Format::Json,
        Some(FormatArg::Csv) => Format::Csv,
        None if matches!(command, Command::Fields { .. }) => Format::Csv,
        None => Format::Table,
    };
    let rule = match g.rule {
        RuleArg::Gl5 => Rule::GaussLegendre5,
        RuleArg::Midpoint => Rule::Midpoint,
    };
    let quadrature = QuadratureSpec::new(g.panels, rule)
        .map_err(|e| clap::Error::raw(clap::error::ErrorKind::ValueValidation, e.to_string()))?
        .with_toroidal_jacobian(g.jacobian);
    Ok(RunConfig {
        command,
        zeta: g.zeta,
        format,
        out: g.out,
        quadrature,
        thomas,
    })
}

/// A built report and whether its checks passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Report,
    pub passed: bool,
    /// Human-readable descriptions of failed checks.
    pub failures: Vec<String>,
}

struct Checks(Vec<String>);

impl Checks {
    fn new() -> Self {
        Checks(Vec::new())
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.0.push(what.into());
        }
    }

    fn finish(self, report: Report) -> Outcome {
        Outcome {
            report,
            passed: self.0.is_empty(),
            failures: self.0,
        }
    }
}

/// Computes the report for `cfg` without doing any I/O.
pub fn build(cfg: &RunConfig) -> Result<Outcome> {
    let k = CODATA_2018;
    match &cfg.command {
        Command::Constants => constants_report(&k),
        Command::Photon => photon_report(&k),
        Command::SemiPhoton => semi_photon_report(cfg, &k),
        Command::Invariants { betas } => invariants_report(betas, &k),
        Command::Fields { kind, samples } => fields_report(cfg, *kind, *samples, &k),
        Command::Consistency => consistency_report(cfg, &k),
        Command::Dispersion { k_wave, mass } => dispersion_report(*k_wave, *mass, &k),
    }
}

fn constants_report(k: &PhysicalConstants) -> Result<Outcome> {
    let scales = electron_scales(k);
    let alpha_from_charge = k.fine_structure_from_charge();
    let mut checks = Checks::new();
    checks.expect(
        rel_diff(alpha_from_charge, k.alpha_exp) < 1e-9,
        "fine structure from (e, hbar, c) differs from the stored value",
    );
    checks.expect(
        rel_diff(k.alpha_exp * scales.lambda_bar_c, scales.r_0) < 1e-9,
        "alpha * reduced Compton wavelength differs from r_0",
    );
    let mut report = Report::new();
    report.add(
        Section::record(
            "constants",
            "Physical constants (CODATA 2018, Gaussian CGS)",
        )
        .row("c", k.c, "cm/s")
        .row("hbar", k.hbar, "erg s")
        .row("h", k.h, "erg s")
        .row("e", k.e, "statC")
        .row("m_e", k.m_e, "g")
        .row("alpha_exp", k.alpha_exp, "")
        .row("alpha_from_charge", alpha_from_charge, "")
        .row("electron_rest_energy", k.electron_rest_energy(), "erg")
        .row("r_0", scales.r_0, "cm")
        .row("lambda_bar_c", scales.lambda_bar_c, "cm")
        .row("r_c", scales.r_c, "cm"),
    );
    Ok(checks.finish(report))
}

fn photon_report(k: &PhysicalConstants) -> Result<Outcome> {
    let p = pair_threshold_photon(k);
    let bound = uncertainty_min_length(p.energy, k)?;
    let torus_j = p.mass_equivalent * p.radius * p.radius * p.omega;
    let mut checks = Checks::new();
    checks.expect(
        rel_diff(p.spin, k.hbar) < 1e-12,
        "photon spin differs from hbar",
    );
    checks.expect(
        rel_diff(torus_j, k.hbar) < 1e-12,
        "m r^2 omega differs from hbar",
    );
    checks.expect(
        rel_diff(bound.lambda_min, p.wavelength) < 1e-12,
        "uncertainty bound differs from the photon wavelength",
    );
    let mut report = Report::new();
    report.add(
        Section::record("photon", "Pair-threshold photon")
            .row("energy", p.energy, "erg")
            .row("momentum", p.momentum, "g cm/s")
            .row("omega", p.omega, "rad/s")
            .row("frequency", p.frequency, "1/s")
            .row("wavelength", p.wavelength, "cm")
            .row("radius", p.radius, "cm")
            .row("section_area", p.section_area, "cm^2")
            .row("volume", p.volume, "cm^3")
            .row("spin", p.spin, "erg s")
            .row("spin_over_hbar", p.spin / k.hbar, "")
            .row("torus_angular_momentum", torus_j, "erg s")
            .row("mass_equivalent", p.mass_equivalent, "g")
            .row("count", p.count, "")
            .row("lambda_min", bound.lambda_min, "cm")
            .row("lambda_min_alt", bound.lambda_min_alt, "cm"),
    );
    Ok(checks.finish(report))
}

fn semi_photon_report(cfg: &RunConfig, k: &PhysicalConstants) -> Result<Outcome> {
    let mut s = semi_photon_model(cfg.zeta, k)?;
    if cfg.thomas {
        s = s.with_thomas();
    }
    let two_over_pi_z2 = 2.0 / PI * cfg.zeta * cfg.zeta;
    let mut unit_moment = ring_magnetic_moment(k.e, s.omega, s.radius, k.c);
    if cfg.thomas {
        unit_moment *= THOMAS_FACTOR;
    }
    let mut checks = Checks::new();
    checks.expect(
        rel_diff(s.alpha, two_over_pi_z2) < 1e-12,
        "alpha_s differs from (2/pi) zeta^2",
    );
    checks.expect(
        rel_diff(s.spin, 0.5 * k.hbar) < 1e-12,
        "semi-photon spin differs from hbar/2",
    );

    let mut report = Report::new();
    report.add(
        Section::record("semi_photon", "Semi-photon")
            .row("zeta", s.zeta, "")
            .row("amplitude", s.amplitude, "statV/cm")
            .row("radius", s.radius, "cm")
            .row("omega", s.omega, "rad/s")
            .row("charge", s.charge, "statC")
            .row("charge_over_e", s.charge / k.e, "")
            .row("mass", s.mass, "g")
            .row("alpha", s.alpha, "")
            .row("spin", s.spin, "erg s")
            .row("spin_over_hbar", s.spin / k.hbar, "")
            .row("magnetic_moment", s.magnetic_moment, "erg/G")
            .row("magnetic_moment_unit_charge", unit_moment, "erg/G")
            .row("thomas", if s.thomas { "on" } else { "off" }, "")
            .row("section_area", s.section_area, "cm^2")
            .row("volume", s.volume, "cm^3"),
    );
    report.add(
        Section::record("zitterbewegung", "Zitterbewegung")
            .row("omega_z", s.omega, "rad/s")
            .row("r_z", s.radius, "cm"),
    );

    let renorm = match vacuum_polarization(s.alpha, k) {
        Ok(v) => {
            checks.expect(
                rel_diff(v.q_bare, s.charge) < 1e-6,
                "bare charge from eps_v differs from the model charge",
            );
            checks.expect(
                rel_diff(v.r_bare, electron_scales(k).r_c) < 1e-9,
                "bare radius differs from the Compton length",
            );
            Section::record("renormalization", "Renormalization")
                .row("alpha_bare", v.alpha_bare, "")
                .row("alpha_exp", v.alpha_exp, "")
                .row("eps_v", v.eps_v, "")
                .row("q_bare", v.q_bare, "statC")
                .row("q_bare_over_e", v.q_bare / k.e, "")
                .row("q_exp", v.q_exp, "statC")
                .row("q_screening", v.q_screening(), "statC")
                .row("r_0", v.r_0, "cm")
                .row("r_bare", v.r_bare, "cm")
        }
        Err(_) => Section::record("renormalization", "Renormalization").row(
            "note",
            "alpha_s does not exceed alpha_exp; no screening applies",
            "",
        ),
    };
    report.add(renorm);
    Ok(checks.finish(report))
}

fn invariants_report(betas: &[f64], k: &PhysicalConstants) -> Result<Outcome> {
    let packet = WavePacket::from_photon(&pair_threshold_photon(k));
    let sweep = invariant_sweep(&packet, betas)?;
    let mut table = Section::table(
        "frames",
        "Boosted frames",
        &[
            ("beta", ""),
            ("omega", "rad/s"),
            ("amplitude", "statV/cm"),
            ("energy", "erg"),
            ("volume", "cm^3"),
            ("c1", "statV s/cm"),
            ("c2", "erg s"),
            ("c3", "cm^3/s"),
        ],
    );
    for f in &sweep.frames {
        table.push(vec![
            f.beta.into(),
            f.omega.into(),
            f.amplitude.into(),
            f.energy.into(),
            f.volume.into(),
            f.constants.c1.into(),
            f.constants.c2.into(),
            f.constants.c3.into(),
        ]);
    }
    let mut checks = Checks::new();
    checks.expect(
        sweep.max_deviation <= INVARIANT_TOLERANCE,
        format!(
            "invariant deviation {:e} at beta {} exceeds {:e}",
            sweep.max_deviation, sweep.worst.beta, INVARIANT_TOLERANCE
        ),
    );
    let mut report = Report::new();
    report.add(table);
    report.add(
        Section::record("summary", "Summary")
            .row("max_deviation", sweep.max_deviation, "")
            .row("worst_beta", sweep.worst.beta, "")
            .row("c2_spread", sweep.c2_spread, "")
            .row("tolerance", INVARIANT_TOLERANCE, "")
            .row(
                "status",
                if checks.0.is_empty() { "pass" } else { "fail" },
                "",
            ),
    );
    Ok(checks.finish(report))
}

fn fields_report(
    cfg: &RunConfig,
    kind: FieldKind,
    samples: usize,
    k: &PhysicalConstants,
) -> Result<Outcome> {
    let s = semi_photon_model(cfg.zeta, k)?;
    let ring = ring_from_radius(s.radius, k.c)?;
    let field = twirled_field(kind, s.amplitude, &ring)?;
    let mut table = Section::table(
        "fields",
        &format!("Field samples ({})", kind.name()),
        &[
            ("l", "cm"),
            ("x", "cm"),
            ("y", "cm"),
            ("z", "cm"),
            ("Ex", "statV/cm"),
            ("Ey", "statV/cm"),
            ("Ez", "statV/cm"),
            ("Hx", "G"),
            ("Hy", "G"),
            ("Hz", "G"),
            ("jn", "statA/cm^2"),
            ("jtau", "statA/cm^2"),
        ],
    );
    for p in sample_grid(&field, samples)? {
        let j = displacement_current(&field, p.l)?;
        table.push(
            [
                p.l,
                p.position.x,
                p.position.y,
                p.position.z,
                p.e.x,
                p.e.y,
                p.e.z,
                p.h.x,
                p.h.y,
                p.h.z,
                j.j_n,
                j.j_tau,
            ]
            .into_iter()
            .map(Cell::Number)
            .collect(),
        );
    }
    let mut report = Report::new();
    report.add(table);
    Ok(Checks::new().finish(report))
}

fn consistency_report(cfg: &RunConfig, k: &PhysicalConstants) -> Result<Outcome> {
    let s = semi_photon_model(cfg.zeta, k)?;
    let ring = ring_from_radius(s.radius, k.c)?;
    let shape = TorusShape::new(s.radius, cfg.zeta)?;
    let spec = &cfg.quadrature;
    let photon = twirled_field(FieldKind::TwirledPhoton, s.amplitude, &ring)?;
    let plus = twirled_field(FieldKind::SemiPhotonPlus, s.amplitude, &ring)?;
    let rows = [
        (
            "photon_charge",
            "statC",
            total_charge(&photon, &shape, spec)?,
        ),
        (
            "semi_photon_charge",
            "statC",
            total_charge(&plus, &shape, spec)?,
        ),
        ("semi_photon_mass", "g", total_mass(&plus, &shape, spec)?),
    ];
    let mut columns = vec![
        ("quantity", ""),
        ("unit", ""),
        ("integrated", ""),
        ("closed_form", ""),
        ("discrepancy_factor", ""),
    ];
    if spec.include_toroidal_jacobian {
        columns.push(("jacobian_factor", ""));
    }
    let mut table = Section::table(
        "consistency",
        "Integrated values against closed forms",
        &columns,
    );
    for (name, unit, r) in &rows {
        let mut cells = vec![
            Cell::from(*name),
            Cell::from(*unit),
            r.value.into(),
            r.closed_form.into(),
            r.discrepancy_factor.into(),
        ];
        if spec.include_toroidal_jacobian {
            cells.push(r.jacobian_factor.into());
        }
        table.push(cells);
    }
    let mut checks = Checks::new();
    let scale = s.amplitude * s.section_area;
    checks.expect(
        rows[0].2.value.abs() <= 1e-12 * scale,
        format!(
            "photon charge {:e} is not zero to 1e-12 E_o S_c",
            rows[0].2.value
        ),
    );
    let mut report = Report::new();
    report.add(table);
    report.add(
        Section::record("quadrature", "Quadrature")
            .row("rule", spec.rule.name(), "")
            .row("panels", spec.panels as i64, "")
            .row(
                "toroidal_jacobian",
                if spec.include_toroidal_jacobian {
                    "on"
                } else {
                    "off"
                },
                "",
            )
            .row("zeta", cfg.zeta, ""),
    );
    Ok(checks.finish(report))
}

fn dispersion_report(k_wave: f64, mass: f64, k: &PhysicalConstants) -> Result<Outcome> {
    let omega = dispersion_omega(k_wave, mass, k);
    let mut report = Report::new();
    report.add(
        Section::record("dispersion", "Dispersion")
            .row("k_wave", k_wave, "1/cm")
            .row("mass", mass, "g")
            .row("omega", omega, "rad/s")
            .row("omega_rest", mass * k.c * k.c / k.hbar, "rad/s")
            .row("omega_light", k.c * k_wave, "rad/s"),
    );
    Ok(Checks::new().finish(report))
}

/// Builds and renders `cfg`, returning the output text and exit code.
/// On a library error the text is the error message.
pub fn render_config(cfg: &RunConfig) -> (String, i32) {
    match build(cfg) {
        Ok(outcome) => {
            let code = if outcome.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            (render(&outcome.report, cfg.format), code)
        }
        Err(e) => (format!("error: {e}\n"), EXIT_CHECK_FAILED),
    }
}

/// Runs `cfg`, writing to `--out` or stdout, and returns the exit code.
pub fn run(cfg: &RunConfig) -> i32 {
    let outcome = match build(cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CHECK_FAILED;
        }
    };
    let text = render(&outcome.report, cfg.format);
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, text.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return EXIT_IO;
    }
    for f in &outcome.failures {
        eprintln!("check failed: {f}");
    }
    if outcome.passed {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_args(argv) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            }
        }
    }
}
