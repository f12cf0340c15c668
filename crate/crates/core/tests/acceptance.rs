//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};

use twirl::cli::{build, parse_args, render_config, Command};
use twirl::constants::{electron_scales, CODATA_2018};
use twirl::fields::{twirled_field, FieldKind};
use twirl::geometry::{frenet_at, normal_rate, ring_from_radius, TorusShape};
use twirl::lorentz::{invariant_sweep, WavePacket};
use twirl::model::{
    dispersion_omega, pair_threshold_photon, ring_magnetic_moment, semi_photon_model, split_photon,
    uncertainty_min_length, THOMAS_FACTOR,
};
use twirl::quadrature::{total_charge, QuadratureSpec};
use twirl::rel_diff;
use twirl::renorm::vacuum_polarization;
use twirl::report::{Cell, Section};

const K: twirl::constants::PhysicalConstants = CODATA_2018;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn bare_fine_structure() -> Verdict {
    let s = semi_photon_model(1.0, &K).unwrap();
    let exact = rel_diff(s.alpha, 2.0 / PI);
    let quoted = rel_diff(s.alpha, 0.637);
    verdict(
        exact < 1e-12 && quoted < 1e-3,
        format!(
            "alpha_s = {:.12}, rel to 2/pi {exact:.1e}, rel to 0.637 {quoted:.1e}",
            s.alpha
        ),
    )
}

fn bare_charge_ratio() -> Verdict {
    let s = semi_photon_model(1.0, &K).unwrap();
    let via_model = s.charge / K.e;
    let v = vacuum_polarization(2.0 / PI, &K).unwrap();
    let via_renorm = v.eps_v.sqrt();
    let agree = rel_diff(via_model, via_renorm);
    verdict(
        (via_model - 9.34).abs() <= 0.01 && (via_renorm - 9.34).abs() <= 0.01 && agree < 1e-6,
        format!(
            "q_s/e = {via_model:.6} (amplitude), {via_renorm:.6} (sqrt eps_v), rel {agree:.1e}"
        ),
    )
}

fn vacuum_permittivity() -> Verdict {
    let eps_v = vacuum_polarization(2.0 / PI, &K).unwrap().eps_v;
    let quoted = rel_diff(eps_v, 87.27);
    verdict(
        (eps_v - 87.24).abs() <= 0.09 && quoted < 1e-3,
        format!("eps_v = {eps_v:.4}, rel to 87.27 {quoted:.1e}"),
    )
}

fn photon_charge() -> Verdict {
    let s = semi_photon_model(1.0, &K).unwrap();
    let ring = ring_from_radius(s.radius, K.c).unwrap();
    let shape = TorusShape::new(s.radius, 1.0).unwrap();
    let spec = QuadratureSpec::default();
    let q = |kind| {
        let cfg = twirled_field(kind, s.amplitude, &ring).unwrap();
        total_charge(&cfg, &shape, &spec).unwrap().value
    };
    let photon = q(FieldKind::TwirledPhoton);
    let (plus, minus) = (q(FieldKind::SemiPhotonPlus), q(FieldKind::SemiPhotonMinus));
    let bound = 1e-12 * s.amplitude * s.section_area;
    let (sp, sm) = split_photon(&pair_threshold_photon(&K), &K).unwrap();
    verdict(
        photon.abs() <= bound && plus + minus == 0.0 && sp.charge + sm.charge == 0.0,
        format!(
            "Q_photon = {photon:.3e} statC (bound {bound:.3e}), Q+ + Q- = {:e}",
            plus + minus
        ),
    )
}

fn spin_ledger() -> Verdict {
    let p = pair_threshold_photon(&K);
    let (plus, minus) = split_photon(&p, &K).unwrap();
    let torus_j = p.mass_equivalent * p.radius * p.radius * p.omega;
    let ok = rel_diff(p.spin, K.hbar) < 1e-12
        && rel_diff(plus.spin, 0.5 * K.hbar) < 1e-12
        && plus.spin + minus.spin == p.spin
        && rel_diff(torus_j, K.hbar) < 1e-12;
    verdict(
        ok,
        format!(
            "sigma_p/hbar = {:.15}, sigma_s/hbar = {:.15}, m r^2 omega/hbar = {:.15}",
            p.spin / K.hbar,
            plus.spin / K.hbar,
            torus_j / K.hbar
        ),
    )
}

fn radii() -> Verdict {
    let p = pair_threshold_photon(&K);
    let s = semi_photon_model(1.0, &K).unwrap();
    let expected = K.hbar / (2.0 * K.m_e * K.c);
    let v = vacuum_polarization(s.alpha, &K).unwrap();
    let r_c = electron_scales(&K).r_c;
    let a = rel_diff(s.radius, expected).max(rel_diff(p.radius, expected));
    let b = rel_diff(v.r_bare, r_c);
    verdict(
        a < 1e-14 && b < 1e-9,
        format!(
            "r_s = r_p = {:.10e} cm (rel {a:.1e}), r_bare/r_C - 1 = {b:.1e}",
            s.radius
        ),
    )
}

fn magnetic_moment() -> Verdict {
    let s = semi_photon_model(1.0, &K).unwrap();
    let half_bohr = K.e * K.hbar / (4.0 * K.m_e * K.c);
    let mu = ring_magnetic_moment(K.e, s.omega, s.radius, K.c);
    let frozen = 4.637_005_036_339_9e-21;

    let moment = |args: &[&str]| -> f64 {
        let cfg = parse_args(args.iter().copied()).unwrap();
        let o = build(&cfg).unwrap();
        match o
            .report
            .section("semi_photon")
            .and_then(|r| r.get("magnetic_moment_unit_charge"))
        {
            Some(Cell::Number(x)) => *x,
            other => panic!("missing moment: {other:?}"),
        }
    };
    let plain = moment(&["twirl", "semiphoton"]);
    let thomas = moment(&["twirl", "semiphoton", "--thomas"]);
    let model_thomas = s.with_thomas().magnetic_moment / s.magnetic_moment;
    let ok = rel_diff(mu, half_bohr) < 1e-6
        && rel_diff(mu, frozen) < 1e-6
        && rel_diff(plain, frozen) < 1e-6
        && rel_diff(thomas, 2.0 * frozen) < 1e-6
        && model_thomas == THOMAS_FACTOR;
    verdict(
        ok,
        format!("mu(q = e) = {mu:.6e} erg/G, with --thomas {thomas:.6e} erg/G"),
    )
}

fn lorentz_sweep() -> Verdict {
    let packet = WavePacket::from_photon(&pair_threshold_photon(&K));
    let betas = [-0.99, -0.9, -0.5, -0.1, 0.1, 0.5, 0.9, 0.99];
    let sweep = invariant_sweep(&packet, &betas).unwrap();
    let rest = packet.invariants();
    let mut worst: f64 = 0.0;
    let mut c2_hbar: f64 = 0.0;
    for f in &sweep.frames {
        worst = worst
            .max(rel_diff(f.constants.c1, rest.c1))
            .max(rel_diff(f.constants.c2, rest.c2))
            .max(rel_diff(f.constants.c3, rest.c3));
        c2_hbar = c2_hbar.max(rel_diff(f.constants.c2, K.hbar));
    }
    verdict(
        worst < 1e-12 && sweep.max_deviation < 1e-12 && c2_hbar < 1e-12,
        format!("max ratio deviation {worst:.1e}, max |C2/hbar - 1| {c2_hbar:.1e}"),
    )
}

fn dispersion() -> Verdict {
    let rest = dispersion_omega(0.0, K.m_e, &K);
    let a = rel_diff(rest, K.m_e * K.c * K.c / K.hbar);
    let mut light_exact = true;
    for k in [1.0, 3.7e4, 5.179_5e10, 2.0e13] {
        light_exact &= dispersion_omega(k, 0.0, &K) == K.c * k;
    }
    verdict(
        a < 1e-12 && light_exact,
        format!(
            "omega(0, m_e) = {rest:.10e} rad/s (rel {a:.1e}), omega(k, 0) == c k: {light_exact}"
        ),
    )
}

/// `|D_h - D|` where `D_h` is the central difference of the centripetal
/// normal over a dimensionless time step `h = omega dt`, evaluated in 256-bit
/// arithmetic, and `D` is the library's `normal_rate / (v K)`.
fn frenet_error(h: f64) -> f64 {
    let p = 256;
    let rm = RoundingMode::ToEven;
    let mut cc = Consts::new().unwrap();
    let s = semi_photon_model(1.0, &K).unwrap();
    let ring = ring_from_radius(s.radius, K.c).unwrap();
    let l0 = 0.3 * ring.circumference;
    let phi0 = ring.angle_at(l0);

    let big = |x: f64| BigFloat::from_f64(x, p);
    let to_f64 = |x: &BigFloat, cc: &mut Consts| -> f64 {
        x.format(Radix::Dec, rm, cc).unwrap().parse().unwrap()
    };
    let phi_p = big(phi0).add(&big(h), p, rm);
    let phi_m = big(phi0).sub(&big(h), p, rm);
    let two_h = big(2.0 * h);
    // n = -(cos phi, sin phi)
    let dx = phi_p
        .cos(p, rm, &mut cc)
        .sub(&phi_m.cos(p, rm, &mut cc), p, rm)
        .div(&two_h, p, rm)
        .neg();
    let dy = phi_p
        .sin(p, rm, &mut cc)
        .sub(&phi_m.sin(p, rm, &mut cc), p, rm)
        .div(&two_h, p, rm)
        .neg();
    let fd = [to_f64(&dx, &mut cc), to_f64(&dy, &mut cc)];

    let exact = normal_rate(&ring, ring.speed, l0) / (ring.speed * ring.curvature);
    let tangent = frenet_at(&ring, l0).tangent;
    // The library rate must be -v K tau.
    assert!((exact + tangent).norm() < 1e-15);
    (fd[0] - exact.x).hypot(fd[1] - exact.y)
}

fn frenet_convergence() -> Verdict {
    let errs: Vec<f64> = [1e-4, 1e-5, 1e-6].into_iter().map(frenet_error).collect();
    let r1 = errs[0] / errs[1];
    let r2 = errs[1] / errs[2];
    let ok = (50.0..=200.0).contains(&r1) && (50.0..=200.0).contains(&r2);
    verdict(
        ok,
        format!(
            "errors {:.3e}, {:.3e}, {:.3e}; ratios {r1:.2}, {r2:.2}",
            errs[0], errs[1], errs[2]
        ),
    )
}

fn quadrature_audit() -> Verdict {
    let cfg = parse_args(["twirl", "consistency"]).unwrap();
    assert_eq!(cfg.command, Command::Consistency);
    let o = build(&cfg).unwrap();
    let Some(Section::Table { rows, .. }) = o.report.section("consistency") else {
        return verdict(false, "no consistency table");
    };
    let Some(row) = rows
        .iter()
        .find(|r| r[0] == Cell::Text("semi_photon_charge".into()))
    else {
        return verdict(false, "no semi-photon charge row");
    };
    let (Cell::Number(integrated), Cell::Number(closed), Cell::Number(factor)) =
        (&row[2], &row[3], &row[4])
    else {
        return verdict(false, format!("unexpected cells {row:?}"));
    };
    let (text, code) = render_config(&cfg);
    let line = text
        .lines()
        .find(|l| l.contains("semi_photon_charge"))
        .unwrap_or("");
    let shows_both = line.contains(&twirl::report::fmt_sig(*integrated, 6))
        && line.contains(&twirl::report::fmt_sig(*closed, 6))
        && line.contains("0.500000");
    verdict(
        (factor - 0.5).abs() < 1e-12 && shows_both && code == 0,
        format!("integrated {integrated:.6e} statC, closed form {closed:.6e} statC, factor {factor:.15}"),
    )
}

fn uncertainty_bound() -> Verdict {
    let p = pair_threshold_photon(&K);
    let b = uncertainty_min_length(2.0 * K.m_e * K.c * K.c, &K).unwrap();
    let a = rel_diff(b.lambda_min, p.wavelength);
    let forms = rel_diff(b.lambda_min, b.lambda_min_alt);
    verdict(
        a < 1e-12 && forms < 1e-9,
        format!(
            "lambda_min = {:.10e} cm (rel to lambda_p {a:.1e}), forms rel {forms:.1e}",
            b.lambda_min
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("bare fine-structure constant", bare_fine_structure),
        ("bare charge ratio", bare_charge_ratio),
        ("vacuum dielectric constant", vacuum_permittivity),
        ("full-photon charge", photon_charge),
        ("spin ledger", spin_ledger),
        ("radii", radii),
        ("magnetic moment", magnetic_moment),
        ("Lorentz sweep", lorentz_sweep),
        ("dispersion", dispersion),
        ("Frenet normal rate", frenet_convergence),
        ("quadrature audit", quadrature_audit),
        ("uncertainty bound", uncertainty_bound),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        let tag = if v.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2}. {name}: {}", i + 1, v.detail);
        if !v.ok {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
