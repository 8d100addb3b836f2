//! The built-in verification suite behind `vdw selfcheck`: ten numbered
//! criteria, each printing one pass/fail line. Every tolerance is pinned
//! here in code. The independent oracles (convergent series, the
//! Laplace-transform representation, the normal-mode closed form,
//! term-wise Gamma sums) are implemented in this module, separate from the
//! library evaluation paths they check.

use std::f64::consts::{FRAC_PI_2, PI};

use vdw_core::instantaneous::{
    exact_energy_normal_modes, exact_energy_spectral, london_energy, thresholds,
};
use vdw_core::kato::{
    build_coupled_pair, build_coupled_pair_3channel, kato_energy_coefficient,
    verify_fourth_order_subtraction,
};
use vdw_core::retarded::{
    crossover_curve, e4_energy_closed, e4_energy_reduced, e4_energy_tensor,
    replacement_london_energy,
};
use vdw_core::specfun::{
    aux_f, aux_g, cosine_integral, integrate_semi_infinite, sine_integral, QuadratureSpec,
    EULER_GAMMA,
};
use vdw_core::ModelParams;

use crate::svg;
use crate::sweeps::{self, Grid};

/// Anchor constants under test; parameterized so a deliberate perturbation
/// makes the corresponding criterion fail (exercised by the test suite).
#[derive(Debug, Clone, Copy)]
pub struct Anchors {
    pub london: f64,
    pub casimir_polder: f64,
}

impl Default for Anchors {
    fn default() -> Self {
        Self { london: 0.75, casimir_polder: 23.0 / (4.0 * PI) }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(id: usize, name: &'static str, passed: bool, detail: String) -> Self {
        Self { id, name, passed, detail }
    }
}

fn log_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let (la, lb) = (a.ln(), b.ln());
    (0..n).map(|i| (la + (lb - la) * i as f64 / (n - 1) as f64).exp()).collect()
}

/// 1. London constant: closed form at r = 1e-4 within rel 1e-4 of 3/4.
pub fn c01_london_constant(anchors: &Anchors) -> CriterionResult {
    let curve = e4_energy_closed(1e-4).expect("r > 0");
    let dev = (curve / anchors.london - 1.0).abs();
    CriterionResult::new(
        1,
        "london-constant",
        dev <= 1e-4,
        format!("|curve(1e-4)/(3/4) - 1| = {dev:.2e} (tol 1.0e-4)"),
    )
}

/// 2. Casimir-Polder constant: rel error of curve·r against 23/4π at
///    r = 100 (1%) and r = 1000 (0.1%).
pub fn c02_casimir_polder_constant(anchors: &Anchors) -> CriterionResult {
    let at_100 =
        (e4_energy_closed(100.0).expect("r > 0") * 100.0 / anchors.casimir_polder - 1.0).abs();
    let at_1000 =
        (e4_energy_closed(1000.0).expect("r > 0") * 1000.0 / anchors.casimir_polder - 1.0).abs();
    CriterionResult::new(
        2,
        "casimir-polder-constant",
        at_100 <= 1e-2 && at_1000 <= 1e-3,
        format!("rel dev {at_100:.2e} at r=100 (tol 1e-2), {at_1000:.2e} at r=1000 (tol 1e-3)"),
    )
}

/// 3. Route equivalence on a 48-point log grid over r in [1e-3, 1e3]:
///    reduced vs closed to rel 1e-8, tensor vs closed to rel 1e-6.
pub fn c03_route_equivalence() -> CriterionResult {
    let tight = QuadratureSpec::new(0.0, 1e-11, 100_000).expect("valid spec");
    let medium = QuadratureSpec::new(0.0, 1e-9, 100_000).expect("valid spec");
    let mut worst_reduced = 0.0f64;
    let mut worst_tensor = 0.0f64;
    for r in log_grid(1e-3, 1e3, 48) {
        let closed = e4_energy_closed(r).expect("r > 0");
        let reduced = e4_energy_reduced(r, &tight).expect("convergent");
        let tensor = e4_energy_tensor(r, &medium).expect("convergent");
        worst_reduced = worst_reduced.max(((reduced - closed) / closed).abs());
        worst_tensor = worst_tensor.max(((tensor - closed) / closed).abs());
    }
    CriterionResult::new(
        3,
        "route-equivalence",
        worst_reduced <= 1e-8 && worst_tensor <= 1e-6,
        format!(
            "worst rel dev: reduced {worst_reduced:.2e} (tol 1e-8), tensor {worst_tensor:.2e} (tol 1e-6)"
        ),
    )
}

/// 4. Slope crossover: slope in [-1-1e-3, 1e-3], plateau at the left
///    end, -1 at the right end, monotone nonincreasing on the grid.
pub fn c04_slope_crossover() -> CriterionResult {
    let curve = crossover_curve(1e-3, 1e3, 97).expect("valid grid");
    let in_range = curve.slope.iter().all(|&s| (-1.0 - 1e-3..=1e-3).contains(&s));
    let left_ok = curve.slope[0] >= -0.01;
    let right_ok = *curve.slope.last().expect("nonempty") <= -0.99;
    let monotone = curve.slope.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    CriterionResult::new(
        4,
        "slope-crossover",
        in_range && left_ok && right_ok && monotone,
        format!(
            "slope({:.0e}) = {:.2e}, slope({:.0e}) = {:.6}, range ok: {in_range}, monotone: {monotone}",
            curve.grid[0],
            curve.slope[0],
            curve.grid[96],
            curve.slope[96]
        ),
    )
}

/// 5. All-orders spectral integral vs the normal-mode oracle at rel 1e-10.
pub fn c05_spectral_vs_modes() -> CriterionResult {
    let spec = QuadratureSpec::default();
    let mut worst = 0.0f64;
    let mut im_clean = true;
    for &g in &[0.05, 0.1, 0.2, 0.4] {
        let s = exact_energy_spectral(g, &spec).expect("convergent");
        let m = exact_energy_normal_modes(g);
        worst = worst.max(((s.re - m.re) / m.re).abs());
        im_clean &= s.im == 0.0 && m.im == 0.0;
    }
    CriterionResult::new(
        5,
        "spectral-vs-normal-modes",
        worst <= 1e-10 && im_clean,
        format!("worst rel dev {worst:.2e} (tol 1e-10), imaginary parts exactly zero: {im_clean}"),
    )
}

/// 6. Vacuum-decay thresholds: im = 0 exactly through g = 1/2, im < 0
///    beyond, slope kink across g = 1, and the algebraic threshold radii.
pub fn c06_thresholds() -> CriterionResult {
    let real_below = [0.1, 0.3, 0.5].iter().all(|&g| exact_energy_normal_modes(g).im == 0.0);
    let decay_above = [0.6, 0.9].iter().all(|&g| exact_energy_normal_modes(g).im < 0.0);

    let h = 0.02;
    let im = |g: f64| exact_energy_normal_modes(g).im;
    let kink = (((im(1.0 + h) - im(1.0)) / h) - ((im(1.0) - im(1.0 - h)) / h)).abs() > 1.0;

    let q = (4.0 * PI).sqrt(); // alpha = 1
    let p = ModelParams::new(1.0, 1.0, 1.0, q, 1.0).expect("valid params");
    let t = thresholds(&p);
    let radii_ok = (t.r1 - 2f64.cbrt()).abs() <= 1e-14 && (t.r2 - 1.0).abs() <= 1e-14;
    let unit = thresholds(&ModelParams::unit());
    let radii_unit_ok = (unit.r1 - (1.0 / (2.0 * PI)).cbrt()).abs() <= 1e-14
        && (unit.r2 - (1.0 / (4.0 * PI)).cbrt()).abs() <= 1e-14;

    CriterionResult::new(
        6,
        "decay-thresholds",
        real_below && decay_above && kink && radii_ok && radii_unit_ok,
        format!(
            "im=0 below: {real_below}, im<0 above: {decay_above}, kink at g=1: {kink}, radii: {}",
            radii_ok && radii_unit_ok
        ),
    )
}

/// 7. Kato engine: orders 1-4 against the frozen series coefficients
///    and the fourth-order subtraction identity.
pub fn c07_kato_engine() -> CriterionResult {
    let g = 0.1f64;
    let (h0, hint) = build_coupled_pair_3channel(g, 4).expect("valid build");
    let e1 = kato_energy_coefficient(&h0, &hint, 1).expect("order 1");
    let e2 = kato_energy_coefficient(&h0, &hint, 2).expect("order 2");
    let e3 = kato_energy_coefficient(&h0, &hint, 3).expect("order 3");
    let e4 = kato_energy_coefficient(&h0, &hint, 4).expect("order 4");

    let e2_expected = -0.75 * g * g;
    let e4_expected = -45.0 / 64.0 * g.powi(4);
    let (pair_h0, pair_hint) = build_coupled_pair(g, 4).expect("valid build");
    let e4_pair = kato_energy_coefficient(&pair_h0, &pair_hint, 4).expect("order 4");
    let e4_pair_expected = -5.0 / 128.0 * g.powi(4);

    let identity = match verify_fourth_order_subtraction(&h0, &hint) {
        Ok(check) => (check.direct - (check.chained - check.subtraction)).abs() <= 1e-12,
        Err(_) => false,
    };

    let ok = e1.abs() <= 1e-14
        && (e2 / e2_expected - 1.0).abs() <= 1e-12
        && e3.abs() <= 1e-14
        && (e4 / e4_expected - 1.0).abs() <= 1e-10
        && (e4_pair / e4_pair_expected - 1.0).abs() <= 1e-10
        && identity;
    CriterionResult::new(
        7,
        "kato-engine",
        ok,
        format!(
            "E1 = {e1:.1e}, E2 dev {:.2e}, E3 = {e3:.1e}, E4 dev {:.2e}, pair E4 dev {:.2e}, identity: {identity}",
            (e2 / e2_expected - 1.0).abs(),
            (e4 / e4_expected - 1.0).abs(),
            (e4_pair / e4_pair_expected - 1.0).abs()
        ),
    )
}

// series oracle for Si
fn si_series_oracle(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut sign = 1.0;
    let mut power = x;
    let mut factorial = 1.0;
    for k in 0..80u32 {
        let n = (2 * k + 1) as f64;
        let term = sign * power / (n * factorial);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
        sign = -sign;
        power *= x * x;
        factorial *= (n + 1.0) * (n + 2.0);
    }
    sum
}

// series oracle for Ci
fn ci_series_oracle(x: f64) -> f64 {
    let mut sum = EULER_GAMMA + x.ln();
    let mut sign = -1.0;
    let mut power = x * x;
    let mut factorial = 2.0;
    for k in 1..80u32 {
        let n = (2 * k) as f64;
        let term = sign * power / (n * factorial);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-300) {
            break;
        }
        sign = -sign;
        power *= x * x;
        factorial *= (n + 1.0) * (n + 2.0);
    }
    sum
}

// Laplace-representation oracle for the auxiliary pair
fn aux_laplace_oracle(x: f64) -> (f64, f64) {
    let spec = QuadratureSpec::new(0.0, 1e-13, 20_000).expect("valid spec");
    let f = integrate_semi_infinite(|t| (-x * t).exp() / (1.0 + t * t), &spec)
        .expect("convergent")
        .value;
    let g = integrate_semi_infinite(|t| t * (-x * t).exp() / (1.0 + t * t), &spec)
        .expect("convergent")
        .value;
    (f, g)
}

/// 8. Special functions: series oracle on [1e-3, 4] to 1e-12, the
///    Laplace-representation oracle on [4, 1e3] to 1e-10, derivative
///    identities to rel 1e-6.
pub fn c08_special_functions() -> CriterionResult {
    let mut worst_series = 0.0f64;
    for x in log_grid(1e-3, 4.0, 41) {
        worst_series = worst_series
            .max((sine_integral(x).expect("domain") - si_series_oracle(x)).abs())
            .max((cosine_integral(x).expect("domain") - ci_series_oracle(x)).abs());
    }

    let mut worst_asym = 0.0f64;
    for x in log_grid(4.0, 1e3, 25) {
        let (f_ref, g_ref) = aux_laplace_oracle(x);
        let si_ref = FRAC_PI_2 - f_ref * x.cos() - g_ref * x.sin();
        let ci_ref = f_ref * x.sin() - g_ref * x.cos();
        worst_asym = worst_asym
            .max((sine_integral(x).expect("domain") - si_ref).abs())
            .max((cosine_integral(x).expect("domain") - ci_ref).abs());
    }

    let mut worst_deriv = 0.0f64;
    for x in log_grid(1e-3, 1e3, 64) {
        let h = 1e-5 * x;
        let fd_f = (aux_f(x + h).expect("domain") - aux_f(x - h).expect("domain")) / (2.0 * h);
        let fd_g = (aux_g(x + h).expect("domain") - aux_g(x - h).expect("domain")) / (2.0 * h);
        let minus_g = -aux_g(x).expect("domain");
        let f_minus = aux_f(x).expect("domain") - 1.0 / x;
        worst_deriv = worst_deriv
            .max((fd_f - minus_g).abs() / minus_g.abs().max(1e-12))
            .max((fd_g - f_minus).abs() / f_minus.abs().max(1e-12));
    }

    CriterionResult::new(
        8,
        "special-functions",
        worst_series <= 1e-12 && worst_asym <= 1e-10 && worst_deriv <= 1e-6,
        format!(
            "series dev {worst_series:.2e} (tol 1e-12), asymptotic dev {worst_asym:.2e} (tol 1e-10), derivative dev {worst_deriv:.2e} (tol 1e-6)"
        ),
    )
}

/// 9. Instantaneous-limit replacement of the field correlator
///    reproduces the London energy to rel 1e-10.
pub fn c09_replacement_consistency() -> CriterionResult {
    let spec = QuadratureSpec::default();
    let mut worst = 0.0f64;
    for &g in &[0.05, 0.2] {
        let repl = replacement_london_energy(g, &spec).expect("convergent");
        let london = london_energy(g).expect("valid coupling");
        worst = worst.max(((repl - london) / london).abs());
    }
    CriterionResult::new(
        9,
        "replacement-consistency",
        worst <= 1e-10,
        format!("worst rel dev {worst:.2e} (tol 1e-10)"),
    )
}

/// 10. Determinism: every sweep (and the figure) produces
///     byte-identical output when rendered twice.
pub fn c10_determinism() -> CriterionResult {
    let spec = QuadratureSpec::default();
    let params = ModelParams::unit();

    let render_all = || -> String {
        let mut blob = String::new();
        let g_grid = Grid::new(0.01, 0.9, 25).expect("valid grid");
        blob.push_str(&sweeps::london_sweep(&g_grid, &spec).expect("sweep").to_csv());
        let g_grid2 = Grid::new(0.01, 0.45, 12).expect("valid grid");
        blob.push_str(&sweeps::instantaneous_sweep(&g_grid2, &spec).expect("sweep").to_csv());
        let r_grid = Grid::new(1e-2, 1e2, 13).expect("valid grid");
        blob.push_str(&sweeps::retarded_sweep(&r_grid, &spec, &params).expect("sweep").to_csv());
        let c_grid = Grid::new(1e-3, 1e3, 97).expect("valid grid");
        blob.push_str(&sweeps::crossover_sweep(&c_grid).expect("sweep").to_csv());
        blob.push_str(&sweeps::kato_sweep(0.1, 4, 4).expect("sweep").to_csv());
        let fig_grid = Grid::new(1e-2, 1e2, 33).expect("valid grid");
        blob.push_str(&svg::render_crossover(
            &sweeps::crossover_data(&fig_grid).expect("figure data"),
        ));
        blob
    };

    let first = render_all();
    let second = render_all();
    let identical = first == second;
    CriterionResult::new(
        10,
        "determinism",
        identical,
        format!("two renders of all sweeps: {} bytes, identical: {identical}", first.len()),
    )
}

/// Run all ten criteria in order.
pub fn run_all(anchors: &Anchors) -> Vec<CriterionResult> {
    vec![
        c01_london_constant(anchors),
        c02_casimir_polder_constant(anchors),
        c03_route_equivalence(),
        c04_slope_crossover(),
        c05_spectral_vs_modes(),
        c06_thresholds(),
        c07_kato_engine(),
        c08_special_functions(),
        c09_replacement_consistency(),
        c10_determinism(),
    ]
}

/// One line per criterion plus a summary; the exit status is 0 only when
/// everything passed.
pub fn report(results: &[CriterionResult]) -> (String, bool) {
    let mut out = String::new();
    let mut all_passed = true;
    for r in results {
        all_passed &= r.passed;
        out.push_str(&format!(
            "{} {:2} {:<26} {}\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.detail
        ));
    }
    out.push_str(&format!(
        "selfcheck: {}/{} criteria passed\n",
        results.iter().filter(|r| r.passed).count(),
        results.len()
    ));
    (out, all_passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tampered_anchor_is_detected() {
        let bad = Anchors { london: 0.75, casimir_polder: 23.0 / (4.2 * PI) };
        let r = c02_casimir_polder_constant(&bad);
        assert!(!r.passed, "tampered constant must fail: {}", r.detail);
        let good = c02_casimir_polder_constant(&Anchors::default());
        assert!(good.passed, "{}", good.detail);

        let bad_london = Anchors { london: 0.7, casimir_polder: 23.0 / (4.0 * PI) };
        assert!(!c01_london_constant(&bad_london).passed);
    }

    #[test]
    fn report_lines() {
        let results = vec![
            CriterionResult::new(1, "a", true, "ok".into()),
            CriterionResult::new(2, "b", false, "bad".into()),
        ];
        let (text, all) = report(&results);
        assert!(!all);
        assert!(text.contains("PASS  1"));
        assert!(text.contains("FAIL  2"));
        assert!(text.contains("1/2 criteria passed"));
    }
}
