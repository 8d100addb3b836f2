//! The normal-mode closed form is the oracle for the all-orders spectral
//! integral, and the London limit anchors both.

use vdw_core::instantaneous::{
    exact_energy_normal_modes, exact_energy_spectral, london_energy, london_series_coefficients,
};
use vdw_core::specfun::QuadratureSpec;

#[test]
fn spectral_equals_normal_modes_below_threshold() {
    let spec = QuadratureSpec::default();
    for i in 0..32 {
        let g = 0.49 * (i as f64 + 1.0) / 32.0;
        let s = exact_energy_spectral(g, &spec).unwrap();
        let m = exact_energy_normal_modes(g);
        assert!(
            (s.re - m.re).abs() <= 1e-10 * m.re.abs(),
            "g = {g}: spectral {:.15e} vs modes {:.15e}",
            s.re,
            m.re
        );
        assert_eq!(s.im, 0.0);
        assert_eq!(m.im, 0.0);
    }
}

#[test]
fn london_is_the_leading_order() {
    // ratio -> 1 with O(g^2) corrections: |ratio - 1| <= 10 g^2
    for &g in &[1e-2, 1e-3] {
        let exact = exact_energy_normal_modes(g).re;
        let london = london_energy(g).unwrap();
        let ratio = exact / london;
        assert!(
            (ratio - 1.0).abs() <= 10.0 * g * g,
            "g = {g}: ratio deviates by {:e}",
            (ratio - 1.0).abs()
        );
    }
}

#[test]
fn imaginary_part_thresholds() {
    // identically zero up to g = 1/2
    for &g in &[0.0, 0.1, 0.3, 0.5] {
        assert_eq!(exact_energy_normal_modes(g).im, 0.0, "g = {g}");
    }
    // strictly negative beyond
    for &g in &[0.500001, 0.6, 0.9, 1.0] {
        assert!(exact_energy_normal_modes(g).im < 0.0, "g = {g}");
    }
}

#[test]
fn second_channel_kink_at_unit_coupling() {
    // the slope of im(g) jumps when the transverse channels open at g = 1
    let h = 0.02;
    let im = |g: f64| exact_energy_normal_modes(g).im;
    let slope_left = (im(1.0) - im(1.0 - h)) / h;
    let slope_right = (im(1.0 + h) - im(1.0)) / h;
    assert!(
        (slope_right - slope_left).abs() > 1.0,
        "no kink: left {slope_left}, right {slope_right}"
    );

    // same behavior through the spectral route
    let spec = QuadratureSpec::default();
    let im_s = |g: f64| exact_energy_spectral(g, &spec).unwrap().im;
    let s_left = (im_s(1.0) - im_s(1.0 - h)) / h;
    let s_right = (im_s(1.0 + h) - im_s(1.0)) / h;
    assert!((s_right - s_left).abs() > 1.0);
}

#[test]
fn energy_decreases_with_coupling() {
    // finite-difference derivative of the real part is negative on [0, 1/2]
    let h = 1e-4;
    let mut g = 0.01;
    while g < 0.5 - h {
        let d =
            (exact_energy_normal_modes(g + h).re - exact_energy_normal_modes(g - h).re) / (2.0 * h);
        assert!(d < 0.0, "dE/dg = {d} at g = {g}");
        g += 0.02;
    }
}

#[test]
fn series_coefficients_match_numerical_expansion() {
    // fit the even Taylor coefficients of the normal-mode energy by
    // Richardson-style sampling at small g and compare to the closed values
    let c2 = london_series_coefficients(2).unwrap();
    let c4 = london_series_coefficients(4).unwrap();
    let c6 = london_series_coefficients(6).unwrap();
    let g = 1e-2;
    let e = exact_energy_normal_modes(g).re;
    let model = c2 * g.powi(2) + c4 * g.powi(4) + c6 * g.powi(6);
    // next omitted term is c8 g^8 ~ 3.4e-16
    assert!((e - model).abs() < 1e-14, "residual {:e}", (e - model).abs());

    // c4 isolated: (E - c2 g^2)/g^4 -> c4 as g -> 0
    let g = 1e-3;
    let iso = (exact_energy_normal_modes(g).re - c2 * g * g) / g.powi(4);
    assert!((iso - c4).abs() < 1e-2 * c4.abs());
}

#[test]
fn spectral_branch_beyond_both_thresholds() {
    let spec = QuadratureSpec::default();
    let g = 1.2;
    let s = exact_energy_spectral(g, &spec).unwrap();
    let m = exact_energy_normal_modes(g);
    // im has contributions from both channels: -sqrt(2g-1)/2 - sqrt(g-1)
    let expected_im = -((2.0 * g - 1.0).sqrt() / 2.0 + (g - 1.0).sqrt());
    assert!((m.im - expected_im).abs() < 1e-15);
    assert!((s.im - expected_im).abs() < 1e-12);
    assert!((s.re - m.re).abs() < 1e-7 * m.re.abs());
}
