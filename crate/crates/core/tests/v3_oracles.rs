mod common;

use std::f64::consts::PI;

use common::numeric::{lobachevsky_quadrature, lobachevsky_series, v3_quadrature, v3_series};
use twistbound::bounds::{lobachevsky, v3, V3};

#[test]
fn v3_matches_both_oracles() {
    let (s, q) = (v3_series(), v3_quadrature());
    assert!((s - q).abs() < 1e-12, "series {s} vs quadrature {q}");
    assert!((v3() - V3).abs() < 1e-12);
    assert!((v3() - s).abs() < 1e-12);
    assert!((v3() - q).abs() < 1e-12);
}

#[test]
fn lobachevsky_matches_quadrature() {
    for k in 1..12 {
        let theta = k as f64 * PI / 24.0;
        let (lib, q) = (lobachevsky(theta), lobachevsky_quadrature(theta));
        assert!((lib - q).abs() < 1e-12, "theta {theta}: {lib} vs {q}");
    }
}

#[test]
fn lobachevsky_matches_series_at_quarter_turn() {
    let s = lobachevsky_series(PI / 4.0, 2_000_000);
    assert!((lobachevsky(PI / 4.0) - s).abs() < 1e-12);
}

#[test]
fn closed_form_volumes() {
    // figure-eight = 2 v3; Whitehead = 8 Λ(π/4) = 4G; Borromean = 2 Whitehead.
    let catalan = 0.915_965_594_177_219_f64;
    assert!((2.0 * v3() - 2.029_883_212_819_307).abs() < 1e-12);
    assert!((8.0 * lobachevsky(PI / 4.0) - 4.0 * catalan).abs() < 1e-12);
    assert!((16.0 * lobachevsky(PI / 4.0) - 7.327_724_753_417_75).abs() < 1e-11);
}
