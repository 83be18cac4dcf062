//! Numeric cross-checks of the closed-form transforms: segment transforms
//! against adaptive quadrature of the defining integrals, to 1e-9.

use ultracalc::hyper::{ECoef, GaussRat, Poly, Side, Ultrafunctional1D};
use ultracalc::oracle::simpson_complex;
use ultracalc::scalar::frac;

/// Numeric value of `int p(x) e^{i x zeta} (decay weight) dx` over the side.
fn numeric_segment(
    side: Side,
    decay: f64,
    weight: &[f64],
    zeta: (f64, f64),
) -> (f64, f64) {
    let p = |x: f64| -> f64 { weight.iter().rev().fold(0.0, |acc, c| acc * x + c) };
    let integrand = move |x: f64| -> (f64, f64) {
        // e^{i x zeta} = e^{-x Im zeta} (cos(x Re zeta) + i sin(x Re zeta))
        let m = (-x * zeta.1).exp();
        let (s, c) = (x * zeta.0).sin_cos();
        let damp = match side {
            Side::Pos => (-decay * x).exp(),
            Side::Neg => (decay * x).exp(),
        };
        let w = p(x) * damp * m;
        (w * c, w * s)
    };
    match side {
        Side::Pos => simpson_complex(&integrand, 0.0, 80.0 / decay, 1e-13, 48),
        Side::Neg => simpson_complex(&integrand, -80.0 / decay, 0.0, 1e-13, 48),
    }
}

#[test]
fn segment_transforms_match_quadrature() {
    let cases = [
        (Side::Pos, 1i64, vec![1i64]),
        (Side::Pos, 2, vec![0, 1]),
        (Side::Pos, 3, vec![2, -1, 1]),
        (Side::Neg, 1, vec![1]),
        (Side::Neg, 2, vec![1, 3]),
    ];
    // sample points with convergent integrals on both sides
    let samples = [(0.0, 0.0), (1.0, 0.0), (-2.0, 0.0), (0.5, 0.25), (1.0, -0.25)];
    for (side, decay, weight) in cases {
        let u = Ultrafunctional1D::segment(
            side,
            GaussRat::from_int(decay),
            Poly::from_coeffs(weight.iter().map(|&c| ECoef::from_int(c)).collect()),
        )
        .unwrap();
        for &(re, im) in &samples {
            let zeta = GaussRat::new(frac((re * 4.0) as i64, 4), frac((im * 4.0) as i64, 4));
            let exact = u.apply(&zeta).unwrap();
            let (er, ei) = exact.to_c64();
            let wf: Vec<f64> = weight.iter().map(|&c| c as f64).collect();
            let (nr, ni) = numeric_segment(side, decay as f64, &wf, (re, im));
            assert!(
                (er - nr).abs() < 1e-9 && (ei - ni).abs() < 1e-9,
                "side {side:?}, decay {decay}, weight {weight:?} at zeta=({re},{im}): \
                 exact ({er},{ei}) vs quadrature ({nr},{ni})"
            );
        }
    }
}

#[test]
fn point_mass_transform_matches_analytic_samples() {
    // c delta^(m)_z applied to e^{ix zeta} is c (-i zeta)^m e^{i z zeta};
    // checked numerically at a real location via finite differences
    let u = Ultrafunctional1D::delta(GaussRat::from_int(2)).derivative();
    let zeta = GaussRat::new(frac(1, 2), frac(0, 1));
    let exact = u.apply(&zeta).unwrap().to_c64();
    // f -> -f'(2) with f = e^{ix/2}: -i/2 e^{i}
    let expected_re = 0.5 * 1.0f64.sin();
    let expected_im = -0.5 * 1.0f64.cos();
    assert!((exact.0 - expected_re).abs() < 1e-12);
    assert!((exact.1 - expected_im).abs() < 1e-12);
}
