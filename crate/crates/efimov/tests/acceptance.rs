//! Acceptance gate: one test per headline result, end to end through the
//! public API. Each passing test prints a single `criterion NN: PASS` line
//! (visible with `--nocapture`); a failing test panics with a
//! `criterion NN: FAIL` message carrying the measured numbers.
//!
//! Two criteria assert idealized tolerances that the exact equations do not
//! meet, and they are left red on purpose rather than loosened:
//!
//! - criterion 04 expects the small-argument zero formula to land within 5%
//!   of the exact Bessel zeros, but the formula's accuracy settles at a
//!   constant ~24.3% phase offset (the ratio converges to 0.7572603...,
//!   not to 1);
//! - criterion 05 expects the resonant adiabatic product xi*R to sit in a
//!   tight window down to beta*R = 100, but the window is approached
//!   algebraically, (xi*R - A) ~ 0.31/(beta*R), and is only entered near
//!   beta*R ~ 560.
//!
//! Each red criterion has a passing `_diagnostic_` companion directly below
//! it that pins the measured behavior, so regressions in either direction
//! stay visible.

use efimov::born_oppenheimer::{
    critical_mass_ratio, efimov_s0, solve_kappa, yukawa_tail, MassConfig,
};
use efimov::observables::{next_resonance_position, recombination_length};
use efimov::semiclassical::count_states_semiclassical;
use efimov::specfun::{integrate_adaptive, lambert_root};
use efimov::spectrum::{
    count_states_direct, count_states_formula, geometric_factor, spectrum_asymptotic,
    spectrum_bessel, spectrum_shooting, InverseSquareProblem,
};
use efimov::two_body::{binding_from_coupling, coupling_from_binding};
use efimov::Error;

/// Resonant strength parameter of the identical-boson channel.
const S0: f64 = 1.00624;

/// Omega constant, the root of x e^x = 1.
const A: f64 = 0.5671432904097838;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn criterion_01_lambert_constant() {
    let x = lambert_root();
    let residual = ((-x).exp() / x - 1.0).abs();
    assert!(
        (x - 0.5671).abs() < 5e-5,
        "criterion 01: FAIL — root {x} does not round to 0.5671"
    );
    assert!(
        residual < 1e-12,
        "criterion 01: FAIL — residual of e^-x/x = 1 is {residual:e}"
    );
    println!("criterion 01: PASS — root {x:.16} with residual {residual:e}");
}

#[test]
fn criterion_02_efimov_scaling() {
    let prob = InverseSquareProblem::new(S0, 1.0, f64::INFINITY).unwrap();
    let spec = spectrum_bessel(&prob, 3).unwrap();
    let k = spec.kappas();
    for n in [0usize, 1] {
        let ratio = k[n] / k[n + 1];
        assert!(
            rel(ratio, 22.694) < 5e-3,
            "criterion 02: FAIL — kappa_{}/kappa_{} = {ratio} vs 22.694",
            n + 1,
            n + 2
        );
        let energy_ratio = ratio * ratio;
        assert!(
            rel(energy_ratio, 515.0) < 1e-2,
            "criterion 02: FAIL — energy ratio {energy_ratio} vs 515.0"
        );
    }
    println!(
        "criterion 02: PASS — kappa ratios {:.6}, {:.6}; energy ratio {:.4}",
        k[0] / k[1],
        k[1] / k[2],
        (k[1] / k[2]).powi(2)
    );
}

#[test]
fn criterion_03_cross_method_spectrum() {
    let mut worst = 0.0f64;
    for s0 in [0.5, S0, 1.7455] {
        let prob = InverseSquareProblem::new(s0, 1.0, f64::INFINITY).unwrap();
        let exact = spectrum_bessel(&prob, 3).unwrap();
        let shot = spectrum_shooting(&prob, 3).unwrap();
        assert_eq!(shot.n_found(), 3, "criterion 03: FAIL — shooting found < 3 states at s0 = {s0}");
        for n in 0..3 {
            let dev = rel(shot.kappas()[n], exact.kappas()[n]);
            worst = worst.max(dev);
            assert!(
                dev <= 1e-6,
                "criterion 03: FAIL — s0 = {s0}, state {}: shooting {:.12e} vs exact {:.12e} (rel {dev:e})",
                n + 1,
                shot.kappas()[n],
                exact.kappas()[n]
            );
        }
    }
    println!("criterion 03: PASS — worst shooting-vs-exact deviation {worst:e}");
}

#[test]
fn criterion_04_asymptotic_zeros() {
    // The small-argument formula kappa_n r_c = 2 e^{-gamma} e^{-n pi/s0}
    // against the exact zeros. Expected RED: the formula's error settles at
    // a constant ~24.3% offset, far outside the asserted 5% at n = 1. The
    // strict-decrease clause does hold. See the diagnostic below for the
    // measured limit structure.
    let prob = InverseSquareProblem::new(S0, 1.0, f64::INFINITY).unwrap();
    let exact = spectrum_bessel(&prob, 3).unwrap();
    let asym = spectrum_asymptotic(&prob, 3).unwrap();
    let errs: Vec<f64> =
        (0..3).map(|n| rel(asym.kappas()[n], exact.kappas()[n])).collect();
    assert!(
        errs[1] < errs[0] && errs[2] < errs[1],
        "criterion 04: FAIL — relative errors not strictly decreasing: {errs:?}"
    );
    assert!(
        errs[0] < 0.05,
        "criterion 04: FAIL — asymptotic zero formula off by {:.4} at n = 1 (asserted < 0.05); \
         the formula-to-exact ratio converges to a constant 0.75726, not to 1, so no n reaches 5%: \
         errors {:?}",
        errs[0],
        errs
    );
    println!("criterion 04: PASS — asymptotic-vs-exact errors {errs:?}");
}

#[test]
fn criterion_04_diagnostic_constant_phase_offset() {
    // What the asymptotic formula actually does: the ratio to the exact
    // zeros converges to a constant 0.757260309214 (equivalently a fixed
    // ~24.27% deficit) instead of approaching 1.
    let prob = InverseSquareProblem::new(S0, 1.0, f64::INFINITY).unwrap();
    let exact = spectrum_bessel(&prob, 3).unwrap();
    let asym = spectrum_asymptotic(&prob, 3).unwrap();
    let ratios: Vec<f64> = (0..3).map(|n| asym.kappas()[n] / exact.kappas()[n]).collect();
    const LIMIT: f64 = 0.757260309214;
    let devs: Vec<f64> = ratios.iter().map(|r| (r - LIMIT).abs()).collect();
    assert!(devs[1] < devs[0] && devs[2] < devs[1], "offsets not converging: {devs:?}");
    assert!(devs[2] < 1e-7, "limit ratio drifted: {} vs {LIMIT}", ratios[2]);
    println!(
        "criterion 04 diagnostic: PASS — formula/exact ratios {ratios:?} converge to {LIMIT}"
    );
}

#[test]
fn criterion_05_resonant_adiabatic_window() {
    // Resonant dimer (kappa0 = 0), beta = 1e3: xi*R asserted inside
    // [0.5666, 0.5677] for every R in [0.1, 1e3]. Expected RED at the
    // small end: xi*R approaches the omega constant algebraically,
    // xi*R - A ~ 0.31/(beta R), so at beta R = 100 the product is ~0.5703.
    let beta = 1e3;
    let pot = coupling_from_binding(0.0, beta).unwrap();
    let dimer = binding_from_coupling(&pot).unwrap();
    let mut r = 0.1f64;
    let step = 10f64.powf(0.125);
    let mut worst: (f64, f64) = (0.0, A);
    while r <= 1e3 * 1.0000001 {
        let point = solve_kappa(r, &dimer, &pot).unwrap();
        let xi_r = point.xi() * r;
        if (xi_r - A).abs() > (worst.1 - A).abs() {
            worst = (r, xi_r);
        }
        assert!(
            (0.5666..=0.5677).contains(&xi_r),
            "criterion 05: FAIL — xi*R = {xi_r:.12} at R = {r:.4} (beta R = {:.0}) is outside \
             [0.5666, 0.5677]; the window is entered only near beta R ~ 560 because \
             xi*R - A falls off as ~0.31/(beta R)",
            beta * r
        );
        r *= step;
    }
    println!(
        "criterion 05: PASS — xi*R within window over R in [0.1, 1e3]; worst {:.12} at R = {:.4}",
        worst.1, worst.0
    );
}

#[test]
fn criterion_05_diagnostic_algebraic_approach() {
    // The measured law behind the red criterion: (xi*R - A) * beta*R is a
    // slowly decreasing constant ~0.31, and the window [0.5666, 0.5677]
    // holds once beta*R >~ 600.
    let beta = 1e3;
    let pot = coupling_from_binding(0.0, beta).unwrap();
    let dimer = binding_from_coupling(&pot).unwrap();
    let mut products = Vec::new();
    for r in [0.1, 10.0, 1000.0] {
        let point = solve_kappa(r, &dimer, &pot).unwrap();
        let product = (point.xi() * r - A) * beta * r;
        assert!(
            (0.28..0.35).contains(&product),
            "approach is no longer ~0.31/(beta R): got {product} at R = {r}"
        );
        products.push(product);
    }
    assert!(products[1] < products[0] && products[2] <= products[1]);
    let mut r = 0.6f64;
    let step = 10f64.powf(0.125);
    while r <= 1e3 * 1.0000001 {
        let point = solve_kappa(r, &dimer, &pot).unwrap();
        let xi_r = point.xi() * r;
        assert!(
            (0.5666..=0.5677).contains(&xi_r),
            "window broken in the valid regime: xi*R = {xi_r} at R = {r}"
        );
        r *= step;
    }
    println!(
        "criterion 05 diagnostic: PASS — (xi*R - A) beta R = {products:?}; window holds for beta R >= 600"
    );
}

#[test]
fn criterion_06_yukawa_tail() {
    // kappa0 = 0.01, beta = 1e3: at R = 10/kappa0 and 20/kappa0 the
    // threshold-relative adiabatic depth matches the Yukawa form within
    // 10%. The mass ratio is taken large so the reduced-mass factor nu
    // is 1 to float precision.
    let pot = coupling_from_binding(0.01, 1e3).unwrap();
    let dimer = binding_from_coupling(&pot).unwrap();
    let masses = MassConfig::new(1e8).unwrap();
    let a = dimer.scattering_length();
    let mut devs = Vec::new();
    for r in [10.0 * a, 20.0 * a] {
        let point = solve_kappa(r, &dimer, &pot).unwrap();
        let yuk = yukawa_tail(r, a, &masses).unwrap();
        let dev = (point.tail_epsilon() / yuk - 1.0).abs();
        assert!(
            dev < 0.1,
            "criterion 06: FAIL — tail depth {:.6e} vs Yukawa {yuk:.6e} at R = {r} (dev {dev:.3})",
            point.tail_epsilon()
        );
        devs.push(dev);
    }
    println!("criterion 06: PASS — Yukawa-tail deviations {devs:?} at R = 10a, 20a");
}

#[test]
fn criterion_07_state_count_triple_agreement() {
    for ratio in [1e2, 1e4, 1e6] {
        let formula = count_states_formula(S0, ratio, 1.0).unwrap();
        let prob = InverseSquareProblem::new(S0, 1.0, ratio).unwrap();
        let direct = count_states_direct(&prob).unwrap() as f64;
        let semi = count_states_semiclassical(S0, 0.0, 1.0, ratio).unwrap();
        for (name, x, y) in [
            ("formula vs direct", formula, direct),
            ("formula vs semiclassical", formula, semi),
            ("direct vs semiclassical", direct, semi),
        ] {
            assert!(
                (x - y).abs() <= 1.0,
                "criterion 07: FAIL — {name} differ by more than 1 at a/r0 = {ratio}: {x} vs {y}"
            );
        }
    }
    // One geometric period adds exactly one state.
    let factor = geometric_factor(S0).unwrap();
    for k in 1..=3 {
        let n = count_states_formula(S0, factor.powi(k), 1.0).unwrap();
        assert!(
            (n - f64::from(k)).abs() < 1e-9,
            "criterion 07: FAIL — count at exact ladder^{k} is {n}, expected {k}"
        );
        let n_rounded = count_states_formula(S0, 22.694f64.powi(k), 1.0).unwrap();
        assert!(
            (n_rounded - f64::from(k)).abs() < 1e-4,
            "criterion 07: FAIL — count at 22.694^{k} is {n_rounded}, expected {k} within 1e-4"
        );
    }
    println!("criterion 07: PASS — three counting routes within 1; ladder count exact");
}

#[test]
fn criterion_08_cutoff_scaling() {
    // Halving the inner cutoff multiplies every eigenvalue energy by 4.
    let reference = spectrum_bessel(&InverseSquareProblem::new(S0, 1.0, f64::INFINITY).unwrap(), 3).unwrap();
    let halved = spectrum_bessel(&InverseSquareProblem::new(S0, 0.5, f64::INFINITY).unwrap(), 3).unwrap();
    for n in 0..3 {
        let ratio = halved.energies()[n] / reference.energies()[n];
        assert!(
            (ratio - 4.0).abs() <= 1e-5,
            "criterion 08: FAIL — E_{}(r_c/2)/E_{}(r_c) = {ratio:.9}, expected 4.000000",
            n + 1,
            n + 1
        );
    }
    println!("criterion 08: PASS — all three energy ratios 4.0 within 1e-5");
}

#[test]
fn criterion_09_critical_mass_ratio() {
    let critical = critical_mass_ratio();
    assert!(
        (critical - 1.054).abs() < 1e-3,
        "criterion 09: FAIL — critical mass ratio {critical} not ~1.054"
    );
    match efimov_s0(&MassConfig::new(1.0).unwrap()) {
        Err(Error::SubcriticalMassRatio { mass_ratio, critical: reported }) => {
            assert_eq!(mass_ratio, 1.0);
            assert!(rel(reported, critical) < 1e-12);
        }
        other => panic!("criterion 09: FAIL — mass ratio 1.0 not rejected: {other:?}"),
    }
    let s0_20 = efimov_s0(&MassConfig::new(20.0).unwrap()).unwrap();
    assert!(
        (s0_20 - 1.7455).abs() <= 1e-3,
        "criterion 09: FAIL — s0(20) = {s0_20}, expected 1.7455 within 1e-3"
    );
    println!("criterion 09: PASS — critical ratio {critical:.10}, s0(20) = {s0_20:.10}");
}

#[test]
fn criterion_10_two_body_round_trip() {
    // Identity coupling(binding) o binding(coupling) on kappa0, and the
    // eigenvalue condition checked by independent quadrature. In the
    // scaled momentum q = p/beta the condition reads
    // 4 pi (lambda/beta^3) Int q^2 dq / ((q^2+1)^2 (q^2+rho^2)) = 1
    // with rho = kappa0/beta.
    let beta = 1.0;
    let mut worst_round = 0.0f64;
    let mut worst_residual = 0.0f64;
    for exponent in 0..=6 {
        let kappa0 = beta * 10f64.powi(-exponent);
        let pot = coupling_from_binding(kappa0, beta).unwrap();
        let state = binding_from_coupling(&pot).unwrap();
        let dev = rel(state.kappa0(), kappa0);
        worst_round = worst_round.max(dev);
        assert!(
            dev <= 1e-10,
            "criterion 10: FAIL — round trip at kappa0/beta = 1e-{exponent}: {:.17e} vs {kappa0:.17e}",
            state.kappa0()
        );

        let rho = kappa0 / beta;
        let q = integrate_adaptive(
            |t: f64| {
                let t2 = t * t;
                t2 / ((t2 + 1.0) * (t2 + 1.0) * (t2 + rho * rho))
            },
            0.0,
            f64::INFINITY,
            1e-12,
        );
        assert!(q.converged);
        let residual =
            (4.0 * std::f64::consts::PI * (pot.lambda() / beta.powi(3)) * q.value - 1.0).abs();
        worst_residual = worst_residual.max(residual);
        assert!(
            residual < 1e-10,
            "criterion 10: FAIL — eigenvalue-condition residual {residual:e} at kappa0/beta = 1e-{exponent}"
        );
    }
    println!(
        "criterion 10: PASS — worst round-trip deviation {worst_round:e}, worst quadrature residual {worst_residual:e}"
    );
}

#[test]
fn criterion_11_resonance_ladder() {
    // From the observed loss peak at a = -850 a0: with the factor rounded
    // to 22.7 the next peak is quoted at -19,295 a0; the exact factor
    // e^{pi/s0} lands at -19,290.1 a0, 2.5e-4 away.
    let quoted = -850.0 * 22.7;
    assert!(rel(quoted, -19295.0) < 1e-12, "criterion 11: FAIL — -850 * 22.7 = {quoted}");
    let exact = next_resonance_position(-850.0, S0).unwrap();
    assert!(
        rel(exact, -19295.0) < 1e-3,
        "criterion 11: FAIL — exact-factor prediction {exact} vs quoted -19295"
    );
    // The recombination length steps by the same factor along the ladder.
    let factor = geometric_factor(S0).unwrap();
    let rho_here = recombination_length(70.0, -850.0).unwrap();
    let rho_next = recombination_length(70.0, exact).unwrap();
    assert!(
        rel(rho_next / rho_here, factor) < 1e-12,
        "criterion 11: FAIL — recombination-length ladder step {} vs {factor}",
        rho_next / rho_here
    );
    println!(
        "criterion 11: PASS — next resonance {exact:.1} a0 (quoted {quoted:.0}); rho_3 steps by {factor:.4}"
    );
}
