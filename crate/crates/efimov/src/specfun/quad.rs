//! Adaptive quadrature on finite and semi-infinite intervals.
//!
//! The core rule is the 15-point Kronrod extension of 7-point Gauss, with
//! worst-interval-first bisection. A semi-infinite upper limit is mapped onto
//! (0, 1] by the rational substitution x = a + (1 - u)/u (the map behind
//! QUADPACK's QAGI), which handles both exponential and algebraic decay; the
//! Kronrod abscissae are strictly interior, so neither endpoint of the unit
//! interval is ever evaluated.
//!
//! An integrable singularity at an endpoint equal to zero is resolved by the
//! dyadic refinement, which approaches the origin geometrically without ever
//! evaluating there. A singularity anywhere else must be removed by the
//! caller, either by shifting it to zero or with a substitution such as
//! x = x_s - t^2 for inverse-square-root behavior; node coordinates near a
//! nonzero singular point can round onto it exactly.

/// Outcome of [`integrate_adaptive`].
#[derive(Debug, Clone, Copy)]
pub struct QuadratureResult {
    pub value: f64,
    /// Sum of per-interval error bounds; an estimate of the absolute error.
    pub error_estimate: f64,
    /// Number of integrand evaluations performed.
    pub evaluations: usize,
    /// False when the subdivision budget ran out before the target was met;
    /// `value` is then the best estimate so far.
    pub converged: bool,
}

// 15-point Kronrod abscissae on [-1, 1] (positive half) and weights, with the
// embedded 7-point Gauss weights. Standard table, e.g. QUADPACK/GSL qk15.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One G7/K15 application on [a, b]: returns (kronrod, error bound).
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut result_gauss = fc * WG[3];
    let mut result_kronrod = fc * WGK[7];
    let mut resabs = result_kronrod.abs();

    let mut fv = [0.0_f64; 15];
    fv[7] = fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        result_kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            result_gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = result_kronrod * 0.5;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }

    let result = result_kronrod * half;
    resabs *= half.abs();
    resasc *= half.abs();

    // QUADPACK error heuristic: sharpen the raw Gauss/Kronrod difference,
    // then floor it at the roundoff level of the function values seen.
    let mut err = ((result_kronrod - result_gauss) * half).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * 1.0_f64.min((200.0 * err / resasc).powf(1.5));
    }
    let round = 50.0 * f64::EPSILON * resabs;
    if round > f64::MIN_POSITIVE {
        err = err.max(round);
    }
    (result, err)
}

/// Integrates `f` over [a, b] to a tolerance of `tol * max(1, |integral|)`.
///
/// `b` may be `f64::INFINITY`; the tail is folded onto a unit interval as
/// described in the module docs. Non-convergence within the interval budget is
/// reported through [`QuadratureResult::converged`] rather than an error, so
/// the best estimate is always available.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> QuadratureResult {
    assert!(a.is_finite(), "lower limit must be finite, got {a}");
    assert!(tol > 0.0, "tolerance must be positive, got {tol}");
    if b.is_infinite() {
        assert!(b > 0.0, "only +infinity is supported as an upper limit");
        let g = |u: f64| {
            let x = a + (1.0 - u) / u;
            if !x.is_finite() {
                // u small enough that x overflows; an integrable f has
                // decayed to nothing there.
                return 0.0;
            }
            let fx = f(x);
            // Skip the weight once f has underflowed, so that 0/u^2 cannot
            // turn into 0 * inf at extreme u.
            if fx == 0.0 {
                return 0.0;
            }
            fx / (u * u)
        };
        return integrate_finite(&g, 0.0, 1.0, tol);
    }
    integrate_finite(&f, a, b, tol)
}

fn integrate_finite<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> QuadratureResult {
    if a == b {
        return QuadratureResult { value: 0.0, error_estimate: 0.0, evaluations: 0, converged: true };
    }
    let (sign, lo, hi) = if a < b { (1.0, a, b) } else { (-1.0, b, a) };

    struct Interval {
        lo: f64,
        hi: f64,
        value: f64,
        err: f64,
    }

    let (v0, e0) = qk15(f, lo, hi);
    let mut intervals = vec![Interval { lo, hi, value: v0, err: e0 }];
    let mut evaluations = 15usize;
    const MAX_INTERVALS: usize = 4096;

    loop {
        let value: f64 = intervals.iter().map(|i| i.value).sum();
        let err: f64 = intervals.iter().map(|i| i.err).sum();
        let goal = tol * value.abs().max(1.0);
        if err <= goal {
            return QuadratureResult {
                value: sign * value,
                error_estimate: err,
                evaluations,
                converged: true,
            };
        }
        if intervals.len() >= MAX_INTERVALS {
            return QuadratureResult {
                value: sign * value,
                error_estimate: err,
                evaluations,
                converged: false,
            };
        }

        let worst = intervals
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, _)| i)
            .unwrap();
        let Interval { lo, hi, .. } = intervals[worst];
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Interval no longer splittable in f64; treat its error as floor.
            let value: f64 = intervals.iter().map(|i| i.value).sum();
            let err: f64 = intervals.iter().map(|i| i.err).sum();
            return QuadratureResult {
                value: sign * value,
                error_estimate: err,
                evaluations,
                converged: false,
            };
        }
        let (v1, e1) = qk15(f, lo, mid);
        let (v2, e2) = qk15(f, mid, hi);
        evaluations += 30;
        intervals[worst] = Interval { lo, hi: mid, value: v1, err: e1 };
        intervals.push(Interval { lo: mid, hi, value: v2, err: e2 });
    }
}
