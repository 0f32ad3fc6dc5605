//! The omega constant: the unique positive root of x e^x = 1.

/// Solves x e^x = 1 (equivalently e^{-x}/x = 1) by Halley iteration.
///
/// Converges from the fixed starting point 0.5 in a handful of steps; the
/// result is correct to full f64 precision and the residual |A e^A - 1| stays
/// below 1e-15.
pub fn lambert_root() -> f64 {
    let mut x: f64 = 0.5;
    for _ in 0..50 {
        let ex = x.exp();
        let fx = x * ex - 1.0;
        // Halley step for f = x e^x - 1: f' = (x+1)e^x, f'' = (x+2)e^x.
        let dx = fx / (ex * (x + 1.0) - fx * (x + 2.0) / (2.0 * (x + 1.0)));
        let next = x - dx;
        if next == x {
            break;
        }
        x = next;
    }
    x
}
