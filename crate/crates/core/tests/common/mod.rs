//! Independent oracles shared by the integration tests. Nothing here calls
//! the crate's solvers: roots come from plain bisection and integrals from
//! adaptive Simpson quadrature.
#![allow(dead_code)]

/// Bisection for a sign change of `f` on [lo, hi]; runs until the bracket
/// stops shrinking.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let f_lo = f(lo);
    assert!(f_lo * f(hi) <= 0.0, "no sign change on [{lo}, {hi}]");
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        if (f(mid) < 0.0) == (f_lo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// y·ln(By)·eʸ written out again, separate from the library's forward map.
pub fn f_oracle(y: f64, b: f64) -> f64 {
    y * (b * y).ln() * y.exp()
}

/// (y+1)ln(By) + 1, whose roots are the branch points.
pub fn s_oracle(y: f64, b: f64) -> f64 {
    (y + 1.0) * (b * y).ln() + 1.0
}

/// W_L(x) by bisection of f_oracle on a bracket known to hold one root.
pub fn w_oracle(x: f64, b: f64, lo: f64, hi: f64) -> f64 {
    bisect(|y| f_oracle(y, b) - x, lo, hi)
}

/// Adaptive Simpson quadrature with Richardson correction.
pub fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// Five-point central difference.
pub fn fd5(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

/// Rows of the reference large-x accuracy table: (x, W_L(x), approximate
/// value, relative error).
pub const ACCURACY_TABLE: [(f64, f64, f64, f64); 7] = [
    (302.7564, 4.0, 3.8914, 2.71438e-2),
    (1194.3088, 5.0, 4.8766, 2.46807e-2),
    (4337.0842, 6.0, 5.8756, 2.07321e-2),
    (14937.6471, 7.0, 6.8792, 1.72518e-2),
    (49589.8229, 8.0, 7.8844, 1.44500e-2),
    (160238.6564, 9.0, 8.8899, 1.22306e-2),
    (507178.1179, 10.0, 9.8953, 1.04662e-2),
];
