//! Small numerical kernels shared by the rest of the crate.
//!
//! Nothing here is domain specific: Gauss-Legendre rules (used to integrate
//! piecewise-polynomial ramp integrands exactly), a damped Newton iteration
//! with a finite-difference Jacobian (used by the implicit Riemann solvers),
//! and a bracketed scalar root finder.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumericError {
    #[error("singular linear system in Newton step (pivot {pivot:.3e})")]
    SingularJacobian { pivot: f64 },
    #[error("Newton iteration made no progress at residual {residual:.3e}")]
    NoProgress { residual: f64 },
    #[error("Newton iteration exceeded {max_iter} iterations (residual {residual:.3e})")]
    MaxIterations { max_iter: usize, residual: f64 },
    #[error("root is not bracketed: f({a:.6e}) = {fa:.3e}, f({b:.6e}) = {fb:.3e}")]
    NotBracketed { a: f64, b: f64, fa: f64, fb: f64 },
}

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
///
/// Computed by Newton iteration on the Legendre recurrence. Exact (up to
/// rounding) for polynomials of degree 2n - 1.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1, "quadrature rule needs at least one node");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..(n + 1) / 2 {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre recurrence: (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}.
            let mut p0 = 1.0;
            let mut p1 = x;
            for j in 1..n {
                let p2 = ((2 * j + 1) as f64 * x * p1 - j as f64 * p0) / (j + 1) as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Integrates `f` over `[a, b]` with an n-point Gauss-Legendre rule.
pub fn integrate_gl(f: &mut dyn FnMut(f64) -> f64, a: f64, b: f64, rule: &(Vec<f64>, Vec<f64>)) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (x, w) in rule.0.iter().zip(rule.1.iter()) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Integrates `f` over the panels defined by consecutive `breakpoints`,
/// applying the same Gauss rule on every panel.
pub fn integrate_panels(
    f: &mut dyn FnMut(f64) -> f64,
    breakpoints: &[f64],
    points_per_panel: usize,
) -> f64 {
    let rule = gauss_legendre(points_per_panel);
    let mut acc = 0.0;
    for pair in breakpoints.windows(2) {
        if pair[1] > pair[0] {
            acc += integrate_gl(f, pair[0], pair[1], &rule);
        }
    }
    acc
}

/// Solves `A x = b` in place by Gaussian elimination with partial pivoting.
pub fn solve_linear(a: &mut [Vec<f64>], b: &mut [f64]) -> Result<Vec<f64>, NumericError> {
    let n = b.len();
    for col in 0..n {
        let mut pivot_row = col;
        for row in col + 1..n {
            if a[row][col].abs() > a[pivot_row][col].abs() {
                pivot_row = row;
            }
        }
        if a[pivot_row][col].abs() < 1e-300 {
            return Err(NumericError::SingularJacobian { pivot: a[pivot_row][col] });
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Ok(x)
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |m, x| if x.abs() > m { x.abs() } else { m })
}

fn norm_or_inf(v: &[f64]) -> f64 {
    let n = inf_norm(v);
    if n.is_finite() {
        n
    } else {
        f64::INFINITY
    }
}

/// Damped Newton iteration with a central-difference Jacobian.
///
/// The step is halved (up to 30 times) whenever the residual norm fails to
/// decrease, which also guards against excursions where the residual is NaN.
pub fn newton_solve(
    f: &dyn Fn(&[f64]) -> Vec<f64>,
    x0: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<Vec<f64>, NumericError> {
    let n = x0.len();
    let mut x = x0.to_vec();
    let mut fx = f(&x);
    assert_eq!(fx.len(), n, "residual dimension must match unknown dimension");
    for _ in 0..max_iter {
        let res = norm_or_inf(&fx);
        if res <= tol {
            return Ok(x);
        }
        // Central-difference Jacobian, column by column.
        let mut jac = vec![vec![0.0; n]; n];
        for j in 0..n {
            let h = 1e-6 * x[j].abs().max(1.0);
            let mut xp = x.clone();
            let mut xm = x.clone();
            xp[j] += h;
            xm[j] -= h;
            let fp = f(&xp);
            let fm = f(&xm);
            for i in 0..n {
                jac[i][j] = (fp[i] - fm[i]) / (2.0 * h);
            }
        }
        let mut rhs = fx.clone();
        let step = solve_linear(&mut jac, &mut rhs)?;
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..30 {
            let trial: Vec<f64> = x.iter().zip(step.iter()).map(|(xi, si)| xi - lambda * si).collect();
            let ftrial = f(&trial);
            if norm_or_inf(&ftrial) < res {
                x = trial;
                fx = ftrial;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            return Err(NumericError::NoProgress { residual: res });
        }
    }
    let res = norm_or_inf(&fx);
    if res <= tol {
        Ok(x)
    } else {
        Err(NumericError::MaxIterations { max_iter, residual: res })
    }
}

/// Bracketed scalar root: bisection to tighten the interval, then Newton
/// polish with a finite-difference derivative.
pub fn bisect_then_newton(
    f: &dyn Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    tol: f64,
) -> Result<f64, NumericError> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(NumericError::NotBracketed { a, b, fa, fb });
    }
    for _ in 0..60 {
        let mid = 0.5 * (a + b);
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        if (b - a).abs() <= tol * mid.abs().max(1.0) {
            break;
        }
    }
    let mut x = 0.5 * (a + b);
    for _ in 0..20 {
        let fx = f(x);
        let h = 1e-7 * x.abs().max(1.0);
        let d = (f(x + h) - f(x - h)) / (2.0 * h);
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let next = x - fx / d;
        // Stay inside the bracket; bisection already guarantees the root.
        if next.is_finite() && next > a && next < b {
            if (next - x).abs() <= tol * x.abs().max(1.0) {
                return Ok(next);
            }
            x = next;
        } else {
            break;
        }
    }
    Ok(x)
}

// ============================================================================
