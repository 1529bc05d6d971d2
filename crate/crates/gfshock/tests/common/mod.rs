//! Shared helpers for the integration suites: an exact gamma-law Riemann
//! solver used as an oracle for the split scheme, and a plateau detector for
//! automated front counting.
//!
//! The oracle follows the classical construction: a pressure function with a
//! shock branch and a rarefaction branch per side, Newton iteration on the
//! star pressure, and similarity sampling in x/t. It shares no code with the
//! fractional-step solver it judges.

/// Exact solution of the gamma-law gas Riemann problem. States are primitive
/// `(rho, u, p)` triples.
pub struct ExactEuler {
    gamma: f64,
    left: (f64, f64, f64),
    right: (f64, f64, f64),
    pub p_star: f64,
    pub u_star: f64,
}

impl ExactEuler {
    pub fn solve(gamma: f64, left: (f64, f64, f64), right: (f64, f64, f64)) -> Self {
        let f = |p: f64, side: (f64, f64, f64)| -> (f64, f64) {
            let (rho, _, pk) = side;
            let a = (gamma * pk / rho).sqrt();
            if p > pk {
                // Shock branch and its derivative in p.
                let ak = 2.0 / ((gamma + 1.0) * rho);
                let bk = (gamma - 1.0) / (gamma + 1.0) * pk;
                let root = (ak / (p + bk)).sqrt();
                ((p - pk) * root, root * (1.0 - 0.5 * (p - pk) / (p + bk)))
            } else {
                // Rarefaction branch.
                let ratio = (p / pk).powf((gamma - 1.0) / (2.0 * gamma));
                (
                    2.0 * a / (gamma - 1.0) * (ratio - 1.0),
                    1.0 / (rho * a) * (p / pk).powf(-(gamma + 1.0) / (2.0 * gamma)),
                )
            }
        };

        let du = right.1 - left.1;
        // Positive starting guess; the linearized estimate can go negative
        // for strong rarefactions, so floor it well away from vacuum.
        let a_l = (gamma * left.2 / left.0).sqrt();
        let a_r = (gamma * right.2 / right.0).sqrt();
        let guess = (0.5 * (left.2 + right.2)
            - 0.125 * du * (left.0 + right.0) * (a_l + a_r))
            .max(1e-8 * (left.2 + right.2));

        let mut p = guess;
        for _ in 0..60 {
            let (fl, dl) = f(p, left);
            let (fr, dr) = f(p, right);
            let g = fl + fr + du;
            let step = g / (dl + dr);
            let next = (p - step).max(1e-12 * guess);
            if (next - p).abs() <= 1e-15 * p.abs() {
                p = next;
                break;
            }
            p = next;
        }
        let (fl, _) = f(p, left);
        let (fr, _) = f(p, right);
        let u_star = 0.5 * (left.1 + right.1) + 0.5 * (fr - fl);
        Self { gamma, left, right, p_star: p, u_star }
    }

    pub fn rho_star_left(&self) -> f64 {
        Self::star_density(self.gamma, self.left, self.p_star)
    }

    pub fn rho_star_right(&self) -> f64 {
        Self::star_density(self.gamma, self.right, self.p_star)
    }

    fn star_density(gamma: f64, side: (f64, f64, f64), p_star: f64) -> f64 {
        let (rho, _, pk) = side;
        let ratio = p_star / pk;
        if p_star > pk {
            let beta = (gamma - 1.0) / (gamma + 1.0);
            rho * (ratio + beta) / (beta * ratio + 1.0)
        } else {
            rho * ratio.powf(1.0 / gamma)
        }
    }

    /// Self-similar solution at `xi = x / t`, as a primitive `(rho, u, p)`.
    pub fn sample(&self, xi: f64) -> (f64, f64, f64) {
        let g = self.gamma;
        if xi <= self.u_star {
            let (rho, u, p) = self.left;
            let a = (g * p / rho).sqrt();
            if self.p_star > p {
                let s = u - a * ((g + 1.0) / (2.0 * g) * self.p_star / p + (g - 1.0) / (2.0 * g)).sqrt();
                if xi <= s {
                    (rho, u, p)
                } else {
                    (self.rho_star_left(), self.u_star, self.p_star)
                }
            } else {
                let a_star = a * (self.p_star / p).powf((g - 1.0) / (2.0 * g));
                if xi <= u - a {
                    (rho, u, p)
                } else if xi >= self.u_star - a_star {
                    (self.rho_star_left(), self.u_star, self.p_star)
                } else {
                    // Inside the left fan.
                    let v = 2.0 / (g + 1.0) * (a + 0.5 * (g - 1.0) * u + xi);
                    let c = v - xi;
                    (rho * (c / a).powf(2.0 / (g - 1.0)), v, p * (c / a).powf(2.0 * g / (g - 1.0)))
                }
            }
        } else {
            let (rho, u, p) = self.right;
            let a = (g * p / rho).sqrt();
            if self.p_star > p {
                let s = u + a * ((g + 1.0) / (2.0 * g) * self.p_star / p + (g - 1.0) / (2.0 * g)).sqrt();
                if xi >= s {
                    (rho, u, p)
                } else {
                    (self.rho_star_right(), self.u_star, self.p_star)
                }
            } else {
                let a_star = a * (self.p_star / p).powf((g - 1.0) / (2.0 * g));
                if xi >= u + a {
                    (rho, u, p)
                } else if xi <= self.u_star + a_star {
                    (self.rho_star_right(), self.u_star, self.p_star)
                } else {
                    let v = 2.0 / (g + 1.0) * (-a + 0.5 * (g - 1.0) * u + xi);
                    let c = xi - v;
                    (rho * (c / a).powf(2.0 / (g - 1.0)), v, p * (c / a).powf(2.0 * g / (g - 1.0)))
                }
            }
        }
    }
}

/// Maximal runs in which the values span at most `width`, reported as
/// `(first_index, last_index, mean)`; runs shorter than `min_run` cells are
/// treated as transition zones and dropped. Scanning is greedy from the left,
/// so a smeared front contributes at most one run to its downstream plateau.
pub fn plateaus(values: &[f64], width: f64, min_run: usize) -> Vec<(usize, usize, f64)> {
    let mut out = Vec::new();
    if values.is_empty() {
        return out;
    }
    let mut start = 0usize;
    let (mut lo, mut hi) = (values[0], values[0]);
    for i in 1..=values.len() {
        let fits = i < values.len() && values[i].max(hi) - values[i].min(lo) <= width;
        if fits {
            lo = lo.min(values[i]);
            hi = hi.max(values[i]);
        } else {
            if i - start >= min_run {
                let mean = values[start..i].iter().sum::<f64>() / (i - start) as f64;
                out.push((start, i - 1, mean));
            }
            if i < values.len() {
                start = i;
                lo = values[i];
                hi = values[i];
            }
        }
    }
    out
}
