//! Two-piece cubic tire friction curve.

use super::DynamicsError;
use serde::{Deserialize, Serialize};

/// Normalized tire friction curve `F(S)` built from two cubic segments in
/// power basis: segment 0 runs from the zero knot `(s0, f0)` to the extremum
/// `(se, fe)`, segment 1 from the extremum to the asymptote `(sa, fa)`.
///
/// Boundary conditions: zero curvature at `s0` (natural start), zero slope at
/// `se` (extremum) and at `sa` (asymptote), which makes the curve C1 at `se`.
/// Beyond `sa` the curve clamps to `fa`; negative slip uses the odd extension
/// `F(-S) = -F(S)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrictionSpline {
    pub s0: f64,
    pub f0: f64,
    pub se: f64,
    pub fe: f64,
    pub sa: f64,
    pub fa: f64,
    /// `[a, b, c, d]` per segment: `a*S^3 + b*S^2 + c*S + d`.
    pub coeffs: [[f64; 4]; 2],
}

/// Expand `A*(S-x)^3 + B*(S-x)^2 + C*(S-x) + D` into power basis.
fn shift_to_power(a: f64, b: f64, c: f64, d: f64, x: f64) -> [f64; 4] {
    [
        a,
        -3.0 * a * x + b,
        3.0 * a * x * x - 2.0 * b * x + c,
        -a * x * x * x + b * x * x - c * x + d,
    ]
}

fn eval_poly(coeffs: &[f64; 4], s: f64) -> f64 {
    ((coeffs[0] * s + coeffs[1]) * s + coeffs[2]) * s + coeffs[3]
}

fn eval_poly_deriv(coeffs: &[f64; 4], s: f64) -> f64 {
    (3.0 * coeffs[0] * s + 2.0 * coeffs[1]) * s + coeffs[2]
}

impl FrictionSpline {
    /// Fit the spline through three knots `(s0, f0)`, `(se, fe)`, `(sa, fa)`.
    pub fn fit(knots: [(f64, f64); 3]) -> Result<FrictionSpline, DynamicsError> {
        let [(s0, f0), (se, fe), (sa, fa)] = knots;
        if !(s0 < se && se < sa) {
            return Err(DynamicsError::InvalidKnots(s0, se, sa));
        }
        // Segment 0: f(s0)=f0, f(se)=fe, f'(se)=0, f''(s0)=0.
        // In u = S - s0 with h = se - s0: f = A u^3 + C u + f0.
        let h0 = se - s0;
        let a0 = -(fe - f0) / (2.0 * h0 * h0 * h0);
        let c0 = 3.0 * (fe - f0) / (2.0 * h0);
        let seg0 = shift_to_power(a0, 0.0, c0, f0, s0);
        // Segment 1: f(se)=fe, f(sa)=fa, f'(se)=0, f'(sa)=0.
        // In u = S - se with h = sa - se: f = A u^3 + B u^2 + fe.
        let h1 = sa - se;
        let a1 = -2.0 * (fa - fe) / (h1 * h1 * h1);
        let b1 = 3.0 * (fa - fe) / (h1 * h1);
        let seg1 = shift_to_power(a1, b1, 0.0, fe, se);
        Ok(FrictionSpline {
            s0,
            f0,
            se,
            fe,
            sa,
            fa,
            coeffs: [seg0, seg1],
        })
    }

    /// Evaluate `F(S)` for any real slip.
    pub fn eval(&self, slip: f64) -> f64 {
        let sign = if slip < 0.0 { -1.0 } else { 1.0 };
        let u = slip.abs();
        let v = if u >= self.sa {
            self.fa
        } else if u >= self.se {
            eval_poly(&self.coeffs[1], u)
        } else if u >= self.s0 {
            eval_poly(&self.coeffs[0], u)
        } else {
            self.f0
        };
        sign * v
    }

    /// Slope `dF/dS` (0 in the clamped region).
    pub fn eval_deriv(&self, slip: f64) -> f64 {
        let u = slip.abs();
        if u >= self.sa || u < self.s0 {
            0.0
        } else if u >= self.se {
            eval_poly_deriv(&self.coeffs[1], u)
        } else {
            eval_poly_deriv(&self.coeffs[0], u)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KNOTS: [(f64, f64); 3] = [(0.0, 0.0), (0.2, 1.0), (0.8, 0.6)];

    #[test]
    fn knot_interpolation_exact() {
        let sp = FrictionSpline::fit(KNOTS).unwrap();
        assert!((sp.eval(0.0) - 0.0).abs() < 1e-12);
        assert!((sp.eval(0.2) - 1.0).abs() < 1e-12);
        assert!((sp.eval(0.8) - 0.6).abs() < 1e-12);
    }

    #[test]
    fn extremum_and_asymptote_slopes_vanish() {
        let sp = FrictionSpline::fit(KNOTS).unwrap();
        assert!(sp.eval_deriv(0.2).abs() < 1e-9);
        // Approaching sa from below the slope goes to zero.
        assert!(sp.eval_deriv(0.8 - 1e-9).abs() < 1e-6);
    }

    #[test]
    fn c1_at_extremum() {
        let sp = FrictionSpline::fit(KNOTS).unwrap();
        let below = sp.eval(0.2 - 1e-12);
        let above = sp.eval(0.2 + 1e-12);
        assert!((below - above).abs() < 1e-9);
    }

    // Golden values from an independent symbolic solve of the boundary
    // conditions (segment 0 = -125/2 S^3 + 15/2 S, segment 1 coefficients
    // 100/27, -50/9, 16/9, 113/135).
    #[test]
    fn frozen_cubic_solve_values() {
        let sp = FrictionSpline::fit(KNOTS).unwrap();
        assert!((sp.eval(0.1) - 0.6875).abs() < 1e-12);
        assert!((sp.eval(0.5) - 0.8).abs() < 1e-12);
        let seg0 = sp.coeffs[0];
        assert!((seg0[0] + 62.5).abs() < 1e-9);
        assert!(seg0[1].abs() < 1e-9);
        assert!((seg0[2] - 7.5).abs() < 1e-9);
        assert!(seg0[3].abs() < 1e-9);
    }

    #[test]
    fn clamps_beyond_asymptote_and_odd_symmetry() {
        let sp = FrictionSpline::fit(KNOTS).unwrap();
        assert_eq!(sp.eval(0.8), 0.6);
        assert_eq!(sp.eval(5.0), 0.6);
        assert_eq!(sp.eval(-0.2), -1.0);
        for i in 0..200 {
            let s = -2.0 + i as f64 * 0.02;
            assert!((sp.eval(-s) + sp.eval(s)).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_unordered_knots() {
        let err = FrictionSpline::fit([(0.0, 0.0), (0.8, 1.0), (0.2, 0.6)]);
        assert!(matches!(err, Err(DynamicsError::InvalidKnots(..))));
    }
}
