//! Tire slip quantities.

/// Low-speed regularization floor for the slip denominators (m/s).
pub const SLIP_EPS_V: f64 = 0.05;
/// Symmetric clamp applied to both slip quantities.
pub const SLIP_CLAMP: f64 = 10.0;

/// Longitudinal slip ratio `(r*w - v_x) / |v_x|`, regularized near rest.
pub fn longitudinal_slip(wheel_radius: f64, wheel_speed: f64, v_x: f64) -> f64 {
    let denom = v_x.abs().max(SLIP_EPS_V);
    ((wheel_radius * wheel_speed - v_x) / denom).clamp(-SLIP_CLAMP, SLIP_CLAMP)
}

/// Lateral slip `tan(alpha) = v_y / |v_x|`, regularized near rest.
pub fn lateral_slip(v_x: f64, v_y: f64) -> f64 {
    let denom = v_x.abs().max(SLIP_EPS_V);
    (v_y / denom).clamp(-SLIP_CLAMP, SLIP_CLAMP)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_rolling_is_zero() {
        assert_eq!(longitudinal_slip(0.05, 20.0, 1.0), 0.0);
        assert_eq!(longitudinal_slip(0.1, 10.0, 1.0), 0.0);
    }

    #[test]
    fn direct_formula_values() {
        let s = longitudinal_slip(0.05, 20.0, 0.9);
        assert!((s - (1.0 - 0.9) / 0.9).abs() < 1e-12);
        // Spinning at rest clamps to the slip bound.
        assert_eq!(longitudinal_slip(0.05, 10.0, 0.0), 10.0);
    }

    #[test]
    fn lateral_values_and_sign() {
        assert_eq!(lateral_slip(2.0, 0.0), 0.0);
        assert!((lateral_slip(2.0, 0.5) - 0.25).abs() < 1e-12);
        // Absolute value in the denominator keeps the sign of v_y.
        assert!((lateral_slip(-2.0, 0.5) - 0.25).abs() < 1e-12);
    }
}
