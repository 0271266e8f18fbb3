//! Vehicle dynamics: rigid planar chassis plus per-corner sprung/unsprung
//! masses, wheel rotation dynamics, a two-piece cubic tire friction spline,
//! and Ackermann/drive/brake actuators, integrated with semi-implicit Euler
//! at a fixed time step.

mod actuator;
mod friction;
mod params;
mod slip;
mod state;
mod suspension;
mod vehicle;

pub use actuator::{ackermann_angles, ActuatorCommand};
pub use friction::FrictionSpline;
pub use params::VehicleParams;
pub use slip::{lateral_slip, longitudinal_slip, SLIP_CLAMP, SLIP_EPS_V};
pub use state::{CornerState, VehicleState, WHEEL_FL, WHEEL_FR, WHEEL_RL, WHEEL_RR};
pub use suspension::{suspension_step, GRAVITY};
pub use vehicle::{compute_tire_forces, step_vehicle, MAX_DT};

#[derive(Debug, thiserror::Error)]
pub enum DynamicsError {
    #[error("invalid friction knots: require S0 < Se < Sa, got ({0}, {1}, {2})")]
    InvalidKnots(f64, f64, f64),
    #[error("invalid vehicle parameters: {0}")]
    InvalidParams(String),
    #[error("integration diverged: non-finite state after step")]
    Diverged,
}
