//! Planar multi-agent driving simulator and reinforcement-learning toolkit.
//!
//! The crate is organized around the simulation stack:
//!
//! - [`dynamics`]: vehicle model (suspension, wheels, tire friction spline,
//!   Ackermann steering, drive/brake actuators) integrated at a fixed step.
//! - [`sensors`]: encoder, IPS, IMU, 2D LIDAR and camera projection models.
//! - [`world`]: maps (wall segments, occupancy grids), collision queries,
//!   intersection and race-track geometry, checkpoint/lap progress.
//! - [`envs`]: the two POMDP environments (cooperative intersection
//!   traversal, competitive head-to-head racing).
//! - [`learn`]: MLP policies with analytic gradients, PPO + GAE, behavioral
//!   cloning, GAIL, curiosity, demonstration recording.
//! - [`config`], [`replay`], [`metrics`], [`runner`]: run configuration,
//!   deterministic replay logs, training metrics, and the command-level
//!   entry points used by the CLI.

pub mod config;
pub mod dynamics;
pub mod envs;
pub mod geom;
pub mod learn;
pub mod metrics;
pub mod replay;
pub mod runner;
pub mod sensors;
pub mod stats;
pub mod world;
