//! Small planar geometry primitives shared across the crate.
//!
//! Conventions: body frames are x-forward / y-right with yaw positive
//! clockwise when viewed from above (right-handed about the downward axis),
//! so a positive steering angle turns the vehicle toward positive yaw.

use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

pub const PI: f64 = std::f64::consts::PI;

/// 2D vector / point in meters.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the planar cross product.
    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn normalized(self) -> Vec2 {
        let n = self.norm();
        if n > 0.0 {
            self * (1.0 / n)
        } else {
            Vec2::ZERO
        }
    }

    /// Rotate by `angle` (positive rotates x toward y).
    pub fn rotated(self, angle: f64) -> Vec2 {
        let (s, c) = angle.sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, rhs: f64) -> Vec2 {
        Vec2::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

/// Planar pose: position plus yaw.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Pose2 {
    pub pos: Vec2,
    pub yaw: f64,
}

impl Pose2 {
    pub fn new(x: f64, y: f64, yaw: f64) -> Self {
        Pose2 {
            pos: Vec2::new(x, y),
            yaw,
        }
    }

    /// Transform a point from this pose's local frame to the world frame.
    pub fn to_world(self, local: Vec2) -> Vec2 {
        self.pos + local.rotated(self.yaw)
    }

    /// Transform a world point into this pose's local frame.
    pub fn to_local(self, world: Vec2) -> Vec2 {
        (world - self.pos).rotated(-self.yaw)
    }

    pub fn heading(self) -> Vec2 {
        Vec2::new(self.yaw.cos(), self.yaw.sin())
    }
}

/// Wrap an angle into (-pi, pi].
pub fn wrap_angle(a: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut r = a % two_pi;
    if r <= -PI {
        r += two_pi;
    } else if r > PI {
        r -= two_pi;
    }
    r
}

/// Line segment between two points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub a: Vec2,
    pub b: Vec2,
}

impl Segment {
    pub fn new(a: Vec2, b: Vec2) -> Self {
        Segment { a, b }
    }

    pub fn length(self) -> f64 {
        (self.b - self.a).norm()
    }

    pub fn midpoint(self) -> Vec2 {
        (self.a + self.b) * 0.5
    }

    /// Distance along a ray (origin, unit dir) to the intersection with this
    /// segment, or `None` if the ray misses.
    pub fn ray_intersect(self, origin: Vec2, dir: Vec2) -> Option<f64> {
        let e = self.b - self.a;
        let denom = dir.cross(e);
        if denom.abs() < 1e-15 {
            return None; // parallel (grazing rays count as no-hit)
        }
        let ao = self.a - origin;
        let t = ao.cross(e) / denom;
        let u = ao.cross(dir) / denom;
        if t >= 0.0 && (0.0..=1.0).contains(&u) {
            Some(t)
        } else {
            None
        }
    }

    /// Proper segment-segment intersection test (shared endpoints count).
    pub fn intersects(self, other: Segment) -> bool {
        let d1 = self.b - self.a;
        let d2 = other.b - other.a;
        let denom = d1.cross(d2);
        let diff = other.a - self.a;
        if denom.abs() < 1e-15 {
            // Collinear overlap check.
            if diff.cross(d1).abs() > 1e-12 {
                return false;
            }
            let len_sq = d1.norm_sq();
            if len_sq == 0.0 {
                return (other.a - self.a).norm_sq() < 1e-24;
            }
            let t0 = diff.dot(d1) / len_sq;
            let t1 = (other.b - self.a).dot(d1) / len_sq;
            let (lo, hi) = if t0 < t1 { (t0, t1) } else { (t1, t0) };
            return hi >= 0.0 && lo <= 1.0;
        }
        let t = diff.cross(d2) / denom;
        let u = diff.cross(d1) / denom;
        (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u)
    }
}
