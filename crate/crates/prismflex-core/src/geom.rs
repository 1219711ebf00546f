//! Small value types shared by every other module.

use core::f64::consts::FRAC_PI_2;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Absolute tolerance for geometric assertions on unit-scale inputs.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 { x: 0.0, y: 0.0, z: 0.0 };

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(self.y * o.z - self.z * o.y, self.z * o.x - self.x * o.z, self.x * o.y - self.y * o.x)
    }

    pub fn norm(self) -> f64 {
        libm::sqrt(self.dot(self))
    }

    pub fn distance(self, o: Vec3) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// Tolerance-based equality; vectors coming out of trigonometry are never
    /// compared bitwise.
    pub fn approx_eq(self, o: Vec3, tol: f64) -> bool {
        libm::fabs(self.x - o.x) <= tol && libm::fabs(self.y - o.y) <= tol && libm::fabs(self.z - o.z) <= tol
    }

    /// Unsigned angle in `[0, π]` between two vectors, accurate near 0 and π.
    pub fn angle_to(self, o: Vec3) -> f64 {
        libm::atan2(self.cross(o).norm(), self.dot(o))
    }

    /// Component of `self` orthogonal to the unit vector `axis`.
    pub fn reject(self, axis: Vec3) -> Vec3 {
        self - axis * self.dot(axis)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vec3 {
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f64) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

/// Returns `(u, w)` for the flexion angle `theta`.
///
/// `u·w = cos 2θ`; the two coincide at `θ = 0` and are antiparallel as
/// `|θ| → π/2`, which is excluded.
pub fn orientation_vectors(theta: f64) -> Result<(Vec3, Vec3)> {
    check_theta(theta)?;
    let (s, c) = libm::sincos(theta);
    Ok((Vec3::new(-s, -c, 0.0), Vec3::new(s, -c, 0.0)))
}

pub(crate) fn check_theta(theta: f64) -> Result<()> {
    if !theta.is_finite() || libm::fabs(theta) >= FRAC_PI_2 || libm::cos(theta) <= 0.0 {
        return Err(Error::Domain(alloc::format!(
            "theta = {theta} rad must satisfy |theta| < pi/2 (cos theta = 0 is a division by zero)"
        )));
    }
    Ok(())
}

/// The positive branch `[lo, hi] ⊂ [0, π/2)` of admissible flexion angles.
///
/// Every juncture is mirror-symmetric under `θ → −θ` (the roles of `u` and
/// `w` swap and the frame mirrors in `x = 0`), so the full motion range is
/// `[lo, hi] ∪ [−hi, −lo]`. When `lo == 0` the two branches join into one
/// interval through `θ = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlexionInterval {
    pub lo: f64,
    pub hi: f64,
    /// Whether `lo` itself is admissible (a flat configuration when `lo > 0`).
    pub closed_lo: bool,
    /// Whether `hi` itself is admissible; false when `hi = π/2`.
    pub closed_hi: bool,
}

impl FlexionInterval {
    pub const FULL: FlexionInterval = FlexionInterval { lo: 0.0, hi: FRAC_PI_2, closed_lo: true, closed_hi: false };

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// True when `|theta|` lies in the interval (endpoints per the flags).
    pub fn contains(&self, theta: f64) -> bool {
        let t = libm::fabs(theta);
        let above = if self.closed_lo { t >= self.lo } else { t > self.lo };
        let below = if self.closed_hi { t <= self.hi } else { t < self.hi };
        above && below
    }

    /// Like [`contains`](Self::contains) but admits a slack of `tol` radians
    /// at each closed endpoint.
    pub fn contains_with_slack(&self, theta: f64, tol: f64) -> bool {
        let t = libm::fabs(theta);
        let above = if self.closed_lo { t >= self.lo - tol } else { t > self.lo };
        let below = if self.closed_hi { t <= self.hi + tol } else { t < self.hi };
        above && below
    }

    pub fn intersect(&self, other: &FlexionInterval) -> Option<FlexionInterval> {
        let (lo, closed_lo) = if self.lo > other.lo {
            (self.lo, self.closed_lo)
        } else if other.lo > self.lo {
            (other.lo, other.closed_lo)
        } else {
            (self.lo, self.closed_lo && other.closed_lo)
        };
        let (hi, closed_hi) = if self.hi < other.hi {
            (self.hi, self.closed_hi)
        } else if other.hi < self.hi {
            (other.hi, other.closed_hi)
        } else {
            (self.hi, self.closed_hi && other.closed_hi)
        };
        if lo > hi || (lo == hi && !(closed_lo && closed_hi)) {
            None
        } else {
            Some(FlexionInterval { lo, hi, closed_lo, closed_hi })
        }
    }

    /// `n` evenly spaced strictly interior samples, `lo + (hi − lo)(i + 1)/(n + 1)`.
    ///
    /// Endpoints are flat configurations; they are reachable through
    /// [`crate::realize`] but not part of a sweep.
    pub fn interior_samples(&self, n: usize) -> alloc::vec::Vec<f64> {
        let step = (self.hi - self.lo) / (n as f64 + 1.0);
        (0..n).map(|i| self.lo + step * (i as f64 + 1.0)).collect()
    }
}

pub(crate) fn deg(x: f64) -> f64 {
    x.to_degrees()
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_4, FRAC_PI_6};
    use proptest::prelude::*;

    #[test]
    fn theta_zero_vectors_coincide() {
        let (u, w) = orientation_vectors(0.0).unwrap();
        assert!(u.approx_eq(Vec3::new(0.0, -1.0, 0.0), 1e-15));
        assert!(w.approx_eq(Vec3::new(0.0, -1.0, 0.0), 1e-15));
    }

    #[test]
    fn quarter_pi_vectors_are_orthogonal() {
        let (u, w) = orientation_vectors(FRAC_PI_4).unwrap();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert!(u.approx_eq(Vec3::new(-h, -h, 0.0), 1e-15));
        assert!(w.approx_eq(Vec3::new(h, -h, 0.0), 1e-15));
        assert!(u.dot(w).abs() < 1e-15);
    }

    #[test]
    fn sixth_pi_dot_is_half() {
        let (u, w) = orientation_vectors(FRAC_PI_6).unwrap();
        // direct component evaluation: −s·s + c·c with s = 1/2, c = √3/2
        let direct = -0.5 * 0.5 + 0.75f64.sqrt() * 0.75f64.sqrt();
        assert!((u.dot(w) - direct).abs() < 1e-12);
        assert!((u.dot(w) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn right_angle_theta_rejected() {
        assert!(matches!(orientation_vectors(FRAC_PI_2), Err(Error::Domain(_))));
        assert!(matches!(orientation_vectors(-FRAC_PI_2), Err(Error::Domain(_))));
        assert!(orientation_vectors(f64::NAN).is_err());
    }

    #[test]
    fn interval_intersection() {
        let a = FlexionInterval { lo: 0.1, hi: 1.0, closed_lo: true, closed_hi: true };
        let b = FlexionInterval { lo: 0.5, hi: 1.2, closed_lo: false, closed_hi: false };
        let c = a.intersect(&b).unwrap();
        assert_eq!((c.lo, c.hi, c.closed_lo, c.closed_hi), (0.5, 1.0, false, true));
        let d = FlexionInterval { lo: 1.1, hi: 1.3, closed_lo: true, closed_hi: true };
        assert!(a.intersect(&d).is_none());
        assert!(c.contains(-0.7));
        assert!(!c.contains(0.5));
    }

    #[test]
    fn interior_samples_single_is_midpoint() {
        let i = FlexionInterval { lo: 0.2, hi: 0.6, closed_lo: true, closed_hi: true };
        let s = i.interior_samples(1);
        assert_eq!(s.len(), 1);
        assert!((s[0] - 0.4).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn orientation_vectors_unit_and_dot(theta in -1.57f64..1.57) {
            let (u, w) = orientation_vectors(theta).unwrap();
            prop_assert!((u.norm() - 1.0).abs() < 1e-12);
            prop_assert!((w.norm() - 1.0).abs() < 1e-12);
            prop_assert!((u.dot(w) - (2.0 * theta).cos()).abs() < 1e-12);
        }

        #[test]
        fn negating_theta_swaps_u_and_w(theta in -1.57f64..1.57) {
            let (u, w) = orientation_vectors(theta).unwrap();
            let (um, wm) = orientation_vectors(-theta).unwrap();
            prop_assert!(um.approx_eq(w, 1e-15));
            prop_assert!(wm.approx_eq(u, 1e-15));
        }
    }
}
