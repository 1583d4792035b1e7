use core::f64::consts::TAU;

use num_complex::Complex64;

use super::GeometryError;
use crate::tol::TOL_ANGLE;

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    z: Complex64,
}

impl DiskPoint {
    pub const ORIGIN: DiskPoint = DiskPoint {
        z: Complex64::new(0.0, 0.0),
    };

    pub fn new(z: Complex64) -> Result<Self, GeometryError> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        if z.norm_sqr() >= 1.0 {
            return Err(GeometryError::OutsideDisk { re: z.re, im: z.im });
        }
        Ok(Self { z })
    }

    pub fn from_parts(re: f64, im: f64) -> Result<Self, GeometryError> {
        Self::new(Complex64::new(re, im))
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn re(&self) -> f64 {
        self.z.re
    }

    pub fn im(&self) -> f64 {
        self.z.im
    }

    /// Euclidean modulus `|z|`.
    pub fn modulus(&self) -> f64 {
        self.z.norm()
    }
}

/// Hyperbolic distance `2 artanh(|p − q| / |1 − p̄q|)`.
pub fn hyp_distance(p: DiskPoint, q: DiskPoint) -> f64 {
    let num = (p.z - q.z).norm();
    let den = (Complex64::new(1.0, 0.0) - p.z.conj() * q.z).norm();
    2.0 * libm::atanh(num / den)
}

/// A point on the circle at infinity, stored as an angle in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct IdealPoint {
    theta: f64,
}

impl IdealPoint {
    pub fn new(theta: f64) -> Result<Self, GeometryError> {
        if !theta.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        Ok(Self {
            theta: reduce_angle(theta),
        })
    }

    /// The ideal point in the direction of a nonzero complex number.
    pub fn from_direction(z: Complex64) -> Result<Self, GeometryError> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        if z.norm_sqr() == 0.0 {
            return Err(GeometryError::NumericFailure("zero direction"));
        }
        Self::new(libm::atan2(z.im, z.re))
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(libm::cos(self.theta), libm::sin(self.theta))
    }

    /// Counterclockwise angle from `self` to `other`, in `[0, 2π)`.
    pub fn ccw_to(&self, other: IdealPoint) -> f64 {
        reduce_angle(other.theta - self.theta)
    }

    /// Shortest arc length between the two points, in `[0, π]`.
    pub fn angular_distance(&self, other: IdealPoint) -> f64 {
        let d = self.ccw_to(other);
        d.min(TAU - d)
    }

    pub fn approx_eq(&self, other: IdealPoint, tol: f64) -> bool {
        self.angular_distance(other) <= tol
    }

    /// The reflected point `θ ↦ −θ` (complex conjugation).
    pub fn conj(&self) -> IdealPoint {
        IdealPoint {
            theta: reduce_angle(-self.theta),
        }
    }

    pub(crate) fn same(&self, other: IdealPoint) -> bool {
        self.approx_eq(other, TOL_ANGLE)
    }
}

pub(crate) fn reduce_angle(theta: f64) -> f64 {
    let mut r = theta % TAU;
    if r < 0.0 {
        r += TAU;
    }
    if r >= TAU {
        r -= TAU;
    }
    r
}

/// A point of the closed disk: interior or ideal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    Interior(DiskPoint),
    Ideal(IdealPoint),
}

impl Point {
    pub fn complex(&self) -> Complex64 {
        match self {
            Point::Interior(p) => p.z(),
            Point::Ideal(p) => p.to_complex(),
        }
    }
}

impl From<DiskPoint> for Point {
    fn from(p: DiskPoint) -> Self {
        Point::Interior(p)
    }
}

impl From<IdealPoint> for Point {
    fn from(p: IdealPoint) -> Self {
        Point::Ideal(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn rejects_boundary_and_outside() {
        assert!(DiskPoint::from_parts(1.0, 0.0).is_err());
        assert!(DiskPoint::from_parts(0.8, 0.8).is_err());
        assert!(DiskPoint::from_parts(f64::NAN, 0.0).is_err());
        assert!(DiskPoint::from_parts(0.999, 0.0).is_ok());
    }

    #[test]
    fn distance_examples() {
        assert_eq!(hyp_distance(DiskPoint::ORIGIN, DiskPoint::ORIGIN), 0.0);
        let half = DiskPoint::from_parts(0.5, 0.0).unwrap();
        // ∫_0^{1/2} 2 dr / (1 − r²) = ln 3
        assert!((hyp_distance(DiskPoint::ORIGIN, half) - 1.098_612_288_668_109_8).abs() < 1e-12);
    }

    #[test]
    fn angles_reduce_canonically() {
        let p = IdealPoint::new(-PI / 2.0).unwrap();
        assert!((p.theta() - 1.5 * PI).abs() < 1e-15);
        let q = IdealPoint::new(5.0 * TAU + 0.25).unwrap();
        assert!((q.theta() - 0.25).abs() < 1e-12);
        assert!(IdealPoint::new(-1e-300).unwrap().theta() < TAU);
        assert!(IdealPoint::new(0.0).unwrap().approx_eq(IdealPoint::new(TAU - 1e-12).unwrap(), 1e-9));
    }
}
