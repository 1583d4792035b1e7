use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::{DiskPoint, GeometryError, IdealPoint, MobiusIsometry, Point};
use crate::tol::TOL_ANGLE;

/// A complete geodesic, given by its two ideal endpoints.
///
/// The endpoints are stored in order (`start`, `end`) so that half planes and
/// translations have a direction, but [`Geodesic::same_as`] ignores the order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    start: IdealPoint,
    end: IdealPoint,
}

/// Euclidean shape of a geodesic: a diameter or an arc of a circle
/// orthogonal to the unit circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeodesicShape {
    Diameter { direction: Complex64 },
    Arc { center: Complex64, radius: f64 },
}

impl Geodesic {
    pub fn new(start: IdealPoint, end: IdealPoint) -> Result<Self, GeometryError> {
        if start.same(end) {
            return Err(GeometryError::DegenerateGeodesic);
        }
        Ok(Self { start, end })
    }

    pub fn start(&self) -> IdealPoint {
        self.start
    }

    pub fn end(&self) -> IdealPoint {
        self.end
    }

    pub fn reversed(&self) -> Geodesic {
        Geodesic {
            start: self.end,
            end: self.start,
        }
    }

    /// Equality of the unordered endpoint pairs.
    pub fn same_as(&self, other: &Geodesic, tol: f64) -> bool {
        (self.start.approx_eq(other.start, tol) && self.end.approx_eq(other.end, tol))
            || (self.start.approx_eq(other.end, tol) && self.end.approx_eq(other.start, tol))
    }

    /// The unique geodesic through two distinct points of the closed disk,
    /// oriented from `x` toward `y`.
    pub fn through(x: Point, y: Point) -> Result<Self, GeometryError> {
        match (x, y) {
            (Point::Ideal(p), Point::Ideal(q)) => {
                Self::new(p, q).map_err(|_| GeometryError::CoincidentPoints)
            }
            (Point::Interior(p), other) => Self::from_interior(p, other),
            (Point::Ideal(_), Point::Interior(q)) => {
                Self::from_interior(q, x).map(|g| g.reversed())
            }
        }
    }

    // Oriented from `p` toward `q`.
    fn from_interior(p: DiskPoint, q: Point) -> Result<Self, GeometryError> {
        let to_origin = MobiusIsometry::moving_to_origin(p);
        let w = to_origin.apply_complex(q.complex());
        if w.norm() < 1e-15 {
            return Err(GeometryError::CoincidentPoints);
        }
        let u = w / w.norm();
        let back = to_origin.inverse();
        let start = IdealPoint::from_direction(back.apply_complex(-u))?;
        let end = IdealPoint::from_direction(back.apply_complex(u))?;
        Self::new(start, end)
    }

    pub fn shape(&self) -> GeodesicShape {
        let (alpha, beta) = (self.start.theta(), self.end.theta());
        let half = (beta - alpha) / 2.0;
        let cos_half = libm::cos(half);
        if cos_half.abs() < 1e-12 {
            GeodesicShape::Diameter {
                direction: self.start.to_complex(),
            }
        } else {
            let mid = (alpha + beta) / 2.0;
            let center = Complex64::new(libm::cos(mid), libm::sin(mid)) / cos_half;
            GeodesicShape::Arc {
                center,
                radius: libm::tan(half).abs(),
            }
        }
    }

    /// Euclidean test that `z` lies on the geodesic's circle or diameter.
    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        match self.shape() {
            GeodesicShape::Diameter { direction } => {
                (direction.re * z.im - direction.im * z.re).abs() <= tol
            }
            GeodesicShape::Arc { center, radius } => ((z - center).norm() - radius).abs() <= tol,
        }
    }

    /// An isometry taking −1 to `start` and 1 to `end`, so it carries the real
    /// diameter onto this geodesic.
    pub fn standard_frame(&self) -> Result<MobiusIsometry, GeometryError> {
        // S(1) = (a+b)/conj(a+b) and S(−1) = −(a−b)/conj(a−b); pick the phases
        // of a ± b accordingly and scale so that Re((a+b)·conj(a−b)) = 1.
        let mu = self.end.theta() / 2.0;
        let nu = (self.start.theta() + PI) / 2.0;
        let mut sum = Complex64::new(libm::cos(mu), libm::sin(mu));
        let mut diff = Complex64::new(libm::cos(nu), libm::sin(nu));
        let mut c = libm::cos(mu - nu);
        if c < 0.0 {
            diff = -diff;
            c = -c;
        }
        if c < 1e-15 {
            return Err(GeometryError::DegenerateGeodesic);
        }
        let scale = 1.0 / libm::sqrt(c);
        sum *= scale;
        diff *= scale;
        MobiusIsometry::normalized((sum + diff) / 2.0, (sum - diff) / 2.0, false)
    }

    pub fn image_under(&self, m: &MobiusIsometry) -> Result<Geodesic, GeometryError> {
        Geodesic::new(m.apply(self.start)?, m.apply(self.end)?)
    }
}

/// Hyperbolic translation by `length` along `g`, moving points from
/// `g.start()` toward `g.end()`.
pub fn translation_along(g: &Geodesic, length: f64) -> Result<MobiusIsometry, GeometryError> {
    if length <= 0.0 || !length.is_finite() {
        return Err(GeometryError::NonpositiveLength(length));
    }
    let frame = g.standard_frame()?;
    Ok(MobiusIsometry::real_translation(length).conjugate_by(&frame))
}

/// Which component of the complement of a directed geodesic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A geodesic together with one of the two components of its complement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlane {
    boundary: Geodesic,
    side: Side,
}

impl HalfPlane {
    pub fn new(boundary: Geodesic, side: Side) -> Self {
        Self { boundary, side }
    }

    pub fn boundary(&self) -> Geodesic {
        self.boundary
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Which side of the directed boundary `p` lies on; `None` when `p` is on
    /// the boundary to within `tol` (measured after moving the boundary to the
    /// real diameter).
    pub fn side_of(&self, p: Point, tol: f64) -> Result<Option<Side>, GeometryError> {
        let frame = self.boundary.standard_frame()?.inverse();
        let w = frame.apply_complex(p.complex());
        Ok(if w.im > tol {
            Some(Side::Left)
        } else if w.im < -tol {
            Some(Side::Right)
        } else {
            None
        })
    }

    /// Closed half-plane membership.
    pub fn contains(&self, p: Point) -> Result<bool, GeometryError> {
        Ok(match self.side_of(p, TOL_ANGLE)? {
            None => true,
            Some(s) => s == self.side,
        })
    }
}

/// Largest Euclidean distance between two of the given points.
///
/// Reduces to the convex hull first, then scans hull vertex pairs.
pub fn euclidean_diameter(points: &[Point]) -> Result<f64, GeometryError> {
    if points.is_empty() {
        return Err(GeometryError::EmptySet);
    }
    let mut pts: Vec<(f64, f64)> = points
        .iter()
        .map(|p| {
            let z = p.complex();
            (z.re, z.im)
        })
        .collect();
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));
    pts.dedup();
    let hull = convex_hull(&pts);
    let mut best: f64 = 0.0;
    for (i, p) in hull.iter().enumerate() {
        for q in &hull[i + 1..] {
            best = best.max(libm::hypot(p.0 - q.0, p.1 - q.1));
        }
    }
    Ok(best)
}

// Andrew's monotone chain on lexicographically sorted, deduplicated input.
fn convex_hull(pts: &[(f64, f64)]) -> Vec<(f64, f64)> {
    if pts.len() < 3 {
        return pts.to_vec();
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(2 * pts.len());
    for &p in pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len
            && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poincare::{hyp_distance, IsometryClass};

    fn ideal(t: f64) -> IdealPoint {
        IdealPoint::new(t).unwrap()
    }

    #[test]
    fn through_examples() {
        let g = Geodesic::through(ideal(0.3).into(), ideal(0.3 + PI).into()).unwrap();
        assert!(matches!(g.shape(), GeodesicShape::Diameter { .. }));

        let g = Geodesic::through(
            DiskPoint::ORIGIN.into(),
            DiskPoint::from_parts(0.5, 0.0).unwrap().into(),
        )
        .unwrap();
        assert!(g.same_as(&Geodesic::new(ideal(0.0), ideal(PI)).unwrap(), 1e-12));
        assert!(g.end().approx_eq(ideal(0.0), 1e-12));

        let p = DiskPoint::ORIGIN;
        assert_eq!(
            Geodesic::through(p.into(), p.into()),
            Err(GeometryError::CoincidentPoints)
        );
        assert_eq!(
            Geodesic::through(ideal(1.0).into(), ideal(1.0).into()),
            Err(GeometryError::CoincidentPoints)
        );
    }

    #[test]
    fn ideal_then_interior_is_oriented() {
        let q = DiskPoint::from_parts(0.2, 0.3).unwrap();
        let g = Geodesic::through(ideal(2.0).into(), q.into()).unwrap();
        assert!(g.start().approx_eq(ideal(2.0), 1e-12));
        assert!(g.contains(q.z(), 1e-12));
    }

    #[test]
    fn canonical_translation() {
        let g = Geodesic::new(ideal(PI), ideal(0.0)).unwrap();
        let m = translation_along(&g, 1.3).unwrap();
        assert!(m.distance_to(&MobiusIsometry::real_translation(1.3)) < 1e-14);
        assert_eq!(
            translation_along(&g, 0.0),
            Err(GeometryError::NonpositiveLength(0.0))
        );
    }

    #[test]
    fn general_translation_has_requested_axis_and_length() {
        let g = Geodesic::new(ideal(0.4), ideal(2.1)).unwrap();
        let m = translation_along(&g, 0.9).unwrap();
        assert_eq!(m.classify().unwrap(), IsometryClass::Hyperbolic);
        let ax = m.axis().unwrap();
        assert!(ax.start().approx_eq(g.start(), 1e-10));
        assert!(ax.end().approx_eq(g.end(), 1e-10));
        let on_axis = g.standard_frame().unwrap().apply(DiskPoint::ORIGIN).unwrap();
        assert!(g.contains(on_axis.z(), 1e-12));
        let moved = m.apply(on_axis).unwrap();
        assert!((hyp_distance(on_axis, moved) - 0.9).abs() < 1e-9);
        assert!(((m * m).translation_length().unwrap() - 1.8).abs() < 1e-9);
    }

    #[test]
    fn half_plane_sides() {
        let g = Geodesic::new(ideal(PI), ideal(0.0)).unwrap();
        let upper = HalfPlane::new(g, Side::Left);
        let i_half = DiskPoint::from_parts(0.0, 0.5).unwrap();
        assert!(upper.contains(i_half.into()).unwrap());
        assert!(!upper
            .contains(DiskPoint::from_parts(0.0, -0.5).unwrap().into())
            .unwrap());
        assert!(upper.contains(DiskPoint::ORIGIN.into()).unwrap());
        // ideal arc counterclockwise from start to end is on the right
        let h = HalfPlane::new(Geodesic::new(ideal(0.0), ideal(1.0)).unwrap(), Side::Right);
        assert!(h.contains(ideal(0.5).into()).unwrap());
        assert!(!h.contains(ideal(3.0).into()).unwrap());
    }

    #[test]
    fn diameter_small_cases() {
        assert_eq!(euclidean_diameter(&[]), Err(GeometryError::EmptySet));
        assert_eq!(euclidean_diameter(&[DiskPoint::ORIGIN.into()]).unwrap(), 0.0);
        let r = 0.3;
        let pts = [
            DiskPoint::from_parts(-r, 0.0).unwrap().into(),
            DiskPoint::from_parts(r, 0.0).unwrap().into(),
        ];
        assert!((euclidean_diameter(&pts).unwrap() - 2.0 * r).abs() < 1e-15);
    }
}
