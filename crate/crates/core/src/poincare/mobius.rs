use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use num_complex::Complex64;

use super::{DiskPoint, Geodesic, GeometryError, IdealPoint, Point};
use crate::tol::{TOL_CLASS, TOL_MATRIX};

/// Elliptic/parabolic/hyperbolic trichotomy for orientation-preserving
/// disk isometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsometryClass {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl fmt::Display for IsometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IsometryClass::Identity => "identity",
            IsometryClass::Elliptic => "elliptic",
            IsometryClass::Parabolic => "parabolic",
            IsometryClass::Hyperbolic => "hyperbolic",
        };
        f.write_str(s)
    }
}

/// Isometry of the disk `z ↦ (a z + b) / (b̄ z + ā)` with `|a|² − |b|² = 1`.
///
/// When `reverses` is set the map is `z ↦ M(z̄)`. The matrix is renormalized
/// after every composition, so long products keep `|a|² − |b|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusIsometry {
    a: Complex64,
    b: Complex64,
    reverses: bool,
}

/// Anything an isometry can move: interior points, ideal points, or either.
pub trait Actable: Sized {
    fn act(self, m: &MobiusIsometry) -> Result<Self, GeometryError>;
}

/// Maps whose Euclidean size `max(|b|, |Im a|)` is below this cannot be told
/// apart from elliptic or hyperbolic ones inside the parabolic band.
const PARABOLIC_SCALE: f64 = 3.162_277_660_168_379_5e-5; // sqrt(TOL_CLASS)

impl MobiusIsometry {
    pub const IDENTITY: MobiusIsometry = MobiusIsometry {
        a: Complex64::new(1.0, 0.0),
        b: Complex64::new(0.0, 0.0),
        reverses: false,
    };

    /// Builds an isometry from entries that must already satisfy
    /// `|a|² − |b|² = 1` (relative tolerance [`TOL_MATRIX`]); the result is
    /// renormalized exactly.
    pub fn new(a: Complex64, b: Complex64, reverses: bool) -> Result<Self, GeometryError> {
        if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        let det = a.norm_sqr() - b.norm_sqr();
        if (det - 1.0).abs() > TOL_MATRIX * a.norm_sqr().max(1.0) {
            return Err(GeometryError::NotUnimodular { det });
        }
        Self::normalized(a, b, reverses)
    }

    /// Scales `(a, b)` so that `|a|² − |b|² = 1`. Fails when the determinant
    /// is not positive.
    pub fn normalized(a: Complex64, b: Complex64, reverses: bool) -> Result<Self, GeometryError> {
        let det = a.norm_sqr() - b.norm_sqr();
        if !det.is_finite() {
            return Err(GeometryError::NonFinite);
        }
        if det <= 0.0 {
            return Err(GeometryError::NotUnimodular { det });
        }
        let s = 1.0 / libm::sqrt(det);
        Ok(Self {
            a: a * s,
            b: b * s,
            reverses,
        })
    }

    /// Rotation about the origin by `angle`.
    pub fn rotation(angle: f64) -> Self {
        Self {
            a: Complex64::new(libm::cos(angle / 2.0), libm::sin(angle / 2.0)),
            b: Complex64::new(0.0, 0.0),
            reverses: false,
        }
    }

    /// Hyperbolic translation by `t` along the real diameter, from −1 toward 1.
    pub fn real_translation(t: f64) -> Self {
        Self {
            a: Complex64::new(libm::cosh(t / 2.0), 0.0),
            b: Complex64::new(libm::sinh(t / 2.0), 0.0),
            reverses: false,
        }
    }

    /// The isometry `z ↦ (z − p) / (1 − p̄ z)` sending `p` to the origin.
    pub fn moving_to_origin(p: DiskPoint) -> Self {
        let s = 1.0 / libm::sqrt(1.0 - p.z().norm_sqr());
        Self {
            a: Complex64::new(s, 0.0),
            b: -p.z() * s,
            reverses: false,
        }
    }

    /// Complex conjugation `z ↦ z̄`.
    pub fn conjugation() -> Self {
        Self {
            reverses: true,
            ..Self::IDENTITY
        }
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn reverses_orientation(&self) -> bool {
        self.reverses
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusIsometry) -> MobiusIsometry {
        let (a2, b2) = if self.reverses {
            (other.a.conj(), other.b.conj())
        } else {
            (other.a, other.b)
        };
        let a = self.a * a2 + self.b * b2.conj();
        let b = self.a * b2 + self.b * a2.conj();
        let reverses = self.reverses != other.reverses;
        // |a|² − |b|² is only known to about ε(|a|² + |b|²); rescaling on
        // a determinant inside that noise would add error, not remove it
        let det = a.norm_sqr() - b.norm_sqr();
        if (det - 1.0).abs() <= TOL_MATRIX * (a.norm_sqr() + b.norm_sqr()) {
            return Self { a, b, reverses };
        }
        Self::normalized(a, b, reverses).unwrap_or(Self { a, b, reverses })
    }

    pub fn inverse(&self) -> MobiusIsometry {
        if self.reverses {
            Self {
                a: self.a,
                b: -self.b.conj(),
                reverses: true,
            }
        } else {
            Self {
                a: self.a.conj(),
                b: -self.b,
                reverses: false,
            }
        }
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &MobiusIsometry) -> MobiusIsometry {
        g.compose(self).compose(&g.inverse())
    }

    pub fn apply<P: Actable>(&self, p: P) -> Result<P, GeometryError> {
        p.act(self)
    }

    pub(crate) fn apply_complex(&self, z: Complex64) -> Complex64 {
        let z = if self.reverses { z.conj() } else { z };
        (self.a * z + self.b) / (self.b.conj() * z + self.a.conj())
    }

    /// `|M'|` on the circle at infinity, i.e. the factor by which the map
    /// stretches arcs near `p`.
    pub fn boundary_derivative(&self, p: IdealPoint) -> f64 {
        let z = p.to_complex();
        let z = if self.reverses { z.conj() } else { z };
        1.0 / (self.b.conj() * z + self.a.conj()).norm_sqr()
    }

    /// Extremes of [`Self::boundary_derivative`] over the whole circle.
    pub fn boundary_derivative_bounds(&self) -> (f64, f64) {
        let (na, nb) = (self.a.norm(), self.b.norm());
        (1.0 / ((na + nb) * (na + nb)), 1.0 / ((na - nb) * (na - nb)))
    }

    /// Largest entrywise difference to `other`, up to the overall sign of the
    /// matrix. Infinite when orientation flags differ.
    pub fn distance_to(&self, other: &MobiusIsometry) -> f64 {
        if self.reverses != other.reverses {
            return f64::INFINITY;
        }
        let plus = (self.a - other.a).norm().max((self.b - other.b).norm());
        let minus = (self.a + other.a).norm().max((self.b + other.b).norm());
        plus.min(minus)
    }

    /// True when the map is `±I` within [`TOL_MATRIX`].
    pub fn is_identity(&self) -> bool {
        self.distance_to(&Self::IDENTITY) <= TOL_MATRIX
    }

    /// Classifies the orientation-preserving part by `|Re a|`.
    ///
    /// For orientation-reversing maps this classifies the matrix `M` of
    /// `z ↦ M(z̄)`; check [`Self::reverses_orientation`] separately.
    pub fn classify(&self) -> Result<IsometryClass, GeometryError> {
        let plain = Self {
            reverses: false,
            ..*self
        };
        if plain.is_identity() {
            return Ok(IsometryClass::Identity);
        }
        let trace_half = self.a.re.abs();
        if trace_half > 1.0 + TOL_CLASS {
            Ok(IsometryClass::Hyperbolic)
        } else if trace_half < 1.0 - TOL_CLASS {
            Ok(IsometryClass::Elliptic)
        } else if self.b.norm().max(self.a.im.abs()) >= PARABOLIC_SCALE {
            Ok(IsometryClass::Parabolic)
        } else {
            Err(GeometryError::AmbiguousClass { trace_half })
        }
    }

    /// Fixed points on the circle at infinity. Hyperbolic maps return the
    /// attracting point first.
    pub fn fixed_points(&self) -> Result<Vec<IdealPoint>, GeometryError> {
        if self.reverses {
            return Err(GeometryError::OrientationReversing);
        }
        // Fixed points solve b̄ z² − 2i Im(a) z − b = 0.
        let bc = self.b.conj();
        let i_im = Complex64::new(0.0, self.a.im);
        match self.classify()? {
            IsometryClass::Identity => Err(GeometryError::IdentityInput),
            IsometryClass::Elliptic => Ok(Vec::new()),
            IsometryClass::Parabolic => Ok(vec![IdealPoint::from_direction(i_im / bc)?]),
            IsometryClass::Hyperbolic => {
                let re = self.a.re;
                let s = libm::copysign(libm::sqrt(re * re - 1.0), re);
                // |b̄ z + ā| = |Re a ± s|; the larger one is attracting.
                let attracting = IdealPoint::from_direction((i_im + s) / bc)?;
                let repelling = IdealPoint::from_direction((i_im - s) / bc)?;
                Ok(vec![attracting, repelling])
            }
        }
    }

    /// Attracting and repelling fixed points of a hyperbolic map.
    pub fn hyperbolic_fixed_points(&self) -> Result<(IdealPoint, IdealPoint), GeometryError> {
        if self.classify()? != IsometryClass::Hyperbolic {
            return Err(GeometryError::NotHyperbolic);
        }
        let fp = self.fixed_points()?;
        Ok((fp[0], fp[1]))
    }

    /// Axis of a hyperbolic map, oriented from the repelling to the
    /// attracting fixed point.
    pub fn axis(&self) -> Result<Geodesic, GeometryError> {
        let (attracting, repelling) = self.hyperbolic_fixed_points()?;
        Geodesic::new(repelling, attracting)
    }

    /// Translation length `2 arcosh |Re a|` of a hyperbolic map.
    pub fn translation_length(&self) -> Result<f64, GeometryError> {
        if self.classify()? != IsometryClass::Hyperbolic {
            return Err(GeometryError::NotHyperbolic);
        }
        Ok(2.0 * libm::acosh(self.a.re.abs()))
    }
}

impl Mul for MobiusIsometry {
    type Output = MobiusIsometry;

    fn mul(self, rhs: MobiusIsometry) -> MobiusIsometry {
        self.compose(&rhs)
    }
}

impl Actable for DiskPoint {
    fn act(self, m: &MobiusIsometry) -> Result<Self, GeometryError> {
        DiskPoint::new(m.apply_complex(self.z())).map_err(|e| match e {
            GeometryError::OutsideDisk { .. } => {
                GeometryError::NumericFailure("image left the open disk")
            }
            other => other,
        })
    }
}

impl Actable for IdealPoint {
    fn act(self, m: &MobiusIsometry) -> Result<Self, GeometryError> {
        IdealPoint::from_direction(m.apply_complex(self.to_complex()))
    }
}

impl Actable for Point {
    fn act(self, m: &MobiusIsometry) -> Result<Self, GeometryError> {
        Ok(match self {
            Point::Interior(p) => Point::Interior(p.act(m)?),
            Point::Ideal(p) => Point::Ideal(p.act(m)?),
        })
    }
}
