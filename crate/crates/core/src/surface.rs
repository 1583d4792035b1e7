//! Topological bookkeeping for surfaces: Euler characteristic, crosscap
//! normal form, doubling along the boundary, and the standard/nonstandard
//! classifier.
//!
//! A finite-type surface is described by its [`Signature`] `(g, c, b, a)`:
//! handles, crosscaps, compact boundary circles and annular ends. Surfaces
//! with noncompact boundary are only modeled through the two named variants
//! [`SurfaceDescription::HalfPlane`] and [`SurfaceDescription::DoublyInfiniteStrip`].

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("Euler characteristic is not determined by infinitely many boundary components alone")]
    UnderdeterminedChi,
    #[error("surface has no boundary to double along")]
    NoBoundary,
    #[error("boundary of an infinite-type surface with finitely many boundary components is not modeled")]
    BoundaryUnknown,
    #[error("doubling a nonorientable surface is not supported (the double has chi = {chi})")]
    NonorientableDoubleUnsupported { chi: i64 },
    #[error("infinite-type description must set at least one flag")]
    EmptyInfiniteType,
}

/// `(g, c, b, a)`: handles, crosscaps, compact boundary circles, annular ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Signature {
    pub g: u32,
    pub c: u32,
    pub b: u32,
    pub a: u32,
}

impl Signature {
    pub const fn new(g: u32, c: u32, b: u32, a: u32) -> Self {
        Self { g, c, b, a }
    }

    pub fn is_orientable(&self) -> bool {
        self.c == 0
    }

    /// `χ = 2 − 2g − c − b − a`.
    pub fn chi(&self) -> i64 {
        2 - 2 * i64::from(self.g) - i64::from(self.c) - i64::from(self.b) - i64::from(self.a)
    }

    /// `2g + c + b + a`, the number of boundary curves and punctures left
    /// after cutting every handle and crosscap open.
    pub fn complexity(&self) -> u32 {
        2 * self.g + self.c + self.b + self.a
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.g, self.c, self.b, self.a)
    }
}

/// A signature in which handles only appear on orientable surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalSignature(Signature);

impl CanonicalSignature {
    pub fn signature(&self) -> Signature {
        self.0
    }
}

/// Trades every handle on a nonorientable surface for two crosscaps
/// (one handle plus one crosscap is three crosscaps).
pub fn canonicalize(s: Signature) -> CanonicalSignature {
    if s.c > 0 {
        CanonicalSignature(Signature::new(0, s.c + 2 * s.g, s.b, s.a))
    } else {
        CanonicalSignature(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurfaceDescription {
    FiniteType(Signature),
    /// `ℝ × [0, ∞)`.
    HalfPlane,
    /// `[0, 1] × ℝ`.
    DoublyInfiniteStrip,
    InfiniteType {
        infinite_boundary: bool,
        infinite_chi: bool,
    },
}

impl SurfaceDescription {
    pub fn finite(g: u32, c: u32, b: u32, a: u32) -> Self {
        SurfaceDescription::FiniteType(Signature::new(g, c, b, a))
    }

    pub fn infinite(infinite_boundary: bool, infinite_chi: bool) -> Result<Self, SurfaceError> {
        if !infinite_boundary && !infinite_chi {
            return Err(SurfaceError::EmptyInfiniteType);
        }
        Ok(SurfaceDescription::InfiniteType {
            infinite_boundary,
            infinite_chi,
        })
    }

    /// Number of noncompact boundary lines, when known to be finite.
    pub fn noncompact_boundary_count(&self) -> u32 {
        match self {
            SurfaceDescription::HalfPlane => 1,
            SurfaceDescription::DoublyInfiniteStrip => 2,
            _ => 0,
        }
    }

    pub fn has_boundary(&self) -> bool {
        match self {
            SurfaceDescription::FiniteType(s) => s.b > 0,
            SurfaceDescription::HalfPlane | SurfaceDescription::DoublyInfiniteStrip => true,
            SurfaceDescription::InfiniteType {
                infinite_boundary, ..
            } => *infinite_boundary,
        }
    }
}

/// Euler characteristic: an integer, or `−∞` when `b₁` is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chi {
    Finite(i64),
    NegInfinity,
}

impl Chi {
    pub fn is_negative(&self) -> bool {
        match self {
            Chi::Finite(x) => *x < 0,
            Chi::NegInfinity => true,
        }
    }
}

impl fmt::Display for Chi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chi::Finite(x) => write!(f, "{x}"),
            Chi::NegInfinity => f.write_str("-inf"),
        }
    }
}

pub fn euler_characteristic(d: &SurfaceDescription) -> Result<Chi, SurfaceError> {
    match d {
        SurfaceDescription::FiniteType(s) => Ok(Chi::Finite(s.chi())),
        // contractible
        SurfaceDescription::HalfPlane | SurfaceDescription::DoublyInfiniteStrip => {
            Ok(Chi::Finite(1))
        }
        SurfaceDescription::InfiniteType {
            infinite_chi: true,
            ..
        } => Ok(Chi::NegInfinity),
        SurfaceDescription::InfiniteType {
            infinite_boundary: true,
            infinite_chi: false,
        } => Err(SurfaceError::UnderdeterminedChi),
        SurfaceDescription::InfiniteType { .. } => Err(SurfaceError::EmptyInfiniteType),
    }
}

/// The double `2L` plus the two Euler characteristic readings of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoublingReport {
    pub double: SurfaceDescription,
    /// Number `r` of noncompact boundary components of the input.
    pub noncompact_boundary: u32,
    /// `χ(2L)` read off the doubled description directly.
    pub chi_direct: Chi,
    /// `2χ(L) − r`, which agrees with `chi_direct`.
    pub chi_minus_r: Chi,
    /// `2χ(L) + r`, the other sign convention, kept for comparison.
    pub chi_plus_r: Chi,
}

/// Doubles `d` along its boundary.
pub fn double(d: &SurfaceDescription) -> Result<SurfaceDescription, SurfaceError> {
    doubling_report(d).map(|r| r.double)
}

pub fn doubling_report(d: &SurfaceDescription) -> Result<DoublingReport, SurfaceError> {
    let double = match d {
        SurfaceDescription::FiniteType(s) => {
            if s.b == 0 {
                return Err(SurfaceError::NoBoundary);
            }
            if s.c > 0 {
                return Err(SurfaceError::NonorientableDoubleUnsupported {
                    chi: 2 * s.chi(),
                });
            }
            SurfaceDescription::finite(2 * s.g + s.b - 1, 0, 0, 2 * s.a)
        }
        SurfaceDescription::HalfPlane => SurfaceDescription::finite(0, 0, 0, 1),
        SurfaceDescription::DoublyInfiniteStrip => SurfaceDescription::finite(0, 0, 0, 2),
        SurfaceDescription::InfiniteType {
            infinite_boundary: true,
            ..
        } => {
            // every boundary circle or line contributes to b₁(2L)
            SurfaceDescription::InfiniteType {
                infinite_boundary: false,
                infinite_chi: true,
            }
        }
        SurfaceDescription::InfiniteType { .. } => return Err(SurfaceError::BoundaryUnknown),
    };
    let r = d.noncompact_boundary_count();
    let chi_direct = euler_characteristic(&double)?;
    let (chi_minus_r, chi_plus_r) = match euler_characteristic(d) {
        Ok(Chi::Finite(x)) => (
            Chi::Finite(2 * x - i64::from(r)),
            Chi::Finite(2 * x + i64::from(r)),
        ),
        Ok(Chi::NegInfinity) | Err(SurfaceError::UnderdeterminedChi) => {
            (Chi::NegInfinity, Chi::NegInfinity)
        }
        Err(e) => return Err(e),
    };
    debug_assert_eq!(chi_direct, chi_minus_r);
    Ok(DoublingReport {
        double,
        noncompact_boundary: r,
        chi_direct,
        chi_minus_r,
        chi_plus_r,
    })
}

/// The thirteen surfaces that carry no standard hyperbolic metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NonstandardSurface {
    OpenDisk,
    ClosedDisk,
    OpenAnnulus,
    HalfOpenAnnulus,
    ClosedAnnulus,
    OpenMobiusBand,
    ClosedMobiusBand,
    HalfPlane,
    DoublyInfiniteStrip,
    Sphere,
    ProjectivePlane,
    Torus,
    KleinBottle,
}

impl NonstandardSurface {
    pub const ALL: [NonstandardSurface; 13] = [
        NonstandardSurface::OpenDisk,
        NonstandardSurface::ClosedDisk,
        NonstandardSurface::OpenAnnulus,
        NonstandardSurface::HalfOpenAnnulus,
        NonstandardSurface::ClosedAnnulus,
        NonstandardSurface::OpenMobiusBand,
        NonstandardSurface::ClosedMobiusBand,
        NonstandardSurface::HalfPlane,
        NonstandardSurface::DoublyInfiniteStrip,
        NonstandardSurface::Sphere,
        NonstandardSurface::ProjectivePlane,
        NonstandardSurface::Torus,
        NonstandardSurface::KleinBottle,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            NonstandardSurface::OpenDisk => "open disk",
            NonstandardSurface::ClosedDisk => "closed disk",
            NonstandardSurface::OpenAnnulus => "open annulus",
            NonstandardSurface::HalfOpenAnnulus => "half open annulus",
            NonstandardSurface::ClosedAnnulus => "closed annulus",
            NonstandardSurface::OpenMobiusBand => "open Möbius band",
            NonstandardSurface::ClosedMobiusBand => "closed Möbius band",
            NonstandardSurface::HalfPlane => "half plane",
            NonstandardSurface::DoublyInfiniteStrip => "doubly infinite strip",
            NonstandardSurface::Sphere => "sphere",
            NonstandardSurface::ProjectivePlane => "projective plane",
            NonstandardSurface::Torus => "torus",
            NonstandardSurface::KleinBottle => "Klein bottle",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|s| s.name() == name)
    }

    pub fn description(&self) -> SurfaceDescription {
        use SurfaceDescription as D;
        match self {
            NonstandardSurface::OpenDisk => D::finite(0, 0, 0, 1),
            NonstandardSurface::ClosedDisk => D::finite(0, 0, 1, 0),
            NonstandardSurface::OpenAnnulus => D::finite(0, 0, 0, 2),
            NonstandardSurface::HalfOpenAnnulus => D::finite(0, 0, 1, 1),
            NonstandardSurface::ClosedAnnulus => D::finite(0, 0, 2, 0),
            NonstandardSurface::OpenMobiusBand => D::finite(0, 1, 0, 1),
            NonstandardSurface::ClosedMobiusBand => D::finite(0, 1, 1, 0),
            NonstandardSurface::HalfPlane => D::HalfPlane,
            NonstandardSurface::DoublyInfiniteStrip => D::DoublyInfiniteStrip,
            NonstandardSurface::Sphere => D::finite(0, 0, 0, 0),
            NonstandardSurface::ProjectivePlane => D::finite(0, 1, 0, 0),
            NonstandardSurface::Torus => D::finite(1, 0, 0, 0),
            NonstandardSurface::KleinBottle => D::finite(0, 2, 0, 0),
        }
    }

    /// Matches a finite-type signature with `χ ≥ 0` against the eleven
    /// compact-boundary entries, by case on which of `g, c, b, a` are nonzero.
    fn from_nonnegative_signature(s: Signature) -> Option<Self> {
        use NonstandardSurface as N;
        let s = canonicalize(s).signature();
        if s.complexity() > 2 {
            return None;
        }
        Some(match (s.g, s.c, s.b, s.a) {
            (0, 0, 0, 0) => N::Sphere,
            (1, 0, 0, 0) => N::Torus,
            (0, 1, 0, 0) => N::ProjectivePlane,
            (0, 2, 0, 0) => N::KleinBottle,
            (0, 0, 1, 0) => N::ClosedDisk,
            (0, 0, 2, 0) => N::ClosedAnnulus,
            (0, 0, 0, 1) => N::OpenDisk,
            (0, 0, 0, 2) => N::OpenAnnulus,
            (0, 1, 1, 0) => N::ClosedMobiusBand,
            (0, 1, 0, 1) => N::OpenMobiusBand,
            (0, 0, 1, 1) => N::HalfOpenAnnulus,
            _ => return None,
        })
    }
}

impl fmt::Display for NonstandardSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StandardReason {
    NegativeChi,
    InThirteenList(NonstandardSurface),
    InfiniteTypeRule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StandardnessVerdict {
    pub standard: bool,
    pub reason: StandardReason,
    /// `None` when the description does not determine `χ`.
    pub chi: Option<Chi>,
}

impl StandardnessVerdict {
    pub fn name(&self) -> Option<&'static str> {
        match self.reason {
            StandardReason::InThirteenList(s) => Some(s.name()),
            _ => None,
        }
    }
}

/// Decides whether `d` admits a standard hyperbolic metric.
pub fn is_standard(d: &SurfaceDescription) -> StandardnessVerdict {
    let nonstandard = |s: NonstandardSurface, chi| StandardnessVerdict {
        standard: false,
        reason: StandardReason::InThirteenList(s),
        chi: Some(Chi::Finite(chi)),
    };
    match d {
        SurfaceDescription::FiniteType(s) => {
            let chi = s.chi();
            if chi < 0 {
                StandardnessVerdict {
                    standard: true,
                    reason: StandardReason::NegativeChi,
                    chi: Some(Chi::Finite(chi)),
                }
            } else {
                let entry = NonstandardSurface::from_nonnegative_signature(*s)
                    .expect("every signature with nonnegative chi is one of the eleven");
                nonstandard(entry, chi)
            }
        }
        SurfaceDescription::HalfPlane => nonstandard(NonstandardSurface::HalfPlane, 1),
        SurfaceDescription::DoublyInfiniteStrip => {
            nonstandard(NonstandardSurface::DoublyInfiniteStrip, 1)
        }
        SurfaceDescription::InfiniteType { .. } => StandardnessVerdict {
            standard: true,
            reason: StandardReason::InfiniteTypeRule,
            chi: euler_characteristic(d).ok(),
        },
    }
}

/// The thirteen nonstandard surfaces, in catalog order.
pub fn thirteen_list() -> Vec<(NonstandardSurface, SurfaceDescription)> {
    NonstandardSurface::ALL
        .iter()
        .map(|s| (*s, s.description()))
        .collect()
}

/// Equality up to homeomorphism for the modeled descriptions.
pub fn same_surface(x: &SurfaceDescription, y: &SurfaceDescription) -> bool {
    match (x, y) {
        (SurfaceDescription::FiniteType(s), SurfaceDescription::FiniteType(t)) => {
            canonicalize(*s) == canonicalize(*t)
        }
        _ => x == y,
    }
}
