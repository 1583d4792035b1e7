//! Numerical tolerances shared across modules.

/// Allowed drift of `|a|² − |b|²` from 1, and the identity test radius.
pub const TOL_MATRIX: f64 = 1e-12;

/// Width of the band around `|Re a| = 1` treated as parabolic.
pub const TOL_CLASS: f64 = 1e-9;

/// Two ideal points closer than this (in radians) are the same point.
pub const TOL_ANGLE: f64 = 1e-9;

/// Relator residual accepted when a group representation is built.
pub const TOL_RELATOR: f64 = 1e-6;
