use hypsurf_core::{BoundaryError, GeometryError, GroupError, PantsError, SurfaceError};
use serde_json::json;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Pants(#[from] PantsError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Boundary(#[from] BoundaryError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

fn geometry_kind(e: &GeometryError) -> (&'static str, i32) {
    use GeometryError::*;
    match e {
        OutsideDisk { .. } => ("OutsideDisk", EXIT_INVALID),
        NonFinite => ("NonFinite", EXIT_INVALID),
        NonpositiveLength(_) => ("NonpositiveLength", EXIT_INVALID),
        NotUnimodular { .. } => ("NotUnimodular", EXIT_NUMERIC),
        NumericFailure(_) => ("NumericFailure", EXIT_NUMERIC),
        AmbiguousClass { .. } => ("AmbiguousClass", EXIT_NUMERIC),
        IdentityInput => ("IdentityInput", EXIT_NUMERIC),
        OrientationReversing => ("OrientationReversing", EXIT_NUMERIC),
        NotHyperbolic => ("NotHyperbolic", EXIT_NUMERIC),
        CoincidentPoints => ("CoincidentPoints", EXIT_NUMERIC),
        DegenerateGeodesic => ("DegenerateGeodesic", EXIT_NUMERIC),
        EmptySet => ("EmptySet", EXIT_NUMERIC),
    }
}

fn group_kind(e: &GroupError) -> (&'static str, i32) {
    use GroupError::*;
    match e {
        NoGenerators => ("NoGenerators", EXIT_INVALID),
        TooManyGenerators => ("TooManyGenerators", EXIT_INVALID),
        IndexOutOfRange { .. } => ("IndexOutOfRange", EXIT_INVALID),
        BudgetExceeded { .. } => ("BudgetExceeded", EXIT_INVALID),
        CirclesOverlap => ("CirclesOverlap", EXIT_INVALID),
        BadWord(_) => ("BadWord", EXIT_INVALID),
        RelatorFails { .. } => ("RelatorFails", EXIT_NUMERIC),
        EmptySample => ("EmptySample", EXIT_NUMERIC),
        Geometry(g) => geometry_kind(g),
    }
}

impl CliError {
    /// Innermost error variant name and the process exit code.
    pub fn kind(&self) -> (&'static str, i32) {
        match self {
            CliError::Usage(_) => ("Usage", EXIT_INVALID),
            CliError::Io { .. } => ("Io", EXIT_INVALID),
            CliError::Json(_) => ("Json", EXIT_INVALID),
            CliError::Surface(e) => {
                use SurfaceError::*;
                let name = match e {
                    UnderdeterminedChi => "UnderdeterminedChi",
                    NoBoundary => "NoBoundary",
                    BoundaryUnknown => "BoundaryUnknown",
                    NonorientableDoubleUnsupported { .. } => "NonorientableDoubleUnsupported",
                    EmptyInfiniteType => "EmptyInfiniteType",
                };
                (name, EXIT_INVALID)
            }
            CliError::Pants(e) => {
                use PantsError::*;
                match e {
                    NegativeLength(_) => ("NegativeLength", EXIT_INVALID),
                    NonpositiveBoundaryLength(_) => ("NonpositiveBoundaryLength", EXIT_INVALID),
                    NotHyperbolizable { .. } => ("NotHyperbolizable", EXIT_INVALID),
                    LengthCountMismatch { .. } => ("LengthCountMismatch", EXIT_INVALID),
                    LengthMismatch { .. } => ("LengthMismatch", EXIT_NUMERIC),
                    SlotAccounting(_) => ("SlotAccounting", EXIT_NUMERIC),
                }
            }
            CliError::Group(e) => group_kind(e),
            CliError::Geometry(e) => geometry_kind(e),
            CliError::Boundary(e) => {
                use BoundaryError::*;
                match e {
                    EmptySample => ("EmptySample", EXIT_NUMERIC),
                    OrderViolation(_) => ("OrderViolation", EXIT_NUMERIC),
                    TooFewPoints { .. } => ("TooFewPoints", EXIT_NUMERIC),
                    TooManySkipped { .. } => ("TooManySkipped", EXIT_NUMERIC),
                    RankMismatch { .. } => ("RankMismatch", EXIT_INVALID),
                    GeneratorOutOfRange { .. } => ("GeneratorOutOfRange", EXIT_INVALID),
                    NotAnAutomorphism => ("NotAnAutomorphism", EXIT_INVALID),
                    Group(g) => group_kind(g),
                    Geometry(g) => geometry_kind(g),
                }
            }
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.kind().1
    }

    /// The one-line JSON written to stderr.
    pub fn to_json_line(&self) -> String {
        let mut v = json!({ "error": self.kind().0, "message": self.to_string() });
        if let CliError::Surface(SurfaceError::NonorientableDoubleUnsupported { chi }) = self {
            v["chi"] = json!(chi);
        }
        v.to_string()
    }
}
