//! JSON documents and CSV tables for the core types.
//!
//! JSON floats are written by `serde_json` in shortest round-trip form; CSV
//! floats always carry 17 significant digits.

use hypsurf_core::boundary::{CircleMapSample, IdentityReport, OrderVerdict};
use hypsurf_core::pants::{BoundarySlot, CrosscapGluing};
use hypsurf_core::GroupWord;
use hypsurf_core::surface::DoublingReport;
use hypsurf_core::{
    Chi, CuffLengths, CuffSlot, DiskPoint, EndpointSample, Gluing, MetricSummary, MobiusIsometry,
    PantsDecompositionPlan, PantsError, PantsGeometry, Seam, StandardReason, StandardnessVerdict,
    SurfaceDescription, SurfaceError,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DescriptionJson {
    Finite { g: u32, c: u32, b: u32, a: u32 },
    HalfPlane,
    Strip,
    Infinite { inf_boundary: bool, inf_chi: bool },
}

impl From<&SurfaceDescription> for DescriptionJson {
    fn from(d: &SurfaceDescription) -> Self {
        match *d {
            SurfaceDescription::FiniteType(s) => DescriptionJson::Finite {
                g: s.g,
                c: s.c,
                b: s.b,
                a: s.a,
            },
            SurfaceDescription::HalfPlane => DescriptionJson::HalfPlane,
            SurfaceDescription::DoublyInfiniteStrip => DescriptionJson::Strip,
            SurfaceDescription::InfiniteType {
                infinite_boundary,
                infinite_chi,
            } => DescriptionJson::Infinite {
                inf_boundary: infinite_boundary,
                inf_chi: infinite_chi,
            },
        }
    }
}

impl TryFrom<DescriptionJson> for SurfaceDescription {
    type Error = SurfaceError;

    fn try_from(d: DescriptionJson) -> Result<Self, SurfaceError> {
        Ok(match d {
            DescriptionJson::Finite { g, c, b, a } => SurfaceDescription::finite(g, c, b, a),
            DescriptionJson::HalfPlane => SurfaceDescription::HalfPlane,
            DescriptionJson::Strip => SurfaceDescription::DoublyInfiniteStrip,
            DescriptionJson::Infinite {
                inf_boundary,
                inf_chi,
            } => SurfaceDescription::infinite(inf_boundary, inf_chi)?,
        })
    }
}

/// An integer, or the string `"-inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ChiJson {
    Finite(i64),
    Marker(InfMarker),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum InfMarker {
    #[serde(rename = "-inf")]
    NegInf,
}

impl From<Chi> for ChiJson {
    fn from(c: Chi) -> Self {
        match c {
            Chi::Finite(x) => ChiJson::Finite(x),
            Chi::NegInfinity => ChiJson::Marker(InfMarker::NegInf),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub standard: bool,
    pub reason: String,
    pub chi: Option<ChiJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
}

impl From<&StandardnessVerdict> for VerdictJson {
    fn from(v: &StandardnessVerdict) -> Self {
        let reason = match v.reason {
            StandardReason::NegativeChi => "negative_chi",
            StandardReason::InThirteenList(_) => "in_thirteen_list",
            StandardReason::InfiniteTypeRule => "infinite_type_rule",
        };
        Self {
            standard: v.standard,
            reason: reason.to_owned(),
            chi: v.chi.map(ChiJson::from),
            name: v.name().map(str::to_owned),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntryJson {
    pub name: String,
    pub description: DescriptionJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DoublingJson {
    pub double: DescriptionJson,
    pub noncompact_boundary: u32,
    pub chi: ChiJson,
    pub chi_plus_r: ChiJson,
}

impl From<&DoublingReport> for DoublingJson {
    fn from(r: &DoublingReport) -> Self {
        Self {
            double: (&r.double).into(),
            noncompact_boundary: r.noncompact_boundary,
            chi: r.chi_direct.into(),
            chi_plus_r: r.chi_plus_r.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointJson {
    pub re: f64,
    pub im: f64,
}

impl From<DiskPoint> for PointJson {
    fn from(p: DiskPoint) -> Self {
        Self {
            re: p.re(),
            im: p.im(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsometryJson {
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub rev: bool,
}

impl From<&MobiusIsometry> for IsometryJson {
    fn from(m: &MobiusIsometry) -> Self {
        Self {
            a: [m.a().re, m.a().im],
            b: [m.b().re, m.b().im],
            rev: m.reverses_orientation(),
        }
    }
}

/// A seam length, or the string `"inf"` for a seam running out a cusp.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeamJson {
    Finite(f64),
    Infinite(InfSeam),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum InfSeam {
    #[serde(rename = "inf")]
    Inf,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PantsGeometryJson {
    pub cuffs: [f64; 3],
    /// `[d12, d23, d31]`.
    pub seams: [SeamJson; 3],
    pub area: f64,
}

impl From<&PantsGeometry> for PantsGeometryJson {
    fn from(p: &PantsGeometry) -> Self {
        Self {
            cuffs: p.cuffs.as_array(),
            seams: p.seams.map(|s| match s {
                Seam::Finite(x) => SeamJson::Finite(x),
                Seam::Infinite => SeamJson::Infinite(InfSeam::Inf),
            }),
            area: p.area,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SlotJson {
    pub pants: usize,
    pub cuff: usize,
}

impl From<CuffSlot> for SlotJson {
    fn from(s: CuffSlot) -> Self {
        Self {
            pants: s.pants,
            cuff: s.cuff,
        }
    }
}

impl From<SlotJson> for CuffSlot {
    fn from(s: SlotJson) -> Self {
        CuffSlot::new(s.pants, s.cuff)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PantsNodeJson {
    pub id: usize,
    pub cuffs: [f64; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluingJson {
    pub from: SlotJson,
    pub to: SlotJson,
    pub length: f64,
    pub twist: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrosscapJson {
    pub slot: SlotJson,
    pub length: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryJson {
    pub slot: SlotJson,
    pub index: usize,
    pub length: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanJson {
    pub pants: Vec<PantsNodeJson>,
    pub gluings: Vec<GluingJson>,
    pub crosscaps: Vec<CrosscapJson>,
    pub boundary: Vec<BoundaryJson>,
    pub cusps: Vec<SlotJson>,
}

impl From<&PantsDecompositionPlan> for PlanJson {
    fn from(p: &PantsDecompositionPlan) -> Self {
        Self {
            pants: p
                .pants
                .iter()
                .enumerate()
                .map(|(id, c)| PantsNodeJson {
                    id,
                    cuffs: c.as_array(),
                })
                .collect(),
            gluings: p
                .gluings
                .iter()
                .map(|g| GluingJson {
                    from: g.from.into(),
                    to: g.to.into(),
                    length: g.length,
                    twist: g.twist,
                })
                .collect(),
            crosscaps: p
                .crosscaps
                .iter()
                .map(|c| CrosscapJson {
                    slot: c.slot.into(),
                    length: c.length,
                })
                .collect(),
            boundary: p
                .boundary
                .iter()
                .map(|b| BoundaryJson {
                    slot: b.slot.into(),
                    index: b.index,
                    length: b.length,
                })
                .collect(),
            cusps: p.cusps.iter().map(|s| (*s).into()).collect(),
        }
    }
}

impl TryFrom<PlanJson> for PantsDecompositionPlan {
    type Error = PantsError;

    fn try_from(p: PlanJson) -> Result<Self, PantsError> {
        let mut pants = Vec::with_capacity(p.pants.len());
        for (i, node) in p.pants.iter().enumerate() {
            if node.id != i {
                return Err(PantsError::SlotAccounting(format!(
                    "pants ids must be 0, 1, 2, ... (found {} at position {i})",
                    node.id
                )));
            }
            let [x1, x2, x3] = node.cuffs;
            pants.push(CuffLengths::new(x1, x2, x3)?);
        }
        Ok(PantsDecompositionPlan {
            pants,
            gluings: p
                .gluings
                .iter()
                .map(|g| Gluing {
                    from: g.from.into(),
                    to: g.to.into(),
                    length: g.length,
                    twist: g.twist,
                })
                .collect(),
            crosscaps: p
                .crosscaps
                .iter()
                .map(|c| CrosscapGluing {
                    slot: c.slot.into(),
                    length: c.length,
                })
                .collect(),
            boundary: p
                .boundary
                .iter()
                .map(|b| BoundarySlot {
                    slot: b.slot.into(),
                    index: b.index,
                    length: b.length,
                })
                .collect(),
            cusps: p.cusps.iter().map(|s| (*s).into()).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricJson {
    pub total_area: f64,
    pub pants: Vec<PantsGeometryJson>,
    pub valid: bool,
}

impl From<&MetricSummary> for MetricJson {
    fn from(m: &MetricSummary) -> Self {
        Self {
            total_area: m.total_area,
            pants: m.pants.iter().map(PantsGeometryJson::from).collect(),
            valid: m.valid,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngleJson {
    pub theta: f64,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EndpointSampleJson {
    pub group: String,
    pub mode: String,
    pub n: usize,
    pub size: usize,
    pub max_gap: f64,
    pub angles: Vec<AngleJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairJson {
    pub theta_in: f64,
    pub theta_out: f64,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityJson {
    pub identity: bool,
    pub best_inner: String,
    pub residual: f64,
    pub near_minimizers: Vec<String>,
    pub m: usize,
    pub tol: f64,
}

impl IdentityJson {
    pub fn new(r: &IdentityReport, m: usize, tol: f64) -> Self {
        Self {
            identity: r.identity,
            best_inner: r.best_inner.to_string(),
            residual: r.residual,
            near_minimizers: r.near_minimizers.iter().map(|w| w.to_string()).collect(),
            m,
            tol,
        }
    }
}

/// Verdicts and counts of a boundary-map run; `pairs` is omitted when the
/// pairs go to a CSV table instead.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryReportJson {
    pub group: String,
    pub images: Vec<String>,
    pub n: usize,
    pub size: usize,
    pub considered: usize,
    pub skipped: usize,
    pub merged: usize,
    pub orientation: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub identity: Option<IdentityJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pairs: Option<Vec<PairJson>>,
}

pub fn orientation_name(v: &OrderVerdict) -> &'static str {
    match v {
        OrderVerdict::Preserving => "preserving",
        OrderVerdict::Reversing => "reversing",
        OrderVerdict::Violation(_) => "violation",
    }
}

pub fn pairs_json(s: &CircleMapSample) -> Vec<PairJson> {
    s.pairs()
        .iter()
        .map(|p| PairJson {
            theta_in: p.theta_in.theta(),
            theta_out: p.theta_out.theta(),
            word: p.word.to_string(),
        })
        .collect()
}

/// 17 significant digits.
pub fn float17(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_table(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    // writing to a Vec cannot fail
    w.write_record(header).expect("in-memory CSV");
    for row in rows {
        w.write_record(&row).expect("in-memory CSV");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV")).expect("CSV is UTF-8")
}

/// `angle,word`
pub fn endpoint_csv(s: &EndpointSample) -> String {
    csv_table(
        &["angle", "word"],
        s.iter().map(|(a, w)| vec![float17(a.theta()), w.to_string()]),
    )
}

/// `theta_in,theta_out,word`
pub fn circle_map_csv(s: &CircleMapSample) -> String {
    csv_table(
        &["theta_in", "theta_out", "word"],
        s.pairs().iter().map(|p| {
            vec![
                float17(p.theta_in.theta()),
                float17(p.theta_out.theta()),
                p.word.to_string(),
            ]
        }),
    )
}

/// `re,im,word`
pub fn orbit_csv(points: &[(GroupWord, DiskPoint)]) -> String {
    csv_table(
        &["re", "im", "word"],
        points
            .iter()
            .map(|(w, p)| vec![float17(p.re()), float17(p.im()), w.to_string()]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypsurf_core::{build_pants, is_standard, plan_decomposition, Signature};

    #[test]
    fn description_round_trip() {
        for text in [
            r#"{"kind":"finite","g":1,"c":0,"b":2,"a":3}"#,
            r#"{"kind":"half_plane"}"#,
            r#"{"kind":"strip"}"#,
            r#"{"kind":"infinite","inf_boundary":true,"inf_chi":false}"#,
        ] {
            let j: DescriptionJson = serde_json::from_str(text).unwrap();
            let d = SurfaceDescription::try_from(j).unwrap();
            assert_eq!(serde_json::to_string(&DescriptionJson::from(&d)).unwrap(), text);
        }
        let bad: DescriptionJson =
            serde_json::from_str(r#"{"kind":"infinite","inf_boundary":false,"inf_chi":false}"#).unwrap();
        assert_eq!(SurfaceDescription::try_from(bad), Err(SurfaceError::EmptyInfiniteType));
        assert!(serde_json::from_str::<DescriptionJson>(r#"{"kind":"finite","g":1}"#).is_err());
    }

    #[test]
    fn verdict_encoding() {
        let torus = is_standard(&SurfaceDescription::finite(1, 0, 0, 0));
        assert_eq!(
            serde_json::to_string(&VerdictJson::from(&torus)).unwrap(),
            r#"{"standard":false,"reason":"in_thirteen_list","chi":0,"name":"torus"}"#
        );
        let inf = is_standard(&SurfaceDescription::infinite(false, true).unwrap());
        assert_eq!(
            serde_json::to_string(&VerdictJson::from(&inf)).unwrap(),
            r#"{"standard":true,"reason":"infinite_type_rule","chi":"-inf"}"#
        );
        let under = is_standard(&SurfaceDescription::infinite(true, false).unwrap());
        assert_eq!(
            serde_json::to_string(&VerdictJson::from(&under)).unwrap(),
            r#"{"standard":true,"reason":"infinite_type_rule","chi":null}"#
        );
    }

    #[test]
    fn pants_and_plan_encoding() {
        let p = build_pants(CuffLengths::new(0.0, 1.0, 2.0).unwrap());
        let text = serde_json::to_string(&PantsGeometryJson::from(&p)).unwrap();
        assert!(text.contains(r#""seams":["inf","#));
        let plan = plan_decomposition(Signature::new(1, 1, 1, 1), &[2.0]).unwrap();
        let json = PlanJson::from(&plan);
        let text = serde_json::to_string(&json).unwrap();
        let back: PlanJson = serde_json::from_str(&text).unwrap();
        assert_eq!(PantsDecompositionPlan::try_from(back).unwrap(), plan);
    }

    #[test]
    fn csv_has_17_digits() {
        assert_eq!(float17(0.1), "1.0000000000000001e-1");
        assert_eq!(float17(std::f64::consts::PI).parse::<f64>().unwrap(), std::f64::consts::PI);
    }
}
