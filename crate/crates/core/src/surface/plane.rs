//! Declarative point configurations in the plane and the surfaces they blow up to.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::model::{Curve, SurfaceModel};
use super::SurfaceError;
use crate::piclattice::{DivisorClass, MAX_POINTS};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanePoint {
    pub id: String,
    /// The point this one is infinitely near to; absent for a point of the plane.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    Line,
    Conic,
    Cubic,
}

impl CurveKind {
    pub fn degree(self) -> i64 {
        match self {
            CurveKind::Line => 1,
            CurveKind::Conic => 2,
            CurveKind::Cubic => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CubicSingularity {
    Nodal,
    Cuspidal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneCurve {
    pub id: String,
    pub kind: CurveKind,
    /// Points the curve passes through (an infinitely near point fixes a tangent direction).
    #[serde(default)]
    pub through: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singular: Option<CubicSingularity>,
    /// Double point of a singular cubic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singular_at: Option<String>,
}

impl PlaneCurve {
    pub fn line(id: &str, through: &[&str]) -> Self {
        Self {
            id: id.into(),
            kind: CurveKind::Line,
            through: through.iter().map(|s| s.to_string()).collect(),
            singular: None,
            singular_at: None,
        }
    }

    pub fn conic(id: &str, through: &[&str]) -> Self {
        Self { kind: CurveKind::Conic, ..Self::line(id, through) }
    }

    pub fn cubic(id: &str, through: &[&str]) -> Self {
        Self { kind: CurveKind::Cubic, ..Self::line(id, through) }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneSpec {
    #[serde(default)]
    pub points: Vec<PlanePoint>,
    #[serde(default)]
    pub curves: Vec<PlaneCurve>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlaneViolation {
    TooManyPoints(usize),
    DuplicateId(String),
    UnknownPoint { curve: String, point: String },
    UnknownParent { point: String, parent: String },
    ParentAfterChild { point: String },
    MissingParent { curve: String, point: String },
    BadSingularMarker { curve: String },
    FourOnALine { curve: String },
    SevenOnAConic { curve: String },
    OnMinusTwoCurve { point: String, curve: String },
    SharedTooMuch { a: String, b: String },
}

impl fmt::Display for PlaneViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use PlaneViolation::*;
        match self {
            TooManyPoints(n) => write!(f, "{n} points (at most {MAX_POINTS})"),
            DuplicateId(id) => write!(f, "duplicate id {id}"),
            UnknownPoint { curve, point } => write!(f, "{curve} passes through unknown point {point}"),
            UnknownParent { point, parent } => write!(f, "{point} has unknown parent {parent}"),
            ParentAfterChild { point } => write!(f, "{point} is listed before its parent"),
            MissingParent { curve, point } => {
                write!(f, "{curve} passes through {point} but not through the point it is infinitely near to")
            }
            BadSingularMarker { curve } => write!(f, "{curve}: singular marker needs a cubic and a double point"),
            FourOnALine { curve } => write!(f, "four on a line: {curve}"),
            SevenOnAConic { curve } => write!(f, "seven on a conic: {curve}"),
            OnMinusTwoCurve { point, curve } => {
                write!(f, "point {point} lies on a -2 strict transform ({curve})")
            }
            SharedTooMuch { a, b } => write!(f, "{a} and {b} meet negatively after blowing up"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PlaneReport {
    pub violations: Vec<PlaneViolation>,
}

impl PlaneReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl PlaneSpec {
    fn point_index(&self) -> HashMap<&str, usize> {
        self.points.iter().enumerate().map(|(i, p)| (p.id.as_str(), i)).collect()
    }

    fn child_of(&self, idx: &HashMap<&str, usize>) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.points.len()];
        for (i, p) in self.points.iter().enumerate() {
            if let Some(&j) = p.parent.as_deref().and_then(|q| idx.get(q)) {
                children[j].push(i);
            }
        }
        children
    }

    /// Multiplicity of a declared curve at each point.
    fn multiplicities(&self, curve: &PlaneCurve, idx: &HashMap<&str, usize>) -> Vec<i64> {
        let mut m = vec![0; self.points.len()];
        for p in &curve.through {
            if let Some(&i) = idx.get(p.as_str()) {
                m[i] = m[i].max(1);
            }
        }
        if let (Some(_), Some(p)) = (curve.singular, &curve.singular_at) {
            if let Some(&i) = idx.get(p.as_str()) {
                m[i] = 2;
            }
        }
        m
    }

    /// Index of the point each point is infinitely near to.
    pub(crate) fn parent_indices(&self) -> Vec<Option<usize>> {
        let idx = self.point_index();
        self.points.iter().map(|p| p.parent.as_deref().and_then(|q| idx.get(q).copied())).collect()
    }

    pub(crate) fn curve_multiplicities(&self, curve: &PlaneCurve) -> Vec<i64> {
        self.multiplicities(curve, &self.point_index())
    }

    /// Class of the strict transform of a declared curve.
    pub fn strict_transform(&self, curve: &PlaneCurve) -> DivisorClass {
        let idx = self.point_index();
        DivisorClass::new(curve.kind.degree(), self.multiplicities(curve, &idx)).expect("point count checked")
    }

    pub fn curve(&self, id: &str) -> Option<&PlaneCurve> {
        self.curves.iter().find(|c| c.id == id)
    }
}

/// Checks the almost-general-position rules and the structural consistency of a spec.
pub fn validate_plane_spec(spec: &PlaneSpec) -> PlaneReport {
    use PlaneViolation::*;
    let mut v = Vec::new();
    let n = spec.points.len();
    if n > MAX_POINTS {
        v.push(TooManyPoints(n));
        return PlaneReport { violations: v };
    }
    let idx = spec.point_index();
    let mut seen = std::collections::HashSet::new();
    for id in spec.points.iter().map(|p| &p.id).chain(spec.curves.iter().map(|c| &c.id)) {
        if !seen.insert(id.as_str()) {
            v.push(DuplicateId(id.clone()));
        }
    }
    for (i, p) in spec.points.iter().enumerate() {
        if let Some(q) = &p.parent {
            match idx.get(q.as_str()) {
                None => v.push(UnknownParent { point: p.id.clone(), parent: q.clone() }),
                Some(&j) if j >= i => v.push(ParentAfterChild { point: p.id.clone() }),
                _ => {}
            }
        }
    }
    if !v.is_empty() {
        return PlaneReport { violations: v };
    }
    // a second point on an exceptional curve lies on its strict transform, already a −2-curve
    for (j, kids) in spec.child_of(&idx).iter().enumerate() {
        for &k in kids.iter().skip(1) {
            v.push(OnMinusTwoCurve { point: spec.points[k].id.clone(), curve: format!("E_{}", spec.points[j].id) });
        }
    }
    let mut known = true;
    for c in &spec.curves {
        for p in c.through.iter().chain(c.singular_at.iter()) {
            if !idx.contains_key(p.as_str()) {
                v.push(UnknownPoint { curve: c.id.clone(), point: p.clone() });
                known = false;
            }
        }
        let marker_ok = match (c.kind, c.singular, &c.singular_at) {
            (_, None, None) => true,
            (CurveKind::Cubic, Some(_), Some(_)) => true,
            _ => false,
        };
        if !marker_ok {
            v.push(BadSingularMarker { curve: c.id.clone() });
        }
    }
    if !known {
        return PlaneReport { violations: v };
    }
    let mults: Vec<Vec<i64>> = spec.curves.iter().map(|c| spec.multiplicities(c, &idx)).collect();
    for (c, m) in spec.curves.iter().zip(&mults) {
        for (i, p) in spec.points.iter().enumerate() {
            if let Some(&j) = p.parent.as_deref().and_then(|q| idx.get(q)) {
                if m[i] > m[j] {
                    v.push(MissingParent { curve: c.id.clone(), point: p.id.clone() });
                }
            }
        }
        let count = m.iter().filter(|&&x| x > 0).count();
        match c.kind {
            CurveKind::Line if count >= 4 => v.push(FourOnALine { curve: c.id.clone() }),
            CurveKind::Conic if count >= 7 => v.push(SevenOnAConic { curve: c.id.clone() }),
            _ => {}
        }
        // blow up in order; a point on the strict transform once it has reached −2 is forbidden
        let mut self_int = c.kind.degree().pow(2);
        for (i, &mi) in m.iter().enumerate() {
            if mi == 0 {
                continue;
            }
            if self_int <= -2 {
                v.push(OnMinusTwoCurve { point: spec.points[i].id.clone(), curve: c.id.clone() });
                break;
            }
            self_int -= mi * mi;
        }
    }
    for a in 0..spec.curves.len() {
        for b in a + 1..spec.curves.len() {
            let da = spec.curves[a].kind.degree();
            let db = spec.curves[b].kind.degree();
            let meet = da * db - mults[a].iter().zip(&mults[b]).map(|(x, y)| x * y).sum::<i64>();
            if meet < 0 {
                v.push(SharedTooMuch { a: spec.curves[a].id.clone(), b: spec.curves[b].id.clone() });
            }
        }
    }
    PlaneReport { violations: v }
}

/// Blows up the declared points and returns the resulting model. The −2-curves are the
/// exceptional curves with a point blown up on them and the declared curves of
/// self-intersection −2; the −1-curves are then forced by the lattice.
pub fn build_from_plane_spec(spec: &PlaneSpec) -> Result<SurfaceModel, SurfaceError> {
    let report = validate_plane_spec(spec);
    if !report.is_valid() {
        let forced = report.violations.iter().find_map(|v| match v {
            PlaneViolation::FourOnALine { curve }
            | PlaneViolation::SevenOnAConic { curve }
            | PlaneViolation::OnMinusTwoCurve { curve, .. }
                if spec.curve(curve).is_some() =>
            {
                Some(curve.clone())
            }
            _ => None,
        });
        return Err(match forced {
            Some(c) => SurfaceError::NonCanonical(c),
            None => SurfaceError::InvalidSpec(report.violations.iter().map(|v| v.to_string()).collect()),
        });
    }
    let n = spec.points.len();
    let degree = 9 - n as u32;
    let idx = spec.point_index();
    let children = spec.child_of(&idx);
    let mut curves = Vec::new();
    let mut declared_minus = Vec::new();
    for (i, p) in spec.points.iter().enumerate() {
        let mut class = DivisorClass::exceptional(n, i);
        if let Some(&c) = children[i].first() {
            class = &class - &DivisorClass::exceptional(n, c);
            curves.push(Curve::new(format!("E_{}", p.id), class));
        } else {
            declared_minus.push(Curve::new(format!("E_{}", p.id), class));
        }
    }
    for c in &spec.curves {
        let class = spec.strict_transform(c);
        match class.square() {
            s if s <= -3 => return Err(SurfaceError::NonCanonical(c.id.clone())),
            -2 => curves.push(Curve::new(c.id.clone(), class)),
            -1 => declared_minus.push(Curve::new(c.id.clone(), class)),
            _ => {}
        }
    }
    curves.extend(declared_minus);
    let model = SurfaceModel::from_roots(degree, curves, Some(spec.clone()))?;
    let report = super::model::validate_model(&model);
    if report.incomplete() {
        return Err(SurfaceError::CatalogIncomplete);
    }
    if !report.is_valid() {
        return Err(SurfaceError::Inconsistent(report.issues.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; ")));
    }
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(id: &str, parent: Option<&str>) -> PlanePoint {
        PlanePoint { id: id.into(), parent: parent.map(Into::into) }
    }

    fn cls(v: &[i64]) -> DivisorClass {
        DivisorClass::try_from(v.to_vec()).unwrap()
    }

    fn triple_line_chain() -> PlaneSpec {
        PlaneSpec {
            points: vec![pt("p1", None), pt("p2", Some("p1")), pt("p3", Some("p2"))],
            curves: vec![PlaneCurve::line("l", &["p1", "p2", "p3"])],
        }
    }

    #[test]
    fn chain_on_a_line_gives_a1_a2() {
        let m = build_from_plane_spec(&triple_line_chain()).unwrap();
        assert_eq!(m.degree, 6);
        let roots = m.root_classes();
        for want in [cls(&[0, -1, 1, 0]), cls(&[0, 0, -1, 1]), cls(&[1, 1, 1, 1])] {
            assert!(roots.contains(&want), "{want}");
        }
        assert_eq!(roots.len(), 3);
        assert!(m.curve_index(&DivisorClass::exceptional(3, 2)).is_some());
        assert_eq!(m.singularity.to_string(), "A1+A2");
    }

    #[test]
    fn tangent_line_gives_degree_seven_a1() {
        let spec = PlaneSpec {
            points: vec![pt("p1", None), pt("p2", Some("p1"))],
            curves: vec![PlaneCurve::line("l", &["p1", "p2"])],
        };
        let m = build_from_plane_spec(&spec).unwrap();
        assert_eq!(m.root_classes(), vec![cls(&[0, -1, 1])]);
        let mut minus = m.minus_one_classes();
        minus.sort();
        let mut want = vec![cls(&[0, 0, -1]), cls(&[1, 1, 1])];
        want.sort();
        assert_eq!(minus, want);
        assert_eq!(m.singularity.to_string(), "A1");
    }

    #[test]
    fn general_points_are_smooth() {
        let spec = PlaneSpec { points: vec![pt("a", None), pt("b", None), pt("c", None)], curves: vec![] };
        let m = build_from_plane_spec(&spec).unwrap();
        assert!(m.singularity.is_empty());
        assert_eq!(m.minus_one_classes().len(), 6);
    }

    #[test]
    fn four_on_a_line() {
        let spec = PlaneSpec {
            points: (1..=4).map(|i| pt(&format!("p{i}"), None)).collect(),
            curves: vec![PlaneCurve::line("l", &["p1", "p2", "p3", "p4"])],
        };
        let r = validate_plane_spec(&spec);
        assert!(r.violations.contains(&PlaneViolation::FourOnALine { curve: "l".into() }));
        assert!(matches!(build_from_plane_spec(&spec), Err(SurfaceError::NonCanonical(c)) if c == "l"));
    }

    #[test]
    fn empty_spec_is_valid() {
        assert!(validate_plane_spec(&PlaneSpec::default()).is_valid());
    }

    #[test]
    fn chain_of_four_on_one_line() {
        let spec = PlaneSpec {
            points: vec![pt("p1", None), pt("p2", Some("p1")), pt("p3", Some("p2")), pt("p4", Some("p3"))],
            curves: vec![PlaneCurve::line("l", &["p1", "p2", "p3", "p4"])],
        };
        let r = validate_plane_spec(&spec);
        assert!(r
            .violations
            .contains(&PlaneViolation::OnMinusTwoCurve { point: "p4".into(), curve: "l".into() }));
    }

    #[test]
    fn two_points_on_one_exceptional_curve() {
        let spec = PlaneSpec { points: vec![pt("p1", None), pt("p2", Some("p1")), pt("p3", Some("p1"))], curves: vec![] };
        let r = validate_plane_spec(&spec);
        assert_eq!(r.violations, vec![PlaneViolation::OnMinusTwoCurve { point: "p3".into(), curve: "E_p1".into() }]);
    }

    #[test]
    fn tangent_direction_needs_its_base_point() {
        let spec = PlaneSpec {
            points: vec![pt("p1", None), pt("p2", Some("p1"))],
            curves: vec![PlaneCurve::line("l", &["p2"])],
        };
        assert!(matches!(validate_plane_spec(&spec).violations[0], PlaneViolation::MissingParent { .. }));
    }

    #[test]
    fn lines_sharing_two_points() {
        let spec = PlaneSpec {
            points: vec![pt("a", None), pt("b", None)],
            curves: vec![PlaneCurve::line("l", &["a", "b"]), PlaneCurve::line("m", &["a", "b"])],
        };
        assert!(matches!(validate_plane_spec(&spec).violations[0], PlaneViolation::SharedTooMuch { .. }));
    }

    #[test]
    fn serde_shape() {
        let json = r#"{"points":[{"id":"p1"},{"id":"p2","parent":"p1"}],
                       "curves":[{"id":"l","kind":"line","through":["p1","p2"]}]}"#;
        let spec: PlaneSpec = serde_json::from_str(json).unwrap();
        assert_eq!(spec.points[1].parent.as_deref(), Some("p1"));
        assert_eq!(spec.curves[0].kind, CurveKind::Line);
    }
}
