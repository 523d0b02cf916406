//! Anticanonical divisors obtained by pulling back a plane cubic through the blown-up points.

use thiserror::Error;

use super::config::{ConfigError, DivisorConfig, Extra};
use crate::piclattice::DivisorClass;
use crate::surface::SurfaceModel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjunctionError {
    #[error("the model was not built from a plane spec")]
    NoPlaneSpec,
    #[error("unknown declared curve {0}")]
    UnknownCurve(String),
    #[error("the parts have total degree {0}, not 3")]
    CubicDegree(i64),
    #[error("exceptional curve over {0} would get a negative coefficient")]
    NegativeCoefficient(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// Pulls back `sum a_h C_h` (a cubic made of declared curves) and subtracts the
/// discrepancies: the exceptional curve over the j-th point of a chain gets
/// `sum_{k<=j} (mult_k - 1)`, each declared curve keeps its coefficient.
pub fn adjunction_config<'a>(model: &'a SurfaceModel, parts: &[(&str, u32)]) -> Result<DivisorConfig<'a>, AdjunctionError> {
    let spec = model.provenance.as_ref().ok_or(AdjunctionError::NoPlaneSpec)?;
    let n = spec.points.len();
    let mut total_degree = 0i64;
    let mut mult_at = vec![0i64; n];
    let mut strict: Vec<(String, DivisorClass, u32)> = Vec::new();
    for &(id, a) in parts {
        let curve = spec.curve(id).ok_or_else(|| AdjunctionError::UnknownCurve(id.to_string()))?;
        total_degree += a as i64 * curve.kind.degree();
        for (k, m) in spec.curve_multiplicities(curve).into_iter().enumerate() {
            mult_at[k] += a as i64 * m;
        }
        strict.push((id.to_string(), spec.strict_transform(curve), a));
    }
    if total_degree != 3 {
        return Err(AdjunctionError::CubicDegree(total_degree));
    }
    let parents = spec.parent_indices();
    let mut mult = vec![0u32; model.curves.len()];
    let mut extras: Vec<Extra> = Vec::new();
    let mut place = |name: String, class: DivisorClass, a: u32| {
        if a == 0 {
            return;
        }
        match model.curve_index(&class) {
            Some(i) => mult[i] += a,
            None => match extras.iter_mut().find(|e| e.class == class) {
                Some(e) => e.coefficient += a,
                None => extras.push(Extra { name, class, coefficient: a }),
            },
        }
    };
    for i in 0..n {
        let mut coef = 0i64;
        let mut k = Some(i);
        while let Some(p) = k {
            coef += mult_at[p] - 1;
            k = parents[p];
        }
        if coef < 0 {
            return Err(AdjunctionError::NegativeCoefficient(spec.points[i].id.clone()));
        }
        let mut class = DivisorClass::exceptional(n, i);
        if let Some(c) = parents.iter().position(|&p| p == Some(i)) {
            class = &class - &DivisorClass::exceptional(n, c);
        }
        place(format!("E_{}", spec.points[i].id), class, coef as u32);
    }
    for (name, class, a) in strict {
        place(name, class, a);
    }
    Ok(DivisorConfig::new(model, mult, extras, Vec::new())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anticanon::graph::dual_graph;
    use crate::surface::{build_from_plane_spec, PlaneCurve, PlanePoint, PlaneSpec};

    fn pt(id: &str, parent: Option<&str>) -> PlanePoint {
        PlanePoint { id: id.into(), parent: parent.map(Into::into) }
    }

    fn chain_spec(extra: Vec<PlaneCurve>) -> PlaneSpec {
        let mut curves = vec![PlaneCurve::line("l", &["p1", "p2", "p3"])];
        curves.extend(extra);
        PlaneSpec { points: vec![pt("p1", None), pt("p2", Some("p1")), pt("p3", Some("p2"))], curves }
    }

    #[test]
    fn triple_line_over_chain() {
        let m = build_from_plane_spec(&chain_spec(vec![])).unwrap();
        let c = adjunction_config(&m, &[("l", 3)]).unwrap();
        let coef = |name: &str| c.components().into_iter().find(|x| x.name == name).map(|x| x.coefficient);
        assert_eq!(coef("E_p1"), Some(2));
        assert_eq!(coef("E_p2"), Some(4));
        assert_eq!(coef("E_p3"), Some(6));
        assert_eq!(coef("l"), Some(3));
    }

    #[test]
    fn smooth_cubic_alone() {
        let spec = PlaneSpec { points: vec![], curves: vec![PlaneCurve::cubic("c", &[])] };
        let m = build_from_plane_spec(&spec).unwrap();
        let c = adjunction_config(&m, &[("c", 1)]).unwrap();
        let comps = c.components();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].coefficient, 1);
    }

    #[test]
    fn double_line_plus_line() {
        // multiplicities 3, 2, 2 along the chain
        let m = build_from_plane_spec(&chain_spec(vec![PlaneCurve::line("m", &["p1"])])).unwrap();
        let c = adjunction_config(&m, &[("l", 2), ("m", 1)]).unwrap();
        let g = dual_graph(&c);
        assert_eq!(g.max_weight(), 4);
        assert_eq!(g.vertices.iter().filter(|v| v.self_int == 0).count(), 1);
    }

    #[test]
    fn wrong_degree() {
        let m = build_from_plane_spec(&chain_spec(vec![])).unwrap();
        assert_eq!(adjunction_config(&m, &[("l", 2)]).unwrap_err(), AdjunctionError::CubicDegree(2));
    }

    #[test]
    fn point_off_the_cubic() {
        let spec = PlaneSpec { points: vec![pt("a", None)], curves: vec![PlaneCurve::cubic("c", &[])] };
        let m = build_from_plane_spec(&spec).unwrap();
        assert!(matches!(adjunction_config(&m, &[("c", 1)]), Err(AdjunctionError::NegativeCoefficient(_))));
    }
}
