//! The first global threshold of a surface.

use super::config::{config_lct, LctReport, Mode};
use super::LctError;
use crate::anticanon::{enumerate_anticanonical, special_configs};
use crate::surface::SurfaceModel;

/// Minimum of the configuration thresholds over every enumerated divisor (default local
/// geometry) and every applicable triple-point divisor.
pub fn surface_lct1(model: &SurfaceModel) -> Result<LctReport, LctError> {
    surface_lct(model, Mode::DefaultSnc)
}

/// As [`surface_lct1`], with the local geometry of enumerated divisors chosen by `mode`.
pub fn surface_lct(model: &SurfaceModel, mode: Mode) -> Result<LctReport, LctError> {
    if model.root_indices().next().is_none() {
        return Err(LctError::Smooth);
    }
    let mut best: Option<LctReport> = None;
    let enumerated = enumerate_anticanonical(model);
    let special = special_configs(model);
    for (label, cfg) in enumerated.iter().map(|c| ("enumerated", c)).chain(special.iter().map(|c| ("triple point", c))) {
        let mut r = config_lct(cfg, mode)?;
        if best.as_ref().is_none_or(|b| r.value < b.value) {
            r.config = Some(format!("{label}: {cfg}"));
            best = Some(r);
        }
    }
    best.ok_or(LctError::NoDivisor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_from_plane_spec, catalog_get, PlanePoint, PlaneSpec};
    use crate::Rational;

    #[test]
    fn degree_seven_a1() {
        let r = surface_lct1(&catalog_get("d7-A1").unwrap()).unwrap();
        assert_eq!(r.value, Rational::new(1, 4));
        assert!(r.config.unwrap().starts_with("enumerated"));
    }

    #[test]
    fn degree_six_a1_a2() {
        assert_eq!(surface_lct1(&catalog_get("d6-A1A2").unwrap()).unwrap().value, Rational::new(1, 6));
    }

    #[test]
    fn pessimistic_not_above_default() {
        let m = catalog_get("d6-A2").unwrap();
        let d = surface_lct1(&m).unwrap().value;
        assert!(surface_lct(&m, Mode::Pessimistic).unwrap().value <= d);
    }

    #[test]
    fn smooth_rejected() {
        let spec = PlaneSpec { points: vec![PlanePoint { id: "a".into(), parent: None }], curves: vec![] };
        let m = build_from_plane_spec(&spec).unwrap();
        assert!(matches!(surface_lct1(&m), Err(LctError::Smooth)));
    }
}
