//! The built-in catalog of surface models, one or more per singularity type.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::model::{validate_model, Curve, SurfaceModel};
use super::plane::{build_from_plane_spec, PlaneCurve, PlanePoint, PlaneSpec};
use super::{SingularityType, SurfaceError};

const BUILTIN: &str = include_str!("../../data/catalog.json");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub degree: u32,
    pub singularity: SingularityType,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub notes: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<PlanePoint>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub declared_curves: Vec<PlaneCurve>,
    /// Negative curves given directly; the −1-curves may be left out.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub curves: Vec<Curve>,
}

impl CatalogEntry {
    pub fn plane_spec(&self) -> Option<PlaneSpec> {
        (!self.points.is_empty())
            .then(|| PlaneSpec { points: self.points.clone(), curves: self.declared_curves.clone() })
    }

    /// Builds and validates the model, checking the declared degree and label.
    pub fn build(&self) -> Result<SurfaceModel, SurfaceError> {
        let model = match self.plane_spec() {
            Some(spec) => build_from_plane_spec(&spec)?,
            None => {
                for c in &self.curves {
                    if c.self_int != c.class.square() {
                        return Err(SurfaceError::Inconsistent(format!(
                            "{}: self-intersection {} but class square {}",
                            c.name,
                            c.self_int,
                            c.class.square()
                        )));
                    }
                }
                let model = SurfaceModel::from_roots(self.degree, self.curves.clone(), None)?;
                let report = validate_model(&model);
                if report.incomplete() {
                    return Err(SurfaceError::CatalogIncomplete);
                }
                if !report.is_valid() {
                    let msg = report.issues.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; ");
                    return Err(SurfaceError::Inconsistent(msg));
                }
                model
            }
        };
        if model.degree != self.degree {
            return Err(SurfaceError::LabelMismatch {
                id: self.id.clone(),
                declared: format!("degree {}", self.degree),
                computed: format!("degree {}", model.degree),
            });
        }
        if model.singularity != self.singularity {
            return Err(SurfaceError::LabelMismatch {
                id: self.id.clone(),
                declared: self.singularity.to_string(),
                computed: model.singularity.to_string(),
            });
        }
        Ok(model)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogSummary {
    pub id: String,
    pub degree: u32,
    pub singularity: SingularityType,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn from_json(text: &str) -> Result<Self, SurfaceError> {
        let cat: Catalog = serde_json::from_str(text).map_err(|e| SurfaceError::CatalogParse(e.to_string()))?;
        for (i, e) in cat.entries.iter().enumerate() {
            if cat.entries[..i].iter().any(|f| f.id == e.id) {
                return Err(SurfaceError::CatalogParse(format!("duplicate id {}", e.id)));
            }
        }
        Ok(cat)
    }

    pub fn builtin() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| Catalog::from_json(BUILTIN).expect("built-in catalog parses"))
    }

    pub fn list(&self) -> Vec<CatalogSummary> {
        self.entries
            .iter()
            .map(|e| CatalogSummary { id: e.id.clone(), degree: e.degree, singularity: e.singularity.clone() })
            .collect()
    }

    pub fn entry(&self, id: &str) -> Result<&CatalogEntry, SurfaceError> {
        self.entries.iter().find(|e| e.id == id).ok_or_else(|| SurfaceError::UnknownId(id.to_string()))
    }

    pub fn get(&self, id: &str) -> Result<SurfaceModel, SurfaceError> {
        self.entry(id)?.build()
    }

    pub fn of_degree(&self, degree: u32) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.degree == degree)
    }
}

pub fn catalog_list() -> Vec<CatalogSummary> {
    Catalog::builtin().list()
}

pub fn catalog_get(id: &str) -> Result<SurfaceModel, SurfaceError> {
    Catalog::builtin().get(id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{admissible_types, Mark};

    #[test]
    fn required_ids_present() {
        let list = catalog_list();
        let d7 = list.iter().find(|s| s.id == "d7-A1").unwrap();
        assert_eq!(d7.degree, 7);
        assert_eq!(d7.singularity.to_string(), "A1");
        for id in ["d6-A1A2", "d2-3A1-prime", "d2-3A1-dblprime"] {
            assert!(list.iter().any(|s| s.id == id), "{id}");
        }
    }

    #[test]
    fn a1_a2_is_the_triple_line_chain() {
        let m = catalog_get("d6-A1A2").unwrap();
        assert!(m.provenance.is_some());
        assert_eq!(m.root_classes().len(), 3);
    }

    #[test]
    fn every_entry_builds_and_validates() {
        for e in &Catalog::builtin().entries {
            let m = e.build().unwrap_or_else(|err| panic!("{}: {err}", e.id));
            assert!(validate_model(&m).is_valid(), "{}", e.id);
            assert_eq!(m.n(), 9 - e.degree as usize);
            for c in &m.curves {
                assert_eq!(m.anticanonical().dot(&c.class), c.self_int + 2, "{} {}", e.id, c.name);
            }
        }
    }

    #[test]
    fn admissible_types_covered_in_high_degree() {
        let cat = Catalog::builtin();
        for d in 4..=7 {
            for t in admissible_types(d).unwrap() {
                if t.is_empty() {
                    continue;
                }
                assert!(cat.of_degree(d).any(|e| e.singularity == t), "degree {d} type {t}");
            }
        }
    }

    #[test]
    fn primed_variants_present() {
        let cat = Catalog::builtin();
        let marks: Vec<Option<Mark>> = cat.of_degree(2).map(|e| e.singularity.a1_mark()).collect();
        assert!(marks.contains(&Some(Mark::Prime)));
        assert!(marks.contains(&Some(Mark::DoublePrime)));
    }

    #[test]
    fn cubic_exceptional_classes_decompose_uniquely() {
        for e in Catalog::builtin().of_degree(3) {
            let m = e.build().unwrap();
            for x in crate::piclattice::enumerate_negative_candidates(6).unwrap().minus_one {
                assert_eq!(m.exceptional_decompositions(&x).len(), 1, "{} {x}", e.id);
            }
        }
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(catalog_get("nope"), Err(SurfaceError::UnknownId(_))));
    }

    #[test]
    fn label_mismatch_detected() {
        let mut e = Catalog::builtin().entry("d7-A1").unwrap().clone();
        e.singularity = "A2".parse().unwrap();
        assert!(matches!(e.build(), Err(SurfaceError::LabelMismatch { .. })));
    }
}
