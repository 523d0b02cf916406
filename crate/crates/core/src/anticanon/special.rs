//! Reduced anticanonical divisors with three components through one point. Lattice data
//! cannot see such concurrency, so these are listed by shape.

use super::config::{DivisorConfig, Extra};
use crate::lct::{Cluster, ClusterItem};
use crate::piclattice::DivisorClass;
use crate::surface::{Family, SurfaceModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialShape {
    /// A −2-curve and a −1-curve meeting it, plus the residual curve.
    RootAndLine,
    /// Two adjacent −2-curves and the residual curve.
    AdjacentRoots,
}

fn applicable(model: &SurfaceModel) -> Vec<SpecialShape> {
    let sigma = &model.singularity;
    let comps = sigma.components();
    let only = |f: Family, r: u32| comps.len() == 1 && comps[0].family == f && comps[0].rank == r;
    if only(Family::A, 1) {
        return vec![SpecialShape::RootAndLine];
    }
    if only(Family::A, 2) {
        return vec![SpecialShape::AdjacentRoots];
    }
    let small = comps.iter().all(|c| c.family == Family::A && c.rank <= 2);
    if model.degree == 2 && comps.len() >= 2 && small {
        return vec![SpecialShape::RootAndLine, SpecialShape::AdjacentRoots];
    }
    Vec::new()
}

fn triple_point<'a>(model: &'a SurfaceModel, fixed: [usize; 2], residual: DivisorClass) -> Option<DivisorConfig<'a>> {
    let mut mult = vec![0u32; model.curves.len()];
    for &i in &fixed {
        mult[i] = 1;
    }
    let mut extras = Vec::new();
    let third = match model.curve_index(&residual) {
        Some(i) if !fixed.contains(&i) => {
            mult[i] = 1;
            i
        }
        Some(_) => return None,
        None if residual.square() >= 0 => {
            extras.push(Extra { name: format!("R[{residual}]"), class: residual, coefficient: 1 });
            model.curves.len()
        }
        None => return None,
    };
    let items = [fixed[0], fixed[1], third].map(|component| ClusterItem::Branch { component, coefficient: 1 });
    DivisorConfig::new(model, mult, extras, vec![Cluster::transverse(items.to_vec())]).ok()
}

/// The triple-point configurations that exist on this surface by its singularity type.
pub fn special_configs(model: &SurfaceModel) -> Vec<DivisorConfig<'_>> {
    let mk = model.anticanonical();
    let roots: Vec<usize> = model.root_indices().collect();
    let mut out = Vec::new();
    for shape in applicable(model) {
        match shape {
            SpecialShape::RootAndLine => {
                for &c in &roots {
                    for e in model.minus_one_indices() {
                        if model.gram[c][e] != 1 {
                            continue;
                        }
                        let r = &(&mk - &model.curves[c].class) - &model.curves[e].class;
                        if model.degree == 2 && model.curve_index(&r).is_none() {
                            continue;
                        }
                        out.extend(triple_point(model, [c, e], r));
                    }
                }
            }
            SpecialShape::AdjacentRoots => {
                for (a, &c1) in roots.iter().enumerate() {
                    for &c2 in &roots[a + 1..] {
                        if model.gram[c1][c2] != 1 {
                            continue;
                        }
                        let r = &(&mk - &model.curves[c1].class) - &model.curves[c2].class;
                        out.extend(triple_point(model, [c1, c2], r));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::Catalog;

    #[test]
    fn single_a1_cubic_has_a_triple_point() {
        let cat = Catalog::builtin();
        let e = cat.of_degree(3).find(|e| e.singularity.to_string() == "A1").unwrap();
        let m = e.build().unwrap();
        let cfgs = special_configs(&m);
        assert!(!cfgs.is_empty());
        for c in &cfgs {
            assert_eq!(c.class_sum(), m.anticanonical());
            assert_eq!(c.points().len(), 1);
            assert_eq!(c.extras()[0].self_int(), 0);
        }
    }

    #[test]
    fn not_applicable_to_two_a1_in_degree_four() {
        let e = Catalog::builtin().of_degree(4).find(|e| e.singularity.to_string() == "2A1").unwrap();
        assert!(special_configs(&e.build().unwrap()).is_empty());
    }
}
