//! Effective anticanonical divisors supported on negative curves.

use super::config::{DivisorConfig, MAX_COEFFICIENT};
use crate::piclattice::DivisorClass;
use crate::surface::SurfaceModel;

/// All nonnegative combinations of `classes` with coefficients at most `cap` summing to
/// `target`, in depth-first order. Branches whose residual pairs negatively with `L` or
/// `-K` are cut. Stops after `limit` solutions if given.
pub(crate) fn nonnegative_solutions(
    classes: &[&DivisorClass],
    target: &DivisorClass,
    cap: u32,
    limit: Option<usize>,
) -> Vec<Vec<u32>> {
    let n = target.n();
    let line = DivisorClass::line(n);
    let mk = DivisorClass::anticanonical(n);
    let mut out = Vec::new();
    let mut cur = vec![0u32; classes.len()];
    fn rec(
        i: usize,
        resid: &DivisorClass,
        classes: &[&DivisorClass],
        cap: u32,
        limit: Option<usize>,
        line: &DivisorClass,
        mk: &DivisorClass,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        if resid.is_zero() {
            out.push(cur.clone());
            return;
        }
        if i == classes.len() || resid.dot(line) < 0 || resid.dot(mk) < 0 {
            return;
        }
        let c = classes[i];
        let mut r = resid.clone();
        for a in 0..=cap {
            if a > 0 {
                r = &r - c;
                if r.dot(line) < 0 || r.dot(mk) < 0 {
                    break;
                }
            }
            cur[i] = a;
            rec(i + 1, &r, classes, cap, limit, line, mk, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, target, classes, cap, limit, &line, &mk, &mut cur, &mut out);
    out
}

/// Every solution of `sum a_i C_i = -K` over the model's curves with `a_i <= 6`, in
/// depth-first order over the canonical curve order.
pub fn enumerate_anticanonical(model: &SurfaceModel) -> Vec<DivisorConfig<'_>> {
    let classes: Vec<&DivisorClass> = model.curves.iter().map(|c| &c.class).collect();
    nonnegative_solutions(&classes, &model.anticanonical(), MAX_COEFFICIENT, None)
        .into_iter()
        .map(|mult| DivisorConfig::unchecked(model, mult))
        .collect()
}

/// Same solution set by exhaustive search over `{0..=6}^curves`, in lexicographic order
/// (the order the depth-first search emits).
pub fn brute_force_anticanonical(model: &SurfaceModel) -> Vec<Vec<u32>> {
    let k = model.curves.len();
    let target = model.anticanonical();
    let base = MAX_COEFFICIENT + 1;
    let mut digits = vec![0u32; k];
    let mut sum = DivisorClass::zero(model.n());
    let mut out = Vec::new();
    loop {
        if sum == target {
            out.push(digits.clone());
        }
        let mut i = 0;
        loop {
            if i == k {
                out.sort();
                return out;
            }
            if digits[i] + 1 < base {
                digits[i] += 1;
                sum = &sum + &model.curves[i].class;
                break;
            }
            sum = &sum - &((digits[i] as i64) * &model.curves[i].class);
            digits[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{catalog_get, Catalog};

    fn cls(v: &[i64]) -> DivisorClass {
        DivisorClass::try_from(v.to_vec()).unwrap()
    }

    #[test]
    fn degree_seven_single_solution() {
        let m = catalog_get("d7-A1").unwrap();
        let cfgs = enumerate_anticanonical(&m);
        assert_eq!(cfgs.len(), 1);
        let c = &cfgs[0];
        assert_eq!(c.coefficient(m.curve_index(&cls(&[0, -1, 1])).unwrap()), 2);
        assert_eq!(c.coefficient(m.curve_index(&cls(&[0, 0, -1])).unwrap()), 4);
        assert_eq!(c.coefficient(m.curve_index(&cls(&[1, 1, 1])).unwrap()), 3);
    }

    #[test]
    fn triple_line_config_present() {
        let m = catalog_get("d6-A1A2").unwrap();
        let want = [(cls(&[0, -1, 1, 0]), 2), (cls(&[0, 0, -1, 1]), 4), (cls(&[0, 0, 0, -1]), 6), (cls(&[1, 1, 1, 1]), 3)];
        let found = enumerate_anticanonical(&m).into_iter().any(|c| {
            c.components().len() == 4
                && want.iter().all(|(k, a)| c.coefficient(m.curve_index(k).unwrap()) == *a)
        });
        assert!(found);
    }

    #[test]
    fn matches_brute_force_in_high_degree() {
        for e in Catalog::builtin().entries.iter().filter(|e| e.degree >= 6) {
            let m = e.build().unwrap();
            let dfs: Vec<Vec<u32>> = enumerate_anticanonical(&m).iter().map(|c| c.mult().to_vec()).collect();
            assert_eq!(dfs, brute_force_anticanonical(&m), "{}", e.id);
        }
    }

    #[test]
    fn smooth_model_has_no_root_configs() {
        use crate::surface::{build_from_plane_spec, PlanePoint, PlaneSpec};
        let spec = PlaneSpec {
            points: ["a", "b", "c"].iter().map(|id| PlanePoint { id: id.to_string(), parent: None }).collect(),
            curves: vec![],
        };
        let m = build_from_plane_spec(&spec).unwrap();
        let cfgs = enumerate_anticanonical(&m);
        assert!(!cfgs.is_empty());
        assert!(cfgs.iter().all(|c| !c.contains_root()));
    }

    #[test]
    fn every_config_is_anticanonical() {
        for e in &Catalog::builtin().entries {
            let m = e.build().unwrap();
            for c in enumerate_anticanonical(&m) {
                assert_eq!(c.class_sum(), m.anticanonical(), "{}", e.id);
                assert_eq!(c.anticanonical_weight(), m.degree as i64);
                assert!(c.max_coefficient() <= MAX_COEFFICIENT);
            }
        }
    }
}
