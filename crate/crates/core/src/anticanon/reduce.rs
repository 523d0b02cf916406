//! Rewriting components of nonnegative self-intersection onto negative curves.

use serde::Serialize;
use thiserror::Error;

use super::config::{DivisorConfig, MAX_COEFFICIENT};
use super::enumerate::nonnegative_solutions;
use crate::piclattice::DivisorClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("reduction blocked at {0}: no -1-curve disjoint from it leaves a decomposable remainder")]
    Blocked(String),
    #[error("reduction lowered the largest coefficient from {before} to {after}")]
    MultiplicityDropped { before: u32, after: u32 },
}

/// One replacement `X -> E + (X - E)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub component: String,
    pub coefficient: u32,
    pub minus_one_curve: String,
    pub square_before: i64,
    pub square_after: i64,
}

/// Replaces each extra component `X` with coefficient `m` by `m (E + Y)`, where `E` is a
/// listed −1-curve with `E.X = 0` and `Y = X - E` is a nonnegative combination of listed
/// curves. Local point data is dropped.
pub fn reduce_with_steps<'a>(config: &DivisorConfig<'a>) -> Result<(DivisorConfig<'a>, Vec<ReductionStep>), ReduceError> {
    let model = config.surface();
    let classes: Vec<&DivisorClass> = model.curves.iter().map(|c| &c.class).collect();
    let mut mult = config.mult().to_vec();
    let mut steps = Vec::new();
    for x in config.extras() {
        let found = model.minus_one_indices().find_map(|e| {
            let ec = &model.curves[e].class;
            if ec.dot(&x.class) != 0 {
                return None;
            }
            let y = &x.class - ec;
            nonnegative_solutions(&classes, &y, MAX_COEFFICIENT, Some(1)).pop().map(|sol| (e, y, sol))
        });
        let (e, y, sol) = found.ok_or_else(|| ReduceError::Blocked(x.name.clone()))?;
        debug_assert!(y.square() < x.class.square());
        mult[e] += x.coefficient;
        for (i, a) in sol.into_iter().enumerate() {
            mult[i] += x.coefficient * a;
        }
        steps.push(ReductionStep {
            component: x.name.clone(),
            coefficient: x.coefficient,
            minus_one_curve: model.curves[e].name.clone(),
            square_before: x.class.square(),
            square_after: y.square(),
        });
    }
    let out = DivisorConfig::unchecked(model, mult);
    let (before, after) = (config.max_coefficient(), out.max_coefficient());
    if after < before {
        return Err(ReduceError::MultiplicityDropped { before, after });
    }
    Ok((out, steps))
}

pub fn reduce_to_negative_support<'a>(config: &DivisorConfig<'a>) -> Result<DivisorConfig<'a>, ReduceError> {
    if config.extras().is_empty() {
        return Ok(config.clone());
    }
    reduce_with_steps(config).map(|(c, _)| c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anticanon::config::Extra;
    use crate::anticanon::enumerate_anticanonical;
    use crate::surface::catalog_get;

    fn cls(v: &[i64]) -> DivisorClass {
        DivisorClass::try_from(v.to_vec()).unwrap()
    }

    #[test]
    fn identity_on_negative_support() {
        let m = catalog_get("d7-A1").unwrap();
        let c = enumerate_anticanonical(&m).remove(0);
        assert_eq!(reduce_to_negative_support(&c).unwrap(), c);
    }

    #[test]
    fn zero_curve_rewritten() {
        let m = catalog_get("d6-A1A2").unwrap();
        // -K = (L - e1) + (2L - e2 - e3): take the second part from negative curves
        let rest = &m.anticanonical() - &cls(&[1, 1, 0, 0]);
        let classes: Vec<&DivisorClass> = m.curves.iter().map(|c| &c.class).collect();
        let mult = nonnegative_solutions(&classes, &rest, MAX_COEFFICIENT, Some(1)).pop().unwrap();
        let extra = Extra { name: "M".into(), class: cls(&[1, 1, 0, 0]), coefficient: 1 };
        let c = DivisorConfig::new(&m, mult, vec![extra], vec![]).unwrap();
        let (r, steps) = reduce_with_steps(&c).unwrap();
        assert!(r.extras().is_empty());
        assert_eq!(r.class_sum(), m.anticanonical());
        assert!(r.max_coefficient() >= c.max_coefficient());
        assert_eq!(steps.len(), 1);
        assert!(steps[0].square_after <= steps[0].square_before - 1);
    }
}
