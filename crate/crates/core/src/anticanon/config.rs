//! Effective anticanonical divisors on a surface model.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::lct::Cluster;
use crate::piclattice::DivisorClass;
use crate::surface::SurfaceModel;

/// Largest coefficient a member of `|-K|` can carry.
pub const MAX_COEFFICIENT: u32 = 6;

/// A component that is not a negative curve of the model (self-intersection at least 0).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extra {
    pub name: String,
    pub class: DivisorClass,
    pub coefficient: u32,
}

impl Extra {
    pub fn self_int(&self) -> i64 {
        self.class.square()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("expected {expected} coefficients, got {found}")]
    Length { expected: usize, found: usize },
    #[error("components sum to {found}, not {expected}")]
    ClassSum { expected: DivisorClass, found: DivisorClass },
    #[error("coefficient {coefficient} of {name} exceeds {bound}")]
    TooLarge { name: String, coefficient: u32, bound: u32 },
    #[error("extra component {0} has negative self-intersection")]
    NegativeExtra(String),
    #[error("extra component {0} has zero coefficient")]
    ZeroExtra(String),
    #[error("point {point} refers to component {component}, which is absent")]
    UnknownComponent { point: usize, component: usize },
    #[error("point {point} gives component {component} coefficient {given}, expected {actual}")]
    PointCoefficient { point: usize, component: usize, given: u32, actual: u32 },
}

/// One component of a configuration as seen from outside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentView {
    /// Index into model curves followed by extras.
    pub index: usize,
    pub name: String,
    pub class: DivisorClass,
    pub self_int: i64,
    pub coefficient: u32,
}

/// `D = sum a_i C_i` in `|-mK|` (normally `m = 1`), with optional explicit local geometry.
/// Components are indexed by the model's curves followed by `extras`.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorConfig<'a> {
    surface: &'a SurfaceModel,
    mult: Vec<u32>,
    extras: Vec<Extra>,
    points: Vec<Cluster>,
    multiple: u32,
}

impl<'a> DivisorConfig<'a> {
    pub fn new(
        surface: &'a SurfaceModel,
        mult: Vec<u32>,
        extras: Vec<Extra>,
        points: Vec<Cluster>,
    ) -> Result<Self, ConfigError> {
        let cfg = Self { surface, mult, extras, points, multiple: 1 };
        cfg.check()?;
        Ok(cfg)
    }

    /// Configuration supported on the model's negative curves.
    pub fn on_curves(surface: &'a SurfaceModel, mult: Vec<u32>) -> Result<Self, ConfigError> {
        Self::new(surface, mult, Vec::new(), Vec::new())
    }

    pub(crate) fn unchecked(surface: &'a SurfaceModel, mult: Vec<u32>) -> Self {
        Self { surface, mult, extras: Vec::new(), points: Vec::new(), multiple: 1 }
    }

    fn check(&self) -> Result<(), ConfigError> {
        let s = self.surface;
        if self.mult.len() != s.curves.len() {
            return Err(ConfigError::Length { expected: s.curves.len(), found: self.mult.len() });
        }
        for e in &self.extras {
            if e.self_int() < 0 {
                return Err(ConfigError::NegativeExtra(e.name.clone()));
            }
            if e.coefficient == 0 {
                return Err(ConfigError::ZeroExtra(e.name.clone()));
            }
        }
        let bound = MAX_COEFFICIENT * self.multiple;
        for c in self.components() {
            if c.coefficient > bound {
                return Err(ConfigError::TooLarge { name: c.name, coefficient: c.coefficient, bound });
            }
        }
        let expected = self.target();
        let found = self.class_sum();
        if found != expected {
            return Err(ConfigError::ClassSum { expected, found });
        }
        for (p, cl) in self.points.iter().enumerate() {
            for it in cl.items() {
                if let crate::lct::ClusterItem::Branch { component, coefficient } = *it {
                    let actual = self.coefficient(component);
                    if actual == 0 {
                        return Err(ConfigError::UnknownComponent { point: p, component });
                    }
                    if actual != coefficient {
                        return Err(ConfigError::PointCoefficient { point: p, component, given: coefficient, actual });
                    }
                }
            }
        }
        Ok(())
    }

    fn target(&self) -> DivisorClass {
        self.multiple as i64 * &self.surface.anticanonical()
    }

    pub fn surface(&self) -> &'a SurfaceModel {
        self.surface
    }

    /// Coefficients of the model's curves, in model order.
    pub fn mult(&self) -> &[u32] {
        &self.mult
    }

    pub fn extras(&self) -> &[Extra] {
        &self.extras
    }

    pub fn points(&self) -> &[Cluster] {
        &self.points
    }

    /// `m` such that the configuration lies in `|-mK|`.
    pub fn multiple(&self) -> u32 {
        self.multiple
    }

    pub fn component_count(&self) -> usize {
        self.mult.len() + self.extras.len()
    }

    pub fn coefficient(&self, index: usize) -> u32 {
        match index.checked_sub(self.mult.len()) {
            None => self.mult[index],
            Some(e) => self.extras.get(e).map_or(0, |x| x.coefficient),
        }
    }

    pub fn class_of(&self, index: usize) -> &DivisorClass {
        match index.checked_sub(self.mult.len()) {
            None => &self.surface.curves[index].class,
            Some(e) => &self.extras[e].class,
        }
    }

    pub fn name_of(&self, index: usize) -> &str {
        match index.checked_sub(self.mult.len()) {
            None => &self.surface.curves[index].name,
            Some(e) => &self.extras[e].name,
        }
    }

    /// Components with positive coefficient.
    pub fn components(&self) -> Vec<ComponentView> {
        (0..self.component_count())
            .filter(|&i| self.coefficient(i) > 0)
            .map(|i| {
                let class = self.class_of(i).clone();
                ComponentView {
                    index: i,
                    name: self.name_of(i).to_string(),
                    self_int: class.square(),
                    class,
                    coefficient: self.coefficient(i),
                }
            })
            .collect()
    }

    pub fn class_sum(&self) -> DivisorClass {
        let mut acc = DivisorClass::zero(self.surface.n());
        for c in self.components() {
            acc = &acc + &(c.coefficient as i64 * &c.class);
        }
        acc
    }

    /// `sum a_i (-K . C_i)`, which equals `m * degree`.
    pub fn anticanonical_weight(&self) -> i64 {
        let mk = self.surface.anticanonical();
        self.components().iter().map(|c| c.coefficient as i64 * mk.dot(&c.class)).sum()
    }

    pub fn max_coefficient(&self) -> u32 {
        self.components().iter().map(|c| c.coefficient).max().unwrap_or(0)
    }

    pub fn contains_root(&self) -> bool {
        self.surface.root_indices().any(|i| self.mult[i] > 0)
    }

    /// Whether the support is connected through positive pairings or shared points.
    pub fn is_connected(&self) -> bool {
        let comps = self.components();
        if comps.is_empty() {
            return true;
        }
        let k = comps.len();
        let pos = |idx: usize| comps.iter().position(|c| c.index == idx);
        let mut adj = vec![vec![false; k]; k];
        for a in 0..k {
            for b in 0..k {
                adj[a][b] = a != b && comps[a].class.dot(&comps[b].class) > 0;
            }
        }
        for p in &self.points {
            let members: Vec<usize> = p.components().filter_map(pos).collect();
            for &a in &members {
                for &b in &members {
                    adj[a][b] |= a != b;
                }
            }
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..k {
                if adj[u][v] && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The same divisor taken `k` times, a member of `|-kmK|`.
    pub fn scaled(&self, k: u32) -> Self {
        Self {
            surface: self.surface,
            mult: self.mult.iter().map(|a| a * k).collect(),
            extras: self.extras.iter().map(|e| Extra { coefficient: e.coefficient * k, ..e.clone() }).collect(),
            points: self.points.iter().map(|p| p.scaled(k)).collect(),
            multiple: self.multiple * k,
        }
    }

    /// Adds `by` to the coefficient of model curve `index`; the result is no longer anticanonical.
    pub fn raised(&self, index: usize, by: u32) -> Self {
        let mut out = self.clone();
        out.mult[index] += by;
        out.points = out.points.iter().map(|p| p.with_coefficients(|c| out.coefficient(c))).collect();
        out
    }

    /// Rows of (component, class, coefficient) for export.
    pub fn export_rows(&self) -> Vec<(String, DivisorClass, u32)> {
        self.components().into_iter().map(|c| (c.name, c.class, c.coefficient)).collect()
    }
}

impl fmt::Display for DivisorConfig<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components()
            .into_iter()
            .map(|c| if c.coefficient == 1 { c.name } else { format!("{}*{}", c.coefficient, c.name) })
            .collect();
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::catalog_get;

    #[test]
    fn degree_seven_config() {
        let m = catalog_get("d7-A1").unwrap();
        let idx = |v: &[i64]| m.curve_index(&DivisorClass::try_from(v.to_vec()).unwrap()).unwrap();
        let mut mult = vec![0; m.curves.len()];
        mult[idx(&[0, -1, 1])] = 2;
        mult[idx(&[0, 0, -1])] = 4;
        mult[idx(&[1, 1, 1])] = 3;
        let c = DivisorConfig::on_curves(&m, mult).unwrap();
        assert_eq!(c.anticanonical_weight(), 7);
        assert_eq!(c.max_coefficient(), 4);
        assert!(c.contains_root());
        assert!(c.is_connected());
        let s = c.scaled(2);
        assert_eq!(s.class_sum(), 2 * &m.anticanonical());
        assert_eq!(s.max_coefficient(), 8);
    }

    #[test]
    fn wrong_sum_rejected() {
        let m = catalog_get("d7-A1").unwrap();
        let mult = vec![1; m.curves.len()];
        assert!(matches!(DivisorConfig::on_curves(&m, mult), Err(ConfigError::ClassSum { .. })));
    }
}
