//! Thresholds of whole configurations.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::Serialize;

use super::cluster::{local_lct, Cluster, ClusterItem};
use super::{ratio_str, LctError};
use crate::anticanon::DivisorConfig;
use crate::Rational;

/// How intersections are placed when a configuration carries no explicit point data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Every pair meets transversally at distinct points, never three at once.
    DefaultSnc,
    /// Pairs meeting more than once are tangent, and mutually meeting components share a point.
    Pessimistic,
}

impl FromStr for Mode {
    type Err = LctError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "default-snc" | "default" => Ok(Mode::DefaultSnc),
            "pessimistic" => Ok(Mode::Pessimistic),
            other => Err(LctError::UnknownMode(other.to_string())),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::DefaultSnc => "default-snc",
            Mode::Pessimistic => "pessimistic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    /// The bound `1/a` of a component.
    Component { name: String, coefficient: u32 },
    /// An exceptional divisor over one of the points.
    Exceptional { point: usize, components: Vec<String>, trace: Vec<usize>, multiplicity: u32, log_discrepancy: u32 },
    /// Nothing constrains the pair below 1.
    Cap,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Component { name, coefficient } => write!(f, "component {name} with coefficient {coefficient}"),
            Witness::Exceptional { components, multiplicity, log_discrepancy, trace, .. } => write!(
                f,
                "exceptional divisor (m={multiplicity}, l={log_discrepancy}) over the point of {}{}",
                components.join(", "),
                if trace.is_empty() { String::new() } else { format!(" after {} further blow-ups", trace.len()) }
            ),
            Witness::Cap => write!(f, "cap at 1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub source: String,
    #[serde(serialize_with = "ratio_str")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LctReport {
    #[serde(serialize_with = "ratio_str")]
    pub value: Rational,
    #[serde(serialize_with = "ratio_str")]
    pub uncapped: Rational,
    pub witness: Witness,
    /// Configuration attaining the value, for surface-level reports.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<String>,
    pub breakdown: Vec<Constraint>,
}

impl LctReport {
    fn capped(uncapped: Rational, witness: Witness, breakdown: Vec<Constraint>) -> Self {
        let (value, witness) = if uncapped > Rational::one() { (Rational::one(), Witness::Cap) } else { (uncapped, witness) };
        Self { value, uncapped, witness, config: None, breakdown }
    }
}

/// Points where components meet, as dictated by `mode`.
pub(crate) fn synthesize_points(config: &DivisorConfig<'_>, mode: Mode) -> Result<Vec<Cluster>, LctError> {
    let comps = config.components();
    let k = comps.len();
    let pairing = |a: usize, b: usize| comps[a].class.dot(&comps[b].class).max(0) as u32;
    let branch = |a: usize| ClusterItem::Branch { component: comps[a].index, coefficient: comps[a].coefficient };
    let mut out = Vec::new();
    match mode {
        Mode::DefaultSnc => {
            for a in 0..k {
                for b in a + 1..k {
                    for _ in 0..pairing(a, b) {
                        out.push(Cluster::transverse(vec![branch(a), branch(b)]));
                    }
                }
            }
        }
        Mode::Pessimistic => {
            if let Some(e) = config.extras().first() {
                return Err(LctError::GeometryRequired(e.name.clone()));
            }
            let mut covered = vec![vec![false; k]; k];
            let mut pairs: Vec<(usize, usize)> =
                (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|&(a, b)| pairing(a, b) > 0).collect();
            pairs.sort_by_key(|&(a, b)| (std::cmp::Reverse(comps[a].coefficient + comps[b].coefficient), a, b));
            let mut by_coef: Vec<usize> = (0..k).collect();
            by_coef.sort_by_key(|&a| (std::cmp::Reverse(comps[a].coefficient), a));
            for (a, b) in pairs {
                if covered[a][b] {
                    continue;
                }
                let mut group = vec![a, b];
                for &c in &by_coef {
                    if group.contains(&c) || group.iter().any(|&g| pairing(g, c) == 0 || covered[g][c]) {
                        continue;
                    }
                    let mut trial = group.clone();
                    trial.push(c);
                    if contacts_for(&trial, &pairing).is_ok() {
                        group = trial;
                    }
                }
                for &x in &group {
                    for &y in &group {
                        covered[x][y] = true;
                    }
                }
                let contacts = contacts_for(&group, &pairing)?;
                out.push(Cluster::new(group.iter().map(|&g| branch(g)).collect(), contacts)?);
            }
        }
    }
    Ok(out)
}

fn contacts_for(group: &[usize], pairing: &impl Fn(usize, usize) -> u32) -> Result<Vec<Vec<u32>>, LctError> {
    let c: Vec<Vec<u32>> = group.iter().map(|&a| group.iter().map(|&b| if a == b { 0 } else { pairing(a, b) }).collect()).collect();
    Cluster::new(vec![ClusterItem::Exceptional { multiplicity: 1, log_discrepancy: 1 }; group.len()], c.clone())?;
    Ok(c)
}

/// `min(1, 1/a_i over components, local thresholds over points)`.
pub fn config_lct(config: &DivisorConfig<'_>, mode: Mode) -> Result<LctReport, LctError> {
    let mut breakdown = Vec::new();
    let mut best: Option<(Rational, Witness)> = None;
    let offer = |value: Rational, w: Witness, best: &mut Option<(Rational, Witness)>| {
        if best.as_ref().is_none_or(|(b, _)| value < *b) {
            *best = Some((value, w));
        }
    };
    for c in config.components() {
        let v = Rational::new(1, c.coefficient as i64);
        breakdown.push(Constraint { source: format!("component {}", c.name), value: v });
        offer(v, Witness::Component { name: c.name.clone(), coefficient: c.coefficient }, &mut best);
    }
    let points = if config.points().is_empty() {
        synthesize_points(config, mode)?
    } else {
        config.points().iter().map(|p| p.with_coefficients(|i| config.coefficient(i))).collect()
    };
    for (pi, p) in points.iter().enumerate() {
        let Some(b) = local_lct(p)? else { continue };
        let names: Vec<String> = p.components().map(|i| config.name_of(i).to_string()).collect();
        breakdown.push(Constraint { source: format!("point {pi} ({})", names.join(", ")), value: b.value });
        offer(
            b.value,
            Witness::Exceptional {
                point: pi,
                components: names,
                trace: b.trace.clone(),
                multiplicity: b.multiplicity,
                log_discrepancy: b.log_discrepancy,
            },
            &mut best,
        );
    }
    let (uncapped, witness) = best.unwrap_or((Rational::one(), Witness::Cap));
    Ok(LctReport::capped(uncapped, witness, breakdown))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anticanon::{enumerate_anticanonical, special_configs};
    use crate::surface::{catalog_get, Catalog};

    #[test]
    fn degree_seven() {
        let m = catalog_get("d7-A1").unwrap();
        let c = enumerate_anticanonical(&m).remove(0);
        let r = config_lct(&c, Mode::DefaultSnc).unwrap();
        assert_eq!(r.value, Rational::new(1, 4));
        assert!(matches!(r.witness, Witness::Component { coefficient: 4, .. }));
    }

    #[test]
    fn triple_point_on_a1_cubic() {
        let e = Catalog::builtin().of_degree(3).find(|e| e.singularity.to_string() == "A1").unwrap();
        let m = e.build().unwrap();
        let c = special_configs(&m).remove(0);
        let r = config_lct(&c, Mode::DefaultSnc).unwrap();
        assert_eq!(r.value, Rational::new(2, 3));
        assert!(matches!(r.witness, Witness::Exceptional { multiplicity: 3, log_discrepancy: 2, .. }));
        assert!(matches!(config_lct(&c.clone(), Mode::Pessimistic), Ok(_)));
    }

    #[test]
    fn pessimistic_needs_geometry_for_extras() {
        let e = Catalog::builtin().of_degree(3).find(|e| e.singularity.to_string() == "A1").unwrap();
        let m = e.build().unwrap();
        let c = special_configs(&m).remove(0);
        let bare = crate::anticanon::DivisorConfig::new(&m, c.mult().to_vec(), c.extras().to_vec(), vec![]).unwrap();
        assert!(matches!(config_lct(&bare, Mode::Pessimistic), Err(LctError::GeometryRequired(_))));
    }

    #[test]
    fn pessimistic_never_above_default() {
        for e in Catalog::builtin().entries.iter().filter(|e| e.degree >= 4) {
            let m = e.build().unwrap();
            for c in enumerate_anticanonical(&m) {
                let d = config_lct(&c, Mode::DefaultSnc).unwrap().value;
                let p = config_lct(&c, Mode::Pessimistic).unwrap().value;
                assert!(p <= d, "{} {c}", e.id);
            }
        }
    }

    #[test]
    fn mode_parse() {
        assert_eq!("default-snc".parse::<Mode>().unwrap(), Mode::DefaultSnc);
        assert!("other".parse::<Mode>().is_err());
    }
}
