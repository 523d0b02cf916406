//! Weak del Pezzo surfaces described by their complete list of negative curves.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::dynkin::{self, SingularityType};
use super::plane::PlaneSpec;
use super::SurfaceError;
use crate::linalg;
use crate::piclattice::{enumerate_negative_candidates, DivisorClass};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub name: String,
    pub class: DivisorClass,
    pub self_int: i64,
}

impl Curve {
    pub fn new(name: impl Into<String>, class: DivisorClass) -> Self {
        let self_int = class.square();
        Self { name: name.into(), class, self_int }
    }

    /// Named after its class.
    pub fn from_class(class: DivisorClass) -> Self {
        Self::new(class.to_string(), class)
    }

    pub fn is_root(&self) -> bool {
        self.self_int == -2
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceModel {
    pub degree: u32,
    /// −2-curves first, then −1-curves; each block sorted by class.
    pub curves: Vec<Curve>,
    pub gram: Vec<Vec<i64>>,
    pub singularity: SingularityType,
    pub provenance: Option<PlaneSpec>,
}

fn canonical_order(curves: &mut [Curve]) {
    curves.sort_by(|a, b| (a.self_int != -2, &a.class).cmp(&(b.self_int != -2, &b.class)));
}

/// Exceptional classes with nonnegative pairing against every given root.
pub(crate) fn dominant_exceptional(n: usize, roots: &[DivisorClass]) -> Vec<DivisorClass> {
    let cands = enumerate_negative_candidates(n).expect("n checked by caller");
    cands
        .minus_one
        .into_iter()
        .filter(|e| roots.iter().all(|r| e.dot(r) >= 0))
        .collect()
}

impl SurfaceModel {
    /// Builds a model from an explicit curve list (stored in canonical order).
    pub fn from_curves(degree: u32, mut curves: Vec<Curve>, provenance: Option<PlaneSpec>) -> Result<Self, SurfaceError> {
        if !(1..=9).contains(&degree) {
            return Err(SurfaceError::Degree(degree));
        }
        let n = (9 - degree) as usize;
        if let Some(c) = curves.iter().find(|c| c.class.n() != n) {
            return Err(SurfaceError::Dimension { curve: c.name.clone(), expected: n, found: c.class.n() });
        }
        canonical_order(&mut curves);
        let gram = curves.iter().map(|a| curves.iter().map(|b| a.class.dot(&b.class)).collect()).collect();
        let roots: Vec<DivisorClass> = curves.iter().filter(|c| c.is_root()).map(|c| c.class.clone()).collect();
        let minus: Vec<DivisorClass> = curves.iter().filter(|c| c.self_int == -1).map(|c| c.class.clone()).collect();
        let singularity = if degree == 2 { dynkin::refine(&roots, &minus)? } else { dynkin::identify(&roots)? };
        Ok(Self { degree, curves, gram, singularity, provenance })
    }

    /// Builds a model from its −2-curves; the −1-curves are the exceptional classes
    /// meeting every −2-curve nonnegatively. Extra curves already listed are kept and
    /// must be among them.
    pub fn from_roots(degree: u32, curves: Vec<Curve>, provenance: Option<PlaneSpec>) -> Result<Self, SurfaceError> {
        if !(2..=9).contains(&degree) {
            return Err(SurfaceError::Degree(degree));
        }
        let n = (9 - degree) as usize;
        if let Some(c) = curves.iter().find(|c| c.class.n() != n) {
            return Err(SurfaceError::Dimension { curve: c.name.clone(), expected: n, found: c.class.n() });
        }
        let roots: Vec<DivisorClass> = curves.iter().filter(|c| c.is_root()).map(|c| c.class.clone()).collect();
        let derived = dominant_exceptional(n, &roots);
        let mut all = curves;
        for c in all.iter().filter(|c| !c.is_root()) {
            if !derived.contains(&c.class) {
                return Err(SurfaceError::Inconsistent(format!("{} is not a -1-curve of this configuration", c.name)));
            }
        }
        for e in derived {
            if !all.iter().any(|c| c.class == e) {
                all.push(Curve::from_class(e));
            }
        }
        Self::from_curves(degree, all, provenance)
    }

    pub fn n(&self) -> usize {
        (9 - self.degree) as usize
    }

    pub fn anticanonical(&self) -> DivisorClass {
        DivisorClass::anticanonical(self.n())
    }

    pub fn root_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.curves.len()).filter(|&i| self.curves[i].self_int == -2)
    }

    pub fn minus_one_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.curves.len()).filter(|&i| self.curves[i].self_int == -1)
    }

    pub fn root_classes(&self) -> Vec<DivisorClass> {
        self.root_indices().map(|i| self.curves[i].class.clone()).collect()
    }

    pub fn minus_one_classes(&self) -> Vec<DivisorClass> {
        self.minus_one_indices().map(|i| self.curves[i].class.clone()).collect()
    }

    pub fn curve_index(&self, class: &DivisorClass) -> Option<usize> {
        self.curves.iter().position(|c| &c.class == class)
    }

    /// Reflection descent: writes `x` as a listed −1-curve plus a nonnegative combination of
    /// −2-curves (coefficients indexed like `root_indices`). `None` if the descent stalls.
    pub fn decompose_exceptional(&self, x: &DivisorClass) -> Option<(usize, Vec<i64>)> {
        let roots: Vec<usize> = self.root_indices().collect();
        let mut coeffs = vec![0i64; roots.len()];
        let mut cur = x.clone();
        for _ in 0..10_000 {
            if let Some(i) = self.curves.iter().position(|c| c.self_int == -1 && c.class == cur) {
                return Some((i, coeffs));
            }
            let (k, &ri) = roots.iter().enumerate().find(|(_, &ri)| cur.dot(&self.curves[ri].class) < 0)?;
            let t = -cur.dot(&self.curves[ri].class);
            cur = &cur - &(t * &self.curves[ri].class);
            coeffs[k] += t;
        }
        None
    }

    /// Every way of writing `x` as (listed −1-curve) + (nonnegative integer combination of −2-curves).
    pub fn exceptional_decompositions(&self, x: &DivisorClass) -> Vec<(usize, Vec<i64>)> {
        let roots: Vec<usize> = self.root_indices().collect();
        let g: Vec<Vec<i64>> = roots.iter().map(|&i| roots.iter().map(|&j| self.gram[i][j]).collect()).collect();
        let mut out = Vec::new();
        for e in self.minus_one_indices() {
            let y = x - &self.curves[e].class;
            if roots.is_empty() {
                if y.is_zero() {
                    out.push((e, Vec::new()));
                }
                continue;
            }
            let rhs: Vec<i64> = roots.iter().map(|&i| y.dot(&self.curves[i].class)).collect();
            let Some(sol) = linalg::solve(&g, &rhs) else { continue };
            if sol.iter().any(|c| !c.is_integer() || *c.numer() < 0) {
                continue;
            }
            let coeffs: Vec<i64> = sol.iter().map(|c| c.to_integer()).collect();
            let mut back = DivisorClass::zero(self.n());
            for (&i, &c) in roots.iter().zip(&coeffs) {
                back = &back + &(c * &self.curves[i].class);
            }
            if back == y {
                out.push((e, coeffs));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelIssue {
    DegreeOutOfRange(u32),
    Dimension { curve: String },
    SelfIntersection { curve: String, stored: i64, computed: i64 },
    NotNegative { curve: String, self_int: i64 },
    Adjunction { curve: String },
    DuplicateClass { curve: String },
    GramShape,
    GramEntry { i: usize, j: usize, stored: i64, computed: i64 },
    NegativeOffDiagonal { i: usize, j: usize },
    RootPairing { i: usize, j: usize, value: i64 },
    Incomplete { class: DivisorClass },
    Singularity { stored: SingularityType, computed: String },
}

impl fmt::Display for ModelIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ModelIssue::*;
        match self {
            DegreeOutOfRange(d) => write!(f, "degree {d} out of range"),
            Dimension { curve } => write!(f, "{curve}: wrong number of exceptional coefficients"),
            SelfIntersection { curve, stored, computed } => {
                write!(f, "{curve}: stored self-intersection {stored}, class gives {computed}")
            }
            NotNegative { curve, self_int } => write!(f, "{curve}: self-intersection {self_int} is not -1 or -2"),
            Adjunction { curve } => write!(f, "{curve}: (-K).C != C^2 + 2"),
            DuplicateClass { curve } => write!(f, "{curve}: class listed twice"),
            GramShape => write!(f, "gram matrix has the wrong shape"),
            GramEntry { i, j, stored, computed } => {
                write!(f, "gram[{i}][{j}] = {stored}, pairing is {computed}")
            }
            NegativeOffDiagonal { i, j } => write!(f, "gram[{i}][{j}] is negative"),
            RootPairing { i, j, value } => write!(f, "-2-curves {i} and {j} pair to {value}"),
            Incomplete { class } => write!(f, "exceptional class {class} does not decompose onto listed curves"),
            Singularity { stored, computed } => write!(f, "declared type {stored}, curves give {computed}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModelReport {
    pub issues: Vec<ModelIssue>,
}

impl ModelReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn incomplete(&self) -> bool {
        self.issues.iter().any(|i| matches!(i, ModelIssue::Incomplete { .. }))
    }
}

/// Checks every structural invariant of a model, reporting each failure separately.
pub fn validate_model(model: &SurfaceModel) -> ModelReport {
    let mut issues = Vec::new();
    if !(1..=9).contains(&model.degree) {
        return ModelReport { issues: vec![ModelIssue::DegreeOutOfRange(model.degree)] };
    }
    let n = model.n();
    let mk = model.anticanonical();
    let mut dims_ok = true;
    for (i, c) in model.curves.iter().enumerate() {
        if c.class.n() != n {
            issues.push(ModelIssue::Dimension { curve: c.name.clone() });
            dims_ok = false;
            continue;
        }
        let sq = c.class.square();
        if sq != c.self_int {
            issues.push(ModelIssue::SelfIntersection { curve: c.name.clone(), stored: c.self_int, computed: sq });
        }
        if c.self_int != -1 && c.self_int != -2 {
            issues.push(ModelIssue::NotNegative { curve: c.name.clone(), self_int: c.self_int });
        }
        if mk.dot(&c.class) != c.self_int + 2 {
            issues.push(ModelIssue::Adjunction { curve: c.name.clone() });
        }
        if model.curves[..i].iter().any(|d| d.class == c.class) {
            issues.push(ModelIssue::DuplicateClass { curve: c.name.clone() });
        }
    }
    if !dims_ok {
        return ModelReport { issues };
    }
    let k = model.curves.len();
    if model.gram.len() != k || model.gram.iter().any(|r| r.len() != k) {
        issues.push(ModelIssue::GramShape);
    } else {
        for i in 0..k {
            for j in 0..k {
                let computed = model.curves[i].class.dot(&model.curves[j].class);
                let stored = model.gram[i][j];
                if stored != computed {
                    issues.push(ModelIssue::GramEntry { i, j, stored, computed });
                }
                if i < j && computed < 0 {
                    issues.push(ModelIssue::NegativeOffDiagonal { i, j });
                }
                if i < j && model.curves[i].is_root() && model.curves[j].is_root() && !(0..=1).contains(&computed) {
                    issues.push(ModelIssue::RootPairing { i, j, value: computed });
                }
            }
        }
    }
    if let Ok(cands) = enumerate_negative_candidates(n) {
        for x in cands.minus_one {
            if model.decompose_exceptional(&x).is_none() {
                issues.push(ModelIssue::Incomplete { class: x });
            }
        }
    }
    let roots = model.root_classes();
    let computed = if model.degree == 2 {
        dynkin::refine(&roots, &model.minus_one_classes())
    } else {
        dynkin::identify(&roots)
    };
    match computed {
        Ok(t) if t == model.singularity => {}
        Ok(t) => issues.push(ModelIssue::Singularity { stored: model.singularity.clone(), computed: t.to_string() }),
        Err(e) => issues.push(ModelIssue::Singularity { stored: model.singularity.clone(), computed: e.to_string() }),
    }
    ModelReport { issues }
}

/// Unrefined Dynkin type of the −2-curve configuration.
pub fn dynkin_type(model: &SurfaceModel) -> Result<SingularityType, SurfaceError> {
    Ok(dynkin::identify(&model.root_classes())?)
}

/// Degree-2 refinement of the Dynkin type (`A5'`/`A5''`, `(3A1)'`/`(3A1)''`, `(4A1)'`/`(4A1)''`).
pub fn refine_singularity_label(model: &SurfaceModel) -> Result<SingularityType, SurfaceError> {
    if model.degree != 2 {
        return Err(SurfaceError::RefinementDegree(model.degree));
    }
    Ok(dynkin::refine(&model.root_classes(), &model.minus_one_classes())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(v: &[i64]) -> DivisorClass {
        DivisorClass::try_from(v.to_vec()).unwrap()
    }

    fn d7_a1() -> SurfaceModel {
        SurfaceModel::from_curves(
            7,
            vec![
                Curve::from_class(cls(&[0, -1, 1])),
                Curve::from_class(cls(&[0, 0, -1])),
                Curve::from_class(cls(&[1, 1, 1])),
            ],
            None,
        )
        .unwrap()
    }

    #[test]
    fn degree_seven_model_is_valid() {
        let m = d7_a1();
        assert!(validate_model(&m).is_valid(), "{:?}", validate_model(&m));
        assert_eq!(m.singularity.to_string(), "A1");
        // e1 = (e1 - e2) + e2
        let (e, coeffs) = m.decompose_exceptional(&DivisorClass::exceptional(2, 0)).unwrap();
        assert_eq!(m.curves[e].class, DivisorClass::exceptional(2, 1));
        assert_eq!(coeffs, vec![1]);
    }

    #[test]
    fn deleting_a_curve_breaks_completeness() {
        let mut m = d7_a1();
        let e2 = m.curve_index(&DivisorClass::exceptional(2, 1)).unwrap();
        let curves: Vec<Curve> = m.curves.iter().enumerate().filter(|(i, _)| *i != e2).map(|(_, c)| c.clone()).collect();
        m = SurfaceModel::from_curves(7, curves, None).unwrap();
        let r = validate_model(&m);
        assert!(r.incomplete());
    }

    #[test]
    fn perturbed_gram_is_reported() {
        let mut m = d7_a1();
        m.gram[0][1] += 1;
        let r = validate_model(&m);
        assert!(r.issues.iter().any(|i| matches!(i, ModelIssue::GramEntry { i: 0, j: 1, .. })));
    }

    #[test]
    fn derived_minus_one_curves() {
        let m = SurfaceModel::from_roots(7, vec![Curve::from_class(cls(&[0, -1, 1]))], None).unwrap();
        assert_eq!(m.curves.len(), 3);
        assert!(validate_model(&m).is_valid());
        let general = SurfaceModel::from_roots(6, vec![], None).unwrap();
        assert_eq!(general.curves.len(), 6);
        assert!(general.singularity.is_empty());
    }

    #[test]
    fn refinement_requires_degree_two() {
        assert!(matches!(refine_singularity_label(&d7_a1()), Err(SurfaceError::RefinementDegree(7))));
        assert_eq!(dynkin_type(&d7_a1()).unwrap().to_string(), "A1");
    }
}
