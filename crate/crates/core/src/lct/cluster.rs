//! Local thresholds at a point where several smooth branches (and possibly earlier
//! exceptional divisors) meet, by repeated point blow-ups.

use std::str::FromStr;

use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ClusterItem {
    /// A smooth branch of the component with index `component`, carrying its coefficient.
    Branch { component: usize, coefficient: u32 },
    /// An exceptional divisor with pullback multiplicity `multiplicity`; its discrepancy is
    /// `log_discrepancy - 1`.
    Exceptional { multiplicity: u32, log_discrepancy: u32 },
}

impl ClusterItem {
    fn multiplicity(&self) -> u32 {
        match *self {
            ClusterItem::Branch { coefficient, .. } => coefficient,
            ClusterItem::Exceptional { multiplicity, .. } => multiplicity,
        }
    }

    fn excess(&self) -> u32 {
        match *self {
            ClusterItem::Branch { .. } => 0,
            ClusterItem::Exceptional { log_discrepancy, .. } => log_discrepancy - 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("contact matrix must be {0}x{0} and symmetric")]
    ContactShape(usize),
    #[error("contact order between items {0} and {1} must be at least 1")]
    ContactZero(usize, usize),
    #[error("items {0} and {1} are tangent to item {2} but not to each other")]
    Intransitive(usize, usize, usize),
    #[error("component {0} listed twice with different data")]
    ConflictingBranch(usize),
    #[error("exceptional item needs positive multiplicity and log discrepancy")]
    BadExceptional,
    #[error("branch coefficient must be positive")]
    ZeroCoefficient,
}

/// Items meeting at one point; `contacts[i][j]` is the contact order of items `i` and `j`
/// (1 means transverse). Diagonal entries are ignored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cluster {
    items: Vec<ClusterItem>,
    contacts: Vec<Vec<u32>>,
}

fn check_contacts(contacts: &[Vec<u32>]) -> Result<(), ClusterError> {
    let n = contacts.len();
    if contacts.iter().any(|r| r.len() != n) {
        return Err(ClusterError::ContactShape(n));
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if contacts[i][j] != contacts[j][i] {
                return Err(ClusterError::ContactShape(n));
            }
            if contacts[i][j] == 0 {
                return Err(ClusterError::ContactZero(i.min(j), i.max(j)));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in j + 1..n {
                if i != j && i != k && contacts[i][j] >= 2 && contacts[i][k] >= 2 && contacts[j][k] < 2 {
                    return Err(ClusterError::Intransitive(j, k, i));
                }
            }
        }
    }
    Ok(())
}

impl Cluster {
    /// Validates the data and merges repeated listings of one branch.
    pub fn new(items: Vec<ClusterItem>, contacts: Vec<Vec<u32>>) -> Result<Self, ClusterError> {
        if contacts.len() != items.len() {
            return Err(ClusterError::ContactShape(items.len()));
        }
        check_contacts(&contacts)?;
        for it in &items {
            match *it {
                ClusterItem::Branch { coefficient: 0, .. } => return Err(ClusterError::ZeroCoefficient),
                ClusterItem::Exceptional { multiplicity, log_discrepancy } if multiplicity == 0 || log_discrepancy == 0 => {
                    return Err(ClusterError::BadExceptional)
                }
                _ => {}
            }
        }
        let mut keep: Vec<usize> = Vec::new();
        for (i, it) in items.iter().enumerate() {
            if let ClusterItem::Branch { component, .. } = *it {
                if let Some(&j) = keep
                    .iter()
                    .find(|&&j| matches!(items[j], ClusterItem::Branch { component: c, .. } if c == component))
                {
                    let same_rows = (0..items.len()).all(|k| k == i || k == j || contacts[i][k] == contacts[j][k]);
                    if items[j] != *it || !same_rows {
                        return Err(ClusterError::ConflictingBranch(component));
                    }
                    continue;
                }
            }
            keep.push(i);
        }
        let items = keep.iter().map(|&i| items[i]).collect();
        let contacts = keep.iter().map(|&i| keep.iter().map(|&j| contacts[i][j]).collect()).collect();
        Ok(Self { items, contacts })
    }

    /// Items pairwise transverse at the point.
    pub fn transverse(items: Vec<ClusterItem>) -> Self {
        let n = items.len();
        Self::new(items, vec![vec![1; n]; n]).expect("transverse data is consistent")
    }

    /// Two branches with the given contact order.
    pub fn pair(a: (usize, u32), b: (usize, u32), contact: u32) -> Result<Self, ClusterError> {
        let items = vec![
            ClusterItem::Branch { component: a.0, coefficient: a.1 },
            ClusterItem::Branch { component: b.0, coefficient: b.1 },
        ];
        Self::new(items, vec![vec![contact; 2]; 2])
    }

    pub fn items(&self) -> &[ClusterItem] {
        &self.items
    }

    pub fn contacts(&self) -> &[Vec<u32>] {
        &self.contacts
    }

    pub fn components(&self) -> impl Iterator<Item = usize> + '_ {
        self.items.iter().filter_map(|it| match *it {
            ClusterItem::Branch { component, .. } => Some(component),
            ClusterItem::Exceptional { .. } => None,
        })
    }

    /// Same geometry with every multiplicity multiplied by `k`.
    pub fn scaled(&self, k: u32) -> Self {
        let items = self
            .items
            .iter()
            .map(|it| match *it {
                ClusterItem::Branch { component, coefficient } => {
                    ClusterItem::Branch { component, coefficient: coefficient * k }
                }
                ClusterItem::Exceptional { multiplicity, log_discrepancy } => {
                    ClusterItem::Exceptional { multiplicity: multiplicity * k, log_discrepancy }
                }
            })
            .collect();
        Self { items, contacts: self.contacts.clone() }
    }

    /// Replaces branch coefficients through `coef(component)`.
    pub(crate) fn with_coefficients(&self, coef: impl Fn(usize) -> u32) -> Self {
        let items = self
            .items
            .iter()
            .map(|it| match *it {
                ClusterItem::Branch { component, .. } => ClusterItem::Branch { component, coefficient: coef(component) },
                e => e,
            })
            .collect();
        Self { items, contacts: self.contacts.clone() }
    }
}

/// The binding exceptional divisor found by [`local_lct`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalBound {
    #[serde(serialize_with = "crate::lct::ratio_str")]
    pub value: Rational,
    pub multiplicity: u32,
    pub log_discrepancy: u32,
    /// Direction group chosen at each blow-up; empty for an exceptional item of the input.
    pub trace: Vec<usize>,
}

fn consider(best: &mut Option<LocalBound>, cand: LocalBound) {
    if best.as_ref().is_none_or(|b| cand.value < b.value) {
        *best = Some(cand);
    }
}

fn blow_up(items: &[ClusterItem], contacts: &[Vec<u32>], trace: &mut Vec<usize>, best: &mut Option<LocalBound>) -> Result<(), ClusterError> {
    check_contacts(contacts)?;
    let m: u32 = items.iter().map(ClusterItem::multiplicity).sum();
    let ld: u32 = 2 + items.iter().map(ClusterItem::excess).sum::<u32>();
    consider(
        best,
        LocalBound { value: Rational::new(ld as i64, m as i64), multiplicity: m, log_discrepancy: ld, trace: trace.clone() },
    );
    let fresh = ClusterItem::Exceptional { multiplicity: m, log_discrepancy: ld };
    let n = items.len();
    let mut group = vec![usize::MAX; n];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if group[i] != usize::MAX {
            continue;
        }
        let g: Vec<usize> = (0..n).filter(|&j| j == i || contacts[i][j] >= 2).collect();
        for &j in &g {
            group[j] = groups.len();
        }
        groups.push(g);
    }
    for (gi, g) in groups.iter().enumerate() {
        if g.len() < 2 {
            continue;
        }
        let mut sub: Vec<ClusterItem> = g.iter().map(|&i| items[i]).collect();
        sub.push(fresh);
        let k = sub.len();
        let mut c = vec![vec![1u32; k]; k];
        for (a, &i) in g.iter().enumerate() {
            for (b, &j) in g.iter().enumerate() {
                if a != b {
                    c[a][b] = contacts[i][j] - 1;
                }
            }
        }
        trace.push(gi);
        blow_up(&sub, &c, trace, best)?;
        trace.pop();
    }
    Ok(())
}

/// Smallest ratio `log_discrepancy / multiplicity` over the exceptional items of the
/// cluster and every exceptional divisor of its resolution. The point itself is blown up
/// once, later points only while they are not normal crossings. `None` for an empty cluster.
/// Branch constraints `1/a` are not included.
pub fn local_lct(cluster: &Cluster) -> Result<Option<LocalBound>, ClusterError> {
    let mut best = None;
    for it in &cluster.items {
        if let ClusterItem::Exceptional { multiplicity, log_discrepancy } = *it {
            consider(
                &mut best,
                LocalBound {
                    value: Rational::new(log_discrepancy as i64, multiplicity as i64),
                    multiplicity,
                    log_discrepancy,
                    trace: Vec::new(),
                },
            );
        }
    }
    if !cluster.items.is_empty() {
        blow_up(&cluster.items, &cluster.contacts, &mut Vec::new(), &mut best)?;
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unibranch {
    Cusp,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unsupported singularity type {0}")]
pub struct UnsupportedSingularity(pub String);

impl FromStr for Unibranch {
    type Err = UnsupportedSingularity;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cusp" => Ok(Unibranch::Cusp),
            other => Err(UnsupportedSingularity(other.to_string())),
        }
    }
}

impl Unibranch {
    /// (multiplicity, log discrepancy) along the minimal log resolution.
    pub fn resolution(self) -> &'static [(u32, u32)] {
        match self {
            Unibranch::Cusp => &[(2, 2), (3, 3), (6, 5)],
        }
    }
}

/// Threshold of a reduced unibranch singular germ, by tag (`"cusp"`).
pub fn special_local_lct(tag: &str) -> Result<Rational, UnsupportedSingularity> {
    let kind: Unibranch = tag.parse()?;
    let min = kind
        .resolution()
        .iter()
        .map(|&(m, l)| Rational::new(l as i64, m as i64))
        .min()
        .expect("nonempty resolution");
    Ok(min.min(Rational::one()))
}

/// Threshold of `x^p = y^q`, namely `1/p + 1/q`.
pub fn newton_lct_oracle(p: u32, q: u32) -> Rational {
    Rational::new(1, p as i64) + Rational::new(1, q as i64)
}
