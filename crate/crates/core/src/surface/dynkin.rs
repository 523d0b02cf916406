//! ADE labels for configurations of −2-curves.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::piclattice::DivisorClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DynkinError {
    #[error("-2-curves {0} and {1} pair to {2}; expected 0 or 1")]
    BadPairing(usize, usize, i64),
    #[error("component {0:?} is not of ADE shape")]
    NotAde(Vec<usize>),
    #[error("cannot parse singularity label {0:?}")]
    Parse(String),
    #[error("no admissibility table for degree {0}")]
    Degree(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mark {
    Prime,
    DoublePrime,
}

impl Mark {
    fn suffix(self) -> &'static str {
        match self {
            Mark::Prime => "'",
            Mark::DoublePrime => "''",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub family: Family,
    pub rank: u32,
    /// Only used for `A5` on degree-2 surfaces.
    pub mark: Option<Mark>,
}

impl Component {
    pub fn new(family: Family, rank: u32) -> Self {
        Self { family, rank, mark: None }
    }

    fn is(&self, family: Family, rank: u32) -> bool {
        self.family == family && self.rank == rank
    }
}

/// Multiset of ADE components; `a1_mark` refines a group of three or four `A1`s.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularityType {
    components: Vec<Component>,
    a1_mark: Option<Mark>,
}

impl SingularityType {
    pub fn new(mut components: Vec<Component>, a1_mark: Option<Mark>) -> Self {
        components.sort();
        Self { components, a1_mark }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn a1_mark(&self) -> Option<Mark> {
        self.a1_mark
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn rank(&self) -> u32 {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn count(&self, family: Family, rank: u32) -> usize {
        self.components.iter().filter(|c| c.is(family, rank)).count()
    }

    pub fn has(&self, family: Family, rank: u32) -> bool {
        self.count(family, rank) > 0
    }

    pub fn is_refined(&self) -> bool {
        self.a1_mark.is_some() || self.components.iter().any(|c| c.mark.is_some())
    }

    /// Same components with every refinement mark dropped.
    pub fn unrefined(&self) -> Self {
        let comps = self.components.iter().map(|c| Component::new(c.family, c.rank)).collect();
        Self::new(comps, None)
    }

    /// Exact equality of the unmarked component multisets.
    pub fn same_shape(&self, other: &Self) -> bool {
        self.unrefined() == other.unrefined()
    }

    /// Multiset containment. A marked component in `pattern` needs the same mark here;
    /// an `a1_mark` in `pattern` needs the same group mark here.
    pub fn contains(&self, pattern: &Self) -> bool {
        if let Some(m) = pattern.a1_mark {
            if self.a1_mark != Some(m) {
                return false;
            }
        }
        let mut avail = self.components.clone();
        for want in &pattern.components {
            let pos = avail.iter().position(|c| {
                c.family == want.family && c.rank == want.rank && (want.mark.is_none() || c.mark == want.mark)
            });
            match pos {
                Some(i) => {
                    avail.remove(i);
                }
                None => return false,
            }
        }
        true
    }

    /// Compact form used in catalog ids: `A1A2`, `2A1A3`, `3A1D4`.
    pub fn id_fragment(&self) -> String {
        if self.is_empty() {
            return "smooth".to_string();
        }
        self.groups()
            .into_iter()
            .map(|(c, k)| {
                let base = format!("{:?}{}", c.family, c.rank);
                if k > 1 {
                    format!("{k}{base}")
                } else {
                    base
                }
            })
            .collect()
    }

    fn groups(&self) -> Vec<(Component, usize)> {
        let mut g: BTreeMap<Component, usize> = BTreeMap::new();
        for c in &self.components {
            *g.entry(*c).or_default() += 1;
        }
        g.into_iter().collect()
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "none");
        }
        let parts: Vec<String> = self
            .groups()
            .into_iter()
            .map(|(c, k)| {
                let mark = c.mark.map_or("", Mark::suffix);
                let base = format!("{:?}{}{}", c.family, c.rank, mark);
                match (c.is(Family::A, 1), self.a1_mark) {
                    (true, Some(m)) => format!("({k}{base}){}", m.suffix()),
                    _ if k > 1 => format!("{k}{base}"),
                    _ => base,
                }
            })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

fn split_mark(s: &str) -> (&str, Option<Mark>) {
    if let Some(rest) = s.strip_suffix("''") {
        (rest, Some(Mark::DoublePrime))
    } else if let Some(rest) = s.strip_suffix('\'') {
        (rest, Some(Mark::Prime))
    } else {
        (s, None)
    }
}

impl FromStr for SingularityType {
    type Err = DynkinError;

    /// Accepts labels such as `A1+A2`, `2A1`, `(3A1)'`, `A5''+A1`, `none`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DynkinError::Parse(s.to_string());
        let t = s.trim();
        if t.is_empty() || t == "none" {
            return Ok(Self::default());
        }
        let mut comps = Vec::new();
        let mut a1_mark = None;
        for term in t.split('+') {
            let term = term.trim();
            let (body, group_mark) = match term.strip_prefix('(') {
                Some(inner) => {
                    let (inner, m) = split_mark(inner);
                    let body = inner.strip_suffix(')').ok_or_else(bad)?;
                    (body, Some(m.ok_or_else(bad)?))
                }
                None => (term, None),
            };
            let (body, mark) = split_mark(body);
            let digits = body.chars().take_while(|c| c.is_ascii_digit()).count();
            let count: usize = if digits == 0 { 1 } else { body[..digits].parse().map_err(|_| bad())? };
            let rest = &body[digits..];
            let family = match rest.chars().next() {
                Some('A') => Family::A,
                Some('D') => Family::D,
                Some('E') => Family::E,
                _ => return Err(bad()),
            };
            let rank: u32 = rest[1..].parse().map_err(|_| bad())?;
            let valid = match family {
                Family::A => rank >= 1,
                Family::D => rank >= 4,
                Family::E => (6..=8).contains(&rank),
            };
            if !valid || count == 0 {
                return Err(bad());
            }
            if let Some(m) = group_mark {
                if family != Family::A || rank != 1 || mark.is_some() {
                    return Err(bad());
                }
                a1_mark = Some(m);
            }
            for _ in 0..count {
                comps.push(Component { family, rank, mark });
            }
        }
        Ok(Self::new(comps, a1_mark))
    }
}

impl Serialize for SingularityType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SingularityType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Connected components of a graph on `0..n`, each in ascending vertex order.
fn connected_components(adj: &[Vec<usize>], vertices: &[usize]) -> Vec<Vec<usize>> {
    let inside: Vec<bool> = {
        let mut v = vec![false; adj.len()];
        for &x in vertices {
            v[x] = true;
        }
        v
    };
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for &s in vertices {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = vec![s];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if inside[y] && !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                    stack.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A classified component: its ADE label and, for type A, the vertices in path order.
#[derive(Debug, Clone)]
pub(crate) struct Labelled {
    pub component: Component,
    pub vertices: Vec<usize>,
    pub path: Option<Vec<usize>>,
}

fn label_component(adj: &[Vec<usize>], comp: &[usize]) -> Option<Labelled> {
    let inside = |v: &usize| comp.binary_search(v).is_ok();
    let deg = |v: usize| adj[v].iter().filter(|w| inside(w)).count();
    let n = comp.len();
    let edges: usize = comp.iter().map(|&v| deg(v)).sum::<usize>() / 2;
    if edges + 1 != n {
        return None;
    }
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| deg(v) >= 3).collect();
    let walk = |start: usize, from: usize| -> Vec<usize> {
        let mut path = vec![start];
        let (mut prev, mut cur) = (from, start);
        while let Some(&next) = adj[cur].iter().find(|&&w| inside(&w) && w != prev) {
            path.push(next);
            prev = cur;
            cur = next;
        }
        path
    };
    let rank = n as u32;
    if branch.is_empty() {
        let start = comp.iter().copied().find(|&v| deg(v) <= 1)?;
        let path = walk(start, usize::MAX);
        return Some(Labelled { component: Component::new(Family::A, rank), vertices: comp.to_vec(), path: Some(path) });
    }
    if branch.len() != 1 || deg(branch[0]) != 3 {
        return None;
    }
    let b = branch[0];
    let mut arms: Vec<usize> = adj[b].iter().filter(|w| inside(w)).map(|&s| walk(s, b).len()).collect();
    arms.sort_unstable();
    let family = match arms.as_slice() {
        [1, 1, _] => Family::D,
        [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Family::E,
        _ => return None,
    };
    Some(Labelled { component: Component::new(family, rank), vertices: comp.to_vec(), path: None })
}

/// Classifies the graph whose vertices are `roots` and whose edges are pairings equal to 1.
pub(crate) fn classify_roots(roots: &[DivisorClass]) -> Result<Vec<Labelled>, DynkinError> {
    let n = roots.len();
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            match roots[i].dot(&roots[j]) {
                0 => {}
                1 => {
                    adj[i].push(j);
                    adj[j].push(i);
                }
                p => return Err(DynkinError::BadPairing(i, j, p)),
            }
        }
    }
    let all: Vec<usize> = (0..n).collect();
    connected_components(&adj, &all)
        .into_iter()
        .map(|c| label_component(&adj, &c).ok_or(DynkinError::NotAde(c)))
        .collect()
}

/// Unrefined type of a root configuration.
pub(crate) fn identify(roots: &[DivisorClass]) -> Result<SingularityType, DynkinError> {
    let comps = classify_roots(roots)?.into_iter().map(|l| l.component).collect();
    Ok(SingularityType::new(comps, None))
}

/// Degree-2 refinement: marks every `A5` by whether some −1-curve meets its middle
/// vertex, and a group of three or four `A1`s by whether some −1-curve meets three of them.
pub(crate) fn refine(roots: &[DivisorClass], minus_one: &[DivisorClass]) -> Result<SingularityType, DynkinError> {
    let labelled = classify_roots(roots)?;
    let meets = |e: &DivisorClass, v: usize| e.dot(&roots[v]) >= 1;
    let mut comps = Vec::new();
    let mut a1 = Vec::new();
    for l in &labelled {
        let mut c = l.component;
        if c.is(Family::A, 5) {
            let mid = l.path.as_ref().expect("type A has a path")[2];
            let prime = minus_one.iter().any(|e| meets(e, mid));
            c.mark = Some(if prime { Mark::Prime } else { Mark::DoublePrime });
        }
        if c.is(Family::A, 1) {
            a1.push(l.vertices[0]);
        }
        comps.push(c);
    }
    let a1_mark = if (3..=4).contains(&a1.len()) {
        let prime = minus_one.iter().any(|e| a1.iter().filter(|&&v| meets(e, v)).count() >= 3);
        Some(if prime { Mark::Prime } else { Mark::DoublePrime })
    } else {
        None
    };
    Ok(SingularityType::new(comps, a1_mark))
}

fn extended_diagram(degree: u32) -> Result<(usize, Vec<(usize, usize)>, bool), DynkinError> {
    // (vertex count, edges, whether only proper subgraphs count)
    Ok(match degree {
        7 => (1, vec![], false),
        6 => (3, vec![(1, 2)], false),
        5 => (5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], true),
        4 => (6, vec![(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)], true),
        3 => (7, vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6)], true),
        2 => (8, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)], true),
        d => return Err(DynkinError::Degree(d)),
    })
}

/// Every singularity type occurring on a del Pezzo surface of the given degree (2..=7),
/// unrefined, ordered by rank then label.
pub fn admissible_types(degree: u32) -> Result<Vec<SingularityType>, DynkinError> {
    let (n, edges, proper) = extended_diagram(degree)?;
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut out = std::collections::BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if proper && subset.len() == n {
            continue;
        }
        let comps = connected_components(&adj, &subset)
            .into_iter()
            .map(|c| label_component(&adj, &c).map(|l| l.component).ok_or(DynkinError::NotAde(c)))
            .collect::<Result<Vec<_>, _>>()?;
        out.insert(SingularityType::new(comps, None));
    }
    if degree == 2 {
        for extra in ["6A1", "D4+3A1"] {
            out.insert(extra.parse()?);
        }
    }
    let mut v: Vec<_> = out.into_iter().collect();
    v.sort_by_key(|t| (t.rank(), t.clone()));
    Ok(v)
}

pub fn is_admissible(degree: u32, t: &SingularityType) -> bool {
    if t.is_empty() {
        return false;
    }
    let marks_ok = if degree == 2 {
        let a1 = t.count(Family::A, 1);
        t.a1_mark.is_none() || (3..=4).contains(&a1)
    } else {
        !t.is_refined()
    };
    marks_ok
        && t.components.iter().all(|c| c.mark.is_none() || c.is(Family::A, 5))
        && admissible_types(degree).is_ok_and(|v| v.contains(&t.unrefined()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(s: &str) -> SingularityType {
        s.parse().unwrap()
    }

    fn chain(k: usize) -> Vec<DivisorClass> {
        // e1-e2, e2-e3, ...
        (0..k)
            .map(|i| {
                let mut m = vec![0; k + 1];
                m[i] = -1;
                m[i + 1] = 1;
                DivisorClass::new(0, m).unwrap()
            })
            .collect()
    }

    #[test]
    fn parse_and_display() {
        for s in ["A1", "A1+A2", "2A1", "(3A1)'", "(4A1)''", "A5'+A1", "3A1+D4", "E7", "none"] {
            let t = st(s);
            let back = st(&t.to_string());
            assert_eq!(t, back, "{s}");
        }
        assert_eq!(st("A2+A1").to_string(), "A1+A2");
        assert_eq!(st("A5'+A1").to_string(), "A1+A5'");
        assert_eq!(st("D4+3A1").to_string(), "3A1+D4");
        assert_eq!(st("(3A1)'").to_string(), "(3A1)'");
        assert!("B2".parse::<SingularityType>().is_err());
        assert!("D3".parse::<SingularityType>().is_err());
        assert!("(A2)'".parse::<SingularityType>().is_err());
    }

    #[test]
    fn containment() {
        assert!(st("A1+A3").contains(&st("A3")));
        assert!(!st("A1+A3").contains(&st("2A1")));
        assert!(st("A1+A5'").contains(&st("A5'")));
        assert!(!st("A1+A5''").contains(&st("A5'")));
        assert!(st("A1+A5''").contains(&st("A5")));
        assert!(st("(3A1)'+A2").contains(&st("(3A1)'")));
        assert!(!st("(3A1)''").contains(&st("(3A1)'")));
    }

    #[test]
    fn identify_shapes() {
        assert_eq!(identify(&chain(2)).unwrap(), st("A2"));
        assert_eq!(identify(&[]).unwrap(), st("none"));
        let c = |v: &[i64]| DivisorClass::try_from(v.to_vec()).unwrap();
        // L-e1-e2-e3 meeting e1-e4, e2-e5, e3-e6
        let d4 = [
            c(&[1, 1, 1, 1, 0, 0, 0]),
            c(&[0, -1, 0, 0, 1, 0, 0]),
            c(&[0, 0, -1, 0, 0, 1, 0]),
            c(&[0, 0, 0, -1, 0, 0, 1]),
        ];
        assert_eq!(identify(&d4).unwrap(), st("D4"));
        let a = [c(&[0, -1, 1]), c(&[0, 1, -1])];
        assert!(matches!(identify(&a), Err(DynkinError::BadPairing(0, 1, 2))));
    }

    #[test]
    fn admissible_lists() {
        let d = |k| admissible_types(k).unwrap();
        assert_eq!(d(7), vec![st("A1")]);
        assert_eq!(d(6).len(), 4);
        assert_eq!(d(5).len(), 6);
        assert_eq!(d(4).len(), 13);
        assert_eq!(d(3).len(), 20);
        assert!(d(2).contains(&st("E7")));
        assert!(d(2).contains(&st("6A1")));
        assert!(d(2).contains(&st("A2+3A1")));
        assert!(!d(2).contains(&st("7A1")));
        assert!(!d(2).contains(&st("A1+E6")));
        assert!(!d(3).contains(&st("D4+A1")));
        assert!(is_admissible(2, &st("(3A1)'")));
        assert!(!is_admissible(3, &st("(3A1)'")));
        assert!(!is_admissible(5, &st("A4+A1")));
    }
}
