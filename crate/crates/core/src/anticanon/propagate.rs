//! Dual graphs of anticanonical divisors degree by degree: the two blow-down rules applied
//! to the degree-1 tables, followed by the exclusion rules of each weight stratum.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use super::classification::{RULE_SEEDS, ROWS};
use super::graph::{graph_canonical, CanonicalGraph, DualGraph};

/// Strata are named by the largest multiplicity occurring in the divisor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Stratum {
    Six,
    Four,
    Three,
    Two,
}

impl Stratum {
    pub const ALL: [Stratum; 4] = [Stratum::Six, Stratum::Four, Stratum::Three, Stratum::Two];

    pub fn weight(self) -> u32 {
        match self {
            Stratum::Six => 6,
            Stratum::Four => 4,
            Stratum::Three => 3,
            Stratum::Two => 2,
        }
    }

    pub fn from_weight(w: u32) -> Result<Self, PropagationError> {
        match w {
            6 => Ok(Stratum::Six),
            4 => Ok(Stratum::Four),
            3 => Ok(Stratum::Three),
            2 => Ok(Stratum::Two),
            other => Err(PropagationError::UnknownStratum(other.to_string())),
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.weight())
    }
}

impl FromStr for Stratum {
    type Err = PropagationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .parse::<u32>()
            .map_err(|_| PropagationError::UnknownStratum(s.to_string()))
            .and_then(Stratum::from_weight)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropagationError {
    #[error("unknown stratum {0}; expected 6, 4, 3 or 2")]
    UnknownStratum(String),
}

/// Raises the self-intersection of one multiplicity-1 vertex.
pub fn p1_step(g: &DualGraph) -> Vec<DualGraph> {
    let mut out = Vec::new();
    for (i, v) in g.vertices.iter().enumerate() {
        if v.weight == 1 && v.self_int >= -2 && v.self_int < 2 {
            let mut h = g.clone();
            h.vertices[i].self_int += 1;
            out.push(h);
        }
    }
    out
}

/// Contracts a −1 leaf `w` of weight `b` attached to a vertex of weight `b + 1`.
pub fn p2_step(g: &DualGraph) -> Vec<DualGraph> {
    let m = g.matrix();
    let mut out = Vec::new();
    for (w, x) in g.vertices.iter().enumerate() {
        if x.self_int != -1 || m[w][w] > 0 {
            continue;
        }
        let nb = g.neighbors(w);
        if nb.len() != 1 || m[w][nb[0]] != 1 {
            continue;
        }
        let v = nb[0];
        if g.vertices[v].weight == x.weight + 1 {
            let mut h = g.clone();
            h.vertices[v].self_int += 1;
            out.push(h.without(w));
        }
    }
    out
}

fn step(g: &DualGraph) -> Vec<DualGraph> {
    let mut v = p1_step(g);
    v.extend(p2_step(g));
    v
}

type GraphSet = BTreeMap<CanonicalGraph, DualGraph>;

fn insert(set: &mut GraphSet, g: DualGraph) -> bool {
    let key = graph_canonical(&g);
    if set.contains_key(&key) {
        return false;
    }
    set.insert(key, g);
    true
}

/// Whether `seed` (living in degree `seed_degree`) is reached from `g` (degree `degree`)
/// by unfiltered rule applications.
fn reaches(g: &DualGraph, degree: u32, seed: &DualGraph, seed_degree: u32) -> bool {
    if degree > seed_degree {
        return false;
    }
    let target = graph_canonical(seed);
    let mut level: GraphSet = BTreeMap::new();
    insert(&mut level, g.clone());
    for _ in degree..seed_degree {
        let mut next = BTreeMap::new();
        for h in level.values() {
            for k in step(h) {
                insert(&mut next, k);
            }
        }
        level = next;
    }
    level.contains_key(&target)
}

fn rule_seeds(key: &str) -> Vec<DualGraph> {
    RULE_SEEDS.iter().filter(|l| l.key == key).map(|l| DualGraph::from_parts(l.vertices, l.edges)).collect()
}

fn reaches_any(g: &DualGraph, degree: u32, key: &str) -> bool {
    rule_seeds(key).iter().any(|s| reaches(g, degree, s, s.anticanonical_total() as u32))
}

/// Longest simple path through vertices satisfying `keep`.
fn longest_path(g: &DualGraph, keep: impl Fn(u32, i64) -> bool) -> usize {
    let m = g.matrix();
    let nodes: Vec<usize> = (0..g.len()).filter(|&i| keep(g.vertices[i].weight, g.vertices[i].self_int)).collect();
    fn dfs(u: usize, nodes: &[usize], m: &[Vec<u32>], seen: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(seen.len());
        for &v in nodes {
            if m[u][v] > 0 && v != u && !seen.contains(&v) {
                seen.push(v);
                dfs(v, nodes, m, seen, best);
                seen.pop();
            }
        }
    }
    let mut best = 0;
    for &u in &nodes {
        dfs(u, &nodes, &m, &mut vec![u], &mut best);
    }
    best
}

/// The graph that no divisor realises at degree 4 in the weight-2 stratum.
pub fn excluded_graph() -> DualGraph {
    rule_seeds("excluded").remove(0)
}

fn keep(stratum: Stratum, g: &DualGraph, degree: u32) -> bool {
    let s: Vec<i64> = g.vertices.iter().map(|v| v.self_int).collect();
    let roots = s.iter().filter(|&&x| x == -2).count();
    if roots == 0 || roots > (9 - degree) as usize {
        return false;
    }
    let count = |k: i64| s.iter().filter(|&&x| x == k).count();
    match stratum {
        Stratum::Six => true,
        Stratum::Four => {
            let nonneg: Vec<i64> = s.iter().copied().filter(|&x| x >= 0).collect();
            nonneg.len() <= 1 && nonneg.iter().all(|&x| x == 0)
        }
        Stratum::Three => count(0) < 2 && (count(1) == 0 || reaches_any(g, degree, "one-curve")),
        Stratum::Two => {
            let v = &g.vertices;
            for (i, x) in v.iter().enumerate() {
                if x.self_int >= 1 && v.iter().enumerate().any(|(j, y)| j != i && y.weight == 1 && y.self_int >= 0) {
                    return false;
                }
            }
            if longest_path(g, |w, s| w == 2 && s < 0) >= 4 && !reaches_any(g, degree, "long-chain") {
                return false;
            }
            let top = s.iter().copied().max().unwrap_or(-2);
            let tops: Vec<&super::graph::Vertex> = v.iter().filter(|x| x.self_int == top).collect();
            let seeds = rule_seeds("reduced-top");
            for (k, seed, chain) in [(0, &seeds[0], 3), (1, &seeds[1], 2)] {
                if top == k
                    && tops.len() == 1
                    && tops[0].weight == 1
                    && longest_path(g, |w, _| w == 2) >= chain
                    && !reaches(g, degree, seed, seed.anticanonical_total() as u32)
                {
                    return false;
                }
            }
            let reduced_zero = v.iter().filter(|x| x.self_int == 0 && x.weight == 1).count();
            if ((top == 0 && (2..=3).contains(&reduced_zero)) || (top == 2 && count(2) == 1))
                && !reaches_any(g, degree, "reduced-zero")
            {
                return false;
            }
            let double_zero_leaf = (0..v.len()).any(|i| v[i].self_int == 0 && v[i].weight == 2 && g.degree(i) == 1);
            if top == 0 && double_zero_leaf && !reaches_any(g, degree, "double-zero") {
                return false;
            }
            !(degree == 4 && graph_canonical(g) == graph_canonical(&excluded_graph()))
        }
    }
}

/// Degree-by-degree candidate dual graphs of one stratum.
#[derive(Debug, Clone)]
pub struct PropagationTables {
    pub stratum: Stratum,
    by_degree: BTreeMap<u32, GraphSet>,
}

impl PropagationTables {
    pub fn degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.by_degree.keys().copied()
    }

    pub fn graphs(&self, degree: u32) -> Vec<&DualGraph> {
        self.by_degree.get(&degree).map(|s| s.values().collect()).unwrap_or_default()
    }

    pub fn contains(&self, degree: u32, g: &DualGraph) -> bool {
        self.by_degree.get(&degree).is_some_and(|s| s.contains_key(&graph_canonical(g)))
    }
}

/// Iterates the rules from the degree-1 seeds up to degree 7, keeping graphs of the
/// stratum's top weight and dropping those excluded by its lemmas.
pub fn propagate_tables(seeds: &[DualGraph], stratum: Stratum) -> PropagationTables {
    let mut by_degree = BTreeMap::new();
    let mut cur: GraphSet = BTreeMap::new();
    for s in seeds {
        insert(&mut cur, s.clone());
    }
    by_degree.insert(1, cur.clone());
    for degree in 2..=7 {
        let mut next = BTreeMap::new();
        for g in cur.values() {
            for h in step(g) {
                if h.max_weight() == stratum.weight() && keep(stratum, &h, degree) {
                    insert(&mut next, h);
                }
            }
        }
        by_degree.insert(degree, next.clone());
        cur = next;
    }
    PropagationTables { stratum, by_degree }
}

/// A classification row.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub stratum: Stratum,
    pub degree: u32,
    pub label: &'static str,
    /// Rows flagged as realised by the relevant surfaces.
    pub marked: bool,
    pub graph: DualGraph,
}

pub fn table_rows(stratum: Stratum) -> Vec<TableRow> {
    ROWS.iter()
        .filter(|r| r.stratum == stratum.weight())
        .map(|r| TableRow {
            stratum,
            degree: r.degree,
            label: r.label,
            marked: r.marked,
            graph: DualGraph::from_parts(r.vertices, r.edges),
        })
        .collect()
}

pub fn degree_one_seeds(stratum: Stratum) -> Vec<DualGraph> {
    table_rows(stratum).into_iter().filter(|r| r.degree == 1).map(|r| r.graph).collect()
}

/// Tables generated from the built-in seeds, computed once per stratum.
pub fn builtin_tables(stratum: Stratum) -> &'static PropagationTables {
    static CACHE: [OnceLock<PropagationTables>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = Stratum::ALL.iter().position(|&s| s == stratum).expect("listed");
    CACHE[slot].get_or_init(|| propagate_tables(&degree_one_seeds(stratum), stratum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anticanon::graph::graph_iso;
    use proptest::prelude::*;

    #[test]
    fn e8_gives_e7() {
        let t = builtin_tables(Stratum::Six);
        let e7 = table_rows(Stratum::Six).into_iter().find(|r| r.degree == 2).unwrap().graph;
        let got = t.graphs(2);
        assert_eq!(got.len(), 1);
        assert!(graph_iso(got[0], &e7));
    }

    #[test]
    fn a4_contracts_to_a2_a1() {
        let a4 = DualGraph::from_parts(&[(2, -2), (4, -2), (6, -2), (5, -1), (3, -2)], &[(0, 1), (1, 2), (2, 3), (2, 4)]);
        let out = p2_step(&a4);
        let want = DualGraph::from_parts(&[(6, -1), (3, -2), (2, -2), (4, -2)], &[(0, 1), (0, 3), (2, 3)]);
        assert!(out.iter().any(|g| graph_iso(g, &want)));
        for g in &out {
            assert_eq!(g.anticanonical_total(), a4.anticanonical_total() + 1);
        }
    }

    #[test]
    fn rules_need_their_vertices() {
        let g = DualGraph::from_parts(&[(2, -2), (2, -2)], &[(0, 1)]);
        assert!(p1_step(&g).is_empty());
        assert!(p2_step(&g).is_empty());
    }

    #[test]
    fn weight_four_has_no_positive_curves() {
        let t = builtin_tables(Stratum::Four);
        for d in 2..=7 {
            for g in t.graphs(d) {
                assert!(g.vertices.iter().all(|v| v.self_int <= 0));
            }
        }
    }

    #[test]
    fn excluded_graph_absent() {
        assert!(!builtin_tables(Stratum::Two).contains(4, &excluded_graph()));
    }

    #[test]
    fn marked_rows_contained() {
        for s in Stratum::ALL {
            let t = builtin_tables(s);
            for r in table_rows(s).into_iter().filter(|r| r.marked && r.degree >= 2) {
                assert!(t.contains(r.degree, &r.graph), "stratum {s} degree {} {}", r.degree, r.label);
            }
        }
    }

    #[test]
    fn stratum_parse() {
        assert_eq!("4".parse::<Stratum>().unwrap(), Stratum::Four);
        assert!("5".parse::<Stratum>().is_err());
    }

    proptest! {
        #[test]
        fn every_step_adds_one_to_the_total(
            weights in prop::collection::vec((1u32..7, -2i64..3), 1..7),
            bits in prop::collection::vec(any::<bool>(), 21),
        ) {
            let n = weights.len();
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).zip(&bits).filter(|(_, b)| **b).map(|(e, _)| e).collect();
            let g = DualGraph::from_parts(&weights, &edges);
            for h in p1_step(&g).iter().chain(&p2_step(&g)) {
                prop_assert_eq!(h.anticanonical_total(), g.anticanonical_total() + 1);
            }
        }
    }

    #[test]
    fn table_graphs_total_their_degree() {
        for s in Stratum::ALL {
            let t = builtin_tables(s);
            for d in t.degrees() {
                for g in t.graphs(d) {
                    assert_eq!(g.anticanonical_total(), d as i64);
                }
            }
        }
    }
}
