//! Weighted dual graphs of configurations, canonical forms and isomorphism.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::config::DivisorConfig;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Vertex {
    pub name: String,
    /// Multiplicity of the component.
    pub weight: u32,
    pub self_int: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    /// Intersection number; a loop `u == v` records one node per unit.
    pub intersection: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl DualGraph {
    /// Builds a graph from `(weight, self_int)` pairs and simple edges.
    pub fn from_parts(vertices: &[(u32, i64)], edges: &[(usize, usize)]) -> Self {
        Self {
            vertices: vertices
                .iter()
                .enumerate()
                .map(|(i, &(weight, self_int))| Vertex { name: format!("v{i}"), weight, self_int })
                .collect(),
            edges: edges.iter().map(|&(u, v)| Edge { u, v, intersection: 1 }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn max_weight(&self) -> u32 {
        self.vertices.iter().map(|v| v.weight).max().unwrap_or(0)
    }

    /// Symmetric intersection matrix off the diagonal; the diagonal counts nodes.
    pub fn matrix(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut m = vec![vec![0u32; n]; n];
        for e in &self.edges {
            if e.u == e.v {
                m[e.u][e.u] += e.intersection;
            } else {
                m[e.u][e.v] += e.intersection;
                m[e.v][e.u] += e.intersection;
            }
        }
        m
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let m = self.matrix();
        (0..self.len()).filter(|&w| w != v && m[v][w] > 0).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn is_tree(&self) -> bool {
        let m = self.matrix();
        let n = self.len();
        let mut edges = 0usize;
        for i in 0..n {
            if m[i][i] > 0 {
                return false;
            }
            for j in i + 1..n {
                match m[i][j] {
                    0 => {}
                    1 => edges += 1,
                    _ => return false,
                }
            }
        }
        n == 0 || (edges + 1 == n && self.is_connected())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return true;
        }
        let m = self.matrix();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if m[u][v] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Sum of `weight * (self_int + 2)` over vertices; equals the degree for the graph of an
    /// anticanonical divisor whose components are smooth rational curves.
    pub fn anticanonical_total(&self) -> i64 {
        self.vertices.iter().map(|v| v.weight as i64 * (v.self_int + 2)).sum()
    }

    /// Copy with vertex `v` removed and the rest renumbered.
    pub(crate) fn without(&self, v: usize) -> Self {
        let map = |i: usize| if i > v { i - 1 } else { i };
        Self {
            vertices: self.vertices.iter().enumerate().filter(|(i, _)| *i != v).map(|(_, x)| x.clone()).collect(),
            edges: self
                .edges
                .iter()
                .filter(|e| e.u != v && e.v != v)
                .map(|e| Edge { u: map(e.u), v: map(e.v), intersection: e.intersection })
                .collect(),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  {i} [label=\"{} w={} s={}\"];", v.name, v.weight, v.self_int);
        }
        for e in &self.edges {
            if e.intersection == 1 {
                let _ = writeln!(s, "  {} -- {};", e.u, e.v);
            } else {
                let _ = writeln!(s, "  {} -- {} [label=\"{}\"];", e.u, e.v, e.intersection);
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Vertices are the components with positive coefficient; edges their positive pairings.
pub fn dual_graph(config: &DivisorConfig<'_>) -> DualGraph {
    let comps = config.components();
    let vertices =
        comps.iter().map(|c| Vertex { name: c.name.clone(), weight: c.coefficient, self_int: c.self_int }).collect();
    let mut edges = Vec::new();
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            let p = comps[i].class.dot(&comps[j].class);
            if p > 0 {
                edges.push(Edge { u: i, v: j, intersection: p as u32 });
            }
        }
    }
    DualGraph { vertices, edges }
}

/// Isomorphism invariant of a dual graph (names ignored).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalGraph {
    /// `(weight, self_int, nodes)` per vertex in canonical order.
    pub vertices: Vec<(u32, i64, u32)>,
    /// Upper-triangle intersection numbers in canonical order.
    pub adjacency: Vec<u32>,
}

/// Colour refinement: returns a colour per vertex, invariant under relabelling.
fn refine_colours(g: &DualGraph, m: &[Vec<u32>]) -> Vec<usize> {
    let n = g.len();
    let rank = |sigs: &[Vec<i64>]| -> Vec<usize> {
        let mut sorted: Vec<&Vec<i64>> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        sigs.iter().map(|s| sorted.binary_search(&s).expect("present")).collect()
    };
    let init: Vec<Vec<i64>> =
        (0..n).map(|i| vec![g.vertices[i].weight as i64, g.vertices[i].self_int, m[i][i] as i64]).collect();
    let mut colour = rank(&init);
    loop {
        let sigs: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut nb: Vec<(usize, u32)> = (0..n).filter(|&j| j != i && m[i][j] > 0).map(|j| (colour[j], m[i][j])).collect();
                nb.sort();
                let mut s = vec![colour[i] as i64];
                for (c, k) in nb {
                    s.push(c as i64);
                    s.push(k as i64);
                }
                s
            })
            .collect();
        let next = rank(&sigs);
        let classes = |c: &[usize]| c.iter().collect::<std::collections::BTreeSet<_>>().len();
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn encode(g: &DualGraph, m: &[Vec<u32>], order: &[usize]) -> CanonicalGraph {
    let vertices = order.iter().map(|&i| (g.vertices[i].weight, g.vertices[i].self_int, m[i][i])).collect();
    let mut adjacency = Vec::new();
    for a in 0..order.len() {
        for b in a + 1..order.len() {
            adjacency.push(m[order[a]][order[b]]);
        }
    }
    CanonicalGraph { vertices, adjacency }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Smallest encoding over all orderings that list colour classes in colour order,
/// trying every permutation inside each class.
pub fn graph_canonical(g: &DualGraph) -> CanonicalGraph {
    let m = g.matrix();
    let colour = refine_colours(g, &m);
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colour.iter().enumerate() {
        classes.entry(c).or_default().push(v);
    }
    let perms: Vec<Vec<Vec<usize>>> = classes.values().map(|c| permutations(c)).collect();
    let mut idx = vec![0usize; perms.len()];
    let mut best: Option<CanonicalGraph> = None;
    loop {
        let order: Vec<usize> = perms.iter().zip(&idx).flat_map(|(p, &i)| p[i].iter().copied()).collect();
        let enc = encode(g, &m, &order);
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
        let mut k = 0;
        loop {
            if k == perms.len() {
                return best.unwrap_or(CanonicalGraph { vertices: vec![], adjacency: vec![] });
            }
            idx[k] += 1;
            if idx[k] < perms[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

pub fn graph_iso(g: &DualGraph, h: &DualGraph) -> bool {
    g.len() == h.len() && graph_canonical(g) == graph_canonical(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e7() -> DualGraph {
        DualGraph::from_parts(
            &[(2, -2), (4, -2), (6, -2), (5, -2), (4, -2), (3, -2), (2, -1), (3, -2)],
            &[(0, 1), (1, 2), (2, 3), (2, 7), (3, 4), (4, 5), (5, 6)],
        )
    }

    fn relabel(g: &DualGraph, perm: &[usize]) -> DualGraph {
        // perm[old] = new
        let mut vertices = g.vertices.clone();
        for (old, &new) in perm.iter().enumerate() {
            vertices[new] = g.vertices[old].clone();
        }
        let edges = g.edges.iter().map(|e| Edge { u: perm[e.u], v: perm[e.v], intersection: e.intersection }).collect();
        DualGraph { vertices, edges }
    }

    #[test]
    fn relabelled_e7_is_isomorphic() {
        let g = e7();
        let h = relabel(&g, &[7, 6, 5, 4, 3, 2, 1, 0]);
        assert!(graph_iso(&g, &h));
    }

    #[test]
    fn transposed_weights_differ() {
        let a = DualGraph::from_parts(&[(2, -2), (4, -1), (3, -1)], &[(0, 1), (1, 2)]);
        let b = DualGraph::from_parts(&[(2, -2), (3, -1), (4, -1)], &[(0, 1), (1, 2)]);
        assert!(!graph_iso(&a, &b));
    }

    #[test]
    fn symmetric_star_canonical() {
        let a = DualGraph::from_parts(&[(2, -2), (1, -2), (1, -2), (1, -2)], &[(0, 1), (0, 2), (0, 3)]);
        let b = DualGraph::from_parts(&[(1, -2), (1, -2), (2, -2), (1, -2)], &[(2, 0), (2, 1), (2, 3)]);
        assert!(graph_iso(&a, &b));
    }

    #[test]
    fn dot_labels() {
        let g = DualGraph::from_parts(&[(2, -2), (4, -1)], &[(0, 1)]);
        let dot = g.to_dot();
        assert!(dot.contains("v0 w=2 s=-2"));
        assert!(dot.contains("0 -- 1;"));
    }

    #[test]
    fn tree_and_total() {
        let g = e7();
        assert!(g.is_tree());
        assert_eq!(g.anticanonical_total(), 2);
    }

    fn graph_and_perm() -> impl Strategy<Value = (DualGraph, Vec<usize>)> {
        (prop::collection::vec((1u32..4, -2i64..1), 2..8), prop::collection::vec(any::<bool>(), 28)).prop_flat_map(
            |(weights, bits)| {
                let n = weights.len();
                let edges: Vec<(usize, usize)> =
                    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).zip(&bits).filter(|(_, b)| **b).map(|(e, _)| e).collect();
                let g = DualGraph::from_parts(&weights, &edges);
                (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            },
        )
    }

    proptest! {
        #[test]
        fn canonical_form_is_relabelling_invariant((g, perm) in graph_and_perm()) {
            prop_assert_eq!(graph_canonical(&g), graph_canonical(&relabel(&g, &perm)));
        }
    }
}
