//! Simple undirected graphs carrying one orientation per edge.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// A simple graph on `0..n` given by its arc set Δ: exactly one ordered pair
/// per edge, no loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    adj: Vec<Vec<usize>>,
    arc_index: HashMap<(usize, usize), usize>,
}

impl OrientedGraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<OrientedGraph> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        arcs.sort_unstable();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut adj = vec![Vec::new(); n];
        let mut arc_index = HashMap::with_capacity(arcs.len());
        for (i, &(u, v)) in arcs.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("arc ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if arc_index.contains_key(&(v, u)) || arc_index.insert((u, v), i).is_some() {
                return Err(Error::InvalidGraph(format!("edge {{{u},{v}}} listed twice")));
            }
            out[u].push(v);
            inn[v].push(u);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()).chain(adj.iter_mut()) {
            list.sort_unstable();
        }
        Ok(OrientedGraph { n, arcs, out, inn, adj, arc_index })
    }

    /// Directed cycle `0 → 1 → … → n-1 → 0`.
    pub fn oriented_cycle(n: usize) -> Result<OrientedGraph> {
        if n < 3 {
            return Err(Error::BadParam(format!("cycle length {n} < 3")));
        }
        OrientedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// Orients each undirected edge from its lower to its higher endpoint.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<OrientedGraph> {
        OrientedGraph::new(n, edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn edge_count(&self) -> usize {
        self.arcs.len()
    }

    /// Unordered edges as `(min, max)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.arcs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arc_index.contains_key(&(u, v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn arc_index(&self, u: usize, v: usize) -> Option<usize> {
        self.arc_index.get(&(u, v)).copied()
    }

    /// Same edges, every orientation flipped.
    pub fn reversed(&self) -> OrientedGraph {
        OrientedGraph::new(self.n, self.arcs.iter().map(|&(u, v)| (v, u))).expect("reversal keeps validity")
    }

    pub fn same_edges(&self, other: &OrientedGraph) -> bool {
        self.n == other.n && self.edges() == other.edges()
    }

    pub fn is_automorphism(&self, g: &Perm) -> bool {
        g.degree() == self.n && self.arcs.iter().all(|&(u, v)| self.has_edge(g.image(u), g.image(v)))
    }

    pub fn preserves_orientation(&self, g: &Perm) -> bool {
        g.degree() == self.n && self.arcs.iter().all(|&(u, v)| self.has_arc(g.image(u), g.image(v)))
    }

    pub fn validate_quartic(&self) -> QuarticReport {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let minmax = |it: &mut dyn Iterator<Item = usize>| {
            it.fold((usize::MAX, 0), |(lo, hi), d| (lo.min(d), hi.max(d)))
        };
        let (min_degree, max_degree) = minmax(&mut degrees.iter().copied());
        let (min_out, max_out) = minmax(&mut (0..self.n).map(|v| self.out[v].len()));
        let (min_in, max_in) = minmax(&mut (0..self.n).map(|v| self.inn[v].len()));
        let mut failures = Vec::new();
        for (v, &d) in degrees.iter().enumerate() {
            if d != 4 {
                failures.push(format!("vertex {v} has valency {d}"));
            }
        }
        QuarticReport {
            vertices: self.n,
            edges: self.edge_count(),
            simple: true,
            quartic: self.n > 0 && failures.is_empty(),
            min_degree: if self.n == 0 { 0 } else { min_degree },
            max_degree,
            min_out: if self.n == 0 { 0 } else { min_out },
            max_out,
            min_in: if self.n == 0 { 0 } else { min_in },
            max_in,
            failures,
        }
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// A proper 2-colouring with vertex 0 of each component coloured 0, or
    /// `None` if there is an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut colour = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &w in &self.adj[v] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        q.push_back(w);
                    } else if colour[w] == colour[v] {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Induced subgraph with inherited orientation. Vertices are renumbered in
    /// ascending order of their original index; the returned map sends new
    /// indices to old ones.
    pub fn induced(&self, vertices: &[usize]) -> Result<(OrientedGraph, Vec<usize>)> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() || keep.iter().any(|&v| v >= self.n) {
            return Err(Error::InvalidGraph("induced subgraph needs a nonempty set of valid vertices".into()));
        }
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| new_index[u] != usize::MAX && new_index[v] != usize::MAX)
            .map(|&(u, v)| (new_index[u], new_index[v]));
        Ok((OrientedGraph::new(keep.len(), arcs)?, keep))
    }

    /// Vertex `x_δ` is encoded as `2x + δ`; `{x_δ, y_δ'}` is an edge iff
    /// `δ ≠ δ'` and `{x, y}` is an edge. Arcs are lifted as
    /// `x_δ → y_{δ+1}` for each arc `x → y`.
    pub fn standard_double_cover(&self) -> OrientedGraph {
        let arcs = self.arcs.iter().flat_map(|&(u, v)| [(2 * u, 2 * v + 1), (2 * u + 1, 2 * v)]);
        OrientedGraph::new(2 * self.n, arcs).expect("double cover of a simple graph is simple")
    }

    /// All-pairs BFS distances; `u32::MAX` marks unreachable pairs.
    pub fn distances(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|s| {
                let mut d = vec![u32::MAX; self.n];
                d[s] = 0;
                let mut q = VecDeque::from([s]);
                while let Some(v) = q.pop_front() {
                    for &w in &self.adj[v] {
                        if d[w] == u32::MAX {
                            d[w] = d[v] + 1;
                            q.push_back(w);
                        }
                    }
                }
                d
            })
            .collect()
    }

    /// DOT text: undirected edges drawn with `--` and the orientation carried
    /// by `dir=forward`. Vertices and edges appear in ascending order.
    pub fn to_dot(&self, name: &str, labels: Option<&[String]>) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"{}\" {{", name.replace('"', "\\\""));
        for v in 0..self.n {
            match labels.and_then(|l| l.get(v)) {
                Some(label) => {
                    let _ = writeln!(s, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
                }
                None => {
                    let _ = writeln!(s, "  {v};");
                }
            }
        }
        for &(u, v) in &self.arcs {
            let _ = writeln!(s, "  {u} -- {v} [dir=forward];");
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuarticReport {
    pub vertices: usize,
    pub edges: usize,
    pub simple: bool,
    pub quartic: bool,
    pub min_degree: usize,
    pub max_degree: usize,
    pub min_out: usize,
    pub max_out: usize,
    pub min_in: usize,
    pub max_in: usize,
    pub failures: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_doubled_edges() {
        assert!(OrientedGraph::new(3, [(0, 0)]).is_err());
        assert!(OrientedGraph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(OrientedGraph::new(3, [(0, 1), (0, 1)]).is_err());
        assert!(OrientedGraph::new(3, [(0, 5)]).is_err());
    }

    #[test]
    fn oriented_five_cycle_fails_quartic_check() {
        let c5 = OrientedGraph::oriented_cycle(5).unwrap();
        let r = c5.validate_quartic();
        assert!(!r.quartic);
        assert_eq!((r.min_degree, r.max_degree), (2, 2));
        assert_eq!((r.min_out, r.max_out, r.min_in, r.max_in), (1, 1, 1, 1));
        assert_eq!(r.failures.len(), 5);
    }

    #[test]
    fn double_cover_of_k2_is_two_edges() {
        let k2 = OrientedGraph::new(2, [(0, 1)]).unwrap();
        let cover = k2.standard_double_cover();
        assert_eq!(cover.n(), 4);
        assert_eq!(cover.edges(), vec![(0, 3), (1, 2)]);
        assert_eq!(cover.components().len(), 2);
    }

    #[test]
    fn double_cover_of_triangle_is_hexagon() {
        // Oracle: a connected 2-regular graph on six vertices is C6.
        let c3 = OrientedGraph::oriented_cycle(3).unwrap();
        let cover = c3.standard_double_cover();
        assert_eq!(cover.n(), 6);
        assert!(cover.is_connected());
        assert!((0..6).all(|v| cover.degree(v) == 2));
        assert!(cover.is_bipartite());
        // Walk it: 0=0_0 -> 3=1_1 -> 4=2_0 -> 1=0_1 -> 2=1_0 -> 5=2_1 -> 0
        for (u, v) in [(0, 3), (3, 4), (4, 1), (1, 2), (2, 5), (5, 0)] {
            assert!(cover.has_edge(u, v));
        }
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let c5 = OrientedGraph::oriented_cycle(5).unwrap();
        let (sub, map) = c5.induced(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(sub, c5);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);
        let (one, _) = c5.induced(&[2]).unwrap();
        assert_eq!((one.n(), one.edge_count()), (1, 0));
    }

    #[test]
    fn dot_is_deterministic() {
        let g = OrientedGraph::new(3, [(2, 0), (0, 1)]).unwrap();
        assert_eq!(g.to_dot("t", None), "graph \"t\" {\n  0;\n  1;\n  2;\n  0 -- 1 [dir=forward];\n  2 -- 0 [dir=forward];\n}\n");
    }
}
