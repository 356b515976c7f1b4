//! Graph–group pairs `(Γ, G)` with a distinguished arc set Δ.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::group::PermGroup;
use crate::perm::Perm;

#[derive(Debug, Clone)]
pub struct OrientedPair {
    graph: OrientedGraph,
    group: PermGroup,
}

impl OrientedPair {
    /// Requires every generator to be a graph automorphism. Preservation of
    /// Δ is not required here; [`check_og4`] reports it.
    pub fn new(graph: OrientedGraph, group: PermGroup) -> Result<OrientedPair> {
        if group.degree() != graph.n() {
            return Err(Error::DegreeMismatch { expected: graph.n(), found: group.degree() });
        }
        if let Some(g) = group.generators().iter().find(|g| !graph.is_automorphism(g)) {
            return Err(Error::NotAutomorphism(format!("generator {g} does not preserve the edge set")));
        }
        Ok(OrientedPair { graph, group })
    }

    pub fn graph(&self) -> &OrientedGraph {
        &self.graph
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn delta(&self) -> &[(usize, usize)] {
        self.graph.arcs()
    }

    pub fn with_reversed_delta(&self) -> OrientedPair {
        OrientedPair { graph: self.graph.reversed(), group: self.group.clone() }
    }

    /// Replaces Δ by [`canonical_delta`] of the underlying graph and group.
    pub fn with_canonical_delta(graph: &OrientedGraph, group: PermGroup) -> Result<OrientedPair> {
        let delta = canonical_delta(graph, &group)?;
        OrientedPair::new(OrientedGraph::new(graph.n(), delta)?, group)
    }

    pub fn with_group(&self, group: PermGroup) -> Result<OrientedPair> {
        OrientedPair::new(self.graph.clone(), group)
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        self.graph.out_neighbours(v)
    }

    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        self.graph.in_neighbours(v)
    }
}

/// `(out-neighbours, in-neighbours)` of `v` with respect to Δ.
pub fn in_out_neighbours(pair: &OrientedPair, v: usize) -> (Vec<usize>, Vec<usize>) {
    (pair.out_neighbours(v).to_vec(), pair.in_neighbours(v).to_vec())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Og4Report {
    pub connected: bool,
    pub quartic: bool,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub delta_is_single_orbit: bool,
    pub orientation_preserved: bool,
    pub arc_transitive: bool,
    pub arc_orbits: usize,
    pub group_order: usize,
    pub stabilizer_order: usize,
}

impl Og4Report {
    pub fn member(&self) -> bool {
        self.connected
            && self.quartic
            && self.vertex_transitive
            && self.edge_transitive
            && self.delta_is_single_orbit
            && self.orientation_preserved
            && !self.arc_transitive
    }

    /// G is vertex- and edge-transitive but not arc-transitive, regardless of
    /// connectivity or of which arc set is marked.
    pub fn half_transitive(&self) -> bool {
        self.vertex_transitive && self.edge_transitive && !self.arc_transitive
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
    fn classes(&mut self) -> Vec<usize> {
        (0..self.0.len()).map(|x| self.find(x)).collect()
    }
}

/// Orbit labels on all `2|E|` arcs: index `i < |E|` is arc `i` of Δ, index
/// `|E| + i` is its reverse.
fn arc_orbit_labels(graph: &OrientedGraph, group: &PermGroup) -> Vec<usize> {
    let e = graph.edge_count();
    let arcs = graph.arcs();
    let locate = |u: usize, v: usize| -> usize {
        match graph.arc_index(u, v) {
            Some(i) => i,
            None => e + graph.arc_index(v, u).expect("automorphisms map edges to edges"),
        }
    };
    let mut uf = UnionFind::new(2 * e);
    for g in group.generators() {
        for (i, &(u, v)) in arcs.iter().enumerate() {
            let (gu, gv) = (g.image(u), g.image(v));
            uf.union(i, locate(gu, gv));
            uf.union(e + i, locate(gv, gu));
        }
    }
    uf.classes()
}

fn edge_orbit_count(graph: &OrientedGraph, group: &PermGroup) -> usize {
    let e = graph.edge_count();
    let mut uf = UnionFind::new(e);
    for g in group.generators() {
        for (i, &(u, v)) in graph.arcs().iter().enumerate() {
            let (gu, gv) = (g.image(u), g.image(v));
            let j = graph.arc_index(gu, gv).or_else(|| graph.arc_index(gv, gu)).expect("edge preserved");
            uf.union(i, j);
        }
    }
    let mut c = uf.classes();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Decides membership in OG(4): Γ connected and 4-valent, G transitive on
/// vertices and edges, with exactly two arc orbits (mutual reverses) one of
/// which is Δ.
pub fn check_og4(pair: &OrientedPair) -> Result<Og4Report> {
    let graph = pair.graph();
    let group = pair.group();
    if group.degree() != graph.n() {
        return Err(Error::DegreeMismatch { expected: graph.n(), found: group.degree() });
    }
    let e = graph.edge_count();
    let labels = arc_orbit_labels(graph, group);
    let mut distinct = labels.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let delta_label = labels.first().copied();
    let delta_is_single_orbit = e > 0
        && labels[..e].iter().all(|&l| Some(l) == delta_label)
        && labels[e..].iter().all(|&l| Some(l) != delta_label);
    let orientation_preserved = group.generators().iter().all(|g| graph.preserves_orientation(g));
    let vertex_transitive = group.is_transitive();
    let group_order = group.order()?;
    let orbit0 = if graph.n() > 0 { group.orbit(0).len() } else { 1 };
    Ok(Og4Report {
        connected: graph.is_connected(),
        quartic: graph.validate_quartic().quartic,
        vertex_transitive,
        edge_transitive: e > 0 && edge_orbit_count(graph, group) == 1,
        delta_is_single_orbit,
        orientation_preserved,
        arc_transitive: e > 0 && distinct.len() == 1,
        arc_orbits: distinct.len(),
        group_order,
        stabilizer_order: group_order / orbit0,
    })
}

/// Of the two mutually reverse arc orbits of an edge-transitive,
/// non-arc-transitive group, the one holding the lexicographically least arc.
pub fn canonical_delta(graph: &OrientedGraph, group: &PermGroup) -> Result<Vec<(usize, usize)>> {
    let e = graph.edge_count();
    let labels = arc_orbit_labels(graph, group);
    let mut distinct = labels.clone();
    distinct.sort_unstable();
    distinct.dedup();
    match distinct.len() {
        0 => return Err(Error::NotHalfTransitive("graph has no edges".into())),
        1 => return Err(Error::ArcTransitive),
        2 => {}
        k => return Err(Error::NotHalfTransitive(format!("{k} arc orbits"))),
    }
    let arcs = graph.arcs();
    let all = |i: usize| if i < e { arcs[i] } else { (arcs[i - e].1, arcs[i - e].0) };
    for i in 0..e {
        if labels[i] == labels[e + i] {
            return Err(Error::NotHalfTransitive("an arc and its reverse share an orbit".into()));
        }
    }
    let least = (0..2 * e).min_by_key(|&i| all(i)).expect("nonempty");
    let mut delta: Vec<(usize, usize)> =
        (0..2 * e).filter(|&i| labels[i] == labels[least]).map(all).collect();
    delta.sort_unstable();
    Ok(delta)
}

/// A vertex bijection `f` from the first pair to the second with
/// `f⁻¹ G₁ f = G₂`. `reversed` is set when `f` carries Δ₁ onto the reverse
/// of Δ₂ rather than onto Δ₂.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub map: Vec<usize>,
    pub reversed: bool,
}

impl Witness {
    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn as_perm(&self) -> Perm {
        Perm::from_images(self.map.iter().map(|&x| x as u32).collect()).expect("witness is a bijection")
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct IsoOptions {
    /// Require Δ₁ to map onto Δ₂ exactly instead of up to global reversal.
    pub strict_delta: bool,
}

/// Searches for an isomorphism of graph–group pairs. Returns the
/// lexicographically least witness, or `None`.
pub fn pair_isomorphic(p1: &OrientedPair, p2: &OrientedPair, opts: IsoOptions) -> Result<Option<Witness>> {
    let (g1, g2) = (p1.graph(), p2.graph());
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    if p1.group().order()? != p2.group().order()? {
        return Ok(None);
    }
    let exact = IsoSearch::new(p1, p2, false)?.run();
    let flipped = if opts.strict_delta { None } else { IsoSearch::new(p1, p2, true)?.run() };
    Ok(match (exact, flipped) {
        (Some(a), Some(b)) => Some(if b < a { Witness { map: b, reversed: true } } else { Witness { map: a, reversed: false } }),
        (Some(a), None) => Some(Witness { map: a, reversed: false }),
        (None, Some(b)) => Some(Witness { map: b, reversed: true }),
        (None, None) => None,
    })
}

/// Checks that `f` is an isomorphism of pairs, as returned by
/// [`pair_isomorphic`].
pub fn verify_witness(p1: &OrientedPair, p2: &OrientedPair, w: &Witness) -> Result<bool> {
    let (g1, g2) = (p1.graph(), p2.graph());
    let n = g1.n();
    if g2.n() != n || w.map.len() != n {
        return Ok(false);
    }
    let mut seen = vec![false; n];
    for &x in &w.map {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Ok(false);
        }
    }
    let arcs_ok = g1.edge_count() == g2.edge_count()
        && g1.arcs().iter().all(|&(u, v)| {
            let (a, b) = (w.map[u], w.map[v]);
            if w.reversed { g2.has_arc(b, a) } else { g2.has_arc(a, b) }
        });
    if !arcs_ok {
        return Ok(false);
    }
    conjugates_onto(p1, p2, &w.map)
}

fn conjugates_onto(p1: &OrientedPair, p2: &OrientedPair, f: &[usize]) -> Result<bool> {
    if p1.group().order()? != p2.group().order()? {
        return Ok(false);
    }
    let n = f.len();
    let mut finv = vec![0usize; n];
    for (x, &y) in f.iter().enumerate() {
        finv[y] = x;
    }
    let target = p2.group().element_set()?;
    for g in p1.group().generators() {
        let images: Vec<u32> = (0..n).map(|y| f[g.image(finv[y])] as u32).collect();
        let conj = Perm::from_images(images).expect("conjugate of a permutation");
        if !target.contains(&conj) {
            return Ok(false);
        }
    }
    Ok(true)
}

struct IsoSearch<'a> {
    p1: &'a OrientedPair,
    p2: &'a OrientedPair,
    reversed: bool,
    d1: Vec<Vec<u32>>,
    d2: Vec<Vec<u32>>,
    profile1: Vec<Vec<u32>>,
    profile2: Vec<Vec<u32>>,
}

impl<'a> IsoSearch<'a> {
    fn new(p1: &'a OrientedPair, p2: &'a OrientedPair, reversed: bool) -> Result<IsoSearch<'a>> {
        let d1 = p1.graph().distances();
        let d2 = p2.graph().distances();
        let profile = |d: &Vec<Vec<u32>>| -> Vec<Vec<u32>> {
            d.iter()
                .map(|row| {
                    let mut r = row.clone();
                    r.sort_unstable();
                    r
                })
                .collect()
        };
        let (profile1, profile2) = (profile(&d1), profile(&d2));
        Ok(IsoSearch { p1, p2, reversed, d1, d2, profile1, profile2 })
    }

    fn arc2(&self, a: usize, b: usize) -> bool {
        if self.reversed { self.p2.graph().has_arc(b, a) } else { self.p2.graph().has_arc(a, b) }
    }

    fn run(&self) -> Option<Vec<usize>> {
        let n = self.p1.graph().n();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.extend(0, &mut map, &mut used) { Some(map) } else { None }
    }

    fn extend(&self, v: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = map.len();
        if v == n {
            return conjugates_onto(self.p1, self.p2, map).unwrap_or(false);
        }
        let g1 = self.p1.graph();
        for cand in 0..n {
            if used[cand] || self.profile1[v] != self.profile2[cand] {
                continue;
            }
            let consistent = (0..v).all(|u| {
                let fu = map[u];
                self.d1[u][v] == self.d2[fu][cand]
                    && (self.d1[u][v] != 1 || g1.has_arc(u, v) == self.arc2(fu, cand))
            });
            if !consistent {
                continue;
            }
            map[v] = cand;
            used[cand] = true;
            if self.extend(v + 1, map, used) {
                return true;
            }
            used[cand] = false;
            map[v] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rotation_pair(n: usize) -> OrientedPair {
        let g = OrientedGraph::oriented_cycle(n).unwrap();
        let grp = PermGroup::new(n, vec![Perm::from_fn(n, |x| (x + 1) % n)]).unwrap();
        OrientedPair::new(g, grp).unwrap()
    }

    #[test]
    fn canonical_delta_of_rotated_cycle() {
        let p = rotation_pair(5);
        let delta = canonical_delta(p.graph(), p.group()).unwrap();
        assert!(delta.contains(&(0, 1)));
        assert_eq!(delta.len(), 5);
    }

    #[test]
    fn complete_graph_with_symmetric_group_is_arc_transitive() {
        let k5 = OrientedGraph::from_edges(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        let t = Perm::from_images(vec![1, 0, 2, 3, 4]).unwrap();
        let c = Perm::from_fn(5, |x| (x + 1) % 5);
        let s5 = PermGroup::new(5, vec![t, c]).unwrap();
        assert_eq!(canonical_delta(&k5, &s5), Err(Error::ArcTransitive));
        let pair = OrientedPair::new(k5, s5).unwrap();
        let r = check_og4(&pair).unwrap();
        assert!(r.arc_transitive && !r.member());
    }

    #[test]
    fn non_automorphism_rejected() {
        let g = OrientedGraph::oriented_cycle(5).unwrap();
        let bad = PermGroup::new(5, vec![Perm::from_images(vec![1, 0, 2, 3, 4]).unwrap()]).unwrap();
        assert!(matches!(OrientedPair::new(g, bad), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn reflexive_witness_is_identity() {
        let p = rotation_pair(6);
        let w = pair_isomorphic(&p, &p, IsoOptions::default()).unwrap().unwrap();
        assert!(w.is_identity() && !w.reversed);
        let r = pair_isomorphic(&p, &p.with_reversed_delta(), IsoOptions::default()).unwrap().unwrap();
        assert!(verify_witness(&p, &p.with_reversed_delta(), &r).unwrap());
        // strict matching still finds the reflection x -> -x.
        let s = pair_isomorphic(&p, &p.with_reversed_delta(), IsoOptions { strict_delta: true }).unwrap().unwrap();
        assert_eq!(s.map, vec![0, 5, 4, 3, 2, 1]);
    }
}
