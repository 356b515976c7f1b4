//! Normal quotients Γ_N of a pair and the structure of their cyclic ones.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::group::PermGroup;
use crate::pair::{check_og4, OrientedPair};
use crate::partition::Partition;
use crate::perm::Perm;

/// Shape of the graph on the cells of a partition, read from the graph alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum Shape {
    K1,
    K2,
    Cycle { length: usize, oriented: bool },
    /// Quotient keeps valency 4 with multiplicity 1.
    Valency4,
    Other { reason: String },
}

impl Shape {
    pub fn is_cycle(&self) -> bool {
        matches!(self, Shape::Cycle { .. })
    }
}

/// The constant number ℓ of neighbours a vertex has in each adjacent cell.
///
/// Zero when the partition has a single cell. Edges inside a cell are
/// rejected unless there is only one cell.
pub fn ell_constant(graph: &OrientedGraph, partition: &Partition) -> Result<usize> {
    if partition.points() != graph.n() {
        return Err(Error::DegreeMismatch { expected: graph.n(), found: partition.points() });
    }
    if partition.len() <= 1 {
        return Ok(0);
    }
    let mut ell = None;
    for x in 0..graph.n() {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &y in graph.neighbours(x) {
            let c = partition.cell_of(y);
            if c == partition.cell_of(x) {
                return Err(Error::InconsistentEll(format!("edge {{{x},{y}}} lies inside one cell")));
            }
            *counts.entry(c).or_default() += 1;
        }
        for (&c, &k) in &counts {
            match ell {
                None => ell = Some(k),
                Some(l) if l != k => {
                    return Err(Error::InconsistentEll(format!(
                        "vertex {x} has {k} neighbours in cell {c}, expected {l}"
                    )))
                }
                _ => {}
            }
        }
    }
    Ok(ell.unwrap_or(0))
}

/// Graph on the cells: cell `a` adjacent to cell `b` when some edge joins them.
fn cell_adjacency(graph: &OrientedGraph, partition: &Partition) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); partition.len()];
    for &(u, v) in graph.arcs() {
        let (a, b) = (partition.cell_of(u), partition.cell_of(v));
        if a != b {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    adj
}

fn is_single_cycle(adj: &[BTreeSet<usize>]) -> bool {
    if adj.len() < 3 || adj.iter().any(|a| a.len() != 2) {
        return false;
    }
    let mut prev = 0;
    let mut cur = *adj[0].iter().next().expect("degree 2");
    let mut steps = 1;
    while cur != 0 {
        let next = *adj[cur].iter().find(|&&c| c != prev).expect("degree 2");
        prev = cur;
        cur = next;
        steps += 1;
        if steps > adj.len() {
            return false;
        }
    }
    steps == adj.len()
}

/// Classifies the quotient of `graph` on the cells of `partition` using only
/// the graph, so it applies where the group is too large to enumerate.
pub fn quotient_shape(graph: &OrientedGraph, partition: &Partition) -> Result<(Shape, usize)> {
    let cells = partition.len();
    if cells == 1 {
        return Ok((Shape::K1, 0));
    }
    let ell = match ell_constant(graph, partition) {
        Ok(l) => l,
        Err(Error::InconsistentEll(reason)) => return Ok((Shape::Other { reason }, 0)),
        Err(e) => return Err(e),
    };
    let adj = cell_adjacency(graph, partition);
    if cells == 2 {
        return Ok((Shape::K2, ell));
    }
    let degrees: BTreeSet<usize> = adj.iter().map(BTreeSet::len).collect();
    if degrees.len() != 1 {
        return Ok((Shape::Other { reason: format!("cell degrees {degrees:?}") }, ell));
    }
    match degrees.into_iter().next().expect("nonempty") {
        2 if is_single_cycle(&adj) => {
            let mut oriented = 0;
            for x in 0..graph.n() {
                let outs: BTreeSet<usize> =
                    graph.out_neighbours(x).iter().map(|&y| partition.cell_of(y)).collect();
                if outs.len() == 1 {
                    oriented += 1;
                }
            }
            if oriented == 0 {
                Ok((Shape::Cycle { length: cells, oriented: false }, ell))
            } else if oriented == graph.n() {
                Ok((Shape::Cycle { length: cells, oriented: true }, ell))
            } else {
                Ok((Shape::Other { reason: "cycle with mixed arc directions".into() }, ell))
            }
        }
        2 => Ok((Shape::Other { reason: "valency 2 but not a single cycle".into() }, ell)),
        d if ell == 1 && d == graph.degree(0) => Ok((Shape::Valency4, ell)),
        d => Ok((Shape::Other { reason: format!("quotient valency {d} with multiplicity {ell}") }, ell)),
    }
}

#[derive(Debug, Clone)]
pub enum QuotientKind {
    Cover(Box<OrientedPair>),
    K1,
    K2,
    CycleOriented(usize),
    CycleUnoriented(usize),
}

impl QuotientKind {
    pub fn is_cycle(&self) -> bool {
        matches!(self, QuotientKind::CycleOriented(_) | QuotientKind::CycleUnoriented(_))
    }

    pub fn cycle(&self) -> Option<(usize, bool)> {
        match *self {
            QuotientKind::CycleOriented(m) => Some((m, true)),
            QuotientKind::CycleUnoriented(m) => Some((m, false)),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            QuotientKind::Cover(p) => format!("cover({} vertices)", p.graph().n()),
            QuotientKind::K1 => "K1".into(),
            QuotientKind::K2 => "K2".into(),
            QuotientKind::CycleOriented(m) => format!("oriented C{m}"),
            QuotientKind::CycleUnoriented(m) => format!("unoriented C{m}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct QuotientResult {
    pub kind: QuotientKind,
    pub ell: usize,
    /// Elements of G fixing every orbit setwise.
    pub kernel: PermGroup,
    pub orbit_partition: Partition,
}

/// The pair induced on the cells of a G-invariant partition.
pub fn quotient_pair(pair: &OrientedPair, partition: &Partition) -> Result<OrientedPair> {
    let mut arcs: Vec<(usize, usize)> = pair
        .delta()
        .iter()
        .map(|&(u, v)| (partition.cell_of(u), partition.cell_of(v)))
        .collect();
    arcs.sort_unstable();
    arcs.dedup();
    let graph = OrientedGraph::new(partition.len(), arcs)?;
    let gens = pair
        .group()
        .generators()
        .iter()
        .map(|g| partition.induced(g))
        .collect::<Result<Vec<_>>>()?;
    OrientedPair::new(graph, PermGroup::new(partition.len(), gens)?)
}

/// Builds Γ_N and classifies it. The orientation read off the arcs is
/// cross-checked against the kernel: an unoriented cycle needs kernel = N
/// acting semiregularly, an oriented cycle needs every vertex stabiliser
/// inside the kernel.
pub fn normal_quotient(pair: &OrientedPair, n: &PermGroup) -> Result<QuotientResult> {
    let g = pair.group();
    if !g.has_normal_subgroup(n)? {
        return Err(Error::NotNormal);
    }
    let partition = n.orbits();
    let kernel = g.kernel_on_partition(&partition)?;
    let (shape, ell) = quotient_shape(pair.graph(), &partition)?;
    let kind = match shape {
        Shape::K1 => QuotientKind::K1,
        Shape::K2 => QuotientKind::K2,
        Shape::Cycle { length, oriented: false } => {
            if !kernel.same_elements(n)? || !kernel.is_semiregular()? {
                return Err(Error::KernelCriterion(format!(
                    "unoriented C{length} but the kernel is not N acting semiregularly"
                )));
            }
            QuotientKind::CycleUnoriented(length)
        }
        Shape::Cycle { length, oriented: true } => {
            let set = kernel.element_set()?;
            if let Some(x) = g.elements()?.iter().find(|x| x.has_fixed_point() && !set.contains(x)) {
                return Err(Error::KernelCriterion(format!(
                    "oriented C{length} but the kernel misses the stabiliser element {x}"
                )));
            }
            QuotientKind::CycleOriented(length)
        }
        Shape::Valency4 => {
            if !kernel.same_elements(n)? {
                return Err(Error::NotACover("kernel is larger than N".into()));
            }
            let q = quotient_pair(pair, &partition).map_err(|e| Error::NotACover(e.to_string()))?;
            if !check_og4(&q)?.member() {
                return Err(Error::NotACover("quotient pair is not in OG(4)".into()));
            }
            QuotientKind::Cover(Box::new(q))
        }
        Shape::Other { reason } => return Err(Error::UnexpectedShape(reason)),
    };
    Ok(QuotientResult { kind, ell, kernel, orbit_partition: partition })
}

#[derive(Debug, Clone)]
pub struct CensusRow {
    /// Full kernel on the orbit partition; normal and with the same orbits as
    /// every normal subgroup folded into this row.
    pub kernel: PermGroup,
    /// Index of `kernel` in the sorted normal-subgroup list.
    pub subgroup_id: usize,
    /// How many normal subgroups give this quotient.
    pub sources: usize,
    pub partition: Partition,
    pub length: usize,
    pub oriented: bool,
    pub maximal: bool,
}

/// All cyclic normal quotients, one row per distinct orbit partition, sorted
/// by length descending, then unoriented first, then by kernel elements.
pub fn cyclic_quotient_census(pair: &OrientedPair, bound: usize) -> Result<Vec<CensusRow>> {
    let normals = pair.group().normal_subgroups_bounded(bound)?;
    census_from_normals(pair, &normals)
}

pub fn census_from_normals(pair: &OrientedPair, normals: &[PermGroup]) -> Result<Vec<CensusRow>> {
    let mut by_partition: HashMap<Partition, (usize, usize, usize, bool)> = HashMap::new();
    for n in normals {
        let partition = n.orbits();
        if let Some(entry) = by_partition.get_mut(&partition) {
            entry.3 = true;
            entry.2 += 1;
            continue;
        }
        let q = normal_quotient(pair, n)?;
        if let Some((length, oriented)) = q.kind.cycle() {
            by_partition.insert(partition, (length, oriented as usize, 1, true));
        } else {
            by_partition.insert(partition, (0, 0, 1, false));
        }
    }
    let mut index: HashMap<Vec<Perm>, usize> = HashMap::new();
    for (i, n) in normals.iter().enumerate() {
        index.insert(n.sorted_elements()?, i);
    }
    let mut rows = Vec::new();
    for (partition, (length, oriented, sources, _)) in by_partition {
        if length < 3 {
            continue;
        }
        let kernel = pair.group().kernel_on_partition(&partition)?;
        let subgroup_id = *index
            .get(&kernel.sorted_elements()?)
            .ok_or_else(|| Error::KernelCriterion("orbit kernel missing from the normal-subgroup list".into()))?;
        rows.push(CensusRow {
            kernel,
            subgroup_id,
            sources,
            partition,
            length,
            oriented: oriented == 1,
            maximal: true,
        });
    }
    for i in 0..rows.len() {
        rows[i].maximal = !(0..rows.len())
            .any(|j| j != i && rows[j].partition != rows[i].partition && rows[j].partition.refines(&rows[i].partition));
    }
    rows.sort_by(|a, b| {
        b.length
            .cmp(&a.length)
            .then(a.oriented.cmp(&b.oriented))
            .then(a.subgroup_id.cmp(&b.subgroup_id))
    });
    Ok(rows)
}

#[derive(Debug, Clone)]
pub struct Independence {
    pub independent: bool,
    /// K = Ñ ∩ M̃.
    pub k: PermGroup,
    pub k_kind: QuotientKind,
}

/// Whether Γ_N and Γ_M are independent: Γ_K is not a cycle for
/// K = Ñ ∩ M̃, the intersection of the orbit kernels.
pub fn independent(pair: &OrientedPair, n: &PermGroup, m: &PermGroup) -> Result<Independence> {
    let qn = normal_quotient(pair, n)?;
    let qm = normal_quotient(pair, m)?;
    if !qn.kind.is_cycle() || !qm.kind.is_cycle() {
        return Err(Error::PreconditionFailed(format!(
            "both quotients must be cycles, got {} and {}",
            qn.kind.name(),
            qm.kind.name()
        )));
    }
    let k = qn.kernel.intersection(&qm.kernel)?;
    let qk = normal_quotient(pair, &k)?;
    Ok(Independence { independent: !qk.kind.is_cycle(), k, k_kind: qk.kind })
}

/// An automorphism of the cycle c_0 … c_{m−1}: rotation c_i ↦ c_{i+k} or
/// reflection c_i ↦ c_{k−i}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CycleSymmetry {
    Rotation { k: usize, m: usize },
    Reflection { k: usize, m: usize },
}

impl CycleSymmetry {
    pub fn cycle_length(&self) -> usize {
        match *self {
            CycleSymmetry::Rotation { m, .. } | CycleSymmetry::Reflection { m, .. } => m,
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        match *self {
            CycleSymmetry::Rotation { k, m } => (i + k) % m,
            CycleSymmetry::Reflection { k, m } => (k + m - i % m) % m,
        }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &CycleSymmetry) -> CycleSymmetry {
        let m = self.cycle_length();
        debug_assert_eq!(m, other.cycle_length());
        let (a0, a1) = (other.apply(self.apply(0)), other.apply(self.apply(1)));
        if (a1 + m - a0) % m == 1 % m {
            CycleSymmetry::Rotation { k: a0, m }
        } else {
            CycleSymmetry::Reflection { k: a0, m }
        }
    }

    pub fn is_rotation(&self) -> bool {
        matches!(self, CycleSymmetry::Rotation { .. })
    }
}

impl std::fmt::Display for CycleSymmetry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CycleSymmetry::Rotation { k, .. } => write!(f, "a^{k}"),
            CycleSymmetry::Reflection { k, .. } => write!(f, "a^{k}c"),
        }
    }
}

/// Cells of a cycle quotient listed along the cycle, starting at the cell of
/// vertex 0 and stepping first to its lower-numbered neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleLabeling {
    pub order: Vec<usize>,
    position: Vec<usize>,
}

impl CycleLabeling {
    pub fn new(graph: &OrientedGraph, partition: &Partition) -> Result<CycleLabeling> {
        let adj = cell_adjacency(graph, partition);
        if !is_single_cycle(&adj) {
            return Err(Error::UnexpectedShape("cell graph is not a cycle".into()));
        }
        let start = partition.cell_of(0);
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = *adj[start].iter().next().expect("degree 2");
        while cur != start {
            order.push(cur);
            let next = *adj[cur].iter().find(|&&c| c != prev).expect("degree 2");
            prev = cur;
            cur = next;
        }
        let mut position = vec![0; order.len()];
        for (i, &c) in order.iter().enumerate() {
            position[c] = i;
        }
        Ok(CycleLabeling { order, position })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn position(&self, cell: usize) -> usize {
        self.position[cell]
    }
}

/// Reads a permutation of the cells as a rotation or reflection.
pub fn cycle_symmetry(on_cells: &Perm, labeling: &CycleLabeling) -> Result<CycleSymmetry> {
    let m = labeling.len();
    if on_cells.degree() != m {
        return Err(Error::DegreeMismatch { expected: m, found: on_cells.degree() });
    }
    let p = |i: usize| labeling.position(on_cells.image(labeling.order[i]));
    let (p0, p1) = (p(0), p(1));
    let candidate = if (p1 + m - p0) % m == 1 {
        CycleSymmetry::Rotation { k: p0, m }
    } else if (p0 + m - p1) % m == 1 {
        CycleSymmetry::Reflection { k: p0, m }
    } else {
        return Err(Error::NotAutomorphism(format!("{on_cells} breaks cycle adjacency")));
    };
    if (0..m).all(|i| p(i) == candidate.apply(i)) {
        Ok(candidate)
    } else {
        Err(Error::NotAutomorphism(format!("{on_cells} breaks cycle adjacency")))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ActionSignature {
    pub r: usize,
    pub s: usize,
    pub m_oriented: bool,
    /// Per group element, its action on Γ_N and on Γ_M.
    pub images: Vec<(CycleSymmetry, CycleSymmetry)>,
    pub injective: bool,
    pub first_image_order: usize,
    pub second_image_order: usize,
    /// First projection is all of D_{2r}.
    pub first_surjective: bool,
    /// Second projection is D_{2s}, or Z_s when Γ_M is oriented.
    pub second_surjective: bool,
}

fn require_cycle_kernel(pair: &OrientedPair, k: &PermGroup, label: &str) -> Result<(Partition, usize, bool)> {
    let partition = k.orbits();
    let (shape, _) = quotient_shape(pair.graph(), &partition)?;
    let Shape::Cycle { length, oriented } = shape else {
        return Err(Error::NotKernel(format!("{label} does not give a cycle quotient")));
    };
    if !pair.group().kernel_on_partition(&partition)?.same_elements(k)? {
        return Err(Error::NotKernel(format!("{label} is smaller than the kernel on its orbits")));
    }
    Ok((partition, length, oriented))
}

/// The map g ↦ (g on Γ_N, g on Γ_M) for full kernels N and M of two cycle
/// quotients, with its injectivity and the sizes of both projections.
pub fn quotient_action_signature(pair: &OrientedPair, n: &PermGroup, m: &PermGroup) -> Result<ActionSignature> {
    let (pn, r, _) = require_cycle_kernel(pair, n, "N")?;
    let (pm, s, m_oriented) = require_cycle_kernel(pair, m, "M")?;
    let ln = CycleLabeling::new(pair.graph(), &pn)?;
    let lm = CycleLabeling::new(pair.graph(), &pm)?;
    let mut images = Vec::new();
    for g in pair.group().elements()? {
        let a = cycle_symmetry(&pn.induced(g)?, &ln)?;
        let b = cycle_symmetry(&pm.induced(g)?, &lm)?;
        images.push((a, b));
    }
    let distinct: HashSet<_> = images.iter().collect();
    let first: HashSet<_> = images.iter().map(|x| x.0).collect();
    let second: HashSet<_> = images.iter().map(|x| x.1).collect();
    let second_target = if m_oriented { s } else { 2 * s };
    let second_ok = second.len() == second_target && (!m_oriented || second.iter().all(CycleSymmetry::is_rotation));
    Ok(ActionSignature {
        r,
        s,
        m_oriented,
        injective: distinct.len() == images.len(),
        first_image_order: first.len(),
        second_image_order: second.len(),
        first_surjective: first.len() == 2 * r,
        second_surjective: second_ok,
        images,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_composition() {
        let m = 5;
        let all: Vec<CycleSymmetry> = (0..m)
            .flat_map(|k| [CycleSymmetry::Rotation { k, m }, CycleSymmetry::Reflection { k, m }])
            .collect();
        for a in &all {
            for b in &all {
                let ab = a.then(b);
                for i in 0..m {
                    assert_eq!(ab.apply(i), b.apply(a.apply(i)));
                }
            }
            assert!(a.then(a).is_rotation());
        }
    }

    #[test]
    fn cycle_shape_on_blown_up_cycle() {
        // C_4 with each vertex doubled, arcs forward.
        let arcs = (0..4).flat_map(|i| {
            (0..2).flat_map(move |j| (0..2).map(move |k| (2 * i + j, 2 * ((i + 1) % 4) + k)))
        });
        let g = OrientedGraph::new(8, arcs).unwrap();
        let p = Partition::from_labels((0..8).map(|x| x / 2));
        assert_eq!(quotient_shape(&g, &p).unwrap(), (Shape::Cycle { length: 4, oriented: true }, 2));
        assert_eq!(ell_constant(&g, &Partition::discrete(8)).unwrap(), 1);
        let halves = Partition::from_labels((0..8).map(|x| (x / 2) % 2));
        assert_eq!(quotient_shape(&g, &halves).unwrap().0, Shape::K2);
    }

    #[test]
    fn labeling_and_reflection() {
        let g = OrientedGraph::oriented_cycle(5).unwrap();
        let p = Partition::discrete(5);
        let l = CycleLabeling::new(&g, &p).unwrap();
        assert_eq!(l.order, vec![0, 1, 2, 3, 4]);
        let flip = Perm::from_fn(5, |x| (5 - x) % 5);
        assert_eq!(cycle_symmetry(&flip, &l).unwrap(), CycleSymmetry::Reflection { k: 0, m: 5 });
        let bad = Perm::from_images(vec![1, 0, 2, 3, 4]).unwrap();
        assert!(matches!(cycle_symmetry(&bad, &l), Err(Error::NotAutomorphism(_))));
    }
}
