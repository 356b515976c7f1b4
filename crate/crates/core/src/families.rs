//! Constructors for the graph–group families.
//!
//! Vertex encodings:
//! - Γ(r,s): `(i,j) ↦ i·s + j` on Z_r × Z_s.
//! - Γ⁺(r,s): the vertices of Γ(r,s) with `i ≡ j (mod 2)`, renumbered in
//!   ascending order of their Γ(r,s) index.
//! - Γ₂(r,s): `(i,j)_δ ↦ 2(i·s + j) + δ`.
//! - C_r[2·K₁]: `(i,j) ↦ 2i + j`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::group::PermGroup;
use crate::pair::OrientedPair;
use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    LexCycle,
    Gamma,
    GammaPlus,
    GammaDouble,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    G,
    H,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `(i,j) → (i±1, j+1)`.
    Con1,
    /// `(i,j) → (i+1, j+(−1)^j)` and `(i−1, j−(−1)^j)`.
    Con2c,
    /// `(i,j)_δ → (i±1, j±(−1)^δ)_{δ+1}` on the double cover.
    Con2a,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "G" | "g" => Ok(Variant::G),
            "H" | "h" => Ok(Variant::H),
            _ => Err(Error::BadParam(format!("unknown group variant {s:?}; expected G or H"))),
        }
    }
}

impl std::str::FromStr for Orientation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Orientation> {
        match s {
            "con1" => Ok(Orientation::Con1),
            "con2c" => Ok(Orientation::Con2c),
            "con2a" => Ok(Orientation::Con2a),
            _ => Err(Error::BadParam(format!("unknown orientation {s:?}; expected con1, con2c or con2a"))),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "lex" | "lex-cycle" | "lex_cycle" => Ok(Family::LexCycle),
            "gamma" => Ok(Family::Gamma),
            "gamma-plus" | "gamma_plus" | "plus" => Ok(Family::GammaPlus),
            "double" | "gamma-double" | "gamma_double" => Ok(Family::GammaDouble),
            _ => Err(Error::BadParam(format!(
                "unknown family {s:?}; expected lex-cycle, gamma, gamma-plus or double"
            ))),
        }
    }
}

/// Parameters naming one member of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    pub group_variant: Variant,
    pub orientation: Orientation,
}

impl FamilySpec {
    pub fn lex_cycle(r: usize) -> FamilySpec {
        FamilySpec { family: Family::LexCycle, r, s: None, group_variant: Variant::G, orientation: Orientation::Con1 }
    }

    pub fn gamma(r: usize, s: usize, variant: Variant, orientation: Orientation) -> FamilySpec {
        FamilySpec { family: Family::Gamma, r, s: Some(s), group_variant: variant, orientation }
    }

    pub fn gamma_plus(r: usize, s: usize, variant: Variant, orientation: Orientation) -> FamilySpec {
        FamilySpec { family: Family::GammaPlus, r, s: Some(s), group_variant: variant, orientation }
    }

    pub fn double(r: usize, s: usize) -> FamilySpec {
        FamilySpec { family: Family::GammaDouble, r, s: Some(s), group_variant: Variant::G, orientation: Orientation::Con2a }
    }

    fn s(&self) -> Result<usize> {
        self.s.ok_or_else(|| Error::BadParam("this family needs a second parameter s".into()))
    }

    pub fn build(&self) -> Result<OrientedPair> {
        match self.family {
            Family::LexCycle => lex_cycle_pair(self.r),
            Family::Gamma => gamma_pair(self.r, self.s()?, self.group_variant, self.orientation),
            Family::GammaPlus => gamma_plus_pair(self.r, self.s()?, self.group_variant, self.orientation),
            Family::GammaDouble => {
                if self.orientation != Orientation::Con2a {
                    return Err(Error::BadParam("the double cover family uses orientation con2a only".into()));
                }
                double_cover_pair(self.r, self.s()?)
            }
        }
    }

    pub fn label(&self) -> String {
        match (self.family, self.s) {
            (Family::LexCycle, _) => format!("C{}[2K1]", self.r),
            (Family::Gamma, Some(s)) => format!("Gamma({},{})/{:?} {:?}", self.r, s, self.group_variant, self.orientation),
            (Family::GammaPlus, Some(s)) => format!("Gamma+({},{})/{:?}+ {:?}", self.r, s, self.group_variant, self.orientation),
            (Family::GammaDouble, Some(s)) => format!("Gamma2({},{})/G2", self.r, s),
            (f, None) => format!("{f:?}({})", self.r),
        }
    }
}

fn md(x: i64, m: usize) -> usize {
    x.rem_euclid(m as i64) as usize
}

/// Coordinates on Z_r × Z_s and the permutations μ, ν, σ, τ of Γ(r,s).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    pub r: usize,
    pub s: usize,
}

impl Grid {
    pub fn new(r: usize, s: usize) -> Grid {
        Grid { r, s }
    }

    pub fn n(&self) -> usize {
        self.r * self.s
    }

    pub fn index(&self, i: i64, j: i64) -> usize {
        md(i, self.r) * self.s + md(j, self.s)
    }

    pub fn coords(&self, x: usize) -> (i64, i64) {
        ((x / self.s) as i64, (x % self.s) as i64)
    }

    fn perm(&self, f: impl Fn(i64, i64) -> (i64, i64)) -> Perm {
        Perm::from_fn(self.n(), |x| {
            let (i, j) = self.coords(x);
            let (a, b) = f(i, j);
            self.index(a, b)
        })
    }

    /// `(i,j) ↦ (i+1, j)`.
    pub fn mu(&self) -> Perm {
        self.perm(|i, j| (i + 1, j))
    }

    /// `(i,j) ↦ (i, j+1)`.
    pub fn nu(&self) -> Perm {
        self.perm(|i, j| (i, j + 1))
    }

    /// `(i,j) ↦ (−i, j)`.
    pub fn sigma(&self) -> Perm {
        self.perm(|i, j| (-i, j))
    }

    /// `(i,j) ↦ (−i, −j)`.
    pub fn tau(&self) -> Perm {
        self.perm(|i, j| (-i, -j))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for x in 0..self.n() {
            let (i, j) = self.coords(x);
            for (di, dj) in [(1, 1), (1, -1)] {
                let y = self.index(i + di, j + dj);
                e.push((x.min(y), x.max(y)));
            }
        }
        e.sort_unstable();
        e.dedup();
        e
    }

    /// Γ(r,s) as an undirected graph (edges oriented low to high).
    pub fn graph(&self) -> Result<OrientedGraph> {
        OrientedGraph::from_edges(self.n(), self.edges())
    }

    pub fn oriented(&self, orientation: Orientation) -> Result<OrientedGraph> {
        let mut arcs = Vec::with_capacity(2 * self.n());
        for x in 0..self.n() {
            let (i, j) = self.coords(x);
            match orientation {
                Orientation::Con1 => {
                    arcs.push((x, self.index(i + 1, j + 1)));
                    arcs.push((x, self.index(i - 1, j + 1)));
                }
                Orientation::Con2c => {
                    if !self.s.is_multiple_of(2) {
                        return Err(Error::BadParam(format!(
                            "orientation con2c needs s even, got s = {}",
                            self.s
                        )));
                    }
                    let e = if j % 2 == 0 { 1 } else { -1 };
                    arcs.push((x, self.index(i + 1, j + e)));
                    arcs.push((x, self.index(i - 1, j - e)));
                }
                Orientation::Con2a => {
                    return Err(Error::BadParam("orientation con2a applies to the double cover only".into()))
                }
            }
        }
        OrientedGraph::new(self.n(), arcs)
    }

    /// Vertices with `i ≡ j (mod 2)`, ascending.
    pub fn plus_vertices(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&x| {
                let (i, j) = self.coords(x);
                (i - j) % 2 == 0
            })
            .collect()
    }

    /// Generators of G(r,s) = ⟨μ, ν, σ⟩ or H(r,s) = ⟨μ, σν, τ⟩.
    pub fn generators(&self, variant: Variant) -> Vec<Perm> {
        match variant {
            Variant::G => vec![self.mu(), self.nu(), self.sigma()],
            Variant::H => vec![self.mu(), self.sigma().compose(&self.nu()), self.tau()],
        }
    }

    /// Generators of G⁺(r,s) = ⟨μ², μν, σ⟩ or H⁺(r,s) = ⟨μ², σμν, τ⟩, still
    /// acting on all of Z_r × Z_s.
    pub fn plus_generators(&self, variant: Variant) -> Vec<Perm> {
        let (mu, nu, sigma) = (self.mu(), self.nu(), self.sigma());
        match variant {
            Variant::G => vec![mu.pow(2), mu.compose(&nu), sigma],
            Variant::H => vec![mu.pow(2), sigma.compose(&mu).compose(&nu), self.tau()],
        }
    }
}

/// Restriction of `g` to an invariant vertex set, renumbered as in `vertices`.
pub fn restrict(g: &Perm, vertices: &[usize]) -> Result<Perm> {
    let pos: HashMap<usize, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let images = vertices
        .iter()
        .map(|&v| pos.get(&g.image(v)).map(|&k| k as u32).ok_or(Error::NotInvariant))
        .collect::<Result<Vec<_>>>()?;
    Perm::from_images(images)
}

fn check_param(name: &str, v: usize, min: usize) -> Result<()> {
    if v < min {
        return Err(Error::BadParam(format!("{name} must be at least {min}, got {v}")));
    }
    Ok(())
}

/// C_r[2·K₁] with G = Z₂ ≀ Z_r, generated by the base transpositions σ_k and
/// the shift τ̂.
pub fn lex_cycle_pair(r: usize) -> Result<OrientedPair> {
    check_param("r", r, 3)?;
    let n = 2 * r;
    let arcs = (0..r).flat_map(|i| (0..2).flat_map(move |j| (0..2).map(move |k| (2 * i + j, 2 * ((i + 1) % r) + k))));
    let graph = OrientedGraph::new(n, arcs)?;
    let mut gens = lex_base_generators(r);
    gens.push(lex_shift(r));
    OrientedPair::new(graph, PermGroup::new(n, gens)?)
}

/// σ_k swaps (k,0) and (k,1).
pub fn lex_base_generators(r: usize) -> Vec<Perm> {
    (0..r).map(|k| Perm::from_fn(2 * r, |x| if x / 2 == k { x ^ 1 } else { x })).collect()
}

/// τ̂: (i,j) ↦ (i+1, j).
pub fn lex_shift(r: usize) -> Perm {
    Perm::from_fn(2 * r, |x| (x + 2) % (2 * r))
}

/// N(c) = B·⟨τ̂^c⟩ for a divisor c of r, where B is the base group.
pub fn lex_subgroup(r: usize, c: usize) -> Result<PermGroup> {
    if c == 0 || !r.is_multiple_of(c) {
        return Err(Error::BadParam(format!("{c} does not divide {r}")));
    }
    let mut gens = lex_base_generators(r);
    gens.push(lex_shift(r).pow(c as i64));
    PermGroup::new(2 * r, gens)
}

/// Γ(r,s) with G(r,s) or H(r,s) and the chosen orientation as Δ.
pub fn gamma_pair(r: usize, s: usize, variant: Variant, orientation: Orientation) -> Result<OrientedPair> {
    check_param("r", r, 3)?;
    check_param("s", s, 3)?;
    if (variant == Variant::H || orientation == Orientation::Con2c) && !s.is_multiple_of(2) {
        return Err(Error::BadParam(format!(
            "H(r,s) and orientation con2c need s even, got s = {s}"
        )));
    }
    if orientation == Orientation::Con2a {
        return Err(Error::BadParam("orientation con2a applies to the double cover only".into()));
    }
    if r.is_multiple_of(2) && s.is_multiple_of(2) {
        return Err(Error::Disconnected(format!(
            "Γ({r},{s}) is disconnected when r and s are both even; use the Γ⁺ family"
        )));
    }
    if variant == Variant::H && orientation == Orientation::Con2c && r.is_multiple_of(2) {
        return Err(Error::BadParam(format!("H(r,s) with con2c needs r odd, got r = {r}")));
    }
    let grid = Grid::new(r, s);
    let graph = grid.oriented(orientation)?;
    OrientedPair::new(graph, PermGroup::new(grid.n(), grid.generators(variant))?)
}

/// Γ⁺(r,s) with G⁺(r,s) or H⁺(r,s), for r and s both even.
pub fn gamma_plus_pair(r: usize, s: usize, variant: Variant, orientation: Orientation) -> Result<OrientedPair> {
    check_param("r", r, 4)?;
    check_param("s", s, 4)?;
    if !r.is_multiple_of(2) || !s.is_multiple_of(2) {
        return Err(Error::BadParam(format!("Γ⁺(r,s) needs r and s both even, got ({r},{s})")));
    }
    if orientation == Orientation::Con2a {
        return Err(Error::BadParam("orientation con2a applies to the double cover only".into()));
    }
    let grid = Grid::new(r, s);
    let vertices = grid.plus_vertices();
    let (graph, _) = grid.oriented(orientation)?.induced(&vertices)?;
    let gens = grid
        .plus_generators(variant)
        .iter()
        .map(|g| restrict(g, &vertices))
        .collect::<Result<Vec<_>>>()?;
    OrientedPair::new(graph, PermGroup::new(vertices.len(), gens)?)
}

/// Coordinates `(i,j)_δ` on the standard double cover of Γ(r,s).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleGrid {
    pub r: usize,
    pub s: usize,
}

impl DoubleGrid {
    pub fn new(r: usize, s: usize) -> DoubleGrid {
        DoubleGrid { r, s }
    }

    pub fn n(&self) -> usize {
        2 * self.r * self.s
    }

    pub fn index(&self, i: i64, j: i64, d: i64) -> usize {
        2 * (md(i, self.r) * self.s + md(j, self.s)) + md(d, 2)
    }

    pub fn coords(&self, x: usize) -> (i64, i64, i64) {
        let base = x / 2;
        ((base / self.s) as i64, (base % self.s) as i64, (x % 2) as i64)
    }

    fn perm(&self, f: impl Fn(i64, i64, i64) -> (i64, i64, i64)) -> Perm {
        Perm::from_fn(self.n(), |x| {
            let (i, j, d) = self.coords(x);
            let (a, b, e) = f(i, j, d);
            self.index(a, b, e)
        })
    }

    pub fn mu(&self) -> Perm {
        self.perm(|i, j, d| (i + 1, j, d))
    }

    pub fn nu(&self) -> Perm {
        self.perm(|i, j, d| (i, j + 1, d))
    }

    /// `(i,j)_δ ↦ (i, −j)_{δ+1}`.
    pub fn sigma(&self) -> Perm {
        self.perm(|i, j, d| (i, -j, d + 1))
    }

    /// `(i,j)_δ ↦ (−i, −j)_δ`.
    pub fn tau(&self) -> Perm {
        self.perm(|i, j, d| (-i, -j, d))
    }

    /// Γ₂(r,s) with the con2a orientation; defined for every r, s ≥ 3.
    pub fn oriented(&self) -> Result<OrientedGraph> {
        let mut arcs = Vec::with_capacity(2 * self.n());
        for x in 0..self.n() {
            let (i, j, d) = self.coords(x);
            let e = if d == 0 { 1 } else { -1 };
            arcs.push((x, self.index(i + 1, j + e, d + 1)));
            arcs.push((x, self.index(i - 1, j - e, d + 1)));
        }
        OrientedGraph::new(self.n(), arcs)
    }

    pub fn generators(&self) -> Vec<Perm> {
        vec![self.mu(), self.nu(), self.sigma(), self.tau()]
    }
}

/// Γ₂(r,s) with G₂(r,s) = ⟨μ, ν, σ, τ⟩, for r and s both odd.
pub fn double_cover_pair(r: usize, s: usize) -> Result<OrientedPair> {
    if r.is_multiple_of(2) || s.is_multiple_of(2) {
        return Err(Error::BadParam(format!(
            "Γ₂(r,s) is connected only when r and s are both odd, got ({r},{s})"
        )));
    }
    double_cover_pair_unchecked(r, s)
}

/// As [`double_cover_pair`] without the parity check; even parameters then
/// fail on connectivity.
pub fn double_cover_pair_unchecked(r: usize, s: usize) -> Result<OrientedPair> {
    check_param("r", r, 3)?;
    check_param("s", s, 3)?;
    let grid = DoubleGrid::new(r, s);
    let graph = grid.oriented()?;
    if !graph.is_connected() {
        return Err(Error::Disconnected(format!("Γ₂({r},{s}) has {} components", graph.components().len())));
    }
    OrientedPair::new(graph, PermGroup::new(grid.n(), grid.generators())?)
}

/// The standard double cover of a pair: arcs `x_δ → y_{δ+1}` for `(x,y) ∈ Δ`
/// and the group generated by the lifted generators and the swap
/// `x_δ ↦ x_{δ+1}`.
pub fn lifted_double_cover(pair: &OrientedPair) -> Result<OrientedPair> {
    let n = pair.graph().n();
    let graph = pair.graph().standard_double_cover();
    let mut gens: Vec<Perm> = pair
        .group()
        .generators()
        .iter()
        .map(|g| Perm::from_fn(2 * n, |x| 2 * g.image(x / 2) + x % 2))
        .collect();
    gens.push(Perm::from_fn(2 * n, |x| x ^ 1));
    OrientedPair::new(graph, PermGroup::new(2 * n, gens)?)
}

/// Cay(K, S₀ ∪ S₀⁻¹) with arcs `k → s·k` for `s ∈ S₀`. The group is K acting
/// by right multiplication together with the automorphisms in `autos`, each
/// given as the images of K's generators.
pub fn cayley_pair(k: &PermGroup, s0: &[Perm], autos: &[Vec<Perm>]) -> Result<OrientedPair> {
    let elements = k.elements()?.to_vec();
    let set = k.element_set()?;
    let inverses: Vec<Perm> = s0.iter().map(Perm::inverse).collect();
    if s0.iter().any(Perm::is_identity) {
        return Err(Error::ContainsIdentity);
    }
    if s0.iter().any(|s| inverses.contains(s)) {
        return Err(Error::NotInverseClosed);
    }
    if let Some(s) = s0.iter().find(|s| !set.contains(s)) {
        return Err(Error::BadParam(format!("{s} is not an element of K")));
    }
    let sub = PermGroup::new(k.degree(), s0.to_vec())?;
    if sub.order()? != elements.len() {
        return Err(Error::NotGenerating);
    }
    let n = elements.len();
    let idx = |p: &Perm| set.index_of(p).expect("closed");
    let mut arcs = Vec::with_capacity(n * s0.len());
    for (x, e) in elements.iter().enumerate() {
        for s in s0 {
            arcs.push((x, idx(&s.compose(e))));
        }
    }
    let graph = OrientedGraph::new(n, arcs)?;
    let mut gens: Vec<Perm> = k
        .generators()
        .iter()
        .map(|g| Perm::from_fn(n, |x| idx(&elements[x].compose(g))))
        .collect();
    for images in autos {
        gens.push(automorphism_action(k, &elements, images)?);
    }
    OrientedPair::new(graph, PermGroup::new(n, gens)?)
}

/// The permutation of K's elements induced by the automorphism sending the
/// i-th generator of K to `images[i]`.
fn automorphism_action(k: &PermGroup, elements: &[Perm], images: &[Perm]) -> Result<Perm> {
    let gens = k.generators();
    if images.len() != gens.len() {
        return Err(Error::BadParam(format!("automorphism needs {} generator images", gens.len())));
    }
    let set = k.element_set()?;
    let n = elements.len();
    let id = elements.iter().position(Perm::is_identity).expect("identity");
    let mut map: Vec<Option<usize>> = vec![None; n];
    map[id] = Some(id);
    let mut queue = vec![id];
    let bad = || Error::BadParam("generator images do not define an automorphism".into());
    while let Some(x) = queue.pop() {
        let fx = &elements[map[x].expect("assigned")];
        for (g, img) in gens.iter().zip(images) {
            let y = set.index_of(&elements[x].compose(g)).expect("closed");
            let fy = set.index_of(&fx.compose(img)).ok_or_else(bad)?;
            match map[y] {
                None => {
                    map[y] = Some(fy);
                    queue.push(y);
                }
                Some(prev) if prev != fy => return Err(bad()),
                _ => {}
            }
        }
    }
    let images: Vec<u32> = map.into_iter().map(|m| m.expect("K is generated") as u32).collect();
    Perm::from_images(images).map_err(|_| bad())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::{canonical_delta, check_og4, in_out_neighbours};

    #[test]
    fn orientation_rules_give_the_canonical_orbit() {
        for pair in [
            gamma_pair(3, 3, Variant::G, Orientation::Con1).unwrap(),
            gamma_pair(3, 4, Variant::H, Orientation::Con2c).unwrap(),
            gamma_plus_pair(4, 4, Variant::G, Orientation::Con1).unwrap(),
            gamma_plus_pair(4, 6, Variant::H, Orientation::Con2c).unwrap(),
            double_cover_pair(3, 5).unwrap(),
            lex_cycle_pair(4).unwrap(),
        ] {
            let delta = canonical_delta(pair.graph(), pair.group()).unwrap();
            assert_eq!(delta, pair.delta());
        }
    }

    #[test]
    fn neighbourhoods_follow_the_rules() {
        let g = Grid::new(3, 3);
        let p = gamma_pair(3, 3, Variant::G, Orientation::Con1).unwrap();
        let (out, inn) = in_out_neighbours(&p, 0);
        assert_eq!(out, vec![g.index(1, 1), g.index(2, 1)]);
        assert_eq!(inn, vec![g.index(1, 2), g.index(2, 2)]);

        let g = Grid::new(3, 4);
        let p = gamma_pair(3, 4, Variant::H, Orientation::Con2c).unwrap();
        assert_eq!(in_out_neighbours(&p, 0).0, vec![g.index(1, 1), g.index(2, 3)]);

        let d = DoubleGrid::new(3, 3);
        let p = double_cover_pair(3, 3).unwrap();
        assert_eq!(in_out_neighbours(&p, 0).0, vec![d.index(1, 1, 1), d.index(2, 2, 1)]);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(lex_cycle_pair(2), Err(Error::BadParam(_))));
        assert!(matches!(gamma_pair(4, 4, Variant::G, Orientation::Con1), Err(Error::Disconnected(_))));
        assert!(matches!(gamma_pair(3, 3, Variant::H, Orientation::Con1), Err(Error::BadParam(_))));
        assert!(matches!(gamma_plus_pair(3, 4, Variant::G, Orientation::Con1), Err(Error::BadParam(_))));
        assert!(matches!(double_cover_pair(3, 4), Err(Error::BadParam(_))));
        assert!(matches!(double_cover_pair_unchecked(3, 4), Err(Error::Disconnected(_))));
    }

    #[test]
    fn group_orders() {
        let lex = lex_cycle_pair(3).unwrap();
        assert_eq!(lex.group().order().unwrap(), 24);
        assert_eq!(gamma_pair(3, 3, Variant::G, Orientation::Con1).unwrap().group().order().unwrap(), 18);
        assert_eq!(gamma_plus_pair(4, 4, Variant::G, Orientation::Con1).unwrap().group().order().unwrap(), 16);
        assert_eq!(double_cover_pair(3, 3).unwrap().group().order().unwrap(), 36);
    }

    #[test]
    fn cayley_builder() {
        // Z5 with S0 = {1} gives the 5-cycle.
        let z5 = PermGroup::new(5, vec![Perm::from_fn(5, |x| (x + 1) % 5)]).unwrap();
        let one = z5.generators()[0].clone();
        let c5 = cayley_pair(&z5, std::slice::from_ref(&one), &[]).unwrap();
        assert_eq!(c5.graph().edge_count(), 5);
        assert!(c5.graph().is_connected());
        assert_eq!(cayley_pair(&z5, &[Perm::identity(5)], &[]).unwrap_err(), Error::ContainsIdentity);
        assert_eq!(cayley_pair(&z5, &[one.clone(), one.inverse()], &[]).unwrap_err(), Error::NotInverseClosed);
        let z6 = PermGroup::new(6, vec![Perm::from_fn(6, |x| (x + 1) % 6)]).unwrap();
        let two = z6.generators()[0].pow(2);
        assert_eq!(cayley_pair(&z6, &[two], &[]).unwrap_err(), Error::NotGenerating);
        let report = check_og4(&c5).unwrap();
        assert!(!report.quartic && report.vertex_transitive);
    }
}
