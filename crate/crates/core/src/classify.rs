//! Finds independent cyclic normal quotients, reduces to the base pair
//! Γ_{N∩M}, and identifies that pair among the six reference constructions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{double_cover_pair, gamma_pair, gamma_plus_pair, Orientation, Variant};
use crate::group::PermGroup;
use crate::pair::{pair_isomorphic, IsoOptions, OrientedPair, Witness};
use crate::quotient::{cyclic_quotient_census, normal_quotient, CensusRow, QuotientKind};

/// Two independent cyclic quotients, `N` first. N's quotient is unoriented;
/// when both are unoriented and their lengths differ in parity the odd one
/// comes first, otherwise the shorter one.
#[derive(Debug, Clone)]
pub struct QuotientPair {
    pub n: PermGroup,
    pub m: PermGroup,
    pub r: usize,
    pub s: usize,
    pub n_oriented: bool,
    pub m_oriented: bool,
    pub n_id: usize,
    pub m_id: usize,
    /// N ∩ M.
    pub k: PermGroup,
}

fn ordered(a: &CensusRow, b: &CensusRow) -> bool {
    match (a.oriented, b.oriented) {
        (false, true) => true,
        (true, false) => false,
        _ if a.length % 2 != b.length % 2 => a.length % 2 == 1,
        _ => (a.length, a.subgroup_id) <= (b.length, b.subgroup_id),
    }
}

/// Every unordered pair of cyclic normal quotients (with full kernels) that
/// is independent, sorted by `(r, s)`, then pairs with an oriented quotient
/// first, then subgroup ids.
pub fn find_independent_quotients(pair: &OrientedPair, bound: usize) -> Result<Vec<QuotientPair>> {
    let rows = cyclic_quotient_census(pair, bound)?;
    independent_pairs_from_rows(pair, &rows)
}

pub fn independent_pairs_from_rows(pair: &OrientedPair, rows: &[CensusRow]) -> Result<Vec<QuotientPair>> {
    let mut out = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let (a, b) = if ordered(&rows[i], &rows[j]) { (&rows[i], &rows[j]) } else { (&rows[j], &rows[i]) };
            let k = a.kernel.intersection(&b.kernel)?;
            if normal_quotient(pair, &k)?.kind.is_cycle() {
                continue;
            }
            if a.oriented && b.oriented {
                return Err(Error::AssertionFailed(format!(
                    "oriented quotients C{} and C{} are independent",
                    a.length, b.length
                )));
            }
            out.push(QuotientPair {
                n: a.kernel.clone(),
                m: b.kernel.clone(),
                r: a.length,
                s: b.length,
                n_oriented: a.oriented,
                m_oriented: b.oriented,
                n_id: a.subgroup_id,
                m_id: b.subgroup_id,
                k,
            });
        }
    }
    out.sort_by_key(|q| (q.r, q.s, !q.m_oriented, q.n_id, q.m_id));
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub k: PermGroup,
    pub base: OrientedPair,
    pub n_bar: PermGroup,
    pub m_bar: PermGroup,
}

/// Passes to the normal quotient by K = N ∩ M, which must be a normal cover,
/// and checks that the images of N and M meet trivially there.
pub fn reduce_to_base(pair: &OrientedPair, n: &PermGroup, m: &PermGroup) -> Result<Reduction> {
    let k = n.intersection(m)?;
    if k.order()? == 1 {
        return Ok(Reduction { k, base: pair.clone(), n_bar: n.clone(), m_bar: m.clone() });
    }
    if !k.is_semiregular()? {
        return Err(Error::NotACover("N ∩ M is not semiregular".into()));
    }
    let q = normal_quotient(pair, &k).map_err(|e| match e {
        Error::NotACover(_) | Error::NotNormal => Error::NotACover(e.to_string()),
        other => other,
    })?;
    let QuotientKind::Cover(base) = q.kind else {
        return Err(Error::NotACover(format!("quotient by N ∩ M is {}", q.kind.name())));
    };
    let cells = &q.orbit_partition;
    let induce = |g: &PermGroup| -> Result<PermGroup> {
        let gens = g.generators().iter().map(|x| cells.induced(x)).collect::<Result<Vec<_>>>()?;
        PermGroup::new(cells.len(), gens)
    };
    let (n_bar, m_bar) = (induce(n)?, induce(m)?);
    if n_bar.intersection(&m_bar)?.order()? != 1 {
        return Err(Error::NotACover("images of N and M still intersect".into()));
    }
    Ok(Reduction { k, base: *base, n_bar, m_bar })
}

/// One line of the reference table, with the parameters it is read at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LineRef {
    pub line: usize,
    pub r: usize,
    pub s: usize,
}

impl LineRef {
    pub fn description(&self) -> String {
        let (r, s) = (self.r, self.s);
        match self.line {
            1 => format!("Γ({r},{s}) with G({r},{s})"),
            2 => format!("Γ⁺({r},{s}) with G⁺({r},{s})"),
            3 => format!("Γ({r},{s}) with H({r},{s})"),
            4 => format!("Γ({s},{r}) with H({s},{r})"),
            5 => format!("Γ⁺({r},{s}) with H⁺({r},{s})"),
            6 => format!("Γ₂({r},{s}) with G₂({r},{s})"),
            _ => "unknown".into(),
        }
    }

    /// Orientation of Γ_M on this line.
    pub fn m_oriented(&self) -> bool {
        self.line <= 2
    }

    /// Whether `(r, s)` meets the parity condition of the line.
    pub fn parity_ok(&self) -> bool {
        let (ro, so) = (self.r % 2 == 1, self.s % 2 == 1);
        match self.line {
            1 => ro || so,
            2 | 5 => !ro && !so,
            3 => ro && !so,
            4 => !ro && so,
            6 => ro && so,
            _ => false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        let rs = self.r * self.s;
        match self.line {
            2 | 5 => rs / 2,
            6 => 2 * rs,
            _ => rs,
        }
    }

    /// The reference pair of the line.
    pub fn construct(&self) -> Result<OrientedPair> {
        let (r, s) = (self.r, self.s);
        match self.line {
            1 => gamma_pair(r, s, Variant::G, Orientation::Con1),
            2 => gamma_plus_pair(r, s, Variant::G, Orientation::Con1),
            3 => gamma_pair(r, s, Variant::H, Orientation::Con2c),
            4 => gamma_pair(s, r, Variant::H, Orientation::Con2c),
            5 => gamma_plus_pair(r, s, Variant::H, Orientation::Con2c),
            6 => double_cover_pair(r, s),
            l => Err(Error::BadParam(format!("there is no line {l}"))),
        }
    }

    /// Other listings naming the same reference pair: lines 3 and 4 are one
    /// construction with the parameters swapped.
    pub fn equivalents(&self) -> Vec<LineRef> {
        match self.line {
            3 => vec![LineRef { line: 4, r: self.s, s: self.r }],
            4 => vec![LineRef { line: 3, r: self.s, s: self.r }],
            _ => Vec::new(),
        }
    }
}

/// The line matching an orientation pattern, parameters and base order.
pub fn match_line(r: usize, s: usize, m_oriented: bool, base_vertices: usize) -> Result<LineRef> {
    let candidates: &[usize] = if m_oriented { &[1, 2] } else { &[3, 4, 5, 6] };
    let hits: Vec<LineRef> = candidates
        .iter()
        .map(|&line| LineRef { line, r, s })
        .filter(|l| l.parity_ok() && l.vertex_count() == base_vertices)
        .collect();
    match hits.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::NoMatch(format!(
            "no line fits r = {r}, s = {s}, Γ_M {}, {base_vertices} base vertices",
            if m_oriented { "oriented" } else { "unoriented" }
        ))),
        many => Err(Error::NoMatch(format!("{} lines fit; the match is ambiguous", many.len()))),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FoundPair {
    pub r: usize,
    pub s: usize,
    pub n_oriented: bool,
    pub m_oriented: bool,
    pub n_id: usize,
    pub m_id: usize,
    pub n_order: usize,
    pub m_order: usize,
    pub k_order: usize,
    pub base_vertices: usize,
    pub line: LineRef,
    pub equivalent: Vec<LineRef>,
    pub witness: Witness,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionSummary {
    pub k_order: usize,
    pub k_generators: Vec<Vec<u32>>,
    pub base_vertices: usize,
    pub base_group_order: usize,
    pub n_bar_order: usize,
    pub m_bar_order: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub found: Vec<FoundPair>,
    pub reduction: ReductionSummary,
    pub table_line: usize,
    pub parameters: (usize, usize),
    /// The same reference pair under another listing, e.g. line 4 with the
    /// parameters swapped for a line 3 match.
    pub equivalent_listings: Vec<LineRef>,
    /// Every line matched by some independent pair, with its equivalent
    /// listings, in order of first appearance.
    pub matched_lines: Vec<LineRef>,
    /// Bijection from the base pair's vertices to the reference pair's.
    pub witness: Witness,
    pub stabilizer_order: usize,
}

/// Order of the vertex stabiliser, checked to be the same at every vertex.
pub fn stabilizer_order_everywhere(pair: &OrientedPair) -> Result<usize> {
    let g = pair.group();
    let mut order = None;
    for x in 0..pair.graph().n() {
        let o = g.stabilizer(x)?.order()?;
        match order {
            None => order = Some(o),
            Some(p) if p != o => {
                return Err(Error::AssertionFailed(format!("stabiliser orders {p} and {o} differ")))
            }
            _ => {}
        }
    }
    Ok(order.unwrap_or(1))
}

fn classify_found(pair: &OrientedPair, q: &QuotientPair, opts: IsoOptions) -> Result<(FoundPair, Reduction)> {
    let red = reduce_to_base(pair, &q.n, &q.m)?;
    let base_vertices = red.base.graph().n();
    let line = match_line(q.r, q.s, q.m_oriented, base_vertices)?;
    let reference = line.construct().map_err(|e| Error::NoMatch(format!("reference pair: {e}")))?;
    let witness = pair_isomorphic(&red.base, &reference, opts)?
        .ok_or_else(|| Error::NoMatch(format!("no isomorphism to {}", line.description())))?;
    let found = FoundPair {
        r: q.r,
        s: q.s,
        n_oriented: q.n_oriented,
        m_oriented: q.m_oriented,
        n_id: q.n_id,
        m_id: q.m_id,
        n_order: q.n.order()?,
        m_order: q.m.order()?,
        k_order: q.k.order()?,
        base_vertices,
        line,
        equivalent: line.equivalents(),
        witness,
    };
    Ok((found, red))
}

/// Runs the whole pipeline. The first independent pair in sorted order is
/// the canonical one; every pair found is matched and reported.
pub fn classify_independent(pair: &OrientedPair, bound: usize) -> Result<ClassificationReport> {
    classify_independent_with(pair, bound, IsoOptions::default())
}

/// As [`classify_independent`], with the options used for the isomorphism
/// to each reference pair.
pub fn classify_independent_with(pair: &OrientedPair, bound: usize, opts: IsoOptions) -> Result<ClassificationReport> {
    let pairs = find_independent_quotients(pair, bound)?;
    if pairs.is_empty() {
        return Err(Error::PreconditionFailed("the pair has no independent cyclic normal quotients".into()));
    }
    let stabilizer_order = stabilizer_order_everywhere(pair)?;
    if stabilizer_order != 2 {
        return Err(Error::AssertionFailed(format!(
            "vertex stabiliser has order {stabilizer_order}, expected 2"
        )));
    }
    let mut found = Vec::with_capacity(pairs.len());
    let mut canonical = None;
    for q in &pairs {
        let (f, red) = classify_found(pair, q, opts)?;
        if canonical.is_none() {
            canonical = Some(red);
        }
        found.push(f);
    }
    let red = canonical.expect("nonempty");
    let first = &found[0];
    Ok(ClassificationReport {
        reduction: ReductionSummary {
            k_order: red.k.order()?,
            k_generators: red.k.generators().iter().map(|g| g.images().to_vec()).collect(),
            base_vertices: red.base.graph().n(),
            base_group_order: red.base.group().order()?,
            n_bar_order: red.n_bar.order()?,
            m_bar_order: red.m_bar.order()?,
        },
        table_line: first.line.line,
        parameters: (first.r, first.s),
        equivalent_listings: first.equivalent.clone(),
        matched_lines: {
            let mut lines: Vec<LineRef> = Vec::new();
            for l in found.iter().flat_map(|f| std::iter::once(f.line).chain(f.equivalent.iter().copied())) {
                if !lines.contains(&l) {
                    lines.push(l);
                }
            }
            lines
        },
        witness: first.witness.clone(),
        stabilizer_order,
        found,
    })
}
