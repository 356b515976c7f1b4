//! Weak metacirculant structure relative to a pair (ρ, λ), and whether the
//! quotient by the ρ-cycles is a normal quotient.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{gamma_pair, gamma_plus_pair, restrict, Grid, Orientation, Variant};
use crate::group::PermGroup;
use crate::pair::OrientedPair;
use crate::partition::Partition;
use crate::perm::{gcd, Perm};
use crate::quotient::{normal_quotient, QuotientKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RhoStatus {
    NotNormal,
    NormalUnorientedCycle,
    NormalOrientedCycle,
    NormalNoncycle,
}

impl RhoStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RhoStatus::NotNormal => "not_normal",
            RhoStatus::NormalUnorientedCycle => "normal_unoriented_cycle",
            RhoStatus::NormalOrientedCycle => "normal_oriented_cycle",
            RhoStatus::NormalNoncycle => "normal_noncycle",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RhoQuotient {
    pub status: RhoStatus,
    /// Length of the cycle when the status is a cycle.
    pub length: Option<usize>,
    pub cells: usize,
    pub g_invariant: bool,
    /// Order of the kernel of G on the ρ-cycles, when they are G-invariant.
    pub kernel_order: Option<usize>,
    pub kernel_transitive_on_cells: bool,
}

/// Γ_R for R = ⟨ρ⟩ is a normal quotient exactly when the ρ-cycles form a
/// G-invariant partition on each of whose cells the kernel is transitive.
pub fn rho_quotient_status(pair: &OrientedPair, rho: &Perm) -> Result<RhoQuotient> {
    let g = pair.group();
    let partition = Partition::from_cells(g.degree(), rho.cycles())?;
    let cells = partition.len();
    let not_normal = |g_invariant, kernel_order| RhoQuotient {
        status: RhoStatus::NotNormal,
        length: None,
        cells,
        g_invariant,
        kernel_order,
        kernel_transitive_on_cells: false,
    };
    if !g.generators().iter().all(|x| partition.is_invariant_under(x)) {
        return Ok(not_normal(false, None));
    }
    let kernel = g.kernel_on_partition(&partition)?;
    if kernel.orbits() != partition {
        return Ok(not_normal(true, Some(kernel.order()?)));
    }
    let q = normal_quotient(pair, &kernel)?;
    let (status, length) = match q.kind {
        QuotientKind::CycleOriented(m) => (RhoStatus::NormalOrientedCycle, Some(m)),
        QuotientKind::CycleUnoriented(m) => (RhoStatus::NormalUnorientedCycle, Some(m)),
        _ => (RhoStatus::NormalNoncycle, None),
    };
    Ok(RhoQuotient {
        status,
        length,
        cells,
        g_invariant: true,
        kernel_order: Some(kernel.order()?),
        kernel_transitive_on_cells: true,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct MetaReport {
    pub is_weak: bool,
    /// Number of ρ-cycles.
    pub m: usize,
    /// Length of the ρ-cycles (0 when they differ).
    pub n: usize,
    /// The e with λ⁻¹ρλ = ρ^e and gcd(e, n) = 1.
    pub r_exp: Option<usize>,
    pub is_metacirculant: bool,
    pub rho_semiregular: bool,
    pub lambda_transitive_on_cycles: bool,
    pub h_vertex_transitive: bool,
    pub h_regular: bool,
    pub lambda_m_fixes_vertex: bool,
    pub rho_quotient: RhoQuotient,
    pub failures: Vec<String>,
}

/// Checks every clause of the weak (m,n)-metacirculant definition for
/// (ρ, λ) and reports the ρ-quotient status alongside.
pub fn check_weak_metacirculant(pair: &OrientedPair, rho: &Perm, lambda: &Perm) -> Result<MetaReport> {
    let g = pair.group();
    let v = pair.graph().n();
    if rho.degree() != v || lambda.degree() != v {
        return Err(Error::DegreeMismatch { expected: v, found: rho.degree().max(lambda.degree()) });
    }
    let mut failures = Vec::new();
    if !g.contains(rho)? {
        failures.push("ρ is not in G".to_string());
    }
    if !g.contains(lambda)? {
        failures.push("λ is not in G".to_string());
    }
    let cycles = rho.cycles();
    let m = cycles.len();
    let n = if cycles.iter().all(|c| c.len() == cycles[0].len()) { cycles[0].len() } else { 0 };
    let rho_semiregular = n > 0 && n == rho.order();
    if !rho_semiregular {
        failures.push("ρ does not have cycles of one common length".into());
    }
    let partition = Partition::from_cells(v, cycles)?;
    let lambda_transitive_on_cycles = match partition.induced(lambda) {
        Ok(on_cells) => on_cells.cycles().len() == 1,
        Err(_) => false,
    };
    if !lambda_transitive_on_cycles {
        failures.push("⟨λ⟩ does not permute the ρ-cycles transitively".into());
    }
    let conj = rho.conjugate_by(lambda);
    let r_exp = (0..n.max(1)).find(|&e| gcd(e, n) == 1 && rho.pow(e as i64) == conj);
    if r_exp.is_none() {
        failures.push("λ⁻¹ρλ is not a power ρ^e with gcd(e, n) = 1".into());
    }
    let h = PermGroup::new(v, vec![rho.clone(), lambda.clone()])?;
    let h_vertex_transitive = h.is_transitive();
    let h_regular = h_vertex_transitive && h.order()? == v;
    let lambda_m_fixes_vertex = lambda.pow(m as i64).has_fixed_point();
    let is_weak = failures.is_empty();
    Ok(MetaReport {
        is_weak,
        m,
        n,
        r_exp,
        is_metacirculant: is_weak && lambda_m_fixes_vertex,
        rho_semiregular,
        lambda_transitive_on_cycles,
        h_vertex_transitive,
        h_regular,
        lambda_m_fixes_vertex,
        rho_quotient: rho_quotient_status(pair, rho)?,
        failures,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CorollaryReport {
    pub line: usize,
    pub r: usize,
    pub s: usize,
    pub m: usize,
    pub n: usize,
    pub rho: String,
    pub lambda: String,
    pub meta: MetaReport,
}

/// Builds the pair of `line` (1: Γ(r,s)/G(r,s), 2: Γ⁺(r,s)/G⁺(r,s)) and
/// checks it is a weak (s, r)- or (s, r/2)-metacirculant relative to (μ, ν)
/// or (μ², μν), with the ρ-cycles giving an oriented cyclic normal quotient.
pub fn verify_corollary_wm(r: usize, s: usize, line: usize) -> Result<CorollaryReport> {
    let grid = Grid::new(r, s);
    let (pair, rho, lambda, n_expected, names) = match line {
        1 => {
            if r.is_multiple_of(2) && s.is_multiple_of(2) {
                return Err(Error::PreconditionFailed(format!("line 1 needs r or s odd, got ({r},{s})")));
            }
            let pair = gamma_pair(r, s, Variant::G, Orientation::Con1)?;
            (pair, grid.mu(), grid.nu(), r, ("μ", "ν"))
        }
        2 => {
            if !r.is_multiple_of(2) || !s.is_multiple_of(2) {
                return Err(Error::PreconditionFailed(format!("line 2 needs r and s even, got ({r},{s})")));
            }
            let pair = gamma_plus_pair(r, s, Variant::G, Orientation::Con1)?;
            let vertices = grid.plus_vertices();
            let rho = restrict(&grid.mu().pow(2), &vertices)?;
            let lambda = restrict(&grid.mu().compose(&grid.nu()), &vertices)?;
            (pair, rho, lambda, r / 2, ("μ²", "μν"))
        }
        l => return Err(Error::BadParam(format!("the metacirculant table has lines 1 and 2, not {l}"))),
    };
    let meta = check_weak_metacirculant(&pair, &rho, &lambda)?;
    let fail = |clause: String| Err(Error::AssertionFailed(clause));
    if !meta.is_weak {
        return fail(format!("not a weak metacirculant: {}", meta.failures.join("; ")));
    }
    if meta.m != s {
        return fail(format!("expected {s} ρ-cycles, found {}", meta.m));
    }
    if meta.n != n_expected {
        return fail(format!("expected ρ-cycles of length {n_expected}, found {}", meta.n));
    }
    if meta.rho_quotient.status != RhoStatus::NormalOrientedCycle || meta.rho_quotient.length != Some(s) {
        return fail(format!(
            "ρ-quotient is {} rather than an oriented C{s}",
            meta.rho_quotient.status.as_str()
        ));
    }
    Ok(CorollaryReport {
        line,
        r,
        s,
        m: meta.m,
        n: meta.n,
        rho: names.0.into(),
        lambda: names.1.into(),
        meta,
    })
}

/// All (ρ, λ) in G × G relative to which Γ is a weak metacirculant with at
/// least three ρ-cycles. Exhaustive, so only for small groups.
pub fn weak_metacirculant_pairs(pair: &OrientedPair) -> Result<Vec<(Perm, Perm, MetaReport)>> {
    let elements = pair.group().elements()?.to_vec();
    let mut out = Vec::new();
    for rho in &elements {
        let cycles = rho.cycles();
        let len = cycles[0].len();
        if cycles.len() < 3 || cycles.iter().any(|c| c.len() != len) {
            continue;
        }
        for lambda in &elements {
            let report = check_weak_metacirculant(pair, rho, lambda)?;
            if report.is_weak {
                out.push((rho.clone(), lambda.clone(), report));
            }
        }
    }
    Ok(out)
}
