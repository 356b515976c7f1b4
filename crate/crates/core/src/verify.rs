//! Named verification suites. Each suite is a list of claims, and each claim
//! either holds or carries the reason it failed.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use serde::Serialize;

use crate::classify::{
    classify_independent, find_independent_quotients, reduce_to_base, stabilizer_order_everywhere, LineRef,
};
use crate::error::{Error, Result};
use crate::families::{
    double_cover_pair, double_cover_pair_unchecked, gamma_pair, gamma_plus_pair, lex_cycle_pair, lex_subgroup,
    restrict, DoubleGrid, FamilySpec, Grid, Orientation, Variant,
};
use crate::group::{PermGroup, DEFAULT_ORDER_BOUND};
use crate::metacirc::{check_weak_metacirculant, verify_corollary_wm, RhoStatus};
use crate::oracle::{normal_subgroups_oracle, ORACLE_LIMIT};
use crate::pair::{check_og4, pair_isomorphic, verify_witness, IsoOptions, OrientedPair};
use crate::partition::Partition;
use crate::perm::{gcd, lcm, Perm};
use crate::quotient::{
    cyclic_quotient_census, independent, normal_quotient, quotient_action_signature, quotient_shape, QuotientKind,
    Shape,
};

pub const SUITES: [&str; 11] = [
    "theorem1a",
    "theorem1b",
    "theorem1c",
    "table1",
    "remark-a",
    "lemma-grid",
    "lemma22",
    "monomorphism",
    "ex4-trichotomy",
    "corollary-wm",
    "oracle-equivalence",
];

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub claims: Vec<Claim>,
    pub millis: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.claims.is_empty() && self.claims.iter().all(|c| c.passed)
    }
}

fn claim(claims: &mut Vec<Claim>, name: impl Into<String>, f: impl FnOnce() -> Result<String>) {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(d) => (true, d),
        Err(e) => (false, e.to_string()),
    };
    claims.push(Claim { name: name.into(), passed, detail, millis: start.elapsed().as_millis() });
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::AssertionFailed(msg()))
    }
}

/// Runs one suite by name; `table1-roundtrip` is accepted for `table1`.
pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let start = Instant::now();
    let claims = match name {
        "theorem1a" => theorem1a(),
        "theorem1b" => theorem1b(),
        "theorem1c" => theorem1c(),
        "table1" | "table1-roundtrip" => table1(),
        "remark-a" => remark_a(),
        "lemma-grid" => lemma_grid(),
        "lemma22" => lemma22(),
        "monomorphism" => monomorphism(),
        "ex4-trichotomy" => ex4_trichotomy(),
        "corollary-wm" => corollary_wm(),
        "oracle-equivalence" => oracle_equivalence(),
        other => {
            return Err(Error::BadParam(format!("unknown suite '{other}'; known suites: {}", SUITES.join(", "))))
        }
    };
    let suite = if name == "table1-roundtrip" { "table1" } else { name };
    Ok(SuiteReport { suite: suite.into(), claims, millis: start.elapsed().as_millis() })
}

pub fn run_all() -> Vec<SuiteReport> {
    SUITES.iter().map(|s| run_suite(s).expect("listed suites exist")).collect()
}

fn theorem1a() -> Vec<Claim> {
    let mut claims = Vec::new();
    claim(&mut claims, "lex(9) has exactly the cyclic quotients C9 and C3, both oriented", || {
        let pair = lex_cycle_pair(9)?;
        let report = check_og4(&pair)?;
        ensure(report.member(), || "lex(9) is not an OG(4) member".into())?;
        ensure(report.group_order == 4608, || format!("|G| = {}, expected 4608", report.group_order))?;
        let normals = pair.group().normal_subgroups_bounded(DEFAULT_ORDER_BOUND)?;
        for n in normals.iter().filter(|n| n.order().map(|o| o > 1).unwrap_or(true)) {
            let q = normal_quotient(&pair, n)?;
            let ok = matches!(q.kind, QuotientKind::K1 | QuotientKind::K2 | QuotientKind::CycleOriented(_));
            ensure(ok, || format!("a nontrivial normal subgroup gives {}", q.kind.name()))?;
        }
        let rows = crate::quotient::census_from_normals(&pair, &normals)?;
        let shape: Vec<(usize, bool, bool)> = rows.iter().map(|r| (r.length, r.oriented, r.maximal)).collect();
        ensure(shape == vec![(9, true, true), (3, true, false)], || format!("census rows {shape:?}"))?;
        for (row, c) in rows.iter().zip([9, 3]) {
            let expected = lex_subgroup(9, c)?.orbits();
            ensure(row.partition == expected, || format!("C{c} row does not have the orbits of N({c})"))?;
        }
        Ok(format!("{} normal subgroups; rows C9 (maximal), C3", normals.len()))
    });
    claims
}

/// Membership in N(c) for the wreath product on Z_r × Z_2 encoded as 2i+j:
/// blocks {2i, 2i+1} are preserved and shifted by a multiple of c.
fn in_lex_subgroup(g: &Perm, r: usize, c: usize) -> bool {
    let shift = g.image(0) / 2;
    shift.is_multiple_of(c) && (0..2 * r).all(|x| g.image(x) / 2 == (x / 2 + shift) % r)
}

fn theorem1b() -> Vec<Claim> {
    let mut claims = Vec::new();
    let r = 15;
    for c in [3usize, 5] {
        claim(&mut claims, format!("lex(15) has an oriented normal quotient C{c} from N({c})"), || {
            let pair = lex_cycle_pair(r)?;
            let n = lex_subgroup(r, c)?;
            let partition = n.orbits();
            ensure(partition.len() == c, || format!("N({c}) has {} orbits", partition.len()))?;
            for g in pair.group().generators() {
                ensure(partition.is_invariant_under(g), || format!("orbits of N({c}) are not invariant under {g}"))?;
                for x in n.generators() {
                    ensure(in_lex_subgroup(x, r, c), || format!("generator {x} is outside N({c})"))?;
                    let y = x.conjugate_by(g);
                    ensure(in_lex_subgroup(&y, r, c), || format!("N({c}) is not normalised by {g}"))?;
                }
            }
            let (shape, ell) = quotient_shape(pair.graph(), &partition)?;
            ensure(shape == Shape::Cycle { length: c, oriented: true }, || format!("quotient shape {shape:?}"))?;
            Ok(format!("oriented C{c}, ℓ = {ell}; checked on orbits and generators only"))
        });
    }
    claim(&mut claims, "the lengths 3 and 5 are coprime", || {
        ensure(gcd(3, 5) == 1, || "gcd(3,5) ≠ 1".into())?;
        Ok("gcd = 1".into())
    });
    claims
}

fn theorem1c() -> Vec<Claim> {
    let mut claims = Vec::new();
    claim(&mut claims, "Γ(15,15) has oriented C3, C5 and unoriented C3, C5", || {
        let pair = gamma_pair(15, 15, Variant::G, Orientation::Con1)?;
        ensure(check_og4(&pair)?.member(), || "not an OG(4) member".into())?;
        let rows = cyclic_quotient_census(&pair, DEFAULT_ORDER_BOUND)?;
        let has = |len: usize, oriented: bool| rows.iter().any(|r| r.length == len && r.oriented == oriented);
        for (len, oriented) in [(3, true), (5, true), (3, false), (5, false)] {
            ensure(has(len, oriented), || {
                format!("no {} C{len}", if oriented { "oriented" } else { "unoriented" })
            })?;
        }
        let (oriented, unoriented) = ([3usize, 5], [3usize, 5]);
        ensure(gcd(oriented[0], oriented[1]) == 1 && gcd(unoriented[0], unoriented[1]) == 1, || {
            "lengths are not pairwise coprime".into()
        })?;
        let list: Vec<String> =
            rows.iter().map(|r| format!("C{}{}", r.length, if r.oriented { "o" } else { "u" })).collect();
        Ok(format!("census {}", list.join(" ")))
    });
    claims
}

fn table1_pattern(line: usize) -> (bool, bool) {
    (false, line <= 2)
}

fn table1() -> Vec<Claim> {
    let mut claims = Vec::new();
    let lines = [(1, 3, 3), (2, 4, 4), (3, 3, 4), (4, 4, 3), (5, 4, 4), (6, 3, 3)];
    for (line, r, s) in lines {
        let reference = LineRef { line, r, s };
        claim(&mut claims, format!("line {line} at ({r},{s}) round-trips"), || {
            let pair = reference.construct()?;
            ensure(check_og4(&pair)?.member(), || "not an OG(4) member".into())?;
            let stab = stabilizer_order_everywhere(&pair)?;
            ensure(stab == 2, || format!("stabiliser order {stab}"))?;
            let found = find_independent_quotients(&pair, DEFAULT_ORDER_BOUND)?;
            ensure(!found.is_empty(), || "no independent cyclic quotients".into())?;
            let pattern = table1_pattern(line);
            ensure(found.iter().any(|q| (q.n_oriented, q.m_oriented) == pattern), || {
                format!("no independent pair with orientation pattern {pattern:?}")
            })?;
            let report = classify_independent(&pair, DEFAULT_ORDER_BOUND)?;
            let same = |l: &LineRef| l.line == line && (l.r, l.s) == (r, s);
            let direct = LineRef { line: report.table_line, r: report.parameters.0, s: report.parameters.1 };
            ensure(report.matched_lines.iter().any(same), || {
                format!("classified as {}", direct.description())
            })?;
            let red = reduce_to_base(&pair, &found[0].n, &found[0].m)?;
            let target = direct.construct()?;
            ensure(verify_witness(&red.base, &target, &report.witness)?, || "witness does not verify".into())?;
            let via = if same(&direct) {
                "directly".to_string()
            } else {
                format!("as a listing of line {} at {:?}", direct.line, report.parameters)
            };
            Ok(format!("{} found pair(s); matched {via}", report.found.len()))
        });
    }
    claim(&mut claims, "every reference pair is isomorphic to its reversal", || {
        for (line, r, s) in lines {
            let pair = LineRef { line, r, s }.construct()?;
            let rev = pair.with_reversed_delta();
            let w = pair_isomorphic(&pair, &rev, IsoOptions { strict_delta: true })?
                .ok_or_else(|| Error::AssertionFailed(format!("line {line}: no isomorphism to the reversal")))?;
            ensure(verify_witness(&pair, &rev, &w)?, || format!("line {line}: witness fails"))?;
        }
        Ok("6 witnesses".into())
    });
    claims
}

fn remark_a() -> Vec<Claim> {
    let mut claims = Vec::new();
    claim(&mut claims, "Γ(3,4)/G(3,4) ≅ Γ⁺(6,4)/G⁺(6,4)", || {
        let a = gamma_pair(3, 4, Variant::G, Orientation::Con1)?;
        let b = gamma_plus_pair(6, 4, Variant::G, Orientation::Con1)?;
        let w = pair_isomorphic(&a, &b, IsoOptions::default())?
            .ok_or_else(|| Error::AssertionFailed("no isomorphism found".into()))?;
        ensure(verify_witness(&a, &b, &w)?, || "witness does not verify".into())?;
        Ok(format!("witness {:?}{}", w.map, if w.reversed { " (reversed)" } else { "" }))
    });
    claim(&mut claims, "classifying Γ(3,4)/G(3,4) also finds line 2 at (6,4)", || {
        let pair = gamma_pair(3, 4, Variant::G, Orientation::Con1)?;
        let report = classify_independent(&pair, DEFAULT_ORDER_BOUND)?;
        let lines: Vec<String> = report.found.iter().map(|f| f.line.description()).collect();
        ensure(report.found.iter().any(|f| f.line == LineRef { line: 2, r: 6, s: 4 }), || {
            format!("found {}", lines.join("; "))
        })?;
        Ok(lines.join("; "))
    });
    claims
}

/// Expected quotient of one partition: length, orientation, and optionally
/// the group its kernel must equal.
struct Expect {
    label: &'static str,
    partition: Partition,
    length: usize,
    oriented: bool,
    kernel: Option<PermGroup>,
}

fn check_expect(pair: &OrientedPair, e: &Expect) -> Result<()> {
    let g = pair.group();
    let kernel = g.kernel_on_partition(&e.partition)?;
    ensure(kernel.orbits() == e.partition, || format!("{}: kernel orbits differ from the cells", e.label))?;
    let q = normal_quotient(pair, &kernel)?;
    ensure(q.kind.cycle() == Some((e.length, e.oriented)), || {
        format!("{}: got {}, expected C{} {}", e.label, q.kind.name(), e.length, if e.oriented { "oriented" } else { "unoriented" })
    })?;
    if e.oriented {
        ensure(g.stabilizer(0)?.is_subgroup_of(&kernel)?, || format!("{}: kernel misses G_x", e.label))?;
    } else {
        ensure(kernel.is_semiregular()?, || format!("{}: kernel is not semiregular", e.label))?;
    }
    if let Some(k) = &e.kernel {
        ensure(kernel.same_elements(k)?, || format!("{}: kernel is not the named subgroup", e.label))?;
        let q = normal_quotient(pair, k)?;
        ensure(q.kind.cycle() == Some((e.length, e.oriented)), || format!("{}: named subgroup gives {}", e.label, q.kind.name()))?;
    }
    Ok(())
}

fn half_transitive_on(graph: &crate::graph::OrientedGraph, gens: Vec<Perm>) -> Result<bool> {
    let group = PermGroup::new(graph.n(), gens)?;
    match OrientedPair::with_canonical_delta(graph, group) {
        Ok(p) => Ok(check_og4(&p)?.half_transitive()),
        Err(Error::ArcTransitive) | Err(Error::NotHalfTransitive(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

fn grid_checks(r: usize, s: usize) -> Result<String> {
    let grid = Grid::new(r, s);
    let graph = grid.graph()?;
    let (r_odd, s_odd) = (r % 2 == 1, s % 2 == 1);
    ensure(graph.is_connected() == (r_odd || s_odd), || "connectivity".into())?;
    ensure(graph.is_bipartite() == (!r_odd || !s_odd), || "bipartiteness".into())?;
    ensure(half_transitive_on(&graph, grid.generators(Variant::G))?, || "G not half-transitive".into())?;
    if !s_odd {
        ensure(half_transitive_on(&graph, grid.generators(Variant::H))?, || "H not half-transitive".into())?;
    }
    let stab = |p: &OrientedPair| p.group().stabilizer(0);
    let by = |n: usize, f: &dyn Fn(usize) -> i64| Partition::from_labels((0..n).map(f));
    let mut checked = Vec::new();
    if r_odd || s_odd {
        let pair = gamma_pair(r, s, Variant::G, Orientation::Con1)?;
        ensure(check_og4(&pair)?.member(), || "Γ/G not a member".into())?;
        ensure(pair.group().order()? == 2 * r * s, || "|G| ≠ 2rs".into())?;
        ensure(stab(&pair)?.same_elements(&PermGroup::new(grid.n(), vec![grid.sigma()])?)?, || "G_x ≠ ⟨σ⟩".into())?;
        let mut expects = vec![
            Expect {
                label: "G rows",
                partition: by(grid.n(), &|x| grid.coords(x).0),
                length: r,
                oriented: false,
                kernel: Some(PermGroup::new(grid.n(), vec![grid.nu()])?),
            },
            Expect {
                label: "G columns",
                partition: by(grid.n(), &|x| grid.coords(x).1),
                length: s,
                oriented: true,
                kernel: Some(PermGroup::new(grid.n(), vec![grid.mu(), grid.sigma()])?),
            },
        ];
        if !s_odd {
            expects.push(Expect {
                label: "G rows split by column parity",
                partition: by(grid.n(), &|x| {
                    let (i, j) = grid.coords(x);
                    2 * i + j % 2
                }),
                length: 2 * r,
                oriented: false,
                kernel: Some(PermGroup::new(grid.n(), vec![grid.nu().pow(2)])?),
            });
        }
        family_checks(&pair, &expects)?;
        checked.push("Γ/G");
    }
    if !s_odd && r_odd {
        let pair = gamma_pair(r, s, Variant::H, Orientation::Con2c)?;
        ensure(check_og4(&pair)?.member(), || "Γ/H not a member".into())?;
        ensure(pair.group().order()? == 2 * r * s, || "|H| ≠ 2rs".into())?;
        ensure(stab(&pair)?.same_elements(&PermGroup::new(grid.n(), vec![grid.tau()])?)?, || "H_x ≠ ⟨τ⟩".into())?;
        let n_prime = vec![grid.nu().pow(2), grid.tau().compose(&grid.sigma()).compose(&grid.nu())];
        let expects = [
            Expect {
                label: "H rows",
                partition: by(grid.n(), &|x| grid.coords(x).0),
                length: r,
                oriented: false,
                kernel: Some(PermGroup::new(grid.n(), n_prime)?),
            },
            Expect {
                label: "H columns",
                partition: by(grid.n(), &|x| grid.coords(x).1),
                length: s,
                oriented: false,
                kernel: Some(PermGroup::new(grid.n(), vec![grid.mu()])?),
            },
        ];
        family_checks(&pair, &expects)?;
        checked.push("Γ/H");
    }
    if !r_odd && !s_odd {
        let plus = grid.plus_vertices();
        let components: BTreeSet<Vec<usize>> = graph.components().into_iter().collect();
        let rest: Vec<usize> = (0..grid.n()).filter(|x| !plus.contains(x)).collect();
        ensure(components == [plus.clone(), rest].into_iter().collect(), || "components are not X⁺ and its complement".into())?;
        let (sub, _) = graph.induced(&plus)?;
        ensure(sub.is_connected() && sub.is_bipartite(), || "Γ⁺ not connected and bipartite".into())?;
        let coords = |k: usize| grid.coords(plus[k]);
        let m = plus.len();
        for variant in [Variant::G, Variant::H] {
            let gens = grid.plus_generators(variant).iter().map(|g| restrict(g, &plus)).collect::<Result<Vec<_>>>()?;
            ensure(half_transitive_on(&sub, gens)?, || format!("{variant:?}⁺ not half-transitive"))?;
            let orientation = if variant == Variant::G { Orientation::Con1 } else { Orientation::Con2c };
            let pair = gamma_plus_pair(r, s, variant, orientation)?;
            ensure(check_og4(&pair)?.member(), || format!("Γ⁺/{variant:?}⁺ not a member"))?;
            ensure(pair.group().order()? == r * s, || format!("|{variant:?}⁺| ≠ rs"))?;
            let x_stab = if variant == Variant::G { grid.sigma() } else { grid.tau() };
            ensure(stab(&pair)?.same_elements(&PermGroup::new(m, vec![restrict(&x_stab, &plus)?])?)?, || {
                format!("{variant:?}⁺ stabiliser is not the expected involution")
            })?;
            let rows_kernel = PermGroup::new(m, vec![restrict(&grid.nu().pow(2), &plus)?])?;
            let cols_kernel = if variant == Variant::G {
                PermGroup::new(m, vec![restrict(&grid.mu().pow(2), &plus)?, restrict(&grid.sigma(), &plus)?])?
            } else {
                PermGroup::new(m, vec![restrict(&grid.mu().pow(2), &plus)?])?
            };
            let expects = [
                Expect {
                    label: "plus rows",
                    partition: by(m, &|k| coords(k).0),
                    length: r,
                    oriented: false,
                    kernel: Some(rows_kernel),
                },
                Expect {
                    label: "plus columns",
                    partition: by(m, &|k| coords(k).1),
                    length: s,
                    oriented: variant == Variant::G,
                    kernel: Some(cols_kernel),
                },
            ];
            family_checks(&pair, &expects)?;
        }
        checked.push("Γ⁺/G⁺, Γ⁺/H⁺");
    }
    if r_odd && s_odd {
        let d = DoubleGrid::new(r, s);
        let pair = double_cover_pair(r, s)?;
        ensure(check_og4(&pair)?.member(), || "Γ₂/G₂ not a member".into())?;
        ensure(pair.group().order()? == 4 * r * s, || "|G₂| ≠ 4rs".into())?;
        ensure(stab(&pair)?.same_elements(&PermGroup::new(d.n(), vec![d.tau()])?)?, || "G₂ stabiliser ≠ ⟨τ⟩".into())?;
        let expects = [
            Expect {
                label: "double rows",
                partition: by(d.n(), &|x| d.coords(x).0),
                length: r,
                oriented: false,
                kernel: Some(PermGroup::new(d.n(), vec![d.nu(), d.sigma()])?),
            },
            Expect {
                label: "double columns",
                partition: by(d.n(), &|x| d.coords(x).1),
                length: s,
                oriented: false,
                kernel: Some(PermGroup::new(d.n(), vec![d.mu(), d.sigma().compose(&d.tau())])?),
            },
        ];
        family_checks(&pair, &expects)?;
        checked.push("Γ₂/G₂");
    } else {
        ensure(matches!(double_cover_pair_unchecked(r, s), Err(Error::Disconnected(_))), || {
            "Γ₂ with an even parameter should be disconnected".into()
        })?;
    }
    Ok(checked.join(", "))
}

/// The expected quotients, their independence, and a full census, which runs
/// the ℓ-constancy and kernel checks on every normal subgroup.
fn family_checks(pair: &OrientedPair, expects: &[Expect]) -> Result<()> {
    for e in expects {
        check_expect(pair, e)?;
    }
    let g = pair.group();
    let rows = g.kernel_on_partition(&expects[0].partition)?;
    let cols = g.kernel_on_partition(&expects[1].partition)?;
    ensure(independent(pair, &rows, &cols)?.independent, || "rows and columns are not independent".into())?;
    cyclic_quotient_census(pair, DEFAULT_ORDER_BOUND)?;
    Ok(())
}

fn lemma_grid() -> Vec<Claim> {
    let mut claims = Vec::new();
    for r in 3..=8 {
        claim(&mut claims, format!("grid r = {r}, s = 3..8"), || {
            let mut parts = Vec::new();
            for s in 3..=8 {
                let done = grid_checks(r, s).map_err(|e| Error::AssertionFailed(format!("({r},{s}): {e}")))?;
                parts.push(format!("({r},{s}) {done}"));
            }
            Ok(parts.join("; "))
        });
    }
    claims
}

fn oriented_pairs_never_independent(pair: &OrientedPair) -> Result<String> {
    let g = pair.group();
    let normals = g.normal_subgroups_bounded(DEFAULT_ORDER_BOUND)?;
    // Independence depends only on the orbit kernels, so cache by partition.
    let mut kernels: HashMap<Partition, (PermGroup, Option<(usize, bool)>)> = HashMap::new();
    let mut oriented = Vec::new();
    for n in &normals {
        let p = n.orbits();
        if !kernels.contains_key(&p) {
            let q = normal_quotient(pair, n)?;
            kernels.insert(p.clone(), (q.kernel.clone(), q.kind.cycle()));
        }
        if let Some((len, true)) = kernels[&p].1 {
            oriented.push((p, len));
        }
    }
    let mut cache: HashMap<(Partition, Partition), ()> = HashMap::new();
    let mut pairs = 0usize;
    for (pn, r) in &oriented {
        for (pm, s) in &oriented {
            pairs += 1;
            if cache.contains_key(&(pn.clone(), pm.clone())) {
                continue;
            }
            let (kn, km) = (&kernels[pn].0, &kernels[pm].0);
            let k = kn.intersection(km)?;
            let q = normal_quotient(pair, &k)?;
            let Some((t, true)) = q.kind.cycle() else {
                return Err(Error::AssertionFailed(format!("C{r} and C{s} meet in {}", q.kind.name())));
            };
            ensure(t % lcm(*r, *s) == 0, || format!("C{r} and C{s} meet in C{t}"))?;
            ensure(!independent(pair, kn, km)?.independent, || format!("C{r} and C{s} are independent"))?;
            cache.insert((pn.clone(), pm.clone()), ());
        }
    }
    Ok(format!("{} normal subgroups, {pairs} oriented pairs, {} distinct", normals.len(), cache.len()))
}

fn lemma22() -> Vec<Claim> {
    let mut claims = Vec::new();
    claim(&mut claims, "Γ(15,15)/G: oriented cyclic quotients are never independent", || {
        oriented_pairs_never_independent(&gamma_pair(15, 15, Variant::G, Orientation::Con1)?)
    });
    claim(&mut claims, "lex(5): oriented cyclic quotients are never independent", || {
        oriented_pairs_never_independent(&lex_cycle_pair(5)?)
    });
    claims
}

fn monomorphism() -> Vec<Claim> {
    let mut claims = Vec::new();
    let g33 = Grid::new(3, 3);
    let g34 = Grid::new(3, 4);
    let d33 = DoubleGrid::new(3, 3);
    type Case = (&'static str, Result<OrientedPair>, Vec<Perm>, Vec<Perm>, usize, bool);
    let cases: Vec<Case> = vec![
        (
            "Γ(3,3)/G(3,3) embeds in D6 × Z3",
            gamma_pair(3, 3, Variant::G, Orientation::Con1),
            vec![g33.nu()],
            vec![g33.mu(), g33.sigma()],
            3,
            true,
        ),
        (
            "Γ(3,4)/H(3,4) embeds in D6 × D8",
            gamma_pair(3, 4, Variant::H, Orientation::Con2c),
            vec![g34.nu().pow(2), g34.tau().compose(&g34.sigma()).compose(&g34.nu())],
            vec![g34.mu()],
            8,
            false,
        ),
        (
            "Γ₂(3,3)/G₂(3,3) embeds in D6 × D6",
            double_cover_pair(3, 3),
            vec![d33.nu(), d33.sigma()],
            vec![d33.mu(), d33.sigma().compose(&d33.tau())],
            6,
            false,
        ),
    ];
    for (name, pair, n, m, second, m_oriented) in cases {
        claim(&mut claims, name, || {
            let pair = pair?;
            let deg = pair.graph().n();
            let sig = quotient_action_signature(&pair, &PermGroup::new(deg, n)?, &PermGroup::new(deg, m)?)?;
            ensure(sig.injective, || "the map is not injective".into())?;
            ensure(sig.first_surjective && sig.first_image_order == 2 * sig.r, || {
                format!("first image has order {}", sig.first_image_order)
            })?;
            ensure(sig.m_oriented == m_oriented, || "orientation of Γ_M".into())?;
            ensure(sig.second_surjective && sig.second_image_order == second, || {
                format!("second image has order {}", sig.second_image_order)
            })?;
            Ok(format!(
                "|G| = {}, images of order {} and {}",
                sig.images.len(),
                sig.first_image_order,
                sig.second_image_order
            ))
        });
    }
    claims
}

fn ex4_trichotomy() -> Vec<Claim> {
    let mut claims = Vec::new();
    for r in [3usize, 5, 7] {
        claim(&mut claims, format!("Γ({r},{r}): the three choices give the three statuses"), || {
            let pair = gamma_pair(r, r, Variant::G, Orientation::Con1)?;
            let g = Grid::new(r, r);
            let (mu, nu) = (g.mu(), g.nu());
            let choices = [
                (mu.compose(&nu), mu.clone(), RhoStatus::NotNormal),
                (nu.clone(), mu.clone(), RhoStatus::NormalUnorientedCycle),
                (mu.clone(), nu.clone(), RhoStatus::NormalOrientedCycle),
            ];
            let mut seen = Vec::new();
            for (rho, lambda, expected) in choices {
                let rep = check_weak_metacirculant(&pair, &rho, &lambda)?;
                ensure(rep.is_metacirculant && rep.h_regular, || format!("({r},{r}) {}: {:?}", expected.as_str(), rep.failures))?;
                ensure((rep.m, rep.n) == (r, r), || format!("(m, n) = ({}, {})", rep.m, rep.n))?;
                ensure(rep.rho_quotient.status == expected, || {
                    format!("expected {}, got {}", expected.as_str(), rep.rho_quotient.status.as_str())
                })?;
                seen.push(rep.rho_quotient.status.as_str());
            }
            Ok(seen.join(", "))
        });
    }
    claims
}

fn corollary_wm() -> Vec<Claim> {
    let mut claims = Vec::new();
    let cases = [(3, 3, 1), (3, 4, 1), (5, 3, 1), (4, 4, 2), (6, 4, 2)];
    for (r, s, line) in cases {
        claim(&mut claims, format!("line {line} at ({r},{s}) is a weak metacirculant"), || {
            let rep = verify_corollary_wm(r, s, line)?;
            let n = if line == 1 { r } else { r / 2 };
            ensure((rep.m, rep.n) == (s, n), || format!("(m, n) = ({}, {})", rep.m, rep.n))?;
            Ok(format!("weak ({}, {})-metacirculant via ({}, {})", rep.m, rep.n, rep.rho, rep.lambda))
        });
    }
    claims
}

/// Every family group of order at most the oracle limit used by the suites.
pub fn oracle_groups() -> Result<Vec<(String, PermGroup)>> {
    let mut specs = vec![FamilySpec::lex_cycle(3), FamilySpec::lex_cycle(5)];
    for r in 3..=8 {
        for s in 3..=8 {
            let (ro, so) = (r % 2 == 1, s % 2 == 1);
            if ro || so {
                specs.push(FamilySpec::gamma(r, s, Variant::G, Orientation::Con1));
            }
            if ro && !so {
                specs.push(FamilySpec::gamma(r, s, Variant::H, Orientation::Con2c));
            }
            if !ro && !so {
                specs.push(FamilySpec::gamma_plus(r, s, Variant::G, Orientation::Con1));
                specs.push(FamilySpec::gamma_plus(r, s, Variant::H, Orientation::Con2c));
            }
            if ro && so {
                specs.push(FamilySpec::double(r, s));
            }
        }
    }
    let mut out = Vec::new();
    for spec in specs {
        let pair = spec.build()?;
        if pair.group().order()? <= ORACLE_LIMIT {
            out.push((spec.label(), pair.group().clone()));
        }
    }
    Ok(out)
}

fn oracle_equivalence() -> Vec<Claim> {
    let mut claims = Vec::new();
    claim(&mut claims, "normal subgroups agree with the brute-force oracle", || {
        let groups = oracle_groups()?;
        let mut total = 0;
        for (label, g) in &groups {
            let fast: BTreeSet<Vec<Perm>> =
                g.normal_subgroups()?.iter().map(|n| n.sorted_elements()).collect::<Result<_>>()?;
            let slow: BTreeSet<Vec<Perm>> = normal_subgroups_oracle(g.degree(), g.generators())?.into_iter().collect();
            ensure(fast == slow, || format!("{label}: {} normal subgroups vs {} from the oracle", fast.len(), slow.len()))?;
            total += fast.len();
        }
        Ok(format!("{} groups, {total} normal subgroups", groups.len()))
    });
    claims
}
