//! Checks of the structural identities behind co-connected complexes: vertex
//! decomposability with a connected seed, link and deletion formulas, the
//! disjoint union and join decompositions, and agreement of the shedding tests.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::random::{self, SeededRng};
use crate::complex::{sigma_r, SimplicialComplex};
use crate::decomp::{
    is_shedding_conr, is_shedding_generic, is_shedding_supp, is_vertex_decomposable, vd_sigma_via_ordering,
    verify_shedding_order, verify_vd_tree, SheddingCheck, VdOutcome,
};
use crate::error::Result;
use crate::graph::{enumerate_graphs, to_graph6, Graph};
use crate::{Limits, VertexSet};

/// A single failing case, described well enough to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub graph6: String,
    pub a: VertexSet,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
    pub what: String,
}

impl Case {
    fn new(g: &Graph, a: VertexSet, r: usize, x: Option<usize>, what: impl Into<String>) -> Result<Self> {
        Ok(Case {
            graph6: to_graph6(g)?,
            a,
            r,
            x,
            what: what.into(),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeedVdReport {
    pub seed: u64,
    pub samples: usize,
    pub failures: Vec<Case>,
}

/// `Σ_r(A, G)` with `G[A]` connected and nonempty is vertex decomposable:
/// random `G` on at most 7 vertices, `r ≤ 3`, random connected seed `A`.
/// Every decomposition found is replayed.
pub fn seed_vd_check(samples: usize, seed: u64, limits: &Limits) -> Result<SeedVdReport> {
    let mut rng = random::rng(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let n = rng.random_range(1..=7);
        let g = random::random_graph(&mut rng, n);
        let a = random::random_connected_set(&mut rng, &g);
        let r = rng.random_range(1..=3);
        let s = sigma_r(&g, a, r)?;
        match is_vertex_decomposable(&s, limits.max_vd_facets)? {
            VdOutcome::Decomposable { tree } => {
                if !verify_vd_tree(&s, &tree) {
                    failures.push(Case::new(&g, a, r, None, "decomposition does not replay")?);
                }
            }
            VdOutcome::NotDecomposable { .. } => {
                failures.push(Case::new(&g, a, r, None, "not vertex decomposable")?);
            }
        }
    }
    Ok(SeedVdReport { seed, samples, failures })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct IdentityReport {
    pub seed: u64,
    pub samples: usize,
    pub links_checked: usize,
    pub deletions_checked: usize,
    pub failures: Vec<Case>,
}

/// Seed sets: empty a quarter of the time, an arbitrary subset a quarter of
/// the time, otherwise connected and nonempty.
fn random_seed_set(rng: &mut SeededRng, g: &Graph) -> VertexSet {
    match rng.random_range(0..4) {
        0 => VertexSet::EMPTY,
        1 => g.vertices().iter().filter(|_| rng.random_bool(0.3)).collect(),
        _ => random::random_connected_set(rng, g),
    }
}

/// For each vertex `x` of `Σ_r(A, G)`: the link of `x` equals `Σ_r(A, G - x)`.
/// For each shedding vertex: when `r ≥ 2`, the deletion equals
/// `Σ_{r-1}(A ∪ x, G)`; when `r = 1` and `A` is nonempty, `x` is adjacent to
/// `A`, `G[A ∪ x]` is connected and the deletion is the full simplex on
/// `V - A - x`. Samples draw `n ≤ 7` and `r ≤ 4`.
pub fn link_deletion_identities(samples: usize, seed: u64) -> Result<IdentityReport> {
    let mut rng = random::rng(seed);
    let mut report = IdentityReport {
        seed,
        samples,
        ..Default::default()
    };
    for _ in 0..samples {
        let n = rng.random_range(2..=7);
        let g = random::random_graph(&mut rng, n);
        let a = random_seed_set(&mut rng, &g);
        let r = rng.random_range(1..=4);
        check_identities(&g, a, r, &mut report)?;
    }
    Ok(report)
}

fn check_identities(g: &Graph, a: VertexSet, r: usize, report: &mut IdentityReport) -> Result<()> {
    let s = sigma_r(g, a, r)?;
    for x in s.support() {
        let link = s.link(VertexSet::singleton(x))?;
        let (h, map) = g.delete(VertexSet::singleton(x))?;
        let mut inverse = vec![usize::MAX; g.n()];
        for (new, &old) in map.iter().enumerate() {
            inverse[old] = new;
        }
        let expected = sigma_r(&h, a.map(&inverse), r)?.relabel(&map);
        report.links_checked += 1;
        if !same(&link, &expected) {
            report.failures.push(Case::new(g, a, r, Some(x), "link differs from Σ_r(A, G - x)")?);
        }
        if !is_shedding_generic(&s, x)? {
            continue;
        }
        let del = s.deletion(VertexSet::singleton(x))?;
        if r >= 2 {
            report.deletions_checked += 1;
            if !same(&del, &sigma_r(g, a.with(x), r - 1)?) {
                report.failures.push(Case::new(g, a, r, Some(x), "deletion differs from Σ_{r-1}(A ∪ x, G)")?);
            }
        } else if !a.is_empty() {
            report.deletions_checked += 1;
            let attached = g.neighborhood(a, false).contains(x) && g.is_connected_set(a.with(x));
            let simplex = SimplicialComplex::simplex(g.vertices() - a.with(x));
            if !attached || !same(&del, &simplex) {
                report.failures.push(Case::new(g, a, r, Some(x), "r = 1 shedding vertex misbehaves")?);
            }
        }
    }
    Ok(())
}

fn same(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    a.ground() == b.ground() && a.facets() == b.facets()
}

/// One `(G1, G2, r)` case where a decomposability prediction failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairCase {
    pub g1: String,
    pub g2: String,
    pub r: usize,
    pub actual: bool,
    pub predicted: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct UnionJoinReport {
    pub graphs: usize,
    pub cases: usize,
    /// `Σ_r(G1 ⊔ G2) = Σ_r(G1) ∗ Δ_{V2} ∪ Δ_{V1} ∗ Σ_r(G2)` failed.
    pub union_decomposition: Vec<PairCase>,
    /// The three-part decomposition of `Σ_r(G1 ∗ G2)` failed.
    pub join_decomposition: Vec<PairCase>,
    /// `Σ_r(G1 ⊔ G2)` VD against "some `Σ_r(G_i)` VD and the other graph has
    /// fewer than `r` vertices".
    pub union_vd_by_size: Vec<PairCase>,
    /// `Σ_r(G1 ⊔ G2)` VD against "some `Σ_r(G_i)` VD and the other graph has
    /// no connected `r`-set".
    pub union_vd_by_circuits: Vec<PairCase>,
    /// `Σ_r(G1 ∗ G2)` VD against "both `Σ_r(G_i)` VD".
    pub join_vd: Vec<PairCase>,
}

/// Every ordered pair of graphs on `1..=max_part` vertices (one per
/// isomorphism class) and every `r` in `rs`.
pub fn union_join_check(max_part: usize, rs: &[usize], limits: &Limits) -> Result<UnionJoinReport> {
    let mut graphs = Vec::new();
    for n in 1..=max_part {
        graphs.extend(enumerate_graphs(n, false, limits.max_canon_n)?);
    }
    let mut cases = Vec::new();
    for g1 in &graphs {
        for g2 in &graphs {
            for &r in rs {
                cases.push((g1, g2, r));
            }
        }
    }
    let results = cases
        .par_iter()
        .map(|&(g1, g2, r)| pair_case(g1, g2, r, limits))
        .collect::<Result<Vec<_>>>()?;
    let mut report = UnionJoinReport {
        graphs: graphs.len(),
        cases: cases.len(),
        ..Default::default()
    };
    for flags in results {
        let PairFlags {
            union_dec,
            join_dec,
            by_size,
            by_circuits,
            join_vd,
        } = flags;
        report.union_decomposition.extend(union_dec);
        report.join_decomposition.extend(join_dec);
        report.union_vd_by_size.extend(by_size);
        report.union_vd_by_circuits.extend(by_circuits);
        report.join_vd.extend(join_vd);
    }
    Ok(report)
}

struct PairFlags {
    union_dec: Option<PairCase>,
    join_dec: Option<PairCase>,
    by_size: Option<PairCase>,
    by_circuits: Option<PairCase>,
    join_vd: Option<PairCase>,
}

fn pair_case(g1: &Graph, g2: &Graph, r: usize, limits: &Limits) -> Result<PairFlags> {
    let (n1, n2) = (g1.n(), g2.n());
    let v1 = VertexSet::full(n1);
    let v2 = VertexSet::full(n1 + n2) - v1;
    let shift: Vec<usize> = (0..n2).map(|v| v + n1).collect();
    let s1 = sigma_r(g1, VertexSet::EMPTY, r)?;
    let s2 = sigma_r(g2, VertexSet::EMPTY, r)?.relabel(&shift);
    let vd = |s: &SimplicialComplex| -> Result<bool> {
        Ok(is_vertex_decomposable(s, limits.max_vd_facets)?.is_decomposable())
    };
    let (vd1, vd2) = (vd(&s1)?, vd(&s2)?);
    let (void1, void2) = (s1.is_void(), s2.is_void());
    let name = |g: &Graph| to_graph6(g);
    let case = |actual: bool, predicted: bool| -> Result<Option<PairCase>> {
        Ok((actual != predicted).then_some(PairCase {
            g1: name(g1)?,
            g2: name(g2)?,
            r,
            actual,
            predicted,
        }))
    };
    let flag = |holds: bool| case(holds, true);
    let simplex1 = SimplicialComplex::simplex(v1);
    let simplex2 = SimplicialComplex::simplex(v2);
    let halves = s1.join(&simplex2)?.union(&simplex1.join(&s2)?);

    let union = sigma_r(&g1.disjoint_union(g2)?, VertexSet::EMPTY, r)?;
    let union_dec = flag(same(&union, &halves))?;
    let union_vd = vd(&union)?;
    let by_size = case(union_vd, (vd1 && n2 < r) || (vd2 && n1 < r))?;
    let by_circuits = case(union_vd, (vd1 && void2) || (vd2 && void1))?;

    let join = sigma_r(&g1.join(g2)?, VertexSet::EMPTY, r)?;
    let all = v1 | v2;
    let mixed = all.k_subsets(r).filter(|e| !e.is_disjoint(v1) && !e.is_disjoint(v2)).map(|e| all - e).collect();
    let three = halves.union(&SimplicialComplex::new(all, mixed)?);
    let join_dec = flag(same(&join, &three))?;
    let join_vd = case(vd(&join)?, vd1 && vd2)?;
    Ok(PairFlags {
        union_dec,
        join_dec,
        by_size,
        by_circuits,
        join_vd,
    })
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SheddingConcordance {
    pub max_n: usize,
    pub max_r: usize,
    /// `(G, A, r, x)` cases compared between the generic and support tests.
    pub cases: usize,
    /// Cases with empty `A`, where the neighbourhood test also applies.
    pub neighbourhood_cases: usize,
    pub generic_vs_support: Vec<Case>,
    /// Neighbourhood test disagreements for `r ≥ 2`.
    pub neighbourhood: Vec<Case>,
    /// Neighbourhood test disagreements for `r = 1`, where the test does not
    /// characterize shedding vertices.
    pub neighbourhood_r1: Vec<Case>,
}

/// Compare the three shedding tests on every graph with at most `max_n`
/// vertices (one per isomorphism class), every `A`, every `1 ≤ r ≤ max_r`
/// and every ground vertex `x`.
pub fn shedding_concordance(max_n: usize, max_r: usize, limits: &Limits) -> Result<SheddingConcordance> {
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(enumerate_graphs(n, false, limits.max_canon_n)?);
    }
    let parts = graphs
        .par_iter()
        .map(|g| shedding_on_graph(g, max_r))
        .collect::<Result<Vec<_>>>()?;
    let mut report = SheddingConcordance {
        max_n,
        max_r,
        ..Default::default()
    };
    for part in parts {
        report.cases += part.cases;
        report.neighbourhood_cases += part.neighbourhood_cases;
        report.generic_vs_support.extend(part.generic_vs_support);
        report.neighbourhood.extend(part.neighbourhood);
        report.neighbourhood_r1.extend(part.neighbourhood_r1);
    }
    Ok(report)
}

fn shedding_on_graph(g: &Graph, max_r: usize) -> Result<SheddingConcordance> {
    let mut part = SheddingConcordance::default();
    for a in g.vertices().subsets() {
        for r in 1..=max_r {
            let s = sigma_r(g, a, r)?;
            for x in g.vertices() - a {
                let generic = is_shedding_generic(&s, x)?;
                part.cases += 1;
                if generic != is_shedding_supp(g, a, r, x)? {
                    part.generic_vs_support.push(Case::new(g, a, r, Some(x), format!("generic says {generic}"))?);
                }
                if a.is_empty() {
                    part.neighbourhood_cases += 1;
                    if generic != is_shedding_conr(g, r, x)? {
                        let case = Case::new(g, a, r, Some(x), format!("generic says {generic}"))?;
                        if r == 1 {
                            part.neighbourhood_r1.push(case);
                        } else {
                            part.neighbourhood.push(case);
                        }
                    }
                }
            }
        }
    }
    Ok(part)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct OrderingConcordance {
    pub graphs: usize,
    pub rs: Vec<usize>,
    pub decomposable: usize,
    pub disagreements: Vec<Case>,
    /// Orderings that failed to replay.
    pub bad_orders: Vec<Case>,
}

/// The ordering test for `Σ_r(G)` against the generic decomposability search
/// on every connected graph with at most `max_n` vertices.
pub fn ordering_concordance(max_n: usize, rs: &[usize], limits: &Limits) -> Result<OrderingConcordance> {
    let mut cases = Vec::new();
    let mut graphs = 0;
    for n in 1..=max_n {
        let level = enumerate_graphs(n, true, limits.max_canon_n)?;
        graphs += level.len();
        for g in level {
            for &r in rs {
                cases.push((g.clone(), r));
            }
        }
    }
    let results = cases
        .par_iter()
        .map(|(g, r)| -> Result<(bool, Option<Case>, Option<Case>)> {
            let s = sigma_r(g, VertexSet::EMPTY, *r)?;
            let generic = is_vertex_decomposable(&s, limits.max_vd_facets)?.is_decomposable();
            let order = vd_sigma_via_ordering(g, *r)?;
            let disagreement = if generic != order.is_some() {
                Some(Case::new(g, VertexSet::EMPTY, *r, None, format!("generic says {generic}"))?)
            } else {
                None
            };
            let bad = match &order {
                Some(o) if verify_shedding_order(g, *r, o) != SheddingCheck::Valid => {
                    Some(Case::new(g, VertexSet::EMPTY, *r, None, format!("order {:?} does not replay", o.vertices))?)
                }
                _ => None,
            };
            Ok((generic, disagreement, bad))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = OrderingConcordance {
        graphs,
        rs: rs.to_vec(),
        ..Default::default()
    };
    for (generic, disagreement, bad) in results {
        report.decomposable += usize::from(generic);
        report.disagreements.extend(disagreement);
        report.bad_orders.extend(bad);
    }
    Ok(report)
}
