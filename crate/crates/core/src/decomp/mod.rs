//! Shedding vertices, vertex decomposability and shellability.

mod shelling;
mod vd;

pub use shelling::{find_shelling, h_vector, verify_shelling, ShellingCheck, ShellingOrder, ShellingOutcome};
pub use vd::{
    is_vertex_decomposable, stopping_prefix, vd_sigma_via_ordering, verify_shedding_order, verify_vd_tree, SheddingCheck,
    SheddingOrder, VdOutcome, VdTree,
};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::VertexSet;

/// `x` is a shedding vertex when every facet of `del(x)` is a facet of the complex.
pub fn is_shedding_generic(d: &SimplicialComplex, x: usize) -> Result<bool> {
    if !d.ground().contains(x) {
        return Err(Error::NotSubset {
            what: "vertex",
            set: VertexSet::singleton(x).to_string(),
            of: d.ground().to_string(),
        });
    }
    Ok(shedding_unchecked(d, x))
}

pub(crate) fn shedding_unchecked(d: &SimplicialComplex, x: usize) -> bool {
    let del = d.deletion_unchecked(VertexSet::singleton(x));
    del.facets().iter().all(|&f| d.is_facet(f))
}

/// Shedding test for `Σ_r(A, G)` read off the support family: every `F` in
/// `Supp_r(A, G)` avoiding `x` has some `y ∈ F` with `F - y + x` in the family.
pub fn is_shedding_supp(g: &Graph, a: VertexSet, r: usize, x: usize) -> Result<bool> {
    if !(g.vertices() - a).contains(x) {
        return Err(Error::NotSubset {
            what: "vertex",
            set: VertexSet::singleton(x).to_string(),
            of: (g.vertices() - a).to_string(),
        });
    }
    let supp = g.supp_within(g.vertices(), a, r);
    Ok(supp
        .iter()
        .filter(|f| !f.contains(x))
        .all(|&f| f.iter().any(|y| supp.binary_search(&f.without(y).with(x)).is_ok())))
}

/// Shedding test for `Σ_r(G)` (empty `A`): `G - N[x]` has no connected `r`-set.
pub fn is_shedding_conr(g: &Graph, r: usize, x: usize) -> Result<bool> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    Ok(shedding_conr_within(g, g.vertices(), r, x))
}

/// Same test inside the induced subgraph on `within`.
pub(crate) fn shedding_conr_within(g: &Graph, within: VertexSet, r: usize, x: usize) -> bool {
    let closed = (g.neighbors(x) & within).with(x);
    !g.has_connected_subset_within(within - closed, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::sigma_r;
    use crate::fixtures;
    use crate::graph::tests::arb_graph;
    use crate::graph::Family;
    use proptest::prelude::*;

    #[test]
    fn gap_free_example_has_no_shedding_vertex() {
        let g = fixtures::gap_free_example_graph();
        let s = sigma_r(&g, VertexSet::EMPTY, 3).unwrap();
        for x in 0..8 {
            assert!(!is_shedding_generic(&s, x).unwrap());
            assert!(!is_shedding_supp(&g, VertexSet::EMPTY, 3, x).unwrap());
            assert!(!is_shedding_conr(&g, 3, x).unwrap());
        }
    }

    #[test]
    fn short_cycles() {
        let c4 = Family::Cycle(4).build().unwrap();
        let s = sigma_r(&c4, VertexSet::EMPTY, 2).unwrap();
        assert!((0..4).all(|x| is_shedding_generic(&s, x).unwrap()));
        let c5 = Family::Cycle(5).build().unwrap();
        assert!((0..5).all(|x| !is_shedding_conr(&c5, 2, x).unwrap()));
        for n in 3..9 {
            let c = Family::Cycle(n).build().unwrap();
            for r in 2..7 {
                if n <= r + 2 {
                    assert!((0..n).all(|x| is_shedding_conr(&c, r, x).unwrap()), "C{n} r={r}");
                }
            }
        }
    }

    #[test]
    fn neighbours_of_a_connected_seed_shed_for_r1() {
        let g = fixtures::chordal_example_graph();
        let a = fixtures::chordal_example_seed();
        for x in g.neighborhood(a, false).iter() {
            assert!(is_shedding_supp(&g, a, 1, x).unwrap());
        }
        assert!(is_shedding_supp(&g, a, 1, 0).is_err());
    }

    #[test]
    fn cone_point_is_shedding() {
        let base = SimplicialComplex::simplex_boundary(VertexSet::full(3));
        let cone = base.join(&SimplicialComplex::simplex(VertexSet::singleton(3))).unwrap();
        // Deleting the apex leaves the base, whose facets are not facets of the cone.
        assert!(!is_shedding_generic(&cone, 3).unwrap());
        // Deleting a base vertex leaves facets that all contain the apex.
        assert!(is_shedding_generic(&cone, 0).unwrap());
    }

    #[test]
    fn neighbourhood_test_needs_r_at_least_two() {
        // Σ_1 of two isolated vertices is two points: every vertex sheds, yet
        // the other vertex survives outside the closed neighbourhood.
        let g = Graph::empty(2).unwrap();
        let s = sigma_r(&g, VertexSet::EMPTY, 1).unwrap();
        assert!(is_shedding_generic(&s, 0).unwrap());
        assert!(is_shedding_supp(&g, VertexSet::EMPTY, 1, 0).unwrap());
        assert!(!is_shedding_conr(&g, 1, 0).unwrap());
    }

    fn connected_or_empty_seeds(g: &Graph) -> Vec<VertexSet> {
        g.vertices().subsets().filter(|&a| a.is_empty() || g.is_connected_set(a)).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn shedding_predicates_agree(g in arb_graph(6), r in 1usize..=4) {
            for a in connected_or_empty_seeds(&g) {
                let s = sigma_r(&g, a, r).unwrap();
                for x in (g.vertices() - a).iter() {
                    let generic = is_shedding_generic(&s, x).unwrap();
                    prop_assert_eq!(generic, is_shedding_supp(&g, a, r, x).unwrap(), "A={} x={}", a, x);
                    if a.is_empty() && r >= 2 {
                        prop_assert_eq!(generic, is_shedding_conr(&g, r, x).unwrap(), "x={}", x);
                    }
                }
            }
        }
    }
}
