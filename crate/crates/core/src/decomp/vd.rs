use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{shedding_conr_within, shedding_unchecked};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::VertexSet;

/// A vertex decomposition: leaves are void complexes or simplices (the empty
/// complex is the simplex on `∅`), inner nodes name a shedding vertex and
/// decompose its link and deletion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum VdTree {
    Void,
    Simplex {
        facet: VertexSet,
    },
    Shed {
        vertex: usize,
        link: Box<VdTree>,
        deletion: Box<VdTree>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum VdOutcome {
    Decomposable { tree: VdTree },
    /// Every listed shedding vertex was tried and failed; an empty list means
    /// the complex has no shedding vertex at all.
    NotDecomposable { shedding_vertices: Vec<usize> },
}

impl VdOutcome {
    pub fn is_decomposable(&self) -> bool {
        matches!(self, VdOutcome::Decomposable { .. })
    }
}

/// Decide vertex decomposability by search over shedding vertices, trying the
/// vertices whose deletion has the fewest facets first. Refuted complexes are
/// memoized up to order-preserving relabelling of their support.
pub fn is_vertex_decomposable(d: &SimplicialComplex, max_facets: usize) -> Result<VdOutcome> {
    if d.facets().len() > max_facets {
        return Err(Error::bound("facet count for decomposability search", max_facets, d.facets().len()));
    }
    let mut search = VdSearch::default();
    match search.decompose(d) {
        Some(tree) => Ok(VdOutcome::Decomposable { tree }),
        None => Ok(VdOutcome::NotDecomposable {
            shedding_vertices: search.shedding_candidates(d).into_iter().map(|(x, _)| x).collect(),
        }),
    }
}

#[derive(Default)]
struct VdSearch {
    failed: HashSet<Vec<VertexSet>>,
    solved: HashMap<Vec<VertexSet>, VdTree>,
}

impl VdSearch {
    fn shedding_candidates(&self, d: &SimplicialComplex) -> Vec<(usize, SimplicialComplex)> {
        let mut out: Vec<(usize, SimplicialComplex)> = d
            .support()
            .iter()
            .filter(|&x| shedding_unchecked(d, x))
            .map(|x| (x, d.deletion_unchecked(VertexSet::singleton(x))))
            .collect();
        out.sort_by_key(|(x, del)| (del.facets().len(), *x));
        out
    }

    fn decompose(&mut self, d: &SimplicialComplex) -> Option<VdTree> {
        match d.facets() {
            [] => return Some(VdTree::Void),
            [f] => return Some(VdTree::Simplex { facet: *f }),
            _ => {}
        }
        if let Some(t) = self.solved.get(d.facets()) {
            return Some(t.clone());
        }
        let key = d.compact_key();
        if self.failed.contains(&key) {
            return None;
        }
        for (x, del) in self.shedding_candidates(d) {
            let Some(deletion) = self.decompose(&del) else { continue };
            let link = d.link_unchecked(VertexSet::singleton(x));
            let Some(link) = self.decompose(&link) else { continue };
            let tree = VdTree::Shed {
                vertex: x,
                link: Box::new(link),
                deletion: Box::new(deletion),
            };
            self.solved.insert(d.facets().to_vec(), tree.clone());
            return Some(tree);
        }
        self.failed.insert(key);
        None
    }
}

/// Replay a decomposition tree against the complex it claims to decompose.
pub fn verify_vd_tree(d: &SimplicialComplex, tree: &VdTree) -> bool {
    match tree {
        VdTree::Void => d.is_void(),
        VdTree::Simplex { facet } => d.facets() == [*facet],
        VdTree::Shed { vertex, link, deletion } => {
            let x = *vertex;
            d.support().contains(x)
                && shedding_unchecked(d, x)
                && verify_vd_tree(&d.link_unchecked(VertexSet::singleton(x)), link)
                && verify_vd_tree(&d.deletion_unchecked(VertexSet::singleton(x)), deletion)
        }
    }
}

/// Vertices `x_1, ..., x_k` removed one at a time, each shedding for the
/// co-connected complex of the graph left at that point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheddingOrder {
    pub vertices: Vec<usize>,
}

fn at_most_one_connected_subset(g: &Graph, within: VertexSet, r: usize) -> bool {
    g.connected_subsets_within(within, r).len() <= 1
}

/// Decide vertex decomposability of `Σ_r(G)` (empty `A`, `r ≥ 2`) through a
/// vertex ordering: either `Con_r(G)` has at most one circuit, or some
/// `x_1, ..., x_k` exists where each `x_{i+1}` has no connected `r`-set in
/// `G_i - N[x_{i+1}]`, and `k` is the first index where `Con_r(G_k)` has at
/// most one circuit. Only the link branch is searched; each deletion is a
/// co-connected complex with a nonempty connected seed, which is always
/// vertex decomposable. Failed vertex sets are memoized.
pub fn vd_sigma_via_ordering(g: &Graph, r: usize) -> Result<Option<SheddingOrder>> {
    if r < 2 {
        return Err(Error::param("r", r, "r >= 2"));
    }
    let mut failed = HashSet::new();
    Ok(order_search(g, r, g.vertices(), &mut failed).map(|mut v| {
        v.reverse();
        SheddingOrder { vertices: v }
    }))
}

/// Returns the order reversed (last vertex first).
fn order_search(g: &Graph, r: usize, mask: VertexSet, failed: &mut HashSet<VertexSet>) -> Option<Vec<usize>> {
    if at_most_one_connected_subset(g, mask, r) {
        return Some(Vec::new());
    }
    if failed.contains(&mask) {
        return None;
    }
    for x in mask.iter() {
        if shedding_conr_within(g, mask, r, x) {
            if let Some(mut rest) = order_search(g, r, mask.without(x), failed) {
                rest.push(x);
                return Some(rest);
            }
        }
    }
    failed.insert(mask);
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum SheddingCheck {
    Valid,
    BadVertex { step: usize, vertex: usize },
    NotShedding { step: usize, vertex: usize },
    /// The graph already had at most one connected `r`-set before this step.
    NotMinimal { step: usize },
    /// More than one connected `r`-set remains after the last step.
    Incomplete { remaining: usize },
}

/// Replay a shedding order step by step (steps are 1-based).
pub fn verify_shedding_order(g: &Graph, r: usize, order: &SheddingOrder) -> SheddingCheck {
    let mut mask = g.vertices();
    for (i, &x) in order.vertices.iter().enumerate() {
        if !mask.contains(x) {
            return SheddingCheck::BadVertex { step: i + 1, vertex: x };
        }
        if at_most_one_connected_subset(g, mask, r) {
            return SheddingCheck::NotMinimal { step: i + 1 };
        }
        if !shedding_conr_within(g, mask, r, x) {
            return SheddingCheck::NotShedding { step: i + 1, vertex: x };
        }
        mask = mask.without(x);
    }
    let remaining = g.connected_subsets_within(mask, r).len();
    if remaining > 1 {
        SheddingCheck::Incomplete { remaining }
    } else {
        SheddingCheck::Valid
    }
}

/// The prefix of `order` that stops as soon as at most one connected
/// `r`-set remains, which is where a valid order must end.
pub fn stopping_prefix(g: &Graph, r: usize, order: &SheddingOrder) -> SheddingOrder {
    let mut mask = g.vertices();
    let mut vertices = Vec::new();
    for &x in &order.vertices {
        if at_most_one_connected_subset(g, mask, r) {
            break;
        }
        vertices.push(x);
        mask = mask.without(x);
    }
    SheddingOrder { vertices }
}
