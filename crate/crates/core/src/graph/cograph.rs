use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};
use crate::VertexSet;

/// A cotree: leaves are single vertices, internal nodes take disjoint
/// unions or joins of their children.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cotree {
    /// A vertex. When a tree is built into a graph the leaf labels are
    /// ignored and vertices are numbered in left-to-right leaf order; a
    /// tree returned by [`is_cograph`] carries the original vertex ids.
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaf_count(&self) -> usize {
        match self {
            Cotree::Leaf(_) => 1,
            Cotree::Union(c) | Cotree::Join(c) => c.iter().map(Cotree::leaf_count).sum(),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(c) | Cotree::Join(c) => c.iter().for_each(|t| t.collect_leaves(out)),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            Cotree::Leaf(_) => Graph::empty(1),
            Cotree::Union(children) | Cotree::Join(children) => {
                if children.is_empty() {
                    return Err(Error::Invalid("cotree node without children".into()));
                }
                let mut g = children[0].to_graph()?;
                for child in &children[1..] {
                    let h = child.to_graph()?;
                    g = if matches!(self, Cotree::Union(_)) {
                        g.disjoint_union(&h)?
                    } else {
                        g.join(&h)?
                    };
                }
                Ok(g)
            }
        }
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (op, children) = match self {
            Cotree::Leaf(v) => return write!(f, "{v}"),
            Cotree::Union(c) => ("U", c),
            Cotree::Join(c) => ("J", c),
        };
        write!(f, "{op}(")?;
        for (i, c) in children.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Decide whether `g` is a cograph, returning its cotree when it is.
///
/// A graph on at least two vertices is a cograph exactly when it or its
/// complement is disconnected and every component (of whichever one is
/// disconnected) is again a cograph.
pub fn is_cograph(g: &Graph) -> Option<Cotree> {
    if g.n() == 0 {
        return None;
    }
    decompose(g, &g.complement(), g.vertices())
}

fn decompose(g: &Graph, gc: &Graph, within: VertexSet) -> Option<Cotree> {
    if within.len() == 1 {
        return within.min().map(Cotree::Leaf);
    }
    let parts = g.components_within(within);
    if parts.len() > 1 {
        return parts
            .into_iter()
            .map(|p| decompose(g, gc, p))
            .collect::<Option<Vec<_>>>()
            .map(Cotree::Union);
    }
    let parts = gc.components_within(within);
    if parts.len() > 1 {
        return parts
            .into_iter()
            .map(|p| decompose(g, gc, p))
            .collect::<Option<Vec<_>>>()
            .map(Cotree::Join);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use crate::graph::Family;
    use proptest::prelude::*;

    fn has_induced_p4(g: &Graph) -> bool {
        let n = g.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                        if distinct
                            && g.has_edge(a, b)
                            && g.has_edge(b, c)
                            && g.has_edge(c, d)
                            && !g.has_edge(a, c)
                            && !g.has_edge(a, d)
                            && !g.has_edge(b, d)
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn join_of_two_leaves_is_k2() {
        let t = Cotree::Join(vec![Cotree::Leaf(0), Cotree::Leaf(0)]);
        assert_eq!(t.to_graph().unwrap(), Family::Complete(2).build().unwrap());
    }

    #[test]
    fn p4_and_its_complement_are_not_cographs() {
        let p4 = Family::Path(4).build().unwrap();
        assert!(is_cograph(&p4).is_none());
        assert!(is_cograph(&p4.complement()).is_none());
        assert!(has_induced_p4(&p4.complement()));
    }

    #[test]
    fn cotree_round_trip() {
        let c4 = Family::Cycle(4).build().unwrap();
        let t = is_cograph(&c4).unwrap();
        assert_eq!(t.leaf_count(), 4);
        // Rebuilt graph is isomorphic; here the leaf order 0,2,1,3 relabels it.
        let rebuilt = t.to_graph().unwrap();
        assert_eq!(rebuilt.edge_count(), 4);
    }

    proptest! {
        #[test]
        fn agrees_with_induced_p4_search(g in arb_graph(8)) {
            let tree = is_cograph(&g);
            prop_assert_eq!(tree.is_some(), !has_induced_p4(&g));
            if let Some(t) = tree {
                let mut leaves = t.leaves();
                leaves.sort_unstable();
                prop_assert_eq!(leaves, (0..g.n()).collect::<Vec<_>>());
                // Rebuild with the original labels.
                let rebuilt = t.to_graph().unwrap();
                let mut perm = vec![0; g.n()];
                for (pos, v) in t.leaves().into_iter().enumerate() {
                    perm[pos] = v;
                }
                prop_assert_eq!(rebuilt.permute(&perm).unwrap(), g);
            }
        }
    }
}
