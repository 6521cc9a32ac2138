use super::Graph;
use crate::VertexSet;

/// A perfect elimination ordering of `g` if it is chordal.
///
/// Maximum cardinality search visits vertices in an order whose reverse is
/// a perfect elimination ordering exactly when the graph is chordal, so the
/// candidate is produced first and then verified.
pub fn is_chordal(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertices();
    let mut order = Vec::with_capacity(n);
    while !unvisited.is_empty() {
        let v = unvisited
            .iter()
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("nonempty");
        unvisited.remove(v);
        order.push(v);
        for u in g.neighbors(v) & unvisited {
            weight[u] += 1;
        }
    }
    order.reverse();
    is_perfect_elimination_order(g, &order).then_some(order)
}

/// Whether each vertex's neighbours later in `order` form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() || order.iter().collect::<VertexSet>() != g.vertices() {
        return false;
    }
    let mut later = g.vertices();
    for &v in order {
        later.remove(v);
        let nb = g.neighbors(v) & later;
        if let Some(u) = order.iter().copied().find(|&u| nb.contains(u)) {
            if !nb.without(u).is_subset(g.neighbors(u)) {
                return false;
            }
        }
    }
    true
}

pub fn is_cochordal(g: &Graph) -> bool {
    is_chordal(&g.complement()).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::tests::arb_graph;
    use crate::graph::Family;
    use proptest::prelude::*;

    fn has_induced_long_cycle(g: &Graph) -> bool {
        g.vertices().subsets().any(|s| {
            s.len() >= 4 && g.is_connected_set(s) && s.iter().all(|v| (g.neighbors(v) & s).len() == 2)
        })
    }

    #[test]
    fn examples() {
        assert!(is_chordal(&fixtures::chordal_example_graph()).is_some());
        assert!(is_chordal(&Family::Cycle(4).build().unwrap()).is_none());
        assert!(is_chordal(&Family::Complete(5).build().unwrap()).is_some());
        assert!(is_cochordal(&Family::Cycle(4).build().unwrap()));
        assert!(!is_cochordal(&Family::Cycle(6).build().unwrap()));
    }

    proptest! {
        #[test]
        fn agrees_with_induced_cycle_search(g in arb_graph(8)) {
            let peo = is_chordal(&g);
            prop_assert_eq!(peo.is_some(), !has_induced_long_cycle(&g));
            if let Some(order) = peo {
                prop_assert!(is_perfect_elimination_order(&g, &order));
            }
        }
    }
}
