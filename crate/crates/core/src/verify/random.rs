//! Seeded generators for the randomized suites.

use rand::seq::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Cotree, Graph};
use crate::VertexSet;

pub use rand::SeedableRng;

/// The generator behind every randomized check, stable across platforms.
pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with `p` itself drawn uniformly from `[0.2, 0.8]`.
pub fn random_graph(rng: &mut SeededRng, n: usize) -> Graph {
    let p = rng.random_range(0.2..=0.8);
    let mut g = Graph::empty(n).expect("n within capacity");
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A chordal graph grown like a partial `k`-tree: each new vertex is joined
/// to a clique of at most `k` earlier vertices, grown greedily from a random
/// start, which keeps the new vertex simplicial.
pub fn random_chordal(rng: &mut SeededRng, n: usize, k: usize) -> Graph {
    let mut g = Graph::empty(n).expect("n within capacity");
    for v in 1..n {
        let size = rng.random_range(0..=k.min(v));
        let mut clique = VertexSet::EMPTY;
        let mut pool = VertexSet::full(v);
        while clique.len() < size && !pool.is_empty() {
            let pick = *pool.iter().collect::<Vec<_>>().choose(rng).expect("pool is nonempty");
            clique = clique.with(pick);
            pool &= g.neighbors(pick);
        }
        for u in clique {
            g.add_edge(u, v);
        }
    }
    g
}

/// A random cotree on `leaves` leaves with two or three children per node.
pub fn random_cotree(rng: &mut SeededRng, leaves: usize) -> Cotree {
    assert!(leaves >= 1, "a cotree has at least one leaf");
    if leaves == 1 {
        return Cotree::Leaf(0);
    }
    let parts = rng.random_range(2..=leaves.min(3));
    // Random composition of `leaves` into `parts` positive sizes.
    let mut cuts: Vec<usize> = (1..leaves).collect::<Vec<_>>().choose_multiple(rng, parts - 1).copied().collect();
    cuts.sort_unstable();
    cuts.push(leaves);
    let mut prev = 0;
    let children = cuts
        .into_iter()
        .map(|c| {
            let size = c - prev;
            prev = c;
            random_cotree(rng, size)
        })
        .collect();
    if rng.random_bool(0.5) {
        Cotree::Union(children)
    } else {
        Cotree::Join(children)
    }
}

/// A nonempty vertex set inducing a connected subgraph, grown from a random
/// vertex through random neighbours to a random target size.
pub fn random_connected_set(rng: &mut SeededRng, g: &Graph) -> VertexSet {
    let start = rng.random_range(0..g.n());
    let component = g.reach(VertexSet::singleton(start), g.vertices());
    let target = rng.random_range(1..=component.len());
    let mut set = VertexSet::singleton(start);
    while set.len() < target {
        let frontier: Vec<usize> = g.neighborhood(set, false).iter().collect();
        set = set.with(*frontier.choose(rng).expect("component not yet exhausted"));
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_chordal, is_cograph};

    #[test]
    fn generators_land_in_their_classes() {
        let mut r = rng(7);
        for _ in 0..200 {
            let n = r.random_range(1..=9);
            let g = random_chordal(&mut r, n, 3);
            assert!(is_chordal(&g).is_some());
            let t = random_cotree(&mut r, n);
            assert_eq!(t.leaf_count(), n);
            assert!(is_cograph(&t.to_graph().unwrap()).is_some());
            let h = random_graph(&mut r, n);
            let a = random_connected_set(&mut r, &h);
            assert!(!a.is_empty() && h.is_connected_set(a));
        }
    }

    #[test]
    fn seeds_reproduce() {
        let a = random_graph(&mut rng(3), 7);
        let b = random_graph(&mut rng(3), 7);
        assert_eq!(a, b);
    }
}
