use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};
use crate::VertexSet;

/// Hard ceiling for canonical labelling: the adjacency bitstring must fit in a `u128`.
pub const CANON_HARD_MAX: usize = 16;

/// Isomorphism-invariant byte string: equal keys exactly for isomorphic graphs.
///
/// The first byte is the vertex count, the rest is the lexicographically
/// least column-major upper-triangle adjacency bitstring over all labellings
/// compatible with the colour-refined vertex partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let hex: String = self.0.iter().map(|b| format!("{b:02x}")).collect();
        s.serialize_str(&hex)
    }
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    canonical_key_bounded(g, crate::Limits::DEFAULT.max_canon_n)
}

pub fn canonical_key_bounded(g: &Graph, max_n: usize) -> Result<CanonicalKey> {
    let n = g.n();
    let cap = max_n.min(CANON_HARD_MAX);
    if n > cap {
        return Err(Error::bound("canonical-key vertex count", cap, n));
    }
    let (_, columns) = canonical_labelling(g);
    let mut bytes = vec![n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for (k, &col) in columns.iter().enumerate() {
        for i in (0..k).rev() {
            acc = acc << 1 | (col >> i & 1) as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    Ok(CanonicalKey(bytes))
}

/// Colour refinement to a stable, isomorphism-invariant partition.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        colour = next;
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

/// Returns the canonical labelling (position to vertex) and its adjacency
/// columns: `columns[k]` has bit `k-1-i` set when positions `i < k` are adjacent.
fn canonical_labelling(g: &Graph) -> (Vec<usize>, Vec<u64>) {
    let n = g.n();
    let colour = refine(g);
    let mut slots: Vec<usize> = colour.clone();
    slots.sort_unstable();
    let mut search = Search {
        g,
        colour: &colour,
        slots: &slots,
        placed: Vec::with_capacity(n),
        columns: Vec::with_capacity(n),
        best: None,
    };
    search.run(VertexSet::EMPTY);
    search.best.expect("at least one labelling")
}

struct Search<'a> {
    g: &'a Graph,
    colour: &'a [usize],
    slots: &'a [usize],
    placed: Vec<usize>,
    columns: Vec<u64>,
    best: Option<(Vec<usize>, Vec<u64>)>,
}

impl Search<'_> {
    fn run(&mut self, used: VertexSet) {
        let k = self.placed.len();
        if k == self.g.n() {
            if self.best.as_ref().is_none_or(|(_, b)| self.columns < *b) {
                self.best = Some((self.placed.clone(), self.columns.clone()));
            }
            return;
        }
        for v in 0..self.g.n() {
            if used.contains(v) || self.colour[v] != self.slots[k] {
                continue;
            }
            let nb = self.g.neighbors(v);
            let col = self
                .placed
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &u)| acc | (nb.contains(u) as u64) << (k - 1 - i));
            self.columns.push(col);
            let worse = self
                .best
                .as_ref()
                .is_some_and(|(_, b)| self.columns[..] > b[..=k]);
            if !worse {
                self.placed.push(v);
                self.run(used.with(v));
                self.placed.pop();
            }
            self.columns.pop();
        }
    }
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// optionally only the connected ones, ordered by canonical key.
pub fn enumerate_graphs(n: usize, connected_only: bool, max_n: usize) -> Result<Vec<Graph>> {
    let cap = max_n.min(CANON_HARD_MAX);
    if n > cap {
        return Err(Error::bound("canonical-key vertex count", cap, n));
    }
    if n == 0 {
        return Ok(if connected_only { vec![] } else { vec![Graph::with_vertices(0)] });
    }
    let mut level: Vec<Graph> = vec![Graph::with_vertices(1)];
    for k in 1..n {
        let mut next = BTreeMap::new();
        for g in &level {
            for nb in VertexSet::full(k).subsets() {
                let mut h = Graph::with_vertices(k + 1);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in nb {
                    h.add_edge(u, k);
                }
                next.entry(canonical_key_bounded(&h, cap)?).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    if connected_only {
        level.retain(Graph::is_connected);
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::arb_graph;
    use crate::graph::Family;
    use proptest::prelude::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Brute force: minimal sorted edge list over every relabelling.
    fn brute_key(g: &Graph) -> Vec<(usize, usize)> {
        permutations(g.n())
            .iter()
            .map(|p| {
                let mut e: Vec<_> = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap()
    }

    #[test]
    fn cycle_vs_relabelled_cycle_and_path() {
        let c4 = Family::Cycle(4).build().unwrap();
        let relabelled = c4.permute(&[2, 0, 3, 1]).unwrap();
        assert_eq!(canonical_key(&c4).unwrap(), canonical_key(&relabelled).unwrap());
        let p4 = Family::Path(4).build().unwrap();
        assert_ne!(canonical_key(&c4).unwrap(), canonical_key(&p4).unwrap());
    }

    #[test]
    fn four_vertex_graphs_have_eleven_classes() {
        let mut keys: Vec<_> = VertexSet::full(6)
            .subsets()
            .map(|mask| {
                let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
                let edges: Vec<_> = mask.iter().map(|i| pairs[i]).collect();
                canonical_key(&Graph::from_edge_list(4, &edges).unwrap()).unwrap()
            })
            .collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 11);
    }

    #[test]
    fn isomorphism_class_counts() {
        let all = [1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 2, 6, 21, 112, 853];
        for n in 1..=7 {
            assert_eq!(enumerate_graphs(n, false, 9).unwrap().len(), all[n - 1], "n={n}");
            assert_eq!(enumerate_graphs(n, true, 9).unwrap().len(), connected[n - 1], "n={n}");
        }
    }

    #[test]
    fn bound_is_enforced() {
        let g = Family::Path(10).build().unwrap();
        assert!(canonical_key(&g).unwrap_err().is_bound_exceeded());
        assert!(canonical_key_bounded(&g, 12).is_ok());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn keys_agree_with_brute_force(g in arb_graph(6), h in arb_graph(6)) {
            let same = g.n() == h.n() && brute_key(&g) == brute_key(&h);
            prop_assert_eq!(canonical_key(&g).unwrap() == canonical_key(&h).unwrap(), same);
        }

        #[test]
        fn invariant_under_relabelling(g in arb_graph(9), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = g.permute(&perm).unwrap();
            prop_assert_eq!(canonical_key(&g).unwrap(), canonical_key(&h).unwrap());
        }
    }
}
