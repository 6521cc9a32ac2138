//! Finite simple graphs on the dense vertex set `0..n`.

mod canon;
mod chordal;
mod cograph;
mod families;
mod io;

pub use canon::{canonical_key, canonical_key_bounded, enumerate_graphs, CanonicalKey, CANON_HARD_MAX};
pub use chordal::{is_chordal, is_cochordal, is_perfect_elimination_order};
pub use cograph::{is_cograph, Cotree};
pub use families::Family;
pub use io::{parse_edge_list, parse_graph6, parse_graph6_stream, to_edge_list, to_graph6};

use crate::error::{Error, Result};
use crate::VertexSet;

/// An undirected simple graph stored as one neighbour bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    pub const MAX_VERTICES: usize = VertexSet::CAPACITY;

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > Self::MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: Self::MAX_VERTICES,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn with_vertices(n: usize) -> Self {
        Graph::empty(n).expect("vertex count within capacity")
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    fn check_subset(&self, what: &'static str, w: VertexSet) -> Result<()> {
        if w.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::NotSubset {
                what,
                set: w.to_string(),
                of: self.vertices().to_string(),
            })
        }
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            adj: (0..self.n())
                .map(|v| all.without(v) - self.adj[v])
                .collect(),
        }
    }

    /// `G[W]` relabelled onto `0..|W|` in ascending order of the old ids.
    /// The second component maps new ids to old ids.
    pub fn induced(&self, w: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset("induced vertex set", w)?;
        let map = w.to_vec();
        let mut inverse = vec![usize::MAX; self.n()];
        for (new, &old) in map.iter().enumerate() {
            inverse[old] = new;
        }
        let adj = map
            .iter()
            .map(|&old| (self.adj[old] & w).iter().map(|u| inverse[u]).collect())
            .collect();
        Ok((Graph { adj }, map))
    }

    /// `G \ W`, relabelled as in [`Graph::induced`].
    pub fn delete(&self, w: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset("deleted vertex set", w)?;
        self.induced(self.vertices() - w)
    }

    /// Open (`N(B)`) or closed (`N[B]`) neighbourhood of `B`.
    pub fn neighborhood(&self, b: VertexSet, closed: bool) -> VertexSet {
        let mut nb = VertexSet::EMPTY;
        for v in b {
            nb |= self.adj[v];
        }
        if closed {
            nb | b
        } else {
            nb - b
        }
    }

    /// Vertices of `within` reachable from `start` inside `G[within]`.
    pub fn reach(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start & within;
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Whether `G[s]` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.min() {
            None => true,
            Some(v) => self.reach(VertexSet::singleton(v), s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    /// Components of `G[within]`, ordered by least element.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.reach(VertexSet::singleton(v), within);
            out.push(c);
            rest -= c;
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// All `v` whose removal leaves `G` connected.
    pub fn non_cut_vertices(&self) -> Result<VertexSet> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let all = self.vertices();
        Ok(all
            .iter()
            .filter(|&v| self.is_connected_set(all.without(v)))
            .collect())
    }

    /// `G1 ⊔ G2`; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n();
        let mut g = Graph::empty(n1 + other.n())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + n1, v + n1);
        }
        Ok(g)
    }

    /// `G1 ∗ G2`: the disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n1 = self.n();
        let mut g = self.disjoint_union(other)?;
        for u in 0..n1 {
            for v in 0..other.n() {
                g.add_edge(u, v + n1);
            }
        }
        Ok(g)
    }

    /// Cartesian product `G1 × G2`. Vertex `(i, j)` gets id `i * n2 + j`.
    pub fn product(&self, other: &Graph) -> Result<Graph> {
        let (n1, n2) = (self.n(), other.n());
        let mut g = Graph::empty(n1 * n2)?;
        for i in 0..n1 {
            for (j, k) in other.edges() {
                g.add_edge(i * n2 + j, i * n2 + k);
            }
        }
        for (i, k) in self.edges() {
            for j in 0..n2 {
                g.add_edge(i * n2 + j, k * n2 + j);
            }
        }
        Ok(g)
    }

    /// Relabel by `perm[old] = new`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let image: VertexSet = perm.iter().copied().filter(|&v| v < n).collect();
        if perm.len() != n || image != self.vertices() {
            return Err(Error::Invalid(format!(
                "{perm:?} is not a permutation of 0..{n}"
            )));
        }
        let mut g = Graph::with_vertices(n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// All `r`-subsets `W` of `within` with `G[W]` connected, sorted ascending.
    ///
    /// Each connected set is grown from its least vertex, only ever adding
    /// vertices larger than that root and adjacent to the newest addition but
    /// not to anything placed earlier, so every set is produced exactly once.
    pub fn connected_subsets_within(&self, within: VertexSet, r: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if r == 0 {
            return out;
        }
        for root in within {
            let allowed = within & VertexSet::from_bits(!((2u64 << root).wrapping_sub(1)));
            let sub = VertexSet::singleton(root);
            let ext = self.adj[root] & allowed;
            self.grow(sub, ext, self.adj[root] | sub, allowed, r, &mut out);
        }
        out.sort_unstable();
        out
    }

    fn grow(
        &self,
        sub: VertexSet,
        mut ext: VertexSet,
        closed_nbhd: VertexSet,
        allowed: VertexSet,
        r: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if sub.len() == r {
            out.push(sub);
            return;
        }
        while let Some(w) = ext.min() {
            ext.remove(w);
            let exclusive = self.adj[w] & allowed & !closed_nbhd;
            self.grow(
                sub.with(w),
                ext | exclusive,
                closed_nbhd | self.adj[w],
                allowed,
                r,
                out,
            );
        }
    }

    /// Connected `r`-subsets of the whole vertex set.
    pub fn enumerate_connected_subsets(&self, r: usize) -> Vec<VertexSet> {
        self.connected_subsets_within(self.vertices(), r)
    }

    /// Whether `G[within]` has any connected `r`-subset, i.e. a component of
    /// at least `r` vertices.
    pub fn has_connected_subset_within(&self, within: VertexSet, r: usize) -> bool {
        r == 0
            || self
                .components_within(within)
                .iter()
                .any(|c| c.len() >= r)
    }

    /// The `r`-subsets `F` of `within \ A` with `G[F ∪ A]` connected.
    ///
    /// Sets containing `A` are grown from `A` as a single seed. When `G[A]` is
    /// disconnected the growth over-approximates (it treats `A` as contracted)
    /// and the candidates are filtered for genuine connectivity.
    pub fn supp_within(&self, within: VertexSet, a: VertexSet, r: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if r == 0 {
            if self.is_connected_set(a) {
                out.push(VertexSet::EMPTY);
            }
            return out;
        }
        if a.is_empty() {
            return self.connected_subsets_within(within, r);
        }
        let allowed = within - a;
        let nbhd = self.neighborhood(a, false);
        let mut grown = Vec::new();
        self.grow(a, nbhd & allowed, nbhd | a, allowed, a.len() + r, &mut grown);
        let a_connected = self.is_connected_set(a);
        out.extend(
            grown
                .into_iter()
                .filter(|&s| a_connected || self.is_connected_set(s))
                .map(|s| s - a),
        );
        out.sort_unstable();
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
