//! Uniform clutters, the connected clutter of a graph, and clutter chordality.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::{binomial, VertexSet};

/// A `d`-uniform clutter on the universe `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Clutter {
    n: usize,
    d: usize,
    circuits: Vec<VertexSet>,
}

impl Clutter {
    pub fn new(n: usize, d: usize, mut circuits: Vec<VertexSet>) -> Result<Self> {
        if n > VertexSet::CAPACITY {
            return Err(Error::TooManyVertices {
                n,
                max: VertexSet::CAPACITY,
            });
        }
        let universe = VertexSet::full(n);
        for c in &circuits {
            if c.len() != d {
                return Err(Error::Invalid(format!("circuit {c} does not have size {d}")));
            }
            if !c.is_subset(universe) {
                return Err(Error::NotSubset {
                    what: "circuit",
                    set: c.to_string(),
                    of: universe.to_string(),
                });
            }
        }
        circuits.sort_unstable();
        circuits.dedup();
        Ok(Clutter { n, d, circuits })
    }

    fn from_sorted(n: usize, d: usize, circuits: Vec<VertexSet>) -> Self {
        debug_assert!(circuits.windows(2).all(|w| w[0] < w[1]));
        Clutter { n, d, circuits }
    }

    /// `Con_r(G)`: the connected `r`-subsets of `G`.
    pub fn con_r(g: &Graph, r: usize) -> Clutter {
        Clutter::from_sorted(g.n(), r, g.enumerate_connected_subsets(r))
    }

    pub fn universe(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn circuits(&self) -> &[VertexSet] {
        &self.circuits
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains(&self, e: VertexSet) -> bool {
        self.circuits.binary_search(&e).is_ok()
    }

    /// All `d`-subsets of the universe that are not circuits.
    pub fn complement(&self) -> Clutter {
        let circuits = self
            .universe()
            .k_subsets(self.d)
            .filter(|e| !self.contains(*e))
            .collect::<Vec<_>>();
        let mut circuits = circuits;
        circuits.sort_unstable();
        Clutter::from_sorted(self.n, self.d, circuits)
    }

    /// `H \_d W`: drop every circuit containing `W`.
    pub fn deletion(&self, w: VertexSet) -> Clutter {
        Clutter::from_sorted(
            self.n,
            self.d,
            self.circuits
                .iter()
                .copied()
                .filter(|c| !w.is_subset(*c))
                .collect(),
        )
    }

    /// Circuits contained in `w`.
    pub fn induced(&self, w: VertexSet) -> Vec<VertexSet> {
        self.circuits.iter().copied().filter(|c| c.is_subset(w)).collect()
    }

    /// Open neighbourhood: vertices `x ∉ B` lying in a circuit inside `B ∪ {x}`.
    pub fn neighborhood(&self, b: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for &c in &self.circuits {
            let extra = c - b;
            if extra.len() == 1 {
                out |= extra;
            }
        }
        out
    }

    /// Whether every `d`-subset of `w` is a circuit.
    pub fn is_clique(&self, w: VertexSet) -> bool {
        let inside = self.circuits.iter().filter(|c| c.is_subset(w)).count() as u64;
        inside == binomial(w.len(), self.d)
    }

    /// The `(d-1)`-subsets `Z` of circuits whose closed neighbourhood is a clique.
    pub fn simplicial_maximal_subcircuits(&self) -> Vec<VertexSet> {
        if self.d == 0 {
            return Vec::new();
        }
        let mut subs: Vec<VertexSet> = self
            .circuits
            .iter()
            .flat_map(|c| c.k_subsets(self.d - 1))
            .collect();
        subs.sort_unstable();
        subs.dedup();
        subs.retain(|&z| self.is_clique(self.neighborhood(z) | z));
        subs
    }

    pub fn is_simplicial(&self, z: VertexSet) -> bool {
        z.len() + 1 == self.d
            && self.circuits.iter().any(|c| z.is_subset(*c))
            && self.is_clique(self.neighborhood(z) | z)
    }

    /// Search for an elimination sequence of simplicial maximal subcircuits
    /// that empties the circuit set.
    ///
    /// Non-chordality is inherited upwards: replaying an elimination sequence
    /// of `H` on an induced subclutter `H[W]` (skipping steps outside `W`)
    /// stays valid, so a non-chordal `H[W]` refutes `H`. When the direct
    /// search runs long, vertex-deleted subclutters are tried as refutations
    /// before the direct search resumes without a budget.
    pub fn is_chordal(&self, max_circuits: usize) -> Result<Option<EliminationCertificate>> {
        if self.circuits.len() > max_circuits {
            return Err(Error::bound("circuit count", max_circuits, self.circuits.len()));
        }
        let mut refuted = HashSet::new();
        let mut confirmed = HashSet::new();
        Ok(self.decide_chordal(self.support(), &mut refuted, &mut confirmed))
    }

    /// Vertices lying in at least one circuit.
    pub fn support(&self) -> VertexSet {
        self.circuits.iter().fold(VertexSet::EMPTY, |acc, &c| acc | c)
    }

    fn decide_chordal(
        &self,
        w: VertexSet,
        refuted: &mut HashSet<VertexSet>,
        confirmed: &mut HashSet<VertexSet>,
    ) -> Option<EliminationCertificate> {
        let sub = Clutter::from_sorted(self.n, self.d, self.induced(w));
        let mut search = ChordalSearch::new(&sub);
        if let Some(found) = search.run(Some(CHORDAL_NODE_BUDGET)) {
            if found.is_none() {
                refuted.insert(w);
            } else {
                confirmed.insert(w);
            }
            return found;
        }
        for v in w {
            let smaller = sub.support() & w.without(v);
            if smaller.is_empty() || confirmed.contains(&smaller) {
                continue;
            }
            let is_refuted = refuted.contains(&smaller)
                || self.decide_chordal(smaller, refuted, confirmed).is_none();
            if is_refuted {
                refuted.insert(w);
                return None;
            }
        }
        let found = search.run(None).expect("unbounded search always finishes");
        if found.is_none() {
            refuted.insert(w);
        } else {
            confirmed.insert(w);
        }
        found
    }

    /// Replay `cert`, checking simpliciality at every step.
    pub fn verify_elimination(&self, cert: &EliminationCertificate) -> EliminationCheck {
        if cert.d != self.d {
            return EliminationCheck::WrongUniformity {
                expected: self.d,
                found: cert.d,
            };
        }
        let mut current = self.clone();
        for (step, &z) in cert.subcircuits.iter().enumerate() {
            if !current.is_simplicial(z) {
                return EliminationCheck::NotSimplicial { step, subcircuit: z };
            }
            current = current.deletion(z);
        }
        if current.is_empty() {
            EliminationCheck::Valid
        } else {
            EliminationCheck::Leftover {
                remaining: current.circuits.len(),
            }
        }
    }

    /// Matching number and induced matching number.
    pub fn matching_numbers(&self, max_circuits: usize) -> Result<MatchingNumbers> {
        if self.circuits.len() > max_circuits {
            return Err(Error::bound("circuit count", max_circuits, self.circuits.len()));
        }
        Ok(MatchingNumbers {
            nu: Matcher::new(self, false).run(),
            gamma: Matcher::new(self, true).run(),
        })
    }

    /// Two disjoint circuits with no other circuit inside their union, if any.
    pub fn find_gap(&self) -> Option<(VertexSet, VertexSet)> {
        for (i, &a) in self.circuits.iter().enumerate() {
            for &b in &self.circuits[i + 1..] {
                if a.is_disjoint(b) && self.induced(a | b).len() == 2 {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingNumbers {
    pub nu: usize,
    pub gamma: usize,
}

/// `γ_r(G) ≤ 1`, with a witnessing pair of circuits when it fails.
pub fn find_r_gap(g: &Graph, r: usize) -> Option<(VertexSet, VertexSet)> {
    let circuits = g.enumerate_connected_subsets(r);
    for (i, &a) in circuits.iter().enumerate() {
        let reach_a = g.neighborhood(a, true);
        for &b in &circuits[i + 1..] {
            // For r >= 2, an edge between two disjoint connected r-sets puts
            // a third connected r-set inside their union; without such an
            // edge the union holds only these two. Singletons never interfere.
            if r >= 2 && !reach_a.is_disjoint(b) {
                continue;
            }
            return Some((a, b));
        }
    }
    None
}

pub fn is_r_gap_free(g: &Graph, r: usize) -> bool {
    find_r_gap(g, r).is_none()
}

/// An ordered list of `(d-1)`-sets to delete one after another.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationCertificate {
    pub d: usize,
    pub subcircuits: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum EliminationCheck {
    Valid,
    WrongUniformity { expected: usize, found: usize },
    NotSimplicial { step: usize, subcircuit: VertexSet },
    Leftover { remaining: usize },
}

impl EliminationCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, EliminationCheck::Valid)
    }
}

/// Remaining circuits as a bitset over indices into the starting circuit list.
type State = Vec<u64>;

/// Search nodes the direct elimination search may visit before induced
/// subclutters are tried as refutations.
const CHORDAL_NODE_BUDGET: usize = 20_000;

struct ChordalSearch<'a> {
    h: &'a Clutter,
    /// For each candidate subcircuit, the circuits containing it.
    subcircuits: Vec<(VertexSet, State)>,
    /// States proven not to be emptiable. Only fully explored states are
    /// recorded, so the set stays valid across budget interruptions.
    failed: HashSet<State>,
    nodes: usize,
}

impl<'a> ChordalSearch<'a> {
    fn new(h: &'a Clutter) -> Self {
        let m = h.circuits.len();
        let words = m.div_ceil(64);
        let mut subs: Vec<VertexSet> = if h.d == 0 {
            Vec::new()
        } else {
            h.circuits.iter().flat_map(|c| c.k_subsets(h.d - 1)).collect()
        };
        subs.sort_unstable();
        subs.dedup();
        let subcircuits = subs
            .into_iter()
            .map(|z| {
                let mut mask = vec![0u64; words];
                for (i, c) in h.circuits.iter().enumerate() {
                    if z.is_subset(*c) {
                        mask[i / 64] |= 1 << (i % 64);
                    }
                }
                (z, mask)
            })
            .collect();
        ChordalSearch {
            h,
            subcircuits,
            failed: HashSet::new(),
            nodes: 0,
        }
    }

    /// `None` when the node budget ran out before a decision.
    fn run(&mut self, budget: Option<usize>) -> Option<Option<EliminationCertificate>> {
        let m = self.h.circuits.len();
        let mut state = vec![0u64; m.div_ceil(64)];
        for i in 0..m {
            state[i / 64] |= 1 << (i % 64);
        }
        self.nodes = 0;
        let mut path = Vec::new();
        let found = self.dfs(&state, &mut path, budget.unwrap_or(usize::MAX))?;
        Some(found.then(|| EliminationCertificate {
            d: self.h.d,
            subcircuits: path,
        }))
    }

    fn alive<'s>(&'s self, state: &'s State) -> impl Iterator<Item = VertexSet> + 's {
        let circuits = &self.h.circuits;
        state.iter().enumerate().flat_map(move |(w, &bits)| {
            let mut b = bits;
            std::iter::from_fn(move || {
                if b == 0 {
                    return None;
                }
                let i = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(circuits[w * 64 + i])
            })
        })
    }

    /// Simplicial candidates in `state` with the circuit set they remove,
    /// ordered by closed-neighbourhood size then lexicographically.
    fn candidates(&self, state: &State) -> Vec<(usize, usize)> {
        let d = self.h.d;
        let mut out = Vec::new();
        for (idx, (z, mask)) in self.subcircuits.iter().enumerate() {
            let mut containing = 0usize;
            let mut closure = *z;
            for (w, (&s, &m)) in state.iter().zip(mask).enumerate() {
                let mut hits = s & m;
                containing += hits.count_ones() as usize;
                while hits != 0 {
                    let i = hits.trailing_zeros() as usize;
                    hits &= hits - 1;
                    closure |= self.h.circuits[w * 64 + i];
                }
            }
            if containing == 0 {
                continue;
            }
            let inside = self.alive(state).filter(|c| c.is_subset(closure)).count() as u64;
            if inside == binomial(closure.len(), d) {
                out.push((closure.len(), idx));
            }
        }
        out.sort_unstable();
        out
    }

    /// Delete every subcircuit lying in exactly one remaining circuit, until
    /// none is left. Such a deletion never turns a chordal clutter into a
    /// non-chordal one: replaying any valid sequence on the smaller clutter
    /// keeps every step simplicial (a step that no longer removes anything is
    /// dropped), so taking these moves without branching loses no solutions.
    fn strip_private(&self, state: &mut State, path: &mut Vec<VertexSet>) {
        loop {
            let mut changed = false;
            for (z, mask) in &self.subcircuits {
                let containing: u32 = state.iter().zip(mask).map(|(&s, &m)| (s & m).count_ones()).sum();
                if containing == 1 {
                    for (s, &m) in state.iter_mut().zip(mask) {
                        *s &= !m;
                    }
                    path.push(*z);
                    changed = true;
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn dfs(&mut self, state: &State, path: &mut Vec<VertexSet>, budget: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > budget {
            return None;
        }
        let mark = path.len();
        let mut state = state.clone();
        self.strip_private(&mut state, path);
        if state.iter().all(|&w| w == 0) {
            return Some(true);
        }
        if !self.failed.contains(&state) {
            for (_, idx) in self.candidates(&state) {
                let (z, mask) = &self.subcircuits[idx];
                let z = *z;
                let next: State = state.iter().zip(mask).map(|(&s, &m)| s & !m).collect();
                path.push(z);
                if self.dfs(&next, path, budget)? {
                    return Some(true);
                }
                path.pop();
            }
            self.failed.insert(state);
        }
        path.truncate(mark);
        Some(false)
    }
}

/// Branch and bound for the (induced) matching number.
struct Matcher<'a> {
    h: &'a Clutter,
    induced: bool,
    best: usize,
}

impl<'a> Matcher<'a> {
    fn new(h: &'a Clutter, induced: bool) -> Self {
        Matcher { h, induced, best: 0 }
    }

    fn run(mut self) -> usize {
        // Greedy lower bound first.
        let mut used = VertexSet::EMPTY;
        let mut greedy = 0;
        for &c in &self.h.circuits {
            if self.can_add(used, greedy, c) {
                used |= c;
                greedy += 1;
            }
        }
        self.best = greedy;
        self.branch(0, VertexSet::EMPTY, 0);
        self.best
    }

    fn can_add(&self, used: VertexSet, size: usize, c: VertexSet) -> bool {
        if !c.is_disjoint(used) {
            return false;
        }
        !self.induced || self.h.induced(used | c).len() == size + 1
    }

    fn branch(&mut self, start: usize, used: VertexSet, size: usize) {
        self.best = self.best.max(size);
        let free = self.h.n - used.len();
        if self.h.d == 0 || size + free / self.h.d <= self.best {
            return;
        }
        for i in start..self.h.circuits.len() {
            let c = self.h.circuits[i];
            if self.can_add(used, size, c) {
                self.branch(i + 1, used | c, size + 1);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::tests::arb_graph;
    use crate::graph::{is_chordal, Family};
    use proptest::prelude::*;

    fn vs(ids: &[usize]) -> VertexSet {
        ids.iter().collect()
    }

    fn edge_clutter(g: &Graph) -> Clutter {
        Clutter::con_r(g, 2)
    }

    #[test]
    fn con_r_basics() {
        let g = fixtures::chordal_example_graph();
        let c2 = Clutter::con_r(&g, 2);
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| vs(&[u, v])).collect();
        assert_eq!(c2.circuits(), &edges[..]);
        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(Clutter::con_r(&p3, 3).circuits(), &[vs(&[0, 1, 2])]);
    }

    #[test]
    fn complement_examples() {
        let complete = Clutter::new(5, 3, VertexSet::full(5).k_subsets(3).collect()).unwrap();
        assert!(complete.complement().is_empty());
        let h = Clutter::con_r(&fixtures::gap_free_example_graph(), 3);
        assert_eq!(h.complement().complement(), h);
        assert_eq!(
            h.circuits().len() + h.complement().circuits().len(),
            binomial(8, 3) as usize
        );
    }

    #[test]
    fn deletion_examples() {
        let h = Clutter::new(4, 2, vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[0, 3])]).unwrap();
        assert!(h.deletion(vs(&[0])).is_empty());
        let far = Clutter::new(6, 2, vec![vs(&[0, 1]), vs(&[2, 3])]).unwrap();
        assert_eq!(far.deletion(vs(&[5])), far);

        let c = Clutter::con_r(&fixtures::gap_free_example_graph(), 3).complement();
        let e1 = fixtures::gap_free_example_elimination()[0];
        let containing = c.circuits().iter().filter(|x| e1.is_subset(**x)).count();
        assert_eq!(c.deletion(e1).circuits().len(), c.circuits().len() - containing);
    }

    #[test]
    fn simplicial_subcircuits() {
        let complete = Clutter::new(5, 3, VertexSet::full(5).k_subsets(3).collect()).unwrap();
        assert_eq!(complete.simplicial_maximal_subcircuits().len(), 10);

        let g = fixtures::chordal_example_graph();
        let simplicial_vertices: Vec<VertexSet> = (0..g.n())
            .filter(|&v| g.degree(v) > 0)
            .filter(|&v| {
                let nb = g.neighbors(v);
                nb.iter().all(|a| nb.without(a).is_subset(g.neighbors(a)))
            })
            .map(VertexSet::singleton)
            .collect();
        assert_eq!(edge_clutter(&g).simplicial_maximal_subcircuits(), simplicial_vertices);

        let c = Clutter::con_r(&fixtures::gap_free_example_graph(), 3).complement();
        assert!(c.is_simplicial(fixtures::gap_free_example_elimination()[0]));
    }

    #[test]
    fn chordality_examples() {
        let empty = Clutter::new(4, 3, vec![]).unwrap();
        assert_eq!(
            empty.is_chordal(10_000).unwrap(),
            Some(EliminationCertificate { d: 3, subcircuits: vec![] })
        );
        let c4 = edge_clutter(&Family::Cycle(4).build().unwrap());
        assert_eq!(c4.is_chordal(10_000).unwrap(), None);

        let c = Clutter::con_r(&fixtures::gap_free_example_graph(), 3).complement();
        let cert = c.is_chordal(10_000).unwrap().expect("chordal");
        assert!(c.verify_elimination(&cert).is_valid());
        let reference = EliminationCertificate {
            d: 3,
            subcircuits: fixtures::gap_free_example_elimination(),
        };
        assert_eq!(c.verify_elimination(&reference), EliminationCheck::Valid);
    }

    #[test]
    fn elimination_replay_failures() {
        let c = Clutter::con_r(&fixtures::gap_free_example_graph(), 3).complement();
        let mut reversed = fixtures::gap_free_example_elimination();
        reversed.reverse();
        let check = c.verify_elimination(&EliminationCertificate {
            d: 3,
            subcircuits: reversed.clone(),
        });
        // Independent replay: find the first step whose closed neighbourhood
        // is not a clique by recounting d-subsets directly.
        let mut current = c.circuits().to_vec();
        let mut expected = EliminationCheck::Leftover { remaining: 0 };
        for (step, &z) in reversed.iter().enumerate() {
            let nbhd: VertexSet = current
                .iter()
                .filter(|e| z.is_subset(**e))
                .fold(z, |acc, &e| acc | e);
            let in_sub = current.iter().any(|e| z.is_subset(*e));
            let all_present = nbhd.k_subsets(3).all(|t| current.contains(&t));
            if !in_sub || !all_present {
                expected = EliminationCheck::NotSimplicial { step, subcircuit: z };
                break;
            }
            current.retain(|e| !z.is_subset(*e));
        }
        if let EliminationCheck::Leftover { .. } = expected {
            expected = if current.is_empty() {
                EliminationCheck::Valid
            } else {
                EliminationCheck::Leftover { remaining: current.len() }
            };
        }
        assert_eq!(check, expected);

        let empty = Clutter::new(3, 2, vec![]).unwrap();
        assert!(empty
            .verify_elimination(&EliminationCertificate { d: 2, subcircuits: vec![] })
            .is_valid());
    }

    #[test]
    fn matching_examples() {
        let k2 = Family::Complete(2).build().unwrap();
        let two = edge_clutter(&k2.disjoint_union(&k2).unwrap());
        assert_eq!(two.matching_numbers(10_000).unwrap(), MatchingNumbers { nu: 2, gamma: 2 });
        let one = Clutter::new(3, 3, vec![vs(&[0, 1, 2])]).unwrap();
        assert_eq!(one.matching_numbers(10_000).unwrap(), MatchingNumbers { nu: 1, gamma: 1 });
        let con3 = Clutter::con_r(&fixtures::gap_free_example_graph(), 3);
        assert_eq!(con3.matching_numbers(10_000).unwrap().gamma, 1);
        assert!(con3.matching_numbers(3).unwrap_err().is_bound_exceeded());
    }

    #[test]
    fn gap_examples() {
        for r in 2..=6 {
            let n = r + 1;
            let g = Family::Ladder(n).build().unwrap();
            let (e1, e2) = fixtures::ladder_gap(n, r);
            let con = Clutter::con_r(&g, r);
            assert!(con.contains(e1) && con.contains(e2), "r={r}");
            assert_eq!(con.induced(e1 | e2).len(), 2, "r={r}");
            assert!(!is_r_gap_free(&g, r));
        }
        for r in [3, 4] {
            assert!(is_r_gap_free(&Family::Unicyclic(r).build().unwrap(), r));
        }
        assert!(is_r_gap_free(&Family::Path(5).build().unwrap(), 3));
    }

    /// Plain exhaustive elimination search without memo or forced moves.
    fn brute_chordal(h: &Clutter) -> bool {
        h.is_empty()
            || h
                .simplicial_maximal_subcircuits()
                .into_iter()
                .any(|z| brute_chordal(&h.deletion(z)))
    }

    fn arb_clutter() -> impl Strategy<Value = Clutter> {
        (4usize..=6, 2usize..=3).prop_flat_map(|(n, d)| {
            let all: Vec<VertexSet> = VertexSet::full(n).k_subsets(d).collect();
            let len = all.len();
            proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
                let circuits = all.iter().zip(&keep).filter(|(_, k)| **k).map(|(c, _)| *c).collect();
                Clutter::new(n, d, circuits).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn chordality_search_matches_plain_search(h in arb_clutter()) {
            let found = h.is_chordal(10_000).unwrap();
            prop_assert_eq!(found.is_some(), brute_chordal(&h));
            if let Some(cert) = found {
                prop_assert!(h.verify_elimination(&cert).is_valid());
            }
        }
    }

    proptest! {
        #[test]
        fn d2_chordality_matches_graph_chordality(g in arb_graph(7)) {
            // Isolated vertices play no role in the edge clutter.
            let h = edge_clutter(&g);
            let cert = h.is_chordal(10_000).unwrap();
            prop_assert_eq!(cert.is_some(), is_chordal(&g).is_some());
            if let Some(cert) = cert {
                prop_assert!(h.verify_elimination(&cert).is_valid());
            }
        }

        #[test]
        fn gamma_at_most_nu(g in arb_graph(7), r in 1usize..4) {
            let h = Clutter::con_r(&g, r);
            let m = h.matching_numbers(10_000).unwrap();
            prop_assert!(m.gamma <= m.nu);
            prop_assert_eq!(m.gamma <= 1, is_r_gap_free(&g, r));
            prop_assert_eq!(h.find_gap().is_none(), m.gamma <= 1);
        }

        #[test]
        fn complement_involution(g in arb_graph(7), r in 1usize..5) {
            let h = Clutter::con_r(&g, r);
            prop_assert_eq!(h.complement().complement(), h);
        }

        #[test]
        fn con_r_matches_connected_subsets(g in arb_graph(8), r in 1usize..6) {
            prop_assert_eq!(Clutter::con_r(&g, r).circuits().to_vec(), g.enumerate_connected_subsets(r));
        }
    }
}
