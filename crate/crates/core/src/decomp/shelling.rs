use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::{binomial, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingOrder {
    pub facets: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ShellingOutcome {
    Shellable { order: ShellingOrder },
    /// Pure complex with a negative entry in its h-vector.
    NegativeHVector { k: usize, value: i64 },
    /// The link of this vertex has a negative h-vector entry. Restricting a
    /// shelling to the facets through a vertex shells its link.
    LinkNegativeHVector { vertex: usize, k: usize, value: i64 },
    /// Every order was ruled out by exhaustive search.
    Exhausted { states: usize },
}

impl ShellingOutcome {
    pub fn is_shellable(&self) -> bool {
        matches!(self, ShellingOutcome::Shellable { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ShellingCheck {
    Valid,
    /// The facet at this 1-based position meets the earlier ones badly.
    Fails { index: usize, facet: VertexSet },
}

/// `h_0, ..., h_d` of a pure nonvoid complex with facets of size `d`; `None`
/// when the complex is void or not pure.
pub fn h_vector(d: &SimplicialComplex, max_faces: u64) -> Result<Option<Vec<i64>>> {
    if d.is_void() || !d.is_pure() {
        return Ok(None);
    }
    let f = d.f_vector(max_faces)?;
    let top = f.len() - 1;
    let h = (0..=top)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let c = binomial(top - i, k - i) as i64 * f[i] as i64;
                    if (k - i) % 2 == 0 { c } else { -c }
                })
                .sum()
        })
        .collect();
    Ok(Some(h))
}

/// Vertices `v` of `f` such that `f - v` is the intersection with an earlier facet.
fn restriction(f: VertexSet, placed: impl Iterator<Item = VertexSet>) -> VertexSet {
    placed
        .map(|g| f - g)
        .filter(|d| d.len() == 1)
        .fold(VertexSet::EMPTY, |acc, d| acc | d)
}

/// Whether `f` may follow `placed`: every intersection `g ∩ f` lies in some
/// `f - v` that is itself an intersection with a placed facet.
fn extends(f: VertexSet, placed: &[VertexSet]) -> Option<VertexSet> {
    let t = restriction(f, placed.iter().copied());
    placed.iter().all(|&g| !((f - g) & t).is_empty()).then_some(t)
}

/// Check an order against the shelling condition at every position.
pub fn verify_shelling(d: &SimplicialComplex, order: &ShellingOrder) -> Result<ShellingCheck> {
    let mut sorted = order.facets.clone();
    sorted.sort_unstable();
    let empty_order_ok = order.facets.is_empty() && d.facets().len() <= 1 && d.dimension().is_none_or(|k| k < 0);
    if sorted != d.facets() && !empty_order_ok {
        return Err(Error::Invalid("shelling order is not a permutation of the facets".into()));
    }
    for i in 1..order.facets.len() {
        if extends(order.facets[i], &order.facets[..i]).is_none() {
            return Ok(ShellingCheck::Fails {
                index: i + 1,
                facet: order.facets[i],
            });
        }
    }
    Ok(ShellingCheck::Valid)
}

/// Search for a shelling. A facet may extend a placed set regardless of the
/// order the set was placed in, so failed placed sets are memoized. For pure
/// complexes, a shelling places exactly `h_k` facets whose restriction has
/// `k` vertices. The restriction of an unplaced facet only grows as facets
/// are placed, and it never exceeds the ridges it shares with other facets,
/// so the remaining quota must admit an assignment within those bounds.
pub fn find_shelling(d: &SimplicialComplex, max_facets: usize, max_faces: u64) -> Result<ShellingOutcome> {
    let m = d.facets().len();
    if d.is_void() || d.is_empty_complex() {
        return Ok(ShellingOutcome::Shellable {
            order: ShellingOrder { facets: Vec::new() },
        });
    }
    if m > max_facets {
        return Err(Error::bound("facet count for shelling search", max_facets, m));
    }
    let quota = match h_vector(d, max_faces)? {
        Some(h) => {
            if let Some((k, &value)) = h.iter().enumerate().find(|(_, &v)| v < 0) {
                return Ok(ShellingOutcome::NegativeHVector { k, value });
            }
            Some(h.into_iter().map(|v| v as usize).collect::<Vec<_>>())
        }
        None => None,
    };
    if quota.is_some() {
        for v in d.support() {
            let link = d.link_unchecked(VertexSet::singleton(v));
            if let Some(h) = h_vector(&link, max_faces)? {
                if let Some((k, &value)) = h.iter().enumerate().find(|(_, &v)| v < 0) {
                    return Ok(ShellingOutcome::LinkNegativeHVector { vertex: v, k, value });
                }
            }
        }
    }
    let facets = d.facets();
    let adjacent: Vec<Vec<usize>> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && (facets[j] - facets[i]).len() == 1)
                .collect()
        })
        .collect();
    let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
    let ceiling = (0..m)
        .map(|i| restriction(facets[i], adjacent[i].iter().map(|&j| facets[j])).len())
        .collect();
    let mut search = ShellSearch {
        facets,
        adjacent,
        ceiling,
        quota,
        used: vec![0; top + 1],
        placed: Vec::with_capacity(m),
        placed_facets: Vec::with_capacity(m),
        in_order: vec![0u64; m.div_ceil(64)],
        failed: HashSet::new(),
    };
    for first in 0..m {
        if search.place(first, 0) {
            if search.run() {
                let order = search.placed.iter().map(|&i| facets[i]).collect();
                return Ok(ShellingOutcome::Shellable {
                    order: ShellingOrder { facets: order },
                });
            }
            search.unplace(0);
        }
    }
    Ok(ShellingOutcome::Exhausted {
        states: search.failed.len(),
    })
}

struct ShellSearch<'a> {
    facets: &'a [VertexSet],
    adjacent: Vec<Vec<usize>>,
    /// Largest restriction each facet can ever have.
    ceiling: Vec<usize>,
    quota: Option<Vec<usize>>,
    used: Vec<usize>,
    placed: Vec<usize>,
    placed_facets: Vec<VertexSet>,
    in_order: Vec<u64>,
    failed: HashSet<Vec<u64>>,
}

impl ShellSearch<'_> {
    fn is_placed(&self, i: usize) -> bool {
        self.in_order[i / 64] >> (i % 64) & 1 == 1
    }

    /// Place facet `i` with a restriction of `size` vertices, unless that
    /// exceeds the h-vector quota.
    fn place(&mut self, i: usize, size: usize) -> bool {
        if let Some(q) = &self.quota {
            if self.used[size] >= q[size] {
                return false;
            }
        }
        self.used[size] += 1;
        self.placed.push(i);
        self.placed_facets.push(self.facets[i]);
        self.in_order[i / 64] |= 1 << (i % 64);
        true
    }

    fn unplace(&mut self, size: usize) {
        let i = self.placed.pop().expect("something placed");
        self.placed_facets.pop();
        self.used[size] -= 1;
        self.in_order[i / 64] &= !(1 << (i % 64));
    }

    fn run(&mut self) -> bool {
        if self.placed.len() == self.facets.len() {
            return true;
        }
        if self.failed.contains(&self.in_order) {
            return false;
        }
        if !self.quota_feasible() {
            self.failed.insert(self.in_order.clone());
            return false;
        }
        let mut candidates: Vec<(usize, usize)> = Vec::new();
        let mut seen = vec![false; self.facets.len()];
        for &p in &self.placed {
            for &j in &self.adjacent[p] {
                if !seen[j] && !self.is_placed(j) {
                    seen[j] = true;
                    if let Some(t) = extends(self.facets[j], &self.placed_facets) {
                        candidates.push((t.len(), j));
                    }
                }
            }
        }
        candidates.sort_unstable();
        for (size, j) in candidates {
            if self.place(j, size) {
                if self.run() {
                    return true;
                }
                self.unplace(size);
            }
        }
        self.failed.insert(self.in_order.clone());
        false
    }

    /// Whether the unplaced facets can still meet the remaining h-vector
    /// quota, each taking a restriction size between its current restriction
    /// and its ceiling. Greedy by size, serving the tightest ceilings first.
    fn quota_feasible(&self) -> bool {
        let Some(q) = &self.quota else { return true };
        let mut bounds: Vec<(usize, usize)> = (0..self.facets.len())
            .filter(|&j| !self.is_placed(j))
            .map(|j| (restriction(self.facets[j], self.placed_facets.iter().copied()).len(), self.ceiling[j]))
            .collect();
        bounds.sort_unstable();
        let mut pool: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
        let mut next = 0;
        for (k, &cap) in q.iter().enumerate() {
            while next < bounds.len() && bounds[next].0 <= k {
                pool.push(Reverse(bounds[next].1));
                next += 1;
            }
            for _ in 0..cap - self.used[k] {
                pool.pop();
            }
            if pool.peek().is_some_and(|&Reverse(hi)| hi <= k) {
                return false;
            }
        }
        next == bounds.len() && pool.is_empty()
    }
}
