//! Simplicial complexes stored by facets over an explicit ground set, and the
//! complexes built from graphs.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::VertexSet;

/// A simplicial complex given by its facets over an explicit ground set.
///
/// The void complex has no facets; the empty complex has the single facet `∅`.
/// Facets are kept maximal and sorted.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawComplex")]
pub struct SimplicialComplex {
    ground: VertexSet,
    facets: Vec<VertexSet>,
}

#[derive(Deserialize)]
struct RawComplex {
    ground: VertexSet,
    facets: Vec<VertexSet>,
}

impl TryFrom<RawComplex> for SimplicialComplex {
    type Error = Error;

    fn try_from(raw: RawComplex) -> Result<Self> {
        SimplicialComplex::new(raw.ground, raw.facets)
    }
}

/// Keep only inclusion-maximal sets, sorted and deduplicated.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    // Larger sets first, so each set only needs comparing with kept ones.
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keep only inclusion-minimal sets, sorted and deduplicated.
pub fn minimal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// The complex generated by `generators` over `ground`.
    pub fn new(ground: VertexSet, generators: Vec<VertexSet>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| !g.is_subset(ground)) {
            return Err(Error::NotSubset {
                what: "facet",
                set: bad.to_string(),
                of: ground.to_string(),
            });
        }
        Ok(Self::from_generators(ground, generators))
    }

    pub(crate) fn from_generators(ground: VertexSet, generators: Vec<VertexSet>) -> Self {
        debug_assert!(generators.iter().all(|g| g.is_subset(ground)));
        SimplicialComplex {
            ground,
            facets: maximal_sets(generators),
        }
    }

    pub fn void(ground: VertexSet) -> Self {
        SimplicialComplex {
            ground,
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn empty(ground: VertexSet) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex on `ground`.
    pub fn simplex(ground: VertexSet) -> Self {
        SimplicialComplex {
            ground,
            facets: vec![ground],
        }
    }

    /// All proper subsets of `ground` of size `|ground| - 1`.
    pub fn simplex_boundary(ground: VertexSet) -> Self {
        let k = ground.len();
        if k == 0 {
            return Self::void(ground);
        }
        Self::from_generators(ground, ground.k_subsets(k - 1).collect())
    }

    pub fn ground(&self) -> VertexSet {
        self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Vertices lying in some facet.
    pub fn support(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc | f)
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    /// A single facet (this includes the empty complex).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
            && self.facets.iter().all(|f| f.len() == self.facets[0].len())
    }

    pub fn contains_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(*g))
    }

    pub fn is_facet(&self, f: VertexSet) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    /// Every face, grouped by size (`faces[k]` holds the faces with `k`
    /// vertices, each group sorted).
    pub fn faces_by_size(&self, max_faces: u64) -> Result<Vec<Vec<VertexSet>>> {
        let Some(dim) = self.dimension() else {
            return Ok(Vec::new());
        };
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for &f in &self.facets {
            for s in f.subsets() {
                if seen.insert(s) && seen.len() as u64 > max_faces {
                    return Err(Error::bound("face count", max_faces, seen.len()));
                }
            }
        }
        let mut out = vec![Vec::new(); (dim + 2) as usize];
        for s in seen {
            out[s.len()].push(s);
        }
        for group in &mut out {
            group.sort_unstable();
        }
        Ok(out)
    }

    /// All faces, sorted by size and then lexicographically.
    pub fn faces(&self, max_faces: u64) -> Result<Vec<VertexSet>> {
        Ok(self.faces_by_size(max_faces)?.into_iter().flatten().collect())
    }

    /// `f[k]` counts faces of dimension `k - 1`, starting with `f_{-1}`.
    pub fn f_vector(&self, max_faces: u64) -> Result<Vec<u64>> {
        Ok(self
            .faces_by_size(max_faces)?
            .iter()
            .map(|g| g.len() as u64)
            .collect())
    }

    /// `lk(F) = {H : H ∩ F = ∅, H ∪ F ∈ Δ}` over the ground set minus `F`.
    pub fn link(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains_face(f) {
            return Err(Error::NotAFace(f.to_string()));
        }
        Ok(self.link_unchecked(f))
    }

    pub(crate) fn link_unchecked(&self, f: VertexSet) -> SimplicialComplex {
        Self::from_generators(
            self.ground - f,
            self.facets
                .iter()
                .filter(|g| f.is_subset(**g))
                .map(|&g| g - f)
                .collect(),
        )
    }

    /// `del(F) = {H : H ∩ F = ∅}` over the ground set minus `F`.
    pub fn deletion(&self, f: VertexSet) -> Result<SimplicialComplex> {
        if !f.is_subset(self.ground) {
            return Err(Error::NotSubset {
                what: "deleted face",
                set: f.to_string(),
                of: self.ground.to_string(),
            });
        }
        Ok(self.deletion_unchecked(f))
    }

    pub(crate) fn deletion_unchecked(&self, f: VertexSet) -> SimplicialComplex {
        Self::from_generators(self.ground - f, self.facets.iter().map(|&g| g - f).collect())
    }

    /// The subcomplex of faces inside `w`, over ground `w`.
    pub fn induced(&self, w: VertexSet) -> SimplicialComplex {
        Self::from_generators(
            w & self.ground,
            self.facets.iter().map(|&g| g & w).collect(),
        )
    }

    /// `Δ1 ∗ Δ2`; the ground sets must be disjoint.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if !self.ground.is_disjoint(other.ground) {
            return Err(Error::Invalid(format!(
                "join needs disjoint ground sets, {} and {} overlap",
                self.ground, other.ground
            )));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &a in &self.facets {
            for &b in &other.facets {
                facets.push(a | b);
            }
        }
        Ok(Self::from_generators(self.ground | other.ground, facets))
    }

    /// Union of two complexes over the union of their ground sets.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let mut facets = self.facets.clone();
        facets.extend_from_slice(&other.facets);
        Self::from_generators(self.ground | other.ground, facets)
    }

    /// Facets with the support relabelled to `0..k` in increasing order, a key
    /// shared by complexes that differ only by unused ground vertices or an
    /// order-preserving renaming.
    pub fn compact_key(&self) -> Vec<VertexSet> {
        let mut map = [0usize; VertexSet::CAPACITY];
        for (i, v) in self.support().iter().enumerate() {
            map[v] = i;
        }
        let mut key: Vec<VertexSet> = self.facets.iter().map(|f| f.map(&map)).collect();
        key.sort_unstable();
        key
    }

    /// Same complex, ground set replaced.
    pub fn with_ground(&self, ground: VertexSet) -> Result<SimplicialComplex> {
        SimplicialComplex::new(ground, self.facets.clone())
    }

    /// Relabel through `map[old] = new`.
    pub fn relabel(&self, map: &[usize]) -> SimplicialComplex {
        Self::from_generators(
            self.ground.map(map),
            self.facets.iter().map(|f| f.map(map)).collect(),
        )
    }

    /// Alexander dual over the same ground set: facets are the complements of
    /// the minimal non-faces. A set is a non-face exactly when it meets the
    /// complement of every facet, so the minimal non-faces are the minimal
    /// transversals of the facet complements, found without enumerating faces.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let complements: Vec<VertexSet> = self.facets.iter().map(|&f| self.ground - f).collect();
        let minimal_nonfaces = minimal_transversals(&complements);
        Self::from_generators(
            self.ground,
            minimal_nonfaces.into_iter().map(|m| self.ground - m).collect(),
        )
    }
}

/// Minimal sets meeting every member of `family` (Berge's incremental method).
/// An empty member admits no transversal at all.
pub fn minimal_transversals(family: &[VertexSet]) -> Vec<VertexSet> {
    let mut family = minimal_sets(family.to_vec());
    // Small edges first keeps the intermediate lists short.
    family.sort_by_key(|e| e.len());
    let mut current = vec![VertexSet::EMPTY];
    for &edge in &family {
        let mut next = Vec::with_capacity(current.len());
        for &t in &current {
            if !t.is_disjoint(edge) {
                next.push(t);
            } else {
                next.extend(edge.iter().map(|v| t.with(v)));
            }
        }
        current = minimal_sets(next);
        if current.is_empty() {
            break;
        }
    }
    current
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(ground={}, facets=[", self.ground)?;
        for (i, x) in self.facets.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("])")
    }
}

/// `Supp_r(A, G)`: the `r`-sets `F` disjoint from `A` with `G[F ∪ A]` connected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportFamily {
    pub a: VertexSet,
    pub r: usize,
    pub sets: Vec<VertexSet>,
}

impl SupportFamily {
    pub fn new(g: &Graph, a: VertexSet, r: usize) -> Result<Self> {
        check_a(g, a)?;
        Ok(SupportFamily {
            a,
            r,
            sets: g.supp_within(g.vertices(), a, r),
        })
    }

    /// Re-check every member against the defining conditions.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.sets.iter().all(|&f| {
            f.len() == self.r && f.is_disjoint(self.a) && g.is_connected_set(f | self.a)
        })
    }
}

fn check_a(g: &Graph, a: VertexSet) -> Result<()> {
    if a.is_subset(g.vertices()) {
        Ok(())
    } else {
        Err(Error::NotSubset {
            what: "A",
            set: a.to_string(),
            of: g.vertices().to_string(),
        })
    }
}

fn check_r(r: usize) -> Result<()> {
    if r >= 1 {
        Ok(())
    } else {
        Err(Error::param("r", r, "r >= 1"))
    }
}

/// `Σ_r(A, G)` over ground `V(G) \ A`, generated by `V(G) \ (F ∪ A)` for `F ∈ Supp_r(A, G)`.
pub fn sigma_r(g: &Graph, a: VertexSet, r: usize) -> Result<SimplicialComplex> {
    check_a(g, a)?;
    check_r(r)?;
    Ok(sigma_within(g, g.vertices(), a, r))
}

/// `Σ_r(A, G[U])` without relabelling, for `A ⊆ U`.
pub fn sigma_within(g: &Graph, u: VertexSet, a: VertexSet, r: usize) -> SimplicialComplex {
    let ground = u - a;
    SimplicialComplex::from_generators(
        ground,
        g.supp_within(u, a, r).into_iter().map(|f| ground - f).collect(),
    )
}

/// `Ind_r(G)`: sets whose induced components all have fewer than `r` vertices.
///
/// Built directly from its definition (maximal such sets over all subsets),
/// independently of the duality with `Σ_r`.
pub fn ind_r(g: &Graph, r: usize, max_faces: u64) -> Result<SimplicialComplex> {
    check_r(r)?;
    let n = g.n();
    if n >= 64 || 1u64 << n > max_faces {
        return Err(Error::bound("subset scan for Ind_r", max_faces, 1u128 << n.min(127)));
    }
    let small = |w: VertexSet| g.components_within(w).iter().all(|c| c.len() < r);
    let all = g.vertices();
    let facets = all
        .subsets()
        .filter(|&w| small(w) && (all - w).iter().all(|v| !small(w.with(v))))
        .collect();
    Ok(SimplicialComplex::from_generators(all, facets))
}
