//! Reduced simplicial homology over `Q` and `F_p`, integer torsion,
//! Reisner's Cohen-Macaulay test, and the Leray number.

mod linalg;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::VertexSet;

use linalg::Row;

/// Coefficient field: the rationals or `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    pub const Q: FieldSpec = FieldSpec::Rational;
    pub const F2: FieldSpec = FieldSpec::Prime(2);

    /// `F_p`; `p` must be prime.
    pub fn prime(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::Invalid(format!("field characteristic {p} is not prime")))
        }
    }

    pub fn characteristic(self) -> u32 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("Q"),
            FieldSpec::Prime(2) => f.write_str("F2"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `F2`, `Fp:p` and the shorthand `Fp` for any prime `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("unknown field {s:?}; expected Q, F2 or Fp:<prime>"));
        match s {
            "Q" | "q" => Ok(FieldSpec::Rational),
            _ => {
                let digits = s
                    .strip_prefix("Fp:")
                    .or_else(|| s.strip_prefix('F'))
                    .ok_or_else(bad)?;
                FieldSpec::prime(digits.parse().map_err(|_| bad())?)
            }
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Reduced Betti numbers by dimension (from `-1` to the complex dimension),
/// with integer torsion orders when computed over the integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiProfile {
    pub field: FieldSpec,
    pub betti: BTreeMap<isize, u64>,
    pub torsion: BTreeMap<isize, Vec<u64>>,
}

impl BettiProfile {
    pub fn betti(&self, dim: isize) -> u64 {
        self.betti.get(&dim).copied().unwrap_or(0)
    }

    /// Dimensions with nonzero homology (a free part or torsion).
    pub fn nonzero_dims(&self) -> Vec<isize> {
        let mut dims: Vec<isize> = self
            .betti
            .iter()
            .filter(|(_, &b)| b > 0)
            .map(|(&d, _)| d)
            .chain(self.torsion.iter().filter(|(_, t)| !t.is_empty()).map(|(&d, _)| d))
            .collect();
        dims.sort_unstable();
        dims.dedup();
        dims
    }

    pub fn is_acyclic(&self) -> bool {
        self.nonzero_dims().is_empty()
    }

    /// `Σ (-1)^i β_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .map(|(&d, &b)| if d.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Faces grouped by size and the boundary rows from size `k` to size `k - 1`.
struct Chains {
    faces: Vec<Vec<VertexSet>>,
}

impl Chains {
    fn new(d: &SimplicialComplex, max_faces: u64) -> Result<Self> {
        Ok(Chains {
            faces: d.faces_by_size(max_faces)?,
        })
    }

    /// Rows of the boundary map on faces of size `k`, one row per face,
    /// columns indexing faces of size `k - 1`.
    fn boundary(&self, k: usize) -> Vec<Row<i8>> {
        if k == 0 || k >= self.faces.len() {
            return Vec::new();
        }
        let lower = &self.faces[k - 1];
        self.faces[k]
            .iter()
            .map(|f| {
                let mut row: Row<i8> = f
                    .iter()
                    .enumerate()
                    .map(|(t, v)| {
                        let col = lower.binary_search(&f.without(v)).expect("closed under subsets");
                        (col, if t % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect()
    }

    fn count(&self, k: usize) -> u64 {
        self.faces.get(k).map_or(0, |f| f.len() as u64)
    }
}

fn rank(rows: &[Row<i8>], field: FieldSpec) -> usize {
    if rows.is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Rational => linalg::rank_rational(rows),
        FieldSpec::Prime(p) => linalg::rank_mod_p(rows, p as u64),
    }
}

/// Reduced Betti numbers over `field`.
pub fn reduced_betti(d: &SimplicialComplex, field: FieldSpec, max_faces: u64) -> Result<BettiProfile> {
    let chains = Chains::new(d, max_faces)?;
    let top = chains.faces.len();
    // ranks[k] = rank of the boundary on faces of size k.
    let ranks: Vec<usize> = (0..=top)
        .into_par_iter()
        .map(|k| rank(&chains.boundary(k), field))
        .collect();
    let betti = (0..top)
        .map(|k| {
            let b = chains.count(k) - ranks[k] as u64 - ranks[k + 1] as u64;
            (k as isize - 1, b)
        })
        .collect();
    Ok(BettiProfile {
        field,
        betti,
        torsion: BTreeMap::new(),
    })
}

/// Integral reduced homology: free ranks (reported as rational Betti numbers)
/// and the torsion coefficients in every dimension, via Smith normal form.
pub fn integer_homology(d: &SimplicialComplex, max_faces: u64) -> Result<BettiProfile> {
    let chains = Chains::new(d, max_faces)?;
    let top = chains.faces.len();
    let smith: Vec<(usize, Vec<num_bigint::BigInt>)> = (0..=top)
        .into_par_iter()
        .map(|k| {
            let rows = chains.boundary(k);
            if rows.is_empty() {
                (0, Vec::new())
            } else {
                linalg::smith_rank_and_torsion(&rows)
            }
        })
        .collect();
    let mut betti = BTreeMap::new();
    let mut torsion = BTreeMap::new();
    for k in 0..top {
        let dim = k as isize - 1;
        betti.insert(dim, chains.count(k) - smith[k].0 as u64 - smith[k + 1].0 as u64);
        let orders = smith[k + 1]
            .1
            .iter()
            .map(|t| t.to_u64().ok_or_else(|| Error::Invalid(format!("torsion order {t} does not fit in 64 bits"))))
            .collect::<Result<Vec<u64>>>()?;
        if !orders.is_empty() {
            torsion.insert(dim, orders);
        }
    }
    Ok(BettiProfile {
        field: FieldSpec::Rational,
        betti,
        torsion,
    })
}

/// A face whose link has homology below the link's dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmWitness {
    pub face: VertexSet,
    pub link_dimension: isize,
    /// Lowest dimension with nonzero reduced homology in the link.
    pub homology_dimension: isize,
    pub betti: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub field: FieldSpec,
    pub cohen_macaulay: bool,
    pub witness: Option<CmWitness>,
}

/// Reisner's criterion: every link `lk(F)` has vanishing reduced homology in
/// dimensions below `dim lk(F)`. The witness is the first failing face in
/// size-then-lexicographic order.
pub fn is_cohen_macaulay(d: &SimplicialComplex, field: FieldSpec, max_faces: u64) -> Result<CmVerdict> {
    let faces = d.faces(max_faces)?;
    let mut keys: HashMap<Vec<VertexSet>, usize> = HashMap::new();
    let mut links: Vec<SimplicialComplex> = Vec::new();
    let mut link_of_face = Vec::with_capacity(faces.len());
    for &f in &faces {
        let lk = d.link_unchecked(f);
        let key = lk.compact_key();
        let next = links.len();
        let id = *keys.entry(key).or_insert(next);
        if id == next {
            links.push(lk);
        }
        link_of_face.push(id);
    }
    let failures: Vec<Option<(isize, isize, u64)>> = links
        .par_iter()
        .map(|lk| -> Result<_> {
            let dim = lk.dimension().expect("links of faces are nonvoid");
            if dim <= 0 {
                // Only H_{-1} could matter, and it vanishes for nonempty links.
                return Ok(None);
            }
            let profile = reduced_betti(lk, field, max_faces)?;
            Ok(profile
                .betti
                .iter()
                .find(|(&i, &b)| i < dim && b > 0)
                .map(|(&i, &b)| (dim, i, b)))
        })
        .collect::<Result<_>>()?;
    let witness = faces
        .iter()
        .zip(&link_of_face)
        .find_map(|(&face, &id)| {
            failures[id].map(|(link_dimension, homology_dimension, betti)| CmWitness {
                face,
                link_dimension,
                homology_dimension,
                betti,
            })
        });
    Ok(CmVerdict {
        field,
        cohen_macaulay: witness.is_none(),
        witness,
    })
}

/// Cohen-Macaulay verdicts over several fields, with a flag when they differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmReport {
    pub verdicts: Vec<CmVerdict>,
    pub fields_disagree: bool,
}

impl CmReport {
    pub fn over(d: &SimplicialComplex, fields: &[FieldSpec], max_faces: u64) -> Result<Self> {
        let verdicts = fields
            .iter()
            .map(|&k| is_cohen_macaulay(d, k, max_faces))
            .collect::<Result<Vec<_>>>()?;
        let fields_disagree = verdicts.windows(2).any(|w| w[0].cohen_macaulay != w[1].cohen_macaulay);
        Ok(CmReport {
            verdicts,
            fields_disagree,
        })
    }

    pub fn verdict(&self, field: FieldSpec) -> Option<bool> {
        self.verdicts.iter().find(|v| v.field == field).map(|v| v.cohen_macaulay)
    }

    pub fn all(&self) -> bool {
        self.verdicts.iter().all(|v| v.cohen_macaulay)
    }
}

/// Least `d ≥ 0` with `H̃_i(Δ[W]; Z) = 0` for every `W` in the ground set and
/// every `i ≥ d`.
pub fn leray_number(d: &SimplicialComplex, max_ground: usize, max_faces: u64) -> Result<usize> {
    let ground = d.ground();
    if ground.len() > max_ground {
        return Err(Error::bound("Leray ground-set size", max_ground, ground.len()));
    }
    if d.is_void() {
        return Ok(0);
    }
    let mut distinct: HashMap<Vec<VertexSet>, SimplicialComplex> = HashMap::new();
    for w in ground.subsets() {
        let induced = d.induced(w);
        distinct.entry(induced.compact_key()).or_insert(induced);
    }
    let mut pieces: Vec<_> = distinct.into_iter().collect();
    pieces.sort_by(|a, b| a.0.cmp(&b.0));
    let tops = pieces
        .par_iter()
        .map(|(_, c)| Ok(integer_homology(c, max_faces)?.nonzero_dims().last().copied()))
        .collect::<Result<Vec<Option<isize>>>>()?;
    Ok(tops.into_iter().flatten().map(|i| (i + 1).max(0) as usize).max().unwrap_or(0))
}

/// Whether the Stanley-Reisner ideal of `d` has a linear resolution over
/// `field`, decided as Cohen-Macaulayness of the Alexander dual.
pub fn dual_has_linear_resolution(d: &SimplicialComplex, field: FieldSpec, max_faces: u64) -> Result<CmVerdict> {
    is_cohen_macaulay(&d.alexander_dual(), field, max_faces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{ind_r, sigma_r};
    use crate::fixtures;
    use crate::graph::Family;
    use proptest::prelude::*;

    const FACES: u64 = 1 << 24;

    fn vs(ids: &[usize]) -> VertexSet {
        ids.iter().collect()
    }

    fn rp2() -> SimplicialComplex {
        SimplicialComplex::new(VertexSet::full(6), fixtures::projective_plane_facets()).unwrap()
    }

    fn betti_vec(p: &BettiProfile) -> Vec<u64> {
        p.betti.values().copied().collect()
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Q);
        assert_eq!("F2".parse::<FieldSpec>().unwrap(), FieldSpec::F2);
        assert_eq!("Fp:7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!("F3".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(3));
        assert!("Fp:9".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(7).to_string(), "Fp:7");
        assert_eq!(serde_json::to_string(&FieldSpec::F2).unwrap(), "\"F2\"");
    }

    #[test]
    fn circle_and_point() {
        let circle = SimplicialComplex::simplex_boundary(VertexSet::full(3));
        let p = reduced_betti(&circle, FieldSpec::Q, FACES).unwrap();
        assert_eq!(p.betti, BTreeMap::from([(-1, 0), (0, 0), (1, 1)]));
        let point = SimplicialComplex::simplex(vs(&[0]));
        assert!(reduced_betti(&point, FieldSpec::Q, FACES).unwrap().is_acyclic());
        let empty = SimplicialComplex::empty(VertexSet::full(2));
        assert_eq!(reduced_betti(&empty, FieldSpec::F2, FACES).unwrap().betti, BTreeMap::from([(-1, 1)]));
        let void = SimplicialComplex::void(VertexSet::full(2));
        assert!(reduced_betti(&void, FieldSpec::Q, FACES).unwrap().betti.is_empty());
    }

    #[test]
    fn independence_complexes_of_short_cycles() {
        let c5 = Family::Cycle(5).build().unwrap();
        let p = reduced_betti(&ind_r(&c5, 2, FACES).unwrap(), FieldSpec::Q, FACES).unwrap();
        assert_eq!(betti_vec(&p), vec![0, 0, 1]);
        let c6 = Family::Cycle(6).build().unwrap();
        let p = reduced_betti(&ind_r(&c6, 2, FACES).unwrap(), FieldSpec::Q, FACES).unwrap();
        assert_eq!(p.betti(1), 2);
        assert_eq!(p.betti.values().sum::<u64>(), 2);
        let z = integer_homology(&ind_r(&c5, 2, FACES).unwrap(), FACES).unwrap();
        assert_eq!(z.betti(1), 1);
        assert!(z.torsion.is_empty());
    }

    #[test]
    fn projective_plane_torsion_and_characteristic() {
        let d = rp2();
        let z = integer_homology(&d, FACES).unwrap();
        assert!(z.betti.values().all(|&b| b == 0));
        assert_eq!(z.torsion, BTreeMap::from([(1, vec![2])]));
        let f2 = reduced_betti(&d, FieldSpec::F2, FACES).unwrap();
        assert_eq!((f2.betti(1), f2.betti(2)), (1, 1));
        assert!(reduced_betti(&d, FieldSpec::Prime(3), FACES).unwrap().is_acyclic());

        assert!(is_cohen_macaulay(&d, FieldSpec::Q, FACES).unwrap().cohen_macaulay);
        let v = is_cohen_macaulay(&d, FieldSpec::F2, FACES).unwrap();
        assert!(!v.cohen_macaulay);
        let w = v.witness.unwrap();
        assert_eq!((w.face, w.link_dimension, w.homology_dimension), (VertexSet::EMPTY, 2, 1));
        let report = CmReport::over(&d, &[FieldSpec::Q, FieldSpec::F2], FACES).unwrap();
        assert!(report.fields_disagree);
    }

    #[test]
    fn cones_are_acyclic() {
        let base = rp2();
        let cone = base.join(&SimplicialComplex::simplex(vs(&[6]))).unwrap();
        assert!(integer_homology(&cone, FACES).unwrap().is_acyclic());
    }

    #[test]
    fn cycle_complexes_and_cohen_macaulayness() {
        let c4 = Family::Cycle(4).build().unwrap();
        let c5 = Family::Cycle(5).build().unwrap();
        let s4 = sigma_r(&c4, VertexSet::EMPTY, 2).unwrap();
        let s5 = sigma_r(&c5, VertexSet::EMPTY, 2).unwrap();
        assert!(is_cohen_macaulay(&s4, FieldSpec::Q, FACES).unwrap().cohen_macaulay);
        let v = is_cohen_macaulay(&s5, FieldSpec::Q, FACES).unwrap();
        assert!(!v.cohen_macaulay);
        assert!(v.witness.is_some());
        let ind4 = ind_r(&c4, 2, FACES).unwrap();
        let ind5 = ind_r(&c5, 2, FACES).unwrap();
        assert!(dual_has_linear_resolution(&ind4, FieldSpec::Q, FACES).unwrap().cohen_macaulay);
        assert!(!dual_has_linear_resolution(&ind5, FieldSpec::Q, FACES).unwrap().cohen_macaulay);
        let u3 = fixtures::unicyclic3_graph();
        let ind = ind_r(&u3, 3, FACES).unwrap();
        assert!(dual_has_linear_resolution(&ind, FieldSpec::Q, FACES).unwrap().cohen_macaulay);
    }

    #[test]
    fn leray_examples() {
        let simplex = SimplicialComplex::simplex(VertexSet::full(4));
        assert_eq!(leray_number(&simplex, 12, FACES).unwrap(), 0);
        let circle = SimplicialComplex::simplex_boundary(VertexSet::full(3));
        assert_eq!(leray_number(&circle, 12, FACES).unwrap(), 2);
        let c5 = Family::Cycle(5).build().unwrap();
        assert!(leray_number(&ind_r(&c5, 2, FACES).unwrap(), 12, FACES).unwrap() > 1);
        // Two points: disconnected, so 1-Leray but not 0-Leray.
        let two = SimplicialComplex::new(VertexSet::full(2), vec![vs(&[0]), vs(&[1])]).unwrap();
        assert_eq!(leray_number(&two, 12, FACES).unwrap(), 1);
        assert!(leray_number(&SimplicialComplex::simplex(VertexSet::full(13)), 12, FACES)
            .unwrap_err()
            .is_bound_exceeded());
    }

    #[test]
    fn projective_plane_leray_number() {
        assert_eq!(leray_number(&rp2(), 12, FACES).unwrap(), 2);
    }

    proptest! {
        #[test]
        fn euler_characteristic_matches_f_vector(
            d in crate::complex::tests::arb_complex(7),
            field in prop_oneof![Just(FieldSpec::Q), Just(FieldSpec::F2), Just(FieldSpec::Prime(3))],
        ) {
            let f = d.f_vector(FACES).unwrap();
            let chi: i64 = f.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { -(c as i64) } else { c as i64 }).sum();
            let p = reduced_betti(&d, field, FACES).unwrap();
            // f[0] counts the empty face, so this alternating sum is the reduced one.
            prop_assert_eq!(p.euler_characteristic(), chi);
            let z = integer_homology(&d, FACES).unwrap();
            prop_assert_eq!(&z.betti, &reduced_betti(&d, FieldSpec::Q, FACES).unwrap().betti);
        }
    }
}
