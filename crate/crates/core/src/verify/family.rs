use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::random::{self, SeededRng};
use crate::clutter::{find_r_gap, Clutter};
use crate::complex::sigma_r;
use crate::decomp::{
    find_shelling, is_vertex_decomposable, vd_sigma_via_ordering, verify_shedding_order, verify_shelling,
    verify_vd_tree, SheddingCheck, ShellingCheck, ShellingOutcome, VdOutcome,
};
use crate::error::Result;
use crate::graph::{to_graph6, Family, Graph};
use crate::homology::{is_cohen_macaulay, FieldSpec};
use crate::{Limits, VertexSet};

/// Property names used as verdict keys.
pub const VD: &str = "vd";
pub const VD_ORDERING: &str = "vd_ordering";
pub const SHELLABLE: &str = "shellable";
pub const COCHORDAL: &str = "cochordal";
pub const GAP_FREE: &str = "gap_free";
pub const PREDICATE: &str = "predicate";

pub fn cm_key(field: FieldSpec) -> String {
    format!("cm_{field}")
}

/// Graph classes with a claimed equivalence list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// `C_n`: VD, shellable, CM and co-chordal `Con_r` all equal `n ≤ r + 2`.
    Cycle,
    /// `P_n × P_2`: the same plus r-gap-freeness, all equal `n ≤ r`.
    Ladder,
    /// `P_n × P_3`, `n ≥ 3`: VD, shellable, CM, co-chordal all equal `2n ≤ r`.
    Grid3,
    /// `C_n^c`: VD for every `r ≥ 3`.
    CycleComplement,
    /// Random chordal graphs: VD, shellable, CM, r-gap-free, co-chordal agree.
    Chordal,
    /// Random cographs: the same five-way agreement.
    Cograph,
}

impl FamilyKind {
    pub fn from_name(name: &str) -> Option<FamilyKind> {
        Some(match name {
            "cycle" => FamilyKind::Cycle,
            "ladder" => FamilyKind::Ladder,
            "grid3" => FamilyKind::Grid3,
            "cycle_complement" | "cycle-complement" => FamilyKind::CycleComplement,
            "chordal" => FamilyKind::Chordal,
            "cograph" => FamilyKind::Cograph,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Cycle => "cycle",
            FamilyKind::Ladder => "ladder",
            FamilyKind::Grid3 => "grid3",
            FamilyKind::CycleComplement => "cycle_complement",
            FamilyKind::Chordal => "chordal",
            FamilyKind::Cograph => "cograph",
        }
    }

    pub fn is_random(self) -> bool {
        matches!(self, FamilyKind::Chordal | FamilyKind::Cograph)
    }

    /// The closed-form predicate, when the family has one.
    pub fn predicate(self, n: usize, r: usize) -> Option<bool> {
        match self {
            FamilyKind::Cycle => Some(n <= r + 2),
            FamilyKind::Ladder => Some(n <= r),
            FamilyKind::Grid3 => Some(2 * n <= r),
            FamilyKind::CycleComplement => (r >= 3).then_some(true),
            FamilyKind::Chordal | FamilyKind::Cograph => None,
        }
    }

    /// Verdict keys claimed equivalent for this family at this `r`.
    pub fn claimed(self, r: usize, fields: &[FieldSpec]) -> Vec<String> {
        if r < 2 {
            return Vec::new();
        }
        let mut keys = vec![VD.to_string(), VD_ORDERING.to_string()];
        if self == FamilyKind::CycleComplement {
            if r >= 3 {
                keys.push(PREDICATE.to_string());
            }
            return keys;
        }
        keys.push(SHELLABLE.to_string());
        keys.extend(fields.iter().map(|&f| cm_key(f)));
        keys.push(COCHORDAL.to_string());
        if matches!(self, FamilyKind::Ladder | FamilyKind::Chordal | FamilyKind::Cograph) {
            keys.push(GAP_FREE.to_string());
        }
        if self.predicate(0, r).is_some() {
            keys.push(PREDICATE.to_string());
        }
        keys
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub family: &'static str,
    pub label: String,
    /// Family size parameter, or the vertex count for random families.
    pub n: usize,
    pub r: usize,
    pub graph6: String,
}

impl Instance {
    pub fn id(&self) -> String {
        format!("{} r={}", self.label, self.r)
    }
}

/// Every verdict on `Σ_r(G)` and `Con_r(G)` for one instance, and whether
/// the verdicts the family claims equivalent agree.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub instance: Instance,
    pub verdicts: BTreeMap<String, bool>,
    pub claimed_equivalent: Vec<String>,
    pub agreement: bool,
    /// VD implies shellable implies CM over every field.
    pub hierarchy_holds: bool,
    /// Every positive verdict's certificate replayed successfully.
    pub certificates_replayed: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl EquivalenceReport {
    pub fn is_green(&self) -> bool {
        self.agreement && self.hierarchy_holds && self.certificates_replayed
    }

    /// Claimed verdicts differing from the first claimed one.
    pub fn disagreements(&self) -> Vec<&str> {
        let mut keys = self.claimed_equivalent.iter();
        let Some(first) = keys.next() else { return Vec::new() };
        let reference = self.verdicts[first];
        keys.filter(|k| self.verdicts[*k] != reference).map(String::as_str).collect()
    }
}

/// Raw verdicts of every checker on `Σ_r(G)`; certificates are replayed here.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub verdicts: BTreeMap<String, bool>,
    pub certificates_replayed: bool,
}

/// Run every checker on one graph. `fields` must be nonempty.
pub fn evaluate(g: &Graph, r: usize, fields: &[FieldSpec], limits: &Limits) -> Result<Evaluation> {
    let s = sigma_r(g, VertexSet::EMPTY, r)?;
    let mut verdicts = BTreeMap::new();
    let mut replayed = true;

    let vd = is_vertex_decomposable(&s, limits.max_vd_facets)?;
    if let VdOutcome::Decomposable { tree } = &vd {
        replayed &= verify_vd_tree(&s, tree);
    }
    verdicts.insert(VD.to_string(), vd.is_decomposable());

    if r >= 2 {
        let ordering = vd_sigma_via_ordering(g, r)?;
        if let Some(order) = &ordering {
            replayed &= verify_shedding_order(g, r, order) == SheddingCheck::Valid;
        }
        verdicts.insert(VD_ORDERING.to_string(), ordering.is_some());
    }

    let shelling = find_shelling(&s, limits.max_shelling_facets, limits.max_faces)?;
    if let ShellingOutcome::Shellable { order } = &shelling {
        replayed &= verify_shelling(&s, order)? == ShellingCheck::Valid;
    }
    verdicts.insert(SHELLABLE.to_string(), shelling.is_shellable());

    for &field in fields {
        let cm = is_cohen_macaulay(&s, field, limits.max_faces)?;
        verdicts.insert(cm_key(field), cm.cohen_macaulay);
    }

    let complement = Clutter::con_r(g, r).complement();
    let chordal = complement.is_chordal(limits.max_circuits)?;
    if let Some(cert) = &chordal {
        replayed &= complement.verify_elimination(cert).is_valid();
    }
    verdicts.insert(COCHORDAL.to_string(), chordal.is_some());
    verdicts.insert(GAP_FREE.to_string(), find_r_gap(g, r).is_none());

    Ok(Evaluation {
        verdicts,
        certificates_replayed: replayed,
    })
}

fn hierarchy_holds(verdicts: &BTreeMap<String, bool>, fields: &[FieldSpec]) -> bool {
    let vd = verdicts[VD];
    let sh = verdicts[SHELLABLE];
    let cm = fields.iter().all(|&f| verdicts[&cm_key(f)]);
    (!vd || sh) && (!sh || cm)
}

/// Evaluate one instance and compare against the family's claims.
pub fn check_instance(
    kind: FamilyKind,
    instance: Instance,
    g: &Graph,
    fields: &[FieldSpec],
    limits: &Limits,
) -> Result<EquivalenceReport> {
    let start = Instant::now();
    let r = instance.r;
    let mut eval = evaluate(g, r, fields, limits)?;
    if let Some(p) = kind.predicate(instance.n, r) {
        eval.verdicts.insert(PREDICATE.to_string(), p);
    }
    let claimed = kind.claimed(r, fields);
    let agreement = claimed.windows(2).all(|w| eval.verdicts[&w[0]] == eval.verdicts[&w[1]]);
    Ok(EquivalenceReport {
        hierarchy_holds: hierarchy_holds(&eval.verdicts, fields),
        instance,
        verdicts: eval.verdicts,
        claimed_equivalent: claimed,
        agreement,
        certificates_replayed: eval.certificates_replayed,
        elapsed: start.elapsed(),
    })
}

/// Parameters of a family sweep. For random families `sizes` is the vertex
/// count range and `samples` graphs are drawn; otherwise every size is used.
#[derive(Clone, Debug)]
pub struct FamilyCheck {
    pub kind: FamilyKind,
    pub sizes: RangeInclusive<usize>,
    pub rs: RangeInclusive<usize>,
    pub fields: Vec<FieldSpec>,
    pub samples: usize,
    pub seed: u64,
    pub limits: Limits,
}

impl FamilyCheck {
    pub fn new(kind: FamilyKind, sizes: RangeInclusive<usize>, rs: RangeInclusive<usize>) -> Self {
        FamilyCheck {
            kind,
            sizes,
            rs,
            fields: vec![FieldSpec::Q, FieldSpec::F2],
            samples: 50,
            seed: 0,
            limits: Limits::DEFAULT,
        }
    }
}

/// An instance that was not evaluated, with the reason.
#[derive(Clone, Debug, Serialize)]
pub struct Skipped {
    pub instance: Instance,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyCheckReport {
    pub family: &'static str,
    pub seed: Option<u64>,
    pub reports: Vec<EquivalenceReport>,
    pub skipped: Vec<Skipped>,
}

impl FamilyCheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &EquivalenceReport> {
        self.reports.iter().filter(|r| !r.is_green())
    }

    pub fn all_green(&self) -> bool {
        self.failures().next().is_none() && self.skipped.is_empty()
    }
}

/// Build the instance list of a sweep. Deterministic in the seed.
pub fn family_instances(check: &FamilyCheck) -> Result<Vec<(Instance, Graph)>> {
    let mut out = Vec::new();
    let kind = check.kind;
    let mut push = |label: String, n: usize, g: Graph| -> Result<()> {
        let graph6 = to_graph6(&g)?;
        for r in check.rs.clone() {
            let instance = Instance {
                family: kind.name(),
                label: label.clone(),
                n,
                r,
                graph6: graph6.clone(),
            };
            out.push((instance, g.clone()));
        }
        Ok(())
    };
    if kind.is_random() {
        let mut rng: SeededRng = random::rng(check.seed);
        for i in 0..check.samples {
            let n = rng.random_range(check.sizes.clone());
            let (label, g) = if kind == FamilyKind::Chordal {
                let k = rng.random_range(1..=3);
                let g = random::random_chordal(&mut rng, n, k);
                (format!("chordal#{i}(n={n},k={k})"), g)
            } else {
                let tree = random::random_cotree(&mut rng, n);
                let g = tree.to_graph()?;
                (format!("cograph#{i}({tree})"), g)
            };
            push(label, n, g)?;
        }
    } else {
        for n in check.sizes.clone() {
            let family = match kind {
                FamilyKind::Cycle => Family::Cycle(n),
                FamilyKind::Ladder => Family::Ladder(n),
                FamilyKind::Grid3 => Family::Grid3(n),
                FamilyKind::CycleComplement => Family::CycleComplement(n),
                FamilyKind::Chordal | FamilyKind::Cograph => unreachable!("handled above"),
            };
            push(family.to_string(), n, family.build()?)?;
        }
    }
    Ok(out)
}

/// Evaluate every instance of a sweep in parallel; reports come back in
/// instance order. Instances whose checkers hit a bound are listed as skipped.
pub fn run_family_check(check: &FamilyCheck) -> Result<FamilyCheckReport> {
    let instances = family_instances(check)?;
    let results: Vec<_> = instances
        .into_par_iter()
        .map(|(instance, g)| {
            let outcome = check_instance(check.kind, instance.clone(), &g, &check.fields, &check.limits);
            (instance, outcome)
        })
        .collect();
    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    for (instance, outcome) in results {
        match outcome {
            Ok(report) => reports.push(report),
            Err(e) if e.is_bound_exceeded() => skipped.push(Skipped {
                instance,
                reason: e.to_string(),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(FamilyCheckReport {
        family: check.kind.name(),
        seed: check.kind.is_random().then_some(check.seed),
        reports,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sweep(kind: FamilyKind, sizes: RangeInclusive<usize>, rs: RangeInclusive<usize>) -> FamilyCheckReport {
        let mut check = FamilyCheck::new(kind, sizes, rs);
        check.limits.max_shelling_facets = 64;
        check.samples = 12;
        run_family_check(&check).unwrap()
    }

    #[test]
    fn small_cycles_agree_with_threshold() {
        let report = sweep(FamilyKind::Cycle, 3..=7, 2..=4);
        assert!(report.all_green(), "{:?}", report.failures().collect::<Vec<_>>());
        let c5 = report.reports.iter().find(|r| r.instance.id() == "C5 r=2").unwrap();
        assert!(!c5.verdicts[VD] && !c5.verdicts[PREDICATE]);
        assert_eq!(c5.claimed_equivalent.len(), 7);
    }

    #[test]
    fn cycle_complements_are_vd() {
        let report = sweep(FamilyKind::CycleComplement, 3..=7, 3..=4);
        assert!(report.all_green());
        assert!(report.reports.iter().all(|r| r.verdicts[VD]));
    }

    #[test]
    fn random_families_are_seeded() {
        let a = family_instances(&FamilyCheck::new(FamilyKind::Cograph, 2..=6, 2..=2)).unwrap();
        let b = family_instances(&FamilyCheck::new(FamilyKind::Cograph, 2..=6, 2..=2)).unwrap();
        assert_eq!(a.len(), 50);
        assert!(a.iter().zip(&b).all(|(x, y)| x.0 == y.0));
        let report = sweep(FamilyKind::Chordal, 3..=7, 2..=3);
        assert!(report.all_green(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn bounds_skip_loudly() {
        let mut check = FamilyCheck::new(FamilyKind::Ladder, 5..=5, 6..=6);
        check.limits.max_shelling_facets = 10;
        let report = run_family_check(&check).unwrap();
        assert_eq!(report.skipped.len(), 1);
        assert!(!report.all_green());
    }
}
