use std::time::{Duration, Instant};

use serde::Serialize;

use crate::clutter::{find_r_gap, Clutter, EliminationCertificate};
use crate::complex::sigma_r;
use crate::decomp::{
    find_shelling, is_shedding_generic, is_vertex_decomposable, verify_shelling, ShellingCheck, ShellingOrder,
    ShellingOutcome,
};
use crate::error::Result;
use crate::fixtures;
use crate::graph::{Family, Graph};
use crate::{Limits, VertexSet};

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificatesReport {
    pub checks: Vec<CheckOutcome>,
}

impl CertificatesReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn timed(
    id: &'static str,
    name: impl Into<String>,
    f: impl FnOnce() -> Result<(bool, String)>,
) -> Result<CheckOutcome> {
    let start = Instant::now();
    let (passed, detail) = f()?;
    Ok(CheckOutcome {
        id,
        name: name.into(),
        passed,
        detail,
        elapsed: start.elapsed(),
    })
}

/// The eight-vertex example is gap-free (no two edges form an induced matching).
pub fn check_example_gap_free() -> Result<CheckOutcome> {
    timed("a", "eight-vertex graph is gap-free", || {
        Ok(match find_r_gap(&fixtures::gap_free_example_graph(), 2) {
            None => (true, "no induced matching of two edges".into()),
            Some((a, b)) => (false, format!("edges {a} and {b} form a gap")),
        })
    })
}

/// The reference subcircuit sequence empties `(Con_3(G))^c` step by step.
pub fn check_gap_free_example_elimination() -> Result<CheckOutcome> {
    timed("b", "reference sequence eliminates the complement of Con_3", || {
        let complement = Clutter::con_r(&fixtures::gap_free_example_graph(), 3).complement();
        let cert = EliminationCertificate {
            d: complement.d(),
            subcircuits: fixtures::gap_free_example_elimination(),
        };
        let check = complement.verify_elimination(&cert);
        Ok((
            check.is_valid(),
            format!("{} subcircuits over {} circuits: {check:?}", cert.subcircuits.len(), complement.circuits().len()),
        ))
    })
}

/// The reference 26-facet order shells `Σ_3(G)`.
pub fn check_example_shelling() -> Result<CheckOutcome> {
    timed("c", "reference facet order shells Sigma_3", || {
        let s = sigma_r(&fixtures::gap_free_example_graph(), VertexSet::EMPTY, 3)?;
        let order = ShellingOrder {
            facets: fixtures::gap_free_example_shelling(),
        };
        let check = verify_shelling(&s, &order)?;
        Ok((check == ShellingCheck::Valid, format!("{} facets: {check:?}", order.facets.len())))
    })
}

/// No vertex of `Σ_3(G)` is a shedding vertex.
pub fn check_example_no_shedding() -> Result<CheckOutcome> {
    timed("d", "no vertex of Sigma_3 is shedding", || {
        let g = fixtures::gap_free_example_graph();
        let s = sigma_r(&g, VertexSet::EMPTY, 3)?;
        let shedding: Vec<usize> = g
            .vertices()
            .iter()
            .filter(|&x| is_shedding_generic(&s, x).unwrap_or(true))
            .collect();
        Ok((
            shedding.is_empty(),
            format!("{} vertices checked, shedding: {shedding:?}", g.n()),
        ))
    })
}

/// `Σ_r` shellable (certificate replayed), not VD, and `G` r-gap-free.
pub fn shellable_not_vd(g: &Graph, r: usize, limits: &Limits) -> Result<(bool, String)> {
    let s = sigma_r(g, VertexSet::EMPTY, r)?;
    let shelling = find_shelling(&s, limits.max_shelling_facets, limits.max_faces)?;
    let shellable = match &shelling {
        ShellingOutcome::Shellable { order } => verify_shelling(&s, order)? == ShellingCheck::Valid,
        _ => false,
    };
    let vd = is_vertex_decomposable(&s, limits.max_vd_facets)?.is_decomposable();
    let gap_free = find_r_gap(g, r).is_none();
    Ok((
        shellable && !vd && gap_free,
        format!(
            "{} facets; shellable={shellable} vd={vd} gap_free={gap_free}",
            s.facets().len()
        ),
    ))
}

/// The unicyclic examples for `r = 3, 4`.
pub fn check_unicyclic(limits: &Limits) -> Result<CheckOutcome> {
    timed("e", "unicyclic(3), unicyclic(4): shellable, not VD, r-gap-free", || {
        let mut passed = true;
        let mut details = Vec::new();
        for (r, g) in [(3, fixtures::unicyclic3_graph()), (4, fixtures::unicyclic4_graph())] {
            let (ok, detail) = shellable_not_vd(&g, r, limits)?;
            passed &= ok;
            details.push(format!("r={r}: {detail}"));
        }
        Ok((passed, details.join("; ")))
    })
}

/// `Σ_10(P_4 × P_4)`: shellable and not VD. Long-running.
pub fn check_large_grid(limits: &Limits) -> Result<CheckOutcome> {
    timed("f", "Sigma_10(P4xP4): shellable, not VD", || {
        let g = Family::Grid(4, 4).build()?;
        let s = sigma_r(&g, VertexSet::EMPTY, 10)?;
        let shelling = find_shelling(&s, limits.max_shelling_facets, limits.max_faces)?;
        let shellable = match &shelling {
            ShellingOutcome::Shellable { order } => verify_shelling(&s, order)? == ShellingCheck::Valid,
            _ => false,
        };
        let vd = is_vertex_decomposable(&s, limits.max_vd_facets)?.is_decomposable();
        Ok((
            shellable && !vd,
            format!("{} facets; shellable={shellable} vd={vd}", s.facets().len()),
        ))
    })
}

/// Replay the reference certificates (a)-(e), plus (f) when `include_large`.
pub fn run_reference_certificates(include_large: bool, limits: &Limits) -> Result<CertificatesReport> {
    let mut checks = vec![
        check_example_gap_free()?,
        check_gap_free_example_elimination()?,
        check_example_shelling()?,
        check_example_no_shedding()?,
        check_unicyclic(limits)?,
    ];
    if include_large {
        checks.push(check_large_grid(limits)?);
    }
    Ok(CertificatesReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_certificates_replay() {
        let report = run_reference_certificates(false, &Limits::DEFAULT).unwrap();
        assert_eq!(report.checks.len(), 5);
        for c in &report.checks {
            assert!(c.passed, "{} failed: {}", c.id, c.detail);
        }
    }

    #[test]
    fn a_truncated_sequence_is_caught() {
        let complement = Clutter::con_r(&fixtures::gap_free_example_graph(), 3).complement();
        let mut seq = fixtures::gap_free_example_elimination();
        seq.pop();
        let cert = EliminationCertificate {
            d: complement.d(),
            subcircuits: seq,
        };
        assert!(!complement.verify_elimination(&cert).is_valid());
    }
}
