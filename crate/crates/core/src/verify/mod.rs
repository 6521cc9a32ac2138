//! Harnesses that sweep graph families, replay reference certificates,
//! check structural identities and scan small graphs.

mod certificates;
mod cycles;
mod family;
pub mod random;
mod scan;
mod structure;

pub use certificates::{
    check_example_gap_free, check_example_no_shedding, check_example_shelling, check_gap_free_example_elimination,
    check_large_grid, check_unicyclic, run_reference_certificates, shellable_not_vd, CertificatesReport,
    CheckOutcome,
};
pub use cycles::{cycle_homology_check, cycle_wedge, CycleHomologyReport, CycleHomologyRow};
pub use family::{
    check_instance, cm_key, evaluate, family_instances, run_family_check, EquivalenceReport, Evaluation, FamilyCheck,
    FamilyCheckReport, FamilyKind, Instance, Skipped, COCHORDAL, GAP_FREE, PREDICATE, SHELLABLE, VD, VD_ORDERING,
};
pub use scan::{cm_cochordal_scan, connected_graphs, scan_graphs, Discrepancy, ScanEntry, ScanReport};
pub use structure::{
    link_deletion_identities, ordering_concordance, seed_vd_check, shedding_concordance, union_join_check, Case,
    IdentityReport, OrderingConcordance, PairCase, SeedVdReport, SheddingConcordance, UnionJoinReport,
};
