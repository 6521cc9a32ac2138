use serde::{Deserialize, Serialize};

/// Size caps for the exponential routines. Every routine that can blow up
/// checks its cap up front and fails with [`crate::Error::BoundExceeded`]
/// instead of truncating.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Total faces a complex may have before face enumeration refuses.
    pub max_faces: u64,
    /// Facet count above which exhaustive shelling search refuses.
    pub max_shelling_facets: usize,
    /// Facet count above which the generic vertex decomposability search refuses.
    pub max_vd_facets: usize,
    /// Largest vertex count accepted by `canonical_key`.
    pub max_canon_n: usize,
    /// Circuit count above which matching numbers and chordality refuse.
    pub max_circuits: usize,
    /// Largest ground set for Leray number computation.
    pub max_leray_ground: usize,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        max_faces: 1 << 24,
        max_shelling_facets: 30,
        max_vd_facets: 4096,
        max_canon_n: 9,
        max_circuits: 10_000,
        max_leray_ground: 12,
    };
}

impl Default for Limits {
    fn default() -> Self {
        Limits::DEFAULT
    }
}
