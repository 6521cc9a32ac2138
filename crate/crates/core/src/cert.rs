//! Machine-checkable witnesses, tagged by kind for JSON output.

use serde::{Deserialize, Serialize};

use crate::clutter::EliminationCertificate;
use crate::decomp::{SheddingOrder, ShellingOrder, VdTree};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Clutter chordality: subcircuits deleted in order.
    Elimination(EliminationCertificate),
    /// Vertex decomposability of `Σ_r(G)` read off a vertex ordering.
    SheddingOrder(SheddingOrder),
    ShellingOrder(ShellingOrder),
    VdTree { tree: VdTree },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Elimination(_) => "elimination",
            Certificate::SheddingOrder(_) => "shedding_order",
            Certificate::ShellingOrder(_) => "shelling_order",
            Certificate::VdTree { .. } => "vd_tree",
        }
    }
}

impl From<EliminationCertificate> for Certificate {
    fn from(c: EliminationCertificate) -> Self {
        Certificate::Elimination(c)
    }
}

impl From<SheddingOrder> for Certificate {
    fn from(o: SheddingOrder) -> Self {
        Certificate::SheddingOrder(o)
    }
}

impl From<ShellingOrder> for Certificate {
    fn from(o: ShellingOrder) -> Self {
        Certificate::ShellingOrder(o)
    }
}

impl From<VdTree> for Certificate {
    fn from(tree: VdTree) -> Self {
        Certificate::VdTree { tree }
    }
}
