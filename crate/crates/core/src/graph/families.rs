use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Cotree, Graph};
use crate::error::{Error, Result};

/// Named graph families.
///
/// Products `P_n × P_m` label vertex `(x_i, y_j)` (1-based `i`, `j`) as
/// `(i - 1) * m + (j - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `P_n × P_2`.
    Ladder(usize),
    /// `P_n × P_3`.
    Grid3(usize),
    /// `P_n × P_m`.
    Grid(usize, usize),
    CycleComplement(usize),
    /// The unicyclic graph on a cycle of length `r + 2` with a pendant leaf
    /// on every odd-numbered cycle vertex.
    Unicyclic(usize),
    Cograph(Cotree),
}

impl Family {
    /// Look a family up by its command-line name with a single size parameter.
    pub fn from_name(name: &str, n: usize) -> Result<Family> {
        Ok(match name {
            "path" => Family::Path(n),
            "cycle" => Family::Cycle(n),
            "complete" => Family::Complete(n),
            "ladder" => Family::Ladder(n),
            "grid3" => Family::Grid3(n),
            "cycle_complement" | "cycle-complement" => Family::CycleComplement(n),
            "unicyclic" => Family::Unicyclic(n),
            _ => {
                return Err(Error::Invalid(format!(
                    "unknown family {name:?}; expected one of path, cycle, complete, \
                     ladder, grid3, cycle_complement, unicyclic"
                )))
            }
        })
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Path(n) => {
                require(n >= 1, "n", n, "n >= 1")?;
                let mut g = Graph::empty(n)?;
                for v in 1..n {
                    g.add_edge(v - 1, v);
                }
                Ok(g)
            }
            Family::Cycle(n) => {
                require(n >= 3, "n", n, "n >= 3")?;
                let mut g = Family::Path(n).build()?;
                g.add_edge(n - 1, 0);
                Ok(g)
            }
            Family::Complete(n) => {
                require(n >= 1, "n", n, "n >= 1")?;
                Ok(Graph::empty(n)?.complement())
            }
            Family::Ladder(n) => Family::Grid(n, 2).build(),
            Family::Grid3(n) => Family::Grid(n, 3).build(),
            Family::Grid(n, m) => {
                require(n >= 1, "n", n, "n >= 1")?;
                require(m >= 1, "m", m, "m >= 1")?;
                Family::Path(n).build()?.product(&Family::Path(m).build()?)
            }
            Family::CycleComplement(n) => Ok(Family::Cycle(n).build()?.complement()),
            Family::Unicyclic(r) => {
                require(r >= 3, "r", r, "r >= 3")?;
                let cycle = r + 2;
                let mut g = Graph::empty(cycle + (r + 3) / 2)?;
                for v in 0..cycle {
                    g.add_edge(v, (v + 1) % cycle);
                }
                for (k, v) in (0..cycle).step_by(2).enumerate() {
                    g.add_edge(v, cycle + k);
                }
                Ok(g)
            }
            Family::Cograph(ref tree) => tree.to_graph(),
        }
    }
}

fn require(ok: bool, name: &'static str, value: usize, expected: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::param(name, value, expected))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::Ladder(n) => write!(f, "P{n}xP2"),
            Family::Grid3(n) => write!(f, "P{n}xP3"),
            Family::Grid(n, m) => write!(f, "P{n}xP{m}"),
            Family::CycleComplement(n) => write!(f, "C{n}^c"),
            Family::Unicyclic(r) => write!(f, "unicyclic({r})"),
            Family::Cograph(t) => write!(f, "cograph({t})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn sizes() {
        assert_eq!(Family::Path(4).build().unwrap().edge_count(), 3);
        assert_eq!(Family::Cycle(5).build().unwrap().edge_count(), 5);
        assert_eq!(Family::Complete(5).build().unwrap().edge_count(), 10);
        assert_eq!(Family::Ladder(4).build().unwrap().edge_count(), 4 + 2 * 3);
        assert_eq!(Family::Grid3(3).build().unwrap().edge_count(), 12);
        assert_eq!(Family::CycleComplement(6).build().unwrap().edge_count(), 9);
        for r in 3..10 {
            let g = Family::Unicyclic(r).build().unwrap();
            assert_eq!(g.n(), r + 2 + (r + 3) / 2);
            assert_eq!(g.edge_count(), g.n());
            assert!(g.is_connected());
        }
    }

    #[test]
    fn unicyclic_matches_drawn_instances() {
        assert_eq!(Family::Unicyclic(3).build().unwrap(), fixtures::unicyclic3_graph());
        assert_eq!(Family::Unicyclic(4).build().unwrap(), fixtures::unicyclic4_graph());
    }

    #[test]
    fn parameter_errors() {
        assert!(Family::Cycle(2).build().is_err());
        assert!(Family::Path(0).build().is_err());
        assert!(Family::Unicyclic(2).build().is_err());
        assert!(Family::from_name("petersen", 10).is_err());
        assert_eq!(Family::from_name("ladder", 3).unwrap(), Family::Ladder(3));
    }

    #[test]
    fn ladder_labelling() {
        let g = Family::Ladder(3).build().unwrap();
        // Rails x_i y_1 -- x_{i+1} y_1 and rungs x_i y_1 -- x_i y_2.
        assert!(g.has_edge(0, 2) && g.has_edge(2, 4));
        assert!(g.has_edge(0, 1) && g.has_edge(4, 5));
        assert!(!g.has_edge(0, 3));
    }
}
