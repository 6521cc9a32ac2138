use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use coconn_core::homology::FieldSpec;

#[derive(Debug, Parser)]
#[command(
    name = "coconn",
    version,
    about = "Co-connected complexes of graphs: construction, decomposability, Cohen-Macaulayness and clutter chordality"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Read and print vertex labels as 1..n instead of 0..n-1.
    #[arg(long, global = true)]
    pub one_indexed: bool,
    /// Worker threads for parallel sweeps; 1 makes every run sequential.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub workers: Option<u16>,
    /// Write JSON lines here; the summary table then goes to standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Suppress the summary table.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(flatten)]
    pub bounds: BoundArgs,
}

/// Overrides for the search bounds. Every override is reported on standard error.
#[derive(Debug, Args, Default)]
pub struct BoundArgs {
    /// Cap on faces enumerated for homology and h-vectors [default: 16777216].
    #[arg(long, global = true)]
    pub max_faces: Option<u64>,
    /// Cap on facets for the shelling search [default: 30; sweeps use 128].
    #[arg(long, global = true)]
    pub max_shelling_facets: Option<usize>,
    /// Cap on facets for the generic decomposition search [default: 4096].
    #[arg(long, global = true)]
    pub max_vd_facets: Option<usize>,
    /// Largest n for canonical forms and graph enumeration [default: 9].
    #[arg(long, global = true)]
    pub max_canon_n: Option<usize>,
    /// Cap on circuits for clutter chordality [default: 10000].
    #[arg(long, global = true)]
    pub max_circuits: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print Σ_r(A, G), Ind_r(G) or Con_r(G) as JSON.
    Build {
        what: BuildTarget,
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        r: usize,
        /// Seed set A, comma separated (Σ_r only).
        #[arg(long = "A", visible_alias = "a", value_delimiter = ',')]
        a: Vec<usize>,
    },
    /// Decide one property, with a certificate or a witness of failure.
    Check {
        what: CheckTarget,
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        r: usize,
        /// Seed set A, comma separated (vd, shell and cm only).
        #[arg(long = "A", visible_alias = "a", value_delimiter = ',')]
        a: Vec<usize>,
        /// Coefficient fields: Q, F2, or Fp:p for another prime p.
        #[arg(long, value_delimiter = ',', default_value = "Q,F2")]
        fields: Vec<FieldSpec>,
        /// Vertex decomposability route; `auto` uses the vertex ordering
        /// test when A is empty and r >= 2.
        #[arg(long, value_enum, default_value_t = VdMethod::Auto)]
        method: VdMethod,
    },
    /// Run a verification harness.
    Verify {
        #[command(subcommand)]
        what: VerifyTarget,
    },
    /// Compare Cohen-Macaulayness of Σ_r(G) with co-chordality of Con_r(G)
    /// over small connected graphs or a supplied list.
    #[command(group(ArgGroup::new("scan_source").args(["max_n", "graph6_file", "graph6", "edges"]).required(true)))]
    Scan {
        /// Scan every connected graph with at most this many vertices.
        #[arg(long)]
        max_n: Option<usize>,
        /// A graph6 stream, one graph per line.
        #[arg(long)]
        graph6_file: Option<PathBuf>,
        /// A single graph in graph6 format.
        #[arg(long)]
        graph6: Option<String>,
        /// A single graph as an edge-list file.
        #[arg(long)]
        edges: Option<PathBuf>,
        #[arg(long)]
        r: usize,
        /// Coefficient fields: Q, F2, or Fp:p for another prime p.
        #[arg(long, value_delimiter = ',', default_value = "Q,F2")]
        fields: Vec<FieldSpec>,
        /// Also print the per-graph verdicts.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BuildTarget {
    Sigma,
    Ind,
    Con,
    /// The complement clutter of Con_r(G).
    ConComplement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckTarget {
    Vd,
    Shell,
    Cm,
    Cochordal,
    Gapfree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VdMethod {
    Auto,
    Generic,
    Ordering,
}

#[derive(Debug, Subcommand)]
pub enum VerifyTarget {
    /// Sweep a graph family and compare the verdicts it claims equivalent.
    Family {
        /// cycle, ladder, grid3, cycle_complement, chordal or cograph.
        #[arg(long)]
        family: String,
        /// Size range such as `3..8` (inclusive); vertex counts for random families.
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        r: RangeInclusive<usize>,
        /// Coefficient fields: Q, F2, or Fp:p for another prime p.
        #[arg(long, value_delimiter = ',', default_value = "Q,F2")]
        fields: Vec<FieldSpec>,
        /// Sample count for random families.
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Replay the reference certificates for the gap-free and unicyclic examples.
    Certificates {
        /// Also run the long Σ_10(P_4 × P_4) check.
        #[arg(long)]
        large: bool,
    },
    /// Compare the homology of Ind_r(C_n) with the wedge-of-spheres formula.
    Cycles {
        #[arg(long, value_parser = parse_range, default_value = "4..10")]
        n: RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range, default_value = "2..4")]
        r: RangeInclusive<usize>,
    },
    /// Seeded decomposability, link/deletion identities, union and join
    /// decompositions, and agreement of the shedding tests.
    Structure {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").args(["edges", "graph6", "family"]).required(true)))]
pub struct GraphArgs {
    /// Edge-list file: header `n m`, then one `u v` per line.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// A single graph in graph6 format.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Named family: path, cycle, complete, ladder, grid3, cycle_complement, unicyclic.
    #[arg(long, requires = "n")]
    pub family: Option<String>,
    /// Family size parameter.
    #[arg(long)]
    pub n: Option<usize>,
}

/// `a`, `a..b` or `a..=b`, all inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("{t:?} is not a non-negative integer"));
    let (lo, hi) = match s.split_once("..") {
        None => {
            let v = num(s)?;
            (v, v)
        }
        Some((lo, hi)) => (num(lo)?, num(hi.strip_prefix('=').unwrap_or(hi))?),
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..8").unwrap(), 3..=8);
        assert_eq!(parse_range("3..=8").unwrap(), 3..=8);
        assert_eq!(parse_range("5").unwrap(), 5..=5);
        assert!(parse_range("8..3").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
