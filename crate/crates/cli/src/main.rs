mod args;
mod check;
mod harness;
mod output;
mod source;

use std::io;
use std::process::ExitCode;

use clap::Parser;
use coconn_core::{Graph, Limits};
use thiserror::Error;

use args::{BoundArgs, Cli, Command, VerifyTarget};
use harness::{FamilyArgs, ScanSource};
use output::Output;

/// Shelling-search facet cap used by the sweeps when not overridden; the
/// default is sized for single checks and several sweep complexes exceed it.
const SWEEP_SHELLING_FACETS: usize = 128;

#[derive(Debug, Error)]
pub enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] coconn_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

/// How a successful run ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A property came out false or a harness found a failure.
    False,
    /// Some instance was skipped at a bound.
    Bound,
}

fn limits(bounds: &BoundArgs, sweep: bool) -> Limits {
    let mut l = Limits::DEFAULT;
    if sweep {
        l.max_shelling_facets = SWEEP_SHELLING_FACETS;
    }
    let base = l;
    fn apply<T: Copy + std::fmt::Display + PartialOrd>(name: &str, slot: &mut T, value: Option<T>) {
        if let Some(v) = value {
            let direction = if v > *slot { "raised" } else { "lowered" };
            eprintln!("warning: {name} {direction} from {} to {v}", *slot);
            *slot = v;
        }
    }
    apply("max-faces", &mut l.max_faces, bounds.max_faces);
    apply("max-shelling-facets", &mut l.max_shelling_facets, bounds.max_shelling_facets);
    apply("max-vd-facets", &mut l.max_vd_facets, bounds.max_vd_facets);
    apply("max-canon-n", &mut l.max_canon_n, bounds.max_canon_n);
    apply("max-circuits", &mut l.max_circuits, bounds.max_circuits);
    if sweep && base.max_shelling_facets == l.max_shelling_facets {
        eprintln!("note: sweeps use max-shelling-facets {SWEEP_SHELLING_FACETS}");
    }
    l
}

fn graph_r(g: &Graph, r: usize) -> Result<(), Failure> {
    if r == 0 {
        return Err(Failure::Usage("--r must be at least 1".into()));
    }
    if g.n() == 0 {
        return Err(Failure::Usage("the graph has no vertices".into()));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Status, Failure> {
    let global = &cli.global;
    if let Some(k) = global.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(usize::from(k))
            .build_global()
            .map_err(|e| Failure::Internal(e.to_string()))?;
    }
    let mut out = Output::new(global.output.as_deref(), global.one_indexed, global.quiet)?;
    let one = global.one_indexed;
    let status = match cli.command {
        Command::Build { what, graph, r, a } => {
            let g = source::load(&graph, one)?;
            graph_r(&g, r)?;
            let a = source::vertex_set(&g, &a, one)?;
            check::build(&mut out, what, &g, r, a, &limits(&global.bounds, false))?
        }
        Command::Check {
            what,
            graph,
            r,
            a,
            fields,
            method,
        } => {
            let g = source::load(&graph, one)?;
            graph_r(&g, r)?;
            let a = source::vertex_set(&g, &a, one)?;
            check::check(&mut out, what, &g, r, a, &fields, method, &limits(&global.bounds, false))?
        }
        Command::Verify { what } => {
            let l = limits(&global.bounds, true);
            match what {
                VerifyTarget::Family {
                    family,
                    n,
                    r,
                    fields,
                    samples,
                    seed,
                } => harness::family(
                    &mut out,
                    FamilyArgs {
                        family: &family,
                        n,
                        r,
                        fields,
                        samples,
                        seed,
                    },
                    &l,
                )?,
                VerifyTarget::Certificates { large } => {
                    let mut l = l;
                    if large && global.bounds.max_shelling_facets.is_none() {
                        l.max_shelling_facets = 1 << 16;
                        eprintln!("note: --large uses max-shelling-facets {}", l.max_shelling_facets);
                    }
                    harness::certificates(&mut out, large, &l)?
                }
                VerifyTarget::Cycles { n, r } => harness::cycles(&mut out, n, r, &l)?,
                VerifyTarget::Structure { samples, seed } => harness::structure(&mut out, samples, seed, &l)?,
            }
        }
        Command::Scan {
            max_n,
            graph6_file,
            graph6,
            edges,
            r,
            fields,
            all,
        } => {
            if r == 0 {
                return Err(Failure::Usage("--r must be at least 1".into()));
            }
            let source = if let Some(n) = max_n {
                ScanSource::UpTo(n)
            } else if let Some(path) = graph6_file {
                ScanSource::Graphs(source::graph6_file(&path)?)
            } else if let Some(code) = graph6 {
                ScanSource::Graphs(vec![coconn_core::graph::parse_graph6(code.trim())?])
            } else if let Some(path) = edges {
                ScanSource::Graphs(vec![source::edges_file(&path, one)?])
            } else {
                return Err(Failure::Usage("no scan source given".into()));
            };
            harness::scan(&mut out, source, r, &fields, all, &limits(&global.bounds, false))?
        }
    };
    out.finish()?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::False) => ExitCode::from(1),
        Ok(Status::Bound) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Failure::Core(c) if c.is_bound_exceeded() => ExitCode::from(3),
                Failure::Internal(_) => ExitCode::from(4),
                _ => ExitCode::from(2),
            }
        }
    }
}
