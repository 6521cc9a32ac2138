use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::random;
use crate::clutter::Clutter;
use crate::complex::sigma_r;
use crate::error::Result;
use crate::graph::{enumerate_graphs, is_cochordal, to_graph6, Graph};
use crate::homology::{is_cohen_macaulay, reduced_betti, CmVerdict, FieldSpec};
use crate::{Limits, VertexSet};

/// Verdicts on one scanned graph.
#[derive(Clone, Debug, Serialize)]
pub struct ScanEntry {
    pub graph6: String,
    pub n: usize,
    pub cm: BTreeMap<String, bool>,
    pub cochordal: bool,
    /// Co-chordality of the graph itself, reported for `r = 2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph_cochordal: Option<bool>,
}

/// A graph where CM over some field and co-chordality of `Con_r` differ.
#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub entry: ScanEntry,
    /// Both sides were re-derived by independent means and still differ.
    pub confirmed: bool,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub r: usize,
    pub fields: Vec<FieldSpec>,
    pub graphs_scanned: usize,
    pub per_n: BTreeMap<usize, usize>,
    pub entries: Vec<ScanEntry>,
    pub candidates: Vec<Discrepancy>,
    /// Graphs whose CM verdict differs between fields.
    pub field_dependent: Vec<String>,
}

impl ScanReport {
    pub fn confirmed(&self) -> impl Iterator<Item = &Discrepancy> {
        self.candidates.iter().filter(|d| d.confirmed)
    }
}

/// Every isomorphism class of connected graphs with `1..=max_n` vertices.
pub fn connected_graphs(max_n: usize, limits: &Limits) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_graphs(n, true, limits.max_canon_n)?);
    }
    Ok(out)
}

/// Compare CM of `Σ_r(G)` over each field with co-chordality of `Con_r(G)`
/// on all connected graphs up to `max_n` vertices.
pub fn cm_cochordal_scan(max_n: usize, r: usize, fields: &[FieldSpec], limits: &Limits) -> Result<ScanReport> {
    let graphs = connected_graphs(max_n, limits)?;
    scan_graphs(&graphs, r, fields, limits)
}

/// The same comparison on a supplied graph list, in list order.
pub fn scan_graphs(graphs: &[Graph], r: usize, fields: &[FieldSpec], limits: &Limits) -> Result<ScanReport> {
    let entries: Vec<Result<(ScanEntry, Vec<CmVerdict>)>> =
        graphs.par_iter().map(|g| scan_one(g, r, fields, limits)).collect();
    let mut report = ScanReport {
        r,
        fields: fields.to_vec(),
        graphs_scanned: graphs.len(),
        per_n: BTreeMap::new(),
        entries: Vec::new(),
        candidates: Vec::new(),
        field_dependent: Vec::new(),
    };
    for (g, entry) in graphs.iter().zip(entries) {
        let (entry, verdicts) = entry?;
        *report.per_n.entry(entry.n).or_default() += 1;
        let values: Vec<bool> = entry.cm.values().copied().collect();
        if values.windows(2).any(|w| w[0] != w[1]) {
            report.field_dependent.push(entry.graph6.clone());
        }
        if values.iter().any(|&cm| cm != entry.cochordal) {
            report.candidates.push(replay(g, r, entry.clone(), &verdicts, limits)?);
        }
        report.entries.push(entry);
    }
    Ok(report)
}

fn scan_one(g: &Graph, r: usize, fields: &[FieldSpec], limits: &Limits) -> Result<(ScanEntry, Vec<CmVerdict>)> {
    let s = sigma_r(g, VertexSet::EMPTY, r)?;
    let mut cm = BTreeMap::new();
    let mut verdicts = Vec::new();
    for &field in fields {
        let v = is_cohen_macaulay(&s, field, limits.max_faces)?;
        cm.insert(field.to_string(), v.cohen_macaulay);
        verdicts.push(v);
    }
    let cochordal = Clutter::con_r(g, r).complement().is_chordal(limits.max_circuits)?.is_some();
    Ok((
        ScanEntry {
            graph6: to_graph6(g)?,
            n: g.n(),
            cm,
            cochordal,
            graph_cochordal: (r == 2).then(|| is_cochordal(g)),
        },
        verdicts,
    ))
}

/// Re-derive both sides of a discrepancy: the elimination certificate is
/// replayed, failing links are recomputed directly, and a negative chordality
/// verdict is re-run on a randomly relabelled copy.
fn replay(g: &Graph, r: usize, entry: ScanEntry, verdicts: &[CmVerdict], limits: &Limits) -> Result<Discrepancy> {
    let mut notes = Vec::new();
    let mut confirmed = true;
    let complement = Clutter::con_r(g, r).complement();
    if entry.cochordal {
        let cert = complement.is_chordal(limits.max_circuits)?.expect("co-chordal verdict");
        let valid = complement.verify_elimination(&cert).is_valid();
        notes.push(format!("elimination certificate replayed: {valid}"));
        confirmed &= valid;
    } else {
        let mut rng = random::rng(entry.graph6.bytes().map(u64::from).sum());
        let mut perm: Vec<usize> = (0..g.n()).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let relabelled = g.permute(&perm)?;
        let again = Clutter::con_r(&relabelled, r).complement().is_chordal(limits.max_circuits)?;
        notes.push(format!("relabelled chordality search agrees: {}", again.is_none()));
        confirmed &= again.is_none();
    }
    let s = sigma_r(g, VertexSet::EMPTY, r)?;
    for v in verdicts {
        if v.cohen_macaulay == entry.cochordal {
            continue;
        }
        match &v.witness {
            Some(w) => {
                let link = s.link(w.face)?;
                let betti = reduced_betti(&link, v.field, limits.max_faces)?.betti(w.homology_dimension);
                notes.push(format!(
                    "{}: link of {} has betti {betti} in dimension {}",
                    v.field, w.face, w.homology_dimension
                ));
                confirmed &= betti > 0;
            }
            None => {
                notes.push(format!("{}: CM without a failing link, against a non-chordal complement", v.field));
            }
        }
    }
    Ok(Discrepancy { entry, confirmed, notes })
}
