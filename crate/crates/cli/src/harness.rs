use std::ops::RangeInclusive;

use coconn_core::homology::FieldSpec;
use coconn_core::verify::{
    cm_cochordal_scan, cycle_homology_check, link_deletion_identities, ordering_concordance, run_family_check,
    run_reference_certificates, scan_graphs, seed_vd_check, shedding_concordance, union_join_check, FamilyCheck,
    FamilyKind, ScanReport,
};
use coconn_core::{Graph, Limits};
use serde::Serialize;
use serde_json::json;

use crate::output::{yes_no, Output};
use crate::{Failure, Status};

pub struct FamilyArgs<'a> {
    pub family: &'a str,
    pub n: RangeInclusive<usize>,
    pub r: RangeInclusive<usize>,
    pub fields: Vec<FieldSpec>,
    pub samples: usize,
    pub seed: u64,
}

pub fn family(out: &mut Output, args: FamilyArgs, limits: &Limits) -> Result<Status, Failure> {
    let kind = FamilyKind::from_name(args.family).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown family {:?}; expected cycle, ladder, grid3, cycle_complement, chordal or cograph",
            args.family
        ))
    })?;
    if args.fields.is_empty() {
        return Err(Failure::Usage("--fields must name at least one field".into()));
    }
    if *args.r.start() < 2 {
        return Err(Failure::Usage("family sweeps need r >= 2".into()));
    }
    let check = FamilyCheck {
        fields: args.fields,
        samples: args.samples,
        seed: args.seed,
        limits: *limits,
        ..FamilyCheck::new(kind, args.n, args.r)
    };
    if kind.is_random() {
        eprintln!("seed: {}", args.seed);
    }
    let report = run_family_check(&check)?;
    let mut rows = Vec::new();
    for r in &report.reports {
        out.line(r)?;
        let claimed: Vec<String> = r
            .claimed_equivalent
            .iter()
            .map(|k| format!("{k}={}", if r.verdicts[k] { 'T' } else { 'F' }))
            .collect();
        rows.push(vec![
            r.instance.id(),
            claimed.join(" "),
            yes_no(r.agreement),
            yes_no(r.hierarchy_holds && r.certificates_replayed),
            format!("{:.1?}", r.elapsed),
        ]);
    }
    for s in &report.skipped {
        out.line(&json!({"skipped": s.instance, "reason": s.reason}))?;
        rows.push(vec![s.instance.id(), format!("SKIPPED: {}", s.reason), "-".into(), "-".into(), "-".into()]);
    }
    let failures = report.failures().count();
    out.line(&json!({
        "summary": "family",
        "family": report.family,
        "seed": report.seed,
        "instances": report.reports.len(),
        "failures": failures,
        "skipped": report.skipped.len(),
    }))?;
    out.table(&["instance", "claimed verdicts", "agree", "consistent", "time"], &rows)?;
    Ok(if failures > 0 {
        Status::False
    } else if !report.skipped.is_empty() {
        Status::Bound
    } else {
        Status::Ok
    })
}

pub fn certificates(out: &mut Output, large: bool, limits: &Limits) -> Result<Status, Failure> {
    let report = run_reference_certificates(large, limits)?;
    let mut rows = Vec::new();
    for c in &report.checks {
        out.line(c)?;
        rows.push(vec![c.id.to_string(), c.name.clone(), yes_no(c.passed), format!("{:.1?}", c.elapsed)]);
    }
    out.table(&["id", "check", "passed", "time"], &rows)?;
    Ok(if report.all_passed() { Status::Ok } else { Status::False })
}

pub fn cycles(out: &mut Output, n: RangeInclusive<usize>, r: RangeInclusive<usize>, limits: &Limits) -> Result<Status, Failure> {
    let report = cycle_homology_check(n, r, limits)?;
    let show = |m: &std::collections::BTreeMap<isize, u64>| {
        m.iter().map(|(d, b)| format!("b{d}={b}")).collect::<Vec<_>>().join(" ")
    };
    let mut rows = Vec::new();
    for row in &report.rows {
        out.line(row)?;
        rows.push(vec![
            row.n.to_string(),
            row.r.to_string(),
            show(&row.expected),
            show(&row.found),
            yes_no(row.matches),
        ]);
    }
    out.table(&["n", "r", "expected", "found", "match"], &rows)?;
    Ok(if report.all_match() { Status::Ok } else { Status::False })
}

#[derive(Serialize)]
struct Line<'a, T: Serialize> {
    check: &'static str,
    passed: bool,
    #[serde(flatten)]
    report: &'a T,
}

fn record<T: Serialize>(
    out: &mut Output,
    rows: &mut Vec<Vec<String>>,
    check: &'static str,
    passed: bool,
    report: &T,
    summary: String,
) -> Result<bool, Failure> {
    out.line(&Line { check, passed, report })?;
    rows.push(vec![check.to_string(), yes_no(passed), summary]);
    Ok(passed)
}

pub fn structure(out: &mut Output, samples: usize, seed: u64, limits: &Limits) -> Result<Status, Failure> {
    eprintln!("seed: {seed}");
    let mut rows = Vec::new();
    let mut all = true;

    let seeded = seed_vd_check(samples, seed, limits)?;
    let s = format!("{} samples, {} failures", seeded.samples, seeded.failures.len());
    all &= record(out, &mut rows, "seeded_vd", seeded.failures.is_empty(), &seeded, s)?;

    let ids = link_deletion_identities(samples, seed)?;
    let s = format!(
        "{} links, {} deletions, {} failures",
        ids.links_checked,
        ids.deletions_checked,
        ids.failures.len()
    );
    all &= record(out, &mut rows, "link_deletion", ids.failures.is_empty(), &ids, s)?;

    let uj = union_join_check(4, &[2, 3], limits)?;
    let passed = uj.union_decomposition.is_empty()
        && uj.join_decomposition.is_empty()
        && uj.union_vd_by_circuits.is_empty()
        && uj.join_vd.is_empty();
    let s = format!(
        "{} cases; decompositions {}+{} failures; union VD by circuits {}, by size {}; join VD {}",
        uj.cases,
        uj.union_decomposition.len(),
        uj.join_decomposition.len(),
        uj.union_vd_by_circuits.len(),
        uj.union_vd_by_size.len(),
        uj.join_vd.len()
    );
    all &= record(out, &mut rows, "union_join", passed, &uj, s)?;

    let sh = shedding_concordance(6, 4, limits)?;
    let passed = sh.generic_vs_support.is_empty() && sh.neighbourhood.is_empty();
    let s = format!(
        "{} cases; generic/support {}; neighbourhood r>=2 {}, r=1 {}",
        sh.cases,
        sh.generic_vs_support.len(),
        sh.neighbourhood.len(),
        sh.neighbourhood_r1.len()
    );
    all &= record(out, &mut rows, "shedding_tests", passed, &sh, s)?;

    let ord = ordering_concordance(7, &[2, 3], limits)?;
    let passed = ord.disagreements.is_empty() && ord.bad_orders.is_empty();
    let s = format!("{} graphs, {} disagreements", ord.graphs, ord.disagreements.len());
    all &= record(out, &mut rows, "ordering_vs_generic", passed, &ord, s)?;

    out.table(&["check", "passed", "summary"], &rows)?;
    Ok(if all { Status::Ok } else { Status::False })
}

pub enum ScanSource {
    UpTo(usize),
    Graphs(Vec<Graph>),
}

pub fn scan(
    out: &mut Output,
    source: ScanSource,
    r: usize,
    fields: &[FieldSpec],
    all: bool,
    limits: &Limits,
) -> Result<Status, Failure> {
    if fields.is_empty() {
        return Err(Failure::Usage("--fields must name at least one field".into()));
    }
    let report: ScanReport = match source {
        ScanSource::UpTo(n) => cm_cochordal_scan(n, r, fields, limits)?,
        ScanSource::Graphs(gs) => scan_graphs(&gs, r, fields, limits)?,
    };
    if all {
        for e in &report.entries {
            out.line(e)?;
        }
    }
    for d in &report.candidates {
        out.line(&json!({"discrepancy": d}))?;
    }
    let confirmed = report.confirmed().count();
    out.line(&json!({
        "summary": "scan",
        "r": report.r,
        "fields": report.fields,
        "graphs_scanned": report.graphs_scanned,
        "per_n": report.per_n,
        "candidates": report.candidates.len(),
        "confirmed": confirmed,
        "field_dependent": report.field_dependent,
    }))?;
    let mut rows: Vec<Vec<String>> = report
        .per_n
        .iter()
        .map(|(n, count)| {
            let hits = report.candidates.iter().filter(|d| d.entry.n == *n).count();
            vec![n.to_string(), count.to_string(), hits.to_string()]
        })
        .collect();
    rows.push(vec!["all".into(), report.graphs_scanned.to_string(), report.candidates.len().to_string()]);
    out.table(&["n", "graphs", "discrepancies"], &rows)?;
    Ok(if confirmed > 0 { Status::False } else { Status::Ok })
}
