use coconn_core::cert::Certificate;
use coconn_core::clutter::{find_r_gap, Clutter};
use coconn_core::complex::{ind_r, sigma_r, SimplicialComplex};
use coconn_core::decomp::{
    find_shelling, is_shedding_conr, is_vertex_decomposable, vd_sigma_via_ordering, verify_shedding_order,
    verify_shelling, verify_vd_tree, SheddingCheck, ShellingCheck, ShellingOutcome, VdOutcome,
};
use coconn_core::graph::to_graph6;
use coconn_core::homology::{is_cohen_macaulay, FieldSpec};
use coconn_core::{Graph, Limits, VertexSet};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{BuildTarget, CheckTarget, VdMethod};
use crate::output::{yes_no, Output};
use crate::{Failure, Status};

#[derive(Serialize)]
struct Built<'a, T: Serialize> {
    object: &'static str,
    graph6: String,
    r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<VertexSet>,
    #[serde(flatten)]
    value: &'a T,
}

pub fn build(
    out: &mut Output,
    what: BuildTarget,
    g: &Graph,
    r: usize,
    a: VertexSet,
    limits: &Limits,
) -> Result<Status, Failure> {
    if what != BuildTarget::Sigma && !a.is_empty() {
        return Err(Failure::Usage("--A only applies to `build sigma`".into()));
    }
    let graph6 = to_graph6(g)?;
    let (object, rows) = match what {
        BuildTarget::Sigma | BuildTarget::Ind => {
            let (object, d) = if what == BuildTarget::Sigma {
                ("sigma", sigma_r(g, a, r)?)
            } else {
                ("ind", ind_r(g, r, limits.max_faces)?)
            };
            out.line(&Built {
                object,
                graph6,
                r,
                a: (what == BuildTarget::Sigma).then_some(a),
                value: &d,
            })?;
            (object, vec![d.facets().len().to_string(), complex_dimension(&d)])
        }
        BuildTarget::Con | BuildTarget::ConComplement => {
            let con = Clutter::con_r(g, r);
            let (object, c) = if what == BuildTarget::Con {
                ("con", con)
            } else {
                ("con_complement", con.complement())
            };
            out.line(&Built {
                object,
                graph6,
                r,
                a: None,
                value: &c,
            })?;
            (object, vec![c.circuits().len().to_string(), format!("d={}", c.d())])
        }
    };
    let mut row = vec![object.to_string(), r.to_string()];
    row.extend(rows);
    out.table(&["object", "r", "facets/circuits", "dimension"], &[row])?;
    Ok(Status::Ok)
}

fn complex_dimension(d: &SimplicialComplex) -> String {
    match d.dimension() {
        Some(k) => k.to_string(),
        None => "void".into(),
    }
}

/// One decision: the verdict plus a replayed certificate or a witness.
#[derive(Serialize)]
struct Verdict {
    check: &'static str,
    graph6: String,
    r: usize,
    a: VertexSet,
    verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Value>,
}

fn certificate(c: impl Into<Certificate>) -> Result<Value, Failure> {
    serde_json::to_value(c.into()).map_err(|e| Failure::Internal(e.to_string()))
}

#[allow(clippy::too_many_arguments)]
pub fn check(
    out: &mut Output,
    what: CheckTarget,
    g: &Graph,
    r: usize,
    a: VertexSet,
    fields: &[FieldSpec],
    method: VdMethod,
    limits: &Limits,
) -> Result<Status, Failure> {
    if matches!(what, CheckTarget::Cochordal | CheckTarget::Gapfree) && !a.is_empty() {
        return Err(Failure::Usage("--A only applies to vd, shell and cm".into()));
    }
    if fields.is_empty() {
        return Err(Failure::Usage("--fields must name at least one field".into()));
    }
    let mut v = Verdict {
        check: "",
        graph6: to_graph6(g)?,
        r,
        a,
        verdict: false,
        certificate: None,
        witness: None,
    };
    match what {
        CheckTarget::Vd => {
            v.check = "vd";
            vd(&mut v, g, r, a, method, limits)?;
        }
        CheckTarget::Shell => {
            v.check = "shell";
            let s = sigma_r(g, a, r)?;
            match find_shelling(&s, limits.max_shelling_facets, limits.max_faces)? {
                ShellingOutcome::Shellable { order } => {
                    if verify_shelling(&s, &order)? != ShellingCheck::Valid {
                        return Err(Failure::Internal("shelling order failed to replay".into()));
                    }
                    v.verdict = true;
                    v.certificate = Some(certificate(order)?);
                }
                ShellingOutcome::NegativeHVector { k, value } => {
                    v.witness = Some(json!({"kind": "negative_h_vector", "k": k, "value": value}));
                }
                ShellingOutcome::LinkNegativeHVector { vertex, k, value } => {
                    v.witness = Some(json!({"kind": "link_negative_h_vector", "vertex": vertex, "k": k, "value": value}));
                }
                ShellingOutcome::Exhausted { states } => {
                    v.witness = Some(json!({"kind": "search_exhausted", "states": states}));
                }
            }
        }
        CheckTarget::Cm => {
            v.check = "cm";
            let s = sigma_r(g, a, r)?;
            let mut failing = Vec::new();
            for &field in fields {
                let verdict = is_cohen_macaulay(&s, field, limits.max_faces)?;
                if let Some(w) = verdict.witness {
                    failing.push(json!({
                        "field": field,
                        "face": w.face,
                        "link_dimension": w.link_dimension,
                        "homology_dimension": w.homology_dimension,
                        "betti": w.betti,
                    }));
                }
            }
            v.verdict = failing.is_empty();
            if v.verdict {
                let faces = s.faces(limits.max_faces)?.len();
                v.certificate = Some(json!({"kind": "reisner", "fields": fields, "links_checked": faces}));
            } else {
                v.witness = Some(json!({"kind": "failing_link", "links": failing}));
            }
        }
        CheckTarget::Cochordal => {
            v.check = "cochordal";
            let complement = Clutter::con_r(g, r).complement();
            match complement.is_chordal(limits.max_circuits)? {
                Some(cert) => {
                    if !complement.verify_elimination(&cert).is_valid() {
                        return Err(Failure::Internal("elimination sequence failed to replay".into()));
                    }
                    v.verdict = true;
                    v.certificate = Some(certificate(cert)?);
                }
                None => {
                    v.witness = Some(json!({
                        "kind": "elimination_exhausted",
                        "complement_circuits": complement.circuits().len(),
                    }));
                }
            }
        }
        CheckTarget::Gapfree => {
            v.check = "gapfree";
            match find_r_gap(g, r) {
                None => {
                    v.verdict = true;
                    v.certificate = Some(json!({
                        "kind": "no_gap",
                        "circuits": Clutter::con_r(g, r).circuits().len(),
                    }));
                }
                Some((e, f)) => v.witness = Some(json!({"kind": "gap", "gap": [e, f]})),
            }
        }
    }
    out.line(&v)?;
    let evidence = match (&v.certificate, &v.witness) {
        (Some(c), _) => c["kind"].as_str().unwrap_or("").to_string(),
        (_, Some(w)) => w["kind"].as_str().unwrap_or("").to_string(),
        _ => String::new(),
    };
    out.table(
        &["check", "graph6", "r", "verdict", "evidence"],
        &[vec![v.check.into(), v.graph6.clone(), r.to_string(), yes_no(v.verdict), evidence]],
    )?;
    Ok(if v.verdict { Status::Ok } else { Status::False })
}

fn vd(v: &mut Verdict, g: &Graph, r: usize, a: VertexSet, method: VdMethod, limits: &Limits) -> Result<(), Failure> {
    let ordering_applies = a.is_empty() && r >= 2;
    let use_ordering = match method {
        VdMethod::Auto => ordering_applies,
        VdMethod::Generic => false,
        VdMethod::Ordering if ordering_applies => true,
        VdMethod::Ordering => {
            return Err(Failure::Usage("the ordering test needs an empty A and r >= 2".into()));
        }
    };
    if use_ordering {
        match vd_sigma_via_ordering(g, r)? {
            Some(order) => {
                if verify_shedding_order(g, r, &order) != SheddingCheck::Valid {
                    return Err(Failure::Internal("shedding order failed to replay".into()));
                }
                v.verdict = true;
                v.certificate = Some(certificate(order)?);
            }
            None => {
                let shedding: Vec<usize> = g
                    .vertices()
                    .iter()
                    .filter(|&x| is_shedding_conr(g, r, x).unwrap_or(false))
                    .collect();
                v.witness = Some(json!({"kind": "no_shedding_order", "shedding_vertices": shedding}));
            }
        }
        return Ok(());
    }
    let s = sigma_r(g, a, r)?;
    match is_vertex_decomposable(&s, limits.max_vd_facets)? {
        VdOutcome::Decomposable { tree } => {
            if !verify_vd_tree(&s, &tree) {
                return Err(Failure::Internal("decomposition failed to replay".into()));
            }
            v.verdict = true;
            v.certificate = Some(certificate(tree)?);
        }
        VdOutcome::NotDecomposable { shedding_vertices } => {
            v.witness = Some(json!({"kind": "no_decomposition", "shedding_vertices": shedding_vertices}));
        }
    }
    Ok(())
}
