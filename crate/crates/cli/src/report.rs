//! Reports for each subcommand, as JSON values.

use std::collections::BTreeSet;

use burnside_core::burnside::compute_basis;
use burnside_core::catalog::ENTRIES;
use burnside_core::green::{compute_green, GreenData};
use burnside_core::group::maximal_subgroup;
use burnside_core::marks::{marks_table, semisimplicity_certificate};
use burnside_core::orbits::{aut_group, canonical_form, strong_orbits, weak_orbits};
use burnside_core::structure::{distinguishability, structure_report, DistinguishabilityReport};
use burnside_core::{FiniteMonoid, OrbitBasis, PartialMSet, RightCongruence};
use serde_json::{json, Value};

use crate::input::Loaded;
use crate::{CliError, RunConfig};

fn labels(m: &FiniteMonoid, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| m.label(x)).collect()
}

/// J-class ids in order of least member.
fn j_classes(g: &GreenData, m: &FiniteMonoid) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    m.elements().map(|x| g.j_class(x)).filter(|&j| seen.insert(j)).collect()
}

fn j_class_json(m: &FiniteMonoid, g: &GreenData, j: usize) -> Value {
    let members = g.j_class_members(j);
    json!({
        "id": j,
        "members": labels(m, &members),
    })
}

fn congruence_json(m: &FiniteMonoid, c: &RightCongruence) -> Value {
    let blocks: Vec<Vec<String>> = c.element_blocks().iter().map(|b| labels(m, b)).collect();
    json!({
        "idempotent": m.label(c.idempotent),
        "classes": blocks,
    })
}

pub fn analyze(loaded: &Loaded) -> Result<Value, CliError> {
    let m = loaded.monoid();
    let g = compute_green(&m);
    let mut classes = Vec::new();
    for j in j_classes(&g, &m) {
        let members = g.j_class_members(j);
        let r: BTreeSet<Vec<usize>> = members.iter().map(|&x| g.r_class_of(x)).collect();
        let l: BTreeSet<Vec<usize>> = members.iter().map(|&x| g.l_class_of(x)).collect();
        let mut entry = json!({
            "id": j,
            "members": labels(&m, &members),
            "r_classes": r.len(),
            "l_classes": l.len(),
            "h_class_size": g.h_class_of(members[0]).len(),
            "regular": g.designated_for_class(j).is_some(),
        });
        if let Some(e) = g.designated_for_class(j) {
            let h = maximal_subgroup(&m, &g, e)?;
            entry["designated_idempotent"] = json!(m.label(e));
            entry["maximal_subgroup"] = json!({
                "order": h.order(),
                "elements": labels(&m, h.elements()),
                "subgroup_classes": h.subgroups_up_to_conjugacy().len(),
            });
        }
        classes.push(entry);
    }
    let order: Vec<String> = g.designated_in_j_order().iter().map(|&e| m.label(e)).collect();
    let d = distinguishability(&m, &g)?;
    Ok(json!({
        "size": m.size(),
        "identity": m.label(m.identity()),
        "commutative": m.is_commutative(),
        "group": m.is_group(),
        "idempotents": labels(&m, &m.idempotents()),
        "j_classes": classes,
        "designated_idempotents_in_j_order": order,
        "distinguishable": d.distinguishable,
        "er": d.er,
        "commuting_idempotents": d.commuting_idempotents,
    }))
}

pub fn orbits(loaded: &Loaded) -> Result<Value, CliError> {
    let x: PartialMSet = loaded.mset();
    let m = x.monoid().clone();
    let g = compute_green(&m);
    let weak = weak_orbits(&x).blocks();
    let mut strong = Vec::new();
    for o in strong_orbits(&x, &g)? {
        let cf = canonical_form(&o.action, &g)?;
        let aut = aut_group(&m, &g, &cf.congruence);
        strong.push(json!({
            "points": o.points,
            "sink": o.is_invariant_in(&x),
            "apex": j_class_json(&m, &g, o.apex),
            "canonical": congruence_json(&m, &cf.congruence),
            "aut_order": aut.order(),
        }));
    }
    Ok(json!({
        "points": x.len(),
        "total": x.is_total(),
        "weak_orbits": weak,
        "strong_orbits": strong,
    }))
}

fn basis(loaded: &Loaded, config: &RunConfig) -> Result<OrbitBasis, CliError> {
    Ok(compute_basis(&loaded.monoid(), &config.caps)?)
}

pub fn burnside(loaded: &Loaded, config: &RunConfig) -> Result<Value, CliError> {
    let b = basis(loaded, config)?;
    let m = b.monoid();
    let g = b.green();
    let classes: Vec<Value> = b
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "id": i,
                "points": c.len(),
                "apex": j_class_json(m, g, c.apex),
                "aut_order": c.aut_order,
                "canonical": congruence_json(m, &c.congruence),
                "subgroup": c.subgroup.as_ref().map(|k| labels(m, k)),
            })
        })
        .collect();
    let table = b.multiplication_table()?;
    Ok(json!({
        "rank": b.rank(),
        "one": b.one_index(),
        "classes": classes,
        "multiplication": table.cube,
    }))
}

pub fn marks(loaded: &Loaded, config: &RunConfig) -> Result<Value, CliError> {
    let b = basis(loaded, config)?;
    let t = marks_table(&b)?;
    let cert = semisimplicity_certificate(&b, &t, config.seed)?;
    Ok(json!({
        "rank": b.rank(),
        "matrix": t.matrix,
        "diagonal": t.diagonal(),
        "determinant": cert.determinant.to_string(),
        "certificate": {
            "index": cert.index.to_string(),
            "semisimple": cert.semisimple,
            "pairs_checked": cert.pairs_checked,
            "samples_checked": cert.samples_checked,
            "seed": config.seed,
        },
    }))
}

fn distinguishability_json(m: &FiniteMonoid, g: &GreenData, d: &DistinguishabilityReport) -> Value {
    let per: Vec<Value> = d
        .per_j_class
        .iter()
        .map(|j| {
            let pairs: Vec<[String; 2]> = j.indistinguishable.iter().map(|&(a, b)| [m.label(a), m.label(b)]).collect();
            json!({
                "j_class": j_class_json(m, g, j.j_class),
                "designated_idempotent": m.label(j.designated_idempotent),
                "size": j.size,
                "l_classes": j.l_classes,
                "r_classes": j.r_classes,
                "distinguishable": j.is_distinguishable(),
                "indistinguishable_l_pairs": pairs,
            })
        })
        .collect();
    json!({
        "per_j_class": per,
        "distinguishable": d.distinguishable,
        "er": d.er,
        "commuting_idempotents": d.commuting_idempotents,
    })
}

pub fn structure(loaded: &Loaded, config: &RunConfig) -> Result<Value, CliError> {
    let b = basis(loaded, config)?;
    let m = b.monoid();
    let g = b.green();
    let s = structure_report(&b)?;
    let witnesses: Vec<Value> = s
        .distinguishability
        .per_j_class
        .iter()
        .filter(|j| !j.is_distinguishable())
        .map(|j| json!({ "j_class": j.j_class, "designated_idempotent": m.label(j.designated_idempotent) }))
        .collect();
    let verdict = if s.distinguishability.distinguishable { "distinguishable" } else { "not distinguishable" };
    Ok(json!({
        "verdict": verdict,
        "witnesses": witnesses,
        "distinguishability": distinguishability_json(m, g, &s.distinguishability),
        "rank": s.rank,
        "product_rank": s.product_rank,
        "isomorphic": s.isomorphic,
        "phi_matrix": s.full_matrix,
        "subgroup_columns": s.subgroup_columns,
        "subgroup_matrix": s.subgroup_matrix,
        "unitriangular": s.unitriangular,
        "non_subgroup_classes": b.non_subgroup_classes(),
        "multiplicative_pairs": s.multiplicative_pairs,
    }))
}

pub fn catalog_list() -> Value {
    let entries: Vec<Value> = ENTRIES
        .iter()
        .map(|e| json!({ "name": e.name, "params": e.params, "description": e.description }))
        .collect();
    json!({ "entries": entries })
}
