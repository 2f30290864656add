use thiserror::Error;

use super::{
    certify, diagram_pieces, invariant_summary, linking_tree, Certificate, DiagramPrimeness,
    NontrivialStatus, PrimeEvidence, Primeness, SplitEvidence, Splitness, NONSPLIT_RULE,
    PRIME_RULE, SCHEMA_VERSION, SPLIT_RULE,
};
use crate::diagram::LinkDiagram;
use crate::invariants::{linking_graph_connected, seifert_circles, verify_obstruction};
use crate::topology::{diagram_connected, search_prime_cuts, verify_cut_witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{field}: {reason}")]
pub struct ValidationError {
    pub field: &'static str,
    pub reason: String,
}

fn reject(field: &'static str, reason: impl Into<String>) -> ValidationError {
    ValidationError {
        field,
        reason: reason.into(),
    }
}

fn ensure(cond: bool, field: &'static str, reason: &str) -> Result<(), ValidationError> {
    if cond {
        Ok(())
    } else {
        Err(reject(field, reason))
    }
}

/// Replays the evidence of `cert` against `d`.
///
/// Every hypothesis is re-derived from the diagram, every witness is
/// checked on its own terms, and each verdict must follow from the
/// recorded hypotheses. Finally the whole certificate must coincide with a
/// fresh one, so no field can drift from what the diagram supports.
pub fn validate_certificate(d: &LinkDiagram, cert: &Certificate) -> Result<(), ValidationError> {
    ensure(
        cert.schema == SCHEMA_VERSION,
        "schema",
        "unknown schema version",
    )?;
    let k = d.component_count();

    // positivity
    let p = &cert.positivity;
    match (p.positive, &p.witness_orientation, &p.obstruction) {
        (true, Some(flips), None) => {
            ensure(
                flips.len() == k,
                "positivity",
                "orientation has wrong length",
            )?;
            let od = d.with_reversed_components(flips);
            ensure(
                od.crossings().iter().all(|x| x.sign.is_positive()),
                "positivity",
                "witness orientation leaves a negative crossing",
            )?;
        }
        (false, None, Some(ob)) => {
            ensure(
                verify_obstruction(d, ob),
                "positivity",
                "obstruction does not hold",
            )?;
        }
        _ => return Err(reject("positivity", "verdict and evidence disagree")),
    }

    let connected = diagram_connected(d);
    ensure(
        cert.connectivity == connected,
        "connectivity",
        "does not match the diagram",
    )?;

    check_diagram_prime(d, &cert.diagram_prime, connected)?;
    check_nontrivial_evidence(d, cert)?;

    ensure(
        cert.invariants == invariant_summary(d, &cert.positivity),
        "invariants",
        "do not match recomputation",
    )?;

    // splitness follows from the recorded hypotheses
    let expected_split = if cert.connectivity && cert.positivity.positive {
        Splitness::NonsplitCertified
    } else if !cert.connectivity {
        Splitness::SplitCertified
    } else {
        Splitness::Inconclusive
    };
    ensure(
        cert.splitness == expected_split,
        "splitness",
        "not implied by hypotheses",
    )?;
    match (&cert.evidence.splitness, cert.splitness) {
        (
            SplitEvidence::NonsplitCertified {
                rule,
                orientation,
                linking_tree: tree,
            },
            Splitness::NonsplitCertified,
        ) => {
            ensure(rule == NONSPLIT_RULE, "evidence.splitness", "wrong rule")?;
            ensure(
                Some(orientation) == p.witness_orientation.as_ref(),
                "evidence.splitness",
                "orientation is not the positivity witness",
            )?;
            let m = &cert.invariants.linking_matrix;
            ensure(
                *tree == linking_tree(m),
                "evidence.splitness",
                "linking tree does not match",
            )?;
            if let Some(tree) = tree {
                ensure(
                    tree.len() + 1 == k
                        && tree.iter().all(|e| {
                            e.linking_number != 0
                                && m.get(e.components[0], e.components[1]) == e.linking_number
                        })
                        && linking_graph_connected(m),
                    "evidence.splitness",
                    "linking tree is not a spanning tree of nonzero linking numbers",
                )?;
            }
        }
        (SplitEvidence::SplitCertified { rule, pieces }, Splitness::SplitCertified) => {
            ensure(rule == SPLIT_RULE, "evidence.splitness", "wrong rule")?;
            ensure(
                *pieces >= 2 && *pieces == diagram_pieces(d),
                "evidence.splitness",
                "diagram piece count is wrong",
            )?;
        }
        (SplitEvidence::Inconclusive { .. }, Splitness::Inconclusive) => {}
        _ => return Err(reject("evidence.splitness", "does not match verdict")),
    }

    // primeness follows from the recorded hypotheses
    let all_hold = cert.positivity.positive
        && cert.connectivity
        && cert.diagram_prime.prime
        && cert.nontrivial.holds();
    let expected_prime = if all_hold {
        Primeness::PrimeCertified
    } else {
        Primeness::Inconclusive
    };
    ensure(
        cert.primeness == expected_prime,
        "primeness",
        "not implied by hypotheses",
    )?;
    match (&cert.evidence.primeness, cert.primeness) {
        (
            PrimeEvidence::PrimeCertified {
                rule,
                orientation,
                cut_search,
                nontrivial,
            },
            Primeness::PrimeCertified,
        ) => {
            ensure(rule == PRIME_RULE, "evidence.primeness", "wrong rule")?;
            ensure(
                Some(orientation) == p.witness_orientation.as_ref(),
                "evidence.primeness",
                "orientation is not the positivity witness",
            )?;
            ensure(
                Some(cut_search) == cert.diagram_prime.search.as_ref() && cut_search.witnesses == 0,
                "evidence.primeness",
                "cut search record does not show exhaustion",
            )?;
            ensure(
                *nontrivial == cert.nontrivial.status,
                "evidence.primeness",
                "nontriviality status differs",
            )?;
        }
        (PrimeEvidence::Inconclusive { .. }, Primeness::Inconclusive) => {}
        _ => return Err(reject("evidence.primeness", "does not match verdict")),
    }

    let assumed = cert.nontrivial.evidence.assumed;
    ensure(
        *cert == certify(d, assumed),
        "certificate",
        "differs from a replay on the same diagram",
    )
}

fn check_diagram_prime(
    d: &LinkDiagram,
    dp: &DiagramPrimeness,
    connected: bool,
) -> Result<(), ValidationError> {
    let applicable = connected && d.crossing_count() > 0;
    if !applicable {
        return ensure(
            !dp.prime && dp.witness.is_none() && dp.search.is_none(),
            "diagram_prime",
            "cut search does not apply to this diagram",
        );
    }
    let search = search_prime_cuts(d).map_err(|e| reject("diagram_prime", e.to_string()))?;
    let record = dp
        .search
        .ok_or_else(|| reject("diagram_prime", "missing cut search record"))?;
    ensure(
        record.candidates == search.candidates && record.witnesses == search.witnesses,
        "diagram_prime",
        "cut search record does not replay",
    )?;
    match (&dp.witness, dp.prime) {
        (None, true) => ensure(
            record.witnesses == 0 && d.free_loops() == 0,
            "diagram_prime",
            "prime verdict with witnesses on record",
        ),
        (Some(w), false) => ensure(
            verify_cut_witness(d, w) && search.best.as_ref() == Some(w),
            "diagram_prime",
            "cut witness does not hold",
        ),
        _ => Err(reject("diagram_prime", "verdict and witness disagree")),
    }
}

fn check_nontrivial_evidence(d: &LinkDiagram, cert: &Certificate) -> Result<(), ValidationError> {
    let nt = &cert.nontrivial;
    let ev = &nt.evidence;
    let od = match &cert.positivity.witness_orientation {
        Some(flips) => d.with_reversed_components(flips),
        None => d.clone(),
    };
    match &ev.genus {
        Some(g) => {
            ensure(
                cert.positivity.positive && diagram_connected(d),
                "nontrivial",
                "genus criterion needs a connected positive diagram",
            )?;
            let s = seifert_circles(&od);
            let chi = s as i64 - od.crossing_count() as i64;
            ensure(
                g.seifert_circles == s
                    && g.crossings == od.crossing_count()
                    && g.components == od.component_count()
                    && g.euler_characteristic == chi
                    && g.fires == (chi < od.component_count() as i64),
                "nontrivial",
                "genus evidence does not replay",
            )?;
        }
        None => ensure(
            !(cert.positivity.positive && diagram_connected(d)),
            "nontrivial",
            "genus evidence missing",
        )?,
    }
    if let Some(pair) = &ev.linking_pair {
        let [i, j] = pair.components;
        ensure(
            i < j
                && j < d.component_count()
                && pair.linking_number != 0
                && cert.invariants.linking_matrix.get(i, j) == pair.linking_number,
            "nontrivial",
            "linking pair does not replay",
        )?;
    }
    let criterion = ev.genus.as_ref().is_some_and(|g| g.fires) || ev.linking_pair.is_some();
    let expected = if criterion {
        NontrivialStatus::Certified
    } else if ev.assumed {
        NontrivialStatus::AssertedByFlag
    } else {
        NontrivialStatus::NotCertified
    };
    ensure(
        nt.status == expected,
        "nontrivial",
        "status not implied by evidence",
    )
}
