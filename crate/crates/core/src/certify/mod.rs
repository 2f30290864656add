//! Certificates for splitness and primeness of links given by positive
//! diagrams.
//!
//! Two rules are applied, each only in the direction it is valid:
//!
//! * a connected positive diagram presents a non-split link;
//! * a connected, prime, positive diagram of a non-trivial link presents a
//!   prime link.
//!
//! A disconnected diagram exhibits a splitting sphere directly. Nothing is
//! ever concluded from the failure of a hypothesis: such verdicts stay
//! inconclusive.

mod validate;

pub use validate::{validate_certificate, ValidationError};

use serde::{Deserialize, Serialize};

use crate::bridges::bridge_number;
use crate::diagram::LinkDiagram;
use crate::invariants::{
    is_positive, linking_graph_connected, linking_matrix, seifert_circles, writhe, LinkingMatrix,
    PositivityVerdict,
};
use crate::topology::{build_plane_graph, diagram_connected, search_prime_cuts, CutWitness};

pub const SCHEMA_VERSION: u32 = 1;

pub const NONSPLIT_RULE: &str = "connected-positive-diagram";
pub const SPLIT_RULE: &str = "disconnected-diagram";
pub const PRIME_RULE: &str = "connected-prime-positive-nontrivial";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Splitness {
    SplitCertified,
    NonsplitCertified,
    Inconclusive,
}

/// There is deliberately no non-prime verdict: a composite-looking diagram
/// says nothing about the link.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Primeness {
    PrimeCertified,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NontrivialStatus {
    Certified,
    NotCertified,
    AssertedByFlag,
}

/// Canonical-surface data for the minimal-genus criterion: the canonical
/// surface of a positive diagram has maximal Euler characteristic, and the
/// `k`-component unlink bounds `k` disks, so `χ < k` rules out the unlink.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GenusEvidence {
    pub seifert_circles: usize,
    pub crossings: usize,
    pub components: usize,
    pub euler_characteristic: i64,
    pub fires: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkingPair {
    pub components: [usize; 2],
    pub linking_number: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NontrivialEvidence {
    /// Present when the diagram is connected and positive.
    pub genus: Option<GenusEvidence>,
    pub linking_pair: Option<LinkingPair>,
    pub assumed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Nontriviality {
    pub status: NontrivialStatus,
    pub evidence: NontrivialEvidence,
}

impl Nontriviality {
    pub fn holds(&self) -> bool {
        self.status != NontrivialStatus::NotCertified
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CutSearchRecord {
    pub candidates: usize,
    pub witnesses: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagramPrimeness {
    pub prime: bool,
    pub witness: Option<CutWitness>,
    /// Absent when the search does not apply (no crossings or a
    /// disconnected diagram).
    pub search: Option<CutSearchRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantSummary {
    pub crossings: usize,
    pub components: usize,
    pub free_loops: usize,
    /// Component reversals applied before computing the oriented values
    /// below: the positivity witness when there is one.
    pub orientation: Vec<bool>,
    pub writhe: i64,
    pub linking_matrix: LinkingMatrix,
    pub seifert_circles: usize,
    pub euler_characteristic: Option<i64>,
    pub genus: Option<i64>,
    pub bridge_number: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SplitEvidence {
    NonsplitCertified {
        rule: String,
        orientation: Vec<bool>,
        /// Spanning tree of component pairs with nonzero linking number,
        /// present for links whose linking graph is connected.
        linking_tree: Option<Vec<LinkingPair>>,
    },
    SplitCertified {
        rule: String,
        /// Connected pieces of the diagram, free loops included.
        pieces: usize,
    },
    Inconclusive {
        missing: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum PrimeEvidence {
    PrimeCertified {
        rule: String,
        orientation: Vec<bool>,
        cut_search: CutSearchRecord,
        nontrivial: NontrivialStatus,
    },
    Inconclusive {
        missing: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Evidence {
    pub splitness: SplitEvidence,
    pub primeness: PrimeEvidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub positivity: PositivityVerdict,
    pub connectivity: bool,
    pub diagram_prime: DiagramPrimeness,
    pub nontrivial: Nontriviality,
    pub splitness: Splitness,
    pub primeness: Primeness,
    pub invariants: InvariantSummary,
    pub evidence: Evidence,
    pub schema: u32,
}

fn oriented(d: &LinkDiagram, positivity: &PositivityVerdict) -> (LinkDiagram, Vec<bool>) {
    match &positivity.witness_orientation {
        Some(flips) if flips.iter().any(|&f| f) => {
            (d.with_reversed_components(flips), flips.clone())
        }
        Some(flips) => (d.clone(), flips.clone()),
        None => (d.clone(), vec![false; d.component_count()]),
    }
}

/// Nontriviality from the minimal-genus criterion for positive diagrams, a
/// nonzero linking number, or the caller's assertion, in that order.
pub fn check_nontrivial(
    d: &LinkDiagram,
    positivity: &PositivityVerdict,
    assume_flag: bool,
) -> Nontriviality {
    let (od, _) = oriented(d, positivity);
    let genus = (positivity.positive && diagram_connected(d)).then(|| {
        let s = seifert_circles(&od);
        let chi = s as i64 - od.crossing_count() as i64;
        let k = od.component_count();
        GenusEvidence {
            seifert_circles: s,
            crossings: od.crossing_count(),
            components: k,
            euler_characteristic: chi,
            fires: chi < k as i64,
        }
    });
    let linking_pair = linking_matrix(&od, None)
        .nonzero_pair()
        .map(|(i, j, lk)| LinkingPair {
            components: [i, j],
            linking_number: lk,
        });
    let criterion = genus.as_ref().is_some_and(|g| g.fires) || linking_pair.is_some();
    let status = if criterion {
        NontrivialStatus::Certified
    } else if assume_flag {
        NontrivialStatus::AssertedByFlag
    } else {
        NontrivialStatus::NotCertified
    };
    Nontriviality {
        status,
        evidence: NontrivialEvidence {
            genus,
            linking_pair,
            assumed: assume_flag,
        },
    }
}

/// Spanning tree of the nonzero-linking graph, if it is connected and has
/// at least two vertices.
pub fn linking_tree(m: &LinkingMatrix) -> Option<Vec<LinkingPair>> {
    let k = m.size();
    if k < 2 || !linking_graph_connected(m) {
        return None;
    }
    let mut seen = vec![false; k];
    seen[0] = true;
    let mut tree = Vec::new();
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for (j, seen) in seen.iter_mut().enumerate() {
            if !*seen && m.get(i, j) != 0 {
                *seen = true;
                tree.push(LinkingPair {
                    components: [i, j],
                    linking_number: m.get(i, j),
                });
                queue.push_back(j);
            }
        }
    }
    Some(tree)
}

fn diagram_pieces(d: &LinkDiagram) -> usize {
    let graph_pieces = if d.crossing_count() == 0 {
        0
    } else {
        build_plane_graph(d).components().1
    };
    graph_pieces + d.free_loops()
}

fn diagram_primeness(d: &LinkDiagram, connected: bool) -> DiagramPrimeness {
    if !connected || d.crossing_count() == 0 {
        return DiagramPrimeness {
            prime: false,
            witness: None,
            search: None,
        };
    }
    let search = search_prime_cuts(d).expect("connected with crossings");
    DiagramPrimeness {
        prime: search.best.is_none(),
        witness: search.best,
        search: Some(CutSearchRecord {
            candidates: search.candidates,
            witnesses: search.witnesses,
        }),
    }
}

/// Invariants under the positivity witness orientation when there is one.
pub fn invariant_summary(d: &LinkDiagram, positivity: &PositivityVerdict) -> InvariantSummary {
    let (od, orientation) = oriented(d, positivity);
    let connected = diagram_connected(&od);
    let s = seifert_circles(&od);
    let chi = connected.then(|| s as i64 - od.crossing_count() as i64);
    InvariantSummary {
        crossings: od.crossing_count(),
        components: od.component_count(),
        free_loops: od.free_loops(),
        orientation,
        writhe: writhe(&od),
        linking_matrix: linking_matrix(&od, None),
        seifert_circles: s,
        euler_characteristic: chi,
        genus: chi
            .filter(|_| od.component_count() == 1)
            .map(|c| (1 - c) / 2),
        bridge_number: bridge_number(&od).ok(),
    }
}

/// Invariants of the diagram with its orientation exactly as given.
pub fn invariant_summary_as_given(d: &LinkDiagram) -> InvariantSummary {
    let as_given = PositivityVerdict {
        positive: false,
        witness_orientation: None,
        obstruction: None,
    };
    invariant_summary(d, &as_given)
}

/// Assembles all verdicts with their evidence.
pub fn certify(d: &LinkDiagram, assume_nontrivial: bool) -> Certificate {
    let positivity = is_positive(d);
    let connectivity = diagram_connected(d);
    let diagram_prime = diagram_primeness(d, connectivity);
    let nontrivial = check_nontrivial(d, &positivity, assume_nontrivial);
    let invariants = invariant_summary(d, &positivity);

    let (splitness, split_evidence) = if connectivity && positivity.positive {
        (
            Splitness::NonsplitCertified,
            SplitEvidence::NonsplitCertified {
                rule: NONSPLIT_RULE.into(),
                orientation: invariants.orientation.clone(),
                linking_tree: linking_tree(&invariants.linking_matrix),
            },
        )
    } else if !connectivity {
        (
            Splitness::SplitCertified,
            SplitEvidence::SplitCertified {
                rule: SPLIT_RULE.into(),
                pieces: diagram_pieces(d),
            },
        )
    } else {
        (
            Splitness::Inconclusive,
            SplitEvidence::Inconclusive {
                missing: vec!["positivity".into()],
            },
        )
    };

    let mut missing = Vec::new();
    if !positivity.positive {
        missing.push("positivity".to_string());
    }
    if !connectivity {
        missing.push("connectivity".to_string());
    }
    if !diagram_prime.prime {
        missing.push("diagram-prime".to_string());
    }
    if !nontrivial.holds() {
        missing.push("nontriviality".to_string());
    }
    let (primeness, prime_evidence) = match (&diagram_prime.search, missing.is_empty()) {
        (Some(search), true) => (
            Primeness::PrimeCertified,
            PrimeEvidence::PrimeCertified {
                rule: PRIME_RULE.into(),
                orientation: invariants.orientation.clone(),
                cut_search: *search,
                nontrivial: nontrivial.status,
            },
        ),
        _ => (
            Primeness::Inconclusive,
            PrimeEvidence::Inconclusive { missing },
        ),
    };

    Certificate {
        positivity,
        connectivity,
        diagram_prime,
        nontrivial,
        splitness,
        primeness,
        invariants,
        evidence: Evidence {
            splitness: split_evidence,
            primeness: prime_evidence,
        },
        schema: SCHEMA_VERSION,
    }
}
