use std::cmp::Reverse;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{build_plane_graph, diagram_connected, trace_faces, TopologyError};
use crate::diagram::{Crossing, LinkDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutKind {
    EdgePair,
    SingleEdge,
}

/// A simple closed curve meeting the diagram in two points, with at least
/// one crossing on each side.
///
/// `side_crossings.0` counts the side holding the tail crossing of
/// `arcs[0]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CutWitness {
    pub kind: CutKind,
    pub arcs: Vec<usize>,
    pub faces: [usize; 2],
    pub side_crossings: (usize, usize),
}

/// Result of exhausting all 2-point cut curves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutSearch {
    /// Dual 2-cycles (distinct arc pairs on a common face pair) plus dual
    /// loops examined.
    pub candidates: usize,
    /// Candidates with crossings on both sides.
    pub witnesses: usize,
    pub best: Option<CutWitness>,
}

fn side_counts(graph: &super::PlaneGraph, arcs: &[usize]) -> (usize, usize) {
    let start = graph.endpoints(arcs[0]).0.crossing;
    let reach = graph.reachable_without(start, arcs);
    let near = reach.iter().filter(|&&r| r).count();
    (near, graph.vertex_count() - near)
}

/// Enumerates every closed walk of length 1 or 2 in the dual graph that uses
/// distinct arcs, and keeps the most balanced witness.
///
/// Walks that cross one arc twice always cut off a crossing-free piece of
/// that arc and are not candidates.
pub fn search_prime_cuts(d: &LinkDiagram) -> Result<CutSearch, TopologyError> {
    if d.crossing_count() == 0 {
        return Err(TopologyError::NoCrossings);
    }
    if !diagram_connected(d) {
        return Err(TopologyError::Disconnected);
    }
    let graph = build_plane_graph(d);
    let faces = trace_faces(&graph);

    let mut by_faces: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for arc in 0..d.arc_count() {
        let (l, r) = faces.faces_of_arc(arc);
        by_faces.entry((l.min(r), l.max(r))).or_default().push(arc);
    }

    let mut candidates = 0;
    let mut witnesses = 0;
    let mut best: Option<CutWitness> = None;
    let key = |w: &CutWitness| {
        (
            Reverse(w.side_crossings.0.min(w.side_crossings.1)),
            w.arcs.clone(),
        )
    };
    let mut consider = |w: CutWitness| {
        if w.side_crossings.0 == 0 || w.side_crossings.1 == 0 {
            return;
        }
        witnesses += 1;
        if best.as_ref().is_none_or(|b| key(&w) < key(b)) {
            best = Some(w);
        }
    };
    for (&(f, g), arcs) in &by_faces {
        if f == g {
            for &a in arcs {
                candidates += 1;
                consider(CutWitness {
                    kind: CutKind::SingleEdge,
                    arcs: vec![a],
                    faces: [f, g],
                    side_crossings: side_counts(&graph, &[a]),
                });
            }
        }
        for (i, &a) in arcs.iter().enumerate() {
            for &b in &arcs[i + 1..] {
                candidates += 1;
                consider(CutWitness {
                    kind: CutKind::EdgePair,
                    arcs: vec![a, b],
                    faces: [f, g],
                    side_crossings: side_counts(&graph, &[a, b]),
                });
            }
        }
    }
    Ok(CutSearch {
        candidates,
        witnesses,
        best,
    })
}

/// A 2-point cut curve with crossings on both sides, if one exists.
/// `None` means the diagram is prime.
pub fn find_prime_cut(d: &LinkDiagram) -> Result<Option<CutWitness>, TopologyError> {
    Ok(search_prime_cuts(d)?.best)
}

/// Connected, at least one crossing, no free loops, and no cut witness.
/// The crossing-free diagram is never prime.
pub fn is_prime_diagram(d: &LinkDiagram) -> bool {
    d.crossing_count() > 0
        && d.free_loops() == 0
        && diagram_connected(d)
        && matches!(find_prime_cut(d), Ok(None))
}

/// Checks that `w` describes a genuine cut curve of `d`: its arcs share the
/// two faces it names and its side counts are right.
pub fn verify_cut_witness(d: &LinkDiagram, w: &CutWitness) -> bool {
    let graph = build_plane_graph(d);
    let faces = trace_faces(&graph);
    let expected_len = match w.kind {
        CutKind::EdgePair => 2,
        CutKind::SingleEdge => 1,
    };
    if w.arcs.len() != expected_len || w.arcs.iter().any(|&a| a >= d.arc_count()) {
        return false;
    }
    if w.kind == CutKind::EdgePair && w.arcs[0] == w.arcs[1] {
        return false;
    }
    let pair = (w.faces[0].min(w.faces[1]), w.faces[0].max(w.faces[1]));
    if w.kind == CutKind::SingleEdge && pair.0 != pair.1 {
        return false;
    }
    let shares = w.arcs.iter().all(|&a| {
        let (l, r) = faces.faces_of_arc(a);
        (l.min(r), l.max(r)) == pair
    });
    shares
        && w.side_crossings.0 >= 1
        && w.side_crossings.1 >= 1
        && side_counts(&graph, &w.arcs) == w.side_crossings
}

/// Splits a connected sum along an edge-pair witness, closing each side
/// with a new arc. The first diagram is the side counted by
/// `side_crossings.0`.
pub fn split_along(
    d: &LinkDiagram,
    w: &CutWitness,
) -> Result<(LinkDiagram, LinkDiagram), TopologyError> {
    if w.kind != CutKind::EdgePair || !verify_cut_witness(d, w) {
        return Err(TopologyError::InvalidWitness);
    }
    let graph = build_plane_graph(d);
    let (out, inn) = (w.arcs[0], w.arcs[1]);
    let near = graph.reachable_without(d.arcs()[out].tail.crossing, &w.arcs);
    let out_arc = d.arcs()[out];
    let in_arc = d.arcs()[inn];
    if !near[in_arc.head.crossing] || near[out_arc.head.crossing] || near[in_arc.tail.crossing] {
        return Err(TopologyError::InvalidWitness);
    }
    let mut crossings: Vec<Crossing> = d.crossings().to_vec();
    crossings[in_arc.head.crossing].ends[in_arc.head.position] = out;
    crossings[out_arc.head.crossing].ends[out_arc.head.position] = inn;

    let side = |keep: bool| -> LinkDiagram {
        let kept: Vec<Crossing> = crossings
            .iter()
            .enumerate()
            .filter(|(i, _)| near[*i] == keep)
            .map(|(_, x)| *x)
            .collect();
        let mut dense = vec![usize::MAX; d.arc_count()];
        let mut next = 0;
        for x in &kept {
            for &a in &x.ends {
                if dense[a] == usize::MAX {
                    dense[a] = next;
                    next += 1;
                }
            }
        }
        let kept = kept
            .into_iter()
            .map(|x| Crossing::new(x.ends.map(|a| dense[a]), x.sign))
            .collect();
        LinkDiagram::from_crossings(kept, 0).expect("each side of a cut is a valid diagram")
    };
    Ok((side(true), side(false)))
}
