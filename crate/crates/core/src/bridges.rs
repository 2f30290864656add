//! Bridge decomposition of a fixed diagram: each component is cut into
//! alternating maximal runs of over-passages (over bridges) and
//! under-passages (under bridges).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::LinkDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("diagram has no crossings, so it has no bridges")]
    NoCrossings,
}

/// A maximal run along one component. `arcs` lists the arcs it touches in
/// traversal order; its first and last arcs are shared with the
/// neighbouring bridges of the opposite kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bridge {
    pub component: usize,
    pub arcs: Vec<usize>,
    pub crossings: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BridgePresentation {
    pub over_bridges: Vec<Bridge>,
    pub under_bridges: Vec<Bridge>,
    /// Number of over bridges.
    pub n: usize,
    /// Components without crossings; they carry no bridges.
    pub crossing_free_components: usize,
}

/// Splits every crossing-bearing component into maximal over and under
/// runs.
///
/// A component that only ever passes over (or under) gets a single bridge
/// holding all its passages and an empty bridge of the other kind, so over
/// and under counts always agree per component.
pub fn bridge_decomposition(d: &LinkDiagram) -> Result<BridgePresentation, BridgeError> {
    if d.crossing_count() == 0 {
        return Err(BridgeError::NoCrossings);
    }
    let mut over_bridges = Vec::new();
    let mut under_bridges = Vec::new();
    for (component, walk) in d.crossing_components().iter().enumerate() {
        let m = walk.len();
        // passage j happens at the head of walk[j]
        let over: Vec<bool> = walk
            .iter()
            .map(|&a| d.arcs()[a].head.position % 2 == 1)
            .collect();
        let crossing_at = |j: usize| d.arcs()[walk[j % m]].head.crossing;
        let start = (0..m).find(|&j| over[j] != over[(j + m - 1) % m]);
        let Some(start) = start else {
            let full = Bridge {
                component,
                arcs: (0..=m).map(|j| walk[j % m]).collect(),
                crossings: (0..m).map(crossing_at).collect(),
            };
            let empty = Bridge {
                component,
                arcs: vec![walk[0]],
                crossings: Vec::new(),
            };
            if over[0] {
                over_bridges.push(full);
                under_bridges.push(empty);
            } else {
                over_bridges.push(empty);
                under_bridges.push(full);
            }
            continue;
        };
        let mut j = start;
        while j < start + m {
            let kind = over[j % m];
            let mut k = j;
            while k + 1 < start + m && over[(k + 1) % m] == kind {
                k += 1;
            }
            let bridge = Bridge {
                component,
                arcs: (j..=k + 1).map(|i| walk[i % m]).collect(),
                crossings: (j..=k).map(crossing_at).collect(),
            };
            if kind {
                over_bridges.push(bridge);
            } else {
                under_bridges.push(bridge);
            }
            j = k + 1;
        }
    }
    Ok(BridgePresentation {
        n: over_bridges.len(),
        over_bridges,
        under_bridges,
        crossing_free_components: d.free_loops(),
    })
}

/// Number of over bridges in the maximal-run decomposition, which is the
/// least over all bridge presentations of this diagram.
pub fn bridge_number(d: &LinkDiagram) -> Result<usize, BridgeError> {
    bridge_decomposition(d).map(|b| b.n)
}

/// Every arc runs from an over-passage to an under-passage or back.
pub fn is_alternating(d: &LinkDiagram) -> bool {
    d.arcs()
        .iter()
        .all(|a| a.tail.position % 2 != a.head.position % 2)
}
