//! Oriented link diagrams and the text formats they are read from.
//!
//! A [`LinkDiagram`] stores its crossings with the four incident arc-ends in
//! counterclockwise order, starting from the incoming under-strand. Arcs run
//! between consecutive crossing passages and are indexed densely from zero.
//! Crossing-free components are not representable by arcs and are carried
//! separately as `free_loops`.

mod braid;
mod error;
mod gauss;
mod lex;
mod ops;
mod pd;

pub use braid::{braid_closure, parse_braid, BraidWord};
pub use error::DiagramError;
pub use gauss::{gauss_to_diagram, parse_gauss, GaussCode, GaussToken};
pub use pd::{parse_pd, pd_to_diagram, PdCode};

use serde::{Deserialize, Serialize};

use crate::topology::{build_plane_graph, trace_faces};

/// Crossing sign under the right-hand convention: `+1` when the under-strand
/// direction, turned a quarter turn counterclockwise, points along the
/// over-strand direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    fn from_flip(sign: Sign, flip: bool) -> Sign {
        if flip {
            sign.flipped()
        } else {
            sign
        }
    }
}

/// One of the four arc-ends at a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct End {
    pub crossing: usize,
    /// Counterclockwise position, 0 being the incoming under-strand.
    pub position: usize,
}

/// A crossing: arcs at positions 0..4 counterclockwise from the incoming
/// under-strand. Position 2 is the outgoing under-strand; the over-strand
/// enters at position 1 when the sign is positive and at position 3 otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub ends: [usize; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn new(ends: [usize; 4], sign: Sign) -> Self {
        Crossing { ends, sign }
    }

    pub fn over_in(&self) -> usize {
        match self.sign {
            Sign::Positive => 1,
            Sign::Negative => 3,
        }
    }

    pub fn over_out(&self) -> usize {
        (self.over_in() + 2) % 4
    }

    pub fn is_incoming(&self, position: usize) -> bool {
        position == 0 || position == self.over_in()
    }

    pub fn is_over(position: usize) -> bool {
        position % 2 == 1
    }

    pub fn under_in_arc(&self) -> usize {
        self.ends[0]
    }

    pub fn under_out_arc(&self) -> usize {
        self.ends[2]
    }

    pub fn over_in_arc(&self) -> usize {
        self.ends[self.over_in()]
    }

    pub fn over_out_arc(&self) -> usize {
        self.ends[self.over_out()]
    }
}

/// An arc between two crossing passages, oriented tail to head.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: End,
    pub head: End,
    pub component: usize,
}

/// An oriented link diagram on the 2-sphere.
///
/// Components that pass through at least one crossing are numbered first,
/// ordered by their smallest arc index; free loops take the indices after
/// them. Values are immutable once built; every transformation returns a new
/// diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    arcs: Vec<Arc>,
    components: Vec<Vec<usize>>,
    free_loops: usize,
}

impl LinkDiagram {
    /// Builds a diagram from crossings whose arcs are dense indices
    /// `0..arc_count`.
    ///
    /// Every arc must occur exactly twice, once entering and once leaving a
    /// crossing, and the resulting rotation system must embed in the sphere.
    pub fn from_crossings(
        crossings: Vec<Crossing>,
        free_loops: usize,
    ) -> Result<Self, DiagramError> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(DiagramError::EmptyDiagram);
        }
        let arc_count = 2 * crossings.len();
        let mut tails: Vec<Option<End>> = vec![None; arc_count];
        let mut heads: Vec<Option<End>> = vec![None; arc_count];
        for (ci, x) in crossings.iter().enumerate() {
            for (position, &arc) in x.ends.iter().enumerate() {
                if arc >= arc_count {
                    return Err(DiagramError::ArcOutOfRange { arc, arc_count });
                }
                let end = End {
                    crossing: ci,
                    position,
                };
                let slot = if x.is_incoming(position) {
                    &mut heads[arc]
                } else {
                    &mut tails[arc]
                };
                if slot.is_some() {
                    return Err(DiagramError::InconsistentOrientation {
                        label: arc as u64 + 1,
                    });
                }
                *slot = Some(end);
            }
        }
        // Arc count is exactly 2c and each crossing fills four slots, so a
        // missing slot implies a duplicate was rejected above.
        let mut arcs: Vec<Arc> = tails
            .iter()
            .zip(&heads)
            .map(|(t, h)| Arc {
                tail: t.expect("every arc has a tail"),
                head: h.expect("every arc has a head"),
                component: usize::MAX,
            })
            .collect();

        let mut components = Vec::new();
        for start in 0..arc_count {
            if arcs[start].component != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut walk = Vec::new();
            let mut arc = start;
            loop {
                arcs[arc].component = id;
                walk.push(arc);
                let head = arcs[arc].head;
                arc = crossings[head.crossing].ends[(head.position + 2) % 4];
                if arc == start {
                    break;
                }
            }
            components.push(walk);
        }

        let diagram = LinkDiagram {
            crossings,
            arcs,
            components,
            free_loops,
        };
        diagram.check_planar()?;
        Ok(diagram)
    }

    fn check_planar(&self) -> Result<(), DiagramError> {
        if self.crossings.is_empty() {
            return Ok(());
        }
        let graph = build_plane_graph(self);
        let faces = trace_faces(&graph);
        for (component, euler) in faces.euler_characteristics(&graph).into_iter().enumerate() {
            if euler != 2 {
                return Err(DiagramError::NonPlanar { component, euler });
            }
        }
        Ok(())
    }

    /// The 0-crossing diagram of the `n`-component unlink.
    pub fn unlink(n: usize) -> Result<Self, DiagramError> {
        Self::from_crossings(Vec::new(), n)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, index: usize) -> &Crossing {
        &self.crossings[index]
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Components passing through at least one crossing, each as its arcs in
    /// traversal order.
    pub fn crossing_components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Total number of link components, free loops included.
    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops
    }

    /// The arc following `arc` along its component.
    pub fn successor(&self, arc: usize) -> usize {
        let head = self.arcs[arc].head;
        self.crossings[head.crossing].ends[(head.position + 2) % 4]
    }

    /// Components of the under- and over-strand at a crossing.
    pub fn strand_components(&self, crossing: usize) -> (usize, usize) {
        let x = &self.crossings[crossing];
        (
            self.arcs[x.under_in_arc()].component,
            self.arcs[x.over_in_arc()].component,
        )
    }

    pub fn is_self_crossing(&self, crossing: usize) -> bool {
        let (u, o) = self.strand_components(crossing);
        u == o
    }

    /// The diagram with the orientation of every component reversed.
    pub fn reversed(&self) -> Self {
        self.with_reversed_components(&vec![true; self.component_count()])
    }

    /// Reverses the orientation of each component `i` with `flips[i]` set.
    /// Missing entries count as `false`.
    pub fn with_reversed_components(&self, flips: &[bool]) -> Self {
        let flip = |c: usize| flips.get(c).copied().unwrap_or(false);
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let (under, over) = self.strand_components(i);
                let ends = if flip(under) {
                    [x.ends[2], x.ends[3], x.ends[0], x.ends[1]]
                } else {
                    x.ends
                };
                Crossing::new(ends, Sign::from_flip(x.sign, flip(under) != flip(over)))
            })
            .collect();
        Self::from_crossings(crossings, self.free_loops)
            .expect("reversal preserves diagram validity")
    }

    /// Crossing sign of `crossing`.
    pub fn crossing_sign(&self, crossing: usize) -> Sign {
        self.crossings[crossing].sign
    }

    /// Emits a PD code with labels `arc + 1`, crossings in index order.
    pub fn to_pd(&self) -> PdCode {
        PdCode {
            crossings: self
                .crossings
                .iter()
                .map(|x| x.ends.map(|a| a as u64 + 1))
                .collect(),
            free_loops: self.free_loops,
        }
    }
}

/// Sign of crossing `c` in `d`.
pub fn crossing_sign(d: &LinkDiagram, c: usize) -> Sign {
    d.crossing_sign(c)
}
