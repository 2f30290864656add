//! Orientation-dependent diagram invariants: writhe, positivity, linking
//! numbers, Seifert circles and the canonical Euler characteristic.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::diagram::{LinkDiagram, Sign};
use crate::topology::{diagram_connected, TopologyError};

/// Sum of crossing signs.
pub fn writhe(d: &LinkDiagram) -> i64 {
    d.crossings().iter().map(|x| x.sign.value()).sum()
}

/// Reason no orientation of the components makes every crossing positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Obstruction {
    /// Self-crossing signs do not depend on orientation.
    NegativeSelfCrossing { crossing: usize },
    /// Inter-component crossings forming a closed walk in the component
    /// graph with an odd number of negative signs. Reversing a component
    /// flips an even number of them, so one always stays negative.
    OddCycle { crossings: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityVerdict {
    pub positive: bool,
    /// Per-component reversal flags making every crossing positive.
    pub witness_orientation: Option<Vec<bool>>,
    pub obstruction: Option<Obstruction>,
}

/// Decides whether some choice of component orientations makes every
/// crossing positive. Reversing all components is a symmetry, so the
/// smallest component of each linked cluster keeps its orientation.
///
/// Each inter-component crossing fixes whether its two components are
/// reversed together or apart; the constraints are solved by propagation
/// and a contradiction yields an odd cycle.
pub fn is_positive(d: &LinkDiagram) -> PositivityVerdict {
    let k = d.component_count();
    if let Some(crossing) = (0..d.crossing_count())
        .find(|&c| d.is_self_crossing(c) && !d.crossing_sign(c).is_positive())
    {
        return PositivityVerdict {
            positive: false,
            witness_orientation: None,
            obstruction: Some(Obstruction::NegativeSelfCrossing { crossing }),
        };
    }

    // adjacency: (neighbour component, crossing, must differ)
    let mut adjacent: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); k];
    for c in 0..d.crossing_count() {
        let (u, o) = d.strand_components(c);
        if u != o {
            let differ = d.crossing_sign(c) == Sign::Negative;
            adjacent[u].push((o, c, differ));
            adjacent[o].push((u, c, differ));
        }
    }

    let mut flip: Vec<Option<bool>> = vec![None; k];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; k];
    for root in 0..k {
        if flip[root].is_some() {
            continue;
        }
        flip[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let fv = flip[v].expect("visited");
            for &(w, c, differ) in &adjacent[v] {
                let want = fv != differ;
                match flip[w] {
                    None => {
                        flip[w] = Some(want);
                        parent[w] = Some((v, c));
                        queue.push_back(w);
                    }
                    Some(fw) if fw != want => {
                        let crossings = odd_cycle(&parent, v, w, c);
                        return PositivityVerdict {
                            positive: false,
                            witness_orientation: None,
                            obstruction: Some(Obstruction::OddCycle { crossings }),
                        };
                    }
                    Some(_) => {}
                }
            }
        }
    }
    PositivityVerdict {
        positive: true,
        witness_orientation: Some(flip.into_iter().map(|f| f.unwrap_or(false)).collect()),
        obstruction: None,
    }
}

fn odd_cycle(parent: &[Option<(usize, usize)>], a: usize, b: usize, closing: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut path = vec![(v, None)];
        while let Some((p, c)) = parent[v] {
            path.push((p, Some(c)));
            v = p;
        }
        path
    };
    let pa = path_to_root(a);
    let pb = path_to_root(b);
    let lca = pa
        .iter()
        .map(|(v, _)| *v)
        .find(|v| pb.iter().any(|(w, _)| w == v))
        .expect("same search tree");
    let mut crossings = Vec::new();
    for path in [&pa, &pb] {
        for (v, c) in path.iter() {
            if let Some(c) = c {
                crossings.push(*c);
            }
            if *v == lca {
                break;
            }
        }
    }
    crossings.push(closing);
    crossings
}

/// Checks that an obstruction really rules out every orientation.
pub fn verify_obstruction(d: &LinkDiagram, obstruction: &Obstruction) -> bool {
    match obstruction {
        Obstruction::NegativeSelfCrossing { crossing } => {
            *crossing < d.crossing_count()
                && d.is_self_crossing(*crossing)
                && !d.crossing_sign(*crossing).is_positive()
        }
        Obstruction::OddCycle { crossings } => {
            if crossings.is_empty() || crossings.iter().any(|&c| c >= d.crossing_count()) {
                return false;
            }
            let mut sorted = crossings.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != crossings.len() {
                return false;
            }
            let mut degree = vec![0usize; d.component_count()];
            let mut negatives = 0;
            for &c in crossings {
                let (u, o) = d.strand_components(c);
                if u == o {
                    return false;
                }
                degree[u] += 1;
                degree[o] += 1;
                if !d.crossing_sign(c).is_positive() {
                    negatives += 1;
                }
            }
            negatives % 2 == 1 && degree.iter().all(|deg| deg % 2 == 0)
        }
    }
}

/// Symmetric matrix of pairwise linking numbers with each component's
/// self-writhe on the diagonal. Free loops get zero rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinkingMatrix {
    entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn from_entries(entries: Vec<Vec<i64>>) -> Self {
        LinkingMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// First pair `i < j` with nonzero linking number.
    pub fn nonzero_pair(&self) -> Option<(usize, usize, i64)> {
        (0..self.size())
            .flat_map(|i| (i + 1..self.size()).map(move |j| (i, j)))
            .find(|&(i, j)| self.entries[i][j] != 0)
            .map(|(i, j)| (i, j, self.entries[i][j]))
    }
}

/// Linking matrix of `d`, after reversing the components flagged in
/// `orientation` when one is given.
pub fn linking_matrix(d: &LinkDiagram, orientation: Option<&[bool]>) -> LinkingMatrix {
    let k = d.component_count();
    let flip = |c: usize| orientation.and_then(|o| o.get(c).copied()).unwrap_or(false);
    let mut doubled = vec![vec![0i64; k]; k];
    for c in 0..d.crossing_count() {
        let (u, o) = d.strand_components(c);
        let mut s = d.crossing_sign(c).value();
        if flip(u) != flip(o) {
            s = -s;
        }
        if u == o {
            doubled[u][u] += 2 * s;
        } else {
            doubled[u][o] += s;
            doubled[o][u] += s;
        }
    }
    let entries = doubled
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    debug_assert!(v % 2 == 0, "inter-component crossings come in pairs");
                    v / 2
                })
                .collect()
        })
        .collect();
    LinkingMatrix { entries }
}

/// Whether the graph joining components with nonzero linking number is
/// connected.
pub fn linking_graph_connected(m: &LinkingMatrix) -> bool {
    let k = m.size();
    if k <= 1 {
        return true;
    }
    let mut seen = vec![false; k];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for (j, seen) in seen.iter_mut().enumerate() {
            if !*seen && i != j && m.get(i, j) != 0 {
                *seen = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Number of circles after the orientation-respecting smoothing of every
/// crossing, free loops included.
pub fn seifert_circles(d: &LinkDiagram) -> usize {
    let n = d.arc_count();
    let next = |arc: usize| {
        let head = d.arcs()[arc].head;
        let x = d.crossing(head.crossing);
        if head.position == 0 {
            x.over_out_arc()
        } else {
            x.under_out_arc()
        }
    };
    let mut seen = vec![false; n];
    let mut circles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        circles += 1;
        let mut a = start;
        while !seen[a] {
            seen[a] = true;
            a = next(a);
        }
    }
    circles + d.free_loops()
}

/// Euler characteristic `s - c` of the canonical Seifert surface.
pub fn canonical_euler_characteristic(d: &LinkDiagram) -> Result<i64, TopologyError> {
    if !diagram_connected(d) {
        return Err(TopologyError::Disconnected);
    }
    Ok(seifert_circles(d) as i64 - d.crossing_count() as i64)
}

/// Genus `(1 - χ) / 2` of the canonical surface of a connected knot diagram.
pub fn canonical_genus(d: &LinkDiagram) -> Option<i64> {
    if d.component_count() != 1 {
        return None;
    }
    canonical_euler_characteristic(d)
        .ok()
        .map(|chi| (1 - chi) / 2)
}
