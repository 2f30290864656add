use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use super::lex::Cursor;
use super::{Crossing, DiagramError, LinkDiagram, Sign};

/// Planar-diagram code: each crossing lists its four arc labels
/// counterclockwise, starting from the incoming under-strand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PdCode {
    pub crossings: Vec<[u64; 4]>,
    pub free_loops: usize,
}

impl PdCode {
    /// Validates label multiplicities and non-emptiness.
    pub fn new(crossings: Vec<[u64; 4]>, free_loops: usize) -> Result<Self, DiagramError> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(DiagramError::EmptyDiagram);
        }
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for &label in crossings.iter().flatten() {
            if label == 0 {
                return Err(DiagramError::ZeroLabel);
            }
            *counts.entry(label).or_default() += 1;
        }
        if let Some((&label, &count)) = counts.iter().find(|(_, &n)| n != 2) {
            return Err(DiagramError::LabelMultiplicity { label, count });
        }
        Ok(PdCode {
            crossings,
            free_loops,
        })
    }

    /// Labels occurring in the code, each listed once, ascending.
    pub fn labels(&self) -> Vec<u64> {
        let mut labels: Vec<u64> = self.crossings.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        labels
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if self.free_loops > 0 {
            write!(f, "FREE_LOOPS={}", self.free_loops)?;
            first = false;
        }
        for [a, b, c, d] in &self.crossings {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "X({a},{b},{c},{d})")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses `[FREE_LOOPS=k] X(a,b,c,d) X(...) ...`.
pub fn parse_pd(text: &str) -> Result<PdCode, DiagramError> {
    let mut cur = Cursor::new(text);
    let mut free_loops = 0usize;
    cur.skip_ws();
    if cur.eat_str("FREE_LOOPS") {
        cur.expect('=')?;
        cur.skip_ws();
        free_loops = cur.unsigned()? as usize;
    }
    let mut crossings = Vec::new();
    while !cur.at_end() {
        if !cur.eat('X') {
            return Err(cur.error("expected 'X(' term"));
        }
        cur.expect('(')?;
        let mut tuple = [0u64; 4];
        for (i, slot) in tuple.iter_mut().enumerate() {
            if i > 0 {
                cur.expect(',')?;
            }
            cur.skip_ws();
            *slot = cur.unsigned()?;
        }
        cur.expect(')')?;
        crossings.push(tuple);
    }
    PdCode::new(crossings, free_loops)
}

/// Orients a PD code and builds the diagram.
///
/// Position 0 of each tuple enters and position 2 leaves the crossing; the
/// over-strand direction is propagated along arcs from those constraints.
/// Over-strands of components that never pass under anything are left
/// unconstrained; they are seeded from label order (labels increase along
/// the orientation) and propagated again.
pub fn pd_to_diagram(pd: &PdCode) -> Result<LinkDiagram, DiagramError> {
    let labels = pd.labels();
    let index: BTreeMap<u64, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let ends: Vec<[usize; 4]> = pd.crossings.iter().map(|t| t.map(|l| index[&l])).collect();

    // occurrences[arc] = the two (crossing, position) slots holding it
    let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::with_capacity(2); labels.len()];
    for (ci, e) in ends.iter().enumerate() {
        for (p, &a) in e.iter().enumerate() {
            occurrences[a].push((ci, p));
        }
    }

    let mut incoming: Vec<[Option<bool>; 4]> = vec![[None; 4]; ends.len()];
    let mut queue = VecDeque::new();

    let set = |incoming: &mut Vec<[Option<bool>; 4]>,
               queue: &mut VecDeque<(usize, usize)>,
               ci: usize,
               p: usize,
               dir: bool|
     -> Result<(), DiagramError> {
        match incoming[ci][p] {
            Some(existing) if existing != dir => Err(DiagramError::InconsistentOrientation {
                label: labels[ends[ci][p]],
            }),
            Some(_) => Ok(()),
            None => {
                incoming[ci][p] = Some(dir);
                queue.push_back((ci, p));
                Ok(())
            }
        }
    };

    for ci in 0..ends.len() {
        set(&mut incoming, &mut queue, ci, 0, true)?;
        set(&mut incoming, &mut queue, ci, 2, false)?;
    }

    let mut seed = 0usize;
    loop {
        while let Some((ci, p)) = queue.pop_front() {
            let dir = incoming[ci][p].expect("queued ends are set");
            let arc = ends[ci][p];
            for &(cj, q) in &occurrences[arc] {
                if (cj, q) != (ci, p) {
                    set(&mut incoming, &mut queue, cj, q, !dir)?;
                }
            }
            if p % 2 == 1 {
                set(&mut incoming, &mut queue, ci, (p + 2) % 4, !dir)?;
            }
        }
        while seed < ends.len() && incoming[seed][1].is_some() {
            seed += 1;
        }
        if seed == ends.len() {
            break;
        }
        let b = labels[ends[seed][1]];
        let d = labels[ends[seed][3]];
        let b_enters = if d == b + 1 {
            true
        } else if b == d + 1 {
            false
        } else {
            b >= d
        };
        set(&mut incoming, &mut queue, seed, 1, b_enters)?;
    }

    let crossings = ends
        .iter()
        .zip(&incoming)
        .map(|(e, dirs)| {
            let sign = if dirs[1] == Some(true) {
                Sign::Positive
            } else {
                Sign::Negative
            };
            Crossing::new(*e, sign)
        })
        .collect();
    LinkDiagram::from_crossings(crossings, pd.free_loops).map_err(|err| match err {
        DiagramError::InconsistentOrientation { label } => DiagramError::InconsistentOrientation {
            label: labels[(label - 1) as usize],
        },
        other => other,
    })
}
