use super::{Crossing, DiagramError, LinkDiagram, Sign};

impl LinkDiagram {
    /// Switches every crossing: the mirror image through the projection
    /// sphere.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.ends;
                match x.sign {
                    Sign::Positive => Crossing::new([b, c, d, a], Sign::Negative),
                    Sign::Negative => Crossing::new([d, a, b, c], Sign::Positive),
                }
            })
            .collect();
        Self::from_crossings(crossings, self.free_loops).expect("mirror preserves validity")
    }

    /// Places `other` in a face of `self`, disjoint from it.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> Self {
        let offset = self.arc_count();
        let crossings = self
            .crossings
            .iter()
            .copied()
            .chain(
                other
                    .crossings
                    .iter()
                    .map(|x| Crossing::new(x.ends.map(|a| a + offset), x.sign)),
            )
            .collect();
        Self::from_crossings(crossings, self.free_loops + other.free_loops)
            .expect("disjoint union preserves validity")
    }

    /// Oriented connected sum, cutting `arc` of `self` and `other_arc` of
    /// `other` and reconnecting the four ends orientation-consistently.
    pub fn connected_sum(
        &self,
        arc: usize,
        other: &LinkDiagram,
        other_arc: usize,
    ) -> Result<Self, DiagramError> {
        for (d, a) in [(self, arc), (other, other_arc)] {
            if a >= d.arc_count() {
                return Err(DiagramError::ArcOutOfRange {
                    arc: a,
                    arc_count: d.arc_count(),
                });
            }
        }
        let offset = self.arc_count();
        let crossing_offset = self.crossing_count();
        let first = arc;
        let second = other_arc + offset;
        let mut crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .copied()
            .chain(
                other
                    .crossings
                    .iter()
                    .map(|x| Crossing::new(x.ends.map(|a| a + offset), x.sign)),
            )
            .collect();
        let h1 = self.arcs[arc].head;
        let h2 = other.arcs[other_arc].head;
        crossings[h1.crossing].ends[h1.position] = second;
        crossings[h2.crossing + crossing_offset].ends[h2.position] = first;
        Self::from_crossings(crossings, self.free_loops + other.free_loops)
    }

    /// Renames arc `a` to `arc_perm[a]` and moves crossing `i` to
    /// `crossing_perm[i]`. Both must be permutations.
    pub fn relabeled(&self, arc_perm: &[usize], crossing_perm: &[usize]) -> Self {
        let mut crossings = vec![Crossing::new([0; 4], Sign::Positive); self.crossing_count()];
        for (i, x) in self.crossings.iter().enumerate() {
            crossings[crossing_perm[i]] = Crossing::new(x.ends.map(|a| arc_perm[a]), x.sign);
        }
        Self::from_crossings(crossings, self.free_loops).expect("relabeling preserves validity")
    }

    /// The same diagram with `extra` more free loops.
    pub fn with_extra_free_loops(&self, extra: usize) -> Self {
        let mut d = self.clone();
        d.free_loops += extra;
        d
    }
}
