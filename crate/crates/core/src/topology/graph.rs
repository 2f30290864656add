use crate::diagram::{End, LinkDiagram};

/// Underlying 4-valent graph of a diagram: crossings are vertices, arcs are
/// edges, and each vertex carries the counterclockwise order of its four
/// arc-ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<[usize; 4]>,
    edges: Vec<(End, End)>,
}

impl PlaneGraph {
    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Arcs at the ends of `vertex`, counterclockwise.
    pub fn rotation(&self, vertex: usize) -> &[usize; 4] {
        &self.rotation[vertex]
    }

    /// `(tail, head)` ends of `edge`.
    pub fn endpoints(&self, edge: usize) -> (End, End) {
        self.edges[edge]
    }

    /// Connected component of every vertex, numbered by smallest vertex,
    /// with the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        self.components_without(&[])
    }

    /// Like [`components`](Self::components), ignoring the listed edges.
    pub fn components_without(&self, removed: &[usize]) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &e in &self.rotation[v] {
                    if removed.contains(&e) {
                        continue;
                    }
                    let (t, h) = self.edges[e];
                    for w in [t.crossing, h.crossing] {
                        if comp[w] == usize::MAX {
                            comp[w] = count;
                            stack.push(w);
                        }
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// Vertices reachable from `start` without using `removed` edges.
    pub fn reachable_without(&self, start: usize, removed: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &e in &self.rotation[v] {
                if removed.contains(&e) {
                    continue;
                }
                let (t, h) = self.edges[e];
                for w in [t.crossing, h.crossing] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        seen
    }
}

/// Copies the rotation system out of the diagram's crossings.
pub fn build_plane_graph(d: &LinkDiagram) -> PlaneGraph {
    PlaneGraph {
        rotation: d.crossings().iter().map(|x| x.ends).collect(),
        edges: d.arcs().iter().map(|a| (a.tail, a.head)).collect(),
    }
}
