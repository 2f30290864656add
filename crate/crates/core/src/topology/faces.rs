use serde::{Deserialize, Serialize};

use super::PlaneGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// One side of an arc, relative to the arc's orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcSide {
    pub arc: usize,
    pub side: Side,
}

/// Faces of a plane graph, each a boundary walk of arc-sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<ArcSide>>,
    face_of: Vec<[usize; 2]>,
}

impl FaceSet {
    pub fn faces(&self) -> &[Vec<ArcSide>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Face containing the given side of `arc`.
    pub fn face_of(&self, arc: usize, side: Side) -> usize {
        self.face_of[arc][side as usize]
    }

    /// `(left, right)` faces of `arc`.
    pub fn faces_of_arc(&self, arc: usize) -> (usize, usize) {
        let [l, r] = self.face_of[arc];
        (l, r)
    }

    /// `V - E + F` of each connected component of `graph`, counting only
    /// that component's own faces.
    pub fn euler_characteristics(&self, graph: &PlaneGraph) -> Vec<i64> {
        let (comp, count) = graph.components();
        let mut chi = vec![0i64; count];
        for &c in &comp {
            chi[c] += 1;
        }
        for e in 0..graph.edge_count() {
            chi[comp[graph.endpoints(e).0.crossing]] -= 1;
        }
        for face in &self.faces {
            let arc = face[0].arc;
            chi[comp[graph.endpoints(arc).0.crossing]] += 1;
        }
        chi
    }
}

/// Traces faces by walking darts: arriving at a crossing through the end at
/// counterclockwise position `p`, the walk leaves through position `p - 1`,
/// keeping the face on its left. Forward darts trace left sides of arcs,
/// backward darts right sides.
pub fn trace_faces(graph: &PlaneGraph) -> FaceSet {
    let darts = 2 * graph.edge_count();
    let mut face_of = vec![[usize::MAX; 2]; graph.edge_count()];
    let mut faces = Vec::new();
    let next = |dart: usize| -> usize {
        let (arc, backward) = (dart / 2, dart % 2 == 1);
        let (tail, head) = graph.endpoints(arc);
        let arrive = if backward { tail } else { head };
        let position = (arrive.position + 3) % 4;
        let out = graph.rotation(arrive.crossing)[position];
        let (out_tail, _) = graph.endpoints(out);
        if out_tail.crossing == arrive.crossing && out_tail.position == position {
            2 * out
        } else {
            2 * out + 1
        }
    };
    for start in 0..darts {
        if face_of[start / 2][start % 2] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut walk = Vec::new();
        let mut dart = start;
        loop {
            face_of[dart / 2][dart % 2] = id;
            walk.push(ArcSide {
                arc: dart / 2,
                side: if dart % 2 == 0 {
                    Side::Left
                } else {
                    Side::Right
                },
            });
            dart = next(dart);
            if dart == start {
                break;
            }
        }
        faces.push(walk);
    }
    FaceSet { faces, face_of }
}
