//! Plane topology of link diagrams on the 2-sphere: the underlying 4-valent
//! graph, its faces, connectivity, and 2-point cut curves.
//!
//! There is no distinguished outer face; every face is treated alike.

mod faces;
mod graph;
mod prime;

pub use faces::{trace_faces, ArcSide, FaceSet, Side};
pub use graph::{build_plane_graph, PlaneGraph};
pub use prime::{
    find_prime_cut, is_prime_diagram, search_prime_cuts, split_along, verify_cut_witness, CutKind,
    CutSearch, CutWitness,
};

use thiserror::Error;

use crate::diagram::LinkDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("diagram has no crossings")]
    NoCrossings,
    #[error("cut witness does not describe a cut of this diagram")]
    InvalidWitness,
}

/// True iff the underlying graph is connected and there are no free loops,
/// or the diagram is exactly one free loop.
pub fn diagram_connected(d: &LinkDiagram) -> bool {
    if d.crossing_count() == 0 {
        return d.free_loops() == 1;
    }
    d.free_loops() == 0 && build_plane_graph(d).components().1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, parse_braid, parse_pd, pd_to_diagram};

    fn pd(text: &str) -> LinkDiagram {
        pd_to_diagram(&parse_pd(text).unwrap()).unwrap()
    }

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const HOPF: &str = "X(1,4,2,3) X(3,2,4,1)";

    #[test]
    fn graph_counts() {
        let g = build_plane_graph(&pd(TREFOIL));
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 6));
        let g = build_plane_graph(&pd(HOPF));
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 4));
        let g = build_plane_graph(&LinkDiagram::unlink(1).unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (0, 0));
    }

    #[test]
    fn face_counts() {
        let d = pd(TREFOIL);
        let g = build_plane_graph(&d);
        let f = trace_faces(&g);
        assert_eq!(f.face_count(), 5);
        assert_eq!(f.euler_characteristics(&g), vec![2]);
        let f = trace_faces(&build_plane_graph(&pd(HOPF)));
        assert_eq!(f.face_count(), 4);
    }

    #[test]
    fn disjoint_trefoils_have_per_component_euler() {
        let d = pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(11,14,12,15) X(13,16,14,11) X(15,12,16,13)");
        let g = build_plane_graph(&d);
        let f = trace_faces(&g);
        assert_eq!(g.components().1, 2);
        assert_eq!(f.face_count(), 10);
        assert_eq!(f.euler_characteristics(&g), vec![2, 2]);
    }

    #[test]
    fn every_arc_side_once() {
        let d = braid_closure(&parse_braid("BR(4; 1 -2 3 1 2 -3 2)").unwrap());
        let f = trace_faces(&build_plane_graph(&d));
        let mut seen = vec![[0usize; 2]; d.arc_count()];
        for face in f.faces() {
            for s in face {
                seen[s.arc][s.side as usize] += 1;
            }
        }
        assert!(seen.iter().all(|s| *s == [1, 1]));
    }

    #[test]
    fn connectivity() {
        assert!(diagram_connected(&pd(TREFOIL)));
        assert!(!diagram_connected(&pd(
            "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(11,14,12,15) X(13,16,14,11) X(15,12,16,13)"
        )));
        assert!(!diagram_connected(&pd(&format!("FREE_LOOPS=1 {TREFOIL}"))));
        assert!(diagram_connected(&LinkDiagram::unlink(1).unwrap()));
        assert!(!diagram_connected(&LinkDiagram::unlink(2).unwrap()));
    }

    #[test]
    fn trefoil_is_prime() {
        let d = pd(TREFOIL);
        assert_eq!(find_prime_cut(&d), Ok(None));
        assert!(is_prime_diagram(&d));
    }

    #[test]
    fn positive_kink_is_prime() {
        let d = pd("X(1,2,2,1)");
        assert_eq!(d.crossing(0).sign, crate::Sign::Positive);
        assert_eq!(find_prime_cut(&d), Ok(None));
    }

    #[test]
    fn granny_has_balanced_cut() {
        let t = pd(TREFOIL);
        let granny = t.connected_sum(1, &t, 1).unwrap();
        let w = find_prime_cut(&granny)
            .unwrap()
            .expect("granny is not prime");
        assert_eq!(w.kind, CutKind::EdgePair);
        assert_eq!(w.side_crossings, (3, 3));
        assert!(verify_cut_witness(&granny, &w));
        let (a, b) = split_along(&granny, &w).unwrap();
        assert_eq!(a.crossing_count() + b.crossing_count(), 6);
        assert!(is_prime_diagram(&a) && is_prime_diagram(&b));
        assert!(!is_prime_diagram(&granny));
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            find_prime_cut(&LinkDiagram::unlink(1).unwrap()),
            Err(TopologyError::NoCrossings)
        );
        let two = pd(TREFOIL).disjoint_union(&pd(TREFOIL));
        assert_eq!(find_prime_cut(&two), Err(TopologyError::Disconnected));
        assert!(!is_prime_diagram(&LinkDiagram::unlink(1).unwrap()));
    }
}
