//! Link-diagram analysis: parsing of PD codes, Gauss codes and braid words,
//! plane topology of the underlying 4-valent graph, orientation-dependent
//! invariants, bridge decompositions, and certificates for splitness and
//! primeness of links that admit connected positive diagrams.

pub mod batch;
pub mod bridges;
pub mod certify;
pub mod corpus;
pub mod diagram;
pub mod invariants;
pub mod report;
pub mod topology;

pub use bridges::{bridge_decomposition, bridge_number, BridgeError, BridgePresentation};
pub use certify::{certify, check_nontrivial, Certificate};
pub use diagram::{
    braid_closure, gauss_to_diagram, parse_braid, parse_gauss, parse_pd, pd_to_diagram, BraidWord,
    Crossing, DiagramError, GaussCode, LinkDiagram, PdCode, Sign,
};
pub use invariants::{
    canonical_euler_characteristic, is_positive, linking_graph_connected, linking_matrix,
    seifert_circles, writhe, LinkingMatrix, PositivityVerdict,
};
pub use topology::{
    build_plane_graph, diagram_connected, find_prime_cut, is_prime_diagram, trace_faces,
    CutWitness, FaceSet, PlaneGraph,
};
