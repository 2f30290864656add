use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("arc label {label} occurs {count} time(s), expected exactly 2")]
    LabelMultiplicity { label: u64, count: usize },

    #[error("arc label 0 is not allowed; labels are positive integers")]
    ZeroLabel,

    #[error("empty diagram: no crossings and no free loops")]
    EmptyDiagram,

    #[error("inconsistent orientation: arc {label} would be forced in both directions")]
    InconsistentOrientation { label: u64 },

    #[error("arc index {arc} out of range for {arc_count} arcs")]
    ArcOutOfRange { arc: usize, arc_count: usize },

    #[error("diagram does not embed in the sphere: component {component} has Euler characteristic {euler}")]
    NonPlanar { component: usize, euler: i64 },

    #[error("braid must have at least one strand")]
    NoStrands,

    #[error("braid generator {letter} out of range for {strands} strand(s)")]
    GeneratorOutOfRange { letter: i64, strands: usize },

    #[error("crossing label {label}: {reason}")]
    GaussLabel { label: u64, reason: String },

    #[error("Gauss code is not realizable by a classical diagram")]
    NonRealizable,

    #[error("invalid JSON record: {0}")]
    Json(String),
}
