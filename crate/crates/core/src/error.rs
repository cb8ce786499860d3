use thiserror::Error;

/// Structural problems that prevent a crossing table from being a link diagram.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("diagram has no crossings")]
    Empty,
    #[error("crossing {crossing} has {found} incident edge-ends, expected 4")]
    NotFourValent { crossing: usize, found: usize },
    #[error("edge label {label} is outside 1..={max}")]
    LabelOutOfRange { label: usize, max: usize },
    #[error("edge {edge} is referenced {count} time(s), expected exactly 2")]
    LabelMultiplicity { edge: usize, count: usize },
    #[error("edge {edge} cannot be oriented consistently with the under-strand data")]
    InconsistentOrientation { edge: usize },
    #[error("component containing crossing {crossing} is not planar: {faces} faces, expected {expected}")]
    NonPlanar {
        crossing: usize,
        faces: usize,
        expected: usize,
    },
    #[error("crossing id {0} does not exist")]
    InvalidCrossing(usize),
    #[error("malformed incidence at crossing {crossing}, slot {slot}")]
    MalformedIncidence { crossing: usize, slot: u8 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NotationError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("empty input")]
    EmptyInput,
    #[error("DT entry {value} at position {position} is odd")]
    OddEntry { position: usize, value: i64 },
    #[error("DT entry {value} is repeated")]
    DuplicateEntry { value: i64 },
    #[error("DT entry {value} is out of range 2..={max}")]
    EntryOutOfRange { value: i64, max: usize },
    #[error("DT code is not realizable by a planar diagram")]
    NotRealizable,
    #[error("DT code has {0} crossings; planar realization search is limited to {limit}", limit = crate::notation::MAX_DT_CROSSINGS)]
    TooManyCrossings(usize),
    #[error("braid generator index {index} at byte {offset} is out of range")]
    GeneratorOutOfRange { index: usize, offset: usize },
    #[error("braid closure leaves strand {0} without crossings")]
    FreeStrand(usize),
    #[error("cannot infer the notation format")]
    UnknownFormat,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("crossing {crossing} has bigons on adjacent corners {first} and {second}")]
    DegenerateBigon {
        crossing: usize,
        first: u8,
        second: u8,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("diagram is not reduced; nugatory crossings {0:?}")]
    Unreduced(Vec<usize>),
    #[error("diagram is disconnected ({0} pieces)")]
    Disconnected(usize),
    #[error(transparent)]
    Twist(#[from] TwistError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("twist region {0:?} is cyclic and cannot be encircled")]
    CyclicRegion(Vec<usize>),
    #[error("twist region {0:?} is not a twist region of this diagram")]
    RegionNotInDiagram(Vec<usize>),
    #[error("crossing-circle site has no enclosed twist region")]
    MissingProvenance,
    #[error("crossing-circle site {0:?} is not valid in this diagram")]
    InvalidSite([usize; 4]),
    #[error("no half-twist between the encircled strands next to the circle")]
    NoAdjacentHalfTwist,
    #[error("diagram is disconnected ({0} pieces)")]
    Disconnected(usize),
    #[error("rewrite would leave a component without crossings")]
    EmptyComponent,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Twist(#[from] TwistError),
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("census header must be `name,format,notation,volume,hyperbolic`, found `{0}`")]
    Header(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("no rows with a known volume")]
    EmptyInput,
}
