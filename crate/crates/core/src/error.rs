//! Error types shared across the engine.

use thiserror::Error;

/// Everything that can go wrong while building or querying finite
/// algebraic structures. Law violations always carry a witness that
/// can be re-checked by hand against the offending table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition is not associative at ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("identity law fails at element {0}")]
    BadIdentity(usize),
    #[error("element {0} has no two-sided inverse")]
    BadInverse(usize),
    #[error("table entry out of range: {0}")]
    EntryOutOfRange(usize),
    #[error("table has wrong shape: expected {expected} entries, got {got}")]
    BadTableShape { expected: usize, got: usize },
    #[error("size cap exceeded: {size} > {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("member set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("point {point} out of range (action has {points} points)")]
    PointOutOfRange { point: usize, points: usize },
    #[error("operation requires a group actor; this action has a monoid actor")]
    MonoidActorUnsupported,
    #[error("actions have different actors")]
    ActorMismatch,
    #[error("action law fails: {0}")]
    NotAnAction(String),
    #[error("map is not equivariant at (g={g}, x={x})")]
    NotEquivariant { g: usize, x: usize },
    #[error("the given maps do not act by equivariant automorphisms: {0}")]
    NotByAutomorphisms(String),
    #[error("arrow {0} is not in the category")]
    ArrowNotInCategory(usize),
    #[error("object {0} is not in the category")]
    ObjectNotInCategory(usize),
    #[error("category is malformed: {0}")]
    MalformedCategory(String),
    #[error("no object of the category realizes the image of arrow {arrow}")]
    NoImageObject { arrow: usize },
    #[error("axiom prerequisite failed: {0}")]
    AxiomPrereqFailed(String),
    #[error("pointed object is not Galois: ({point}, object {object})")]
    NotGalois { object: usize, point: usize },
    #[error("no meet exists for the pointed objects ({0}, {1}) and ({2}, {3})")]
    NoMeet(usize, usize, usize, usize),
    #[error("quotient object is missing from the category: {0}")]
    QuotientMissing(String),
    #[error("coproduct object is missing from the category: {0}")]
    CoproductMissing(String),
    #[error("inverse system is malformed: {0}")]
    MalformedSystem(String),
    #[error("cover is disconnected")]
    Disconnected,
    #[error("graph is malformed: {0}")]
    MalformedGraph(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
