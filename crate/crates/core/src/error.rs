use thiserror::Error;

use crate::poly::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable mismatch: {lhs:?} vs {rhs:?}")]
    VarMismatch { lhs: Var, rhs: Var },
    #[error("expected a polynomial in {expected:?}, found {found:?}")]
    WrongVar { expected: Var, found: Var },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("bracket exponent {0}/4 is not an integer power of A")]
    FractionalBracketExponent(i64),
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
    #[error("terms must be sorted by strictly increasing exponent")]
    UnsortedTerms,
    #[error("zero coefficient in serialized polynomial")]
    ZeroCoefficient,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid diagram JSON: {0}")]
    Json(String),
    #[error("arc {arc} appears {count} times; every arc must appear exactly twice")]
    ArcMultiplicity { arc: u32, count: usize },
    #[error("inconsistent orientation at arc {0}")]
    Orientation(u32),
    #[error("arc numbering is not sequential along the component containing arc {0}")]
    NonSequential(u32),
    #[error("the empty diagram is not a link diagram")]
    Empty,
    #[error("crossing index {index} out of range ({len} crossings)")]
    CrossingIndex { index: usize, len: usize },
    #[error("unknown arc {0}")]
    UnknownArc(u32),
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("linking number needs two distinct components")]
    SameComponent,
    #[error("arcs must be distinct")]
    SameArc,
    #[error("braid letter {letter} is not a generator on {strands} strands")]
    BraidLetter { letter: i32, strands: usize },
    #[error("arcs {0} and {1} do not share a face on the chosen side")]
    NotCofacial(u32, u32),
    #[error("signed crossing count {0} between the components is odd")]
    OddLinking(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("diagram has {crossings} crossings, above the cap of {cap}")]
    CapExceeded { crossings: usize, cap: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SiteError {
    #[error("site arcs must be distinct")]
    SameArc,
    #[error("site arc {0} does not exist in the diagram")]
    MissingArc(u32),
    #[error("site arc {0} is a crossingless loop; sites must lie on arcs between crossings")]
    FreeLoop(u32),
    #[error("arcs {0} and {1} do not bound a common face on the marked side")]
    NotCofacial(u32, u32),
    #[error("arcs {0} and {1} are parallel on the marked face; the site must be anti-parallel")]
    Parallel(u32, u32),
    #[error("invalid marked diagram JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error(transparent)]
    Site(#[from] SiteError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("torus parameter must be positive, got {0}")]
    TorusParameter(i64),
    #[error("Jones polynomial of the marked diagram is {0}, not 1; the triviality hypothesis fails")]
    NotTrivial(String),
    #[error("closed-form right-hand side disagrees with the general formula")]
    ClosedFormMismatch,
    #[error("invalid verdict JSON: {0}")]
    Json(String),
}
