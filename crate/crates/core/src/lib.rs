//! Kauffman bracket and Jones polynomial of oriented link diagrams, the
//! saddle and crossing moves at a marked two-strand site, and the Jones
//! test that separates marked diagrams whose moves disagree.

pub mod bracket;
pub mod certify;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod moves;
pub mod poly;
pub mod torus;

pub use bracket::{jones, kauffman_bracket, kauffman_bracket_oracle, BracketOptions};
pub use certify::{certify_distinct, certify_distinct_torus, check_jones1_identity, rhs_jones1, Outcome, Verdict};
pub use diagram::{parse_diagram, parse_pd, ArcId, ComponentId, Diagram, Side};
pub use error::{BracketError, CertifyError, DiagramError, PolyError, SiteError};
pub use moves::{crossing_move, saddle_move, validate_site, MarkedDiagram, Site};
pub use poly::{LaurentPoly, Var};
pub use torus::{jones_torus_knot_closed, jones_torus_link_closed, torus_diagram, TorusLinkSpec};
