//! Association schemes: validation, constructors, file formats and
//! subconstituent frames.

mod constructors;
mod frame;
mod graph;
mod io;
mod scheme;
mod table;

use thiserror::Error;

pub use constructors::{
    chang_graphs, cycle, johnson, johnson_graph, johnson_index, johnson_points, rook4, shrikhande,
    ChangSwitching,
};
pub use frame::SubconstituentFrame;
pub use graph::{scheme_from_srg, Graph, SrgParameters};
pub use io::{parse_graph_file, parse_scheme_file, serialize_graph_file, serialize_scheme_file};
pub use scheme::AssociationScheme;
pub use table::RelationTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SchemeError {
    #[error("malformed relation table: {0}")]
    MalformedTable(String),
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("relation {0} is not closed under transposition")]
    NotTransposeClosed(usize),
    #[error(
        "intersection number p[{s}][{t}]^{u} is not constant: {} at ({},{}) but {} at ({},{})",
        values.0, first.0, first.1, values.1, second.0, second.1
    )]
    InconsistentIntersectionNumber {
        s: usize,
        t: usize,
        u: usize,
        first: (usize, usize),
        second: (usize, usize),
        values: (u64, u64),
    },
    #[error("order {given} is too small; need at least {minimum}")]
    OrderTooSmall { given: usize, minimum: usize },
    #[error("not strongly regular at ({},{}): {reason}", pair.0, pair.1)]
    NotStronglyRegular { pair: (usize, usize), reason: String },
    #[error("point {point} out of range for order {order}")]
    PointOutOfRange { point: usize, order: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
