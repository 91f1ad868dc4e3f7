//! Monochromatic path and cycle partitions of edge-coloured complete graphs,
//! complete bipartite graphs and 3-uniform hypergraphs.

pub mod bipartite;
pub mod certificate;
pub mod colour;
pub mod colouring;
pub mod error;
pub mod format;
pub mod generate;
pub mod index;
pub mod multipartite;
pub mod oracle;
pub mod packed;
pub mod split;
pub mod three_colour;
pub mod tight_path;

pub use certificate::{check_certificate, PartitionCertificate, Piece, PieceKind, Violation};
pub use colour::Colour;
pub use colouring::{Colouring, PairColouring, PairShape, TripleColouring};
pub use error::{Error, Result};
pub use split::SplitStructure;
