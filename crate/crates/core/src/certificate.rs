//! Partition certificates and the universal checker.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colour::Colour;
use crate::colouring::{Colouring, PairShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PieceKind {
    Path,
    Cycle,
}

/// One monochromatic path or cycle of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Piece {
    pub kind: PieceKind,
    pub colour: Colour,
    pub vertices: Vec<usize>,
}

impl Piece {
    pub fn path(colour: Colour, vertices: Vec<usize>) -> Piece {
        Piece {
            kind: PieceKind::Path,
            colour,
            vertices,
        }
    }

    pub fn cycle(colour: Colour, vertices: Vec<usize>) -> Piece {
        Piece {
            kind: PieceKind::Cycle,
            colour,
            vertices,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Pieces claimed to partition the vertex set of `host` (a colouring
/// header such as `b2 4`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartitionCertificate {
    pub host: String,
    pub pieces: Vec<Piece>,
}

/// Counts of nonempty pieces by kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ShapeSummary {
    pub paths: usize,
    pub cycles: usize,
}

impl ShapeSummary {
    /// Whether this shape fits inside `paths` paths and `cycles` cycles.
    pub fn within(&self, paths: usize, cycles: usize) -> bool {
        self.paths <= paths && self.cycles <= cycles
    }

    pub fn total(&self) -> usize {
        self.paths + self.cycles
    }
}

impl fmt::Display for ShapeSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} path(s), {} cycle(s)", self.paths, self.cycles)
    }
}

impl PartitionCertificate {
    pub fn new(host: impl Into<String>, pieces: Vec<Piece>) -> PartitionCertificate {
        PartitionCertificate {
            host: host.into(),
            pieces,
        }
    }

    pub fn shape(&self) -> ShapeSummary {
        let mut s = ShapeSummary::default();
        for p in self.pieces.iter().filter(|p| !p.is_empty()) {
            match p.kind {
                PieceKind::Path => s.paths += 1,
                PieceKind::Cycle => s.cycles += 1,
            }
        }
        s
    }

    pub fn nonempty(&self) -> impl Iterator<Item = &Piece> {
        self.pieces.iter().filter(|p| !p.is_empty())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<PartitionCertificate> {
        serde_json::from_str(text)
    }
}

/// The header line identifying a colouring's host, e.g. `h3 6` or `b2 4 3`.
pub fn host_tag(c: &Colouring) -> String {
    match c {
        Colouring::Triples(t) => format!("h3 {}", t.n()),
        Colouring::Pairs(p) => {
            let kind = match p.shape() {
                PairShape::Complete(_) => "kn",
                PairShape::Bipartite(_) => "b2",
            };
            if p.palette() == 3 {
                format!("{kind} {} 3", p.n())
            } else {
                format!("{kind} {}", p.n())
            }
        }
        Colouring::Transversal(t) => format!("rxn {} {}", t.n(), t.r()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    HostMismatch {
        expected: String,
        found: String,
    },
    VertexOutOfRange {
        piece: usize,
        vertex: usize,
    },
    ColourOutsidePalette {
        piece: usize,
        colour: Colour,
    },
    /// `vertex` occurs twice, in pieces `first` and `second` (possibly equal).
    Overlap {
        vertex: usize,
        first: usize,
        second: usize,
    },
    Uncovered {
        vertex: usize,
    },
    NotAnEdge {
        piece: usize,
        edge: Vec<usize>,
    },
    WrongColour {
        piece: usize,
        edge: Vec<usize>,
        declared: Colour,
        found: Colour,
    },
    UnsupportedPiece {
        piece: usize,
        reason: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::HostMismatch { expected, found } => {
                write!(
                    f,
                    "host mismatch: colouring is '{expected}', certificate says '{found}'"
                )
            }
            Violation::VertexOutOfRange { piece, vertex } => {
                write!(f, "piece {piece}: vertex {vertex} out of range")
            }
            Violation::ColourOutsidePalette { piece, colour } => {
                write!(f, "piece {piece}: colour {colour} outside the palette")
            }
            Violation::Overlap { vertex, first, second } => {
                write!(f, "disjointness: vertex {vertex} in pieces {first} and {second}")
            }
            Violation::Uncovered { vertex } => write!(f, "coverage: vertex {vertex} uncovered"),
            Violation::NotAnEdge { piece, edge } => {
                write!(f, "piece {piece}: {edge:?} is not an edge of the host")
            }
            Violation::WrongColour {
                piece,
                edge,
                declared,
                found,
            } => write!(
                f,
                "monochromaticity: piece {piece} is {declared} but edge {edge:?} is {found}"
            ),
            Violation::UnsupportedPiece { piece, reason } => write!(f, "piece {piece}: {reason}"),
        }
    }
}

impl std::error::Error for Violation {}

/// Verifies disjointness, coverage and that every piece is a monochromatic
/// path or cycle of the host in its declared colour.
///
/// Paths with too few vertices to contain an edge and cycles on at most one
/// vertex take any colour; a two-vertex cycle is a single edge and must carry
/// its declared colour. Hypergraph hosts only accept (tight) paths.
pub fn check_certificate(c: &Colouring, cert: &PartitionCertificate) -> Result<(), Violation> {
    let tag = host_tag(c);
    if cert.host != tag {
        return Err(Violation::HostMismatch {
            expected: tag,
            found: cert.host.clone(),
        });
    }
    let total = c.vertex_count();
    let mut owner: Vec<Option<usize>> = vec![None; total];
    for (pi, piece) in cert.pieces.iter().enumerate() {
        if !piece.colour.in_palette(c.palette()) {
            return Err(Violation::ColourOutsidePalette {
                piece: pi,
                colour: piece.colour,
            });
        }
        for &v in &piece.vertices {
            if v >= total {
                return Err(Violation::VertexOutOfRange { piece: pi, vertex: v });
            }
            if let Some(first) = owner[v] {
                return Err(Violation::Overlap {
                    vertex: v,
                    first,
                    second: pi,
                });
            }
            owner[v] = Some(pi);
        }
        check_piece(c, pi, piece)?;
    }
    if let Some(v) = owner.iter().position(|o| o.is_none()) {
        return Err(Violation::Uncovered { vertex: v });
    }
    Ok(())
}

fn check_piece(c: &Colouring, pi: usize, piece: &Piece) -> Result<(), Violation> {
    let vs = &piece.vertices;
    let declared = piece.colour;
    let wrong = |edge: Vec<usize>, found: Colour| Violation::WrongColour {
        piece: pi,
        edge,
        declared,
        found,
    };
    match c {
        Colouring::Triples(t) => {
            if piece.kind == PieceKind::Cycle {
                return Err(Violation::UnsupportedPiece {
                    piece: pi,
                    reason: "tight cycles are not supported".into(),
                });
            }
            for w in vs.windows(3) {
                let found = t.colour(w[0], w[1], w[2]);
                if found != declared {
                    return Err(wrong(w.to_vec(), found));
                }
            }
        }
        Colouring::Transversal(t) => {
            if piece.kind == PieceKind::Cycle {
                return Err(Violation::UnsupportedPiece {
                    piece: pi,
                    reason: "tight cycles are not supported".into(),
                });
            }
            let r = t.r();
            let mut edge = vec![0usize; r];
            for w in vs.windows(r) {
                let mut seen = vec![false; r];
                for &v in w {
                    let (class, x) = t.locate(v);
                    if seen[class] {
                        return Err(Violation::NotAnEdge {
                            piece: pi,
                            edge: w.to_vec(),
                        });
                    }
                    seen[class] = true;
                    edge[class] = x;
                }
                let found = t.colour(&edge);
                if found != declared {
                    return Err(wrong(w.to_vec(), found));
                }
            }
        }
        Colouring::Pairs(p) => {
            let mut edges: Vec<(usize, usize)> = vs.windows(2).map(|w| (w[0], w[1])).collect();
            if piece.kind == PieceKind::Cycle && vs.len() >= 3 {
                edges.push((vs[vs.len() - 1], vs[0]));
            }
            for (u, v) in edges {
                if !p.is_edge(u, v) {
                    return Err(Violation::NotAnEdge {
                        piece: pi,
                        edge: vec![u, v],
                    });
                }
                let found = p.colour(u, v);
                if found != declared {
                    return Err(wrong(vec![u, v], found));
                }
            }
        }
    }
    Ok(())
}
