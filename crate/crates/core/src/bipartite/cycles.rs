use crate::colour::Colour;
use crate::colouring::PairColouring;
use crate::error::{Error, Result};

/// Colour structure of a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleShape {
    /// At most two vertices.
    Degenerate,
    Mono(Colour),
    Bicoloured(BicolouredCycle),
    /// Three or more colour runs.
    Multi,
}

/// A cycle `v_1 … v_k` with two colour runs: edges `v_i v_{i+1}` with
/// `i < ℓ` have colour `first`, the remaining edges (including `v_k v_1`)
/// the other colour. The cycle is good when `v_1` and `v_ℓ` lie in distinct
/// classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BicolouredCycle {
    vertices: Vec<usize>,
    turn: usize,
    first: Colour,
    good: bool,
}

impl BicolouredCycle {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The 1-based index `ℓ` of the second turning point.
    pub fn turn(&self) -> usize {
        self.turn
    }

    pub fn first_colour(&self) -> Colour {
        self.first
    }

    pub fn second_colour(&self) -> Colour {
        self.first.opposite()
    }

    pub fn is_good(&self) -> bool {
        self.good
    }

    pub fn turning_points(&self) -> (usize, usize) {
        (self.vertices[0], self.vertices[self.turn - 1])
    }

    /// Number of edges of colour `colour`.
    pub fn count(&self, colour: Colour) -> usize {
        if colour == self.first {
            self.turn - 1
        } else if colour == self.second_colour() {
            self.len() - self.turn + 1
        } else {
            0
        }
    }

    /// The same cycle written from `v_ℓ` along the second run.
    pub fn rotated(&self) -> BicolouredCycle {
        let l = self.turn;
        let k = self.len();
        let mut vertices = Vec::with_capacity(k);
        vertices.extend_from_slice(&self.vertices[l - 1..]);
        vertices.extend_from_slice(&self.vertices[..l - 1]);
        BicolouredCycle {
            vertices,
            turn: k - l + 2,
            first: self.second_colour(),
            good: self.good,
        }
    }

    /// The same cycle written from `v_ℓ` backwards along the first run.
    pub fn reversed(&self) -> BicolouredCycle {
        let l = self.turn;
        let mut vertices: Vec<usize> = self.vertices[..l].iter().rev().copied().collect();
        vertices.extend(self.vertices[l..].iter().rev());
        BicolouredCycle {
            vertices,
            turn: l,
            first: self.first,
            good: self.good,
        }
    }

    /// The four ways of writing the cycle from a turning point.
    pub fn representations(&self) -> [BicolouredCycle; 4] {
        let rot = self.rotated();
        [self.clone(), self.reversed(), rot.reversed(), rot]
    }

    /// The representation whose first run has colour `colour`.
    pub fn with_first(&self, colour: Colour) -> BicolouredCycle {
        if self.first == colour {
            self.clone()
        } else {
            self.rotated()
        }
    }
}

/// A spanning cycle that is monochromatic or bicoloured.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpanningCycle {
    Mono { colour: Colour, vertices: Vec<usize> },
    Bicoloured(BicolouredCycle),
}

impl SpanningCycle {
    pub fn vertices(&self) -> &[usize] {
        match self {
            SpanningCycle::Mono { vertices, .. } => vertices,
            SpanningCycle::Bicoloured(b) => b.vertices(),
        }
    }
}

/// Checks `seq` is a cycle of the host (distinct vertices, alternating
/// classes) and reads its colour runs.
pub fn analyse_cycle(c: &PairColouring, seq: &[usize]) -> Result<CycleShape> {
    let total = c.vertex_count();
    let mut seen = vec![false; total];
    for &v in seq {
        if v >= total || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition(format!("vertex {v} out of range or repeated")));
        }
    }
    let k = seq.len();
    if k <= 2 {
        if k == 2 && !c.is_edge(seq[0], seq[1]) {
            return Err(Error::Precondition(format!("{}-{} is not an edge", seq[0], seq[1])));
        }
        return Ok(CycleShape::Degenerate);
    }
    let mut edges = Vec::with_capacity(k);
    for i in 0..k {
        let (u, v) = (seq[i], seq[(i + 1) % k]);
        if !c.is_edge(u, v) {
            return Err(Error::Precondition(format!("{u}-{v} is not an edge")));
        }
        edges.push(c.colour(u, v));
    }
    let changes: Vec<usize> = (0..k).filter(|&i| edges[i] != edges[(i + k - 1) % k]).collect();
    Ok(match changes.as_slice() {
        [] => CycleShape::Mono(edges[0]),
        &[i1, i2] => {
            let mut vertices = Vec::with_capacity(k);
            vertices.extend_from_slice(&seq[i1..]);
            vertices.extend_from_slice(&seq[..i1]);
            let turn = i2 - i1 + 1;
            let good = c.class_of(vertices[0]) != c.class_of(vertices[turn - 1]);
            CycleShape::Bicoloured(BicolouredCycle {
                vertices,
                turn,
                first: edges[i1],
                good,
            })
        }
        _ => CycleShape::Multi,
    })
}

/// Reads `seq` as a bicoloured cycle, if it is one.
pub(crate) fn as_bicoloured(c: &PairColouring, seq: &[usize]) -> Option<BicolouredCycle> {
    match analyse_cycle(c, seq) {
        Ok(CycleShape::Bicoloured(b)) => Some(b),
        _ => None,
    }
}

/// Reads `seq` as a spanning monochromatic or bicoloured cycle.
pub(crate) fn as_spanning(c: &PairColouring, seq: Vec<usize>) -> Option<SpanningCycle> {
    if seq.len() != c.vertex_count() {
        return None;
    }
    match analyse_cycle(c, &seq).ok()? {
        CycleShape::Mono(colour) => Some(SpanningCycle::Mono { colour, vertices: seq }),
        CycleShape::Bicoloured(b) => Some(SpanningCycle::Bicoloured(b)),
        CycleShape::Degenerate => {
            // K_{1,1}: a single edge
            let colour = c.colour(seq[0], seq[1]);
            Some(SpanningCycle::Mono { colour, vertices: seq })
        }
        CycleShape::Multi => None,
    }
}
