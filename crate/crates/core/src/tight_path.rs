//! Spanning bicoloured tight paths in 2-coloured complete 3-uniform
//! hypergraphs and their split into two monochromatic tight paths.
//!
//! Paths are vertex sequences `v_1 … v_k`; the edges are the consecutive
//! triples `v_{i-1} v_i v_{i+1}` for `2 ≤ i ≤ k-1`. A path is bicoloured
//! with turning point index `ℓ` when the edges with `i ≤ ℓ` share one colour
//! and the rest share the other. Turning point indices are 1-based as in
//! that notation.

use crate::certificate::{PartitionCertificate, Piece};
use crate::colour::Colour;
use crate::colouring::TripleColouring;
use crate::error::{Error, Result};

/// Result of reading the edge colours along a vertex sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TightPathClass {
    /// At most two vertices: no edges at all.
    Edgeless,
    Mono(Colour),
    /// Exactly two colour runs; `turn` is the turning point index.
    Bicoloured {
        turn: usize,
        first: Colour,
    },
    /// Three or more runs.
    Invalid,
}

fn check_vertices(c: &TripleColouring, seq: &[usize]) -> Result<()> {
    let mut seen = vec![false; c.n()];
    for &v in seq {
        if v >= c.n() {
            return Err(Error::Precondition(format!(
                "vertex {v} out of range for n = {}",
                c.n()
            )));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition(format!("vertex {v} repeated")));
        }
    }
    Ok(())
}

fn scan(c: &TripleColouring, seq: &[usize]) -> TightPathClass {
    let mut edges = seq.windows(3).map(|w| c.colour(w[0], w[1], w[2]));
    let Some(first) = edges.next() else {
        return TightPathClass::Edgeless;
    };
    let mut first_len = 1;
    let mut second = None;
    for e in edges {
        match second {
            None if e == first => first_len += 1,
            None => second = Some(e),
            Some(s) if s == e => {}
            Some(_) => return TightPathClass::Invalid,
        }
    }
    match second {
        None => TightPathClass::Mono(first),
        Some(_) => TightPathClass::Bicoloured {
            turn: first_len + 1,
            first,
        },
    }
}

pub fn classify_tight_path(c: &TripleColouring, seq: &[usize]) -> Result<TightPathClass> {
    check_vertices(c, seq)?;
    Ok(scan(c, seq))
}

/// A tight path whose edge colours form at most two runs.
///
/// Monochromatic paths store `turn = k - 1` and colour `first`; edgeless
/// paths use red as `first` by convention.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BicolouredTightPath {
    vertices: Vec<usize>,
    turn: usize,
    first: Colour,
}

impl BicolouredTightPath {
    pub fn new(c: &TripleColouring, vertices: Vec<usize>) -> Result<BicolouredTightPath> {
        let class = classify_tight_path(c, &vertices)?;
        BicolouredTightPath::from_class(vertices, class)
            .ok_or_else(|| Error::Precondition("sequence has more than two colour runs".into()))
    }

    fn from_class(vertices: Vec<usize>, class: TightPathClass) -> Option<BicolouredTightPath> {
        let k = vertices.len();
        let (turn, first) = match class {
            TightPathClass::Edgeless => (k.saturating_sub(1), Colour::Red),
            TightPathClass::Mono(colour) => (k - 1, colour),
            TightPathClass::Bicoloured { turn, first } => (turn, first),
            TightPathClass::Invalid => return None,
        };
        Some(BicolouredTightPath { vertices, turn, first })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn turn(&self) -> usize {
        self.turn
    }

    /// Colour of the edges up to the turning point.
    pub fn first_colour(&self) -> Colour {
        self.first
    }

    pub fn second_colour(&self) -> Colour {
        self.first.opposite()
    }

    pub fn is_monochromatic(&self) -> bool {
        let k = self.len();
        k <= 3 || self.turn <= 1 || self.turn >= k - 1
    }
}

/// Which construction [`augment`] used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AugmentCase {
    /// Path short or monochromatic: `w` appended at the end.
    Append,
    /// `w` inserted between `v_{ℓ+1}` and `v_{ℓ+2}`.
    InsertAfterTurn,
    /// `v_ℓ … v_1 w v_{ℓ+1} … v_k`.
    FoldFront,
    /// `v_1 … v_{ℓ+1} w v_k … v_{ℓ+2}`.
    FoldBack,
    /// `v_2 … v_{ℓ+1} w v_1 v_k … v_{ℓ+2}`.
    WrapFirst,
    /// `v_ℓ … v_1 v_k w v_{ℓ+1} … v_{k-1}`.
    WrapSecond,
}

/// Extends `p` by the uncovered vertex `w`. Total on complete hosts.
pub fn augment(c: &TripleColouring, p: &BicolouredTightPath, w: usize) -> Result<BicolouredTightPath> {
    augment_with_case(c, p, w).map(|(path, _)| path)
}

pub fn augment_with_case(
    c: &TripleColouring,
    p: &BicolouredTightPath,
    w: usize,
) -> Result<(BicolouredTightPath, AugmentCase)> {
    if w >= c.n() {
        return Err(Error::Precondition(format!(
            "vertex {w} out of range for n = {}",
            c.n()
        )));
    }
    if p.vertices.contains(&w) {
        return Err(Error::Precondition(format!("vertex {w} already on the path")));
    }
    let k = p.len();
    if k <= 2 || p.is_monochromatic() {
        let mut seq = Vec::with_capacity(k + 1);
        seq.extend_from_slice(&p.vertices);
        seq.push(w);
        return finish(c, seq, k, AugmentCase::Append);
    }

    // Normalise so that v_ℓ v_{ℓ+1} w has the first-run colour: reversing
    // moves the turning point to v_{ℓ+1} and swaps the run colours.
    let v = &p.vertices;
    let forward = c.colour(v[p.turn - 1], v[p.turn], w) == p.first;
    let (u, l, first): (Vec<usize>, usize, Colour) = if forward {
        (v.clone(), p.turn, p.first)
    } else {
        (v.iter().rev().copied().collect(), k - p.turn, p.first.opposite())
    };
    let second = first.opposite();
    let at = |i: usize| u[i - 1];
    let range = |from: usize, to: usize| -> Vec<usize> {
        // inclusive, 1-based, either direction
        if from <= to {
            (from..=to).map(at).collect()
        } else {
            (to..=from).rev().map(at).collect()
        }
    };

    let mut seq = Vec::with_capacity(k + 1);
    let case = if c.colour(at(l + 1), w, at(l + 2)) == first {
        seq.extend(range(1, l + 1));
        seq.push(w);
        seq.extend(range(l + 2, k));
        AugmentCase::InsertAfterTurn
    } else if c.colour(at(1), w, at(l + 1)) == second {
        seq.extend(range(l, 1));
        seq.push(w);
        seq.extend(range(l + 1, k));
        AugmentCase::FoldFront
    } else if c.colour(at(l + 1), w, at(k)) == first {
        seq.extend(range(1, l + 1));
        seq.push(w);
        seq.extend(range(k, l + 2));
        AugmentCase::FoldBack
    } else if c.colour(at(1), w, at(k)) == first {
        seq.extend(range(2, l + 1));
        seq.push(w);
        seq.push(at(1));
        seq.extend(range(k, l + 2));
        AugmentCase::WrapFirst
    } else {
        seq.extend(range(l, 1));
        seq.push(at(k));
        seq.push(w);
        seq.extend(range(l + 1, k - 1));
        AugmentCase::WrapSecond
    };
    finish(c, seq, k, case)
}

fn finish(
    c: &TripleColouring,
    seq: Vec<usize>,
    old_len: usize,
    case: AugmentCase,
) -> Result<(BicolouredTightPath, AugmentCase)> {
    debug_assert_eq!(seq.len(), old_len + 1);
    let class = scan(c, &seq);
    BicolouredTightPath::from_class(seq, class)
        .map(|p| (p, case))
        .ok_or_else(|| Error::Internal(format!("augmentation case {case:?} produced more than two runs")))
}

/// Builds a spanning bicoloured tight path by augmenting with the smallest
/// uncovered vertex, starting from vertex 0.
pub fn spanning_bicoloured_path(c: &TripleColouring) -> BicolouredTightPath {
    spanning_bicoloured_path_counted(c).0
}

/// As [`spanning_bicoloured_path`], also returning the number of augment calls.
pub fn spanning_bicoloured_path_counted(c: &TripleColouring) -> (BicolouredTightPath, usize) {
    let n = c.n();
    let mut path = BicolouredTightPath {
        vertices: Vec::new(),
        turn: 0,
        first: Colour::Red,
    };
    if n == 0 {
        return (path, 0);
    }
    path.vertices.push(0);
    let mut calls = 0;
    for w in 1..n {
        path = augment(c, &path, w).expect("augmentation is total on complete hosts");
        calls += 1;
    }
    (path, calls)
}

/// Two vertex-disjoint monochromatic tight paths of distinct colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoMonoPaths {
    pub first: Vec<usize>,
    pub first_colour: Colour,
    pub second: Vec<usize>,
    pub second_colour: Colour,
}

/// Cuts a spanning bicoloured path after `v_{ℓ+1}`. For paths with at least
/// six vertices the cut moves back by one or two places when that is needed
/// to give both parts an edge (or leave them empty).
pub fn split_into_two_mono(c: &TripleColouring, b: &BicolouredTightPath) -> Result<TwoMonoPaths> {
    let k = b.len();
    if k != c.n() {
        return Err(Error::Precondition(format!(
            "path has {k} vertices but the host has {}",
            c.n()
        )));
    }
    let class = classify_tight_path(c, &b.vertices)?;
    if class == TightPathClass::Invalid {
        return Err(Error::Precondition("path has more than two colour runs".into()));
    }
    let l = b.turn;
    let ok_size = |s: usize| s == 0 || s >= 3;
    let cut = if b.is_monochromatic() {
        k
    } else if k >= 6 {
        [l + 1, l, l - 1]
            .into_iter()
            .find(|&j| ok_size(j) && ok_size(k - j))
            .unwrap_or(l + 1)
    } else {
        l + 1
    };
    Ok(TwoMonoPaths {
        first: b.vertices[..cut].to_vec(),
        first_colour: b.first,
        second: b.vertices[cut..].to_vec(),
        second_colour: b.first.opposite(),
    })
}

/// Partition of the vertices into two monochromatic tight paths of distinct colours.
pub fn partition_two_tight_paths(c: &TripleColouring) -> Result<PartitionCertificate> {
    let b = spanning_bicoloured_path(c);
    let two = split_into_two_mono(c, &b)?;
    Ok(PartitionCertificate::new(
        format!("h3 {}", c.n()),
        vec![
            Piece::path(two.first_colour, two.first),
            Piece::path(two.second_colour, two.second),
        ],
    ))
}
