//! Canonical edge orderings.
//!
//! Triples and pairs of `[n]` are ordered colexicographically, bipartite
//! edges `(a, b)` row-major as `a * n + b`, and transversal edges of the
//! `r`-partite host by the mixed-radix number whose most significant digit is
//! the class-0 vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Host shape of a colouring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    /// Complete 3-uniform hypergraph on `n` vertices.
    Triples(usize),
    /// Complete graph on `n` vertices.
    Complete(usize),
    /// Complete bipartite graph with `n` vertices per class.
    Bipartite(usize),
    /// Complete balanced `r`-partite `r`-uniform hypergraph, `n` per class.
    Transversal { r: usize, n: usize },
}

impl Shape {
    pub fn edge_count(&self) -> usize {
        match *self {
            Shape::Triples(n) => binomial(n, 3),
            Shape::Complete(n) => binomial(n, 2),
            Shape::Bipartite(n) => n * n,
            Shape::Transversal { r, n } => n.checked_pow(r as u32).unwrap_or(usize::MAX),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Shape::Triples(n) | Shape::Complete(n) => n,
            Shape::Bipartite(n) => 2 * n,
            Shape::Transversal { r, n } => r * n,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Shape::Triples(n) => write!(f, "K3_{n}"),
            Shape::Complete(n) => write!(f, "K_{n}"),
            Shape::Bipartite(n) => write!(f, "K_{n},{n}"),
            Shape::Transversal { r, n } => write!(f, "K{r}_{r}x{n}"),
        }
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Colex rank of the triple `{a, b, c}`; arguments may come in any order.
#[inline]
pub fn triple_index(a: usize, b: usize, c: usize) -> usize {
    let (mut x, mut y, mut z) = (a, b, c);
    if x > y {
        std::mem::swap(&mut x, &mut y);
    }
    if y > z {
        std::mem::swap(&mut y, &mut z);
    }
    if x > y {
        std::mem::swap(&mut x, &mut y);
    }
    x + y * (y - 1) / 2 + z * (z - 1) * (z - 2) / 6
}

/// Colex rank of the pair `{a, b}`.
#[inline]
pub fn pair_index(a: usize, b: usize) -> usize {
    let (x, y) = if a < b { (a, b) } else { (b, a) };
    x + y * (y - 1) / 2
}

#[inline]
pub fn bipartite_index(n: usize, a: usize, b: usize) -> usize {
    a * n + b
}

/// Inverse of [`triple_index`]: the sorted triple of colex rank `idx`.
pub fn triple_at(mut idx: usize) -> [usize; 3] {
    let mut c = 2;
    while binomial(c + 1, 3) <= idx {
        c += 1;
    }
    idx -= binomial(c, 3);
    let mut b = 1;
    while binomial(b + 1, 2) <= idx {
        b += 1;
    }
    idx -= binomial(b, 2);
    [idx, b, c]
}

/// Inverse of [`pair_index`].
pub fn pair_at(mut idx: usize) -> [usize; 2] {
    let mut b = 1;
    while binomial(b + 1, 2) <= idx {
        b += 1;
    }
    idx -= binomial(b, 2);
    [idx, b]
}

fn distinct(edge: &[usize]) -> bool {
    edge.iter().enumerate().all(|(i, x)| !edge[..i].contains(x))
}

/// Ordinal of `edge` in the canonical order of `shape`.
///
/// Bipartite and transversal edges are given class by class with
/// class-local vertex indices.
pub fn edge_index(shape: Shape, edge: &[usize]) -> Result<usize> {
    let bad = || Error::InvalidEdge {
        host: shape.to_string(),
        edge: edge.to_vec(),
    };
    match shape {
        Shape::Triples(n) => {
            if edge.len() != 3 || !distinct(edge) || edge.iter().any(|&v| v >= n) {
                return Err(bad());
            }
            Ok(triple_index(edge[0], edge[1], edge[2]))
        }
        Shape::Complete(n) => {
            if edge.len() != 2 || edge[0] == edge[1] || edge.iter().any(|&v| v >= n) {
                return Err(bad());
            }
            Ok(pair_index(edge[0], edge[1]))
        }
        Shape::Bipartite(n) => {
            if edge.len() != 2 || edge.iter().any(|&v| v >= n) {
                return Err(bad());
            }
            Ok(bipartite_index(n, edge[0], edge[1]))
        }
        Shape::Transversal { r, n } => {
            if edge.len() != r || edge.iter().any(|&v| v >= n) {
                return Err(bad());
            }
            Ok(edge.iter().fold(0usize, |acc, &x| acc * n + x))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples() {
        assert_eq!(edge_index(Shape::Triples(5), &[0, 1, 2]).unwrap(), 0);
        assert_eq!(edge_index(Shape::Triples(5), &[2, 3, 4]).unwrap(), 9);
        assert_eq!(edge_index(Shape::Bipartite(3), &[2, 1]).unwrap(), 7);
        assert_eq!(edge_index(Shape::Transversal { r: 3, n: 2 }, &[1, 0, 1]).unwrap(), 5);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(edge_index(Shape::Triples(5), &[0, 0, 2]).is_err());
        assert!(edge_index(Shape::Triples(5), &[0, 1, 5]).is_err());
        assert!(edge_index(Shape::Complete(4), &[3, 3]).is_err());
        assert!(edge_index(Shape::Bipartite(3), &[3, 0]).is_err());
        assert!(edge_index(Shape::Transversal { r: 3, n: 2 }, &[0, 1]).is_err());
    }

    #[test]
    fn colex_is_a_bijection() {
        let n = 8;
        let mut seen = vec![false; binomial(n, 3)];
        for c in 0..n {
            for b in 0..c {
                for a in 0..b {
                    let i = triple_index(c, a, b);
                    assert!(!seen[i]);
                    seen[i] = true;
                    assert_eq!(triple_at(i), [a, b, c]);
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
        let mut seen = vec![false; binomial(n, 2)];
        for b in 0..n {
            for a in 0..b {
                let i = pair_index(b, a);
                assert!(!seen[i]);
                seen[i] = true;
                assert_eq!(pair_at(i), [a, b]);
            }
        }
        assert!(seen.iter().all(|&s| s));
    }
}
