//! Split colourings of the complete balanced `r`-partite `r`-uniform
//! hypergraph and the lower bound on monochromatic tight-path covers.
//!
//! Class `i` vertex `x` has global id `i·n + x`. An edge is given by its
//! class-ordered tuple of local indices.

use std::collections::HashSet;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certificate::{PartitionCertificate, Piece};
use crate::colour::Colour;
use crate::colouring::{HyperSplitSizes, TransversalColouring};
use crate::error::{Error, Result};

/// Default bound on `r·n` for [`min_cover_exact`].
pub const COVER_CAP: usize = 14;

/// Colour of a transversal edge under the split rule.
pub fn edge_colour_split(sizes: &HyperSplitSizes, edge: &[usize]) -> Result<Colour> {
    if edge.len() != sizes.r() || edge.iter().any(|&x| x >= sizes.n()) {
        return Err(Error::InvalidEdge {
            host: format!("K{r}_{r}x{n}", r = sizes.r(), n = sizes.n()),
            edge: edge.to_vec(),
        });
    }
    Ok(sizes.colour_of(edge))
}

/// Whether `seq` (global ids) has distinct vertices and every `r`
/// consecutive vertices meet each class once.
pub fn validate_transversal_tight_path(r: usize, n: usize, seq: &[usize]) -> bool {
    let mut seen = HashSet::with_capacity(seq.len());
    if !seq.iter().all(|&v| v < r * n && seen.insert(v)) {
        return false;
    }
    // windows of a valid path repeat their class pattern with period r
    seq.len() < r
        || (seq[..r].iter().map(|&v| v / n).collect::<HashSet<_>>().len() == r
            && seq.iter().enumerate().skip(r).all(|(i, &v)| v / n == seq[i - r] / n))
}

fn edge_of(n: usize, window: &[usize]) -> Vec<usize> {
    let mut edge = vec![0; window.len()];
    for &v in window {
        edge[v / n] = v % n;
    }
    edge
}

/// Colour shared by all edges of a valid tight path, `None` when it has no
/// edge, or an error when it is invalid or not monochromatic.
fn path_colour(c: &TransversalColouring, seq: &[usize]) -> Result<Option<Colour>> {
    let (r, n) = (c.r(), c.n());
    if !validate_transversal_tight_path(r, n, seq) {
        return Err(Error::Precondition("not a transversal tight path".into()));
    }
    let mut colour = None;
    for w in seq.windows(r) {
        let e = c.colour(&edge_of(n, w));
        if *colour.get_or_insert(e) != e {
            return Err(Error::Precondition("path is not monochromatic".into()));
        }
    }
    Ok(colour)
}

/// Whether the monochromatic path `seq` keeps to one half of every class.
pub fn check_side_consistency(sizes: &HyperSplitSizes, seq: &[usize]) -> Result<bool> {
    path_colour(&TransversalColouring::rule(sizes.clone()), seq)?;
    let n = sizes.n();
    let mut halves = vec![[false; 2]; sizes.r()];
    for &v in seq {
        let (class, x) = (v / n, v % n);
        halves[class][usize::from(!sizes.in_first_part(class, x))] = true;
    }
    Ok(halves.iter().all(|h| !(h[0] && h[1])))
}

/// A random monochromatic tight path of a split colouring: a random class
/// rotation, then random extensions keeping the colour of the first edge,
/// stopping at `max_len` vertices or when stuck.
pub fn sample_mono_tight_path(sizes: &HyperSplitSizes, seed: u64, max_len: usize) -> Vec<usize> {
    let (r, n) = (sizes.r(), sizes.n());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut below = |k: usize| (rng.next_u64() % k as u64) as usize;
    let mut classes: Vec<usize> = (0..r).collect();
    for i in (1..r).rev() {
        classes.swap(i, below(i + 1));
    }
    let mut used = vec![false; r * n];
    let mut seq = Vec::new();
    let mut colour = None;
    while seq.len() < max_len.min(r * n) {
        let class = classes[seq.len() % r];
        let free: Vec<usize> = (0..n).map(|x| class * n + x).filter(|&v| !used[v]).collect();
        let fits = |v: usize, seq: &[usize]| -> Option<Colour> {
            if seq.len() + 1 < r {
                return None;
            }
            let mut w = seq[seq.len() + 1 - r..].to_vec();
            w.push(v);
            Some(sizes.colour_of(&edge_of(n, &w)))
        };
        let ok: Vec<usize> = free
            .into_iter()
            .filter(|&v| match (colour, fits(v, &seq)) {
                (Some(c), Some(e)) => c == e,
                _ => true,
            })
            .collect();
        if ok.is_empty() {
            break;
        }
        let v = ok[below(ok.len())];
        if colour.is_none() {
            colour = fits(v, &seq);
        }
        used[v] = true;
        seq.push(v);
    }
    seq
}

/// One displayed inequality `lhs (op) rhs` with `slack = rhs - lhs` (or
/// `lhs - rhs` for `>`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub label: String,
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
    pub slack: i128,
}

/// The arithmetic of the `r + 1` lower bound with `|V_i^1| = 3^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountingReport {
    pub r: usize,
    pub n: u128,
    /// `n ≥ 3^{r+2}`.
    pub hypotheses_met: bool,
    pub inequalities: Vec<Inequality>,
}

impl CountingReport {
    pub fn all_hold(&self) -> bool {
        self.hypotheses_met && self.inequalities.iter().all(|i| i.holds)
    }
}

fn pow3(e: usize) -> Result<u128> {
    3u128
        .checked_pow(e as u32)
        .ok_or_else(|| Error::InvalidParameters(format!("3^{e} overflows 128 bits")))
}

fn ineq(label: String, lhs: u128, rhs: u128, strict: bool) -> Inequality {
    let holds = if strict { lhs > rhs } else { lhs <= rhs };
    let slack = if strict {
        lhs as i128 - rhs as i128
    } else {
        rhs as i128 - lhs as i128
    };
    Inequality {
        label,
        lhs,
        rhs,
        holds,
        slack,
    }
}

/// Evaluates, with exact integers, `3^i > Σ_{j<i} 3^j + i − 1` for
/// `1 ≤ i ≤ r` and `Σ_{j≤r} 3^j + r ≤ 3^{r+2} − 3^r − 1 ≤ n − 3^r − 1`.
pub fn verify_counting(r: usize, n: u128) -> Result<CountingReport> {
    if r == 0 {
        return Err(Error::InvalidParameters("r must be positive".into()));
    }
    let threshold = pow3(r + 2)?;
    let mut inequalities = Vec::new();
    let mut prefix = 0u128; // Σ_{j<i} 3^j, from j = 1
    for i in 1..=r {
        let p = pow3(i)?;
        inequalities.push(ineq(
            format!("3^{i} > sum_{{j<{i}}} 3^j + {}", i - 1),
            p,
            prefix + i as u128 - 1,
            true,
        ));
        prefix += p;
    }
    let total = prefix + r as u128;
    let p_r = pow3(r)?;
    let middle = threshold - p_r - 1;
    inequalities.push(ineq(
        format!("sum_{{j<={r}}} 3^j + {r} <= 3^{} - 3^{r} - 1", r + 2),
        total,
        middle,
        false,
    ));
    let hypotheses_met = n >= threshold;
    let rhs = n.saturating_sub(p_r + 1);
    inequalities.push(ineq(
        format!("3^{} - 3^{r} - 1 <= n - 3^{r} - 1", r + 2),
        middle,
        rhs,
        false,
    ));
    Ok(CountingReport {
        r,
        n,
        hypotheses_met,
        inequalities,
    })
}

/// Vertex sets (bitmasks) spanned by some monochromatic transversal tight
/// path, with one colour that works. Paths with fewer than `r` vertices
/// have no edge and take any vertex set.
fn mono_path_sets(c: &TransversalColouring) -> Vec<Option<Colour>> {
    let (r, n) = (c.r(), c.n());
    let total = r * n;
    let mut ok: Vec<Option<Colour>> = vec![None; 1 << total];
    for mask in 0usize..1 << total {
        if (mask.count_ones() as usize) < r {
            ok[mask] = Some(Colour::Red);
        }
    }
    // depth-first over (set, last r-1 vertices, colour) states
    let mut seen: HashSet<(usize, Vec<usize>, Colour)> = HashSet::new();
    let mut stack: Vec<(usize, Vec<usize>, Option<Colour>)> = Vec::new();
    for start in 0..total {
        stack.push((1 << start, vec![start], None));
    }
    while let Some((mask, tail, colour)) = stack.pop() {
        if let Some(col) = colour {
            ok[mask].get_or_insert(col);
        }
        for v in 0..total {
            if mask & 1 << v != 0 {
                continue;
            }
            let class = v / n;
            // the class pattern is fixed once r vertices are placed
            let mut window = tail.clone();
            if tail.iter().any(|&u| u / n == class) {
                continue;
            }
            window.push(v);
            let (next_colour, keep) = if window.len() == r {
                let e = c.colour(&edge_of(n, &window));
                if colour.is_some_and(|col| col != e) {
                    continue;
                }
                (Some(e), window[1..].to_vec())
            } else {
                (colour, window)
            };
            let next = (mask | 1 << v, keep, next_colour);
            if let Some(col) = next.2 {
                if !seen.insert((next.0, next.1.clone(), col)) {
                    continue;
                }
            }
            stack.push(next);
        }
    }
    ok
}

/// Finds an ordering of `mask` that is a tight path of colour `colour`.
fn path_on(c: &TransversalColouring, mask: usize, colour: Colour) -> Option<Vec<usize>> {
    let (r, n) = (c.r(), c.n());
    let vs: Vec<usize> = (0..r * n).filter(|&v| mask & 1 << v != 0).collect();
    if vs.len() < r {
        return Some(vs);
    }
    fn go(
        c: &TransversalColouring,
        r: usize,
        n: usize,
        left: usize,
        seq: &mut Vec<usize>,
        colour: Colour,
        dead: &mut HashSet<(usize, Vec<usize>)>,
    ) -> bool {
        if left == 0 {
            return true;
        }
        let tail_start = seq.len().saturating_sub(r - 1);
        let key = (left, seq[tail_start..].to_vec());
        if dead.contains(&key) {
            return false;
        }
        for v in (0..r * n).filter(|&v| left & 1 << v != 0) {
            if seq[tail_start..].iter().any(|&u| u / n == v / n) {
                continue;
            }
            if seq.len() + 1 >= r {
                let mut w = seq[seq.len() + 1 - r..].to_vec();
                w.push(v);
                if c.colour(&edge_of(n, &w)) != colour {
                    continue;
                }
            }
            seq.push(v);
            if go(c, r, n, left & !(1 << v), seq, colour, dead) {
                return true;
            }
            seq.pop();
        }
        dead.insert(key);
        false
    }
    let mut seq = Vec::new();
    let mut dead = HashSet::new();
    go(c, r, n, mask, &mut seq, colour, &mut dead).then_some(seq)
}

/// Exact minimum number of disjoint monochromatic tight paths covering all
/// `r·n` vertices, with a witness. Refuses hosts with more than `cap`
/// vertices (at most 20).
pub fn min_cover_exact(c: &TransversalColouring, cap: usize) -> Result<(usize, PartitionCertificate)> {
    let (r, n) = (c.r(), c.n());
    let total = r * n;
    if total > cap.min(20) {
        return Err(Error::ExceedsCap(format!(
            "{total} vertices exceed the cover search bound {}",
            cap.min(20)
        )));
    }
    let ok = mono_path_sets(c);
    let full = (1usize << total) - 1;
    let mut best = vec![u8::MAX; 1 << total];
    let mut choice = vec![0usize; 1 << total];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // submasks of `rest`, each joined with the lowest vertex
        let mut sub = rest;
        loop {
            let piece = sub | low;
            if ok[piece].is_some() && best[mask ^ piece] != u8::MAX && best[mask ^ piece] + 1 < best[mask] {
                best[mask] = best[mask ^ piece] + 1;
                choice[mask] = piece;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut pieces = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let piece = choice[mask];
        let colour = ok[piece].unwrap();
        let seq = path_on(c, piece, colour).ok_or_else(|| Error::Internal("lost a cover piece".into()))?;
        pieces.push(Piece::path(colour, seq));
        mask ^= piece;
    }
    Ok((
        best[full] as usize,
        PartitionCertificate::new(format!("rxn {n} {r}"), pieces),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::check_certificate;
    use crate::colouring::Colouring;
    use crate::generate::gen_split_bipartite;

    #[test]
    fn parity_examples() {
        let s = HyperSplitSizes::new(3, vec![1, 1, 1]).unwrap();
        assert_eq!(edge_colour_split(&s, &[0, 0, 1]).unwrap(), Colour::Red);
        assert_eq!(edge_colour_split(&s, &[0, 1, 1]).unwrap(), Colour::Blue);
        let s2 = HyperSplitSizes::new(2, vec![1, 1]).unwrap();
        assert_eq!(edge_colour_split(&s2, &[0, 0]).unwrap(), Colour::Red);
        assert!(edge_colour_split(&s2, &[0]).is_err());
        assert!(edge_colour_split(&s2, &[0, 2]).is_err());
    }

    #[test]
    fn agrees_with_bipartite_split() {
        for n in 2..=5 {
            for a1 in 1..n {
                for b1 in 1..n {
                    let (c, _) = gen_split_bipartite(n, a1, b1).unwrap();
                    let s = HyperSplitSizes::new(n, vec![a1, b1]).unwrap();
                    for a in 0..n {
                        for b in 0..n {
                            assert_eq!(s.colour_of(&[a, b]), c.bip(a, b));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn path_validation() {
        // r = 3, n = 2: class i vertex x is 2i + x
        assert!(validate_transversal_tight_path(3, 2, &[0, 2, 4, 1, 3, 5]));
        assert!(!validate_transversal_tight_path(3, 2, &[0, 2, 3]));
        assert!(!validate_transversal_tight_path(3, 2, &[0, 2, 4, 0]));
        assert!(validate_transversal_tight_path(3, 2, &[0, 1]));
    }

    #[test]
    fn counting_examples() {
        let rep = verify_counting(2, 81).unwrap();
        assert!(rep.all_hold());
        assert_eq!((rep.inequalities[1].lhs, rep.inequalities[1].rhs), (9, 4));
        assert!(verify_counting(1, 27).unwrap().all_hold());
        assert!(verify_counting(10, 3u128.pow(12)).unwrap().all_hold());
        assert!(!verify_counting(2, 80).unwrap().hypotheses_met);
    }

    #[test]
    fn covers() {
        let mono = TransversalColouring::materialize(3, 2, 1 << 10, |_| Colour::Blue).unwrap();
        let (k, cert) = min_cover_exact(&mono, COVER_CAP).unwrap();
        assert_eq!(k, 1);
        assert_eq!(check_certificate(&Colouring::from(mono), &cert), Ok(()));
        let split = TransversalColouring::rule(HyperSplitSizes::new(4, vec![1, 2]).unwrap());
        // the blue blocks 1×2 and 3×2 each carry a spanning path
        let (k, cert) = min_cover_exact(&split, COVER_CAP).unwrap();
        assert_eq!(k, 2, "{cert:?}");
        assert_eq!(check_certificate(&Colouring::from(split), &cert), Ok(()));
    }

    #[test]
    fn sampled_paths_stay_on_one_side() {
        let s = HyperSplitSizes::new(5, vec![2, 3, 1]).unwrap();
        for seed in 0..200 {
            let p = sample_mono_tight_path(&s, seed, 15);
            assert!(check_side_consistency(&s, &p).unwrap());
        }
    }
}
