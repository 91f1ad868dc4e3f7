//! Three-coloured `K_n` and `K_{n,n}`: a red path plus balanced blue-green
//! complete bipartite blocks, each then handled by the two-colour engine.

use std::collections::HashSet;

use crate::bipartite::zigzag;
use crate::bipartite::{
    classify_bipartite, partition_path_cycle, split_path_and_two_cycles, split_three_cycles, v_two_cycles,
    Classification, Verdict,
};
use crate::certificate::{PartitionCertificate, Piece, ShapeSummary};
use crate::colour::Colour;
use crate::colouring::PairColouring;
use crate::error::{Error, Result};
use crate::split::SplitStructure;

/// Largest host (in vertices) the red-path searches accept.
pub const SEARCH_CAP: usize = 64;

/// A red path and a balanced complete bipartite graph `left × right` with
/// no red edge, partitioning the vertices of a 2-coloured `K_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma14 {
    pub path: Vec<usize>,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// A red path and two balanced complete bipartite graphs `a1 × a2` and
/// `b1 × b2` without red edges, partitioning a 2-coloured `K_{n,n}`.
/// `a1`, `b1` are class-0 and `a2`, `b2` class-1 global ids, and
/// `|a1| = |a2| ≤ |b1| = |b2|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma15 {
    pub path: Vec<usize>,
    pub a1: Vec<usize>,
    pub a2: Vec<usize>,
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
}

fn red_adjacency(c: &PairColouring) -> Vec<u64> {
    let total = c.vertex_count();
    (0..total)
        .map(|u| {
            (0..total)
                .filter(|&v| c.is_edge(u, v) && c.colour(u, v) == Colour::Red)
                .fold(0u64, |m, v| m | 1 << v)
        })
        .collect()
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Red components of the vertex set `t`.
fn red_components(adj: &[u64], t: u64) -> Vec<u64> {
    let mut left = t;
    let mut comps = Vec::new();
    while left != 0 {
        let mut comp = left & left.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |m, v| m | adj[v]) & t & !comp;
            comp |= next;
            frontier = next;
        }
        left &= !comp;
        comps.push(comp);
    }
    comps
}

/// A union of some of `comps` of total size `target`.
fn subset_sum(comps: &[u64], target: usize) -> Option<u64> {
    // reach[s] = Some((component index, previous sum)) for the first way to hit s
    let mut reach: Vec<Option<(usize, usize)>> = vec![None; target + 1];
    let mut hit = vec![false; target + 1];
    hit[0] = true;
    for (i, &comp) in comps.iter().enumerate() {
        let size = comp.count_ones() as usize;
        for s in (size..=target).rev() {
            if !hit[s] && hit[s - size] {
                hit[s] = true;
                reach[s] = Some((i, s - size));
            }
        }
    }
    if !hit[target] {
        return None;
    }
    let mut union = 0;
    let mut s = target;
    while s > 0 {
        let (i, prev) = reach[s].unwrap();
        union |= comps[i];
        s = prev;
    }
    Some(union)
}

/// Depth-first search over red paths (the empty path first, then paths
/// from each start vertex extended through increasing neighbours) for the
/// first one whose complement `accept` takes.
fn red_path_search<T>(adj: &[u64], mut accept: impl FnMut(&[usize], u64) -> Option<T>) -> Option<(Vec<usize>, T)> {
    let total = adj.len();
    let full = if total == 64 { u64::MAX } else { (1u64 << total) - 1 };
    if let Some(t) = accept(&[], full) {
        return Some((Vec::new(), t));
    }
    let mut seen: HashSet<(u64, usize)> = HashSet::new();
    for start in 0..total {
        let mut path = vec![start];
        // stack of remaining candidate extensions for each path position
        let mut stack = vec![adj[start] & !(1u64 << start)];
        let mut used = 1u64 << start;
        if seen.insert((used, start)) {
            if let Some(t) = accept(&path, full & !used) {
                return Some((path, t));
            }
        } else {
            continue;
        }
        while let Some(top) = stack.last_mut() {
            if *top == 0 {
                stack.pop();
                let v = path.pop().unwrap();
                used &= !(1u64 << v);
                continue;
            }
            let v = top.trailing_zeros() as usize;
            *top &= *top - 1;
            let next_used = used | 1u64 << v;
            if !seen.insert((next_used, v)) {
                continue;
            }
            path.push(v);
            used = next_used;
            if let Some(t) = accept(&path, full & !used) {
                return Some((path, t));
            }
            stack.push(adj[v] & !used);
        }
    }
    None
}

fn check_cap(c: &PairColouring) -> Result<()> {
    if c.vertex_count() > SEARCH_CAP {
        return Err(Error::ExceedsCap(format!(
            "red-path search handles at most {SEARCH_CAP} vertices, host has {}",
            c.vertex_count()
        )));
    }
    if c.palette() != 2 {
        return Err(Error::Precondition(format!(
            "palette {} given, 2 required",
            c.palette()
        )));
    }
    Ok(())
}

/// Red path plus blue balanced complete bipartite graph in a 2-coloured `K_n`.
pub fn lemma14_partition(c: &PairColouring) -> Result<Lemma14> {
    if c.is_bipartite() {
        return Err(Error::Precondition("host is not complete".into()));
    }
    check_cap(c)?;
    let adj = red_adjacency(c);
    let found = red_path_search(&adj, |_, t| {
        let size = t.count_ones() as usize;
        if size % 2 == 1 {
            return None;
        }
        let comps = red_components(&adj, t);
        subset_sum(&comps, size / 2).map(|left| (left, t & !left))
    });
    let (path, (left, right)) = found.ok_or_else(|| Error::Internal("red-path search exhausted".into()))?;
    Ok(Lemma14 {
        path,
        left: bits(left).collect(),
        right: bits(right).collect(),
    })
}

/// Red path plus two blue balanced complete bipartite graphs in a
/// 2-coloured `K_{n,n}`.
pub fn lemma15_partition(c: &PairColouring) -> Result<Lemma15> {
    if !c.is_bipartite() {
        return Err(Error::Precondition("host is not complete bipartite".into()));
    }
    check_cap(c)?;
    let n = c.n();
    let adj = red_adjacency(c);
    let class0: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let found = red_path_search(&adj, |path, t| {
        if path.len() % 2 == 1 {
            return None;
        }
        let size = t.count_ones() as usize;
        let comps = red_components(&adj, t);
        // components in `first` send class 0 to A1 and class 1 to B2
        let first = subset_sum(&comps, size / 2)?;
        let rest = t & !first;
        let (a1, b2) = (first & class0, first & !class0);
        let (b1, a2) = (rest & class0, rest & !class0);
        Some(if a1.count_ones() <= b1.count_ones() {
            [a1, a2, b1, b2]
        } else {
            [b1, b2, a1, a2]
        })
    });
    let (path, [a1, a2, b1, b2]) = found.ok_or_else(|| Error::Internal("red-path search exhausted".into()))?;
    Ok(Lemma15 {
        path,
        a1: bits(a1).collect(),
        a2: bits(a2).collect(),
        b1: bits(b1).collect(),
        b2: bits(b2).collect(),
    })
}

/// Red stays red; blue and green merge into blue.
fn merged(c: &PairColouring) -> Result<PairColouring> {
    c.map_colours(2, |x| if x == Colour::Red { Colour::Red } else { Colour::Blue })
}

/// A blue-green block `left × right` as a 2-colouring (blue as red, green
/// as blue) on local ids: `left[i]` is `i`, `right[j]` is `m + j`.
struct Block {
    left: Vec<usize>,
    right: Vec<usize>,
    local: PairColouring,
}

impl Block {
    fn new(c: &PairColouring, left: Vec<usize>, right: Vec<usize>) -> Result<Block> {
        let sub = c.bipartite_between(&left, &right)?;
        if sub.count(Colour::Red) != 0 {
            return Err(Error::Internal("red edge inside a blue-green block".into()));
        }
        let local = sub.map_colours(2, |x| if x == Colour::Blue { Colour::Red } else { Colour::Blue })?;
        Ok(Block { left, right, local })
    }

    fn m(&self) -> usize {
        self.left.len()
    }

    fn global(&self, v: usize) -> usize {
        if v < self.m() {
            self.left[v]
        } else {
            self.right[v - self.m()]
        }
    }

    fn lift(&self, cert: PartitionCertificate) -> Vec<Piece> {
        cert.pieces
            .into_iter()
            .filter(|p| !p.is_empty())
            .map(|p| Piece {
                kind: p.kind,
                colour: if p.colour == Colour::Red {
                    Colour::Blue
                } else {
                    Colour::Green
                },
                vertices: p.vertices.into_iter().map(|v| self.global(v)).collect(),
            })
            .collect()
    }

    /// Path and cycle when not split, three cycles when split.
    fn solve(&self) -> Result<Vec<Piece>> {
        if self.m() == 0 {
            return Ok(Vec::new());
        }
        Ok(match partition_path_cycle(&self.local)? {
            Verdict::Found(cert) => self.lift(cert),
            Verdict::SplitDetected(s) => self.lift(split_three_cycles(&self.local, &s)?),
        })
    }

    /// Path and cycle when not split, a path and two cycles when split.
    fn solve_with_path(&self) -> Result<Vec<Piece>> {
        if self.m() == 0 {
            return Ok(Vec::new());
        }
        Ok(match partition_path_cycle(&self.local)? {
            Verdict::Found(cert) => self.lift(cert),
            Verdict::SplitDetected(s) => self.lift(split_path_and_two_cycles(&self.local, &s)?),
        })
    }

    fn split(&self) -> Result<Option<SplitStructure>> {
        if self.m() == 0 {
            return Ok(None);
        }
        Ok(match classify_bipartite(&self.local)? {
            Classification::Split(s) => Some(s),
            _ => None,
        })
    }

    /// A path from `start` in local colour `z` inside the split block that
    /// uses up one part entirely and as many vertices of its `z`-partner,
    /// ending on the other side. Returns the path (global ids, starting at
    /// `start`) and the untouched vertices of each side.
    fn path_from(&self, s: &SplitStructure, start: usize, z: Colour) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let m = self.m();
        let local = (0..2 * m)
            .find(|&v| self.global(v) == start)
            .expect("start lies in the block");
        let left_parts = [&s.a1, &s.a2];
        let right_parts = [&s.b1, &s.b2];
        let (own, partner): (Vec<usize>, Vec<usize>) = if local < m {
            let i = usize::from(!s.a1.contains(&local));
            let j = if z == Colour::Red { i } else { 1 - i };
            (left_parts[i].clone(), right_parts[j].iter().map(|b| m + b).collect())
        } else {
            let j = usize::from(!s.b1.contains(&(local - m)));
            let i = if z == Colour::Red { j } else { 1 - j };
            (right_parts[j].iter().map(|b| m + b).collect(), left_parts[i].clone())
        };
        let own: Vec<usize> = std::iter::once(local)
            .chain(own.into_iter().filter(|&v| v != local))
            .collect();
        let k = own.len().min(partner.len());
        let path_local = zigzag(&own[..k], &partner[..k]);
        let mut used = vec![false; 2 * m];
        for &v in &path_local {
            used[v] = true;
        }
        let rest_left = (0..m).filter(|&v| !used[v]).map(|v| self.global(v)).collect();
        let rest_right = (m..2 * m).filter(|&v| !used[v]).map(|v| self.global(v)).collect();
        (
            path_local.into_iter().map(|v| self.global(v)).collect(),
            rest_left,
            rest_right,
        )
    }
}

fn tag(c: &PairColouring) -> String {
    let kind = if c.is_bipartite() { "b2" } else { "kn" };
    format!("{kind} {} 3", c.n())
}

fn require_three(c: &PairColouring) -> Result<()> {
    if c.palette() != 3 {
        return Err(Error::Precondition(format!(
            "palette {} given, 3 required",
            c.palette()
        )));
    }
    Ok(())
}

/// Two paths and a cycle, or a path and three cycles, covering a
/// 3-coloured `K_n`.
pub fn partition3_complete(c: &PairColouring) -> Result<PartitionCertificate> {
    require_three(c)?;
    if c.is_bipartite() {
        return Err(Error::Precondition("host is not complete".into()));
    }
    let l = lemma14_partition(&merged(c)?)?;
    let block = Block::new(c, l.left, l.right)?;
    let mut pieces = vec![Piece::path(Colour::Red, l.path)];
    pieces.extend(block.solve()?);
    pieces.retain(|p| !p.is_empty());
    Ok(PartitionCertificate::new(tag(c), pieces))
}

/// Three paths and two cycles, or two paths and four cycles, covering a
/// 3-coloured `K_{n,n}`.
pub fn partition3_bipartite(c: &PairColouring) -> Result<PartitionCertificate> {
    require_three(c)?;
    if !c.is_bipartite() {
        return Err(Error::Precondition("host is not complete bipartite".into()));
    }
    let l = lemma15_partition(&merged(c)?)?;
    let a = Block::new(c, l.a1.clone(), l.a2.clone())?;
    let b = Block::new(c, l.b1.clone(), l.b2.clone())?;
    let mut pieces = vec![Piece::path(Colour::Red, l.path)];
    match (a.split()?, b.split()?) {
        (Some(sa), Some(sb)) => {
            let cross =
                l.a1.iter()
                    .flat_map(|&x| l.b2.iter().map(move |&y| (x, y)))
                    .chain(l.a2.iter().flat_map(|&x| l.b1.iter().map(move |&y| (x, y))))
                    .find(|&(x, y)| c.colour(x, y) != Colour::Red);
            if let Some((x, y)) = cross {
                let z = c.colour(x, y);
                let z_local = if z == Colour::Blue { Colour::Red } else { Colour::Blue };
                let (pa, ra_left, ra_right) = a.path_from(&sa, x, z_local);
                let (pb, rb_left, rb_right) = b.path_from(&sb, y, z_local);
                let joined: Vec<usize> = pa.into_iter().rev().chain(pb).collect();
                pieces.push(Piece::path(z, joined));
                for (left, right) in [(ra_left, ra_right), (rb_left, rb_right)] {
                    let rest = Block::new(c, left, right)?;
                    if rest.m() > 0 {
                        pieces.extend(rest.lift(v_two_cycles(&rest.local)?));
                    }
                }
            } else {
                // A1-B2 and A2-B1 are complete red: two red cycles cover A
                let k = l.a1.len();
                pieces.push(Piece::cycle(Colour::Red, zigzag(&l.a1, &l.b2[..k])));
                pieces.push(Piece::cycle(Colour::Red, zigzag(&l.b1[..k], &l.a2)));
                let rest = Block::new(c, l.b1[k..].to_vec(), l.b2[k..].to_vec())?;
                pieces.extend(rest.solve_with_path()?);
            }
        }
        _ => {
            pieces.extend(a.solve()?);
            pieces.extend(b.solve()?);
        }
    }
    pieces.retain(|p| !p.is_empty());
    Ok(PartitionCertificate::new(tag(c), pieces))
}

/// Whether the nonempty pieces fit within two paths and a cycle, or a
/// path and three cycles.
pub fn complete_shape_ok(s: ShapeSummary) -> bool {
    s.within(2, 1) || s.within(1, 3)
}

/// Whether the nonempty pieces fit within three paths and two cycles, or
/// two paths and four cycles.
pub fn bipartite_shape_ok(s: ShapeSummary) -> bool {
    s.within(3, 2) || s.within(2, 4)
}

/// Checks a [`Lemma14`] against a 2-colouring of `K_n`.
pub fn verify_lemma14(c: &PairColouring, l: &Lemma14) -> bool {
    let total = c.vertex_count();
    let mut seen = vec![false; total];
    let all = l.path.iter().chain(&l.left).chain(&l.right);
    for &v in all {
        if v >= total || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    seen.iter().all(|&s| s)
        && l.left.len() == l.right.len()
        && l.path.windows(2).all(|w| c.colour(w[0], w[1]) == Colour::Red)
        && l.left
            .iter()
            .all(|&u| l.right.iter().all(|&v| c.colour(u, v) != Colour::Red))
}

/// Checks a [`Lemma15`] against a 2-colouring of `K_{n,n}`.
pub fn verify_lemma15(c: &PairColouring, l: &Lemma15) -> bool {
    let total = c.vertex_count();
    let mut seen = vec![false; total];
    for &v in l.path.iter().chain(&l.a1).chain(&l.a2).chain(&l.b1).chain(&l.b2) {
        if v >= total || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    let in_class = |vs: &[usize], class: usize| vs.iter().all(|&v| c.class_of(v) == class);
    let no_red = |xs: &[usize], ys: &[usize]| xs.iter().all(|&u| ys.iter().all(|&v| c.colour(u, v) != Colour::Red));
    seen.iter().all(|&s| s)
        && in_class(&l.a1, 0)
        && in_class(&l.b1, 0)
        && in_class(&l.a2, 1)
        && in_class(&l.b2, 1)
        && l.a1.len() == l.a2.len()
        && l.b1.len() == l.b2.len()
        && l.a1.len() <= l.b1.len()
        && l.path
            .windows(2)
            .all(|w| c.is_edge(w[0], w[1]) && c.colour(w[0], w[1]) == Colour::Red)
        && no_red(&l.a1, &l.a2)
        && no_red(&l.b1, &l.b2)
}
