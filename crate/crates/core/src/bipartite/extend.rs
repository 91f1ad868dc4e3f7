use super::classify::{classify_bipartite, find_balanced_c4, first_good_c4, Classification};
use super::cycles::{analyse_cycle, as_bicoloured, as_spanning, BicolouredCycle, SpanningCycle};
use super::pieces::mono_hamilton_cycle;
use super::{by_class, require_two_colour_bipartite, zigzag, Verdict};
use crate::colour::Colour;
use crate::colouring::PairColouring;
use crate::error::{Error, Result};

/// A monochromatic spanning path of the subgraph induced by `subset`, which
/// must contain no balanced 4-cycle (so one colour has at most one edge).
///
/// The path has the majority colour. When the minority colour has exactly
/// one edge `xy` and each class has at least two vertices, the zig-zag puts
/// `x` first and `y` fourth so that they are not consecutive. With one
/// vertex per class the path is that single edge in its own colour.
pub fn near_mono_spanning_path(c: &PairColouring, subset: &[usize]) -> Result<(Vec<usize>, Colour)> {
    if let Some(q) = find_balanced_c4(c, subset)? {
        return Err(Error::Precondition(format!(
            "subset contains the balanced 4-cycle {q:?}"
        )));
    }
    let (mut left, mut right) = by_class(c, subset);
    let m = left.len();
    if m == 0 {
        return Ok((Vec::new(), Colour::Red));
    }
    if m == 1 {
        return Ok((vec![left[0], right[0]], c.colour(left[0], right[0])));
    }
    let mut blue = Vec::new();
    let mut reds = 0usize;
    for &a in &left {
        for &b in &right {
            if c.colour(a, b) == Colour::Blue {
                blue.push((a, b));
            } else {
                reds += 1;
            }
        }
    }
    let (majority, lone) = if blue.len() <= 1 {
        (Colour::Red, blue.first().copied())
    } else {
        debug_assert!(reds <= 1);
        let lone = left
            .iter()
            .flat_map(|&a| right.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| c.colour(a, b) == Colour::Red);
        (Colour::Blue, lone)
    };
    if let Some((x, y)) = lone {
        let xi = left.iter().position(|&a| a == x).unwrap();
        left.swap(0, xi);
        let yi = right.iter().position(|&b| b == y).unwrap();
        right.swap(1, yi);
    }
    Ok((zigzag(&left, &right), majority))
}

/// 1-based accessors into a cycle written `v_1 … v_k`.
struct Frame<'a> {
    v: &'a [usize],
}

impl Frame<'_> {
    fn at(&self, i: usize) -> usize {
        self.v[(i - 1) % self.v.len()]
    }

    /// `v_from … v_to` inclusive, increasing; empty when `from > to`.
    fn run(&self, from: usize, to: usize) -> impl Iterator<Item = usize> + '_ {
        (from..=to).map(|i| self.at(i))
    }
}

fn seq(parts: &[&dyn Fn(&mut Vec<usize>)]) -> Vec<usize> {
    let mut out = Vec::new();
    for p in parts {
        p(&mut out);
    }
    out
}

/// Given a good cycle `cyc` and a balanced 4-cycle `q` (as a vertex
/// sequence) disjoint from it, returns a strictly longer good cycle on
/// vertices of `cyc` and `q`.
///
/// Each representation of `cyc` from a turning point, together with each
/// labelling `x_1 y_2 y_1 x_2`-style of `q` that meets the normalisation
/// (`x_1x_2` and `v_1x_2` in the first-run colour, `y_1x_2` not), is walked
/// through the case tree. Every cycle the tree builds is tested and the
/// first good, longer one is returned.
pub fn extend_good_cycle(c: &PairColouring, cyc: &BicolouredCycle, q: &[usize]) -> Result<BicolouredCycle> {
    require_two_colour_bipartite(c)?;
    if !cyc.is_good() {
        return Err(Error::Precondition("cycle is not good".into()));
    }
    let balanced = q.len() == 4
        && analyse_cycle(c, q).is_ok()
        && (0..4)
            .filter(|&i| c.colour(q[i], q[(i + 1) % 4]) == Colour::Red)
            .count()
            == 2;
    if !balanced {
        return Err(Error::Precondition(format!("{q:?} is not a balanced 4-cycle")));
    }
    if q.iter().any(|v| cyc.vertices().contains(v)) {
        return Err(Error::Precondition("4-cycle meets the cycle".into()));
    }
    let k = cyc.len();
    for rep in cyc.representations() {
        let f = Frame { v: rep.vertices() };
        let first = rep.first_colour();
        let class1 = c.class_of(f.at(1));
        let (same, other): (Vec<usize>, Vec<usize>) = q.iter().partition(|&&v| c.class_of(v) == class1);
        for (x1, y1) in [(same[0], same[1]), (same[1], same[0])] {
            for (x2, y2) in [(other[0], other[1]), (other[1], other[0])] {
                let red = |a: usize, b: usize| c.colour(a, b) == first;
                if !(red(x1, x2) && !red(y1, x2) && red(f.at(1), x2)) {
                    continue;
                }
                let found = case_tree(c, &f, rep.turn(), [x1, y1, x2, y2], first)
                    .into_iter()
                    .find_map(|s| accept(c, s, k));
                if let Some(b) = found {
                    return Ok(b);
                }
            }
        }
    }
    Err(Error::Internal(format!(
        "no extension of the good {k}-cycle {:?} by {q:?}",
        cyc.vertices()
    )))
}

fn accept(c: &PairColouring, s: Vec<usize>, k: usize) -> Option<BicolouredCycle> {
    if s.len() <= k {
        return None;
    }
    as_bicoloured(c, &s).filter(|b| b.is_good())
}

/// Candidate cycles in the order the case analysis meets them. Colour
/// `first` plays the role of red. Branch conditions select the leaves; the
/// intermediate cycles are the ones whose failure to be good forces the
/// edge colours used further down.
fn case_tree(c: &PairColouring, f: &Frame, l: usize, [x1, y1, x2, y2]: [usize; 4], first: Colour) -> Vec<Vec<usize>> {
    let red = |a: usize, b: usize| c.colour(a, b) == first;
    let k = f.v.len();
    let v = |i: usize| f.at(i);
    let mut out: Vec<Vec<usize>> = Vec::new();
    let run = |a: usize, b: usize| move |o: &mut Vec<usize>| o.extend(f.run(a, b));
    let lit = |xs: Vec<usize>| move |o: &mut Vec<usize>| o.extend_from_slice(&xs);

    // v_1 x_2 x_1 v_k and v_1 x_2 x_1 v_2 detours
    out.push(seq(&[&run(1, k), &lit(vec![x1, x2])]));
    out.push(seq(&[&lit(vec![v(1), x2, x1]), &run(2, k)]));

    if red(y1, y2) && !red(x1, y2) {
        if red(v(1), y2) {
            out.push(seq(&[&run(1, k), &lit(vec![y1, y2])]));
            out.push(seq(&[&run(1, k), &lit(vec![x1, y2])]));
            out.push(seq(&[&run(1, k - 1), &lit(vec![y2, y1, v(k), x1, x2])]));
            out.push(seq(&[&run(1, k - 1), &lit(vec![y2, x1, x2])]));
        } else {
            if red(y1, v(l)) {
                out.push(seq(&[&run(1, l), &lit(vec![y1, y2]), &run(l + 1, k)]));
                out.push(seq(&[
                    &run(1, l),
                    &lit(vec![y1, y2]),
                    &run(l + 1, k),
                    &lit(vec![x1, x2]),
                ]));
            }
            out.push(seq(&[&run(1, l - 1), &lit(vec![x2, y1]), &run(l, k)]));
            out.push(seq(&[
                &lit(vec![v(1), y2, x1]),
                &run(2, l - 1),
                &lit(vec![x2, y1]),
                &run(l, k),
            ]));
        }
    } else {
        out.push(seq(&[&run(1, l - 1), &lit(vec![y2, y1]), &run(l, k)]));
        out.push(seq(&[
            &run(1, l - 1),
            &lit(vec![y2, y1]),
            &run(l, k),
            &lit(vec![x1, x2]),
        ]));
        out.push(seq(&[&run(1, k), &lit(vec![y1, x2])]));
        out.push(seq(&[
            &run(1, l),
            &lit(vec![y1, y2]),
            &run(l + 1, k),
            &lit(vec![x1, x2]),
        ]));
        let back: Vec<usize> = (l + 1..=k).rev().map(v).collect();
        out.push(seq(&[
            &run(1, l),
            &lit(vec![y1]),
            &lit(back.clone()),
            &lit(vec![y2, x1, x2]),
        ]));
        out.push(seq(&[
            &run(1, l - 1),
            &lit(vec![y2]),
            &run(l + 1, k),
            &lit(vec![x1, x2]),
        ]));
        if !red(x1, v(l)) {
            let back: Vec<usize> = (l..=k).rev().map(v).collect();
            out.push(seq(&[&lit(vec![x1]), &run(2, l - 1), &lit(vec![y2, y1]), &lit(back)]));
        } else {
            out.push(seq(&[
                &run(1, l),
                &lit(vec![x1, y2]),
                &run(l + 1, k),
                &lit(vec![y1, x2]),
            ]));
        }
    }
    out
}

fn done(trace: CycleTrace, s: SpanningCycle) -> Result<(Verdict<SpanningCycle>, CycleTrace)> {
    Ok((Verdict::Found(s), trace))
}

/// Loop counters of [`spanning_cycle_traced`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CycleTrace {
    /// Calls to [`extend_good_cycle`].
    pub extensions: usize,
    /// Cycle replacements in the attachment phase.
    pub replacements: usize,
}

/// A spanning cycle that is bicoloured or monochromatic, or the split
/// structure that rules one out.
pub fn spanning_bicoloured_or_mono_cycle(c: &PairColouring) -> Result<Verdict<SpanningCycle>> {
    spanning_cycle_traced(c).map(|(v, _)| v)
}

pub fn spanning_cycle_traced(c: &PairColouring) -> Result<(Verdict<SpanningCycle>, CycleTrace)> {
    require_two_colour_bipartite(c)?;
    let n = c.n();
    let mut trace = CycleTrace::default();
    if n == 0 {
        let empty = SpanningCycle::Mono {
            colour: Colour::Red,
            vertices: Vec::new(),
        };
        return Ok((Verdict::Found(empty), trace));
    }
    match classify_bipartite(c)? {
        Classification::Mono(colour) => {
            return done(
                trace,
                SpanningCycle::Mono {
                    colour,
                    vertices: mono_hamilton_cycle(n),
                },
            )
        }
        Classification::Split(s) => return Ok((Verdict::SplitDetected(s), trace)),
        Classification::VCol(s) => {
            let global = |class: usize, x: usize| if class == 0 { x } else { n + x };
            let mixed = s.mixed_class;
            let sides: Vec<usize> = s.red_side.iter().chain(&s.blue_side).copied().collect();
            let seq: Vec<usize> = (0..n)
                .flat_map(|i| [global(mixed, i), global(1 - mixed, sides[i])])
                .collect();
            let cyc = as_spanning(c, seq).ok_or_else(|| Error::Internal("V-colouring cycle".into()))?;
            return done(trace, cyc);
        }
        Classification::Other(_) => {}
    }

    let mut cyc = first_good_c4(c)?.ok_or_else(|| Error::Internal("no good 4-cycle in an Other colouring".into()))?;
    let complement = |cyc: &BicolouredCycle| -> Vec<usize> {
        let mut on = vec![false; 2 * n];
        for &v in cyc.vertices() {
            on[v] = true;
        }
        (0..2 * n).filter(|&v| !on[v]).collect()
    };
    while let Some(q) = find_balanced_c4(c, &complement(&cyc))? {
        let next = extend_good_cycle(c, &cyc, &q)?;
        if next.len() <= cyc.len() {
            return Err(Error::Internal("extension did not lengthen the cycle".into()));
        }
        cyc = next;
        trace.extensions += 1;
    }
    let rest = complement(&cyc);
    if rest.is_empty() {
        return done(trace, SpanningCycle::Bicoloured(cyc));
    }
    let (mut path, colour) = near_mono_spanning_path(c, &rest)?;
    let cap = 4 * n * n;
    loop {
        let cy = cyc.with_first(colour);
        let f = Frame { v: cy.vertices() };
        let (k, l) = (cy.len(), cy.turn());
        if c.class_of(path[0]) != c.class_of(f.at(1)) {
            path.reverse();
        }
        let (x1, xh) = (path[0], path[path.len() - 1]);
        let attached = if c.colour(x1, f.at(l)) == colour {
            Some(f.run(1, l).chain(path.iter().copied()).chain(f.run(l + 1, k)).collect())
        } else if c.colour(f.at(1), xh) == colour {
            Some(path.iter().copied().chain(f.run(1, k)).collect::<Vec<usize>>())
        } else {
            None
        };
        if let Some(seq) = attached {
            let cyc = as_spanning(c, seq).ok_or_else(|| Error::Internal("attachment is not bicoloured".into()))?;
            return done(trace, cyc);
        }
        let seq: Vec<usize> = std::iter::once(f.at(1))
            .chain(path.iter().rev().copied())
            .chain(f.run(l, k))
            .collect();
        let next = as_bicoloured(c, &seq)
            .filter(|b| b.is_good())
            .ok_or_else(|| Error::Internal("replacement cycle is not good".into()))?;
        let other = colour.opposite();
        if next.count(other) <= cy.count(other) {
            return Err(Error::Internal(
                "replacement did not add edges of the second colour".into(),
            ));
        }
        path = f.run(2, l - 1).collect();
        cyc = next;
        trace.replacements += 1;
        if path.is_empty() {
            return done(trace, SpanningCycle::Bicoloured(cyc));
        }
        if trace.replacements > cap {
            return Err(Error::Internal(format!("attachment loop exceeded {cap} iterations")));
        }
    }
}
