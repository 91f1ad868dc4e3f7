use super::cycles::{analyse_cycle, as_spanning, BicolouredCycle, CycleShape, SpanningCycle};
use super::extend::spanning_bicoloured_or_mono_cycle;
use super::{host_tag, require_two_colour_bipartite, Verdict};
use crate::certificate::{PartitionCertificate, Piece, PieceKind};
use crate::colour::Colour;
use crate::colouring::PairColouring;
use crate::error::{Error, Result};

fn cert(c: &PairColouring, path: Piece, cycle: Piece) -> PartitionCertificate {
    PartitionCertificate::new(host_tag(c), vec![path, cycle])
}

fn slice(v: &[usize], from: usize, to: usize) -> Vec<usize> {
    // 1-based inclusive
    if from > to {
        Vec::new()
    } else {
        v[from - 1..to].to_vec()
    }
}

/// Partition into a monochromatic path and a monochromatic cycle of
/// distinct colours, or the split structure that rules one out.
pub fn partition_path_cycle(c: &PairColouring) -> Result<Verdict<PartitionCertificate>> {
    Ok(match spanning_bicoloured_or_mono_cycle(c)? {
        Verdict::SplitDetected(s) => Verdict::SplitDetected(s),
        Verdict::Found(sc) => Verdict::Found(partition_from_spanning(c, sc)?),
    })
}

/// Splits a spanning bicoloured or monochromatic cycle into a path and a
/// cycle, exchanging along chords while the cycle is not good.
pub fn partition_from_spanning(c: &PairColouring, sc: SpanningCycle) -> Result<PartitionCertificate> {
    let mut cy = match sc {
        SpanningCycle::Mono { colour, vertices } => {
            return Ok(cert(
                c,
                Piece::path(colour.opposite(), Vec::new()),
                Piece::cycle(colour, vertices),
            ))
        }
        SpanningCycle::Bicoloured(b) => b.with_first(Colour::Red),
    };
    let cap = 4 * c.n() * c.n();
    for _ in 0..=cap {
        let v = cy.vertices().to_vec();
        let (k, l) = (cy.len(), cy.turn());
        if cy.is_good() {
            return Ok(if c.colour(v[0], v[l - 1]) == Colour::Red {
                cert(
                    c,
                    Piece::path(Colour::Blue, slice(&v, l + 1, k)),
                    Piece::cycle(Colour::Red, slice(&v, 1, l)),
                )
            } else {
                let mut blue = slice(&v, l, k);
                blue.push(v[0]);
                cert(
                    c,
                    Piece::path(Colour::Red, slice(&v, 2, l - 1)),
                    Piece::cycle(Colour::Blue, blue),
                )
            });
        }
        if c.colour(v[0], v[l]) != Colour::Red {
            let mut blue = vec![v[0]];
            blue.extend(slice(&v, l + 1, k));
            return Ok(cert(
                c,
                Piece::path(Colour::Red, slice(&v, 2, l)),
                Piece::cycle(Colour::Blue, blue),
            ));
        }
        let mut seq = slice(&v, 1, l);
        seq.extend(v[l..].iter().rev());
        match analyse_cycle(c, &seq)? {
            CycleShape::Mono(Colour::Red) => {
                return Ok(cert(
                    c,
                    Piece::path(Colour::Blue, Vec::new()),
                    Piece::cycle(Colour::Red, seq),
                ))
            }
            CycleShape::Bicoloured(next) if next.count(Colour::Red) > cy.count(Colour::Red) => {
                cy = next.with_first(Colour::Red);
            }
            other => return Err(Error::Internal(format!("chord exchange produced {other:?}"))),
        }
    }
    Err(Error::Internal(format!("chord exchange exceeded {cap} iterations")))
}

/// Given a spanning bicoloured cycle whose turning points share a class,
/// a partition into a red path and a blue cycle.
pub fn partition_path_cycle_coloured(c: &PairColouring, cyc: &BicolouredCycle) -> Result<PartitionCertificate> {
    require_two_colour_bipartite(c)?;
    if cyc.len() != c.vertex_count() {
        return Err(Error::Precondition("cycle is not spanning".into()));
    }
    let mut cy = match analyse_cycle(c, cyc.vertices())? {
        CycleShape::Bicoloured(b) if !b.is_good() => b.with_first(Colour::Red),
        CycleShape::Bicoloured(_) => return Err(Error::Precondition("cycle is good".into())),
        _ => return Err(Error::Precondition("cycle is not bicoloured".into())),
    };
    let cap = 4 * c.n() * c.n();
    for _ in 0..=cap {
        let v = cy.vertices().to_vec();
        let (k, l) = (cy.len(), cy.turn());
        if c.colour(v[0], v[l]) == Colour::Blue {
            let mut blue = vec![v[0]];
            blue.extend(slice(&v, l + 1, k));
            return Ok(cert(
                c,
                Piece::path(Colour::Red, slice(&v, 2, l)),
                Piece::cycle(Colour::Blue, blue),
            ));
        }
        if c.colour(v[l - 1], v[k - 1]) == Colour::Blue {
            return Ok(cert(
                c,
                Piece::path(Colour::Red, slice(&v, 1, l - 1)),
                Piece::cycle(Colour::Blue, slice(&v, l, k)),
            ));
        }
        let mut seq = slice(&v, 1, l);
        seq.extend(v[l..].iter().rev());
        match analyse_cycle(c, &seq)? {
            CycleShape::Bicoloured(next) if !next.is_good() && next.count(Colour::Red) > cy.count(Colour::Red) => {
                cy = next.with_first(Colour::Red);
            }
            other => return Err(Error::Internal(format!("chord exchange produced {other:?}"))),
        }
    }
    Err(Error::Internal(format!("chord exchange exceeded {cap} iterations")))
}

/// Two monochromatic paths of distinct colours covering all vertices.
pub fn two_paths(c: &PairColouring) -> Result<Verdict<PartitionCertificate>> {
    Ok(partition_path_cycle(c)?.map(|mut cert| {
        for p in &mut cert.pieces {
            p.kind = PieceKind::Path;
        }
        cert
    }))
}

fn path_colour(c: &PairColouring, p: &[usize]) -> Result<Option<Colour>> {
    let mut colour = None;
    for w in p.windows(2) {
        if !c.is_edge(w[0], w[1]) {
            return Err(Error::Precondition(format!("{}-{} is not an edge", w[0], w[1])));
        }
        let e = c.colour(w[0], w[1]);
        if colour.get_or_insert(e) != &e {
            return Err(Error::Precondition("path is not monochromatic".into()));
        }
    }
    Ok(colour)
}

/// Joins two disjoint monochromatic paths of distinct colours covering all
/// vertices into a spanning cycle that is bicoloured or monochromatic.
pub fn convert_paths_to_cycle(c: &PairColouring, p1: &[usize], p2: &[usize]) -> Result<SpanningCycle> {
    require_two_colour_bipartite(c)?;
    let total = c.vertex_count();
    let mut seen = vec![false; total];
    for &v in p1.iter().chain(p2) {
        if v >= total || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition(format!("vertex {v} out of range or repeated")));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Precondition("paths do not cover every vertex".into()));
    }
    if let (Some(a), Some(b)) = (path_colour(c, p1)?, path_colour(c, p2)?) {
        if a == b {
            return Err(Error::Precondition("paths share a colour".into()));
        }
    }
    let (p1, p2) = if p1.len() < p2.len() { (p2, p1) } else { (p1, p2) };
    let mut candidates = vec![p1.iter().chain(p2).copied().collect::<Vec<usize>>()];
    if p2.len() >= 2 {
        candidates.push(p1.iter().chain(p2.iter().rev()).copied().collect());
    }
    candidates
        .into_iter()
        .find_map(|s| as_spanning(c, s))
        .ok_or_else(|| Error::Internal("no joining of the two paths closes up".into()))
}
