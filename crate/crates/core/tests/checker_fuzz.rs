//! Corrupted certificates against a straightforward reference checker.

use monopart::bipartite::partition_path_cycle;
use monopart::generate::{random_pairs, random_triples};
use monopart::three_colour::partition3_bipartite;
use monopart::tight_path::partition_two_tight_paths;
use monopart::{check_certificate, Colour, Colouring, PairShape, PartitionCertificate, PieceKind};
use proptest::prelude::*;

/// Accepts exactly the certificates whose pieces partition the vertex set
/// into paths and cycles whose edges (tight windows for triples) exist and
/// carry the declared colour.
fn reference_ok(c: &Colouring, cert: &PartitionCertificate) -> bool {
    let total = c.vertex_count();
    let mut all: Vec<usize> = cert.pieces.iter().flat_map(|p| p.vertices.clone()).collect();
    all.sort_unstable();
    if all != (0..total).collect::<Vec<_>>() || cert.pieces.iter().any(|p| !p.colour.in_palette(c.palette())) {
        return false;
    }
    cert.pieces.iter().all(|p| {
        let vs = &p.vertices;
        match c {
            Colouring::Triples(t) => {
                p.kind == PieceKind::Path && vs.windows(3).all(|w| t.colour(w[0], w[1], w[2]) == p.colour)
            }
            Colouring::Pairs(g) => {
                let edge_ok = |u: usize, v: usize| g.is_edge(u, v) && g.colour(u, v) == p.colour;
                let open = vs.windows(2).all(|w| edge_ok(w[0], w[1]));
                match p.kind {
                    PieceKind::Path => open,
                    PieceKind::Cycle if vs.len() <= 1 => true,
                    PieceKind::Cycle if vs.len() == 2 => open,
                    PieceKind::Cycle => open && edge_ok(vs[vs.len() - 1], vs[0]),
                }
            }
            Colouring::Transversal(_) => unreachable!(),
        }
    })
}

#[derive(Debug, Clone)]
enum Mutation {
    /// Overwrite one vertex entry with another vertex id.
    Replace {
        entry: usize,
        with: usize,
    },
    /// Exchange two vertex entries, possibly across pieces.
    Swap {
        a: usize,
        b: usize,
    },
    FlipColour {
        piece: usize,
        to: u8,
    },
    Delete {
        piece: usize,
    },
    ToggleKind {
        piece: usize,
    },
}

fn mutation() -> impl Strategy<Value = Mutation> {
    prop_oneof![
        (any::<usize>(), any::<usize>()).prop_map(|(entry, with)| Mutation::Replace { entry, with }),
        (any::<usize>(), any::<usize>()).prop_map(|(a, b)| Mutation::Swap { a, b }),
        (any::<usize>(), 1u8..3).prop_map(|(piece, to)| Mutation::FlipColour { piece, to }),
        any::<usize>().prop_map(|piece| Mutation::Delete { piece }),
        any::<usize>().prop_map(|piece| Mutation::ToggleKind { piece }),
    ]
}

fn entry_mut(cert: &mut PartitionCertificate, mut k: usize) -> &mut usize {
    let total: usize = cert.pieces.iter().map(|p| p.vertices.len()).sum();
    k %= total;
    for p in &mut cert.pieces {
        if k < p.vertices.len() {
            return &mut p.vertices[k];
        }
        k -= p.vertices.len();
    }
    unreachable!()
}

fn apply(cert: &PartitionCertificate, m: &Mutation, palette: u8, total: usize) -> PartitionCertificate {
    let mut out = cert.clone();
    let pieces = out.pieces.len();
    match *m {
        Mutation::Replace { entry, with } => *entry_mut(&mut out, entry) = with % (total + 1),
        Mutation::Swap { a, b } => {
            let x = *entry_mut(&mut out, a);
            let y = std::mem::replace(entry_mut(&mut out, b), x);
            *entry_mut(&mut out, a) = y;
        }
        Mutation::FlipColour { piece, to } => {
            let p = &mut out.pieces[piece % pieces];
            p.colour = Colour::from_index((p.colour.index() + to) % palette).unwrap();
        }
        Mutation::Delete { piece } => {
            out.pieces.remove(piece % pieces);
        }
        Mutation::ToggleKind { piece } => {
            let p = &mut out.pieces[piece % pieces];
            p.kind = match p.kind {
                PieceKind::Path => PieceKind::Cycle,
                PieceKind::Cycle => PieceKind::Path,
            };
        }
    }
    out
}

fn check_agreement(c: Colouring, cert: PartitionCertificate, m: &Mutation) -> Result<(), TestCaseError> {
    prop_assert_eq!(check_certificate(&c, &cert), Ok(()));
    prop_assert!(reference_ok(&c, &cert));
    let bad = apply(&cert, m, c.palette(), c.vertex_count());
    let verdict = check_certificate(&c, &bad);
    prop_assert_eq!(
        verdict.is_ok(),
        reference_ok(&c, &bad),
        "{:?} -> {:?}: {:?}",
        m,
        bad,
        verdict
    );
    Ok(())
}

proptest! {
    #[test]
    fn bipartite_two_colour(n in 1usize..8, seed: u64, m in mutation()) {
        let c = random_pairs(PairShape::Bipartite(n), 2, seed).unwrap();
        if let Some(cert) = partition_path_cycle(&c).unwrap().found() {
            check_agreement(c.into(), cert, &m)?;
        }
    }

    #[test]
    fn bipartite_three_colour(n in 1usize..7, seed: u64, m in mutation()) {
        let c = random_pairs(PairShape::Bipartite(n), 3, seed).unwrap();
        let cert = partition3_bipartite(&c).unwrap();
        check_agreement(c.into(), cert, &m)?;
    }

    #[test]
    fn triples(n in 1usize..12, seed: u64, m in mutation()) {
        let c = random_triples(n, seed);
        let cert = partition_two_tight_paths(&c).unwrap();
        check_agreement(c.into(), cert, &m)?;
    }

    #[test]
    fn deleting_a_nonempty_piece_is_caught(n in 1usize..8, seed: u64, k: usize) {
        let c = random_pairs(PairShape::Bipartite(n), 3, seed).unwrap();
        let mut cert = partition3_bipartite(&c).unwrap();
        cert.pieces.retain(|p| !p.is_empty());
        cert.pieces.remove(k % cert.pieces.len());
        prop_assert!(check_certificate(&c.into(), &cert).is_err());
    }
}

#[test]
fn off_colour_edge_is_named() {
    let c = Colouring::from(monopart::PairColouring::uniform(PairShape::Complete(3), 2, Colour::Red).unwrap());
    let mut cert = PartitionCertificate::new("kn 3", vec![monopart::Piece::path(Colour::Red, vec![0, 1, 2])]);
    assert_eq!(check_certificate(&c, &cert), Ok(()));
    cert.pieces[0].colour = Colour::Blue;
    let v = check_certificate(&c, &cert).unwrap_err();
    assert!(v.to_string().contains("monochromaticity"), "{v}");
}
