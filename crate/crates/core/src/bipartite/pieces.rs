use super::classify::{classify_bipartite, Classification};
use super::{host_tag, zigzag};
use crate::certificate::{PartitionCertificate, Piece, PieceKind};
use crate::colour::Colour;
use crate::colouring::PairColouring;
use crate::error::{Error, Result};
use crate::split::SplitStructure;

/// `0, n, 1, n+1, …`: a Hamilton cycle of `K_{n,n}`.
pub fn mono_hamilton_cycle(n: usize) -> Vec<usize> {
    (0..n).flat_map(|i| [i, n + i]).collect()
}

fn globals(n: usize, s: &SplitStructure) -> [Vec<usize>; 4] {
    [
        s.a1.clone(),
        s.a2.clone(),
        s.b1.iter().map(|b| n + b).collect(),
        s.b2.iter().map(|b| n + b).collect(),
    ]
}

/// Longest zig-zag path in the complete bipartite graph between `l` and
/// `r`, and the unused vertices of each side.
fn block_path(l: &[usize], r: &[usize]) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let m = l.len().min(r.len());
    let mut p = zigzag(&l[..m], &r[..m]);
    let (mut rest_l, mut rest_r) = (l[m..].to_vec(), r[m..].to_vec());
    if !rest_l.is_empty() {
        p.push(rest_l.remove(0));
    } else if !rest_r.is_empty() {
        p.insert(0, rest_r.remove(0));
    }
    (p, rest_l, rest_r)
}

fn checked(c: &PairColouring, s: &SplitStructure) -> Result<()> {
    if !s.verify(c) {
        return Err(Error::Precondition(
            "split structure does not match the colouring".into(),
        ));
    }
    Ok(())
}

fn cert(c: &PairColouring, pieces: Vec<Piece>) -> PartitionCertificate {
    PartitionCertificate::new(host_tag(c), pieces.into_iter().filter(|p| !p.is_empty()).collect())
}

/// At most three monochromatic paths covering a split colouring: the two
/// red blocks each take a longest path and the surplus of the larger sides
/// is joined by a blue path.
pub fn split_three_paths(c: &PairColouring, s: &SplitStructure) -> Result<PartitionCertificate> {
    checked(c, s)?;
    let [a1, a2, b1, b2] = globals(c.n(), s);
    let (p1, rest_a1, rest_b1) = block_path(&a1, &b1);
    let (p2, rest_a2, rest_b2) = block_path(&a2, &b2);
    // |A1| - |B1| = |B2| - |A2|, so the surpluses lie in one blue block
    let p3 = if rest_a1.is_empty() {
        zigzag(&rest_a2, &rest_b1)
    } else {
        zigzag(&rest_a1, &rest_b2)
    };
    Ok(cert(
        c,
        vec![
            Piece::path(Colour::Red, p1),
            Piece::path(Colour::Red, p2),
            Piece::path(Colour::Blue, p3),
        ],
    ))
}

/// Three monochromatic cycles covering a split colouring: a balanced cycle
/// in each red block and one in the blue block holding what is left.
pub fn split_three_cycles(c: &PairColouring, s: &SplitStructure) -> Result<PartitionCertificate> {
    checked(c, s)?;
    let [a1, a2, b1, b2] = globals(c.n(), s);
    let m1 = a1.len().min(b1.len());
    let m2 = a2.len().min(b2.len());
    let blue = if a1.len() >= b1.len() {
        zigzag(&a1[m1..], &b2[m2..])
    } else {
        zigzag(&a2[m2..], &b1[m1..])
    };
    Ok(cert(
        c,
        vec![
            Piece::cycle(Colour::Red, zigzag(&a1[..m1], &b1[..m1])),
            Piece::cycle(Colour::Red, zigzag(&a2[..m2], &b2[..m2])),
            Piece::cycle(Colour::Blue, blue),
        ],
    ))
}

/// [`split_three_cycles`] with the blue cycle opened into a path (or, when
/// that cycle is empty, the second red cycle).
pub fn split_path_and_two_cycles(c: &PairColouring, s: &SplitStructure) -> Result<PartitionCertificate> {
    let mut cert = split_three_cycles(c, s)?;
    if let Some(last) = cert.pieces.last_mut() {
        last.kind = PieceKind::Path;
    }
    Ok(cert)
}

/// Two monochromatic cycles of distinct colours covering a V-coloured (or
/// monochromatic) `K_{n,n}`.
pub fn v_two_cycles(c: &PairColouring) -> Result<PartitionCertificate> {
    let n = c.n();
    match classify_bipartite(c)? {
        Classification::Mono(colour) => Ok(cert(c, vec![Piece::cycle(colour, mono_hamilton_cycle(n))])),
        Classification::VCol(s) => {
            let global = |class: usize, x: usize| if class == 0 { x } else { n + x };
            let mixed: Vec<usize> = (0..n).map(|i| global(s.mixed_class, i)).collect();
            let side = |xs: &[usize]| xs.iter().map(|&x| global(1 - s.mixed_class, x)).collect::<Vec<_>>();
            let p = s.red_side.len();
            Ok(cert(
                c,
                vec![
                    Piece::cycle(Colour::Red, zigzag(&mixed[..p], &side(&s.red_side))),
                    Piece::cycle(Colour::Blue, zigzag(&mixed[p..], &side(&s.blue_side))),
                ],
            ))
        }
        _ => Err(Error::Precondition("colouring is not a V-colouring".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::check_certificate;
    use crate::colouring::Colouring;
    use crate::generate::{gen_split_bipartite, gen_v_colouring};

    #[test]
    fn split_constructions_check_out() {
        for n in 2..8 {
            for a1 in 1..n {
                for b1 in 1..n {
                    let (c, s) = gen_split_bipartite(n, a1, b1).unwrap();
                    let host = Colouring::from(c.clone());
                    for cert in [
                        split_three_paths(&c, &s).unwrap(),
                        split_three_cycles(&c, &s).unwrap(),
                        split_path_and_two_cycles(&c, &s).unwrap(),
                    ] {
                        assert_eq!(check_certificate(&host, &cert), Ok(()), "{n} {a1} {b1} {cert:?}");
                        assert!(cert.pieces.len() <= 3);
                    }
                }
            }
        }
    }

    #[test]
    fn v_cycles() {
        let c = gen_v_colouring(2, 1).unwrap();
        let cert = v_two_cycles(&c).unwrap();
        assert_eq!(cert.pieces.len(), 2);
        assert!(cert.pieces.iter().all(|p| p.vertices.len() == 2));
        for cut in 1..4 {
            let c = gen_v_colouring(4, cut).unwrap();
            let cert = v_two_cycles(&c).unwrap();
            assert_eq!(check_certificate(&Colouring::from(c), &cert), Ok(()));
        }
    }
}
