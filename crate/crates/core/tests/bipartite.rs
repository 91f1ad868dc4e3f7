use monopart::bipartite::*;
use monopart::generate::*;
use monopart::oracle::{good_c4_scan, oracle_partition_exists, ShapeSpec};
use monopart::{check_certificate, Colour, Colouring, PairColouring, PairShape, PartitionCertificate};
use proptest::prelude::*;

fn verified(c: &PairColouring, cert: &PartitionCertificate) -> Result<(), TestCaseError> {
    prop_assert_eq!(check_certificate(&Colouring::from(c.clone()), cert), Ok(()));
    Ok(())
}

fn distinct(cert: &PartitionCertificate) -> bool {
    let coloured: Vec<Colour> = cert
        .pieces
        .iter()
        .filter(|p| p.vertices.len() >= 2)
        .map(|p| p.colour)
        .collect();
    coloured.len() < 2 || coloured[0] != coloured[1]
}

fn spanning_ok(c: &PairColouring, sc: &SpanningCycle) -> bool {
    let mut vs = sc.vertices().to_vec();
    vs.sort_unstable();
    vs == (0..c.vertex_count()).collect::<Vec<_>>()
        && matches!(
            analyse_cycle(c, sc.vertices()),
            Ok(CycleShape::Mono(_) | CycleShape::Bicoloured(_) | CycleShape::Degenerate)
        )
}

/// A spanning bicoloured cycle that is not good, by trying orderings.
fn not_good_cycle(c: &PairColouring) -> Option<BicolouredCycle> {
    let n = c.n();
    let perms = |m: usize| {
        let mut out = vec![vec![]];
        for _ in 0..m {
            out = out
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (0..m)
                        .filter(|x| !p.contains(x))
                        .map(|x| [p.clone(), vec![x]].concat())
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        out
    };
    for left in perms(n).into_iter().filter(|p| p[0] == 0) {
        for right in perms(n) {
            let seq: Vec<usize> = (0..n).flat_map(|i| [left[i], n + right[i]]).collect();
            if let Ok(CycleShape::Bicoloured(b)) = analyse_cycle(c, &seq) {
                if !b.is_good() {
                    return Some(b);
                }
            }
        }
    }
    None
}

proptest! {
    #[test]
    fn path_and_cycle(n in 1usize..14, seed: u64) {
        let c = random_pairs(PairShape::Bipartite(n), 2, seed).unwrap();
        match partition_path_cycle(&c).unwrap() {
            Verdict::Found(cert) => {
                verified(&c, &cert)?;
                prop_assert!(cert.shape().within(1, 1) && distinct(&cert));
                let sc = spanning_bicoloured_or_mono_cycle(&c).unwrap().found().unwrap();
                prop_assert!(spanning_ok(&c, &sc));
            }
            Verdict::SplitDetected(s) => prop_assert!(s.verify(&c)),
        }
    }

    #[test]
    fn two_paths_then_back_to_a_cycle(n in 1usize..=6, seed: u64) {
        let c = random_pairs(PairShape::Bipartite(n), 2, seed).unwrap();
        if let Verdict::Found(cert) = two_paths(&c).unwrap() {
            verified(&c, &cert)?;
            prop_assert!(cert.shape().within(2, 0) && distinct(&cert));
            let sc = convert_paths_to_cycle(&c, &cert.pieces[0].vertices, &cert.pieces[1].vertices).unwrap();
            prop_assert!(spanning_ok(&c, &sc));
        }
    }

    #[test]
    fn split_colourings_are_detected(n in 2usize..12, a: usize, b: usize) {
        let (a1, b1) = (1 + a % (n - 1), 1 + b % (n - 1));
        let (c, s) = gen_split_bipartite(n, a1, b1).unwrap();
        prop_assert!(matches!(classify_bipartite(&c).unwrap(), Classification::Split(_)));
        let Verdict::SplitDetected(found) = partition_path_cycle(&c).unwrap() else {
            return Err(TestCaseError::fail("split colouring solved"));
        };
        prop_assert!(found.verify(&c));
        for (cert, p, cy) in [
            (split_three_paths(&c, &s).unwrap(), 3, 0),
            (split_three_cycles(&c, &s).unwrap(), 0, 3),
            (split_path_and_two_cycles(&c, &s).unwrap(), 1, 2),
        ] {
            verified(&c, &cert)?;
            prop_assert!(cert.shape().within(p, cy), "{}", cert.shape());
        }
    }

    #[test]
    fn v_colourings(n in 2usize..12, cut: usize) {
        let c = gen_v_colouring(n, 1 + cut % (n - 1)).unwrap();
        prop_assert!(matches!(classify_bipartite(&c).unwrap(), Classification::VCol(_)));
        prop_assert!(good_c4_scan(&c).unwrap().is_none());
        let cert = v_two_cycles(&c).unwrap();
        verified(&c, &cert)?;
        prop_assert!(cert.shape().within(0, 2));
        let found = partition_path_cycle(&c).unwrap().found().unwrap();
        verified(&c, &found)?;
    }

    #[test]
    fn recoloured_splits_have_good_c4(n in 2usize..9, a: usize, b: usize, e: usize) {
        let (a1, b1) = (1 + a % (n - 1), 1 + b % (n - 1));
        let (split, _) = gen_split_bipartite(n, a1, b1).unwrap();
        let reds: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| split.bip(x, y) == Colour::Red).collect();
        let c = gen_recoloured_split(n, a1, b1, reds[e % reds.len()]).unwrap();
        let Classification::Other(w) = classify_bipartite(&c).unwrap() else {
            return Err(TestCaseError::fail("recoloured split not classified Other"));
        };
        prop_assert!(w.is_good());
        prop_assert!(good_c4_scan(&c).unwrap().is_some());
        let cert = partition_path_cycle(&c).unwrap().found().unwrap();
        verified(&c, &cert)?;
    }

    #[test]
    fn oracle_agrees_on_small_hosts(n in 1usize..=5, seed: u64) {
        let c = random_pairs(PairShape::Bipartite(n), 2, seed).unwrap();
        let solver = partition_path_cycle(&c).unwrap();
        let oracle = oracle_partition_exists(&c, &ShapeSpec::path_and_cycle()).unwrap();
        if solver.found().is_some() {
            prop_assert!(oracle.is_some());
        }
    }

    #[test]
    fn extension_loop_is_bounded(n in 1usize..12, seed: u64) {
        let c = random_pairs(PairShape::Bipartite(n), 2, seed).unwrap();
        let (_, trace) = spanning_cycle_traced(&c).unwrap();
        prop_assert!(trace.extensions + trace.replacements <= 4 * n * n);
    }
}

#[test]
fn mono_host() {
    let c = PairColouring::uniform(PairShape::Bipartite(3), 2, Colour::Red).unwrap();
    let sc = spanning_bicoloured_or_mono_cycle(&c).unwrap().found().unwrap();
    assert_eq!(sc.vertices().len(), 6);
    let cert = partition_path_cycle(&c).unwrap().found().unwrap();
    assert_eq!(cert.shape().cycles, 1);
    assert_eq!(cert.shape().paths, 0);
}

#[test]
fn named_instances() {
    let (c, _) = gen_split_bipartite(4, 1, 2).unwrap();
    assert!(matches!(
        spanning_bicoloured_or_mono_cycle(&c).unwrap(),
        Verdict::SplitDetected(_)
    ));
    assert!(matches!(
        classify_bipartite(&gen_v_colouring(3, 1).unwrap()).unwrap(),
        Classification::VCol(_)
    ));
    let mut one = PairColouring::uniform(PairShape::Bipartite(1), 2, Colour::Blue).unwrap();
    let (p, colour) = near_mono_spanning_path(&one, &[0, 1]).unwrap();
    assert_eq!((p.len(), colour), (2, Colour::Blue));
    one.set(0, 1, Colour::Red).unwrap();
    assert_eq!(near_mono_spanning_path(&one, &[0, 1]).unwrap().1, Colour::Red);
}

#[test]
fn every_not_good_cycle_at_n3() {
    let mut inputs = 0;
    for index in 0..1 << 9 {
        let c = PairColouring::from_index(PairShape::Bipartite(3), 2, index);
        let Some(cyc) = not_good_cycle(&c) else { continue };
        inputs += 1;
        let cert = partition_path_cycle_coloured(&c, &cyc).unwrap();
        assert_eq!(check_certificate(&Colouring::from(c), &cert), Ok(()));
        for p in cert.pieces.iter().filter(|p| p.vertices.len() >= 2) {
            let want = if p.kind == monopart::PieceKind::Path {
                Colour::Red
            } else {
                Colour::Blue
            };
            assert_eq!(p.colour, want, "colouring {index}");
        }
    }
    assert!(inputs > 0);
}
