use monopart::colouring::{HyperSplitSizes, TransversalColouring};
use monopart::generate::gen_split_bipartite;
use monopart::multipartite::*;
use monopart::oracle::oracle_min_cover;
use monopart::{check_certificate, Colour, Colouring};
use proptest::prelude::*;

/// Every monochromatic transversal tight path of the split colouring, by
/// depth-first extension from every start vertex.
fn all_mono_paths(sizes: &HyperSplitSizes, mut visit: impl FnMut(&[usize])) {
    fn go(sizes: &HyperSplitSizes, seq: &mut Vec<usize>, colour: Option<Colour>, visit: &mut dyn FnMut(&[usize])) {
        visit(seq);
        let (r, n) = (sizes.r(), sizes.n());
        for v in 0..r * n {
            if seq.contains(&v) {
                continue;
            }
            seq.push(v);
            let k = seq.len();
            if validate_transversal_tight_path(r, n, seq) {
                let e = (k >= r).then(|| {
                    let mut edge = vec![0; r];
                    for &w in &seq[k - r..] {
                        edge[w / n] = w % n;
                    }
                    sizes.colour_of(&edge)
                });
                match (colour, e) {
                    (Some(c), Some(e)) if c != e => {}
                    _ => go(sizes, seq, colour.or(e), visit),
                }
            }
            seq.pop();
        }
    }
    go(sizes, &mut Vec::new(), None, &mut visit);
}

#[test]
fn side_consistency_exhaustive_small() {
    for (r, n) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let mut tuples = vec![vec![]];
        for _ in 0..r {
            tuples = tuples
                .into_iter()
                .flat_map(|t: Vec<usize>| (1..n).map(move |s| [t.clone(), vec![s]].concat()))
                .collect();
        }
        for s in tuples {
            let sizes = HyperSplitSizes::new(n, s).unwrap();
            let mut seen = 0usize;
            all_mono_paths(&sizes, |p| {
                // vacuous short paths may repeat a class; the one-sided
                // property is not claimed for them
                let mut classes: Vec<usize> = p.iter().map(|v| v / n).collect();
                classes.sort_unstable();
                classes.dedup();
                if p.len() < r && classes.len() < p.len() {
                    return;
                }
                seen += 1;
                assert!(check_side_consistency(&sizes, p).unwrap(), "{:?}: {p:?}", sizes.sizes());
            });
            assert!(seen > r * n);
        }
    }
}

#[test]
fn non_monochromatic_paths_are_errors() {
    let sizes = HyperSplitSizes::new(2, vec![1, 1]).unwrap();
    // (0,0) red, (0,1) blue: class 0 vertex 0, class 1 vertices 2 and 3
    assert!(check_side_consistency(&sizes, &[2, 0, 3]).is_err());
    assert!(check_side_consistency(&sizes, &[0]).unwrap());
}

#[test]
fn r2_covers_match_the_path_oracle() {
    for n in 2..=5 {
        for a1 in 1..n {
            for b1 in 1..n {
                let rule = TransversalColouring::rule(HyperSplitSizes::new(n, vec![a1, b1]).unwrap());
                let (k, cert) = min_cover_exact(&rule, COVER_CAP).unwrap();
                assert_eq!(check_certificate(&Colouring::from(rule), &cert), Ok(()));
                assert_eq!(cert.shape().total(), k);
                let (c, _) = gen_split_bipartite(n, a1, b1).unwrap();
                let (expect, _) = oracle_min_cover(&c, false).unwrap();
                assert_eq!(k, expect, "n={n} s=({a1},{b1})");
            }
        }
    }
}

#[test]
fn cover_examples() {
    let mono = TransversalColouring::materialize(3, 2, 1 << 10, |_| Colour::Red).unwrap();
    assert_eq!(min_cover_exact(&mono, COVER_CAP).unwrap().0, 1);
    let rule = TransversalColouring::rule(HyperSplitSizes::new(2, vec![1, 1]).unwrap());
    let first = min_cover_exact(&rule, COVER_CAP).unwrap();
    assert_eq!(min_cover_exact(&rule, COVER_CAP).unwrap(), first);
    let big = TransversalColouring::rule(HyperSplitSizes::new(5, vec![1, 2, 3]).unwrap());
    assert!(min_cover_exact(&big, COVER_CAP).is_err());
}

#[test]
fn counting_up_to_twelve() {
    for r in 1..=12 {
        let rep = verify_counting(r, 3u128.pow(r as u32 + 2)).unwrap();
        assert!(rep.all_hold(), "{rep:?}");
        assert_eq!(rep.inequalities.len(), r + 2);
    }
}

proptest! {
    #[test]
    fn parity_rule(sizes in proptest::collection::vec(1usize..6, 1..6), edge in proptest::collection::vec(0usize..6, 6)) {
        let s = HyperSplitSizes::new(6, sizes).unwrap();
        let edge = &edge[..s.r()];
        let hits = edge.iter().enumerate().filter(|&(i, &x)| x < s.sizes()[i]).count();
        let want = if hits % 2 == 0 { Colour::Red } else { Colour::Blue };
        prop_assert_eq!(edge_colour_split(&s, edge).unwrap(), want);
    }

    #[test]
    fn sampled_paths_are_valid_and_one_sided(r in 2usize..=4, n in 2usize..=9, seed: u64, raw in proptest::collection::vec(1usize..9, 4)) {
        let sizes = HyperSplitSizes::new(n, raw[..r].iter().map(|s| 1 + (s - 1) % (n - 1)).collect()).unwrap();
        let p = sample_mono_tight_path(&sizes, seed, r * n);
        prop_assert!(validate_transversal_tight_path(r, n, &p));
        prop_assert!(check_side_consistency(&sizes, &p).unwrap());
    }
}
