use monopart::generate::{gen_three_colour_split, random_pairs};
use monopart::three_colour::*;
use monopart::{check_certificate, Colour, Colouring, PairColouring, PairShape};
use proptest::prelude::*;

proptest! {
    #[test]
    fn complete_hosts(n in 1usize..16, seed: u64) {
        let c = random_pairs(PairShape::Complete(n), 3, seed).unwrap();
        let cert = partition3_complete(&c).unwrap();
        prop_assert_eq!(check_certificate(&Colouring::from(c), &cert), Ok(()));
        prop_assert!(complete_shape_ok(cert.shape()), "{}", cert.shape());
    }

    #[test]
    fn bipartite_hosts(n in 1usize..12, seed: u64) {
        let c = random_pairs(PairShape::Bipartite(n), 3, seed).unwrap();
        let cert = partition3_bipartite(&c).unwrap();
        prop_assert_eq!(check_certificate(&Colouring::from(c), &cert), Ok(()));
        prop_assert!(bipartite_shape_ok(cert.shape()), "{}", cert.shape());
    }

    #[test]
    fn three_colour_splits(a in proptest::collection::vec(1usize..4, 3), b in proptest::collection::vec(1usize..4, 3), k: usize) {
        // rebalance b so that both sides have the same size
        let total: usize = a.iter().sum();
        let mut b = [b[0], b[1], b[2]];
        while b.iter().sum::<usize>() < total { b[k % 3] += 1; }
        while b.iter().sum::<usize>() > total {
            let i = (0..3).find(|&i| b[i] > 1).unwrap();
            b[i] -= 1;
        }
        let c = gen_three_colour_split([a[0], a[1], a[2]], b).unwrap();
        let cert = partition3_bipartite(&c).unwrap();
        prop_assert_eq!(check_certificate(&Colouring::from(c), &cert), Ok(()));
        prop_assert!(bipartite_shape_ok(cert.shape()));
    }

    #[test]
    fn red_path_and_block_random(n in 0usize..40, seed: u64) {
        let c = random_pairs(PairShape::Complete(n), 2, seed).unwrap();
        let l = lemma14_partition(&c).unwrap();
        prop_assert!(verify_lemma14(&c, &l), "{:?}", l);
    }

    #[test]
    fn red_path_and_two_blocks_random(n in 0usize..24, seed: u64) {
        let c = random_pairs(PairShape::Bipartite(n), 2, seed).unwrap();
        let l = lemma15_partition(&c).unwrap();
        prop_assert!(verify_lemma15(&c, &l), "{:?}", l);
    }
}

#[test]
fn all_blue_k5() {
    let c = PairColouring::uniform(PairShape::Complete(5), 2, Colour::Blue).unwrap();
    let l = lemma14_partition(&c).unwrap();
    assert_eq!((l.path.len(), l.left.len(), l.right.len()), (1, 2, 2));
    assert!(verify_lemma14(&c, &l));
}

#[test]
fn palette_is_checked() {
    let two = random_pairs(PairShape::Bipartite(3), 2, 0).unwrap();
    assert!(partition3_bipartite(&two).is_err());
    let three = random_pairs(PairShape::Complete(3), 3, 0).unwrap();
    assert!(lemma14_partition(&three).is_err());
}
