use monopart::colouring::{HyperSplitSizes, TransversalColouring};
use monopart::format::{parse_colouring, serialize_colouring};
use monopart::generate::{random_pairs, random_transversal, random_triples};
use monopart::tight_path::partition_two_tight_paths;
use monopart::{Colouring, PairShape, PartitionCertificate};
use proptest::prelude::*;

fn round_trip(c: Colouring) {
    let text = serialize_colouring(&c);
    assert!(!text.ends_with('\n') || text.lines().nth(1).is_none(), "{text:?}");
    assert_eq!(parse_colouring(&text).unwrap(), c);
}

proptest! {
    #[test]
    fn triples(n in 0usize..14, seed: u64) {
        round_trip(random_triples(n, seed).into());
    }

    #[test]
    fn pairs(n in 0usize..12, bipartite: bool, three: bool, seed: u64) {
        let shape = if bipartite { PairShape::Bipartite(n) } else { PairShape::Complete(n) };
        round_trip(random_pairs(shape, if three { 3 } else { 2 }, seed).unwrap().into());
    }

    #[test]
    fn transversal(r in 1usize..4, n in 1usize..5, seed: u64) {
        round_trip(random_transversal(r, n, seed).unwrap().into());
    }

    #[test]
    fn rule_backed(sizes in proptest::collection::vec(1usize..6, 1..5)) {
        let sizes = HyperSplitSizes::new(7, sizes).unwrap();
        round_trip(TransversalColouring::rule(sizes).into());
    }

    #[test]
    fn certificate_json(n in 0usize..20, seed: u64) {
        let cert = partition_two_tight_paths(&random_triples(n, seed)).unwrap();
        prop_assert_eq!(PartitionCertificate::from_json(&cert.to_json()).unwrap(), cert);
    }
}

#[test]
fn bnn_alias_parses_as_bipartite() {
    let a = parse_colouring("bnn 2\n0110").unwrap();
    let b = parse_colouring("b2 2\n0110").unwrap();
    assert_eq!(a, b);
    assert_eq!(serialize_colouring(&a), "b2 2\n0110");
}

#[test]
fn malformed_input_is_rejected() {
    for text in ["", "h3 4\n010", "kn 3 4\n000", "b2 2\n0120", "xx 3\n000", "kn 2\n1\n1"] {
        assert!(parse_colouring(text).is_err(), "{text:?}");
    }
}
