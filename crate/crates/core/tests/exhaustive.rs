//! Exhaustive suites not covered by the acceptance run.

use monopart::oracle::{enumerate_all, Suite};

fn clean(suite: Suite, n: usize) {
    let r = enumerate_all(suite, n, 2).unwrap();
    assert!(r.passed(), "{suite} n={n}: {r}");
    assert_eq!(r.checked, 1 << suite.edge_count(n));
}

#[test]
fn good_cycle_extension_up_to_4() {
    for n in 1..=4 {
        clean(Suite::Lemma10Extend, n);
    }
}

#[test]
fn red_path_and_block_up_to_7() {
    for n in 0..=7 {
        clean(Suite::Lemma14, n);
    }
}

#[test]
fn red_path_and_two_blocks_up_to_4() {
    for n in 0..=4 {
        clean(Suite::Lemma15, n);
    }
}

#[test]
fn tight_paths_up_to_6() {
    for n in 0..=5 {
        clean(Suite::Prop8Total, n);
        clean(Suite::Prop8Oracle, n);
    }
}
