//! Colouring generators.
//!
//! Random colourings are reproducible across implementations: the generator
//! is ChaCha8 seeded through `SeedableRng::seed_from_u64(seed)` (rand_core's
//! PCG32-based seed expansion). For two colours, edges are taken in canonical
//! order in blocks of 64; block `w` is the `w`-th `next_u64()` and bit `j`
//! colours edge `64w + j` (1 = blue). For three colours each edge in turn
//! draws `next_u32()` values, rejecting `u32::MAX`, and takes the value mod 3.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colour::Colour;
use crate::colouring::{Colouring, PairColouring, PairShape, TransversalColouring, TripleColouring};
use crate::error::{Error, Result};
use crate::index::Shape;
use crate::packed::PackedColours;
use crate::split::SplitStructure;

fn random_store(len: usize, palette: u8, seed: u64) -> PackedColours {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if palette <= 2 {
        let words = (0..len.div_ceil(64)).map(|_| rng.next_u64()).collect();
        PackedColours::from_words(len, words)
    } else {
        let mut store = PackedColours::new(3, len);
        for i in 0..len {
            let x = loop {
                let x = rng.next_u32();
                if x != u32::MAX {
                    break x;
                }
            };
            store.set(i, (x % 3) as u8);
        }
        store
    }
}

pub fn random_triples(n: usize, seed: u64) -> TripleColouring {
    TripleColouring::from_store(n, random_store(Shape::Triples(n).edge_count(), 2, seed))
}

pub fn random_pairs(shape: PairShape, palette: u8, seed: u64) -> Result<PairColouring> {
    if !(2..=3).contains(&palette) {
        return Err(Error::InvalidParameters(format!("palette {palette} not in 2..=3")));
    }
    let store = random_store(shape.shape().edge_count(), palette, seed);
    Ok(PairColouring::from_store(shape, palette, store))
}

pub fn random_transversal(r: usize, n: usize, seed: u64) -> Result<TransversalColouring> {
    let len = Shape::Transversal { r, n }.edge_count();
    if r == 0 || len > TransversalColouring::MATERIALIZE_CAP {
        return Err(Error::ExceedsCap(format!(
            "{n}^{r} edges exceed the materialization cap"
        )));
    }
    Ok(TransversalColouring::from_store(r, n, random_store(len, 2, seed)))
}

pub fn gen_random(shape: Shape, palette: u8, seed: u64) -> Result<Colouring> {
    match shape {
        Shape::Triples(n) if palette == 2 => Ok(random_triples(n, seed).into()),
        Shape::Complete(n) => Ok(random_pairs(PairShape::Complete(n), palette, seed)?.into()),
        Shape::Bipartite(n) => Ok(random_pairs(PairShape::Bipartite(n), palette, seed)?.into()),
        Shape::Transversal { r, n } if palette == 2 => Ok(random_transversal(r, n, seed)?.into()),
        _ => Err(Error::InvalidParameters(format!("{shape} only supports two colours"))),
    }
}

fn check_split_sizes(n: usize, a1: usize, b1: usize) -> Result<()> {
    if a1 == 0 || b1 == 0 || a1 >= n || b1 >= n {
        return Err(Error::InvalidParameters(format!(
            "split part sizes ({a1}, {b1}) must lie in 1..={}",
            n.saturating_sub(1)
        )));
    }
    Ok(())
}

/// Split colouring of `K_{n,n}`: with `A1 = {0..a1}` and `B1 = {0..b1}`,
/// edge `(a, b)` is red iff `[a ∈ A1] + [b ∈ B1]` is even.
pub fn gen_split_bipartite(n: usize, a1: usize, b1: usize) -> Result<(PairColouring, SplitStructure)> {
    check_split_sizes(n, a1, b1)?;
    let c = PairColouring::from_fn(PairShape::Bipartite(n), 2, |a, b| {
        if (a < a1) == (b < b1) {
            Colour::Red
        } else {
            Colour::Blue
        }
    })?;
    let s = SplitStructure {
        a1: (0..a1).collect(),
        a2: (a1..n).collect(),
        b1: (0..b1).collect(),
        b2: (b1..n).collect(),
    };
    debug_assert!(s.verify(&c));
    Ok((c, s))
}

/// V-colouring: class-1 vertices below `cut` are red to all of class 0, the
/// others blue.
pub fn gen_v_colouring(n: usize, cut: usize) -> Result<PairColouring> {
    if cut == 0 || cut >= n {
        return Err(Error::InvalidParameters(format!(
            "cut {cut} not in 1..={}",
            n.saturating_sub(1)
        )));
    }
    PairColouring::from_fn(PairShape::Bipartite(n), 2, |_, b| {
        if b < cut {
            Colour::Red
        } else {
            Colour::Blue
        }
    })
}

/// The split colouring of [`gen_split_bipartite`] with the red edge `which`
/// (class-local `(a, b)`) recoloured blue.
pub fn gen_recoloured_split(n: usize, a1: usize, b1: usize, which: (usize, usize)) -> Result<PairColouring> {
    let (mut c, _) = gen_split_bipartite(n, a1, b1)?;
    let (a, b) = which;
    if a >= n || b >= n || c.bip(a, b) != Colour::Red {
        return Err(Error::InvalidParameters(format!(
            "edge ({a}, {b}) is not red in the split"
        )));
    }
    c.set(a, n + b, Colour::Blue)?;
    Ok(c)
}

/// Three-colour split colouring: class-0 block `i` and class-1 block `j`
/// are joined in colour `(i + j) mod 3`, a proper edge colouring of `K_{3,3}`
/// blown up. Blocks occupy consecutive indices.
pub fn gen_three_colour_split(blocks0: [usize; 3], blocks1: [usize; 3]) -> Result<PairColouring> {
    if blocks0.iter().chain(&blocks1).any(|&s| s == 0) {
        return Err(Error::InvalidParameters("every block needs at least one vertex".into()));
    }
    let n: usize = blocks0.iter().sum();
    if blocks1.iter().sum::<usize>() != n {
        return Err(Error::InvalidParameters("both sides must have the same size".into()));
    }
    let block_of = |blocks: &[usize; 3], v: usize| {
        let mut acc = 0;
        for (i, s) in blocks.iter().enumerate() {
            acc += s;
            if v < acc {
                return i;
            }
        }
        unreachable!()
    };
    PairColouring::from_fn(PairShape::Bipartite(n), 3, |a, b| {
        let i = block_of(&blocks0, a);
        let j = block_of(&blocks1, b);
        Colour::from_index(((i + j) % 3) as u8).unwrap()
    })
}
