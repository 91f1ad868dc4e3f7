//! Two-coloured complete bipartite graphs `K_{n,n}`.
//!
//! Vertices are global ids: class-0 vertex `a` is `a`, class-1 vertex `b` is
//! `n + b`. Cycles are vertex sequences closed by an edge from the last
//! vertex back to the first.

mod classify;
mod cycles;
mod extend;
mod partition;
mod pieces;

pub use classify::{classify_bipartite, find_balanced_c4, find_good_c4, first_good_c4, Classification, VStructure};
pub use cycles::{analyse_cycle, BicolouredCycle, CycleShape, SpanningCycle};
pub use extend::{
    extend_good_cycle, near_mono_spanning_path, spanning_bicoloured_or_mono_cycle, spanning_cycle_traced, CycleTrace,
};
pub use partition::{convert_paths_to_cycle, partition_path_cycle, partition_path_cycle_coloured, two_paths};
pub use pieces::{mono_hamilton_cycle, split_path_and_two_cycles, split_three_cycles, split_three_paths, v_two_cycles};

use crate::colouring::PairColouring;
use crate::error::{Error, Result};
use crate::split::SplitStructure;

/// Outcome of the solvers that cannot handle split colourings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<T> {
    Found(T),
    SplitDetected(SplitStructure),
}

impl<T> Verdict<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Verdict::Found(t) => Some(t),
            Verdict::SplitDetected(_) => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Verdict<U> {
        match self {
            Verdict::Found(t) => Verdict::Found(f(t)),
            Verdict::SplitDetected(s) => Verdict::SplitDetected(s),
        }
    }
}

pub(crate) fn require_two_colour_bipartite(c: &PairColouring) -> Result<()> {
    if !c.is_bipartite() {
        return Err(Error::Precondition("host is not complete bipartite".into()));
    }
    if c.palette() != 2 {
        return Err(Error::Precondition(format!(
            "palette {} given, 2 required",
            c.palette()
        )));
    }
    Ok(())
}

pub(crate) fn host_tag(c: &PairColouring) -> String {
    if c.palette() == 3 {
        format!("b2 {} 3", c.n())
    } else {
        format!("b2 {}", c.n())
    }
}

/// Splits a vertex subset into its class-0 and class-1 members, in order.
pub(crate) fn by_class(c: &PairColouring, subset: &[usize]) -> (Vec<usize>, Vec<usize>) {
    subset.iter().partition(|&&v| c.class_of(v) == 0)
}

/// Zig-zag `l[0] r[0] l[1] r[1] …` over two equally long lists.
pub(crate) fn zigzag(l: &[usize], r: &[usize]) -> Vec<usize> {
    debug_assert_eq!(l.len(), r.len());
    l.iter().zip(r).flat_map(|(&a, &b)| [a, b]).collect()
}
