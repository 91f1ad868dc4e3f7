use crate::colour::Colour;
use crate::colouring::PairColouring;

/// Witness that a colouring of `K_{n,n}` is split: red edges are exactly
/// `A1×B1 ∪ A2×B2` and blue edges the rest. `A*` are class-0 and `B*`
/// class-1 vertices, by class-local index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct SplitStructure {
    pub a1: Vec<usize>,
    pub a2: Vec<usize>,
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
}

impl SplitStructure {
    pub fn n(&self) -> usize {
        self.a1.len() + self.a2.len()
    }

    /// Checks every part is nonempty, the parts partition both classes and
    /// every edge has the colour the structure predicts.
    pub fn verify(&self, c: &PairColouring) -> bool {
        if !c.is_bipartite() || c.palette() != 2 {
            return false;
        }
        let n = c.n();
        let parts = [&self.a1, &self.a2, &self.b1, &self.b2];
        if parts.iter().any(|p| p.is_empty()) {
            return false;
        }
        let side = |p1: &[usize], p2: &[usize]| -> Option<Vec<bool>> {
            let mut first = vec![None; n];
            for (list, tag) in [(p1, true), (p2, false)] {
                for &v in list {
                    if v >= n || first[v].is_some() {
                        return None;
                    }
                    first[v] = Some(tag);
                }
            }
            first.into_iter().collect()
        };
        let (Some(in_a1), Some(in_b1)) = (side(&self.a1, &self.a2), side(&self.b1, &self.b2)) else {
            return false;
        };
        (0..n).all(|a| {
            (0..n).all(|b| {
                let red = in_a1[a] == in_b1[b];
                (c.bip(a, b) == Colour::Red) == red
            })
        })
    }
}
