use super::cycles::{as_bicoloured, BicolouredCycle};
use super::{by_class, require_two_colour_bipartite};
use crate::colour::Colour;
use crate::colouring::PairColouring;
use crate::error::{Error, Result};
use crate::split::SplitStructure;

/// Each colour spans a complete bipartite graph: every vertex of
/// `mixed_class` sees both colours, and the other class splits into
/// `red_side` and `blue_side` (class-local indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct VStructure {
    pub mixed_class: usize,
    pub red_side: Vec<usize>,
    pub blue_side: Vec<usize>,
}

impl VStructure {
    pub fn verify(&self, c: &PairColouring) -> bool {
        let n = c.n();
        if self.mixed_class > 1 || self.red_side.is_empty() || self.blue_side.is_empty() {
            return false;
        }
        let mut side = vec![None; n];
        for (list, colour) in [(&self.red_side, Colour::Red), (&self.blue_side, Colour::Blue)] {
            for &x in list {
                if x >= n || side[x].is_some() {
                    return false;
                }
                side[x] = Some(colour);
            }
        }
        let Some(side): Option<Vec<Colour>> = side.into_iter().collect() else {
            return false;
        };
        (0..n).all(|m| {
            (0..n).all(|x| {
                let (a, b) = if self.mixed_class == 0 { (m, x) } else { (x, m) };
                c.bip(a, b) == side[x]
            })
        })
    }
}

/// Verdict of [`classify_bipartite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Mono(Colour),
    Split(SplitStructure),
    VCol(VStructure),
    /// A good 4-cycle.
    Other(BicolouredCycle),
}

/// Classifies a 2-colouring of `K_{n,n}` as monochromatic, split, V or
/// other, with a good 4-cycle witnessing the last case. O(n²).
pub fn classify_bipartite(c: &PairColouring) -> Result<Classification> {
    require_two_colour_bipartite(c)?;
    let n = c.n();
    for colour in [Colour::Red, Colour::Blue] {
        if c.count(colour) == c.edge_count() {
            return Ok(Classification::Mono(colour));
        }
    }
    // first vertex seeing both colours, as (class, local index)
    let col = |class: usize, u: usize, x: usize| if class == 0 { c.bip(u, x) } else { c.bip(x, u) };
    let (class, v) = (0..2)
        .flat_map(|class| (0..n).map(move |v| (class, v)))
        .find(|&(class, v)| (1..n).any(|x| col(class, v, x) != col(class, v, 0)))
        .expect("a non-monochromatic colouring has a bichromatic vertex");
    let (xr, xb): (Vec<usize>, Vec<usize>) = (0..n).partition(|&x| col(class, v, x) == Colour::Red);
    let global = |cls: usize, local: usize| if cls == 0 { local } else { n + local };
    let other = 1 - class;
    let cycle = |u: usize, y1: usize, y2: usize| -> BicolouredCycle {
        let seq = [global(class, v), global(other, y1), global(class, u), global(other, y2)];
        let b = as_bicoloured(c, &seq).expect("constructed witness is bicoloured");
        debug_assert!(b.is_good());
        b
    };

    let mut same = Vec::new();
    let mut diff = Vec::new();
    for u in 0..n {
        for side in [&xr, &xb] {
            let c0 = col(class, u, side[0]);
            if let Some(&y) = side.iter().find(|&&y| col(class, u, y) != c0) {
                return Ok(Classification::Other(cycle(u, side[0], y)));
            }
        }
        let (on_red, on_blue) = (col(class, u, xr[0]), col(class, u, xb[0]));
        if on_red == on_blue {
            return Ok(Classification::Other(cycle(u, xr[0], xb[0])));
        }
        if on_red == Colour::Red {
            same.push(u);
        } else {
            diff.push(u);
        }
    }
    if diff.is_empty() {
        let s = VStructure {
            mixed_class: class,
            red_side: xr,
            blue_side: xb,
        };
        debug_assert!(s.verify(c));
        return Ok(Classification::VCol(s));
    }
    let s = if class == 0 {
        SplitStructure {
            a1: same,
            a2: diff,
            b1: xr,
            b2: xb,
        }
    } else {
        SplitStructure {
            a1: xr,
            a2: xb,
            b1: same,
            b2: diff,
        }
    };
    debug_assert!(s.verify(c));
    Ok(Classification::Split(s))
}

/// A good 4-cycle if one exists, read off the classification.
pub fn find_good_c4(c: &PairColouring) -> Result<Option<BicolouredCycle>> {
    Ok(match classify_bipartite(c)? {
        Classification::Other(w) => Some(w),
        _ => None,
    })
}

/// The good 4-cycle `a b a' b'` with lexicographically least
/// `(a, a', b, b')`, `a < a'`, `b < b'` (class-local indices).
///
/// A 4-cycle is good exactly when one colour appears on three of its edges,
/// so for fixed `a < a'` it suffices to find a `b'` whose pair of colours to
/// `a, a'` has a different number of red entries mod 2 than that of `b = 0`.
pub fn first_good_c4(c: &PairColouring) -> Result<Option<BicolouredCycle>> {
    require_two_colour_bipartite(c)?;
    let n = c.n();
    let parity = |a: usize, a2: usize, b: usize| (c.bip(a, b) == Colour::Red) != (c.bip(a2, b) == Colour::Red);
    for a in 0..n {
        for a2 in a + 1..n {
            let p0 = parity(a, a2, 0);
            if let Some(b2) = (1..n).find(|&b| parity(a, a2, b) != p0) {
                let seq = [a, n, a2, n + b2];
                return Ok(Some(as_bicoloured(c, &seq).expect("good 4-cycle")));
            }
        }
    }
    Ok(None)
}

/// A 4-cycle inside `subset` with two edges of each colour. O(m³) for `m`
/// vertices per class.
pub fn find_balanced_c4(c: &PairColouring, subset: &[usize]) -> Result<Option<Vec<usize>>> {
    require_two_colour_bipartite(c)?;
    if subset.iter().any(|&v| v >= c.vertex_count()) {
        return Err(Error::Precondition("subset vertex out of range".into()));
    }
    let (left, right) = by_class(c, subset);
    if left.len() != right.len() {
        return Err(Error::Precondition(format!(
            "subset has {} and {} vertices in the two classes",
            left.len(),
            right.len()
        )));
    }
    for (i, &a) in left.iter().enumerate() {
        for &a2 in &left[i + 1..] {
            // pattern index: 2*[a-b red] + [a'-b red]; balanced pairs sum to two reds
            let mut first_of = [None; 4];
            for &b in &right {
                let p = 2 * usize::from(c.colour(a, b) == Colour::Red) + usize::from(c.colour(a2, b) == Colour::Red);
                let partners: &[usize] = match p {
                    0 => &[3],
                    3 => &[0],
                    _ => &[1, 2],
                };
                if let Some(b0) = partners.iter().find_map(|&q| first_of[q]) {
                    return Ok(Some(vec![a, b0, a2, b]));
                }
                first_of[p].get_or_insert(b);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::PairShape;
    use crate::generate::{gen_recoloured_split, gen_split_bipartite, gen_v_colouring};

    #[test]
    fn spec_examples() {
        let (c, s) = gen_split_bipartite(3, 1, 1).unwrap();
        match classify_bipartite(&c).unwrap() {
            Classification::Split(t) => assert!(t.verify(&c) && s.verify(&c)),
            other => panic!("{other:?}"),
        }
        let v = gen_v_colouring(3, 1).unwrap();
        assert!(matches!(classify_bipartite(&v).unwrap(), Classification::VCol(s) if s.verify(&v)));
        let r = gen_recoloured_split(3, 1, 1, (0, 0)).unwrap();
        let Classification::Other(w) = classify_bipartite(&r).unwrap() else {
            panic!()
        };
        assert!(w.is_good() && w.len() == 4);
        let red = PairColouring::uniform(PairShape::Bipartite(3), 2, Colour::Red).unwrap();
        assert_eq!(classify_bipartite(&red).unwrap(), Classification::Mono(Colour::Red));
        assert_eq!(find_good_c4(&red).unwrap(), None);
        assert_eq!(first_good_c4(&v).unwrap(), None);
    }

    #[test]
    fn balanced_square_patterns() {
        let n = 2;
        // rrbb around 0-2-1-3
        let mut c = PairColouring::uniform(PairShape::Bipartite(n), 2, Colour::Red).unwrap();
        c.set(1, 3, Colour::Blue).unwrap();
        c.set(3, 0, Colour::Blue).unwrap();
        assert!(find_balanced_c4(&c, &[0, 1, 2, 3]).unwrap().is_some());
        // rbrb
        let mut d = PairColouring::uniform(PairShape::Bipartite(n), 2, Colour::Red).unwrap();
        d.set(2, 1, Colour::Blue).unwrap();
        d.set(3, 0, Colour::Blue).unwrap();
        assert!(find_balanced_c4(&d, &[0, 1, 2, 3]).unwrap().is_some());
        let red = PairColouring::uniform(PairShape::Bipartite(3), 2, Colour::Red).unwrap();
        assert_eq!(find_balanced_c4(&red, &[0, 1, 3, 4]).unwrap(), None);
        assert!(find_balanced_c4(&red, &[0, 1, 3]).is_err());
    }
}
