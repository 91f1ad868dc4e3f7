//! Colourings of the complete hosts.
//!
//! Vertices are dense integers. For bipartite hosts the global vertex id of
//! class-0 vertex `a` is `a` and of class-1 vertex `b` is `n + b`; for the
//! transversal host class `i` vertex `x` is `i * n + x`.

use crate::colour::Colour;
use crate::error::{Error, Result};
use crate::index::{binomial, bipartite_index, pair_index, triple_index, Shape};
use crate::packed::PackedColours;

fn two_colour(c: Colour) -> Result<u8> {
    match c {
        Colour::Green => Err(Error::InvalidParameters(
            "green is not allowed in a two-colour context".into(),
        )),
        c => Ok(c.index()),
    }
}

/// Red/blue colouring of every triple of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleColouring {
    n: usize,
    store: PackedColours,
}

impl TripleColouring {
    pub fn uniform(n: usize, colour: Colour) -> Result<TripleColouring> {
        let bit = two_colour(colour)?;
        let mut store = PackedColours::new(2, binomial(n, 3));
        if bit == 1 {
            for i in 0..store.len() {
                store.set(i, 1);
            }
        }
        Ok(TripleColouring { n, store })
    }

    /// `f` receives each triple sorted ascending, in colex order.
    pub fn from_fn(n: usize, mut f: impl FnMut([usize; 3]) -> Colour) -> Result<TripleColouring> {
        let mut store = PackedColours::new(2, binomial(n, 3));
        let mut i = 0;
        for c in 2..n {
            for b in 1..c {
                for a in 0..b {
                    store.set(i, two_colour(f([a, b, c]))?);
                    i += 1;
                }
            }
        }
        Ok(TripleColouring { n, store })
    }

    /// Bit `i` of `bits` is the colour of the triple of colex rank `i` (1 = blue).
    pub fn from_bits(n: usize, bits: u64) -> TripleColouring {
        let len = binomial(n, 3);
        assert!(len <= 64, "from_bits needs at most 64 triples");
        TripleColouring {
            n,
            store: PackedColours::from_words(len, vec![bits]),
        }
    }

    pub(crate) fn from_store(n: usize, store: PackedColours) -> TripleColouring {
        debug_assert_eq!(store.len(), binomial(n, 3));
        TripleColouring { n, store }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.store.len()
    }

    #[inline]
    pub fn colour(&self, a: usize, b: usize, c: usize) -> Colour {
        debug_assert!(a != b && b != c && a != c && a.max(b).max(c) < self.n);
        self.colour_at(triple_index(a, b, c))
    }

    #[inline]
    pub fn colour_at(&self, idx: usize) -> Colour {
        if self.store.get(idx) == 0 {
            Colour::Red
        } else {
            Colour::Blue
        }
    }

    pub fn set(&mut self, a: usize, b: usize, c: usize, colour: Colour) -> Result<()> {
        let idx = crate::index::edge_index(Shape::Triples(self.n), &[a, b, c])?;
        self.store.set(idx, two_colour(colour)?);
        Ok(())
    }

    pub fn count(&self, colour: Colour) -> usize {
        self.store.count(colour.index())
    }

    pub(crate) fn store(&self) -> &PackedColours {
        &self.store
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairShape {
    Complete(usize),
    Bipartite(usize),
}

impl PairShape {
    pub fn n(&self) -> usize {
        match *self {
            PairShape::Complete(n) | PairShape::Bipartite(n) => n,
        }
    }

    pub fn shape(&self) -> Shape {
        match *self {
            PairShape::Complete(n) => Shape::Complete(n),
            PairShape::Bipartite(n) => Shape::Bipartite(n),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.shape().vertex_count()
    }
}

/// Colouring of the edges of `K_n` or `K_{n,n}` with 2 or 3 colours.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairColouring {
    shape: PairShape,
    palette: u8,
    store: PackedColours,
}

impl PairColouring {
    pub fn uniform(shape: PairShape, palette: u8, colour: Colour) -> Result<PairColouring> {
        PairColouring::from_fn(shape, palette, |_, _| colour)
    }

    /// For complete hosts `f(a, b)` is called with `a < b`; for bipartite
    /// hosts with class-local indices `(a, b)`. Either way in canonical order.
    pub fn from_fn(shape: PairShape, palette: u8, mut f: impl FnMut(usize, usize) -> Colour) -> Result<PairColouring> {
        if !(2..=3).contains(&palette) {
            return Err(Error::InvalidParameters(format!("palette {palette} not in 2..=3")));
        }
        let mut store = PackedColours::new(palette, shape.shape().edge_count());
        let mut put = |i: usize, c: Colour| -> Result<()> {
            if !c.in_palette(palette) {
                return Err(Error::InvalidParameters(format!("{c} outside palette {palette}")));
            }
            store.set(i, c.index());
            Ok(())
        };
        match shape {
            PairShape::Complete(n) => {
                let mut i = 0;
                for b in 1..n {
                    for a in 0..b {
                        put(i, f(a, b))?;
                        i += 1;
                    }
                }
            }
            PairShape::Bipartite(n) => {
                for a in 0..n {
                    for b in 0..n {
                        put(bipartite_index(n, a, b), f(a, b))?;
                    }
                }
            }
        }
        Ok(PairColouring { shape, palette, store })
    }

    /// Bit/trit `i` of the little-endian digit string `digits` colours edge `i`.
    pub fn from_index(shape: PairShape, palette: u8, mut index: u64) -> PairColouring {
        let len = shape.shape().edge_count();
        let mut store = PackedColours::new(palette, len);
        for i in 0..len {
            store.set(i, (index % palette as u64) as u8);
            index /= palette as u64;
        }
        PairColouring { shape, palette, store }
    }

    pub(crate) fn from_store(shape: PairShape, palette: u8, store: PackedColours) -> PairColouring {
        PairColouring { shape, palette, store }
    }

    pub fn shape(&self) -> PairShape {
        self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn palette(&self) -> u8 {
        self.palette
    }

    pub fn vertex_count(&self) -> usize {
        self.shape.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.store.len()
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.shape, PairShape::Bipartite(_))
    }

    /// Class (0 or 1) of a global vertex id of a bipartite host; 0 for complete hosts.
    #[inline]
    pub fn class_of(&self, v: usize) -> usize {
        match self.shape {
            PairShape::Bipartite(n) => usize::from(v >= n),
            PairShape::Complete(_) => 0,
        }
    }

    /// Whether `{u, v}` is an edge of the host (global ids).
    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        let total = self.vertex_count();
        if u >= total || v >= total || u == v {
            return false;
        }
        match self.shape {
            PairShape::Complete(_) => true,
            PairShape::Bipartite(_) => self.class_of(u) != self.class_of(v),
        }
    }

    #[inline]
    fn slot(&self, u: usize, v: usize) -> usize {
        match self.shape {
            PairShape::Complete(_) => pair_index(u, v),
            PairShape::Bipartite(n) => {
                if u < n {
                    bipartite_index(n, u, v - n)
                } else {
                    bipartite_index(n, v, u - n)
                }
            }
        }
    }

    /// Colour of the edge `{u, v}` given by global vertex ids, in either order.
    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> Colour {
        debug_assert!(self.is_edge(u, v), "{u}-{v} is not an edge of {:?}", self.shape);
        Colour::from_index(self.store.get(self.slot(u, v))).unwrap()
    }

    /// Colour of bipartite edge `(a, b)` by class-local indices.
    #[inline]
    pub fn bip(&self, a: usize, b: usize) -> Colour {
        let n = self.n();
        Colour::from_index(self.store.get(bipartite_index(n, a, b))).unwrap()
    }

    pub fn colour_at(&self, idx: usize) -> Colour {
        Colour::from_index(self.store.get(idx)).unwrap()
    }

    pub fn set(&mut self, u: usize, v: usize, colour: Colour) -> Result<()> {
        if !self.is_edge(u, v) {
            return Err(Error::InvalidEdge {
                host: self.shape.shape().to_string(),
                edge: vec![u, v],
            });
        }
        if !colour.in_palette(self.palette) {
            return Err(Error::InvalidParameters(format!(
                "{colour} outside palette {}",
                self.palette
            )));
        }
        let slot = self.slot(u, v);
        self.store.set(slot, colour.index());
        Ok(())
    }

    pub fn count(&self, colour: Colour) -> usize {
        self.store.count(colour.index())
    }

    /// The complete bipartite colouring induced between `left` and `right`
    /// (global ids, equal lengths). Local index `i` of each class maps to
    /// `left[i]` / `right[i]`.
    pub fn bipartite_between(&self, left: &[usize], right: &[usize]) -> Result<PairColouring> {
        if left.len() != right.len() {
            return Err(Error::Precondition(format!(
                "sides of sizes {} and {} are not balanced",
                left.len(),
                right.len()
            )));
        }
        for &u in left {
            for &v in right {
                if !self.is_edge(u, v) {
                    return Err(Error::InvalidEdge {
                        host: self.shape.shape().to_string(),
                        edge: vec![u, v],
                    });
                }
            }
        }
        PairColouring::from_fn(PairShape::Bipartite(left.len()), self.palette, |a, b| {
            self.colour(left[a], right[b])
        })
    }

    /// Recolours every edge through `f`, producing a colouring over `palette`.
    pub fn map_colours(&self, palette: u8, f: impl Fn(Colour) -> Colour) -> Result<PairColouring> {
        let mut out = PairColouring {
            shape: self.shape,
            palette,
            store: PackedColours::new(palette, self.store.len()),
        };
        for i in 0..self.store.len() {
            let c = f(self.colour_at(i));
            if !c.in_palette(palette) {
                return Err(Error::InvalidParameters(format!("{c} outside palette {palette}")));
            }
            out.store.set(i, c.index());
        }
        Ok(out)
    }

    pub(crate) fn store(&self) -> &PackedColours {
        &self.store
    }
}

/// Part sizes `s_i = |V_i^1|` of a hypergraph split colouring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperSplitSizes {
    r: usize,
    n: usize,
    s: Vec<usize>,
}

impl HyperSplitSizes {
    pub fn new(n: usize, s: Vec<usize>) -> Result<HyperSplitSizes> {
        if s.is_empty() {
            return Err(Error::InvalidParameters("uniformity must be at least 1".into()));
        }
        if let Some(bad) = s.iter().find(|&&x| x == 0 || x >= n) {
            return Err(Error::InvalidParameters(format!(
                "part size {bad} not in 1..={}",
                n.saturating_sub(1)
            )));
        }
        Ok(HyperSplitSizes { r: s.len(), n, s })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sizes(&self) -> &[usize] {
        &self.s
    }

    /// Whether class-`i` vertex `x` lies in `V_i^1`.
    #[inline]
    pub fn in_first_part(&self, class: usize, x: usize) -> bool {
        x < self.s[class]
    }

    /// Red iff the edge has an even number of vertices in the first parts.
    #[inline]
    pub fn colour_of(&self, edge: &[usize]) -> Colour {
        let hits = edge
            .iter()
            .enumerate()
            .filter(|&(i, &x)| self.in_first_part(i, x))
            .count();
        if hits % 2 == 0 {
            Colour::Red
        } else {
            Colour::Blue
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TransversalBacking {
    Materialized(PackedColours),
    Rule(HyperSplitSizes),
}

/// Colouring of the transversal edges of the complete `r`-partite
/// `r`-uniform hypergraph with `n` vertices per class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransversalColouring {
    r: usize,
    n: usize,
    backing: TransversalBacking,
}

impl TransversalColouring {
    /// Largest edge count a materialized colouring may store.
    pub const MATERIALIZE_CAP: usize = 1 << 26;

    pub fn rule(sizes: HyperSplitSizes) -> TransversalColouring {
        TransversalColouring {
            r: sizes.r(),
            n: sizes.n(),
            backing: TransversalBacking::Rule(sizes),
        }
    }

    /// `f` receives each edge as class-local indices, in mixed-radix order.
    pub fn materialize(
        r: usize,
        n: usize,
        cap: usize,
        mut f: impl FnMut(&[usize]) -> Colour,
    ) -> Result<TransversalColouring> {
        let len = Shape::Transversal { r, n }.edge_count();
        if r == 0 || len > cap.min(Self::MATERIALIZE_CAP) {
            return Err(Error::ExceedsCap(format!(
                "{n}^{r} edges exceed the materialization cap"
            )));
        }
        let mut store = PackedColours::new(2, len);
        let mut edge = vec![0usize; r];
        for i in 0..len {
            let mut rest = i;
            for slot in edge.iter_mut().rev() {
                *slot = rest % n;
                rest /= n;
            }
            store.set(i, two_colour(f(&edge))?);
        }
        Ok(TransversalColouring {
            r,
            n,
            backing: TransversalBacking::Materialized(store),
        })
    }

    pub(crate) fn from_store(r: usize, n: usize, store: PackedColours) -> TransversalColouring {
        TransversalColouring {
            r,
            n,
            backing: TransversalBacking::Materialized(store),
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn backing(&self) -> &TransversalBacking {
        &self.backing
    }

    /// Colour of the transversal edge whose class-`i` vertex is `edge[i]`.
    pub fn colour(&self, edge: &[usize]) -> Colour {
        debug_assert_eq!(edge.len(), self.r);
        match &self.backing {
            TransversalBacking::Rule(sizes) => sizes.colour_of(edge),
            TransversalBacking::Materialized(store) => {
                let idx = edge.iter().fold(0usize, |acc, &x| acc * self.n + x);
                Colour::from_index(store.get(idx)).unwrap()
            }
        }
    }

    /// Class and class-local index of a global vertex id.
    #[inline]
    pub fn locate(&self, v: usize) -> (usize, usize) {
        (v / self.n, v % self.n)
    }
}

/// Any colouring this crate reads or writes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Colouring {
    Triples(TripleColouring),
    Pairs(PairColouring),
    Transversal(TransversalColouring),
}

impl Colouring {
    pub fn shape(&self) -> Shape {
        match self {
            Colouring::Triples(c) => Shape::Triples(c.n()),
            Colouring::Pairs(c) => c.shape().shape(),
            Colouring::Transversal(c) => Shape::Transversal { r: c.r(), n: c.n() },
        }
    }

    pub fn palette(&self) -> u8 {
        match self {
            Colouring::Pairs(c) => c.palette(),
            _ => 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.shape().vertex_count()
    }
}

impl From<TripleColouring> for Colouring {
    fn from(c: TripleColouring) -> Self {
        Colouring::Triples(c)
    }
}

impl From<PairColouring> for Colouring {
    fn from(c: PairColouring) -> Self {
        Colouring::Pairs(c)
    }
}

impl From<TransversalColouring> for Colouring {
    fn from(c: TransversalColouring) -> Self {
        Colouring::Transversal(c)
    }
}
