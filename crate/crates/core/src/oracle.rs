//! Brute-force ground truth and the exhaustive enumeration harness.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bipartite::{
    analyse_cycle, classify_bipartite, extend_good_cycle, find_balanced_c4, find_good_c4, first_good_c4,
    near_mono_spanning_path, partition_path_cycle, spanning_bicoloured_or_mono_cycle, split_three_paths, two_paths,
    Classification, CycleShape, Verdict,
};
use crate::certificate::{check_certificate, PartitionCertificate, Piece, PieceKind};
use crate::colour::Colour;
use crate::colouring::{Colouring, PairColouring, PairShape, TripleColouring};
use crate::error::{Error, Result};
use crate::index::binomial;
use crate::three_colour::{lemma14_partition, lemma15_partition, verify_lemma14, verify_lemma15};
use crate::tight_path::{classify_tight_path, spanning_bicoloured_path_counted, split_into_two_mono, TightPathClass};

/// Largest host the partition oracles accept.
pub const ORACLE_VERTEX_CAP: usize = 14;
/// Largest `n` for the permutation oracle.
pub const PERMUTATION_CAP: usize = 9;

fn require_bip2(c: &PairColouring) -> Result<()> {
    if !c.is_bipartite() || c.palette() != 2 {
        return Err(Error::Precondition(
            "2-coloured complete bipartite host required".into(),
        ));
    }
    Ok(())
}

/// The 4-cycles `a b a' b'` with `a < a'`, `b < b'` (class-local) in
/// lexicographic order of `(a, a', b, b')`, with their red edge counts.
fn four_cycles(c: &PairColouring) -> impl Iterator<Item = ([usize; 4], usize)> + '_ {
    let n = c.n();
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |a2| {
            (0..n).flat_map(move |b| {
                (b + 1..n).map(move |b2| {
                    let reds = [(a, b), (a2, b), (a2, b2), (a, b2)]
                        .iter()
                        .filter(|&&(x, y)| c.bip(x, y) == Colour::Red)
                        .count();
                    ([a, n + b, a2, n + b2], reds)
                })
            })
        })
    })
}

/// Lexicographically first good 4-cycle, by scanning all of them.
pub fn good_c4_scan(c: &PairColouring) -> Result<Option<[usize; 4]>> {
    require_bip2(c)?;
    Ok(four_cycles(c)
        .find(|&(q, _)| matches!(analyse_cycle(c, &q), Ok(CycleShape::Bicoloured(ref b)) if b.is_good()))
        .map(|(q, _)| q))
}

/// Lexicographically first 4-cycle with two edges of each colour.
pub fn balanced_c4_scan(c: &PairColouring) -> Result<Option<[usize; 4]>> {
    require_bip2(c)?;
    Ok(four_cycles(c).find(|&(_, reds)| reds == 2).map(|(q, _)| q))
}

/// A spanning tight path with at most two colour runs, by exhaustive search
/// over orderings with first vertex below last vertex.
pub fn oracle_spanning_bipath_exists(c: &TripleColouring) -> Result<Option<Vec<usize>>> {
    let n = c.n();
    if n > PERMUTATION_CAP {
        return Err(Error::ExceedsCap(format!(
            "permutation oracle handles n ≤ {PERMUTATION_CAP}"
        )));
    }
    if n <= 1 {
        return Ok(Some((0..n).collect()));
    }
    // runs: (first colour, switched to second) along the prefix
    fn go(c: &TripleColouring, seq: &mut Vec<usize>, used: u32, runs: (Option<Colour>, Option<Colour>)) -> bool {
        let n = c.n();
        if seq.len() == n {
            return seq[0] < seq[n - 1];
        }
        for v in 0..n {
            if used & 1 << v != 0 {
                continue;
            }
            let mut next = runs;
            if seq.len() >= 2 {
                let e = c.colour(seq[seq.len() - 2], seq[seq.len() - 1], v);
                next = match runs {
                    (None, _) => (Some(e), None),
                    (Some(f), None) if f == e => runs,
                    (Some(_), None) => (runs.0, Some(e)),
                    (Some(_), Some(s)) if s == e => runs,
                    _ => continue,
                };
            }
            seq.push(v);
            if go(c, seq, used | 1 << v, next) {
                return true;
            }
            seq.pop();
        }
        false
    }
    let mut seq = Vec::with_capacity(n);
    Ok(go(c, &mut seq, 0, (None, None)).then_some(seq))
}

/// Constraints on a partition into monochromatic paths and cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeSpec {
    /// At most this many path pieces.
    pub paths: usize,
    /// At most this many cycle pieces.
    pub cycles: usize,
    /// Pieces with at least one edge have pairwise distinct colours.
    pub distinct_colours: bool,
    /// Colour every path with an edge must have.
    pub path_colour: Option<Colour>,
    /// Colour every cycle with an edge must have.
    pub cycle_colour: Option<Colour>,
    /// When positive, at least one path is required and every path needs
    /// this many vertices.
    pub min_path_vertices: usize,
}

impl ShapeSpec {
    pub fn new(paths: usize, cycles: usize) -> ShapeSpec {
        ShapeSpec {
            paths,
            cycles,
            distinct_colours: false,
            path_colour: None,
            cycle_colour: None,
            min_path_vertices: 0,
        }
    }

    /// One path and one cycle of distinct colours.
    pub fn path_and_cycle() -> ShapeSpec {
        ShapeSpec {
            distinct_colours: true,
            ..ShapeSpec::new(1, 1)
        }
    }
}

/// Per-colour Hamilton path / cycle tables over vertex subsets.
struct PieceTables {
    total: usize,
    palette: u8,
    adj: Vec<[u32; 3]>,
    path_ends: Vec<Vec<u32>>,
    cycle_ends: Vec<Vec<u32>>,
}

impl PieceTables {
    fn new(c: &PairColouring) -> Result<PieceTables> {
        let total = c.vertex_count();
        if total > ORACLE_VERTEX_CAP {
            return Err(Error::ExceedsCap(format!(
                "partition oracle handles at most {ORACLE_VERTEX_CAP} vertices, host has {total}"
            )));
        }
        let palette = c.palette();
        let mut adj = vec![[0u32; 3]; total];
        for u in 0..total {
            for v in 0..total {
                if c.is_edge(u, v) {
                    adj[u][c.colour(u, v).index() as usize] |= 1 << v;
                }
            }
        }
        let size = 1usize << total;
        let mut path_ends = vec![vec![0u32; size]; palette as usize];
        let mut cycle_ends = vec![vec![0u32; size]; palette as usize];
        for x in 0..palette as usize {
            for mask in 1..size {
                let m = mask as u32;
                if m.count_ones() == 1 {
                    path_ends[x][mask] = m;
                    cycle_ends[x][mask] = m;
                    continue;
                }
                let low = m & m.wrapping_neg();
                let mut ends = 0u32;
                let mut cends = 0u32;
                for e in 0..total {
                    let bit = 1u32 << e;
                    if m & bit == 0 {
                        continue;
                    }
                    let prev = (m ^ bit) as usize;
                    if path_ends[x][prev] & adj[e][x] != 0 {
                        ends |= bit;
                    }
                    if bit != low && cycle_ends[x][prev] & adj[e][x] != 0 {
                        cends |= bit;
                    }
                }
                path_ends[x][mask] = ends;
                cycle_ends[x][mask] = cends;
            }
        }
        Ok(PieceTables {
            total,
            palette,
            adj,
            path_ends,
            cycle_ends,
        })
    }

    fn ok(&self, kind: PieceKind, mask: u32, x: usize) -> bool {
        let k = mask.count_ones();
        if k <= 1 {
            return true;
        }
        match kind {
            PieceKind::Path => self.path_ends[x][mask as usize] != 0,
            PieceKind::Cycle if k == 2 => {
                let a = mask.trailing_zeros() as usize;
                self.adj[a][x] & mask != 0
            }
            PieceKind::Cycle => {
                let low = mask.trailing_zeros() as usize;
                self.cycle_ends[x][mask as usize] & self.adj[low][x] != 0
            }
        }
    }

    fn order(&self, kind: PieceKind, mask: u32, x: usize) -> Vec<usize> {
        let bits = |m: u32| (0..self.total).filter(move |&v| m & 1 << v != 0);
        if mask.count_ones() <= 2 {
            return bits(mask).collect();
        }
        let table = match kind {
            PieceKind::Path => &self.path_ends[x],
            PieceKind::Cycle => &self.cycle_ends[x],
        };
        let low = mask.trailing_zeros() as usize;
        let mut options = table[mask as usize];
        if kind == PieceKind::Cycle {
            options &= self.adj[low][x];
        }
        let mut e = options.trailing_zeros() as usize;
        let mut m = mask;
        let mut seq = vec![e];
        loop {
            m ^= 1 << e;
            if m == 0 {
                break;
            }
            let prev = table[m as usize] & self.adj[e][x];
            e = prev.trailing_zeros() as usize;
            seq.push(e);
        }
        seq.reverse();
        seq
    }
}

/// A partition meeting `spec`, by exhaustive search over vertex subsets
/// for pieces containing the lowest uncovered vertex.
pub fn oracle_partition_exists(c: &PairColouring, spec: &ShapeSpec) -> Result<Option<PartitionCertificate>> {
    let t = PieceTables::new(c)?;
    let full = if t.total == 0 { 0 } else { u32::MAX >> (32 - t.total) };
    let mut dead = HashSet::new();
    let mut chosen = Vec::new();
    let found = search(
        &t,
        spec,
        full,
        spec.paths,
        spec.cycles,
        0,
        false,
        &mut dead,
        &mut chosen,
    );
    let tag = crate::certificate::host_tag(&Colouring::from(c.clone()));
    Ok(found.then(|| {
        let pieces = chosen
            .iter()
            .map(|&(kind, mask, x)| Piece {
                kind,
                colour: Colour::from_index(x as u8).unwrap(),
                vertices: t.order(kind, mask, x),
            })
            .collect();
        PartitionCertificate::new(tag, pieces)
    }))
}

#[allow(clippy::too_many_arguments)]
fn search(
    t: &PieceTables,
    spec: &ShapeSpec,
    uncovered: u32,
    paths: usize,
    cycles: usize,
    used: u8,
    has_path: bool,
    dead: &mut HashSet<(u32, usize, usize, u8, bool)>,
    chosen: &mut Vec<(PieceKind, u32, usize)>,
) -> bool {
    if uncovered == 0 {
        return spec.min_path_vertices == 0 || has_path;
    }
    let key = (uncovered, paths, cycles, used, has_path);
    if dead.contains(&key) {
        return false;
    }
    let low = uncovered & uncovered.wrapping_neg();
    let rest = uncovered ^ low;
    let mut sub = rest;
    loop {
        let piece = sub | low;
        let has_edge = piece.count_ones() >= 2;
        for kind in [PieceKind::Path, PieceKind::Cycle] {
            let (left, wanted) = match kind {
                PieceKind::Path => (paths, spec.path_colour),
                PieceKind::Cycle => (cycles, spec.cycle_colour),
            };
            if left == 0 {
                continue;
            }
            if kind == PieceKind::Path && (piece.count_ones() as usize) < spec.min_path_vertices {
                continue;
            }
            for x in 0..t.palette as usize {
                if has_edge {
                    if wanted.is_some_and(|w| w.index() as usize != x) {
                        continue;
                    }
                    if spec.distinct_colours && used & 1 << x != 0 {
                        continue;
                    }
                } else if x != wanted.map_or(0, |w| w.index() as usize) {
                    continue;
                }
                if !t.ok(kind, piece, x) {
                    continue;
                }
                let (p2, c2) = match kind {
                    PieceKind::Path => (paths - 1, cycles),
                    PieceKind::Cycle => (paths, cycles - 1),
                };
                let used2 = if has_edge { used | 1 << x } else { used };
                chosen.push((kind, piece, x));
                if search(
                    t,
                    spec,
                    uncovered ^ piece,
                    p2,
                    c2,
                    used2,
                    has_path || kind == PieceKind::Path,
                    dead,
                    chosen,
                ) {
                    return true;
                }
                chosen.pop();
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & rest;
    }
    dead.insert(key);
    false
}

/// Least number of monochromatic pieces (paths, or also cycles when
/// `cycles` is set) covering the host, with a witness.
pub fn oracle_min_cover(c: &PairColouring, cycles: bool) -> Result<(usize, PartitionCertificate)> {
    let t = PieceTables::new(c)?;
    let size = 1usize << t.total;
    let kinds: &[PieceKind] = if cycles {
        &[PieceKind::Path, PieceKind::Cycle]
    } else {
        &[PieceKind::Path]
    };
    let piece_of = |mask: u32| -> Option<(PieceKind, usize)> {
        kinds
            .iter()
            .flat_map(|&k| (0..t.palette as usize).map(move |x| (k, x)))
            .find(|&(k, x)| t.ok(k, mask, x))
    };
    let mut best = vec![u8::MAX; size];
    let mut choice = vec![0u32; size];
    best[0] = 0;
    for mask in 1..size as u32 {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let piece = sub | low;
            let before = best[(mask ^ piece) as usize];
            if before.saturating_add(1) < best[mask as usize] && piece_of(piece).is_some() {
                best[mask as usize] = before + 1;
                choice[mask as usize] = piece;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut pieces = Vec::new();
    let mut mask = (size - 1) as u32;
    while mask != 0 {
        let piece = choice[mask as usize];
        let (kind, x) = piece_of(piece).unwrap();
        pieces.push(Piece {
            kind,
            colour: Colour::from_index(x as u8).unwrap(),
            vertices: t.order(kind, piece, x),
        });
        mask ^= piece;
    }
    let tag = crate::certificate::host_tag(&Colouring::from(c.clone()));
    Ok((best[size - 1] as usize, PartitionCertificate::new(tag, pieces)))
}

/// Named exhaustive property runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Every 2-colouring of `K^(3)_n`: the spanning path and its split verify.
    Prop8Total,
    /// Permutation oracle agrees that a spanning bicoloured tight path exists.
    Prop8Oracle,
    /// Classification is Other iff the 4-cycle scan finds a good one.
    Lemma6Equiv,
    /// No balanced 4-cycle iff a colour has at most one edge.
    Lemma11Equiv,
    /// Every good 4-cycle extends past every disjoint balanced 4-cycle.
    Lemma10Extend,
    /// Path plus cycle for non-split colourings, verified fallback for split ones.
    Thm4,
    /// As `Thm4`, cross-checked against the partition oracle.
    Thm4Oracle,
    /// Red path plus blue balanced block in `K_n`.
    Lemma14,
    /// Red path plus two blue balanced blocks in `K_{n,n}`.
    Lemma15,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Prop8Total,
        Suite::Prop8Oracle,
        Suite::Lemma6Equiv,
        Suite::Lemma11Equiv,
        Suite::Lemma10Extend,
        Suite::Thm4,
        Suite::Thm4Oracle,
        Suite::Lemma14,
        Suite::Lemma15,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop8Total => "prop8-total",
            Suite::Prop8Oracle => "prop8-oracle",
            Suite::Lemma6Equiv => "lemma6-equiv",
            Suite::Lemma11Equiv => "lemma11-equiv",
            Suite::Lemma10Extend => "lemma10-extend",
            Suite::Thm4 => "thm4",
            Suite::Thm4Oracle => "thm4-oracle",
            Suite::Lemma14 => "lemma14",
            Suite::Lemma15 => "lemma15",
        }
    }

    /// Number of edges of the host the suite enumerates colourings of.
    pub fn edge_count(self, n: usize) -> usize {
        match self {
            Suite::Prop8Total | Suite::Prop8Oracle => binomial(n, 3),
            Suite::Lemma14 => binomial(n, 2),
            _ => n * n,
        }
    }
}

impl Serialize for Suite {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Colouring index: bit (or base-palette digit) `i` is the colour of edge `i`.
    pub index: u64,
    pub reason: String,
}

/// Outcome of [`enumerate_all`]. Only the first few failures (by index)
/// are kept.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub suite: Suite,
    pub n: usize,
    pub checked: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
}

const KEPT_FAILURES: usize = 16;

impl OracleReport {
    fn empty(suite: Suite, n: usize) -> OracleReport {
        OracleReport {
            suite,
            n,
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn merge(mut self, other: OracleReport) -> OracleReport {
        self.checked += other.checked;
        self.failure_count += other.failure_count;
        self.failures.extend(other.failures);
        self.failures.sort_by_key(|f| f.index);
        self.failures.truncate(KEPT_FAILURES);
        self
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} checked, {} failures", self.checked, self.failure_count)?;
        for x in &self.failures {
            write!(f, "\n  #{}: {}", x.index, x.reason)?;
        }
        Ok(())
    }
}

/// Runs `suite` on every 2-colouring of its host with parameter `n`,
/// sharded over `jobs` worker threads.
pub fn enumerate_all(suite: Suite, n: usize, jobs: usize) -> Result<OracleReport> {
    let edges = suite.edge_count(n);
    if edges > 32 {
        return Err(Error::ExceedsCap(format!("2^{edges} colourings exceed the 2^32 guard")));
    }
    let total = 1u64 << edges;
    const CHUNK: u64 = 1 << 12;
    let chunks = total.div_ceil(CHUNK);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let report = pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|k| {
                let mut r = OracleReport::empty(suite, n);
                for index in k * CHUNK..((k + 1) * CHUNK).min(total) {
                    r.checked += 1;
                    if let Err(reason) = check_instance(suite, n, index) {
                        r.failure_count += 1;
                        if r.failures.len() < KEPT_FAILURES {
                            r.failures.push(Failure { index, reason });
                        }
                    }
                }
                r
            })
            .reduce(|| OracleReport::empty(suite, n), OracleReport::merge)
    });
    Ok(report)
}

fn fail<T, E: fmt::Debug>(r: std::result::Result<T, E>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{e:?}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Evaluates one instance of a suite.
pub fn check_instance(suite: Suite, n: usize, index: u64) -> std::result::Result<(), String> {
    match suite {
        Suite::Prop8Total | Suite::Prop8Oracle => {
            let c = TripleColouring::from_bits(n, index);
            let (path, calls) = spanning_bicoloured_path_counted(&c);
            ensure(path.len() == n && calls == n.saturating_sub(1), || {
                format!("{} vertices after {calls} calls", path.len())
            })?;
            let class = fail(classify_tight_path(&c, path.vertices()))?;
            ensure(class != TightPathClass::Invalid, || "path has three runs".into())?;
            let two = fail(split_into_two_mono(&c, &path))?;
            ensure(two.first_colour != two.second_colour, || "colours coincide".into())?;
            if n >= 6 {
                ensure(
                    [&two.first, &two.second].iter().all(|p| p.is_empty() || p.len() >= 3),
                    || format!("edgeless part in {:?} / {:?}", two.first, two.second),
                )?;
            }
            let cert = PartitionCertificate::new(
                format!("h3 {n}"),
                vec![
                    Piece::path(two.first_colour, two.first),
                    Piece::path(two.second_colour, two.second),
                ],
            );
            let host = Colouring::from(c);
            fail(check_certificate(&host, &cert))?;
            if suite == Suite::Prop8Oracle {
                let Colouring::Triples(c) = host else { unreachable!() };
                let witness =
                    fail(oracle_spanning_bipath_exists(&c))?.ok_or("oracle found no spanning bicoloured path")?;
                let class = fail(classify_tight_path(&c, &witness))?;
                ensure(class != TightPathClass::Invalid && witness.len() == n, || {
                    "oracle witness invalid".into()
                })?;
            }
            Ok(())
        }
        Suite::Lemma6Equiv => {
            let c = PairColouring::from_index(PairShape::Bipartite(n), 2, index);
            let cls = fail(classify_bipartite(&c))?;
            let scan = fail(good_c4_scan(&c))?;
            match &cls {
                Classification::Other(w) => {
                    ensure(w.is_good() && w.len() == 4, || "witness is not a good 4-cycle".into())?;
                    ensure(scan.is_some(), || {
                        "Other verdict but the scan finds no good 4-cycle".into()
                    })?;
                }
                Classification::Split(s) => ensure(s.verify(&c) && scan.is_none(), || {
                    format!("split {s:?} / scan {scan:?}")
                })?,
                Classification::VCol(s) => {
                    ensure(s.verify(&c) && scan.is_none(), || format!("V {s:?} / scan {scan:?}"))?
                }
                Classification::Mono(_) => ensure(scan.is_none(), || "mono with a good 4-cycle".into())?,
            }
            ensure(fail(find_good_c4(&c))?.is_some() == scan.is_some(), || {
                "find_good_c4 disagrees".into()
            })?;
            let first = fail(first_good_c4(&c))?;
            let sets = |v: &[usize]| {
                let mut v = v.to_vec();
                v.sort_unstable();
                v
            };
            ensure(
                first.as_ref().map(|b| sets(b.vertices())) == scan.map(|q| sets(&q)),
                || "first_good_c4 differs from the scan".into(),
            )
        }
        Suite::Lemma11Equiv => {
            let c = PairColouring::from_index(PairShape::Bipartite(n), 2, index);
            let scan = fail(balanced_c4_scan(&c))?;
            let near = c.count(Colour::Red).min(c.count(Colour::Blue)) <= 1;
            ensure(scan.is_none() == near, || format!("scan {scan:?}, near-mono {near}"))?;
            let all: Vec<usize> = (0..2 * n).collect();
            let fast = fail(find_balanced_c4(&c, &all))?;
            ensure(fast.is_some() == scan.is_some(), || "find_balanced_c4 disagrees".into())?;
            if near {
                let (p, colour) = fail(near_mono_spanning_path(&c, &all))?;
                ensure(
                    p.len() == 2 * n && p.windows(2).all(|w| c.colour(w[0], w[1]) == colour),
                    || format!("near-mono path {p:?} in {colour}"),
                )?;
            }
            Ok(())
        }
        Suite::Lemma10Extend => {
            let c = PairColouring::from_index(PairShape::Bipartite(n), 2, index);
            let quads: Vec<([usize; 4], usize)> = four_cycles(&c).collect();
            for (cq, _) in &quads {
                let Ok(CycleShape::Bicoloured(good)) = analyse_cycle(&c, cq) else {
                    continue;
                };
                if !good.is_good() {
                    continue;
                }
                for (q, reds) in &quads {
                    if *reds != 2 || q.iter().any(|v| cq.contains(v)) {
                        continue;
                    }
                    let ext = fail(extend_good_cycle(&c, &good, q))?;
                    ensure(ext.is_good() && ext.len() > 4, || {
                        format!("bad extension {:?}", ext.vertices())
                    })?;
                    ensure(ext.vertices().iter().all(|v| cq.contains(v) || q.contains(v)), || {
                        "extension leaves C ∪ Q".into()
                    })?;
                }
            }
            Ok(())
        }
        Suite::Thm4 | Suite::Thm4Oracle => {
            let c = PairColouring::from_index(PairShape::Bipartite(n), 2, index);
            let host = Colouring::from(c.clone());
            let is_split = matches!(fail(classify_bipartite(&c))?, Classification::Split(_));
            if let Verdict::Found(sc) = fail(spanning_bicoloured_or_mono_cycle(&c))? {
                let vs = sc.vertices();
                let mut sorted = vs.to_vec();
                sorted.sort_unstable();
                ensure(sorted == (0..2 * n).collect::<Vec<_>>(), || {
                    format!("cycle {vs:?} is not spanning")
                })?;
                let shape = fail(analyse_cycle(&c, vs))?;
                ensure(
                    matches!(
                        shape,
                        CycleShape::Mono(_) | CycleShape::Bicoloured(_) | CycleShape::Degenerate
                    ),
                    || format!("cycle {vs:?} has more than two runs"),
                )?;
            } else {
                ensure(is_split, || "spanning cycle search reported a split".into())?;
            }
            let found = match fail(partition_path_cycle(&c))? {
                Verdict::Found(cert) => {
                    ensure(!is_split, || "split colouring was solved".into())?;
                    fail(check_certificate(&host, &cert))?;
                    let s = cert.shape();
                    ensure(s.within(1, 1), || format!("shape {s}"))?;
                    let coloured: Vec<Colour> = cert
                        .pieces
                        .iter()
                        .filter(|p| p.vertices.len() >= 2)
                        .map(|p| p.colour)
                        .collect();
                    ensure(coloured.len() < 2 || coloured[0] != coloured[1], || {
                        "pieces share a colour".into()
                    })?;
                    let Verdict::Found(paths) = fail(two_paths(&c))? else {
                        return Err("two_paths disagrees with partition_path_cycle".into());
                    };
                    fail(check_certificate(&host, &paths))?;
                    true
                }
                Verdict::SplitDetected(s) => {
                    ensure(is_split && s.verify(&c), || {
                        "SplitDetected on a non-split colouring".into()
                    })?;
                    let cert = fail(split_three_paths(&c, &s))?;
                    fail(check_certificate(&host, &cert))?;
                    ensure(cert.shape().within(3, 0), || "fallback exceeds three paths".into())?;
                    false
                }
            };
            if suite == Suite::Thm4Oracle {
                let oracle = fail(oracle_partition_exists(&c, &ShapeSpec::path_and_cycle()))?;
                if found || !is_split {
                    ensure(oracle.is_some(), || "oracle finds no path + cycle partition".into())?;
                }
                if let Some(w) = oracle {
                    fail(check_certificate(&host, &w))?;
                }
            }
            Ok(())
        }
        Suite::Lemma14 => {
            let c = PairColouring::from_index(PairShape::Complete(n), 2, index);
            let l = fail(lemma14_partition(&c))?;
            ensure(verify_lemma14(&c, &l), || format!("{l:?}"))
        }
        Suite::Lemma15 => {
            let c = PairColouring::from_index(PairShape::Bipartite(n), 2, index);
            let l = fail(lemma15_partition(&c))?;
            ensure(verify_lemma15(&c, &l), || format!("{l:?}"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::gen_split_bipartite;

    #[test]
    fn permutation_oracle_small() {
        let red = TripleColouring::uniform(4, Colour::Red).unwrap();
        assert!(oracle_spanning_bipath_exists(&red).unwrap().is_some());
        assert!(oracle_spanning_bipath_exists(&TripleColouring::uniform(10, Colour::Red).unwrap()).is_err());
    }

    #[test]
    fn split_k33_paths() {
        let (c, _) = gen_split_bipartite(3, 1, 1).unwrap();
        let distinct = ShapeSpec {
            distinct_colours: true,
            ..ShapeSpec::new(2, 0)
        };
        assert!(oracle_partition_exists(&c, &distinct).unwrap().is_none());
        let three = oracle_partition_exists(&c, &ShapeSpec::new(3, 0)).unwrap().unwrap();
        assert_eq!(check_certificate(&Colouring::from(c), &three), Ok(()));
    }

    #[test]
    fn small_suites_pass() {
        for (suite, n) in [
            (Suite::Prop8Total, 5),
            (Suite::Prop8Oracle, 5),
            (Suite::Lemma6Equiv, 3),
            (Suite::Lemma11Equiv, 3),
            (Suite::Thm4Oracle, 2),
            (Suite::Lemma14, 5),
            (Suite::Lemma15, 2),
        ] {
            let r = enumerate_all(suite, n, 2).unwrap();
            assert!(r.passed(), "{suite} n={n}: {r}");
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }
}
