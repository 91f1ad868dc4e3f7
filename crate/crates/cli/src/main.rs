//! `monopart` command-line interface.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 split colouring detected,
//! 3 certificate violation (or failed enumeration).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use monopart::bipartite::{
    partition_path_cycle, partition_path_cycle_coloured, spanning_bicoloured_or_mono_cycle, two_paths, SpanningCycle,
    Verdict,
};
use monopart::colouring::{HyperSplitSizes, TransversalBacking, TransversalColouring};
use monopart::format::{parse_colouring, serialize_colouring};
use monopart::generate::{
    gen_random, gen_recoloured_split, gen_split_bipartite, gen_three_colour_split, gen_v_colouring,
};
use monopart::index::Shape;
use monopart::multipartite::{
    check_side_consistency, min_cover_exact, sample_mono_tight_path, verify_counting, COVER_CAP,
};
use monopart::oracle::{enumerate_all, Suite};
use monopart::three_colour::{partition3_bipartite, partition3_complete};
use monopart::tight_path::partition_two_tight_paths;
use monopart::{
    check_certificate, Colour, Colouring, PairColouring, PairShape, PartitionCertificate, PieceKind, SplitStructure,
};

#[derive(Parser)]
#[command(
    name = "monopart",
    version,
    about = "Monochromatic path and cycle partitions of edge-coloured graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a colouring file.
    Gen(GenArgs),
    /// Partition a colouring and write a certificate.
    Solve(SolveArgs),
    /// Check a certificate against a colouring.
    Verify(VerifyArgs),
    /// Run an exhaustive suite over every 2-colouring of a small host.
    Enumerate(EnumerateArgs),
    /// Time solves over seeded random colourings.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    H3,
    Kn,
    Bnn,
    B2,
    Rxn,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Vertices (per class for bnn and rxn).
    #[arg(long)]
    n: usize,
    /// Uniformity of an rxn host; implied by --split.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, default_value_t = 2)]
    palette: u8,
    /// Seed for a random colouring.
    #[arg(long)]
    seed: Option<u64>,
    /// Split part sizes: `a1,b1` for bnn, `s1,...,sr` for rxn.
    #[arg(long, value_delimiter = ',')]
    split: Option<Vec<usize>>,
    /// With --split on bnn: recolour the red edge `a,b` blue.
    #[arg(long, value_delimiter = ',', requires = "split")]
    recolour: Option<Vec<usize>>,
    /// V-colouring of bnn: class-1 vertices below the cut are red.
    #[arg(long)]
    v_cut: Option<usize>,
    /// Three-colour split of bnn with block sizes `x,y,z` on both sides.
    #[arg(long, value_delimiter = ',')]
    blocks: Option<Vec<usize>>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct SolveArgs {
    colouring: PathBuf,
    /// bnn with two colours: two paths instead of a path and a cycle.
    #[arg(long, conflicts_with = "force_red_path")]
    two_paths: bool,
    /// bnn with two colours: insist on a red path and a blue cycle.
    #[arg(long)]
    force_red_path: bool,
    /// Random monochromatic paths sampled for an rxn report.
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    colouring: PathBuf,
    certificate: PathBuf,
}

#[derive(clap::Args)]
struct EnumerateArgs {
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = default_jobs())]
    jobs: usize,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    palette: u8,
    /// Number of seeded colourings.
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    start_seed: u64,
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: monopart::Error| e.to_string())
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

enum Outcome {
    Ok,
    Split,
    Violation,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Verify(a) => verify(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Split) => ExitCode::from(2),
        Ok(Outcome::Violation) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{text}")?;
            Ok(())
        }
    }
}

fn read_colouring(path: &Path) -> Result<Colouring> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_colouring(&text).with_context(|| format!("parsing {}", path.display()))
}

fn pair(a: &[usize], what: &str) -> Result<(usize, usize)> {
    match *a {
        [x, y] => Ok((x, y)),
        _ => bail!("{what} takes two comma-separated values"),
    }
}

fn gen(a: GenArgs) -> Result<Outcome> {
    let n = a.n;
    let bipartite = matches!(a.kind, Kind::Bnn | Kind::B2);
    let colouring: Colouring = if let Some(blocks) = &a.blocks {
        if !bipartite {
            bail!("--blocks needs --kind bnn");
        }
        let b: [usize; 3] = blocks
            .as_slice()
            .try_into()
            .map_err(|_| anyhow!("--blocks takes three sizes"))?;
        if b.iter().sum::<usize>() != n {
            bail!("block sizes must sum to n = {n}");
        }
        gen_three_colour_split(b, b)?.into()
    } else if let Some(split) = &a.split {
        match a.kind {
            Kind::Bnn | Kind::B2 => {
                let (a1, b1) = pair(split, "--split")?;
                match &a.recolour {
                    Some(e) => gen_recoloured_split(n, a1, b1, pair(e, "--recolour")?)?.into(),
                    None => gen_split_bipartite(n, a1, b1)?.0.into(),
                }
            }
            Kind::Rxn => {
                if a.r.is_some_and(|r| r != split.len()) {
                    bail!("--r disagrees with the number of split sizes");
                }
                TransversalColouring::rule(HyperSplitSizes::new(n, split.clone())?).into()
            }
            _ => bail!("--split needs --kind bnn or rxn"),
        }
    } else if let Some(cut) = a.v_cut {
        if !bipartite {
            bail!("--v-cut needs --kind bnn");
        }
        gen_v_colouring(n, cut)?.into()
    } else {
        let seed = a
            .seed
            .ok_or_else(|| anyhow!("random colourings need an explicit --seed"))?;
        let shape = match a.kind {
            Kind::H3 => Shape::Triples(n),
            Kind::Kn => Shape::Complete(n),
            Kind::Bnn | Kind::B2 => Shape::Bipartite(n),
            Kind::Rxn => Shape::Transversal {
                r: a.r.ok_or_else(|| anyhow!("--kind rxn needs --r or --split"))?,
                n,
            },
        };
        gen_random(shape, a.palette, seed)?
    };
    emit(a.output.as_deref(), &serialize_colouring(&colouring))?;
    Ok(Outcome::Ok)
}

fn report_split(s: &SplitStructure) -> Result<Outcome> {
    let json = serde_json::json!({ "verdict": "split", "structure": s });
    emit(None, &serde_json::to_string_pretty(&json)?)?;
    eprintln!("split colouring detected");
    Ok(Outcome::Split)
}

fn solve(a: SolveArgs) -> Result<Outcome> {
    let colouring = read_colouring(&a.colouring)?;
    let cert = match &colouring {
        Colouring::Triples(t) => partition_two_tight_paths(t)?,
        Colouring::Pairs(p) if p.palette() == 3 => match p.shape() {
            PairShape::Complete(_) => partition3_complete(p)?,
            PairShape::Bipartite(_) => partition3_bipartite(p)?,
        },
        Colouring::Pairs(p) if p.is_bipartite() => {
            let verdict = if a.force_red_path {
                red_path_blue_cycle(p)?
            } else if a.two_paths {
                two_paths(p)?
            } else {
                partition_path_cycle(p)?
            };
            match verdict {
                Verdict::Found(cert) => cert,
                Verdict::SplitDetected(s) => return report_split(&s),
            }
        }
        Colouring::Pairs(_) => bail!("complete graphs are solved with three colours"),
        Colouring::Transversal(t) => return transversal_report(t, a.samples, a.output.as_deref()),
    };
    if let Err(v) = check_certificate(&colouring, &cert) {
        eprintln!("violation: {v}");
        return Ok(Outcome::Violation);
    }
    emit(a.output.as_deref(), &cert.to_json())?;
    eprintln!("shape: {}", cert.shape());
    Ok(Outcome::Ok)
}

fn red_path_blue_cycle(p: &PairColouring) -> Result<Verdict<PartitionCertificate>> {
    match spanning_bicoloured_or_mono_cycle(p)? {
        Verdict::SplitDetected(s) => Ok(Verdict::SplitDetected(s)),
        Verdict::Found(SpanningCycle::Bicoloured(cyc)) if !cyc.is_good() => {
            Ok(Verdict::Found(partition_path_cycle_coloured(p, &cyc)?))
        }
        Verdict::Found(_) => {
            let Verdict::Found(cert) = partition_path_cycle(p)? else {
                unreachable!()
            };
            let coloured = cert
                .pieces
                .iter()
                .filter(|x| x.vertices.len() >= 2)
                .all(|x| match x.kind {
                    PieceKind::Path => x.colour == Colour::Red,
                    PieceKind::Cycle => x.colour == Colour::Blue,
                });
            if !coloured {
                bail!("no red path and blue cycle partition found for this colouring");
            }
            Ok(Verdict::Found(cert))
        }
    }
}

fn transversal_report(t: &TransversalColouring, samples: u64, output: Option<&Path>) -> Result<Outcome> {
    let (r, n) = (t.r(), t.n());
    let mut report = serde_json::json!({
        "r": r,
        "n": n,
        "counting": verify_counting(r, n as u128)?,
    });
    if let TransversalBacking::Rule(sizes) = t.backing() {
        let one_sided = (0..samples)
            .filter(|&seed| {
                let p = sample_mono_tight_path(sizes, seed, r * n);
                check_side_consistency(sizes, &p) == Ok(true)
            })
            .count();
        report["sizes"] = serde_json::json!(sizes.sizes());
        report["sampled_paths"] = samples.into();
        report["one_sided_paths"] = one_sided.into();
    }
    if r * n <= COVER_CAP {
        let (k, cert) = min_cover_exact(t, COVER_CAP)?;
        report["min_cover"] = k.into();
        report["certificate"] = serde_json::to_value(&cert)?;
    }
    emit(output, &serde_json::to_string_pretty(&report)?)?;
    Ok(Outcome::Ok)
}

fn verify(a: VerifyArgs) -> Result<Outcome> {
    let colouring = read_colouring(&a.colouring)?;
    let text = fs::read_to_string(&a.certificate).with_context(|| format!("reading {}", a.certificate.display()))?;
    let cert =
        PartitionCertificate::from_json(&text).with_context(|| format!("parsing {}", a.certificate.display()))?;
    match check_certificate(&colouring, &cert) {
        Ok(()) => {
            emit(None, &format!("ok: {}", cert.shape()))?;
            Ok(Outcome::Ok)
        }
        Err(v) => {
            emit(None, &format!("violation: {v}"))?;
            Ok(Outcome::Violation)
        }
    }
}

fn enumerate(a: EnumerateArgs) -> Result<Outcome> {
    let report = enumerate_all(a.suite, a.n, a.jobs)?;
    if a.json {
        emit(None, &serde_json::to_string_pretty(&report)?)?;
    } else {
        emit(None, &report.to_string())?;
    }
    Ok(if report.passed() {
        Outcome::Ok
    } else {
        Outcome::Violation
    })
}

fn solve_once(c: &Colouring) -> Result<Option<PartitionCertificate>> {
    Ok(match c {
        Colouring::Triples(t) => Some(partition_two_tight_paths(t)?),
        Colouring::Pairs(p) if p.palette() == 3 => Some(match p.shape() {
            PairShape::Complete(_) => partition3_complete(p)?,
            PairShape::Bipartite(_) => partition3_bipartite(p)?,
        }),
        Colouring::Pairs(p) if p.is_bipartite() => partition_path_cycle(p)?.found(),
        _ => bail!("bench supports h3, bnn and three-coloured kn"),
    })
}

fn bench(a: BenchArgs) -> Result<Outcome> {
    let shape = match a.kind {
        Kind::H3 => Shape::Triples(a.n),
        Kind::Kn => Shape::Complete(a.n),
        Kind::Bnn | Kind::B2 => Shape::Bipartite(a.n),
        Kind::Rxn => bail!("bench does not support rxn"),
    };
    let corpus = (a.start_seed..a.start_seed + a.seeds)
        .map(|seed| gen_random(shape, a.palette, seed))
        .collect::<monopart::Result<Vec<_>>>()?;
    let start = Instant::now();
    let certs = corpus.iter().map(solve_once).collect::<Result<Vec<_>>>()?;
    let elapsed = start.elapsed();
    let mut split = 0;
    for (c, cert) in corpus.iter().zip(&certs) {
        match cert {
            Some(cert) => {
                if let Err(v) = check_certificate(c, cert) {
                    eprintln!("violation: {v}");
                    return Ok(Outcome::Violation);
                }
            }
            None => split += 1,
        }
    }
    let secs = elapsed.as_secs_f64();
    let rate = a.seeds as f64 / secs.max(1e-9);
    emit(
        None,
        &format!(
            "{shape}: {} solves in {secs:.3}s ({rate:.1} solves/s), all verified, {split} split",
            a.seeds
        ),
    )?;
    Ok(Outcome::Ok)
}
