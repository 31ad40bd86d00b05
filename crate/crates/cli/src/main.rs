use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;

use bicover::analysis::{self, Block, Containment, WidthReport};
use bicover::covers::{self, CoverCertificate};
use bicover::search::{self, Claim, ClaimReport, EnumSpec};
use bicover::{constructions, document, dual, ColoredBiclique, Component, Error, Vertex};

mod output;

use output::Sink;

const GUARD_ENV: &str = "BCL_GUARD_OVERRIDE";

#[derive(Parser)]
#[command(name = "bicover", version, about = "Monochromatic component covers of edge-colored bicliques")]
struct Cli {
    /// Write the result to this path instead of stdout (a file prefix for `dualize`).
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Emit JSON instead of TOML documents or key: value lines.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for the parallel sweeps.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a construction.
    #[command(subcommand)]
    Gen(Gen),
    /// Widths, structural predicates, and blocks of a coloring document.
    Analyze {
        file: PathBuf,
        /// Count isolated vertices as singleton components in the widths.
        #[arg(long)]
        include_isolated: bool,
    },
    /// Cover the vertices of a coloring by monochromatic components.
    Cover(CoverArgs),
    /// The hypergraph pair of a spanning bi-equivalence coloring.
    Dualize { file: PathBuf },
    /// Exact transversal number of a hypergraph document, or of the union of a pair document.
    Transversal { file: PathBuf },
    /// Check a claim over enumerated or constructed colorings.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum Gen {
    /// The permutation coloring with r colors.
    Gstar {
        #[arg(long)]
        r: usize,
    },
    /// The crosswise doubling family with r colors.
    Doubling {
        #[arg(long)]
        r: usize,
    },
    /// The Hamiltonian-cycle blow-up with parameter s.
    Hamfactor {
        #[arg(long)]
        s: usize,
    },
    /// The projective plane of prime order q with one point removed.
    Truncplane {
        #[arg(long)]
        q: usize,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("method").required(true).args(["exact", "double_star", "structural", "homogeneous"])))]
struct CoverArgs {
    file: PathBuf,
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    double_star: bool,
    #[arg(long)]
    structural: bool,
    #[arg(long)]
    homogeneous: bool,
    /// Center on the X side for `--double-star`.
    #[arg(long, default_value_t = 0, requires = "double_star")]
    x: usize,
    /// Center on the Y side for `--double-star`.
    #[arg(long, default_value_t = 0, requires = "double_star")]
    y: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    claim: Claim,
    #[arg(long)]
    r: usize,
    #[arg(long, default_value_t = 3)]
    max_m: usize,
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    /// Enumerate every coloring up to the given shape (the default).
    #[arg(long, conflicts_with = "sampled")]
    exhaustive: bool,
    /// Check constructed fixtures with r colors instead of enumerating.
    #[arg(long)]
    sampled: bool,
    /// Enumerate one representative per row/column/color symmetry orbit.
    #[arg(long)]
    canonical: bool,
    /// Cover bound for `--claim cover` (default 2r-2, at least 1).
    #[arg(long)]
    bound: Option<usize>,
}

/// Failure to run a command, as opposed to a claim that fails.
#[derive(Debug)]
struct Fatal(String);

impl From<Error> for Fatal {
    fn from(e: Error) -> Self {
        Fatal(e.to_string())
    }
}

impl From<std::io::Error> for Fatal {
    fn from(e: std::io::Error) -> Self {
        Fatal(e.to_string())
    }
}

type Outcome = Result<ExitCode, Fatal>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads.into()).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let sink = Sink::new(cli.out.clone(), cli.json);
    match run(cli.command, &sink) {
        Ok(code) => code,
        Err(Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, sink: &Sink) -> Outcome {
    match command {
        Command::Gen(g) => gen(g, sink),
        Command::Analyze { file, include_isolated } => analyze(&read_coloring(&file)?, include_isolated, sink),
        Command::Cover(args) => cover(args, sink),
        Command::Dualize { file } => dualize(&read_coloring(&file)?, sink),
        Command::Transversal { file } => transversal(&file, sink),
        Command::Verify(args) => verify(args, sink),
    }
}

fn read(path: &Path) -> Result<String, Fatal> {
    std::fs::read_to_string(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn read_coloring(path: &Path) -> Result<ColoredBiclique, Fatal> {
    document::parse_coloring(&read(path)?).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn gen(g: Gen, sink: &Sink) -> Outcome {
    let cb = match g {
        Gen::Gstar { r } => constructions::gstar(r)?,
        Gen::Doubling { r } => constructions::doubling(r)?,
        Gen::Hamfactor { s } => constructions::ham_factor(s)?,
        Gen::Truncplane { q } => {
            let h = constructions::truncated_plane(q)?;
            sink.emit(&h, || document::serialize_hypergraph(&h))?;
            return Ok(ExitCode::SUCCESS);
        }
    };
    sink.emit(&cb, || document::serialize_coloring(&cb))?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct Analysis {
    m: usize,
    n: usize,
    r: usize,
    include_isolated: bool,
    widths: Vec<usize>,
    nontrivial: Vec<usize>,
    bi_equivalence: Vec<bool>,
    spanning: bool,
    spanning_witness: Option<(Vertex, u16)>,
    antichain: Option<bool>,
    containment: Option<Containment>,
    reduced: bool,
    singletons: Vec<(Vertex, Vec<u16>)>,
    blocks: Vec<Block>,
}

fn analyze(cb: &ColoredBiclique, include_isolated: bool, sink: &Sink) -> Outcome {
    let report = WidthReport::new(cb);
    let structured = analysis::is_all_bi_equivalence(cb) && analysis::is_spanning(cb);
    let containment = if structured { analysis::antichain_violation(cb)? } else { None };
    let a = Analysis {
        m: cb.m(),
        n: cb.n(),
        r: cb.r(),
        include_isolated,
        widths: report
            .per_color
            .iter()
            .map(|w| if include_isolated { w.with_isolated() } else { w.nontrivial })
            .collect(),
        nontrivial: report.per_color.iter().map(|w| w.nontrivial).collect(),
        bi_equivalence: cb.colors().map(|c| analysis::is_bi_equivalence(cb, c)).collect::<Result<_, _>>()?,
        spanning: analysis::is_spanning(cb),
        spanning_witness: analysis::spanning_witness(cb),
        antichain: structured.then_some(containment.is_none()),
        containment,
        reduced: analysis::is_reduced(cb),
        singletons: analysis::singleton_blocks(cb),
        blocks: if analysis::is_all_bi_equivalence(cb) { analysis::blocks(cb) } else { Vec::new() },
    };
    sink.emit(&a, || analysis_lines(&a))?;
    Ok(ExitCode::SUCCESS)
}

fn analysis_lines(a: &Analysis) -> String {
    let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let mut out = format!("shape: {}x{}\ncolors: {}\n", a.m, a.n, a.r);
    for (i, w) in a.widths.iter().enumerate() {
        out += &format!("width {}: {w}\n", i + 1);
    }
    let bi: Vec<usize> = (1..=a.r).filter(|&c| a.bi_equivalence[c - 1]).collect();
    out += &format!("bi-equivalence colors: {}\n", join(&bi));
    out += &format!("spanning: {}\n", a.spanning);
    if let Some((v, c)) = a.spanning_witness {
        out += &format!("missing: {v} has no edge of color {c}\n");
    }
    match a.antichain {
        Some(flag) => out += &format!("antichain: {flag}\n"),
        None => out += "antichain: n/a\n",
    }
    if let Some(c) = &a.containment {
        out += &format!("containment: {} inside {}\n", block_text(&c.inner), block_text(&c.outer));
    }
    out += &format!("reduced: {}\n", a.reduced);
    for (v, colors) in &a.singletons {
        let cs: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        out += &format!("singleton {v}: {}\n", join(&cs));
    }
    for b in &a.blocks {
        out += &format!("block: {}\n", block_text(b));
    }
    out
}

fn block_text(b: &Block) -> String {
    let side = match b.side {
        analysis::Side::X => 'x',
        analysis::Side::Y => 'y',
    };
    let members: Vec<String> = b.members.iter().map(|i| format!("{side}{i}")).collect();
    format!("color {} {{{}}}", b.color, members.join(","))
}

fn component_text(k: &Component) -> String {
    let vs: Vec<String> = k.vertices().map(|v| v.to_string()).collect();
    format!("color {} {{{}}}", k.color, vs.join(","))
}

#[derive(Serialize)]
struct Homogeneous {
    color: u16,
    width: usize,
}

fn cover(args: CoverArgs, sink: &Sink) -> Outcome {
    let cb = read_coloring(&args.file)?;
    if args.homogeneous {
        let (color, width) = covers::homogeneous_cover_number(&cb)?;
        let h = Homogeneous { color, width };
        sink.emit(&h, || format!("color: {color}\nsize: {width}\n"))?;
        return Ok(ExitCode::SUCCESS);
    }
    let cert = if args.exact {
        covers::min_cover(&cb)
    } else if args.double_star {
        covers::double_star_cover(&cb, args.x, args.y)?
    } else {
        covers::structural_cover(&cb)?
    };
    sink.emit(&cert, || certificate_lines(&cert))?;
    Ok(ExitCode::SUCCESS)
}

fn certificate_lines(cert: &CoverCertificate) -> String {
    let mut out = format!("rule: {}\noptimal: {}\nsize: {}\n", cert.rule.tag(), cert.optimal, cert.len());
    for k in cert.cover.parts() {
        out += &format!("component: {}\n", component_text(k));
    }
    out
}

fn dualize(cb: &ColoredBiclique, sink: &Sink) -> Outcome {
    let dp = dual::dualize(cb)?;
    match sink.out() {
        Some(prefix) if !sink.json() => {
            let h1 = with_suffix(prefix, "h1.toml");
            let h2 = with_suffix(prefix, "h2.toml");
            std::fs::write(&h1, document::serialize_hypergraph(&dp.h1))?;
            std::fs::write(&h2, document::serialize_hypergraph(&dp.h2))?;
            let mut lines = format!("h1: {}\nh2: {}\n", h1.display(), h2.display());
            for (i, k) in dp.components.iter().enumerate() {
                lines += &format!("vertex {i}: {}\n", component_text(k));
            }
            print!("{lines}");
        }
        _ => {
            #[derive(Serialize)]
            struct Pair<'a> {
                h1: &'a bicover::PartiteHypergraph,
                h2: &'a bicover::PartiteHypergraph,
                components: &'a [Component],
            }
            let pair = Pair {
                h1: &dp.h1,
                h2: &dp.h2,
                components: &dp.components,
            };
            sink.emit(&pair, || document::serialize_pair(&dp.h1, &dp.h2))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(suffix);
    PathBuf::from(s)
}

#[derive(Serialize)]
struct Transversal {
    tau: usize,
    witness: Vec<usize>,
}

fn transversal(path: &Path, sink: &Sink) -> Outcome {
    let text = read(path)?;
    let edges = match document::parse_hypergraph(&text) {
        Ok(h) => h.edges().to_vec(),
        Err(single) => match document::parse_pair(&text) {
            Ok((h1, h2)) => h1.edges().iter().chain(h2.edges()).cloned().collect(),
            Err(_) => return Err(Fatal(format!("{}: {single}", path.display()))),
        },
    };
    let (tau, witness) = dual::transversal_number(&edges)?;
    let t = Transversal { tau, witness };
    sink.emit(&t, || {
        let w: Vec<String> = t.witness.iter().map(ToString::to_string).collect();
        format!("tau: {}\nwitness: {}\n", t.tau, w.join(" "))
    })?;
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs, sink: &Sink) -> Outcome {
    let report: ClaimReport = if args.sampled {
        if args.r == 0 {
            return Err(Fatal("--r must be at least 1".into()));
        }
        search::run_sampled(args.claim, &search::sample_fixtures(), Some(args.r), args.bound)
    } else {
        let override_guard = std::env::var(GUARD_ENV).is_ok_and(|v| v == "1");
        let spec = EnumSpec::new(args.r, args.max_m, args.max_n)
            .canonical(args.canonical)
            .override_guard(override_guard);
        search::run_exhaustive(args.claim, spec, args.bound)?
    };
    sink.emit(&report, || format!("{}\n{}", report.summary(), report.to_lines()))?;
    Ok(if report.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
