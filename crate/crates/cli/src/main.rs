//! `btk`: cohomology tables, Betti tables, splitting criteria, Ext-sum
//! bounds and the tower pipeline for bundles on projective space.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use btk_core::algebra::field::PrimeField;
use btk_core::algebra::matrix::GradedMatrix;
use btk_core::algebra::ring::Ring;
use btk_core::catalog;
use btk_core::format::ModuleFile;
use btk_core::tower::AmbientSplit;

#[derive(Parser, Debug)]
#[command(name = "btk", version, about = "Splitting and extension checks for vector bundles on projective space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of h^p(F(a))
    Coh(Common),
    /// Graded Betti numbers of the input module
    Betti(Common),
    /// Intermediate cohomology splitting test
    Horrocks(Common),
    /// Vanishing of Ext^1(E, E(-i)) for i > 0
    Kempf(Common),
    /// Ext^1 sums bounding extensions
    Bounds(Common),
    /// Tower ideal, point search and splitting on P^{n+m}
    Tower(Common),
    /// List catalog entries
    Catalog(FormatOnly),
}

#[derive(Args, Debug)]
struct FormatOnly {
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Args, Debug)]
struct Common {
    /// Presentation file
    #[arg(long, conflicts_with = "catalog")]
    module: Option<PathBuf>,
    /// Catalog entry, e.g. `tangent` or `sum:-1,3`
    #[arg(long)]
    catalog: Option<String>,
    /// Projective dimension for catalog entries
    #[arg(long)]
    n: Option<usize>,
    /// Twist range lo:hi, defaults to the certified window
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    range: Option<(i64, i64)>,
    /// Split of the ambient space as n,m (tower only)
    #[arg(long, value_parser = parse_ambient)]
    ambient: Option<(usize, usize)>,
    /// Last order of the tower
    #[arg(long)]
    imax: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Pretty,
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo = lo.trim().parse().map_err(|_| format!("bad bound `{lo}`"))?;
    let hi = hi.trim().parse().map_err(|_| format!("bad bound `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn parse_ambient(s: &str) -> std::result::Result<(usize, usize), String> {
    let (n, m) = s.split_once(',').ok_or("expected n,m")?;
    let n = n.trim().parse().map_err(|_| format!("bad n `{n}`"))?;
    let m = m.trim().parse().map_err(|_| format!("bad m `{m}`"))?;
    Ok((n, m))
}

/// The input module over a ring with `nvars` variables, or with whatever
/// the file declares when `nvars` is None.
fn load(c: &Common, nvars: Option<usize>) -> Result<(Ring<PrimeField>, GradedMatrix<u32>)> {
    match (&c.module, &c.catalog) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| btk_core::Error::Malformed(format!("cannot read {}: {e}", path.display())))?;
            let file = ModuleFile::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
            if let Some(nv) = nvars {
                if file.ring.nvars != nv {
                    return Err(btk_core::Error::Malformed(format!(
                        "{} declares {} variables, expected {nv}",
                        path.display(),
                        file.ring.nvars
                    ))
                    .into());
                }
            }
            Ok((file.ring, file.matrix))
        }
        (None, Some(name)) => {
            let nv = match nvars {
                Some(nv) => nv,
                None => c.n.ok_or_else(|| btk_core::Error::Malformed("--catalog needs --n".into()))? + 1,
            };
            let ring = Ring::new(PrimeField::default(), nv);
            let phi = catalog::build(&ring, name)?;
            Ok((ring, phi))
        }
        (None, None) => Err(btk_core::Error::Malformed("one of --module or --catalog is required".into()).into()),
    }
}

fn run(cli: Cli) -> Result<String> {
    let out = match cli.command {
        Command::Catalog(f) => report::catalog(f.format == Format::Pretty),
        Command::Coh(c) => {
            let (ring, phi) = load(&c, None)?;
            report::coh(&ring, &phi, c.range, c.format == Format::Pretty)?
        }
        Command::Betti(c) => {
            let (ring, phi) = load(&c, None)?;
            report::betti(&ring, &phi, c.format == Format::Pretty)?
        }
        Command::Horrocks(c) => {
            let (ring, phi) = load(&c, None)?;
            report::horrocks(&ring, &phi, c.format == Format::Pretty)?
        }
        Command::Kempf(c) => {
            let (ring, phi) = load(&c, None)?;
            report::kempf(&ring, &phi, c.format == Format::Pretty)?
        }
        Command::Bounds(c) => {
            let (ring, phi) = load(&c, None)?;
            report::bounds(&ring, &phi, c.format == Format::Pretty)?
        }
        Command::Tower(c) => {
            let Some((n, m)) = c.ambient else { bail!(btk_core::Error::Malformed("tower needs --ambient n,m".into())) };
            let ambient = AmbientSplit::new(n, m)?;
            if c.n.is_some_and(|k| k != n + m) {
                bail!(btk_core::Error::Malformed(format!("--n must equal n + m = {}", n + m)));
            }
            let (ring, phi) = load(&c, Some(n + m + 1))?;
            report::tower(&ambient, &ring, &phi, c.imax, c.seed, c.format == Format::Pretty)?
        }
    };
    Ok(out)
}

/// 2 malformed input, 3 budget exhausted, 4 domain or invariant failure.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<btk_core::Error>().map(btk_core::Error::root) {
        Some(btk_core::Error::Malformed(_)) => 2,
        Some(btk_core::Error::Budget(_)) => 3,
        Some(_) => 4,
        None => 2,
    }
}

fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("BTK_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| btk_core::Error::Malformed(format!("BTK_THREADS must be a positive integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("configuring the thread pool")?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
