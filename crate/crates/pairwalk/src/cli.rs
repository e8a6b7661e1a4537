//! Command-line surface: deterministic CSV (and optional SVG) output for the
//! graph catalog, the simulator, and the spectral pipeline.
//!
//! Exit codes: 0 success, 1 usage error, 2 numeric or validation failure,
//! 3 empty spectrum.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::observables::{record_series, InitialState};
use crate::plot;
use crate::spectral::{
    feigenbaum_sweep, power_spectrum, prominent_frequencies, FeigenbaumPoint, Tier,
};
use crate::walk::{InteractionScheme, WalkSpace};

/// Parses an interaction phase given either in radians (`2.356`) or as a
/// multiple of pi (`0.75pi`, `pi`).
pub fn parse_phi(text: &str) -> std::result::Result<f64, String> {
    let trimmed = text.trim();
    let lower = trimmed.to_ascii_lowercase();
    let value = if let Some(prefix) = lower.strip_suffix("pi") {
        let prefix = prefix.trim();
        let factor: f64 = if prefix.is_empty() {
            1.0
        } else {
            prefix
                .parse()
                .map_err(|_| format!("cannot parse {trimmed:?} as a multiple of pi"))?
        };
        factor * std::f64::consts::PI
    } else {
        trimmed
            .parse()
            .map_err(|_| format!("cannot parse {trimmed:?} as radians (try e.g. 0.75pi)"))?
    };
    if !value.is_finite() {
        return Err(format!("phase {trimmed:?} is not finite"));
    }
    Ok(value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InitialKind {
    /// Equal superposition of all position states.
    Equal,
    /// Seeded uniform-random amplitudes (requires --seed).
    Random,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Catalog graph name or path to a graph file.
    #[arg(long, default_value = "k8")]
    graph: String,

    /// Number of walk steps (the series has steps + 1 samples).
    #[arg(long, default_value_t = 500)]
    steps: usize,

    /// Initial state kind.
    #[arg(long, value_enum, default_value_t = InitialKind::Equal)]
    initial: InitialKind,

    /// Random-state seed; required with `--initial random`.
    #[arg(long)]
    seed: Option<u64>,

    /// Tapered-cosine window shape parameter in [0, 1].
    #[arg(long, default_value_t = 0.4)]
    alpha: f64,

    /// Directory the data files are written to.
    #[arg(long, default_value = ".")]
    out: PathBuf,

    /// Also write SVG charts next to the CSV files.
    #[arg(long)]
    plot: bool,
}

impl CommonArgs {
    fn space(&self) -> Result<WalkSpace> {
        Ok(WalkSpace::new(load_graph(&self.graph)?))
    }

    fn initial_state(&self) -> Result<InitialState> {
        match self.initial {
            InitialKind::Equal => Ok(InitialState::EqualSuperposition),
            InitialKind::Random => match self.seed {
                Some(seed) => Ok(InitialState::Random { seed }),
                None => Err(Error::InvalidConfig(
                    "--initial random requires --seed".into(),
                )),
            },
        }
    }

    fn out_path(&self, file: &str) -> Result<PathBuf> {
        fs::create_dir_all(&self.out).map_err(|source| Error::Io {
            path: self.out.display().to_string(),
            source,
        })?;
        Ok(self.out.join(file))
    }
}

/// Resolves a `--graph` value: a catalog name, or else a graph file path.
fn load_graph(spec: &str) -> Result<Graph> {
    match graph::catalog(spec) {
        Ok(g) => Ok(g),
        Err(unknown) => {
            let path = Path::new(spec);
            if path.exists() {
                let text = fs::read_to_string(path).map_err(|source| Error::Io {
                    path: spec.to_string(),
                    source,
                })?;
                Graph::from_text(&text)
            } else if spec.contains('/') || spec.contains('.') {
                Err(Error::Io {
                    path: spec.to_string(),
                    source: std::io::Error::new(std::io::ErrorKind::NotFound, "no such file"),
                })
            } else {
                Err(unknown)
            }
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pairwalk",
    about = "Interacting two-particle quantum walks: entanglement series, spectra, and frequency diagrams",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print or export a catalog graph in the plain-text graph format.
    Graph {
        /// Catalog name (k8, q3, 3ct2-joined, k8-modified, q3-modified, 3ct2-unjoined).
        name: String,
        /// Output file, or `-` for stdout.
        #[arg(long, default_value = "-")]
        export: String,
    },
    /// Evolve a walk and write entanglement.csv and marginals.csv.
    Simulate {
        #[command(flatten)]
        common: CommonArgs,
        /// Interaction phase (radians, or a multiple like 0.3pi).
        #[arg(long, value_parser = parse_phi, default_value = "0")]
        phi: f64,
    },
    /// Power spectrum of the entanglement series; writes spectrum.csv.
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_parser = parse_phi, default_value = "0")]
        phi: f64,
        /// Analyze the last column of this CSV instead of simulating.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Prominent frequencies over a phi grid; writes feigenbaum.csv.
    Feigenbaum {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_parser = parse_phi, default_value = "0")]
        phi_min: f64,
        #[arg(long, value_parser = parse_phi, default_value = "pi")]
        phi_max: f64,
        /// Number of uniformly spaced grid points, endpoints included.
        #[arg(long, default_value_t = 200)]
        phi_count: usize,
    },
    /// Run two interaction strengths side by side; writes perturb.csv.
    Perturb {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_parser = parse_phi)]
        phi: f64,
        #[arg(long, value_parser = parse_phi)]
        phi2: f64,
    },
}

/// Entry point used by the binary: parses `std::env::args_os()`.
pub fn run() -> ExitCode {
    run_from(std::env::args_os())
}

/// Testable entry point taking explicit arguments.
pub fn run_from<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UnknownCatalog(_) | Error::InvalidConfig(_) => 1,
        Error::EmptySpectrum => 3,
        _ => 2,
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Graph { name, export } => cmd_graph(&name, &export),
        Command::Simulate { common, phi } => cmd_simulate(&common, phi),
        Command::Spectrum { common, phi, input } => cmd_spectrum(&common, phi, input.as_deref()),
        Command::Feigenbaum {
            common,
            phi_min,
            phi_max,
            phi_count,
        } => cmd_feigenbaum(&common, phi_min, phi_max, phi_count),
        Command::Perturb { common, phi, phi2 } => cmd_perturb(&common, phi, phi2),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn cmd_graph(name: &str, export: &str) -> Result<()> {
    let g = graph::catalog(name)?;
    let text = g.to_text();
    if export == "-" {
        print!("{text}");
        Ok(())
    } else {
        write_file(Path::new(export), &text)
    }
}

fn cmd_simulate(common: &CommonArgs, phi: f64) -> Result<()> {
    let space = common.space()?;
    let scheme = InteractionScheme::new(phi)?;
    let initial = common.initial_state()?;
    let record = record_series(&space, scheme, &initial, common.steps)?;
    let n = space.graph().vertex_count();

    let mut entanglement = String::from("t,E_bits\n");
    for (t, e) in record.entanglement.iter().enumerate() {
        let _ = writeln!(entanglement, "{t},{e}");
    }
    write_file(&common.out_path("entanglement.csv")?, &entanglement)?;

    let mut marginals = String::from("t");
    for v in 0..n {
        let _ = write!(marginals, ",P1_v{v}");
    }
    for v in 0..n {
        let _ = write!(marginals, ",P2_v{v}");
    }
    marginals.push('\n');
    for t in 0..record.marginal1.len() {
        let _ = write!(marginals, "{t}");
        for v in 0..n {
            let _ = write!(marginals, ",{}", record.marginal1[t][v]);
        }
        for v in 0..n {
            let _ = write!(marginals, ",{}", record.marginal2[t][v]);
        }
        marginals.push('\n');
    }
    write_file(&common.out_path("marginals.csv")?, &marginals)?;

    if common.plot {
        let ent_points: Vec<(f64, f64)> = record
            .entanglement
            .iter()
            .enumerate()
            .map(|(t, &e)| (t as f64, e))
            .collect();
        let svg = plot::line_chart(
            "Entanglement time series",
            "step",
            "entanglement (bits)",
            &[("E".to_string(), ent_points)],
        );
        write_file(&common.out_path("entanglement.svg")?, &svg)?;

        let marginal_series: Vec<(String, Vec<(f64, f64)>)> = (0..n)
            .map(|v| {
                (
                    format!("P1(v{v})"),
                    record
                        .marginal1
                        .iter()
                        .enumerate()
                        .map(|(t, p)| (t as f64, p[v]))
                        .collect(),
                )
            })
            .collect();
        let svg = plot::line_chart(
            "Marginal probabilities of particle 1",
            "step",
            "probability",
            &marginal_series,
        );
        write_file(&common.out_path("marginals.svg")?, &svg)?;
    }
    Ok(())
}

/// Reads a series from a CSV file: the last comma-separated field of every
/// line, skipping one optional non-numeric header line.
fn read_series_csv(path: &Path) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let mut values = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let field = line.rsplit(',').next().unwrap().trim();
        match field.parse::<f64>() {
            Ok(v) => values.push(v),
            Err(_) if lineno == 0 => {} // header row
            Err(_) => {
                return Err(Error::SeriesParse {
                    line: lineno + 1,
                    message: format!("cannot parse {field:?} as a number"),
                })
            }
        }
    }
    Ok(values)
}

fn cmd_spectrum(common: &CommonArgs, phi: f64, input: Option<&Path>) -> Result<()> {
    let series = match input {
        Some(path) => read_series_csv(path)?,
        None => {
            let space = common.space()?;
            let scheme = InteractionScheme::new(phi)?;
            let initial = common.initial_state()?;
            record_series(&space, scheme, &initial, common.steps)?.entanglement
        }
    };
    let spectrum = power_spectrum(&series, common.alpha)?;

    let mut csv = String::from("freq_cycles_per_step,power,tier\n");
    if spectrum.is_empty() {
        write_file(&common.out_path("spectrum.csv")?, &csv)?;
        eprintln!("note: empty spectrum, no data rows written");
        return Err(Error::EmptySpectrum);
    }
    let prominent = prominent_frequencies(&spectrum);
    let mut tier_of = vec![0u8; spectrum.bins().len()];
    for p in &prominent {
        tier_of[p.bin] = p.tier.rank();
    }
    for (k, &power) in spectrum.bins().iter().enumerate() {
        let _ = writeln!(csv, "{},{},{}", spectrum.frequency(k), power, tier_of[k]);
    }
    write_file(&common.out_path("spectrum.csv")?, &csv)?;

    if common.plot {
        let points: Vec<(f64, f64)> = spectrum
            .bins()
            .iter()
            .enumerate()
            .map(|(k, &p)| (spectrum.frequency(k), p))
            .collect();
        let svg = plot::line_chart(
            "Normalized power spectrum",
            "frequency (cycles/step)",
            "power",
            &[("|E|^2".to_string(), points)],
        );
        write_file(&common.out_path("spectrum.svg")?, &svg)?;
    }
    Ok(())
}

fn phi_grid(min: f64, max: f64, count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::InvalidConfig("--phi-count must be positive".into()));
    }
    if count == 1 {
        return Ok(vec![min]);
    }
    Ok((0..count)
        .map(|i| min + (max - min) * i as f64 / (count - 1) as f64)
        .collect())
}

fn cmd_feigenbaum(common: &CommonArgs, phi_min: f64, phi_max: f64, phi_count: usize) -> Result<()> {
    let space = common.space()?;
    let initial = common.initial_state()?;
    let grid = phi_grid(phi_min, phi_max, phi_count)?;
    let mut points = feigenbaum_sweep(&space, &grid, common.steps, &initial, common.alpha)?;
    points.sort_by(|a, b| {
        (a.phi, a.frequency, a.tier.rank())
            .partial_cmp(&(b.phi, b.frequency, b.tier.rank()))
            .unwrap()
    });

    let mut csv = String::from("phi_radians,freq_cycles_per_step,tier\n");
    for p in &points {
        let _ = writeln!(csv, "{},{},{}", p.phi, p.frequency, p.tier.rank());
    }
    write_file(&common.out_path("feigenbaum.csv")?, &csv)?;

    if common.plot {
        let split = |tier: Tier| -> Vec<(f64, f64)> {
            points
                .iter()
                .filter(|p| p.tier == tier)
                .map(|p: &FeigenbaumPoint| (p.phi, p.frequency))
                .collect()
        };
        let svg = plot::scatter_chart(
            "Prominent frequencies vs interaction strength",
            "phi (radians)",
            "frequency (cycles/step)",
            &[
                ("top 5%".to_string(), split(Tier::Top)),
                ("second 5%".to_string(), split(Tier::Second)),
            ],
        );
        write_file(&common.out_path("feigenbaum.svg")?, &svg)?;
    }
    Ok(())
}

fn cmd_perturb(common: &CommonArgs, phi: f64, phi2: f64) -> Result<()> {
    let space = common.space()?;
    let initial = common.initial_state()?;
    let first = record_series(&space, InteractionScheme::new(phi)?, &initial, common.steps)?;
    let second = record_series(&space, InteractionScheme::new(phi2)?, &initial, common.steps)?;

    let mut csv = String::from("t,E_phi1,E_phi2,P1v0_phi1,P1v0_phi2\n");
    let mut max_de: f64 = 0.0;
    let mut max_dp: f64 = 0.0;
    for t in 0..=common.steps {
        let e1 = first.entanglement[t];
        let e2 = second.entanglement[t];
        let p1 = first.marginal1[t][0];
        let p2 = second.marginal1[t][0];
        max_de = max_de.max((e1 - e2).abs());
        max_dp = max_dp.max((p1 - p2).abs());
        let _ = writeln!(csv, "{t},{e1},{e2},{p1},{p2}");
    }
    write_file(&common.out_path("perturb.csv")?, &csv)?;
    eprintln!("max_t |E_phi1 - E_phi2| = {max_de} bits; max_t |P1(v0)_phi1 - P1(v0)_phi2| = {max_dp}");

    if common.plot {
        let series = |record: &crate::observables::SeriesRecord, label: &str| {
            (
                label.to_string(),
                record
                    .entanglement
                    .iter()
                    .enumerate()
                    .map(|(t, &e)| (t as f64, e))
                    .collect::<Vec<_>>(),
            )
        };
        let svg = plot::line_chart(
            "Entanglement under two interaction strengths",
            "step",
            "entanglement (bits)",
            &[
                series(&first, &format!("phi = {phi}")),
                series(&second, &format!("phi = {phi2}")),
            ],
        );
        write_file(&common.out_path("perturb.svg")?, &svg)?;
    }
    Ok(())
}
