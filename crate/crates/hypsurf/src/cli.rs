//! Argument parsing and subcommand dispatch.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hypsurf_core::boundary::{BoundarySampler, DEFAULT_IDENTITY_TOL, DEFAULT_INNER_DEPTH};
use hypsurf_core::group::{orbit, LimitSampler};
use hypsurf_core::surface::doubling_report;
use hypsurf_core::{
    build_pants, euler_characteristic, is_boundary_identity, is_standard, octagon_group,
    order_check, plan_decomposition, punctured_torus_group, realize, schottky_rank2, thirteen_list,
    CuffLengths, DiskPoint, GroupRep, PantsDecompositionPlan, SampleMode, Signature,
    SurfaceDescription,
};
use serde::{Deserialize, Serialize};

use crate::aut::parse_automorphism;
use crate::error::{CliError, EXIT_INVALID, EXIT_OK};
use crate::formats::{self, *};

pub const DEFAULT_N: usize = 4;
pub const DEFAULT_DELTA: f64 = 0.2;
pub const DEFAULT_SEPARATION: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupName {
    Octagon,
    Schottky,
    PuncturedTorus,
}

impl GroupName {
    fn build(self, separation: f64) -> Result<GroupRep, CliError> {
        Ok(match self {
            GroupName::Octagon => octagon_group(),
            GroupName::Schottky => schottky_rank2(separation)?,
            GroupName::PuncturedTorus => punctured_torus_group(),
        })
    }

    fn label(self) -> &'static str {
        match self {
            GroupName::Octagon => "octagon",
            GroupName::Schottky => "schottky",
            GroupName::PuncturedTorus => "punctured-torus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeName {
    Orbit,
    Axes,
}

#[derive(Debug, Parser)]
#[command(name = "hypsurf", version, about = "Hyperbolic surfaces, limit sets and boundary maps")]
pub struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Output format; csv applies to limit-set, orbit and boundary-map.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Seed for `--aut random:K`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Print the effective configuration as one JSON line on stderr.
    #[arg(long, global = true)]
    pub echo_config: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct GroupArgs {
    #[arg(long, value_enum)]
    pub group: GroupName,
    /// Axis translation length of the Schottky generators.
    #[arg(long, default_value_t = DEFAULT_SEPARATION)]
    pub separation: f64,
    /// Maximum word length.
    #[arg(long, default_value_t = DEFAULT_N)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euler characteristic of a surface description (JSON file, `-` for stdin).
    Chi { input: String },
    /// Standardness verdict.
    Classify { input: String },
    /// Double along the boundary.
    Double { input: String },
    /// The thirteen nonstandard surfaces.
    Thirteen,
    /// Seams and area of one pair of pants.
    Pants {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        lengths: Vec<f64>,
    },
    /// Pants decomposition plan for a signature `g,c,b,a`.
    Plan {
        #[arg(long)]
        sig: String,
        /// Boundary circle lengths, one per compact boundary component.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lengths: Vec<f64>,
    },
    /// Realize a plan file as a metric.
    Realize { input: String },
    /// Sample the limit set of a catalog group.
    LimitSet {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "axes")]
        mode: ModeName,
        /// Orbit points with |z| > 1 - delta are projected.
        #[arg(long, default_value_t = DEFAULT_DELTA)]
        delta: f64,
        /// Orbit basepoint `re,im`.
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        base: String,
    },
    /// Orbit of a basepoint under words of length at most n.
    Orbit {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        base: String,
    },
    /// Sampled boundary map of a free-group automorphism.
    BoundaryMap {
        #[command(flatten)]
        group: GroupArgs,
        /// `A=AB,B=B`, `identity`, `inner:W` or `random:K`.
        #[arg(long)]
        aut: String,
        #[arg(long)]
        check_identity: bool,
        /// Inner-correction search depth.
        #[arg(long, default_value_t = DEFAULT_INNER_DEPTH)]
        m: usize,
        /// Identity tolerance in radians.
        #[arg(long, default_value_t = DEFAULT_IDENTITY_TOL)]
        tol: f64,
        /// With csv output, also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Chi { .. } => "chi",
            Command::Classify { .. } => "classify",
            Command::Double { .. } => "double",
            Command::Thirteen => "thirteen",
            Command::Pants { .. } => "pants",
            Command::Plan { .. } => "plan",
            Command::Realize { .. } => "realize",
            Command::LimitSet { .. } => "limit-set",
            Command::Orbit { .. } => "orbit",
            Command::BoundaryMap { .. } => "boundary-map",
        }
    }

    fn default_format(&self) -> OutputFormat {
        match self {
            Command::LimitSet { .. } | Command::Orbit { .. } => OutputFormat::Csv,
            _ => OutputFormat::Json,
        }
    }
}

/// Effective settings of one invocation, defaults filled in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliConfig {
    pub subcommand: String,
    pub max_word_length: usize,
    pub tol: f64,
    pub delta: f64,
    pub m: usize,
    pub output_format: OutputFormat,
    pub output_path: Option<String>,
    pub rng_seed: u64,
}

impl CliConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        let mut c = CliConfig {
            subcommand: cli.command.name().to_owned(),
            max_word_length: DEFAULT_N,
            tol: DEFAULT_IDENTITY_TOL,
            delta: DEFAULT_DELTA,
            m: DEFAULT_INNER_DEPTH,
            output_format: cli.format.unwrap_or(cli.command.default_format()),
            output_path: cli.output.as_ref().map(|p| p.display().to_string()),
            rng_seed: cli.seed,
        };
        match &cli.command {
            Command::LimitSet { group, delta, .. } => {
                c.max_word_length = group.n;
                c.delta = *delta;
            }
            Command::Orbit { group, .. } => c.max_word_length = group.n,
            Command::BoundaryMap { group, m, tol, .. } => {
                c.max_word_length = group.n;
                c.m = *m;
                c.tol = *tol;
            }
            _ => {}
        }
        c
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn read_description(path: &str) -> Result<SurfaceDescription, CliError> {
    let j: DescriptionJson = serde_json::from_str(&read_input(path)?)?;
    Ok(SurfaceDescription::try_from(j)?)
}

fn parse_point(s: &str) -> Result<DiskPoint, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    let bad = || CliError::Usage(format!("expected re,im, got {s:?}"));
    let [re, im] = parts[..] else { return Err(bad()) };
    let re: f64 = re.trim().parse().map_err(|_| bad())?;
    let im: f64 = im.trim().parse().map_err(|_| bad())?;
    Ok(DiskPoint::from_parts(re, im)?)
}

fn parse_signature(s: &str) -> Result<Signature, CliError> {
    let bad = || CliError::Usage(format!("expected g,c,b,a with nonnegative integers, got {s:?}"));
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| bad())?;
    let [g, c, b, a] = v[..] else { return Err(bad()) };
    Ok(Signature::new(g, c, b, a))
}

fn json_line<T: Serialize>(v: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string(v)? + "\n")
}

fn json_only(format: OutputFormat, command: &str) -> Result<(), CliError> {
    match format {
        OutputFormat::Json => Ok(()),
        OutputFormat::Csv => Err(CliError::Usage(format!("{command} has no csv output"))),
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn execute(cli: &Cli, format: OutputFormat) -> Result<String, CliError> {
    let name = cli.command.name();
    match &cli.command {
        Command::Chi { input } => {
            json_only(format, name)?;
            let chi = euler_characteristic(&read_description(input)?)?;
            json_line(&ChiJson::from(chi))
        }
        Command::Classify { input } => {
            json_only(format, name)?;
            json_line(&VerdictJson::from(&is_standard(&read_description(input)?)))
        }
        Command::Double { input } => {
            json_only(format, name)?;
            json_line(&DoublingJson::from(&doubling_report(&read_description(input)?)?))
        }
        Command::Thirteen => {
            json_only(format, name)?;
            let list: Vec<CatalogEntryJson> = thirteen_list()
                .iter()
                .map(|(s, d)| CatalogEntryJson {
                    name: s.name().to_owned(),
                    description: d.into(),
                })
                .collect();
            json_line(&list)
        }
        Command::Pants { lengths } => {
            json_only(format, name)?;
            let [x1, x2, x3] = lengths[..] else {
                return Err(CliError::Usage(format!(
                    "pants needs exactly 3 cuff lengths, got {}",
                    lengths.len()
                )));
            };
            json_line(&PantsGeometryJson::from(&build_pants(CuffLengths::new(x1, x2, x3)?)))
        }
        Command::Plan { sig, lengths } => {
            json_only(format, name)?;
            let plan = plan_decomposition(parse_signature(sig)?, lengths)?;
            json_line(&PlanJson::from(&plan))
        }
        Command::Realize { input } => {
            json_only(format, name)?;
            let plan: PlanJson = serde_json::from_str(&read_input(input)?)?;
            let plan = PantsDecompositionPlan::try_from(plan)?;
            json_line(&MetricJson::from(&realize(&plan)?))
        }
        Command::LimitSet {
            group,
            mode,
            delta,
            base,
        } => {
            let rep = group.group.build(group.separation)?;
            let sampler = LimitSampler {
                delta: *delta,
                ..LimitSampler::default()
            };
            let mode_value = match mode {
                ModeName::Orbit => SampleMode::OrbitProjection,
                ModeName::Axes => SampleMode::AxisEndpoints,
            };
            let s = sampler.sample(&rep, parse_point(base)?, group.n, mode_value)?;
            match format {
                OutputFormat::Csv => Ok(endpoint_csv(&s)),
                OutputFormat::Json => json_line(&EndpointSampleJson {
                    group: group.group.label().to_owned(),
                    mode: match mode {
                        ModeName::Orbit => "orbit",
                        ModeName::Axes => "axes",
                    }
                    .to_owned(),
                    n: group.n,
                    size: s.len(),
                    max_gap: hypsurf_core::max_angular_gap(&s)?,
                    angles: s
                        .iter()
                        .map(|(a, w)| AngleJson {
                            theta: a.theta(),
                            word: w.to_string(),
                        })
                        .collect(),
                }),
            }
        }
        Command::Orbit { group, base } => {
            let rep = group.group.build(group.separation)?;
            let o = orbit(&rep, parse_point(base)?, group.n)?;
            match format {
                OutputFormat::Csv => Ok(orbit_csv(&o.points)),
                OutputFormat::Json => {
                    let points: Vec<(String, PointJson)> =
                        o.points.iter().map(|(w, p)| (w.to_string(), (*p).into())).collect();
                    json_line(&points)
                }
            }
        }
        Command::BoundaryMap {
            group,
            aut,
            check_identity,
            m,
            tol,
            report,
        } => {
            let rep = group.group.build(group.separation)?;
            let phi = parse_automorphism(aut, rep.rank(), cli.seed)?;
            let s = BoundarySampler::default().sample(&rep, &phi, group.n)?;
            let orientation = if s.len() >= 3 {
                formats::orientation_name(&order_check(&s)?)
            } else {
                "undetermined"
            };
            let identity = if *check_identity {
                let r = is_boundary_identity(&rep, &phi, group.n, *m, *tol)?;
                Some(IdentityJson::new(&r, *m, *tol))
            } else {
                None
            };
            let mut doc = BoundaryReportJson {
                group: group.group.label().to_owned(),
                images: phi.images().iter().map(|w| w.to_string()).collect(),
                n: group.n,
                size: s.len(),
                considered: s.considered(),
                skipped: s.skipped(),
                merged: s.merged(),
                orientation: orientation.to_owned(),
                identity,
                pairs: None,
            };
            match format {
                OutputFormat::Csv => {
                    if let Some(path) = report {
                        write_file(path, &json_line(&doc)?)?;
                    }
                    Ok(circle_map_csv(&s))
                }
                OutputFormat::Json => {
                    doc.pairs = Some(pairs_json(&s));
                    json_line(&doc)
                }
            }
        }
    }
}

/// Runs one invocation; `args[0]` is the program name. Returns the exit code.
pub fn run_with_io(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return EXIT_OK;
            }
            let message = e.render().to_string();
            let first = message.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(stderr, "{}", CliError::Usage(first.to_owned()).to_json_line());
            return EXIT_INVALID;
        }
    };
    let config = CliConfig::from_cli(&cli);
    if cli.echo_config {
        // serializing plain data cannot fail
        let _ = writeln!(stderr, "{}", serde_json::to_string(&config).expect("config JSON"));
    }
    let result = execute(&cli, config.output_format).and_then(|text| match &cli.output {
        Some(path) => write_file(path, &text),
        None => stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.to_json_line());
            e.exit_code()
        }
    }
}

/// [`run_with_io`] on the process streams.
pub fn run(args: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with_io(args, &mut stdout.lock(), &mut stderr.lock())
}
