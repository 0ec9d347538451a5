mod commands;
mod output;

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CommandError, SweepAxis, SweepRequest};
use hd_core::tables::TableId;
use hd_core::{Error, ModelParams, QuantumState, Scheme, SchemeConfig, Symmetry};
use output::OutputFormat;

#[derive(Parser)]
#[command(
    name = "hd",
    version,
    about = "Hulthen-potential Dirac bound states under spin and pseudospin symmetry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce a reference energy table (computed next to published values)
    Table {
        /// t1 | t2 | t4 | t5
        table: String,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Closed-form energy branches for one state
    Energy {
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Normalized radial components F, G of the selected bound state
    Wavefunction {
        #[command(flatten)]
        state: StateArgs,
        /// Grid points (odd; default picks a Simpson-converged grid)
        #[arg(long)]
        points: Option<usize>,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Energy branches along a parameter axis (figure data)
    Sweep {
        /// delta | mass | constant
        #[arg(long)]
        axis: String,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        /// Number of intervals (emits steps+1 axis values)
        #[arg(long)]
        steps: usize,
        /// States as "n:kappa[,n:kappa...]"; defaults to the single --n/--kappa state
        #[arg(long)]
        states: Option<String>,
        /// Worker threads
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Closed forms vs shooting oracle (scheme and exact orbital term)
    Compare {
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Orbital-term substitution error along r, for all comparators
    Profile {
        #[arg(long, default_value_t = 0.05)]
        r_from: f64,
        #[arg(long, default_value_t = 10.0)]
        r_to: f64,
        #[arg(long, default_value_t = 200)]
        steps: usize,
        #[command(flatten)]
        state: StateArgs,
        #[command(flatten)]
        io: IoArgs,
    },
}

#[derive(Args)]
struct StateArgs {
    /// spin | pseudospin
    #[arg(long)]
    symmetry: Option<String>,
    /// r2 | r2-conventional | r1
    #[arg(long)]
    scheme: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    kappa: Option<i32>,
    /// Rest mass M, fm^-1
    #[arg(long, allow_negative_numbers = true)]
    mass: Option<f64>,
    /// Screening parameter, fm^-1
    #[arg(long, allow_negative_numbers = true)]
    delta: Option<f64>,
    /// Potential strength V0, fm^-1
    #[arg(long, allow_negative_numbers = true)]
    strength: Option<f64>,
    /// Symmetry constant C_s or C_ps, fm^-1
    #[arg(long, allow_negative_numbers = true)]
    constant: Option<f64>,
    /// Shift of the improved r^-2 substitution
    #[arg(long, allow_negative_numbers = true)]
    d0: Option<f64>,
    /// key=value defaults file (flags win over file entries)
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct IoArgs {
    /// csv (default) or json lines
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Output path; stdout when absent
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

struct Resolved {
    params: ModelParams,
    state: QuantumState,
    scheme: SchemeConfig,
    d0: f64,
    jobs: usize,
}

fn parse_config(path: &PathBuf) -> Result<HashMap<String, String>, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Domain(format!("config line {} is not key=value", lineno + 1)))?;
        map.insert(k.trim().to_lowercase(), v.trim().to_string());
    }
    Ok(map)
}

fn parse_symmetry(s: &str) -> Result<Symmetry, Error> {
    match s {
        "spin" => Ok(Symmetry::Spin),
        "pseudospin" => Ok(Symmetry::Pseudospin),
        other => Err(Error::Domain(format!(
            "symmetry must be spin or pseudospin, got '{other}'"
        ))),
    }
}

fn parse_scheme(s: &str) -> Result<Scheme, Error> {
    match s {
        "r2" => Ok(Scheme::ImprovedR2),
        "r2-conventional" => Ok(Scheme::ConventionalR2),
        "r1" => Ok(Scheme::ProperR1),
        other => Err(Error::Domain(format!(
            "scheme must be r2, r2-conventional or r1, got '{other}'"
        ))),
    }
}

/// flags > config file > built-in preset (the reference tables' parameter set).
fn resolve(args: &StateArgs, jobs_flag: Option<usize>) -> Result<Resolved, Error> {
    let cfg = match &args.config {
        Some(path) => parse_config(path)?,
        None => HashMap::new(),
    };
    let get = |key: &str| cfg.get(key).cloned();
    let num = |key: &str| -> Result<Option<f64>, Error> {
        get(key)
            .map(|v| {
                v.parse::<f64>()
                    .map_err(|_| Error::Domain(format!("config {key}='{v}' is not a number")))
            })
            .transpose()
    };

    let symmetry = match (&args.symmetry, get("symmetry")) {
        (Some(s), _) => parse_symmetry(s)?,
        (None, Some(s)) => parse_symmetry(&s)?,
        (None, None) => {
            return Err(Error::Domain(
                "--symmetry <spin|pseudospin> is required (flag or config)".into(),
            ))
        }
    };
    let scheme_kind = match (&args.scheme, get("scheme")) {
        (Some(s), _) => parse_scheme(s)?,
        (None, Some(s)) => parse_scheme(&s)?,
        (None, None) => Scheme::ImprovedR2,
    };
    let d0 = args
        .d0
        .or(num("d0")?)
        .unwrap_or(hd_core::model::DEFAULT_D0);
    let scheme = match scheme_kind {
        Scheme::ImprovedR2 => SchemeConfig::improved_with_d0(d0),
        Scheme::ConventionalR2 => SchemeConfig::conventional(),
        Scheme::ProperR1 => SchemeConfig::proper_r1(),
    };
    // preset layer: the reference tables' parameter values
    let mass = args.mass.or(num("mass")?).unwrap_or(hd_core::tables::MASS);
    let delta = args.delta.or(num("delta")?).unwrap_or(0.1);
    let strength = args
        .strength
        .or(num("strength")?)
        .unwrap_or(hd_core::tables::STRENGTH);
    let constant = args.constant.or(num("constant")?).unwrap_or(match symmetry {
        Symmetry::Spin => hd_core::tables::C_S_T2,
        Symmetry::Pseudospin => hd_core::tables::C_PS_T1,
    });
    let n = args
        .n
        .or(get("n")
            .map(|v| v.parse().map_err(|_| Error::Domain("bad config n".into())))
            .transpose()?)
        .unwrap_or(0);
    let kappa = args
        .kappa
        .or(get("kappa")
            .map(|v| v.parse().map_err(|_| Error::Domain("bad config kappa".into())))
            .transpose()?)
        .unwrap_or(match symmetry {
            Symmetry::Spin => 1,
            Symmetry::Pseudospin => 2,
        });
    let jobs = jobs_flag
        .or(get("jobs")
            .map(|v| v.parse().map_err(|_| Error::Domain("bad config jobs".into())))
            .transpose()?)
        .unwrap_or(1);
    Ok(Resolved {
        params: ModelParams::new(mass, delta, strength, constant, symmetry)?,
        state: QuantumState::new(n, kappa)?,
        scheme,
        d0,
        jobs,
    })
}

fn open_output(io: &IoArgs) -> std::io::Result<Box<dyn Write>> {
    Ok(match &io.output {
        Some(path) => Box::new(fs::File::create(path)?),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn run() -> Result<(), CommandError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Table { table, io } => {
            let id = TableId::parse(&table).ok_or_else(|| {
                CommandError::Core(Error::Domain(format!(
                    "unknown table '{table}' (expected t1, t2, t4 or t5)"
                )))
            })?;
            let mut out = open_output(&io)?;
            commands::cmd_table(id, io.format.into(), out.as_mut())?;
        }
        Command::Energy { state, io } => {
            let r = resolve(&state, None)?;
            let mut out = open_output(&io)?;
            commands::cmd_energy(&r.params, r.state, &r.scheme, io.format.into(), out.as_mut())?;
        }
        Command::Wavefunction { state, points, io } => {
            let r = resolve(&state, None)?;
            let mut out = open_output(&io)?;
            commands::cmd_wavefunction(
                &r.params,
                r.state,
                &r.scheme,
                points.unwrap_or(40_001),
                out.as_mut(),
            )?;
        }
        Command::Sweep {
            axis,
            from,
            to,
            steps,
            states,
            jobs,
            state,
            io,
        } => {
            let r = resolve(&state, jobs)?;
            let axis = match axis.as_str() {
                "delta" => SweepAxis::Delta,
                "mass" => SweepAxis::Mass,
                "constant" => SweepAxis::Constant,
                other => {
                    return Err(CommandError::Core(Error::Domain(format!(
                        "axis must be delta, mass or constant, got '{other}'"
                    ))))
                }
            };
            let state_list = match states {
                Some(s) => commands::parse_states(&s)?,
                None => vec![r.state],
            };
            let req = SweepRequest {
                axis,
                from,
                to,
                steps,
                states: state_list,
                jobs: r.jobs,
            };
            let mut out = open_output(&io)?;
            commands::cmd_sweep(&r.params, &r.scheme, &req, io.format.into(), out.as_mut())?;
        }
        Command::Compare { state, io } => {
            let r = resolve(&state, None)?;
            let mut out = open_output(&io)?;
            commands::cmd_compare(&r.params, r.state, out.as_mut())?;
        }
        Command::Profile {
            r_from,
            r_to,
            steps,
            state,
            io,
        } => {
            let r = resolve(&state, None)?;
            let mut out = open_output(&io)?;
            commands::cmd_profile(
                r.params.screening,
                r.state.kappa,
                r.params.symmetry,
                r.d0,
                r_from,
                r_to,
                steps,
                out.as_mut(),
            )?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
