//! `anyonic` — verify and compute with anyonic braided Hopf algebras.
//!
//! Every task takes either `--preset NAME` or `--config FILE` and writes a
//! deterministic report to stdout (or `--out`), as text or JSON. Exit codes:
//! 0 when every check passes, 1 when a check fails, 2 for input errors.

mod config;
mod report;
mod tasks;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use config::{parse_config, Config};
use report::digest_input;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use tasks::Job;

#[derive(Parser)]
#[command(
    name = "anyonic",
    version,
    about = "Verify and compute with anyonic braided Hopf algebras",
    after_help = "Presets: z18-free, z18-nilpotent, z18-nonabelian, z18-abelian, and the \
                  parametric families z2m2-free(m), z2m2-nilpotent(m), z2m2-nonabelian(m), \
                  z2m2-abelian(m) for odd m > 1."
)]
struct Cli {
    #[command(subcommand)]
    task: Task,
}

#[derive(Subcommand)]
enum Task {
    /// Check both braiding routes, involutivity, and the degree focus
    CheckBraiding(CommonArgs),
    /// Verify the braided Hopf axioms (quantum Lie inputs are enveloped first)
    HopfAxioms(CommonArgs),
    /// Verify the quantum Lie algebra side conditions
    QlaCheck(CommonArgs),
    /// Construct the enveloping-algebra presentation
    Envelope(CommonArgs),
    /// Compute braided Lie algebra homology dimensions
    Homology(CommonArgs),
    /// Assemble truncated periodic cohomology tables by parity
    Hp(CommonArgs),
}

impl Task {
    fn name(&self) -> &'static str {
        match self {
            Task::CheckBraiding(_) => "check-braiding",
            Task::HopfAxioms(_) => "hopf-axioms",
            Task::QlaCheck(_) => "qla-check",
            Task::Envelope(_) => "envelope",
            Task::Homology(_) => "homology",
            Task::Hp(_) => "hp",
        }
    }

    fn args(&self) -> &CommonArgs {
        match self {
            Task::CheckBraiding(args)
            | Task::HopfAxioms(args)
            | Task::QlaCheck(args)
            | Task::Envelope(args)
            | Task::Homology(args)
            | Task::Hp(args) => args,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["preset", "config"])))]
struct CommonArgs {
    /// Built-in preset name
    #[arg(long)]
    preset: Option<String>,

    /// Path to a TOML config file
    #[arg(long)]
    config: Option<PathBuf>,

    /// Maximum word length for axiom verification
    #[arg(long, default_value_t = 4)]
    max_len: usize,

    /// Maximum homological degree
    #[arg(long, default_value_t = 6)]
    max_i: usize,

    /// Character: "zero" or a TOML file of `name = "scalar"` entries
    #[arg(long, default_value = "zero")]
    delta: String,

    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn load_job(args: &CommonArgs) -> anyhow::Result<Job> {
    let config = match (&args.preset, &args.config) {
        (Some(name), None) => {
            let def = anyonic_core::preset(name)?;
            let config = Config::from_preset(&def);
            debug_assert!(config.validate().is_empty());
            config
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| anyhow::anyhow!("reading {}: {e}", path.display()))?;
            parse_config(&text)?
        }
        _ => unreachable!("clap enforces exactly one source"),
    };

    let delta_file: Option<BTreeMap<String, String>> = if args.delta == "zero" {
        None
    } else {
        let path = PathBuf::from(&args.delta);
        let text = std::fs::read_to_string(&path)
            .map_err(|e| anyhow::anyhow!("reading {}: {e}", path.display()))?;
        Some(toml::from_str(&text).map_err(|e| anyhow::anyhow!("character file: {e}"))?)
    };

    // The digest covers the mathematical input only — the same object gives
    // the same digest whether it came from a preset or a file.
    let config_canonical = config.to_toml();
    let digest = match &delta_file {
        Some(map) => {
            let delta_canonical = toml::to_string(map).expect("map serializes");
            digest_input(&[&config_canonical, &delta_canonical])
        }
        None => digest_input(&[&config_canonical]),
    };

    Ok(Job {
        config,
        digest,
        delta_file,
    })
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    let args = cli.task.args();
    let job = load_job(args)?;
    let report = match &cli.task {
        Task::CheckBraiding(_) => tasks::check_braiding(&job)?,
        Task::HopfAxioms(_) => tasks::hopf_axioms(&job, args.max_len)?,
        Task::QlaCheck(_) => tasks::qla_check(&job)?,
        Task::Envelope(_) => tasks::envelope(&job)?,
        Task::Homology(_) => tasks::homology(&job, args.max_i)?,
        Task::Hp(_) => tasks::hp(&job, args.max_i)?,
    };
    debug_assert_eq!(report.task, cli.task.name());

    let rendered = match args.format {
        Format::Text => report.render_text(),
        Format::Json => report.render_json(),
    };
    match &args.out {
        Some(path) => std::fs::write(path, &rendered)
            .map_err(|e| anyhow::anyhow!("writing {}: {e}", path.display()))?,
        None => print!("{rendered}"),
    }

    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::from(2)
        }
    }
}
