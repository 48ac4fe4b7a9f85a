use anharmonic::output::{exit_code, rows_to_csv, rows_to_json, summary, write_file, Row};
use anharmonic::run::{apply_thresholds, classical, filter_section, quantum, verify};
use anharmonic::{RunConfig, THREADS_ENV};
use anharmonic_core::specfun;
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "anharmonic", version, about = "Literal formulas vs numerical oracles for anharmonic-oscillator gases")]
struct Cli {
    /// TOML run configuration; missing keys take their defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = THREADS_ENV)]
    threads: Option<usize>,
    /// Overrides `options.seed`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Restrict output to one section.
    #[arg(long, global = true)]
    only: Option<String>,
    /// Print the effective configuration and exit.
    #[arg(long)]
    print_config: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Classical partition functions and average energy per temperature.
    Classical,
    /// Spectrum table, spectral density, energy densities, termwise series.
    Quantum,
    /// Full invariant suite; prints the pass/flag/fail matrix.
    Verify,
    /// Evaluate one special function (debugging).
    #[command(hide = true)]
    SpecfunEval {
        /// bessel_k, upper_gamma, whittaker_w, tricomi_u or gamma.
        function: String,
        args: Vec<f64>,
    },
}

fn check_section(only: Option<&str>, sections: &[&str]) -> Result<()> {
    if let Some(s) = only {
        if !sections.contains(&s) {
            bail!("unknown section `{s}`; expected one of {}", sections.join(", "));
        }
    }
    Ok(())
}

fn write_reports(out: &Path, stem: &str, rows: &[Row]) -> Result<()> {
    write_file(out, &format!("{stem}.csv"), &rows_to_csv(rows))?;
    write_file(out, &format!("{stem}.json"), &rows_to_json(rows)?)
}

fn specfun_eval(function: &str, args: &[f64]) -> Result<()> {
    let need = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(anyhow::anyhow!("{function} takes {n} arguments, got {}", args.len()))
        }
    };
    let r = match function {
        "bessel_k" => {
            need(2)?;
            specfun::bessel_k(args[0], args[1])?
        }
        "upper_gamma" => {
            need(2)?;
            specfun::upper_incomplete_gamma_any(args[0], args[1])?
        }
        "whittaker_w" => {
            need(3)?;
            specfun::whittaker_w(args[0], args[1], args[2])?
        }
        "tricomi_u" => {
            need(3)?;
            specfun::tricomi_u(args[0], args[1], args[2])?
        }
        "gamma" => {
            need(1)?;
            println!("{:.16e}", specfun::gamma(args[0]));
            return Ok(());
        }
        other => bail!("unknown function `{other}`"),
    };
    println!("{}", serde_json::to_string(&r)?);
    Ok(())
}

fn run(cli: Cli) -> Result<i32> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.options.seed = seed;
    }
    if cli.print_config {
        print!("{}", cfg.to_toml()?);
        return Ok(0);
    }
    let Some(command) = cli.command else {
        bail!("no subcommand given; see --help");
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            bail!("--threads must be > 0");
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build().context("starting the thread pool")?;
    let only = cli.only.as_deref();
    let out = cli.out.as_path();
    pool.install(|| match command {
        Command::Classical => {
            check_section(only, classical::SECTIONS)?;
            let mut rows = filter_section(classical::rows(&cfg), only);
            apply_thresholds(&mut rows, &cfg.options);
            write_reports(out, "classical", &rows)?;
            print!("{}", summary(&rows));
            Ok(exit_code(&rows))
        }
        Command::Quantum => {
            check_section(only, quantum::SECTIONS)?;
            let q = quantum::run(&cfg, only);
            if !q.spectrum.is_empty() {
                write_file(out, "spectrum.csv", &q.spectrum)?;
            }
            if !q.spectral_density.is_empty() {
                write_file(out, "spectral_density.csv", &q.spectral_density)?;
            }
            let mut rows = q.rows;
            apply_thresholds(&mut rows, &cfg.options);
            let split = |s: &str| rows.iter().filter(|r| r.section == s).cloned().collect::<Vec<_>>();
            if only.is_none_or(|o| o == "energy_density") {
                write_reports(out, "energy_density", &split("energy_density"))?;
            }
            if only.is_none_or(|o| o == "series") {
                write_reports(out, "series", &split("series"))?;
            }
            print!("{}", summary(&rows));
            Ok(exit_code(&rows))
        }
        Command::Verify => {
            check_section(only, verify::SECTIONS)?;
            let mut rows = verify::rows(&cfg, only);
            apply_thresholds(&mut rows, &cfg.options);
            write_reports(out, "verify", &rows)?;
            print!("{}", summary(&rows));
            Ok(exit_code(&rows))
        }
        Command::SpecfunEval { function, args } => {
            specfun_eval(&function, &args)?;
            Ok(0)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
