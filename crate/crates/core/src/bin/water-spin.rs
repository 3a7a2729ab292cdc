use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use water_spin::channels::WernerParams;
use water_spin::cli::{self, exit_code, Method, OutputFormat, ScenarioConfig, STDOUT_SENTINEL};
use water_spin::isomer::{rho_gas, rho_liq, GasMixParams};
use water_spin::qcore::DensityMatrix;

#[derive(Parser)]
#[command(
    name = "water-spin",
    version,
    about = "Proton-spin states of gas and liquid water"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a parameter sweep and write a CSV or JSON report.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Output file, or `-` for standard output.
        #[arg(long)]
        output: Option<String>,
        #[arg(long, value_enum)]
        format: Option<OutputFormat>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Parse and validate a scenario without running it.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
    /// Print a 4x4 density matrix.
    Show {
        #[arg(long, value_enum)]
        state: StateKind,
        /// Singlet weight: `p` for the gas state, `p′` for the liquid state.
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StateKind {
    Gas,
    Liquid,
}

fn load_config(path: &PathBuf) -> Result<ScenarioConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    cli::parse_config(&text).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let args = Args::parse();
    match args.command {
        Command::Validate { config } => match load_config(&config) {
            Ok(_) => ExitCode::from(exit_code::SUCCESS),
            Err(e) => fail(exit_code::CONFIG_OR_IO, &e),
        },
        Command::Sweep {
            config,
            output,
            format,
            seed,
            samples,
            method,
        } => {
            let mut cfg = match load_config(&config) {
                Ok(cfg) => cfg,
                Err(e) => return fail(exit_code::CONFIG_OR_IO, &e),
            };
            if let Some(o) = output {
                cfg.output_path = o;
            }
            if let Some(f) = format {
                cfg.output_format = f;
            }
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(n) = samples {
                cfg.mc_samples = n;
            }
            if let Some(m) = method {
                cfg.method = m;
            }
            if let Err(e) = cfg.validate() {
                return fail(exit_code::CONFIG_OR_IO, &e.to_string());
            }
            let rows = match cli::run_sweep(&cfg) {
                Ok(rows) => rows,
                Err(e) => return fail(exit_code::NUMERICAL, &e.to_string()),
            };
            let bytes = cli::emit(&rows, cfg.output_format);
            let target = cfg.output_file();
            if let Err(e) = cli::write_output(&bytes, target.as_deref()) {
                let name = target.map_or(STDOUT_SENTINEL.into(), |p| p.display().to_string());
                return fail(
                    exit_code::CONFIG_OR_IO,
                    &format!("cannot write {name}: {e}"),
                );
            }
            ExitCode::from(exit_code::SUCCESS)
        }
        Command::Show { state, p } => {
            let rho: Result<DensityMatrix, String> = match state {
                StateKind::Gas => GasMixParams::new(p).map(rho_gas).map_err(|e| e.to_string()),
                StateKind::Liquid => WernerParams::new(p).map(rho_liq).map_err(|e| e.to_string()),
            };
            match rho {
                Ok(rho) => {
                    print!("{}", render(&rho));
                    ExitCode::from(exit_code::SUCCESS)
                }
                Err(e) => fail(exit_code::CONFIG_OR_IO, &e),
            }
        }
    }
}

fn render(rho: &DensityMatrix) -> String {
    let m = rho.matrix();
    let real = m.as_slice().iter().all(|z| z.im.abs() < 5e-7);
    let mut out = String::new();
    for r in 0..m.rows() {
        let cells: Vec<String> = (0..m.cols())
            .map(|c| {
                let z = m[(r, c)];
                // avoid printing -0.000000
                let re = if z.re.abs() < 5e-7 { 0.0 } else { z.re };
                if real {
                    format!("{re:>10.6}")
                } else {
                    format!("{re:>10.6}{:+.6}i", z.im)
                }
            })
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn fail(code: u8, msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}
