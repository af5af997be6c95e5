use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pga::Signature;
use pga_cli::commands::{self, Simulation};
use pga_cli::CliError;

#[derive(Parser)]
#[command(name = "pga", version, about = "Projective geometric algebra calculator")]
struct Cli {
    /// Signature: d201, d301, r300 or custom:p,m,z[,dual].
    #[arg(long, global = true, env = "PGA_SIG", default_value = "d301")]
    sig: Signature,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate statements and print the value of the last one.
    Eval {
        /// Program text; `;` or line breaks separate statements.
        source: String,
    },
    /// Read statements from standard input, one line at a time.
    Repl,
    /// Print the Cayley table and compare it with the reference table.
    Tables,
    /// Evaluate a catalog formula on expression arguments.
    Formula {
        /// List every formula with its parameters.
        #[arg(long)]
        list: bool,
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Integrate a rigid body of point masses and write its trajectory.
    Simulate {
        /// Body file with one `mass x y z` line per point.
        #[arg(long)]
        body: PathBuf,
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
        #[arg(long, default_value_t = 10_000)]
        steps: usize,
        /// CSV destination; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Body angular velocity and origin velocity: wx,wy,wz,vx,vy,vz.
        #[arg(long, value_parser = six, allow_hyphen_values = true, default_value = "1,0.5,0.25,0,0,0")]
        velocity: [f64; 6],
        /// Constant body force bivector on e01,e02,e03,e23,e31,e12.
        #[arg(long, value_parser = six, allow_hyphen_values = true, default_value = "0,0,0,0,0,0")]
        force: [f64; 6],
    },
}

fn six(s: &str) -> Result<[f64; 6], String> {
    let values = s.split(',').map(|t| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"))).collect::<Result<Vec<_>, _>>()?;
    values.try_into().map_err(|v: Vec<f64>| format!("expected 6 comma-separated numbers, found {}", v.len()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Eval { source } => writeln!(out, "{}", commands::eval_source(&source, cli.sig)?)?,
        Command::Repl => commands::repl(cli.sig, io::stdin().lock(), &mut out, &mut io::stderr())?,
        Command::Tables => commands::tables(cli.sig, &mut out, &mut io::stderr())?,
        Command::Formula { list: true, .. } => commands::list_formulas(&mut out)?,
        Command::Formula { name, args, .. } => writeln!(out, "{}", commands::formula(&name.unwrap_or_default(), &args)?)?,
        Command::Simulate { body, dt, steps, out: path, velocity, force } => {
            let sim = Simulation { dt, steps, velocity, force };
            let traj = sim.run(&fs::read_to_string(&body)?)?;
            let line = commands::summary(&sim, &traj);
            match path {
                Some(p) => {
                    let mut file = BufWriter::new(fs::File::create(p)?);
                    traj.write_csv(&mut file)?;
                    file.flush()?;
                    writeln!(out, "{line}")?;
                }
                None => {
                    traj.write_csv(&mut out)?;
                    eprintln!("{line}");
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
