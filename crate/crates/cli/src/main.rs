use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fdk0::IntMatrix;
use fdk0_cli::commands::{cmd_analyze, cmd_compose, cmd_invert, cmd_snf, Format, InverseSide};
use fdk0_cli::input::parse_matrix;
use fdk0_cli::CliError;

/// Decide properties of *-homomorphisms between finite-dimensional C*-algebras
/// and of the induced maps on K0, from their multiplicity matrices.
#[derive(Debug, Parser)]
#[command(name = "fdk0", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze one hom from a workspace file.
    Analyze {
        #[arg(long)]
        workspace: PathBuf,
        #[arg(long)]
        hom: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compose homs (listed in application order) and analyze the composite.
    Compose {
        #[arg(long)]
        workspace: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        homs: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// One-sided integer inverse; exits with 4 when only a scaled inverse exists.
    Invert {
        #[arg(long, value_enum)]
        side: InverseSide,
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Smith normal form D = U * E * V.
    Snf {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct MatrixArg {
    /// Inline rows, e.g. "3 3; 2 0; 0 5" or "[[3,3],[2,0],[0,5]]".
    #[arg(long)]
    matrix: Option<String>,
    #[arg(long)]
    matrix_file: Option<PathBuf>,
}

impl MatrixArg {
    fn load(&self) -> Result<IntMatrix, CliError> {
        match (&self.matrix, &self.matrix_file) {
            (Some(text), _) => parse_matrix(text, "--matrix"),
            (None, Some(path)) => {
                let text = fs::read_to_string(path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                parse_matrix(&text, &path.display().to_string())
            }
            (None, None) => Err(CliError::Usage(
                "one of --matrix or --matrix-file is required".into(),
            )),
        }
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match cli.command {
        Command::Analyze {
            workspace,
            hom,
            format,
        } => cmd_analyze(&workspace, &hom, format, out),
        Command::Compose {
            workspace,
            homs,
            format,
        } => cmd_compose(&workspace, &homs, format, out),
        Command::Invert {
            side,
            matrix,
            format,
        } => cmd_invert(&matrix.load()?, side, format, out),
        Command::Snf { matrix, format } => cmd_snf(&matrix.load()?, format, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let status = match run(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(status)
}
