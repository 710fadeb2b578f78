use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use seshadri::geometry::Preset;
use seshadri_cli::commands::{cmd_analyze, cmd_build, cmd_export, BuildKind, CommandOutput};
use seshadri_cli::document::ArrangementDocument;
use seshadri_cli::report::Format;
use seshadri_cli::verify::{render_results, run_all};
use seshadri_cli::CliError;

/// Configurational Seshadri constants of curve arrangements, computed exactly.
#[derive(Debug, Parser)]
#[command(name = "seshadri", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input document (`-` for stdin).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Output file; defaults to stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Line bundle as comma-separated rationals, e.g. "1,3/2".
    #[arg(long, global = true)]
    line_bundle: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write an arrangement document.
    Build {
        #[command(subcommand)]
        kind: BuildCommand,
    },
    /// Invariants, certificates and bounds for a document.
    Analyze,
    /// Run the reproduction suite; exits 0 iff every check passes.
    VerifyPaper,
    /// Re-emit a document canonically (machine-readable) or as a listing (text).
    Export,
}

#[derive(Debug, Subcommand)]
enum BuildCommand {
    FermatPlane { n: u32 },
    FermatQuartic,
    Star {
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// klein, wiman, hesse-conics, quasi-pencil K or fermat-plane-combinatorial N.
    Preset { name: String, param: Option<u64> },
    /// Pull a line arrangement of the plane (from --input) back to X_e.
    Pullback {
        #[arg(long)]
        e: i64,
    },
    /// Double cover of the plane branched along a general sextic (from --input).
    DoubleCover,
}

fn read_input(path: Option<&Path>) -> Result<Vec<u8>, CliError> {
    let path = path.ok_or_else(|| CliError::Input("--input is required".into()))?;
    if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|source| CliError::Io { path: path.into(), source })?;
        return Ok(buf);
    }
    fs::read(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn read_document(path: Option<&Path>) -> Result<ArrangementDocument, CliError> {
    let bytes = read_input(path)?;
    let text = String::from_utf8(bytes).map_err(|e| CliError::Input(format!("input is not UTF-8: {e}")))?;
    ArrangementDocument::parse(&text)
}

fn build_kind(cmd: BuildCommand, input: Option<&Path>) -> Result<BuildKind, CliError> {
    Ok(match cmd {
        BuildCommand::FermatPlane { n } => BuildKind::FermatPlane(n),
        BuildCommand::FermatQuartic => BuildKind::FermatQuartic,
        BuildCommand::Star { d, seed } => BuildKind::Star { d, seed },
        BuildCommand::Preset { name, param } => {
            let spec = match param {
                Some(k) => format!("{name}:{k}"),
                None => name,
            };
            BuildKind::Preset(spec.parse::<Preset>()?)
        }
        BuildCommand::Pullback { e } => BuildKind::Pullback { source: read_document(input)?, e },
        BuildCommand::DoubleCover => BuildKind::DoubleCover { source: read_document(input)? },
    })
}

fn run(cli: Cli) -> Result<CommandOutput, CliError> {
    let input = cli.input.as_deref();
    match cli.command {
        Command::Build { kind } => cmd_build(&build_kind(kind, input)?),
        Command::Analyze => cmd_analyze(&read_input(input)?, cli.line_bundle.as_deref(), cli.format),
        Command::Export => cmd_export(&read_input(input)?, cli.format),
        Command::VerifyPaper => {
            let results = run_all();
            let failed = results.iter().any(|r| !r.passed());
            Ok(CommandOutput { body: render_results(&results, cli.format), check_failed: failed })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    let result = run(cli).and_then(|out| {
        match &output {
            Some(path) => fs::write(path, &out.body).map_err(|source| CliError::Io { path: path.clone(), source })?,
            None => {
                let mut stdout = io::stdout().lock();
                // a closed pipe is not worth a failure status
                let _ = stdout.write_all(out.body.as_bytes());
            }
        }
        Ok(out.check_failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
