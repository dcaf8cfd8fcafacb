use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fsind_cli::{
    indicator_report, load, qsl2_report, read_input, render_report, skip_validation_requested, table_report, CliError,
    CliResult, Method, ReportDocument,
};
use fsind_core::constructors::{builtin, catalog};
use fsind_core::qsl2::DEFAULT_MAX_TWO_ELL;

#[derive(Parser)]
#[command(name = "fsind", version, about = "Exact Frobenius-Schur indicators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Def,
    Sep,
    Sym,
    All,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Def => Method::Definition,
            MethodArg::Sep => Method::Separability,
            MethodArg::Sym => Method::Symmetric,
            MethodArg::All => Method::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of an input file
    Check { file: PathBuf },
    /// Indicator of one module
    Indicator {
        file: PathBuf,
        #[arg(long)]
        module: String,
        /// Involution or character twist name
        #[arg(long)]
        twist: Option<String>,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Indicators of every module under every twist, cross-checked
    Table {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Indicator of the simple U_q(sl2) module of highest weight l, given 2l
    Qsl2 {
        two_ell: u32,
        #[arg(long)]
        twisted: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_TWO_ELL)]
        max: u32,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in examples
    Catalog,
    /// Write a built-in example as an input file
    Example {
        name: String,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn emit(report: &ReportDocument, json: bool) -> ExitCode {
    if json {
        print!("{}", report.to_json());
    } else {
        print!("{}", render_report(report));
    }
    if report.discrepancy {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn check(file: &Path) -> CliResult<ExitCode> {
    let doc = read_input(file)?;
    let loaded = doc.build()?;
    let report = loaded.validate();
    if report.is_ok() {
        println!("ok");
        return Ok(ExitCode::SUCCESS);
    }
    for v in &report.violations {
        println!("violation [{}]: {}", v.axiom, v.detail);
    }
    Ok(ExitCode::from(1))
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let validate = !skip_validation_requested();
    match cli.command {
        Command::Check { file } => check(&file),
        Command::Indicator {
            file,
            module,
            twist,
            method,
            json,
        } => {
            let doc = load(&read_input(&file)?, validate)?;
            Ok(emit(&indicator_report(&doc, &module, twist.as_deref(), method.into())?, json))
        }
        Command::Table { file, json } => {
            let doc = load(&read_input(&file)?, validate)?;
            Ok(emit(&table_report(&doc)?, json))
        }
        Command::Qsl2 {
            two_ell,
            twisted,
            max,
            json,
        } => Ok(emit(&qsl2_report(two_ell, twisted, max)?, json)),
        Command::Catalog => {
            for (name, desc) in catalog() {
                println!("{name:<14}{desc}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Example { name, output } => {
            let doc = builtin(&name)?;
            std::fs::write(&output, doc.to_json()).map_err(|source| CliError::Io {
                path: output.display().to_string(),
                source,
            })?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Invalid(report) = &e {
                for v in &report.violations {
                    eprintln!("  [{}] {}", v.axiom, v.detail);
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
