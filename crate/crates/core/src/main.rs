use clap::{Args, Parser, Subcommand};
use martensite::report::{
    cmd_compat, cmd_distances, cmd_facets, cmd_functionals, cmd_symmetry, cmd_t3_lambdas,
    cmd_t3_level2, cmd_t3_list, cmd_t3_nodes, cmd_t3_witness, cmd_variants, cmd_verify,
    parse_triple, CommandOutput, OutputFormat, RunConfig,
};
use std::io::Write;
use std::process::ExitCode;

/// Exact tables and certificates for twelve-variant monoclinic-I martensite:
/// strain compatibility, polytope facets and T3 configurations.
#[derive(Parser)]
#[command(name = "martensite", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Material name from the shipped registry (NiTi, CuZr, TiNiCu).
    #[arg(long, global = true)]
    material: Option<String>,
    /// Explicit lattice parameters alpha,beta,delta,epsilon; decimals and
    /// a/b fractions are parsed exactly.
    #[arg(long, global = true)]
    params: Option<String>,
    /// Output format.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Interval width for reported algebraic numbers (rational, e.g. 1/1000000000).
    #[arg(long, global = true)]
    width: Option<String>,
    /// Sample budget for the five-dimensional witness.
    #[arg(long, global = true, default_value_t = 32)]
    samples: usize,
    /// Offset into the deterministic sample sequence.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the twelve transformation strains.
    Variants(Common),
    /// Pairwise determinant partition (compatible / incompatible).
    Compat(Common),
    /// Squared distances between variants by class.
    Distances(Common),
    /// Generator actions, group orders, and symmetry checks.
    Symmetry {
        #[command(flatten)]
        common: Common,
        /// Check one generator (r0, r1, r2, r3) against the symmetry predicates.
        #[arg(long)]
        check: Option<String>,
    },
    /// Images and extremisers of the corner linear functionals.
    Functionals(Common),
    /// Enumerate the facets of the variant polytope.
    Facets(Common),
    /// T3 configurations.
    T3 {
        #[command(flatten)]
        common: Common,
        #[command(subcommand)]
        sub: T3Command,
    },
    /// Replay every checkable claim and print a pass/fail ledger.
    Verify(Common),
}

#[derive(Subcommand)]
enum T3Command {
    /// The eight pairwise incompatible triples.
    List,
    /// Scaffold parameters for every triple.
    Lambdas,
    /// Nodes, node checks, and the hull skeleton of one triple.
    Nodes {
        /// Variant triple, e.g. 1,8,10.
        #[arg(long, default_value = "1,8,10")]
        triple: String,
    },
    /// The 24 level-2 T3s at the nodes.
    Level2,
    /// Five-dimensional witness sampling report.
    Witness,
}

type Action = Box<dyn FnOnce(&RunConfig) -> Result<CommandOutput, String>>;

fn run() -> Result<(CommandOutput, RunConfig, bool), String> {
    let cli = Cli::parse();
    let (common, build): (&Common, Action) =
        match &cli.command {
            Command::Variants(c) => (c, Box::new(|cfg| cmd_variants(cfg).map_err(|e| e.to_string()))),
            Command::Compat(c) => (c, Box::new(|cfg| cmd_compat(cfg).map_err(|e| e.to_string()))),
            Command::Distances(c) => {
                (c, Box::new(|cfg| cmd_distances(cfg).map_err(|e| e.to_string())))
            }
            Command::Symmetry { common, check } => {
                let check = check.clone();
                (
                    common,
                    Box::new(move |cfg| {
                        cmd_symmetry(cfg, check.as_deref()).map_err(|e| e.to_string())
                    }),
                )
            }
            Command::Functionals(c) => {
                (c, Box::new(|cfg| cmd_functionals(cfg).map_err(|e| e.to_string())))
            }
            Command::Facets(c) => (c, Box::new(|cfg| cmd_facets(cfg).map_err(|e| e.to_string()))),
            Command::T3 { common, sub } => {
                let action: Action = match sub {
                        T3Command::List => {
                            Box::new(|cfg| cmd_t3_list(cfg).map_err(|e| e.to_string()))
                        }
                        T3Command::Lambdas => {
                            Box::new(|cfg| cmd_t3_lambdas(cfg).map_err(|e| e.to_string()))
                        }
                        T3Command::Nodes { triple } => {
                            let triple = triple.clone();
                            Box::new(move |cfg| {
                                let t = parse_triple(&triple).map_err(|e| e.to_string())?;
                                cmd_t3_nodes(cfg, t).map_err(|e| e.to_string())
                            })
                        }
                        T3Command::Level2 => {
                            Box::new(|cfg| cmd_t3_level2(cfg).map_err(|e| e.to_string()))
                        }
                        T3Command::Witness => {
                            Box::new(|cfg| cmd_t3_witness(cfg).map_err(|e| e.to_string()))
                        }
                    };
                (common, action)
            }
            Command::Verify(c) => (c, Box::new(|cfg| cmd_verify(cfg).map_err(|e| e.to_string()))),
        };

    let format: OutputFormat = common.format.parse()?;
    let config = RunConfig::resolve(
        common.material.as_deref(),
        common.params.as_deref(),
        format,
        common.width.as_deref(),
        common.samples,
        common.seed,
    )
    .map_err(|e| e.to_string())?;
    let is_verify = matches!(cli.command, Command::Verify(_));
    let output = build(&config)?;

    if let Some(path) = &common.out {
        std::fs::write(path, output.render(config.format)).map_err(|e| e.to_string())?;
    }
    Ok((output, config, is_verify))
}

fn main() -> ExitCode {
    match run() {
        Ok((output, config, is_verify)) => {
            let rendered = output.render(config.format);
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(rendered.as_bytes());
            if is_verify {
                let failed = output.json["data"]["failed"].as_u64().unwrap_or(0);
                if failed > 0 {
                    return ExitCode::FAILURE;
                }
            }
            ExitCode::SUCCESS
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
