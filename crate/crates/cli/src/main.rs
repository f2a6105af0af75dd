use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use deligne_core::fusion::{self, FusionRing};
use deligne_core::groups::{
    class_label, enumerate_subgroups_with_cap, h2_classes, CharDescriptor, ElementNames,
    FiniteAbelianGroup, Subgroup, DEFAULT_ORDER_CAP,
};
use deligne_core::modules::{classify_module_simples, ModuleSimple};

mod examples;
mod output;

use output::{fmt_float, Failure};

#[derive(Parser)]
#[command(
    name = "deligne",
    version,
    about = "Decategorified invariants of Deligne tensor products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a worked example.
    Example {
        id: examples::FixtureId,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Compare the output with the committed golden file.
        #[arg(long)]
        check: bool,
    },
    /// Fusion ring files.
    Fusion {
        #[command(subcommand)]
        command: FusionCommand,
    },
    /// Finite abelian groups.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
}

#[derive(Subcommand)]
enum FusionCommand {
    /// Check the based-ring axioms.
    Verify { path: PathBuf },
    /// Deligne product of two rings.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Frobenius–Perron dimensions.
    Fpdim {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(clap::Args)]
struct GroupArgs {
    /// Cyclic factor orders, comma separated; empty for the trivial group.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    orders: Vec<u64>,
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum GroupCommand {
    Subgroups(GroupArgs),
    /// Classes of H²(G, k*).
    H2(GroupArgs),
    /// Simple objects of Mod(Vect_G).
    Simples(GroupArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Semantic { output, message }) => {
            print!("{output}");
            eprintln!("{message}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Example { id, format, check } => {
            let out = examples::render(id, format).map_err(Failure::semantic)?;
            if check {
                let golden = examples::golden(id, format);
                if out != golden {
                    return Err(Failure::Semantic {
                        output: String::new(),
                        message: format!(
                            "output differs from golden {}\n--- expected\n{golden}--- got\n{out}",
                            examples::golden_name(id, format)
                        ),
                    });
                }
                return Ok(format!(
                    "{}: matches golden\n",
                    examples::golden_name(id, format)
                ));
            }
            Ok(out)
        }
        Command::Fusion { command } => run_fusion(command),
        Command::Group { command } => run_group(command),
    }
}

fn read_ring(path: &Path) -> Result<FusionRing, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn require_valid(ring: &FusionRing, path: &Path) -> Result<(), Failure> {
    let report = ring.validate();
    if report.is_ok() {
        Ok(())
    } else {
        Err(Failure::Semantic {
            output: report.to_string(),
            message: format!("{} is not a valid based ring", path.display()),
        })
    }
}

fn run_fusion(command: FusionCommand) -> Result<String, Failure> {
    match command {
        FusionCommand::Verify { path } => {
            let ring = read_ring(&path)?;
            require_valid(&ring, &path)?;
            Ok("ok\n".into())
        }
        FusionCommand::Product {
            left,
            right,
            output,
        } => {
            let (a, b) = (read_ring(&left)?, read_ring(&right)?);
            require_valid(&a, &left)?;
            require_valid(&b, &right)?;
            let product = fusion::deligne_product(&a, &b).map_err(Failure::semantic)?;
            let json = output::json(&product);
            match output {
                Some(path) => {
                    fs::write(&path, json)
                        .map_err(|e| Failure::semantic(format!("{}: {e}", path.display())))?;
                    Ok(format!(
                        "wrote rank-{} ring to {}\n",
                        product.rank(),
                        path.display()
                    ))
                }
                None => Ok(json),
            }
        }
        FusionCommand::Fpdim { path, format } => {
            let ring = read_ring(&path)?;
            require_valid(&ring, &path)?;
            let fp = fusion::fp_data(&ring).map_err(Failure::semantic)?;
            Ok(match format {
                Format::Json => output::json(&fp),
                Format::Csv => {
                    let rows = ring
                        .labels()
                        .iter()
                        .zip(&fp.per_basis)
                        .map(|(l, d)| vec![l.clone(), fmt_float(*d)]);
                    output::csv(&["label", "fpdim"], rows)
                }
                Format::Text => {
                    let dims: Vec<String> = fp.per_basis.iter().map(|&d| fmt_float(d)).collect();
                    format!("{}; total {}\n", dims.join(", "), fmt_float(fp.total))
                }
            })
        }
    }
}

fn order_cap() -> Result<u64, Failure> {
    match std::env::var("FUSION_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("FUSION_CAP={v:?} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn run_group(command: GroupCommand) -> Result<String, Failure> {
    let (GroupCommand::Subgroups(args) | GroupCommand::H2(args) | GroupCommand::Simples(args)) =
        &command;
    let cap = order_cap()?;
    let g = FiniteAbelianGroup::with_cap(&args.orders, cap).map_err(Failure::usage)?;
    let k = CharDescriptor::new(args.characteristic).map_err(Failure::usage)?;
    let names = ElementNames::default();
    let format = args.format;
    match command {
        GroupCommand::Subgroups(_) => {
            let subs = enumerate_subgroups_with_cap(&g, cap).map_err(Failure::semantic)?;
            Ok(match format {
                Format::Json => output::json(&subs),
                Format::Csv => output::csv(
                    &["subgroup", "order"],
                    subs.iter()
                        .map(|h| vec![names.subgroup_label(h), h.order().to_string()]),
                ),
                Format::Text => subs
                    .iter()
                    .map(|h| format!("{}\n", names.subgroup_label(h)))
                    .collect(),
            })
        }
        GroupCommand::H2(_) => {
            let full = Subgroup::full(&g);
            let classes = h2_classes(&full, k).map_err(Failure::semantic)?;
            let label = names.subgroup_label(&full);
            let simples: Vec<ModuleSimple> = classes
                .into_iter()
                .map(|class| ModuleSimple {
                    label: format!("({label},{})", class_label(&class)),
                    subgroup: full.clone(),
                    class,
                })
                .collect();
            Ok(match format {
                Format::Json => output::json(&simples),
                Format::Csv => output::csv(
                    &["class", "residues"],
                    simples
                        .iter()
                        .map(|s| vec![class_label(&s.class), format!("{:?}", s.class.residues())]),
                ),
                Format::Text if simples.len() == 1 => "1 class (trivial)\n".into(),
                Format::Text => {
                    let labels: Vec<String> =
                        simples.iter().map(|s| class_label(&s.class)).collect();
                    format!("{} classes: {}\n", simples.len(), labels.join(", "))
                }
            })
        }
        GroupCommand::Simples(_) => {
            let simples = classify_module_simples(&g, k).map_err(Failure::semantic)?;
            Ok(examples::render_simples(&simples, &names, format))
        }
    }
}
