use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chaingraph::graphfile::{self, ParseError};
use chaingraph::propcheck::{cg_unrepresentability_demo, GraphFamily, Property, PropertyReport, DEMO_ID};
use chaingraph::separation::{
    bounded_walk_oracle, c_connecting_witness, c_separated, models_equal, moral_separated, pairwise_model,
    sufficient_walk_bound, OracleMode, SeparationQuery,
};
use chaingraph::transform::{ang_transform, marginalize_and_condition_ordered, Order, TransformSpec};
use chaingraph::{Error, MixedGraph, NodeSet};
use clap::{Parser, Subcommand, ValueEnum};

/// Chain graphs, chain mixed graphs and anterial graphs from the command line.
///
/// Graph files hold one edge per line (`a -- b`, `a -> b`, `a <-> b`), an
/// optional `nodes:` line for isolated nodes and `#` comments. Pass `-` to
/// read from stdin.
#[derive(Parser)]
#[command(name = "cmg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graph classes the file belongs to.
    Classify { file: PathBuf },
    /// Decide whether --a and --b are separated given --given.
    Separate {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value = "")]
        given: String,
        #[arg(long, value_enum, default_value_t = Method::C)]
        method: Method,
    },
    /// Marginalize over -M and condition on -C, printing the result.
    Transform {
        file: PathBuf,
        #[arg(short = 'M', default_value = "")]
        marginalize: String,
        #[arg(short = 'C', default_value = "")]
        condition: String,
        /// Anterialize the result.
        #[arg(long)]
        ang: bool,
        #[arg(long, value_enum, default_value_t = OrderArg::Mc)]
        order: OrderArg,
    },
    /// List every pairwise independence statement.
    Model { file: PathBuf },
    /// Compare the pairwise models of two graphs.
    Equal { first: PathBuf, second: PathBuf },
    /// Run property suites and print one report per line.
    Check {
        /// A property id, `cg-unrepresentability`, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        /// Draw chain mixed graphs without multi-edges.
        #[arg(long)]
        simple: bool,
    },
    /// Export Graphviz DOT.
    Dot { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    C,
    Moral,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Mc,
    Cm,
}

enum Failure {
    Usage(String),
    Cap(String),
    Property,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read_graph(path: &Path) -> Result<MixedGraph, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    graphfile::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn node_list(text: &str) -> Result<NodeSet, Failure> {
    graphfile::parse_node_list(text)
        .map(|v| v.into_iter().collect())
        .map_err(|e: ParseError| Failure::Usage(format!("node list `{text}`: {}", e.message)))
}

fn separate(g: &MixedGraph, q: &SeparationQuery, method: Method) -> Result<(), Failure> {
    let separated = match method {
        Method::C => c_separated(g, q)?,
        Method::Moral => moral_separated(g, q)?,
        Method::Oracle => bounded_walk_oracle(g, q, sufficient_walk_bound(g.node_count()), OracleMode::WalksInC)?,
    };
    if separated {
        println!("separated");
        return Ok(());
    }
    println!("connected");
    if let Some(walk) = c_connecting_witness(g, q)? {
        println!("walk: {walk}");
    }
    Ok(())
}

fn check(suite: &str, seed: u64, count: usize, simple: bool) -> Result<(), Failure> {
    let props: Vec<Property> = match suite {
        "all" => Property::ALL.to_vec(),
        DEMO_ID => Vec::new(),
        id => vec![Property::from_id(id).ok_or_else(|| Failure::Usage(format!("unknown suite `{id}`")))?],
    };
    let mut reports: Vec<PropertyReport> = props
        .into_iter()
        .map(|p| {
            if simple && p.family() == GraphFamily::Cmg {
                p.run_in(GraphFamily::SimpleCmg, seed, count)
            } else {
                p.run(seed, count)
            }
        })
        .collect();
    if suite == "all" || suite == DEMO_ID {
        reports.push(cg_unrepresentability_demo());
    }
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().all(PropertyReport::passed) {
        Ok(())
    } else {
        Err(Failure::Property)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { file } => println!("{}", read_graph(&file)?.classify()),
        Command::Separate { file, a, b, given, method } => {
            let g = read_graph(&file)?;
            let q = SeparationQuery::new(node_list(&a)?, node_list(&b)?, node_list(&given)?);
            separate(&g, &q, method)?;
        }
        Command::Transform { file, marginalize, condition, ang, order } => {
            let g = read_graph(&file)?;
            let spec = TransformSpec::new(node_list(&marginalize)?, node_list(&condition)?);
            let h = if ang {
                ang_transform(&g, &spec)?
            } else {
                let order = match order {
                    OrderArg::Mc => Order::MarginalizeFirst,
                    OrderArg::Cm => Order::ConditionFirst,
                };
                marginalize_and_condition_ordered(&g, &spec, order)?
            };
            print!("{}", graphfile::render(&h));
        }
        Command::Model { file } => {
            for s in pairwise_model(&read_graph(&file)?)?.statements() {
                println!("{s}");
            }
        }
        Command::Equal { first, second } => {
            let (g, h) = (read_graph(&first)?, read_graph(&second)?);
            let same = models_equal(&pairwise_model(&g)?, &pairwise_model(&h)?)?;
            println!("{}", if same { "equal" } else { "different" });
        }
        Command::Check { suite, seed, count, simple } => check(&suite, seed, count, simple)?,
        Command::Dot { file } => print!("{}", graphfile::to_dot(&read_graph(&file)?)),
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Property) => ExitCode::from(4),
    }
}
