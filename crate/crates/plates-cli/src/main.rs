//! `plates` — command-line front end for the plate calculus: dimension
//! tables, label enumeration, expansion and straightening, change-of-basis
//! matrices, functional-representation evaluation, and randomized identity
//! verification. All arithmetic is exact.
//!
//! Exit codes: 0 success, 1 domain/parse failure (including a disproved
//! identity), 2 usage error, 3 resource or sampling limit.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use plates_core::json::{dims_json, matrix_json, report_json, vector_from_json_text, vector_json};
use plates_core::text::{format_rational, parse_csp, parse_osp, parse_point};
use plates_core::{
    convolution_expand, straighten_osp, straighten_theorem_form, tree_expand, verify_identity,
    weyl_chamber_expansion, ChangeOfBasis, DirectedTree, Error, GenericityPolicy, OracleKind,
    PlateVector, RationalPoint, Result, Side, Space, VectorLabel,
};

#[derive(Parser)]
#[command(
    name = "plates",
    version,
    about = "Exact calculus of permutohedral plates",
    after_help = "Environment:\n  PLATES_MAX_N  overrides the default ground-set size guard (8)"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Lift the ground-set size guard.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension table of the four spaces for one ground-set size.
    Dims { n: u32 },
    /// List plate labels (or standard composites) on {1, …, n} in lex order.
    Enumerate {
        n: u32,
        /// List standard composites instead of plates.
        #[arg(long)]
        standard_composites: bool,
        /// Keep only labels with exactly K blocks (or K factors).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Expand a composite into its signed sum of plates.
    Expand {
        /// Composite, e.g. "1*2|3".
        #[arg(long)]
        csp: String,
        /// Space to expand in: hatP, P, hatP1 or P1.
        #[arg(long, default_value = "hatP")]
        space: String,
    },
    /// Expand the plate of a directed tree into plates of chains and lumpings.
    TreeExpand {
        /// Edge list, e.g. "1>3,2>3,1>4".
        #[arg(long)]
        edges: String,
        /// Space to expand in: hatP, P, hatP1 or P1.
        #[arg(long, default_value = "hatP")]
        space: String,
    },
    /// Rewrite a plate in the canonical basis of the chosen space.
    Straighten {
        /// Plate label, e.g. "2|1|3".
        #[arg(long)]
        osp: String,
        /// Target space: hatP, P, hatP1 or P1.
        #[arg(long)]
        space: String,
        /// Use the direct closed formula instead of back-substitution.
        #[arg(long)]
        theorem_form: bool,
        /// Split position for the closed formula (defaults to the position
        /// of the smallest label's block).
        #[arg(long, requires = "theorem_form")]
        pivot: Option<usize>,
    },
    /// Print the change-of-basis matrix from plates to canonical composites.
    Matrix {
        n: u32,
        /// Output format: csv or json.
        #[arg(long, default_value = "csv")]
        format: String,
        /// Print the inverse matrix instead.
        #[arg(long)]
        inverse: bool,
    },
    /// Evaluate a label's functional representation at an exact point.
    Eval {
        /// Representation: P, hatP1 or P1.
        #[arg(long)]
        rep: String,
        /// Plate label or composite, e.g. "1|2|3" or "1*2|3".
        #[arg(long)]
        label: String,
        /// Comma-separated rational coordinates, e.g. "2,1/2,3".
        #[arg(long)]
        point: String,
    },
    /// Check that two sides agree at seeded random generic points.
    Verify {
        /// Left side: vector JSON, or prefix:payload (see --help).
        #[arg(long, long_help = SIDE_GRAMMAR)]
        lhs: String,
        /// Right side, same grammar as --lhs.
        #[arg(long)]
        rhs: String,
        /// Oracle: indicator, P, hatP1 or P1.
        #[arg(long)]
        oracle: String,
        /// Number of sampled points.
        #[arg(long, default_value_t = 20)]
        trials: u32,
        /// Seed for the point sampler.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

const SIDE_GRAMMAR: &str = "\
Left side of the identity. Either a vector JSON object (as printed by the
expansion commands with --json) or one of:
  osp:2|1|3            a single plate
  csp:1*2|3            a composite (its Minkowski sum / product)
  expand:1*2|3         the composite's signed plate expansion
  tree:1>3,2>3,1>4     a directed tree's plate
  tree-expand:1>3,2>3  the tree plate's signed expansion
  weyl:2|1|3           a permutation's closed Weyl chamber
  weyl-expand:2|1|3    the chamber's signed dual-face expansion
Expansions are taken in the space matching the oracle
(indicator -> hatP, P -> P, hatP1 -> hatP1, P1 -> P1).";

fn main() -> ExitCode {
    // Die quietly when the consumer of a long listing hangs up
    // (e.g. `plates enumerate 8 | head`); the default Rust handler panics.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Resource(_) | Error::Sampling(_) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

/// The enumeration guard: `PLATES_MAX_N` overrides the default, `--force`
/// lifts it entirely.
fn size_cap(force: bool) -> Result<u32> {
    if force {
        return Ok(u32::MAX);
    }
    match std::env::var("PLATES_MAX_N") {
        Ok(text) => text
            .parse()
            .map_err(|_| Error::domain("PLATES_MAX_N must be a non-negative integer")),
        Err(_) => Ok(plates_core::combinatorics::DEFAULT_MAX_N),
    }
}

fn guard(n: u32, cap: u32) -> Result<()> {
    if n > cap {
        return Err(Error::resource(format!(
            "ground-set size {n} exceeds the guard ({cap}); pass --force to lift it"
        )));
    }
    Ok(())
}

/// Which space an expansion side is taken in when verifying under an oracle.
fn space_for(oracle: OracleKind) -> Space {
    match oracle {
        OracleKind::Indicator => Space::HatP,
        OracleKind::P => Space::P,
        OracleKind::HatP1 => Space::HatP1,
        OracleKind::P1 => Space::P1,
    }
}

fn parse_side(text: &str, oracle: OracleKind) -> Result<Side> {
    if text.trim_start().starts_with('{') {
        return Ok(Side::Vector(vector_from_json_text(text)?));
    }
    let Some((prefix, payload)) = text.split_once(':') else {
        return Err(Error::domain(
            "a side must be vector JSON or prefix:payload with prefix one of \
             osp, csp, expand, tree, tree-expand, weyl, weyl-expand",
        ));
    };
    match prefix {
        "osp" => Ok(Side::Vector(PlateVector::unit_plate(&parse_osp(payload)?)?)),
        "csp" => Ok(Side::Composite(parse_csp(payload, None)?)),
        "expand" => {
            let expansion = convolution_expand(&parse_csp(payload, None)?)?;
            Ok(Side::Vector(in_space(expansion, space_for(oracle))))
        }
        "tree" => Ok(Side::Tree(DirectedTree::from_text(payload)?)),
        "tree-expand" => {
            let tree = DirectedTree::from_text(payload)?;
            Ok(Side::Vector(tree_expand(&tree, space_for(oracle))?))
        }
        "weyl" => Ok(Side::Chamber(parse_osp(payload)?)),
        "weyl-expand" => Ok(Side::Vector(weyl_chamber_expansion(&parse_osp(payload)?)?)),
        other => Err(Error::domain(format!(
            "unknown side prefix '{other}' (expected osp, csp, expand, tree, \
             tree-expand, weyl or weyl-expand)"
        ))),
    }
}

/// Projects a plate-basis expansion into a space by dropping the labels the
/// space kills.
fn in_space(v: PlateVector, space: Space) -> PlateVector {
    v.filter(|label| match label {
        VectorLabel::Osp(osp) => space.plate_survives(osp),
        VectorLabel::Csp(csp) => space.canonical_survives(csp),
    })
}

fn print_vector(v: &PlateVector, json: bool) {
    if json {
        println!("{}", vector_json(v));
    } else {
        println!("{v}");
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let cap = size_cap(cli.force)?;
    match &cli.command {
        Command::Dims { n } => {
            let table = plates_core::dims(*n)?;
            if cli.json {
                println!("{}", dims_json(&table));
            } else {
                println!("n: {}", table.n);
                println!("hatP: {}", table.ordered_bell);
                println!("P: {}", table.cyclic_bell);
                println!("hatP1: {}", table.factorial);
                println!("P1: {}", table.pointed_quotient);
                fn row<T: ToString>(values: &[T]) -> String {
                    values.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
                }
                println!("canonical by factor count: {}", row(&table.composite_row));
                println!("permutations by factor count: {}", row(&table.stirling1_row));
            }
        }
        Command::Enumerate { n, standard_composites, k } => {
            let labels: Vec<String> = if *standard_composites {
                plates_core::combinatorics::enumerate_standard_csps_with_cap(*n, *k, cap)?
                    .iter()
                    .map(|csp| csp.to_string())
                    .collect()
            } else {
                plates_core::combinatorics::enumerate_osps_with_cap(*n, cap)?
                    .iter()
                    .filter(|osp| k.map_or(true, |k| osp.len() == k))
                    .map(|osp| osp.to_string())
                    .collect()
            };
            if cli.json {
                let kind = if *standard_composites { "standard-composites" } else { "plates" };
                println!(
                    "{}",
                    serde_json::json!({
                        "n": n,
                        "kind": kind,
                        "count": labels.len(),
                        "labels": labels,
                    })
                );
            } else {
                for label in labels {
                    println!("{label}");
                }
            }
        }
        Command::Expand { csp, space } => {
            let space = Space::parse(space)?;
            let csp = parse_csp(csp, None)?;
            guard(csp.ground().max_label().unwrap_or(0), cap)?;
            print_vector(&in_space(convolution_expand(&csp)?, space), cli.json);
        }
        Command::TreeExpand { edges, space } => {
            let space = Space::parse(space)?;
            let tree = DirectedTree::from_text(edges)?;
            guard(tree.n(), cap)?;
            print_vector(&tree_expand(&tree, space)?, cli.json);
        }
        Command::Straighten { osp, space, theorem_form, pivot } => {
            let space = Space::parse(space)?;
            let osp = parse_osp(osp)?;
            guard(osp.support().max_label().unwrap_or(0), cap)?;
            let straightened = if *theorem_form {
                in_space(straighten_theorem_form(&osp, *pivot)?, space)
            } else {
                straighten_osp(&osp, space)?
            };
            print_vector(&straightened, cli.json);
        }
        Command::Matrix { n, format, inverse } => {
            let mut matrix = ChangeOfBasis::build_with_cap(*n, cap)?;
            if *inverse {
                matrix = matrix.inverse()?;
            }
            match (cli.json, format.as_str()) {
                (true, _) | (false, "json") => println!("{}", matrix_json(&matrix)),
                (false, "csv") => {
                    let stdout = std::io::stdout();
                    matrix
                        .write_csv(&mut stdout.lock())
                        .map_err(|e| Error::resource(format!("cannot write output: {e}")))?;
                }
                (false, other) => {
                    return Err(Error::domain(format!(
                        "unknown matrix format '{other}' (expected csv or json)"
                    )));
                }
            }
        }
        Command::Eval { rep, label, point } => {
            let oracle = OracleKind::parse(rep)?;
            if oracle == OracleKind::Indicator {
                return Err(Error::domain(
                    "eval expects a functional representation: P, hatP1 or P1",
                ));
            }
            let side = if label.contains('*') {
                Side::Composite(parse_csp(label, None)?)
            } else {
                Side::Vector(PlateVector::unit_plate(&parse_osp(label)?)?)
            };
            let point = RationalPoint::new(parse_point(point)?);
            let value = plates_core::eval_side(&side, oracle, &point)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "rep": oracle.name(),
                        "label": label,
                        "point": plates_core::text::format_point(point.coords()),
                        "value": format_rational(&value),
                    })
                );
            } else {
                println!("{}", format_rational(&value));
            }
        }
        Command::Verify { lhs, rhs, oracle, trials, seed } => {
            let oracle = OracleKind::parse(oracle)?;
            let lhs = parse_side(lhs, oracle)?;
            let rhs = parse_side(rhs, oracle)?;
            let report =
                verify_identity(&lhs, &rhs, oracle, *trials, *seed, &GenericityPolicy::default())?;
            if cli.json {
                println!("{}", report_json(&report));
            } else {
                println!(
                    "oracle: {}  seed: {}  trials: {}  passed: {}",
                    report.oracle.name(),
                    report.seed,
                    report.trials,
                    report.passed
                );
                if let Some(c) = &report.counterexample {
                    println!(
                        "counterexample at trial {}: point {}",
                        c.trial,
                        plates_core::text::format_point(c.point.coords())
                    );
                    println!("  lhs = {}", format_rational(&c.lhs));
                    println!("  rhs = {}", format_rational(&c.rhs));
                }
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    let _ = std::io::stdout().flush();
    Ok(ExitCode::SUCCESS)
}
