//! Command-line surface for the index toolkit.
//!
//! Subcommands: `classify` (rationality verdict for one index), `inspect`
//! (invariants, dimensions, and the structure of the anisotropic quotient),
//! `centralize` (induced index of the centralizer of a split subtorus, or
//! torus arithmetic for a set of simple roots), and `batch` (a file of
//! indices to a JSON array of reports).
//!
//! Exit codes: 0 success, 2 malformed input (flags, index syntax, or
//! validation), 3 internal error.

use std::collections::BTreeSet;
use std::fmt;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use almostsimple::{
    anisotropic_quotient_descriptor, batch_entry, build_report, center_contained, center_of_sc,
    centralizer_index, commuting_torus, parse_index, BatchEntry, FieldContext, InducedIndex,
    IsogenyTag, TitsIndex,
};

#[derive(Parser)]
#[command(
    name = "almostsimple",
    version,
    about = "Tits indices of almost simple groups: invariants, centralizers, rationality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one index against the rationality rule table
    Classify(TripleArgs),
    /// Show invariants, dimensions, kernel structure, and the anisotropic quotient
    Inspect(TripleArgs),
    /// Centralizer of a split subtorus (--keep), or torus arithmetic for simple roots (--roots)
    Centralize(CentralizeArgs),
    /// Classify a file of lines `INDEX[<TAB>ISOGENY[<TAB>FIELD]]` into a JSON array
    Batch(BatchArgs),
}

#[derive(Args)]
struct TripleArgs {
    /// Index in text form, e.g. "^1E7:[1,6]" or "^2A5(1):[1,5]"
    #[arg(long)]
    index: String,
    /// Isogeny type: sc | adjoint | other
    #[arg(long, default_value = "other")]
    isogeny: String,
    /// Field context: general | padic | real
    #[arg(long, default_value = "general")]
    field: String,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CentralizeArgs {
    /// Index in text form
    #[arg(long)]
    index: String,
    /// Distinguished orbits to keep circled, each named by its least vertex
    /// (comma-separated; empty or omitted keeps none)
    #[arg(long, conflicts_with = "roots")]
    keep: Option<String>,
    /// Set of simple roots, e.g. "2,3,4": report the commuting torus, the
    /// center of the simply connected subgroup on them, and containment
    #[arg(long)]
    roots: Option<String>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BatchArgs {
    /// Input file of batch lines ("-" reads standard input)
    file: String,
    /// Pretty-print the JSON array
    #[arg(long)]
    pretty: bool,
}

enum CliError {
    Lib(almostsimple::Error),
    Input(String),
    Io(std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(almostsimple::Error::Internal(_)) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<almostsimple::Error> for CliError {
    fn from(e: almostsimple::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Prints help/version (exit 0) or the usage error (exit 2).
        Err(e) => e.exit(),
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify(args) => report_command(args, false),
        Command::Inspect(args) => report_command(args, true),
        Command::Centralize(args) => centralize_command(args),
        Command::Batch(args) => batch_command(args),
    }
}

fn parse_triple(args: &TripleArgs) -> Result<(TitsIndex, IsogenyTag, FieldContext), CliError> {
    let isogeny = args.isogeny.parse::<IsogenyTag>()?;
    let field = args.field.parse::<FieldContext>()?;
    let index = parse_index(&args.index)?;
    Ok((index, isogeny, field))
}

fn report_command(args: TripleArgs, inspect: bool) -> Result<(), CliError> {
    let (index, isogeny, field) = parse_triple(&args)?;
    let report = build_report(&index, isogeny, field)?;
    if args.json {
        println!("{}", report.to_json());
        return Ok(());
    }
    print!("{}", report.to_text());
    if inspect {
        let induced = centralizer_index(&index, &BTreeSet::new())?;
        println!("centralizer of a maximal split torus: {induced}");
        let descriptor = anisotropic_quotient_descriptor(&index, isogeny)?;
        println!("anisotropic quotient: {descriptor}");
        for note in &descriptor.notes {
            println!("  note: {note}");
        }
    }
    Ok(())
}

/// Parse a comma-separated vertex list; empty input is the empty list.
fn parse_vertex_list(text: &str) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let v: usize = piece
            .parse()
            .map_err(|_| CliError::Input(format!("not a vertex number: {piece:?}")))?;
        out.push(v);
    }
    Ok(out)
}

#[derive(Serialize)]
struct FactorJson {
    #[serde(rename = "type")]
    base_type: String,
    rank: usize,
    vertices: Vec<usize>,
    conjugates: usize,
    index: String,
    /// Pairs `[ambient label, component label]`.
    labels: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct CentralizeJson {
    index: String,
    keep: Vec<usize>,
    result: String,
    central_torus_rank: usize,
    dim: usize,
    factors: Vec<FactorJson>,
}

fn centralize_command(args: CentralizeArgs) -> Result<(), CliError> {
    let index = parse_index(&args.index)?;
    if let Some(roots) = &args.roots {
        return roots_command(&index, roots, args.json);
    }

    let names = parse_vertex_list(args.keep.as_deref().unwrap_or(""))?;
    let orbits = index.distinguished_orbits();
    let mut keep: BTreeSet<usize> = BTreeSet::new();
    for name in names {
        let orbit = orbits
            .iter()
            .find(|o| o.iter().copied().min() == Some(name))
            .ok_or_else(|| {
                CliError::Input(format!(
                    "--keep {name}: no distinguished orbit has least vertex {name}"
                ))
            })?;
        keep.extend(orbit.iter().copied());
    }
    let induced = centralizer_index(&index, &keep)?;

    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&centralize_json(&index, &keep, &induced))
                .expect("serialization cannot fail")
        );
        return Ok(());
    }

    println!("input:    {index}");
    let keep_text: Vec<String> = keep.iter().map(|v| v.to_string()).collect();
    println!("keep:     {{{}}}", keep_text.join(","));
    println!("result:   {induced}");
    for factor in &induced.factors {
        let vertices: Vec<String> = factor.component.vertices.iter().map(|v| v.to_string()).collect();
        let merged = if factor.conjugates > 1 {
            format!(" ({} components merged by the twisting action)", factor.conjugates)
        } else {
            String::new()
        };
        println!(
            "factor:   {}{} on ambient vertices {{{}}}{}, index {}",
            factor.component.base_type.letter(),
            factor.component.rank,
            vertices.join(","),
            merged,
            factor.index
        );
        let labels: Vec<String> = factor
            .component
            .to_bourbaki
            .iter()
            .enumerate()
            .map(|(role, ambient)| format!("{ambient}->{}", role + 1))
            .collect();
        println!("  labels: {}", labels.join(", "));
    }
    println!("central torus rank: {}", induced.central_torus_rank);
    println!("dim:      {}", induced.dimension());
    Ok(())
}

fn centralize_json(index: &TitsIndex, keep: &BTreeSet<usize>, induced: &InducedIndex) -> CentralizeJson {
    CentralizeJson {
        index: index.to_string(),
        keep: keep.iter().copied().collect(),
        result: induced.to_string(),
        central_torus_rank: induced.central_torus_rank,
        dim: induced.dimension(),
        factors: induced
            .factors
            .iter()
            .map(|factor| FactorJson {
                base_type: factor.component.base_type.letter().to_string(),
                rank: factor.component.rank,
                vertices: factor.component.vertices.clone(),
                conjugates: factor.conjugates,
                index: factor.index.to_string(),
                labels: factor
                    .component
                    .to_bourbaki
                    .iter()
                    .enumerate()
                    .map(|(role, &ambient)| [ambient, role + 1])
                    .collect(),
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct RootsJson {
    index: String,
    roots: Vec<usize>,
    torus_rank: usize,
    connected: bool,
    component_orders: Vec<String>,
    component_generators: Vec<String>,
    center_orders: Vec<String>,
    center_generators: Vec<String>,
    center_contained: bool,
}

fn roots_command(index: &TitsIndex, roots: &str, json: bool) -> Result<(), CliError> {
    let j: BTreeSet<usize> = parse_vertex_list(roots)?.into_iter().collect();
    let datum = index.datum();
    let torus = commuting_torus(datum, &j)?;
    let center = center_of_sc(datum, &j)?;
    let contained = center_contained(datum, &j)?;

    if json {
        let payload = RootsJson {
            index: index.to_string(),
            roots: j.iter().copied().collect(),
            torus_rank: torus.torus_rank,
            connected: torus.is_connected(),
            component_orders: torus.component_orders().iter().map(|o| o.to_string()).collect(),
            component_generators: torus
                .component_generators
                .iter()
                .map(|g| g.to_string())
                .collect(),
            center_orders: center.iter().map(|g| g.order().to_string()).collect(),
            center_generators: center.iter().map(|g| g.to_string()).collect(),
            center_contained: contained,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&payload).expect("serialization cannot fail")
        );
        return Ok(());
    }

    let root_text: Vec<String> = j.iter().map(|v| v.to_string()).collect();
    println!("diagram:  {}{}", index.base_type().letter(), index.rank());
    println!("roots J:  {{{}}}", root_text.join(","));
    if torus.is_connected() {
        println!("commuting torus: connected, rank {}", torus.torus_rank);
    } else {
        let orders: Vec<String> = torus.component_orders().iter().map(|o| o.to_string()).collect();
        println!(
            "commuting torus: rank {} with component group of invariant factors [{}]",
            torus.torus_rank,
            orders.join(",")
        );
        for generator in &torus.component_generators {
            println!("  component generator: {generator}");
        }
    }
    if center.is_empty() {
        println!("center of the simply connected subgroup on J: trivial");
    } else {
        for generator in &center {
            println!(
                "center generator (order {}): {}",
                generator.order(),
                generator
            );
        }
    }
    println!("center contained in the connected part: {contained}");
    Ok(())
}

fn batch_command(args: BatchArgs) -> Result<(), CliError> {
    let content = if args.file == "-" {
        let mut buffer = String::new();
        std::io::stdin().read_to_string(&mut buffer)?;
        buffer
    } else {
        std::fs::read_to_string(&args.file)?
    };
    let entries: Vec<BatchEntry> = content
        .lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| batch_entry(i + 1, line))
        .collect();
    let rendered = if args.pretty {
        serde_json::to_string_pretty(&entries)
    } else {
        serde_json::to_string(&entries)
    }
    .expect("serialization cannot fail");
    println!("{rendered}");
    Ok(())
}
