//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on a domain error, 2 on malformed input.
//! Subgroups are given as `-g` words (repeatable, comma lists allowed) or
//! as a core file with `--core`; the two-subgroup commands take `--A` and
//! `--B`, each a comma list or `@path` to a core file.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::covering::{check_covering, universal_ball, GraphMorphism};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hn::{excise_and_profile, hn_profile, shn_report, write_csv, HNProfile};
use crate::lattice::{component_report, double_coset_tags, intersect, join, pullback};
use crate::subgroup::LabeledCore;
use crate::word::Word;

#[derive(Parser, Debug)]
#[command(name = "stallings", version, about = "Stallings cores, coverings and intersection bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Args, Debug)]
struct SubgroupArgs {
    /// Rank of the ambient free group.
    #[arg(short = 'r', long, default_value_t = 2)]
    rank: usize,
    /// Generator word; repeat or use commas.
    #[arg(short = 'g', long = "gen")]
    gens: Vec<String>,
    /// Read the subgroup from a core file instead.
    #[arg(long, conflicts_with = "gens")]
    core: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(short = 'r', long, default_value_t = 2)]
    rank: usize,
    /// First subgroup: comma list of words or @core-file.
    #[arg(long = "A")]
    a: String,
    /// Second subgroup: comma list of words or @core-file.
    #[arg(long = "B")]
    b: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fold the generators and print the canonical core.
    Core(SubgroupArgs),
    /// Rank of a subgroup, or of a connected graph file.
    Rank {
        #[command(flatten)]
        sub: SubgroupArgs,
        #[arg(long, conflicts_with_all = ["gens", "core"])]
        graph: Option<PathBuf>,
    },
    /// Index of a subgroup.
    Index(SubgroupArgs),
    /// Membership of words in a subgroup.
    Member {
        #[command(flatten)]
        sub: SubgroupArgs,
        #[arg(short = 'w', long = "word", required = true)]
        words: Vec<String>,
    },
    /// Free basis from a spanning tree of the core.
    Basis(SubgroupArgs),
    /// Core of the intersection.
    Intersect(PairArgs),
    /// Core of the subgroup generated by both.
    Join(PairArgs),
    /// Pullback components with double coset representatives.
    Cosets(PairArgs),
    /// Finite-index completion avoiding the given words.
    Complete {
        #[command(flatten)]
        sub: SubgroupArgs,
        /// Comma list of words to keep out of the completion.
        #[arg(long, default_value = "")]
        avoid: String,
    },
    /// Whether the subgroup is normal.
    Galois(SubgroupArgs),
    /// Deck group of a complete core.
    Deck(SubgroupArgs),
    /// Intermediate coverings of a Galois core.
    Lattice {
        #[command(flatten)]
        sub: SubgroupArgs,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run and checker profile of a rank-two core.
    HnProfile(SubgroupArgs),
    /// Rank bound report for a pair of rank-two subgroups.
    HnBound {
        #[command(flatten)]
        pair: PairArgs,
        /// Emit the CSV comparison row instead.
        #[arg(long)]
        csv: bool,
    },
    /// Profile of the core obtained by collapsing a spanning tree.
    Excise {
        /// Morphism file describing the covering.
        morphism: PathBuf,
        /// Basepoint of the covering space.
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
    /// Ball in the universal cover of a graph.
    Ball {
        graph: PathBuf,
        #[arg(short = 'v', long, default_value_t = 0)]
        vertex: usize,
        #[arg(long, default_value_t = 2)]
        radius: usize,
    },
    /// Export a core or graph.
    Export {
        #[command(flatten)]
        sub: SubgroupArgs,
        #[arg(long, conflicts_with_all = ["gens", "core"])]
        graph: Option<PathBuf>,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
    },
}

/// Text form plus structured records of one command's result.
struct Output {
    text: String,
    records: Vec<Value>,
}

impl Output {
    fn single(text: impl Into<String>, record: Value) -> Self {
        let mut text = text.into();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Self {
            text,
            records: vec![record],
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::parse(0, format!("{}: {e}", path.display())))
}

fn parse_words(list: &str) -> Result<Vec<Word>> {
    Word::parse_list(list)
}

fn load_subgroup(args: &SubgroupArgs) -> Result<LabeledCore> {
    if let Some(path) = &args.core {
        return read_file(path)?.parse();
    }
    let mut gens = Vec::new();
    for g in &args.gens {
        gens.extend(parse_words(g)?);
    }
    LabeledCore::from_words(args.rank, &gens)
}

fn load_spec(rank: usize, spec: &str) -> Result<LabeledCore> {
    match spec.strip_prefix('@') {
        Some(path) => read_file(&PathBuf::from(path))?.parse(),
        None => LabeledCore::from_words(rank, &parse_words(spec)?),
    }
}

fn load_pair(p: &PairArgs) -> Result<(LabeledCore, LabeledCore)> {
    Ok((load_spec(p.rank, &p.a)?, load_spec(p.rank, &p.b)?))
}

fn core_output(c: &LabeledCore) -> Output {
    Output::single(
        c.to_string(),
        json!({
            "rank": c.ambient_rank(),
            "vertices": c.n_vertices(),
            "edges": c.edges().iter().map(|(v, l, w)| json!([v, l.to_string(), w])).collect::<Vec<_>>(),
        }),
    )
}

fn profile_output(p: &HNProfile) -> Output {
    Output::single(
        format!(
            "H={} n1={} n2={} rank={} checkers={}",
            p.h,
            p.n[0],
            p.n[1],
            p.rank,
            p.checker_count()
        ),
        serde_json::to_value(p).expect("profile serializes"),
    )
}

fn execute(command: &Command) -> Result<Output> {
    Ok(match command {
        Command::Core(sub) => core_output(&load_subgroup(sub)?),
        Command::Rank { sub, graph } => {
            let rank = match graph {
                Some(path) => read_file(path)?.parse::<Graph>()?.rank()?,
                None => load_subgroup(sub)?.rank(),
            };
            Output::single(rank.to_string(), json!({ "rank": rank }))
        }
        Command::Index(sub) => {
            let index = load_subgroup(sub)?.index();
            Output::single(index.to_string(), json!({ "index": index.to_string() }))
        }
        Command::Member { sub, words } => {
            let c = load_subgroup(sub)?;
            let mut text = String::new();
            let mut records = Vec::new();
            for w in words {
                let word: Word = w.parse()?;
                let member = c.contains(&word)?;
                text.push_str(&format!("{member}\n"));
                records.push(json!({ "word": word.to_string(), "member": member }));
            }
            Output { text, records }
        }
        Command::Basis(sub) => {
            let basis = load_subgroup(sub)?.schreier_basis();
            let text: String = basis.iter().map(|w| format!("{w}\n")).collect();
            Output {
                text,
                records: vec![json!({ "basis": basis })],
            }
        }
        Command::Intersect(p) => {
            let (a, b) = load_pair(p)?;
            core_output(&intersect(&a, &b)?)
        }
        Command::Join(p) => {
            let (a, b) = load_pair(p)?;
            core_output(&join(&a, &b)?)
        }
        Command::Cosets(p) => {
            let (a, b) = load_pair(p)?;
            let res = pullback(&a, &b)?;
            let tags = double_coset_tags(&res, &a, &b)?;
            let records = res
                .components
                .iter()
                .map(|c| {
                    let g = tags.iter().find(|t| t.component == c.id).map(|t| t.g.to_string());
                    json!({ "component": c.id, "rank": c.rank, "tree": c.is_tree, "pointed": c.is_pointed, "g": g })
                })
                .collect();
            Output {
                text: component_report(&res, &tags),
                records,
            }
        }
        Command::Complete { sub, avoid } => {
            let c = load_subgroup(sub)?;
            core_output(&c.hall_complete(&parse_words(avoid)?)?)
        }
        Command::Galois(sub) => {
            let galois = load_subgroup(sub)?.is_galois()?;
            Output::single(galois.to_string(), json!({ "galois": galois }))
        }
        Command::Deck(sub) => {
            let deck = load_subgroup(sub)?.deck_group()?;
            let mut text = format!("order={}\n", deck.order());
            for (i, e) in deck.elements().iter().enumerate() {
                let perm: Vec<String> = e.iter().map(usize::to_string).collect();
                text.push_str(&format!("element {i} {}\n", perm.join(" ")));
            }
            Output {
                text,
                records: vec![json!({ "order": deck.order(), "elements": deck.elements() })],
            }
        }
        Command::Lattice { sub, jobs } => {
            let lat = load_subgroup(sub)?.intermediate_lattice(*jobs)?;
            let mut text = format!("classes={}\n", lat.len());
            let mut records = Vec::new();
            for (i, c) in lat.classes().iter().enumerate() {
                let below: Vec<usize> = (0..lat.len()).filter(|&j| j != i && lat.le(j, i)).collect();
                let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                text.push_str(&format!(
                    "class {i} degree={} subgroup={{{}}} covers={{{}}}\n",
                    c.degree,
                    list(&c.subgroup),
                    list(&below)
                ));
                records.push(json!({
                    "class": i, "degree": c.degree, "subgroup": c.subgroup, "covers": below,
                    "core": c.core.to_string(),
                }));
            }
            Output { text, records }
        }
        Command::HnProfile(sub) => profile_output(&hn_profile(&load_subgroup(sub)?)?),
        Command::HnBound { pair, csv } => {
            let (a, b) = load_pair(pair)?;
            let report = shn_report(&a, &b)?;
            let record = serde_json::to_value(&report).expect("report serializes");
            let text = if *csv {
                let mut buf = Vec::new();
                write_csv(&[report.row()], &mut buf).map_err(|e| Error::InvalidCore(e.to_string()))?;
                String::from_utf8(buf).expect("csv is utf-8")
            } else {
                report.to_string()
            };
            Output {
                text,
                records: vec![record],
            }
        }
        Command::Excise { morphism, base } => {
            let m: GraphMorphism = read_file(morphism)?.parse()?;
            let v = m.vertex(*base);
            let c = check_covering(m, *base, v).map_err(Error::NotCovering)?;
            profile_output(&excise_and_profile(&c)?)
        }
        Command::Ball {
            graph,
            vertex,
            radius,
        } => {
            let g: Graph = read_file(graph)?.parse()?;
            let ball = universal_ball(&g, *vertex, *radius)?;
            let boundary: Vec<String> = ball.boundary.iter().map(usize::to_string).collect();
            let text = format!("{}boundary {}\n", ball.graph, boundary.join(" "));
            Output::single(
                text,
                json!({
                    "vertices": ball.graph.n_vertices(),
                    "arcs": ball.graph.n_arcs(),
                    "boundary": ball.boundary,
                }),
            )
        }
        Command::Export { sub, graph, dot } => {
            let text = match (graph, dot) {
                (Some(path), true) => read_file(path)?.parse::<Graph>()?.to_dot(),
                (Some(path), false) => read_file(path)?.parse::<Graph>()?.to_string(),
                (None, true) => load_subgroup(sub)?.to_dot(),
                (None, false) => load_subgroup(sub)?.to_string(),
            };
            Output::single(text.clone(), json!({ "text": text }))
        }
    })
}

fn emit(out: &Output, format: Format, sink: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Text => sink.write_all(out.text.as_bytes()),
        Format::JsonLines => {
            for r in &out.records {
                writeln!(sink, "{r}")?;
            }
            Ok(())
        }
    }
}

/// Runs the tool on `argv` (program name first), writing results to
/// `stdout` and one-line diagnostics to `stderr`. Returns the exit code.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(stdout, "{}", e.render());
                    if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        2
                    } else {
                        0
                    }
                }
                _ => {
                    let rendered = e.render().to_string();
                    let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("error");
                    let _ = writeln!(stderr, "{line}");
                    2
                }
            };
        }
    };
    let result = execute(&cli.command);
    let out = match result {
        Ok(out) => out,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return if e.is_parse() { 2 } else { 1 };
        }
    };
    let written = match &cli.output {
        Some(path) => fs::File::create(path).and_then(|mut f| emit(&out, cli.format, &mut f)),
        None => emit(&out, cli.format, stdout),
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

/// [`run_with`] on the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut io::stdout().lock(), &mut io::stderr().lock())
}
