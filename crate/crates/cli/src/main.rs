//! Batch front door: parse group specs, run analyses, emit reports.
//!
//! Exit codes: 0 ok, 2 parse error, 3 cap exceeded, 4 certificate
//! violation in verify mode, 5 internal error.

mod dot;
mod error;
mod formats;
mod report;
mod spec;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode as ProcessExit;

use clap::{Parser, Subcommand};

use gengraph::families::bundles::builtin_bundles;
use gengraph::gengraph::{analyze, generating_graph, twin_reduction, AnalysisOptions, HolePolicy};
use gengraph::graph::Graph;
use gengraph::props::{self, HoleLimit};

use error::{CliError, ExitCode};
use report::{JsonReport, PropertiesInfo};
use spec::Target;

#[derive(Parser)]
#[command(
    name = "gengraph",
    version,
    about = "Generating graphs of finite groups: construction, certificates, forbidden-subgraph analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group or graph and emit a JSON report.
    Analyze {
        /// Target, e.g. cyclic:12, dihedral:105, sym:4, psl2:7,
        /// product:cyclic:30,cyclic:6, c2c2p3:3, cayley:FILE,
        /// perm:FILE, delta:5, graph:FILE
        #[arg(long)]
        group: String,
        /// Comma list from: cograph, perfect, chordal, split, c4free
        #[arg(long, default_value = "cograph,perfect,chordal,split,c4free")]
        props: String,
        /// Odd bound >= 5, `full`, or `auto:FULLCAP,BOUND`
        #[arg(long, default_value = "15")]
        hole_limit: String,
        /// Write the JSON report here instead of stdout
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write a DOT rendering of the graph here
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write a JSON adjacency export (vertex array + edge list) here
        #[arg(long)]
        adjacency: Option<PathBuf>,
        #[arg(long, default_value_t = gengraph::DEFAULT_ORDER_CAP)]
        cap_order: usize,
        #[arg(long, default_value_t = gengraph::DEFAULT_LATTICE_CAP)]
        cap_lattice: usize,
    },
    /// Run every built-in certificate bundle through verification.
    Verify {
        /// Check a single bundle by name (e.g. psl2:11)
        #[arg(long)]
        bundle: Option<String>,
    },
    /// Tabulate verdicts over a family as CSV.
    Sweep {
        /// cyclic, dihedral, or builtin
        #[arg(long)]
        family: String,
        /// Inclusive parameter range A..B for cyclic/dihedral
        #[arg(long)]
        range: Option<String>,
        /// Order bound for the builtin catalogue
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long, default_value = "perfect")]
        props: String,
        #[arg(long, default_value = "auto:20,9")]
        hole_limit: String,
        /// Write CSV here instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = gengraph::DEFAULT_ORDER_CAP)]
        cap_order: usize,
        #[arg(long, default_value_t = gengraph::DEFAULT_LATTICE_CAP)]
        cap_lattice: usize,
    },
}

struct PropSet {
    cograph: bool,
    perfect: bool,
    chordal: bool,
    split: bool,
    c4_free: bool,
}

fn parse_props(list: &str) -> Result<PropSet, CliError> {
    let mut set = PropSet {
        cograph: false,
        perfect: false,
        chordal: false,
        split: false,
        c4_free: false,
    };
    for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item {
            "cograph" => set.cograph = true,
            "perfect" => set.perfect = true,
            "chordal" => set.chordal = true,
            "split" => set.split = true,
            "c4free" | "c4-free" => set.c4_free = true,
            other => {
                return Err(CliError::new(
                    ExitCode::Parse,
                    format!("unknown property `{other}`"),
                ))
            }
        }
    }
    Ok(set)
}

fn parse_hole_policy(text: &str) -> Result<HolePolicy, CliError> {
    if text == "full" {
        return Ok(HolePolicy::Fixed(HoleLimit::Full));
    }
    if let Some(rest) = text.strip_prefix("auto:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if parts.len() == 2 {
            if let (Ok(full_cap), Ok(bounded)) = (parts[0].parse(), parts[1].parse::<usize>()) {
                if bounded >= 5 && bounded % 2 == 1 {
                    return Ok(HolePolicy::Auto { full_cap, bounded });
                }
            }
        }
        return Err(CliError::new(
            ExitCode::Parse,
            format!("bad hole limit `{text}`: expected auto:FULLCAP,ODDBOUND"),
        ));
    }
    match text.parse::<usize>() {
        Ok(bound) if bound >= 5 && bound % 2 == 1 => {
            Ok(HolePolicy::Fixed(HoleLimit::Bounded(bound)))
        }
        _ => Err(CliError::new(
            ExitCode::Parse,
            format!("bad hole limit `{text}`: expected an odd number >= 5, `full`, or auto:A,B"),
        )),
    }
}

fn write_or_print(path: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_analyze(
    group_spec: &str,
    props: &str,
    hole_limit: &str,
    json: &Option<PathBuf>,
    dot_path: &Option<PathBuf>,
    adjacency_path: &Option<PathBuf>,
    cap_order: usize,
    cap_lattice: usize,
) -> Result<(), CliError> {
    let set = parse_props(props)?;
    let policy = parse_hole_policy(hole_limit)?;
    let target = spec::parse_target(group_spec, cap_order)?;
    let options = AnalysisOptions {
        perfect: set.perfect,
        cograph: set.cograph,
        chordal: set.chordal,
        split: set.split,
        c4_free: set.c4_free,
        hole_policy: policy,
        lattice_cap: cap_lattice,
    };
    let want_graph = dot_path.is_some() || adjacency_path.is_some();
    let (rendered_report, exported_graph) = match target {
        Target::Group(instance) => {
            let table = instance.into_table(cap_order).map_err(|e| {
                CliError::new(ExitCode::Cap, format!("group spec `{group_spec}`: {e}"))
            })?;
            let analysis = analyze(&table, &options);
            let name_of = |v: usize| table.name(v).to_string();
            let report = report::group_report(group_spec, &analysis, &name_of);
            let graph = want_graph.then(|| generating_graph(&table).graph);
            (report, graph)
        }
        Target::Graph(graph) => {
            let report = graph_report(group_spec, &graph, &options);
            let for_export = want_graph.then(|| graph.clone());
            (report, for_export)
        }
    };
    let rendered = serde_json::to_string_pretty(&rendered_report)
        .map_err(|e| CliError::internal(format!("report serialization: {e}")))?;
    write_or_print(json, &rendered)?;
    if let (Some(path), Some(graph)) = (dot_path, &exported_graph) {
        let dot_text = dot::graph_to_dot(graph, "gamma");
        std::fs::write(path, dot_text)
            .map_err(|e| CliError::internal(format!("cannot write {}: {e}", path.display())))?;
    }
    if let (Some(path), Some(graph)) = (adjacency_path, &exported_graph) {
        let adjacency = serde_json::to_string_pretty(&report::adjacency_json(graph))
            .map_err(|e| CliError::internal(format!("adjacency serialization: {e}")))?;
        std::fs::write(path, adjacency)
            .map_err(|e| CliError::internal(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

/// Analysis of a plain graph target: perfection searches run on the
/// twin-reduced graph, everything else on the graph as given.
fn graph_report(spec_str: &str, graph: &Graph, options: &AnalysisOptions) -> JsonReport {
    let name_of = report::graph_labeller(graph);
    let mut properties = PropertiesInfo::default();
    let mut reduced_vertices = None;
    if options.perfect {
        let (reduced, kept) = twin_reduction(graph);
        let limit = match options.hole_policy {
            HolePolicy::Fixed(limit) => limit,
            HolePolicy::Auto { full_cap, bounded } => {
                if reduced.vertex_count() <= full_cap {
                    HoleLimit::Full
                } else {
                    HoleLimit::Bounded(bounded)
                }
            }
        };
        let verdict = props::perfect_verdict(&reduced, limit);
        let witness_vertices = verdict
            .witness
            .as_ref()
            .map(|h| h.vertices.iter().map(|&v| kept[v]).collect::<Vec<_>>());
        properties.perfect = Some(report::perfect_json(
            &verdict,
            witness_vertices.as_deref(),
            &name_of,
        ));
        reduced_vertices = Some(reduced.vertex_count());
    }
    if options.cograph {
        properties.cograph = Some(report::cograph_json(&props::is_cograph(graph), &name_of));
    }
    if options.chordal {
        properties.chordal = Some(report::chordal_json(&props::is_chordal(graph), &name_of));
    }
    if options.split {
        properties.split = Some(report::split_json(&props::is_split(graph), &name_of));
    }
    if options.c4_free {
        properties.c4_free = Some(report::c4_json(&props::is_c4_free(graph), &name_of));
    }
    JsonReport {
        schema: report::SCHEMA_VERSION,
        target: report::TargetInfo {
            kind: if spec_str.starts_with("delta:") {
                "delta".into()
            } else {
                "graph".into()
            },
            spec: spec_str.into(),
        },
        group: None,
        graph: report::GraphInfo {
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            isolated: graph.isolated_vertices().len(),
            reduced_vertices,
        },
        properties,
    }
}

fn cmd_verify(filter: &Option<String>) -> Result<ProcessExit, CliError> {
    let bundles =
        builtin_bundles().map_err(|e| CliError::internal(format!("bundle construction: {e}")))?;
    let selected: Vec<_> = match filter {
        Some(name) => {
            let matching: Vec<_> = bundles.into_iter().filter(|b| &b.name == name).collect();
            if matching.is_empty() {
                return Err(CliError::new(
                    ExitCode::Parse,
                    format!("unknown bundle `{name}`; run `verify` without --bundle for the list"),
                ));
            }
            matching
        }
        None => bundles,
    };
    let mut failures = 0;
    for bundle in &selected {
        match bundle.verify() {
            Ok(()) => println!("PASS {} — {}", bundle.name, bundle.description),
            Err(failure) => {
                failures += 1;
                println!("FAIL {} — {failure}", bundle.name);
            }
        }
    }
    if failures > 0 {
        Ok(ProcessExit::from(ExitCode::Violation as u8))
    } else {
        Ok(ProcessExit::SUCCESS)
    }
}

fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let parts: Vec<&str> = text.split("..").collect();
    if parts.len() == 2 {
        if let (Ok(lo), Ok(hi)) = (parts[0].parse(), parts[1].parse()) {
            return Ok((lo, hi));
        }
    }
    Err(CliError::new(
        ExitCode::Parse,
        format!("bad range `{text}`: expected A..B (inclusive)"),
    ))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    family: &str,
    range: &Option<String>,
    max_order: &Option<usize>,
    props: &str,
    hole_limit: &str,
    csv_path: &Option<PathBuf>,
    cap_order: usize,
    cap_lattice: usize,
) -> Result<(), CliError> {
    let set = parse_props(props)?;
    let policy = parse_hole_policy(hole_limit)?;
    let family = match family {
        "cyclic" => sweep::Family::Cyclic,
        "dihedral" => sweep::Family::Dihedral,
        "builtin" => sweep::Family::Builtin,
        other => {
            return Err(CliError::new(
                ExitCode::Parse,
                format!("unknown family `{other}`; expected cyclic, dihedral or builtin"),
            ))
        }
    };
    let config = sweep::SweepConfig {
        family,
        range: range.as_deref().map(parse_range).transpose()?,
        max_order: *max_order,
        options: AnalysisOptions {
            perfect: set.perfect,
            cograph: set.cograph,
            chordal: set.chordal,
            split: set.split,
            c4_free: set.c4_free,
            hole_policy: policy,
            lattice_cap: cap_lattice,
        },
        cap_order,
    };
    let csv = sweep::run(&config)?;
    match csv_path {
        Some(path) => std::fs::write(path, csv)
            .map_err(|e| CliError::internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn main() -> ProcessExit {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Analyze {
            group,
            props,
            hole_limit,
            json,
            dot,
            adjacency,
            cap_order,
            cap_lattice,
        } => cmd_analyze(
            group,
            props,
            hole_limit,
            json,
            dot,
            adjacency,
            *cap_order,
            *cap_lattice,
        )
        .map(|()| ProcessExit::SUCCESS),
        Command::Verify { bundle } => cmd_verify(bundle),
        Command::Sweep {
            family,
            range,
            max_order,
            props,
            hole_limit,
            csv,
            cap_order,
            cap_lattice,
        } => cmd_sweep(
            family,
            range,
            max_order,
            props,
            hole_limit,
            csv,
            *cap_order,
            *cap_lattice,
        )
        .map(|()| ProcessExit::SUCCESS),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ProcessExit::from(e.code as u8)
        }
    }
}
