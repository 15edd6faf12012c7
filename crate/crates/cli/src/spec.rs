//! The group mini-language: `cyclic:12`, `dihedral:105`, `sym:8`,
//! `alt:5`, `psl2:7`, `product:cyclic:30,cyclic:6`, `c2c2p3:3`,
//! `cayley:path.tbl`, `perm:path.gens`, plus the graph targets
//! `delta:5` and `graph:path.txt`.

use std::fs;

use gengraph::families::{self, GroupInstance};
use gengraph::graph::Graph;
use gengraph::group::FiniteGroup;
use gengraph::GroupError;

use crate::error::{CliError, ExitCode};
use crate::formats;

/// What an analysis runs on: a group's generating graph or a plain graph.
#[derive(Debug)]
pub enum Target {
    Group(GroupInstance),
    Graph(Graph),
}

fn parse_usize(spec: &str, value: &str) -> Result<usize, CliError> {
    value.parse().map_err(|_| {
        CliError::new(
            ExitCode::Parse,
            format!("bad group spec `{spec}`: `{value}` is not a number"),
        )
    })
}

fn group_error(spec: &str, e: GroupError) -> CliError {
    let code = match e {
        GroupError::CapExceeded { .. } | GroupError::LatticeTooLarge { .. } => ExitCode::Cap,
        GroupError::Internal(_) => ExitCode::Internal,
        _ => ExitCode::Parse,
    };
    CliError::new(code, format!("group spec `{spec}`: {e}"))
}

fn read_file(spec: &str, path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| {
        CliError::new(
            ExitCode::Parse,
            format!("group spec `{spec}`: cannot read `{path}`: {e}"),
        )
    })
}

/// Builds a single (non-product) group factor as a table.
fn build_factor(spec: &str, factor: &str, cap_order: usize) -> Result<FiniteGroup, CliError> {
    match parse_target(factor, cap_order)? {
        Target::Group(instance) => instance
            .into_table(cap_order)
            .map_err(|e| group_error(spec, e)),
        Target::Graph(_) => Err(CliError::new(
            ExitCode::Parse,
            format!("bad group spec `{spec}`: `{factor}` is not a group"),
        )),
    }
}

pub fn parse_target(spec: &str, cap_order: usize) -> Result<Target, CliError> {
    let bad = || {
        CliError::new(
            ExitCode::Parse,
            format!(
                "bad group spec `{spec}`; expected kind:parameters with kind one of \
                 cyclic, dihedral, sym, alt, psl2, product, c2c2p3, cayley, perm, delta, graph"
            ),
        )
    };
    let (kind, rest) = spec.split_once(':').ok_or_else(bad)?;
    match kind {
        "cyclic" => {
            let n = parse_usize(spec, rest)?;
            if n == 0 {
                return Err(CliError::new(
                    ExitCode::Parse,
                    format!("bad group spec `{spec}`: order must be positive"),
                ));
            }
            if n > cap_order {
                return Err(CliError::new(
                    ExitCode::Cap,
                    format!("group spec `{spec}`: order {n} exceeds the cap {cap_order}"),
                ));
            }
            Ok(Target::Group(GroupInstance::Table(families::cyclic(n))))
        }
        "dihedral" => {
            let n = parse_usize(spec, rest)?;
            if 2 * n > cap_order {
                return Err(CliError::new(
                    ExitCode::Cap,
                    format!(
                        "group spec `{spec}`: order {} exceeds the cap {cap_order}",
                        2 * n
                    ),
                ));
            }
            let group = families::dihedral(n).map_err(|e| group_error(spec, e))?;
            Ok(Target::Group(GroupInstance::Table(group)))
        }
        "sym" => {
            let n = parse_usize(spec, rest)?;
            let instance = families::symmetric(n).map_err(|e| group_error(spec, e))?;
            Ok(Target::Group(instance))
        }
        "alt" => {
            let n = parse_usize(spec, rest)?;
            let instance = families::alternating(n).map_err(|e| group_error(spec, e))?;
            Ok(Target::Group(instance))
        }
        "psl2" => {
            let q = parse_usize(spec, rest)?;
            let group = families::psl2(q).map_err(|e| group_error(spec, e))?;
            Ok(Target::Group(GroupInstance::Perm(group)))
        }
        "product" => {
            let factors: Vec<&str> = rest.split(',').collect();
            if factors.len() < 2 {
                return Err(CliError::new(
                    ExitCode::Parse,
                    format!("bad group spec `{spec}`: product needs at least two factors"),
                ));
            }
            let mut product = build_factor(spec, factors[0], cap_order)?;
            for factor in &factors[1..] {
                let next = build_factor(spec, factor, cap_order)?;
                product = FiniteGroup::direct_product(&product, &next, cap_order)
                    .map_err(|e| group_error(spec, e))?;
            }
            Ok(Target::Group(GroupInstance::Table(product)))
        }
        "c2c2p3" => {
            let p = parse_usize(spec, rest)?;
            let (group, _) = families::c2c2_p3(p).map_err(|e| group_error(spec, e))?;
            Ok(Target::Group(GroupInstance::Table(group)))
        }
        "cayley" => {
            let text = read_file(spec, rest)?;
            let group = formats::parse_cayley_table(&text)
                .map_err(|e| CliError::new(ExitCode::Parse, format!("{rest}: {e}")))?;
            Ok(Target::Group(GroupInstance::Table(group)))
        }
        "perm" => {
            let text = read_file(spec, rest)?;
            let group = formats::parse_perm_file(&text)
                .map_err(|e| CliError::new(ExitCode::Parse, format!("{rest}: {e}")))?;
            Ok(Target::Group(GroupInstance::Perm(group)))
        }
        "delta" => {
            let n = parse_usize(spec, rest)?;
            let graph = families::delta_graph(n).map_err(|e| group_error(spec, e))?;
            Ok(Target::Graph(graph))
        }
        "graph" => {
            let text = read_file(spec, rest)?;
            let graph = formats::parse_graph_file(&text)
                .map_err(|e| CliError::new(ExitCode::Parse, format!("{rest}: {e}")))?;
            Ok(Target::Graph(graph))
        }
        _ => Err(bad()),
    }
}
