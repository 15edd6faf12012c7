//! Family sweeps: one CSV row per instance, errors recorded per row.

use std::time::Instant;

use gengraph::families;
use gengraph::gengraph::{analyze, AnalysisOptions, GammaAnalysis};
use gengraph::group::FiniteGroup;

use crate::error::{CliError, ExitCode};
use crate::report;

pub enum Family {
    Cyclic,
    Dihedral,
    Builtin,
}

pub struct SweepConfig {
    pub family: Family,
    /// Inclusive parameter range for cyclic/dihedral.
    pub range: Option<(usize, usize)>,
    /// Order bound for the builtin catalogue.
    pub max_order: Option<usize>,
    pub options: AnalysisOptions,
    pub cap_order: usize,
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn witness_summary(
    analysis: &GammaAnalysis,
    name_of: &dyn Fn(usize) -> String,
) -> Vec<(String, String, String)> {
    use gengraph::props::{
        C4Verdict, ChordalVerdict, CographVerdict, SplitObstruction, SplitVerdict,
    };
    let mut out = Vec::new();
    if let Some(outcome) = &analysis.perfect {
        let verdict = report::perfect_status_string(&outcome.verdict.status);
        let witness = match &outcome.witness_elements {
            Some(hole) => {
                let names: Vec<String> = hole.vertices.iter().map(|&v| name_of(v)).collect();
                format!(
                    "{}({}): {}",
                    match hole.kind {
                        gengraph::props::HoleKind::Hole => "hole",
                        gengraph::props::HoleKind::Antihole => "antihole",
                    },
                    hole.vertices.len(),
                    names.join(" ")
                )
            }
            None => String::new(),
        };
        out.push(("perfect".into(), verdict, witness));
    }
    if let Some(verdict) = &analysis.cograph {
        let witness = match verdict {
            CographVerdict::Cograph(_) => String::new(),
            CographVerdict::NotCograph { p4 } => {
                let names: Vec<String> = p4.vertices.iter().map(|&v| name_of(v)).collect();
                format!("p4: {}", names.join(" "))
            }
        };
        out.push(("cograph".into(), verdict.is_cograph().to_string(), witness));
    }
    if let Some(verdict) = &analysis.chordal {
        let witness = match verdict {
            ChordalVerdict::Chordal { .. } => String::new(),
            ChordalVerdict::NotChordal { cycle } => {
                let names: Vec<String> = cycle.iter().map(|&v| name_of(v)).collect();
                format!("cycle({}): {}", cycle.len(), names.join(" "))
            }
        };
        out.push(("chordal".into(), verdict.is_chordal().to_string(), witness));
    }
    if let Some(verdict) = &analysis.split {
        let witness = match verdict {
            SplitVerdict::Split { .. } => String::new(),
            SplitVerdict::NotSplit(obstruction) => {
                let (kind, vertices): (&str, Vec<usize>) = match obstruction {
                    SplitObstruction::C4(v) => ("c4", v.to_vec()),
                    SplitObstruction::C5(v) => ("c5", v.to_vec()),
                    SplitObstruction::TwoK2(v) => ("2k2", v.to_vec()),
                };
                let names: Vec<String> = vertices.iter().map(|&v| name_of(v)).collect();
                format!("{kind}: {}", names.join(" "))
            }
        };
        out.push(("split".into(), verdict.is_split().to_string(), witness));
    }
    if let Some(verdict) = &analysis.c4_free {
        let witness = match verdict {
            C4Verdict::Free => String::new(),
            C4Verdict::Witness(cycle) => {
                let names: Vec<String> = cycle.iter().map(|&v| name_of(v)).collect();
                format!("c4: {}", names.join(" "))
            }
        };
        out.push(("c4free".into(), verdict.is_free().to_string(), witness));
    }
    out
}

fn prop_names(options: &AnalysisOptions) -> Vec<&'static str> {
    let mut names = Vec::new();
    if options.perfect {
        names.push("perfect");
    }
    if options.cograph {
        names.push("cograph");
    }
    if options.chordal {
        names.push("chordal");
    }
    if options.split {
        names.push("split");
    }
    if options.c4_free {
        names.push("c4free");
    }
    names
}

/// One sweep row source: built if it fits the order cap, otherwise
/// just its order for the error row. Groups are never materialized
/// past the cap.
enum Instance {
    Ready(FiniteGroup),
    TooBig { order: usize },
}

fn instances(config: &SweepConfig) -> Result<Vec<(String, Instance)>, CliError> {
    let cap = config.cap_order;
    let guarded = |order: usize, build: &dyn Fn() -> FiniteGroup| -> Instance {
        if order > cap {
            Instance::TooBig { order }
        } else {
            Instance::Ready(build())
        }
    };
    match config.family {
        Family::Cyclic => {
            let (lo, hi) = config
                .range
                .ok_or_else(|| CliError::new(ExitCode::Parse, "cyclic sweep needs --range"))?;
            Ok((lo.max(1)..=hi)
                .map(|n| (format!("cyclic:{n}"), guarded(n, &|| families::cyclic(n))))
                .collect())
        }
        Family::Dihedral => {
            let (lo, hi) = config
                .range
                .ok_or_else(|| CliError::new(ExitCode::Parse, "dihedral sweep needs --range"))?;
            Ok((lo.max(3)..=hi)
                .map(|n| {
                    let instance = guarded(2 * n, &|| families::dihedral(n).expect("degree >= 3"));
                    (format!("dihedral:{n}"), instance)
                })
                .collect())
        }
        Family::Builtin => {
            let max = config
                .max_order
                .ok_or_else(|| CliError::new(ExitCode::Parse, "builtin sweep needs --max-order"))?;
            Ok(families::builtin_groups(max.min(cap))
                .into_iter()
                .map(|(spec, group)| (spec, Instance::Ready(group)))
                .collect())
        }
    }
}

/// Materialized sweep: group instances under the order cap, analyzed
/// one by one. Output ordering follows the instance catalogue, not
/// completion order.
pub fn run(config: &SweepConfig) -> Result<String, CliError> {
    let props = prop_names(&config.options);
    let mut header = vec![
        "group".to_string(),
        "order".into(),
        "two_generated".into(),
        "reduced_vertices".into(),
    ];
    for p in &props {
        header.push((*p).to_string());
        header.push(format!("{p}_witness"));
    }
    header.push("elapsed_ms".into());
    header.push("error".into());
    let width = header.len();
    let mut csv = header.join(",");
    csv.push('\n');
    for (spec, instance) in instances(config)? {
        let start = Instant::now();
        let group = match instance {
            Instance::Ready(group) => group,
            Instance::TooBig { order } => {
                let mut fields: Vec<String> = vec![spec.clone(), order.to_string()];
                fields.resize(width - 1, String::new());
                fields.push("order exceeds cap".into());
                let encoded: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
                csv.push_str(&encoded.join(","));
                csv.push('\n');
                continue;
            }
        };
        let mut fields: Vec<String> = vec![spec.clone(), group.order().to_string()];
        {
            let analysis = analyze(&group, &config.options);
            let name_of = |v: usize| group.name(v).to_string();
            let results = witness_summary(&analysis, &name_of);
            fields.push(analysis.two_generated.to_string());
            fields.push(
                analysis
                    .perfect
                    .as_ref()
                    .map(|p| p.reduced_vertices.to_string())
                    .unwrap_or_default(),
            );
            for name in &props {
                match results.iter().find(|(p, _, _)| p == name) {
                    Some((_, verdict, witness)) => {
                        fields.push(verdict.clone());
                        fields.push(witness.clone());
                    }
                    None => {
                        fields.push(String::new());
                        fields.push(String::new());
                    }
                }
            }
            fields.push(start.elapsed().as_millis().to_string());
            fields.push(String::new());
        }
        debug_assert_eq!(fields.len(), width);
        let encoded: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
        csv.push_str(&encoded.join(","));
        csv.push('\n');
    }
    Ok(csv)
}
