//! The versioned JSON report. Field order is fixed by declaration and
//! certificates carry element names, so identical runs produce
//! byte-identical output.

use serde::Serialize;

use gengraph::gengraph::GammaAnalysis;
use gengraph::graph::Graph;
use gengraph::props::{
    C4Verdict, ChordalVerdict, CographVerdict, HoleKind, PerfectStatus, PerfectVerdict,
    SplitObstruction, SplitVerdict,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Debug)]
pub struct JsonReport {
    pub schema: u32,
    pub target: TargetInfo,
    pub group: Option<GroupInfo>,
    pub graph: GraphInfo,
    pub properties: PropertiesInfo,
}

#[derive(Serialize, Debug)]
pub struct TargetInfo {
    pub kind: String,
    pub spec: String,
}

#[derive(Serialize, Debug)]
pub struct GroupInfo {
    pub order: usize,
    pub nilpotent: bool,
    pub soluble: bool,
    pub cyclic: bool,
    pub two_generated: bool,
    pub frattini: Option<FrattiniJson>,
}

#[derive(Serialize, Debug)]
pub struct FrattiniJson {
    pub order: usize,
    pub index: usize,
    pub index_prime_signature: Vec<u64>,
}

#[derive(Serialize, Debug)]
pub struct GraphInfo {
    pub vertices: usize,
    pub edges: usize,
    pub isolated: usize,
    pub reduced_vertices: Option<usize>,
}

#[derive(Serialize, Debug, Default)]
pub struct PropertiesInfo {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect: Option<PerfectJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cograph: Option<CographJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chordal: Option<ChordalJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c4_free: Option<C4Json>,
}

#[derive(Serialize, Debug)]
pub struct PerfectJson {
    pub status: String,
    pub search_limit: usize,
    pub witness: Option<WitnessJson>,
}

#[derive(Serialize, Debug)]
pub struct WitnessJson {
    pub kind: String,
    pub length: usize,
    pub vertices: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct CographJson {
    pub is_cograph: bool,
    pub p4: Option<Vec<String>>,
}

#[derive(Serialize, Debug)]
pub struct ChordalJson {
    pub is_chordal: bool,
    pub elimination_order: Option<Vec<String>>,
    pub chordless_cycle: Option<Vec<String>>,
}

#[derive(Serialize, Debug)]
pub struct SplitJson {
    pub is_split: bool,
    pub clique: Option<Vec<String>>,
    pub independent: Option<Vec<String>>,
    pub obstruction: Option<ObstructionJson>,
}

#[derive(Serialize, Debug)]
pub struct ObstructionJson {
    pub kind: String,
    pub vertices: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct C4Json {
    pub c4_free: bool,
    pub witness: Option<Vec<String>>,
}

pub fn perfect_status_string(status: &PerfectStatus) -> String {
    match status {
        PerfectStatus::PerfectVerified => "perfect-verified".into(),
        PerfectStatus::PerfectUpTo(l) => format!("perfect-up-to-{l}"),
        PerfectStatus::NotPerfect => "not-perfect".into(),
    }
}

fn names(indices: &[usize], name_of: &dyn Fn(usize) -> String) -> Vec<String> {
    indices.iter().map(|&i| name_of(i)).collect()
}

pub fn perfect_json(
    verdict: &PerfectVerdict,
    witness_vertices: Option<&[usize]>,
    name_of: &dyn Fn(usize) -> String,
) -> PerfectJson {
    let witness = verdict.witness.as_ref().map(|hole| {
        let vertices = witness_vertices.unwrap_or(&hole.vertices);
        WitnessJson {
            kind: match hole.kind {
                HoleKind::Hole => "hole".into(),
                HoleKind::Antihole => "antihole".into(),
            },
            length: vertices.len(),
            vertices: names(vertices, name_of),
        }
    });
    PerfectJson {
        status: perfect_status_string(&verdict.status),
        search_limit: verdict.search_limit,
        witness,
    }
}

pub fn cograph_json(verdict: &CographVerdict, name_of: &dyn Fn(usize) -> String) -> CographJson {
    match verdict {
        CographVerdict::Cograph(_) => CographJson {
            is_cograph: true,
            p4: None,
        },
        CographVerdict::NotCograph { p4 } => CographJson {
            is_cograph: false,
            p4: Some(names(&p4.vertices, name_of)),
        },
    }
}

pub fn chordal_json(verdict: &ChordalVerdict, name_of: &dyn Fn(usize) -> String) -> ChordalJson {
    match verdict {
        ChordalVerdict::Chordal { elimination } => ChordalJson {
            is_chordal: true,
            elimination_order: Some(names(elimination, name_of)),
            chordless_cycle: None,
        },
        ChordalVerdict::NotChordal { cycle } => ChordalJson {
            is_chordal: false,
            elimination_order: None,
            chordless_cycle: Some(names(cycle, name_of)),
        },
    }
}

pub fn split_json(verdict: &SplitVerdict, name_of: &dyn Fn(usize) -> String) -> SplitJson {
    match verdict {
        SplitVerdict::Split {
            clique,
            independent,
        } => SplitJson {
            is_split: true,
            clique: Some(names(clique, name_of)),
            independent: Some(names(independent, name_of)),
            obstruction: None,
        },
        SplitVerdict::NotSplit(obstruction) => {
            let (kind, vertices): (&str, Vec<usize>) = match obstruction {
                SplitObstruction::C4(v) => ("c4", v.to_vec()),
                SplitObstruction::C5(v) => ("c5", v.to_vec()),
                SplitObstruction::TwoK2(v) => ("2k2", v.to_vec()),
            };
            SplitJson {
                is_split: false,
                clique: None,
                independent: None,
                obstruction: Some(ObstructionJson {
                    kind: kind.into(),
                    vertices: names(&vertices, name_of),
                }),
            }
        }
    }
}

pub fn c4_json(verdict: &C4Verdict, name_of: &dyn Fn(usize) -> String) -> C4Json {
    match verdict {
        C4Verdict::Free => C4Json {
            c4_free: true,
            witness: None,
        },
        C4Verdict::Witness(cycle) => C4Json {
            c4_free: false,
            witness: Some(names(cycle.as_ref(), name_of)),
        },
    }
}

/// Report for a group target.
pub fn group_report(
    spec: &str,
    analysis: &GammaAnalysis,
    name_of: &dyn Fn(usize) -> String,
) -> JsonReport {
    let properties = PropertiesInfo {
        perfect: analysis.perfect.as_ref().map(|outcome| {
            perfect_json(
                &outcome.verdict,
                outcome
                    .witness_elements
                    .as_ref()
                    .map(|h| h.vertices.as_slice()),
                name_of,
            )
        }),
        cograph: analysis.cograph.as_ref().map(|v| cograph_json(v, name_of)),
        chordal: analysis.chordal.as_ref().map(|v| chordal_json(v, name_of)),
        split: analysis.split.as_ref().map(|v| split_json(v, name_of)),
        c4_free: analysis.c4_free.as_ref().map(|v| c4_json(v, name_of)),
    };
    JsonReport {
        schema: SCHEMA_VERSION,
        target: TargetInfo {
            kind: "group".into(),
            spec: spec.into(),
        },
        group: Some(GroupInfo {
            order: analysis.group_order,
            nilpotent: analysis.nilpotent,
            soluble: analysis.soluble,
            cyclic: analysis.cyclic,
            two_generated: analysis.two_generated,
            frattini: analysis.frattini.as_ref().map(|f| FrattiniJson {
                order: f.order,
                index: f.index,
                index_prime_signature: f.index_signature.clone(),
            }),
        }),
        graph: GraphInfo {
            vertices: analysis.vertex_count,
            edges: analysis.edge_count,
            isolated: analysis.isolated_count,
            reduced_vertices: analysis.perfect.as_ref().map(|p| p.reduced_vertices),
        },
        properties,
    }
}

/// Label accessor for plain graphs.
pub fn graph_labeller(graph: &Graph) -> impl Fn(usize) -> String + '_ {
    move |v| graph.label(v)
}

/// Raw adjacency export: the vertex labels in index order plus the
/// edge list.
#[derive(Serialize, Debug)]
pub struct AdjacencyJson {
    pub schema: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

pub fn adjacency_json(graph: &Graph) -> AdjacencyJson {
    AdjacencyJson {
        schema: SCHEMA_VERSION,
        vertices: (0..graph.vertex_count()).map(|v| graph.label(v)).collect(),
        edges: graph.edges(),
    }
}
