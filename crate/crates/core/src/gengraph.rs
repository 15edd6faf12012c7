//! The generating graph: vertices are group elements, edges the pairs
//! generating the whole group. Includes the sound hole-search
//! reductions and quotient path lifting.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::error::GroupError;
use crate::graph::Graph;
use crate::group::{prime_signature, FiniteGroup, Quotient};
use crate::lattice::{self, SubgroupLattice};
use crate::props::{
    self, C4Verdict, ChordalVerdict, CographVerdict, HoleCertificate, HoleLimit, PathCertificate,
    PerfectVerdict, SplitVerdict,
};

/// A generating graph, possibly restricted to a subset of the group:
/// graph vertex `i` is group element `elements[i]`.
#[derive(Clone, Debug)]
pub struct GeneratingGraph {
    pub graph: Graph,
    pub elements: Vec<usize>,
    pub group_order: usize,
}

impl GeneratingGraph {
    /// Restricts to the given graph vertices (ascending), keeping the
    /// element mapping straight.
    pub fn restrict(&self, vertices: &[usize]) -> GeneratingGraph {
        GeneratingGraph {
            graph: self.graph.induced(vertices),
            elements: vertices.iter().map(|&v| self.elements[v]).collect(),
            group_order: self.group_order,
        }
    }

    /// Maps graph vertices of a certificate back to group elements.
    pub fn elements_of(&self, vertices: &[usize]) -> Vec<usize> {
        vertices.iter().map(|&v| self.elements[v]).collect()
    }
}

/// Builds the full generating graph. Pair verdicts are memoized per
/// unordered pair of cyclic subgroups: `<a, b>` depends only on
/// `(<a>, <b>)`, so groups with few cyclic subgroups cost far less
/// than one closure per element pair.
pub fn generating_graph(group: &FiniteGroup) -> GeneratingGraph {
    let n = group.order();
    let classes = group.cyclic_classes();
    let c = classes.reps.len();
    let mut verdict = vec![false; c * c];
    for i in 0..c {
        for j in i..c {
            let ok = group.is_generating_pair(classes.reps[i], classes.reps[j]);
            verdict[i * c + j] = ok;
            verdict[j * c + i] = ok;
        }
    }
    let mut graph = Graph::new(n);
    for a in 0..n {
        let row = classes.class_of[a] * c;
        for b in a + 1..n {
            if verdict[row + classes.class_of[b]] {
                graph.add_edge(a, b);
            }
        }
    }
    graph.set_labels(group.names().to_vec());
    GeneratingGraph {
        graph,
        elements: (0..n).collect(),
        group_order: n,
    }
}

/// The subgraph induced by the non-isolated vertices. Returns the
/// restriction and the removed elements.
pub fn non_isolated_subgraph(gamma: &GeneratingGraph) -> (GeneratingGraph, Vec<usize>) {
    let keep: Vec<usize> = (0..gamma.graph.vertex_count())
        .filter(|&v| gamma.graph.degree(v) > 0)
        .collect();
    let removed = (0..gamma.graph.vertex_count())
        .filter(|&v| gamma.graph.degree(v) == 0)
        .map(|v| gamma.elements[v])
        .collect();
    (gamma.restrict(&keep), removed)
}

/// Why each vertex left the graph during hole-search pruning. All
/// entries are group element indices.
#[derive(Clone, Debug, Default)]
pub struct ReductionTrace {
    pub removed_isolated: Vec<usize>,
    pub removed_unique_maximal: Vec<usize>,
    /// `(collapsed element, surviving representative element)`.
    pub twin_map: Vec<(usize, usize)>,
}

impl ReductionTrace {
    /// Groups the surviving representative with everything collapsed
    /// into it.
    pub fn twin_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &(gone, rep) in &self.twin_map {
            match classes.iter_mut().find(|c| c[0] == rep) {
                Some(class) => class.push(gone),
                None => classes.push(vec![rep, gone]),
            }
        }
        classes
    }
}

/// Removes, in order: isolated vertices, vertices lying in exactly one
/// maximal subgroup, pairwise twins (one survivor per sweep pair), and
/// finally anything the removals isolated. Twins are vertices whose
/// neighborhoods agree outside the pair, adjacent or not; no hole or
/// antihole on five or more vertices can use a removed vertex, so the
/// reduction is sound for deciding existence of such holes — and only
/// for that, which is why other property checks never see this graph.
pub fn prune_for_holes(
    group: &FiniteGroup,
    gamma: &GeneratingGraph,
    lattice: Option<&SubgroupLattice>,
) -> (GeneratingGraph, ReductionTrace) {
    let n = gamma.graph.vertex_count();
    let mut alive = Bitset::new(n);
    for v in 0..n {
        alive.insert(v);
    }
    let mut trace = ReductionTrace::default();

    let alive_degree = |v: usize, alive: &Bitset| -> usize {
        let mut nbrs = gamma.graph.neighbors(v).clone();
        nbrs.intersect_with(alive);
        nbrs.len()
    };

    for v in 0..n {
        if gamma.graph.degree(v) == 0 {
            alive.remove(v);
            trace.removed_isolated.push(gamma.elements[v]);
        }
    }

    if let Some(lattice) = lattice {
        let counts = lattice::maximal_membership_counts(group, lattice);
        for v in 0..n {
            if alive.contains(v) && counts[gamma.elements[v]] == 1 {
                alive.remove(v);
                trace.removed_unique_maximal.push(gamma.elements[v]);
            }
        }
    }

    // Twin collapse to a fixed point. Each deletion is justified on the
    // current graph, so the sweep order only affects which twin
    // survives, and the ascending scan makes that canonical.
    loop {
        let mut changed = false;
        for u in 0..n {
            if !alive.contains(u) {
                continue;
            }
            for v in u + 1..n {
                if !alive.contains(v) {
                    continue;
                }
                let nu = gamma.graph.neighbors(u);
                let nv = gamma.graph.neighbors(v);
                let twins = nu
                    .words()
                    .iter()
                    .zip(nv.words())
                    .zip(alive.words())
                    .enumerate()
                    .all(|(w, ((&a, &b), &mask))| {
                        let mut keep = mask;
                        if w == u / 64 {
                            keep &= !(1u64 << (u % 64));
                        }
                        if w == v / 64 {
                            keep &= !(1u64 << (v % 64));
                        }
                        a & keep == b & keep
                    });
                if twins {
                    alive.remove(v);
                    trace.twin_map.push((gamma.elements[v], gamma.elements[u]));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    for v in 0..n {
        if alive.contains(v) && alive_degree(v, &alive) == 0 {
            alive.remove(v);
            trace.removed_isolated.push(gamma.elements[v]);
        }
    }

    let keep: Vec<usize> = alive.iter().collect();
    (gamma.restrict(&keep), trace)
}

/// Graph-level part of the hole-search reduction (isolated vertices and
/// twins only), for graphs that do not come from a group. Returns the
/// reduced graph and the kept vertex ids.
pub fn twin_reduction(graph: &Graph) -> (Graph, Vec<usize>) {
    let gamma = GeneratingGraph {
        graph: graph.clone(),
        elements: (0..graph.vertex_count()).collect(),
        group_order: graph.vertex_count(),
    };
    let trivial = FiniteGroup::from_parts(1, vec![0], vec!["1".into()]);
    let (reduced, _) = prune_for_holes(&trivial, &gamma, None);
    (reduced.graph, reduced.elements)
}

/// Lifts an induced path of the quotient graph to an induced path of
/// the generating graph with the same adjacency pattern, walking left
/// to right through the cosets. Existence is guaranteed, so coset
/// exhaustion reports an internal error.
///
/// A single non-isolated vertex (`path.len() == 1`) lifts through any
/// edge at it.
pub fn lift_induced_path(
    group: &FiniteGroup,
    quotient: &Quotient,
    path: &[usize],
) -> Result<Vec<usize>, GroupError> {
    let q = &quotient.group;
    if path.is_empty() {
        return Err(GroupError::InvalidPath("empty path".into()));
    }
    for &v in path {
        if v >= q.order() {
            return Err(GroupError::InvalidPath("vertex out of range".into()));
        }
    }
    for (i, &u) in path.iter().enumerate() {
        for (j, &v) in path.iter().enumerate().skip(i + 1) {
            if u == v {
                return Err(GroupError::InvalidPath("repeated vertex".into()));
            }
            let adjacent = q.is_generating_pair(u, v);
            if adjacent != (j == i + 1) {
                return Err(GroupError::InvalidPath(
                    "not an induced path of the quotient graph".into(),
                ));
            }
        }
    }
    if path.len() == 1 {
        let v = path[0];
        let partner = (0..q.order())
            .find(|&b| b != v && q.is_generating_pair(v, b))
            .ok_or_else(|| GroupError::InvalidPath("vertex is isolated in the quotient".into()))?;
        let lifted = lift_induced_path(group, quotient, &[v, partner])?;
        return Ok(vec![lifted[0]]);
    }
    let coset_members: Vec<Vec<usize>> = path
        .iter()
        .map(|&v| {
            let rep = quotient.rep_of[v];
            quotient.normal.iter().map(|x| group.mul(rep, x)).collect()
        })
        .collect();
    let mut lifted: Vec<usize> = Vec::with_capacity(path.len());
    'first: for &e1 in &coset_members[0] {
        for &e2 in &coset_members[1] {
            if group.is_generating_pair(e1, e2) {
                lifted.push(e1);
                lifted.push(e2);
                break 'first;
            }
        }
    }
    if lifted.len() != 2 {
        return Err(GroupError::Internal("no lift for the first edge"));
    }
    for members in &coset_members[2..] {
        let prev = *lifted.last().expect("non-empty");
        let next = members
            .iter()
            .copied()
            .find(|&e| group.is_generating_pair(prev, e))
            .ok_or(GroupError::Internal("coset exhausted during lifting"))?;
        lifted.push(next);
    }
    debug_assert!({
        let mut ok = true;
        for (i, &u) in lifted.iter().enumerate() {
            for (j, &v) in lifted.iter().enumerate().skip(i + 1) {
                ok &= group.is_generating_pair(u, v) == (j == i + 1);
            }
        }
        ok
    });
    Ok(lifted)
}

/// Which properties to compute and under what bounds.
#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub perfect: bool,
    pub cograph: bool,
    pub chordal: bool,
    pub split: bool,
    pub c4_free: bool,
    pub hole_policy: HolePolicy,
    pub lattice_cap: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            perfect: true,
            cograph: true,
            chordal: true,
            split: true,
            c4_free: true,
            hole_policy: HolePolicy::Fixed(HoleLimit::Full),
            lattice_cap: crate::DEFAULT_LATTICE_CAP,
        }
    }
}

/// Perfection verdict plus how far the graph was reduced first. The
/// witness, if any, is expressed in group element indices.
#[derive(Clone, Debug)]
pub struct PerfectOutcome {
    pub verdict: PerfectVerdict,
    pub witness_elements: Option<HoleCertificate>,
    pub reduced_vertices: usize,
    pub pruned_with_lattice: bool,
}

#[derive(Clone, Debug)]
pub struct FrattiniInfo {
    pub order: usize,
    pub index: usize,
    pub index_signature: Vec<u64>,
}

/// Everything the front end reports about one group. Certificates are
/// in group element indices (the full graph has vertex = element).
#[derive(Clone, Debug)]
pub struct GammaAnalysis {
    pub group_order: usize,
    pub nilpotent: bool,
    pub soluble: bool,
    pub cyclic: bool,
    pub two_generated: bool,
    pub frattini: Option<FrattiniInfo>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub isolated_count: usize,
    pub perfect: Option<PerfectOutcome>,
    pub cograph: Option<CographVerdict>,
    pub chordal: Option<ChordalVerdict>,
    pub split: Option<SplitVerdict>,
    pub c4_free: Option<C4Verdict>,
}

/// How the perfection search picks its bound once the reduced graph
/// size is known.
#[derive(Clone, Copy, Debug)]
pub enum HolePolicy {
    Fixed(HoleLimit),
    /// Exhaustive when the reduced graph has at most `full_cap`
    /// vertices, otherwise bounded at `bounded` (odd, >= 5).
    Auto {
        full_cap: usize,
        bounded: usize,
    },
}

impl HolePolicy {
    fn limit_for(&self, reduced_vertices: usize) -> HoleLimit {
        match *self {
            HolePolicy::Fixed(limit) => limit,
            HolePolicy::Auto { full_cap, bounded } => {
                if reduced_vertices <= full_cap {
                    HoleLimit::Full
                } else {
                    HoleLimit::Bounded(bounded)
                }
            }
        }
    }
}

/// Decides perfection of the generating graph: prune (with the lattice
/// when available), search the reduced graph, and map any witness back
/// to element indices.
pub fn gamma_perfect(
    group: &FiniteGroup,
    gamma: &GeneratingGraph,
    limit: HoleLimit,
    lattice: Option<&SubgroupLattice>,
) -> PerfectOutcome {
    gamma_perfect_with_policy(group, gamma, HolePolicy::Fixed(limit), lattice)
}

/// [`gamma_perfect`] with the bound chosen after pruning.
pub fn gamma_perfect_with_policy(
    group: &FiniteGroup,
    gamma: &GeneratingGraph,
    policy: HolePolicy,
    lattice: Option<&SubgroupLattice>,
) -> PerfectOutcome {
    let (reduced, _trace) = prune_for_holes(group, gamma, lattice);
    let limit = policy.limit_for(reduced.graph.vertex_count());
    let verdict = props::perfect_verdict(&reduced.graph, limit);
    let witness_elements = verdict.witness.as_ref().map(|hole| HoleCertificate {
        kind: hole.kind,
        vertices: reduced.elements_of(&hole.vertices),
    });
    PerfectOutcome {
        reduced_vertices: reduced.graph.vertex_count(),
        pruned_with_lattice: lattice.is_some(),
        witness_elements,
        verdict,
    }
}

/// Full analysis entry point: builds the graph once and runs the
/// requested property checks. The unique-maximal reduction is applied
/// only inside the perfection search; cograph, chordal, split and
/// C4-freeness are decided on the untouched graph.
pub fn analyze(group: &FiniteGroup, options: &AnalysisOptions) -> GammaAnalysis {
    let gamma = generating_graph(group);
    let lattice = lattice::all_subgroups(group, options.lattice_cap).ok();
    let frattini = lattice.as_ref().map(|l| {
        let frat = lattice::frattini_from_lattice(group, l);
        let index = group.order() / frat.len();
        FrattiniInfo {
            order: frat.len(),
            index,
            index_signature: prime_signature(index as u64),
        }
    });
    let perfect = options
        .perfect
        .then(|| gamma_perfect_with_policy(group, &gamma, options.hole_policy, lattice.as_ref()));
    GammaAnalysis {
        group_order: group.order(),
        nilpotent: group.is_nilpotent(),
        soluble: group.is_soluble(),
        cyclic: group.is_cyclic(),
        two_generated: group.is_two_generated(),
        frattini,
        vertex_count: gamma.graph.vertex_count(),
        edge_count: gamma.graph.edge_count(),
        isolated_count: gamma.graph.isolated_vertices().len(),
        perfect,
        cograph: options.cograph.then(|| props::is_cograph(&gamma.graph)),
        chordal: options.chordal.then(|| props::is_chordal(&gamma.graph)),
        split: options.split.then(|| props::is_split(&gamma.graph)),
        c4_free: options.c4_free.then(|| props::is_c4_free(&gamma.graph)),
    }
}

/// Convenience wrapper: the least induced path certificate on the full
/// generating graph, if one exists.
pub fn gamma_induced_path(gamma: &GeneratingGraph, t: usize) -> Option<PathCertificate> {
    props::find_induced_path(&gamma.graph, t)
}
