//! Forbidden-induced-subgraph recognition with independently checkable
//! certificates.
//!
//! Search outputs are canonical: candidates are explored in ascending
//! vertex order, so the first object found is the lexicographically
//! least one and repeated runs give identical certificates.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::bitset::Bitset;
use crate::graph::Graph;

/// An induced chordless cycle (hole) or its complement (antihole),
/// listed in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoleCertificate {
    pub kind: HoleKind,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HoleKind {
    Hole,
    Antihole,
}

/// An induced path, listed end to end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCertificate {
    pub vertices: Vec<usize>,
}

/// How far the odd hole / antihole search may look.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HoleLimit {
    /// Search every length up to the vertex count: exhaustive.
    Full,
    /// Search odd lengths `5..=bound`; `bound` must be odd and >= 5.
    Bounded(usize),
}

impl HoleLimit {
    pub fn effective(&self, vertex_count: usize) -> usize {
        match *self {
            HoleLimit::Bounded(bound) => bound,
            HoleLimit::Full => {
                let m = vertex_count.max(5);
                if m % 2 == 1 {
                    m
                } else {
                    m - 1
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerfectStatus {
    /// No odd hole or antihole exists: the search covered every length.
    PerfectVerified,
    /// No witness found up to the recorded bound.
    PerfectUpTo(usize),
    NotPerfect,
}

#[derive(Clone, Debug)]
pub struct PerfectVerdict {
    pub status: PerfectStatus,
    pub witness: Option<HoleCertificate>,
    pub search_limit: usize,
}

#[derive(Clone, Debug)]
pub enum CotreeNode {
    Leaf(usize),
    Union(Vec<CotreeNode>),
    Join(Vec<CotreeNode>),
}

#[derive(Clone, Debug)]
pub enum CographVerdict {
    Cograph(CotreeNode),
    NotCograph { p4: PathCertificate },
}

impl CographVerdict {
    pub fn is_cograph(&self) -> bool {
        matches!(self, CographVerdict::Cograph(_))
    }
}

#[derive(Clone, Debug)]
pub enum ChordalVerdict {
    Chordal { elimination: Vec<usize> },
    NotChordal { cycle: Vec<usize> },
}

impl ChordalVerdict {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalVerdict::Chordal { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitObstruction {
    /// An induced four-cycle, in cycle order.
    C4([usize; 4]),
    /// An induced five-cycle, in cycle order.
    C5([usize; 5]),
    /// Two independent edges `(a,b)`, `(c,d)` with no edge between them.
    TwoK2([usize; 4]),
}

#[derive(Clone, Debug)]
pub enum SplitVerdict {
    Split {
        clique: Vec<usize>,
        independent: Vec<usize>,
    },
    NotSplit(SplitObstruction),
}

impl SplitVerdict {
    pub fn is_split(&self) -> bool {
        matches!(self, SplitVerdict::Split { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum C4Verdict {
    Free,
    /// An induced four-cycle, in cycle order.
    Witness([usize; 4]),
}

impl C4Verdict {
    pub fn is_free(&self) -> bool {
        matches!(self, C4Verdict::Free)
    }
}

/// Umbrella type for anything a report can embed.
#[derive(Clone, Debug)]
pub enum Certificate {
    Hole(HoleCertificate),
    Path(PathCertificate),
    Cycle(Vec<usize>),
    Elimination(Vec<usize>),
    SplitPartition {
        clique: Vec<usize>,
        independent: Vec<usize>,
    },
    TwoK2([usize; 4]),
}

fn all_distinct(vertices: &[usize], n: usize) -> bool {
    let mut seen = Bitset::new(n);
    vertices.iter().all(|&v| v < n && seen.insert(v))
}

fn is_cycle_pattern(g: &Graph, vertices: &[usize]) -> bool {
    let m = vertices.len();
    for i in 0..m {
        for j in i + 1..m {
            let consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if g.has_edge(vertices[i], vertices[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

fn is_path_pattern(g: &Graph, vertices: &[usize]) -> bool {
    let m = vertices.len();
    for i in 0..m {
        for j in i + 1..m {
            if g.has_edge(vertices[i], vertices[j]) != (j == i + 1) {
                return false;
            }
        }
    }
    true
}

fn is_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.vertex_count();
    if order.len() != n || !all_distinct(order, n) {
        return false;
    }
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let mut later: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        later.sort_by_key(|&w| pos[w]);
        if let Some((&parent, rest)) = later.split_first() {
            if rest.iter().any(|&w| !g.has_edge(parent, w)) {
                return false;
            }
        }
    }
    true
}

/// Recomputes a claimed certificate from the adjacency alone.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> bool {
    let n = g.vertex_count();
    match cert {
        Certificate::Hole(hole) => {
            let m = hole.vertices.len();
            if m < 5 || m % 2 == 0 || !all_distinct(&hole.vertices, n) {
                return false;
            }
            match hole.kind {
                HoleKind::Hole => is_cycle_pattern(g, &hole.vertices),
                HoleKind::Antihole => is_cycle_pattern(&g.complement(), &hole.vertices),
            }
        }
        Certificate::Path(path) => {
            path.vertices.len() >= 2
                && all_distinct(&path.vertices, n)
                && is_path_pattern(g, &path.vertices)
        }
        Certificate::Cycle(vertices) => {
            vertices.len() >= 4 && all_distinct(vertices, n) && is_cycle_pattern(g, vertices)
        }
        Certificate::Elimination(order) => is_elimination_order(g, order),
        Certificate::SplitPartition {
            clique,
            independent,
        } => {
            let mut combined = clique.clone();
            combined.extend_from_slice(independent);
            if combined.len() != n || !all_distinct(&combined, n) {
                return false;
            }
            let clique_ok = clique
                .iter()
                .enumerate()
                .all(|(i, &u)| clique[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            let independent_ok = independent
                .iter()
                .enumerate()
                .all(|(i, &u)| independent[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
            clique_ok && independent_ok
        }
        Certificate::TwoK2(quad) => {
            let [a, b, c, d] = *quad;
            all_distinct(quad, n)
                && g.has_edge(a, b)
                && g.has_edge(c, d)
                && !g.has_edge(a, c)
                && !g.has_edge(a, d)
                && !g.has_edge(b, c)
                && !g.has_edge(b, d)
        }
    }
}

/// Lexicographically least induced path on `t` vertices, if any.
pub fn find_induced_path(g: &Graph, t: usize) -> Option<PathCertificate> {
    assert!(t >= 2, "paths need at least two vertices");
    let n = g.vertex_count();
    let mut path = Vec::with_capacity(t);
    for start in 0..n {
        path.clear();
        path.push(start);
        if extend_path(g, &mut path, t) {
            return Some(PathCertificate { vertices: path });
        }
    }
    None
}

/// Every induced path on `t` vertices, each listed once (the endpoint
/// with the smaller index first), in search order.
pub fn all_induced_paths(g: &Graph, t: usize) -> Vec<PathCertificate> {
    assert!(t >= 2);
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(t);
    for start in 0..n {
        path.clear();
        path.push(start);
        collect_paths(g, &mut path, t, &mut out);
    }
    out
}

fn path_candidates(g: &Graph, path: &[usize]) -> Vec<usize> {
    let last = *path.last().expect("non-empty path");
    let mut allowed = g.neighbors(last).clone();
    for (i, &p) in path.iter().enumerate() {
        allowed.remove(p);
        if i + 1 < path.len() {
            allowed.difference_with(g.neighbors(p));
        }
    }
    allowed.to_vec()
}

fn extend_path(g: &Graph, path: &mut Vec<usize>, t: usize) -> bool {
    if path.len() == t {
        return true;
    }
    for w in path_candidates(g, path) {
        path.push(w);
        if extend_path(g, path, t) {
            return true;
        }
        path.pop();
    }
    false
}

fn collect_paths(g: &Graph, path: &mut Vec<usize>, t: usize, out: &mut Vec<PathCertificate>) {
    if path.len() == t {
        if path[0] < path[t - 1] {
            out.push(PathCertificate {
                vertices: path.clone(),
            });
        }
        return;
    }
    for w in path_candidates(g, path) {
        path.push(w);
        collect_paths(g, path, t, out);
        path.pop();
    }
}

/// Depth-first chordless cycle search. Cycles are enumerated as
/// sequences starting at their smallest vertex with the second vertex
/// smaller than the last; `accept` filters by length and the first
/// accepted cycle (in lexicographic sequence order) is returned.
fn find_chordless_cycle_where(
    g: &Graph,
    max_len: usize,
    accept: &dyn Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 4 || max_len < 4 {
        return None;
    }
    let mut low = Bitset::new(n);
    for start in 0..n {
        low.insert(start);
        let second: Vec<usize> = g.neighbors(start).iter().filter(|&w| w > start).collect();
        for p1 in second {
            let mut banned = low.clone();
            banned.insert(p1);
            let mut path = vec![start, p1];
            if let Some(cycle) = cycle_dfs(g, &mut path, &banned, max_len, accept) {
                return Some(cycle);
            }
        }
    }
    None
}

fn cycle_dfs(
    g: &Graph,
    path: &mut Vec<usize>,
    banned: &Bitset,
    max_len: usize,
    accept: &dyn Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let start = path[0];
    let last = *path.last().expect("non-empty");
    let mut allowed = g.neighbors(last).clone();
    allowed.difference_with(banned);
    for w in allowed.iter() {
        if g.has_edge(start, w) {
            let m = path.len() + 1;
            if m >= 4 && m <= max_len && accept(m) && path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                return Some(cycle);
            }
        } else if path.len() + 1 < max_len {
            let mut next_banned = banned.clone();
            next_banned.union_with(g.neighbors(last));
            next_banned.insert(w);
            path.push(w);
            if let Some(cycle) = cycle_dfs(g, path, &next_banned, max_len, accept) {
                return Some(cycle);
            }
            path.pop();
        }
    }
    None
}

/// First odd hole of length `5..=max_len` in canonical order, if any.
pub fn find_odd_hole(g: &Graph, max_len: usize) -> Option<HoleCertificate> {
    assert!(
        max_len >= 5 && max_len % 2 == 1,
        "bound must be odd and >= 5"
    );
    find_chordless_cycle_where(g, max_len, &|m| m >= 5 && m % 2 == 1).map(|vertices| {
        HoleCertificate {
            kind: HoleKind::Hole,
            vertices,
        }
    })
}

/// Odd antihole search: an odd hole of the complement.
pub fn find_odd_antihole(g: &Graph, max_len: usize) -> Option<HoleCertificate> {
    find_odd_hole(&g.complement(), max_len).map(|hole| HoleCertificate {
        kind: HoleKind::Antihole,
        vertices: hole.vertices,
    })
}

/// Any chordless cycle of length at least 4 (certificate for
/// non-chordality), in canonical order.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count().max(4);
    find_chordless_cycle_where(g, n, &|_| true)
}

/// Decides perfection by bounded odd hole / odd antihole search. The
/// verdict is `PerfectVerified` only when the bound covered the whole
/// graph; a five-vertex antihole is reported as the five-hole it is
/// isomorphic to.
pub fn perfect_verdict(g: &Graph, limit: HoleLimit) -> PerfectVerdict {
    let n = g.vertex_count();
    let bound = limit.effective(n);
    assert!(bound >= 5 && bound % 2 == 1);
    // odd holes have odd length, so an odd bound one short of an even
    // vertex count still covers everything
    let exhaustive = bound >= n || (n.is_multiple_of(2) && bound + 1 == n);
    if n < 5 {
        return PerfectVerdict {
            status: PerfectStatus::PerfectVerified,
            witness: None,
            search_limit: bound,
        };
    }
    if let Some(hole) = find_odd_hole(g, bound) {
        return PerfectVerdict {
            status: PerfectStatus::NotPerfect,
            witness: Some(hole),
            search_limit: bound,
        };
    }
    if let Some(anti) = find_odd_antihole(g, bound) {
        let witness = if anti.vertices.len() == 5 {
            // reorder (a,b,c,d,e) -> (a,c,e,b,d): the complement of a
            // five-cycle is again a five-cycle on the same vertices
            let v = &anti.vertices;
            HoleCertificate {
                kind: HoleKind::Hole,
                vertices: vec![v[0], v[2], v[4], v[1], v[3]],
            }
        } else {
            anti
        };
        return PerfectVerdict {
            status: PerfectStatus::NotPerfect,
            witness: Some(witness),
            search_limit: bound,
        };
    }
    PerfectVerdict {
        status: if exhaustive {
            PerfectStatus::PerfectVerified
        } else {
            PerfectStatus::PerfectUpTo(bound)
        },
        witness: None,
        search_limit: bound,
    }
}

fn components_of(g: &Graph, members: &Bitset, complemented: bool) -> Vec<Vec<usize>> {
    let mut remaining = members.clone();
    let mut components = Vec::new();
    while let Some(seed) = remaining.first() {
        let mut component = Vec::new();
        let mut queue = vec![seed];
        remaining.remove(seed);
        while let Some(v) = queue.pop() {
            component.push(v);
            let reachable: Vec<usize> = if complemented {
                let mut r = remaining.clone();
                r.difference_with(g.neighbors(v));
                r.to_vec()
            } else {
                let mut r = remaining.clone();
                r.intersect_with(g.neighbors(v));
                r.to_vec()
            };
            for w in reachable {
                remaining.remove(w);
                queue.push(w);
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

fn cotree(g: &Graph, members: &Bitset) -> Result<CotreeNode, ()> {
    match members.len() {
        0 => return Ok(CotreeNode::Union(Vec::new())),
        1 => return Ok(CotreeNode::Leaf(members.first().expect("non-empty"))),
        _ => {}
    }
    let parts = components_of(g, members, false);
    if parts.len() > 1 {
        let children = parts
            .into_iter()
            .map(|part| cotree(g, &Bitset::from_indices(g.vertex_count(), &part)))
            .collect::<Result<Vec<_>, ()>>()?;
        return Ok(CotreeNode::Union(children));
    }
    let coparts = components_of(g, members, true);
    if coparts.len() > 1 {
        let children = coparts
            .into_iter()
            .map(|part| cotree(g, &Bitset::from_indices(g.vertex_count(), &part)))
            .collect::<Result<Vec<_>, ()>>()?;
        return Ok(CotreeNode::Join(children));
    }
    Err(())
}

/// Cograph recognition by recursive complement-connectivity: every
/// connected induced subgraph on two or more vertices must have a
/// disconnected complement. Failure yields the least induced P4.
pub fn is_cograph(g: &Graph) -> CographVerdict {
    let n = g.vertex_count();
    let all: Vec<usize> = (0..n).collect();
    match cotree(g, &Bitset::from_indices(n, &all)) {
        Ok(tree) => CographVerdict::Cograph(tree),
        Err(()) => {
            let p4 = find_induced_path(g, 4)
                .expect("a connected co-connected subgraph contains an induced P4");
            CographVerdict::NotCograph { p4 }
        }
    }
}

/// Lexicographic breadth-first search; ties go to the smallest index.
/// Returns the visit order.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut labels: Vec<Bitset> = (0..n).map(|_| Bitset::new(n)).collect();
    let mut visited = Bitset::new(n);
    let mut order = Vec::with_capacity(n);
    for position in 0..n {
        // earlier visit positions are more significant in the label
        let mut best: Option<usize> = None;
        for v in 0..n {
            if visited.contains(v) {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) => {
                    if label_cmp(&labels[v], &labels[b]) == Ordering::Greater {
                        Some(v)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        let v = best.expect("unvisited vertex remains");
        visited.insert(v);
        order.push(v);
        for w in g.neighbors(v).iter() {
            if !visited.contains(w) {
                labels[w].insert(position);
            }
        }
    }
    order
}

/// Compares position-set labels: at the first differing position, the
/// label containing it is the larger.
fn label_cmp(a: &Bitset, b: &Bitset) -> Ordering {
    for (wa, wb) in a.words().iter().zip(b.words()) {
        if wa != wb {
            let diff = wa ^ wb;
            let bit = 1u64 << diff.trailing_zeros();
            return if wa & bit != 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
    }
    Ordering::Equal
}

/// Chordality via lexicographic BFS: the reverse of the visit order is
/// a perfect elimination ordering exactly when the graph is chordal.
/// A failed check is certified with a chordless cycle.
pub fn is_chordal(g: &Graph) -> ChordalVerdict {
    let mut elimination = lex_bfs(g);
    elimination.reverse();
    if is_elimination_order(g, &elimination) {
        ChordalVerdict::Chordal { elimination }
    } else {
        let cycle = find_chordless_cycle(g).expect("non-chordal graph contains a chordless cycle");
        ChordalVerdict::NotChordal { cycle }
    }
}

/// Induced C4 search; the witness is in cycle order.
pub fn is_c4_free(g: &Graph) -> C4Verdict {
    let n = g.vertex_count();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let mut common = g.neighbors(u).clone();
            common.intersect_with(g.neighbors(v));
            let members = common.to_vec();
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if !g.has_edge(a, b) {
                        return C4Verdict::Witness([u, a, v, b]);
                    }
                }
            }
        }
    }
    C4Verdict::Free
}

fn find_two_k2(g: &Graph) -> Option<[usize; 4]> {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d) {
                return Some([a, b, c, d]);
            }
        }
    }
    None
}

/// Split recognition: the degree-ordered greedy partition is verified
/// directly; when it fails, one of the three forbidden induced
/// subgraphs (C4, C5, 2K2) must exist and is returned.
pub fn is_split(g: &Graph) -> SplitVerdict {
    let n = g.vertex_count();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (usize::MAX - g.degree(v), v));
    let m = by_degree
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| g.degree(v) >= i)
        .count();
    let clique: Vec<usize> = {
        let mut c = by_degree[..m].to_vec();
        c.sort_unstable();
        c
    };
    let independent: Vec<usize> = {
        let mut s = by_degree[m..].to_vec();
        s.sort_unstable();
        s
    };
    let cert = Certificate::SplitPartition {
        clique: clique.clone(),
        independent: independent.clone(),
    };
    if verify_certificate(g, &cert) {
        return SplitVerdict::Split {
            clique,
            independent,
        };
    }
    if let C4Verdict::Witness(c4) = is_c4_free(g) {
        return SplitVerdict::NotSplit(SplitObstruction::C4(c4));
    }
    if let Some(hole) = find_odd_hole(g, 5) {
        let mut five = [0usize; 5];
        five.copy_from_slice(&hole.vertices);
        return SplitVerdict::NotSplit(SplitObstruction::C5(five));
    }
    if let Some(quad) = find_two_k2(g) {
        return SplitVerdict::NotSplit(SplitObstruction::TwoK2(quad));
    }
    unreachable!("a non-split graph contains an induced C4, C5 or 2K2");
}

/// True when some four vertices induce a paw: a triangle with a
/// pendant vertex.
pub fn contains_paw(g: &Graph) -> bool {
    let n = g.vertex_count();
    for center in 0..n {
        let nbrs = g.neighbors(center).to_vec();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !g.has_edge(a, b) {
                    continue;
                }
                let mut pendants = g.neighbors(center).clone();
                pendants.difference_with(g.neighbors(a));
                pendants.difference_with(g.neighbors(b));
                pendants.remove(a);
                pendants.remove(b);
                if !pendants.is_empty() {
                    return true;
                }
            }
        }
    }
    false
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    for seed in 0..n {
        if color[seed] != u8::MAX {
            continue;
        }
        color[seed] = 0;
        let mut queue = vec![seed];
        while let Some(v) = queue.pop() {
            for w in g.neighbors(v).iter() {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push(w);
                } else if color[w] == color[v] {
                    return false;
                }
            }
        }
    }
    true
}
