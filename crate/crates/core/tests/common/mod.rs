//! Brute-force oracles shared by the integration tests. These stay
//! deliberately naive — subset enumeration and bitmask partitions — so
//! they are independent of the search code they check.

#![allow(dead_code)]

use gengraph::graph::Graph;

/// xorshift64*; deterministic across runs and platforms.
pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545_f491_4f6c_dd1d)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

pub fn random_graph(rng: &mut Rng, n: usize, density_percent: u64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(100) < density_percent {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// True when `subset` (given as a bitmask) induces a chordless cycle:
/// every member has exactly two neighbours inside and the subset is
/// connected.
fn induces_cycle(g: &Graph, mask: u64) -> bool {
    let members: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| mask >> v & 1 == 1)
        .collect();
    let k = members.len();
    if k < 4 {
        return false;
    }
    let mut edges = 0;
    for (i, &u) in members.iter().enumerate() {
        let mut degree = 0;
        for (j, &v) in members.iter().enumerate() {
            if i != j && g.has_edge(u, v) {
                degree += 1;
                if j > i {
                    edges += 1;
                }
            }
        }
        if degree != 2 {
            return false;
        }
    }
    if edges != k {
        return false;
    }
    // connected 2-regular graph on k vertices with k edges is C_k
    let mut seen = vec![false; k];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for (j, &v) in members.iter().enumerate() {
            if !seen[j] && g.has_edge(members[i], v) {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == k
}

/// Exhaustive hole search over vertex subsets. `parity_odd` restricts
/// to odd lengths; `min_len`/`max_len` bound the cycle size.
pub fn brute_hole_exists(g: &Graph, min_len: usize, max_len: usize, parity_odd: bool) -> bool {
    let n = g.vertex_count();
    assert!(n <= 16, "oracle is exponential");
    for mask in 1u64..1 << n {
        let k = mask.count_ones() as usize;
        if k < min_len || k > max_len {
            continue;
        }
        if parity_odd && k.is_multiple_of(2) {
            continue;
        }
        if induces_cycle(g, mask) {
            return true;
        }
    }
    false
}

pub fn brute_odd_hole_exists(g: &Graph, max_len: usize) -> bool {
    brute_hole_exists(g, 5, max_len, true)
}

pub fn brute_is_chordal(g: &Graph) -> bool {
    !brute_hole_exists(g, 4, g.vertex_count(), false)
}

pub fn brute_is_cograph(g: &Graph) -> bool {
    let n = g.vertex_count();
    for mask in 1u64..1 << n {
        if mask.count_ones() != 4 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        // check all orderings for an induced path pattern
        let mut perm = [0, 1, 2, 3];
        let orderings = [
            [0, 1, 2, 3],
            [0, 1, 3, 2],
            [0, 2, 1, 3],
            [0, 2, 3, 1],
            [0, 3, 1, 2],
            [0, 3, 2, 1],
            [1, 0, 2, 3],
            [1, 0, 3, 2],
            [1, 2, 0, 3],
            [1, 3, 0, 2],
            [2, 0, 1, 3],
            [2, 1, 0, 3],
        ];
        for ordering in orderings {
            perm.copy_from_slice(&ordering);
            let seq = [
                members[perm[0]],
                members[perm[1]],
                members[perm[2]],
                members[perm[3]],
            ];
            let path = seq.windows(2).all(|w| g.has_edge(w[0], w[1]));
            let chords = g.has_edge(seq[0], seq[2])
                || g.has_edge(seq[0], seq[3])
                || g.has_edge(seq[1], seq[3]);
            if path && !chords {
                return false;
            }
        }
    }
    true
}

pub fn brute_is_split(g: &Graph) -> bool {
    let n = g.vertex_count();
    'partition: for clique_mask in 0u64..1 << n {
        for u in 0..n {
            for v in u + 1..n {
                let in_clique = (clique_mask >> u & 1, clique_mask >> v & 1);
                match in_clique {
                    (1, 1) if !g.has_edge(u, v) => continue 'partition,
                    (0, 0) if g.has_edge(u, v) => continue 'partition,
                    _ => {}
                }
            }
        }
        return true;
    }
    false
}
