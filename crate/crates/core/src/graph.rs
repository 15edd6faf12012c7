//! Simple graphs with dense bit-row adjacency.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bitset::Bitset;

/// Undirected simple graph. No self-loops; adjacency is kept symmetric
/// by construction. Vertices may carry display labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<Bitset>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            rows: (0..n).map(|_| Bitset::new(n)).collect(),
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of a vertex; falls back to the index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(ls) => ls[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(Bitset::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.rows[v].is_empty()).collect()
    }

    /// Complement graph (labels carried over).
    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`. Labels are carried over when present.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        if self.labels.is_some() {
            g.labels = Some(vertices.iter().map(|&u| self.label(u)).collect());
        }
        g
    }

    /// Tensor (categorical) product: vertex `(u, v)` is `u * other.n + v`,
    /// and pairs are adjacent iff they are adjacent in both coordinates.
    pub fn tensor(&self, other: &Graph) -> Graph {
        let n = self.n * other.n;
        let mut g = Graph::new(n);
        for u1 in 0..self.n {
            for u2 in self.rows[u1].iter() {
                for v1 in 0..other.n {
                    for v2 in other.rows[v1].iter() {
                        let a = u1 * other.n + v1;
                        let b = u2 * other.n + v2;
                        if a < b {
                            g.add_edge(a, b);
                        }
                    }
                }
            }
        }
        if self.labels.is_some() || other.labels.is_some() {
            let mut labels = Vec::with_capacity(n);
            for u in 0..self.n {
                for v in 0..other.n {
                    labels.push(format!("({},{})", self.label(u), other.label(v)));
                }
            }
            g.labels = Some(labels);
        }
        g
    }
}
