//! Built-in hole certificates: explicit five-element tuples together
//! with the group or graph they live in, independently re-checkable.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::GroupError;
use crate::graph::Graph;
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::permgroup::{perm_generates, PermGroup};

use super::{
    alternating_group_hole, c2c2_p3, complete_graph, delta_graph, delta_vertex,
    dihedral_reflection_hole, paw_graph, symmetric_group_hole,
};

/// Where a claimed 5-hole lives and how adjacency is decided.
#[derive(Clone, Debug)]
pub enum BundleBody {
    /// Pair adjacency = the two permutations generate a group of
    /// exactly `target_order` elements.
    Perm {
        target_order: u128,
        vertices: Vec<Permutation>,
    },
    /// Pair adjacency = the two elements generate the whole table group.
    Table {
        group: FiniteGroup,
        vertices: Vec<usize>,
    },
    /// Pair adjacency = graph edge.
    Graph { graph: Graph, vertices: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct CertificateBundle {
    pub name: String,
    pub description: String,
    pub body: BundleBody,
}

/// A violated pair: positions into the 5-tuple plus what was expected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleFailure {
    pub pair: (usize, usize),
    pub expected_adjacent: bool,
}

impl fmt::Display for BundleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertices {} and {} should {} adjacent",
            self.pair.0,
            self.pair.1,
            if self.expected_adjacent {
                "be"
            } else {
                "not be"
            }
        )
    }
}

impl CertificateBundle {
    pub fn vertex_names(&self) -> Vec<String> {
        match &self.body {
            BundleBody::Perm { vertices, .. } => {
                vertices.iter().map(Permutation::cycle_string).collect()
            }
            BundleBody::Table { group, vertices } => vertices
                .iter()
                .map(|&v| String::from(group.name(v)))
                .collect(),
            BundleBody::Graph { graph, vertices } => {
                vertices.iter().map(|&v| graph.label(v)).collect()
            }
        }
    }

    fn adjacent(&self, i: usize, j: usize) -> Result<bool, GroupError> {
        match &self.body {
            BundleBody::Perm {
                target_order,
                vertices,
            } => perm_generates(&[vertices[i].clone(), vertices[j].clone()], *target_order),
            BundleBody::Table { group, vertices } => {
                Ok(group.is_generating_pair(vertices[i], vertices[j]))
            }
            BundleBody::Graph { graph, vertices } => Ok(graph.has_edge(vertices[i], vertices[j])),
        }
    }

    fn distinct(&self) -> bool {
        match &self.body {
            BundleBody::Perm { vertices, .. } => {
                (0..5).all(|i| (i + 1..5).all(|j| vertices[i] != vertices[j]))
            }
            BundleBody::Table { vertices, .. } | BundleBody::Graph { vertices, .. } => {
                (0..5).all(|i| (i + 1..5).all(|j| vertices[i] != vertices[j]))
            }
        }
    }

    /// Checks all ten pairs: the five cyclically consecutive ones must
    /// be adjacent, the rest must not be.
    pub fn verify(&self) -> Result<(), BundleFailure> {
        if !self.distinct() {
            return Err(BundleFailure {
                pair: (0, 0),
                expected_adjacent: false,
            });
        }
        for i in 0..5 {
            for j in i + 1..5 {
                let expected = j == i + 1 || (i == 0 && j == 4);
                let actual = self.adjacent(i, j).unwrap_or(!expected);
                if actual != expected {
                    return Err(BundleFailure {
                        pair: (i, j),
                        expected_adjacent: expected,
                    });
                }
            }
        }
        Ok(())
    }
}

fn perm_bundle(
    name: String,
    description: String,
    vertices: Vec<Permutation>,
    target_order: u128,
) -> CertificateBundle {
    CertificateBundle {
        name,
        description,
        body: BundleBody::Perm {
            target_order,
            vertices,
        },
    }
}

/// Builds a projective tuple from explicit cycles and pins down where
/// it lives: the five permutations must generate a group of exactly the
/// projective order acting 2-transitively on the `q + 1` points, which
/// identifies PSL(2, q) among groups of that order.
fn psl2_tuple(q: usize, cycles: &[&[&[usize]]]) -> Result<(Vec<Permutation>, u128), GroupError> {
    let degree = q + 1;
    let target = (q * (q * q - 1) / if q.is_multiple_of(2) { 1 } else { 2 }) as u128;
    let mut vertices = Vec::with_capacity(5);
    for spec in cycles {
        vertices.push(Permutation::from_cycles(degree, spec)?);
    }
    let group = PermGroup::new(degree, vertices.clone())?;
    if group.order() != target {
        return Err(GroupError::Internal(
            "projective tuple generates a group of the wrong order",
        ));
    }
    let elements = group.elements(usize::try_from(target).expect("small order"))?;
    let orbit: alloc::collections::BTreeSet<usize> = elements.iter().map(|p| p.apply(0)).collect();
    let stab_orbit: alloc::collections::BTreeSet<usize> = elements
        .iter()
        .filter(|p| p.apply(0) == 0)
        .map(|p| p.apply(1))
        .collect();
    if orbit.len() != degree || stab_orbit.len() != degree - 1 {
        return Err(GroupError::Internal(
            "projective tuple does not act 2-transitively",
        ));
    }
    Ok((vertices, target))
}

/// Every certificate bundle the library ships: the explicit and
/// formula-generated symmetric/alternating tuples, the projective
/// tuples, the p-cube extension tuple, the subset-union graph tuple,
/// the paw-times-triangle tuple, and the dihedral reflection tuples.
pub fn builtin_bundles() -> Result<Vec<CertificateBundle>, GroupError> {
    let mut out = Vec::new();
    for n in 5..=12usize {
        let (vertices, order) = symmetric_group_hole(n)?;
        out.push(perm_bundle(
            format!("sym:{n}"),
            format!("5-hole in the generating graph of S_{n}"),
            vertices,
            order,
        ));
    }
    for n in 5..=12usize {
        let (vertices, order) = alternating_group_hole(n)?;
        out.push(perm_bundle(
            format!("alt:{n}"),
            format!("5-hole in the generating graph of A_{n}"),
            vertices,
            order,
        ));
    }
    let (vertices, order) = psl2_tuple(
        7,
        &[
            &[&[2, 3, 4], &[5, 8, 7]],
            &[&[1, 4, 5], &[3, 7, 6]],
            &[&[2, 7, 8], &[3, 6, 5]],
            &[&[1, 2, 4], &[6, 7, 8]],
            &[&[1, 2, 5, 7], &[3, 8, 6, 4]],
        ],
    )?;
    out.push(perm_bundle(
        "psl2:7".into(),
        "5-hole in the generating graph of PSL(2,7) on 8 points".into(),
        vertices,
        order,
    ));
    let (vertices, order) = psl2_tuple(
        11,
        &[
            &[&[3, 9, 5, 11, 7], &[4, 10, 6, 12, 8]],
            &[&[1, 6, 3, 4, 12], &[2, 11, 9, 10, 7]],
            &[&[1, 3, 8, 5, 4], &[6, 7, 9, 12, 10]],
            &[&[2, 12, 11, 8, 3], &[4, 7, 9, 10, 6]],
            &[&[1, 9, 6, 7, 5], &[2, 4, 12, 3, 10]],
        ],
    )?;
    out.push(perm_bundle(
        "psl2:11".into(),
        "5-hole in the generating graph of PSL(2,11) on 12 points".into(),
        vertices,
        order,
    ));
    let (group, vertices) = c2c2_p3(3)?;
    out.push(CertificateBundle {
        name: "c2c2p3:3".into(),
        description: "5-hole in the generating graph of the order-108 extension of C_3^3".into(),
        body: BundleBody::Table { group, vertices },
    });
    out.push(CertificateBundle {
        name: "delta:5".into(),
        description: "5-hole in the subset-union graph on {1..5}".into(),
        body: BundleBody::Graph {
            graph: delta_graph(5)?,
            vertices: vec![
                delta_vertex(&[1, 2, 4]),
                delta_vertex(&[1, 3, 5]),
                delta_vertex(&[2, 4, 5]),
                delta_vertex(&[1, 3, 4]),
                delta_vertex(&[2, 3, 5]),
            ],
        },
    });
    let paw_k3 = paw_graph().tensor(&complete_graph(3));
    out.push(CertificateBundle {
        name: "paw-k3".into(),
        description: "5-hole in the tensor product of the paw with a triangle".into(),
        body: BundleBody::Graph {
            graph: paw_k3,
            // (x1,y1), (x2,y3), (x3,y1), (x4,y2), (x3,y3)
            vertices: vec![0, 5, 6, 10, 8],
        },
    });
    for (p, q, r) in [(3usize, 5usize, 7usize), (3, 5, 11), (3, 7, 11)] {
        let (group, vertices) = dihedral_reflection_hole(p, q, r, 1)?;
        out.push(CertificateBundle {
            name: format!("crt:{p},{q},{r}"),
            description: format!(
                "5-hole of reflections in the generating graph of the dihedral group of degree {}",
                p * q * r
            ),
            body: BundleBody::Table { group, vertices },
        });
    }
    Ok(out)
}
