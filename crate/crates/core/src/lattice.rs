//! Complete subgroup lattices of small groups, built as the join
//! closure of the cyclic subgroups.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::error::GroupError;
use crate::group::{FiniteGroup, Subgroup};

/// Guard against pathological lattices (elementary abelian 2-groups
/// near the order cap) blowing up the join closure.
const MAX_SUBGROUPS: usize = 100_000;

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    /// All subgroups, sorted by order then by member set.
    pub subgroups: Vec<Subgroup>,
    /// Pairs `(i, j)` with `subgroups[i]` strictly contained in
    /// `subgroups[j]`; exactly the set-containment order.
    pub inclusions: Vec<(usize, usize)>,
    pub maximal: Vec<bool>,
    pub full: usize,
    pub trivial: usize,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn maximal_subgroups(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups
            .iter()
            .zip(&self.maximal)
            .filter(|(_, &m)| m)
            .map(|(s, _)| s)
    }
}

/// Greedy small generating set for a known subgroup.
fn small_generators(g: &FiniteGroup, members: &Bitset) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = Bitset::new(g.order());
    reached.insert(0);
    for candidate in members.iter() {
        if reached.contains(candidate) {
            continue;
        }
        gens.push(candidate);
        reached = g.closure(&gens).members().clone();
        if reached == *members {
            break;
        }
    }
    gens
}

/// The complete subgroup lattice. Every subgroup is the join of cyclic
/// subgroups, so closing the cyclic seeds under pairwise joins visits
/// each subgroup exactly once.
pub fn all_subgroups(g: &FiniteGroup, cap: usize) -> Result<SubgroupLattice, GroupError> {
    if g.order() > cap {
        return Err(GroupError::LatticeTooLarge { cap });
    }
    let classes = g.cyclic_classes();
    let mut lookup: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    let mut subs: Vec<(Bitset, Vec<usize>)> = Vec::new();
    let mut push = |members: Bitset, gens: Vec<usize>, subs: &mut Vec<(Bitset, Vec<usize>)>| {
        let key = members.words().to_vec();
        if let alloc::collections::btree_map::Entry::Vacant(e) = lookup.entry(key) {
            e.insert(subs.len());
            subs.push((members, gens));
        }
    };
    let trivial = Bitset::from_indices(g.order(), &[0]);
    push(trivial, Vec::new(), &mut subs);
    for (class, members) in classes.members.iter().enumerate() {
        push(members.clone(), alloc::vec![classes.reps[class]], &mut subs);
    }
    let mut i = 0;
    while i < subs.len() {
        for j in 0..i {
            let mut gens = subs[i].1.clone();
            gens.extend_from_slice(&subs[j].1);
            let joined = g.closure(&gens);
            if joined.members() == &subs[i].0 || joined.members() == &subs[j].0 {
                continue;
            }
            let gens = small_generators(g, joined.members());
            push(joined.members().clone(), gens, &mut subs);
            if subs.len() > MAX_SUBGROUPS {
                return Err(GroupError::LatticeTooLarge { cap });
            }
        }
        i += 1;
    }
    let mut subgroups: Vec<Subgroup> = subs
        .into_iter()
        .map(|(members, _)| Subgroup::from_members(members))
        .collect();
    subgroups.sort_by(|a, b| (a.len(), a.members()).cmp(&(b.len(), b.members())));
    let mut inclusions = Vec::new();
    for (i, small) in subgroups.iter().enumerate() {
        for (j, large) in subgroups.iter().enumerate() {
            if i != j && small.len() < large.len() && small.members().is_subset_of(large.members())
            {
                inclusions.push((i, j));
            }
        }
    }
    let full = subgroups
        .iter()
        .position(|s| s.len() == g.order())
        .expect("join closure reaches the whole group");
    let trivial = subgroups
        .iter()
        .position(|s| s.len() == 1)
        .expect("trivial subgroup seeded");
    let maximal: Vec<bool> = (0..subgroups.len())
        .map(|i| i != full && inclusions.iter().all(|&(a, b)| a != i || b == full))
        .collect();
    Ok(SubgroupLattice {
        subgroups,
        inclusions,
        maximal,
        full,
        trivial,
    })
}

/// Frattini subgroup: the intersection of the maximal subgroups, or the
/// whole group when there are none (the trivial group).
pub fn frattini(g: &FiniteGroup, cap: usize) -> Result<Subgroup, GroupError> {
    let lattice = all_subgroups(g, cap)?;
    Ok(frattini_from_lattice(g, &lattice))
}

pub fn frattini_from_lattice(g: &FiniteGroup, lattice: &SubgroupLattice) -> Subgroup {
    let mut members = g.full_subgroup().members().clone();
    for maximal in lattice.maximal_subgroups() {
        members.intersect_with(maximal.members());
    }
    Subgroup::from_members(members)
}

/// For each element, the number of maximal subgroups containing it.
pub fn maximal_membership_counts(g: &FiniteGroup, lattice: &SubgroupLattice) -> Vec<usize> {
    let mut counts = alloc::vec![0usize; g.order()];
    for maximal in lattice.maximal_subgroups() {
        for e in maximal.iter() {
            counts[e] += 1;
        }
    }
    counts
}
