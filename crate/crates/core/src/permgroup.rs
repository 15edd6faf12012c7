//! Generator-based permutation groups with base-and-strong-generating-set
//! order computation.
//!
//! Groups too large to lay out as multiplication tables (S_12, PSL2(11)
//! acting on 12 points, ...) are handled here: the only queries they
//! need to answer are "what is the order" and "does this set of
//! permutations generate a group of that order".

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GroupError;
use crate::perm::Permutation;

/// One level of a stabilizer chain: the base point, the generators of
/// the current stabilizer candidate, and a transversal mapping each
/// orbit point to a group element carrying the base point there.
#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(degree: usize, point: usize) -> Self {
        Level {
            point,
            gens: Vec::new(),
            transversal: vec![None; degree],
            orbit: Vec::new(),
        }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit.clear();
        self.orbit.push(self.point);
        let mut qi = 0;
        while qi < self.orbit.len() {
            let beta = self.orbit[qi];
            qi += 1;
            let rep = self.transversal[beta].clone().expect("orbit point has rep");
            for s in &self.gens {
                let gamma = s.apply(beta);
                if self.transversal[gamma].is_none() {
                    self.transversal[gamma] = Some(rep.then(s));
                    self.orbit.push(gamma);
                }
            }
        }
    }
}

/// Deterministic Schreier-Sims stabilizer chain.
#[derive(Clone, Debug)]
struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn build(degree: usize, input_gens: &[Permutation]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        let mut seed: Vec<Permutation> = Vec::new();
        for g in input_gens {
            if !g.is_identity() && !seed.contains(g) {
                seed.push(g.clone());
            }
        }
        if seed.is_empty() {
            return chain;
        }
        let point = seed
            .iter()
            .filter_map(Permutation::first_moved_point)
            .min()
            .expect("non-identity generator moves a point");
        let mut level = Level::new(degree, point);
        level.gens = seed;
        chain.levels.push(level);
        chain.levels[0].rebuild_orbit(degree);
        chain.complete();
        chain
    }

    /// Walks the chain from the deepest level upward, sifting every
    /// Schreier generator. A non-trivial residue is installed as a new
    /// strong generator at the levels it stabilizes and verification
    /// resumes there. On return every level is complete, so orbit sizes
    /// multiply to the group order.
    fn complete(&mut self) {
        let mut i = self.levels.len() - 1;
        'outer: loop {
            let orbit = self.levels[i].orbit.clone();
            let gens = self.levels[i].gens.clone();
            for &beta in &orbit {
                let rep = self.levels[i].transversal[beta]
                    .clone()
                    .expect("orbit point has rep");
                for s in &gens {
                    let gamma = s.apply(beta);
                    let rep_gamma = self.levels[i].transversal[gamma]
                        .clone()
                        .expect("orbit closed under generators");
                    let schreier = rep.then(s).then(&rep_gamma.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, stuck) = self.sift_from(schreier, i + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if stuck == self.levels.len() {
                        let point = residue
                            .first_moved_point()
                            .expect("non-identity residue moves a point");
                        self.levels.push(Level::new(self.degree, point));
                    }
                    for level in self.levels[i + 1..=stuck].iter_mut() {
                        if !level.gens.contains(&residue) {
                            level.gens.push(residue.clone());
                        }
                        level.rebuild_orbit(self.degree);
                    }
                    i = stuck;
                    continue 'outer;
                }
            }
            if i == 0 {
                return;
            }
            i -= 1;
        }
    }

    /// Reduces `g` through levels `from..`, returning the residue and
    /// the level at which reduction stopped.
    fn sift_from(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (idx, level) in self.levels.iter().enumerate().skip(from) {
            if g.is_identity() {
                return (g, idx);
            }
            let beta = g.apply(level.point);
            match &level.transversal[beta] {
                Some(rep) => g = g.then(&rep.inverse()),
                None => return (g, idx),
            }
        }
        (g, self.levels.len())
    }

    fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|level| level.orbit.len() as u128)
            .product()
    }

    fn contains(&self, p: &Permutation) -> bool {
        let (residue, _) = self.sift_from(p.clone(), 0);
        residue.is_identity()
    }
}

/// A permutation group given by generators. The order is computed at
/// construction via the stabilizer chain and kept for later queries.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: StabChain,
    order: u128,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self, GroupError> {
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let chain = StabChain::build(degree, &gens);
        let order = chain.order();
        Ok(PermGroup {
            degree,
            gens,
            chain,
            order,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.chain.contains(p)
    }

    /// Enumerates all elements, failing if the order exceeds `cap`.
    /// The result is sorted by image array, so the identity comes first.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>, GroupError> {
        if self.order > cap as u128 {
            return Err(GroupError::CapExceeded {
                what: "group element enumeration",
                needed: usize::try_from(self.order).unwrap_or(usize::MAX),
                cap,
            });
        }
        let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
        let identity = Permutation::identity(self.degree);
        seen.insert(identity.images().to_vec(), ());
        let mut queue = vec![identity];
        let mut qi = 0;
        while qi < queue.len() {
            let current = queue[qi].clone();
            qi += 1;
            for g in &self.gens {
                let next = current.then(g);
                if !seen.contains_key(next.images()) {
                    seen.insert(next.images().to_vec(), ());
                    queue.push(next);
                }
            }
        }
        Ok(seen
            .into_keys()
            .map(|images| Permutation::from_images(images).expect("closure yields bijections"))
            .collect())
    }
}

/// True iff the group generated by `gens` has exactly `target_order`
/// elements. All permutations must share a degree.
pub fn perm_generates(gens: &[Permutation], target_order: u128) -> Result<bool, GroupError> {
    let degree = match gens.first() {
        Some(g) => g.degree(),
        None => return Ok(target_order == 1),
    };
    let group = PermGroup::new(degree, gens.to_vec())?;
    Ok(group.order() == target_order)
}
