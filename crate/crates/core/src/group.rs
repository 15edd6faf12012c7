//! Finite groups materialized as multiplication tables.
//!
//! Elements are dense indices `0..n`, index 0 is always the identity.
//! The table view is what the generating-graph construction needs: it
//! must see every element, unlike the generator-based [`crate::permgroup`]
//! view used for large permutation groups.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::error::GroupError;
use crate::perm::Permutation;

/// A subgroup, stored as the set of its element indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    members: Bitset,
}

impl Subgroup {
    pub fn from_members(members: Bitset) -> Self {
        Subgroup { members }
    }

    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members.contains(element)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }
}

/// A finite group as an explicit Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    names: Vec<String>,
}

/// The identity element index in every [`FiniteGroup`].
pub const IDENTITY: usize = 0;

impl FiniteGroup {
    /// Builds a group from a full multiplication table, validating the
    /// group axioms. Element 0 must be the identity. Associativity is
    /// checked exhaustively for `n <= 200` and on a million fixed
    /// pseudorandom triples above that.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Invalid("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::Invalid(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &entry) in row.iter().enumerate() {
                if entry >= n {
                    return Err(GroupError::Invalid(format!(
                        "entry at row {i} column {j} is {entry}, out of range"
                    )));
                }
                mul.push(entry as u32);
            }
        }
        // identity at index 0
        for x in 0..n {
            if mul[x] as usize != x || mul[x * n] as usize != x {
                return Err(GroupError::Invalid(format!(
                    "element 0 is not an identity (fails at element {x})"
                )));
            }
        }
        // latin square
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                let r = mul[i * n + j] as usize;
                let c = mul[j * n + i] as usize;
                if row_seen[r] {
                    return Err(GroupError::Invalid(format!("row {i} repeats element {r}")));
                }
                if col_seen[c] {
                    return Err(GroupError::Invalid(format!(
                        "column {i} repeats element {c}"
                    )));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        // associativity
        let check = |a: usize, b: usize, c: usize| -> bool {
            let ab = mul[a * n + b] as usize;
            let bc = mul[b * n + c] as usize;
            mul[ab * n + c] == mul[a * n + bc]
        };
        if n <= 200 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !check(a, b, c) {
                            return Err(GroupError::Invalid(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            for _ in 0..1_000_000 {
                let a = (next() % n as u64) as usize;
                let b = (next() % n as u64) as usize;
                let c = (next() % n as u64) as usize;
                if !check(a, b, c) {
                    return Err(GroupError::Invalid(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| mul[i * n + j] == 0)
                .expect("latin square row contains identity");
            if mul[j * n + i] != 0 {
                return Err(GroupError::Invalid(format!(
                    "element {i} has no two-sided inverse"
                )));
            }
            inv[i] = j as u32;
        }
        let names = (0..n).map(|i| format!("g{i}")).collect();
        Ok(FiniteGroup { n, mul, inv, names })
    }

    /// Internal constructor for tables correct by construction.
    pub(crate) fn from_parts(n: usize, mul: Vec<u32>, names: Vec<String>) -> Self {
        debug_assert_eq!(mul.len(), n * n);
        let mut inv = vec![0u32; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| mul[i * n + j] == 0)
                .expect("every element has an inverse");
            inv[i] = j as u32;
        }
        FiniteGroup { n, mul, inv, names }
    }

    /// Builds the table of a materialized permutation group. `elements`
    /// must be closed under composition and start with the identity.
    pub fn from_permutations(elements: &[Permutation]) -> Result<Self, GroupError> {
        let n = elements.len();
        if n == 0 || !elements[0].is_identity() {
            return Err(GroupError::Invalid(
                "element list must start with the identity".into(),
            ));
        }
        let mut index: BTreeMap<&[usize], usize> = BTreeMap::new();
        for (i, p) in elements.iter().enumerate() {
            if index.insert(p.images(), i).is_some() {
                return Err(GroupError::Invalid("duplicate permutation".into()));
            }
        }
        let mut mul = vec![0u32; n * n];
        for (i, p) in elements.iter().enumerate() {
            for (j, q) in elements.iter().enumerate() {
                let product = p.then(q);
                let k = *index.get(product.images()).ok_or_else(|| {
                    GroupError::Invalid("element list is not closed under products".into())
                })?;
                mul[i * n + j] = k as u32;
            }
        }
        let names = elements.iter().map(|p| p.cycle_string()).collect();
        Ok(FiniteGroup::from_parts(n, mul, names))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn set_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.n);
        self.names = names;
    }

    pub fn power(&self, g: usize, k: usize) -> usize {
        let mut acc = IDENTITY;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    /// Least `k >= 1` with `g^k = 1`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut acc = g;
        let mut k = 1;
        while acc != IDENTITY {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    /// Smallest subgroup containing `seed`.
    pub fn closure(&self, seed: &[usize]) -> Subgroup {
        let mut members = Bitset::new(self.n);
        members.insert(IDENTITY);
        let mut queue = vec![IDENTITY];
        let mut qi = 0;
        while qi < queue.len() {
            let x = queue[qi];
            qi += 1;
            for &g in seed {
                let y = self.mul(x, g);
                if members.insert(y) {
                    queue.push(y);
                }
            }
        }
        Subgroup { members }
    }

    /// Smallest subgroup containing every member of `seed`.
    pub fn closure_of_set(&self, seed: &Bitset) -> Subgroup {
        let gens: Vec<usize> = seed.iter().collect();
        self.closure(&gens)
    }

    /// True iff `a` and `b` generate the whole group. `a == b` is
    /// allowed and then tests whether `a` generates alone.
    pub fn is_generating_pair(&self, a: usize, b: usize) -> bool {
        self.closure(&[a, b]).len() == self.n
    }

    pub fn cyclic_subgroup(&self, g: usize) -> Subgroup {
        self.closure(&[g])
    }

    /// Groups elements by the cyclic subgroup they generate: `class_of[g]`
    /// identifies `<g>` and `reps[c]` is the first generator seen for
    /// class `c`. Pair-generation verdicts depend only on these classes,
    /// which is what makes graph construction cheap.
    ///
    /// One power enumeration per distinct cyclic subgroup: the powers
    /// `g^i` with `gcd(i, ord g) = 1` generate the same subgroup and are
    /// classified in the same pass.
    pub fn cyclic_classes(&self) -> CyclicClasses {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let mut class_of = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        let mut members: Vec<Bitset> = Vec::new();
        for g in 0..self.n {
            if class_of[g] != usize::MAX {
                continue;
            }
            // powers in order: 1, g, g^2, ...
            let mut powers = Vec::new();
            let mut set = Bitset::new(self.n);
            let mut acc = IDENTITY;
            loop {
                powers.push(acc);
                set.insert(acc);
                acc = self.mul(acc, g);
                if acc == IDENTITY {
                    break;
                }
            }
            let class = reps.len();
            reps.push(g);
            members.push(set);
            let order = powers.len();
            for (i, &power) in powers.iter().enumerate() {
                if gcd(i, order) == 1 {
                    debug_assert_eq!(class_of[power], usize::MAX);
                    class_of[power] = class;
                }
            }
        }
        CyclicClasses {
            class_of,
            reps,
            members,
        }
    }

    pub fn is_subgroup(&self, set: &Bitset) -> bool {
        if !set.contains(IDENTITY) {
            return false;
        }
        for a in set.iter() {
            if !set.contains(self.inv(a)) {
                return false;
            }
            for b in set.iter() {
                if !set.contains(self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Exhaustive conjugation test: `g x g^-1` stays in `sub` for every
    /// `g` in the group.
    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        for g in 0..self.n {
            let gi = self.inv(g);
            for x in sub.iter() {
                if !sub.contains(self.mul(self.mul(g, x), gi)) {
                    return false;
                }
            }
        }
        true
    }

    /// Quotient by a normal subgroup. Cosets are numbered in order of
    /// their smallest member, so the identity coset is 0; the recorded
    /// representatives are those smallest members and are what path
    /// lifting starts from.
    pub fn quotient(&self, normal: &Subgroup) -> Result<Quotient, GroupError> {
        if !self.is_subgroup(normal.members()) {
            return Err(GroupError::NotSubgroup);
        }
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.n];
        let mut rep_of = Vec::new();
        for g in 0..self.n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let c = rep_of.len();
            rep_of.push(g);
            for x in normal.iter() {
                coset_of[self.mul(g, x)] = c;
            }
        }
        let m = rep_of.len();
        let mut mul = vec![0u32; m * m];
        for c1 in 0..m {
            for c2 in 0..m {
                mul[c1 * m + c2] = coset_of[self.mul(rep_of[c1], rep_of[c2])] as u32;
            }
        }
        let names = rep_of.iter().map(|&r| self.names[r].clone()).collect();
        Ok(Quotient {
            group: FiniteGroup::from_parts(m, mul, names),
            coset_of,
            rep_of,
            normal: normal.clone(),
        })
    }

    /// Componentwise product table on pairs `(a, b) -> a * |B| + b`.
    pub fn direct_product(
        a: &FiniteGroup,
        b: &FiniteGroup,
        cap: usize,
    ) -> Result<FiniteGroup, GroupError> {
        let n = a.n.checked_mul(b.n).ok_or(GroupError::CapExceeded {
            what: "direct product order",
            needed: usize::MAX,
            cap,
        })?;
        if n > cap {
            return Err(GroupError::CapExceeded {
                what: "direct product order",
                needed: n,
                cap,
            });
        }
        let mut mul = vec![0u32; n * n];
        for x1 in 0..a.n {
            for y1 in 0..b.n {
                let p = x1 * b.n + y1;
                for x2 in 0..a.n {
                    let ax = a.mul(x1, x2);
                    for y2 in 0..b.n {
                        let q = x2 * b.n + y2;
                        mul[p * n + q] = (ax * b.n + b.mul(y1, y2)) as u32;
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(n);
        for x in 0..a.n {
            for y in 0..b.n {
                names.push(format!("({},{})", a.names[x], b.names[y]));
            }
        }
        Ok(FiniteGroup::from_parts(n, mul, names))
    }

    /// Semidirect product `N x| H` for an action of `H` on `N` by
    /// automorphisms, given as one permutation table of `N` per element
    /// of `H`. The product convention is fixed as
    /// `(n1, h1) * (n2, h2) = (n1 * action[h1](n2), h1 * h2)`,
    /// which requires `action[h1 * h2] = action[h1] o action[h2]`; both
    /// requirements are verified.
    #[allow(clippy::needless_range_loop)]
    pub fn semidirect_product(
        normal: &FiniteGroup,
        acting: &FiniteGroup,
        action: &[Vec<usize>],
        cap: usize,
    ) -> Result<FiniteGroup, GroupError> {
        let (nn, nh) = (normal.n, acting.n);
        if action.len() != nh {
            return Err(GroupError::InvalidAction(format!(
                "need {nh} automorphism tables, got {}",
                action.len()
            )));
        }
        for (h, table) in action.iter().enumerate() {
            if table.len() != nn {
                return Err(GroupError::InvalidAction(format!(
                    "table for element {h} has wrong length"
                )));
            }
            let mut seen = vec![false; nn];
            for &img in table {
                if img >= nn || seen[img] {
                    return Err(GroupError::InvalidAction(format!(
                        "table for element {h} is not a bijection"
                    )));
                }
                seen[img] = true;
            }
            for x in 0..nn {
                for y in 0..nn {
                    if table[normal.mul(x, y)] != normal.mul(table[x], table[y]) {
                        return Err(GroupError::InvalidAction(format!(
                            "table for element {h} is not an automorphism"
                        )));
                    }
                }
            }
        }
        for h1 in 0..nh {
            for h2 in 0..nh {
                let h12 = acting.mul(h1, h2);
                for x in 0..nn {
                    if action[h12][x] != action[h1][action[h2][x]] {
                        return Err(GroupError::InvalidAction(format!(
                            "action is not a homomorphism at ({h1},{h2})"
                        )));
                    }
                }
            }
        }
        let n = nn * nh;
        if n > cap {
            return Err(GroupError::CapExceeded {
                what: "semidirect product order",
                needed: n,
                cap,
            });
        }
        let mut mul = vec![0u32; n * n];
        for x1 in 0..nn {
            for h1 in 0..nh {
                let p = x1 * nh + h1;
                for x2 in 0..nn {
                    let twisted = normal.mul(x1, action[h1][x2]);
                    for h2 in 0..nh {
                        let q = x2 * nh + h2;
                        mul[p * n + q] = (twisted * nh + acting.mul(h1, h2)) as u32;
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(n);
        for x in 0..nn {
            for h in 0..nh {
                let xn = &normal.names[x];
                let hn = &acting.names[h];
                names.push(match (xn.as_str(), hn.as_str()) {
                    ("1", "1") => "1".to_string(),
                    (_, "1") => xn.clone(),
                    ("1", _) => hn.clone(),
                    _ => format!("{xn}·{hn}"),
                });
            }
        }
        Ok(FiniteGroup::from_parts(n, mul, names))
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn center(&self) -> Subgroup {
        let mut members = Bitset::new(self.n);
        for g in 0..self.n {
            if (0..self.n).all(|x| self.mul(g, x) == self.mul(x, g)) {
                members.insert(g);
            }
        }
        Subgroup { members }
    }

    /// Subgroup generated by all commutators `[a, b]` with `a` in `left`
    /// and `b` in `right`.
    pub fn commutator_subgroup(&self, left: &Subgroup, right: &Subgroup) -> Subgroup {
        let mut seeds = Bitset::new(self.n);
        for a in left.iter() {
            let ai = self.inv(a);
            for b in right.iter() {
                let bi = self.inv(b);
                seeds.insert(self.mul(self.mul(ai, bi), self.mul(a, b)));
            }
        }
        self.closure_of_set(&seeds)
    }

    pub fn full_subgroup(&self) -> Subgroup {
        let mut members = Bitset::new(self.n);
        for g in 0..self.n {
            members.insert(g);
        }
        Subgroup { members }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        let mut members = Bitset::new(self.n);
        members.insert(IDENTITY);
        Subgroup { members }
    }

    /// Lower central series test.
    pub fn is_nilpotent(&self) -> bool {
        let full = self.full_subgroup();
        let mut current = full.clone();
        loop {
            let next = self.commutator_subgroup(&current, &full);
            if next.len() == 1 {
                return true;
            }
            if next.len() == current.len() {
                return false;
            }
            current = next;
        }
    }

    /// Derived series test.
    pub fn is_soluble(&self) -> bool {
        let mut current = self.full_subgroup();
        loop {
            let next = self.commutator_subgroup(&current, &current);
            if next.len() == 1 {
                return true;
            }
            if next.len() == current.len() {
                return false;
            }
            current = next;
        }
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.n).any(|g| self.element_order(g) == self.n)
    }

    /// True iff some pair (or single element) generates the group.
    pub fn is_two_generated(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let classes = self.cyclic_classes();
        for (i, &a) in classes.reps.iter().enumerate() {
            for &b in classes.reps.iter().skip(i) {
                if self.is_generating_pair(a, b) {
                    return true;
                }
            }
        }
        false
    }
}

/// Cyclic-subgroup classification of the elements; see
/// [`FiniteGroup::cyclic_classes`].
pub struct CyclicClasses {
    pub class_of: Vec<usize>,
    pub reps: Vec<usize>,
    pub members: Vec<Bitset>,
}

/// A quotient group together with the data needed to move between the
/// group and its cosets.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Element index -> coset index.
    pub coset_of: Vec<usize>,
    /// Coset index -> canonical (smallest) representative element.
    pub rep_of: Vec<usize>,
    pub normal: Subgroup,
}

/// Prime factors of `n` with multiplicity, in ascending order.
pub fn prime_signature(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        while m.is_multiple_of(p) {
            out.push(p);
            m /= p;
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Distinct prime divisors of `n`, ascending.
pub fn distinct_primes(n: u64) -> Vec<u64> {
    let mut sig = prime_signature(n);
    sig.dedup();
    sig
}
