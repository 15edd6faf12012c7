//! Constructors for the group families and explicit graphs the library
//! ships with, plus the built-in certificate bundles.

pub mod bundles;
pub mod gf;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GroupError;
use crate::graph::Graph;
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::permgroup::PermGroup;
use crate::DEFAULT_ORDER_CAP;

use gf::Gf;

/// A constructed group: either a full multiplication table or a
/// generator-based permutation group for orders past the table cap.
#[derive(Clone, Debug)]
pub enum GroupInstance {
    Table(FiniteGroup),
    Perm(PermGroup),
}

impl GroupInstance {
    pub fn order(&self) -> u128 {
        match self {
            GroupInstance::Table(g) => g.order() as u128,
            GroupInstance::Perm(g) => g.order(),
        }
    }

    /// Materializes a table view, enumerating a permutation group if its
    /// order fits under `cap`.
    pub fn into_table(self, cap: usize) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupInstance::Table(g) => {
                if g.order() > cap {
                    Err(GroupError::CapExceeded {
                        what: "group materialization",
                        needed: g.order(),
                        cap,
                    })
                } else {
                    Ok(g)
                }
            }
            GroupInstance::Perm(g) => {
                let elements = g.elements(cap)?;
                FiniteGroup::from_permutations(&elements)
            }
        }
    }
}

/// Cyclic group of order `n`, elements named `1, x, x^2, ...`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let mut mul = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            mul[i * n + j] = ((i + j) % n) as u32;
        }
    }
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    FiniteGroup::from_parts(n, mul, names)
}

/// Dihedral group of degree `n` and order `2n`. Element `a + n*b` is
/// `ρ^a ι^b` with the relation `ι ρ ι = ρ^-1`.
pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 3 {
        return Err(GroupError::Invalid(format!(
            "dihedral degree must be at least 3, got {n}"
        )));
    }
    let order = 2 * n;
    let mut mul = vec![0u32; order * order];
    for a1 in 0..n {
        for b1 in 0..2 {
            let g1 = a1 + n * b1;
            for a2 in 0..n {
                for b2 in 0..2 {
                    let g2 = a2 + n * b2;
                    // rho^a1 i^b1 * rho^a2 i^b2 = rho^(a1 +- a2) i^(b1+b2)
                    let a = if b1 == 0 {
                        (a1 + a2) % n
                    } else {
                        (a1 + n - a2 % n) % n
                    };
                    let b = (b1 + b2) % 2;
                    mul[g1 * order + g2] = (a + n * b) as u32;
                }
            }
        }
    }
    let names = (0..order)
        .map(|g| {
            let (a, b) = (g % n, g / n);
            match (a, b) {
                (0, 0) => "1".to_string(),
                (1, 0) => "ρ".to_string(),
                (_, 0) => format!("ρ^{a}"),
                (0, 1) => "ι".to_string(),
                (1, 1) => "ρι".to_string(),
                (_, 1) => format!("ρ^{a}ι"),
                _ => unreachable!(),
            }
        })
        .collect();
    Ok(FiniteGroup::from_parts(order, mul, names))
}

/// Index of the reflection `ρ^a ι` in the [`dihedral`] numbering.
pub fn dihedral_reflection(n: usize, a: usize) -> usize {
    n + (a % n)
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    // lexicographic enumeration keeps the identity first
    let mut out = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        out.push(Permutation::from_images(images.clone()).expect("valid permutation"));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| images[i] < images[i + 1])
        else {
            break;
        };
        let j = (i + 1..n)
            .rev()
            .find(|&j| images[j] > images[i])
            .expect("successor");
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}

/// Symmetric group on `n` points as a table; only allowed for `n <= 7`.
pub fn symmetric_table(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > 7 {
        return Err(GroupError::Invalid(format!(
            "symmetric group table only built for 1 <= n <= 7, got {n}"
        )));
    }
    FiniteGroup::from_permutations(&all_permutations(n))
}

/// Alternating group on `n` points as a table; only allowed for `n <= 7`.
pub fn alternating_table(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > 7 {
        return Err(GroupError::Invalid(format!(
            "alternating group table only built for 1 <= n <= 7, got {n}"
        )));
    }
    let evens: Vec<Permutation> = all_permutations(n)
        .into_iter()
        .filter(Permutation::is_even)
        .collect();
    FiniteGroup::from_permutations(&evens)
}

fn symmetric_generators(n: usize) -> Vec<Permutation> {
    if n < 2 {
        return Vec::new();
    }
    let long: Vec<usize> = (1..=n).collect();
    vec![
        Permutation::from_cycles(n, &[&[1, 2]]).expect("valid"),
        Permutation::from_cycles(n, &[&long]).expect("valid"),
    ]
}

fn alternating_generators(n: usize) -> Vec<Permutation> {
    if n < 3 {
        return Vec::new();
    }
    let big: Vec<usize> = if n % 2 == 1 {
        (1..=n).collect()
    } else {
        (2..=n).collect()
    };
    vec![
        Permutation::from_cycles(n, &[&[1, 2, 3]]).expect("valid"),
        Permutation::from_cycles(n, &[&big]).expect("valid"),
    ]
}

/// Symmetric group: a table for `n <= 7`, generator-based up to degree 16.
pub fn symmetric(n: usize) -> Result<GroupInstance, GroupError> {
    if n == 0 || n > 16 {
        return Err(GroupError::Invalid(format!(
            "symmetric degree must be in 1..=16, got {n}"
        )));
    }
    if n <= 7 {
        return Ok(GroupInstance::Table(symmetric_table(n)?));
    }
    Ok(GroupInstance::Perm(PermGroup::new(
        n,
        symmetric_generators(n),
    )?))
}

/// Alternating group: a table for `n <= 7`, generator-based up to degree 16.
pub fn alternating(n: usize) -> Result<GroupInstance, GroupError> {
    if n == 0 || n > 16 {
        return Err(GroupError::Invalid(format!(
            "alternating degree must be in 1..=16, got {n}"
        )));
    }
    if n <= 7 {
        return Ok(GroupInstance::Table(alternating_table(n)?));
    }
    Ok(GroupInstance::Perm(PermGroup::new(
        n,
        alternating_generators(n),
    )?))
}

/// PSL(2, q) acting on the `q + 1` points of the projective line,
/// built from translations, a square scaling and the inversion. The
/// order is validated against `q(q^2 - 1)/gcd(2, q - 1)`.
pub fn psl2(q: usize) -> Result<PermGroup, GroupError> {
    if ![5, 7, 8, 9, 11, 13].contains(&q) {
        return Err(GroupError::Invalid(format!(
            "psl2 parameter must be one of 5, 7, 8, 9, 11, 13, got {q}"
        )));
    }
    let field = Gf::new(q)?;
    let infinity = q;
    let mut gens = Vec::new();
    // z -> z + b for each basis element b
    for b in field.additive_basis() {
        let mut images: Vec<usize> = (0..=q)
            .map(|z| {
                if z == infinity {
                    infinity
                } else {
                    field.add(z, b)
                }
            })
            .collect();
        images[infinity] = infinity;
        gens.push(Permutation::from_images(images)?);
    }
    // z -> λ^2 z for a primitive λ
    let lambda = field.primitive_element();
    let square = field.mul(lambda, lambda);
    let scaling: Vec<usize> = (0..=q)
        .map(|z| {
            if z == infinity {
                infinity
            } else {
                field.mul(square, z)
            }
        })
        .collect();
    gens.push(Permutation::from_images(scaling)?);
    // z -> -1/z
    let inversion: Vec<usize> = (0..=q)
        .map(|z| {
            if z == infinity {
                0
            } else if z == 0 {
                infinity
            } else {
                field.neg(field.inverse(z))
            }
        })
        .collect();
    gens.push(Permutation::from_images(inversion)?);

    let group = PermGroup::new(q + 1, gens)?;
    let expected = (q * (q * q - 1) / if q.is_multiple_of(2) { 1 } else { 2 }) as u128;
    if group.order() != expected {
        return Err(GroupError::Internal("projective group order mismatch"));
    }
    Ok(group)
}

/// Elementary abelian group of order `p^k` with generators named
/// `x1..xk`; element index is the little-endian digit vector.
pub fn elementary_abelian(p: usize, k: usize) -> FiniteGroup {
    let n = p.pow(k as u32);
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; k];
        for slot in d.iter_mut() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        let da = digits(a);
        for b in 0..n {
            let db = digits(b);
            let mut packed = 0;
            for i in (0..k).rev() {
                packed = packed * p + (da[i] + db[i]) % p;
            }
            mul[a * n + b] = packed as u32;
        }
    }
    let names = (0..n)
        .map(|a| {
            let d = digits(a);
            let parts: Vec<String> = d
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{e}", i + 1)
                    }
                })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("·")
            }
        })
        .collect();
    FiniteGroup::from_parts(n, mul, names)
}

/// Klein four-group with elements named `1, h1, h2, h3`.
pub fn klein() -> FiniteGroup {
    let mut group = elementary_abelian(2, 2);
    group.set_names(vec![
        "1".to_string(),
        "h1".to_string(),
        "h2".to_string(),
        "h3".to_string(),
    ]);
    group
}

/// The rank-three elementary abelian `p`-group extended by the Klein
/// four-group, each involution inverting two of the three coordinates.
/// Returns the group and the five elements forming its built-in 5-hole.
pub fn c2c2_p3(p: usize) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
    if p < 3 || !gf::is_prime(p) {
        return Err(GroupError::Invalid(format!(
            "parameter must be an odd prime, got {p}"
        )));
    }
    if p > 7 {
        return Err(GroupError::CapExceeded {
            what: "p-cube extension order",
            needed: 4 * p * p * p,
            cap: 4 * 7 * 7 * 7,
        });
    }
    let cube = elementary_abelian(p, 3);
    let four = klein();
    let nn = cube.order();
    let digits = |mut x: usize| -> [usize; 3] {
        let mut d = [0; 3];
        for slot in d.iter_mut() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let pack = |d: [usize; 3]| -> usize { d[2] * p * p + d[1] * p + d[0] };
    // signs[h][coordinate]: whether involution h inverts that coordinate
    let signs = [
        [false; 3],
        [false, true, true],
        [true, false, true],
        [true, true, false],
    ];
    let mut action = Vec::with_capacity(4);
    for sign in signs {
        let table: Vec<usize> = (0..nn)
            .map(|x| {
                let mut d = digits(x);
                for (i, &flip) in sign.iter().enumerate() {
                    if flip && d[i] != 0 {
                        d[i] = p - d[i];
                    }
                }
                pack(d)
            })
            .collect();
        action.push(table);
    }
    let group = FiniteGroup::semidirect_product(&cube, &four, &action, DEFAULT_ORDER_CAP)?;
    // (x1 h1, x2 x3 h2, x1 x3 h3, x1^2 x2 h2, x2 x3 h3)
    let vertex = |d: [usize; 3], h: usize| pack(d) * 4 + h;
    let hole = vec![
        vertex([1, 0, 0], 1),
        vertex([0, 1, 1], 2),
        vertex([1, 0, 1], 3),
        vertex([2, 1, 0], 2),
        vertex([0, 1, 1], 3),
    ];
    Ok((group, hole))
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Chinese remainder solver for pairwise coprime moduli.
fn crt(residues: &[(i128, i128)]) -> i128 {
    let mut x = 0i128;
    let mut modulus = 1i128;
    for &(r, m) in residues {
        let (g, p, _) = egcd(modulus, m);
        debug_assert_eq!(g, 1);
        let diff = (r - x).rem_euclid(m);
        x += modulus * ((p * diff).rem_euclid(m));
        modulus *= m;
        x = x.rem_euclid(modulus);
    }
    x
}

/// Five reflections of the dihedral group of degree `n = p*q*r*k`
/// forming a 5-hole. The residue systems are solved with the minimal
/// parameter choice so the output is reproducible; two reflections
/// `ρ^a ι`, `ρ^b ι` generate the group exactly when `gcd(a - b, n) = 1`,
/// and the solved exponents realize the 5-cycle adjacency pattern.
/// Returns the dihedral group and the five element indices.
pub fn dihedral_reflection_hole(
    p: usize,
    q: usize,
    r: usize,
    k: usize,
) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
    for prime in [p, q, r] {
        if prime < 3 || !gf::is_prime(prime) {
            return Err(GroupError::Invalid(format!("{prime} is not an odd prime")));
        }
    }
    if p == q || p == r || q == r {
        return Err(GroupError::Invalid(
            "the three primes must be distinct".into(),
        ));
    }
    if k == 0
        || k.is_multiple_of(2)
        || k.is_multiple_of(p)
        || k.is_multiple_of(q)
        || k.is_multiple_of(r)
    {
        return Err(GroupError::Invalid(format!(
            "k must be odd, positive and coprime to {p}*{q}*{r}, got {k}"
        )));
    }
    let n = p * q * r * k;
    let (pi, qi, ri, ki) = (p as i128, q as i128, r as i128, k as i128);
    let solve = |rp: i128, rq: i128, rr: i128| -> usize {
        let mut systems = vec![(rp, pi), (rq, qi), (rr, ri)];
        if k > 1 {
            systems.push((1, ki));
        }
        crt(&systems).rem_euclid(n as i128) as usize
    };
    let alpha1 = solve(1, 1, -1);
    let alpha2 = solve(-1, -2, 1);
    let alpha3 = solve(1, 1, 1);
    let alpha4 = solve(1, -1, -2);
    let group = dihedral(n)?;
    let mut exponent = 0usize;
    let mut hole = vec![dihedral_reflection(n, 0)];
    for alpha in [alpha1, alpha2, alpha3, alpha4] {
        exponent = (exponent + alpha) % n;
        hole.push(dihedral_reflection(n, exponent));
    }
    Ok((group, hole))
}

/// A fixed 5-hole tuple in the generating graph of S_n: hard-coded
/// tuples for n = 5, 6, 7 and formula-generated tuples above. Returns
/// the five permutations and the order of S_n.
pub fn symmetric_group_hole(n: usize) -> Result<(Vec<Permutation>, u128), GroupError> {
    if n < 5 {
        return Err(GroupError::Invalid(format!(
            "symmetric 5-holes need degree at least 5, got {n}"
        )));
    }
    let cyc = |cycles: &[&[usize]]| Permutation::from_cycles(n, cycles);
    let range = |from: usize, to: usize| -> Vec<usize> { (from..=to).collect() };
    let tuple = match n {
        5 => vec![
            cyc(&[&[1, 2, 3, 4, 5]])?,
            cyc(&[&[2, 4]])?,
            cyc(&[&[1, 2, 3, 5, 4]])?,
            cyc(&[&[2, 4, 5, 3]])?,
            cyc(&[&[1, 2, 4, 5]])?,
        ],
        6 => vec![
            cyc(&[&[1, 3, 2, 4]])?,
            cyc(&[&[3, 4, 6, 5]])?,
            cyc(&[&[1, 2, 3, 4, 5]])?,
            cyc(&[&[1, 3, 4, 6]])?,
            cyc(&[&[2, 3, 4, 5, 6]])?,
        ],
        7 => vec![
            cyc(&[&[1, 5, 4, 7, 2, 3]])?,
            cyc(&[&[2, 6, 5, 7, 3, 4]])?,
            cyc(&[&[1, 2, 3, 4, 5, 7, 6]])?,
            cyc(&[&[4, 5]])?,
            cyc(&[&[1, 2, 3, 4, 5, 6, 7]])?,
        ],
        _ if n.is_multiple_of(2) => vec![
            cyc(&[&range(1, n - 2)])?,
            cyc(&[&range(3, n)])?,
            cyc(&[&range(1, n - 1)])?,
            cyc(&[&[1, 3, 4, n]])?,
            cyc(&[&range(2, n)])?,
        ],
        _ => vec![
            cyc(&[&range(1, n - 3)])?,
            cyc(&[&range(4, n)])?,
            cyc(&[&range(1, n - 2)])?,
            // the 6-cycle must move the top point: its pair with
            // (1..n-2) has to be transitive
            cyc(&[&[1, 2, 4, 5, n - 1, n]])?,
            cyc(&[&range(3, n)])?,
        ],
    };
    let order: u128 = (1..=n as u128).product();
    Ok((tuple, order))
}

/// A fixed 5-hole tuple in the generating graph of A_n: a hard-coded
/// tuple for n = 6 and formula-generated tuples otherwise
/// (odd n >= 5, even n >= 8).
pub fn alternating_group_hole(n: usize) -> Result<(Vec<Permutation>, u128), GroupError> {
    if n < 5 {
        return Err(GroupError::Invalid(format!(
            "alternating 5-holes need degree at least 5, got {n}"
        )));
    }
    let cyc = |cycles: &[&[usize]]| Permutation::from_cycles(n, cycles);
    let with_tail = |head: &[usize], tail_from: usize| -> Vec<usize> {
        head.iter().copied().chain(tail_from..=n).collect()
    };
    let tuple = match n {
        6 => vec![
            cyc(&[&[1, 2, 3, 4, 5]])?,
            cyc(&[&[1, 3], &[5, 6]])?,
            cyc(&[&[1, 2, 4, 5, 6]])?,
            cyc(&[&[1, 4, 2, 3, 5]])?,
            cyc(&[&[1, 2, 6]])?,
        ],
        _ if n % 2 == 1 => vec![
            cyc(&[&with_tail(&[1, 2, 3], 6)])?,
            cyc(&[&with_tail(&[2, 4, 5], 6)])?,
            cyc(&[&with_tail(&[1, 3, 5], 6)])?,
            cyc(&[&with_tail(&[2, 3, 4], 6)])?,
            cyc(&[&with_tail(&[1, 4, 5], 6)])?,
        ],
        _ => vec![
            cyc(&[&with_tail(&[1, 2, 3, 4, 5], 9)])?,
            cyc(&[&with_tail(&[1, 3, 6, 7, 8], 9)])?,
            cyc(&[&with_tail(&[2, 7, 8, 4, 5], 9)])?,
            cyc(&[&with_tail(&[1, 6, 3, 4, 5], 9)])?,
            cyc(&[&with_tail(&[1, 2, 6, 7, 8], 9)])?,
        ],
    };
    let order: u128 = (1..=n as u128).product::<u128>() / 2;
    Ok((tuple, order))
}

/// Graph on the subsets of `{1..n}`, two subsets adjacent exactly when
/// their union is everything.
pub fn delta_graph(n: usize) -> Result<Graph, GroupError> {
    if n == 0 || n > 16 {
        return Err(GroupError::Invalid(format!(
            "subset-union graph needs 1 <= n <= 16, got {n}"
        )));
    }
    let size = 1usize << n;
    let full = size - 1;
    let mut graph = Graph::new(size);
    // neighbours of a are exactly rest | s for s a subset of a, where
    // rest is a's complement; enumerating subsets costs 3^n overall
    // instead of 4^n
    for a in 0..size {
        let rest = full & !a;
        let mut s = a;
        loop {
            let b = rest | s;
            if b > a {
                graph.add_edge(a, b);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & a;
        }
    }
    let labels = (0..size)
        .map(|mask| {
            let members: Vec<String> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    graph.set_labels(labels);
    Ok(graph)
}

/// Vertex index of a subset (1-based members) in [`delta_graph`].
pub fn delta_vertex(members: &[usize]) -> usize {
    members.iter().fold(0, |mask, &m| mask | 1 << (m - 1))
}

/// The paw: a triangle `x1 x2 x3` with a pendant vertex `x4` on `x3`.
pub fn paw_graph() -> Graph {
    let mut g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]);
    g.set_labels(vec!["x1".into(), "x2".into(), "x3".into(), "x4".into()]);
    g
}

/// Complete graph on `n` vertices labelled `y1..yn`.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g.set_labels((0..n).map(|i| format!("y{}", i + 1)).collect());
    g
}

/// The deterministic catalogue of table groups of order at most
/// `max_order`: cyclic, dihedral, small symmetric/alternating groups,
/// two-factor cyclic products, and the p-cube extensions that fit.
/// Each entry carries the spec string that rebuilds it.
pub fn builtin_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    for n in 1..=max_order {
        out.push((format!("cyclic:{n}"), cyclic(n)));
    }
    let mut n = 3;
    while 2 * n <= max_order {
        out.push((format!("dihedral:{n}"), dihedral(n).expect("degree >= 3")));
        n += 1;
    }
    for d in 3..=7usize {
        let order: usize = (1..=d).product();
        if order <= max_order {
            out.push((
                format!("sym:{d}"),
                symmetric_table(d).expect("small degree"),
            ));
        }
        if d >= 4 && order / 2 <= max_order {
            out.push((
                format!("alt:{d}"),
                alternating_table(d).expect("small degree"),
            ));
        }
    }
    for a in 2..=max_order {
        if a * a > max_order {
            break;
        }
        for b in a..=max_order / a {
            let product =
                FiniteGroup::direct_product(&cyclic(a), &cyclic(b), max_order).expect("under cap");
            out.push((format!("product:cyclic:{a},cyclic:{b}"), product));
        }
    }
    for p in [3, 5, 7] {
        if 4 * p * p * p <= max_order {
            let (group, _) = c2c2_p3(p).expect("small odd prime");
            out.push((format!("c2c2p3:{p}"), group));
        }
    }
    out
}
