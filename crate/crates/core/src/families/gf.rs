//! Arithmetic tables for the small finite fields behind the projective
//! constructions. Supports GF(p) for prime p plus GF(8) and GF(9).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::GroupError;

pub struct Gf {
    pub q: usize,
    p: usize,
    k: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

impl Gf {
    pub fn new(q: usize) -> Result<Gf, GroupError> {
        let (p, k, reduction): (usize, usize, Vec<usize>) = match q {
            8 => (2, 3, vec![1, 1, 0]), // t^3 = t + 1
            9 => (3, 2, vec![2, 0]),    // t^2 = -1
            _ if is_prime(q) => (q, 1, vec![]),
            _ => return Err(GroupError::Invalid(format!("unsupported field size {q}"))),
        };
        let digits = |mut x: usize| -> Vec<usize> {
            let mut d = vec![0; k];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let pack = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &v| acc * p + v) };
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = pack(&sum);
                // schoolbook product, then reduce powers >= k
                let mut prod = vec![0usize; 2 * k - 1];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for deg in (k..prod.len()).rev() {
                    let coeff = prod[deg];
                    if coeff == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &r) in reduction.iter().enumerate() {
                        prod[deg - k + i] = (prod[deg - k + i] + coeff * r) % p;
                    }
                }
                mul[a * q + b] = pack(&prod[..k]);
            }
        }
        Ok(Gf { q, p, k, add, mul })
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q)
            .find(|&b| self.add(a, b) == 0)
            .expect("negation exists")
    }

    pub fn inverse(&self, a: usize) -> usize {
        assert!(a != 0, "zero has no inverse");
        (0..self.q)
            .find(|&b| self.mul(a, b) == 1)
            .expect("inverse exists")
    }

    /// Multiplicative order of `a != 0`.
    pub fn mult_order(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != 1 {
            acc = self.mul(acc, a);
            k += 1;
        }
        k
    }

    /// A fixed generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        (2..self.q)
            .chain(core::iter::once(1))
            .find(|&a| self.mult_order(a) == self.q - 1)
            .expect("multiplicative group is cyclic")
    }

    /// Additive generators: 1, t, t^2, ... for the extension degree.
    pub fn additive_basis(&self) -> Vec<usize> {
        (0..self.k).map(|i| self.p.pow(i as u32)).collect()
    }
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
