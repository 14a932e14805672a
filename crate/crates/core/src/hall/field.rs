//! Finite fields 𝔽_q, q = p^k, by explicit arithmetic tables.

use crate::error::{Error, Result};

/// Elements are `0..q`. For k > 1 an element is the base-p digit vector of
/// a polynomial modulo a fixed irreducible of degree k.
#[derive(Clone, Debug)]
pub struct GaloisField {
    q: usize,
    p: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// Largest field order supported by the tables.
pub const MAX_ORDER: u64 = 256;

/// (p, k) with q = p^k, if q is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(Error::SizeGuard(format!("field order {q} exceeds {MAX_ORDER}")));
        }
        let (q, p, k) = (q as usize, p as usize, k as usize);
        let digits = |mut x: usize| -> Vec<usize> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let number = |d: &[usize]| d.iter().rev().fold(0, |acc, &x| acc * p + x);
        let mut add = vec![0u16; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = number(&s) as u16;
            }
        }
        // Search monic f of degree k (coefficients c_0..c_{k-1}) whose
        // quotient ring has no zero divisors.
        let mut mul = vec![0u16; q * q];
        let mut found = false;
        for fc in 0..q {
            let f = digits(fc);
            if k > 1 && f[0] == 0 {
                continue;
            }
            for a in 0..q {
                let da = digits(a);
                for b in 0..q {
                    let db = digits(b);
                    let mut prod = vec![0usize; 2 * k];
                    for i in 0..k {
                        for j in 0..k {
                            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                        }
                    }
                    for deg in (k..2 * k).rev() {
                        let c = prod[deg];
                        if c != 0 {
                            prod[deg] = 0;
                            for (i, fi) in f.iter().enumerate() {
                                let sub = (c * fi) % p;
                                prod[deg - k + i] = (prod[deg - k + i] + p - sub) % p;
                            }
                        }
                    }
                    mul[a * q + b] = number(&prod[..k]) as u16;
                }
            }
            let domain = (1..q).all(|a| (1..q).all(|b| mul[a * q + b] != 0));
            if domain {
                found = true;
                break;
            }
        }
        debug_assert!(found, "an irreducible polynomial exists for every degree");
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u16).collect();
        let inv = (0..q).map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u16 }).collect();
        Ok(GaloisField { q, p, add, mul, neg, inv })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    /// Row-reduces `rows` in place and returns the rank.
    pub fn rank(&self, rows: &mut [Vec<u16>]) -> usize {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for col in 0..ncols {
            let Some(piv) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv = self.inv(rows[rank][col]);
            for x in rows[rank].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != rank && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for j in col..ncols {
                        let s = self.mul(f, rows[rank][j]);
                        rows[i][j] = self.sub(rows[i][j], s);
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    /// Basis of the nullspace of the matrix given by `rows`.
    pub fn nullspace(&self, rows: &[Vec<u16>], ncols: usize) -> Vec<Vec<u16>> {
        let mut m: Vec<Vec<u16>> = rows.to_vec();
        let r = self.rank(&mut m);
        let mut pivots = Vec::new();
        for row in m.iter().take(r) {
            pivots.push(row.iter().position(|&x| x != 0).expect("nonzero pivot row"));
        }
        let mut basis = Vec::new();
        for free in (0..ncols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u16; ncols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = self.neg(m[i][free]);
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [2u64, 3, 4, 5, 8, 9] {
            let f = GaloisField::new(q).unwrap();
            let q = q as u16;
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
            }
        }
        assert!(GaloisField::new(6).is_err());
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(1), None);
    }
}
