//! Finite-field oracles: submodule counting in ⊕_i 𝔽_q[x]/(x^{λ_i}) and
//! direct counting of module homomorphisms.

use std::collections::BTreeMap;

use super::field::GaloisField;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Default bound on q^{dim} for every enumeration.
pub const DEFAULT_GUARD: u64 = 1 << 20;

/// The module of type λ over 𝔽_q with basis e_{i,k} = x^k·(generator i).
struct Nilpotent {
    n: usize,
    /// x(e_j) = e_{shift[j]}, or 0 at the bottom of a block.
    shift: Vec<Option<usize>>,
    /// k for the basis vector e_{i,k}.
    level: Vec<usize>,
}

impl Nilpotent {
    fn new(lambda: &Partition) -> Self {
        let mut shift = Vec::new();
        let mut level = Vec::new();
        for &part in lambda.parts() {
            let start = shift.len();
            for k in 0..part {
                shift.push(if k + 1 < part { Some(start + k + 1) } else { None });
                level.push(k);
            }
        }
        Nilpotent { n: shift.len(), shift, level }
    }

    fn apply(&self, v: &[u16]) -> Vec<u16> {
        let mut w = vec![0u16; self.n];
        for (j, &c) in v.iter().enumerate() {
            if c != 0 {
                if let Some(t) = self.shift[j] {
                    w[t] = c;
                }
            }
        }
        w
    }
}

fn check_guard(q: u64, dim: usize, guard: u64) -> Result<()> {
    let mut size: u64 = 1;
    for _ in 0..dim {
        size = size.saturating_mul(q);
        if size > guard {
            return Err(Error::SizeGuard(format!("q^{dim} with q = {q} exceeds {guard}")));
        }
    }
    Ok(())
}

/// Partition whose conjugate has parts d_0 − d_1, d_1 − d_2, … for a
/// decreasing dimension sequence d.
fn type_from_dims(dims: &[usize]) -> Partition {
    let conj: Vec<usize> = dims.windows(2).map(|w| w[0] - w[1]).filter(|&x| x > 0).collect();
    Partition::from_parts(conj).conjugate()
}

fn reduce_against(f: &GaloisField, w: &mut [u16], rows: &[Vec<u16>], pivots: &[usize]) {
    for (row, &p) in rows.iter().zip(pivots) {
        let c = w[p];
        if c != 0 {
            for (x, &r) in w.iter_mut().zip(row) {
                if r != 0 {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
    }
}

/// Visits every x-stable subspace of dimension `dim` as (quotient type,
/// submodule type).
fn for_each_submodule(
    lambda: &Partition,
    f: &GaloisField,
    dim: usize,
    mut visit: impl FnMut(Partition, Partition),
) {
    let m = Nilpotent::new(lambda);
    let n = m.n;
    let q = f.order();
    let mut pivots: Vec<usize> = (0..dim).collect();
    if dim > n {
        return;
    }
    loop {
        // free slots: (row, column) with column > pivot and not a pivot
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| ((p + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (i, c)))
            .collect();
        let mut digits = vec![0u16; free.len()];
        loop {
            let mut rows = vec![vec![0u16; n]; dim];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            for (&(i, c), &d) in free.iter().zip(&digits) {
                rows[i][c] = d;
            }
            let stable = rows.iter().all(|r| {
                let mut w = m.apply(r);
                reduce_against(f, &mut w, &rows, &pivots);
                w.iter().all(|&x| x == 0)
            });
            if stable {
                // submodule type from dim x^k L
                let mut dims = vec![dim];
                let mut cur = rows.clone();
                while *dims.last().unwrap() > 0 {
                    let mut next: Vec<Vec<u16>> = cur.iter().map(|r| m.apply(r)).collect();
                    let r = f.rank(&mut next);
                    next.truncate(r);
                    dims.push(r);
                    cur = next;
                }
                let sub = type_from_dims(&dims);
                // quotient type from dim(x^k V + L) − dim L
                let depth = lambda.get(0);
                let mut qdims = Vec::with_capacity(depth + 1);
                for k in 0..=depth {
                    let below: Vec<usize> = (0..n).filter(|&j| m.level[j] < k).collect();
                    let mut proj: Vec<Vec<u16>> = rows.iter().map(|r| below.iter().map(|&j| r[j]).collect()).collect();
                    let r = if below.is_empty() { 0 } else { f.rank(&mut proj) };
                    let xkv: usize = lambda.parts().iter().map(|&p| p.saturating_sub(k)).sum();
                    qdims.push(xkv + r - dim);
                }
                visit(type_from_dims(&qdims), sub);
            }
            // next digit assignment
            let mut i = 0;
            while i < digits.len() {
                digits[i] += 1;
                if (digits[i] as usize) < q {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
        // next pivot set in lexicographic order
        let mut i = dim;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < n - dim + i {
                pivots[i] += 1;
                for j in i + 1..dim {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
        if dim == 0 {
            return;
        }
    }
}

/// All Hall numbers G^λ_{μν}(q) for fixed λ, keyed by (μ, ν) with μ the
/// quotient type and ν the submodule type.
pub fn hall_count_table(lambda: &Partition, q: u64, guard: u64) -> Result<BTreeMap<(Partition, Partition), u64>> {
    check_guard(q, lambda.size(), guard)?;
    let f = GaloisField::new(q)?;
    let mut out = BTreeMap::new();
    for dim in 0..=lambda.size() {
        for_each_submodule(lambda, &f, dim, |quot, sub| *out.entry((quot, sub)).or_insert(0) += 1);
    }
    Ok(out)
}

/// |{L ⊆ S^{(λ)} : L ≅ S^{(ν)}, S^{(λ)}/L ≅ S^{(μ)}}| over 𝔽_q.
pub fn brute_force_hall_count(mu: &Partition, nu: &Partition, lambda: &Partition, q: u64, guard: u64) -> Result<u64> {
    check_guard(q, lambda.size(), guard)?;
    let f = GaloisField::new(q)?;
    if mu.size() + nu.size() != lambda.size() {
        return Ok(0);
    }
    let mut count = 0;
    for_each_submodule(lambda, &f, nu.size(), |quot, sub| {
        if &quot == mu && &sub == nu {
            count += 1;
        }
    });
    Ok(count)
}

/// Basis of Hom(S^{(λ)}, S^{(μ)}) as flattened matrices F (rows indexed by
/// the basis of S^{(μ)}).
fn hom_basis(lambda: &Partition, mu: &Partition, f: &GaloisField) -> (Vec<Vec<u16>>, usize, usize) {
    let a = Nilpotent::new(lambda);
    let b = Nilpotent::new(mu);
    let (na, nb) = (a.n, b.n);
    let var = |i: usize, j: usize| i * na + j;
    let mut pre = vec![None; nb];
    for (c, t) in b.shift.iter().enumerate() {
        if let Some(t) = t {
            pre[*t] = Some(c);
        }
    }
    let mut rows = Vec::new();
    for i in 0..nb {
        for j in 0..na {
            // (F·X_λ)[i][j] − (X_μ·F)[i][j] = 0
            let mut row = vec![0u16; na * nb];
            if let Some(t) = a.shift[j] {
                row[var(i, t)] = f.add(row[var(i, t)], 1);
            }
            if let Some(c) = pre[i] {
                row[var(c, j)] = f.sub(row[var(c, j)], 1);
            }
            if row.iter().any(|&x| x != 0) {
                rows.push(row);
            }
        }
    }
    (f.nullspace(&rows, na * nb), na, nb)
}

/// dim_{𝔽_q} Hom(S^{(λ)}, S^{(μ)}) by solving F·X_λ = X_μ·F.
pub fn brute_force_hom_exponent(lambda: &Partition, mu: &Partition, q: u64) -> Result<usize> {
    let f = GaloisField::new(q)?;
    Ok(hom_basis(lambda, mu, &f).0.len())
}

/// |Aut(S^{(λ)})| by enumerating Hom(S^{(λ)}, S^{(λ)}) and testing invertibility.
pub fn brute_force_aut_count(lambda: &Partition, q: u64, guard: u64) -> Result<u64> {
    let f = GaloisField::new(q)?;
    let (basis, n, _) = hom_basis(lambda, lambda, &f);
    check_guard(q, basis.len(), guard)?;
    let mut digits = vec![0u16; basis.len()];
    let mut count = 0;
    loop {
        let mut m = vec![0u16; n * n];
        for (b, &d) in basis.iter().zip(&digits) {
            if d != 0 {
                for (x, &y) in m.iter_mut().zip(b) {
                    *x = f.add(*x, f.mul(d, y));
                }
            }
        }
        let mut rows: Vec<Vec<u16>> = m.chunks(n.max(1)).map(|c| c.to_vec()).collect();
        if n == 0 || f.rank(&mut rows) == n {
            count += 1;
        }
        let mut i = 0;
        while i < digits.len() {
            digits[i] += 1;
            if (digits[i] as usize) < f.order() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == digits.len() {
            break;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn counting_examples() {
        assert_eq!(brute_force_hall_count(&p("[1]"), &p("[1]"), &p("[1,1]"), 2, DEFAULT_GUARD).unwrap(), 3);
        assert_eq!(brute_force_hall_count(&p("[1]"), &p("[1]"), &p("[1,1]"), 3, DEFAULT_GUARD).unwrap(), 4);
        assert_eq!(brute_force_hall_count(&p("[1]"), &p("[1]"), &p("[2]"), 5, DEFAULT_GUARD).unwrap(), 1);
        assert_eq!(brute_force_hall_count(&p("[1]"), &p("[2]"), &p("[2]"), 2, DEFAULT_GUARD).unwrap(), 0);
        assert_eq!(brute_force_hall_count(&p("[1]"), &p("[1]"), &p("[1,1]"), 4, DEFAULT_GUARD).unwrap(), 5);
        assert!(brute_force_hall_count(&p("[1]"), &p("[1]"), &p("[1,1]"), 6, DEFAULT_GUARD).is_err());
        assert!(brute_force_hall_count(&p("[5]"), &p("[5]"), &p("[5,5]"), 7, DEFAULT_GUARD).is_err());
    }

    #[test]
    fn hom_and_aut() {
        assert_eq!(brute_force_hom_exponent(&p("[2,1]"), &p("[2]"), 2).unwrap(), 3);
        assert_eq!(brute_force_hom_exponent(&p("[1]"), &p("[1]"), 3).unwrap(), 1);
        assert_eq!(brute_force_aut_count(&p("[1,1]"), 2, DEFAULT_GUARD).unwrap(), 6);
        assert_eq!(brute_force_aut_count(&p("[1]"), 5, DEFAULT_GUARD).unwrap(), 4);
        assert_eq!(brute_force_aut_count(&Partition::empty(), 2, DEFAULT_GUARD).unwrap(), 1);
    }
}
