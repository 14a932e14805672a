//! Partitions, strips and the coefficient polynomials used by the Pieri rules.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{poly_from_ints, rat, Poly, Var};

/// A partition stored without trailing zeros. Ordering is lexicographic on
/// the parts, which refines dominance order on partitions of equal size.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(r: usize) -> Self {
        Self::from_parts(vec![r])
    }

    /// The column partition (1^m).
    pub fn column(m: usize) -> Self {
        Partition(vec![1; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn get(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// n(λ) = Σ (i−1)λ_i.
    pub fn n(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.get(0);
        Partition((1..=first).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect())
    }

    /// m_i(λ), the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Pairs (i, m_i) with m_i > 0, by increasing i.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        let mut sa = 0;
        let mut sb = 0;
        for i in 0..self.len().max(other.len()) {
            sa += self.get(i);
            sb += other.get(i);
            if sa < sb {
                return false;
            }
        }
        sa == sb
    }

    /// Multiset union of parts (v_μ·v_ν = v_{μ∪ν}).
    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self::from_parts(v)
    }

    /// Adds one part.
    pub fn with_part(&self, r: usize) -> Partition {
        if r == 0 {
            return self.clone();
        }
        let mut v = self.0.clone();
        let pos = v.iter().position(|&p| p < r).unwrap_or(v.len());
        v.insert(pos, r);
        Partition(v)
    }

    /// Parts as an integer vector padded with zeros to length `ell`.
    pub fn padded(&self, ell: usize) -> Vec<i32> {
        let mut v: Vec<i32> = self.0.iter().map(|&p| p as i32).collect();
        v.resize(ell.max(self.len()), 0);
        v
    }

    /// ω^r_+ : parts strictly larger than r.
    pub fn parts_above(&self, r: usize) -> Partition {
        Partition(self.0.iter().copied().filter(|&p| p > r).collect())
    }

    /// ω^r_− : parts strictly smaller than r.
    pub fn parts_below(&self, r: usize) -> Partition {
        Partition(self.0.iter().copied().filter(|&p| p < r).collect())
    }

    /// All partitions of `n`, lexicographically decreasing.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `n`, by size then lexicographically.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(|k| {
            let mut v = Self::all(k);
            v.reverse();
            v
        })
        .collect()
    }

    /// All partitions of `n` with at most `len` parts.
    pub fn all_with_max_len(n: usize, len: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|p| p.len() <= len).collect()
    }
}

fn gen_partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {s:?}")));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// Column profile λ′ padded to `len`.
fn profile(p: &Partition, len: usize) -> Vec<usize> {
    let mut c = p.conjugate().0;
    c.resize(len, 0);
    c
}

/// Horizontal a-strips: `Up` lists all λ ⊇ p with λ/p a horizontal a-strip,
/// `Down` lists all ν ⊆ p with p/ν a horizontal a-strip.
pub fn horizontal_strips(p: &Partition, a: usize, dir: Direction) -> Vec<Partition> {
    let mut out = Vec::new();
    match dir {
        Direction::Up => {
            let cols = p.get(0) + a;
            let base = profile(p, cols + 1);
            let mut sigma = vec![0usize; cols];
            strips_up(&base, 0, a, &mut sigma, &mut out);
        }
        Direction::Down => {
            let base = profile(p, p.get(0) + 1);
            let mut sigma = vec![0usize; p.get(0)];
            strips_down(&base, p.get(0), a, &mut sigma, &mut out);
        }
    }
    out.sort();
    out
}

/// Chooses σ′_j ∈ {0,1} column by column so that base′ + σ′ stays a partition.
fn strips_up(base: &[usize], j: usize, left: usize, sigma: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        let cols: Vec<usize> = (0..sigma.len()).map(|i| base[i] + sigma[i]).filter(|&c| c > 0).collect();
        out.push(Partition(cols).conjugate());
        return;
    }
    if j >= sigma.len() || sigma.len() - j < left {
        return;
    }
    // leaving σ′_j = 0
    strips_up(base, j + 1, left, sigma, out);
    // σ′_j = 1 requires column j to stay ≤ column j−1 after the addition
    let ok = j == 0 || base[j - 1] + sigma[j - 1] >= base[j] + 1;
    if ok {
        sigma[j] = 1;
        strips_up(base, j + 1, left - 1, sigma, out);
        sigma[j] = 0;
    }
}

/// Columns are decided right to left so that the column to the right is
/// already final when testing whether column j may lose a box.
fn strips_down(base: &[usize], j: usize, left: usize, sigma: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        let cols: Vec<usize> = (0..sigma.len()).map(|i| base[i] - sigma[i]).filter(|&c| c > 0).collect();
        out.push(Partition(cols).conjugate());
        return;
    }
    if j == 0 || j < left {
        return;
    }
    let c = j - 1;
    strips_down(base, c, left, sigma, out);
    let right = base[c + 1] - if c + 1 < sigma.len() { sigma[c + 1] } else { 0 };
    if base[c] >= 1 && base[c] - 1 >= right {
        sigma[c] = 1;
        strips_down(base, c, left - 1, sigma, out);
        sigma[c] = 0;
    }
}

/// Vertical a-strips, the conjugate picture of [`horizontal_strips`].
pub fn vertical_strips(p: &Partition, a: usize, dir: Direction) -> Vec<Partition> {
    let mut out: Vec<Partition> = horizontal_strips(&p.conjugate(), a, dir).iter().map(|x| x.conjugate()).collect();
    out.sort();
    out
}

/// λ ⊇ ν and λ′_i − ν′_i ∈ {0,1} for all i.
pub fn is_horizontal_strip(lambda: &Partition, nu: &Partition) -> bool {
    if !lambda.contains(nu) {
        return false;
    }
    (1..lambda.len()).all(|i| lambda.get(i) <= nu.get(i - 1))
}

/// λ ⊇ μ and λ_i − μ_i ∈ {0,1} for all i.
pub fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| lambda.get(i) - mu.get(i) <= 1)
}

/// σ′ = λ′ − ν′ with one trailing zero so the I/J scans can look ahead.
fn strip_profile(lambda: &Partition, nu: &Partition) -> Result<Vec<usize>> {
    if !is_horizontal_strip(lambda, nu) {
        return Err(Error::NotHorizontalStrip(format!("{lambda}/{nu}")));
    }
    let len = lambda.get(0) + 1;
    let lp = profile(lambda, len);
    let np = profile(nu, len);
    Ok(lp.iter().zip(&np).map(|(a, b)| a - b).collect())
}

fn one_minus_t_pow(k: usize) -> Poly {
    if k == 0 {
        return Poly::zero(Var::T);
    }
    let mut c = vec![0i64; k + 1];
    c[0] = 1;
    c[k] = -1;
    poly_from_ints(Var::T, &c)
}

/// φ_{λ/ν}(t) = Π_{i∈I} (1 − t^{m_i(λ)}), I = {i : σ′_i = 1, σ′_{i+1} = 0}.
pub fn phi_skew(lambda: &Partition, nu: &Partition) -> Result<Poly> {
    let s = strip_profile(lambda, nu)?;
    let mut acc = Poly::one(Var::T);
    for i in 0..s.len().saturating_sub(1) {
        if s[i] == 1 && s[i + 1] == 0 {
            acc = &acc * &one_minus_t_pow(lambda.multiplicity(i + 1));
        }
    }
    Ok(acc)
}

/// ψ_{λ/ν}(t) = Π_{j∈J} (1 − t^{m_j(ν)}), J = {j : σ′_j = 0, σ′_{j+1} = 1}.
pub fn psi_skew(lambda: &Partition, nu: &Partition) -> Result<Poly> {
    let s = strip_profile(lambda, nu)?;
    let mut acc = Poly::one(Var::T);
    for j in 0..s.len().saturating_sub(1) {
        if s[j] == 0 && s[j + 1] == 1 {
            acc = &acc * &one_minus_t_pow(nu.multiplicity(j + 1));
        }
    }
    Ok(acc)
}

/// φ_r(t) = (1−t)(1−t²)⋯(1−t^r).
pub fn phi_r(r: usize) -> Poly {
    let mut acc = Poly::one(Var::T);
    for k in 1..=r {
        acc = &acc * &one_minus_t_pow(k);
    }
    acc
}

/// b_λ(t) = Π_i φ_{m_i(λ)}(t).
pub fn b_lambda(lambda: &Partition) -> Poly {
    let mut acc = Poly::one(Var::T);
    for (_, m) in lambda.multiplicities() {
        acc = &acc * &phi_r(m);
    }
    acc
}

/// Gaussian binomial [n r]_+(t); zero for r < 0, r > n, or n < 0.
pub fn gauss_binom_plus(n: i64, r: i64) -> Poly {
    if r < 0 || n < 0 || r > n {
        return Poly::zero(Var::T);
    }
    let (n, r) = (n as usize, r as usize);
    let den = &phi_r(r) * &phi_r(n - r);
    phi_r(n).div_exact(&den).expect("Gaussian binomials are polynomials")
}

/// f^λ_{μ,(1^m)}(t) = Π_i [λ′_i − λ′_{i+1}, λ′_i − μ′_i]_+(t) when λ/μ is a
/// vertical m-strip, else 0.
pub fn f_vertical(mu: &Partition, m: usize, lambda: &Partition) -> Poly {
    if !is_vertical_strip(lambda, mu) || lambda.size() != mu.size() + m {
        return Poly::zero(Var::T);
    }
    let len = lambda.get(0) + 1;
    let lp = profile(lambda, len);
    let mp = profile(mu, len);
    let mut acc = Poly::one(Var::T);
    for i in 0..len - 1 {
        let top = lp[i] as i64 - lp[i + 1] as i64;
        let bottom = lp[i] as i64 - mp[i] as i64;
        acc = &acc * &gauss_binom_plus(top, bottom);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// N^λ_{μ,r}: the number of ν with ν→μ and ν→λ horizontal strips and
/// |μ/ν| + |λ/ν| = r.
pub fn n_count(mu: &Partition, r: usize, lambda: &Partition) -> usize {
    let (m, l) = (mu.size() as i64, lambda.size() as i64);
    let d = l - m;
    if d.abs() > r as i64 || (d - r as i64).rem_euclid(2) != 0 {
        return 0;
    }
    let a = (m + r as i64 - l) / 2;
    horizontal_strips(mu, a as usize, Direction::Down)
        .into_iter()
        .filter(|nu| is_horizontal_strip(lambda, nu))
        .count()
}

/// Integer constant as a polynomial in t.
pub fn t_const(n: i64) -> Poly {
    Poly::constant(Var::T, rat(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(c: &[i64]) -> Poly {
        poly_from_ints(Var::T, c)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("[3,1]").conjugate(), p("[2,1,1]"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("[2,2]").conjugate(), p("[2,2]"));
    }

    #[test]
    fn strip_examples() {
        assert_eq!(horizontal_strips(&p("[1]"), 1, Direction::Up), vec![p("[1,1]"), p("[2]")]);
        assert_eq!(horizontal_strips(&p("[1,1]"), 1, Direction::Up), vec![p("[1,1,1]"), p("[2,1]")]);
        assert_eq!(horizontal_strips(&Partition::empty(), 3, Direction::Up), vec![p("[3]")]);
        assert_eq!(vertical_strips(&p("[1]"), 1, Direction::Down), vec![Partition::empty()]);
        assert_eq!(vertical_strips(&p("[2,1]"), 1, Direction::Down), vec![p("[1,1]"), p("[2]")]);
        assert!(vertical_strips(&p("[2]"), 2, Direction::Down).is_empty());
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(phi_skew(&p("[2,1]"), &p("[1,1]")).unwrap(), t(&[1, -1]));
        assert_eq!(psi_skew(&p("[2,1]"), &p("[1,1]")).unwrap(), t(&[1, 0, -1]));
        for r in 1..6 {
            assert!(psi_skew(&Partition::row(r), &Partition::empty()).unwrap().is_one());
        }
        assert!(phi_skew(&p("[2]"), &p("[1,1]")).is_err());
        assert_eq!(phi_r(2), &t(&[1, -1]) * &t(&[1, 0, -1]));
        assert_eq!(b_lambda(&p("[2,2,1]")), &phi_r(2) * &phi_r(1));
        assert!(b_lambda(&Partition::empty()).is_one());
        assert_eq!(gauss_binom_plus(2, 1), t(&[1, 1]));
        assert!(gauss_binom_plus(5, 0).is_one());
        assert_eq!(gauss_binom_plus(4, 2), t(&[1, 1, 2, 1, 1]));
        assert!(gauss_binom_plus(3, -1).is_zero());
        assert!(gauss_binom_plus(3, 4).is_zero());
        assert!(f_vertical(&p("[1,1]"), 1, &p("[2,1]")).is_one());
        assert_eq!(f_vertical(&p("[1]"), 1, &p("[1,1]")), t(&[1, 1]));
        assert!(f_vertical(&p("[3,1]"), 0, &p("[3,1]")).is_one());
    }

    #[test]
    fn n_count_examples() {
        assert_eq!(n_count(&p("[1]"), 1, &p("[2]")), 1);
        assert_eq!(n_count(&p("[1]"), 2, &p("[1]")), 1);
        assert_eq!(n_count(&p("[2,1]"), 2, &p("[2,1,1,1]")), 0);
    }

    #[test]
    fn partition_text_round_trip() {
        for s in ["[]", "[3,1,1]", "[4]"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }
}
