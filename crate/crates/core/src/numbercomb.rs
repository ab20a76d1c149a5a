//! Integer partitions, arithmetic functions and symmetric-group characters.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Partitions order first by size, then reverse-lexicographically, so that
/// `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

/// A partition read as the conjugacy class of permutations with that cycle type.
pub type CycleType = Partition;

impl Partition {
    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// `(k)`, the single-part partition.
    pub fn single(k: u32) -> Partition {
        Partition::new(vec![k])
    }

    /// `(k, k, ..., k)` with `times` parts.
    pub fn repeated(k: u32, times: usize) -> Partition {
        Partition::new(vec![k; times])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// `(k, m_k)` pairs for every part size present, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((k, m)) if *k == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union of the parts (the cycle type of a disjoint product).
    pub fn union(&self, other: &Partition) -> Partition {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Partition(out)
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: u32) -> Partition {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    /// The partition with one copy of the part `k` removed, if present.
    pub fn without_part(&self, k: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == k)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Partition) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Partition) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Partition, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(serde::de::Error::custom(format!(
                "not a partition (must be weakly decreasing and positive): {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }
}

/// All partitions of `n`, in reverse-lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Partitions of every size `0..=n`, ordered by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions).collect()
}

/// Order of the centralizer of a permutation of cycle type `lambda`.
pub fn z_of(lambda: &Partition) -> u128 {
    lambda
        .multiplicities()
        .into_iter()
        .map(|(k, m)| (k as u128).pow(m as u32) * factorial(m))
        .product()
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn totient(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n0 = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n0 {
        if n0.is_multiple_of(p) {
            while n0.is_multiple_of(p) {
                n0 /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n0 > 1 {
        result -= result / n0;
    }
    result
}

pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of fixed points of the `k`-th power of a permutation of cycle type `lambda`.
pub fn fixed_points(k: u32, lambda: &Partition) -> usize {
    lambda
        .multiplicities()
        .into_iter()
        .filter(|(d, _)| k.is_multiple_of(*d))
        .map(|(d, m)| d as usize * m)
        .sum()
}

type CharMemo = Mutex<HashMap<(Partition, Partition), i64>>;

fn char_memo() -> &'static CharMemo {
    static MEMO: OnceLock<CharMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Irreducible character `chi^lambda` on the class `mu` (Murnaghan–Nakayama).
pub fn char_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(mn(lambda, mu))
}

fn mn(lambda: &Partition, mu: &Partition) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = char_memo().lock().unwrap().get(&key) {
        return v;
    }
    let r = mu.0[0];
    let rest = Partition(mu.0[1..].to_vec());
    let len = lambda.len() as i64;
    // beta numbers: lambda_i + (len - i), strictly decreasing
    let beta: Vec<i64> = lambda
        .0
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + len - 1 - i as i64)
        .collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        let target = b - r as i64;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (len - 1 - i as i64)) as u32)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&Partition::new(parts), &rest);
    }
    char_memo().lock().unwrap().insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    /// Euler's pentagonal-number recurrence, independent of the enumerator.
    fn partition_count(n: usize) -> u64 {
        let mut pc = vec![0i64; n + 1];
        pc[0] = 1;
        for m in 1..=n as i64 {
            let mut k = 1i64;
            let mut s = 0i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                s += sign * pc[(m - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= m {
                    s += sign * pc[(m - g2) as usize];
                }
                k += 1;
            }
            pc[m as usize] = s;
        }
        pc[n] as u64
    }

    /// Hook-length formula for the dimension of the irreducible `chi^lambda`.
    fn hook_dim(lambda: &Partition) -> u128 {
        let parts = lambda.parts();
        let conj: Vec<usize> = (0..parts.first().copied().unwrap_or(0) as usize)
            .map(|j| parts.iter().filter(|&&x| x as usize > j).count())
            .collect();
        let mut hooks: u128 = 1;
        for (i, &row) in parts.iter().enumerate() {
            for j in 0..row as usize {
                hooks *= (row as usize - j - 1 + conj[j] - i - 1 + 1) as u128;
            }
        }
        factorial(lambda.size()) / hooks
    }

    #[test]
    fn enumerates_partitions() {
        assert_eq!(partitions(0), vec![Partition::empty()]);
        assert_eq!(
            partitions(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        for n in 0..=20 {
            assert_eq!(partitions(n).len() as u64, partition_count(n), "n={n}");
        }
        assert_eq!(partitions(15).len(), 176);
        let all = partitions(7);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&p(&[1, 1, 1])), 6);
        assert_eq!(z_of(&p(&[3])), 3);
        assert_eq!(z_of(&p(&[2, 1])), 2);
        assert_eq!(z_of(&Partition::empty()), 1);
    }

    #[test]
    fn arithmetic_functions() {
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(7), -1);
        assert_eq!(totient(6), 2);
        assert_eq!(totient(1), 1);
        assert_eq!(totient(9), 6);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(30, 15), 155117520);
        assert_eq!(binomial(2, 3), 0);
    }

    #[test]
    fn fixed_point_counts() {
        assert_eq!(fixed_points(2, &p(&[2])), 2);
        assert_eq!(fixed_points(3, &p(&[3])), 3);
        // (1 2 3)(4 5)(6)(7) squared is (1 3 2)(4)(5)(6)(7)
        assert_eq!(fixed_points(2, &p(&[3, 2, 1, 1])), 4);
        for n in 0..=10 {
            for l in partitions(n) {
                assert_eq!(fixed_points(1, &l), l.multiplicity(1));
            }
        }
    }

    #[test]
    fn character_values() {
        assert_eq!(char_value(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(char_value(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(char_value(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        for mu in partitions(6) {
            assert_eq!(char_value(&p(&[6]), &mu).unwrap(), 1);
        }
        assert!(char_value(&p(&[2]), &p(&[1])).is_err());
        for n in 1..=9 {
            for l in partitions(n) {
                let d = char_value(&l, &Partition::repeated(1, n)).unwrap();
                assert_eq!(d as u128, hook_dim(&l), "{l}");
            }
        }
    }

    #[test]
    fn orthogonality_and_class_sizes() {
        for n in 1..=8 {
            let parts = partitions(n);
            for l in &parts {
                for m in &parts {
                    let mut acc = num_rational::Ratio::<i128>::from_integer(0);
                    for mu in &parts {
                        let a = char_value(l, mu).unwrap() as i128;
                        let b = char_value(m, mu).unwrap() as i128;
                        acc += num_rational::Ratio::new(a * b, z_of(mu) as i128);
                    }
                    let expected = if l == m { 1 } else { 0 };
                    assert_eq!(acc, num_rational::Ratio::from_integer(expected));
                }
            }
        }
        for n in 0..=10 {
            let total: u128 = partitions(n).iter().map(|mu| factorial(n) / z_of(mu)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn json_form() {
        let l = p(&[3, 1, 1]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[3,1,1]");
        let back: Partition = serde_json::from_str("[3,1,1]").unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
