//! Index sets, parities, the bullet form and positive roots of gl(m|n).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootConfig {
    pub m: u32,
    pub n: u32,
}

impl RootConfig {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Domain(format!("need m, n >= 1, got m={m} n={n}")));
        }
        Ok(Self { m, n })
    }

    /// Largest index, m + n - 1.
    pub fn rank(&self) -> u32 {
        self.m + self.n - 1
    }

    pub fn indices(&self) -> impl Iterator<Item = u32> {
        1..=self.rank()
    }

    pub fn check(&self, i: u32) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange {
                index: i,
                max: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// i in I' = {1, ..., m-1}
    pub fn in_prime(&self, i: u32) -> bool {
        i >= 1 && i < self.m
    }

    /// i in I'' = {m+1, ..., m+n-1}
    pub fn in_dprime(&self, i: u32) -> bool {
        i > self.m && i <= self.rank()
    }

    pub fn is_odd(&self, i: u32) -> bool {
        i == self.m
    }

    pub fn parity(&self, i: u32) -> u8 {
        u8::from(i == self.m)
    }

    pub fn try_bullet(&self, i: u32, j: u32) -> Result<i64> {
        self.check(i)?;
        self.check(j)?;
        Ok(self.bullet(i, j))
    }

    /// The bullet form on simple roots. Indices must be in range.
    pub fn bullet(&self, i: u32, j: u32) -> i64 {
        debug_assert!(self.check(i).is_ok() && self.check(j).is_ok());
        if i == j {
            if self.in_prime(i) {
                2
            } else if self.in_dprime(i) {
                -2
            } else {
                0
            }
        } else if i.abs_diff(j) == 1 {
            if self.in_prime(i) || self.in_prime(j) {
                -1
            } else {
                1
            }
        } else {
            0
        }
    }

    pub fn bullet_ext(&self, a: &Weight, b: &Weight) -> i64 {
        let mut s = 0;
        for (&i, &x) in &a.0 {
            for (&j, &y) in &b.0 {
                s += (x as i64) * (y as i64) * self.bullet(i, j);
            }
        }
        s
    }

    pub fn word_parity(&self, w: &[u32]) -> u8 {
        (w.iter().filter(|&&i| i == self.m).count() % 2) as u8
    }

    pub fn root_parity(&self, a: PositiveRoot) -> u8 {
        u8::from(a.start <= self.m && self.m <= a.end)
    }

    pub fn weight_parity(&self, w: &Weight) -> u8 {
        (w.get(self.m) % 2) as u8
    }

    /// Positive roots, ordered by start index then end index.
    pub fn root_order(&self) -> Vec<PositiveRoot> {
        let r = self.rank();
        let mut v = Vec::new();
        for i in 1..=r {
            for j in i..=r {
                v.push(PositiveRoot { start: i, end: j });
            }
        }
        v
    }

    pub fn pbw_monomials(&self, nu: &Weight) -> Vec<PbwMonomial> {
        let roots = self.root_order();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.pbw_rec(&roots, 0, nu.clone(), &mut cur, &mut out);
        out
    }

    fn pbw_rec(
        &self,
        roots: &[PositiveRoot],
        k: usize,
        rest: Weight,
        cur: &mut Vec<(PositiveRoot, u32)>,
        out: &mut Vec<PbwMonomial>,
    ) {
        if rest.is_zero() {
            out.push(PbwMonomial(cur.clone()));
            return;
        }
        if k == roots.len() {
            return;
        }
        let a = roots[k];
        let cap = if self.root_parity(a) == 1 { 1 } else { u32::MAX };
        let fit = (a.start..=a.end).map(|i| rest.get(i)).min().unwrap_or(0);
        // higher exponents first: monomials listed from the PBW side
        let mut e = fit.min(cap);
        loop {
            let mut r = rest.clone();
            for i in a.start..=a.end {
                r.sub(i, e);
            }
            if e > 0 {
                cur.push((a, e));
            }
            self.pbw_rec(roots, k + 1, r, cur, out);
            if e > 0 {
                cur.pop();
            }
            if e == 0 {
                break;
            }
            e -= 1;
        }
    }

    pub fn all_weights(&self, size: u32) -> Vec<Weight> {
        let idx: Vec<u32> = self.indices().collect();
        let mut out = Vec::new();
        fn rec(idx: &[u32], k: usize, left: u32, cur: &mut Weight, out: &mut Vec<Weight>) {
            if k == idx.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            for c in (0..=left).rev() {
                cur.set(idx[k], c);
                rec(idx, k + 1, left - c, cur, out);
            }
            cur.set(idx[k], 0);
        }
        rec(&idx, 0, size, &mut Weight::zero(), &mut out);
        out
    }

    /// All words (label sequences) of the given weight, lexicographically ordered.
    pub fn words(&self, nu: &Weight) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut rest = nu.clone();
        fn rec(rest: &mut Weight, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if rest.is_zero() {
                out.push(cur.clone());
                return;
            }
            let keys: Vec<u32> = rest.0.keys().copied().collect();
            for i in keys {
                rest.sub(i, 1);
                cur.push(i);
                rec(rest, cur, out);
                cur.pop();
                rest.add(i, 1);
            }
        }
        rec(&mut rest, &mut cur, &mut out);
        out
    }
}

/// Finitely supported multiplicity vector in N[I]; zero entries are not stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(pub BTreeMap<u32, u32>);

impl Weight {
    pub fn zero() -> Self {
        Self(BTreeMap::new())
    }

    pub fn of_word(w: &[u32]) -> Self {
        let mut r = Self::zero();
        for &i in w {
            r.add(i, 1);
        }
        r
    }

    pub fn of_root(a: PositiveRoot) -> Self {
        Self::of_word(&(a.start..=a.end).collect::<Vec<_>>())
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut r = Self::zero();
        for &(i, c) in pairs {
            r.add(i, c);
        }
        r
    }

    pub fn get(&self, i: u32) -> u32 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: u32, c: u32) {
        if c == 0 {
            self.0.remove(&i);
        } else {
            self.0.insert(i, c);
        }
    }

    pub fn add(&mut self, i: u32, c: u32) {
        let v = self.get(i) + c;
        self.set(i, v);
    }

    pub fn sub(&mut self, i: u32, c: u32) {
        let v = self.get(i).checked_sub(c).expect("weight underflow");
        self.set(i, v);
    }

    pub fn plus(&self, other: &Weight) -> Weight {
        let mut r = self.clone();
        for (&i, &c) in &other.0 {
            r.add(i, c);
        }
        r
    }

    pub fn size(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Parse `i:mult,i:mult`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut r = Self::zero();
        if s.trim().is_empty() {
            return Ok(r);
        }
        for part in s.split(',') {
            let (i, c) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("weight entry {part:?} is not i:mult")))?;
            let i: u32 = i
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad index {i:?}")))?;
            let c: u32 = c
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity {c:?}")))?;
            r.add(i, c);
        }
        Ok(r)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(i, c)| format!("{i}:{c}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight({self})")
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(u32, u32)> = self.0.iter().map(|(a, b)| (*a, *b)).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<(u32, u32)> = Vec::deserialize(d)?;
        Ok(Weight::from_pairs(&v))
    }
}

/// alpha_start + ... + alpha_end
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PositiveRoot {
    pub start: u32,
    pub end: u32,
}

impl PositiveRoot {
    pub fn new(start: u32, end: u32) -> Self {
        assert!(start <= end, "root needs start <= end");
        Self { start, end }
    }

    pub fn simple(i: u32) -> Self {
        Self { start: i, end: i }
    }

    pub fn len(&self) -> u32 {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{}..{}]", self.start, self.end)
    }
}

/// Exponents of an ordered PBW monomial, in root order, zero exponents omitted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PbwMonomial(pub Vec<(PositiveRoot, u32)>);

impl PbwMonomial {
    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero();
        for &(a, e) in &self.0 {
            for i in a.start..=a.end {
                w.add(i, e);
            }
        }
        w
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(a, e)| {
                if *e == 1 {
                    a.to_string()
                } else {
                    format!("{a}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bullet_values() {
        let c = RootConfig::new(2, 1).unwrap();
        assert_eq!(c.bullet(1, 1), 2);
        assert_eq!(c.bullet(2, 2), 0);
        assert_eq!(c.bullet(1, 2), -1);
        let c = RootConfig::new(2, 2).unwrap();
        assert_eq!(c.bullet(2, 3), 1);
        assert_eq!(c.bullet(3, 3), -2);
        assert_eq!(c.bullet(1, 3), 0);
        assert!(c.try_bullet(0, 1).is_err());
        assert!(c.try_bullet(1, 4).is_err());
    }

    #[test]
    fn parities() {
        let c = RootConfig::new(2, 2).unwrap();
        assert_eq!(c.parity(2), 1);
        assert_eq!(c.root_parity(PositiveRoot::new(1, 3)), 1);
        assert_eq!(c.word_parity(&[]), 0);
    }

    #[test]
    fn root_order_and_monomials() {
        let c = RootConfig::new(2, 1).unwrap();
        assert_eq!(
            c.root_order(),
            vec![PositiveRoot::new(1, 1), PositiveRoot::new(1, 2), PositiveRoot::new(2, 2)]
        );
        let nu = Weight::from_pairs(&[(1, 1), (2, 1)]);
        assert_eq!(c.pbw_monomials(&nu).len(), 2);
        assert!(c.pbw_monomials(&Weight::from_pairs(&[(2, 2)])).is_empty());
    }

    #[test]
    fn weight_parse() {
        let w = Weight::parse("1:1,2:1").unwrap();
        assert_eq!(w.size(), 2);
        assert_eq!(w.to_string(), "1:1,2:1");
        assert!(Weight::parse("1-1").is_err());
    }
}
