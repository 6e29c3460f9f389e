//! The bigraded dg algebra R(nu) for gl(m|1): basis elements, rewriting onto
//! them, and the differential, anti-involution and divided-power idempotents.

mod engine;
mod ops;
pub mod random;
pub mod relations;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_data::{RootConfig, Weight};

pub use engine::{Klr, Strategy};
pub use ops::{gdim, gdim_of, DividedSequence};

/// A generator: psi_k crosses positions k, k+1; y_k is a dot at position k.
/// Indices are 0-based here and 1-based in text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Psi(usize),
    Y(usize),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Psi(k) => write!(f, "psi{}", k + 1),
            Token::Y(k) => write!(f, "y{}", k + 1),
        }
    }
}

/// A product of generators applied to e(source); the rightmost token acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawWord {
    pub tokens: Vec<Token>,
    pub source: Vec<u32>,
}

impl RawWord {
    pub fn new(tokens: Vec<Token>, source: Vec<u32>) -> Result<Self> {
        let d = source.len();
        for t in &tokens {
            let ok = match *t {
                Token::Psi(k) => k + 1 < d,
                Token::Y(k) => k < d,
            };
            if !ok {
                return Err(Error::MalformedToken(format!("{t} on {d} strands")));
            }
        }
        Ok(Self { tokens, source })
    }

    /// Parses `psi1 y2^3 psi2` (spaces or `*` between tokens; `e` and `1` are ignored).
    pub fn parse(text: &str, source: Vec<u32>) -> Result<Self> {
        let mut tokens = Vec::new();
        for raw in text.split(|c: char| c.is_whitespace() || c == '*' || c == '.') {
            let tok = raw.trim();
            if tok.is_empty() || tok == "e" || tok == "1" {
                continue;
            }
            let bad = || Error::MalformedToken(tok.to_string());
            let (name, rest) = if let Some(r) = tok.strip_prefix("psi") {
                ("psi", r)
            } else if let Some(r) = tok.strip_prefix('y') {
                ("y", r)
            } else {
                return Err(bad());
            };
            let (idx, exp) = match rest.split_once('^') {
                Some((a, b)) => (a, b.parse::<u32>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let k: usize = idx.parse().map_err(|_| bad())?;
            if k == 0 || (name == "psi" && exp != 1) {
                return Err(bad());
            }
            for _ in 0..exp {
                tokens.push(if name == "psi" {
                    Token::Psi(k - 1)
                } else {
                    Token::Y(k - 1)
                });
            }
        }
        Self::new(tokens, source)
    }

    /// Sequence at the top of the word.
    pub fn target(&self) -> Vec<u32> {
        let mut s = self.source.clone();
        for t in self.tokens.iter().rev() {
            if let Token::Psi(k) = *t {
                s.swap(k, k + 1);
            }
        }
        s
    }
}

impl fmt::Display for RawWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tokens {
            write!(f, "{t} ")?;
        }
        write!(f, "e({})", join(&self.source))
    }
}

pub(crate) fn join(s: &[u32]) -> String {
    s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Basis element psi_w y^u e(source), with psi_w read off the lexicographically
/// minimal reduced word of w. `perm[r]` is the top position of the strand that
/// starts at bottom position r.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalForm {
    pub source: Vec<u32>,
    pub perm: Vec<usize>,
    pub dots: Vec<u32>,
}

impl NormalForm {
    pub fn idempotent(source: Vec<u32>) -> Self {
        let d = source.len();
        Self {
            perm: (0..d).collect(),
            dots: vec![0; d],
            source,
        }
    }

    pub fn len(&self) -> usize {
        self.source.len()
    }

    pub fn is_empty(&self) -> bool {
        self.source.is_empty()
    }

    pub fn target(&self) -> Vec<u32> {
        let mut t = vec![0; self.len()];
        for (r, &p) in self.perm.iter().enumerate() {
            t[p] = self.source[r];
        }
        t
    }

    pub fn is_identity_perm(&self) -> bool {
        self.perm.iter().enumerate().all(|(r, &p)| r == p)
    }

    pub fn crossings(&self) -> usize {
        inversions(&self.perm).len()
    }

    pub fn canonical_word(&self) -> Vec<usize> {
        canonical_word(&self.perm)
    }

    /// psi tokens of the canonical word followed by the dots.
    pub fn tokens(&self) -> Vec<Token> {
        let mut t: Vec<Token> = self.canonical_word().into_iter().map(Token::Psi).collect();
        t.extend(dot_tokens(&self.dots));
        t
    }

    pub fn raw(&self) -> RawWord {
        RawWord {
            tokens: self.tokens(),
            source: self.source.clone(),
        }
    }

    /// (deg1, deg2): crossings of two m-strands count -1 in deg1; crossings of
    /// labels a, b count -a.b in deg2; each dot on label a counts a.a.
    pub fn bidegree(&self, cfg: &RootConfig) -> (i64, i64) {
        let mut d1 = 0;
        let mut d2 = 0;
        for (k, l) in inversions(&self.perm) {
            let (a, b) = (self.source[k], self.source[l]);
            if a == cfg.m && b == cfg.m {
                d1 -= 1;
            }
            d2 -= cfg.bullet(a, b);
        }
        for (r, &u) in self.dots.iter().enumerate() {
            d2 += u as i64 * cfg.bullet(self.source[r], self.source[r]);
        }
        (d1, d2)
    }

    pub fn dot_degree(&self) -> u32 {
        self.dots.iter().sum()
    }

    pub fn record(&self, cfg: &RootConfig) -> NormalFormRecord {
        let (deg1, deg2) = self.bidegree(cfg);
        NormalFormRecord {
            source: self.source.clone(),
            perm: self.perm.iter().map(|p| p + 1).collect(),
            dots: self.dots.clone(),
            deg1,
            deg2,
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.raw())
    }
}

/// Serialized form of a basis element; `perm` is in 1-based one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalFormRecord {
    pub source: Vec<u32>,
    pub perm: Vec<usize>,
    pub dots: Vec<u32>,
    pub deg1: i64,
    pub deg2: i64,
}

pub(crate) fn dot_tokens(dots: &[u32]) -> Vec<Token> {
    let mut t = Vec::new();
    for (r, &u) in dots.iter().enumerate() {
        for _ in 0..u {
            t.push(Token::Y(r));
        }
    }
    t
}

/// Pairs (k, l), k < l, of bottom positions whose strands cross.
pub fn inversions(perm: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for k in 0..perm.len() {
        for l in k + 1..perm.len() {
            if perm[k] > perm[l] {
                out.push((k, l));
            }
        }
    }
    out
}

pub(crate) fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (r, &p) in perm.iter().enumerate() {
        inv[p] = r;
    }
    inv
}

/// Permutation of a crossing word, leftmost letter on top.
pub fn perm_of_word(word: &[usize], d: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..d).collect();
    for &a in word.iter().rev() {
        for p in perm.iter_mut() {
            if *p == a {
                *p = a + 1;
            } else if *p == a + 1 {
                *p = a;
            }
        }
    }
    perm
}

/// Lexicographically minimal reduced word: repeatedly strip the smallest left descent.
pub fn canonical_word(perm: &[usize]) -> Vec<usize> {
    let mut perm = perm.to_vec();
    let mut word = Vec::new();
    loop {
        let inv = inverse(&perm);
        let Some(k) = (0..perm.len().saturating_sub(1)).find(|&k| inv[k] > inv[k + 1]) else {
            break;
        };
        word.push(k);
        for p in perm.iter_mut() {
            if *p == k {
                *p = k + 1;
            } else if *p == k + 1 {
                *p = k;
            }
        }
    }
    word
}

/// Integer combination of basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KlrElement {
    terms: BTreeMap<NormalForm, BigInt>,
}

impl KlrElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(nf: NormalForm) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(nf, BigInt::one());
        Self { terms }
    }

    pub fn idempotent(source: Vec<u32>) -> Self {
        Self::basis(NormalForm::idempotent(source))
    }

    pub fn add_term(&mut self, nf: NormalForm, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(nf) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for (nf, v) in &other.terms {
            self.add_term(nf.clone(), &(v * c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(other, &BigInt::one());
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r.add_scaled(other, &-BigInt::one());
        r
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut r = Self::zero();
        r.add_scaled(self, c);
        r
    }

    pub fn terms(&self) -> &BTreeMap<NormalForm, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, nf: &NormalForm) -> BigInt {
        self.terms.get(nf).cloned().unwrap_or_default()
    }

    /// Common bidegree of all terms, if homogeneous.
    pub fn bidegree(&self, cfg: &RootConfig) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|nf| nf.bidegree(cfg));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn to_json(&self, cfg: &RootConfig) -> serde_json::Value {
        let v: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(nf, c)| {
                serde_json::json!({
                    "basis": nf.record(cfg),
                    "coeff": c.to_string(),
                })
            })
            .collect();
        serde_json::Value::Array(v)
    }
}

impl fmt::Display for KlrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (nf, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {nf}")?;
        }
        Ok(())
    }
}

/// All sequences of the given weight.
pub fn sequences(cfg: &RootConfig, nu: &Weight) -> Vec<Vec<u32>> {
    cfg.words(nu)
}

/// The config gl(m|1) used by the KLR side.
pub fn klr_config(m: u32) -> Result<RootConfig> {
    RootConfig::new(m, 1)
}

/// Basis elements psi_w y^u e(i) with target `target`, source `source` and
/// total dot degree at most `max_dots`.
pub fn basis_elements(source: &[u32], target: &[u32], m: u32, max_dots: u32) -> Vec<NormalForm> {
    let d = source.len();
    let mut out = Vec::new();
    for perm in permutations(d) {
        if (0..d).any(|r| target[perm[r]] != source[r]) {
            continue;
        }
        for dots in dot_vectors(source, m, max_dots) {
            out.push(NormalForm {
                source: source.to_vec(),
                perm: perm.clone(),
                dots,
            });
        }
    }
    out
}

/// Dot vectors of total degree at most `max`, zero on label m.
pub fn dot_vectors(source: &[u32], m: u32, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &l in source {
        let mut next = Vec::new();
        for v in &out {
            let used: u32 = v.iter().sum();
            let top = if l == m { 0 } else { max - used };
            for u in 0..=top {
                let mut w = v.clone();
                w.push(u);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

pub fn permutations(d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(d - 1) {
        for pos in 0..d {
            let mut q = p.clone();
            q.insert(pos, d - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_words() {
        assert_eq!(canonical_word(&[0, 1, 2]), Vec::<usize>::new());
        assert_eq!(canonical_word(&[1, 0]), vec![0]);
        let w0 = vec![2, 1, 0];
        assert_eq!(canonical_word(&w0), vec![0, 1, 0]);
        for p in permutations(4) {
            let w = canonical_word(&p);
            assert_eq!(w.len(), inversions(&p).len());
            assert_eq!(perm_of_word(&w, 4), p);
        }
    }

    #[test]
    fn parse_raw() {
        let w = RawWord::parse("psi1 y2^2 * psi2", vec![1, 2, 3]).unwrap();
        assert_eq!(
            w.tokens,
            vec![Token::Psi(0), Token::Y(1), Token::Y(1), Token::Psi(1)]
        );
        assert!(RawWord::parse("psi3", vec![1, 2, 3]).is_err());
        assert!(RawWord::parse("q2", vec![1, 2]).is_err());
        assert_eq!(w.target(), vec![3, 1, 2]);
    }
}
