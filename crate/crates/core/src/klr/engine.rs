//! Rewriting onto the basis psi_w y^u e(i).
//!
//! `BottomUp` builds a word from its rightmost token, multiplying on the left
//! and sliding new dots down to the idempotent. `TopDown` starts from the top
//! and multiplies on the right, sliding existing dots up past each new
//! crossing. The two share only the braid/commutation moves between reduced
//! words, so agreement between them is a meaningful consistency check.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;

use super::{dot_tokens, inverse, perm_of_word, KlrElement, NormalForm, RawWord, Token};
use crate::error::Result;
use crate::root_data::RootConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    BottomUp,
    TopDown,
}

pub struct Klr {
    cfg: RootConfig,
    strategy: Strategy,
    cache: RwLock<HashMap<(Token, NormalForm), KlrElement>>,
}

/// A reduced word being moved towards another reduced word of the same
/// permutation, with the lower-order terms the moves produce.
struct Moves<'a> {
    cfg: &'a RootConfig,
    source: &'a [u32],
    word: Vec<usize>,
    coef: BigInt,
    corrections: Vec<(BigInt, Vec<usize>)>,
}

impl<'a> Moves<'a> {
    fn new(cfg: &'a RootConfig, source: &'a [u32], word: Vec<usize>) -> Self {
        Self {
            cfg,
            source,
            word,
            coef: BigInt::one(),
            corrections: Vec::new(),
        }
    }

    /// Sequence just below the crossing at index t of the word.
    fn level_below(&self, t: usize) -> Vec<u32> {
        let mut s = self.source.to_vec();
        for &a in self.word[t + 1..].iter().rev() {
            s.swap(a, a + 1);
        }
        s
    }

    /// Swap distant crossings at t, t+1; they anticommute when all four strands are m.
    fn commute(&mut self, t: usize) {
        let (a, b) = (self.word[t], self.word[t + 1]);
        debug_assert!(a.abs_diff(b) > 1);
        let l = self.level_below(t + 1);
        let m = self.cfg.m;
        if [l[a], l[a + 1], l[b], l[b + 1]].iter().all(|&x| x == m) {
            self.coef = -&self.coef;
        }
        self.word.swap(t, t + 1);
    }

    /// Replace the triple at t..t+3 by the other side of the braid relation.
    fn braid(&mut self, t: usize) {
        let (x, y) = (self.word[t], self.word[t + 1]);
        debug_assert!(x.abs_diff(y) == 1 && self.word[t + 2] == x);
        let k = x.min(y);
        let l = self.level_below(t + 2);
        let m = self.cfg.m;
        let c = l[k] == l[k + 2] && self.cfg.bullet(l[k], l[k + 1]).abs() == 1 && l[k] != m;
        if c {
            let mut w = self.word[..t].to_vec();
            w.extend_from_slice(&self.word[t + 3..]);
            // psi_k psi_{k+1} psi_k = psi_{k+1} psi_k psi_{k+1} + e
            let coef = if x == k { self.coef.clone() } else { -&self.coef };
            self.corrections.push((coef, w));
        }
        self.word[t] = y;
        self.word[t + 1] = x;
        self.word[t + 2] = y;
    }

    /// Rewrite word[lo..] to begin with k, a left descent of its permutation.
    fn start_with(&mut self, lo: usize, k: usize) {
        let a = self.word[lo];
        if a == k {
            return;
        }
        self.start_with(lo + 1, k);
        if a.abs_diff(k) > 1 {
            self.commute(lo);
        } else {
            self.start_with(lo + 2, a);
            self.braid(lo);
        }
    }

    /// Rewrite word[..hi] to end with k, a right descent of its permutation.
    fn end_with(&mut self, hi: usize, k: usize) {
        let b = self.word[hi - 1];
        if b == k {
            return;
        }
        self.end_with(hi - 1, k);
        if b.abs_diff(k) > 1 {
            self.commute(hi - 2);
        } else {
            self.end_with(hi - 2, b);
            self.braid(hi - 3);
        }
    }
}

/// Psi tokens for a crossing word.
fn psis(word: &[usize]) -> impl Iterator<Item = Token> + '_ {
    word.iter().map(|&a| Token::Psi(a))
}

impl Klr {
    pub fn new(m: u32, strategy: Strategy) -> Result<Self> {
        Ok(Self {
            cfg: RootConfig::new(m, 1)?,
            strategy,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn config(&self) -> &RootConfig {
        &self.cfg
    }

    pub fn m(&self) -> u32 {
        self.cfg.m
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    /// Expansion of a raw word in the basis.
    pub fn rewrite(&self, w: &RawWord) -> KlrElement {
        self.normalize(&w.tokens, &w.source)
    }

    /// Product of two elements.
    pub fn multiply(&self, a: &KlrElement, b: &KlrElement) -> KlrElement {
        let mut out = KlrElement::zero();
        match self.strategy {
            Strategy::BottomUp => {
                for (x, c) in a.terms() {
                    let src = &x.source;
                    let mut acc = KlrElement::zero();
                    for (y, d) in b.terms() {
                        if &y.target() == src {
                            acc.add_term(y.clone(), d);
                        }
                    }
                    for t in x.tokens().into_iter().rev() {
                        acc = self.lmul_elem(t, &acc);
                    }
                    out.add_scaled(&acc, c);
                }
            }
            Strategy::TopDown => {
                for (y, d) in b.terms() {
                    let tgt = y.target();
                    let mut acc = KlrElement::zero();
                    for (x, c) in a.terms() {
                        if x.source == tgt {
                            acc.add_term(x.clone(), c);
                        }
                    }
                    for t in y.tokens() {
                        acc = self.rmul_elem(t, &acc);
                    }
                    out.add_scaled(&acc, d);
                }
            }
        }
        out
    }

    pub(crate) fn normalize(&self, tokens: &[Token], source: &[u32]) -> KlrElement {
        match self.strategy {
            Strategy::BottomUp => {
                let mut e = KlrElement::idempotent(source.to_vec());
                for &t in tokens.iter().rev() {
                    e = self.lmul_elem(t, &e);
                    if e.is_zero() {
                        break;
                    }
                }
                e
            }
            Strategy::TopDown => {
                let top = RawWord {
                    tokens: tokens.to_vec(),
                    source: source.to_vec(),
                }
                .target();
                let mut e = KlrElement::idempotent(top);
                for &t in tokens {
                    e = self.rmul_elem(t, &e);
                    if e.is_zero() {
                        break;
                    }
                }
                e
            }
        }
    }

    fn lmul_elem(&self, t: Token, x: &KlrElement) -> KlrElement {
        let mut out = KlrElement::zero();
        for (nf, c) in x.terms() {
            out.add_scaled(&self.cached(t, nf, |s| s.lmul(t, nf)), c);
        }
        out
    }

    fn rmul_elem(&self, t: Token, x: &KlrElement) -> KlrElement {
        let mut out = KlrElement::zero();
        for (nf, c) in x.terms() {
            out.add_scaled(&self.cached(t, nf, |s| s.rmul(t, nf)), c);
        }
        out
    }

    fn cached(&self, t: Token, nf: &NormalForm, f: impl FnOnce(&Self) -> KlrElement) -> KlrElement {
        let key = (t, nf.clone());
        if let Some(v) = self.cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = f(self);
        self.cache.write().unwrap().insert(key, v.clone());
        v
    }

    /// psi_k^2 e(l) as a sum of at most one dot each (None is the idempotent).
    fn quadratic(&self, l: &[u32], k: usize) -> Vec<Option<usize>> {
        let m = self.cfg.m;
        let (a, b) = (l[k], l[k + 1]);
        if a == b {
            vec![]
        } else if a == m && b.abs_diff(m) == 1 {
            vec![Some(k + 1)]
        } else if b == m && a.abs_diff(m) == 1 {
            vec![Some(k)]
        } else if self.cfg.bullet(a, b).abs() == 1 {
            vec![Some(k), Some(k + 1)]
        } else {
            vec![None]
        }
    }

    /// Normal form of a reduced word over dots at the bottom.
    fn canonicalize(&self, word: Vec<usize>, dots: &[u32], source: &[u32]) -> KlrElement {
        let d = source.len();
        let mut mv = Moves::new(&self.cfg, source, word);
        for lo in 0..mv.word.len() {
            let inv = inverse(&perm_of_word(&mv.word[lo..], d));
            let k = (0..d - 1)
                .find(|&k| inv[k] > inv[k + 1])
                .expect("nonempty reduced word has a left descent");
            mv.start_with(lo, k);
        }
        let nf = NormalForm {
            source: source.to_vec(),
            perm: perm_of_word(&mv.word, d),
            dots: dots.to_vec(),
        };
        let mut out = KlrElement::zero();
        out.add_term(nf, &mv.coef);
        let dt = dot_tokens(dots);
        for (c, w) in &mv.corrections {
            let toks: Vec<Token> = psis(w).chain(dt.iter().copied()).collect();
            out.add_scaled(&self.normalize(&toks, source), c);
        }
        out
    }

    fn lmul(&self, t: Token, nf: &NormalForm) -> KlrElement {
        match t {
            Token::Y(p) => self.lmul_y(p, nf),
            Token::Psi(k) => self.lmul_psi(k, nf),
        }
    }

    fn lmul_y(&self, p: usize, nf: &NormalForm) -> KlrElement {
        let target = nf.target();
        if target[p] == self.cfg.m {
            return KlrElement::zero();
        }
        if nf.is_identity_perm() {
            let mut r = nf.clone();
            r.dots[p] += 1;
            return KlrElement::basis(r);
        }
        let word = nf.canonical_word();
        let a = word[0];
        let rest = NormalForm {
            source: nf.source.clone(),
            perm: perm_of_word(&word[1..], nf.len()),
            dots: nf.dots.clone(),
        };
        if p != a && p != a + 1 {
            let x = self.lmul_y(p, &rest);
            return self.lmul_elem(Token::Psi(a), &x);
        }
        let below = rest.target();
        let equal = below[a] == below[a + 1];
        let (q, sign) = if p == a { (a + 1, 1) } else { (a, -1) };
        let x = self.lmul_y(q, &rest);
        let mut out = self.lmul_elem(Token::Psi(a), &x);
        if equal {
            out.add_term(rest, &BigInt::from(sign));
        }
        out
    }

    fn lmul_psi(&self, k: usize, nf: &NormalForm) -> KlrElement {
        let inv = inverse(&nf.perm);
        let mut word = nf.canonical_word();
        if inv[k] < inv[k + 1] {
            word.insert(0, k);
            return self.canonicalize(word, &nf.dots, &nf.source);
        }
        let mut mv = Moves::new(&self.cfg, &nf.source, word);
        mv.start_with(0, k);
        let below = mv.level_below(0);
        let dt = dot_tokens(&nf.dots);
        let mut out = KlrElement::zero();
        for pos in self.quadratic(&below, k) {
            let toks: Vec<Token> = pos
                .map(Token::Y)
                .into_iter()
                .chain(psis(&mv.word[1..]))
                .chain(dt.iter().copied())
                .collect();
            out.add_scaled(&self.normalize(&toks, &nf.source), &mv.coef);
        }
        for (c, w) in &mv.corrections {
            let toks: Vec<Token> = std::iter::once(Token::Psi(k))
                .chain(psis(w))
                .chain(dt.iter().copied())
                .collect();
            out.add_scaled(&self.normalize(&toks, &nf.source), c);
        }
        out
    }

    fn rmul(&self, t: Token, nf: &NormalForm) -> KlrElement {
        match t {
            Token::Y(p) => {
                if nf.source[p] == self.cfg.m {
                    KlrElement::zero()
                } else {
                    let mut r = nf.clone();
                    r.dots[p] += 1;
                    KlrElement::basis(r)
                }
            }
            Token::Psi(k) => self.rmul_psi(k, nf),
        }
    }

    fn rmul_psi(&self, k: usize, nf: &NormalForm) -> KlrElement {
        let mut out = KlrElement::zero();
        let mut src = nf.source.clone();
        src.swap(k, k + 1);
        let f = &nf.dots;
        if nf.source[k] == nf.source[k + 1] {
            for (c, dots) in divided_difference(f, k) {
                let r = NormalForm {
                    source: nf.source.clone(),
                    perm: nf.perm.clone(),
                    dots,
                };
                out.add_term(r, &BigInt::from(c));
            }
        }
        let mut g = f.clone();
        g.swap(k, k + 1);
        let word = nf.canonical_word();
        if nf.perm[k] < nf.perm[k + 1] {
            let mut w = word;
            w.push(k);
            let x = self.canonicalize(w, &g, &src);
            out.add_scaled(&x, &BigInt::one());
            return out;
        }
        let len = word.len();
        let mut mv = Moves::new(&self.cfg, &nf.source, word);
        mv.end_with(len, k);
        let head = &mv.word[..len - 1];
        for pos in self.quadratic(&src, k) {
            let mut dots = g.clone();
            if let Some(p) = pos {
                dots[p] += 1;
            }
            let x = self.canonicalize(head.to_vec(), &dots, &src);
            out.add_scaled(&x, &mv.coef);
        }
        let gt = dot_tokens(&g);
        for (c, w) in &mv.corrections {
            let toks: Vec<Token> = psis(w)
                .chain(std::iter::once(Token::Psi(k)))
                .chain(gt.iter().copied())
                .collect();
            out.add_scaled(&self.normalize(&toks, &src), c);
        }
        out
    }
}

/// (f - s_k f) / (y_k - y_{k+1}) for the monomial with exponents f.
fn divided_difference(f: &[u32], k: usize) -> Vec<(i64, Vec<u32>)> {
    let (a, b) = (f[k], f[k + 1]);
    let (lo, hi, sign) = match a.cmp(&b) {
        std::cmp::Ordering::Equal => return vec![],
        std::cmp::Ordering::Greater => (b, a, 1),
        std::cmp::Ordering::Less => (a, b, -1),
    };
    (0..hi - lo)
        .map(|t| {
            let mut d = f.to_vec();
            d[k] = lo + (hi - lo - 1 - t);
            d[k + 1] = lo + t;
            (sign, d)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(m: u32) -> [Klr; 2] {
        [
            Klr::new(m, Strategy::BottomUp).unwrap(),
            Klr::new(m, Strategy::TopDown).unwrap(),
        ]
    }

    #[test]
    fn quadratic_relations() {
        for k in both(2) {
            let w = RawWord::parse("psi1 psi1", vec![1, 1]).unwrap();
            assert!(k.rewrite(&w).is_zero());
            let w = RawWord::parse("psi1 psi1", vec![2, 1]).unwrap();
            let want = k.rewrite(&RawWord::parse("y2", vec![2, 1]).unwrap());
            assert_eq!(k.rewrite(&w), want);
            let w = RawWord::parse("psi1 psi1", vec![2, 2]).unwrap();
            assert!(k.rewrite(&w).is_zero());
        }
    }

    #[test]
    fn dot_slide() {
        for k in both(2) {
            let lhs = k.rewrite(&RawWord::parse("y1 psi1", vec![1, 1]).unwrap());
            let a = k.rewrite(&RawWord::parse("psi1 y2", vec![1, 1]).unwrap());
            let b = KlrElement::idempotent(vec![1, 1]);
            assert_eq!(lhs, a.add(&b));
        }
    }

    #[test]
    fn divided_difference_small() {
        assert_eq!(divided_difference(&[1, 0], 0), vec![(1, vec![0, 0])]);
        assert_eq!(divided_difference(&[0, 1], 0), vec![(-1, vec![0, 0])]);
        assert_eq!(divided_difference(&[2, 0], 0), vec![(1, vec![1, 0]), (1, vec![0, 1])]);
        assert!(divided_difference(&[1, 1], 0).is_empty());
    }
}
