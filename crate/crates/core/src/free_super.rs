//! The free twisted superbialgebra f'(m, n).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_data::{RootConfig, Weight};
use crate::scalars::{q_fact, RationalQ};

pub type Word = Vec<u32>;

/// Q(q)-linear combination of words.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreeElement {
    terms: BTreeMap<Word, RationalQ>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, RationalQ::one())
    }

    pub fn gen(i: u32) -> Self {
        Self::word(vec![i])
    }

    pub fn term(w: Word, c: RationalQ) -> Self {
        let mut r = Self::zero();
        r.add_term(w, &c);
        r
    }

    pub fn add_term(&mut self, w: Word, c: &RationalQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = &*x + c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Word, RationalQ> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u32]) -> RationalQ {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_term(w.clone(), c);
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&RationalQ::from_int(-1)))
    }

    pub fn scale(&self, c: &RationalQ) -> Self {
        let mut r = Self::zero();
        for (w, x) in &self.terms {
            r.add_term(w.clone(), &(x * c));
        }
        r
    }

    /// Concatenation product, extended bilinearly.
    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                r.add_term(w, &(x * y));
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// The common weight of all terms, or None if the element is zero or inhomogeneous.
    pub fn weight(&self) -> Option<Weight> {
        let mut it = self.terms.keys().map(|w| Weight::of_word(w));
        let first = it.next()?;
        if it.all(|w| w == first) {
            Some(first)
        } else {
            None
        }
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})*{w:?}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    word: Word,
    coeff: RationalQ,
}

impl Serialize for FreeElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(w, c)| TermRecord {
                word: w.clone(),
                coeff: c.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FreeElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<TermRecord> = Vec::deserialize(d)?;
        let mut r = FreeElement::zero();
        for t in v {
            r.add_term(t.word, &t.coeff);
        }
        Ok(r)
    }
}

/// Element of f'^{(tensor b)}, stored as tuples of words.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    arity: usize,
    terms: BTreeMap<Vec<Word>, RationalQ>,
}

impl TensorElement {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(arity: usize) -> Self {
        Self::pure(vec![Vec::new(); arity], RationalQ::one())
    }

    pub fn pure(words: Vec<Word>, c: RationalQ) -> Self {
        let mut r = Self::zero(words.len());
        r.add_term(words, &c);
        r
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<Word>, RationalQ> {
        &self.terms
    }

    pub fn coeff(&self, words: &[Word]) -> RationalQ {
        self.terms.get(words).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: &RationalQ) {
        assert_eq!(words.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&words) {
            Some(x) => {
                *x = &*x + c;
                if x.is_zero() {
                    self.terms.remove(&words);
                }
            }
            None => {
                self.terms.insert(words, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_term(w.clone(), c);
        }
        r
    }

    pub fn scale(&self, c: &RationalQ) -> Self {
        let mut r = Self::zero(self.arity);
        for (w, x) in &self.terms {
            r.add_term(w.clone(), &(x * c));
        }
        r
    }

    /// Pure tensor x_1 (x) ... (x) x_b of free elements.
    pub fn from_factors(factors: &[FreeElement]) -> Self {
        let mut r = Self::unit(0);
        for f in factors {
            let mut next = Self::zero(r.arity + 1);
            for (ws, c) in &r.terms {
                for (w, d) in f.terms() {
                    let mut v = ws.clone();
                    v.push(w.clone());
                    next.add_term(v, &(c * d));
                }
            }
            r = next;
        }
        r
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({c})*{w:?}"))
            .collect();
        write!(f, "[{}]", parts.join(" + "))
    }
}

/// Twisted product on f'^{(tensor b)}:
/// (x_1..x_b)(x'_1..x'_b) = q^{-sum_{i<j} |x_j|.|x'_i|} (-1)^{sum_{i<j} p(x_j)p(x'_i)} (x_1x'_1 .. x_bx'_b)
pub fn tensor_multiply(cfg: &RootConfig, x: &TensorElement, y: &TensorElement) -> Result<TensorElement> {
    if x.arity != y.arity {
        return Err(Error::ArityMismatch(x.arity, y.arity));
    }
    let b = x.arity;
    let mut r = TensorElement::zero(b);
    for (xs, c) in &x.terms {
        let xw: Vec<Weight> = xs.iter().map(|w| Weight::of_word(w)).collect();
        let xp: Vec<u8> = xs.iter().map(|w| cfg.word_parity(w)).collect();
        for (ys, d) in &y.terms {
            let mut e = 0i64;
            let mut sgn = 0u32;
            for (i, yi) in ys.iter().enumerate() {
                if yi.is_empty() {
                    continue;
                }
                let yw = Weight::of_word(yi);
                let yp = cfg.word_parity(yi);
                for j in i + 1..b {
                    e -= cfg.bullet_ext(&xw[j], &yw);
                    sgn += (xp[j] * yp) as u32;
                }
            }
            let mut coef = RationalQ::monomial(if sgn % 2 == 1 { -1 } else { 1 }, e);
            coef = &coef * &(c * d);
            let words: Vec<Word> = xs
                .iter()
                .zip(ys)
                .map(|(a, b)| {
                    let mut w = a.clone();
                    w.extend_from_slice(b);
                    w
                })
                .collect();
            r.add_term(words, &coef);
        }
    }
    Ok(r)
}

/// Delta of a single word, as the product of Delta(theta_i) = theta_i (x) 1 + 1 (x) theta_i.
pub fn coproduct_word(cfg: &RootConfig, w: &[u32]) -> TensorElement {
    let mut acc = TensorElement::unit(2);
    for &i in w {
        let mut g = TensorElement::zero(2);
        g.add_term(vec![vec![i], vec![]], &RationalQ::one());
        g.add_term(vec![vec![], vec![i]], &RationalQ::one());
        acc = tensor_multiply(cfg, &acc, &g).expect("arity 2");
    }
    acc
}

pub fn coproduct(cfg: &RootConfig, x: &FreeElement) -> TensorElement {
    let mut r = TensorElement::zero(2);
    for (w, c) in x.terms() {
        r = r.add(&coproduct_word(cfg, w).scale(c));
    }
    r
}

/// Apply Delta to tensor slot `k`, raising the arity by one.
pub fn coproduct_at(cfg: &RootConfig, t: &TensorElement, k: usize) -> TensorElement {
    let mut r = TensorElement::zero(t.arity + 1);
    for (ws, c) in &t.terms {
        let d = coproduct_word(cfg, &ws[k]);
        for (pair, e) in d.terms() {
            let mut v: Vec<Word> = ws[..k].to_vec();
            v.push(pair[0].clone());
            v.push(pair[1].clone());
            v.extend_from_slice(&ws[k + 1..]);
            r.add_term(v, &(c * e));
        }
    }
    r
}

/// Delta^b = (1 (x) Delta) Delta^{b-1}: arity b+1.
pub fn coproduct_iter(cfg: &RootConfig, x: &FreeElement, b: usize) -> TensorElement {
    let mut t = TensorElement::from_factors(std::slice::from_ref(x));
    for _ in 0..b {
        let last = t.arity - 1;
        t = coproduct_at(cfg, &t, last);
    }
    t
}

/// Iterate with (Delta (x) 1) instead: always split the first slot.
pub fn coproduct_iter_left(cfg: &RootConfig, x: &FreeElement, b: usize) -> TensorElement {
    let mut t = TensorElement::from_factors(std::slice::from_ref(x));
    for _ in 0..b {
        t = coproduct_at(cfg, &t, 0);
    }
    t
}

/// theta_i^{(p)} = theta_i^p / [p]!
pub fn divided_power(i: u32, p: u32) -> FreeElement {
    FreeElement::term(vec![i; p as usize], &RationalQ::one() / &q_fact(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rq;

    #[test]
    fn twist_examples() {
        let cfg = RootConfig::new(2, 1).unwrap();
        let a = TensorElement::pure(vec![vec![], vec![1]], RationalQ::one());
        let b = TensorElement::pure(vec![vec![2], vec![]], RationalQ::one());
        let r = tensor_multiply(&cfg, &a, &b).unwrap();
        assert_eq!(r.coeff(&[vec![2], vec![1]]), rq("q"));
        let a = TensorElement::pure(vec![vec![], vec![2]], RationalQ::one());
        let r = tensor_multiply(&cfg, &a, &b).unwrap();
        assert_eq!(r.coeff(&[vec![2], vec![2]]), rq("-1"));
        let x = TensorElement::pure(vec![vec![1], vec![]], RationalQ::one());
        let r = tensor_multiply(&cfg, &x, &b).unwrap();
        assert_eq!(r.coeff(&[vec![1, 2], vec![]]), RationalQ::one());
    }

    #[test]
    fn odd_square_is_primitive() {
        let cfg = RootConfig::new(2, 1).unwrap();
        let d = coproduct(&cfg, &FreeElement::word(vec![2, 2]));
        assert_eq!(d.terms().len(), 2);
        assert_eq!(d.coeff(&[vec![2, 2], vec![]]), RationalQ::one());
        assert_eq!(d.coeff(&[vec![], vec![2, 2]]), RationalQ::one());
        let one = coproduct(&cfg, &FreeElement::one());
        assert_eq!(one, TensorElement::unit(2));
    }

    #[test]
    fn divided_power_values() {
        assert_eq!(divided_power(1, 0), FreeElement::one());
        assert_eq!(divided_power(1, 1), FreeElement::gen(1));
        assert_eq!(divided_power(1, 2).coeff(&[1, 1]), rq("1/(q+q^-1)"));
    }
}
