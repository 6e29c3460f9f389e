//! The bilinear form on f', computed by the coproduct recursion and by
//! summing over pairings of strands.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::free_super::{coproduct_word, FreeElement, TensorElement, Word};
use crate::root_data::{RootConfig, Weight};
use crate::scalars::{rank_over_qq, LaurentPoly, RationalQ};

/// (theta_i, theta_i)
pub fn base_value(cfg: &RootConfig, i: u32) -> RationalQ {
    if cfg.is_odd(i) {
        RationalQ::one()
    } else {
        let d = &LaurentPoly::one() - &LaurentPoly::monomial(1, cfg.bullet(i, i));
        RationalQ::new(LaurentPoly::one(), d).expect("i.i != 0 off the odd index")
    }
}

type Split = Vec<(u32, Word, RationalQ)>;

/// Memoizing evaluator for the recursive form. Safe to share across threads.
pub struct FormEngine {
    cfg: RootConfig,
    memo: RwLock<HashMap<(Word, Word), RationalQ>>,
    splits: RwLock<HashMap<Word, std::sync::Arc<Split>>>,
}

impl FormEngine {
    pub fn new(cfg: RootConfig) -> Self {
        Self {
            cfg,
            memo: RwLock::new(HashMap::new()),
            splits: RwLock::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &RootConfig {
        &self.cfg
    }

    /// Terms of Delta(a) whose left factor is a single letter.
    fn splits(&self, a: &Word) -> std::sync::Arc<Split> {
        if let Some(s) = self.splits.read().unwrap().get(a) {
            return s.clone();
        }
        let d = coproduct_word(&self.cfg, a);
        let s: Split = d
            .terms()
            .iter()
            .filter(|(ws, _)| ws[0].len() == 1)
            .map(|(ws, c)| (ws[0][0], ws[1].clone(), c.clone()))
            .collect();
        let s = std::sync::Arc::new(s);
        self.splits.write().unwrap().insert(a.clone(), s.clone());
        s
    }

    pub fn form(&self, a: &[u32], b: &[u32]) -> RationalQ {
        if a.len() != b.len() || Weight::of_word(a) != Weight::of_word(b) {
            return RationalQ::zero();
        }
        if b.is_empty() {
            return RationalQ::one();
        }
        let key = (a.to_vec(), b.to_vec());
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return v.clone();
        }
        let j = b[0];
        let rest = &b[1..];
        let base = base_value(&self.cfg, j);
        let mut acc = RationalQ::zero();
        for (letter, right, c) in self.splits(&key.0).iter() {
            if *letter != j {
                continue;
            }
            let sub = self.form(right, rest);
            if !sub.is_zero() {
                acc = &acc + &(c * &sub);
            }
        }
        let v = &acc * &base;
        self.memo.write().unwrap().insert(key, v.clone());
        v
    }

    pub fn form_elements(&self, x: &FreeElement, y: &FreeElement) -> RationalQ {
        let mut acc = RationalQ::zero();
        for (a, c) in x.terms() {
            for (b, d) in y.terms() {
                let v = self.form(a, b);
                if !v.is_zero() {
                    acc = &acc + &(&(c * d) * &v);
                }
            }
        }
        acc
    }

    /// True iff (x, w) = 0 for every word w of the weight of x.
    pub fn radical_contains(&self, x: &FreeElement) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        let nu = x.weight().ok_or(Error::WeightMismatch)?;
        Ok(self.cfg.words(&nu).par_iter().all(|w| {
            let mut acc = RationalQ::zero();
            for (a, c) in x.terms() {
                acc = &acc + &(c * &self.form(a, w));
            }
            acc.is_zero()
        }))
    }

    /// First word w with (x, w) != 0, with that value.
    pub fn radical_witness(&self, x: &FreeElement) -> Option<(Word, RationalQ)> {
        let nu = x.weight()?;
        self.cfg.words(&nu).into_iter().find_map(|w| {
            let mut acc = RationalQ::zero();
            for (a, c) in x.terms() {
                acc = &acc + &(c * &self.form(a, &w));
            }
            (!acc.is_zero()).then_some((w, acc))
        })
    }

    /// True iff a two-fold tensor pairs to zero with every u (x) v, that is, it
    /// vanishes in f' (x) f'.
    pub fn tensor_radical_contains(&self, t: &TensorElement) -> bool {
        let mut blocks: BTreeMap<(Weight, Weight), Vec<(&Vec<Word>, &RationalQ)>> = BTreeMap::new();
        for (ws, c) in t.terms() {
            blocks
                .entry((Weight::of_word(&ws[0]), Weight::of_word(&ws[1])))
                .or_default()
                .push((ws, c));
        }
        blocks.par_iter().all(|((l, r), terms)| {
            let lw = self.cfg.words(l);
            let rw = self.cfg.words(r);
            lw.iter().all(|u| {
                rw.iter().all(|v| {
                    let mut acc = RationalQ::zero();
                    for (ws, c) in terms {
                        let x = self.form(&ws[0], u);
                        if !x.is_zero() {
                            acc = &acc + &(&(*c * &x) * &self.form(&ws[1], v));
                        }
                    }
                    acc.is_zero()
                })
            })
        })
    }

    pub fn gram(&self, nu: &Weight) -> GramMatrix {
        let words = self.cfg.words(nu);
        let entries: Vec<Vec<RationalQ>> = words
            .par_iter()
            .map(|a| words.iter().map(|b| self.form(a, b)).collect())
            .collect();
        GramMatrix {
            weight: nu.clone(),
            words,
            entries,
        }
    }

    pub fn dim_f(&self, nu: &Weight) -> usize {
        self.gram(nu).rank()
    }
}

pub fn form_recursive(cfg: &RootConfig, a: &[u32], b: &[u32]) -> RationalQ {
    FormEngine::new(*cfg).form(a, b)
}

/// Sum over label-preserving bijections of (-1)^deg1 q^deg2 prod 1/(1-q^{a_k.a_k}).
pub fn form_graphical(cfg: &RootConfig, a: &[u32], b: &[u32]) -> RationalQ {
    if a.len() != b.len() || Weight::of_word(a) != Weight::of_word(b) {
        return RationalQ::zero();
    }
    let n = a.len();
    let mut sum = LaurentPoly::zero();
    let mut pi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    pairings(cfg, a, b, 0, &mut pi, &mut used, &mut sum);
    let mut v = RationalQ::from_poly(sum);
    for &i in a {
        if !cfg.is_odd(i) {
            v = &v * &base_value(cfg, i);
        }
    }
    v
}

fn pairings(
    cfg: &RootConfig,
    a: &[u32],
    b: &[u32],
    k: usize,
    pi: &mut [usize],
    used: &mut [bool],
    sum: &mut LaurentPoly,
) {
    let n = a.len();
    if k == n {
        let mut deg1 = 0i64;
        let mut deg2 = 0i64;
        for x in 0..n {
            for y in x + 1..n {
                if pi[x] > pi[y] {
                    if cfg.is_odd(a[x]) && cfg.is_odd(a[y]) {
                        deg1 -= 1;
                    }
                    deg2 -= cfg.bullet(a[x], a[y]);
                }
            }
        }
        let sign = if deg1.rem_euclid(2) == 1 { -1 } else { 1 };
        sum.add_term(deg2, sign.into());
        return;
    }
    for t in 0..n {
        if !used[t] && b[t] == a[k] {
            used[t] = true;
            pi[k] = t;
            pairings(cfg, a, b, k + 1, pi, used, sum);
            used[t] = false;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GramMatrix {
    pub weight: Weight,
    pub words: Vec<Word>,
    pub entries: Vec<Vec<RationalQ>>,
}

impl GramMatrix {
    pub fn rank(&self) -> usize {
        rank_over_qq(&self.entries)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.words.len();
        (0..n).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    fn word_label(w: &[u32]) -> String {
        w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn to_csv(&self) -> String {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["word".to_string()];
        header.extend(self.words.iter().map(|w| Self::word_label(w)));
        wtr.write_record(&header).expect("in-memory write");
        for (w, row) in self.words.iter().zip(&self.entries) {
            let mut rec = vec![Self::word_label(w)];
            rec.extend(row.iter().map(|x| x.to_string()));
            wtr.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(wtr.into_inner().expect("flush")).expect("utf8")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

pub fn gram(cfg: &RootConfig, nu: &Weight) -> GramMatrix {
    FormEngine::new(*cfg).gram(nu)
}

pub fn dim_f(cfg: &RootConfig, nu: &Weight) -> usize {
    FormEngine::new(*cfg).dim_f(nu)
}

pub fn radical_contains(cfg: &RootConfig, x: &FreeElement) -> Result<bool> {
    FormEngine::new(*cfg).radical_contains(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rq;

    #[test]
    fn spec_examples() {
        let c = RootConfig::new(2, 1).unwrap();
        assert_eq!(form_recursive(&c, &[2], &[2]), RationalQ::one());
        assert!(form_recursive(&c, &[2, 2], &[2, 2]).is_zero());
        assert!(form_graphical(&c, &[2, 2], &[2, 2]).is_zero());
        assert_eq!(form_graphical(&c, &[1], &[1]), rq("1/(1-q^2)"));
        let c3 = RootConfig::new(3, 1).unwrap();
        assert_eq!(form_graphical(&c3, &[1, 2], &[2, 1]), rq("q/(1-q^2)^2"));
        assert_eq!(form_recursive(&c3, &[1, 2], &[2, 1]), rq("q/(1-q^2)^2"));
        let c22 = RootConfig::new(2, 2).unwrap();
        assert_eq!(form_recursive(&c22, &[2, 1, 3, 2], &[2, 1, 2, 3]), rq("q^-1/(1-q^-2)"));
    }

    #[test]
    fn gram_and_dim() {
        let c = RootConfig::new(2, 1).unwrap();
        let g = gram(&c, &Weight::from_pairs(&[(2, 2)]));
        assert_eq!(g.entries, vec![vec![RationalQ::zero()]]);
        assert_eq!(dim_f(&c, &Weight::from_pairs(&[(2, 2)])), 0);
        assert_eq!(dim_f(&c, &Weight::from_pairs(&[(1, 1), (2, 1)])), 2);
        assert!(radical_contains(&c, &FreeElement::word(vec![2, 2])).unwrap());
        let csv = g.to_csv();
        assert_eq!(csv, "word,2 2\n2 2,0\n");
    }
}
