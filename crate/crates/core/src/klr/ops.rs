//! Differential, anti-involution, divided-power idempotents and graded dimensions.

use std::fmt;

use num_bigint::BigInt;

use super::{dot_tokens, inversions, permutations, Klr, KlrElement, NormalForm, Token};
use crate::error::{Error, Result};
use crate::root_data::{RootConfig, Weight};
use crate::scalars::{BiRational, LaurentPoly, RationalQ};

impl Klr {
    /// d on the basis, by the graded Leibniz rule over the canonical word;
    /// d(psi_k e(i)) = e(i) when i_k = i_{k+1} = m and 0 otherwise, d(y) = 0.
    pub fn differential(&self, x: &KlrElement) -> KlrElement {
        let m = self.m();
        let mut out = KlrElement::zero();
        for (nf, c) in x.terms() {
            let word = nf.canonical_word();
            let dt = dot_tokens(&nf.dots);
            let mut level = nf.source.clone();
            let mut below = Vec::with_capacity(word.len());
            for &a in word.iter().rev() {
                below.push(level.clone());
                level.swap(a, a + 1);
            }
            below.reverse();
            let mut odd_before = 0usize;
            for (t, &a) in word.iter().enumerate() {
                let l = &below[t];
                if l[a] == m && l[a + 1] == m {
                    let toks: Vec<Token> = word
                        .iter()
                        .enumerate()
                        .filter(|&(s, _)| s != t)
                        .map(|(_, &b)| Token::Psi(b))
                        .chain(dt.iter().copied())
                        .collect();
                    let sign = if odd_before % 2 == 0 { c.clone() } else { -c };
                    out.add_scaled(&self.normalize(&toks, &nf.source), &sign);
                    odd_before += 1;
                }
            }
        }
        out
    }

    /// Flip about a horizontal axis, without signs. This reverses products:
    /// sigma_plain(ab) = sigma_plain(b) sigma_plain(a).
    pub fn sigma_plain(&self, x: &KlrElement) -> KlrElement {
        let mut out = KlrElement::zero();
        for (nf, c) in x.terms() {
            out.add_scaled(&self.flip(nf), c);
        }
        out
    }

    /// Flip with the Koszul sign (-1)^{N(N-1)/2}, N the number of m-m crossings.
    /// This commutes with d and satisfies sigma(ab) = (-1)^{|a||b|} sigma(b) sigma(a).
    pub fn sigma(&self, x: &KlrElement) -> KlrElement {
        let cfg = *self.config();
        let mut out = KlrElement::zero();
        for (nf, c) in x.terms() {
            let n = -nf.bidegree(&cfg).0;
            let sign = if (n * (n - 1) / 2) % 2 == 0 { c.clone() } else { -c };
            out.add_scaled(&self.flip(nf), &sign);
        }
        out
    }

    fn flip(&self, nf: &NormalForm) -> KlrElement {
        let toks: Vec<Token> = dot_tokens(&nf.dots)
            .into_iter()
            .chain(nf.canonical_word().into_iter().rev().map(Token::Psi))
            .collect();
        self.normalize(&toks, &nf.target())
    }

    /// psi_{w_0} times the staircase of dots on each block of the expanded sequence.
    pub fn tilde_e(&self, ds: &DividedSequence) -> Result<KlrElement> {
        let m = self.m();
        let mut source = Vec::new();
        let mut perm = Vec::new();
        let mut dots = Vec::new();
        for &(i, n) in &ds.0 {
            self.config().check(i)?;
            if n == 0 || (i == m && n > 1) {
                return Err(Error::Domain(format!("divided power {i}^({n}) not allowed")));
            }
            let s = source.len();
            for r in 0..n as usize {
                source.push(i);
                perm.push(s + n as usize - 1 - r);
                dots.push(n - 1 - r as u32);
            }
        }
        // psi_{w_0} on equal labels does not depend on the reduced word, so
        // this product is already a basis element.
        Ok(KlrElement::basis(NormalForm { source, perm, dots }))
    }
}

/// A sequence (i_1^(n_1), ..., i_r^(n_r)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DividedSequence(pub Vec<(u32, u32)>);

impl DividedSequence {
    /// Parses `1^2,2` or `1^(2),2`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || Error::Parse(format!("bad divided power `{part}`"));
            let (i, n) = match part.split_once('^') {
                Some((a, b)) => {
                    let b = b.trim_start_matches('(').trim_end_matches(')');
                    (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
                }
                None => (part.parse().map_err(|_| bad())?, 1),
            };
            out.push((i, n));
        }
        Ok(Self(out))
    }

    pub fn expanded(&self) -> Vec<u32> {
        self.0
            .iter()
            .flat_map(|&(i, n)| std::iter::repeat(i).take(n as usize))
            .collect()
    }

    pub fn weight(&self) -> Weight {
        Weight::of_word(&self.expanded())
    }
}

impl fmt::Display for DividedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(i, n)| if n == 1 { i.to_string() } else { format!("{i}^({n})") })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Graded dimension of e(j) R(nu) e(i): the sum over w with w.i = j of
/// t^{deg1} q^{deg2}, times 1/(1 - q^{a.a}) for every bosonic strand a.
pub fn gdim(cfg: &RootConfig, i: &[u32], j: &[u32]) -> BiRational {
    if Weight::of_word(i) != Weight::of_word(j) {
        return BiRational::zero();
    }
    let d = i.len();
    let mut acc = crate::scalars::BiLaurent::zero();
    for perm in permutations(d) {
        if (0..d).any(|r| j[perm[r]] != i[r]) {
            continue;
        }
        let (mut d1, mut d2) = (0i64, 0i64);
        for (k, l) in inversions(&perm) {
            if i[k] == cfg.m && i[l] == cfg.m {
                d1 -= 1;
            }
            d2 -= cfg.bullet(i[k], i[l]);
        }
        acc.add_term(d2, d1, BigInt::from(1));
    }
    let mut factor = RationalQ::one();
    for &a in i {
        if a != cfg.m {
            let den = &LaurentPoly::one() - &LaurentPoly::monomial(1, cfg.bullet(a, a));
            factor = &factor * &RationalQ::new(LaurentPoly::one(), den).expect("a.a != 0");
        }
    }
    acc.to_birational().scale(&factor)
}

/// gdim over all targets of the weight of i.
pub fn gdim_of(cfg: &RootConfig, i: &[u32]) -> Vec<(Vec<u32>, BiRational)> {
    cfg.words(&Weight::of_word(i))
        .into_iter()
        .map(|j| {
            let g = gdim(cfg, i, &j);
            (j, g)
        })
        .filter(|(_, g)| !g.is_zero())
        .collect()
}
