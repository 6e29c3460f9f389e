//! The polynomial representation Pol_nu of R(nu), for nu_m <= 1.
//!
//! With at most one fermionic strand the permutation part of each sector is
//! trivial, so a sector is just a sequence. Variables x_1..x_t belong to the
//! bosonic strands, counted from the left. A boson-fermion crossing never
//! changes that order, so it only relabels the sector; when the fermion starts
//! on the left (it runs along the main diagonal) and the boson is m-1, the
//! result is also multiplied by the boson's variable.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::klr::{Klr, KlrElement, RawWord, Token};
use crate::root_data::{RootConfig, Weight};

/// Polynomial over Z in t variables, keyed by exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(BTreeMap<Vec<u32>, BigInt>);

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exps: Vec<u32>) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, &BigInt::one());
        p
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(exps) {
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

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.0
    }

    pub fn add_scaled(&mut self, other: &Poly, c: &BigInt) {
        for (e, a) in &other.0 {
            self.add_term(e.clone(), &(a * c));
        }
    }

    /// Multiply by x_k.
    pub fn times_var(&self, k: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.0 {
            let mut e = e.clone();
            e[k] += 1;
            out.add_term(e, c);
        }
        out
    }

    /// Swap x_k and x_{k+1}.
    pub fn swap(&self, k: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.0 {
            let mut e = e.clone();
            e.swap(k, k + 1);
            out.add_term(e, c);
        }
        out
    }

    /// (g - s_k g) / (x_k - x_{k+1}).
    pub fn divided_difference(&self, k: usize) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.0 {
            let (a, b) = (e[k], e[k + 1]);
            let (lo, hi, sign) = if a >= b { (b, a, c.clone()) } else { (a, b, -c) };
            // (x^hi y^lo - x^lo y^hi)/(x - y) = sum_{j<hi-lo} x^{hi-1-j} y^{lo+j}
            for j in 0..hi - lo {
                let mut f = e.clone();
                if a >= b {
                    f[k] = hi - 1 - j;
                    f[k + 1] = lo + j;
                } else {
                    f[k + 1] = hi - 1 - j;
                    f[k] = lo + j;
                }
                out.add_term(f, &sign);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p > 0)
                    .map(|(k, &p)| if p == 1 { format!("x{}", k + 1) } else { format!("x{}^{p}", k + 1) })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An element of Pol_nu: a polynomial per sector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PolElement {
    terms: BTreeMap<Vec<u32>, Poly>,
}

impl PolElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(sector: Vec<u32>, p: Poly) -> Self {
        let mut out = Self::zero();
        out.add(&sector, &p, &BigInt::one());
        out
    }

    pub fn add(&mut self, sector: &[u32], p: &Poly, c: &BigInt) {
        let e = self.terms.entry(sector.to_vec()).or_default();
        e.add_scaled(p, c);
        if e.is_zero() {
            self.terms.remove(sector);
        }
    }

    pub fn add_element(&mut self, other: &PolElement, c: &BigInt) {
        for (s, p) in &other.terms {
            self.add(s, p, c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Poly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The representation on Pol_nu for one weight.
pub struct PolRep {
    cfg: RootConfig,
    t: usize,
}

impl PolRep {
    pub fn new(cfg: &RootConfig, nu: &Weight) -> Result<Self> {
        if cfg.n != 1 {
            return Err(Error::Unsupported("Pol_nu is defined for n = 1".into()));
        }
        if nu.get(cfg.m) > 1 {
            return Err(Error::Unsupported(format!(
                "Pol_nu needs the LOT-algebra signs when nu_m = {} > 1",
                nu.get(cfg.m)
            )));
        }
        Ok(Self {
            cfg: *cfg,
            t: (nu.size() - nu.get(cfg.m)) as usize,
        })
    }

    /// Number of polynomial variables.
    pub fn vars(&self) -> usize {
        self.t
    }

    fn bosonic_index(&self, seq: &[u32], p: usize) -> usize {
        seq[..p].iter().filter(|&&a| a != self.cfg.m).count()
    }

    /// One generator applied to one sector.
    fn act_token(&self, tok: Token, seq: &[u32], g: &Poly) -> (Vec<u32>, Poly) {
        let m = self.cfg.m;
        match tok {
            Token::Y(p) => {
                if seq[p] == m {
                    (seq.to_vec(), Poly::zero())
                } else {
                    (seq.to_vec(), g.times_var(self.bosonic_index(seq, p)))
                }
            }
            Token::Psi(p) => {
                let (a, b) = (seq[p], seq[p + 1]);
                let mut s = seq.to_vec();
                s.swap(p, p + 1);
                let k = self.bosonic_index(seq, p);
                if a != m && b != m {
                    if a == b {
                        (s, g.divided_difference(k))
                    } else if b == a + 1 {
                        let sg = g.swap(k);
                        let mut out = sg.times_var(k);
                        out.add_scaled(&sg.times_var(k + 1), &BigInt::one());
                        (s, out)
                    } else {
                        (s, g.swap(k))
                    }
                } else if a == m && b == m {
                    unreachable!("at most one fermionic strand")
                } else if a == m && b + 1 == m {
                    (s, g.times_var(k))
                } else {
                    (s, g.clone())
                }
            }
        }
    }

    /// Apply a raw word to an element; tokens act right to left and the word's
    /// idempotent projects first.
    pub fn act(&self, w: &RawWord, v: &PolElement) -> PolElement {
        let mut out = PolElement::zero();
        if let Some(g) = v.terms.get(&w.source) {
            let mut seq = w.source.clone();
            let mut g = g.clone();
            for &tok in w.tokens.iter().rev() {
                let (s, h) = self.act_token(tok, &seq, &g);
                seq = s;
                g = h;
                if g.is_zero() {
                    return out;
                }
            }
            out.add(&seq, &g, &BigInt::one());
        }
        out
    }

    pub fn act_element(&self, x: &KlrElement, v: &PolElement) -> PolElement {
        let mut out = PolElement::zero();
        for (nf, c) in x.terms() {
            out.add_element(&self.act(&nf.raw(), v), c);
        }
        out
    }

    /// All monomials of total degree at most `deg` in sector `seq`.
    pub fn monomials(&self, seq: &[u32], deg: u32) -> Vec<PolElement> {
        let mut exps = vec![vec![]];
        for _ in 0..self.t {
            exps = exps
                .into_iter()
                .flat_map(|e: Vec<u32>| {
                    let used: u32 = e.iter().sum();
                    (0..=deg - used).map(move |a| {
                        let mut f = e.clone();
                        f.push(a);
                        f
                    })
                })
                .collect();
        }
        exps.into_iter()
            .map(|e| PolElement::single(seq.to_vec(), Poly::monomial(e)))
            .collect()
    }

    /// Random polynomial of degree at most `deg` with small coefficients.
    pub fn random_sample<R: Rng>(&self, rng: &mut R, seq: &[u32], deg: u32) -> PolElement {
        let mut p = Poly::zero();
        for _ in 0..4 {
            let mut e = vec![0; self.t];
            for _ in 0..rng.gen_range(0..=deg) {
                if self.t > 0 {
                    e[rng.gen_range(0..self.t)] += 1;
                }
            }
            p.add_term(e, &BigInt::from(rng.gen_range(-3i64..=3)));
        }
        PolElement::single(seq.to_vec(), p)
    }

    /// True iff w and rewrite(w) act identically on every sample. Returns the
    /// first disagreeing sample otherwise.
    pub fn oracle_check(
        &self,
        klr: &Klr,
        w: &RawWord,
        samples: &[PolElement],
    ) -> std::result::Result<(), (PolElement, PolElement, PolElement)> {
        let nf = klr.rewrite(w);
        for s in samples {
            let a = self.act(w, s);
            let b = self.act_element(&nf, s);
            if a != b {
                return Err((s.clone(), a, b));
            }
        }
        Ok(())
    }

    /// Sum of c * act(tokens) over the terms of a relation.
    pub fn act_combination(
        &self,
        source: &[u32],
        terms: &[(i64, Vec<Token>)],
        v: &PolElement,
    ) -> PolElement {
        let mut out = PolElement::zero();
        for (c, toks) in terms {
            let w = RawWord {
                tokens: toks.clone(),
                source: source.to_vec(),
            };
            out.add_element(&self.act(&w, v), &BigInt::from(*c));
        }
        out
    }
}
