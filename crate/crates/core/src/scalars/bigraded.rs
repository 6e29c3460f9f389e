use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::laurent::{fmt_monomial, q_power_str, LaurentPoly};
use super::rational::RationalQ;

/// Element of Z[q^{+-1}, t^{+-1}], keyed by (q-exponent, t-exponent).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BiLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial<C: Into<BigInt>>(c: C, qe: i64, te: i64) -> Self {
        let mut r = Self::zero();
        r.add_term(qe, te, c.into());
        r
    }

    pub fn add_term(&mut self, qe: i64, te: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((qe, te)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(qe, te));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), BigInt> {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for ((a, b), c) in &other.terms {
            r.add_term(*a, *b, c.clone());
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for ((a, b), c) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                r.add_term(a + a2, b + b2, c * c2);
            }
        }
        r
    }

    /// Substitute t = -1.
    pub fn specialize(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for ((qe, te), c) in &self.terms {
            let c = if te.rem_euclid(2) == 1 { -c } else { c.clone() };
            p.add_term(*qe, c);
        }
        p
    }

    pub fn to_birational(&self) -> BiRational {
        let mut r = BiRational::zero();
        for ((qe, te), c) in &self.terms {
            r.add_term(*te, &RationalQ::monomial(c.clone(), *qe));
        }
        r
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((qe, te), c)) in self.terms.iter().enumerate() {
            let v = format!("{}{}", q_power_str("q", *qe), q_power_str("t", *te));
            fmt_monomial(f, c, &v, k == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Finite sum of t^k * r_k with r_k in Q(q).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BiRational {
    terms: BTreeMap<i64, RationalQ>,
}

impl BiRational {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(0, RationalQ::one())
    }

    pub fn from_rational(te: i64, r: RationalQ) -> Self {
        let mut x = Self::zero();
        x.add_term(te, &r);
        x
    }

    pub fn add_term(&mut self, te: i64, r: &RationalQ) {
        if r.is_zero() {
            return;
        }
        let slot = self.terms.entry(te).or_insert_with(RationalQ::zero);
        *slot = &*slot + r;
        if slot.is_zero() {
            self.terms.remove(&te);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<i64, RationalQ> {
        &self.terms
    }

    pub fn coeff(&self, te: i64) -> RationalQ {
        self.terms.get(&te).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (t, c) in &other.terms {
            r.add_term(*t, c);
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (t, c) in &self.terms {
            for (t2, c2) in &other.terms {
                r.add_term(t + t2, &(c * c2));
            }
        }
        r
    }

    pub fn scale(&self, c: &RationalQ) -> Self {
        let mut r = Self::zero();
        for (t, x) in &self.terms {
            r.add_term(*t, &(x * c));
        }
        r
    }

    /// Multiply by t^a q^b.
    pub fn shift(&self, te: i64, qe: i64) -> Self {
        let m = RationalQ::q_pow(qe);
        Self {
            terms: self.terms.iter().map(|(t, c)| (t + te, c * &m)).collect(),
        }
    }

    /// Substitute t = -1.
    pub fn specialize(&self) -> RationalQ {
        let mut acc = RationalQ::zero();
        for (t, c) in &self.terms {
            if t.rem_euclid(2) == 1 {
                acc = &acc - c;
            } else {
                acc = &acc + c;
            }
        }
        acc
    }
}

impl fmt::Display for BiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match *t {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{t}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
