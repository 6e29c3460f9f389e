use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{poly_div_exact, poly_gcd, LaurentPoly};
use crate::error::Error;

/// Element of Q(q) stored as a canonical fraction of Laurent polynomials.
///
/// The denominator has lowest exponent 0 and positive lowest coefficient,
/// numerator and denominator are coprime over Q[q^{+-1}] and the joint
/// integer content is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RationalQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl<'de> Deserialize<'de> for RationalQ {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: LaurentPoly,
            den: LaurentPoly,
        }
        let r = Raw::deserialize(d)?;
        RationalQ::new(r.num, r.den).map_err(serde::de::Error::custom)
    }
}

impl Default for RationalQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalQ {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int<C: Into<BigInt>>(c: C) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// c * q^e
    pub fn monomial<C: Into<BigInt>>(c: C, e: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, e))
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Laurent polynomial value when the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (dshift, dv) = den.to_dense();
        let (nshift, nv) = num.to_dense();
        let g = poly_gcd(&nv, &dv);
        let (nv, dv) = if g.len() > 1 {
            (
                poly_div_exact(&nv, &g).expect("gcd divides numerator"),
                poly_div_exact(&dv, &g).expect("gcd divides denominator"),
            )
        } else {
            (nv, dv)
        };
        let c = nv
            .iter()
            .chain(dv.iter())
            .fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let sign = if dv[0].is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let f = &c * &sign;
        let nv: Vec<BigInt> = nv.iter().map(|x| x / &f).collect();
        let dv: Vec<BigInt> = dv.iter().map(|x| x / &f).collect();
        // value = q^{nshift} N / (q^{dshift} D)
        Self {
            num: LaurentPoly::from_dense(nshift - dshift, &nv),
            den: LaurentPoly::from_dense(0, &dv),
        }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::normalize(self.num.scale(c), self.den.clone())
    }

    pub fn eval_rational(
        &self,
        q: &num_rational::BigRational,
    ) -> Option<num_rational::BigRational> {
        let n = self.num.eval_rational(q)?;
        let d = self.den.eval_rational(q)?;
        if d.is_zero() {
            None
        } else {
            Some(n / d)
        }
    }
}

impl From<LaurentPoly> for RationalQ {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalQ {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalQ::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RationalQ::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        self + &(-rhs)
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        if self.is_zero() || rhs.is_zero() {
            return RationalQ::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalQ::from_poly(&self.num * &rhs.num);
        }
        RationalQ::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalQ {
    type Output = RationalQ;
    /// Panics on division by zero; use `checked_div` for a fallible version.
    fn div(self, rhs: &RationalQ) -> RationalQ {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

super::laurent::owned_ops!(RationalQ);

impl std::ops::Div for RationalQ {
    type Output = RationalQ;
    fn div(self, rhs: RationalQ) -> RationalQ {
        &self / &rhs
    }
}

impl std::ops::AddAssign<&RationalQ> for RationalQ {
    fn add_assign(&mut self, rhs: &RationalQ) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for RationalQ {
    fn sum<I: Iterator<Item = RationalQ>>(iter: I) -> Self {
        iter.fold(RationalQ::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = if self.num.terms().len() > 1 {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        let d = if self.den.terms().len() > 1 {
            format!("({})", self.den)
        } else {
            self.den.to_string()
        };
        write!(f, "{n}/{d}")
    }
}

impl fmt::Debug for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for RationalQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        super::parse::parse_rational(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RationalQ {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_denominator() {
        let x = r("q^-1/(1-q^-2)");
        assert_eq!(x.den().min_exp(), Some(0));
        assert!(x.den().low_coeff().unwrap().is_positive());
        assert_eq!(x, r("-q/(1-q^2)"));
        assert_eq!(x.to_string(), "-q/(1-q^2)");
    }

    #[test]
    fn spec_examples() {
        assert_eq!(r("1/(1-q^2)") + r("q^2/(1-q^2)"), r("(1+q^2)/(1-q^2)"));
        assert_eq!(r("1/(1-q^2)") * r("1-q^2"), RationalQ::one());
        assert!((r("q/(1+q)") * RationalQ::zero()).is_zero());
    }

    #[test]
    fn cancels_common_factors() {
        let x = r("(1-q^2)/(1-q)");
        assert_eq!(x, r("1+q"));
        assert!(x.den().is_one());
        let y = r("(2-2q^2)/(4+4q)");
        assert_eq!(y.to_string(), "(1-q)/2");
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(RationalQ::one().checked_div(&RationalQ::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn json_roundtrip() {
        let x = r("q^-1/(1-q^-2)");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"num":{"1":"-1"},"den":{"0":"1","2":"-1"}}"#);
        let y: RationalQ = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }
}
