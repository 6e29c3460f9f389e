use super::laurent::LaurentPoly;
use super::rational::RationalQ;
use crate::error::Error;

/// [p] = (q^p - q^-p)/(q - q^-1) = q^{p-1} + q^{p-3} + ... + q^{1-p}
pub fn q_int_poly(p: u32) -> LaurentPoly {
    let p = p as i64;
    LaurentPoly::from_terms((0..p).map(|k| (p - 1 - 2 * k, 1)))
}

pub fn q_int(p: u32) -> RationalQ {
    RationalQ::from_poly(q_int_poly(p))
}

pub fn q_fact(p: u32) -> RationalQ {
    let mut acc = LaurentPoly::one();
    for k in 1..=p {
        acc = &acc * &q_int_poly(k);
    }
    RationalQ::from_poly(acc)
}

/// Quantum binomial, computed by the q-Pascal rule so no division is needed.
pub fn q_binom(p: u32, g: u32) -> Result<RationalQ, Error> {
    if g > p {
        return Err(Error::Domain(format!("q_binom({p},{g}) needs g <= p")));
    }
    // {n brack k} = q^{n-k} {n-1 brack k-1} + q^{-k} {n-1 brack k}
    let mut row = vec![LaurentPoly::one()];
    for n in 1..=p as i64 {
        let mut next = Vec::with_capacity(n as usize + 1);
        for k in 0..=n {
            let mut v = LaurentPoly::zero();
            if k >= 1 {
                v += &row[(k - 1) as usize].shift(n - k);
            }
            if k < n {
                v += &row[k as usize].shift(-k);
            }
            next.push(v);
        }
        row = next;
    }
    Ok(RationalQ::from_poly(row[g as usize].clone()))
}

/// Quantum multinomial [n]!/([k_1]!...[k_r]!) for k summing to n.
pub fn q_multinom(parts: &[u32]) -> RationalQ {
    let n: u32 = parts.iter().sum();
    let mut acc = q_fact(n);
    for &k in parts {
        acc = &acc / &q_fact(k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(q_int(2).to_string(), "q^-1+q");
        assert!(q_fact(0).is_one());
        assert_eq!(q_binom(2, 1).unwrap(), q_int(2));
        assert!(q_binom(1, 2).is_err());
        assert_eq!(q_int(0), RationalQ::zero());
    }

    #[test]
    fn binom_matches_factorial_quotient() {
        for p in 0..7 {
            for g in 0..=p {
                let lhs = q_binom(p, g).unwrap();
                let rhs = &q_fact(p) / &(&q_fact(g) * &q_fact(p - g));
                assert_eq!(lhs, rhs, "p={p} g={g}");
            }
        }
    }
}
