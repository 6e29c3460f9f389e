use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{poly_div_exact, poly_gcd, poly_mul, poly_sub, LaurentPoly};
use super::rational::RationalQ;

/// Rank over Q(q), by fraction-free elimination over Z[q].
pub fn rank_over_qq(m: &[Vec<RationalQ>]) -> usize {
    let rows: Vec<Vec<Vec<BigInt>>> = m.iter().map(|r| clear_row(r)).collect();
    bareiss_rank(rows)
}

/// Scale a row by a common denominator and a power of q so every entry is an
/// ordinary polynomial; returns dense coefficient vectors.
fn clear_row(row: &[RationalQ]) -> Vec<Vec<BigInt>> {
    // lcm of denominators (all have min exponent 0)
    let mut l: Vec<BigInt> = vec![BigInt::one()];
    for x in row.iter().filter(|x| !x.is_zero()) {
        let (_, d) = x.den().to_dense();
        let g = poly_gcd(&l, &d);
        l = poly_div_exact(&poly_mul(&l, &d), &g).expect("gcd divides product");
    }
    let lp = LaurentPoly::from_dense(0, &l);
    let scaled: Vec<LaurentPoly> = row
        .iter()
        .map(|x| {
            if x.is_zero() {
                return LaurentPoly::zero();
            }
            let (_, d) = x.den().to_dense();
            let (_, lv) = lp.to_dense();
            let cof = poly_div_exact(&lv, &d).expect("denominator divides lcm");
            x.num() * &LaurentPoly::from_dense(0, &cof)
        })
        .collect();
    let lo = scaled.iter().filter_map(|p| p.min_exp()).min().unwrap_or(0);
    scaled
        .iter()
        .map(|p| {
            if p.is_zero() {
                Vec::new()
            } else {
                let s = p.shift(-lo);
                let (sh, v) = s.to_dense();
                let mut out = vec![BigInt::zero(); sh as usize];
                out.extend(v);
                out
            }
        })
        .collect()
}

fn bareiss_rank(mut a: Vec<Vec<Vec<BigInt>>>) -> usize {
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    let mut rank = 0;
    let mut col = 0;
    while rank < nrows && col < ncols {
        let piv = (rank..nrows).find(|&r| !a[r][col].is_empty());
        let Some(p) = piv else {
            col += 1;
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][col].clone();
        for i in rank + 1..nrows {
            let factor = a[i][col].clone();
            for j in col + 1..ncols {
                let t = poly_sub(&poly_mul(&pivot, &a[i][j]), &poly_mul(&factor, &a[rank][j]));
                a[i][j] = poly_div_exact(&t, &prev).expect("Bareiss division is exact");
            }
            a[i][col] = Vec::new();
        }
        prev = pivot;
        rank += 1;
        col += 1;
    }
    rank
}

/// Reduced row echelon form over Q in place; returns pivot columns.
pub fn rref(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let nrows = m.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_q(m: &[Vec<BigRational>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Basis of {x : m x = 0}.
pub fn nullspace(m: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Evaluate a Q(q) matrix at a rational point; None if some denominator vanishes.
pub fn eval_matrix(m: &[Vec<RationalQ>], q: &BigRational) -> Option<Vec<Vec<BigRational>>> {
    m.iter()
        .map(|row| row.iter().map(|x| x.eval_rational(q)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RationalQ {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        let id: Vec<Vec<RationalQ>> = (0..3)
            .map(|i| (0..3).map(|j| RationalQ::from_int((i == j) as i64)).collect())
            .collect();
        assert_eq!(rank_over_qq(&id), 3);
        let z = vec![vec![RationalQ::zero(); 2]; 2];
        assert_eq!(rank_over_qq(&z), 0);
        let m = vec![
            vec![r("1/(1-q^2)"), r("q/(1-q^2)")],
            vec![r("q/(1-q^2)"), r("q^2/(1-q^2)")],
        ];
        assert_eq!(rank_over_qq(&m), 1);
    }

    #[test]
    fn nullspace_dimension() {
        let q = |a: i64| BigRational::from_integer(a.into());
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: BigRational = m[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!(s.is_zero());
        }
    }
}
