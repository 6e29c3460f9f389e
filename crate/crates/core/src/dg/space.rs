//! Subspaces of Q^n given by spanning vectors.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalars::linalg::{nullspace, rref};

pub type Q = BigRational;
pub type Vector = Vec<Q>;

pub fn zeros(n: usize) -> Vector {
    vec![Q::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zeros(n);
    v[i] = Q::one();
    v
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn axpy(acc: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn sub(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// A subspace in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let mut rows: Vec<Vector> = vectors.to_vec();
        if rows.is_empty() {
            return Self::zero(ambient);
        }
        let pivots = rref(&mut rows);
        rows.truncate(pivots.len());
        Self {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// v minus its component along the pivot directions; zero iff v lies in the space.
    pub fn reduce(&self, v: &[Q]) -> Vector {
        let mut out = v.to_vec();
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                axpy(&mut out, &-c, r);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero(&self.reduce(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// Coordinates in the echelon basis, if v lies in the space.
    pub fn coordinates(&self, v: &[Q]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

/// Solve sum_i c_i vectors[i] = target, if possible.
pub fn solve_combination(vectors: &[Vector], target: &[Q]) -> Option<Vector> {
    let n = target.len();
    let k = vectors.len();
    // columns: the vectors, then -target; look for a kernel vector ending in 1
    let rows: Vec<Vector> = (0..n)
        .map(|i| {
            let mut row: Vector = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(-target[i].clone());
            row
        })
        .collect();
    if rows.is_empty() {
        return Some(zeros(k));
    }
    let ker = nullspace(&rows, k + 1);
    let mut best: Option<Vector> = None;
    for v in ker {
        if !v[k].is_zero() {
            let inv = v[k].recip();
            best = Some(v[..k].iter().map(|x| x * &inv).collect());
            break;
        }
    }
    best
}

/// Rank of a list of vectors.
pub fn rank(vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let mut rows = vectors.to_vec();
    rref(&mut rows).len()
}
