//! Finite-dimensional associative algebras over Q and dg algebras built on them.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::space::{axpy, is_zero, rank, solve_combination, sub, unit_vector, zeros, Q, Subspace, Vector};
use crate::error::{Error, Result};
use crate::scalars::linalg::nullspace;

/// An algebra with homogeneous basis and structure constants.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub symbols: Vec<String>,
    pub bidegrees: Vec<(i64, i64)>,
    /// table[a][b] = coordinates of e_a e_b.
    pub table: Vec<Vec<Vector>>,
    pub unit: Vector,
}

impl Algebra {
    pub fn dim(&self) -> usize {
        self.symbols.len()
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vector {
        let n = self.dim();
        let mut out = zeros(n);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xa * yb), &self.table[a][b]);
            }
        }
        out
    }

    pub fn basis_vector(&self, a: usize) -> Vector {
        unit_vector(self.dim(), a)
    }

    /// Associativity on all basis triples and two-sided unit.
    pub fn check(&self) -> Result<()> {
        let n = self.dim();
        for a in 0..n {
            let ea = self.basis_vector(a);
            if self.mul(&self.unit, &ea) != ea || self.mul(&ea, &self.unit) != ea {
                return Err(Error::NonAssociative(format!("unit fails on {}", self.symbols[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    let l = self.mul(&self.table[a][b], &self.basis_vector(c));
                    let r = self.mul(&ea, &self.table[b][c]);
                    if l != r {
                        return Err(Error::NonAssociative(format!(
                            "({} {}) {} != {} ({} {})",
                            self.symbols[a], self.symbols[b], self.symbols[c],
                            self.symbols[a], self.symbols[b], self.symbols[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Trace of left multiplication by x.
    fn trace_left(&self, x: &[Q]) -> Q {
        let mut t = Q::zero();
        for b in 0..self.dim() {
            t += &self.mul(x, &self.basis_vector(b))[b];
        }
        t
    }

    /// Jacobson radical, as the kernel of the trace form tr(L_{xy}).
    /// Valid in characteristic 0.
    pub fn radical(&self) -> Subspace {
        let n = self.dim();
        let gram: Vec<Vector> = (0..n)
            .map(|a| (0..n).map(|b| self.trace_left(&self.table[a][b])).collect())
            .collect();
        Subspace::span(n, &nullspace(&gram, n))
    }

    /// Subalgebra on a set of basis indices closed under multiplication.
    pub fn restrict(&self, idx: &[usize]) -> Algebra {
        let pos = |a: usize| idx.iter().position(|&x| x == a);
        let project = |v: &Vector| -> Vector {
            let mut out = zeros(idx.len());
            for (a, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    let p = pos(a).expect("subalgebra is closed");
                    out[p] = c.clone();
                }
            }
            out
        };
        Algebra {
            symbols: idx.iter().map(|&a| self.symbols[a].clone()).collect(),
            bidegrees: idx.iter().map(|&a| self.bidegrees[a]).collect(),
            table: idx
                .iter()
                .map(|&a| idx.iter().map(|&b| project(&self.table[a][b])).collect())
                .collect(),
            unit: project(&self.unit),
        }
    }

    /// Quotient by a two-sided ideal. The quotient keeps the basis vectors at
    /// the non-pivot positions of the ideal's echelon basis.
    pub fn quotient(&self, ideal: &Subspace) -> (Algebra, Vec<usize>) {
        let keep: Vec<usize> = (0..self.dim()).filter(|c| !ideal.pivots().contains(c)).collect();
        let project = |v: &Vector| -> Vector {
            let r = ideal.reduce(v);
            keep.iter().map(|&a| r[a].clone()).collect()
        };
        let alg = Algebra {
            symbols: keep.iter().map(|&a| self.symbols[a].clone()).collect(),
            bidegrees: keep.iter().map(|&a| self.bidegrees[a]).collect(),
            table: keep
                .iter()
                .map(|&a| keep.iter().map(|&b| project(&self.table[a][b])).collect())
                .collect(),
            unit: project(&self.unit),
        };
        (alg, keep)
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| {
            (0..self.dim()).all(|a| {
                let ea = self.basis_vector(a);
                s.contains(&self.mul(&ea, v)) && s.contains(&self.mul(v, &ea))
            })
        })
    }

    /// Whether every product of `k` elements of s vanishes, for some k <= dim + 1.
    pub fn is_nilpotent(&self, s: &Subspace) -> bool {
        let mut power = s.clone();
        for _ in 0..=self.dim() {
            if power.dim() == 0 {
                return true;
            }
            let prods: Vec<Vector> = power
                .basis()
                .iter()
                .flat_map(|x| s.basis().iter().map(move |y| (x, y)))
                .map(|(x, y)| self.mul(x, y))
                .collect();
            power = Subspace::span(self.dim(), &prods);
        }
        power.dim() == 0
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut rows: Vec<Vector> = Vec::new();
        for b in 0..n {
            let eb = self.basis_vector(b);
            // coefficient of e_c in x e_b - e_b x, as a linear form in x
            let mut cols: Vec<Vector> = Vec::with_capacity(n);
            for a in 0..n {
                let ea = self.basis_vector(a);
                cols.push(sub(&self.mul(&ea, &eb), &self.mul(&eb, &ea)));
            }
            for c in 0..n {
                rows.push((0..n).map(|a| cols[a][c].clone()).collect());
            }
        }
        Subspace::span(n, &nullspace(&rows, n))
    }

    /// Minimal polynomial of x, monic, coefficients from degree 0 upwards.
    pub fn min_poly(&self, x: &[Q]) -> Vec<Q> {
        let mut powers: Vec<Vector> = vec![self.unit.clone()];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), x);
            if let Some(c) = solve_combination(&powers, &next) {
                let mut p: Vec<Q> = c.into_iter().map(|v| -v).collect();
                p.push(Q::one());
                return p;
            }
            powers.push(next);
        }
    }

    fn eval_poly_at(&self, x: &[Q], roots: &[Q]) -> Vector {
        // prod (x - r)
        let mut acc = self.unit.clone();
        for r in roots {
            let shifted: Vector = x
                .iter()
                .zip(&self.unit)
                .map(|(a, u)| a - r * u)
                .collect();
            acc = self.mul(&acc, &shifted);
        }
        acc
    }

    /// Primitive central idempotents, assuming the algebra is semisimple.
    /// Fails when the center is not a product of copies of Q.
    pub fn central_idempotents(&self, seed: u64) -> Result<Vec<Vector>> {
        let z = self.center();
        let r = z.dim();
        if r == 1 {
            return Ok(vec![self.unit.clone()]);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..40 {
            let mut x = zeros(self.dim());
            for v in z.basis() {
                axpy(&mut x, &Q::from_integer(rng.gen_range(-6i64..=6).into()), v);
            }
            let p = self.min_poly(&x);
            if p.len() != r + 1 {
                continue;
            }
            let Some(roots) = rational_roots(&p) else {
                continue;
            };
            if roots.len() != r {
                continue;
            }
            let mut out = Vec::with_capacity(r);
            for (j, lj) in roots.iter().enumerate() {
                let others: Vec<Q> = roots
                    .iter()
                    .enumerate()
                    .filter(|&(l, _)| l != j)
                    .map(|(_, v)| v.clone())
                    .collect();
                let mut denom = Q::one();
                for o in &others {
                    denom *= lj - o;
                }
                let e = self.eval_poly_at(&x, &others);
                out.push(e.iter().map(|c| c / &denom).collect());
            }
            return Ok(out);
        }
        Err(Error::NonSplit(format!(
            "center of dimension {r} is not isomorphic to Q^{r}"
        )))
    }

    /// Dimension of the two-sided ideal e A for a central idempotent e.
    pub fn block_dim(&self, e: &[Q]) -> usize {
        let prods: Vec<Vector> = (0..self.dim())
            .map(|a| self.mul(e, &self.basis_vector(a)))
            .collect();
        rank(&prods)
    }
}

/// All rational roots of a polynomial (coefficients from degree 0), if it
/// splits into distinct rational linear factors; None otherwise.
pub fn rational_roots(p: &[Q]) -> Option<Vec<Q>> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    // clear denominators
    let mut l = BigInt::one();
    for c in p {
        l = l.lcm(c.denom());
    }
    let mut coeffs: Vec<BigInt> = p.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    while coeffs.len() > 1 && coeffs[0].is_zero() {
        roots.push(Q::zero());
        coeffs.remove(0);
    }
    let limit = BigInt::from(1_000_000_000_000i64);
    loop {
        let deg = coeffs.len() - 1;
        if deg == 0 {
            break;
        }
        let a0 = coeffs[0].abs();
        let an = coeffs[deg].abs();
        if a0 > limit || an > limit {
            return None;
        }
        let mut found = None;
        'search: for num in divisors(&a0) {
            for den in divisors(&an) {
                for s in [1, -1] {
                    let cand = Q::new(BigInt::from(s) * &num, den.clone());
                    if eval_int_poly(&coeffs, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        let r = found?;
        if roots.contains(&r) {
            return None;
        }
        // synthetic division over Q, then clear denominators again
        let qc: Vec<Q> = coeffs.iter().map(|c| Q::from_integer(c.clone())).collect();
        let mut quot = vec![Q::zero(); deg];
        let mut carry = Q::zero();
        for k in (0..deg).rev() {
            carry = &qc[k + 1] + &carry * &r;
            quot[k] = carry.clone();
        }
        let mut l = BigInt::one();
        for c in &quot {
            l = l.lcm(c.denom());
        }
        coeffs = quot.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect();
        roots.push(r);
    }
    Some(roots)
}

fn eval_int_poly(coeffs: &[num_bigint::BigInt], x: &Q) -> Q {
    let mut acc = Q::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + Q::from_integer(c.clone());
    }
    acc
}

fn divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    use num_bigint::BigInt;
    let n: u64 = n.try_into().unwrap_or(0);
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    out
}

/// A negative dg algebra: deg1 <= 0 and d of bidegree (+1, 0).
#[derive(Clone, Debug)]
pub struct DgAlgebra {
    pub alg: Algebra,
    /// d[a] = coordinates of d(e_a).
    pub d: Vec<Vector>,
}

impl DgAlgebra {
    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn apply_d(&self, x: &[Q]) -> Vector {
        let mut out = zeros(self.dim());
        for (a, c) in x.iter().enumerate() {
            axpy(&mut out, c, &self.d[a]);
        }
        out
    }

    /// Associativity, unit, negativity, degree of d, d^2 = 0 and Leibniz on basis pairs.
    pub fn check(&self) -> Result<()> {
        self.alg.check()?;
        let n = self.dim();
        let deg = &self.alg.bidegrees;
        for a in 0..n {
            if deg[a].0 > 0 {
                return Err(Error::Domain(format!("{} has positive degree", self.alg.symbols[a])));
            }
            for (c, v) in self.d[a].iter().enumerate() {
                if !v.is_zero() && deg[c] != (deg[a].0 + 1, deg[a].1) {
                    return Err(Error::Domain(format!(
                        "d({}) has a term {} of the wrong degree",
                        self.alg.symbols[a], self.alg.symbols[c]
                    )));
                }
            }
            if !is_zero(&self.apply_d(&self.d[a])) {
                return Err(Error::NotAComplex(self.alg.symbols[a].clone()));
            }
            for b in 0..n {
                let want = (deg[a].0 + deg[b].0, deg[a].1 + deg[b].1);
                if let Some(c) = (0..n).find(|&c| !self.alg.table[a][b][c].is_zero() && deg[c] != want) {
                    return Err(Error::Domain(format!(
                        "{} * {} has a term {} of the wrong degree",
                        self.alg.symbols[a], self.alg.symbols[b], self.alg.symbols[c]
                    )));
                }
                let lhs = self.apply_d(&self.alg.table[a][b]);
                let mut rhs = self.alg.mul(&self.d[a], &self.alg.basis_vector(b));
                let sign = if deg[a].0 % 2 == 0 { Q::one() } else { -Q::one() };
                axpy(&mut rhs, &sign, &self.alg.mul(&self.alg.basis_vector(a), &self.d[b]));
                if lhs != rhs {
                    return Err(Error::Domain(format!(
                        "Leibniz fails on {} * {}",
                        self.alg.symbols[a], self.alg.symbols[b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Indices of basis elements of cohomological degree k.
    pub fn degree_indices(&self, k: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&a| self.alg.bidegrees[a].0 == k).collect()
    }

    /// Whether e = d(x) for some x.
    pub fn is_contractible(&self, e: &[Q]) -> bool {
        let image: Vec<Vector> = self.d.clone();
        Subspace::span(self.dim(), &image).contains(e)
    }

    /// The cross product A_d = A (x) Lambda_d with d a = d(a) + (-1)^{|a|} a d,
    /// as a plain algebra. Basis: e_a, then e_a d.
    pub fn cross_product(&self) -> Algebra {
        let n = self.dim();
        let deg = &self.alg.bidegrees;
        let mut symbols = self.alg.symbols.clone();
        symbols.extend(self.alg.symbols.iter().map(|s| format!("{s}*d")));
        let mut bidegrees = deg.clone();
        bidegrees.extend(deg.iter().map(|&(a, b)| (a + 1, b)));
        let lift = |v: &Vector, shift: usize| -> Vector {
            let mut out = zeros(2 * n);
            for (a, c) in v.iter().enumerate() {
                out[a + shift] = c.clone();
            }
            out
        };
        let mut table = vec![vec![zeros(2 * n); 2 * n]; 2 * n];
        for (x, row) in table.iter_mut().enumerate() {
            for (y, cell) in row.iter_mut().enumerate() {
                let (a, ea) = (x % n, x / n);
                let (b, eb) = (y % n, y / n);
                let mut out = zeros(2 * n);
                if ea == 0 {
                    axpy(&mut out, &Q::one(), &lift(&self.alg.table[a][b], eb * n));
                } else {
                    // e_a d e_b d^eb = e_a d(e_b) d^eb + (-1)^{|b|} e_a e_b d^{1+eb}
                    let adb = self.alg.mul(&self.alg.basis_vector(a), &self.d[b]);
                    axpy(&mut out, &Q::one(), &lift(&adb, eb * n));
                    if eb == 0 {
                        let sign = if deg[b].0 % 2 == 0 { Q::one() } else { -Q::one() };
                        axpy(&mut out, &sign, &lift(&self.alg.table[a][b], n));
                    }
                }
                *cell = out;
            }
        }
        Algebra {
            symbols,
            bidegrees,
            table,
            unit: lift(&self.alg.unit, 0),
        }
    }
}

/// A finite-dimensional complex with homogeneous basis.
#[derive(Clone, Debug)]
pub struct DgModule {
    pub bidegrees: Vec<(i64, i64)>,
    /// d[a] = coordinates of d(v_a).
    pub d: Vec<Vector>,
}

impl DgModule {
    pub fn dim(&self) -> usize {
        self.bidegrees.len()
    }

    /// dim H per bidegree; zero entries are omitted.
    pub fn cohomology(&self) -> Result<std::collections::BTreeMap<(i64, i64), usize>> {
        let n = self.dim();
        for a in 0..n {
            let mut dd = zeros(n);
            for (b, c) in self.d[a].iter().enumerate() {
                axpy(&mut dd, c, &self.d[b]);
            }
            if !is_zero(&dd) {
                return Err(Error::NotAComplex(format!("basis vector {a}")));
            }
        }
        let degrees: std::collections::BTreeSet<(i64, i64)> = self.bidegrees.iter().copied().collect();
        let rank_from = |deg: (i64, i64)| -> usize {
            let imgs: Vec<Vector> = (0..n)
                .filter(|&a| self.bidegrees[a] == deg)
                .map(|a| self.d[a].clone())
                .collect();
            rank(&imgs)
        };
        let mut out = std::collections::BTreeMap::new();
        for &deg in &degrees {
            let dim = self.bidegrees.iter().filter(|&&b| b == deg).count();
            let h = dim - rank_from(deg) - rank_from((deg.0 - 1, deg.1));
            if h > 0 {
                out.insert(deg, h);
            }
        }
        Ok(out)
    }
}

impl DgAlgebra {
    /// The left dg module A e for an idempotent e of bidegree (0, 0) with d(e) = 0.
    pub fn left_module(&self, e: &[Q]) -> Result<DgModule> {
        if !is_zero(&self.apply_d(e)) {
            return Err(Error::Domain("d(e) != 0".into()));
        }
        let n = self.dim();
        let mut degrees: Vec<(i64, i64)> = self.alg.bidegrees.clone();
        degrees.sort();
        degrees.dedup();
        let mut basis: Vec<Vector> = Vec::new();
        let mut bidegrees = Vec::new();
        for deg in degrees {
            let vs: Vec<Vector> = (0..n)
                .filter(|&a| self.alg.bidegrees[a] == deg)
                .map(|a| self.alg.mul(&self.alg.basis_vector(a), e))
                .collect();
            let s = Subspace::span(n, &vs);
            for v in s.basis() {
                basis.push(v.clone());
                bidegrees.push(deg);
            }
        }
        let mut d = Vec::with_capacity(basis.len());
        for v in &basis {
            let dv = self.apply_d(v);
            let c = solve_combination(&basis, &dv)
                .ok_or_else(|| Error::Domain("A e is not d-stable".into()))?;
            d.push(c);
        }
        Ok(DgModule { bidegrees, d })
    }
}
