//! Finite-dimensional negative dg algebras: radicals, the ideal J_bullet,
//! contractible blocks and the type I / type II counts.

mod algebra;
mod space;

use std::collections::BTreeMap;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use algebra::{rational_roots, Algebra, DgAlgebra, DgModule};
pub use space::{Subspace, Vector, Q};

use crate::error::{Error, Result};
use crate::klr::{basis_elements, Klr, KlrElement, NormalForm, Strategy};
use crate::root_data::{RootConfig, Weight};
use space::{unit_vector, zeros};

impl DgAlgebra {
    /// The ground field, concentrated in degree (0, 0).
    pub fn ground() -> Self {
        DgAlgebra {
            alg: Algebra {
                symbols: vec!["1".into()],
                bidegrees: vec![(0, 0)],
                table: vec![vec![vec![Q::one()]]],
                unit: vec![Q::one()],
            },
            d: vec![vec![Q::zero()]],
        }
    }

    /// Lambda_y = Q[y]/(y^2), y in degree (-1, 0), d(y) = 1.
    pub fn lambda_y() -> Self {
        let one = Q::one();
        let z = Q::zero();
        DgAlgebra {
            alg: Algebra {
                symbols: vec!["1".into(), "y".into()],
                bidegrees: vec![(0, 0), (-1, 0)],
                table: vec![
                    vec![vec![one.clone(), z.clone()], vec![z.clone(), one.clone()]],
                    vec![vec![z.clone(), one.clone()], vec![z.clone(), z.clone()]],
                ],
                unit: vec![one.clone(), z.clone()],
            },
            d: vec![vec![z.clone(), z.clone()], vec![one, z]],
        }
    }

    /// R(nu) for nu = k m, which is finite-dimensional with basis psi_w e(m^k).
    pub fn from_klr(m: u32, nu: &Weight) -> Result<Self> {
        let cfg = RootConfig::new(m, 1)?;
        for i in 1..m {
            if nu.get(i) > 0 {
                return Err(Error::InfiniteDimensional(format!(
                    "R(nu) has dots on label {i}"
                )));
            }
        }
        let k = nu.get(m) as usize;
        let klr = Klr::new(m, Strategy::BottomUp)?;
        let seq = vec![m; k];
        let basis: Vec<NormalForm> = basis_elements(&seq, &seq, m, 0);
        let index: BTreeMap<&NormalForm, usize> = basis.iter().enumerate().map(|(a, nf)| (nf, a)).collect();
        let n = basis.len();
        let coords = |x: &KlrElement| -> Vector {
            let mut v = zeros(n);
            for (nf, c) in x.terms() {
                v[index[nf]] = Q::from_integer(c.clone());
            }
            v
        };
        let elems: Vec<KlrElement> = basis.iter().cloned().map(KlrElement::basis).collect();
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| coords(&klr.multiply(a, b))).collect())
            .collect();
        let d = elems.iter().map(|a| coords(&klr.differential(a))).collect();
        let unit = coords(&KlrElement::idempotent(seq.clone()));
        Ok(DgAlgebra {
            alg: Algebra {
                symbols: basis.iter().map(|nf| nf.to_string()).collect(),
                bidegrees: basis.iter().map(|nf| nf.bidegree(&cfg)).collect(),
                table,
                unit,
            },
            d,
        })
    }

    /// J(A^0), embedded in A.
    pub fn radical0(&self) -> Result<Subspace> {
        self.alg.check()?;
        let idx = self.degree_indices(0);
        let a0 = self.alg.restrict(&idx);
        let j = a0.radical();
        let embedded: Vec<Vector> = j
            .basis()
            .iter()
            .map(|v| {
                let mut out = zeros(self.dim());
                for (p, &a) in idx.iter().enumerate() {
                    out[a] = v[p].clone();
                }
                out
            })
            .collect();
        Ok(Subspace::span(self.dim(), &embedded))
    }

    /// J_bullet(A) = A^{<=-2} + {a in A^{-1} : d(a) in J(A^0)} + J(A^0).
    pub fn j_bullet(&self) -> Result<Subspace> {
        let n = self.dim();
        let j0 = self.radical0()?;
        let mut gens: Vec<Vector> = j0.basis().to_vec();
        for a in 0..n {
            if self.alg.bidegrees[a].0 <= -2 {
                gens.push(unit_vector(n, a));
            }
        }
        // tilde A: kernel of A^{-1} -> A^0 / J(A^0)
        let minus1 = self.degree_indices(-1);
        let images: Vec<Vector> = minus1.iter().map(|&a| j0.reduce(&self.d[a])).collect();
        let rows: Vec<Vector> = (0..n)
            .map(|c| images.iter().map(|v| v[c].clone()).collect())
            .collect();
        for k in crate::scalars::linalg::nullspace(&rows, minus1.len()) {
            let mut v = zeros(n);
            for (p, &a) in minus1.iter().enumerate() {
                v[a] = k[p].clone();
            }
            gens.push(v);
        }
        Ok(Subspace::span(n, &gens))
    }

    /// A_bullet = A / J_bullet(A) with the induced differential.
    pub fn a_bullet(&self) -> Result<DgAlgebra> {
        let j = self.j_bullet()?;
        let (alg, keep) = self.alg.quotient(&j);
        let d = keep
            .iter()
            .map(|&a| {
                let r = j.reduce(&self.d[a]);
                keep.iter().map(|&c| r[c].clone()).collect()
            })
            .collect();
        Ok(DgAlgebra { alg, d })
    }

    /// Type I / type II analysis.
    pub fn classify(&self) -> Result<DgAnalysis> {
        self.check()?;
        let rad0 = self.radical0()?;
        let jb = self.j_bullet()?;
        let ab = self.a_bullet()?;
        let idx0 = ab.degree_indices(0);
        let s = ab.alg.restrict(&idx0);
        if s.radical().dim() != 0 {
            return Err(Error::Domain("A^0_bullet is not semisimple".into()));
        }
        let idempotents = s.central_idempotents(0)?;
        // d(A^{-1}_bullet), in A^0_bullet coordinates
        let image: Vec<Vector> = ab
            .degree_indices(-1)
            .iter()
            .map(|&a| idx0.iter().map(|&c| ab.d[a][c].clone()).collect())
            .collect();
        let image = Subspace::span(idx0.len(), &image);
        let mut blocks = Vec::new();
        for e in &idempotents {
            let dim = s.block_dim(e);
            let n = (dim as f64).sqrt().round() as usize;
            if n * n != dim {
                return Err(Error::NonSplit(format!("block of dimension {dim} is not a matrix algebra")));
            }
            let contractible = image.contains(e);
            blocks.push(BlockInfo {
                dim,
                matrix_size: n,
                contractible,
            });
        }
        blocks.sort_by_key(|b| (b.contractible, b.dim));
        let m_ii = blocks.iter().filter(|b| b.contractible).count();
        let m_i = blocks.len() - m_ii;
        Ok(DgAnalysis {
            dim: self.dim(),
            radical0_dim: rad0.dim(),
            jbullet_dim: jb.dim(),
            abullet_dim: ab.dim(),
            blocks,
            m_i,
            m_ii,
            k0_rank: m_i,
            g0_rank: m_i,
        })
    }

    pub fn to_json(&self) -> AlgebraJson {
        let n = self.dim();
        let mut products = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for (c, v) in self.alg.table[a][b].iter().enumerate() {
                    if !v.is_zero() {
                        products.push((a, b, c, v.to_string()));
                    }
                }
            }
        }
        let mut differential = Vec::new();
        for a in 0..n {
            for (c, v) in self.d[a].iter().enumerate() {
                if !v.is_zero() {
                    differential.push((a, c, v.to_string()));
                }
            }
        }
        let unit = self
            .alg
            .unit
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(a, v)| (a, v.to_string()))
            .collect();
        AlgebraJson {
            symbols: self.alg.symbols.clone(),
            bidegrees: self.alg.bidegrees.clone(),
            products,
            differential,
            unit,
        }
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self> {
        let n = j.symbols.len();
        if j.bidegrees.len() != n {
            return Err(Error::ArityMismatch(j.bidegrees.len(), n));
        }
        let parse = |s: &str| Q::from_str(s).map_err(|_| Error::Parse(format!("bad rational `{s}`")));
        let check = |i: usize| -> Result<usize> {
            if i < n {
                Ok(i)
            } else {
                Err(Error::IndexOutOfRange { index: i as u32, max: n as u32 })
            }
        };
        let mut table = vec![vec![zeros(n); n]; n];
        for (a, b, c, v) in &j.products {
            table[check(*a)?][check(*b)?][check(*c)?] += parse(v)?;
        }
        let mut d = vec![zeros(n); n];
        for (a, c, v) in &j.differential {
            d[check(*a)?][check(*c)?] += parse(v)?;
        }
        let mut unit = zeros(n);
        for (a, v) in &j.unit {
            unit[check(*a)?] += parse(v)?;
        }
        Ok(DgAlgebra {
            alg: Algebra {
                symbols: j.symbols.clone(),
                bidegrees: j.bidegrees.clone(),
                table,
                unit,
            },
            d,
        })
    }
}

/// Serialized algebra: structure constants (a, b, c, coefficient of e_c in
/// e_a e_b), differential entries (a, c, coefficient of e_c in d(e_a)) and
/// the unit. Coefficients are rationals written as strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub symbols: Vec<String>,
    pub bidegrees: Vec<(i64, i64)>,
    pub products: Vec<(usize, usize, usize, String)>,
    pub differential: Vec<(usize, usize, String)>,
    pub unit: Vec<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockInfo {
    pub dim: usize,
    pub matrix_size: usize,
    pub contractible: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DgAnalysis {
    pub dim: usize,
    pub radical0_dim: usize,
    pub jbullet_dim: usize,
    pub abullet_dim: usize,
    pub blocks: Vec<BlockInfo>,
    #[serde(rename = "m_I")]
    pub m_i: usize,
    #[serde(rename = "m_II")]
    pub m_ii: usize,
    pub k0_rank: usize,
    pub g0_rank: usize,
}

/// Summary of a plain algebra: radical and block structure of the semisimple quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraSummary {
    pub dim: usize,
    pub radical_dim: usize,
    pub block_dims: Vec<usize>,
    /// Number of basis elements per bidegree.
    pub graded_dims: BTreeMap<String, usize>,
}

pub fn summarize(alg: &Algebra) -> Result<AlgebraSummary> {
    alg.check()?;
    let j = alg.radical();
    let (s, _) = alg.quotient(&j);
    let mut block_dims: Vec<usize> = s
        .central_idempotents(0)?
        .iter()
        .map(|e| s.block_dim(e))
        .collect();
    block_dims.sort();
    let mut graded_dims = BTreeMap::new();
    for &(a, b) in &alg.bidegrees {
        *graded_dims.entry(format!("{a},{b}")).or_insert(0) += 1;
    }
    Ok(AlgebraSummary {
        dim: alg.dim(),
        radical_dim: j.dim(),
        block_dims,
        graded_dims,
    })
}
