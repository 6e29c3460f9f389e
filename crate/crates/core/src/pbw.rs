//! Root vectors, PBW monomials and their closed-form norms, and the explicit
//! elements that the PBW straightening argument places in the radical.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::error::{Error, Result};
use crate::free_super::{FreeElement, TensorElement, Word};
use crate::root_data::{PbwMonomial, PositiveRoot, RootConfig, Weight};
use crate::scalars::{q_int, LaurentPoly, RationalQ};

pub struct RootVectorTable {
    cfg: RootConfig,
    memo: RwLock<HashMap<PositiveRoot, FreeElement>>,
}

fn sign(e: u32) -> i64 {
    if e % 2 == 1 {
        -1
    } else {
        1
    }
}

impl RootVectorTable {
    pub fn new(cfg: RootConfig) -> Self {
        Self {
            cfg,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &RootConfig {
        &self.cfg
    }

    /// theta_a = theta_{a'} theta_j - (-1)^{p(a')p(j)} q^{a'.a_j} theta_j theta_{a'}
    pub fn root_vector(&self, a: PositiveRoot) -> FreeElement {
        if let Some(v) = self.memo.read().unwrap().get(&a) {
            return v.clone();
        }
        let v = if a.start == a.end {
            FreeElement::gen(a.start)
        } else {
            let prev = PositiveRoot::new(a.start, a.end - 1);
            let tp = self.root_vector(prev);
            let j = a.end;
            let tj = FreeElement::gen(j);
            let e = self
                .cfg
                .bullet_ext(&Weight::of_root(prev), &Weight::of_word(&[j]));
            let s = sign((self.cfg.root_parity(prev) * self.cfg.parity(j)) as u32);
            let c = RationalQ::monomial(s, e);
            tp.mul(&tj).sub(&tj.mul(&tp).scale(&c))
        };
        self.memo.write().unwrap().insert(a, v.clone());
        v
    }

    pub fn pbw_element(&self, m: &PbwMonomial) -> Result<FreeElement> {
        let mut acc = FreeElement::one();
        for &(a, e) in &m.0 {
            if self.cfg.root_parity(a) == 1 && e > 1 {
                return Err(Error::Domain(format!("odd root {a} with exponent {e}")));
            }
            acc = acc.mul(&self.root_vector(a).pow(e));
        }
        Ok(acc)
    }

    /// The three-part expansion of Delta(theta_{a_i..a_j}).
    pub fn comult_closed(&self, a: PositiveRoot) -> TensorElement {
        let cfg = &self.cfg;
        let t = self.root_vector(a);
        let mut r = TensorElement::from_factors(&[t.clone(), FreeElement::one()]);
        r = r.add(&TensorElement::from_factors(&[FreeElement::one(), t]));
        for s in a.start..a.end {
            let b = cfg.bullet(s, s + 1);
            let c = &RationalQ::q_pow(-b) - &RationalQ::q_pow(b);
            let left = self.root_vector(PositiveRoot::new(s + 1, a.end));
            let right = self.root_vector(PositiveRoot::new(a.start, s));
            r = r.add(&TensorElement::from_factors(&[left, right]).scale(&c));
        }
        r
    }
}

/// Closed form of (theta_a, theta_a).
pub fn form_root_closed(cfg: &RootConfig, a: PositiveRoot) -> RationalQ {
    let (i, j, m) = (a.start as i64, a.end as i64, cfg.m as i64);
    let one = LaurentPoly::one();
    if j < m {
        RationalQ::new(LaurentPoly::monomial(1, -2 * (j - i)), &one - &LaurentPoly::monomial(1, 2))
            .unwrap()
    } else if j == m {
        RationalQ::q_pow(-2 * (j - i))
    } else if m < i {
        RationalQ::new(LaurentPoly::monomial(1, 2 * (j - i)), &one - &LaurentPoly::monomial(1, -2))
            .unwrap()
    } else if m == i {
        RationalQ::q_pow(2 * (j - i))
    } else {
        RationalQ::q_pow(2 * (i + j - 2 * m))
    }
}

/// Product formula for the form on ordered PBW monomials (diagonal).
pub fn form_pbw_closed(cfg: &RootConfig, a: &PbwMonomial, b: &PbwMonomial) -> RationalQ {
    if a != b {
        return RationalQ::zero();
    }
    let mut acc = RationalQ::one();
    for &(r, n) in &a.0 {
        let w = Weight::of_root(r);
        let aa = cfg.bullet_ext(&w, &w);
        let p = cfg.root_parity(r) as u32;
        acc = &acc * &form_root_closed(cfg, r).pow(n);
        for k in 1..=n {
            let s = LaurentPoly::from_terms(
                (0..k as i64).map(|t| (-t * aa, sign(t as u32 * p))),
            );
            acc = &acc * &RationalQ::from_poly(s);
        }
    }
    acc
}

/// An element claimed to lie in the radical, with a label saying where it comes from.
#[derive(Clone, Debug)]
pub struct RadicalInstance {
    pub family: &'static str,
    pub label: String,
    pub element: FreeElement,
}

fn w(v: &[u32]) -> FreeElement {
    FreeElement::word(v.to_vec())
}

fn qq(e: i64) -> RationalQ {
    RationalQ::q_pow(e)
}

fn q_plus_qinv() -> RationalQ {
    q_int(2)
}

/// Generators of the ideal J.
pub fn ideal_generators(cfg: &RootConfig) -> Vec<RadicalInstance> {
    let mut out = Vec::new();
    let m = cfg.m;
    let r = cfg.rank();
    if m >= 2 && m < r {
        let x = w(&[m, m - 1, m + 1, m])
            .scale(&q_plus_qinv())
            .sub(&w(&[m - 1, m, m + 1, m]))
            .sub(&w(&[m, m - 1, m, m + 1]))
            .sub(&w(&[m, m + 1, m, m - 1]))
            .sub(&w(&[m + 1, m, m - 1, m]));
        out.push(RadicalInstance {
            family: "J1",
            label: format!("quartic relation at m={m}"),
            element: x,
        });
    }
    out.push(RadicalInstance {
        family: "J2",
        label: format!("theta_{m}^2"),
        element: w(&[m, m]),
    });
    for i in 1..=r {
        for j in 1..=r {
            if i.abs_diff(j) > 1 && i < j {
                out.push(RadicalInstance {
                    family: "J3",
                    label: format!("[theta_{i}, theta_{j}]"),
                    element: w(&[i, j]).sub(&w(&[j, i])),
                });
            }
        }
    }
    for i in 1..=r {
        if i == m {
            continue;
        }
        for j in [i.wrapping_sub(1), i + 1] {
            if j == 0 || j > r {
                continue;
            }
            let x = w(&[i, j, i])
                .scale(&q_plus_qinv())
                .sub(&w(&[i, i, j]))
                .sub(&w(&[j, i, i]));
            out.push(RadicalInstance {
                family: "J4",
                label: format!("Serre({i},{j})"),
                element: x,
            });
        }
    }
    out
}

/// All words u, v with |u| + |v| <= extra, for two-sided multiples.
pub fn two_sided_multiples(cfg: &RootConfig, x: &RadicalInstance, extra: u32) -> Vec<RadicalInstance> {
    let letters: Vec<u32> = cfg.indices().collect();
    let mut words_by_len: Vec<Vec<Word>> = vec![vec![Vec::new()]];
    for len in 1..=extra as usize {
        let prev = &words_by_len[len - 1];
        let next: Vec<Word> = prev
            .iter()
            .flat_map(|p| {
                letters.iter().map(move |&l| {
                    let mut v = p.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        words_by_len.push(next);
    }
    let mut out = Vec::new();
    for lu in 0..=extra as usize {
        for lv in 0..=(extra as usize - lu) {
            for u in &words_by_len[lu] {
                for v in &words_by_len[lv] {
                    out.push(RadicalInstance {
                        family: x.family,
                        label: format!("{u:?}*({})*{v:?}", x.label),
                        element: w(u).mul(&x.element).mul(&w(v)),
                    });
                }
            }
        }
    }
    out
}

fn rw(a: PositiveRoot) -> Weight {
    Weight::of_root(a)
}

/// Instances of the PBW commutation propositions, the root Serre lemma and
/// the odd-square rule, for all root pairs of total size at most `max_size`.
pub fn pbw_instances(t: &RootVectorTable, max_size: u32) -> Vec<RadicalInstance> {
    let cfg = *t.config();
    let roots = cfg.root_order();
    let m = cfg.m;
    let mut out = Vec::new();
    let th = |a: PositiveRoot| t.root_vector(a);
    let psign = |a: PositiveRoot, b: PositiveRoot| sign((cfg.root_parity(a) * cfg.root_parity(b)) as u32);
    for &a in &roots {
        for &b in &roots {
            if a.len() + b.len() > max_size {
                continue;
            }
            let (i, j, k, l) = (a.start, a.end, b.start, b.end);
            let ab = th(a).mul(&th(b));
            let ba = th(b).mul(&th(a));
            let lab = format!("a={a} b={b}");
            if k > j + 1 {
                out.push(RadicalInstance {
                    family: "pbw1",
                    label: lab.clone(),
                    element: ab.sub(&ba),
                });
            }
            if k == j + 1 {
                let e = cfg.bullet_ext(&rw(a), &rw(b));
                let c = RationalQ::monomial(psign(a, b), e);
                let x = ab.sub(&ba.scale(&c)).sub(&th(PositiveRoot::new(i, l)));
                out.push(RadicalInstance {
                    family: "pbw2",
                    label: lab.clone(),
                    element: x,
                });
            }
            if i < k && l < j {
                let x = ab.sub(&ba.scale(&RationalQ::from_int(psign(a, b))));
                out.push(RadicalInstance {
                    family: "pbw3",
                    label: lab.clone(),
                    element: x,
                });
            }
            if i == k && j > l && i < cfg.rank() {
                // The sign is the super sign of the two roots; it differs from
                // (-1)^{p(i)p(i+1)} when both roots are odd and i != m.
                let e = cfg.bullet(i, i + 1);
                let e = if i != m { e } else { -e };
                let x = ab.sub(&ba.scale(&RationalQ::monomial(psign(a, b), e)));
                out.push(RadicalInstance {
                    family: "pbw4",
                    label: lab.clone(),
                    element: x,
                });
            }
            if i < k && j == l && j >= 2 {
                let e = cfg.bullet(j - 1, j);
                let e = if j != m { -e } else { e };
                let x = ab.sub(&ba.scale(&RationalQ::monomial(psign(a, b), e)));
                out.push(RadicalInstance {
                    family: "pbw5",
                    label: lab.clone(),
                    element: x,
                });
            }
            if i < k && k < j && j < l {
                let g = th(PositiveRoot::new(i, l)).mul(&th(PositiveRoot::new(k, j)));
                // One formula covers j = m as well once the super sign is used.
                let e = cfg.bullet(j, j + 1);
                let x = ab
                    .sub(&ba.scale(&RationalQ::from_int(psign(a, b))))
                    .sub(&g.scale(&(&qq(-e) - &qq(e))));
                out.push(RadicalInstance {
                    family: "pbw6",
                    label: lab.clone(),
                    element: x,
                });
            }
            if cfg.root_parity(a) == 0 && k == j + 1 && 2 * a.len() + b.len() <= max_size {
                let two = q_plus_qinv().inv().unwrap();
                let ta = th(a);
                let tb = th(b);
                let x = ta
                    .mul(&tb)
                    .mul(&ta)
                    .sub(&ta.mul(&ta).mul(&tb).scale(&two))
                    .sub(&tb.mul(&ta).mul(&ta).scale(&two));
                out.push(RadicalInstance {
                    family: "rootserre",
                    label: lab.clone(),
                    element: x,
                });
            }
        }
        if cfg.root_parity(a) == 1 && 2 * a.len() <= max_size {
            out.push(RadicalInstance {
                family: "pbw7",
                label: format!("a={a}"),
                element: th(a).pow(2),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rq;

    #[test]
    fn root_vector_examples() {
        let c = RootConfig::new(2, 1).unwrap();
        let t = RootVectorTable::new(c);
        assert_eq!(t.root_vector(PositiveRoot::simple(1)), FreeElement::gen(1));
        let v = t.root_vector(PositiveRoot::new(1, 2));
        assert_eq!(v.coeff(&[1, 2]), RationalQ::one());
        assert_eq!(v.coeff(&[2, 1]), rq("-q^-1"));
        let t = RootVectorTable::new(RootConfig::new(2, 2).unwrap());
        assert_eq!(t.root_vector(PositiveRoot::new(1, 3)).terms().len(), 4);
    }

    #[test]
    fn pbw_element_cap() {
        let c = RootConfig::new(2, 1).unwrap();
        let t = RootVectorTable::new(c);
        assert_eq!(t.pbw_element(&PbwMonomial(vec![])).unwrap(), FreeElement::one());
        assert!(t.pbw_element(&PbwMonomial(vec![(PositiveRoot::simple(2), 2)])).is_err());
        let x = t.pbw_element(&PbwMonomial(vec![(PositiveRoot::simple(1), 2)])).unwrap();
        assert_eq!(x, FreeElement::word(vec![1, 1]));
    }

    #[test]
    fn closed_forms() {
        let c = RootConfig::new(3, 1).unwrap();
        assert_eq!(form_root_closed(&c, PositiveRoot::new(1, 2)), rq("q^-2/(1-q^2)"));
        let c = RootConfig::new(2, 2).unwrap();
        assert_eq!(form_root_closed(&c, PositiveRoot::new(1, 3)), RationalQ::one());
        let a = PbwMonomial(vec![(PositiveRoot::simple(1), 1)]);
        let b = PbwMonomial(vec![(PositiveRoot::simple(1), 2)]);
        assert!(form_pbw_closed(&c, &a, &b).is_zero());
    }
}
