use superklr::bilinear_form::{form_graphical, FormEngine};
use superklr::free_super::{coproduct, coproduct_iter, divided_power, FreeElement, TensorElement};
use superklr::pbw::{
    form_pbw_closed, form_root_closed, ideal_generators, pbw_instances, two_sided_multiples,
    RootVectorTable,
};
use superklr::root_data::{PositiveRoot, RootConfig, Weight};
use superklr::scalars::{q_fact, q_int, rq, LaurentPoly, RationalQ};

fn cfg(m: u32, n: u32) -> RootConfig {
    RootConfig::new(m, n).unwrap()
}

#[test]
fn gen3_table() {
    // m-1 = 1, m = 2, m+1 = 3
    let c = cfg(2, 2);
    let e = FormEngine::new(c);
    let a = [2, 1, 3, 2];
    let b = [2, 1, 2, 3];
    let x = [1, 2, 3, 2];
    let y = [3, 2, 1, 2];
    let z = [2, 3, 2, 1];
    let table: [(&[u32], &[u32], &str); 15] = [
        (&a, &a, "0"),
        (&a, &b, "q^-1/(1-q^-2)"),
        (&a, &x, "-q^-1/(1-q^-2)"),
        (&a, &y, "q^-1/(1-q^-2)"),
        (&a, &z, "-q^-1/(1-q^-2)"),
        (&b, &b, "1/(1-q^-2)"),
        (&b, &x, "0"),
        (&b, &y, "q^-2/(1-q^-2)"),
        (&b, &z, "0"),
        (&x, &x, "1/(1-q^2)"),
        (&x, &y, "0"),
        (&x, &z, "q^2/(1-q^2)"),
        (&y, &y, "1/(1-q^-2)"),
        (&y, &z, "0"),
        (&z, &z, "1/(1-q^2)"),
    ];
    for (u, v, want) in table {
        assert_eq!(e.form(u, v), rq(want), "{u:?} {v:?}");
        assert_eq!(form_graphical(&c, u, v), rq(want), "{u:?} {v:?}");
    }
    // the gen3 element
    let mut g = FreeElement::term(a.to_vec(), q_int(2));
    for w in [x, b, z, y] {
        g.add_term(w.to_vec(), &rq("-1"));
    }
    assert!(e.radical_contains(&g).unwrap());
}

/// Independent transcription of the six gen4 pairings for i and its neighbour j.
fn gen4_expected(c: &RootConfig, i: u32, j: u32) -> Vec<(Vec<u32>, Vec<u32>, RationalQ)> {
    let qq = c.bullet(i, i);
    let base = &LaurentPoly::one() - &LaurentPoly::monomial(1, qq);
    let den = base.pow(if c.is_odd(j) { 2 } else { 3 });
    let f = |num: LaurentPoly| RationalQ::new(num, den.clone()).unwrap();
    let one_plus = &LaurentPoly::one() + &LaurentPoly::monomial(1, -qq);
    let qplus = &LaurentPoly::monomial(1, 1) + &LaurentPoly::monomial(1, -1);
    let aa = vec![i, i, j];
    let ab = vec![i, j, i];
    let ba = vec![j, i, i];
    vec![
        (aa.clone(), aa.clone(), f(one_plus.clone())),
        (aa.clone(), ab.clone(), f(qplus.clone())),
        (aa.clone(), ba.clone(), f(qplus.shift(-c.bullet(i, j)))),
        (ab.clone(), ab.clone(), f(LaurentPoly::constant(2))),
        (ab.clone(), ba.clone(), f(qplus.clone())),
        (ba.clone(), ba.clone(), f(one_plus)),
    ]
}

#[test]
fn gen4_table_both_parities() {
    // (config, i, neighbour): neighbour even, neighbour odd, and minus cases
    let cases = [
        (cfg(3, 1), 1, 2),
        (cfg(2, 1), 1, 2),
        (cfg(1, 3), 2, 3),
        (cfg(2, 2), 3, 2),
        (cfg(3, 2), 2, 1),
        (cfg(1, 4), 3, 2),
    ];
    for (c, i, j) in cases {
        let e = FormEngine::new(c);
        for (u, v, want) in gen4_expected(&c, i, j) {
            assert_eq!(e.form(&u, &v), want, "m={} n={} {u:?} {v:?}", c.m, c.n);
            assert_eq!(e.form(&v, &u), want);
        }
        let mut g = FreeElement::term(vec![i, j, i], q_int(2));
        g.add_term(vec![i, i, j], &rq("-1"));
        g.add_term(vec![j, i, i], &rq("-1"));
        assert!(e.radical_contains(&g).unwrap());
    }
}

#[test]
fn divided_power_norms() {
    for (m, n) in [(2, 2), (3, 2), (2, 3)] {
        let c = cfg(m, n);
        let e = FormEngine::new(c);
        for i in c.indices() {
            for p in 1..=3u32 {
                let x = divided_power(i, p);
                let got = e.form_elements(&x, &x);
                let want = if i == c.m {
                    if p == 1 {
                        RationalQ::one()
                    } else {
                        RationalQ::zero()
                    }
                } else {
                    let sgn = if c.in_prime(i) { 1 } else { -1 };
                    (1..=p as i64).fold(RationalQ::one(), |acc, s| {
                        let d = &LaurentPoly::one() - &LaurentPoly::monomial(1, 2 * s * sgn);
                        &acc * &RationalQ::new(LaurentPoly::one(), d).unwrap()
                    })
                };
                assert_eq!(got, want, "m={m} n={n} i={i} p={p}");
            }
        }
    }
}

#[test]
fn oracle_equivalence_and_symmetry() {
    for (m, n) in [(2, 1), (3, 1), (2, 2)] {
        let c = cfg(m, n);
        let e = FormEngine::new(c);
        for size in 0..=4 {
            for nu in c.all_weights(size) {
                let words = c.words(&nu);
                for a in &words {
                    for b in &words {
                        let r = e.form(a, b);
                        assert_eq!(r, form_graphical(&c, a, b), "{a:?} {b:?}");
                        assert_eq!(r, e.form(b, a), "{a:?} {b:?}");
                    }
                }
            }
        }
    }
}

fn tensor_of(factors: &[FreeElement], c: RationalQ) -> TensorElement {
    TensorElement::from_factors(factors).scale(&c)
}

#[test]
fn coproduct_of_bosonic_divided_powers() {
    let c = cfg(2, 2);
    for i in [1, 3] {
        let half = c.bullet(i, i) / 2;
        for p in 0..=3u32 {
            let mut want = TensorElement::zero(2);
            for t in 0..=p {
                let e = -half * (t * (p - t)) as i64;
                want = want.add(&tensor_of(
                    &[divided_power(i, t), divided_power(i, p - t)],
                    RationalQ::q_pow(e),
                ));
            }
            assert_eq!(coproduct(&c, &divided_power(i, p)), want, "i={i} p={p}");
        }
    }
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, t| acc * (n - t) as i64 / (t + 1) as i64)
}

fn mpow(m: u32, k: u32) -> FreeElement {
    FreeElement::word(vec![m; k as usize])
}

#[test]
fn coproduct_of_odd_powers() {
    let c = cfg(2, 2);
    let m = c.m;
    for p in 0..=2u32 {
        let mut even = TensorElement::zero(2);
        let mut odd = TensorElement::zero(2);
        for g in 0..=p {
            let b = RationalQ::from_int(binom(p, g));
            even = even.add(&tensor_of(&[mpow(m, 2 * p - 2 * g), mpow(m, 2 * g)], b.clone()));
            odd = odd.add(&tensor_of(&[mpow(m, 2 * p + 1 - 2 * g), mpow(m, 2 * g)], b.clone()));
            odd = odd.add(&tensor_of(&[mpow(m, 2 * p - 2 * g), mpow(m, 2 * g + 1)], b));
        }
        assert_eq!(coproduct(&c, &mpow(m, 2 * p)), even, "p={p}");
        assert_eq!(coproduct(&c, &mpow(m, 2 * p + 1)), odd, "p={p}");
    }
}

fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|g| {
            compositions(total - g, parts - 1).into_iter().map(move |mut r| {
                r.insert(0, g);
                r
            })
        })
        .collect()
}

fn multinom_int(parts: &[u32]) -> i64 {
    let mut acc = 1i64;
    let mut n = 0;
    for &k in parts {
        n += k;
        acc *= binom(n, k);
    }
    acc
}

fn qmultinom(parts: &[u32]) -> RationalQ {
    let n: u32 = parts.iter().sum();
    parts.iter().fold(q_fact(n), |acc, &k| &acc / &q_fact(k))
}

#[test]
fn iterated_coproduct_of_odd_divided_powers() {
    let c = cfg(2, 1);
    let m = c.m;
    for b in 1..=2usize {
        for p in 0..=2u32 {
            let mut even = TensorElement::zero(b + 1);
            let mut odd = TensorElement::zero(b + 1);
            for g in compositions(p, b + 1) {
                let num = RationalQ::from_int(multinom_int(&g));
                let doubled: Vec<u32> = g.iter().map(|x| 2 * x).collect();
                let fs: Vec<_> = doubled.iter().map(|&x| divided_power(m, x)).collect();
                even = even.add(&tensor_of(&fs, &num / &qmultinom(&doubled)));
                for k in 0..=b {
                    let mut d = doubled.clone();
                    d[k] += 1;
                    let fs: Vec<_> = d.iter().map(|&x| divided_power(m, x)).collect();
                    odd = odd.add(&tensor_of(&fs, &num / &qmultinom(&d)));
                }
            }
            assert_eq!(coproduct_iter(&c, &divided_power(m, 2 * p), b), even, "b={b} p={p}");
            assert_eq!(coproduct_iter(&c, &divided_power(m, 2 * p + 1), b), odd, "b={b} p={p}");
        }
    }
}

#[test]
fn pbw_gram_is_diagonal_with_closed_values() {
    for (m, n) in [(2, 1), (2, 2), (3, 1)] {
        let c = cfg(m, n);
        let e = FormEngine::new(c);
        let t = RootVectorTable::new(c);
        for a in c.root_order() {
            let x = t.root_vector(a);
            assert_eq!(e.form_elements(&x, &x), form_root_closed(&c, a), "{a}");
        }
        for size in 1..=4 {
            for nu in c.all_weights(size) {
                let mons = c.pbw_monomials(&nu);
                let els: Vec<_> = mons.iter().map(|x| t.pbw_element(x).unwrap()).collect();
                for (ma, xa) in mons.iter().zip(&els) {
                    for (mb, xb) in mons.iter().zip(&els) {
                        assert_eq!(e.form_elements(xa, xb), form_pbw_closed(&c, ma, mb), "{ma} {mb}");
                    }
                }
                assert_eq!(e.dim_f(&nu), mons.len(), "{nu}");
            }
        }
    }
}

#[test]
fn root_comultiplication_holds_in_f() {
    for (m, n) in [(2, 2), (3, 1)] {
        let c = cfg(m, n);
        let e = FormEngine::new(c);
        let t = RootVectorTable::new(c);
        for a in c.root_order() {
            if a.len() > 4 {
                continue;
            }
            let free = coproduct(&c, &t.root_vector(a));
            let diff = free.add(&t.comult_closed(a).scale(&rq("-1")));
            assert!(e.tensor_radical_contains(&diff), "{a}");
        }
    }
}

#[test]
fn pbw_and_serre_elements_lie_in_radical() {
    for (m, n) in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)] {
        let c = cfg(m, n);
        let e = FormEngine::new(c);
        let t = RootVectorTable::new(c);
        for inst in pbw_instances(&t, 5) {
            assert!(
                e.radical_contains(&inst.element).unwrap(),
                "m={m} n={n} {} {}",
                inst.family,
                inst.label
            );
        }
    }
}

#[test]
fn overlapping_roots_commutator() {
    // needs four consecutive indices, so total size 6
    for (m, n) in [(2, 3), (3, 2), (4, 1)] {
        let c = cfg(m, n);
        let e = FormEngine::new(c);
        let t = RootVectorTable::new(c);
        let found: Vec<_> = pbw_instances(&t, 6)
            .into_iter()
            .filter(|x| x.family == "pbw6")
            .collect();
        assert!(!found.is_empty());
        for inst in found {
            assert!(e.radical_contains(&inst.element).unwrap(), "m={m} n={n} {}", inst.label);
        }
    }
}

#[test]
fn ideal_generators_and_their_multiples_lie_in_radical() {
    for (m, n) in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)] {
        let c = cfg(m, n);
        let e = FormEngine::new(c);
        for g in ideal_generators(&c) {
            let size = g.element.weight().unwrap().size();
            for x in two_sided_multiples(&c, &g, 5u32.saturating_sub(size)) {
                assert!(e.radical_contains(&x.element).unwrap(), "m={m} n={n} {}", x.label);
            }
        }
    }
}

#[test]
fn spec_weight_examples() {
    let c = cfg(2, 1);
    let e = FormEngine::new(c);
    assert_eq!(e.dim_f(&Weight::from_pairs(&[(2, 2)])), 0);
    assert_eq!(c.pbw_monomials(&Weight::from_pairs(&[(1, 1), (2, 1)])).len(), 2);
    let t = RootVectorTable::new(c);
    assert_eq!(t.root_vector(PositiveRoot::new(1, 2)).terms().len(), 2);
}
