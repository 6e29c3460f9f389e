use std::collections::BTreeMap;

use superklr::bilinear_form::FormEngine;
use superklr::dg::*;
use superklr::root_data::{RootConfig, Weight};

fn klr_algebra(m: u32, k: u32) -> DgAlgebra {
    DgAlgebra::from_klr(m, &Weight::from_pairs(&[(m, k)])).unwrap()
}

#[test]
fn small_examples() {
    let g = DgAlgebra::ground().classify().unwrap();
    assert_eq!((g.m_i, g.m_ii, g.k0_rank, g.g0_rank), (1, 0, 1, 1));
    let l = DgAlgebra::lambda_y();
    assert_eq!(l.j_bullet().unwrap().dim(), 0);
    let r = l.classify().unwrap();
    assert_eq!((r.m_i, r.m_ii, r.k0_rank), (0, 1, 0));
}

#[test]
fn cross_product_is_a_matrix_algebra() {
    let s = summarize(&DgAlgebra::lambda_y().cross_product()).unwrap();
    assert_eq!(s.dim, 4);
    assert_eq!(s.radical_dim, 0);
    assert_eq!(s.block_dims, vec![4]);
    let want: BTreeMap<String, usize> = [("-1,0", 1), ("0,0", 2), ("1,0", 1)]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b))
        .collect();
    assert_eq!(s.graded_dims, want);
}

#[test]
fn radical_of_dual_numbers() {
    // Q[x]/(x^2) with x in degree (0, 2)
    let json = AlgebraJson {
        symbols: vec!["1".into(), "x".into()],
        bidegrees: vec![(0, 0), (0, 2)],
        products: vec![(0, 0, 0, "1".into()), (0, 1, 1, "1".into()), (1, 0, 1, "1".into())],
        differential: vec![],
        unit: vec![(0, "1".into())],
    };
    let a = DgAlgebra::from_json(&json).unwrap();
    let j = a.radical0().unwrap();
    assert_eq!(j.dim(), 1);
    assert!(j.contains(&a.alg.basis_vector(1)));
    assert!(a.alg.is_ideal(&j) && a.alg.is_nilpotent(&j));
    let (q, _) = a.alg.quotient(&j);
    assert_eq!(q.radical().dim(), 0);
    let r = a.classify().unwrap();
    assert_eq!((r.m_i, r.m_ii), (1, 0));
    // d = 0 and no negative part: J_bullet = J(A^0)
    assert_eq!(a.j_bullet().unwrap().dim(), 1);
}

#[test]
fn klr_algebras_of_fermionic_weights() {
    for m in [2u32, 3] {
        let form = FormEngine::new(RootConfig::new(m, 1).unwrap());
        let dims = [1usize, 2, 6];
        for k in 1..=3u32 {
            let a = klr_algebra(m, k);
            assert_eq!(a.dim(), dims[k as usize - 1]);
            a.check().unwrap();
            let r = a.classify().unwrap();
            let nu = Weight::from_pairs(&[(m, k)]);
            assert_eq!(r.m_i, form.dim_f(&nu));
            assert_eq!(r.k0_rank, r.m_i);
            assert_eq!(r.g0_rank, r.m_i);
            assert_eq!(r.m_i + r.m_ii, r.blocks.len());
            let unit = a.alg.unit.clone();
            assert_eq!(a.is_contractible(&unit), k >= 2);
            let h = a.left_module(&unit).unwrap().cohomology().unwrap();
            assert_eq!(h.values().sum::<usize>(), if k == 1 { 1 } else { 0 });
        }
        assert_eq!(klr_algebra(m, 2).j_bullet().unwrap().dim(), 0);
    }
}

#[test]
fn radical_is_nilpotent_ideal() {
    for k in 1..=3 {
        let a = klr_algebra(2, k);
        let j = a.alg.radical();
        assert!(a.alg.is_ideal(&j) && a.alg.is_nilpotent(&j));
        let (q, _) = a.alg.quotient(&j);
        assert_eq!(q.radical().dim(), 0);
    }
}

#[test]
fn bosonic_weights_are_refused() {
    assert!(matches!(
        DgAlgebra::from_klr(2, &Weight::from_pairs(&[(1, 1)])),
        Err(superklr::Error::InfiniteDimensional(_))
    ));
}

#[test]
fn json_round_trip() {
    let a = klr_algebra(3, 3);
    let b = DgAlgebra::from_json(&a.to_json()).unwrap();
    assert_eq!(a.classify().unwrap(), b.classify().unwrap());
    let text = serde_json::to_string(&a.to_json()).unwrap();
    let c: AlgebraJson = serde_json::from_str(&text).unwrap();
    assert_eq!(c.symbols.len(), 6);
}

#[test]
fn broken_inputs_are_reported() {
    let mut bad = DgAlgebra::lambda_y().to_json();
    bad.products.push((1, 1, 0, "1".into()));
    // y^2 = 1 is not homogeneous
    assert!(DgAlgebra::from_json(&bad).unwrap().classify().is_err());
    let mut skew = DgAlgebra::lambda_y().to_json();
    skew.differential.push((0, 1, "1".into()));
    assert!(DgAlgebra::from_json(&skew).unwrap().classify().is_err());
    let mut oob = DgAlgebra::ground().to_json();
    oob.unit.push((5, "1".into()));
    assert!(DgAlgebra::from_json(&oob).is_err());
}
