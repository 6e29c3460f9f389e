//! Randomized invariants of the scalar ring, the root data, the free algebra
//! and the KLR algebras.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superklr::bilinear_form::{form_graphical, FormEngine};
use superklr::free_super::{coproduct, tensor_multiply, FreeElement, TensorElement};
use superklr::klr::{random, Klr, KlrElement, Strategy as Rewrite};
use superklr::polrep::PolRep;
use superklr::root_data::{RootConfig, Weight};
use superklr::scalars::linalg::{eval_matrix, rank_q};
use superklr::scalars::{q_binom, rank_over_qq, LaurentPoly, RationalQ};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -4i64..=4), 0..4).prop_map(LaurentPoly::from_terms)
}

fn rational() -> impl Strategy<Value = RationalQ> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(n, d)| RationalQ::new(n, d).ok())
}

fn at(x: &RationalQ, q: i64) -> Option<BigRational> {
    x.eval_rational(&BigRational::from_integer(BigInt::from(q)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn canonical_form_is_stable(a in rational()) {
        let again = RationalQ::new(a.num().clone(), a.den().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        let printed: RationalQ = a.to_string().parse().unwrap();
        prop_assert_eq!(printed, a);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in rational(), b in rational()) {
        for q in [2i64, 3, -5] {
            if let (Some(x), Some(y)) = (at(&a, q), at(&b, q)) {
                prop_assert_eq!(at(&(&a * &b), q).unwrap(), &x * &y);
                prop_assert_eq!(at(&(&a + &b), q).unwrap(), x + y);
            }
        }
    }

    #[test]
    fn rank_matches_generic_evaluation(entries in prop::collection::vec(rational(), 9)) {
        let m: Vec<Vec<RationalQ>> = entries.chunks(3).map(|r| r.to_vec()).collect();
        let r = rank_over_qq(&m);
        let mut best = 0;
        for (a, b) in [(3, 7), (5, 11), (-2, 9), (13, 4), (17, 19)] {
            let q = BigRational::new(BigInt::from(a), BigInt::from(b));
            if let Some(e) = eval_matrix(&m, &q) {
                best = best.max(rank_q(&e));
            }
        }
        prop_assert_eq!(r, best);
    }

    #[test]
    fn bullet_symmetric_and_bilinear(m in 1u32..4, n in 1u32..4, seed in any::<u64>()) {
        let c = RootConfig::new(m, n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in c.indices() {
            for j in c.indices() {
                prop_assert_eq!(c.bullet(i, j), c.bullet(j, i));
            }
        }
        let r = c.rank();
        let mut w = || Weight::of_word(&(0..rng.gen_range(0..4)).map(|_| rng.gen_range(1..=r)).collect::<Vec<_>>());
        let (a, b, mu) = (w(), w(), w());
        prop_assert_eq!(c.bullet_ext(&a.plus(&b), &mu), c.bullet_ext(&a, &mu) + c.bullet_ext(&b, &mu));
        prop_assert_eq!(c.bullet_ext(&a, &mu), c.bullet_ext(&mu, &a));
    }

    #[test]
    fn form_symmetric_on_random_words(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, n) = [(2, 1), (3, 1), (2, 2), (1, 3)][rng.gen_range(0..4)];
        let c = RootConfig::new(m, n).unwrap();
        let len = rng.gen_range(0..=4);
        let a: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=c.rank())).collect();
        let mut b = a.clone();
        for k in (1..b.len()).rev() {
            b.swap(k, rng.gen_range(0..=k));
        }
        let e = FormEngine::new(c);
        prop_assert_eq!(e.form(&a, &b), e.form(&b, &a));
        prop_assert_eq!(e.form(&a, &b), form_graphical(&c, &a, &b));
    }

    #[test]
    fn tensor_product_associative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = RootConfig::new(2, 2).unwrap();
        let mut t = || {
            let mut x = TensorElement::zero(2);
            for _ in 0..2 {
                let w = |rng: &mut ChaCha8Rng| (0..rng.gen_range(0..3)).map(|_| rng.gen_range(1..=3)).collect::<Vec<u32>>();
                let pair = vec![w(&mut rng), w(&mut rng)];
                x.add_term(pair, &RationalQ::from_int(rng.gen_range(1..4)));
            }
            x
        };
        let (x, y, z) = (t(), t(), t());
        let l = tensor_multiply(&c, &tensor_multiply(&c, &x, &y).unwrap(), &z).unwrap();
        let r = tensor_multiply(&c, &x, &tensor_multiply(&c, &y, &z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn coproduct_is_weight_additive(w in prop::collection::vec(1u32..=3, 0..5)) {
        let c = RootConfig::new(2, 2).unwrap();
        let d = coproduct(&c, &FreeElement::word(w.clone()));
        for (pair, _) in d.terms() {
            prop_assert_eq!(Weight::of_word(&pair[0]).plus(&Weight::of_word(&pair[1])), Weight::of_word(&w));
        }
    }

    #[test]
    fn klr_products_associative_and_dg(seed in any::<u64>(), m in 2u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = Klr::new(m, Rewrite::BottomUp).unwrap();
        let cfg = *k.config();
        let len = rng.gen_range(1..=4);
        let src = random::sequence(&mut rng, m, len);
        let z = random::normal_form(&mut rng, &src, m, 2);
        let y = random::normal_form(&mut rng, &z.target(), m, 2);
        let x = random::normal_form(&mut rng, &y.target(), m, 2);
        let (a, b, c) = (KlrElement::basis(x.clone()), KlrElement::basis(y), KlrElement::basis(z));
        prop_assert_eq!(k.multiply(&a, &k.multiply(&b, &c)), k.multiply(&k.multiply(&a, &b), &c));
        let (d1, d2) = x.bidegree(&cfg);
        let da = k.differential(&a);
        if let Some((e1, e2)) = da.bidegree(&cfg) {
            prop_assert_eq!((e1, e2), (d1 + 1, d2));
        }
        prop_assert!(k.differential(&da).is_zero());
        let sign = BigInt::from(if d1 % 2 == 0 { 1 } else { -1 });
        let lhs = k.differential(&k.multiply(&a, &b));
        let rhs = k.multiply(&da, &b).add(&k.multiply(&a, &k.differential(&b)).scale(&sign));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rewriting_strategies_agree(seed in any::<u64>(), m in 2u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let len = rng.gen_range(1..=4);
        let src = random::sequence(&mut rng, m, len);
        let wl = rng.gen_range(0..=8);
        let w = random::raw_word(&mut rng, &src, wl);
        let a = Klr::new(m, Rewrite::BottomUp).unwrap().rewrite(&w);
        let b = Klr::new(m, Rewrite::TopDown).unwrap().rewrite(&w);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn polynomial_action_matches_rewriting(seed in any::<u64>(), m in 2u32..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = Klr::new(m, Rewrite::BottomUp).unwrap();
        let cfg = *k.config();
        let len = rng.gen_range(1..=4);
        let mut src = random::sequence(&mut rng, m, len);
        // at most one fermion
        let mut seen = false;
        for x in src.iter_mut() {
            if *x == m {
                if seen { *x = 1; }
                seen = true;
            }
        }
        let pr = PolRep::new(&cfg, &Weight::of_word(&src)).unwrap();
        let wl = rng.gen_range(1..=6);
        let w = random::raw_word(&mut rng, &src, wl);
        let samples = vec![pr.random_sample(&mut rng, &src, 3), pr.random_sample(&mut rng, &src, 2)];
        prop_assert!(pr.oracle_check(&k, &w, &samples).is_ok());
    }
}

#[test]
fn quantum_binomials() {
    for p in 0..=6u32 {
        let mut total = BigInt::from(0);
        for g in 0..=p {
            let b = q_binom(p, g).unwrap();
            assert_eq!(b, q_binom(p, p - g).unwrap());
            total += b.as_poly().expect("Laurent polynomial").eval_int(1).unwrap();
        }
        assert_eq!(total, BigInt::from(2u32.pow(p)));
    }
    assert!(q_binom(2, 3).is_err());
}

#[test]
fn pbw_monomials_have_requested_weight() {
    for (m, n) in [(2, 1), (2, 2), (3, 1), (1, 3)] {
        let c = RootConfig::new(m, n).unwrap();
        for size in 0..=4 {
            for nu in c.all_weights(size) {
                for mon in c.pbw_monomials(&nu) {
                    assert_eq!(mon.weight(), nu);
                    for &(a, e) in &mon.0 {
                        assert!(c.root_parity(a) == 0 || e <= 1);
                    }
                }
            }
        }
    }
}
