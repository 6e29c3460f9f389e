use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superklr::bilinear_form::FormEngine;
use superklr::klr::relations::instances;
use superklr::klr::*;
use superklr::root_data::RootConfig;
use superklr::scalars::{BiRational, RationalQ};

fn nf(source: &[u32], perm: &[usize], dots: &[u32]) -> KlrElement {
    KlrElement::basis(NormalForm {
        source: source.to_vec(),
        perm: perm.to_vec(),
        dots: dots.to_vec(),
    })
}

fn rw(k: &Klr, text: &str, source: &[u32]) -> KlrElement {
    k.rewrite(&RawWord::parse(text, source.to_vec()).unwrap())
}

#[test]
fn quadratic_relations() {
    for m in [2u32, 3] {
        let k = Klr::new(m, Strategy::BottomUp).unwrap();
        for i in 1..=m {
            assert!(rw(&k, "psi1 psi1", &[i, i]).is_zero());
        }
        assert_eq!(rw(&k, "psi1 psi1", &[m, m - 1]), nf(&[m, m - 1], &[0, 1], &[0, 1]));
        assert_eq!(rw(&k, "psi1 psi1", &[m - 1, m]), nf(&[m - 1, m], &[0, 1], &[1, 0]));
        for i in 1..m {
            let want = nf(&[i, i], &[1, 0], &[0, 1]).add(&KlrElement::idempotent(vec![i, i]));
            assert_eq!(rw(&k, "y1 psi1", &[i, i]), want);
        }
        assert!(rw(&k, "y1", &[m]).is_zero());
    }
}

#[test]
fn idempotents_and_mismatch() {
    let k = Klr::new(2, Strategy::BottomUp).unwrap();
    let a = KlrElement::idempotent(vec![1, 2]);
    let b = KlrElement::idempotent(vec![2, 1]);
    assert_eq!(k.multiply(&a, &a), a);
    assert!(k.multiply(&a, &b).is_zero());
    let psi = nf(&[2, 2], &[1, 0], &[0, 0]);
    assert!(k.multiply(&psi, &psi).is_zero());
}

#[test]
fn differential_and_sigma_values() {
    for m in [2u32, 3] {
        let k = Klr::new(m, Strategy::BottomUp).unwrap();
        let psi = nf(&[m, m], &[1, 0], &[0, 0]);
        assert_eq!(k.differential(&psi), KlrElement::idempotent(vec![m, m]));
        assert!(k.differential(&rw(&k, "y1", &[1, m])).is_zero());
        let e = KlrElement::idempotent(vec![1, m, 1]);
        assert_eq!(k.sigma(&e), e);
        // sigma(psi_1 e(1, m)) = psi_1 e(m, 1)
        assert_eq!(k.sigma(&nf(&[1, m], &[1, 0], &[0, 0])), nf(&[m, 1], &[1, 0], &[0, 0]));
    }
}

#[test]
fn tilde_e_values() {
    let k = Klr::new(3, Strategy::BottomUp).unwrap();
    let e = k.tilde_e(&DividedSequence::parse("1,2,3").unwrap()).unwrap();
    assert_eq!(e, KlrElement::idempotent(vec![1, 2, 3]));
    let e = k.tilde_e(&DividedSequence::parse("2^(2)").unwrap()).unwrap();
    assert_eq!(e, nf(&[2, 2], &[1, 0], &[1, 0]));
    assert_eq!(k.multiply(&e, &e), e);
    assert!(k.tilde_e(&DividedSequence::parse("3^2").unwrap()).is_err());
}

#[test]
fn gdim_values() {
    let cfg = RootConfig::new(2, 1).unwrap();
    let mut want = BiRational::one();
    want.add_term(-1, &RationalQ::one());
    assert_eq!(gdim(&cfg, &[2, 2], &[2, 2]), want);
    let tower: RationalQ = "1/(1-q^2)".parse().unwrap();
    assert_eq!(gdim(&cfg, &[1], &[1]), BiRational::from_rational(0, tower));
    assert!(gdim(&cfg, &[1, 2], &[1, 1]).is_zero());
}

#[test]
fn basis_bidegrees() {
    // psi_1 e(m,m) has bidegree (-1, 0); a dot on a boson has (0, 2)
    let cfg = RootConfig::new(2, 1).unwrap();
    let x = NormalForm { source: vec![2, 2], perm: vec![1, 0], dots: vec![0, 0] };
    assert_eq!(x.bidegree(&cfg), (-1, 0));
    let y = NormalForm { source: vec![1, 2], perm: vec![1, 0], dots: vec![1, 0] };
    assert_eq!(y.bidegree(&cfg), (0, 3));
}

fn sandwich(k: &Klr, rel: &relations::RelationInstance, u: &NormalForm, v: &NormalForm) -> KlrElement {
    let mut acc = KlrElement::zero();
    for (c, toks) in &rel.terms {
        let mut all = u.tokens();
        all.extend(toks);
        all.extend(v.tokens());
        acc.add_scaled(&k.rewrite(&RawWord { tokens: all, source: v.source.clone() }), &BigInt::from(*c));
    }
    acc
}

#[test]
fn relations_hold_between_random_basis_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for m in [2u32, 3] {
        for strategy in [Strategy::BottomUp, Strategy::TopDown] {
            let k = Klr::new(m, strategy).unwrap();
            let cfg = *k.config();
            for _ in 0..40 {
                let len = rng.gen_range(1..=4);
                let src = random::sequence(&mut rng, m, len);
                for rel in instances(&cfg, &src) {
                    let v = random::normal_form_to(&mut rng, &src, m, 2);
                    let u = random::normal_form(&mut rng, &rel.target(), m, 2);
                    let r = sandwich(&k, &rel, &u, &v);
                    assert!(r.is_zero(), "relation {} at {src:?}: {r}", rel.id);
                }
            }
        }
    }
}

#[test]
fn graded_dimension_specializes_to_form() {
    for m in [2u32, 3] {
        let cfg = RootConfig::new(m, 1).unwrap();
        let e = FormEngine::new(cfg);
        for size in 1..=3 {
            for nu in cfg.all_weights(size) {
                let ws = cfg.words(&nu);
                for i in &ws {
                    for j in &ws {
                        assert_eq!(gdim(&cfg, i, j).specialize(), e.form(j, i), "{i:?} {j:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn malformed_tokens_rejected() {
    assert!(RawWord::parse("psi2", vec![1, 2]).is_err());
    assert!(RawWord::parse("y3", vec![1, 2]).is_err());
    assert!(RawWord::parse("z1", vec![1, 2]).is_err());
}
