use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use superklr::klr::relations::instances;
use superklr::klr::*;
use superklr::polrep::{PolElement, PolRep, Poly};
use superklr::root_data::{RootConfig, Weight};

fn word(text: &str, source: &[u32]) -> RawWord {
    RawWord::parse(text, source.to_vec()).unwrap()
}

#[test]
fn generator_actions() {
    let cfg = RootConfig::new(2, 1).unwrap();
    let pr = PolRep::new(&cfg, &Weight::from_pairs(&[(1, 2)])).unwrap();
    let g = PolElement::single(vec![1, 1], Poly::monomial(vec![2, 0]));
    assert_eq!(pr.act(&word("", &[1, 1]), &g), g);
    assert_eq!(
        pr.act(&word("y2", &[1, 1]), &g),
        PolElement::single(vec![1, 1], Poly::monomial(vec![2, 1]))
    );
    // (x1^2 - x2^2)/(x1 - x2) = x1 + x2
    let mut sum = Poly::monomial(vec![1, 0]);
    sum.add_term(vec![0, 1], &BigInt::from(1));
    assert_eq!(pr.act(&word("psi1", &[1, 1]), &g), PolElement::single(vec![1, 1], sum));
    assert!(pr.act(&word("psi1 psi1", &[1, 1]), &g).is_zero());
    // wrong sector
    assert!(pr.act(&word("", &[1, 2]), &g).is_zero());
}

#[test]
fn fermion_strand_has_no_variable() {
    let cfg = RootConfig::new(2, 1).unwrap();
    let pr = PolRep::new(&cfg, &Weight::from_pairs(&[(1, 1), (2, 1)])).unwrap();
    assert_eq!(pr.vars(), 1);
    let g = PolElement::single(vec![2, 1], Poly::monomial(vec![0]));
    assert!(pr.act(&word("y1", &[2, 1]), &g).is_zero());
    // psi_1^2 e(m, m-1) = y_2 e(m, m-1)
    let a = pr.act(&word("psi1 psi1", &[2, 1]), &g);
    let b = pr.act(&word("y2", &[2, 1]), &g);
    assert_eq!(a, b);
    assert!(!a.is_zero());
}

#[test]
fn relations_are_operator_identities() {
    for m in [2u32, 3] {
        let cfg = RootConfig::new(m, 1).unwrap();
        for size in 1..=3 {
            for nu in cfg.all_weights(size) {
                if nu.get(m) > 1 {
                    continue;
                }
                let pr = PolRep::new(&cfg, &nu).unwrap();
                for seq in cfg.words(&nu) {
                    let samples = pr.monomials(&seq, 3);
                    for rel in instances(&cfg, &seq) {
                        for s in &samples {
                            assert!(pr.act_combination(&seq, &rel.terms, s).is_zero(), "relation {} at {seq:?}", rel.id);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn action_factors_through_rewriting() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in [2u32, 3] {
        let k = Klr::new(m, Strategy::BottomUp).unwrap();
        let cfg = *k.config();
        for size in 1..=4 {
            for nu in cfg.all_weights(size) {
                if nu.get(m) > 1 {
                    continue;
                }
                let pr = PolRep::new(&cfg, &nu).unwrap();
                let words = cfg.words(&nu);
                for _ in 0..40 {
                    let s = &words[rng.gen_range(0..words.len())];
                    let len = rng.gen_range(1..=6);
                    let w = random::raw_word(&mut rng, s, len);
                    let mut samples = pr.monomials(s, 2);
                    samples.push(pr.random_sample(&mut rng, s, 3));
                    assert!(pr.oracle_check(&k, &w, &samples).is_ok(), "{w}");
                }
            }
        }
    }
}

#[test]
fn unsupported_regime() {
    let cfg = RootConfig::new(3, 1).unwrap();
    assert!(PolRep::new(&cfg, &Weight::from_pairs(&[(3, 2), (1, 1)])).is_err());
    assert!(PolRep::new(&RootConfig::new(2, 2).unwrap(), &Weight::from_pairs(&[(1, 1)])).is_err());
}
