//! Seeded random basis elements and raw words for fuzz checks.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{NormalForm, RawWord, Token};

pub fn sequence<R: Rng>(rng: &mut R, m: u32, len: usize) -> Vec<u32> {
    (0..len).map(|_| rng.gen_range(1..=m)).collect()
}

/// Uniform permutation, dots of total degree at most `max_dots` on bosonic strands.
pub fn normal_form<R: Rng>(rng: &mut R, source: &[u32], m: u32, max_dots: u32) -> NormalForm {
    let d = source.len();
    let mut perm: Vec<usize> = (0..d).collect();
    perm.shuffle(rng);
    let mut dots = vec![0u32; d];
    let bosonic: Vec<usize> = (0..d).filter(|&r| source[r] != m).collect();
    if !bosonic.is_empty() {
        for _ in 0..rng.gen_range(0..=max_dots) {
            dots[*bosonic.choose(rng).expect("nonempty")] += 1;
        }
    }
    NormalForm {
        source: source.to_vec(),
        perm,
        dots,
    }
}

/// Basis element with a prescribed target: a random element ending at `target`.
pub fn normal_form_to<R: Rng>(rng: &mut R, target: &[u32], m: u32, max_dots: u32) -> NormalForm {
    let d = target.len();
    let mut perm: Vec<usize> = (0..d).collect();
    perm.shuffle(rng);
    let mut source = vec![0; d];
    for (r, &p) in perm.iter().enumerate() {
        source[r] = target[p];
    }
    let mut nf = normal_form(rng, &source, m, max_dots);
    nf.perm = perm;
    nf
}

/// Random product of `len` generators on e(source).
pub fn raw_word<R: Rng>(rng: &mut R, source: &[u32], len: usize) -> RawWord {
    let d = source.len();
    let tokens = (0..len)
        .map(|_| {
            if d >= 2 && rng.gen_bool(0.6) {
                Token::Psi(rng.gen_range(0..d - 1))
            } else {
                Token::Y(rng.gen_range(0..d))
            }
        })
        .collect();
    RawWord {
        tokens,
        source: source.to_vec(),
    }
}
