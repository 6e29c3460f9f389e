//! The defining relations of R(nu), instantiated at a given idempotent, as
//! linear combinations of raw words that must vanish.

use super::Token;
use crate::root_data::RootConfig;

#[derive(Clone, Debug)]
pub struct RelationInstance {
    /// Number of the relation in the standard list, 1 to 17.
    pub id: u8,
    pub source: Vec<u32>,
    pub terms: Vec<(i64, Vec<Token>)>,
}

impl RelationInstance {
    /// Sequence at the top of every term.
    pub fn target(&self) -> Vec<u32> {
        let mut s = self.source.clone();
        if let Some((_, toks)) = self.terms.first() {
            for t in toks.iter().rev() {
                if let Token::Psi(k) = *t {
                    s.swap(k, k + 1);
                }
            }
        }
        s
    }
}

/// Every instance of relations 2 and 5 to 17 at e(source). Relations 1, 3
/// and 4 hold by construction of the basis and are checked separately.
pub fn instances(cfg: &RootConfig, source: &[u32]) -> Vec<RelationInstance> {
    use Token::{Psi, Y};
    let m = cfg.m;
    let d = source.len();
    let i = source;
    let mut out = Vec::new();
    let mut push = |id: u8, terms: Vec<(i64, Vec<Token>)>| {
        out.push(RelationInstance {
            id,
            source: source.to_vec(),
            terms,
        })
    };
    for r in 0..d {
        if i[r] == m {
            push(2, vec![(1, vec![Y(r)])]);
        }
        for l in 0..d {
            if l != r {
                push(7, vec![(1, vec![Y(r), Y(l)]), (-1, vec![Y(l), Y(r)])]);
            }
        }
    }
    for k in 0..d.saturating_sub(1) {
        let mut sk = i.to_vec();
        sk.swap(k, k + 1);
        for l in 0..d.saturating_sub(1) {
            if k.abs_diff(l) > 1 {
                let odd = [i[k], i[k + 1], i[l], i[l + 1]].iter().all(|&x| x == m);
                let s = if odd { -1 } else { 1 };
                push(5, vec![(1, vec![Psi(k), Psi(l)]), (-s, vec![Psi(l), Psi(k)])]);
            }
        }
        for l in 0..d {
            if l != k && l != k + 1 {
                push(6, vec![(1, vec![Psi(k), Y(l)]), (-1, vec![Y(l), Psi(k)])]);
            }
        }
        let (a, b) = (i[k], i[k + 1]);
        if a != b {
            push(8, vec![(1, vec![Psi(k), Y(k)]), (-1, vec![Y(k + 1), Psi(k)])]);
            push(9, vec![(1, vec![Y(k), Psi(k)]), (-1, vec![Psi(k), Y(k + 1)])]);
        } else if a != m {
            push(10, vec![(1, vec![Y(k), Psi(k)]), (-1, vec![Psi(k), Y(k + 1)]), (-1, vec![])]);
            push(11, vec![(1, vec![Psi(k), Y(k)]), (-1, vec![Y(k + 1), Psi(k)]), (-1, vec![])]);
        }
        let sq = vec![Psi(k), Psi(k)];
        if a == b {
            push(12, vec![(1, sq)]);
        } else if a == m && b.abs_diff(m) == 1 {
            push(13, vec![(1, sq), (-1, vec![Y(k + 1)])]);
        } else if b == m && a.abs_diff(m) == 1 {
            push(14, vec![(1, sq), (-1, vec![Y(k)])]);
        } else if cfg.bullet(a, b).abs() == 1 {
            push(15, vec![(1, sq), (-1, vec![Y(k)]), (-1, vec![Y(k + 1)])]);
        } else if a.abs_diff(b) > 1 {
            push(16, vec![(1, sq), (-1, vec![])]);
        }
        if k + 2 < d {
            let c = i[k] == i[k + 2] && cfg.bullet(i[k], i[k + 1]).abs() == 1 && i[k] != m;
            let mut terms = vec![
                (1, vec![Psi(k), Psi(k + 1), Psi(k)]),
                (-1, vec![Psi(k + 1), Psi(k), Psi(k + 1)]),
            ];
            if c {
                terms.push((-1, vec![]));
            }
            push(17, terms);
        }
    }
    out
}
