//! Quasi-symmetric functions as a dendriform trialgebra. Words
//! `y_{k_1} ⋯ y_{k_r}` are stored as compositions `(k_1, …, k_r)`, and
//!
//! ```text
//! y_k ω * y_k' ω' = y_k (ω * y_k' ω') + y_k' (y_k ω * ω') + y_{k+k'} (ω * ω')
//! ```
//!
//! with the three summands giving `≺`, `≻` and `·`.

use std::fmt;

use serde::Serialize;

use crate::combinatorics::compositions;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::relations::{Op, Trialgebra};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct QSymWord(Vec<u32>);

impl QSymWord {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Invariant(
                "a word needs at least one positive part".into(),
            ));
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&k| k as usize).sum()
    }
}

impl fmt::Display for QSymWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

// Possibly empty words, for the recursion.
type Raw = LinComb<Vec<u32>>;

fn prepend(k: u32, c: Raw) -> Raw {
    c.iter()
        .map(|(w, x)| {
            let mut v = Vec::with_capacity(w.len() + 1);
            v.push(k);
            v.extend_from_slice(w);
            (v, x.clone())
        })
        .collect()
}

fn raw_product(op: Op, a: &[u32], b: &[u32]) -> Raw {
    match op {
        Op::Left => prepend(a[0], quasi_shuffle(&a[1..], b)),
        Op::Right => prepend(b[0], quasi_shuffle(a, &b[1..])),
        Op::Middle => prepend(a[0] + b[0], quasi_shuffle(&a[1..], &b[1..])),
    }
}

fn quasi_shuffle(a: &[u32], b: &[u32]) -> Raw {
    if a.is_empty() {
        return LinComb::basis(b.to_vec());
    }
    if b.is_empty() {
        return LinComb::basis(a.to_vec());
    }
    let mut out = Raw::zero();
    for op in Op::ALL {
        out += &raw_product(op, a, b);
    }
    out
}

fn wrap(c: Raw) -> LinComb<QSymWord> {
    c.iter()
        .map(|(w, x)| (QSymWord(w.clone()), x.clone()))
        .collect()
}

#[derive(Debug, Clone, Copy, Default)]
pub struct QSymModel;

impl Trialgebra for QSymModel {
    type Basis = QSymWord;

    fn product(&self, op: Op, a: &QSymWord, b: &QSymWord) -> LinComb<QSymWord> {
        wrap(raw_product(op, &a.0, &b.0))
    }
}

/// All words of weight `n`.
pub fn qsym_basis(n: usize) -> Vec<QSymWord> {
    (1..=n)
        .flat_map(|r| compositions(n, r))
        .map(|c| QSymWord(c.into_iter().map(|k| k as u32).collect()))
        .collect()
}

/// The quasi-shuffle product computed directly: sum over all ways to place
/// the letters of `a` and of `b` in order into `r` positions so that every
/// position is used, adding letters that share a position.
pub fn quasi_shuffle_oracle(a: &QSymWord, b: &QSymWord) -> LinComb<QSymWord> {
    let (p, q) = (a.0.len(), b.0.len());
    let mut out = LinComb::zero();
    for r in p.max(q)..=p + q {
        for fa in increasing_maps(p, r) {
            for fb in increasing_maps(q, r) {
                let mut word = vec![0u32; r];
                for (i, &pos) in fa.iter().enumerate() {
                    word[pos] += a.0[i];
                }
                for (j, &pos) in fb.iter().enumerate() {
                    word[pos] += b.0[j];
                }
                if word.iter().all(|&x| x > 0) {
                    out.add_term(QSymWord(word), num_traits::One::one());
                }
            }
        }
    }
    out
}

/// Pairs of total weight `<= max_weight` where `*` differs from the oracle.
pub fn quasi_shuffle_disagreements(max_weight: usize) -> usize {
    let mut bad = 0;
    for p in 1..max_weight {
        for q in 1..=max_weight - p {
            for a in qsym_basis(p) {
                for b in qsym_basis(q) {
                    let star =
                        QSymModel.star(&LinComb::basis(a.clone()), &LinComb::basis(b.clone()));
                    if star != quasi_shuffle_oracle(&a, &b) {
                        bad += 1;
                    }
                }
            }
        }
    }
    bad
}

fn increasing_maps(len: usize, into: usize) -> Vec<Vec<usize>> {
    (0u64..1 << into)
        .filter(|m| m.count_ones() as usize == len)
        .map(|m| (0..into).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}
