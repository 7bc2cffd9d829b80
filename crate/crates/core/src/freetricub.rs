//! The free cubical trialgebra on one generator. Its weight-`n` part has
//! basis `Q_{n-1}`, the cells of the `(n-1)`-cube, and the three products
//! insert `-1`, `0` or `+1` between the two words.

use std::collections::BTreeSet;

use crate::combinatorics::{enumerate_cube_cells, CubeWord};
use crate::lincomb::LinComb;
use crate::relations::{Op, Trialgebra};

pub type TricubElt = LinComb<CubeWord>;

pub fn separator(op: Op) -> i8 {
    match op {
        Op::Left => -1,
        Op::Middle => 0,
        Op::Right => 1,
    }
}

pub fn tc_left(a: &CubeWord, b: &CubeWord) -> CubeWord {
    a.join(-1, b)
}

pub fn tc_middle(a: &CubeWord, b: &CubeWord) -> CubeWord {
    a.join(0, b)
}

pub fn tc_right(a: &CubeWord, b: &CubeWord) -> CubeWord {
    a.join(1, b)
}

pub fn tc_product(op: Op, a: &CubeWord, b: &CubeWord) -> CubeWord {
    a.join(separator(op), b)
}

pub fn tc_star(a: &CubeWord, b: &CubeWord) -> TricubElt {
    Op::ALL
        .iter()
        .map(|&op| (tc_product(op, a, b), num_traits::One::one()))
        .collect()
}

/// Weight of a basis word: one more than its length.
pub fn weight(w: &CubeWord) -> usize {
    w.len() + 1
}

/// Basis of the weight-`n` part.
pub fn basis(n: usize) -> Vec<CubeWord> {
    assert!(n >= 1, "weights start at 1");
    enumerate_cube_cells(n - 1)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct FreeTricub;

impl Trialgebra for FreeTricub {
    type Basis = CubeWord;

    fn product(&self, op: Op, a: &CubeWord, b: &CubeWord) -> TricubElt {
        LinComb::basis(tc_product(op, a, b))
    }
}

/// All three operations equal to the single associative product `⊥`; the
/// image of an associative algebra under `As → Tricub`.
#[derive(Debug, Clone, Copy, Default)]
pub struct CollapsedCubeModel;

impl Trialgebra for CollapsedCubeModel {
    type Basis = CubeWord;

    fn product(&self, _op: Op, a: &CubeWord, b: &CubeWord) -> TricubElt {
        LinComb::basis(tc_middle(a, b))
    }
}

/// Number of distinct words of each weight `1..=max_weight` generated from
/// the empty word by the three operations.
pub fn generated_counts(max_weight: usize) -> Vec<usize> {
    let mut levels: Vec<BTreeSet<CubeWord>> =
        vec![BTreeSet::new(), BTreeSet::from([CubeWord::empty()])];
    for n in 2..=max_weight {
        let mut level = BTreeSet::new();
        for p in 1..n {
            for a in &levels[p] {
                for b in &levels[n - p] {
                    for op in Op::ALL {
                        level.insert(tc_product(op, a, b));
                    }
                }
            }
        }
        levels.push(level);
    }
    levels[1..].iter().map(BTreeSet::len).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::{star_associative, sweep, triples_up_to, DICUB, TRICUB};

    fn c(e: &[i8]) -> CubeWord {
        CubeWord::new(e.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let e = CubeWord::empty();
        assert_eq!(tc_left(&e, &e), c(&[-1]));
        assert_eq!(tc_middle(&c(&[0]), &c(&[1])), c(&[0, 0, 1]));
        assert_eq!(tc_right(&e, &e), c(&[1]));
        let all: TricubElt = basis(2)
            .into_iter()
            .map(|w| (w, num_traits::One::one()))
            .collect();
        assert_eq!(tc_star(&e, &e), all);
    }

    #[test]
    fn nine_relations_hold_exhaustively() {
        let report = sweep(&FreeTricub, &TRICUB, triples_up_to(7, basis));
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn star_is_associative() {
        for (x, y, z) in triples_up_to(6, basis) {
            assert!(star_associative(&FreeTricub, &x, &y, &z));
        }
    }

    #[test]
    fn collapsed_model_satisfies_the_relations() {
        assert!(sweep(&CollapsedCubeModel, &TRICUB, triples_up_to(6, basis)).passed());
    }

    #[test]
    fn dropping_middle_leaves_a_cubical_dialgebra() {
        let vertices = |n| {
            basis(n)
                .into_iter()
                .filter(|w| w.dimension() == 0)
                .collect::<Vec<_>>()
        };
        assert!(sweep(&FreeTricub, &DICUB, triples_up_to(7, vertices)).passed());
    }

    #[test]
    fn generated_freely() {
        let expected: Vec<usize> = (1..=6).map(|n| 3usize.pow(n as u32 - 1)).collect();
        assert_eq!(generated_counts(6), expected);
    }
}
