//! The free associative trialgebra on one generator.
//!
//! In weight `n` its basis is `P_n`, the words of length `n` with a nonempty
//! set of marked letters. The three products concatenate the two words and
//! keep the marks of the left factor (`⊣`), of the right factor (`⊢`) or of
//! both (`⊥`).

mod boundary;
mod expr;
mod solomon;

pub use boundary::{
    delta_product_rule, delta_rule_failures, delta_squared_violations, simplex_delta,
    simplex_delta_elt, SignReading,
};
pub use expr::{normal_form_expressions, normal_form_violations, normal_form_word, OpExpr};
pub use solomon::{
    enumerate_compositions, Composition, SolomonModel, SolomonVariant, PRINTED_SOLOMON_FAILURES,
};

use crate::combinatorics::{enumerate_subsets, LeafOrientation, MarkedWord, PlanarTree};
use crate::lincomb::LinComb;
use crate::relations::{Op, Trialgebra};

pub type TriasElt = LinComb<MarkedWord>;

pub fn trias_left(a: &MarkedWord, b: &MarkedWord) -> MarkedWord {
    MarkedWord::from_mask(a.len() + b.len(), a.mask())
}

pub fn trias_right(a: &MarkedWord, b: &MarkedWord) -> MarkedWord {
    MarkedWord::from_mask(a.len() + b.len(), b.mask() << a.len())
}

pub fn trias_middle(a: &MarkedWord, b: &MarkedWord) -> MarkedWord {
    MarkedWord::from_mask(a.len() + b.len(), a.mask() | b.mask() << a.len())
}

pub fn trias_product(op: Op, a: &MarkedWord, b: &MarkedWord) -> MarkedWord {
    match op {
        Op::Left => trias_left(a, b),
        Op::Middle => trias_middle(a, b),
        Op::Right => trias_right(a, b),
    }
}

/// The operation a face of the chain complex uses at a leaf of this orientation.
pub fn op_for_orientation(o: LeafOrientation) -> Op {
    match o {
        LeafOrientation::Left => Op::Left,
        LeafOrientation::Middle => Op::Middle,
        LeafOrientation::Right => Op::Right,
    }
}

/// Basis of the weight-`n` part.
pub fn basis(n: usize) -> Vec<MarkedWord> {
    enumerate_subsets(n)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct FreeTrias;

impl Trialgebra for FreeTrias {
    type Basis = MarkedWord;

    fn product(&self, op: Op, a: &MarkedWord, b: &MarkedWord) -> TriasElt {
        LinComb::basis(trias_product(op, a, b))
    }
}

pub fn left(a: &TriasElt, b: &TriasElt) -> TriasElt {
    FreeTrias.apply(crate::relations::Slot::Op(Op::Left), a, b)
}

pub fn right(a: &TriasElt, b: &TriasElt) -> TriasElt {
    FreeTrias.apply(crate::relations::Slot::Op(Op::Right), a, b)
}

pub fn middle(a: &TriasElt, b: &TriasElt) -> TriasElt {
    FreeTrias.apply(crate::relations::Slot::Op(Op::Middle), a, b)
}

/// The Leibniz bracket `[a, b] = a ⊣ b - b ⊢ a`.
pub fn leibniz_bracket(a: &TriasElt, b: &TriasElt) -> TriasElt {
    &left(a, b) - &right(b, a)
}

/// The associative product `ab = a ⊥ b` of the noncommutative Poisson structure.
pub fn poisson_product(a: &TriasElt, b: &TriasElt) -> TriasElt {
    middle(a, b)
}

/// Number of basis triples of total weight `<= max_weight` violating one of
/// the Leibniz identity, the two Poisson compatibilities
/// `[xy, z] = x[y, z] + [x, z]y`, `[x, yz - zy] = [x, [y, z]]`, or
/// associativity of `xy`.
pub fn poisson_violations(max_weight: usize) -> usize {
    use crate::relations::triples_up_to;
    let br = leibniz_bracket;
    let prod = poisson_product;
    let mut bad = 0;
    for (x, y, z) in triples_up_to(max_weight, basis) {
        let (x, y, z) = (LinComb::basis(x), LinComb::basis(y), LinComb::basis(z));
        let leibniz = &br(&br(&x, &y), &z) - &(&br(&br(&x, &z), &y) + &br(&x, &br(&y, &z)));
        let first = &br(&prod(&x, &y), &z) - &(&prod(&x, &br(&y, &z)) + &prod(&br(&x, &z), &y));
        let comm = &prod(&y, &z) - &prod(&z, &y);
        let second = &br(&x, &comm) - &br(&x, &br(&y, &z));
        let assoc = &prod(&prod(&x, &y), &z) - &prod(&x, &prod(&y, &z));
        if !(leibniz.is_zero() && first.is_zero() && second.is_zero() && assoc.is_zero()) {
            bad += 1;
        }
    }
    bad
}

/// Evaluates `t` on `args` (one per gap between consecutive leaves) by
/// repeatedly applying the first face: leaf 1 is deleted and the first two
/// arguments are merged by the operation its orientation selects.
pub fn fold_tree(t: &PlanarTree, args: &[MarkedWord]) -> MarkedWord {
    assert_eq!(
        t.degree(),
        args.len(),
        "one argument per gap between leaves"
    );
    assert!(!args.is_empty(), "the leaf has no evaluation");
    let mut tree = t.clone();
    let mut args = args.to_vec();
    while args.len() > 1 {
        let op = op_for_orientation(tree.leaf_orientation(1).expect("degree at least 2"));
        let merged = trias_product(op, &args[0], &args[1]);
        args.splice(0..2, [merged]);
        tree = tree.delete_leaf(1).expect("degree at least 2");
    }
    args[0]
}

/// The element of `P_n` obtained by evaluating `t ∈ T_n` on `(x, …, x)`.
pub fn eval_tree(t: &PlanarTree) -> MarkedWord {
    fold_tree(t, &vec![MarkedWord::generator(); t.degree()])
}

/// Model in which all three operations are concatenation of words over a
/// fixed alphabet; the image of an associative algebra under `As → Trias`.
#[derive(Debug, Clone, Copy, Default)]
pub struct CollapsedModel;

impl Trialgebra for CollapsedModel {
    type Basis = Vec<u8>;

    fn product(&self, _op: Op, a: &Vec<u8>, b: &Vec<u8>) -> LinComb<Vec<u8>> {
        let mut w = a.clone();
        w.extend_from_slice(b);
        LinComb::basis(w)
    }
}

/// Words of length `n` over `{0, 1}`, the weight-`n` basis of [`CollapsedModel`].
pub fn collapsed_basis(n: usize) -> Vec<Vec<u8>> {
    (0..1u32 << n)
        .map(|m| (0..n).map(|i| (m >> i & 1) as u8).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_trees;
    use crate::relations::{sweep, triples_up_to, DIAS, TRIAS};
    use std::collections::BTreeSet;

    fn w(len: usize, marks: &[usize]) -> MarkedWord {
        MarkedWord::new(len, marks.iter().copied()).unwrap()
    }

    fn g() -> TriasElt {
        LinComb::basis(MarkedWord::generator())
    }

    #[test]
    fn products_on_checked_words() {
        let a = w(2, &[0]);
        let b = w(3, &[1]);
        assert_eq!(trias_left(&a, &b), w(5, &[0]));
        assert_eq!(trias_right(&a, &b), w(5, &[3]));
        assert_eq!(trias_middle(&a, &b), w(5, &[0, 3]));
    }

    #[test]
    fn eleven_relations_hold_exhaustively() {
        let triples = triples_up_to(7, basis);
        let report = sweep(&FreeTrias, &TRIAS, triples);
        assert!(report.passed(), "{report:?}");
        assert!(report.triples > 500);
    }

    #[test]
    fn filtration_bound() {
        for p in 1..=4 {
            for q in 1..=4 {
                for a in basis(p) {
                    for b in basis(q) {
                        let sum = a.num_marks() + b.num_marks();
                        assert!(trias_left(&a, &b).num_marks() < sum);
                        assert!(trias_right(&a, &b).num_marks() < sum);
                        assert_eq!(trias_middle(&a, &b).num_marks(), sum);
                    }
                }
            }
        }
    }

    #[test]
    fn collapsed_model_is_a_trialgebra() {
        let report = sweep(&CollapsedModel, &TRIAS, triples_up_to(6, collapsed_basis));
        assert!(report.passed());
    }

    #[test]
    fn forgetting_middle_gives_a_dialgebra() {
        let report = sweep(&FreeTrias, &DIAS, triples_up_to(6, basis));
        assert!(report.passed());
    }

    #[test]
    fn bracket_examples() {
        let b = leibniz_bracket(&g(), &g());
        assert_eq!(
            b,
            LinComb::from_int_terms([(w(2, &[0]), 1), (w(2, &[1]), -1)])
        );
        assert_eq!(poisson_product(&g(), &g()), LinComb::basis(w(2, &[0, 1])));
    }

    #[test]
    fn bracket_identities_through_weight_six() {
        assert_eq!(poisson_violations(6), 0);
    }

    #[test]
    fn eval_tree_examples() {
        let right_comb = PlanarTree::graft(vec![PlanarTree::leaf(), PlanarTree::y()]).unwrap();
        assert_eq!(eval_tree(&right_comb), w(2, &[0]));
        for n in 1..=6 {
            assert_eq!(
                eval_tree(&PlanarTree::corolla(n)),
                MarkedWord::new(n, 0..n).unwrap()
            );
        }
        let t = PlanarTree::graft(vec![PlanarTree::corolla(2), PlanarTree::leaf()]).unwrap();
        assert_eq!(eval_tree(&t), w(3, &[2]));
        assert_eq!(eval_tree(&PlanarTree::y()), MarkedWord::generator());
    }

    #[test]
    fn eval_tree_is_surjective() {
        for n in 1..=6 {
            let image: BTreeSet<MarkedWord> = enumerate_trees(n).iter().map(eval_tree).collect();
            assert_eq!(image.len(), (1 << n) - 1, "n = {n}");
        }
    }

    #[test]
    fn eval_tree_is_independent_of_face_order() {
        // fold with the last face instead of the first
        fn fold_last(t: &PlanarTree, args: &[MarkedWord]) -> MarkedWord {
            let mut tree = t.clone();
            let mut args = args.to_vec();
            while args.len() > 1 {
                let i = args.len() - 1;
                let op = op_for_orientation(tree.leaf_orientation(i).unwrap());
                let merged = trias_product(op, &args[i - 1], &args[i]);
                args.splice(i - 1..=i, [merged]);
                tree = tree.delete_leaf(i).unwrap();
            }
            args[0]
        }
        for n in 1..=6 {
            for t in enumerate_trees(n) {
                let args = vec![MarkedWord::generator(); n];
                assert_eq!(fold_tree(&t, &args), fold_last(&t, &args), "{t}");
            }
        }
    }
}
