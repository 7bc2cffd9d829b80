//! The simplicial boundary on `K[P_n]` and its interaction with the products.

use num_bigint::BigInt;

use crate::combinatorics::MarkedWord;
use crate::lincomb::{Coeff, LinComb};
use crate::relations::Op;

use super::{left, middle, right, TriasElt};

/// `δ(X) = Σ_i (-1)^{i+1} X \ {n_i}` over the marks `n_1 < … < n_k`.
/// Terms that would lose their last mark are dropped, so a word with a
/// single mark has boundary zero.
pub fn simplex_delta(x: &MarkedWord) -> TriasElt {
    let mut out = TriasElt::zero();
    if x.num_marks() < 2 {
        return out;
    }
    for (i, m) in x.marks().into_iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let face = MarkedWord::from_mask(x.len(), x.mask() & !(1u64 << m));
        out.add_term(face, Coeff::from_integer(BigInt::from(sign)));
    }
    out
}

pub fn simplex_delta_elt(a: &TriasElt) -> TriasElt {
    a.map_linear(simplex_delta)
}

/// How to read the exponent `k` in the sign `(-1)^k` of the product rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignReading {
    /// `k` is the number of marks of the left operand, in every case.
    OperandMarks,
    /// `k` is the number of marks the left operand contributes to the
    /// product: none for `⊢`, all of them for `⊣` and `⊥`.
    SurvivingMarks,
}

/// The right-hand side of the product rule for `δ(X ∘ Y)`:
///
/// ```text
/// δ(X ⊣ Y) = δX ⊣ Y
/// δ(X ⊢ Y) = (-1)^k X ⊢ δY
/// δ(X ⊥ Y) = [δX ⊥ Y or X ⊢ Y] + (-1)^k [X ⊥ δY or X ⊣ Y]
/// ```
///
/// where in the `⊥` case the bracketed alternative is used when the
/// boundary it would replace vanishes.
pub fn delta_product_rule(
    op: Op,
    x: &MarkedWord,
    y: &MarkedWord,
    reading: SignReading,
) -> TriasElt {
    let (xe, ye) = (LinComb::basis(*x), LinComb::basis(*y));
    let (dx, dy) = (simplex_delta(x), simplex_delta(y));
    let k = match (reading, op) {
        (SignReading::SurvivingMarks, Op::Right) => 0,
        _ => x.num_marks(),
    };
    let sign = Coeff::from_integer(BigInt::from(if k % 2 == 0 { 1 } else { -1 }));
    match op {
        Op::Left => left(&dx, &ye),
        Op::Right => right(&xe, &dy).scale(&sign),
        Op::Middle => {
            let first = if dx.is_zero() {
                right(&xe, &ye)
            } else {
                middle(&dx, &ye)
            };
            let second = if dy.is_zero() {
                left(&xe, &ye)
            } else {
                middle(&xe, &dy)
            };
            &first + &second.scale(&sign)
        }
    }
}

/// Basis words of length `<= max_len` with `δδ ≠ 0`.
pub fn delta_squared_violations(max_len: usize) -> usize {
    (1..=max_len)
        .flat_map(crate::freetrias::basis)
        .filter(|x| !simplex_delta_elt(&simplex_delta(x)).is_zero())
        .count()
}

/// All `(op, X, Y)` with `|X| + |Y| <= max_total` where the product rule
/// under `reading` disagrees with `δ(X ∘ Y)`.
pub fn delta_rule_failures(
    max_total: usize,
    reading: SignReading,
) -> Vec<(Op, MarkedWord, MarkedWord)> {
    use crate::freetrias::{basis, trias_product};
    let mut bad = Vec::new();
    for p in 1..max_total {
        for q in 1..=max_total - p {
            for x in basis(p) {
                for y in basis(q) {
                    for op in Op::ALL {
                        let lhs = simplex_delta(&trias_product(op, &x, &y));
                        if lhs != delta_product_rule(op, &x, &y, reading) {
                            bad.push((op, x, y));
                        }
                    }
                }
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freetrias::trias_product;

    fn w(len: usize, marks: &[usize]) -> MarkedWord {
        MarkedWord::new(len, marks.iter().copied()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            simplex_delta(&w(2, &[0, 1])),
            LinComb::from_int_terms([(w(2, &[1]), 1), (w(2, &[0]), -1)])
        );
        assert!(simplex_delta(&w(3, &[1])).is_zero());
        let g = MarkedWord::generator();
        let lhs = simplex_delta(&trias_product(Op::Middle, &g, &g));
        let expected = LinComb::from_int_terms([(w(2, &[1]), 1), (w(2, &[0]), -1)]);
        assert_eq!(lhs, expected);
        assert_eq!(
            delta_product_rule(Op::Middle, &g, &g, SignReading::OperandMarks),
            expected
        );
    }

    #[test]
    fn delta_squares_to_zero() {
        assert_eq!(delta_squared_violations(8), 0);
    }

    fn failures(reading: SignReading) -> Vec<(Op, MarkedWord, MarkedWord)> {
        delta_rule_failures(7, reading)
    }

    #[test]
    fn product_rule_holds_when_k_counts_surviving_marks() {
        assert_eq!(failures(SignReading::SurvivingMarks), vec![]);
    }

    /// Reading `k` as the mark count of the left operand in the `⊢` case
    /// fails exactly when that count is odd and `δY ≠ 0`.
    #[test]
    fn literal_reading_breaks_the_right_case() {
        let bad = failures(SignReading::OperandMarks);
        assert!(!bad.is_empty());
        for (op, x, y) in &bad {
            assert_eq!(*op, Op::Right);
            assert_eq!(x.num_marks() % 2, 1);
            assert!(y.num_marks() >= 2);
        }
        assert!(bad.contains(&(Op::Right, w(1, &[0]), w(2, &[0, 1]))));
    }
}
