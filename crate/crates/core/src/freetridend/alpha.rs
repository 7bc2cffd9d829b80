//! The inverse morphism `α` from trees to the free algebra on `u = Y`.

use crate::combinatorics::PlanarTree;
use crate::lincomb::LinComb;
use crate::relations::Op;

use super::{td_apply, TreePoly};

fn u() -> TreePoly {
    LinComb::basis(PlanarTree::y())
}

/// `α(t)`, or `None` for `α(|) = 1`.
fn alpha_or_unit(t: &PlanarTree) -> Option<TreePoly> {
    let xs = t.decompose()?;
    let k = xs.len() - 1;
    // 1 ≻ u = u and u ≺ 1 = u
    let head = match alpha_or_unit(&xs[0]) {
        None => u(),
        Some(a) => td_apply(Op::Right, &a, &u()),
    };
    let last = alpha_or_unit(&xs[k]);
    if k == 1 {
        return Some(match last {
            None => head,
            Some(b) => td_apply(Op::Left, &head, &b),
        });
    }
    let tail = match &last {
        None => u(),
        Some(b) => td_apply(Op::Left, &u(), b),
    };
    if k == 2 {
        // α(x0 ∨ x1 ∨ x2) = (α(x0) ≻ u) · (α(x1) ≻ u ≺ α(x2)), which is
        // (α(x0) ≻ u) · (u ≺ α(x2)) when x1 = |
        let Some(m) = alpha_or_unit(&xs[1]) else {
            return Some(td_apply(Op::Middle, &head, &tail));
        };
        let inner = td_apply(Op::Right, &m, &u());
        let inner = match &last {
            None => inner,
            Some(b) => td_apply(Op::Left, &inner, b),
        };
        return Some(td_apply(Op::Middle, &head, &inner));
    }
    let middle = alpha(&PlanarTree::graft_unchecked(xs[1..k].to_vec()));
    let front = td_apply(Op::Middle, &head, &middle);
    Some(td_apply(Op::Middle, &front, &tail))
}

/// Evaluates the recursive inverse of the tree-model morphism. On the free
/// algebra itself this is the identity, which makes it a consistency check.
///
/// # Panics
/// On the leaf, whose image `1` lies outside the algebra.
pub fn alpha(t: &PlanarTree) -> TreePoly {
    alpha_or_unit(t).expect("α(|) = 1 is not an element of the algebra")
}

/// Trees of degree `<= max_degree` with `α(t) ≠ t`.
pub fn alpha_violations(max_degree: usize) -> usize {
    (1..=max_degree)
        .flat_map(crate::combinatorics::enumerate_trees)
        .filter(|t| alpha(t) != LinComb::basis(t.clone()))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_trees;

    #[test]
    fn small_cases() {
        assert_eq!(alpha(&PlanarTree::y()), u());
        let c = PlanarTree::corolla(2);
        assert_eq!(alpha(&c), LinComb::basis(c));
    }

    #[test]
    fn alpha_is_the_identity() {
        assert_eq!(enumerate_trees(4).len(), 45);
        assert_eq!(alpha_violations(5), 0);
    }
}
