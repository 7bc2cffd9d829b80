//! The free dendriform trialgebra on one generator.
//!
//! Its weight-`n` part has basis `T_n`, the planar trees with `n + 1` leaves.
//! Writing `x = x0 ∨ … ∨ xk` and `y = y0 ∨ … ∨ yl`:
//!
//! ```text
//! x ≺ y = x0 ∨ … ∨ (xk * y)
//! x · y = x0 ∨ … ∨ (xk * y0) ∨ … ∨ yl
//! x ≻ y = (x * y0) ∨ … ∨ yl
//! ```
//!
//! with `*` the sum of the three and the leaf `|` a unit for `*`.

mod alpha;
mod qsym;

pub use alpha::{alpha, alpha_violations};
pub use qsym::{
    qsym_basis, quasi_shuffle_disagreements, quasi_shuffle_oracle, QSymModel, QSymWord,
};

use std::collections::HashMap;

use crate::combinatorics::{enumerate_trees, PlanarTree};
use crate::error::{Error, Result};
use crate::linalg::SparseRank;
use crate::lincomb::{Coeff, LinComb};
use crate::relations::{Op, Trialgebra};

pub type TreePoly = LinComb<PlanarTree>;

/// Grafts combinations of trees, multilinearly in each child slot.
pub fn graft_combs(children: &[TreePoly]) -> TreePoly {
    let mut acc: Vec<(Vec<PlanarTree>, Coeff)> = vec![(
        Vec::with_capacity(children.len()),
        Coeff::from_integer(1.into()),
    )];
    for slot in children {
        let mut next = Vec::with_capacity(acc.len() * slot.len());
        for (prefix, c) in &acc {
            for (t, d) in slot.iter() {
                let mut p = prefix.clone();
                p.push(t.clone());
                next.push((p, c * d));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(cs, c)| (PlanarTree::graft_unchecked(cs), c))
        .collect()
}

/// The recursion, with or without the middle operation. Without it the
/// operations are those of a dendriform dialgebra and `*` is `≺ + ≻`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Recursion {
    middle: bool,
}

impl Recursion {
    fn star(self, x: &PlanarTree, y: &PlanarTree) -> TreePoly {
        if x.is_leaf() {
            return LinComb::basis(y.clone());
        }
        if y.is_leaf() {
            return LinComb::basis(x.clone());
        }
        let mut out = self.prec(x, y);
        out += &self.succ(x, y);
        if self.middle {
            out += &self.mid(x, y);
        }
        out
    }

    fn prec(self, x: &PlanarTree, y: &PlanarTree) -> TreePoly {
        let xs = x.decompose().expect("non-unit argument");
        let mut slots: Vec<TreePoly> = xs[..xs.len() - 1]
            .iter()
            .cloned()
            .map(LinComb::basis)
            .collect();
        slots.push(self.star(&xs[xs.len() - 1], y));
        graft_combs(&slots)
    }

    fn succ(self, x: &PlanarTree, y: &PlanarTree) -> TreePoly {
        let ys = y.decompose().expect("non-unit argument");
        let mut slots = vec![self.star(x, &ys[0])];
        slots.extend(ys[1..].iter().cloned().map(LinComb::basis));
        graft_combs(&slots)
    }

    fn mid(self, x: &PlanarTree, y: &PlanarTree) -> TreePoly {
        if !self.middle {
            return TreePoly::zero();
        }
        let xs = x.decompose().expect("non-unit argument");
        let ys = y.decompose().expect("non-unit argument");
        let mut slots: Vec<TreePoly> = xs[..xs.len() - 1]
            .iter()
            .cloned()
            .map(LinComb::basis)
            .collect();
        slots.push(self.star(&xs[xs.len() - 1], &ys[0]));
        slots.extend(ys[1..].iter().cloned().map(LinComb::basis));
        graft_combs(&slots)
    }

    fn product(self, op: Op, x: &PlanarTree, y: &PlanarTree) -> TreePoly {
        match op {
            Op::Left => self.prec(x, y),
            Op::Middle => self.mid(x, y),
            Op::Right => self.succ(x, y),
        }
    }
}

const TRIDEND: Recursion = Recursion { middle: true };

fn reject_unit(x: &PlanarTree, y: &PlanarTree) -> Result<()> {
    if x.is_leaf() || y.is_leaf() {
        return Err(Error::UnitArgument(
            "≺, ≻ and · are not defined on the unit |",
        ));
    }
    Ok(())
}

pub fn td_prec(x: &PlanarTree, y: &PlanarTree) -> Result<TreePoly> {
    reject_unit(x, y)?;
    Ok(TRIDEND.prec(x, y))
}

pub fn td_succ(x: &PlanarTree, y: &PlanarTree) -> Result<TreePoly> {
    reject_unit(x, y)?;
    Ok(TRIDEND.succ(x, y))
}

pub fn td_mid(x: &PlanarTree, y: &PlanarTree) -> Result<TreePoly> {
    reject_unit(x, y)?;
    Ok(TRIDEND.mid(x, y))
}

/// `x * y`; the leaf is accepted on either side as the unit.
pub fn td_star(x: &PlanarTree, y: &PlanarTree) -> TreePoly {
    TRIDEND.star(x, y)
}

pub fn td_product(op: Op, x: &PlanarTree, y: &PlanarTree) -> Result<TreePoly> {
    reject_unit(x, y)?;
    Ok(TRIDEND.product(op, x, y))
}

/// Bilinear extension of `op` to combinations of non-unit trees.
pub fn td_apply(op: Op, a: &TreePoly, b: &TreePoly) -> TreePoly {
    TreeModel.apply(crate::relations::Slot::Op(op), a, b)
}

/// The tree model as a [`Trialgebra`]; basis trees must have degree ≥ 1.
#[derive(Debug, Clone, Copy, Default)]
pub struct TreeModel;

impl Trialgebra for TreeModel {
    type Basis = PlanarTree;

    fn product(&self, op: Op, a: &PlanarTree, b: &PlanarTree) -> TreePoly {
        TRIDEND.product(op, a, b)
    }
}

/// The same recursion with `·` forced to zero: a dendriform dialgebra.
#[derive(Debug, Clone, Copy, Default)]
pub struct DialgebraTreeModel;

impl Trialgebra for DialgebraTreeModel {
    type Basis = PlanarTree;

    fn product(&self, op: Op, a: &PlanarTree, b: &PlanarTree) -> TreePoly {
        Recursion { middle: false }.product(op, a, b)
    }
}

pub fn binary_trees(n: usize) -> Vec<PlanarTree> {
    enumerate_trees(n)
        .into_iter()
        .filter(PlanarTree::is_binary)
        .collect()
}

/// Dimensions, for `n = 1..=max_degree`, of the span of everything generated
/// from `Y` by the three operations.
pub fn generated_dimensions(max_degree: usize) -> Vec<usize> {
    let mut levels: Vec<Vec<TreePoly>> = vec![Vec::new(), vec![LinComb::basis(PlanarTree::y())]];
    for n in 2..=max_degree {
        let mut index: HashMap<PlanarTree, usize> = HashMap::new();
        let mut rank = SparseRank::new();
        let mut kept = Vec::new();
        for p in 1..n {
            for a in &levels[p] {
                for b in &levels[n - p] {
                    for op in Op::ALL {
                        let v = td_apply(op, a, b);
                        let row = v
                            .iter()
                            .map(|(t, c)| {
                                let k = index.len();
                                (*index.entry(t.clone()).or_insert(k), c.to_integer())
                            })
                            .collect();
                        if rank.push_row(row) {
                            kept.push(v);
                        }
                    }
                }
            }
        }
        levels.push(kept);
    }
    levels[1..].iter().map(Vec::len).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::{star_associative, sweep, triples_up_to, DIDEND, TRIDEND as RELS};

    fn leaf() -> PlanarTree {
        PlanarTree::leaf()
    }

    fn y() -> PlanarTree {
        PlanarTree::y()
    }

    fn g(cs: Vec<PlanarTree>) -> PlanarTree {
        PlanarTree::graft(cs).unwrap()
    }

    #[test]
    fn degree_two_products() {
        assert_eq!(
            td_prec(&y(), &y()).unwrap(),
            LinComb::basis(g(vec![leaf(), y()]))
        );
        assert_eq!(
            td_succ(&y(), &y()).unwrap(),
            LinComb::basis(g(vec![y(), leaf()]))
        );
        assert_eq!(
            td_mid(&y(), &y()).unwrap(),
            LinComb::basis(PlanarTree::corolla(2))
        );
        let all: TreePoly = enumerate_trees(2)
            .into_iter()
            .map(|t| (t, Coeff::from_integer(1.into())))
            .collect();
        assert_eq!(td_star(&y(), &y()), all);
    }

    #[test]
    fn unit_is_rejected_except_by_star() {
        assert!(matches!(
            td_prec(&leaf(), &y()),
            Err(Error::UnitArgument(_))
        ));
        assert!(td_mid(&y(), &leaf()).is_err());
        assert!(td_succ(&leaf(), &leaf()).is_err());
        assert_eq!(td_star(&leaf(), &y()), LinComb::basis(y()));
        assert_eq!(td_star(&y(), &leaf()), LinComb::basis(y()));
    }

    #[test]
    fn degree_is_additive() {
        for x in enumerate_trees(2) {
            for z in enumerate_trees(3) {
                for op in Op::ALL {
                    assert!(td_product(op, &x, &z)
                        .unwrap()
                        .support()
                        .all(|t| t.degree() == 5));
                }
            }
        }
    }

    #[test]
    fn seven_relations_hold_exhaustively() {
        let report = sweep(&TreeModel, &RELS, triples_up_to(6, enumerate_trees));
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn star_is_associative() {
        for (x, y, z) in triples_up_to(6, enumerate_trees) {
            assert!(star_associative(&TreeModel, &x, &y, &z));
        }
    }

    #[test]
    fn without_middle_binary_trees_form_a_dendriform_dialgebra() {
        for (a, b, _) in triples_up_to(6, binary_trees) {
            for op in [Op::Left, Op::Right] {
                let p = DialgebraTreeModel.product(op, &a, &b);
                assert!(p.support().all(PlanarTree::is_binary));
            }
        }
        let report = sweep(&DialgebraTreeModel, &DIDEND, triples_up_to(6, binary_trees));
        assert!(report.passed());
    }

    #[test]
    fn generated_by_y_freely() {
        let expected: Vec<usize> = (1..=5).map(|n| enumerate_trees(n).len()).collect();
        assert_eq!(generated_dimensions(5), expected);
    }
}
