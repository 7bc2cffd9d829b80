//! Chain basis elements of the three complexes and their face maps.
//!
//! * Trias: `(t; a_1, …, a_j)` with `t ∈ T_j` and `a_i ∈ P_{n_i}`. Face `i`
//!   deletes leaf `i` of `t` and merges `a_i, a_{i+1}` by `⊣`, `⊥` or `⊢`
//!   according as leaf `i` is left, middle or right oriented.
//! * Tridend: `(X; a_1, …, a_j)` with `X ∈ P_j` and trees `a_i`. Face `i`
//!   collapses positions `i-1, i` of `X` and merges by `·`, `≻`, `≺` or `*`
//!   according as both, only `i`, only `i-1` or neither of them is marked.
//! * Tricub: `(X; a_1, …, a_j)` with `X ∈ Q_{j-1}` and `a_i ∈ Q_{n_i - 1}`.
//!   Face `i` deletes `X_i` and merges by the operation it encodes.

use std::fmt;

use serde::Serialize;

use crate::combinatorics::{CubeWord, MarkedWord, PlanarTree};
use crate::error::{Error, Result};
use crate::freetrias::{op_for_orientation, trias_product};
use crate::freetricub::tc_product;
use crate::freetridend::{td_product, td_star};
use crate::lincomb::LinComb;
use crate::relations::Op;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    Trias,
    Tridend,
    Tricub,
}

impl Theory {
    pub const ALL: [Theory; 3] = [Theory::Trias, Theory::Tridend, Theory::Tricub];

    pub fn name(self) -> &'static str {
        match self {
            Theory::Trias => "trias",
            Theory::Tridend => "tridend",
            Theory::Tricub => "tricub",
        }
    }
}

/// A basis element `top ⊗ a_1 ⊗ ⋯ ⊗ a_j` of one of the three complexes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "theory", rename_all = "lowercase")]
pub enum ChainBasisElt {
    Trias {
        top: PlanarTree,
        args: Vec<MarkedWord>,
    },
    Tridend {
        top: MarkedWord,
        args: Vec<PlanarTree>,
    },
    Tricub {
        top: CubeWord,
        args: Vec<CubeWord>,
    },
}

pub type Chain = LinComb<ChainBasisElt>;

impl ChainBasisElt {
    pub fn trias(top: PlanarTree, args: Vec<MarkedWord>) -> Result<Self> {
        if top.degree() != args.len() || args.is_empty() {
            return Err(Error::Invariant(format!(
                "tree of degree {} with {} arguments",
                top.degree(),
                args.len()
            )));
        }
        Ok(Self::Trias { top, args })
    }

    pub fn tridend(top: MarkedWord, args: Vec<PlanarTree>) -> Result<Self> {
        if top.len() != args.len() || args.iter().any(PlanarTree::is_leaf) {
            return Err(Error::Invariant(format!(
                "word of length {} with {} arguments",
                top.len(),
                args.len()
            )));
        }
        Ok(Self::Tridend { top, args })
    }

    pub fn tricub(top: CubeWord, args: Vec<CubeWord>) -> Result<Self> {
        if top.len() + 1 != args.len() {
            return Err(Error::Invariant(format!(
                "cube word of length {} with {} arguments",
                top.len(),
                args.len()
            )));
        }
        Ok(Self::Tricub { top, args })
    }

    pub fn theory(&self) -> Theory {
        match self {
            Self::Trias { .. } => Theory::Trias,
            Self::Tridend { .. } => Theory::Tridend,
            Self::Tricub { .. } => Theory::Tricub,
        }
    }

    /// Homological degree `j`: the number of arguments.
    pub fn arity(&self) -> usize {
        match self {
            Self::Trias { args, .. } => args.len(),
            Self::Tridend { args, .. } => args.len(),
            Self::Tricub { args, .. } => args.len(),
        }
    }

    pub fn weight(&self) -> usize {
        match self {
            Self::Trias { args, .. } => args.iter().map(MarkedWord::len).sum(),
            Self::Tridend { args, .. } => args.iter().map(PlanarTree::degree).sum(),
            Self::Tricub { args, .. } => args.iter().map(|a| a.len() + 1).sum(),
        }
    }

    /// The face `d_i`, `1 <= i <= arity - 1`.
    pub fn face(&self, i: usize) -> Result<Chain> {
        let j = self.arity();
        if i == 0 || i >= j {
            return Err(Error::FaceIndex {
                index: i,
                max: j.saturating_sub(1),
            });
        }
        Ok(match self {
            Self::Trias { top, args } => {
                let op = op_for_orientation(top.leaf_orientation(i)?);
                let mut a = args.clone();
                let merged = trias_product(op, &a[i - 1], &a[i]);
                a.splice(i - 1..=i, [merged]);
                LinComb::basis(Self::Trias {
                    top: top.delete_leaf(i)?,
                    args: a,
                })
            }
            Self::Tridend { top, args } => {
                let (before, at) = (top.is_marked(i - 1), top.is_marked(i));
                let marks = top
                    .marks()
                    .into_iter()
                    .map(|r| if r >= i { r - 1 } else { r });
                let new_top = MarkedWord::new(j - 1, marks)?;
                let merged = match (before, at) {
                    (true, true) => td_product(Op::Middle, &args[i - 1], &args[i])?,
                    (false, true) => td_product(Op::Right, &args[i - 1], &args[i])?,
                    (true, false) => td_product(Op::Left, &args[i - 1], &args[i])?,
                    (false, false) => td_star(&args[i - 1], &args[i]),
                };
                merged.map_linear(|t| {
                    let mut a = args.clone();
                    a.splice(i - 1..=i, [t.clone()]);
                    LinComb::basis(Self::Tridend {
                        top: new_top,
                        args: a,
                    })
                })
            }
            Self::Tricub { top, args } => {
                let op = match top.entries()[i - 1] {
                    -1 => Op::Left,
                    0 => Op::Middle,
                    _ => Op::Right,
                };
                let mut a = args.clone();
                let merged = tc_product(op, &a[i - 1], &a[i]);
                a.splice(i - 1..=i, [merged]);
                LinComb::basis(Self::Tricub {
                    top: top.remove(i - 1),
                    args: a,
                })
            }
        })
    }

    /// `Σ_{i=1}^{j-1} (-1)^i d_i`.
    pub fn boundary(&self) -> Chain {
        let mut out = Chain::zero();
        for i in 1..self.arity() {
            let f = self.face(i).expect("face index in range");
            if i % 2 == 0 {
                out += &f;
            } else {
                out -= &f;
            }
        }
        out
    }
}

impl fmt::Display for ChainBasisElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<T: fmt::Display>(xs: &[T]) -> String {
            xs.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        }
        match self {
            Self::Trias { top, args } => write!(f, "({top}; {})", list(args)),
            Self::Tridend { top, args } => write!(f, "({top}; {})", list(args)),
            Self::Tricub { top, args } => write!(f, "({top}; {})", list(args)),
        }
    }
}

pub fn face_chain(i: usize, c: &Chain) -> Result<Chain> {
    let mut out = Chain::zero();
    for (e, k) in c.iter() {
        out.add_scaled(&e.face(i)?, k);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_trees;

    fn g() -> MarkedWord {
        MarkedWord::generator()
    }

    fn w(len: usize, marks: &[usize]) -> MarkedWord {
        MarkedWord::new(len, marks.iter().copied()).unwrap()
    }

    #[test]
    fn trias_face_examples() {
        let e = ChainBasisElt::trias(PlanarTree::corolla(3), vec![g(), g(), g()]).unwrap();
        let expected =
            ChainBasisElt::trias(PlanarTree::corolla(2), vec![w(2, &[0, 1]), g()]).unwrap();
        assert_eq!(e.face(1).unwrap(), LinComb::basis(expected));

        let right_comb = PlanarTree::graft(vec![PlanarTree::leaf(), PlanarTree::y()]).unwrap();
        let e = ChainBasisElt::trias(right_comb, vec![g(), g()]).unwrap();
        let expected = ChainBasisElt::trias(PlanarTree::y(), vec![w(2, &[0])]).unwrap();
        assert_eq!(e.face(1).unwrap(), LinComb::basis(expected));
    }

    /// The tree with a corolla grafted on the left of a binary root reaches
    /// `(Y; xx x̌)` along both face orders.
    #[test]
    fn both_evaluation_paths_agree() {
        let t = PlanarTree::graft(vec![PlanarTree::corolla(2), PlanarTree::leaf()]).unwrap();
        let e = ChainBasisElt::trias(t, vec![g(), g(), g()]).unwrap();
        let end = LinComb::basis(ChainBasisElt::trias(PlanarTree::y(), vec![w(3, &[2])]).unwrap());
        let a = face_chain(1, &e.face(1).unwrap()).unwrap();
        let b = face_chain(1, &e.face(2).unwrap()).unwrap();
        assert_eq!(a, end);
        assert_eq!(b, end);
    }

    #[test]
    fn face_index_is_checked() {
        let e = ChainBasisElt::trias(PlanarTree::corolla(2), vec![g(), g()]).unwrap();
        assert!(matches!(e.face(0), Err(Error::FaceIndex { .. })));
        assert!(matches!(e.face(2), Err(Error::FaceIndex { .. })));
        assert!(ChainBasisElt::trias(PlanarTree::y(), vec![g(), g()]).is_err());
        assert!(ChainBasisElt::tricub(CubeWord::empty(), vec![]).is_err());
    }

    #[test]
    fn tridend_star_face_expands() {
        let y = PlanarTree::y();
        let e = ChainBasisElt::tridend(w(2, &[0]), vec![y.clone(), y.clone()]).unwrap();
        // positions 0, 1: marked then unmarked, so ≺
        assert_eq!(e.face(1).unwrap().len(), 1);
        let e = ChainBasisElt::tridend(w(3, &[0]), vec![y.clone(), y.clone(), y.clone()]).unwrap();
        // positions 1, 2 both unmarked, so *
        let f = e.face(2).unwrap();
        assert_eq!(f.len(), 3);
        let tops: Vec<_> = f.support().cloned().collect();
        for t in enumerate_trees(2) {
            let expected = ChainBasisElt::tridend(w(2, &[0]), vec![y.clone(), t]).unwrap();
            assert!(tops.contains(&expected));
        }
    }

    #[test]
    fn tricub_face() {
        let c = |e: &[i8]| CubeWord::new(e.to_vec()).unwrap();
        let e = ChainBasisElt::tricub(c(&[1, -1]), vec![c(&[]), c(&[0]), c(&[])]).unwrap();
        let expected = ChainBasisElt::tricub(c(&[-1]), vec![c(&[1, 0]), c(&[])]).unwrap();
        assert_eq!(e.face(1).unwrap(), LinComb::basis(expected));
        assert_eq!(e.weight(), 4);
    }
}
