//! Operadic expressions in the generator and the normal forms of `P_n`.

use std::fmt;

use crate::combinatorics::{cartesian, MarkedWord};
use crate::error::{Error, Result};
use crate::relations::Op;

use super::trias_product;

/// A fully bracketed expression built from the generator `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpExpr {
    Gen,
    Apply(Op, Box<OpExpr>, Box<OpExpr>),
}

impl OpExpr {
    pub fn apply(op: Op, a: OpExpr, b: OpExpr) -> OpExpr {
        OpExpr::Apply(op, Box::new(a), Box::new(b))
    }

    /// Number of generators.
    pub fn weight(&self) -> usize {
        match self {
            OpExpr::Gen => 1,
            OpExpr::Apply(_, a, b) => a.weight() + b.weight(),
        }
    }

    /// Value in the free trialgebra on `x`.
    pub fn eval(&self) -> MarkedWord {
        match self {
            OpExpr::Gen => MarkedWord::generator(),
            OpExpr::Apply(op, a, b) => trias_product(*op, &a.eval(), &b.eval()),
        }
    }
}

impl fmt::Display for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpExpr::Gen => write!(f, "x"),
            OpExpr::Apply(op, a, b) => {
                let sym = match op {
                    Op::Left => "⊣",
                    Op::Middle => "⊥",
                    Op::Right => "⊢",
                };
                write!(f, "({a} {sym} {b})")
            }
        }
    }
}

/// Every bracketing of `atoms[0] o_0 atoms[1] o_1 … atoms[m]`.
fn bracketings(atoms: &[OpExpr], ops: &[Op]) -> Vec<OpExpr> {
    debug_assert_eq!(atoms.len(), ops.len() + 1);
    if atoms.len() == 1 {
        return vec![atoms[0].clone()];
    }
    let mut out = Vec::new();
    for split in 1..atoms.len() {
        let lefts = bracketings(&atoms[..split], &ops[..split - 1]);
        let rights = bracketings(&atoms[split..], &ops[split..]);
        for l in &lefts {
            for r in &rights {
                out.push(OpExpr::apply(ops[split - 1], l.clone(), r.clone()));
            }
        }
    }
    out
}

fn check_blocks(blocks: &[usize]) -> Result<()> {
    if blocks.len() < 2 {
        return Err(Error::Invariant("need a0 and at least one ⊣-block".into()));
    }
    if blocks[1..].contains(&0) {
        return Err(Error::Invariant("⊣-blocks must be nonempty".into()));
    }
    Ok(())
}

/// The word `x^{a0} x̌ x^{a1-1} x̌ x^{a2-1} … x̌ x^{ak-1}` described by
/// `blocks = [a0, a1, …, ak]`.
pub fn normal_form_word(blocks: &[usize]) -> Result<MarkedWord> {
    check_blocks(blocks)?;
    let len: usize = blocks.iter().sum();
    let mut marks = Vec::with_capacity(blocks.len() - 1);
    let mut pos = blocks[0];
    for &a in &blocks[1..] {
        marks.push(pos);
        pos += a;
    }
    MarkedWord::new(len, marks)
}

/// All bracketings of the normal form `x^{⊢a0} ⊢ (x^{⊣a1}) ⊥ … ⊥ (x^{⊣ak})`.
///
/// Each `⊣`-chain is bracketed internally and then treated as an atom; the
/// atoms `x, …, x, B1, …, Bk` are joined by `⊢` (after each leading `x`) and
/// `⊥` (between blocks) in every possible bracketing. Bracketing across a
/// block boundary is not allowed: `(x ⊣ x) ⊥ x` and `x ⊣ (x ⊥ x)` differ.
pub fn normal_form_expressions(blocks: &[usize]) -> Result<Vec<OpExpr>> {
    check_blocks(blocks)?;
    let block_choices: Vec<Vec<OpExpr>> = blocks[1..]
        .iter()
        .map(|&a| bracketings(&vec![OpExpr::Gen; a], &vec![Op::Left; a - 1]))
        .collect();
    let mut ops = vec![Op::Right; blocks[0]];
    ops.extend(std::iter::repeat_n(Op::Middle, blocks.len() - 2));
    let mut out = Vec::new();
    for choice in cartesian(&block_choices) {
        let mut atoms = vec![OpExpr::Gen; blocks[0]];
        atoms.extend(choice);
        out.extend(bracketings(&atoms, &ops));
    }
    Ok(out)
}

/// Checks every normal form of weight `<= max_weight`: all of its
/// bracketings must evaluate to the word it describes, and the words must
/// run through `P_n` exactly once. Returns the number of failures.
pub fn normal_form_violations(max_weight: usize) -> usize {
    use crate::combinatorics::{compositions, enumerate_subsets};
    let mut bad = 0;
    for n in 1..=max_weight {
        let mut seen = Vec::new();
        for k in 1..=n {
            for a0 in 0..=n - k {
                for tail in compositions(n - a0, k) {
                    let mut blocks = vec![a0];
                    blocks.extend(tail);
                    let word = normal_form_word(&blocks).expect("well-formed blocks");
                    let exprs = normal_form_expressions(&blocks).expect("well-formed blocks");
                    bad += exprs
                        .iter()
                        .filter(|e| e.weight() != n || e.eval() != word)
                        .count();
                    seen.push(word);
                }
            }
        }
        seen.sort();
        if seen != enumerate_subsets(n) {
            bad += 1;
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> OpExpr {
        OpExpr::Gen
    }

    #[test]
    fn worked_examples() {
        let e = OpExpr::apply(Op::Right, x(), x());
        assert_eq!(e.eval(), MarkedWord::new(2, [1]).unwrap());
        let e = OpExpr::apply(Op::Right, OpExpr::apply(Op::Middle, x(), x()), x());
        assert_eq!(e.eval(), MarkedWord::new(3, [2]).unwrap());
    }

    #[test]
    fn bracketing_across_blocks_is_not_free() {
        let a = OpExpr::apply(Op::Middle, OpExpr::apply(Op::Left, x(), x()), x());
        let b = OpExpr::apply(Op::Left, x(), OpExpr::apply(Op::Middle, x(), x()));
        assert_ne!(a.eval(), b.eval());
    }

    #[test]
    fn catalan_many_bracketings_of_one_block() {
        let n = bracketings(&vec![x(); 5], &[Op::Left; 4]).len();
        assert_eq!(n, 14);
    }

    /// Every bracketing of every normal form evaluates to the same word, and
    /// the normal forms hit every basis word exactly once.
    #[test]
    fn normal_forms_are_bracketing_independent_and_bijective() {
        assert_eq!(normal_form_violations(6), 0);
    }

    #[test]
    fn malformed_blocks_are_rejected() {
        assert!(normal_form_word(&[2]).is_err());
        assert!(normal_form_expressions(&[1, 0]).is_err());
    }
}
