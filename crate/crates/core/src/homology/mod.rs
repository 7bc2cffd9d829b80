//! Weight-graded chain complexes of the free trialgebras and their exact
//! homology.
//!
//! The weight-`m` complex has `C_j` spanned by the chain basis elements with
//! `j` arguments of total weight `m`, `1 <= j <= m`, and boundary
//! `d = Σ_{i=1}^{j-1} (-1)^i d_i : C_j → C_{j-1}`.

mod chain;

pub use chain::{face_chain, Chain, ChainBasisElt, Theory};

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    cartesian, compositions, enumerate_cube_cells, enumerate_subsets, enumerate_trees, CubeWord,
    MarkedWord,
};
use crate::error::{Error, Result};
use crate::freetrias;
use crate::linalg::sparse_rank;

/// A sparse integer matrix, one row per basis element of the source.
pub type SparseRows = Vec<Vec<(usize, BigInt)>>;

#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub theory: Theory,
    pub weight: usize,
    /// `bases[j - 1]` is the ordered basis of `C_j`.
    bases: Vec<Vec<ChainBasisElt>>,
    /// `boundaries[j - 1]` is `d_j : C_j → C_{j-1}` (empty rows for `j = 1`).
    boundaries: Vec<SparseRows>,
}

fn degree_basis(theory: Theory, m: usize, j: usize) -> Vec<ChainBasisElt> {
    let mut out = Vec::new();
    match theory {
        Theory::Trias => {
            for top in enumerate_trees(j) {
                for comp in compositions(m, j) {
                    let factors: Vec<Vec<MarkedWord>> =
                        comp.iter().map(|&n| enumerate_subsets(n)).collect();
                    for args in cartesian(&factors) {
                        out.push(ChainBasisElt::Trias {
                            top: top.clone(),
                            args,
                        });
                    }
                }
            }
        }
        Theory::Tridend => {
            for top in enumerate_subsets(j) {
                for comp in compositions(m, j) {
                    let factors: Vec<_> = comp.iter().map(|&n| enumerate_trees(n)).collect();
                    for args in cartesian(&factors) {
                        out.push(ChainBasisElt::Tridend { top, args });
                    }
                }
            }
        }
        Theory::Tricub => {
            for top in enumerate_cube_cells(j - 1) {
                for comp in compositions(m, j) {
                    let factors: Vec<_> =
                        comp.iter().map(|&n| enumerate_cube_cells(n - 1)).collect();
                    for args in cartesian(&factors) {
                        out.push(ChainBasisElt::Tricub {
                            top: top.clone(),
                            args,
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn to_rows(sources: &[ChainBasisElt], target: &[ChainBasisElt]) -> Result<SparseRows> {
    let index: HashMap<&ChainBasisElt, usize> =
        target.iter().enumerate().map(|(k, e)| (e, k)).collect();
    sources
        .par_iter()
        .map(|e| {
            e.boundary()
                .iter()
                .map(|(t, c)| {
                    let k = *index.get(t).ok_or_else(|| {
                        Error::Invariant(format!("boundary of {e} leaves the complex at {t}"))
                    })?;
                    if !c.is_integer() {
                        return Err(Error::Invariant(format!(
                            "non-integral boundary coefficient {c}"
                        )));
                    }
                    Ok((k, c.to_integer()))
                })
                .collect()
        })
        .collect()
}

fn compose_is_zero(outer: &SparseRows, inner: &SparseRows) -> bool {
    // rows of inner ∘ outer: for each source row of `outer`, Σ c · inner[k]
    outer.par_iter().all(|row| {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (k, c) in row {
            for (l, d) in &inner[*k] {
                *acc.entry(*l).or_insert_with(BigInt::zero) += c * d;
            }
        }
        acc.values().all(Zero::is_zero)
    })
}

impl ChainComplex {
    /// Builds the weight-`m` complex and checks `d ∘ d = 0`.
    pub fn build(theory: Theory, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Invariant("weights start at 1".into()));
        }
        let bases: Vec<Vec<ChainBasisElt>> = (1..=m)
            .into_par_iter()
            .map(|j| degree_basis(theory, m, j))
            .collect();
        let mut boundaries = vec![vec![Vec::new(); bases[0].len()]];
        for j in 2..=m {
            boundaries.push(to_rows(&bases[j - 1], &bases[j - 2])?);
        }
        let c = Self {
            theory,
            weight: m,
            bases,
            boundaries,
        };
        c.check_dd()?;
        Ok(c)
    }

    fn check_dd(&self) -> Result<()> {
        for j in 3..=self.weight {
            if !compose_is_zero(&self.boundaries[j - 1], &self.boundaries[j - 2]) {
                return Err(Error::Invariant(format!("d∘d ≠ 0 from degree {j}")));
            }
        }
        Ok(())
    }

    pub fn top_degree(&self) -> usize {
        self.bases.len()
    }

    pub fn basis(&self, j: usize) -> &[ChainBasisElt] {
        &self.bases[j - 1]
    }

    /// `d_j` as sparse rows indexed by `basis(j)`, columns by `basis(j - 1)`.
    pub fn boundary(&self, j: usize) -> &SparseRows {
        &self.boundaries[j - 1]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims()
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { -(d as i64) } else { d as i64 })
            .sum()
    }

    /// `rank d_j` for `j = 1..=top`.
    pub fn boundary_ranks(&self) -> Vec<usize> {
        self.boundaries
            .par_iter()
            .map(|rows| sparse_rank(rows.iter().cloned()))
            .collect()
    }

    /// Betti numbers `b_j = dim C_j - rank d_j - rank d_{j+1}`, `j = 1..=top`.
    pub fn homology_ranks(&self) -> Vec<usize> {
        let ranks = self.boundary_ranks();
        let dims = self.dims();
        (0..dims.len())
            .map(|k| dims[k] - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
            .collect()
    }

    /// Splits the complex into the subcomplexes of elements with a common
    /// full evaluation. Only the trias and tricub complexes split this way.
    pub fn split_by_evaluation(&self) -> Result<BTreeMap<EvalClass, ChainComplex>> {
        let mut classes: BTreeMap<EvalClass, Vec<Vec<ChainBasisElt>>> = BTreeMap::new();
        let mut class_of: Vec<Vec<EvalClass>> = Vec::with_capacity(self.bases.len());
        for (k, basis) in self.bases.iter().enumerate() {
            let mut row = Vec::with_capacity(basis.len());
            for e in basis {
                let u = evaluation_class(e)?;
                classes
                    .entry(u.clone())
                    .or_insert_with(|| vec![Vec::new(); self.bases.len()])[k]
                    .push(e.clone());
                row.push(u);
            }
            class_of.push(row);
        }
        for j in 2..=self.top_degree() {
            for (r, row) in self.boundaries[j - 1].iter().enumerate() {
                for (c, _) in row {
                    if class_of[j - 1][r] != class_of[j - 2][*c] {
                        return Err(Error::Invariant(format!(
                            "boundary of {} crosses evaluation classes",
                            self.bases[j - 1][r]
                        )));
                    }
                }
            }
        }
        classes
            .into_iter()
            .map(|(u, bases)| {
                let mut boundaries = vec![vec![Vec::new(); bases[0].len()]];
                for j in 2..=bases.len() {
                    boundaries.push(to_rows(&bases[j - 1], &bases[j - 2])?);
                }
                Ok((
                    u,
                    ChainComplex {
                        theory: self.theory,
                        weight: self.weight,
                        bases,
                        boundaries,
                    },
                ))
            })
            .collect()
    }
}

/// The full evaluation of a chain basis element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum EvalClass {
    Word(MarkedWord),
    Cube(CubeWord),
}

impl std::fmt::Display for EvalClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EvalClass::Word(w) => write!(f, "{w}"),
            EvalClass::Cube(c) => write!(f, "{c}"),
        }
    }
}

pub fn evaluation_class(e: &ChainBasisElt) -> Result<EvalClass> {
    match e {
        ChainBasisElt::Trias { top, args } => Ok(EvalClass::Word(freetrias::fold_tree(top, args))),
        ChainBasisElt::Tricub { top, args } => {
            let mut word = args[0].clone();
            for (sep, a) in top.entries().iter().zip(&args[1..]) {
                word = word.join(*sep, a);
            }
            Ok(EvalClass::Cube(word))
        }
        ChainBasisElt::Tridend { .. } => Err(Error::Invariant(
            "the tridend complex has no evaluation splitting".into(),
        )),
    }
}

/// Checks `d_i d_j = d_{j-1} d_i` for `i < j` on every basis element.
pub fn presimplicial_violations(c: &ChainComplex) -> Result<usize> {
    let mut bad = 0;
    for k in 3..=c.top_degree() {
        for e in c.basis(k) {
            let chain = Chain::basis(e.clone());
            for j in 2..k {
                for i in 1..j {
                    let lhs = face_chain(i, &face_chain(j, &chain)?)?;
                    let rhs = face_chain(j - 1, &face_chain(i, &chain)?)?;
                    if lhs != rhs {
                        bad += 1;
                    }
                }
            }
        }
    }
    Ok(bad)
}

/// Betti numbers of the weight-`m` complex predicted by the Koszulity theorems.
pub fn expected_betti(m: usize) -> Vec<usize> {
    let mut b = vec![0; m];
    if m == 1 {
        b[0] = 1;
    }
    b
}

#[derive(Debug, Clone, Serialize)]
pub struct HomologyReport {
    pub theory: Theory,
    pub weight: usize,
    pub dims: Vec<usize>,
    pub betti: Vec<usize>,
    pub euler_characteristic: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_class: Option<BTreeMap<String, Vec<usize>>>,
    pub passed: bool,
}

pub fn homology_report(theory: Theory, m: usize, per_class: bool) -> Result<HomologyReport> {
    let c = ChainComplex::build(theory, m)?;
    let betti = c.homology_ranks();
    let expected = expected_betti(m);
    let mut passed = betti == expected;
    let classes = if per_class && theory != Theory::Tridend {
        let split = c.split_by_evaluation()?;
        let mut out = BTreeMap::new();
        for (u, block) in split {
            let b = block.homology_ranks();
            passed &= b == expected;
            out.insert(u.to_string(), b);
        }
        Some(out)
    } else {
        None
    };
    Ok(HomologyReport {
        theory,
        weight: m,
        dims: c.dims(),
        betti,
        euler_characteristic: c.euler_characteristic(),
        per_class: classes,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        assert_eq!(
            ChainComplex::build(Theory::Trias, 1).unwrap().dims(),
            vec![1]
        );
        assert_eq!(
            ChainComplex::build(Theory::Trias, 2).unwrap().dims(),
            vec![3, 3]
        );
        assert_eq!(
            ChainComplex::build(Theory::Tricub, 2).unwrap().dims(),
            vec![3, 3]
        );
        assert_eq!(
            ChainComplex::build(Theory::Tridend, 2).unwrap().dims(),
            vec![3, 3]
        );
    }

    #[test]
    fn weight_one_is_the_generator() {
        for t in Theory::ALL {
            assert_eq!(ChainComplex::build(t, 1).unwrap().homology_ranks(), vec![1]);
        }
    }

    #[test]
    fn acyclic_in_low_weight() {
        for t in Theory::ALL {
            for m in 2..=4 {
                let c = ChainComplex::build(t, m).unwrap();
                assert_eq!(c.homology_ranks(), vec![0; m], "{t:?} m={m}");
                assert_eq!(c.euler_characteristic(), 0);
            }
        }
    }

    #[test]
    fn trias_weight_two_splits_into_three_blocks() {
        let c = ChainComplex::build(Theory::Trias, 2).unwrap();
        let split = c.split_by_evaluation().unwrap();
        assert_eq!(split.len(), 3);
        for block in split.values() {
            assert_eq!(block.dims(), vec![1, 1]);
        }
        let c = ChainComplex::build(Theory::Trias, 1).unwrap();
        assert_eq!(c.split_by_evaluation().unwrap().len(), 1);
    }

    #[test]
    fn tridend_has_no_splitting() {
        let c = ChainComplex::build(Theory::Tridend, 2).unwrap();
        assert!(c.split_by_evaluation().is_err());
    }

    #[test]
    fn trias_block_of_the_first_marked_word() {
        let c = ChainComplex::build(Theory::Trias, 4).unwrap();
        let split = c.split_by_evaluation().unwrap();
        let u = EvalClass::Word(MarkedWord::new(4, [0]).unwrap());
        let top = split[&u].basis(4);
        assert_eq!(top.len(), 11);
        let binary = top
            .iter()
            .filter(|e| matches!(e, ChainBasisElt::Trias { top, .. } if top.is_binary()))
            .count();
        assert_eq!(binary, 5);
    }

    #[test]
    fn tricub_blocks_are_simplices() {
        for m in 1..=5 {
            let c = ChainComplex::build(Theory::Tricub, m).unwrap();
            let split = c.split_by_evaluation().unwrap();
            assert_eq!(split.len(), 3usize.pow(m as u32 - 1));
            for block in split.values() {
                let expected: Vec<usize> = (1..=m).map(|j| binom(m - 1, j - 1)).collect();
                assert_eq!(block.dims(), expected);
            }
        }
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn presimplicial_in_low_weight() {
        for t in Theory::ALL {
            for m in 1..=4 {
                let c = ChainComplex::build(t, m).unwrap();
                assert_eq!(presimplicial_violations(&c).unwrap(), 0, "{t:?} m={m}");
            }
        }
    }
}
