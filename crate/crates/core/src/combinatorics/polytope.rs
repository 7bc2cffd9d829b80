use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::TPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Simplex,
    Associahedron,
    Cube,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Simplex, Family::Associahedron, Family::Cube];

    pub fn name(self) -> &'static str {
        match self {
            Family::Simplex => "simplex",
            Family::Associahedron => "associahedron",
            Family::Cube => "cube",
        }
    }
}

/// `|T_{n,k}|` for `k = 0..=n`, counted by a dynamic program over the
/// grafting decomposition (trees with `L` leaves and `v` internal vertices).
pub fn tree_counts_by_grade(n: usize) -> Vec<BigInt> {
    let leaves = n + 1;
    // a[l][v]: trees; seq[l][v]: nonempty sequences of trees
    let mut a = vec![vec![BigInt::zero(); leaves + 1]; leaves + 1];
    let mut seq = vec![vec![BigInt::zero(); leaves + 1]; leaves + 1];
    for l in 1..=leaves {
        // sequences of length >= 2, split as first tree + nonempty rest
        let mut long = vec![BigInt::zero(); leaves + 1];
        for l1 in 1..l {
            for v1 in 0..l1 {
                if a[l1][v1].is_zero() {
                    continue;
                }
                for v2 in 0..=leaves - v1 {
                    if !seq[l - l1][v2].is_zero() {
                        long[v1 + v2] += &a[l1][v1] * &seq[l - l1][v2];
                    }
                }
            }
        }
        if l == 1 {
            a[1][0] = BigInt::from(1);
        } else {
            a[l][1..=leaves].clone_from_slice(&long[..leaves]);
        }
        for v in 0..=leaves {
            seq[l][v] = &a[l][v] + &long[v];
        }
    }
    let mut out = vec![BigInt::zero(); n + 1];
    if n == 0 {
        out[0] = BigInt::from(1);
        return out;
    }
    for (v, count) in a[leaves].iter().enumerate() {
        if (1..=n).contains(&v) {
            out[n + 1 - v] = count.clone();
        }
    }
    out
}

/// Poincaré polynomial `Σ_k #(k-cells) t^k` of the `n`-dimensional member of
/// a polytope family.
pub fn poincare_polynomial(family: Family, n: usize) -> Result<TPoly> {
    match family {
        Family::Simplex => {
            let num = &TPoly::from_i64s(&[1, 1]).pow(n + 1) - &TPoly::one();
            num.div_exact(&TPoly::t())
                .map_err(|e| Error::Invariant(format!("simplex polynomial: {e}")))
        }
        Family::Associahedron => {
            // k-cells of K^n are the trees of T_{n+1, k+1}
            let counts = tree_counts_by_grade(n + 1);
            Ok(TPoly::new(counts[1..].to_vec()))
        }
        Family::Cube => Ok(TPoly::from_i64s(&[2, 1]).pow(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_trees, enumerate_trees_by_vertices};

    #[test]
    fn worked_polynomials() {
        assert_eq!(
            poincare_polynomial(Family::Simplex, 2).unwrap(),
            TPoly::from_i64s(&[3, 3, 1])
        );
        assert_eq!(
            poincare_polynomial(Family::Associahedron, 2).unwrap(),
            TPoly::from_i64s(&[5, 5, 1])
        );
        assert_eq!(
            poincare_polynomial(Family::Cube, 1).unwrap(),
            TPoly::from_i64s(&[2, 1])
        );
        assert_eq!(
            poincare_polynomial(Family::Simplex, 0).unwrap(),
            TPoly::one()
        );
        assert_eq!(
            poincare_polynomial(Family::Associahedron, 0).unwrap(),
            TPoly::one()
        );
    }

    #[test]
    fn dynamic_program_matches_enumeration() {
        for n in 0..=8 {
            let counts = tree_counts_by_grade(n);
            for (k, count) in counts.iter().enumerate().skip(1) {
                assert_eq!(
                    *count,
                    BigInt::from(enumerate_trees_by_vertices(n, k).len())
                );
            }
        }
    }

    #[test]
    fn tree_count_is_value_at_one() {
        for n in 1..=8 {
            let p = poincare_polynomial(Family::Associahedron, n - 1).unwrap();
            assert_eq!(
                p.eval(&BigInt::from(1)),
                BigInt::from(enumerate_trees(n).len())
            );
        }
    }

    #[test]
    fn super_catalan_beyond_enumeration() {
        let total = |n| tree_counts_by_grade(n).into_iter().sum::<BigInt>();
        assert_eq!(total(10), BigInt::from(518859));
        assert_eq!(total(12), BigInt::from(13648869));
    }
}
