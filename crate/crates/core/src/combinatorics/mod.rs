//! The three graded families of basis objects and their polytope gradings.
//!
//! * [`PlanarTree`]: planar rooted trees whose internal vertices all have at
//!   least two children. `T_n` is the set of trees with `n + 1` leaves; they
//!   label the cells of the associahedron of dimension `n - 1`.
//! * [`MarkedWord`]: a word of length `n` with a nonempty set of marked
//!   positions. `P_n` labels the cells of the simplex of dimension `n - 1`.
//! * [`CubeWord`]: a word over `{-1, 0, +1}`. `Q_n` labels the cells of the
//!   `n`-cube.

mod cube;
mod polytope;
mod subset;
mod tpoly;
mod tree;

pub use cube::{enumerate_cube_cells, CubeWord};
pub use polytope::{poincare_polynomial, tree_counts_by_grade, Family};
pub use subset::{enumerate_subsets, enumerate_subsets_by_size, MarkedWord};
pub use tpoly::TPoly;
pub use tree::{
    enumerate_trees, enumerate_trees_by_vertices, LeafOrientation, NestedTree, PlanarTree,
};

/// Compositions of `total` into `parts` positive integers, in lexicographic order.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if remaining < parts {
            return;
        }
        for first in 1..=remaining - (parts - 1) {
            prefix.push(first);
            go(remaining - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Cartesian product of a list of option lists, first factor varying slowest.
pub fn cartesian<T: Clone>(factors: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::with_capacity(factors.len())];
    for factor in factors {
        let mut next = Vec::with_capacity(out.len() * factor.len());
        for prefix in &out {
            for item in factor {
                let mut row = prefix.clone();
                row.push(item.clone());
                next.push(row);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts_are_binomial() {
        assert_eq!(compositions(7, 3).len(), 15);
        assert_eq!(compositions(3, 3), vec![vec![1, 1, 1]]);
        assert!(compositions(2, 3).is_empty());
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn cartesian_orders_first_factor_slowest() {
        let p = cartesian(&[vec![0, 1], vec![5, 6]]);
        assert_eq!(p, vec![vec![0, 5], vec![0, 6], vec![1, 5], vec![1, 6]]);
        assert_eq!(cartesian::<u8>(&[]), vec![Vec::<u8>::new()]);
    }
}
