use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::{cartesian, compositions};
use crate::error::{Error, Result};

/// A planar rooted tree in which every internal vertex has at least two
/// children.
///
/// The derived order is the canonical order used for every basis in the
/// crate: first by number of leaves (equivalently degree), then
/// lexicographically on the sequence of children, recursively. The unique
/// leaf `|` is the smallest tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarTree {
    leaves: usize,
    children: Option<Arc<[PlanarTree]>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LeafOrientation {
    Left,
    Middle,
    Right,
}

impl PlanarTree {
    /// The trivial tree `|`, of degree 0.
    pub fn leaf() -> Self {
        Self {
            leaves: 1,
            children: None,
        }
    }

    /// The unique tree of degree 1, `| ∨ |`.
    pub fn y() -> Self {
        Self::graft_unchecked(vec![Self::leaf(), Self::leaf()])
    }

    /// The tree with a single internal vertex and `n + 1` leaves.
    pub fn corolla(n: usize) -> Self {
        assert!(n >= 1, "corolla needs degree at least 1");
        Self::graft_unchecked(vec![Self::leaf(); n + 1])
    }

    /// Joins the roots of `children` (at least two of them) to a new root vertex.
    pub fn graft(children: Vec<PlanarTree>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::TooFewChildren(children.len()));
        }
        Ok(Self::graft_unchecked(children))
    }

    pub(crate) fn graft_unchecked(children: Vec<PlanarTree>) -> Self {
        debug_assert!(children.len() >= 2);
        let leaves = children.iter().map(|c| c.leaves).sum();
        Self {
            leaves,
            children: Some(children.into()),
        }
    }

    /// The children of the root vertex, or `None` for the leaf.
    pub fn decompose(&self) -> Option<&[PlanarTree]> {
        self.children.as_deref()
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }

    pub fn leaves(&self) -> usize {
        self.leaves
    }

    pub fn degree(&self) -> usize {
        self.leaves - 1
    }

    pub fn internal_vertices(&self) -> usize {
        match &self.children {
            None => 0,
            Some(cs) => 1 + cs.iter().map(PlanarTree::internal_vertices).sum::<usize>(),
        }
    }

    /// The grade `k` with `t ∈ T_{n,k}`, i.e. `n - k + 1` internal vertices.
    /// Binary trees have grade 1 and the corolla has grade `n`.
    pub fn grade(&self) -> usize {
        self.degree() + 1 - self.internal_vertices()
    }

    pub fn is_binary(&self) -> bool {
        match &self.children {
            None => true,
            Some(cs) => cs.len() == 2 && cs.iter().all(PlanarTree::is_binary),
        }
    }

    fn check_inner_leaf(&self, i: usize) -> Result<()> {
        let n = self.degree();
        if n < 2 || i == 0 || i >= n {
            return Err(Error::LeafIndex {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        Ok(())
    }

    /// Orientation of leaf `i` (leaves numbered `0..=n` from the left): left if
    /// it is the first child of its parent, right if the last, middle otherwise.
    pub fn leaf_orientation(&self, i: usize) -> Result<LeafOrientation> {
        self.check_inner_leaf(i)?;
        Ok(self.orientation_unchecked(i))
    }

    fn orientation_unchecked(&self, mut i: usize) -> LeafOrientation {
        let children = self.children.as_ref().expect("leaf index inside a leaf");
        let last = children.len() - 1;
        for (pos, child) in children.iter().enumerate() {
            if i < child.leaves {
                if child.is_leaf() {
                    return match pos {
                        0 => LeafOrientation::Left,
                        p if p == last => LeafOrientation::Right,
                        _ => LeafOrientation::Middle,
                    };
                }
                return child.orientation_unchecked(i);
            }
            i -= child.leaves;
        }
        unreachable!("leaf index beyond the tree")
    }

    /// Removes leaf `i`; a vertex left with a single child is contracted.
    pub fn delete_leaf(&self, i: usize) -> Result<Self> {
        self.check_inner_leaf(i)?;
        Ok(self.delete_unchecked(i))
    }

    fn delete_unchecked(&self, mut i: usize) -> Self {
        let children = self.children.as_ref().expect("leaf index inside a leaf");
        let mut out: Vec<PlanarTree> = Vec::with_capacity(children.len());
        for child in children.iter() {
            if i < child.leaves {
                if !child.is_leaf() {
                    out.push(child.delete_unchecked(i));
                }
                i = usize::MAX;
            } else {
                if i != usize::MAX {
                    i -= child.leaves;
                }
                out.push(child.clone());
            }
        }
        if out.len() == 1 {
            out.pop().unwrap()
        } else {
            Self::graft_unchecked(out)
        }
    }

    /// Nested-array encoding: the leaf is `0`, a vertex is the array of its children.
    pub fn to_nested(&self) -> NestedTree {
        match &self.children {
            None => NestedTree::Leaf,
            Some(cs) => NestedTree::Node(cs.iter().map(PlanarTree::to_nested).collect()),
        }
    }

    pub fn from_nested(nested: &NestedTree) -> Result<Self> {
        match nested {
            NestedTree::Leaf => Ok(Self::leaf()),
            NestedTree::Node(cs) => {
                let children = cs
                    .iter()
                    .map(Self::from_nested)
                    .collect::<Result<Vec<_>>>()?;
                Self::graft(children)
            }
        }
    }
}

/// Serialization shape of a tree: `0` for the leaf, an array of children otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NestedTree {
    Leaf,
    Node(Vec<NestedTree>),
}

impl Serialize for NestedTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            NestedTree::Leaf => s.serialize_u8(0),
            NestedTree::Node(cs) => cs.serialize(s),
        }
    }
}

impl Serialize for PlanarTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_nested().serialize(s)
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.children {
            None => write!(f, "|"),
            Some(cs) => {
                write!(f, "(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "v")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn trees_with_leaves(
    leaves: usize,
    memo: &mut BTreeMap<usize, Vec<PlanarTree>>,
) -> Vec<PlanarTree> {
    if let Some(ts) = memo.get(&leaves) {
        return ts.clone();
    }
    let mut out = Vec::new();
    if leaves == 1 {
        out.push(PlanarTree::leaf());
    } else {
        for parts in 2..=leaves {
            for comp in compositions(leaves, parts) {
                let factors: Vec<Vec<PlanarTree>> =
                    comp.iter().map(|&l| trees_with_leaves(l, memo)).collect();
                out.extend(
                    cartesian(&factors)
                        .into_iter()
                        .map(PlanarTree::graft_unchecked),
                );
            }
        }
    }
    out.sort();
    memo.insert(leaves, out.clone());
    out
}

/// All of `T_n`, in canonical order.
pub fn enumerate_trees(n: usize) -> Vec<PlanarTree> {
    trees_with_leaves(n + 1, &mut BTreeMap::new())
}

/// `T_{n,k}`: trees of degree `n` with `n - k + 1` internal vertices.
pub fn enumerate_trees_by_vertices(n: usize, k: usize) -> Vec<PlanarTree> {
    enumerate_trees(n)
        .into_iter()
        .filter(|t| t.grade() == k)
        .collect()
}
