use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A cell of the hypercube `I^n`: a word over `{-1, 0, +1}`. The number of
/// `0` entries is the dimension of the cell.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CubeWord(Vec<i8>);

impl CubeWord {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|e| !(-1..=1).contains(*e)) {
            return Err(Error::Invariant(format!(
                "cube entry {bad} not in {{-1, 0, 1}}"
            )));
        }
        Ok(Self(entries))
    }

    /// The empty word, the only element of `Q_0`.
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn entries(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.0.iter().filter(|&&e| e == 0).count()
    }

    /// `(a, sep, b)`: the concatenation with `sep` inserted between the two words.
    pub fn join(&self, sep: i8, other: &CubeWord) -> CubeWord {
        debug_assert!((-1..=1).contains(&sep));
        let mut v = Vec::with_capacity(self.len() + 1 + other.len());
        v.extend_from_slice(&self.0);
        v.push(sep);
        v.extend_from_slice(&other.0);
        CubeWord(v)
    }

    /// The word with entry `i` (0-based) removed.
    pub fn remove(&self, i: usize) -> CubeWord {
        let mut v = self.0.clone();
        v.remove(i);
        CubeWord(v)
    }
}

impl fmt::Debug for CubeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for CubeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for e in &self.0 {
            write!(
                f,
                "{}",
                match e {
                    -1 => '-',
                    0 => '0',
                    _ => '+',
                }
            )?;
        }
        write!(f, ")")
    }
}

impl Serialize for CubeWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// All of `Q_n = {-1, 0, +1}^n`, lexicographically ordered.
pub fn enumerate_cube_cells(n: usize) -> Vec<CubeWord> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                [-1i8, 0, 1].into_iter().map(move |e| {
                    let mut w = w.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(CubeWord).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_has_four_four_one_cells() {
        let q2 = enumerate_cube_cells(2);
        assert_eq!(q2.len(), 9);
        let mut by_dim = [0usize; 3];
        for c in &q2 {
            by_dim[c.dimension()] += 1;
        }
        assert_eq!(by_dim, [4, 4, 1]);
    }

    #[test]
    fn q0_is_the_empty_word() {
        assert_eq!(enumerate_cube_cells(0), vec![CubeWord::empty()]);
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(CubeWord::new(vec![0, 2]).is_err());
        assert!(CubeWord::new(vec![-1, 0, 1]).is_ok());
    }

    #[test]
    fn join_and_remove() {
        let a = CubeWord::new(vec![0]).unwrap();
        let b = CubeWord::new(vec![1]).unwrap();
        let j = a.join(0, &b);
        assert_eq!(j.entries(), &[0, 0, 1]);
        assert_eq!(j.remove(1), CubeWord::new(vec![0, 1]).unwrap());
    }
}
