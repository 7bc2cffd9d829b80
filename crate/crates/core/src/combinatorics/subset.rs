use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A word `x x̌ x … x̌` of length `n` with a nonempty set of marked
/// positions in `{0, …, n-1}`; an element of `P_n`.
///
/// Ordered by length, then by the sorted list of marks.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkedWord {
    len: u8,
    mask: u64,
}

pub const MAX_WORD_LEN: usize = 64;

impl MarkedWord {
    pub fn new<I: IntoIterator<Item = usize>>(len: usize, marks: I) -> Result<Self> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::MarkOutOfRange { mark: 0, len });
        }
        let mut mask = 0u64;
        for m in marks {
            if m >= len {
                return Err(Error::MarkOutOfRange { mark: m, len });
            }
            mask |= 1 << m;
        }
        if mask == 0 {
            return Err(Error::EmptyMarks);
        }
        Ok(Self {
            len: len as u8,
            mask,
        })
    }

    pub(crate) fn from_mask(len: usize, mask: u64) -> Self {
        debug_assert!((1..=MAX_WORD_LEN).contains(&len) && mask != 0);
        debug_assert!(len == 64 || mask >> len == 0);
        Self {
            len: len as u8,
            mask,
        }
    }

    /// The generator `x̌`, the only element of `P_1`.
    pub fn generator() -> Self {
        Self { len: 1, mask: 1 }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn num_marks(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_marked(&self, i: usize) -> bool {
        i < self.len() && self.mask >> i & 1 == 1
    }

    pub fn marks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_marked(i)).collect()
    }
}

impl Ord for MarkedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            // lexicographic on sorted mark lists: the first difference decides,
            // with the word holding the smaller mark there coming first
            let diff = self.mask ^ other.mask;
            if diff == 0 {
                return Ordering::Equal;
            }
            let pos = diff.trailing_zeros();
            let higher = if pos == 63 { 0 } else { u64::MAX << (pos + 1) };
            // a list that stops at the branching point is a prefix of the other
            if self.mask >> pos & 1 == 1 {
                if other.mask & higher == 0 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            } else if self.mask & higher == 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for MarkedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MarkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", if self.is_marked(i) { "X" } else { "x" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for MarkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?})", self.len, self.marks())
    }
}

/// Serialized as the pair `[length, [sorted marks]]`.
impl Serialize for MarkedWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.len())?;
        t.serialize_element(&self.marks())?;
        t.end()
    }
}

/// All of `P_n` in canonical order.
pub fn enumerate_subsets(n: usize) -> Vec<MarkedWord> {
    assert!((1..MAX_WORD_LEN).contains(&n), "subset length out of range");
    let mut out: Vec<MarkedWord> = (1..1u64 << n)
        .map(|m| MarkedWord::from_mask(n, m))
        .collect();
    out.sort();
    out
}

/// `P_{n,k}`: the words of length `n` with exactly `k` marks.
pub fn enumerate_subsets_by_size(n: usize, k: usize) -> Vec<MarkedWord> {
    enumerate_subsets(n)
        .into_iter()
        .filter(|w| w.num_marks() == k)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_is_graded_three_three_one() {
        let p3 = enumerate_subsets(3);
        assert_eq!(p3.len(), 7);
        let grades: Vec<usize> = (1..=3)
            .map(|k| enumerate_subsets_by_size(3, k).len())
            .collect();
        assert_eq!(grades, vec![3, 3, 1]);
    }

    #[test]
    fn p1_is_the_generator() {
        assert_eq!(enumerate_subsets(1), vec![MarkedWord::generator()]);
        assert_eq!(MarkedWord::generator().marks(), vec![0]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(MarkedWord::new(3, []), Err(Error::EmptyMarks));
        assert_eq!(
            MarkedWord::new(3, [3]),
            Err(Error::MarkOutOfRange { mark: 3, len: 3 })
        );
        assert!(MarkedWord::new(0, [0]).is_err());
    }

    #[test]
    fn order_is_lexicographic_on_mark_lists() {
        let mut naive: Vec<(usize, Vec<usize>)> = Vec::new();
        for n in 1..=6 {
            for w in enumerate_subsets(n) {
                naive.push((w.len(), w.marks()));
            }
        }
        let mut sorted = naive.clone();
        sorted.sort();
        assert_eq!(naive, sorted);
        let words: Vec<MarkedWord> = (1..=6).flat_map(enumerate_subsets).collect();
        for a in &words {
            for b in &words {
                assert_eq!(a.cmp(b), (a.len(), a.marks()).cmp(&(b.len(), b.marks())));
            }
        }
    }

    #[test]
    fn display_uses_checks() {
        let w = MarkedWord::new(5, [0, 2]).unwrap();
        assert_eq!(w.to_string(), "XxXxx");
    }
}
