//! Seeded random triples of basis elements for sweeps beyond the exhaustive range.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x7219_a15e;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` triples whose weights are each at least 1 and sum to a total
/// drawn uniformly from `min_total..=max_total`; elements of weight `w` are
/// drawn uniformly from `levels[w]`.
pub fn random_triples<B: Clone, R: Rng>(
    rng: &mut R,
    count: usize,
    min_total: usize,
    max_total: usize,
    levels: &[Vec<B>],
) -> Vec<(B, B, B)> {
    assert!(min_total >= 3 && min_total <= max_total && max_total < levels.len() + 2);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let total = rng.gen_range(min_total..=max_total);
        let p = rng.gen_range(1..=total - 2);
        let q = rng.gen_range(1..=total - p - 1);
        let r = total - p - q;
        let pick = |w: usize, rng: &mut R| levels.get(w).and_then(|l| l.choose(rng)).cloned();
        if let (Some(x), Some(y), Some(z)) = (pick(p, rng), pick(q, rng), pick(r, rng)) {
            out.push((x, y, z));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_in_range() {
        let levels: Vec<Vec<usize>> = (0..10).map(|w| vec![w; 3]).collect();
        let a = random_triples(&mut rng(1), 200, 4, 9, &levels);
        let b = random_triples(&mut rng(1), 200, 4, 9, &levels);
        assert_eq!(a, b);
        for (x, y, z) in a {
            assert!(x >= 1 && y >= 1 && z >= 1);
            assert!((4..=9).contains(&(x + y + z)));
        }
    }
}
