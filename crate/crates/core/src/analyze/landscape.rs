use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64Mcg;
use serde::{Deserialize, Serialize};

use crate::cube::EdgeSet;
use crate::error::{Error, Result};

/// `|E1 △ E2|`.
pub fn hamming(a: &EdgeSet, b: &EdgeSet) -> Result<usize> {
    a.symmetric_difference_len(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceStats {
    pub pairs: usize,
    pub min: usize,
    pub max: usize,
    pub mean: f64,
    pub median: f64,
}

/// Hamming statistics over `sample_pairs` unordered pairs of distinct corpus
/// members, drawn uniformly with replacement.
pub fn distance_stats(corpus: &[EdgeSet], sample_pairs: usize, seed: u64) -> Result<DistanceStats> {
    let k = corpus.len();
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "distance statistics need at least two solutions, got {k}"
        )));
    }
    if sample_pairs == 0 {
        return Err(Error::InvalidArgument(
            "sample_pairs must be positive".into(),
        ));
    }
    let mut rng = Pcg64Mcg::seed_from_u64(seed);
    let mut dists = Vec::with_capacity(sample_pairs);
    for _ in 0..sample_pairs {
        let i = rng.gen_range(0..k);
        let mut j = rng.gen_range(0..k - 1);
        if j >= i {
            j += 1;
        }
        dists.push(hamming(&corpus[i], &corpus[j])?);
    }
    dists.sort_unstable();
    let mid = dists.len() / 2;
    let median = if dists.len() % 2 == 1 {
        dists[mid] as f64
    } else {
        (dists[mid - 1] + dists[mid]) as f64 / 2.0
    };
    Ok(DistanceStats {
        pairs: dists.len(),
        min: dists[0],
        max: dists[dists.len() - 1],
        mean: dists.iter().sum::<usize>() as f64 / dists.len() as f64,
        median,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::Dim;

    fn random_set(d: Dim, rng: &mut Pcg64Mcg) -> EdgeSet {
        let p = rng.gen_range(0.0..1.0);
        EdgeSet::from_edges(d, d.edges().filter(|_| rng.gen_bool(p))).unwrap()
    }

    #[test]
    fn metric_axioms() {
        let d = Dim::new(5).unwrap();
        let mut rng = Pcg64Mcg::seed_from_u64(31);
        for _ in 0..1000 {
            let (a, b, c) = (
                random_set(d, &mut rng),
                random_set(d, &mut rng),
                random_set(d, &mut rng),
            );
            assert_eq!(hamming(&a, &a).unwrap(), 0);
            let ab = hamming(&a, &b).unwrap();
            assert_eq!(ab, hamming(&b, &a).unwrap());
            assert!(hamming(&a, &c).unwrap() <= ab + hamming(&b, &c).unwrap());
        }
        let other = EdgeSet::empty(Dim::new(4).unwrap());
        assert!(hamming(&EdgeSet::empty(d), &other).is_err());
    }

    #[test]
    fn stats_on_known_corpus() {
        let d = Dim::new(3).unwrap();
        let e = |ids: &[u32]| {
            EdgeSet::from_edges(d, ids.iter().map(|&i| crate::EdgeId::new(i))).unwrap()
        };
        let corpus = vec![e(&[]), e(&[0]), e(&[0, 1, 2])];
        let s = distance_stats(&corpus, 2000, 1).unwrap();
        assert_eq!(s.pairs, 2000);
        assert_eq!((s.min, s.max), (1, 3));
        // three pairs with distances 1, 2, 3 equally likely
        assert!((s.mean - 2.0).abs() < 0.1);
        assert_eq!(s.median, 2.0);
        assert!(distance_stats(&corpus[..1], 10, 1).is_err());
        assert!(distance_stats(&corpus, 0, 1).is_err());
    }
}
