use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::spectrum::{spectrum, DEFAULT_TOLERANCE};
use super::structure::{dimension_profile, profile_entropy};
use crate::cube::EdgeSet;
use crate::error::{Error, Result};

/// One class of solutions sharing a sorted dimension profile.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileType {
    pub profile: Vec<usize>,
    pub frequency: usize,
    pub entropy: f64,
    pub mean_lambda1: f64,
}

pub(crate) fn check_uniform(corpus: &[EdgeSet]) -> Result<()> {
    let first = corpus.first().ok_or(Error::EmptyCorpus)?;
    for s in corpus {
        if s.dim() != first.dim() {
            return Err(Error::DimensionMismatch {
                left: first.dim().n(),
                right: s.dim().n(),
            });
        }
        if s.len() != first.len() {
            return Err(Error::MixedEdgeCounts(first.len(), s.len()));
        }
    }
    Ok(())
}

/// Groups solutions by sorted dimension profile.
///
/// Types come out by decreasing frequency, ties broken by the
/// lexicographically larger profile.
pub fn classify_corpus(corpus: &[EdgeSet]) -> Result<Vec<ProfileType>> {
    check_uniform(corpus)?;
    let analysed: Vec<(Vec<usize>, f64)> = corpus
        .par_iter()
        .map(|s| {
            let lambda1 = if s.is_empty() {
                0.0
            } else {
                spectrum(s, DEFAULT_TOLERANCE)?.lambda1
            };
            Ok((dimension_profile(s).sorted, lambda1))
        })
        .collect::<Result<_>>()?;

    let mut groups: BTreeMap<Vec<usize>, (usize, f64)> = BTreeMap::new();
    for (profile, lambda1) in analysed {
        let g = groups.entry(profile).or_default();
        g.0 += 1;
        g.1 += lambda1;
    }
    let mut types = groups
        .into_iter()
        .map(|(profile, (frequency, sum))| {
            let entropy = if frequency > 0 && profile.iter().any(|&e| e > 0) {
                profile_entropy(&profile)?
            } else {
                0.0
            };
            Ok(ProfileType {
                entropy,
                mean_lambda1: sum / frequency as f64,
                frequency,
                profile,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    types.sort_by(|a, b| {
        b.frequency
            .cmp(&a.frequency)
            .then_with(|| b.profile.cmp(&a.profile))
    });
    Ok(types)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{apply_automorphism, Automorphism, Dim, EdgeId};
    use rand::{seq::SliceRandom, SeedableRng};
    use rand_pcg::Pcg64Mcg;

    fn by_direction(d: Dim, counts: &[usize]) -> EdgeSet {
        let mut s = EdgeSet::empty(d);
        for (i, &c) in counts.iter().enumerate() {
            for e in d
                .edges()
                .filter(|&e| d.edge_direction(e) == i as u32)
                .take(c)
            {
                s.insert(e);
            }
        }
        s
    }

    #[test]
    fn single_solution() {
        let d = Dim::new(4).unwrap();
        let t = classify_corpus(&[by_direction(d, &[3, 2, 1, 0])]).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].frequency, 1);
        assert_eq!(t[0].profile, vec![3, 2, 1, 0]);
    }

    #[test]
    fn ordering_and_totals() {
        let d = Dim::new(4).unwrap();
        let corpus = vec![
            by_direction(d, &[2, 2, 0, 0]),
            by_direction(d, &[0, 2, 2, 0]),
            by_direction(d, &[3, 1, 0, 0]),
            by_direction(d, &[1, 3, 0, 0]),
            by_direction(d, &[4, 0, 0, 0]),
        ];
        let t = classify_corpus(&corpus).unwrap();
        let profiles: Vec<_> = t.iter().map(|p| (p.profile.clone(), p.frequency)).collect();
        assert_eq!(
            profiles,
            vec![
                (vec![3, 1, 0, 0], 2),
                (vec![2, 2, 0, 0], 2),
                (vec![4, 0, 0, 0], 1)
            ]
        );
        assert_eq!(t.iter().map(|p| p.frequency).sum::<usize>(), corpus.len());
    }

    #[test]
    fn invariant_under_permutation_of_corpus() {
        let d = Dim::new(5).unwrap();
        let mut rng = Pcg64Mcg::seed_from_u64(12);
        let seed = by_direction(d, &[10, 8, 6, 4, 2]);
        let mut corpus: Vec<EdgeSet> = (0..40)
            .map(|_| apply_automorphism(&Automorphism::random(d, &mut rng), &seed))
            .collect();
        corpus.push(by_direction(d, &[6, 6, 6, 6, 6]));
        let a = classify_corpus(&corpus).unwrap();
        corpus.shuffle(&mut rng);
        let b = classify_corpus(&corpus).unwrap();
        assert_eq!(a.len(), 2);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!((&x.profile, x.frequency), (&y.profile, y.frequency));
            assert!((x.mean_lambda1 - y.mean_lambda1).abs() < 1e-9);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(classify_corpus(&[]), Err(Error::EmptyCorpus));
        let a = EdgeSet::empty(Dim::new(4).unwrap());
        let b = EdgeSet::empty(Dim::new(5).unwrap());
        assert!(matches!(
            classify_corpus(&[a.clone(), b]),
            Err(Error::DimensionMismatch { .. })
        ));
        let c = EdgeSet::from_edges(a.dim(), [EdgeId::new(0)]).unwrap();
        assert_eq!(classify_corpus(&[a, c]), Err(Error::MixedEdgeCounts(0, 1)));
    }
}
