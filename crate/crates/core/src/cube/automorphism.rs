use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Dim, EdgeId, EdgeSet, Vertex};
use crate::error::{Error, Result};

/// An element of `Aut(Q_n)`: `v ↦ permute_bits(v, perm) ^ mask`.
///
/// Bit `i` of the input lands on bit `perm[i]` of the output.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Automorphism {
    perm: Vec<u8>,
    mask: Vertex,
}

impl Automorphism {
    pub fn new(dim: Dim, perm: Vec<u8>, mask: Vertex) -> Result<Self> {
        let n = dim.n() as usize;
        if perm.len() != n {
            return Err(Error::InvalidArgument(format!(
                "permutation has {} entries, expected {n}",
                perm.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            let p = p as usize;
            if p >= n || seen[p] {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation of 0..{n}"
                )));
            }
            seen[p] = true;
        }
        dim.check_vertex(mask as u64)?;
        Ok(Automorphism { perm, mask })
    }

    pub fn identity(dim: Dim) -> Self {
        Automorphism {
            perm: (0..dim.n() as u8).collect(),
            mask: 0,
        }
    }

    /// Uniform permutation (Fisher-Yates) and uniform flip mask.
    pub fn random<R: Rng + ?Sized>(dim: Dim, rng: &mut R) -> Self {
        let mut perm: Vec<u8> = (0..dim.n() as u8).collect();
        perm.shuffle(rng);
        let mask = rng.gen_range(0..dim.vertex_count() as u64) as Vertex;
        Automorphism { perm, mask }
    }

    pub fn perm(&self) -> &[u8] {
        &self.perm
    }

    pub fn mask(&self) -> Vertex {
        self.mask
    }

    #[inline]
    pub fn apply_vertex(&self, v: Vertex) -> Vertex {
        let mut out = 0;
        let mut bits = v;
        while bits != 0 {
            let i = bits.trailing_zeros();
            bits &= bits - 1;
            out |= 1 << self.perm[i as usize];
        }
        out ^ self.mask
    }

    pub fn apply_edge(&self, dim: Dim, e: EdgeId) -> EdgeId {
        let (u, v) = dim.endpoints(e);
        dim.edge_id(self.apply_vertex(u), self.apply_vertex(v))
            .expect("automorphisms map edges to edges")
    }
}

pub fn random_automorphism<R: Rng + ?Sized>(dim: Dim, rng: &mut R) -> Automorphism {
    Automorphism::random(dim, rng)
}

/// Image of `edges` under `a`.
pub fn apply_automorphism(a: &Automorphism, edges: &EdgeSet) -> EdgeSet {
    let dim = edges.dim();
    debug_assert_eq!(a.perm.len(), dim.n() as usize);
    let mut out = EdgeSet::empty(dim);
    for e in edges.iter() {
        out.insert(a.apply_edge(dim, e));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_pcg::Pcg64Mcg;

    #[test]
    fn identity_is_trivial() {
        let d = Dim::new(6).unwrap();
        let mut rng = Pcg64Mcg::seed_from_u64(1);
        let mut s = EdgeSet::empty(d);
        for e in d.edges() {
            if rng.gen_bool(0.5) {
                s.insert(e);
            }
        }
        assert_eq!(apply_automorphism(&Automorphism::identity(d), &s), s);
    }

    #[test]
    fn rejects_bad_permutations() {
        let d = Dim::new(3).unwrap();
        assert!(Automorphism::new(d, vec![0, 0, 1], 0).is_err());
        assert!(Automorphism::new(d, vec![0, 1], 0).is_err());
        assert!(Automorphism::new(d, vec![0, 1, 3], 0).is_err());
        assert!(Automorphism::new(d, vec![2, 0, 1], 8).is_err());
        assert!(Automorphism::new(d, vec![2, 0, 1], 7).is_ok());
    }

    #[test]
    fn vertex_map_is_bijection() {
        let d = Dim::new(7).unwrap();
        let mut rng = Pcg64Mcg::seed_from_u64(9);
        for _ in 0..20 {
            let a = Automorphism::random(d, &mut rng);
            let mut seen = vec![false; d.vertex_count()];
            for v in 0..d.vertex_count() as Vertex {
                let w = a.apply_vertex(v) as usize;
                assert!(!seen[w]);
                seen[w] = true;
            }
        }
    }

    #[test]
    fn cardinality_preserved() {
        let d = Dim::new(6).unwrap();
        let mut rng = Pcg64Mcg::seed_from_u64(3);
        for _ in 0..100 {
            let a = Automorphism::random(d, &mut rng);
            let p = rng.gen_range(0.0..1.0);
            let s = EdgeSet::from_edges(d, d.edges().filter(|_| rng.gen_bool(p))).unwrap();
            assert_eq!(apply_automorphism(&a, &s).len(), s.len());
        }
    }

    #[test]
    fn maps_cycles_to_cycles() {
        let mut rng = Pcg64Mcg::seed_from_u64(11);
        for n in 2..=7u32 {
            let d = Dim::new(n).unwrap();
            let cycles: std::collections::HashSet<[EdgeId; 4]> = d
                .cycles()
                .map(|c| {
                    let mut e = c.edges;
                    e.sort();
                    e
                })
                .collect();
            // exhaustive over the whole group for n <= 5, sampled beyond
            let samples: Vec<Automorphism> = if n <= 5 {
                all_automorphisms(d)
            } else {
                (0..50).map(|_| Automorphism::random(d, &mut rng)).collect()
            };
            for a in &samples {
                for c in &cycles {
                    let mut img = c.map(|e| a.apply_edge(d, e));
                    img.sort();
                    assert!(cycles.contains(&img));
                }
            }
        }
    }

    fn all_automorphisms(d: Dim) -> Vec<Automorphism> {
        fn perms(k: usize) -> Vec<Vec<u8>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, (k - 1) as u8);
                    out.push(q);
                }
            }
            out
        }
        let mut out = Vec::new();
        for p in perms(d.n() as usize) {
            for mask in 0..d.vertex_count() as Vertex {
                out.push(Automorphism::new(d, p.clone(), mask).unwrap());
            }
        }
        out
    }
}
