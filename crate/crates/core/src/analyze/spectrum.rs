use serde::{Deserialize, Serialize};

use crate::cube::{EdgeSet, Vertex};
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_MAX_ITERATIONS: usize = 50_000;

/// Extreme adjacency eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSummary {
    pub lambda1: f64,
    pub lambda_n: f64,
    /// Iterations spent on `λ1` and `λn` together.
    pub iterations: usize,
    /// Larger of the two final residuals.
    pub residual: f64,
}

struct Adjacency {
    // CSR
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl Adjacency {
    fn new(edges: &EdgeSet) -> Self {
        let dim = edges.dim();
        let mut lists: Vec<Vec<Vertex>> = vec![Vec::new(); dim.vertex_count()];
        for e in edges.iter() {
            let (u, v) = dim.endpoints(e);
            lists[u as usize].push(v);
            lists[v as usize].push(u);
        }
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(2 * edges.len());
        for l in lists {
            targets.extend(l);
            offsets.push(targets.len());
        }
        Adjacency { offsets, targets }
    }

    /// `y = (shift·I + sign·A) x`
    fn apply(&self, shift: f64, sign: f64, x: &[f64], y: &mut [f64]) {
        for (u, out) in y.iter_mut().enumerate() {
            let s: f64 = self.targets[self.offsets[u]..self.offsets[u + 1]]
                .iter()
                .map(|&v| x[v as usize])
                .sum();
            *out = shift * x[u] + sign * s;
        }
    }
}

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Dominant eigenvalue of `shift·I + sign·A` from the start vector `x`.
fn power_iteration(
    adj: &Adjacency,
    shift: f64,
    sign: f64,
    mut x: Vec<f64>,
    tol: f64,
    max_iterations: usize,
) -> Result<(f64, usize, f64)> {
    let scale = norm(&x);
    x.iter_mut().for_each(|v| *v /= scale);
    let mut y = vec![0.0; x.len()];
    let mut residual = f64::INFINITY;
    for it in 1..=max_iterations {
        adj.apply(shift, sign, &x, &mut y);
        let mu: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - mu * a).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual <= tol {
            return Ok((mu, it, residual));
        }
        let ny = norm(&y);
        for (a, b) in x.iter_mut().zip(&y) {
            *a = b / ny;
        }
    }
    Err(Error::NoConvergence {
        iterations: max_iterations,
        residual,
    })
}

/// `λ1` and `λn` of the adjacency matrix by shifted power iteration.
///
/// `λ1` is the dominant eigenvalue of `A + nI` minus `n`, started from the
/// all-ones vector. `λn` is `n` minus the dominant eigenvalue of `nI − A`,
/// started from `(−1)^popcount(v)·w_v` with fixed positive weights `w_v`.
/// Every subgraph of Q_n is bipartite, so that vector overlaps the bottom
/// eigenvector of each component; the uneven weights keep the second run
/// from being an exact mirror of the first, so `λ1 + λn = 0` is measured
/// rather than built in.
pub fn spectrum_with(edges: &EdgeSet, tol: f64, max_iterations: usize) -> Result<SpectrumSummary> {
    if edges.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let dim = edges.dim();
    let shift = dim.n() as f64;
    let adj = Adjacency::new(edges);
    let ones = vec![1.0; dim.vertex_count()];
    let signed: Vec<f64> = (0..dim.vertex_count() as u32)
        .map(|v| {
            let w = 1.0 + 0.5 * (v as f64 * 0.618_033_988_749_895).fract();
            if v.count_ones() % 2 == 0 {
                w
            } else {
                -w
            }
        })
        .collect();
    let (top, it1, r1) = power_iteration(&adj, shift, 1.0, ones, tol, max_iterations)?;
    let (bottom, it2, r2) = power_iteration(&adj, shift, -1.0, signed, tol, max_iterations)?;
    Ok(SpectrumSummary {
        lambda1: top - shift,
        lambda_n: shift - bottom,
        iterations: it1 + it2,
        residual: r1.max(r2),
    })
}

pub fn spectrum(edges: &EdgeSet, tol: f64) -> Result<SpectrumSummary> {
    spectrum_with(edges, tol, DEFAULT_MAX_ITERATIONS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::{Dim, EdgeId};
    use rand::{Rng, SeedableRng};
    use rand_pcg::Pcg64Mcg;

    #[test]
    fn full_cubes_are_regular() {
        for n in 2..=7 {
            let s = spectrum(&EdgeSet::full(Dim::new(n).unwrap()), DEFAULT_TOLERANCE).unwrap();
            assert!((s.lambda1 - n as f64).abs() < 1e-6, "{s:?}");
            assert!((s.lambda_n + n as f64).abs() < 1e-6, "{s:?}");
        }
    }

    #[test]
    fn four_cycle_and_path() {
        let q2 = spectrum(&EdgeSet::full(Dim::new(2).unwrap()), DEFAULT_TOLERANCE).unwrap();
        assert!((q2.lambda1 - 2.0).abs() < 1e-9);
        // path on 4 vertices: 2cos(π/5)
        let d = Dim::new(2).unwrap();
        let p4 = EdgeSet::from_edges(d, (0..3).map(EdgeId::new)).unwrap();
        let s = spectrum(&p4, DEFAULT_TOLERANCE).unwrap();
        let expected = 2.0 * (std::f64::consts::PI / 5.0).cos();
        assert!((s.lambda1 - expected).abs() < 1e-9, "{s:?}");
        assert!((s.lambda_n + expected).abs() < 1e-9);
    }

    #[test]
    fn single_edge_and_empty() {
        let d = Dim::new(5).unwrap();
        let one = EdgeSet::from_edges(d, [EdgeId::new(13)]).unwrap();
        let s = spectrum(&one, DEFAULT_TOLERANCE).unwrap();
        assert!((s.lambda1 - 1.0).abs() < 1e-9);
        assert_eq!(
            spectrum(&EdgeSet::empty(d), DEFAULT_TOLERANCE),
            Err(Error::EmptyEdgeSet)
        );
    }

    #[test]
    fn bipartite_symmetry_on_random_subsets() {
        let d = Dim::new(6).unwrap();
        let mut rng = Pcg64Mcg::seed_from_u64(23);
        for _ in 0..30 {
            let p = rng.gen_range(0.05..1.0);
            let s = EdgeSet::from_edges(d, d.edges().filter(|_| rng.gen_bool(p))).unwrap();
            if s.is_empty() {
                continue;
            }
            let sp = spectrum(&s, DEFAULT_TOLERANCE).unwrap();
            assert!((sp.lambda1 + sp.lambda_n).abs() < 1e-6, "{sp:?}");
            assert!(sp.lambda1 >= 0.0);
        }
    }

    #[test]
    fn iteration_cap() {
        let d = Dim::new(6).unwrap();
        let half = EdgeSet::from_edges(d, d.edges().filter(|e| e.index() % 3 != 0)).unwrap();
        let r = spectrum_with(&half, 1e-30, 5);
        assert!(matches!(r, Err(Error::NoConvergence { iterations: 5, .. })));
    }
}
