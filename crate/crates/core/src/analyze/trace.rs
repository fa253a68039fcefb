use crate::cube::{EdgeSet, Vertex};

use super::structure::degrees;

fn neighbours(edges: &EdgeSet) -> Vec<Vec<Vertex>> {
    let dim = edges.dim();
    let mut adj = vec![Vec::new(); dim.vertex_count()];
    for e in edges.iter() {
        let (u, v) = dim.endpoints(e);
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    adj
}

/// `Tr(A⁴)`, the number of closed 4-walks, in exact integer arithmetic:
/// `Σ_u deg(u)² + Σ_{u≠v} c(u,v)²` with `c` the common-neighbour count.
pub fn trace_a4(edges: &EdgeSet) -> u64 {
    let adj = neighbours(edges);
    let mut common = vec![0u64; adj.len()];
    let mut touched = Vec::new();
    let mut total = 0u64;
    for (u, nu) in adj.iter().enumerate() {
        total += (nu.len() as u64).pow(2);
        for &w in nu {
            for &v in &adj[w as usize] {
                if v as usize != u {
                    if common[v as usize] == 0 {
                        touched.push(v);
                    }
                    common[v as usize] += 1;
                }
            }
        }
        for v in touched.drain(..) {
            total += common[v as usize].pow(2);
            common[v as usize] = 0;
        }
    }
    total
}

/// `Σ deg² + Σ_{uv∈E} (deg u + deg v) − 2|E|`, which equals `Tr(A⁴)` exactly
/// when the set is C4-free.
pub fn trace_formula(edges: &EdgeSet) -> u64 {
    let dim = edges.dim();
    let deg = degrees(edges);
    let squares: u64 = deg.iter().map(|&d| (d as u64).pow(2)).sum();
    let endpoint_sum: u64 = edges
        .iter()
        .map(|e| {
            let (u, v) = dim.endpoints(e);
            (deg[u as usize] + deg[v as usize]) as u64
        })
        .sum();
    squares + endpoint_sum - 2 * edges.len() as u64
}
