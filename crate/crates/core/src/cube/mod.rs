//! The hypercube `Q_n`: vertex, edge and four-cycle encodings.
//!
//! Vertices are bitmasks in `[0, 2^n)`; coordinate `i` is bit `i`. An edge in
//! direction `i` joins `b` and `b ^ (1 << i)` where `b` has bit `i` clear, and
//! its id is `i * 2^(n-1) + compress(b, i)`.
//!
//! Every four-cycle spans exactly two directions `i < j` and a base vertex
//! with both bits clear, so there are `C(n,2) * 2^(n-2)` of them. Cycle ids
//! follow the canonical enumeration order: lexicographic in `(i, j, b)`.

mod automorphism;
mod edge_set;

pub use automorphism::{apply_automorphism, random_automorphism, Automorphism};
pub use edge_set::EdgeSet;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex of `Q_n`, as a bitmask.
pub type Vertex = u32;

/// Canonical index of an edge of `Q_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(u32);

impl EdgeId {
    #[inline]
    pub const fn new(raw: u32) -> Self {
        EdgeId(raw)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Removes bit `i` from `b`, shifting the higher bits down by one.
#[inline]
pub(crate) const fn compress(b: u32, i: u32) -> u32 {
    let low = b & ((1 << i) - 1);
    let high = (b >> (i + 1)) << i;
    low | high
}

/// Inverse of [`compress`]: inserts a zero at bit `i`.
#[inline]
pub(crate) const fn expand(c: u32, i: u32) -> u32 {
    let low = c & ((1 << i) - 1);
    let high = (c >> i) << (i + 1);
    low | high
}

/// Dimension of a hypercube, `2 <= n <= 16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Dim(u32);

impl TryFrom<u32> for Dim {
    type Error = Error;

    fn try_from(n: u32) -> Result<Self> {
        Dim::new(n)
    }
}

impl From<Dim> for u32 {
    fn from(d: Dim) -> u32 {
        d.0
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q_{}", self.0)
    }
}

impl Dim {
    pub const MIN: u32 = 2;
    pub const MAX: u32 = 16;

    pub fn new(n: u32) -> Result<Self> {
        if (Self::MIN..=Self::MAX).contains(&n) {
            Ok(Dim(n))
        } else {
            Err(Error::InvalidDimension(n))
        }
    }

    #[inline]
    pub const fn n(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn vertex_count(self) -> usize {
        1 << self.0
    }

    #[inline]
    pub const fn edge_count(self) -> usize {
        (self.0 as usize) << (self.0 - 1)
    }

    #[inline]
    pub const fn pair_count(self) -> usize {
        let n = self.0 as usize;
        n * (n - 1) / 2
    }

    #[inline]
    pub const fn c4_count(self) -> usize {
        self.pair_count() << (self.0 - 2)
    }

    /// Number of four-cycles through any single edge.
    #[inline]
    pub const fn cycles_per_edge(self) -> usize {
        self.0 as usize - 1
    }

    pub fn check_vertex(self, v: u64) -> Result<Vertex> {
        if v < self.vertex_count() as u64 {
            Ok(v as Vertex)
        } else {
            Err(Error::VertexOutOfRange { v, n: self.0 })
        }
    }

    pub fn check_edge(self, id: u64) -> Result<EdgeId> {
        if id < self.edge_count() as u64 {
            Ok(EdgeId(id as u32))
        } else {
            Err(Error::EdgeOutOfRange { id, n: self.0 })
        }
    }

    /// Id of the edge in direction `i` whose lower endpoint is `base`.
    ///
    /// `base` must have bit `i` clear.
    #[inline]
    pub fn edge_from_base(self, i: u32, base: Vertex) -> EdgeId {
        debug_assert!(base & (1 << i) == 0);
        EdgeId((i << (self.0 - 1)) | compress(base, i))
    }

    pub fn edge_id(self, u: Vertex, v: Vertex) -> Result<EdgeId> {
        self.check_vertex(u as u64)?;
        self.check_vertex(v as u64)?;
        let diff = u ^ v;
        if !diff.is_power_of_two() {
            return Err(Error::NotAnEdge { u, v, n: self.0 });
        }
        let i = diff.trailing_zeros();
        Ok(self.edge_from_base(i, u.min(v)))
    }

    #[inline]
    pub fn edge_direction(self, e: EdgeId) -> u32 {
        e.0 >> (self.0 - 1)
    }

    /// Endpoints of `e`, the one with bit `direction` clear first.
    #[inline]
    pub fn endpoints(self, e: EdgeId) -> (Vertex, Vertex) {
        let i = self.edge_direction(e);
        let base = expand(e.0 & ((1 << (self.0 - 1)) - 1), i);
        (base, base | (1 << i))
    }

    pub fn edge_endpoints(self, id: u64) -> Result<(Vertex, Vertex)> {
        let e = self.check_edge(id)?;
        Ok(self.endpoints(e))
    }

    /// Rank of the direction pair `i < j` in lexicographic order.
    #[inline]
    pub fn pair_rank(self, i: u32, j: u32) -> usize {
        debug_assert!(i < j && j < self.0);
        let (n, i, j) = (self.0 as usize, i as usize, j as usize);
        i * (2 * n - i - 1) / 2 + (j - i - 1)
    }

    fn pair_unrank(self, mut rank: usize) -> (u32, u32) {
        let n = self.0;
        for i in 0..n - 1 {
            let row = (n - 1 - i) as usize;
            if rank < row {
                return (i, i + 1 + rank as u32);
            }
            rank -= row;
        }
        unreachable!("pair rank out of range")
    }

    /// Id of the cycle on directions `i < j` at `base` (bits `i`, `j` clear).
    #[inline]
    pub fn c4_id(self, i: u32, j: u32, base: Vertex) -> usize {
        let packed = compress(compress(base, j), i) as usize;
        (self.pair_rank(i, j) << (self.0 - 2)) | packed
    }

    pub fn four_cycle(self, i: u32, j: u32, base: Vertex) -> FourCycle {
        debug_assert!(base & ((1 << i) | (1 << j)) == 0);
        let (ei, ej) = (1 << i, 1 << j);
        FourCycle {
            i,
            j,
            base,
            id: self.c4_id(i, j, base),
            vertices: [base, base ^ ei, base ^ ej, base ^ ei ^ ej],
            edges: [
                self.edge_from_base(i, base),
                self.edge_from_base(i, base ^ ej),
                self.edge_from_base(j, base),
                self.edge_from_base(j, base ^ ei),
            ],
        }
    }

    pub fn cycle(self, c4_id: usize) -> Result<FourCycle> {
        if c4_id >= self.c4_count() {
            return Err(Error::InvalidArgument(format!(
                "cycle id {c4_id} out of range for {self}"
            )));
        }
        let (i, j) = self.pair_unrank(c4_id >> (self.0 - 2));
        let packed = (c4_id & ((1 << (self.0 - 2)) - 1)) as u32;
        let base = expand(expand(packed, i), j);
        Ok(self.four_cycle(i, j, base))
    }

    /// All four-cycles in canonical order, generated lazily.
    pub fn cycles(self) -> impl Iterator<Item = FourCycle> {
        let n = self.0;
        (0..n).flat_map(move |i| {
            (i + 1..n).flat_map(move |j| {
                (0..1u32 << (n - 2)).map(move |packed| {
                    let base = expand(expand(packed, i), j);
                    self.four_cycle(i, j, base)
                })
            })
        })
    }

    /// The `n - 1` cycles containing `e`, ordered by the other direction.
    pub fn cycles_through(self, e: EdgeId) -> impl Iterator<Item = FourCycle> {
        let (base, _) = self.endpoints(e);
        let i = self.edge_direction(e);
        (0..self.0).filter(move |&j| j != i).map(move |j| {
            let b = base & !(1 << j);
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            self.four_cycle(lo, hi, b)
        })
    }

    /// All edges of `Q_n` in id order.
    pub fn edges(self) -> impl Iterator<Item = EdgeId> {
        (0..self.edge_count() as u32).map(EdgeId)
    }
}

/// `(vertex_count, edge_count, c4_count)` for `Q_n`.
pub fn dim_params(n: u32) -> Result<(usize, usize, usize)> {
    let d = Dim::new(n)?;
    Ok((d.vertex_count(), d.edge_count(), d.c4_count()))
}

/// One four-cycle of `Q_n`.
///
/// `edges` lists the two direction-`i` sides first, then the two
/// direction-`j` sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FourCycle {
    pub i: u32,
    pub j: u32,
    pub base: Vertex,
    pub id: usize,
    pub vertices: [Vertex; 4],
    pub edges: [EdgeId; 4],
}

pub fn enumerate_c4(n: u32) -> Result<Vec<FourCycle>> {
    Ok(Dim::new(n)?.cycles().collect())
}

/// For every edge, the ids of the cycles containing it.
pub fn edge_c4_incidence(n: u32) -> Result<Vec<Vec<usize>>> {
    let cube = Hypercube::new(n)?;
    Ok(cube
        .dim()
        .edges()
        .map(|e| cube.incident(e).iter().map(|&c| c as usize).collect())
        .collect())
}

/// Precomputed cycle and incidence tables for one dimension.
///
/// Built once and read-only afterwards.
#[derive(Clone, Debug)]
pub struct Hypercube {
    dim: Dim,
    cycle_edges: Vec<[EdgeId; 4]>,
    // flat, `n - 1` entries per edge, ascending cycle id
    incidence: Vec<u32>,
}

impl Hypercube {
    pub fn new(n: u32) -> Result<Self> {
        Ok(Self::from_dim(Dim::new(n)?))
    }

    pub fn from_dim(dim: Dim) -> Self {
        let stride = dim.cycles_per_edge();
        let mut incidence = vec![0u32; dim.edge_count() * stride];
        let mut fill = vec![0usize; dim.edge_count()];
        let mut cycle_edges = Vec::with_capacity(dim.c4_count());
        for c in dim.cycles() {
            for e in c.edges {
                let k = e.index();
                incidence[k * stride + fill[k]] = c.id as u32;
                fill[k] += 1;
            }
            cycle_edges.push(c.edges);
        }
        debug_assert!(fill.iter().all(|&f| f == stride));
        Hypercube {
            dim,
            cycle_edges,
            incidence,
        }
    }

    #[inline]
    pub fn dim(&self) -> Dim {
        self.dim
    }

    #[inline]
    pub fn c4_count(&self) -> usize {
        self.cycle_edges.len()
    }

    #[inline]
    pub fn cycle_edges(&self, c4_id: usize) -> &[EdgeId; 4] {
        &self.cycle_edges[c4_id]
    }

    /// Cycle ids containing `e`.
    #[inline]
    pub fn incident(&self, e: EdgeId) -> &[u32] {
        let stride = self.dim.cycles_per_edge();
        &self.incidence[e.index() * stride..(e.index() + 1) * stride]
    }
}
