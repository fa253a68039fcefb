use std::fmt;

use super::{Dim, EdgeId, Vertex};
use crate::error::{Error, Result};

/// A subset of the edges of `Q_n`, stored as a bit vector over edge ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    dim: Dim,
    words: Vec<u64>,
    len: usize,
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeSet")
            .field("dim", &self.dim.n())
            .field("len", &self.len)
            .finish()
    }
}

impl EdgeSet {
    pub fn empty(dim: Dim) -> Self {
        EdgeSet {
            dim,
            words: vec![0; dim.edge_count().div_ceil(64)],
            len: 0,
        }
    }

    pub fn full(dim: Dim) -> Self {
        let mut s = Self::empty(dim);
        for e in dim.edges() {
            s.insert(e);
        }
        s
    }

    pub fn from_edges<I: IntoIterator<Item = EdgeId>>(dim: Dim, edges: I) -> Result<Self> {
        let mut s = Self::empty(dim);
        for e in edges {
            dim.check_edge(e.index() as u64)?;
            s.insert(e);
        }
        Ok(s)
    }

    /// Builds a set from vertex pairs, rejecting non-adjacent pairs.
    pub fn from_pairs<I: IntoIterator<Item = (Vertex, Vertex)>>(
        dim: Dim,
        pairs: I,
    ) -> Result<Self> {
        let mut s = Self::empty(dim);
        for (u, v) in pairs {
            s.insert(dim.edge_id(u, v)?);
        }
        Ok(s)
    }

    #[inline]
    pub fn dim(&self) -> Dim {
        self.dim
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        let k = e.index();
        self.words[k >> 6] >> (k & 63) & 1 == 1
    }

    /// Returns `true` if `e` was newly inserted.
    #[inline]
    pub fn insert(&mut self, e: EdgeId) -> bool {
        let k = e.index();
        let bit = 1u64 << (k & 63);
        let w = &mut self.words[k >> 6];
        let fresh = *w & bit == 0;
        *w |= bit;
        self.len += fresh as usize;
        fresh
    }

    /// Returns `true` if `e` was present.
    #[inline]
    pub fn remove(&mut self, e: EdgeId) -> bool {
        let k = e.index();
        let bit = 1u64 << (k & 63);
        let w = &mut self.words[k >> 6];
        let had = *w & bit != 0;
        *w &= !bit;
        self.len -= had as usize;
        had
    }

    /// Flips membership of `e`; returns whether it is present afterwards.
    #[inline]
    pub fn toggle(&mut self, e: EdgeId) -> bool {
        let k = e.index();
        let bit = 1u64 << (k & 63);
        let w = &mut self.words[k >> 6];
        *w ^= bit;
        let now = *w & bit != 0;
        if now {
            self.len += 1;
        } else {
            self.len -= 1;
        }
        now
    }

    /// Present edges in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros();
                bits &= bits - 1;
                Some(EdgeId::new((wi as u32) << 6 | t))
            })
        })
    }

    /// Absent edges in ascending id order.
    pub fn non_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.dim.edges().filter(move |&e| !self.contains(e))
    }

    /// `|self △ other|`.
    pub fn symmetric_difference_len(&self, other: &EdgeSet) -> Result<usize> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim.n(),
                right: other.dim.n(),
            });
        }
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let d = Dim::new(3).unwrap();
        let mut s = EdgeSet::empty(d);
        assert!(s.is_empty());
        assert!(s.insert(EdgeId::new(5)));
        assert!(!s.insert(EdgeId::new(5)));
        assert!(s.contains(EdgeId::new(5)));
        assert_eq!(s.len(), 1);
        assert!(!s.toggle(EdgeId::new(5)));
        assert!(s.toggle(EdgeId::new(7)));
        assert!(s.remove(EdgeId::new(7)));
        assert!(!s.remove(EdgeId::new(7)));
        assert!(s.is_empty());
    }

    #[test]
    fn full_and_iteration() {
        let d = Dim::new(7).unwrap();
        let full = EdgeSet::full(d);
        assert_eq!(full.len(), 448);
        let ids: Vec<_> = full.iter().collect();
        assert_eq!(ids, d.edges().collect::<Vec<_>>());
        assert_eq!(full.non_edges().count(), 0);
        assert_eq!(EdgeSet::empty(d).non_edges().count(), 448);
    }

    #[test]
    fn out_of_range_rejected() {
        let d = Dim::new(3).unwrap();
        assert!(EdgeSet::from_edges(d, [EdgeId::new(12)]).is_err());
        assert!(EdgeSet::from_pairs(d, [(0, 3)]).is_err());
    }

    #[test]
    fn symmetric_difference() {
        let d = Dim::new(4).unwrap();
        let a = EdgeSet::from_edges(d, (0..10).map(EdgeId::new)).unwrap();
        let b = EdgeSet::from_edges(d, (5..20).map(EdgeId::new)).unwrap();
        assert_eq!(a.symmetric_difference_len(&b).unwrap(), 5 + 10);
        let other = EdgeSet::empty(Dim::new(5).unwrap());
        assert!(a.symmetric_difference_len(&other).is_err());
    }
}
