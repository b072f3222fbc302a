use super::VertexId;
use crate::error::{Error, Result};

/// A bijective assignment of positions to vertices.
///
/// Positions are stored zero-based; [`Ordering::rank`] reports the one-based
/// rank used in ordering files.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ordering {
    position: Vec<u32>,
    inverse: Vec<VertexId>,
}

impl Ordering {
    /// `sequence[i]` is the vertex placed at position `i`.
    pub fn from_sequence(sequence: Vec<VertexId>) -> Result<Ordering> {
        let n = sequence.len();
        let mut position = vec![u32::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            let slot = position
                .get_mut(v as usize)
                .ok_or_else(|| Error::NotBijective(format!("vertex {v} out of range")))?;
            if *slot != u32::MAX {
                return Err(Error::NotBijective(format!("vertex {v} placed twice")));
            }
            *slot = i as u32;
        }
        Ok(Ordering {
            position,
            inverse: sequence,
        })
    }

    /// `ranks[u]` is the one-based rank of vertex `u`.
    pub fn from_ranks(ranks: &[u32]) -> Result<Ordering> {
        let n = ranks.len();
        let mut inverse = vec![VertexId::MAX; n];
        for (u, &r) in ranks.iter().enumerate() {
            if r == 0 || r as usize > n {
                return Err(Error::NotBijective(format!("rank {r} outside 1..={n}")));
            }
            let slot = &mut inverse[r as usize - 1];
            if *slot != VertexId::MAX {
                return Err(Error::NotBijective(format!("rank {r} used twice")));
            }
            *slot = u as VertexId;
        }
        Ordering::from_sequence(inverse)
    }

    pub fn identity(n: usize) -> Ordering {
        Ordering {
            position: (0..n as u32).collect(),
            inverse: (0..n as VertexId).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.inverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inverse.is_empty()
    }

    /// Zero-based position of `u`.
    #[inline]
    pub fn position(&self, u: VertexId) -> u32 {
        self.position[u as usize]
    }

    /// One-based rank of `u`.
    pub fn rank(&self, u: VertexId) -> u32 {
        self.position[u as usize] + 1
    }

    /// Vertex at zero-based position `p`.
    pub fn at(&self, p: usize) -> VertexId {
        self.inverse[p]
    }

    /// Vertices in rank order.
    pub fn sequence(&self) -> &[VertexId] {
        &self.inverse
    }

    pub fn ranks(&self) -> Vec<u32> {
        self.position.iter().map(|p| p + 1).collect()
    }

    #[inline]
    pub fn before(&self, u: VertexId, v: VertexId) -> bool {
        self.position(u) < self.position(v)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: self.len(),
            });
        }
        Ok(())
    }
}
