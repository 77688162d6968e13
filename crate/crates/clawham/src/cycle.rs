//! Oriented cycles and paths: successor/predecessor access and the segment
//! algebra `C[u,v]`, `C[u,v)`, `C(u,v]`, `C(u,v)` used by every reroute.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Endpoint inclusion for [`OrientedCycle::segment`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    ClosedClosed,
    ClosedOpen,
    OpenClosed,
    OpenOpen,
}

/// Vertex path; all vertices distinct, possibly empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    seq: Vec<usize>,
}

impl Path {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != seq.len() {
            return Err(Error::NotACycle("repeated vertex in path".into()));
        }
        Ok(Path { seq })
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// True when every consecutive pair is an edge of `g`.
    pub fn is_real_path(&self, g: &Graph) -> bool {
        self.seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

/// Cycle with a fixed orientation. Distinct vertices, length at least 3.
/// [`OrientedCycle::real`] additionally certifies every consecutive pair as
/// an edge of the host graph.
#[derive(Clone, PartialEq, Eq)]
pub struct OrientedCycle {
    seq: Vec<usize>,
    pos: Vec<usize>, // pos[v] = index of v in seq, usize::MAX elsewhere
}

impl OrientedCycle {
    /// Cycle from a vertex sequence without edge certification.
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        if seq.len() < 3 {
            return Err(Error::NotACycle(format!("length {} < 3", seq.len())));
        }
        let max = *seq.iter().max().unwrap();
        let mut pos = vec![usize::MAX; max + 1];
        for (i, &v) in seq.iter().enumerate() {
            if pos[v] != usize::MAX {
                return Err(Error::NotACycle(format!("repeated vertex {v}")));
            }
            pos[v] = i;
        }
        Ok(OrientedCycle { seq, pos })
    }

    /// Cycle certified against `g`: every cyclically consecutive pair must be
    /// a real edge.
    pub fn real(g: &Graph, seq: Vec<usize>) -> Result<Self> {
        let c = OrientedCycle::new(seq)?;
        for i in 0..c.len() {
            let (u, v) = (c.seq[i], c.seq[(i + 1) % c.len()]);
            if !g.has_edge(u, v) {
                return Err(Error::NotACycle(format!("{u}-{v} is not an edge")));
            }
        }
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.pos.len() && self.pos[v] != usize::MAX
    }

    pub fn position(&self, v: usize) -> Result<usize> {
        if self.contains(v) {
            Ok(self.pos[v])
        } else {
            Err(Error::NotOnCycle(v))
        }
    }

    /// `v⁺`, the successor of `v` along the orientation.
    pub fn successor(&self, v: usize) -> Result<usize> {
        Ok(self.seq[(self.position(v)? + 1) % self.len()])
    }

    /// `v⁻`, the predecessor of `v` along the orientation.
    pub fn predecessor(&self, v: usize) -> Result<usize> {
        Ok(self.seq[(self.position(v)? + self.len() - 1) % self.len()])
    }

    /// The same cycle with the reverse orientation.
    pub fn reversed(&self) -> OrientedCycle {
        let mut seq = self.seq.clone();
        seq.reverse();
        OrientedCycle::new(seq).expect("reversal preserves cycle validity")
    }

    /// Segment from `u` to `v` along the orientation. Open variants drop the
    /// corresponding endpoints, so `C(u,u⁺)` is empty. With `u == v` the
    /// closed-closed segment is the single vertex while the open variants
    /// wrap the whole way around, keeping `C[u,v]` + `C(v,u)` a partition of
    /// the cycle for every pair.
    pub fn segment(&self, u: usize, v: usize, closure: Closure) -> Result<Path> {
        let mut seq = if u == v && closure != Closure::ClosedClosed {
            let start = self.position(u)?;
            let n = self.len();
            let mut full: Vec<usize> = (0..n).map(|k| self.seq[(start + k) % n]).collect();
            full.push(u);
            full
        } else {
            self.walk(u, v)?
        };
        if matches!(closure, Closure::OpenClosed | Closure::OpenOpen) && !seq.is_empty() {
            seq.remove(0);
        }
        if matches!(closure, Closure::ClosedOpen | Closure::OpenOpen) && !seq.is_empty() {
            seq.pop();
        }
        Ok(Path { seq })
    }

    /// Closed-closed forward walk from `u` to `v` as a raw vertex list.
    pub(crate) fn walk(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let start = self.position(u)?;
        let end = self.position(v)?;
        let n = self.len();
        let steps = (end + n - start) % n;
        Ok((0..=steps).map(|k| self.seq[(start + k) % n]).collect())
    }

    /// Closed-closed walk from `u` backwards (against the orientation) to `v`.
    pub(crate) fn walk_back(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        let mut w = self.walk(v, u)?;
        w.reverse();
        Ok(w)
    }
}

impl std::fmt::Debug for OrientedCycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cycle{:?}", self.seq)
    }
}

impl Serialize for OrientedCycle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.seq.len()))?;
        for v in &self.seq {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}

impl Serialize for Path {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.seq.len()))?;
        for v in &self.seq {
            seq.serialize_element(v)?;
        }
        seq.end()
    }
}
