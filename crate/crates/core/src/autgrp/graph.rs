use crate::cayley::CayleyGraph;
use crate::error::{Error, Result};

/// Largest graph the automorphism engine accepts.
pub const MAX_VERTICES: usize = 4096;

/// A finite simple (di)graph with per-arc invariants used by refinement.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    directed: bool,
    out: Vec<Vec<u32>>,
    inn: Vec<Vec<u32>>,
    words: usize,
    out_bits: Vec<u64>,
    in_bits: Vec<u64>,
    /// Invariant weight of each out-arc, aligned with `out`.
    out_w: Vec<Vec<u32>>,
    /// Invariant weight of each in-arc, aligned with `inn`.
    in_w: Vec<Vec<u32>>,
}

impl Graph {
    /// Builds a graph from out-neighbour lists. Undirected graphs must list
    /// every edge in both directions. Loops and repeated arcs are rejected.
    pub fn new(directed: bool, adjacency: Vec<Vec<u32>>) -> Result<Self> {
        let n = adjacency.len();
        if n > MAX_VERTICES {
            return Err(Error::BudgetExhausted(format!("{n} vertices exceed {MAX_VERTICES}")));
        }
        let words = n.div_ceil(64).max(1);
        let mut out_bits = vec![0u64; n * words];
        let mut in_bits = vec![0u64; n * words];
        let mut out = adjacency;
        let mut inn = vec![Vec::new(); n];
        for (u, l) in out.iter_mut().enumerate() {
            l.sort_unstable();
            if l.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Malformed(format!("repeated arc at vertex {u}")));
            }
            for &v in l.iter() {
                let v = v as usize;
                if v >= n || v == u {
                    return Err(Error::Malformed(format!("bad arc {u} -> {v}")));
                }
                out_bits[u * words + v / 64] |= 1 << (v % 64);
                in_bits[v * words + u / 64] |= 1 << (u % 64);
                inn[v].push(u as u32);
            }
        }
        let mut g = Graph { n, directed, out, inn, words, out_bits, in_bits, out_w: vec![], in_w: vec![] };
        if !directed && (0..n).any(|u| g.out[u].iter().any(|&v| !g.has_arc(v as usize, u))) {
            return Err(Error::Malformed("undirected graph with an asymmetric arc".into()));
        }
        g.compute_weights();
        Ok(g)
    }

    pub fn from_cayley<E: Clone + Eq + std::hash::Hash>(c: &CayleyGraph<E>) -> Result<Self> {
        Self::new(c.directed, c.neighbours())
    }

    fn row<'a>(&self, bits: &'a [u64], u: usize) -> &'a [u64] {
        &bits[u * self.words..(u + 1) * self.words]
    }

    fn common(&self, a: &[u64], b: &[u64]) -> u32 {
        a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
    }

    /// Undirected: common neighbours of the endpoints (triangles through
    /// the edge). Directed: paths `u -> w -> v`, doubled, plus one when the
    /// reverse arc exists.
    fn arc_weight(&self, u: usize, v: usize) -> u32 {
        if self.directed {
            let paths = self.common(self.row(&self.out_bits, u), self.row(&self.in_bits, v));
            2 * paths + self.has_arc(v, u) as u32
        } else {
            self.common(self.row(&self.out_bits, u), self.row(&self.out_bits, v))
        }
    }

    fn compute_weights(&mut self) {
        let out_w: Vec<Vec<u32>> =
            (0..self.n).map(|u| self.out[u].iter().map(|&v| self.arc_weight(u, v as usize)).collect()).collect();
        let in_w: Vec<Vec<u32>> =
            (0..self.n).map(|v| self.inn[v].iter().map(|&u| self.arc_weight(u as usize, v)).collect()).collect();
        self.out_w = out_w;
        self.in_w = in_w;
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn out(&self, u: usize) -> &[u32] {
        &self.out[u]
    }

    pub fn inn(&self, u: usize) -> &[u32] {
        &self.inn[u]
    }

    pub(crate) fn out_weights(&self, u: usize) -> &[u32] {
        &self.out_w[u]
    }

    pub(crate) fn in_weights(&self, u: usize) -> &[u32] {
        &self.in_w[u]
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Whether `perm` (vertex `v` maps to `perm[v]`) preserves arcs.
    pub fn is_automorphism(&self, perm: &[u32]) -> bool {
        if perm.len() != self.n {
            return false;
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p as usize >= self.n || std::mem::replace(&mut seen[p as usize], true) {
                return false;
            }
        }
        (0..self.n).all(|u| {
            self.out[u].len() == self.out[perm[u] as usize].len()
                && self.out[u].iter().all(|&v| self.has_arc(perm[u] as usize, perm[v as usize] as usize))
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.out[u].iter().chain(&self.inn[u]) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    stack.push(v as usize);
                }
            }
        }
        count == self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::new(false, vec![vec![1], vec![]]).is_err());
        assert!(Graph::new(false, vec![vec![0]]).is_err());
        assert!(Graph::new(true, vec![vec![1, 1], vec![]]).is_err());
        assert!(Graph::new(true, vec![vec![1], vec![]]).is_ok());
    }

    #[test]
    fn triangle_weights() {
        // K4: every edge lies in two triangles.
        let k4: Vec<Vec<u32>> = (0..4).map(|u| (0..4).filter(|&v| v != u).collect()).collect();
        let g = Graph::new(false, k4).unwrap();
        assert!(g.out_weights(0).iter().all(|&w| w == 2));
        assert!(g.is_automorphism(&[1, 2, 3, 0]));
        assert!(!g.is_automorphism(&[0, 0, 1, 2]));
    }
}
