//! Permutations of `0..n` with cycle-notation input and output.
//!
//! Products follow the left-to-right convention: `p * q` applies `p` first,
//! then `q`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Builds a permutation from its image vector; rejects non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::Malformed(format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.0.get(i as usize).copied().unwrap_or(i)
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        let n = self.degree().max(other.degree());
        Perm((0..n as u32).map(|i| other.apply(self.apply(i))).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    /// Pads to degree `n` with fixed points.
    pub fn extended(&self, n: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.degree() as u32..n.max(self.degree()) as u32);
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32);
                i = self.0[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4,5)`; `()` is the
    /// identity. The degree is the largest point mentioned, or `min_degree`.
    pub fn parse_cycles(text: &str, min_degree: usize) -> Result<Perm> {
        let bad = |why: &str| Error::Malformed(format!("cycle notation `{text}`: {why}"));
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let close = open.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let body = &open[..close];
            let points: Vec<u32> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<u32>().map_err(|_| bad("non-numeric point")))
                .collect::<Result<_>>()?;
            if points.contains(&0) {
                return Err(bad("points are 1-based"));
            }
            cycles.push(points.into_iter().map(|p| p - 1).collect());
            rest = open[close + 1..].trim_start();
        }
        let degree = cycles.iter().flatten().map(|&p| p as usize + 1).max().unwrap_or(0).max(min_degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for c in &cycles {
            for (k, &p) in c.iter().enumerate() {
                if touched[p as usize] {
                    return Err(bad("cycles are not disjoint"));
                }
                touched[p as usize] = true;
                images[p as usize] = c[(k + 1) % c.len()];
            }
        }
        Ok(Perm(images))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}
