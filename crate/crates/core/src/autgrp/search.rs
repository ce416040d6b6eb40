//! Partition refinement with individualization.
//!
//! Colourings are vectors of cell ids. After [`refine`] the ids are dense
//! and assigned in sorted order of the vertex signatures, so two colourings
//! refined together in lockstep use matching ids for matching cells.

use num_bigint::BigUint;
use serde::Serialize;

use super::graph::Graph;
use crate::error::{Error, Result};

/// Signature of `v`: own colour, then sorted `(colour, weight)` pairs over
/// out-arcs, then over in-arcs for digraphs.
fn signature(g: &Graph, colours: &[u32], v: usize) -> Vec<u64> {
    let pack = |u: u32, w: u32| (colours[u as usize] as u64) << 32 | w as u64;
    let mut sig = Vec::with_capacity(1 + g.out(v).len() + if g.is_directed() { 1 + g.inn(v).len() } else { 0 });
    sig.push(colours[v] as u64);
    let start = sig.len();
    sig.extend(g.out(v).iter().zip(g.out_weights(v)).map(|(&u, &w)| pack(u, w)));
    sig[start..].sort_unstable();
    if g.is_directed() {
        sig.push(u64::MAX);
        let start = sig.len();
        sig.extend(g.inn(v).iter().zip(g.in_weights(v)).map(|(&u, &w)| pack(u, w)));
        sig[start..].sort_unstable();
    }
    sig
}

fn cell_count(colours: &[u32]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Refines every colouring in `sides` to the coarsest equitable colouring
/// in lockstep. Returns `false` as soon as the signature multisets of two
/// sides disagree, in which case no isomorphism maps one to the other.
pub(crate) fn refine(g: &Graph, sides: &mut [Vec<u32>]) -> bool {
    let n = g.len();
    let mut cells = cell_count(&sides[0]);
    loop {
        let sigs: Vec<Vec<Vec<u64>>> = sides.iter().map(|c| (0..n).map(|v| signature(g, c, v)).collect()).collect();
        let mut distinct: Vec<&Vec<u64>> = sigs[0].iter().collect();
        distinct.sort_unstable();
        for other in &sigs[1..] {
            let mut o: Vec<&Vec<u64>> = other.iter().collect();
            o.sort_unstable();
            if o != distinct {
                return false;
            }
        }
        distinct.dedup();
        for (side, sig) in sides.iter_mut().zip(&sigs) {
            for (v, s) in sig.iter().enumerate() {
                side[v] = distinct.binary_search(&s).unwrap() as u32;
            }
        }
        if distinct.len() == cells || distinct.len() == n {
            return true;
        }
        cells = distinct.len();
    }
}

/// Smallest non-singleton cell (lowest id among ties), if any.
fn target_cell(colours: &[u32]) -> Option<u32> {
    let mut size = vec![0usize; colours.len()];
    for &c in colours {
        size[c as usize] += 1;
    }
    size.iter().enumerate().filter(|(_, &s)| s > 1).min_by_key(|(_, &s)| s).map(|(c, _)| c as u32)
}

fn individualize(colours: &[u32], v: usize) -> Vec<u32> {
    let mut c = colours.to_vec();
    c[v] = colours.len() as u32;
    c
}

/// An automorphism carrying colouring `a` onto colouring `b`, if one exists.
fn extend(g: &Graph, a: Vec<u32>, b: Vec<u32>, nodes: &mut u64) -> Option<Vec<u32>> {
    *nodes += 1;
    let mut sides = [a, b];
    if !refine(g, &mut sides) {
        return None;
    }
    let [a, b] = sides;
    let Some(cell) = target_cell(&a) else {
        let mut pos = vec![0u32; g.len()];
        for (w, &c) in b.iter().enumerate() {
            pos[c as usize] = w as u32;
        }
        let perm: Vec<u32> = a.iter().map(|&c| pos[c as usize]).collect();
        return g.is_automorphism(&perm).then_some(perm);
    };
    let x = a.iter().position(|&c| c == cell).unwrap();
    let a2 = individualize(&a, x);
    for y in (0..g.len()).filter(|&y| b[y] == cell) {
        if let Some(p) = extend(g, a2.clone(), individualize(&b, y), nodes) {
            return Some(p);
        }
    }
    None
}

fn orbit(n: usize, start: usize, gens: &[Vec<u32>]) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for p in gens {
            let w = p[v] as usize;
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Automorphism group presented by a base, its basic orbit sizes and a
/// generating set (`perm[v]` is the image of `v`).
#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismGroup {
    pub base: Vec<u32>,
    pub orbit_sizes: Vec<usize>,
    #[serde(skip)]
    pub generators: Vec<Vec<u32>>,
    #[serde(serialize_with = "ser_big")]
    pub order: BigUint,
    /// Search nodes visited; a rough cost measure.
    pub nodes: u64,
}

fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

impl AutomorphismGroup {
    /// Order of the stabilizer of the first base point (vertex 0).
    pub fn stabilizer_order(&self) -> BigUint {
        self.orbit_sizes.iter().skip(1).map(|&s| BigUint::from(s)).product()
    }

    pub fn is_vertex_transitive(&self, n: usize) -> bool {
        self.orbit_sizes.first().copied().unwrap_or(1) == n
    }
}

/// The full automorphism group. `seeds` are automorphisms already known
/// (for Cayley graphs, the left translations); the first base point is
/// vertex 0.
pub fn automorphism_group(g: &Graph, seeds: &[Vec<u32>]) -> Result<AutomorphismGroup> {
    let n = g.len();
    if let Some(bad) = seeds.iter().position(|p| !g.is_automorphism(p)) {
        return Err(Error::Malformed(format!("seed {bad} is not an automorphism")));
    }
    let mut part = vec![0u32; n];
    refine(g, std::slice::from_mut(&mut part));
    let (mut base, mut orbit_sizes, mut generators) = (Vec::new(), Vec::new(), Vec::new());
    let mut nodes = 0u64;
    if n == 0 {
        return Ok(AutomorphismGroup { base, orbit_sizes, generators, order: BigUint::from(1u32), nodes });
    }
    loop {
        let b = if base.is_empty() {
            0
        } else {
            match target_cell(&part) {
                Some(c) => part.iter().position(|&x| x == c).unwrap(),
                None => break,
            }
        };
        let mut level: Vec<Vec<u32>> = if base.is_empty() { seeds.to_vec() } else { Vec::new() };
        let mut orb = orbit(n, b, &level);
        let left = individualize(&part, b);
        for w in 0..n {
            if part[w] != part[b] || orb[w] {
                continue;
            }
            if let Some(p) = extend(g, left.clone(), individualize(&part, w), &mut nodes) {
                level.push(p);
                orb = orbit(n, b, &level);
            }
        }
        orbit_sizes.push(orb.iter().filter(|&&x| x).count());
        base.push(b as u32);
        generators.extend(level.into_iter().filter(|p| p.iter().enumerate().any(|(i, &x)| i as u32 != x)));
        part = left;
        refine(g, std::slice::from_mut(&mut part));
    }
    let order = orbit_sizes.iter().map(|&s| BigUint::from(s)).product();
    Ok(AutomorphismGroup { base, orbit_sizes, generators, order, nodes })
}

/// A non-identity automorphism fixing `v`, or `None` when the stabilizer
/// is trivial. Stops at the first one found.
pub fn stabilizer_witness(g: &Graph, v: usize) -> Option<Vec<u32>> {
    let mut part = individualize(&vec![0u32; g.len()], v);
    refine(g, std::slice::from_mut(&mut part));
    let mut nodes = 0;
    while let Some(c) = target_cell(&part) {
        let b = part.iter().position(|&x| x == c).unwrap();
        let left = individualize(&part, b);
        for w in (0..g.len()).filter(|&w| w != b && part[w] == c) {
            if let Some(p) = extend(g, left.clone(), individualize(&part, w), &mut nodes) {
                return Some(p);
            }
        }
        part = left;
        refine(g, std::slice::from_mut(&mut part));
    }
    None
}

/// Every automorphism, by trying all permutations. Oracle for tiny graphs.
pub fn brute_force_automorphisms(g: &Graph) -> Result<Vec<Vec<u32>>> {
    if g.len() > 8 {
        return Err(Error::Unsupported("brute force is limited to 8 vertices".into()));
    }
    fn rec(g: &Graph, perm: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
        if perm.len() == g.len() {
            if g.is_automorphism(perm) {
                out.push(perm.clone());
            }
            return;
        }
        for w in 0..g.len() {
            if !used[w] {
                used[w] = true;
                perm.push(w as u32);
                rec(g, perm, used, out);
                perm.pop();
                used[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(g, &mut Vec::new(), &mut vec![false; g.len()], &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: u32) -> Graph {
        Graph::new(false, (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect()).unwrap()
    }

    #[test]
    fn cycle_is_dihedral() {
        for n in 3..9 {
            let a = automorphism_group(&cycle(n), &[]).unwrap();
            assert_eq!(a.order, BigUint::from(2 * n));
            assert!(a.generators.iter().all(|p| cycle(n).is_automorphism(p)));
        }
    }

    #[test]
    fn complete_and_empty() {
        let k5: Vec<Vec<u32>> = (0..5).map(|u| (0..5).filter(|&v| v != u).collect()).collect();
        let a = automorphism_group(&Graph::new(false, k5).unwrap(), &[]).unwrap();
        assert_eq!(a.order, BigUint::from(120u32));
        let e = automorphism_group(&Graph::new(false, vec![vec![]; 4]).unwrap(), &[]).unwrap();
        assert_eq!(e.order, BigUint::from(24u32));
    }

    #[test]
    fn directed_cycle() {
        let g = Graph::new(true, (0..6).map(|i| vec![(i + 1) % 6]).collect()).unwrap();
        let a = automorphism_group(&g, &[]).unwrap();
        assert_eq!(a.order, BigUint::from(6u32));
        assert!(stabilizer_witness(&g, 0).is_none());
        assert!(stabilizer_witness(&cycle(6), 0).is_some());
    }

    #[test]
    fn petersen() {
        let mut adj = vec![Vec::new(); 10];
        let mut add = |a: usize, b: usize| {
            adj[a].push(b as u32);
            adj[b].push(a as u32);
        };
        for i in 0..5 {
            add(i, (i + 1) % 5);
            add(i, i + 5);
            add(i + 5, (i + 2) % 5 + 5);
        }
        let a = automorphism_group(&Graph::new(false, adj).unwrap(), &[]).unwrap();
        assert_eq!(a.order, BigUint::from(120u32));
    }

    #[test]
    fn brute_force_agrees_on_paths_and_stars() {
        let path = Graph::new(false, vec![vec![1], vec![0, 2], vec![1, 3], vec![2]]).unwrap();
        assert_eq!(brute_force_automorphisms(&path).unwrap().len(), 2);
        assert_eq!(automorphism_group(&path, &[]).unwrap().order, BigUint::from(2u32));
        let star = Graph::new(false, vec![vec![1, 2, 3], vec![0], vec![0], vec![0]]).unwrap();
        assert_eq!(brute_force_automorphisms(&star).unwrap().len(), 6);
        assert_eq!(automorphism_group(&star, &[]).unwrap().order, BigUint::from(6u32));
    }
}
