//! Orientation rigidity: the only bijection `φ` with `φ(1) = 1` and
//! `φ(gs) ∈ {φ(g)s, φ(g)s^-1}` for all `g` and `s ∈ S1` is the identity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::structure::IndexTwoWitness;
use crate::groups::{FiniteGroup, Group};
use crate::set::SymmetricSet;

/// Node budget for the backtracking search.
pub const RIGIDITY_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, Serialize)]
pub struct RigidityReport {
    pub rigid: bool,
    /// A non-identity solution, listed on moved elements.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<(String, String)>>,
    #[serde(skip)]
    pub map: Option<Vec<u32>>,
    pub nodes: u64,
}

struct Search<'a> {
    right: Vec<Vec<u32>>,
    inv_pos: Vec<usize>,
    order: Vec<u32>,
    parent: Vec<(u32, usize)>,
    phi: Vec<u32>,
    used: Vec<bool>,
    nodes: u64,
    group: &'a FiniteGroup,
}

const UNSET: u32 = u32::MAX;

impl Search<'_> {
    fn consistent(&self, v: usize, c: u32) -> bool {
        self.right[v].iter().enumerate().all(|(j, &w)| {
            let pw = self.phi[w as usize];
            pw == UNSET || pw == self.right[c as usize][j] || pw == self.right[c as usize][self.inv_pos[j]]
        })
    }

    /// Depth-first over vertices in breadth-first order. Returns `Ok(true)`
    /// once `phi` holds a non-identity solution.
    fn run(&mut self, depth: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > RIGIDITY_NODE_BUDGET {
            return Err(Error::SearchFailure {
                tested: self.nodes as usize,
                context: format!("orientation rigidity on {}", self.group.name()),
            });
        }
        if depth == self.order.len() {
            return Ok(self.phi.iter().enumerate().any(|(i, &x)| i as u32 != x));
        }
        let v = self.order[depth] as usize;
        let (p, k) = self.parent[v];
        let pp = self.phi[p as usize] as usize;
        let mut cands = [self.right[pp][k], self.right[pp][self.inv_pos[k]]];
        if cands[0] == cands[1] {
            cands[1] = UNSET;
        }
        for c in cands {
            if c == UNSET || self.used[c as usize] || !self.consistent(v, c) {
                continue;
            }
            self.phi[v] = c;
            self.used[c as usize] = true;
            if self.run(depth + 1)? {
                return Ok(true);
            }
            self.used[c as usize] = false;
            self.phi[v] = UNSET;
        }
        Ok(false)
    }
}

fn validate(group: &FiniteGroup, s1: &SymmetricSet<u32>) -> Result<()> {
    if !s1.is_symmetric() {
        return Err(Error::InvalidSet("S1 must be symmetric".into()));
    }
    if s1.generates_finite(group) != Some(true) {
        return Err(Error::InvalidSet("S1 does not generate the group".into()));
    }
    Ok(())
}

/// Exhaustive search for a non-identity orientation-preserving bijection.
pub fn orientation_rigidity_check(group: &FiniteGroup, s1: &SymmetricSet<u32>) -> Result<RigidityReport> {
    validate(group, s1)?;
    let n = group.len();
    let s = s1.elems();
    let right: Vec<Vec<u32>> = (0..n as u32).map(|g| s.iter().map(|&x| group.m(g, x)).collect()).collect();
    let inv_pos: Vec<usize> = s.iter().map(|&x| s1.position(&group.i(x)).unwrap()).collect();
    let mut order = vec![0u32];
    let mut parent = vec![(0u32, 0usize); n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let g = order[head] as usize;
        head += 1;
        for (k, &h) in right[g].iter().enumerate() {
            if !seen[h as usize] {
                seen[h as usize] = true;
                parent[h as usize] = (g as u32, k);
                order.push(h);
            }
        }
    }
    let mut search =
        Search { right, inv_pos, order, parent, phi: vec![UNSET; n], used: vec![false; n], nodes: 0, group };
    search.phi[0] = 0;
    search.used[0] = true;
    let found = search.run(1)?;
    let map = found.then(|| search.phi.clone());
    Ok(RigidityReport { rigid: !found, witness: map.as_ref().map(|m| describe(group, m)), map, nodes: search.nodes })
}

fn describe(group: &FiniteGroup, map: &[u32]) -> Vec<(String, String)> {
    map.iter()
        .enumerate()
        .filter(|(i, &x)| *i as u32 != x)
        .map(|(i, &x)| (group.label(i as u32).to_string(), group.label(x).to_string()))
        .collect()
}

/// Whether `map` is a non-identity solution of the orientation constraints.
pub fn is_orientation_witness(group: &FiniteGroup, s1: &SymmetricSet<u32>, map: &[u32]) -> bool {
    let n = group.len();
    if map.len() != n || map[0] != 0 || (0..n).all(|i| map[i] == i as u32) {
        return false;
    }
    let mut seen = vec![false; n];
    if map.iter().any(|&x| x as usize >= n || std::mem::replace(&mut seen[x as usize], true)) {
        return false;
    }
    (0..n as u32).all(|g| {
        s1.elems().iter().all(|&s| {
            let img = map[group.m(g, s) as usize];
            img == group.m(map[g as usize], s) || img == group.m(map[g as usize], group.i(s))
        })
    })
}

/// `g -> g^-1`; a solution for every abelian group and every `S1`.
pub fn inverse_map(group: &FiniteGroup) -> Vec<u32> {
    (0..group.len() as u32).map(|g| group.i(g)).collect()
}

/// Identity on the abelian subgroup `A`, inversion off it; a solution for
/// generalized dicyclic groups.
pub fn dicyclic_map(group: &FiniteGroup, w: &IndexTwoWitness) -> Vec<u32> {
    let mut in_a = vec![false; group.len()];
    for &a in &w.subgroup {
        in_a[a as usize] = true;
    }
    (0..group.len() as u32).map(|g| if in_a[g as usize] { g } else { group.i(g) }).collect()
}
