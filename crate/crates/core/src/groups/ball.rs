use std::collections::HashMap;

use super::Group;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallEntry<E> {
    pub elem: E,
    pub length: usize,
}

/// The ball of radius `r` around the identity for a generating set, listed
/// in breadth-first order. Each element appears once, with its word length.
#[derive(Clone, Debug)]
pub struct Ball<E> {
    entries: Vec<BallEntry<E>>,
    index: HashMap<E, usize>,
    radius: usize,
    /// Offsets where each sphere starts; `spheres[r]..spheres[r+1]` is the
    /// sphere of radius `r`.
    spheres: Vec<usize>,
}

impl<E: Clone + Eq + std::hash::Hash> Ball<E> {
    /// Enumerates the ball of radius `radius` for `gens` (symmetrised).
    /// Within a sphere, elements appear in order of discovery: parents in
    /// ball order, then generators in the given order followed by their
    /// inverses. Fails if more than `max_vertices` elements would be listed.
    pub fn new<G: Group<Elem = E>>(group: &G, gens: &[E], radius: usize, max_vertices: usize) -> Result<Self> {
        let steps = symmetrise(group, gens);
        let id = group.identity();
        let mut entries = vec![BallEntry { elem: id.clone(), length: 0 }];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut spheres = vec![0, 1];
        for r in 1..=radius {
            let (lo, hi) = (spheres[r - 1], spheres[r]);
            for i in lo..hi {
                for s in &steps {
                    let y = group.mul(&entries[i].elem, s);
                    if !index.contains_key(&y) {
                        if entries.len() >= max_vertices {
                            return Err(Error::BudgetExhausted(format!(
                                "ball of radius {radius} in {} exceeds {max_vertices} vertices",
                                group.name()
                            )));
                        }
                        index.insert(y.clone(), entries.len());
                        entries.push(BallEntry { elem: y, length: r });
                    }
                }
            }
            spheres.push(entries.len());
            if spheres[r + 1] == spheres[r] {
                // The group is finite and exhausted.
                break;
            }
        }
        Ok(Ball { entries, index, radius, spheres })
    }

    pub fn entries(&self) -> &[BallEntry<E>] {
        &self.entries
    }

    pub fn elements(&self) -> impl Iterator<Item = &E> {
        self.entries.iter().map(|e| &e.elem)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    pub fn length_of(&self, e: &E) -> Option<usize> {
        self.index_of(e).map(|i| self.entries[i].length)
    }

    /// Sizes `|B(0)|, |B(1)|, ...` up to the radius actually reached.
    pub fn growth(&self) -> Vec<usize> {
        self.spheres[1..].to_vec()
    }
}

/// `gens` followed by the inverses not already present, identity removed.
pub(crate) fn symmetrise<G: Group>(group: &G, gens: &[G::Elem]) -> Vec<G::Elem> {
    let mut out: Vec<G::Elem> = Vec::new();
    for g in gens {
        if !group.is_identity(g) && !out.contains(g) {
            out.push(g.clone());
        }
    }
    for g in gens {
        let gi = group.inv(g);
        if !group.is_identity(&gi) && !out.contains(&gi) {
            out.push(gi);
        }
    }
    out
}

/// Word length of `target` with respect to `gens`, if at most `max_radius`.
pub fn word_length<G: Group>(group: &G, gens: &[G::Elem], target: &G::Elem, max_radius: usize) -> Option<usize> {
    let steps = symmetrise(group, gens);
    let mut frontier = vec![group.identity()];
    let mut seen = std::collections::HashSet::from([group.identity()]);
    for r in 0..=max_radius {
        if frontier.contains(target) {
            return Some(r);
        }
        let mut next = Vec::new();
        for x in &frontier {
            for s in &steps {
                let y = group.mul(x, s);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        frontier = next;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{FreeGroup, Grigorchuk, Heisenberg, InfiniteDihedral};

    #[test]
    fn free_group_growth() {
        let f = FreeGroup::new(2).unwrap();
        let b = Ball::new(&f, &f.generators(), 3, 10_000).unwrap();
        assert_eq!(b.growth(), vec![1, 5, 17, 53]);
        assert!(b.entries().windows(2).all(|w| w[0].length <= w[1].length));
        assert_eq!(b.entries()[0].length, 0);
    }

    #[test]
    fn products_land_in_double_ball() {
        let h = Heisenberg;
        let b2 = Ball::new(&h, &h.generators(), 2, 10_000).unwrap();
        let b4 = Ball::new(&h, &h.generators(), 4, 100_000).unwrap();
        for x in b2.elements() {
            for y in b2.elements() {
                assert!(b4.contains(&h.mul(x, y)));
            }
        }
        let g = Grigorchuk;
        let b = Ball::new(&g, &g.generators(), 6, 100_000).unwrap();
        assert!(b.growth().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn word_lengths() {
        let d = InfiniteDihedral;
        let e = d.parse("r^3s").unwrap();
        assert_eq!(word_length(&d, &d.generators(), &e, 10), Some(4));
        let f = FreeGroup::new(2).unwrap();
        assert_eq!(word_length(&f, &f.generators(), &f.parse("abAB").unwrap(), 3), None);
    }

    #[test]
    fn budget_guard() {
        let f = FreeGroup::new(2).unwrap();
        assert!(Ball::new(&f, &f.generators(), 10, 1000).is_err());
    }
}
