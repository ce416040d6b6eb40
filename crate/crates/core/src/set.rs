//! Finite subsets of `G \ {1}` used as connection sets.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groups::Group;

/// An ordered, duplicate-free list of non-identity elements. When
/// `symmetric` is set the list is closed under inversion.
#[derive(Clone, Debug)]
pub struct SymmetricSet<E> {
    elems: Vec<E>,
    index: HashMap<E, usize>,
    symmetric: bool,
}

impl<E: PartialEq> PartialEq for SymmetricSet<E> {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems && self.symmetric == other.symmetric
    }
}

impl<E: Clone + Eq + std::hash::Hash> SymmetricSet<E> {
    /// Validates `elems`: no identity, no duplicates, and closure under
    /// inversion when `symmetric` is requested.
    pub fn new<G: Group<Elem = E>>(group: &G, elems: Vec<E>, symmetric: bool) -> Result<Self> {
        let mut index = HashMap::with_capacity(elems.len());
        for (i, e) in elems.iter().enumerate() {
            if group.is_identity(e) {
                return Err(Error::InvalidSet("the identity is not allowed".into()));
            }
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::InvalidSet(format!("duplicate element {}", group.format(e))));
            }
        }
        let set = SymmetricSet { elems, index, symmetric };
        if symmetric {
            if let Some(e) = set.elems.iter().find(|e| !set.contains(&group.inv(e))) {
                return Err(Error::InvalidSet(format!(
                    "not closed under inverses: {} lacks its inverse",
                    group.format(e)
                )));
            }
        }
        Ok(set)
    }

    /// `elems` together with their inverses, identity and repeats dropped.
    /// Each inverse is placed right after the first occurrence of its
    /// partner.
    pub fn symmetric_closure<G: Group<Elem = E>>(group: &G, elems: &[E]) -> Self {
        let mut out: Vec<E> = Vec::new();
        let mut index = HashMap::new();
        for e in elems {
            for x in [e.clone(), group.inv(e)] {
                if !group.is_identity(&x) && !index.contains_key(&x) {
                    index.insert(x.clone(), out.len());
                    out.push(x);
                }
            }
        }
        SymmetricSet { elems: out, index, symmetric: true }
    }

    pub fn elems(&self) -> &[E] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    pub fn position(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Appends elements not already present; keeps the symmetry flag only if
    /// the result is still symmetric.
    pub fn extend<G: Group<Elem = E>>(&mut self, group: &G, new: &[E]) {
        for e in new {
            if !group.is_identity(e) && !self.index.contains_key(e) {
                self.index.insert(e.clone(), self.elems.len());
                self.elems.push(e.clone());
            }
        }
        if self.symmetric {
            self.symmetric = self.elems.iter().all(|e| self.index.contains_key(&group.inv(e)));
        }
    }

    /// Inverse-pair classes `{s, s^-1}` in order of first appearance; the
    /// second entry is `None` for involutions.
    pub fn inverse_classes<G: Group<Elem = E>>(&self, group: &G) -> Vec<(E, Option<E>)> {
        let mut done = vec![false; self.elems.len()];
        let mut out = Vec::new();
        for (i, e) in self.elems.iter().enumerate() {
            if done[i] {
                continue;
            }
            done[i] = true;
            let ei = group.inv(e);
            if ei == *e {
                out.push((e.clone(), None));
            } else {
                if let Some(j) = self.position(&ei) {
                    done[j] = true;
                }
                out.push((e.clone(), Some(ei)));
            }
        }
        out
    }

    /// Whether the set generates the finite group `group`.
    pub fn generates_finite<G: Group<Elem = E>>(&self, group: &G) -> Option<bool> {
        let n = group.order()?;
        let mut seen = std::collections::HashSet::from([group.identity()]);
        let mut queue = vec![group.identity()];
        while let Some(x) = queue.pop() {
            for s in &self.elems {
                let y = group.mul(&x, s);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        Some(seen.len() == n)
    }

    pub fn format<G: Group<Elem = E>>(&self, group: &G) -> Vec<String> {
        self.elems.iter().map(|e| group.format(e)).collect()
    }
}

/// Splits a list of element strings at top-level commas, semicolons and
/// newlines; separators inside brackets or parentheses are kept. `#` starts
/// a comment that runs to the end of the line.
pub fn split_element_list(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        let mut depth = 0i32;
        let mut cur = String::new();
        for c in line.chars() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                _ => {}
            }
            if depth == 0 && (c == ',' || c == ';') {
                if !cur.trim().is_empty() {
                    out.push(cur.trim().to_string());
                }
                cur.clear();
            } else {
                cur.push(c);
            }
        }
        if !cur.trim().is_empty() {
            out.push(cur.trim().to_string());
        }
    }
    out
}

/// Parses a list of elements (see [`split_element_list`]).
pub fn parse_elements<G: Group>(group: &G, text: &str) -> Result<Vec<G::Elem>> {
    split_element_list(text).iter().map(|s| group.parse(s)).collect()
}
