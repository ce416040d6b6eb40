//! Group oracles.
//!
//! A group is anything implementing [`Group`]: an identity, an associative
//! product, inverses, and exact equality on a canonical element type. Finite
//! groups are stored as multiplication tables ([`FiniteGroup`]); the infinite
//! families carry their own exact normal forms.

mod abelian;
mod ball;
pub mod classify;
mod dihedral;
mod finite;
mod free;
mod grigorchuk;
mod heisenberg;
mod lamplighter;
pub mod library;
pub mod perm;
pub mod presentation;
mod spec;
pub mod structure;

use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

pub use abelian::FreeAbelian;
pub(crate) use ball::symmetrise;
pub use ball::{word_length, Ball, BallEntry};
pub use dihedral::{DihedralElement, InfiniteDihedral};
pub use finite::{FiniteGroup, TableJson};
pub use free::FreeGroup;
pub use grigorchuk::{Grigorchuk, Portrait};
pub use heisenberg::Heisenberg;
pub use lamplighter::{LampElement, Lamplighter};
pub use spec::AnyGroup;

use crate::error::{Error, Result};

/// What a family declares about itself. `None` means "not known"; nothing in
/// the crate ever guesses a value that is missing here.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FamilyInfo {
    pub finite: bool,
    pub abelian: Option<bool>,
    pub virtually_abelian: Option<bool>,
    pub torsion: Option<bool>,
    pub generalized_dicyclic: Option<bool>,
    pub generalized_dihedral: Option<bool>,
}

/// A group presented operationally.
pub trait Group: Send + Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn name(&self) -> String;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    /// Declared generating set used for balls and random walks. Not
    /// necessarily symmetric.
    fn generators(&self) -> Vec<Self::Elem>;

    fn info(&self) -> FamilyInfo;

    /// Cardinality, for finite groups.
    fn order(&self) -> Option<usize> {
        None
    }

    /// Full enumeration, for finite groups.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn format(&self, e: &Self::Elem) -> String;
    fn parse(&self, text: &str) -> Result<Self::Elem>;

    fn is_finite(&self) -> bool {
        self.order().is_some()
    }

    /// Whether `e` has infinite order, when the family knows.
    fn has_infinite_order(&self, _e: &Self::Elem) -> Option<bool> {
        if self.is_finite() || self.info().torsion == Some(true) {
            Some(false)
        } else {
            None
        }
    }

    /// Whether the centralizer of `e` is locally finite, when the family
    /// knows. An element of infinite order always has a non-locally-finite
    /// centralizer (it contains the element).
    fn centralizer_locally_finite(&self, e: &Self::Elem) -> Option<bool> {
        if self.is_finite() {
            return Some(true);
        }
        match self.has_infinite_order(e) {
            Some(true) => Some(false),
            _ => None,
        }
    }

    fn is_identity(&self, e: &Self::Elem) -> bool {
        *e == self.identity()
    }

    fn pow(&self, e: &Self::Elem, k: i64) -> Self::Elem {
        let mut base = if k < 0 { self.inv(e) } else { e.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn square(&self, e: &Self::Elem) -> Self::Elem {
        self.mul(e, e)
    }

    fn commutes(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// `a^-1 b`.
    fn ldiv(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(&self.inv(a), b)
    }

    /// Order of `e` if it is at most `limit`.
    fn element_order(&self, e: &Self::Elem, limit: u64) -> Option<u64> {
        let id = self.identity();
        let mut x = e.clone();
        for k in 1..=limit {
            if x == id {
                return Some(k);
            }
            x = self.mul(&x, e);
        }
        None
    }
}

/// Parses a word over single-letter generator names. Lower case is the
/// generator, upper case its inverse; `1`, `e` and the empty string are the
/// identity. Letters may be followed by `^k` with `k` a signed integer.
pub(crate) fn parse_letter_word<G: Group>(group: &G, text: &str, letters: &[(char, G::Elem)]) -> Result<G::Elem> {
    let fail =
        |reason: &str| Error::ParseElement { group: group.name(), text: text.to_string(), reason: reason.to_string() };
    let t: String = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if t.is_empty() || t == "1" || t == "e" {
        return Ok(group.identity());
    }
    let chars: Vec<char> = t.chars().collect();
    let mut acc = group.identity();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (gen, inverse) = match letters.iter().find(|(l, _)| *l == c.to_ascii_lowercase()) {
            Some((_, g)) => (g.clone(), c.is_ascii_uppercase()),
            None => return Err(fail(&format!("unknown letter `{c}`"))),
        };
        i += 1;
        let mut exp: i64 = 1;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let start = i;
            if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            exp = s.parse().map_err(|_| fail("bad exponent"))?;
        }
        if inverse {
            exp = -exp;
        }
        acc = group.mul(&acc, &group.pow(&gen, exp));
    }
    Ok(acc)
}

/// Parses a parenthesised or bracketed comma list of integers.
pub(crate) fn parse_int_tuple(text: &str, open: char, close: char) -> Option<Vec<i64>> {
    let t = text.trim();
    let inner = t.strip_prefix(open)?.strip_suffix(close)?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|p| p.trim().parse().ok()).collect()
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::Group;
    use rand::Rng;

    /// Checks the group axioms on `samples` random triples drawn from `pool`.
    pub fn check_axioms<G: Group, R: Rng>(g: &G, pool: &[G::Elem], samples: usize, rng: &mut R) {
        let id = g.identity();
        for _ in 0..samples {
            let a = &pool[rng.gen_range(0..pool.len())];
            let b = &pool[rng.gen_range(0..pool.len())];
            let c = &pool[rng.gen_range(0..pool.len())];
            assert_eq!(g.mul(&g.mul(a, b), c), g.mul(a, &g.mul(b, c)), "associativity failed in {}", g.name());
            assert_eq!(g.mul(a, &id), *a);
            assert_eq!(g.mul(&id, a), *a);
            assert_eq!(g.mul(a, &g.inv(a)), id);
            assert_eq!(g.mul(&g.inv(a), a), id);
        }
    }
}
