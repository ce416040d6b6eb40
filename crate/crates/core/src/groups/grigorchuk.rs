//! The first Grigorchuk group, acting on the binary rooted tree.
//!
//! Elements are stored as portraits: either one of the five nucleus elements
//! `1, a, b, c, d`, or a root flip bit with the two sections below the root.
//! A split whose data coincides with a nucleus element is always collapsed,
//! which makes the representation canonical, so equality is structural.

use std::sync::Arc;

use super::{FamilyInfo, Group};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Nucleus {
    One,
    A,
    B,
    C,
    D,
}

/// Canonical portrait of an element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Portrait {
    Nucleus(Nucleus),
    Split { flip: bool, left: Arc<Portrait>, right: Arc<Portrait> },
}

use Nucleus::*;

const ONE: Portrait = Portrait::Nucleus(One);

impl Portrait {
    fn nuc(n: Nucleus) -> Portrait {
        Portrait::Nucleus(n)
    }

    /// Root flip and the two sections, expanding nucleus elements one level.
    fn expand(&self) -> (bool, Portrait, Portrait) {
        match self {
            Portrait::Nucleus(n) => match n {
                One => (false, ONE, ONE),
                A => (true, ONE, ONE),
                B => (false, Self::nuc(A), Self::nuc(C)),
                C => (false, Self::nuc(A), Self::nuc(D)),
                D => (false, ONE, Self::nuc(B)),
            },
            Portrait::Split { flip, left, right } => (*flip, (**left).clone(), (**right).clone()),
        }
    }

    /// Builds a portrait, collapsing to a nucleus element when possible.
    fn split(flip: bool, left: Portrait, right: Portrait) -> Portrait {
        use Portrait::Nucleus as N;
        match (flip, &left, &right) {
            (false, N(One), N(One)) => ONE,
            (true, N(One), N(One)) => Self::nuc(A),
            (false, N(A), N(C)) => Self::nuc(B),
            (false, N(A), N(D)) => Self::nuc(C),
            (false, N(One), N(B)) => Self::nuc(D),
            _ => Portrait::Split { flip, left: Arc::new(left), right: Arc::new(right) },
        }
    }

    /// Depth of the portrait tree; nucleus elements have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Portrait::Nucleus(_) => 0,
            Portrait::Split { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }

    /// Image of a finite binary word under the element.
    pub fn act(&self, word: &[bool]) -> Vec<bool> {
        let mut out = Vec::with_capacity(word.len());
        let mut g = self.clone();
        for &x in word {
            let (f, l, r) = g.expand();
            out.push(x ^ f);
            g = if x { r } else { l };
        }
        out
    }
}

fn klein(x: Nucleus, y: Nucleus) -> Option<Nucleus> {
    let idx = |n| match n {
        B => 1u8,
        C => 2,
        D => 3,
        _ => 0,
    };
    if idx(x) == 0 || idx(y) == 0 {
        return None;
    }
    Some(match idx(x) ^ idx(y) {
        0 => One,
        1 => B,
        2 => C,
        _ => D,
    })
}

fn mul(g: &Portrait, h: &Portrait) -> Portrait {
    if let Portrait::Nucleus(One) = g {
        return h.clone();
    }
    if let Portrait::Nucleus(One) = h {
        return g.clone();
    }
    if let (Portrait::Nucleus(x), Portrait::Nucleus(y)) = (g, h) {
        if *x == A && *y == A {
            return ONE;
        }
        if let Some(z) = klein(*x, *y) {
            return Portrait::nuc(z);
        }
    }
    let (fg, g0, g1) = g.expand();
    let (fh, h0, h1) = h.expand();
    // (gh)(xw) = g(h(xw)): the section at x is g_{h(x)} h_x.
    let (k0, k1) = if fh { (mul(&g1, &h0), mul(&g0, &h1)) } else { (mul(&g0, &h0), mul(&g1, &h1)) };
    Portrait::split(fg ^ fh, k0, k1)
}

fn inv(g: &Portrait) -> Portrait {
    match g {
        Portrait::Nucleus(_) => g.clone(),
        Portrait::Split { flip, left, right } => {
            // g^-1 at x is (g_{g^-1(x)})^-1.
            if *flip {
                Portrait::split(true, inv(right), inv(left))
            } else {
                Portrait::split(false, inv(left), inv(right))
            }
        }
    }
}

fn write_portrait(p: &Portrait, out: &mut String) {
    match p {
        Portrait::Nucleus(n) => out.push(match n {
            One => '1',
            A => 'a',
            B => 'b',
            C => 'c',
            D => 'd',
        }),
        Portrait::Split { flip, left, right } => {
            if *flip {
                out.push('s');
            }
            out.push('(');
            write_portrait(left, out);
            out.push(',');
            write_portrait(right, out);
            out.push(')');
        }
    }
}

struct PortraitParser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl PortraitParser<'_> {
    fn parse(&mut self) -> Option<Portrait> {
        let c = *self.chars.get(self.pos)?;
        self.pos += 1;
        match c {
            '1' => Some(ONE),
            'a' => Some(Portrait::nuc(A)),
            'b' => Some(Portrait::nuc(B)),
            'c' => Some(Portrait::nuc(C)),
            'd' => Some(Portrait::nuc(D)),
            's' | '(' => {
                let flip = c == 's';
                if flip {
                    if self.chars.get(self.pos) != Some(&'(') {
                        return None;
                    }
                    self.pos += 1;
                }
                let l = self.parse()?;
                if self.chars.get(self.pos) != Some(&',') {
                    return None;
                }
                self.pos += 1;
                let r = self.parse()?;
                if self.chars.get(self.pos) != Some(&')') {
                    return None;
                }
                self.pos += 1;
                Some(Portrait::split(flip, l, r))
            }
            _ => None,
        }
    }
}

/// The Grigorchuk group with generators `a, b, c, d`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Grigorchuk;

impl Grigorchuk {
    pub fn a(&self) -> Portrait {
        Portrait::nuc(A)
    }
    pub fn b(&self) -> Portrait {
        Portrait::nuc(B)
    }
    pub fn c(&self) -> Portrait {
        Portrait::nuc(C)
    }
    pub fn d(&self) -> Portrait {
        Portrait::nuc(D)
    }
}

impl Group for Grigorchuk {
    type Elem = Portrait;

    fn name(&self) -> String {
        "grigorchuk".into()
    }

    fn identity(&self) -> Portrait {
        ONE
    }

    fn mul(&self, a: &Portrait, b: &Portrait) -> Portrait {
        mul(a, b)
    }

    fn inv(&self, a: &Portrait) -> Portrait {
        inv(a)
    }

    fn generators(&self) -> Vec<Portrait> {
        vec![self.a(), self.b(), self.c(), self.d()]
    }

    fn info(&self) -> FamilyInfo {
        FamilyInfo {
            finite: false,
            abelian: Some(false),
            virtually_abelian: Some(false),
            torsion: Some(true),
            generalized_dicyclic: Some(false),
            generalized_dihedral: Some(false),
        }
    }

    /// Portrait notation: `1`, `a`..`d`, `(L,R)` or `s(L,R)` when the root is
    /// swapped.
    fn format(&self, e: &Portrait) -> String {
        let mut s = String::new();
        write_portrait(e, &mut s);
        s
    }

    /// Accepts portrait notation or a word over `a, b, c, d`.
    fn parse(&self, text: &str) -> Result<Portrait> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.contains(&'(') {
            let mut p = PortraitParser { chars: &chars, pos: 0 };
            return match p.parse() {
                Some(e) if p.pos == chars.len() => Ok(e),
                _ => Err(Error::ParseElement {
                    group: self.name(),
                    text: text.into(),
                    reason: "malformed portrait".into(),
                }),
            };
        }
        super::parse_letter_word(self, text, &[('a', self.a()), ('b', self.b()), ('c', self.c()), ('d', self.d())])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::testutil::check_axioms;
    use rand::{Rng, SeedableRng};

    fn random_word(g: &Grigorchuk, len: usize, rng: &mut impl Rng) -> Portrait {
        let gens = g.generators();
        (0..len).fold(g.identity(), |acc, _| g.mul(&acc, &gens[rng.gen_range(0..4)]))
    }

    #[test]
    fn defining_relations() {
        let g = Grigorchuk;
        for w in ["aa", "bb", "cc", "dd", "bcd", "(ad)^4", "(ac)^8", "(ab)^16"] {
            let e = if let Some(inner) = w.strip_prefix('(') {
                let (word, k) = inner.split_once(")^").unwrap();
                g.pow(&g.parse(word).unwrap(), k.parse().unwrap())
            } else {
                g.parse(w).unwrap()
            };
            assert!(g.is_identity(&e), "{w}");
        }
        assert_eq!(g.element_order(&g.parse("ab").unwrap(), 100), Some(16));
        assert_eq!(g.element_order(&g.parse("ac").unwrap(), 100), Some(8));
        assert_eq!(g.element_order(&g.parse("ad").unwrap(), 100), Some(4));
    }

    #[test]
    fn axioms_and_action() {
        let g = Grigorchuk;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let pool: Vec<_> = (0..150).map(|_| random_word(&g, rng.gen_range(0..30), &mut rng)).collect();
        check_axioms(&g, &pool, 10_000, &mut rng);
        // The portrait product agrees with composing tree actions.
        for _ in 0..500 {
            let x = &pool[rng.gen_range(0..pool.len())];
            let y = &pool[rng.gen_range(0..pool.len())];
            let w: Vec<bool> = (0..12).map(|_| rng.gen()).collect();
            assert_eq!(g.mul(x, y).act(&w), x.act(&y.act(&w)));
        }
    }

    #[test]
    fn format_round_trip() {
        let g = Grigorchuk;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        for _ in 0..300 {
            let e = random_word(&g, rng.gen_range(0..40), &mut rng);
            assert_eq!(g.parse(&g.format(&e)).unwrap(), e);
        }
        assert_eq!(g.format(&g.parse("ab").unwrap()), "s(a,c)");
    }
}
