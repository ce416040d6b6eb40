//! Finite presentations of small groups and isomorphism search against them.
//!
//! Relators are written with single-letter generators, upper case for
//! inverses, `(w)^k` for powers, `[u,v] = u^-1 v^-1 u v` for commutators and
//! `u=v=...` for chains of equalities.

use super::{FiniteGroup, Group};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Factor {
    Letter { index: usize, inverse: bool },
    Group(Vec<(Factor, i64)>),
    Commutator(Vec<(Factor, i64)>, Vec<(Factor, i64)>),
}

type Word = Vec<(Factor, i64)>;

/// A parsed relation: every listed word must evaluate to the same element
/// (a single word must evaluate to the identity).
#[derive(Clone, Debug)]
struct Relation {
    sides: Vec<Word>,
    letters: u32,
}

/// A presentation together with the order of the group it defines.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<char>,
    pub relators: Vec<String>,
    pub order: usize,
    parsed: Vec<Relation>,
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    gens: &'a [char],
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let start = self.pos;
        if matches!(self.peek(), Some('-') | Some('+')) {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| Error::Malformed(format!("bad exponent in relator at {start}")))
    }

    fn word(&mut self, stop: &[char]) -> Result<Word> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            if stop.contains(&c) {
                break;
            }
            self.pos += 1;
            let factor = match c {
                '1' => continue,
                '(' => {
                    let w = self.word(&[')'])?;
                    self.expect(')')?;
                    Factor::Group(w)
                }
                '[' => {
                    let u = self.word(&[','])?;
                    self.expect(',')?;
                    let v = self.word(&[']'])?;
                    self.expect(']')?;
                    Factor::Commutator(u, v)
                }
                c if c.is_ascii_alphabetic() => {
                    let index = self
                        .gens
                        .iter()
                        .position(|&g| g == c.to_ascii_lowercase())
                        .ok_or_else(|| Error::Malformed(format!("unknown generator `{c}` in relator")))?;
                    Factor::Letter { index, inverse: c.is_ascii_uppercase() }
                }
                _ => return Err(Error::Malformed(format!("unexpected `{c}` in relator"))),
            };
            let e = self.exponent()?;
            out.push((factor, e));
        }
        Ok(out)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Malformed(format!("expected `{c}` in relator")))
        }
    }
}

fn letters_of(w: &Word, acc: &mut u32) {
    for (f, _) in w {
        match f {
            Factor::Letter { index, .. } => *acc |= 1 << index,
            Factor::Group(v) => letters_of(v, acc),
            Factor::Commutator(u, v) => {
                letters_of(u, acc);
                letters_of(v, acc);
            }
        }
    }
}

fn eval_word<G: Group>(g: &G, images: &[G::Elem], w: &Word) -> G::Elem {
    let mut acc = g.identity();
    for (f, e) in w {
        let base = match f {
            Factor::Letter { index, inverse } => {
                if *inverse {
                    g.inv(&images[*index])
                } else {
                    images[*index].clone()
                }
            }
            Factor::Group(v) => eval_word(g, images, v),
            Factor::Commutator(u, v) => {
                let (x, y) = (eval_word(g, images, u), eval_word(g, images, v));
                g.mul(&g.mul(&g.inv(&x), &g.inv(&y)), &g.mul(&x, &y))
            }
        };
        acc = g.mul(&acc, &g.pow(&base, *e));
    }
    acc
}

impl Presentation {
    /// Parses relators over the generator letters. `order` is the order of the
    /// presented group, which must be known independently.
    pub fn new(generators: &[char], relators: &[&str], order: usize) -> Result<Self> {
        if generators.len() > 16 {
            return Err(Error::Unsupported("more than 16 generators".into()));
        }
        let mut parsed = Vec::new();
        for r in relators {
            let text: String = r.chars().filter(|c| !c.is_whitespace()).collect();
            let mut sides = Vec::new();
            let mut letters = 0;
            for side in text.split('=') {
                let mut p = Parser { chars: side.chars().collect(), pos: 0, gens: generators };
                let w = p.word(&[])?;
                if p.pos != p.chars.len() {
                    return Err(Error::Malformed(format!("trailing input in relator `{r}`")));
                }
                letters_of(&w, &mut letters);
                sides.push(w);
            }
            parsed.push(Relation { sides, letters });
        }
        Ok(Presentation {
            generators: generators.to_vec(),
            relators: relators.iter().map(|s| s.to_string()).collect(),
            order,
            parsed,
        })
    }

    fn relation_holds<G: Group>(&self, g: &G, images: &[G::Elem], rel: &Relation) -> bool {
        let first = eval_word(g, images, &rel.sides[0]);
        if rel.sides.len() == 1 {
            return g.is_identity(&first);
        }
        rel.sides[1..].iter().all(|w| eval_word(g, images, w) == first)
    }

    /// Whether `images` (one per generator) satisfy every relation.
    pub fn satisfied_by<G: Group>(&self, g: &G, images: &[G::Elem]) -> bool {
        images.len() == self.generators.len() && self.parsed.iter().all(|r| self.relation_holds(g, images, r))
    }

    /// Searches for generator images in `g` that satisfy the relations and
    /// generate `g`. When `|g|` equals the order of the presented group such
    /// images define an isomorphism.
    pub fn find_isomorphism(&self, g: &FiniteGroup) -> Option<Vec<u32>> {
        if g.len() != self.order {
            return None;
        }
        let k = self.generators.len();
        let mut images = vec![0u32; k];
        self.extend(g, &mut images, 0)
    }

    fn extend(&self, g: &FiniteGroup, images: &mut Vec<u32>, depth: usize) -> Option<Vec<u32>> {
        let k = self.generators.len();
        if depth == k {
            return (g.subgroup(images).len() == g.len()).then(|| images.clone());
        }
        let assigned: u32 = (1 << (depth + 1)) - 1;
        let newly = 1 << depth;
        for cand in 0..g.len() as u32 {
            images[depth] = cand;
            let ok = self
                .parsed
                .iter()
                .filter(|r| r.letters & newly != 0 && r.letters & !assigned == 0)
                .all(|r| self.relation_holds(g, &images[..], r));
            if ok {
                if let Some(found) = self.extend(g, images, depth + 1) {
                    return Some(found);
                }
            }
        }
        None
    }
}
