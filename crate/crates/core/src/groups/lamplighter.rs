use super::{parse_letter_word, FamilyInfo, Group};
use crate::error::{Error, Result};

/// Element of the lamplighter group Z/2 wr Z: the finite set of lit lamps
/// (sorted) and the lamplighter position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LampElement {
    pub lamps: Vec<i64>,
    pub pos: i64,
}

/// `(f, m) (f', m') = (f + shift_m f', m + m')`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Lamplighter;

impl Lamplighter {
    /// Move right.
    pub fn t(&self) -> LampElement {
        LampElement { lamps: vec![], pos: 1 }
    }

    /// Toggle the lamp under the lamplighter.
    pub fn a(&self) -> LampElement {
        LampElement { lamps: vec![0], pos: 0 }
    }
}

/// Symmetric difference of two sorted sets, the second shifted by `shift`.
fn xor_shifted(a: &[i64], b: &[i64], shift: i64) -> Vec<i64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let bj = b.get(j).map(|x| x + shift);
        match (a.get(i), bj) {
            (Some(&x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(&x), Some(y)) if x < y => {
                out.push(x);
                i += 1;
            }
            (Some(_), Some(y)) => {
                out.push(y);
                j += 1;
            }
            (Some(&x), None) => {
                out.push(x);
                i += 1;
            }
            (None, Some(y)) => {
                out.push(y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

impl Group for Lamplighter {
    type Elem = LampElement;

    fn name(&self) -> String {
        "lamplighter".into()
    }

    fn identity(&self) -> LampElement {
        LampElement { lamps: vec![], pos: 0 }
    }

    fn mul(&self, a: &LampElement, b: &LampElement) -> LampElement {
        LampElement { lamps: xor_shifted(&a.lamps, &b.lamps, a.pos), pos: a.pos + b.pos }
    }

    fn inv(&self, a: &LampElement) -> LampElement {
        LampElement { lamps: a.lamps.iter().map(|x| x - a.pos).collect(), pos: -a.pos }
    }

    fn generators(&self) -> Vec<LampElement> {
        vec![self.t(), self.a()]
    }

    fn info(&self) -> FamilyInfo {
        FamilyInfo {
            finite: false,
            abelian: Some(false),
            virtually_abelian: Some(false),
            torsion: Some(false),
            generalized_dicyclic: Some(false),
            generalized_dihedral: Some(false),
        }
    }

    /// `[l1,l2,...;pos]`.
    fn format(&self, e: &LampElement) -> String {
        let lamps: Vec<String> = e.lamps.iter().map(|x| x.to_string()).collect();
        format!("[{};{}]", lamps.join(","), e.pos)
    }

    fn parse(&self, text: &str) -> Result<LampElement> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let bad = || Error::ParseElement {
                group: self.name(),
                text: text.into(),
                reason: "expected [l1,...;pos]".into(),
            };
            let (ls, p) = inner.split_once(';').ok_or_else(bad)?;
            let mut lamps: Vec<i64> = ls
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            lamps.sort_unstable();
            if lamps.windows(2).any(|w| w[0] == w[1]) {
                return Err(bad());
            }
            let pos = p.trim().parse().map_err(|_| bad())?;
            return Ok(LampElement { lamps, pos });
        }
        parse_letter_word(self, t, &[('t', self.t()), ('a', self.a())])
    }

    fn has_infinite_order(&self, e: &LampElement) -> Option<bool> {
        Some(e.pos != 0)
    }

    /// A pure lamp configuration commutes exactly with the lamp subgroup,
    /// which is locally finite; anything moving the lamplighter has infinite
    /// order.
    fn centralizer_locally_finite(&self, e: &LampElement) -> Option<bool> {
        if e.pos != 0 {
            Some(false)
        } else {
            Some(!e.lamps.is_empty())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::testutil::check_axioms;
    use rand::{Rng, SeedableRng};

    #[test]
    fn axioms() {
        let g = Lamplighter;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let gens = [g.t(), g.inv(&g.t()), g.a()];
        let pool: Vec<_> = (0..200)
            .map(|_| {
                let mut x = g.identity();
                for _ in 0..rng.gen_range(0..12) {
                    x = g.mul(&x, &gens[rng.gen_range(0..3)]);
                }
                x
            })
            .collect();
        check_axioms(&g, &pool, 10_000, &mut rng);
    }

    #[test]
    fn lamps_and_shift() {
        let g = Lamplighter;
        let e = g.parse("tatA").unwrap();
        assert_eq!(g.format(&e), "[1,2;2]");
        assert_eq!(g.parse("[2,1;2]").unwrap(), e);
        assert_eq!(g.element_order(&g.a(), 5), Some(2));
        assert_eq!(g.has_infinite_order(&e), Some(true));
    }
}
