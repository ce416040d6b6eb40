use super::{FamilyInfo, Group};
use crate::error::{Error, Result};

/// Free group on `rank` generators. Elements are freely reduced words; letter
/// `i + 1` is generator `i` and `-(i + 1)` its inverse.
#[derive(Clone, Copy, Debug)]
pub struct FreeGroup {
    rank: u8,
}

impl FreeGroup {
    pub fn new(rank: u8) -> Result<Self> {
        if rank == 0 || rank > 26 {
            return Err(Error::Unsupported(format!("free group rank {rank}")));
        }
        Ok(FreeGroup { rank })
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn gen(&self, i: u8) -> Vec<i8> {
        vec![i as i8 + 1]
    }

    /// Whether `g` is a power of `w`. Exact: in a free group `|w^k| >= |k|`
    /// for `w != 1`, so only exponents up to `|g|` need checking.
    pub fn is_power_of(&self, g: &[i8], w: &[i8]) -> bool {
        if w.is_empty() {
            return g.is_empty();
        }
        let bound = g.len() as i64 + 1;
        (-bound..=bound).any(|k| self.pow(&w.to_vec(), k) == g)
    }
}

fn letter_char(l: i8) -> char {
    let c = (b'a' + (l.unsigned_abs() - 1)) as char;
    if l < 0 {
        c.to_ascii_uppercase()
    } else {
        c
    }
}

impl Group for FreeGroup {
    type Elem = Vec<i8>;

    fn name(&self) -> String {
        format!("free:{}", self.rank)
    }

    fn identity(&self) -> Vec<i8> {
        Vec::new()
    }

    fn mul(&self, a: &Vec<i8>, b: &Vec<i8>) -> Vec<i8> {
        let mut cancel = 0;
        while cancel < a.len() && cancel < b.len() && a[a.len() - 1 - cancel] == -b[cancel] {
            cancel += 1;
        }
        let mut out = Vec::with_capacity(a.len() + b.len() - 2 * cancel);
        out.extend_from_slice(&a[..a.len() - cancel]);
        out.extend_from_slice(&b[cancel..]);
        out
    }

    fn inv(&self, a: &Vec<i8>) -> Vec<i8> {
        a.iter().rev().map(|l| -l).collect()
    }

    fn generators(&self) -> Vec<Vec<i8>> {
        (0..self.rank).map(|i| self.gen(i)).collect()
    }

    fn info(&self) -> FamilyInfo {
        let abelian = self.rank == 1;
        FamilyInfo {
            finite: false,
            abelian: Some(abelian),
            virtually_abelian: Some(abelian),
            torsion: Some(false),
            generalized_dicyclic: Some(false),
            generalized_dihedral: Some(false),
        }
    }

    fn format(&self, e: &Vec<i8>) -> String {
        if e.is_empty() {
            return "1".into();
        }
        e.iter().map(|&l| letter_char(l)).collect()
    }

    fn parse(&self, text: &str) -> Result<Vec<i8>> {
        let letters: Vec<(char, Vec<i8>)> = (0..self.rank).map(|i| ((b'a' + i) as char, self.gen(i))).collect();
        super::parse_letter_word(self, text, &letters)
    }

    fn has_infinite_order(&self, e: &Vec<i8>) -> Option<bool> {
        Some(!e.is_empty())
    }
}
