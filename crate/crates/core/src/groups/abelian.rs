use super::{parse_int_tuple, FamilyInfo, Group};
use crate::error::{Error, Result};

/// Free abelian group Z^d, written additively as integer vectors.
#[derive(Clone, Copy, Debug)]
pub struct FreeAbelian {
    dim: usize,
}

impl FreeAbelian {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 || dim > 26 {
            return Err(Error::Unsupported(format!("Z^{dim}")));
        }
        Ok(FreeAbelian { dim })
    }

    pub fn basis(&self, i: usize) -> Vec<i64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }
}

impl Group for FreeAbelian {
    type Elem = Vec<i64>;

    fn name(&self) -> String {
        format!("zd:{}", self.dim)
    }

    fn identity(&self) -> Vec<i64> {
        vec![0; self.dim]
    }

    fn mul(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn inv(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    fn generators(&self) -> Vec<Vec<i64>> {
        (0..self.dim).map(|i| self.basis(i)).collect()
    }

    fn info(&self) -> FamilyInfo {
        FamilyInfo {
            finite: false,
            abelian: Some(true),
            virtually_abelian: Some(true),
            torsion: Some(false),
            generalized_dicyclic: Some(false),
            generalized_dihedral: Some(false),
        }
    }

    fn format(&self, e: &Vec<i64>) -> String {
        let parts: Vec<String> = e.iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    }

    fn parse(&self, text: &str) -> Result<Vec<i64>> {
        if let Some(v) = parse_int_tuple(text, '(', ')') {
            if v.len() == self.dim {
                return Ok(v);
            }
        }
        let letters: Vec<(char, Vec<i64>)> = (0..self.dim).map(|i| ((b'a' + i as u8) as char, self.basis(i))).collect();
        super::parse_letter_word(self, text, &letters)
    }

    fn has_infinite_order(&self, e: &Vec<i64>) -> Option<bool> {
        Some(e.iter().any(|&x| x != 0))
    }
}
