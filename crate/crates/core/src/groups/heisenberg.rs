use super::{parse_int_tuple, parse_letter_word, FamilyInfo, Group};
use crate::error::Result;

/// Integer Heisenberg group: upper unitriangular 3x3 integer matrices
/// `[[1,x,z],[0,1,y],[0,0,1]]`, stored as `[x, y, z]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Heisenberg;

impl Heisenberg {
    pub fn x(&self) -> [i64; 3] {
        [1, 0, 0]
    }

    pub fn y(&self) -> [i64; 3] {
        [0, 1, 0]
    }

    /// Central generator `[x, y]`.
    pub fn z(&self) -> [i64; 3] {
        [0, 0, 1]
    }
}

impl Group for Heisenberg {
    type Elem = [i64; 3];

    fn name(&self) -> String {
        "heisenberg".into()
    }

    fn identity(&self) -> [i64; 3] {
        [0, 0, 0]
    }

    fn mul(&self, a: &[i64; 3], b: &[i64; 3]) -> [i64; 3] {
        [a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]]
    }

    fn inv(&self, a: &[i64; 3]) -> [i64; 3] {
        [-a[0], -a[1], a[0] * a[1] - a[2]]
    }

    fn generators(&self) -> Vec<[i64; 3]> {
        vec![self.x(), self.y()]
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

    fn format(&self, e: &[i64; 3]) -> String {
        format!("[{},{},{}]", e[0], e[1], e[2])
    }

    fn parse(&self, text: &str) -> Result<[i64; 3]> {
        if let Some(v) = parse_int_tuple(text, '[', ']') {
            if v.len() == 3 {
                return Ok([v[0], v[1], v[2]]);
            }
        }
        parse_letter_word(self, text, &[('x', self.x()), ('y', self.y()), ('z', self.z())])
    }

    fn has_infinite_order(&self, e: &[i64; 3]) -> Option<bool> {
        Some(*e != [0, 0, 0])
    }
}
