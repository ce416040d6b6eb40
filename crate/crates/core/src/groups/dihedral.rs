use super::{parse_letter_word, FamilyInfo, Group};
use crate::error::Result;

/// Isometry `x -> (flip ? -x : x) + shift` of the integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    pub shift: i64,
    pub flip: bool,
}

/// Infinite dihedral group, realised as the isometries of Z. Composition is
/// `(f g)(x) = f(g(x))`.
#[derive(Clone, Copy, Debug, Default)]
pub struct InfiniteDihedral;

impl InfiniteDihedral {
    /// Translation by one.
    pub fn r(&self) -> DihedralElement {
        DihedralElement { shift: 1, flip: false }
    }

    /// Reflection through 0.
    pub fn s(&self) -> DihedralElement {
        DihedralElement { shift: 0, flip: true }
    }

    /// Membership in the index-2 rotation subgroup.
    pub fn is_rotation(&self, e: &DihedralElement) -> bool {
        !e.flip
    }
}

impl Group for InfiniteDihedral {
    type Elem = DihedralElement;

    fn name(&self) -> String {
        "dinf".into()
    }

    fn identity(&self) -> DihedralElement {
        DihedralElement { shift: 0, flip: false }
    }

    fn mul(&self, a: &DihedralElement, b: &DihedralElement) -> DihedralElement {
        let s = if a.flip { -b.shift } else { b.shift };
        DihedralElement { shift: s + a.shift, flip: a.flip ^ b.flip }
    }

    fn inv(&self, a: &DihedralElement) -> DihedralElement {
        if a.flip {
            *a
        } else {
            DihedralElement { shift: -a.shift, flip: false }
        }
    }

    fn generators(&self) -> Vec<DihedralElement> {
        vec![self.r(), self.s()]
    }

    fn info(&self) -> FamilyInfo {
        FamilyInfo {
            finite: false,
            abelian: Some(false),
            virtually_abelian: Some(true),
            torsion: Some(false),
            generalized_dicyclic: Some(false),
            generalized_dihedral: Some(true),
        }
    }

    /// `r^k` or `r^k s`.
    fn format(&self, e: &DihedralElement) -> String {
        match (e.shift, e.flip) {
            (0, false) => "1".into(),
            (0, true) => "s".into(),
            (k, false) => format!("r^{k}"),
            (k, true) => format!("r^{k}s"),
        }
    }

    fn parse(&self, text: &str) -> Result<DihedralElement> {
        parse_letter_word(self, text, &[('r', self.r()), ('s', self.s())])
    }

    fn has_infinite_order(&self, e: &DihedralElement) -> Option<bool> {
        Some(!e.flip && e.shift != 0)
    }

    fn centralizer_locally_finite(&self, e: &DihedralElement) -> Option<bool> {
        // A reflection commutes only with itself and 1.
        Some(e.flip)
    }
}
