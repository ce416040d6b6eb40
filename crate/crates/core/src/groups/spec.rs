//! Group spec strings and a type-erased group wrapper.

use std::path::Path;

use super::library;
use super::{
    FamilyInfo, FiniteGroup, FreeAbelian, FreeGroup, Grigorchuk, Group, Heisenberg, InfiniteDihedral, Lamplighter,
    TableJson,
};
use crate::error::{Error, Result};

/// Any group the crate can be asked about, as selected by a spec string.
#[derive(Clone, Debug)]
pub enum AnyGroup {
    Finite(FiniteGroup),
    Heisenberg(Heisenberg),
    Lamplighter(Lamplighter),
    Free(FreeGroup),
    Dinf(InfiniteDihedral),
    FreeAbelian(FreeAbelian),
    Grigorchuk(Grigorchuk),
}

/// Runs `$body` with `$g` bound to the concrete group inside an [`AnyGroup`].
#[macro_export]
macro_rules! with_group {
    ($any:expr, $g:ident => $body:expr) => {
        match $any {
            $crate::groups::AnyGroup::Finite($g) => $body,
            $crate::groups::AnyGroup::Heisenberg($g) => $body,
            $crate::groups::AnyGroup::Lamplighter($g) => $body,
            $crate::groups::AnyGroup::Free($g) => $body,
            $crate::groups::AnyGroup::Dinf($g) => $body,
            $crate::groups::AnyGroup::FreeAbelian($g) => $body,
            $crate::groups::AnyGroup::Grigorchuk($g) => $body,
        }
    };
}

fn param<T: std::str::FromStr>(spec: &str, value: &str) -> Result<T> {
    value.trim().parse().map_err(|_| Error::UnknownGroup(spec.to_string()))
}

impl AnyGroup {
    /// Parses a spec string. Accepted forms:
    ///
    /// * infinite families: `heisenberg`, `grigorchuk`, `lamplighter`,
    ///   `free:k`, `dinf`, `zd:d`;
    /// * finite families: `cyclic:n`, `dihedral:N` (order `N`), `q8`,
    ///   `elementary2:k`, `abelian:n1,n2,..`, `symmetric:n`,
    ///   `alternating:n`, `dicyclic:N` (order `N`);
    /// * exception-list models by id, e.g. `exceptional:16,6` or
    ///   `exceptional:ORR16a`;
    /// * `table:<file.json>` and `perms:<file>`;
    /// * direct products of finite specs joined by `*`.
    pub fn from_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if spec.contains('*') {
            let mut parts = spec.split('*');
            let first = Self::finite_from_spec(parts.next().unwrap())?;
            let g = parts.try_fold(first, |acc, p| acc.direct_product(&Self::finite_from_spec(p)?))?;
            return Ok(AnyGroup::Finite(g.with_name(spec)));
        }
        let (head, arg) = match spec.split_once(':') {
            Some((h, a)) => (h.trim().to_lowercase(), Some(a)),
            None => (spec.to_lowercase(), None),
        };
        let need = || arg.ok_or_else(|| Error::UnknownGroup(format!("{spec} (missing parameter)")));
        let finite = |g: Result<FiniteGroup>| -> Result<AnyGroup> { Ok(AnyGroup::Finite(g?.with_name(spec))) };
        match head.as_str() {
            "heisenberg" => Ok(AnyGroup::Heisenberg(Heisenberg)),
            "grigorchuk" => Ok(AnyGroup::Grigorchuk(Grigorchuk)),
            "lamplighter" => Ok(AnyGroup::Lamplighter(Lamplighter)),
            "dinf" => Ok(AnyGroup::Dinf(InfiniteDihedral)),
            "free" => Ok(AnyGroup::Free(FreeGroup::new(param(spec, need()?)?)?)),
            "zd" => Ok(AnyGroup::FreeAbelian(FreeAbelian::new(param(spec, need()?)?)?)),
            "cyclic" => finite(library::cyclic(param(spec, need()?)?)),
            "dihedral" => finite(library::dihedral(param(spec, need()?)?)),
            "q8" => finite(Ok(library::quaternion())),
            "elementary2" => finite(library::elementary2(param(spec, need()?)?)),
            "symmetric" => finite(library::symmetric(param(spec, need()?)?)),
            "alternating" => finite(library::alternating(param(spec, need()?)?)),
            "dicyclic" => finite(library::dicyclic(param(spec, need()?)?)),
            "abelian" => {
                let inv: Vec<u32> = need()?.split(',').map(|x| param(spec, x)).collect::<Result<_>>()?;
                finite(library::abelian(&inv))
            }
            "exceptional" => {
                let e = library::exceptional_by_id(need()?).ok_or_else(|| Error::UnknownGroup(spec.to_string()))?;
                finite(e.model())
            }
            "table" => {
                let path = need()?;
                let tj: TableJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                Ok(AnyGroup::Finite(FiniteGroup::from_table(file_stem(path), &tj)?))
            }
            "perms" => {
                let path = need()?;
                let text = std::fs::read_to_string(path)?;
                Ok(AnyGroup::Finite(FiniteGroup::from_perm_text(file_stem(path), &text)?))
            }
            _ => Err(Error::UnknownGroup(spec.to_string())),
        }
    }

    fn finite_from_spec(spec: &str) -> Result<FiniteGroup> {
        match Self::from_spec(spec)? {
            AnyGroup::Finite(g) => Ok(g),
            _ => Err(Error::Unsupported(format!("direct product factor `{spec}` must be finite"))),
        }
    }

    pub fn name(&self) -> String {
        with_group!(self, g => g.name())
    }

    pub fn info(&self) -> FamilyInfo {
        with_group!(self, g => g.info())
    }

    pub fn order(&self) -> Option<usize> {
        with_group!(self, g => g.order())
    }

    pub fn as_finite(&self) -> Option<&FiniteGroup> {
        match self {
            AnyGroup::Finite(g) => Some(g),
            _ => None,
        }
    }
}

fn file_stem(path: &str) -> String {
    Path::new(path).file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| path.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_specs() {
        for (spec, order) in [
            ("cyclic:5", Some(5)),
            ("dihedral:8", Some(8)),
            ("q8", Some(8)),
            ("elementary2:5", Some(32)),
            ("symmetric:4", Some(24)),
            ("alternating:4", Some(12)),
            ("dicyclic:12", Some(12)),
            ("abelian:4,2", Some(8)),
            ("exceptional:16,6", Some(16)),
            ("q8*cyclic:3", Some(24)),
            ("heisenberg", None),
            ("grigorchuk", None),
            ("lamplighter", None),
            ("free:2", None),
            ("dinf", None),
            ("zd:2", None),
        ] {
            let g = AnyGroup::from_spec(spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
            assert_eq!(g.order(), order, "{spec}");
        }
    }

    #[test]
    fn bad_specs() {
        for spec in ["", "cyclic", "cyclic:x", "nonsense", "free:0", "dinf*q8", "exceptional:[99,1]"] {
            assert!(AnyGroup::from_spec(spec).is_err(), "{spec}");
        }
    }

    #[test]
    fn files() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("s3.txt");
        std::fs::write(&p, "# S3\n(1,2)\n(1,2,3)\n").unwrap();
        let g = AnyGroup::from_spec(&format!("perms:{}", p.display())).unwrap();
        assert_eq!(g.order(), Some(6));
        let t = dir.path().join("z3.json");
        std::fs::write(&t, r#"{"order":3,"table":[[0,1,2],[1,2,0],[2,0,1]]}"#).unwrap();
        let g = AnyGroup::from_spec(&format!("table:{}", t.display())).unwrap();
        assert_eq!(g.order(), Some(3));
        assert!(AnyGroup::from_spec("table:/nonexistent.json").is_err());
    }
}
