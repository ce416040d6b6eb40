use std::collections::HashMap;

use serde::Serialize;

use super::graph::Graph;
use super::search::{automorphism_group, stabilizer_witness, AutomorphismGroup};
use crate::cayley::{build_digraph, build_graph, CayleyGraph, DEFAULT_VERTEX_BUDGET};
use crate::error::{Error, Result};
use crate::groups::classify::Mode;
use crate::groups::Group;
use crate::set::SymmetricSet;

/// Left translations `v -> h v` for each `h` in `by`, as vertex permutations.
pub fn translations<G: Group>(group: &G, c: &CayleyGraph<G::Elem>, by: &[G::Elem]) -> Vec<Vec<u32>> {
    by.iter().map(|h| c.vertices.iter().map(|v| c.index_of(&group.mul(h, v)).unwrap() as u32).collect()).collect()
}

/// Outcome of a regularity check.
#[derive(Clone, Debug, Serialize)]
pub struct RegularityReport {
    pub mode: Mode,
    pub group: String,
    pub order: usize,
    pub set: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_grr: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_drr: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_orr: Option<bool>,
    /// `S ∩ S^-1 = ∅`; reported for oriented checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oriented: Option<bool>,
    pub aut_order: String,
    pub stabilizer_order: String,
    /// A non-identity automorphism fixing `1`, listed on moved vertices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<(String, String)>>,
    pub automorphisms: AutomorphismGroup,
}

impl RegularityReport {
    pub fn regular(&self) -> bool {
        self.is_grr.or(self.is_drr).or(self.is_orr).unwrap_or(false)
    }
}

fn check_input<G: Group>(group: &G, set: &SymmetricSet<G::Elem>, mode: Mode) -> Result<()> {
    match set.generates_finite(group) {
        None => Err(Error::ScopeRequired(format!("{} is infinite; verification needs a finite group", group.name()))),
        Some(false) => Err(Error::InvalidSet("the set does not generate the group".into())),
        Some(true) if mode == Mode::Grr && !set.is_symmetric() => {
            Err(Error::InvalidSet("a graphical check needs a symmetric set".into()))
        }
        Some(true) => Ok(()),
    }
}

fn cayley<G: Group>(group: &G, set: &SymmetricSet<G::Elem>, mode: Mode) -> Result<CayleyGraph<G::Elem>> {
    match mode {
        Mode::Grr => build_graph(group, set, None, DEFAULT_VERTEX_BUDGET),
        Mode::Drr | Mode::Orr => build_digraph(group, set, None, DEFAULT_VERTEX_BUDGET),
    }
}

fn oriented<G: Group>(group: &G, set: &SymmetricSet<G::Elem>) -> bool {
    set.elems().iter().all(|s| !set.contains(&group.inv(s)))
}

/// Computes the full automorphism group of Cay(G,S) (graph for
/// [`Mode::Grr`], digraph otherwise) and reports whether its vertex
/// stabilizers are trivial. For [`Mode::Orr`] the set must also avoid its
/// own inverses.
pub fn verify<G: Group>(group: &G, set: &SymmetricSet<G::Elem>, mode: Mode) -> Result<RegularityReport> {
    check_input(group, set, mode)?;
    let c = cayley(group, set, mode)?;
    let graph = Graph::from_cayley(&c)?;
    let seeds = translations(group, &c, set.elems());
    let aut = automorphism_group(&graph, &seeds)?;
    let stab = aut.stabilizer_order();
    let trivial = stab == 1u32.into();
    let witness = (!trivial).then(|| {
        let p = stabilizer_witness(&graph, 0).expect("non-trivial stabilizer has a witness");
        moved(group, &c, &p)
    });
    let orient = (mode == Mode::Orr).then(|| oriented(group, set));
    let flag = |m: Mode| (mode == m).then_some(trivial && orient.unwrap_or(true));
    Ok(RegularityReport {
        mode,
        group: group.name(),
        order: c.len(),
        set: set.format(group),
        is_grr: flag(Mode::Grr),
        is_drr: flag(Mode::Drr),
        is_orr: flag(Mode::Orr),
        oriented: orient,
        aut_order: aut.order.to_string(),
        stabilizer_order: stab.to_string(),
        witness,
        automorphisms: aut,
    })
}

/// Regularity only, stopping at the first non-trivial stabilizer element.
pub fn is_regular<G: Group>(group: &G, set: &SymmetricSet<G::Elem>, mode: Mode) -> Result<bool> {
    check_input(group, set, mode)?;
    if mode == Mode::Orr && !oriented(group, set) {
        return Ok(false);
    }
    let c = cayley(group, set, mode)?;
    Ok(stabilizer_witness(&Graph::from_cayley(&c)?, 0).is_none())
}

pub fn verify_grr<G: Group>(group: &G, set: &SymmetricSet<G::Elem>) -> Result<RegularityReport> {
    verify(group, set, Mode::Grr)
}

pub fn verify_drr<G: Group>(group: &G, set: &SymmetricSet<G::Elem>) -> Result<RegularityReport> {
    verify(group, set, Mode::Drr)
}

pub fn verify_orr<G: Group>(group: &G, set: &SymmetricSet<G::Elem>) -> Result<RegularityReport> {
    verify(group, set, Mode::Orr)
}

fn moved<G: Group>(group: &G, c: &CayleyGraph<G::Elem>, p: &[u32]) -> Vec<(String, String)> {
    p.iter()
        .enumerate()
        .filter(|(i, &x)| *i as u32 != x)
        .map(|(i, &x)| (group.format(&c.vertices[i]), group.format(&c.vertices[x as usize])))
        .collect()
}

/// Whether every automorphism of Cay(G,S2) is colour-preserving for `S1`:
/// `φ(gs) ∈ {φ(g)s, φ(g)s^-1}` for all `g` and `s ∈ S1`.
#[derive(Clone, Debug, Serialize)]
pub struct ColourReport {
    pub holds: bool,
    pub aut_order: String,
    pub generators_checked: usize,
    /// A violating automorphism, listed on moved vertices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Vec<(String, String)>>,
}

/// Colour-preserving automorphisms form a subgroup, so it suffices to test
/// a generating set of Aut(Cay(G,S2)).
pub fn colour_preserving_check<G: Group>(
    group: &G,
    s1: &SymmetricSet<G::Elem>,
    s2: &SymmetricSet<G::Elem>,
) -> Result<ColourReport> {
    if !s1.is_symmetric() {
        return Err(Error::InvalidSet("S1 must be symmetric".into()));
    }
    check_input(group, s2, Mode::Grr)?;
    let c = build_graph(group, s2, None, DEFAULT_VERTEX_BUDGET)?;
    let graph = Graph::from_cayley(&c)?;
    let aut = automorphism_group(&graph, &translations(group, &c, s2.elems()))?;
    let idx: HashMap<&G::Elem, usize> = c.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let preserves = |p: &[u32]| {
        c.vertices.iter().enumerate().all(|(i, g)| {
            let pg = &c.vertices[p[i] as usize];
            s1.elems().iter().all(|s| {
                let img = &c.vertices[p[idx[&group.mul(g, s)]] as usize];
                *img == group.mul(pg, s) || *img == group.mul(pg, &group.inv(s))
            })
        })
    };
    let violation = aut.generators.iter().find(|p| !preserves(p)).map(|p| moved(group, &c, p));
    Ok(ColourReport {
        holds: violation.is_none(),
        aut_order: aut.order.to_string(),
        generators_checked: aut.generators.len(),
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library;

    #[test]
    fn small_cases() {
        let z4 = library::cyclic(4).unwrap();
        let s = SymmetricSet::new(&z4, vec![1, 3], true).unwrap();
        let r = verify_grr(&z4, &s).unwrap();
        assert_eq!(r.aut_order, "8");
        assert_eq!(r.is_grr, Some(false));
        assert!(r.witness.is_some());

        let s = SymmetricSet::new(&z4, vec![1], false).unwrap();
        let r = verify_drr(&z4, &s).unwrap();
        assert_eq!(r.aut_order, "4");
        assert_eq!(r.is_drr, Some(true));
        assert_eq!(verify_orr(&z4, &s).unwrap().is_orr, Some(true));

        let s = SymmetricSet::new(&z4, vec![1, 3], false).unwrap();
        assert_eq!(verify_orr(&z4, &s).unwrap().is_orr, Some(false));
    }

    #[test]
    fn rejects_non_generating() {
        let z4 = library::cyclic(4).unwrap();
        let s = SymmetricSet::new(&z4, vec![2], true).unwrap();
        assert!(matches!(verify_grr(&z4, &s), Err(Error::InvalidSet(_))));
    }

    #[test]
    fn translations_commute_with_graph() {
        let d = library::dihedral(8).unwrap();
        let s = SymmetricSet::symmetric_closure(&d, &[d.parse("r").unwrap(), d.parse("s").unwrap()]);
        let r = verify_grr(&d, &s).unwrap();
        // The 4-prism is the cube graph.
        assert_eq!(r.aut_order, "48");
        assert!(!is_regular(&d, &s, Mode::Grr).unwrap());
    }
}
