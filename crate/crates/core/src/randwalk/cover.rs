use std::collections::HashSet;

use serde::Serialize;

use crate::cayley::DEFAULT_VERTEX_BUDGET;
use crate::error::{Error, Result};
use crate::groups::{Ball, Group};

/// A coset `aH`, with `H` given by generators.
#[derive(Clone, Debug)]
pub struct CosetSpec<E> {
    pub rep: E,
    pub subgroup: Vec<E>,
}

/// Where the cover is checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverScope {
    /// Every element of a finite group.
    Full,
    /// The ball of the given radius for the declared generators. Subgroup
    /// membership is decided within the subgroup ball of radius
    /// `subgroup_radius` for its own generators, so a reported gap may be
    /// an element of `aH` with a long word in `H`.
    Ball { radius: usize, subgroup_radius: usize },
}

/// Quantities attached to a cover `G = sq⁻¹(1) ∪ s·sq⁻¹(1) ∪ a₁H₁ ∪ … ∪ aₘHₘ`.
#[derive(Clone, Debug, Serialize)]
pub struct CoverConstants {
    /// `(3 - √5)/4`.
    pub conjugacy_threshold: f64,
    /// `0.035`, a value of `α` satisfying `α < (1-α)³/24`.
    pub involution_threshold: f64,
    /// `4/(3 - √5 - 4α)²`, the bound on the conjugacy class of `s²` when
    /// `α` is below the conjugacy threshold.
    pub conjugacy_class_bound: Option<f64>,
    /// Whether `α < (1-α)³/24`.
    pub involution_condition: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub covers: bool,
    pub scope: CoverScope,
    pub checked: usize,
    /// First element of the scope outside the union.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uncovered: Option<String>,
    /// `1/|G:Hᵢ|` per coset; `None` when the index is unavailable.
    pub alpha_terms: Vec<Option<f64>>,
    /// `Σ 1/|G:Hᵢ|` when every term is known.
    pub alpha: Option<f64>,
    /// Uniform measure of `sq⁻¹(F) ∪ s·sq⁻¹(F)` on a finite group.
    pub fiber_measure: Option<f64>,
    /// `α` plus the fiber measure is at least one.
    pub counting_bound: Option<bool>,
    pub constants: CoverConstants,
}

pub fn constants(alpha: Option<f64>) -> CoverConstants {
    let t = (3.0 - 5f64.sqrt()) / 4.0;
    CoverConstants {
        conjugacy_threshold: t,
        involution_threshold: 0.035,
        conjugacy_class_bound: alpha.filter(|&a| a < t).map(|a| 4.0 / (3.0 - 5f64.sqrt() - 4.0 * a).powi(2)),
        involution_condition: alpha.map(|a| a < (1.0 - a).powi(3) / 24.0),
    }
}

fn closure<G: Group>(group: &G, gens: &[G::Elem]) -> HashSet<G::Elem> {
    let mut seen = HashSet::from([group.identity()]);
    let mut stack = vec![group.identity()];
    while let Some(x) = stack.pop() {
        for s in gens {
            let y = group.mul(&x, s);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen
}

/// Checks `G = sq⁻¹(F) ∪ s·sq⁻¹(F) ∪ a₁H₁ ∪ … ∪ aₘHₘ` on the scope. With
/// `s = None` only `sq⁻¹(F)` and the cosets are used.
pub fn coset_cover_check<G: Group>(
    group: &G,
    s: Option<&G::Elem>,
    fiber: &[G::Elem],
    cosets: &[CosetSpec<G::Elem>],
    scope: CoverScope,
) -> Result<CoverReport> {
    let (elements, subgroups): (Vec<G::Elem>, Vec<HashSet<G::Elem>>) = match scope {
        CoverScope::Full => {
            let elements = group
                .elements()
                .ok_or_else(|| Error::ScopeRequired(format!("{} is infinite; use a ball scope", group.name())))?;
            (elements, cosets.iter().map(|c| closure(group, &c.subgroup)).collect())
        }
        CoverScope::Ball { radius, subgroup_radius } => {
            let ball = Ball::new(group, &group.generators(), radius, DEFAULT_VERTEX_BUDGET)?;
            let subs = cosets
                .iter()
                .map(|c| {
                    Ball::new(group, &c.subgroup, subgroup_radius, DEFAULT_VERTEX_BUDGET)
                        .map(|b| b.elements().cloned().collect())
                })
                .collect::<Result<_>>()?;
            (ball.elements().cloned().collect(), subs)
        }
    };
    let fiber: HashSet<G::Elem> = fiber.iter().cloned().collect();
    let s_inv = s.map(|s| group.inv(s));
    let in_fiber = |g: &G::Elem| {
        fiber.contains(&group.square(g))
            || s_inv.as_ref().is_some_and(|t| fiber.contains(&group.square(&group.mul(t, g))))
    };
    let reps_inv: Vec<G::Elem> = cosets.iter().map(|c| group.inv(&c.rep)).collect();
    let in_cosets = |g: &G::Elem| reps_inv.iter().zip(&subgroups).any(|(a, h)| h.contains(&group.mul(a, g)));
    let mut fibered = 0usize;
    let mut uncovered = None;
    for g in &elements {
        let f = in_fiber(g);
        fibered += f as usize;
        if !f && uncovered.is_none() && !in_cosets(g) {
            uncovered = Some(group.format(g));
        }
    }
    let finite = scope == CoverScope::Full;
    let n = elements.len() as f64;
    let alpha_terms: Vec<Option<f64>> = subgroups.iter().map(|h| finite.then(|| h.len() as f64 / n)).collect();
    let alpha = alpha_terms.iter().copied().sum::<Option<f64>>();
    let fiber_measure = finite.then(|| fibered as f64 / n);
    Ok(CoverReport {
        covers: uncovered.is_none(),
        scope,
        checked: elements.len(),
        uncovered,
        counting_bound: alpha.zip(fiber_measure).map(|(a, f)| a + f >= 1.0 - 1e-12),
        alpha_terms,
        alpha,
        fiber_measure,
        constants: constants(alpha),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{library, InfiniteDihedral};

    #[test]
    fn partition_of_z6() {
        let z6 = library::cyclic(6).unwrap();
        let cosets: Vec<_> = (0..3).map(|a| CosetSpec { rep: a, subgroup: vec![3] }).collect();
        let r = coset_cover_check(&z6, None, &[], &cosets, CoverScope::Full).unwrap();
        assert!(r.covers);
        assert!((r.alpha.unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(r.counting_bound, Some(true));
    }

    #[test]
    fn dihedral_squares() {
        let d = InfiniteDihedral;
        let scope = CoverScope::Ball { radius: 6, subgroup_radius: 12 };
        let r = coset_cover_check(&d, Some(&d.s()), &[d.identity()], &[], scope).unwrap();
        assert!(r.covers);
        assert_eq!(r.alpha, Some(0.0));
        assert!(r.constants.conjugacy_class_bound.is_some());
        let r = coset_cover_check(&d, None, &[d.identity()], &[], scope).unwrap();
        assert!(!r.covers);
    }

    #[test]
    fn infinite_needs_ball() {
        let d = InfiniteDihedral;
        assert!(coset_cover_check(&d, None, &[], &[], CoverScope::Full).is_err());
    }
}
