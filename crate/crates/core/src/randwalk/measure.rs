use std::collections::HashMap;

use rand::distributions::{Distribution, WeightedIndex};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groups::Group;

/// A finitely supported step distribution: symmetric, containing the
/// identity, with positive weights summing to one.
#[derive(Clone, Debug)]
pub struct StepMeasure<E> {
    support: Vec<E>,
    weights: Vec<f64>,
    sampler: WeightedIndex<f64>,
}

/// Printable form of a measure.
#[derive(Clone, Debug, Serialize)]
pub struct MeasureSummary {
    pub support: Vec<String>,
    pub weights: Vec<f64>,
}

impl<E: Clone + Eq + std::hash::Hash> StepMeasure<E> {
    /// Validates the standing assumptions. Weights are normalised if they
    /// sum to one within `1e-9`. Generation is checked for finite groups.
    pub fn new<G: Group<Elem = E>>(group: &G, support: Vec<E>, weights: Vec<f64>) -> Result<Self> {
        let bad = |m: &str| Err(Error::Malformed(format!("step measure: {m}")));
        if support.is_empty() || support.len() != weights.len() {
            return bad("support and weights must be non-empty and of equal length");
        }
        if weights.iter().any(|&w| !(w > 0.0 && w.is_finite())) {
            return bad("weights must be positive");
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return bad("weights must sum to 1");
        }
        let weights: Vec<f64> = weights.iter().map(|w| w / total).collect();
        let index: HashMap<&E, usize> = support.iter().enumerate().map(|(i, e)| (e, i)).collect();
        if index.len() != support.len() {
            return bad("repeated support element");
        }
        if !index.contains_key(&group.identity()) {
            return bad("the identity must be in the support");
        }
        for (i, e) in support.iter().enumerate() {
            match index.get(&group.inv(e)) {
                Some(&j) if (weights[i] - weights[j]).abs() <= 1e-12 => {}
                _ => return bad(&format!("not symmetric at {}", group.format(e))),
            }
        }
        if let Some(n) = group.order() {
            let mut seen = std::collections::HashSet::from([group.identity()]);
            let mut stack = vec![group.identity()];
            while let Some(x) = stack.pop() {
                for s in &support {
                    let y = group.mul(&x, s);
                    if seen.insert(y.clone()) {
                        stack.push(y);
                    }
                }
            }
            if seen.len() != n {
                return bad("the support does not generate the group");
            }
        }
        let sampler = WeightedIndex::new(&weights).map_err(|e| Error::Malformed(e.to_string()))?;
        Ok(StepMeasure { support, weights, sampler })
    }

    /// Uniform on `{1} ∪ S ∪ S^-1`.
    pub fn lazy_uniform<G: Group<Elem = E>>(group: &G, gens: &[E]) -> Result<Self> {
        let mut support = vec![group.identity()];
        for g in gens {
            for x in [g.clone(), group.inv(g)] {
                if !support.contains(&x) {
                    support.push(x);
                }
            }
        }
        let w = 1.0 / support.len() as f64;
        let n = support.len();
        Self::new(group, support, vec![w; n])
    }

    /// Uniform on `⟨s⟩ T ⟨s⟩` with `T = {1} ∪ S ∪ S^-1`, for an involution
    /// `s`. The result satisfies `μ(sg) = μ(g)` and is symmetric.
    pub fn s_left_invariant<G: Group<Elem = E>>(group: &G, gens: &[E], s: &E) -> Result<Self> {
        if group.is_identity(s) || !group.is_identity(&group.square(s)) {
            return Err(Error::Malformed(format!("{} is not an involution", group.format(s))));
        }
        let base = Self::lazy_uniform(group, gens)?;
        let mut support: Vec<E> = Vec::new();
        for t in &base.support {
            for x in [t.clone(), group.mul(s, t), group.mul(t, s), group.mul(&group.mul(s, t), s)] {
                if !support.contains(&x) {
                    support.push(x);
                }
            }
        }
        let w = 1.0 / support.len() as f64;
        let n = support.len();
        Self::new(group, support, vec![w; n])
    }

    pub fn support(&self) -> &[E] {
        &self.support
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> &E {
        &self.support[self.sampler.sample(rng)]
    }

    pub fn summary<G: Group<Elem = E>>(&self, group: &G) -> MeasureSummary {
        MeasureSummary {
            support: self.support.iter().map(|e| group.format(e)).collect(),
            weights: self.weights.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{library, InfiniteDihedral};

    #[test]
    fn validation() {
        let z5 = library::cyclic(5).unwrap();
        assert!(StepMeasure::lazy_uniform(&z5, &[1]).is_ok());
        assert!(StepMeasure::new(&z5, vec![0, 1], vec![0.5, 0.5]).is_err());
        assert!(StepMeasure::new(&z5, vec![1, 4], vec![0.5, 0.5]).is_err());
        assert!(StepMeasure::new(&z5, vec![0, 1, 4], vec![0.2, 0.5, 0.3]).is_err());
        let z6 = library::cyclic(6).unwrap();
        assert!(StepMeasure::lazy_uniform(&z6, &[2]).is_err());
    }

    #[test]
    fn s_invariance() {
        let d = InfiniteDihedral;
        let s = d.s();
        let m = StepMeasure::s_left_invariant(&d, &[d.r()], &s).unwrap();
        for x in m.support() {
            assert!(m.support().contains(&d.mul(&s, x)));
        }
    }
}
