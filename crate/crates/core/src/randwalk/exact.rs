use super::StepMeasure;
use crate::groups::FiniteGroup;

/// Probability vector over a finite group, indexed by element.
pub type Distribution = Vec<f64>;

/// The point mass at the identity.
pub fn point_mass(group: &FiniteGroup) -> Distribution {
    let mut p = vec![0.0; group.len()];
    p[0] = 1.0;
    p
}

/// `(p * q)(h) = Σ_g p(g) q(g^-1 h)`: law of `xy` for independent `x ~ p`,
/// `y ~ q`.
pub fn convolve(group: &FiniteGroup, p: &[f64], q: &[f64]) -> Distribution {
    let mut out = vec![0.0; group.len()];
    for (g, &pg) in p.iter().enumerate() {
        if pg == 0.0 {
            continue;
        }
        for (h, &qh) in q.iter().enumerate() {
            out[group.m(g as u32, h as u32) as usize] += pg * qh;
        }
    }
    out
}

/// `μ^{*n}` by `n` right multiplications with the step measure.
pub fn exact_convolution(group: &FiniteGroup, mu: &StepMeasure<u32>, n: usize) -> Distribution {
    let mut p = point_mass(group);
    for _ in 0..n {
        let mut next = vec![0.0; group.len()];
        for (g, &pg) in p.iter().enumerate() {
            if pg == 0.0 {
                continue;
            }
            for (s, &w) in mu.support().iter().zip(mu.weights()) {
                next[group.m(g as u32, *s) as usize] += pg * w;
            }
        }
        p = next;
    }
    p
}

/// `P(x ∈ A)` for `x ~ p`.
pub fn probability(p: &[f64], event: impl Fn(u32) -> bool) -> f64 {
    p.iter().enumerate().filter(|(g, _)| event(*g as u32)).map(|(_, &w)| w).sum()
}

/// `P(x² = a)`.
pub fn exact_square(group: &FiniteGroup, p: &[f64], a: u32) -> f64 {
    probability(p, |g| group.m(g, g) == a)
}

/// `P(x ∈ aH)` for the subgroup with element list `h`.
pub fn exact_coset(group: &FiniteGroup, p: &[f64], a: u32, h: &[u32]) -> f64 {
    let mut in_h = vec![false; group.len()];
    for &x in h {
        in_h[x as usize] = true;
    }
    probability(p, |g| in_h[group.m(group.i(a), g) as usize])
}

/// `P(xy = yx)` for independent `x, y ~ p`; equals `Σ_g p(g) p(C_G(g))`.
pub fn exact_commute(group: &FiniteGroup, p: &[f64]) -> f64 {
    let n = group.len() as u32;
    (0..n).map(|g| p[g as usize] * probability(p, |h| group.m(g, h) == group.m(h, g))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{library, Group};

    #[test]
    fn quaternion_limit() {
        let q = library::quaternion();
        let gens = [q.parse("i").unwrap(), q.parse("j").unwrap()];
        let mu = StepMeasure::lazy_uniform(&q, &gens).unwrap();
        assert_eq!(exact_convolution(&q, &mu, 0), point_mass(&q));
        let p = exact_convolution(&q, &mu, 512);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!((exact_square(&q, &p, 0) - 0.25).abs() < 1e-3);
    }

    #[test]
    fn semigroup_property() {
        let g = library::symmetric(4).unwrap();
        let mu = StepMeasure::lazy_uniform(&g, &g.generators()).unwrap();
        let p5 = exact_convolution(&g, &mu, 5);
        let p7 = exact_convolution(&g, &mu, 7);
        let p12 = exact_convolution(&g, &mu, 12);
        let c = convolve(&g, &p5, &p7);
        assert!(c.iter().zip(&p12).all(|(a, b)| (a - b).abs() < 1e-12));
        // Symmetric steps give an inversion-invariant law.
        assert!((0..24).all(|x| (p12[x as usize] - p12[g.i(x) as usize]).abs() < 1e-12));
    }

    #[test]
    fn commuting_in_abelian_group_is_certain() {
        let z = library::cyclic(7).unwrap();
        let mu = StepMeasure::lazy_uniform(&z, &[1]).unwrap();
        let p = exact_convolution(&z, &mu, 9);
        assert!((exact_commute(&z, &p) - 1.0).abs() < 1e-12);
    }
}
