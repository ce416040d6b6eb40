//! Structural predicates: centralizers, square fibres, normal closures and
//! the generalized dicyclic / dihedral tests.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use super::{Ball, FiniteGroup, Group};
use crate::error::{Error, Result};

/// Vertex budget for ball scopes built by this module.
pub const DEFAULT_BALL_BUDGET: usize = 1_000_000;

/// The elements an operation ranges over: the whole group when it is finite
/// and no radius is given, otherwise the ball of that radius around 1 for the
/// declared generators.
pub fn scope_elements<G: Group>(group: &G, radius: Option<usize>) -> Result<Vec<G::Elem>> {
    match radius {
        Some(r) => {
            let ball = Ball::new(group, &group.generators(), r, DEFAULT_BALL_BUDGET)?;
            Ok(ball.elements().cloned().collect())
        }
        None => group
            .elements()
            .ok_or_else(|| Error::ScopeRequired(format!("{} is infinite; pass a ball radius", group.name()))),
    }
}

/// All `g` in scope with `gs = sg`.
pub fn centralizer<G: Group>(group: &G, s: &G::Elem, radius: Option<usize>) -> Result<Vec<G::Elem>> {
    Ok(scope_elements(group, radius)?.into_iter().filter(|g| group.commutes(g, s)).collect())
}

/// All `g` in scope with `g^2` in `fiber`.
pub fn square_fiber<G: Group>(group: &G, fiber: &[G::Elem], radius: Option<usize>) -> Result<Vec<G::Elem>> {
    if fiber.is_empty() {
        return Ok(Vec::new());
    }
    let f: HashSet<&G::Elem> = fiber.iter().collect();
    Ok(scope_elements(group, radius)?.into_iter().filter(|g| f.contains(&group.square(g))).collect())
}

/// Evidence gathered about `C_G(s)` on a ball. This is never a proof of local
/// finiteness; it only reports whether an infinite-order element was seen.
#[derive(Clone, Debug, Serialize)]
pub struct CentralizerEvidence {
    pub radius: usize,
    pub centralizer_in_ball: usize,
    pub infinite_order_witness: Option<String>,
    pub declared: Option<bool>,
}

pub fn centralizer_evidence<G: Group>(group: &G, s: &G::Elem, radius: usize) -> Result<CentralizerEvidence> {
    let c = centralizer(group, s, Some(radius))?;
    let witness = c.iter().find(|g| group.has_infinite_order(g) == Some(true)).map(|g| group.format(g));
    Ok(CentralizerEvidence {
        radius,
        centralizer_in_ball: c.len(),
        infinite_order_witness: witness,
        declared: group.centralizer_locally_finite(s),
    })
}

/// Normal closure of `xs`: the smallest subgroup containing `xs` and closed
/// under conjugation by the declared generators. Fails when more than
/// `budget` elements accumulate, or when some element of `xs` is known to
/// have infinite order.
pub fn normal_closure<G: Group>(group: &G, xs: &[G::Elem], budget: usize) -> Result<Vec<G::Elem>> {
    for x in xs {
        if group.has_infinite_order(x) == Some(true) {
            return Err(Error::BudgetExhausted(format!(
                "{} has infinite order, so its normal closure is infinite",
                group.format(x)
            )));
        }
    }
    let conj: Vec<G::Elem> = super::ball::symmetrise(group, &group.generators());
    let id = group.identity();
    let mut members: Vec<G::Elem> = vec![id.clone()];
    let mut seen: HashSet<G::Elem> = HashSet::from([id]);
    let mut gens: Vec<G::Elem> = Vec::new();
    let mut pending: Vec<G::Elem> = xs.to_vec();
    let overflow = || Error::BudgetExhausted(format!("normal closure exceeds {budget} elements"));
    while let Some(x) = pending.pop() {
        if seen.contains(&x) {
            continue;
        }
        gens.push(x.clone());
        for t in &conj {
            pending.push(group.mul(&group.mul(&group.inv(t), &x), t));
        }
        // Re-close the subgroup under the enlarged generator list.
        let mut head = 0;
        while head < members.len() {
            let m = members[head].clone();
            head += 1;
            for g in &gens {
                let y = group.mul(&m, g);
                if seen.insert(y.clone()) {
                    if members.len() >= budget {
                        return Err(overflow());
                    }
                    members.push(y);
                }
            }
        }
        if pending.len() > budget {
            return Err(overflow());
        }
    }
    Ok(members)
}

/// Histogram of element orders.
pub fn element_order_histogram(g: &FiniteGroup) -> BTreeMap<u64, usize> {
    let mut h = BTreeMap::new();
    for e in 0..g.len() as u32 {
        *h.entry(g.element_order(&e, u64::MAX).unwrap()).or_insert(0) += 1;
    }
    h
}

pub fn is_abelian(g: &FiniteGroup) -> bool {
    let gens = g.small_generating_set();
    gens.iter().all(|&a| gens.iter().all(|&b| g.m(a, b) == g.m(b, a)))
}

fn subset_abelian(g: &FiniteGroup, elems: &[u32]) -> bool {
    elems.iter().all(|&a| elems.iter().all(|&b| g.m(a, b) == g.m(b, a)))
}

/// Elementary abelian 2-group of rank `k`, as `Some(k)`.
pub fn elementary_abelian_2_rank(g: &FiniteGroup) -> Option<u32> {
    let n = g.len();
    if !n.is_power_of_two() || !(0..n as u32).all(|e| g.m(e, e) == 0) {
        return None;
    }
    Some(n.trailing_zeros())
}

/// Index-2 subgroups, each listed as a sorted element vector. They are the
/// kernels of the non-trivial homomorphisms to Z/2, which are determined by
/// their values on a generating set.
pub fn index_two_subgroups(g: &FiniteGroup) -> Vec<Vec<u32>> {
    let gens = g.small_generating_set();
    let k = gens.len();
    let n = g.len();
    let mut out = Vec::new();
    if !n.is_multiple_of(2) || k >= 20 {
        return out;
    }
    for mask in 1u32..(1 << k) {
        let mut parity = vec![u8::MAX; n];
        parity[0] = 0;
        let mut queue = vec![0u32];
        let mut ok = true;
        'bfs: while let Some(x) = queue.pop() {
            for (i, &s) in gens.iter().enumerate() {
                let y = g.m(x, s);
                let p = parity[x as usize] ^ ((mask >> i) & 1) as u8;
                match parity[y as usize] {
                    u8::MAX => {
                        parity[y as usize] = p;
                        queue.push(y);
                    }
                    q if q != p => {
                        ok = false;
                        break 'bfs;
                    }
                    _ => {}
                }
            }
        }
        if ok {
            out.push((0..n as u32).filter(|&e| parity[e as usize] == 0).collect());
        }
    }
    out
}

/// `(A, x)` with `A` abelian of index 2, `x` outside `A`, and conjugation by
/// `x` inverting `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexTwoWitness {
    pub subgroup: Vec<u32>,
    pub x: u32,
}

fn inverting_witness(g: &FiniteGroup, accept_x: impl Fn(u32) -> bool) -> Option<IndexTwoWitness> {
    for a in index_two_subgroups(g) {
        if !subset_abelian(g, &a) {
            continue;
        }
        let mut inside = vec![false; g.len()];
        for &e in &a {
            inside[e as usize] = true;
        }
        for x in (0..g.len() as u32).filter(|&x| !inside[x as usize]) {
            if !accept_x(x) {
                continue;
            }
            let xi = g.i(x);
            if a.iter().all(|&e| g.m(g.m(x, e), xi) == g.i(e)) {
                return Some(IndexTwoWitness { subgroup: a, x });
            }
        }
    }
    None
}

/// Witness that `g` is generalized dicyclic: non-abelian, with `x` of
/// order 4. An involution `x` would make `g` generalized dihedral instead.
pub fn generalized_dicyclic_witness(g: &FiniteGroup) -> Option<IndexTwoWitness> {
    if is_abelian(g) {
        return None;
    }
    inverting_witness(g, |x| {
        let x2 = g.m(x, x);
        x2 != 0 && g.m(x2, x2) == 0
    })
}

/// Witness that `g = A ⋊ Z/2` with the involution `x` acting by inversion.
pub fn generalized_dihedral_witness(g: &FiniteGroup) -> Option<IndexTwoWitness> {
    inverting_witness(g, |x| g.m(x, x) == 0)
}

/// Checks the defining relations of a witness, with `x` of order `x_order`.
pub fn check_inverting_witness(g: &FiniteGroup, w: &IndexTwoWitness, x_order: u64) -> bool {
    let x = w.x;
    w.subgroup.len() * 2 == g.len()
        && !w.subgroup.contains(&x)
        && subset_abelian(g, &w.subgroup)
        && g.element_order(&x, x_order) == Some(x_order)
        && w.subgroup.iter().all(|&a| g.m(g.m(x, a), g.i(x)) == g.i(a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library;
    use crate::groups::{FreeGroup, Heisenberg, InfiniteDihedral};

    #[test]
    fn centralizer_examples() {
        let q = library::quaternion();
        let i = q.parse("i").unwrap();
        let mut c: Vec<String> = centralizer(&q, &i, None).unwrap().iter().map(|e| q.format(e)).collect();
        c.sort();
        assert_eq!(c, vec!["-1", "-i", "1", "i"]);
        assert_eq!(centralizer(&q, &0, None).unwrap().len(), 8);

        let h = Heisenberg;
        let ball = scope_elements(&h, Some(3)).unwrap();
        assert_eq!(centralizer(&h, &h.z(), Some(3)).unwrap().len(), ball.len());
        assert!(centralizer(&h, &h.z(), None).is_err());
    }

    #[test]
    fn square_fiber_examples() {
        let z4 = library::cyclic(4).unwrap();
        let mut f = square_fiber(&z4, &[0], None).unwrap();
        f.sort();
        assert_eq!(f.iter().map(|e| z4.format(e)).collect::<Vec<_>>(), vec!["0", "2"]);
        assert!(square_fiber(&z4, &[], None).unwrap().is_empty());

        let d = InfiniteDihedral;
        let fib = square_fiber(&d, &[d.identity()], Some(5)).unwrap();
        let ball = scope_elements(&d, Some(5)).unwrap();
        let reflections = ball.iter().filter(|e| e.flip).count();
        assert_eq!(fib.len(), reflections + 1);
        assert!(fib.iter().all(|e| e.flip || d.is_identity(e)));
    }

    #[test]
    fn normal_closure_examples() {
        let s3 = library::symmetric(3).unwrap();
        let x = [s3.parse("(1,2,3)").unwrap(), s3.parse("(1,3,2)").unwrap()];
        assert_eq!(normal_closure(&s3, &x, 1000).unwrap().len(), 3);
        assert_eq!(normal_closure(&s3, &[0], 1000).unwrap(), vec![0]);
        let f = FreeGroup::new(2).unwrap();
        assert!(normal_closure(&f, &[f.gen(0)], 1000).is_err());
        // Transpositions generate all of S3 as a normal subgroup.
        let t = s3.parse("(1,2)").unwrap();
        assert_eq!(normal_closure(&s3, &[t], 1000).unwrap().len(), 6);
    }

    #[test]
    fn dicyclic_examples() {
        let q = library::quaternion();
        let w = generalized_dicyclic_witness(&q).expect("Q8 is dicyclic");
        assert!(check_inverting_witness(&q, &w, 4));
        assert!(generalized_dicyclic_witness(&library::cyclic(6).unwrap()).is_none());
        assert!(generalized_dicyclic_witness(&library::dihedral(8).unwrap()).is_none());
        assert!(generalized_dicyclic_witness(&library::dicyclic(12).unwrap()).is_some());
    }

    #[test]
    fn dihedral_examples() {
        let d4 = library::dihedral(8).unwrap();
        let w = generalized_dihedral_witness(&d4).expect("D4 is generalized dihedral");
        assert!(check_inverting_witness(&d4, &w, 2));
        assert!(generalized_dihedral_witness(&library::quaternion()).is_none());
        assert!(generalized_dihedral_witness(&library::elementary2(3).unwrap()).is_some());
        assert!(generalized_dihedral_witness(&library::cyclic(4).unwrap()).is_none());
    }

    #[test]
    fn index_two_counts() {
        // Z2^3 has 7 index-2 subgroups, D4 has 3, Z3 none.
        assert_eq!(index_two_subgroups(&library::elementary2(3).unwrap()).len(), 7);
        assert_eq!(index_two_subgroups(&library::dihedral(8).unwrap()).len(), 3);
        assert!(index_two_subgroups(&library::cyclic(3).unwrap()).is_empty());
    }
}
