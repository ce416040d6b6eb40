//! The augmentation pipeline: an orientation-rigid base set, single
//! augmentation steps that raise one triangle count, and the distinguishing
//! extension that makes the counts of the base set pairwise distinct.
//!
//! Candidates are accepted only after every condition of the augmentation
//! step has been checked exactly, so a returned step never relies on the
//! structural dichotomy (locally finite centralizer or not) being decided.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::cayley::{census, Census};
use crate::error::{Error, Result};
use crate::groups::classify::{classify_declared, classify_finite, Mode};
use crate::groups::{symmetrise, FiniteGroup, Group};
use crate::set::SymmetricSet;

/// Default number of candidates examined per augmentation step.
pub const DEFAULT_BUDGET: usize = 100_000;
/// Smallest count assigned to an element of the base set.
pub const FIRST_TARGET: usize = 7;
/// Largest count an added element may have.
pub const NEW_ELEMENT_MAX: usize = 6;

#[derive(Clone, Copy, Debug)]
pub struct ConstructOptions {
    /// Candidates examined per augmentation step.
    pub budget: usize,
    /// Skip the hypothesis gates (the search may then fail).
    pub force: bool,
    /// Re-check every step from full censuses. Quadratic in `|S|` per step.
    pub replay: bool,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions { budget: DEFAULT_BUDGET, force: false, replay: false }
    }
}

/// `{g, g^-1, s0^-1 g, g^-1 s0}` without repeats.
pub fn delta_g<G: Group>(group: &G, g: &G::Elem, s0: &G::Elem) -> Vec<G::Elem> {
    let gi = group.inv(g);
    let a = group.mul(&group.inv(s0), g);
    let ai = group.mul(&gi, s0);
    let mut out = Vec::with_capacity(4);
    for x in [g.clone(), gi, a, ai] {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// One row of the collision table: the element it contributes to
/// `Δ_g ∩ sΔ_g` when its condition holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collision<E> {
    pub row: u8,
    pub element: E,
}

/// Evaluates the twelve conditions under which an element of `Δ_g` is also
/// in `sΔ_g` and returns the rows that hold, for `s ≠ 1`.
pub fn collision_rows<G: Group>(group: &G, g: &G::Elem, s0: &G::Elem, s: &G::Elem) -> Vec<Collision<G::Elem>> {
    let m = |x: &G::Elem, y: &G::Elem| group.mul(x, y);
    let (gi, s0i, si) = (group.inv(g), group.inv(s0), group.inv(s));
    let a = m(&s0i, g);
    let ai = m(&gi, s0);
    let sq_g = m(g, g);
    let sq_a = m(&a, &a);
    let rows: [(bool, &G::Elem); 12] = [
        (*s == *s0, g),
        (*s == s0i, &a),
        (*s == m(&m(&gi, s0), g), &ai),
        (*s == m(&m(&gi, &s0i), g), &gi),
        (sq_g == *s, g),
        (sq_g == si, &gi),
        (sq_g == m(s0, s), &a),
        (sq_g == m(s0, &si), &gi),
        (sq_a == m(&s0i, s), g),
        (sq_a == m(&s0i, &si), &ai),
        (sq_a == *s, &a),
        (sq_a == si, &ai),
    ];
    rows.iter()
        .enumerate()
        .filter(|(_, (hit, _))| *hit)
        .map(|(i, (_, e))| Collision { row: i as u8 + 1, element: (*e).clone() })
        .collect()
}

/// `Δ_g ∩ sΔ_g` as predicted by the collision table, sorted.
pub fn collision_set<G: Group>(group: &G, g: &G::Elem, s0: &G::Elem, s: &G::Elem) -> Vec<G::Elem> {
    let mut out: Vec<G::Elem> = collision_rows(group, g, s0, s).into_iter().map(|c| c.element).collect();
    out.sort();
    out.dedup();
    out
}

/// `Δ_g ∩ sΔ_g` computed directly, sorted.
pub fn brute_force_collisions<G: Group>(group: &G, g: &G::Elem, s0: &G::Elem, s: &G::Elem) -> Vec<G::Elem> {
    let d = delta_g(group, g, s0);
    let si = group.inv(s);
    let mut out: Vec<G::Elem> = d.iter().filter(|u| d.contains(&group.mul(&si, u))).cloned().collect();
    out.sort();
    out
}

/// `a² = b²` and `(sa)² = (sb)²` imply that `ab^-1` commutes with `s`.
/// Returns whether the implication holds for this triple.
pub fn squares_and_centralizers_holds<G: Group>(group: &G, a: &G::Elem, b: &G::Elem, s: &G::Elem) -> bool {
    let premise =
        group.square(a) == group.square(b) && group.square(&group.mul(s, a)) == group.square(&group.mul(s, b));
    !premise || group.commutes(&group.mul(a, &group.inv(b)), s)
}

/// Which row of the case table an accepted step realises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    LocallyFinite,
    NotLocallyFinite,
}

/// Where candidates came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateSource {
    /// Powers of `s0`, which centralize it; used when `s0` has infinite order.
    Powers,
    /// Ball enumeration over the declared generators.
    Ball,
}

#[derive(Clone, Debug)]
pub struct AugmentationStep<E> {
    pub s0: E,
    pub g: E,
    pub delta_g: Vec<E>,
    /// `Δ_g \ S`, the elements actually added.
    pub added: Vec<E>,
    /// Counts of `s0`, `s0^-1` and the added elements before the step.
    pub census_before: Vec<(E, usize)>,
    pub census_after: Vec<(E, usize)>,
    pub increment: usize,
    pub branch: Branch,
    pub source: CandidateSource,
    pub candidates_tested: usize,
    /// Result of the from-scratch replay, when requested.
    pub replayed: Option<bool>,
}

/// Expected increments `(locally finite, not locally finite)`.
fn case_increments(involution: bool) -> (usize, usize) {
    if involution {
        (2, 4)
    } else {
        (1, 2)
    }
}

struct Evaluation<E> {
    delta: Vec<E>,
    new_counts: Vec<(E, usize)>,
    increment: usize,
    branch: Branch,
}

/// A symmetric set with its census kept exact under augmentation.
struct Working<'a, G: Group> {
    group: &'a G,
    set: SymmetricSet<G::Elem>,
    census: HashMap<G::Elem, usize>,
    squares: HashSet<G::Elem>,
}

impl<'a, G: Group> Working<'a, G> {
    fn new(group: &'a G, set: SymmetricSet<G::Elem>) -> Self {
        let census = census(group, &set).to_map();
        let squares = set.elems().iter().map(|s| group.square(s)).collect();
        Working { group, set, census, squares }
    }

    /// `|x|_S ≤ 2`.
    fn short(&self, x: &G::Elem) -> bool {
        self.group.is_identity(x)
            || self.set.contains(x)
            || self.set.elems().iter().any(|t| self.set.contains(&self.group.ldiv(t, x)))
    }

    /// Checks every condition of the augmentation step for `S' = S ∪ Δ_g`.
    fn evaluate(&self, s0: &G::Elem, g: &G::Elem) -> Option<Evaluation<G::Elem>> {
        let grp = self.group;
        let s0i = grp.inv(s0);
        if self.short(g) || self.short(&grp.mul(&s0i, g)) {
            return None;
        }
        let delta = delta_g(grp, g, s0);
        // (a) and disjointness; (b) no element of order ≤ 2; (c) no squares of S.
        if delta.iter().any(|d| self.set.contains(d) || grp.is_identity(&grp.square(d)) || self.squares.contains(d)) {
            return None;
        }
        let in_new = |x: &G::Elem| self.set.contains(x) || delta.contains(x);
        // Increments of old counts: pairs (t, u) in S' with s = t u^-1 and t or u new.
        let mut inc: HashMap<&G::Elem, usize> = HashMap::new();
        let mut bump = |s: G::Elem| -> bool {
            match self.set.position(&s) {
                Some(i) => {
                    let key = &self.set.elems()[i];
                    if *key != *s0 && *key != s0i {
                        return false;
                    }
                    *inc.entry(key).or_default() += 1;
                    true
                }
                None => true,
            }
        };
        for t in &delta {
            for u in self.set.elems().iter().chain(&delta) {
                if !bump(grp.mul(t, &grp.inv(u))) {
                    return None; // (e)
                }
            }
        }
        for u in &delta {
            let ui = grp.inv(u);
            for t in self.set.elems() {
                if !bump(grp.mul(t, &ui)) {
                    return None; // (e)
                }
            }
        }
        // (d) counts of the new elements.
        let mut new_counts = Vec::with_capacity(delta.len());
        for d in &delta {
            let di = grp.inv(d);
            let c = self.set.elems().iter().chain(&delta).filter(|t| in_new(&grp.mul(&di, t))).count();
            if c > NEW_ELEMENT_MAX {
                return None;
            }
            new_counts.push((d.clone(), c));
        }
        // (f) the increment matches the case table.
        let increment = inc.get(s0).copied().unwrap_or(0);
        let (lf, nlf) = case_increments(grp.is_identity(&grp.square(s0)));
        let branch = match (increment, grp.centralizer_locally_finite(s0)) {
            (i, Some(true) | None) if i == lf => Branch::LocallyFinite,
            (i, Some(false) | None) if i == nlf => Branch::NotLocallyFinite,
            _ => return None,
        };
        Some(Evaluation { delta, new_counts, increment, branch })
    }

    fn apply(&mut self, s0: &G::Elem, ev: &Evaluation<G::Elem>) {
        let s0i = self.group.inv(s0);
        *self.census.get_mut(s0).unwrap() += ev.increment;
        if s0i != *s0 {
            *self.census.get_mut(&s0i).unwrap() += ev.increment;
        }
        self.set.extend(self.group, &ev.delta);
        for (d, c) in &ev.new_counts {
            self.census.insert(d.clone(), *c);
            self.squares.insert(self.group.square(d));
        }
    }

    fn count(&self, e: &G::Elem) -> usize {
        self.census[e]
    }
}

/// Lazily enumerated ball over the declared generators, in BFS order.
struct BallStream<E> {
    gens: Vec<E>,
    order: Vec<E>,
    seen: HashSet<E>,
    head: usize,
}

impl<E: Clone + Eq + std::hash::Hash> BallStream<E> {
    fn new<G: Group<Elem = E>>(group: &G) -> Self {
        let id = group.identity();
        BallStream {
            gens: symmetrise(group, &group.generators()),
            order: vec![id.clone()],
            seen: HashSet::from([id]),
            head: 0,
        }
    }

    fn get<G: Group<Elem = E>>(&mut self, group: &G, i: usize) -> Option<&E> {
        while self.order.len() <= i && self.head < self.order.len() {
            let x = self.order[self.head].clone();
            self.head += 1;
            for s in &self.gens {
                let y = group.mul(&x, s);
                if self.seen.insert(y.clone()) {
                    self.order.push(y);
                }
            }
        }
        self.order.get(i)
    }
}

type Found<E> = (E, Evaluation<E>, CandidateSource, usize);

fn search<G: Group>(
    w: &Working<'_, G>,
    s0: &G::Elem,
    budget: usize,
    ball: &mut BallStream<G::Elem>,
) -> Result<Found<G::Elem>> {
    let grp = w.group;
    if grp.has_infinite_order(s0) == Some(true) {
        let mut g = grp.identity();
        for k in 1..=budget {
            g = grp.mul(&g, s0);
            if let Some(ev) = w.evaluate(s0, &g) {
                return Ok((g, ev, CandidateSource::Powers, k));
            }
        }
    } else {
        for i in 0..budget {
            let Some(g) = ball.get(grp, i).cloned() else { break };
            if let Some(ev) = w.evaluate(s0, &g) {
                return Ok((g, ev, CandidateSource::Ball, i + 1));
            }
        }
    }
    Err(Error::SearchFailure {
        tested: budget,
        context: format!(
            "no admissible g for s0 = {} in {} (virtually abelian input or budget too small)",
            grp.format(s0),
            grp.name()
        ),
    })
}

fn step_from<G: Group>(
    w: &mut Working<'_, G>,
    s0: &G::Elem,
    budget: usize,
    ball: &mut BallStream<G::Elem>,
    replay: bool,
) -> Result<AugmentationStep<G::Elem>> {
    let grp = w.group;
    let before_set = replay.then(|| w.set.clone());
    let (g, ev, source, tested) = search(w, s0, budget, ball)?;
    let s0i = grp.inv(s0);
    let mut keys = vec![s0.clone()];
    if s0i != *s0 {
        keys.push(s0i);
    }
    let census_before: Vec<_> =
        keys.iter().map(|k| (k.clone(), w.count(k))).chain(ev.delta.iter().map(|d| (d.clone(), 0))).collect();
    w.apply(s0, &ev);
    let census_after: Vec<_> = keys.iter().chain(&ev.delta).map(|k| (k.clone(), w.count(k))).collect();
    let mut step = AugmentationStep {
        s0: s0.clone(),
        g,
        delta_g: ev.delta.clone(),
        added: ev.delta,
        census_before,
        census_after,
        increment: ev.increment,
        branch: ev.branch,
        source,
        candidates_tested: tested,
        replayed: None,
    };
    if let Some(before) = before_set {
        step.replayed = Some(verify_step(grp, &before, &step).is_ok());
    }
    Ok(step)
}

/// One augmentation step for `s0 ∈ S`: the first candidate `g` for which
/// `S ∪ Δ_g` satisfies every condition. Candidates are powers of `s0` when
/// it has infinite order and the ball over the declared generators
/// otherwise.
pub fn augment_once<G: Group>(
    group: &G,
    set: &SymmetricSet<G::Elem>,
    s0: &G::Elem,
    budget: usize,
) -> Result<AugmentationStep<G::Elem>> {
    if !set.is_symmetric() || !set.contains(s0) {
        return Err(Error::InvalidSet("S must be symmetric and contain s0".into()));
    }
    let mut w = Working::new(group, set.clone());
    step_from(&mut w, s0, budget, &mut BallStream::new(group), false)
}

/// Re-checks every condition of `step` from full censuses of `before` and
/// `before ∪ Δ_g`. Returns the first violated condition.
pub fn verify_step<G: Group>(
    group: &G,
    before: &SymmetricSet<G::Elem>,
    step: &AugmentationStep<G::Elem>,
) -> std::result::Result<(), String> {
    let s0 = &step.s0;
    let s0i = group.inv(s0);
    if step.delta_g != delta_g(group, &step.g, s0) {
        return Err("Δ_g does not match g".into());
    }
    let added: Vec<_> = step.delta_g.iter().filter(|d| !before.contains(d)).cloned().collect();
    if added.len() > 4 || added != step.added {
        return Err("(a) added elements".into());
    }
    if added.iter().any(|d| group.element_order(d, 2).is_some()) {
        return Err("(b) an added element has order at most 2".into());
    }
    let squares: HashSet<_> = before.elems().iter().map(|s| group.square(s)).collect();
    if added.iter().any(|d| squares.contains(d)) {
        return Err("(c) an added element is a square of S".into());
    }
    let mut after = before.clone();
    after.extend(group, &added);
    let c0 = census(group, before).to_map();
    let c1 = census(group, &after).to_map();
    if let Some(d) = added.iter().find(|d| c1[*d] > NEW_ELEMENT_MAX) {
        return Err(format!("(d) added element {} lies in {} triangles", group.format(d), c1[d]));
    }
    if let Some(s) = before.elems().iter().find(|s| **s != *s0 && **s != s0i && c0[*s] != c1[*s]) {
        return Err(format!("(e) count of {} changed", group.format(s)));
    }
    let inc = c1[s0] - c0[s0];
    let (lf, nlf) = case_increments(group.is_identity(&group.square(s0)));
    let expected = match step.branch {
        Branch::LocallyFinite => lf,
        Branch::NotLocallyFinite => nlf,
    };
    if inc != expected || inc != step.increment {
        return Err(format!("(f) increment {inc}, expected {expected}"));
    }
    Ok(())
}

/// The value given to one inverse-pair class of the base set.
#[derive(Clone, Debug)]
pub struct Assignment<E> {
    pub class: E,
    pub inverse: Option<E>,
    pub initial: usize,
    /// Smallest unused value `≥ 7` when the class was reached.
    pub target: usize,
    pub value: usize,
    pub steps: usize,
    /// The final value differs from the first target (an increment
    /// overshot it, or the class started above it).
    pub retargeted: bool,
}

/// Global checks on the output of the distinguishing extension, recomputed
/// from a full census.
#[derive(Clone, Debug, Serialize)]
pub struct Postconditions {
    pub min_original: usize,
    pub max_added: usize,
    pub distinct_mod_inverse: bool,
    pub no_added_involutions: bool,
    pub size: usize,
    pub size_bound: usize,
    pub steps: usize,
    pub step_bound: usize,
    /// The incrementally maintained census equals the recomputed one.
    pub census_consistent: bool,
}

impl Postconditions {
    pub fn ok(&self) -> bool {
        self.min_original >= FIRST_TARGET
            && self.max_added <= NEW_ELEMENT_MAX
            && self.distinct_mod_inverse
            && self.no_added_involutions
            && self.size <= self.size_bound
            && self.steps <= self.step_bound
            && self.census_consistent
    }
}

#[derive(Clone, Debug)]
pub struct ConstructionTrace<E> {
    pub group: String,
    pub initial: SymmetricSet<E>,
    pub final_set: SymmetricSet<E>,
    pub steps: Vec<AugmentationStep<E>>,
    pub assignments: Vec<Assignment<E>>,
    pub final_census: Census<E>,
    pub postconditions: Postconditions,
}

/// `n(n+13)/2`: the number of augmentation steps the scheduler may use for
/// a base set of size `n`.
pub fn step_bound(n: usize) -> usize {
    n * (n + 13) / 2
}

/// `2n(n+14)`: the size bound on the extended set.
pub fn size_bound(n: usize) -> usize {
    2 * n * (n + 14)
}

/// Recomputes the postconditions of a (possibly partial) extension.
pub fn check_postconditions<G: Group>(
    group: &G,
    initial: &SymmetricSet<G::Elem>,
    final_set: &SymmetricSet<G::Elem>,
    steps: usize,
    incremental: Option<&HashMap<G::Elem, usize>>,
) -> (Census<G::Elem>, Postconditions) {
    let full = census(group, final_set);
    let map = full.to_map();
    let added: Vec<&G::Elem> = final_set.elems().iter().filter(|e| !initial.contains(e)).collect();
    let mut values = HashSet::new();
    let mut distinct = true;
    for (rep, inv) in initial.inverse_classes(group) {
        let v = map[&rep];
        if inv.as_ref().is_some_and(|i| map[i] != v) {
            distinct = false;
        }
        if !values.insert(v) {
            distinct = false;
        }
    }
    let post = Postconditions {
        min_original: initial.elems().iter().map(|e| map[e]).min().unwrap_or(usize::MAX),
        max_added: added.iter().map(|e| map[*e]).max().unwrap_or(0),
        distinct_mod_inverse: distinct,
        no_added_involutions: added.iter().all(|e| !group.is_identity(&group.square(e))),
        size: final_set.len(),
        size_bound: size_bound(initial.len()),
        steps,
        step_bound: step_bound(initial.len()),
        census_consistent: incremental.is_none_or(|inc| *inc == map),
    };
    (full, post)
}

fn refuse(verdict: &str, reason: impl Into<String>) -> Error {
    Error::HypothesisRefused { verdict: verdict.to_string(), reason: reason.into() }
}

/// Repeatedly augments each inverse-pair class of `set` (in set order) until
/// its count is at least 7 and differs from every value assigned before.
/// Returns the trace so far together with the error that stopped it, if any.
pub fn distinguishing_extension_partial<G: Group>(
    group: &G,
    set: &SymmetricSet<G::Elem>,
    opts: &ConstructOptions,
) -> Result<(ConstructionTrace<G::Elem>, Option<Error>)> {
    if !set.is_symmetric() {
        return Err(Error::InvalidSet("the base set must be symmetric".into()));
    }
    if !opts.force && group.info().virtually_abelian == Some(true) {
        return Err(refuse(
            "VIRTUALLY_ABELIAN",
            format!("{} is virtually abelian; the augmentation search need not terminate", group.name()),
        ));
    }
    let mut w = Working::new(group, set.clone());
    let mut ball = BallStream::new(group);
    let mut steps = Vec::new();
    let mut assignments = Vec::new();
    let mut used = BTreeSet::new();
    let mut failure = None;
    'classes: for (rep, inv) in set.inverse_classes(group) {
        let initial = w.count(&rep);
        let first_target = (FIRST_TARGET..).find(|v| !used.contains(v)).unwrap();
        let mut n = 0;
        while w.count(&rep) < FIRST_TARGET || used.contains(&w.count(&rep)) {
            match step_from(&mut w, &rep, opts.budget, &mut ball, opts.replay) {
                Ok(step) => {
                    steps.push(step);
                    n += 1;
                }
                Err(e) => {
                    failure = Some(e);
                    break 'classes;
                }
            }
        }
        let value = w.count(&rep);
        used.insert(value);
        assignments.push(Assignment {
            class: rep,
            inverse: inv,
            initial,
            target: first_target,
            value,
            steps: n,
            retargeted: value != first_target,
        });
    }
    let (final_census, postconditions) = check_postconditions(group, set, &w.set, steps.len(), Some(&w.census));
    if failure.is_none() && !postconditions.ok() {
        failure = Some(Error::Internal(format!("postconditions failed: {postconditions:?}")));
    }
    if failure.is_none() && steps.iter().any(|s| s.replayed == Some(false)) {
        failure = Some(Error::Internal("a step failed its from-scratch replay".into()));
    }
    let trace = ConstructionTrace {
        group: group.name(),
        initial: set.clone(),
        final_set: w.set,
        steps,
        assignments,
        final_census,
        postconditions,
    };
    Ok((trace, failure))
}

/// [`distinguishing_extension_partial`], failing on any stopped run.
pub fn distinguishing_extension<G: Group>(
    group: &G,
    set: &SymmetricSet<G::Elem>,
    opts: &ConstructOptions,
) -> Result<ConstructionTrace<G::Elem>> {
    match distinguishing_extension_partial(group, set, opts)? {
        (trace, None) => Ok(trace),
        (_, Some(e)) => Err(e),
    }
}

/// `(S0 ∪ S0² ∪ S0³) \ {1}` for symmetric generating `S0`, refused for
/// groups declared abelian or generalized dicyclic.
pub fn orientation_rigid_base<G: Group>(
    group: &G,
    s0: &SymmetricSet<G::Elem>,
    force: bool,
) -> Result<SymmetricSet<G::Elem>> {
    if !s0.is_symmetric() || s0.is_empty() {
        return Err(Error::InvalidSet("S0 must be a non-empty symmetric set".into()));
    }
    if s0.generates_finite(group) == Some(false) {
        return Err(Error::InvalidSet("S0 does not generate the group".into()));
    }
    let info = group.info();
    if !force && (info.abelian == Some(true) || info.generalized_dicyclic == Some(true)) {
        let table = group.is_finite().then(|| {
            FiniteGroup::generate(
                group.name(),
                group.identity(),
                &group.generators(),
                |a, b| group.mul(a, b),
                |e| group.format(e),
            )
        });
        let c = match table {
            Some(Ok(t)) => classify_finite(&t, Mode::Grr),
            _ => classify_declared(&group.name(), info, Mode::Grr),
        };
        return Err(refuse(&c.label, format!("{} is abelian or generalized dicyclic", group.name())));
    }
    let e = s0.elems();
    let mut all: Vec<G::Elem> = e.to_vec();
    for a in e {
        for b in e {
            all.push(group.mul(a, b));
        }
    }
    for a in e {
        for b in e {
            let ab = group.mul(a, b);
            all.extend(e.iter().map(|c| group.mul(&ab, c)));
        }
    }
    all.retain(|x| !group.is_identity(x));
    let mut seen = HashSet::new();
    all.retain(|x| seen.insert(x.clone()));
    SymmetricSet::new(group, all, true)
}

/// Base set, trace, and the error that stopped the extension, if any.
pub type PipelineOutcome<E> = (SymmetricSet<E>, ConstructionTrace<E>, Option<Error>);
type Generated<E> = (SymmetricSet<E>, ConstructionTrace<E>);

/// The full pipeline: the orientation-rigid base of the symmetric closure
/// of `gens`, then the distinguishing extension. Returns the base set and
/// the trace (with the error that stopped it, if any).
pub fn grr_pipeline<G: Group>(
    group: &G,
    gens: &[G::Elem],
    opts: &ConstructOptions,
) -> Result<PipelineOutcome<G::Elem>> {
    let s0 = SymmetricSet::symmetric_closure(group, gens);
    let s1 = orientation_rigid_base(group, &s0, opts.force)?;
    let (trace, err) = distinguishing_extension_partial(group, &s1, opts)?;
    Ok((s1, trace, err))
}

/// The generating set `S2` of the pipeline and its trace.
pub fn grr_generating_set<G: Group>(
    group: &G,
    gens: &[G::Elem],
    opts: &ConstructOptions,
) -> Result<Generated<G::Elem>> {
    match grr_pipeline(group, gens, opts)? {
        (_, trace, None) => Ok((trace.final_set.clone(), trace)),
        (_, _, Some(e)) => Err(e),
    }
}

fn census_json<G: Group>(group: &G, entries: &[(G::Elem, usize)]) -> serde_json::Value {
    Census { entries: entries.to_vec() }.to_json(group)
}

impl<E: Clone + Eq + std::hash::Hash> ConstructionTrace<E> {
    /// JSON export. Per-step censuses list only the entries the step can
    /// change; the final census is complete.
    pub fn to_json<G: Group<Elem = E>>(&self, group: &G) -> serde_json::Value {
        let fmt = |xs: &[E]| xs.iter().map(|x| group.format(x)).collect::<Vec<_>>();
        let steps: Vec<_> = self
            .steps
            .iter()
            .map(|s| {
                serde_json::json!({
                    "s0": group.format(&s.s0),
                    "g": group.format(&s.g),
                    "delta_g": fmt(&s.delta_g),
                    "added": fmt(&s.added),
                    "census_before": census_json(group, &s.census_before),
                    "census_after": census_json(group, &s.census_after),
                    "increment": s.increment,
                    "branch": s.branch,
                    "source": s.source,
                    "candidates_tested": s.candidates_tested,
                    "replayed": s.replayed,
                })
            })
            .collect();
        let assignments: Vec<_> = self
            .assignments
            .iter()
            .map(|a| {
                serde_json::json!({
                    "class": group.format(&a.class),
                    "inverse": a.inverse.as_ref().map(|x| group.format(x)),
                    "initial": a.initial,
                    "target": a.target,
                    "value": a.value,
                    "steps": a.steps,
                    "retargeted": a.retargeted,
                })
            })
            .collect();
        serde_json::json!({
            "group": self.group,
            "initial": self.initial.format(group),
            "final": self.final_set.format(group),
            "steps": steps,
            "assignments": assignments,
            "final_census": self.final_census.to_json(group),
            "postconditions": self.postconditions,
        })
    }
}
