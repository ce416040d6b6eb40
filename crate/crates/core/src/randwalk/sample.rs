use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::StepMeasure;
use crate::groups::Group;

/// Default failure probability for confidence radii.
pub const DEFAULT_DELTA: f64 = 0.01;

/// Trials per independently seeded block. Block `k` draws from stream `k`
/// of the generator seeded with the user seed, so results do not depend on
/// the number of worker threads.
const BLOCK: usize = 2048;

/// An empirical frequency with its two-sided Hoeffding radius.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub estimate: f64,
    pub radius: f64,
    pub samples: usize,
    pub hits: usize,
    pub delta: f64,
}

impl Estimate {
    pub fn new(hits: usize, samples: usize, delta: f64) -> Self {
        Estimate {
            estimate: if samples == 0 { 0.0 } else { hits as f64 / samples as f64 },
            radius: hoeffding_radius(samples, delta),
            samples,
            hits,
            delta,
        }
    }

    /// Whether `value` lies within the confidence radius.
    pub fn covers(&self, value: f64) -> bool {
        (self.estimate - value).abs() <= self.radius
    }
}

/// `sqrt(ln(2/δ) / 2N)`.
pub fn hoeffding_radius(samples: usize, delta: f64) -> f64 {
    if samples == 0 {
        return f64::INFINITY;
    }
    ((2.0 / delta).ln() / (2.0 * samples as f64)).sqrt()
}

fn walk<G: Group>(group: &G, mu: &StepMeasure<G::Elem>, n: usize, rng: &mut ChaCha8Rng) -> G::Elem {
    let mut g = group.identity();
    for _ in 0..n {
        g = group.mul(&g, mu.sample(rng));
    }
    g
}

fn block_rng(seed: u64, block: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block as u64);
    rng
}

/// Runs `trials` trials of `width` independent walks each and maps every
/// trial through `f`, in trial order.
fn trials<G, T, F>(
    group: &G,
    mu: &StepMeasure<G::Elem>,
    n: usize,
    count: usize,
    width: usize,
    seed: u64,
    f: F,
) -> Vec<T>
where
    G: Group,
    T: Send,
    F: Fn(&[G::Elem]) -> T + Sync,
{
    let blocks = count.div_ceil(BLOCK);
    let run_block = |b: usize| -> Vec<T> {
        let mut rng = block_rng(seed, b);
        let len = BLOCK.min(count - b * BLOCK);
        let mut buf = Vec::with_capacity(width);
        (0..len)
            .map(|_| {
                buf.clear();
                buf.extend((0..width).map(|_| walk(group, mu, n, &mut rng)));
                f(&buf)
            })
            .collect()
    };
    let threads = std::thread::available_parallelism().map_or(1, |t| t.get()).min(blocks.max(1));
    let mut out: Vec<Vec<T>> = Vec::with_capacity(blocks);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let run_block = &run_block;
                scope.spawn(move || (t..blocks).step_by(threads).map(|b| (b, run_block(b))).collect::<Vec<_>>())
            })
            .collect();
        let mut all: Vec<(usize, Vec<T>)> =
            handles.into_iter().flat_map(|h| h.join().expect("sampling thread")).collect();
        all.sort_by_key(|(b, _)| *b);
        out.extend(all.into_iter().map(|(_, v)| v));
    });
    out.into_iter().flatten().collect()
}

/// Endpoints of `count` independent walks of length `n`. Deterministic in
/// `seed`.
pub fn sample_walks<G: Group>(group: &G, mu: &StepMeasure<G::Elem>, n: usize, count: usize, seed: u64) -> Vec<G::Elem> {
    trials(group, mu, n, count, 1, seed, |w| w[0].clone())
}

/// `count` pairs of independent endpoints.
pub fn sample_pairs<G: Group>(
    group: &G,
    mu: &StepMeasure<G::Elem>,
    n: usize,
    count: usize,
    seed: u64,
) -> Vec<(G::Elem, G::Elem)> {
    trials(group, mu, n, count, 2, seed, |w| (w[0].clone(), w[1].clone()))
}

fn frequency<G, F>(
    group: &G,
    mu: &StepMeasure<G::Elem>,
    n: usize,
    count: usize,
    width: usize,
    seed: u64,
    f: F,
) -> Estimate
where
    G: Group,
    F: Fn(&[G::Elem]) -> bool + Sync,
{
    let hits = trials(group, mu, n, count, width, seed, f).into_iter().filter(|&b| b).count();
    Estimate::new(hits, count, DEFAULT_DELTA)
}

/// `P(g_n g'_n = g'_n g_n)` for independent endpoints.
pub fn estimate_commute_probability<G: Group>(
    group: &G,
    mu: &StepMeasure<G::Elem>,
    n: usize,
    count: usize,
    seed: u64,
) -> Estimate {
    frequency(group, mu, n, count, 2, seed, |w| group.commutes(&w[0], &w[1]))
}

/// `P(g_n² = a)`.
pub fn estimate_square_probability<G: Group>(
    group: &G,
    mu: &StepMeasure<G::Elem>,
    a: &G::Elem,
    n: usize,
    count: usize,
    seed: u64,
) -> Estimate {
    frequency(group, mu, n, count, 1, seed, |w| group.square(&w[0]) == *a)
}

/// `P(g_n ∈ aH)` for a membership test of `H`.
pub fn estimate_coset_probability<G, F>(
    group: &G,
    mu: &StepMeasure<G::Elem>,
    a: &G::Elem,
    in_subgroup: F,
    n: usize,
    count: usize,
    seed: u64,
) -> Estimate
where
    G: Group,
    F: Fn(&G::Elem) -> bool + Sync,
{
    let a_inv = group.inv(a);
    frequency(group, mu, n, count, 1, seed, |w| in_subgroup(&group.mul(&a_inv, &w[0])))
}

/// The most frequent observed square and its frequency. Ties go to the
/// smallest element.
pub fn sup_square_probability<G: Group>(
    group: &G,
    mu: &StepMeasure<G::Elem>,
    n: usize,
    count: usize,
    seed: u64,
) -> (G::Elem, Estimate) {
    let squares = trials(group, mu, n, count, 1, seed, |w| group.square(&w[0]));
    let mut freq: HashMap<G::Elem, usize> = HashMap::new();
    for s in squares {
        *freq.entry(s).or_default() += 1;
    }
    let (a, hits) =
        freq.into_iter().max_by(|(a, x), (b, y)| x.cmp(y).then_with(|| b.cmp(a))).unwrap_or((group.identity(), 0));
    (a, Estimate::new(hits, count, DEFAULT_DELTA))
}

/// `(√5 - 1)/2`: above this liminf of `P(g_n² = 1)` the group is virtually
/// abelian.
pub fn involution_threshold() -> f64 {
    (5f64.sqrt() - 1.0) / 2.0
}

#[derive(Clone, Debug, Serialize)]
pub struct InvolutionReport {
    pub estimate: Estimate,
    pub threshold: f64,
    /// `c² + c - 1` at the estimate; positive exactly above the threshold.
    pub derived_bound: f64,
    /// The whole confidence interval lies above the threshold.
    pub above_threshold: bool,
    /// The whole confidence interval lies below the threshold.
    pub below_threshold: bool,
}

pub fn involution_threshold_report<G: Group>(
    group: &G,
    mu: &StepMeasure<G::Elem>,
    n: usize,
    count: usize,
    seed: u64,
) -> InvolutionReport {
    let estimate = estimate_square_probability(group, mu, &group.identity(), n, count, seed);
    let c = estimate.estimate;
    let t = involution_threshold();
    InvolutionReport {
        threshold: t,
        derived_bound: c * c + c - 1.0,
        above_threshold: c - estimate.radius > t,
        below_threshold: c + estimate.radius < t,
        estimate,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrendVerdict {
    /// Each estimate lies strictly below the previous one, with disjoint
    /// confidence intervals.
    Decay,
    /// Each estimate lies strictly above the previous one, with disjoint
    /// confidence intervals.
    Growth,
    /// Every estimate is exactly the same value.
    Constant,
    Inconclusive,
}

/// Classifies a ladder of estimates, ordered by increasing `n`.
pub fn trend_verdict(estimates: &[Estimate]) -> TrendVerdict {
    if estimates.len() < 2 {
        return TrendVerdict::Inconclusive;
    }
    let pairs = || estimates.windows(2);
    if pairs().all(|w| w[1].estimate + w[1].radius < w[0].estimate - w[0].radius) {
        TrendVerdict::Decay
    } else if pairs().all(|w| w[1].estimate - w[1].radius > w[0].estimate + w[0].radius) {
        TrendVerdict::Growth
    } else if pairs().all(|w| w[0].estimate == w[1].estimate) {
        TrendVerdict::Constant
    } else {
        TrendVerdict::Inconclusive
    }
}
