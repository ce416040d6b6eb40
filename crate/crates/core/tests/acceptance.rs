//! Acceptance suite. Runs every criterion, prints one line each, and exits
//! non-zero if any fails.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grr_core::autgrp::{dicyclic_map, inverse_map, is_orientation_witness, orientation_rigidity_check, verify_grr};
use grr_core::construct::{
    brute_force_collisions, collision_set, grr_generating_set, orientation_rigid_base, size_bound,
    squares_and_centralizers_holds, ConstructOptions, NEW_ELEMENT_MAX,
};
use grr_core::groups::structure::generalized_dicyclic_witness;
use grr_core::groups::{library, FiniteGroup, FreeAbelian, FreeGroup, Grigorchuk, Group, Heisenberg, InfiniteDihedral};
use grr_core::randwalk::*;
use grr_core::set::SymmetricSet;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn exceptional(id: &str) -> FiniteGroup {
    library::exceptional_by_id(id).unwrap().model().unwrap()
}

/// Representatives `x` with `x <= x^-1` of the inverse-pair classes of
/// non-identity elements.
fn inverse_classes(g: &FiniteGroup) -> Vec<u32> {
    (1..g.len() as u32).filter(|&x| x <= g.i(x)).collect()
}

fn set_from_mask(g: &FiniteGroup, classes: &[u32], mask: u64) -> Vec<u32> {
    let mut out = Vec::new();
    for (k, &x) in classes.iter().enumerate() {
        if mask >> k & 1 == 1 {
            out.push(x);
            if g.i(x) != x {
                out.push(g.i(x));
            }
        }
    }
    out
}

fn generates(g: &FiniteGroup, set: &[u32]) -> bool {
    !set.is_empty() && g.subgroup(set).len() == g.len()
}

fn groups_up_to_24() -> Vec<FiniteGroup> {
    vec![
        library::symmetric(3).unwrap(),
        library::quaternion(),
        library::dihedral(8).unwrap(),
        library::cyclic(12).unwrap(),
        library::alternating(4).unwrap(),
        library::dihedral(12).unwrap(),
        library::dicyclic(12).unwrap(),
        library::abelian(&[2, 2, 2, 2]).unwrap(),
        exceptional("16,6"),
        exceptional("18,4"),
        library::dihedral(20).unwrap(),
        library::symmetric(4).unwrap(),
        library::dicyclic(24).unwrap(),
        exceptional("24,11"),
        library::cyclic(24).unwrap(),
    ]
}

fn criterion_1() -> Outcome {
    let groups = groups_up_to_24();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut mismatches = 0;
    let mut nonempty = 0;
    for _ in 0..10_000 {
        let g = &groups[rng.gen_range(0..groups.len())];
        let n = g.len() as u32;
        let x = rng.gen_range(0..n);
        let s0 = rng.gen_range(1..n);
        let s = rng.gen_range(1..n);
        let table = collision_set(g, &x, &s0, &s);
        mismatches += (table != brute_force_collisions(g, &x, &s0, &s)) as usize;
        nonempty += !table.is_empty() as usize;
    }
    outcome(
        mismatches == 0,
        format!(
            "10000 instances over {} groups of order <= 24, {mismatches} mismatches ({nonempty} non-empty)",
            groups.len()
        ),
    )
}

fn criterion_2() -> Outcome {
    let groups = groups_up_to_24();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut violations = 0;
    let mut premises = 0;
    for _ in 0..10_000 {
        let g = &groups[rng.gen_range(0..groups.len())];
        let n = g.len() as u32;
        let (a, s) = (rng.gen_range(0..n), rng.gen_range(0..n));
        // Half the triples share a² to exercise the premise.
        let b = if rng.gen_bool(0.5) {
            let sq = g.m(a, a);
            let roots: Vec<u32> = (0..n).filter(|&b| g.m(b, b) == sq).collect();
            roots[rng.gen_range(0..roots.len())]
        } else {
            rng.gen_range(0..n)
        };
        premises += (g.m(a, a) == g.m(b, b) && g.square(&g.m(s, a)) == g.square(&g.m(s, b))) as usize;
        violations += !squares_and_centralizers_holds(g, &a, &b, &s) as usize;
    }
    outcome(
        violations == 0,
        format!("10000 triples over {} groups, {premises} with premise, {violations} violations", groups.len()),
    )
}

fn pipeline<G: Group>(group: &G) -> (bool, String) {
    let opts = ConstructOptions { replay: false, ..Default::default() };
    let start = Instant::now();
    let gens = group.generators();
    let s0 = SymmetricSet::symmetric_closure(group, &gens);
    let s1 = match orientation_rigid_base(group, &s0, false) {
        Ok(s) => s,
        Err(e) => return (false, format!("{}: {e}", group.name())),
    };
    match grr_generating_set(group, &gens, &opts) {
        Err(e) => (false, format!("{}: {e}", group.name())),
        Ok((set, trace)) => {
            let p = &trace.postconditions;
            let added: Vec<_> = set.elems().iter().filter(|e| !s1.contains(e)).collect();
            let involution_added = added.iter().any(|e| group.is_identity(&group.square(e)));
            let ok = p.ok()
                && p.min_original >= 7
                && p.distinct_mod_inverse
                && p.max_added <= NEW_ELEMENT_MAX
                && !involution_added
                && set.len() <= size_bound(s1.len());
            (
                ok,
                format!(
                    "{} |S1|={} |S~|={} <= {} min={} max_new={} steps={} ({:.1?})",
                    group.name(),
                    s1.len(),
                    set.len(),
                    size_bound(s1.len()),
                    p.min_original,
                    p.max_added,
                    p.steps,
                    start.elapsed()
                ),
            )
        }
    }
}

fn criterion_3() -> Outcome {
    let runs = [pipeline(&Grigorchuk), pipeline(&Heisenberg), pipeline(&FreeGroup::new(2).unwrap())];
    outcome(runs.iter().all(|r| r.0), runs.iter().map(|r| r.1.clone()).collect::<Vec<_>>().join("; "))
}

fn criterion_4() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for id in ["6,1", "8,3", "10,1", "12,3", "16,13", "16,6", "18,4"] {
        let g = exceptional(id);
        let classes = inverse_classes(&g);
        let mut tested = 0;
        let mut grrs = 0;
        for mask in 1u64..(1 << classes.len()) {
            let set = set_from_mask(&g, &classes, mask);
            if !generates(&g, &set) {
                continue;
            }
            tested += 1;
            let s = SymmetricSet::new(&g, set, true).unwrap();
            grrs += verify_grr(&g, &s).unwrap().is_grr.unwrap() as usize;
        }
        pass &= grrs == 0;
        parts.push(format!("[{id}] {tested} sets/{grrs} GRR"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for id in ["24,11", "27,3", "32,26"] {
        let g = exceptional(id);
        let classes = inverse_classes(&g);
        let mut seen = HashSet::new();
        let mut grrs = 0;
        while seen.len() < 1000 {
            let mask: u64 = rng.gen::<u64>() & ((1 << classes.len()) - 1);
            let set = set_from_mask(&g, &classes, mask);
            if !generates(&g, &set) || !seen.insert(mask) {
                continue;
            }
            let s = SymmetricSet::new(&g, set, true).unwrap();
            grrs += verify_grr(&g, &s).unwrap().is_grr.unwrap() as usize;
        }
        pass &= grrs == 0;
        parts.push(format!("[{id}] sampled {}/{grrs} GRR", seen.len()));
    }
    outcome(pass, parts.join(", "))
}

fn find_grr(g: &FiniteGroup, seed: u64) -> Option<(usize, String)> {
    let classes = inverse_classes(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=20_000 {
        let mask: u64 = rng.gen::<u64>() & ((1 << classes.len()) - 1);
        let set = set_from_mask(g, &classes, mask);
        if !generates(g, &set) {
            continue;
        }
        let s = SymmetricSet::new(g, set, true).unwrap();
        let r = verify_grr(g, &s).unwrap();
        if r.is_grr == Some(true) {
            return (r.aut_order == g.len().to_string()).then_some((attempt, r.aut_order));
        }
    }
    None
}

fn criterion_5() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for g in [library::symmetric(4).unwrap(), library::dihedral(12).unwrap()] {
        match find_grr(&g, 5) {
            Some((attempt, aut)) => parts.push(format!("{}: GRR at attempt {attempt}, |Aut|={aut}", g.name())),
            None => {
                pass = false;
                parts.push(format!("{}: none found", g.name()));
            }
        }
    }
    outcome(pass, parts.join("; "))
}

fn criterion_6() -> Outcome {
    const N: usize = 100_000;
    let q = library::quaternion();
    let s3 = library::symmetric(3).unwrap();
    let qgens = [q.parse("i").unwrap(), q.parse("j").unwrap()];
    type Coset = (u32, Vec<u32>);
    let cases: [(&FiniteGroup, Vec<u32>, Vec<Coset>); 2] = [
        (&q, qgens.to_vec(), vec![(qgens[1], q.subgroup(&qgens[..1])), (0, q.subgroup(&[q.parse("-1").unwrap()]))]),
        (
            &s3,
            s3.generators(),
            vec![
                (s3.parse("(1,2)").unwrap(), s3.subgroup(&[s3.parse("(1,2,3)").unwrap()])),
                (s3.parse("(1,3)").unwrap(), s3.subgroup(&[s3.parse("(1,2)").unwrap()])),
            ],
        ),
    ];
    let mut checks = 0;
    let mut misses = Vec::new();
    let mut seed = 600;
    for (g, gens, cosets) in &cases {
        let mu = StepMeasure::lazy_uniform(*g, gens).unwrap();
        for n in [4, 16, 64] {
            let p = exact_convolution(g, &mu, n);
            let mut check = |what: String, e: Estimate, exact: f64| {
                checks += 1;
                if !e.covers(exact) {
                    misses.push(format!("{} {what} n={n}: {:.4} vs {exact:.4}", g.name(), e.estimate));
                }
            };
            seed += 1;
            check("commute".into(), estimate_commute_probability(*g, &mu, n, N, seed), exact_commute(g, &p));
            for a in [0, g.m(gens[0], gens[0])] {
                seed += 1;
                let e = estimate_square_probability(*g, &mu, &a, n, N, seed);
                check(format!("square={}", g.label(a)), e, exact_square(g, &p, a));
            }
            for (a, h) in cosets {
                seed += 1;
                let e = estimate_coset_probability(*g, &mu, a, |x| h.contains(x), n, N, seed);
                check(format!("coset {}H", g.label(*a)), e, exact_coset(g, &p, *a, h));
            }
        }
    }
    let mu = StepMeasure::lazy_uniform(&q, &qgens).unwrap();
    let limit = exact_square(&q, &exact_convolution(&q, &mu, 512), 0);
    let limit_ok = (limit - 0.25).abs() < 1e-3;
    outcome(
        misses.is_empty() && limit_ok,
        format!(
            "{checks} estimator checks at N=1e5, {} outside radius {}; Q8 P(g^2=1) at n=512 = {limit:.6}",
            misses.len(),
            misses.join(", ")
        ),
    )
}

fn criterion_7() -> Outcome {
    let d = InfiniteDihedral;
    let scope = CoverScope::Ball { radius: 10, subgroup_radius: 10 };
    let cover = coset_cover_check(&d, Some(&d.s()), &[d.identity()], &[], scope).unwrap();
    let mu = StepMeasure::lazy_uniform(&d, &d.generators()).unwrap();
    let e = estimate_coset_probability(&d, &mu, &d.identity(), |x| d.is_rotation(x), 200, 100_000, 7);
    let reflection = estimate_coset_probability(&d, &mu, &d.s(), |x| d.is_rotation(x), 200, 100_000, 8);
    let ok = cover.covers && (e.estimate - 0.5).abs() <= 0.01 && (reflection.estimate - 0.5).abs() <= 0.01;
    outcome(
        ok,
        format!(
            "cover on radius-10 ball ({} elements): {}; P(g_200 in H)={:.4}, P(g_200 in sH)={:.4}",
            cover.checked, cover.covers, e.estimate, reflection.estimate
        ),
    )
}

fn criterion_8() -> Outcome {
    // At N = 1e5 the radius (0.005) is comparable to the gap between n = 100
    // and n = 200; the criterion leaves N free.
    const N: usize = 400_000;
    let h = Heisenberg;
    let mu = StepMeasure::lazy_uniform(&h, &h.generators()).unwrap();
    let ladder: Vec<Estimate> =
        [50, 100, 200].iter().map(|&n| estimate_commute_probability(&h, &mu, n, N, 8)).collect();
    let verdict = trend_verdict(&ladder);
    let z2 = FreeAbelian::new(2).unwrap();
    let mu = StepMeasure::lazy_uniform(&z2, &z2.generators()).unwrap();
    let z = estimate_commute_probability(&z2, &mu, 200, N, 8);
    let text: Vec<String> = ladder.iter().map(|e| format!("{:.4}±{:.4}", e.estimate, e.radius)).collect();
    outcome(
        verdict == TrendVerdict::Decay && z.estimate == 1.0,
        format!("N={N}; Heisenberg n=50,100,200: {} ({verdict:?}); Z^2: {}", text.join(", "), z.estimate),
    )
}

fn abelian_invariants_up_to_16() -> Vec<Vec<u32>> {
    [
        &[2][..],
        &[3],
        &[4],
        &[2, 2],
        &[5],
        &[6],
        &[7],
        &[8],
        &[4, 2],
        &[2, 2, 2],
        &[9],
        &[3, 3],
        &[10],
        &[11],
        &[12],
        &[6, 2],
        &[13],
        &[14],
        &[15],
        &[16],
        &[8, 2],
        &[4, 4],
        &[4, 2, 2],
        &[2, 2, 2, 2],
    ]
    .iter()
    .map(|x| x.to_vec())
    .collect()
}

/// Generalized dicyclic groups of order at most 16: Q8, Dic3, Q16,
/// Q8 x Z2 and Z4 ⋊ Z4.
fn dicyclic_up_to_16() -> Vec<FiniteGroup> {
    let q8 = library::quaternion();
    let q8z2 = q8.direct_product(&library::cyclic(2).unwrap()).unwrap().with_name("Q8xZ2");
    // (a, b) with b a b^-1 = a^-1 on Z4 x Z4.
    let z4z4 = FiniteGroup::generate(
        "Z4:Z4",
        (0u8, 0u8),
        &[(1, 0), (0, 1)],
        |&(a1, b1), &(a2, b2)| {
            let a2 = if b1 % 2 == 1 { (4 - a2) % 4 } else { a2 };
            ((a1 + a2) % 4, (b1 + b2) % 4)
        },
        |&(a, b)| format!("a^{a}b^{b}"),
    )
    .unwrap();
    vec![q8, library::dicyclic(12).unwrap(), library::dicyclic(16).unwrap(), q8z2, z4z4]
}

fn rigidity_sets(g: &FiniteGroup) -> Vec<SymmetricSet<u32>> {
    let s0 = SymmetricSet::symmetric_closure(g, &g.small_generating_set());
    let mut sets = vec![s0.clone()];
    if let Ok(s1) = orientation_rigid_base(g, &s0, true) {
        sets.push(s1);
    }
    sets
}

fn criterion_9() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    let mut abelian = 0;
    let mut elementary = Vec::new();
    for inv in abelian_invariants_up_to_16() {
        let g = library::abelian(&inv).unwrap();
        let has_large_order = (0..g.len() as u32).any(|x| g.m(x, x) != 0);
        for s in rigidity_sets(&g) {
            let r = orientation_rigidity_check(&g, &s).unwrap();
            if has_large_order {
                let ok = !r.rigid
                    && is_orientation_witness(&g, &s, &inverse_map(&g))
                    && is_orientation_witness(&g, &s, r.map.as_ref().unwrap());
                pass &= ok;
                if !ok {
                    notes.push(format!("{inv:?} failed"));
                }
            } else if !r.rigid {
                pass = false;
                notes.push(format!("{inv:?} elementary abelian but not rigid"));
            }
        }
        if has_large_order {
            abelian += 1;
        } else {
            elementary.push(format!("{inv:?}"));
        }
    }
    let mut dicyclic = 0;
    for g in dicyclic_up_to_16() {
        let Some(w) = generalized_dicyclic_witness(&g) else {
            pass = false;
            notes.push(format!("{} has no dicyclic witness", g.name()));
            continue;
        };
        for s in rigidity_sets(&g) {
            let r = orientation_rigidity_check(&g, &s).unwrap();
            let ok = !r.rigid && is_orientation_witness(&g, &s, &dicyclic_map(&g, &w));
            pass &= ok;
            if !ok {
                notes.push(format!("{} failed", g.name()));
            }
        }
        dicyclic += 1;
    }
    let s3 = library::symmetric(3).unwrap();
    let transpositions: Vec<u32> = ["(1,2)", "(1,3)", "(2,3)"].iter().map(|t| s3.parse(t).unwrap()).collect();
    let mut s3_rigid = true;
    for s0 in
        [SymmetricSet::new(&s3, transpositions, true).unwrap(), SymmetricSet::symmetric_closure(&s3, &s3.generators())]
    {
        let s1 = orientation_rigid_base(&s3, &s0, false).unwrap();
        s3_rigid &= orientation_rigidity_check(&s3, &s1).unwrap().rigid;
    }
    pass &= s3_rigid;
    outcome(
        pass,
        format!(
            "{abelian} abelian groups with an element of order > 2 and {dicyclic} generalized dicyclic groups not rigid \
             (witnesses verified); S3 rigid: {s3_rigid}; elementary abelian {} rigid as expected{}",
            elementary.join(" "),
            if notes.is_empty() { String::new() } else { format!("; {}", notes.join(", ")) }
        ),
    )
}

type Criterion = (u8, &'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "collision table equals brute force", Duration::from_secs(60), criterion_1),
        (2, "squares and centralizers", Duration::from_secs(60), criterion_2),
        (3, "pipeline postconditions", Duration::from_secs(30 * 60), criterion_3),
        (4, "exceptional groups have no GRR", Duration::from_secs(30 * 60), criterion_4),
        (5, "GRRs for S4 and D12", Duration::from_secs(10 * 60), criterion_5),
        (6, "Monte Carlo agrees with exact convolution", Duration::from_secs(5 * 60), criterion_6),
        (7, "coset cover and index-2 coset probability", Duration::from_secs(5 * 60), criterion_7),
        (8, "commuting probability contrast", Duration::from_secs(5 * 60), criterion_8),
        (9, "orientation rigidity ground truth", Duration::from_secs(60), criterion_9),
    ];
    let filter: Option<u8> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (k, name, limit, run) in criteria {
        if filter.is_some_and(|f| f != k) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        let t = start.elapsed();
        let pass = o.pass && t <= limit;
        failed += !pass as usize;
        println!(
            "criterion {k} {}: {name} [{:.1?}, limit {:?}] {}",
            if pass { "PASS" } else { "FAIL" },
            t,
            limit,
            o.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
