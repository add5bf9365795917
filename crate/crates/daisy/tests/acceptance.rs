//! Release acceptance: eight end-to-end criteria, each reported as a
//! single PASS/FAIL line. Runs without the default test harness so the
//! lines always reach the console:
//!
//! ```text
//! cargo test --test acceptance
//! ```
//!
//! Criteria 1, 3, 5, and 7 share one walk over the full labeled census
//! with at most two triple vertices (634,081 arrowed instances), so the
//! census is enumerated once.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use daisy::arcs::{closed_arc_parities, decompose_arcs, short_grade_lift, Parity};
use daisy::grading::{
    grade, grade_obstructing_loops, grade_with_stats, path_grading_difference, validate_grading,
};
use daisy::model::{DaisyGraph, Path, Slot, VertexKind};
use daisy::oracle::{enumerate_instances, oracle_gradable, random_chain, random_instance,
    EnumerationSpec, RandomSpec};
use daisy::realize::{decide_realizable, ManifoldClass};
use daisy::textio::{export_dot, parse, serialize};

fn main() {
    let mut failures = 0u32;
    let mut report = |n: u32, title: &str, outcome: Result<String, String>| match outcome {
        Ok(detail) => println!("criterion {n}: PASS — {title}: {detail}"),
        Err(why) => {
            println!("criterion {n}: FAIL — {title}: {why}");
            failures += 1;
        }
    };

    let walk = walk_census();

    report(1, "oracle equivalence on the exhaustive censuses", criterion_1(&walk));
    report(2, "path differences equal grade deltas", criterion_2());
    report(3, "grade-obstructing loops are sound", criterion_3(&walk));
    report(4, "short lift exists iff closed arcs are even", criterion_4());
    report(5, "realizability decision table and monotonicity", criterion_5(&walk));
    report(6, "grading runs in linear time", criterion_6());
    report(7, "double-arc laws hold everywhere", criterion_7(&walk));
    report(8, "golden corpus round-trips and stable DOT", criterion_8());

    if failures > 0 {
        println!("acceptance: {failures} criterion(s) failed");
        std::process::exit(1);
    }
    println!("acceptance: all 8 criteria passed");
}

/// Everything criteria 1, 3, 5, and 7 need from one pass over the census.
struct CensusWalk {
    instances: u64,
    gradable: u64,
    elapsed: Duration,
    verdict_mismatches: u64,
    grading_mismatches: u64,
    obstructed: u64,
    obstruction_unsound: u64,
    consecutive_loop_instances: u64,
    consecutive_loops_missed: u64,
    table_mismatches: u64,
    monotonicity_violations: u64,
    arc_law_violations: u64,
}

fn full_census_spec() -> EnumerationSpec {
    EnumerationSpec {
        max_triple_vertices: 2,
        max_internal_edges: 6,
        pendant_completion: true,
        arrow_exhaustive: true,
    }
}

fn expected_realizable(class: ManifoldClass, gradable: bool, db_free: bool) -> bool {
    match class {
        ManifoldClass::PERIODIC_CLOSED => gradable && db_free,
        ManifoldClass::PERIODIC_BOUNDED => gradable,
        ManifoldClass::INFINITE_CLOSED => db_free,
        ManifoldClass::INFINITE_BOUNDED => true,
    }
}

/// The three per-graph arc laws: every edge on exactly one arc, open
/// arcs pair up the degree-1 vertices, and each triple vertex is crossed
/// through each of its three pairs exactly once.
fn arc_laws_hold(g: &DaisyGraph) -> bool {
    let decomposition = decompose_arcs(g);

    let mut edge_uses: BTreeMap<_, u32> = BTreeMap::new();
    let mut crossings: BTreeMap<_, u32> = BTreeMap::new();
    for arc in &decomposition.arcs {
        for e in &arc.edges {
            *edge_uses.entry(e.clone()).or_default() += 1;
        }
        for (v, pair) in &arc.passages {
            *crossings.entry((v.clone(), pair.clone())).or_default() += 1;
        }
    }

    if g.edges.keys().any(|e| edge_uses.get(e) != Some(&1)) || edge_uses.len() != g.edges.len() {
        return false;
    }

    let leaves = g.vertices.values().filter(|k| **k != VertexKind::Triple).count();
    if decomposition.open_arcs().count() != leaves / 2 {
        return false;
    }

    let mut expected_crossings = 0;
    for v in g.triple_vertices() {
        for pair in g.pairs_at(v) {
            expected_crossings += 1;
            if crossings.get(&(v.clone(), pair.clone())) != Some(&1) {
                return false;
            }
        }
    }
    crossings.len() == expected_crossings
}

fn walk_census() -> CensusWalk {
    let start = Instant::now();
    let mut w = CensusWalk {
        instances: 0,
        gradable: 0,
        elapsed: Duration::ZERO,
        verdict_mismatches: 0,
        grading_mismatches: 0,
        obstructed: 0,
        obstruction_unsound: 0,
        consecutive_loop_instances: 0,
        consecutive_loops_missed: 0,
        table_mismatches: 0,
        monotonicity_violations: 0,
        arc_law_violations: 0,
    };

    for instance in enumerate_instances(full_census_spec()) {
        let g = &instance.graph;
        w.instances += 1;

        // Criterion 1: the linear-time decision against the oracle.
        let fast = grade(g);
        let slow = oracle_gradable(g).expect("census instances stay within the oracle limit");
        match (&fast, &slow) {
            (Ok(a), Some(b)) => {
                w.gradable += 1;
                if a != b {
                    w.grading_mismatches += 1;
                }
            }
            (Err(_), None) => {}
            _ => w.verdict_mismatches += 1,
        }

        // Criterion 3: obstruction soundness.
        let obstructions = grade_obstructing_loops(g);
        if !obstructions.is_empty() {
            w.obstructed += 1;
            if fast.is_ok() || slow.is_some() {
                w.obstruction_unsound += 1;
            }
        }
        let mut has_consecutive_loop = false;
        for v in g.base.triple_vertices() {
            for pair in g.base.pairs_at(v) {
                if pair.lo().edge == pair.hi().edge {
                    has_consecutive_loop = true;
                    if !obstructions.contains(&pair.lo().edge) {
                        w.consecutive_loops_missed += 1;
                    }
                }
            }
        }
        if has_consecutive_loop {
            w.consecutive_loop_instances += 1;
        }

        // Criterion 5: the decision table from independent bits.
        let gradable = fast.is_ok();
        let db_free = g.base.db_vertices().is_empty();
        let mut verdicts = [false; 4];
        for (i, class) in ManifoldClass::ALL.into_iter().enumerate() {
            verdicts[i] = decide_realizable(g, class).realizable;
            if verdicts[i] != expected_realizable(class, gradable, db_free) {
                w.table_mismatches += 1;
            }
        }
        // Relaxing boundary (closed → bounded) or homology (periodic →
        // infinite) never destroys realizability.
        let [pc, pb, ic, ib] = verdicts;
        if (pc && !pb) || (ic && !ib) || (pc && !ic) || (pb && !ib) {
            w.monotonicity_violations += 1;
        }

        // Criterion 7 (census half).
        if !arc_laws_hold(&g.base) {
            w.arc_law_violations += 1;
        }
    }

    w.elapsed = start.elapsed();
    w
}

fn criterion_1(w: &CensusWalk) -> Result<String, String> {
    // The exact 120-instance single-vertex layer, checked on its own.
    let pendant_spec = EnumerationSpec {
        max_triple_vertices: 1,
        max_internal_edges: 0,
        pendant_completion: true,
        arrow_exhaustive: true,
    };
    let mut layer = 0u32;
    for instance in enumerate_instances(pendant_spec) {
        if instance.triple_vertices != 1 {
            continue;
        }
        layer += 1;
        let fast = grade(&instance.graph).ok();
        let slow = oracle_gradable(&instance.graph).unwrap();
        if fast != slow {
            return Err(format!("{}: verdicts differ on the 120-instance census", instance.id));
        }
    }
    if layer != 120 {
        return Err(format!("expected the 1-vertex pendant census to have 120 instances, got {layer}"));
    }

    if w.verdict_mismatches + w.grading_mismatches > 0 {
        return Err(format!(
            "{} verdict and {} grading mismatches over {} instances",
            w.verdict_mismatches, w.grading_mismatches, w.instances
        ));
    }
    if w.instances != 634_081 {
        return Err(format!("expected 634081 census instances, walked {}", w.instances));
    }
    if w.elapsed > Duration::from_secs(60) {
        return Err(format!("census walk took {:.1?}, over the one-minute budget", w.elapsed));
    }
    Ok(format!(
        "{} instances ({} gradable) + the 120-instance layer agree exactly in {:.1?}",
        w.instances, w.gradable, w.elapsed
    ))
}

/// Deterministic splitmix64, so the path walks need no extra dependency.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn criterion_2() -> Result<String, String> {
    let mut instances = 0u64;
    let mut paths = 0u64;
    let mut seed = 0u64;

    while instances < 1000 {
        // Alternate forests (always gradable) with general graphs kept
        // only when gradable, so both shapes are exercised.
        let spec = RandomSpec {
            triple_vertices: 3,
            forest_only: instances.is_multiple_of(2),
            ..RandomSpec::default()
        };
        let g = random_instance(seed, &spec);
        seed += 1;
        let Ok(grading) = grade(&g) else { continue };
        instances += 1;

        let triples: Vec<_> = g.base.triple_vertices().cloned().collect();
        let mut rng = Rng(seed.wrapping_mul(0x9E37_79B9));
        for _ in 0..10 {
            // A random walk that crosses 1..=6 triple vertices.
            let mut at = triples[rng.below(triples.len())].clone();
            let halves = g.base.half_edges_at(&at);
            let mut edges = vec![halves[rng.below(halves.len())].edge.clone()];
            let mut vertices = Vec::new();
            for _ in 0..=rng.below(6) {
                let halves = g.base.half_edges_at(&at);
                let out = halves[rng.below(halves.len())].clone();
                vertices.push(at.clone());
                edges.push(out.edge.clone());
                let (a, b) = g.base.endpoints(&out.edge).unwrap();
                let next = if out.slot == Slot::Zero { b } else { a }.clone();
                if g.base.kind(&next) != Some(VertexKind::Triple) {
                    break;
                }
                at = next;
            }

            let first = grading.grade_of(&edges[0]).unwrap();
            let last = grading.grade_of(edges.last().unwrap()).unwrap();
            let path = Path::new(edges, vertices);
            let got = path_grading_difference(&g, &path)
                .map_err(|e| format!("seed {}: rejected path: {e}", seed - 1))?;
            if got != last - first {
                return Err(format!(
                    "seed {}: path difference {got} but grades differ by {}",
                    seed - 1,
                    last - first
                ));
            }
            paths += 1;
        }
    }
    Ok(format!("{instances} gradable instances × 10 random paths ({paths} exact matches)"))
}

fn criterion_3(w: &CensusWalk) -> Result<String, String> {
    if w.obstruction_unsound > 0 {
        return Err(format!(
            "{} obstructed instances were still graded (of {} obstructed)",
            w.obstruction_unsound, w.obstructed
        ));
    }
    if w.consecutive_loops_missed > 0 {
        return Err(format!(
            "{} consecutive-pair loops not reported as obstructions",
            w.consecutive_loops_missed
        ));
    }
    Ok(format!(
        "{} obstructed instances all refused by both deciders; every consecutive-pair loop flagged ({} instances)",
        w.obstructed, w.consecutive_loop_instances
    ))
}

fn criterion_4() -> Result<String, String> {
    // One instance per underlying plain graph: arrows not enumerated.
    let spec = EnumerationSpec { arrow_exhaustive: false, ..full_census_spec() };
    let mut graphs = 0u64;
    let mut liftable = 0u64;
    for instance in enumerate_instances(spec) {
        let g = &instance.graph.base;
        graphs += 1;
        let every_closed_arc_even =
            closed_arc_parities(g).iter().all(|p| p.parity == Parity::Even);
        match short_grade_lift(g) {
            Ok((lifted, grading)) => {
                liftable += 1;
                if !every_closed_arc_even {
                    return Err(format!("{}: lifted despite an odd closed arc", instance.id));
                }
                if !grading.grades.values().all(|v| *v == 0 || *v == 1) {
                    return Err(format!("{}: lift used grades outside {{0,1}}", instance.id));
                }
                if !validate_grading(&lifted, &grading).is_ok() {
                    return Err(format!("{}: lifted grading fails validation", instance.id));
                }
                if grade(&lifted).is_err() {
                    return Err(format!("{}: lifted graph not gradable", instance.id));
                }
            }
            Err(_) if every_closed_arc_even => {
                return Err(format!("{}: refused although all closed arcs are even", instance.id));
            }
            Err(_) => {}
        }
    }
    Ok(format!("{liftable} of {graphs} plain graphs lift; equivalence with arc parity is exact"))
}

fn criterion_5(w: &CensusWalk) -> Result<String, String> {
    if w.table_mismatches > 0 {
        return Err(format!("{} verdicts deviate from the decision table", w.table_mismatches));
    }
    if w.monotonicity_violations > 0 {
        return Err(format!("{} monotonicity violations", w.monotonicity_violations));
    }
    Ok(format!(
        "4 × {} verdicts match the (gradable, DB-free) table; monotonicity exception-free",
        w.instances
    ))
}

/// Documented linear-time constant: the walk touches each half-edge a
/// bounded number of times; empirically visits/|E| ≈ 2.2 on chains, and
/// the acceptance cap is 3.0.
const VISITS_PER_EDGE_CAP: f64 = 3.0;

/// Fastest of `runs` timings: scheduler noise only ever adds time, so the
/// minimum is the most stable estimate of the true cost.
fn best_grade_millis(t: usize, runs: usize) -> (f64, f64, usize) {
    let g = random_chain(42, t);
    let edges = g.base.edges.len();
    let mut best = f64::MAX;
    let mut ratio = 0.0;
    for _ in 0..runs {
        let start = Instant::now();
        let (result, stats) = grade_with_stats(&g);
        best = best.min(start.elapsed().as_secs_f64() * 1e3);
        assert!(result.is_ok(), "chains are gradable by construction");
        ratio = stats.half_edge_visits as f64 / edges as f64;
    }
    (best, ratio, edges)
}

fn criterion_6() -> Result<String, String> {
    // Visit counts at three decades of |E|.
    let mut ratios = Vec::new();
    let mut sizes = Vec::new();
    for t in [200, 2_000, 20_000] {
        let (_, ratio, edges) = best_grade_millis(t, 1);
        if ratio > VISITS_PER_EDGE_CAP {
            return Err(format!("visits/|E| = {ratio:.2} exceeds the cap {VISITS_PER_EDGE_CAP}"));
        }
        ratios.push(ratio);
        sizes.push(edges);
    }
    let (min, max) = (ratios.iter().cloned().fold(f64::MAX, f64::min),
                      ratios.iter().cloned().fold(f64::MIN, f64::max));
    if (max - min) / min >= 0.10 {
        return Err(format!("visits/|E| varies by ≥ 10% across sizes: {ratios:?}"));
    }

    // Wall-clock doubling on sizes big enough to out-shout timer noise.
    let mut t = 20_000;
    let mut base = best_grade_millis(t, 7);
    while base.0 < 40.0 && t < 320_000 {
        t *= 2;
        base = best_grade_millis(t, 7);
    }
    let doubled = best_grade_millis(2 * t, 7);
    let ratio = doubled.0 / base.0;
    if !(1.5..=3.0).contains(&ratio) {
        return Err(format!(
            "doubling |E| {} → {} scaled time by {ratio:.2} (want 1.5..3.0; {:.1}ms → {:.1}ms)",
            base.2, doubled.2, base.0, doubled.0
        ));
    }
    Ok(format!(
        "visits/|E| = {:.2}/{:.2}/{:.2} at |E| = {}/{}/{} (cap {VISITS_PER_EDGE_CAP}, spread < 10%); \
         doubling {} → {} edges scaled time ×{ratio:.2} (best of 7)",
        ratios[0], ratios[1], ratios[2], sizes[0], sizes[1], sizes[2], base.2, doubled.2
    ))
}

fn criterion_7(w: &CensusWalk) -> Result<String, String> {
    if w.arc_law_violations > 0 {
        return Err(format!("{} census instances break an arc law", w.arc_law_violations));
    }

    // The random half: larger, messier graphs than the census reaches.
    let mut checked = 0u64;
    for seed in 0..500 {
        let spec = RandomSpec {
            triple_vertices: 1 + (seed as usize % 8),
            db_probability: 0.2,
            circles: (seed % 3) as u32,
            ..RandomSpec::default()
        };
        let g = random_instance(seed, &spec).base;
        if !arc_laws_hold(&g) {
            return Err(format!("random instance (seed {seed}) breaks an arc law"));
        }
        checked += 1;
    }
    Ok(format!(
        "partition, endpoint, and triple-crossing laws hold on {} census + {checked} random instances",
        w.instances
    ))
}

fn criterion_8() -> Result<String, String> {
    let dir = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut count = 0u32;
    for entry in std::fs::read_dir(&dir).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        if !matches!(ext, "dg" | "adg" | "odg") {
            continue;
        }
        let name = path.file_name().unwrap().to_str().unwrap().to_owned();
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let doc = parse(&text).map_err(|e| format!("{name}: {e}"))?;

        let canonical = serialize(&doc);
        let reparsed = parse(&canonical).map_err(|e| format!("{name}: canonical reparse: {e}"))?;
        if serialize(&reparsed) != canonical {
            return Err(format!("{name}: canonical text is not a serialization fixed point"));
        }
        if export_dot(&doc) != export_dot(&reparsed) {
            return Err(format!("{name}: DOT bytes differ across identical inputs"));
        }
        count += 1;
    }
    if count < 20 {
        return Err(format!("golden corpus has only {count} documents (need ≥ 20)"));
    }
    let mut detail = String::new();
    write!(detail, "{count} golden documents round-trip; DOT export byte-stable").unwrap();
    Ok(detail)
}
