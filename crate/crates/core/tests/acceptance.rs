//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints exactly one PASS or FAIL line; exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use seidel_core::classes::{census, switching_class};
use seidel_core::enumerate::{iso_class_representatives, labeled_graphs};
use seidel_core::generators as gens;
use seidel_core::iso::{are_similar, canonical_form, is_isomorphic};
use seidel_core::iss::{edge_iss_direct, is_iss};
use seidel_core::invariants::seidel_char_poly;
use seidel_core::switching::{switch_set, switch_vertex};
use seidel_core::verify::{self, random_graph, random_permutation, SuiteReport, SEED};
use seidel_core::{Graph, VertexSet};

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn lib<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn reps_up_to(max: usize) -> Vec<Graph> {
    (1..=max).flat_map(|n| iso_class_representatives(n).unwrap()).collect()
}

fn suite_clean(report: &SuiteReport) -> Result<(), String> {
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(format!(
            "{}: {} violations, first {}",
            report.suite,
            report.violations.len(),
            v.to_json()
        )),
    }
}

fn algebra_exhaustive() -> Outcome {
    let start = Instant::now();
    let report = lib(verify::algebra(5))?;
    let elapsed = start.elapsed();
    suite_clean(&report)?;
    let mut definitional = 0u64;
    for n in 1..=5 {
        for g in lib(labeled_graphs(n))? {
            for s in 0..1u64 << n {
                let set = lib(VertexSet::from_mask(n, s))?;
                ensure(
                    lib(switch_set(&g, &set))? == switch_by_definition(&g, s),
                    format!("switch of {:?} by mask {s} disagrees with the definition", g.edges()),
                )?;
                definitional += 1;
            }
        }
    }
    ensure(
        elapsed < Duration::from_secs(30),
        format!("took {elapsed:.1?}, budget 30 s"),
    )?;
    Ok(format!(
        "{} identity checks and {definitional} switches against the definition, {elapsed:.1?}",
        report.checks
    ))
}

fn fig1_switch() -> Outcome {
    let switched = lib(switch_vertex(&gens::fig1(), gens::FIG1_V))?;
    let mut expected = vec![
        (gens::FIG1_V, gens::FIG1_Z),
        (gens::FIG1_X, gens::FIG1_Y),
        (gens::FIG1_Y, gens::FIG1_Z),
    ];
    expected.sort();
    ensure(switched.edges() == expected, format!("got {:?}", switched.edges()))?;
    Ok("switch at v gives {vz, xy, yz}".into())
}

fn order_four_census() -> Outcome {
    let start = Instant::now();
    let records = lib(census(4))?;
    let elapsed = start.elapsed();
    ensure(records.len() == 3, format!("{} classes", records.len()))?;
    let named = [
        ("P4", lib(gens::path(3))?),
        ("C4", lib(gens::cycle(4))?),
        ("K4", lib(gens::complete(4))?),
    ];
    for r in &records {
        let hits: Vec<&str> = named
            .iter()
            .filter(|(_, g)| r.class.contains(g).unwrap())
            .map(|(name, _)| *name)
            .collect();
        ensure(hits.len() == 1, format!("class {} holds {hits:?}", r.class_id))?;
    }
    // Each named graph is a valid representative: brute-force classes agree.
    let mut brute_classes = BTreeSet::new();
    for (_, g) in &named {
        let class: BTreeSet<Vec<bool>> = (0..16u64)
            .map(|s| brute_canonical(&switch_by_definition(g, s)))
            .collect();
        brute_classes.insert(class);
    }
    ensure(brute_classes.len() == 3, "named graphs share a class")?;
    let sizes: usize = brute_classes.iter().map(BTreeSet::len).sum();
    ensure(sizes == 11, format!("brute classes cover {sizes} of 11 graphs"))?;
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:.1?}"))?;
    Ok(format!("3 classes, one each for P4, C4, K4, {elapsed:.1?}"))
}

fn tadpole() -> Outcome {
    let t = lib(gens::tadpole(3, 4))?;
    let (u, v) = (gens::TADPOLE_U, gens::TADPOLE_V);
    let su = lib(switch_vertex(&t, u))?;
    let sv = lib(switch_vertex(&t, v))?;
    ensure(lib(is_isomorphic(&su, &sv))?, "u(T) and v(T) not isomorphic")?;
    ensure(brute_isomorphic(&su, &sv), "brute force: u(T) and v(T) not isomorphic")?;
    ensure(!lib(are_similar(&t, u, v))?, "u and v are similar")?;
    ensure(!brute_similar(&t, u, v), "brute force: u and v are similar")?;
    Ok("u(T) ≅ v(T) with u, v in different orbits".into())
}

fn iss_by_brute(g: &Graph, s: &VertexSet) -> bool {
    brute_isomorphic(g, &switch_by_definition(g, s.mask()))
}

fn vertex_iss_examples() -> Outcome {
    let k23 = lib(gens::complete_bipartite(2, 3))?;
    for v in 2..5 {
        let s = lib(VertexSet::singleton(5, v))?;
        ensure(lib(is_iss(&k23, &s))? && iss_by_brute(&k23, &s), format!("K2,3 vertex {v}"))?;
    }
    for n in 1..=3 {
        let g = lib(gens::complete_bipartite(n, n + 1))?;
        for v in n..2 * n + 1 {
            ensure(lib(g.degree(v))? == n, "degree")?;
            let s = lib(VertexSet::singleton(2 * n + 1, v))?;
            ensure(
                lib(is_iss(&g, &s))? && iss_by_brute(&g, &s),
                format!("K{n},{} vertex {v}", n + 1),
            )?;
        }
    }
    Ok("K2,3 and K(n,n+1) for n <= 3".into())
}

fn edge_iss_examples() -> Outcome {
    let mut checked = 0;
    for m in 1..=4 {
        for n in 1..=4 {
            let g = lib(gens::complete_bipartite(m, n))?;
            for (x, y) in g.edges() {
                ensure(lib(edge_iss_direct(&g, x, y))?, format!("K{m},{n} edge {x}{y}"))?;
                checked += 1;
            }
        }
    }
    let q3 = gens::cube_q3();
    for (x, y) in q3.edges() {
        ensure(!lib(edge_iss_direct(&q3, x, y))?, format!("Q3 edge {x}{y} is an edge-ISS"))?;
        let s = lib(VertexSet::from_indices(8, &[x, y]))?;
        ensure(!iss_by_brute(&q3, &s), format!("brute force: Q3 edge {x}{y}"))?;
    }
    let prism = gens::prism_c3p2();
    for (x, y) in prism.edges() {
        let cross = y == x + 3;
        let s = lib(VertexSet::from_indices(6, &[x, y]))?;
        ensure(
            lib(edge_iss_direct(&prism, x, y))? == cross && iss_by_brute(&prism, &s) == cross,
            format!("prism edge {x}{y}"),
        )?;
    }
    Ok(format!("{checked} bipartite edges, Q3 none, prism cross edges only"))
}

fn edge_sufficiency() -> Outcome {
    let start = Instant::now();
    let report = lib(verify::edge_iss_suite(6))?;
    suite_clean(&report)?;
    // Re-check every criterion positive with a brute-force isomorphism.
    let mut positives = 0;
    for g in reps_up_to(6) {
        for (x, y) in g.edges() {
            let r = lib(seidel_core::iss::edge_iss_theorem(&g, x, y))?;
            if r.theorem_verdict {
                let s = lib(VertexSet::from_indices(g.order(), &[x, y]))?;
                ensure(iss_by_brute(&g, &s), format!("{:?} edge {x}{y}", g.edges()))?;
                positives += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), format!("took {elapsed:.1?}"))?;
    Ok(format!("{positives} criterion positives confirmed, 0 violations, {elapsed:.1?}"))
}

fn swept_claims() -> Outcome {
    let edge = lib(verify::edge_iss_suite(6))?;
    let iss = lib(verify::iss_suite(6))?;
    ensure(edge == lib(verify::edge_iss_suite(6))?, "edge-ISS report differs between runs")?;
    ensure(iss == lib(verify::iss_suite(6))?, "ISS report differs between runs")?;
    for f in edge.findings.iter().chain(&iss.findings) {
        ensure(
            seidel_core::graph6::from_graph6(&f.graph6).is_ok() && !f.witness_masks.is_empty(),
            format!("finding without witness: {}", f.to_json()),
        )?;
    }
    let count = |claim: &str| {
        edge.findings
            .iter()
            .chain(&iss.findings)
            .filter(|f| f.claim_id == claim)
            .count()
    };
    for line in edge.summary.iter().chain(&iss.summary) {
        println!("    {line}");
    }
    Ok(format!(
        "deterministic; necessity {} / decomposition {} / G-e {} / closure {} disagreements",
        count("edge-iss.necessity"),
        count("edge-iss.decomposition"),
        count("edge-iss.g-minus-e"),
        count("iss.closure")
    ))
}

fn seidel_invariance() -> Outcome {
    let report = lib(verify::invariants(6))?;
    suite_clean(&report)?;
    let mut graphs = reps_up_to(6);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    graphs.extend((0..200).map(|_| random_graph(&mut rng, 8)));
    for g in &graphs {
        let poly = lib(seidel_char_poly(g))?;
        let reference = char_poly_by_minors(g);
        let got: Vec<i128> = poly
            .to_i64_vec()
            .ok_or("coefficient overflow")?
            .into_iter()
            .map(i128::from)
            .collect();
        ensure(got == reference, format!("{:?}: {got:?} vs minors {reference:?}", g.edges()))?;
    }
    Ok(format!(
        "{} switch checks; {} polynomials match the principal-minor expansion",
        report.checks,
        graphs.len()
    ))
}

fn complement_class_sizes() -> Outcome {
    let brute_size = |g: &Graph| {
        (0..1u64 << g.order())
            .map(|s| brute_canonical(&switch_by_definition(g, s)))
            .collect::<BTreeSet<_>>()
            .len()
    };
    let graphs = reps_up_to(6);
    for g in &graphs {
        let a = lib(switching_class(g))?.size();
        let b = lib(switching_class(&g.complement()))?.size();
        ensure(a == b, format!("{:?}: {a} vs {b}", g.edges()))?;
        ensure(brute_size(g) == a && brute_size(&g.complement()) == b, "brute class size differs")?;
    }
    Ok(format!("{} graphs of order <= 6", graphs.len()))
}

fn iso_oracle() -> Outcome {
    let mut pairs = 0u64;
    for n in 1..=5 {
        let graphs: Vec<Graph> = lib(labeled_graphs(n))?.collect();
        let keys: Vec<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        let brute: Vec<_> = graphs.iter().map(brute_canonical).collect();
        for i in 0..graphs.len() {
            for j in i..graphs.len() {
                ensure(
                    (keys[i] == keys[j]) == (brute[i] == brute[j]),
                    format!("{:?} vs {:?}", graphs[i].edges(), graphs[j].edges()),
                )?;
                pairs += 1;
            }
        }
    }
    // Half the random pairs are relabellings, half of those with one edge
    // toggled, so both verdicts are exercised.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x150);
    let mut positives = 0;
    for k in 0..500 {
        let n = 6 + k % 3;
        let g = random_graph(&mut rng, n);
        let h = match k % 4 {
            0 | 1 => lib(g.relabel(&random_permutation(&mut rng, n)))?,
            2 => {
                let h = lib(g.relabel(&random_permutation(&mut rng, n)))?;
                if h.has_edge(0, 1) {
                    lib(h.without_edge(0, 1))?
                } else {
                    lib(h.with_edge(0, 1))?
                }
            }
            _ => random_graph(&mut rng, n),
        };
        let fast = lib(is_isomorphic(&g, &h))?;
        ensure(fast == brute_isomorphic(&g, &h), format!("{:?} vs {:?}", g.edges(), h.edges()))?;
        positives += fast as usize;
    }
    Ok(format!("{pairs} pairs of order <= 5, 500 random pairs ({positives} isomorphic)"))
}

fn half_join() -> Outcome {
    let results = lib(verify::half_join_sweep())?;
    ensure(results == lib(verify::half_join_sweep())?, "sweep differs between runs")?;
    ensure(results.len() == 8 * 4, format!("{} instances", results.len()))?;
    let mut positives = 0;
    for r in &results {
        ensure(r.reverified, format!("{}x{} not re-verified", r.m, r.n))?;
        let (a, b) = lib(gens::half_join_parts(r.m, r.n))?;
        for (set, verdict) in [(a, r.a_iss), (b, r.b_iss)] {
            ensure(
                iss_by_brute(&r.graph, &set) == verdict,
                format!("{}x{} part {set}: brute force disagrees", r.m, r.n),
            )?;
            positives += verdict as usize;
        }
    }
    Ok(format!("{} instances, {positives} of {} parts ISS", results.len(), 2 * results.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("switching algebra, all labelled graphs of order <= 5", algebra_exhaustive),
        ("switching the first fixture at v", fig1_switch),
        ("order-4 census", order_four_census),
        ("tadpole switches", tadpole),
        ("vertex-ISS examples", vertex_iss_examples),
        ("edge-ISS examples", edge_iss_examples),
        ("edge criterion sufficiency, order <= 6", edge_sufficiency),
        ("swept edge and closure claims, order <= 6", swept_claims),
        ("Seidel polynomial invariance", seidel_invariance),
        ("complement switching class sizes, order <= 6", complement_class_sizes),
        ("canonical form vs permutation search", iso_oracle),
        ("half-join sweep", half_join),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
