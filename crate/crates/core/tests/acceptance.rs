// Acceptance suite: one PASS/FAIL line per criterion.
//
// Oracles here work on raw adjacency bitmasks and never call the tree
// algorithms they are checking.

use std::collections::BTreeSet;
use std::fs;
use std::time::{Duration, Instant};

use stablecore::bonding::{bond_law_violation, vertex_bond};
use stablecore::cli;
use stablecore::graph::{random_tree, Tree, VertexSet};
use stablecore::harness::{
    check_tree, fixtures, run_claim, run_suite, survey_open_problem, ClaimId, ClaimStatus, CorpusSpec,
    RunOptions,
};
use stablecore::independence::{
    alpha, analyze, brute_force_stability, core, core_naive, enumerate_maximum_stable_sets, mu, SmallGraph,
};

type Check = Result<String, String>;

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

/// Adjacency masks straight from the edge list.
fn adjacency(tree: &Tree) -> Vec<u32> {
    let mut adj = vec![0u32; tree.n()];
    for &(u, v) in tree.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn bfs_distances(adj: &[u32], source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[source] = 0;
    let mut frontier = 1u32 << source;
    let mut seen = frontier;
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let mut next = 0u32;
        for v in (0..adj.len()).filter(|&v| frontier >> v & 1 == 1) {
            next |= adj[v];
        }
        next &= !seen;
        for v in (0..adj.len()).filter(|&v| next >> v & 1 == 1) {
            dist[v] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

fn pendant_mask(adj: &[u32]) -> u32 {
    (0..adj.len()).filter(|&v| adj[v].count_ones() == 1).fold(0, |m, v| m | 1 << v)
}

fn stable(adj: &[u32], mask: u32) -> bool {
    (0..adj.len()).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0)
}

fn oracle(tree: &Tree) -> (usize, VertexSet) {
    let graph = SmallGraph::new(tree.n(), tree.edges()).unwrap();
    let b = brute_force_stability(&graph).unwrap();
    (b.alpha, b.core)
}

fn exhaustive(n_max: usize) -> impl Iterator<Item = Tree> {
    CorpusSpec::exhaustive(2, n_max).materialize().unwrap().trees().collect::<Vec<_>>().into_iter()
}

fn criterion_1() -> Check {
    let mut count = 0;
    for tree in exhaustive(8) {
        let (a, c) = oracle(&tree);
        let label = || tree.to_edge_list();
        ensure(alpha(&tree) == a, || format!("alpha differs on\n{}", label()))?;
        ensure(core(&tree) == c, || format!("linear core differs on\n{}", label()))?;
        ensure(core_naive(&tree) == c, || format!("quadratic core differs on\n{}", label()))?;
        let sets = enumerate_maximum_stable_sets(&tree, usize::MAX).unwrap();
        let meet = sets.iter().skip(1).fold(sets[0].clone(), |m, s| m.intersection(s));
        ensure(meet == c, || format!("Ω-intersection core differs on\n{}", label()))?;
        ensure(mu(&tree) == tree.n() - a, || format!("mu differs on\n{}", label()))?;
        count += 1;
    }
    Ok(format!("{count} labeled trees"))
}

fn criterion_2() -> Check {
    use ClaimId::*;
    let claims = [C1, C2, C3, C4, C5, C6, C7, C8, C10, C11, C12a];
    let verdicts = run_suite(&claims, &CorpusSpec::exhaustive(2, 8), RunOptions::default()).unwrap();
    let mut detail = Vec::new();
    for v in &verdicts {
        ensure(v.refuted == 0, || format!("{} refuted on {} trees", v.claim, v.refuted))?;
        ensure(v.checked == v.held + v.refuted + v.skipped, || format!("{} counts do not reconcile", v.claim))?;
        detail.push(format!("{}:{}", v.claim, v.held));
    }
    Ok(format!("held counts {}", detail.join(" ")))
}

fn criterion_3() -> Check {
    use ClaimId::*;
    let claims = [C3, C4, C5, C7, C10, C11, C12a];
    for (i, n) in [20, 50, 100, 200].into_iter().enumerate() {
        let corpus = CorpusSpec::random(n, n, 10_000, 1000 + i as u64);
        for v in run_suite(&claims, &corpus, RunOptions::default()).unwrap() {
            ensure(v.checked == 10_000, || format!("{} checked {} trees at n = {n}", v.claim, v.checked))?;
            ensure(v.refuted == 0, || format!("{} refuted on {} trees at n = {n}", v.claim, v.refuted))?;
        }
    }
    Ok("4 x 10000 random trees".into())
}

const P5: &str = "5\n0 1\n1 2\n2 3\n3 4\n";

fn criterion_4() -> Check {
    let mut expected = BTreeSet::new();
    for tree in exhaustive(8) {
        let n = tree.n();
        let adj = adjacency(&tree);
        let (a, c) = oracle(&tree);
        let both = c.to_mask() as u32 & pendant_mask(&adj);
        if 2 * a > n && both.count_ones() == 2 {
            let u = both.trailing_zeros() as usize;
            let v = 31 - both.leading_zeros() as usize;
            if bfs_distances(&adj, u)[v] == 4 {
                expected.insert(tree.to_edge_list());
            }
        }
    }
    let options = RunOptions { witness_limit: usize::MAX, ..RunOptions::default() };
    let verdict = run_claim(ClaimId::C12b, &CorpusSpec::exhaustive(2, 8), options).unwrap();
    let found: BTreeSet<String> = verdict.witnesses.iter().map(|w| w.tree.clone()).collect();
    ensure(expected.contains(P5), || "oracle does not confirm P5".into())?;
    ensure(found == expected, || {
        format!(
            "harness found {} witnesses, oracle {}; {} only in harness, {} only in oracle",
            found.len(),
            expected.len(),
            found.difference(&expected).count(),
            expected.difference(&found).count()
        )
    })?;
    ensure(verdict.refuted as usize == expected.len(), || "refuted count differs from witness count".into())?;
    let p5 = check_tree(ClaimId::C12b, &Tree::path(5).unwrap()).unwrap();
    ensure(p5.status == ClaimStatus::Refuted, || "replaying P5 does not refute".into())?;
    let a = check_tree(ClaimId::C12a, &Tree::path(5).unwrap()).unwrap();
    ensure(a.status == ClaimStatus::Holds, || "C12a does not hold on P5".into())?;
    Ok(format!(
        "{} trees refute \"never equals four\", P5 included; tree-for-tree match with the oracle",
        expected.len()
    ))
}

fn criterion_5() -> Check {
    let fig1 = fixtures::fig1();
    let b = brute_force_stability(&fig1).unwrap();
    let pend = fig1.pendant_vertices().to_mask() as u32;
    let avoiding: Vec<u32> = fig1.maximum_stable_masks().into_iter().filter(|m| m & pend == 0).collect();
    ensure(!avoiding.is_empty(), || "no maximum stable set of FIG1 avoids the pendants".into())?;
    ensure(avoiding.contains(&0b100_1010), || "{1,3,6} is not a pendant-free maximum stable set".into())?;

    let fig5 = fixtures::fig5();
    let report = analyze(&fig5);
    let cp = report.core_pendants();
    let (a, c) = oracle(&fig5);
    ensure(report.alpha == a && report.core == c, || "FIG5 analysis differs from the oracle".into())?;
    let both = c.to_mask() as u32 & pendant_mask(&adjacency(&fig5));
    ensure(cp.to_mask() as u32 == both && both.count_ones() == 2, || format!("core ∩ pend = {cp}"))?;
    let (u, v) = (cp.to_vec()[0], cp.to_vec()[1]);
    let d = bfs_distances(&adjacency(&fig5), u)[v];
    ensure(fig5.distance(u, v).unwrap() == d && d % 2 == 0, || format!("distance {d}"))?;
    ensure((u, v, a, d) == (0, 3, 5, 6), || format!("expected u=0 v=3 alpha=5 d=6, got {u} {v} {a} {d}"))?;
    Ok(format!("FIG1 alpha {}; FIG5 alpha {a}, core ∩ pend {cp} at distance {d}", b.alpha))
}

fn criterion_6() -> Check {
    let factors: Vec<Tree> = CorpusSpec::exhaustive(2, 6).with_dedup(true).materialize().unwrap().trees().collect();
    let (mut bonds, mut in_core, mut forward, mut backward) = (0, 0, 0, 0);
    for t1 in &factors {
        let (a1, c1) = oracle(t1);
        for t2 in &factors {
            let (a2, c2) = oracle(t2);
            for v1 in 0..t1.n() {
                for v2 in 0..t2.n() {
                    let b = vertex_bond(t1, v1, t2, v2).unwrap();
                    let (a, c) = oracle(&b.tree);
                    let v = b.bond_vertex;
                    let both = c1.contains(v1) && c2.contains(v2);
                    let tag = || format!("{} at {v1}, {} at {v2}", t1.to_edge_list(), t2.to_edge_list());
                    ensure(c.contains(v) == both, || format!("(ii) fails: {}", tag()))?;
                    if c.contains(v) {
                        forward += 1;
                    }
                    if both {
                        backward += 1;
                        in_core += 1;
                        ensure(a + 1 == a1 + a2, || format!("(i) fails: {}", tag()))?;
                        let union = b.map_left(&c1).union(&b.map_right(&c2));
                        ensure(c == union, || format!("(iii) fails: {}", tag()))?;
                    }
                    ensure(bond_law_violation(t1, v1, t2, v2).unwrap().is_none(), || {
                        format!("library law check disagrees: {}", tag())
                    })?;
                    bonds += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} factors up to isomorphism, {bonds} rooted bonds, {in_core} with the bond vertex in both cores \
         ({forward} forward, {backward} backward for (ii))",
        factors.len()
    ))
}

fn criterion_7() -> Check {
    let big = random_tree(1_000_000, 2024).unwrap();
    let start = Instant::now();
    let c = core(&big);
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("core took {elapsed:?} at n = 10^6"))?;
    for i in 0..100u64 {
        let n = 2 + (i as usize * 1999) / 99;
        let t = random_tree(n, i).unwrap();
        ensure(core(&t) == core_naive(&t), || format!("cores differ on tree {i} (n = {n})"))?;
    }
    Ok(format!("n = 10^6 in {:.3}s (xi = {}); 100 trees up to n = 2000 agree", elapsed.as_secs_f64(), c.len()))
}

fn criterion_8() -> Check {
    let dir = tempfile::tempdir().unwrap();
    let run = |jobs: &str| {
        let report = dir.path().join(format!("report-{jobs}.json"));
        let measurements = dir.path().join(format!("e1-{jobs}.json"));
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let args = [
            "stablecore", "verify", "--claims", "all", "--mode", "exhaustive", "--n-min", "2", "--n-max", "8",
            "--jobs", jobs, "--out", report.to_str().unwrap(), "--measurements", measurements.to_str().unwrap(),
        ];
        let code = cli::run(args, &mut out, &mut err);
        (code, out, fs::read(report).unwrap(), fs::read(measurements).unwrap())
    };
    let one = run("1");
    let eight = run("8");
    ensure(one.0 == eight.0, || "exit codes differ".into())?;
    ensure(one.1 == eight.1, || "stdout differs".into())?;
    ensure(one.2 == eight.2, || "reports differ".into())?;
    ensure(one.3 == eight.3, || "E1 measurements differ".into())?;
    Ok(format!("{} report bytes identical (exit code {})", one.2.len(), one.0))
}

fn criterion_9() -> Check {
    let corpus = CorpusSpec::exhaustive(2, 8);
    let records = survey_open_problem(&corpus, false, RunOptions { jobs: 1, ..RunOptions::default() }).unwrap();
    let again = survey_open_problem(&corpus, false, RunOptions { jobs: 4, ..RunOptions::default() }).unwrap();
    let text = serde_json::to_string(&records).unwrap();
    ensure(text == serde_json::to_string(&again).unwrap(), || "survey is not deterministic".into())?;

    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mut expected_records = 0;
    let mut rows = value.as_array().unwrap().iter();
    for tree in exhaustive(8) {
        let n = tree.n();
        let adj = adjacency(&tree);
        let (a, _) = oracle(&tree);
        if 2 * a == n {
            continue;
        }
        expected_records += 1;
        let row = rows.next().ok_or("too few records")?;
        let keys: BTreeSet<&str> = row.as_object().unwrap().keys().map(String::as_str).collect();
        ensure(
            keys == BTreeSet::from(["n", "edges", "perfect_matching", "beyond_question", "measurements"]),
            || format!("record keys {keys:?}"),
        )?;
        ensure(row["n"] == n && row["perfect_matching"] == false, || format!("bad record header {row}"))?;

        let dist = bfs_distances(&adj, 0);
        let even = dist.iter().filter(|d| *d % 2 == 0).count();
        let k = even.min(n - even);
        let all = (1u32 << n) - 1;
        let mut meet = all;
        let mut sets = 0u64;
        for mask in 0..=all {
            let maximal = (0..n).all(|v| mask >> v & 1 == 1 || adj[v] & mask != 0);
            if mask.count_ones() as usize == k && stable(&adj, mask) && maximal {
                sets += 1;
                meet &= mask;
            }
        }
        let m = row["measurements"]
            .as_array()
            .unwrap()
            .iter()
            .find(|m| m["rule"] == "smaller_side")
            .ok_or("no smaller_side measurement")?;
        ensure(m["k"] == k && m["maximal_sets"] == sets, || format!("k or count differs: {m}"))?;
        if sets > 0 {
            let members: Vec<usize> = (0..n).filter(|&v| meet >> v & 1 == 1).collect();
            let pendants = (meet & pendant_mask(&adj)).count_ones();
            ensure(m["intersection"] == serde_json::json!(members), || format!("intersection differs: {m}"))?;
            ensure(m["pendants_in_intersection"] == pendants, || format!("pendant count differs: {m}"))?;
        } else {
            ensure(m["intersection"].is_null(), || format!("expected no intersection: {m}"))?;
        }
    }
    ensure(rows.next().is_none(), || "too many records".into())?;
    Ok(format!("{expected_records} trees without a perfect matching, deterministic and schema-valid"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("oracle equivalence, all labeled trees n = 2..8", criterion_1),
        ("theorem suite, exhaustive n <= 8", criterion_2),
        ("theorem suite, random n in {20, 50, 100, 200}", criterion_3),
        ("discrepancy detection for \"never equals four\"", criterion_4),
        ("figure fixtures", criterion_5),
        ("bonding laws, factors with n <= 6", criterion_6),
        ("linear core performance and agreement", criterion_7),
        ("determinism across worker counts", criterion_8),
        ("open-problem survey", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} [{secs:.1}s] {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} [{secs:.1}s] {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
