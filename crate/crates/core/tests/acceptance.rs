//! Acceptance criteria. Each test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test -p kn-antimagic --test acceptance -- --nocapture --test-threads 1`
//! to see them in order.
//!
//! The oracles below rebuild labels by enumerating pairs in dictionary order
//! and never call the library's ranking, closed forms or collision scans.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kn_antimagic::certifier::{certify, scan_range, Verdict, DEFAULT_SCAN_SPAN};
use kn_antimagic::closed_forms::{
    build_super_total, in_sum, oriented_sum, out_sum, vertex_sum, vertex_weight, Sum,
};
use kn_antimagic::graph::{
    parse_edge_list, serialize, EdgeList, ExplicitLabeling, LabelKind, OrientedGraph, SimpleGraph,
    Structure,
};
use kn_antimagic::oracle::{
    check_antimagic, check_oriented_antimagic, check_total, exhaustive_antimagic,
    DEFAULT_LABELING_CAP,
};
use kn_antimagic::{label_all, label_index, label_inverse, EdgePair, Order};

fn report(id: u32, name: &str, failures: &[String]) {
    let line = if failures.is_empty() {
        format!("[PASS] criterion {id}: {name}\n")
    } else {
        format!("[FAIL] criterion {id}: {name}: {}\n", failures.join("; "))
    };
    // Written past the test harness capture so every run shows the verdict.
    std::io::stderr().write_all(line.as_bytes()).unwrap();
    assert!(
        failures.is_empty(),
        "criterion {id} failed: {}",
        failures.join("; ")
    );
}

fn order(n: usize) -> Order {
    Order::new(n).unwrap()
}

/// `(i, j, rank)` for every pair, ranks counted 1, 2, 3, ... in dictionary order.
fn ranked_pairs(n: usize) -> Vec<(usize, usize, u64)> {
    let mut out = Vec::new();
    let mut rank = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            rank += 1;
            out.push((i, j, rank));
        }
    }
    out
}

/// In- and out-sums per vertex (index 0 unused) from the dictionary ranks.
fn direct_sums(n: usize) -> (Vec<Sum>, Vec<Sum>) {
    let mut ins = vec![0; n + 1];
    let mut outs = vec![0; n + 1];
    for (i, j, k) in ranked_pairs(n) {
        ins[j] += k as Sum;
        outs[i] += k as Sum;
    }
    (ins, outs)
}

type Collision = ((usize, usize), (usize, usize), Sum);
type SumFn = fn(Order, usize) -> kn_antimagic::Result<Sum>;

/// Super total edge weights `i + j + (n + rank)`, grouped by weight.
fn brute_force_collisions(n: usize) -> Vec<Collision> {
    let mut by_weight: BTreeMap<Sum, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, j, k) in ranked_pairs(n) {
        by_weight
            .entry((i + j + n) as Sum + k as Sum)
            .or_default()
            .push((i, j));
    }
    let mut out = Vec::new();
    for (w, edges) in by_weight {
        for a in 0..edges.len() {
            for b in a + 1..edges.len() {
                out.push((edges[a], edges[b], w));
            }
        }
    }
    out.sort();
    out
}

#[test]
fn criterion_1_bijection() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=500 {
        let o = order(n);
        let big_n = o.edge_count();
        let mut seen = vec![false; big_n as usize + 1];
        for (i, j, rank) in ranked_pairs(n) {
            let p = EdgePair::new(i, j).unwrap();
            let k = label_index(o, p).unwrap().get();
            if k != rank {
                failures.push(format!("n={n} F({i},{j})={k} but rank {rank}"));
            }
            if label_inverse(o, rank).unwrap() != p {
                failures.push(format!("n={n} inverse({rank}) != ({i},{j})"));
            }
            if (1..=big_n).contains(&k) {
                seen[k as usize] = true;
            }
        }
        if !seen[1..].iter().all(|&hit| hit) {
            failures.push(format!("n={n} image is not 1..={big_n}"));
        }
        if failures.len() > 10 {
            break;
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 1 runtime: {elapsed:?}");
    if elapsed > Duration::from_secs(10) {
        failures.push(format!("runtime {elapsed:?} exceeds 10 s"));
    }
    report(
        1,
        "F is a bijection onto 1..C(n,2), equals lexicographic rank, inverts exactly (n=2..500)",
        &failures,
    );
}

#[test]
fn criterion_2_closed_forms_vs_direct() {
    let mut failures = Vec::new();
    for n in 2..=200 {
        let o = order(n);
        let (ins, outs) = direct_sums(n);
        let mut total = 0;
        let mut oriented = 0;
        for i in 1..=n {
            let expect = [
                ("in_sum", in_sum(o, i).unwrap(), ins[i]),
                ("out_sum", out_sum(o, i).unwrap(), outs[i]),
                ("vertex_sum", vertex_sum(o, i).unwrap(), ins[i] + outs[i]),
                (
                    "oriented_sum",
                    oriented_sum(o, i).unwrap(),
                    ins[i] - outs[i],
                ),
                (
                    "vertex_weight",
                    vertex_weight(o, i).unwrap(),
                    i as Sum + ins[i] + outs[i],
                ),
            ];
            for (name, closed, direct) in expect {
                if closed != direct {
                    failures.push(format!("n={n} {name}({i}) closed {closed} direct {direct}"));
                }
            }
            total += vertex_sum(o, i).unwrap();
            oriented += oriented_sum(o, i).unwrap();
        }
        let big_n = o.edge_count() as Sum;
        if total != big_n * (big_n + 1) {
            failures.push(format!(
                "n={n} sum of S = {total}, expected N(N+1) = {}",
                big_n * (big_n + 1)
            ));
        }
        if oriented != 0 {
            failures.push(format!("n={n} sum of oriented sums = {oriented}"));
        }
    }
    report(
        2,
        "closed forms equal direct summation exactly; conservation holds (n=2..200)",
        &failures,
    );
}

#[test]
fn criterion_3_monotone_sums_and_weights() {
    let mut failures = Vec::new();
    for n in 3..=200 {
        let o = order(n);
        let seqs: [(&str, SumFn); 3] = [
            ("vertex_sum", vertex_sum),
            ("in_sum", in_sum),
            ("vertex_weight", vertex_weight),
        ];
        for (name, f) in seqs {
            let values: Vec<Sum> = (1..=n).map(|i| f(o, i).unwrap()).collect();
            if let Some(i) = values.windows(2).position(|w| w[0] >= w[1]) {
                failures.push(format!("n={n} {name} not increasing at i={}", i + 1));
            }
            let distinct: BTreeSet<Sum> = values.iter().copied().collect();
            if distinct.len() != n {
                failures.push(format!("n={n} {name} not pairwise distinct"));
            }
        }
        let cert = certify(o).unwrap();
        if !(cert.antimagic_ok.is_ok() && cert.vertex_total_ok.is_ok()) {
            failures.push(format!("n={n} certificate disagrees"));
        }
        if !(cert.vertex_sums_increasing
            && cert.in_sums_increasing
            && cert.vertex_weights_increasing)
        {
            failures.push(format!("n={n} certificate monotonicity flags"));
        }
    }
    report(
        3,
        "vertex sums, in-sums, vertex weights strictly increasing (n=3..200)",
        &failures,
    );
}

#[test]
fn criterion_4_oriented_sums_distinct() {
    let mut disagreements = Vec::new();
    let mut collisions = Vec::new();
    for n in 3..=500 {
        let (ins, outs) = direct_sums(n);
        let values: Vec<Sum> = (1..=n).map(|i| ins[i] - outs[i]).collect();
        let lib = kn_antimagic::certifier::certify_oriented_sums(order(n)).unwrap();
        let nn = n as Sum;
        let mut first = None;
        for i in 1..=n {
            for j in i + 1..=n {
                let (a, b) = (i as Sum, j as Sum);
                let q = 3 * nn * nn - 6 * nn * (a + b - 1) + 2 * (a * a + a * b + b * b)
                    - 3 * (a + b)
                    + 1;
                let equal = values[i - 1] == values[j - 1];
                if equal != (q == 0) {
                    disagreements.push(format!("n={n} ({i},{j})"));
                }
                if equal && first.is_none() {
                    first = Some((i, j, values[i - 1]));
                }
            }
        }
        if !lib.methods_agree {
            disagreements.push(format!("n={n} library methods disagree"));
        }
        if lib.verdict.is_ok() != first.is_none() {
            disagreements.push(format!("n={n} library verdict {:?} vs direct", lib.verdict));
        }
        if let Some((i, j, v)) = first {
            collisions.push(format!("n={n}: v{i},v{j} both {v}"));
        }
    }
    println!(
        "criterion 4: direct vs quadratic agreement on every pair: {}",
        disagreements.is_empty()
    );
    println!(
        "criterion 4: {} orders in 3..500 with equal oriented sums",
        collisions.len()
    );
    let mut failures = disagreements;
    if !collisions.is_empty() {
        let shown: Vec<_> = collisions.iter().take(5).cloned().collect();
        failures.push(format!(
            "oriented sums not distinct for {} orders, first: {}",
            collisions.len(),
            shown.join(", ")
        ));
    }
    report(
        4,
        "oriented sums pairwise distinct, direct and quadratic tests agree (n=3..500)",
        &failures,
    );
}

#[test]
fn criterion_5_edge_weight_scan() {
    let mut failures = Vec::new();
    let mut brute_certified = Vec::new();
    for n in 3..=100 {
        let o = order(n);
        let brute = brute_force_collisions(n);
        let lib: Vec<_> = kn_antimagic::certifier::edge_weight_collisions(o)
            .unwrap()
            .into_iter()
            .map(|c| {
                (
                    (c.first.i(), c.first.j()),
                    (c.second.i(), c.second.j()),
                    c.weight,
                )
            })
            .collect();
        if lib != brute {
            failures.push(format!("n={n} collision scan differs from brute force"));
        }
        let exceptions = kn_antimagic::certifier::exception_quadruples(o).unwrap();
        if exceptions.is_empty() != brute.is_empty() {
            failures.push(format!(
                "n={n} exceptions empty={} but collisions empty={}",
                exceptions.is_empty(),
                brute.is_empty()
            ));
        }
        let mut from_exceptions: Vec<_> = exceptions
            .iter()
            .map(|q| {
                (
                    (q.i_prime, q.j_prime).min((q.i, q.j)),
                    (q.i_prime, q.j_prime).max((q.i, q.j)),
                )
            })
            .collect();
        from_exceptions.sort();
        let from_brute: Vec<_> = brute.iter().map(|c| (c.0, c.1)).collect();
        if from_exceptions != from_brute {
            failures.push(format!(
                "n={n} exception quadruples do not match collision pairs"
            ));
        }
        if brute.is_empty() {
            brute_certified.push(n);
        }
        match n {
            4 if !brute.is_empty() => failures.push("n=4 has a collision".into()),
            5 if brute != vec![((1, 5), (2, 3), 15)] => {
                failures.push(format!("n=5 collisions {brute:?}"))
            }
            6 if !brute.contains(&((2, 6), (3, 4), 23)) => {
                failures.push("n=6 lacks (2,6)/(3,4) at 23".into())
            }
            _ => {}
        }
    }
    let scanned = scan_range(3, 100, DEFAULT_SCAN_SPAN).unwrap();
    if scanned.edge_total_certified != brute_certified {
        failures.push(format!(
            "scan certified {:?}, brute force {:?}",
            scanned.edge_total_certified, brute_certified
        ));
    }
    println!("criterion 5: edge-antimagic total for n in {brute_certified:?} within 3..100");
    report(
        5,
        "exception scan matches brute-force edge-weight collisions (n=3..100)",
        &failures,
    );
}

/// Every permutation of `1..=l` in lexicographic order.
fn permutations(l: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut perm: Vec<u64> = (1..=l as u64).collect();
    loop {
        out.push(perm.clone());
        let Some(p) = (1..perm.len()).rev().find(|&p| perm[p - 1] < perm[p]) else {
            break;
        };
        let q = (p..perm.len())
            .rev()
            .find(|&q| perm[q] > perm[p - 1])
            .unwrap();
        perm.swap(p - 1, q);
        perm[p..].reverse();
    }
    out
}

fn count_antimagic_by_enumeration(n: usize, edges: &[(usize, usize)]) -> u64 {
    permutations(edges.len())
        .into_iter()
        .filter(|perm| {
            let mut sums = vec![0u64; n];
            for (&(u, v), &k) in edges.iter().zip(perm) {
                sums[u - 1] += k;
                sums[v - 1] += k;
            }
            sums.iter().collect::<BTreeSet<_>>().len() == n
        })
        .count() as u64
}

#[test]
fn criterion_6_small_complete_graphs() {
    let mut failures = Vec::new();
    let k2 = exhaustive_antimagic(&SimpleGraph::complete(order(2)), DEFAULT_LABELING_CAP).unwrap();
    if k2.exists || count_antimagic_by_enumeration(2, &[(1, 2)]) != 0 {
        failures.push(format!("K_2 reported antimagic ({:?})", k2.count));
    }
    let k3 = exhaustive_antimagic(&SimpleGraph::complete(order(3)), DEFAULT_LABELING_CAP).unwrap();
    let expected = count_antimagic_by_enumeration(3, &[(1, 2), (1, 3), (2, 3)]);
    if expected != 6 || k3.count != Some(expected) {
        failures.push(format!("K_3 count {:?}, enumeration {expected}", k3.count));
    }
    let k4_edges: Vec<_> = order(4).pairs().map(|p| (p.i(), p.j())).collect();
    let k4 = exhaustive_antimagic(&SimpleGraph::complete(order(4)), DEFAULT_LABELING_CAP).unwrap();
    if k4.count != Some(count_antimagic_by_enumeration(4, &k4_edges)) {
        failures.push("K_4 count differs from enumeration".into());
    }
    report(
        6,
        "K_2 not antimagic; K_3 has exactly 6 antimagic labelings",
        &failures,
    );
}

#[test]
fn criterion_7_oracle_agreement() {
    let mut failures = Vec::new();
    for n in 3..=8 {
        let o = order(n);
        let cert = certify(o).unwrap();
        let k = SimpleGraph::complete(o);
        let canonical = ExplicitLabeling::from(&label_all(o));

        let am = check_antimagic(&k, &canonical).unwrap();
        let or = check_oriented_antimagic(&k.canonical_orientation(), &canonical).unwrap();
        let total = check_total(&k, &build_super_total(o).unwrap().to_explicit());

        let pairs = [
            ("antimagic", cert.antimagic_ok, am.holds),
            ("oriented", cert.oriented_ok, or.holds),
            (
                "vertex_total",
                cert.vertex_total_ok,
                total.vertex_antimagic_total,
            ),
            ("edge_total", cert.edge_total_ok, total.edge_antimagic_total),
            (
                "totally_total",
                cert.totally_total_ok,
                total.totally_antimagic_total,
            ),
        ];
        for (name, verdict, oracle) in pairs {
            if verdict == Verdict::NotApplicable || verdict.is_ok() != oracle {
                failures.push(format!(
                    "n={n} {name}: certificate {verdict:?}, oracle {oracle}"
                ));
            }
        }
        if !(total.is_total && total.is_super) {
            failures.push(format!("n={n} super total labeling rejected"));
        }

        let shift = (n * (n - 1)) as Sum;
        for i in 1..=n {
            if am.values[i - 1] != vertex_sum(o, i).unwrap() {
                failures.push(format!("n={n} oracle sum at v{i}"));
            }
            if or.values[i - 1] != oriented_sum(o, i).unwrap() {
                failures.push(format!("n={n} oracle oriented sum at v{i}"));
            }
            if total.vertex_weights[i - 1] != vertex_weight(o, i).unwrap() + shift {
                failures.push(format!("n={n} oracle vertex weight at v{i}"));
            }
        }
        for (p, w) in o.pairs().zip(&total.edge_weights) {
            if *w != kn_antimagic::closed_forms::edge_weight(o, p).unwrap() {
                failures.push(format!("n={n} oracle edge weight at {p}"));
            }
        }
    }
    report(
        7,
        "definition-level checkers agree with every certificate flag (n=3..8)",
        &failures,
    );
}

fn random_edge_list(rng: &mut ChaCha8Rng) -> EdgeList {
    let n = rng.gen_range(1..=9);
    let o = order(n);
    let mut pairs: Vec<(usize, usize)> = o.pairs().map(|p| (p.i(), p.j())).collect();
    pairs.shuffle(rng);
    pairs.truncate(rng.gen_range(0..=pairs.len()));
    let directed = rng.gen_bool(0.5);
    let structure = if directed {
        let arcs = pairs
            .iter()
            .map(|&(i, j)| if rng.gen_bool(0.5) { (j, i) } else { (i, j) });
        Structure::Directed(OrientedGraph::new(o, arcs.collect::<Vec<_>>()).unwrap())
    } else {
        Structure::Undirected(SimpleGraph::from_pairs(o, pairs).unwrap())
    };
    let keys = structure.edge_keys();
    let l = keys.len();
    let labeling = match rng.gen_range(0..4) {
        0 => None,
        1 if l > 0 => {
            let mut labels: Vec<u64> = (1..=l as u64).collect();
            labels.shuffle(rng);
            Some(ExplicitLabeling::edge_only(
                keys.iter().copied().zip(labels),
            ))
        }
        2 if l > 0 => {
            let mut labels: Vec<u64> = (1..=n as u64).collect();
            labels.shuffle(rng);
            Some(ExplicitLabeling {
                kind: LabelKind::VertexOnly,
                vertices: (1..=n).zip(labels).collect(),
                edges: BTreeMap::new(),
            })
        }
        _ => {
            let mut labels: Vec<u64> = (1..=(n + l) as u64).collect();
            labels.shuffle(rng);
            let (v, e) = labels.split_at(n);
            Some(ExplicitLabeling::total(
                (1..=n).zip(v.iter().copied()),
                keys.iter().copied().zip(e.iter().copied()),
            ))
        }
    };
    EdgeList {
        structure,
        labeling,
    }
}

#[test]
fn criterion_8_io_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let mut failures = Vec::new();
    let mut kinds = BTreeMap::new();
    for idx in 0..256 {
        let list = random_edge_list(&mut rng);
        let key = (
            list.structure.is_directed(),
            list.labeling.as_ref().map(|l| format!("{:?}", l.kind)),
        );
        *kinds.entry(key).or_insert(0) += 1;
        let text = serialize(&list);
        match parse_edge_list(&text) {
            Ok(parsed) if parsed == list => {
                if serialize(&parsed) != text {
                    failures.push(format!("case {idx}: serialization not stable"));
                }
            }
            Ok(parsed) => failures.push(format!("case {idx}: {text:?} parsed to {parsed:?}")),
            Err(e) => failures.push(format!("case {idx}: {text:?} failed: {e}")),
        }
    }
    if kinds.len() < 8 {
        failures.push(format!(
            "corpus covers only {} structure/label kinds",
            kinds.len()
        ));
    }
    report(
        8,
        "parse(serialize(x)) = x over 256 seeded random graphs/digraphs/labelings",
        &failures,
    );
}
