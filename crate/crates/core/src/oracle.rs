//! Definition-level checkers for arbitrary labelings, and exhaustive search
//! over all labelings (and orientations) of small graphs.
//!
//! Nothing here uses the closed forms; sums and weights are recomputed from
//! the labels edge by edge.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::Sum;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, ExplicitLabeling, OrientedGraph, SimpleGraph};

pub const DEFAULT_LABELING_CAP: usize = 10;
pub const DEFAULT_ORIENTATION_CAP: usize = 8;

/// A vertex or an edge, as named in witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Key {
    Vertex(usize),
    Edge(usize, usize),
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::Vertex(v) => write!(f, "v{v}"),
            Key::Edge(u, v) => write!(f, "({u},{v})"),
        }
    }
}

/// Two distinct keys sharing a sum or weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub first: Key,
    pub second: Key,
    pub value: Sum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub holds: bool,
    pub witness: Option<Witness>,
    /// The recomputed sums, in vertex order.
    pub values: Vec<Sum>,
}

/// The lexicographically first pair of positions holding equal values.
pub fn first_collision(values: &[(Key, Sum)]) -> Option<Witness> {
    let mut by_value: BTreeMap<Sum, (usize, Option<usize>)> = BTreeMap::new();
    for (idx, &(_, v)) in values.iter().enumerate() {
        by_value
            .entry(v)
            .and_modify(|slot| {
                if slot.1.is_none() {
                    slot.1 = Some(idx);
                }
            })
            .or_insert((idx, None));
    }
    by_value
        .values()
        .filter_map(|&(a, b)| b.map(|b| (a, b)))
        .min()
        .map(|(a, b)| Witness {
            first: values[a].0,
            second: values[b].0,
            value: values[a].1,
        })
}

/// Ensures `labeling` puts a label on exactly the given edges and that the
/// labels are `1..=l`.
fn require_edge_bijection(
    keys: &[(usize, usize)],
    labeling: &ExplicitLabeling,
) -> Result<Vec<u64>> {
    let l = keys.len() as u64;
    let mut labels = Vec::with_capacity(keys.len());
    for &(u, v) in keys {
        let k = labeling
            .edge_label((u, v))
            .ok_or_else(|| Error::MissingLabel(format!("edge ({u},{v})")))?;
        labels.push(k);
    }
    if labeling.edges.len() != keys.len() {
        let extra = labeling
            .edges
            .keys()
            .find(|k| !keys.contains(k))
            .copied()
            .unwrap_or_default();
        return Err(Error::NotBijective {
            expected_max: l,
            detail: format!(
                "label given for ({},{}) which is not an edge",
                extra.0, extra.1
            ),
        });
    }
    let mut sorted = labels.clone();
    sorted.sort_unstable();
    if let Some((idx, &k)) = sorted
        .iter()
        .enumerate()
        .find(|&(idx, &k)| k != idx as u64 + 1)
    {
        let detail = if idx > 0 && sorted[idx - 1] == k {
            format!("label {k} used twice")
        } else {
            format!("label {} missing", idx + 1)
        };
        return Err(Error::NotBijective {
            expected_max: l,
            detail,
        });
    }
    Ok(labels)
}

fn distinct_result(values: Vec<Sum>) -> CheckResult {
    let keyed: Vec<(Key, Sum)> = values
        .iter()
        .enumerate()
        .map(|(idx, &s)| (Key::Vertex(idx + 1), s))
        .collect();
    let witness = first_collision(&keyed);
    CheckResult {
        holds: witness.is_none(),
        witness,
        values,
    }
}

/// Antimagic check: the sum of labels incident to each vertex must be
/// pairwise distinct.
pub fn check_antimagic(graph: &SimpleGraph, labeling: &ExplicitLabeling) -> Result<CheckResult> {
    let keys = graph.edge_keys();
    let labels = require_edge_bijection(&keys, labeling)?;
    let mut sums = vec![0 as Sum; graph.order().n()];
    for (&(u, v), &k) in keys.iter().zip(&labels) {
        sums[u - 1] += k as Sum;
        sums[v - 1] += k as Sum;
    }
    Ok(distinct_result(sums))
}

/// Oriented antimagic check: entering labels minus leaving labels must be
/// pairwise distinct.
pub fn check_oriented_antimagic(
    digraph: &OrientedGraph,
    labeling: &ExplicitLabeling,
) -> Result<CheckResult> {
    let keys = digraph.edge_keys();
    let labels = require_edge_bijection(&keys, labeling)?;
    let mut sums = vec![0 as Sum; digraph.order().n()];
    for (&(tail, head), &k) in keys.iter().zip(&labels) {
        sums[head - 1] += k as Sum;
        sums[tail - 1] -= k as Sum;
    }
    Ok(distinct_result(sums))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TotalFlags {
    pub is_total: bool,
    pub is_super: bool,
    pub vertex_antimagic_total: bool,
    pub edge_antimagic_total: bool,
    pub totally_antimagic_total: bool,
    pub vertex_witness: Option<Witness>,
    pub edge_witness: Option<Witness>,
    /// `w_f(v)` in vertex order; empty when some label is missing.
    pub vertex_weights: Vec<Sum>,
    /// `f(u) + f(v) + f(e)` in edge order; empty when some label is missing.
    pub edge_weights: Vec<Sum>,
}

/// Evaluates a candidate total labeling. Defects are reported as false flags
/// rather than errors.
pub fn check_total<G: EdgeSet>(graph: &G, labeling: &ExplicitLabeling) -> TotalFlags {
    let n = graph.order().n();
    let keys = graph.edge_keys();
    let l = keys.len();

    let vertex_labels: Option<Vec<u64>> = (1..=n).map(|v| labeling.vertex_label(v)).collect();
    let edge_labels: Option<Vec<u64>> = keys.iter().map(|&key| labeling.edge_label(key)).collect();
    let (Some(vl), Some(el)) = (vertex_labels, edge_labels) else {
        return TotalFlags {
            is_total: false,
            is_super: false,
            vertex_antimagic_total: false,
            edge_antimagic_total: false,
            totally_antimagic_total: false,
            vertex_witness: None,
            edge_witness: None,
            vertex_weights: Vec::new(),
            edge_weights: Vec::new(),
        };
    };

    let no_extras = labeling.vertices.len() == n && labeling.edges.len() == l;
    let mut all: Vec<u64> = vl.iter().chain(&el).copied().collect();
    all.sort_unstable();
    let is_total = no_extras && all.iter().enumerate().all(|(idx, &k)| k == idx as u64 + 1);
    let mut vertex_set = vl.clone();
    vertex_set.sort_unstable();
    let is_super = is_total
        && vertex_set
            .iter()
            .enumerate()
            .all(|(idx, &k)| k == idx as u64 + 1);

    let mut vertex_weights: Vec<Sum> = vl.iter().map(|&k| k as Sum).collect();
    let mut edge_weights = Vec::with_capacity(l);
    for (&(u, v), &k) in keys.iter().zip(&el) {
        vertex_weights[u - 1] += k as Sum;
        vertex_weights[v - 1] += k as Sum;
        edge_weights.push(vl[u - 1] as Sum + vl[v - 1] as Sum + k as Sum);
    }

    let keyed_v: Vec<_> = vertex_weights
        .iter()
        .enumerate()
        .map(|(idx, &w)| (Key::Vertex(idx + 1), w))
        .collect();
    let keyed_e: Vec<_> = keys
        .iter()
        .zip(&edge_weights)
        .map(|(&(u, v), &w)| (Key::Edge(u, v), w))
        .collect();
    let vertex_witness = first_collision(&keyed_v);
    let edge_witness = first_collision(&keyed_e);
    let vertex_antimagic_total = is_total && vertex_witness.is_none();
    let edge_antimagic_total = is_total && edge_witness.is_none();
    TotalFlags {
        is_total,
        is_super,
        vertex_antimagic_total,
        edge_antimagic_total,
        totally_antimagic_total: vertex_antimagic_total && edge_antimagic_total,
        vertex_witness,
        edge_witness,
        vertex_weights,
        edge_weights,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchExample {
    /// The orientation found, for orientation searches.
    pub digraph: Option<OrientedGraph>,
    pub labeling: ExplicitLabeling,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub exists: bool,
    /// Number of successful labelings (times orientations) enumerated.
    pub count: Option<u64>,
    /// First success in enumeration order.
    pub example: Option<SearchExample>,
    /// Size of the searched space.
    pub searched: u64,
}

/// Scans every bijection `edges -> 1..=l` in lexicographic order, where
/// `perm[e]` is the label of edge `e`. Only permutations whose first entry
/// is `first` are visited when `first` is set.
struct Enumerator<'a> {
    n: usize,
    arcs: &'a [(usize, usize)],
    oriented: bool,
}

#[derive(Default)]
struct BlockResult {
    count: u64,
    first: Option<Vec<u64>>,
}

impl Enumerator<'_> {
    fn run_block(&self, first: Option<u64>) -> BlockResult {
        let l = self.arcs.len();
        let mut state = DfsState {
            sums: vec![0; self.n + 1],
            perm: vec![0; l],
            used: 0,
            scratch: Vec::with_capacity(self.n),
            result: BlockResult::default(),
        };
        match first {
            None => self.dfs(&mut state, 0),
            Some(k) => {
                self.place(&mut state, 0, k, 1);
                self.dfs(&mut state, 1);
            }
        }
        state.result
    }

    #[inline]
    fn place(&self, state: &mut DfsState, e: usize, k: u64, sign: i64) {
        let (tail, head) = self.arcs[e];
        let k = k as i64;
        state.sums[head] += sign * k;
        state.sums[tail] += if self.oriented { -sign * k } else { sign * k };
        if sign > 0 {
            state.used |= 1 << (k - 1);
            state.perm[e] = k as u64;
        } else {
            state.used &= !(1 << (k - 1));
        }
    }

    fn dfs(&self, state: &mut DfsState, e: usize) {
        let l = self.arcs.len();
        if e == l {
            state.scratch.clear();
            state.scratch.extend_from_slice(&state.sums[1..]);
            state.scratch.sort_unstable();
            if state.scratch.windows(2).all(|w| w[0] != w[1]) {
                state.result.count += 1;
                if state.result.first.is_none() {
                    state.result.first = Some(state.perm.clone());
                }
            }
            return;
        }
        for k in 1..=l as u64 {
            if state.used >> (k - 1) & 1 == 1 {
                continue;
            }
            self.place(state, e, k, 1);
            self.dfs(state, e + 1);
            self.place(state, e, k, -1);
        }
    }

    /// Full scan, split into one block per label of the first edge. Blocks
    /// are merged in ascending order, so the result equals a sequential scan.
    fn run(&self) -> BlockResult {
        if self.arcs.is_empty() {
            return self.run_block(None);
        }
        let blocks: Vec<BlockResult> = (1..=self.arcs.len() as u64)
            .into_par_iter()
            .map(|k| self.run_block(Some(k)))
            .collect();
        merge(blocks)
    }
}

struct DfsState {
    sums: Vec<i64>,
    perm: Vec<u64>,
    used: u64,
    scratch: Vec<i64>,
    result: BlockResult,
}

fn merge(blocks: impl IntoIterator<Item = BlockResult>) -> BlockResult {
    blocks
        .into_iter()
        .fold(BlockResult::default(), |mut acc, b| {
            acc.count += b.count;
            if acc.first.is_none() {
                acc.first = b.first;
            }
            acc
        })
}

fn factorial(l: usize) -> u64 {
    (1..=l as u64).product()
}

fn check_cap(l: usize, cap: usize) -> Result<()> {
    if l > cap || l > 20 {
        return Err(Error::CapExceeded {
            edges: l,
            cap: cap.min(20),
        });
    }
    Ok(())
}

/// Tries all `l!` edge labelings of `graph`.
pub fn exhaustive_antimagic(graph: &SimpleGraph, cap: usize) -> Result<SearchOutcome> {
    let keys = graph.edge_keys();
    check_cap(keys.len(), cap)?;
    let found = Enumerator {
        n: graph.order().n(),
        arcs: &keys,
        oriented: false,
    }
    .run();
    let example = found.first.map(|perm| SearchExample {
        digraph: None,
        labeling: ExplicitLabeling::edge_only(keys.iter().copied().zip(perm)),
    });
    Ok(SearchOutcome {
        exists: found.count > 0,
        count: Some(found.count),
        example,
        searched: factorial(keys.len()),
    })
}

/// Arcs of `graph` in lexicographic edge order, edge `e` reversed when bit
/// `e` of `mask` is set.
fn arcs_for_mask(graph: &SimpleGraph, mask: u64) -> Vec<(usize, usize)> {
    graph
        .edges()
        .iter()
        .enumerate()
        .map(|(e, p)| {
            if mask >> e & 1 == 1 {
                (p.j(), p.i())
            } else {
                (p.i(), p.j())
            }
        })
        .collect()
}

/// Tries all `2^l` orientations, each with all `l!` labelings. Orientations
/// are visited in increasing [`SimpleGraph::orient_by_mask`] order.
pub fn exhaustive_orientation_antimagic(graph: &SimpleGraph, cap: usize) -> Result<SearchOutcome> {
    let l = graph.edge_count();
    check_cap(l, cap)?;
    let n = graph.order().n();
    let per_mask: Vec<(u64, BlockResult)> = (0..1u64 << l)
        .into_par_iter()
        .map(|mask| {
            let arcs = arcs_for_mask(graph, mask);
            (
                mask,
                Enumerator {
                    n,
                    arcs: &arcs,
                    oriented: true,
                }
                .run_block(None),
            )
        })
        .collect();

    let mut count = 0;
    let mut example = None;
    for (mask, res) in per_mask {
        count += res.count;
        if let (None, Some(perm)) = (&example, res.first) {
            let labeling =
                ExplicitLabeling::edge_only(arcs_for_mask(graph, mask).into_iter().zip(perm));
            example = Some(SearchExample {
                digraph: Some(graph.orient_by_mask(mask)),
                labeling,
            });
        }
    }
    Ok(SearchOutcome {
        exists: count > 0,
        count: Some(count),
        example,
        searched: factorial(l) << l,
    })
}
