//! Per-order certification of the canonical constructions: distinct vertex
//! sums, vertex weights and oriented sums, plus two independent detectors
//! for edge-weight collisions under the super total labeling.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::closed_forms::{edge_weight, in_sum, oriented_sum, vertex_sum, vertex_weight, Sum};
use crate::error::{Error, Result};
use crate::labeling::{EdgePair, Order};

pub const DEFAULT_SCAN_SPAN: usize = 10_000;

/// Outcome of one check. Serialized as `true`, `false` or `null`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// Outside the stated scope (`n < 3`).
    NotApplicable,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn is_ok(self) -> bool {
        self == Verdict::Holds
    }

    pub fn as_option(self) -> Option<bool> {
        match self {
            Verdict::Holds => Some(true),
            Verdict::Fails => Some(false),
            Verdict::NotApplicable => None,
        }
    }

    fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::NotApplicable, _) | (_, Verdict::NotApplicable) => Verdict::NotApplicable,
            (a, b) => Verdict::from_bool(a.is_ok() && b.is_ok()),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.as_option().serialize(s)
    }
}

/// Two vertices with equal value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexCollision {
    pub first: usize,
    pub second: usize,
    pub value: Sum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceCheck {
    pub verdict: Verdict,
    pub witness: Option<VertexCollision>,
    pub strictly_increasing: bool,
}

/// First pair `(a, b)`, `a < b`, in lexicographic order with equal values.
fn pairwise_collision(values: &[Sum]) -> Option<VertexCollision> {
    for a in 0..values.len() {
        for b in a + 1..values.len() {
            if values[a] == values[b] {
                return Some(VertexCollision {
                    first: a + 1,
                    second: b + 1,
                    value: values[a],
                });
            }
        }
    }
    None
}

fn is_strictly_increasing(values: &[Sum]) -> bool {
    values.windows(2).all(|w| w[0] < w[1])
}

fn evaluate(order: Order, f: fn(Order, usize) -> Result<Sum>) -> Result<Vec<Sum>> {
    order.vertices().map(|i| f(order, i)).collect()
}

fn sequence_check(values: &[Sum], in_scope: bool) -> SequenceCheck {
    let witness = pairwise_collision(values);
    let verdict = if in_scope {
        Verdict::from_bool(witness.is_none())
    } else {
        Verdict::NotApplicable
    };
    SequenceCheck {
        verdict,
        witness,
        strictly_increasing: is_strictly_increasing(values),
    }
}

/// Vertex sums of the canonical labeling pairwise distinct. Evaluated for
/// every `n >= 2`; `K_2` fails with both sums equal to 1.
pub fn certify_vertex_sums(order: Order) -> Result<SequenceCheck> {
    order.require_at_least(2)?;
    Ok(sequence_check(&evaluate(order, vertex_sum)?, true))
}

/// Vertex weights of the super total labeling pairwise distinct.
pub fn certify_vertex_weights(order: Order) -> Result<SequenceCheck> {
    order.require_at_least(2)?;
    Ok(sequence_check(
        &evaluate(order, vertex_weight)?,
        order.n() >= 3,
    ))
}

pub fn in_sums_strictly_increasing(order: Order) -> Result<bool> {
    order.require_at_least(2)?;
    Ok(is_strictly_increasing(&evaluate(order, in_sum)?))
}

/// Vanishes exactly when `S°(v_i) = S°(v_j)`: for `i < j`, `S°(v_j) - S°(v_i) = -(j - i) Q / 3`
/// with `Q = 3n² - 6n(i + j - 1) + 2(i² + ij + j²) - 3(i + j) + 1`.
pub fn oriented_quadratic(order: Order, i: usize, j: usize) -> Sum {
    let (n, i, j) = (order.n() as Sum, i as Sum, j as Sum);
    3 * n * n - 6 * n * (i + j - 1) + 2 * (i * i + i * j + j * j) - 3 * (i + j) + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedCheck {
    pub verdict: Verdict,
    /// First colliding pair by direct comparison.
    pub witness: Option<VertexCollision>,
    /// Direct comparison and the quadratic test agree on every pair.
    pub methods_agree: bool,
    pub colliding_pairs: usize,
}

/// Oriented sums of the canonical orientation pairwise distinct, checked
/// both by comparing values and by the non-vanishing of the quadratic.
pub fn certify_oriented_sums(order: Order) -> Result<OrientedCheck> {
    order.require_at_least(2)?;
    let values = evaluate(order, oriented_sum)?;
    let n = order.n();
    let mut witness = None;
    let mut methods_agree = true;
    let mut colliding_pairs = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let equal = values[i - 1] == values[j - 1];
            let vanishes = oriented_quadratic(order, i, j) == 0;
            methods_agree &= equal == vanishes;
            if equal {
                colliding_pairs += 1;
                witness.get_or_insert(VertexCollision {
                    first: i,
                    second: j,
                    value: values[i - 1],
                });
            }
        }
    }
    let verdict = if n >= 3 {
        Verdict::from_bool(witness.is_none())
    } else {
        Verdict::NotApplicable
    };
    Ok(OrientedCheck {
        verdict,
        witness,
        methods_agree,
        colliding_pairs,
    })
}

/// Two distinct edges with the same weight under the super total labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CollisionWitness {
    pub first: EdgePair,
    pub second: EdgePair,
    pub weight: Sum,
}

/// All pairs of edges sharing a weight, found by grouping every weight.
/// Sorted by `(first, second)`.
pub fn edge_weight_collisions(order: Order) -> Result<Vec<CollisionWitness>> {
    order.require_at_least(2)?;
    let mut groups: BTreeMap<Sum, Vec<EdgePair>> = BTreeMap::new();
    for pair in order.pairs() {
        groups
            .entry(edge_weight(order, pair)?)
            .or_default()
            .push(pair);
    }
    let mut out = Vec::new();
    for (weight, edges) in groups {
        for (a, &first) in edges.iter().enumerate() {
            for &second in &edges[a + 1..] {
                out.push(CollisionWitness {
                    first,
                    second,
                    weight,
                });
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Indices `i < i' < j' < j` with `(i' - i)(2n - i - i' + 1) = 4 (j - j')`,
/// the integer form of `n = 2(j - j')/(i' - i) + (i' + i - 1)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ExceptionQuadruple {
    pub i: usize,
    pub i_prime: usize,
    pub j_prime: usize,
    pub j: usize,
}

impl ExceptionQuadruple {
    pub fn satisfies(&self, order: Order) -> bool {
        let n = order.n() as i128;
        let (i, ip, jp, j) = (
            self.i as i128,
            self.i_prime as i128,
            self.j_prime as i128,
            self.j as i128,
        );
        1 <= i
            && i < ip
            && ip < jp
            && jp < j
            && j <= n
            && (ip - i) * (2 * n - i - ip + 1) == 4 * (j - jp)
    }

    /// The two edges `(i, j)` and `(i', j')` whose weights coincide.
    pub fn edges(&self) -> (EdgePair, EdgePair) {
        (
            EdgePair::new(self.i, self.j).expect("i < j"),
            EdgePair::new(self.i_prime, self.j_prime).expect("i' < j'"),
        )
    }
}

/// Every quadruple meeting the exception condition, lexicographically.
pub fn exception_quadruples(order: Order) -> Result<Vec<ExceptionQuadruple>> {
    order.require_at_least(2)?;
    let n = order.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for i_prime in i + 1..=n {
            // (i, i') fixes 4 (j - j')
            let lhs = (i_prime - i) * (2 * n + 1 - i - i_prime);
            if !lhs.is_multiple_of(4) {
                continue;
            }
            let gap = lhs / 4;
            for j_prime in i_prime + 1..=n.saturating_sub(gap) {
                out.push(ExceptionQuadruple {
                    i,
                    i_prime,
                    j_prime,
                    j: j_prime + gap,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub order: Order,
    pub antimagic_ok: Verdict,
    pub vertex_total_ok: Verdict,
    pub edge_total_ok: Verdict,
    pub totally_total_ok: Verdict,
    pub oriented_ok: Verdict,
    pub vertex_sums_increasing: bool,
    pub in_sums_increasing: bool,
    pub vertex_weights_increasing: bool,
    /// Exception scan and collision scan agree, pair for pair.
    pub detectors_agree: bool,
    pub oriented_methods_agree: bool,
    pub vertex_sum_witness: Option<VertexCollision>,
    pub vertex_weight_witness: Option<VertexCollision>,
    pub oriented_witness: Option<VertexCollision>,
    pub collisions: Vec<CollisionWitness>,
    pub exceptions: Vec<ExceptionQuadruple>,
}

pub fn certify(order: Order) -> Result<Certificate> {
    let sums = certify_vertex_sums(order)?;
    let weights = certify_vertex_weights(order)?;
    let oriented = certify_oriented_sums(order)?;
    let collisions = edge_weight_collisions(order)?;
    let exceptions = exception_quadruples(order)?;

    let mut from_exceptions: Vec<(EdgePair, EdgePair)> = exceptions
        .iter()
        .map(|q| q.edges())
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    from_exceptions.sort_unstable();
    let from_collisions: Vec<(EdgePair, EdgePair)> =
        collisions.iter().map(|c| (c.first, c.second)).collect();
    let detectors_agree = from_exceptions == from_collisions;

    let edge_total_ok = if order.n() >= 3 {
        Verdict::from_bool(collisions.is_empty())
    } else {
        Verdict::NotApplicable
    };
    Ok(Certificate {
        order,
        antimagic_ok: sums.verdict,
        vertex_total_ok: weights.verdict,
        edge_total_ok,
        totally_total_ok: weights.verdict.and(edge_total_ok),
        oriented_ok: oriented.verdict,
        vertex_sums_increasing: sums.strictly_increasing,
        in_sums_increasing: in_sums_strictly_increasing(order)?,
        vertex_weights_increasing: weights.strictly_increasing,
        detectors_agree,
        oriented_methods_agree: oriented.methods_agree,
        vertex_sum_witness: sums.witness,
        vertex_weight_witness: weights.witness,
        oriented_witness: oriented.witness,
        collisions,
        exceptions,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub rows: Vec<Certificate>,
    /// Orders whose super total labeling is edge-antimagic.
    pub edge_total_certified: Vec<usize>,
}

/// Certifies every order in `lo..=hi`, rows in ascending `n`.
pub fn scan_range(lo: usize, hi: usize, max_span: usize) -> Result<ScanReport> {
    if lo < 2 || lo > hi || hi - lo >= max_span {
        return Err(Error::RangeTooLarge {
            lo,
            hi,
            limit: max_span,
        });
    }
    let rows: Vec<Certificate> = (lo..=hi)
        .into_par_iter()
        .map(|n| certify(Order::new(n)?))
        .collect::<Result<_>>()?;
    let edge_total_certified = rows
        .iter()
        .filter(|c| c.edge_total_ok.is_ok())
        .map(|c| c.order.n())
        .collect();
    Ok(ScanReport {
        rows,
        edge_total_certified,
    })
}
