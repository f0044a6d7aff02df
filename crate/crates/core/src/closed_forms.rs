//! Exact per-vertex sums and weights of the canonical labeling of `K_n`.
//!
//! Several of the polynomials have fractional coefficients but take integer
//! values at integer arguments. Each one is evaluated as an integer numerator
//! over a fixed denominator (2 or 6) in `i128`, and the division asserts a
//! zero remainder.

use serde::Serialize;

use crate::error::Result;
use crate::labeling::{label_all, label_index, EdgePair, Order};

/// Integer type of every sum and weight.
pub type Sum = i128;

#[inline]
fn exact_div(numerator: i128, denominator: i128) -> i128 {
    assert_eq!(
        numerator % denominator,
        0,
        "closed form numerator {numerator} not divisible by {denominator}"
    );
    numerator / denominator
}

fn args(order: Order, i: usize) -> Result<(i128, i128)> {
    order.require_at_least(2)?;
    order.check_vertex(i)?;
    Ok((order.n() as i128, i as i128))
}

/// `S⁻(v_i)`: labels of arcs entering `v_i` under the canonical orientation,
/// `(n + 1) C(i, 2) - n (i - 1) - i (i - 1) (i - 2) / 6`.
pub fn in_sum(order: Order, i: usize) -> Result<Sum> {
    let (n, i) = args(order, i)?;
    Ok(exact_div(
        3 * (n + 1) * i * (i - 1) - 6 * n * (i - 1) - i * (i - 1) * (i - 2),
        6,
    ))
}

/// `S⁺(v_i)`: labels of arcs leaving `v_i`,
/// `C(n, 2) + (n - i - 1) (n (i - 1) - C(i, 2))`.
pub fn out_sum(order: Order, i: usize) -> Result<Sum> {
    let (n, i) = args(order, i)?;
    Ok(exact_div(
        n * (n - 1) + (n - i - 1) * (2 * n * (i - 1) - i * (i - 1)),
        2,
    ))
}

/// `S(v_i) = i³/3 - (n - 1) i² + (n² - n - 4/3) i - n (n - 3) / 2`.
pub fn vertex_sum(order: Order, i: usize) -> Result<Sum> {
    let (n, i) = args(order, i)?;
    let scaled =
        2 * i * i * i - 6 * (n - 1) * i * i + (6 * n * n - 6 * n - 8) * i - 3 * n * (n - 3);
    Ok(exact_div(scaled, 6))
}

/// `S°(v_i) = S⁻ - S⁺ = -(2/3) i³ + (2n + 1) i² - (n² + 2n + 1/3) i + C(n + 1, 2)`.
pub fn oriented_sum(order: Order, i: usize) -> Result<Sum> {
    let (n, i) = args(order, i)?;
    let scaled =
        -4 * i * i * i + 6 * (2 * n + 1) * i * i - (6 * n * n + 12 * n + 2) * i + 3 * n * (n + 1);
    Ok(exact_div(scaled, 6))
}

/// Vertex weight `f(v_i) + S(v_i)` with `f(v_i) = i`,
/// `i³/3 - (n - 1) i² + (n² - n - 1/3) i - n (n - 3) / 2`.
///
/// `S` here sums the canonical labels `k`. Summing the total labels `n + k`
/// instead adds `n (n - 1)` to every vertex, which leaves all comparisons
/// between vertices unchanged.
pub fn vertex_weight(order: Order, i: usize) -> Result<Sum> {
    let (n, i) = args(order, i)?;
    let scaled =
        2 * i * i * i - 6 * (n - 1) * i * i + (6 * n * n - 6 * n - 2) * i - 3 * n * (n - 3);
    let closed = exact_div(scaled, 6);
    debug_assert_eq!(closed, i + vertex_sum(order, i as usize)?);
    Ok(closed)
}

/// Edge weight `f(v_i) + f(v_j) + f(e)` under the super total labeling,
/// `n i + 2 j - C(i, 2)`.
pub fn edge_weight(order: Order, pair: EdgePair) -> Result<Sum> {
    order.require_at_least(2)?;
    pair.check(order)?;
    let (n, i, j) = (order.n() as i128, pair.i() as i128, pair.j() as i128);
    Ok(n * i + 2 * j - exact_div(i * (i - 1), 2))
}

/// The super total labeling `f(v_i) = i`, `f(e) = n + F(e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperTotalLabeling {
    pub order: Order,
    /// `vertices[i - 1] = f(v_i)`.
    pub vertices: Vec<u64>,
    /// Edges in lexicographic order with their labels.
    pub edges: Vec<(EdgePair, u64)>,
}

pub fn build_super_total(order: Order) -> Result<SuperTotalLabeling> {
    order.require_at_least(2)?;
    let n = order.n() as u64;
    let edges = label_all(order)
        .iter()
        .map(|(p, k)| (p, n + k.get()))
        .collect();
    Ok(SuperTotalLabeling {
        order,
        vertices: (1..=n).collect(),
        edges,
    })
}

impl SuperTotalLabeling {
    pub fn to_explicit(&self) -> crate::graph::ExplicitLabeling {
        crate::graph::ExplicitLabeling::total(
            self.vertices
                .iter()
                .enumerate()
                .map(|(idx, &k)| (idx + 1, k)),
            self.edges.iter().map(|&(p, k)| ((p.i(), p.j()), k)),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SumsRow {
    pub vertex: usize,
    pub in_sum: Sum,
    pub out_sum: Sum,
    pub total_sum: Sum,
    pub oriented_sum: Sum,
    pub vertex_weight: Sum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumsReport {
    pub order: Order,
    pub rows: Vec<SumsRow>,
    /// Every closed form matches direct summation over the labeled edges.
    pub closed_vs_direct_ok: bool,
    /// Vertex sums are pairwise distinct.
    pub sums_distinct: bool,
}

/// In- and out-sums by walking every labeled edge of `K_n`. Index 0 unused.
pub fn direct_in_out(order: Order) -> (Vec<Sum>, Vec<Sum>) {
    let n = order.n();
    let mut ins = vec![0; n + 1];
    let mut outs = vec![0; n + 1];
    for (p, k) in label_all(order).iter() {
        ins[p.j()] += k.get() as Sum;
        outs[p.i()] += k.get() as Sum;
    }
    (ins, outs)
}

pub fn sums_report(order: Order) -> Result<SumsReport> {
    order.require_at_least(2)?;
    let (ins, outs) = direct_in_out(order);
    let mut ok = true;
    let mut rows = Vec::with_capacity(order.n());
    for i in order.vertices() {
        let row = SumsRow {
            vertex: i,
            in_sum: in_sum(order, i)?,
            out_sum: out_sum(order, i)?,
            total_sum: vertex_sum(order, i)?,
            oriented_sum: oriented_sum(order, i)?,
            vertex_weight: vertex_weight(order, i)?,
        };
        assert_eq!(row.total_sum, row.in_sum + row.out_sum);
        assert_eq!(row.oriented_sum, row.in_sum - row.out_sum);
        let (din, dout) = (ins[i], outs[i]);
        ok &= row.in_sum == din
            && row.out_sum == dout
            && row.total_sum == din + dout
            && row.oriented_sum == din - dout
            && row.vertex_weight == i as Sum + din + dout;
        rows.push(row);
    }
    let mut totals: Vec<Sum> = rows.iter().map(|r| r.total_sum).collect();
    totals.sort_unstable();
    let sums_distinct = totals.windows(2).all(|w| w[0] != w[1]);
    Ok(SumsReport {
        order,
        rows,
        closed_vs_direct_ok: ok,
        sums_distinct,
    })
}

/// `n + F(i, j) + i + j`, the edge weight computed from the label itself.
pub fn edge_weight_direct(order: Order, pair: EdgePair) -> Result<Sum> {
    let k = label_index(order, pair)?;
    Ok((order.n() + pair.i() + pair.j()) as Sum + k.get() as Sum)
}
