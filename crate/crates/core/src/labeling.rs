//! Lexicographic ranking of vertex pairs and the canonical edge labeling of
//! `K_n` it induces.
//!
//! The pair `(i, j)` with `1 <= i < j <= n` receives the label
//! `(i - 1) n - i (i - 1) / 2 + j - i`, which is its 1-based position in the
//! dictionary ordering of all such pairs. Restricting the same rule to the
//! edges of a subgraph gives an injective labeling of any simple graph on
//! `1..=n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest supported vertex count. Keeps `n (n - 1)` inside `u64`.
pub const MAX_ORDER: usize = u32::MAX as usize;

/// Vertex count of the ambient complete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Order(usize);

impl Order {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder(n));
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
        }
        Ok(Order(n))
    }

    #[inline]
    pub fn n(self) -> usize {
        self.0
    }

    /// `N = C(n, 2)`, the number of edges of `K_n`.
    #[inline]
    pub fn edge_count(self) -> u64 {
        let n = self.0 as u64;
        n * (n - 1) / 2
    }

    /// All pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn pairs(self) -> impl Iterator<Item = EdgePair> {
        let n = self.0;
        (1..n).flat_map(move |i| (i + 1..=n).map(move |j| EdgePair { i, j }))
    }

    pub fn vertices(self) -> std::ops::RangeInclusive<usize> {
        1..=self.0
    }

    pub(crate) fn require_at_least(self, min: usize) -> Result<()> {
        if self.0 < min {
            Err(Error::OrderTooSmall { n: self.0, min })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_vertex(self, i: usize) -> Result<()> {
        if i == 0 || i > self.0 {
            Err(Error::VertexOutOfRange { i, n: self.0 })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered edge `{v_i, v_j}` written with `i < j`; for the canonical
/// orientation it is also the arc `v_i -> v_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgePair {
    i: usize,
    j: usize,
}

impl EdgePair {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::MalformedPair { i, j });
        }
        Ok(EdgePair { i, j })
    }

    /// Builds the pair from two distinct endpoints in either order.
    pub fn from_endpoints(u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        EdgePair::new(u.min(v), u.max(v))
    }

    #[inline]
    pub fn i(self) -> usize {
        self.i
    }

    #[inline]
    pub fn j(self) -> usize {
        self.j
    }

    pub fn check(self, order: Order) -> Result<()> {
        if self.j > order.n() {
            Err(Error::InvalidPair {
                i: self.i,
                j: self.j,
                n: order.n(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeLabel(u64);

impl EdgeLabel {
    pub fn new(order: Order, k: u64) -> Result<Self> {
        let max = order.edge_count();
        if k == 0 || k > max {
            return Err(Error::LabelOutOfRange { k, max });
        }
        Ok(EdgeLabel(k))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Label of the first pair `(i, i + 1)` in row `i`, i.e. `(i - 1) n - C(i, 2) + 1`.
#[inline]
fn row_start(n: u64, i: u64) -> u64 {
    (i - 1) * n - i * (i - 1) / 2 + 1
}

#[inline]
fn rank_unchecked(n: u64, i: u64, j: u64) -> u64 {
    (i - 1) * n - i * (i - 1) / 2 + j - i
}

/// Canonical label of `pair` in `K_n`.
pub fn label_index(order: Order, pair: EdgePair) -> Result<EdgeLabel> {
    order.require_at_least(2)?;
    pair.check(order)?;
    let k = rank_unchecked(order.n() as u64, pair.i as u64, pair.j as u64);
    Ok(EdgeLabel(k))
}

/// The unique pair carrying label `k`.
pub fn label_inverse(order: Order, k: u64) -> Result<EdgePair> {
    order.require_at_least(2)?;
    let label = EdgeLabel::new(order, k)?;
    let n = order.n() as u64;
    let k = label.0;

    // Row i = m + 1 is the largest with row_start(i) <= k, which works out to
    // m <= ((2n - 1) - sqrt((2n - 1)^2 - 8 (k - 1))) / 2.
    let b = 2 * n as u128 - 1;
    let disc = b * b - 8 * (k as u128 - 1);
    let m = ((b - disc.isqrt()) / 2) as u64;
    let mut i = (m + 1).clamp(1, n - 1);
    while i > 1 && row_start(n, i) > k {
        i -= 1;
    }
    while i < n - 1 && row_start(n, i + 1) <= k {
        i += 1;
    }
    let j = k - row_start(n, i) + i + 1;
    debug_assert!(j > i && j <= n);
    Ok(EdgePair {
        i: i as usize,
        j: j as usize,
    })
}

/// An injective map from edge pairs to their canonical labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelAssignment {
    order: Order,
    entries: BTreeMap<EdgePair, EdgeLabel>,
}

impl LabelAssignment {
    pub fn order(&self) -> Order {
        self.order
    }

    pub fn get(&self, pair: EdgePair) -> Option<EdgeLabel> {
        self.entries.get(&pair).copied()
    }

    /// Entries in lexicographic order of the pairs.
    pub fn iter(&self) -> impl Iterator<Item = (EdgePair, EdgeLabel)> + '_ {
        self.entries.iter().map(|(p, k)| (*p, *k))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when the domain is every pair of `K_n` and the image is `1..=N`.
    pub fn is_complete(&self) -> bool {
        self.entries.len() as u64 == self.order.edge_count()
            && self
                .entries
                .values()
                .enumerate()
                .all(|(idx, k)| k.0 == idx as u64 + 1)
    }
}

/// Labels every edge of `K_n`. For `n = 1` the assignment is empty.
pub fn label_all(order: Order) -> LabelAssignment {
    let n = order.n() as u64;
    let entries = order
        .pairs()
        .map(|p| (p, EdgeLabel(rank_unchecked(n, p.i as u64, p.j as u64))))
        .collect();
    LabelAssignment { order, entries }
}

/// Labels the edges of a subgraph of `K_n` by the same rule as [`label_all`].
pub fn label_subgraph(graph: &SimpleGraph) -> Result<LabelAssignment> {
    let order = graph.order();
    let mut entries = BTreeMap::new();
    for &pair in graph.edges() {
        entries.insert(pair, label_index(order, pair)?);
    }
    Ok(LabelAssignment { order, entries })
}
