//! Simple graphs, orientations, explicit labelings and the edge-list text
//! format.
//!
//! ```text
//! # comment
//! [directed] n l
//! i j [k]        (l lines)
//! v i k          (optional vertex labels of a total labeling)
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::labeling::{EdgePair, LabelAssignment, Order};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    order: Order,
    edges: BTreeSet<EdgePair>,
}

impl SimpleGraph {
    pub fn empty(order: Order) -> Self {
        SimpleGraph {
            order,
            edges: BTreeSet::new(),
        }
    }

    /// `K_n`.
    pub fn complete(order: Order) -> Self {
        SimpleGraph {
            order,
            edges: order.pairs().collect(),
        }
    }

    pub fn new(order: Order, edges: impl IntoIterator<Item = EdgePair>) -> Result<Self> {
        let mut graph = SimpleGraph::empty(order);
        for pair in edges {
            graph.insert(pair)?;
        }
        Ok(graph)
    }

    /// Builds a graph from endpoint pairs given in either orientation.
    pub fn from_pairs(
        order: Order,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut graph = SimpleGraph::empty(order);
        for (u, v) in edges {
            graph.insert(EdgePair::from_endpoints(u, v)?)?;
        }
        Ok(graph)
    }

    pub fn insert(&mut self, pair: EdgePair) -> Result<()> {
        pair.check(self.order)?;
        if !self.edges.insert(pair) {
            return Err(Error::DuplicateEdge {
                u: pair.i(),
                v: pair.j(),
            });
        }
        Ok(())
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn edges(&self) -> &BTreeSet<EdgePair> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, pair: EdgePair) -> bool {
        self.edges.contains(&pair)
    }

    /// Every edge `(i, j)` becomes the arc `i -> j`.
    pub fn canonical_orientation(&self) -> OrientedGraph {
        OrientedGraph {
            order: self.order,
            arcs: self
                .edges
                .iter()
                .map(|p| Arc {
                    tail: p.i(),
                    head: p.j(),
                })
                .collect(),
        }
    }

    /// Orients edge number `e` (in lexicographic edge order) against the
    /// canonical direction when bit `e` of `mask` is set.
    pub fn orient_by_mask(&self, mask: u64) -> OrientedGraph {
        let arcs = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, p)| {
                if e < 64 && mask >> e & 1 == 1 {
                    Arc {
                        tail: p.j(),
                        head: p.i(),
                    }
                } else {
                    Arc {
                        tail: p.i(),
                        head: p.j(),
                    }
                }
            })
            .collect();
        OrientedGraph {
            order: self.order,
            arcs,
        }
    }
}

/// A directed edge `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

impl Arc {
    pub fn pair(self) -> EdgePair {
        EdgePair::from_endpoints(self.tail, self.head).expect("arc endpoints are distinct")
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

/// An orientation of a simple graph: at most one arc per unordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    order: Order,
    arcs: BTreeSet<Arc>,
}

impl OrientedGraph {
    pub fn empty(order: Order) -> Self {
        OrientedGraph {
            order,
            arcs: BTreeSet::new(),
        }
    }

    pub fn new(order: Order, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut digraph = OrientedGraph::empty(order);
        for (tail, head) in arcs {
            digraph.insert(tail, head)?;
        }
        Ok(digraph)
    }

    pub fn insert(&mut self, tail: usize, head: usize) -> Result<()> {
        let pair = EdgePair::from_endpoints(tail, head)?;
        pair.check(self.order)?;
        let reverse = Arc {
            tail: head,
            head: tail,
        };
        if self.arcs.contains(&reverse) || !self.arcs.insert(Arc { tail, head }) {
            return Err(Error::DuplicateEdge { u: tail, v: head });
        }
        Ok(())
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn arcs(&self) -> &BTreeSet<Arc> {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Forgets directions.
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph {
            order: self.order,
            edges: self.arcs.iter().map(|a| a.pair()).collect(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.arcs.iter().all(|a| a.tail < a.head)
    }
}

/// Edge/arc sets that the weight checkers can walk over. Keys are the
/// `(u, v)` endpoint pairs used to look labels up.
pub trait EdgeSet {
    fn order(&self) -> Order;
    fn edge_keys(&self) -> Vec<(usize, usize)>;
}

impl EdgeSet for SimpleGraph {
    fn order(&self) -> Order {
        self.order
    }

    fn edge_keys(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|p| (p.i(), p.j())).collect()
    }
}

impl EdgeSet for OrientedGraph {
    fn order(&self) -> Order {
        self.order
    }

    fn edge_keys(&self) -> Vec<(usize, usize)> {
        self.arcs.iter().map(|a| (a.tail, a.head)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelKind {
    VertexOnly,
    EdgeOnly,
    Total,
}

/// An arbitrary user-supplied labeling of vertices, edges, or both.
///
/// Edge keys are endpoint pairs as stored in the structure they label:
/// `(i, j)` with `i < j` for a simple graph, `(tail, head)` for an arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitLabeling {
    pub kind: LabelKind,
    pub vertices: BTreeMap<usize, u64>,
    pub edges: BTreeMap<(usize, usize), u64>,
}

impl ExplicitLabeling {
    pub fn edge_only(edges: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        ExplicitLabeling {
            kind: LabelKind::EdgeOnly,
            vertices: BTreeMap::new(),
            edges: edges.into_iter().collect(),
        }
    }

    pub fn total(
        vertices: impl IntoIterator<Item = (usize, u64)>,
        edges: impl IntoIterator<Item = ((usize, usize), u64)>,
    ) -> Self {
        ExplicitLabeling {
            kind: LabelKind::Total,
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().collect(),
        }
    }

    pub fn edge_label(&self, key: (usize, usize)) -> Option<u64> {
        self.edges.get(&key).copied()
    }

    pub fn vertex_label(&self, v: usize) -> Option<u64> {
        self.vertices.get(&v).copied()
    }
}

impl From<&LabelAssignment> for ExplicitLabeling {
    fn from(assignment: &LabelAssignment) -> Self {
        ExplicitLabeling::edge_only(assignment.iter().map(|(p, k)| ((p.i(), p.j()), k.get())))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Undirected(SimpleGraph),
    Directed(OrientedGraph),
}

impl Structure {
    pub fn order(&self) -> Order {
        match self {
            Structure::Undirected(g) => g.order(),
            Structure::Directed(d) => d.order(),
        }
    }

    pub fn edge_keys(&self) -> Vec<(usize, usize)> {
        match self {
            Structure::Undirected(g) => g.edge_keys(),
            Structure::Directed(d) => d.edge_keys(),
        }
    }

    pub fn is_directed(&self) -> bool {
        matches!(self, Structure::Directed(_))
    }
}

/// Contents of one edge-list file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub structure: Structure,
    pub labeling: Option<ExplicitLabeling>,
}

impl EdgeList {
    pub fn unlabeled(structure: Structure) -> Self {
        EdgeList {
            structure,
            labeling: None,
        }
    }

    pub fn labeled(structure: Structure, labeling: ExplicitLabeling) -> Self {
        EdgeList {
            structure,
            labeling: Some(labeling),
        }
    }
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {token:?}")))
}

fn parse_label(token: &str, line: usize) -> Result<u64> {
    match token.parse::<u64>() {
        Ok(0) | Err(_) => Err(Error::parse(
            line,
            format!("expected a positive label, found {token:?}"),
        )),
        Ok(k) => Ok(k),
    }
}

/// Parses the edge-list format. Labels, when present, must be injective and
/// form one of the images `1..=l` (edge labeling), `1..=n+l` (total labeling
/// with explicit vertex lines) or `n+1..=n+l` (super total labeling whose
/// vertex labels default to `f(v_i) = i`).
pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, l)| (idx + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header line \"n l\""))?;
    let mut tokens: Vec<&str> = header.split_whitespace().collect();
    let directed = tokens.first() == Some(&"directed");
    if directed {
        tokens.remove(0);
    }
    if tokens.len() != 2 {
        return Err(Error::parse(
            header_line,
            "malformed header: expected \"[directed] n l\"",
        ));
    }
    let n = parse_usize(tokens[0], header_line, "vertex count n")?;
    let l = parse_usize(tokens[1], header_line, "edge count l")?;
    let order = Order::new(n).map_err(|e| Error::parse(header_line, e.to_string()))?;

    let mut undirected = SimpleGraph::empty(order);
    let mut oriented = OrientedGraph::empty(order);
    let mut edge_labels: Vec<((usize, usize), u64, usize)> = Vec::new();
    let mut vertex_labels: Vec<(usize, u64, usize)> = Vec::new();
    let mut labeled_edges: Option<bool> = None;
    let mut edges_read = 0;

    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.first() == Some(&"v") {
            if tokens.len() != 3 {
                return Err(Error::parse(line, "vertex label line must be \"v i k\""));
            }
            let v = parse_usize(tokens[1], line, "vertex index")?;
            order
                .check_vertex(v)
                .map_err(|e| Error::parse(line, e.to_string()))?;
            if vertex_labels.iter().any(|&(u, _, _)| u == v) {
                return Err(Error::parse(line, format!("vertex {v} labeled twice")));
            }
            vertex_labels.push((v, parse_label(tokens[2], line)?, line));
            continue;
        }
        if !vertex_labels.is_empty() {
            return Err(Error::parse(line, "edge line after vertex label lines"));
        }
        if edges_read == l {
            return Err(Error::parse(
                line,
                format!("more than the {l} edges declared in the header"),
            ));
        }
        if tokens.len() != 2 && tokens.len() != 3 {
            return Err(Error::parse(line, "edge line must be \"i j\" or \"i j k\""));
        }
        let has_label = tokens.len() == 3;
        match labeled_edges {
            None => labeled_edges = Some(has_label),
            Some(prev) if prev != has_label => {
                return Err(Error::parse(
                    line,
                    "either every edge line carries a label or none does",
                ));
            }
            Some(_) => {}
        }
        let u = parse_usize(tokens[0], line, "vertex index")?;
        let v = parse_usize(tokens[1], line, "vertex index")?;
        for w in [u, v] {
            order
                .check_vertex(w)
                .map_err(|e| Error::parse(line, e.to_string()))?;
        }
        let key = if directed {
            oriented
                .insert(u, v)
                .map_err(|e| Error::parse(line, e.to_string()))?;
            (u, v)
        } else {
            let pair =
                EdgePair::from_endpoints(u, v).map_err(|e| Error::parse(line, e.to_string()))?;
            undirected
                .insert(pair)
                .map_err(|e| Error::parse(line, e.to_string()))?;
            (pair.i(), pair.j())
        };
        if has_label {
            edge_labels.push((key, parse_label(tokens[2], line)?, line));
        }
        edges_read += 1;
    }
    if edges_read != l {
        return Err(Error::parse(
            header_line,
            format!("header declares {l} edges but {edges_read} were given"),
        ));
    }

    let structure = if directed {
        Structure::Directed(oriented)
    } else {
        Structure::Undirected(undirected)
    };
    let labeling = build_labeling(n, l, header_line, edge_labels, vertex_labels)?;
    Ok(EdgeList {
        structure,
        labeling,
    })
}

fn build_labeling(
    n: usize,
    l: usize,
    header_line: usize,
    edge_labels: Vec<((usize, usize), u64, usize)>,
    vertex_labels: Vec<(usize, u64, usize)>,
) -> Result<Option<ExplicitLabeling>> {
    let (n64, l64) = (n as u64, l as u64);
    let has_edges = !edge_labels.is_empty();
    let has_vertices = !vertex_labels.is_empty();

    let mut seen: BTreeMap<u64, usize> = BTreeMap::new();
    let all = edge_labels
        .iter()
        .map(|&(_, k, line)| (k, line))
        .chain(vertex_labels.iter().map(|&(_, k, line)| (k, line)));
    for (k, line) in all {
        if let Some(first) = seen.insert(k, line) {
            return Err(Error::parse(
                line,
                format!("label {k} already used on line {first}"),
            ));
        }
    }

    let in_range = |lo: u64, hi: u64| -> Result<()> {
        for (&k, &line) in &seen {
            if k < lo || k > hi {
                return Err(Error::parse(
                    line,
                    format!("label {k} outside {lo}..={hi}; labels must be a bijection"),
                ));
            }
        }
        Ok(())
    };

    let edges = || edge_labels.iter().map(|&(key, k, _)| (key, k));
    let labeling = match (has_vertices, has_edges) {
        (false, false) => return Ok(None),
        (true, false) => {
            in_range(1, n64)?;
            if seen.len() != n {
                return Err(Error::parse(
                    header_line,
                    "vertex labels must cover every vertex",
                ));
            }
            let vertices = vertex_labels.iter().map(|&(v, k, _)| (v, k));
            if l > 0 {
                ExplicitLabeling {
                    kind: LabelKind::VertexOnly,
                    vertices: vertices.collect(),
                    edges: BTreeMap::new(),
                }
            } else {
                // without edges a vertex-only labeling is also a total one
                ExplicitLabeling::total(vertices, [])
            }
        }
        (true, true) => {
            if vertex_labels.len() != n {
                return Err(Error::parse(
                    header_line,
                    "a total labeling needs one \"v i k\" line per vertex",
                ));
            }
            in_range(1, n64 + l64)?;
            ExplicitLabeling::total(vertex_labels.iter().map(|&(v, k, _)| (v, k)), edges())
        }
        (false, true) => {
            if in_range(1, l64).is_ok() {
                ExplicitLabeling::edge_only(edges())
            } else {
                in_range(n64 + 1, n64 + l64).map_err(|_| {
                    let (&k, &line) = seen.iter().find(|(&k, _)| k > l64).expect("some label exceeds l");
                    Error::parse(
                        line,
                        format!("label {k} outside 1..={l64} (edge labeling) and {}..={} (super total labeling)", n64 + 1, n64 + l64),
                    )
                })?;
                ExplicitLabeling::total((1..=n).map(|v| (v, v as u64)), edges())
            }
        }
    };
    Ok(Some(labeling))
}

/// Canonical text form: sorted edges, then `v i k` lines for total and
/// vertex-only labelings. LF line endings, no trailing whitespace.
pub fn serialize(list: &EdgeList) -> String {
    let mut out = String::new();
    let order = list.structure.order();
    let keys = list.structure.edge_keys();
    if list.structure.is_directed() {
        out.push_str("directed ");
    }
    writeln!(out, "{} {}", order.n(), keys.len()).unwrap();
    let edge_labels = list
        .labeling
        .as_ref()
        .filter(|lab| lab.kind != LabelKind::VertexOnly && !lab.edges.is_empty());
    for (u, v) in keys {
        match edge_labels.and_then(|lab| lab.edge_label((u, v))) {
            Some(k) => writeln!(out, "{u} {v} {k}").unwrap(),
            None => writeln!(out, "{u} {v}").unwrap(),
        }
    }
    if let Some(lab) = &list.labeling {
        if lab.kind != LabelKind::EdgeOnly {
            for (v, k) in &lab.vertices {
                writeln!(out, "v {v} {k}").unwrap();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::label_all;

    fn order(n: usize) -> Order {
        Order::new(n).unwrap()
    }

    #[test]
    fn complete_graph_sizes() {
        let k3 = SimpleGraph::complete(order(3));
        let edges: Vec<_> = k3.edges().iter().map(|p| (p.i(), p.j())).collect();
        assert_eq!(edges, vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(SimpleGraph::complete(order(1)).edge_count(), 0);
        assert_eq!(SimpleGraph::complete(order(5)).edge_count(), 10);
    }

    #[test]
    fn orientation_round_trips() {
        let k3 = SimpleGraph::complete(order(3));
        let arcs: Vec<_> = k3
            .canonical_orientation()
            .arcs()
            .iter()
            .map(|a| (a.tail, a.head))
            .collect();
        assert_eq!(arcs, vec![(1, 2), (1, 3), (2, 3)]);

        let path = SimpleGraph::from_pairs(order(3), [(2, 1), (3, 2)]).unwrap();
        let arcs: Vec<_> = path
            .canonical_orientation()
            .arcs()
            .iter()
            .map(|a| (a.tail, a.head))
            .collect();
        assert_eq!(arcs, vec![(1, 2), (2, 3)]);

        let k2 = SimpleGraph::complete(order(2));
        assert_eq!(k2.canonical_orientation().arc_count(), 1);

        let k4 = SimpleGraph::complete(order(4));
        assert_eq!(k4.canonical_orientation().underlying(), k4);
        assert!(k4.canonical_orientation().is_canonical());
        assert_eq!(
            OrientedGraph::empty(order(3)).underlying(),
            SimpleGraph::empty(order(3))
        );

        let d = OrientedGraph::new(order(3), [(1, 2), (2, 3)]).unwrap();
        assert_eq!(d.underlying(), path);
    }

    #[test]
    fn antiparallel_arcs_rejected() {
        assert!(matches!(
            OrientedGraph::new(order(3), [(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge { u: 2, v: 1 })
        ));
        assert!(OrientedGraph::new(order(3), [(1, 1)]).is_err());
        assert!(OrientedGraph::new(order(3), [(1, 4)]).is_err());
    }

    #[test]
    fn parse_examples() {
        let path = parse_edge_list("3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(
            path.structure,
            Structure::Undirected(SimpleGraph::from_pairs(order(3), [(1, 2), (2, 3)]).unwrap())
        );
        assert!(path.labeling.is_none());

        let k3 = parse_edge_list("3 3\n1 2 1\n1 3 2\n2 3 3\n").unwrap();
        assert_eq!(
            k3.labeling.unwrap(),
            ExplicitLabeling::from(&label_all(order(3)))
        );

        let arc = parse_edge_list("directed 2 1\n2 1\n").unwrap();
        assert_eq!(
            arc.structure,
            Structure::Directed(OrientedGraph::new(order(2), [(2, 1)]).unwrap())
        );
    }

    #[test]
    fn parse_comments_and_blank_lines() {
        let text = "# K_2\n\n2 1\n# the only edge\n1 2 1\n";
        let parsed = parse_edge_list(text).unwrap();
        assert_eq!(parsed.labeling.unwrap().edge_label((1, 2)), Some(1));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("3\n1 2\n", 1),
            ("x 1\n1 2\n", 1),
            ("3 2\n1 2\n1 4\n", 3),
            ("3 2\n1 2\n2 1\n", 3),
            ("3 1\n2 2\n", 2),
            ("3 2\n1 2 1\n2 3 1\n", 3),
            ("3 2\n1 2 1\n2 3 7\n", 3),
            ("3 2\n1 2 1\n2 3\n", 3),
            ("3 1\n1 2\n2 3\n", 3),
            ("3 2\n1 2\n", 1),
            ("directed 2 2\n1 2\n2 1\n", 3),
            ("0 0\n", 1),
        ];
        for (text, line) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?} parsed as {other:?}"),
            }
        }
    }

    #[test]
    fn super_total_labels_get_identity_vertices() {
        let parsed = parse_edge_list("3 3\n1 2 4\n1 3 5\n2 3 6\n").unwrap();
        let lab = parsed.labeling.unwrap();
        assert_eq!(lab.kind, LabelKind::Total);
        assert_eq!(lab.vertex_label(3), Some(3));

        let explicit = parse_edge_list("3 3\n1 2 4\n1 3 5\n2 3 6\nv 1 1\nv 2 2\nv 3 3\n").unwrap();
        assert_eq!(explicit.labeling.unwrap(), lab);
        assert!(parse_edge_list("3 3\n1 2 4\n1 3 5\n2 3 6\nv 1 1\n").is_err());
    }

    #[test]
    fn serialize_examples() {
        let k2 = EdgeList::unlabeled(Structure::Undirected(SimpleGraph::complete(order(2))));
        assert_eq!(serialize(&k2), "2 1\n1 2\n");

        let k3 = EdgeList::labeled(
            Structure::Undirected(SimpleGraph::complete(order(3))),
            ExplicitLabeling::from(&label_all(order(3))),
        );
        assert_eq!(serialize(&k3), "3 3\n1 2 1\n1 3 2\n2 3 3\n");

        let empty = EdgeList::unlabeled(Structure::Undirected(SimpleGraph::empty(order(1))));
        assert_eq!(serialize(&empty), "1 0\n");

        let arc = EdgeList::unlabeled(Structure::Directed(
            OrientedGraph::new(order(2), [(2, 1)]).unwrap(),
        ));
        assert_eq!(serialize(&arc), "directed 2 1\n2 1\n");
    }
}
