//! Finite combinatorial 1-complexes.
//!
//! A graph is a set of cells with an involution and an idempotent start map;
//! vertices are the fixed points of the involution. [`Graph`] stores the
//! validated form: vertices are numbered `0..n`, and edges are half-edges
//! `0..2m` where half-edge `e` has inverse `e ^ 1`. The even member of each
//! pair is the canonical representative of its arc, which gives every graph
//! a fixed orientation.
//!
//! Arbitrary cell data (for example read from an external source) goes
//! through [`validate_cells`] / [`Graph::from_cells`].

pub(crate) mod format;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::covering::{Cell, GraphMorphism};
use crate::error::{Error, Result};
use crate::union_find::UnionFind;

pub use format::parse_graph_block;

/// Inverse of a half-edge.
#[inline]
pub fn inv(edge: usize) -> usize {
    edge ^ 1
}

/// Arc containing a half-edge.
#[inline]
pub fn arc_of(edge: usize) -> usize {
    edge / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Empty,
    IndexOutOfRange,
    NotInvolutive,
    StartNotIdempotent,
    InvolutionFixesEdge,
    EdgeIsOwnStart,
    LengthMismatch,
}

/// The first axiom failure found by [`validate_cells`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub cell: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.axiom {
            Axiom::Empty => "graph has no cells",
            Axiom::IndexOutOfRange => "cell index out of range",
            Axiom::NotInvolutive => "inverse map is not an involution",
            Axiom::StartNotIdempotent => "start map is not idempotent",
            Axiom::InvolutionFixesEdge => "involution fixes an edge",
            Axiom::EdgeIsOwnStart => "edge is its own start vertex",
            Axiom::LengthMismatch => "inverse and start maps have different lengths",
        };
        write!(f, "{what} (cell {})", self.cell)
    }
}

/// Checks the graph axioms on raw cell data.
///
/// `inv[x]` and `start[x]` give the inverse and start cell of cell `x`.
pub fn validate_cells(inv: &[usize], start: &[usize]) -> Result<(), Violation> {
    let fail = |axiom, cell| Err(Violation { axiom, cell });
    if inv.len() != start.len() {
        return fail(Axiom::LengthMismatch, inv.len().min(start.len()));
    }
    if inv.is_empty() {
        return fail(Axiom::Empty, 0);
    }
    let n = inv.len();
    for x in 0..n {
        if inv[x] >= n || start[x] >= n {
            return fail(Axiom::IndexOutOfRange, x);
        }
    }
    for x in 0..n {
        if inv[inv[x]] != x {
            return fail(Axiom::NotInvolutive, x);
        }
        if start[start[x]] != start[x] {
            return fail(Axiom::StartNotIdempotent, x);
        }
    }
    for x in 0..n {
        let fixed = inv[x] == x;
        let own_start = start[x] == x;
        if fixed && !own_start {
            return fail(Axiom::InvolutionFixesEdge, x);
        }
        if !fixed && own_start {
            return fail(Axiom::EdgeIsOwnStart, x);
        }
    }
    Ok(())
}

/// A finite graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    start: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from its arc list `(start, terminal)`.
    pub fn new(n_vertices: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::InvalidGraph(Violation {
                axiom: Axiom::Empty,
                cell: 0,
            }));
        }
        let mut start = Vec::with_capacity(2 * arcs.len());
        for &(s, t) in arcs {
            for v in [s, t] {
                if v >= n_vertices {
                    return Err(Error::VertexOutOfRange(v));
                }
            }
            start.push(s);
            start.push(t);
        }
        Ok(Self::from_starts(n_vertices, start))
    }

    fn from_starts(n_vertices: usize, start: Vec<usize>) -> Self {
        let mut out = vec![Vec::new(); n_vertices];
        for (e, &s) in start.iter().enumerate() {
            out[s].push(e);
        }
        Self {
            n_vertices,
            start,
            out,
        }
    }

    /// Validates raw cell data and converts it to the half-edge layout.
    /// Vertices keep the relative order of their cells; arcs are ordered by
    /// their lower-indexed cell, which becomes the even half-edge.
    pub fn from_cells(inv: &[usize], start: &[usize]) -> Result<Self> {
        validate_cells(inv, start).map_err(Error::InvalidGraph)?;
        let mut vertex_id = vec![usize::MAX; inv.len()];
        let mut n_vertices = 0;
        for x in 0..inv.len() {
            if inv[x] == x {
                vertex_id[x] = n_vertices;
                n_vertices += 1;
            }
        }
        let mut starts = Vec::new();
        for x in 0..inv.len() {
            if inv[x] > x {
                starts.push(vertex_id[start[x]]);
                starts.push(vertex_id[start[inv[x]]]);
            }
        }
        Ok(Self::from_starts(n_vertices, starts))
    }

    /// Cell form: vertices are cells `0..n`, half-edge `e` is cell `n + e`.
    pub fn to_cells(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n_vertices;
        let mut inv_map: Vec<usize> = (0..n).collect();
        let mut start_map: Vec<usize> = (0..n).collect();
        for e in 0..self.n_edges() {
            inv_map.push(n + inv(e));
            start_map.push(self.start[e]);
        }
        (inv_map, start_map)
    }

    /// The single-vertex graph with `r` loops; loop `i` is arc `i`.
    pub fn rose(r: usize) -> Self {
        Self::from_starts(1, vec![0; 2 * r])
    }

    /// A cycle of length `n >= 1` with arc `i` running from `i` to `i + 1 mod n`.
    pub fn cycle(n: usize) -> Self {
        assert!(n > 0, "cycle needs a vertex");
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &arcs).expect("cycle arcs are in range")
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_arcs(&self) -> usize {
        self.start.len() / 2
    }

    /// Number of edges counting both orientations of each arc.
    pub fn n_edges(&self) -> usize {
        self.start.len()
    }

    pub fn start(&self, edge: usize) -> usize {
        self.start[edge]
    }

    pub fn terminal(&self, edge: usize) -> usize {
        self.start[inv(edge)]
    }

    /// Arc endpoints in canonical orientation.
    pub fn arc(&self, arc: usize) -> (usize, usize) {
        (self.start[2 * arc], self.start[2 * arc + 1])
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn valency(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n_vertices {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Subgraph> {
        let mut seen = vec![false; self.n_vertices];
        let mut parts = Vec::new();
        for root in 0..self.n_vertices {
            if seen[root] {
                continue;
            }
            let mut vertices = BTreeSet::new();
            let mut arcs = BTreeSet::new();
            let mut queue = VecDeque::from([root]);
            seen[root] = true;
            while let Some(v) = queue.pop_front() {
                vertices.insert(v);
                for &e in &self.out[v] {
                    arcs.insert(arc_of(e));
                    let w = self.terminal(e);
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            parts.push(Subgraph { vertices, arcs });
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Spanning forest with one tree per component, containing each of the
    /// `given` trees. Remaining arcs are added greedily in index order.
    pub fn spanning_forest(&self, given: &[Subgraph]) -> Result<SpanningForest> {
        for (i, tree) in given.iter().enumerate() {
            tree.check_in(self)?;
            if !tree.is_tree(self) {
                return Err(Error::NotATree(i));
            }
        }
        check_disjoint(given)?;

        let mut uf = UnionFind::new(self.n_vertices);
        let mut in_tree = vec![false; self.n_arcs()];
        for tree in given {
            for &a in &tree.arcs {
                let (s, t) = self.arc(a);
                uf.union(s, t);
                in_tree[a] = true;
            }
        }
        let mut omitted = Vec::new();
        for a in 0..self.n_arcs() {
            if in_tree[a] {
                continue;
            }
            let (s, t) = self.arc(a);
            if uf.union(s, t).is_some() {
                in_tree[a] = true;
            } else {
                omitted.push(a);
            }
        }
        let arcs = (0..self.n_arcs()).filter(|&a| in_tree[a]).collect();
        Ok(SpanningForest { arcs, omitted })
    }

    /// Ranks of the components together with the ranks of H₀ and H₁.
    pub fn rank_and_homology(&self) -> Homology {
        let components = self.components();
        let forest = self
            .spanning_forest(&[])
            .expect("empty tree family is always valid");
        let mut component_of = vec![0; self.n_vertices];
        for (i, c) in components.iter().enumerate() {
            for &v in &c.vertices {
                component_of[v] = i;
            }
        }
        let mut component_ranks = vec![0; components.len()];
        for &a in &forest.omitted {
            component_ranks[component_of[self.arc(a).0]] += 1;
        }
        Homology {
            h0: components.len(),
            h1: component_ranks.iter().sum(),
            component_ranks,
        }
    }

    /// Rank of a connected graph, i.e. the number of arcs outside a
    /// spanning tree.
    pub fn rank(&self) -> Result<usize> {
        let h = self.rank_and_homology();
        if h.h0 != 1 {
            return Err(Error::Disconnected);
        }
        Ok(h.h1)
    }

    /// Collapses each subgraph of `spec` to its own vertex.
    ///
    /// Arcs inside a collapsed subgraph map to that vertex; every other arc
    /// survives (arcs joining two vertices of the same subgraph without
    /// belonging to it become loops).
    pub fn quotient(&self, spec: &QuotientSpec) -> Result<GraphMorphism> {
        for part in &spec.parts {
            part.check_in(self)?;
        }
        check_disjoint(&spec.parts)?;

        let mut part_of_vertex = vec![None; self.n_vertices];
        let mut part_of_arc = vec![None; self.n_arcs()];
        for (i, part) in spec.parts.iter().enumerate() {
            for &v in &part.vertices {
                part_of_vertex[v] = Some(i);
            }
            for &a in &part.arcs {
                part_of_arc[a] = Some(i);
            }
        }

        let mut part_class = vec![None; spec.parts.len()];
        let mut vertex_map = vec![0; self.n_vertices];
        let mut n_classes = 0;
        for v in 0..self.n_vertices {
            vertex_map[v] = match part_of_vertex[v] {
                Some(p) => *part_class[p].get_or_insert_with(|| {
                    n_classes += 1;
                    n_classes - 1
                }),
                None => {
                    n_classes += 1;
                    n_classes - 1
                }
            };
        }

        let mut new_arcs = Vec::new();
        let mut edge_map = vec![Cell::Vertex(0); self.n_edges()];
        for a in 0..self.n_arcs() {
            match part_of_arc[a] {
                Some(p) => {
                    let class = part_class[p].expect("part with an arc has vertices");
                    edge_map[2 * a] = Cell::Vertex(class);
                    edge_map[2 * a + 1] = Cell::Vertex(class);
                }
                None => {
                    let (s, t) = self.arc(a);
                    let k = new_arcs.len();
                    new_arcs.push((vertex_map[s], vertex_map[t]));
                    edge_map[2 * a] = Cell::Edge(2 * k);
                    edge_map[2 * a + 1] = Cell::Edge(2 * k + 1);
                }
            }
        }
        let target = Graph::new(n_classes, &new_arcs)?;
        GraphMorphism::new(self.clone(), target, vertex_map, edge_map)
    }

    /// Union of all closed reduced paths at `v`.
    ///
    /// Computed by repeatedly deleting valency-one vertices other than `v`.
    pub fn spine(&self, v: usize) -> Result<Subgraph> {
        self.check_vertex(v)?;
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut alive_vertex = vec![true; self.n_vertices];
        let mut alive_arc = vec![true; self.n_arcs()];
        let mut valency: Vec<usize> = (0..self.n_vertices).map(|x| self.valency(x)).collect();
        let mut queue: VecDeque<usize> = (0..self.n_vertices)
            .filter(|&x| x != v && valency[x] <= 1)
            .collect();
        while let Some(x) = queue.pop_front() {
            if !alive_vertex[x] || valency[x] > 1 {
                continue;
            }
            alive_vertex[x] = false;
            if let Some(&e) = self.out[x].iter().find(|&&e| alive_arc[arc_of(e)]) {
                alive_arc[arc_of(e)] = false;
                valency[x] -= 1;
                let y = self.terminal(e);
                valency[y] -= 1;
                if y != v && valency[y] == 1 {
                    queue.push_back(y);
                }
            }
        }
        Ok(Subgraph {
            vertices: (0..self.n_vertices).filter(|&x| alive_vertex[x]).collect(),
            arcs: (0..self.n_arcs()).filter(|&a| alive_arc[a]).collect(),
        })
    }

    /// The subgraph as a graph in its own right, with the old vertex id of
    /// each new vertex.
    pub fn restrict(&self, sub: &Subgraph) -> Result<(Graph, Vec<usize>)> {
        sub.check_in(self)?;
        let old: Vec<usize> = sub.vertices.iter().copied().collect();
        let mut new_id = vec![usize::MAX; self.n_vertices];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let arcs: Vec<_> = sub
            .arcs
            .iter()
            .map(|&a| {
                let (s, t) = self.arc(a);
                (new_id[s], new_id[t])
            })
            .collect();
        Ok((Graph::new(old.len(), &arcs)?, old))
    }

    /// Disjoint union; vertices and arcs of `other` are shifted after ours.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n_vertices;
        let mut start = self.start.clone();
        start.extend(other.start.iter().map(|&s| s + shift));
        Self::from_starts(self.n_vertices + other.n_vertices, start)
    }

    /// Wedge sum over a discrete graph Θ: vertex `identify[k].0` of `self`
    /// is glued to vertex `identify[k].1` of `other`. Vertices of `other`
    /// that are not glued are numbered after those of `self`, in order.
    pub fn wedge(&self, other: &Graph, identify: &[(usize, usize)]) -> Result<Graph> {
        let mut image = vec![None; other.n_vertices];
        let mut used = vec![false; self.n_vertices];
        for &(a, b) in identify {
            self.check_vertex(a)?;
            other.check_vertex(b)?;
            if used[a] || image[b].is_some() {
                return Err(Error::InvalidSubgraph(
                    "wedge vertices must be distinct on each side".into(),
                ));
            }
            used[a] = true;
            image[b] = Some(a);
        }
        let mut next = self.n_vertices;
        let map: Vec<usize> = image
            .iter()
            .map(|m| {
                m.unwrap_or_else(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        let mut start = self.start.clone();
        start.extend(other.start.iter().map(|&s| map[s]));
        Ok(Self::from_starts(next, start))
    }
}

fn check_disjoint(parts: &[Subgraph]) -> Result<()> {
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            if !parts[i].vertices.is_disjoint(&parts[j].vertices) {
                return Err(Error::Overlap(i, j));
            }
        }
    }
    Ok(())
}

/// A subgraph, given by vertex and arc sets closed under start and inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgraph {
    pub vertices: BTreeSet<usize>,
    pub arcs: BTreeSet<usize>,
}

impl Subgraph {
    pub fn new(
        g: &Graph,
        vertices: impl IntoIterator<Item = usize>,
        arcs: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let sub = Self {
            vertices: vertices.into_iter().collect(),
            arcs: arcs.into_iter().collect(),
        };
        sub.check_in(g)?;
        Ok(sub)
    }

    pub fn vertex(v: usize) -> Self {
        Self {
            vertices: BTreeSet::from([v]),
            arcs: BTreeSet::new(),
        }
    }

    /// The whole graph as a subgraph.
    pub fn full(g: &Graph) -> Self {
        Self {
            vertices: (0..g.n_vertices()).collect(),
            arcs: (0..g.n_arcs()).collect(),
        }
    }

    fn check_in(&self, g: &Graph) -> Result<()> {
        if let Some(&v) = self.vertices.iter().find(|&&v| v >= g.n_vertices()) {
            return Err(Error::VertexOutOfRange(v));
        }
        for &a in &self.arcs {
            if a >= g.n_arcs() {
                return Err(Error::ArcOutOfRange(a));
            }
            let (s, t) = g.arc(a);
            if !self.vertices.contains(&s) || !self.vertices.contains(&t) {
                return Err(Error::InvalidSubgraph(format!(
                    "arc {a} has an endpoint outside the subgraph"
                )));
            }
        }
        Ok(())
    }

    pub fn contains_edge(&self, edge: usize) -> bool {
        self.arcs.contains(&arc_of(edge))
    }

    pub fn is_connected(&self, g: &Graph) -> bool {
        let Some(&root) = self.vertices.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([root]);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &e in g.out_edges(v) {
                if self.contains_edge(e) {
                    let w = g.terminal(e);
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn is_tree(&self, g: &Graph) -> bool {
        self.is_connected(g) && self.arcs.len() + 1 == self.vertices.len()
    }
}

/// Quotient data: mutually disjoint subgraphs, each collapsed to a point.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuotientSpec {
    pub parts: Vec<Subgraph>,
}

impl QuotientSpec {
    pub fn new(parts: Vec<Subgraph>) -> Self {
        Self { parts }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningForest {
    /// Arcs in the forest, ascending.
    pub arcs: BTreeSet<usize>,
    /// Arcs left out, ascending.
    pub omitted: Vec<usize>,
}

impl SpanningForest {
    pub fn as_subgraph(&self, g: &Graph) -> Subgraph {
        Subgraph {
            vertices: (0..g.n_vertices()).collect(),
            arcs: self.arcs.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub component_ranks: Vec<usize>,
    pub h0: usize,
    pub h1: usize,
}

/// A path: base vertex plus a sequence of incident half-edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub base: usize,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn new(g: &Graph, base: usize, edges: Vec<usize>) -> Result<Self> {
        g.check_vertex(base)?;
        let mut at = base;
        for &e in &edges {
            if e >= g.n_edges() || g.start(e) != at {
                return Err(Error::InvalidSubgraph(format!(
                    "edge {e} does not continue the path at vertex {at}"
                )));
            }
            at = g.terminal(e);
        }
        Ok(Self { base, edges })
    }

    pub fn trivial(v: usize) -> Self {
        Self {
            base: v,
            edges: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn end(&self, g: &Graph) -> usize {
        self.edges.last().map_or(self.base, |&e| g.terminal(e))
    }

    pub fn is_closed(&self, g: &Graph) -> bool {
        self.end(g) == self.base
    }

    pub fn is_reduced(&self) -> bool {
        self.edges.windows(2).all(|w| w[1] != inv(w[0]))
    }

    /// Deletes spurs until none remain.
    pub fn reduce(&self) -> Path {
        let mut stack: Vec<usize> = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            if stack.last() == Some(&inv(e)) {
                stack.pop();
            } else {
                stack.push(e);
            }
        }
        Path {
            base: self.base,
            edges: stack,
        }
    }

    pub fn inverse(&self, g: &Graph) -> Path {
        Path {
            base: self.end(g),
            edges: self.edges.iter().rev().map(|&e| inv(e)).collect(),
        }
    }

    /// Concatenation; `other` must start where `self` ends.
    pub fn then(&self, g: &Graph, other: &Path) -> Result<Path> {
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        if other.base != self.end(g) {
            return Err(Error::InvalidSubgraph("paths do not meet".into()));
        }
        Path::new(g, self.base, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> Graph {
        Graph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn validate_examples() {
        // single vertex
        assert_eq!(validate_cells(&[0], &[0]), Ok(()));
        // vertex 0, cell 1 an edge fixed by the involution
        let err = validate_cells(&[0, 1], &[0, 0]).unwrap_err();
        assert_eq!(err.axiom, Axiom::InvolutionFixesEdge);
        assert_eq!(err.cell, 1);
        assert_eq!(err.to_string(), "involution fixes an edge (cell 1)");
        // two vertices, one arc
        assert_eq!(validate_cells(&[0, 1, 3, 2], &[0, 1, 0, 1]), Ok(()));
    }

    #[test]
    fn validate_other_axioms() {
        assert_eq!(validate_cells(&[], &[]).unwrap_err().axiom, Axiom::Empty);
        assert_eq!(
            validate_cells(&[0, 2, 1], &[0, 0, 1]).unwrap_err().axiom,
            Axiom::StartNotIdempotent
        );
        assert_eq!(
            validate_cells(&[1, 2, 0], &[0, 0, 0]).unwrap_err().axiom,
            Axiom::NotInvolutive
        );
        assert_eq!(
            validate_cells(&[0, 2, 1], &[0, 1, 0]).unwrap_err().axiom,
            Axiom::EdgeIsOwnStart
        );
        assert_eq!(
            validate_cells(&[0, 5], &[0, 0]).unwrap_err().axiom,
            Axiom::IndexOutOfRange
        );
    }

    #[test]
    fn from_cells_roundtrip() {
        let g = theta();
        let (i, s) = g.to_cells();
        assert_eq!(Graph::from_cells(&i, &s).unwrap(), g);
        // cells listed in a scrambled order still give a graph
        let h = Graph::from_cells(&[2, 3, 0, 1, 4], &[4, 4, 4, 4, 4]).unwrap();
        assert_eq!(h.n_vertices(), 1);
        assert_eq!(h.n_arcs(), 2);
    }

    #[test]
    fn components_examples() {
        let loops = Graph::new(2, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(loops.components().len(), 2);
        assert_eq!(theta().components().len(), 1);
        let discrete = Graph::new(5, &[]).unwrap();
        assert_eq!(discrete.components().len(), 5);
    }

    #[test]
    fn reduce_examples() {
        let g = Graph::rose(2);
        let spur = Path::new(&g, 0, vec![0, 1]).unwrap();
        assert!(spur.reduce().is_trivial());
        let reduced = Path::new(&g, 0, vec![0, 2, 0]).unwrap();
        assert_eq!(reduced.reduce(), reduced);
        let nested = Path::new(&g, 0, vec![0, 2, 3, 1]).unwrap();
        assert_eq!(nested.reduce(), Path::trivial(0));
    }

    #[test]
    fn spanning_forest_examples() {
        let tree = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let f = tree.spanning_forest(&[]).unwrap();
        assert_eq!(f.arcs.len(), 2);
        assert!(f.omitted.is_empty());

        let rose = Graph::rose(3);
        let f = rose.spanning_forest(&[]).unwrap();
        assert!(f.arcs.is_empty());
        assert_eq!(f.omitted, vec![0, 1, 2]);

        let g = theta();
        let f = g.spanning_forest(&[]).unwrap();
        assert_eq!(f.arcs.len(), 1);
        assert_eq!(f.omitted.len(), 2);
        // |E_T| = 2(|V_T| - 1)
        assert_eq!(2 * f.arcs.len(), 2 * (g.n_vertices() - 1));
    }

    #[test]
    fn spanning_forest_extends_given_trees() {
        let g = theta();
        let seed = Subgraph::new(&g, [0, 1], [2]).unwrap();
        let f = g.spanning_forest(&[seed]).unwrap();
        assert_eq!(f.arcs.iter().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(f.omitted, vec![0, 1]);

        let not_tree = Subgraph::new(&g, [0, 1], [0, 1]).unwrap();
        assert_eq!(g.spanning_forest(&[not_tree]), Err(Error::NotATree(0)));
        let a = Subgraph::vertex(0);
        let b = Subgraph::new(&g, [0, 1], [1]).unwrap();
        assert_eq!(g.spanning_forest(&[a, b]), Err(Error::Overlap(0, 1)));
    }

    #[test]
    fn rank_examples() {
        let tree = Graph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert_eq!(tree.rank().unwrap(), 0);
        for n in 1..6 {
            assert_eq!(Graph::cycle(n).rank().unwrap(), 1);
        }
        let g = theta();
        assert_eq!(g.rank().unwrap(), 2);
        // 2(rk - 1) = |E| - 2|V|
        assert_eq!(2, g.n_edges() - 2 * g.n_vertices());
        let two = Graph::new(3, &[(0, 0), (1, 2)]).unwrap().rank_and_homology();
        assert_eq!(two.component_ranks, vec![1, 0]);
        assert_eq!((two.h0, two.h1), (2, 1));
        assert_eq!(two.component_ranks.len(), 2);
        assert_eq!(Graph::new(2, &[]).unwrap().rank(), Err(Error::Disconnected));
    }

    #[test]
    fn quotient_examples() {
        let g = theta();
        let tree = g.spanning_forest(&[]).unwrap().as_subgraph(&g);
        let q = g.quotient(&QuotientSpec::new(vec![tree])).unwrap();
        assert_eq!(q.target().n_vertices(), 1);
        assert_eq!(q.target().n_arcs(), 2);
        assert_eq!(q.target().rank().unwrap(), 2);

        let q = g.quotient(&QuotientSpec::new(vec![Subgraph::vertex(0)])).unwrap();
        assert_eq!(q.target(), &g);

        let q = g
            .quotient(&QuotientSpec::new(vec![Subgraph::vertex(0), Subgraph::vertex(1)]))
            .unwrap();
        assert_eq!(q.target(), &g);

        let overlap = QuotientSpec::new(vec![Subgraph::vertex(0), Subgraph::vertex(0)]);
        assert_eq!(g.quotient(&overlap).unwrap_err(), Error::Overlap(0, 1));
    }

    #[test]
    fn quotient_turns_chords_into_loops() {
        // square with a diagonal; collapse the path 0-1-2, the diagonal 0-2
        // is not in the subgraph and becomes a loop
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let part = Subgraph::new(&g, [0, 1, 2], [0, 1]).unwrap();
        let q = g.quotient(&QuotientSpec::new(vec![part])).unwrap();
        let t = q.target();
        assert_eq!(t.n_vertices(), 2);
        assert_eq!(t.n_arcs(), 3);
        assert_eq!(t.arc(2), (0, 0));
        assert_eq!(t.rank().unwrap(), g.rank().unwrap());
    }

    #[test]
    fn spine_examples() {
        let tree = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        for v in 0..3 {
            let s = tree.spine(v).unwrap();
            assert_eq!(s, Subgraph::vertex(v));
        }
        // loop at 0 with hanging path 0 - 1 - 2, basepoint 2
        let lollipop = Graph::new(3, &[(0, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(lollipop.spine(2).unwrap(), Subgraph::full(&lollipop));
        let at_loop = lollipop.spine(0).unwrap();
        assert_eq!(at_loop, Subgraph::new(&lollipop, [0], [0]).unwrap());

        assert_eq!(
            Graph::new(2, &[]).unwrap().spine(0),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn wedge_rank_law() {
        let a = theta();
        let b = Graph::cycle(3);
        let w = a.wedge(&b, &[(0, 0), (1, 2)]).unwrap();
        assert_eq!(w.n_vertices(), 3);
        assert_eq!(w.rank().unwrap(), 2 - 1 + 2 + 1);
        assert!(a.wedge(&b, &[(0, 0), (0, 1)]).is_err());
    }
}
