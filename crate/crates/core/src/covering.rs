//! Graph maps and coverings.
//!
//! A [`GraphMorphism`] sends vertices to vertices and half-edges to
//! half-edges or vertices, commuting with start and inverse. A [`Covering`]
//! is a dimension-preserving morphism between connected graphs that is a
//! bijection on the edges leaving each vertex.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::format::content_lines;
use crate::graph::{inv, parse_graph_block, Graph, Path, QuotientSpec, Subgraph};
use crate::union_find::UnionFind;

/// Image of a cell under a graph map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Vertex(usize),
    Edge(usize),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Vertex(v) => write!(f, "v{v}"),
            Cell::Edge(e) => write!(f, "e{e}"),
        }
    }
}

impl FromStr for Cell {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("bad cell {s:?}, expected v<n> or e<n>");
        let (kind, num) = s.split_at_checked(1).ok_or_else(bad)?;
        let n: usize = num.parse().map_err(|_| bad())?;
        match kind {
            "v" => Ok(Cell::Vertex(n)),
            "e" => Ok(Cell::Edge(n)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Degree {
    Finite(usize),
    Infinite,
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Finite(n) => Some(n),
            Degree::Infinite => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(n) => write!(f, "{n}"),
            Degree::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMorphism {
    source: Graph,
    target: Graph,
    vertex_map: Vec<usize>,
    edge_map: Vec<Cell>,
}

impl GraphMorphism {
    pub fn new(
        source: Graph,
        target: Graph,
        vertex_map: Vec<usize>,
        edge_map: Vec<Cell>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidMorphism(m));
        if vertex_map.len() != source.n_vertices() || edge_map.len() != source.n_edges() {
            return bad("map does not cover every source cell".into());
        }
        if let Some(v) = vertex_map.iter().position(|&w| w >= target.n_vertices()) {
            return bad(format!("vertex v{v} maps outside the target"));
        }
        for e in 0..source.n_edges() {
            let s = vertex_map[source.start(e)];
            match (edge_map[e], edge_map[inv(e)]) {
                (Cell::Edge(f), Cell::Edge(g)) => {
                    if f >= target.n_edges() {
                        return bad(format!("edge e{e} maps outside the target"));
                    }
                    if target.start(f) != s {
                        return bad(format!("edge e{e}: map does not commute with start"));
                    }
                    if g != inv(f) {
                        return bad(format!("edge e{e}: map does not commute with inverse"));
                    }
                }
                (Cell::Vertex(w), Cell::Vertex(x)) => {
                    if w != s || x != w {
                        return bad(format!("edge e{e} collapses to the wrong vertex"));
                    }
                }
                _ => return bad(format!("edge e{e}: map does not commute with inverse")),
            }
        }
        Ok(Self {
            source,
            target,
            vertex_map,
            edge_map,
        })
    }

    pub fn identity(g: &Graph) -> Self {
        Self {
            source: g.clone(),
            target: g.clone(),
            vertex_map: (0..g.n_vertices()).collect(),
            edge_map: (0..g.n_edges()).map(Cell::Edge).collect(),
        }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn vertex(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    pub fn edge(&self, e: usize) -> Cell {
        self.edge_map[e]
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn is_dimension_preserving(&self) -> bool {
        self.edge_map.iter().all(|c| matches!(c, Cell::Edge(_)))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GraphMorphism) -> Result<GraphMorphism> {
        if self.target != other.source {
            return Err(Error::InvalidMorphism("maps do not compose".into()));
        }
        let vertex_map = self.vertex_map.iter().map(|&v| other.vertex(v)).collect();
        let edge_map = self
            .edge_map
            .iter()
            .map(|c| match *c {
                Cell::Vertex(v) => Cell::Vertex(other.vertex(v)),
                Cell::Edge(e) => other.edge(e),
            })
            .collect();
        GraphMorphism::new(self.source.clone(), other.target.clone(), vertex_map, edge_map)
    }

    /// Lifts `path` to start at source vertex `w`, following the first
    /// source edge over each path edge. Stops where no such edge exists.
    /// Unique whenever the map is locally injective.
    pub fn lift_path(&self, path: &Path, w: usize) -> Result<Lift> {
        self.source.check_vertex(w)?;
        if self.vertex_map[w] != path.base {
            return Err(Error::InvalidMorphism(format!(
                "v{w} does not lie over the path's base v{}",
                path.base
            )));
        }
        let mut at = w;
        let mut edges = Vec::with_capacity(path.edges.len());
        for (i, &f) in path.edges.iter().enumerate() {
            match self
                .source
                .out_edges(at)
                .iter()
                .find(|&&e| self.edge_map[e] == Cell::Edge(f))
            {
                Some(&e) => {
                    edges.push(e);
                    at = self.source.terminal(e);
                }
                None => {
                    return Ok(Lift {
                        path: Path { base: w, edges },
                        failed_at: Some(i),
                    })
                }
            }
        }
        Ok(Lift {
            path: Path { base: w, edges },
            failed_at: None,
        })
    }
}

impl fmt::Display for GraphMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.source, self.target)?;
        for (v, w) in self.vertex_map.iter().enumerate() {
            writeln!(f, "map v{v} v{w}")?;
        }
        for (e, c) in self.edge_map.iter().enumerate() {
            writeln!(f, "map e{e} {c}")?;
        }
        Ok(())
    }
}

impl FromStr for GraphMorphism {
    type Err = Error;

    /// Source graph block, target graph block, then one `map <cell> <cell>`
    /// line for every source vertex and half-edge.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = content_lines(s);
        let source = parse_graph_block(&mut lines)?;
        let target = parse_graph_block(&mut lines)?;
        let mut vertex_map = vec![None; source.n_vertices()];
        let mut edge_map = vec![None; source.n_edges()];
        let mut last = 0;
        for (ln, line) in lines {
            last = ln;
            let mut toks = line.split_whitespace();
            if toks.next() != Some("map") {
                return Err(Error::parse(ln, format!("expected `map`, got {line:?}")));
            }
            let mut cell = || -> Result<Cell> {
                toks.next()
                    .ok_or_else(|| Error::parse(ln, "missing cell"))?
                    .parse()
                    .map_err(|m: String| Error::parse(ln, m))
            };
            let (from, to) = (cell()?, cell()?);
            let slot_taken = match (from, to) {
                (Cell::Vertex(v), Cell::Vertex(w)) if v < vertex_map.len() => {
                    vertex_map[v].replace(w).is_some()
                }
                (Cell::Edge(e), c) if e < edge_map.len() => edge_map[e].replace(c).is_some(),
                _ => return Err(Error::parse(ln, "source cell out of range or vertex to edge")),
            };
            if slot_taken {
                return Err(Error::parse(ln, format!("cell {from} mapped twice")));
            }
        }
        let missing = || Error::parse(last, "not every source cell is mapped");
        let vertex_map = vertex_map.into_iter().collect::<Option<Vec<_>>>().ok_or_else(missing)?;
        let edge_map = edge_map.into_iter().collect::<Option<Vec<_>>>().ok_or_else(missing)?;
        GraphMorphism::new(source, target, vertex_map, edge_map)
            .map_err(|e| Error::parse(last, e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub path: Path,
    /// Index of the first path edge with no lift, if the lift is partial.
    pub failed_at: Option<usize>,
}

impl Lift {
    pub fn is_complete(&self) -> bool {
        self.failed_at.is_none()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Source,
    Target,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoveringViolation {
    BaseOutOfRange,
    BasepointMismatch,
    NotDimensionPreserving { edge: usize },
    Disconnected(Side),
    /// Two edges at `vertex` map onto `target_edge`.
    NotInjective { vertex: usize, target_edge: usize },
    /// `target_edge` at the image of `vertex` has no preimage there.
    NotSurjective { vertex: usize, target_edge: usize },
}

impl fmt::Display for CoveringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BaseOutOfRange => f.write_str("basepoint out of range"),
            Self::BasepointMismatch => f.write_str("source basepoint does not map to target basepoint"),
            Self::NotDimensionPreserving { edge } => {
                write!(f, "not dimension preserving (edge e{edge})")
            }
            Self::Disconnected(side) => write!(f, "{side:?} graph is not connected"),
            Self::NotInjective { vertex, target_edge } => {
                write!(f, "not injective at vertex v{vertex} (over e{target_edge})")
            }
            Self::NotSurjective { vertex, target_edge } => {
                write!(f, "not surjective at vertex v{vertex} (missing e{target_edge})")
            }
        }
    }
}

/// A validated covering with basepoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covering {
    map: GraphMorphism,
    source_base: usize,
    target_base: usize,
}

/// Checks that `m` is a covering sending `u` to `v`.
pub fn check_covering(
    m: GraphMorphism,
    u: usize,
    v: usize,
) -> Result<Covering, CoveringViolation> {
    use CoveringViolation::*;
    if u >= m.source.n_vertices() || v >= m.target.n_vertices() {
        return Err(BaseOutOfRange);
    }
    if m.vertex(u) != v {
        return Err(BasepointMismatch);
    }
    if let Some(edge) = m.edge_map.iter().position(|c| matches!(c, Cell::Vertex(_))) {
        return Err(NotDimensionPreserving { edge });
    }
    if !m.source.is_connected() {
        return Err(Disconnected(Side::Source));
    }
    if !m.target.is_connected() {
        return Err(Disconnected(Side::Target));
    }
    let mut hit = vec![usize::MAX; m.target.n_edges()];
    for x in 0..m.source.n_vertices() {
        for &e in m.source.out_edges(x) {
            let Cell::Edge(f) = m.edge(e) else { unreachable!() };
            if hit[f] == x {
                return Err(NotInjective {
                    vertex: x,
                    target_edge: f,
                });
            }
            hit[f] = x;
        }
        let image = m.vertex(x);
        if let Some(&f) = m.target.out_edges(image).iter().find(|&&f| hit[f] != x) {
            return Err(NotSurjective {
                vertex: x,
                target_edge: f,
            });
        }
    }
    Ok(Covering {
        map: m,
        source_base: u,
        target_base: v,
    })
}

/// Output of [`Covering::excise_trees`].
#[derive(Clone, Debug)]
pub struct Excision {
    /// The induced covering between the quotients.
    pub covering: Covering,
    /// Source graph onto its quotient by the preimage components of the tree.
    pub source_quotient: GraphMorphism,
    /// Target graph onto its quotient by the tree.
    pub target_quotient: GraphMorphism,
}

impl Covering {
    pub fn identity(g: &Graph, v: usize) -> Result<Self> {
        check_covering(GraphMorphism::identity(g), v, v).map_err(Error::NotCovering)
    }

    pub fn map(&self) -> &GraphMorphism {
        &self.map
    }

    pub fn source(&self) -> &Graph {
        &self.map.source
    }

    pub fn target(&self) -> &Graph {
        &self.map.target
    }

    pub fn source_base(&self) -> usize {
        self.source_base
    }

    pub fn target_base(&self) -> usize {
        self.target_base
    }

    /// Source vertices over target vertex `y`.
    pub fn fiber(&self, y: usize) -> Vec<usize> {
        (0..self.source().n_vertices())
            .filter(|&x| self.map.vertex(x) == y)
            .collect()
    }

    /// Source half-edges over target half-edge `f`.
    pub fn edge_fiber(&self, f: usize) -> Vec<usize> {
        (0..self.source().n_edges())
            .filter(|&e| self.map.edge(e) == Cell::Edge(f))
            .collect()
    }

    /// Size of the fiber over the target basepoint.
    pub fn degree(&self) -> Degree {
        Degree::Finite(self.fiber(self.target_base).len())
    }

    /// Unique lift of a target path starting at `w`.
    pub fn lift_path(&self, path: &Path, w: usize) -> Result<Lift> {
        self.map.lift_path(path, w)
    }

    /// Quotients source and target by a spanning tree `tree` of the target
    /// and the components of its preimage, returning the induced covering
    /// of the single-vertex quotient.
    pub fn excise_trees(&self, tree: &Subgraph) -> Result<Excision> {
        let source = self.source();
        let target = self.target();
        let tree = Subgraph::new(target, tree.vertices.iter().copied(), tree.arcs.iter().copied())?;
        if !tree.is_tree(target) || tree.vertices.len() != target.n_vertices() {
            return Err(Error::NotATree(0));
        }

        let mut uf = UnionFind::new(source.n_vertices());
        let mut lifted_arcs = vec![false; source.n_arcs()];
        for a in 0..source.n_arcs() {
            let Cell::Edge(f) = self.map.edge(2 * a) else { unreachable!() };
            if tree.contains_edge(f) {
                lifted_arcs[a] = true;
                let (s, t) = source.arc(a);
                uf.union(s, t);
            }
        }
        let mut parts: Vec<Subgraph> = Vec::new();
        let mut part_of_root = vec![usize::MAX; source.n_vertices()];
        for x in 0..source.n_vertices() {
            let root = uf.find(x);
            if part_of_root[root] == usize::MAX {
                part_of_root[root] = parts.len();
                parts.push(Subgraph::default());
            }
            parts[part_of_root[root]].vertices.insert(x);
        }
        for a in (0..source.n_arcs()).filter(|&a| lifted_arcs[a]) {
            let root = uf.find(source.arc(a).0);
            parts[part_of_root[root]].arcs.insert(a);
        }
        for (i, part) in parts.iter().enumerate() {
            let mut images: Vec<usize> = part.vertices.iter().map(|&x| self.map.vertex(x)).collect();
            images.sort_unstable();
            images.dedup();
            if images.len() != part.vertices.len()
                || part.vertices.len() != tree.vertices.len()
                || part.arcs.len() != tree.arcs.len()
            {
                return Err(Error::ExcisionFailed(i));
            }
        }

        let source_quotient = source.quotient(&QuotientSpec::new(parts))?;
        let target_quotient = target.quotient(&QuotientSpec::new(vec![tree]))?;
        let sq = source_quotient.target();
        let vertex_map = vec![0; sq.n_vertices()];
        let mut edge_map = vec![Cell::Vertex(0); sq.n_edges()];
        for e in 0..source.n_edges() {
            if let Cell::Edge(e2) = source_quotient.edge(e) {
                let Cell::Edge(f) = self.map.edge(e) else { unreachable!() };
                edge_map[e2] = target_quotient.edge(f);
            }
        }
        let induced = GraphMorphism::new(sq.clone(), target_quotient.target().clone(), vertex_map, edge_map)?;
        let covering = check_covering(
            induced,
            source_quotient.vertex(self.source_base),
            target_quotient.vertex(self.target_base),
        )
        .map_err(Error::NotCovering)?;
        Ok(Excision {
            covering,
            source_quotient,
            target_quotient,
        })
    }

    /// The basepoint-preserving covering `q` with `self = other ∘ q`, if the
    /// lifting criterion holds. Both coverings must share target and base.
    pub fn factor_through(&self, other: &Covering) -> Result<Option<Covering>> {
        if self.target() != other.target() || self.target_base != other.target_base {
            return Err(Error::InvalidMorphism(
                "coverings do not share target and basepoint".into(),
            ));
        }
        let lam = self.source();
        let gam = other.source();
        let mut qv = vec![None; lam.n_vertices()];
        let mut qe = vec![None; lam.n_edges()];
        qv[self.source_base] = Some(other.source_base);
        let mut queue = VecDeque::from([self.source_base]);
        while let Some(x) = queue.pop_front() {
            let image = qv[x].expect("queued vertices are mapped");
            for &e in lam.out_edges(x) {
                let over = self.map.edge(e);
                let f = *gam
                    .out_edges(image)
                    .iter()
                    .find(|&&f| other.map.edge(f) == over)
                    .expect("coverings lift every edge");
                match qe[e] {
                    Some(prev) if prev != f => return Ok(None),
                    _ => {
                        qe[e] = Some(f);
                        qe[inv(e)] = Some(inv(f));
                    }
                }
                let y = lam.terminal(e);
                match qv[y] {
                    Some(prev) if prev != gam.terminal(f) => return Ok(None),
                    Some(_) => {}
                    None => {
                        qv[y] = Some(gam.terminal(f));
                        queue.push_back(y);
                    }
                }
            }
        }
        let vertex_map = qv.into_iter().map(|v| v.expect("source is connected")).collect();
        let edge_map = qe
            .into_iter()
            .map(|e| Cell::Edge(e.expect("source is connected")))
            .collect();
        let q = GraphMorphism::new(lam.clone(), gam.clone(), vertex_map, edge_map)?;
        check_covering(q, self.source_base, other.source_base)
            .map(Some)
            .map_err(Error::NotCovering)
    }
}

/// Ball of finite radius in the universal cover.
#[derive(Clone, Debug)]
pub struct Ball {
    pub graph: Graph,
    pub center: usize,
    /// Vertices whose star in the ball is smaller than the star of their image.
    pub boundary: Vec<usize>,
    /// Reduced edge path from the center to each vertex.
    pub words: Vec<Vec<usize>>,
    /// Projection to the base graph.
    pub projection: GraphMorphism,
}

/// Reduced paths of length at most `radius` from `v`, joined by
/// one-edge extensions. Vertices appear in breadth-first order.
pub fn universal_ball(base: &Graph, v: usize, radius: usize) -> Result<Ball> {
    base.check_vertex(v)?;
    if !base.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut ends = vec![v];
    let mut arcs = Vec::new();
    let mut edge_map = Vec::new();
    let mut frontier = vec![0usize];
    for _ in 0..radius {
        let mut next = Vec::new();
        for &node in &frontier {
            let last = words[node].last().copied();
            for &e in base.out_edges(ends[node]) {
                if Some(inv(e)) == last {
                    continue;
                }
                let child = words.len();
                let mut w = words[node].clone();
                w.push(e);
                words.push(w);
                ends.push(base.terminal(e));
                arcs.push((node, child));
                edge_map.push(Cell::Edge(e));
                edge_map.push(Cell::Edge(inv(e)));
                next.push(child);
            }
        }
        frontier = next;
    }
    let graph = Graph::new(words.len(), &arcs)?;
    let boundary = (0..graph.n_vertices())
        .filter(|&x| graph.valency(x) < base.valency(ends[x]))
        .collect();
    let projection = GraphMorphism::new(graph.clone(), base.clone(), ends, edge_map)?;
    Ok(Ball {
        graph,
        center: 0,
        boundary,
        words,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta() -> Graph {
        Graph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
    }

    /// Cyclic n-fold cover of the one-loop rose.
    fn cyclic_cover(n: usize) -> Covering {
        let source = Graph::cycle(n);
        let edge_map = (0..source.n_edges()).map(|e| Cell::Edge(e % 2)).collect();
        let m = GraphMorphism::new(source, Graph::rose(1), vec![0; n], edge_map).unwrap();
        check_covering(m, 0, 0).unwrap()
    }

    /// Double cover of the theta graph: two copies of each vertex, arc 0
    /// lifted straight, arcs 1 and 2 crossed.
    fn theta_double_cover() -> Covering {
        // vertices: p0=0, p1=1, q0=2, q1=3
        let source = Graph::new(
            4,
            &[(0, 2), (1, 3), (0, 3), (1, 2), (0, 3), (1, 2)],
        )
        .unwrap();
        let edge_map = (0..source.n_edges())
            .map(|e| {
                let arc = crate::graph::arc_of(e) / 2;
                Cell::Edge(2 * arc + e % 2)
            })
            .collect();
        let m = GraphMorphism::new(source, theta(), vec![0, 0, 1, 1], edge_map).unwrap();
        check_covering(m, 0, 0).unwrap()
    }

    #[test]
    fn check_covering_examples() {
        let id = Covering::identity(&theta(), 0).unwrap();
        assert_eq!(id.degree(), Degree::Finite(1));

        // collapse arc 0 of a two-vertex graph
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let m = GraphMorphism::new(
            g,
            Graph::new(1, &[]).unwrap(),
            vec![0, 0],
            vec![Cell::Vertex(0), Cell::Vertex(0)],
        )
        .unwrap();
        let err = check_covering(m, 0, 0).unwrap_err();
        assert_eq!(err, CoveringViolation::NotDimensionPreserving { edge: 0 });
        assert!(err.to_string().starts_with("not dimension preserving"));

        let c = cyclic_cover(2);
        assert_eq!(c.degree(), Degree::Finite(2));
        assert_eq!(c.fiber(0).len(), 2);
        assert_eq!(c.edge_fiber(0).len(), 2);
        assert_eq!(c.edge_fiber(1).len(), 2);
    }

    #[test]
    fn local_bijectivity_failures() {
        // both loops of a two-loop rose onto the one-loop rose
        let m = GraphMorphism::new(
            Graph::rose(2),
            Graph::rose(1),
            vec![0],
            vec![Cell::Edge(0), Cell::Edge(1), Cell::Edge(0), Cell::Edge(1)],
        )
        .unwrap();
        assert!(matches!(
            check_covering(m, 0, 0),
            Err(CoveringViolation::NotInjective { vertex: 0, .. })
        ));
        // a path onto a loop misses edges at its ends
        let m = GraphMorphism::new(
            Graph::new(2, &[(0, 1)]).unwrap(),
            Graph::rose(1),
            vec![0, 0],
            vec![Cell::Edge(0), Cell::Edge(1)],
        )
        .unwrap();
        assert!(matches!(
            check_covering(m, 0, 0),
            Err(CoveringViolation::NotSurjective { vertex: 0, target_edge: 1 })
        ));
    }

    #[test]
    fn morphism_rejects_non_commuting_maps() {
        let err = GraphMorphism::new(
            Graph::rose(1),
            Graph::rose(1),
            vec![0],
            vec![Cell::Edge(0), Cell::Edge(0)],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidMorphism(_)));
    }

    #[test]
    fn lift_examples() {
        let c = cyclic_cover(2);
        let rose = Graph::rose(1);
        let trivial = Path::trivial(0);
        assert_eq!(c.lift_path(&trivial, 1).unwrap().path, Path::trivial(1));
        let a = Path::new(&rose, 0, vec![0]).unwrap();
        let aa = Path::new(&rose, 0, vec![0, 0]).unwrap();
        for w in 0..2 {
            let l = c.lift_path(&a, w).unwrap();
            assert!(l.is_complete());
            assert!(!l.path.is_closed(c.source()));
            assert!(c.lift_path(&aa, w).unwrap().path.is_closed(c.source()));
        }
        // spur lifts to a spur
        let spur = Path::new(&rose, 0, vec![0, 1]).unwrap();
        let l = c.lift_path(&spur, 0).unwrap();
        assert!(l.path.is_closed(c.source()));
        assert!(!l.path.is_reduced());
        assert!(c.lift_path(&a, 5).is_err());
    }

    #[test]
    fn excision_examples() {
        let g = theta();
        let id = Covering::identity(&g, 0).unwrap();
        let tree = Subgraph::new(&g, [0, 1], [0]).unwrap();
        let ex = id.excise_trees(&tree).unwrap();
        assert_eq!(ex.covering.source(), &Graph::rose(2));
        assert_eq!(ex.covering.degree(), Degree::Finite(1));

        let dc = theta_double_cover();
        assert_eq!(dc.source().rank().unwrap(), 3);
        let ex = dc.excise_trees(&tree).unwrap();
        assert_eq!(ex.covering.degree(), Degree::Finite(2));
        let s = ex.covering.source();
        assert_eq!(s.rank().unwrap(), 3);
        assert_eq!(2 * (3 - 1), s.n_edges() - 2 * s.n_vertices());
        assert_eq!(ex.covering.target().n_vertices(), 1);

        let not_spanning = Subgraph::vertex(0);
        assert!(id.excise_trees(&not_spanning).is_err());
    }

    #[test]
    fn excision_keeps_trees_simply_connected() {
        // identity on a tree: source stays rank 0
        let t = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let id = Covering::identity(&t, 1).unwrap();
        let ex = id.excise_trees(&Subgraph::full(&t)).unwrap();
        assert_eq!(ex.covering.source().rank().unwrap(), 0);
        assert_eq!(ex.covering.source().n_vertices(), 1);
    }

    #[test]
    fn universal_ball_examples() {
        let rose = Graph::rose(2);
        let b0 = universal_ball(&rose, 0, 0).unwrap();
        assert_eq!(b0.graph.n_vertices(), 1);
        assert_eq!(b0.boundary, vec![0]);
        let b1 = universal_ball(&rose, 0, 1).unwrap();
        assert_eq!((b1.graph.n_vertices(), b1.graph.n_arcs()), (5, 4));
        let b2 = universal_ball(&rose, 0, 2).unwrap();
        assert_eq!(b2.graph.n_vertices(), 1 + 4 + 12);
        assert_eq!(b2.graph.rank().unwrap(), 0);
        assert_eq!(b2.boundary.len(), 12);
        // finite graph where the ball saturates
        let path = Graph::new(2, &[(0, 1)]).unwrap();
        let b = universal_ball(&path, 0, 5).unwrap();
        assert_eq!(b.graph.n_vertices(), 2);
        assert!(b.boundary.is_empty());
    }

    #[test]
    fn factor_examples() {
        let c2 = cyclic_cover(2);
        let c3 = cyclic_cover(3);
        let c4 = cyclic_cover(4);
        let same = c4.factor_through(&c4).unwrap().unwrap();
        assert_eq!(same.map(), &GraphMorphism::identity(c4.source()));
        let q = c4.factor_through(&c2).unwrap().unwrap();
        assert_eq!(q.degree(), Degree::Finite(2));
        assert_eq!(q.map().vertex_map(), &[0, 1, 0, 1]);
        assert!(c2.factor_through(&c3).unwrap().is_none());
        assert!(c3.factor_through(&c2).unwrap().is_none());
        assert!(c2.factor_through(&c4).unwrap().is_none());
    }

    #[test]
    fn morphism_text_roundtrip() {
        let c = theta_double_cover();
        let text = c.map().to_string();
        let parsed: GraphMorphism = text.parse().unwrap();
        assert_eq!(&parsed, c.map());
        assert_eq!(parsed.to_string(), text);

        let truncated: String = text.lines().take(text.lines().count() - 1).map(|l| format!("{l}\n")).collect();
        assert!(truncated.parse::<GraphMorphism>().unwrap_err().is_parse());
    }

    #[test]
    fn cell_syntax() {
        assert_eq!("v3".parse::<Cell>(), Ok(Cell::Vertex(3)));
        assert_eq!("e10".parse::<Cell>(), Ok(Cell::Edge(10)));
        assert!("x1".parse::<Cell>().is_err());
        assert!("".parse::<Cell>().is_err());
        assert_eq!(Cell::Edge(4).to_string(), "e4");
    }
}
