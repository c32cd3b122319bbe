//! Finitely generated subgroups of a free group as pointed labeled cores.
//!
//! A [`LabeledCore`] is a folded, connected graph whose edges carry
//! generator labels, with every vertex except the basepoint of valency at
//! least two. Closed paths at the basepoint spell exactly the subgroup.
//! Cores are stored in canonical form, so structural equality is subgroup
//! equality.

mod fold;
mod galois;
mod hall;

use std::collections::VecDeque;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::covering::{check_covering, Cell, Covering, Degree, GraphMorphism};
use crate::error::{Error, Result};
use crate::graph::format::{content_lines, parse_usize};
use crate::graph::Graph;
use crate::word::{Letter, Word};

pub(crate) use fold::Folder;
pub use galois::{DeckGroup, DeckQuotient, IntermediateLattice, LatticeClass};

/// Transition table: `table[v][letter]` is the end of the `letter` edge at `v`.
pub(crate) type Table = Vec<Vec<Option<usize>>>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledCore {
    rank: usize,
    table: Table,
}

impl LabeledCore {
    /// Core of the trivial subgroup: one vertex, no edges.
    pub fn trivial(rank: usize) -> Self {
        Self {
            rank,
            table: vec![vec![None; 2 * rank]],
        }
    }

    /// Core of the whole free group: the rose.
    pub fn full(rank: usize) -> Self {
        Self {
            rank,
            table: vec![vec![Some(0); 2 * rank]],
        }
    }

    /// Folds the wedge of loops spelling `gens` at a common basepoint.
    pub fn from_words(rank: usize, gens: &[Word]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let mut folder = Folder::new(rank);
        let base = folder.add_vertex();
        for g in gens {
            g.check_rank(rank)?;
            let g = g.reduce();
            if !g.is_empty() {
                folder.add_loop(base, &g);
            }
        }
        let (table, ids) = folder.finish();
        Ok(build(rank, &table, ids[base]).0)
    }

    /// Builds a core from explicit edges `(v, letter, w)`. The input must
    /// already be folded and connected; hanging trees away from `base` are
    /// pruned.
    pub fn from_edges(
        rank: usize,
        n_vertices: usize,
        base: usize,
        edges: &[(usize, Letter, usize)],
    ) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if base >= n_vertices {
            return Err(Error::VertexOutOfRange(base));
        }
        let mut table = vec![vec![None; 2 * rank]; n_vertices];
        for &(v, l, w) in edges {
            if v >= n_vertices {
                return Err(Error::VertexOutOfRange(v));
            }
            if w >= n_vertices {
                return Err(Error::VertexOutOfRange(w));
            }
            if l.generator() >= rank {
                return Err(Error::GeneratorOutOfRange {
                    index: l.generator(),
                    rank,
                });
            }
            for (x, l, y) in [(v, l, w), (w, l.inverse(), v)] {
                if table[x][l.index()].is_some_and(|t| t != y) {
                    return Err(Error::InvalidCore(format!(
                        "vertex {x} has two {l} edges"
                    )));
                }
                table[x][l.index()] = Some(y);
            }
        }
        if reachable(&table, base).iter().any(|&r| !r) {
            return Err(Error::Disconnected);
        }
        Ok(build(rank, &table, base).0)
    }

    /// Schreier graph of the action `x ↦ perms[i][x]` of generator `i`,
    /// restricted to the orbit of `base`.
    pub fn from_permutations(perms: &[Vec<usize>], base: usize) -> Result<Self> {
        let rank = perms.len();
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let n = perms[0].len();
        if base >= n {
            return Err(Error::VertexOutOfRange(base));
        }
        let mut table = vec![vec![None; 2 * rank]; n];
        for (g, p) in perms.iter().enumerate() {
            let mut seen = vec![false; n];
            if p.len() != n || p.iter().any(|&y| y >= n || std::mem::replace(&mut seen[y], true)) {
                return Err(Error::InvalidCore(format!(
                    "generator {} is not a permutation of 0..{n}",
                    Letter::new(g, false)
                )));
            }
            for (x, &y) in p.iter().enumerate() {
                table[x][2 * g] = Some(y);
                table[y][2 * g + 1] = Some(x);
            }
        }
        Ok(build(rank, &table, base).0)
    }

    /// Core of the subgroup carried by a covering of a rose: each source
    /// edge is labeled by the rose edge it maps to.
    pub fn from_covering(c: &Covering) -> Result<Self> {
        let target = c.target();
        if target.n_vertices() != 1 {
            return Err(Error::InvalidCore("covering target is not a rose".into()));
        }
        let rank = target.n_arcs();
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let source = c.source();
        let mut table = vec![vec![None; 2 * rank]; source.n_vertices()];
        for e in 0..source.n_edges() {
            let Cell::Edge(f) = c.map().edge(e) else {
                return Err(Error::InvalidCore("covering collapses an edge".into()));
            };
            table[source.start(e)][f] = Some(source.terminal(e));
        }
        Ok(build(rank, &table, c.source_base()).0)
    }

    /// Rank of the ambient free group.
    pub fn ambient_rank(&self) -> usize {
        self.rank
    }

    /// The basepoint. Canonical form always puts it first.
    pub fn base(&self) -> usize {
        0
    }

    pub fn n_vertices(&self) -> usize {
        self.table.len()
    }

    /// Number of labeled edges, each counted once.
    pub fn n_arcs(&self) -> usize {
        self.table.iter().flatten().filter(|t| t.is_some()).count() / 2
    }

    /// End of the `letter` edge at `v`, if present.
    pub fn step(&self, v: usize, letter: Letter) -> Option<usize> {
        self.table[v][letter.index()]
    }

    pub(crate) fn table(&self) -> &Table {
        &self.table
    }

    pub fn valency(&self, v: usize) -> usize {
        self.table[v].iter().filter(|t| t.is_some()).count()
    }

    /// Reads `word` letter by letter from `v`.
    pub fn read(&self, v: usize, word: &Word) -> Option<usize> {
        word.letters()
            .iter()
            .try_fold(v, |at, &l| self.table[at].get(l.index()).copied().flatten())
    }

    /// Membership of `word` in the subgroup.
    pub fn contains(&self, word: &Word) -> Result<bool> {
        word.check_rank(self.rank)?;
        Ok(self.read(0, &word.reduce()) == Some(0))
    }

    /// Every vertex has all `2r` transitions.
    pub fn is_complete(&self) -> bool {
        self.table.iter().all(|row| row.iter().all(Option::is_some))
    }

    /// Index of the subgroup: the vertex count for complete cores.
    pub fn index(&self) -> Degree {
        if self.is_complete() {
            Degree::Finite(self.n_vertices())
        } else {
            Degree::Infinite
        }
    }

    /// Rank of the subgroup, `1 + |arcs| − |vertices|`.
    pub fn rank(&self) -> usize {
        1 + self.n_arcs() - self.n_vertices()
    }

    pub fn is_trivial(&self) -> bool {
        self.n_arcs() == 0
    }

    /// Breadth-first tree words from the basepoint, in label order.
    pub fn tree_words(&self) -> (Vec<Word>, Vec<Vec<bool>>) {
        let n = self.n_vertices();
        let mut words: Vec<Option<Word>> = vec![None; n];
        let mut in_tree = vec![vec![false; 2 * self.rank]; n];
        words[0] = Some(Word::identity());
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for l in 0..2 * self.rank {
                let Some(w) = self.table[v][l] else { continue };
                if words[w].is_none() {
                    let mut letters = words[v].as_ref().expect("visited").letters().to_vec();
                    letters.push(Letter(l));
                    words[w] = Some(Word::from_letters(letters));
                    in_tree[v][l] = true;
                    in_tree[w][l ^ 1] = true;
                    queue.push_back(w);
                }
            }
        }
        (words.into_iter().map(|w| w.expect("connected")).collect(), in_tree)
    }

    /// Free basis read off the breadth-first spanning tree: one word per
    /// edge outside the tree, ordered by start vertex and label.
    pub fn schreier_basis(&self) -> Vec<Word> {
        let (words, in_tree) = self.tree_words();
        let mut basis = Vec::new();
        for v in 0..self.n_vertices() {
            for g in 0..self.rank {
                let l = 2 * g;
                let Some(w) = self.table[v][l] else { continue };
                if in_tree[v][l] {
                    continue;
                }
                let mut letters = words[v].letters().to_vec();
                letters.push(Letter(l));
                letters.extend(words[w].inverse().letters());
                basis.push(Word::from_letters(letters).reduce());
            }
        }
        basis
    }

    /// Core of `g⁻¹ H g`: the basepoint moved along `g`.
    pub fn conjugate(&self, g: &Word) -> Result<Self> {
        g.check_rank(self.rank)?;
        let mut folder = Folder::from_table(self.rank, &self.table);
        let end = folder.add_path(0, &g.reduce());
        let (table, ids) = folder.finish();
        Ok(build(self.rank, &table, ids[end]).0)
    }

    /// The core as a plain graph with half-edge labels.
    pub fn to_labeled_graph(&self) -> LabeledGraph {
        let n = self.n_vertices();
        let mut arcs = Vec::new();
        let mut labels = Vec::new();
        let mut edge_at = vec![vec![None; 2 * self.rank]; n];
        for v in 0..n {
            for g in 0..self.rank {
                if let Some(w) = self.table[v][2 * g] {
                    let a = arcs.len();
                    arcs.push((v, w));
                    labels.push(Letter::new(g, false));
                    labels.push(Letter::new(g, true));
                    edge_at[v][2 * g] = Some(2 * a);
                    edge_at[w][2 * g + 1] = Some(2 * a + 1);
                }
            }
        }
        let graph = Graph::new(n, &arcs).expect("core vertices exist");
        LabeledGraph {
            graph,
            labels,
            edge_at,
        }
    }

    /// Label map onto the rose, a covering exactly when the core is complete.
    pub fn covering(&self) -> Result<Covering> {
        if !self.is_complete() {
            return Err(Error::IncompleteCore);
        }
        let lg = self.to_labeled_graph();
        let m = lg.immersion(self.rank)?;
        check_covering(m, 0, 0).map_err(Error::NotCovering)
    }

    /// Graphviz rendering with generator labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph core {\n  0 [shape=doublecircle];\n");
        for v in 1..self.n_vertices() {
            let _ = writeln!(out, "  {v};");
        }
        for (v, l, w) in self.edges() {
            let _ = writeln!(out, "  {v} -> {w} [label=\"{l}\"];");
        }
        out.push_str("}\n");
        out
    }

    /// Positively labeled edges in canonical order.
    pub fn edges(&self) -> Vec<(usize, Letter, usize)> {
        let mut out = Vec::new();
        for v in 0..self.n_vertices() {
            for g in 0..self.rank {
                if let Some(w) = self.table[v][2 * g] {
                    out.push((v, Letter::new(g, false), w));
                }
            }
        }
        out
    }
}

/// A core drawn as a [`Graph`], with the label of every half-edge.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<Letter>,
    /// `edge_at[v][letter]` is the half-edge at `v` with that label.
    pub edge_at: Vec<Vec<Option<usize>>>,
}

impl LabeledGraph {
    /// The label map onto the rank-`rank` rose.
    pub fn immersion(&self, rank: usize) -> Result<GraphMorphism> {
        GraphMorphism::new(
            self.graph.clone(),
            Graph::rose(rank),
            vec![0; self.graph.n_vertices()],
            self.labels.iter().map(|l| Cell::Edge(l.index())).collect(),
        )
    }
}

pub(crate) fn reachable(table: &Table, from: usize) -> Vec<bool> {
    let mut seen = vec![false; table.len()];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        for &w in table[v].iter().flatten() {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Restricts a folded table to the component of `base`, prunes hanging
/// trees, and renumbers breadth-first from `base` in label order. Returns
/// the core and the new id of each old vertex that survives.
pub(crate) fn build(rank: usize, table: &Table, base: usize) -> (LabeledCore, Vec<Option<usize>>) {
    let n = table.len();
    let mut alive = reachable(table, base);
    let mut valency: Vec<usize> = table.iter().map(|row| row.iter().flatten().count()).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| alive[v] && v != base && valency[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in table[v].iter().flatten() {
            if alive[w] && w != v {
                valency[w] -= 1;
                if w != base && valency[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }

    let mut ids = vec![None; n];
    let mut order = vec![base];
    ids[base] = Some(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in table[v].iter().flatten() {
            if alive[w] && ids[w].is_none() {
                ids[w] = Some(order.len());
                order.push(w);
            }
        }
    }
    let new_table = order
        .iter()
        .map(|&v| {
            table[v]
                .iter()
                .map(|t| t.and_then(|w| ids[w]))
                .collect()
        })
        .collect();
    (
        LabeledCore {
            rank,
            table: new_table,
        },
        ids,
    )
}

/// ```text
/// core r=<rank> n=<vertices> base=<base>
/// edge <v> <generator><+|-> <w>
/// ```
///
/// `edge 0 a+ 1` is an `a` edge from 0 to 1; `edge 1 a- 0` is the same
/// edge. Output uses `+` only, in canonical order.
impl fmt::Display for LabeledCore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "core r={} n={} base=0", self.rank, self.n_vertices())?;
        for (v, l, w) in self.edges() {
            writeln!(f, "edge {v} {l}+ {w}")?;
        }
        Ok(())
    }
}

fn header_field(line: usize, tok: Option<&str>, key: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {key}=")))?;
    let value = tok
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| Error::parse(line, format!("expected {key}=<n>, got {tok:?}")))?;
    parse_usize(line, Some(value), key)
}

impl FromStr for LabeledCore {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = content_lines(s);
        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "expected core header"))?;
        let mut toks = header.split_whitespace();
        if toks.next() != Some("core") {
            return Err(Error::parse(hline, format!("expected `core`, got {header:?}")));
        }
        let rank = header_field(hline, toks.next(), "r")?;
        let n = header_field(hline, toks.next(), "n")?;
        let base = header_field(hline, toks.next(), "base")?;
        if toks.next().is_some() {
            return Err(Error::parse(hline, "trailing tokens in header"));
        }
        let mut edges = Vec::new();
        for (ln, line) in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let [kw, v, label, w] = toks[..] else {
                return Err(Error::parse(ln, format!("expected `edge <v> <label> <w>`, got {line:?}")));
            };
            if kw != "edge" {
                return Err(Error::parse(ln, format!("expected `edge`, got {kw:?}")));
            }
            let v = parse_usize(ln, Some(v), "vertex")?;
            let w = parse_usize(ln, Some(w), "vertex")?;
            let bad = || Error::parse(ln, format!("bad label {label:?}, expected e.g. a+ or b-"));
            let (g, sign) = label.split_at_checked(label.len().saturating_sub(1)).ok_or_else(bad)?;
            let g: Word = g.parse().map_err(|_| bad())?;
            let [l] = g.letters()[..] else { return Err(bad()) };
            if l.is_inverse() {
                return Err(bad());
            }
            let l = match sign {
                "+" => l,
                "-" => l.inverse(),
                _ => return Err(bad()),
            };
            edges.push((v, l, w));
        }
        LabeledCore::from_edges(rank, n, base, &edges).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::parse(hline, other.to_string()),
        })
    }
}
