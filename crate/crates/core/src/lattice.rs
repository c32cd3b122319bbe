//! Intersections (pullbacks) and joins (pushouts) of subgroups, with the
//! double coset bookkeeping of pullback components.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subgroup::{build, Folder, LabeledCore, Table};
use crate::word::Word;

fn same_rank(c1: &LabeledCore, c2: &LabeledCore) -> Result<usize> {
    if c1.ambient_rank() != c2.ambient_rank() {
        return Err(Error::RankMismatch(c1.ambient_rank(), c2.ambient_rank()));
    }
    Ok(c1.ambient_rank())
}

/// Label-matched product of two cores. Vertex `(w₁, w₂)` has id
/// `w₁ · n₂ + w₂`, so ids follow the lexicographic order of pairs.
#[derive(Clone, Debug)]
pub struct PullbackResult {
    rank: usize,
    n2: usize,
    table: Table,
    pub components: Vec<PullbackComponent>,
    /// Index of the component containing the pair of basepoints.
    pub pointed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PullbackComponent {
    pub id: usize,
    pub is_pointed: bool,
    pub is_tree: bool,
    pub rank: usize,
    /// Smallest pair on the cycles of the component, the basepoint pair
    /// for the pointed component, or the smallest pair of a tree.
    pub witness: (usize, usize),
    /// Product ids of the vertices.
    pub vertices: Vec<usize>,
    /// Core at the witness; `None` for trees.
    #[serde(skip)]
    pub core: Option<LabeledCore>,
}

pub fn pullback(c1: &LabeledCore, c2: &LabeledCore) -> Result<PullbackResult> {
    let rank = same_rank(c1, c2)?;
    let (n1, n2) = (c1.n_vertices(), c2.n_vertices());
    let mut table = vec![vec![None; 2 * rank]; n1 * n2];
    for x1 in 0..n1 {
        for x2 in 0..n2 {
            for l in 0..2 * rank {
                if let (Some(y1), Some(y2)) = (c1.table()[x1][l], c2.table()[x2][l]) {
                    table[x1 * n2 + x2][l] = Some(y1 * n2 + y2);
                }
            }
        }
    }

    let n = n1 * n2;
    let mut comp = vec![usize::MAX; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = members.len();
        comp[start] = id;
        let mut list = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in table[v].iter().flatten() {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    list.push(w);
                    queue.push_back(w);
                }
            }
        }
        list.sort_unstable();
        members.push(list);
    }

    let cyclic = cyclic_part(&table);
    let pointed = comp[0];
    let mut components = Vec::with_capacity(members.len());
    for (id, vertices) in members.into_iter().enumerate() {
        let half_edges: usize = vertices.iter().map(|&v| table[v].iter().flatten().count()).sum();
        let comp_rank = 1 + half_edges / 2 - vertices.len();
        let is_pointed = id == pointed;
        let is_tree = comp_rank == 0;
        let wid = if is_pointed {
            0
        } else {
            vertices.iter().copied().find(|&v| cyclic[v]).unwrap_or(vertices[0])
        };
        let core = (!is_tree).then(|| build(rank, &table, wid).0);
        components.push(PullbackComponent {
            id,
            is_pointed,
            is_tree,
            rank: comp_rank,
            witness: (wid / n2, wid % n2),
            vertices,
            core,
        });
    }
    Ok(PullbackResult {
        rank,
        n2,
        table,
        components,
        pointed,
    })
}

/// Vertices surviving the removal of all valency ≤ 1 vertices.
fn cyclic_part(table: &Table) -> Vec<bool> {
    let n = table.len();
    let mut alive = vec![true; n];
    let mut valency: Vec<usize> = table.iter().map(|row| row.iter().flatten().count()).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| valency[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in table[v].iter().flatten() {
            if alive[w] && w != v {
                valency[w] -= 1;
                if valency[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

impl PullbackResult {
    pub fn n_vertices(&self) -> usize {
        self.table.len()
    }

    /// The pair of factor vertices behind product vertex `v`.
    pub fn pair(&self, v: usize) -> (usize, usize) {
        (v / self.n2, v % self.n2)
    }

    pub fn non_tree(&self) -> impl Iterator<Item = &PullbackComponent> {
        self.components.iter().filter(|c| !c.is_tree)
    }

    /// Sum of `rank − 1` over components that are not trees.
    pub fn reduced_rank_sum(&self) -> i64 {
        self.non_tree().map(|c| c.rank as i64 - 1).sum()
    }

    /// Checks that both projections send each edge to an edge with the
    /// same label and are injective on the edges at every vertex.
    pub fn check_projections(&self, c1: &LabeledCore, c2: &LabeledCore) -> bool {
        (0..self.n_vertices()).all(|v| {
            let (x1, x2) = self.pair(v);
            (0..2 * self.rank).all(|l| match self.table[v][l] {
                Some(w) => {
                    let (y1, y2) = self.pair(w);
                    c1.table()[x1][l] == Some(y1) && c2.table()[x2][l] == Some(y2)
                }
                None => c1.table()[x1][l].is_none() || c2.table()[x2][l].is_none(),
            })
        })
    }
}

/// Core of `A₁ ∩ A₂`: the basepoint component of the pullback.
pub fn intersect(c1: &LabeledCore, c2: &LabeledCore) -> Result<LabeledCore> {
    let rank = same_rank(c1, c2)?;
    let n2 = c2.n_vertices();
    let mut ids = HashMap::from([((0usize, 0usize), 0usize)]);
    let mut pairs = vec![(0, 0)];
    let mut table: Table = vec![vec![None; 2 * rank]];
    let mut head = 0;
    while head < pairs.len() {
        let (x1, x2) = pairs[head];
        for l in 0..2 * rank {
            if let (Some(y1), Some(y2)) = (c1.table()[x1][l], c2.table()[x2][l]) {
                let next = pairs.len();
                let id = *ids.entry((y1, y2)).or_insert(next);
                if id == next {
                    pairs.push((y1, y2));
                    table.push(vec![None; 2 * rank]);
                }
                table[head][l] = Some(id);
            }
        }
        head += 1;
    }
    debug_assert!(pairs.len() <= c1.n_vertices() * n2);
    Ok(build(rank, &table, 0).0)
}

/// Adds a copy of `c` to `folder` with its basepoint glued to `at`.
fn graft(folder: &mut Folder, c: &LabeledCore, at: usize) {
    let ids: Vec<usize> = (0..c.n_vertices())
        .map(|v| if v == 0 { at } else { folder.add_vertex() })
        .collect();
    for (v, l, w) in c.edges() {
        folder.add_edge(ids[v], l, ids[w]);
    }
}

/// Core of `⟨A₁ ∪ A₂⟩`: wedge at the basepoints, then fold.
pub fn join(c1: &LabeledCore, c2: &LabeledCore) -> Result<LabeledCore> {
    let rank = same_rank(c1, c2)?;
    let mut folder = Folder::from_table(rank, c1.table());
    graft(&mut folder, c2, 0);
    let (table, ids) = folder.finish();
    Ok(build(rank, &table, ids[0]).0)
}

/// Pairs reachable from the basepoint pair by common label paths.
fn pointed_pairs(c1: &LabeledCore, c2: &LabeledCore) -> HashSet<(usize, usize)> {
    let mut seen = HashSet::from([(0, 0)]);
    let mut queue = VecDeque::from([(0, 0)]);
    while let Some((x1, x2)) = queue.pop_front() {
        for (t1, t2) in c1.table()[x1].iter().zip(&c2.table()[x2]) {
            if let (Some(y1), Some(y2)) = (*t1, *t2) {
                if seen.insert((y1, y2)) {
                    queue.push_back((y1, y2));
                }
            }
        }
    }
    seen
}

/// Whether `g2 ∈ A₂ · g · A₁`.
///
/// Equivalently `h = g⁻¹g2` lies in the product set `B·A₁` with
/// `B = g⁻¹A₂g`. That holds exactly when reduced `h` splits as `x·y` with
/// `x` read from the basepoint of `B` to some `p`, `y⁻¹` read from the
/// basepoint of `A₁` to some `q`, and `(p, q)` in the basepoint component
/// of the pullback of `B` and `A₁`.
pub fn same_double_coset(
    c1: &LabeledCore,
    c2: &LabeledCore,
    g: &Word,
    g2: &Word,
) -> Result<bool> {
    same_rank(c1, c2)?;
    g2.check_rank(c2.ambient_rank())?;
    let b = c2.conjugate(g)?;
    let h = &g.inverse() * g2;
    let pointed = pointed_pairs(&b, c1);
    let letters = h.letters();
    for k in 0..=letters.len() {
        let x = Word::from_letters(letters[..k].to_vec());
        let y = Word::from_letters(letters[k..].to_vec());
        if let (Some(p), Some(q)) = (b.read(0, &x), c1.read(0, &y.inverse())) {
            if pointed.contains(&(p, q)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// A non-tree pullback component and a double coset representative `g`
/// with the component carrying a conjugate of `A₁ ∩ g⁻¹A₂g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCosetTag {
    pub component: usize,
    pub g: Word,
}

/// Tags every non-tree component with `g = h₂ h₁⁻¹`, where `hᵢ` is the
/// breadth-first tree word to the witness in factor `i`. Fails if two tags
/// land in the same double coset `A₂ g A₁`.
pub fn double_coset_tags(
    res: &PullbackResult,
    c1: &LabeledCore,
    c2: &LabeledCore,
) -> Result<Vec<DoubleCosetTag>> {
    same_rank(c1, c2)?;
    let (words1, _) = c1.tree_words();
    let (words2, _) = c2.tree_words();
    let tags: Vec<DoubleCosetTag> = res
        .non_tree()
        .map(|c| {
            let (w1, w2) = c.witness;
            DoubleCosetTag {
                component: c.id,
                g: &words2[w2] * &words1[w1].inverse(),
            }
        })
        .collect();
    for (i, a) in tags.iter().enumerate() {
        for b in &tags[..i] {
            if same_double_coset(c1, c2, &b.g, &a.g)? {
                return Err(Error::LatticeCheck(format!(
                    "components {} and {} share a double coset",
                    b.component, a.component
                )));
            }
        }
    }
    Ok(tags)
}

/// One line per component: `component <id> rank=<k> tree=<bool> g=<word>`.
/// Trees carry no representative and print `g=-`.
pub fn component_report(res: &PullbackResult, tags: &[DoubleCosetTag]) -> String {
    let mut out = String::new();
    for c in &res.components {
        let g = tags
            .iter()
            .find(|t| t.component == c.id)
            .map_or_else(|| "-".to_string(), |t| t.g.to_string());
        let _ = writeln!(out, "component {} rank={} tree={} g={g}", c.id, c.rank, c.is_tree);
    }
    out
}
