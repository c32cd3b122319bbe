//! Rank estimates for intersections in the free group of rank two.
//!
//! For a core over the rose with loops `a` and `b`, the profile records the
//! number `H` of core vertices and, for each generator, the number `nᵢ` of
//! maximal non-cyclic runs of edges with that label. Every missing label
//! direction at a core vertex is a stub; each run has a stub at both ends.
//! Checkers start on every core vertex and one is removed per run, leaving
//! `rank − 1`.

use std::fmt;
use std::io;

use serde::Serialize;

use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::graph::Subgraph;
use crate::lattice::{component_report, double_coset_tags, pullback, DoubleCosetTag, PullbackComponent};
use crate::subgroup::LabeledCore;
use crate::union_find::UnionFind;
use crate::word::Letter;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HNProfile {
    #[serde(rename = "H")]
    pub h: usize,
    /// Run counts for `a` and `b`.
    pub n: [usize; 2],
    pub rank: usize,
    /// Core vertices, all of which are interior.
    pub interior: Vec<usize>,
    /// Missing label directions, one per stub.
    #[serde(skip)]
    pub stubs: Vec<(usize, Letter)>,
    /// Vertices still holding a checker.
    pub checkers: Vec<usize>,
    /// Removals for `b`-runs that found no checker on their own run.
    pub fallbacks: usize,
}

impl HNProfile {
    pub fn checker_count(&self) -> usize {
        self.checkers.len()
    }

    /// `H − (n₁ + n₂) + 1`.
    pub fn reconstructed_rank(&self) -> usize {
        self.h + 1 - self.n[0] - self.n[1]
    }
}

/// A maximal non-cyclic run of edges labeled by one generator.
struct Run {
    vertices: Vec<usize>,
}

impl Run {
    fn first(&self) -> usize {
        self.vertices[0]
    }

    fn smallest_end(&self) -> usize {
        self.first().min(*self.vertices.last().expect("runs are non-empty"))
    }
}

fn runs(core: &LabeledCore, g: usize) -> Vec<Run> {
    let out = Letter::new(g, false);
    let into = Letter::new(g, true);
    (0..core.n_vertices())
        .filter(|&v| core.step(v, into).is_none())
        .map(|v| {
            let mut vertices = vec![v];
            let mut at = v;
            while let Some(next) = core.step(at, out) {
                vertices.push(next);
                at = next;
            }
            Run { vertices }
        })
        .collect()
}

pub fn hn_profile(core: &LabeledCore) -> Result<HNProfile> {
    if core.ambient_rank() != 2 {
        return Err(Error::AmbientRankNotTwo(core.ambient_rank()));
    }
    if core.is_trivial() {
        return Err(Error::TrivialSubgroup);
    }
    let h = core.n_vertices();
    let stubs: Vec<(usize, Letter)> = (0..h)
        .flat_map(|v| (0..4).map(move |l| (v, Letter(l))))
        .filter(|&(v, l)| core.step(v, l).is_none())
        .collect();
    let a_runs = runs(core, 0);
    let mut b_runs = runs(core, 1);
    for (g, rs) in [&a_runs, &b_runs].into_iter().enumerate() {
        let count = stubs.iter().filter(|(_, l)| l.generator() == g).count();
        debug_assert_eq!(count, 2 * rs.len());
    }

    let mut checkered = vec![true; h];
    for r in &a_runs {
        checkered[r.first()] = false;
    }
    b_runs.sort_by_key(Run::smallest_end);
    let mut fallbacks = 0;
    for r in &b_runs {
        let on_run = r.vertices.iter().copied().filter(|&v| checkered[v]).min();
        let v = match on_run {
            Some(v) => v,
            None => {
                fallbacks += 1;
                (0..h).find(|&v| checkered[v]).ok_or_else(|| {
                    Error::InvalidCore("no checker left to remove".into())
                })?
            }
        };
        checkered[v] = false;
    }
    let checkers: Vec<usize> = (0..h).filter(|&v| checkered[v]).collect();
    let profile = HNProfile {
        h,
        n: [a_runs.len(), b_runs.len()],
        rank: core.rank(),
        interior: (0..h).collect(),
        stubs,
        checkers,
        fallbacks,
    };
    debug_assert_eq!(profile.checker_count() + 1, profile.rank);
    debug_assert_eq!(profile.reconstructed_rank(), profile.rank);
    Ok(profile)
}

/// `∏(rkⱼ − 1) + H₁H₂ − (H₁ − n₁ᵢ)(H₂ − n₂ᵢ)` for generator `i ∈ {1, 2}`.
pub fn hn_bound_rhs(p1: &HNProfile, p2: &HNProfile, i: usize) -> i64 {
    assert!(i == 1 || i == 2, "generator index must be 1 or 2");
    let rk = |p: &HNProfile| p.reconstructed_rank() as i64;
    let (h1, h2) = (p1.h as i64, p2.h as i64);
    let (m1, m2) = (p1.n[i - 1] as i64, p2.n[i - 1] as i64);
    (rk(p1) - 1) * (rk(p2) - 1) + h1 * h2 - (h1 - m1) * (h2 - m2)
}

/// Classical bounds `∏(rkⱼ − 1) + ε` on the reduced rank sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalBounds {
    pub neumann: i64,
    pub burns: i64,
    pub tardos: i64,
    pub dicks_formanek: i64,
}

impl ClassicalBounds {
    pub fn new(rk1: usize, rk2: usize) -> Self {
        let (r1, r2) = (rk1 as i64, rk2 as i64);
        let prod = (r1 - 1) * (r2 - 1);
        Self {
            neumann: prod + prod,
            burns: prod + ((r1 - 2) * (r2 - 1)).max((r1 - 1) * (r2 - 2)),
            tardos: prod + ((r1 - 2) * (r2 - 2) - 1).max(0),
            dicks_formanek: prod + (r1 - 3) * (r2 - 3),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HNBoundReport {
    pub p1: HNProfile,
    pub p2: HNProfile,
    pub lhs: i64,
    pub rhs1: i64,
    pub rhs2: i64,
    pub classical: ClassicalBounds,
    /// Name of the smallest bound, `theorem` when `min(rhs₁, rhs₂)` wins ties.
    pub tightest: &'static str,
    pub components: Vec<PullbackComponent>,
    pub tags: Vec<DoubleCosetTag>,
}

impl HNBoundReport {
    pub fn rhs(&self) -> i64 {
        self.rhs1.min(self.rhs2)
    }

    pub fn row(&self) -> HNBoundRow {
        HNBoundRow {
            rk1: self.p1.rank,
            rk2: self.p2.rank,
            h1: self.p1.h,
            h2: self.p2.h,
            n11: self.p1.n[0],
            n12: self.p1.n[1],
            n21: self.p2.n[0],
            n22: self.p2.n[1],
            lhs: self.lhs,
            rhs1: self.rhs1,
            rhs2: self.rhs2,
            neumann: self.classical.neumann,
            burns: self.classical.burns,
            tardos: self.classical.tardos,
            dicks_formanek: self.classical.dicks_formanek,
        }
    }
}

impl fmt::Display for HNBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.row();
        writeln!(f, "lhs={} rhs1={} rhs2={}", r.lhs, r.rhs1, r.rhs2)?;
        writeln!(
            f,
            "rk1={} rk2={} H1={} H2={} n11={} n12={} n21={} n22={}",
            r.rk1, r.rk2, r.h1, r.h2, r.n11, r.n12, r.n21, r.n22
        )?;
        writeln!(
            f,
            "neumann={} burns={} tardos={} dicks_formanek={}",
            r.neumann, r.burns, r.tardos, r.dicks_formanek
        )?;
        writeln!(f, "tightest={}", self.tightest)?;
        for c in &self.components {
            let g = self
                .tags
                .iter()
                .find(|t| t.component == c.id)
                .map_or_else(|| "-".to_string(), |t| t.g.to_string());
            writeln!(f, "component {} rank={} tree={} g={g}", c.id, c.rank, c.is_tree)?;
        }
        Ok(())
    }
}

/// One comparison row; field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HNBoundRow {
    pub rk1: usize,
    pub rk2: usize,
    #[serde(rename = "H1")]
    pub h1: usize,
    #[serde(rename = "H2")]
    pub h2: usize,
    pub n11: usize,
    pub n12: usize,
    pub n21: usize,
    pub n22: usize,
    pub lhs: i64,
    pub rhs1: i64,
    pub rhs2: i64,
    pub neumann: i64,
    pub burns: i64,
    pub tardos: i64,
    pub dicks_formanek: i64,
}

/// Writes rows as CSV with a header line.
pub fn write_csv<W: io::Write>(rows: &[HNBoundRow], out: W) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Compares the reduced rank sum of the pullback with the profile bound
/// and the classical ones. Fails if the profile bound is exceeded.
pub fn shn_report(c1: &LabeledCore, c2: &LabeledCore) -> Result<HNBoundReport> {
    let p1 = hn_profile(c1)?;
    let p2 = hn_profile(c2)?;
    let res = pullback(c1, c2)?;
    let tags = double_coset_tags(&res, c1, c2)?;
    let lhs = res.reduced_rank_sum();
    let rhs1 = hn_bound_rhs(&p1, &p2, 1);
    let rhs2 = hn_bound_rhs(&p1, &p2, 2);
    let rhs = rhs1.min(rhs2);
    if lhs > rhs {
        return Err(Error::BoundViolated { lhs, rhs });
    }
    let classical = ClassicalBounds::new(p1.rank, p2.rank);
    let candidates = [
        ("theorem", rhs),
        ("neumann", classical.neumann),
        ("burns", classical.burns),
        ("tardos", classical.tardos),
        ("dicks_formanek", classical.dicks_formanek),
    ];
    let tightest = candidates
        .iter()
        .min_by_key(|(_, v)| *v)
        .map(|(name, _)| *name)
        .expect("non-empty");
    debug_assert!(!component_report(&res, &tags).is_empty());
    Ok(HNBoundReport {
        p1,
        p2,
        lhs,
        rhs1,
        rhs2,
        classical,
        tightest,
        components: res.components,
        tags,
    })
}

/// Spanning tree taking arcs greedily from the highest index down.
fn reverse_greedy_tree(c: &Covering) -> Subgraph {
    let g = c.target();
    let mut uf = UnionFind::new(g.n_vertices());
    let arcs = (0..g.n_arcs())
        .rev()
        .filter(|&a| {
            let (s, t) = g.arc(a);
            uf.union(s, t).is_some()
        })
        .collect();
    Subgraph {
        vertices: (0..g.n_vertices()).collect(),
        arcs,
    }
}

/// Collapses a spanning tree of the target so that it becomes a rose,
/// then profiles the induced core. Two different trees are tried and must
/// agree on `(H, n₁, n₂)`.
pub fn excise_and_profile(c: &Covering) -> Result<HNProfile> {
    let target = c.target();
    let rank = target.rank()?;
    if rank != 2 {
        return Err(Error::AmbientRankNotTwo(rank));
    }
    let first = target.spanning_forest(&[])?.as_subgraph(target);
    let second = reverse_greedy_tree(c);
    let mut profiles = Vec::with_capacity(2);
    for tree in [first, second] {
        let ex = c.excise_trees(&tree)?;
        let core = LabeledCore::from_covering(&ex.covering)?;
        profiles.push(hn_profile(&core)?);
    }
    let (p, q) = (&profiles[0], &profiles[1]);
    if (p.h, p.n) != (q.h, q.n) {
        return Err(Error::InvalidCore(format!(
            "profile depends on the spanning tree: H={} n={:?} vs H={} n={:?}",
            p.h, p.n, q.h, q.n
        )));
    }
    Ok(profiles.swap_remove(0))
}

/// The core with an `a`-path through `k` vertices and a `b`-loop at each.
pub fn loop_family(k: usize) -> LabeledCore {
    assert!(k >= 1, "family starts at k = 1");
    let a = Letter::new(0, false);
    let b = Letter::new(1, false);
    let mut edges: Vec<_> = (0..k).map(|v| (v, b, v)).collect();
    edges.extend((1..k).map(|v| (v - 1, a, v)));
    LabeledCore::from_edges(2, k, 0, &edges).expect("family is a valid core")
}
