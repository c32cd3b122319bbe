//! Stallings folding over a union-find.

use std::collections::VecDeque;

use crate::union_find::UnionFind;
use crate::word::{Letter, Word};

/// Labeled graph under construction. Edges are added freely; [`Folder::fold`]
/// identifies vertices until no vertex has two edges with the same label.
///
/// Table entries may hold absorbed vertex ids; they are resolved through
/// the union-find on read.
pub(crate) struct Folder {
    n_letters: usize,
    uf: UnionFind,
    table: Vec<Vec<Option<usize>>>,
    pending: VecDeque<(usize, usize)>,
}

impl Folder {
    pub(crate) fn new(rank: usize) -> Self {
        Self {
            n_letters: 2 * rank,
            uf: UnionFind::new(0),
            table: Vec::new(),
            pending: VecDeque::new(),
        }
    }

    /// Starts from an already folded transition table.
    pub(crate) fn from_table(rank: usize, table: &[Vec<Option<usize>>]) -> Self {
        Self {
            n_letters: 2 * rank,
            uf: UnionFind::new(table.len()),
            table: table.to_vec(),
            pending: VecDeque::new(),
        }
    }

    pub(crate) fn add_vertex(&mut self) -> usize {
        self.table.push(vec![None; self.n_letters]);
        self.uf.push()
    }

    fn set_half(&mut self, x: usize, letter: Letter, y: usize) {
        match self.table[x][letter.index()] {
            Some(z) => self.pending.push_back((z, y)),
            None => self.table[x][letter.index()] = Some(y),
        }
    }

    pub(crate) fn add_edge(&mut self, x: usize, letter: Letter, y: usize) {
        let x = self.uf.find(x);
        let y = self.uf.find(y);
        self.set_half(x, letter, y);
        self.set_half(y, letter.inverse(), x);
    }

    /// Adds a fresh path spelling `word` from `from`; returns its end.
    pub(crate) fn add_path(&mut self, from: usize, word: &Word) -> usize {
        let mut at = from;
        for &l in word.letters() {
            let next = self.add_vertex();
            self.add_edge(at, l, next);
            at = next;
        }
        at
    }

    /// Adds a closed path at `base` spelling a non-empty `word`.
    pub(crate) fn add_loop(&mut self, base: usize, word: &Word) {
        let letters = word.letters();
        let mut at = base;
        for (i, &l) in letters.iter().enumerate() {
            let next = if i + 1 == letters.len() {
                base
            } else {
                self.add_vertex()
            };
            self.add_edge(at, l, next);
            at = next;
        }
    }

    pub(crate) fn fold(&mut self) {
        while let Some((a, b)) = self.pending.pop_front() {
            let Some((keep, gone)) = self.uf.union(a, b) else {
                continue;
            };
            for i in 0..self.n_letters {
                if let Some(t) = self.table[gone][i].take() {
                    self.set_half(keep, Letter(i), t);
                }
            }
        }
    }

    /// Folds, then returns the compacted table of surviving vertices and
    /// the compact id of every original vertex.
    pub(crate) fn finish(mut self) -> (Vec<Vec<Option<usize>>>, Vec<usize>) {
        self.fold();
        let n = self.table.len();
        let mut compact = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            if self.uf.is_root(x) {
                compact[x] = next;
                next += 1;
            }
        }
        let mut table = vec![vec![None; self.n_letters]; next];
        for x in 0..n {
            if !self.uf.is_root(x) {
                continue;
            }
            for i in 0..self.n_letters {
                if let Some(t) = self.table[x][i] {
                    let t = self.uf.find(t);
                    table[compact[x]][i] = Some(compact[t]);
                }
            }
        }
        let ids = (0..n).map(|x| compact[self.uf.find(x)]).collect();
        (table, ids)
    }
}
