/// Disjoint sets where the smaller index always becomes the root.
///
/// Folding and forest construction both rely on the root of a class being
/// its minimum element, which keeps their output independent of merge order.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn push(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        id
    }

    pub(crate) fn find(&mut self, mut node: usize) -> usize {
        let mut root = node;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[node] != root {
            let next = self.parent[node];
            self.parent[node] = root;
            node = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; returns `(kept_root, absorbed_root)`
    /// or `None` if they were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let a = self.find(a);
        let b = self.find(b);
        if a == b {
            return None;
        }
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        self.parent[gone] = keep;
        Some((keep, gone))
    }

    pub(crate) fn is_root(&self, node: usize) -> bool {
        self.parent[node] == node
    }
}
