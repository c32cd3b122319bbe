//! Deck transformations, Galois tests and the lattice of intermediate
//! coverings of a finite Galois core.

use std::collections::{BTreeSet, VecDeque};

use super::{build, LabeledCore};
use crate::covering::{check_covering, Cell, Covering, Degree, GraphMorphism};
use crate::error::{Error, Result};
use crate::lattice;

/// Largest deck group whose subgroups are enumerated.
pub const MAX_LATTICE_ORDER: usize = 24;

/// Label-preserving automorphisms of a complete core.
///
/// Element `i` is the unique automorphism sending the basepoint to vertex
/// `elements[i][0]`; elements are sorted by that image, so element 0 is the
/// identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeckGroup {
    elements: Vec<Vec<usize>>,
    by_image: Vec<Option<usize>>,
}

impl DeckGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<usize>] {
        &self.elements
    }

    /// Vertex permutation of element `i`.
    pub fn element(&self, i: usize) -> &[usize] {
        &self.elements[i]
    }

    /// The element sending the basepoint to `v`.
    pub fn element_at(&self, v: usize) -> Option<usize> {
        self.by_image.get(v).copied().flatten()
    }

    /// Index of `i ∘ j`.
    pub fn product(&self, i: usize, j: usize) -> usize {
        let image = self.elements[i][self.elements[j][0]];
        self.by_image[image].expect("deck group is closed")
    }

    pub fn inverse(&self, i: usize) -> usize {
        let pos = self.elements[i]
            .iter()
            .position(|&v| v == 0)
            .expect("deck elements are bijections");
        self.by_image[pos].expect("deck group is closed")
    }

    fn mult_table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|i| (0..n).map(|j| self.product(i, j)).collect()).collect()
    }
}

/// The automorphism sending the basepoint to `w`, if one exists.
fn propagate(core: &LabeledCore, w: usize) -> Option<Vec<usize>> {
    let n = core.n_vertices();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[0] = w;
    used[w] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (l, &t) in core.table[x].iter().enumerate() {
            let y = t?;
            let image = core.table[map[x]][l]?;
            if map[y] == usize::MAX {
                if used[image] {
                    return None;
                }
                map[y] = image;
                used[image] = true;
                queue.push_back(y);
            } else if map[y] != image {
                return None;
            }
        }
    }
    Some(map)
}

impl LabeledCore {
    /// All label-preserving automorphisms of a complete core.
    pub fn deck_group(&self) -> Result<DeckGroup> {
        if !self.is_complete() {
            return Err(Error::IncompleteCore);
        }
        let n = self.n_vertices();
        let mut elements = Vec::new();
        let mut by_image = vec![None; n];
        for w in 0..n {
            if let Some(map) = propagate(self, w) {
                debug_assert!(w == 0 || map.iter().enumerate().all(|(x, &y)| x != y));
                by_image[w] = Some(elements.len());
                elements.push(map);
            }
        }
        Ok(DeckGroup { elements, by_image })
    }

    /// Whether the subgroup is normal.
    ///
    /// Complete cores are Galois exactly when the deck group acts
    /// transitively. An incomplete core is Galois only if it is trivial,
    /// since a non-trivial finitely generated normal subgroup of a
    /// non-abelian free group has finite index.
    pub fn is_galois(&self) -> Result<bool> {
        if self.is_complete() {
            return Ok(self.deck_group()?.order() == self.n_vertices());
        }
        if self.is_trivial() {
            return Ok(true);
        }
        if self.ambient_rank() >= 2 {
            return Ok(false);
        }
        Err(Error::GaloisUndecided)
    }

    /// Quotient of a complete core by the deck elements `subgroup`.
    pub fn quotient_by_deck(&self, deck: &DeckGroup, subgroup: &[usize]) -> Result<DeckQuotient> {
        check_subgroup(deck, subgroup)?;
        let n = self.n_vertices();
        let orbit: Vec<usize> = (0..n)
            .map(|x| subgroup.iter().map(|&h| deck.elements[h][x]).min().expect("non-empty"))
            .collect();
        let reps: Vec<usize> = (0..n).filter(|&x| orbit[x] == x).collect();
        let mut rid = vec![usize::MAX; n];
        for (i, &r) in reps.iter().enumerate() {
            rid[r] = i;
        }
        let table: Vec<Vec<Option<usize>>> = reps
            .iter()
            .map(|&r| {
                self.table[r]
                    .iter()
                    .map(|t| t.map(|y| rid[orbit[y]]))
                    .collect()
            })
            .collect();
        let (core, ids) = build(self.rank, &table, rid[orbit[0]]);
        let vertex_map: Vec<usize> = (0..n)
            .map(|x| ids[rid[orbit[x]]].expect("quotient of a complete core is complete"))
            .collect();

        let top = self.to_labeled_graph();
        let bottom = core.to_labeled_graph();
        let edge_map = (0..top.graph.n_edges())
            .map(|e| {
                let v = vertex_map[top.graph.start(e)];
                Cell::Edge(bottom.edge_at[v][top.labels[e].index()].expect("complete"))
            })
            .collect();
        let m = GraphMorphism::new(top.graph, bottom.graph, vertex_map, edge_map)?;
        let quotient = check_covering(m, 0, 0).map_err(Error::NotCovering)?;
        let to_base = core.covering()?;
        Ok(DeckQuotient {
            core,
            quotient,
            to_base,
        })
    }

    /// Every intermediate covering between this Galois core and the rose,
    /// one class per subgroup of the deck group. `jobs > 1` computes the
    /// quotients on that many threads.
    pub fn intermediate_lattice(&self, jobs: usize) -> Result<IntermediateLattice> {
        let deck = self.deck_group()?;
        if deck.order() != self.n_vertices() {
            return Err(Error::NotGalois);
        }
        let order = deck.order();
        if order > MAX_LATTICE_ORDER {
            return Err(Error::TooLarge {
                order,
                limit: MAX_LATTICE_ORDER,
            });
        }
        let mult = deck.mult_table();
        let mut masks = enumerate_subgroups(&mult);
        masks.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
        let subgroups: Vec<Vec<usize>> = masks.iter().map(|&m| members(m)).collect();

        let quotients: Vec<Result<DeckQuotient>> = if jobs > 1 && subgroups.len() > 1 {
            let chunk = subgroups.len().div_ceil(jobs);
            std::thread::scope(|s| {
                let handles: Vec<_> = subgroups
                    .chunks(chunk)
                    .map(|part| {
                        let deck = &deck;
                        s.spawn(move || {
                            part.iter()
                                .map(|h| self.quotient_by_deck(deck, h))
                                .collect::<Vec<_>>()
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .flat_map(|h| h.join().expect("worker panicked"))
                    .collect()
            })
        } else {
            subgroups.iter().map(|h| self.quotient_by_deck(&deck, h)).collect()
        };

        let mut classes = Vec::with_capacity(subgroups.len());
        for (subgroup, q) in subgroups.into_iter().zip(quotients) {
            let q = q?;
            classes.push(LatticeClass {
                degree: q.core.n_vertices(),
                subgroup,
                core: q.core,
                quotient: q.quotient,
                to_base: q.to_base,
            });
        }

        let k = classes.len();
        let mut le = vec![vec![false; k]; k];
        for i in 0..k {
            for j in 0..k {
                le[i][j] = classes[j].to_base.factor_through(&classes[i].to_base)?.is_some();
            }
        }
        let lattice = IntermediateLattice {
            deck,
            masks,
            classes,
            le,
        };
        lattice.verify()?;
        Ok(lattice)
    }
}

fn check_subgroup(deck: &DeckGroup, subgroup: &[usize]) -> Result<()> {
    let set: BTreeSet<usize> = subgroup.iter().copied().collect();
    if set.is_empty() || set.len() != subgroup.len() || set.iter().any(|&h| h >= deck.order()) {
        return Err(Error::NotASubgroup);
    }
    for &a in &set {
        for &b in &set {
            if !set.contains(&deck.product(a, b)) {
                return Err(Error::NotASubgroup);
            }
        }
    }
    Ok(())
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

fn closure(mult: &[Vec<usize>], mut mask: u32) -> u32 {
    loop {
        let mut next = mask;
        for a in members(mask) {
            for b in members(mask) {
                next |= 1 << mult[a][b];
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

/// All subgroups, as bitmasks, by adding one element at a time.
fn enumerate_subgroups(mult: &[Vec<usize>]) -> Vec<u32> {
    let n = mult.len();
    let mut seen = BTreeSet::from([1u32]);
    let mut queue = VecDeque::from([1u32]);
    while let Some(s) = queue.pop_front() {
        for g in 0..n {
            if s >> g & 1 == 0 {
                let t = closure(mult, s | 1 << g);
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// A quotient by deck transformations and its two coverings.
#[derive(Clone, Debug)]
pub struct DeckQuotient {
    pub core: LabeledCore,
    /// From the original core onto the quotient.
    pub quotient: Covering,
    /// From the quotient onto the rose.
    pub to_base: Covering,
}

#[derive(Clone, Debug)]
pub struct LatticeClass {
    /// Deck elements fixing this class.
    pub subgroup: Vec<usize>,
    pub core: LabeledCore,
    /// Degree over the rose, the index of `subgroup` in the deck group.
    pub degree: usize,
    pub quotient: Covering,
    pub to_base: Covering,
}

/// Intermediate coverings ordered by covering: `i ≤ j` when class `j`
/// covers class `i`. Class 0 is the rose, the last class the top core.
#[derive(Clone, Debug)]
pub struct IntermediateLattice {
    deck: DeckGroup,
    masks: Vec<u32>,
    classes: Vec<LatticeClass>,
    le: Vec<Vec<bool>>,
}

impl IntermediateLattice {
    pub fn deck(&self) -> &DeckGroup {
        &self.deck
    }

    pub fn classes(&self) -> &[LatticeClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class `j` covers class `i`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    fn class_of(&self, mask: u32) -> usize {
        self.masks.iter().position(|&m| m == mask).expect("every subgroup has a class")
    }

    /// Greatest lower bound in the covering order.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len()).filter(|&m| self.le[m][i] && self.le[m][j]).collect();
        lower.iter().copied().find(|&m| lower.iter().all(|&l| self.le[l][m]))
    }

    /// Least upper bound in the covering order.
    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len()).filter(|&m| self.le[i][m] && self.le[j][m]).collect();
        upper.iter().copied().find(|&m| upper.iter().all(|&u| self.le[m][u]))
    }

    /// Checks the anti-isomorphism with the subgroup lattice of the deck
    /// group, the meet and join dictionary, degrees, and that the deck
    /// group of each quotient map recovers its subgroup.
    pub fn verify(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::LatticeCheck(msg));
        let order = self.deck.order();
        let mult = self.deck.mult_table();
        let k = self.len();
        for (i, c) in self.classes.iter().enumerate() {
            if c.degree * c.subgroup.len() != order {
                return fail(format!("class {i}: degree {} is not [G:H]", c.degree));
            }
            if c.quotient.degree() != Degree::Finite(c.subgroup.len()) {
                return fail(format!("class {i}: quotient map has the wrong degree"));
            }
            let q = c.quotient.map();
            let fixing: Vec<usize> = (0..order)
                .filter(|&g| {
                    let e = self.deck.element(g);
                    (0..e.len()).all(|x| q.vertex(e[x]) == q.vertex(x))
                })
                .collect();
            if fixing != c.subgroup {
                return fail(format!("class {i}: deck group of the quotient map differs"));
            }
            for j in 0..i {
                if self.classes[j].core == c.core {
                    return fail(format!("classes {j} and {i} coincide"));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                let (a, b) = (self.masks[i], self.masks[j]);
                if self.le[i][j] != (b & !a == 0) {
                    return fail(format!("order between {i} and {j} is not inclusion-reversing"));
                }
                let up = self.class_of(closure(&mult, a | b));
                let down = self.class_of(a & b);
                if self.meet(i, j) != Some(up) || self.join(i, j) != Some(down) {
                    return fail(format!("meet or join of {i} and {j} is wrong"));
                }
                let (ci, cj) = (&self.classes[i].core, &self.classes[j].core);
                if lattice::join(ci, cj)? != self.classes[up].core {
                    return fail(format!("pushout of {i} and {j} is not their meet"));
                }
                if lattice::intersect(ci, cj)? != self.classes[down].core {
                    return fail(format!("pullback of {i} and {j} is not their join"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn core(r: usize, gens: &str) -> LabeledCore {
        LabeledCore::from_words(r, &Word::parse_list(gens).unwrap()).unwrap()
    }

    /// Cayley graph of `a ↦ (1,0)`, `b ↦ (0,1)` in ℤ/2×ℤ/2.
    fn klein() -> LabeledCore {
        LabeledCore::from_permutations(&[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], 0).unwrap()
    }

    fn stabilizer() -> LabeledCore {
        LabeledCore::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 0).unwrap()
    }

    #[test]
    fn deck_groups() {
        assert_eq!(LabeledCore::full(2).deck_group().unwrap().order(), 1);
        let d = core(2, "a,bAB,bb").deck_group().unwrap();
        assert_eq!(d.order(), 2);
        assert_eq!(d.element(1), &[1, 0]);
        assert_eq!(stabilizer().deck_group().unwrap().order(), 1);
        assert_eq!(core(2, "a").deck_group().unwrap_err(), Error::IncompleteCore);
        let k = klein().deck_group().unwrap();
        assert_eq!(k.order(), 4);
        for i in 0..4 {
            assert_eq!(k.product(i, k.inverse(i)), 0);
            assert_eq!(k.product(i, i), 0);
        }
    }

    #[test]
    fn galois_tests() {
        assert!(core(2, "a,bAB,bb").is_galois().unwrap());
        assert!(!stabilizer().is_galois().unwrap());
        assert!(klein().is_galois().unwrap());
        assert!(LabeledCore::trivial(2).is_galois().unwrap());
        assert!(!core(2, "a").is_galois().unwrap());
    }

    #[test]
    fn quotients() {
        let k = klein();
        let d = k.deck_group().unwrap();
        let same = k.quotient_by_deck(&d, &[0]).unwrap();
        assert_eq!(same.core, k);
        let rose = k.quotient_by_deck(&d, &[0, 1, 2, 3]).unwrap();
        assert_eq!(rose.core, LabeledCore::full(2));
        let mid = k.quotient_by_deck(&d, &[0, 1]).unwrap();
        assert_eq!(mid.core.index(), Degree::Finite(2));
        assert_eq!(mid.quotient.degree(), Degree::Finite(2));
        assert_eq!(k.quotient_by_deck(&d, &[1]).unwrap_err(), Error::NotASubgroup);
        assert_eq!(k.quotient_by_deck(&d, &[0, 1, 2]).unwrap_err(), Error::NotASubgroup);
    }

    #[test]
    fn lattices() {
        let two = core(2, "a,bAB,bb").intermediate_lattice(1).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.le(0, 1) && !two.le(1, 0));

        let k = klein().intermediate_lattice(1).unwrap();
        assert_eq!(k.len(), 5);
        let degrees: Vec<usize> = k.classes().iter().map(|c| c.degree).collect();
        assert_eq!(degrees, vec![1, 2, 2, 2, 4]);
        assert_eq!(k.meet(1, 2), Some(0));
        assert_eq!(k.join(1, 2), Some(4));
        let parallel = klein().intermediate_lattice(3).unwrap();
        let a: Vec<_> = k.classes().iter().map(|c| &c.core).collect();
        let b: Vec<_> = parallel.classes().iter().map(|c| &c.core).collect();
        assert_eq!(a, b);

        let z3 = LabeledCore::from_permutations(&[vec![1, 2, 0], vec![0, 1, 2]], 0).unwrap();
        assert_eq!(z3.intermediate_lattice(1).unwrap().len(), 2);
        assert_eq!(stabilizer().intermediate_lattice(1).unwrap_err(), Error::NotGalois);
    }
}
