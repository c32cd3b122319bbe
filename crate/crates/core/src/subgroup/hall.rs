use super::{build, Folder, LabeledCore};
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

impl LabeledCore {
    /// Completes the core to a finite-index subgroup that still avoids
    /// every word in `avoid`.
    ///
    /// The partial lift of each avoid word is attached at the basepoint,
    /// then for each generator the vertices missing an outgoing edge are
    /// matched with those missing an incoming one, both in id order. A
    /// rotated matching is tried if the first one closes an avoid word.
    /// The original core stays a subgraph, so its Schreier basis extends
    /// to a basis of the result.
    pub fn hall_complete(&self, avoid: &[Word]) -> Result<LabeledCore> {
        let mut reduced = Vec::with_capacity(avoid.len());
        for w in avoid {
            if self.contains(w)? {
                return Err(Error::AlreadyContained(w.to_string()));
            }
            reduced.push(w.reduce());
        }
        let mut folder = Folder::from_table(self.rank, &self.table);
        for w in &reduced {
            folder.add_path(0, w);
        }
        let (table, ids) = folder.finish();
        let base = ids[0];

        let counts: Vec<usize> = (0..self.rank)
            .map(|g| table.iter().filter(|row| row[2 * g].is_none()).count())
            .collect();
        let mut rotation = vec![0; self.rank];
        loop {
            let candidate = complete_with(&table, self.rank, &rotation);
            let (core, _) = build(self.rank, &candidate, base);
            if reduced.iter().all(|w| core.read(0, w) != Some(0)) {
                return Ok(core);
            }
            // next rotation vector, odometer style
            let mut g = 0;
            loop {
                if g == self.rank {
                    unreachable!("some matching avoids every word");
                }
                rotation[g] += 1;
                if rotation[g] < counts[g].max(1) {
                    break;
                }
                rotation[g] = 0;
                g += 1;
            }
        }
    }
}

fn complete_with(table: &[Vec<Option<usize>>], rank: usize, rotation: &[usize]) -> Vec<Vec<Option<usize>>> {
    let mut table = table.to_vec();
    for g in 0..rank {
        let out = Letter::new(g, false).index();
        let into = Letter::new(g, true).index();
        let missing_out: Vec<usize> = (0..table.len()).filter(|&v| table[v][out].is_none()).collect();
        let missing_in: Vec<usize> = (0..table.len()).filter(|&v| table[v][into].is_none()).collect();
        let k = missing_out.len();
        for (i, &v) in missing_out.iter().enumerate() {
            let w = missing_in[(i + rotation[g]) % k];
            table[v][out] = Some(w);
            table[w][into] = Some(v);
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::Degree;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn core(r: usize, gens: &str) -> LabeledCore {
        LabeledCore::from_words(r, &Word::parse_list(gens).unwrap()).unwrap()
    }

    #[test]
    fn avoid_b_over_a() {
        let h = core(2, "a").hall_complete(&[w("b")]).unwrap();
        assert_eq!(h.index(), Degree::Finite(2));
        assert!(h.contains(&w("a")).unwrap());
        assert!(!h.contains(&w("b")).unwrap());
    }

    #[test]
    fn avoid_a_over_ab() {
        let h = core(2, "ab").hall_complete(&[w("a")]).unwrap();
        assert!(h.is_complete());
        assert!(h.contains(&w("ab")).unwrap());
        assert!(!h.contains(&w("a")).unwrap());
    }

    #[test]
    fn complete_input_is_unchanged() {
        let c = core(2, "a,bAB,bb");
        assert_eq!(c.hall_complete(&[]).unwrap(), c);
        assert_eq!(LabeledCore::trivial(2).hall_complete(&[]).unwrap(), LabeledCore::full(2));
    }

    #[test]
    fn contained_words_are_refused() {
        let c = core(2, "a");
        assert_eq!(c.hall_complete(&[w("aa")]), Err(Error::AlreadyContained("aa".into())));
        assert!(c.hall_complete(&[Word::identity()]).is_err());
    }

    #[test]
    fn original_basis_survives() {
        let c = core(2, "abA,bb");
        let h = c.hall_complete(&[w("b"), w("aab"), w("BAAB")]).unwrap();
        for g in c.schreier_basis() {
            assert!(h.contains(&g).unwrap());
        }
        for x in ["b", "aab", "BAAB"] {
            assert!(!h.contains(&w(x)).unwrap());
        }
    }
}
