//! Random words and cores for property checks and experiments.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::subgroup::LabeledCore;
use crate::word::{Letter, Word};

/// Uniform reduced word of length `len` over `rank` generators.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, rank: usize, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = Letter(rng.gen_range(0..2 * rank));
        if letters.last() != Some(&l.inverse()) {
            letters.push(l);
        }
    }
    Word::from_letters(letters)
}

/// `count` random reduced words with lengths in `1..=max_len`.
pub fn random_words<R: Rng + ?Sized>(rng: &mut R, rank: usize, count: usize, max_len: usize) -> Vec<Word> {
    (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            random_word(rng, rank, len)
        })
        .collect()
}

/// Non-trivial core over `rank` generators with at most `max_vertices`
/// vertices, folded from one to three random generators.
pub fn random_core<R: Rng + ?Sized>(rng: &mut R, rank: usize, max_vertices: usize) -> LabeledCore {
    loop {
        let count = rng.gen_range(1..=3);
        let gens = random_words(rng, rank, count, 8);
        let core = LabeledCore::from_words(rank, &gens).expect("rank is positive");
        if !core.is_trivial() && core.n_vertices() <= max_vertices {
            return core;
        }
    }
}

/// Complete core from random permutations of `0..n`, restricted to the
/// orbit of 0, so its index is at most `n`.
pub fn random_complete_core<R: Rng + ?Sized>(rng: &mut R, rank: usize, n: usize) -> LabeledCore {
    let perms: Vec<Vec<usize>> = (0..rank)
        .map(|_| {
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    LabeledCore::from_permutations(&perms, 0).expect("valid permutations")
}
