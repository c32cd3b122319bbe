//! Subgroups of a free group as folded cores: membership, index,
//! bases, conjugates and the text format.

use stallings::{LabeledCore, Word};

fn main() -> stallings::Result<()> {
    let gens = Word::parse_list("a,bAB,bb")?;
    let h = LabeledCore::from_words(2, &gens)?;
    print!("{h}");
    println!("index {}", h.index());
    println!("rank {}", h.rank());
    for w in ["bab", "b", "abba", "1"] {
        let w: Word = w.parse()?;
        println!("contains {w}: {}", h.contains(&w)?);
    }
    let basis: Vec<String> = h.schreier_basis().iter().map(|w| w.to_string()).collect();
    println!("basis {}", basis.join(","));

    let cyclic = LabeledCore::from_words(2, &Word::parse_list("ab")?)?;
    println!("<ab>: index {}, {} vertices", cyclic.index(), cyclic.n_vertices());
    let conj = cyclic.conjugate(&"a".parse()?)?;
    println!("A<ab>a contains ba: {}", conj.contains(&"ba".parse()?)?);

    // Schreier graph of the action of a and b on three points
    let stabilizer = LabeledCore::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 0)?;
    println!("stabilizer: index {}, rank {}", stabilizer.index(), stabilizer.rank());
    Ok(())
}
