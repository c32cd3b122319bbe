//! Deck groups and the lattice of intermediate coverings of a regular core.

use stallings::LabeledCore;

fn main() -> stallings::Result<()> {
    // Cayley graph of the Klein four-group
    let klein = LabeledCore::from_permutations(&[vec![1, 0, 3, 2], vec![2, 3, 0, 1]], 0)?;
    println!("galois: {}", klein.is_galois()?);
    let lattice = klein.intermediate_lattice(2)?;
    lattice.verify()?;
    for (i, class) in lattice.classes().iter().enumerate() {
        let covers: Vec<usize> = (0..lattice.len()).filter(|&j| j != i && lattice.le(i, j)).collect();
        println!(
            "class {i}: degree {} fixed by {:?}, covered by {:?}",
            class.degree, class.subgroup, covers
        );
    }
    println!("meet(1,2) = {:?}, join(1,2) = {:?}", lattice.meet(1, 2), lattice.join(1, 2));

    // the stabilizer of a point under S3 is not normal
    let stab = LabeledCore::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]], 0)?;
    println!("stabilizer galois: {}, deck order {}", stab.is_galois()?, stab.deck_group()?.order());
    Ok(())
}
