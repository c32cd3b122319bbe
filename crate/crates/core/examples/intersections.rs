//! Pullbacks of cores: intersections, joins and double coset tags.

use stallings::lattice::{component_report, double_coset_tags, intersect, join, pullback};
use stallings::{LabeledCore, Word};

fn core(gens: &str) -> stallings::Result<LabeledCore> {
    LabeledCore::from_words(2, &Word::parse_list(gens)?)
}

fn main() -> stallings::Result<()> {
    let a = core("a,bAB,bb")?;
    let b = core("b,abA,aa")?;
    let meet = intersect(&a, &b)?;
    println!("intersection: index {}, rank {}", meet.index(), meet.rank());
    let up = join(&core("aa")?, &core("baaB")?)?;
    println!("join of <aa> and <baaB>: rank {}", up.rank());

    let res = pullback(&a, &a)?;
    println!("self pullback: {} vertices, reduced rank sum {}", res.n_vertices(), res.reduced_rank_sum());
    let tags = double_coset_tags(&res, &a, &a)?;
    print!("{}", component_report(&res, &tags));
    Ok(())
}
