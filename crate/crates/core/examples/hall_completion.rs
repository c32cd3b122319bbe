//! Extends a finitely generated subgroup to a finite-index one that still
//! avoids a chosen finite set of words.

use stallings::{LabeledCore, Word};

fn main() -> stallings::Result<()> {
    let h = LabeledCore::from_words(2, &Word::parse_list("aba,bb")?)?;
    let avoid = Word::parse_list("a,b,ab,abab")?;
    let g = h.hall_complete(&avoid)?;
    print!("{g}");
    println!("index {}", g.index());
    for w in Word::parse_list("aba,bb")? {
        println!("keeps {w}: {}", g.contains(&w)?);
    }
    for w in &avoid {
        println!("avoids {w}: {}", !g.contains(w)?);
    }
    // a word already in the subgroup cannot be avoided
    match h.hall_complete(&Word::parse_list("bbbb")?) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("error: {e}"),
    }
    Ok(())
}
