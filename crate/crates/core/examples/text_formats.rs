//! Round trips through the graph, core and morphism text formats and DOT.

use stallings::{Covering, Graph, GraphMorphism, LabeledCore, Word};

fn main() -> stallings::Result<()> {
    let theta: Graph = "graph 2 3\narc 0 0 1\narc 1 0 1\narc 2 0 1\n".parse()?;
    print!("{theta}");

    let core = LabeledCore::from_words(2, &Word::parse_list("abA,bb")?)?;
    let text = core.to_string();
    print!("{text}");
    let back: LabeledCore = text.parse()?;
    println!("core roundtrip: {}", back == core);

    let id = Covering::identity(&theta, 0)?;
    let m = id.map().to_string();
    print!("{m}");
    let parsed: GraphMorphism = m.parse()?;
    println!("morphism roundtrip: {}", &parsed == id.map());

    print!("{}", core.to_dot());
    Ok(())
}
