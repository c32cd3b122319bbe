//! Graphs as half-edge involutions: components, spanning trees, ranks,
//! spines and quotients.

use stallings::{Graph, Path, QuotientSpec, Subgraph};

fn main() -> stallings::Result<()> {
    let theta: Graph = "graph 2 3\narc 0 0 1\narc 1 0 1\narc 2 0 1\n".parse()?;
    println!("theta: {} vertices, {} edges", theta.n_vertices(), theta.n_edges());
    println!("components: {}", theta.components().len());
    println!("rank: {}", theta.rank()?);

    let forest = theta.spanning_forest(&[])?;
    println!("tree arcs {:?}, omitted {:?}", forest.arcs, forest.omitted);

    // collapsing a spanning tree leaves a rose of the same rank
    let q = theta.quotient(&QuotientSpec::new(vec![forest.as_subgraph(&theta)]))?;
    println!("quotient: {} vertex, rank {}", q.target().n_vertices(), q.target().rank()?);

    // spur deletion: e1 e2 inv(e2) inv(e1) reduces to the trivial path
    let p = Path::new(&theta, 0, vec![0, 3, 2, 1])?;
    println!("reduced path {:?} trivial={}", p.reduce().edges, p.reduce().is_trivial());

    // a loop with a hanging segment: the spine at the far end keeps the segment
    let lollipop = Graph::new(3, &[(0, 0), (0, 1), (1, 2)])?;
    let spine = lollipop.spine(2)?;
    println!("spine at 2: vertices {:?} arcs {:?}", spine.vertices, spine.arcs);
    let at_loop = lollipop.spine(0)?;
    println!("spine at 0: vertices {:?} arcs {:?}", at_loop.vertices, at_loop.arcs);

    let two = theta.disjoint_union(&Graph::rose(1));
    let h = two.rank_and_homology();
    println!("disjoint union: H0={} H1={} ranks={:?}", h.h0, h.h1, h.component_ranks);
    let wedge = theta.wedge(&Graph::rose(1), &[(0, 0)])?;
    println!("wedge with a circle: rank {}", wedge.rank()?);
    println!("single vertex is a tree: {}", Subgraph::vertex(0).is_tree(&theta));
    Ok(())
}
