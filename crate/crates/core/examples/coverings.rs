//! Coverings between finite graphs: checking, fibers, path lifting,
//! tree excision and balls in the universal cover.

use stallings::{check_covering, universal_ball, Cell, Graph, GraphMorphism, Path};

fn main() -> stallings::Result<()> {
    // the hexagon wraps twice around the triangle
    let hexagon = Graph::cycle(6);
    let triangle = Graph::cycle(3);
    let vertices: Vec<usize> = (0..6).map(|v| v % 3).collect();
    let edges: Vec<Cell> = (0..hexagon.n_edges())
        .map(|e| Cell::Edge(2 * ((e / 2) % 3) + e % 2))
        .collect();
    let map = GraphMorphism::new(hexagon, triangle.clone(), vertices, edges)?;
    let cover = check_covering(map, 0, 0).map_err(stallings::Error::NotCovering)?;
    println!("degree {}", cover.degree());
    println!("fiber over 1: {:?}", cover.fiber(1));

    // the loop around the triangle lifts to an open path
    let around = Path::new(&triangle, 0, vec![0, 2, 4])?;
    let lift = cover.lift_path(&around, 0)?;
    println!("lift ends at {} (complete={})", lift.path.end(cover.source()), lift.is_complete());

    // excise a spanning tree of the target: the circle becomes a single loop
    let tree = triangle.spanning_forest(&[])?.as_subgraph(&triangle);
    let ex = cover.excise_trees(&tree)?;
    println!(
        "after excision: {} -> {} vertices, degree {}",
        ex.covering.source().n_vertices(),
        ex.covering.target().n_vertices(),
        ex.covering.degree()
    );

    // the universal cover of the rose of rank two, radius 2
    let ball = universal_ball(&Graph::rose(2), 0, 2)?;
    println!(
        "ball: {} vertices, {} on the boundary",
        ball.graph.n_vertices(),
        ball.boundary.len()
    );
    println!("{}", cover.map());
    Ok(())
}
