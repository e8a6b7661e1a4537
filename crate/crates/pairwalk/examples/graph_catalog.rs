//! Tour of the built-in graphs: sizes, degree sequences, and the arc tables
//! that define the walk's position-coin basis.

use pairwalk::graph::{build_arc_table, catalog, CATALOG_NAMES};

fn main() -> pairwalk::Result<()> {
    println!("{:<14} {:>4} {:>6} {:>5}  degree sequence", "graph", "n", "edges", "arcs");
    for name in CATALOG_NAMES {
        let g = catalog(name)?;
        let arcs = build_arc_table(&g);
        let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
        println!(
            "{:<14} {:>4} {:>6} {:>5}  {:?}",
            name,
            g.vertex_count(),
            g.edge_count(),
            arcs.arc_count(),
            degrees
        );
    }

    let g = catalog("q3-modified")?;
    println!("\nplain-text form of q3-modified:\n{}", g.to_text());

    let arcs = build_arc_table(&g);
    println!("first arcs and their reversals:");
    for a in 0..6 {
        let (tail, head) = arcs.arc(a);
        println!("  arc {a}: {tail} -> {head}, reverse = arc {}", arcs.reverse(a));
    }
    Ok(())
}
