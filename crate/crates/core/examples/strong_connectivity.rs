//! Strongly connected components and diameters of the graph without universal vertices.
use normgraph::analysis::Analysis;
use normgraph::{build, parse_spec};

fn main() -> normgraph::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "S4".into());
    let a = Analysis::new(build(&parse_spec(&spec)?)?);
    let g = a.group();
    let d = a.delta();
    let scc = a.delta_scc();
    println!("{}: {} vertices, {} arrows", g.name(), d.vertex_count(), d.edge_count());
    match scc.diameter {
        Some(diam) => {
            let (u, v, _) = d.diameter_witness()?;
            println!("strongly connected, diameter {diam}, e.g. {} -> {}", g.label(d.element(u)), g.label(d.element(v)));
        }
        None => {
            println!("{} components (|Fit| + 1 = {})", scc.count(), a.fitting().order() + 1);
            for (c, members) in scc.components.iter().enumerate() {
                let names: Vec<String> = members.iter().map(|&v| g.label(d.element(v))).collect();
                println!("  diameter {}: {}", scc.diameters[c], names.join(" "));
            }
        }
    }
    Ok(())
}
