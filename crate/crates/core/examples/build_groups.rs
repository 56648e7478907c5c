//! Builds a few groups from specs and prints basic invariants.
use normgraph::{build, parse_spec};

fn main() -> normgraph::Result<()> {
    for s in ["C:12", "D:10", "Q:16", "S:4", "Mod16", "C3xQ8", "prod(S3,S3)"] {
        let g = build(&parse_spec(s)?)?;
        let involutions = g.elements().filter(|&x| g.ord(x) == 2).count();
        println!("{:<14} order {:>3}  abelian {:<5}  involutions {}", g.name(), g.order(), g.is_abelian(), involutions);
    }
    Ok(())
}
