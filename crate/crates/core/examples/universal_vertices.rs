//! Universal vertices of the modular group of order 16.
use normgraph::norm_graph::univ_sets;
use normgraph::{build, parse_spec};

fn main() -> normgraph::Result<()> {
    let g = build(&parse_spec("Mod16")?)?;
    let u = univ_sets(&g);
    let names = |xs: Vec<usize>| xs.into_iter().map(|x| g.label(x)).collect::<Vec<_>>().join(", ");
    println!("Univ-  ({:>2}): {}", u.univ_minus.len(), names(u.univ_minus.to_vec()));
    println!("Univ+  ({:>2}): {}", u.univ_plus.order(), names(u.univ_plus.to_vec()));
    println!("Univ   ({:>2}): {}", u.univ.len(), names(u.univ.to_vec()));
    println!("Univ is a subgroup: {}", u.is_univ_subgroup);
    println!("Univ = Z: {}, Univ = Z2: {}", u.univ_equals_center, u.univ_equals_z2);
    Ok(())
}
