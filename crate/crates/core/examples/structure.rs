//! Series, Fitting subgroup and normal subgroups of a group.
use normgraph::analysis::Analysis;
use normgraph::{build, parse_spec};

fn main() -> normgraph::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "TwoFrob294".into());
    let a = Analysis::new(build(&parse_spec(&spec)?)?);
    let s = a.series();
    let orders = |v: &[normgraph::Subgroup]| v.iter().map(|h| h.order()).collect::<Vec<_>>();
    println!("{} (order {})", a.group().name(), a.group().order());
    println!("upper central series: {:?}", orders(&s.upper_central));
    println!("lower central series: {:?}", orders(&s.lower_central));
    println!("derived series:       {:?}", orders(&s.derived));
    println!("Fitting subgroup:     {}", a.fitting().order());
    let mut normals: Vec<usize> = a.lattice().iter().map(|h| h.order()).collect();
    normals.sort_unstable();
    println!("normal subgroups:     {normals:?}");
    println!("direct decompositions: {}", a.decompositions().len());
    Ok(())
}
