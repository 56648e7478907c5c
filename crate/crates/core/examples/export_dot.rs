//! Prints the graph of S3 without universal vertices in Graphviz format.
use normgraph::analysis::Analysis;
use normgraph::report::{dot, GraphKind};
use normgraph::{build, parse_spec};

fn main() -> normgraph::Result<()> {
    let a = Analysis::new(build(&parse_spec("S3")?)?);
    print!("{}", dot(&a, GraphKind::Delta));
    print!("{}", dot(&a, GraphKind::UDelta));
    Ok(())
}
