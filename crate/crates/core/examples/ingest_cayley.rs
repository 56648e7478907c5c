//! Round trip through the Cayley JSON format.
use normgraph::analysis::Analysis;
use normgraph::builders::{export_cayley, parse_cayley_json};
use normgraph::report::{AnalysisReport, GraphKind};
use normgraph::{build, parse_spec};

fn main() -> normgraph::Result<()> {
    let g = build(&parse_spec("F20")?)?;
    let text = export_cayley(&g);
    println!("{} bytes of JSON", text.len());
    let h = parse_cayley_json(&text)?;
    let kinds = [GraphKind::Delta];
    let a = AnalysisReport::new(&Analysis::new(g), &kinds);
    let b = AnalysisReport::new(&Analysis::new(h), &kinds);
    println!("reports equal after round trip: {}", a == b);

    // a table that is not a group is rejected with the offending triple
    let bad = r#"{"name": "bad", "order": 3, "table": [[0,1,2],[1,0,2],[2,2,0]]}"#;
    match parse_cayley_json(bad) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
