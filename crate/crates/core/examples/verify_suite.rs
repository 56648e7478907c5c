//! Runs the statement registry over a handful of groups.
use normgraph::analysis::Analysis;
use normgraph::verify::{registry, run_suite, SuiteConfig};
use normgraph::{build, parse_spec};

fn main() -> normgraph::Result<()> {
    let groups = ["S4", "F21", "prod(S3,S3)", "Mod16", "TwoFrob294"]
        .iter()
        .map(|s| Ok(Analysis::new(build(&parse_spec(s)?)?)))
        .collect::<normgraph::Result<Vec<_>>>()?;
    let report = run_suite(&registry(), &groups, &SuiteConfig::default());
    for r in report.results.iter().filter(|r| r.verdict != normgraph::verify::Verdict::NotApplicable) {
        println!("{:<5} {:<34} {:<12} {}", r.verdict.as_str(), r.check, r.group, r.witness);
    }
    println!("{:?}", report.summary);
    Ok(())
}
