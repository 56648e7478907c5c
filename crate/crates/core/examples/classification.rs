//! Classifier flags for the catalog's soluble groups with trivial center.
use normgraph::analysis::Analysis;
use normgraph::builders::{build, catalog};

fn main() -> normgraph::Result<()> {
    for spec in catalog() {
        let a = Analysis::new(build(&spec)?);
        let c = a.classification();
        if !(c.soluble && c.trivial_center && a.group().order() > 1) {
            continue;
        }
        let kind = if let Some(f) = &c.frobenius {
            format!("Frobenius, |K| = {}, |H| = {}", f.kernel.order(), f.complement.order())
        } else if let Some(t) = &c.two_frobenius {
            format!(
                "2-Frobenius, |K| = {}, |H| = {}, |L| = {}, p !| r-1: {:?}",
                t.k.order(),
                t.h.order(),
                t.l.order(),
                c.p_r_condition
            )
        } else {
            "neither".into()
        };
        println!("{:<14} {:<50} strongly connected: {}", spec.to_string(), kind, a.delta_scc().strongly_connected);
    }
    Ok(())
}
