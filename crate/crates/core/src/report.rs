//! Analysis reports shared by the command-line tool and the examples.

use std::borrow::Cow;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::analysis::Analysis;
use crate::classify::ClassificationFlags;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::norm_graph;

/// Which graph of a group to report on or export.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// Directed normalizing graph on all of `G`.
    Gamma,
    /// Directed normalizing graph on `G \ Univ(G)`.
    Delta,
    /// Undirected normalizing graph on `G`.
    UGamma,
    /// Undirected normalizing graph on `G \ Univ(G)`.
    UDelta,
    /// Nilpotent graph on `G \ Z_inf(G)`.
    Nil,
    /// Commuting graph on `G \ Z(G)`.
    Comm,
    /// Supersolubility graph on `G`.
    Ssol,
}

impl GraphKind {
    pub const ALL: [GraphKind; 7] = [
        GraphKind::Gamma,
        GraphKind::Delta,
        GraphKind::UGamma,
        GraphKind::UDelta,
        GraphKind::Nil,
        GraphKind::Comm,
        GraphKind::Ssol,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Gamma => "gamma",
            GraphKind::Delta => "delta",
            GraphKind::UGamma => "ugamma",
            GraphKind::UDelta => "udelta",
            GraphKind::Nil => "nil",
            GraphKind::Comm => "comm",
            GraphKind::Ssol => "ssol",
        }
    }

    pub fn is_directed(self) -> bool {
        matches!(self, GraphKind::Gamma | GraphKind::Delta)
    }
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown graph {s:?}; expected gamma|delta|ugamma|udelta|nil|comm|ssol")))
    }
}

impl std::fmt::Display for GraphKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

pub fn graph<'a>(a: &'a Analysis, kind: GraphKind) -> Cow<'a, Digraph> {
    match kind {
        GraphKind::Gamma => Cow::Borrowed(a.gamma()),
        GraphKind::Delta => Cow::Borrowed(a.delta()),
        GraphKind::UGamma => Cow::Owned(a.gamma().undirected()),
        GraphKind::UDelta => Cow::Owned(a.delta().undirected()),
        GraphKind::Nil => Cow::Borrowed(a.nilpotent_graph()),
        GraphKind::Comm => Cow::Owned(norm_graph::commuting_graph(a.group())),
        GraphKind::Ssol => Cow::Owned(norm_graph::supersolubility_graph(a.group())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupInfo {
    pub name: String,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sizes {
    pub center: usize,
    pub second_center: usize,
    pub univ: usize,
    pub univ_plus: usize,
    pub univ_minus: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub vertices: usize,
    /// Arrows for directed graphs, unordered pairs for the symmetric ones.
    pub edges: usize,
    pub complete_directed: bool,
    pub complete_undirected: bool,
    pub strongly_connected: bool,
    pub scc_count: usize,
    /// Component sizes, largest first.
    pub scc_sizes: Vec<usize>,
    /// Diameters aligned with `scc_sizes`.
    pub scc_diameters: Vec<usize>,
    /// Present only when strongly connected.
    pub diameter: Option<usize>,
}

impl GraphReport {
    pub fn new(d: &Digraph, directed: bool) -> Self {
        let scc = d.scc();
        let (scc_sizes, scc_diameters) = scc.sorted_summary().into_iter().unzip();
        let arcs = d.edge_count();
        GraphReport {
            vertices: d.vertex_count(),
            edges: if directed { arcs } else { arcs / 2 },
            complete_directed: d.is_complete(true),
            complete_undirected: d.is_complete(false),
            strongly_connected: scc.strongly_connected,
            scc_count: scc.count(),
            scc_sizes,
            scc_diameters,
            diameter: scc.diameter,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub group: GroupInfo,
    pub sizes: Sizes,
    pub univ_is_subgroup: bool,
    pub classification: ClassificationFlags,
    /// Keyed by graph selector name.
    pub graphs: std::collections::BTreeMap<String, GraphReport>,
}

impl AnalysisReport {
    pub fn new(a: &Analysis, kinds: &[GraphKind]) -> Self {
        let g = a.group();
        let u = a.univ();
        let s = a.series();
        let graphs = kinds
            .iter()
            .map(|&k| (k.name().to_string(), GraphReport::new(&graph(a, k), k.is_directed())))
            .collect();
        AnalysisReport {
            group: GroupInfo {
                name: g.name().to_string(),
                order: g.order(),
            },
            sizes: Sizes {
                center: s.center().order(),
                second_center: s.second_center().order(),
                univ: u.univ.len(),
                univ_plus: u.univ_plus.order(),
                univ_minus: u.univ_minus.len(),
            },
            univ_is_subgroup: u.is_univ_subgroup,
            classification: a.classification().flags(),
            graphs,
        }
    }

    /// JSON with keys sorted at every level.
    pub fn to_json_value(&self) -> Value {
        // serde_json's map is ordered by key unless `preserve_order` is enabled
        serde_json::to_value(self).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let c = &self.classification;
        let _ = writeln!(s, "group {} (order {})", self.group.name, self.group.order);
        let z = &self.sizes;
        let _ = writeln!(
            s,
            "  |Z| = {}, |Z2| = {}, |Univ| = {} ({}), |Univ+| = {}, |Univ-| = {}",
            z.center,
            z.second_center,
            z.univ,
            if self.univ_is_subgroup { "subgroup" } else { "not a subgroup" },
            z.univ_plus,
            z.univ_minus
        );
        let mut tags = Vec::new();
        for (flag, name) in [
            (c.abelian, "abelian"),
            (c.dedekind, "dedekind"),
            (c.nilpotent, "nilpotent"),
            (c.soluble, "soluble"),
            (c.a_group, "A-group"),
            (c.cyclic_by_abelian, "cyclic-by-abelian"),
            (c.trivial_center, "trivial center"),
            (c.fitting_prime_index, "prime Fitting index"),
            (c.involutions_commute, "involutions commute"),
        ] {
            if flag {
                tags.push(name.to_string());
            }
        }
        if let Some(k) = c.frobenius_kernel_order {
            tags.push(format!("Frobenius (|K| = {k})"));
        }
        if let Some([k, h, l]) = c.two_frobenius_orders {
            tags.push(format!("2-Frobenius (|K| = {k}, |H| = {h}, |L| = {l})"));
        }
        let _ = writeln!(s, "  {}", tags.join(", "));
        for (name, r) in &self.graphs {
            let _ = writeln!(s, "graph {name}: {} vertices, {} edges", r.vertices, r.edges);
            let _ = writeln!(
                s,
                "  complete: directed {}, undirected {}",
                r.complete_directed, r.complete_undirected
            );
            match r.diameter {
                Some(d) if r.strongly_connected => {
                    let _ = writeln!(s, "  strongly connected, diameter {d}");
                }
                _ => {
                    let _ = writeln!(
                        s,
                        "  {} strongly connected components, sizes {:?}, diameters {:?}",
                        r.scc_count, r.scc_sizes, r.scc_diameters
                    );
                }
            }
        }
        s
    }
}

/// Graphviz text for a graph of the group, vertices labelled by element names.
pub fn dot(a: &Analysis, kind: GraphKind) -> String {
    let g = a.group();
    let name = format!("{} {}", kind.name(), g.name());
    graph(a, kind).to_dot(&name, |x| g.label(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, parse_spec};

    fn report(s: &str, k: GraphKind) -> AnalysisReport {
        AnalysisReport::new(&Analysis::new(build(&parse_spec(s).unwrap()).unwrap()), &[k])
    }

    #[test]
    fn s4_delta_components() {
        let r = report("S4", GraphKind::Delta);
        let d = &r.graphs["delta"];
        assert_eq!(d.scc_count, 5);
        assert_eq!(d.scc_sizes, vec![15, 2, 2, 2, 2]);
        assert_eq!(d.diameter, None);
    }

    #[test]
    fn json_keys_sorted() {
        let j = report("S3", GraphKind::Gamma).to_json();
        let c = j.find("\"classification\"").unwrap();
        let g = j.find("\"graphs\"").unwrap();
        let u = j.find("\"univ_is_subgroup\"").unwrap();
        assert!(c < g && g < u);
    }

    #[test]
    fn selectors_round_trip() {
        for k in GraphKind::ALL {
            assert_eq!(k.name().parse::<GraphKind>().unwrap(), k);
        }
        assert!("bogus".parse::<GraphKind>().is_err());
    }

    #[test]
    fn s3_dot_has_five_nodes() {
        let a = Analysis::new(build(&parse_spec("S3").unwrap()).unwrap());
        let d = dot(&a, GraphKind::Delta);
        assert_eq!(d.matches("[label=").count(), 5);
        let u = dot(&a, GraphKind::UDelta);
        assert!(u.contains("dir=both"));
    }
}
