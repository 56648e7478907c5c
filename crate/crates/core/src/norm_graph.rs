//! The arrow relation `x -> y` (`<x>` normal in `<x, y>`), neighbourhoods,
//! universal vertices and the graphs built from them.

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::digraph::Digraph;
use crate::group::{Group, Subgroup};
use crate::structure;

/// `N_G(<x>)` for every element, computed once per cyclic subgroup.
#[derive(Clone, Debug)]
pub struct NormalizerTable {
    cyclic_id: Vec<usize>,
    cyclics: Vec<Subgroup>,
    normalizers: Vec<Subgroup>,
}

impl NormalizerTable {
    pub fn new(g: &Group) -> Self {
        let n = g.order();
        let mut ids: HashMap<BitSet, usize> = HashMap::new();
        let mut cyclic_id = vec![0; n];
        let mut cyclics = Vec::new();
        let mut normalizers = Vec::new();
        for x in g.elements() {
            let c = g.cyclic(x);
            let next = cyclics.len();
            let id = *ids.entry(c.members().clone()).or_insert(next);
            if id == next {
                normalizers.push(g.cyclic_normalizer_with(x, &c));
                cyclics.push(c);
            }
            cyclic_id[x] = id;
        }
        NormalizerTable {
            cyclic_id,
            cyclics,
            normalizers,
        }
    }

    /// `<x>`.
    pub fn cyclic(&self, x: usize) -> &Subgroup {
        &self.cyclics[self.cyclic_id[x]]
    }

    /// `N^+(x) = N_G(<x>)`.
    pub fn normalizer(&self, x: usize) -> &Subgroup {
        &self.normalizers[self.cyclic_id[x]]
    }

    /// Index of `<x>` among the distinct cyclic subgroups.
    pub fn cyclic_index(&self, x: usize) -> usize {
        self.cyclic_id[x]
    }

    pub fn cyclic_subgroups(&self) -> &[Subgroup] {
        &self.cyclics
    }

    pub fn arrow(&self, x: usize, y: usize) -> bool {
        self.normalizer(x).contains(y)
    }

    /// `N^-(x) = { y : y -> x }`.
    pub fn n_minus(&self, x: usize) -> BitSet {
        let n = self.cyclic_id.len();
        BitSet::from_indices(n, (0..n).filter(|&y| self.arrow(y, x)))
    }
}

/// `x -> y`: `y` normalizes `<x>`. True when `x == y`.
pub fn arrow(g: &Group, x: usize, y: usize) -> bool {
    let c = g.cyclic(x);
    c.contains(g.conj(x, y))
}

pub fn n_plus(g: &Group, x: usize) -> Subgroup {
    g.cyclic_normalizer(x)
}

pub fn n_minus(g: &Group, x: usize) -> BitSet {
    BitSet::from_indices(g.order(), g.elements().filter(|&y| arrow(g, y, x)))
}

/// The universal-vertex sets of a group.
#[derive(Clone, Debug)]
pub struct UnivReport {
    /// `{ a : <a> normal in G }`.
    pub univ_minus: BitSet,
    /// The Baer norm, the intersection of all `N_G(<a>)`.
    pub univ_plus: Subgroup,
    pub univ: BitSet,
    pub is_univ_subgroup: bool,
    pub univ_equals_center: bool,
    pub univ_equals_z2: bool,
}

impl UnivReport {
    pub fn contains(&self, x: usize) -> bool {
        self.univ.contains(x)
    }

    pub fn sizes(&self) -> UnivSizes {
        UnivSizes {
            univ: self.univ.len(),
            univ_plus: self.univ_plus.order(),
            univ_minus: self.univ_minus.len(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnivSizes {
    pub univ: usize,
    pub univ_plus: usize,
    pub univ_minus: usize,
}

pub fn univ_sets(g: &Group) -> UnivReport {
    let table = NormalizerTable::new(g);
    let series = structure::series(g);
    univ_sets_with(g, &table, series.center(), series.second_center())
}

pub fn univ_sets_with(g: &Group, table: &NormalizerTable, center: &Subgroup, z2: &Subgroup) -> UnivReport {
    let n = g.order();
    let univ_minus = BitSet::from_indices(n, (0..n).filter(|&a| table.normalizer(a).order() == n));
    let mut plus = BitSet::full(n);
    for c in table.normalizers.iter() {
        plus.intersect_with(c.members());
    }
    let univ = univ_minus.intersection(&plus);
    let is_univ_subgroup = g.subgroup_from_set(univ.clone()).is_ok();
    UnivReport {
        univ_equals_center: &univ == center.members(),
        univ_equals_z2: &univ == z2.members(),
        univ_plus: g.subgroup_from_set(plus).expect("intersection of subgroups"),
        univ_minus,
        univ,
        is_univ_subgroup,
    }
}

/// The directed normalizing graph on all of `G`.
pub fn gamma_norm(g: &Group) -> Digraph {
    gamma_norm_with(&NormalizerTable::new(g))
}

pub fn gamma_norm_with(table: &NormalizerTable) -> Digraph {
    let n = table.cyclic_id.len();
    let rows = (0..n).map(|x| table.normalizer(x).members().clone()).collect();
    Digraph::from_out_rows((0..n).collect(), rows)
}

/// The directed normalizing graph with the universal vertices removed.
pub fn delta_norm(g: &Group) -> Digraph {
    let table = NormalizerTable::new(g);
    let series = structure::series(g);
    let univ = univ_sets_with(g, &table, series.center(), series.second_center());
    delta_norm_with(&table, &univ.univ)
}

pub fn delta_norm_with(table: &NormalizerTable, univ: &BitSet) -> Digraph {
    gamma_norm_with(table).induced(&univ.complement())
}

/// Edge iff either arrow exists.
pub fn undirected(d: &Digraph) -> Digraph {
    d.undirected()
}

pub fn is_complete(d: &Digraph, directed: bool) -> bool {
    d.is_complete(directed)
}

/// Vertices `G \ Z_inf(G)`, edge when `<x, y>` is nilpotent.
pub fn nilpotent_graph(g: &Group) -> Digraph {
    let hyper = structure::series(g).hypercenter().clone();
    let table = NormalizerTable::new(g);
    nilpotent_graph_with(g, &table, &hyper)
}

pub fn nilpotent_graph_with(g: &Group, table: &NormalizerTable, hypercenter: &Subgroup) -> Digraph {
    let verts: Vec<usize> = g.elements().filter(|&x| !hypercenter.contains(x)).collect();
    pair_graph(g, table, verts, structure::is_nilpotent_subgroup)
}

/// Vertices `G \ Z(G)`, edge when the elements commute.
pub fn commuting_graph(g: &Group) -> Digraph {
    let z = structure::center(g);
    let verts: Vec<usize> = g.elements().filter(|&x| !z.contains(x)).collect();
    Digraph::from_fn(verts.clone(), |u, v| g.commute(verts[u], verts[v]))
}

/// Vertices all of `G`, edge when `<x, y>` is supersoluble.
pub fn supersolubility_graph(g: &Group) -> Digraph {
    let table = NormalizerTable::new(g);
    pair_graph(g, &table, g.elements().collect(), |g, h| {
        structure::is_supersoluble_subgroup(g, h)
    })
}

/// Symmetric graph with an edge when `pred(<x, y>)` holds. `<x, y>` depends only on
/// the pair of cyclic subgroups, and the predicate only on the generated subgroup,
/// so both are memoized.
fn pair_graph(
    g: &Group,
    table: &NormalizerTable,
    verts: Vec<usize>,
    pred: impl Fn(&Group, &Subgroup) -> bool,
) -> Digraph {
    let mut by_pair: HashMap<(usize, usize), bool> = HashMap::new();
    let mut by_subgroup: HashMap<BitSet, bool> = HashMap::new();
    let m = verts.len();
    let mut rows = vec![BitSet::new(m); m];
    for i in 0..m {
        for j in i + 1..m {
            let (x, y) = (verts[i], verts[j]);
            let (a, b) = (table.cyclic_index(x), table.cyclic_index(y));
            let key = (a.min(b), a.max(b));
            let edge = *by_pair.entry(key).or_insert_with(|| {
                let h = g.generate(&[x, y]);
                *by_subgroup
                    .entry(h.members().clone())
                    .or_insert_with(|| pred(g, &h))
            });
            if edge {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    Digraph::from_out_rows(verts, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, parse_spec};

    fn group(s: &str) -> Group {
        build(&parse_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn arrow_agrees_with_table() {
        for name in ["S4", "Mod16", "D12", "C3xQ8"] {
            let g = group(name);
            let t = NormalizerTable::new(&g);
            for x in g.elements() {
                for y in g.elements() {
                    assert_eq!(arrow(&g, x, y), t.arrow(x, y));
                }
            }
            assert_eq!(n_plus(&g, 0).order(), g.order());
        }
    }

    #[test]
    fn mod16_universal_vertices() {
        let g = group("Mod16");
        let u = univ_sets(&g);
        assert_eq!(u.univ.len(), 6);
        assert!(!u.is_univ_subgroup);
        assert_eq!(g.order() / u.univ_plus.order(), 2);
        let x2y = g.find_label("x^2y").unwrap();
        let x6y = g.find_label("x^6y").unwrap();
        let x4y = g.find_label("x^4y").unwrap();
        assert!(u.contains(x2y) && u.contains(x6y));
        assert!(!u.contains(x4y));
    }

    #[test]
    fn dedekind_has_empty_delta() {
        let g = group("Q8");
        assert!(gamma_norm(&g).is_complete(true));
        assert_eq!(delta_norm(&g).vertex_count(), 0);
        assert!(!gamma_norm(&group("D8")).is_complete(true));
        assert!(!gamma_norm(&group("D8")).is_complete(false));
    }

    #[test]
    fn auxiliary_graphs() {
        assert_eq!(commuting_graph(&group("C6")).vertex_count(), 0);
        let s3 = group("S3");
        let nil = nilpotent_graph(&s3);
        assert_eq!(nil.vertex_count(), 5);
        let t = s3.find_label("(1 2)").unwrap();
        let c = s3.find_label("(1 2 3)").unwrap();
        assert!(!nil.has_edge(nil.vertex_of(t).unwrap(), nil.vertex_of(c).unwrap()));
        let s4 = group("S4");
        let ss = supersolubility_graph(&s4);
        let ug = gamma_norm(&s4).undirected();
        for u in 0..24 {
            assert!(ug.out_neighbors(u).is_subset(ss.out_neighbors(u)));
        }
    }
}
