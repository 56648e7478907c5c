//! Per-group memoized computations shared by reports and checks.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::classify::{self, Classification};
use crate::digraph::{Digraph, SccDecomposition};
use crate::group::{Group, Subgroup};
use crate::norm_graph::{self, NormalizerTable, UnivReport};
use crate::structure::{self, NormalLattice, SeriesReport, StructureSizes};

/// All-pairs directed distances of a digraph, by vertex position.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    m: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    const UNREACHABLE: u32 = u32::MAX;

    pub fn new(g: &Digraph) -> Self {
        let m = g.vertex_count();
        let rows: Vec<Vec<u32>> = (0..m)
            .into_par_iter()
            .map(|u| {
                g.bfs(u, None)
                    .into_iter()
                    .map(|d| d.map_or(Self::UNREACHABLE, |d| d as u32))
                    .collect()
            })
            .collect();
        DistanceMatrix {
            m,
            d: rows.concat(),
        }
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.d[u * self.m + v];
        (d != Self::UNREACHABLE).then_some(d as usize)
    }

    pub fn row(&self, u: usize) -> impl Iterator<Item = Option<usize>> + '_ {
        (0..self.m).map(move |v| self.get(u, v))
    }
}

/// A group together with lazily computed invariants. Every accessor computes its
/// value at most once; the struct is `Sync`, so checks may share it across threads.
pub struct Analysis {
    group: Group,
    normalizers: OnceLock<NormalizerTable>,
    series: OnceLock<SeriesReport>,
    lattice: OnceLock<NormalLattice>,
    fitting: OnceLock<Subgroup>,
    univ: OnceLock<UnivReport>,
    gamma: OnceLock<Digraph>,
    delta: OnceLock<Digraph>,
    delta_scc: OnceLock<SccDecomposition>,
    delta_distances: OnceLock<DistanceMatrix>,
    nilpotent_graph: OnceLock<Digraph>,
    decompositions: OnceLock<Vec<(Subgroup, Subgroup)>>,
    classification: OnceLock<Classification>,
}

impl Analysis {
    pub fn new(group: Group) -> Self {
        Analysis {
            group,
            normalizers: OnceLock::new(),
            series: OnceLock::new(),
            lattice: OnceLock::new(),
            fitting: OnceLock::new(),
            univ: OnceLock::new(),
            gamma: OnceLock::new(),
            delta: OnceLock::new(),
            delta_scc: OnceLock::new(),
            delta_distances: OnceLock::new(),
            nilpotent_graph: OnceLock::new(),
            decompositions: OnceLock::new(),
            classification: OnceLock::new(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn normalizers(&self) -> &NormalizerTable {
        self.normalizers.get_or_init(|| NormalizerTable::new(&self.group))
    }

    pub fn series(&self) -> &SeriesReport {
        self.series.get_or_init(|| structure::series(&self.group))
    }

    pub fn center(&self) -> &Subgroup {
        self.series().center()
    }

    pub fn lattice(&self) -> &NormalLattice {
        self.lattice.get_or_init(|| structure::normal_subgroups(&self.group))
    }

    pub fn fitting(&self) -> &Subgroup {
        self.fitting.get_or_init(|| structure::fitting(&self.group))
    }

    pub fn univ(&self) -> &UnivReport {
        self.univ.get_or_init(|| {
            let s = self.series();
            norm_graph::univ_sets_with(&self.group, self.normalizers(), s.center(), s.second_center())
        })
    }

    pub fn gamma(&self) -> &Digraph {
        self.gamma.get_or_init(|| norm_graph::gamma_norm_with(self.normalizers()))
    }

    pub fn delta(&self) -> &Digraph {
        self.delta
            .get_or_init(|| self.gamma().induced(&self.univ().univ.complement()))
    }

    pub fn delta_scc(&self) -> &SccDecomposition {
        self.delta_scc.get_or_init(|| self.delta().scc())
    }

    pub fn delta_distances(&self) -> &DistanceMatrix {
        self.delta_distances.get_or_init(|| DistanceMatrix::new(self.delta()))
    }

    /// Directed distance in the universal-free graph between two group elements.
    pub fn delta_distance(&self, x: usize, y: usize) -> Option<usize> {
        let d = self.delta();
        let (u, v) = (d.vertex_of(x)?, d.vertex_of(y)?);
        self.delta_distances().get(u, v)
    }

    pub fn nilpotent_graph(&self) -> &Digraph {
        self.nilpotent_graph.get_or_init(|| {
            norm_graph::nilpotent_graph_with(&self.group, self.normalizers(), self.series().hypercenter())
        })
    }

    pub fn decompositions(&self) -> &[(Subgroup, Subgroup)] {
        self.decompositions
            .get_or_init(|| structure::direct_decompositions(&self.group, self.lattice()))
    }

    pub fn classification(&self) -> &Classification {
        self.classification.get_or_init(|| classify::classify(self))
    }

    pub fn structure_sizes(&self) -> StructureSizes {
        let s = self.series();
        StructureSizes {
            center: s.center().order(),
            second_center: s.second_center().order(),
            hypercenter: s.hypercenter().order(),
            fitting: self.fitting().order(),
            derived: s.derived.get(1).map_or(1, Subgroup::order),
        }
    }

    /// Vertex set of the universal-free graph corresponding to group elements.
    pub fn delta_vertices<I: IntoIterator<Item = usize>>(&self, elements: I) -> BitSet {
        self.delta().vertex_set(elements)
    }

    /// Computes the invariants most checks read, so parallel readers find them ready.
    pub fn warm(&self) {
        self.classification();
        self.delta_scc();
        self.delta_distances();
    }
}
