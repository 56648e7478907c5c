//! Simple directed graphs over bitset adjacency, with strongly connected
//! components, breadth-first distances, diameters and DOT output.

use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A simple digraph. Vertex `v` stands for the group element `elements[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    elements: Vec<usize>,
    out: Vec<BitSet>,
    inn: Vec<BitSet>,
}

impl Digraph {
    pub fn empty(elements: Vec<usize>) -> Self {
        let m = elements.len();
        Digraph {
            elements,
            out: vec![BitSet::new(m); m],
            inn: vec![BitSet::new(m); m],
        }
    }

    /// Graph with an edge `u -> v` (for `u != v`) wherever `edge(u, v)` holds,
    /// `u`, `v` being vertex positions.
    pub fn from_fn(elements: Vec<usize>, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Digraph::empty(elements);
        let m = g.vertex_count();
        for u in 0..m {
            for v in 0..m {
                if u != v && edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Builds from out-rows given directly as bitsets; loops are dropped.
    pub fn from_out_rows(elements: Vec<usize>, rows: Vec<BitSet>) -> Self {
        let m = elements.len();
        assert_eq!(rows.len(), m);
        let mut g = Digraph {
            elements,
            out: rows,
            inn: vec![BitSet::new(m); m],
        };
        for u in 0..m {
            g.out[u].remove(u);
            for v in g.out[u].iter() {
                g.inn[v].insert(u);
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.out[u].insert(v);
            self.inn[v].insert(u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.elements.len()
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(BitSet::len).sum()
    }

    /// The group element carried by vertex `v`.
    pub fn element(&self, v: usize) -> usize {
        self.elements[v]
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Vertex position of a group element, if it is a vertex.
    pub fn vertex_of(&self, element: usize) -> Option<usize> {
        self.elements.binary_search(&element).ok().or_else(|| {
            self.elements.iter().position(|&e| e == element)
        })
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    pub fn out_neighbors(&self, u: usize) -> &BitSet {
        &self.out[u]
    }

    pub fn in_neighbors(&self, v: usize) -> &BitSet {
        &self.inn[v]
    }

    /// The undirected shadow: an edge both ways whenever either arrow exists.
    pub fn undirected(&self) -> Digraph {
        let mut rows = self.out.clone();
        for (r, i) in rows.iter_mut().zip(&self.inn) {
            r.union_with(i);
        }
        Digraph::from_out_rows(self.elements.clone(), rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.out == self.inn
    }

    /// Directed: every ordered pair of distinct vertices is an edge.
    /// Undirected: every unordered pair is joined in at least one direction.
    pub fn is_complete(&self, directed: bool) -> bool {
        let m = self.vertex_count();
        (0..m).all(|u| {
            let mut row = self.out[u].clone();
            if !directed {
                row.union_with(&self.inn[u]);
            }
            row.len() == m - 1
        })
    }

    /// The subgraph induced on the vertex positions in `keep`.
    pub fn induced(&self, keep: &BitSet) -> Digraph {
        let verts: Vec<usize> = keep.iter().collect();
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let elements = verts.iter().map(|&v| self.elements[v]).collect();
        let rows = verts
            .iter()
            .map(|&v| BitSet::from_indices(verts.len(), self.out[v].iter().filter(|&w| keep.contains(w)).map(|w| pos[w])))
            .collect();
        Digraph::from_out_rows(elements, rows)
    }

    // ---- distances ----

    /// BFS levels from `source`, restricted to `within` when given. `None` marks
    /// unreachable vertices.
    pub fn bfs(&self, source: usize, within: Option<&BitSet>) -> Vec<Option<usize>> {
        let m = self.vertex_count();
        let mut dist = vec![None; m];
        let mut visited = BitSet::new(m);
        visited.insert(source);
        dist[source] = Some(0);
        let mut frontier = vec![source];
        let mut level = 0;
        while !frontier.is_empty() {
            level += 1;
            let mut next = BitSet::new(m);
            for &u in &frontier {
                next.union_with(&self.out[u]);
            }
            next.difference_with(&visited);
            if let Some(w) = within {
                next.intersect_with(w);
            }
            visited.union_with(&next);
            frontier = next.to_vec();
            for &v in &frontier {
                dist[v] = Some(level);
            }
        }
        dist
    }

    /// Length of a shortest directed path from `u` to `v` (`Some(0)` when `u == v`).
    pub fn directed_distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        let m = self.vertex_count();
        if u >= m {
            return Err(Error::UnknownVertex(u));
        }
        if v >= m {
            return Err(Error::UnknownVertex(v));
        }
        Ok(self.bfs(u, None)[v])
    }

    /// Largest directed distance over ordered pairs; fails unless strongly connected.
    pub fn diameter(&self) -> Result<usize> {
        let m = self.vertex_count();
        let mut best = 0;
        for u in 0..m {
            for d in self.bfs(u, None) {
                best = best.max(d.ok_or(Error::NotStronglyConnected)?);
            }
        }
        Ok(best)
    }

    /// Largest distance within the subgraph induced on `set` (assumed strongly connected).
    fn diameter_within(&self, set: &BitSet) -> usize {
        set.iter()
            .map(|u| {
                self.bfs(u, Some(set))
                    .into_iter()
                    .enumerate()
                    .filter(|(v, _)| set.contains(*v))
                    .map(|(_, d)| d.expect("component is strongly connected"))
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// A pair realizing the diameter, with its distance.
    pub fn diameter_witness(&self) -> Result<(usize, usize, usize)> {
        let m = self.vertex_count();
        let mut best = (0, 0, 0);
        for u in 0..m {
            for (v, d) in self.bfs(u, None).into_iter().enumerate() {
                let d = d.ok_or(Error::NotStronglyConnected)?;
                if d > best.2 {
                    best = (u, v, d);
                }
            }
        }
        Ok(best)
    }

    // ---- sets ----

    /// No edge leaves `set`.
    pub fn is_sink_set(&self, set: &BitSet) -> bool {
        set.iter().all(|u| self.out[u].is_subset(set))
    }

    /// No edge enters `set`.
    pub fn is_source_set(&self, set: &BitSet) -> bool {
        set.iter().all(|v| self.inn[v].is_subset(set))
    }

    /// Vertex positions of the given group elements (ignoring non-vertices).
    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, elements: I) -> BitSet {
        BitSet::from_indices(
            self.vertex_count(),
            elements.into_iter().filter_map(|e| self.vertex_of(e)),
        )
    }

    // ---- components ----

    pub fn scc(&self) -> SccDecomposition {
        let comps = tarjan(self);
        let m = self.vertex_count();
        let mut component_of = vec![0; m];
        for (c, verts) in comps.iter().enumerate() {
            for &v in verts {
                component_of[v] = c;
            }
        }
        let k = comps.len();
        let mut condensation = vec![BitSet::new(k); k];
        for u in 0..m {
            for v in self.out[u].iter() {
                if component_of[u] != component_of[v] {
                    condensation[component_of[u]].insert(component_of[v]);
                }
            }
        }
        let diameters = comps
            .iter()
            .map(|verts| {
                if verts.len() == 1 {
                    0
                } else {
                    self.diameter_within(&BitSet::from_indices(m, verts.iter().copied()))
                }
            })
            .collect::<Vec<_>>();
        let strongly_connected = k <= 1;
        SccDecomposition {
            diameter: strongly_connected.then(|| diameters.first().copied().unwrap_or(0)),
            component_of,
            components: comps,
            condensation,
            diameters,
            strongly_connected,
        }
    }

    pub fn is_strongly_connected(&self) -> bool {
        let m = self.vertex_count();
        if m == 0 {
            return true;
        }
        let all = |d: Vec<Option<usize>>| d.iter().all(Option::is_some);
        if !all(self.bfs(0, None)) {
            return false;
        }
        // reachability to vertex 0 via the reversed graph
        let rev = Digraph {
            elements: self.elements.clone(),
            out: self.inn.clone(),
            inn: self.out.clone(),
        };
        all(rev.bfs(0, None))
    }

    /// Graphviz text. `label` names each vertex; mutual arrows are merged into a
    /// single `dir=both` edge.
    pub fn to_dot(&self, name: &str, label: impl Fn(usize) -> String) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{}\" {{", escape(name));
        for v in 0..self.vertex_count() {
            let _ = writeln!(s, "  v{v} [label=\"{}\"];", escape(&label(self.elements[v])));
        }
        for u in 0..self.vertex_count() {
            for v in self.out[u].iter() {
                if self.out[v].contains(u) {
                    if u < v {
                        let _ = writeln!(s, "  v{u} -> v{v} [dir=both];");
                    }
                } else {
                    let _ = writeln!(s, "  v{u} -> v{v};");
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Tarjan's algorithm, iterative. Components come out in reverse topological
/// order of the condensation (sinks first), vertices sorted within each.
fn tarjan(g: &Digraph) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let m = g.vertex_count();
    let mut index = vec![UNSEEN; m];
    let mut low = vec![0; m];
    let mut on_stack = vec![false; m];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0;
    let succ: Vec<Vec<usize>> = (0..m).map(|u| g.out[u].to_vec()).collect();

    for root in 0..m {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (u, ref mut next)) = call.last_mut() {
            if *next < succ[u].len() {
                let v = succ[u][*next];
                *next += 1;
                if index[v] == UNSEEN {
                    index[v] = counter;
                    low[v] = counter;
                    counter += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    call.push((v, 0));
                } else if on_stack[v] {
                    low[u] = low[u].min(index[v]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[u]);
                }
                if low[u] == index[u] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("stack holds the component");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == u {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
    }
    comps
}

/// Strongly connected components of a digraph.
#[derive(Clone, Debug)]
pub struct SccDecomposition {
    /// Component index of each vertex position.
    pub component_of: Vec<usize>,
    /// Vertex positions of each component, in reverse topological order.
    pub components: Vec<Vec<usize>>,
    /// Edges between components; acyclic.
    pub condensation: Vec<BitSet>,
    /// Diameter of each component's induced subgraph (0 for singletons).
    pub diameters: Vec<usize>,
    pub strongly_connected: bool,
    /// The graph diameter when strongly connected.
    pub diameter: Option<usize>,
}

impl SccDecomposition {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn component_diameters(&self) -> &[usize] {
        &self.diameters
    }

    /// `(size, diameter)` per component, sorted by size descending, then by the
    /// component's smallest vertex.
    pub fn sorted_summary(&self) -> Vec<(usize, usize)> {
        let mut idx: Vec<usize> = (0..self.count()).collect();
        idx.sort_by(|&a, &b| {
            self.components[b]
                .len()
                .cmp(&self.components[a].len())
                .then(self.components[a][0].cmp(&self.components[b][0]))
        });
        idx.iter()
            .map(|&c| (self.components[c].len(), self.diameters[c]))
            .collect()
    }
}
