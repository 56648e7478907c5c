//! Whole-group invariants: conjugacy classes, central and derived series,
//! quotients, the normal-subgroup lattice, Sylow subgroups and the Fitting subgroup.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::arith;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{Closure, Group, Subgroup};

/// Conjugacy classes, each sorted, listed in order of their smallest element.
pub fn conjugacy_classes(g: &Group) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = BitSet::new(n);
    let mut out = Vec::new();
    for a in 0..n {
        if seen.contains(a) {
            continue;
        }
        let mut class = BitSet::new(n);
        for h in 0..n {
            class.insert(g.conj(a, h));
        }
        seen.union_with(&class);
        out.push(class.to_vec());
    }
    out
}

pub fn center(g: &Group) -> Subgroup {
    g.centralizer_of_set(g.elements())
}

/// `{ x : [x, g] ∈ below for all g }`, the preimage of the center of `G/below`.
fn next_center(g: &Group, below: &Subgroup) -> Subgroup {
    let set = BitSet::from_indices(
        g.order(),
        g.elements()
            .filter(|&x| g.elements().all(|y| below.contains(g.commutator(x, y)))),
    );
    g.subgroup_from_set(set).expect("upper central term is a subgroup")
}

/// `[a, b]` as a subgroup.
pub fn commutator_subgroup(g: &Group, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut c = Closure::new(g);
    for x in a.iter() {
        for y in b.iter() {
            c.add(g.commutator(x, y));
        }
    }
    c.finish()
}

pub fn derived_subgroup(g: &Group) -> Subgroup {
    let w = g.whole();
    commutator_subgroup(g, &w, &w)
}

#[derive(Debug, Clone)]
pub struct SeriesReport {
    /// `Z_0 = 1 ⊆ Z_1 ⊆ ...` up to the hypercenter.
    pub upper_central: Vec<Subgroup>,
    /// `G = γ_1 ⊇ γ_2 ⊇ ...` until it stabilizes.
    pub lower_central: Vec<Subgroup>,
    /// `G ⊇ G' ⊇ G'' ⊇ ...` until it stabilizes.
    pub derived: Vec<Subgroup>,
}

impl SeriesReport {
    pub fn center(&self) -> &Subgroup {
        self.upper_central.get(1).unwrap_or(&self.upper_central[0])
    }

    pub fn second_center(&self) -> &Subgroup {
        let k = self.upper_central.len() - 1;
        &self.upper_central[k.min(2)]
    }

    pub fn hypercenter(&self) -> &Subgroup {
        self.upper_central.last().expect("nonempty")
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central.last().is_some_and(Subgroup::is_trivial)
    }

    pub fn nilpotency_class(&self) -> Option<usize> {
        self.is_nilpotent().then(|| self.lower_central.len() - 1)
    }

    pub fn is_soluble(&self) -> bool {
        self.derived.last().is_some_and(Subgroup::is_trivial)
    }
}

pub fn upper_central_series(g: &Group) -> Vec<Subgroup> {
    let mut series = vec![g.trivial_subgroup()];
    loop {
        let next = next_center(g, series.last().unwrap());
        if next == *series.last().unwrap() {
            // Keep Z_1 and Z_2 addressable even when the series stops early.
            return series;
        }
        series.push(next);
    }
}

pub fn lower_central_series(g: &Group) -> Vec<Subgroup> {
    let whole = g.whole();
    let mut series = vec![whole.clone()];
    loop {
        let next = commutator_subgroup(g, series.last().unwrap(), &whole);
        if next == *series.last().unwrap() {
            return series;
        }
        series.push(next);
    }
}

pub fn derived_series(g: &Group) -> Vec<Subgroup> {
    let mut series = vec![g.whole()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, last);
        if next == *last {
            return series;
        }
        series.push(next);
    }
}

pub fn series(g: &Group) -> SeriesReport {
    SeriesReport {
        upper_central: upper_central_series(g),
        lower_central: lower_central_series(g),
        derived: derived_series(g),
    }
}

/// `Z_k(G)`, taking the stable value once the series stops growing.
pub fn upper_central_term(g: &Group, k: usize) -> Subgroup {
    let s = upper_central_series(g);
    s[k.min(s.len() - 1)].clone()
}

/// Nilpotency class, or `None` when the group is not nilpotent. The trivial group has class 0.
pub fn nilpotency_class(g: &Group) -> Option<usize> {
    let lcs = lower_central_series(g);
    lcs.last().unwrap().is_trivial().then(|| lcs.len() - 1)
}

pub fn is_soluble(g: &Group) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}

/// A finite group is nilpotent exactly when elements of coprime order commute.
pub fn is_nilpotent_subgroup(g: &Group, h: &Subgroup) -> bool {
    let elems: Vec<usize> = h.iter().collect();
    // Prime-power elements suffice: every element is a product of commuting
    // prime-power parts.
    let pp: Vec<usize> = elems
        .iter()
        .copied()
        .filter(|&x| x != 0 && arith::is_prime_power(g.ord(x)))
        .collect();
    pp.iter().all(|&x| {
        pp.iter().all(|&y| {
            arith::gcd(g.ord(x), g.ord(y)) != 1 || g.commute(x, y)
        })
    })
}

/// The cosets of a normal subgroup, materialized as a group.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: Group,
    /// `projection[g]` is the coset index of `g`.
    pub projection: Vec<usize>,
    /// Smallest element of each coset.
    pub representatives: Vec<usize>,
}

pub fn quotient_group(g: &Group, n: &Subgroup) -> Result<Quotient> {
    if !n.contains(0) || !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let order = g.order();
    let mut projection = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if projection[x] != usize::MAX {
            continue;
        }
        let k = reps.len();
        reps.push(x);
        for y in n.iter() {
            projection[g.mul(x, y)] = k;
        }
    }
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(projection[g.mul(a, b)] as u32);
        }
    }
    let labels = g
        .labels()
        .map(|l| reps.iter().map(|&r| format!("{}N", l[r])).collect());
    let group = Group::from_trusted(format!("{}/N", g.name()), m, table, labels);
    Ok(Quotient {
        group,
        projection,
        representatives: reps,
    })
}

/// Smallest normal subgroup containing `set`.
pub fn normal_closure<I: IntoIterator<Item = usize>>(g: &Group, set: I) -> Subgroup {
    let mut c = Closure::new(g);
    for x in set {
        for h in g.elements() {
            c.add(g.conj(x, h));
        }
    }
    c.finish()
}

/// The normal subgroups of a group, ordered by size and then by membership.
#[derive(Debug, Clone)]
pub struct NormalLattice {
    pub members: Vec<Subgroup>,
}

impl NormalLattice {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subgroup> {
        self.members.iter()
    }

    /// Minimal nontrivial members.
    pub fn minimal(&self) -> Vec<&Subgroup> {
        self.members
            .iter()
            .filter(|m| !m.is_trivial())
            .filter(|m| {
                !self
                    .members
                    .iter()
                    .any(|o| !o.is_trivial() && o != *m && o.is_subset(m))
            })
            .collect()
    }
}

/// All normal subgroups: joins of normal closures of conjugacy classes.
pub fn normal_subgroups(g: &Group) -> NormalLattice {
    let classes = conjugacy_classes(g);
    let mut base: Vec<Subgroup> = Vec::new();
    for class in &classes {
        let nc = normal_closure(g, [class[0]]);
        if !base.contains(&nc) {
            base.push(nc);
        }
    }
    let mut seen: HashSet<Subgroup> = base.iter().cloned().collect();
    let mut queue: VecDeque<Subgroup> = base.iter().cloned().collect();
    let mut all: Vec<Subgroup> = base.clone();
    while let Some(a) = queue.pop_front() {
        for b in &base {
            if b.is_subset(&a) {
                continue;
            }
            let j = g.join(&a, b);
            if seen.insert(j.clone()) {
                all.push(j.clone());
                queue.push_back(j);
            }
        }
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.cmp(b)));
    NormalLattice { members: all }
}

/// A Sylow `p`-subgroup, grown one `p`-element of the normalizer at a time
/// (lowest index first), so the result is deterministic.
pub fn sylow_subgroup(g: &Group, p: usize) -> Result<Subgroup> {
    let n = g.order();
    if !arith::is_prime(p) || !n.is_multiple_of(p) {
        return Err(Error::PrimeNotDividing { p, n });
    }
    let target = p.pow(arith::valuation(n, p));
    let mut sub = g.trivial_subgroup();
    while sub.order() < target {
        let norm = g.normalizer(&sub);
        let x = norm
            .iter()
            .find(|&x| !sub.contains(x) && arith::valuation(g.ord(x), p) > 0 && arith::is_prime_power(g.ord(x)))
            .expect("a p-subgroup below Sylow order has a p-element in its normalizer outside it");
        sub = g.join(&sub, &g.cyclic(x));
    }
    Ok(sub)
}

/// `O_p(G)`: the intersection of all Sylow `p`-subgroups.
pub fn p_core(g: &Group, p: usize) -> Result<Subgroup> {
    let sylow = sylow_subgroup(g, p)?;
    let mut core = sylow.members().clone();
    for h in g.elements() {
        let conj = g.conjugate_subgroup(&sylow, h);
        core.intersect_with(conj.members());
    }
    Ok(g.subgroup_from_set(core).expect("intersection of subgroups"))
}

/// `Fit(G)`, the product of the `p`-cores.
pub fn fitting(g: &Group) -> Subgroup {
    let mut fit = g.trivial_subgroup();
    for p in arith::prime_divisors(g.order()) {
        let core = p_core(g, p).expect("p divides |G|");
        fit = g.join(&fit, &core);
    }
    fit
}

/// Supersolubility via a chief series built from the bottom: a minimal normal
/// subgroup must have prime order, and the quotient must again be supersoluble.
pub fn is_supersoluble(g: &Group) -> bool {
    if g.order() == 1 {
        return true;
    }
    // The smallest normal closure of a single element is a minimal normal subgroup.
    let classes = conjugacy_classes(g);
    let minimal = classes
        .iter()
        .filter(|c| c[0] != 0)
        .map(|c| normal_closure(g, [c[0]]))
        .min_by_key(|s| s.order())
        .expect("nontrivial group");
    if !arith::is_prime(minimal.order()) {
        return false;
    }
    let q = quotient_group(g, &minimal).expect("normal closure is normal");
    is_supersoluble(&q.group)
}

pub fn is_supersoluble_subgroup(g: &Group, h: &Subgroup) -> bool {
    let (sub, _) = g.subgroup_as_group(h, "H");
    is_supersoluble(&sub)
}

/// Internal direct decompositions `G = A × B` with `A`, `B` proper, nontrivial and
/// normal. Each unordered pair appears once, with `A` earlier than `B` in the lattice.
pub fn direct_decompositions(g: &Group, lattice: &NormalLattice) -> Vec<(Subgroup, Subgroup)> {
    let n = g.order();
    let proper: Vec<&Subgroup> = lattice
        .iter()
        .filter(|s| !s.is_trivial() && s.order() < n)
        .collect();
    let mut out = Vec::new();
    for (i, a) in proper.iter().enumerate() {
        for b in &proper[i + 1..] {
            if a.order() * b.order() == n && a.members().intersection_len(b.members()) == 1 {
                out.push(((*a).clone(), (*b).clone()));
            }
        }
    }
    out
}

/// Searches for an isomorphism `a -> b`, returned as an index map. Gives up (returning
/// `None`) after `budget` candidate generator assignments.
pub fn find_isomorphism(a: &Group, b: &Group, budget: usize) -> Option<Vec<usize>> {
    if a.order() != b.order() || a.order_profile() != b.order_profile() {
        return None;
    }
    // greedy generating set, largest orders first
    let mut elems: Vec<usize> = a.elements().collect();
    elems.sort_by_key(|&x| (std::cmp::Reverse(a.ord(x)), x));
    let mut gens = Vec::new();
    let mut covered = a.trivial_subgroup();
    for x in elems {
        if covered.order() == a.order() {
            break;
        }
        if !covered.contains(x) {
            gens.push(x);
            covered = a.generate(&gens);
        }
    }
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| b.elements().filter(|&y| b.ord(y) == a.ord(x)).collect())
        .collect();
    let mut budget = budget;
    let mut chosen = Vec::with_capacity(gens.len());
    search_iso(a, b, &gens, &candidates, &mut chosen, &mut budget)
}

fn search_iso(
    a: &Group,
    b: &Group,
    gens: &[usize],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    budget: &mut usize,
) -> Option<Vec<usize>> {
    let k = chosen.len();
    if k == gens.len() {
        let map = extend_hom(a, b, gens, chosen)?;
        let mut hit = vec![false; b.order()];
        for &v in &map {
            if std::mem::replace(&mut hit[v], true) {
                return None;
            }
        }
        return Some(map);
    }
    for &y in &candidates[k] {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        chosen.push(y);
        if extend_hom(a, b, &gens[..=k], chosen).is_some() {
            if let Some(m) = search_iso(a, b, gens, candidates, chosen, budget) {
                return Some(m);
            }
        }
        chosen.pop();
    }
    None
}

/// Extends `gens[i] -> images[i]` along the Cayley graph of `<gens>`; `None` on conflict.
/// Entries outside `<gens>` are left as `usize::MAX`.
fn extend_hom(a: &Group, b: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    let mut filled = 1usize;
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = a.mul(x, s);
            let iy = b.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = iy;
                filled += 1;
                queue.push_back(y);
            } else if map[y] != iy {
                return None;
            }
        }
    }
    debug_assert!(filled <= a.order());
    Some(map)
}

/// Sizes of the standard structural subgroups, for reports.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct StructureSizes {
    pub center: usize,
    pub second_center: usize,
    pub hypercenter: usize,
    pub fitting: usize,
    pub derived: usize,
}
