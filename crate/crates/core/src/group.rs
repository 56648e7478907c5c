//! Finite groups as Cayley tables, and subgroups as bitsets over element indices.
//!
//! Every group is stored with its identity at index 0. All other modules talk to
//! groups only through this interface.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arith;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Tables up to this order get a full associativity check; larger ones are sampled.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 512;
const SAMPLED_TRIPLES: usize = 100_000;

/// A finite group given by its multiplication table.
#[derive(Clone)]
pub struct Group {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl Group {
    /// Builds a group from a row-major table (`table[a][b] = a*b`).
    ///
    /// The table is validated (shape, Latin square, identity, associativity) and
    /// re-indexed so the identity sits at index 0. Labels, when given, follow the
    /// input indexing and are permuted along with the elements.
    pub fn from_rows(
        name: impl Into<String>,
        rows: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::BadTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadTable(format!(
                    "row {i} has length {} but the table has {n} rows",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(Error::BadTable(format!("entry {v} in row {i} is out of range")));
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat(name, n, flat, labels)
    }

    /// Same as [`Group::from_rows`] with a flat row-major table.
    pub fn from_flat(
        name: impl Into<String>,
        n: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Result<Group> {
        if n == 0 || table.len() != n * n {
            return Err(Error::BadTable(format!(
                "expected {} entries for order {n}, found {}",
                n * n,
                table.len()
            )));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::BadTable(format!("{} labels for {n} elements", l.len())));
            }
        }
        if let Some(v) = table.iter().find(|&&v| v as usize >= n) {
            return Err(Error::BadTable(format!("entry {v} is out of range")));
        }
        check_latin(n, &table)?;
        let e = (0..n)
            .find(|&e| (0..n).all(|b| table[e * n + b] as usize == b))
            .ok_or(Error::NoIdentity)?;
        if (0..n).any(|a| table[a * n + e] as usize != a) {
            return Err(Error::NoIdentity);
        }
        check_associative(n, &table)?;

        let (table, labels) = if e == 0 {
            (table, labels)
        } else {
            let swap = |i: usize| {
                if i == 0 {
                    e
                } else if i == e {
                    0
                } else {
                    i
                }
            };
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[swap(a) * n + swap(b)] = swap(table[a * n + b] as usize) as u32;
                }
            }
            let labels = labels.map(|mut l| {
                l.swap(0, e);
                l
            });
            (t, labels)
        };
        Ok(Self::assemble(name.into(), n, table, labels))
    }

    /// Builds a group from a table already known to be a group table with identity 0.
    pub(crate) fn from_trusted(
        name: impl Into<String>,
        n: usize,
        table: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Group {
        debug_assert_eq!(table.len(), n * n);
        debug_assert!((0..n).all(|b| table[b] as usize == b));
        Self::assemble(name.into(), n, table, labels)
    }

    fn assemble(name: String, n: usize, table: Vec<u32>, labels: Option<Vec<String>>) -> Group {
        let mut inverses = vec![0u32; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            inverses[a] = row.iter().position(|&v| v == 0).expect("latin row") as u32;
        }
        let mut orders = vec![0usize; n];
        for a in 0..n {
            let (mut x, mut k) = (a, 1);
            while x != 0 {
                x = table[x * n + a] as usize;
                k += 1;
            }
            orders[a] = k;
        }
        Group {
            name,
            order: n,
            table,
            inverses,
            orders,
            labels,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Group {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Raw row-major table.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].iter().map(|&v| v as usize).collect())
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Human-readable name of an element: its generator word when known, the index otherwise.
    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Index of the element with the given label.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        let l = self.labels.as_ref()?;
        let want: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        l.iter()
            .position(|s| s.chars().filter(|c| !c.is_whitespace()).collect::<String>() == want)
    }

    fn check(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    /// `a*b` without bounds reporting; panics on out-of-range indices.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    #[inline]
    pub fn ord(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn multiply(&self, a: usize, b: usize) -> Result<usize> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn inverse(&self, a: usize) -> Result<usize> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    pub fn element_order(&self, a: usize) -> Result<usize> {
        self.check(a)?;
        Ok(self.ord(a))
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.ord(a) as i64;
        let mut e = k.rem_euclid(o) as u64;
        let (mut base, mut acc) = (a, 0);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 a g`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn conjugate(&self, a: usize, g: usize) -> Result<usize> {
        self.check(a)?;
        self.check(g)?;
        Ok(self.conj(a, g))
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    // ---- subgroups ----

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_members(BitSet::from_indices(self.order, [0]))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(BitSet::full(self.order))
    }

    /// Wraps `set` as a subgroup after checking it contains 1 and is closed.
    pub fn subgroup_from_set(&self, set: BitSet) -> Result<Subgroup> {
        if set.capacity() != self.order || !set.contains(0) {
            return Err(Error::NotSubgroup);
        }
        for a in set.iter() {
            for b in set.iter() {
                if !set.contains(self.mul(a, b)) {
                    return Err(Error::NotSubgroup);
                }
            }
        }
        Ok(Subgroup::from_members(set))
    }

    pub fn cyclic_subgroup(&self, a: usize) -> Result<Subgroup> {
        self.check(a)?;
        Ok(self.cyclic(a))
    }

    pub(crate) fn cyclic(&self, a: usize) -> Subgroup {
        let mut s = BitSet::new(self.order);
        let mut x = 0;
        loop {
            s.insert(x);
            x = self.mul(x, a);
            if x == 0 {
                break;
            }
        }
        Subgroup::from_members(s)
    }

    /// The subgroup generated by `gens`.
    pub fn generated_subgroup<I: IntoIterator<Item = usize>>(&self, gens: I) -> Result<Subgroup> {
        let gens: Vec<usize> = gens.into_iter().collect();
        for &g in &gens {
            self.check(g)?;
        }
        Ok(self.generate(&gens))
    }

    pub(crate) fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut closure = Closure::new(self);
        for &g in gens {
            closure.add(g);
        }
        closure.finish()
    }

    /// Smallest subgroup containing both `a` and `b`.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut closure = Closure::from_subgroup(self, a);
        for x in b.iter() {
            closure.add(x);
        }
        closure.finish()
    }

    /// Whether `a` is normal in `b`; `a` must be contained in `b`.
    pub fn is_normal_in(&self, a: &Subgroup, b: &Subgroup) -> Result<bool> {
        if !a.is_subset(b) {
            return Err(Error::NotContained);
        }
        Ok(b.iter().all(|g| a.iter().all(|x| a.contains(self.conj(x, g)))))
    }

    pub fn is_normal(&self, a: &Subgroup) -> bool {
        // Conjugating by every element is only needed for a generating set, but
        // the full scan is cheap at the target scale.
        (0..self.order).all(|g| a.iter().all(|x| a.contains(self.conj(x, g))))
    }

    /// `N_G(<a>) = { g : <a>^g = <a> }`.
    pub fn normalizer_of_cyclic(&self, a: usize) -> Result<Subgroup> {
        self.check(a)?;
        Ok(self.cyclic_normalizer(a))
    }

    pub(crate) fn cyclic_normalizer(&self, a: usize) -> Subgroup {
        let c = self.cyclic(a);
        self.cyclic_normalizer_with(a, &c)
    }

    pub(crate) fn cyclic_normalizer_with(&self, a: usize, cyc: &Subgroup) -> Subgroup {
        // <a>^g = <a> iff a^g lies in <a>, since conjugation preserves orders.
        Subgroup::from_members(BitSet::from_indices(
            self.order,
            (0..self.order).filter(|&g| cyc.contains(self.conj(a, g))),
        ))
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        Subgroup::from_members(BitSet::from_indices(
            self.order,
            (0..self.order).filter(|&g| h.iter().all(|x| h.contains(self.conj(x, g)))),
        ))
    }

    pub fn centralizer(&self, a: usize) -> Result<Subgroup> {
        self.check(a)?;
        Ok(self.centralizer_of_set([a]))
    }

    pub fn centralizer_of_set<I: IntoIterator<Item = usize>>(&self, set: I) -> Subgroup {
        let set: Vec<usize> = set.into_iter().collect();
        Subgroup::from_members(BitSet::from_indices(
            self.order,
            (0..self.order).filter(|&g| set.iter().all(|&x| self.commute(g, x))),
        ))
    }

    /// `h^g` as a subgroup.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        Subgroup::from_members(BitSet::from_indices(self.order, h.iter().map(|x| self.conj(x, g))))
    }

    /// The p-component `a_p`: the power of `a` whose order is the p-part of `o(a)`.
    pub fn p_component(&self, a: usize, p: usize) -> Result<usize> {
        self.check(a)?;
        let o = self.ord(a);
        if !arith::is_prime(p) || !o.is_multiple_of(p) {
            return Err(Error::PrimeNotDividing { p, n: o });
        }
        let pe = p.pow(arith::valuation(o, p));
        let m = o / pe;
        // a_p = a^(m t) with m t = 1 (mod p^e); then a_p has order p^e and a_p a_{p'} = a.
        let t = arith::mod_inverse(m % pe, pe).expect("coprime");
        Ok(self.pow(a, (m * t) as i64))
    }

    /// The canonical power `a^(o(a)/p)` of order exactly `p`.
    pub fn p_power_part(&self, a: usize, p: usize) -> Result<usize> {
        self.check(a)?;
        let o = self.ord(a);
        if !arith::is_prime(p) || !o.is_multiple_of(p) {
            return Err(Error::PrimeNotDividing { p, n: o });
        }
        Ok(self.pow(a, (o / p) as i64))
    }

    /// Extracts `h` as a standalone group; returns it together with the embedding
    /// `local index -> index in self` (local 0 maps to the identity).
    pub fn subgroup_as_group(&self, h: &Subgroup, name: impl Into<String>) -> (Group, Vec<usize>) {
        let embed: Vec<usize> = h.iter().collect();
        let m = embed.len();
        let mut local = vec![usize::MAX; self.order];
        for (i, &g) in embed.iter().enumerate() {
            local[g] = i;
        }
        let mut t = Vec::with_capacity(m * m);
        for &a in &embed {
            for &b in &embed {
                t.push(local[self.mul(a, b)] as u32);
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| embed.iter().map(|&g| l[g].clone()).collect());
        (Group::from_trusted(name, m, t, labels), embed)
    }

    /// Multiset of element orders, sorted.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v = self.orders.clone();
        v.sort_unstable();
        v
    }
}

fn check_latin(n: usize, t: &[u32]) -> Result<()> {
    let mut seen = vec![u32::MAX; n];
    for a in 0..n {
        for b in 0..n {
            let v = t[a * n + b] as usize;
            if seen[v] == a as u32 {
                return Err(Error::NotLatin(format!("row {a} repeats entry {v}")));
            }
            seen[v] = a as u32;
        }
    }
    seen.iter_mut().for_each(|s| *s = u32::MAX);
    for b in 0..n {
        for a in 0..n {
            let v = t[a * n + b] as usize;
            if seen[v] == b as u32 {
                return Err(Error::NotLatin(format!("column {b} repeats entry {v}")));
            }
            seen[v] = b as u32;
        }
    }
    Ok(())
}

fn check_associative(n: usize, t: &[u32]) -> Result<()> {
    let m = |a: usize, b: usize| t[a * n + b] as usize;
    let test = |a: usize, b: usize, c: usize| -> Result<()> {
        let left = m(m(a, b), c);
        let right = m(a, m(b, c));
        if left != right {
            return Err(Error::NotAssociative { a, b, c, left, right });
        }
        Ok(())
    };
    if n <= FULL_ASSOCIATIVITY_LIMIT {
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                let row_b = &t[b * n..(b + 1) * n];
                let row_ab = &t[ab * n..(ab + 1) * n];
                for c in 0..n {
                    if t[a * n + row_b[c] as usize] != row_ab[c] {
                        return test(a, b, c);
                    }
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..SAMPLED_TRIPLES {
            test(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
    }
    Ok(())
}

/// Incremental subgroup closure under right multiplication by the generators.
pub(crate) struct Closure<'g> {
    group: &'g Group,
    members: BitSet,
    elems: Vec<usize>,
    gens: Vec<usize>,
}

impl<'g> Closure<'g> {
    pub(crate) fn new(group: &'g Group) -> Self {
        let mut members = BitSet::new(group.order);
        members.insert(0);
        Closure {
            group,
            members,
            elems: vec![0],
            gens: Vec::new(),
        }
    }

    pub(crate) fn from_subgroup(group: &'g Group, h: &Subgroup) -> Self {
        let mut c = Closure::new(group);
        for x in h.iter() {
            c.add(x);
        }
        c
    }

    pub(crate) fn add(&mut self, g: usize) {
        if self.members.contains(g) {
            return;
        }
        let grp = self.group;
        // Old elements are already closed under the old generators, so they only
        // need the new one; fresh elements get every generator.
        self.gens.push(g);
        let old = self.elems.len();
        for i in 0..old {
            let x = grp.mul(self.elems[i], g);
            if self.members.insert(x) {
                self.elems.push(x);
            }
        }
        let mut i = old;
        while i < self.elems.len() {
            let e = self.elems[i];
            for k in 0..self.gens.len() {
                let x = grp.mul(e, self.gens[k]);
                if self.members.insert(x) {
                    self.elems.push(x);
                }
            }
            i += 1;
        }
    }

    pub(crate) fn finish(self) -> Subgroup {
        Subgroup::from_members(self.members)
    }
}

/// A subgroup, stored as the set of its element indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: BitSet,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

impl Subgroup {
    pub(crate) fn from_members(members: BitSet) -> Self {
        Subgroup { members }
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn into_members(self) -> BitSet {
        self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn iter(&self) -> crate::bitset::Iter<'_> {
        self.members.iter()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Intersection of two subgroups (always a subgroup).
    pub fn meet(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_members(self.members.intersection(&other.members))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }
}
