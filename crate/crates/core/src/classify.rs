//! Group classes that the graph statements are conditioned on: Dedekind,
//! nilpotent, soluble, A-groups, Frobenius and 2-Frobenius groups.

use serde::Serialize;

use crate::analysis::Analysis;
use crate::arith;
use crate::bitset::BitSet;
use crate::group::{Group, Subgroup};
use crate::norm_graph::NormalizerTable;
use crate::structure::{self, NormalLattice};

/// Kernel `K` and one complement `H` of a Frobenius group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusData {
    pub kernel: Subgroup,
    pub complement: Subgroup,
}

/// `K < KH < G` with `KH` Frobenius of kernel `K` and `G/K` Frobenius with kernel
/// `KH/K` and complement `L/K`. `x` is the union of the conjugates of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFrobeniusData {
    pub k: Subgroup,
    pub h: Subgroup,
    pub kh: Subgroup,
    pub l: Subgroup,
    pub x: BitSet,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub abelian: bool,
    pub dedekind: bool,
    pub nilpotency_class: Option<usize>,
    pub soluble: bool,
    pub a_group: bool,
    pub cyclic_by_abelian: bool,
    pub frobenius: Option<FrobeniusData>,
    pub two_frobenius: Option<TwoFrobeniusData>,
    pub trivial_center: bool,
    pub fitting_prime_index: bool,
    pub involutions_commute: bool,
    /// Prime divisors of `|H|` for the Frobenius or 2-Frobenius complement.
    pub pi_h: Vec<usize>,
    /// Prime divisors of `|K|` for the Frobenius or 2-Frobenius kernel.
    pub pi_k: Vec<usize>,
    /// `p` does not divide `r - 1` for all `p` in `pi_h`, `r` in `pi_k`; only for
    /// 2-Frobenius groups.
    pub p_r_condition: Option<bool>,
}

impl Classification {
    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class.is_some()
    }

    /// Serializable flag summary.
    pub fn flags(&self) -> ClassificationFlags {
        ClassificationFlags {
            abelian: self.abelian,
            dedekind: self.dedekind,
            nilpotent: self.is_nilpotent(),
            nilpotency_class: self.nilpotency_class,
            soluble: self.soluble,
            a_group: self.a_group,
            cyclic_by_abelian: self.cyclic_by_abelian,
            frobenius: self.frobenius.is_some(),
            frobenius_kernel_order: self.frobenius.as_ref().map(|f| f.kernel.order()),
            two_frobenius: self.two_frobenius.is_some(),
            two_frobenius_orders: self
                .two_frobenius
                .as_ref()
                .map(|t| [t.k.order(), t.h.order(), t.l.order()]),
            trivial_center: self.trivial_center,
            fitting_prime_index: self.fitting_prime_index,
            involutions_commute: self.involutions_commute,
            pi_h: self.pi_h.clone(),
            pi_k: self.pi_k.clone(),
            p_r_condition: self.p_r_condition,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub abelian: bool,
    pub dedekind: bool,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub soluble: bool,
    pub a_group: bool,
    pub cyclic_by_abelian: bool,
    pub frobenius: bool,
    pub frobenius_kernel_order: Option<usize>,
    pub two_frobenius: bool,
    /// `[|K|, |H|, |L|]`.
    pub two_frobenius_orders: Option<[usize; 3]>,
    pub trivial_center: bool,
    pub fitting_prime_index: bool,
    pub involutions_commute: bool,
    pub pi_h: Vec<usize>,
    pub pi_k: Vec<usize>,
    pub p_r_condition: Option<bool>,
}

pub fn classify_group(g: Group) -> Classification {
    Analysis::new(g).classification().clone()
}

pub(crate) fn classify(a: &Analysis) -> Classification {
    let g = a.group();
    let n = g.order();
    let series = a.series();
    let frobenius = classify_frobenius_with(g, a.lattice());
    let two_frobenius = if frobenius.is_none() {
        classify_two_frobenius_with(g, a.lattice())
    } else {
        None
    };
    let (pi_h, pi_k) = match (&frobenius, &two_frobenius) {
        (Some(f), _) => (
            arith::prime_divisors(f.complement.order()),
            arith::prime_divisors(f.kernel.order()),
        ),
        (_, Some(t)) => (arith::prime_divisors(t.h.order()), arith::prime_divisors(t.k.order())),
        _ => (Vec::new(), Vec::new()),
    };
    let p_r_condition = two_frobenius
        .as_ref()
        .map(|_| two_frob_p_r_condition(&pi_h, &pi_k));
    let derived = series.derived.get(1).cloned().unwrap_or_else(|| g.trivial_subgroup());
    Classification {
        abelian: g.is_abelian(),
        dedekind: a.univ().univ_minus.len() == n,
        nilpotency_class: series.nilpotency_class(),
        soluble: series.is_soluble(),
        a_group: is_a_group(g),
        cyclic_by_abelian: cyclic_by_abelian_with(a.normalizers(), &a.univ().univ_minus, &derived),
        trivial_center: series.center().is_trivial(),
        fitting_prime_index: arith::is_prime(n / a.fitting().order()),
        involutions_commute: involutions_commute(g),
        frobenius,
        two_frobenius,
        pi_h,
        pi_k,
        p_r_condition,
    }
}

/// Every cyclic subgroup is normal.
pub fn is_dedekind(g: &Group) -> bool {
    let t = NormalizerTable::new(g);
    g.elements().all(|x| t.normalizer(x).order() == g.order())
}

/// Every Sylow subgroup is abelian.
pub fn is_a_group(g: &Group) -> bool {
    arith::prime_divisors(g.order()).into_iter().all(|p| {
        let s = structure::sylow_subgroup(g, p).expect("p divides |G|");
        s.iter().all(|x| s.iter().all(|y| g.commute(x, y)))
    })
}

/// Some normal cyclic subgroup `<a>` contains `G'`.
pub fn is_cyclic_by_abelian(g: &Group) -> bool {
    let t = NormalizerTable::new(g);
    let univ_minus = BitSet::from_indices(
        g.order(),
        g.elements().filter(|&a| t.normalizer(a).order() == g.order()),
    );
    cyclic_by_abelian_with(&t, &univ_minus, &structure::derived_subgroup(g))
}

fn cyclic_by_abelian_with(t: &NormalizerTable, univ_minus: &BitSet, derived: &Subgroup) -> bool {
    univ_minus.iter().any(|a| derived.is_subset(t.cyclic(a)))
}

pub fn fitting_prime_index(g: &Group) -> bool {
    arith::is_prime(g.order() / structure::fitting(g).order())
}

pub fn involutions_commute(g: &Group) -> bool {
    let inv: Vec<usize> = g.elements().filter(|&x| g.ord(x) == 2).collect();
    inv.iter().all(|&x| inv.iter().all(|&y| g.commute(x, y)))
}

/// `p` does not divide `r - 1` for every `p` in `pi_h` and `r` in `pi_k`.
pub fn two_frob_p_r_condition(pi_h: &[usize], pi_k: &[usize]) -> bool {
    pi_h.iter().all(|&p| pi_k.iter().all(|&r| (r - 1) % p != 0))
}

/// `C_K(g) = 1` for every `g` in `within \ K`.
fn acts_fixed_point_freely(g: &Group, k: &Subgroup, within: &Subgroup) -> bool {
    within
        .iter()
        .filter(|&x| !k.contains(x))
        .all(|x| k.iter().all(|y| y == 0 || !g.commute(x, y)))
}

pub fn classify_frobenius(g: &Group) -> Option<FrobeniusData> {
    classify_frobenius_with(g, &structure::normal_subgroups(g))
}

/// Looks for a normal `1 < K < G` acting fixed-point-freely; a complement is then
/// `C_G(x)` for any `x` in the center of some complement, which is found as the
/// first `x` outside `K` whose centralizer has order `|G:K|`.
pub fn classify_frobenius_with(g: &Group, lattice: &NormalLattice) -> Option<FrobeniusData> {
    let n = g.order();
    let whole = g.whole();
    let kernel = lattice
        .iter()
        .find(|k| !k.is_trivial() && k.order() < n && acts_fixed_point_freely(g, k, &whole))?
        .clone();
    let index = n / kernel.order();
    let complement = g
        .elements()
        .filter(|&x| !kernel.contains(x))
        .map(|x| g.centralizer_of_set([x]))
        .find(|c| c.order() == index && c.members().intersection_len(kernel.members()) == 1)?;
    Some(FrobeniusData { kernel, complement })
}

pub fn classify_two_frobenius(g: &Group) -> Option<TwoFrobeniusData> {
    classify_two_frobenius_with(g, &structure::normal_subgroups(g))
}

pub fn classify_two_frobenius_with(g: &Group, lattice: &NormalLattice) -> Option<TwoFrobeniusData> {
    let n = g.order();
    for k in lattice.iter().filter(|k| !k.is_trivial() && k.order() < n) {
        let q = structure::quotient_group(g, k).expect("lattice members are normal");
        let Some(qf) = classify_frobenius(&q.group) else {
            continue;
        };
        let preimage = |s: &Subgroup| {
            Subgroup::from_members(BitSet::from_indices(
                n,
                g.elements().filter(|&x| s.contains(q.projection[x])),
            ))
        };
        let kh = preimage(&qf.kernel);
        if !acts_fixed_point_freely(g, k, &kh) {
            continue;
        }
        let index = kh.order() / k.order();
        let Some(h) = kh
            .iter()
            .filter(|&x| g.ord(x) == index)
            .map(|x| g.cyclic(x))
            .find(|c| c.members().intersection_len(k.members()) == 1)
        else {
            continue;
        };
        let l = preimage(&qf.complement);
        let mut x = BitSet::new(n);
        for c in k.iter() {
            x.union_with(g.conjugate_subgroup(&h, c).members());
        }
        return Some(TwoFrobeniusData {
            k: k.clone(),
            h,
            kh,
            l,
            x,
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build, parse_spec};

    fn analysis(s: &str) -> Analysis {
        Analysis::new(build(&parse_spec(s).unwrap()).unwrap())
    }

    #[test]
    fn frobenius_groups() {
        for (name, k) in [("S3", 3), ("D10", 5), ("F20", 5), ("F21", 7), ("D30", 15)] {
            let a = analysis(name);
            let c = a.classification();
            let f = c.frobenius.as_ref().unwrap_or_else(|| panic!("{name} is Frobenius"));
            assert_eq!(f.kernel.order(), k, "{name}");
            assert_eq!(f.complement.order() * k, a.group().order());
            assert!(c.two_frobenius.is_none());
        }
        assert!(analysis("S4").classification().frobenius.is_none());
        assert!(analysis("D8").classification().frobenius.is_none());
    }

    #[test]
    fn two_frobenius_groups() {
        let s4 = analysis("S4");
        let t = s4.classification().two_frobenius.clone().expect("S4 is 2-Frobenius");
        assert_eq!((t.k.order(), t.h.order(), t.l.order()), (4, 3, 8));
        assert_eq!(s4.classification().p_r_condition, Some(true));
        let big = analysis("TwoFrob294");
        let c = big.classification();
        let t = c.two_frobenius.as_ref().expect("2-Frobenius");
        assert_eq!((t.k.order(), t.h.order()), (49, 3));
        assert_eq!((c.pi_h.clone(), c.pi_k.clone()), (vec![3], vec![7]));
        assert_eq!(c.p_r_condition, Some(false));
        assert!(analysis("S3").classification().two_frobenius.is_none());
    }

    #[test]
    fn small_predicates() {
        let s3 = analysis("S3");
        let c = s3.classification();
        assert!(c.a_group && c.cyclic_by_abelian && c.fitting_prime_index);
        assert!(analysis("Q8").classification().involutions_commute);
        assert!(analysis("Q8").classification().dedekind);
        assert!(!analysis("S4").classification().cyclic_by_abelian);
        assert!(!analysis("S3").classification().dedekind);
        assert!(is_dedekind(&build(&parse_spec("Q8").unwrap()).unwrap()));
        assert!(two_frob_p_r_condition(&[], &[]));
        assert!(two_frob_p_r_condition(&[3], &[2]));
        assert!(!two_frob_p_r_condition(&[3], &[7]));
    }
}
