//! Permutations on `0..degree`, composed left to right (`i^(ab) = (i^a)^b`).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::Group;

pub type Perm = Vec<u16>;

pub fn identity(degree: usize) -> Perm {
    (0..degree as u16).collect()
}

/// `a` followed by `b`.
pub fn compose(a: &[u16], b: &[u16]) -> Perm {
    a.iter().map(|&i| b[i as usize]).collect()
}

pub fn invert(a: &[u16]) -> Perm {
    let mut out = vec![0u16; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j as usize] = i as u16;
    }
    out
}

/// Parses disjoint-cycle notation with 1-based points, e.g. `(1 2)(3 4)` or `(1,2,3)`.
pub fn parse_cycles(s: &str, degree: usize) -> Result<Perm> {
    let mut p = identity(degree);
    let mut seen = vec![false; degree];
    let mut rest = s.trim();
    if rest.is_empty() || rest == "()" {
        return Ok(p);
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in cycle string {s:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
        let points = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                let v: usize = t
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}")))?;
                if v == 0 || v > degree {
                    return Err(Error::Parse(format!("point {v} outside 1..={degree}")));
                }
                Ok(v - 1)
            })
            .collect::<Result<Vec<usize>>>()?;
        for &v in &points {
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Parse(format!("point {} repeated in {s:?}", v + 1)));
            }
        }
        for (k, &v) in points.iter().enumerate() {
            p[v] = points[(k + 1) % points.len()] as u16;
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(p)
}

/// Disjoint-cycle notation with 1-based points; `()` for the identity.
pub fn format_cycles(p: &[u16]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = p[i] as usize;
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// All elements of the group generated by `gens`, identity first, in BFS order.
pub fn closure(degree: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let id = identity(degree);
    let mut index: HashMap<Perm, usize> = HashMap::new();
    let mut elems = vec![id.clone()];
    index.insert(id, 0);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let x = compose(&elems[i], g);
            if !index.contains_key(&x) {
                if elems.len() >= cap {
                    return Err(Error::OrderCap {
                        order: elems.len() + 1,
                        cap,
                    });
                }
                index.insert(x.clone(), elems.len());
                elems.push(x);
            }
        }
        i += 1;
    }
    Ok(elems)
}

/// Materializes a list of permutations (closed under composition, identity first)
/// as a Cayley table, labelling elements in cycle notation.
pub fn group_from_perms(name: impl Into<String>, elems: &[Perm]) -> Result<Group> {
    let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = elems.len();
    let mut table = Vec::with_capacity(n * n);
    for a in elems {
        for b in elems {
            let c = compose(a, b);
            let k = index
                .get(&c)
                .ok_or_else(|| Error::BadTable("permutation list is not closed".into()))?;
            table.push(*k as u32);
        }
    }
    let labels = elems.iter().map(|p| format_cycles(p)).collect();
    Group::from_flat(name, n, table, Some(labels))
}

/// All permutations of `0..degree` in lexicographic order (identity first).
pub fn all_permutations(degree: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(degree);
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..degree.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..degree).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}
