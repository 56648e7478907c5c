//! Group constructors: the named families, direct and semidirect products, and
//! ingestion of Cayley-table JSON and permutation-generator text files.

use std::collections::VecDeque;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm;

pub const DEFAULT_ORDER_CAP: usize = 4096;
pub const ORDER_CAP_ENV: &str = "NORMGRAPH_ORDER_CAP";

/// Largest group order the builders will materialize.
pub fn order_cap() -> usize {
    std::env::var(ORDER_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v: &usize| v > 0)
        .unwrap_or(DEFAULT_ORDER_CAP)
}

fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::OrderCap { order, cap })
    } else {
        Ok(())
    }
}

/// Automorphism of the normal factor assigned to one generator of the acting group.
///
/// `generator` is an element index of the acting group; `image[n]` is the index of
/// `s n s^-1` in the normal factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorAction {
    pub generator: usize,
    pub image: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of the given order `2n`.
    Dihedral(usize),
    /// Generalized quaternion group of the given order `2^k`, `k >= 3`.
    Quaternion(usize),
    Symmetric(usize),
    /// `<x, y | x^8 = y^2 = 1, x^y = x^5>`.
    Mod16,
    /// `<z> ⋊ Q8` with `z^3 = 1` and `i`, `j` both inverting `z`.
    C3SemidirectQ8,
    /// `(C7 x C7) ⋊ S3`.
    TwoFrob294,
    /// `C7 ⋊ C3`, the Frobenius group of order 21.
    Frobenius21,
    /// `C5 ⋊ C4` with faithful action, the Frobenius group of order 20.
    Frobenius20,
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Semidirect(Box<GroupSpec>, Box<GroupSpec>, Vec<GeneratorAction>),
    CayleyFile(PathBuf),
    PermFile(PathBuf),
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::Product(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Quaternion(n) => write!(f, "Q{n}"),
            GroupSpec::Symmetric(m) => write!(f, "S{m}"),
            GroupSpec::Mod16 => f.write_str("Mod16"),
            GroupSpec::C3SemidirectQ8 => f.write_str("C3xQ8"),
            GroupSpec::TwoFrob294 => f.write_str("TwoFrob294"),
            GroupSpec::Frobenius21 => f.write_str("F21"),
            GroupSpec::Frobenius20 => f.write_str("F20"),
            GroupSpec::Product(a, b) => write!(f, "prod({a},{b})"),
            GroupSpec::Semidirect(a, b, _) => write!(f, "semidirect({a},{b})"),
            GroupSpec::CayleyFile(p) => write!(f, "file:{}", p.display()),
            GroupSpec::PermFile(p) => write!(f, "perm:{}", p.display()),
        }
    }
}

/// Parses the command-line group grammar:
/// `C:n | D:2n | Q:2^k | S:m | Mod16 | C3xQ8 | TwoFrob294 | F21 | F20 | prod(a,b) | file:path | perm:path`.
///
/// Short forms such as `C6`, `D10`, `Q8`, `S4` are accepted as well.
pub fn parse_spec(s: &str) -> Result<GroupSpec> {
    let s = s.trim();
    if let Some(p) = s.strip_prefix("file:") {
        return Ok(GroupSpec::CayleyFile(PathBuf::from(p)));
    }
    if let Some(p) = s.strip_prefix("perm:") {
        return Ok(GroupSpec::PermFile(PathBuf::from(p)));
    }
    if let Some(inner) = s.strip_prefix("prod(").and_then(|r| r.strip_suffix(')')) {
        let split = top_level_comma(inner)
            .ok_or_else(|| Error::Parse(format!("prod needs two arguments: {s:?}")))?;
        let a = parse_spec(&inner[..split])?;
        let b = parse_spec(&inner[split + 1..])?;
        return Ok(GroupSpec::product(a, b));
    }
    match s {
        "Mod16" => return Ok(GroupSpec::Mod16),
        "C3xQ8" | "C3:Q8" => return Ok(GroupSpec::C3SemidirectQ8),
        "TwoFrob294" => return Ok(GroupSpec::TwoFrob294),
        "F21" | "C7:C3" => return Ok(GroupSpec::Frobenius21),
        "F20" | "C5:C4" => return Ok(GroupSpec::Frobenius20),
        _ => {}
    }
    let (family, arg) = s.split_at(s.chars().next().map_or(0, |c| c.len_utf8()));
    let arg = arg.strip_prefix(':').unwrap_or(arg);
    let number = |a: &str| -> Result<usize> {
        if let Some((base, exp)) = a.split_once('^') {
            let base: usize = base.parse().map_err(|_| Error::Parse(format!("bad number in {s:?}")))?;
            let exp: u32 = exp.parse().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            return base
                .checked_pow(exp)
                .ok_or_else(|| Error::Parse(format!("number overflows in {s:?}")));
        }
        a.parse().map_err(|_| Error::Parse(format!("unrecognized group spec {s:?}")))
    };
    match family {
        "C" => Ok(GroupSpec::Cyclic(number(arg)?)),
        "D" => Ok(GroupSpec::Dihedral(number(arg)?)),
        "Q" => Ok(GroupSpec::Quaternion(number(arg)?)),
        "S" => Ok(GroupSpec::Symmetric(number(arg)?)),
        _ => Err(Error::Parse(format!("unrecognized group spec {s:?}"))),
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Builds the group described by `spec`, refusing anything above [`order_cap`].
pub fn build(spec: &GroupSpec) -> Result<Group> {
    build_with_cap(spec, order_cap())
}

pub fn build_with_cap(spec: &GroupSpec, cap: usize) -> Result<Group> {
    let name = spec.to_string();
    let g = match spec {
        GroupSpec::Cyclic(n) => {
            check_cap(*n, cap)?;
            cyclic(*n, "x")?
        }
        GroupSpec::Dihedral(n) => {
            if *n < 2 || n % 2 != 0 {
                return Err(Error::Parse(format!("dihedral order must be even and >= 2, got {n}")));
            }
            check_cap(*n, cap)?;
            let m = n / 2;
            if m == 1 {
                cyclic(2, "y")?
            } else {
                metacyclic(m, 2, m - 1, 0, "x", "y")?
            }
        }
        GroupSpec::Quaternion(n) => {
            if *n < 8 || !n.is_power_of_two() {
                return Err(Error::Parse(format!("quaternion order must be 2^k with k >= 3, got {n}")));
            }
            check_cap(*n, cap)?;
            quaternion(*n, "x", "y")?
        }
        GroupSpec::Symmetric(m) => {
            if *m == 0 || *m > 6 {
                return Err(Error::Parse(format!("symmetric degree must be in 1..=6, got {m}")));
            }
            check_cap((1..=*m).product(), cap)?;
            perm::group_from_perms(name.clone(), &perm::all_permutations(*m))?
        }
        GroupSpec::Mod16 => metacyclic(8, 2, 5, 0, "x", "y")?,
        GroupSpec::C3SemidirectQ8 => c3_semidirect_q8()?,
        GroupSpec::TwoFrob294 => {
            check_cap(294, cap)?;
            two_frob_294()?
        }
        GroupSpec::Frobenius21 => metacyclic(7, 3, 2, 0, "x", "y")?,
        GroupSpec::Frobenius20 => metacyclic(5, 4, 2, 0, "x", "y")?,
        GroupSpec::Product(a, b) => {
            let a = build_with_cap(a, cap)?;
            let b = build_with_cap(b, cap)?;
            check_cap(a.order() * b.order(), cap)?;
            direct_product(&a, &b)
        }
        GroupSpec::Semidirect(n, a, action) => {
            let n = build_with_cap(n, cap)?;
            let a = build_with_cap(a, cap)?;
            check_cap(n.order() * a.order(), cap)?;
            semidirect(&n, &a, action)?
        }
        GroupSpec::CayleyFile(p) => return ingest_cayley_with_cap(p, cap),
        GroupSpec::PermFile(p) => return ingest_permutations_with_cap(p, cap),
    };
    Ok(g.with_name(name))
}

/// `x^k` style word; `1` for the empty word.
fn word(parts: &[(&str, usize)]) -> String {
    let mut s = String::new();
    for &(sym, e) in parts {
        match e {
            0 => {}
            1 => s.push_str(sym),
            _ => s.push_str(&format!("{sym}^{e}")),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

pub fn cyclic(n: usize, sym: &str) -> Result<Group> {
    if n == 0 {
        return Err(Error::Parse("cyclic group order must be positive".into()));
    }
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
        .collect();
    let labels = (0..n).map(|k| word(&[(sym, k)])).collect();
    Group::from_flat(format!("C{n}"), n, table, Some(labels))
}

/// `<x, y | x^m = 1, y^t = x^s, x^y = x^r>` with elements in normal form `x^a y^b`.
pub fn metacyclic(m: usize, t: usize, r: usize, s: usize, xs: &str, ys: &str) -> Result<Group> {
    let r_inv = arith::mod_inverse(r % m, m)
        .ok_or_else(|| Error::InvalidAction(format!("{r} is not a unit modulo {m}")))?;
    if (s * r) % m != s % m {
        return Err(Error::InvalidAction(format!("y does not centralize x^{s}")));
    }
    let n = m * t;
    // r'^b where y x y^-1 = x^r'
    let mut rpow = vec![1usize; t];
    for b in 1..t {
        rpow[b] = rpow[b - 1] * r_inv % m;
    }
    let idx = |a: usize, b: usize| a * t + b;
    let mut table = vec![0u32; n * n];
    for a in 0..m {
        for b in 0..t {
            for c in 0..m {
                for d in 0..t {
                    let mut x = a + c * rpow[b];
                    let mut y = b + d;
                    if y >= t {
                        y -= t;
                        x += s;
                    }
                    table[idx(a, b) * n + idx(c, d)] = idx(x % m, y) as u32;
                }
            }
        }
    }
    let mut labels = vec![String::new(); n];
    for a in 0..m {
        for b in 0..t {
            labels[idx(a, b)] = word(&[(xs, a), (ys, b)]);
        }
    }
    Group::from_flat(format!("metacyclic({m},{t},{r},{s})"), n, table, Some(labels))
}

pub fn quaternion(order: usize, xs: &str, ys: &str) -> Result<Group> {
    let m = order / 2;
    metacyclic(m, 2, m - 1, m / 2, xs, ys)
}

/// Direct product with elements `(a, b)` at index `a * |B| + b`.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let mut table = Vec::with_capacity(n * n);
    for x1 in 0..na {
        for y1 in 0..nb {
            for x2 in 0..na {
                let x = a.mul(x1, x2) * nb;
                for y2 in 0..nb {
                    table.push((x + b.mul(y1, y2)) as u32);
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for x in 0..na {
        for y in 0..nb {
            labels.push(format!("({},{})", a.label(x), b.label(y)));
        }
    }
    Group::from_trusted(format!("prod({},{})", a.name(), b.name()), n, table, Some(labels))
}

/// Checks that `image` is an automorphism of `g`.
pub fn validate_automorphism(g: &Group, image: &[usize]) -> Result<()> {
    let n = g.order();
    if image.len() != n {
        return Err(Error::InvalidAction(format!(
            "map has {} entries for a group of order {n}",
            image.len()
        )));
    }
    let mut hit = vec![false; n];
    for &v in image {
        if v >= n || std::mem::replace(&mut hit[v], true) {
            return Err(Error::InvalidAction("map is not a bijection".into()));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if image[g.mul(a, b)] != g.mul(image[a], image[b]) {
                return Err(Error::InvalidAction(format!(
                    "map does not respect the product of {} and {}",
                    g.label(a),
                    g.label(b)
                )));
            }
        }
    }
    Ok(())
}

/// Extends an assignment `generator -> image` to an endomorphism of `g` and
/// checks that it is an automorphism.
pub fn automorphism_from_generators(g: &Group, assignment: &[(usize, usize)]) -> Result<Vec<usize>> {
    let n = g.order();
    let mut image = vec![usize::MAX; n];
    image[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &(s, t) in assignment {
            let y = g.mul(x, s);
            let iy = g.mul(image[x], t);
            if image[y] == usize::MAX {
                image[y] = iy;
                queue.push_back(y);
            } else if image[y] != iy {
                return Err(Error::InvalidAction(format!(
                    "generator images are inconsistent at {}",
                    g.label(y)
                )));
            }
        }
    }
    if image.contains(&usize::MAX) {
        return Err(Error::InvalidAction("assigned elements do not generate the group".into()));
    }
    validate_automorphism(g, &image)?;
    Ok(image)
}

/// `normal ⋊ acting` where each listed generator `s` of `acting` acts by the given
/// automorphism `n -> s n s^-1`.
///
/// The assignment is extended along the Cayley graph of `acting`; the builder fails
/// unless it defines a homomorphism into the automorphism group.
pub fn semidirect(normal: &Group, acting: &Group, action: &[GeneratorAction]) -> Result<Group> {
    let (nn, na) = (normal.order(), acting.order());
    for a in action {
        if a.generator >= na {
            return Err(Error::InvalidAction(format!("generator {} out of range", a.generator)));
        }
        validate_automorphism(normal, &a.image)?;
    }
    let mut psi: Vec<Option<Vec<usize>>> = vec![None; na];
    psi[0] = Some((0..nn).collect());
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let px = psi[x].clone().expect("assigned");
        for a in action {
            let y = acting.mul(x, a.generator);
            // psi(x s) = psi(x) ∘ psi(s)
            let py: Vec<usize> = a.image.iter().map(|&v| px[v]).collect();
            match &psi[y] {
                None => {
                    psi[y] = Some(py);
                    queue.push_back(y);
                }
                Some(existing) if *existing != py => {
                    return Err(Error::InvalidAction(format!(
                        "action is not a homomorphism (conflict at {})",
                        acting.label(y)
                    )));
                }
                _ => {}
            }
        }
    }
    let psi: Vec<Vec<usize>> = psi
        .into_iter()
        .map(|p| p.ok_or_else(|| Error::InvalidAction("action generators do not generate the acting group".into())))
        .collect::<Result<_>>()?;

    let n = nn * na;
    let mut table = Vec::with_capacity(n * n);
    for n1 in 0..nn {
        for a1 in 0..na {
            for n2 in 0..nn {
                let m = normal.mul(n1, psi[a1][n2]);
                for a2 in 0..na {
                    table.push((m * na + acting.mul(a1, a2)) as u32);
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for x in 0..nn {
        for y in 0..na {
            let (lx, ly) = (normal.label(x), acting.label(y));
            labels.push(match (lx.as_str(), ly.as_str()) {
                ("1", _) => ly,
                (_, "1") => lx,
                _ => format!("{lx}{ly}"),
            });
        }
    }
    Group::from_flat(
        format!("semidirect({},{})", normal.name(), acting.name()),
        n,
        table,
        Some(labels),
    )
}

fn c3_semidirect_q8() -> Result<Group> {
    let c3 = cyclic(3, "z")?;
    let q8 = quaternion(8, "i", "j")?;
    let inversion: Vec<usize> = (0..3).map(|k| c3.inv(k)).collect();
    let gen = |l: &str| q8.find_label(l).expect("generator label");
    semidirect(
        &c3,
        &q8,
        &[
            GeneratorAction { generator: gen("i"), image: inversion.clone() },
            GeneratorAction { generator: gen("j"), image: inversion },
        ],
    )
}

fn two_frob_294() -> Result<Group> {
    let base = direct_product(&cyclic(7, "a")?, &cyclic(7, "b")?);
    let base = {
        // relabel (a^i,b^j) as a^ib^j
        let labels: Vec<String> = (0..49).map(|k| word(&[("a", k / 7), ("b", k % 7)])).collect();
        Group::from_flat("C7xC7", 49, base.table().to_vec(), Some(labels))?
    };
    let s3 = metacyclic(3, 2, 2, 0, "c", "t")?;
    let a = base.find_label("a").expect("a");
    let b = base.find_label("b").expect("b");
    let a2 = base.pow(a, 2);
    let b4 = base.pow(b, 4);
    let c_action = automorphism_from_generators(&base, &[(a, a2), (b, b4)])?;
    let t_action = automorphism_from_generators(&base, &[(a, b), (b, a)])?;
    semidirect(
        &base,
        &s3,
        &[
            GeneratorAction { generator: s3.find_label("c").expect("c"), image: c_action },
            GeneratorAction { generator: s3.find_label("t").expect("t"), image: t_action },
        ],
    )
}

// ---- file formats ----

/// Cayley-table JSON: `{"name": ..., "order": n, "table": [[...]]}` with 0-based indices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CayleyJson {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

pub fn parse_cayley_json(text: &str) -> Result<Group> {
    parse_cayley_json_with_cap(text, order_cap())
}

fn parse_cayley_json_with_cap(text: &str, cap: usize) -> Result<Group> {
    let doc: CayleyJson = serde_json::from_str(text)?;
    if doc.table.len() != doc.order {
        return Err(Error::BadTable(format!(
            "order is {} but the table has {} rows",
            doc.order,
            doc.table.len()
        )));
    }
    check_cap(doc.order, cap)?;
    Group::from_rows(doc.name, &doc.table, doc.labels)
}

pub fn ingest_cayley(path: impl AsRef<Path>) -> Result<Group> {
    ingest_cayley_with_cap(path.as_ref(), order_cap())
}

fn ingest_cayley_with_cap(path: &Path, cap: usize) -> Result<Group> {
    parse_cayley_json_with_cap(&std::fs::read_to_string(path)?, cap)
}

pub fn to_cayley_json(g: &Group) -> CayleyJson {
    CayleyJson {
        name: g.name().to_string(),
        order: g.order(),
        table: g.rows(),
        labels: g.labels().map(|l| l.to_vec()),
    }
}

pub fn export_cayley(g: &Group) -> String {
    serde_json::to_string(&to_cayley_json(g)).expect("serializable")
}

/// Permutation text: `degree N` on the first line, then one generator per line in
/// disjoint-cycle notation with 1-based points. Blank lines and `#` comments are skipped.
pub fn parse_permutation_text(name: &str, text: &str) -> Result<Group> {
    parse_permutation_text_with_cap(name, text, order_cap())
}

fn parse_permutation_text_with_cap(name: &str, text: &str, cap: usize) -> Result<Group> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing 'degree N' line".into()))?;
    let degree: usize = header
        .strip_prefix("degree")
        .map(str::trim)
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| Error::Parse(format!("expected 'degree N', found {header:?}")))?;
    if degree == 0 || degree > u16::MAX as usize {
        return Err(Error::Parse(format!("unsupported degree {degree}")));
    }
    let gens = lines
        .map(|l| perm::parse_cycles(l, degree))
        .collect::<Result<Vec<_>>>()?;
    let elems = perm::closure(degree, &gens, cap)?;
    perm::group_from_perms(name, &elems)
}

pub fn ingest_permutations(path: impl AsRef<Path>) -> Result<Group> {
    ingest_permutations_with_cap(path.as_ref(), order_cap())
}

fn ingest_permutations_with_cap(path: &Path, cap: usize) -> Result<Group> {
    let text = std::fs::read_to_string(path)?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "perm".into());
    parse_permutation_text_with_cap(&name, &text, cap)
}

// ---- catalog ----

/// The built-in groups used by the verification suite, in a fixed order.
pub fn catalog() -> Vec<GroupSpec> {
    use GroupSpec::*;
    let p = GroupSpec::product;
    let mut out: Vec<GroupSpec> = (1..=24).map(Cyclic).collect();
    out.extend((2..=20).map(|n| Dihedral(2 * n)));
    out.extend([
        Quaternion(8),
        Quaternion(16),
        Symmetric(3),
        Symmetric(4),
        Symmetric(5),
        Mod16,
        C3SemidirectQ8,
        TwoFrob294,
        Frobenius21,
        Frobenius20,
        p(Symmetric(3), Symmetric(3)),
        p(Cyclic(3), Symmetric(3)),
        p(Quaternion(8), Dihedral(10)),
        p(Quaternion(8), Quaternion(8)),
        p(Mod16, C3SemidirectQ8),
    ]);
    out
}
