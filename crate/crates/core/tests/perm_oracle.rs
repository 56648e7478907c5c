//! Recomputes graph invariants directly from permutations (no Cayley tables) and
//! compares them with the library.

use std::collections::{HashMap, HashSet, VecDeque};

use normgraph::analysis::Analysis;
use normgraph::builders::{build, parse_permutation_text};
use normgraph::parse_spec;
use normgraph::structure::find_isomorphism;

type P = Vec<u16>;

fn compose(p: &P, q: &P) -> P {
    // apply p, then q
    p.iter().map(|&i| q[i as usize]).collect()
}

fn inverse(p: &P) -> P {
    let mut r = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        r[j as usize] = i as u16;
    }
    r
}

fn closure(gens: &[P]) -> Vec<P> {
    let id: P = (0..gens[0].len() as u16).collect();
    let mut seen: HashSet<P> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = compose(&x, g);
            if seen.insert(y.clone()) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

fn cyclic(x: &P) -> HashSet<P> {
    let mut s = HashSet::new();
    let mut y: P = (0..x.len() as u16).collect();
    loop {
        if !s.insert(y.clone()) {
            return s;
        }
        y = compose(&y, x);
    }
}

/// The graph after deleting universal vertices, by brute force from the definition.
struct Oracle {
    vertices: Vec<P>,
    adj: Vec<Vec<usize>>,
}

impl Oracle {
    fn new(gens: &[P]) -> Oracle {
        let elems = closure(gens);
        let n = elems.len();
        let cyc: Vec<HashSet<P>> = elems.iter().map(cyclic).collect();
        let inv: Vec<P> = elems.iter().map(inverse).collect();
        // arrow[x][y]: y^-1 x y lies in <x>
        let arrow: Vec<Vec<bool>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| cyc[x].contains(&compose(&compose(&inv[y], &elems[x]), &elems[y])))
                    .collect()
            })
            .collect();
        let universal: Vec<bool> = (0..n)
            .map(|a| (0..n).all(|y| arrow[a][y]) && (0..n).all(|x| arrow[x][a]))
            .collect();
        let keep: Vec<usize> = (0..n).filter(|&i| !universal[i]).collect();
        let adj = keep
            .iter()
            .map(|&x| {
                (0..keep.len())
                    .filter(|&j| keep[j] != x && arrow[x][keep[j]])
                    .collect()
            })
            .collect();
        Oracle {
            vertices: keep.iter().map(|&i| elems[i].clone()).collect(),
            adj,
        }
    }

    fn distances(&self, s: usize) -> Vec<Option<usize>> {
        let mut d = vec![None; self.vertices.len()];
        d[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in &self.adj[u] {
                if d[v].is_none() {
                    d[v] = Some(d[u].unwrap() + 1);
                    q.push_back(v);
                }
            }
        }
        d
    }

    /// Component sizes (descending) and the diameter if strongly connected.
    fn summary(&self) -> (Vec<usize>, Option<usize>) {
        let m = self.vertices.len();
        let dist: Vec<Vec<Option<usize>>> = (0..m).map(|s| self.distances(s)).collect();
        let mut comp = vec![usize::MAX; m];
        let mut sizes = Vec::new();
        for u in 0..m {
            if comp[u] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            let mut size = 0;
            for v in 0..m {
                if dist[u][v].is_some() && dist[v][u].is_some() {
                    comp[v] = id;
                    size += 1;
                }
            }
            sizes.push(size);
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let diameter = if sizes.len() <= 1 {
            Some(dist.iter().flatten().map(|d| d.unwrap()).max().unwrap_or(0))
        } else {
            None
        };
        (sizes, diameter)
    }
}

fn perm_from_fn(degree: usize, f: impl Fn(usize) -> usize) -> P {
    (0..degree).map(|i| f(i) as u16).collect()
}

fn cycles(p: &P) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for i in 0..p.len() {
        if seen[i] || p[i] as usize == i {
            continue;
        }
        s.push('(');
        let mut j = i;
        let mut first = true;
        while !seen[j] {
            seen[j] = true;
            if !first {
                s.push(' ');
            }
            s.push_str(&(j + 1).to_string());
            first = false;
            j = p[j] as usize;
        }
        s.push(')');
    }
    if s.is_empty() {
        s.push_str("()");
    }
    s
}

fn library_summary(text: &str) -> (Vec<usize>, Option<usize>, Analysis) {
    let g = parse_permutation_text("oracle", text).unwrap();
    let a = Analysis::new(g);
    let sizes = a.delta_scc().sorted_summary().iter().map(|s| s.0).collect();
    let d = a.delta_scc().diameter;
    (sizes, d, a)
}

fn perm_text(degree: usize, gens: &[P]) -> String {
    let mut s = format!("degree {degree}\n");
    for g in gens {
        s.push_str(&cycles(g));
        s.push('\n');
    }
    s
}

#[test]
fn s4_components() {
    let gens = vec![perm_from_fn(4, |i| [1, 0, 2, 3][i]), perm_from_fn(4, |i| (i + 1) % 4)];
    let (sizes, diam) = Oracle::new(&gens).summary();
    assert_eq!(sizes, vec![15, 2, 2, 2, 2]);
    assert_eq!(diam, None);
    let a = Analysis::new(build(&parse_spec("S4").unwrap()).unwrap());
    let lib: Vec<usize> = a.delta_scc().sorted_summary().iter().map(|s| s.0).collect();
    assert_eq!(lib, sizes);
}

#[test]
fn s3_times_s3_diameter() {
    let gens = vec![
        perm_from_fn(6, |i| [1, 0, 2, 3, 4, 5][i]),
        perm_from_fn(6, |i| [1, 2, 0, 3, 4, 5][i]),
        perm_from_fn(6, |i| [0, 1, 2, 4, 3, 5][i]),
        perm_from_fn(6, |i| [0, 1, 2, 4, 5, 3][i]),
    ];
    let oracle = Oracle::new(&gens);
    let (sizes, diam) = oracle.summary();
    assert_eq!(sizes, vec![35]);
    assert_eq!(diam, Some(3));
    let (lib_sizes, lib_diam, _) = library_summary(&perm_text(6, &gens));
    assert_eq!((lib_sizes, lib_diam), (sizes, diam));
    let a = Analysis::new(build(&parse_spec("prod(S3,S3)").unwrap()).unwrap());
    assert_eq!(a.delta_scc().diameter, Some(3));
}

/// `(C7 x C7) : S3` acting affinely on the plane over F7: translations, the
/// diagonal map diag(2, 4) of order 3, and the coordinate swap.
fn affine_294() -> Vec<P> {
    let pt = |a: usize, b: usize| 7 * (a % 7) + b % 7;
    let on = |f: &dyn Fn(usize, usize) -> usize| perm_from_fn(49, |i| f(i / 7, i % 7));
    vec![
        on(&|a, b| pt(a + 1, b)),
        on(&|a, b| pt(a, b + 1)),
        on(&|a, b| pt(2 * a, 4 * b)),
        on(&|a, b| pt(b, a)),
    ]
}

#[test]
fn two_frobenius_294_diameter() {
    let gens = affine_294();
    let oracle = Oracle::new(&gens);
    assert_eq!(oracle.vertices.len(), 293);
    let (sizes, diam) = oracle.summary();
    assert_eq!(sizes, vec![293]);
    let (lib_sizes, lib_diam, perm_group) = library_summary(&perm_text(49, &gens));
    assert_eq!((lib_sizes, lib_diam), (sizes, diam));
    assert_eq!(diam, Some(4));

    let cat = build(&parse_spec("TwoFrob294").unwrap()).unwrap();
    assert!(find_isomorphism(perm_group.group(), &cat, 1_000_000).is_some());
    assert_eq!(Analysis::new(cat).delta_scc().diameter, Some(4));
}

#[test]
fn frobenius_21_components() {
    // x -> 2x + b on F7
    let gens = vec![perm_from_fn(7, |i| (i + 1) % 7), perm_from_fn(7, |i| (2 * i) % 7)];
    let (sizes, diam) = Oracle::new(&gens).summary();
    assert_eq!(sizes, vec![6, 2, 2, 2, 2, 2, 2, 2]);
    assert_eq!(diam, None);
    let a = Analysis::new(build(&parse_spec("F21").unwrap()).unwrap());
    let lib: Vec<usize> = a.delta_scc().sorted_summary().iter().map(|s| s.0).collect();
    assert_eq!(lib, sizes);
}

#[test]
fn mod16_universal_count() {
    // <x, y> with x an 8-cycle and y acting as x -> x^5, as permutations of Z/8 x Z/2
    let deg = 16;
    let x = perm_from_fn(deg, |i| (i / 8) * 8 + (i % 8 + 1) % 8);
    let y = perm_from_fn(deg, |i| {
        let (k, e) = (i % 8, i / 8);
        ((5 * k) % 8) + 8 * (1 - e)
    });
    let elems = closure(&[x, y]);
    let n = elems.len();
    assert_eq!(n, 16);
    let cyc: Vec<HashSet<P>> = elems.iter().map(cyclic).collect();
    let idx: HashMap<P, usize> = elems.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let arrow = |a: usize, b: usize| {
        let c = compose(&compose(&inverse(&elems[b]), &elems[a]), &elems[b]);
        cyc[a].contains(&c)
    };
    let univ = (0..n).filter(|&a| (0..n).all(|y| arrow(a, y) && arrow(y, a))).count();
    assert_eq!(univ, 6);
    assert_eq!(idx.len(), 16);
}
