//! Registry of executable statements about normalizing graphs and a runner
//! that evaluates them over groups.
//!
//! Each check has an applicability guard computed from the group's
//! classification and decompositions, never from its name (the only exception
//! is `V24`, which refers to two specific library groups that can only be
//! recognized by the name given when they are ingested).

use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::Analysis;
use crate::arith;
use crate::bitset::BitSet;
use crate::error::Error;
use crate::group::{Group, Subgroup};
use crate::norm_graph;
use crate::structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
    #[serde(rename = "error")]
    Error,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
            Verdict::Error => "error",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub group: String,
    pub verdict: Verdict,
    /// For a failure, the violating elements; for n/a, the reason; for a pass,
    /// a short note on what was examined.
    pub witness: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// Tunables for the heavier checks.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Largest order for the supersolubility-graph containment (`V12`).
    pub supersolubility_order_cap: usize,
    /// Largest order for the quotient-lift check (`V15`).
    pub quotient_lift_order_cap: usize,
    /// Direct decompositions examined per group by the product checks.
    pub max_decompositions: usize,
    /// Candidate assignments tried when testing factors for isomorphism.
    pub isomorphism_budget: usize,
    /// Record wall time per result (makes output nondeterministic).
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            supersolubility_order_cap: 48,
            quotient_lift_order_cap: 48,
            max_decompositions: 8,
            isomorphism_budget: 200_000,
            timing: false,
        }
    }
}

enum Outcome {
    Pass(String),
    NotApplicable(String),
}

enum Fault {
    Fail(String),
    Error(Error),
}

impl From<Error> for Fault {
    fn from(e: Error) -> Self {
        Fault::Error(e)
    }
}

type Eval = std::result::Result<Outcome, Fault>;

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> std::result::Result<(), Fault> {
    if cond {
        Ok(())
    } else {
        Err(Fault::Fail(witness()))
    }
}

fn pass(note: impl Into<String>) -> Eval {
    Ok(Outcome::Pass(note.into()))
}

fn not_applicable(reason: impl Into<String>) -> Eval {
    Ok(Outcome::NotApplicable(reason.into()))
}

/// One registry entry.
pub struct Check {
    pub id: &'static str,
    /// The statement(s) the check encodes.
    pub statement: &'static str,
    pub summary: &'static str,
    eval: fn(&Analysis, &SuiteConfig) -> Eval,
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check").field("id", &self.id).finish()
    }
}

pub fn registry() -> Vec<Check> {
    macro_rules! check {
        ($id:literal, $st:literal, $sum:literal, $f:ident) => {
            Check {
                id: $id,
                statement: $st,
                summary: $sum,
                eval: $f,
            }
        };
    }
    vec![
        check!("V01-complete-iff-dedekind", "Thm. 4.1", "directed graph complete iff Dedekind", v01),
        check!("V02-univ-bounds", "Prop. 3.1, Prop. 3.2, Prop. 3.4", "neighbourhoods, Univ-/Univ+ descriptions, Z <= Univ <= Z2", v02),
        check!("V03-trivial-univ", "Cor. 3.5", "Univ trivial iff center trivial", v03),
        check!("V04-univ-closure", "Lemma 3.7", "Univ closed under powers and conjugation; prime orders; involutions", v04),
        check!("V05-coprime-product", "Lemma 3.8", "commuting coprime universal elements have universal product", v05),
        check!("V06-prime-order-central", "Prop. 3.9", "universal elements of prime order are central", v06),
        check!("V07-product-univ", "Prop. 3.10, Lemma 3.11, Lemma 3.12", "universal sets of direct products", v07),
        check!("V08-theoremA", "Theorem A, Lemma 5.1", "products of non-Dedekind groups: strongly connected, diameter <= 3", v08),
        check!("V09-square", "Prop. 5.2", "H x H with H non-abelian: diameter <= 3 and Univ = Z", v09),
        check!("V10-theoremB", "Theorem B, Cor. 5.6", "soluble, trivial center: disconnected iff Frobenius or 2-Frobenius with p !| r-1", v10),
        check!("V11-theoremC", "Theorem C, Thm. 5.17", "soluble, trivial center: diameter <= 8, or |Fit|+1 components", v11),
        check!("V12-supersoluble", "Prop. 4.2", "undirected graph inside the supersolubility graph", v12),
        check!("V13-complete-nilpotent", "Thm. 4.3", "undirected complete implies class <= 3 and commuting involutions", v13),
        check!("V14-completeness-criteria", "Lemma 4.5, Prop. 4.6, Cor. 4.7", "sufficient conditions for undirected completeness", v14),
        check!("V15-quotient-lift", "Prop. 5.4", "arrows lift from G/N when <x,y> meets N trivially", v15),
        check!("V16-nilpotent-graph", "Thm. 5.5", "connected nilpotent graph implies strong connectivity", v16),
        check!("V17-frobenius", "Prop. 5.7, Lemma 2.2", "Frobenius groups: complements closed under arrows, graph disconnected", v17),
        check!("V18-p-divides-r-1", "Lemma 5.8, Cor. 5.9", "p | r-1 gives an arrow from Z(K) into H", v18),
        check!("V19-two-frobenius-components", "Prop. 5.9, Lemma 2.4", "2-Frobenius: G \\ X in one component; arrows out of X", v19),
        check!("V20-two-frobenius-connectivity", "Prop. 5.10", "2-Frobenius: disconnected iff p !| r-1", v20),
        check!("V21-diameter-6", "Prop. 5.15, Prop. 5.16", "2-Frobenius or soluble A-group, connected: diameter <= 6", v21),
        check!("V22-component-structure", "Thm. 5.19, Prop. 5.20", "components of the disconnected case", v22),
        check!("V23-diameter-refinements", "Prop. 5.18, Prop. 5.21, Cor. 5.22, Prop. 5.23", "diameter <= 5 or <= 4 under extra hypotheses", v23),
        check!("V24-library-groups", "Remarks on SmallGroup(64,28) and SmallGroup(384,591)", "statements about two library groups, when ingested", v24),
    ]
}

/// Evaluates one check. Panics inside a check are reported as `error`.
pub fn run_check(check: &Check, a: &Analysis, config: &SuiteConfig) -> CheckResult {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(|| (check.eval)(a, config)));
    let (verdict, witness) = match outcome {
        Ok(Ok(Outcome::Pass(s))) => (Verdict::Pass, s),
        Ok(Ok(Outcome::NotApplicable(s))) => (Verdict::NotApplicable, s),
        Ok(Err(Fault::Fail(s))) => (Verdict::Fail, s),
        Ok(Err(Fault::Error(e))) => (Verdict::Error, e.to_string()),
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            (Verdict::Error, format!("internal error: {msg}"))
        }
    };
    CheckResult {
        check: check.id.to_string(),
        group: a.group().name().to_string(),
        verdict,
        witness,
        wall_time_ms: config.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    #[serde(rename = "n/a")]
    pub not_applicable: usize,
    pub error: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl SuiteReport {
    /// Exit status: 0 all good, 1 some check failed, 2 some check errored.
    pub fn exit_code(&self) -> i32 {
        if self.summary.error > 0 {
            2
        } else if self.summary.fail > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let _ = write!(s, "{:<6} {:<34} {}", r.verdict.as_str(), r.check, r.group);
            if !r.witness.is_empty() {
                let _ = write!(s, "  [{}]", r.witness);
            }
            if let Some(t) = r.wall_time_ms {
                let _ = write!(s, "  ({t:.1} ms)");
            }
            s.push('\n');
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "summary: {} pass, {} fail, {} n/a, {} error",
            m.pass, m.fail, m.not_applicable, m.error
        );
        s
    }
}

/// Runs every check on every group. Groups are analysed first (in parallel), then
/// the (group, check) cells are evaluated concurrently; results keep group order,
/// then registry order.
pub fn run_suite(checks: &[Check], groups: &[Analysis], config: &SuiteConfig) -> SuiteReport {
    groups.par_iter().for_each(Analysis::warm);
    let cells: Vec<(usize, usize)> = (0..groups.len())
        .flat_map(|g| (0..checks.len()).map(move |c| (g, c)))
        .collect();
    let results: Vec<CheckResult> = cells
        .par_iter()
        .map(|&(g, c)| run_check(&checks[c], &groups[g], config))
        .collect();
    let mut summary = Summary::default();
    for r in &results {
        match r.verdict {
            Verdict::Pass => summary.pass += 1,
            Verdict::Fail => summary.fail += 1,
            Verdict::NotApplicable => summary.not_applicable += 1,
            Verdict::Error => summary.error += 1,
        }
    }
    SuiteReport { results, summary }
}

// ---------------------------------------------------------------------------
// coverage

/// How a statement is handled.
#[derive(Clone, Debug, Serialize)]
pub struct CoverageEntry {
    pub statement: &'static str,
    pub topic: &'static str,
    /// Check id(s), or `out of scope`.
    pub status: &'static str,
}

pub fn coverage() -> Vec<CoverageEntry> {
    macro_rules! row {
        ($st:literal, $topic:literal, $status:literal) => {
            CoverageEntry {
                statement: $st,
                topic: $topic,
                status: $status,
            }
        };
    }
    vec![
        row!("Lemma 2.2", "normalizers of complement elements stay in H", "V17"),
        row!("Def. 2.3", "2-Frobenius groups", "classifier (classify_two_frobenius)"),
        row!("Lemma 2.4", "H cyclic of odd order; C_K(g) != 1; X from K-conjugates", "V19"),
        row!("Prop. 3.1", "N+(x) = N(<x>); Univ- and C(x) inside N-(x)", "V02"),
        row!("Prop. 3.2", "Univ- and Univ+ descriptions", "V02"),
        row!("Prop. 3.4", "Z <= Univ <= Z2", "V02"),
        row!("Cor. 3.5", "Univ = 1 iff Z = 1", "V03"),
        row!("Example 3.6", "modular group of order 16", "V02, V04, V14; acceptance criterion 1"),
        row!("Lemma 3.7", "powers, conjugates, prime orders, involutions", "V04"),
        row!("Lemma 3.8", "coprime commuting product", "V05"),
        row!("Prop. 3.9", "prime order universal elements are central", "V06"),
        row!("Prop. 3.10", "Univ of direct products", "V07"),
        row!("Lemma 3.11", "(x,1) not universal", "V07"),
        row!("Lemma 3.12", "products of universal coordinates", "V07"),
        row!("Thm. 4.1", "complete iff Dedekind", "V01"),
        row!("Prop. 4.2", "inside the supersolubility graph", "V12"),
        row!("Thm. 4.3", "complete undirected graph: class <= 3, involutions commute", "V13"),
        row!("Lemma 4.5", "criterion for <x> normal", "V14"),
        row!("Prop. 4.6", "criterion for undirected completeness", "V14"),
        row!("Cor. 4.7", "Baer norm of prime index", "V14"),
        row!("Remark (SmallGroup(64,28))", "complete without the criterion", "V24 (needs ingested table)"),
        row!("Lemma 5.1", "paths of length <= 3 in products", "V08"),
        row!("Theorem A", "products of non-Dedekind groups", "V08"),
        row!("Example (C3 x S3, Q8 x D10)", "Dedekind factor: disconnected", "acceptance criterion 3"),
        row!("Example 5.3", "S3 x S3 has diameter 3", "V09; acceptance criterion 4"),
        row!("Remark (Mod16 x C3:Q8)", "|Z| = 8, |Univ| = 12, product 24", "V07; acceptance criterion 5"),
        row!("Prop. 5.2", "H x H", "V09"),
        row!("Prop. 5.4", "quotient lift", "V15"),
        row!("Thm. 5.5", "nilpotent graph connected", "V16"),
        row!("Cor. 5.6", "disconnected implies Frobenius or 2-Frobenius", "V10"),
        row!("Prop. 5.7", "Frobenius groups are disconnected", "V17"),
        row!("Lemma 5.8", "p | r-1 gives k -> h", "V18"),
        row!("Cor. 5.9", "Z(K) reaches H^g in 2 steps", "V18"),
        row!("Prop. 5.9", "2-Frobenius components", "V19"),
        row!("Prop. 5.10", "2-Frobenius disconnected iff p !| r-1", "V20"),
        row!("Theorem B", "soluble, trivial center: disconnection", "V10"),
        row!("Prop. 5.15", "2-Frobenius connected: diameter <= 6", "V21"),
        row!("Prop. 5.16", "soluble A-group: diameter <= 6", "V21"),
        row!("Thm. 5.17", "diameter <= 8", "V11 (upper bound only; sharpness open)"),
        row!("Remark (diameter 6 example)", "cited soluble group with diameter 6", "out of scope: the group is not given explicitly"),
        row!("Theorem C", "diameter and component structure", "V11, V22"),
        row!("Thm. 5.19", "|Fit|+1 components", "V11, V22"),
        row!("Prop. 5.20", "components of diameter 1", "V22"),
        row!("Prop. 5.18", "pi(K) = pi(L) refinement: diameter <= 5", "V23"),
        row!("Prop. 5.21", "cyclic-by-abelian: diameter <= 4", "V23"),
        row!("Cor. 5.22", "cyclic Fitting subgroup: diameter <= 4", "V23"),
        row!("Prop. 5.23", "Fitting subgroup of prime index: diameter <= 4", "V23"),
        row!("Remark (SmallGroup(384,591))", "sharpness of the prime-index bound", "V24 (needs ingested table)"),
        row!("Proofs", "all proofs; infinite groups", "out of scope"),
    ]
}

pub fn coverage_table() -> String {
    let rows = coverage();
    let w0 = rows.iter().map(|r| r.statement.len()).max().unwrap_or(0);
    let w1 = rows.iter().map(|r| r.topic.len()).max().unwrap_or(0);
    let mut s = String::new();
    let _ = writeln!(s, "{:<w0$}  {:<w1$}  check", "statement", "topic");
    for r in rows {
        let _ = writeln!(s, "{:<w0$}  {:<w1$}  {}", r.statement, r.topic, r.status);
    }
    s
}

// ---------------------------------------------------------------------------
// helpers

fn lab(g: &Group, x: usize) -> String {
    g.label(x)
}

fn labs<I: IntoIterator<Item = usize>>(g: &Group, xs: I) -> String {
    let v: Vec<String> = xs.into_iter().map(|x| g.label(x)).collect();
    format!("{{{}}}", v.join(", "))
}

fn first_outside(a: &BitSet, b: &BitSet) -> Option<usize> {
    a.iter().find(|&x| !b.contains(x))
}

fn nontrivial(a: &Analysis) -> bool {
    a.group().order() > 1
}

/// Soluble with trivial center, order > 1.
fn soluble_centerless(a: &Analysis) -> bool {
    let c = a.classification();
    nontrivial(a) && c.soluble && c.trivial_center
}

fn product_set(g: &Group, s: &BitSet, t: &BitSet) -> BitSet {
    let mut out = BitSet::new(g.order());
    for x in s.iter() {
        for y in t.iter() {
            out.insert(g.mul(x, y));
        }
    }
    out
}

/// A direct factor viewed as a group of its own, with its invariants pushed back
/// into the ambient group.
struct Factor {
    analysis: Analysis,
    embed: Vec<usize>,
    n: usize,
}

impl Factor {
    fn new(a: &Analysis, s: &Subgroup, name: &str) -> Factor {
        let (group, embed) = a.group().subgroup_as_group(s, name);
        Factor {
            analysis: Analysis::new(group),
            embed,
            n: a.group().order(),
        }
    }

    fn lift(&self, set: &BitSet) -> BitSet {
        BitSet::from_indices(self.n, set.iter().map(|i| self.embed[i]))
    }

    fn univ(&self) -> BitSet {
        self.lift(&self.analysis.univ().univ)
    }

    fn univ_plus(&self) -> BitSet {
        self.lift(self.analysis.univ().univ_plus.members())
    }

    fn univ_minus(&self) -> BitSet {
        self.lift(&self.analysis.univ().univ_minus)
    }

    fn center(&self) -> BitSet {
        self.lift(self.analysis.center().members())
    }

    fn members(&self) -> BitSet {
        BitSet::from_indices(self.n, self.embed.iter().copied())
    }

    fn dedekind(&self) -> bool {
        self.analysis.classification().dedekind
    }

    fn abelian(&self) -> bool {
        self.analysis.classification().abelian
    }
}

struct Decomposition {
    a: Factor,
    b: Factor,
    /// `parts[g] = (a, b)` with `g = a b`.
    parts: Vec<(usize, usize)>,
}

fn decompositions(a: &Analysis, config: &SuiteConfig) -> Vec<Decomposition> {
    let g = a.group();
    a.decompositions()
        .iter()
        .take(config.max_decompositions)
        .map(|(sa, sb)| {
            let mut parts = vec![(0, 0); g.order()];
            for x in sa.iter() {
                for y in sb.iter() {
                    parts[g.mul(x, y)] = (x, y);
                }
            }
            Decomposition {
                a: Factor::new(a, sa, "H"),
                b: Factor::new(a, sb, "K"),
                parts,
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// checks

fn v01(a: &Analysis, _: &SuiteConfig) -> Eval {
    let complete = a.gamma().is_complete(true);
    let dedekind = a.classification().dedekind;
    let g = a.group();
    if dedekind {
        ensure(complete, || "Dedekind but the directed graph is not complete".into())?;
    } else {
        ensure(!complete, || "complete directed graph but not Dedekind".into())?;
        let x = a.univ().univ_minus.complement().first().expect("non-Dedekind");
        let y = first_outside(&BitSet::full(g.order()), a.normalizers().normalizer(x).members())
            .expect("<x> not normal");
        ensure(!a.gamma().has_edge(x, y), || "missing-arrow witness disagrees".into())?;
        return pass(format!("not Dedekind; no arrow {} -> {}", lab(g, x), lab(g, y)));
    }
    pass(format!("dedekind={dedekind}, complete={complete}"))
}

fn v02(a: &Analysis, _: &SuiteConfig) -> Eval {
    let g = a.group();
    let n = g.order();
    let u = a.univ();
    let t = a.normalizers();
    let gamma = a.gamma();
    // The graph rows come from normalizers; compare with the definition
    // <x> normal in <x,y> directly on small groups.
    for x in g.elements().take_while(|_| n <= 64) {
        let cx = t.cyclic(x);
        for y in g.elements() {
            let h = g.generate(&[x, y]);
            let normal = g.is_normal_in(cx, &h)?;
            ensure(normal == t.arrow(x, y), || {
                format!("arrow {} -> {} disagrees with normality in <x,y>", lab(g, x), lab(g, y))
            })?;
        }
    }
    // Prop. 3.1(ii)
    for x in g.elements() {
        let nm = t.n_minus(x);
        let c = g.centralizer_of_set([x]);
        ensure(u.univ_minus.is_subset(&nm) && c.members().is_subset(&nm), || {
            format!("N-({}) misses Univ- or C(x)", lab(g, x))
        })?;
    }
    // Prop. 3.2 from the graph: full out-rows and full in-rows
    let backward = BitSet::from_indices(n, (0..n).filter(|&x| gamma.out_neighbors(x).len() == n - 1));
    let forward = BitSet::from_indices(n, (0..n).filter(|&x| gamma.in_neighbors(x).len() == n - 1));
    ensure(backward == u.univ_minus, || {
        format!("universal backward vertices differ from <a> normal: {}", labs(g, backward.difference(&u.univ_minus).union(&u.univ_minus.difference(&backward)).iter()))
    })?;
    ensure(&forward == u.univ_plus.members(), || "universal forward vertices differ from the Baer norm".into())?;
    // Prop. 3.4
    let z = a.center().members();
    let z2 = a.series().second_center().members();
    if let Some(x) = first_outside(z, &u.univ) {
        return Err(Fault::Fail(format!("central {} not universal", lab(g, x))));
    }
    if let Some(x) = first_outside(&u.univ, z2) {
        return Err(Fault::Fail(format!("universal {} outside Z2", lab(g, x))));
    }
    pass(format!("|Z|={} |Univ|={} |Z2|={}", z.len(), u.univ.len(), z2.len()))
}

fn v03(a: &Analysis, _: &SuiteConfig) -> Eval {
    let ut = a.univ().univ.len() == 1;
    let zt = a.center().is_trivial();
    ensure(!ut || zt, || "Univ trivial but center nontrivial".into())?;
    ensure(!zt || ut, || format!("center trivial but |Univ|={}", a.univ().univ.len()))?;
    pass(format!("Univ trivial={ut}, Z trivial={zt}"))
}

fn v04(a: &Analysis, _: &SuiteConfig) -> Eval {
    let g = a.group();
    let u = &a.univ().univ;
    if u.len() == 1 {
        return not_applicable("Univ is trivial");
    }
    for x in u.iter() {
        for m in 0..g.ord(x) as i64 {
            let p = g.pow(x, m);
            ensure(u.contains(p), || format!("{} universal, power {} not", lab(g, x), lab(g, p)))?;
        }
        for h in g.elements() {
            let c = g.conj(x, h);
            ensure(u.contains(c), || format!("{} universal, conjugate {} not", lab(g, x), lab(g, c)))?;
        }
        for p in arith::prime_divisors(g.ord(x)) {
            ensure(u.iter().any(|y| g.ord(y) == p), || {
                format!("{} universal but no universal element of order {p}", lab(g, x))
            })?;
        }
        if g.ord(x) == 2 {
            ensure(!a.center().is_trivial(), || format!("universal involution {} with Z = 1", lab(g, x)))?;
        }
    }
    pass(format!("|Univ|={}", u.len()))
}

fn v05(a: &Analysis, _: &SuiteConfig) -> Eval {
    let g = a.group();
    let u = &a.univ().univ;
    if u.len() == 1 {
        return not_applicable("Univ is trivial");
    }
    let mut pairs = 0;
    for x in u.iter() {
        for y in u.iter() {
            if arith::gcd(g.ord(x), g.ord(y)) == 1 && g.commute(x, y) {
                pairs += 1;
                let p = g.mul(x, y);
                ensure(u.contains(p), || format!("{} * {} = {} not universal", lab(g, x), lab(g, y), lab(g, p)))?;
            }
        }
    }
    pass(format!("{pairs} qualifying pairs"))
}

fn v06(a: &Analysis, _: &SuiteConfig) -> Eval {
    let g = a.group();
    let u = &a.univ().univ;
    if u.len() == 1 {
        return not_applicable("Univ is trivial");
    }
    let z = a.center();
    let mut count = 0;
    for x in u.iter().filter(|&x| arith::is_prime(g.ord(x))) {
        count += 1;
        ensure(z.contains(x), || format!("{} of prime order is universal but not central", lab(g, x)))?;
    }
    pass(format!("{count} universal elements of prime order"))
}

fn v07(a: &Analysis, config: &SuiteConfig) -> Eval {
    let g = a.group();
    let decs = decompositions(a, config);
    if decs.is_empty() {
        return not_applicable("no direct decomposition");
    }
    let u = a.univ();
    let plus = u.univ_plus.members();
    for d in &decs {
        let tag = format!("|H|={} |K|={}", d.a.analysis.group().order(), d.b.analysis.group().order());
        let up = product_set(g, &d.a.univ_plus(), &d.b.univ_plus());
        let um = product_set(g, &d.a.univ_minus(), &d.b.univ_minus());
        let uu = product_set(g, &d.a.univ(), &d.b.univ());
        if let Some(x) = first_outside(plus, &up) {
            return Err(Fault::Fail(format!("{tag}: (i) {} in Univ+(G) only", lab(g, x))));
        }
        if let Some(x) = first_outside(&u.univ_minus, &um) {
            return Err(Fault::Fail(format!("{tag}: (ii) {} in Univ-(G) only", lab(g, x))));
        }
        if let Some(x) = first_outside(&u.univ, &uu) {
            return Err(Fault::Fail(format!("{tag}: (iii) {} in Univ(G) only", lab(g, x))));
        }
        let coprime = arith::gcd(d.a.analysis.group().order(), d.b.analysis.group().order()) == 1;
        let central = d.a.analysis.univ().univ_equals_center && d.b.analysis.univ().univ_equals_center;
        if coprime || central {
            ensure(uu == u.univ, || {
                format!("{tag}: ({}) equality fails at {}", if coprime { "iv" } else { "v" },
                    lab(g, first_outside(&uu, &u.univ).expect("strict")))
            })?;
        }
        // Lemma 3.11, both orientations
        for (h, k) in [(&d.a, &d.b), (&d.b, &d.a)] {
            if h.abelian() {
                continue;
            }
            let hz = h.center();
            let k_orders: Vec<usize> = k.members().iter().map(|y| g.ord(y)).collect();
            for x in h.univ().iter().filter(|&x| !hz.contains(x)) {
                let blocked = h
                    .members()
                    .iter()
                    .any(|y| g.conj(y, x) != y && k_orders.contains(&g.ord(y)));
                if blocked {
                    ensure(!u.univ.contains(x), || format!("{tag}: Lemma 3.11 fails, {} universal in G", lab(g, x)))?;
                }
            }
        }
        // Lemma 3.12
        let ha = d.a.members();
        let hb = d.b.members();
        for x in u.univ.intersection(&ha).iter() {
            for y in u.univ.intersection(&hb).iter() {
                let p = g.mul(x, y);
                ensure(plus.contains(p), || format!("{tag}: Lemma 3.12(i) fails at {}", lab(g, p)))?;
            }
        }
        for x in d.a.univ().union(&d.b.univ()).iter() {
            ensure(u.univ_minus.contains(x), || format!("{tag}: Lemma 3.12(ii)/(iii) fails at {}", lab(g, x)))?;
        }
        let _ = &d.parts;
    }
    pass(format!("{} decomposition(s)", decs.len()))
}

fn v08(a: &Analysis, config: &SuiteConfig) -> Eval {
    let g = a.group();
    let decs: Vec<Decomposition> = decompositions(a, config)
        .into_iter()
        .filter(|d| !d.a.dedekind() && !d.b.dedekind())
        .collect();
    if decs.is_empty() {
        return not_applicable("not a product of two non-Dedekind groups");
    }
    let u = &a.univ().univ;
    let delta = a.delta();
    let dist = a.delta_distances();
    let mut notes = Vec::new();
    for d in &decs {
        // Lemma 5.1
        for v in 0..delta.vertex_count() {
            let x = delta.element(v);
            let (p, q) = d.parts[x];
            if u.contains(p) && u.contains(q) {
                continue;
            }
            if let Some((w, far)) = dist.row(v).enumerate().find(|(_, e)| e.is_none_or(|e| e > 3)) {
                return Err(Fault::Fail(format!(
                    "Lemma 5.1: distance {} -> {} is {:?}",
                    lab(g, x),
                    lab(g, delta.element(w)),
                    far
                )));
            }
        }
        let cond_i = product_set(g, &d.a.univ(), &d.b.univ()) == *u;
        let cond_ii = u.intersection(&d.a.members()) == d.a.center();
        let cond_iii = u.intersection(&d.b.members()) == d.b.center();
        if cond_i || cond_ii || cond_iii {
            let scc = a.delta_scc();
            ensure(scc.strongly_connected, || {
                format!("conditions (i/ii/iii)=({cond_i},{cond_ii},{cond_iii}) hold but the graph is disconnected")
            })?;
            let diam = scc.diameter.expect("strongly connected");
            ensure(diam <= 3, || format!("diameter {diam} > 3"))?;
            notes.push(format!("conditions ({cond_i},{cond_ii},{cond_iii}), diameter {diam}"));
        } else {
            notes.push("conditions fail; Lemma 5.1 only".into());
        }
    }
    pass(notes.join("; "))
}

fn v09(a: &Analysis, config: &SuiteConfig) -> Eval {
    let decs: Vec<Decomposition> = decompositions(a, config)
        .into_iter()
        .filter(|d| {
            !d.a.abelian()
                && structure::find_isomorphism(d.a.analysis.group(), d.b.analysis.group(), config.isomorphism_budget)
                    .is_some()
        })
        .collect();
    if decs.is_empty() {
        return not_applicable("not H x H with H non-abelian");
    }
    let scc = a.delta_scc();
    ensure(scc.strongly_connected, || "H x H but the graph is disconnected".into())?;
    let diam = scc.diameter.expect("connected");
    ensure(diam <= 3, || format!("diameter {diam} > 3"))?;
    ensure(a.univ().univ_equals_center, || {
        let g = a.group();
        format!("Univ != Z, e.g. {}", lab(g, first_outside(&a.univ().univ, a.center().members()).unwrap_or(0)))
    })?;
    pass(format!("diameter {diam}, Univ = Z"))
}

fn v10(a: &Analysis, _: &SuiteConfig) -> Eval {
    if !soluble_centerless(a) {
        return not_applicable("not soluble with trivial center");
    }
    let c = a.classification();
    let disconnected = !a.delta_scc().strongly_connected;
    let frob = c.frobenius.is_some();
    let two = c.two_frobenius.is_some();
    let predicted = frob || (two && c.p_r_condition == Some(true));
    if disconnected {
        ensure(frob || two, || "disconnected but neither Frobenius nor 2-Frobenius (Cor. 5.6)".into())?;
        ensure(predicted, || "disconnected but the 2-Frobenius condition p !| r-1 fails".into())?;
    } else {
        ensure(!predicted, || {
            format!("connected although {}", if frob { "Frobenius" } else { "2-Frobenius with p !| r-1" })
        })?;
    }
    pass(format!("disconnected={disconnected}, frobenius={frob}, 2-frobenius={two}"))
}

fn v11(a: &Analysis, _: &SuiteConfig) -> Eval {
    if !soluble_centerless(a) {
        return not_applicable("not soluble with trivial center");
    }
    let scc = a.delta_scc();
    if let Some(d) = scc.diameter {
        ensure(d <= 8, || format!("diameter {d} > 8"))?;
        return pass(format!("connected, diameter {d}"));
    }
    let fit = a.fitting().order();
    ensure(scc.count() == fit + 1, || format!("{} components, |Fit|+1 = {}", scc.count(), fit + 1))?;
    let mut diams = scc.component_diameters().to_vec();
    diams.sort_unstable_by(|x, y| y.cmp(x));
    ensure(diams[0] <= 6, || format!("largest component diameter {}", diams[0]))?;
    ensure(diams[1..].iter().all(|&d| d <= 2), || format!("component diameters {diams:?}"))?;
    pass(format!("{} components, diameters {:?}", scc.count(), diams))
}

fn v12(a: &Analysis, config: &SuiteConfig) -> Eval {
    let g = a.group();
    if g.order() > config.supersolubility_order_cap {
        return not_applicable(format!("order above cap {}", config.supersolubility_order_cap));
    }
    let ss = norm_graph::supersolubility_graph(g);
    let ug = a.gamma().undirected();
    for x in g.elements() {
        if let Some(y) = first_outside(ug.out_neighbors(x), ss.out_neighbors(x)) {
            return Err(Fault::Fail(format!("{} -- {} not supersoluble", lab(g, x), lab(g, y))));
        }
    }
    pass(format!("{} undirected edges", ug.edge_count() / 2))
}

fn v13(a: &Analysis, _: &SuiteConfig) -> Eval {
    if !a.gamma().is_complete(false) {
        return not_applicable("undirected graph not complete");
    }
    let c = a.classification();
    let class = c.nilpotency_class;
    ensure(class.is_some_and(|k| k <= 3), || format!("nilpotency class {class:?}"))?;
    ensure(c.involutions_commute, || "two involutions do not commute".into())?;
    pass(format!("class {}", class.unwrap_or(0)))
}

fn v14(a: &Analysis, _: &SuiteConfig) -> Eval {
    let g = a.group();
    let n = g.order();
    if a.classification().dedekind {
        return not_applicable("Dedekind (Univ+ = G)");
    }
    let plus = &a.univ().univ_plus;
    // coset[y] identifies y Univ+
    let mut coset = vec![usize::MAX; n];
    let mut cosets = 0;
    for y in 0..n {
        if coset[y] == usize::MAX {
            for p in plus.iter() {
                coset[g.mul(y, p)] = cosets;
            }
            cosets += 1;
        }
    }
    let outside: Vec<usize> = (0..n).filter(|&y| !plus.contains(y)).collect();
    let mut all_hyp = true;
    let mut hits = 0;
    for &x in &outside {
        let mut reached = BitSet::new(cosets);
        for c in g.centralizer_of_set([x]).iter() {
            reached.insert(coset[c]);
        }
        let hyp = outside.iter().all(|&y| reached.contains(coset[y]));
        if hyp {
            hits += 1;
            ensure(a.univ().univ_minus.contains(x), || format!("Lemma 4.5: <{}> not normal", lab(g, x)))?;
        }
        all_hyp &= hyp;
    }
    let complete = a.gamma().is_complete(false);
    if all_hyp {
        ensure(complete, || "Prop. 4.6 hypothesis holds but the graph is not complete".into())?;
    }
    let index = cosets;
    if arith::is_prime(index) {
        ensure(complete, || format!("Univ+ has prime index {index} but the graph is not complete"))?;
    }
    pass(format!("|G:Univ+|={index}, {hits} elements meet the Lemma 4.5 hypothesis"))
}

fn v15(a: &Analysis, config: &SuiteConfig) -> Eval {
    let g = a.group();
    let n = g.order();
    if n > config.quotient_lift_order_cap {
        return not_applicable(format!("order above cap {}", config.quotient_lift_order_cap));
    }
    let normals: Vec<&Subgroup> = a.lattice().iter().filter(|s| !s.is_trivial() && s.order() < n).collect();
    if normals.is_empty() {
        return not_applicable("no proper nontrivial normal subgroup");
    }
    let generated: Vec<Subgroup> = (0..n * n).map(|i| g.generate(&[i / n, i % n])).collect();
    let t = a.normalizers();
    let mut lifted = 0;
    for nsub in normals {
        let q = structure::quotient_group(g, nsub)?;
        let qt = norm_graph::NormalizerTable::new(&q.group);
        for x in 0..n {
            for y in 0..n {
                if generated[x * n + y].members().intersection_len(nsub.members()) != 1 {
                    continue;
                }
                if qt.arrow(q.projection[x], q.projection[y]) {
                    lifted += 1;
                    ensure(t.arrow(x, y), || {
                        format!("|N|={}: {}N -> {}N but not {} -> {}", nsub.order(), lab(g, x), lab(g, y), lab(g, x), lab(g, y))
                    })?;
                }
            }
        }
    }
    pass(format!("{lifted} lifted arrows"))
}

fn v16(a: &Analysis, _: &SuiteConfig) -> Eval {
    if !(nontrivial(a) && a.classification().trivial_center) {
        return not_applicable("center nontrivial");
    }
    let nil = a.nilpotent_graph();
    let nil_connected = nil.is_strongly_connected();
    let strong = a.delta_scc().strongly_connected;
    if nil_connected {
        ensure(strong, || "nilpotent graph connected but the directed graph is not".into())?;
    }
    pass(format!("nilpotent graph connected={nil_connected}, strongly connected={strong}"))
}

/// The distinct conjugates of `h`, in order of first appearance.
fn conjugates(g: &Group, h: &Subgroup) -> Vec<Subgroup> {
    let mut out: Vec<Subgroup> = Vec::new();
    for x in g.elements() {
        let c = g.conjugate_subgroup(h, x);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn without_identity(s: &Subgroup) -> BitSet {
    let mut m = s.members().clone();
    m.remove(0);
    m
}

fn v17(a: &Analysis, _: &SuiteConfig) -> Eval {
    let Some(f) = &a.classification().frobenius else {
        return not_applicable("not Frobenius");
    };
    let g = a.group();
    let t = a.normalizers();
    let delta = a.delta();
    let conj = conjugates(g, &f.complement);
    let mut covered = BitSet::new(g.order());
    for hg in &conj {
        for x in g.elements().filter(|&x| !hg.contains(x)) {
            let meet = g.conjugate_subgroup(hg, x).meet(hg);
            if g.conjugate_subgroup(hg, x) != *hg {
                ensure(meet.is_trivial(), || format!("H meets a conjugate nontrivially (by {})", lab(g, x)))?;
            }
        }
        for h in hg.iter().filter(|&h| h != 0) {
            ensure(t.normalizer(h).is_subset(hg), || format!("Lemma 2.2: N(<{}>) leaves H", lab(g, h)))?;
        }
        let set = delta.vertex_set(without_identity(hg).iter());
        ensure(delta.is_sink_set(&set), || format!("an arrow leaves {}", labs(g, without_identity(hg).iter())))?;
        covered.union_with(&without_identity(hg));
    }
    let kernel_rest = BitSet::full(g.order()).difference(&covered);
    ensure(&kernel_rest == f.kernel.members(), || "K is not G minus the complement conjugates".into())?;
    ensure(!a.delta_scc().strongly_connected, || "Frobenius but strongly connected".into())?;
    pass(format!("{} complement conjugates, each closed under arrows", conj.len()))
}

fn center_of(g: &Group, k: &Subgroup) -> Subgroup {
    g.centralizer_of_set(k.iter()).meet(k)
}

fn v18(a: &Analysis, _: &SuiteConfig) -> Eval {
    let c = a.classification();
    let g = a.group();
    let (k, h, frob) = match (&c.frobenius, &c.two_frobenius) {
        (Some(f), _) if g.ord(f.complement.iter().max_by_key(|&x| g.ord(x)).unwrap()) == f.complement.order() => {
            (&f.kernel, &f.complement, true)
        }
        (_, Some(t)) => (&t.k, &t.h, false),
        _ => return not_applicable("no normal nilpotent K with cyclic complement H"),
    };
    let pairs: Vec<(usize, usize)> = c
        .pi_h
        .iter()
        .flat_map(|&p| c.pi_k.iter().map(move |&r| (p, r)))
        .filter(|&(p, r)| (r - 1) % p == 0)
        .collect();
    if pairs.is_empty() {
        return not_applicable("no p in pi(H), r in pi(K) with p | r-1");
    }
    let t = a.normalizers();
    let zk = center_of(g, k);
    let found = zk
        .iter()
        .filter(|&z| z != 0)
        .find_map(|z| h.iter().find(|&y| y != 0 && t.arrow(z, y)).map(|y| (z, y)));
    let Some((z, y)) = found else {
        return Err(Fault::Fail(format!("no arrow from Z(K) to H for (p,r) in {pairs:?}")));
    };
    if frob {
        for hg in conjugates(g, h) {
            let targets: Vec<usize> = hg.iter().filter(|&x| x != 0).collect();
            let ok = zk.iter().filter(|&z| z != 0).any(|z| {
                targets.iter().all(|&x| a.delta_distance(z, x).is_some_and(|d| d <= 2))
            });
            ensure(ok, || format!("Cor. 5.9: no element of Z(K) reaches {} in 2 steps", labs(g, targets.iter().copied())))?;
        }
    }
    pass(format!("{} -> {}", lab(g, z), lab(g, y)))
}

fn v19(a: &Analysis, _: &SuiteConfig) -> Eval {
    let Some(t) = &a.classification().two_frobenius else {
        return not_applicable("not 2-Frobenius");
    };
    let g = a.group();
    let nt = a.normalizers();
    // Lemma 2.4
    ensure(t.h.order() % 2 == 1, || format!("|H| = {} is even", t.h.order()))?;
    ensure(t.h.iter().any(|x| g.ord(x) == t.h.order()), || "H not cyclic".into())?;
    let mut xg = BitSet::new(g.order());
    for x in g.elements() {
        xg.union_with(g.conjugate_subgroup(&t.h, x).members());
    }
    ensure(xg == t.x, || "union of G-conjugates of H differs from union of K-conjugates".into())?;
    let outside_kh: Vec<usize> = g.elements().filter(|&x| !t.kh.contains(x)).collect();
    for &x in outside_kh.iter().filter(|&&x| arith::is_prime(g.ord(x))) {
        ensure(t.k.iter().any(|y| y != 0 && g.commute(x, y)), || format!("C_K({}) = 1", lab(g, x)))?;
    }
    // (i)
    let both = |x: usize, y: usize| nt.arrow(x, y) && nt.arrow(y, x);
    for &x in &outside_kh {
        let ok = arith::prime_divisors(g.ord(x)).into_iter().any(|p| {
            let xp = g.p_power_part(x, p).expect("p divides o(x)");
            both(x, xp) && t.k.iter().any(|k| k != 0 && both(xp, k))
        });
        ensure(ok, || format!("(i) fails at {}", lab(g, x)))?;
    }
    // (ii)
    let scc = a.delta_scc();
    let delta = a.delta();
    let rest: Vec<usize> = g.elements().filter(|&x| x != 0 && !t.x.contains(x)).collect();
    let comp = scc.component_of[delta.vertex_of(rest[0]).expect("vertex")];
    for &x in &rest {
        ensure(scc.component_of[delta.vertex_of(x).expect("vertex")] == comp, || {
            format!("(ii) {} and {} in different components", lab(g, rest[0]), lab(g, x))
        })?;
    }
    // (iii)
    for x in t.x.iter().filter(|&x| x != 0) {
        ensure(
            outside_kh.iter().any(|&y| arith::is_prime(g.ord(y)) && nt.arrow(x, y)),
            || format!("(iii) no arrow from {} to a prime-order element outside KH", lab(g, x)),
        )?;
    }
    pass(format!("|K|={} |H|={} |L|={}", t.k.order(), t.h.order(), t.l.order()))
}

fn v20(a: &Analysis, _: &SuiteConfig) -> Eval {
    let c = a.classification();
    let Some(t) = &c.two_frobenius else {
        return not_applicable("not 2-Frobenius");
    };
    let g = a.group();
    let cond = c.p_r_condition == Some(true);
    let disconnected = !a.delta_scc().strongly_connected;
    ensure(cond == disconnected, || {
        format!("p !| r-1 is {cond} but strongly disconnected is {disconnected}")
    })?;
    if cond {
        let mut xs = t.x.clone();
        xs.remove(0);
        let set = a.delta().vertex_set(xs.iter());
        ensure(a.delta().is_source_set(&set), || "an arrow enters X from outside".into())?;
    }
    let _ = g;
    pass(format!("p !| r-1: {cond}, disconnected: {disconnected}"))
}

fn v21(a: &Analysis, _: &SuiteConfig) -> Eval {
    let c = a.classification();
    let two = c.two_frobenius.is_some();
    let agroup = soluble_centerless(a) && c.a_group;
    if !two && !agroup {
        return not_applicable("neither 2-Frobenius nor a soluble A-group with trivial center");
    }
    match a.delta_scc().diameter {
        Some(d) => {
            ensure(d <= 6, || format!("diameter {d} > 6"))?;
            pass(format!("diameter {d}"))
        }
        None => pass("strongly disconnected; nothing to bound"),
    }
}

fn v22(a: &Analysis, _: &SuiteConfig) -> Eval {
    if !soluble_centerless(a) {
        return not_applicable("not soluble with trivial center");
    }
    let scc = a.delta_scc();
    if scc.strongly_connected {
        return pass("strongly connected; nothing to describe");
    }
    let g = a.group();
    let c = a.classification();
    let delta = a.delta();
    let is_component = |set: &BitSet| -> Option<usize> {
        let verts = delta.vertex_set(set.iter());
        let comp = scc.component_of[verts.first()?];
        let members = &scc.components[comp];
        (members.len() == verts.len() && members.iter().all(|&v| verts.contains(v))).then_some(comp)
    };
    if let Some(f) = &c.frobenius {
        ensure(is_component(&without_identity(&f.kernel)).is_some(), || "K \\ 1 is not a component".into())?;
        for hg in conjugates(g, &f.complement) {
            ensure(is_component(&without_identity(&hg)).is_some(), || {
                format!("{} is not a component", labs(g, without_identity(&hg).iter()))
            })?;
        }
    } else if let Some(t) = &c.two_frobenius {
        let rest = BitSet::from_indices(g.order(), g.elements().filter(|&x| x != 0 && !t.x.contains(x)));
        ensure(is_component(&rest).is_some(), || "G \\ X is not a component".into())?;
        for hg in conjugates(g, &t.h) {
            let comp = is_component(&without_identity(&hg));
            ensure(comp.is_some_and(|cpt| scc.diameters[cpt] <= 1), || {
                format!("{} is not a component of diameter <= 1", labs(g, without_identity(&hg).iter()))
            })?;
        }
    } else {
        return Err(Fault::Fail("disconnected but neither Frobenius nor 2-Frobenius".into()));
    }
    // Prop. 5.20
    if scc.diameters.iter().all(|&d| d <= 1) {
        let f = c.frobenius.as_ref();
        ensure(f.is_some(), || "all components of diameter <= 1 but not Frobenius".into())?;
        let f = f.expect("checked");
        for (s, name) in [(&f.kernel, "kernel"), (&f.complement, "complement")] {
            let (sub, _) = g.subgroup_as_group(s, name);
            ensure(crate::classify::is_dedekind(&sub), || format!("{name} is not Dedekind"))?;
        }
    }
    pass(format!("{} components match the kernel/complement structure", scc.count()))
}

fn v23(a: &Analysis, _: &SuiteConfig) -> Eval {
    let c = a.classification();
    let g = a.group();
    let sc = soluble_centerless(a);
    let two = c.two_frobenius.as_ref();
    if two.is_none() && !sc && !(c.cyclic_by_abelian && c.trivial_center && nontrivial(a)) {
        return not_applicable("no refinement hypothesis on the group class");
    }
    let Some(d) = a.delta_scc().diameter else {
        return pass("strongly disconnected; nothing to bound");
    };
    let mut notes = Vec::new();
    if let Some(t) = two {
        let pk = arith::prime_divisors(t.k.order());
        let pl = arith::prime_divisors(t.l.order());
        let refined = pk == pl
            || pl
                .iter()
                .filter(|p| !pk.contains(p))
                .all(|&p| pk.iter().any(|&r| (r - 1) % p == 0));
        if refined {
            ensure(d <= 5, || format!("pi(K)/pi(L) refinement holds but diameter {d} > 5"))?;
            notes.push("<=5 (pi(K), pi(L))");
        }
    }
    if c.cyclic_by_abelian && c.trivial_center && nontrivial(a) {
        ensure(d <= 4, || format!("cyclic-by-abelian but diameter {d} > 4"))?;
        notes.push("<=4 (cyclic-by-abelian)");
    }
    if sc {
        let fit = a.fitting();
        if fit.iter().any(|x| g.ord(x) == fit.order()) {
            ensure(d <= 4, || format!("Fit cyclic but diameter {d} > 4"))?;
            notes.push("<=4 (Fit cyclic)");
        }
        if c.fitting_prime_index {
            ensure(d <= 4, || format!("|G:Fit| prime but diameter {d} > 4"))?;
            notes.push("<=4 (prime Fitting index)");
        }
    }
    pass(format!("diameter {d}; bounds checked: {}", if notes.is_empty() { "none".into() } else { notes.join(", ") }))
}

/// Normalized group names under which the two library groups are recognized.
fn library_id(name: &str) -> Option<(usize, usize)> {
    let s: String = name
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_lowercase();
    for (ids, keys) in [
        ((64, 28), ["smallgroup(64,28)", "sg64_28"]),
        ((384, 591), ["smallgroup(384,591)", "sg384_591"]),
    ] {
        if keys.iter().any(|k| s.contains(k)) {
            return Some(ids);
        }
    }
    None
}

fn v24(a: &Analysis, _: &SuiteConfig) -> Eval {
    let g = a.group();
    match library_id(g.name()) {
        Some((64, 28)) => {
            ensure(g.order() == 64, || format!("order {} != 64", g.order()))?;
            ensure(a.gamma().is_complete(false), || "undirected graph not complete".into())?;
            let plus = a.univ().univ_plus.members();
            let x = g
                .elements()
                .find(|&x| !plus.contains(x) && !a.univ().univ_minus.contains(x));
            ensure(x.is_some(), || "every x outside Univ+ generates a normal subgroup".into())?;
            pass(format!("complete; <{}> not normal, outside Univ+", lab(g, x.expect("found"))))
        }
        Some((384, _)) => {
            ensure(g.order() == 384, || format!("order {} != 384", g.order()))?;
            let fit = a.fitting().order();
            ensure(fit == 128, || format!("|Fit| = {fit}"))?;
            let d = a.delta_scc().diameter;
            ensure(d == Some(4), || format!("diameter {d:?}, expected 4"))?;
            pass("|Fit| = 128, index 3, diameter 4")
        }
        _ => not_applicable("not an ingested SmallGroup(64,28) or SmallGroup(384,591)"),
    }
}
