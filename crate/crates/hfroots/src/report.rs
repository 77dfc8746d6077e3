//! Serializable reports and their text form.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use hfroots_core::plumbing::PlumbingGraph;
use hfroots_core::{AlgebraicKnot, Rational, SpincResult, SurgerySpec, UModuleDecomposition};
use serde::{Deserialize, Serialize};

use crate::graph_json::GraphJson;
use crate::rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotReport {
    pub newton_pairs: Vec<[i64; 2]>,
    pub linking_pairs: Vec<[i64; 2]>,
    pub semigroup_generators: Vec<i64>,
    pub gaps: Vec<i64>,
    pub delta: i64,
    pub mu: i64,
    pub mf: i64,
    /// Coefficients of the Alexander polynomial, constant term first.
    pub alexander: Vec<i64>,
    pub alpha: Vec<i64>,
}

impl From<&AlgebraicKnot> for KnotReport {
    fn from(k: &AlgebraicKnot) -> Self {
        let pairs = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| [a, b]).collect();
        KnotReport {
            newton_pairs: pairs(k.newton_pairs()),
            linking_pairs: pairs(k.linking_pairs()),
            semigroup_generators: k.semigroup().generators().to_vec(),
            gaps: k.gaps().to_vec(),
            delta: k.delta(),
            mu: k.mu(),
            mf: k.mf(),
            alexander: k.alexander().coeffs().to_vec(),
            alpha: k.alpha().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryReport {
    pub p: i64,
    pub q: i64,
    /// The surgery coefficient `-p/q`.
    #[serde(with = "rational")]
    pub coefficient: Rational,
    pub continued_fraction: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerReport {
    #[serde(with = "rational")]
    pub grade: Rational,
    pub length: u64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleReport {
    #[serde(with = "rational")]
    pub tower: Rational,
    pub finite: Vec<TowerReport>,
    pub reduced_rank: u64,
    pub summary: String,
}

impl From<&UModuleDecomposition> for ModuleReport {
    fn from(m: &UModuleDecomposition) -> Self {
        ModuleReport {
            tower: m.tower_grade().clone(),
            finite: m
                .grouped()
                .into_iter()
                .map(|(grade, length, multiplicity)| TowerReport {
                    grade,
                    length,
                    multiplicity,
                })
                .collect(),
            reduced_rank: m.reduced_rank(),
            summary: m.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootReport {
    pub minima: usize,
    pub min_chi: i64,
    pub top_chi: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpincReport {
    pub a: i64,
    pub t_a: i64,
    #[serde(with = "rational")]
    pub r_a: Rational,
    pub tau: Vec<i64>,
    pub root: RootReport,
    pub module: ModuleReport,
    #[serde(with = "rational")]
    pub d: Rational,
    #[serde(with = "rational")]
    pub sw: Rational,
    #[serde(with = "rational::vec")]
    pub ker_u: Vec<Rational>,
    #[serde(with = "rational::vec")]
    pub coker_u: Vec<Rational>,
}

impl From<&SpincResult> for SpincReport {
    fn from(r: &SpincResult) -> Self {
        SpincReport {
            a: r.a,
            t_a: r.t_a,
            r_a: r.r_a.clone(),
            tau: r.tau.values().to_vec(),
            root: RootReport {
                minima: r.root.leaves().len(),
                min_chi: r.root.min_chi(),
                top_chi: r.root.chi(r.root.top()),
            },
            module: ModuleReport::from(&r.module),
            d: r.d_invariant.clone(),
            sw: r.sw_invariant.clone(),
            ker_u: r.ker_u.clone(),
            coker_u: r.coker_u.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Agree,
    Disagree,
    /// The oracle could not give a trustworthy answer (box too large or
    /// touched); this is not a disagreement.
    Inconclusive,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub status: CheckStatus,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerification {
    pub a: i64,
    #[serde(with = "rational")]
    pub lattice_shift: Rational,
    #[serde(with = "rational")]
    pub formula_shift: Rational,
    pub shift_agrees: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub laufer: Option<OracleCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sublevel: Option<OracleCheck>,
}

impl ClassVerification {
    pub fn disagrees(&self) -> bool {
        !self.shift_agrees
            || [&self.laufer, &self.sublevel].iter().any(|c| {
                c.as_ref()
                    .is_some_and(|c| c.status == CheckStatus::Disagree)
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub oracle: String,
    pub graph_vertices: usize,
    pub agree: bool,
    pub classes: Vec<ClassVerification>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub knot: KnotReport,
    pub surgery: SurgeryReport,
    /// `sum_a (t_a + 2)` over the reported structures.
    pub ker_u_rank: i64,
    pub spinc: Vec<SpincReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_us: Option<BTreeMap<String, u64>>,
}

impl ComputeReport {
    pub fn new(spec: &SurgerySpec, results: &[SpincResult]) -> Self {
        ComputeReport {
            knot: KnotReport::from(spec.knot()),
            surgery: SurgeryReport {
                p: spec.p(),
                q: spec.q(),
                coefficient: spec.coefficient(),
                continued_fraction: spec.cfrac().terms().to_vec(),
            },
            ker_u_rank: results.iter().map(|r| r.t_a + 2).sum(),
            spinc: results.iter().map(SpincReport::from).collect(),
            verification: None,
            timings_us: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensClass {
    pub a: i64,
    /// Index of the same structure in the recursive formula.
    pub i: i64,
    #[serde(with = "rational")]
    pub d_formula: Rational,
    #[serde(with = "rational")]
    pub d_recursive: Rational,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LensReport {
    pub p: i64,
    pub q: i64,
    pub agree: bool,
    pub classes: Vec<LensClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_us: Option<BTreeMap<String, u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub graph: GraphJson,
    pub vertices: usize,
    pub determinant: String,
    pub negative_definite: bool,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational::option_vec"
    )]
    pub canonical_class: Option<Vec<Rational>>,
    #[serde(
        default,
        skip_serializing_if = "Option::is_none",
        with = "rational::option"
    )]
    pub canonical_square: Option<Rational>,
}

impl GraphReport {
    pub fn new(g: &PlumbingGraph) -> Self {
        let negative_definite = g.is_negative_definite();
        let determinant =
            hfroots_core::plumbing::lattice::determinant(&g.form_matrix()).to_string();
        let canonical = negative_definite
            .then(|| hfroots_core::plumbing::canonical_class(g).ok())
            .flatten();
        GraphReport {
            graph: GraphJson::from(g),
            vertices: g.len(),
            determinant,
            negative_definite,
            canonical_square: canonical.as_ref().map(|k| k.square(g)),
            canonical_class: canonical.map(|k| k.coeffs().to_vec()),
        }
    }
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn pairs_text(v: &[[i64; 2]]) -> String {
    join(
        &v.iter()
            .map(|[a, b]| format!("({a},{b})"))
            .collect::<Vec<_>>(),
        " ",
    )
}

fn alexander_text(c: &[i64]) -> String {
    hfroots_core::poly::IntPoly::new(c.to_vec()).to_string()
}

pub fn knot_text(k: &KnotReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "Newton pairs:  {}", pairs_text(&k.newton_pairs));
    let _ = writeln!(s, "linking pairs: {}", pairs_text(&k.linking_pairs));
    let _ = writeln!(s, "Alexander:     {}", alexander_text(&k.alexander));
    let _ = writeln!(
        s,
        "semigroup:     <{}>",
        join(&k.semigroup_generators, ", ")
    );
    let _ = writeln!(s, "gaps:          {}", join(&k.gaps, " "));
    let _ = writeln!(s, "delta = {}, mu = {}, m_f = {}", k.delta, k.mu, k.mf);
    let _ = writeln!(s, "alpha:         {}", join(&k.alpha, ","));
    s
}

pub fn compute_text(r: &ComputeReport, roots: &[String]) -> String {
    let mut s = knot_text(&r.knot);
    let sr = &r.surgery;
    let _ = writeln!(
        s,
        "surgery coefficient {} = [{}], {} spin^c structures",
        sr.coefficient,
        join(&sr.continued_fraction, ","),
        sr.p
    );
    for (i, c) in r.spinc.iter().enumerate() {
        let _ = writeln!(s);
        let _ = writeln!(s, "[a = {}]", c.a);
        let _ = writeln!(s, "  t_a = {}", c.t_a);
        let _ = writeln!(s, "  r_a = {}", c.r_a);
        let _ = writeln!(s, "  tau = {}", join(&c.tau, " "));
        let _ = writeln!(s, "  HF+_even = {}", c.module.summary);
        let _ = writeln!(s, "  d = {}", c.d);
        let _ = writeln!(s, "  sw = {}", c.sw);
        let _ = writeln!(s, "  ker U:   {}", join(&c.ker_u, " "));
        let _ = writeln!(s, "  coker U: {}", join(&c.coker_u, " "));
        if let Some(root) = roots.get(i) {
            let _ = writeln!(s, "  graded root:");
            for line in root.lines() {
                let _ = writeln!(s, "  {line}");
            }
        }
    }
    if r.spinc.len() as i64 == sr.p {
        let _ = writeln!(s);
        let _ = writeln!(s, "rank ker U = {}", r.ker_u_rank);
    }
    if let Some(v) = &r.verification {
        s.push('\n');
        s.push_str(&verification_text(v));
    }
    if let Some(t) = &r.timings_us {
        s.push('\n');
        s.push_str(&timings_text(t));
    }
    s
}

fn check_text(name: &str, c: &Option<OracleCheck>) -> String {
    match c {
        Some(c) => format!(" {name}: {:?} ({})", c.status, c.detail).to_lowercase(),
        None => String::new(),
    }
}

pub fn verification_text(v: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "verification (oracle: {}, {} vertices):",
        v.oracle, v.graph_vertices
    );
    for c in &v.classes {
        let _ = writeln!(
            s,
            "  a = {}: shift {} {} {};{}{}",
            c.a,
            c.lattice_shift,
            if c.shift_agrees { "==" } else { "!=" },
            c.formula_shift,
            check_text("laufer", &c.laufer),
            check_text("sublevel", &c.sublevel),
        );
    }
    let _ = writeln!(
        s,
        "{}",
        if v.agree {
            "all oracles agree"
        } else {
            "MISMATCH"
        }
    );
    s
}

pub fn lens_text(r: &LensReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "lens space L({}, {}):", r.p, r.q);
    for c in &r.classes {
        let _ = writeln!(
            s,
            "  a = {}: d = {} {} {} (i = {})",
            c.a,
            c.d_formula,
            if c.agree { "==" } else { "!=" },
            c.d_recursive,
            c.i
        );
    }
    let _ = writeln!(
        s,
        "{}",
        if r.agree {
            "all values agree"
        } else {
            "MISMATCH"
        }
    );
    if let Some(t) = &r.timings_us {
        s.push_str(&timings_text(t));
    }
    s
}

pub fn graph_text(r: &GraphReport) -> String {
    let mut s = String::new();
    let g = &r.graph;
    let _ = writeln!(s, "vertices: {}", r.vertices);
    let _ = writeln!(
        s,
        "euler:    {}",
        join(&g.vertices.iter().map(|v| v.euler).collect::<Vec<_>>(), " ")
    );
    let _ = writeln!(
        s,
        "edges:    {}",
        join(
            &g.edges
                .iter()
                .map(|[u, v]| format!("{u}-{v}"))
                .collect::<Vec<_>>(),
            " "
        )
    );
    if let Some(d) = g.distinguished {
        let _ = writeln!(s, "distinguished vertex: {d}");
    }
    if let Some(a) = g.arrow {
        let _ = writeln!(s, "arrow at vertex: {a}");
    }
    let _ = writeln!(s, "det = {}", r.determinant);
    let _ = writeln!(s, "negative definite: {}", r.negative_definite);
    if let (Some(k), Some(k2)) = (&r.canonical_class, &r.canonical_square) {
        let _ = writeln!(s, "K = ({})", join(k, ", "));
        let _ = writeln!(s, "K^2 = {k2}");
    }
    s
}

fn timings_text(t: &BTreeMap<String, u64>) -> String {
    let mut s = String::from("timings:\n");
    for (k, v) in t {
        let _ = writeln!(s, "  {k}: {v} us");
    }
    s
}
