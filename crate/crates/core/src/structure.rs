//! Module structures of bihook Specht modules: which case applies, the
//! summands it produces, and a decomposability verdict.
//!
//! Structures are first built over two-column labels `L(m) = L(2^m,1^(n-2m))`
//! for the tensor product `Δ(1^k) ⊗ Δ(1^j)` and then pushed to Specht labels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::Characteristic;
use crate::combinatorics::{Bipartition, QuantumCharacteristic};
use crate::crystal::{braces, f_ab, is_regular, scrt_counts, InductionRecipe};
use crate::error::{Error, Result};
use crate::schur::{self, TwoColumn};

/// A simple module `D^λ⟨shift⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleLabel {
    pub bipartition: Bipartition,
    pub shift: i32,
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({})<{}>", self.bipartition, self.shift)
    }
}

/// One indecomposable summand.
///
/// Uniserial layers run from socle to head. A diagram edge `(x, y)` means
/// vertex `x` sits directly below vertex `y` in a nonsplit extension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(
    try_from = "SummandRepr<L>",
    into = "SummandRepr<L>",
    bound(serialize = "L: Serialize + Clone", deserialize = "L: Deserialize<'de>")
)]
pub enum Summand<L> {
    Semisimple(Vec<L>),
    Uniserial(Vec<L>),
    Diagram { vertices: Vec<L>, edges: Vec<(usize, usize)> },
}

impl<L> Summand<L> {
    pub fn labels(&self) -> &[L] {
        match self {
            Summand::Semisimple(v) | Summand::Uniserial(v) => v,
            Summand::Diagram { vertices, .. } => vertices,
        }
    }

    fn map<M>(&self, f: &mut impl FnMut(&L) -> Result<M>) -> Result<Summand<M>> {
        let conv = |v: &[L], f: &mut dyn FnMut(&L) -> Result<M>| v.iter().map(f).collect::<Result<Vec<M>>>();
        Ok(match self {
            Summand::Semisimple(v) => Summand::Semisimple(conv(v, f)?),
            Summand::Uniserial(v) => Summand::Uniserial(conv(v, f)?),
            Summand::Diagram { vertices, edges } => Summand::Diagram { vertices: conv(vertices, f)?, edges: edges.clone() },
        })
    }

    /// The graded dual up to shift: socle and head swap.
    fn dual(&self) -> Summand<L>
    where
        L: Clone,
    {
        match self {
            Summand::Semisimple(v) => Summand::Semisimple(v.clone()),
            Summand::Uniserial(v) => Summand::Uniserial(v.iter().rev().cloned().collect()),
            Summand::Diagram { vertices, edges } => Summand::Diagram {
                vertices: vertices.clone(),
                edges: edges.iter().map(|&(x, y)| (y, x)).collect(),
            },
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum SummandKind {
    Semisimple,
    Uniserial,
    Diagram,
}

/// JSON shape of a summand. `layers` lists factor indices per Loewy layer
/// from the socle up; it is derived data and checked on input.
#[derive(Serialize, Deserialize)]
struct SummandRepr<L> {
    #[serde(rename = "type")]
    kind: SummandKind,
    factors: Vec<L>,
    layers: Vec<Vec<usize>>,
    #[serde(default)]
    edges: Vec<(usize, usize)>,
}

/// Loewy layers of a diagram: a vertex sits one layer above the highest
/// vertex directly below it.
fn diagram_layers(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut height = vec![0usize; n];
    // heights stabilise after n rounds unless the edges contain a cycle
    for _ in 0..=n {
        let mut changed = false;
        for &(x, y) in edges {
            if height[y] < height[x] + 1 {
                height[y] = height[x] + 1;
                changed = true;
            }
        }
        if !changed {
            let top = height.iter().copied().max().unwrap_or(0);
            let mut layers = vec![Vec::new(); if n == 0 { 0 } else { top + 1 }];
            for (v, &h) in height.iter().enumerate() {
                layers[h].push(v);
            }
            return Some(layers);
        }
    }
    None
}

impl<L: Clone> From<Summand<L>> for SummandRepr<L> {
    fn from(s: Summand<L>) -> Self {
        match s {
            Summand::Semisimple(v) => {
                SummandRepr { kind: SummandKind::Semisimple, layers: vec![(0..v.len()).collect()], factors: v, edges: vec![] }
            }
            Summand::Uniserial(v) => {
                SummandRepr { kind: SummandKind::Uniserial, layers: (0..v.len()).map(|i| vec![i]).collect(), factors: v, edges: vec![] }
            }
            Summand::Diagram { vertices, edges } => SummandRepr {
                kind: SummandKind::Diagram,
                layers: diagram_layers(vertices.len(), &edges).unwrap_or_default(),
                factors: vertices,
                edges,
            },
        }
    }
}

impl<L> TryFrom<SummandRepr<L>> for Summand<L> {
    type Error = String;

    fn try_from(r: SummandRepr<L>) -> std::result::Result<Self, String> {
        let n = r.factors.len();
        let expected = match r.kind {
            SummandKind::Semisimple => vec![(0..n).collect()],
            SummandKind::Uniserial => (0..n).map(|i| vec![i]).collect(),
            SummandKind::Diagram => {
                if r.edges.iter().any(|&(x, y)| x >= n || y >= n) {
                    return Err("diagram edge refers to a missing factor".into());
                }
                diagram_layers(n, &r.edges).ok_or("diagram edges contain a cycle")?
            }
        };
        if r.layers != expected {
            return Err("layers do not match the summand".into());
        }
        if !matches!(r.kind, SummandKind::Diagram) && !r.edges.is_empty() {
            return Err("edges are only allowed on diagrams".into());
        }
        Ok(match r.kind {
            SummandKind::Semisimple => Summand::Semisimple(r.factors),
            SummandKind::Uniserial => Summand::Uniserial(r.factors),
            SummandKind::Diagram => Summand::Diagram { vertices: r.factors, edges: r.edges },
        })
    }
}

/// A direct sum of indecomposable summands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(serialize = "L: Serialize + Clone", deserialize = "L: Deserialize<'de>"))]
pub struct ModuleStructure<L = SimpleLabel> {
    pub summands: Vec<Summand<L>>,
}

impl<L: Clone + Ord> ModuleStructure<L> {
    pub fn labels(&self) -> Vec<&L> {
        self.summands.iter().flat_map(|s| s.labels()).collect()
    }

    pub fn map<M>(&self, mut f: impl FnMut(&L) -> Result<M>) -> Result<ModuleStructure<M>> {
        let summands = self.summands.iter().map(|s| s.map(&mut f)).collect::<Result<_>>()?;
        Ok(ModuleStructure { summands })
    }

    pub fn dual(&self) -> Self {
        ModuleStructure { summands: self.summands.iter().map(Summand::dual).collect() }
    }

    /// Summands in a fixed order, for comparisons that ignore the order of
    /// the direct sum.
    pub fn canonical(&self) -> Self {
        let mut summands = self.summands.clone();
        summands.sort();
        ModuleStructure { summands }
    }

    pub fn is_semisimple(&self) -> bool {
        self.summands.iter().all(|s| s.labels().len() == 1)
    }
}

fn simple<L>(x: L) -> Summand<L> {
    Summand::Semisimple(vec![x])
}

fn uniserial<L>(v: Vec<L>) -> Summand<L> {
    Summand::Uniserial(v)
}

/// Five vertices `[top-left, top-right, middle, bottom-left, bottom-right]`
/// joined in a zigzag: bottom-left below top-left, middle below top-left,
/// bottom-right below middle and below top-right.
fn zigzag<L>(vertices: [L; 5]) -> Summand<L> {
    Summand::Diagram { vertices: vertices.into(), edges: vec![(3, 0), (2, 0), (4, 2), (4, 1)] }
}

/// Whether `Δ(1^k) ⊗ Δ(1^j)`, equivalently `S^((ke),(je))`, is semisimple.
pub fn semisimplicity_criterion(k: u32, j: u32, p: Characteristic) -> Result<bool> {
    if k < j || j < 1 {
        return Err(Error::Precondition(format!("need k >= j >= 1, got k = {k}, j = {j}")));
    }
    let none_divides = !(k + 2 - j..=k + j).any(|x| p.divides(x as i64));
    Ok(none_divides || (p.get() == 2 && j == 2 && k % 4 == 1))
}

fn two_col(n: u32) -> impl Fn(u32) -> TwoColumn {
    move |m| TwoColumn { m, n }
}

/// Semisimple case over two-column labels: the Pieri factors, `(1^n)` first.
pub fn schur_semisimple(k: u32, j: u32, p: Characteristic) -> Result<ModuleStructure<TwoColumn>> {
    if !semisimplicity_criterion(k, j, p)? {
        return Err(Error::Hypothesis(format!("Δ(1^{k}) ⊗ Δ(1^{j}) is not semisimple in characteristic {p}")));
    }
    Ok(ModuleStructure { summands: schur::pieri_factors(k, j)?.into_iter().map(simple).collect() })
}

/// `j = 1` over two-column labels.
pub fn schur_j1(k: u32, p: Characteristic) -> Result<ModuleStructure<TwoColumn>> {
    if k < 1 {
        return Err(Error::Precondition("need k >= 1".into()));
    }
    let l = two_col(k + 1);
    let summands = if p.divides(k as i64 + 1) {
        vec![uniserial(vec![l(0), l(1), l(0)])]
    } else {
        vec![simple(l(1)), simple(l(0))]
    };
    Ok(ModuleStructure { summands })
}

/// `j = 2` over two-column labels, six cases.
pub fn schur_j2(k: u32, p: Characteristic) -> Result<ModuleStructure<TwoColumn>> {
    if k < 2 {
        return Err(Error::Precondition("need k >= 2".into()));
    }
    let l = two_col(k + 2);
    let odd = p.get() != 2 && !p.is_zero();
    let summands = if p.get() == 2 {
        match k % 4 {
            1 => vec![simple(l(2)), simple(l(1)), simple(l(0))],
            3 => vec![simple(l(1)), uniserial(vec![l(0), l(2), l(0)])],
            0 => vec![simple(l(0)), uniserial(vec![l(1), l(0), l(2), l(0), l(1)])],
            _ => vec![zigzag([l(1), l(0), l(2), l(0), l(1)])],
        }
    } else if odd && p.divides(k as i64 + 2) {
        vec![simple(l(2)), uniserial(vec![l(0), l(1), l(0)])]
    } else if odd && p.divides(k as i64 + 1) {
        vec![simple(l(1)), uniserial(vec![l(0), l(2), l(0)])]
    } else if odd && p.divides(k as i64) {
        vec![simple(l(0)), uniserial(vec![l(1), l(2), l(1)])]
    } else {
        vec![simple(l(2)), simple(l(1)), simple(l(0))]
    };
    Ok(ModuleStructure { summands })
}

/// The case where `p` divides exactly one of `k+j, ..., k-j+2`, over
/// two-column labels.
pub fn schur_almost_ss(k: u32, j: u32, p: Characteristic) -> Result<ModuleStructure<TwoColumn>> {
    if k < j || j < 2 {
        return Err(Error::Precondition(format!("need k >= j > 1, got k = {k}, j = {j}")));
    }
    let (_, i) = schur::divides_exactly_one(k, j, p).ok_or_else(|| {
        Error::Hypothesis(format!("{p} does not divide exactly one of {}..={}", k + 2 - j, k + j))
    })?;
    let l = two_col(k + j);
    let (fl, cl) = (i / 2, i.div_ceil(2));
    let n_r = |r: u32| uniserial(vec![l(fl - r), l(cl + 1 + r), l(fl - r)]);
    let mut summands = Vec::new();
    if schur::is_exceptional(k, j, p) {
        if p.get() == 2 {
            summands.extend([simple(l(0)), simple(l(1)), simple(l(2))]);
        } else {
            summands.push(simple(l(0)));
            summands.extend((0..fl).map(n_r));
            summands.push(simple(l(j)));
        }
    } else if i < j {
        if i % 2 == 1 {
            summands.push(simple(l(i.div_ceil(2))));
        }
        summands.extend((0..=fl).map(n_r));
        summands.extend((i + 2..=j).map(|m| simple(l(m))));
    } else {
        summands.extend((0..=i - j).map(|m| simple(l(m))));
        if i % 2 == 1 {
            summands.push(simple(l(i.div_ceil(2))));
        }
        summands.extend((0..j - cl).map(n_r));
    }
    Ok(ModuleStructure { summands })
}

/// `p = 3`, `k = 7`, `j = 3`: a simple summand and a five-factor zigzag.
pub fn schur_five_factor_example() -> ModuleStructure<TwoColumn> {
    let l = two_col(10);
    ModuleStructure { summands: vec![simple(l(1)), zigzag([l(2), l(0), l(3), l(0), l(2)])] }
}

/// Which result produced a structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Semisimple,
    J1,
    J2,
    OneDivisor,
    FiveFactorExample,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Semisimple => "semisimple",
            Source::J1 => "j=1",
            Source::J2 => "j=2",
            Source::OneDivisor => "one-divisor",
            Source::FiveFactorExample => "five-factor-example",
        }
    }
}

/// Structure of `Δ(1^k) ⊗ Δ(1^j)` over two-column labels for `k >= j >= 1`,
/// when some covered result applies.
pub fn schur_structure(k: u32, j: u32, p: Characteristic) -> Result<Option<(Source, ModuleStructure<TwoColumn>)>> {
    if k < j || j < 1 {
        return Err(Error::Precondition(format!("need k >= j >= 1, got k = {k}, j = {j}")));
    }
    if semisimplicity_criterion(k, j, p)? {
        return Ok(Some((Source::Semisimple, schur_semisimple(k, j, p)?)));
    }
    if j == 1 {
        return Ok(Some((Source::J1, schur_j1(k, p)?)));
    }
    if j == 2 {
        return Ok(Some((Source::J2, schur_j2(k, p)?)));
    }
    if schur::divides_exactly_one(k, j, p).is_some() {
        return Ok(Some((Source::OneDivisor, schur_almost_ss(k, j, p)?)));
    }
    if (p.get(), k, j) == (3, 7, 3) {
        return Ok(Some((Source::FiveFactorExample, schur_five_factor_example())));
    }
    Ok(None)
}

fn to_specht(s: &ModuleStructure<TwoColumn>, shift: i32, e: QuantumCharacteristic) -> Result<ModuleStructure> {
    s.map(|t| Ok(SimpleLabel { bipartition: scrt_counts(t.m, t.n, e)?, shift }))
}

/// `S^((ke),(je))` in the semisimple case.
pub fn semisimple_decomposition(k: u32, j: u32, e: QuantumCharacteristic, p: Characteristic) -> Result<ModuleStructure> {
    to_specht(&schur_semisimple(k, j, p)?, j as i32, e)
}

/// `S^((ke),(e))`.
pub fn structure_j1(k: u32, e: QuantumCharacteristic, p: Characteristic) -> Result<ModuleStructure> {
    to_specht(&schur_j1(k, p)?, 1, e)
}

/// `S^((ke),(2e))`.
pub fn structure_j2(k: u32, e: QuantumCharacteristic, p: Characteristic) -> Result<ModuleStructure> {
    to_specht(&schur_j2(k, p)?, 2, e)
}

/// `S^((ke),(je))` when `p` divides exactly one of `k+j, ..., k-j+2`.
pub fn almost_ss_structure(k: u32, j: u32, e: QuantumCharacteristic, p: Characteristic) -> Result<ModuleStructure> {
    to_specht(&schur_almost_ss(k, j, p)?, j as i32, e)
}

/// Input to [`predict`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub e: u32,
    pub p: u64,
    pub k: u32,
    pub j: u32,
    pub a: u32,
    pub b: u32,
    pub transpose: bool,
}

impl Query {
    pub fn new(e: u32, p: u64, k: u32, j: u32) -> Self {
        Query { e, p, k, j, a: 0, b: 0, transpose: false }
    }

    /// The bihook this query is about.
    pub fn specht(&self) -> Bipartition {
        let (e, k, j, a, b) = (self.e, self.k, self.j, self.a, self.b);
        if self.transpose {
            // (b+1, 1^(je+a-1)) needs je + a >= 1, which k, j >= 1 guarantee
            Bipartition::bihook(b + 1, j * e + a - 1, b + 1, k * e + a - 1)
        } else {
            Bipartition::bihook(k * e + a, b, j * e + a, b)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decomposability {
    Decomposable,
    Indecomposable,
    Unknown,
}

impl fmt::Display for Decomposability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Decomposability::Decomposable => "decomposable",
            Decomposability::Indecomposable => "indecomposable",
            Decomposability::Unknown => "unknown",
        })
    }
}

/// The answer for one bihook. In JSON the structure is flattened to a
/// `summands` list, `null` when only decomposability is known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "VerdictRepr", from = "VerdictRepr")]
pub struct Verdict {
    pub query: Query,
    pub specht: Bipartition,
    pub verdict: Decomposability,
    pub structure: Option<ModuleStructure>,
    /// Composition factors with multiplicity, when known without a structure.
    pub composition: Option<Vec<(SimpleLabel, u32)>>,
    /// Number of indecomposable summands, when known without a structure.
    pub summand_count: Option<usize>,
    pub notes: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct VerdictRepr {
    verdict: Decomposability,
    specht: Bipartition,
    query: Query,
    summands: Option<Vec<Summand<SimpleLabel>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    composition: Option<Vec<(SimpleLabel, u32)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    summand_count: Option<usize>,
    notes: Vec<String>,
}

impl From<Verdict> for VerdictRepr {
    fn from(v: Verdict) -> Self {
        VerdictRepr {
            verdict: v.verdict,
            specht: v.specht,
            query: v.query,
            summands: v.structure.map(|s| s.summands),
            composition: v.composition,
            summand_count: v.summand_count,
            notes: v.notes,
        }
    }
}

impl From<VerdictRepr> for Verdict {
    fn from(r: VerdictRepr) -> Self {
        Verdict {
            query: r.query,
            specht: r.specht,
            verdict: r.verdict,
            structure: r.summands.map(|summands| ModuleStructure { summands }),
            composition: r.composition,
            summand_count: r.summand_count,
            notes: r.notes,
        }
    }
}

/// Predicts the structure of the Specht module of `q.specht()`.
///
/// Inputs with `k < j` are answered through the pair with `k` and `j`
/// swapped, whose dual is the module asked about, and say so in the notes.
pub fn predict(q: &Query) -> Result<Verdict> {
    let e = QuantumCharacteristic::new(q.e)?;
    let p = Characteristic::new(q.p)?;
    if q.k < 1 || q.j < 1 {
        return Err(Error::Precondition(format!("need k, j >= 1, got k = {}, j = {}", q.k, q.j)));
    }
    InductionRecipe::new(q.a, q.b, e)?;
    let (big, small) = (q.k.max(q.j), q.k.min(q.j));
    let swapped = q.k < q.j;
    let shift = if q.transpose { 2 * q.k + q.j } else { q.j } as i32;
    let relabel = |t: &TwoColumn| -> Result<SimpleLabel> {
        let nu = scrt_counts(t.m, t.n, e)?;
        let bipartition = if q.transpose {
            f_ab(&braces(&nu, e)?, q.a, q.b, e, true)?
        } else {
            f_ab(&nu, q.a, q.b, e, false)?
        };
        Ok(SimpleLabel { bipartition, shift })
    };

    let mut notes = Vec::new();
    if swapped {
        notes.push(format!(
            "dual-of: S^{} twisted by <{}>, computed from k = {big}, j = {small}",
            Query { k: big, j: small, ..*q }.specht(),
            q.k + q.j
        ));
    }
    if q.a > 0 || q.b > 0 {
        notes.push(format!(
            "labels pushed through {}F_{{{},{}}} = {}",
            if q.transpose { "-" } else { "" },
            q.a,
            q.b,
            InductionRecipe::new(q.a, q.b, e)?.describe(q.transpose)
        ));
    }
    if q.transpose {
        notes.push("transposed labels: -F_{a,b} applied to braced labels (equivalently the Mullineux image)".into());
    }

    let mut verdict = Verdict {
        query: *q,
        specht: q.specht(),
        verdict: Decomposability::Unknown,
        structure: None,
        composition: None,
        summand_count: None,
        notes,
    };

    if let Some((source, s)) = schur_structure(big, small, p)? {
        let mut st = s.map(relabel)?;
        if swapped {
            st = st.dual();
        }
        verdict.verdict = if st.summands.len() > 1 { Decomposability::Decomposable } else { Decomposability::Indecomposable };
        verdict.notes.insert(0, format!("source: {}", source.name()));
        verdict.structure = Some(st);
        return Ok(verdict);
    }

    // only decomposability is known from here on; `small > 2` since j = 1, 2 always have a structure
    verdict.notes.insert(0, "structure: unknown".into());
    let decomposable = if p.get() == 2 {
        let l = 32 - small.leading_zeros();
        verdict.notes.push(format!("characteristic 2: decomposable iff k ≢ j (mod {})", 1u32 << l));
        (big - small) % (1 << l) != 0
    } else {
        verdict.notes.push("j, k > 1 outside characteristic 2: decomposable".into());
        true
    };
    verdict.verdict = if decomposable { Decomposability::Decomposable } else { Decomposability::Indecomposable };
    if q.a == 0 && q.b == 0 {
        let comp = schur::composition_multiset(big, small, p)?;
        verdict.composition = Some(
            comp.iter().map(|(t, &mult)| Ok((relabel(t)?, mult))).collect::<Result<Vec<_>>>()?,
        );
        verdict.summand_count = Some(schur::num_summands(big, small, p)?);
    }
    Ok(verdict)
}

/// Checks that every label in `s` is `e`-regular.
pub fn all_regular(s: &ModuleStructure, e: QuantumCharacteristic) -> bool {
    s.labels().iter().all(|l| is_regular(&l.bipartition, e))
}

fn render_summand(s: &Summand<SimpleLabel>) -> Vec<String> {
    let join = |v: &[SimpleLabel], sep: &str| v.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(sep);
    match s {
        Summand::Semisimple(v) => vec![join(v, " + ")],
        Summand::Uniserial(v) => vec![join(v, " | ")],
        Summand::Diagram { vertices, edges } => {
            let mut out = vec!["diagram".to_string()];
            out.extend(vertices.iter().enumerate().map(|(i, l)| format!("  v{i} {l}")));
            let edges: Vec<String> = edges.iter().map(|(x, y)| format!("v{x} < v{y}")).collect();
            out.push(format!("  edges: {}", edges.join(", ")));
            out
        }
    }
}

impl fmt::Display for ModuleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.summands.iter().enumerate() {
            let lines = render_summand(s);
            writeln!(f, "  [{}] {}", i + 1, lines[0])?;
            for l in &lines[1..] {
                writeln!(f, "      {l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.query;
        writeln!(f, "S({}) e={} p={}: {}", self.specht, q.e, q.p, self.verdict)?;
        if let Some(s) = &self.structure {
            write!(f, "{s}")?;
            if s.is_semisimple() && s.summands.len() > 1 {
                let all: Vec<String> = s.labels().iter().map(|l| l.to_string()).collect();
                writeln!(f, "  = {}", all.join(" ⊕ "))?;
            }
        }
        if let Some(n) = self.summand_count {
            writeln!(f, "  summands: {n}")?;
        }
        if let Some(c) = &self.composition {
            let parts: Vec<String> = c.iter().map(|(l, m)| if *m == 1 { l.to_string() } else { format!("{l} x{m}") }).collect();
            writeln!(f, "  composition factors: {}", parts.join(", "))?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
