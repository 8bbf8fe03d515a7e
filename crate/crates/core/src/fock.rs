//! Level-two Fock space with bicharge `(0,0)`, divided-power induction and
//! the LLT algorithm for the canonical basis.
//!
//! Entries of the canonical basis are the characteristic-zero graded
//! decomposition numbers `d_{λμ}(q)`, with `G(μ) = Σ_λ d_{λμ}(q) |λ⟩`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{quantum_factorial, LaurentPoly};
use crate::combinatorics::{Bipartition, QuantumCharacteristic};
use crate::crystal::{e_tilde, is_regular, normal_nodes};
use crate::error::{Error, Result};
use crate::tableaux::{d_statistic, graded_dimension_memo};

/// Largest level the LLT routines accept.
pub const LLT_SIZE_BOUND: usize = 18;

/// Which node statistic gives the `q`-power of `f_i`.
///
/// `Codegree` counts `i`-nodes above the added node and makes
/// `f_0|∅⟩ = |((1),∅)⟩ + q|(∅,(1))⟩`; it matches the codegree grading of
/// Specht modules used throughout. `Degree` counts nodes below instead.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Degree,
    #[default]
    Codegree,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Degree => "degree",
            Convention::Codegree => "codegree",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degree" => Ok(Convention::Degree),
            "codegree" => Ok(Convention::Codegree),
            _ => Err(Error::Parse { input: s.into(), reason: "expected degree or codegree".into() }),
        }
    }
}

/// A finitely supported vector; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector(BTreeMap<Bipartition, LaurentPoly>);

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(la: Bipartition) -> Self {
        FockVector([(la, LaurentPoly::one())].into())
    }

    pub fn vacuum() -> Self {
        FockVector::basis(Bipartition::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, la: &Bipartition) -> LaurentPoly {
        self.0.get(la).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Bipartition, &LaurentPoly)> {
        self.0.iter()
    }

    /// `self += c · |la⟩`.
    pub fn add_term(&mut self, la: &Bipartition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(la) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.0.remove(la);
                }
            }
            None => {
                self.0.insert(la.clone(), c.clone());
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &FockVector, c: &LaurentPoly) {
        for (la, x) in other.iter() {
            self.add_term(la, &(c * x));
        }
    }

    /// Applies `q ↦ q⁻¹` to every coefficient. This is not the bar
    /// involution of the Fock space, only a coefficientwise check.
    pub fn bar_coefficients(&self) -> FockVector {
        FockVector(self.0.iter().map(|(k, v)| (k.clone(), v.bar())).collect())
    }
}

/// `f_i` on `v`: `f_i|λ⟩ = Σ_A q^(d(λ∪A)) |λ∪A⟩` over addable `i`-nodes `A`.
pub fn apply_f(v: &FockVector, i: u32, e: QuantumCharacteristic, conv: Convention) -> FockVector {
    let mut out = FockVector::zero();
    for (la, c) in v.iter() {
        for node in la.addable_nodes(i, e) {
            let grown = la.with_node(&node);
            let d = d_statistic(&grown, &node, e, conv == Convention::Codegree);
            out.add_term(&grown, &c.shift(d));
        }
    }
    out
}

/// `f_i^(m) = f_i^m / [m]!`. Inexact division is a convention fault.
pub fn apply_f_divided(v: &FockVector, i: u32, m: u32, e: QuantumCharacteristic, conv: Convention) -> Result<FockVector> {
    if m == 0 {
        return Err(Error::Precondition("divided power of order 0".into()));
    }
    e.check_residue(i)?;
    let mut w = v.clone();
    for _ in 0..m {
        w = apply_f(&w, i, e, conv);
    }
    let fact = quantum_factorial(m);
    let mut out = BTreeMap::new();
    for (la, c) in w.0 {
        let d = c
            .div_exact(&fact)
            .ok_or_else(|| Error::Convention(format!("f_{i}^{m} coefficient {c} of {la} is not divisible by [{m}]!")))?;
        out.insert(la, d);
    }
    Ok(FockVector(out))
}

/// Memoised LLT computation of canonical basis vectors `G(μ)`.
///
/// For a residue `i` with `ε = ε_i(μ) > 0` and `ν = ẽ_i^ε μ`, the vector
/// `f_i^(ε) G(ν)` is bar-invariant and contains `|μ⟩` with coefficient 1,
/// but it can also reach labels above `μ`. The first residue whose run
/// gives a vector topped by `μ` is used; failing that, terms above `μ` are
/// cleared with their own canonical vectors. Subtracting bar-invariant
/// multiples of `G(λ)` then brings every other coefficient into `qℤ[q]`.
#[derive(Debug, Clone)]
pub struct Llt {
    e: QuantumCharacteristic,
    conv: Convention,
    reverse: bool,
    memo: HashMap<Bipartition, FockVector>,
    pending: HashSet<Bipartition>,
}

impl Llt {
    pub fn new(e: QuantumCharacteristic, conv: Convention) -> Self {
        Llt { e, conv, reverse: false, memo: HashMap::new(), pending: HashSet::new() }
    }

    /// Tries the largest residue first instead of the smallest.
    pub fn reversed(mut self) -> Self {
        self.reverse = true;
        self
    }

    fn runs(&self, mu: &Bipartition) -> Vec<(u32, u32)> {
        let mut order: Vec<u32> = (0..self.e.get()).collect();
        if self.reverse {
            order.reverse();
        }
        order
            .into_iter()
            .filter_map(|i| {
                let eps = normal_nodes(mu, i, self.e).len() as u32;
                (eps > 0).then_some((i, eps))
            })
            .collect()
    }

    fn run_vector(&mut self, mu: &Bipartition, i: u32, m: u32) -> Result<FockVector> {
        let mut nu = mu.clone();
        for _ in 0..m {
            nu = e_tilde(&nu, i, self.e).ok_or_else(|| Error::NotRegular(mu.to_string(), self.e.get()))?;
        }
        let g = self.canonical(&nu)?;
        apply_f_divided(&g, i, m, self.e, self.conv)
    }

    /// A bar-invariant vector containing `|μ⟩` with coefficient 1.
    pub fn first_approximation(&mut self, mu: &Bipartition) -> Result<FockVector> {
        if !is_regular(mu, self.e) {
            return Err(Error::NotRegular(mu.to_string(), self.e.get()));
        }
        if mu.is_empty() {
            return Ok(FockVector::vacuum());
        }
        let runs = self.runs(mu);
        let mut fallback = None;
        for &(i, m) in &runs {
            let v = self.run_vector(mu, i, m)?;
            let topped = v.coeff(mu) == LaurentPoly::one()
                && v.iter().all(|(la, _)| la.linear_cmp(mu) != Ordering::Greater);
            if topped {
                return Ok(v);
            }
            fallback.get_or_insert(v);
        }
        fallback.ok_or_else(|| Error::NotRegular(mu.to_string(), self.e.get()))
    }

    /// `G(μ)` for regular `μ`.
    pub fn canonical(&mut self, mu: &Bipartition) -> Result<FockVector> {
        check_level(mu.size() as u32)?;
        if let Some(g) = self.memo.get(mu) {
            return Ok(g.clone());
        }
        if !self.pending.insert(mu.clone()) {
            return Err(Error::Convention(format!("elimination for {mu} does not terminate")));
        }
        let mut v = self.first_approximation(mu)?;
        loop {
            let bad = v
                .iter()
                .filter(|(la, c)| *la != mu && (!c.in_q_z_q() || la.linear_cmp(mu) == Ordering::Greater))
                .max_by(|a, b| a.0.linear_cmp(b.0))
                .map(|(la, c)| (la.clone(), c.clone()));
            let Some((la, c)) = bad else { break };
            let correction = c.bar_symmetrize_nonpositive();
            if correction.is_zero() || !is_regular(&la, self.e) {
                return Err(Error::Convention(format!("A({mu}) has coefficient {c} at {la} outside the window")));
            }
            let g = self.canonical(&la)?;
            v.add_scaled(&g, &-&correction);
        }
        self.pending.remove(mu);
        if v.coeff(mu) != LaurentPoly::one() {
            return Err(Error::Convention(format!("leading coefficient of G({mu}) is {}", v.coeff(mu))));
        }
        self.memo.insert(mu.clone(), v.clone());
        Ok(v)
    }
}

/// `A(μ)` as computed by [`Llt`].
pub fn first_approximation(mu: &Bipartition, e: QuantumCharacteristic, conv: Convention) -> Result<FockVector> {
    Llt::new(e, conv).first_approximation(mu)
}

/// Canonical basis columns for one level or block.
///
/// Rows and columns are listed in decreasing linear order, which refines
/// dominance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub e: u32,
    pub n: u32,
    pub convention: Convention,
    pub rows: Vec<Bipartition>,
    pub columns: Vec<Bipartition>,
    cols: BTreeMap<Bipartition, FockVector>,
}

impl DecompositionMatrix {
    pub fn entry(&self, la: &Bipartition, mu: &Bipartition) -> LaurentPoly {
        self.cols.get(mu).map(|g| g.coeff(la)).unwrap_or_default()
    }

    pub fn column(&self, mu: &Bipartition) -> Option<&FockVector> {
        self.cols.get(mu)
    }

    /// Nonzero entries of the row of `la`, columns in matrix order.
    pub fn row(&self, la: &Bipartition) -> Vec<(Bipartition, LaurentPoly)> {
        self.columns
            .iter()
            .map(|mu| (mu.clone(), self.entry(la, mu)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// All nonzero entries as `(λ, μ, d_{λμ})`, rows then columns in matrix order.
    pub fn entries(&self) -> Vec<(Bipartition, Bipartition, LaurentPoly)> {
        let mut out = Vec::new();
        for la in &self.rows {
            for (mu, c) in self.row(la) {
                out.push((la.clone(), mu, c));
            }
        }
        out
    }

    pub fn from_entries(
        e: u32,
        n: u32,
        convention: Convention,
        rows: Vec<Bipartition>,
        columns: Vec<Bipartition>,
        entries: impl IntoIterator<Item = (Bipartition, Bipartition, LaurentPoly)>,
    ) -> Result<Self> {
        let mut cols: BTreeMap<Bipartition, FockVector> = columns.iter().map(|c| (c.clone(), FockVector::zero())).collect();
        for (la, mu, c) in entries {
            cols.get_mut(&mu)
                .ok_or_else(|| Error::Parse { input: mu.to_string(), reason: "entry in an unlisted column".into() })?
                .add_term(&la, &c);
        }
        Ok(DecompositionMatrix { e, n, convention, rows, columns, cols })
    }

    /// Merges the blocks of one level.
    fn merge(mut self, other: DecompositionMatrix) -> Self {
        self.rows.extend(other.rows);
        self.columns.extend(other.columns);
        self.cols.extend(other.cols);
        let desc = |a: &Bipartition, b: &Bipartition| b.linear_cmp(a);
        self.rows.sort_by(desc);
        self.columns.sort_by(desc);
        self
    }

    /// Unitriangular with respect to dominance, with off-diagonal entries
    /// in `qℤ[q]`.
    pub fn check_unitriangular(&self) -> Result<()> {
        for mu in &self.columns {
            for (la, c) in self.cols[mu].iter() {
                if la == mu {
                    if *c != LaurentPoly::one() {
                        return Err(Error::Convention(format!("diagonal entry at {mu} is {c}")));
                    }
                } else if !c.in_q_z_q() || !mu.dominates_unchecked(la) {
                    return Err(Error::Convention(format!("entry ({la}, {mu}) = {c} breaks unitriangularity")));
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    e: u32,
    n: u32,
    convention: Convention,
    rows: Vec<Bipartition>,
    columns: Vec<Bipartition>,
    entries: Vec<(Bipartition, Bipartition, LaurentPoly)>,
}

impl Serialize for DecompositionMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            e: self.e,
            n: self.n,
            convention: self.convention,
            rows: self.rows.clone(),
            columns: self.columns.clone(),
            entries: self.entries(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DecompositionMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MatrixRepr::deserialize(d)?;
        DecompositionMatrix::from_entries(r.e, r.n, r.convention, r.rows, r.columns, r.entries)
            .map_err(serde::de::Error::custom)
    }
}

fn check_level(n: u32) -> Result<()> {
    if n as usize > LLT_SIZE_BOUND {
        return Err(Error::SizeBound { size: n as usize, bound: LLT_SIZE_BOUND });
    }
    Ok(())
}

/// Canonical basis of the block of level `n` with residue content `content`.
pub fn canonical_basis_block(
    n: u32,
    content: &[u32],
    e: QuantumCharacteristic,
    conv: Convention,
) -> Result<DecompositionMatrix> {
    check_level(n)?;
    let mut rows: Vec<Bipartition> = Bipartition::all(n).into_iter().filter(|la| la.content(e) == content).collect();
    rows.sort_by(|a, b| b.linear_cmp(a));
    let columns: Vec<Bipartition> = rows.iter().filter(|la| is_regular(la, e)).cloned().collect();
    let mut llt = Llt::new(e, conv);
    let mut cols = BTreeMap::new();
    for mu in &columns {
        cols.insert(mu.clone(), llt.canonical(mu)?);
    }
    let m = DecompositionMatrix { e: e.get(), n, convention: conv, rows, columns, cols };
    m.check_unitriangular()?;
    Ok(m)
}

/// The canonical basis of the block containing `la`.
pub fn canonical_basis_of(la: &Bipartition, e: QuantumCharacteristic, conv: Convention) -> Result<DecompositionMatrix> {
    canonical_basis_block(la.size() as u32, &la.content(e), e, conv)
}

/// The nonzero entries `d_{λμ}(q)` of the row of `la`, computing only the
/// columns `μ ⊵ λ` of its block.
pub fn canonical_row(la: &Bipartition, e: QuantumCharacteristic, conv: Convention) -> Result<Vec<(Bipartition, LaurentPoly)>> {
    let n = la.size() as u32;
    check_level(n)?;
    let content = la.content(e);
    let mut columns = Vec::new();
    for mu in Bipartition::all(n) {
        if mu.content(e) == content && mu.dominates(la)? && is_regular(&mu, e) {
            columns.push(mu);
        }
    }
    columns.sort_by(|a, b| b.linear_cmp(a));
    let mut llt = Llt::new(e, conv);
    let mut row = Vec::new();
    for mu in columns {
        let c = llt.canonical(&mu)?.coeff(la);
        if !c.is_zero() {
            row.push((mu, c));
        }
    }
    Ok(row)
}

/// The canonical basis of level `n`, block by block.
pub fn canonical_basis(n: u32, e: QuantumCharacteristic, conv: Convention) -> Result<DecompositionMatrix> {
    check_level(n)?;
    let mut contents: Vec<Vec<u32>> = Bipartition::all(n).iter().map(|la| la.content(e)).collect();
    contents.sort();
    contents.dedup();
    let mut out = DecompositionMatrix {
        e: e.get(),
        n,
        convention: conv,
        rows: Vec::new(),
        columns: Vec::new(),
        cols: BTreeMap::new(),
    };
    for c in contents {
        out = out.merge(canonical_basis_block(n, &c, e, conv)?);
    }
    Ok(out)
}

/// Graded dimensions of the simple modules labelled by the columns of `m`,
/// from `dim_q S^λ = Σ_μ d_{λμ}(q) dim_q D^μ` on regular rows.
pub fn simple_graded_dims(m: &DecompositionMatrix) -> Result<BTreeMap<Bipartition, LaurentPoly>> {
    let e = QuantumCharacteristic::new(m.e)?;
    let mut memo = HashMap::new();
    let mut out: BTreeMap<Bipartition, LaurentPoly> = BTreeMap::new();
    // most dominant first: only columns above mu contribute to row mu
    for mu in &m.columns {
        let mut d = graded_dimension_memo(mu, e, &mut memo);
        for (nu, c) in m.row(mu) {
            if &nu != mu {
                let known = out.get(&nu).ok_or_else(|| Error::Convention(format!("{nu} is not above {mu}")))?;
                d -= &(&c * known);
            }
        }
        if !d.is_bar_invariant() || !d.has_nonnegative_coeffs() {
            return Err(Error::Convention(format!("dim_q D({mu}) = {d} is not a bar-invariant nonnegative polynomial")));
        }
        out.insert(mu.clone(), d);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::graded_dimension;

    fn qe(e: u32) -> QuantumCharacteristic {
        QuantumCharacteristic::new(e).unwrap()
    }

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn f_on_vacuum() {
        let e = qe(3);
        let v = apply_f(&FockVector::vacuum(), 0, e, Convention::Codegree);
        assert_eq!(v.coeff(&bp("1|-")), lp("1"));
        assert_eq!(v.coeff(&bp("-|1")), lp("q"));
        let v = apply_f(&FockVector::vacuum(), 0, e, Convention::Degree);
        assert_eq!(v.coeff(&bp("1|-")), lp("q"));
        assert_eq!(v.coeff(&bp("-|1")), lp("1"));
        assert!(apply_f(&FockVector::zero(), 0, e, Convention::Codegree).is_zero());
        assert!(apply_f(&FockVector::vacuum(), 1, e, Convention::Codegree).is_zero());
    }

    #[test]
    fn f_mass_counts_addable_nodes() {
        for e in 2..=4 {
            let e = qe(e);
            for n in 0..=5 {
                for la in Bipartition::all(n) {
                    for i in 0..e.get() {
                        let v = apply_f(&FockVector::basis(la.clone()), i, e, Convention::Codegree);
                        let mass: num_bigint::BigInt = v.iter().map(|(_, c)| c.eval_one()).sum();
                        assert_eq!(mass, (la.addable_nodes(i, e).len() as i64).into());
                    }
                }
            }
        }
    }

    #[test]
    fn divided_powers() {
        let e = qe(2);
        for conv in [Convention::Degree, Convention::Codegree] {
            let v = apply_f_divided(&FockVector::vacuum(), 0, 2, e, conv).unwrap();
            assert_eq!(v, FockVector::basis(bp("1|1")));
            let w = apply_f_divided(&FockVector::vacuum(), 0, 1, e, conv).unwrap();
            assert_eq!(w, apply_f(&FockVector::vacuum(), 0, e, conv));
        }
    }

    #[test]
    fn first_approximations() {
        let e = qe(3);
        let a = first_approximation(&bp("1|-"), e, Convention::Codegree).unwrap();
        assert_eq!(a, apply_f(&FockVector::vacuum(), 0, e, Convention::Codegree));
        let a = first_approximation(&bp("3|-"), e, Convention::Codegree).unwrap();
        assert_eq!(a.coeff(&bp("3|-")), LaurentPoly::one());
        assert!(first_approximation(&bp("-|1"), e, Convention::Codegree).is_err());
    }

    #[test]
    fn matrices_unitriangular() {
        for (e, max) in [(2u32, 8u32), (3, 8), (4, 6)] {
            for n in 0..=max {
                let m = canonical_basis(n, qe(e), Convention::Codegree).unwrap();
                m.check_unitriangular().unwrap();
                let regular = Bipartition::all(n).into_iter().filter(|la| is_regular(la, qe(e))).count();
                assert_eq!(m.columns.len(), regular);
            }
        }
    }

    #[test]
    fn independent_of_peeling_order() {
        // G(μ) is determined by bar-invariance and the qℤ[q] window, so a
        // different first approximation must give the same column
        for e in [2u32, 3] {
            let e = qe(e);
            for n in 1..=8 {
                let m = canonical_basis(n, e, Convention::Codegree).unwrap();
                let mut other = Llt::new(e, Convention::Codegree).reversed();
                for mu in &m.columns {
                    assert_eq!(Some(&other.canonical(mu).unwrap()), m.column(mu), "{mu}");
                }
            }
        }
    }

    #[test]
    fn approximations_bar_invariant() {
        // the coefficientwise bar of A(μ) differs from A(μ) but both have
        // the same leading term; the canonical vector has only qℤ[q] below it
        let e = qe(2);
        let mut llt = Llt::new(e, Convention::Codegree);
        let mu = bp("4,2,1|-");
        let a = llt.first_approximation(&mu).unwrap();
        assert_eq!(a.coeff(&mu), LaurentPoly::one());
        let g = llt.canonical(&mu).unwrap();
        assert!(g.iter().all(|(la, c)| la == &mu || c.in_q_z_q()));
    }

    #[test]
    fn e2_n4_bihook_row() {
        let m = canonical_basis(4, qe(2), Convention::Codegree).unwrap();
        let row = m.row(&bp("2|2"));
        let got: Vec<(String, String)> = row.iter().map(|(mu, c)| (mu.to_string(), c.to_string())).collect();
        assert_eq!(got, vec![("4|-".to_string(), "q".to_string()), ("2,1|1".to_string(), "q".to_string())]);
    }

    #[test]
    fn simple_dims_balance() {
        for (e, max) in [(2u32, 8u32), (3, 8)] {
            let e = qe(e);
            for n in 1..=max {
                let m = canonical_basis(n, e, Convention::Codegree).unwrap();
                let dims = simple_graded_dims(&m).unwrap();
                for la in &m.rows {
                    let mut total = LaurentPoly::zero();
                    for (mu, c) in m.row(la) {
                        total += &(&c * &dims[&mu]);
                    }
                    assert_eq!(total, graded_dimension(la, e), "{la}");
                }
            }
        }
        let m = canonical_basis(6, qe(3), Convention::Codegree).unwrap();
        let dims = simple_graded_dims(&m).unwrap();
        let top = &m.columns[0];
        assert_eq!(dims[top], graded_dimension(top, qe(3)));
    }

    #[test]
    fn degree_convention_fails_loudly() {
        let r = canonical_basis(2, qe(2), Convention::Degree);
        assert!(matches!(r, Err(Error::Convention(_))));
    }

    #[test]
    fn serde_round_trip() {
        let m = canonical_basis(4, qe(2), Convention::Codegree).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        let back: DecompositionMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }
}
