//! Standard tableaux of bipartitions, residue sequences, degrees and graded
//! dimensions.

use std::collections::HashMap;
use std::fmt;

use crate::arith::LaurentPoly;
use crate::combinatorics::{Bipartition, Node, QuantumCharacteristic};
use crate::error::{Error, Result};

/// Default bound on the number of boxes for enumeration.
pub const DEFAULT_SIZE_BOUND: usize = 25;

/// A filling of `[shape]` by `1..=n`, stored as the node holding each entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Bipartition,
    // positions[r - 1] is the node containing r
    positions: Vec<Node>,
}

impl Tableau {
    /// Builds a tableau from the node of each entry `1..=n`.
    pub fn from_positions(shape: Bipartition, positions: Vec<Node>) -> Result<Self> {
        if positions.len() != shape.size() {
            return Err(Error::SizeMismatch(positions.len(), shape.size()));
        }
        let mut seen = std::collections::HashSet::new();
        for node in &positions {
            if !shape.contains(node) {
                return Err(Error::NodeOutsideDiagram(node.to_string()));
            }
            if !seen.insert(*node) {
                return Err(Error::Precondition(format!("node {node} filled twice")));
            }
        }
        Ok(Tableau { shape, positions })
    }

    /// Builds a tableau from row lists of both components.
    pub fn from_rows(c1: &[Vec<u32>], c2: &[Vec<u32>]) -> Result<Self> {
        let lens = |rows: &[Vec<u32>]| rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>();
        let shape = Bipartition::from_parts(&lens(c1), &lens(c2))?;
        let n = shape.size();
        let mut positions = vec![None; n];
        for (comp, rows) in [(1u8, c1), (2u8, c2)] {
            for (r, row) in rows.iter().enumerate() {
                for (c, &x) in row.iter().enumerate() {
                    let slot = (x as usize).checked_sub(1).filter(|&i| i < n).ok_or_else(|| {
                        Error::Precondition(format!("entry {x} outside 1..={n}"))
                    })?;
                    if positions[slot].is_some() {
                        return Err(Error::Precondition(format!("entry {x} repeated")));
                    }
                    positions[slot] = Some(Node::new(r as u32 + 1, c as u32 + 1, comp));
                }
            }
        }
        Tableau::from_positions(shape, positions.into_iter().map(Option::unwrap).collect())
    }

    /// The tableau `v(a_1, ..., a_m)` of a shape with one row per component:
    /// the second component holds the listed entries and the first holds the rest.
    pub fn from_second_row(shape: &Bipartition, entries: &[u32]) -> Result<Self> {
        if shape.c1.len() > 1 || shape.c2.len() > 1 || shape.c2.size() != entries.len() {
            return Err(Error::Precondition("v(...) needs one row per component".into()));
        }
        let n = shape.size() as u32;
        let mut sorted = entries.to_vec();
        sorted.sort_unstable();
        let rest: Vec<u32> = (1..=n).filter(|x| sorted.binary_search(x).is_err()).collect();
        let c1 = if rest.is_empty() { vec![] } else { vec![rest] };
        let c2 = if entries.is_empty() { vec![] } else { vec![entries.to_vec()] };
        Tableau::from_rows(&c1, &c2)
    }

    pub fn shape(&self) -> &Bipartition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.positions.len()
    }

    /// Node holding entry `r` (1-based).
    pub fn node_of(&self, r: usize) -> Node {
        self.positions[r - 1]
    }

    pub fn entry(&self, node: &Node) -> Option<u32> {
        self.positions.iter().position(|n| n == node).map(|i| i as u32 + 1)
    }

    /// Row lists for both components.
    pub fn rows(&self) -> [Vec<Vec<u32>>; 2] {
        let mut out = [Vec::new(), Vec::new()];
        for (m, comp) in [(0usize, &self.shape.c1), (1, &self.shape.c2)] {
            out[m] = comp.parts().iter().map(|&len| vec![0; len as usize]).collect();
        }
        for (i, node) in self.positions.iter().enumerate() {
            out[node.comp as usize - 1][node.row as usize - 1][node.col as usize - 1] = i as u32 + 1;
        }
        out
    }

    pub fn is_standard(&self) -> bool {
        let rows = self.rows();
        rows.iter().all(|comp| {
            comp.iter().enumerate().all(|(r, row)| {
                row.iter().enumerate().all(|(c, &x)| {
                    let right_ok = row.get(c + 1).is_none_or(|&y| y > x);
                    let down_ok = comp.get(r + 1).and_then(|next| next.get(c)).is_none_or(|&y| y > x);
                    right_ok && down_ok
                })
            })
        })
    }

    pub fn residue_sequence(&self, e: QuantumCharacteristic) -> Vec<u32> {
        self.positions.iter().map(|n| n.residue(e)).collect()
    }

    pub fn degree(&self, e: QuantumCharacteristic) -> Result<i32> {
        self.peel(e, false)
    }

    pub fn codegree(&self, e: QuantumCharacteristic) -> Result<i32> {
        self.peel(e, true)
    }

    fn peel(&self, e: QuantumCharacteristic, above: bool) -> Result<i32> {
        if !self.is_standard() {
            return Err(Error::NotStandard);
        }
        let mut shape = self.shape.clone();
        let mut total = 0;
        for node in self.positions.iter().rev() {
            total += d_statistic(&shape, node, e, above);
            shape = shape.without_node(node);
        }
        Ok(total)
    }

    /// Compact notation: `v(a_1,...)` for one-row components,
    /// otherwise row lists such as `[[1,3],[2]]|[[4]]`.
    pub fn notation(&self) -> String {
        let rows = self.rows();
        let list = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        if self.shape.c1.len() <= 1 && self.shape.c2.len() <= 1 {
            let second = rows[1].first().map(|r| list(r)).unwrap_or_default();
            return format!("v({second})");
        }
        let comp = |c: &Vec<Vec<u32>>| format!("[{}]", c.iter().map(|r| format!("[{}]", list(r))).collect::<Vec<_>>().join(","));
        format!("{}|{}", comp(&rows[0]), comp(&rows[1]))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.notation())
    }
}

/// `d_A(λ)` (nodes below `A`) or `d^A(λ)` (nodes above `A`) for an `i`-node
/// `A` of `λ` with `i = res A`.
pub fn d_statistic(shape: &Bipartition, node: &Node, e: QuantumCharacteristic, above: bool) -> i32 {
    let i = node.residue(e);
    let side = |n: &Node| if above { n.is_above(node) } else { node.is_above(n) };
    let add = shape.addable_nodes(i, e).iter().filter(|n| side(n)).count() as i32;
    let rem = shape.removable_nodes(i, e).iter().filter(|n| side(n)).count() as i32;
    add - rem
}

fn check_bound(shape: &Bipartition, bound: usize) -> Result<()> {
    if shape.size() > bound {
        return Err(Error::SizeBound { size: shape.size(), bound });
    }
    Ok(())
}

/// Depth-first walk over all standard tableaux of `shape`, placing entries
/// `1..=n` at addable nodes in the above-to-below order. `filter` may reject
/// a node for a given step. The visitor receives the node sequence and the
/// accumulated codegree.
fn walk<F, V>(shape: &Bipartition, e: QuantumCharacteristic, filter: &F, visit: &mut V)
where
    F: Fn(usize, &Node) -> bool,
    V: FnMut(&[Node], i32),
{
    fn rec<F, V>(
        target: &Bipartition,
        cur: &Bipartition,
        path: &mut Vec<Node>,
        codeg: i32,
        e: QuantumCharacteristic,
        filter: &F,
        visit: &mut V,
    ) where
        F: Fn(usize, &Node) -> bool,
        V: FnMut(&[Node], i32),
    {
        if path.len() == target.size() {
            visit(path, codeg);
            return;
        }
        for node in cur.addable() {
            if !target.contains(&node) || !filter(path.len(), &node) {
                continue;
            }
            let grown = cur.with_node(&node);
            let step = d_statistic(&grown, &node, e, true);
            path.push(node);
            rec(target, &grown, path, codeg + step, e, filter, visit);
            path.pop();
        }
    }
    rec(shape, &Bipartition::empty(), &mut Vec::new(), 0, e, filter, visit);
}

/// All standard tableaux of `shape` in the canonical enumeration order.
pub fn enumerate_standard(shape: &Bipartition, bound: usize) -> Result<Vec<Tableau>> {
    check_bound(shape, bound)?;
    let mut out = Vec::new();
    // residues are irrelevant for the shape walk; any e works
    let e = QuantumCharacteristic::new(2)?;
    walk(shape, e, &|_, _| true, &mut |path, _| {
        out.push(Tableau { shape: shape.clone(), positions: path.to_vec() });
    });
    Ok(out)
}

/// Number of standard tableaux by the removal recursion.
pub fn count_standard(shape: &Bipartition) -> u128 {
    fn rec(shape: &Bipartition, memo: &mut HashMap<Bipartition, u128>) -> u128 {
        if shape.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(shape) {
            return v;
        }
        let v = shape.removable().iter().map(|n| rec(&shape.without_node(n), memo)).sum();
        memo.insert(shape.clone(), v);
        v
    }
    rec(shape, &mut HashMap::new())
}

/// The column-initial tableau: entries run down columns from left to right,
/// second component first.
pub fn column_initial_tableau(shape: &Bipartition) -> Tableau {
    let mut positions = Vec::with_capacity(shape.size());
    for comp in [2u8, 1] {
        let p = shape.component(comp);
        let cols = p.row(1);
        for c in 1..=cols {
            for r in 1..=p.len() as u32 {
                if p.row(r) >= c {
                    positions.push(Node::new(r, c, comp));
                }
            }
        }
    }
    Tableau { shape: shape.clone(), positions }
}

/// `Σ_{t standard} q^{codeg t}`, by the removal recursion with memoisation.
pub fn graded_dimension(shape: &Bipartition, e: QuantumCharacteristic) -> LaurentPoly {
    let mut memo = HashMap::new();
    graded_dimension_memo(shape, e, &mut memo)
}

/// Same as [`graded_dimension`] with a caller-owned memo table, useful when
/// many shapes of one level are needed.
pub fn graded_dimension_memo(
    shape: &Bipartition,
    e: QuantumCharacteristic,
    memo: &mut HashMap<Bipartition, LaurentPoly>,
) -> LaurentPoly {
    if shape.is_empty() {
        return LaurentPoly::one();
    }
    if let Some(v) = memo.get(shape) {
        return v.clone();
    }
    let mut total = LaurentPoly::zero();
    for node in shape.removable() {
        let d = d_statistic(shape, &node, e, true);
        let sub = graded_dimension_memo(&shape.without_node(&node), e, memo);
        total += &sub.shift(d);
    }
    memo.insert(shape.clone(), total.clone());
    total
}

/// [`graded_dimension`] computed by walking every standard tableau.
pub fn graded_dimension_by_enumeration(
    shape: &Bipartition,
    e: QuantumCharacteristic,
    bound: usize,
) -> Result<LaurentPoly> {
    check_bound(shape, bound)?;
    let mut hist: HashMap<i32, i64> = HashMap::new();
    walk(shape, e, &|_, _| true, &mut |_, codeg| *hist.entry(codeg).or_default() += 1);
    Ok(LaurentPoly::from_terms(hist))
}

/// `Σ q^{codeg t}` over standard `t` whose residue sequence is `word`.
pub fn word_graded_dimension(
    shape: &Bipartition,
    word: &[u32],
    e: QuantumCharacteristic,
) -> Result<LaurentPoly> {
    if word.len() != shape.size() {
        return Err(Error::SizeMismatch(word.len(), shape.size()));
    }
    for &i in word {
        e.check_residue(i)?;
    }
    let mut hist: HashMap<i32, i64> = HashMap::new();
    walk(shape, e, &|step, node| node.residue(e) == word[step], &mut |_, codeg| {
        *hist.entry(codeg).or_default() += 1
    });
    Ok(LaurentPoly::from_terms(hist))
}

/// Graded dimensions split by residue sequence.
pub fn graded_dimension_by_word(
    shape: &Bipartition,
    e: QuantumCharacteristic,
    bound: usize,
) -> Result<HashMap<Vec<u32>, LaurentPoly>> {
    check_bound(shape, bound)?;
    let mut hist: HashMap<Vec<u32>, HashMap<i32, i64>> = HashMap::new();
    walk(shape, e, &|_, _| true, &mut |path, codeg| {
        let w: Vec<u32> = path.iter().map(|n| n.residue(e)).collect();
        *hist.entry(w).or_default().entry(codeg).or_default() += 1;
    });
    Ok(hist.into_iter().map(|(w, h)| (w, LaurentPoly::from_terms(h))).collect())
}

/// The Gelfand–Graev word `g^(n_1) ... g^(n_a)` with `g^(n) = 0^n 1^n ... (e-1)^n`.
pub fn gelfand_graev_word(nu: &[u32], e: QuantumCharacteristic) -> Vec<u32> {
    let mut out = Vec::new();
    for &n in nu {
        for i in 0..e.get() {
            out.extend(std::iter::repeat_n(i, n as usize));
        }
    }
    out
}

/// All compositions of `n` with positive parts.
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
