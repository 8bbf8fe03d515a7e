//! Signatures, good and cogood nodes, the crystal operators, regularity, the
//! Mullineux map and the label maps built from them.

use std::collections::HashSet;
use std::fmt;

use crate::combinatorics::{Bipartition, Node, Partition, QuantumCharacteristic};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// An `i`-signature: signs with their nodes, read from the top of the first
/// component to the bottom of the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature(pub Vec<(Sign, Node)>);

impl Signature {
    pub fn signs(&self) -> String {
        self.0.iter().map(|(s, _)| if *s == Sign::Plus { '+' } else { '-' }).collect()
    }

    /// Cancels adjacent `+-` pairs until none remain.
    pub fn reduce(&self) -> Signature {
        let mut stack: Vec<(Sign, Node)> = Vec::with_capacity(self.0.len());
        for &(s, n) in &self.0 {
            if s == Sign::Minus && matches!(stack.last(), Some((Sign::Plus, _))) {
                stack.pop();
            } else {
                stack.push((s, n));
            }
        }
        Signature(stack)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signs())
    }
}

pub fn signature(la: &Bipartition, i: u32, e: QuantumCharacteristic) -> Signature {
    let mut v: Vec<(Sign, Node)> = la
        .addable_nodes(i, e)
        .into_iter()
        .map(|n| (Sign::Plus, n))
        .chain(la.removable_nodes(i, e).into_iter().map(|n| (Sign::Minus, n)))
        .collect();
    v.sort_by_key(|(_, n)| *n);
    Signature(v)
}

pub fn reduced_signature(la: &Bipartition, i: u32, e: QuantumCharacteristic) -> Signature {
    signature(la, i, e).reduce()
}

/// Removable nodes surviving in the reduced signature.
pub fn normal_nodes(la: &Bipartition, i: u32, e: QuantumCharacteristic) -> Vec<Node> {
    reduced_signature(la, i, e).0.into_iter().filter(|(s, _)| *s == Sign::Minus).map(|(_, n)| n).collect()
}

/// Addable nodes surviving in the reduced signature.
pub fn conormal_nodes(la: &Bipartition, i: u32, e: QuantumCharacteristic) -> Vec<Node> {
    reduced_signature(la, i, e).0.into_iter().filter(|(s, _)| *s == Sign::Plus).map(|(_, n)| n).collect()
}

pub fn good_node(la: &Bipartition, i: u32, e: QuantumCharacteristic) -> Option<Node> {
    normal_nodes(la, i, e).last().copied()
}

pub fn cogood_node(la: &Bipartition, i: u32, e: QuantumCharacteristic) -> Option<Node> {
    conormal_nodes(la, i, e).first().copied()
}

pub fn f_tilde(la: &Bipartition, i: u32, e: QuantumCharacteristic) -> Option<Bipartition> {
    cogood_node(la, i, e).map(|n| la.with_node(&n))
}

pub fn e_tilde(la: &Bipartition, i: u32, e: QuantumCharacteristic) -> Option<Bipartition> {
    good_node(la, i, e).map(|n| la.without_node(&n))
}

/// Residues of a good-node peeling of `la` down to the empty bipartition,
/// listed in removal order, or `None` if no such peeling exists.
///
/// Residues are tried smallest first; dead ends are memoised so the search
/// is linear in the number of distinct shapes visited.
pub fn good_peeling(la: &Bipartition, e: QuantumCharacteristic) -> Option<Vec<u32>> {
    fn rec(
        la: &Bipartition,
        e: QuantumCharacteristic,
        dead: &mut HashSet<Bipartition>,
        path: &mut Vec<u32>,
    ) -> bool {
        if la.is_empty() {
            return true;
        }
        if dead.contains(la) {
            return false;
        }
        for i in 0..e.get() {
            if let Some(smaller) = e_tilde(la, i, e) {
                path.push(i);
                if rec(&smaller, e, dead, path) {
                    return true;
                }
                path.pop();
            }
        }
        dead.insert(la.clone());
        false
    }
    let mut path = Vec::new();
    rec(la, e, &mut HashSet::new(), &mut path).then_some(path)
}

pub fn is_regular(la: &Bipartition, e: QuantumCharacteristic) -> bool {
    good_peeling(la, e).is_some()
}

/// Applies `f̃` along a residue sequence, starting at `start`.
pub fn apply_cogood_sequence(
    start: &Bipartition,
    residues: &[u32],
    e: QuantumCharacteristic,
) -> Result<Bipartition> {
    let mut cur = start.clone();
    for &i in residues {
        cur = f_tilde(&cur, i, e).ok_or_else(|| Error::NoCogoodNode { residue: i, shape: cur.to_string() })?;
    }
    Ok(cur)
}

/// The Mullineux image: rebuild `la` from the empty bipartition by cogood
/// additions, with every residue negated.
pub fn mullineux(la: &Bipartition, e: QuantumCharacteristic) -> Result<Bipartition> {
    let peel = good_peeling(la, e).ok_or_else(|| Error::NotRegular(la.to_string(), e.get()))?;
    let build: Vec<u32> = peel.iter().rev().map(|&i| e.negate(i)).collect();
    apply_cogood_sequence(&Bipartition::empty(), &build, e)
}

/// `{x}`: the `e-1` values `⌊(x+t)/(e-1)⌋` for `t = e-2, ..., 0`.
pub fn braces_int(x: u32, e: QuantumCharacteristic) -> Vec<u32> {
    let d = e.get() - 1;
    (0..d).rev().map(|t| (x + t) / d).collect()
}

fn braces_partition(p: &Partition, e: QuantumCharacteristic) -> Result<Partition> {
    let parts: Vec<u32> = p.parts().iter().flat_map(|&x| braces_int(x, e)).collect();
    Partition::new(parts.clone()).map_err(|_| {
        Error::Precondition(format!("braces of {p} gives {parts:?}, which is not a partition"))
    })
}

/// `{λ}`, applied row by row and component by component.
pub fn braces(la: &Bipartition, e: QuantumCharacteristic) -> Result<Bipartition> {
    Ok(Bipartition::new(braces_partition(&la.c1, e)?, braces_partition(&la.c2, e)?))
}

/// The label map on two-column partitions: `(1^n)` goes to `((ne), ∅)` and
/// `(2^m, 1^(n-2m))` to `(((n-m)e, (m-1)e+1), (e-1))`.
pub fn scrt(mu: &Partition, e: QuantumCharacteristic) -> Result<Bipartition> {
    if mu.parts().iter().any(|&x| x > 2) {
        return Err(Error::NotTwoColumn(mu.to_string()));
    }
    let n = mu.size() as u32;
    let m = mu.parts().iter().filter(|&&x| x == 2).count() as u32;
    scrt_counts(m, n, e)
}

/// [`scrt`] for `(2^m, 1^(n-2m))` given by its counts.
pub fn scrt_counts(m: u32, n: u32, e: QuantumCharacteristic) -> Result<Bipartition> {
    if 2 * m > n {
        return Err(Error::Precondition(format!("2m = {} exceeds n = {n}", 2 * m)));
    }
    let e = e.get();
    if m == 0 {
        return Bipartition::from_parts(&[n * e], &[]);
    }
    Bipartition::from_parts(&[(n - m) * e, (m - 1) * e + 1], &[e - 1])
}

/// The residue program of the induction map `F_{a,b}`, as `(residue,
/// multiplicity)` steps in the order they are applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionRecipe {
    pub a: u32,
    pub b: u32,
    pub e: QuantumCharacteristic,
    pub steps: Vec<(u32, u32)>,
}

impl InductionRecipe {
    pub fn new(a: u32, b: u32, e: QuantumCharacteristic) -> Result<Self> {
        let ee = e.get();
        let valid = (a == 0 && b == 0) || (a > 0 && a <= ee && b < ee && a + b != ee);
        if !valid {
            return Err(Error::BadInduction { a, b, e: ee });
        }
        let mut steps = Vec::new();
        if a + b < ee {
            steps.extend((0..a).map(|i| (i, 2)));
            steps.extend((ee - b..ee).rev().map(|i| (i, 2)));
        } else if a + b > ee {
            // a >= 1 here, and a - 1 >= e - b because a + b > e
            steps.extend((0..a - 1).map(|i| (i, 2)));
            steps.extend((a..ee).rev().map(|i| (i, 2)));
            steps.push((a - 1, 4));
            steps.extend((ee - b..a - 1).rev().map(|i| (i, 2)));
        }
        Ok(InductionRecipe { a, b, e, steps })
    }

    /// The recipe with every residue negated.
    pub fn negated(&self) -> Vec<(u32, u32)> {
        self.steps.iter().map(|&(i, m)| (self.e.negate(i), m)).collect()
    }

    /// The expanded residue sequence of single `f̃` applications.
    pub fn residues(&self, negate: bool) -> Vec<u32> {
        let steps = if negate { self.negated() } else { self.steps.clone() };
        steps.iter().flat_map(|&(i, m)| std::iter::repeat_n(i, m as usize)).collect()
    }

    /// Renders as the composite, leftmost applied last: `f3^2 f1^2 f0^2`.
    pub fn describe(&self, negate: bool) -> String {
        let steps = if negate { self.negated() } else { self.steps.clone() };
        if steps.is_empty() {
            return "id".into();
        }
        steps.iter().rev().map(|(i, m)| format!("f{i}^{m}")).collect::<Vec<_>>().join(" ")
    }
}

/// `F_{a,b}(μ)`, or `-F_{a,b}(μ)` when `negate` is set.
pub fn f_ab(mu: &Bipartition, a: u32, b: u32, e: QuantumCharacteristic, negate: bool) -> Result<Bipartition> {
    let recipe = InductionRecipe::new(a, b, e)?;
    apply_cogood_sequence(mu, &recipe.residues(negate), e)
}
