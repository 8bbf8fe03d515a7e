//! Partitions, bipartitions, nodes and residues.
//!
//! Nodes are ordered by the "above" relation: every node of the first
//! component is above every node of the second, and within a component a
//! node is above another when its row index is smaller. The derived `Ord` on
//! [`Node`] realises this order (ties inside a row never matter because a row
//! carries at most one addable or removable node of a given residue).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The quantum characteristic `e >= 2`. The bicharge is fixed to `(0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuantumCharacteristic(u32);

impl QuantumCharacteristic {
    pub fn new(e: u32) -> Result<Self> {
        if e < 2 {
            return Err(Error::BadQuantumCharacteristic(e));
        }
        Ok(QuantumCharacteristic(e))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Reduces an arbitrary integer into `{0, ..., e-1}`.
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    pub fn negate(self, i: u32) -> u32 {
        self.reduce(-(i as i64))
    }

    pub fn check_residue(self, i: u32) -> Result<()> {
        if i >= self.0 {
            return Err(Error::BadResidue { residue: i, e: self.0 });
        }
        Ok(())
    }
}

impl fmt::Display for QuantumCharacteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A node `(row, col, comp)` with 1-based row and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    // field order matters: derived Ord is the "above" order
    pub comp: u8,
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32, comp: u8) -> Self {
        debug_assert!(row >= 1 && col >= 1 && (comp == 1 || comp == 2));
        Node { comp, row, col }
    }

    pub fn residue(&self, e: QuantumCharacteristic) -> u32 {
        e.reduce(self.col as i64 - self.row as i64)
    }

    /// True when `self` lies strictly above `other`.
    pub fn is_above(&self, other: &Node) -> bool {
        self.comp < other.comp || (self.comp == other.comp && self.row < other.row)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

/// Residue of a node; the node need not belong to any diagram.
pub fn residue(node: &Node, e: QuantumCharacteristic) -> u32 {
    node.residue(e)
}

/// A partition, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(a, 1^b)`; `a = 0` gives the empty partition.
    pub fn hook(a: u32, b: u32) -> Self {
        if a == 0 {
            return Partition::empty();
        }
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, b as usize));
        Partition(parts)
    }

    /// `(2^m, 1^(n-2m))`.
    pub fn two_column(m: u32, n: u32) -> Self {
        debug_assert!(2 * m <= n);
        let mut parts = vec![2; m as usize];
        parts.extend(std::iter::repeat_n(1, (n - 2 * m) as usize));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Length of row `r` (1-based); zero beyond the last row.
    pub fn row(&self, r: u32) -> u32 {
        if r == 0 {
            return 0;
        }
        self.0.get(r as usize - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    pub fn contains(&self, row: u32, col: u32) -> bool {
        row >= 1 && col >= 1 && col <= self.row(row)
    }

    /// `h(a,b) = λ_a − b + λ'_b − a + 1`.
    pub fn hook_length(&self, row: u32, col: u32) -> Result<u32> {
        if !self.contains(row, col) {
            return Err(Error::NodeOutsideDiagram(format!("({row},{col})")));
        }
        let arm = self.row(row) - col;
        let leg = self.0.iter().skip(row as usize).filter(|&&p| p >= col).count() as u32;
        Ok(arm + leg + 1)
    }

    /// Cells as `(row, col)` pairs, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r as u32 + 1, c)))
    }

    /// Partial sums `λ_1 + ... + λ_k` for `k = 1..=len`.
    fn partial_sums(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0usize, |acc, &p| {
                *acc += p as usize;
                Some(*acc)
            })
            .collect()
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    fn write_parts(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_parts(f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad("parts must be non-negative integers")))
            .collect::<Result<Vec<_>>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(bad("parts must be weakly decreasing"));
        }
        Partition::new(parts)
    }
}

/// A pair of partitions `(λ^(1), λ^(2))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    pub c1: Partition,
    pub c2: Partition,
}

impl Bipartition {
    pub fn new(c1: Partition, c2: Partition) -> Self {
        Bipartition { c1, c2 }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(c1: &[u32], c2: &[u32]) -> Result<Self> {
        Ok(Bipartition::new(Partition::new(c1.to_vec())?, Partition::new(c2.to_vec())?))
    }

    /// `((a,1^b),(c,1^d))`.
    pub fn bihook(a: u32, b: u32, c: u32, d: u32) -> Self {
        Bipartition::new(Partition::hook(a, b), Partition::hook(c, d))
    }

    pub fn component(&self, m: u8) -> &Partition {
        match m {
            1 => &self.c1,
            _ => &self.c2,
        }
    }

    fn component_mut(&mut self, m: u8) -> &mut Partition {
        match m {
            1 => &mut self.c1,
            _ => &mut self.c2,
        }
    }

    pub fn size(&self) -> usize {
        self.c1.size() + self.c2.size()
    }

    pub fn is_empty(&self) -> bool {
        self.c1.is_empty() && self.c2.is_empty()
    }

    /// `λ' = (λ^(2)', λ^(1)')`.
    pub fn conjugate(&self) -> Bipartition {
        Bipartition::new(self.c2.conjugate(), self.c1.conjugate())
    }

    pub fn contains(&self, node: &Node) -> bool {
        self.component(node.comp).contains(node.row, node.col)
    }

    /// Dominance `self ⊵ other`; sizes must agree.
    pub fn dominates(&self, other: &Bipartition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.size(), other.size()));
        }
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Bipartition) -> bool {
        let prefix_ok = |a: &[usize], b: &[usize], base_a: usize, base_b: usize| {
            let len = a.len().max(b.len());
            (0..len).all(|k| {
                let sa = base_a + a.get(k).or(a.last()).copied().unwrap_or(0);
                let sb = base_b + b.get(k).or(b.last()).copied().unwrap_or(0);
                sa >= sb
            })
        };
        let (s1, o1) = (self.c1.partial_sums(), other.c1.partial_sums());
        let (s2, o2) = (self.c2.partial_sums(), other.c2.partial_sums());
        prefix_ok(&s1, &o1, 0, 0)
            && self.c1.size() >= other.c1.size()
            && prefix_ok(&s2, &o2, self.c1.size(), other.c1.size())
    }

    /// Total order refining dominance: lexicographic on the first component,
    /// then on the second. If `a ⊳ b` then `linear_cmp(a, b) == Greater`.
    pub fn linear_cmp(&self, other: &Bipartition) -> Ordering {
        self.c1.parts().cmp(other.c1.parts()).then_with(|| self.c2.parts().cmp(other.c2.parts()))
    }

    /// Every addable node, in the above-to-below order.
    pub fn addable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for m in [1u8, 2] {
            let p = self.component(m);
            for r in 1..=(p.len() as u32 + 1) {
                let len = p.row(r);
                if r == 1 || p.row(r - 1) > len {
                    out.push(Node::new(r, len + 1, m));
                }
            }
        }
        out
    }

    /// Every removable node, in the above-to-below order.
    pub fn removable(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for m in [1u8, 2] {
            let p = self.component(m);
            for r in 1..=p.len() as u32 {
                let len = p.row(r);
                if p.row(r + 1) < len {
                    out.push(Node::new(r, len, m));
                }
            }
        }
        out
    }

    pub fn addable_nodes(&self, i: u32, e: QuantumCharacteristic) -> Vec<Node> {
        self.addable().into_iter().filter(|n| n.residue(e) == i).collect()
    }

    pub fn removable_nodes(&self, i: u32, e: QuantumCharacteristic) -> Vec<Node> {
        self.removable().into_iter().filter(|n| n.residue(e) == i).collect()
    }

    /// Adds an addable node. Panics in debug builds if the node is not addable.
    pub fn with_node(&self, node: &Node) -> Bipartition {
        let mut out = self.clone();
        let p = out.component_mut(node.comp);
        let r = node.row as usize;
        debug_assert_eq!(p.row(node.row) + 1, node.col);
        if r > p.0.len() {
            p.0.push(1);
        } else {
            p.0[r - 1] += 1;
        }
        out
    }

    /// Removes a removable node.
    pub fn without_node(&self, node: &Node) -> Bipartition {
        let mut out = self.clone();
        let p = out.component_mut(node.comp);
        let r = node.row as usize;
        debug_assert_eq!(p.row(node.row), node.col);
        p.0[r - 1] -= 1;
        if p.0[r - 1] == 0 {
            p.0.pop();
        }
        out
    }

    /// Both components are non-empty hooks.
    pub fn is_bihook(&self) -> bool {
        let hook = |p: &Partition| !p.is_empty() && p.parts().iter().skip(1).all(|&x| x == 1);
        hook(&self.c1) && hook(&self.c2)
    }

    pub fn nodes(&self) -> Vec<Node> {
        let mut out: Vec<Node> = self.c1.cells().map(|(r, c)| Node::new(r, c, 1)).collect();
        out.extend(self.c2.cells().map(|(r, c)| Node::new(r, c, 2)));
        out
    }

    /// Multiplicity of each residue among the nodes.
    pub fn content(&self, e: QuantumCharacteristic) -> Vec<u32> {
        let mut out = vec![0; e.get() as usize];
        for n in self.nodes() {
            out[n.residue(e) as usize] += 1;
        }
        out
    }

    /// All bipartitions of `n`.
    pub fn all(n: u32) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for a in (0..=n).rev() {
            let firsts = Partition::all(a);
            let seconds = Partition::all(n - a);
            for p in &firsts {
                for q in &seconds {
                    out.push(Bipartition::new(p.clone(), q.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.c1.write_parts(f)?;
        write!(f, "|")?;
        self.c2.write_parts(f)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut it = t.split('|');
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "expected two components separated by '|'".into(),
            });
        };
        if a.trim().is_empty() || b.trim().is_empty() {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "empty components are written '-'".into(),
            });
        }
        Ok(Bipartition::new(a.parse()?, b.parse()?))
    }
}

impl Serialize for Bipartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Bipartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn e(x: u32) -> QuantumCharacteristic {
        QuantumCharacteristic::new(x).unwrap()
    }

    #[test]
    fn parse_and_render() {
        for s in ["21|15", "6,1|3", "15|-", "-|-", "5,4,2,2|1,1"] {
            assert_eq!(bp(s).to_string(), s);
        }
        assert!("1,2|-".parse::<Bipartition>().is_err());
        assert!("3".parse::<Bipartition>().is_err());
        assert!("|3".parse::<Bipartition>().is_err());
        assert!("3|x".parse::<Bipartition>().is_err());
    }

    #[test]
    fn conjugation() {
        assert_eq!(bp("-|-").conjugate(), bp("-|-"));
        let p: Partition = "2,1".parse().unwrap();
        assert_eq!(p.conjugate(), p);
        // ((3),(1,1)) -> ((2),(1,1,1)); columns of (1,1) give (2), of (3) give (1,1,1)
        assert_eq!(bp("3|1,1").conjugate(), bp("2|1,1,1"));
    }

    #[test]
    fn dominance_examples() {
        let a = bp("2|-");
        let b = bp("1|1");
        assert!(a.dominates(&a).unwrap());
        assert!(a.dominates(&b).unwrap());
        assert!(!b.dominates(&a).unwrap());
        assert!(a.dominates(&bp("1|-")).is_err());
        // prefix sums continue past the last part
        assert!(bp("2,1|-").dominates(&bp("1,1,1|-")).unwrap());
        assert!(!bp("1,1,1|-").dominates(&bp("2,1|-")).unwrap());
    }

    #[test]
    fn residues() {
        assert_eq!(Node::new(1, 3, 1).residue(e(4)), 2);
        assert_eq!(Node::new(1, 1, 2).residue(e(7)), 0);
        assert_eq!(Node::new(2, 1, 2).residue(e(3)), 2);
        assert_eq!(e(3).check_residue(3), Err(Error::BadResidue { residue: 3, e: 3 }));
    }

    #[test]
    fn hooks() {
        let p: Partition = "2,2,1,1".parse().unwrap();
        assert_eq!(p.hook_length(1, 1).unwrap(), 5);
        assert_eq!(p.hook_length(2, 2).unwrap(), 1);
        assert_eq!(p.hook_length(1, 2).unwrap(), 2);
        let one: Partition = "1".parse().unwrap();
        assert_eq!(one.hook_length(1, 1).unwrap(), 1);
        assert!(one.hook_length(1, 2).is_err());
    }

    #[test]
    fn addable_and_removable() {
        assert_eq!(bp("-|-").addable_nodes(0, e(3)), vec![Node::new(1, 1, 1), Node::new(1, 1, 2)]);
        assert_eq!(bp("1|1").removable_nodes(0, e(3)), vec![Node::new(1, 1, 1), Node::new(1, 1, 2)]);
        assert_eq!(bp("4|4").addable_nodes(0, e(4)), vec![Node::new(1, 5, 1), Node::new(1, 5, 2)]);
        assert_eq!(bp("4|4").addable_nodes(3, e(4)), vec![Node::new(2, 1, 1), Node::new(2, 1, 2)]);
        assert_eq!(bp("2,2,1|-").addable(), vec![Node::new(1, 3, 1), Node::new(3, 2, 1), Node::new(4, 1, 1), Node::new(1, 1, 2)]);
        assert_eq!(bp("2,2,1|-").removable(), vec![Node::new(2, 2, 1), Node::new(3, 1, 1)]);
    }

    #[test]
    fn bihooks() {
        assert!(bp("3,1,1|2").is_bihook());
        assert!(bp("1|1").is_bihook());
        assert!(!bp("2,2|1").is_bihook());
        assert!(!bp("2|-").is_bihook());
        assert_eq!(Bipartition::bihook(3, 2, 2, 0), bp("3,1,1|2"));
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Bipartition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 10, 20, 36, 65, 110, 185]);
    }

    #[test]
    fn conjugate_is_involution_exhaustive() {
        for n in 0..=12 {
            for l in Bipartition::all(n) {
                assert_eq!(l.conjugate().conjugate(), l);
                assert_eq!(l.conjugate().size(), n as usize);
            }
        }
    }

    #[test]
    fn dominance_is_partial_order_exhaustive() {
        for n in 0..=8 {
            let all = Bipartition::all(n);
            for a in &all {
                assert!(a.dominates(a).unwrap());
                for b in &all {
                    let ab = a.dominates(b).unwrap();
                    if ab && a != b {
                        assert!(!b.dominates(a).unwrap(), "{a} {b}");
                        assert_eq!(a.linear_cmp(b), Ordering::Greater);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn node_invariants_exhaustive() {
        for n in 0..=9 {
            for l in Bipartition::all(n) {
                for comp in [&l.c1, &l.c2] {
                    let cells: Vec<_> = comp.cells().collect();
                    assert_eq!(cells.len(), comp.size());
                    for (r, c) in cells {
                        assert!(comp.hook_length(r, c).unwrap() >= 1);
                    }
                }
                for ee in 2..=4 {
                    let e = e(ee);
                    for a in l.addable() {
                        assert!(!l.contains(&a));
                        let grown = l.with_node(&a);
                        assert_eq!(grown.size(), l.size() + 1);
                        assert!(Partition::new(grown.c1.parts().to_vec()).is_ok());
                        assert!(Partition::new(grown.c2.parts().to_vec()).is_ok());
                        assert_eq!(grown.without_node(&a), l);
                        assert_eq!(a.residue(e), e.reduce(a.col as i64 - a.row as i64));
                    }
                    for r in l.removable() {
                        assert!(l.contains(&r));
                        assert_eq!(l.without_node(&r).with_node(&r), l);
                    }
                }
            }
        }
    }
}
