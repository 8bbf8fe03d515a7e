//! Two-column facts for the classical Schur algebra: Weyl irreducibility,
//! decomposition numbers, the Pieri filtration, Kostka numbers and Young
//! module counts.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{leq_p, nu_p, preceq_p, Characteristic};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// The shape `(2^m, 1^(n-2m))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoColumn {
    pub m: u32,
    pub n: u32,
}

impl TwoColumn {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if 2 * m > n {
            return Err(Error::Precondition(format!("(2^{m},1^{}) is not a partition", n as i64 - 2 * m as i64)));
        }
        Ok(TwoColumn { m, n })
    }

    pub fn partition(&self) -> Partition {
        Partition::two_column(self.m, self.n)
    }

    pub fn from_partition(p: &Partition) -> Result<Self> {
        if p.parts().iter().any(|&x| x > 2) {
            return Err(Error::NotTwoColumn(p.to_string()));
        }
        let m = p.parts().iter().filter(|&&x| x == 2).count() as u32;
        TwoColumn::new(m, p.size() as u32)
    }
}

impl fmt::Display for TwoColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ones = self.n - 2 * self.m;
        let mut parts = Vec::new();
        match self.m {
            0 => {}
            1 => parts.push("2".to_string()),
            m => parts.push(format!("2^{m}")),
        }
        match ones {
            0 => {}
            1 => parts.push("1".to_string()),
            o => parts.push(format!("1^{o}")),
        }
        if parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "({})", parts.join(","))
    }
}

/// Every row of `[λ]` has hook lengths of equal `p`-adic valuation.
pub fn weyl_is_irreducible(la: &Partition, p: Characteristic) -> bool {
    if p.is_zero() {
        return true;
    }
    (1..=la.len() as u32).all(|r| {
        let vals: Vec<u32> = (1..=la.row(r))
            .map(|c| nu_p(la.hook_length(r, c).expect("cell in diagram") as u64, p.get()).expect("prime"))
            .collect();
        vals.windows(2).all(|w| w[0] == w[1])
    })
}

/// Whether `Δ(1^n), Δ(2,1^(n-2)), ..., Δ(2^j,1^(n-2j))` are all irreducible,
/// by the arithmetic criterion.
pub fn simultaneous_irreducibility(n: u32, j: u32, p: Characteristic) -> Result<bool> {
    if j < 1 || n < 2 * j {
        return Err(Error::Precondition(format!("need n >= 2j >= 2, got n = {n}, j = {j}")));
    }
    Ok(match p.get() {
        0 => true,
        2 => match j {
            1 => n % 2 == 1,
            2 => n % 4 == 3,
            _ => false,
        },
        _ => !(n - 2 * j + 2..=n).any(|x| p.divides(x as i64)),
    })
}

/// `[Δ(2^m,1^(n-2m)) : L(2^j,1^(n-2j))]`.
pub fn decomp_number(m: u32, j: u32, n: u32, p: Characteristic) -> u32 {
    if m < j || 2 * m > n {
        return 0;
    }
    if p.is_zero() {
        return u32::from(m == j);
    }
    let pp = p.get();
    let lhs = ((m - j) as u64) / pp;
    let rhs = ((n - 2 * j + 1) as u64) / pp;
    let divides = p.divides((m - j) as i64) || p.divides(n as i64 - m as i64 - j as i64 + 1);
    u32::from(preceq_p(lhs, rhs, pp) && divides)
}

/// The Weyl factors `(2^r, 1^(k+j-2r))`, `r = 0..=j`, of `Δ(1^k) ⊗ Δ(1^j)`.
pub fn pieri_factors(k: u32, j: u32) -> Result<Vec<TwoColumn>> {
    if k < j || j < 1 {
        return Err(Error::Precondition(format!("need k >= j >= 1, got k = {k}, j = {j}")));
    }
    Ok((0..=j).map(|r| TwoColumn { m: r, n: k + j }).collect())
}

/// Whether `Y^(n-m,m)` is a summand of `M^(n-j,j)`.
pub fn henke_summand(n: u32, j: u32, m: u32, p: Characteristic) -> Result<bool> {
    if m > j || 2 * j > n {
        return Err(Error::Precondition(format!("need 0 <= m <= j <= n - j, got n = {n}, j = {j}, m = {m}")));
    }
    if p.is_zero() {
        return Ok(true);
    }
    Ok(leq_p((j - m) as u64, (n - 2 * m) as u64, p.get()))
}

/// The values of `m` for which `Y^(n-m,m)` is a summand of `M^(k,j)`.
pub fn summand_indices(k: u32, j: u32, p: Characteristic) -> Result<Vec<u32>> {
    if k < j || j < 1 {
        return Err(Error::Precondition(format!("need k >= j >= 1, got k = {k}, j = {j}")));
    }
    let mut out = Vec::new();
    for m in 0..=j {
        if henke_summand(k + j, j, m, p)? {
            out.push(m);
        }
    }
    Ok(out)
}

/// Number of indecomposable summands of `M^(k,j)`.
pub fn num_summands(k: u32, j: u32, p: Characteristic) -> Result<usize> {
    Ok(summand_indices(k, j, p)?.len())
}

/// Composition factors of `Δ(1^k) ⊗ Δ(1^j)` with multiplicities, keyed by
/// two-column shape.
pub fn composition_multiset(k: u32, j: u32, p: Characteristic) -> Result<BTreeMap<TwoColumn, u32>> {
    let mut out = BTreeMap::new();
    for f in pieri_factors(k, j)? {
        for t in 0..=f.m {
            let d = decomp_number(f.m, t, f.n, p);
            if d > 0 {
                *out.entry(TwoColumn { m: t, n: f.n }).or_insert(0) += d;
            }
        }
    }
    Ok(out)
}

/// Number of semistandard tableaux of shape `(2^m, 1^(n-2m))` and weight `mu`.
pub fn kostka_two_column(shape: TwoColumn, mu: &[u32]) -> Result<u64> {
    if mu.iter().sum::<u32>() != shape.n {
        return Err(Error::SizeMismatch(mu.iter().sum::<u32>() as usize, shape.n as usize));
    }
    if mu.iter().any(|&x| x > 2) {
        return Ok(0);
    }
    let both: Vec<u32> = (0..mu.len() as u32).filter(|&i| mu[i as usize] == 2).collect();
    let single: Vec<u32> = (0..mu.len() as u32).filter(|&i| mu[i as usize] == 1).collect();
    let (len1, len2) = ((shape.n - shape.m) as usize, shape.m as usize);
    let mut count = 0;
    for mask in 0u64..(1u64 << single.len()) {
        let mut col1 = both.clone();
        let mut col2 = both.clone();
        for (b, &x) in single.iter().enumerate() {
            if mask >> b & 1 == 1 {
                col2.push(x);
            } else {
                col1.push(x);
            }
        }
        if col1.len() != len1 || col2.len() != len2 {
            continue;
        }
        col1.sort_unstable();
        col2.sort_unstable();
        if col1.iter().zip(&col2).all(|(a, b)| a <= b) {
            count += 1;
        }
    }
    Ok(count)
}

/// If `p` divides exactly one of `k+j, ..., k-j+2`, returns `(a, i)` with
/// `k + j = a p + i` and `0 <= i <= 2j - 2`.
pub fn divides_exactly_one(k: u32, j: u32, p: Characteristic) -> Option<(u32, u32)> {
    if p.is_zero() || j < 1 || k + 2 < j {
        return None;
    }
    let n = k + j;
    let hits: Vec<u32> = (n + 2 - 2 * j..=n).filter(|&x| p.divides(x as i64)).collect();
    match hits.as_slice() {
        [x] => Some((x / p.get() as u32, n - x)),
        _ => None,
    }
}

/// The `j = p`, `i = j - 1` branch where `M^(n-j,j)` keeps `Y^(n)` as a summand.
/// This happens exactly when `p^2` does not divide `k + 1`.
pub fn is_exceptional(k: u32, j: u32, p: Characteristic) -> bool {
    match divides_exactly_one(k, j, p) {
        Some((_, i)) => j as u64 == p.get() && i + 1 == j && !(k as u64 + 1).is_multiple_of(p.get() * p.get()),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::compositions;

    fn ch(p: u64) -> Characteristic {
        Characteristic::new(p).unwrap()
    }

    fn tc(m: u32, n: u32) -> TwoColumn {
        TwoColumn::new(m, n).unwrap()
    }

    #[test]
    fn weyl_examples() {
        for p in [2, 3, 5] {
            for n in 1..12 {
                assert!(weyl_is_irreducible(&Partition::two_column(0, n), ch(p)));
            }
        }
        for p in [2u64, 3, 5] {
            for k in 1..20u32 {
                let irr = weyl_is_irreducible(&Partition::two_column(1, k + 1), ch(p));
                assert_eq!(irr, !((k + 1) as u64).is_multiple_of(p));
            }
        }
        for n in 4..30u32 {
            let irr = weyl_is_irreducible(&Partition::two_column(2, n), ch(2));
            if n % 4 == 3 {
                assert!(irr);
            }
        }
    }

    #[test]
    fn simultaneous_examples() {
        assert!(simultaneous_irreducibility(9, 2, ch(5)).unwrap());
        assert!(simultaneous_irreducibility(7, 1, ch(2)).unwrap());
        assert!(!simultaneous_irreducibility(9, 3, ch(2)).unwrap());
        assert!(simultaneous_irreducibility(3, 2, ch(2)).is_err());
    }

    #[test]
    fn simultaneous_matches_hooks() {
        for p in [2u64, 3, 5, 7, 11] {
            for j in 1..=4u32 {
                for n in 2 * j..=30 {
                    let hooks = (0..=j).all(|r| weyl_is_irreducible(&Partition::two_column(r, n), ch(p)));
                    assert_eq!(simultaneous_irreducibility(n, j, ch(p)).unwrap(), hooks, "n={n} j={j} p={p}");
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        for p in [2u64, 3, 5] {
            for n in 2..12 {
                for m in 0..=n / 2 {
                    assert_eq!(decomp_number(m, m, n, ch(p)), 1);
                }
            }
        }
        assert_eq!(decomp_number(2, 0, 10, ch(3)), 1);
        assert_eq!(decomp_number(3, 0, 10, ch(3)), 0);
        assert_eq!(decomp_number(3, 2, 10, ch(3)), 1);
        assert_eq!(decomp_number(0, 1, 10, ch(3)), 0);
        assert_eq!(decomp_number(2, 1, 10, ch(0)), 0);
    }

    #[test]
    fn decomposition_unitriangular() {
        for p in [2u64, 3, 5, 7] {
            for n in 0..=20 {
                for m in 0..=n / 2 {
                    for j in 0..=n / 2 {
                        let d = decomp_number(m, j, n, ch(p));
                        assert!(d <= 1);
                        if j > m {
                            assert_eq!(d, 0);
                        }
                        if j == m {
                            assert_eq!(d, 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weyl_irreducible_iff_no_lower_factor() {
        // the decomposition-number column and the hook criterion describe the same modules
        for p in [2u64, 3, 5, 7] {
            for n in 2..=20 {
                for m in 0..=n / 2 {
                    let lower = (0..m).any(|j| decomp_number(m, j, n, ch(p)) > 0);
                    assert_eq!(!lower, weyl_is_irreducible(&Partition::two_column(m, n), ch(p)), "m={m} n={n} p={p}");
                }
            }
        }
    }

    #[test]
    fn pieri() {
        let f = pieri_factors(7, 3).unwrap();
        assert_eq!(f, vec![tc(0, 10), tc(1, 10), tc(2, 10), tc(3, 10)]);
        assert_eq!(f.iter().map(|x| x.to_string()).collect::<Vec<_>>(), ["(1^10)", "(2,1^8)", "(2^2,1^6)", "(2^3,1^4)"]);
        assert_eq!(pieri_factors(1, 1).unwrap(), vec![tc(0, 2), tc(1, 2)]);
        assert!(pieri_factors(1, 2).is_err());
        for k in 1..8 {
            for j in 1..=k {
                assert_eq!(pieri_factors(k, j).unwrap().len() as u32, j + 1);
            }
        }
    }

    #[test]
    fn henke_examples() {
        assert!(henke_summand(10, 3, 3, ch(2)).unwrap());
        assert!(!henke_summand(6, 2, 1, ch(2)).unwrap());
        assert!(!henke_summand(4, 2, 0, ch(2)).unwrap());
        assert_eq!(num_summands(5, 3, ch(0)).unwrap(), 4);
        assert_eq!(num_summands(4, 2, ch(2)).unwrap(), 2);
        assert_eq!(num_summands(2, 2, ch(2)).unwrap(), 1);
    }

    #[test]
    fn composition_examples() {
        let c = composition_multiset(5, 2, ch(0)).unwrap();
        assert_eq!(c.values().copied().collect::<Vec<_>>(), vec![1, 1, 1]);
        let c = composition_multiset(7, 3, ch(3)).unwrap();
        let want: BTreeMap<TwoColumn, u32> = [(tc(0, 10), 2), (tc(1, 10), 1), (tc(2, 10), 2), (tc(3, 10), 1)].into();
        assert_eq!(c, want);
        let c = composition_multiset(4, 2, ch(2)).unwrap();
        let want: BTreeMap<TwoColumn, u32> = [(tc(0, 6), 3), (tc(1, 6), 2), (tc(2, 6), 1)].into();
        assert_eq!(c, want);
        assert_eq!(c.values().sum::<u32>(), 6);
    }

    #[test]
    fn kostka() {
        for n in 1..=8u32 {
            for m in 0..=n / 2 {
                let shape = tc(m, n);
                let mut weight = vec![2; m as usize];
                weight.extend(vec![1; (n - 2 * m) as usize]);
                assert_eq!(kostka_two_column(shape, &weight).unwrap(), 1);
            }
            assert_eq!(kostka_two_column(tc(0, n), &vec![1; n as usize]).unwrap(), 1);
        }
    }

    /// dim of the `mu`-weight space of `Λ^j ⊗ Λ^k`: pairs of subsets.
    fn subset_pairs(mu: &[u32], j: u32, k: u32) -> u64 {
        let len = mu.len();
        let mut count = 0;
        for a in 0u32..(1 << len) {
            if a.count_ones() != j {
                continue;
            }
            for b in 0u32..(1 << len) {
                if b.count_ones() != k {
                    continue;
                }
                if (0..len).all(|i| (a >> i & 1) + (b >> i & 1) == mu[i]) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn pieri_character_identity() {
        for k in 1..=5u32 {
            for j in 1..=k {
                for mu in compositions(k + j) {
                    let lhs: u64 = pieri_factors(k, j)
                        .unwrap()
                        .iter()
                        .map(|&f| kostka_two_column(f, &mu).unwrap())
                        .sum();
                    assert_eq!(lhs, subset_pairs(&mu, j, k), "k={k} j={j} mu={mu:?}");
                }
            }
        }
    }

    #[test]
    fn characteristic_two_criterion() {
        for j in 1..=8u32 {
            let l = 32 - j.leading_zeros();
            assert!(1 << (l - 1) <= j && j < 1 << l);
            for k in j..=40 {
                let decomposable = num_summands(k, j, ch(2)).unwrap() > 1;
                assert_eq!(decomposable, (k - j) % (1 << l) != 0, "k={k} j={j}");
            }
        }
    }

    #[test]
    fn summand_count_closed_form() {
        for p in [2u64, 3, 5, 7, 11] {
            for j in 2..=6u32 {
                for k in j..=40 {
                    let Some((a, i)) = divides_exactly_one(k, j, ch(p)) else { continue };
                    assert_eq!(a * p as u32 + i, k + j);
                    let upper = (i + 2) / 2; // ceil((i+1)/2)
                    let tail = (upper..=j).count();
                    let exceptional = is_exceptional(k, j, ch(p));
                    let want = if exceptional {
                        1 + tail
                    } else {
                        let head = if i >= j { (i - j + 1) as usize } else { 0 };
                        head + tail
                    };
                    assert_eq!(num_summands(k, j, ch(p)).unwrap(), want, "k={k} j={j} p={p}");
                    if exceptional {
                        assert_eq!(decomp_number(j, 0, k + j, ch(p)), 0);
                    }
                }
            }
        }
    }
}
