use std::fmt;

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Field characteristic: zero or a prime.
///
/// Characteristic zero answers every divisibility question with "no".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(p: u64) -> Result<Self> {
        if p != 0 && !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Characteristic(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn divides(self, x: i64) -> bool {
        self.0 != 0 && x.rem_euclid(self.0 as i64) == 0
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Base-`p` digits `[a_0, a_1, ...]`, least significant first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicExpansion {
    pub p: u64,
    pub digits: Vec<u64>,
}

impl PadicExpansion {
    pub fn new(mut x: u64, p: u64) -> Self {
        assert!(p >= 2);
        let mut digits = Vec::new();
        while x > 0 {
            digits.push(x % p);
            x /= p;
        }
        PadicExpansion { p, digits }
    }

    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn value(&self) -> u64 {
        self.digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }
}

impl fmt::Display for PadicExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// Largest `t` with `p^t | h`.
pub fn nu_p(h: u64, p: u64) -> Result<u32> {
    if h == 0 {
        return Err(Error::Precondition("valuation of zero".into()));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut h = h;
    let mut t = 0;
    while h.is_multiple_of(p) {
        h /= p;
        t += 1;
    }
    Ok(t)
}

fn digitwise(a: u64, b: u64, p: u64, ok: impl Fn(u64, u64) -> bool) -> bool {
    let (da, db) = (PadicExpansion::new(a, p), PadicExpansion::new(b, p));
    (0..da.digits.len().max(db.digits.len())).all(|i| ok(da.digit(i), db.digit(i)))
}

/// Henke's order: every base-`p` digit of `a` is at most the matching digit of `b`.
pub fn leq_p(a: u64, b: u64, p: u64) -> bool {
    digitwise(a, b, p, |x, y| x <= y)
}

/// James's order: every base-`p` digit of `a` is zero or equal to that of `b`.
pub fn preceq_p(a: u64, b: u64, p: u64) -> bool {
    digitwise(a, b, p, |x, y| x == 0 || x == y)
}

#[cfg(test)]
mod tests {
    use super::*;

    // digit oracle by explicit powers, independent of PadicExpansion
    fn digit_oracle(x: u64, p: u64, i: u32) -> u64 {
        (x / p.pow(i)) % p
    }

    #[test]
    fn valuations() {
        assert_eq!(nu_p(8, 2).unwrap(), 3);
        assert_eq!(nu_p(6, 3).unwrap(), 1);
        assert_eq!(nu_p(7, 5).unwrap(), 0);
        assert!(nu_p(0, 2).is_err());
        assert_eq!(nu_p(4, 6), Err(Error::NotPrime(6)));
    }

    #[test]
    fn orders_examples() {
        assert!(leq_p(0, 37, 3));
        assert!(leq_p(2, 6, 2));
        assert!(!leq_p(1, 4, 2));
        assert!(preceq_p(0, 9, 5));
        assert!(!preceq_p(1, 3, 3));
        assert!(preceq_p(2 / 3, 11 / 3, 3));
        assert_eq!(PadicExpansion::new(6, 2).to_string(), "[0,1,1]");
        assert_eq!(PadicExpansion::new(0, 2).to_string(), "[]");
    }

    #[test]
    fn orders_against_oracle() {
        for p in [2u64, 3, 5, 7] {
            let width = 10;
            for a in 0..=500u64 {
                assert_eq!(PadicExpansion::new(a, p).value(), a);
                assert!(leq_p(a, a, p));
                assert!(preceq_p(a, a, p));
                for b in 0..=500u64 {
                    let leq = (0..width).all(|i| digit_oracle(a, p, i) <= digit_oracle(b, p, i));
                    let jam = (0..width).all(|i| {
                        let x = digit_oracle(a, p, i);
                        x == 0 || x == digit_oracle(b, p, i)
                    });
                    assert_eq!(leq_p(a, b, p), leq, "{a} {b} {p}");
                    assert_eq!(preceq_p(a, b, p), jam, "{a} {b} {p}");
                }
            }
        }
    }

    #[test]
    fn henke_order_transitive() {
        for p in [2u64, 3] {
            for a in 0..60u64 {
                for b in 0..60u64 {
                    if !leq_p(a, b, p) {
                        continue;
                    }
                    for c in 0..60u64 {
                        if leq_p(b, c, p) {
                            assert!(leq_p(a, c, p));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn characteristic() {
        assert!(Characteristic::new(4).is_err());
        assert!(Characteristic::new(1).is_err());
        assert!(!Characteristic::ZERO.divides(0));
        assert!(Characteristic::new(3).unwrap().divides(-6));
    }
}
