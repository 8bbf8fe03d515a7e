use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Laurent polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so structural
/// equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i32, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c q^exp`.
    pub fn monomial(exp: i32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: vec![(exp, c)] }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(exp, 1)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// merging repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut v: Vec<(i32, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i32, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: out }
    }

    pub fn terms(&self) -> &[(i32, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.terms.len() == self.bar().terms.len()
            && self.terms.iter().zip(self.terms.iter().rev()).all(|((e1, c1), (e2, c2))| *e1 == -e2 && c1 == c2)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// True when every exponent is strictly positive, i.e. the value lies in `qZ[q]`.
    pub fn in_q_z_q(&self) -> bool {
        self.terms.iter().all(|(e, _)| *e > 0)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.iter().map(|t| &t.1).sum()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Terms with exponent `<= 0`.
    pub fn nonpositive_part(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().filter(|t| t.0 <= 0).cloned().collect() }
    }

    /// The unique bar-invariant polynomial agreeing with `self` in all
    /// exponents `<= 0`.
    pub fn bar_symmetrize_nonpositive(&self) -> Self {
        let low = self.nonpositive_part();
        let high = LaurentPoly { terms: low.terms.iter().filter(|t| t.0 < 0).cloned().collect() }.bar();
        &low + &high
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Exact division; `None` if `d` does not divide `self` in `Z[q, q^-1]`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<Self> {
        let (dlo, dhi) = (d.min_exp()?, d.max_exp()?);
        let dlead = &d.terms.last()?.1;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let (Some(lo), Some(hi)) = (rem.min_exp(), rem.max_exp()) {
            if hi - lo < dhi - dlo {
                return None;
            }
            let c = &rem.terms.last()?.1;
            if !(c % dlead).is_zero() {
                return None;
            }
            let qc = c / dlead;
            let qe = hi - dhi;
            rem -= &d.shift(qe).scale(&qc);
            quot.push((qe, qc));
        }
        Some(LaurentPoly::from_terms(quot))
    }

    /// Pairs `(exponent, coefficient)` with machine-sized coefficients, when
    /// every coefficient fits.
    pub fn to_i64_terms(&self) -> Option<Vec<(i32, i64)>> {
        self.terms.iter().map(|(e, c)| c.to_i64().map(|c| (*e, c))).collect()
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &BigInt| if negate { -c } else { c.clone() };
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, sign(&b[j].1)));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        LaurentPoly { terms: out }
    }
}

/// The quantum integer `[n] = q^-(n-1) + q^-(n-3) + ... + q^(n-1)`.
pub fn quantum_integer(n: u32) -> LaurentPoly {
    let n = n as i32;
    LaurentPoly::from_terms((0..n).map(|k| (-(n - 1) + 2 * k, 1)))
}

/// `[n]! = [1][2]...[n]`.
pub fn quantum_factorial(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &quantum_integer(k))
}

/// `c(ν) = ([n_1]! ... [n_a]!)^e`.
pub fn c_factor(nu: &[u32], e: u32) -> LaurentPoly {
    nu.iter().fold(LaurentPoly::one(), |acc, &n| &acc * &quantum_factorial(n)).pow(e)
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::monomial(0, c)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let mut acc = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                acc[(e1 + e2 - lo) as usize] += c1 * c2;
            }
        }
        LaurentPoly {
            terms: acc
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty polynomial"));
        }
        if compact == "0" {
            return Ok(LaurentPoly::zero());
        }
        // split into signed terms; a '-' right after '^' belongs to the exponent
        let mut pieces: Vec<String> = Vec::new();
        let mut cur = String::new();
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() && !cur.ends_with('^') {
                pieces.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        pieces.push(cur);
        let mut terms = Vec::new();
        for piece in pieces {
            let (neg, body) = match piece.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, piece.strip_prefix('+').unwrap_or(&piece)),
            };
            let (coef, exp) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?, 0),
                Some(pos) => {
                    let c = if pos == 0 {
                        BigInt::one()
                    } else {
                        body[..pos].parse::<BigInt>().map_err(|_| bad("bad coefficient"))?
                    };
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(|| bad("expected '^' after q"))?
                            .parse::<i32>()
                            .map_err(|_| bad("bad exponent"))?
                    };
                    (c, e)
                }
            };
            terms.push((exp, if neg { -coef } else { coef }));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

/// JSON form: a list of `[exponent, coefficient]` pairs sorted by exponent.
/// Coefficients that do not fit in 64 bits are written as decimal strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(i32, serde_json::Value)> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let v = match c.to_i64() {
                    Some(x) => serde_json::Value::from(x),
                    None => serde_json::Value::from(c.to_string()),
                };
                (*e, v)
            })
            .collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i32, serde_json::Value)> = Vec::deserialize(d)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (e, v) in pairs {
            let c = match v {
                serde_json::Value::Number(n) => {
                    BigInt::from(n.as_i64().ok_or_else(|| D::Error::custom("coefficient is not an integer"))?)
                }
                serde_json::Value::String(s) => s.parse::<BigInt>().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("coefficient must be an integer or a string")),
            };
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_integers() {
        assert_eq!(quantum_integer(1), LaurentPoly::one());
        assert_eq!(quantum_integer(2), lp("q^-1 + q"));
        assert_eq!(quantum_integer(0), LaurentPoly::zero());
        assert_eq!(quantum_factorial(2), lp("q^-1 + q"));
        assert_eq!(quantum_factorial(0), LaurentPoly::one());
        assert_eq!(quantum_factorial(3), lp("q^-3 + 2q^-1 + 2q + q^3"));
        let mut fact = BigInt::one();
        for n in 0..=20u32 {
            if n > 0 {
                fact *= n;
            }
            for p in [quantum_integer(n), quantum_factorial(n)] {
                assert!(p.is_bar_invariant());
                assert!(p.has_nonnegative_coeffs());
            }
            assert_eq!(quantum_factorial(n).eval_one(), fact);
        }
    }

    #[test]
    fn c_factor_examples() {
        assert_eq!(c_factor(&[1, 1, 1], 3), LaurentPoly::one());
        assert_eq!(c_factor(&[2], 2), lp("q^-2 + 2 + q^2"));
        let a = c_factor(&[2, 1], 3);
        let b = c_factor(&[3], 3);
        assert_eq!(c_factor(&[2, 1, 3], 3), &a * &b);
        assert!(c_factor(&[3, 2], 4).is_bar_invariant());
    }

    #[test]
    fn text_round_trip() {
        for s in ["0", "1", "q", "-q", "q^-2 + 2 + q^2", "-3q^-1 - q + 7q^4", "2q"] {
            assert_eq!(lp(s).to_string(), s);
        }
        assert_eq!(lp("q^2+q^2"), lp("2q^2"));
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("x".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn exact_division() {
        let two = quantum_integer(2);
        let sq = &two * &two;
        assert_eq!(sq.div_exact(&two), Some(two.clone()));
        assert_eq!(lp("q").div_exact(&two), None);
        assert_eq!(LaurentPoly::zero().div_exact(&two), Some(LaurentPoly::zero()));
        assert_eq!(lp("2q").div_exact(&lp("2")), Some(lp("q")));
        assert_eq!(lp("3q").div_exact(&lp("2")), None);
    }

    #[test]
    fn symmetrize() {
        let p = lp("2q^-2 - q^-1 + 3 + 5q");
        let b = p.bar_symmetrize_nonpositive();
        assert!(b.is_bar_invariant());
        assert!((&p - &b).in_q_z_q());
    }

    #[test]
    fn json_round_trip_large() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = LaurentPoly::from_terms(vec![(-3, BigInt::from(-4)), (2, big)]);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, r#"[[-3,-4],[2,"123456789012345678901234567890"]]"#);
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i32..6, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn bar_is_involutive_ring_map(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }

        #[test]
        fn text_and_json_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a.clone());
            let js = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&js).unwrap(), a);
        }
    }
}
