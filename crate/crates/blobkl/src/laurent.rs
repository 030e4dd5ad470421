//! Exact Laurent polynomials over the integers in one variable `v`.
//!
//! Coefficients are arbitrary-precision: Bott-Samelson coefficients grow as
//! products of binomials and fixed-width overflow would corrupt results
//! silently. The sparse map keeps no zero coefficients, so equality is
//! structural.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse exact Laurent polynomial: map exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The monomial `c * v^exp`.
    pub fn monomial(exp: i64, c: i64) -> Self {
        Self::monomial_big(exp, BigInt::from(c))
    }

    pub fn monomial_big(exp: i64, c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// Builds from (exponent, coefficient) pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, &BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Iterates terms by ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, &(-c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, k)| (e, k * c)).collect(),
        }
    }

    /// Multiplies by `v^n`.
    pub fn shift(&self, n: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + n, c.clone())).collect(),
        }
    }

    /// The bar involution `v -> v^{-1}` (exponent negation).
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self == &self.bar()
    }

    /// Constant term, i.e. evaluation at `v = 0` of an element of `Z[v]`.
    pub fn eval_at_zero(&self) -> BigInt {
        self.coeff(0)
    }

    /// Evaluation at `v = 1`: the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Splits `f = g + h` with `bar(g) = g` and `h` in `v Z[v]`.
    ///
    /// `g` is read off the nonpositive part of `f` and mirrored; the
    /// remainder must have only positive exponents and, for every input this
    /// library feeds it, nonnegative coefficients. A violation means the
    /// caller fed a polynomial that does not arise from the recursion.
    pub fn split_selfdual_strict(&self) -> Result<(Self, Self)> {
        let mut g = Self::zero();
        for (e, c) in self.terms() {
            if e < 0 {
                g.add_term(e, c);
                g.add_term(-e, c);
            } else if e == 0 {
                g.add_term(0, c);
            }
        }
        let h = self.sub(&g);
        Self::check_remainder(&h, 1)?;
        Ok((g, h))
    }

    /// Splits `f = g + h` with `bar(g) = g`, `h` in `Z[v]` and `h(0) = c`.
    ///
    /// Identical to the strict split except that the constant term of `h` is
    /// prescribed rather than forced to zero.
    pub fn split_selfdual_seeded(&self, c: &BigInt) -> Result<(Self, Self)> {
        let mut g = Self::zero();
        for (e, k) in self.terms() {
            if e < 0 {
                g.add_term(e, k);
                g.add_term(-e, k);
            }
        }
        let c0 = self.coeff(0) - c;
        g.add_term(0, &c0);
        let h = self.sub(&g);
        Self::check_remainder(&h, 0)?;
        debug_assert_eq!(&h.eval_at_zero(), c);
        Ok((g, h))
    }

    fn check_remainder(h: &Self, min_exp: i64) -> Result<()> {
        for (e, c) in h.terms() {
            if e < min_exp {
                return Err(Error::Decomposition(format!(
                    "remainder {h} has a term of exponent {e} below {min_exp}"
                )));
            }
            if c.is_negative() {
                return Err(Error::Decomposition(format!(
                    "remainder {h} has negative coefficient {c} at v^{e}"
                )));
            }
        }
        Ok(())
    }

    /// Sorted `[exponent, coefficient]` pairs, the JSON wire form.
    pub fn to_pairs(&self) -> Vec<(i64, BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c.clone())).collect()
    }

    /// TeX rendering, terms by ascending exponent: `v^{-1}+2+v`.
    pub fn to_tex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let abs = c.magnitude();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let show_coeff = e == 0 || !abs.is_one();
            if show_coeff {
                out.push_str(&abs.to_string());
            }
            match e {
                0 => {}
                1 => out.push('v'),
                -1 => out.push_str("v^{-1}"),
                _ => out.push_str(&format!("v^{{{e}}}")),
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_tex())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.to_tex())
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(self.coeffs.len()))?;
        for (e, c) in self.terms() {
            let num = serde_json::Number::from_string_unchecked(c.to_string());
            seq.serialize_element(&(e, num))?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i64, serde_json::Number)> = serde::Deserialize::deserialize(de)?;
        let mut p = LaurentPoly::zero();
        for (e, num) in pairs {
            let c: BigInt = num
                .to_string()
                .parse()
                .map_err(|_| serde::de::Error::custom("coefficient is not an integer"))?;
            p.add_term(e, &c);
        }
        Ok(p)
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(e, 1)
    }

    #[test]
    fn add_cancellation() {
        let a = v(1);
        let b = LaurentPoly::monomial(1, -1);
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn add_merges_exponents() {
        let a = LaurentPoly::from_pairs([(1, 1), (0, 1)]);
        let sum = a.add(&v(-1));
        assert_eq!(sum, LaurentPoly::from_pairs([(-1, 1), (0, 1), (1, 1)]));
        let twos = LaurentPoly::monomial(2, 2).add(&LaurentPoly::monomial(2, 3));
        assert_eq!(twos, LaurentPoly::monomial(2, 5));
    }

    #[test]
    fn mul_examples() {
        let a = LaurentPoly::from_pairs([(1, 1), (-1, 1)]);
        assert!(a.mul(&LaurentPoly::zero()).is_zero());

        let b = LaurentPoly::from_pairs([(1, 1), (0, 1)]);
        assert_eq!(b.mul(&b), LaurentPoly::from_pairs([(2, 1), (1, 2), (0, 1)]));

        let c = LaurentPoly::from_pairs([(1, 1), (-1, -1)]);
        assert_eq!(a.mul(&c), LaurentPoly::from_pairs([(2, 1), (-2, -1)]));
    }

    #[test]
    fn bar_examples() {
        let a = LaurentPoly::from_pairs([(2, 1), (-1, 3)]);
        assert_eq!(a.bar(), LaurentPoly::from_pairs([(-2, 1), (1, 3)]));
        assert_eq!(LaurentPoly::one().bar(), LaurentPoly::one());
        let sd = LaurentPoly::from_pairs([(1, 1), (-1, 1)]);
        assert_eq!(sd.bar(), sd);
    }

    #[test]
    fn strict_split_forced_cases() {
        let f = LaurentPoly::from_pairs([(1, 1), (0, 1)]);
        let (g, h) = f.split_selfdual_strict().unwrap();
        assert_eq!(g, LaurentPoly::one());
        assert_eq!(h, v(1));

        let f = LaurentPoly::from_pairs([(-1, 1), (0, 3), (1, 2)]);
        let (g, h) = f.split_selfdual_strict().unwrap();
        assert_eq!(g, LaurentPoly::from_pairs([(-1, 1), (0, 3), (1, 1)]));
        assert_eq!(h, v(1));
    }

    #[test]
    fn strict_split_rejects_negative_remainder() {
        // g mirrors v^{-1} + 1 to v^{-1} + 1 + v, leaving h = -v.
        let f = LaurentPoly::from_pairs([(-1, 1), (0, 1)]);
        assert!(matches!(
            f.split_selfdual_strict(),
            Err(Error::Decomposition(_))
        ));
        // v^2 alone is a legal input: g = 0, h = v^2.
        let (g, h) = v(2).split_selfdual_strict().unwrap();
        assert!(g.is_zero());
        assert_eq!(h, v(2));
    }

    #[test]
    fn seeded_split_examples() {
        let f = LaurentPoly::from_pairs([(-1, 1), (0, 3), (1, 2)]);
        let (g, h) = f.split_selfdual_seeded(&BigInt::from(1)).unwrap();
        assert_eq!(g, LaurentPoly::from_pairs([(-1, 1), (0, 2), (1, 1)]));
        assert_eq!(h, LaurentPoly::from_pairs([(0, 1), (1, 1)]));

        let (g, h) = LaurentPoly::one().split_selfdual_seeded(&BigInt::from(1)).unwrap();
        assert!(g.is_zero());
        assert_eq!(h, LaurentPoly::one());

        let f = LaurentPoly::from_pairs([(-1, 1), (1, 1)]);
        let (g, h) = f.split_selfdual_seeded(&BigInt::zero()).unwrap();
        assert_eq!(g, f);
        assert!(h.is_zero());
    }

    #[test]
    fn tex_rendering() {
        let f = LaurentPoly::from_pairs([(-1, 1), (0, 2), (1, 1)]);
        assert_eq!(f.to_tex(), "v^{-1}+2+v");
        assert_eq!(LaurentPoly::zero().to_tex(), "0");
        assert_eq!(LaurentPoly::from_pairs([(0, 3), (1, -1)]).to_tex(), "3-v");
        assert_eq!(LaurentPoly::from_pairs([(-3, 2)]).to_tex(), "2v^{-3}");
    }

    #[test]
    fn json_roundtrip_with_big_coefficients() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let mut f = LaurentPoly::from_pairs([(-2, 7), (5, -3)]);
        f.add_term(0, &big);
        let json = serde_json::to_string(&f).unwrap();
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(f, back);
        assert!(json.contains("123456789012345678901234567890"));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec(((-20i64..=20), (-1_000_000i64..=1_000_000)), 0..8)
            .prop_map(LaurentPoly::from_pairs)
    }

    proptest! {
        #[test]
        fn bar_is_involutive(f in arb_poly()) {
            prop_assert_eq!(f.bar().bar(), f);
        }

        #[test]
        fn mul_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn strict_split_is_unique_and_consistent(f in arb_poly()) {
            if let Ok((g, h)) = f.split_selfdual_strict() {
                prop_assert_eq!(g.add(&h), f.clone());
                prop_assert!(g.is_bar_invariant());
                prop_assert!(h.min_exp().is_none_or(|e| e >= 1));
                // re-splitting the recombination reproduces the parts
                let (g2, h2) = g.add(&h).split_selfdual_strict().unwrap();
                prop_assert_eq!(g, g2);
                prop_assert_eq!(h, h2);
            }
        }
    }
}
