//! Sparse Laurent polynomials `ℤ[q, q⁻¹]` with exact coefficients.
//!
//! Polynomials are stored as a sorted exponent → coefficient map with no zero
//! entries, so equality is structural and iteration order is deterministic.
//! The bar involution `q ↦ q⁻¹` and the coefficient classes driving the
//! straightening algorithm ([`classify`](LaurentPoly::classify)) live here.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::{Error, Int, Result, Scalar};

/// Coefficient class, checked in this priority order by
/// [`LaurentPoly::classify`]: the first matching class wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyClass {
    /// The zero polynomial.
    Zero,
    /// The constant polynomial 1.
    One,
    /// All exponents are ≥ 1, i.e. the polynomial lies in `qℤ[q]`.
    InQZq,
    /// Fixed by the bar involution `q ↦ q⁻¹`.
    BarSymmetric,
    /// None of the above.
    Other,
}

/// A Laurent polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C = Int> {
    terms: BTreeMap<i64, C>,
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// The single term `c·q^e` (the zero polynomial when `c = 0`).
    pub fn monomial(exp: i64, coeff: C) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// The power `q^e`.
    pub fn q_power(exp: i64) -> Self {
        Self::monomial(exp, C::one())
    }

    pub fn constant(coeff: C) -> Self {
        Self::monomial(0, coeff)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (i64, C)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^e` (zero if absent).
    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Adds the single term `c·q^e` in place.
    pub fn add_term(&mut self, exp: i64, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The bar involution `q ↦ q⁻¹` (negates every exponent).
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&-e).is_some_and(|d| d == c))
    }

    /// True when every exponent is ≥ 1, i.e. the polynomial lies in `qℤ[q]`.
    pub fn in_q_zq(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 1)
    }

    /// True when the polynomial lies in `ℕ[q]`: exponents ≥ 0 and positive
    /// coefficients.
    pub fn in_nat_q(&self) -> bool {
        self.terms.iter().all(|(e, c)| *e >= 0 && c.is_positive())
    }

    /// First matching class among zero → one → in `qℤ[q]` → bar-symmetric →
    /// other.
    pub fn classify(&self) -> PolyClass {
        if self.is_zero() {
            PolyClass::Zero
        } else if self.is_one() {
            PolyClass::One
        } else if self.in_q_zq() {
            PolyClass::InQZq
        } else if self.is_bar_symmetric() {
            PolyClass::BarSymmetric
        } else {
            PolyClass::Other
        }
    }

    /// Evaluation at `q = 1` (the sum of the coefficients).
    pub fn eval_one(&self) -> C {
        let mut acc = C::zero();
        for c in self.terms.values() {
            acc += c.clone();
        }
        acc
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, d)| (*e, d.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, exp: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + exp, c.clone())).collect(),
        }
    }

    /// JSON form: an object mapping exponent strings to coefficient strings,
    /// in decreasing exponent order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in self.terms.iter().rev() {
            map.insert(e.to_string(), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(map)
    }
}

impl LaurentPoly<Int> {
    /// Parses the JSON form produced by [`to_json`](LaurentPoly::to_json).
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidInput("polynomial JSON must be an object".into()))?;
        let mut p = Self::zero();
        for (k, v) in obj {
            let exp: i64 = k
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad exponent key {k:?}")))?;
            let s = v
                .as_str()
                .ok_or_else(|| Error::InvalidInput("coefficient must be a string".into()))?;
            let coeff: Int = s
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad coefficient {s:?}")))?;
            p.add_term(exp, coeff);
        }
        Ok(p)
    }
}

impl<C: Scalar> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }

    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl<C: Scalar> One for LaurentPoly<C> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl<C: Scalar> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<C: Scalar> Add<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Scalar> AddAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn add_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Scalar> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<C: Scalar> Sub<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Scalar> SubAssign<&LaurentPoly<C>> for LaurentPoly<C> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl<C: Scalar> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> Self {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl<C: Scalar> Mul<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

/// Canonical text form: terms in strictly decreasing exponent order,
/// unit coefficients suppressed, `q^1` written `q`, e.g.
/// `q^7 + 4*q^5 + 3*q^3 - q`.
impl<C: Scalar> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if *e == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(pairs: &[(i64, i32)]) -> LaurentPoly<Int> {
        LaurentPoly::from_pairs(pairs.iter().map(|&(e, c)| (e, Int::from(c))))
    }

    #[test]
    fn add_cancels() {
        let p = poly(&[(1, 1)]) + poly(&[(1, -1)]);
        assert!(p.is_zero());
        assert_eq!(p.classify(), PolyClass::Zero);
    }

    #[test]
    fn mul_difference_of_squares() {
        let p = poly(&[(1, 1), (0, 1)]) * poly(&[(1, 1), (0, -1)]);
        assert_eq!(p, poly(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn mul_by_one_is_identity() {
        let p = poly(&[(7, 1), (5, 4), (3, 3), (1, -1)]);
        assert_eq!(&p * &LaurentPoly::one(), p);
    }

    #[test]
    fn bar_swaps_exponents() {
        let p = poly(&[(2, 3), (-1, 1)]);
        assert_eq!(p.bar(), poly(&[(-2, 3), (1, 1)]));
    }

    #[test]
    fn classify_priority() {
        assert_eq!(poly(&[]).classify(), PolyClass::Zero);
        assert_eq!(poly(&[(0, 1)]).classify(), PolyClass::One);
        assert_eq!(poly(&[(3, 1)]).classify(), PolyClass::InQZq);
        assert_eq!(poly(&[(3, 1), (1, -1)]).classify(), PolyClass::InQZq);
        assert_eq!(poly(&[(1, 1), (-1, 1)]).classify(), PolyClass::BarSymmetric);
        assert_eq!(poly(&[(0, 2)]).classify(), PolyClass::BarSymmetric);
        assert_eq!(poly(&[(2, 1), (-1, 1)]).classify(), PolyClass::Other);
    }

    #[test]
    fn canonical_text_form() {
        assert_eq!(
            poly(&[(7, 1), (5, 4), (3, 3), (1, -1)]).to_string(),
            "q^7 + 4*q^5 + 3*q^3 - q"
        );
        assert_eq!(poly(&[(3, 8), (1, -1)]).to_string(), "8*q^3 - q");
        assert_eq!(poly(&[(0, -3)]).to_string(), "-3");
        assert_eq!(poly(&[(-2, 1)]).to_string(), "q^-2");
        assert_eq!(poly(&[(1, -1), (-1, 2)]).to_string(), "-q + 2*q^-1");
        assert_eq!(poly(&[]).to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = poly(&[(7, 1), (5, 4), (3, 3), (1, -1)]);
        let v = p.to_json();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"7":"1","5":"4","3":"3","1":"-1"}"#
        );
        assert_eq!(LaurentPoly::from_json(&v).unwrap(), p);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly<Int>> {
        proptest::collection::vec((-8i64..=8, -9i32..=9), 0..6)
            .prop_map(|pairs| LaurentPoly::from_pairs(pairs.into_iter().map(|(e, c)| (e, Int::from(c)))))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &(&b * &c), &(&a * &b) * &c);
        }

        #[test]
        fn bar_is_ring_involution(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        }

        #[test]
        fn eval_one_is_ring_hom(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a + &b).eval_one(), a.eval_one() + b.eval_one());
            prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
        }

        #[test]
        fn json_round_trips(a in arb_poly()) {
            prop_assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a);
        }
    }
}
