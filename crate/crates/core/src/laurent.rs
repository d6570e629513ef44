//! Integer Laurent polynomials in `A` or in `S = t^(1/2)`.

use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// The bracket variable `A`.
    A,
    /// `t^(1/2)`, related to `A` by `S = A^-2`.
    S,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::S => "t^(1/2)",
        }
    }
}

/// Dense storage: `coeffs[k]` is the coefficient of `var^(low + k)`. The
/// first and last coefficients are nonzero; zero has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    var: Var,
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, low: 0, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 1, 0)
    }

    pub fn monomial(var: Var, coeff: impl Into<BigInt>, exp: i64) -> Self {
        Self::normalized(var, exp, vec![coeff.into()])
    }

    /// `A^exp`.
    pub fn a(exp: i64) -> Self {
        Self::monomial(Var::A, 1, exp)
    }

    /// `δ = -A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms(Var::A, [(2, -1), (-2, -1)])
    }

    /// `(-A^3)^k` for any integer `k`.
    pub fn neg_a_cubed_pow(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(Var::A, sign, 3 * k)
    }

    /// Sums repeated exponents and drops zeros.
    pub fn from_terms<C: Into<BigInt>>(var: Var, terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero(var);
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::normalized(var, low, coeffs)
    }

    fn normalized(var: Var, mut low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero(var);
        }
        coeffs.drain(..lead);
        low += lead as i64;
        LaurentPoly { var, low, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms `(exp, coeff)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// The single term, if this is `c·x^e`.
    pub fn as_monomial(&self) -> Option<(BigInt, i64)> {
        (self.coeffs.len() == 1).then(|| (self.coeffs[0].clone(), self.low))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.var != other.var {
            return Err(Error::VariableMismatch);
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let low = self.low.min(other.low);
        let high = self.max_exp().unwrap().max(other.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for p in [self, other] {
            let off = (p.low - low) as usize;
            for (k, c) in p.coeffs.iter().enumerate() {
                coeffs[off + k] += c;
            }
        }
        Ok(Self::normalized(self.var, low, coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.var != other.var {
            return Err(Error::VariableMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Self::normalized(self.var, self.low + other.low, coeffs))
    }

    /// Multiplies by `sign·x^shift` without a full product.
    pub fn shifted(&self, shift: i64, negate: bool) -> Self {
        let mut out = if negate { -self } else { self.clone() };
        if !out.is_zero() {
            out.low += shift;
        }
        out
    }

    /// Integer powers; negative powers exist only for monomials `±x^e`.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            let (c, e) = self.as_monomial().ok_or(Error::NotInvertible)?;
            if !c.abs().is_one() {
                return Err(Error::NotInvertible);
            }
            let sign = if c.is_negative() && k % 2 != 0 { -1 } else { 1 };
            return Ok(Self::monomial(self.var, sign, e * k));
        }
        let mut result = Self::one(self.var);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// `x ↦ x^-1`.
    pub fn conjugate(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { var: self.var, low: -self.max_exp().unwrap(), coeffs }
    }

    /// Substitutes `A = t^(-1/4)`: `A^e ↦ S^(-e/2)`. Every exponent must be even.
    pub fn to_t_half(&self) -> Result<Self> {
        if self.var != Var::A {
            return Err(Error::VariableMismatch);
        }
        if let Some((e, _)) = self.terms().find(|(e, _)| e % 2 != 0) {
            return Err(Error::OddExponent(e));
        }
        Ok(Self::from_terms(Var::S, self.terms().map(|(e, c)| (-e / 2, c.clone()))))
    }

    /// Inverse of [`to_t_half`](Self::to_t_half).
    pub fn from_t_half(&self) -> Result<Self> {
        if self.var != Var::S {
            return Err(Error::VariableMismatch);
        }
        Ok(Self::from_terms(Var::A, self.terms().map(|(e, c)| (-2 * e, c.clone()))))
    }

    /// The default prefactor exponent (in `S` units) for [`pretty_t`]:
    /// the middle of the exponent span, rounded down onto the exponent lattice.
    ///
    /// [`pretty_t`]: Self::pretty_t
    pub fn default_prefactor(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => lo + 2 * (hi - lo).div_euclid(4),
            _ => 0,
        }
    }

    /// Renders a polynomial in `S = t^(1/2)` as `t^(k/2)(...)` with integer
    /// powers of `t` inside the parentheses. `prefactor` is `k`; it must
    /// have the parity of every exponent, else the plain form is returned.
    pub fn pretty_t(&self, prefactor: Option<i64>) -> String {
        if self.var != Var::S || self.is_zero() {
            return self.to_string();
        }
        let k = prefactor.unwrap_or_else(|| self.default_prefactor());
        if self.terms().any(|(e, _)| (e - k) % 2 != 0) {
            return self.to_string();
        }
        let inner: Vec<(i64, BigInt)> =
            self.terms().rev().map(|(e, c)| ((e - k) / 2, c.clone())).collect();
        let body = format_terms(&inner, |e| power_text("t", e), "");
        if k == 0 {
            return body;
        }
        let pre = if k % 2 == 0 { power_text("t", k / 2) } else { format!("t^({k}/2)") };
        format!("{pre}({body})")
    }
}

fn power_text(x: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => x.to_string(),
        _ => format!("{x}^{e}"),
    }
}

/// Joins `(exp, coeff)` pairs as `c·x^e` terms separated by ` + ` / ` - `.
fn format_terms(terms: &[(i64, BigInt)], mono: impl Fn(i64) -> String, times: &str) -> String {
    let mut out = String::new();
    for (idx, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let m = mono(*e);
        if m.is_empty() {
            let _ = write!(out, "{abs}");
        } else if abs.is_one() {
            out.push_str(&m);
        } else {
            let _ = write!(out, "{abs}{times}{m}");
        }
    }
    out
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents; `A` terms print as `c*A^e`, `S` terms as
    /// `c*t^(e/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(i64, BigInt)> = self.terms().rev().map(|(e, c)| (e, c.clone())).collect();
        let text = match self.var {
            Var::A => format_terms(&terms, |e| power_text("A", e), "*"),
            Var::S => format_terms(
                &terms,
                |e| match e {
                    0 => String::new(),
                    _ if e % 2 == 0 => power_text("t", e / 2),
                    _ => format!("t^({e}/2)"),
                },
                "*",
            ),
        };
        f.write_str(&text)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            var: self.var,
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

// The operator impls panic on a variable mismatch; use the `checked_*`
// methods where the variables are not known to agree.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("variable mismatch in Laurent addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("variable mismatch in Laurent subtraction")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("variable mismatch in Laurent product")
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

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// JSON coefficient: a number when it fits in `i64`, otherwise a decimal string.
struct Coeff<'a>(&'a BigInt);

impl Serialize for Coeff<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct Terms<'a>(&'a LaurentPoly);

impl Serialize for Terms<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.term_count()))?;
        for (e, c) in self.0.terms().rev() {
            seq.serialize_element(&(e, Coeff(c)))?;
        }
        seq.end()
    }
}

impl Serialize for LaurentPoly {
    /// `{ "var": "A" | "t^(1/2)", "terms": [[exp, coeff], ...] }`, descending.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("var", self.var.name())?;
        map.serialize_entry("terms", &Terms(self))?;
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::A, terms.iter().copied())
    }

    #[test]
    fn delta_squared() {
        let d = LaurentPoly::delta();
        assert_eq!(&d * &d, a(&[(4, 1), (0, 2), (-4, 1)]));
    }

    #[test]
    fn powers_of_neg_a_cubed() {
        let m = a(&[(3, -1)]);
        assert_eq!(m.pow(0).unwrap(), LaurentPoly::one(Var::A));
        assert_eq!(m.pow(-2).unwrap(), a(&[(-6, 1)]));
        assert_eq!(m.pow(-3).unwrap(), a(&[(-9, -1)]));
        assert_eq!(m.pow(5).unwrap(), LaurentPoly::neg_a_cubed_pow(5));
        for k in -6..=6 {
            assert_eq!(m.pow(k).unwrap(), LaurentPoly::neg_a_cubed_pow(k), "k = {k}");
        }
        assert_eq!(LaurentPoly::delta().pow(-1), Err(Error::NotInvertible));
        assert_eq!(a(&[(1, 2)]).pow(-1), Err(Error::NotInvertible));
    }

    #[test]
    fn conjugation() {
        let p = a(&[(4, -1), (-4, -1)]);
        assert_eq!(p.conjugate(), p);
        assert_eq!(a(&[(3, 1)]).conjugate(), a(&[(-3, 1)]));
        let q = a(&[(5, 2), (1, -3), (-2, 7)]);
        assert_eq!(q.conjugate().conjugate(), q);
    }

    #[test]
    fn substitution() {
        assert_eq!(a(&[(-2, 1)]).to_t_half().unwrap(), LaurentPoly::monomial(Var::S, 1, 1));
        assert_eq!(
            LaurentPoly::one(Var::A).to_t_half().unwrap(),
            LaurentPoly::one(Var::S)
        );
        assert_eq!(a(&[(3, 1)]).to_t_half(), Err(Error::OddExponent(3)));
        let p = a(&[(4, 1), (-6, -2)]);
        assert_eq!(p.to_t_half().unwrap().from_t_half().unwrap(), p);
    }

    #[test]
    fn variable_mismatch() {
        let s = LaurentPoly::one(Var::S);
        let x = LaurentPoly::one(Var::A);
        assert_eq!(s.checked_add(&x), Err(Error::VariableMismatch));
        assert_eq!(s.checked_mul(&x), Err(Error::VariableMismatch));
    }

    #[test]
    fn zero_handling() {
        let p = a(&[(2, 1), (2, -1)]);
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
        assert_eq!(a(&[(1, 1)]).checked_sub(&a(&[(1, 1)])).unwrap(), LaurentPoly::zero(Var::A));
        assert_eq!(p.conjugate(), p);
    }

    #[test]
    fn text_forms() {
        assert_eq!(a(&[(4, -1), (-4, -1)]).to_string(), "-A^4 - A^-4");
        assert_eq!(a(&[(7, 2), (0, 1), (-1, -3)]).to_string(), "2*A^7 + 1 - 3*A^-1");
        let v = LaurentPoly::from_terms(Var::S, [(9, -1), (5, -1), (3, 1), (1, -1)]);
        assert_eq!(v.pretty_t(Some(3)), "t^(3/2)(-t^3 - t + 1 - t^-1)");
        assert_eq!(v.to_string(), "-t^(9/2) - t^(5/2) + t^(3/2) - t^(1/2)");
        let k = LaurentPoly::from_terms(Var::S, [(4, 1), (0, -2)]);
        assert_eq!(k.pretty_t(Some(0)), "t^2 - 2");
        assert_eq!(k.pretty_t(Some(2)), "t(t - 2t^-1)");
    }

    #[test]
    fn json_form() {
        let p = a(&[(4, -1), (-4, -1)]);
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"var":"A","terms":[[4,-1],[-4,-1]]}"#
        );
    }
}
