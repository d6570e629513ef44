//! Writhes of rational links computed from continued fractions alone, via a
//! recursion on the convergents that assigns a sign to every term.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lr_words::op_i;
use crate::rational::{cf_expand, convergent_types, ContinuedFraction, Fraction, ParityType, TermParity};

/// One sign per term `a1..an`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SignSequence(Vec<i8>);

impl SignSequence {
    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> i8 {
        *self.0.last().expect("sign sequences are non-empty")
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.0.iter().map(|&s| if s > 0 { "+1" } else { "-1" }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn neg_pow(e: u64) -> i8 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Types of `α_0 = 0/1, α_1, ..., α_n`.
fn types_with_origin(cf: &ContinuedFraction) -> Vec<ParityType> {
    let mut t = vec![ParityType::ZeroOne];
    t.extend(convergent_types(cf));
    t
}

fn check_unit(cf: &ContinuedFraction) -> Result<()> {
    let value = cf.value();
    if cf.a0() != 0 || cf.n() == 0 || !value.in_unit_interval() {
        return Err(Error::OutOfRange(value));
    }
    Ok(())
}

struct Recursion<'a> {
    a: &'a [u64],
    types: Vec<ParityType>,
}

impl Recursion<'_> {
    fn term(&self, j: usize) -> u64 {
        self.a[j - 1]
    }

    fn d(&self, j: usize) -> u64 {
        self.types[j].d() as u64
    }

    /// Signs of `α_m = [0, a1, ..., am]`.
    fn signs(&self, m: usize) -> Vec<i8> {
        match m {
            1 => vec![if self.types[1] == ParityType::OneOne { 1 } else { -1 }],
            2 => {
                let (a1, a2) = (self.term(1), self.term(2));
                vec![neg_pow(a1 * a2 + a2 + 1), neg_pow(a1)]
            }
            _ => self.step(m),
        }
    }

    fn step(&self, m: usize) -> Vec<i8> {
        use ParityType::*;
        let an = self.term(m);
        // prefix twist for term j uses the denominator parity of α_{j-1}
        let e = |j: usize| self.d(j - 1);
        let doubled = |v: i8, mut s: Vec<i8>| {
            s.push(v);
            s.push(v);
            s
        };
        match (self.types[m - 2], self.types[m - 1]) {
            (OneOne, OneZero) => {
                let s = self.signs(m - 1);
                let last = s[m - 2];
                let mut out: Vec<i8> = s.iter().enumerate().map(|(k, &x)| x * neg_pow(e(k + 1) * (an - 1))).collect();
                out.push(last);
                out
            }
            (ZeroOne, OneZero) => {
                let s = self.signs(m - 1);
                let last = -s[m - 2];
                let mut out: Vec<i8> = s.iter().enumerate().map(|(k, &x)| x * neg_pow(e(k + 1) * an)).collect();
                out.push(last);
                out
            }
            (OneZero, ZeroOne) if an % 2 == 0 => {
                let mut s = self.signs(m - 1);
                let last = -s[m - 2];
                s.push(last);
                s
            }
            (OneZero, ZeroOne) => {
                let s = self.signs(m - 2);
                let v = neg_pow(self.term(m - 1) - 1) * s[m - 3];
                let out = s.iter().enumerate().map(|(k, &x)| x * neg_pow(e(k + 1))).collect();
                doubled(v, out)
            }
            (OneOne, ZeroOne) if an % 2 == 1 => {
                let mut s = self.signs(m - 1);
                let last = s[m - 2];
                s.push(last);
                s
            }
            (OneOne, ZeroOne) | (ZeroOne, OneOne) | (OneZero, OneOne) => {
                let s = self.signs(m - 2);
                let v = neg_pow(self.term(m - 1)) * s[m - 3];
                doubled(v, s)
            }
            (x, y) => unreachable!("consecutive convergents {x:?}, {y:?} share a type"),
        }
    }
}

/// Signs `t(Δ_1), ..., t(Δ_n)` for `[0, a1, ..., an]`.
pub fn sign_sequence(cf: &ContinuedFraction) -> Result<SignSequence> {
    check_unit(cf)?;
    let rec = Recursion { a: cf.terms(), types: types_with_origin(cf) };
    Ok(SignSequence(rec.signs(cf.n())))
}

/// `t(Δ_n) = (-1)^((d(α_n)+1)·n(α_{n-1}) + d(α_n)·d(α_{n-1}) + n)`.
pub fn top_sign_closed_form(cf: &ContinuedFraction) -> Result<i8> {
    check_unit(cf)?;
    let t = types_with_origin(cf);
    let n = cf.n();
    let (dn, nn1, dn1) = (t[n].d() as u64, t[n - 1].n() as u64, t[n - 1].d() as u64);
    Ok(neg_pow((dn + 1) * nn1 + dn * dn1 + n as u64))
}

/// The same exponent with `n(α_{n-1})` in place of `d(α_{n-1})` in the
/// middle term. Kept to measure how often it disagrees.
pub fn top_sign_variant(cf: &ContinuedFraction) -> Result<i8> {
    check_unit(cf)?;
    let t = types_with_origin(cf);
    let n = cf.n();
    let (dn, nn1) = (t[n].d() as u64, t[n - 1].n() as u64);
    Ok(neg_pow((dn + 1) * nn1 + dn * nn1 + n as u64))
}

/// `wr = -Σ t(Δ_j)·a_j` for a given expansion.
pub fn writhe_of_expansion(cf: &ContinuedFraction) -> Result<i64> {
    let signs = sign_sequence(cf)?;
    Ok(-signs.signs().iter().zip(cf.terms()).map(|(&s, &a)| s as i64 * a as i64).sum::<i64>())
}

/// Writhe of `D(T(α))` with the principal orientation.
pub fn writhe_principal(alpha: Fraction) -> Result<i64> {
    let a = alpha.require_unit_interval()?;
    writhe_of_expansion(&cf_expand(a, TermParity::Any)?)
}

/// Writhe with the second component reversed: `wr_{+-}(α) = -wr(i(α))`.
pub fn writhe_plus_minus(alpha: Fraction) -> Result<i64> {
    let a = alpha.require_unit_interval()?;
    if a.parity_type() != ParityType::OneZero {
        return Err(Error::NotTwoComponent(a));
    }
    Ok(-writhe_principal(op_i(a)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(a: &[u64]) -> ContinuedFraction {
        ContinuedFraction::new(0, a.to_vec()).unwrap()
    }

    fn fr(p: u64, q: u64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    #[test]
    fn worked_sign_sequences() {
        assert_eq!(sign_sequence(&cf(&[2, 1, 2])).unwrap().signs(), &[-1, 1, 1]);
        assert_eq!(sign_sequence(&cf(&[1, 2, 1, 2])).unwrap().signs(), &[-1, -1, -1, 1]);
        assert_eq!(sign_sequence(&cf(&[2, 1, 2])).unwrap().to_string(), "-1 +1 +1");
    }

    #[test]
    fn single_term_signs() {
        assert_eq!(sign_sequence(&cf(&[3])).unwrap().signs(), &[1]);
        assert_eq!(sign_sequence(&cf(&[4])).unwrap().signs(), &[-1]);
    }

    #[test]
    fn top_sign_examples() {
        assert_eq!(top_sign_closed_form(&cf(&[2, 1, 2])).unwrap(), 1);
        assert_eq!(top_sign_closed_form(&cf(&[1, 2, 1, 2])).unwrap(), 1);
        assert_eq!(top_sign_closed_form(&cf(&[2, 2])).unwrap(), 1);
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(writhe_principal(fr(3, 8)).unwrap(), -1);
        assert_eq!(writhe_principal(fr(8, 11)).unwrap(), 2);
        assert_eq!(writhe_principal(fr(3, 10)).unwrap(), 6);
        assert_eq!(writhe_principal(fr(1, 4)).unwrap(), 4);
        assert_eq!(writhe_principal(fr(3, 14)).unwrap(), 1);
        assert_eq!(writhe_principal(fr(11, 14)).unwrap(), 3);
    }

    #[test]
    fn plus_minus_examples() {
        assert_eq!(writhe_plus_minus(fr(1, 4)).unwrap(), -4);
        assert_eq!(writhe_plus_minus(fr(3, 10)).unwrap(), -6);
        assert_eq!(writhe_plus_minus(fr(3, 14)).unwrap(), -3);
        assert_eq!(writhe_plus_minus(fr(1, 3)), Err(Error::NotTwoComponent(fr(1, 3))));
    }

    #[test]
    fn rejects_values_outside_unit_interval() {
        assert!(sign_sequence(&cf(&[1])).is_err());
        assert!(sign_sequence(&ContinuedFraction::new(1, vec![2]).unwrap()).is_err());
    }
}
