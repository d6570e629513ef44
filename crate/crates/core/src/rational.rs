//! Irreducible fractions, Farey neighbors and continued fractions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An irreducible non-negative fraction `num/den`, with `1/0` as the only
/// fraction of denominator zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Fraction {
    num: u64,
    den: u64,
}

/// How [`make_fraction`] treats negative inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignMode {
    /// Any negative input is rejected.
    Unsigned,
    /// Signs are moved into the numerator; the result must still be
    /// non-negative, so `-6/-10` is accepted and `-1/2` is rejected.
    Signed,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };
    pub const INFINITY: Fraction = Fraction { num: 1, den: 0 };

    pub fn new(p: u64, q: u64) -> Result<Self> {
        match (p, q) {
            (0, 0) => Err(Error::ZeroOverZero),
            (_, 0) => Ok(Self::INFINITY),
            (0, _) => Ok(Self::ZERO),
            _ => {
                let g = p.gcd(&q);
                Ok(Fraction { num: p / g, den: q / g })
            }
        }
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn is_finite(self) -> bool {
        self.den != 0
    }

    /// True iff `0 < self < 1`.
    pub fn in_unit_interval(self) -> bool {
        self.num > 0 && self.num < self.den
    }

    pub fn require_unit_interval(self) -> Result<Self> {
        if self.in_unit_interval() {
            Ok(self)
        } else {
            Err(Error::OutOfRange(self))
        }
    }

    pub fn parity_type(self) -> ParityType {
        ParityType::from_bits((self.num % 2) as u8, (self.den % 2) as u8)
            .expect("an irreducible fraction never has an even numerator and denominator")
    }
}

pub fn make_fraction(p: i64, q: i64, mode: SignMode) -> Result<Fraction> {
    if p == 0 && q == 0 {
        return Err(Error::ZeroOverZero);
    }
    let negative_input = p < 0 || q < 0;
    match mode {
        SignMode::Unsigned if negative_input => Err(Error::NegativeInput { p, q }),
        _ => {
            let negative_value = p != 0 && q != 0 && ((p < 0) != (q < 0));
            if negative_value {
                return Err(Error::NegativeInput { p, q });
            }
            Fraction::new(p.unsigned_abs(), q.unsigned_abs())
        }
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Parses `p/q`, allowing whitespace around either number.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = || Error::Parse(s.to_string());
        let (p, q) = s.split_once('/').ok_or_else(parse_err)?;
        let p: i64 = p.trim().parse().map_err(|_| parse_err())?;
        let q: i64 = q.trim().parse().map_err(|_| parse_err())?;
        make_fraction(p, q, SignMode::Unsigned)
    }
}

impl From<Fraction> for String {
    fn from(f: Fraction) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for Fraction {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// The mod-2 type of a fraction: `OneOne` is odd/odd, `OneZero` odd/even,
/// `ZeroOne` even/odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityType {
    OneOne,
    OneZero,
    ZeroOne,
}

impl ParityType {
    pub fn from_bits(n: u8, d: u8) -> Option<Self> {
        match (n & 1, d & 1) {
            (1, 1) => Some(ParityType::OneOne),
            (1, 0) => Some(ParityType::OneZero),
            (0, 1) => Some(ParityType::ZeroOne),
            _ => None,
        }
    }

    /// Numerator parity.
    pub fn n(self) -> u8 {
        match self {
            ParityType::OneOne | ParityType::OneZero => 1,
            ParityType::ZeroOne => 0,
        }
    }

    /// Denominator parity.
    pub fn d(self) -> u8 {
        match self {
            ParityType::OneOne | ParityType::ZeroOne => 1,
            ParityType::OneZero => 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ParityType::OneOne => "1/1",
            ParityType::OneZero => "1/0",
            ParityType::ZeroOne => "0/1",
        }
    }
}

pub fn classify_type(alpha: Fraction) -> ParityType {
    alpha.parity_type()
}

pub fn is_farey_neighbor(left: Fraction, right: Fraction) -> bool {
    let lhs = left.den as i128 * right.num as i128;
    let rhs = left.num as i128 * right.den as i128;
    lhs - rhs == 1
}

pub fn farey_sum(left: Fraction, right: Fraction) -> Result<Fraction> {
    if !is_farey_neighbor(left, right) {
        return Err(Error::NotNeighbors { left, right });
    }
    let num = left.num.checked_add(right.num).ok_or(Error::Overflow)?;
    let den = left.den.checked_add(right.den).ok_or(Error::Overflow)?;
    Ok(Fraction { num, den })
}

/// The unique Farey neighbors `(left, right)` whose mediant is `alpha`.
pub fn parents(alpha: Fraction) -> Result<(Fraction, Fraction)> {
    let (p, q) = (alpha.num, alpha.den);
    if p == 0 || q == 0 {
        return Err(Error::NoParents(alpha));
    }
    if q == 1 {
        return Ok((Fraction { num: p - 1, den: 1 }, Fraction::INFINITY));
    }
    // left = x/r with p*r - q*x = 1 and 1 <= r < q
    let r = mod_inverse(p % q, q);
    let x = ((p as u128 * r as u128 - 1) / q as u128) as u64;
    let left = Fraction { num: x, den: r };
    let right = Fraction { num: p - x, den: q - r };
    Ok((left, right))
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i128) as u64
}

/// Which term count a continued fraction expansion should have.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermParity {
    Even,
    Odd,
    /// The Euclidean expansion, whose last term is at least 2 when `den >= 2`.
    Any,
}

/// `[a0, a1, ..., an]` with every `ai >= 1`; `n` is the number of terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContinuedFraction {
    a0: i64,
    terms: Vec<u64>,
}

impl ContinuedFraction {
    pub fn new(a0: i64, terms: Vec<u64>) -> Result<Self> {
        if terms.contains(&0) {
            return Err(Error::NonPositiveTerm);
        }
        let cf = ContinuedFraction { a0, terms };
        cf.try_value()?;
        Ok(cf)
    }

    /// Builds `[a0, a1, ...]` from a list whose entries may include zeros in
    /// interior positions, folding `[.., x, 0, y, ..]` into `[.., x + y, ..]`.
    pub fn from_loose(a0: i64, loose: &[u64]) -> Result<Self> {
        let mut head = a0;
        let mut terms: Vec<u64> = Vec::with_capacity(loose.len());
        let mut i = 0;
        while i < loose.len() {
            let t = loose[i];
            if t == 0 {
                let next = *loose.get(i + 1).ok_or(Error::NonPositiveTerm)?;
                match terms.last_mut() {
                    Some(last) => *last = last.checked_add(next).ok_or(Error::Overflow)?,
                    None => head = head.checked_add(next as i64).ok_or(Error::Overflow)?,
                }
                i += 2;
            } else {
                terms.push(t);
                i += 1;
            }
        }
        Self::new(head, terms)
    }

    pub fn a0(&self) -> i64 {
        self.a0
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// Number of terms `n`, excluding `a0`.
    pub fn n(&self) -> usize {
        self.terms.len()
    }

    pub fn crossing_count(&self) -> u64 {
        self.terms.iter().sum()
    }

    /// `(p_i, q_i)` for `i = 0..=n` by the three-term recurrence.
    fn continuants(&self) -> Result<Vec<(i128, i128)>> {
        let mut out = Vec::with_capacity(self.terms.len() + 1);
        let (mut p2, mut q2) = (1i128, 0i128);
        let (mut p1, mut q1) = (self.a0 as i128, 1i128);
        out.push((p1, q1));
        for &a in &self.terms {
            let a = a as i128;
            let p = a
                .checked_mul(p1)
                .and_then(|v| v.checked_add(p2))
                .ok_or(Error::Overflow)?;
            let q = a
                .checked_mul(q1)
                .and_then(|v| v.checked_add(q2))
                .ok_or(Error::Overflow)?;
            out.push((p, q));
            (p2, q2, p1, q1) = (p1, q1, p, q);
        }
        Ok(out)
    }

    fn try_value(&self) -> Result<Fraction> {
        let &(p, q) = self.continuants()?.last().expect("continuants are never empty");
        to_fraction(p, q)
    }

    /// The value of the expansion.
    pub fn value(&self) -> Fraction {
        self.try_value()
            .expect("a constructed continued fraction has a representable value")
    }

    /// Convergents `α_1..α_n`, where `α_i = [a0, a1, ..., ai]`.
    pub fn convergents(&self) -> Vec<Fraction> {
        self.continuants()
            .expect("convergents are bounded by the value's continuants")
            .into_iter()
            .skip(1)
            .map(|(p, q)| to_fraction(p, q).expect("convergents of a valid expansion are valid"))
            .collect()
    }
}

fn to_fraction(p: i128, q: i128) -> Result<Fraction> {
    if p < 0 {
        return Err(Error::NegativeValue);
    }
    let num = u64::try_from(p).map_err(|_| Error::Overflow)?;
    let den = u64::try_from(q).map_err(|_| Error::Overflow)?;
    Fraction::new(num, den)
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.a0)?;
        for t in &self.terms {
            write!(f, ", {t}")?;
        }
        write!(f, "]")
    }
}

pub fn cf_expand(alpha: Fraction, parity: TermParity) -> Result<ContinuedFraction> {
    if !alpha.is_finite() {
        return Err(Error::InfiniteInput);
    }
    let (p, q) = (alpha.num, alpha.den);
    let mut a0 = i64::try_from(p / q).map_err(|_| Error::Overflow)?;
    let mut terms = Vec::new();
    let (mut x, mut y) = (q, p % q);
    while y != 0 {
        terms.push(x / y);
        (x, y) = (y, x % y);
    }
    let want_even = match parity {
        TermParity::Even => Some(true),
        TermParity::Odd => Some(false),
        TermParity::Any => None,
    };
    if let Some(even) = want_even {
        if (terms.len() % 2 == 0) != even {
            toggle_parity(&mut a0, &mut terms);
        }
    }
    Ok(ContinuedFraction { a0, terms })
}

fn toggle_parity(a0: &mut i64, terms: &mut Vec<u64>) {
    match terms.last().copied() {
        None => {
            *a0 -= 1;
            terms.push(1);
        }
        Some(last) if last >= 2 => {
            *terms.last_mut().unwrap() = last - 1;
            terms.push(1);
        }
        Some(_) => {
            terms.pop();
            match terms.last_mut() {
                Some(prev) => *prev += 1,
                None => *a0 += 1,
            }
        }
    }
}

pub fn cf_value(cf: &ContinuedFraction) -> Fraction {
    cf.value()
}

pub fn count_even_terms(cf: &ContinuedFraction) -> usize {
    cf.terms.iter().filter(|&&a| a % 2 == 0).count()
}

/// Types of the convergents `α_1..α_n` from the mod-2 recurrence
/// `n(α_i) = n(α_{i-2}) + [a_i odd]·n(α_{i-1})`, seeded with `α_{-1} = 1/0`
/// and `α_0 = a0/1`.
pub fn convergent_types(cf: &ContinuedFraction) -> Vec<ParityType> {
    let mut prev2 = (1u8, 0u8);
    let mut prev1 = ((cf.a0.rem_euclid(2)) as u8, 1u8);
    let mut out = Vec::with_capacity(cf.n());
    for &a in &cf.terms {
        let odd = (a % 2) as u8;
        let cur = ((prev2.0 + odd * prev1.0) % 2, (prev2.1 + odd * prev1.1) % 2);
        out.push(ParityType::from_bits(cur.0, cur.1).expect("convergents are irreducible"));
        (prev2, prev1) = (prev1, cur);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: u64, q: u64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    fn cf(a0: i64, terms: &[u64]) -> ContinuedFraction {
        ContinuedFraction::new(a0, terms.to_vec()).unwrap()
    }

    /// Parents found by walking the Stern-Brocot tree from the root.
    fn parents_by_descent(alpha: Fraction) -> (Fraction, Fraction) {
        let (mut lo, mut hi) = (Fraction::ZERO, Fraction::INFINITY);
        loop {
            let m = farey_sum(lo, hi).unwrap();
            match alpha.cmp(&m) {
                Ordering::Equal => return (lo, hi),
                Ordering::Less => hi = m,
                Ordering::Greater => lo = m,
            }
        }
    }

    #[test]
    fn make_fraction_examples() {
        assert_eq!(make_fraction(6, 10, SignMode::Unsigned).unwrap(), fr(3, 5));
        assert_eq!(make_fraction(1, 0, SignMode::Unsigned).unwrap(), Fraction::INFINITY);
        assert_eq!(make_fraction(5, 0, SignMode::Unsigned).unwrap(), Fraction::INFINITY);
        assert_eq!(make_fraction(0, 7, SignMode::Unsigned).unwrap(), Fraction::ZERO);
        assert_eq!(make_fraction(0, 0, SignMode::Unsigned), Err(Error::ZeroOverZero));
        assert!(matches!(
            make_fraction(-1, 2, SignMode::Unsigned),
            Err(Error::NegativeInput { .. })
        ));
        assert_eq!(make_fraction(-6, -10, SignMode::Signed).unwrap(), fr(3, 5));
        assert!(make_fraction(-6, 10, SignMode::Signed).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(" 6 / 10 ".parse::<Fraction>().unwrap(), fr(3, 5));
        assert_eq!(fr(3, 8).to_string(), "3/8");
        assert!("3".parse::<Fraction>().is_err());
        assert!("a/b".parse::<Fraction>().is_err());
        let json = serde_json::to_string(&fr(7, 17)).unwrap();
        assert_eq!(json, "\"7/17\"");
        assert_eq!(serde_json::from_str::<Fraction>(&json).unwrap(), fr(7, 17));
    }

    #[test]
    fn ordering_includes_infinity() {
        assert!(fr(1, 3) < fr(1, 2));
        assert!(fr(5, 1) < Fraction::INFINITY);
        assert!(Fraction::ZERO < fr(1, 1000));
    }

    #[test]
    fn farey_neighbor_examples() {
        assert!(is_farey_neighbor(fr(0, 1), fr(1, 1)));
        assert!(is_farey_neighbor(fr(1, 3), fr(1, 2)));
        assert!(!is_farey_neighbor(fr(1, 3), fr(2, 3)));
        assert!(is_farey_neighbor(fr(3, 1), Fraction::INFINITY));
    }

    #[test]
    fn farey_sum_examples() {
        assert_eq!(farey_sum(fr(0, 1), fr(1, 1)).unwrap(), fr(1, 2));
        assert_eq!(farey_sum(fr(1, 5), fr(2, 9)).unwrap(), fr(3, 14));
        assert_eq!(farey_sum(fr(2, 7), fr(1, 3)).unwrap(), fr(3, 10));
        assert!(matches!(
            farey_sum(fr(1, 3), fr(2, 3)),
            Err(Error::NotNeighbors { .. })
        ));
    }

    #[test]
    fn parents_examples() {
        assert_eq!(parents(fr(1, 2)).unwrap(), (fr(0, 1), fr(1, 1)));
        assert_eq!(parents(fr(3, 14)).unwrap(), (fr(1, 5), fr(2, 9)));
        assert_eq!(parents(fr(1, 4)).unwrap(), (fr(0, 1), fr(1, 3)));
        assert_eq!(parents(fr(2, 7)).unwrap(), parents_by_descent(fr(2, 7)));
        assert_eq!(parents(fr(1, 1)).unwrap(), (fr(0, 1), Fraction::INFINITY));
        assert_eq!(parents(fr(5, 3)).unwrap(), (fr(3, 2), fr(2, 1)));
        assert_eq!(parents(Fraction::ZERO), Err(Error::NoParents(Fraction::ZERO)));
        assert!(parents(Fraction::INFINITY).is_err());
    }

    #[test]
    fn parents_match_tree_descent() {
        for q in 2..=150u64 {
            for p in 1..3 * q {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let a = fr(p, q);
                assert_eq!(parents(a).unwrap(), parents_by_descent(a), "{a}");
            }
        }
    }

    #[test]
    fn cf_expand_examples() {
        assert_eq!(cf_expand(fr(3, 8), TermParity::Odd).unwrap(), cf(0, &[2, 1, 2]));
        assert_eq!(cf_expand(fr(8, 11), TermParity::Any).unwrap(), cf(0, &[1, 2, 1, 2]));
        assert_eq!(cf_expand(fr(1, 2), TermParity::Even).unwrap(), cf(0, &[1, 1]));
        assert_eq!(cf_expand(fr(1, 2), TermParity::Any).unwrap(), cf(0, &[2]));
        assert_eq!(cf_expand(fr(3, 8), TermParity::Even).unwrap(), cf(0, &[2, 1, 1, 1]));
        assert_eq!(cf_expand(fr(3, 1), TermParity::Odd).unwrap(), cf(2, &[1]));
        assert_eq!(cf_expand(Fraction::ZERO, TermParity::Odd).unwrap(), cf(-1, &[1]));
        assert_eq!(cf_expand(Fraction::INFINITY, TermParity::Any), Err(Error::InfiniteInput));
    }

    #[test]
    fn cf_value_examples() {
        assert_eq!(cf(0, &[4]).value(), fr(1, 4));
        assert_eq!(cf(0, &[3, 3]).value(), fr(3, 10));
        assert_eq!(cf(0, &[1, 3, 1, 2]).value(), fr(11, 14));
        assert_eq!(cf(-1, &[1]).value(), Fraction::ZERO);
        assert_eq!(ContinuedFraction::new(0, vec![2, 0]), Err(Error::NonPositiveTerm));
        assert_eq!(ContinuedFraction::new(-2, vec![1]), Err(Error::NegativeValue));
    }

    #[test]
    fn from_loose_folds_zeros() {
        assert_eq!(ContinuedFraction::from_loose(0, &[1, 0, 3]).unwrap(), cf(0, &[4]));
        assert_eq!(ContinuedFraction::from_loose(0, &[0, 2]).unwrap(), cf(2, &[]));
        assert_eq!(ContinuedFraction::from_loose(0, &[1, 0, 2]).unwrap().value(), fr(1, 3));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_type(fr(3, 14)), ParityType::OneZero);
        assert_eq!(classify_type(fr(3, 8)), ParityType::OneZero);
        assert_eq!(classify_type(fr(2, 3)), ParityType::ZeroOne);
        assert_eq!(classify_type(fr(5, 7)), ParityType::OneOne);
        assert_eq!(classify_type(Fraction::INFINITY), ParityType::OneZero);
    }

    #[test]
    fn count_even_examples() {
        assert_eq!(count_even_terms(&cf(0, &[2, 1, 2])), 2);
        assert_eq!(count_even_terms(&cf(0, &[1, 1])), 0);
        assert_eq!(count_even_terms(&cf(0, &[4, 1, 2])), 2);
    }

    #[test]
    fn convergent_type_examples() {
        use ParityType::*;
        assert_eq!(convergent_types(&cf(0, &[2, 1, 2])), vec![OneZero, OneOne, OneZero]);
        assert_eq!(convergent_types(&cf(0, &[1])), vec![OneOne]);
        assert_eq!(
            convergent_types(&cf(0, &[1, 2, 1, 2])),
            vec![OneOne, ZeroOne, OneZero, ZeroOne]
        );
        assert_eq!(
            cf(0, &[1, 2, 1, 2]).convergents(),
            vec![fr(1, 1), fr(2, 3), fr(3, 4), fr(8, 11)]
        );
    }
}
