//! The rational tangle `T(α)` as a stack of twist regions, and its Kauffman
//! bracket in skein coordinates over the `[0]` and `[∞]` tangles.

use serde::Serialize;

use crate::error::Result;
use crate::laurent::{LaurentPoly, Var};
use crate::rational::{cf_expand, ContinuedFraction, Fraction, TermParity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Twist {
    Horizontal,
    Vertical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TwistRegion {
    pub twist: Twist,
    pub crossings: u64,
}

/// The tangle a twist sequence starts from: `[0]` joins NW-NE and SW-SE,
/// `[∞]` joins NW-SW and NE-SE.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BaseTangle {
    Zero,
    Infinity,
}

/// `[0, a1, ..., an]` read as twist regions: `a1` is vertical and the kind
/// alternates, so `an` is horizontal exactly when `n` is even.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistSequence {
    cf: ContinuedFraction,
    mirrored: bool,
}

impl TwistSequence {
    pub fn new(cf: ContinuedFraction) -> Self {
        TwistSequence { cf, mirrored: false }
    }

    /// The Euclidean expansion of `alpha`.
    pub fn of(alpha: Fraction) -> Result<Self> {
        Self::with_parity(alpha, TermParity::Any)
    }

    pub fn with_parity(alpha: Fraction, parity: TermParity) -> Result<Self> {
        let a = alpha.require_unit_interval()?;
        Ok(Self::new(cf_expand(a, parity)?))
    }

    /// Every crossing switched.
    pub fn mirrored(&self) -> Self {
        TwistSequence { cf: self.cf.clone(), mirrored: !self.mirrored }
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    pub fn continued_fraction(&self) -> &ContinuedFraction {
        &self.cf
    }

    pub fn crossing_count(&self) -> u64 {
        self.cf.crossing_count()
    }

    pub fn base(&self) -> BaseTangle {
        if self.cf.n() % 2 == 0 {
            BaseTangle::Zero
        } else {
            BaseTangle::Infinity
        }
    }

    /// Regions from the innermost `an` out to `a1`.
    pub fn regions(&self) -> impl Iterator<Item = TwistRegion> + '_ {
        let terms = self.cf.terms();
        (1..=terms.len()).rev().map(move |idx| TwistRegion {
            twist: if idx % 2 == 0 { Twist::Horizontal } else { Twist::Vertical },
            crossings: terms[idx - 1],
        })
    }
}

/// `⟨T⟩ = f·⟨[0]⟩ + g·⟨[∞]⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BracketPair {
    pub f: LaurentPoly,
    pub g: LaurentPoly,
}

impl BracketPair {
    pub fn base(base: BaseTangle) -> Self {
        let (one, zero) = (LaurentPoly::one(Var::A), LaurentPoly::zero(Var::A));
        match base {
            BaseTangle::Zero => BracketPair { f: one, g: zero },
            BaseTangle::Infinity => BracketPair { f: zero, g: one },
        }
    }

    /// Joins NW-SW and NE-SE: `[0]` closes to one circle, `[∞]` to two.
    pub fn denominator(&self) -> LaurentPoly {
        &self.f + &(&LaurentPoly::delta() * &self.g)
    }

    /// Joins NW-NE and SW-SE: `[0]` closes to two circles, `[∞]` to one.
    pub fn numerator(&self) -> LaurentPoly {
        &(&LaurentPoly::delta() * &self.f) + &self.g
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Mat2([[LaurentPoly; 2]; 2]);

impl Mat2 {
    fn identity() -> Self {
        let (o, z) = (LaurentPoly::one(Var::A), LaurentPoly::zero(Var::A));
        Mat2([[o.clone(), z.clone()], [z, o]])
    }

    /// One crossing added to a region of the given kind.
    fn crossing(twist: Twist, mirrored: bool) -> Self {
        let a = |e: i64, c: i64| LaurentPoly::monomial(Var::A, c, e);
        let z = LaurentPoly::zero(Var::A);
        let m = match twist {
            Twist::Horizontal => Mat2([[a(1, 1), z], [a(-1, 1), a(-3, -1)]]),
            Twist::Vertical => Mat2([[a(3, -1), a(1, 1)], [z, a(-1, 1)]]),
        };
        if mirrored {
            Mat2(m.0.map(|row| row.map(|p| p.conjugate())))
        } else {
            m
        }
    }

    fn mul(&self, o: &Mat2) -> Mat2 {
        let e = |i: usize, j: usize| &(&self.0[i][0] * &o.0[0][j]) + &(&self.0[i][1] * &o.0[1][j]);
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    fn pow(&self, mut k: u64) -> Mat2 {
        let mut acc = Mat2::identity();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn apply(&self, p: &BracketPair) -> BracketPair {
        BracketPair {
            f: &(&self.0[0][0] * &p.f) + &(&self.0[0][1] * &p.g),
            g: &(&self.0[1][0] * &p.f) + &(&self.0[1][1] * &p.g),
        }
    }
}

/// Skein coordinates of a twist sequence.
pub fn bracket_of_sequence(seq: &TwistSequence) -> BracketPair {
    seq.regions().fold(BracketPair::base(seq.base()), |pair, region| {
        Mat2::crossing(region.twist, seq.is_mirrored()).pow(region.crossings).apply(&pair)
    })
}

pub fn bracket_of_tangle(alpha: Fraction) -> Result<BracketPair> {
    Ok(bracket_of_sequence(&TwistSequence::of(alpha)?))
}

/// `⟨D(T(α))⟩`.
pub fn bracket_of_denominator(alpha: Fraction) -> Result<LaurentPoly> {
    Ok(bracket_of_tangle(alpha)?.denominator())
}

/// `⟨N(T(α))⟩`.
pub fn numerator_closure_bracket(alpha: Fraction) -> Result<LaurentPoly> {
    Ok(bracket_of_tangle(alpha)?.numerator())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: u64, q: u64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::A, terms.iter().copied())
    }

    #[test]
    fn hopf_bracket() {
        assert_eq!(bracket_of_denominator(fr(1, 2)).unwrap(), poly(&[(4, -1), (-4, -1)]));
    }

    #[test]
    fn trefoil_has_three_terms() {
        assert_eq!(bracket_of_denominator(fr(1, 3)).unwrap().term_count(), 3);
    }

    #[test]
    fn parity_presentations_agree() {
        for (p, q) in [(3, 8), (1, 4), (3, 14), (8, 11)] {
            let even = bracket_of_sequence(&TwistSequence::with_parity(fr(p, q), TermParity::Even).unwrap());
            let odd = bracket_of_sequence(&TwistSequence::with_parity(fr(p, q), TermParity::Odd).unwrap());
            assert_eq!(even.denominator(), odd.denominator(), "{p}/{q}");
            assert_eq!(even.numerator(), odd.numerator(), "{p}/{q}");
        }
    }

    #[test]
    fn mirror_conjugates() {
        let seq = TwistSequence::of(fr(5, 13)).unwrap();
        assert_eq!(
            bracket_of_sequence(&seq.mirrored()).denominator(),
            bracket_of_sequence(&seq).denominator().conjugate()
        );
    }

    #[test]
    fn closures_of_base_tangles() {
        let zero = BracketPair::base(BaseTangle::Zero);
        assert_eq!(zero.denominator(), LaurentPoly::one(Var::A));
        assert_eq!(zero.numerator(), LaurentPoly::delta());
        let inf = BracketPair::base(BaseTangle::Infinity);
        assert_eq!(inf.numerator(), LaurentPoly::one(Var::A));
    }

    #[test]
    fn numerator_of_half_is_kinked_unknot() {
        assert_eq!(numerator_closure_bracket(fr(1, 2)).unwrap(), poly(&[(6, 1)]));
    }

    #[test]
    fn large_terms_use_repeated_squaring() {
        let seq = TwistSequence::new(ContinuedFraction::new(0, vec![37]).unwrap());
        let step = Mat2::crossing(Twist::Vertical, false);
        let mut pair = BracketPair::base(BaseTangle::Infinity);
        for _ in 0..37 {
            pair = step.apply(&pair);
        }
        assert_eq!(bracket_of_sequence(&seq), pair);
    }
}
