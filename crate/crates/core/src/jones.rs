//! Weights, Jones polynomials of rational links and the Jones class of a
//! zigzag frieze.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frieze::{frieze_of, Frieze, MaxNeighborhood};
use crate::laurent::{LaurentPoly, Var};
use crate::lr_words::{op_i, Orbit};
use crate::rational::{cf_expand, farey_sum, parents, ContinuedFraction, Fraction, TermParity};
use crate::tangle_bracket::bracket_of_denominator;
use crate::writhe::{writhe_plus_minus, writhe_principal};

/// `a0 - a1 + a2 - ... ± an`, plus 2 when `n` is odd.
pub fn weight_of_expansion(cf: &ContinuedFraction) -> i64 {
    let alternating: i64 = std::iter::once(cf.a0())
        .chain(cf.terms().iter().map(|&a| a as i64))
        .enumerate()
        .map(|(k, a)| if k % 2 == 0 { a } else { -a })
        .sum();
    if cf.n() % 2 == 1 {
        alternating + 2
    } else {
        alternating
    }
}

pub fn weight(alpha: Fraction) -> Result<i64> {
    if !alpha.is_finite() {
        return Err(Error::InfiniteInput);
    }
    if alpha.num() == 0 {
        return Err(Error::NonPositive(alpha));
    }
    Ok(weight_of_expansion(&cf_expand(alpha, TermParity::Any)?))
}

/// `-wr(α) - wt(α)`.
pub fn extended_weight(alpha: Fraction) -> Result<i64> {
    Ok(-writhe_principal(alpha)? - weight(alpha)?)
}

/// The frieze bracket `⟨Γ_α⟩`, built on the Farey tree from
/// `⟨Γ_{0/1}⟩ = ⟨Γ_{1/1}⟩ = 1` and
/// `⟨Γ_{β♯γ}⟩ = -A^4 ⟨Γ_β⟩ - A^-4 ⟨Γ_γ⟩`.
pub fn frieze_bracket(alpha: Fraction) -> Result<LaurentPoly> {
    let target = alpha.require_unit_interval()?;
    let one = LaurentPoly::one(Var::A);
    let (mut lo, mut lo_b) = (Fraction::ZERO, one.clone());
    let (mut hi, mut hi_b) = (Fraction::ONE, one);
    let left = LaurentPoly::monomial(Var::A, -1, 4);
    let right = LaurentPoly::monomial(Var::A, -1, -4);
    loop {
        let mid = farey_sum(lo, hi)?;
        let mid_b = &(&left * &lo_b) + &(&right * &hi_b);
        if mid == target {
            return Ok(mid_b);
        }
        if target < mid {
            (hi, hi_b) = (mid, mid_b);
        } else {
            (lo, lo_b) = (mid, mid_b);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum JonesOrientation {
    Principal,
    PlusMinus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JonesValue {
    pub alpha: Fraction,
    pub orientation: JonesOrientation,
    pub poly_a: LaurentPoly,
    pub poly_t: LaurentPoly,
}

impl JonesValue {
    fn new(alpha: Fraction, orientation: JonesOrientation, poly_a: LaurentPoly) -> Result<Self> {
        let poly_t = poly_a.to_t_half()?;
        Ok(JonesValue { alpha, orientation, poly_a, poly_t })
    }

    /// `t^(k/2)(...)` text with the given or default prefactor.
    pub fn pretty(&self, prefactor: Option<i64>) -> String {
        self.poly_t.pretty_t(prefactor)
    }
}

/// `(-A^3)^(-wr) ⟨D(T(α))⟩`, from the tangle skein recursion.
pub fn jones_from_link(alpha: Fraction) -> Result<LaurentPoly> {
    Ok(&LaurentPoly::neg_a_cubed_pow(-writhe_principal(alpha)?) * &bracket_of_denominator(alpha)?)
}

/// `(-A^3)^(wt~) ⟨Γ_α⟩`, from the frieze bracket.
pub fn jones_from_frieze(alpha: Fraction) -> Result<LaurentPoly> {
    Ok(&LaurentPoly::neg_a_cubed_pow(extended_weight(alpha)?) * &frieze_bracket(alpha)?)
}

/// `V(α)`, computed both from the link and from the frieze.
pub fn jones(alpha: Fraction) -> Result<JonesValue> {
    let link = jones_from_link(alpha)?;
    if link != jones_from_frieze(alpha)? {
        return Err(Error::PathMismatch(alpha));
    }
    JonesValue::new(alpha, JonesOrientation::Principal, link)
}

/// `V_{+-}(α) = conj V(i(α))`.
pub fn jones_plus_minus(alpha: Fraction) -> Result<JonesValue> {
    writhe_plus_minus(alpha)?;
    let mirror = jones(op_i(alpha)?)?;
    JonesValue::new(alpha, JonesOrientation::PlusMinus, mirror.poly_a.conjugate())
}

/// Which of the three shapes of the frieze Jones class applies, from the
/// denominator and the numerators `x/r`, `y/s` of the parents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum JonesCase {
    OddDenominator,
    EvenLeftNumerator,
    EvenRightNumerator,
}

impl JonesCase {
    pub fn of(alpha: Fraction) -> Result<JonesCase> {
        let a = alpha.require_unit_interval()?;
        if a.den() % 2 == 1 {
            return Ok(JonesCase::OddDenominator);
        }
        let (left, _) = parents(a)?;
        Ok(if left.num() % 2 == 0 { JonesCase::EvenLeftNumerator } else { JonesCase::EvenRightNumerator })
    }
}

/// The Jones polynomials identified with a frieze, as a sorted set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FriezeJonesClass {
    pub case: JonesCase,
    pub members: Vec<LaurentPoly>,
}

impl FriezeJonesClass {
    pub fn contains(&self, poly: &LaurentPoly) -> bool {
        self.members.binary_search(poly).is_ok()
    }

    /// Members in `t^(1/2)`.
    pub fn members_t(&self) -> Result<Vec<LaurentPoly>> {
        self.members.iter().map(|p| p.to_t_half()).collect()
    }
}

/// `{V, conj V}` for odd `q`; `{V, V(i)}` when `q` and `x` are even;
/// `{V, V(i), conj V(i), conj V}` when `q` and `y` are even.
pub fn frieze_jones(alpha: Fraction) -> Result<FriezeJonesClass> {
    frieze_jones_with(alpha, |b| Ok(jones(b)?.poly_a))
}

/// [`frieze_jones`] with `V` supplied by `v`, e.g. from a precomputed table.
pub fn frieze_jones_with(alpha: Fraction, v: impl Fn(Fraction) -> Result<LaurentPoly>) -> Result<FriezeJonesClass> {
    let case = JonesCase::of(alpha)?;
    let va = v(alpha)?;
    let mut members = match case {
        JonesCase::OddDenominator => vec![va.conjugate(), va],
        JonesCase::EvenLeftNumerator => vec![v(op_i(alpha)?)?, va],
        JonesCase::EvenRightNumerator => {
            let vi = v(op_i(alpha)?)?;
            vec![vi.conjugate(), vi, va.conjugate(), va]
        }
    };
    members.sort();
    members.dedup();
    Ok(FriezeJonesClass { case, members })
}

/// The class of a frieze, read off from its maximum `q` and the entry `p`
/// at the upper left of the first occurrence.
pub fn frieze_jones_of(f: &Frieze) -> Result<FriezeJonesClass> {
    let m = f.max_entry_with_neighbors();
    frieze_jones(Fraction::new(m.upper_left, m.max)?)
}

/// Numerator pattern around the maximum, as `[[ul, ur], [ll, lr]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NumeratorDisplay {
    pub max: u64,
    pub upper: [u64; 2],
    pub lower: [u64; 2],
}

impl From<MaxNeighborhood> for NumeratorDisplay {
    fn from(m: MaxNeighborhood) -> Self {
        NumeratorDisplay { max: m.max, upper: [m.upper_left, m.upper_right], lower: [m.lower_left, m.lower_right] }
    }
}

impl std::fmt::Display for NumeratorDisplay {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {} / {} / {} {}", self.upper[0], self.upper[1], self.max, self.lower[0], self.lower[1])
    }
}

/// The occurrence of the maximum of `Γ_α` whose upper-left neighbor is the
/// numerator of `α`.
pub fn numerator_display(alpha: Fraction) -> Result<NumeratorDisplay> {
    let f = frieze_of(alpha)?;
    let all = f.max_neighborhoods();
    let hit = all.iter().find(|m| m.upper_left == alpha.num()).unwrap_or(&all[0]);
    Ok(NumeratorDisplay::from(*hit))
}

/// The four pairs of knots whose Jones polynomials agree up to `t ↔ 1/t`,
/// with the reference numerator displays they are listed with.
pub const EXCEPTIONAL_PAIRS: [((u64, u64), (u64, u64)); 4] =
    [((29, 49), (36, 49)), ((19, 81), (37, 81)), ((32, 121), (43, 121)), ((64, 147), (104, 147))];

/// Reference displays `[ul, ur, ll, lr]`, in pair order.
pub const REFERENCE_DISPLAYS: [[[u64; 4]; 2]; 4] = [
    [[29, 22, 27, 20], [36, 15, 34, 13]],
    [[19, 64, 17, 62], [37, 46, 35, 44]],
    [[32, 87, 34, 89], [43, 76, 45, 78]],
    [[64, 85, 62, 83], [106, 43, 104, 41]],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberReport {
    pub alpha: Fraction,
    pub orbit: Orbit,
    pub jones: String,
    pub display: NumeratorDisplay,
    pub reference: [u64; 4],
    pub display_matches: bool,
    /// Set when the reference shows a different member of the same orbit;
    /// names the member it actually shows.
    pub reference_shows: Option<Fraction>,
    pub gap_pattern: bool,
    pub prime_divisibility: bool,
}

/// `V(α) = sign·t^(shift/2)·W` where `W` is `V(β)` or its conjugate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairRelation {
    pub conjugated: bool,
    pub sign: i64,
    pub shift: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub alpha: Fraction,
    pub beta: Fraction,
    /// How `V(α)` relates to `V(β)`; `None` if neither relation holds.
    pub relation: Option<PairRelation>,
    pub members: [MemberReport; 2],
}

impl PairReport {
    pub fn confirmed(&self) -> bool {
        self.relation.is_some()
            && self.members.iter().all(|m| m.gap_pattern && m.prime_divisibility)
            && self.members.iter().all(|m| m.display_matches || m.reference_shows.is_some())
    }

    pub fn flagged(&self) -> impl Iterator<Item = &MemberReport> {
        self.members.iter().filter(|m| !m.display_matches)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `V(α) = c·S^k·W` for a monomial `c·S^k`, in `t^(1/2)` units.
fn monomial_ratio(v: &LaurentPoly, w: &LaurentPoly) -> Option<(i64, i64)> {
    let (vl, wl) = (v.min_exp()?, w.min_exp()?);
    let shift = vl - wl;
    for sign in [1i64, -1] {
        if &w.shifted(shift, sign < 0) == v {
            return Some((sign, shift));
        }
    }
    None
}

fn member_report(alpha: Fraction, reference: [u64; 4]) -> Result<MemberReport> {
    let orbit = Orbit::of(alpha)?;
    let display = numerator_display(alpha)?;
    let shown = [display.upper[0], display.upper[1], display.lower[0], display.lower[1]];
    let display_matches = shown == reference;
    let reference_shows = if display_matches {
        None
    } else {
        orbit.as_array().into_iter().find(|&m| {
            m != alpha && numerator_display(m).map(|d| [d.upper[0], d.upper[1], d.lower[0], d.lower[1]] == reference).unwrap_or(false)
        })
    };
    let n = |f: Fraction| f.num() as i64;
    let gap = n(orbit.alpha) - n(orbit.ir);
    let gap_pattern = gap.abs() == 2 && n(orbit.r) - n(orbit.i) == gap;
    let diff = (n(orbit.alpha) - n(orbit.r)).unsigned_abs();
    let prime_divisibility = prime_factors(alpha.den()).iter().all(|p| diff % p == 0);
    Ok(MemberReport {
        alpha,
        orbit,
        jones: jones(alpha)?.pretty(None),
        display,
        reference,
        display_matches,
        reference_shows,
        gap_pattern,
        prime_divisibility,
    })
}

pub fn exceptional_pairs_report() -> Result<Vec<PairReport>> {
    EXCEPTIONAL_PAIRS
        .iter()
        .zip(REFERENCE_DISPLAYS)
        .map(|(&((p1, q1), (p2, q2)), refs)| {
            let (alpha, beta) = (Fraction::new(p1, q1)?, Fraction::new(p2, q2)?);
            let va = jones(alpha)?.poly_t;
            let vb = jones(beta)?.poly_t;
            let relation = [false, true].into_iter().find_map(|conjugated| {
                let w = if conjugated { vb.conjugate() } else { vb.clone() };
                monomial_ratio(&va, &w).map(|(sign, shift)| PairRelation { conjugated, sign, shift })
            });
            Ok(PairReport {
                alpha,
                beta,
                relation,
                members: [member_report(alpha, refs[0])?, member_report(beta, refs[1])?],
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: u64, q: u64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    fn cf(a: &[u64]) -> ContinuedFraction {
        ContinuedFraction::new(0, a.to_vec()).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight_of_expansion(&cf(&[4])), -2);
        assert_eq!(weight_of_expansion(&cf(&[3, 1])), -2);
        assert_eq!(weight_of_expansion(&cf(&[3, 3])), 0);
        assert_eq!(weight(fr(1, 4)).unwrap(), -2);
        assert_eq!(weight(fr(0, 1)), Err(Error::NonPositive(fr(0, 1))));
    }

    #[test]
    fn extended_weight_examples() {
        assert_eq!(extended_weight(fr(1, 4)).unwrap(), -2);
        assert_eq!(extended_weight(fr(3, 10)).unwrap(), -6);
        assert_eq!(extended_weight(fr(3, 8)).unwrap(), 1 - weight(fr(3, 8)).unwrap());
    }

    #[test]
    fn frieze_bracket_of_half_is_hopf() {
        let hopf = LaurentPoly::from_terms(Var::A, [(4, -1), (-4, -1)]);
        assert_eq!(frieze_bracket(fr(1, 2)).unwrap(), hopf);
    }

    #[test]
    fn worked_jones_values() {
        assert_eq!(jones(fr(1, 4)).unwrap().pretty(Some(3)), "t^(3/2)(-t^3 - t + 1 - t^-1)");
        // t^(9/2)(-t^-3 - t^-1 + 1 - t), exponents in t^(1/2) units
        let expected = LaurentPoly::from_terms(Var::S, [(3, -1), (7, -1), (9, 1), (11, -1)]);
        assert_eq!(jones(fr(3, 4)).unwrap().poly_t, expected);
        assert_eq!(
            jones(fr(3, 10)).unwrap().pretty(Some(9)),
            "t^(9/2)(-t^3 + t^2 - 2t + 2 - 2t^-1 + t^-2 - t^-3)"
        );
        assert_eq!(
            jones(fr(3, 14)).unwrap().pretty(Some(-3)),
            "t^(-3/2)(-t^5 + t^4 - 2t^3 + 2t^2 - 3t + 2 - 2t^-1 + t^-2)"
        );
    }

    #[test]
    fn plus_minus_is_conjugate_of_mirror() {
        let pm = jones_plus_minus(fr(1, 4)).unwrap();
        assert_eq!(pm.poly_a, jones(fr(3, 4)).unwrap().poly_a.conjugate());
        assert!(jones_plus_minus(fr(1, 3)).is_err());
    }

    #[test]
    fn classes_of_worked_examples() {
        let c = frieze_jones(fr(1, 4)).unwrap();
        assert_eq!(c.case, JonesCase::EvenLeftNumerator);
        assert!(c.contains(&jones(fr(1, 4)).unwrap().poly_a));
        assert!(c.contains(&jones(fr(3, 4)).unwrap().poly_a));
        let c = frieze_jones(fr(3, 10)).unwrap();
        assert_eq!(c.members.len(), 1);
        let c = frieze_jones(fr(3, 14)).unwrap();
        assert_eq!(c.case, JonesCase::EvenRightNumerator);
        assert_eq!(c.members.len(), 4);
    }

    #[test]
    fn class_from_frieze() {
        let f = frieze_of(fr(7, 17)).unwrap();
        assert_eq!(frieze_jones_of(&f).unwrap(), frieze_jones(fr(7, 17)).unwrap());
    }

    #[test]
    fn exceptional_pairs() {
        let report = exceptional_pairs_report().unwrap();
        let kinds: Vec<bool> = report.iter().map(|p| p.relation.unwrap().conjugated).collect();
        assert_eq!(kinds, [false, false, false, true]);
        assert!(report.iter().all(|p| p.confirmed()));
        let flagged: Vec<_> = report.iter().flat_map(|p| p.flagged()).collect();
        assert_eq!(flagged.len(), 1);
        assert_eq!(flagged[0].alpha, fr(104, 147));
        assert_eq!(flagged[0].reference_shows, Some(fr(106, 147)));
    }
}
