//! LR words and the involutions `i`, `r`, `ir`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{cf_expand, farey_sum, parents, ContinuedFraction, Fraction, TermParity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct LRWord(Vec<Letter>);

impl LRWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        LRWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Swaps every L with R.
    pub fn swapped(&self) -> LRWord {
        LRWord(self.0.iter().map(|l| l.swapped()).collect())
    }

    pub fn reversed(&self) -> LRWord {
        LRWord(self.0.iter().rev().copied().collect())
    }

    /// Every word of length `len`, in lexicographic order with L < R.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = LRWord> {
        (0u64..1 << len).map(move |bits| {
            LRWord(
                (0..len)
                    .map(|k| {
                        if bits >> (len - 1 - k) & 1 == 0 {
                            Letter::L
                        } else {
                            Letter::R
                        }
                    })
                    .collect(),
            )
        })
    }
}

impl fmt::Display for LRWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for LRWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'L' => Ok(Letter::L),
                'R' => Ok(Letter::R),
                other => Err(Error::InvalidLetter(other)),
            })
            .collect::<Result<Vec<_>>>()
            .map(LRWord)
    }
}

impl From<LRWord> for String {
    fn from(w: LRWord) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for LRWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// `w(1/2)` is empty and `w(β ♯ γ)` is `L·w(γ)` when `den β < den γ`,
/// otherwise `R·w(β)`.
pub fn word_of(alpha: Fraction) -> Result<LRWord> {
    let mut alpha = alpha.require_unit_interval()?;
    let half = Fraction::new(1, 2)?;
    let mut letters = Vec::new();
    while alpha != half {
        let (left, right) = parents(alpha)?;
        if left.den() < right.den() {
            letters.push(Letter::L);
            alpha = right;
        } else {
            letters.push(Letter::R);
            alpha = left;
        }
    }
    Ok(LRWord(letters))
}

/// Descends the Stern-Brocot tree from 1/2, reading the word right to left.
pub fn alpha_of(word: &LRWord) -> Fraction {
    let (mut lo, mut hi) = (Fraction::ZERO, Fraction::ONE);
    let mut node = Fraction::new(1, 2).expect("1/2");
    for letter in word.letters().iter().rev() {
        match letter {
            Letter::L => hi = node,
            Letter::R => lo = node,
        }
        node = farey_sum(lo, hi).expect("Stern-Brocot bounds are neighbors");
    }
    node
}

/// `i(p/q) = (q - p)/q`.
pub fn op_i(alpha: Fraction) -> Result<Fraction> {
    let a = alpha.require_unit_interval()?;
    Fraction::new(a.den() - a.num(), a.den())
}

/// `r(α) = r/q` where `x/r` is the left parent; on words this reverses.
pub fn op_r(alpha: Fraction) -> Result<Fraction> {
    let a = alpha.require_unit_interval()?;
    let (left, _) = parents(a)?;
    Fraction::new(left.den(), a.den())
}

/// `(ir)(α) = s/q` where `y/s` is the right parent.
pub fn op_ir(alpha: Fraction) -> Result<Fraction> {
    let a = alpha.require_unit_interval()?;
    let (_, right) = parents(a)?;
    Fraction::new(right.den(), a.den())
}

/// `α` together with its three images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub alpha: Fraction,
    pub i: Fraction,
    pub r: Fraction,
    pub ir: Fraction,
}

impl Orbit {
    pub fn of(alpha: Fraction) -> Result<Orbit> {
        Ok(Orbit {
            alpha,
            i: op_i(alpha)?,
            r: op_r(alpha)?,
            ir: op_ir(alpha)?,
        })
    }

    /// `[α, i(α), r(α), (ir)(α)]`.
    pub fn as_array(&self) -> [Fraction; 4] {
        [self.alpha, self.i, self.r, self.ir]
    }

    /// The distinct members, sorted.
    pub fn members(&self) -> Vec<Fraction> {
        let mut m = self.as_array().to_vec();
        m.sort();
        m.dedup();
        m
    }

    /// The member with the smallest numerator, ties broken by the smallest
    /// numerator of its `i`-image.
    pub fn canonical(&self) -> Fraction {
        *self
            .as_array()
            .iter()
            .min_by(|a, b| match a.num().cmp(&b.num()) {
                Ordering::Equal => (a.den() - a.num()).cmp(&(b.den() - b.num())),
                other => other,
            })
            .expect("four members")
    }
}

/// Closed-form expansions of the images of `α`: `i(α)` from the Euclidean
/// expansion, `r(α)` and `(ir)(α)` from the even-length expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageExpansions {
    pub i: ContinuedFraction,
    pub r: ContinuedFraction,
    pub ir: ContinuedFraction,
}

pub fn cf_of_images(alpha: Fraction) -> Result<ImageExpansions> {
    let a = alpha.require_unit_interval()?;
    let euclid = cf_expand(a, TermParity::Any)?;
    let e = euclid.terms();
    let mut i_terms = vec![1, e[0] - 1];
    i_terms.extend_from_slice(&e[1..]);

    let cf = cf_expand(a, TermParity::Even)?;
    let t = cf.terms();
    let n = t.len();

    let mut r_terms = vec![1, t[n - 1] - 1];
    r_terms.extend(t[..n - 1].iter().rev());

    let ir_terms: Vec<u64> = t.iter().rev().copied().collect();

    Ok(ImageExpansions {
        i: ContinuedFraction::from_loose(0, &i_terms)?,
        r: ContinuedFraction::from_loose(0, &r_terms)?,
        ir: ContinuedFraction::from_loose(0, &ir_terms)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: u64, q: u64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    fn w(s: &str) -> LRWord {
        s.parse().unwrap()
    }

    #[test]
    fn word_examples() {
        assert_eq!(word_of(fr(1, 3)).unwrap(), w("L"));
        assert_eq!(word_of(fr(3, 4)).unwrap(), w("RR"));
        assert_eq!(word_of(fr(1, 2)).unwrap(), w(""));
        assert_eq!(word_of(fr(7, 17)).unwrap(), w("LLRRL"));
        assert_eq!(word_of(fr(1, 1)), Err(Error::OutOfRange(fr(1, 1))));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_of(&w("L")), fr(1, 3));
        assert_eq!(alpha_of(&w("LL")), fr(1, 4));
        assert_eq!(alpha_of(&w("")), fr(1, 2));
        assert_eq!(alpha_of(&w("LLRRL")), fr(7, 17));
    }

    #[test]
    fn parse_rejects_other_letters() {
        assert_eq!("LXR".parse::<LRWord>(), Err(Error::InvalidLetter('X')));
    }

    #[test]
    fn involution_examples() {
        let o = Orbit::of(fr(3, 14)).unwrap();
        assert_eq!((o.i, o.r, o.ir), (fr(11, 14), fr(5, 14), fr(9, 14)));
        let o = Orbit::of(fr(1, 4)).unwrap();
        assert_eq!((o.i, o.r, o.ir), (fr(3, 4), fr(1, 4), fr(3, 4)));
        let o = Orbit::of(fr(3, 10)).unwrap();
        assert_eq!((o.i, o.r, o.ir), (fr(7, 10), fr(7, 10), fr(3, 10)));
        let o = Orbit::of(fr(7, 17)).unwrap();
        assert_eq!(o.i, fr(10, 17));
        assert_eq!(o.members(), vec![fr(5, 17), fr(7, 17), fr(10, 17), fr(12, 17)]);
    }

    #[test]
    fn seven_seventeenths_words() {
        // r reverses the word and ir reverses and swaps it
        let word = word_of(fr(7, 17)).unwrap();
        assert_eq!(word_of(op_r(fr(7, 17)).unwrap()).unwrap(), word.reversed());
        assert_eq!(word_of(op_ir(fr(7, 17)).unwrap()).unwrap(), word.reversed().swapped());
        assert_eq!(op_r(fr(7, 17)).unwrap(), fr(5, 17));
        assert_eq!(op_ir(fr(7, 17)).unwrap(), fr(12, 17));
    }

    #[test]
    fn half_is_fixed() {
        let o = Orbit::of(fr(1, 2)).unwrap();
        assert_eq!(o.members(), vec![fr(1, 2)]);
        assert_eq!(o.canonical(), fr(1, 2));
    }

    #[test]
    fn canonical_representative() {
        assert_eq!(Orbit::of(fr(12, 17)).unwrap().canonical(), fr(5, 17));
        assert_eq!(Orbit::of(fr(7, 10)).unwrap().canonical(), fr(3, 10));
    }

    #[test]
    fn image_expansion_examples() {
        let cf = |a: &[u64]| ContinuedFraction::new(0, a.to_vec()).unwrap();
        assert_eq!(cf_of_images(fr(1, 4)).unwrap().i, cf(&[1, 3]));
        assert_eq!(cf_of_images(fr(3, 10)).unwrap().i, cf(&[1, 2, 3]));
        assert_eq!(cf_of_images(fr(3, 14)).unwrap().i, cf(&[1, 3, 1, 2]));
        let imgs = cf_of_images(fr(3, 14)).unwrap();
        assert_eq!(imgs.r.value(), fr(5, 14));
        assert_eq!(imgs.ir.value(), fr(9, 14));
    }

    #[test]
    fn all_words_of_length() {
        let words: Vec<String> = LRWord::all_of_length(2).map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["LL", "LR", "RL", "RR"]);
        assert_eq!(LRWord::all_of_length(0).count(), 1);
    }
}
