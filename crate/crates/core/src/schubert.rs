//! Unoriented classification of rational links by numerator congruences,
//! and the same partition read off from the orbits of `i`, `r`, `ir`.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lr_words::Orbit;
use crate::rational::Fraction;

/// Numerators `p` of one denominator `q` whose links agree up to isotopy
/// and mirror image.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LinkClass {
    pub q: u64,
    pub members: Vec<u64>,
}

impl LinkClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.members.binary_search(&p).is_ok()
    }

    /// The orbit's canonical member.
    pub fn canonical(&self) -> Fraction {
        let alpha = Fraction::new(self.members[0], self.q).expect("members are coprime to q");
        Orbit::of(alpha).expect("members lie in (0, 1)").canonical()
    }

    pub fn fractions(&self) -> impl Iterator<Item = Fraction> + '_ {
        self.members.iter().map(move |&p| Fraction::new(p, self.q).expect("members are coprime to q"))
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `q = q'` and `pp' ≡ 1` or `p ≡ p'` mod `q`.
pub fn schubert_equivalent_unoriented(alpha: Fraction, beta: Fraction) -> bool {
    let q = alpha.den();
    if q == 0 || q != beta.den() {
        return false;
    }
    let (p, p2) = (alpha.num(), beta.num());
    mul_mod(p, p2, q) == 1 % q || p % q == p2 % q
}

/// `q = q'` and `pp' ≡ -1` or `p' ≡ -p` mod `q`: `β` is equivalent to the
/// mirror of `α`.
pub fn mirror_related(alpha: Fraction, beta: Fraction) -> bool {
    let q = alpha.den();
    if q == 0 || q != beta.den() {
        return false;
    }
    let (p, p2) = (alpha.num() % q, beta.num() % q);
    (mul_mod(p, p2, q) + 1) % q == 0 || (p + p2) % q == 0
}

/// Equivalent up to mirror image by Schubert's criterion.
pub fn schubert_with_mirror(alpha: Fraction, beta: Fraction) -> bool {
    schubert_equivalent_unoriented(alpha, beta) || mirror_related(alpha, beta)
}

/// Partial oriented check: `pp' ≡ 1 (mod 2q)` witnesses an orientation
/// preserving isotopy. A `false` answer decides nothing.
pub fn oriented_witness(alpha: Fraction, beta: Fraction) -> bool {
    let q = alpha.den();
    q != 0 && q == beta.den() && mul_mod(alpha.num(), beta.num(), 2 * q) == 1
}

/// Numerators of `{α, i(α), r(α), (ir)(α)}`.
pub fn orbit_class(alpha: Fraction) -> Result<LinkClass> {
    let a = alpha.require_unit_interval()?;
    let members = Orbit::of(a)?.members().into_iter().map(Fraction::num).collect();
    Ok(LinkClass { q: a.den(), members })
}

fn coprime_numerators(q: u64) -> impl Iterator<Item = u64> {
    (1..q).filter(move |p| p.gcd(&q) == 1)
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidQ(q));
    }
    Ok(())
}

/// Orbit partition of the numerators coprime to `q`.
pub fn orbit_partition(q: u64) -> Result<Vec<LinkClass>> {
    check_q(q)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in coprime_numerators(q) {
        if seen.contains(&p) {
            continue;
        }
        let class = orbit_class(Fraction::new(p, q)?)?;
        seen.extend(class.members.iter().copied());
        out.push(class);
    }
    Ok(out)
}

/// Partition by pairwise comparison with [`schubert_with_mirror`].
pub fn schubert_partition(q: u64) -> Result<Vec<LinkClass>> {
    check_q(q)?;
    let all: Vec<Fraction> = coprime_numerators(q).map(|p| Fraction::new(p, q)).collect::<Result<_>>()?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &a in &all {
        if seen.contains(&a.num()) {
            continue;
        }
        let members: Vec<u64> = all.iter().filter(|&&b| schubert_with_mirror(a, b)).map(|b| b.num()).collect();
        seen.extend(members.iter().copied());
        out.push(LinkClass { q, members });
    }
    Ok(out)
}

/// The classes of denominator `q`, in order of smallest member.
pub fn classify_denominator(q: u64) -> Result<Vec<LinkClass>> {
    orbit_partition(q)
}

/// `q,members,size,canonical` with members space separated.
pub fn classes_to_csv(classes: &[LinkClass]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["q", "members", "size", "canonical"]).map_err(csv_err)?;
    for c in classes {
        let members: Vec<String> = c.members.iter().map(u64::to_string).collect();
        w.write_record([c.q.to_string(), members.join(" "), c.size().to_string(), c.canonical().to_string()])
            .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Internal(e.to_string())
}
