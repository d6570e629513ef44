use num_integer::Integer;
use proptest::prelude::*;

use ratlink::frieze::{frieze_from_word, friezes_equivalent};
use ratlink::jones::{jones, jones_from_frieze, jones_from_link};
use ratlink::laurent::{LaurentPoly, Var};
use ratlink::lr_words::{alpha_of, op_i, op_ir, op_r, word_of, LRWord, Letter};
use ratlink::rational::{cf_expand, farey_sum, parents, Fraction, TermParity};
use ratlink::schubert::{orbit_class, schubert_with_mirror};
use ratlink::writhe::{writhe_of_expansion, writhe_principal};

fn unit_fraction(max_q: u64) -> impl Strategy<Value = Fraction> {
    (2..=max_q)
        .prop_flat_map(|q| (1..q, Just(q)))
        .prop_filter("coprime", |(p, q)| p.gcd(q) == 1)
        .prop_map(|(p, q)| Fraction::new(p, q).unwrap())
}

fn poly(var: Var) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-12i64..12, -9i64..9), 0..8).prop_map(move |t| LaurentPoly::from_terms(var, t))
}

fn word(max_len: usize) -> impl Strategy<Value = LRWord> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len)
        .prop_map(|b| LRWord::new(b.into_iter().map(|r| if r { Letter::R } else { Letter::L }).collect()))
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(Var::A), b in poly(Var::A), c in poly(Var::A)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn conjugation_is_a_ring_map(a in poly(Var::A), b in poly(Var::A)) {
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
        prop_assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn t_half_round_trip(s in poly(Var::S)) {
        let a = s.from_t_half().unwrap();
        prop_assert_eq!(a.to_t_half().unwrap(), s);
    }

    #[test]
    fn expansions_evaluate_back(alpha in unit_fraction(5000)) {
        for parity in [TermParity::Even, TermParity::Odd, TermParity::Any] {
            let cf = cf_expand(alpha, parity).unwrap();
            prop_assert_eq!(cf.value(), alpha);
            prop_assert!(cf.terms().iter().all(|&t| t >= 1));
            match parity {
                TermParity::Even => prop_assert!(cf.n().is_multiple_of(2)),
                TermParity::Odd => prop_assert!(cf.n() % 2 == 1),
                TermParity::Any => {}
            }
        }
    }

    #[test]
    fn parents_are_farey_neighbors(alpha in unit_fraction(5000)) {
        let (l, r) = parents(alpha).unwrap();
        prop_assert!(l < alpha && alpha < r);
        prop_assert_eq!(farey_sum(l, r).unwrap(), alpha);
    }

    #[test]
    fn words_round_trip(alpha in unit_fraction(3000)) {
        prop_assert_eq!(alpha_of(&word_of(alpha).unwrap()), alpha);
    }

    #[test]
    fn involutions(alpha in unit_fraction(3000)) {
        let i = op_i(alpha).unwrap();
        let r = op_r(alpha).unwrap();
        prop_assert_eq!(op_i(i).unwrap(), alpha);
        prop_assert_eq!(op_r(r).unwrap(), alpha);
        prop_assert_eq!(op_ir(alpha).unwrap(), op_i(r).unwrap());
        prop_assert_eq!(op_ir(alpha).unwrap(), op_r(i).unwrap());
        let w = word_of(alpha).unwrap();
        prop_assert_eq!(word_of(i).unwrap(), w.swapped());
        prop_assert_eq!(word_of(r).unwrap(), w.reversed());
    }

    #[test]
    fn orbit_members_are_schubert_related(alpha in unit_fraction(3000)) {
        let class = orbit_class(alpha).unwrap();
        for beta in class.fractions() {
            prop_assert!(schubert_with_mirror(alpha, beta));
        }
    }

    #[test]
    fn writhe_ignores_expansion_parity(alpha in unit_fraction(2000)) {
        let even = writhe_of_expansion(&cf_expand(alpha, TermParity::Even).unwrap()).unwrap();
        let odd = writhe_of_expansion(&cf_expand(alpha, TermParity::Odd).unwrap()).unwrap();
        prop_assert_eq!(even, odd);
        prop_assert_eq!(even, writhe_principal(alpha).unwrap());
    }

    #[test]
    fn friezes_obey_diamond_rule(w in word(12)) {
        let f = frieze_from_word(&w).unwrap();
        prop_assert!(f.check().is_ok());
        prop_assert_eq!(f.max_entry_with_neighbors().max, alpha_of(&w).den());
    }

    #[test]
    fn frieze_forgets_reversal_and_swap(w in word(10)) {
        let f = frieze_from_word(&w).unwrap();
        prop_assert!(friezes_equivalent(&f, &frieze_from_word(&w.reversed()).unwrap()));
        prop_assert!(friezes_equivalent(&f, &frieze_from_word(&w.swapped()).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jones_routes_agree(alpha in unit_fraction(90)) {
        let v = jones(alpha).unwrap().poly_a;
        prop_assert_eq!(&jones_from_link(alpha).unwrap(), &v);
        prop_assert_eq!(&jones_from_frieze(alpha).unwrap(), &v);
    }
}
