//! Randomized ring identities for the exact-arithmetic types.

use exact_algebra::{HalfPowerLaurent, OrbitPolynomial};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = HalfPowerLaurent> {
    prop::collection::vec((-6i64..6, -5i64..5), 0..5).prop_map(HalfPowerLaurent::from_terms)
}

fn nonzero_laurent() -> impl Strategy<Value = HalfPowerLaurent> {
    laurent().prop_filter("nonzero", |f| !f.is_zero())
}

fn orbit() -> impl Strategy<Value = OrbitPolynomial> {
    prop::collection::vec((prop::collection::vec(-2i64..3, 3), laurent()), 0..4).prop_map(OrbitPolynomial::from_terms)
}

fn nonzero_orbit() -> impl Strategy<Value = OrbitPolynomial> {
    orbit().prop_filter("nonzero", |f| !f.is_zero())
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn residue_is_multiplicative(a in laurent(), b in laurent()) {
        let prod = &a * &b;
        prop_assert_eq!(prod.residue_at(1).unwrap(), a.residue_at(1).unwrap() * b.residue_at(1).unwrap());
        let (ae, be) = (a.map_even(), b.map_even());
        let prod = &ae * &be;
        prop_assert_eq!(prod.residue_at(-1).unwrap(), ae.residue_at(-1).unwrap() * be.residue_at(-1).unwrap());
    }

    #[test]
    fn laurent_division_round_trip(a in laurent(), b in nonzero_laurent()) {
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn group_algebra_division_round_trip(a in orbit(), b in nonzero_orbit()) {
        prop_assert_eq!((&a * &b).exact_divide(&b).unwrap(), a);
    }
}

/// Helper: doubles every half-exponent so the element lies in `Z[q^{±1}]`.
trait MapEven {
    fn map_even(&self) -> HalfPowerLaurent;
}

impl MapEven for HalfPowerLaurent {
    fn map_even(&self) -> HalfPowerLaurent {
        HalfPowerLaurent::from_terms(self.terms().map(|(h, c)| (2 * h, c.clone())))
    }
}
