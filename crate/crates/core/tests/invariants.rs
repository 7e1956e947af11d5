//! Randomized invariants through the public API: random rational
//! combinations of basis elements.

use proptest::prelude::*;

use dsl_core::brackets::{ari, ihara};
use dsl_core::comparison::theta_10_of;
use dsl_core::freelie::{is_lie, lie_basis};
use dsl_core::stabilizers::{coderivation_defect, in_lq, in_ls, lq_basis, ls_basis, tau_defect};
use dsl_core::{Alphabet, NCPoly, Rat};

fn combo(basis: &[NCPoly], alphabet: Alphabet, coeffs: &[(i64, i64)]) -> NCPoly {
    let mut p = NCPoly::zero(alphabet);
    for (e, &(a, b)) in basis.iter().zip(coeffs) {
        p += &e.scale(&Rat::new(a, b));
    }
    p
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-5i64..=5, 1i64..=4), 8)
}

fn lie_x(m: u32, c: &[(i64, i64)]) -> NCPoly {
    let mut all = Vec::new();
    for n in 0..=m {
        all.extend(lie_basis(Alphabet::X, m, n).elements);
    }
    combo(&all, Alphabet::X, c)
}

fn lie_b(m: u32, c: &[(i64, i64)]) -> NCPoly {
    let mut all = Vec::new();
    for n in 0..=m {
        all.extend(lie_basis(Alphabet::B, m, n).elements);
    }
    combo(&all, Alphabet::B, c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn ihara_is_antisymmetric_and_lie(m1 in 1u32..=4, m2 in 1u32..=4, c1 in coeffs(), c2 in coeffs()) {
        let (a, b) = (lie_x(m1, &c1), lie_x(m2, &c2));
        let ab = ihara(&a, &b).unwrap();
        prop_assert_eq!(&ab, &-&ihara(&b, &a).unwrap());
        prop_assert!(is_lie(&ab));
    }

    #[test]
    fn ari_is_antisymmetric_and_lie(m1 in 1u32..=3, m2 in 1u32..=3, c1 in coeffs(), c2 in coeffs()) {
        let (a, b) = (lie_b(m1, &c1), lie_b(m2, &c2));
        let ab = ari(&a, &b).unwrap();
        prop_assert_eq!(&ab, &-&ari(&b, &a).unwrap());
        prop_assert!(is_lie(&ab));
    }

    #[test]
    fn ls_combinations_stay_in_ls(m in 3u32..=8, c in coeffs()) {
        let mut all = Vec::new();
        for n in 1..=m {
            all.extend(ls_basis(m, n).elements);
        }
        let psi = combo(&all, Alphabet::X, &c);
        prop_assert!(in_ls(&psi));
        for k in 1..=4u8 {
            prop_assert!(coderivation_defect(&psi, &NCPoly::letter(Alphabet::Y, k)).unwrap().is_zero());
        }
        let t = theta_10_of(&psi).unwrap();
        prop_assert!(in_lq(&t));
    }

    #[test]
    fn lq_combinations_commute_with_tau(m in 1u32..=5, c in coeffs()) {
        let mut all = Vec::new();
        for n in 1..=m {
            all.extend(lq_basis(m, n).elements);
        }
        let psi = combo(&all, Alphabet::B, &c);
        prop_assert!(in_lq(&psi));
        for u in ["1", "b1", "b2", "b0 b1", "b1 b1"] {
            let u = dsl_core::parse_poly(u, Some(Alphabet::B)).unwrap();
            prop_assert!(tau_defect(&psi, &u).unwrap().is_zero());
        }
    }
}
