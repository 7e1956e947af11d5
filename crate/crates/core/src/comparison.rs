//! The maps θ from the X/Y side into the B-word algebra.

use crate::error::{Error, Result};
use crate::ncpoly::{require, NCPoly};
use crate::rational::Rat;
use crate::word::{Alphabet, Word};
use crate::wordmaps::proj_piy;

/// `θ_X`: `x_i ↦ b_i`.
pub fn theta_x(p: &NCPoly) -> Result<NCPoly> {
    require(p, Alphabet::X, "theta_X")?;
    Ok(p.map_words(Alphabet::B, |w| Some((w.clone(), Rat::ONE))))
}

/// `θ_Y`: the antimorphism `y_n ↦ b_n`.
pub fn theta_y(p: &NCPoly) -> Result<NCPoly> {
    require(p, Alphabet::Y, "theta_Y")?;
    Ok(p.map_words(Alphabet::B, |w| Some((w.reversed(), Rat::ONE))))
}

/// `θ(ψ) = θ_X(ψ) + θ_Y(π_Y(ψ))`.
pub fn theta(psi: &NCPoly) -> Result<NCPoly> {
    Ok(&theta_x(psi)? + &theta_y(&proj_piy(psi)?)?)
}

/// `θ^(1)(ψ ⊕ λ x1) = θ(ψ) + λ b1`.
pub fn theta_1(psi: &NCPoly, lambda: &Rat) -> Result<NCPoly> {
    Ok(&theta(psi)? + &NCPoly::monomial(Alphabet::B, Word::letter(1), lambda.clone()))
}

/// `θ^(10)(ψ ⊕ λ1 x1 ⊕ λ0 x0) = θ(ψ) + λ1 b1 + λ0 b0`.
pub fn theta_10(psi: &NCPoly, lambda1: &Rat, lambda0: &Rat) -> Result<NCPoly> {
    let mut out = theta_1(psi, lambda1)?;
    out.add_term(Word::letter(0), lambda0.clone());
    Ok(out)
}

/// Splits `p` into `(ψ, λ1, λ0)` with `p = ψ + λ1 x1 + λ0 x0` and `ψ`
/// free of weight-one terms. Constant terms are rejected.
pub fn split_weight_one(p: &NCPoly) -> Result<(NCPoly, Rat, Rat)> {
    require(p, Alphabet::X, "theta_10")?;
    if !p.constant_term().is_zero() {
        return Err(Error::Domain(
            "theta_10 is defined on elements without constant term".into(),
        ));
    }
    let l1 = p.coeff(&Word::letter(1));
    let l0 = p.coeff(&Word::letter(0));
    let psi = p.filter_words(|w| w.len() >= 2);
    Ok((psi, l1, l0))
}

/// `θ^(10)` applied to an element given as a single polynomial.
pub fn theta_10_of(p: &NCPoly) -> Result<NCPoly> {
    let (psi, l1, l0) = split_weight_one(p)?;
    theta_10(&psi, &l1, &l0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::ad_power;
    use crate::parse::parse_poly;
    use crate::wordmaps::{proj_pi0, tau};
    use proptest::prelude::*;

    fn p(s: &str) -> NCPoly {
        parse_poly(s, None).unwrap()
    }

    #[test]
    fn theta_x_examples() {
        assert_eq!(theta_x(&p("x0 x1")).unwrap(), p("b0 b1"));
        assert_eq!(theta_x(&p("[x0, x1]")).unwrap(), p("[b0, b1]"));
        let one = NCPoly::one(Alphabet::X);
        assert_eq!(theta_x(&one).unwrap(), NCPoly::one(Alphabet::B));
        assert!(theta_x(&p("y1")).is_err());
    }

    #[test]
    fn theta_y_examples() {
        assert_eq!(theta_y(&p("y1 y3")).unwrap(), p("b3 b1"));
        assert_eq!(theta_y(&p("y2")).unwrap(), p("b2"));
        assert!(theta_y(&p("x1")).is_err());
    }

    #[test]
    fn theta_examples() {
        let a = ad_power(&p("x0"), 2, &p("x1"));
        let t = theta(&a).unwrap();
        assert_eq!(t, &ad_power(&p("b0"), 2, &p("b1")) + &p("b3"));
        let t0 = proj_pi0(&t).unwrap();
        assert_eq!(t0, p("b0 b0 b1 + b3"));
        assert_eq!(tau(&t0).unwrap(), t0);
        assert_eq!(theta_10_of(&p("x0")).unwrap(), p("b0"));
        assert_eq!(
            theta_1(&NCPoly::zero(Alphabet::X), &Rat::ONE).unwrap(),
            p("b1")
        );
        assert_eq!(theta_10_of(&p("x1")).unwrap(), p("b1"));
        assert!(theta_10_of(&(&p("x1") + &NCPoly::one(Alphabet::X))).is_err());
    }

    proptest! {
        #[test]
        fn theta_y_is_an_antimorphism(
            u in proptest::collection::vec(1u8..=4, 0..4),
            v in proptest::collection::vec(1u8..=4, 0..4),
        ) {
            let y = Alphabet::Y;
            let (pu, pv) = (NCPoly::from_letters(y, &u), NCPoly::from_letters(y, &v));
            let lhs = theta_y(&(&pu * &pv)).unwrap();
            let rhs = &theta_y(&pv).unwrap() * &theta_y(&pu).unwrap();
            prop_assert!(lhs.words().all(|w| w.last() != Some(0)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn theta_x_is_a_morphism(
            u in proptest::collection::vec(0u8..=1, 0..5),
            v in proptest::collection::vec(0u8..=1, 0..5),
        ) {
            let x = Alphabet::X;
            let (pu, pv) = (NCPoly::from_letters(x, &u), NCPoly::from_letters(x, &v));
            let lhs = theta_x(&(&pu * &pv)).unwrap();
            let rhs = &theta_x(&pu).unwrap() * &theta_x(&pv).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
