//! The stabilizers themselves: solution spaces of defect equations inside
//! the free Lie algebras.

use std::hash::Hash;

use crate::derivations::{s_y, Sigma};
use crate::error::Result;
use crate::freelie::{lie_basis, SubspaceBasis};
use crate::hopf::{coproduct, Tensor2};
use crate::ncpoly::{require, NCPoly};
use crate::qlinalg::{canonical_basis, combine, kernel_of_entries};
use crate::rational::Rat;
use crate::word::{words_up_to_weight, Alphabet, Word};
use crate::wordmaps::{require_b0_free, tau};

/// `Δ_Y(s^Y_ψ(u)) − (s^Y_ψ ⊗ id + id ⊗ s^Y_ψ)(Δ_Y(u))`.
pub fn coderivation_defect(psi: &NCPoly, u: &NCPoly) -> Result<Tensor2> {
    require(psi, Alphabet::X, "coderivation_defect")?;
    require(u, Alphabet::Y, "coderivation_defect")?;
    let y = Alphabet::Y;
    let s = |w: &Word| s_y(psi, &NCPoly::word(y, w.clone())).expect("Y word");
    let id = |w: &Word| NCPoly::word(y, w.clone());
    let du = coproduct(u);
    let rhs = &du.map(y, s, id) + &du.map(y, id, s);
    Ok(&coproduct(&s_y(psi, u)?) - &rhs)
}

/// `σ⁰_ψ(τ(u)) − τ(σ⁰_ψ(u))`.
pub fn tau_defect(psi: &NCPoly, u: &NCPoly) -> Result<NCPoly> {
    require(psi, Alphabet::B, "tau_defect")?;
    require_b0_free(u, "tau_defect")?;
    let sg = Sigma::new(psi)?;
    Ok(&sg.apply0(&tau(u)?)? - &tau(&sg.apply0(u)?)?)
}

pub fn default_delta_cap(m: u32) -> u32 {
    m + 2
}

pub fn default_tau_cap(m: u32) -> u32 {
    m + 3
}

/// The `u` tested by the `Δ_Y` solver: `1, y1, …, y_cap`.
pub fn delta_check_set(cap: u32) -> Vec<NCPoly> {
    let y = Alphabet::Y;
    std::iter::once(NCPoly::one(y))
        .chain((1..=cap).map(|k| NCPoly::letter(y, k as u8)))
        .collect()
}

/// The `u` tested by the `τ` solver: the empty word and every word of
/// weight `≤ cap` not ending in `b0`, in canonical order.
pub fn tau_check_set(cap: u32) -> Vec<Word> {
    words_up_to_weight(Alphabet::B, cap)
        .into_iter()
        .filter(|w| w.last() != Some(0))
        .collect()
}

/// Kernel of `ψ ↦ (defect(ψ, c))_c` inside `span(start)`, refined one check
/// at a time so that later checks run only on the surviving subspace.
fn refine<C, P, K>(
    alphabet: Alphabet,
    start: Vec<NCPoly>,
    checks: &[C],
    prepare: impl Fn(&NCPoly) -> P,
    defect: impl Fn(&P, &C) -> Vec<(K, Rat)>,
) -> Vec<NCPoly>
where
    K: Hash + Eq,
{
    let mut cur = start;
    let mut prepared: Vec<P> = cur.iter().map(&prepare).collect();
    for c in checks {
        if cur.is_empty() {
            break;
        }
        let images: Vec<Vec<(K, Rat)>> = prepared.iter().map(|p| defect(p, c)).collect();
        if images.iter().all(|v| v.is_empty()) {
            continue;
        }
        let ker = kernel_of_entries(
            cur.len(),
            images
                .into_iter()
                .enumerate()
                .flat_map(|(j, v)| v.into_iter().map(move |(k, x)| (k, j, x))),
        );
        cur = ker.iter().map(|v| combine(alphabet, &cur, v)).collect();
        prepared = cur.iter().map(&prepare).collect();
    }
    canonical_basis(alphabet, &cur)
}

/// `stab_{Lie(X)}(Δ_Y)[m,n]`, tested on `1, y1, …, y_cap`.
pub fn stab_delta_y_basis(m: u32, n: u32, cap: u32) -> SubspaceBasis {
    let lie = lie_basis(Alphabet::X, m, n);
    let checks = delta_check_set(cap);
    let elements = refine(
        Alphabet::X,
        lie.elements,
        &checks,
        |psi| psi.clone(),
        |psi, u| {
            coderivation_defect(psi, u)
                .expect("X and Y inputs")
                .terms()
                .map(|(a, b, c)| ((a.clone(), b.clone()), c.clone()))
                .collect()
        },
    );
    SubspaceBasis::new("stabx", Alphabet::X, lie.bidegree, elements)
}

/// `stab_{Lie(B)}(τ)[m,n]`, tested on every word of [`tau_check_set`].
pub fn stab_tau_basis(m: u32, n: u32, cap: u32) -> SubspaceBasis {
    let lie = lie_basis(Alphabet::B, m, n);
    let b = Alphabet::B;
    let checks: Vec<(NCPoly, NCPoly)> = tau_check_set(cap)
        .into_iter()
        .map(|w| {
            let u = NCPoly::word(b, w);
            let tu = tau(&u).expect("no trailing b0");
            (u, tu)
        })
        .collect();
    let elements = refine(
        b,
        lie.elements,
        &checks,
        |psi| Sigma::new(psi).expect("B input"),
        |sg, (u, tu)| {
            let lhs = sg.apply0(tu).expect("no trailing b0");
            let rhs = tau(&sg.apply0(u).expect("no trailing b0")).expect("pi0 output");
            (&lhs - &rhs)
                .terms()
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect()
        },
    );
    SubspaceBasis::new("stabb", b, lie.bidegree, elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::ad_power;
    use crate::parse::parse_poly;
    use crate::stabilizers::spaces::{lq_basis, lq_plus_b0, ls_basis, ls_plus_weight_one};
    use crate::wordmaps::proj_pi0;

    fn p(s: &str) -> NCPoly {
        parse_poly(s, None).unwrap()
    }

    fn adx(m: usize) -> NCPoly {
        ad_power(&p("x0"), m - 1, &p("x1"))
    }

    #[test]
    fn coderivation_defect_examples() {
        for k in 1..=6u8 {
            let u = NCPoly::letter(Alphabet::Y, k);
            assert!(coderivation_defect(&p("x0"), &u).unwrap().is_zero());
        }
        let psi = adx(3);
        for u in ["y2", "y1 y2", "1"] {
            let u = parse_poly(u, Some(Alphabet::Y)).unwrap();
            assert!(coderivation_defect(&psi, &u).unwrap().is_zero());
        }
        assert!(!coderivation_defect(&adx(2), &p("y2")).unwrap().is_zero());
        assert!(coderivation_defect(&p("y1"), &p("y1")).is_err());
    }

    #[test]
    fn tau_defect_examples() {
        for w in tau_check_set(4) {
            let u = NCPoly::word(Alphabet::B, w);
            assert!(tau_defect(&p("b0"), &u).unwrap().is_zero());
        }
        let psi = p("[b1, b2]");
        let one = NCPoly::one(Alphabet::B);
        let p0 = proj_pi0(&psi).unwrap();
        assert_eq!(tau_defect(&psi, &one).unwrap(), &p0 - &tau(&p0).unwrap());
        assert!(tau_defect(&psi, &p("b1 b0")).is_err());
    }

    #[test]
    fn stab_delta_y_small_components() {
        let b = stab_delta_y_basis(1, 0, 3);
        assert_eq!(b.elements, vec![p("x0")]);
        assert_eq!(stab_delta_y_basis(1, 1, 3).elements, vec![p("x1")]);
        for m in [2u32, 4, 6] {
            assert!(stab_delta_y_basis(m, 1, m + 2).is_zero(), "m={m}");
        }
        let b = stab_delta_y_basis(3, 1, 5);
        assert_eq!(b.dim(), 1);
        assert!(b.contains(&adx(3)));
    }

    #[test]
    fn stab_delta_y_matches_ls_at_small_weight() {
        for m in 1..=6 {
            for n in 0..=m {
                let s = stab_delta_y_basis(m, n, default_delta_cap(m));
                let l = ls_plus_weight_one(m, n);
                assert!(s.contains_span(&l), "({m},{n})");
                assert!(s.span_equal(&l), "({m},{n})");
            }
        }
        // ls itself lies in the stabilizer
        for e in ls_basis(5, 2).elements {
            for k in 1..=5u8 {
                assert!(coderivation_defect(&e, &NCPoly::letter(Alphabet::Y, k))
                    .unwrap()
                    .is_zero());
            }
        }
    }

    #[test]
    fn stab_tau_small_components() {
        assert_eq!(stab_tau_basis(1, 0, 4).elements, vec![p("b0")]);
        for m in [2u32, 4] {
            assert!(stab_tau_basis(m, 1, m + 3).is_zero(), "m={m}");
        }
        let s = stab_tau_basis(3, 1, 6);
        assert!(s.span_equal(&lq_basis(3, 1)));
        assert!(!s.is_zero());
    }

    #[test]
    fn stab_tau_matches_lq_at_small_weight() {
        for m in 1..=4 {
            for n in 0..=m {
                let s = stab_tau_basis(m, n, default_tau_cap(m));
                let l = lq_plus_b0(m, n);
                assert!(s.contains_span(&l), "({m},{n})");
                assert!(s.span_equal(&l), "({m},{n})");
            }
        }
    }

    #[test]
    fn check_sets() {
        assert_eq!(delta_check_set(2).len(), 3);
        let t = tau_check_set(3);
        assert_eq!(t[0], Word::empty());
        assert!(t.iter().all(|w| w.last() != Some(0)));
        // 1 + (1 + 3 + 8) words ending in a positive letter
        assert_eq!(t.len(), 13);
    }
}
